use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{basis, Form, ProjPoint, Rat, RatMatrix};
use crate::chow::{chern_line_sum, chow_inv, chow_mul, ChernData, ChowClass};
use crate::error::{Error, Result};

/// A matrix of forms. Entry `(i, j)` maps the `j`-th source summand to the
/// `i`-th target summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    rows: usize,
    cols: usize,
    num_vars: usize,
    entries: Vec<Form>,
}

impl FormMatrix {
    pub fn zeros(rows: usize, cols: usize, num_vars: usize) -> Self {
        FormMatrix {
            rows,
            cols,
            num_vars,
            entries: vec![Form::zero(num_vars, 0); rows * cols],
        }
    }

    pub fn from_rows(num_vars: usize, rows: Vec<Vec<Form>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::MatrixShape("ragged form matrix".into()));
        }
        let entries: Vec<Form> = rows.into_iter().flatten().collect();
        if let Some(f) = entries.iter().find(|f| f.num_vars() != num_vars) {
            return Err(Error::MismatchedVars {
                left: num_vars,
                right: f.num_vars(),
            });
        }
        Ok(FormMatrix {
            rows: r,
            cols: c,
            num_vars,
            entries,
        })
    }

    /// Column vector.
    pub fn column(num_vars: usize, entries: Vec<Form>) -> Result<Self> {
        Self::from_rows(num_vars, entries.into_iter().map(|f| vec![f]).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Form {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: Form) {
        self.entries[i * self.cols + j] = f;
    }

    pub fn entries(&self) -> &[Form] {
        &self.entries
    }

    pub fn eval(&self, x: &ProjPoint) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let f = self.get(i, j);
                if !f.is_zero() {
                    m.set(i, j, f.eval(x.coords()));
                }
            }
        }
        m
    }

    pub fn eval_affine(&self, x: &[Rat]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let f = self.get(i, j);
                if !f.is_zero() {
                    m.set(i, j, f.eval(x));
                }
            }
        }
        m
    }

    pub fn mul(&self, other: &FormMatrix) -> Result<FormMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FormMatrix::zeros(self.rows, other.cols, self.num_vars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Form::zero(self.num_vars, 0);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&a.try_mul(b)?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> FormMatrix {
        let mut t = FormMatrix::zeros(self.cols, self.rows, self.num_vars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|f| f.is_zero())
    }

    /// Substitutes every entry along `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Form]) -> Result<FormMatrix> {
        let nv = images
            .first()
            .map(|f| f.num_vars())
            .unwrap_or(self.num_vars);
        let mut out = FormMatrix::zeros(self.rows, self.cols, nv);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let f = self.get(i, j);
                if !f.is_zero() {
                    out.set(i, j, f.substitute(images)?);
                }
            }
        }
        Ok(out)
    }

    pub fn without(&self, row: Option<usize>, col: Option<usize>) -> FormMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| Some(r) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| Some(c) != col).collect();
        self.select(&rows, &cols)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> FormMatrix {
        let mut out = FormMatrix::zeros(rows.len(), cols.len(), self.num_vars);
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                out.set(a, b, self.get(r, c).clone());
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &FormMatrix) -> FormMatrix {
        let mut out = FormMatrix::zeros(
            self.rows + other.rows,
            self.cols + other.cols,
            self.num_vars,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<Form> {
        if self.rows != self.cols {
            return Err(Error::MatrixShape(
                "determinant of a non-square form matrix".into(),
            ));
        }
        match self.rows {
            0 => Ok(Form::one(self.num_vars)),
            1 => Ok(self.get(0, 0).clone()),
            _ => {
                let mut acc = Form::zero(self.num_vars, 0);
                for j in 0..self.cols {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let minor = self.without(Some(0), Some(j)).det()?;
                    if minor.is_zero() {
                        continue;
                    }
                    let t = a.try_mul(&minor)?;
                    acc = if j % 2 == 0 {
                        acc.try_add(&t)?
                    } else {
                        acc.try_sub(&t)?
                    };
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Points at which local freeness is tested when a presentation is built.
pub const LOCAL_FREENESS_PROBES: usize = 8;

/// `0 -> F2 -A2-> F1 -A1-> F0 -> E -> 0` with each `F_k` a sum of `O(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePresentation {
    n: usize,
    f2: Vec<i64>,
    f1: Vec<i64>,
    f0: Vec<i64>,
    a1: FormMatrix,
    a2: FormMatrix,
}

impl FreePresentation {
    /// Checks entry degrees, `A1 A2 = 0`, and the cokernel rank at a few
    /// seeded points.
    pub fn new(
        n: usize,
        f2: Vec<i64>,
        f1: Vec<i64>,
        f0: Vec<i64>,
        a1: FormMatrix,
        a2: FormMatrix,
    ) -> Result<Self> {
        let p = Self::unchecked(n, f2, f1, f0, a1, a2)?;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f4ee);
        for _ in 0..LOCAL_FREENESS_PROBES {
            let x = ProjPoint::random(&mut rng, n);
            if !p.is_locally_free_at(&x) {
                return Err(Error::NotLocallyFree { witness: x });
            }
        }
        Ok(p)
    }

    /// Structural checks only.
    pub fn unchecked(
        n: usize,
        f2: Vec<i64>,
        f1: Vec<i64>,
        f0: Vec<i64>,
        a1: FormMatrix,
        a2: FormMatrix,
    ) -> Result<Self> {
        let nv = n + 1;
        let a2 = if f2.is_empty() && a2.rows() == 0 && a2.cols() == 0 {
            FormMatrix::zeros(f1.len(), 0, nv)
        } else {
            a2
        };
        let a1 = if f1.is_empty() && a1.rows() == 0 && a1.cols() == 0 {
            FormMatrix::zeros(f0.len(), 0, nv)
        } else {
            a1
        };
        if a1.rows() != f0.len() || a1.cols() != f1.len() {
            return Err(Error::InvalidPresentation(format!(
                "A1 is {}x{}, expected {}x{}",
                a1.rows(),
                a1.cols(),
                f0.len(),
                f1.len()
            )));
        }
        if a2.rows() != f1.len() || a2.cols() != f2.len() {
            return Err(Error::InvalidPresentation(format!(
                "A2 is {}x{}, expected {}x{}",
                a2.rows(),
                a2.cols(),
                f1.len(),
                f2.len()
            )));
        }
        for (m, src, tgt, name) in [(&a1, &f1, &f0, "A1"), (&a2, &f2, &f1, "A2")] {
            if m.num_vars() != nv {
                return Err(Error::MismatchedVars {
                    left: nv,
                    right: m.num_vars(),
                });
            }
            for i in 0..tgt.len() {
                for j in 0..src.len() {
                    let f = m.get(i, j);
                    if f.is_zero() {
                        continue;
                    }
                    let want = tgt[i] - src[j];
                    if want < 0 || f.degree() as i64 != want {
                        return Err(Error::InvalidPresentation(format!(
                            "{name}[{i}][{j}] = {f} has degree {}, expected {want}",
                            f.degree()
                        )));
                    }
                }
            }
        }
        if !f2.is_empty() && !a1.mul(&a2)?.is_zero() {
            return Err(Error::InvalidPresentation("A1 * A2 is not zero".into()));
        }
        if f0.len() + f2.len() < f1.len() {
            return Err(Error::InvalidPresentation("negative rank".into()));
        }
        Ok(FreePresentation {
            n,
            f2,
            f1,
            f0,
            a1,
            a2,
        })
    }

    /// A direct sum of line bundles.
    pub fn split(n: usize, degrees: &[i64]) -> Self {
        Self::unchecked(
            n,
            vec![],
            vec![],
            degrees.to_vec(),
            FormMatrix::zeros(degrees.len(), 0, n + 1),
            FormMatrix::zeros(0, 0, n + 1),
        )
        .expect("split presentation")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        self.n + 1
    }

    pub fn f0(&self) -> &[i64] {
        &self.f0
    }

    pub fn f1(&self) -> &[i64] {
        &self.f1
    }

    pub fn f2(&self) -> &[i64] {
        &self.f2
    }

    pub fn a1(&self) -> &FormMatrix {
        &self.a1
    }

    pub fn a2(&self) -> &FormMatrix {
        &self.a2
    }

    pub fn length(&self) -> usize {
        if !self.f2.is_empty() {
            2
        } else if !self.f1.is_empty() {
            1
        } else {
            0
        }
    }

    pub fn rank(&self) -> usize {
        self.f0.len() + self.f2.len() - self.f1.len()
    }

    /// `rank A1(x) = |F1| - |F2|`.
    pub fn is_locally_free_at(&self, x: &ProjPoint) -> bool {
        let expected = self.f1.len() - self.f2.len();
        if self.a1.eval(x).rank() != expected {
            return false;
        }
        self.f2.is_empty() || self.a2.eval(x).rank() == self.f2.len()
    }

    pub fn twist(&self, k: i64) -> FreePresentation {
        let sh = |v: &[i64]| v.iter().map(|d| d + k).collect();
        FreePresentation {
            n: self.n,
            f2: sh(&self.f2),
            f1: sh(&self.f1),
            f0: sh(&self.f0),
            a1: self.a1.clone(),
            a2: self.a2.clone(),
        }
    }

    pub fn chern_class(&self) -> ChowClass {
        let c0 = chern_line_sum(self.n, &self.f0);
        let c1 = chern_line_sum(self.n, &self.f1);
        let c2 = chern_line_sum(self.n, &self.f2);
        let num = chow_mul(&c0, &c2).expect("same ambient");
        chow_mul(&num, &chow_inv(&c1).expect("unit")).expect("same ambient")
    }

    pub fn chern_data(&self) -> ChernData {
        ChernData::from_class(self.rank(), &self.chern_class())
    }

    /// Points on the hyperplanes cut out by the linear entries of `A1`, where
    /// rank drops of the evaluation maps tend to concentrate.
    pub fn degeneracy_probes(&self, per_entry: usize, seed: u64) -> Vec<ProjPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for f in self.a1.entries() {
            if f.degree() != 1 || f.is_zero() {
                continue;
            }
            let coeffs: Vec<Rat> = basis(self.n, 1)
                .monomials
                .iter()
                .map(|m| f.coeff(m))
                .collect();
            for _ in 0..per_entry {
                if let Some(p) = point_on_hyperplane(&coeffs, &mut rng) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// Random point with `sum c_i x_i = 0`.
pub fn point_on_hyperplane<R: rand::Rng>(coeffs: &[Rat], rng: &mut R) -> Option<ProjPoint> {
    use num_traits::Zero;
    let k = coeffs.iter().position(|c| !c.is_zero())?;
    for _ in 0..crate::algebra::point::SAMPLE_ATTEMPTS {
        let mut x: Vec<Rat> = ProjPoint::random(rng, coeffs.len() - 1).coords().to_vec();
        x[k] = Rat::zero();
        let s: Rat = coeffs
            .iter()
            .zip(&x)
            .map(|(c, v)| c * v)
            .fold(Rat::zero(), |a, b| a + b);
        x[k] = -s / &coeffs[k];
        if let Ok(p) = ProjPoint::new(x) {
            return Some(p);
        }
    }
    None
}

impl fmt::Display for FreePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker{{n={}; ", self.n)?;
        if !self.f2.is_empty() {
            write!(f, "F2={:?}; ", self.f2)?;
        }
        write!(f, "F1={:?}; F0={:?}; A={}", self.f1, self.f0, self.a1)?;
        if !self.f2.is_empty() {
            write!(f, "; B={}", self.a2)?;
        }
        write!(f, "}}")
    }
}

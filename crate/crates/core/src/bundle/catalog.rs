//! The named bundles and their canonical presentations.
//!
//! Generic entries are drawn from a seeded generator with small integer
//! coefficients; each case fixes its seed so the same presentation comes
//! back on every run.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::presentation::{FormMatrix, FreePresentation};
use super::spec::BundleSpec;
use crate::algebra::{basis, binary_resultant, Form, Monomial, ProjPoint, Rat, RatMatrix};
use crate::chow::{chern_line_sum, chern_omega_twist, chow_inv, chow_mul, ChowClass};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    C1a,
    C1b,
    C2,
    C3,
    C4a,
    C4b,
    C4c,
    C4d,
    Neg33,
}

impl Case {
    pub const ALL: [Case; 9] = [
        Case::C1a,
        Case::C1b,
        Case::C2,
        Case::C3,
        Case::C4a,
        Case::C4b,
        Case::C4c,
        Case::C4d,
        Case::Neg33,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Case::C1a => "1a",
            Case::C1b => "1b",
            Case::C2 => "2",
            Case::C3 => "3",
            Case::C4a => "4a",
            Case::C4b => "4b",
            Case::C4c => "4c",
            Case::C4d => "4d",
            Case::Neg33 => "neg-3.3",
        }
    }

    /// Default seed for the generic entries.
    pub fn seed(&self) -> u64 {
        match self {
            Case::C4a => 0x4a,
            Case::C4b => 0x4b,
            Case::C4c => 0x4c,
            Case::C4d => 0x4d,
            Case::Neg33 => 0x33,
            _ => 0,
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Case::C1a => "O + O(3)",
            Case::C1b => "O(1) + O(2)",
            Case::C2 => "unstable extension, coker(O(-1) -> O(2)+O+O)",
            Case::C3 => "tangent bundle Omega(3)",
            Case::C4a => "Steiner bundle, coker(O(-1)^3 -> O^5)",
            Case::C4b => "coker(O(-2) -> O^2+O(1)), c2 = 6",
            Case::C4c => "coker(O(-1)^2 -> O^3+O(1)), c2 = 5",
            Case::C4d => "coker(O(-1) -> O+O(1)^2), c2 = 4",
            Case::Neg33 => "coker(O(-1)+O(-2) -> O^4), c2 = 7, not an embedding",
        }
    }

    /// Whether the case is expected to give an embedding.
    pub fn is_embedding(&self) -> bool {
        *self != Case::Neg33
    }
}

/// A case together with its ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CaseId {
    pub case: Case,
    pub n: usize,
}

impl CaseId {
    pub fn new(case: Case, n: usize) -> Result<Self> {
        let split = matches!(case, Case::C1a | Case::C1b);
        if n < 1 || (!split && n != 2) || (split && n > 4) {
            return Err(Error::UnknownCase(format!("{}@P{n}", case.label())));
        }
        Ok(CaseId { case, n })
    }

    pub fn plane(case: Case) -> Self {
        CaseId { case, n: 2 }
    }

    /// Every case of the catalog, planar ones first.
    pub fn all() -> Vec<CaseId> {
        let mut v: Vec<CaseId> = Case::ALL.iter().map(|&c| CaseId::plane(c)).collect();
        for n in [3, 4] {
            v.push(CaseId { case: Case::C1a, n });
            v.push(CaseId { case: Case::C1b, n });
        }
        v
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{}@P{}", self.case.label(), self.n))
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (label, n) = match s.split_once('@') {
            Some((l, amb)) => {
                let n = amb
                    .strip_prefix('P')
                    .or_else(|| amb.strip_prefix('p'))
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::UnknownCase(s.into()))?;
                (l, n)
            }
            None => (s, 2),
        };
        let case = Case::ALL
            .iter()
            .find(|c| c.label() == label)
            .copied()
            .ok_or_else(|| Error::UnknownCase(s.into()))?;
        CaseId::new(case, n)
    }
}

const COEFF_BOUND: i64 = 3;

/// Random form with integer coefficients in `[-3, 3]`, never zero.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, d: u32) -> Form {
    loop {
        let coeffs: Vec<Rat> = (0..basis(n, d as i64).len())
            .map(|_| Rat::from_integer(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND).into()))
            .collect();
        let f = Form::from_coefficient_vector(n + 1, d, &coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn parse(text: &str, n: usize) -> Form {
    Form::parse(text, n + 1, None).expect("valid built-in form")
}

fn zero(n: usize) -> Form {
    Form::zero(n + 1, 0)
}

fn coker(n: usize, f1: &[i64], f0: &[i64], rows: Vec<Vec<Form>>) -> Result<FreePresentation> {
    FreePresentation::new(
        n,
        vec![],
        f1.to_vec(),
        f0.to_vec(),
        FormMatrix::from_rows(n + 1, rows)?,
        FormMatrix::zeros(f1.len(), 0, n + 1),
    )
}

/// Canonical presentation of a named case.
pub fn presentation(id: CaseId) -> Result<FreePresentation> {
    let n = id.n;
    let mut rng = ChaCha8Rng::seed_from_u64(id.case.seed());
    match id.case {
        Case::C1a => Ok(FreePresentation::split(n, &[0, 3])),
        Case::C1b => Ok(FreePresentation::split(n, &[1, 2])),
        Case::C2 => case2_with(&parse("x2^3", 2)),
        Case::C3 => omega_twist(3),
        Case::C4a => steiner(&mut rng),
        Case::C4b => case4b(&mut rng),
        Case::C4c => {
            let lin = |rng: &mut ChaCha8Rng| random_form(rng, 2, 1);
            let rows = vec![
                vec![lin(&mut rng), lin(&mut rng)],
                vec![lin(&mut rng), lin(&mut rng)],
                vec![lin(&mut rng), lin(&mut rng)],
                vec![random_form(&mut rng, 2, 2), random_form(&mut rng, 2, 2)],
            ];
            coker(2, &[-1, -1], &[0, 0, 0, 1], rows)
        }
        Case::C4d => {
            let [l, q1, q2] = no_common_zero_on_line(&mut rng, 2)?;
            coker(2, &[-1], &[0, 1, 1], vec![vec![l], vec![q1], vec![q2]])
        }
        Case::Neg33 => {
            let mut rows = Vec::new();
            for i in 0..4 {
                let lin = if i < 3 { Form::var(3, i) } else { zero(2) };
                rows.push(vec![lin, random_form(&mut rng, 2, 2)]);
            }
            coker(2, &[-1, -2], &[0, 0, 0, 0], rows)
        }
    }
}

/// `Omega(k)` on the plane, as `coker(O(k-3) -> O(k-2)^3)` along `(x0, x1, x2)`.
pub fn omega_twist(k: i64) -> Result<FreePresentation> {
    coker(
        2,
        &[k - 3],
        &[k - 2, k - 2, k - 2],
        (0..3).map(|i| vec![Form::var(3, i)]).collect(),
    )
}

/// `coker(O(-1) -> O(2)+O+O)` along `(q, x1, -x0)`; needs `q(0:0:1) != 0`.
pub fn case2_with(q: &Form) -> Result<FreePresentation> {
    coker(
        2,
        &[-1],
        &[2, 0, 0],
        vec![vec![q.clone()], vec![parse("x1", 2)], vec![parse("-x0", 2)]],
    )
}

/// A Steiner presentation `coker(O(-1)^3 -> O^5)` with random linear entries.
pub fn steiner<R: Rng>(rng: &mut R) -> Result<FreePresentation> {
    let rows = (0..5)
        .map(|_| (0..3).map(|_| random_form(rng, 2, 1)).collect())
        .collect();
    coker(2, &[-1, -1, -1], &[0; 5], rows)
}

/// Four random points, no three on a line.
fn four_general_points<R: Rng>(rng: &mut R) -> Vec<ProjPoint> {
    loop {
        let pts: Vec<ProjPoint> = (0..4).map(|_| ProjPoint::random(rng, 2)).collect();
        let ok = (0..4).all(|skip| {
            let rows: Vec<Vec<Rat>> = (0..4)
                .filter(|&i| i != skip)
                .map(|i| pts[i].coords().to_vec())
                .collect();
            !RatMatrix::from_rows(rows).unwrap().det().unwrap().is_zero()
        });
        if ok {
            return pts;
        }
    }
}

fn case4b<R: Rng>(rng: &mut R) -> Result<FreePresentation> {
    let pts = four_general_points(rng);
    let conics = basis(2, 2);
    let rows: Vec<Vec<Rat>> = pts
        .iter()
        .map(|p| {
            conics
                .monomials
                .iter()
                .map(|m| m.eval(p.coords()))
                .collect()
        })
        .collect();
    let pencil = RatMatrix::from_rows(rows)?.kernel_basis();
    let [q1, q2] = [0, 1].map(|k| {
        let f = Form::from_coefficient_vector(3, 2, &pencil[k]);
        let (den, g) = f.content_parts();
        f.scale(&Rat::new(den, g))
    });
    let c = loop {
        let c = random_form(rng, 2, 3);
        if pts.iter().all(|p| !c.eval_point(p).is_zero()) {
            break c;
        }
    };
    coker(2, &[-2], &[0, 0, 1], vec![vec![q1], vec![q2], vec![c]])
}

/// `(l, q1, q2)` with `l` linear, `q1, q2` of degree `d` and no common zero,
/// certified by a resultant on the line `l = 0`.
fn no_common_zero_on_line<R: Rng>(rng: &mut R, d: u32) -> Result<[Form; 3]> {
    loop {
        let l = random_form(rng, 2, 1);
        let (q1, q2) = (random_form(rng, 2, d), random_form(rng, 2, d));
        if forms_avoid_common_zero(&l, &q1, &q2)? {
            return Ok([l, q1, q2]);
        }
    }
}

/// Exact test that a linear form and two forms have no common zero on the
/// plane: restrict to the line and compare the binary resultant with zero.
pub fn forms_avoid_common_zero(l: &Form, f: &Form, g: &Form) -> Result<bool> {
    let coeffs: Vec<Rat> = (0..3).map(|i| l.coeff(&Monomial::var(3, i))).collect();
    let line = RatMatrix::from_rows(vec![coeffs])?.kernel_basis();
    let images: Vec<Form> = (0..3)
        .map(|i| Form::linear(&[line[0][i].clone(), line[1][i].clone()]))
        .collect();
    let (fr, gr) = (f.substitute(&images)?, g.substitute(&images)?);
    if fr.is_zero() || gr.is_zero() {
        return Ok(false);
    }
    Ok(!binary_resultant(&fr, &gr)?.is_zero())
}

/// Representative of the non-generated stratum:
/// `coker(O(-3) -> O(-2)+O(1)^2)` along a linear form and two quartics.
pub fn type3_representative(seed: u64) -> Result<FreePresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let [g, q1, q2] = no_common_zero_on_line(&mut rng, 4)?;
    coker(2, &[-3], &[-2, 1, 1], vec![vec![g], vec![q1], vec![q2]])
}

/// `coker(O(-2) -> O(-1)+O(1)^2)` along `(x2, x0^3, x1^3)`; it splits as
/// `(-1, 4)` on the line `x2 = 0`.
pub fn jumping_line_toy() -> Result<FreePresentation> {
    coker(
        2,
        &[-2],
        &[-1, 1, 1],
        vec![
            vec![parse("x2", 2)],
            vec![parse("x0^3", 2)],
            vec![parse("x1^3", 2)],
        ],
    )
}

/// `coker(O(-3) -> O^3)` along three cubics invariant under the cyclic shift
/// of coordinates; the induced map to `Gr(1,2)` identifies `x` and its shift.
pub fn cyclic_cubic_quotient() -> Result<FreePresentation> {
    coker(
        2,
        &[-3],
        &[0, 0, 0],
        vec![
            vec![parse("x0^3 + x1^3 + x2^3", 2)],
            vec![parse("x0*x1*x2", 2)],
            vec![parse("x0^2*x1 + x1^2*x2 + x0*x2^2", 2)],
        ],
    )
}

/// `f = sum_i x_i f_i`, each term charged to its first variable.
pub fn euler_split(f: &Form) -> Vec<Form> {
    let nv = f.num_vars();
    let d = f.degree().saturating_sub(1);
    let mut parts = vec![Form::zero(nv, d); nv];
    for (m, c) in f.terms() {
        let i = m.0.iter().position(|&e| e > 0).expect("positive degree");
        let mut q = m.clone();
        q.0[i] -= 1;
        parts[i] = parts[i]
            .try_add(&Form::term(q, c.clone()))
            .expect("same degree");
    }
    parts
}

/// `a -> x cross a`, the map `O(-1)^3 -> O^3` whose image is `Omega(1)`.
fn cross_matrix() -> [[Form; 3]; 3] {
    let x = |i| Form::var(3, i);
    let z = || Form::zero(3, 1);
    [
        [z(), -&x(2), x(1)],
        [x(2), z(), -&x(0)],
        [-&x(1), x(0), z()],
    ]
}

/// Expansion of 4b, 4c or 4d with `Omega(1)` summands in the kernel of
/// the evaluation map, `0 -> Omega(1)^a + ... -> O^{h0} -> E -> 0`.
pub fn omega_alternate(case: Case) -> Result<BundleSpec> {
    let canon = presentation(CaseId::plane(case))?;
    let a1 = canon.a1();
    let k = cross_matrix();
    let omega = || BundleSpec::OmegaTwist { k: 1 };
    let (source, rows): (BundleSpec, Vec<Vec<Form>>) = match case {
        Case::C4b => {
            let split = euler_split(a1.get(2, 0));
            let mut rows = vec![
                vec![zero(2), zero(2), zero(2), a1.get(0, 0).clone()],
                vec![zero(2), zero(2), zero(2), a1.get(1, 0).clone()],
            ];
            for i in 0..3 {
                let mut r: Vec<Form> = k[i].to_vec();
                r.push(split[i].clone());
                rows.push(r);
            }
            let src = BundleSpec::Sum(vec![omega(), BundleSpec::line_sum(2, &[-2])]);
            (src, rows)
        }
        Case::C4c => {
            let splits = [euler_split(a1.get(3, 0)), euler_split(a1.get(3, 1))];
            let mut rows = Vec::new();
            for r in 0..3 {
                rows.push(vec![
                    zero(2),
                    zero(2),
                    zero(2),
                    a1.get(r, 0).clone(),
                    a1.get(r, 1).clone(),
                ]);
            }
            for i in 0..3 {
                let mut r: Vec<Form> = k[i].to_vec();
                r.push(splits[0][i].clone());
                r.push(splits[1][i].clone());
                rows.push(r);
            }
            let src = BundleSpec::Sum(vec![omega(), BundleSpec::line_sum(2, &[-1, -1])]);
            (src, rows)
        }
        Case::C4d => {
            let splits = [euler_split(a1.get(1, 0)), euler_split(a1.get(2, 0))];
            let mut rows = vec![{
                let mut r = vec![zero(2); 6];
                r.push(a1.get(0, 0).clone());
                r
            }];
            for (block, split) in splits.iter().enumerate() {
                for i in 0..3 {
                    let mut r = vec![zero(2); 6];
                    for j in 0..3 {
                        r[3 * block + j] = k[i][j].clone();
                    }
                    r.push(split[i].clone());
                    rows.push(r);
                }
            }
            let src = BundleSpec::Sum(vec![omega(), omega(), BundleSpec::line_sum(2, &[-1])]);
            (src, rows)
        }
        other => {
            return Err(Error::Unsupported(format!(
                "no alternate expansion for case {}",
                other.label()
            )))
        }
    };
    let h0 = rows.len();
    Ok(BundleSpec::CokerOf {
        source: Box::new(source),
        f0: vec![0; h0],
        map: FormMatrix::from_rows(3, rows)?,
    })
}

/// Total Chern class of a case from its description as a bundle, without
/// looking at the presentation.
pub fn symbolic_chern(id: CaseId) -> ChowClass {
    let n = id.n;
    let inv = |c: &ChowClass| chow_inv(c).expect("unit");
    let mul = |a: &ChowClass, b: &ChowClass| chow_mul(a, b).expect("same ambient");
    let omega1 = chern_omega_twist(2, 1);
    match id.case {
        Case::C1a => chern_line_sum(n, &[0, 3]),
        Case::C1b => chern_line_sum(n, &[1, 2]),
        Case::C2 => mul(&ChowClass::linear(2, 2), &inv(&ChowClass::linear(2, -1))),
        Case::C3 => chern_omega_twist(2, 3),
        Case::C4a => inv(&chern_line_sum(2, &[-1, -1, -1])),
        Case::C4b => inv(&mul(&omega1, &ChowClass::linear(2, -2))),
        Case::C4c => inv(&mul(&omega1, &chern_line_sum(2, &[-1, -1]))),
        Case::C4d => inv(&mul(&mul(&omega1, &omega1), &ChowClass::linear(2, -1))),
        Case::Neg33 => inv(&chern_line_sum(2, &[-1, -2])),
    }
}

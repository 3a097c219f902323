use num_traits::Zero;
use serde::Serialize;

use super::cohomology::{alpha1, h_vector};
use super::presentation::FreePresentation;
use crate::algebra::{basis, Form, Monomial, ProjPoint, Rat, RatMatrix};
use crate::error::{Error, Result};

/// One coset representative: the monomial `monomial` placed in summand
/// `block` of `F0`, zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionRep {
    pub block: usize,
    pub monomial: Vec<u16>,
}

/// A basis of `H^0(E)` as coset representatives in `H^0(F0)` modulo the image
/// of `H^0(F1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionBasis {
    pub n: usize,
    pub f0: Vec<i64>,
    pub reps: Vec<SectionRep>,
    /// Images of the monomial basis of `H^0(F1)`, as columns of forms.
    pub relations: Vec<Vec<Form>>,
}

impl SectionBasis {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The `k`-th representative as a column of forms.
    pub fn column(&self, k: usize) -> Vec<Form> {
        let nv = self.n + 1;
        let r = &self.reps[k];
        self.f0
            .iter()
            .enumerate()
            .map(|(b, &d)| {
                if b == r.block {
                    Form::term(Monomial(r.monomial.clone()), Rat::from_integer(1.into()))
                } else {
                    Form::zero(nv, d.max(0) as u32)
                }
            })
            .collect()
    }

    /// Value of each section in the fibre of `F0` at the representative of `x`;
    /// the result is `|F0| x len` with one column per section.
    pub fn eval(&self, x: &[Rat]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.f0.len(), self.reps.len());
        for (k, r) in self.reps.iter().enumerate() {
            m.set(r.block, k, Monomial(r.monomial.clone()).eval(x));
        }
        m
    }
}

/// `H^0(E)` as cosets. Only the part of `H^0(E)` coming from `H^0(F0)` can be
/// represented this way; presentations where `H^0(E)` is bigger are rejected.
pub fn h0_basis(pres: &FreePresentation) -> Result<SectionBasis> {
    let n = pres.n();
    let a = alpha1(pres, 0);
    let h0 = h_vector(pres, 0)?[0];
    // relation vectors as rows, echelonized; pivots are the eliminated coordinates
    let (_, pivots) = a.transpose().rref();
    let mut coords = Vec::new();
    for (b, &d) in pres.f0().iter().enumerate() {
        for m in basis(n, d).monomials.iter() {
            coords.push((b, m.clone()));
        }
    }
    let reps: Vec<SectionRep> = coords
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivots.contains(i))
        .map(|(_, (b, m))| SectionRep {
            block: *b,
            monomial: m.0.clone(),
        })
        .collect();
    if reps.len() != h0 {
        return Err(Error::Unsupported(format!(
            "h0(E) = {h0} but only {} sections come from H0(F0)",
            reps.len()
        )));
    }
    let nv = n + 1;
    let mut relations = Vec::new();
    for c in 0..a.cols() {
        let col = a.column(c);
        let mut forms = Vec::new();
        let mut pos = 0;
        for &d in pres.f0() {
            let len = basis(n, d).len();
            let coeffs = &col[pos..pos + len];
            forms.push(if coeffs.iter().all(|v| v.is_zero()) {
                Form::zero(nv, d.max(0) as u32)
            } else {
                Form::from_coefficient_vector(nv, d as u32, coeffs)
            });
            pos += len;
        }
        relations.push(forms);
    }
    Ok(SectionBasis {
        n,
        f0: pres.f0().to_vec(),
        reps,
        relations,
    })
}

/// Rank of the evaluated sections in the fibre `F0(x) / im A1(x)`.
pub fn fibre_rank(pres: &FreePresentation, sections: &SectionBasis, x: &ProjPoint) -> usize {
    quotient_coordinates(pres, sections, x).rank()
}

/// Sections expressed in a basis of the dual of the fibre at `x`: rows are a
/// basis of `ker A1(x)^T`, columns are sections.
pub fn quotient_coordinates(
    pres: &FreePresentation,
    sections: &SectionBasis,
    x: &ProjPoint,
) -> RatMatrix {
    let q = pres.a1().eval(x).transpose().kernel_basis();
    let s = sections.eval(x.coords());
    let qm = RatMatrix::from_rows(q).unwrap_or_else(|_| RatMatrix::zeros(0, pres.f0().len()));
    let qm = if qm.rows() == 0 {
        RatMatrix::zeros(0, pres.f0().len())
    } else {
        qm
    };
    qm.mul(&s).expect("fibre dimensions")
}

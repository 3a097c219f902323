//! Removing unit entries from a presentation, and the four resolution types
//! of stable bundles with `(c1, c2) = (3, 6)` on the plane.

use serde::Serialize;

use super::cohomology::h_vector;
use super::generation::is_stable_c1_3;
use super::presentation::{FormMatrix, FreePresentation};
use crate::algebra::Rat;
use crate::error::{Error, Result};

fn unit_entry(m: &FormMatrix, src: &[i64], tgt: &[i64]) -> Option<(usize, usize)> {
    for i in 0..tgt.len() {
        for j in 0..src.len() {
            if tgt[i] == src[j] && !m.get(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// `M` without row `i` and column `j`, minus the rank-one correction that
/// clears row `i` and column `j` by the unit pivot `M[i][j]`.
fn eliminate(m: &FormMatrix, i: usize, j: usize) -> Result<FormMatrix> {
    let pivot = m.get(i, j).clone();
    let inv: Rat = pivot.leading_term().expect("nonzero pivot").1.recip();
    let mut out = m.without(Some(i), Some(j));
    let rows: Vec<usize> = (0..m.rows()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&c| c != j).collect();
    for (a, &r) in rows.iter().enumerate() {
        let left = m.get(r, j);
        if left.is_zero() {
            continue;
        }
        for (b, &c) in cols.iter().enumerate() {
            let top = m.get(i, c);
            if top.is_zero() {
                continue;
            }
            let corr = left.try_mul(top)?.scale(&inv);
            out.set(a, b, out.get(a, b).try_sub(&corr)?);
        }
    }
    Ok(out)
}

/// Repeatedly cancels pairs of summands joined by a nonzero constant entry.
/// The result has no degree-zero nonzero entries and presents the same bundle.
pub fn minimal_reduction(pres: &FreePresentation) -> Result<FreePresentation> {
    let mut cur = pres.clone();
    loop {
        let (f2, f1, f0) = (cur.f2().to_vec(), cur.f1().to_vec(), cur.f0().to_vec());
        if let Some((i, j)) = unit_entry(cur.a1(), &f1, &f0) {
            let a1 = eliminate(cur.a1(), i, j)?;
            let a2 = cur.a2().without(Some(j), None);
            let drop = |v: &[i64], k: usize| -> Vec<i64> {
                v.iter()
                    .enumerate()
                    .filter(|(x, _)| *x != k)
                    .map(|(_, d)| *d)
                    .collect()
            };
            cur = FreePresentation::unchecked(cur.n(), f2, drop(&f1, j), drop(&f0, i), a1, a2)?;
            continue;
        }
        if let Some((j, k)) = unit_entry(cur.a2(), &f2, &f1) {
            let a2 = eliminate(cur.a2(), j, k)?;
            let a1 = cur.a1().without(None, Some(j));
            let drop = |v: &[i64], x: usize| -> Vec<i64> {
                v.iter()
                    .enumerate()
                    .filter(|(y, _)| *y != x)
                    .map(|(_, d)| *d)
                    .collect()
            };
            cur = FreePresentation::unchecked(cur.n(), drop(&f2, k), drop(&f1, j), f0, a1, a2)?;
            continue;
        }
        return Ok(cur);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionType {
    pub kind: u8,
    pub h0_e_minus_1: usize,
    pub f2: Vec<i64>,
    pub f1: Vec<i64>,
    pub f0: Vec<i64>,
}

fn sorted(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Type 1..4 of a stable bundle in `M(3,6)`, from `h0(E(-1))` and the
/// degrees of its minimal presentation.
#[allow(non_snake_case)]
pub fn resolution_type_M36(pres: &FreePresentation) -> Result<ResolutionType> {
    let cd = pres.chern_data();
    if pres.n() != 2 || cd.rank != 2 || cd.c1 != 3 || cd.c2 != 6 {
        return Err(Error::NotInM36(format!("plane bundle data {cd}")));
    }
    if !is_stable_c1_3(pres)? {
        return Err(Error::NotInM36("h0(E(-2)) > 0, not stable".into()));
    }
    let min = minimal_reduction(pres)?;
    let h = h_vector(&min, -1)?[0];
    let (f2, f1, f0) = (sorted(min.f2()), sorted(min.f1()), sorted(min.f0()));
    let shape = format!("F2={f2:?} F1={f1:?} F0={f0:?}");
    let kind = match h {
        0 => 4,
        2 => 3,
        1 if f2.is_empty() && f1 == [-2] && f0 == [0, 0, 1] => 1,
        1 if f2.is_empty() && f1 == [-2, -1] && f0 == [-1, 0, 0, 1] => 2,
        1 => return Err(Error::UnrecognizedResolution(shape)),
        _ => return Err(Error::NotInM36(format!("h0(E(-1)) = {h}"))),
    };
    Ok(ResolutionType {
        kind,
        h0_e_minus_1: h,
        f2,
        f1,
        f0,
    })
}

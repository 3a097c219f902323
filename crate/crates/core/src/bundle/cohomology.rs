//! Cohomology of a presented bundle from the ranks of the induced maps on
//! the cohomology of the free terms.
//!
//! Line bundles on `P^n` only have `H^0` and `H^n`. `H^0(O(d))` is the space of
//! degree-`d` forms; `H^n(O(d))` is dual to the forms of degree `-d-n-1`, and a
//! map between top cohomologies is dual to multiplication by the transposed
//! matrix. Splitting the resolution into `0 -> F2 -> F1 -> K -> 0` and
//! `0 -> K -> F0 -> E -> 0` leaves only three ranks to compute.

use std::fmt;

use serde::Serialize;

use super::presentation::{FormMatrix, FreePresentation};
use crate::algebra::{basis, dim_forms, RatMatrix};
use crate::error::{Error, Result};

/// Matrix of `(f_1..f_s) -> (sum_j M_ij f_j)_i` on monomial bases, from
/// `sum_j S_{src_j}` to `sum_i S_{tgt_i}`.
pub fn multiplication_matrix(n: usize, m: &FormMatrix, src: &[i64], tgt: &[i64]) -> RatMatrix {
    let row_off = offsets(n, tgt);
    let col_off = offsets(n, src);
    let mut out = RatMatrix::zeros(*row_off.last().unwrap(), *col_off.last().unwrap());
    for (j, &sd) in src.iter().enumerate() {
        let sb = basis(n, sd);
        if sb.is_empty() {
            continue;
        }
        for (i, &td) in tgt.iter().enumerate() {
            let f = m.get(i, j);
            if f.is_zero() {
                continue;
            }
            let tb = basis(n, td);
            for (c, u) in sb.monomials.iter().enumerate() {
                for (mono, coeff) in f.terms() {
                    let r = tb.position(&mono.mul(u)).expect("degree bookkeeping");
                    let v = out.get(row_off[i] + r, col_off[j] + c) + coeff;
                    out.set(row_off[i] + r, col_off[j] + c, v);
                }
            }
        }
    }
    out
}

fn offsets(n: usize, degrees: &[i64]) -> Vec<usize> {
    let mut off = vec![0];
    for &d in degrees {
        off.push(off.last().unwrap() + dim_forms(n, d));
    }
    off
}

fn h0_sum(n: usize, degrees: &[i64]) -> usize {
    degrees.iter().map(|&d| dim_forms(n, d)).sum()
}

fn hn_sum(n: usize, degrees: &[i64]) -> usize {
    degrees
        .iter()
        .map(|&d| dim_forms(n, -d - n as i64 - 1))
        .sum()
}

fn shift(v: &[i64], k: i64) -> Vec<i64> {
    v.iter().map(|d| d + k).collect()
}

fn dual(v: &[i64], n: usize) -> Vec<i64> {
    v.iter().map(|d| -d - n as i64 - 1).collect()
}

/// `H^0(F1(m)) -> H^0(F0(m))`.
pub fn alpha1(pres: &FreePresentation, m: i64) -> RatMatrix {
    multiplication_matrix(
        pres.n(),
        pres.a1(),
        &shift(pres.f1(), m),
        &shift(pres.f0(), m),
    )
}

/// `(h^0, ..., h^n)` of `E(m)`.
pub fn h_vector(pres: &FreePresentation, m: i64) -> Result<Vec<usize>> {
    if pres.length() > 2 {
        return Err(Error::UnsupportedResolutionLength(pres.length()));
    }
    let n = pres.n();
    if n == 0 {
        return Err(Error::Unsupported(
            "ambient dimension must be positive".into(),
        ));
    }
    let (f0, f1, f2) = (
        shift(pres.f0(), m),
        shift(pres.f1(), m),
        shift(pres.f2(), m),
    );
    let h0 = [h0_sum(n, &f0), h0_sum(n, &f1), h0_sum(n, &f2)];
    let hn = [hn_sum(n, &f0), hn_sum(n, &f1), hn_sum(n, &f2)];

    let a1 = multiplication_matrix(n, pres.a1(), &f1, &f0);
    // exactness on global sections: ker(H0 F1 -> H0 F0) = H0 F2
    let r1 = a1.rank();
    if r1 + h0[2] != h0[1] {
        return Err(Error::NotExact(format!(
            "rank of H0(F1) -> H0(F0) at twist {m} is {r1}, expected {}",
            h0[1] as i64 - h0[2] as i64
        )));
    }
    let b1 = if hn[0] == 0 || hn[1] == 0 {
        0
    } else {
        multiplication_matrix(n, &pres.a1().transpose(), &dual(&f0, n), &dual(&f1, n)).rank()
    };
    let b2 = if hn[1] == 0 || hn[2] == 0 {
        0
    } else {
        multiplication_matrix(n, &pres.a2().transpose(), &dual(&f1, n), &dual(&f2, n)).rank()
    };
    let kb2 = hn[2] - b2;

    let signed = |v: i64, what: &str| -> Result<usize> {
        usize::try_from(v).map_err(|_| Error::NotExact(format!("{what} would be {v} at twist {m}")))
    };
    let mut h = vec![0usize; n + 1];
    if n == 1 {
        let h0k = h0[1] as i64 - h0[2] as i64 + kb2 as i64;
        let h1k = hn[1] as i64 - b2 as i64;
        h[0] = signed(h0[0] as i64 - h0k + h1k - b1 as i64, "h0")?;
        h[1] = signed(hn[0] as i64 - b1 as i64, "h1")?;
    } else {
        h[0] = signed(h0[0] as i64 - (h0[1] as i64 - h0[2] as i64), "h0")?;
        h[n - 2] += kb2;
        h[n - 1] = signed(hn[1] as i64 - b2 as i64 - b1 as i64, "h^(n-1)")?;
        h[n] = signed(hn[0] as i64 - b1 as i64, "h^n")?;
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub twist: i64,
    pub h: Vec<usize>,
}

impl CohomologyRow {
    pub fn euler_characteristic(&self) -> i64 {
        self.h
            .iter()
            .enumerate()
            .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn row(&self, twist: i64) -> Option<&CohomologyRow> {
        self.rows.iter().find(|r| r.twist == twist)
    }

    pub fn h(&self, i: usize, twist: i64) -> Option<usize> {
        self.row(twist).map(|r| r.h[i])
    }
}

pub fn cohomology_table(
    pres: &FreePresentation,
    twists: impl IntoIterator<Item = i64>,
) -> Result<CohomologyTable> {
    let rows = twists
        .into_iter()
        .map(|m| {
            Ok(CohomologyRow {
                twist: m,
                h: h_vector(pres, m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyTable { n: pres.n(), rows })
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "m")?;
        for i in 0..=self.n {
            write!(f, " {:>6}", format!("h{i}"))?;
        }
        writeln!(f, " {:>6}", "chi")?;
        for r in &self.rows {
            write!(f, "{:>4}", r.twist)?;
            for v in &r.h {
                write!(f, " {v:>6}")?;
            }
            writeln!(f, " {:>6}", r.euler_characteristic())?;
        }
        Ok(())
    }
}

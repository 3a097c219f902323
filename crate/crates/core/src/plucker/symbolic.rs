use crate::algebra::{Form, Rat};
use crate::bundle::{FreePresentation, SectionBasis};
use crate::error::{Error, Result};

use super::map::{pair_count, pair_index, PluckerMap};

/// `p_ij = det[s_i | s_j | A1]`, expanded along the first two columns:
/// each 2x2 minor of the section pair times the complementary minor of `A1`.
pub fn plucker_symbolic_det(
    pres: &FreePresentation,
    sections: &SectionBasis,
) -> Result<PluckerMap> {
    let (f0, f1) = (pres.f0().len(), pres.f1().len());
    if pres.length() > 1 || f1 + 2 != f0 {
        return Err(Error::ShapeMismatch(format!(
            "length {}, |F1| = {f1}, |F0| = {f0}",
            pres.length()
        )));
    }
    if sections.len() < 2 {
        return Err(Error::Unsupported(format!(
            "{} sections span no line",
            sections.len()
        )));
    }
    let nv = pres.num_vars();
    let target = sections.len() - 1;
    let c1 = pres.chern_data().c1;
    let all_cols: Vec<usize> = (0..f1).collect();
    let mut minors = vec![vec![None::<Form>; f0]; f0];
    for r in 0..f0 {
        for s in r + 1..f0 {
            let rows: Vec<usize> = (0..f0).filter(|&k| k != r && k != s).collect();
            let m = pres.a1().select(&rows, &all_cols).det()?;
            let m = if (r + s + 1) % 2 == 1 {
                m.scale(&-Rat::from_integer(1.into()))
            } else {
                m
            };
            minors[r][s] = Some(m);
        }
    }
    let cols: Vec<Vec<Form>> = (0..sections.len()).map(|k| sections.column(k)).collect();
    let mut coords = vec![Form::zero(nv, c1.max(0) as u32); pair_count(target)];
    for i in 0..sections.len() {
        for j in i + 1..sections.len() {
            let mut acc: Option<Form> = None;
            for r in 0..f0 {
                for s in r + 1..f0 {
                    let (a, b) = (&cols[i], &cols[j]);
                    if (a[r].is_zero() || b[s].is_zero()) && (a[s].is_zero() || b[r].is_zero()) {
                        continue;
                    }
                    let minor = minors[r][s].as_ref().expect("filled above");
                    if minor.is_zero() {
                        continue;
                    }
                    let two = &(&a[r] * &b[s]) - &(&a[s] * &b[r]);
                    if two.is_zero() {
                        continue;
                    }
                    let term = &two * minor;
                    acc = Some(match acc {
                        None => term,
                        Some(t) => &t + &term,
                    });
                }
            }
            if let Some(f) = acc.filter(|f| !f.is_zero()) {
                if f.degree() as i64 != c1 {
                    return Err(Error::DegreeMismatch {
                        expected: c1,
                        computed: f.degree() as i64,
                    });
                }
                coords[pair_index(target, i, j)] = f;
            }
        }
    }
    PluckerMap::new(pres.n(), target, coords)
}

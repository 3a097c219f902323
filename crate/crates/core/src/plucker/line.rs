use std::fmt;

use crate::algebra::{ProjPoint, Rat};
use crate::bundle::sections::quotient_coordinates;
use crate::bundle::{FreePresentation, SectionBasis};
use crate::error::{Error, Result};

use super::map::pairs;

/// A line in `P^N` spanned by two rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInPN {
    pub u: Vec<Rat>,
    pub v: Vec<Rat>,
}

impl LineInPN {
    pub fn target(&self) -> usize {
        self.u.len() - 1
    }

    /// `u_i v_j - u_j v_i` over the lexicographic index pairs.
    pub fn plucker_vector(&self) -> Vec<Rat> {
        pairs(self.target())
            .into_iter()
            .map(|(i, j)| &self.u[i] * &self.v[j] - &self.u[j] * &self.v[i])
            .collect()
    }
}

impl fmt::Display for LineInPN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[Rat]| {
            r.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "[{}] ^ [{}]", row(&self.u), row(&self.v))
    }
}

/// The image in `P^N` of the fibre quotient at `x`: each section becomes a
/// point of the 2-dimensional fibre, and the row space of that 2 x (N+1)
/// matrix is the line.
pub fn quotient_line_at(
    pres: &FreePresentation,
    sections: &SectionBasis,
    x: &ProjPoint,
) -> Result<LineInPN> {
    let m = quotient_coordinates(pres, sections, x);
    if m.rows() != 2 || m.rank() != 2 {
        return Err(Error::NotGloballyGeneratedAt(x.clone()));
    }
    Ok(LineInPN {
        u: m.row(0).to_vec(),
        v: m.row(1).to_vec(),
    })
}

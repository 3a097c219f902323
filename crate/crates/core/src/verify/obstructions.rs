//! Finite arithmetic behind the non-existence arguments on `P^3` and the
//! `h^1 < 0` contradiction on `P^2`.

use std::fmt;

use serde::Serialize;

use crate::chow::{
    chern_line_sum, chern_omega_twist, chern_sym2_omega1_p2, chow_mul, euler_char_p2,
    non_integral_twists, schwarzenberger_ok, ChowClass,
};

use super::report::{Check, Report};

/// Genera of smooth connected space curves of degree `d <= 6`.
pub fn realizable_genera(d: u32) -> &'static [u32] {
    match d {
        1 | 2 => &[0],
        3 => &[0, 1],
        4 => &[0, 1, 3],
        5 => &[0, 1, 2],
        6 => &[0, 1, 2, 3, 4, 10],
        _ => &[],
    }
}

/// A disjoint union of smooth connected curves in `P^3`, as a multiset of
/// `(degree, genus)` pairs sorted in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveDatum {
    pub components: Vec<(u32, u32)>,
}

impl CurveDatum {
    pub fn new(mut components: Vec<(u32, u32)>) -> Self {
        components.sort_by(|a, b| b.cmp(a));
        CurveDatum { components }
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(|c| c.0).sum()
    }

    pub fn count(&self) -> i64 {
        self.components.len() as i64
    }

    pub fn genus_sum(&self) -> i64 {
        self.components.iter().map(|c| c.1 as i64).sum()
    }

    /// `chi(O_Z) = sum (1 - g_i)`.
    pub fn chi(&self) -> i64 {
        self.count() - self.genus_sum()
    }

    pub fn arithmetic_genus(&self) -> i64 {
        1 - self.chi()
    }

    /// Every component has `omega = O(-1)`, i.e. `2g - 2 = -d`.
    pub fn omega_minus_one(&self) -> bool {
        self.components
            .iter()
            .all(|&(d, g)| 2 * g as i64 - 2 == -(d as i64))
    }
}

impl fmt::Display for CurveDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(d, g)| format!("({d},{g})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All realizable unions of total degree `d`.
pub fn enumerate_curves(d: u32) -> Vec<CurveDatum> {
    fn go(left: u32, max: (u32, u32), acc: &mut Vec<(u32, u32)>, out: &mut Vec<CurveDatum>) {
        if left == 0 {
            out.push(CurveDatum::new(acc.clone()));
            return;
        }
        for deg in (1..=left.min(max.0)).rev() {
            for &g in realizable_genera(deg).iter().rev() {
                if (deg, g) > max {
                    continue;
                }
                acc.push((deg, g));
                go(left - deg, (deg, g), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, (d, u32::MAX), &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothZVerdict {
    pub d: u32,
    /// `chi(O_Z) = 3d/2`, which also bounds the number of components from below.
    pub m_lower: i64,
    /// The number of components is at most the degree.
    pub m_upper: i64,
    pub solutions: Vec<CurveDatum>,
    pub feasible: bool,
}

/// Smooth `Z` of even degree `d` with `chi(O_Z) = 3d/2`.
pub fn smooth_z_oracle(d: u32) -> SmoothZVerdict {
    let chi = 3 * d as i64 / 2;
    let solutions: Vec<CurveDatum> = if d.is_multiple_of(2) {
        enumerate_curves(d)
            .into_iter()
            .filter(|z| z.chi() == chi)
            .collect()
    } else {
        Vec::new()
    };
    SmoothZVerdict {
        d,
        m_lower: chi,
        m_upper: d as i64,
        feasible: !solutions.is_empty(),
        solutions,
    }
}

/// Realizable unions of degree `d` with `sum (1 - g_i) = chi`.
pub fn unions_with_chi(d: u32, chi: i64) -> Vec<CurveDatum> {
    enumerate_curves(d)
        .into_iter()
        .filter(|z| z.chi() == chi)
        .collect()
}

pub fn omega_filter(curves: &[CurveDatum]) -> Vec<CurveDatum> {
    curves
        .iter()
        .filter(|z| z.omega_minus_one())
        .cloned()
        .collect()
}

/// `(a, b, c)` with `b + c = total`, `1 <= b <= c` and
/// `pa = (b-1)(b-2)/2 + (c-1)(c-2)/2 + b - a - 1`.
pub fn abc_solutions(pa: i64, total: i64) -> Vec<(i64, i64, i64)> {
    (1..=total / 2)
        .map(|b| {
            let c = total - b;
            let a = (b - 1) * (b - 2) / 2 + (c - 1) * (c - 2) / 2 + b - 1 - pa;
            (a, b, c)
        })
        .collect()
}

/// Smallest arithmetic genus of a reduced curve of degree `d`, over disjoint
/// unions of smooth components.
pub fn min_pa_reduced(d: u32) -> i64 {
    enumerate_curves(d)
        .iter()
        .map(|z| z.arithmetic_genus())
        .min()
        .expect("degree at least one")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiContradiction {
    pub chi: i64,
    pub h0: i64,
    pub forced_h1: i64,
    pub c_f: String,
    pub c_sym2: String,
    pub chern_classes_differ: bool,
}

/// `(c1, c2) = (3, 6)` on the plane with four sections forces `h^1 = -1`;
/// the quotient `Omega(1) + O(-2)` also has the wrong Chern class.
pub fn chi_contradiction_omega() -> ChiContradiction {
    let chi = euler_char_p2(3, 6, 0);
    let h0 = 4;
    let c_f: ChowClass =
        chow_mul(&chern_omega_twist(2, 1), &chern_line_sum(2, &[-2])).expect("same ambient");
    let c_sym2 = chern_sym2_omega1_p2();
    ChiContradiction {
        chi,
        h0,
        forced_h1: h0 - chi,
        chern_classes_differ: c_f != c_sym2,
        c_f: c_f.to_string(),
        c_sym2: c_sym2.to_string(),
    }
}

fn list(curves: &[CurveDatum]) -> String {
    let v: Vec<String> = curves.iter().map(|c| c.to_string()).collect();
    format!("[{}]", v.join(" "))
}

/// All obstruction oracles as one report.
pub fn obstructions() -> Report {
    let mut r = Report::new("obstructions", 0);
    for d in [2, 4, 6] {
        let v = smooth_z_oracle(d);
        r.push(Check::new(
            &format!("smooth_z_degree_{d}"),
            !v.feasible && v.m_lower > v.m_upper,
            "infeasible",
            format!(
                "needs m >= {} and m <= {}; {} solutions",
                v.m_lower,
                v.m_upper,
                v.solutions.len()
            ),
        ));
    }

    let six = unions_with_chi(6, 3);
    let expected_six = vec![
        CurveDatum::new(vec![(2, 0), (2, 0), (2, 0)]),
        CurveDatum::new(vec![(3, 0), (2, 0), (1, 0)]),
        CurveDatum::new(vec![(3, 1), (1, 0), (1, 0), (1, 0)]),
        CurveDatum::new(vec![(4, 0), (1, 0), (1, 0)]),
    ];
    let mut sorted = six.clone();
    sorted.sort();
    let mut exp_sorted = expected_six.clone();
    exp_sorted.sort();
    r.push(Check::new(
        "unions_degree_6_chi_3",
        sorted == exp_sorted,
        list(&exp_sorted),
        list(&sorted),
    ));
    let conics3 = vec![CurveDatum::new(vec![(2, 0), (2, 0), (2, 0)])];
    r.push(Check::new(
        "omega_filter_degree_6",
        omega_filter(&six) == conics3,
        list(&conics3),
        list(&omega_filter(&six)),
    ));

    let four = unions_with_chi(4, 2);
    r.push(Check::new("unions_degree_4_chi_2", true, "recorded", list(&four)).informational());
    let conics2 = vec![CurveDatum::new(vec![(2, 0), (2, 0)])];
    r.push(Check::new(
        "omega_filter_degree_4",
        omega_filter(&four) == conics2,
        list(&conics2),
        list(&omega_filter(&four)),
    ));

    let abc = abc_solutions(-5, 4);
    let mut abc_sorted = abc.clone();
    abc_sorted.sort();
    r.push(Check::new(
        "abc_pa_minus_5",
        abc_sorted == [(6, 1, 3), (6, 2, 2)],
        "{(6,2,2), (6,1,3)}",
        format!("{abc:?}"),
    ));
    r.note("a = 6 is rejected in both solutions; the bound on a is recorded, not derived");

    for (d, pa) in [(1, 0), (4, -3), (6, -5)] {
        r.push(Check::equal(
            &format!("min_pa_reduced_{d}"),
            pa,
            min_pa_reduced(d),
        ));
    }

    let c = chi_contradiction_omega();
    r.push(Check::new(
        "chi_forces_negative_h1",
        c.chi == 5 && c.forced_h1 == -1,
        "chi = 5, h1 = 4 - 5 = -1",
        format!("chi = {}, h1 = {}", c.chi, c.forced_h1),
    ));
    r.push(Check::new(
        "omega_quotient_chern",
        c.chern_classes_differ && c.c_f == "1 - 3t + 3t^2" && c.c_sym2 == "1 - 3t + 6t^2",
        "1 - 3t + 3t^2 != 1 - 3t + 6t^2",
        format!("{} vs {}", c.c_f, c.c_sym2),
    ));

    let mut bad = None;
    for c1 in -5..=5 {
        for c2 in -5..=5 {
            let integral = non_integral_twists(c1, c2, -10..=10).is_empty();
            if integral != schwarzenberger_ok(c1, c2) && bad.is_none() {
                bad = Some(format!("(c1,c2) = ({c1},{c2})"));
            }
        }
    }
    r.push(
        Check::new(
            "schwarzenberger_scan",
            bad.is_none(),
            "c1 c2 even iff chi integral on P3, c1,c2 in -5..5",
            if bad.is_none() { "matches" } else { "mismatch" },
        )
        .with_witness(bad),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_complete_for_small_degrees() {
        assert_eq!(enumerate_curves(1).len(), 1);
        assert_eq!(enumerate_curves(2).len(), 2);
        // {(3,1)},{(3,0)},{(2,0),(1,0)},{(1,0)^3}
        assert_eq!(enumerate_curves(3).len(), 4);
        for z in enumerate_curves(6) {
            assert_eq!(z.degree(), 6);
        }
    }
}

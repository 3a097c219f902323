use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vglab::algebra::{interpolate_form, projectively_equal, rat, Form, ProjPoint, Rat};
use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::{cohomology_table, h0_basis, FreePresentation};
use vglab::chow::{
    chern_sym2_omega1_p2, chow_inv, chow_mul, euler_char_p3, schwarzenberger_ok, ChowClass,
};
use vglab::plucker::{
    check_embedding, join_map, plucker_interpolated, plucker_symbolic_det, quotient_line_at,
    verify_plucker_relations,
};
use vglab::verify::{
    abc_solutions, chi_contradiction_omega, min_pa_reduced, omega_filter, run_case,
    smooth_z_oracle, stratify, unions_with_chi, CurveDatum, RunOptions,
};
use vglab::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// `binom(a + n, n)` as an exact rational, for any integer `a`.
fn chi_o(n: i64, a: i64) -> Rat {
    let mut num = rat(1);
    let mut den = rat(1);
    for i in 1..=n {
        num *= rat(a + i);
        den *= rat(i);
    }
    num / den
}

/// Rank-2 plane bundle: `chi = 2 + 3c1/2 + (c1^2 - 2c2)/2` after twisting.
fn chi_plane(c1: i64, c2: i64, m: i64) -> Rat {
    let c1m = c1 + 2 * m;
    let c2m = c2 + c1 * m + m * m;
    rat(2) + rat(3 * c1m) / rat(2) + rat(c1m * c1m - 2 * c2m) / rat(2)
}

fn pres(id: CaseId) -> Result<FreePresentation, String> {
    catalog::presentation(id).map_err(|e| format!("{id}: {e}"))
}

fn embedding_cases() -> Vec<CaseId> {
    CaseId::all()
        .into_iter()
        .filter(|id| id.case.is_embedding())
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let opts = RunOptions::default();
    ensure(
        (
            opts.base_points,
            opts.pairs,
            opts.jacobian_points,
            opts.lines,
        ) == (200, 100, 50, 20),
        "default sample sizes",
    )?;
    let ids = embedding_cases();
    ensure(ids.len() == 12, format!("{} embedding cases", ids.len()))?;
    for id in &ids {
        let r = run_case(*id, &opts);
        for name in [
            "degree_3",
            "plucker_relations",
            "base_point_free",
            "injective",
            "immersive",
            "splitting_types",
        ] {
            let c = r.check(name).ok_or(format!("{id}: missing {name}"))?;
            ensure(c.passed, format!("{id}: {name} computed {}", c.computed))?;
        }
        ensure(r.passed, format!("{id}: report failed\n{r}"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(120), format!("took {t:?}"))?;
    Ok(format!(
        "{} cases verified in {:.1}s",
        ids.len(),
        t.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let golden = [
        (Case::C4a, 5),
        (Case::C4b, 5),
        (Case::C4c, 6),
        (Case::C4d, 7),
        (Case::C3, 8),
        (Case::C2, 8),
        (Case::C1b, 9),
        (Case::C1a, 11),
    ];
    for (case, h0) in golden {
        let p = pres(CaseId::plane(case))?;
        let t = cohomology_table(&p, [0]).map_err(|e| e.to_string())?;
        ensure(
            t.h(0, 0) == Some(h0),
            format!("{}: h0 {:?}", case.label(), t.h(0, 0)),
        )?;
        let s = h0_basis(&p).map_err(|e| e.to_string())?;
        let map = plucker_symbolic_det(&p, &s).map_err(|e| e.to_string())?;
        ensure(
            map.target == h0 - 1,
            format!("{}: Gr(1,{})", case.label(), map.target),
        )?;
    }
    Ok("h0 and Gr(1, h0-1) for 8 cases; 1a: 11 sections, lines in P^10".into())
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for id in CaseId::all() {
        let p = pres(id)?;
        let cd = p.chern_data();
        let t = cohomology_table(&p, -5..=5).map_err(|e| e.to_string())?;
        for row in &t.rows {
            let m = row.twist;
            let oracle = match (id.n, id.case) {
                (2, _) => chi_plane(cd.c1, cd.c2, m),
                (n, Case::C1a) => chi_o(n as i64, m) + chi_o(n as i64, 3 + m),
                (n, _) => chi_o(n as i64, 1 + m) + chi_o(n as i64, 2 + m),
            };
            ensure(
                rat(row.euler_characteristic()) == oracle,
                format!("{id} m={m}: {} vs {oracle}", row.euler_characteristic()),
            )?;
            count += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x3);
    for _ in 0..50 {
        let (a, b, m) = (
            rng.gen_range(-6..=6),
            rng.gen_range(-6..=6),
            rng.gen_range(-6..=6),
        );
        let split = chi_o(3, a + m) + chi_o(3, b + m);
        ensure(
            euler_char_p3(a + b, a * b, m) == split,
            format!("P3 cubic at a={a} b={b} m={m}"),
        )?;
    }
    Ok(format!("{count} table rows, 50 P3 triples"))
}

fn criterion_4() -> Outcome {
    let c = ChowClass::from_i64(2, &[1, 3, 6]);
    let inv = chow_inv(&c).map_err(|e| e.to_string())?;
    ensure(
        inv == ChowClass::from_i64(2, &[1, -3, 3]),
        format!("inverse {inv}"),
    )?;
    ensure(
        chern_sym2_omega1_p2() == ChowClass::from_i64(2, &[1, -3, 6]),
        "c(S^2 Omega(1))",
    )?;
    let q = chow_mul(
        &ChowClass::linear(3, 2),
        &chow_inv(&ChowClass::linear(3, -1)).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    ensure(
        q.coeff_i64(3) == 3,
        format!("t^3 coefficient {}", q.coeff_i64(3)),
    )?;
    ensure(
        pres(CaseId::plane(Case::C2))?.chern_data().c2 == 3,
        "c2 case 2",
    )?;
    ensure(
        pres(CaseId::plane(Case::Neg33))?.chern_data().c2 == 7,
        "c2 neg-3.3",
    )?;
    let chi = chi_contradiction_omega();
    ensure((chi.chi, chi.forced_h1) == (5, -1), format!("{chi:?}"))?;
    ensure(chi_plane(3, 6, 0) == rat(5), "chi oracle")?;
    Ok("inverse, Sym2, series, c2 values, chi = 5 with h1 = -1".into())
}

fn criterion_5() -> Outcome {
    for d in [2, 4, 6] {
        let v = smooth_z_oracle(d);
        ensure(
            !v.feasible && v.m_lower > v.m_upper,
            format!("d={d}: {v:?}"),
        )?;
    }
    let z = |c: &[(u32, u32)]| CurveDatum::new(c.to_vec());
    let expected: BTreeSet<CurveDatum> = [
        z(&[(2, 0), (2, 0), (2, 0)]),
        z(&[(3, 0), (2, 0), (1, 0)]),
        z(&[(3, 1), (1, 0), (1, 0), (1, 0)]),
        z(&[(4, 0), (1, 0), (1, 0)]),
    ]
    .into();
    let six = unions_with_chi(6, 3);
    ensure(six.len() == 4, format!("{} unions", six.len()))?;
    ensure(
        six.iter().cloned().collect::<BTreeSet<_>>() == expected,
        "the four unions",
    )?;
    ensure(
        omega_filter(&six) == vec![z(&[(2, 0), (2, 0), (2, 0)])],
        "three conics",
    )?;
    ensure(
        omega_filter(&unions_with_chi(4, 2)) == vec![z(&[(2, 0), (2, 0)])],
        "two conics",
    )?;
    let abc: BTreeSet<_> = abc_solutions(-5, 4).into_iter().collect();
    ensure(abc == [(6, 2, 2), (6, 1, 3)].into(), format!("{abc:?}"))?;
    ensure(min_pa_reduced(4) == -3, "min p_a")?;
    for c1 in -5..=5i64 {
        for c2 in -5..=5i64 {
            ensure(
                schwarzenberger_ok(c1, c2) == ((c1 * c2).rem_euclid(2) == 0),
                format!("parity at ({c1},{c2})"),
            )?;
        }
    }
    Ok("smooth Z bounds, unions, (a,b,c), min p_a, parity scan".into())
}

fn criterion_6() -> Outcome {
    let s = stratify(200, 1);
    ensure(
        s.type4_h0_zero * 100 >= 95 * 200,
        format!("{}/200 type 4", s.type4_h0_zero),
    )?;
    let r = s.report();
    for name in ["type_1_representative", "type_3_representative"] {
        let c = r.check(name).ok_or(name)?;
        ensure(c.passed, format!("{name}: {}", c.computed))?;
    }
    let witness = r
        .check("type_3_representative")
        .and_then(|c| c.witness.clone());
    Ok(format!(
        "{}/200 open stratum, type 3 witness {}",
        s.type4_h0_zero,
        witness.unwrap_or_default()
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7);
    for id in CaseId::all() {
        let p = pres(id)?;
        let s = h0_basis(&p).map_err(|e| e.to_string())?;
        let det = plucker_symbolic_det(&p, &s).map_err(|e| e.to_string())?;
        let fit = plucker_interpolated(&p, &s, 3).map_err(|e| format!("{id}: {e}"))?;
        ensure(
            det.proportional_to(&fit).is_some(),
            format!("{id}: maps differ"),
        )?;
        for _ in 0..50 {
            let x = ProjPoint::random(&mut rng, id.n);
            let l = quotient_line_at(&p, &s, &x).map_err(|e| e.to_string())?;
            ensure(
                projectively_equal(&l.plucker_vector(), &det.eval(x.coords())),
                format!("{id}: line at {x}"),
            )?;
        }
    }
    for n in 1..=4 {
        for a in [0u32, 1] {
            let split = FreePresentation::split(n, &[a as i64, 3 - a as i64]);
            let det = plucker_symbolic_det(&split, &h0_basis(&split).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(
                det == join_map(n, a, 3).map_err(|e| e.to_string())?,
                format!("join n={n} a={a}"),
            )?;
        }
    }
    for n in 1..=3 {
        for _ in 0..5 {
            let f = catalog::random_form(&mut rng, n, 3);
            let samples: Vec<(ProjPoint, Rat)> = (0..30)
                .map(|_| {
                    let x = ProjPoint::random(&mut rng, n);
                    let v = f.eval(x.coords());
                    (x, v)
                })
                .collect();
            let g = interpolate_form(n, 3, &samples).map_err(|e| e.to_string())?;
            ensure(g == f, format!("round trip on P{n}"))?;
        }
    }
    Ok("det = interpolated and pointwise on 13 cases, join = det, cubic round trips".into())
}

fn criterion_8() -> Outcome {
    let p = catalog::cyclic_cubic_quotient().map_err(|e| e.to_string())?;
    let map = plucker_symbolic_det(&p, &h0_basis(&p).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(map.target == 2, "target Gr(1,2)")?;
    let rep = check_embedding(&map, 200, 200, 50, 8);
    ensure(
        !rep.injective.passed && rep.injective.witness.is_some(),
        "no collision found",
    )?;

    let p = pres(CaseId::plane(Case::C4a))?;
    let map = plucker_symbolic_det(&p, &h0_basis(&p).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let x0 = Form::var(3, 0);
    let bumped = map.coord(1, 3) + &(&(&x0 * &x0) * &x0);
    let bad = map.with_coord(1, 3, bumped).map_err(|e| e.to_string())?;
    ensure(
        verify_plucker_relations(&map) && !verify_plucker_relations(&bad),
        "perturbation",
    )?;

    let quad = FreePresentation::split(2, &[0, 2]);
    let s = h0_basis(&quad).map_err(|e| e.to_string())?;
    match plucker_interpolated(&quad, &s, 3) {
        Err(Error::InterpolationInconsistent { .. }) => {}
        other => return Err(format!("degree-2 map at degree 3 gave {other:?}")),
    }
    Ok(format!(
        "collision after {} pairs, perturbed map rejected, degree mismatch raised",
        rep.injective.checked
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("named cases embed", criterion_1),
        ("golden h0 and targets", criterion_2),
        ("cohomology vs Riemann-Roch", criterion_3),
        ("Chern golden numbers", criterion_4),
        ("obstruction oracles", criterion_5),
        ("stratification", criterion_6),
        ("oracle equivalences", criterion_7),
        ("negative controls", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

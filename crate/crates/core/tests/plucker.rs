use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vglab::algebra::{projectively_equal, ProjPoint};
use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::{h0_basis, FreePresentation};
use vglab::plucker::*;
use vglab::Error;

#[test]
fn all_cases_symbolic_vs_pointwise() {
    for id in CaseId::all() {
        let t = Instant::now();
        let p = catalog::presentation(id).unwrap();
        let s = h0_basis(&p).unwrap();
        let sym = plucker_symbolic_det(&p, &s).unwrap();
        assert_eq!(sym.target + 1, s.len());
        assert!(
            sym.coords().iter().all(|f| f.is_zero() || f.degree() == 3),
            "{id}"
        );
        let t_sym = t.elapsed();
        let interp = plucker_interpolated(&p, &s, 3).unwrap();
        assert!(sym.proportional_to(&interp).is_some(), "{id}");
        let t_int = t.elapsed();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = ProjPoint::random(&mut rng, id.n);
            let l = quotient_line_at(&p, &s, &x).unwrap();
            assert!(
                projectively_equal(&l.plucker_vector(), &sym.eval(x.coords())),
                "{id} at {x}"
            );
        }
        let t_line = t.elapsed();
        assert!(verify_plucker_relations(&sym), "{id}");
        let t_rel = t.elapsed();
        let rep = check_embedding(&sym, 200, 100, 50, 1);
        let t_emb = t.elapsed();
        if id.case.is_embedding() {
            assert!(rep.passed(), "{id}: {rep}");
        }
        eprintln!("{id}: sym {t_sym:?} int {t_int:?} line {t_line:?} rel {t_rel:?} emb {t_emb:?}");
    }
}

#[test]
fn join_equals_determinant() {
    for n in 1..=4 {
        for a in [0u32, 1] {
            let p = FreePresentation::split(n, &[a as i64, 3 - a as i64]);
            let s = h0_basis(&p).unwrap();
            let det = plucker_symbolic_det(&p, &s).unwrap();
            assert_eq!(det, join_map(n, a, 3).unwrap(), "n={n} a={a}");
        }
    }
}

#[test]
fn negative_controls() {
    let p = catalog::cyclic_cubic_quotient().unwrap();
    let s = h0_basis(&p).unwrap();
    let m = plucker_symbolic_det(&p, &s).unwrap();
    assert_eq!(m.target, 2);
    let rep = check_embedding(&m, 200, 200, 50, 3);
    assert!(!rep.injective.passed);
    eprintln!("{rep}");

    let p = FreePresentation::split(2, &[0, 2]);
    let s = h0_basis(&p).unwrap();
    assert!(matches!(
        plucker_interpolated(&p, &s, 3),
        Err(Error::InterpolationInconsistent { .. })
    ));
    assert!(plucker_interpolated(&p, &s, 2).is_ok());

    let p = catalog::presentation(CaseId::plane(Case::C4a)).unwrap();
    let m = plucker_symbolic_det(&p, &h0_basis(&p).unwrap()).unwrap();
    let f = m.coord(0, 1).clone();
    let x0 = vglab::algebra::Form::var(3, 0);
    let bad = m.with_coord(0, 1, &f + &(&(&x0 * &x0) * &x0)).unwrap();
    assert!(!verify_plucker_relations(&bad));
}

#[test]
fn alternates_interpolate() {
    for c in [Case::C4b, Case::C4c, Case::C4d] {
        let alt = catalog::omega_alternate(c).unwrap().expand().unwrap();
        let canon = catalog::presentation(CaseId::plane(c)).unwrap();
        let a = plucker_interpolated(&alt, &h0_basis(&alt).unwrap(), 3).unwrap();
        let b = plucker_symbolic_det(&canon, &h0_basis(&canon).unwrap()).unwrap();
        assert_eq!(a.target, b.target);
        assert!(verify_plucker_relations(&a));
        assert!(check_embedding(&a, 50, 50, 20, 2).passed());
    }
}

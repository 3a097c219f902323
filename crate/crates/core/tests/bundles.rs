use vglab::bundle::catalog::{self, Case, CaseId};
use vglab::bundle::*;
use vglab::chow::{euler_char_p2, euler_char_rank2, ChernData};

fn case(c: Case) -> FreePresentation {
    catalog::presentation(CaseId::plane(c)).unwrap()
}

#[test]
fn chern_data_of_cases() {
    let expect = [
        (Case::C2, 3),
        (Case::C3, 3),
        (Case::C4a, 6),
        (Case::C4b, 6),
        (Case::C4c, 5),
        (Case::C4d, 4),
        (Case::Neg33, 7),
    ];
    for (c, c2) in expect {
        let cd = case(c).chern_data();
        assert_eq!(
            cd,
            ChernData {
                rank: 2,
                c1: 3,
                c2,
                c3: None
            },
            "{c:?}"
        );
        assert_eq!(
            case(c).chern_class(),
            catalog::symbolic_chern(CaseId::plane(c))
        );
    }
}

#[test]
fn h0_of_cases() {
    let expect = [
        (Case::C1a, 11),
        (Case::C1b, 9),
        (Case::C2, 8),
        (Case::C3, 8),
        (Case::C4a, 5),
        (Case::C4b, 5),
        (Case::C4c, 6),
        (Case::C4d, 7),
        (Case::Neg33, 4),
    ];
    for (c, h0) in expect {
        let p = case(c);
        let t = cohomology_table(&p, -5..=5).unwrap();
        assert_eq!(t.h(0, 0), Some(h0), "{c:?}");
        let cd = p.chern_data();
        for r in &t.rows {
            assert_eq!(
                r.euler_characteristic(),
                euler_char_p2(cd.c1, cd.c2, r.twist),
                "{c:?} {}",
                r.twist
            );
        }
        assert_eq!(h0_basis(&p).unwrap().len(), h0);
    }
}

#[test]
fn alternates_match() {
    for c in [Case::C4b, Case::C4c, Case::C4d] {
        let alt = catalog::omega_alternate(c).unwrap().expand().unwrap();
        assert_eq!(alt.length(), 2);
        let canon = case(c);
        assert_eq!(alt.chern_data(), canon.chern_data());
        assert_eq!(
            cohomology_table(&alt, -5..=5).unwrap(),
            cohomology_table(&canon, -5..=5).unwrap(),
            "{c:?}"
        );
    }
}

#[test]
fn higher_ambient_split() {
    for n in [1usize, 3, 4] {
        let p = catalog::presentation(CaseId { case: Case::C1a, n }).unwrap();
        let t = cohomology_table(&p, -6..=3).unwrap();
        for r in &t.rows {
            assert_eq!(
                vglab::algebra::Rat::from_integer(r.euler_characteristic().into()),
                euler_char_rank2(n, 3, 0, r.twist)
            );
        }
    }
}

#[test]
fn stratification_types() {
    assert_eq!(resolution_type_M36(&case(Case::C4a)).unwrap().kind, 4);
    assert_eq!(resolution_type_M36(&case(Case::C4b)).unwrap().kind, 1);
    let t3 = catalog::type3_representative(3).unwrap();
    let r = resolution_type_M36(&t3).unwrap();
    assert_eq!((r.kind, r.h0_e_minus_1), (3, 2));
    let probes = t3.degeneracy_probes(4, 1);
    let v = is_globally_generated(&t3, 10, &probes, 1).unwrap();
    assert!(!v.generated);
}

#[test]
fn stability_flags() {
    assert!(is_stable_c1_3(&case(Case::Neg33)).unwrap());
    assert!(!is_stable_c1_3(&case(Case::C2)).unwrap());
    assert!(!is_stable_c1_3(&FreePresentation::split(2, &[1, 2])).unwrap());
}

#[test]
fn jumping_line() {
    let p = catalog::jumping_line_toy().unwrap();
    let a = vglab::algebra::ProjPoint::from_ints(&[1, 0, 0]).unwrap();
    let b = vglab::algebra::ProjPoint::from_ints(&[0, 1, 0]).unwrap();
    let st = restrict_to_line(&p, &a, &b).unwrap();
    assert_eq!((st.a, st.b), (-1, 4));
}

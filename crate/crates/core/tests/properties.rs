use proptest::prelude::*;
use vglab::algebra::{basis, interpolate_form, rat, Form, ProjPoint, Rat, RatMatrix};
use vglab::bundle::{h_vector, FreePresentation};
use vglab::chow::{chow_inv, chow_mul, ChowClass};

fn form(n: usize, d: u32, coeffs: &[i64]) -> Form {
    let len = basis(n, d as i64).len();
    let c: Vec<Rat> = coeffs.iter().cycle().take(len).map(|&v| rat(v)).collect();
    Form::from_coefficient_vector(n + 1, d, &c)
}

fn binom(top: i64, k: i64) -> i64 {
    if top < k || top < 0 {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (top - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chow_inverse(n in 1usize..5, tail in prop::collection::vec(-9i64..10, 4)) {
        let mut c = vec![1];
        c.extend(&tail[..n]);
        let a = ChowClass::from_i64(n, &c);
        let inv = chow_inv(&a).unwrap();
        prop_assert_eq!(chow_mul(&a, &inv).unwrap(), ChowClass::one(n));
    }

    #[test]
    fn form_ring_laws(
        f in prop::collection::vec(-5i64..6, 1..10),
        g in prop::collection::vec(-5i64..6, 1..10),
        x in prop::collection::vec(-7i64..8, 3),
    ) {
        let (f, g) = (form(2, 2, &f), form(2, 1, &g));
        let h = form(2, 2, &[1, -1, 2]);
        let x: Vec<Rat> = x.iter().map(|&v| rat(v)).collect();
        prop_assert_eq!(f.try_add(&h).unwrap().eval(&x), f.eval(&x) + h.eval(&x));
        prop_assert_eq!(f.try_mul(&g).unwrap().eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!(f.try_mul(&g).unwrap(), g.try_mul(&f).unwrap());
        prop_assert!(f.is_zero() || g.is_zero() || f.try_add(&g).is_err());
    }

    #[test]
    fn interpolation_round_trip(
        n in 1usize..4,
        d in 1u32..4,
        coeffs in prop::collection::vec(-9i64..10, 1..12),
        seed in any::<u64>(),
    ) {
        use rand::SeedableRng;
        let f = form(n, d, &coeffs);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<(ProjPoint, Rat)> = (0..basis(n, d as i64).len() + 6)
            .map(|_| {
                let x = ProjPoint::random(&mut rng, n);
                let v = f.eval(x.coords());
                (x, v)
            })
            .collect();
        prop_assert_eq!(interpolate_form(n, d, &samples).unwrap(), f);
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-4i64..5, 5), 1..6)) {
        let m = RatMatrix::from_i64(&rows);
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|e| *e == rat(0)));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn split_cohomology(n in 1usize..5, a in -6i64..6, b in -6i64..6, m in -6i64..6) {
        let h = h_vector(&FreePresentation::split(n, &[a, b]), m).unwrap();
        let n = n as i64;
        let top = |e: i64| binom(-e - 1, n);
        let mut want = vec![0usize; n as usize + 1];
        want[0] = (binom(a + m + n, n) + binom(b + m + n, n)) as usize;
        want[n as usize] += (top(a + m) + top(b + m)) as usize;
        prop_assert_eq!(h, want);
    }
}

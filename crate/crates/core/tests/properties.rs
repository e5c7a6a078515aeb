//! Property tests for the algebra, curve and reconstruction invariants.

mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_forge::algebra::{format_rational, int, parse_rational, rat, Matrix, RatFuncX, Rational, UniPoly, YPoly, YRatFunc};
use spectral_forge::curve::{local_series, numeric_sheets, parse_curve, SpectralCurve};
use spectral_forge::fixtures;
use spectral_forge::reconstruction::reconstruct;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(UniPoly::new)
}

fn naive_det(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 1 {
        return m[(0, 0)].clone();
    }
    (0..n).map(|c| {
        let s = if c % 2 == 0 { int(1) } else { int(-1) };
        s * &m[(0, c)] * naive_det(&m.minor(0, c))
    })
    .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residues_sum_to_zero(
        num in prop::collection::vec((poly(2), poly(1)), 1..5),
        poles in prop::collection::btree_map(rational(), 1u32..=3, 1..4),
    ) {
        let coeffs: Vec<RatFuncX> = num
            .into_iter()
            .map(|(a, b)| RatFuncX::new(a, if b.is_zero() { UniPoly::one() } else { &b * &b + UniPoly::one() }))
            .collect();
        let f = YRatFunc::new(YPoly::new(coeffs), poles.clone(), YPoly::one());
        let mut total = f.residue_at_infinity();
        for c in poles.keys() {
            total = &total + &f.residue_at(c).unwrap();
        }
        prop_assert_eq!(total, RatFuncX::zero());
    }

    #[test]
    fn exact_divide_linear_reconstructs(p in poly(5), r in rational()) {
        let q = UniPoly::new(vec![-r.clone(), int(1)]);
        let f = &p * &q;
        prop_assert_eq!(&f.exact_divide_linear(&r).unwrap() * &q, f);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(f in poly(4), g in poly(3), shared in prop::option::of(rational())) {
        prop_assume!(!f.is_constant() || shared.is_some());
        prop_assume!(!g.is_constant() || shared.is_some());
        let (f, g) = match &shared {
            Some(r) => {
                let l = UniPoly::linear(r);
                (&f * &l, &g * &l)
            }
            None => (f, g),
        };
        prop_assume!(!f.is_zero() && !g.is_zero());
        let res = UniPoly::resultant(&f, &g).unwrap();
        prop_assert_eq!(res == int(0), !f.gcd(&g).is_constant());
    }

    #[test]
    fn adjugate_identity(n in 2usize..=3, entries in prop::collection::vec(rational(), 9)) {
        let m = Matrix::from_fn(n, n, |r, c| entries[r * 3 + c].clone());
        let (det, adj) = m.det_adjugate();
        prop_assert_eq!(&det, &naive_det(&m));
        prop_assert_eq!(m.mul(&adj), Matrix::identity(n).scale(&det));
        prop_assert_eq!(m.det_bareiss(), det);
    }

    #[test]
    fn canonical_rational_storage(a in rational(), b in rational(), k in 1i64..7) {
        // two routes to the same value
        let one = (&a + &b) * int(k) / int(k);
        let two = &b - (-a.clone());
        prop_assert_eq!(format_rational(&one), format_rational(&two));
        prop_assert_eq!(one.numer(), two.numer());
        prop_assert_eq!(one.denom(), two.denom());
        prop_assert!(one.denom() > &0.into());
        prop_assert_eq!(parse_rational(&format_rational(&one)).unwrap(), one);
    }
}

fn fixture_curves() -> Vec<(SpectralCurve, Vec<spectral_forge::curve::CurvePoint>)> {
    vec![
        (fixtures::example1().unwrap().curve, fixtures::example1_points()),
        (fixtures::example2().unwrap().curve, fixtures::example2_points()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn local_series_resubstitutes(which in 0usize..2, i in 0usize..14, order in 1usize..6) {
        let (curve, pts) = &fixture_curves()[which];
        let p = &pts[i % pts.len()];
        let Ok(c) = local_series(curve, p, order) else {
            // branch point of the x projection
            prop_assert_eq!(curve.e_y().eval(&p.x, &p.y), int(0));
            return Ok(());
        };
        let t = UniPoly::new(vec![p.x.clone(), int(1)]);
        let y = UniPoly::new(c);
        let mut e = UniPoly::zero();
        for (i, j, a) in curve.e().terms() {
            e = &e + &(&t.pow(i as usize) * &y.pow(j as usize)).scale(a);
        }
        // coefficient k of E(p.x + t, y(t)) in t
        for k in 0..=order {
            prop_assert_eq!(e.coeff(k), int(0), "order {} coefficient {}", order, k);
        }
    }

    #[test]
    fn numeric_sheets_match_vieta(which in 0usize..2, re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let (curve, _) = &fixture_curves()[which];
        let x = Complex64::new(re, im);
        let sh = numeric_sheets(curve, x).unwrap();
        let n = curve.n();
        let a = |j: usize| curve.a(j).eval_generic(&x);
        let an = a(n);
        prop_assume!(an.norm() > 1e-3);
        let sum: Complex64 = sh.roots.iter().sum();
        let prod: Complex64 = sh.roots.iter().product();
        let want_sum = -a(n - 1) / an;
        let want_prod = a(0) / an * if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((sum - want_sum).norm() <= 1e-9 * want_sum.norm().max(1.0));
        prop_assert!((prod - want_prod).norm() <= 1e-9 * want_prod.norm().max(1.0));
    }

    #[test]
    fn parse_print_round_trip(terms in prop::collection::btree_map((0u32..4, 0u32..4), rational(), 1..8)) {
        let text: Vec<String> = terms.iter().map(|((i, j), c)| format!("({})*x^{i}*y^{j}", format_rational(c))).collect();
        let e = parse_curve(&text.join(" + ")).unwrap();
        let canon = e.to_canonical_string();
        let again = parse_curve(&canon).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(again.to_canonical_string(), canon);
    }

    #[test]
    fn fixture_points_lie_on_curve(which in 0usize..2) {
        let data = if which == 0 { fixtures::example1().unwrap() } else { fixtures::example2().unwrap() };
        let e = data.curve.e();
        for d in data.divisor.points.iter().chain([&data.p_o]) {
            prop_assert_eq!(e.eval(&d.x, &d.y), int(0));
        }
        for w in &data.preimages {
            prop_assert_eq!(e.eval(&data.z_o, w), int(0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn random_monic_reconstruction(seed in any::<u64>()) {
        let data = common::random_monic(&mut ChaCha8Rng::seed_from_u64(seed));
        let l = reconstruct(&data).unwrap();
        prop_assert!(l.verify_characteristic().pass, "{}", data.curve.e().to_canonical_string());
        prop_assert!(l.verify_diagonal());
        let pl = l.verify_pole_locus();
        prop_assert!(pl.pass && pl.polynomial);
    }
}

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{int, Ring};
use crate::fixtures;
use crate::reconstruction::reconstruct;

fn setup() -> (LaxMatrix, CauchyKernel) {
    let data = fixtures::example1().unwrap();
    (reconstruct(&data).unwrap(), CauchyKernel::new(&data).unwrap())
}

fn random_points(lax: &LaxMatrix, count: usize, seed: u64) -> Vec<(Complex64, Complex64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let x = Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
            numeric_point(&lax.data.curve, x, rng.gen_range(0..3)).unwrap()
        })
        .collect()
}

#[test]
fn exact_projector_properties() {
    let (lax, kernel) = setup();
    for p in fixtures::example1_points() {
        let pi = match projector_exact(&lax, &p) {
            Ok(pi) => pi,
            Err(Error::Pole(_)) => continue,
            Err(e) => panic!("{p}: {e}"),
        };
        assert_eq!(pi.trace(), int(1), "{p}");
        assert!(pi.idempotency().pass, "{p}");
        let l = lax_at(&lax, &p.x).unwrap();
        let m = Matrix::from_fn(3, 3, |r, c| if r == c { &p.y - &l[(r, c)] } else { -l[(r, c)].clone() });
        assert!(pi.matrix.mul(&m).is_zero());
        let k = projector_kernel_exact(&kernel, &p).unwrap();
        assert_eq!(k.matrix, pi.matrix, "{p}");
    }
}

#[test]
fn projector_at_normalization_points_is_elementary() {
    let (lax, kernel) = setup();
    for (a, z) in lax.data.normalization_points().iter().enumerate() {
        let want = Matrix::from_fn(3, 3, |r, c| if r == a && c == a { int(1) } else { int(0) });
        assert_eq!(projector_exact(&lax, z).unwrap().matrix, want);
        assert_eq!(projector_kernel_exact(&kernel, z).unwrap().matrix, want);
    }
}

#[test]
fn numeric_projector_identities() {
    let (lax, kernel) = setup();
    for (x, y) in random_points(&lax, 10, 7) {
        let pi = projector(&lax, &x, &y).unwrap();
        assert!(pi.idempotency().pass);
        assert!((pi.trace() - Complex64::new(1.0, 0.0)).norm() < NUMERIC_TOLERANCE);
        assert!(projector_routes(&lax, &kernel, &x, &y).unwrap().pass);
    }
}

#[test]
fn sheet_sum_numeric() {
    let (lax, kernel) = setup();
    let pts = random_points(&lax, 20, 11);
    for w in pts.windows(2) {
        let r = sheet_sum_identity(&kernel, (&w[0].0, &w[0].1), (&w[1].0, &w[1].1)).unwrap();
        assert!(r.pass, "{r:?}");
    }
}

#[test]
fn sheet_sum_exact() {
    let (_, kernel) = setup();
    let pts = fixtures::example1_points();
    for p in &pts {
        for q in &pts {
            let zo = &kernel.data().z_o;
            if p.x != q.x && p.x != *zo && q.x != *zo && *p != kernel.data().p_o && !kernel.data().divisor.points.contains(q) {
                let r = sheet_sum_identity_exact(&kernel, p, q).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }
}

#[test]
fn bidifferential_symmetric_and_factorized() {
    let (lax, kernel) = setup();
    let pts = random_points(&lax, 6, 3);
    for w in pts.windows(2) {
        let (p, q) = ((&w[0].0, &w[0].1), (&w[1].0, &w[1].1));
        let b1 = bidifferential(&lax, &kernel, p, q).unwrap();
        let b2 = bidifferential(&lax, &kernel, q, p).unwrap();
        assert!(b1.report.pass && b2.report.pass, "{:?} {:?}", b1.report, b2.report);
        let (v1, v2) = (
            projector(&lax, p.0, p.1).unwrap().matrix.mul(&projector(&lax, q.0, q.1).unwrap().matrix).trace(),
            projector(&lax, q.0, q.1).unwrap().matrix.mul(&projector(&lax, p.0, p.1).unwrap().matrix).trace(),
        );
        assert!((v1 - v2).norm() <= 1e-9 * v1.norm().max(1.0));
    }
    let (x, y) = pts[0];
    assert!(bidifferential(&lax, &kernel, (&x, &y), (&x, &(y + 1.0))).is_err());
}

#[test]
fn bidifferential_double_pole_normalization() {
    let (lax, kernel) = setup();
    let pts = fixtures::example1_points();
    for q in [&pts[0], &pts[5], &pts[8]] {
        let (sk, sp) = bidifferential_series(&lax, &kernel, q, 6).unwrap();
        for s in [sk, sp] {
            assert!(s.valuation().unwrap() >= 0, "{q}: {s:?}");
            assert_eq!(s.coeff(0).unwrap(), int(1), "{q}");
        }
    }
}

#[test]
fn correlators_match_kernel_cycles() {
    let (lax, kernel) = setup();
    for n in [3usize, 4] {
        let pts = random_points(&lax, n, 100 + n as u64);
        let w = correlator(&lax, &kernel, &pts).unwrap();
        assert!(w.report.pass, "{:?}", w.report);
        let mut rotated = pts.clone();
        rotated.rotate_left(1);
        let w2 = correlator(&lax, &kernel, &rotated).unwrap();
        assert!(IdentityReport::compare::<Complex64>("cyclic", vec![], &parse_c(&w.kernel_cycles), &parse_c(&w2.kernel_cycles)).pass);
    }
}

#[test]
fn fixed_order_vanishes_for_three_points() {
    let (lax, kernel) = setup();
    let pts = random_points(&lax, 3, 42);
    let w = correlator(&lax, &kernel, &pts).unwrap();
    assert!(parse_c(&w.fixed_order).norm() <= 1e-9 * parse_c(&w.value).norm());
}

#[test]
fn permutation_count() {
    assert_eq!(permutations(4).len(), 24);
    assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
}

fn parse_c(s: &str) -> Complex64 {
    let s = s.trim_end_matches('i');
    let split = s[1..].rfind(['+', '-']).map(|i| i + 1).unwrap();
    let (re, im) = s.split_at(split);
    Complex64::new(re.parse().unwrap(), im.parse().unwrap())
}

#[test]
fn ring_pow_is_used() {
    assert_eq!(<Rational as Ring>::pow(&int(2), 3), int(8));
}

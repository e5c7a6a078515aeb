use proptest::prelude::*;

use super::*;
use crate::algebra::{QMatrix, Ring};
use crate::curve::{Orientation, SpectralCurve};
use crate::fixtures;

fn kernel1() -> CauchyKernel {
    CauchyKernel::new(&fixtures::example1().unwrap()).unwrap()
}

/// Admissible second arguments: on the curve, off the divisor.
fn admissible(k: &CauchyKernel, pts: Vec<CurvePoint>) -> Vec<CurvePoint> {
    pts.into_iter().filter(|p| !k.data().divisor.points.contains(p)).collect()
}

/// Direct substitution into the orientation-Y seed with plain quotients.
fn omega_oracle(c: &SpectralCurve, p: &CurvePoint, q: &CurvePoint, o: &CurvePoint) -> Rational {
    let e = c.e();
    let an = c.leading();
    let t1 = e.eval(&q.x, &p.y) / ((&p.x - &q.x) * (&p.y - &q.y));
    let t2 = e.eval(&o.x, &p.y) / ((&p.x - &o.x) * (&p.y - &o.y));
    let d1 = (an.eval(&q.x) - an.eval(&p.x)) / (&q.x - &p.x);
    let d2 = (an.eval(&o.x) - an.eval(&p.x)) / (&o.x - &p.x);
    t1 - t2 + <Rational as Ring>::pow(&p.y, c.n() - 1) * (d1 - d2)
}

#[test]
fn coefficients_match_cramer_solve() {
    let k = kernel1();
    let data = k.data();
    let q = &data.normalization_points()[0];
    let (d1, d2) = (&data.divisor.points[0], &data.divisor.points[1]);
    let r1 = omega_oracle(&data.curve, d1, q, &data.p_o);
    let r2 = omega_oracle(&data.curve, d2, q, &data.p_o);
    // rows (1, d_y): [1 a; 1 b] [Q00; Q01] = [r1; r2]
    let (a, b) = (&d1.y, &d2.y);
    let det = b - a;
    let q00 = (&r1 * b - &r2 * a) / &det;
    let q01 = (&r2 - &r1) / &det;
    assert_eq!(k.q_coefficients(q).unwrap(), vec![q00, q01]);
}

#[test]
fn coefficients_vanish_at_base() {
    let k = kernel1();
    let p_o = k.data().p_o.clone();
    assert!(k.q_coefficients(&p_o).unwrap().iter().all(|c| c.is_zero()));
}

#[test]
fn zeros_at_divisor_and_base() {
    for data in [fixtures::example1().unwrap(), fixtures::example2().unwrap()] {
        let k = CauchyKernel::new(&data).unwrap();
        let pts = if data.curve.e() == fixtures::example1().unwrap().curve.e() {
            fixtures::example1_points()
        } else {
            fixtures::example2_points()
        };
        for q in admissible(&k, pts.clone()) {
            for d in &data.divisor.points {
                if *d != q {
                    assert_eq!(k.q_value(d, &q).unwrap(), int(0), "Q(d; {q})");
                }
            }
        }
        for p in pts {
            if p != data.p_o {
                assert_eq!(k.kernel_point(&p, &data.p_o).unwrap(), int(0), "K({p}, p_o)");
            }
        }
    }
}

#[test]
fn pole_and_branch_errors() {
    let k = kernel1();
    let q = k.data().normalization_points()[1].clone();
    assert!(matches!(k.kernel_point(&q, &q), Err(Error::Pole(_))));
    let d = k.data().divisor.points[0].clone();
    assert!(matches!(k.q_coefficients(&d), Err(Error::Pole(_))));
}

#[test]
fn residues_are_normalized() {
    for data in [fixtures::example1().unwrap(), fixtures::example2().unwrap()] {
        let k = CauchyKernel::new(&data).unwrap();
        for q in data.normalization_points() {
            let r = k.verify_residues(&q, 3).unwrap();
            assert_eq!((r.at_q.clone(), r.at_base.clone()), (int(1), int(-1)));
            assert!(r.pass);
        }
        // regular at a third point
        let q = &data.normalization_points()[0];
        let third = &data.normalization_points()[2];
        assert_eq!(k.residue(third, q, 3).unwrap(), int(0));
        assert_eq!(k.residue(&data.divisor.points[0], q, 3).unwrap(), int(0));
    }
}

#[test]
fn symbolic_routes_agree_with_pointwise() {
    let k = kernel1();
    let data = k.data();
    let pts = fixtures::example1_points();
    let q0 = data.normalization_points()[2].clone();
    let sp = k.symbolic_p(&q0).unwrap();
    let p0 = data.normalization_points()[0].clone();
    let sq = k.symbolic_q(&p0).unwrap();
    for p in &pts {
        if *p != q0 && *p != data.p_o {
            assert_eq!(sp.eval(&data.curve, p).unwrap(), k.q_value(p, &q0).unwrap(), "Q({p}; q0)");
        }
        if *p != p0 && !data.divisor.points.contains(p) {
            assert_eq!(sq.eval(&data.curve, p).unwrap(), k.q_value(&p0, p).unwrap(), "Q(p0; {p})");
        }
    }
    for d in &data.divisor.points {
        assert_eq!(sp.eval(&data.curve, d).unwrap(), int(0));
    }
    assert_eq!(sq.eval(&data.curve, &data.p_o).unwrap(), int(0));
}

#[test]
fn symbolic_shapes() {
    let k = kernel1();
    let data = k.data();
    let q0 = data.normalization_points()[1].clone();
    let sp = k.symbolic_p(&q0).unwrap();
    let poly = sp.q.as_ypoly().expect("polynomial in y");
    assert!(poly.degree().unwrap() < data.n());
    for c in poly.coeffs() {
        let (roots, complete) = c.den().rational_roots();
        assert!(complete);
        for (r, _) in roots {
            assert!(r == q0.x || r == data.p_o.x, "unexpected x-pole {r}");
        }
    }
    let sq = k.symbolic_q(&data.normalization_points()[0]).unwrap();
    let mut allowed: Vec<Rational> = data.divisor.points.iter().map(|d| d.y.clone()).collect();
    allowed.push(data.normalization_points()[0].y.clone());
    for c in sq.q.linear_poles().keys() {
        assert!(allowed.contains(c), "unexpected y-pole {c}");
    }
    assert!(sq.q.other_factor().degree() == Some(0));
}

#[test]
fn orientations_agree() {
    // the first example satisfies both leading-coefficient conditions
    let base = fixtures::example1().unwrap();
    let cx = SpectralCurve::analyze_with(base.curve.e().clone(), Some(Orientation::X)).unwrap();
    let data_x = SpectralData { curve: cx, ..base.clone() };
    let ky = CauchyKernel::new(&base).unwrap();
    let kx = CauchyKernel::new(&data_x).unwrap();
    assert_eq!(kx.sign(), &int(-1));
    let pts = admissible(&ky, fixtures::example1_points());
    for p in &pts {
        for q in &pts {
            if p != q && *p != base.p_o {
                assert_eq!(ky.kernel_point(p, q).unwrap(), kx.kernel_point(p, q).unwrap(), "K({p}, {q})");
            }
        }
    }
    assert!(kx.verify_residues(&base.normalization_points()[0], 3).unwrap().pass);
}

#[test]
fn transition_cocycle() {
    let k = kernel1();
    let p = fixtures::example1_points()[0].clone();
    let f = |l, m| k.transition_function(l, m, &p).unwrap();
    for l in 0..3 {
        assert_eq!(f(l, l), int(1));
        for m in 0..3 {
            assert_eq!(f(l, m) * f(m, l), int(1));
            for n in 0..3 {
                assert_eq!(f(l, m) * f(m, n), f(l, n));
            }
        }
    }
    assert!(k.transition_function(0, 5, &p).is_err());
}

#[test]
fn dy_trivialization() {
    let k = kernel1();
    let c = &k.data().curve;
    let q = k.data().normalization_points()[0].clone();
    let p = fixtures::example1_points()[4].clone();
    let kx = k.kernel_point(&p, &q).unwrap();
    let ky = k.kernel_point_dy(&p, &q).unwrap();
    // dx / dy = -E_x / E_y along the curve
    assert_eq!(ky, kx * (-(c.e_y().eval(&p.x, &p.y) / c.e_x().eval(&p.x, &p.y))));
}

#[test]
fn brill_noether_identity() {
    let k = kernel1();
    let s = k.system();
    assert_eq!(s.delta.mul(&s.delta_inv), QMatrix::identity(s.genus()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn q_coefficients_are_odd(i in 0usize..19, j in 0usize..19) {
        let data = fixtures::example2().unwrap();
        let k = CauchyKernel::new(&data).unwrap();
        let pts = fixtures::example2_points();
        let (q, base) = (&pts[i], &pts[j]);
        prop_assume!(q != base && !data.divisor.points.contains(q) && !data.divisor.points.contains(base));
        let a = k.q_coefficients_based(q, base).unwrap();
        let b = k.q_coefficients_based(base, q).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert_eq!(x + y, int(0));
        }
    }

    #[test]
    fn kernel_vanishes_on_divisor(i in 0usize..19) {
        let data = fixtures::example2().unwrap();
        let k = CauchyKernel::new(&data).unwrap();
        let q = fixtures::example2_points()[i].clone();
        prop_assume!(!data.divisor.points.contains(&q));
        for d in &data.divisor.points {
            prop_assert_eq!(k.kernel_point(d, &q).unwrap(), int(0));
        }
    }
}

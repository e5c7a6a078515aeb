//! Random spectral data for the integration tests.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spectral_forge::algebra::{format_rational, int, rat, Matrix, Rational};
use spectral_forge::curve::{parse_curve, CurvePoint, Divisor, SpectralCurve, SpectralData};

/// `c * x^i * y^j`.
type Term = (Rational, u32, u32);

/// `sum c * x^i * y^j` as parser input.
fn render(terms: &[Term]) -> String {
    terms.iter().map(|(c, i, j)| format!("({})*x^{i}*y^{j}", format_rational(c))).collect::<Vec<_>>().join(" + ")
}

fn small(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=3))
}

fn nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = small(rng, 4);
        if r != int(0) {
            return r;
        }
    }
}

/// One attempt: a curve monic in `y` with `z_o = 0` fibre `w_1..w_n`,
/// forced through `g + 1` random points (the divisor and `p_o`).
fn attempt(rng: &mut ChaCha8Rng) -> Option<SpectralData> {
    let cubic = rng.gen_bool(0.5);
    // fixed part, then the monomials solved for
    let (mut terms, free, genus): (Vec<Term>, Vec<(u32, u32)>, usize) = if cubic {
        let w: Vec<Rational> = (0..3).map(|_| small(rng, 3)).collect();
        let (e1, e2, e3) = (&w[0] + &w[1] + &w[2], &w[0] * &w[1] + &w[0] * &w[2] + &w[1] * &w[2], &w[0] * &w[1] * &w[2]);
        let mut t = vec![(int(1), 0, 3), (-e1, 0, 2), (e2, 0, 1), (-e3, 0, 0)];
        for (i, j) in [(1, 2), (2, 0), (2, 1)] {
            t.push((small(rng, 3), i, j));
        }
        t.push((nonzero(rng), 3, 0));
        (t, vec![(1, 0), (1, 1)], 1)
    } else {
        let d: u32 = rng.gen_range(3..=6);
        let w = nonzero(rng);
        let g = ((d - 1) / 2) as usize;
        let mut t = vec![(int(1), 0, 2), (-(&w * &w), 0, 0), (nonzero(rng), d, 0)];
        for i in (g as u32 + 2)..d {
            t.push((small(rng, 3), i, 0));
        }
        (t, (1..=g as u32 + 1).map(|i| (i, 0)).collect(), g)
    };
    let pts: Vec<CurvePoint> = (0..=genus).map(|_| CurvePoint::new(nonzero(rng), small(rng, 4))).collect();
    let eval = |c: &Rational, i: u32, j: u32, p: &CurvePoint| {
        c * num_traits::pow(p.x.clone(), i as usize) * num_traits::pow(p.y.clone(), j as usize)
    };
    let m = Matrix::from_fn(free.len(), free.len(), |r, c| eval(&int(1), free[c].0, free[c].1, &pts[r]));
    let rhs: Vec<Rational> = pts.iter().map(|p| -terms.iter().map(|(c, i, j)| eval(c, *i, *j, p)).sum::<Rational>()).collect();
    let sol = m.solve_exact(&rhs).ok()?;
    terms.extend(sol.into_iter().zip(&free).map(|(c, &(i, j))| (c, i, j)));
    let curve = SpectralCurve::analyze(parse_curve(&render(&terms)).ok()?).ok()?;
    if curve.genus() != genus {
        return None;
    }
    let divisor = Divisor::new(pts[..genus].to_vec());
    SpectralData::new(curve, divisor, pts[genus].clone(), int(0), None).ok()
}

/// Random valid spectral data of genus 1 or 2, monic in `y`.
pub fn random_monic(rng: &mut ChaCha8Rng) -> SpectralData {
    loop {
        if let Some(d) = attempt(rng) {
            return d;
        }
    }
}

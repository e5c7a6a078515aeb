//! Assembly of `L(x)` by the residue formula and its algebraic checks.
//!
//! `L_ab(x) = (x - z_o)^2 * sum_c res_{y=c} Q(z_o^a; (x, y)) * y * Q((x, y); z_o^b)
//!            / (E(x, y) * E_y(z_o^a))`
//! over the finite points `c` listed by [`residue_points`] plus `y = inf`.

pub mod numeric;
pub mod transition;

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{int, BiPoly, Matrix, RatFuncX, Rational, Scalar, UniPoly, YPoly, YRatFunc};
use crate::curve::SpectralData;
use crate::error::{Error, Result};
use crate::kernel::{CauchyKernel, KernelSymbolicP, KernelSymbolicQ};

pub use numeric::{eigencheck_numeric, EigenReport};
pub use transition::{change_divisor, TransitionMatrix};

/// Environment variable capping the worker threads used for entries.
pub const THREADS_ENV: &str = "SPECTRAL_FORGE_THREADS";

#[derive(Clone, Debug)]
pub struct LaxMatrix {
    pub entries: Matrix<RatFuncX>,
    pub data: SpectralData,
    /// `w_o^(1..n)` in the supplied preimage order.
    pub diag_at_z_o: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicReport {
    pub pass: bool,
    /// `a_n det(yI - L) - E` when nonzero.
    pub witness: Option<YPoly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PoleLocusReport {
    /// Every denominator is coprime to `prod_l (x - d_lx)`.
    pub pass: bool,
    /// `(row, col, d_lx)` for each violation.
    pub offending: Vec<(usize, usize, Rational)>,
    /// Every denominator divides a power of `a_n`.
    pub divides_leading_power: bool,
    pub polynomial: bool,
}

/// Runs `f` on a pool sized by [`THREADS_ENV`] when it is set.
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()).filter(|&t| t > 0);
    match threads.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Finite residue points for `L_ab`, deduplicated.
pub fn residue_points(data: &SpectralData, a: usize, b: usize) -> Vec<Rational> {
    let mut set: BTreeSet<Rational> = data.divisor.points.iter().map(|d| d.y.clone()).collect();
    set.insert(data.p_o.y.clone());
    set.insert(data.preimages[a].clone());
    set.insert(data.preimages[b].clone());
    set.into_iter().collect()
}

/// `sum_c res_{y=c} f dy + res_{y=inf} f dy` over `listed`, the actual
/// linear poles of `f` and `extra`.
pub(crate) fn residue_sum(f: &YRatFunc, listed: &[Rational], extra: &[Rational]) -> Result<RatFuncX> {
    let mut points: BTreeSet<Rational> = listed.iter().cloned().collect();
    points.extend(f.linear_poles().keys().cloned());
    points.extend(extra.iter().cloned());
    let mut acc = f.residue_at_infinity();
    for c in &points {
        let r = f.residue_at(c).map_err(|e| match e {
            Error::Representation(m) => Error::NonGeneric(m),
            other => other,
        })?;
        acc = &acc + &r;
    }
    Ok(acc)
}

/// `(x - z_o)^2`.
pub(crate) fn double_zero(z_o: &Rational) -> RatFuncX {
    RatFuncX::from_poly(UniPoly::linear(z_o).pow(2))
}

/// `E_y(z_o^a)` for every sheet.
pub(crate) fn normalization_slopes(data: &SpectralData) -> Result<Vec<Rational>> {
    data.normalization_points()
        .iter()
        .map(|p| {
            let v = data.curve.e_y().eval(&p.x, &p.y);
            if v == int(0) {
                Err(Error::BranchPoint(format!("E_y vanishes at {p}")))
            } else {
                Ok(v)
            }
        })
        .collect()
}

pub(crate) struct SymbolicKernels {
    pub first: Vec<KernelSymbolicQ>,
    pub second: Vec<KernelSymbolicP>,
}

pub(crate) fn symbolic_kernels(first: &CauchyKernel, second: &CauchyKernel) -> Result<SymbolicKernels> {
    let zs = first.data().normalization_points();
    with_pool(|| {
        let f: Result<Vec<_>> = zs.par_iter().map(|z| first.symbolic_q(z)).collect();
        let s: Result<Vec<_>> = zs.par_iter().map(|z| second.symbolic_p(z)).collect();
        Ok(SymbolicKernels { first: f?, second: s? })
    })
}

/// `L(x)` from validated data.
pub fn reconstruct(data: &SpectralData) -> Result<LaxMatrix> {
    reconstruct_with_points(data, &[])
}

/// As [`reconstruct`], with `extra` added to every residue list.
pub fn reconstruct_with_points(data: &SpectralData, extra: &[Rational]) -> Result<LaxMatrix> {
    let kernel = CauchyKernel::new(data)?;
    let sym = symbolic_kernels(&kernel, &kernel)?;
    let slopes = normalization_slopes(data)?;
    let e = data.curve.e().to_ypoly();
    let factor = double_zero(&data.z_o);
    let n = data.n();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let entries: Result<Vec<RatFuncX>> = with_pool(|| {
        cells
            .par_iter()
            .map(|&(a, b)| {
                let scale = YRatFunc::from_rational(&slopes[a].recip());
                let f = (&(&(&sym.first[a].q * &YRatFunc::y()) * &sym.second[b].q) * &scale).divide_by_other(&e);
                Ok(&factor * &residue_sum(&f, &residue_points(data, a, b), extra)?)
            })
            .collect()
    });
    let entries = entries?;
    let entries = Matrix::from_fn(n, n, |a, b| entries[a * n + b].clone());
    Ok(LaxMatrix { entries, data: data.clone(), diag_at_z_o: data.preimages.clone() })
}

impl LaxMatrix {
    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    /// `L(x0)`; `None` at a pole.
    pub fn eval(&self, x0: &Rational) -> Option<Matrix<Rational>> {
        self.entries.try_map(|f| f.eval(x0).ok_or(())).ok()
    }

    /// `L(z_o)` equals `diag(w_o)`.
    pub fn verify_diagonal(&self) -> bool {
        self.eval(&self.data.z_o) == Some(Matrix::diagonal(&self.diag_at_z_o))
    }

    /// `a_n(x) det(yI - L(x)) - E(x, y)`.
    pub fn verify_characteristic(&self) -> CharacteristicReport {
        let n = self.n();
        let m = Matrix::from_fn(n, n, |r, c| {
            let l = YPoly::constant(self.entries[(r, c)].clone());
            if r == c {
                &YPoly::y() - &l
            } else {
                -l
            }
        });
        let an = YPoly::constant(RatFuncX::from_poly(self.data.curve.leading().clone()));
        let diff = &(&an * &m.det_bareiss()) - &self.data.curve.e().to_ypoly();
        let pass = diff.is_zero();
        CharacteristicReport { pass, witness: (!pass).then_some(diff) }
    }

    /// Pole locus of the entries against the divisor abscissae and `a_n`.
    pub fn verify_pole_locus(&self) -> PoleLocusReport {
        let an = self.data.curve.leading();
        let mut offending = Vec::new();
        let mut divides_leading_power = true;
        let mut polynomial = true;
        for r in 0..self.n() {
            for c in 0..self.n() {
                let den = self.entries[(r, c)].den();
                polynomial &= den.degree() == Some(0);
                let roots: BTreeSet<&Rational> = self.data.divisor.points.iter().map(|d| &d.x).collect();
                for x in roots {
                    if den.eval(x) == int(0) {
                        offending.push((r, c, x.clone()));
                    }
                }
                divides_leading_power &= divides_power(den, an);
            }
        }
        PoleLocusReport { pass: offending.is_empty(), offending, divides_leading_power, polynomial }
    }

    /// Entries as polynomials in `x` when `L` is polynomial.
    pub fn as_polynomial(&self) -> Option<Matrix<UniPoly>> {
        self.entries.try_map(|f| if f.is_polynomial() { Ok(f.num().scale(&f.den().lead().recip())) } else { Err(()) }).ok()
    }
}

/// Whether `den` divides some power of `base`.
fn divides_power(den: &UniPoly, base: &UniPoly) -> bool {
    let mut rest = den.clone();
    while rest.degree().unwrap_or(0) > 0 {
        let g = rest.gcd(base);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        rest = rest.div_exact(&g).expect("gcd divides");
    }
    true
}

/// `BiPoly` view of a `YPoly` with polynomial coefficients.
pub fn ypoly_to_bipoly(p: &YPoly) -> Option<BiPoly> {
    let mut out = BiPoly::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        if !c.is_polynomial() {
            return None;
        }
        let lead = c.den().lead().recip();
        for (i, a) in c.num().coeffs().iter().enumerate() {
            out.add_term(i as u32, j as u32, a * &lead);
        }
    }
    Some(out)
}

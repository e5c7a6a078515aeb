//! Change of divisor `D -> D~` and the transition matrix `P_{D,D~}`.
//!
//! `P_ab(x) = (x - z_o)^2 * sum_c res_{y=c} Q~(z_o^a; (x, y)) * Q((x, y); z_o^b)
//!            / (E(x, y) * E_y(z_o^a))`
//! with `c` over `d~_y`, `w_o^(a)`, `w_o^(b)` and `inf`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{Matrix, RatFuncX, Rational, Scalar, YRatFunc};
use crate::curve::{Divisor, SpectralData};
use crate::error::Result;
use crate::kernel::CauchyKernel;

use super::{double_zero, normalization_slopes, residue_sum, symbolic_kernels, with_pool, LaxMatrix};

#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub entries: Matrix<RatFuncX>,
    pub source: Divisor,
    pub target: Divisor,
}

/// `P_{D,D~}` where `D` is the divisor of `data`.
pub fn change_divisor(data: &SpectralData, target: &Divisor) -> Result<TransitionMatrix> {
    let tdata = data.with_divisor(target.clone())?;
    let k = CauchyKernel::new(data)?;
    let kt = CauchyKernel::new(&tdata)?;
    let sym = symbolic_kernels(&kt, &k)?;
    let slopes = normalization_slopes(data)?;
    let e = data.curve.e().to_ypoly();
    let factor = double_zero(&data.z_o);
    let n = data.n();
    let listed = |a: usize, b: usize| -> Vec<Rational> {
        let mut s: BTreeSet<Rational> = target.points.iter().map(|d| d.y.clone()).collect();
        s.insert(data.preimages[a].clone());
        s.insert(data.preimages[b].clone());
        s.into_iter().collect()
    };
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let entries: Result<Vec<RatFuncX>> = with_pool(|| {
        cells
            .par_iter()
            .map(|&(a, b)| {
                let scale = YRatFunc::from_rational(&slopes[a].recip());
                let f = (&(&sym.first[a].q * &sym.second[b].q) * &scale).divide_by_other(&e);
                Ok(&factor * &residue_sum(&f, &listed(a, b), &[])?)
            })
            .collect()
    });
    let entries = entries?;
    Ok(TransitionMatrix {
        entries: Matrix::from_fn(n, n, |a, b| entries[a * n + b].clone()),
        source: data.divisor.clone(),
        target: target.clone(),
    })
}

impl TransitionMatrix {
    /// `P * other = I`.
    pub fn is_inverse_of(&self, other: &TransitionMatrix) -> bool {
        let n = self.entries.rows();
        self.entries.mul(&other.entries) == Matrix::identity(n)
    }

    /// `P L = L~ P`, i.e. `L~ = P L P^-1` without forming the inverse.
    pub fn conjugates(&self, l: &LaxMatrix, l_target: &LaxMatrix) -> bool {
        self.entries.mul(&l.entries) == l_target.entries.mul(&self.entries)
    }

    /// `P L P^-1`.
    pub fn conjugate(&self, l: &LaxMatrix) -> Result<Matrix<RatFuncX>> {
        Ok(self.entries.mul(&l.entries).mul(&self.entries.inverse()?))
    }
}

//! `W_N = ((-1)^N / N) sum_{sigma in S_N} Tr[Pi(p_s1) ... Pi(p_sN)]
//!        / ((x_s1 - x_s2) ... (x_sN - x_s1))`
//! and the kernel cycles `((-1)^N / N) sum_sigma K(p_s1, p_s2) ... K(p_sN, p_s1)`.

use serde::Serialize;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::kernel::CauchyKernel;
use crate::reconstruction::LaxMatrix;

use super::{projector, render_point, IdentityReport, Measured};

#[derive(Clone, Debug, Serialize)]
pub struct CorrelatorValue {
    pub n: usize,
    pub points: Vec<String>,
    /// Trace taken in the permuted order.
    pub value: String,
    /// Trace always taken as `Pi(p_1) ... Pi(p_N)`, only the denominators
    /// permuted.
    pub fixed_order: String,
    pub kernel_cycles: String,
    pub report: IdentityReport,
}

/// All permutations of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

pub fn correlator<S: Measured>(lax: &LaxMatrix, kernel: &CauchyKernel, points: &[(S, S)]) -> Result<CorrelatorValue> {
    let n = points.len();
    if n < 3 {
        return Err(Error::Validation("correlators need N >= 3 points".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if (points[i].0.clone() - points[j].0.clone()).is_zero() {
                return Err(Error::Pole(format!("points {} and {} share an abscissa", i + 1, j + 1)));
            }
        }
    }
    let pis: Vec<Matrix<S>> =
        points.iter().map(|(x, y)| projector(lax, x, y).map(|p| p.matrix)).collect::<Result<_>>()?;
    let mut k = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                k[i][j] = kernel.kernel_pair((&points[i].0, &points[i].1), (&points[j].0, &points[j].1))?;
            }
        }
    }
    let fixed = pis[1..].iter().fold(pis[0].clone(), |acc, m| acc.mul(m)).trace();
    let (mut value, mut fixed_order, mut cycles) = (S::zero(), S::zero(), S::zero());
    for s in permutations(n) {
        let mut den = S::one();
        let mut cyc = S::one();
        for i in 0..n {
            let (a, b) = (s[i], s[(i + 1) % n]);
            den = den * (points[a].0.clone() - points[b].0.clone());
            cyc = cyc * k[a][b].clone();
        }
        let tr = s[1..].iter().fold(pis[s[0]].clone(), |acc, &i| acc.mul(&pis[i])).trace();
        let inv = den.try_inv().ok_or_else(|| Error::Internal("zero cycle denominator".into()))?;
        value = value + tr * inv.clone();
        fixed_order = fixed_order + fixed.clone() * inv;
        cycles = cycles + cyc;
    }
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let f = S::from_rational(&crate::algebra::rat(sign, n as i64));
    let (value, fixed_order, cycles) = (value * f.clone(), fixed_order * f.clone(), cycles * f);
    let names: Vec<String> = points.iter().map(|(x, y)| render_point(x, y)).collect();
    let report = IdentityReport::compare(&format!("W_{n} = kernel cycles"), names.clone(), &value, &cycles);
    Ok(CorrelatorValue {
        n,
        points: names,
        value: value.render(),
        fixed_order: fixed_order.render(),
        kernel_cycles: cycles.render(),
        report,
    })
}

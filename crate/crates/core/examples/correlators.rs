//! The bidifferential and the multi-point correlators `W_3`, `W_4`,
//! from projectors and from kernel cycles.
//!
//! `cargo run --release --example correlators`

use num_complex::Complex64;
use spectral_forge::algebra::format_rational;
use spectral_forge::fixtures;
use spectral_forge::kernel::CauchyKernel;
use spectral_forge::reconstruction::reconstruct;
use spectral_forge::spectral::{bidifferential, bidifferential_series, correlator, numeric_point};

fn main() -> spectral_forge::Result<()> {
    let data = fixtures::example2()?;
    let l = reconstruct(&data)?;
    let k = CauchyKernel::new(&data)?;
    let pts: Vec<(Complex64, Complex64)> = [(0.3, 0.2, 0), (-0.7, 0.5, 1), (0.9, -0.4, 2), (-0.2, -1.1, 0)]
        .iter()
        .map(|&(re, im, s)| numeric_point(&data.curve, Complex64::new(re, im), s))
        .collect::<Result<_, _>>()?;

    let b = bidifferential(&l, &k, (&pts[0].0, &pts[0].1), (&pts[1].0, &pts[1].1))?;
    println!("B: projectors {} / kernel {} (rel {:.1e})", b.projector_side, b.kernel_side, b.report.rel_err);
    for n in [3, 4] {
        let w = correlator(&l, &k, &pts[..n])?;
        println!("W_{n}: {} vs cycles {} (rel {:.1e})", w.value, w.kernel_cycles, w.report.rel_err);
    }

    let q = data.normalization_points()[1].clone();
    let (a, _) = bidifferential_series(&l, &k, &q, 4)?;
    let c: Vec<String> = (0..4).map(|j| a.coeff(j).map(|c| format_rational(&c))).collect::<Result<_, _>>()?;
    println!("(x - z)^2 B at {q}: {c:?} + O(t^4)");
    Ok(())
}

//! Spectral projectors from the adjugate of `yI - L` and from the kernel,
//! exactly at rational points and numerically at complex ones.
//!
//! `cargo run --release --example spectral_projector`

use num_complex::Complex64;
use spectral_forge::algebra::format_rational;
use spectral_forge::fixtures;
use spectral_forge::kernel::CauchyKernel;
use spectral_forge::reconstruction::reconstruct;
use spectral_forge::spectral::{numeric_point, projector, projector_exact, projector_kernel_exact, projector_routes};

fn main() -> spectral_forge::Result<()> {
    let data = fixtures::example1()?;
    let l = reconstruct(&data)?;
    let k = CauchyKernel::new(&data)?;

    let p = fixtures::example1_points()[5].clone();
    let adj = projector_exact(&l, &p)?;
    let ker = projector_kernel_exact(&k, &p)?;
    for r in 0..adj.matrix.rows() {
        println!("Pi({p}) row {r}: {:?}", adj.matrix.row(r).iter().map(format_rational).collect::<Vec<_>>());
    }
    println!("trace {}, routes agree {}", format_rational(&adj.trace()), adj.matrix == ker.matrix);

    let (x, y) = numeric_point(&data.curve, Complex64::new(0.4, -0.3), 1)?;
    let pi = projector(&l, &x, &y)?;
    println!("{}", serde_json::to_string_pretty(&pi.idempotency()).unwrap());
    println!("{}", serde_json::to_string_pretty(&projector_routes(&l, &k, &x, &y)?).unwrap());
    Ok(())
}

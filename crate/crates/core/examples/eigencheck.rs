//! Floating-point check of `L = -(x - z_o)^2 Psi Y Psi'` from the kernel
//! eigenvectors over sample abscissae.
//!
//! `cargo run --release --example eigencheck`

use spectral_forge::fixtures;
use spectral_forge::reconstruction::{numeric::EigenChecker, reconstruct};
use spectral_forge::spectral::sample_abscissae;

fn main() -> spectral_forge::Result<()> {
    let l = reconstruct(&fixtures::example1()?)?;
    let checker = EigenChecker::new(&l)?;
    for x in sample_abscissae(8, 1.5) {
        let r = checker.check(x)?;
        println!(
            "x = {:+.3}{:+.3}i  sheet inverse {:.1e}  reassembly {:.1e}  {}",
            x.re,
            x.im,
            r.sheet_sum_error,
            r.reassembly_error,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}

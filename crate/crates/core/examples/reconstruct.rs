//! Rebuild `L(x)` for the first example, check it and print LaTeX.
//!
//! `cargo run --release --example reconstruct`

use spectral_forge::fixtures;
use spectral_forge::io::latex_matrix;
use spectral_forge::reconstruction::reconstruct;

fn main() -> spectral_forge::Result<()> {
    let data = fixtures::example1()?;
    let l = reconstruct(&data)?;
    for a in 0..l.n() {
        for b in 0..l.n() {
            println!("L[{}][{}] = {}", a + 1, b + 1, l.entries[(a, b)]);
        }
    }
    let ch = l.verify_characteristic();
    let pl = l.verify_pole_locus();
    println!("a_n det(yI - L) = E: {}", ch.pass);
    println!("L(z_o) diagonal: {}", l.verify_diagonal());
    println!("denominators coprime to the divisor abscissae: {} (polynomial: {})", pl.pass, pl.polynomial);
    println!("agrees with the printed matrix read as L^T: {}", l.entries.transpose() == fixtures::example1_display());
    println!("{}", latex_matrix(&l.entries));
    Ok(())
}

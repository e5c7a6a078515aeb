//! The transition matrix between two divisors on the second example and
//! the conjugation `P L P^-1 = L~`.
//!
//! `cargo run --release --example change_divisor`

use spectral_forge::algebra::int;
use spectral_forge::fixtures;
use spectral_forge::reconstruction::{change_divisor, reconstruct};

fn main() -> spectral_forge::Result<()> {
    let data = fixtures::example2()?;
    let target = fixtures::example2_target_divisor();
    let tdata = data.with_divisor(target.clone())?;

    let p = change_divisor(&data, &target)?;
    let back = change_divisor(&tdata, &data.divisor)?;
    for a in 0..3 {
        for b in 0..3 {
            println!("P[{}][{}] = {}", a + 1, b + 1, p.entries[(a, b)]);
        }
    }
    let l = reconstruct(&data)?;
    let lt = reconstruct(&tdata)?;
    println!("P_(D,D~) P_(D~,D) = I: {}", p.is_inverse_of(&back));
    println!("P L = L~ P: {}", p.conjugates(&l, &lt));
    println!("P L P^-1 = L~: {}", p.conjugate(&l)? == lt.entries);
    println!("L(-1) = L~(-1): {}", l.eval(&int(-1)) == lt.eval(&int(-1)));
    println!("matches the printed P: {}", p.entries == fixtures::example2_transition());
    Ok(())
}

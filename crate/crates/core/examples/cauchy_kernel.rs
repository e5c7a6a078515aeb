//! The normalized Cauchy kernel: values, zeros on the divisor, residues.
//!
//! `cargo run --example cauchy_kernel`

use spectral_forge::algebra::format_rational;
use spectral_forge::fixtures;
use spectral_forge::kernel::CauchyKernel;

fn main() -> spectral_forge::Result<()> {
    let data = fixtures::example1()?;
    let k = CauchyKernel::new(&data)?;
    let sys = k.system();
    println!("monomials {:?}", sys.alpha_order);
    for r in 0..sys.delta.rows() {
        println!("Delta row {r}: {:?}", sys.delta.row(r).iter().map(format_rational).collect::<Vec<_>>());
    }

    let q = fixtures::example1_points()[4].clone();
    for p in fixtures::example1_points().iter().take(6) {
        if *p != q && *p != data.p_o {
            println!("K({p}, {q}) = {}", format_rational(&k.kernel_point(p, &q)?));
        }
    }
    for d in &data.divisor.points {
        println!("Q({d}; {q}) = {}", format_rational(&k.q_value(d, &q)?));
    }
    let r = k.verify_residues(&q, 3)?;
    println!("res at q = {}, res at p_o = {}", format_rational(&r.at_q), format_rational(&r.at_base));
    Ok(())
}

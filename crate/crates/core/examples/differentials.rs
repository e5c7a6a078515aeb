//! Normalized holomorphic differentials and second-kind differentials
//! with a pole at `p_o`.
//!
//! `cargo run --example differentials`

use spectral_forge::algebra::format_rational;
use spectral_forge::fixtures;
use spectral_forge::kernel::{holomorphic_diffs, second_kind, CauchyKernel};

fn main() -> spectral_forge::Result<()> {
    let data = fixtures::example1()?;
    let k = CauchyKernel::new(&data)?;
    for om in holomorphic_diffs(&k)? {
        let at_d: Vec<String> = data.divisor.points.iter().map(|d| om.eval(&k, d).map(|v| format_rational(&v))).collect::<Result<_, _>>()?;
        println!("omega_{} = ({}) dx / E_y, values on D {:?}", om.index + 1, om.numerator(), at_d);
    }
    for order in 1..=3 {
        let eta = second_kind(&k, order)?;
        let s = eta.series_at(&k, &data.p_o, 2 * order + 2)?;
        let lead = -(order as i64) - 1;
        let pp: Vec<String> = (lead..0).map(|j| s.coeff(j).map(|c| format_rational(&c))).collect::<Result<_, _>>()?;
        println!("eta_{order}: principal part at p_o {:?} (from t^{lead})", pp);
    }
    Ok(())
}

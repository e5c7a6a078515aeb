//! Newton polygon, genus, fibre over `z_o`, a local branch and the
//! numeric sheets of a spectral curve.
//!
//! `cargo run --example curve_analysis -- "y^3 - y - x^3 + 2*x" 0`

use num_complex::Complex64;
use spectral_forge::algebra::{format_rational, parse_rational};
use spectral_forge::curve::{local_series, numeric_sheets, parse_curve, CurvePoint, SpectralCurve};
use spectral_forge::fixtures::EXAMPLE1_CURVE;

fn main() -> spectral_forge::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let text = args.first().map(String::as_str).unwrap_or(EXAMPLE1_CURVE);
    let z_o = parse_rational(args.get(1).map(String::as_str).unwrap_or("-1"))?;

    let curve = SpectralCurve::analyze(parse_curve(text)?)?;
    let poly = curve.polygon();
    println!("E = {}", curve.e());
    println!("n = {}, orientation {:?}", curve.n(), curve.orientation());
    println!("hull {:?}", poly.hull_vertices);
    println!("interior points {:?} -> genus {}", poly.interior, curve.genus());
    println!("monomial order {:?}", curve.alpha_order());

    let ws = curve.preimages(&z_o)?;
    println!("fibre over x = {}: {:?}", format_rational(&z_o), ws.iter().map(format_rational).collect::<Vec<_>>());

    let p = CurvePoint::new(z_o.clone(), ws[0].clone());
    let c = local_series(&curve, &p, 4)?;
    println!("branch through {p}: y = {}", c.iter().enumerate().map(|(k, c)| format!("{} t^{k}", format_rational(c))).collect::<Vec<_>>().join(" + "));

    let x = Complex64::new(0.3, 0.7);
    let sh = numeric_sheets(&curve, x)?;
    println!("sheets over x = {x}: {:?} (near branch: {})", sh.roots, sh.near_branch);
    Ok(())
}

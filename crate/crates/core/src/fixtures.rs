//! The two worked genus-2 examples and their published matrices.

use crate::algebra::{int, parse_rational, rat, Matrix, QMatrix, RatFuncX, UniPoly};
use crate::curve::{parse_curve, CurvePoint, Divisor, SpectralCurve, SpectralData};
use crate::error::Result;

pub const EXAMPLE1_CURVE: &str = "(x+3)*y^3 + (-2733/128*x^2 - 1609/192*x + 3829/384)*y^2 \
     + (x^2 + x - 1/2)*y + x^2 - 3/8*x - 5/8";

pub const EXAMPLE2_CURVE: &str = "y^3*x + 187/422*x^2 + 597/422*x + 1007/1688 \
     + y*(-22639/6752*x^2 - 64913/20256*x + 2017/5064) + y^2*(-6317/2532*x - 2519/2532)";

fn pt(x: (i64, i64), y: (i64, i64)) -> CurvePoint {
    CurvePoint::new(rat(x.0, x.1), rat(y.0, y.1))
}

pub fn example1() -> Result<SpectralData> {
    let curve = SpectralCurve::analyze(parse_curve(EXAMPLE1_CURVE)?)?;
    let divisor = Divisor::new(vec![pt((1, 3), (1, 3)), pt((2, 3), (4, 3))]);
    SpectralData::new(curve, divisor, pt((1, 1), (0, 1)), int(-1), None)
}

pub fn example2() -> Result<SpectralData> {
    let curve = SpectralCurve::analyze(parse_curve(EXAMPLE2_CURVE)?)?;
    let divisor = Divisor::new(vec![pt((-1, 3), (-2, 1)), pt((0, 1), (1, 1))]);
    SpectralData::new(curve, divisor, pt((-1, 2), (0, 1)), int(-1), None)
}

/// The second divisor used with [`example2`].
pub fn example2_target_divisor() -> Divisor {
    Divisor::new(vec![pt((1, 3), (-1, 1)), pt((2, 1), (1, 4))])
}

fn pts(list: &[(i64, i64, i64, i64)]) -> Vec<CurvePoint> {
    list.iter().map(|&(a, b, c, d)| pt((a, b), (c, d))).collect()
}

/// Small-height rational points on the first example curve.
pub fn example1_points() -> Vec<CurvePoint> {
    pts(&[
        (-211, 171, 1, 3),
        (-1, 1, -1, 2),
        (-1, 1, 1, 2),
        (-1, 1, 3, 2),
        (-2543, 2565, 4, 3),
        (-5, 8, 0, 1),
        (-2593, 4721, -1, 12),
        (1, 3, 1, 3),
        (2677, 7431, -1, 2),
        (3061, 5895, 1, 2),
        (2, 3, 4, 3),
        (2281, 3331, 3, 2),
        (1, 1, 0, 1),
        (11, 9, -1, 12),
    ])
}

/// Small-height rational points on the second example curve.
pub fn example2_points() -> Vec<CurvePoint> {
    pts(&[
        (-1007, 374, 0, 1),
        (-7393, 6549, 1, 1),
        (-1, 1, -1, 2),
        (-1, 1, 1, 2),
        (-1, 1, 3, 2),
        (-8561, 10671, 1, 4),
        (-16136, 25631, -1, 1),
        (-1, 2, 0, 1),
        (-1, 3, -2, 1),
        (-14104, 61933, 3, 2),
        (-2008, 28623, -1, 2),
        (0, 1, -3021, 5038),
        (0, 1, 1, 1),
        (1, 3, -1, 1),
        (4432, 9993, 1, 2),
        (2822, 1609, -2, 1),
        (2, 1, -450, 211),
        (2, 1, 1, 4),
        (2, 1, 39, 8),
    ])
}

/// `num / den` with both sides polynomial expressions in `x`.
fn rf(num: &str, den: &str) -> RatFuncX {
    let p = |s: &str| -> UniPoly { parse_curve(s).expect("fixture expression").a(0) };
    RatFuncX::new(p(num), p(den))
}

fn qm(rows: [[&str; 3]; 3]) -> QMatrix {
    Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|s| parse_rational(s).expect("fixture rational")).collect()).collect(),
    )
}

/// The first example's Lax matrix exactly as displayed.
pub fn example1_display() -> Matrix<RatFuncX> {
    Matrix::from_rows(vec![
        vec![
            rf("20668*x^2 + 38425*x + 16989", "768*(x+3)"),
            rf("(5*x+5)*(1708*x+1329)", "384*(x+3)"),
            rf("-(7*x+7)*(5612*x+4161)", "768*(x+3)"),
        ],
        vec![
            rf("(x+1)*(253183*x+379403)", "15360*(x+3)"),
            rf("20923*x^2 + 51570*x + 32183", "1536*(x+3)"),
            rf("-(7*x+7)*(68747*x+96391)", "15360*(x+3)"),
        ],
        vec![
            rf("5167*x + 5167", "512"),
            rf("2135*x + 2135", "256"),
            rf("-9821*x - 9053", "512"),
        ],
    ])
}

/// `(A_1, A_0, A_-1)` for the first divisor of the second example.
pub fn example2_coefficients() -> [QMatrix; 3] {
    [
        qm([
            ["-305013695/547074048", "36762211/182358016", "146051771/182358016"],
            ["3587544275/820611072", "-432393895/273537024", "-1717848095/273537024"],
            ["-2443006825/1641222144", "294446885/547074048", "1169801485/547074048"],
        ]),
        qm([
            ["-172225487/273537024", "23062403/91179008", "62992043/91179008"],
            ["2476300115/410305536", "-120515639/136768512", "-917432255/136768512"],
            ["-2393754361/820611072", "100340389/273537024", "1095694909/273537024"],
        ]),
        qm([
            ["234099745/547074048", "9362595/182358016", "-20067685/182358016"],
            ["1365055955/820611072", "18198035/91179008", "-117016415/273537024"],
            ["-2344501897/1641222144", "-31255369/182358016", "200977261/547074048"],
        ]),
    ]
}

/// `(A_1, A_0, A_-1)` for the target divisor of the second example.
pub fn example2_target_coefficients() -> [QMatrix; 3] {
    [
        qm([
            ["-99911711/34192128", "-15463713/11397376", "-7817917/11397376"],
            ["271125907/51288192", "13987727/5698688", "21215129/17096064"],
            ["204290167/102576384", "10539587/11397376", "15985349/34192128"],
        ]),
        qm([
            ["-2862889/534252", "-4417957/1424672", "-2142197/712336"],
            ["16008727/1602756", "15363893/2137008", "7348039/1068504"],
            ["2898439/3205512", "-233527/4274016", "1419211/2137008"],
        ]),
        qm([
            ["-66217121/34192128", "-19879943/11397376", "-26457235/11397376"],
            ["241153357/51288192", "72399931/17096064", "96353495/17096064"],
            ["-111540119/102576384", "-33486977/34192128", "-44566165/34192128"],
        ]),
    ]
}

/// `A_1 x + A_0 + A_-1 / x`.
pub fn laurent_matrix(c: &[QMatrix; 3]) -> Matrix<RatFuncX> {
    let x = RatFuncX::x();
    let inv_x = x.inv().expect("x is invertible");
    Matrix::from_fn(3, 3, |i, j| {
        &(&x.scale(&c[0].row(i)[j]) + &RatFuncX::constant(c[1].row(i)[j].clone())) + &inv_x.scale(&c[2].row(i)[j])
    })
}

/// The published transition matrix between the two divisors of the second
/// example.
pub fn example2_transition() -> Matrix<RatFuncX> {
    Matrix::from_rows(vec![
        vec![
            rf("191431*x^2 - 147934*x - 15269", "81024*x^2 - 189056*x + 54016"),
            rf("-9441*x^2 + 58002*x + 67443", "81024*x^2 - 189056*x + 54016"),
            rf("-14505*x^2 + 88386*x + 102891", "81024*x^2 - 189056*x + 54016"),
        ],
        vec![
            rf("-798767*x^2 - 564994*x + 233773", "121536*x^2 - 283584*x + 81024"),
            rf("-59757*x^2 - 139942*x + 81863", "40512*x^2 - 94528*x + 27008"),
            rf("-152597*x^2 - 69046*x + 83551", "40512*x^2 - 94528*x + 27008"),
        ],
        vec![
            rf("(x+1)*(1266313*x - 259691)", "243072*x^2 - 567168*x + 162048"),
            rf("209979*x^2 + 32826*x - 177153", "81024*x^2 - 189056*x + 54016"),
            rf("400723*x^2 - 139350*x - 215977", "81024*x^2 - 189056*x + 54016"),
        ],
    ])
}

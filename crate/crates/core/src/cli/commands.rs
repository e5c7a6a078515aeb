//! Bodies of the subcommands. Each returns canonical JSON.

use std::path::Path;
use std::time::Instant;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{format_rational, int, Matrix, QMatrix, RatFuncX, Rational};
use crate::curve::{numeric_sheets, CurvePoint, SpectralData};
use crate::error::{Error, Result};
use crate::io::{latex_matrix, matrix_to_json, parse_matrix_artifact};
use crate::kernel::{holomorphic_diffs, second_kind, CauchyKernel};
use crate::reconstruction::{self, numeric::EigenChecker, LaxMatrix, TransitionMatrix};
use crate::spectral::{self, IdentityReport};

use super::{CommonArgs, Outcome};

/// Sample abscissae used by numeric checks.
const NUMERIC_SAMPLES: usize = 6;
const NUMERIC_RADIUS: f64 = 1.5;

fn r(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn pt(p: &CurvePoint) -> Value {
    json!([format_rational(&p.x), format_rational(&p.y)])
}

fn qmatrix(m: &QMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(r).collect())).collect())
}

fn cplx(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn load(args: &CommonArgs) -> Result<SpectralData> {
    args.job()?.data(args.orientation())
}

fn data_json(data: &SpectralData) -> Value {
    json!({
        "n": data.n(),
        "genus": data.curve.genus(),
        "orientation": data.curve.orientation(),
        "curve": data.curve.e().to_canonical_string(),
        "divisor": data.divisor.points.iter().map(pt).collect::<Vec<_>>(),
        "p_o": pt(&data.p_o),
        "z_o": r(&data.z_o),
        "preimages": data.preimages.iter().map(r).collect::<Vec<_>>(),
    })
}

fn verification(l: &LaxMatrix) -> (Value, bool) {
    let ch = l.verify_characteristic();
    let diag = l.verify_diagonal();
    let pl = l.verify_pole_locus();
    let offending: Vec<Value> = pl.offending.iter().map(|(a, b, x)| json!([a + 1, b + 1, format_rational(x)])).collect();
    let v = json!({
        "characteristic": ch.pass,
        "characteristic_witness": ch.witness.map(|w| w.display()),
        "diagonal_at_z_o": diag,
        "pole_locus": pl.pass,
        "pole_locus_offending": offending,
        "denominators_divide_leading_power": pl.divides_leading_power,
        "polynomial": pl.polynomial,
    });
    (v, ch.pass && diag && pl.pass)
}

/// On-curve sample points `(x_k, y)` on sheet `k mod n`, skipping
/// abscissae flagged as near a branch point.
fn numeric_points(data: &SpectralData, count: usize) -> Vec<(Complex64, Complex64)> {
    spectral::sample_abscissae(count * 2, NUMERIC_RADIUS)
        .into_iter()
        .enumerate()
        .filter_map(|(k, x)| {
            let sh = numeric_sheets(&data.curve, x).ok()?;
            (!sh.near_branch).then(|| (x, sh.roots[k % sh.roots.len()]))
        })
        .take(count)
        .collect()
}

fn report(r: Result<IdentityReport>) -> (Value, bool) {
    match r {
        Ok(rep) => {
            let pass = rep.pass;
            (serde_json::to_value(rep).expect("serializable"), pass)
        }
        Err(e) => (json!({ "error": e.kind(), "message": e.to_string() }), false),
    }
}

fn eigen_checks(l: &LaxMatrix) -> Result<(Value, bool)> {
    let checker = EigenChecker::new(l)?;
    let mut all = true;
    let mut out = Vec::new();
    for x in spectral::sample_abscissae(NUMERIC_SAMPLES, NUMERIC_RADIUS) {
        match checker.check(x) {
            Ok(rep) => {
                all &= rep.pass;
                out.push(json!({
                    "x": cplx(rep.x),
                    "sheet_sum_rel_err": rep.sheet_sum_error,
                    "reassembly_rel_err": rep.reassembly_error,
                    "near_branch": rep.near_branch,
                    "pass": rep.pass,
                }));
            }
            Err(e) => {
                all = false;
                out.push(json!({ "x": cplx(x), "error": e.kind(), "message": e.to_string(), "pass": false }));
            }
        }
    }
    Ok((Value::Array(out), all))
}

pub fn lax_artifact(l: &LaxMatrix) -> (Value, bool) {
    let (ver, pass) = verification(l);
    let v = json!({
        "command": "reconstruct",
        "data": data_json(&l.data),
        "entries": matrix_to_json(&l.entries),
        "verification": ver,
    });
    (v, pass)
}

pub fn reconstruct(args: &CommonArgs) -> Result<Outcome> {
    let data = load(args)?;
    let l = reconstruction::reconstruct(&data)?;
    let (mut json, _) = lax_artifact(&l);
    if args.numeric_checks {
        let (v, _) = eigen_checks(&l)?;
        json["numeric"] = v;
    }
    Ok(Outcome { json, latex: Some(latex_matrix(&l.entries)), pass: true })
}

pub fn verify(args: &CommonArgs, matrix: &Path, pair: Option<(&Path, &Path)>) -> Result<Outcome> {
    let data = load(args)?;
    let read = |p: &Path| {
        let text =
            std::fs::read_to_string(p).map_err(|e| Error::Validation(format!("cannot read {}: {e}", p.display())))?;
        parse_matrix_artifact(&text)
    };
    let entries = read(matrix)?;
    if entries.rows() != data.n() {
        return Err(Error::Validation(format!("matrix is {0}x{0} but the curve has degree {1} in y", entries.rows(), data.n())));
    }
    let l = LaxMatrix { entries, diag_at_z_o: data.preimages.clone(), data };
    let (ver, mut pass) = verification(&l);
    let mut json = json!({ "command": "verify", "verification": ver });
    if let Some((target, transition)) = pair {
        let lt = LaxMatrix { entries: read(target)?, ..l.clone() };
        let p = TransitionMatrix { entries: read(transition)?, source: l.data.divisor.clone(), target: l.data.divisor.clone() };
        let ok = p.entries.rows() == l.n() && lt.n() == l.n() && p.conjugates(&l, &lt);
        json["conjugation"] = Value::Bool(ok);
        pass &= ok;
    }
    if args.numeric_checks {
        let (v, ok) = eigen_checks(&l)?;
        json["numeric"] = v;
        pass &= ok;
    }
    json["all_pass"] = Value::Bool(pass);
    Ok(Outcome { json, latex: None, pass })
}

/// Job points, or the normalization and divisor points when none are given.
fn job_points(args: &CommonArgs, data: &SpectralData) -> Result<Vec<CurvePoint>> {
    let pts = args.job()?.points()?;
    if !pts.is_empty() {
        for p in &pts {
            if !data.curve.contains(&p.x, &p.y) {
                return Err(Error::NotOnCurve(p.to_string()));
            }
        }
        return Ok(pts);
    }
    let mut pts = data.normalization_points();
    pts.extend(data.divisor.points.iter().cloned());
    Ok(pts)
}

pub fn kernel(args: &CommonArgs) -> Result<Outcome> {
    let data = load(args)?;
    let k = CauchyKernel::new(&data)?;
    let pts = job_points(args, &data)?;
    let mut values = Vec::new();
    for p in &pts {
        for q in &pts {
            if p == q || *p == data.p_o || data.divisor.points.contains(q) {
                continue;
            }
            let v = match k.kernel_point(p, q) {
                Ok(v) => r(&v),
                Err(e) => json!({ "error": e.kind(), "message": e.to_string() }),
            };
            values.push(json!({ "p": pt(p), "q": pt(q), "K": v }));
        }
    }
    let mut pass = true;
    let mut residues = Vec::new();
    for q in pts.iter().filter(|q| **q != data.p_o && !data.divisor.points.contains(q)) {
        let c = k.verify_residues(q, 3)?;
        pass &= c.pass;
        residues.push(json!({ "q": pt(q), "at_q": r(&c.at_q), "at_p_o": r(&c.at_base), "pass": c.pass }));
    }
    let sys = k.system();
    let json = json!({
        "command": "kernel",
        "data": data_json(&data),
        "sign": r(k.sign()),
        "alpha_order": sys.alpha_order,
        "brill_noether": qmatrix(&sys.delta),
        "brill_noether_inverse": qmatrix(&sys.delta_inv),
        "values": values,
        "residues": residues,
    });
    Ok(Outcome { json, latex: None, pass })
}

pub fn differentials(args: &CommonArgs) -> Result<Outcome> {
    let job = args.job()?;
    let data = job.data(args.orientation())?;
    let k = CauchyKernel::new(&data)?;
    let omegas = holomorphic_diffs(&k)?;
    let mut pass = true;
    let mut hol = Vec::new();
    for om in &omegas {
        let at_d: Vec<Rational> = data.divisor.points.iter().map(|d| om.eval(&k, d)).collect::<Result<_>>()?;
        let ok = at_d.iter().enumerate().all(|(l, v)| *v == if l == om.index { int(1) } else { int(0) });
        pass &= ok;
        hol.push(json!({
            "index": om.index + 1,
            "numerator": om.numerator().to_canonical_string(),
            "coefficients": om.coeffs.iter().map(r).collect::<Vec<_>>(),
            "values_at_divisor": at_d.iter().map(r).collect::<Vec<_>>(),
            "interpolation": ok,
        }));
    }
    let mut sec = Vec::new();
    for order in 1..=job.second_kind.unwrap_or(2) {
        let eta = second_kind(&k, order)?;
        let s = eta.series_at(&k, &data.p_o, 2 * order + 3)?;
        let lead = -(order as i64) - 1;
        let mut ok = s.valuation() == Some(lead) && s.coeff(lead)? == int(1);
        for j in lead + 1..0 {
            ok &= s.coeff(j)? == int(0);
        }
        pass &= ok;
        sec.push(json!({
            "k": order,
            "numerator": eta.numerator.numerator().display(),
            "denominator": eta.numerator.denominator().display(),
            "principal_part": ok,
        }));
    }
    let json = json!({
        "command": "differentials",
        "data": data_json(&data),
        "alpha_order": k.system().alpha_order,
        "holomorphic": hol,
        "second_kind": sec,
        "convention": "omega_j/dx = numerator/E_y; eta_k/dx = numerator/(denominator*E_y)",
    });
    Ok(Outcome { json, latex: None, pass })
}

pub fn change_divisor(args: &CommonArgs) -> Result<Outcome> {
    let job = args.job()?;
    let data = job.data(args.orientation())?;
    let target = job.target_divisor()?;
    let p = reconstruction::change_divisor(&data, &target)?;
    let tdata = data.with_divisor(target.clone())?;
    let back = reconstruction::change_divisor(&tdata, &data.divisor)?;
    let inverse = p.is_inverse_of(&back);
    let l = reconstruction::reconstruct(&data)?;
    let lt = reconstruction::reconstruct(&tdata)?;
    let conj = p.conjugates(&l, &lt);
    let json = json!({
        "command": "change-divisor",
        "data": data_json(&data),
        "target_divisor": target.points.iter().map(pt).collect::<Vec<_>>(),
        "entries": matrix_to_json(&p.entries),
        "target_lax": matrix_to_json(&lt.entries),
        "verification": { "inverse": inverse, "conjugation": conj },
    });
    Ok(Outcome { json, latex: Some(latex_matrix(&p.entries)), pass: inverse && conj })
}

fn projector_json(m: &Matrix<Rational>) -> Value {
    qmatrix(m)
}

pub fn projector(args: &CommonArgs) -> Result<Outcome> {
    let data = load(args)?;
    let l = reconstruction::reconstruct(&data)?;
    let k = CauchyKernel::new(&data)?;
    let mut pass = true;
    let mut out = Vec::new();
    for p in job_points(args, &data)? {
        let adj = match spectral::projector_exact(&l, &p) {
            Ok(a) => a,
            Err(e) => {
                out.push(json!({ "point": pt(&p), "error": e.kind(), "message": e.to_string() }));
                continue;
            }
        };
        let routes = spectral::projector_kernel_exact(&k, &p).map(|kp| kp.matrix == adj.matrix);
        let trace_one = adj.trace() == int(1);
        let idem = adj.idempotency().pass;
        let agree = routes.as_ref().map(|b| *b).unwrap_or(false);
        pass &= trace_one && idem && agree;
        out.push(json!({
            "point": pt(&p),
            "matrix": projector_json(&adj.matrix),
            "trace_one": trace_one,
            "idempotent": idem,
            "kernel_route_agrees": routes.map(Value::Bool).unwrap_or_else(|e| json!({ "error": e.kind(), "message": e.to_string() })),
        }));
    }
    let mut json = json!({ "command": "projector", "data": data_json(&data), "projectors": out });
    if args.numeric_checks {
        let mut num = Vec::new();
        for (x, y) in numeric_points(&data, NUMERIC_SAMPLES) {
            let (idem, a) = report(spectral::projector(&l, &x, &y).map(|p| p.idempotency()));
            let (routes, b) = report(spectral::projector_routes(&l, &k, &x, &y));
            pass &= a && b;
            num.push(json!({ "idempotent": idem, "routes": routes }));
        }
        json["numeric"] = Value::Array(num);
    }
    Ok(Outcome { json, latex: None, pass })
}

struct Suite {
    items: Vec<Value>,
    pass: bool,
}

impl Suite {
    fn add(&mut self, name: &str, pass: bool, detail: Value) {
        self.pass &= pass;
        self.items.push(json!({ "name": name, "pass": pass, "detail": detail }));
    }

    fn add_result(&mut self, name: &str, r: Result<(bool, Value)>) {
        match r {
            Ok((p, d)) => self.add(name, p, d),
            Err(e) => self.add(name, false, json!({ "error": e.kind(), "message": e.to_string() })),
        }
    }
}

pub fn selftest(args: &CommonArgs) -> Result<Outcome> {
    let start = Instant::now();
    let data = load(args)?;
    let k = CauchyKernel::new(&data)?;
    let l = reconstruction::reconstruct(&data)?;
    let mut s = Suite { items: Vec::new(), pass: true };

    let ch = l.verify_characteristic();
    s.add("a_n det(yI - L) = E", ch.pass, json!(ch.witness.map(|w| w.display())));
    s.add("L(z_o) diagonal", l.verify_diagonal(), Value::Null);
    let pl = l.verify_pole_locus();
    s.add(
        "denominators coprime to prod (x - d_lx)",
        pl.pass,
        json!(pl.offending.iter().map(|(a, b, x)| json!([a + 1, b + 1, format_rational(x)])).collect::<Vec<_>>()),
    );
    s.add("denominators divide a power of a_n", pl.divides_leading_power, Value::Null);
    let extra = [&data.p_o.y + int(7), &data.z_o - int(11)];
    s.add_result(
        "extra residue points change nothing",
        reconstruction::reconstruct_with_points(&data, &extra).map(|l2| (l2.entries == l.entries, Value::Null)),
    );

    let zs = data.normalization_points();
    s.add_result(
        "residues +1 at q, -1 at p_o",
        zs.iter()
            .map(|q| k.verify_residues(q, 3).map(|c| c.pass))
            .collect::<Result<Vec<_>>>()
            .map(|v| (v.iter().all(|b| *b), Value::Null)),
    );
    s.add_result(
        "Q(d_l; q) = 0",
        (|| {
            let mut ok = true;
            for d in &data.divisor.points {
                for q in &zs {
                    ok &= k.q_value(d, q)? == int(0);
                }
            }
            Ok((ok, Value::Null))
        })(),
    );
    s.add_result(
        "omega_j(d_l) = delta_jl",
        holomorphic_diffs(&k).and_then(|oms| {
            let mut ok = true;
            for om in &oms {
                for (j, d) in data.divisor.points.iter().enumerate() {
                    ok &= om.eval(&k, d)? == if j == om.index { int(1) } else { int(0) };
                }
            }
            Ok((ok, Value::Null))
        }),
    );
    for order in 1..=2usize {
        s.add_result(
            &format!("eta_{order} principal part"),
            second_kind(&k, order).and_then(|eta| {
                let ser = eta.series_at(&k, &data.p_o, 2 * order + 3)?;
                let lead = -(order as i64) - 1;
                let mut ok = ser.valuation() == Some(lead) && ser.coeff(lead)? == int(1);
                for j in lead + 1..0 {
                    ok &= ser.coeff(j)? == int(0);
                }
                Ok((ok, Value::Null))
            }),
        );
    }
    s.add_result(
        "projector routes agree at z_o^(a)",
        (|| {
            let mut ok = true;
            for (a, z) in zs.iter().enumerate() {
                let e = Matrix::from_fn(zs.len(), zs.len(), |r, c| if r == a && c == a { int(1) } else { int(0) });
                ok &= spectral::projector_exact(&l, z)?.matrix == e;
                ok &= spectral::projector_kernel_exact(&k, z)?.matrix == e;
            }
            Ok((ok, Value::Null))
        })(),
    );
    s.add_result(
        "(x - z)^2 B = 1 + O(x - z)",
        spectral::bidifferential_series(&l, &k, &zs[0], 6).and_then(|(a, b)| {
            let mut ok = true;
            for ser in [&a, &b] {
                ok &= ser.valuation().unwrap_or(0) >= 0 && ser.coeff(0)? == int(1);
            }
            Ok((ok, json!({ "kernel": ser_coeffs(&a)?, "projector": ser_coeffs(&b)? })))
        }),
    );

    let (eig, ok) = eigen_checks(&l)?;
    s.add("eigen reassembly and sheet inverse", ok, eig);
    let pts = numeric_points(&data, NUMERIC_SAMPLES);
    let mut group = |name: &str, reps: Vec<Result<IdentityReport>>| {
        let (vals, oks): (Vec<Value>, Vec<bool>) = reps.into_iter().map(report).unzip();
        s.add(name, oks.iter().all(|b| *b), Value::Array(vals));
    };
    group("Pi^2 = Pi", pts.iter().map(|(x, y)| spectral::projector(&l, x, y).map(|p| p.idempotency())).collect());
    group(
        "sheet sum",
        pts.windows(2).map(|w| spectral::sheet_sum_identity(&k, (&w[0].0, &w[0].1), (&w[1].0, &w[1].1))).collect(),
    );
    group(
        "B = -K(p,q) K(q,p)",
        pts.windows(2)
            .map(|w| spectral::bidifferential(&l, &k, (&w[0].0, &w[0].1), (&w[1].0, &w[1].1)).map(|b| b.report))
            .collect(),
    );
    group(
        "W_N = kernel cycles",
        [3usize, 4].iter().map(|&n| spectral::correlator(&l, &k, &pts[..n.min(pts.len())]).map(|w| w.report)).collect(),
    );

    let json = json!({
        "command": "selftest",
        "data": data_json(&data),
        "checks": s.items,
        "all_pass": s.pass,
        "runtime_ms": start.elapsed().as_millis() as u64,
    });
    Ok(Outcome { json, latex: None, pass: s.pass })
}

fn ser_coeffs(s: &crate::algebra::Laurent<Rational>) -> Result<Vec<String>> {
    (0..2).map(|k| s.coeff(k).map(|c| format_rational(&c))).collect()
}

#[allow(dead_code)]
fn entry(m: &Matrix<RatFuncX>, a: usize, b: usize) -> &RatFuncX {
    &m[(a, b)]
}

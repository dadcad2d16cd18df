use std::fmt::Write as _;
use std::path::Path;

use flatcert::flagcut::xi_trials;
use flatcert::groebner::is_groebner_basis;
use flatcert::hilbert::{interpolate_hilbert_polynomial, tabulate};
use flatcert::polyring::format_rational;
use flatcert::quadfam::{
    closed_orbit_limit_check, conic_adjugate_identity_symbolic, conic_global_equations_check, diagonal_ideal,
    flatness_certificate, incidence_form, nonzerodivisor_check, primary_intersection_check, random_rational,
    torus_action_check, torus_action_symbolic, Corruption, Verdict,
};
use flatcert::{
    ChartPoint, Error, HilbertMethod, HilbertPolynomialQ, Ideal, MonomialOrderSpec, OrderKind, Result,
    SymmetricMatrixQ, TorusElement,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cli::MethodArg;
use crate::input::{parse_ideal_file, parse_matrix, resolve_points};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Fail = 1,
    Inconclusive = 2,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub report: Value,
    pub text: String,
}

fn point_brief(p: &ChartPoint) -> String {
    let u: Vec<String> = p
        .strict_lower_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(","))
        .collect();
    let d: Vec<String> = p.d().iter().map(format_rational).collect();
    format!("u=[{}] d=[{}]", u.join(";"), d.join(","))
}

pub fn verify_flatness(n: usize, t_max: u32, points: &str, corrupt: Option<&str>, seed: u64) -> Result<Outcome> {
    let corruption = corrupt.map(str::parse::<Corruption>).transpose()?;
    let pts = resolve_points(points, n, seed)?;
    let cert = flatness_certificate(n, &pts, t_max, corruption)?;
    let status = match cert.verdict {
        Verdict::Pass => Status::Pass,
        Verdict::Fail => Status::Fail,
    };
    let mut text = String::new();
    writeln!(text, "flatness of the family over the chart, n = {n}, t_max = {t_max}").unwrap();
    if let Some(c) = &cert.corruption {
        writeln!(text, "corruption: {c}").unwrap();
    }
    writeln!(text, "expected Hilbert polynomial: {}", cert.expected).unwrap();
    for f in &cert.fibers {
        writeln!(
            text,
            "  fiber {} {}: dim {} HP {} (from t = {}) {}",
            f.index,
            point_brief(&f.point),
            f.projective_dimension,
            f.hilbert_polynomial,
            f.hilbert_polynomial.stabilization_threshold.map_or("?".into(), |t| t.to_string()),
            if f.matches { "ok" } else { "DIVERGES" }
        )
        .unwrap();
    }
    if !cert.divergent_fibers.is_empty() {
        writeln!(text, "divergent fibers: {:?}", cert.divergent_fibers).unwrap();
    }
    write!(text, "{}", status.label()).unwrap();
    let mut report = serde_json::to_value(&cert).expect("plain data");
    report["seed"] = json!(seed);
    report["points_spec"] = json!(points);
    Ok(Outcome { status, report, text })
}

pub fn verify_groebner(n: usize, random_orders: usize, seed: u64) -> Result<Outcome> {
    let ideal = diagonal_ideal(n);
    let mut orders = vec![MonomialOrderSpec::lex(n), MonomialOrderSpec::grevlex(n), MonomialOrderSpec::block(n)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kinds = [OrderKind::Lex, OrderKind::Grevlex, OrderKind::BlockLexXThenY];
    for k in 0..random_orders {
        orders.push(MonomialOrderSpec::random(kinds[k % kinds.len()], n, &mut rng));
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    writeln!(text, "Gröbner certificate for the 2x2 minors of [x; y], n = {n}").unwrap();
    let mut all = true;
    for order in &orders {
        let cert = is_groebner_basis(ideal.generators(), order)?;
        all &= cert.holds;
        writeln!(
            text,
            "  {}: {} S-pairs, {}",
            order.label(),
            cert.pairs.len(),
            if cert.holds { "all reduce to 0" } else { "FAILS" }
        )
        .unwrap();
        rows.push(json!({
            "order": order.label(),
            "kind": order.kind,
            "permutation": order.permutation,
            "holds": cert.holds,
            "pairs": cert.pairs,
        }));
    }
    let status = Status::from_bool(all);
    write!(text, "{}", status.label()).unwrap();
    let report = json!({
        "n": n,
        "seed": seed,
        "generators": ideal.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "orders": rows,
        "verdict": status.label(),
    });
    Ok(Outcome { status, report, text })
}

fn polynomial_for(ideal: &Ideal, ts: std::ops::RangeInclusive<u32>, method: HilbertMethod) -> Result<(Value, HilbertPolynomialQ)> {
    let table = tabulate(ideal, ts, method)?;
    let poly = if ideal.is_unit()? {
        HilbertPolynomialQ::from_integers(&[])
    } else {
        let dim = ideal.projective_dimension()?.max(0) as usize;
        interpolate_hilbert_polynomial(&table, dim)?
    };
    Ok((table.to_json_rows(), poly))
}

pub fn hilbert(file: &Path, n: Option<usize>, t_max: u32, method: MethodArg) -> Result<Outcome> {
    let ideal = parse_ideal_file(file, n)?;
    let methods: Vec<HilbertMethod> = match method {
        MethodArg::Initial => vec![HilbertMethod::InitialIdealCount],
        MethodArg::Rank => vec![HilbertMethod::RankOracle],
        MethodArg::Both => vec![HilbertMethod::InitialIdealCount, HilbertMethod::RankOracle],
    };
    let mut tables = Vec::new();
    let mut polys = Vec::new();
    for m in &methods {
        let (rows, poly) = polynomial_for(&ideal, 0..=t_max, *m)?;
        tables.push(json!({"method": m.name(), "rows": rows}));
        polys.push(poly);
    }
    let agree = tables.windows(2).all(|w| {
        let strip = |v: &Value| v["rows"].as_array().unwrap().iter().map(|r| r["value"].clone()).collect::<Vec<_>>();
        strip(&w[0]) == strip(&w[1])
    }) && polys.windows(2).all(|w| w[0] == w[1]);
    let status = Status::from_bool(agree);
    let mut text = String::new();
    writeln!(text, "ideal in P^{n} x P^{n}: {} generators", ideal.generators().len(), n = ideal.n()).unwrap();
    for (tbl, poly) in tables.iter().zip(&polys) {
        let values: Vec<String> = tbl["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| format!("{}:{}", r["t"], r["value"]))
            .collect();
        writeln!(text, "  {}: {}", tbl["method"].as_str().unwrap(), values.join(" ")).unwrap();
        writeln!(
            text,
            "  Hilbert polynomial: {} (from t = {})",
            poly,
            poly.stabilization_threshold.map_or("?".into(), |t| t.to_string())
        )
        .unwrap();
    }
    if methods.len() > 1 {
        writeln!(text, "methods agree: {agree}").unwrap();
    }
    write!(text, "{}", status.label()).unwrap();
    let report = json!({
        "n": ideal.n(),
        "generators": ideal.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "t_max": t_max,
        "tables": tables,
        "hilbert_polynomial": polys[0],
        "methods_agree": agree,
        "verdict": status.label(),
    });
    Ok(Outcome { status, report, text })
}

pub fn xi(d0: u32, d1: u32, trials: usize, seed: u64) -> Result<Outcome> {
    let report = xi_trials(d0, d1, trials, seed)?;
    let status = Status::from_bool(report.holds);
    let mut text = String::new();
    writeln!(text, "curve pairs of degrees ({d0}, {d1}), {trials} trials, seed {seed}").unwrap();
    writeln!(text, "  closed formula: {}", report.formula).unwrap();
    writeln!(text, "  complete-intersection count: {}", report.koszul_reference).unwrap();
    for r in &report.records {
        writeln!(
            text,
            "  trial {} (seed {}, attempts {}): {}",
            r.trial,
            r.seed,
            r.attempts,
            r.hilbert_polynomial.as_ref().map_or("none".to_string(), |p| p.render())
        )
        .unwrap();
    }
    writeln!(text, "  matches formula: {}/{}", report.formula_matches, trials).unwrap();
    writeln!(text, "  matches complete-intersection count: {}/{}", report.koszul_matches, trials).unwrap();
    writeln!(text, "  retries: {}", report.total_retries).unwrap();
    write!(text, "{}", status.label()).unwrap();
    let mut value = serde_json::to_value(&report).expect("plain data");
    value["verdict"] = json!(status.label());
    Ok(Outcome { status, report: value, text })
}

pub fn torus(n: usize, points: &str, seed: u64) -> Result<Outcome> {
    let symbolic = torus_action_symbolic(n)?;
    let pts = resolve_points(points, n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut numeric = Vec::new();
    let mut orbits = Vec::new();
    for p in &pts {
        let c = TorusElement::random(n, &mut rng);
        numeric.push(torus_action_check(p, &c)?);
        orbits.push(closed_orbit_limit_check(p)?);
    }
    let ok = symbolic.holds && numeric.iter().all(|r| r.holds) && orbits.iter().all(|o| o.holds);
    let status = Status::from_bool(ok);
    let mut text = String::new();
    writeln!(text, "torus action on the family, n = {n}").unwrap();
    let scal: Vec<String> = symbolic.generators.iter().map(|g| format!("{}->{}", g.label, g.scalar)).collect();
    writeln!(text, "  symbolic: {} [{}]", if symbolic.holds { "ok" } else { "FAILS" }, scal.join(" ")).unwrap();
    for (r, o) in numeric.iter().zip(&orbits) {
        let scal: Vec<String> = r.generators.iter().map(|g| g.scalar.clone()).collect();
        writeln!(
            text,
            "  {} c=[{}]: scalars [{}] {}, orbit closure reaches (I,0): {}",
            point_brief(r.point.as_ref().unwrap()),
            r.torus.as_ref().unwrap().join(","),
            scal.join(" "),
            if r.holds { "ok" } else { "FAILS" },
            o.holds
        )
        .unwrap();
    }
    write!(text, "{}", status.label()).unwrap();
    let report = json!({
        "n": n,
        "seed": seed,
        "symbolic": symbolic,
        "numeric": numeric,
        "orbit_closure": orbits,
        "verdict": status.label(),
    });
    Ok(Outcome { status, report, text })
}

fn random_conic(rng: &mut ChaCha8Rng) -> SymmetricMatrixQ {
    loop {
        let upper: Vec<Vec<flatcert::Rational>> =
            (0..3).map(|i| (i..3).map(|_| random_rational(rng, 5, 1)).collect()).collect();
        let rows = (0..3)
            .map(|i| (0..3).map(|j| if i <= j { upper[i][j - i].clone() } else { upper[j][i - j].clone() }).collect())
            .collect();
        let z = SymmetricMatrixQ::new(rows).expect("symmetric by construction");
        if z.is_nondegenerate() {
            return z;
        }
    }
}

pub fn conic(z: Option<&str>, conics: usize, samples: usize, seed: u64) -> Result<Outcome> {
    let symbolic = conic_adjugate_identity_symbolic()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    let mut without_points = 0usize;
    match z {
        Some(text) => reports.push(conic_global_equations_check(&parse_matrix(text)?, samples, seed)?),
        None => {
            // conics without rational points are replaced and counted
            let mut attempts = 0;
            while reports.len() < conics && attempts < 50 * conics.max(1) {
                attempts += 1;
                let z = random_conic(&mut rng);
                let r = conic_global_equations_check(&z, samples, seed.wrapping_add(attempts as u64))?;
                if r.base_point.is_none() {
                    without_points += 1;
                    continue;
                }
                reports.push(r);
            }
        }
    }
    let checked: usize = reports.iter().map(|r| r.points_checked).sum();
    let ok = symbolic && reports.iter().all(|r| r.holds);
    // a conic with no rational point in reach leaves nothing to check
    let wanted = if z.is_some() { 1 } else { conics };
    let status = if ok && (checked == 0 || reports.len() < wanted) {
        Status::Inconclusive
    } else {
        Status::from_bool(ok)
    };
    let mut text = String::new();
    writeln!(text, "complete conics: 3 z adj(z) = trace(z adj(z)) I symbolically: {symbolic}").unwrap();
    for r in &reports {
        let z: Vec<String> = r.z.iter().map(|row| row.join(",")).collect();
        writeln!(
            text,
            "  z = [{}]: identity {}, points {}/{} pass, {} skipped",
            z.join(";"),
            r.adjugate_identity_holds,
            r.points_passed,
            r.points_checked,
            r.skipped
        )
        .unwrap();
    }
    if without_points > 0 {
        writeln!(text, "  conics without a rational point found (replaced): {without_points}").unwrap();
    }
    writeln!(text, "  sampled points checked: {checked}").unwrap();
    write!(text, "{}", status.label()).unwrap();
    let report = json!({
        "seed": seed,
        "symbolic_identity_holds": symbolic,
        "conics": reports,
        "conics_without_rational_point": without_points,
        "points_checked": checked,
        "verdict": status.label(),
    });
    Ok(Outcome { status, report, text })
}

pub fn primary(n: usize) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for k in 1..=n {
        let p = primary_intersection_check(k);
        let u = flatcert::VariableUniverse::new(k);
        let init = diagonal_ideal(k).initial_ideal(&MonomialOrderSpec::lex(k))?;
        let nzd = nonzerodivisor_check(&incidence_form(&u), init.gens())?;
        let good = p.holds && p.components_are_minimal_primes && nzd.is_nonzerodivisor && nzd.hf_identity;
        ok &= good;
        let comps: Vec<String> = p.components.iter().map(|c| format!("<{}>", c.join(","))).collect();
        writeln!(text, "n = {k}: <{}> = {}", p.ideal.join(","), comps.join(" ∩ ")).unwrap();
        writeln!(
            text,
            "  intersection {}, x.y avoids all primes: {:?}, HF identity: {}",
            if p.holds { "matches" } else { "DIFFERS" },
            nzd.prime_avoidance,
            nzd.hf_identity
        )
        .unwrap();
        rows.push(json!({"n": k, "primary": p, "nonzerodivisor": nzd}));
    }
    let status = Status::from_bool(ok);
    write!(text, "{}", status.label()).unwrap();
    let report = json!({"n": n, "checks": rows, "verdict": status.label()});
    Ok(Outcome { status, report, text })
}

/// Exit status for an error: 2 when the Hilbert function never settled, 3
/// for input and usage problems.
pub fn error_status(e: &Error) -> i32 {
    match e {
        Error::NoStabilization { .. } | Error::InsufficientSamples { .. } => Status::Inconclusive as i32,
        _ => 3,
    }
}

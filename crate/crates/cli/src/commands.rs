use std::fmt::Write as _;

use serde_json::{json, Value};

use barymetric::centers::CenterSet;
use barymetric::fuzz::{run_fuzz, Execution, FuzzConfig, FuzzSummary};
use barymetric::kernel::{cot_angle, dist2, metric_kh, BaryPoint, TriangleShape, Vertex};
use barymetric::oracle::{CartesianPoint, Embedding, Placement};
use barymetric::theorems::{check, default_probes, run_all, Theorem, TheoremReport};
use barymetric::{GeometryError, Rational};

use crate::args::{Cli, Command, Format, ShapeArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;

/// Largest denominator used when rounding `--vertices` side lengths.
const VERTEX_MAX_DENOM: u64 = 1_000_000;
const ORACLE_QUERIES: usize = 10;

pub struct Output {
    pub text: String,
    pub passed: bool,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        let code = match e {
            GeometryError::DegenerateTriangle(_) | GeometryError::DegenerateEmbedding => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

/// What every command hands back before formatting.
struct Report {
    command: &'static str,
    shape: Option<TriangleShape>,
    results: Value,
    passed: bool,
    seed: Option<u64>,
    text: String,
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let report = match &cli.command {
        Command::Centers { shape } => centers(&build_shape(shape)?),
        Command::Distance { shape, p, q } => distance(&build_shape(shape)?, p, q)?,
        Command::Angle { shape, q, p, r } => angle(&build_shape(shape)?, q, p, r)?,
        Command::Check { shape, seed, theorem } => check_cmd(&build_shape(shape)?, *seed, theorem.as_deref())?,
        Command::Fuzz { count, seed, tol, sequential } => {
            let cfg = FuzzConfig { count: *count as usize, seed: *seed, rel_tol: *tol, queries: ORACLE_QUERIES };
            let exec = if *sequential { Execution::Sequential } else { Execution::default() };
            fuzz(&cfg, exec)
        }
    };
    let text = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            let doc = json!({
                "command": report.command,
                "shape": report.shape.as_ref().map(shape_json),
                "results": report.results,
                "passed": report.passed,
                "seed": report.seed,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
            s.push('\n');
            s
        }
    };
    Ok(Output { text, passed: report.passed })
}

fn build_shape(args: &ShapeArgs) -> Result<TriangleShape, Failure> {
    if let Some(sides) = &args.sides {
        return Ok(TriangleShape::new(sides[0].clone(), sides[1].clone(), sides[2].clone())?);
    }
    let v = args.vertices.as_ref().ok_or_else(|| Failure::usage("either --sides or --vertices is required"))?;
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Failure::usage("vertex coordinates must be finite numbers"));
    }
    let emb = Embedding {
        a: CartesianPoint::new(v[0], v[1]),
        b: CartesianPoint::new(v[2], v[3]),
        c: CartesianPoint::new(v[4], v[5]),
        placement: Placement::Canonical,
    };
    let lens = emb.side_lengths();
    let longest = lens.iter().cloned().fold(0.0, f64::max);
    if longest == 0.0 || emb.double_area().abs() <= 1e-12 * longest * longest {
        let (i, _) = lens.iter().enumerate().fold((0, 0.0), |m, (i, &l)| if l > m.1 { (i, l) } else { m });
        let names = ["a", "b", "c"];
        return Err(GeometryError::DegenerateTriangle(format!(
            "vertices are collinear; triangle inequality fails: {} = {} equals the sum of the other two sides",
            names[i], lens[i]
        ))
        .into());
    }
    let sides: Vec<Rational> = lens
        .iter()
        .map(|&l| Rational::approximate(l, VERTEX_MAX_DENOM).expect("finite side length"))
        .collect();
    eprintln!(
        "note: --vertices is lossy; sides rounded to a = {}, b = {}, c = {}",
        sides[0], sides[1], sides[2]
    );
    Ok(TriangleShape::new(sides[0].clone(), sides[1].clone(), sides[2].clone())?)
}

fn shape_json(s: &TriangleShape) -> Value {
    json!({
        "a": s.a().to_string(),
        "b": s.b().to_string(),
        "c": s.c().to_string(),
        "sa": s.sa().to_string(),
        "sb": s.sb().to_string(),
        "sc": s.sc().to_string(),
        "s2": s.s2().to_string(),
    })
}

fn shape_line(s: &TriangleShape) -> String {
    format!("a = {}, b = {}, c = {}", s.a(), s.b(), s.c())
}

fn coords_json(p: &BaryPoint) -> Value {
    Value::from(p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

const POINT_NAMES: [&str; 11] = ["A", "B", "C", "G", "H", "O", "N", "I", "IA", "IB", "IC"];

fn named_point(set: &CenterSet, name: &str) -> Option<BaryPoint> {
    let p = match name.to_ascii_uppercase().as_str() {
        "A" => BaryPoint::a(),
        "B" => BaryPoint::b(),
        "C" => BaryPoint::c(),
        "G" => set.centroid.clone(),
        "H" => set.orthocenter.clone(),
        "O" => set.circumcenter.clone(),
        "N" => set.nine_point_center.clone(),
        "I" => set.incenter.clone(),
        "IA" => set.excenter(Vertex::A).clone(),
        "IB" => set.excenter(Vertex::B).clone(),
        "IC" => set.excenter(Vertex::C).clone(),
        _ => return None,
    };
    Some(p)
}

/// A named point, or homogeneous coordinates `x,y,z` (normalized to sum 1).
fn parse_point(set: &CenterSet, s: &str) -> Result<BaryPoint, Failure> {
    if let Some(p) = named_point(set, s) {
        return Ok(p);
    }
    let parts: Vec<&str> = s.split([',', ':']).collect();
    if parts.len() != 3 {
        return Err(Failure::usage(format!(
            "unknown point `{s}`: expected one of {} or a triple x,y,z",
            POINT_NAMES.join(" ")
        )));
    }
    let mut c = Vec::with_capacity(3);
    for part in parts {
        c.push(part.parse::<Rational>().map_err(|e| Failure::usage(e.to_string()))?);
    }
    let [x, y, z]: [Rational; 3] = c.try_into().expect("three coordinates");
    Ok(BaryPoint::homogeneous(x, y, z)?)
}

fn centers(s: &TriangleShape) -> Report {
    let set = CenterSet::new(s);
    let pts: [(&str, &BaryPoint); 8] = [
        ("G", &set.centroid),
        ("H", &set.orthocenter),
        ("O", &set.circumcenter),
        ("N", &set.nine_point_center),
        ("I", &set.incenter),
        ("IA", set.excenter(Vertex::A)),
        ("IB", set.excenter(Vertex::B)),
        ("IC", set.excenter(Vertex::C)),
    ];
    let radii: [(&str, &Rational); 9] = [
        ("R2", &set.r2_circum),
        ("r2", &set.r2_in),
        ("ra2", &set.r2_ex[0]),
        ("rb2", &set.r2_ex[1]),
        ("rc2", &set.r2_ex[2]),
        ("Rr", &set.rr_in),
        ("Rra", &set.rr_ex[0]),
        ("Rrb", &set.rr_ex[1]),
        ("Rrc", &set.rr_ex[2]),
    ];
    let mut results = serde_json::Map::new();
    let mut text = shape_line(s) + "\n";
    for (name, p) in pts {
        results.insert(name.into(), coords_json(p));
        let _ = writeln!(text, "{name:<3} = {p}");
    }
    for (name, r) in radii {
        results.insert(name.into(), Value::from(r.to_string()));
        let _ = writeln!(text, "{name:<3} = {r}");
    }
    Report { command: "centers", shape: Some(s.clone()), results: Value::Object(results), passed: true, seed: None, text }
}

fn distance(s: &TriangleShape, p_name: &str, q_name: &str) -> Result<Report, Failure> {
    let set = CenterSet::new(s);
    let (p, q) = (parse_point(&set, p_name)?, parse_point(&set, q_name)?);
    let d2 = dist2(&metric_kh(s), &p, &q)?;
    let approx = d2.to_f64().sqrt();
    let results = json!({
        "p": coords_json(&p),
        "q": coords_json(&q),
        "dist2": d2.to_string(),
        "approx": { "distance": approx },
    });
    let text = format!("{}\n|{p_name} {q_name}|^2 = {d2}\n|{p_name} {q_name}| ~ {approx}\n", shape_line(s));
    Ok(Report { command: "distance", shape: Some(s.clone()), results, passed: true, seed: None, text })
}

fn angle(s: &TriangleShape, q_name: &str, p_name: &str, r_name: &str) -> Result<Report, Failure> {
    let set = CenterSet::new(s);
    let (q, p, r) = (parse_point(&set, q_name)?, parse_point(&set, p_name)?, parse_point(&set, r_name)?);
    let cot = cot_angle(s, &q, &p, &r)?;
    let scaled = cot.scaled();
    let degrees = (2.0 * s.s2().to_f64().sqrt() * cot.bracket().to_f64()).atan2(cot.ip().to_f64()).to_degrees();
    let cot_approx = (!cot.is_degenerate()).then(|| cot.to_f64());
    let results = json!({
        "ip": cot.ip().to_string(),
        "bracket": cot.bracket().to_string(),
        "s2": cot.s2().to_string(),
        "cot_times_2s": scaled.as_ref().map(|v| v.to_string()),
        "right": cot.is_right(),
        "degenerate": cot.is_degenerate(),
        "approx": { "cot": cot_approx, "degrees": degrees },
    });
    let mut text = shape_line(s) + "\n";
    let _ = writeln!(text, "angle {q_name} {p_name} {r_name}: ip = {}, bracket = {}", cot.ip(), cot.bracket());
    match &scaled {
        Some(v) => {
            let _ = writeln!(text, "cot * 2S = {v}");
        }
        None => text.push_str("points are collinear; cot undefined\n"),
    }
    if cot.is_right() {
        text.push_str("right angle\n");
    }
    let _ = writeln!(text, "angle ~ {degrees} degrees");
    Ok(Report { command: "angle", shape: Some(s.clone()), results, passed: true, seed: None, text })
}

fn report_json(r: &TheoremReport) -> Value {
    json!({
        "name": r.name.name(),
        "passed": r.passed,
        "relation": r.relation,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "detail": r.detail,
    })
}

fn check_cmd(s: &TriangleShape, seed: u64, theorem: Option<&str>) -> Result<Report, Failure> {
    let reports = match theorem {
        Some(name) => {
            let t: Theorem = name.parse()?;
            vec![check(t, s, Some(&default_probes(seed)))?]
        }
        None => run_all(s, seed),
    };
    let passed_count = reports.iter().filter(|r| r.passed).count();
    let mut text = shape_line(s) + "\n";
    for r in &reports {
        if r.passed {
            let _ = writeln!(text, "PASS {}", r.name);
        } else {
            let _ = writeln!(text, "FAIL {}: {}", r.name, r.detail);
        }
    }
    let _ = writeln!(text, "{passed_count}/{} passed", reports.len());
    Ok(Report {
        command: "check",
        shape: Some(s.clone()),
        results: Value::from(reports.iter().map(report_json).collect::<Vec<_>>()),
        passed: passed_count == reports.len(),
        seed: Some(seed),
        text,
    })
}

fn fuzz(cfg: &FuzzConfig, exec: Execution) -> Report {
    let summary = run_fuzz(cfg, exec);
    let text = fuzz_text(cfg, &summary);
    let failure = summary.first_failure.as_ref().map(|f| {
        json!({
            "index": f.index,
            "trial_seed": f.trial_seed,
            "shape": shape_json(&f.shape),
            "failed_theorems": f.failed_theorems.iter().map(report_json).collect::<Vec<_>>(),
            "oracle_mismatches": f.oracle.mismatches.iter().map(|m| json!({
                "quantity": m.quantity,
                "approx": { "kernel": m.kernel, "oracle": m.oracle },
            })).collect::<Vec<_>>(),
        })
    });
    let results = json!({
        "count": summary.count,
        "shapes_passed": summary.passed,
        "comparisons": summary.comparisons,
        "first_failure": failure,
        "approx": { "max_rel_error": summary.max_rel_error, "tol": cfg.rel_tol },
    });
    Report { command: "fuzz", shape: None, results, passed: summary.all_passed(), seed: Some(cfg.seed), text }
}

fn fuzz_text(cfg: &FuzzConfig, summary: &FuzzSummary) -> String {
    let mut text = format!("{}/{} shapes passed\n", summary.passed, summary.count);
    let _ = writeln!(
        text,
        "oracle: {} comparisons, max relative error {:.3e} (tol {:e})",
        summary.comparisons, summary.max_rel_error, cfg.rel_tol
    );
    if let Some(f) = &summary.first_failure {
        let _ = writeln!(text, "first failure: trial {} (trial seed {}), {}", f.index, f.trial_seed, shape_line(&f.shape));
        for r in &f.failed_theorems {
            let _ = writeln!(text, "  FAIL {}: {}", r.name, r.detail);
        }
        for m in &f.oracle.mismatches {
            let _ = writeln!(text, "  oracle {}: kernel {} vs oracle {}", m.quantity, m.kernel, m.oracle);
        }
        let _ = writeln!(
            text,
            "reproduce: barymetric fuzz --seed {} --count {} --tol {:e}",
            summary.seed,
            f.index + 1,
            cfg.rel_tol
        );
    }
    text
}

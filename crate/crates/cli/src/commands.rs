use std::fmt::Write as _;
use std::fs;

use rayon::prelude::*;
use serde_json::{json, Value};
use syzcurve::arrangements::{b3, fermat_dual, make_generic_line, PointsFile};
use syzcurve::curve::{construct_curve, construct_curve_from_global, instantiate, line_component_check, verify_curve, CurveReport};
use syzcurve::fatpoint::{dim_table, dim_table_range};
use syzcurve::forms::multi_indices;
use syzcurve::poly::parse_biform;
use syzcurve::reproduce::{run, summarize, Session};
use syzcurve::splitting::{in_valid_range, splitting_type, SplittingType};
use syzcurve::syzygy::{global_syzygies, restricted_syzygies};
use syzcurve::unexpected::{is_unexpected_direct, unexpected_types};
use syzcurve::{Arrangement, Error, ErrorKind, GenericLine, PointConfig, ProjPoint, TernaryForm};

use crate::args::*;

pub struct Output {
    pub json: Value,
    pub text: String,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    /// Some reproduction checks failed; the report is still emitted.
    ChecksFailed(Output),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Debug for Output {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::ChecksFailed(_) => 3,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::Math => 3,
                ErrorKind::Genericity => 4,
            },
        }
    }
}

type CmdResult = Result<Output, CliError>;

struct Loaded {
    name: String,
    config: PointConfig,
}

fn load(c: &Common) -> Result<Loaded, CliError> {
    let source = match (c.config, &c.points_file) {
        (Some(ConfigName::File) | None, Some(_)) => ConfigName::File,
        (Some(other), None) => other,
        (None, None) => return Err(CliError::Usage("one of --config or --points-file is required".into())),
        (Some(_), Some(_)) => {
            return Err(CliError::Usage("--points-file cannot be combined with a built-in --config".into()))
        }
    };
    if c.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    match source {
        ConfigName::B3 => Ok(Loaded {
            name: "b3".into(),
            config: b3(),
        }),
        ConfigName::Dfn => {
            let n = c.n.ok_or_else(|| CliError::Usage("--config dfn needs --n".into()))?;
            Ok(Loaded {
                name: format!("DF_{n}"),
                config: fermat_dual(n)?,
            })
        }
        ConfigName::File => {
            let path = c
                .points_file
                .as_ref()
                .ok_or_else(|| CliError::Usage("--config file needs --points-file".into()))?;
            let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let file: PointsFile =
                serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Ok(Loaded {
                name: path.display().to_string(),
                config: PointConfig::from_file(&file)?,
            })
        }
    }
}

fn line_for(z: &PointConfig, line: &Option<String>, seed: u64) -> Result<GenericLine, CliError> {
    Ok(match line {
        Some(text) => GenericLine::for_config(z, ProjPoint::parse(text, z.order())?)?,
        None => make_generic_line(z, seed, 30)?,
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn splitting_json(st: &SplittingType) -> Value {
    let dec = st.epsilon_decomposition();
    json!({
        "k": st.k,
        "exponents": st.exponents,
        "consistent": st.consistent,
        "base": dec.base,
        "eps": dec.gaps(),
        "mult": dec.mult,
    })
}

pub fn table(a: &TableArgs) -> CmdResult {
    let l = load(&a.common)?;
    let z = &l.config;
    let mut ks: Vec<u32> = (1..).take_while(|&k| in_valid_range(k, z.len())).collect();
    ks.push(ks.last().map_or(1, |k| k + 1));
    let rows: Vec<(u32, Result<(SplittingType, Vec<String>), Error>)> = ks
        .par_iter()
        .map(|&k| {
            let row = splitting_type(z, k, a.common.seed, a.common.samples).and_then(|st| {
                let types = unexpected_types(z, &st, a.common.seed, a.common.samples)?;
                Ok((st, types.iter().map(|t| t.to_string()).collect()))
            });
            (k, row)
        })
        .collect();
    let mut text = format!("{} (|Z| = {})\n", l.name, z.len());
    let _ = writeln!(text, "{:>3}  {:<24} {:<10} {:<12} unexpected", "k", "exponents", "eps", "t");
    let mut json_rows = Vec::new();
    for (k, row) in rows {
        match row {
            Ok((st, types)) => {
                let dec = st.epsilon_decomposition();
                let _ = writeln!(
                    text,
                    "{k:>3}  {:<24} {:<10} {:<12} {}",
                    join(&st.exponents),
                    if dec.gaps().is_empty() { "-".to_string() } else { join(dec.gaps()) },
                    join(&dec.mult),
                    if types.is_empty() { "-".to_string() } else { types.join(",") }
                );
                let mut v = splitting_json(&st);
                v["status"] = json!("ok");
                v["unexpected"] = json!(types);
                json_rows.push(v);
            }
            Err(e @ Error::NonConvergent { .. }) => {
                let _ = writeln!(text, "{k:>3}  non-convergent (outside validity range): {e}");
                json_rows.push(json!({"k": k, "status": "non-convergent", "reason": e.to_string()}));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Output {
        json: json!({"config": l.name, "size": z.len(), "rows": json_rows}),
        text,
    })
}

pub fn splitting(a: &KArgs) -> CmdResult {
    let l = load(&a.common)?;
    let st = splitting_type(&l.config, a.k, a.common.seed, a.common.samples)?;
    let dec = st.epsilon_decomposition();
    let text = format!(
        "{} k={}: ({})  base {}  eps [{}]  t [{}]  chern {}\n",
        l.name,
        a.k,
        join(&st.exponents),
        dec.base,
        join(dec.gaps()),
        join(&dec.mult),
        if st.consistent { "ok" } else { "violated" }
    );
    let mut v = splitting_json(&st);
    v["config"] = json!(l.name);
    Ok(Output { json: v, text })
}

pub fn dimtable(a: &DimtableArgs) -> CmdResult {
    let l = load(&a.common)?;
    let t = match a.max_j {
        Some(j) => dim_table_range(&l.config, a.k, a.common.seed, a.common.samples, j)?,
        None => dim_table(&l.config, a.k, a.common.seed, a.common.samples)?,
    };
    let diffs = t.differences();
    let mut text = format!("{} k={}\n{:>4} {:>6} {:>6}\n", l.name, a.k, "j", "D(j)", "diff");
    for (j, (e, d)) in t.entries.iter().zip(&diffs).enumerate() {
        let _ = writeln!(text, "{j:>4} {e:>6} {d:>6}");
    }
    let _ = writeln!(text, "convex: {}", t.is_convex());
    Ok(Output {
        json: json!({
            "config": l.name,
            "k": a.k,
            "entries": t.entries,
            "differences": diffs,
            "convex": t.is_convex(),
            "points": t.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        }),
        text,
    })
}

/// Basis elements as strings, one entry per multi-index slot.
enum Basis_ {
    Global(Vec<Vec<TernaryForm>>),
    Restricted(Vec<syzcurve::syzygy::SyzygyVector>),
}

fn basis(arr: &Arrangement, line: &GenericLine, a: &SyzygyArgs) -> Result<Basis_, CliError> {
    Ok(match a.basis {
        Basis::Global => Basis_::Global(global_syzygies(arr, a.k, a.d)?),
        Basis::Restricted => Basis_::Restricted(restricted_syzygies(arr, line, a.k, a.d)?),
    })
}

fn basis_strings(b: &Basis_) -> Vec<Vec<String>> {
    match b {
        Basis_::Global(v) => v.iter().map(|t| t.iter().map(|c| c.to_string()).collect()).collect(),
        Basis_::Restricted(v) => v
            .iter()
            .map(|s| s.restricted.iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Global => "global",
        Basis::Restricted => "restricted",
    }
}

fn slot_names(k: u32) -> Vec<String> {
    multi_indices(k)
        .iter()
        .map(|i| {
            let mut s = String::new();
            for (v, &e) in ["x", "y", "z"].iter().zip(i) {
                for _ in 0..e {
                    s.push_str(v);
                }
            }
            s
        })
        .collect()
}

pub fn syzygies(a: &SyzygyArgs) -> CmdResult {
    let l = load(&a.common)?;
    let arr = Arrangement::new(l.config.clone())?;
    let line = line_for(&l.config, &a.line, a.common.seed)?;
    let b = basis(&arr, &line, a)?;
    let strings = basis_strings(&b);
    let slots = slot_names(a.k);
    let mut text = format!(
        "{} k={} d={} {} basis: {} element(s)\n",
        l.name,
        a.k,
        a.d,
        basis_name(a.basis),
        strings.len()
    );
    if a.basis == Basis::Restricted {
        let _ = writeln!(text, "line {} (parameters l, m)", line.dual_point());
    }
    for (i, s) in strings.iter().enumerate() {
        let _ = writeln!(text, "{}:", i + 1);
        for (slot, c) in slots.iter().zip(s) {
            let _ = writeln!(text, "  {slot:>6}: {c}");
        }
    }
    Ok(Output {
        json: json!({
            "config": l.name,
            "k": a.k,
            "d": a.d,
            "basis": basis_name(a.basis),
            "line": line.dual_point().to_string(),
            "slots": slots,
            "syzygies": strings,
        }),
        text,
    })
}

fn report_json(r: &CurveReport) -> Value {
    json!({
        "curve": r.curve.to_string(),
        "degree": r.degree,
        "removed_degree": r.removed_degree,
        "point": r.point.to_string(),
        "mult_at_point": r.mult_at_point,
        "multiplicities": r.multiplicities,
        "line_components": r.line_components.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "non_determined": r.non_determined.iter().map(|n| json!({
            "point_index": n.point_index,
            "multiplicity": n.multiplicity,
        })).collect::<Vec<_>>(),
    })
}

fn report_text(r: &CurveReport) -> String {
    let mut text = format!(
        "curve: {}\ndegree {} (removed {}), multiplicity {} at {}\nmultiplicities at Z: [{}]\n",
        r.curve,
        r.degree,
        r.removed_degree,
        r.mult_at_point,
        r.point,
        join(&r.multiplicities)
    );
    for (lc, nd) in r.line_components.iter().zip(&r.non_determined) {
        let _ = writeln!(text, "line component {lc} (point {})", nd.point_index);
    }
    text
}

pub fn construct(a: &ConstructArgs) -> CmdResult {
    let s = &a.syzygy;
    let l = load(&s.common)?;
    let arr = Arrangement::new(l.config.clone())?;
    let line = line_for(&l.config, &s.line, s.common.seed)?;
    let (report, chosen) = if let Some(tuple) = &a.tuple {
        let parts = tuple
            .split(';')
            .map(|t| TernaryForm::parse(t.trim(), l.config.order()))
            .map(|f| f.map(|f| if f.is_zero() { TernaryForm::zero(s.d) } else { f }))
            .collect::<Result<Vec<_>, _>>()?;
        let strings = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        (construct_curve_from_global(&arr, &line, s.k, &parts)?, strings)
    } else {
        let b = basis(&arr, &line, s)?;
        let strings = basis_strings(&b);
        if a.syzygy_index == 0 || a.syzygy_index > strings.len() {
            return Err(Error::IndexOutOfRange {
                index: a.syzygy_index,
                len: strings.len(),
            }
            .into());
        }
        let i = a.syzygy_index - 1;
        let r = match &b {
            Basis_::Global(v) => construct_curve_from_global(&arr, &line, s.k, &v[i])?,
            Basis_::Restricted(v) => construct_curve(&arr, &line, &v[i])?,
        };
        (r, strings[i].clone())
    };
    let divides = line_component_check(&report);
    let mut json = report_json(&report);
    json["config"] = json!(l.name);
    json["k"] = json!(s.k);
    json["d"] = json!(s.d);
    json["line"] = json!(line.dual_point().to_string());
    json["basis"] = json!(if a.tuple.is_some() { "tuple" } else { basis_name(s.basis) });
    json["syzygy"] = json!(chosen);
    json["line_component_check"] = json!(divides);
    let text = format!(
        "{} k={} d={} line {}\nsyzygy [{}]\n{}line components divide: {divides}\n",
        l.name,
        s.k,
        s.d,
        line.dual_point(),
        chosen.join(", "),
        report_text(&report)
    );
    Ok(Output { json, text })
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let l = load(&a.common)?;
    let order = l.config.order();
    let point = ProjPoint::parse(&a.point, order)?;
    let text = fs::read_to_string(&a.curve_file)
        .map_err(|e| CliError::Usage(format!("{}: {e}", a.curve_file.display())))?;
    let curve = instantiate(&parse_biform(&text, order)?, &point)?;
    let r = verify_curve(&curve, &l.config, &point)?;
    let meets = a.d.map(|d| r.mult_at_point >= d);
    let mut json = report_json(&r);
    json["config"] = json!(l.name);
    json["meets_d"] = json!(meets);
    let mut text = format!("{}\n{}", l.name, report_text(&r));
    if let Some(m) = meets {
        let _ = writeln!(text, "multiplicity at least d: {m}");
    }
    Ok(Output { json, text })
}

pub fn unexpected(a: &UnexpectedArgs) -> CmdResult {
    let l = load(&a.common)?;
    let z = &l.config;
    let st = match splitting_type(z, a.k, a.common.seed, a.common.samples) {
        Ok(st) => Some(st),
        Err(Error::NonConvergent { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let v = is_unexpected_direct(z, a.d, a.k, st.as_ref(), a.common.seed, a.common.samples)?;
    let text = format!(
        "{} type ({},{}): actual {} expected {} -> {}\nindependent conditions: {}\nsimple criterion: {}\ngap criterion: {}\nstarred: {}\n",
        l.name,
        a.d + a.k,
        a.d,
        v.actual_dim,
        v.expected_dim,
        if v.verdict_direct { "unexpected" } else { "not unexpected" },
        v.independent,
        v.verdict_simple.map_or("n/a".into(), |b| b.to_string()),
        v.verdict_epsilon.map_or("n/a".into(), |b| b.to_string()),
        v.starred
    );
    Ok(Output {
        json: json!({
            "config": l.name,
            "d": v.d,
            "k": v.k,
            "actual_dim": v.actual_dim,
            "expected_dim": v.expected_dim,
            "independent": v.independent,
            "verdict_direct": v.verdict_direct,
            "verdict_simple": v.verdict_simple,
            "verdict_epsilon": v.verdict_epsilon,
            "starred": v.starred,
            "splitting": st.as_ref().map(splitting_json),
        }),
        text,
    })
}

pub fn reproduce(a: &ReproduceArgs) -> CmdResult {
    if a.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let session = Session::new(a.seed, a.samples);
    let checks = run(&session, a.filter.as_deref());
    if checks.is_empty() {
        return Err(CliError::Usage(format!(
            "no checks match filter {:?}",
            a.filter.as_deref().unwrap_or("")
        )));
    }
    let passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for s in summarize(&checks) {
        for c in &s.checks {
            let _ = writeln!(text, "{} {:<18} {}", if c.passed { "PASS" } else { "FAIL" }, c.key(), c.title);
            for d in &c.details {
                let _ = writeln!(text, "     {d}");
            }
        }
    }
    let _ = writeln!(
        text,
        "{} of {} checks passed",
        checks.iter().filter(|c| c.passed).count(),
        checks.len()
    );
    let out = Output {
        json: json!({
            "passed": passed,
            "checks": checks.iter().map(|c| json!({
                "key": c.key(),
                "criterion": c.criterion,
                "title": c.title,
                "passed": c.passed,
                "details": c.details,
            })).collect::<Vec<_>>(),
        }),
        text,
    };
    if passed {
        Ok(out)
    } else {
        Err(CliError::ChecksFailed(out))
    }
}

use std::io::{self, Write};
use std::path::PathBuf;

use serde_json::{json, Value};
use symchar::character_oracles::{
    agreement_kernel, even_cycle_classes, min_distinguishing_set, min_vanishing_set, odd_regular_classes,
    regular_classes, split_values, transposition_pair_counterexamples, vanishing_counterexamples,
    verify_decomposition_fixture, DecompositionFixture, QuadraticValue, SearchOutcome,
};
use symchar::chartable::{character_table, load_table, mn_value, save_table, CacheError, CharacterTable};
use symchar::class_algebra::{generating_set, z_ell_types, Algebra, ClassAlgebra, ClassLabel, GeneratingSet, SplitSign};
use symchar::modular_criteria::{fayers_reducible, hook_case, restriction_decomposable, FieldSpec};
use symchar::partitions::{enumerate_partitions, EllPrimeConvention};
use symchar::regularity::{hagis_limit, ln_big, regular_counts};
use symchar::{Error, Partition};

use crate::args::{AlgebraArg, ClassSetArgs, Command, FieldArgs};
use crate::checks;
use crate::output::{Report, Table};

/// Largest `n` for which full character tables are built.
pub const TABLE_MAX_N: usize = 18;
/// Largest `n` for the transposition-pair certification mode.
pub const PAIR_MAX_N: usize = 75;
/// Largest `max_n` for regular partition counts.
pub const COUNT_MAX_N: usize = 50_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cache: {0}")]
    Cache(#[from] CacheError),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Cache(_) => "cache",
            CliError::Io(_) => "io",
            CliError::Failed(_) => "check-failed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource() => 3,
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Context<'a> {
    pub cache_dir: Option<PathBuf>,
    pub diag: &'a mut (dyn Write + Send),
}

impl Context<'_> {
    fn note(&mut self, msg: &str) {
        let _ = writeln!(self.diag, "{msg}");
    }

    /// Character table of `S_n`, from the cache when possible.
    pub fn table(&mut self, n: usize, use_cache: bool) -> Result<CharacterTable> {
        if n > TABLE_MAX_N {
            return Err(Error::Budget(format!(
                "character table for n = {n} exceeds the budget n <= {TABLE_MAX_N}"
            ))
            .into());
        }
        let dir = match (&self.cache_dir, use_cache) {
            (Some(d), true) => d.clone(),
            _ => return Ok(character_table(n)),
        };
        match load_table(n, &dir) {
            Ok(t) => return Ok(t),
            Err(CacheError::Io(e)) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => self.note(&format!("ignoring cached table for n = {n}: {e}")),
        }
        let t = character_table(n);
        std::fs::create_dir_all(&dir)?;
        save_table(&t, &dir)?;
        Ok(t)
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    Ok(s.trim().parse::<Partition>()?)
}

/// A character label: must be a partition of exactly `n`.
fn parse_char(s: &str, n: usize) -> Result<Partition> {
    let p = parse_partition(s)?;
    if p.n() != n {
        return Err(Error::SizeMismatch { left: p.n(), right: n }.into());
    }
    Ok(p)
}

/// A class label: fixed points may be left out.
fn parse_class(s: &str, n: usize) -> Result<Partition> {
    let p = parse_partition(s)?;
    if p.n() > n {
        return Err(Error::SizeMismatch { left: p.n(), right: n }.into());
    }
    Ok(p.padded(n))
}

fn parse_class_label(s: &str, n: usize) -> Result<ClassLabel> {
    let s = s.trim();
    let (body, split) = match s.chars().last() {
        Some('+') => (&s[..s.len() - 1], Some(SplitSign::Plus)),
        Some('-') => (&s[..s.len() - 1], Some(SplitSign::Minus)),
        _ => (s, None),
    };
    let cycle_type = parse_class(body, n)?;
    Ok(ClassLabel { cycle_type, split })
}

fn label(p: &Partition) -> String {
    p.to_string()
}

fn labels(ps: &[Partition]) -> Vec<String> {
    ps.iter().map(label).collect()
}

fn quadratic_json(q: &QuadraticValue) -> Value {
    json!({
        "u": q.u().to_string(),
        "v": q.v().to_string(),
        "d": q.d().to_string(),
        "text": q.to_string(),
    })
}

fn field(args: &FieldArgs) -> Result<FieldSpec> {
    Ok(if args.algebraically_closed {
        FieldSpec::algebraically_closed(args.p)?
    } else {
        FieldSpec::finite(args.p, args.k.unwrap_or(1))?
    })
}

fn class_set(args: &ClassSetArgs, n: usize) -> Result<Vec<Partition>> {
    if let Some(list) = &args.classes {
        return list
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_class(s, n))
            .collect();
    }
    let convention: EllPrimeConvention = args.convention.parse()?;
    let set = args
        .set
        .as_deref()
        .ok_or_else(|| Error::Domain("give --classes or --set".into()))?;
    Ok(match set {
        "even-cycles" => even_cycle_classes(n),
        "z-ell" => z_ell_types(args.ell, n)?,
        "odd-regular" => odd_regular_classes(n, args.ell, convention)?,
        "regular" => regular_classes(n, args.ell, convention)?,
        "all" => enumerate_partitions(n),
        other => return Err(Error::Domain(format!("unknown class set {other:?}")).into()),
    })
}

fn search_report(out: &SearchOutcome) -> Report {
    let mut t = Table::new(["class"]);
    for w in &out.witness {
        t.push(vec![label(w)]);
    }
    Report::new(json!({
        "n": out.n,
        "predicate": out.predicate,
        "size": out.size,
        "witness": labels(&out.witness),
        "exhaustive": out.exhaustive,
    }))
    .with_table(t)
}

pub fn execute(cmd: &Command, ctx: &mut Context) -> Result<Report> {
    match cmd {
        Command::Chartable { n, no_cache } => {
            let t = ctx.table(*n, !no_cache)?;
            let cols = labels(t.labels());
            let values: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
            let mut table = Table::new(std::iter::once("lambda".to_string()).chain(cols.iter().cloned()));
            for (l, r) in cols.iter().zip(&values) {
                table.push(std::iter::once(l.clone()).chain(r.iter().cloned()).collect());
            }
            Ok(Report::new(json!({
                "n": n,
                "row_labels": cols,
                "col_labels": cols,
                "values": values,
            }))
            .with_table(table))
        }
        Command::Central { n, lambda, mu } => {
            let lambda = parse_char(lambda, *n)?;
            let mu = parse_class(mu, *n)?;
            let chi = mn_value(&lambda, &mu)?;
            let omega = symchar::chartable::central_character(&lambda, &mu)?;
            Ok(Report::new(json!({
                "n": n,
                "lambda": label(&lambda),
                "mu": label(&mu),
                "chi": chi.to_string(),
                "degree": lambda.dimension().to_string(),
                "class_size": mu.class_size().to_string(),
                "omega": omega.to_string(),
            })))
        }
        Command::Structconst {
            n,
            algebra,
            left,
            right,
            rho,
        } => {
            let alg_kind = match algebra {
                AlgebraArg::Sn => Algebra::Sn,
                AlgebraArg::An => Algebra::An,
            };
            let x = parse_class_label(left, *n)?;
            let y = parse_class_label(right, *n)?;
            let alg = ClassAlgebra::new(*n, alg_kind)?;
            let prod = alg.product(&x, &y)?;
            let mut table = Table::new(["label", "sign", "coeff"]);
            let terms: Vec<Value> = prod
                .sorted_terms()
                .into_iter()
                .map(|(l, c)| {
                    let sign = l.split.map(|s| s.symbol().to_string());
                    table.push(vec![label(&l.cycle_type), sign.clone().unwrap_or_default(), c.to_string()]);
                    let mut v = json!({"label": label(&l.cycle_type), "coeff": c.to_string()});
                    if let Some(s) = sign {
                        v["sign"] = json!(s);
                    }
                    v
                })
                .collect();
            let mut payload = json!({
                "n": n,
                "algebra": alg_kind,
                "left": x.to_string(),
                "right": y.to_string(),
                "terms": terms,
            });
            if let Some(r) = rho {
                let r = parse_class_label(r, *n)?;
                payload["rho"] = json!(r.to_string());
                payload["coefficient"] = json!(prod.coeff(&r).to_string());
            }
            Ok(Report::new(payload).with_table(table))
        }
        Command::VerifyGeneration { n, set, ell } => {
            let kind: GeneratingSet = set.parse()?;
            let gens = generating_set(kind, *ell, *n)?;
            let alg = ClassAlgebra::new(*n, kind.algebra())?;
            let dim = alg.closure_dimension(&gens)?;
            let names: Vec<String> = gens
                .iter()
                .map(|g| {
                    g.sorted_terms()
                        .iter()
                        .map(|(l, c)| if c.is_integer() && *c.numer() == 1.into() { l.to_string() } else { format!("{c}*{l}") })
                        .collect::<Vec<_>>()
                        .join(" + ")
                })
                .collect();
            Ok(Report::new(json!({
                "n": n,
                "set": set.to_ascii_lowercase(),
                "ell": ell,
                "algebra": kind.algebra(),
                "generators": names,
                "dimension": dim,
                "target": alg.dim(),
                "generates": dim == alg.dim(),
            })))
        }
        Command::OracleVanishing { n, classes } => {
            let set = class_set(classes, *n)?;
            let t = ctx.table(*n, true)?;
            let bad = vanishing_counterexamples(&t, &set)?;
            let mut table = Table::new(["lambda"]);
            for b in &bad {
                table.push(vec![label(b)]);
            }
            Ok(Report::new(json!({
                "n": n,
                "classes": labels(&set),
                "counterexamples": labels(&bad),
                "certified": bad.is_empty(),
            }))
            .with_table(table))
        }
        Command::OracleAgreement { n, classes } => {
            let set = class_set(classes, *n)?;
            let t = ctx.table(*n, true)?;
            let pairs = agreement_kernel(&t, &set)?;
            let conj_only = pairs.iter().all(|(a, b)| a.conjugate() == *b);
            let conj_count = t.labels().iter().filter(|l| **l > l.conjugate()).count();
            let mut table = Table::new(["lambda", "mu"]);
            for (a, b) in &pairs {
                table.push(vec![label(a), label(b)]);
            }
            Ok(Report::new(json!({
                "n": n,
                "classes": labels(&set),
                "pairs": pairs.iter().map(|(a, b)| [label(a), label(b)]).collect::<Vec<_>>(),
                "empty": pairs.is_empty(),
                "exactly_conjugate_pairs": conj_only && pairs.len() == conj_count,
            }))
            .with_table(table))
        }
        Command::SearchCn {
            n,
            max_size,
            certify_pair,
            from,
            to,
        } => {
            if *certify_pair {
                if *to > PAIR_MAX_N {
                    return Err(Error::Budget(format!("pair certification beyond n = {PAIR_MAX_N}")).into());
                }
                let mut results = Vec::new();
                let mut table = Table::new(["n", "counterexamples"]);
                for m in (*from).max(2)..=*to {
                    ctx.note(&format!("certifying n = {m}"));
                    let bad = transposition_pair_counterexamples(m);
                    table.push(vec![m.to_string(), labels(&bad).join(" ")]);
                    results.push(json!({"n": m, "counterexamples": labels(&bad)}));
                }
                let certified = results.iter().all(|r| r["counterexamples"].as_array().is_some_and(|a| a.is_empty()));
                return Ok(Report::new(json!({
                    "predicate": "vanishing-pair",
                    "witness": ["2", "4"],
                    "from": from,
                    "to": to,
                    "certified": certified,
                    "results": results,
                }))
                .with_table(table));
            }
            let n = n.expect("required by clap");
            let t = ctx.table(n, true)?;
            Ok(search_report(&min_vanishing_set(&t, *max_size)?))
        }
        Command::SearchBn { n, max_size } => {
            let t = ctx.table(*n, true)?;
            Ok(search_report(&min_distinguishing_set(&t, *max_size)?))
        }
        Command::SplitValues { lambda } => {
            let lambda = parse_partition(lambda)?;
            let (a, b) = split_values(&lambda)?;
            let q = Partition::new(lambda.diagonal_hooks())?;
            let chi = mn_value(&lambda, &q)?;
            let sum = a.checked_add(&b).expect("conjugate pair");
            Ok(Report::new(json!({
                "lambda": label(&lambda),
                "n": lambda.n(),
                "class": label(&q),
                "plus": quadratic_json(&a),
                "minus": quadratic_json(&b),
                "sum": sum.to_string(),
                "chi": chi.to_string(),
            })))
        }
        Command::Restriction { lambda, field: f } => {
            let lambda = parse_partition(lambda)?;
            let field = field(f)?;
            let v = restriction_decomposable(&lambda, &field)?;
            let mut table = Table::new(["code", "condition", "holds", "detail"]);
            for r in &v.reasons {
                table.push(vec![
                    r.code.to_string(),
                    serde_json::to_value(r.condition).expect("enum").as_str().unwrap_or_default().to_string(),
                    r.holds.to_string(),
                    r.detail.clone(),
                ]);
            }
            Ok(Report::new(json!({
                "lambda": label(&lambda),
                "field": field.to_string(),
                "decomposable": v.decomposable,
                "reasons": v.reasons,
            }))
            .with_table(table))
        }
        Command::Fayers { lambda, p } => {
            let lambda = parse_partition(lambda)?;
            Ok(Report::new(json!({
                "lambda": label(&lambda),
                "p": p,
                "reducible": fayers_reducible(&lambda, *p)?,
            })))
        }
        Command::HookCase { n, r, field: f } => {
            let field = field(f)?;
            Ok(Report::new(json!({
                "n": n,
                "r": r,
                "field": field.to_string(),
                "decomposable": hook_case(*n, *r, &field)?,
            })))
        }
        Command::RegularCount { ell, max_n, checkpoints } => {
            if *max_n > COUNT_MAX_N {
                return Err(Error::Budget(format!("max_n beyond {COUNT_MAX_N}")).into());
            }
            let cps: Vec<usize> = if checkpoints.is_empty() { vec![*max_n] } else { checkpoints.clone() };
            if cps.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Domain("checkpoints must be strictly increasing".into()).into());
            }
            if cps.iter().any(|&c| c > *max_n) {
                return Err(Error::Domain("checkpoints must not exceed max_n".into()).into());
            }
            let limit = hagis_limit(*ell)?;
            let series = regular_counts(*ell, *max_n)?;
            let mut table = Table::new(["n", "regular", "partitions", "log_g", "normalized", "gap"]);
            let rows: Vec<Value> = cps
                .iter()
                .map(|&m| {
                    let log_g = ln_big(&series.values[m]) - ln_big(&series.p_values[m]);
                    let normalized = if m == 0 { 0.0 } else { log_g / (m as f64).sqrt() };
                    let gap = normalized - limit;
                    table.push(vec![
                        m.to_string(),
                        series.values[m].to_string(),
                        series.p_values[m].to_string(),
                        format!("{log_g:.6}"),
                        format!("{normalized:.6}"),
                        format!("{gap:.6}"),
                    ]);
                    json!({
                        "n": m,
                        "regular": series.values[m].to_string(),
                        "partitions": series.p_values[m].to_string(),
                        "log_g": log_g,
                        "normalized": normalized,
                        "gap": gap,
                    })
                })
                .collect();
            Ok(Report::new(json!({
                "ell": ell,
                "max_n": max_n,
                "limit": limit,
                "rows": rows,
            }))
            .with_table(table))
        }
        Command::VerifyFixture { name, file } => {
            let f = match (name, file) {
                (Some(name), _) => DecompositionFixture::builtin(name)?,
                (None, Some(path)) => DecompositionFixture::from_json(&std::fs::read_to_string(path)?)?,
                (None, None) => unreachable!("clap requires one"),
            };
            if f.n > TABLE_MAX_N {
                return Err(Error::Budget(format!("fixture for n = {} exceeds the table budget", f.n)).into());
            }
            let r = verify_decomposition_fixture(&f)?;
            let mut table = Table::new(["check", "detail"]);
            for x in &r.failures {
                let v = serde_json::to_value(x).expect("serialisable");
                table.push(vec![v["check"].as_str().unwrap_or_default().to_string(), v.to_string()]);
            }
            let mut payload = serde_json::to_value(&r).expect("serialisable");
            payload["name"] = json!(f.name);
            Ok(Report::new(payload).with_table(table))
        }
        Command::Check { which } => {
            let ids: Vec<u8> = if which == "all" {
                checks::ALL.to_vec()
            } else {
                which
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u8>()
                            .ok()
                            .filter(|i| checks::ALL.contains(i))
                            .ok_or_else(|| Error::Domain(format!("unknown criterion {s:?}")))
                    })
                    .collect::<std::result::Result<_, _>>()?
            };
            let mut suite = checks::Suite::new();
            let mut results = Vec::new();
            let mut table = Table::new(["criterion", "status", "seconds", "detail"]);
            for id in ids {
                ctx.note(&format!("running criterion {id}"));
                let r = suite.run(id);
                table.push(vec![
                    id.to_string(),
                    if r.passed { "PASS" } else { "FAIL" }.to_string(),
                    format!("{:.2}", r.elapsed.as_secs_f64()),
                    r.detail.clone(),
                ]);
                results.push(r);
            }
            let passed = results.iter().all(|r| r.passed);
            let report = Report::new(json!({
                "passed": passed,
                "results": results.iter().map(|r| json!({
                    "criterion": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "seconds": r.elapsed.as_secs_f64(),
                    "detail": r.detail,
                })).collect::<Vec<_>>(),
            }))
            .with_table(table);
            Ok(report)
        }
    }
}

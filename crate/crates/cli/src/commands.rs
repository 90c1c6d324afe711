use std::fmt;
use std::fs;
use std::path::Path;

use hypertangent::combinatorics::{
    bs_codim_profile, codim_report, crux_certificate, hypertangent_profile, scan as run_scan,
    xi_min_bruteforce, xi_min_formula, GateFlag, ScanRequest,
};
use hypertangent::ledger::full_ledger;
use hypertangent::poly::{
    groebner_basis, instance_to_json, monomial_ideal_dimension, parse_instance, PolyDocument,
    SparsePoly,
};
use hypertangent::regularity::{monte_carlo_regularity, random_hs, regularity_report};
use hypertangent::{DegreeVector, Error, ErrorKind, Limits};
use serde_json::{json, Value};

use crate::output::{write_csv, OutputRecord};
use crate::Format;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.kind() == ErrorKind::Limit => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// Text ready for stdout.
pub struct Rendered {
    pub text: String,
}

impl From<OutputRecord> for Rendered {
    fn from(r: OutputRecord) -> Self {
        Rendered { text: r.render() }
    }
}

type CmdResult = Result<Rendered, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> CliError {
    match e {
        Error::Parse(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => CliError::Core(other),
    }
}

/// Sub-reports that may legitimately be unavailable are embedded as
/// `{"error": ...}` instead of failing the command.
fn embed<T: serde::Serialize>(r: hypertangent::Result<T>) -> Value {
    match r {
        Ok(v) => serde_json::to_value(v).expect("reports serialize"),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn certify(degrees: &[u32], full: bool) -> CmdResult {
    let d = DegreeVector::new(degrees)?;
    let certificate = crux_certificate(&d)?;
    let result = if full {
        json!({
            "certificate": certificate,
            "profile": embed(hypertangent_profile(&d)),
            "baseLocus": embed(bs_codim_profile(&d)),
            "codim": embed(codim_report(&d)),
            "ledger": embed(full_ledger(&d)),
        })
    } else {
        json!({ "certificate": certificate })
    };
    Ok(OutputRecord::new("certify", json!({ "degrees": degrees, "full": full }), result).into())
}

pub fn scan(
    k_min: u32,
    k_max: u32,
    d_min: u32,
    d_max: u32,
    filters: &[String],
    format: Format,
    limits: &Limits,
) -> CmdResult {
    let mut request = ScanRequest::new(k_min, k_max, d_max);
    request.d_min = d_min;
    for f in filters {
        let flag = GateFlag::parse(f).ok_or_else(|| {
            CliError::Input(format!(
                "unknown filter {f:?}; expected deltaOk, sizeOk, numericPass or overallPass"
            ))
        })?;
        request = request.with_filter(flag);
    }
    let rows = run_scan(&request, limits.scan_limit)?;
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).map_err(|e| CliError::Input(e.to_string()))?;
            Ok(Rendered {
                text: String::from_utf8(buf).expect("csv output is utf-8"),
            })
        }
        Format::Json => {
            let result = json!({ "count": rows.len(), "rows": rows });
            Ok(OutputRecord::new("scan", serde_json::to_value(&request).unwrap(), result).into())
        }
    }
}

pub fn xi_min(k: u32, total: u32, bruteforce: bool) -> CmdResult {
    let formula = xi_min_formula(k, total)?;
    let mut result = json!({ "formula": formula });
    if bruteforce {
        let enumerated = xi_min_bruteforce(k, total)?;
        result["bruteforce"] = json!(enumerated);
        result["equal"] = json!(formula == enumerated);
    }
    let inputs = json!({ "k": k, "total": total, "bruteforce": bruteforce });
    Ok(OutputRecord::new("xi-min", inputs, result).into())
}

pub fn codim(degrees: &[u32]) -> CmdResult {
    let d = DegreeVector::new(degrees)?;
    let report = codim_report(&d)?;
    let result = json!({ "holds": report.holds(), "report": report });
    Ok(OutputRecord::new("codim", json!({ "degrees": degrees }), result).into())
}

pub fn groebner_dim(file: &Path, limits: &Limits) -> CmdResult {
    let doc = PolyDocument::parse(&read(file)?).map_err(|e| in_file(file, e))?;
    limits.check_vars(doc.num_vars)?;
    let basis = groebner_basis(&doc.polys, limits)?;
    let leading: Vec<_> = basis
        .iter()
        .filter_map(|p| p.leading_monomial().cloned())
        .collect();
    let dimension = monomial_ideal_dimension(&leading, doc.num_vars);
    let strings = |ps: &[SparsePoly]| ps.iter().map(ToString::to_string).collect::<Vec<_>>();
    let result = json!({
        "modulus": doc.field.modulus(),
        "numVars": doc.num_vars,
        "generators": strings(&doc.polys),
        "groebner": strings(&basis),
        "dimension": dimension,
    });
    Ok(OutputRecord::new("groebner-dim", json!({ "file": file.display().to_string() }), result).into())
}

pub fn check_reg(file: &Path, h_spec: &str, seed: u64, limits: &Limits) -> CmdResult {
    let inst = parse_instance(&read(file)?).map_err(|e| in_file(file, e))?;
    let (hs, seeded) = match h_spec.split_once(':') {
        Some(("random", n)) => {
            let n: usize = n
                .parse()
                .map_err(|_| CliError::Input(format!("bad --h count {n:?}")))?;
            (random_hs(&inst, n, seed, limits)?, true)
        }
        Some(("file", path)) => {
            let path = Path::new(path);
            let doc = PolyDocument::parse(&read(path)?).map_err(|e| in_file(path, e))?;
            if doc.field != inst.field() || doc.num_vars != inst.num_vars() {
                return Err(CliError::Input(format!(
                    "{}: h forms must use modulus {} and {} variables",
                    path.display(),
                    inst.field().modulus(),
                    inst.num_vars()
                )));
            }
            (doc.polys, false)
        }
        _ => {
            return Err(CliError::Input(format!(
                "--h must be random:N or file:PATH, got {h_spec:?}"
            )))
        }
    };
    let report = regularity_report(&inst, &hs, limits);
    let inputs = json!({ "file": file.display().to_string(), "h": h_spec });
    let record = OutputRecord::new("check-reg", inputs, report);
    Ok(if seeded { record.with_seed(seed) } else { record }.into())
}

pub fn random_instance(
    degrees: &[u32],
    p: u64,
    seed: u64,
    out: Option<&Path>,
    limits: &Limits,
) -> CmdResult {
    let d = DegreeVector::new(degrees)?;
    let inst = hypertangent::regularity::random_instance(&d, p, seed, limits)?;
    let text = instance_to_json(&inst);
    let components = inst
        .standard_order_sequence()
        .iter()
        .filter(|e| !e.is_zero)
        .count();
    let mut result = json!({ "numVars": inst.num_vars(), "components": components });
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            result["file"] = json!(path.display().to_string());
        }
        None => {
            result["instance"] = serde_json::from_str::<Value>(&text).expect("instance json");
        }
    }
    let inputs = json!({ "degrees": degrees, "p": p });
    Ok(OutputRecord::new("random-instance", inputs, result).with_seed(seed).into())
}

pub fn ledger(degrees: &[u32]) -> CmdResult {
    let d = DegreeVector::new(degrees)?;
    let trace = full_ledger(&d)?;
    Ok(OutputRecord::new("ledger", json!({ "degrees": degrees }), trace).into())
}

pub fn monte_carlo(
    degrees: &[u32],
    p: u64,
    trials: u32,
    h_per_trial: u32,
    seed: u64,
    limits: &Limits,
) -> CmdResult {
    let d = DegreeVector::new(degrees)?;
    let stats = monte_carlo_regularity(&d, p, trials, h_per_trial, seed, limits);
    let inputs = json!({ "degrees": degrees, "p": p, "trials": trials, "hPerTrial": h_per_trial });
    Ok(OutputRecord::new("monte-carlo", inputs, stats).with_seed(seed).into())
}

//! Argument parsing and dispatch for the `standardize` binary.
//!
//! [`run`] never panics on bad input: every failure becomes an exit code
//! (2 parse or validation error, 3 group not spherical, 4 budget or table cap
//! exceeded) and a one-line message.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use standardize_core::oracle::{brute_min_standardizer_curve, brute_min_standardizer_parabolic, OracleError};
use standardize_core::parabolic::{minimal_standardizer, positive_conjugates, ribbon, strip_standardizer};
use standardize_core::{
    format_word, parse_word, ArtinGroup, AtomSet, CoxeterError, CoxeterMatrix, CurveError, DynnikovCoords,
    EnumerationBudget, GarsideError, ParabolicError, ParabolicPresentation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_SPHERICAL: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "standardize", version, about = "Minimal positive standardizers of curve systems and parabolic subgroups")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Args)]
struct GroupSpec {
    /// Named spherical type such as A3, B4, D5, E6, F4, H3, I2(5).
    #[arg(long = "type", value_name = "NAME", conflicts_with = "matrix")]
    kind: Option<String>,
    /// Coxeter matrix as JSON rows, 0 standing for an infinite entry.
    #[arg(long, value_name = "JSON")]
    matrix: Option<String>,
}

#[derive(Debug, Args)]
struct CurveSpec {
    /// Number of punctures.
    #[arg(long)]
    n: usize,
    /// Round curves around consecutive punctures, e.g. "1-2,4-5".
    #[arg(long, conflicts_with = "coords")]
    round: Option<String>,
    /// Reduced Dynnikov coordinates "a0,b0,a1,b1,...".
    #[arg(long)]
    coords: Option<String>,
    /// Braid word acting on the system before standardizing.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    act: String,
}

#[derive(Debug, Args)]
struct PresentationSpec {
    /// One-based atoms of X, comma separated.
    #[arg(long, default_value = "")]
    x: String,
    /// Signed word for α in the presentation α A_X α⁻¹.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    alpha: String,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Left normal form of a signed word.
    Nf {
        #[command(flatten)]
        group: GroupSpec,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Rounding of a curve system on the punctured disk.
    StandardizeCurve {
        #[command(flatten)]
        curve: CurveSpec,
    },
    /// Minimal positive standardizer of a parabolic subgroup.
    StandardizeParabolic {
        #[command(flatten)]
        group: GroupSpec,
        #[command(flatten)]
        presentation: PresentationSpec,
        /// Use the ribbon-stripping construction instead of the pn-normal form.
        #[arg(long)]
        strip: bool,
    },
    /// The ribbon r_{X,t} and its target.
    Ribbon {
        #[command(flatten)]
        group: GroupSpec,
        #[arg(long, default_value = "")]
        x: String,
        /// One-based atom added to X.
        #[arg(long)]
        t: usize,
    },
    /// Standard parabolic subgroups positively conjugate to A_X.
    Conjugates {
        #[command(flatten)]
        group: GroupSpec,
        #[arg(long, default_value = "")]
        x: String,
    },
    /// Brute-force shortest standardizer of a curve system or presentation.
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
    /// The spiral curve with k twists on n punctures and its rounding.
    Spiral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
enum OracleTarget {
    Curve {
        #[command(flatten)]
        curve: CurveSpec,
        #[command(flatten)]
        budget: BudgetSpec,
    },
    Parabolic {
        #[command(flatten)]
        group: GroupSpec,
        #[command(flatten)]
        presentation: PresentationSpec,
        #[command(flatten)]
        budget: BudgetSpec,
    },
}

#[derive(Debug, Args)]
struct BudgetSpec {
    #[arg(long, default_value_t = 12)]
    max_length: usize,
    #[arg(long, default_value_t = 2_000_000)]
    max_nodes: usize,
}

/// Exit code and the text to print (stdout on success, stderr otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into() }
    }
}

impl From<CoxeterError> for Failure {
    fn from(e: CoxeterError) -> Self {
        let code = match e {
            CoxeterError::NotSpherical => EXIT_NOT_SPHERICAL,
            CoxeterError::CapExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<GarsideError> for Failure {
    fn from(e: GarsideError) -> Self {
        match e {
            GarsideError::Coxeter(inner) => inner.into(),
            other => Failure::invalid(other.to_string()),
        }
    }
}

impl From<ParabolicError> for Failure {
    fn from(e: ParabolicError) -> Self {
        match e {
            ParabolicError::Garside(inner) => inner.into(),
            ParabolicError::InternalInconsistency => Failure { code: 1, message: e.to_string() },
            other => Failure::invalid(other.to_string()),
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        Failure::invalid(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded(_) => Failure { code: EXIT_BUDGET, message: e.to_string() },
            OracleError::Curve(inner) => inner.into(),
            OracleError::Parabolic(inner) => inner.into(),
            other => Failure::invalid(other.to_string()),
        }
    }
}

/// Parses `argv` (including the program name) and executes the verb.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            return Outcome { code, output: e.render().to_string().trim_end().to_string() };
        }
    };
    match dispatch(&cli.verb) {
        Ok(report) => Outcome { code: EXIT_OK, output: if cli.json { report.json.to_string() } else { report.text } },
        Err(f) => Outcome { code: f.code, output: format!("error: {}", f.message) },
    }
}

struct Report {
    text: String,
    json: Value,
}

fn group_of(spec: &GroupSpec) -> Result<ArtinGroup, Failure> {
    match (&spec.kind, &spec.matrix) {
        (Some(name), None) => Ok(ArtinGroup::named(name)?),
        (None, Some(rows)) => Ok(ArtinGroup::from_matrix(&CoxeterMatrix::from_json(rows)?)?),
        _ => Err(Failure::invalid("give exactly one of --type or --matrix")),
    }
}

fn braid_group(n: usize) -> Result<ArtinGroup, Failure> {
    if n < 2 {
        return Err(Failure::invalid(format!("need at least 2 punctures, got {n}")));
    }
    Ok(ArtinGroup::named(&format!("A{}", n - 1))?)
}

fn curve_of(spec: &CurveSpec) -> Result<DynnikovCoords, Failure> {
    braid_group(spec.n)?;
    let c = match (&spec.round, &spec.coords) {
        (Some(round), None) => DynnikovCoords::parse_round(round, spec.n)?,
        (None, Some(coords)) => {
            let c = DynnikovCoords::parse(coords)?;
            if c.punctures() != spec.n {
                return Err(Failure::invalid(format!("coordinates describe {} punctures, not {}", c.punctures(), spec.n)));
            }
            c
        }
        _ => return Err(Failure::invalid("give exactly one of --round or --coords")),
    };
    let act = parse_word(&spec.act, Some(spec.n - 1)).map_err(|e| Failure::invalid(e.to_string()))?;
    Ok(c.apply_braid(&act)?)
}

fn presentation_of(group: &ArtinGroup, spec: &PresentationSpec) -> Result<ParabolicPresentation, Failure> {
    Ok(ParabolicPresentation::parse(group, &spec.x, &spec.alpha)?)
}

fn subset_of(group: &ArtinGroup, text: &str) -> Result<AtomSet, Failure> {
    AtomSet::parse(text, group.rank()).map_err(|e| Failure::invalid(e.to_string()))
}

fn labels(set: AtomSet) -> String {
    set.to_labels().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn curve_report(coords: &DynnikovCoords, beta: &[i32]) -> Report {
    Report {
        text: format!("coords: {coords}\nbeta: {}\nsteps: {}", format_word(beta), beta.len()),
        json: json!({ "beta": format_word(beta), "steps": beta.len() }),
    }
}

fn dispatch(verb: &Verb) -> Result<Report, Failure> {
    match verb {
        Verb::Nf { group, word } => {
            let g = group_of(group)?;
            let word = parse_word(word, Some(g.rank())).map_err(|e| Failure::invalid(e.to_string()))?;
            let x = g.normalize(&word)?;
            let factors: Vec<String> = g.factors(&x).into_iter().map(|a| format!("[{}]", format_word(&simple_word(&g, a)))).collect();
            Ok(Report {
                text: format!(
                    "inf: {}\nfactors: {}\n{}\nword: {}",
                    x.inf(),
                    factors.len(),
                    g.display(&x),
                    format_word(&g.to_word(&x))
                ),
                json: g.to_json(&x),
            })
        }
        Verb::StandardizeCurve { curve } => {
            let c = curve_of(curve)?;
            let beta = c.standardize()?;
            Ok(curve_report(&c, &beta))
        }
        Verb::StandardizeParabolic { group, presentation, strip } => {
            let g = group_of(group)?;
            let p = presentation_of(&g, presentation)?;
            let (b, y) = if *strip { strip_standardizer(&g, &p)? } else { minimal_standardizer(&g, &p)? };
            let word = format_word(&g.to_word(&b));
            Ok(Report {
                text: format!("b: {word}\ntarget: {{{}}}", labels(y)),
                json: json!({ "b": word, "target": y.to_labels() }),
            })
        }
        Verb::Ribbon { group, x, t } => {
            let g = group_of(group)?;
            let x = subset_of(&g, x)?;
            if *t == 0 || *t > g.rank() {
                return Err(Failure::invalid(format!("atom {t} out of range for rank {}", g.rank())));
            }
            let (r, y) = ribbon(&g, x, t - 1)?;
            let word = format_word(&g.to_word(&r));
            Ok(Report {
                text: format!("ribbon: {word}\ntarget: {{{}}}", labels(y)),
                json: json!({ "ribbon": word, "target": y.to_labels() }),
            })
        }
        Verb::Conjugates { group, x } => {
            let g = group_of(group)?;
            let x = subset_of(&g, x)?;
            let found = positive_conjugates(&g, x)?;
            let text: Vec<String> = found.iter().map(|y| format!("{{{}}}", labels(*y))).collect();
            let docs: Vec<Vec<usize>> = found.iter().map(|y| y.to_labels()).collect();
            Ok(Report { text: text.join("\n"), json: json!({ "conjugates": docs }) })
        }
        Verb::Oracle { target } => oracle(target),
        Verb::Spiral { n, k } => {
            braid_group(*n)?;
            let c = DynnikovCoords::spiral(*k, *n)?;
            let beta = c.standardize()?;
            Ok(curve_report(&c, &beta))
        }
    }
}

fn simple_word(g: &ArtinGroup, a: standardize_core::Simple) -> Vec<i32> {
    g.simple_word(a).iter().map(|&s| s as i32 + 1).collect()
}

fn budget_of(spec: &BudgetSpec) -> Result<EnumerationBudget, Failure> {
    Ok(EnumerationBudget::new(spec.max_length, spec.max_nodes)?)
}

fn oracle(target: &OracleTarget) -> Result<Report, Failure> {
    match target {
        OracleTarget::Curve { curve, budget } => {
            let c = curve_of(curve)?;
            let g = braid_group(curve.n)?;
            let min = brute_min_standardizer_curve(&g, &c, budget_of(budget)?)?;
            let word = g.to_word(&min.element);
            let mut report = curve_report(&c, &word);
            report.text.push_str(&format!("\nties: {}", min.ties));
            report.json["ties"] = json!(min.ties);
            Ok(report)
        }
        OracleTarget::Parabolic { group, presentation, budget } => {
            let g = group_of(group)?;
            let p = presentation_of(&g, presentation)?;
            let (min, y) = brute_min_standardizer_parabolic(&g, &p, budget_of(budget)?)?;
            let word = format_word(&g.to_word(&min.element));
            Ok(Report {
                text: format!("b: {word}\ntarget: {{{}}}\nties: {}", labels(y), min.ties),
                json: json!({ "b": word, "target": y.to_labels(), "ties": min.ties }),
            })
        }
    }
}

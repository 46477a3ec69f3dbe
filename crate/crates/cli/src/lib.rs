//! Batch front end: parses jobs, runs them against `slope_calc`, renders JSON,
//! CSV, SVG or plain text.
//!
//! JSON output is deterministic: object keys are sorted and rationals are
//! written as `"p/q"` strings.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use slope_calc::extendability::{self, UnknottedTorusFacts};
use slope_calc::svg::unit_ball_svg;
use slope_calc::word::{self, cl_upper_bound_with_limit};
use slope_calc::{
    braid_torus_norm, BraidTorusSpec, BraidWord, Error, ExtendabilityVerdict, GenusEstimate, GroupWord, MappingClass,
    Nontriviality, Rational, RationalUnitBall, SatelliteSpec, Seminorm, Slope, SlopeReport,
};

/// Environment variable capping the commutator-length search.
pub const NODE_LIMIT_VAR: &str = "SLOPE_CALC_NODE_LIMIT";

#[derive(Parser, Debug, Clone)]
#[command(
    name = "slope-calc",
    version,
    about = "Slope seminorms, genus bounds and extendability criteria for braid-satellite tori"
)]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Classical invariants of a braid closure.
    Braid(BraidArgs),
    /// Seminorm of a standard braid torus on the given slopes.
    TorusNorm(TorusNormArgs),
    /// Slope reports for a braid satellite.
    Satellite(SatelliteArgs),
    /// Unit ball of the satellite seminorm (or of its lower bound).
    UnitBall(UnitBallArgs),
    /// Extendable-subgroup criteria for a braid satellite.
    Extendability(ExtendabilityArgs),
    /// Bounded commutator-length search in a free group.
    Cl(ClArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct BraidArgs {
    /// Signed generator indices, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true, required_unless_present = "file")]
    pub word: Option<String>,
    #[arg(long, required_unless_present = "file")]
    pub strands: Option<usize>,
    /// Braid file whose first line is `strands=N`.
    #[arg(long, conflicts_with_all = ["word", "strands"])]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct TorusNormArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
    #[arg(long)]
    pub strands: usize,
    /// Slope `x/y` or "x y"; repeatable.
    #[arg(long = "slope", required = true, allow_hyphen_values = true)]
    pub slopes: Vec<Slope>,
    /// Certified genus of the closure, replacing the computed estimate.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub genus: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Companion braid word.
    #[arg(long, allow_hyphen_values = true)]
    pub companion: String,
    /// Strand count of the companion braid.
    #[arg(long)]
    pub strands: usize,
    /// Pattern braid word.
    #[arg(long, allow_hyphen_values = true)]
    pub pattern: String,
    #[arg(long)]
    pub pattern_strands: usize,
    /// Twist matrix "p q r s" (row-major).
    #[arg(long, allow_hyphen_values = true)]
    pub twist: MappingClass,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub companion_genus: Option<i64>,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    pub pattern_genus: Option<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct SatelliteArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(
        long = "slope",
        allow_hyphen_values = true,
        required_unless_present = "range",
        conflicts_with = "range"
    )]
    pub slopes: Vec<Slope>,
    /// Tabulate every slope with max(|x|, |y|) <= N.
    #[arg(long)]
    pub range: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct UnitBallArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct ExtendabilityArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Slope height for the value-set index bound.
    #[arg(long)]
    pub range: Option<i64>,
    /// Slope whose Dehn twist is tested, together with --singular-genus.
    #[arg(long, allow_hyphen_values = true, requires = "singular_genus")]
    pub dehn_slope: Option<Slope>,
    #[arg(long, allow_hyphen_values = true, requires = "dehn_slope")]
    pub singular_genus: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct ClArgs {
    /// Word in x y z w (uppercase = inverse), or signed integers.
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long, default_value_t = 2)]
    pub k_max: usize,
    #[arg(long, default_value_t = 3)]
    pub len_max: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

/// Result of a job: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(err: &CliError) -> Self {
        Outcome {
            code: err.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Calc(Error),
    Usage(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Calc(e) if !e.is_input_error() => 1,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Calc(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Calc(e)
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(job: &JobSpec) -> Outcome {
    let result = match &job.command {
        Command::Braid(a) => run_braid(a),
        Command::TorusNorm(a) => run_torus_norm(a),
        Command::Satellite(a) => run_satellite(a),
        Command::UnitBall(a) => run_unit_ball(a),
        Command::Extendability(a) => run_extendability(a),
        Command::Cl(a) => run_cl(a),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::fail(&e),
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for `{command}`"))
}

// ---- braid ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidReport {
    pub strands: usize,
    pub word: Vec<i64>,
    pub permutation: String,
    pub winding_number: i64,
    pub seifert_genus_upper: i64,
    pub alexander: String,
    pub genus: GenusEstimate,
    /// `None` when nontriviality could not be decided.
    pub nontrivial: Option<bool>,
}

pub fn braid_report(b: &BraidWord) -> Result<BraidReport, Error> {
    let nontrivial = match b.is_nontrivial_knot()? {
        Nontriviality::Nontrivial => Some(true),
        Nontriviality::Trivial => Some(false),
        Nontriviality::Unknown => None,
    };
    Ok(BraidReport {
        strands: b.strands(),
        word: b.letters().to_vec(),
        permutation: b.permutation().to_string(),
        winding_number: b.winding_number()?,
        seifert_genus_upper: b.seifert_genus_upper()?,
        alexander: b.alexander_polynomial()?.to_string(),
        genus: b.knot_genus()?,
        nontrivial,
    })
}

fn run_braid(a: &BraidArgs) -> CliResult<String> {
    let b = match (&a.file, &a.word, a.strands) {
        (Some(path), _, _) => BraidWord::parse_document(&std::fs::read_to_string(path).map_err(CliError::Io)?)?,
        (None, Some(word), Some(strands)) => BraidWord::parse(word, strands)?,
        _ => {
            return Err(CliError::Usage(
                "--word and --strands are required without --file".into(),
            ))
        }
    };
    let report = braid_report(&b)?;
    match a.format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => {
            let g = &report.genus;
            let mut s = String::new();
            let _ = writeln!(s, "braid        {} on {} strands", b, report.strands);
            let _ = writeln!(s, "permutation  {}", report.permutation);
            let _ = writeln!(s, "winding      {}", report.winding_number);
            let _ = writeln!(s, "alexander    {}", report.alexander);
            let _ = writeln!(
                s,
                "genus        [{}, {}] exact={} via {:?}",
                g.lower, g.upper, g.exact, g.method
            );
            let _ = writeln!(
                s,
                "nontrivial   {}",
                report.nontrivial.map_or("unknown".to_string(), |v| v.to_string())
            );
            Ok(s)
        }
        f => Err(unsupported(f, "braid")),
    }
}

// ---- torus-norm ----

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusNormRow {
    pub slope: Slope,
    pub norm: Seminorm,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusNormReport {
    pub genus: GenusEstimate,
    pub rows: Vec<TorusNormRow>,
}

fn torus_spec(word: &str, strands: usize, genus: Option<i64>) -> Result<BraidTorusSpec, Error> {
    let b = BraidWord::parse(word, strands)?;
    match genus {
        Some(g) => BraidTorusSpec::with_genus(b, g),
        None => BraidTorusSpec::new(b),
    }
}

fn run_torus_norm(a: &TorusNormArgs) -> CliResult<String> {
    let torus = torus_spec(&a.braid, a.strands, a.genus)?;
    let rows = a
        .slopes
        .iter()
        .map(|&c| {
            Ok(TorusNormRow {
                slope: c,
                norm: braid_torus_norm(&torus, &c.homology::<Rational>())?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let report = TorusNormReport {
        genus: *torus.genus(),
        rows,
    };
    match a.format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => Ok(report
            .rows
            .iter()
            .map(|r| format!("{}\t{}\n", r.slope, r.norm))
            .collect()),
        Format::Csv => {
            let mut s = String::from("x,y,norm,kind\n");
            for r in &report.rows {
                let _ = writeln!(s, "{},{},{},{:?}", r.slope.x(), r.slope.y(), r.norm.value, r.norm.kind);
            }
            Ok(s)
        }
        f => Err(unsupported(f, "torus-norm")),
    }
}

// ---- satellite ----

pub fn satellite_spec(a: &SpecArgs) -> Result<SatelliteSpec, Error> {
    Ok(SatelliteSpec::new(
        torus_spec(&a.companion, a.strands, a.companion_genus)?,
        a.twist,
        torus_spec(&a.pattern, a.pattern_strands, a.pattern_genus)?,
    ))
}

/// Either a verdict or the reason none could be given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Entry<T> {
    Verdict(T),
    Unavailable(String),
}

impl<T> From<Result<T, Error>> for Entry<T> {
    fn from(r: Result<T, Error>) -> Self {
        match r {
            Ok(v) => Entry::Verdict(v),
            Err(e) => Entry::Unavailable(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeTable {
    pub max_height: i64,
    pub rows: Vec<SlopeReport>,
    pub index_bound: Entry<ExtendabilityVerdict>,
}

/// One report per canonical slope of height at most `n`, plus the value-set
/// index bound from the exact norms.
pub fn slope_table(spec: &SatelliteSpec, n: i64) -> Result<SlopeTable, Error> {
    if n < 1 {
        return Err(Error::InvalidRange);
    }
    let rows = Slope::enumerate(n).into_iter().map(|c| spec.slope_report(c)).collect();
    Ok(SlopeTable {
        max_height: n,
        rows,
        index_bound: extendability::norm_index_bound(spec, n).into(),
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

const CSV_HEADER: &str = "x,y,norm,norm_kind,singular_lower,singular_upper,singular_exact,genus_upper";

fn csv_row(r: &SlopeReport) -> String {
    let sg = r.singular_genus.as_ref();
    format!(
        "{},{},{},{},{},{},{},{}",
        r.slope.x(),
        r.slope.y(),
        opt(&r.norm.as_ref().map(|n| n.value)),
        opt(&r.norm.as_ref().map(|n| format!("{:?}", n.kind))),
        opt(&sg.map(|b| b.singular_lower)),
        opt(&sg.and_then(|b| b.singular_upper)),
        opt(&sg.and_then(|b| b.singular_exact)),
        opt(&r.genus_upper),
    )
}

fn text_row(r: &SlopeReport) -> String {
    let norm = r.norm.as_ref().map_or("-".to_string(), |n| n.to_string());
    let singular = match &r.singular_genus {
        Some(b) => match (b.singular_exact, b.singular_upper) {
            (Some(e), _) => format!("g* = {e}"),
            (None, Some(u)) => format!("g* in [{}, {}]", b.singular_lower, u),
            (None, None) => format!("g* >= {}", b.singular_lower),
        },
        None => "g* -".to_string(),
    };
    let genus = r.genus_upper.map_or("g -".to_string(), |g| format!("g <= {g}"));
    format!(
        "{:>8}  norm {:<8} {:<16} {}\n",
        r.slope.to_string(),
        norm,
        singular,
        genus
    )
}

fn run_satellite(a: &SatelliteArgs) -> CliResult<String> {
    let spec = satellite_spec(&a.spec)?;
    if let Some(n) = a.range {
        let table = slope_table(&spec, n)?;
        return match a.format {
            Format::Json => Ok(to_json(&table)),
            Format::Csv => {
                let mut s = format!("{CSV_HEADER}\n");
                for r in &table.rows {
                    s.push_str(&csv_row(r));
                    s.push('\n');
                }
                match &table.index_bound {
                    Entry::Verdict(v) => {
                        let k = match v.conclusion {
                            slope_calc::Conclusion::IndexAtLeast(k) => k.to_string(),
                            other => format!("{other:?}"),
                        };
                        let _ = writeln!(s, "index_at_least,{k},{},,,,,", v.justification.citation);
                    }
                    Entry::Unavailable(why) => {
                        let _ = writeln!(s, "index_at_least,,\"{}\",,,,,", why.replace('"', "\"\""));
                    }
                }
                Ok(s)
            }
            Format::Text => {
                let mut s: String = table.rows.iter().map(text_row).collect();
                match &table.index_bound {
                    Entry::Verdict(v) => {
                        let _ = writeln!(s, "index bound: {:?} [{}]", v.conclusion, v.justification.citation);
                    }
                    Entry::Unavailable(why) => {
                        let _ = writeln!(s, "index bound unavailable: {why}");
                    }
                }
                Ok(s)
            }
            f => Err(unsupported(f, "satellite")),
        };
    }
    let reports: Vec<SlopeReport> = a.slopes.iter().map(|&c| spec.slope_report(c)).collect();
    match a.format {
        Format::Json if reports.len() == 1 => Ok(to_json(&reports[0])),
        Format::Json => Ok(to_json(&reports)),
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for r in &reports {
                s.push_str(&csv_row(r));
                s.push('\n');
            }
            Ok(s)
        }
        Format::Text => Ok(reports.iter().map(text_row).collect()),
        f => Err(unsupported(f, "satellite")),
    }
}

// ---- unit-ball ----

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BallReport {
    Polygon(RationalUnitBall),
    Unbounded { null_direction: Slope },
}

pub fn ball_report(spec: &SatelliteSpec) -> Result<BallReport, Error> {
    match spec.unit_ball_polygon::<Rational>() {
        Ok(ball) => Ok(BallReport::Polygon(ball)),
        Err(Error::UnboundedUnitBall { null_direction }) => Ok(BallReport::Unbounded { null_direction }),
        Err(e) => Err(e),
    }
}

fn run_unit_ball(a: &UnitBallArgs) -> CliResult<String> {
    let spec = satellite_spec(&a.spec)?;
    let report = ball_report(&spec)?;
    match (a.format, &report) {
        (Format::Json, r) => Ok(to_json(r)),
        (Format::Svg, BallReport::Polygon(ball)) => Ok(unit_ball_svg(ball)),
        (Format::Svg, BallReport::Unbounded { null_direction }) => Err(CliError::Calc(Error::UnboundedUnitBall {
            null_direction: *null_direction,
        })),
        (Format::Text, BallReport::Polygon(ball)) => {
            Ok(ball.vertices.iter().map(|v| format!("({}, {})\n", v.x, v.y)).collect())
        }
        (Format::Text, BallReport::Unbounded { null_direction }) => {
            Ok(format!("unbounded: null direction {null_direction}\n"))
        }
        (f, _) => Err(unsupported(f, "unit-ball")),
    }
}

// ---- extendability ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendabilityReport {
    pub finiteness_from_norm: Entry<ExtendabilityVerdict>,
    pub finiteness_from_twist: Entry<ExtendabilityVerdict>,
    pub index_bound: Option<Entry<ExtendabilityVerdict>>,
    pub dehn_twist: Option<Entry<ExtendabilityVerdict>>,
    pub unknotted_torus: UnknottedTorusFacts,
}

pub fn extendability_report(
    spec: &SatelliteSpec,
    range: Option<i64>,
    dehn: Option<(Slope, i64)>,
) -> ExtendabilityReport {
    ExtendabilityReport {
        finiteness_from_norm: extendability::finiteness_from_norm(spec).into(),
        finiteness_from_twist: extendability::finiteness_from_twist(spec).into(),
        index_bound: range.map(|n| extendability::norm_index_bound(spec, n).into()),
        dehn_twist: dehn.map(|(c, g)| extendability::dehn_twist_stably_extendable(c, g).into()),
        unknotted_torus: extendability::unknotted_torus_facts(),
    }
}

fn describe(entry: &Entry<ExtendabilityVerdict>) -> String {
    match entry {
        Entry::Verdict(v) => {
            let params: Vec<String> = v
                .justification
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!(
                "{:?}: {:?} [{}] ({})",
                v.subject,
                v.conclusion,
                v.justification.citation,
                params.join(", ")
            )
        }
        Entry::Unavailable(why) => format!("no verdict: {why}"),
    }
}

fn run_extendability(a: &ExtendabilityArgs) -> CliResult<String> {
    let spec = satellite_spec(&a.spec)?;
    if let Some(n) = a.range {
        if n < 1 {
            return Err(Error::InvalidRange.into());
        }
    }
    let dehn = a.dehn_slope.zip(a.singular_genus);
    let report = extendability_report(&spec, a.range, dehn);
    match a.format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "finiteness from norm   {}", describe(&report.finiteness_from_norm));
            let _ = writeln!(s, "finiteness from twist  {}", describe(&report.finiteness_from_twist));
            if let Some(e) = &report.index_bound {
                let _ = writeln!(s, "value-set index        {}", describe(e));
            }
            if let Some(e) = &report.dehn_twist {
                let _ = writeln!(s, "dehn twist             {}", describe(e));
            }
            let f = &report.unknotted_torus;
            let _ = writeln!(
                s,
                "unknotted torus        stable subgroup = Mod(T^2), extendable index {}, index >= {} for every knotted torus [{}]",
                f.extendable_index, f.universal_index_floor, f.citation
            );
            Ok(s)
        }
        f => Err(unsupported(f, "extendability")),
    }
}

// ---- cl ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClReport {
    pub word: Vec<i64>,
    pub k_max: usize,
    pub len_max: usize,
    pub node_limit: u64,
    /// Upper bound on commutator length; `None` means the bounded search found nothing.
    pub cl_upper_bound: Option<usize>,
    pub witness: Option<Vec<(Vec<i64>, Vec<i64>)>>,
}

/// Reads the search budget from the value of [`NODE_LIMIT_VAR`].
pub fn parse_node_limit(value: Option<&str>) -> Result<u64, CliError> {
    match value {
        None => Ok(word::DEFAULT_NODE_LIMIT),
        Some(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("{NODE_LIMIT_VAR} must be a nonnegative integer, got {v:?}"))),
    }
}

pub fn cl_report(w: &GroupWord, k_max: usize, len_max: usize, node_limit: u64) -> Result<ClReport, Error> {
    let found = cl_upper_bound_with_limit(w, k_max, len_max, node_limit)?;
    Ok(ClReport {
        word: w.letters().to_vec(),
        k_max,
        len_max,
        node_limit,
        cl_upper_bound: found.as_ref().map(|f| f.length()),
        witness: found.map(|f| {
            f.pairs
                .iter()
                .map(|(a, b)| (a.letters().to_vec(), b.letters().to_vec()))
                .collect()
        }),
    })
}

fn run_cl(a: &ClArgs) -> CliResult<String> {
    let limit = parse_node_limit(std::env::var(NODE_LIMIT_VAR).ok().as_deref())?;
    let w: GroupWord = a.word.parse()?;
    let report = cl_report(&w, a.k_max, a.len_max, limit)?;
    match a.format {
        Format::Json => Ok(to_json(&report)),
        Format::Text => {
            let mut s = format!("word {w}\n");
            match &report.witness {
                Some(pairs) => {
                    let _ = writeln!(s, "cl <= {}", pairs.len());
                    for (a, b) in pairs {
                        let a = GroupWord::reduce(a);
                        let b = GroupWord::reduce(b);
                        let _ = writeln!(s, "  [{a}, {b}]");
                    }
                }
                None => {
                    let _ = writeln!(
                        s,
                        "no expression with <= {} commutators of words of length <= {} (not a lower bound)",
                        a.k_max, a.len_max
                    );
                }
            }
            Ok(s)
        }
        f => Err(unsupported(f, "cl")),
    }
}

/// Map of named example jobs used by the test suites.
pub fn example_jobs() -> BTreeMap<&'static str, Vec<&'static str>> {
    let plumbing = [
        "--companion",
        "1 1 1",
        "--strands",
        "2",
        "--pattern",
        "1 1 1",
        "--pattern-strands",
        "2",
        "--twist",
        "0 -1 1 0",
    ];
    let with = |cmd: &'static str, extra: &[&'static str]| {
        let mut v = vec!["slope-calc", cmd];
        v.extend_from_slice(&plumbing);
        v.extend_from_slice(extra);
        v
    };
    BTreeMap::from([
        (
            "braid",
            vec!["slope-calc", "braid", "--word", "1 -2 1 -2", "--strands", "3"],
        ),
        (
            "torus-norm",
            vec![
                "slope-calc",
                "torus-norm",
                "--braid",
                "1 1 1 1 1",
                "--strands",
                "2",
                "--slope",
                "7/3",
            ],
        ),
        ("satellite", with("satellite", &["--slope", "1/1"])),
        ("satellite-table", with("satellite", &["--range", "3"])),
        ("unit-ball", with("unit-ball", &["--format", "json"])),
        (
            "extendability",
            with(
                "extendability",
                &["--range", "3", "--dehn-slope", "1/0", "--singular-genus", "0"],
            ),
        ),
        (
            "cl",
            vec![
                "slope-calc",
                "cl",
                "--word",
                "x y X Y x y X Y",
                "--k-max",
                "2",
                "--len-max",
                "3",
            ],
        ),
    ])
}

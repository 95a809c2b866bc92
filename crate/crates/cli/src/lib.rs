//! Command-line front end for `quadit-core`.
//!
//! Every subcommand prints one result, as a JSON envelope (default), TSV or
//! plain text. Exit status is 0 on success, 1 when the computation rejects its
//! input, 2 for usage errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use quadit_core::curves::{self, AffinePoint, HypCurve};
use quadit_core::dynamics::{self, FamilyParams, IterateReport, SearchHit, Verdict};
use quadit_core::mvpoly::Assignment;
use quadit_core::newton::{self, CriterionVerdict, NewtonPolygon};
use quadit_core::systems::{self, CaseIICandidate, CaseISolution, N1Witness};
use quadit_core::{Error, QPoly, Rat};

mod output;
mod workers;

pub use output::{data_checksums, Envelope, ENVELOPE_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "QUADIT_WORKERS";

/// Parses `[+-]digits[/digits]`.
pub fn parse_rat_flag(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|_| format!("`{s}` is not a rational of the form n or n/d with d > 0"))
}

fn parse_poly_flag(s: &str) -> Result<QPoly, String> {
    let p = QPoly::parse_coeff_list(s).map_err(|_| format!("`{s}` is not a comma-separated coefficient list"))?;
    if p.is_zero() {
        return Err("the polynomial must be nonzero".into());
    }
    Ok(p)
}

fn parse_assignment(s: &str) -> Result<Assignment, String> {
    let mut out = Assignment::new();
    for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| format!("`{pair}` is not name=value"))?;
        let v = parse_rat_flag(v.trim())?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(format!("`{}` assigned twice", k.trim()));
        }
    }
    Ok(out)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Parser, Debug)]
#[command(name = "quadit", version, about = "Reducible iterates of (x - gamma)^2 + m + gamma over the rationals")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for enumerations [default: $QUADIT_WORKERS, else the CPU count]
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Refuse enumerations whose height bound exceeds this value
    #[arg(long, global = true)]
    pub max_height: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
    pub gamma: Rat,
    #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
    pub m: Rat,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor g^1 .. g^(n+1) and report the first reducible iterate
    Detect {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Find m with g^(n+1) newly reducible [height default 20, cap 10000]
    Search {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
        gamma: Rat,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        height: u64,
    },
    /// Critical-orbit polynomial t_i in the variable m
    TPoly {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
        gamma: Rat,
        #[arg(long)]
        i: usize,
    },
    /// Newton polygon of a polynomial, of t_i, or of t_i'
    Newton {
        #[arg(long, value_parser = parse_poly_flag, allow_hyphen_values = true, conflicts_with_all = ["gamma", "i"])]
        poly: Option<QPoly>,
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true, requires = "i")]
        gamma: Option<Rat>,
        #[arg(long, requires = "gamma")]
        i: Option<usize>,
        /// Use t_i' (integral gamma, 2 <= i <= 7)
        #[arg(long, requires = "gamma")]
        derivative: bool,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
    /// 2-adic separability test for gamma, with the gcd oracle up to i_max
    Criterion {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
        gamma: Rat,
        #[arg(long, default_value_t = 6)]
        i_max: usize,
    },
    /// Genus of y^2 = t_i(x) or of y^2 = poly
    Genus {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true, requires = "i", conflicts_with = "poly")]
        gamma: Option<Rat>,
        #[arg(long, requires = "gamma")]
        i: Option<usize>,
        #[arg(long, value_parser = parse_poly_flag, allow_hyphen_values = true)]
        poly: Option<QPoly>,
    },
    /// Rational points of bounded height [height default 200, cap 100000]
    Points {
        #[arg(long, value_enum, conflicts_with = "poly")]
        curve: Option<CurveName>,
        #[arg(long, value_parser = parse_poly_flag, allow_hyphen_values = true)]
        poly: Option<QPoly>,
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
        gamma: Option<Rat>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, default_value_t = 200)]
        height: u64,
    },
    /// Second-iterate certificates m(c1) for height(c1) <= c1-height [default 10]
    N1Family {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
        gamma: Rat,
        #[arg(long, default_value_t = 10)]
        c1_height: u64,
    },
    /// Evaluate the Case I curve, or settle its sign convention
    Cgamma {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true, required_unless_present = "resolve")]
        a3: Option<Rat>,
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true, required_unless_present = "resolve")]
        m: Option<Rat>,
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true, required_unless_present = "resolve")]
        gamma: Option<Rat>,
        #[arg(long, conflicts_with_all = ["a3", "m", "gamma"])]
        resolve: bool,
    },
    /// Case II eliminant at gamma and its rational roots
    Case2 {
        #[arg(long, value_parser = parse_rat_flag, allow_hyphen_values = true)]
        gamma: Rat,
    },
    /// Case I coefficients of a newly reducible third iterate
    Extract {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Evaluate an appendix basis element
    Appendix {
        #[arg(long)]
        index: usize,
        /// Comma-separated name=value pairs, e.g. a2=8,a3=2,q=-3
        #[arg(long, value_parser = parse_assignment, allow_hyphen_values = true, default_value = "")]
        assign: Assignment,
    },
    /// Check the change of variables between the quartic and the cubic model
    VerifyMap,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveName {
    /// u^2 = v^3 + v^2 + 2v + 1
    C3prime,
    /// y^2 = x^4 - 2x^3 + x^2 - x
    C3,
    /// y^2 = t_i(x) for --gamma and --i
    T,
}

/// A computed result in every output format.
struct Rendered {
    json: Value,
    pretty: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

fn rendered<T: Serialize>(value: &T, pretty: String) -> Result<Rendered, Failure> {
    let json = serde_json::to_value(value).map_err(|e| Failure::Usage(format!("serialization failed: {e}")))?;
    Ok(Rendered { json, pretty })
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let workers = match resolve_workers(cli.workers) {
        Ok(w) => w,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli, workers) {
        Ok(r) => {
            let text = match cli.format {
                Format::Json => {
                    let env = Envelope::new(r.json);
                    serde_json::to_string_pretty(&env).expect("serializable") + "\n"
                }
                Format::Tsv => output::to_tsv(&r.json),
                Format::Pretty => r.pretty,
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn resolve_workers(flag: Option<usize>) -> Result<usize, String> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var(WORKERS_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| format!("{WORKERS_ENV}=`{v}` is not a worker count"))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if n == 0 {
        return Err("--workers must be at least 1".into());
    }
    Ok(n)
}

fn check_height(cli: &Cli, height: u64) -> Result<(), Failure> {
    match cli.max_height {
        Some(cap) if height > cap => Err(Failure::Usage(format!("height {height} exceeds --max-height {cap}"))),
        _ => Ok(()),
    }
}

fn execute(cli: &Cli, workers: usize) -> Result<Rendered, Failure> {
    match &cli.command {
        Command::Detect { family, n } => {
            let report = dynamics::detect(&FamilyParams::new(family.gamma.clone(), family.m.clone()), *n)?;
            rendered(&report, pretty_report(&report))
        }
        Command::Search { gamma, n, height } => {
            check_height(cli, *height)?;
            let hits = workers::search_m(gamma, *n, *height, workers)?;
            let rows: Vec<SearchRow> = hits.iter().map(SearchRow::from).collect();
            rendered(&rows, pretty_hits(&hits))
        }
        Command::TPoly { gamma, i } => {
            let t = dynamics::t_poly(gamma, *i)?;
            let pretty = format!("t_{i}(m) = {t}\n");
            rendered(&TPolyOut { gamma: gamma.clone(), i: *i, poly: t }, pretty)
        }
        Command::Newton { poly, gamma, i, derivative, prime } => {
            let p = quadit_core::Int::from(*prime);
            let np = match (poly, gamma, i) {
                (Some(f), _, _) => newton::newton_polygon(f, &p)?,
                (None, Some(g), Some(i)) if *derivative => {
                    if *prime != 2 {
                        return Err(Failure::Usage("--derivative works at --prime 2 only".into()));
                    }
                    newton::derivative_slope_profile(g, *i)?
                }
                (None, Some(g), Some(i)) => newton::newton_polygon(&dynamics::t_poly(g, *i)?, &p)?,
                _ => return Err(Failure::Usage("give --poly, or --gamma with --i".into())),
            };
            rendered(&np, pretty_polygon(&np))
        }
        Command::Criterion { gamma, i_max } => {
            let verdict = newton::separability_criterion(gamma);
            let oracle = newton::separability_oracle(gamma, *i_max)?;
            let out = CriterionOut { verdict, oracle };
            let pretty = pretty_criterion(&out);
            rendered(&out, pretty)
        }
        Command::Genus { gamma, i, poly } => {
            let curve = match (poly, gamma, i) {
                (Some(f), _, _) => HypCurve::new(f.clone())?,
                (None, Some(g), Some(i)) => curves::tcurve(g, *i)?,
                _ => return Err(Failure::Usage("give --poly, or --gamma with --i".into())),
            };
            let pretty = format!("y^2 = {}\nsquarefree part: {}\ngenus: {}\n", curve.rhs, curve.squarefree_rhs, curve.genus);
            rendered(&curve, pretty)
        }
        Command::Points { curve, poly, gamma, i, height } => {
            check_height(cli, *height)?;
            let rhs = match (curve, poly) {
                (_, Some(f)) => f.clone(),
                (Some(CurveName::C3prime), None) => curves::c3prime_rhs(),
                (Some(CurveName::C3), None) => curves::c3_rhs(),
                (Some(CurveName::T), None) => match (gamma, i) {
                    (Some(g), Some(i)) => curves::tcurve(g, *i)?.rhs,
                    _ => return Err(Failure::Usage("--curve t needs --gamma and --i".into())),
                },
                (None, None) => return Err(Failure::Usage("give --curve or --poly".into())),
            };
            let points = workers::search_points(&rhs, *height, workers)?;
            let pretty = pretty_points(&rhs, &points);
            rendered(&points, pretty)
        }
        Command::N1Family { gamma, c1_height } => {
            check_height(cli, *c1_height)?;
            let ws = workers::n1_enumerate(gamma, *c1_height, workers)?;
            let rows: Vec<N1Row> = ws.into_iter().map(N1Row::from).collect();
            let pretty = rows.iter().map(|r| format!("c1 = {}  m = {}  c0 = {}\n", r.c1, r.m, r.c0)).collect();
            rendered(&rows, pretty)
        }
        Command::Cgamma { a3, m, gamma, resolve } => {
            if *resolve {
                let res = systems::resolve_cgamma_convention()?;
                let pretty = format!(
                    "C at (1, 7/4, 1/2): {}\nC at (1, -7/4, 1/2): {}\nconvention: {:?}\n",
                    res.at_plus, res.at_minus, res.convention
                );
                return rendered(&res, pretty);
            }
            let (a3, m, gamma) = (a3.as_ref().unwrap(), m.as_ref().unwrap(), gamma.as_ref().unwrap());
            let value = systems::cgamma_eval(a3, m, gamma);
            let pretty = format!("{value}\n");
            rendered(&CgammaOut { a3: a3.clone(), m: m.clone(), gamma: gamma.clone(), value }, pretty)
        }
        Command::Case2 { gamma } => {
            let poly = systems::case_ii_poly(gamma);
            let candidates = systems::case_ii_candidates(gamma)?;
            let out = Case2Out { gamma: gamma.clone(), poly, candidates: candidates.iter().map(Case2Row::from).collect() };
            let pretty = pretty_case2(&out);
            rendered(&out, pretty)
        }
        Command::Extract { family } => {
            let sol = systems::case_i_extract(&family.gamma, &family.m)?;
            let pretty = pretty_extract(sol.as_ref());
            rendered(&ExtractOut { solution: sol }, pretty)
        }
        Command::Appendix { index, assign } => {
            let value = systems::appendix_eval(*index, assign)?;
            let pretty = format!("{value}\n");
            rendered(&AppendixOut { index: *index, value }, pretty)
        }
        Command::VerifyMap => {
            let holds = curves::verify_birational_c3();
            let pretty = format!("x = -1/v, y = u/v^2 carries y^2 = x^4 - 2x^3 + x^2 - x to u^2 = v^3 + v^2 + 2v + 1: {holds}\n");
            rendered(&VerifyOut { identity_holds: holds }, pretty)
        }
    }
}

#[derive(Serialize)]
struct TPolyOut {
    gamma: Rat,
    i: usize,
    poly: QPoly,
}

/// Flat summary of a search hit.
#[derive(Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
pub struct SearchRow {
    pub m: Rat,
    pub newly_reducible_at: Option<usize>,
    pub square_root: Option<Rat>,
    pub factors: Vec<QPoly>,
}

impl From<&SearchHit> for SearchRow {
    fn from(h: &SearchHit) -> SearchRow {
        let factors = h
            .report
            .newly_reducible_at
            .and_then(|k| h.report.verdict(k))
            .and_then(Verdict::factorization)
            .map(|f| f.expanded().into_iter().cloned().collect())
            .unwrap_or_default();
        SearchRow {
            m: h.m.clone(),
            newly_reducible_at: h.report.newly_reducible_at,
            square_root: h.report.square_filter.as_ref().and_then(|s| s.root.clone()),
            factors,
        }
    }
}

#[derive(Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
pub struct CriterionOut {
    pub verdict: CriterionVerdict,
    pub oracle: Vec<(usize, bool)>,
}

#[derive(Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
pub struct N1Row {
    pub c1: Rat,
    pub m: Rat,
    pub c0: Rat,
    pub gamma: Rat,
}

impl From<N1Witness> for N1Row {
    fn from(w: N1Witness) -> N1Row {
        N1Row { c0: w.c0(), c1: w.c1, m: w.m, gamma: w.gamma }
    }
}

#[derive(Serialize)]
struct CgammaOut {
    a3: Rat,
    m: Rat,
    gamma: Rat,
    value: Rat,
}

#[derive(Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
pub struct Case2Row {
    pub m: Rat,
    pub newly_reducible_at: Option<usize>,
}

impl From<&CaseIICandidate> for Case2Row {
    fn from(c: &CaseIICandidate) -> Case2Row {
        Case2Row { m: c.m.clone(), newly_reducible_at: c.report.newly_reducible_at }
    }
}

#[derive(Serialize, serde::Deserialize, Debug, PartialEq, Eq)]
pub struct Case2Out {
    pub gamma: Rat,
    pub poly: QPoly,
    pub candidates: Vec<Case2Row>,
}

#[derive(Serialize)]
struct ExtractOut {
    solution: Option<CaseISolution>,
}

#[derive(Serialize)]
struct AppendixOut {
    index: usize,
    value: Rat,
}

#[derive(Serialize)]
struct VerifyOut {
    identity_holds: bool,
}

fn pretty_report(r: &IterateReport) -> String {
    let mut s = format!("g(x) = {}\n", dynamics::build_g(&r.params));
    for (k, v) in r.verdicts.iter().enumerate() {
        match v {
            Verdict::Irreducible => s += &format!("g^{}: irreducible\n", k + 1),
            Verdict::Reducible { factorization } => {
                s += &format!("g^{}: reducible\n", k + 1);
                if factorization.unit != Rat::one() {
                    s += &format!("    unit {}\n", factorization.unit);
                }
                for f in &factorization.factors {
                    match f.mult {
                        1 => s += &format!("    {}\n", f.poly),
                        e => s += &format!("    ({})^{e}\n", f.poly),
                    }
                }
            }
        }
    }
    match r.newly_reducible_at {
        Some(k) => s += &format!("newly reducible at {k}\n"),
        None => s += "no reducible iterate found\n",
    }
    if let Some(f) = &r.square_filter {
        s += &format!("g^{}(gamma) = {} ({})\n", f.level, f.value, if f.is_square { "square" } else { "not a square" });
    }
    if let Some(ok) = r.pairing_ok {
        s += &format!("pairing under x -> 2 gamma - x: {ok}\n");
    }
    s
}

fn pretty_hits(hits: &[SearchHit]) -> String {
    let mut s = String::new();
    for h in hits {
        s += &format!("m = {}\n", h.m);
        let row = SearchRow::from(h);
        for f in row.factors {
            s += &format!("    {f}\n");
        }
    }
    if hits.is_empty() {
        s += "no values found\n";
    }
    s
}

fn pretty_polygon(np: &NewtonPolygon) -> String {
    let verts: Vec<String> = np.vertices.iter().map(|(i, v)| format!("({i}, {v})")).collect();
    let mut s = format!("vertices: {}\n", verts.join(" "));
    for seg in &np.segments {
        s += &format!("slope {} length {}\n", seg.slope, seg.length);
    }
    s
}

fn pretty_criterion(c: &CriterionOut) -> String {
    let v = &c.verdict;
    let mut s = format!("v_2(gamma) = {}: {}\n", v.s, if v.passes { "passes" } else { "fails" });
    if let Some(j) = v.failing_j {
        s += &format!("fails with j = {j}\n");
    }
    for (i, ok) in &c.oracle {
        s += &format!("t_{i} {}\n", if *ok { "separable" } else { "not separable" });
    }
    s
}

fn pretty_points(rhs: &QPoly, pts: &[AffinePoint]) -> String {
    let mut s = format!("y^2 = {rhs}\n");
    for p in pts {
        s += &format!("({}, {})\n", p.x, p.y);
    }
    s
}

fn pretty_case2(c: &Case2Out) -> String {
    let mut s = format!("{}\n", c.poly);
    for row in &c.candidates {
        let at = row.newly_reducible_at.map_or("never".to_string(), |k| k.to_string());
        s += &format!("m = {}  newly reducible at {at}\n", row.m);
    }
    s
}

fn pretty_extract(sol: Option<&CaseISolution>) -> String {
    match sol {
        None => "g^3 is not newly reducible\n".into(),
        Some(s) => {
            let res: Vec<String> = s.residuals.iter().map(Rat::to_string).collect();
            format!(
                "a0 = {}\na1 = {}\na2 = {}\na3 = {}\nresiduals: {}\ncurve value: {}\nvalid: {}\n",
                s.a0,
                s.a1,
                s.a2,
                s.a3,
                res.join(" "),
                s.cgamma_value,
                s.valid
            )
        }
    }
}

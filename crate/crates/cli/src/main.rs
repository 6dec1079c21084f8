use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polystab::decomposition::{associated_primes, height, irreducible_decomposition};
use polystab::depth::linear_quotients;
use polystab::format::{self, IdealDocument, ReportFormat};
use polystab::polymatroid::{
    analytic_spread, has_strong_exchange, is_matroidal, is_polymatroidal, relation_graph,
    transversal, veronese_type,
};
use polystab::search::{hunt, verify_paper, SearchSpace};
use polystab::stability::{self, ass_of_power, AssMethod};
use polystab::{
    DepthError, IdealError, MonomialIdeal, MonomialPrime, ParseError, PolymatroidError,
    SearchError, StabilityError, VarSet,
};

/// Associated primes and depth of powers of monomial ideals, with the
/// stability indices astab and dstab of polymatroidal ideals.
#[derive(Parser)]
#[command(name = "polystab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Ideal file, or `-` for standard input.
    #[arg(required_unless_present = "expr")]
    file: Option<PathBuf>,
    /// The ideal inline, e.g. "x1*x2, x2*x3".
    #[arg(short, long, conflicts_with = "file")]
    expr: Option<String>,
    /// Number of variables; inferred from the largest index when omitted.
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Localized,
    Decomposition,
    Box,
}

impl From<Method> for AssMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Localized => AssMethod::Localized,
            Method::Decomposition => AssMethod::Decomposition,
            Method::Box => AssMethod::BoxOracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants and exchange properties.
    Info(Input),
    /// Associated primes of a power.
    Ass {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, value_enum, default_value_t = Method::Localized)]
        method: Method,
    },
    /// Irredundant irreducible decomposition.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Depth of R/I^k through linear quotients.
    Depth {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Index of Ass-stability of a polymatroidal ideal.
    Astab {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Localized)]
        method: Method,
    },
    /// Index of depth stability of a polymatroidal ideal.
    Dstab(Input),
    /// Full stability report of a polymatroidal ideal.
    Report {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Method::Localized)]
        method: Method,
    },
    /// Linear relation graph and analytic spread.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ideal of Veronese type I(d; a_1, .., a_n).
    Veronese {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        degree: u32,
        /// Comma-separated caps a_1,..,a_n.
        #[arg(long, value_delimiter = ',', required = true)]
        caps: Vec<u32>,
    },
    /// Product of monomial primes, each given as e.g. "x1,x3".
    Transversal {
        #[arg(long)]
        vars: usize,
        #[arg(required = true)]
        primes: Vec<String>,
    },
    /// Search for polymatroidal ideals with astab != dstab.
    Hunt {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        cap: u32,
        /// Every subset of the candidate pool (at most 24 monomials).
        #[arg(long, conflicts_with_all = ["samples", "seed"], required_unless_present = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the bundled examples and theorem checks.
    VerifyPaper,
}

enum Failure {
    Usage(String),
    Precondition(String),
    CrossCheck(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::CrossCheck(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Precondition(m) | Failure::CrossCheck(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<DepthError> for Failure {
    fn from(e: DepthError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<PolymatroidError> for Failure {
    fn from(e: PolymatroidError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<StabilityError> for Failure {
    fn from(e: StabilityError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::CrossCheck { .. } => Failure::CrossCheck(e.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

fn load(input: &Input) -> Result<IdealDocument, Failure> {
    let text = match (&input.expr, &input.file) {
        (Some(e), _) => e.clone(),
        (None, Some(p)) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
            s
        }
        (None, Some(p)) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        (None, None) => unreachable!("clap requires one of them"),
    };
    let doc = format::parse_ideal(&text, input.vars)?;
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    Ok(doc)
}

fn proper(doc: &IdealDocument) -> Result<&MonomialIdeal, Failure> {
    if doc.ideal.is_unit() {
        Err(IdealError::UnitIdeal.into())
    } else {
        Ok(&doc.ideal)
    }
}

fn note_inferred(doc: &IdealDocument) {
    if doc.inferred {
        eprintln!(
            "note: n = {} inferred from the largest variable index; depth depends on n, pass --vars to fix it",
            doc.vars
        );
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parse_prime(vars: usize, text: &str) -> Result<MonomialPrime, Failure> {
    let mut members = VarSet::EMPTY;
    for part in text.split(',').map(str::trim) {
        let index: usize = part
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .filter(|&i| i >= 1)
            .ok_or_else(|| Failure::Usage(format!("bad variable '{part}' in prime '{text}'")))?;
        if index > vars {
            return Err(Failure::Usage(format!(
                "x{index} exceeds the {vars} variables"
            )));
        }
        members.insert(index - 1);
    }
    Ok(MonomialPrime::new(vars, members))
}

fn run(cli: Cli) -> Result<String, Failure> {
    Ok(match cli.command {
        Command::Info(input) => {
            let doc = load(&input)?;
            let i = &doc.ideal;
            let stats = i.stats();
            let mut out = format!("I = ({i})\n");
            out += &format!(
                "n = {}{}\n",
                doc.vars,
                if doc.inferred { " (inferred)" } else { "" }
            );
            out += &format!("|G(I)| = {}\n", i.len());
            out += &match stats.degree {
                Some(d) => format!("degree = {d}\n"),
                None => "degree = mixed\n".into(),
            };
            out += &format!("support = {:?}\n", stats.support);
            out += &format!("gcd = {}\n", stats.gcd);
            out += &format!("squarefree: {}\n", yes(stats.squarefree));
            out += &format!("full-supported: {}\n", yes(stats.full_supported));
            let poly = is_polymatroidal(i);
            out += &format!("polymatroidal: {}\n", yes(poly));
            out += &format!("matroidal: {}\n", yes(is_matroidal(i)));
            out += &format!("strong exchange: {}\n", yes(has_strong_exchange(i)));
            if i.is_proper() {
                out += &format!("height = {}\n", height(i)?);
            }
            if poly {
                out += &format!("ℓ = {}\n", analytic_spread(i)?);
            }
            out
        }
        Command::Ass {
            input,
            power,
            method,
        } => {
            let doc = load(&input)?;
            let ass = ass_of_power(proper(&doc)?, power, method.into())?;
            format!("Ass(I^{power}) = {ass}\n")
        }
        Command::Decompose { input, power } => {
            let doc = load(&input)?;
            let p = proper(&doc)?.power(power)?;
            let comps = irreducible_decomposition(&p)?;
            let mut out = String::new();
            for c in &comps {
                out += &format!("{c}\n");
            }
            out += &format!("Ass(I^{power}) = {}\n", associated_primes(&p)?);
            out
        }
        Command::Depth { input, power } => {
            let doc = load(&input)?;
            note_inferred(&doc);
            let p = proper(&doc)?.power(power)?;
            let cert = linear_quotients(&p)?;
            format!(
                "depth R/I^{power} = {}\npd R/I^{power} = {}\nq = {} ({} order)\n",
                doc.vars - cert.q - 1,
                cert.q + 1,
                cert.q,
                match cert.ordering {
                    polystab::depth::QuotientOrder::RevLex => "reverse-lexicographic",
                    polystab::depth::QuotientOrder::Lex => "lexicographic",
                }
            )
        }
        Command::Astab { input, method } => {
            let doc = load(&input)?;
            format!(
                "astab = {}\n",
                stability::astab_with(&doc.ideal, method.into())?
            )
        }
        Command::Dstab(input) => {
            let doc = load(&input)?;
            format!("dstab = {}\n", stability::dstab(&doc.ideal)?)
        }
        Command::Report {
            input,
            format,
            method,
        } => {
            let doc = load(&input)?;
            note_inferred(&doc);
            let report = stability::full_report_with(&doc.ideal, method.into())?;
            if !report.checks.all() {
                return Err(Failure::CrossCheck(format!(
                    "internal cross-check failed:\n{}",
                    format::render_report(&report, ReportFormat::Text)
                )));
            }
            format::render_report(&report, format.into())
        }
        Command::Graph { input, format } => {
            let doc = load(&input)?;
            let i = proper(&doc)?;
            let spread = analytic_spread(i).ok();
            format::render_graph(&relation_graph(i), spread, format.into())
        }
        Command::Veronese { vars, degree, caps } => {
            format!("{}\n", veronese_type(vars, degree, &caps)?)
        }
        Command::Transversal { vars, primes } => {
            if vars == 0 || vars > polystab::monomial::MAX_VARS {
                return Err(Failure::Usage(format!(
                    "--vars must be in 1..={}",
                    polystab::monomial::MAX_VARS
                )));
            }
            let primes = primes
                .iter()
                .map(|p| parse_prime(vars, p))
                .collect::<Result<Vec<_>, _>>()?;
            format!("{}\n", transversal(&primes)?)
        }
        Command::Hunt {
            vars,
            degree,
            cap,
            exhaustive,
            samples,
            seed,
            format,
        } => {
            let space = match (exhaustive, samples) {
                (true, _) => SearchSpace::exhaustive(vars, degree, cap),
                (false, Some(n)) => SearchSpace::sampled(vars, degree, cap, n, seed),
                (false, None) => unreachable!("clap requires a mode"),
            };
            format::render_hunt(&hunt(&space)?, format.into())
        }
        Command::VerifyPaper => {
            let suite = verify_paper();
            let mut out = String::new();
            for item in &suite.items {
                out += &format!(
                    "{}  {}: {}\n",
                    if item.passed { "pass" } else { "FAIL" },
                    item.name,
                    item.detail
                );
            }
            for f in &suite.findings {
                out += &format!("finding  {f}\n");
            }
            let passed = suite.items.iter().filter(|i| i.passed).count();
            out += &format!("{passed}/{} items passed\n", suite.items.len());
            if !suite.all_passed() {
                return Err(Failure::CrossCheck(out));
            }
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message().trim_end());
            ExitCode::from(f.code())
        }
    }
}

//! The `diskstrip` command line: argument parsing and command execution,
//! writing to caller-supplied streams so it can be driven from tests.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{liquid_lower_bound, regime, render_portrait, stirling_betti, RegimeLabel};
use crate::complex::{check_links_flag, top_dimension, CellComplex, DEFAULT_MAX_CELLS};
use crate::error::Error;
use crate::geometry::{verify_classification, verify_torus, verify_witnesses, SweepReport};
use crate::gf2::{betti_numbers, verify_chain_complex};
use crate::morse::{build_matching, code, decode, is_acyclic, skyline, verify_gradient};
use crate::symbols::enumerate_symbols;

/// Parses `A` or `A..B` (inclusive).
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let range = match text.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = parse(text)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {text}"));
    }
    Ok(range)
}

#[derive(Parser, Debug)]
#[command(name = "diskstrip", version, about = "Homology of configuration spaces of disks in a strip")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Number of disks, `A` or `A..B`
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Strip width, `A` or `A..B`; defaults to `1..n`
    #[arg(long, value_parser = parse_range)]
    w: Option<RangeInclusive<usize>>,
    /// Refuse complexes with more cells than this
    #[arg(long, default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: u64,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Betti numbers over GF(2) as `n,w,j,betti`
    Betti(Common),
    /// Critical-cell census of the discrete gradient as `n,w,dim,critical_count`
    Morse(Common),
    /// Regime, lower bound and planar Betti number as CSV
    Bounds {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Gas/liquid/solid grid over (w, j)
    Portrait {
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
    },
    /// Run verification sweeps
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_parser = parse_range, default_value = "1..4")]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        w: Option<RangeInclusive<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CELLS)]
        max_cells: u64,
    },
    /// Write sparse mod-2 boundary matrices
    Export {
        #[command(flatten)]
        common: Common,
        /// Only the boundary out of dimension `j`
        #[arg(long)]
        j: Option<usize>,
        /// File (with `--j`) or directory to write to; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Verification suites of `diskstrip verify`.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Chain classification against brute-force membership
    Classify,
    /// Chain witnesses for every maximal chain
    Witness,
    /// Torus cycles: disk validity and Z* intersections
    Torus,
    /// Involution, incidence, key descent, acyclicity, Morse inequalities
    Morse,
    /// Skyline code round trip and injectivity
    Code,
    /// Boundary of boundary and Euler characteristic
    Chain,
    /// Flag condition on vertex links
    Flag,
    All,
}

/// A parsed command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandRequest {
    Betti {
        n: RangeInclusive<usize>,
        w: Option<RangeInclusive<usize>>,
        max_cells: u64,
    },
    Morse {
        n: RangeInclusive<usize>,
        w: Option<RangeInclusive<usize>>,
        max_cells: u64,
    },
    Bounds {
        n: RangeInclusive<usize>,
        w: Option<RangeInclusive<usize>>,
        j: Option<usize>,
    },
    Portrait {
        n: RangeInclusive<usize>,
    },
    Verify {
        suite: Suite,
        n: RangeInclusive<usize>,
        w: Option<RangeInclusive<usize>>,
        seed: u64,
        samples: usize,
        max_cells: u64,
    },
    Export {
        n: usize,
        w: usize,
        j: Option<usize>,
        out: Option<PathBuf>,
        max_cells: u64,
    },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses command-line arguments (including the program name). Errors are
/// clap errors, which render their own usage text.
pub fn parse_args<I, T>(args: I) -> Result<CommandRequest, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let usage = |msg: String| clap::Error::raw(clap::error::ErrorKind::ValueValidation, msg + "\n");
    Ok(match cli.command {
        Cmd::Betti(c) => CommandRequest::Betti {
            n: c.n,
            w: c.w,
            max_cells: c.max_cells,
        },
        Cmd::Morse(c) => CommandRequest::Morse {
            n: c.n,
            w: c.w,
            max_cells: c.max_cells,
        },
        Cmd::Bounds { common, j } => CommandRequest::Bounds {
            n: common.n,
            w: common.w,
            j,
        },
        Cmd::Portrait { n } => CommandRequest::Portrait { n },
        Cmd::Verify {
            suite,
            n,
            w,
            seed,
            samples,
            max_cells,
        } => CommandRequest::Verify {
            suite,
            n,
            w,
            seed,
            samples,
            max_cells,
        },
        Cmd::Export { common, j, out } => {
            let single = |r: &RangeInclusive<usize>, name: &str| {
                if r.start() == r.end() {
                    Ok(*r.start())
                } else {
                    Err(usage(format!("export needs a single --{name}")))
                }
            };
            let w = common.w.ok_or_else(|| usage("export needs --w".into()))?;
            CommandRequest::Export {
                n: single(&common.n, "n")?,
                w: single(&w, "w")?,
                j,
                out,
                max_cells: common.max_cells,
            }
        }
    })
}

/// Parses and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(args) {
        Ok(req) => run(&req, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            code
        }
    }
}

enum Failure {
    Usage(String),
    Failed(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(m) => Failure::Usage(m),
            other => Failure::Failed(other.to_string()),
        }
    }
}

/// Executes a request; returns the exit code.
pub fn run(req: &CommandRequest, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match req {
        CommandRequest::Betti { n, w, max_cells } => betti(n, w, *max_cells, out),
        CommandRequest::Morse { n, w, max_cells } => morse(n, w, *max_cells, out),
        CommandRequest::Bounds { n, w, j } => bounds(n, w, *j, out),
        CommandRequest::Portrait { n } => portrait(n, out),
        CommandRequest::Verify {
            suite,
            n,
            w,
            seed,
            samples,
            max_cells,
        } => verify(*suite, n, w, *seed, *samples, *max_cells, out),
        CommandRequest::Export {
            n,
            w,
            j,
            out: path,
            max_cells,
        } => export(*n, *w, *j, path.as_ref(), *max_cells, out),
    };
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Failed(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAILURE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn check_n(n: &RangeInclusive<usize>) -> Result<(), Failure> {
    if *n.start() == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(())
}

/// `(n, w)` pairs; `w` defaults to `1..=n`.
fn grid(n: &RangeInclusive<usize>, w: &Option<RangeInclusive<usize>>, min_w: usize) -> Result<Vec<(usize, usize)>, Failure> {
    check_n(n)?;
    if let Some(w) = w {
        if *w.start() < min_w {
            return Err(Failure::Usage(format!("w must be at least {min_w}")));
        }
    }
    Ok(n.clone()
        .flat_map(|n| w.clone().unwrap_or(1..=n).map(move |w| (n, w)))
        .collect())
}

fn betti(n: &RangeInclusive<usize>, w: &Option<RangeInclusive<usize>>, cap: u64, out: &mut dyn Write) -> Result<(), Failure> {
    let points = grid(n, w, 1)?;
    writeln!(out, "n,w,j,betti")?;
    for (n, w) in points {
        let c = CellComplex::build_with_cap(n, w, cap)?;
        for (j, b) in betti_numbers(&c).betti.iter().enumerate() {
            writeln!(out, "{n},{w},{j},{b}")?;
        }
    }
    Ok(())
}

fn morse(n: &RangeInclusive<usize>, w: &Option<RangeInclusive<usize>>, cap: u64, out: &mut dyn Write) -> Result<(), Failure> {
    let points = grid(n, w, 1)?;
    writeln!(out, "n,w,dim,critical_count")?;
    let mut gradient_ok = true;
    for (n, w) in points {
        let c = CellComplex::build_with_cap(n, w, cap)?;
        let m = build_matching(&c)?;
        for (d, count) in m.critical_counts().iter().enumerate() {
            writeln!(out, "{n},{w},{d},{count}")?;
        }
        gradient_ok &= verify_gradient(&c, &m) && is_acyclic(&c, &m);
    }
    if gradient_ok {
        writeln!(out, "gradient: ok")?;
        Ok(())
    } else {
        writeln!(out, "gradient: FAILED")?;
        Err(Failure::Failed("gradient check failed".into()))
    }
}

fn bounds(n: &RangeInclusive<usize>, w: &Option<RangeInclusive<usize>>, j: Option<usize>, out: &mut dyn Write) -> Result<(), Failure> {
    let points = grid(n, w, 0)?;
    writeln!(out, "n,w,j,regime,lower_bound,stirling")?;
    for (n, w) in points {
        let js = j.map_or(0..=n.saturating_sub(1), |j| j..=j);
        for j in js {
            let label = regime(n, w, j);
            let stirling = stirling_betti(n, j);
            let lower = match label {
                RegimeLabel::Gas => stirling.clone(),
                RegimeLabel::Liquid => liquid_lower_bound(n, w, j),
                RegimeLabel::Solid | RegimeLabel::Unclassified => 0u32.into(),
            };
            writeln!(out, "{n},{w},{j},{label},{lower},{stirling}")?;
        }
    }
    Ok(())
}

fn portrait(n: &RangeInclusive<usize>, out: &mut dyn Write) -> Result<(), Failure> {
    check_n(n)?;
    for (i, n) in n.clone().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        write!(out, "{}", render_portrait(n))?;
    }
    Ok(())
}

fn report(out: &mut dyn Write, name: &str, n: usize, w: usize, r: &SweepReport) -> io::Result<bool> {
    let verdict = if r.passed() { "pass" } else { "FAIL" };
    writeln!(out, "{name} n={n} w={w}: {verdict} ({} checked)", r.checked)?;
    for f in &r.failures {
        writeln!(out, "  {f}")?;
    }
    Ok(r.passed())
}

fn morse_report(n: usize, w: usize, cap: u64) -> Result<SweepReport, Failure> {
    let c = CellComplex::build_with_cap(n, w, cap)?;
    let mut r = SweepReport {
        checked: c.total_cells() as usize,
        failures: Vec::new(),
    };
    match build_matching(&c) {
        Err(e) => r.failures.push(e.to_string()),
        Ok(m) => {
            if !verify_gradient(&c, &m) {
                r.failures.push("key does not strictly decrease along a gradient path".into());
            }
            if !is_acyclic(&c, &m) {
                r.failures.push("gradient paths contain a cycle".into());
            }
            let betti = betti_numbers(&c);
            for (d, &count) in m.critical_counts().iter().enumerate() {
                if betti.get(d) > count {
                    r.failures.push(format!("beta_{d} = {} exceeds {count} critical cells", betti.get(d)));
                }
            }
        }
    }
    Ok(r)
}

fn code_report(n: usize, w: usize, cap: u64) -> Result<SweepReport, Failure> {
    CellComplex::build_with_cap(n, w, cap)?;
    let mut r = SweepReport::default();
    let mut seen = std::collections::HashSet::new();
    for s in enumerate_symbols(n, w.min(n)).into_iter().filter(|s| crate::morse::is_critical(s, w)) {
        r.checked += 1;
        let sky = skyline(&s, w)?;
        let cs = code(&s, w)?;
        match decode(&sky, &cs, n, w) {
            Ok(t) if t == s => {}
            Ok(t) => r.failures.push(format!("{s} decodes to {t}")),
            Err(e) => r.failures.push(format!("{s}: {e}")),
        }
        if !seen.insert((sky, cs)) {
            r.failures.push(format!("{s} shares its code"));
        }
    }
    Ok(r)
}

fn chain_report(n: usize, w: usize, cap: u64) -> Result<SweepReport, Failure> {
    let c = CellComplex::build_with_cap(n, w, cap)?;
    let mut r = SweepReport {
        checked: c.total_cells() as usize,
        failures: Vec::new(),
    };
    if !verify_chain_complex(&c) {
        r.failures.push("boundary of boundary is nonzero".into());
    }
    let betti = betti_numbers(&c);
    if betti.euler_characteristic() != c.euler_characteristic() {
        r.failures.push("Euler characteristic differs from the alternating Betti sum".into());
    }
    Ok(r)
}

fn verify(
    suite: Suite,
    n: &RangeInclusive<usize>,
    w: &Option<RangeInclusive<usize>>,
    seed: u64,
    samples: usize,
    cap: u64,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let points = grid(n, w, 1)?;
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut ok = true;
    for &(n, w) in &points {
        let w = w.min(n);
        if wants(Suite::Classify) {
            ok &= report(out, "classify", n, w, &verify_classification(n, w, samples, seed))?;
        }
        if wants(Suite::Witness) {
            ok &= report(out, "witness", n, w, &verify_witnesses(n, w))?;
        }
        if wants(Suite::Torus) && w >= 2 {
            ok &= report(out, "torus", n, w, &verify_torus(n, w, 16, 8, seed))?;
        }
        if wants(Suite::Morse) {
            ok &= report(out, "morse", n, w, &morse_report(n, w, cap)?)?;
        }
        if wants(Suite::Code) {
            ok &= report(out, "code", n, w, &code_report(n, w, cap)?)?;
        }
        if wants(Suite::Chain) {
            ok &= report(out, "chain", n, w, &chain_report(n, w, cap)?)?;
        }
    }
    if wants(Suite::Flag) {
        let mut ns: Vec<usize> = points.iter().map(|p| p.0).collect();
        ns.dedup();
        for n in ns {
            let flag = check_links_flag(n)?;
            ok &= flag;
            let verdict = if flag { "pass" } else { "FAIL" };
            writeln!(out, "flag n={n}: {verdict}")?;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Failed("verification failed".into()))
    }
}

fn export(n: usize, w: usize, j: Option<usize>, path: Option<&PathBuf>, cap: u64, out: &mut dyn Write) -> Result<(), Failure> {
    if n == 0 || w == 0 {
        return Err(Failure::Usage("export needs n, w >= 1".into()));
    }
    let top = top_dimension(n, w.min(n));
    if let Some(j) = j {
        if j == 0 || j > top {
            return Err(Failure::Usage(format!("--j must lie in 1..={top}")));
        }
    }
    let c = CellComplex::build_with_cap(n, w, cap)?;
    let dims: Vec<usize> = j.map_or_else(|| (1..=top).collect(), |j| vec![j]);
    match (path, j) {
        (None, _) => {
            for d in dims {
                c.write_boundary(d, out)?;
            }
        }
        (Some(file), Some(j)) => {
            let mut f = io::BufWriter::new(fs::File::create(file)?);
            c.write_boundary(j, &mut f)?;
            f.flush()?;
        }
        (Some(dir), None) => {
            fs::create_dir_all(dir)?;
            for d in dims {
                let name = dir.join(format!("boundary_n{n}_w{w}_d{d}.txt"));
                let mut f = io::BufWriter::new(fs::File::create(&name)?);
                c.write_boundary(d, &mut f)?;
                f.flush()?;
                writeln!(out, "{}", name.display())?;
            }
        }
    }
    Ok(())
}

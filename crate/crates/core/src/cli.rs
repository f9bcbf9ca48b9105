//! The `kcg` command line.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad polynomial, invalid
//! matrix, inconsistent record, unknown knot), 2 on usage errors. Errors
//! are reported as one line on standard error.

use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use crate::bounds::gc_bounds;
use crate::error::{Error, Result};
use crate::foxmilnor::{enhanced_required_factors, gc_poly_lower_bound};
use crate::laurent::LaurentPoly;
use crate::seifert::SeifertMatrix;
use crate::tabledata::{self, census_with, match_candidates, CensusOptions, KnotTable, ParsedTable};

#[derive(Debug, Parser)]
#[command(name = "kcg", version, about = "Concordance-genus bounds for knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor a knot polynomial over the integers.
    Factor {
        /// Coefficients `c0;c1;...;cd`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Alexander polynomial, signatures and polynomial bound of a Seifert matrix.
    Invariants {
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        seifert: String,
    },
    /// Concordance-genus interval of one knot in a table.
    Bound {
        #[arg(long)]
        name: String,
        /// CSV table, or `-` for standard input.
        #[arg(long)]
        table: String,
    },
    /// Classify every knot in a table.
    Census {
        #[arg(long)]
        table: String,
        /// Write the per-knot TSV report here (`-` for standard output).
        #[arg(long)]
        report: Option<String>,
        /// Match undetermined knots against this table.
        #[arg(long)]
        candidates: Option<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=4))]
        max_summands: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
        jobs: u32,
    },
    /// Knot sums that could be concordant to a given knot.
    Match {
        #[arg(long)]
        name: String,
        #[arg(long)]
        table: String,
        #[arg(long)]
        candidates: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=4))]
        max_summands: u32,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, path: &str) -> Result<KnotTable> {
        let ParsedTable { table, rejected, warnings } = if path == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text)?;
            tabledata::parse_table(&text, "<stdin>")?
        } else {
            tabledata::load_table(path)?
        };
        for w in &warnings {
            writeln!(self.err, "warning: {path}: {w}")?;
        }
        for r in &rejected {
            writeln!(self.err, "warning: {path}: {r}")?;
        }
        Ok(table)
    }
}

fn lookup<'t>(table: &'t KnotTable, name: &str) -> Result<&'t crate::bounds::KnotRecord> {
    table
        .get(name)
        .ok_or_else(|| Error::UnknownKnot(format!("{name} not in {}", table.source_path())))
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<()> {
    match cmd {
        Command::Factor { poly } => {
            let p: LaurentPoly = poly.parse()?;
            writeln!(io.out, "{}", p.factor()?)?;
        }
        Command::Invariants { seifert } => {
            let v: SeifertMatrix = seifert.parse()?;
            let delta = v.alexander()?;
            let factors = delta.factor()?;
            let profile = v.signature_profile()?;
            let required = enhanced_required_factors(&factors, Some(&profile))?;
            let jumps: Vec<String> = profile
                .jumps()
                .iter()
                .map(|j| format!("{:.10}:{}", j.angle, j.jump))
                .collect();
            let arcs: Vec<String> = profile.arcs().iter().map(|a| a.value.to_string()).collect();
            writeln!(io.out, "alexander\t{delta}")?;
            writeln!(io.out, "factors\t{factors}")?;
            writeln!(io.out, "genus\t{}", v.genus())?;
            writeln!(io.out, "murasugi_signature\t{}", v.murasugi_signature())?;
            writeln!(io.out, "jumps\t{}", if jumps.is_empty() { "none".into() } else { jumps.join(",") })?;
            writeln!(io.out, "arc_values\t{}", arcs.join(","))?;
            writeln!(io.out, "required\t{}", required.enhanced)?;
            writeln!(io.out, "gc_poly_lower_bound\t{}", gc_poly_lower_bound(&required))?;
        }
        Command::Bound { name, table } => {
            let table = io.load(&table)?;
            let b = gc_bounds(lookup(&table, &name)?)?;
            writeln!(
                io.out,
                "{name} {} {} {} {}",
                b.lower,
                b.upper,
                b.status.as_str(),
                b.contributors_string()
            )?;
        }
        Command::Census { table, report, candidates, max_summands, jobs } => {
            let table = io.load(&table)?;
            let candidates = candidates.map(|c| io.load(&c)).transpose()?;
            let opts = CensusOptions {
                reference: None,
                candidates: candidates.as_ref(),
                max_summands: max_summands as usize,
                jobs: jobs as usize,
            };
            let result = census_with(&table, &opts)?;
            match report.as_deref() {
                Some("-") => io.out.write_all(result.to_tsv().as_bytes())?,
                Some(path) => std::fs::write(path, result.to_tsv())
                    .map_err(|e| Error::Io(format!("{path}: {e}")))?,
                None => {}
            }
            io.out.write_all(result.counts_text().as_bytes())?;
        }
        Command::Match { name, table, candidates, max_summands } => {
            let table = io.load(&table)?;
            let candidates = io.load(&candidates)?;
            let k = lookup(&table, &name)?;
            for m in match_candidates(k, &candidates, max_summands as usize) {
                writeln!(
                    io.out,
                    "{}\t{}\t{}\t{}\t{}",
                    m.expression, m.genus3, m.crossings, m.signature, m.alexander
                )?;
            }
        }
    }
    Ok(())
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let line = text.lines().next().unwrap_or("error: usage");
                    let _ = writeln!(stderr, "{line}");
                    2
                }
            };
        }
    };
    let mut io = Io { stdin, out: stdout, err: stderr };
    match execute(cli.command, &mut io) {
        Ok(()) => 0,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(io.err, "error: {msg}");
            1
        }
    }
}

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use identities::{registry, Identity};
use lerch_verify::config::{self, CheckFlags};
use lerch_verify::{evalcmd, exit, figure, globs, runner, CmdError};

#[derive(Parser)]
#[command(name = "lerch-verify", version)]
#[command(about = "Numerical verification harness for geometric-angle series and product identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalogued identities: id, title, tier, statement
    List {
        /// Glob over identity ids, e.g. "THM-*"
        #[arg(default_value = "*")]
        filter: String,
    },
    /// Verify identities over sampled parameter domains and write reports
    Check {
        /// Working precision in decimal digits
        #[arg(long)]
        digits: Option<u32>,
        /// Relative residual tolerance, e.g. 1e-40
        #[arg(long)]
        tol: Option<String>,
        /// Samples per identity
        #[arg(long)]
        samples: Option<u32>,
        /// Sampler seed
        #[arg(long)]
        seed: Option<u64>,
        /// Check only ids matching these globs (comma separated, repeatable)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Directory for report files
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report formats: json, markdown, csv
        #[arg(long, value_delimiter = ',')]
        format: Vec<String>,
        /// Worker threads across identities (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Flat key=value config file; flags override it
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Evaluate one special function at a point
    Eval {
        /// phi, phiprime, zeta, zetaprime, polygamma, gamma, or const
        function: String,
        /// Arguments; complex values as "re,im" (use -- before negatives)
        args: Vec<String>,
        /// Significant digits to print
        #[arg(long, default_value_t = 50)]
        digits: u32,
    },
    /// Emit curve data for a documented figure as CSV
    FigureData {
        /// cos-sec-recip or tan-cot-power
        figure: String,
        /// Range start (figure-specific default)
        #[arg(long)]
        from: Option<f64>,
        /// Range end (figure-specific default)
        #[arg(long)]
        to: Option<f64>,
        /// Sample count across the range
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Depth parameter for tan-cot-power
        #[arg(long, default_value_t = 4)]
        n: i64,
        /// Write CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn cmd_list(filter: &str) -> Result<i32, CmdError> {
    let mut rows: Vec<&Identity> = registry()
        .iter()
        .filter(|i| globs::glob_match(filter, i.id))
        .collect();
    rows.sort_by_key(|i| i.id);
    if rows.is_empty() {
        return Ok(exit::OK);
    }
    let id_w = rows.iter().map(|i| i.id.len()).max().unwrap_or(0);
    let title_w = rows.iter().map(|i| i.title.len()).max().unwrap_or(0);
    let tier_w = rows.iter().map(|i| i.tier.name().len()).max().unwrap_or(0);
    for i in rows {
        println!(
            "{:<id_w$}  {:<title_w$}  {:<tier_w$}  {}",
            i.id,
            i.title,
            i.tier.name(),
            i.anchor
        );
    }
    Ok(exit::OK)
}

fn cmd_check(flags: CheckFlags) -> Result<i32, CmdError> {
    let cfg = config::resolve(&flags)?;
    let started = Instant::now();
    let run = runner::execute(&cfg)?;
    let formats: Vec<_> = cfg.formats.iter().copied().collect();
    let written = run.report.write_files(&cfg.output_dir, &formats)?;
    let t = &run.report.totals;
    println!(
        "checked {} identities, {} checks: {} hold, {} fail, {} suspected discrepancies, {} evaluation errors",
        t.identities, t.checks, t.holds, t.fails, t.suspected_discrepancies, t.eval_errors
    );
    for path in &written {
        println!("wrote {}", path.display());
    }
    // Timings stay out of the report files so identical configurations
    // produce identical bytes.
    eprintln!("elapsed: {:.2}s", started.elapsed().as_secs_f64());
    Ok(if run.clean { exit::OK } else { exit::FAILED_CHECKS })
}

fn cmd_eval(function: &str, args: &[String], digits: u32) -> Result<i32, CmdError> {
    let out = evalcmd::evaluate(function, args, digits)?;
    println!("{}", out.value);
    println!("route: {}", out.route);
    Ok(exit::OK)
}

fn cmd_figure_data(
    figure_id: &str,
    spec: figure::FigureSpec,
    out: Option<PathBuf>,
) -> Result<i32, CmdError> {
    let table = figure::figure_table(figure_id, &spec)?;
    match out {
        Some(path) => {
            let mut buf = Vec::new();
            figure::write_csv(&table, &mut buf)?;
            fs::write(&path, buf)
                .map_err(|e| CmdError::Io(format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {}", path.display());
        }
        None => figure::write_csv(&table, std::io::stdout().lock())?,
    }
    Ok(exit::OK)
}

fn run(cli: Cli) -> Result<i32, CmdError> {
    match cli.command {
        Command::List { filter } => cmd_list(&filter),
        Command::Check {
            digits,
            tol,
            samples,
            seed,
            only,
            out,
            format,
            jobs,
            config,
        } => cmd_check(CheckFlags {
            digits,
            tol,
            samples,
            seed,
            only,
            out,
            format,
            jobs,
            config,
        }),
        Command::Eval {
            function,
            args,
            digits,
        } => cmd_eval(&function, &args, digits),
        Command::FigureData {
            figure,
            from,
            to,
            points,
            n,
            out,
        } => cmd_figure_data(
            &figure,
            figure::FigureSpec {
                from,
                to,
                points,
                n,
            },
            out,
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hgs_core::hg::{self, EnumConfig, HgsReport};
use hgs_core::suites::{self, SuiteConfig};
use hgs_core::{catalog, io, Error, FiniteGroup, SkewBrace};

#[derive(Parser)]
#[command(name = "hgs", version, about = "Hopf-Galois structures on finite Galois extensions via skew braces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every structure on a Galois group.
    Enumerate {
        /// Catalog name (e.g. Q8, C4xC2, D5) or path to a group file.
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Largest group order accepted.
        #[arg(long, default_value_t = 27)]
        bound: usize,
        /// Allow elementary abelian groups of order 16 and 27.
        #[arg(long)]
        enable_heavy_orders: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = ["axioms", "bijection", "byott", "paper-numbers", "childs", "all"])]
        suite: String,
        /// Largest order compared against the permutation oracle.
        #[arg(long, default_value_t = 6)]
        oracle_max: usize,
    },
    /// Analyze one structure given its circle group and dot operation.
    Analyze {
        /// Catalog name or group file for the Galois group.
        circ: String,
        /// Group file with the dot operation on the same labels.
        dot: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn load_group(arg: &str) -> Result<FiniteGroup, Error> {
    if Path::new(arg).exists() {
        io::read_group(arg)
    } else {
        catalog::by_name(arg)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnsupportedOrder(_) | Error::OrderTooLarge { .. } | Error::CatalogIncompleteForOrder(_) => 2,
        Error::BraceLawViolated(..) => 3,
        _ => 1,
    }
}

fn table_text(reports: &[HgsReport]) -> String {
    let mut out = String::from("class  orbit  type              bi-skew  surjective  gc_ratio  grouplikes\n");
    for r in reports {
        out.push_str(&format!(
            "{:<5}  {:<5}  {:<16}  {:<7}  {:<10}  {:<8}  {}\n",
            r.iso_class_id,
            r.orbit_size,
            r.type_name,
            r.is_bi_skew,
            r.is_surjective,
            r.gc_ratio.to_string(),
            r.grouplikes.len()
        ));
    }
    out
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => Ok(fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn enumerate(group: &str, out: Option<&Path>, format: Format, cfg: EnumConfig) -> Result<(), Error> {
    let g = load_group(group)?;
    let reports = hg::enumerate_reports(&g, &cfg)?;
    let text = match format {
        Format::Json => io::reports_to_string(&reports),
        Format::Table => table_text(&reports),
    };
    emit(&text, out)?;
    println!(
        "total={} cyclic_type={} surjective={}",
        reports.len(),
        reports.iter().filter(|r| r.operation.is_cyclic()).count(),
        reports.iter().filter(|r| r.is_surjective).count()
    );
    Ok(())
}

fn verify(suite: &str, oracle_max: usize) -> Result<bool, Error> {
    let cfg = SuiteConfig {
        oracle_max,
        ..SuiteConfig::default()
    };
    let checks = suites::run(suite, &cfg)?;
    for c in &checks {
        println!("{} {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    match checks.iter().find(|c| !c.passed) {
        Some(c) => {
            eprintln!("first counterexample ({}): {}", c.name, c.detail);
            Ok(false)
        }
        None => Ok(true),
    }
}

fn analyze(circ: &str, dot: &Path, out: Option<&Path>) -> Result<(), Error> {
    let circ = load_group(circ)?;
    let dot = io::read_group(dot)?;
    let brace = SkewBrace::new(dot, circ)?;
    emit(&io::report_to_string(&hg::analyze(&brace)), out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate {
            group,
            out,
            format,
            bound,
            enable_heavy_orders,
        } => {
            let cfg = EnumConfig {
                max_order: bound,
                enable_heavy: enable_heavy_orders,
                ..EnumConfig::default()
            };
            enumerate(&group, out.as_deref(), format, cfg)
        }
        Command::Verify { suite, oracle_max } => match verify(&suite, oracle_max) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        Command::Analyze { circ, dot, out } => analyze(&circ, &dot, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ggconn::commands::{analyze_cmd, classes_cmd, coeff_cmd, identify_cmd, spe_cmd};
use ggconn::load::{default_data_dir, DATA_DIR_VAR};
use ggconn::manifest::summary;
use ggconn::{parse_manifest, run_manifest, AnalyzeArgs, CliError, CoeffQuery, Format, Outcome, Tier};

#[derive(Parser)]
#[command(name = "ggconn", version, about = "Connectivity of Gill–Guillot graphs on classes of prime-order elements")]
struct Cli {
    /// Directory for relative data file names
    #[arg(long, global = true, env = DATA_DIR_VAR)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Mandatory,
    Extended,
}

#[derive(Subcommand)]
enum Cmd {
    /// Component size, component group and component stabilizer
    Analyze {
        /// A .grp file or a built-in name such as Alt(7)
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        /// Class fingerprint, or a label from the file's class map
        #[arg(long, conflicts_with = "all_classes")]
        class: Option<String>,
        /// Use the rational closure of the class
        #[arg(long)]
        rational: bool,
        #[arg(long)]
        all_classes: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        seed: Option<u64>,
        /// Also build the graph explicitly and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Whether the group has a strongly p-embedded subgroup
    Spe {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Class multiplication coefficients from a character table
    Coeff {
        #[arg(long)]
        table: String,
        /// Three comma-separated class labels
        #[arg(long, group = "query")]
        classes: Option<String>,
        /// Involution class: does its graph have an edge?
        #[arg(long, group = "query")]
        edge: Option<String>,
        /// Class of prime order p for the clique test
        #[arg(long, group = "query", requires = "p")]
        clique: Option<String>,
        /// Lifted involution classes, the first one designated
        #[arg(long, group = "query")]
        lift: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        /// Certifies that the clique class is rational
        #[arg(long)]
        rational: bool,
    },
    /// Run the expectations of a manifest
    Reproduce {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long, value_enum, default_value = "mandatory")]
        tier: TierArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List the classes of elements of order p
    Classes {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Class of an element given in cycle notation
    Identify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn split(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let explicit_dir = cli.data_dir.clone();
    let dir = explicit_dir.clone().unwrap_or_else(default_data_dir);
    match cli.cmd {
        Cmd::Analyze {
            group,
            p,
            class,
            rational,
            all_classes,
            format,
            seed,
            oracle,
        } => {
            let args = AnalyzeArgs {
                group,
                p,
                class,
                rational,
                all_classes,
                seed,
                oracle,
            };
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Tsv => Format::Tsv,
            };
            analyze_cmd(&args, format, &dir)
        }
        Cmd::Spe { group, p, seed } => spe_cmd(&group, p, seed, &dir),
        Cmd::Coeff {
            table,
            classes,
            edge,
            clique,
            lift,
            p,
            rational,
        } => {
            let q = if let Some(c) = classes {
                match split(&c).as_slice() {
                    [a, b, c] => CoeffQuery::Classes(a.clone(), b.clone(), c.clone()),
                    _ => return Err(CliError::Usage("--classes takes three labels".into())),
                }
            } else if let Some(c) = edge {
                CoeffQuery::Edge(c)
            } else if let Some(c) = clique {
                CoeffQuery::Clique {
                    class: c,
                    p: p.unwrap_or_default(),
                    rational,
                }
            } else if let Some(l) = lift {
                CoeffQuery::Lift {
                    classes: split(&l),
                    quotient_connected: true,
                }
            } else {
                return Err(CliError::Usage("one of --classes, --edge, --clique, --lift is required".into()));
            };
            coeff_cmd(&table, &q, &dir)
        }
        Cmd::Reproduce {
            manifest,
            tier,
            jobs,
            seed,
        } => {
            let text = std::fs::read_to_string(&manifest).map_err(|source| CliError::Io {
                path: manifest.clone(),
                source,
            })?;
            let m = parse_manifest(&text)?;
            // file names in a manifest are relative to its own directory
            let dir = explicit_dir.unwrap_or_else(|| manifest.parent().map(PathBuf::from).unwrap_or_default());
            let tier = match tier {
                TierArg::Mandatory => Tier::Mandatory,
                TierArg::Extended => Tier::Extended,
            };
            let (text, ok) = summary(&run_manifest(&m, tier, &dir, seed, jobs));
            Ok(Outcome { text, ok })
        }
        Cmd::Classes { group, p, seed } => classes_cmd(&group, p, seed, &dir),
        Cmd::Identify { group, element, seed } => identify_cmd(&group, &element, seed, &dir),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            print!("{}", o.text);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

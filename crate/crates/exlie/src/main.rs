#![forbid(unsafe_code)]
#![deny(clippy::float_arithmetic)]

//! The `exlie` binary: exact exceptional Lie theory from the command line.

use clap::{Args, Parser, Subcommand};

use exlie::commands::{self, Outcome, UsageError};
use exlie::output::{render, Format};

/// Exact-arithmetic exceptional Lie theory: real forms, parabolic
/// subalgebras, cubic Jordan algebras and Freudenthal triple systems.
#[derive(Parser)]
#[command(name = "exlie", version, max_term_width = 100)]
struct Cli {
    /// Output format for the result document.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Seed for the randomized suites (ignored by deterministic commands).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Worker count (accepted for interface stability; suites currently
    /// run sequentially, which keeps output ordering deterministic).
    #[arg(long, global = true, default_value_t = 1, hide_short_help = true)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Composition algebras R, C, H, O and their split companions.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Cubic Jordan algebras: axioms and norm data.
    Jordan {
        #[command(subcommand)]
        cmd: JordanCmd,
    },
    /// Freudenthal triple systems F(J).
    Fts {
        #[command(subcommand)]
        cmd: FtsCmd,
    },
    /// Symmetry algebras der ⊂ str₀ ⊂ conf ⊂ qconf.
    Symmetry {
        #[command(subcommand)]
        cmd: SymmetryCmd,
    },
    /// Exceptional root systems E6, E7, E8, F4, G2.
    Roots {
        #[command(subcommand)]
        cmd: RootsCmd,
    },
    /// The twelve non-compact exceptional real forms.
    Realform {
        #[command(subcommand)]
        cmd: RealformCmd,
    },
    /// Parabolic subalgebras P_Θ = M_Θ A_Θ N_Θ.
    Parabolic {
        #[command(subcommand)]
        cmd: ParabolicCmd,
    },
    /// Parabolic relatedness across real forms.
    Related {
        #[command(subcommand)]
        cmd: RelatedCmd,
    },
    /// Jordan-algebraic readings of a Lie algebra label.
    Interpret {
        /// Lie algebra label, e.g. "E6(-26)" or "so(5,5)".
        #[arg(long)]
        label: String,
    },
    /// Run the whole verification battery.
    VerifyAll {
        /// Restrict to suites whose name contains this string.
        #[arg(long)]
        only: Option<String>,
    },
    /// Emit the canonical frozen-data dump and its SHA-256 hash.
    DumpRegistry,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Multiplication table of one composition algebra.
    Table {
        /// Label: R, C, H, O, C_s, H_s or O_s.
        #[arg(long)]
        label: String,
    },
}

#[derive(Args)]
struct AlgebraArg {
    /// Jordan algebra descriptor, e.g. "J3^O_s", "R+Gamma_{4,4}", "R".
    #[arg(long)]
    algebra: String,
}

#[derive(Subcommand)]
enum JordanCmd {
    /// Randomized verification of the Jordan axioms.
    Check {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Number of random trials.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Cubic norm N, trace Tr and quadratic trace S of one element.
    Norm {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Element as a JSON array of integers / fraction strings.
        #[arg(long)]
        element: String,
    },
}

#[derive(Subcommand)]
enum FtsCmd {
    /// Randomized verification of the triple-system identities.
    Check {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Number of random trials.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Quartic invariant Δ and quadratic invariant κ of one element.
    Quartic {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Element of F(J) as a JSON array (dimension 2·dim J + 2).
        #[arg(long)]
        element: String,
    },
}

#[derive(Subcommand)]
enum SymmetryCmd {
    /// Symmetry-chain dimensions of one Jordan algebra.
    Report {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Recompute the full symmetry-dimension table against the registry.
    VerifyTable1,
}

#[derive(Subcommand)]
enum RootsCmd {
    /// Rank, root counts and Cartan matrix.
    Info {
        /// Root system type: E6, E7, E8, F4 or G2.
        #[arg(long = "type")]
        type_name: String,
    },
}

#[derive(Subcommand)]
enum RealformCmd {
    /// One row per real form.
    List,
    /// Full Satake and structure data of one form.
    Info {
        /// Form label, e.g. "E6(6)" or "EI".
        #[arg(long)]
        form: String,
    },
    /// Restricted root system with multiplicities.
    Restricted {
        /// Form label, e.g. "F4(-20)" or "FII".
        #[arg(long)]
        form: String,
    },
    /// Canonical dump of the frozen registry.
    DumpRegistry,
}

#[derive(Subcommand)]
enum ParabolicCmd {
    /// Maximal parabolics of one form (optionally a single node).
    Max {
        /// Form label, e.g. "E8(8)".
        #[arg(long)]
        form: String,
        /// Classification index j of the maximal parabolic P_j.
        #[arg(long)]
        node: Option<usize>,
    },
    /// Every standard parabolic P_Θ over the restricted simple roots.
    All {
        /// Form label, e.g. "G2(2)".
        #[arg(long)]
        form: String,
    },
}

#[derive(Subcommand)]
enum RelatedCmd {
    /// All classes of parabolically related maximal parabolics.
    Enumerate {
        /// Restrict to maximal parabolics (the only supported mode).
        #[arg(long, default_value_t = true)]
        max: bool,
    },
    /// Decide relatedness of two specific maximal parabolics.
    Check {
        /// First form label.
        #[arg(long)]
        form1: String,
        /// Classification index in the first form.
        #[arg(long)]
        node1: usize,
        /// Second form label.
        #[arg(long)]
        form2: String,
        /// Classification index in the second form.
        #[arg(long)]
        node2: usize,
    },
}

fn dispatch(cli: &Cli) -> (&'static str, Result<Outcome, UsageError>) {
    match &cli.command {
        Command::Algebra { cmd: AlgebraCmd::Table { label } } => {
            ("algebra table", commands::algebra_table(label))
        }
        Command::Jordan { cmd } => match cmd {
            JordanCmd::Check { algebra, trials } => {
                ("jordan check", commands::jordan_check(&algebra.algebra, *trials, cli.seed))
            }
            JordanCmd::Norm { algebra, element } => {
                ("jordan norm", commands::jordan_norm(&algebra.algebra, element))
            }
        },
        Command::Fts { cmd } => match cmd {
            FtsCmd::Check { algebra, trials } => {
                ("fts check", commands::fts_check(&algebra.algebra, *trials, cli.seed))
            }
            FtsCmd::Quartic { algebra, element } => {
                ("fts quartic", commands::fts_quartic(&algebra.algebra, element))
            }
        },
        Command::Symmetry { cmd } => match cmd {
            SymmetryCmd::Report { algebra } => {
                ("symmetry report", commands::symmetry_report(&algebra.algebra))
            }
            SymmetryCmd::VerifyTable1 => {
                ("symmetry verify-table1", commands::symmetry_verify_table1())
            }
        },
        Command::Roots { cmd: RootsCmd::Info { type_name } } => {
            ("roots info", commands::roots_info(type_name))
        }
        Command::Realform { cmd } => match cmd {
            RealformCmd::List => ("realform list", commands::realform_list()),
            RealformCmd::Info { form } => ("realform info", commands::realform_info(form)),
            RealformCmd::Restricted { form } => {
                ("realform restricted", commands::realform_restricted(form))
            }
            RealformCmd::DumpRegistry => ("realform dump-registry", commands::dump_registry()),
        },
        Command::Parabolic { cmd } => match cmd {
            ParabolicCmd::Max { form, node } => {
                ("parabolic max", commands::parabolic_max(form, *node))
            }
            ParabolicCmd::All { form } => ("parabolic all", commands::parabolic_all(form)),
        },
        Command::Related { cmd } => match cmd {
            RelatedCmd::Enumerate { max: _ } => {
                ("related enumerate", commands::related_enumerate())
            }
            RelatedCmd::Check { form1, node1, form2, node2 } => {
                ("related check", commands::related_check(form1, *node1, form2, *node2))
            }
        },
        Command::Interpret { label } => ("interpret", commands::interpret(label)),
        Command::VerifyAll { only } => {
            ("verify-all", commands::verify_all(only.as_deref(), cli.seed))
        }
        Command::DumpRegistry => ("dump-registry", commands::dump_registry()),
    }
}

fn main() {
    let cli = Cli::parse();
    let (name, result) = dispatch(&cli);
    match result {
        Ok(outcome) => {
            print!("{}", render(name, &outcome.output, cli.format));
            if let Some(summary) = outcome.failure {
                eprintln!("exlie: verification failed: {summary}");
                std::process::exit(1);
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("exlie: {msg}");
            std::process::exit(2);
        }
    }
}

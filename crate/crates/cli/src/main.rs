use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use tdsys_cli::commands::{cmd_check, cmd_diameter2, cmd_quotient, CmdOutput, Diameter2Args};
use tdsys_cli::verdict::{Format, Level};

#[derive(Parser)]
#[command(
    name = "tdsys",
    version,
    about = "Exact construction, verification, and reduction of tridiagonal systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    /// The mock axioms: eigenvalue verification, shape, corner products.
    Mtd,
    /// The mock axioms plus irreducibility of the generated module.
    Td,
}

impl From<LevelArg> for Level {
    fn from(v: LevelArg) -> Level {
        match v {
            LevelArg::Mtd => Level::Mtd,
            LevelArg::Td => Level::Td,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

impl From<FormatArg> for Format {
    fn from(v: FormatArg) -> Format {
        match v {
            FormatArg::Human => Format::Human,
            FormatArg::Machine => Format::Machine,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify systems stored as JSON documents.
    Check {
        /// System document paths.
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = LevelArg::Mtd)]
        level: LevelArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
        /// Worker threads when checking several documents.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Reduce a sharp system to its irreducible quotient and report the
    /// induced operators, support, and parameter array.
    Quotient {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
    /// Build and verify a diameter-2 system from nine scalars:
    /// theta_0 theta_1 theta_2 theta*_0 theta*_1 theta*_2 zeta_0 zeta_1 zeta_2.
    /// Scalars starting with a minus sign go after a "--" separator.
    Diameter2 {
        #[arg(num_args = 9, required = true, value_name = "SCALAR")]
        scalars: Vec<String>,
        /// Scalar field: Q or GFp:<p> with p prime.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Write the constructed system document here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cross-check the construction against its closed forms.
        #[arg(long)]
        expect: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
}

fn main() {
    let cli = Cli::parse();
    let output: CmdOutput = match cli.command {
        Command::Check {
            paths,
            level,
            format,
            jobs,
        } => cmd_check(&paths, level.into(), format.into(), jobs),
        Command::Quotient { path, format } => cmd_quotient(&path, format.into()),
        Command::Diameter2 {
            scalars,
            field,
            out,
            expect,
            format,
        } => cmd_diameter2(Diameter2Args {
            scalars: &scalars,
            field: &field,
            out: out.as_deref(),
            expect,
            format: format.into(),
        }),
    };
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    stdout
        .write_all(output.stdout.as_bytes())
        .expect("write stdout");
    stderr
        .write_all(output.stderr.as_bytes())
        .expect("write stderr");
    stdout.flush().expect("flush stdout");
    std::process::exit(output.exit_code);
}

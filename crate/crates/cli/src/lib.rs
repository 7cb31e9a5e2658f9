//! Command-line front end for the `symmetry-atlas` engines.

mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use output::Output;

/// Environment variable naming a directory that replaces the bundled datasets.
pub const DATA_ENV: &str = "SYMMETRY_ATLAS_DATA";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "symmetry-atlas", version, about = "Periodic tables of elements and hadrons from group theory")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory holding replacement CSV datasets.
    #[arg(long, global = true, env = DATA_ENV)]
    pub data_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lay out elements 1..=zmax.
    Table {
        #[arg(long, default_value = "so42")]
        layout: String,
        #[arg(long, default_value_t = 118)]
        zmax: u32,
    },
    /// Ground configuration of element Z.
    Config {
        z: u32,
        #[arg(long, default_value = "madelung")]
        rule: String,
    },
    /// Convert between Z and the (n, l, j, m_j) address.
    Address(AddressArgs),
    /// Registry record of element Z.
    Element { z: u32 },
    /// Column family, series and sub-block of element Z.
    Family { z: u32 },
    /// Rare-gas atomic numbers and their spacings.
    Raregases,
    /// Representation theory.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Quark model.
    #[command(subcommand)]
    Hadron(HadronCommand),
    /// Standard-model particles.
    #[command(subcommand)]
    Sm(SmCommand),
    /// Number of chemical elements known in a tabulated year.
    History { year: i32 },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct AddressArgs {
    #[arg(long)]
    pub z: Option<u32>,
    /// n, l, 2j and 2m_j.
    #[arg(long, num_args = 4, value_names = ["N", "L", "2J", "2MJ"], allow_negative_numbers = true)]
    pub nljm: Option<Vec<i32>>,
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    /// Dimension of the SU(3) irrep (p, q).
    Su3Dim { p: u32, q: u32 },
    /// Isospin multiplets of the SU(3) irrep (p, q).
    Su3Content { p: u32, q: u32 },
    /// SO(3) content of the SO(4) irrep (j, j), given 2j.
    So4Branch { twice_j: u32 },
    /// SO(4) content of the SO(4,2) representation h, truncated at n = nmax.
    So42H { nmax: u32 },
    /// Racah missing labels and complete commuting set size.
    Racah { order: u32, rank: u32, casimirs: u32 },
}

#[derive(Debug, Subcommand)]
pub enum HadronCommand {
    /// Additive quantum numbers of a quark combination, e.g. "u u d" or "u dbar".
    Compose {
        #[arg(required = true, num_args = 1..)]
        flavors: Vec<String>,
    },
    /// Colour-singlet wavefunction of a quark combination.
    Color {
        #[arg(required = true, num_args = 1..)]
        flavors: Vec<String>,
    },
    /// Assign a JSON member list to SU(3) multiplets.
    Classify { file: PathBuf },
    /// Predict the missing member of a JSON member list.
    Predict {
        file: PathBuf,
        /// Target irrep as "p,q"; inferred from the member count when omitted.
        #[arg(long)]
        irrep: Option<String>,
    },
    /// Gauge bosons of SU(n).
    Gluons {
        #[arg(default_value_t = 3)]
        n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum SmCommand {
    /// Fermion, mediator and Higgs counts.
    Census,
    /// Superpartner of a particle.
    Partner { name: String },
}

/// Runs one invocation. Returns 0 on success, 1 on a domain error and 2 on a
/// usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = stream.write_all(text.as_bytes());
            return code;
        }
    };
    match commands::execute(&cli) {
        Ok(output) => {
            let rendered = output.render(cli.format);
            match out.write_all(rendered.as_bytes()).and_then(|_| out.flush()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(commands::CliError::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
        Err(commands::CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

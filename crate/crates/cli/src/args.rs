use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fock_core::{ChargedBipartition, Check, CrystalKind, FockParam};

use crate::Failure;

#[derive(Parser, Debug)]
#[command(name = "fock", version, about = "Crystals on the level-2 Fock space and unitarity in type B")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Abacus, boxes and contents of a vertex.
    Show(VertexArgs),
    /// Apply a crystal operator: ẽ_i, f̃_i, Υ_k^±, ã_σ.
    Crystal(CrystalArgs),
    /// Position relative to the sources of both crystals.
    Position(VertexArgs),
    /// Unitarity verdict, with finite-dimensionality and support.
    Unitary(VertexArgs),
    /// Finite-dimensionality, tested through both crystals.
    Fd(VertexArgs),
    /// Cuspidal support read off the crystal position.
    Support(VertexArgs),
    /// Unitary labels of size n.
    ListUnitary(ListArgs),
    /// Unitary finite-dimensional labels of size n.
    ListFd(ListArgs),
    /// Export a piece of a crystal graph.
    Graph(GraphArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
}

impl Command {
    pub fn output(&self) -> &Output {
        match self {
            Command::Show(a)
            | Command::Position(a)
            | Command::Unitary(a)
            | Command::Fd(a)
            | Command::Support(a) => &a.output,
            Command::Crystal(a) => &a.output,
            Command::ListUnitary(a) | Command::ListFd(a) => &a.output,
            Command::Graph(a) => &a.output,
            Command::Verify(a) => &a.output,
        }
    }
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub e: i64,
    /// Charge difference: the charge is (0, s).
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["s1", "s2"])]
    pub s: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires = "s2")]
    pub s1: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires = "s1")]
    pub s2: Option<i64>,
}

impl ParamArgs {
    pub fn resolve(&self) -> Result<FockParam, Failure> {
        let param = match (self.s, self.s1, self.s2) {
            (Some(s), _, _) => FockParam::new(self.e, s),
            (None, Some(s1), Some(s2)) => FockParam::from_charges(self.e, s1, s2),
            _ => return Err(Failure::Usage("a charge is required: --s or --s1/--s2".into())),
        };
        Ok(param?)
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct BipartitionArg {
    /// Bipartition label, e.g. "(2,2,1)|(1)".
    #[arg(long, allow_hyphen_values = true)]
    pub bp: Option<String>,
    /// Fock-space vertex, the componentwise transpose of the label.
    #[arg(long = "bp-fock", allow_hyphen_values = true)]
    pub bp_fock: Option<String>,
}

impl BipartitionArg {
    pub fn resolve(&self, param: FockParam) -> Result<ChargedBipartition, Failure> {
        match (&self.bp, &self.bp_fock) {
            (Some(bp), _) => crate::vertex(bp, false, param),
            (None, Some(bp)) => crate::vertex(bp, true, param),
            (None, None) => Err(Failure::Usage("--bp or --bp-fock is required".into())),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Output {
    /// The requested format, with DOT reserved for graphs.
    pub fn format(&self) -> Result<Format, Failure> {
        match self.format {
            Some(Format::Dot) => Err(Failure::Usage("--format dot is only available for graph".into())),
            other => Ok(other.unwrap_or(Format::Text)),
        }
    }

    pub fn format_or(&self, default: Format) -> Result<Format, Failure> {
        match self.format {
            Some(Format::Text) => Err(Failure::Usage("graph output is dot or json".into())),
            other => Ok(other.unwrap_or(default)),
        }
    }
}

#[derive(Args, Debug)]
pub struct VertexArgs {
    #[command(flatten)]
    pub param: ParamArgs,
    #[command(flatten)]
    pub vertex: BipartitionArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrystalOp {
    /// ẽ_i
    E,
    /// f̃_i
    F,
    /// Υ_k^+
    Up,
    /// Υ_k^-
    Um,
    /// ã_σ
    A,
}

impl CrystalOp {
    pub fn name(self) -> &'static str {
        match self {
            CrystalOp::E => "e",
            CrystalOp::F => "f",
            CrystalOp::Up => "up",
            CrystalOp::Um => "um",
            CrystalOp::A => "a",
        }
    }
}

#[derive(Args, Debug)]
pub struct CrystalArgs {
    #[arg(long, value_enum)]
    pub op: CrystalOp,
    /// Residue for ẽ_i and f̃_i, read modulo e.
    #[arg(long, allow_negative_numbers = true)]
    pub i: Option<i64>,
    /// Period index for Υ_k^±.
    #[arg(long)]
    pub k: Option<usize>,
    /// Partition for ã_σ, e.g. "(2,1)".
    #[arg(long)]
    pub sigma: Option<String>,
    #[command(flatten)]
    pub param: ParamArgs,
    #[command(flatten)]
    pub vertex: BipartitionArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[command(flatten)]
    pub param: ParamArgs,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[command(flatten)]
    pub param: ParamArgs,
    /// Largest vertex size.
    #[arg(long)]
    pub n: usize,
    /// `sle` (ẽ_i edges) or `slinf` (Υ_k^- edges).
    #[arg(long, default_value = "sle")]
    pub crystal: CrystalKind,
    #[command(flatten)]
    pub output: Output,
}

/// Integers given as `a..b` (inclusive), `a,b,c` or a single value.
#[derive(Clone, Debug)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("expected `a..b`, `a,b,c` or an integer, got {s:?}");
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: i64 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            return Ok(IntList((lo..=hi).collect()));
        }
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()
            .map(IntList)
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Start from the default grid (e 2..5, s -2..7, n 9, every check,
    /// coverage required) instead of the small one.
    #[arg(long)]
    pub desk: bool,
    /// Values of e, e.g. "2..5".
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<IntList>,
    /// Values of s, e.g. "-2..7".
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<IntList>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest m for the single-row closed form.
    #[arg(long)]
    pub m: Option<usize>,
    /// Restrict to these checks (repeatable).
    #[arg(long)]
    pub check: Vec<Check>,
    /// Fail unless every case label and position fires.
    #[arg(long)]
    pub require_coverage: bool,
    /// Include wall times in the text report.
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub output: Output,
}

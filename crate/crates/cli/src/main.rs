//! `fock`: command-line front end to the crystal and unitarity library.
//!
//! Bipartitions are passed either as labels (`--bp`) or as Fock-space
//! vertices (`--bp-fock`); the two differ by a componentwise transpose.
//! Every output names the coordinates it prints.

mod args;
mod render;

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::Parser;
use fock_core::verify::MAX_N;
use fock_core::{
    a_sigma, crystal_graph, crystal_position, is_finite_dimensional, is_unitary, run_sweep,
    upsilon, Bipartition, ChargedBipartition, Check, Error, FockParam, Sign, SweepSpec,
};
use fock_core::crystal::{e_tilde, f_tilde};
use serde_json::json;

use args::{Cli, Command, CrystalOp, Format, Output};

/// How a command failed, mapped onto the exit code.
#[derive(Debug)]
enum Failure {
    /// A verification check did not pass (exit 1). The report was printed.
    Check,
    /// Bad arguments (exit 2).
    Usage(String),
    /// Internal consistency error (exit 3).
    Internal(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse(_) | Error::InvalidE(_) | Error::CapExceeded { .. } => {
                Failure::Usage(err.to_string())
            }
            _ => Failure::Internal(err.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(),
    };
    let out = cli.command.output().clone();
    let result = run(cli.command).and_then(|text| emit(&out, &text).map(|_| text));
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Show(a) => {
            let nu = a.vertex.resolve(a.param.resolve()?)?;
            render::show(&nu, a.output.format()?)
        }
        Command::Crystal(a) => crystal(a),
        Command::Position(a) => {
            let nu = a.vertex.resolve(a.param.resolve()?)?;
            let pos = crystal_position(&nu)?;
            render::position(&nu, &pos, a.output.format()?)
        }
        Command::Unitary(a) => verdict(a, render::Focus::Unitary),
        Command::Fd(a) => verdict(a, render::Focus::Fd),
        Command::Support(a) => verdict(a, render::Focus::Support),
        Command::ListUnitary(a) => list(a, false),
        Command::ListFd(a) => list(a, true),
        Command::Graph(a) => {
            let param = a.param.resolve()?;
            let g = crystal_graph(param, a.n, a.crystal)?;
            Ok(match a.output.format_or(Format::Dot)? {
                Format::Json => render::json_line(&g.to_json()),
                _ => g.to_dot(),
            })
        }
        Command::Verify(a) => verify(a),
    }
}

fn verdict(a: args::VertexArgs, focus: render::Focus) -> CmdResult {
    let nu = a.vertex.resolve(a.param.resolve()?)?;
    let format = a.output.format()?;
    let verdict = render::verdict_json(&nu.label(), nu.param())?;
    Ok(match format {
        Format::Json => render::json_line(&verdict),
        _ => render::verdict_text(&verdict, focus),
    })
}

fn crystal(a: args::CrystalArgs) -> CmdResult {
    let param = a.param.resolve()?;
    let nu = a.vertex.resolve(param)?;
    let need_i = || a.i.ok_or_else(|| Failure::Usage("--i is required for this operator".into()));
    let need_k = || match a.k {
        Some(k) if k >= 1 => Ok(k),
        Some(_) => Err(Failure::Usage("--k must be at least 1".into())),
        None => Err(Failure::Usage("--k is required for this operator".into())),
    };
    let result = match a.op {
        CrystalOp::E => e_tilde(&nu, need_i()?),
        CrystalOp::F => f_tilde(&nu, need_i()?),
        CrystalOp::Up => upsilon(&nu, need_k()?, Sign::Plus),
        CrystalOp::Um => upsilon(&nu, need_k()?, Sign::Minus),
        CrystalOp::A => {
            let sigma = a
                .sigma
                .as_deref()
                .ok_or_else(|| Failure::Usage("--sigma is required for ã_σ".into()))?;
            let sigma = sigma.parse().map_err(|e| Failure::Usage(format!("bad --sigma: {e}")))?;
            match a_sigma(&sigma, &nu) {
                Ok(x) => Some(x),
                Err(Error::NotInImage { .. }) => None,
                Err(err) => return Err(err.into()),
            }
        }
    };
    Ok(match a.output.format()? {
        Format::Json => render::json_line(&json!({
            "op": a.op.name(),
            "e": param.e(),
            "charge": [0, param.s()],
            "input": {"fock": nu.nu().to_string(), "label": nu.label().to_string()},
            "result": result.as_ref().map(|x| json!({"fock": x.nu().to_string(), "label": x.label().to_string()})),
        })),
        _ => match result {
            None => "0\n".to_string(),
            Some(x) => format!("fock:  {}\nlabel: {}\n", x.nu(), x.label()),
        },
    })
}

fn list(a: args::ListArgs, fd_only: bool) -> CmdResult {
    let param = a.param.resolve()?;
    if a.n > MAX_N {
        return Err(Error::CapExceeded { what: "n", value: a.n, limit: MAX_N }.into());
    }
    let format = a.output.format()?;
    let mut rows = Vec::new();
    for lam in Bipartition::all_of_size(a.n) {
        let v = is_unitary(&lam, param);
        if !v.unitary {
            continue;
        }
        let fd = is_finite_dimensional(&lam, param);
        if fd_only && !fd {
            continue;
        }
        rows.push((lam, v, fd));
    }
    Ok(match format {
        Format::Json => render::json_line(&json!({
            "coordinates": "label",
            "e": param.e(),
            "charge": [0, param.s()],
            "n": a.n,
            "bipartitions": rows.iter().map(|(lam, v, fd)| json!({
                "bipartition": lam.to_string(),
                "cases": v.cases,
                "fd": fd,
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = format!("# labels, {param}, n={}\n", a.n);
            for (lam, v, fd) in &rows {
                if fd_only {
                    let _ = writeln!(out, "{lam}");
                } else {
                    let cases: Vec<&str> = v.cases.iter().map(|c| c.as_str()).collect();
                    let _ = writeln!(out, "{lam}\t{}\tfd={fd}", cases.join(","));
                }
            }
            out
        }
    })
}

fn verify(a: args::VerifyArgs) -> CmdResult {
    let mut spec = if a.desk {
        SweepSpec::desk()
    } else {
        SweepSpec::new(vec![2, 3], vec![0, 1, 2], 6, &Check::ALL)
    };
    if let Some(e) = a.e {
        spec.e_values = e.0;
    }
    if let Some(s) = a.s {
        spec.s_values = s.0;
    }
    if let Some(n) = a.n {
        spec.n_max = n;
    }
    if let Some(m) = a.m {
        spec.m_max = m;
    }
    if !a.check.is_empty() {
        spec.checks = a.check.iter().copied().collect();
    }
    if a.require_coverage {
        spec.require_coverage = true;
    }
    let report = run_sweep(&spec)?;
    let text = match a.output.format()? {
        Format::Json => render::json_line(&serde_json::to_value(&report).expect("report serializes")),
        _ => report.render_text(a.timings),
    };
    if report.passed {
        Ok(text)
    } else {
        emit(&a.output, &text)?;
        Err(Failure::Check)
    }
}

/// The charged vertex for a label or Fock-coordinate argument.
fn vertex(bp: &str, fock: bool, param: FockParam) -> Result<ChargedBipartition, Failure> {
    let parsed: Bipartition = bp
        .parse()
        .map_err(|e| Failure::Usage(format!("malformed bipartition {bp:?}: {e}")))?;
    Ok(if fock {
        ChargedBipartition::new(parsed, param)
    } else {
        ChargedBipartition::from_label(&parsed, param)
    })
}

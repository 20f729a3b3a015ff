use std::fmt::Write as _;

use fock_core::crystal::{is_highest_weight, is_source_by_abacus};
use fock_core::slinf::is_slinf_highest_weight;
use fock_core::{
    is_finite_dimensional, is_unitary, marked_boxes, support, Abacus, Bipartition,
    ChargedBipartition, CrystalPosition, FockParam,
};
use serde_json::{json, Value};

use crate::args::Format;
use crate::{CmdResult, Failure};

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn boxes_json(nu: &ChargedBipartition, removable: bool) -> Vec<Value> {
    let boxes = if removable { nu.removable_boxes() } else { nu.addable_boxes() };
    boxes
        .iter()
        .map(|b| {
            json!({
                "component": b.cell.component.number(),
                "row": b.cell.row,
                "col": b.cell.col,
                "charged_content": b.charged_content,
                "residue": b.residue,
            })
        })
        .collect()
}

pub fn show(nu: &ChargedBipartition, format: Format) -> CmdResult {
    let param = nu.param();
    let abacus = Abacus::from_charged(nu);
    if format == Format::Json {
        return Ok(json_line(&json!({
            "fock": nu.nu().to_string(),
            "label": nu.label().to_string(),
            "e": param.e(),
            "charge": [0, param.s()],
            "size": nu.size(),
            "abacus": abacus.render(),
            "removable": boxes_json(nu, true),
            "addable": boxes_json(nu, false),
            "marked_boxes_of_label": marked_boxes(&nu.label()),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "fock:  {}", nu.nu());
    let _ = writeln!(out, "label: {}", nu.label());
    let _ = writeln!(out, "{param}, size {}", nu.size());
    let _ = writeln!(out, "abacus of the fock vertex:");
    out.push_str(&abacus.render());
    if !out.ends_with('\n') {
        out.push('\n');
    }
    for (title, boxes) in [("removable", nu.removable_boxes()), ("addable", nu.addable_boxes())] {
        let _ = writeln!(out, "{title} boxes of the fock vertex (component, row, col: charged content, residue):");
        for b in boxes {
            let _ = writeln!(
                out,
                "  {}, {}, {}: {}, {}",
                b.cell.component.number(),
                b.cell.row,
                b.cell.col,
                b.charged_content,
                b.residue
            );
        }
    }
    Ok(out)
}

pub fn position(nu: &ChargedBipartition, pos: &CrystalPosition, format: Format) -> CmdResult {
    let path: Vec<String> = pos.sle_path.iter().map(|i| i.to_string()).collect();
    if format == Format::Json {
        return Ok(json_line(&json!({
            "fock": nu.nu().to_string(),
            "label": nu.label().to_string(),
            "e": nu.param().e(),
            "charge": [0, nu.param().s()],
            "e_path": pos.sle_path,
            "p": pos.sle_depth(),
            "sigma": pos.sigma.to_string(),
            "m": pos.slinf_depth(),
            "source_fock": pos.source.nu().to_string(),
            "source_label": pos.source.label().to_string(),
        })));
    }
    let mut out = String::new();
    let _ = writeln!(out, "fock:  {}", nu.nu());
    let _ = writeln!(out, "label: {}", nu.label());
    let _ = writeln!(out, "{}", nu.param());
    let _ = writeln!(out, "e-path to the affine source: [{}]", path.join(","));
    let _ = writeln!(out, "affine depth p = {}", pos.sle_depth());
    let _ = writeln!(out, "sigma = {} (level-rank depth m = {})", pos.sigma, pos.slinf_depth());
    let _ = writeln!(out, "source (fock): {}", pos.source.nu());
    let _ = writeln!(out, "source (label): {}", pos.source.label());
    Ok(out)
}

/// The verdict shared by `unitary`, `fd` and `support`, in label coordinates.
pub fn verdict_json(lam: &Bipartition, param: FockParam) -> Result<Value, Failure> {
    let v = is_unitary(lam, param);
    let nu = ChargedBipartition::from_label(lam, param);
    let desc = support(lam, param)?;
    Ok(json!({
        "coordinates": "label",
        "bipartition": lam.to_string(),
        "n": lam.size(),
        "e": param.e(),
        "s": param.s(),
        "unitary": v.unitary,
        "cases": v.cases,
        "reduction_trace": v.reduction_trace,
        "fd": is_finite_dimensional(lam, param),
        "fd_by_crystals": {
            "affine_source": is_highest_weight(&nu),
            "affine_source_by_abacus": is_source_by_abacus(&nu),
            "level_rank_source": is_slinf_highest_weight(&nu),
        },
        "support": {
            "n_cusp": desc.n_cuspidal,
            "m": desc.m,
            "p": desc.p,
            "sigma": desc.sigma.to_string(),
            "source": desc.source_fock.nu().to_string(),
            "case": desc.position_cases,
        },
    }))
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Focus {
    Unitary,
    Fd,
    Support,
}

pub fn verdict_text(v: &Value, focus: Focus) -> String {
    let list = |x: &Value| -> String {
        x.as_array()
            .map(|a| a.iter().map(|c| c.to_string().trim_matches('"').to_string()).collect::<Vec<_>>().join(", "))
            .unwrap_or_default()
    };
    let sup = &v["support"];
    let mut out = String::new();
    let _ = writeln!(out, "bipartition (label): {}", v["bipartition"].as_str().unwrap_or(""));
    let _ = writeln!(out, "e={}, s=(0,{}), n={}", v["e"], v["s"], v["n"]);
    let cases = list(&v["cases"]);
    if cases.is_empty() {
        let _ = writeln!(out, "unitary: {}", v["unitary"]);
    } else {
        let _ = writeln!(out, "unitary: {} ({cases})", v["unitary"]);
    }
    if focus != Focus::Support {
        let _ = writeln!(out, "fd: {}", v["fd"]);
    }
    if focus == Focus::Fd {
        let by = &v["fd_by_crystals"];
        let _ = writeln!(
            out,
            "  affine source: {} (abacus test: {}), level-rank source: {}",
            by["affine_source"], by["affine_source_by_abacus"], by["level_rank_source"]
        );
    }
    if focus != Focus::Fd {
        let _ = writeln!(
            out,
            "support: n'={}, m={}, p={}, sigma={}, source (fock) {}, position case [{}]",
            sup["n_cusp"],
            sup["m"],
            sup["p"],
            sup["sigma"].as_str().unwrap_or(""),
            sup["source"].as_str().unwrap_or(""),
            list(&sup["case"])
        );
    }
    out
}

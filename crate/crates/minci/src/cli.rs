//! Command implementations and rendering shared by the `minci` binary.
//!
//! Everything here returns strings; the binary only parses arguments and
//! maps errors to exit codes (0 success, 1 verification/runtime failure,
//! 2 usage error). Numeric fields in `csv` and `json` output use the
//! shortest round-trip representation, so re-parsing and re-rendering is
//! byte-identical; `table` output rounds energies to 4 decimals.

use serde::Serialize;
use serde_json::json;

use crate::blocks::{blocks_for, Root, SymmetryLabel};
use crate::integrals::{compute_integrals, pt_integrals, pt_rational, IntegralSymbol};
use crate::orbitals::DilationParams;
use crate::reference::{atom_name, atom_number, dataset_raw, reference};
use crate::spectra::{atom_spectrum, ionization_energy, isoelectronic_scan, EnergyLevel};
use crate::verify::{run as run_verify, VerifyLevel};
use crate::{Error, Result, HARTREE_TO_EV};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Self::Table),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::Usage(format!(
                "unknown format '{s}' (expected table, csv or json)"
            ))),
        }
    }
}

/// Parse "from:to" or "from:to:step" into an inclusive list of charges.
pub fn parse_range(s: &str) -> Result<Vec<f64>> {
    let err = || Error::Usage(format!("cannot parse range '{s}' (expected FROM:TO[:STEP])"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(err());
    }
    let from: f64 = parts[0].parse().map_err(|_| err())?;
    let to: f64 = parts[1].parse().map_err(|_| err())?;
    let step: f64 = if parts.len() == 3 {
        parts[2].parse().map_err(|_| err())?
    } else {
        1.0
    };
    if step <= 0.0 || to < from {
        return Err(err());
    }
    let mut out = Vec::new();
    let mut z = from;
    while z <= to + 1e-9 {
        out.push(z);
        z += step;
    }
    Ok(out)
}

fn parse_int_range(s: &str) -> Result<Vec<usize>> {
    parse_range(s)?
        .into_iter()
        .map(|v| {
            if (v - v.round()).abs() > 1e-9 || !(1.0..=10.0).contains(&v) {
                Err(Error::Usage(format!("'{s}' must range over whole atoms 1..=10")))
            } else {
                Ok(v.round() as usize)
            }
        })
        .collect()
}

/// Flat serializable view of one level, shared by csv and json output.
#[derive(Serialize)]
struct LevelView {
    term: String,
    root: &'static str,
    e_ci: f64,
    z1: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    z2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z3: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<f64>,
    gap: f64,
    e_pt: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_exp: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_mdhf: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    de_exp: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    de_mdhf: Option<f64>,
}

impl LevelView {
    fn new(level: &EnergyLevel, unit: f64) -> Self {
        let r = level.reference.as_ref();
        Self {
            term: level.term.ascii(),
            root: match level.root {
                Root::Lower => "lower",
                Root::Upper => "upper",
            },
            e_ci: level.energy_ci * unit,
            z1: level.params_star.z1,
            z2: level.active.z2.then_some(level.params_star.z2),
            z3: level.active.z3.then_some(level.params_star.z3),
            c: level.mixing_c,
            gap: level.gap * unit,
            e_pt: level.energy_pt * unit,
            e_exp: r.and_then(|r| r.e_exp).map(|v| v * unit),
            e_mdhf: r.and_then(|r| r.e_mdhf).map(|v| v * unit),
            de_exp: r.and_then(|r| r.de_exp).map(|v| v * unit),
            de_mdhf: r.and_then(|r| r.de_mdhf).map(|v| v * unit),
        }
    }
}

fn opt_num(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn opt_fixed(v: Option<f64>, digits: usize) -> String {
    v.map(|x| format!("{x:.digits$}")).unwrap_or_default()
}

fn unit_factor(ev: bool) -> f64 {
    if ev {
        HARTREE_TO_EV
    } else {
        1.0
    }
}

/// `solve`: spectrum of one atom or ion.
pub fn cmd_solve(atom: &str, charge: Option<f64>, format: OutputFormat, ev: bool) -> Result<String> {
    let n = atom_number(atom)?;
    let z = charge.unwrap_or(n as f64);
    if z.is_nan() || z <= 0.0 {
        return Err(Error::Usage(format!("charge must be positive, got {z}")));
    }
    let spectrum = atom_spectrum(n, z)?;
    let unit = unit_factor(ev);
    let views: Vec<LevelView> = spectrum.levels.iter().map(|l| LevelView::new(l, unit)).collect();

    Ok(match format {
        OutputFormat::Json => {
            let v = json!({
                "atom": atom_name(n)?,
                "n": n,
                "z": z,
                "unit": if ev { "eV" } else { "hartree" },
                "levels": views,
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from(
                "term,root,e_ci,z1,z2,z3,c,gap,e_pt,e_exp,e_mdhf,de_exp,de_mdhf\n",
            );
            for v in &views {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    v.term,
                    v.root,
                    v.e_ci,
                    v.z1,
                    opt_num(v.z2),
                    opt_num(v.z3),
                    opt_num(v.c),
                    v.gap,
                    v.e_pt,
                    opt_num(v.e_exp),
                    opt_num(v.e_mdhf),
                    opt_num(v.de_exp),
                    opt_num(v.de_mdhf),
                ));
            }
            out
        }
        OutputFormat::Table => {
            let unit_name = if ev { "eV" } else { "hartree" };
            let mut out = format!(
                "{} (N={}), Z={}  [energies in {unit_name}]\n",
                atom_name(n)?,
                n,
                z
            );
            let neutral = views.iter().any(|v| v.e_exp.is_some());
            out.push_str(&format!(
                "{:<5} {:>12} {:>8} {:>8} {:>8} {:>8} {:>10}",
                "term", "E_CI", "Z1", "Z2", "Z3", "c", "gap"
            ));
            if neutral {
                out.push_str(&format!(
                    " {:>12} {:>12} {:>12}",
                    "E_exp", "E_MDHF", "E_PT"
                ));
            } else {
                out.push_str(&format!(" {:>12}", "E_PT"));
            }
            out.push('\n');
            for v in &views {
                let term = if v.root == "upper" {
                    format!("{}*", v.term)
                } else {
                    v.term.clone()
                };
                out.push_str(&format!(
                    "{:<5} {:>12.4} {:>8.4} {:>8} {:>8} {:>8} {:>10.4}",
                    term,
                    v.e_ci,
                    v.z1,
                    opt_fixed(v.z2, 4),
                    opt_fixed(v.z3, 4),
                    opt_fixed(v.c, 4),
                    v.gap
                ));
                if neutral {
                    out.push_str(&format!(
                        " {:>12} {:>12} {:>12.4}",
                        opt_fixed(v.e_exp, 4),
                        opt_fixed(v.e_mdhf, 4),
                        v.e_pt
                    ));
                } else {
                    out.push_str(&format!(" {:>12.4}", v.e_pt));
                }
                out.push('\n');
            }
            out.push_str("(* = upper root of a 2x2 block, at the lower root's parameters)\n");
            out
        }
    })
}

#[derive(Serialize)]
struct TermScanRow {
    z: f64,
    e_first: f64,
    e_second: f64,
    diff: f64,
}

/// `scan --n N --z A:B --terms T1[,T2]`: isoelectronic scan of one term,
/// or of two terms with their difference.
pub fn cmd_scan_terms(
    n: usize,
    z_spec: &str,
    terms_spec: &str,
    format: OutputFormat,
    ev: bool,
) -> Result<String> {
    let zs = parse_range(z_spec)?;
    let unit = unit_factor(ev);
    let mut terms = terms_spec.split(',');
    let (a, b) = match (terms.next(), terms.next(), terms.next()) {
        (Some(a), None, _) => {
            // single-term scan
            let label = SymmetryLabel::parse(a)?;
            let points = crate::spectra::term_scan(n, &zs, label)?;
            return Ok(match format {
                OutputFormat::Json => {
                    let rows: Vec<serde_json::Value> = points
                        .iter()
                        .map(|(z, e)| json!({"z": z, "e": e * unit}))
                        .collect();
                    let v = json!({
                        "n": n,
                        "term": label.ascii(),
                        "unit": if ev { "eV" } else { "hartree" },
                        "points": rows,
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                OutputFormat::Csv => {
                    let mut out = format!("z,e_{}\n", label.ascii());
                    for (z, e) in &points {
                        out.push_str(&format!("{},{}\n", z, e * unit));
                    }
                    out
                }
                OutputFormat::Table => {
                    let mut out = format!("{:>6} {:>14}\n", "Z", format!("E({})", label.ascii()));
                    for (z, e) in &points {
                        out.push_str(&format!("{:>6} {:>14.4}\n", z, e * unit));
                    }
                    out
                }
            });
        }
        (Some(a), Some(b), None) => (a, b),
        _ => {
            return Err(Error::Usage(format!(
                "--terms expects one or two comma-separated term symbols, got '{terms_spec}'"
            )))
        }
    };
    let (la, lb) = (SymmetryLabel::parse(a)?, SymmetryLabel::parse(b)?);
    let points = isoelectronic_scan(n, &zs, (la, lb))?;
    let rows: Vec<TermScanRow> = points
        .iter()
        .map(|p| TermScanRow {
            z: p.z,
            e_first: p.e_first * unit,
            e_second: p.e_second * unit,
            diff: p.diff * unit,
        })
        .collect();

    Ok(match format {
        OutputFormat::Json => {
            let v = json!({
                "n": n,
                "first": la.ascii(),
                "second": lb.ascii(),
                "unit": if ev { "eV" } else { "hartree" },
                "points": rows,
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = format!("z,e_{},e_{},diff\n", la.ascii(), lb.ascii());
            for r in &rows {
                out.push_str(&format!("{},{},{},{}\n", r.z, r.e_first, r.e_second, r.diff));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:>6} {:>14} {:>14} {:>12}\n",
                "Z",
                format!("E({})", la.ascii()),
                format!("E({})", lb.ascii()),
                "diff"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>6} {:>14.4} {:>14.4} {:>12.6}\n",
                    r.z, r.e_first, r.e_second, r.diff
                ));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct IonizationRow {
    n: usize,
    atom: &'static str,
    i_ci: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    i_ref: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i_exp: Option<f64>,
}

/// `scan --ionization --z-eq-n A:B`: first ionization energies along the
/// neutral sequence.
pub fn cmd_scan_ionization(range: &str, format: OutputFormat, ev: bool) -> Result<String> {
    let ns = parse_int_range(range)?;
    let unit = unit_factor(ev);
    let data = reference();
    let mut rows = Vec::new();
    for n in ns {
        let atom = atom_name(n)?;
        rows.push(IonizationRow {
            n,
            atom,
            i_ci: ionization_energy(n, n as f64)? * unit,
            i_ref: data.ionization.ci.get(atom).map(|v| v * unit),
            i_exp: data.ionization.exp.get(atom).map(|v| v * unit),
        });
    }
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("n,atom,i_ci,i_ref,i_exp\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    r.atom,
                    r.i_ci,
                    opt_num(r.i_ref),
                    opt_num(r.i_exp)
                ));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:>3} {:>4} {:>10} {:>10} {:>10}\n",
                "N", "atom", "I_CI", "I_ref", "I_exp"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>4} {:>10.4} {:>10} {:>10}\n",
                    r.n,
                    r.atom,
                    r.i_ci,
                    opt_fixed(r.i_ref, 4),
                    opt_fixed(r.i_exp, 4)
                ));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct GroundRow {
    n: usize,
    atom: &'static str,
    term: String,
    e_ci: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_ref: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_exp: Option<f64>,
}

/// `scan --ground A:B`: neutral ground-state energies.
pub fn cmd_scan_ground(range: &str, format: OutputFormat, ev: bool) -> Result<String> {
    let ns = parse_int_range(range)?;
    let unit = unit_factor(ev);
    let mut rows = Vec::new();
    for n in ns {
        let spectrum = atom_spectrum(n, n as f64)?;
        let g = spectrum.ground();
        let r = g.reference.as_ref();
        rows.push(GroundRow {
            n,
            atom: atom_name(n)?,
            term: g.term.ascii(),
            e_ci: g.energy_ci * unit,
            e_ref: r.map(|r| r.e_ci * unit),
            e_exp: r.and_then(|r| r.e_exp).map(|v| v * unit),
        });
    }
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("n,atom,term,e_ci,e_ref,e_exp\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.n,
                    r.atom,
                    r.term,
                    r.e_ci,
                    opt_num(r.e_ref),
                    opt_num(r.e_exp)
                ));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:>3} {:>4} {:>5} {:>12} {:>12} {:>12}\n",
                "N", "atom", "term", "E_CI", "E_ref", "E_exp"
            );
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>4} {:>5} {:>12.4} {:>12} {:>12}\n",
                    r.n,
                    r.atom,
                    r.term,
                    r.e_ci,
                    opt_fixed(r.e_ref, 4),
                    opt_fixed(r.e_exp, 4)
                ));
            }
            out
        }
    })
}

#[derive(Serialize)]
struct IntegralRow {
    symbol: String,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    rational: Option<String>,
}

/// `integrals`: dump the fourteen canonical integrals for one parameter
/// set, or their exact rationals at uniform screening with `--pt`.
pub fn cmd_integrals(
    z: f64,
    params: Option<(f64, f64, f64)>,
    pt: bool,
    format: OutputFormat,
) -> Result<String> {
    if pt && params.is_some() {
        return Err(Error::Usage("--pt conflicts with explicit --z1/--z2/--z3".into()));
    }
    let ints = match params {
        Some((z1, z2, z3)) => compute_integrals(z, &DilationParams::new(z1, z2, z3)?)?,
        None => pt_integrals(z)?,
    };
    let rows: Vec<IntegralRow> = IntegralSymbol::ALL
        .iter()
        .map(|&sym| {
            let rational = pt.then(|| {
                let (q, pow) = pt_rational(sym);
                format!("{q} · Z{}", if pow == 2 { "²" } else { "" })
            });
            IntegralRow {
                symbol: sym.notation().to_string(),
                value: ints.get(sym),
                rational,
            }
        })
        .collect();

    Ok(match format {
        OutputFormat::Json => {
            let v = json!({
                "z": z,
                "params": ints.params,
                "integrals": rows,
            });
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from(if pt { "symbol,value,rational\n" } else { "symbol,value\n" });
            for r in &rows {
                if pt {
                    out.push_str(&format!(
                        "{},{},{}\n",
                        r.symbol,
                        r.value,
                        r.rational.as_deref().unwrap_or("")
                    ));
                } else {
                    out.push_str(&format!("{},{}\n", r.symbol, r.value));
                }
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "Z = {z}, (Z1, Z2, Z3) = ({}, {}, {})\n",
                ints.params.z1, ints.params.z2, ints.params.z3
            );
            for r in &rows {
                match &r.rational {
                    Some(q) => out.push_str(&format!("{:<8} = {} = {}\n", r.symbol, q, r.value)),
                    None => out.push_str(&format!("{:<8} = {}\n", r.symbol, r.value)),
                }
            }
            out
        }
    })
}

/// `blocks`: symbolic matrix elements of one atom in conventional notation.
pub fn cmd_blocks(atom: &str) -> Result<String> {
    let n = atom_number(atom)?;
    let blocks = blocks_for(n)?;
    let mut out = format!("{} (N={}), {} symmetry blocks\n\n", atom_name(n)?, n, blocks.len());
    for b in &blocks {
        out.push_str(&format!(
            "{}  L={} 2S+1={} parity={}  dimension {}\n",
            b.label.ascii(),
            b.label.l,
            b.label.two_s + 1,
            if b.label.parity > 0 { "+" } else { "-" },
            b.dimension()
        ));
        for (i, (basis, diag)) in b.basis.iter().zip(&b.diagonal).enumerate() {
            out.push_str(&format!("  psi{} = {}\n", i + 1, basis));
            out.push_str(&format!("  <H>{}{} = {}\n", i + 1, i + 1, diag.render()));
        }
        if let Some(cross) = &b.cross {
            out.push_str(&format!("  cross = {}\n", cross.render()));
        }
        out.push('\n');
    }
    Ok(out)
}

/// `errors`: ground-state accuracy of the model against the experimental
/// energies, with the tabulated percentages alongside.
pub fn cmd_errors(format: OutputFormat) -> Result<String> {
    let report = crate::spectra::error_report()?;
    Ok(match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&report).expect("serializable") + "\n"
        }
        OutputFormat::Csv => {
            let mut out =
                String::from("atom,n,e_ci,e_pt,e_exp,ci_percent,pt_percent,ref_ci,ref_pt\n");
            for r in &report.ground {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    r.atom,
                    r.n,
                    r.e_ci,
                    r.e_pt,
                    r.e_exp,
                    r.ci_percent,
                    r.pt_percent,
                    r.ref_ci_percent,
                    r.ref_pt_percent
                ));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:>4} {:>12} {:>12} {:>12} {:>8} {:>8}\n",
                "atom", "E_CI", "E_PT", "E_exp", "CI err", "PT err"
            );
            for r in &report.ground {
                out.push_str(&format!(
                    "{:>4} {:>12.4} {:>12.4} {:>12.4} {:>7.2}% {:>7.2}%\n",
                    r.atom, r.e_ci, r.e_pt, r.e_exp, r.ci_percent, r.pt_percent
                ));
            }
            out.push_str("\ngaps against the experimental and benchmark columns:\n");
            out.push_str(&format!(
                "{:>4} {:>6} {:>10} {:>10} {:>10}\n",
                "atom", "term", "gap_CI", "gap_exp", "gap_bench"
            ));
            for g in &report.gaps {
                out.push_str(&format!(
                    "{:>4} {:>5}{} {:>10.4} {:>10} {:>10}\n",
                    g.atom,
                    g.term,
                    if g.upper { "*" } else { " " },
                    g.gap_ci,
                    opt_fixed(g.gap_exp, 4),
                    opt_fixed(g.gap_mdhf, 4)
                ));
            }
            out
        }
    })
}

/// `verify`: run the oracle suite; second return value is overall success.
pub fn cmd_verify(level: &str) -> Result<(String, bool)> {
    let level = match level {
        "quick" => VerifyLevel::Quick,
        "full" => VerifyLevel::Full,
        other => {
            return Err(Error::Usage(format!(
                "unknown verification level '{other}' (expected quick or full)"
            )))
        }
    };
    let checks = run_verify(level)?;
    let mut out = String::new();
    let mut all = true;
    for c in &checks {
        all &= c.passed;
        out.push_str(&format!(
            "{} {:<40} {}\n",
            if c.passed { "OK  " } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    out.push_str(&format!(
        "{}/{} checks passed\n",
        checks.iter().filter(|c| c.passed).count(),
        checks.len()
    ));
    Ok((out, all))
}

/// `dataset`: the embedded reference dataset, byte-identical to the build
/// input.
pub fn cmd_dataset() -> &'static str {
    dataset_raw()
}

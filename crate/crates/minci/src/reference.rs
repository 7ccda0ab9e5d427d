//! Embedded reference dataset: tabulated model results and literature
//! comparison values (experimental energies from the NIST compilation,
//! multi-determinant Hartree-Fock benchmarks).
//!
//! The dataset lives in `data/reference.toml`, is compiled into the binary
//! and parsed once on first use. The raw text is exportable through the
//! CLI so downstream tooling can consume the same file.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Element symbols in order of electron count; index + 1 = N.
pub const ATOM_NAMES: [&str; 10] = ["H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne"];

/// Resolve an element symbol or electron count ("Be" or "4") to N.
pub fn atom_number(s: &str) -> Result<usize> {
    if let Ok(n) = s.parse::<usize>() {
        if (1..=10).contains(&n) {
            return Ok(n);
        }
        return Err(Error::Usage(format!("electron count {n} outside 1..=10")));
    }
    ATOM_NAMES
        .iter()
        .position(|name| name.eq_ignore_ascii_case(s))
        .map(|i| i + 1)
        .ok_or_else(|| Error::Usage(format!("unknown atom '{s}' (expected H..Ne or 1..10)")))
}

pub fn atom_name(n: usize) -> Result<&'static str> {
    ATOM_NAMES
        .get(n.wrapping_sub(1))
        .copied()
        .ok_or_else(|| Error::Domain(format!("no atom with {n} electrons")))
}

/// One tabulated energy level.
#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct ReferenceLevel {
    pub atom: String,
    pub term: String,
    #[serde(default)]
    pub upper: bool,
    pub e_ci: f64,
    pub z1: f64,
    pub z2: Option<f64>,
    pub z3: Option<f64>,
    pub c: Option<f64>,
    pub e_exp: Option<f64>,
    /// Experimental value assigned approximately to the model configuration.
    #[serde(default)]
    pub exp_assigned: bool,
    pub e_mdhf: Option<f64>,
    pub e_pt: f64,
    pub de_ci: Option<f64>,
    pub de_exp: Option<f64>,
    pub de_mdhf: Option<f64>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct IonizationTables {
    pub ci: BTreeMap<String, f64>,
    pub exp: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct GroundErrorTables {
    pub pt: BTreeMap<String, f64>,
    pub ci: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct FluorineMethods {
    pub pt_percent: f64,
    pub ci_percent: f64,
    pub mdhf_percent: f64,
    pub mpii_percent: f64,
    pub fci_percent: f64,
}

/// The full embedded dataset.
#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct ReferenceData {
    pub schema: String,
    pub levels: Vec<ReferenceLevel>,
    pub gap_ratio_exp: BTreeMap<String, f64>,
    pub ionization: IonizationTables,
    pub ground_error_percent: GroundErrorTables,
    pub fluorine_methods: FluorineMethods,
    pub virial_pt: BTreeMap<String, f64>,
}

const RAW: &str = include_str!("../data/reference.toml");

/// Raw TOML text of the dataset, byte-identical to the build input.
pub fn dataset_raw() -> &'static str {
    RAW
}

/// Parsed dataset, cached for the lifetime of the process.
pub fn reference() -> &'static ReferenceData {
    static DATA: OnceLock<ReferenceData> = OnceLock::new();
    DATA.get_or_init(|| toml::from_str(RAW).expect("embedded reference dataset parses"))
}

impl ReferenceData {
    /// All tabulated levels of one atom, in dataset order.
    pub fn levels_for(&self, n: usize) -> Vec<&ReferenceLevel> {
        let name = atom_name(n).unwrap_or("?");
        self.levels.iter().filter(|l| l.atom == name).collect()
    }

    /// Look up a level by atom, ASCII term symbol and root.
    pub fn level(&self, n: usize, term: &str, upper: bool) -> Option<&ReferenceLevel> {
        let name = atom_name(n).ok()?;
        self.levels
            .iter()
            .find(|l| l.atom == name && l.term == term && l.upper == upper)
    }
}

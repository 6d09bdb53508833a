//! Named gradings: the quasitori of f4, the crossings on J and the
//! gradings of H3(F), each given by commuting automorphisms.

use serde::Serialize;
use thiserror::Error;

use super::core::{grading_from_automorphisms, Grading, GradingError};
use super::toral::ToralReport;
use crate::algcore::{AlgError, AlgebraMap, AlgebraTable};
use crate::exactmath::{AbelianGroupDescriptor, CycNum};
use crate::f4lie::{albert_toral_report, f4, f4_toral_report};
use crate::jordan::{albert_grading_presets, build_albert, build_h3f, h3f_generators, restrict_to_h3f, JordanError};
use crate::weyl::{
    appendix_generators, fixed_torus_generators, quasitorus_a, TorusPoint, WeylError, CLASS_REPRESENTATIVES,
};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("unknown table {0}")]
    UnknownTable(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Algebra(#[from] AlgError),
    #[error(transparent)]
    Jordan(#[from] JordanError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlgebraKind {
    F4,
    Albert,
    H3f,
}

impl AlgebraKind {
    pub fn table(self) -> &'static AlgebraTable {
        match self {
            AlgebraKind::F4 => f4().table(),
            AlgebraKind::Albert => build_albert(),
            AlgebraKind::H3f => build_h3f(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            AlgebraKind::F4 => "f4",
            AlgebraKind::Albert => "J",
            AlgebraKind::H3f => "H3F",
        }
    }
}

/// Rows of the classification of nontoral quasitori of F4.
pub const MAIN_ROWS: [&str; 9] = ["I", "II", "II.1", "II.2", "II.3.1", "II.3.2", "II.4.1", "II.4.2", "III"];

pub const ALBERT_PRESETS: [&str; 8] = ["nt1", "nt2", "nt3", "nt4", "nt5", "grad1", "coar", "ztrescubo"];

pub const H3F_PRESETS: [&str; 5] = ["gr1", "gr2", "gr3", "gr4", "gr5"];

/// A grading given by its algebra and a set of commuting automorphisms.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: String,
    pub algebra: AlgebraKind,
    pub maps: Vec<AlgebraMap>,
}

impl Preset {
    pub fn grading(&self) -> Result<Grading, TableError> {
        Ok(grading_from_automorphisms(self.algebra.table(), &self.maps)?)
    }

    /// Torality through the zero component in f4; None on H3(F).
    pub fn toral(&self) -> Result<Option<ToralReport>, TableError> {
        Ok(match self.algebra {
            AlgebraKind::F4 => Some(f4_toral_report(&self.maps)?),
            AlgebraKind::Albert => Some(albert_toral_report(&self.maps)?),
            AlgebraKind::H3f => None,
        })
    }
}

/// Every accepted preset name, in a fixed order.
pub fn preset_names() -> Vec<String> {
    let mut out = vec!["cartan".to_string()];
    out.extend(CLASS_REPRESENTATIVES.iter().map(|j| format!("A{j}")));
    out.extend(MAIN_ROWS.iter().map(|s| s.to_string()));
    out.extend(ALBERT_PRESETS.iter().map(|s| s.to_string()));
    out.extend(H3F_PRESETS.iter().map(|s| s.to_string()));
    out
}

fn u_point(e: i64) -> TorusPoint {
    TorusPoint([CycNum::ONE, CycNum::ONE, CycNum::ONE, CycNum::zeta(e)])
}

fn named(mut f: AlgebraMap, name: &str) -> AlgebraMap {
    f.name = name.to_string();
    f
}

/// Generators of a row of the nontoral classification, with
/// g1 = t'_{-1,1,-1,1}, g2 = t'_{1,-1,-1,1}, g3 = sigma~_105, g4 = t'_{1,1,1,-1}.
pub fn main_row_maps(row: &str) -> Result<Option<Vec<AlgebraMap>>, TableError> {
    let id = TorusPoint::identity();
    let [g1, g2, g3, g4] = appendix_generators()?;
    let (g1, g2, g3, g4) = (named(g1, "g1"), named(g2, "g2"), named(g3, "g3"), named(g4, "g4"));
    let u = |e: i64, name: &str| named(u_point(e).map(), name);
    let maps = match row {
        "I" => quasitorus_a(15, &id)?,
        "II" => quasitorus_a(105, &id)?,
        "II.1" => vec![g1, g2, g3],
        "II.2" => vec![g1, g2, g3, g4],
        "II.3.1" => vec![g1, g2, g3, u(8, "t'(1,1,1,w)")],
        "II.3.2" => vec![g1, g2, g3, u(6, "t'(1,1,1,i)")],
        "II.4.1" => {
            let h = named(g3.compose(&u_point(6).map()), "g3 t'(1,1,1,i)");
            vec![g1, g2, h]
        }
        "II.4.2" => {
            let h = named(g3.compose(&u_point(3).map()), "g3 t'(1,1,1,z8)");
            vec![g1, g2, h]
        }
        "III" => quasitorus_a(405, &id)?,
        _ => return Ok(None),
    };
    Ok(Some(maps))
}

pub fn preset(name: &str) -> Result<Preset, TableError> {
    let make = |algebra, maps| Ok(Preset { name: name.to_string(), algebra, maps });
    if name == "cartan" {
        let maps = fixed_torus_generators(748)?.iter().map(TorusPoint::map).collect();
        return make(AlgebraKind::F4, maps);
    }
    if let Some(j) = name.strip_prefix('A').and_then(|s| s.parse::<usize>().ok()) {
        return make(AlgebraKind::F4, quasitorus_a(j, &TorusPoint::identity())?);
    }
    if let Some(maps) = main_row_maps(name)? {
        return make(AlgebraKind::F4, maps);
    }
    if ALBERT_PRESETS.contains(&name) {
        let p = albert_grading_presets()?.into_iter().find(|p| p.name == name).expect("listed preset");
        return make(AlgebraKind::Albert, p.automorphisms);
    }
    if let Some((_, maps)) = h3f_generators().into_iter().find(|(n, _)| *n == name) {
        let restricted = maps.iter().map(|m| restrict_to_h3f(m).expect("H3(F) is invariant")).collect();
        return make(AlgebraKind::H3f, restricted);
    }
    Err(TableError::UnknownPreset(name.to_string()))
}

/// Machine-readable description of a grading.
#[derive(Clone, Debug, Serialize)]
pub struct GradingReport {
    pub name: String,
    pub algebra: String,
    pub group: GroupReport,
    pub components: Vec<ComponentReport>,
    #[serde(rename = "type")]
    pub grading_type: Vec<usize>,
    pub toral: Option<bool>,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub free_rank: usize,
    pub factors: Vec<i64>,
    pub display: String,
}

impl From<&AbelianGroupDescriptor> for GroupReport {
    fn from(g: &AbelianGroupDescriptor) -> Self {
        GroupReport { free_rank: g.torus_rank, factors: g.invariant_factors.clone(), display: g.additive() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub label: String,
    pub dim: usize,
    /// Coefficient vectors in the algebra's basis, as exact scalars.
    pub basis: Vec<Vec<String>>,
}

impl GradingReport {
    pub fn build(p: &Preset) -> Result<GradingReport, TableError> {
        let g = p.grading()?;
        let group = g.universal_group(p.algebra.table())?;
        let components = g
            .components
            .iter()
            .map(|c| ComponentReport {
                label: c.label.to_string(),
                dim: c.dim(),
                basis: c.basis.iter().map(|v| v.iter().map(CycNum::to_string).collect()).collect(),
            })
            .collect();
        Ok(GradingReport {
            name: p.name.clone(),
            algebra: p.algebra.label().to_string(),
            group: GroupReport::from(&group),
            components,
            grading_type: g.grading_type().0,
            toral: p.toral()?.map(|r| r.toral),
            provenance: g.provenance.to_string(),
        })
    }

    /// Plain-text rendering: header lines and one line per component.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("grading {} on {}\n", self.name, self.algebra));
        out.push_str(&format!("group {}\n", self.group.display));
        let ty: Vec<String> = self.grading_type.iter().map(usize::to_string).collect();
        out.push_str(&format!("type ({})\n", ty.join(",")));
        let toral = match self.toral {
            Some(true) => "toral",
            Some(false) => "nontoral",
            None => "n/a",
        };
        out.push_str(&format!("torality {toral}\n"));
        out.push_str(&format!("provenance {}\n", self.provenance));
        for c in &self.components {
            out.push_str(&format!("  {} dim {}\n", c.label, c.dim));
        }
        out
    }
}

//! Bundled reference data: chemical elements (2003 snapshot), element
//! counts by year, standard-model particles, the four interactions and the
//! supersymmetric partner tables.
//!
//! The registry is loaded once and never mutated, so a shared reference can
//! be handed to any number of threads.

use std::fs;
use std::path::Path;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hadron::gluon_count;
use crate::repcore::HalfInt;

pub const ELEMENTS_CSV: &str = include_str!("../../data/elements.csv");
pub const ELEMENT_COUNTS_CSV: &str = include_str!("../../data/element_counts.csv");
pub const PARTICLES_CSV: &str = include_str!("../../data/particles.csv");
pub const INTERACTIONS_CSV: &str = include_str!("../../data/interactions.csv");
pub const SUPERPARTNERS_CSV: &str = include_str!("../../data/superpartners.csv");

pub const ELEMENTS_HEADER: &str = "Z,symbol,name,discovery_year,status";
pub const PARTICLES_HEADER: &str =
    "name,class,generation,two_spin,charge,massless,color_charged,discovery_year,predicted_year";
pub const INTERACTIONS_HEADER: &str = "name,relative_strength,range_cm,quanta,concern,manifestation";
pub const SUPERPARTNERS_HEADER: &str = "particle,partner,two_spin_particle,two_spin_partner";

/// Highest atomic number carried by the element snapshot.
pub const REGISTRY_ZMAX: u32 = 118;

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed {file}: {message}")]
    Malformed { file: &'static str, message: String },
    #[error("{file}: header must be exactly {expected:?}")]
    Header { file: &'static str, expected: &'static str },
    #[error("atomic number {0} outside 1..=118")]
    ZOutOfRange(u32),
    #[error("no element count tabulated for year {0}")]
    UntabulatedYear(i32),
    #[error("unknown particle {0:?}")]
    UnknownParticle(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementStatus {
    Named,
    NotNamed,
    NotObserved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    #[serde(rename = "Z")]
    pub z: u32,
    pub symbol: String,
    pub name: String,
    pub discovery_year: Option<i32>,
    pub status: ElementStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementCount {
    pub year: i32,
    pub count: u32,
    pub representative: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParticleClass {
    Fermion,
    GaugeBoson,
    Higgs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParticleRecord {
    pub name: String,
    pub class: ParticleClass,
    pub generation: Option<u8>,
    pub spin: HalfInt,
    #[serde(with = "crate::ratio")]
    pub charge: Rational64,
    pub massless: bool,
    pub color_charged: bool,
    pub discovery_year: Option<i32>,
    pub predicted_year: Option<i32>,
}

#[derive(Deserialize)]
struct ParticleRow {
    name: String,
    class: ParticleClass,
    generation: Option<u8>,
    two_spin: i32,
    #[serde(with = "crate::ratio")]
    charge: Rational64,
    massless: bool,
    color_charged: bool,
    discovery_year: Option<i32>,
    predicted_year: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InteractionRecord {
    pub name: String,
    pub relative_strength: f64,
    /// Range in centimetres; infinite for long-range forces.
    pub range_cm: f64,
    pub quanta: Vec<String>,
    pub concern: String,
    pub manifestation: String,
}

#[derive(Deserialize)]
struct InteractionRow {
    name: String,
    relative_strength: f64,
    range_cm: f64,
    quanta: String,
    concern: String,
    manifestation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperpartnerEntry {
    pub particle: String,
    pub partner: String,
    pub particle_spin: HalfInt,
    pub partner_spin: HalfInt,
}

#[derive(Deserialize)]
struct SuperpartnerRow {
    particle: String,
    partner: String,
    two_spin_particle: i32,
    two_spin_partner: i32,
}

/// Particle counts of the standard model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub fermions: u32,
    /// Spin-1 gauge bosons: 8 gluons, photon, W+, W-, Z0.
    pub sm_mediators: u32,
    /// Including the graviton.
    pub all_mediators: u32,
    pub higgs: u32,
}

#[derive(Clone, Debug)]
pub struct Registry {
    elements: Vec<ElementRecord>,
    counts: Vec<ElementCount>,
    particles: Vec<ParticleRecord>,
    interactions: Vec<InteractionRecord>,
    superpartners: Vec<SuperpartnerEntry>,
}

fn read_rows<T: serde::de::DeserializeOwned>(
    file: &'static str,
    text: &str,
    expected_header: Option<&'static str>,
) -> Result<Vec<T>, RegistryError> {
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    if let Some(expected) = expected_header {
        let header = reader.headers().map_err(|e| RegistryError::Malformed { file, message: e.to_string() })?;
        if header.iter().collect::<Vec<_>>().join(",") != expected {
            return Err(RegistryError::Header { file, expected });
        }
    }
    reader
        .deserialize()
        .collect::<Result<Vec<T>, _>>()
        .map_err(|e| RegistryError::Malformed { file, message: e.to_string() })
}

fn malformed(file: &'static str, message: impl Into<String>) -> RegistryError {
    RegistryError::Malformed { file, message: message.into() }
}

impl Registry {
    /// The datasets compiled into the binary.
    pub fn bundled() -> Self {
        Registry::from_sources(ELEMENTS_CSV, ELEMENT_COUNTS_CSV, PARTICLES_CSV, INTERACTIONS_CSV, SUPERPARTNERS_CSV)
            .expect("bundled datasets are valid")
    }

    /// Loads the five CSV files from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, RegistryError> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|source| RegistryError::Io { path: path.display().to_string(), source })
        };
        Registry::from_sources(
            &read("elements.csv")?,
            &read("element_counts.csv")?,
            &read("particles.csv")?,
            &read("interactions.csv")?,
            &read("superpartners.csv")?,
        )
    }

    pub fn from_sources(
        elements: &str,
        counts: &str,
        particles: &str,
        interactions: &str,
        superpartners: &str,
    ) -> Result<Self, RegistryError> {
        let elements: Vec<ElementRecord> = read_rows("elements.csv", elements, Some(ELEMENTS_HEADER))?;
        for (i, e) in elements.iter().enumerate() {
            if e.z != i as u32 + 1 {
                return Err(malformed("elements.csv", format!("expected Z={} on row {}, found {}", i + 1, i + 1, e.z)));
            }
        }
        if elements.len() != REGISTRY_ZMAX as usize {
            return Err(malformed("elements.csv", format!("expected {REGISTRY_ZMAX} rows, found {}", elements.len())));
        }

        let counts: Vec<ElementCount> = read_rows("element_counts.csv", counts, None)?;

        let particles = read_rows::<ParticleRow>("particles.csv", particles, Some(PARTICLES_HEADER))?
            .into_iter()
            .map(|r| ParticleRecord {
                name: r.name,
                class: r.class,
                generation: r.generation,
                spin: HalfInt::from_twice(r.two_spin),
                charge: r.charge,
                massless: r.massless,
                color_charged: r.color_charged,
                discovery_year: r.discovery_year,
                predicted_year: r.predicted_year,
            })
            .collect::<Vec<_>>();
        for p in &particles {
            let ok = match p.class {
                ParticleClass::Fermion => p.spin == HalfInt::HALF && p.generation.is_some_and(|g| (1..=3).contains(&g)),
                ParticleClass::GaugeBoson => {
                    p.spin == HalfInt::ONE || (p.name == "graviton" && p.spin == HalfInt::from_int(2))
                }
                ParticleClass::Higgs => p.spin == HalfInt::ZERO && p.charge == Rational64::from_integer(0),
            };
            if !ok {
                return Err(malformed(
                    "particles.csv",
                    format!("{} violates the spin/charge rule of its class", p.name),
                ));
            }
        }

        let interactions = read_rows::<InteractionRow>("interactions.csv", interactions, Some(INTERACTIONS_HEADER))?
            .into_iter()
            .map(|r| InteractionRecord {
                name: r.name,
                relative_strength: r.relative_strength,
                range_cm: r.range_cm,
                quanta: r.quanta.split(';').map(|q| q.trim().to_string()).collect(),
                concern: r.concern,
                manifestation: r.manifestation,
            })
            .collect::<Vec<_>>();
        if interactions.len() != 4 {
            return Err(malformed(
                "interactions.csv",
                format!("expected 4 interactions, found {}", interactions.len()),
            ));
        }

        let superpartners =
            read_rows::<SuperpartnerRow>("superpartners.csv", superpartners, Some(SUPERPARTNERS_HEADER))?
                .into_iter()
                .map(|r| SuperpartnerEntry {
                    particle: r.particle,
                    partner: r.partner,
                    particle_spin: HalfInt::from_twice(r.two_spin_particle),
                    partner_spin: HalfInt::from_twice(r.two_spin_partner),
                })
                .collect::<Vec<_>>();
        for s in &superpartners {
            let expected = match s.particle_spin.twice() {
                1 => 0,
                0 | 2 => 1,
                _ => -1,
            };
            if s.partner_spin.twice() != expected {
                return Err(malformed(
                    "superpartners.csv",
                    format!("{} -> {} breaks the spin-1/2 offset rule", s.particle, s.partner),
                ));
            }
        }

        Ok(Registry { elements, counts, particles, interactions, superpartners })
    }

    pub fn element(&self, z: u32) -> Result<&ElementRecord, RegistryError> {
        z.checked_sub(1).and_then(|i| self.elements.get(i as usize)).ok_or(RegistryError::ZOutOfRange(z))
    }

    pub fn elements(&self) -> &[ElementRecord] {
        &self.elements
    }

    /// Display label for a table cell: the symbol when the element is named,
    /// otherwise the bare atomic number.
    pub fn cell_label(&self, z: u32) -> String {
        match self.element(z) {
            Ok(e) if e.status == ElementStatus::Named => e.symbol.clone(),
            _ => z.to_string(),
        }
    }

    pub fn elements_known(&self, year: i32) -> Result<u32, RegistryError> {
        self.counts.iter().find(|c| c.year == year).map(|c| c.count).ok_or(RegistryError::UntabulatedYear(year))
    }

    pub fn element_counts(&self) -> &[ElementCount] {
        &self.counts
    }

    pub fn particles(&self) -> &[ParticleRecord] {
        &self.particles
    }

    pub fn particle(&self, name: &str) -> Option<&ParticleRecord> {
        self.particles.iter().find(|p| p.name.eq_ignore_ascii_case(name))
    }

    pub fn interactions(&self) -> &[InteractionRecord] {
        &self.interactions
    }

    pub fn superpartners(&self) -> &[SuperpartnerEntry] {
        &self.superpartners
    }

    /// Gauge bosons carrying colour stand for the whole colour octet.
    fn states(p: &ParticleRecord) -> u32 {
        if p.class == ParticleClass::GaugeBoson && p.color_charged {
            gluon_count(3)
        } else {
            1
        }
    }

    pub fn standard_model_census(&self) -> Census {
        let count = |f: &dyn Fn(&ParticleRecord) -> bool| -> u32 {
            self.particles.iter().filter(|p| f(p)).map(Registry::states).sum()
        };
        Census {
            fermions: count(&|p| p.class == ParticleClass::Fermion),
            sm_mediators: count(&|p| p.class == ParticleClass::GaugeBoson && p.spin == HalfInt::ONE),
            all_mediators: count(&|p| p.class == ParticleClass::GaugeBoson),
            higgs: count(&|p| p.class == ParticleClass::Higgs),
        }
    }

    pub fn superpartner(&self, name: &str) -> Result<&SuperpartnerEntry, RegistryError> {
        let name = name.trim();
        self.superpartners
            .iter()
            .find(|s| s.particle.eq_ignore_ascii_case(name) || s.partner.eq_ignore_ascii_case(name))
            .ok_or_else(|| RegistryError::UnknownParticle(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_lookups() {
        let r = Registry::bundled();
        let no = r.element(102).unwrap();
        assert_eq!((no.name.as_str(), no.discovery_year), ("Nobelium", Some(1958)));
        assert_eq!(r.element(113).unwrap().status, ElementStatus::NotObserved);
        assert_eq!(r.element(1).unwrap().name, "Hydrogen");
        assert!(matches!(r.element(0), Err(RegistryError::ZOutOfRange(0))));
        assert!(matches!(r.element(119), Err(RegistryError::ZOutOfRange(119))));
    }

    #[test]
    fn unnamed_elements_keep_slash_symbol() {
        let r = Registry::bundled();
        for z in [110, 111, 112, 114, 116] {
            let e = r.element(z).unwrap();
            assert_eq!((e.symbol.as_str(), e.status), ("/", ElementStatus::NotNamed));
            assert_eq!(r.cell_label(z), z.to_string());
        }
        assert_eq!(r.cell_label(26), "Fe");
        assert_eq!(r.cell_label(150), "150");
    }

    #[test]
    fn counts_by_year() {
        let r = Registry::bundled();
        assert_eq!(r.elements_known(1789).unwrap(), 23);
        assert_eq!(r.elements_known(1865).unwrap(), 63);
        assert_eq!(r.elements_known(2003).unwrap(), 114);
        assert!(matches!(r.elements_known(1900), Err(RegistryError::UntabulatedYear(1900))));
    }

    #[test]
    fn census() {
        let c = Registry::bundled().standard_model_census();
        assert_eq!(c, Census { fermions: 12, sm_mediators: 12, all_mediators: 13, higgs: 1 });
    }

    #[test]
    fn partners() {
        let r = Registry::bundled();
        let photon = r.superpartner("photon").unwrap();
        assert_eq!((photon.partner.as_str(), photon.partner_spin), ("photino", HalfInt::HALF));
        assert_eq!(r.superpartner("quark").unwrap().partner_spin, HalfInt::ZERO);
        assert_eq!(r.superpartner("Higgs").unwrap().partner, "higgsino");
        assert!(r.superpartner("axion").is_err());
    }

    #[test]
    fn header_is_checked() {
        let bad = ELEMENTS_CSV.replace("Z,symbol,name,discovery_year,status", "Z,sym,name,discovery_year,status");
        let err = Registry::from_sources(&bad, ELEMENT_COUNTS_CSV, PARTICLES_CSV, INTERACTIONS_CSV, SUPERPARTNERS_CSV);
        assert!(matches!(err, Err(RegistryError::Header { .. })));
    }

    #[test]
    fn spin_rule_is_checked() {
        let bad = SUPERPARTNERS_CSV.replace("photon,photino,2,1", "photon,photino,2,0");
        let err = Registry::from_sources(ELEMENTS_CSV, ELEMENT_COUNTS_CSV, PARTICLES_CSV, INTERACTIONS_CSV, &bad);
        assert!(matches!(err, Err(RegistryError::Malformed { .. })));
    }
}

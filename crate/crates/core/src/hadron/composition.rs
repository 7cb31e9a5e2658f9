use std::fmt;

use serde::Serialize;

use super::{HadronError, QuantumNumbers, QuarkFlavor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HadronShape {
    /// `qqq`
    Baryon,
    /// `q̄q̄q̄`
    AntiBaryon,
    /// `qq̄`
    Meson,
}

/// A legal bound state of quarks: `qqq`, `q̄q̄q̄` or `qq̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HadronComposition {
    shape: HadronShape,
    constituents: Vec<QuarkFlavor>,
}

impl HadronComposition {
    pub fn new(constituents: Vec<QuarkFlavor>) -> Result<Self, HadronError> {
        let antis = constituents.iter().filter(|q| q.antiparticle).count();
        let shape = match (constituents.len(), antis) {
            (3, 0) => HadronShape::Baryon,
            (3, 3) => HadronShape::AntiBaryon,
            (2, 1) => HadronShape::Meson,
            _ => {
                let names: Vec<&str> = constituents.iter().map(|q| q.name.as_str()).collect();
                return Err(HadronError::InvalidShape(names.join(" ")));
            }
        };
        Ok(HadronComposition { shape, constituents })
    }

    pub fn shape(&self) -> HadronShape {
        self.shape
    }

    pub fn constituents(&self) -> &[QuarkFlavor] {
        &self.constituents
    }
}

impl fmt::Display for HadronComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.constituents.iter().map(|q| q.name.as_str()).collect();
        f.write_str(&names.join(" "))
    }
}

/// Sums every additive quantum number over the constituents.
pub fn compose(c: &HadronComposition) -> QuantumNumbers {
    c.constituents.iter().fold(QuantumNumbers::zero(), |acc, q| acc + q.numbers)
}

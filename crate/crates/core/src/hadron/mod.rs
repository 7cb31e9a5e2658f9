//! Quark composition, colour wavefunctions and SU(3) flavour multiplets.

mod color;
mod composition;
mod multiplet;
mod quark;

pub use color::{color_wavefunction, format_wavefunction, Color, ColorFactor, ColorTerm};
pub use composition::{compose, HadronComposition, HadronShape};
pub use multiplet::{
    classify_multiplet, eka_predict, heisenberg_doublet, parse_members, Classification, IrrepMatch, IsospinDoublet,
    IsospinGroup, IsospinState, MassFit, MultipletMember, Prediction,
};
pub use quark::{gmn_check, QuantumNumbers, QuarkFlavor, QuarkTable, QUARKS_CSV, QUARKS_HEADER};

#[derive(Debug, thiserror::Error)]
pub enum HadronError {
    #[error("{0}")]
    Data(String),
    #[error("unknown quark flavor: {0}")]
    UnknownFlavor(String),
    #[error("not a qqq, q̄q̄q̄ or qq̄ state: {0}")]
    InvalidShape(String),
    #[error("invalid multiplet member: {0}")]
    BadMember(String),
    #[error("no members given")]
    EmptyMultiplet,
    #[error("members must share spin and parity ({0} differs)")]
    InconsistentSpinParity(String),
    #[error("{0} is not part of a complete isospin multiplet")]
    IncompleteIsospin(String),
    #[error("no SU(3) irrep matches isospin multiplets of sizes {0:?}")]
    NoMatchingIrrep(Vec<u64>),
    #[error("{0} has no free slot in the {1}")]
    MemberOutsideIrrep(String, String),
    #[error("the multiplet is already complete")]
    NoHole,
    #[error("{0} slots are empty, expected exactly one")]
    MultipleHoles(u32),
}

/// Gauge bosons of SU(n): `n^2 - 1`.
pub fn gluon_count(n: u32) -> u32 {
    n.pow(2).saturating_sub(1)
}

#[cfg(test)]
mod tests {
    #[test]
    fn gluons() {
        assert_eq!(super::gluon_count(3), 8);
        assert_eq!(super::gluon_count(2), 3);
        assert_eq!(super::gluon_count(1), 0);
    }
}

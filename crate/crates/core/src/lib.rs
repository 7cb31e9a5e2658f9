//! Exact group-theoretical reconstruction of two periodic tables: the
//! SO(4,2)xSU(2) table of chemical elements and the SU(3) flavor
//! classification of hadrons.

pub mod atomic;
pub mod hadron;
pub mod particles;
pub mod ratio;
pub mod repcore;

pub use atomic::{Address, Configuration, FillingRule, Layout, Shell, SubBlock, TableGrid};
pub use hadron::{HadronComposition, MultipletMember, QuarkFlavor, QuarkTable};
pub use particles::Registry;
pub use repcore::{HalfInt, So3Irrep, So4Irrep, Su2Irrep, Su3Irrep};

pub use num_rational::Rational64;

use thiserror::Error;

/// Any error raised by the engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Rep(#[from] repcore::RepError),
    #[error(transparent)]
    Atomic(#[from] atomic::AtomicError),
    #[error(transparent)]
    Hadron(#[from] hadron::HadronError),
    #[error(transparent)]
    Registry(#[from] particles::RegistryError),
}

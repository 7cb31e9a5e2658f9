//! Madelung-rule engine and the SO(4,2)xSU(2) periodic table: filling
//! rules, ground configurations, the bijection between atomic numbers and
//! `(n, l, j, m_j)` addresses, and table layouts.

mod address;
mod family;
pub mod render;
mod shell;
mod table;

use thiserror::Error;

pub use address::{
    address_to_z, block_of, block_start, period_ends, rare_gas_sequence, z_to_address, Address, BlockPosition, SubBlock,
};
pub use family::{family_report, FamilyReport, Series};
pub use shell::{
    ground_configuration, madelung_order, madelung_periods, madelung_shells, Configuration, ConfigurationEntry,
    FillingRule, Shell,
};
pub use table::{build_table, Cell, Layout, TableGrid};

/// Last atomic number handled: the period closing at the 9p shell.
pub const ZMAX: u32 = 218;

/// Last element of the known region (period 7).
pub const KNOWN_ZMAX: u32 = 118;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomicError {
    #[error("atomic number {0} outside 1..={ZMAX}")]
    ZOutOfRange(u32),
    #[error("invalid shell n={n}, l={l}")]
    InvalidShell { n: u32, l: u32 },
    #[error("invalid address {0}")]
    InvalidAddress(String),
    #[error("unknown filling rule {0:?} (expected madelung, enl or en)")]
    UnknownRule(String),
    #[error("unknown layout {0:?} (expected madelung, so42, scerri or conventional18)")]
    UnknownLayout(String),
}

pub(crate) fn check_z(z: u32) -> Result<(), AtomicError> {
    if (1..=ZMAX).contains(&z) {
        Ok(())
    } else {
        Err(AtomicError::ZOutOfRange(z))
    }
}

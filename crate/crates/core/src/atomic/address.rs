use std::fmt;

use serde::Serialize;

use super::shell::madelung_shells;
use super::{check_z, AtomicError, Shell, KNOWN_ZMAX};
use crate::repcore::HalfInt;

/// One box `(n, l, j, m_j)` of the SO(4,2)xSU(2) table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Address {
    pub n: u32,
    pub l: u32,
    pub j: HalfInt,
    pub mj: HalfInt,
}

impl Address {
    pub fn new(n: u32, l: u32, j: HalfInt, mj: HalfInt) -> Result<Self, AtomicError> {
        let bad = |reason: &str| AtomicError::InvalidAddress(format!("({n}, {l}, {j}, {mj}): {reason}"));
        Shell::new(n, l).map_err(|_| bad("need n >= 1 and 0 <= l <= n - 1"))?;
        let two_l = 2 * l as i32;
        if j.twice() != two_l + 1 && j.twice() != two_l - 1 {
            return Err(bad("j must be l - 1/2 or l + 1/2"));
        }
        if j.twice() < 1 {
            return Err(bad("j must be at least 1/2"));
        }
        if mj.is_integer() || mj.abs() > j {
            return Err(bad("m_j must be a half-odd value in [-j, j]"));
        }
        Ok(Address { n, l, j, mj })
    }

    /// Same as [`Address::new`] with `2j` and `2m_j` given as integers.
    pub fn from_twice(n: u32, l: u32, two_j: i32, two_mj: i32) -> Result<Self, AtomicError> {
        Address::new(n, l, HalfInt::from_twice(two_j), HalfInt::from_twice(two_mj))
    }

    pub fn shell(self) -> Shell {
        Shell::new_unchecked(self.n, self.l)
    }

    pub fn subblock(self) -> SubBlock {
        if self.l == 0 {
            SubBlock::Only
        } else if self.j.twice() == 2 * self.l as i32 - 1 {
            SubBlock::First
        } else {
            SubBlock::Second
        }
    }

    /// 0-based position inside the `[n + l, n]` entry.
    fn offset_in_block(self) -> u32 {
        let in_multiplet = ((self.mj + self.j).twice() / 2) as u32;
        match self.subblock() {
            SubBlock::Only | SubBlock::First => in_multiplet,
            SubBlock::Second => 2 * self.l + in_multiplet,
        }
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n, self.l, self.j, self.mj)
    }
}

/// Which SU(2) multiplet of an `[n + l, n]` entry a box belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SubBlock {
    /// `l = 0`: the single `j = 1/2` doublet.
    Only,
    /// `j = l - 1/2`, length `2l`.
    First,
    /// `j = l + 1/2`, length `2(l + 1)`.
    Second,
}

impl SubBlock {
    pub fn as_str(self) -> &'static str {
        match self {
            SubBlock::Only => "ONLY",
            SubBlock::First => "FIRST",
            SubBlock::Second => "SECOND",
        }
    }

    pub fn length(self, l: u32) -> u32 {
        match self {
            SubBlock::Only => 2,
            SubBlock::First => 2 * l,
            SubBlock::Second => 2 * (l + 1),
        }
    }
}

impl fmt::Display for SubBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First atomic number of the entry `[n + l, n]` owned by `shell`.
pub fn block_start(shell: Shell) -> u32 {
    let mut start = 1;
    for s in madelung_shells() {
        if s == shell {
            return start;
        }
        start += s.degeneracy();
    }
    unreachable!("every shell appears in the Madelung sequence")
}

/// The shell owning `z` and the first `z` of that shell.
fn locate(z: u32) -> (Shell, u32) {
    let mut start = 1;
    for shell in madelung_shells() {
        if z < start + shell.degeneracy() {
            return (shell, start);
        }
        start += shell.degeneracy();
    }
    unreachable!()
}

/// Atomic number to table address. Entries are taken in `(n + l, n)` order;
/// inside an entry the `j = l - 1/2` multiplet precedes `j = l + 1/2`, and
/// `m_j` runs from `-j` to `+j`.
pub fn z_to_address(z: u32) -> Result<Address, AtomicError> {
    check_z(z)?;
    let (shell, start) = locate(z);
    let (n, l) = (shell.n(), shell.l());
    let offset = (z - start) as i32;
    let (two_j, k) = if l == 0 {
        (1, offset)
    } else if offset < 2 * l as i32 {
        (2 * l as i32 - 1, offset)
    } else {
        (2 * l as i32 + 1, offset - 2 * l as i32)
    };
    Ok(Address { n, l, j: HalfInt::from_twice(two_j), mj: HalfInt::from_twice(-two_j + 2 * k) })
}

/// Inverse of [`z_to_address`]. Defined for every valid address, including
/// ones past the supported `Z` range.
pub fn address_to_z(a: Address) -> Result<u32, AtomicError> {
    let a = Address::new(a.n, a.l, a.j, a.mj)?;
    Ok(block_start(a.shell()) + a.offset_in_block())
}

/// Where `z` sits inside its `[n + l, n]` entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPosition {
    pub shell: Shell,
    pub subblock: SubBlock,
    /// 1-based position inside the sub-block.
    pub position: u32,
    pub length: u32,
}

pub fn block_of(z: u32) -> Result<BlockPosition, AtomicError> {
    let a = z_to_address(z)?;
    let subblock = a.subblock();
    Ok(BlockPosition {
        shell: a.shell(),
        subblock,
        position: ((a.mj + a.j).twice() / 2) as u32 + 1,
        length: subblock.length(a.l),
    })
}

/// Atomic numbers closing each Madelung period, up to `zmax`.
pub fn period_ends(zmax: u32) -> Vec<u32> {
    let mut total = 0;
    let mut out = Vec::new();
    for shell in madelung_shells() {
        if shell.l() == 0 && total > 0 {
            out.push(total);
        }
        total += shell.degeneracy();
        if total > zmax {
            return out;
        }
    }
    unreachable!("the shell sequence is infinite")
}

/// Rare-gas atomic numbers through element 118.
pub fn rare_gas_sequence() -> Vec<u32> {
    period_ends(KNOWN_ZMAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn addr(n: u32, l: u32, two_j: i32, two_mj: i32) -> Address {
        Address::from_twice(n, l, two_j, two_mj).unwrap()
    }

    #[test]
    fn landmarks() {
        assert_eq!(z_to_address(1).unwrap(), addr(1, 0, 1, -1));
        assert_eq!(z_to_address(57).unwrap(), addr(4, 3, 5, -5));
        assert_eq!(z_to_address(120).unwrap(), addr(8, 0, 1, 1));
        assert_eq!(address_to_z(addr(1, 0, 1, 1)).unwrap(), 2);
        assert_eq!(address_to_z(addr(4, 3, 7, -7)).unwrap(), 63);
        assert_eq!(address_to_z(addr(9, 0, 1, -1)).unwrap(), 169);
    }

    #[test]
    fn invalid_addresses() {
        assert!(Address::from_twice(1, 1, 1, 1).is_err()); // l >= n
        assert!(Address::from_twice(2, 0, 3, 1).is_err()); // s shells only carry j = 1/2
        assert!(Address::from_twice(2, 1, 3, 2).is_err()); // integer m_j
        assert!(Address::from_twice(2, 1, 1, 3).is_err()); // |m_j| > j
        assert!(Address::from_twice(3, 2, 1, 1).is_err()); // j = l - 3/2
    }

    #[test]
    fn blocks() {
        let b = block_of(62).unwrap();
        assert_eq!((b.shell.to_string(), b.subblock, b.position, b.length), ("4f".into(), SubBlock::First, 6, 6));
        let b = block_of(71).unwrap();
        assert_eq!((b.shell.to_string(), b.subblock, b.position, b.length), ("5d".into(), SubBlock::First, 1, 4));
        let b = block_of(2).unwrap();
        assert_eq!((b.shell.to_string(), b.subblock, b.position, b.length), ("1s".into(), SubBlock::Only, 2, 2));
        assert!(block_of(0).is_err());
        assert!(block_of(219).is_err());
    }

    #[test]
    fn rare_gases() {
        assert_eq!(rare_gas_sequence(), vec![2, 10, 18, 36, 54, 86, 118]);
        assert_eq!(period_ends(218), vec![2, 10, 18, 36, 54, 86, 118, 168, 218]);
    }
}

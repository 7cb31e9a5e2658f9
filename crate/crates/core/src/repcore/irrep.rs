use std::fmt;

use serde::{Deserialize, Serialize};

use super::{HalfInt, RepError};

/// SU(2) irrep `(j)` of dimension `2j + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Su2Irrep {
    j: HalfInt,
}

impl Su2Irrep {
    pub fn new(j: HalfInt) -> Result<Self, RepError> {
        if j.is_negative() {
            return Err(RepError::NegativeLabel(j));
        }
        Ok(Su2Irrep { j })
    }

    pub fn from_twice(twice_j: u32) -> Self {
        Su2Irrep { j: HalfInt::from_twice(twice_j as i32) }
    }

    pub fn j(self) -> HalfInt {
        self.j
    }

    pub fn dim(self) -> u64 {
        self.j.multiplicity()
    }
}

impl fmt::Display for Su2Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.j)
    }
}

/// SO(3) irrep `(l)` of dimension `2l + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct So3Irrep {
    pub l: u32,
}

impl So3Irrep {
    pub fn new(l: u32) -> Self {
        So3Irrep { l }
    }

    pub fn dim(self) -> u64 {
        2 * u64::from(self.l) + 1
    }
}

impl fmt::Display for So3Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.l)
    }
}

/// SO(4) irrep `(j1, j2)` of dimension `(2j1 + 1)(2j2 + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct So4Irrep {
    j1: HalfInt,
    j2: HalfInt,
}

impl So4Irrep {
    pub fn new(j1: HalfInt, j2: HalfInt) -> Result<Self, RepError> {
        for j in [j1, j2] {
            if j.is_negative() {
                return Err(RepError::NegativeLabel(j));
            }
        }
        Ok(So4Irrep { j1, j2 })
    }

    /// The diagonal irrep `(j, j)` with `2j = twice_j`.
    pub fn diagonal(twice_j: u32) -> Self {
        let j = HalfInt::from_twice(twice_j as i32);
        So4Irrep { j1: j, j2: j }
    }

    pub fn j1(self) -> HalfInt {
        self.j1
    }

    pub fn j2(self) -> HalfInt {
        self.j2
    }

    pub fn is_diagonal(self) -> bool {
        self.j1 == self.j2
    }

    pub fn dim(self) -> u64 {
        self.j1.multiplicity() * self.j2.multiplicity()
    }
}

impl fmt::Display for So4Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.j1, self.j2)
    }
}

/// SU(3) irrep `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Su3Irrep {
    pub p: u32,
    pub q: u32,
}

impl Su3Irrep {
    pub const SINGLET: Su3Irrep = Su3Irrep { p: 0, q: 0 };
    pub const TRIPLET: Su3Irrep = Su3Irrep { p: 1, q: 0 };
    pub const ANTITRIPLET: Su3Irrep = Su3Irrep { p: 0, q: 1 };
    pub const OCTET: Su3Irrep = Su3Irrep { p: 1, q: 1 };
    pub const DECUPLET: Su3Irrep = Su3Irrep { p: 3, q: 0 };
    pub const ANTIDECUPLET: Su3Irrep = Su3Irrep { p: 0, q: 3 };

    pub fn new(p: u32, q: u32) -> Self {
        Su3Irrep { p, q }
    }

    pub fn dim(self) -> u64 {
        super::su3_dim(self.p, self.q)
    }

    pub fn conjugate(self) -> Self {
        Su3Irrep { p: self.q, q: self.p }
    }

    /// Dimension-based name, starred for `p < q` (`3*`, `10*`).
    pub fn name(self) -> String {
        if self.p < self.q {
            format!("{}*", self.dim())
        } else {
            self.dim().to_string()
        }
    }
}

impl fmt::Display for Su3Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Splits a diagonal SO(4) irrep `(j, j)` into SO(3) irreps `(0) + (1) + ... + (2j)`.
pub fn so4_branch(rep: So4Irrep) -> Result<Vec<So3Irrep>, RepError> {
    if !rep.is_diagonal() {
        return Err(RepError::NotDiagonal(rep.j1, rep.j2));
    }
    let top = rep.j1.twice() as u32;
    Ok((0..=top).map(So3Irrep::new).collect())
}

/// The first `nmax` SO(4) pieces `(j, j)`, `2j + 1 = 1..=nmax`, of the
/// SO(4,2) representation carrying the bound hydrogen-like states.
pub fn so42_h_truncated(nmax: u32) -> Result<Vec<So4Irrep>, RepError> {
    if nmax == 0 {
        return Err(RepError::EmptyTruncation);
    }
    Ok((0..nmax).map(So4Irrep::diagonal).collect())
}

/// Total dimension of [`so42_h_truncated`], i.e. `sum_{n <= nmax} n^2`.
pub fn so42_h_dimension(nmax: u32) -> Result<u64, RepError> {
    Ok(so42_h_truncated(nmax)?.into_iter().map(So4Irrep::dim).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_examples() {
        assert_eq!(so4_branch(So4Irrep::diagonal(0)).unwrap(), vec![So3Irrep::new(0)]);
        assert_eq!(so4_branch(So4Irrep::diagonal(1)).unwrap(), vec![So3Irrep::new(0), So3Irrep::new(1)]);
        let b = so4_branch(So4Irrep::diagonal(2)).unwrap();
        assert_eq!(b.iter().map(|r| r.l).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(b.iter().map(|r| r.dim()).sum::<u64>(), 9);
    }

    #[test]
    fn branch_rejects_off_diagonal() {
        let rep = So4Irrep::new(HalfInt::HALF, HalfInt::ZERO).unwrap();
        assert_eq!(so4_branch(rep), Err(RepError::NotDiagonal(HalfInt::HALF, HalfInt::ZERO)));
    }

    #[test]
    fn negative_labels_rejected() {
        assert!(Su2Irrep::new(HalfInt::from_twice(-1)).is_err());
        assert!(So4Irrep::new(HalfInt::ZERO, HalfInt::from_twice(-2)).is_err());
    }

    #[test]
    fn truncated_h() {
        assert_eq!(so42_h_truncated(0), Err(RepError::EmptyTruncation));
        assert_eq!(so42_h_truncated(1).unwrap(), vec![So4Irrep::diagonal(0)]);
        let three = so42_h_truncated(3).unwrap();
        assert_eq!(three, vec![So4Irrep::diagonal(0), So4Irrep::diagonal(1), So4Irrep::diagonal(2)]);
        assert_eq!(so42_h_dimension(3).unwrap(), 14);
        assert_eq!(so42_h_dimension(5).unwrap(), 55);
    }

    #[test]
    fn names() {
        assert_eq!(Su3Irrep::ANTIDECUPLET.name(), "10*");
        assert_eq!(Su3Irrep::OCTET.name(), "8");
        assert_eq!(Su3Irrep::ANTITRIPLET.name(), "3*");
    }
}

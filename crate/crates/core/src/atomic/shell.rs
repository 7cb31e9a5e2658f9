use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{check_z, AtomicError};

const LETTERS: &[u8] = b"spdfghiklmnoqrtuvwxyz";

/// A one-electron shell `nl`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shell {
    n: u32,
    l: u32,
}

impl Shell {
    pub fn new(n: u32, l: u32) -> Result<Self, AtomicError> {
        if n == 0 || l >= n {
            return Err(AtomicError::InvalidShell { n, l });
        }
        Ok(Shell { n, l })
    }

    pub(crate) const fn new_unchecked(n: u32, l: u32) -> Self {
        Shell { n, l }
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn l(self) -> u32 {
        self.l
    }

    /// Pauli capacity `2(2l + 1)`.
    pub fn degeneracy(self) -> u32 {
        2 * (2 * self.l + 1)
    }

    /// The skeleton entry `[n + l, n]`.
    pub fn block_key(self) -> (u32, u32) {
        (self.n + self.l, self.n)
    }

    pub fn letter(self) -> char {
        LETTERS.get(self.l as usize).map_or('?', |&b| b as char)
    }
}

impl fmt::Display for Shell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.n, self.letter())
    }
}

impl Serialize for Shell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Orderings of one-electron energies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FillingRule {
    /// Energy grows with `n` only (hydrogen-like); ties go to smaller `l`.
    En,
    /// Energy grows with `n`, then with `l`.
    Enl,
    /// Energy grows with `n + l`, then with `n`.
    Madelung,
}

impl FillingRule {
    pub fn key(self, shell: Shell) -> (u32, u32) {
        match self {
            FillingRule::En | FillingRule::Enl => (shell.n, shell.l),
            FillingRule::Madelung => shell.block_key(),
        }
    }

    /// All shells in this rule's energy order.
    pub fn shells(self) -> Box<dyn Iterator<Item = Shell>> {
        match self {
            FillingRule::En | FillingRule::Enl => {
                Box::new((1..).flat_map(|n| (0..n).map(move |l| Shell::new_unchecked(n, l))))
            }
            FillingRule::Madelung => Box::new(madelung_shells()),
        }
    }
}

impl FromStr for FillingRule {
    type Err = AtomicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "en" => Ok(FillingRule::En),
            "enl" => Ok(FillingRule::Enl),
            "madelung" | "en+l" => Ok(FillingRule::Madelung),
            _ => Err(AtomicError::UnknownRule(s.to_string())),
        }
    }
}

impl fmt::Display for FillingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FillingRule::En => "en",
            FillingRule::Enl => "enl",
            FillingRule::Madelung => "madelung",
        })
    }
}

/// Shells in `(n + l, n)` dictionary order: 1s, 2s, 2p, 3s, 3p, 4s, 3d, ...
pub fn madelung_shells() -> impl Iterator<Item = Shell> {
    // l <= n - 1 forces n >= (sum + 1) / 2, rounded up.
    (1u32..).flat_map(|sum| ((sum + 2) / 2..=sum).map(move |n| Shell::new_unchecked(n, sum - n)))
}

/// The first `k` shells under the Madelung rule.
pub fn madelung_order(k: usize) -> Vec<Shell> {
    madelung_shells().take(k).collect()
}

/// Shells grouped into periods: a new group starts at every `s` shell.
pub fn madelung_periods(count: usize) -> Vec<Vec<Shell>> {
    let mut periods: Vec<Vec<Shell>> = Vec::new();
    for shell in madelung_shells() {
        if shell.l == 0 {
            if periods.len() == count {
                break;
            }
            periods.push(Vec::new());
        }
        periods.last_mut().expect("first shell is 1s").push(shell);
    }
    periods
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationEntry {
    pub shell: Shell,
    pub occupancy: u32,
}

/// A ground configuration: shells in filling order with their occupancies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub rule: FillingRule,
    pub entries: Vec<ConfigurationEntry>,
}

impl Configuration {
    pub fn electrons(&self) -> u32 {
        self.entries.iter().map(|e| e.occupancy).sum()
    }

    pub fn last(&self) -> Option<&ConfigurationEntry> {
        self.entries.last()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", e.shell, e.occupancy)?;
        }
        Ok(())
    }
}

/// Fills `z` electrons into shells in `rule` order, each up to `2(2l + 1)`.
pub fn ground_configuration(z: u32, rule: FillingRule) -> Result<Configuration, AtomicError> {
    check_z(z)?;
    let mut left = z;
    let mut entries = Vec::new();
    for shell in rule.shells() {
        if left == 0 {
            break;
        }
        let occupancy = left.min(shell.degeneracy());
        entries.push(ConfigurationEntry { shell, occupancy });
        left -= occupancy;
    }
    Ok(Configuration { rule, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(shells: &[Shell]) -> Vec<String> {
        shells.iter().map(Shell::to_string).collect()
    }

    #[test]
    fn shell_validation() {
        assert!(Shell::new(0, 0).is_err());
        assert!(Shell::new(2, 2).is_err());
        assert_eq!(Shell::new(4, 3).unwrap().to_string(), "4f");
        assert_eq!(Shell::new(5, 4).unwrap().to_string(), "5g");
        assert_eq!(Shell::new(4, 3).unwrap().degeneracy(), 14);
    }

    #[test]
    fn madelung_prefixes() {
        assert_eq!(names(&madelung_order(1)), ["1s"]);
        assert_eq!(names(&madelung_order(4)), ["1s", "2s", "2p", "3s"]);
        assert_eq!(names(&madelung_order(8))[5..], ["4s", "3d", "4p"]);
        assert!(madelung_order(0).is_empty());
    }

    #[test]
    fn configurations_at_nineteen() {
        let m = ground_configuration(19, FillingRule::Madelung).unwrap();
        assert_eq!(m.to_string(), "1s2 2s2 2p6 3s2 3p6 4s1");
        let e = ground_configuration(19, FillingRule::Enl).unwrap();
        assert_eq!(e.to_string(), "1s2 2s2 2p6 3s2 3p6 3d1");
        assert_eq!(ground_configuration(1, FillingRule::En).unwrap().to_string(), "1s1");
    }

    #[test]
    fn z_range_enforced() {
        assert!(ground_configuration(0, FillingRule::Madelung).is_err());
        assert!(ground_configuration(219, FillingRule::Madelung).is_err());
        assert_eq!(ground_configuration(218, FillingRule::En).unwrap().electrons(), 218);
    }

    #[test]
    fn rule_parsing() {
        assert_eq!("ENL".parse::<FillingRule>().unwrap(), FillingRule::Enl);
        assert!("aufbau".parse::<FillingRule>().is_err());
    }
}

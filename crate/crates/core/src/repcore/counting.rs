use serde::{Deserialize, Serialize};

use super::RepError;

/// Order (number of generators), rank and number of Casimir operators of a
/// Lie group. The Casimir count is supplied data, not derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupProfile {
    pub name: String,
    pub order: u32,
    pub rank: u32,
    pub n_casimirs: u32,
}

impl GroupProfile {
    pub fn new(name: impl Into<String>, order: u32, rank: u32, n_casimirs: u32) -> Result<Self, RepError> {
        let name = name.into();
        if rank == 0 || order == 0 {
            return Err(RepError::InvalidProfile(format!("{name}: order and rank must be positive")));
        }
        if order < rank {
            return Err(RepError::InvalidProfile(format!("{name}: order {order} < rank {rank}")));
        }
        Ok(GroupProfile { name, order, rank, n_casimirs })
    }

    pub fn su2() -> Self {
        GroupProfile { name: "SU(2)".into(), order: 3, rank: 1, n_casimirs: 1 }
    }

    pub fn su3() -> Self {
        GroupProfile { name: "SU(3)".into(), order: 8, rank: 2, n_casimirs: 2 }
    }

    /// The conformal group, locally SU(2,2): 15 generators, rank 3, 3 Casimirs.
    pub fn so42() -> Self {
        GroupProfile { name: "SO(4,2)".into(), order: 15, rank: 3, n_casimirs: 3 }
    }
}

/// Racah's count of extra labelling operators, `(order - 3 rank) / 2`.
pub fn racah_missing_labels(g: &GroupProfile) -> Result<u32, RepError> {
    let undefined = || RepError::RacahUndefined { order: g.order, rank: g.rank };
    let numerator = g.order.checked_sub(3 * g.rank).ok_or_else(undefined)?;
    if numerator % 2 != 0 {
        return Err(undefined());
    }
    Ok(numerator / 2)
}

/// Size of a complete set of commuting operators: Cartan generators,
/// Casimirs and the Racah missing labels.
pub fn complete_set_size(g: &GroupProfile) -> Result<u32, RepError> {
    Ok(g.rank + g.n_casimirs + racah_missing_labels(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_profiles() {
        assert_eq!(racah_missing_labels(&GroupProfile::so42()), Ok(3));
        assert_eq!(racah_missing_labels(&GroupProfile::su2()), Ok(0));
        assert_eq!(racah_missing_labels(&GroupProfile::su3()), Ok(1));
        assert_eq!(complete_set_size(&GroupProfile::so42()), Ok(9));
        assert_eq!(complete_set_size(&GroupProfile::su2()), Ok(2));
        assert_eq!(complete_set_size(&GroupProfile::su3()), Ok(5));
    }

    #[test]
    fn undefined_counts() {
        // order - 3 rank = 3
        let odd = GroupProfile::new("odd", 6, 1, 1).unwrap();
        assert!(matches!(racah_missing_labels(&odd), Err(RepError::RacahUndefined { .. })));
        let negative = GroupProfile::new("u1", 1, 1, 1).unwrap();
        assert!(matches!(complete_set_size(&negative), Err(RepError::RacahUndefined { .. })));
    }

    #[test]
    fn invalid_profiles() {
        assert!(GroupProfile::new("bad", 2, 3, 0).is_err());
        assert!(GroupProfile::new("bad", 0, 0, 0).is_err());
    }
}

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::HadronError;
use crate::repcore::{su3_isospin_multiplets, HalfInt, Su3Irrep, WeightDiagram};

/// A hadron as given to the classifier.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultipletMember {
    pub label: String,
    #[serde(rename = "Q", with = "crate::ratio")]
    pub charge: Rational64,
    #[serde(rename = "S")]
    pub strangeness: i32,
    pub two_spin: u32,
    pub parity: i8,
    /// MeV/c^2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
}

impl MultipletMember {
    pub fn spin(&self) -> HalfInt {
        HalfInt::from_twice(self.two_spin as i32)
    }

    /// Half-odd spin means a baryon (B = 1), integer spin a meson (B = 0).
    pub fn baryon_number(&self) -> i32 {
        i32::from(self.two_spin % 2 == 1)
    }

    pub fn hypercharge(&self) -> Rational64 {
        Rational64::from_integer(i64::from(self.baryon_number() + self.strangeness))
    }

    /// `(2 I3, 3 Y)` with `I3 = Q - Y/2`.
    fn slot(&self) -> Result<(i32, i32), HadronError> {
        let y = self.hypercharge();
        let twice_i3 = (self.charge - y / 2) * 2;
        if !twice_i3.is_integer() {
            return Err(HadronError::BadMember(format!("{}: Q - Y/2 is not a half-integer", self.label)));
        }
        Ok((*twice_i3.numer() as i32, 3 * *y.numer() as i32))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MemberFile {
    List(Vec<MultipletMember>),
    Wrapped { members: Vec<MultipletMember> },
}

/// Reads a JSON member list, bare or wrapped as `{"members": [...]}`.
pub fn parse_members(json: &str) -> Result<Vec<MultipletMember>, HadronError> {
    let file: MemberFile = serde_json::from_str(json).map_err(|e| HadronError::Data(e.to_string()))?;
    let members = match file {
        MemberFile::List(m) | MemberFile::Wrapped { members: m } => m,
    };
    for m in &members {
        if m.parity != 1 && m.parity != -1 {
            return Err(HadronError::BadMember(format!("{}: parity must be +1 or -1", m.label)));
        }
        if m.mass.is_some_and(|x| x.is_nan() || x <= 0.0) {
            return Err(HadronError::BadMember(format!("{}: mass must be positive", m.label)));
        }
    }
    Ok(members)
}

fn common_spin_parity(members: &[MultipletMember]) -> Result<(HalfInt, i8), HadronError> {
    let first = members.first().ok_or(HadronError::EmptyMultiplet)?;
    if let Some(odd) = members.iter().find(|m| m.two_spin != first.two_spin || m.parity != first.parity) {
        return Err(HadronError::InconsistentSpinParity(odd.label.clone()));
    }
    Ok((first.spin(), first.parity))
}

/// An SU(2) multiplet found among the members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsospinGroup {
    pub isospin: HalfInt,
    #[serde(with = "crate::ratio")]
    pub hypercharge: Rational64,
    pub strangeness: i32,
    /// Labels ordered by increasing `I3`.
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepMatch {
    pub name: String,
    pub components: Vec<Su3Irrep>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub spin: HalfInt,
    pub parity: i8,
    pub baryon_number: i32,
    pub multiplets: Vec<IsospinGroup>,
    /// SU(2) multiplet sizes, largest first.
    pub sizes: Vec<u64>,
    pub matches: Vec<IrrepMatch>,
}

fn candidates() -> Vec<(&'static str, Vec<Su3Irrep>)> {
    vec![
        ("1", vec![Su3Irrep::SINGLET]),
        ("3", vec![Su3Irrep::TRIPLET]),
        ("3*", vec![Su3Irrep::ANTITRIPLET]),
        ("8", vec![Su3Irrep::OCTET]),
        ("10", vec![Su3Irrep::DECUPLET]),
        ("10*", vec![Su3Irrep::ANTIDECUPLET]),
        ("8+1", vec![Su3Irrep::OCTET, Su3Irrep::SINGLET]),
    ]
}

/// Sorted `(2I, 3Y)` content of a direct sum of irreps.
fn isospin_content(components: &[Su3Irrep]) -> Vec<(i32, i32)> {
    let mut v: Vec<(i32, i32)> = components
        .iter()
        .flat_map(|&rep| su3_isospin_multiplets(rep))
        .map(|m| (m.isospin.j().twice(), m.three_y))
        .collect();
    v.sort_unstable();
    v
}

/// Groups the members into isospin multiplets (equal strangeness, a full run
/// of `I3` from `-I` to `+I`) and names the SU(3) irreps, or sums of irreps,
/// whose isospin and hypercharge content they fill exactly.
///
/// Spin-flavour counting of the SU(6) supermultiplets follows from the
/// dimensions alone:
///
/// ```
/// use symmetry_atlas::repcore::su3_dim;
/// // pseudoscalar (spin 0) and vector (spin 1) nonets
/// assert_eq!((su3_dim(1, 1) + su3_dim(0, 0)) + 3 * (su3_dim(1, 1) + su3_dim(0, 0)), 36);
/// // spin-1/2 octet and spin-3/2 decuplet
/// assert_eq!(2 * su3_dim(1, 1) + 4 * su3_dim(3, 0), 56);
/// ```
pub fn classify_multiplet(members: &[MultipletMember]) -> Result<Classification, HadronError> {
    let (spin, parity) = common_spin_parity(members)?;
    let baryon_number = members[0].baryon_number();

    // 3Y -> 2I3 -> member indices, in input order
    let mut layers: BTreeMap<i32, BTreeMap<i32, Vec<usize>>> = BTreeMap::new();
    for (i, m) in members.iter().enumerate() {
        let (twice_i3, three_y) = m.slot()?;
        layers.entry(three_y).or_default().entry(twice_i3).or_default().push(i);
    }

    let mut multiplets = Vec::new();
    for (three_y, mut layer) in layers.into_iter().rev() {
        while let Some(top) = layer.iter().rev().find(|(_, v)| !v.is_empty()).map(|(&t, _)| t) {
            let top_label = &members[layer[&top][0]].label;
            if top < 0 {
                return Err(HadronError::IncompleteIsospin(top_label.clone()));
            }
            let mut labels = Vec::new();
            for t in (-top..=top).step_by(2) {
                let slot = layer
                    .get_mut(&t)
                    .filter(|v| !v.is_empty())
                    .ok_or_else(|| HadronError::IncompleteIsospin(top_label.clone()))?;
                labels.push(members[slot.remove(0)].label.clone());
            }
            let hypercharge = Rational64::new(i64::from(three_y), 3);
            multiplets.push(IsospinGroup {
                isospin: HalfInt::from_twice(top),
                hypercharge,
                strangeness: (hypercharge - baryon_number as i64).to_integer() as i32,
                members: labels,
            });
        }
    }

    let mut found: Vec<(i32, i32)> =
        multiplets.iter().map(|g| (g.isospin.twice(), (g.hypercharge * 3).to_integer() as i32)).collect();
    found.sort_unstable();
    let mut sizes: Vec<u64> = multiplets.iter().map(|g| g.isospin.multiplicity()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));

    let matches: Vec<IrrepMatch> = candidates()
        .into_iter()
        .filter(|(_, comps)| isospin_content(comps) == found)
        .map(|(name, components)| IrrepMatch {
            name: name.to_string(),
            dim: components.iter().map(|r| r.dim()).sum(),
            components,
        })
        .collect();
    if matches.is_empty() {
        return Err(HadronError::NoMatchingIrrep(sizes));
    }
    Ok(Classification { spin, parity, baryon_number, multiplets, sizes, matches })
}

/// Least-squares line `m = intercept + slope * Y` through the Y-layer means.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MassFit {
    pub intercept: f64,
    pub slope: f64,
    /// `(Y, mean mass)` per layer.
    pub layers: Vec<(String, f64)>,
}

impl MassFit {
    pub fn at(&self, y: Rational64) -> f64 {
        self.intercept + self.slope * (*y.numer() as f64 / *y.denom() as f64)
    }
}

fn fit_masses(members: &[MultipletMember]) -> Option<MassFit> {
    let mut layers: BTreeMap<Rational64, (f64, u32)> = BTreeMap::new();
    for m in members {
        if let Some(mass) = m.mass {
            let e = layers.entry(m.hypercharge()).or_insert((0.0, 0));
            e.0 += mass;
            e.1 += 1;
        }
    }
    if layers.len() < 2 {
        return None;
    }
    let points: Vec<(f64, f64)> =
        layers.iter().map(|(y, (sum, n))| (*y.numer() as f64 / *y.denom() as f64, sum / f64::from(*n))).collect();
    let k = points.len() as f64;
    let y_bar = points.iter().map(|p| p.0).sum::<f64>() / k;
    let m_bar = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|(y, m)| (y - y_bar) * (m - m_bar)).sum();
    let sxx: f64 = points.iter().map(|(y, _)| (y - y_bar).powi(2)).sum();
    let slope = sxy / sxx;
    Some(MassFit {
        intercept: m_bar - slope * y_bar,
        slope,
        layers: layers.iter().zip(&points).map(|((y, _), (_, mean))| (crate::ratio::format(*y), *mean)).collect(),
    })
}

/// The member an irrep is missing, reconstructed from the empty slot.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prediction {
    pub irrep: Su3Irrep,
    #[serde(rename = "I3")]
    pub isospin_z: HalfInt,
    #[serde(rename = "Y", with = "crate::ratio")]
    pub hypercharge: Rational64,
    #[serde(rename = "Q", with = "crate::ratio")]
    pub charge: Rational64,
    #[serde(rename = "S")]
    pub strangeness: i32,
    pub spin: HalfInt,
    pub parity: i8,
    /// MeV/c^2, when at least two hypercharge layers carry masses.
    pub mass: Option<f64>,
    pub fit: Option<MassFit>,
}

/// Finds the single empty `(I3, Y)` slot of `irrep` left by `members` and
/// predicts its charge, strangeness and (if possible) mass.
pub fn eka_predict(irrep: Su3Irrep, members: &[MultipletMember]) -> Result<Prediction, HadronError> {
    let (spin, parity) = common_spin_parity(members)?;
    let baryon_number = members[0].baryon_number();
    let diagram = WeightDiagram::new(irrep);
    let mut free: BTreeMap<(i32, i32), u32> = diagram.iter().map(|(w, m)| ((w.twice_i3, w.three_y), m)).collect();
    for m in members {
        let slot = m.slot()?;
        match free.get_mut(&slot) {
            Some(n) if *n > 0 => *n -= 1,
            _ => return Err(HadronError::MemberOutsideIrrep(m.label.clone(), irrep.name())),
        }
    }
    let holes: u32 = free.values().sum();
    let (twice_i3, three_y) = match holes {
        0 => return Err(HadronError::NoHole),
        1 => *free.iter().find(|(_, &n)| n == 1).expect("one hole").0,
        n => return Err(HadronError::MultipleHoles(n)),
    };

    let isospin_z = HalfInt::from_twice(twice_i3);
    let hypercharge = Rational64::new(i64::from(three_y), 3);
    let charge = Rational64::new(i64::from(twice_i3), 2) + hypercharge / 2;
    let strangeness = hypercharge - i64::from(baryon_number);
    if !strangeness.is_integer() {
        return Err(HadronError::BadMember(format!(
            "slot Y = {} has fractional strangeness",
            crate::ratio::format(hypercharge)
        )));
    }
    let fit = fit_masses(members);
    Ok(Prediction {
        irrep,
        isospin_z,
        hypercharge,
        charge,
        strangeness: strangeness.to_integer() as i32,
        spin,
        parity,
        mass: fit.as_ref().map(|f| f.at(hypercharge)),
        fit,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsospinState {
    pub label: String,
    #[serde(rename = "I3")]
    pub isospin_z: HalfInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsospinDoublet {
    pub isospin: HalfInt,
    pub dim: u64,
    pub states: Vec<IsospinState>,
}

/// The nucleon as the isospin-1/2 doublet of SU(2).
pub fn heisenberg_doublet() -> IsospinDoublet {
    IsospinDoublet {
        isospin: HalfInt::HALF,
        dim: HalfInt::HALF.multiplicity(),
        states: vec![
            IsospinState { label: "p".into(), isospin_z: HalfInt::HALF },
            IsospinState { label: "n".into(), isospin_z: -HalfInt::HALF },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn member(label: &str, q: i64, s: i32, two_spin: u32, mass: Option<f64>) -> MultipletMember {
        MultipletMember {
            label: label.into(),
            charge: Rational64::from_integer(q),
            strangeness: s,
            two_spin,
            parity: 1,
            mass,
        }
    }

    fn decuplet(mass: impl Fn(i32) -> Option<f64>) -> Vec<MultipletMember> {
        let mut v = Vec::new();
        for (s, charges) in [(0, -1..=2), (-1, -1..=1), (-2, -1..=0)] {
            for q in charges {
                v.push(member(&format!("D{s}{q}"), q, s, 3, mass(s)));
            }
        }
        v
    }

    #[test]
    fn omega_hole() {
        let p = eka_predict(Su3Irrep::DECUPLET, &decuplet(|_| None)).unwrap();
        assert_eq!((p.isospin_z, p.hypercharge), (HalfInt::ZERO, Rational64::from_integer(-2)));
        assert_eq!((p.charge, p.strangeness), (Rational64::from_integer(-1), -3));
        assert_eq!(p.mass, None);
    }

    #[test]
    fn equal_spacing_extrapolates_exactly() {
        let p = eka_predict(Su3Irrep::DECUPLET, &decuplet(|s| Some(1000.0 - 150.0 * f64::from(s)))).unwrap();
        assert!((p.mass.unwrap() - 1450.0).abs() < 1e-9);
    }

    #[test]
    fn single_layer_has_no_mass() {
        let members: Vec<_> = decuplet(|s| (s == 0).then_some(1232.0));
        assert_eq!(eka_predict(Su3Irrep::DECUPLET, &members).unwrap().mass, None);
    }

    #[test]
    fn hole_count_errors() {
        let mut full = decuplet(|_| None);
        full.push(member("Omega-", -1, -3, 3, None));
        assert!(matches!(eka_predict(Su3Irrep::DECUPLET, &full), Err(HadronError::NoHole)));
        let two_missing = &full[..8];
        assert!(matches!(eka_predict(Su3Irrep::DECUPLET, two_missing), Err(HadronError::MultipleHoles(2))));
        let stranger = vec![member("X", 2, -3, 3, None)];
        assert!(matches!(eka_predict(Su3Irrep::DECUPLET, &stranger), Err(HadronError::MemberOutsideIrrep(..))));
    }

    #[test]
    fn classify_singlet_and_errors() {
        let lambda = vec![member("Lambda0", 0, -1, 1, None)];
        let c = classify_multiplet(&lambda).unwrap();
        assert_eq!(c.sizes, vec![1]);
        assert_eq!(c.matches[0].name, "1");

        let mixed = vec![member("a", 0, -1, 1, None), member("b", 0, -1, 3, None)];
        assert!(matches!(classify_multiplet(&mixed), Err(HadronError::InconsistentSpinParity(_))));
        assert!(matches!(classify_multiplet(&[]), Err(HadronError::EmptyMultiplet)));

        let lopsided = vec![member("a", 0, 0, 1, None), member("b", 1, 0, 1, None), member("c", 2, 0, 1, None)];
        assert!(matches!(classify_multiplet(&lopsided), Err(HadronError::IncompleteIsospin(_))));

        let nine = decuplet(|_| None);
        assert!(matches!(classify_multiplet(&nine), Err(HadronError::NoMatchingIrrep(s)) if s == vec![4, 3, 2]));
    }

    #[test]
    fn heisenberg() {
        let d = heisenberg_doublet();
        assert_eq!(d.dim, 2);
        assert_eq!(d.states[0].isospin_z, HalfInt::HALF);
        assert_eq!(d.states[1].isospin_z, -HalfInt::HALF);
    }

    #[test]
    fn parse_rejects_bad_parity() {
        let json = r#"[{"label":"x","Q":"0","S":0,"two_spin":1,"parity":2}]"#;
        assert!(parse_members(json).is_err());
        let ok = r#"{"members":[{"label":"x","Q":"1/1","S":0,"two_spin":1,"parity":-1,"mass":938.3}]}"#;
        assert_eq!(parse_members(ok).unwrap()[0].mass, Some(938.3));
    }
}

use std::fmt;
use std::fs;
use std::path::Path;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::HadronError;
use crate::repcore::HalfInt;

pub const QUARKS_CSV: &str = include_str!("../../data/quarks.csv");
pub const QUARKS_HEADER: &str = "name,baryon_number,charge,hypercharge,isospin,isospin_z,strangeness";

const FLAVORS: [&str; 6] = ["u", "d", "s", "c", "b", "t"];

/// Additive quantum numbers of a quark, antiquark or hadron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumNumbers {
    #[serde(rename = "B", with = "crate::ratio")]
    pub baryon_number: Rational64,
    #[serde(rename = "Q", with = "crate::ratio")]
    pub charge: Rational64,
    #[serde(rename = "Y", with = "crate::ratio")]
    pub hypercharge: Rational64,
    #[serde(rename = "I3")]
    pub isospin_z: HalfInt,
    #[serde(rename = "S")]
    pub strangeness: i32,
}

impl QuantumNumbers {
    pub fn zero() -> Self {
        QuantumNumbers {
            baryon_number: Rational64::from_integer(0),
            charge: Rational64::from_integer(0),
            hypercharge: Rational64::from_integer(0),
            isospin_z: HalfInt::ZERO,
            strangeness: 0,
        }
    }

    pub fn negated(self) -> Self {
        QuantumNumbers {
            baryon_number: -self.baryon_number,
            charge: -self.charge,
            hypercharge: -self.hypercharge,
            isospin_z: -self.isospin_z,
            strangeness: -self.strangeness,
        }
    }
}

impl std::ops::Add for QuantumNumbers {
    type Output = QuantumNumbers;
    fn add(self, rhs: QuantumNumbers) -> QuantumNumbers {
        QuantumNumbers {
            baryon_number: self.baryon_number + rhs.baryon_number,
            charge: self.charge + rhs.charge,
            hypercharge: self.hypercharge + rhs.hypercharge,
            isospin_z: self.isospin_z + rhs.isospin_z,
            strangeness: self.strangeness + rhs.strangeness,
        }
    }
}

/// One row of the quark table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuarkFlavor {
    /// `u`, `d`, ... or `ubar`, `dbar`, ...
    pub name: String,
    pub antiparticle: bool,
    pub isospin: HalfInt,
    #[serde(flatten)]
    pub numbers: QuantumNumbers,
}

impl QuarkFlavor {
    /// The flavor letter without the `bar` suffix.
    pub fn base(&self) -> &str {
        self.name.strip_suffix("bar").unwrap_or(&self.name)
    }

    pub fn is_light(&self) -> bool {
        matches!(self.base(), "u" | "d" | "s")
    }
}

impl fmt::Display for QuarkFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Deserialize)]
struct QuarkRow {
    name: String,
    #[serde(with = "crate::ratio")]
    baryon_number: Rational64,
    #[serde(with = "crate::ratio")]
    charge: Rational64,
    #[serde(with = "crate::ratio")]
    hypercharge: Rational64,
    isospin: String,
    isospin_z: String,
    strangeness: i32,
}

/// `Q - I3 - Y/2 == 0`, exactly.
pub fn gmn_check(n: &QuantumNumbers) -> bool {
    let i3 = Rational64::new(i64::from(n.isospin_z.twice()), 2);
    n.charge - i3 - n.hypercharge / 2 == Rational64::from_integer(0)
}

/// The quark and antiquark flavor table.
#[derive(Clone, Debug)]
pub struct QuarkTable {
    rows: Vec<QuarkFlavor>,
}

impl QuarkTable {
    pub fn bundled() -> Self {
        QuarkTable::from_csv(QUARKS_CSV).expect("bundled quark table is valid")
    }

    pub fn from_dir(dir: &Path) -> Result<Self, HadronError> {
        let path = dir.join("quarks.csv");
        let text = fs::read_to_string(&path).map_err(|e| HadronError::Data(format!("{}: {e}", path.display())))?;
        QuarkTable::from_csv(&text)
    }

    /// Parses the table and checks `Q = I3 + Y/2` on every row and that each
    /// antiquark row negates its quark's additive numbers.
    pub fn from_csv(text: &str) -> Result<Self, HadronError> {
        let data_err = |m: String| HadronError::Data(format!("quarks.csv: {m}"));
        let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
        let header = reader.headers().map_err(|e| data_err(e.to_string()))?;
        if header.iter().collect::<Vec<_>>().join(",") != QUARKS_HEADER {
            return Err(data_err(format!("header must be {QUARKS_HEADER:?}")));
        }
        let mut rows = Vec::new();
        for row in reader.deserialize::<QuarkRow>() {
            let row = row.map_err(|e| data_err(e.to_string()))?;
            let half = |s: &str| s.parse::<HalfInt>().map_err(|e| data_err(format!("{}: {e}", row.name)));
            let antiparticle = row.name.ends_with("bar");
            let flavor = QuarkFlavor {
                antiparticle,
                isospin: half(&row.isospin)?,
                numbers: QuantumNumbers {
                    baryon_number: row.baryon_number,
                    charge: row.charge,
                    hypercharge: row.hypercharge,
                    isospin_z: half(&row.isospin_z)?,
                    strangeness: row.strangeness,
                },
                name: row.name,
            };
            if !FLAVORS.contains(&flavor.base()) {
                return Err(data_err(format!("unknown flavor {:?}", flavor.name)));
            }
            if !gmn_check(&flavor.numbers) {
                return Err(data_err(format!("{} violates Q = I3 + Y/2", flavor.name)));
            }
            rows.push(flavor);
        }
        let table = QuarkTable { rows };
        for anti in table.rows.iter().filter(|q| q.antiparticle) {
            let quark = table.get(anti.base())?;
            if anti.numbers != quark.numbers.negated() || anti.isospin != quark.isospin {
                return Err(data_err(format!("{} is not the conjugate of {}", anti.name, quark.name)));
            }
        }
        Ok(table)
    }

    pub fn get(&self, name: &str) -> Result<&QuarkFlavor, HadronError> {
        self.rows.iter().find(|q| q.name == name).ok_or_else(|| HadronError::UnknownFlavor(name.to_string()))
    }

    pub fn rows(&self) -> &[QuarkFlavor] {
        &self.rows
    }

    /// `u`, `d`, `s` and their antiquarks.
    pub fn light(&self) -> impl Iterator<Item = &QuarkFlavor> {
        self.rows.iter().filter(|q| q.is_light())
    }

    /// The antiparticle row of `q`.
    pub fn conjugate(&self, q: &QuarkFlavor) -> Result<&QuarkFlavor, HadronError> {
        if q.antiparticle {
            self.get(q.base())
        } else {
            self.get(&format!("{}bar", q.name))
        }
    }

    /// Splits `"u u d"`, `"uud"` or `"u dbar"` into table rows.
    pub fn parse_flavors(&self, spec: &str) -> Result<Vec<QuarkFlavor>, HadronError> {
        let mut out = Vec::new();
        for token in spec.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let mut rest = token;
            while !rest.is_empty() {
                let letter = rest.chars().next().expect("non-empty");
                let len = letter.len_utf8();
                let (name, used) = if rest[len..].starts_with("bar") {
                    (format!("{letter}bar"), len + 3)
                } else {
                    (letter.to_string(), len)
                };
                out.push(self.get(&name).map_err(|_| HadronError::UnknownFlavor(token.to_string()))?.clone());
                rest = &rest[used..];
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn table_rows() {
        let t = QuarkTable::bundled();
        assert_eq!(t.rows().len(), 12);
        let u = t.get("u").unwrap();
        assert_eq!(u.numbers.charge, r(2, 3));
        assert_eq!(u.numbers.hypercharge, r(1, 3));
        assert_eq!(u.numbers.isospin_z, HalfInt::HALF);
        let s = t.get("s").unwrap();
        assert_eq!((s.numbers.hypercharge, s.numbers.strangeness), (r(-2, 3), -1));
        let dbar = t.get("dbar").unwrap();
        assert_eq!(dbar.numbers.isospin_z, HalfInt::HALF);
        assert_eq!(dbar.numbers.charge, r(1, 3));
    }

    #[test]
    fn light_rows_satisfy_y_equals_b_plus_s() {
        for q in QuarkTable::bundled().light() {
            assert_eq!(
                q.numbers.hypercharge,
                q.numbers.baryon_number + Rational64::from_integer(q.numbers.strangeness.into())
            );
        }
    }

    #[test]
    fn gmn_examples() {
        let t = QuarkTable::bundled();
        assert!(gmn_check(&t.get("u").unwrap().numbers));
        assert!(gmn_check(&t.get("s").unwrap().numbers));
        let bad = QuantumNumbers { charge: r(1, 1), ..QuantumNumbers::zero() };
        assert!(!gmn_check(&bad));
    }

    #[test]
    fn load_checks() {
        let broken = QUARKS_CSV.replace("u,1/3,2/3,1/3,1/2,1/2,0", "u,1/3,2/3,1/3,1/2,-1/2,0");
        assert!(QuarkTable::from_csv(&broken).is_err());
        let not_conjugate = QUARKS_CSV.replace("sbar,-1/3,1/3,2/3,0,0,1", "sbar,-1/3,1/3,2/3,0,0,1\nxbar,0,0,0,0,0,0");
        assert!(QuarkTable::from_csv(&not_conjugate).is_err());
    }

    #[test]
    fn parsing_flavor_strings() {
        let t = QuarkTable::bundled();
        let names = |s: &str| t.parse_flavors(s).unwrap().into_iter().map(|q| q.name).collect::<Vec<_>>();
        assert_eq!(names("u u d"), ["u", "u", "d"]);
        assert_eq!(names("uud"), ["u", "u", "d"]);
        assert_eq!(names("u dbar"), ["u", "dbar"]);
        assert_eq!(names("udbar"), ["u", "dbar"]);
        assert!(t.parse_flavors("u x").is_err());
    }
}

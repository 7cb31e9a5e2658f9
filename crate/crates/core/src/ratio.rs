//! `p/q` string form for exact rationals.

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serializer};

/// Renders `p/q`, or `p` when the denominator is 1.
pub fn format(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Option<Rational64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Rational64::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational64::from_integer),
    }
}

pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format(*r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
    let raw = String::deserialize(d)?;
    parse(&raw).ok_or_else(|| serde::de::Error::custom(format!("not a rational: {raw:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for (n, d) in [(2, 3), (-1, 3), (4, 2), (0, 5), (-7, 1)] {
            let r = Rational64::new(n, d);
            assert_eq!(parse(&format(r)), Some(r));
        }
        assert_eq!(format(Rational64::new(-2, 6)), "-1/3");
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("abc"), None);
    }
}

use std::fmt;

use serde::Serialize;

use super::{HadronComposition, HadronShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Color {
    R,
    G,
    B,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::R, Color::G, Color::B];

    fn swapped(self, a: Color, b: Color) -> Color {
        if self == a {
            b
        } else if self == b {
            a
        } else {
            self
        }
    }
}

/// A quark carrying a colour, or an antiquark carrying an anticolour.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColorFactor {
    pub flavor: String,
    pub color: Color,
    pub anticolor: bool,
}

impl fmt::Display for ColorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{:?}{}", self.flavor, self.color, if self.anticolor { "bar" } else { "" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColorTerm {
    pub coefficient: i8,
    pub factors: Vec<ColorFactor>,
}

impl ColorTerm {
    /// Relabels colours `a <-> b` in every factor.
    pub fn swap_colors(&self, a: Color, b: Color) -> ColorTerm {
        ColorTerm {
            coefficient: self.coefficient,
            factors: self.factors.iter().map(|f| ColorFactor { color: f.color.swapped(a, b), ..f.clone() }).collect(),
        }
    }

    pub fn colors(&self) -> Vec<Color> {
        self.factors.iter().map(|f| f.color).collect()
    }
}

impl fmt::Display for ColorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Renders `a + b - c ...`.
pub fn format_wavefunction(terms: &[ColorTerm]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.coefficient < 0) {
            (0, false) => {}
            (0, true) => out.push_str("- "),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&t.to_string());
    }
    out
}

// Cyclic permutations of (R, G, B) are even, the rest odd.
const BARYON_PERMUTATIONS: [([Color; 3], i8); 6] = [
    ([Color::R, Color::G, Color::B], 1),
    ([Color::G, Color::B, Color::R], 1),
    ([Color::B, Color::R, Color::G], 1),
    ([Color::R, Color::B, Color::G], -1),
    ([Color::B, Color::G, Color::R], -1),
    ([Color::G, Color::R, Color::B], -1),
];

/// Colour-singlet wavefunction: the antisymmetric sum over colour
/// permutations for (anti)baryons, `q_c q̄_c̄` summed over `c` for mesons.
/// Flavours keep the order given, except that a meson lists its quark first.
pub fn color_wavefunction(c: &HadronComposition) -> Vec<ColorTerm> {
    let quarks = c.constituents();
    match c.shape() {
        HadronShape::Baryon | HadronShape::AntiBaryon => BARYON_PERMUTATIONS
            .iter()
            .map(|(colors, sign)| ColorTerm {
                coefficient: *sign,
                factors: quarks
                    .iter()
                    .zip(colors)
                    .map(|(q, &color)| ColorFactor { flavor: q.name.clone(), color, anticolor: q.antiparticle })
                    .collect(),
            })
            .collect(),
        HadronShape::Meson => {
            let (quark, anti) =
                if quarks[0].antiparticle { (&quarks[1], &quarks[0]) } else { (&quarks[0], &quarks[1]) };
            Color::ALL
                .iter()
                .map(|&color| ColorTerm {
                    coefficient: 1,
                    factors: vec![
                        ColorFactor { flavor: quark.name.clone(), color, anticolor: false },
                        ColorFactor { flavor: anti.name.clone(), color, anticolor: true },
                    ],
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadron::QuarkTable;

    fn wf(spec: &str) -> Vec<ColorTerm> {
        let t = QuarkTable::bundled();
        color_wavefunction(&HadronComposition::new(t.parse_flavors(spec).unwrap()).unwrap())
    }

    #[test]
    fn omega_expansion() {
        assert_eq!(
            format_wavefunction(&wf("s s s")),
            "s_R s_G s_B + s_G s_B s_R + s_B s_R s_G - s_R s_B s_G - s_B s_G s_R - s_G s_R s_B"
        );
    }

    #[test]
    fn proton_expansion() {
        assert_eq!(
            format_wavefunction(&wf("u u d")),
            "u_R u_G d_B + u_G u_B d_R + u_B u_R d_G - u_R u_B d_G - u_B u_G d_R - u_G u_R d_B"
        );
    }

    #[test]
    fn pion_expansion() {
        assert_eq!(format_wavefunction(&wf("u dbar")), "u_R dbar_Rbar + u_G dbar_Gbar + u_B dbar_Bbar");
        assert_eq!(wf("dbar u"), wf("u dbar"));
    }
}

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use super::{HalfInt, Su2Irrep, Su3Irrep};

/// Dimension `(p + 1)(q + 1)(p + q + 2) / 2` of the SU(3) irrep `(p, q)`.
pub fn su3_dim(p: u32, q: u32) -> u64 {
    let (p, q) = (u64::from(p), u64::from(q));
    // One of (p+1), (q+1), (p+q+2) is always even.
    (p + 1) * (q + 1) * (p + q + 2) / 2
}

/// A weight in the (I3, Y) plane, stored as `(2 I3, 3 Y)` so both axes are
/// integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight {
    pub twice_i3: i32,
    pub three_y: i32,
}

impl Weight {
    /// Weight with Dynkin labels `(a, b)`.
    fn from_dynkin(a: i32, b: i32) -> Self {
        Weight { twice_i3: a, three_y: a + 2 * b }
    }

    pub fn i3(self) -> HalfInt {
        HalfInt::from_twice(self.twice_i3)
    }

    pub fn hypercharge(self) -> Rational64 {
        Rational64::new(i64::from(self.three_y), 3)
    }
}

/// Weights of an SU(3) irrep with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    rep: Su3Irrep,
    weights: BTreeMap<Weight, u32>,
}

// Steps around a hexagon with highest weight (a, b), in Dynkin labels:
// a x (-a1), b x -(a1 + a2), a x (-a2), b x (+a1), a x (a1 + a2), b x (+a2).
const ALPHA1: (i32, i32) = (2, -1);
const ALPHA2: (i32, i32) = (-1, 2);

fn hexagon_boundary(top: (i32, i32), a: i32, b: i32) -> Vec<(i32, i32)> {
    if a == 0 && b == 0 {
        return vec![top];
    }
    let sum = (ALPHA1.0 + ALPHA2.0, ALPHA1.1 + ALPHA2.1);
    let legs = [
        (a, (-ALPHA1.0, -ALPHA1.1)),
        (b, (-sum.0, -sum.1)),
        (a, (-ALPHA2.0, -ALPHA2.1)),
        (b, ALPHA1),
        (a, sum),
        (b, ALPHA2),
    ];
    let mut out = Vec::with_capacity(3 * (a + b) as usize);
    let mut cur = top;
    for (steps, dir) in legs {
        for _ in 0..steps {
            out.push(cur);
            cur = (cur.0 + dir.0, cur.1 + dir.1);
        }
    }
    debug_assert_eq!(cur, top);
    out
}

impl WeightDiagram {
    /// Layered-hexagon construction: the shell with highest weight
    /// `(p - k, q - k)` carries multiplicity `k + 1` until the shell becomes a
    /// triangle; the nested triangles inside it keep that multiplicity.
    pub fn new(rep: Su3Irrep) -> Self {
        let mut weights = BTreeMap::new();
        let mut add = |pts: Vec<(i32, i32)>, mult: u32| {
            for (x, y) in pts {
                *weights.entry(Weight::from_dynkin(x, y)).or_insert(0) += mult;
            }
        };

        let (p, q) = (rep.p as i32, rep.q as i32);
        let mut top = (p, q);
        let mut mult = 1;
        let (mut a, mut b) = (p, q);
        while a > 0 && b > 0 {
            add(hexagon_boundary(top, a, b), mult);
            a -= 1;
            b -= 1;
            top = (top.0 - 1, top.1 - 1);
            mult += 1;
        }
        // Triangle (a, 0) or (0, b), then nested triangles three steps in.
        loop {
            add(hexagon_boundary(top, a, b), mult);
            if a >= 3 {
                a -= 3;
                top = (top.0 - 3, top.1);
            } else if b >= 3 {
                b -= 3;
                top = (top.0, top.1 - 3);
            } else {
                break;
            }
        }
        WeightDiagram { rep, weights }
    }

    pub fn rep(&self) -> Su3Irrep {
        self.rep
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, u32)> + '_ {
        self.weights.iter().map(|(w, m)| (*w, *m))
    }

    pub fn multiplicity(&self, w: Weight) -> u32 {
        self.weights.get(&w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.weights.values().map(|&m| u64::from(m)).sum()
    }

    /// Peels maximal isospin multiplets off each hypercharge layer.
    pub fn isospin_multiplets(&self) -> Vec<IsospinMultiplet> {
        let mut layers: BTreeMap<i32, BTreeMap<i32, u32>> = BTreeMap::new();
        for (w, m) in self.iter() {
            *layers.entry(w.three_y).or_default().entry(w.twice_i3).or_insert(0) += m;
        }
        let mut out = Vec::new();
        for (three_y, mut layer) in layers.into_iter().rev() {
            while let Some((&top, _)) = layer.iter().rev().find(|(_, &m)| m > 0) {
                for t in (-top..=top).step_by(2) {
                    let slot = layer.get_mut(&t).expect("weight layer is not isospin-symmetric");
                    *slot -= 1;
                }
                out.push(IsospinMultiplet { isospin: Su2Irrep::from_twice(top as u32), three_y });
            }
        }
        out
    }
}

/// One SU(2) multiplet inside an SU(3) irrep, with its hypercharge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsospinMultiplet {
    pub isospin: Su2Irrep,
    /// Three times the hypercharge.
    pub three_y: i32,
}

impl IsospinMultiplet {
    pub fn hypercharge(self) -> Rational64 {
        Rational64::new(i64::from(self.three_y), 3)
    }
}

/// Isospin multiplets of `(p, q)`, ordered by descending hypercharge.
pub fn su3_isospin_multiplets(rep: Su3Irrep) -> Vec<IsospinMultiplet> {
    WeightDiagram::new(rep).isospin_multiplets()
}

/// SU(2) content of `(p, q)`, sorted by ascending isospin.
pub fn su3_su2_content(rep: Su3Irrep) -> Vec<Su2Irrep> {
    let mut content: Vec<Su2Irrep> = su3_isospin_multiplets(rep).into_iter().map(|m| m.isospin).collect();
    content.sort();
    content
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twice_js(rep: Su3Irrep) -> Vec<i32> {
        su3_su2_content(rep).into_iter().map(|r| r.j().twice()).collect()
    }

    #[test]
    fn dims_of_named_irreps() {
        assert_eq!(su3_dim(0, 0), 1);
        assert_eq!(su3_dim(1, 1), 8);
        assert_eq!(su3_dim(3, 0), 10);
        assert_eq!(su3_dim(2, 2), 27);
    }

    #[test]
    fn content_of_named_irreps() {
        assert_eq!(twice_js(Su3Irrep::SINGLET), vec![0]);
        assert_eq!(twice_js(Su3Irrep::TRIPLET), vec![0, 1]);
        assert_eq!(twice_js(Su3Irrep::ANTITRIPLET), vec![0, 1]);
        assert_eq!(twice_js(Su3Irrep::OCTET), vec![0, 1, 1, 2]);
        assert_eq!(twice_js(Su3Irrep::DECUPLET), vec![0, 1, 2, 3]);
        assert_eq!(twice_js(Su3Irrep::ANTIDECUPLET), vec![0, 1, 2, 3]);
    }

    #[test]
    fn octet_weights() {
        let d = WeightDiagram::new(Su3Irrep::OCTET);
        assert_eq!(d.total(), 8);
        assert_eq!(d.multiplicity(Weight { twice_i3: 0, three_y: 0 }), 2);
        // proton corner
        assert_eq!(d.multiplicity(Weight { twice_i3: 1, three_y: 3 }), 1);
    }

    #[test]
    fn decuplet_layers_top_down() {
        let m = su3_isospin_multiplets(Su3Irrep::DECUPLET);
        let layers: Vec<(i32, i32)> = m.iter().map(|m| (m.three_y, m.isospin.j().twice())).collect();
        assert_eq!(layers, vec![(3, 3), (0, 2), (-3, 1), (-6, 0)]);
    }
}

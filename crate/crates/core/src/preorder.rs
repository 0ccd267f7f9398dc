//! Preorders on finite carriers and their correspondence with finite spaces.
//!
//! Convention: `x ⊑ y` iff every open set containing `x` contains `y`, so the
//! open sets of a finite space are exactly the up-sets of its preorder.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{check_carrier, FiniteSpace};

/// Point pairs `(x, y)`, used for Hasse diagram edges.
pub type Edges = Vec<(usize, usize)>;

/// A reflexive, transitive relation on `0..n`. Row `x` holds `{ y | x ⊑ y }`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpacePreorder {
    up: Vec<PointSet>,
}

impl SpacePreorder {
    /// From a boolean matrix, `leq[x][y]` meaning `x ⊑ y`.
    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Self> {
        let n = leq.len();
        check_carrier(n)?;
        let mut up = Vec::with_capacity(n);
        for (x, r) in leq.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidOrder(format!(
                    "row {x} has {} entries, expected {n}",
                    r.len()
                )));
            }
            up.push(
                r.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(y, _)| y)
                    .collect(),
            );
        }
        Self::from_up_sets(up)
    }

    pub fn from_up_sets(up: Vec<PointSet>) -> Result<Self> {
        let n = up.len();
        check_carrier(n)?;
        for (x, &u) in up.iter().enumerate() {
            if !u.fits(n) {
                return Err(Error::PointOutOfRange { set: u, carrier: n });
            }
            if !u.contains(x) {
                return Err(Error::InvalidOrder(format!("not reflexive at {x}")));
            }
            for y in u.iter() {
                if !up[y].is_subset(u) {
                    return Err(Error::InvalidOrder(format!(
                        "not transitive: {x} ⊑ {y} but the up-set of {y} escapes that of {x}"
                    )));
                }
            }
        }
        Ok(SpacePreorder { up })
    }

    /// The chain `0 ⊑ 1 ⊑ .. ⊑ n-1`.
    pub fn chain(n: usize) -> Self {
        SpacePreorder {
            up: (0..n)
                .map(|x| PointSet::full(n) - PointSet::full(x))
                .collect(),
        }
    }

    pub fn antichain(n: usize) -> Self {
        SpacePreorder {
            up: (0..n).map(PointSet::singleton).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        SpacePreorder {
            up: vec![PointSet::full(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.up.len()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn up_set(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn down_set(&self, y: usize) -> PointSet {
        (0..self.n()).filter(|&x| self.leq(x, y)).collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n()).all(|x| self.up[x].iter().all(|y| y == x || !self.leq(y, x)))
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n())
            .map(|x| (0..self.n()).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// Whether `a` is upward closed.
    pub fn is_up_set(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.up[x].is_subset(a))
    }

    /// Covering pairs `(x, y)`: `x ⊏ y` strictly with nothing strictly between,
    /// computed on equivalence classes; plus pairs `x < y` (by index) that are
    /// equivalent.
    pub fn hasse_edges(&self) -> (Edges, Edges) {
        let n = self.n();
        let strict = |a: usize, b: usize| self.leq(a, b) && !self.leq(b, a);
        let mut covers = Vec::new();
        let mut equiv = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x < y && self.leq(x, y) && self.leq(y, x) {
                    equiv.push((x, y));
                }
                if strict(x, y) && !(0..n).any(|z| strict(x, z) && strict(z, y)) {
                    covers.push((x, y));
                }
            }
        }
        (covers, equiv)
    }

    /// Graphviz rendering of the Hasse diagram, arrows pointing upward
    /// (`x -> y` when `y` covers `x`).
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let name = |i: usize| match labels {
            Some(l) => l[i].replace('"', "\\\""),
            None => i.to_string(),
        };
        let (covers, equiv) = self.hasse_edges();
        let mut s = String::from("digraph specialization {\n  rankdir=BT;\n");
        for i in 0..self.n() {
            let _ = writeln!(s, "  p{i} [label=\"{}\"];", name(i));
        }
        for (a, b) in covers {
            let _ = writeln!(s, "  p{a} -> p{b};");
        }
        for (a, b) in equiv {
            let _ = writeln!(s, "  p{a} -> p{b} [dir=both, style=dashed];");
        }
        s.push_str("}\n");
        s
    }
}

pub fn specialization_preorder(x: &FiniteSpace) -> SpacePreorder {
    SpacePreorder {
        up: x.neighbourhoods().to_vec(),
    }
}

/// Alexandrov topology: the opens are exactly the up-sets.
pub fn from_preorder(p: &SpacePreorder) -> FiniteSpace {
    FiniteSpace::build(p.n(), p.up.clone(), None, None)
}

/// Every preorder on `n` labelled points, by filtering all reflexive
/// relations for transitivity. Ascending in row-wise order.
pub fn enumerate_preorders(n: usize) -> Result<Vec<SpacePreorder>> {
    const LIMIT: usize = 5;
    if n > LIMIT {
        return Err(Error::BoundExceeded {
            what: "preorder enumeration",
            requested: n,
            limit: LIMIT,
        });
    }
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << off.len()) {
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (k, &(x, y)) in off.iter().enumerate() {
            if (code >> k) & 1 == 1 {
                up[x] = up[x].with(y);
            }
        }
        let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
        if transitive {
            out.push(SpacePreorder { up });
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(p: &[usize]) -> PointSet {
        PointSet::from_points(p.iter().copied())
    }

    fn upsets_by_brute_force(p: &SpacePreorder) -> Vec<PointSet> {
        PointSet::all_subsets(p.n())
            .filter(|&a| {
                a.iter()
                    .all(|x| (0..p.n()).all(|y| !p.leq(x, y) || a.contains(y)))
            })
            .collect()
    }

    #[test]
    fn specialization_examples() {
        let s = FiniteSpace::new(2, [ps(&[]), ps(&[1]), ps(&[0, 1])]).unwrap();
        let p = specialization_preorder(&s);
        assert!(p.leq(0, 1));
        assert!(!p.leq(1, 0));
        assert_eq!(
            specialization_preorder(&FiniteSpace::discrete(3)),
            SpacePreorder::antichain(3)
        );
        assert_eq!(
            specialization_preorder(&FiniteSpace::indiscrete(2)),
            SpacePreorder::total(2)
        );
    }

    #[test]
    fn from_preorder_examples() {
        let s = from_preorder(&SpacePreorder::chain(2));
        assert_eq!(s.opens(), &[ps(&[]), ps(&[1]), ps(&[0, 1])]);
        let d = from_preorder(&SpacePreorder::antichain(3));
        assert_eq!(d.opens().len(), 8);
        assert_eq!(d, FiniteSpace::discrete(3));
        assert_eq!(
            from_preorder(&SpacePreorder::total(2)),
            FiniteSpace::indiscrete(2)
        );
    }

    #[test]
    fn opens_are_exactly_upsets() {
        for n in 0..=4 {
            for p in enumerate_preorders(n).unwrap() {
                let x = from_preorder(&p);
                assert_eq!(x.opens(), upsets_by_brute_force(&p).as_slice());
                assert_eq!(specialization_preorder(&x), p);
            }
        }
    }

    #[test]
    fn preorder_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_preorders(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn validation() {
        assert!(SpacePreorder::from_matrix(&[vec![true, false], vec![false, false]]).is_err());
        assert!(SpacePreorder::from_matrix(&[
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true]
        ])
        .is_err());
        assert!(enumerate_preorders(6).is_err());
    }

    #[test]
    fn hasse_of_chain_and_equivalence() {
        let (covers, equiv) = SpacePreorder::chain(3).hasse_edges();
        assert_eq!(covers, vec![(0, 1), (1, 2)]);
        assert!(equiv.is_empty());
        let (covers, equiv) = SpacePreorder::total(2).hasse_edges();
        assert!(covers.is_empty());
        assert_eq!(equiv, vec![(0, 1)]);
        let dot = SpacePreorder::chain(2).to_dot(None);
        assert!(dot.contains("p0 -> p1;"));
    }
}

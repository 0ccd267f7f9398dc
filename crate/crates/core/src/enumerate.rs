//! Exhaustive generation of the topologies on a small labelled carrier.
//!
//! Topologies are found by searching minimal-neighbourhood assignments
//! (each point picks a set containing itself, and neighbourhoods must nest),
//! which is independent of the relation-filtering preorder enumerator in
//! [`crate::preorder`]; the two are cross-checked in tests.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// Largest carrier for which full lists of topologies are produced.
pub const EXHAUSTIVE_LIMIT: usize = 4;
/// Largest carrier for which topologies can be counted.
pub const COUNT_LIMIT: usize = 5;

fn for_each_assignment(n: usize, mut visit: impl FnMut(&[PointSet])) {
    let full = PointSet::full(n);
    let choices: Vec<Vec<PointSet>> = (0..n)
        .map(|x| {
            (full - PointSet::singleton(x))
                .subsets()
                .map(|s| s.with(x))
                .collect()
        })
        .collect();
    let mut current = vec![PointSet::EMPTY; n];
    fn go(
        x: usize,
        choices: &[Vec<PointSet>],
        current: &mut Vec<PointSet>,
        visit: &mut dyn FnMut(&[PointSet]),
    ) {
        let n = choices.len();
        if x == n {
            let nested =
                (0..n).all(|a| current[a].iter().all(|b| current[b].is_subset(current[a])));
            if nested {
                visit(current);
            }
            return;
        }
        for &c in &choices[x] {
            current[x] = c;
            go(x + 1, choices, current, visit);
        }
    }
    go(0, &choices, &mut current, &mut visit);
}

/// Every topology on `n` labelled points, each exactly once, in canonical
/// order (by sorted open family).
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::BoundExceeded {
            what: "topology enumeration",
            requested: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut out = Vec::new();
    for_each_assignment(n, |nb| {
        out.push(FiniteSpace::from_neighbourhoods(nb.to_vec()).expect("nested assignment"))
    });
    out.sort();
    Ok(out)
}

/// Same stream as [`enumerate_topologies`], resumed at position `start`.
pub fn enumerate_topologies_from(n: usize, start: usize) -> Result<Vec<FiniteSpace>> {
    Ok(topologies(n)?.iter().skip(start).cloned().collect())
}

pub fn count_topologies(n: usize) -> Result<usize> {
    if n > COUNT_LIMIT {
        return Err(Error::BoundExceeded {
            what: "topology counting",
            requested: n,
            limit: COUNT_LIMIT,
        });
    }
    let mut count = 0;
    for_each_assignment(n, |_| count += 1);
    Ok(count)
}

/// Cached catalogue of [`enumerate_topologies`].
pub fn topologies(n: usize) -> Result<&'static [FiniteSpace]> {
    static CATALOGUE: [OnceLock<Vec<FiniteSpace>>; EXHAUSTIVE_LIMIT + 1] =
        [const { OnceLock::new() }; EXHAUSTIVE_LIMIT + 1];
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::BoundExceeded {
            what: "topology enumeration",
            requested: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(CATALOGUE[n]
        .get_or_init(|| enumerate_topologies(n).expect("within limit"))
        .as_slice())
}

/// All topologies with at most `max` points (including the empty space),
/// smaller carriers first.
pub fn spaces_up_to(max: usize) -> Result<Vec<FiniteSpace>> {
    let mut out = Vec::new();
    for n in 0..=max {
        out.extend_from_slice(topologies(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preorder::{enumerate_preorders, from_preorder};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_topologies(0).unwrap().len(), 1);
        assert_eq!(enumerate_topologies(1).unwrap().len(), 1);
        assert_eq!(enumerate_topologies(2).unwrap().len(), 4);
        assert_eq!(enumerate_topologies(3).unwrap().len(), 29);
        assert!(enumerate_topologies(5).is_err());
        assert!(count_topologies(6).is_err());
    }

    #[test]
    fn matches_preorder_route_as_sets() {
        for n in 0..=4 {
            let mut via_preorders: Vec<FiniteSpace> = enumerate_preorders(n)
                .unwrap()
                .iter()
                .map(from_preorder)
                .collect();
            via_preorders.sort();
            assert_eq!(topologies(n).unwrap(), via_preorders.as_slice());
        }
    }

    #[test]
    fn canonical_order_is_strict_and_restartable() {
        let all = topologies(3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let tail = enumerate_topologies_from(3, 10).unwrap();
        assert_eq!(tail.as_slice(), &all[10..]);
    }
}

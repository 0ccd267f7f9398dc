//! Exponentials of finite spaces and the Sierpinski object.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::maps::{for_each_continuous_graph, ContinuousMap};
use crate::pointset::{PointSet, MAX_POINTS};
use crate::space::FiniteSpace;

/// Two points, `⊥ = 0` and `⊤ = 1`, with `{⊤}` open and `{⊥}` not.
pub fn sierpinski() -> FiniteSpace {
    FiniteSpace::new(
        2,
        [PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)],
    )
    .expect("sierpinski topology")
}

pub const BOTTOM: usize = 0;
pub const TOP: usize = 1;

/// Characteristic map of `u` into the Sierpinski space; continuous iff `u`
/// is open.
pub fn characteristic_map(x: &FiniteSpace, u: PointSet) -> Result<ContinuousMap> {
    x.check_subset(u)?;
    ContinuousMap::new(x, &sierpinski(), chi(x.n(), u))
}

fn chi(n: usize, u: PointSet) -> Vec<usize> {
    (0..n).map(|x| usize::from(u.contains(x))).collect()
}

/// The space of continuous maps `dom → cod`.
#[derive(Debug, Clone)]
pub struct FunctionSpace {
    dom: FiniteSpace,
    cod: FiniteSpace,
    maps: Vec<Vec<usize>>,
    space: FiniteSpace,
    index: HashMap<Vec<usize>, usize>,
}

impl FunctionSpace {
    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    /// Graphs of the continuous maps, in lexicographic order; position `i`
    /// is point `i` of [`FunctionSpace::space`].
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn index_of(&self, graph: &[usize]) -> Option<usize> {
        self.index.get(graph).copied()
    }

    /// `N(Q, V) = { f | f(Q) ⊆ V }`.
    pub fn subbasic_open(&self, q: PointSet, v: PointSet) -> Result<PointSet> {
        self.dom.check_subset(q)?;
        self.cod.check_subset(v)?;
        if !self.cod.is_open(v) {
            return Err(Error::NotOpen(v));
        }
        Ok(self.neighbourhood_set(q, v))
    }

    fn neighbourhood_set(&self, q: PointSet, v: PointSet) -> PointSet {
        self.maps
            .iter()
            .enumerate()
            .filter(|(_, g)| q.iter().all(|x| v.contains(g[x])))
            .map(|(i, _)| i)
            .collect()
    }

    /// `e(f, x) = f(x)` on `space × dom`, continuity checked.
    pub fn evaluation(&self) -> Result<ContinuousMap> {
        let p = self.space.product(&self.dom)?;
        let graph = self.maps.iter().flat_map(|g| g.iter().copied()).collect();
        ContinuousMap::new(&p, &self.cod, graph)
    }

    /// Transpose `z ↦ h(z, ·)` of `h : Z × dom → cod`, continuity checked.
    pub fn transpose(&self, z: &FiniteSpace, h: &ContinuousMap) -> Result<ContinuousMap> {
        if h.cod() != &self.cod || h.dom().n() != z.n() * self.dom.n() {
            return Err(Error::Mismatch("map is not defined on Z × dom into cod"));
        }
        let nx = self.dom.n();
        let graph = (0..z.n())
            .map(|zi| {
                let section: Vec<usize> = (0..nx).map(|x| h.apply(zi * nx + x)).collect();
                self.index_of(&section)
                    .ok_or(Error::Mismatch("section is not a continuous map"))
            })
            .collect::<Result<Vec<_>>>()?;
        ContinuousMap::new(z, &self.space, graph)
    }
}

/// The exponential `cod^dom`: all continuous maps, topologised by the
/// subbasic sets `N(Q, V)` for every subset `Q` of `dom` (each compact) and
/// every open `V` of `cod`.
pub fn exponential(dom: &FiniteSpace, cod: &FiniteSpace) -> Result<FunctionSpace> {
    if dom.n() >= 16 {
        return Err(Error::CarrierOverflow {
            needed: dom.n(),
            limit: 15,
        });
    }
    let mut maps = Vec::new();
    let mut overflow = false;
    for_each_continuous_graph(dom, cod, |g| {
        if maps.len() < MAX_POINTS {
            maps.push(g.to_vec());
        } else {
            overflow = true;
        }
    });
    if overflow {
        return Err(Error::CarrierOverflow {
            needed: MAX_POINTS + 1,
            limit: MAX_POINTS,
        });
    }
    let index = maps
        .iter()
        .enumerate()
        .map(|(i, g)| (g.clone(), i))
        .collect();
    let mut fs = FunctionSpace {
        dom: dom.clone(),
        cod: cod.clone(),
        maps,
        space: FiniteSpace::point(),
        index,
    };
    let mut subbasis = Vec::new();
    for q in PointSet::all_subsets(dom.n()) {
        for &v in cod.opens() {
            subbasis.push(fs.neighbourhood_set(q, v));
        }
    }
    subbasis.sort_unstable();
    subbasis.dedup();
    fs.space = FiniteSpace::from_subbasis(fs.maps.len(), &subbasis)?;
    Ok(fs)
}

/// The lattice of open sets of `X` carrying the topology transported from
/// `S^X` along `U ↦ χ_U`.
#[derive(Debug, Clone)]
pub struct OpensSpace {
    /// Point `i` is the open set `opens[i]` (ascending).
    pub opens: Vec<PointSet>,
    pub space: FiniteSpace,
    pub exponential: FunctionSpace,
    /// `to_map[i]` is the index of `χ_{opens[i]}` in the exponential.
    pub to_map: Vec<usize>,
}

impl OpensSpace {
    /// `{ (U, x) | x ∈ U }` inside `space × X`.
    pub fn membership(&self) -> PointSet {
        let nx = self.exponential.dom().n();
        self.opens
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| u.iter().map(move |x| i * nx + x))
            .collect()
    }

    /// `{ U | Q ⊆ U }` as a set of points.
    pub fn above(&self, q: PointSet) -> PointSet {
        self.opens
            .iter()
            .enumerate()
            .filter(|(_, u)| q.is_subset(**u))
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn sierpinski_exponential_as_opens(x: &FiniteSpace) -> Result<OpensSpace> {
    let fs = exponential(x, &sierpinski())?;
    let opens = x.opens().to_vec();
    let to_map: Vec<usize> = opens
        .iter()
        .map(|&u| {
            fs.index_of(&chi(x.n(), u))
                .expect("characteristic maps of opens are continuous")
        })
        .collect();
    if to_map.len() != fs.maps().len() {
        return Err(Error::Mismatch(
            "opens and maps into S are not in bijection",
        ));
    }
    let mut from_map = vec![0; to_map.len()];
    for (i, &j) in to_map.iter().enumerate() {
        from_map[j] = i;
    }
    let nbhd = to_map
        .iter()
        .map(|&j| {
            fs.space()
                .neighbourhood(j)
                .iter()
                .map(|k| from_map[k])
                .collect()
        })
        .collect();
    Ok(OpensSpace {
        space: FiniteSpace::from_neighbourhoods(nbhd)?,
        opens,
        exponential: fs,
        to_map,
    })
}

/// `A_Q(p) = ⊤` iff `p(x) = ⊤` for every `x ∈ Q`, on `S^X`. An error means
/// the functional failed to be continuous.
pub fn universal_quantifier(fs: &FunctionSpace, q: PointSet) -> Result<ContinuousMap> {
    if fs.cod() != &sierpinski() {
        return Err(Error::Mismatch("universal quantifier needs maps into S"));
    }
    fs.dom().check_subset(q)?;
    ContinuousMap::new(fs.space(), &sierpinski(), quantifier_graph(fs, q))
}

pub fn quantifier_graph(fs: &FunctionSpace, q: PointSet) -> Vec<usize> {
    fs.maps()
        .iter()
        .map(|p| usize::from(q.iter().all(|x| p[x] == TOP)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::spaces_up_to;
    use crate::preorder::{from_preorder, SpacePreorder};

    fn ps(p: &[usize]) -> PointSet {
        PointSet::from_points(p.iter().copied())
    }

    #[test]
    fn sierpinski_examples() {
        let s = sierpinski();
        assert!(s.leq(BOTTOM, TOP));
        assert!(!s.leq(TOP, BOTTOM));
        for x in spaces_up_to(3).unwrap() {
            for a in PointSet::all_subsets(x.n()) {
                match characteristic_map(&x, a) {
                    Ok(_) => assert!(x.is_open(a)),
                    Err(e) => {
                        assert!(!x.is_open(a));
                        assert_eq!(e, Error::NotContinuous { witness: ps(&[1]) });
                    }
                }
            }
        }
    }

    #[test]
    fn exponential_examples() {
        let s = sierpinski();
        let pt = FiniteSpace::point();
        let fs = exponential(&pt, &s).unwrap();
        assert_eq!(fs.maps(), &[vec![0], vec![1]]);
        assert_eq!(fs.space(), &s);

        let ss = exponential(&s, &s).unwrap();
        assert_eq!(ss.maps(), &[vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(ss.space(), &from_preorder(&SpacePreorder::chain(3)));

        let to_point = exponential(&s, &pt).unwrap();
        assert_eq!(to_point.maps().len(), 1);
        assert_eq!(to_point.space(), &FiniteSpace::point());
    }

    #[test]
    fn subbasic_examples() {
        let s = sierpinski();
        let ss = exponential(&s, &s).unwrap();
        let all = PointSet::full(3);
        assert_eq!(ss.subbasic_open(PointSet::EMPTY, ps(&[1])).unwrap(), all);
        assert_eq!(ss.subbasic_open(ps(&[0]), ps(&[0, 1])).unwrap(), all);
        assert_eq!(ss.subbasic_open(ps(&[0]), ps(&[1])).unwrap(), ps(&[2]));
        assert_eq!(
            ss.subbasic_open(ps(&[0]), ps(&[0])).unwrap_err(),
            Error::NotOpen(ps(&[0]))
        );
    }

    #[test]
    fn opens_space_examples() {
        let o = sierpinski_exponential_as_opens(&FiniteSpace::point()).unwrap();
        assert_eq!(o.space, sierpinski());
        let o = sierpinski_exponential_as_opens(&sierpinski()).unwrap();
        assert_eq!(o.space, from_preorder(&SpacePreorder::chain(3)));
        for x in spaces_up_to(3).unwrap() {
            let o = sierpinski_exponential_as_opens(&x).unwrap();
            assert!(o.space.product(&x).unwrap().is_open(o.membership()));
        }
    }

    #[test]
    fn quantifier_examples() {
        let s = sierpinski();
        let ss = exponential(&s, &s).unwrap();
        let a = universal_quantifier(&ss, PointSet::EMPTY).unwrap();
        assert_eq!(a.graph(), &[1, 1, 1]);
        let a = universal_quantifier(&ss, s.carrier()).unwrap();
        // const⊥, id, const⊤
        assert_eq!(a.graph(), &[0, 0, 1]);
        let o = sierpinski_exponential_as_opens(&s).unwrap();
        for q in PointSet::all_subsets(2) {
            let a = universal_quantifier(&o.exponential, q).unwrap();
            let top = a.fiber(TOP).unwrap();
            let transported: PointSet = o.above(q).iter().map(|i| o.to_map[i]).collect();
            assert_eq!(top, transported);
        }
        let d = FiniteSpace::discrete(2);
        let dd = exponential(&d, &d).unwrap();
        assert!(universal_quantifier(&dd, PointSet::EMPTY).is_err());
    }

    #[test]
    fn evaluation_and_transpose() {
        let s = sierpinski();
        let ss = exponential(&s, &s).unwrap();
        let e = ss.evaluation().unwrap();
        assert_eq!(e.graph(), &[0, 0, 0, 1, 1, 1]);
        let ev = ss.evaluation().unwrap();
        let t = ss.transpose(&ss.space().clone(), &ev).unwrap();
        assert_eq!(t, ContinuousMap::identity(ss.space()));
    }
}

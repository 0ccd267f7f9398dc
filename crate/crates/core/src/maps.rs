//! Continuous maps between finite spaces, closed maps and proper maps.

use std::fmt;
use std::sync::Arc;

use crate::compactness::{is_compact_subset, is_continuously_indexed, IndexedFamily, Role};
use crate::enumerate::{spaces_up_to, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::{row, FiniteSpace};

/// A continuity-checked total function between two finite spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct ContinuousMap {
    dom: FiniteSpace,
    cod: FiniteSpace,
    graph: Arc<[usize]>,
}

impl ContinuousMap {
    /// Validates totality, range and continuity. On failure the witness is the
    /// smallest (by bit pattern) basic open of `cod` whose preimage is not open;
    /// basic opens are the minimal neighbourhoods, which suffice because every
    /// open is a union of them.
    pub fn new(dom: &FiniteSpace, cod: &FiniteSpace, graph: Vec<usize>) -> Result<Self> {
        if graph.len() != dom.n() {
            return Err(Error::GraphLength {
                expected: dom.n(),
                got: graph.len(),
            });
        }
        if let Some(&y) = graph.iter().find(|&&y| y >= cod.n()) {
            return Err(Error::PointIndexOutOfRange {
                point: y,
                carrier: cod.n(),
            });
        }
        if let Some(witness) = discontinuity(dom, cod, &graph) {
            return Err(Error::NotContinuous { witness });
        }
        Ok(Self::trusted(dom, cod, graph))
    }

    pub(crate) fn trusted(dom: &FiniteSpace, cod: &FiniteSpace, graph: Vec<usize>) -> Self {
        ContinuousMap {
            dom: dom.clone(),
            cod: cod.clone(),
            graph: graph.into(),
        }
    }

    pub fn identity(x: &FiniteSpace) -> Self {
        Self::trusted(x, x, (0..x.n()).collect())
    }

    pub fn constant(dom: &FiniteSpace, cod: &FiniteSpace, y: usize) -> Result<Self> {
        cod.check_point(y)?;
        Ok(Self::trusted(dom, cod, vec![y; dom.n()]))
    }

    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    pub fn graph(&self) -> &[usize] {
        &self.graph
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.graph[x]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ContinuousMap) -> Result<ContinuousMap> {
        if self.cod != g.dom {
            return Err(Error::Mismatch("composition: codomain differs from domain"));
        }
        Ok(Self::trusted(
            &self.dom,
            &g.cod,
            self.graph.iter().map(|&y| g.graph[y]).collect(),
        ))
    }

    pub fn image(&self, a: PointSet) -> Result<PointSet> {
        self.dom.check_subset(a)?;
        Ok(self.image_unchecked(a))
    }

    #[inline]
    pub(crate) fn image_unchecked(&self, a: PointSet) -> PointSet {
        a.iter().map(|x| self.graph[x]).collect()
    }

    pub fn preimage(&self, b: PointSet) -> Result<PointSet> {
        self.cod.check_subset(b)?;
        Ok(self.preimage_unchecked(b))
    }

    #[inline]
    pub(crate) fn preimage_unchecked(&self, b: PointSet) -> PointSet {
        (0..self.dom.n())
            .filter(|&x| b.contains(self.graph[x]))
            .collect()
    }

    pub fn fiber(&self, y: usize) -> Result<PointSet> {
        self.cod.check_point(y)?;
        Ok(self.preimage_unchecked(PointSet::singleton(y)))
    }

    pub fn fibers(&self) -> Vec<PointSet> {
        let mut f = vec![PointSet::EMPTY; self.cod.n()];
        for (x, &y) in self.graph.iter().enumerate() {
            f[y] = f[y].with(x);
        }
        f
    }
}

impl fmt::Debug for ContinuousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ContinuousMap")
            .field("dom", &self.dom.opens())
            .field("cod", &self.cod.opens())
            .field("graph", &self.graph)
            .finish()
    }
}

fn discontinuity(dom: &FiniteSpace, cod: &FiniteSpace, graph: &[usize]) -> Option<PointSet> {
    let mut basics: Vec<PointSet> = cod.neighbourhoods().to_vec();
    basics.sort_unstable();
    basics.dedup();
    basics.into_iter().find(|&v| {
        let pre: PointSet = (0..dom.n()).filter(|&x| v.contains(graph[x])).collect();
        !dom.is_open(pre)
    })
}

/// Calls `visit` with every continuous graph `dom → cod`, in lexicographic
/// order, found by backtracking over order-preserving assignments.
pub fn for_each_continuous_graph(
    dom: &FiniteSpace,
    cod: &FiniteSpace,
    mut visit: impl FnMut(&[usize]),
) {
    let n = dom.n();
    let m = cod.n();
    if n > 0 && m == 0 {
        return;
    }
    let mut graph = vec![0usize; n];
    fn go(
        x: usize,
        dom: &FiniteSpace,
        cod: &FiniteSpace,
        graph: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if x == dom.n() {
            visit(graph);
            return;
        }
        'value: for v in 0..cod.n() {
            for (a, &fa) in graph[..x].iter().enumerate() {
                if dom.leq(a, x) && !cod.leq(fa, v) {
                    continue 'value;
                }
                if dom.leq(x, a) && !cod.leq(v, fa) {
                    continue 'value;
                }
            }
            graph[x] = v;
            go(x + 1, dom, cod, graph, visit);
        }
    }
    go(0, dom, cod, &mut graph, &mut visit);
}

/// Every continuous map `dom → cod`, each validated, in lexicographic order
/// of graphs.
pub fn continuous_maps(dom: &FiniteSpace, cod: &FiniteSpace) -> Vec<ContinuousMap> {
    let mut out = Vec::new();
    for_each_continuous_graph(dom, cod, |g| {
        out.push(ContinuousMap::new(dom, cod, g.to_vec()).expect("monotone maps are continuous"))
    });
    out
}

/// The two projections out of `x.product(y)`.
pub fn projections(x: &FiniteSpace, y: &FiniteSpace) -> Result<(ContinuousMap, ContinuousMap)> {
    let p = x.product(y)?;
    let ny = y.n();
    let left = (0..p.n()).map(|i| i / ny).collect();
    let right = (0..p.n()).map(|i| i % ny).collect();
    Ok((
        ContinuousMap::new(&p, x, left)?,
        ContinuousMap::new(&p, y, right)?,
    ))
}

/// `id_Z × f : Z × X → Z × Y`, continuity re-verified.
pub fn product_with_identity(z: &FiniteSpace, f: &ContinuousMap) -> Result<ContinuousMap> {
    let zx = z.product(f.dom())?;
    let zy = z.product(f.cod())?;
    ContinuousMap::new(&zx, &zy, id_times_graph(z.n(), f))
}

fn id_times_graph(nz: usize, f: &ContinuousMap) -> Vec<usize> {
    let (nx, ny) = (f.dom().n(), f.cod().n());
    let mut g = Vec::with_capacity(nz * nx);
    for z in 0..nz {
        for x in 0..nx {
            g.push(z * ny + f.apply(x));
        }
    }
    g
}

/// Closedness decided twice: (A) images of closed sets are closed;
/// (B) for every open `U` of the domain, `{ b | fiber(b) ⊆ U }` is open.
pub fn closed_map_methods(f: &ContinuousMap) -> (bool, bool) {
    (closed_by_images(f), closed_by_fibers(f))
}

fn closed_by_images(f: &ContinuousMap) -> bool {
    let n = f.dom().n();
    f.dom()
        .opens()
        .iter()
        .all(|u| f.cod().is_closed(f.image_unchecked(u.complement(n))))
}

fn closed_by_fibers(f: &ContinuousMap) -> bool {
    let fibers = f.fibers();
    f.dom().opens().iter().all(|&u| {
        let inside: PointSet = (0..f.cod().n())
            .filter(|&b| fibers[b].is_subset(u))
            .collect();
        f.cod().is_open(inside)
    })
}

/// Whether `f` is a closed map. Panics if the two decision methods of
/// [`closed_map_methods`] disagree.
pub fn is_closed_map(f: &ContinuousMap) -> bool {
    let (a, b) = closed_map_methods(f);
    assert_eq!(a, b, "closed-map methods disagree on {f:?}");
    a
}

/// First closed set (canonical order of closeds) whose image is not closed.
pub fn closed_map_witness(f: &ContinuousMap) -> Option<PointSet> {
    f.dom()
        .closeds()
        .into_iter()
        .find(|&c| !f.cod().is_closed(f.image_unchecked(c)))
}

/// Verdicts of the five properness criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProperVerdict {
    /// `id_Z × f` closed for every swept `Z`.
    pub closed_products: bool,
    /// `{(z,y) | {z} × f⁻¹(y) ⊆ W}` open for every swept `Z` and open `W`.
    pub open_quantified: bool,
    /// Closed, and preimages of compact sets are compact.
    pub compact_preimages: bool,
    /// Closed, and fibers are compact.
    pub compact_fibers: bool,
    /// Fibers form a continuously indexed family of compact sets.
    pub indexed_fibers: bool,
}

impl ProperVerdict {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.closed_products,
            self.open_quantified,
            self.compact_preimages,
            self.compact_fibers,
            self.indexed_fibers,
        ]
    }

    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&v| v == a[0])
    }
}

/// Precomputed `Z × X` and `Z × Y` for every `Z` up to a bound, shared by
/// all maps `X → Y`.
pub struct ProperContext {
    dom: FiniteSpace,
    cod: FiniteSpace,
    squares: Vec<(FiniteSpace, FiniteSpace, FiniteSpace)>,
}

impl ProperContext {
    pub fn new(dom: &FiniteSpace, cod: &FiniteSpace, z_bound: usize) -> Result<Self> {
        if z_bound > EXHAUSTIVE_LIMIT {
            return Err(Error::BoundExceeded {
                what: "Z sweep for properness",
                requested: z_bound,
                limit: EXHAUSTIVE_LIMIT,
            });
        }
        let squares = spaces_up_to(z_bound)?
            .into_iter()
            .map(|z| {
                let zx = z.product(dom)?;
                let zy = z.product(cod)?;
                // materialise once; every map reuses them
                zx.opens();
                Ok((z, zx, zy))
            })
            .collect::<Result<_>>()?;
        Ok(ProperContext {
            dom: dom.clone(),
            cod: cod.clone(),
            squares,
        })
    }

    /// Whether every `id_Z × f` is closed, checked by both methods.
    /// Returns the verdict of the image method and whether the fiber method
    /// agreed on every `Z`.
    pub fn closed_products(&self, f: &ContinuousMap) -> (bool, bool) {
        let mut verdict = true;
        let mut agree = true;
        for (z, zx, zy) in &self.squares {
            let g = ContinuousMap::trusted(zx, zy, id_times_graph(z.n(), f));
            let (a, b) = closed_map_methods(&g);
            verdict &= a;
            agree &= a == b;
        }
        (verdict, agree)
    }

    /// Whether `{(z,y) | {z} × f⁻¹(y) ⊆ W}` is open for every `Z` and open `W`.
    pub fn open_quantified(&self, f: &ContinuousMap) -> bool {
        let fibers = f.fibers();
        let (nx, ny) = (self.dom.n(), self.cod.n());
        self.squares.iter().all(|(z, zx, zy)| {
            zx.opens().iter().all(|&w| {
                let mut t = PointSet::EMPTY;
                for zi in 0..z.n() {
                    let r = row(w, zi, nx);
                    for (y, fib) in fibers.iter().enumerate() {
                        if fib.is_subset(r) {
                            t = t.with(zi * ny + y);
                        }
                    }
                }
                zy.is_open(t)
            })
        })
    }

    pub fn check(&self, f: &ContinuousMap) -> Result<ProperVerdict> {
        Ok(self.check_detailed(f)?.0)
    }

    /// The five verdicts, plus whether the two closed-map methods agreed on
    /// every `id_Z × f`.
    pub fn check_detailed(&self, f: &ContinuousMap) -> Result<(ProperVerdict, bool)> {
        if f.dom() != &self.dom || f.cod() != &self.cod {
            return Err(Error::Mismatch("map does not match the properness context"));
        }
        let closed = is_closed_map(f);
        let fibers = f.fibers();
        let mut preimages_compact = true;
        for q in PointSet::all_subsets(self.cod.n()) {
            if is_compact_subset(&self.cod, q)? {
                preimages_compact &= is_compact_subset(&self.dom, f.preimage_unchecked(q))?;
            }
        }
        let mut fibers_compact = true;
        for &fib in &fibers {
            fibers_compact &= is_compact_subset(&self.dom, fib)?;
        }
        let family = IndexedFamily::new(&self.cod, &self.dom, fibers, Role::Compacts)?;
        let (closed_products, agree) = self.closed_products(f);
        Ok((
            ProperVerdict {
                closed_products,
                open_quantified: self.open_quantified(f),
                compact_preimages: closed && preimages_compact,
                compact_fibers: closed && fibers_compact,
                indexed_fibers: is_continuously_indexed(&family),
            },
            agree,
        ))
    }
}

/// All five properness criteria, with "every space Z" swept over the
/// topologies on at most `z_bound` points.
pub fn is_proper(f: &ContinuousMap, z_bound: usize) -> Result<ProperVerdict> {
    ProperContext::new(f.dom(), f.cod(), z_bound)?.check(f)
}

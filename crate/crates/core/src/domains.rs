//! Finite posets as dcpos, their Scott topology, and product criteria.

use crate::error::{Error, Result};
use crate::function_space::sierpinski_exponential_as_opens;
use crate::maps::ContinuousMap;
use crate::pointset::PointSet;
use crate::preorder::{enumerate_preorders, SpacePreorder};
use crate::space::{check_carrier, column, row, FiniteSpace};

/// A partial order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePoset(SpacePreorder);

impl FinitePoset {
    pub fn new(order: SpacePreorder) -> Result<Self> {
        if !order.is_antisymmetric() {
            return Err(Error::InvalidOrder("not antisymmetric".into()));
        }
        Ok(FinitePoset(order))
    }

    pub fn from_matrix(leq: &[Vec<bool>]) -> Result<Self> {
        Self::new(SpacePreorder::from_matrix(leq)?)
    }

    pub fn chain(n: usize) -> Self {
        FinitePoset(SpacePreorder::chain(n))
    }

    pub fn antichain(n: usize) -> Self {
        FinitePoset(SpacePreorder::antichain(n))
    }

    /// `⊥ < a, b < ⊤` with `⊥ = 0`, `a = 1`, `b = 2`, `⊤ = 3`.
    pub fn diamond() -> Self {
        let up = vec![
            PointSet::full(4),
            PointSet::from_points([1, 3]),
            PointSet::from_points([2, 3]),
            PointSet::singleton(3),
        ];
        FinitePoset(SpacePreorder::from_up_sets(up).expect("diamond"))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.0.leq(a, b)
    }

    pub fn order(&self) -> &SpacePreorder {
        &self.0
    }

    /// Least upper bound of `d` within the poset, if it exists.
    pub fn sup(&self, d: PointSet) -> Option<usize> {
        let uppers: Vec<usize> = (0..self.n())
            .filter(|&u| d.iter().all(|x| self.leq(x, u)))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&u| uppers.iter().all(|&v| self.leq(u, v)))
    }

    /// Nonempty subsets in which every pair has an upper bound inside.
    pub fn directed_subsets(&self) -> Vec<PointSet> {
        assert!(self.n() < 20, "directed-subset sweep is exponential");
        PointSet::all_subsets(self.n())
            .filter(|d| !d.is_empty())
            .filter(|&d| {
                d.iter().all(|a| {
                    d.iter()
                        .all(|b| d.iter().any(|c| self.leq(a, c) && self.leq(b, c)))
                })
            })
            .collect()
    }
}

/// Every partial order on `n` labelled elements.
pub fn enumerate_posets(n: usize) -> Result<Vec<FinitePoset>> {
    Ok(enumerate_preorders(n)?
        .into_iter()
        .filter(SpacePreorder::is_antisymmetric)
        .map(FinitePoset)
        .collect())
}

/// Scott topology, decided from its definition: upward closed and
/// inaccessible by suprema of directed subsets.
pub fn scott_topology(p: &FinitePoset) -> FiniteSpace {
    let directed: Vec<(PointSet, usize)> = p
        .directed_subsets()
        .into_iter()
        .filter_map(|d| p.sup(d).map(|s| (d, s)))
        .collect();
    let opens: Vec<PointSet> = PointSet::all_subsets(p.n())
        .filter(|&u| p.order().is_up_set(u))
        .filter(|&u| {
            directed
                .iter()
                .all(|&(d, s)| !u.contains(s) || d.intersects(u))
        })
        .collect();
    FiniteSpace::new(p.n(), opens).expect("Scott opens form a topology")
}

/// The functor Σ on objects.
pub fn sigma_functor(p: &FinitePoset) -> FiniteSpace {
    scott_topology(p)
}

/// The functor Σ on a monotone map `graph : dom → cod` (same graph,
/// continuity checked).
pub fn sigma_map(dom: &FinitePoset, cod: &FinitePoset, graph: Vec<usize>) -> Result<ContinuousMap> {
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
    for a in 0..dom.n() {
        for b in 0..dom.n() {
            if dom.leq(a, b) && !cod.leq(graph[a], graph[b]) {
                return Err(Error::NotMonotone { lo: a, hi: b });
            }
        }
    }
    ContinuousMap::new(&sigma_functor(dom), &sigma_functor(cod), graph)
}

/// Componentwise order on pairs, `(d, e)` at index `d * |E| + e`.
pub fn poset_product(d: &FinitePoset, e: &FinitePoset) -> Result<FinitePoset> {
    let (nd, ne) = (d.n(), e.n());
    check_carrier(nd * ne)?;
    let up = (0..nd)
        .flat_map(|a| (0..ne).map(move |b| (a, b)))
        .map(|(a, b)| {
            (0..nd)
                .flat_map(|c| (0..ne).map(move |f| (c, f)))
                .filter(|&(c, f)| d.leq(a, c) && e.leq(b, f))
                .map(|(c, f)| c * ne + f)
                .collect()
        })
        .collect();
    FinitePoset::new(SpacePreorder::from_up_sets(up)?)
}

/// The three conditions characterising open subsets of a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProdCharac {
    pub open_in_product: bool,
    pub by_rows: bool,
    pub by_columns: bool,
}

impl ProdCharac {
    pub fn agree(&self) -> bool {
        self.open_in_product == self.by_rows && self.by_rows == self.by_columns
    }
}

/// Per-factor data reused across many `W`: the opens of the factor as a
/// poset and the Scott-open families of that poset.
#[derive(Debug, Clone)]
pub struct FactorLattice {
    opens: Vec<PointSet>,
    scott_opens: Vec<PointSet>,
}

/// The open sets of `x` (ascending) ordered by inclusion.
pub fn opens_poset(x: &FiniteSpace) -> Result<FinitePoset> {
    let opens = x.opens();
    check_carrier(opens.len())?;
    let up = opens
        .iter()
        .map(|&u| {
            opens
                .iter()
                .enumerate()
                .filter(|(_, &v)| u.is_subset(v))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    FinitePoset::new(SpacePreorder::from_up_sets(up)?)
}

impl FactorLattice {
    pub fn new(x: &FiniteSpace) -> Result<Self> {
        let scott_opens = scott_topology(&opens_poset(x)?).opens().to_vec();
        Ok(FactorLattice {
            opens: x.opens().to_vec(),
            scott_opens,
        })
    }

    /// Scott-open families of opens, each a set of indices into the
    /// ascending list of opens.
    pub fn scott_opens(&self) -> &[PointSet] {
        &self.scott_opens
    }

    /// Sections must all be open, and every Scott-open family of opens must
    /// pull back to an open set of the other factor.
    fn check(&self, other: &FiniteSpace, sections: &[PointSet]) -> bool {
        let mut idx = Vec::with_capacity(sections.len());
        for s in sections {
            match self.opens.binary_search(s) {
                Ok(i) => idx.push(i),
                Err(_) => return false,
            }
        }
        self.scott_opens.iter().all(|fam| {
            let pulled: PointSet = idx
                .iter()
                .enumerate()
                .filter(|(_, &i)| fam.contains(i))
                .map(|(y, _)| y)
                .collect();
            other.is_open(pulled)
        })
    }
}

/// Conditions for `W ⊆ Y × X`: `W` open in the product; every row `U_y`
/// open in `X` with `{ y | U_y ∈ 𝒰 }` open for each Scott-open `𝒰` of the
/// opens of `X`; the same with columns and the opens of `Y`.
pub fn check_prod_charac(y: &FiniteSpace, x: &FiniteSpace, w: PointSet) -> Result<ProdCharac> {
    let ly = FactorLattice::new(y)?;
    let lx = FactorLattice::new(x)?;
    check_prod_charac_with(y, x, &ly, &lx, w)
}

pub fn check_prod_charac_with(
    y: &FiniteSpace,
    x: &FiniteSpace,
    ly: &FactorLattice,
    lx: &FactorLattice,
    w: PointSet,
) -> Result<ProdCharac> {
    let (ny, nx) = (y.n(), x.n());
    check_carrier(ny * nx)?;
    if !w.fits(ny * nx) {
        return Err(Error::PointOutOfRange {
            set: w,
            carrier: ny * nx,
        });
    }
    let product = y.product(x)?;
    let rows: Vec<PointSet> = (0..ny).map(|yi| row(w, yi, nx)).collect();
    let cols: Vec<PointSet> = (0..nx).map(|xi| column(w, xi, ny, nx)).collect();
    Ok(ProdCharac {
        open_in_product: product.is_open(w),
        by_rows: lx.check(y, &rows),
        by_columns: ly.check(x, &cols),
    })
}

/// Whether Σ sends the product of posets to the product of spaces.
pub fn check_sigma_products(d: &FinitePoset, e: &FinitePoset) -> Result<bool> {
    let left = scott_topology(&poset_product(d, e)?);
    let right = scott_topology(d).product(&scott_topology(e))?;
    Ok(left == right)
}

/// The opens-space topology on the opens of `x` equals the Scott topology of
/// the opens ordered by inclusion.
pub fn opens_space_is_scott(x: &FiniteSpace) -> Result<bool> {
    let o = sierpinski_exponential_as_opens(x)?;
    Ok(scott_topology(&opens_poset(x)?) == o.space)
}

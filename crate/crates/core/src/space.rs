//! Finite topological spaces.
//!
//! A space is stored by the minimal open neighbourhood of each point, which
//! determines the topology completely on a finite carrier. The complete,
//! canonically sorted family of opens is materialised on first use.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result, TopologyViolation};
use crate::pointset::{PointSet, MAX_POINTS};

#[derive(Clone)]
pub struct FiniteSpace(Arc<Inner>);

struct Inner {
    n: usize,
    /// `nbhd[x]` is the smallest open set containing `x`.
    nbhd: Vec<PointSet>,
    /// `hull[x] = { y | x ∈ nbhd[y] }`, the closure of `{x}`.
    hull: Vec<PointSet>,
    opens: OnceLock<Vec<PointSet>>,
    labels: Option<Vec<String>>,
}

/// Whether a space's diagonal (resp. its complement) is open in the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalClass {
    pub hausdorff: bool,
    pub discrete: bool,
}

impl FiniteSpace {
    /// Validates `opens` as a topology on `n` points. Duplicates are dropped
    /// and the family is sorted; anything else wrong is an error, never repaired.
    pub fn new(n: usize, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        check_carrier(n)?;
        let mut family: Vec<PointSet> = opens.into_iter().collect();
        for &u in &family {
            if !u.fits(n) {
                return Err(Error::PointOutOfRange { set: u, carrier: n });
            }
        }
        family.sort_unstable();
        family.dedup();
        if family.binary_search(&PointSet::EMPTY).is_err() {
            return Err(Error::NotATopology(TopologyViolation::MissingEmpty));
        }
        let full = PointSet::full(n);
        if family.binary_search(&full).is_err() {
            return Err(Error::NotATopology(TopologyViolation::MissingFull));
        }
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                if family.binary_search(&(a | b)).is_err() {
                    return Err(Error::NotATopology(TopologyViolation::Union(a, b)));
                }
                if family.binary_search(&(a & b)).is_err() {
                    return Err(Error::NotATopology(TopologyViolation::Intersection(a, b)));
                }
            }
        }
        let nbhd = (0..n)
            .map(|x| {
                family
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(full, |acc, &u| acc & u)
            })
            .collect();
        Ok(Self::build(n, nbhd, Some(family), None))
    }

    /// Builds a space from a minimal-neighbourhood assignment, checking that
    /// `x ∈ nbhd[x]` and that `y ∈ nbhd[x]` implies `nbhd[y] ⊆ nbhd[x]`.
    pub fn from_neighbourhoods(nbhd: Vec<PointSet>) -> Result<Self> {
        let n = nbhd.len();
        check_carrier(n)?;
        for (x, &u) in nbhd.iter().enumerate() {
            if !u.fits(n) {
                return Err(Error::PointOutOfRange { set: u, carrier: n });
            }
            if !u.contains(x) {
                return Err(Error::InvalidOrder(format!(
                    "neighbourhood {u} of point {x} does not contain it"
                )));
            }
            for y in u.iter() {
                if !nbhd[y].is_subset(u) {
                    return Err(Error::InvalidOrder(format!(
                        "neighbourhood {u} of {x} is not open: it contains {y} but not {}",
                        nbhd[y]
                    )));
                }
            }
        }
        Ok(Self::build(n, nbhd, None, None))
    }

    /// The coarsest topology in which every set of `subbasis` is open.
    pub fn from_subbasis(n: usize, subbasis: &[PointSet]) -> Result<Self> {
        check_carrier(n)?;
        let full = PointSet::full(n);
        let mut nbhd = vec![full; n];
        for &s in subbasis {
            if !s.fits(n) {
                return Err(Error::PointOutOfRange { set: s, carrier: n });
            }
            for x in s.iter() {
                nbhd[x] = nbhd[x] & s;
            }
        }
        Ok(Self::build(n, nbhd, None, None))
    }

    pub(crate) fn build(
        n: usize,
        nbhd: Vec<PointSet>,
        opens: Option<Vec<PointSet>>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut hull = vec![PointSet::EMPTY; n];
        for (y, u) in nbhd.iter().enumerate() {
            for x in u.iter() {
                hull[x] = hull[x].with(y);
            }
        }
        let cell = OnceLock::new();
        if let Some(o) = opens {
            let _ = cell.set(o);
        }
        FiniteSpace(Arc::new(Inner {
            n,
            nbhd,
            hull,
            opens: cell,
            labels,
        }))
    }

    pub fn discrete(n: usize) -> Self {
        Self::build(n, (0..n).map(PointSet::singleton).collect(), None, None)
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::build(n, vec![PointSet::full(n); n], None, None)
    }

    /// The one-point space.
    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Format(format!(
                "{} labels for {} points",
                labels.len(),
                self.n()
            )));
        }
        Ok(Self::build(
            self.n(),
            self.0.nbhd.clone(),
            self.0.opens.get().cloned(),
            Some(labels),
        ))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.n
    }

    #[inline]
    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.0.n)
    }

    /// Smallest open set containing `x`.
    #[inline]
    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.0.nbhd[x]
    }

    pub fn neighbourhoods(&self) -> &[PointSet] {
        &self.0.nbhd
    }

    /// Closure of the singleton `{x}`.
    #[inline]
    pub fn point_closure(&self, x: usize) -> PointSet {
        self.0.hull[x]
    }

    /// `x ⊑ y` in the specialization preorder: every open containing `x`
    /// contains `y`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.0.nbhd[x].contains(y)
    }

    /// Every open set, ascending by bit pattern.
    pub fn opens(&self) -> &[PointSet] {
        self.0
            .opens
            .get_or_init(|| enumerate_upsets(&self.0.nbhd, &self.0.hull))
    }

    pub fn closeds(&self) -> Vec<PointSet> {
        let n = self.n();
        let mut c: Vec<_> = self.opens().iter().map(|u| u.complement(n)).collect();
        c.sort_unstable();
        c
    }

    pub fn check_subset(&self, a: PointSet) -> Result<()> {
        if a.fits(self.n()) {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                set: a,
                carrier: self.n(),
            })
        }
    }

    pub fn check_point(&self, x: usize) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::PointIndexOutOfRange {
                point: x,
                carrier: self.n(),
            })
        }
    }

    /// Openness test; `a` must fit the carrier.
    #[inline]
    pub fn is_open(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.0.nbhd[x].is_subset(a))
    }

    #[inline]
    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement(self.n()))
    }

    /// Largest open set contained in `a`.
    pub fn interior(&self, a: PointSet) -> Result<PointSet> {
        self.check_subset(a)?;
        Ok(self.interior_unchecked(a))
    }

    #[inline]
    pub(crate) fn interior_unchecked(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.0.nbhd[x].is_subset(a)).collect()
    }

    /// Smallest closed set containing `a`.
    pub fn closure(&self, a: PointSet) -> Result<PointSet> {
        self.check_subset(a)?;
        Ok(self.closure_unchecked(a))
    }

    pub(crate) fn closure_unchecked(&self, a: PointSet) -> PointSet {
        a.iter()
            .fold(PointSet::EMPTY, |acc, x| acc | self.0.hull[x])
    }

    /// Smallest open set containing `a` (the intersection of all opens
    /// containing it).
    pub fn min_open_nbhd(&self, a: PointSet) -> Result<PointSet> {
        self.check_subset(a)?;
        Ok(self.min_open_nbhd_unchecked(a))
    }

    #[inline]
    pub(crate) fn min_open_nbhd_unchecked(&self, a: PointSet) -> PointSet {
        a.iter()
            .fold(PointSet::EMPTY, |acc, x| acc | self.0.nbhd[x])
    }

    /// Product space. The pair `(x, y)` lives at index `x * other.n() + y`.
    pub fn product(&self, other: &FiniteSpace) -> Result<FiniteSpace> {
        let (nx, ny) = (self.n(), other.n());
        let n = nx * ny;
        check_carrier(n)?;
        let mut nbhd = Vec::with_capacity(n);
        for x in 0..nx {
            for y in 0..ny {
                nbhd.push(box_set(self.neighbourhood(x), other.neighbourhood(y), ny));
            }
        }
        Ok(Self::build(n, nbhd, None, None))
    }

    /// Subspace on `a`, re-indexed to `0..|a|` in increasing order.
    pub fn subspace(&self, a: PointSet) -> Result<FiniteSpace> {
        self.check_subset(a)?;
        let nbhd = a
            .iter()
            .map(|x| compress(self.neighbourhood(x) & a, a))
            .collect();
        Ok(Self::build(a.len(), nbhd, None, None))
    }

    /// Hausdorff iff the complement of the diagonal is open in the square,
    /// discrete iff the diagonal is open.
    pub fn diagonal_class(&self) -> DiagonalClass {
        DiagonalClass {
            hausdorff: is_open_relation(self, self, |a, b| a != b),
            discrete: is_open_relation(self, self, |a, b| a == b),
        }
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n()).all(|x| self.neighbourhood(x) == PointSet::singleton(x))
    }
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.nbhd == other.0.nbhd
    }
}

impl Eq for FiniteSpace {}

impl Hash for FiniteSpace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.nbhd.hash(state);
    }
}

impl PartialOrd for FiniteSpace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by point count, then by the sorted open family.
impl Ord for FiniteSpace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.opens().cmp(other.opens()))
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSpace")
            .field("n", &self.n())
            .field("opens", &self.opens())
            .finish()
    }
}

pub(crate) fn check_carrier(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(Error::CarrierOverflow {
            needed: n,
            limit: MAX_POINTS,
        })
    } else {
        Ok(())
    }
}

/// `u × v` under the pair encoding `x * ny + y`.
#[inline]
pub fn box_set(u: PointSet, v: PointSet, ny: usize) -> PointSet {
    let row = v.bits();
    let mut bits = 0u128;
    for x in u.iter() {
        bits |= row << (x * ny);
    }
    PointSet::from_bits(bits)
}

/// Row `x` of a subset of a product `X × Y`, as a subset of `Y`.
#[inline]
pub fn row(w: PointSet, x: usize, ny: usize) -> PointSet {
    if ny == 0 {
        return PointSet::EMPTY;
    }
    PointSet::from_bits((w.bits() >> (x * ny)) & PointSet::full(ny).bits())
}

/// Column `y` of a subset of `X × Y`, as a subset of `X`.
pub fn column(w: PointSet, y: usize, nx: usize, ny: usize) -> PointSet {
    (0..nx).filter(|&x| w.contains(x * ny + y)).collect()
}

/// Packs the members of `set ∩ mask` into consecutive low bits, in order.
pub fn compress(set: PointSet, mask: PointSet) -> PointSet {
    mask.iter()
        .enumerate()
        .filter(|&(_, p)| set.contains(p))
        .map(|(i, _)| i)
        .collect()
}

/// Openness of the relation `{(a, b) | rel(a, b)}` in `X × Y`, without
/// materialising the product: every member must carry its basic box.
pub fn is_open_relation<F>(x: &FiniteSpace, y: &FiniteSpace, rel: F) -> bool
where
    F: Fn(usize, usize) -> bool,
{
    for a in 0..x.n() {
        for b in 0..y.n() {
            if rel(a, b) {
                for a2 in x.neighbourhood(a).iter() {
                    for b2 in y.neighbourhood(b).iter() {
                        if !rel(a2, b2) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Up-sets of the specialization preorder, i.e. the opens, by branching on
/// each point in turn: taking it forces its neighbourhood in, dropping it
/// forces its closure out.
fn enumerate_upsets(nbhd: &[PointSet], hull: &[PointSet]) -> Vec<PointSet> {
    fn go(
        i: usize,
        inside: PointSet,
        outside: PointSet,
        nbhd: &[PointSet],
        hull: &[PointSet],
        out: &mut Vec<PointSet>,
    ) {
        if i == nbhd.len() {
            out.push(inside);
            return;
        }
        if inside.contains(i) || outside.contains(i) {
            go(i + 1, inside, outside, nbhd, hull, out);
            return;
        }
        let grown = inside | nbhd[i];
        if !grown.intersects(outside) {
            go(i + 1, grown, outside, nbhd, hull, out);
        }
        let shrunk = outside | hull[i];
        if !shrunk.intersects(inside) {
            go(i + 1, inside, shrunk, nbhd, hull, out);
        }
    }
    let mut out = Vec::new();
    go(0, PointSet::EMPTY, PointSet::EMPTY, nbhd, hull, &mut out);
    out.sort_unstable();
    out
}

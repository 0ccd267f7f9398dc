//! Directed covers, compactness, the way-below relation, continuously
//! indexed families and the witness-space construction.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::preorder::{from_preorder, SpacePreorder};
use crate::space::{box_set, is_open_relation, row, FiniteSpace};

/// A directed family of open sets covering `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedCover {
    space: FiniteSpace,
    members: Vec<PointSet>,
    target: PointSet,
}

impl DirectedCover {
    /// Members are sorted and deduplicated. Rejects non-open members, a
    /// union that misses part of the target, and pairs with no member above
    /// their union (the empty family counts as not directed).
    pub fn new(space: &FiniteSpace, members: Vec<PointSet>, target: PointSet) -> Result<Self> {
        space.check_subset(target)?;
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            space.check_subset(m)?;
            if !space.is_open(m) {
                return Err(Error::NotOpen(m));
            }
        }
        if members.is_empty() {
            return Err(Error::NotDirected {
                a: PointSet::EMPTY,
                b: PointSet::EMPTY,
            });
        }
        let union = members.iter().fold(PointSet::EMPTY, |acc, &m| acc | m);
        if !target.is_subset(union) {
            return Err(Error::NotACover {
                uncovered: target - union,
            });
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if !members.iter().any(|&m| (a | b).is_subset(m)) {
                    return Err(Error::NotDirected { a, b });
                }
            }
        }
        Ok(DirectedCover {
            space: space.clone(),
            members,
            target,
        })
    }

    /// Adds all finite unions of `members`, then validates.
    pub fn directed_completion(
        space: &FiniteSpace,
        members: Vec<PointSet>,
        target: PointSet,
    ) -> Result<Self> {
        Self::new(space, union_closure(&members), target)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn target(&self) -> PointSet {
        self.target
    }

    pub fn union(&self) -> PointSet {
        self.members.iter().fold(PointSet::EMPTY, |acc, &m| acc | m)
    }
}

fn union_closure(gens: &[PointSet]) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = Vec::new();
    for &g in gens {
        let snapshot = out.len();
        for i in 0..snapshot {
            let u = out[i] | g;
            if !out.contains(&u) {
                out.push(u);
            }
        }
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out.sort_unstable();
    out
}

/// Nonempty antichains (under inclusion) of the open sets of `x`.
fn open_antichains(x: &FiniteSpace) -> Vec<Vec<PointSet>> {
    let opens = x.opens();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(i: usize, opens: &[PointSet], current: &mut Vec<PointSet>, out: &mut Vec<Vec<PointSet>>) {
        if i == opens.len() {
            if !current.is_empty() {
                out.push(current.clone());
            }
            return;
        }
        go(i + 1, opens, current, out);
        let u = opens[i];
        if current.iter().all(|&c| !c.is_subset(u) && !u.is_subset(c)) {
            current.push(u);
            go(i + 1, opens, current, out);
            current.pop();
        }
    }
    go(0, opens, &mut current, &mut out);
    out
}

/// Union-closed families generated by the antichains of opens: one
/// representative of every directed family up to its set of maximal members.
pub fn directed_families(x: &FiniteSpace) -> Vec<Vec<PointSet>> {
    let mut fams: Vec<Vec<PointSet>> = open_antichains(x)
        .iter()
        .map(|g| union_closure(g))
        .collect();
    fams.sort();
    fams.dedup();
    fams
}

/// Every enumerated directed open cover of `target`.
pub fn directed_covers(x: &FiniteSpace, target: PointSet) -> Result<Vec<DirectedCover>> {
    x.check_subset(target)?;
    Ok(directed_families(x)
        .into_iter()
        .filter(|f| target.is_subset(f.iter().fold(PointSet::EMPTY, |a, &m| a | m)))
        .map(|members| DirectedCover {
            space: x.clone(),
            members,
            target,
        })
        .collect())
}

/// Every directed open cover of `q` has a member containing `q`.
pub fn is_compact_subset(x: &FiniteSpace, q: PointSet) -> Result<bool> {
    way_below(x, q, q)
}

/// Both routes to compactness of a subset: the cover sweep and the fact that
/// every subset of a finite space is compact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompactnessCheck {
    pub by_covers: bool,
    pub by_finiteness: bool,
}

pub fn compactness_check(x: &FiniteSpace, q: PointSet) -> Result<CompactnessCheck> {
    Ok(CompactnessCheck {
        by_covers: is_compact_subset(x, q)?,
        by_finiteness: true,
    })
}

/// `s ≪ t`: every directed open cover of `t` has a member containing `s`.
pub fn way_below(x: &FiniteSpace, s: PointSet, t: PointSet) -> Result<bool> {
    x.check_subset(s)?;
    for cover in directed_covers(x, t)? {
        if !cover.members.iter().any(|&m| s.is_subset(m)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed form of `s ≪ t` on finite spaces: `s` lies in the smallest open
/// set containing `t`.
pub fn way_below_closed_form(x: &FiniteSpace, s: PointSet, t: PointSet) -> Result<bool> {
    x.check_subset(s)?;
    Ok(s.is_subset(x.min_open_nbhd(t)?))
}

/// `s ⋐ t`: `s` lies in the interior of `t`.
pub fn interior_containment(x: &FiniteSpace, s: PointSet, t: PointSet) -> Result<bool> {
    x.check_subset(s)?;
    Ok(s.is_subset(x.interior(t)?))
}

/// `{ z ∈ Z | ∀ q ∈ Q. (z, q) ∈ W }` for `W ⊆ Z × X`.
pub fn quantified_open(
    z: &FiniteSpace,
    x: &FiniteSpace,
    w: PointSet,
    q: PointSet,
) -> Result<PointSet> {
    let n = z.n() * x.n();
    crate::space::check_carrier(n)?;
    if !w.fits(n) {
        return Err(Error::PointOutOfRange { set: w, carrier: n });
    }
    x.check_subset(q)?;
    Ok(forall_section(z.n(), x.n(), w, q))
}

#[inline]
pub(crate) fn forall_section(nz: usize, nx: usize, w: PointSet, q: PointSet) -> PointSet {
    (0..nz).filter(|&zi| q.is_subset(row(w, zi, nx))).collect()
}

/// `{ z ∈ Z | {z} × Q ⊆ W }`, computed by box inclusion rather than by
/// quantifying pointwise.
pub fn box_section(nz: usize, nx: usize, w: PointSet, q: PointSet) -> PointSet {
    (0..nz)
        .filter(|&zi| box_set(PointSet::singleton(zi), q, nx).is_subset(w))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Opens,
    Compacts,
}

/// A family of subsets of `target` indexed by the points of `index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedFamily {
    index: FiniteSpace,
    target: FiniteSpace,
    assign: Vec<PointSet>,
    role: Role,
}

impl IndexedFamily {
    pub fn new(
        index: &FiniteSpace,
        target: &FiniteSpace,
        assign: Vec<PointSet>,
        role: Role,
    ) -> Result<Self> {
        if assign.len() != index.n() {
            return Err(Error::GraphLength {
                expected: index.n(),
                got: assign.len(),
            });
        }
        for (i, &s) in assign.iter().enumerate() {
            target.check_subset(s)?;
            if role == Role::Opens && !target.is_open(s) {
                return Err(Error::RoleViolation { index: i, set: s });
            }
        }
        Ok(IndexedFamily {
            index: index.clone(),
            target: target.clone(),
            assign,
            role,
        })
    }

    pub fn index(&self) -> &FiniteSpace {
        &self.index
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assign(&self) -> &[PointSet] {
        &self.assign
    }

    pub fn role(&self) -> Role {
        self.role
    }

    /// `{ (z, i) | z ∈ V_i }` inside `target × index`.
    pub fn graph(&self) -> Result<PointSet> {
        let (nt, ni) = (self.target.n(), self.index.n());
        crate::space::check_carrier(nt * ni)?;
        let mut g = PointSet::EMPTY;
        for (i, v) in self.assign.iter().enumerate() {
            for zi in v.iter() {
                g = g.with(zi * ni + i);
            }
        }
        Ok(g)
    }
}

/// Opens role: the graph is open in `target × index`. Compacts role: for
/// every open `U` of the target, `{ y | Q_y ⊆ U }` is open in the index.
pub fn is_continuously_indexed(f: &IndexedFamily) -> bool {
    match f.role {
        Role::Opens => is_open_relation(&f.target, &f.index, |zi, i| f.assign[i].contains(zi)),
        Role::Compacts => f.target.opens().iter().all(|&u| {
            let inside: PointSet = (0..f.index.n())
                .filter(|&y| f.assign[y].is_subset(u))
                .collect();
            f.index.is_open(inside)
        }),
    }
}

/// Intersection of an opens-role family over all index points (the full
/// target when the index is empty).
pub fn family_intersection(f: &IndexedFamily) -> Result<PointSet> {
    if f.role != Role::Opens {
        return Err(Error::Mismatch("intersection needs an opens-role family"));
    }
    Ok(f.assign.iter().fold(f.target.carrier(), |acc, &v| acc & v))
}

/// The set of all subsets of a space (all compact here) with the upper
/// Vietoris topology. Point `i` is the subset whose bit pattern is `i`.
#[derive(Debug, Clone)]
pub struct Hyperspace {
    pub base: FiniteSpace,
    pub space: FiniteSpace,
}

impl Hyperspace {
    /// `□U = { Q | Q ⊆ U }`.
    pub fn boxed(&self, u: PointSet) -> PointSet {
        PointSet::all_subsets(self.base.n())
            .filter(|q| q.is_subset(u))
            .map(|q| q.bits() as usize)
            .collect()
    }

    pub fn point_of(&self, q: PointSet) -> usize {
        q.bits() as usize
    }
}

pub fn upper_vietoris(x: &FiniteSpace) -> Result<Hyperspace> {
    if x.n() > 7 {
        return Err(Error::CarrierOverflow {
            needed: 1usize.checked_shl(x.n() as u32).unwrap_or(usize::MAX),
            limit: crate::pointset::MAX_POINTS,
        });
    }
    let n = 1usize << x.n();
    let proto = Hyperspace {
        base: x.clone(),
        space: FiniteSpace::point(),
    };
    let subbasis: Vec<PointSet> = x.opens().iter().map(|&u| proto.boxed(u)).collect();
    Ok(Hyperspace {
        base: x.clone(),
        space: FiniteSpace::from_subbasis(n, &subbasis)?,
    })
}

/// The space built from a directed cover whose points are the open sets of
/// `X`, together with the membership relation `W = { (U, x) | x ∈ U }`.
#[derive(Debug, Clone)]
pub struct WitnessSpace {
    /// Point `i` of `space` is the open set `points[i]` of `X`.
    pub points: Vec<PointSet>,
    pub space: FiniteSpace,
    /// `W` inside `space × X`.
    pub membership: PointSet,
    pub membership_open: bool,
    /// Index of `∪C` among `points`.
    pub union_point: usize,
    /// Indices of the cover's members among `points`.
    pub member_points: Vec<usize>,
    x: FiniteSpace,
}

/// What the construction yields for one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Punchline {
    /// `{ U | {U} × target ⊆ W }`.
    pub quantified: PointSet,
    pub quantified_open: bool,
    pub union_inside: bool,
    /// A member of the cover lying in `quantified`, if any.
    pub member: Option<PointSet>,
}

impl WitnessSpace {
    pub fn x(&self) -> &FiniteSpace {
        &self.x
    }

    pub fn punchline(&self, target: PointSet) -> Punchline {
        let nx = self.x.n();
        let quantified = forall_section(self.space.n(), nx, self.membership, target);
        let member = self
            .member_points
            .iter()
            .find(|&&i| quantified.contains(i))
            .map(|&i| self.points[i]);
        Punchline {
            quantified,
            quantified_open: self.space.is_open(quantified),
            union_inside: quantified.contains(self.union_point),
            member,
        }
    }
}

/// Candidate open sets of the witness space for an arbitrary family of opens
/// `members`: the up-sets `V` of the opens of `X` (under inclusion) such that
/// `∪members ∈ V` forces some member into `V`. Returned ascending, over the
/// point indexing of `x.opens()`.
pub fn witness_opens(x: &FiniteSpace, members: &[PointSet]) -> Result<Vec<PointSet>> {
    let points = x.opens();
    let index_of = |u: PointSet| points.binary_search(&u).map_err(|_| Error::NotOpen(u));
    let inclusion = SpacePreorder::from_up_sets(
        points
            .iter()
            .map(|&u| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| u.is_subset(v))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect(),
    )?;
    let union = members.iter().fold(PointSet::EMPTY, |acc, &m| acc | m);
    let union_point = index_of(union)?;
    let member_mask: PointSet = members
        .iter()
        .map(|&m| index_of(m))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    Ok(from_preorder(&inclusion)
        .opens()
        .iter()
        .copied()
        .filter(|v| !v.contains(union_point) || v.intersects(member_mask))
        .collect())
}

/// Builds the witness space of a directed cover and checks that the
/// membership relation is open in `Z × X`.
pub fn witness_space(x: &FiniteSpace, cover: &DirectedCover) -> Result<WitnessSpace> {
    if cover.space() != x {
        return Err(Error::Mismatch("cover belongs to another space"));
    }
    // revalidate: covers can be built through the enumerator
    DirectedCover::new(x, cover.members.clone(), cover.target)?;
    let points = x.opens().to_vec();
    let nz = points.len();
    let index_of = |u: PointSet| points.binary_search(&u).expect("member is open");
    let union_point = index_of(cover.union());
    let member_points: Vec<usize> = cover.members.iter().map(|&m| index_of(m)).collect();
    let space = FiniteSpace::new(nz, witness_opens(x, &cover.members)?)?;
    let nx = x.n();
    let membership: PointSet = points
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| u.iter().map(move |p| i * nx + p))
        .collect();
    let membership_open = space.product(x)?.is_open(membership);
    Ok(WitnessSpace {
        points,
        space,
        membership,
        membership_open,
        union_point,
        member_points,
        x: x.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{spaces_up_to, topologies};

    fn ps(p: &[usize]) -> PointSet {
        PointSet::from_points(p.iter().copied())
    }

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(2, [ps(&[]), ps(&[1]), ps(&[0, 1])]).unwrap()
    }

    /// Every family of opens (any subfamily at all) that is directed and
    /// covers `t`; practical only for small open families.
    fn all_directed_covers_brute(x: &FiniteSpace, t: PointSet) -> Vec<Vec<PointSet>> {
        let opens = x.opens();
        assert!(opens.len() <= 16);
        (1u32..(1 << opens.len()))
            .map(|code| {
                (0..opens.len())
                    .filter(|k| (code >> k) & 1 == 1)
                    .map(|k| opens[k])
                    .collect::<Vec<_>>()
            })
            .filter(|f| DirectedCover::new(x, f.clone(), t).is_ok())
            .collect()
    }

    #[test]
    fn compact_subset_examples() {
        let s = sierpinski();
        assert!(is_compact_subset(&s, ps(&[0])).unwrap());
        assert!(is_compact_subset(&s, PointSet::EMPTY).unwrap());
        for x in spaces_up_to(3).unwrap() {
            for q in PointSet::all_subsets(x.n()) {
                let c = compactness_check(&x, q).unwrap();
                assert!(c.by_covers && c.by_finiteness);
            }
        }
        assert!(is_compact_subset(&s, ps(&[3])).is_err());
    }

    #[test]
    fn way_below_examples() {
        let s = sierpinski();
        for t in PointSet::all_subsets(2) {
            assert!(way_below(&s, PointSet::EMPTY, t).unwrap());
        }
        assert!(way_below(&s, ps(&[1]), ps(&[0])).unwrap());
        let d = FiniteSpace::discrete(2);
        assert!(!way_below(&d, ps(&[0]), ps(&[1])).unwrap());
    }

    #[test]
    fn way_below_against_every_directed_subfamily() {
        // brute force over all subfamilies of opens, spaces up to 3 points
        for x in spaces_up_to(3).unwrap() {
            for t in PointSet::all_subsets(x.n()) {
                let covers = all_directed_covers_brute(&x, t);
                for s in PointSet::all_subsets(x.n()) {
                    let brute = covers.iter().all(|c| c.iter().any(|&m| s.is_subset(m)));
                    assert_eq!(way_below(&x, s, t).unwrap(), brute);
                    assert_eq!(way_below_closed_form(&x, s, t).unwrap(), brute);
                }
            }
        }
    }

    #[test]
    fn interior_containment_examples() {
        let s = sierpinski();
        for t in PointSet::all_subsets(2) {
            assert!(interior_containment(&s, PointSet::EMPTY, t).unwrap());
        }
        assert!(interior_containment(&s, ps(&[1]), ps(&[1])).unwrap());
        assert!(interior_containment(&s, ps(&[0]), ps(&[0, 1])).unwrap());
        assert!(!interior_containment(&s, ps(&[0]), ps(&[0])).unwrap());
    }

    #[test]
    fn quantified_open_examples() {
        let s = sierpinski();
        let full = PointSet::full(4);
        assert_eq!(
            quantified_open(&s, &s, full, ps(&[0, 1])).unwrap(),
            ps(&[0, 1])
        );
        for w in PointSet::all_subsets(4) {
            assert_eq!(
                quantified_open(&s, &s, w, PointSet::EMPTY).unwrap(),
                ps(&[0, 1])
            );
            for q in PointSet::all_subsets(2) {
                assert_eq!(
                    quantified_open(&s, &s, w, q).unwrap(),
                    box_section(2, 2, w, q)
                );
            }
        }
        // W = {(⊤,⊤)} = {3}
        assert_eq!(
            quantified_open(&s, &s, ps(&[3]), ps(&[1])).unwrap(),
            ps(&[1])
        );
        assert!(quantified_open(&s, &s, ps(&[4]), ps(&[1])).is_err());
    }

    #[test]
    fn indexed_family_examples() {
        let s = sierpinski();
        let pt = FiniteSpace::point();
        let u0 = ps(&[1]);
        let constant = IndexedFamily::new(&s, &s, vec![u0, u0], Role::Opens).unwrap();
        assert!(is_continuously_indexed(&constant));
        assert_eq!(family_intersection(&constant).unwrap(), u0);

        let good =
            IndexedFamily::new(&s, &s, vec![PointSet::EMPTY, ps(&[1])], Role::Opens).unwrap();
        assert!(is_continuously_indexed(&good));
        assert_eq!(good.graph().unwrap(), ps(&[3]));
        assert_eq!(family_intersection(&good).unwrap(), PointSet::EMPTY);

        let bad = IndexedFamily::new(&s, &s, vec![ps(&[1]), PointSet::EMPTY], Role::Opens).unwrap();
        assert!(!is_continuously_indexed(&bad));
        assert_eq!(bad.graph().unwrap(), ps(&[2]));

        let f = IndexedFamily::new(&s, &s, vec![ps(&[0, 1]), ps(&[1])], Role::Opens).unwrap();
        assert_eq!(family_intersection(&f).unwrap(), ps(&[1]));

        assert_eq!(
            IndexedFamily::new(&pt, &s, vec![ps(&[0])], Role::Opens).unwrap_err(),
            Error::RoleViolation {
                index: 0,
                set: ps(&[0])
            }
        );
        let comp = IndexedFamily::new(&pt, &s, vec![ps(&[0])], Role::Compacts).unwrap();
        assert!(family_intersection(&comp).is_err());
    }

    #[test]
    fn opens_role_agrees_with_product_graph() {
        for z in spaces_up_to(2).unwrap() {
            for i in spaces_up_to(2).unwrap() {
                let p = z.product(&i).unwrap();
                let choices = z.opens().to_vec();
                let k = choices.len();
                for code in 0..k.pow(i.n() as u32) {
                    let mut c = code;
                    let assign: Vec<_> = (0..i.n())
                        .map(|_| {
                            let v = choices[c % k];
                            c /= k;
                            v
                        })
                        .collect();
                    let f = IndexedFamily::new(&i, &z, assign, Role::Opens).unwrap();
                    assert_eq!(is_continuously_indexed(&f), p.is_open(f.graph().unwrap()));
                }
            }
        }
    }

    #[test]
    fn upper_vietoris_examples() {
        let h = upper_vietoris(&FiniteSpace::point()).unwrap();
        assert_eq!(h.space.n(), 2);
        assert_eq!(h.boxed(ps(&[0])), ps(&[0, 1]));
        assert_eq!(h.boxed(PointSet::EMPTY), ps(&[0]));
        // ∅ sits in every box, so it is the open point
        assert_eq!(h.space.opens(), &[ps(&[]), ps(&[0]), ps(&[0, 1])]);
        let s = sierpinski();
        let hs = upper_vietoris(&s).unwrap();
        assert_eq!(hs.space.n(), 4);
        assert_eq!(hs.boxed(ps(&[1])), ps(&[0, 2]));
        assert_eq!(hs.boxed(s.carrier()), PointSet::full(4));
        for &u in s.opens() {
            assert!(hs.space.is_open(hs.boxed(u)));
        }
        assert!(upper_vietoris(&FiniteSpace::discrete(8)).is_err());
    }

    #[test]
    fn witness_examples() {
        let s = sierpinski();
        let c = DirectedCover::new(&s, vec![ps(&[1]), ps(&[0, 1])], s.carrier()).unwrap();
        let w = witness_space(&s, &c).unwrap();
        assert_eq!(w.space.n(), 3);
        // points ∅ < {⊤} < {⊥,⊤}: up-sets of a 3-chain
        assert_eq!(
            w.space.opens(),
            &[ps(&[]), ps(&[2]), ps(&[1, 2]), ps(&[0, 1, 2])]
        );
        assert!(w.membership_open);

        let one = FiniteSpace::discrete(1);
        let c = DirectedCover::new(&one, vec![ps(&[0])], ps(&[0])).unwrap();
        let w = witness_space(&one, &c).unwrap();
        assert_eq!(w.space.n(), 2);
        // points ∅, {0}; the only pair is ({0}, 0)
        assert_eq!(w.membership, ps(&[1]));
        assert!(w.membership_open);

        let d2 = FiniteSpace::discrete(2);
        assert_eq!(
            DirectedCover::new(&d2, vec![ps(&[0]), ps(&[1])], d2.carrier()).unwrap_err(),
            Error::NotDirected {
                a: ps(&[0]),
                b: ps(&[1])
            }
        );
        let c = DirectedCover::directed_completion(&d2, vec![ps(&[0]), ps(&[1])], d2.carrier())
            .unwrap();
        assert_eq!(c.members(), &[ps(&[0]), ps(&[1]), ps(&[0, 1])]);
        let w = witness_space(&d2, &c).unwrap();
        // ∪C' is itself a member, so {∪C'} is open
        assert!(w.space.is_open(PointSet::singleton(w.union_point)));
        let p = w.punchline(d2.carrier());
        assert!(p.quantified_open && p.union_inside);
        assert_eq!(p.member, Some(ps(&[0, 1])));
    }

    #[test]
    fn witness_condition_two_bites_without_directedness() {
        // for the family {{0},{1}} on discrete(2) the up-set {{0,1}} holds
        // the union but no member, so it is not a candidate open
        let d2 = FiniteSpace::discrete(2);
        let points = d2.opens().to_vec();
        let top = PointSet::singleton(points.binary_search(&ps(&[0, 1])).unwrap());
        let opens = witness_opens(&d2, &[ps(&[0]), ps(&[1])]).unwrap();
        assert!(!opens.contains(&top));
        let pairs: Vec<_> = points
            .iter()
            .map(|&u| (u, ps(&[0, 1]).is_subset(u)))
            .collect();
        assert_eq!(pairs.iter().filter(|p| p.1).count(), 1);
        // enumerate every candidate V by hand and compare
        let members = PointSet::from_points([
            points.binary_search(&ps(&[0])).unwrap(),
            points.binary_search(&ps(&[1])).unwrap(),
        ]);
        let upward = |v: PointSet| {
            v.iter().all(|i| {
                points
                    .iter()
                    .enumerate()
                    .all(|(j, &u)| !points[i].is_subset(u) || v.contains(j))
            })
        };
        let expected: Vec<PointSet> = PointSet::all_subsets(points.len())
            .filter(|&v| upward(v) && (!v.intersects(top) || v.intersects(members)))
            .collect();
        assert_eq!(opens, expected);
        let completed = witness_opens(&d2, &[ps(&[0]), ps(&[1]), ps(&[0, 1])]).unwrap();
        assert!(completed.contains(&top));
    }

    #[test]
    fn directed_cover_validation() {
        let s = sierpinski();
        assert_eq!(
            DirectedCover::new(&s, vec![ps(&[0])], ps(&[0])).unwrap_err(),
            Error::NotOpen(ps(&[0]))
        );
        assert!(matches!(
            DirectedCover::new(&s, vec![ps(&[1])], ps(&[0, 1])),
            Err(Error::NotACover { .. })
        ));
        assert!(DirectedCover::new(&s, vec![], PointSet::EMPTY).is_err());
    }

    #[test]
    fn enumerated_covers_are_directed_and_distinct() {
        for x in topologies(3).unwrap() {
            for t in PointSet::all_subsets(3) {
                let covers = directed_covers(x, t).unwrap();
                for c in &covers {
                    DirectedCover::new(x, c.members().to_vec(), t).unwrap();
                }
                let mut ms: Vec<_> = covers.iter().map(|c| c.members().to_vec()).collect();
                ms.dedup();
                assert_eq!(ms.len(), covers.len());
            }
        }
    }
}

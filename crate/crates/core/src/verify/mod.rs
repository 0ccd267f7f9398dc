//! Exhaustive theorem checks over bounded families of finite spaces.
//!
//! Each [`TheoremId`] owns one checker. A checker sweeps the quantifier
//! structure of its claim over every labelled space up to the bounds and
//! records a JSON counterexample for each failed instance. Work is split
//! into a fixed list of partitions that does not depend on the worker
//! count, and partition results are merged in order, so reports are
//! byte-identical for any number of workers.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod compact;
mod functional;
mod proper;
mod relative;
mod sweep;

pub use sweep::Outcome;

/// Counterexamples kept in a report after canonical sorting.
pub const COUNTEREXAMPLE_CAP: usize = 32;

macro_rules! theorems {
    ($($variant:ident => $id:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum TheoremId {
            $(#[serde(rename = $id)] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $id,)*
                }
            }
        }
    };
}

theorems! {
    Sec2Intersection => "sec2-intersection",
    Sec2Universal => "sec2-universal",
    Sec2LemmaEquiv => "sec2-lemma-equiv",
    Sec3Exponential => "sec3-exponential",
    Sec3Quantifier => "sec3-quantifier",
    Sec4Indexed => "sec4-indexed",
    Sec4Witness => "sec4-witness",
    Sec4CompactSet => "sec4-compact-set",
    Sec5P1 => "sec5-p1",
    Sec5P2 => "sec5-p2",
    Sec5P3 => "sec5-p3",
    Sec5P4 => "sec5-p4",
    Sec5P5 => "sec5-p5",
    Sec5P6 => "sec5-p6",
    Sec5P7 => "sec5-p7",
    Sec6Proper => "sec6-proper",
    Sec6ClosedReform => "sec6-closed-reform",
    Sec6CompactHausdorffProper => "sec6-compact-hausdorff-proper",
    Sec7WaybelowEquiv => "sec7-waybelow-equiv",
    Sec7C1 => "sec7-c1",
    Sec7C2 => "sec7-c2",
    Sec7C3 => "sec7-c3",
    Sec7C4 => "sec7-c4",
    Sec8ProdCharac => "sec8-prod-charac",
    Sec8Ccompact => "sec8-ccompact",
    Sec8Projection => "sec8-projection",
    Sec8CompactCoincide => "sec8-compact-coincide",
    Sec8Sigma => "sec8-sigma",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Carrier bounds of a sweep. `None` marks a dimension the claim does not
/// quantify over.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_x: Option<usize>,
    pub max_y: Option<usize>,
    pub max_z: Option<usize>,
}

impl Bounds {
    pub const fn new(x: Option<usize>, y: Option<usize>, z: Option<usize>) -> Self {
        Bounds {
            max_x: x,
            max_y: y,
            max_z: z,
        }
    }

    pub(crate) fn x(&self) -> usize {
        self.max_x.unwrap_or(0)
    }

    pub(crate) fn y(&self) -> usize {
        self.max_y.unwrap_or(0)
    }

    pub(crate) fn z(&self) -> usize {
        self.max_z.unwrap_or(0)
    }

    /// Overlays `requested` onto `self`, keeping unused dimensions unset.
    fn overlay(self, requested: Bounds) -> Bounds {
        let pick = |base: Option<usize>, req: Option<usize>| base.map(|b| req.unwrap_or(b));
        Bounds {
            max_x: pick(self.max_x, requested.max_x),
            max_y: pick(self.max_y, requested.max_y),
            max_z: pick(self.max_z, requested.max_z),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub claim: String,
    pub bounds: Bounds,
    pub instances_checked: u64,
    pub verdict: Verdict,
    pub counterexamples_total: u64,
    /// Canonically sorted (by compact JSON text), at most
    /// [`COUNTEREXAMPLE_CAP`] entries.
    pub counterexamples: Vec<serde_json::Value>,
    pub notes: Vec<String>,
    /// Not serialized, so that reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        crate::json::pretty(&serde_json::to_value(self).expect("report serializes"))
    }
}

const Z_NOTE: &str =
    "\"every space Z\" is swept over all topologies on at most max_z labelled points";
const C_NOTE: &str =
    "C-products and C-exponentials are identified with topological ones, which coincide on finite spaces";

struct Checker {
    claim: &'static str,
    defaults: Bounds,
    limits: Bounds,
    notes: &'static [&'static str],
    run: fn(&Bounds) -> Outcome,
}

const fn b(x: Option<usize>, y: Option<usize>, z: Option<usize>) -> Bounds {
    Bounds::new(x, y, z)
}

fn checker(t: TheoremId) -> Checker {
    use TheoremId::*;
    let (s, n) = (Some, None);
    match t {
        Sec2Intersection => Checker {
            claim: "X is compact iff the intersection of every continuously X-indexed family of opens of any Z is open",
            defaults: b(s(3), n, s(3)),
            limits: b(s(4), n, s(3)),
            notes: &[Z_NOTE],
            run: compact::intersection,
        },
        Sec2Universal => Checker {
            claim: "X is compact iff {z | forall x. (z,x) in W} is open for every Z and open W of Z x X",
            defaults: b(s(3), n, s(3)),
            limits: b(s(4), n, s(3)),
            notes: &[Z_NOTE],
            run: compact::universal,
        },
        Sec2LemmaEquiv => Checker {
            claim: "closure under continuously X-indexed intersections, openness of universal sections, and closedness of Z x X -> Z are equivalent",
            defaults: b(s(3), n, s(3)),
            limits: b(s(4), n, s(3)),
            notes: &[],
            run: compact::lemma_equiv,
        },
        Sec3Exponential => Checker {
            claim: "evaluation Y^X x X -> Y is continuous and every continuous h: Z x X -> Y has a continuous transpose Z -> Y^X",
            defaults: b(s(3), s(3), s(3)),
            limits: b(s(3), s(3), s(3)),
            notes: &[Z_NOTE],
            run: functional::exponential_laws,
        },
        Sec3Quantifier => Checker {
            claim: "X is compact iff the universal quantifier S^X -> S is continuous",
            defaults: b(s(4), n, s(3)),
            limits: b(s(4), n, s(3)),
            notes: &[
                Z_NOTE,
                "the converse direction is replayed through transposes of characteristic maps of opens W of Z x X",
            ],
            run: functional::quantifier,
        },
        Sec4Indexed => Checker {
            claim: "for a continuously indexed family of compacts Q_y, {(z,y) | {z} x Q_y in W} is open for every Z and open W; continuity equals continuity into the upper Vietoris hyperspace",
            defaults: b(s(3), s(3), s(3)),
            limits: b(s(3), s(3), s(3)),
            notes: &[Z_NOTE],
            run: compact::indexed,
        },
        Sec4Witness => Checker {
            claim: "the witness space of a directed cover is a topology, W = {(U,x) | x in U} is open, and some member contains the target",
            defaults: b(s(4), n, n),
            limits: b(s(4), n, n),
            notes: &[],
            run: compact::witness,
        },
        Sec4CompactSet => Checker {
            claim: "Q is compact iff {z | forall q in Q. (z,q) in W} is open iff {z | {z} x Q in W} is open, for all Z and open W",
            defaults: b(s(3), n, s(3)),
            limits: b(s(4), n, s(3)),
            notes: &[Z_NOTE],
            run: compact::compact_set,
        },
        Sec5P1 => Checker {
            claim: "compact subsets of Hausdorff spaces are closed",
            defaults: b(s(4), n, n),
            limits: b(s(4), n, n),
            notes: &["instances are (X, Q) pairs with X Hausdorff"],
            run: compact::p1,
        },
        Sec5P2 => Checker {
            claim: "closed subsets of compact spaces are compact",
            defaults: b(s(3), n, s(3)),
            limits: b(s(4), n, s(3)),
            notes: &[Z_NOTE],
            run: compact::p2,
        },
        Sec5P3 => Checker {
            claim: "continuous images of compact sets are compact",
            defaults: b(s(3), s(3), s(3)),
            limits: b(s(3), s(3), s(3)),
            notes: &[Z_NOTE],
            run: compact::p3,
        },
        Sec5P4 => Checker {
            claim: "if X and Y are compact then so is X x Y",
            defaults: b(s(3), s(3), s(3)),
            limits: b(s(3), s(3), s(3)),
            notes: &[
                Z_NOTE,
                "triple products Z x X x Y are encoded as Z x (X x Y), which coincides bitwise with (Z x X) x Y",
            ],
            run: compact::p4,
        },
        Sec5P5 => Checker {
            claim: "if Y is Hausdorff then so is Y^X",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &["instances are pairs with Y Hausdorff"],
            run: functional::p5,
        },
        Sec5P6 => Checker {
            claim: "if X is compact and Y is discrete then Y^X is discrete",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &["instances are pairs with Y discrete"],
            run: functional::p6,
        },
        Sec5P7 => Checker {
            claim: "for compact Q and open V, N(Q,V) = {f | f(Q) in V} is open in Y^X",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &[],
            run: functional::p7,
        },
        Sec6Proper => Checker {
            claim: "the five characterizations of proper maps agree, and both closed-map tests agree on every id_Z x f",
            defaults: b(s(3), s(3), s(3)),
            limits: b(s(3), s(3), s(3)),
            notes: &[Z_NOTE],
            run: proper::proper,
        },
        Sec6ClosedReform => Checker {
            claim: "g is closed iff {b | g^-1{b} in U} is open for every open U; that set equals B minus g(A minus U)",
            defaults: b(s(3), s(3), n),
            limits: b(s(4), s(4), n),
            notes: &[],
            run: proper::closed_reform,
        },
        Sec6CompactHausdorffProper => Checker {
            claim: "every continuous map from a compact space to a Hausdorff space is proper",
            defaults: b(s(3), s(3), s(3)),
            limits: b(s(3), s(3), s(3)),
            notes: &[Z_NOTE, "instances are maps with Hausdorff codomain"],
            run: proper::compact_hausdorff,
        },
        Sec7WaybelowEquiv => Checker {
            claim: "S << T iff quantified sections satisfy T-section inside the interior of the S-section iff the neighbourhood form iff the M, N form",
            defaults: b(s(3), s(4), s(3)),
            limits: b(s(3), s(4), s(3)),
            notes: &[
                Z_NOTE,
                "max_y bounds the separate sweep comparing definitional way-below with S inside the least open neighbourhood of T",
                "the neighbourhood form is also replayed on the witness space of every directed cover of T",
            ],
            run: relative::equivalence,
        },
        Sec7C1 => Checker {
            claim: "a closed F with F << X is compact",
            defaults: b(s(4), n, n),
            limits: b(s(4), n, n),
            notes: &[],
            run: relative::c1,
        },
        Sec7C2 => Checker {
            claim: "in a Hausdorff space S << T implies closure(S) in T",
            defaults: b(s(4), n, n),
            limits: b(s(4), n, n),
            notes: &[],
            run: relative::c2,
        },
        Sec7C3 => Checker {
            claim: "continuous maps preserve way-below: S << T implies f(S) << f(T)",
            defaults: b(s(3), s(3), n),
            limits: b(s(4), s(3), n),
            notes: &[],
            run: relative::c3,
        },
        Sec7C4 => Checker {
            claim: "S << T in X and A << B in Y imply S x A << T x B in X x Y",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &[
                "way-below in X x Y is decided by cover enumeration when X x Y has at most 4 points, by the least-open-neighbourhood form otherwise",
            ],
            run: relative::c4,
        },
        Sec8ProdCharac => Checker {
            claim: "W in Y x X is open iff its rows are open and pull back Scott-open families to opens, iff the same holds for its columns",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &[C_NOTE, "every subset W of Y x X is checked"],
            run: functional::prod_charac,
        },
        Sec8Ccompact => Checker {
            claim: "{U | Q in U} open in the opens space iff all sections {y | {y} x Q in W} are open iff A_Q is continuous",
            defaults: b(s(3), s(3), n),
            limits: b(s(4), s(3), n),
            notes: &[C_NOTE, "max_y bounds the spaces Y of the section condition"],
            run: functional::ccompact,
        },
        Sec8Projection => Checker {
            claim: "X is C-compact iff every projection Y x X -> Y is closed",
            defaults: b(s(3), s(3), n),
            limits: b(s(4), s(3), n),
            notes: &[C_NOTE],
            run: functional::projection,
        },
        Sec8CompactCoincide => Checker {
            claim: "compact and C-compact subsets coincide; the opens space carries the Scott topology with open membership; the Isbell and exponential topologies coincide",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &[C_NOTE, "max_y bounds the codomains of the Isbell comparison"],
            run: functional::compact_coincide,
        },
        Sec8Sigma => Checker {
            claim: "Scott topology preserves finite products of posets, and monotone maps are exactly the Scott-continuous ones",
            defaults: b(s(3), s(3), n),
            limits: b(s(3), s(3), n),
            notes: &["max_x and max_y bound the two posets"],
            run: functional::sigma,
        },
    }
}

impl TheoremId {
    pub fn claim(self) -> &'static str {
        checker(self).claim
    }

    pub fn default_bounds(self) -> Bounds {
        checker(self).defaults
    }

    pub fn limits(self) -> Bounds {
        checker(self).limits
    }

    /// Default bounds overlaid with `requested`, checked against the limits.
    pub fn resolve(self, requested: Bounds) -> Result<Bounds> {
        let sp = checker(self);
        let resolved = sp.defaults.overlay(requested);
        let dims = [
            ("max_x", resolved.max_x, sp.limits.max_x),
            ("max_y", resolved.max_y, sp.limits.max_y),
            ("max_z", resolved.max_z, sp.limits.max_z),
        ];
        for (what, got, limit) in dims {
            if let (Some(g), Some(l)) = (got, limit) {
                if g > l {
                    return Err(Error::BoundExceeded {
                        what,
                        requested: g,
                        limit: l,
                    });
                }
            }
        }
        Ok(resolved)
    }
}

/// Runs the checker of `t` with `workers` threads (`0` picks the rayon
/// default).
pub fn verify(t: TheoremId, requested: Bounds, workers: usize) -> Result<VerificationReport> {
    let bounds = t.resolve(requested)?;
    let sp = checker(t);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Format(e.to_string()))?;
    let start = Instant::now();
    let outcome = pool.install(|| (sp.run)(&bounds));
    let wall_time = start.elapsed();
    let (total, counterexamples) = outcome.finish(COUNTEREXAMPLE_CAP);
    Ok(VerificationReport {
        theorem: t,
        claim: sp.claim.to_string(),
        bounds,
        instances_checked: outcome.instances,
        verdict: if total == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        counterexamples_total: total,
        counterexamples,
        notes: sp.notes.iter().map(|s| s.to_string()).collect(),
        wall_time,
    })
}

/// Every checker at its default bounds, in [`TheoremId::ALL`] order.
pub fn verify_all(workers: usize) -> Result<Vec<VerificationReport>> {
    TheoremId::ALL
        .iter()
        .map(|&t| verify(t, Bounds::default(), workers))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_are_unique() {
        let mut seen = std::collections::HashSet::new();
        for &t in TheoremId::ALL {
            assert!(seen.insert(t.as_str()));
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            assert_eq!(
                serde_json::to_string(&t).unwrap(),
                format!("\"{}\"", t.as_str())
            );
        }
        assert_eq!(
            "sec9-nothing".parse::<TheoremId>().unwrap_err(),
            Error::UnknownTheorem("sec9-nothing".into())
        );
    }

    #[test]
    fn coverage_of_claims() {
        // one id per numbered claim: 3 + 2 + 3 + 7 + 3 + 5 + 5
        assert_eq!(TheoremId::ALL.len(), 28);
        for prefix in [
            "sec2-", "sec3-", "sec4-", "sec5-", "sec6-", "sec7-", "sec8-",
        ] {
            assert!(TheoremId::ALL
                .iter()
                .any(|t| t.as_str().starts_with(prefix)));
        }
        for p in 1..=7 {
            assert!(format!("sec5-p{p}").parse::<TheoremId>().is_ok());
        }
        for c in 1..=4 {
            assert!(format!("sec7-c{c}").parse::<TheoremId>().is_ok());
        }
        for &t in TheoremId::ALL {
            let d = t.default_bounds();
            assert_eq!(t.resolve(Bounds::default()).unwrap(), d);
            assert!(d.max_x.is_some());
        }
    }

    #[test]
    fn bounds_resolution() {
        let t = TheoremId::Sec5P4;
        let r = t.resolve(Bounds::new(Some(1), Some(1), Some(1))).unwrap();
        assert_eq!(r, Bounds::new(Some(1), Some(1), Some(1)));
        assert!(matches!(
            t.resolve(Bounds::new(Some(9), None, None)),
            Err(Error::BoundExceeded { what: "max_x", .. })
        ));
        // unused dimensions stay unset
        let r = TheoremId::Sec4Witness
            .resolve(Bounds::new(Some(2), Some(3), Some(3)))
            .unwrap();
        assert_eq!(r, Bounds::new(Some(2), None, None));
    }

    #[test]
    fn small_instances_pass() {
        let one = Bounds::new(Some(1), Some(1), Some(1));
        for &t in TheoremId::ALL {
            let r = verify(t, one, 1).unwrap();
            assert!(r.passed(), "{t}: {:?}", r.counterexamples);
        }
        let r = verify(TheoremId::Sec2LemmaEquiv, one, 1).unwrap();
        assert!(r.instances_checked >= 1);
    }

    #[test]
    fn larger_bounds_pass() {
        let r = verify(TheoremId::Sec5P4, Bounds::new(Some(2), Some(2), Some(2)), 2).unwrap();
        assert!(r.passed());
        let r = verify(TheoremId::Sec8Sigma, Bounds::default(), 2).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn report_is_worker_independent() {
        let bounds = Bounds::new(Some(2), Some(2), Some(2));
        for t in [TheoremId::Sec6Proper, TheoremId::Sec7WaybelowEquiv] {
            let a = verify(t, bounds, 1).unwrap().to_json();
            let b = verify(t, bounds, 3).unwrap().to_json();
            assert_eq!(a, b);
        }
    }
}

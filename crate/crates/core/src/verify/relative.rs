use serde_json::json;

use super::sweep::{pairs, set, spaces, sv, sweep, z_products, Outcome};
use super::Bounds;
use crate::compactness::{
    directed_covers, forall_section, is_compact_subset, way_below, way_below_closed_form,
    witness_space,
};
use crate::enumerate::EXHAUSTIVE_LIMIT;
use crate::json::MapJson;
use crate::maps::continuous_maps;
use crate::pointset::PointSet;
use crate::space::{box_set, row, FiniteSpace};

fn wb(x: &FiniteSpace, s: PointSet, t: PointSet) -> bool {
    way_below(x, s, t).expect("subsets of the carrier")
}

/// `wb[s][t]` for all subsets, by cover enumeration.
fn way_below_table(x: &FiniteSpace) -> Vec<Vec<bool>> {
    let subsets: Vec<PointSet> = PointSet::all_subsets(x.n()).collect();
    subsets
        .iter()
        .map(|&s| subsets.iter().map(|&t| wb(x, s, t)).collect())
        .collect()
}

/// The section, neighbourhood and containment forms of way-below for every
/// pair `(S, T)`, accumulated over every `Z` in `zs`. Indexed `[s][t]`.
struct Conditions {
    by_sections: Vec<Vec<bool>>,
    by_neighbourhoods: Vec<Vec<bool>>,
    by_containment: Vec<Vec<bool>>,
}

fn conditions(x: &FiniteSpace, zs: &[(FiniteSpace, FiniteSpace)]) -> Conditions {
    let nx = x.n();
    let k = 1usize << nx;
    let subsets: Vec<PointSet> = PointSet::all_subsets(nx).collect();
    let mut c = Conditions {
        by_sections: vec![vec![true; k]; k],
        by_neighbourhoods: vec![vec![true; k]; k],
        by_containment: vec![vec![true; k]; k],
    };
    for (z, zx) in zs {
        let nz = z.n();
        for &w in zx.opens() {
            let secs: Vec<PointSet> = subsets
                .iter()
                .map(|&q| forall_section(nz, nx, w, q))
                .collect();
            let ints: Vec<PointSet> = secs
                .iter()
                .map(|&v| z.interior(v).expect("subset"))
                .collect();
            for (row, &int_s) in c.by_sections.iter_mut().zip(&ints) {
                for (cell, &sec_t) in row.iter_mut().zip(&secs) {
                    *cell &= sec_t.is_subset(int_s);
                }
            }
            // {z} × T ⊆ W forces N(z) × S ⊆ W
            for zi in 0..nz {
                let r = row(w, zi, nx);
                let nbhd_rows = z
                    .neighbourhood(zi)
                    .iter()
                    .fold(PointSet::full(nx), |acc, z2| acc & row(w, z2, nx));
                for (ti, &t) in subsets.iter().enumerate() {
                    if t.is_subset(r) {
                        for (si, &s) in subsets.iter().enumerate() {
                            c.by_neighbourhoods[si][ti] &= s.is_subset(nbhd_rows);
                        }
                    }
                }
            }
        }
        // every N ⊆ Z × X and every M ⊆ int(N)
        for n_set in PointSet::all_subsets(zx.n()) {
            let int_n = zx.interior(n_set).expect("subset");
            let right: Vec<PointSet> = subsets
                .iter()
                .map(|&s| {
                    z.interior(forall_section(nz, nx, n_set, s))
                        .expect("subset")
                })
                .collect();
            for m in int_n.subsets() {
                for (ti, &t) in subsets.iter().enumerate() {
                    let left = forall_section(nz, nx, m, t);
                    for (row, &r) in c.by_containment.iter_mut().zip(&right) {
                        row[ti] &= left.is_subset(r);
                    }
                }
            }
        }
    }
    c
}

pub fn equivalence(b: &Bounds) -> Outcome {
    let max_z = b.z();
    let mut out = sweep(&spaces(b.x()), |x, out| {
        let table = way_below_table(x);
        let c = conditions(x, &z_products(x, max_z));
        let subsets: Vec<PointSet> = PointSet::all_subsets(x.n()).collect();
        for (si, &s) in subsets.iter().enumerate() {
            for (ti, &t) in subsets.iter().enumerate() {
                let all = [
                    table[si][ti],
                    c.by_sections[si][ti],
                    c.by_neighbourhoods[si][ti],
                    c.by_containment[si][ti],
                ];
                out.check(
                    all.iter().all(|&v| v == all[0]),
                    || json!({"x": sv(x), "s": set(s), "t": set(t), "conditions": all}),
                );
                // the neighbourhood form on the witness space of each cover
                for cover in directed_covers(x, t).expect("subset") {
                    let ws = witness_space(x, &cover).expect("valid cover");
                    let nbhd = ws.space.neighbourhood(ws.union_point);
                    let holds = nbhd.iter().all(|u| s.is_subset(ws.points[u]));
                    let member = cover.members().iter().any(|&m| s.is_subset(m));
                    out.check((!table[si][ti] || holds) && (!holds || member), || {
                        json!({"x": sv(x), "s": set(s), "t": set(t), "members": cover.members().iter().map(|&m| set(m)).collect::<Vec<_>>()})
                    });
                }
            }
        }
        // S' ⊆ S ≪ T ⊆ T' gives S' ≪ T'
        for (si, &s) in subsets.iter().enumerate() {
            for (ti, &t) in subsets.iter().enumerate() {
                if !table[si][ti] {
                    continue;
                }
                for s2 in s.subsets() {
                    for (t2i, &t2) in subsets.iter().enumerate() {
                        if t.is_subset(t2) {
                            out.check(table[s2.bits() as usize][t2i], || {
                                json!({"x": sv(x), "s": set(s), "t": set(t), "s_smaller": set(s2), "t_larger": set(t2)})
                            });
                        }
                    }
                }
            }
        }
    });
    out.merge(sweep(&spaces(b.y()), |x, out| {
        for s in PointSet::all_subsets(x.n()) {
            for t in PointSet::all_subsets(x.n()) {
                let d = wb(x, s, t);
                let c = way_below_closed_form(x, s, t).expect("subset");
                out.check(d == c, || {
                    json!({"x": sv(x), "s": set(s), "t": set(t), "definitional": d, "closed_form": c})
                });
            }
        }
    }));
    out
}

pub fn c1(b: &Bounds) -> Outcome {
    sweep(&spaces(b.x()), |x, out| {
        for f in x.closeds() {
            if wb(x, f, x.carrier()) {
                let ok = is_compact_subset(x, f).expect("subset");
                out.check(ok, || json!({"x": sv(x), "f": set(f)}));
            }
        }
    })
}

pub fn c2(b: &Bounds) -> Outcome {
    sweep(&spaces(b.x()), |x, out| {
        if !x.diagonal_class().hausdorff {
            return;
        }
        for s in PointSet::all_subsets(x.n()) {
            for t in PointSet::all_subsets(x.n()) {
                if wb(x, s, t) {
                    let cl = x.closure(s).expect("subset");
                    out.check(
                        cl.is_subset(t),
                        || json!({"x": sv(x), "s": set(s), "t": set(t)}),
                    );
                }
            }
        }
    })
}

pub fn c3(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let table = way_below_table(x);
        let target = way_below_table(y);
        for f in continuous_maps(x, y) {
            for s in PointSet::all_subsets(x.n()) {
                for t in PointSet::all_subsets(x.n()) {
                    if !table[s.bits() as usize][t.bits() as usize] {
                        continue;
                    }
                    let fs = f.image(s).expect("subset");
                    let ft = f.image(t).expect("subset");
                    out.check(
                        target[fs.bits() as usize][ft.bits() as usize],
                        || json!({"map": MapJson::from(&f), "s": set(s), "t": set(t)}),
                    );
                }
            }
        }
    })
}

pub fn c4(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let xy = x.product(y).expect("sweep carriers fit");
        let definitional = xy.n() <= EXHAUSTIVE_LIMIT;
        let tx = way_below_table(x);
        let ty = way_below_table(y);
        let (nx, ny) = (x.n(), y.n());
        for s in PointSet::all_subsets(nx) {
            for t in PointSet::all_subsets(nx) {
                if !tx[s.bits() as usize][t.bits() as usize] {
                    continue;
                }
                for a in PointSet::all_subsets(ny) {
                    for bb in PointSet::all_subsets(ny) {
                        if !ty[a.bits() as usize][bb.bits() as usize] {
                            continue;
                        }
                        let sa = box_set(s, a, ny);
                        let tb = box_set(t, bb, ny);
                        let ok = if definitional {
                            wb(&xy, sa, tb)
                        } else {
                            way_below_closed_form(&xy, sa, tb).expect("subset")
                        };
                        out.check(ok, || {
                            json!({"x": sv(x), "y": sv(y), "s": set(s), "t": set(t), "a": set(a), "b": set(bb)})
                        });
                    }
                }
            }
        }
    })
}

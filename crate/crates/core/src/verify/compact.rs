use serde_json::json;

use super::sweep::{pairs, set, spaces, sv, sweep, z_products, Outcome};
use super::Bounds;
use crate::compactness::{
    box_section, directed_covers, family_intersection, forall_section, is_compact_subset,
    is_continuously_indexed, upper_vietoris, witness_space, IndexedFamily, Role,
};
use crate::maps::{closed_map_methods, continuous_maps, projections, ContinuousMap};
use crate::pointset::PointSet;
use crate::space::{box_set, column, is_open_relation, row, FiniteSpace};

fn compact(x: &FiniteSpace, q: PointSet) -> bool {
    is_compact_subset(x, q).expect("subset of the carrier")
}

/// Compactness of every space by the cover sweep.
fn spaces_compact(xs: &[FiniteSpace]) -> Outcome {
    sweep(xs, |x, out| {
        out.check(
            compact(x, x.carrier()),
            || json!({"x": sv(x), "reason": "not compact"}),
        )
    })
}

pub fn intersection(b: &Bounds) -> Outcome {
    let xs = spaces(b.x());
    let mut out = spaces_compact(&xs);
    out.merge(sweep(&pairs(&spaces(b.z()), &xs), |(z, x), out| {
        let zx = z.product(x).expect("sweep carriers fit");
        let (nz, nx) = (z.n(), x.n());
        for &w in zx.opens() {
            let assign: Vec<PointSet> = (0..nx).map(|xi| column(w, xi, nz, nx)).collect();
            let ok = match IndexedFamily::new(x, z, assign, Role::Opens) {
                Ok(f) => {
                    is_continuously_indexed(&f)
                        && f.graph().ok() == Some(w)
                        && z.is_open(family_intersection(&f).expect("opens role"))
                }
                Err(_) => false,
            };
            out.check(ok, || json!({"z": sv(z), "x": sv(x), "w": set(w)}));
        }
    }));
    out
}

pub fn universal(b: &Bounds) -> Outcome {
    let xs = spaces(b.x());
    let mut out = spaces_compact(&xs);
    out.merge(sweep(&pairs(&spaces(b.z()), &xs), |(z, x), out| {
        let zx = z.product(x).expect("sweep carriers fit");
        for &w in zx.opens() {
            let v = forall_section(z.n(), x.n(), w, x.carrier());
            out.check(
                z.is_open(v),
                || json!({"z": sv(z), "x": sv(x), "w": set(w), "section": set(v)}),
            );
        }
    }));
    out
}

/// Every assignment of opens of `z` to the points of `x`.
fn open_assignments(z: &FiniteSpace, nx: usize, mut visit: impl FnMut(&[PointSet])) {
    let opens = z.opens();
    let mut idx = vec![0usize; nx];
    loop {
        let a: Vec<PointSet> = idx.iter().map(|&i| opens[i]).collect();
        visit(&a);
        let mut k = 0;
        while k < nx {
            idx[k] += 1;
            if idx[k] < opens.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == nx {
            return;
        }
    }
}

pub fn lemma_equiv(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.z()), &spaces(b.x())), |(z, x), out| {
        let mut c1 = true;
        open_assignments(z, x.n(), |a| {
            let f = IndexedFamily::new(x, z, a.to_vec(), Role::Opens).expect("opens");
            if is_continuously_indexed(&f) && !z.is_open(family_intersection(&f).expect("opens")) {
                c1 = false;
            }
        });
        let zx = z.product(x).expect("sweep carriers fit");
        let c2 = zx
            .opens()
            .iter()
            .all(|&w| z.is_open(forall_section(z.n(), x.n(), w, x.carrier())));
        let (proj, _) = projections(z, x).expect("sweep carriers fit");
        let (c3, c3_fibers) = closed_map_methods(&proj);
        out.check(c1 == c2 && c2 == c3 && c3 == c3_fibers, || {
            json!({"z": sv(z), "x": sv(x), "conditions": [c1, c2, c3], "closed_by_fibers": c3_fibers})
        });
    })
}

/// Every assignment `y ↦ Q_y ⊆ X` over `ny` index points.
fn subset_assignments(nx: usize, ny: usize, mut visit: impl FnMut(&[PointSet])) {
    let k = 1usize << nx;
    let total = k.pow(ny as u32);
    let mut a = vec![PointSet::EMPTY; ny];
    for mut code in 0..total {
        for slot in a.iter_mut() {
            *slot = PointSet::from_bits((code % k) as u128);
            code /= k;
        }
        visit(&a);
    }
}

pub fn indexed(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let hyper = upper_vietoris(x).expect("small base");
        let zs = z_products(x, max_z);
        subset_assignments(x.n(), y.n(), |a| {
            let fam = IndexedFamily::new(y, x, a.to_vec(), Role::Compacts).expect("subsets");
            let continuous = is_continuously_indexed(&fam);
            let graph: Vec<usize> = a.iter().map(|&q| hyper.point_of(q)).collect();
            let into_hyper = ContinuousMap::new(y, &hyper.space, graph).is_ok();
            out.check(continuous == into_hyper, || {
                json!({"x": sv(x), "y": sv(y), "family": a.iter().map(|&q| set(q)).collect::<Vec<_>>(), "continuous": continuous, "into_hyperspace": into_hyper})
            });
            if !continuous {
                return;
            }
            for (z, zx) in &zs {
                for &w in zx.opens() {
                    let ok = is_open_relation(z, y, |zi, yi| a[yi].is_subset(row(w, zi, x.n())));
                    out.check(ok, || {
                        json!({"x": sv(x), "y": sv(y), "z": sv(z), "w": set(w), "family": a.iter().map(|&q| set(q)).collect::<Vec<_>>()})
                    });
                }
            }
        });
    })
}

pub fn witness(b: &Bounds) -> Outcome {
    sweep(&spaces(b.x()), |x, out| {
        for t in PointSet::all_subsets(x.n()) {
            for cover in directed_covers(x, t).expect("subset") {
                let cx = || json!({"x": sv(x), "target": set(t), "members": cover.members().iter().map(|&m| set(m)).collect::<Vec<_>>()});
                let ws = match witness_space(x, &cover) {
                    Ok(ws) => ws,
                    Err(_) => {
                        out.fail(cx());
                        continue;
                    }
                };
                let above: PointSet = ws
                    .points
                    .iter()
                    .enumerate()
                    .filter(|(_, u)| t.is_subset(**u))
                    .map(|(i, _)| i)
                    .collect();
                let p = ws.punchline(t);
                let ok = ws.membership_open
                    && p.quantified == above
                    && p.quantified_open
                    && p.union_inside
                    && p.member.is_some_and(|m| t.is_subset(m));
                out.check(ok, cx);
            }
        }
    })
}

pub fn compact_set(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&spaces(b.x()), |x, out| {
        let n = x.n();
        let subsets: Vec<PointSet> = PointSet::all_subsets(n).collect();
        let mut by_forall = vec![true; subsets.len()];
        let mut by_box = vec![true; subsets.len()];
        for (z, zx) in z_products(x, max_z) {
            for &w in zx.opens() {
                for (i, &q) in subsets.iter().enumerate() {
                    by_forall[i] &= z.is_open(forall_section(z.n(), n, w, q));
                    by_box[i] &= z.is_open(box_section(z.n(), n, w, q));
                }
            }
        }
        for (i, &q) in subsets.iter().enumerate() {
            let c = compact(x, q);
            out.check(
                c == by_forall[i] && c == by_box[i],
                || json!({"x": sv(x), "q": set(q), "conditions": [c, by_forall[i], by_box[i]]}),
            );
        }
    })
}

pub fn p1(b: &Bounds) -> Outcome {
    sweep(&spaces(b.x()), |x, out| {
        if !x.diagonal_class().hausdorff {
            return;
        }
        let n = x.n();
        let codiagonal: PointSet = (0..n * n).filter(|&i| i / n != i % n).collect();
        for q in PointSet::all_subsets(n) {
            let ok = !compact(x, q)
                || (x.is_closed(q) && forall_section(n, n, codiagonal, q) == q.complement(n));
            out.check(ok, || json!({"x": sv(x), "q": set(q)}));
        }
    })
}

pub fn p2(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&spaces(b.x()), |x, out| {
        let n = x.n();
        let zs = z_products(x, max_z);
        for f in x.closeds() {
            out.check(
                compact(x, f),
                || json!({"x": sv(x), "f": set(f), "reason": "not compact"}),
            );
            for (z, zx) in &zs {
                let outside = box_set(PointSet::full(z.n()), f.complement(n), n);
                for &w in zx.opens() {
                    let v = forall_section(z.n(), n, w, f);
                    let w2 = outside | w;
                    let ok = z.is_open(v)
                        && zx.is_open(w2)
                        && v == forall_section(z.n(), n, w2, x.carrier());
                    out.check(
                        ok,
                        || json!({"x": sv(x), "f": set(f), "z": sv(z), "w": set(w)}),
                    );
                }
            }
        }
    })
}

pub fn p3(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let ny = y.n();
        // good[T] iff every universal section of T over every Z is open
        let mut good = vec![true; 1 << ny];
        for (z, zy) in z_products(y, max_z) {
            for &w in zy.opens() {
                for t in PointSet::all_subsets(ny) {
                    good[t.bits() as usize] &= z.is_open(forall_section(z.n(), ny, w, t));
                }
            }
        }
        let compact_in_y: Vec<bool> = PointSet::all_subsets(ny).map(|t| compact(y, t)).collect();
        for f in continuous_maps(x, y) {
            for q in PointSet::all_subsets(x.n()) {
                let img = f.image(q).expect("subset");
                let i = img.bits() as usize;
                out.check(
                    compact_in_y[i] && good[i],
                    || json!({"x": sv(x), "y": sv(y), "graph": f.graph(), "q": set(q)}),
                );
            }
        }
    })
}

pub fn p4(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let xy = x.product(y).expect("sweep carriers fit");
        let (nx, ny) = (x.n(), y.n());
        if xy.n() <= crate::enumerate::EXHAUSTIVE_LIMIT {
            out.check(
                compact(&xy, xy.carrier()),
                || json!({"x": sv(x), "y": sv(y), "reason": "product not compact"}),
            );
        }
        for (z, zxy) in z_products(&xy, max_z) {
            let zx = z.product(x).expect("sweep carriers fit");
            let nz = z.n();
            for &w in zxy.opens() {
                let v = forall_section(nz, nx * ny, w, xy.carrier());
                let inner = forall_section(nz * nx, ny, w, y.carrier());
                let ok = z.is_open(v)
                    && zx.is_open(inner)
                    && forall_section(nz, nx, inner, x.carrier()) == v;
                out.check(
                    ok,
                    || json!({"x": sv(x), "y": sv(y), "z": sv(&z), "w": set(w)}),
                );
            }
        }
    })
}

use serde_json::json;

use super::sweep::{pairs, set, spaces, sv, sweep, z_products, Outcome};
use super::Bounds;
use crate::compactness::{forall_section, is_compact_subset};
use crate::domains::{
    check_prod_charac_with, check_sigma_products, enumerate_posets, opens_poset, scott_topology,
    sigma_map, FactorLattice, FinitePoset,
};
use crate::function_space::{
    exponential, sierpinski, sierpinski_exponential_as_opens, universal_quantifier, FunctionSpace,
    TOP,
};
use crate::json::PosetJson;
use crate::maps::{closed_map_methods, for_each_continuous_graph, projections, ContinuousMap};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

fn expo(x: &FiniteSpace, y: &FiniteSpace) -> FunctionSpace {
    exponential(x, y).expect("small exponential fits the carrier")
}

pub fn exponential_laws(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let fs = expo(x, y);
        out.check(
            fs.evaluation().is_ok(),
            || json!({"x": sv(x), "y": sv(y), "reason": "evaluation not continuous"}),
        );
        for (z, zx) in z_products(x, max_z) {
            for_each_continuous_graph(&zx, y, |g| {
                let h =
                    ContinuousMap::new(&zx, y, g.to_vec()).expect("enumerated maps are continuous");
                out.check(
                    fs.transpose(&z, &h).is_ok(),
                    || json!({"x": sv(x), "y": sv(y), "z": sv(&z), "graph": g}),
                );
            });
        }
    })
}

pub fn quantifier(b: &Bounds) -> Outcome {
    let max_z = b.z();
    let s = sierpinski();
    sweep(&spaces(b.x()), |x, out| {
        let fs = expo(x, &s);
        let compact = is_compact_subset(x, x.carrier()).expect("carrier");
        let a = universal_quantifier(&fs, x.carrier());
        out.check(
            compact == a.is_ok(),
            || json!({"x": sv(x), "compact": compact, "quantifier_continuous": a.is_ok()}),
        );
        let Ok(a) = a else { return };
        for (z, zx) in z_products(x, max_z) {
            for &w in zx.opens() {
                let chi: Vec<usize> = (0..zx.n()).map(|i| usize::from(w.contains(i))).collect();
                let ok = ContinuousMap::new(&zx, &s, chi)
                    .and_then(|h| fs.transpose(&z, &h))
                    .and_then(|t| t.then(&a))
                    .map(|composite| {
                        let top = composite.fiber(TOP).expect("point of S");
                        top == forall_section(z.n(), x.n(), w, x.carrier()) && z.is_open(top)
                    })
                    .unwrap_or(false);
                out.check(ok, || json!({"x": sv(x), "z": sv(&z), "w": set(w)}));
            }
        }
    })
}

pub fn p5(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        if !y.diagonal_class().hausdorff {
            return;
        }
        let fs = expo(x, y);
        out.check(
            fs.space().diagonal_class().hausdorff,
            || json!({"x": sv(x), "y": sv(y)}),
        );
    })
}

pub fn p6(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        if !y.diagonal_class().discrete {
            return;
        }
        let compact = is_compact_subset(x, x.carrier()).expect("carrier");
        let fs = expo(x, y);
        out.check(
            compact && fs.space().diagonal_class().discrete,
            || json!({"x": sv(x), "y": sv(y)}),
        );
    })
}

pub fn p7(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let fs = expo(x, y);
        let e = fs.evaluation().expect("evaluation is continuous");
        let fx = e.dom().clone();
        for &v in y.opens() {
            let w = e.preimage(v).expect("subset");
            let w_open = fx.is_open(w);
            for q in PointSet::all_subsets(x.n()) {
                let n = fs.subbasic_open(q, v).expect("v is open");
                let ok = is_compact_subset(x, q).expect("subset")
                    && fs.space().is_open(n)
                    && w_open
                    && forall_section(fs.maps().len(), x.n(), w, q) == n;
                out.check(
                    ok,
                    || json!({"x": sv(x), "y": sv(y), "q": set(q), "v": set(v)}),
                );
            }
        }
    })
}

pub fn prod_charac(b: &Bounds) -> Outcome {
    let ys = spaces(b.y());
    let xs = spaces(b.x());
    let lattices = |v: &[FiniteSpace]| -> Vec<FactorLattice> {
        v.iter()
            .map(|s| FactorLattice::new(s).expect("small lattice"))
            .collect()
    };
    let (ly, lx) = (lattices(&ys), lattices(&xs));
    let items: Vec<(usize, usize)> = (0..ys.len())
        .flat_map(|i| (0..xs.len()).map(move |j| (i, j)))
        .collect();
    sweep(&items, |&(i, j), out| {
        let (y, x) = (&ys[i], &xs[j]);
        for w in PointSet::all_subsets(y.n() * x.n()) {
            let c = check_prod_charac_with(y, x, &ly[i], &lx[j], w).expect("fits");
            out.check(c.agree(), || {
                json!({"y": sv(y), "x": sv(x), "w": set(w), "conditions": [c.open_in_product, c.by_rows, c.by_columns]})
            });
        }
    })
}

pub fn ccompact(b: &Bounds) -> Outcome {
    let ys = spaces(b.y());
    sweep(&spaces(b.x()), |x, out| {
        let o = sierpinski_exponential_as_opens(x).expect("small opens space");
        let nx = x.n();
        let subsets: Vec<PointSet> = PointSet::all_subsets(nx).collect();
        let mut by_sections = vec![true; subsets.len()];
        for y in &ys {
            let yx = y.product(x).expect("fits");
            for &w in yx.opens() {
                for (i, &q) in subsets.iter().enumerate() {
                    by_sections[i] &= y.is_open(forall_section(y.n(), nx, w, q));
                }
            }
        }
        for (i, &q) in subsets.iter().enumerate() {
            let above = o.above(q);
            let by_opens = o.space.is_open(above);
            let a = universal_quantifier(&o.exponential, q);
            let transported = a.as_ref().ok().map(|a| {
                let top = a.fiber(TOP).expect("point of S");
                top == above.iter().map(|k| o.to_map[k]).collect()
            });
            let conds = [by_opens, by_sections[i], a.is_ok()];
            let ok = conds.iter().all(|&c| c == conds[0]) && transported != Some(false);
            out.check(ok, || json!({"x": sv(x), "q": set(q), "conditions": conds}));
        }
    })
}

pub fn projection(b: &Bounds) -> Outcome {
    let ys = spaces(b.y());
    sweep(&spaces(b.x()), |x, out| {
        let o = sierpinski_exponential_as_opens(x).expect("small opens space");
        let c_compact = o.space.is_open(o.above(x.carrier()));
        for y in &ys {
            let (proj, _) = projections(y, x).expect("fits");
            let (by_images, by_fibers) = closed_map_methods(&proj);
            out.check(by_images == by_fibers && by_images == c_compact, || {
                json!({"x": sv(x), "y": sv(y), "c_compact": c_compact, "closed": [by_images, by_fibers]})
            });
        }
    })
}

/// Isbell topology on maps `x → y`: subbasic sets `{ f | f⁻¹(V) ∈ 𝒰 }` for
/// Scott-open `𝒰` on the opens of `x` and open `V` of `y`.
fn isbell(fs: &FunctionSpace, scott: &[PointSet]) -> FiniteSpace {
    let x = fs.dom();
    let opens = x.opens();
    let mut subbasis = Vec::new();
    for &v in fs.cod().opens() {
        let pre: Vec<usize> = fs
            .maps()
            .iter()
            .map(|g| {
                let p: PointSet = (0..x.n()).filter(|&i| v.contains(g[i])).collect();
                opens
                    .binary_search(&p)
                    .expect("preimage of an open is open")
            })
            .collect();
        for fam in scott {
            subbasis.push(
                pre.iter()
                    .enumerate()
                    .filter(|(_, &k)| fam.contains(k))
                    .map(|(i, _)| i)
                    .collect(),
            );
        }
    }
    FiniteSpace::from_subbasis(fs.maps().len(), &subbasis).expect("subbasis within carrier")
}

pub fn compact_coincide(b: &Bounds) -> Outcome {
    let ys = spaces(b.y());
    sweep(&spaces(b.x()), |x, out| {
        let o = sierpinski_exponential_as_opens(x).expect("small opens space");
        let scott = scott_topology(&opens_poset(x).expect("small lattice"));
        let membership_open = o
            .space
            .product(x)
            .map(|p| p.is_open(o.membership()))
            .unwrap_or(false);
        out.check(
            scott == o.space && membership_open,
            || json!({"x": sv(x), "scott": scott == o.space, "membership_open": membership_open}),
        );
        for q in PointSet::all_subsets(x.n()) {
            let compact = is_compact_subset(x, q).expect("subset");
            let c_compact = o.space.is_open(o.above(q));
            out.check(
                compact == c_compact,
                || json!({"x": sv(x), "q": set(q), "compact": compact, "c_compact": c_compact}),
            );
        }
        for y in &ys {
            let fs = expo(x, y);
            let ok = isbell(&fs, scott.opens()) == *fs.space();
            out.check(
                ok,
                || json!({"x": sv(x), "y": sv(y), "reason": "Isbell topology differs"}),
            );
        }
    })
}

fn posets_up_to(max: usize) -> Vec<FinitePoset> {
    (0..=max)
        .flat_map(|n| enumerate_posets(n).expect("small posets"))
        .collect()
}

pub fn sigma(b: &Bounds) -> Outcome {
    let ds = posets_up_to(b.x());
    let es = posets_up_to(b.y());
    let items: Vec<(FinitePoset, FinitePoset)> = ds
        .iter()
        .flat_map(|d| es.iter().map(move |e| (d.clone(), e.clone())))
        .collect();
    sweep(&items, |(d, e), out| {
        let ok = check_sigma_products(d, e).unwrap_or(false);
        out.check(
            ok,
            || json!({"d": PosetJson::from(d), "e": PosetJson::from(e)}),
        );
        let (sd, se) = (scott_topology(d), scott_topology(e));
        let (nd, ne) = (d.n(), e.n());
        if ne == 0 && nd > 0 {
            return;
        }
        let total = ne.max(1).pow(nd as u32);
        for mut code in 0..total {
            let g: Vec<usize> = (0..nd)
                .map(|_| {
                    let v = code % ne;
                    code /= ne;
                    v
                })
                .collect();
            let monotone = sigma_map(d, e, g.clone()).is_ok();
            let continuous = ContinuousMap::new(&sd, &se, g.clone()).is_ok();
            out.check(
                monotone == continuous,
                || json!({"d": PosetJson::from(d), "e": PosetJson::from(e), "graph": g}),
            );
        }
    })
}

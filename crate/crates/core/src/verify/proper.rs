use serde_json::json;

use super::sweep::{pairs, spaces, sweep, Outcome};
use super::Bounds;
use crate::compactness::is_compact_subset;
use crate::json::MapJson;
use crate::maps::{
    closed_map_methods, continuous_maps, is_closed_map, product_with_identity, ProperContext,
};
use crate::space::FiniteSpace;

pub fn proper(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        let ctx = ProperContext::new(x, y, max_z).expect("bounds within limit");
        for f in continuous_maps(x, y) {
            let (v, agree) = ctx.check_detailed(&f).expect("same spaces");
            let on_point = product_with_identity(&FiniteSpace::point(), &f).expect("fits");
            let closed = is_closed_map(&f);
            let ok = v.agree() && agree && is_closed_map(&on_point) == closed;
            out.check(ok, || {
                json!({"map": MapJson::from(&f), "criteria": v.as_array(), "closed_methods_agree": agree})
            });
        }
    })
}

pub fn closed_reform(b: &Bounds) -> Outcome {
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(a, bsp), out| {
        for g in continuous_maps(a, bsp) {
            let (by_images, by_fibers) = closed_map_methods(&g);
            let fibers = g.fibers();
            let identity = a.opens().iter().all(|&u| {
                let complement = g.image(u.complement(a.n())).expect("subset");
                let inside: crate::PointSet =
                    (0..bsp.n()).filter(|&p| fibers[p].is_subset(u)).collect();
                complement.complement(bsp.n()) == inside
            });
            out.check(by_images == by_fibers && identity, || {
                json!({"map": MapJson::from(&g), "by_images": by_images, "by_fibers": by_fibers})
            });
        }
    })
}

pub fn compact_hausdorff(b: &Bounds) -> Outcome {
    let max_z = b.z();
    sweep(&pairs(&spaces(b.x()), &spaces(b.y())), |(x, y), out| {
        if !y.diagonal_class().hausdorff {
            return;
        }
        let compact = is_compact_subset(x, x.carrier()).expect("carrier");
        let ctx = ProperContext::new(x, y, max_z).expect("bounds within limit");
        for f in continuous_maps(x, y) {
            let v = ctx.check(&f).expect("same spaces");
            out.check(compact && v.as_array() == [true; 5], || {
                json!({"map": MapJson::from(&f), "criteria": v.as_array(), "x_compact": compact})
            });
        }
    })
}

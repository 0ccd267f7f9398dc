use rayon::prelude::*;
use serde_json::Value;

use crate::enumerate::spaces_up_to;
use crate::json::{set_value, space_value};
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

/// Samples retained per partition; the total is always exact.
const PARTITION_SAMPLES: usize = 256;

/// Tally of one sweep or partition.
#[derive(Debug, Default, Clone)]
pub struct Outcome {
    pub instances: u64,
    pub failures: u64,
    samples: Vec<Value>,
}

impl Outcome {
    /// Counts one instance; `witness` is only built on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.instances += 1;
        if !ok {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, witness: Value) {
        self.failures += 1;
        if self.samples.len() < PARTITION_SAMPLES {
            self.samples.push(witness);
        }
    }

    pub fn merge(&mut self, other: Outcome) {
        self.instances += other.instances;
        self.failures += other.failures;
        self.samples.extend(other.samples);
    }

    /// Total failures and the canonical, capped counterexample list.
    pub fn finish(&self, cap: usize) -> (u64, Vec<Value>) {
        let mut keyed: Vec<(String, Value)> = self
            .samples
            .iter()
            .map(|v| (v.to_string(), v.clone()))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        (
            self.failures,
            keyed.into_iter().take(cap).map(|(_, v)| v).collect(),
        )
    }
}

/// Runs `f` on every item (each item is one partition) and merges the
/// results in item order.
pub fn sweep<T, F>(items: &[T], f: F) -> Outcome
where
    T: Sync,
    F: Fn(&T, &mut Outcome) + Sync + Send,
{
    let parts: Vec<Outcome> = items
        .par_iter()
        .map(|item| {
            let mut o = Outcome::default();
            f(item, &mut o);
            o
        })
        .collect();
    let mut out = Outcome::default();
    for p in parts {
        out.merge(p);
    }
    out
}

pub fn spaces(max: usize) -> Vec<FiniteSpace> {
    spaces_up_to(max).expect("bounds are resolved against the enumeration limit")
}

pub fn pairs(a: &[FiniteSpace], b: &[FiniteSpace]) -> Vec<(FiniteSpace, FiniteSpace)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

pub fn sv(x: &FiniteSpace) -> Value {
    space_value(x)
}

pub fn set(s: PointSet) -> Value {
    set_value(s)
}

/// `(Z, Z × X)` for every `Z` up to `max_z`, opens materialised.
pub fn z_products(x: &FiniteSpace, max_z: usize) -> Vec<(FiniteSpace, FiniteSpace)> {
    spaces(max_z)
        .into_iter()
        .map(|z| {
            let zx = z.product(x).expect("sweep carriers fit");
            zx.opens();
            (z, zx)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn finish_sorts_dedups_and_caps() {
        let mut o = Outcome::default();
        o.check(true, || unreachable!());
        o.fail(json!({"b": 1}));
        o.fail(json!({"a": 2}));
        o.fail(json!({"a": 2}));
        let (total, list) = o.finish(1);
        assert_eq!(total, 3);
        assert_eq!(o.instances, 1);
        assert_eq!(list, vec![json!({"a": 2})]);
    }

    #[test]
    fn merge_order_does_not_matter_after_finish() {
        let items: Vec<u32> = (0..50).collect();
        let f = |i: &u32, o: &mut Outcome| o.check(!i.is_multiple_of(7), || json!(i));
        let a = sweep(&items, f);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let b = pool.install(|| sweep(&items, f));
        assert_eq!(a.finish(100), b.finish(100));
        assert_eq!(a.failures, 8);
    }
}

//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always shown.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use topolab::preorder::{from_preorder, SpacePreorder};
use topolab::verify::{verify, Bounds, TheoremId, VerificationReport};
use topolab::FiniteSpace;

const WORKERS: usize = 4;

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<String, String>,
}

fn canonical(x: &FiniteSpace) -> Vec<u128> {
    x.opens().iter().map(|u| u.bits()).collect()
}

/// Every family of subsets of `n` points closed under pairwise union and
/// intersection and containing the empty set and the carrier.
fn topologies_by_filter(n: usize) -> BTreeSet<Vec<u128>> {
    let k = 1usize << n;
    let full = (k - 1) as u128;
    let mut found = BTreeSet::new();
    for family in 0u64..(1u64 << k) {
        let has = |s: u128| family >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let members: Vec<u128> = (0..k as u128).filter(|&s| has(s)).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| has(a | b) && has(a & b)));
        if closed {
            found.insert(members);
        }
    }
    found
}

/// Every reflexive transitive relation on `n` points, through `from_preorder`.
fn topologies_by_preorders(n: usize) -> BTreeSet<Vec<u128>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut found = BTreeSet::new();
    for code in 0u64..(1u64 << off.len()) {
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in off.iter().enumerate() {
            m[i][j] = code >> b & 1 == 1;
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !m[i][j] || (0..n).all(|l| !m[j][l] || m[i][l])));
        if transitive {
            let p = SpacePreorder::from_matrix(&m).expect("preorder");
            found.insert(canonical(&from_preorder(&p)));
        }
    }
    found
}

fn topology_counts() -> Result<String, String> {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let a = topologies_by_filter(n);
        let b = topologies_by_preorders(n);
        let lib: BTreeSet<Vec<u128>> = topolab::enumerate::enumerate_topologies(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(canonical)
            .collect();
        if a != b || a != lib {
            return Err(format!(
                "n={n}: filter {}, preorders {}, library {}",
                a.len(),
                b.len(),
                lib.len()
            ));
        }
        counts.push(a.len());
    }
    Ok(format!("counts {counts:?}"))
}

fn run(
    id: TheoremId,
    x: usize,
    y: Option<usize>,
    z: Option<usize>,
) -> Result<VerificationReport, String> {
    verify(id, Bounds::new(Some(x), y, z), 0).map_err(|e| format!("{id}: {e}"))
}

/// Runs each check and fails on the first report with a counterexample.
fn all_pass(reports: Vec<Result<VerificationReport, String>>) -> Result<String, String> {
    let mut summary = Vec::new();
    for r in reports {
        let r = r?;
        if !r.passed() {
            return Err(format!(
                "{}: {} counterexamples, first {}",
                r.theorem,
                r.counterexamples_total,
                r.counterexamples
                    .first()
                    .map(|c| c.to_string())
                    .unwrap_or_default()
            ));
        }
        summary.push(format!("{} {}", r.theorem, r.instances_checked));
    }
    Ok(summary.join(", "))
}

fn lemma_equivalence() -> Result<String, String> {
    all_pass(vec![run(TheoremId::Sec2LemmaEquiv, 3, None, Some(3))])
}

fn witness_construction() -> Result<String, String> {
    all_pass(vec![run(TheoremId::Sec4Witness, 4, None, None)])
}

fn proper_maps() -> Result<String, String> {
    all_pass(vec![
        run(TheoremId::Sec6Proper, 3, Some(3), Some(3)),
        run(TheoremId::Sec6ClosedReform, 3, Some(3), None),
        run(TheoremId::Sec6CompactHausdorffProper, 3, Some(3), Some(3)),
    ])
}

fn way_below() -> Result<String, String> {
    all_pass(vec![
        run(TheoremId::Sec7WaybelowEquiv, 3, Some(4), Some(3)),
        run(TheoremId::Sec7C1, 4, None, None),
        run(TheoremId::Sec7C2, 4, None, None),
        run(TheoremId::Sec7C3, 3, Some(3), None),
        run(TheoremId::Sec7C4, 3, Some(3), None),
    ])
}

fn propositions() -> Result<String, String> {
    all_pass(vec![
        run(TheoremId::Sec5P1, 3, None, None),
        run(TheoremId::Sec5P2, 3, None, Some(3)),
        run(TheoremId::Sec5P3, 3, Some(3), Some(3)),
        run(TheoremId::Sec5P4, 3, Some(3), Some(3)),
        run(TheoremId::Sec5P5, 3, Some(3), None),
        run(TheoremId::Sec5P6, 3, Some(3), None),
        run(TheoremId::Sec5P7, 3, Some(3), None),
    ])
}

fn function_spaces() -> Result<String, String> {
    all_pass(vec![
        run(TheoremId::Sec3Exponential, 3, Some(3), Some(3)),
        run(TheoremId::Sec3Quantifier, 3, None, Some(3)),
        run(TheoremId::Sec8Ccompact, 3, Some(3), None),
        run(TheoremId::Sec8Projection, 3, Some(3), None),
        run(TheoremId::Sec8CompactCoincide, 3, Some(3), None),
    ])
}

fn product_theorems() -> Result<String, String> {
    all_pass(vec![
        run(TheoremId::Sec8ProdCharac, 3, Some(3), None),
        run(TheoremId::Sec8Sigma, 3, Some(3), None),
    ])
}

fn verify_all(workers: usize) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args([
            "verify",
            "--all",
            "--json",
            "--workers",
            &workers.to_string(),
        ])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("verify --all exited with {}", out.status));
    }
    Ok(out.stdout)
}

fn determinism() -> Result<String, String> {
    let single = verify_all(1)?;
    let first = verify_all(WORKERS)?;
    let second = verify_all(WORKERS)?;
    if first != second {
        return Err("two runs differ".into());
    }
    if single != first {
        return Err(format!("1 and {WORKERS} workers differ"));
    }
    Ok(format!(
        "{} report bytes identical across 3 runs",
        first.len()
    ))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "topology counts, two oracles, n = 1..4",
            limit: Some(Duration::from_secs(30)),
            run: topology_counts,
        },
        Criterion {
            name: "compactness lemma, three conditions, spaces <= 3",
            limit: Some(Duration::from_secs(300)),
            run: lemma_equivalence,
        },
        Criterion {
            name: "witness space of every directed cover, X <= 4",
            limit: None,
            run: witness_construction,
        },
        Criterion {
            name: "five properness criteria and closed-map methods, Z <= 3",
            limit: None,
            run: proper_maps,
        },
        Criterion {
            name: "way-below equivalences, closed form to 4 points, corollaries",
            limit: None,
            run: way_below,
        },
        Criterion {
            name: "propositions p1-p7 at bounds 3",
            limit: None,
            run: propositions,
        },
        Criterion {
            name: "function spaces: exponential laws, quantifier, C-compactness, Scott opens",
            limit: None,
            run: function_spaces,
        },
        Criterion {
            name: "product characterisation and Scott products",
            limit: Some(Duration::from_secs(300)),
            run: product_theorems,
        },
        Criterion {
            name: "verify --all byte-identical across runs and worker counts",
            limit: None,
            run: determinism,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.1?}, limit {limit:?}"))
            }
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS {} ({elapsed:.1?}): {detail}", c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} ({elapsed:.1?}): {detail}", c.name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance criteria, one line of output each.
//!
//! Run with `cargo test -p quivergr --test acceptance`. The process exits non-zero if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use quivergr::builtin_representation;
use quivergr_core::oracle::{brute_force_subreps, MAX_Q, MAX_TOTAL_DIM};
use quivergr_core::{
    canonical_ray_submodule, census, compare_loci, counting_polynomial, coxeter_apply,
    enumerate_subreps, hom_ext, is_rigid, tangent_dim, transverse_combinatorial, DimSelection,
    DimVector, EulerData, PrimeField, Quiver, Rationals, Representation, SubrepPoint,
    SubspaceBasis,
};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const BATTERY: &[&str] = &[
    "kronecker-reg:1",
    "kronecker-reg:2",
    "kronecker-reg:3",
    "kronecker-reg:4",
    "a21-ex1",
    "a21-ex3",
    "a21-reg:3",
];

fn fixture(name: &str) -> Representation<Rationals> {
    builtin_representation(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn reduce(name: &str, q: u32) -> Representation<PrimeField> {
    fixture(name).reduce_mod_p(q).unwrap()
}

fn dv(v: &[usize]) -> DimVector {
    DimVector(v.to_vec())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `dᵀ E e` straight from the arrow list, independent of the library's Euler data.
fn euler_by_hand(q: &Quiver, d: &[i64], e: &[i64]) -> i64 {
    let diagonal: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
    let arrows: i64 = q.arrows().iter().map(|a| d[a.source] * e[a.target]).sum();
    diagonal - arrows
}

fn a21_ex1() -> Outcome {
    let e = dv(&[0, 2, 1]);
    for q in [2u32, 3] {
        let m = reduce("a21-ex1", q);
        let d = m.dims().to_i64();
        let expected = euler_by_hand(m.quiver(), &e.to_i64(), &[d[0], d[1] - 2, d[2] - 1]);
        ensure!(expected == 0, "⟨e,d−e⟩ = {expected}, expected 0");
        let mut report = census(&m, &DimSelection::All).map_err(err)?;
        let block = report.block(&e).unwrap();
        ensure!(
            block.expected_dim == 0,
            "library ⟨e,d−e⟩ = {}",
            block.expected_dim
        );
        ensure!(
            block.total_points() == q as usize + 1,
            "q={q}: {} points, expected q+1",
            block.total_points()
        );
        ensure!(
            block.entries.iter().all(|x| x.ext_dim == 1),
            "q={q}: some point has ext ≠ 1"
        );
        ensure!(
            block.transverse_points() == 0,
            "q={q}: homological locus not empty"
        );
        let cmp = compare_loci(&m, &mut report).map_err(err)?;
        let comb = cmp.per_dimension.iter().find(|x| x.e == e).unwrap();
        ensure!(
            comb.combinatorial.is_empty(),
            "q={q}: combinatorial locus not empty"
        );
        ensure!(
            comb.homological.is_empty(),
            "q={q}: homological locus not empty"
        );
    }
    Ok("|Gr| = q+1, ext 1 everywhere, both loci empty, ⟨e,d−e⟩ = 0".into())
}

fn kronecker_reg2() -> Outcome {
    let e = dv(&[1, 1]);
    for q in [2u32, 3, 5] {
        let m = reduce("kronecker-reg:2", q);
        let mut report = census(&m, &DimSelection::All).map_err(err)?;
        let block = report.block(&e).unwrap();
        ensure!(
            block.total_points() == 1,
            "q={q}: {} points",
            block.total_points()
        );
        ensure!(
            block.entries[0].ext_dim == 1,
            "q={q}: ext = {}",
            block.entries[0].ext_dim
        );
        ensure!(
            block.transverse_points() == 0,
            "q={q}: homological locus not empty"
        );
        let cmp = compare_loci(&m, &mut report).map_err(err)?;
        let comb = cmp.per_dimension.iter().find(|x| x.e == e).unwrap();
        ensure!(
            comb.combinatorial.is_empty(),
            "q={q}: combinatorial locus not empty"
        );
        let tube = cmp.locus.tube.as_ref().ok_or("no tube data")?;
        ensure!(
            (tube.tube_rank, tube.l, tube.k) == (1, 2, 0),
            "q={q}: (p, l, k) = ({}, {}, {})",
            tube.tube_rank,
            tube.l,
            tube.k
        );
    }
    Ok("|Gr_(1,1)| = 1 with ext 1, both loci empty, p = 1, l = 2, k = 0".into())
}

fn a21_ex3() -> Outcome {
    let e = dv(&[0, 1, 1]);
    for q in [2u32, 3] {
        let m = reduce("a21-ex3", q);
        let k = m.field().clone();
        let mut report = census(&m, &DimSelection::All).map_err(err)?;
        let block = report.block(&e).unwrap().clone();
        ensure!(
            block.total_points() == 2 * q as usize + 1,
            "q={q}: {} points, expected 2q+1",
            block.total_points()
        );
        let singular: Vec<_> = block.entries.iter().filter(|x| x.ext_dim == 1).collect();
        ensure!(
            singular.len() == 1,
            "q={q}: {} points with ext 1",
            singular.len()
        );
        ensure!(
            singular[0].hom_dim == 2,
            "q={q}: singular hom = {}",
            singular[0].hom_dim
        );
        let line = SubspaceBasis::span_vectors(&k, 2, vec![vec![1, 0]]).unwrap();
        ensure!(
            singular[0].point.spaces[1] == line && singular[0].point.spaces[2] == line,
            "q={q}: singular point is not V2 = V3 = span e1"
        );
        ensure!(block.expected_dim == 1, "⟨e,d−e⟩ = {}", block.expected_dim);
        ensure!(
            block
                .entries
                .iter()
                .filter(|x| x.ext_dim != 1)
                .all(|x| x.ext_dim == 0 && x.hom_dim == 1),
            "q={q}: a smooth point has hom ≠ 1"
        );
        let cmp = compare_loci(&m, &mut report).map_err(err)?;
        let d = cmp.per_dimension.iter().find(|x| x.e == e).unwrap();
        let smooth: Vec<SubrepPoint<u32>> = block
            .entries
            .iter()
            .filter(|x| x.ext_dim == 0)
            .map(|x| x.point.clone())
            .collect();
        ensure!(
            smooth.len() == 2 * q as usize,
            "q={q}: {} smooth points",
            smooth.len()
        );
        ensure!(
            d.combinatorial == smooth,
            "q={q}: combinatorial locus differs from the smooth points"
        );
        ensure!(
            d.homological == smooth,
            "q={q}: homological locus differs from the smooth points"
        );
    }
    Ok("|Gr| = 2q+1, one singular point (hom 2), both loci = the 2q smooth points".into())
}

fn battery() -> Outcome {
    let mut runs = 0;
    for name in BATTERY {
        let out = Command::new(env!("CARGO_BIN_EXE_quivergr"))
            .args(["check", "--builtin", name, "--q", "2,3", "--all-e"])
            .output()
            .map_err(err)?;
        ensure!(
            out.status.code() == Some(0),
            "{name}: exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        let report: Value = serde_json::from_slice(&out.stdout).map_err(err)?;
        ensure!(
            report["results"]["verdict"] == true,
            "{name}: verdict not true"
        );
        for field in report["results"]["fields"].as_array().ok_or("no fields")? {
            let dims = field["dimensions"].as_array().ok_or("no dimensions")?;
            let expected = report["input"]["dims"]
                .as_array()
                .unwrap()
                .iter()
                .map(|d| d.as_u64().unwrap() + 1)
                .product::<u64>();
            ensure!(
                dims.len() as u64 == expected,
                "{name}: {} of {expected} dimension vectors",
                dims.len()
            );
            ensure!(
                dims.iter().all(|d| d["equal"] == true),
                "{name}: unequal dimension vector"
            );
            runs += 1;
        }
    }
    Ok(format!(
        "{} fixtures, {runs} (fixture, q) runs, exit 0 and verdict true",
        BATTERY.len()
    ))
}

fn rigid_case() -> Outcome {
    let m = fixture("kronecker-preproj:1");
    ensure!(is_rigid(&m).map_err(err)?, "not rigid over ℚ");
    let mut points = 0;
    for q in [2u32, 3] {
        let r = m.reduce_mod_p(q).map_err(err)?;
        ensure!(is_rigid(&r).map_err(err)?, "q={q}: not rigid");
        let mut report = census(&r, &DimSelection::All).map_err(err)?;
        ensure!(
            report.entries().all(|x| x.ext_dim == 0),
            "q={q}: a point has ext ≠ 0"
        );
        let locus = transverse_combinatorial(&r, &mut report).map_err(err)?;
        ensure!(locus.rigid, "q={q}: rigid branch not taken");
        for block in &report.blocks {
            let all: Vec<_> = block.entries.iter().map(|x| x.point.clone()).collect();
            ensure!(
                locus.transverse[&block.e] == all,
                "q={q} e={}: locus is not all of Gr",
                block.e
            );
        }
        points += report.total_points();
    }
    Ok(format!(
        "rigid, {points} points all with ext 0, transverse = Gr"
    ))
}

fn counting() -> Outcome {
    let cp = counting_polynomial(&fixture("a21-ex1"), &dv(&[0, 2, 1]), &[2, 3, 5]).map_err(err)?;
    ensure!(
        cp.polynomial.to_string() == "q + 1",
        "a21-ex1: {}",
        cp.polynomial
    );
    ensure!(cp.check == (5, 6), "a21-ex1 check sample {:?}", cp.check);
    ensure!(
        cp.euler_characteristic == 2.into(),
        "a21-ex1 χ = {}",
        cp.euler_characteristic
    );
    let cp = counting_polynomial(&fixture("a21-ex3"), &dv(&[0, 1, 1]), &[2, 3, 5]).map_err(err)?;
    ensure!(
        cp.polynomial.to_string() == "2q + 1",
        "a21-ex3: {}",
        cp.polynomial
    );
    ensure!(cp.check == (5, 11), "a21-ex3 check sample {:?}", cp.check);
    ensure!(
        cp.euler_characteristic == 3.into(),
        "a21-ex3 χ = {}",
        cp.euler_characteristic
    );
    Ok("q + 1 (χ = 2) and 2q + 1 (χ = 3), check samples at q = 5 pass".into())
}

fn rank_nullity<K: quivergr_core::Field>(
    k: &K,
    m: &quivergr_core::Matrix<K::Elem>,
) -> Result<(), String> {
    let rank = m.rref(k).rank();
    let kernel = m.kernel_basis(k);
    ensure!(
        rank + kernel.rows() == m.cols(),
        "rank {rank} + nullity {} ≠ {}",
        kernel.rows(),
        m.cols()
    );
    ensure!(
        kernel.rows() == 0 || m.mul(k, &kernel.transpose()).map_err(err)?.is_zero(k),
        "kernel vectors not annihilated"
    );
    Ok(())
}

fn properties() -> Outcome {
    let mut fixtures: Vec<&str> = BATTERY.to_vec();
    fixtures.push("kronecker-preproj:1");
    let (mut euler_pairs, mut rn_pairs, mut oracle_cases, mut tangent_points, mut rays) =
        (0, 0, 0, 0, 0);

    for name in &fixtures {
        let m = fixture(name);
        for map in m.maps() {
            rank_nullity(&Rationals, map)?;
            rn_pairs += 1;
        }
        for q in [2u32, 3] {
            let r = m.reduce_mod_p(q).map_err(err)?;
            let k = r.field().clone();
            let mut report = census(&r, &DimSelection::All).map_err(err)?;
            let d = r.dims().to_i64();
            for block in &report.blocks {
                let e = block.e.to_i64();
                let rest: Vec<i64> = d.iter().zip(&e).map(|(a, b)| a - b).collect();
                let form = euler_by_hand(r.quiver(), &e, &rest);
                ensure!(
                    block.expected_dim == form,
                    "{name} q={q} e={}: ⟨e,d−e⟩ mismatch",
                    block.e
                );
                for x in &block.entries {
                    ensure!(
                        x.hom_dim as i64 - x.ext_dim as i64 == form,
                        "{name} q={q} e={}: hom − ext ≠ ⟨e,d−e⟩",
                        block.e
                    );
                    ensure!(
                        tangent_dim(x) as i64 >= form,
                        "{name} q={q} e={}: tangent below ⟨e,d−e⟩",
                        block.e
                    );
                    euler_pairs += 1;
                    tangent_points += 1;
                    let (sub, quot) = r.sub_quotient(&x.point.spaces).map_err(err)?;
                    for map in sub.maps().iter().chain(quot.maps()) {
                        rank_nullity(&k, map)?;
                        rn_pairs += 1;
                    }
                }
            }

            if r.dims().total() <= MAX_TOTAL_DIM && q <= MAX_Q {
                for e in r.dims().sub_vectors() {
                    let fast = enumerate_subreps(&r, &e).map_err(err)?;
                    let slow = brute_force_subreps(&r, &e).map_err(err)?;
                    ensure!(
                        fast == slow,
                        "{name} q={q} e={e}: pruned search differs from brute force"
                    );
                    oracle_cases += 1;
                }
            }

            if BATTERY.contains(name) {
                let locus = transverse_combinatorial(&r, &mut report).map_err(err)?;
                let tube = locus
                    .tube
                    .as_ref()
                    .ok_or_else(|| format!("{name}: no tube"))?;
                let mut previous: Option<SubrepPoint<u32>> = None;
                for t in 0..=tube.quasi_length {
                    let current = canonical_ray_submodule(&report, tube, t).map_err(err)?;
                    ensure!(
                        current.dim_vector() == tube.ray_dims[t],
                        "{name}: ray {t} has the wrong dimension"
                    );
                    if let Some(prev) = &previous {
                        ensure!(
                            current.contains(&k, prev).map_err(err)?,
                            "{name} q={q}: rays {} ⊄ {t}",
                            t - 1
                        );
                    }
                    previous = Some(current);
                    rays += 1;
                }
            }
        }
    }

    // Pairs of distinct fixtures on the same quiver.
    for group in [&fixtures[0..4], &fixtures[4..7]] {
        for a in group {
            for b in group {
                let (m, n) = (fixture(a), fixture(b));
                let he = hom_ext(&m, &n).map_err(err)?;
                let form = euler_by_hand(m.quiver(), &m.dims().to_i64(), &n.dims().to_i64());
                ensure!(
                    he.hom_dim as i64 - he.ext_dim as i64 == form,
                    "hom − ext ≠ ⟨{a},{b}⟩"
                );
                euler_pairs += 1;
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let quivers = [
        Quiver::from_edges(2, &[(1, 2), (1, 2)]).map_err(err)?,
        Quiver::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).map_err(err)?,
    ];
    for q in &quivers {
        let ed = EulerData::compute(q).map_err(err)?;
        let delta = ed.null_root.as_ref().ok_or("no null root")?.to_i64();
        ensure!(coxeter_apply(&ed, &delta, 1) == delta, "Φδ ≠ δ");
        for _ in 0..100 {
            let n = q.vertex_count();
            let x: Vec<i64> = (0..n).map(|_| rng.random_range(-4..=4)).collect();
            let y: Vec<i64> = (0..n).map(|_| rng.random_range(-4..=4)).collect();
            let phi_x = coxeter_apply(&ed, &x, 1);
            ensure!(
                euler_by_hand(q, &x, &y) == -euler_by_hand(q, &y, &phi_x),
                "⟨x,y⟩ ≠ −⟨y,Φx⟩ for x = {x:?}, y = {y:?}"
            );
        }
    }

    Ok(format!(
        "{euler_pairs} Euler pairs, {rn_pairs} rank-nullity pairs, 200 Coxeter vectors, \
         {oracle_cases} brute-force cases, {tangent_points} tangent bounds, {rays} ray submodules"
    ))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            name: "a21-ex1: Gr_(0,2,1), dims (3,3,3)",
            limit: Duration::from_secs(10),
            run: a21_ex1,
        },
        Criterion {
            name: "kronecker-reg:2: Gr_(1,1), dims (2,2)",
            limit: Duration::from_secs(5),
            run: kronecker_reg2,
        },
        Criterion {
            name: "a21-ex3: Gr_(0,1,1), dims (2,2,2)",
            limit: Duration::from_secs(10),
            run: a21_ex3,
        },
        Criterion {
            name: "transverse loci agree on the battery",
            limit: Duration::from_secs(300),
            run: battery,
        },
        Criterion {
            name: "rigid case",
            limit: Duration::from_secs(5),
            run: rigid_case,
        },
        Criterion {
            name: "counting polynomials",
            limit: Duration::from_secs(30),
            run: counting,
        },
        Criterion {
            name: "property suites",
            limit: Duration::from_secs(120),
            run: properties,
        },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = started.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > c.limit {
                Err(format!(
                    "took {:.2}s, limit {}s",
                    elapsed.as_secs_f64(),
                    c.limit.as_secs()
                ))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!(
                "PASS {} {} ({:.2}s): {detail}",
                i + 1,
                c.name,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL {} {} ({:.2}s): {why}",
                    i + 1,
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Environment switches:
//! - `FREEJORD_LONG_RUNNING=1` adds `Jord(8)` to the operad criterion.
//! - `FREEJORD_ACCEPTANCE_OPTIONAL=multidegree,jord9,jord10` (or `all`) runs
//!   the optional checks; otherwise they are reported as SKIP.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{ensure, Context, Result};
use freejord::cache::Cache;
use freejord::compute::operad_module;
use freejord_core::clifton::CliftonRep;
use freejord_core::combinat::{all_permutations, character, compose, cycle_type, partitions, Perm};
use freejord_core::kernel::{q, QMatrix, Q, DEFAULT_PRIMES};
use freejord_core::operad::{multidegree_dim, naive_dim, GeneratingSet, NAIVE_BOUND};
use freejord_core::reference::{
    multilinear_module, TWO_GENERATOR_B_DIMS, TWO_GENERATOR_DIMS, TWO_GENERATOR_PREDICTED_B20,
};
use freejord_core::series::{check_sequence, conjecture_series, predict_dims, DimSequence};
use freejord_core::special::{b_dim_two_gen, jordan_span_dim, reversible_dim};
use freejord_core::symfunc::{
    dims_from_character, effectivity_check, km_prediction, schur_decompose, GradedVirtualCharacter, Sl2Character,
};
use freejord_core::tkk::samples::{odd_square_zero, sl2, symmetric_2x2};
use freejord_core::tkk::{ce_homology, d_operator, sl2_decompose, tag, truncated_free_jordan, AlgebraFD};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MINUTE: u64 = 60;

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<String>,
}

fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs: Option<u64>, run| Criterion { id, name, limit: secs.map(Duration::from_secs), run };
    vec![
        c("1", "counterexample at degree 19", Some(10), counterexample),
        c("2", "prediction tables", Some(5 * MINUTE), prediction_tables),
        c("3", "cross-pipeline agreement", Some(2 * MINUTE), cross_pipeline),
        c("4", "operad ground truth", Some(30 * MINUTE), operad_ground_truth),
        c("5", "two-generator suite", Some(5 * MINUTE), two_generator),
        c("6", "homology", Some(MINUTE), homology),
        c("7", "structural properties", None, structural),
        c("8", "effectivity", Some(10 * MINUTE), effectivity),
    ]
}

fn optional() -> Vec<(&'static str, Criterion)> {
    let c = |id, name, run| Criterion { id, name, limit: None, run };
    vec![
        ("multidegree", c("9a", "three-generator multidegrees (9,1,1), (8,2,1)", multidegrees)),
        ("jord9", c("9b", "Jord(9)", || operad_range(9, 9))),
        ("jord10", c("9c", "Jord(10)", || operad_range(10, 10))),
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        failed += usize::from(!report(&c));
    }
    let wanted = std::env::var("FREEJORD_ACCEPTANCE_OPTIONAL").unwrap_or_default();
    let wanted: Vec<&str> = wanted.split(',').map(str::trim).collect();
    for (key, c) in optional() {
        if wanted.contains(&key) || wanted.contains(&"all") {
            failed += usize::from(!report(&c));
        } else {
            println!("SKIP [{}] {} (optional; FREEJORD_ACCEPTANCE_OPTIONAL={key})", c.id, c.name);
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

fn report(c: &Criterion) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(anyhow::anyhow!("panicked: {}", msg.unwrap_or_default()))
    });
    let took = start.elapsed();
    let timing = match c.limit {
        Some(l) => format!("{:.1} s, limit {} s", took.as_secs_f64(), l.as_secs()),
        None => format!("{:.1} s", took.as_secs_f64()),
    };
    let (pass, detail) = match outcome {
        Ok(d) if c.limit.is_some_and(|l| took > l) => (false, format!("{d}; over time limit")),
        Ok(d) => (true, d),
        Err(e) => (false, format!("{e:#}")),
    };
    println!("{} [{}] {}: {detail} ({timing})", if pass { "PASS" } else { "FAIL" }, c.id, c.name);
    pass
}

fn u64s(d: &DimSequence) -> Result<Vec<u64>> {
    d.to_u64().context("dimension does not fit in u64")
}

fn counterexample() -> Result<String> {
    let predicted = u64s(&predict_dims(2, 19)?)?;
    let actual: Vec<u64> = (1..=19).map(reversible_dim).collect();
    ensure!(actual[..] == TWO_GENERATOR_DIMS[..19], "closed form disagrees with the published sequence");
    ensure!(predicted[..18] == actual[..18], "predictions differ before degree 19: {predicted:?}");
    ensure!(predicted[18] == 262658, "predicted {} at degree 19", predicted[18]);

    let real = DimSequence::from_u64(2, &actual);
    let res = check_sequence(2, &real)?;
    ensure!(res.residues[..18].iter().all(|r| *r == BigInt::from(0)), "nonzero residue below 19: {:?}", res.residues);
    ensure!(res.residues[18] == BigInt::from(2), "residue {} at degree 19", res.residues[18]);

    let c = conjecture_series(2, &real, 19)?.coeff(19).clone();
    for (exp, want) in [(9, -1218), (8, 45184), (-1, 2)] {
        ensure!(c.coeff(exp) == BigInt::from(want), "t^{exp} coefficient is {}", c.coeff(exp));
    }
    Ok("predicted 262658 vs 262656, residue 2".into())
}

fn prediction_tables() -> Result<String> {
    const DIMS: [u64; 10] = [1, 1, 3, 11, 55, 330, 2345, 19089, 175203, 1785840];
    let km = km_prediction(10, 10)?;
    for n in 1..=10 {
        let m = schur_decompose(&km.a, n)?.to_effective().context("negative multiplicity")?;
        let want = multilinear_module(n).context("no table")?;
        ensure!(m == want, "degree {n}: {:?} vs {:?}", m.mult, want.mult);
        ensure!(m.dim() == DIMS[n - 1], "degree {n}: dim {}", m.dim());
    }
    Ok("Jord(1..10) reproduced".into())
}

fn cross_pipeline() -> Result<String> {
    for d in 1..=3 {
        let a = dims_from_character(&km_prediction(d, 14)?.a, d)?;
        let b = predict_dims(d as u32, 14)?;
        ensure!(a == b, "{d} generators: {:?} vs {:?}", a.dims, b.dims);
    }
    Ok("d = 1, 2, 3 through degree 14".into())
}

fn operad_range(from: usize, to: usize) -> Result<String> {
    let cache = Cache::disabled();
    for n in from..=to {
        let set = if n >= 8 { GeneratingSet::Shapes } else { GeneratingSet::Substitutions };
        let m = operad_module(n, set, &DEFAULT_PRIMES[..2], &cache)?;
        let want = multilinear_module(n).context("no table")?;
        ensure!(m == want, "Jord({n}): {:?} vs {:?}", m.mult, want.mult);
        if n <= NAIVE_BOUND {
            let total: u64 = m.mult.iter().map(|(lam, k)| k * lam.dim()).sum();
            ensure!(naive_dim(n)? == total, "degree {n}: naive quotient has dim {}, module {total}", naive_dim(n)?);
        }
    }
    Ok(format!("Jord({from}..{to}) reproduced"))
}

fn operad_ground_truth() -> Result<String> {
    let long = std::env::var("FREEJORD_LONG_RUNNING").is_ok_and(|v| v == "1");
    let top = if long { 8 } else { 7 };
    let mut msg = operad_range(1, top)?;
    msg.push_str(&format!(", naive quotient agrees through {NAIVE_BOUND}"));
    if !long {
        msg.push_str("; Jord(8) needs FREEJORD_LONG_RUNNING=1");
    }
    Ok(msg)
}

fn two_generator() -> Result<String> {
    let rev: Vec<u64> = (1..=20).map(reversible_dim).collect();
    ensure!(rev[..] == TWO_GENERATOR_DIMS[..], "reversible dims {rev:?}");
    for n in 1..=12 {
        ensure!(jordan_span_dim(n)? == rev[n - 1], "span differs at {n}");
    }
    let b: Vec<u64> = (1..=20).map(b_dim_two_gen).collect();
    ensure!(b[..] == TWO_GENERATOR_B_DIMS[..], "B dims {b:?}");
    ensure!(b[19] == 498300, "B at 20 is {}", b[19]);
    let km = km_prediction(2, 20)?;
    let pb = u64s(&dims_from_character(&km.b, 2)?)?;
    ensure!(pb[..19] == b[..19], "predicted B differs below 20: {pb:?}");
    ensure!(pb[19] == TWO_GENERATOR_PREDICTED_B20 && pb[19] == 498303, "predicted B at 20 is {}", pb[19]);
    Ok("predicted b_20 = 498303 vs 498300".into())
}

fn homology() -> Result<String> {
    let t = tag(&odd_square_zero())?;
    let h = ce_homology(&t.algebra, 5)?;
    ensure!(h.dims == [1, 3, 5, 7, 9, 11], "dims {:?}", h.dims);
    for (p, m) in sl2_decompose(&h)?.iter().enumerate() {
        ensure!(m.len() == 1 && m.get(&(2 * p as u32)) == Some(&1), "H_{p} = {m:?}");
    }
    let s = ce_homology(&sl2()?, 3)?;
    ensure!(s.dims == [1, 0, 0, 1], "sl2 homology {:?}", s.dims);
    Ok("H_p = L(2p) for p ≤ 5; sl2 gives 1,0,0,1".into())
}

fn add(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            out.set(r, c, a.get(r, c) + b.get(r, c));
        }
    }
    out
}

fn random_element(rng: &mut StdRng, dim: usize) -> Vec<Q> {
    (0..dim).map(|_| if rng.random_bool(0.4) { q(rng.random_range(-3..=3)) } else { q(0) }).collect()
}

fn derivation_identities(j: &AlgebraFD, rng: &mut StdRng, trials: usize) -> Result<()> {
    for _ in 0..trials {
        let [a, b, c] = [0; 3].map(|_| random_element(rng, j.dim()));
        ensure!(add(&d_operator(j, &a, &b)?, &d_operator(j, &b, &a)?).is_zero(), "D(a,b) + D(b,a) != 0");
        let cyc = add(
            &add(&d_operator(j, &j.mul(&a, &b), &c)?, &d_operator(j, &j.mul(&b, &c), &a)?),
            &d_operator(j, &j.mul(&c, &a), &b)?,
        );
        ensure!(cyc.is_zero(), "cyclic identity fails");
    }
    Ok(())
}

fn random_class(rng: &mut StdRng) -> GradedVirtualCharacter {
    let mut x = GradedVirtualCharacter::zero(3, 5);
    for _ in 0..rng.random_range(0..5) {
        let ps = partitions(rng.random_range(1..=3));
        let mu = &ps[rng.random_range(0..ps.len())];
        let m = rng.random_range(0..3u32);
        x.add_power_sum(mu.parts(), &q(rng.random_range(-3..=3)), &Sl2Character::irreducible(2 * m));
    }
    x
}

fn adjacent(n: usize, i: usize) -> Perm {
    let mut s: Perm = (0..n).collect();
    s.swap(i, i + 1);
    s
}

fn clifton(n_max: usize) -> Result<()> {
    for n in 1..=n_max {
        let perms = all_permutations(n);
        let id: Perm = (0..n).collect();
        for lam in partitions(n) {
            let mut rep = CliftonRep::new(&lam);
            ensure!(rep.rho(&id)? == QMatrix::identity(rep.dim()), "{lam}: identity");
            let gens: Vec<QMatrix> = (0..n - 1).map(|i| rep.rho(&adjacent(n, i))).collect::<Result<_, _>>()?;
            for s in &perms {
                let m = rep.rho(s)?;
                let tr = m.trace();
                ensure!(tr == q(character(&lam, &cycle_type(s))?), "{lam}: trace at {s:?}");
                // closure under right multiplication by generators covers all products
                for (i, g) in gens.iter().enumerate() {
                    ensure!(rep.rho(&compose(s, &adjacent(n, i)))? == m.mul(g), "{lam}: {s:?}·s_{i}");
                }
            }
        }
    }
    Ok(())
}

fn structural() -> Result<String> {
    let j = truncated_free_jordan(2, 5, &[0, 0])?;
    let t = tag(&j)?;
    ensure!(t.algebra.jacobi_failure().is_none(), "Jacobi fails on TAG of the truncation");

    let mut rng = StdRng::seed_from_u64(0x5eed);
    derivation_identities(&truncated_free_jordan(2, 4, &[0, 0])?, &mut rng, 40)?;
    derivation_identities(&symmetric_2x2(), &mut rng, 40)?;

    for _ in 0..24 {
        let (x, y) = (random_class(&mut rng), random_class(&mut rng));
        ensure!(x.add(&y)?.lambda_op()? == x.lambda_op()?.mul(&y.lambda_op()?)?, "λ not multiplicative");
    }

    clifton(6)?;
    Ok(format!("TAG dim {}; derivation identities, λ and Clifton checks hold", t.algebra.dim()))
}

fn effectivity() -> Result<String> {
    let km = km_prediction(14, 14)?;
    for n in 1..=14 {
        let e = effectivity_check(&km.a, n)?;
        ensure!(e.effective, "degree {n}: negatives {:?}", e.negatives);
    }
    Ok("predicted Jord(n) effective for n ≤ 14".into())
}

fn multidegrees() -> Result<String> {
    for (delta, want) in [([9, 1, 1], 55), ([8, 2, 1], 250)] {
        let d = multidegree_dim(&delta)?;
        ensure!(d == want, "{delta:?}: {d}");
    }
    Ok("55 and 250".into())
}

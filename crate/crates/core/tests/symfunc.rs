use freejord_core::combinat::{partitions, Partition, VirtualSnModule};
use freejord_core::kernel::Q;
use freejord_core::reference::{multilinear_module, MULTILINEAR_DIMS, TWO_GENERATOR_DIMS, TWO_GENERATOR_PREDICTED_B20};
use freejord_core::series::predict_dims;
use freejord_core::symfunc::{
    dims_from_character, effectivity_check, from_schur, km_prediction, schur_decompose, GradedVirtualCharacter,
    Sl2Character,
};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn prediction_tables_through_degree_ten() {
    let km = km_prediction(10, 10).unwrap();
    for n in 1..=10 {
        let m = schur_decompose(&km.a, n).unwrap();
        let expected = multilinear_module(n).unwrap();
        assert_eq!(m.mult.len(), expected.mult.len(), "degree {n}");
        for (lam, k) in &expected.mult {
            assert_eq!(m.get(lam), BigInt::from(*k), "degree {n}, {lam}");
        }
        assert_eq!(m.dim(), BigInt::from(MULTILINEAR_DIMS[n - 1]));
    }
}

#[test]
fn pipelines_agree() {
    for d in 1..=3 {
        let km = km_prediction(d, 14).unwrap();
        let via_chars = dims_from_character(&km.a, d).unwrap();
        assert_eq!(via_chars, predict_dims(d as u32, 14).unwrap(), "d = {d}");
    }
}

#[test]
fn two_generator_values() {
    let km = km_prediction(2, 20).unwrap();
    let a = dims_from_character(&km.a, 2).unwrap().to_u64().unwrap();
    assert_eq!(&a[..18], &TWO_GENERATOR_DIMS[..18]);
    assert_eq!(a[18], 262658);
    let b = dims_from_character(&km.b, 2).unwrap().to_u64().unwrap();
    assert_eq!(b[19], TWO_GENERATOR_PREDICTED_B20);
    assert!(km.verify().unwrap());
}

#[test]
fn full_rank_prediction_agrees_with_restriction() {
    // evaluating the lossless class at d = 2 gives the same numbers as computing in two variables
    let full = km_prediction(8, 8).unwrap();
    let small = km_prediction(2, 8).unwrap();
    assert_eq!(dims_from_character(&full.a, 2).unwrap(), dims_from_character(&small.a, 2).unwrap());
    assert_eq!(dims_from_character(&full.b, 2).unwrap(), dims_from_character(&small.b, 2).unwrap());
}

#[test]
fn effective_through_degree_ten() {
    let km = km_prediction(10, 10).unwrap();
    for n in 1..=10 {
        assert!(effectivity_check(&km.a, n).unwrap().effective, "degree {n}");
    }
}

/// Alternating sum of exterior powers of `V ⊗ L(2)`-type classes by weight enumeration:
/// the weights of `Λ^k` are the `k`-subsets of the weight multiset.
fn exterior_weights(weights: &[(Vec<usize>, i32)], k: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let n = weights.len();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        let mut x = vec![0; weights[0].0.len()];
        let mut q = 0;
        for &i in &idx {
            for (a, b) in x.iter_mut().zip(&weights[i].0) {
                *a += b;
            }
            q += weights[i].1;
        }
        out.push((x, q));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Monomial-symmetric coefficient of `x^μ` (μ a partition padded to d) in a class.
fn monomial_coeff(x: &GradedVirtualCharacter, n: usize, exp: i32, mu: &[usize]) -> Q {
    // expand p_ν at x^μ: number of ways to assign parts of ν to variables
    fn count(parts: &[usize], target: &mut Vec<usize>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(target.iter().all(|&t| t == 0));
        };
        let mut total = 0;
        for i in 0..target.len() {
            if target[i] >= first {
                target[i] -= first;
                total += count(rest, target);
                target[i] += first;
            }
        }
        total
    }
    let Some(v) = x.degree(n).get(&exp) else { return Q::from_integer(0.into()) };
    x.basis()
        .partitions(n)
        .iter()
        .zip(v)
        .map(|(nu, c)| c * Q::from_integer(count(nu.parts(), &mut mu.to_vec()).into()))
        .sum()
}

#[test]
fn lambda_matches_exterior_powers() {
    // U = V ⊗ L(2) in degree 1, three variables: weights e_i with q in {2, 0, -2}
    let d = 3;
    let order = 5;
    let mut x = GradedVirtualCharacter::zero(d, order);
    x.add_power_sum(&[1], &Q::from_integer(1.into()), &Sl2Character::irreducible(2));
    let lam = x.lambda_op().unwrap();
    let mut weights = Vec::new();
    for i in 0..d {
        for q in [2, 0, -2] {
            let mut e = vec![0; d];
            e[i] = 1;
            weights.push((e, q));
        }
    }
    for k in 1..=order {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let ext = exterior_weights(&weights, k);
        for mu in partitions(k).into_iter().filter(|m| m.len() <= d) {
            let mut padded = mu.parts().to_vec();
            padded.resize(d, 0);
            for q in (-2 * k as i32..=2 * k as i32).step_by(2) {
                let count = ext.iter().filter(|(w, e)| *w == padded && *e == q).count() as i64;
                assert_eq!(monomial_coeff(&lam, k, q, &padded), Q::from_integer((sign * count).into()));
            }
        }
    }
}

#[test]
fn lambda_of_l2_in_one_variable() {
    let mut x = GradedVirtualCharacter::zero(1, 2);
    x.add_power_sum(&[1], &Q::from_integer(1.into()), &Sl2Character::irreducible(2));
    let lam = x.lambda_op().unwrap();
    // Λ²(L(2)) = L(2), with x² in front
    let iso = lam.isotype(2);
    assert_eq!(iso.coords(2), vec![Q::from_integer(1.into())]);
    assert_eq!(lam.isotype(0).coords(2), vec![Q::from_integer(0.into())]);
}

fn small_class() -> impl Strategy<Value = GradedVirtualCharacter> {
    prop::collection::vec((1usize..=3, 0usize..3, 0u32..3, -3i64..=3), 0..5).prop_map(|terms| {
        let mut x = GradedVirtualCharacter::zero(3, 5);
        for (n, which, m, c) in terms {
            let ps = partitions(n);
            let mu = &ps[which % ps.len()];
            x.add_power_sum(mu.parts(), &Q::from_integer(c.into()), &Sl2Character::irreducible(2 * m));
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lambda_is_multiplicative(x in small_class(), y in small_class()) {
        let lhs = x.add(&y).unwrap().lambda_op().unwrap();
        let rhs = x.lambda_op().unwrap().mul(&y.lambda_op().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_round_trip(n in 1usize..=8, coeffs in prop::collection::vec(-5i64..=5, 22)) {
        let mut m = VirtualSnModule::new(n);
        for (lam, c) in partitions(n).into_iter().zip(coeffs) {
            m.set(lam, BigInt::from(c));
        }
        let x = from_schur(n, n, &m);
        prop_assert_eq!(schur_decompose(&x, n).unwrap(), m);
    }
}

#[test]
fn partition_parse_sanity() {
    let p: Partition = "5,5".parse().unwrap();
    let km = km_prediction(10, 10).unwrap();
    assert_eq!(schur_decompose(&km.a, 10).unwrap().get(&p), BigInt::from(16));
}

#[test]
fn effective_through_degree_fourteen() {
    let km = km_prediction(14, 14).unwrap();
    for n in 1..=14 {
        assert!(effectivity_check(&km.a, n).unwrap().effective, "degree {n}");
    }
}

use freejord_core::clifton::{clifton_matrix, rep_matrix, CliftonRep};
use freejord_core::combinat::{all_permutations, character, compose, cycle_type, partitions, Perm};
use freejord_core::kernel::{q, QMatrix, DEFAULT_PRIMES};
use freejord_core::kernel::{rank_mod_p, ModMatrix};
use proptest::prelude::*;

fn trace_i64(m: &QMatrix) -> i64 {
    let t = m.trace();
    assert!(t.is_integer());
    t.to_integer().try_into().unwrap()
}

#[test]
fn traces_are_characters() {
    for n in 1..=6 {
        let perms = all_permutations(n);
        for lam in partitions(n) {
            let mut rep = CliftonRep::new(&lam);
            for s in &perms {
                let m = rep.rho(s).unwrap();
                assert_eq!(trace_i64(&m), character(&lam, &cycle_type(s)).unwrap(), "{lam} at {s:?}");
            }
        }
    }
}

#[test]
fn homomorphism_exhaustive() {
    for n in 1..=5 {
        let perms = all_permutations(n);
        for lam in partitions(n) {
            let mut rep = CliftonRep::new(&lam);
            let mats: Vec<QMatrix> = perms.iter().map(|s| rep.rho(s).unwrap()).collect();
            for (i, a) in perms.iter().enumerate() {
                for (j, b) in perms.iter().enumerate() {
                    assert_eq!(mats[i].mul(&mats[j]), rep.rho(&compose(a, b)).unwrap());
                }
            }
        }
    }
}

#[test]
fn identity_pairing_is_invertible() {
    let p = DEFAULT_PRIMES[0];
    for n in 1..=10 {
        let id: Perm = (0..n).collect();
        for lam in partitions(n) {
            let rep = CliftonRep::new(&lam);
            let a = rep.a_matrix(&id);
            let m = ModMatrix::from_rows(&a, p);
            assert_eq!(rank_mod_p(&m), rep.dim(), "{lam}");
        }
    }
}

#[test]
fn bad_permutations_are_rejected() {
    let lam = partitions(3).remove(0);
    assert!(rep_matrix(&lam, &[0, 0, 1]).is_err());
    assert!(clifton_matrix(&lam, &[0, 1]).is_err());
    assert_eq!(rep_matrix(&lam, &[2, 0, 1]).unwrap().matrix, QMatrix::from_rows(vec![vec![q(1)]]));
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Perm>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homomorphism_random((a, b, seed) in (6usize..=8).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), 0usize..1000))) {
        let lams = partitions(a.len());
        let lam = &lams[seed % lams.len()];
        let mut rep = CliftonRep::new(lam);
        let lhs = rep.rho(&a).unwrap().mul(&rep.rho(&b).unwrap());
        prop_assert_eq!(lhs, rep.rho(&compose(&a, &b)).unwrap());
    }
}

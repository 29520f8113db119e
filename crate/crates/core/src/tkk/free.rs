use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::algebra::{AlgebraFD, Kind};
use crate::kernel::{qf, QEchelon, Q};
use crate::special::reversible_dim;
use crate::{Error, Result};

/// Largest total dimension built by [`truncated_free_jordan`].
pub const TRUNCATION_DIM_CAP: usize = 600;

/// Largest degree for which the free Jordan algebra on three or more
/// generators is known to embed in the free associative algebra.
pub const SPECIAL_DEGREE_BOUND: usize = 7;

/// `Jord / (degree > N)` on `g` generators with the given parities.
///
/// Even generators are realised as Jordan polynomials in the free
/// associative algebra under `a∘b = (ab + ba)/2`. This is faithful for two
/// generators in every degree, and for more generators below degree 8
/// where the first identities of special Jordan algebras appear. One odd
/// generator squares to zero.
pub fn truncated_free_jordan(g: usize, n: usize, parities: &[u8]) -> Result<AlgebraFD> {
    if parities.len() != g || g == 0 || n == 0 {
        return Err(Error::input("need g ≥ 1, N ≥ 1 and one parity per generator"));
    }
    if parities.iter().any(|&p| p > 1) {
        return Err(Error::input("parity must be 0 or 1"));
    }
    if g == 1 && parities[0] == 1 {
        return AlgebraFD::new(Kind::Jordan, vec!["x".into()], vec![1], Some(vec![1]), &[]);
    }
    if parities.contains(&1) {
        return Err(Error::Infeasible(format!("signature {parities:?} is not supported")));
    }
    if g > 2 && n > SPECIAL_DEGREE_BOUND {
        return Err(Error::Infeasible(format!(
            "{g} generators beyond degree {SPECIAL_DEGREE_BOUND} are not special"
        )));
    }
    special_truncation(g, n)
}

fn special_truncation(g: usize, n: usize) -> Result<AlgebraFD> {
    let gp = |m: usize| (g as u64).checked_pow(m as u32).filter(|&x| x <= 1 << 16);
    let half = qf(1, 2);
    // basis[m]: rows of the reduced echelon form in degree m, over words of length m
    let mut echelons: Vec<QEchelon> = vec![QEchelon::new(0)];
    let mut e1 = QEchelon::new(g);
    for i in 0..g {
        let mut v = vec![Q::zero(); g];
        v[i] = Q::from_integer(1.into());
        e1.insert(v);
    }
    echelons.push(e1);
    let mut total = g;
    let jordan = |a: &[Q], la: usize, b: &[Q], lb: usize| -> Vec<Q> {
        let (wa, wb) = (g.pow(la as u32), g.pow(lb as u32));
        let mut out = vec![Q::zero(); wa * wb];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let c = x * y * &half;
                out[i * wb + j] += &c;
                out[j * wa + i] += c;
            }
        }
        out
    };
    for m in 2..=n {
        let width = gp(m).ok_or_else(|| Error::Infeasible(format!("{g}^{m} words")))? as usize;
        let mut ech = QEchelon::new(width);
        for i in 1..=m / 2 {
            for a in echelons[i].rows() {
                for b in echelons[m - i].rows() {
                    ech.insert(jordan(a, i, b, m - i));
                }
            }
        }
        if g == 2 && ech.rank() as u64 != reversible_dim(m) {
            return Err(Error::Internal(format!("degree {m}: span {} differs from the reversible elements", ech.rank())));
        }
        total += ech.rank();
        if total > TRUNCATION_DIM_CAP {
            return Err(Error::Infeasible(format!("truncation has dimension above {TRUNCATION_DIM_CAP}")));
        }
        echelons.push(ech);
    }
    let mut labels = Vec::with_capacity(total);
    let mut degree = Vec::with_capacity(total);
    let mut offset = vec![0usize; n + 2];
    for m in 1..=n {
        offset[m + 1] = offset[m] + echelons[m].rank();
        for &p in echelons[m].pivots() {
            let mut letters = Vec::with_capacity(m);
            let mut w = p;
            for _ in 0..m {
                letters.push(char::from(b'1' + (w % g) as u8));
                w /= g;
            }
            letters.reverse();
            labels.push(if m == 1 { format!("x{}", letters[0]) } else { letters.into_iter().collect() });
            degree.push(m as u32);
        }
    }
    let mut products = Vec::new();
    for p in 1..=n {
        for r in 1..=n - p {
            for (i, a) in echelons[p].rows().iter().enumerate() {
                for (j, b) in echelons[r].rows().iter().enumerate() {
                    let v = jordan(a, p, b, r);
                    let c = echelons[p + r]
                        .coordinates(&v)
                        .ok_or_else(|| Error::Internal("Jordan product left the span".into()))?;
                    for (k, x) in c.into_iter().enumerate() {
                        if !x.is_zero() {
                            products.push((offset[p] + i, offset[r] + j, offset[p + r] + k, x));
                        }
                    }
                }
            }
        }
    }
    AlgebraFD::new(Kind::Jordan, labels, vec![0; total], Some(degree), &products)
}

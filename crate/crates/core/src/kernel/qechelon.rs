use alloc::vec::Vec;

use num_traits::Zero;

use super::Q;

/// Incrementally built reduced row echelon form over the rationals.
///
/// Rows stay fully reduced, so the coordinates of a vector in the span are
/// its entries at the pivot columns.
#[derive(Debug, Clone)]
pub struct QEchelon {
    len: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl QEchelon {
    pub fn new(len: usize) -> Self {
        QEchelon { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    /// Subtracts the span from `v`; the result vanishes at every pivot.
    pub fn reduce(&self, v: &mut [Q]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Q>) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` against the stored rows, or `None` outside the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        if w.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::super::q;
    use super::*;

    #[test]
    fn coordinates_in_span() {
        let mut e = QEchelon::new(3);
        assert!(e.insert(vec![q(1), q(2), q(0)]));
        assert!(e.insert(vec![q(0), q(1), q(1)]));
        assert!(!e.insert(vec![q(1), q(3), q(1)]));
        assert_eq!(e.rank(), 2);
        let v = vec![q(2), q(5), q(1)];
        let c = e.coordinates(&v).unwrap();
        let mut back = vec![Q::zero(); 3];
        for (k, row) in c.iter().zip(e.rows()) {
            for (b, r) in back.iter_mut().zip(row) {
                *b += k * r;
            }
        }
        assert_eq!(back, v);
        assert!(e.coordinates(&[q(0), q(0), q(1)]).is_none());
    }
}

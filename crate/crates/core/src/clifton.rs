//! Irreducible representations of `S_n` from standard tableaux.
//!
//! `A_λ(σ)_{ij}` pairs the tabloid of `t_i` with the polytabloid of
//! `σ·t_j`; its entries are 0 or ±1 and `ρ(σ) = A_λ(id)⁻¹ A_λ(σ)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinat::{Partition, Perm};
use crate::kernel::QMatrix;
use crate::{Error, Result};

/// A standard tableau stored row by row with entries `0..n`.
pub type Tableau = Vec<Vec<usize>>;

/// A representation matrix tagged with its shape and permutation.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrepMatrix {
    pub lambda: Partition,
    pub sigma: Perm,
    pub matrix: QMatrix,
}

/// Standard tableaux of shape `λ`, ordered by where the largest entry sits
/// (lower rows first), recursively.
pub fn standard_tableaux(lam: &Partition) -> Vec<Tableau> {
    let n = lam.size();
    if n == 0 {
        return vec![Vec::new()];
    }
    let parts = lam.parts();
    let mut out = Vec::new();
    for r in (0..parts.len()).rev() {
        let corner = parts.get(r + 1).copied().unwrap_or(0) < parts[r];
        if !corner {
            continue;
        }
        let mut smaller = parts.to_vec();
        smaller[r] -= 1;
        for mut t in standard_tableaux(&Partition::from_composition(&smaller)) {
            if t.len() <= r {
                t.push(Vec::new());
            }
            t[r].push(n - 1);
            out.push(t);
        }
    }
    out
}

fn perm_sign(v: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                s = -s;
            }
        }
    }
    s
}

/// Shape data plus the cached inverse of `A_λ(id)` and generator matrices.
#[derive(Clone, Debug)]
pub struct CliftonRep {
    lambda: Partition,
    tableaux: Vec<Tableau>,
    // row_of[i][x]: row of entry x in tableau i
    row_of: Vec<Vec<usize>>,
    a_id_inv: QMatrix,
    generators: Vec<Option<QMatrix>>,
}

impl CliftonRep {
    pub fn new(lambda: &Partition) -> Self {
        let n = lambda.size();
        let tableaux = standard_tableaux(lambda);
        let row_of = tableaux
            .iter()
            .map(|t| {
                let mut r = vec![0; n];
                for (i, row) in t.iter().enumerate() {
                    for &x in row {
                        r[x] = i;
                    }
                }
                r
            })
            .collect();
        let mut rep = CliftonRep {
            lambda: lambda.clone(),
            tableaux,
            row_of,
            a_id_inv: QMatrix::zeros(0, 0),
            generators: vec![None; n.saturating_sub(1)],
        };
        let id: Perm = (0..n).collect();
        let a = QMatrix::from_i64(&rep.a_matrix(&id));
        rep.a_id_inv = a.inverse().expect("A(id) is unitriangular up to order");
        rep
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Pairing of the tabloid `{t_i}` with the polytabloid of `σ·t_j`.
    pub fn entry(&self, i: usize, j: usize, sigma: &[usize]) -> i64 {
        let t = &self.tableaux[j];
        let rows = &self.row_of[i];
        let mut sign = 1;
        let mut col = Vec::with_capacity(t.len());
        for c in 0..t[0].len() {
            col.clear();
            for row in t.iter().take_while(|row| row.len() > c) {
                col.push(rows[sigma[row[c]]]);
            }
            // the rows met by the column must be exactly 0..h
            let mut seen = 0u64;
            for &r in &col {
                if r >= col.len() || seen & (1 << r) != 0 {
                    return 0;
                }
                seen |= 1 << r;
            }
            sign *= perm_sign(&col);
        }
        sign
    }

    /// `A_λ(σ)` as an integer matrix.
    pub fn a_matrix(&self, sigma: &[usize]) -> Vec<Vec<i64>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.entry(i, j, sigma)).collect()).collect()
    }

    fn generator(&mut self, i: usize) -> &QMatrix {
        if self.generators[i].is_none() {
            let n = self.lambda.size();
            let mut s: Perm = (0..n).collect();
            s.swap(i, i + 1);
            let m = self.a_id_inv.mul(&QMatrix::from_i64(&self.a_matrix(&s)));
            self.generators[i] = Some(m);
        }
        self.generators[i].as_ref().unwrap()
    }

    /// `ρ(σ)`, composed from cached adjacent transpositions.
    pub fn rho(&mut self, sigma: &[usize]) -> Result<QMatrix> {
        let n = self.lambda.size();
        if sigma.len() != n {
            return Err(Error::input(format!("permutation of {} points for a shape of size {n}", sigma.len())));
        }
        let mut cur = sigma.to_vec();
        let mut result = QMatrix::identity(self.dim());
        while let Some(i) = (0..n.saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
            result = self.generator(i).mul(&result);
            cur.swap(i, i + 1);
        }
        Ok(result)
    }
}

fn check(lam: &Partition, sigma: &[usize]) -> Result<()> {
    let n = lam.size();
    let mut seen = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&x| x >= n || core::mem::replace(&mut seen[x], true)) {
        return Err(Error::input(format!("not a permutation of {n} points")));
    }
    Ok(())
}

/// The combinatorial matrix `A_λ(σ)`.
pub fn clifton_matrix(lam: &Partition, sigma: &[usize]) -> Result<IrrepMatrix> {
    check(lam, sigma)?;
    let rep = CliftonRep::new(lam);
    Ok(IrrepMatrix { lambda: lam.clone(), sigma: sigma.to_vec(), matrix: QMatrix::from_i64(&rep.a_matrix(sigma)) })
}

/// The representation matrix `ρ_λ(σ)`.
pub fn rep_matrix(lam: &Partition, sigma: &[usize]) -> Result<IrrepMatrix> {
    check(lam, sigma)?;
    let matrix = CliftonRep::new(lam).rho(sigma)?;
    Ok(IrrepMatrix { lambda: lam.clone(), sigma: sigma.to_vec(), matrix })
}

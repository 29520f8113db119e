use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{consequences, normal_types, GeneratingSet, MarkedTree, NormalType, Straightener};
use crate::clifton::CliftonRep;
use crate::combinat::{all_permutations, partitions, Partition, Perm, SnModule};
use crate::kernel::{Echelon, Fp, DEFAULT_PRIMES};
use crate::{Error, Result};

/// One straightened identity: `(type index, σ, coefficient)` terms.
type Relation = Vec<(usize, Perm, u64)>;

/// Straightened identities of degree `n`, reduced modulo each prime.
#[derive(Debug, Clone)]
pub struct JordanOperad {
    n: usize,
    set: GeneratingSet,
    types: Vec<NormalType>,
    j_n: usize,
    primes: Vec<u64>,
    relations: Vec<Vec<Relation>>,
}

/// Rank data of one isotypic block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HentzelBlock {
    pub lambda: Partition,
    pub f_n: usize,
    pub j_n: usize,
    pub d_lambda: usize,
    /// Row count of the identity matrix: `f_n · d_λ`.
    pub rows: usize,
    pub rank: usize,
    pub multiplicity: u64,
    pub primes: Vec<u64>,
}

impl JordanOperad {
    /// Straightens the generating set once per prime.
    pub fn new(n: usize, set: GeneratingSet, primes: &[u64]) -> Result<Self> {
        if n == 0 || n > 16 {
            return Err(Error::input(format!("degree {n} outside 1..=16")));
        }
        if primes.is_empty() || primes.iter().any(|&p| p < 3 || !crate::kernel::is_prime(p)) {
            return Err(Error::input("need odd primes"));
        }
        let types = normal_types(n);
        let index: HashMap<Vec<u8>, usize> = types.iter().enumerate().map(|(i, t)| (t.tail.clone(), i)).collect();
        let gens = consequences(n, set);
        let mut relations = Vec::with_capacity(primes.len());
        for &p in primes {
            let mut st = Straightener::new(Fp::new(p));
            relations.push(gens.iter().map(|g| straighten_identity(&mut st, g, &index)).collect());
        }
        Ok(JordanOperad { n, set, types, j_n: gens.len(), primes: primes.to_vec(), relations })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generating_set(&self) -> GeneratingSet {
        self.set
    }

    pub fn f_n(&self) -> usize {
        self.types.len()
    }

    pub fn j_n(&self) -> usize {
        self.j_n
    }

    pub fn types(&self) -> &[NormalType] {
        &self.types
    }

    /// Multiplicity of `V_λ` in `Jord(n)`, ranks checked across all primes.
    pub fn block(&self, lambda: &Partition) -> Result<HentzelBlock> {
        if lambda.size() != self.n {
            return Err(Error::input(format!("{lambda} is not a partition of {}", self.n)));
        }
        let pairing = Pairing::new(lambda);
        let d = pairing.d;
        let f = self.types.len();
        let mut ranks = Vec::with_capacity(self.primes.len());
        for (k, &p) in self.primes.iter().enumerate() {
            ranks.push((p, self.rank_mod(&pairing, &self.relations[k], p)));
        }
        let best = ranks.iter().map(|r| r.1).max().unwrap();
        if let Some(&(prime, rank)) = ranks.iter().find(|r| r.1 != best) {
            return Err(Error::UnluckyPrime { prime, rank, expected: best });
        }
        Ok(HentzelBlock {
            lambda: lambda.clone(),
            f_n: f,
            j_n: self.j_n,
            d_lambda: d,
            rows: f * d,
            rank: best,
            multiplicity: (f * d - best) as u64,
            primes: self.primes.clone(),
        })
    }

    fn rank_mod(&self, pairing: &Pairing, relations: &[Relation], p: u64) -> usize {
        let fp = Fp::new(p);
        let d = pairing.d;
        let width = self.types.len() * d;
        let mut ech = Echelon::new(width, p);
        let id: Perm = (0..self.n).collect();
        // symmetries of each association type
        for (ti, ty) in self.types.iter().enumerate() {
            for g in ty.automorphism_generators() {
                let rel = vec![(ti, id.clone(), 1), (ti, g, p - 1)];
                insert_block(&mut ech, pairing, &rel, fp, d, width);
            }
        }
        for rel in relations {
            if ech.is_full() {
                break;
            }
            insert_block(&mut ech, pairing, rel, fp, d, width);
        }
        ech.rank()
    }

    /// All multiplicities, one block after another.
    pub fn module(&self) -> Result<SnModule> {
        let mut m = SnModule::new(self.n);
        for lam in partitions(self.n) {
            let b = self.block(&lam)?;
            m.set(lam, b.multiplicity);
        }
        Ok(m)
    }
}

fn straighten_identity(st: &mut Straightener<Fp>, g: &MarkedTree, index: &HashMap<Vec<u8>, usize>) -> Relation {
    let fp = *st.scalars();
    let mut acc: HashMap<_, u64> = HashMap::new();
    for (sign, t) in g.expand() {
        for (m, c) in st.nf(&t) {
            let c = fp.mul(c, fp.from_i64(sign));
            let e = acc.entry(m).or_insert(0);
            *e = fp.add(*e, c);
        }
    }
    let mut rel: Relation = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(m, c)| (index[&m.shape()], m.labels(), c))
        .collect();
    rel.sort();
    rel
}

/// Adds the `d` rows `Σ c · A_λ(σ)_{i,·}` of one relation.
fn insert_block(ech: &mut Echelon, pairing: &Pairing, rel: &[(usize, Perm, u64)], fp: Fp, d: usize, width: usize) {
    let mut block = vec![0u64; d * width];
    let mut col = Vec::new();
    for (t, sigma, c) in rel {
        for j in 0..d {
            col.clear();
            pairing.column(sigma, j, &mut col);
            for &(i, s) in &col {
                let slot = &mut block[i * width + t * d + j];
                *slot = if s > 0 { fp.add(*slot, *c) } else { fp.sub(*slot, *c) };
            }
        }
    }
    for row in block.chunks(width) {
        if row.iter().any(|&x| x != 0) {
            ech.insert(row.to_vec());
            if ech.is_full() {
                return;
            }
        }
    }
}

/// Evaluates columns of Clifton matrices either entry by entry or by
/// expanding the polytabloid over the column group, whichever is cheaper.
struct Pairing {
    d: usize,
    rep: CliftonRep,
    // for the expansion: entries of each tableau in reading order
    entries: Vec<Vec<usize>>,
    cell_rows: Vec<u8>,
    colgroup: Option<Vec<(Vec<usize>, bool)>>,
    tabloids: HashMap<Vec<u8>, usize>,
}

impl Pairing {
    fn new(lambda: &Partition) -> Self {
        let rep = CliftonRep::new(lambda);
        let d = rep.dim();
        let n = lambda.size();
        let entries: Vec<Vec<usize>> = rep.tableaux().iter().map(|t| t.concat()).collect();
        let cell_rows: Vec<u8> =
            lambda.parts().iter().enumerate().flat_map(|(r, &len)| core::iter::repeat_n(r as u8, len)).collect();
        let conj = lambda.conjugate();
        let group_size: u64 = conj.parts().iter().map(|&h| (1..=h as u64).product::<u64>()).product();
        let colgroup = (group_size <= d as u64).then(|| column_group(lambda));
        let tabloids = entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mut r = vec![0u8; n];
                for (cell, &x) in e.iter().enumerate() {
                    r[x] = cell_rows[cell];
                }
                (r, i)
            })
            .collect();
        Pairing { d, rep, entries, cell_rows, colgroup, tabloids }
    }

    /// Nonzero entries `(i, ±1)` of column `j` of `A_λ(σ)`.
    fn column(&self, sigma: &[usize], j: usize, out: &mut Vec<(usize, i8)>) {
        match &self.colgroup {
            None => {
                for i in 0..self.d {
                    let e = self.rep.entry(i, j, sigma);
                    if e != 0 {
                        out.push((i, e as i8));
                    }
                }
            }
            Some(group) => {
                let ent = &self.entries[j];
                let mut key = vec![0u8; ent.len()];
                for (perm, odd) in group {
                    for (cell, &src) in perm.iter().enumerate() {
                        key[sigma[ent[src]]] = self.cell_rows[cell];
                    }
                    if let Some(&i) = self.tabloids.get(&key) {
                        out.push((i, if *odd { -1 } else { 1 }));
                    }
                }
            }
        }
    }
}

/// Cell permutations preserving every column of `λ`, with parity.
fn column_group(lambda: &Partition) -> Vec<(Vec<usize>, bool)> {
    let parts = lambda.parts();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        offsets.push(acc);
        acc += p;
    }
    let n = acc;
    let mut group = vec![((0..n).collect::<Vec<usize>>(), false)];
    for (c, h) in lambda.conjugate().parts().iter().enumerate() {
        let cells: Vec<usize> = (0..*h).map(|r| offsets[r] + c).collect();
        let mut next = Vec::new();
        for perm in all_permutations(*h) {
            let odd = crate::combinat::sign(&perm) < 0;
            for (g, godd) in &group {
                let mut g2 = g.clone();
                for (k, &cell) in cells.iter().enumerate() {
                    g2[cell] = g[cells[perm[k]]];
                }
                next.push((g2, *godd ^ odd));
            }
        }
        group = next;
    }
    group
}

/// Multiplicity of `V_λ` in `Jord(n)` with the default primes.
pub fn multiplicity(lambda: &Partition, n: usize) -> Result<u64> {
    if lambda.size() != n {
        return Err(Error::input(format!("{lambda} is not a partition of {n}")));
    }
    Ok(JordanOperad::new(n, GeneratingSet::default(), &DEFAULT_PRIMES[..2])?.block(lambda)?.multiplicity)
}

/// Largest degree [`jord_module`] accepts without an explicit opt-in.
pub const JORD_MODULE_BOUND: usize = 7;

/// The `S_n`-module `Jord(n)` for `n ≤` [`JORD_MODULE_BOUND`].
pub fn jord_module(n: usize) -> Result<SnModule> {
    if n > JORD_MODULE_BOUND {
        return Err(Error::Infeasible(format!(
            "degree {n} exceeds the default bound {JORD_MODULE_BOUND}; use JordanOperad directly"
        )));
    }
    JordanOperad::new(n, GeneratingSet::default(), &DEFAULT_PRIMES[..2])?.module()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifton::CliftonRep;

    #[test]
    fn column_methods_agree() {
        for lam in partitions(5) {
            let pairing = Pairing::new(&lam);
            let rep = CliftonRep::new(&lam);
            let mut forced = Pairing::new(&lam);
            forced.colgroup = Some(column_group(&lam));
            for sigma in all_permutations(5).iter().step_by(7) {
                for j in 0..pairing.d {
                    let mut a = Vec::new();
                    let mut b = Vec::new();
                    pairing.column(sigma, j, &mut a);
                    forced.column(sigma, j, &mut b);
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                    let direct: Vec<(usize, i8)> = (0..rep.dim())
                        .filter_map(|i| {
                            let e = rep.entry(i, j, sigma);
                            (e != 0).then_some((i, e as i8))
                        })
                        .collect();
                    assert_eq!(a, direct);
                }
            }
        }
    }

    #[test]
    fn small_multiplicities() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(multiplicity(&p("2,1"), 3).unwrap(), 1);
        assert_eq!(multiplicity(&p("1^4"), 4).unwrap(), 0);
        assert_eq!(multiplicity(&p("2,2"), 4).unwrap(), 2);
        assert_eq!(multiplicity(&p("1,1"), 2).unwrap(), 0);
        assert!(multiplicity(&p("2,1"), 4).is_err());
    }
}

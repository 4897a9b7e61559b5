//! Set partitions, Bell and Stirling numbers, subalgebras of `Kⁿ` from
//! partitions, and the idempotent-matrix description of algebra maps
//! `R^p → R^n`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::lattice::intermediate_algebras;
use crate::ring::{idempotents, is_field, local_decomposition, product, FiniteRing};

pub const MAX_PARTITION_SIZE: usize = 12;

/// Work budget for the matrix enumeration: matrices times `|R|^p`.
pub const MATRIX_WORK_CAP: u128 = 50_000_000;

/// A partition of `{0, …, n-1}`; blocks are sorted and ordered by least
/// element. Displayed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// From a restricted growth string: `rgs[0] = 0` and each entry is at
    /// most one more than the maximum before it.
    pub fn from_rgs(rgs: &[usize]) -> Result<Partition> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b > blocks.len() {
                return Err(Error::Precondition(format!(
                    "not a restricted growth string at position {i}"
                )));
            }
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i);
        }
        Ok(Partition {
            n: rgs.len(),
            blocks,
        })
    }

    /// Validates and normalizes arbitrary blocks.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block".into()));
            }
            b.sort_unstable();
            for &i in &b {
                if i >= n || seen[i] {
                    return Err(Error::Precondition(format!("bad or repeated point {i}")));
                }
                seen[i] = true;
            }
            out.push(b);
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Precondition("blocks do not cover".into()));
        }
        out.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { n, blocks: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of each point.
    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for &i in b {
                out[i] = j;
            }
        }
        out
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let o = other.rgs();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| o[i] == o[b[0]]))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, b) in self.blocks.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            let items: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_PARTITION_SIZE {
        return Err(Error::Bound(format!(
            "partitions of a {n}-set (limit {MAX_PARTITION_SIZE})"
        )));
    }
    Ok(())
}

/// Calls `f(rgs, blocks)` for every restricted growth string of length `n`,
/// in lexicographic order.
fn visit_rgs(n: usize, mut f: impl FnMut(&[usize], usize)) {
    let mut rgs = vec![0usize; n];
    // max[i] = max(rgs[0..i])
    let mut max = vec![0usize; n];
    loop {
        let blocks = match n {
            0 => 0,
            _ => max[n - 1].max(rgs[n - 1]) + 1,
        };
        f(&rgs, blocks);
        // rightmost position that can still grow
        let Some(i) = (1..n).rev().find(|&i| rgs[i] <= max[i]) else {
            return;
        };
        rgs[i] += 1;
        for j in i + 1..n {
            rgs[j] = 0;
            max[j] = max[j - 1].max(rgs[j - 1]);
        }
    }
}

/// All partitions in lexicographic order of restricted growth strings.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    check_size(n)?;
    let mut out = Vec::new();
    visit_rgs(n, |rgs, _| {
        out.push(Partition::from_rgs(rgs).expect("generated strings are valid"))
    });
    Ok(out)
}

pub fn partitions_into(n: usize, p: usize) -> Result<Vec<Partition>> {
    Ok(partitions(n)?.into_iter().filter(|q| q.len() == p).collect())
}

/// Partition counts by number of blocks, from the enumeration.
fn block_counts(n: usize) -> Result<Vec<u64>> {
    check_size(n)?;
    let mut counts = vec![0u64; n + 1];
    visit_rgs(n, |_, blocks| counts[blocks] += 1);
    Ok(counts)
}

/// `S(n,p)` by the triangle recurrence.
fn stirling_recurrence(n: usize, p: usize) -> u64 {
    let mut row = vec![1u64]; // S(0,0)
    for m in 1..=n {
        let mut next = vec![0u64; m + 1];
        for k in 1..=m {
            let keep = if k < m { k as u64 * row[k] } else { 0 };
            next[k] = keep + row[k - 1];
        }
        row = next;
    }
    row.get(p).copied().unwrap_or(0)
}

pub fn stirling2(n: usize, p: usize) -> Result<u64> {
    let counted = block_counts(n)?.get(p).copied().unwrap_or(0);
    let rec = stirling_recurrence(n, p);
    if counted != rec {
        return Err(Error::FormulaViolation(format!(
            "S({n},{p}): {counted} partitions but the recurrence gives {rec}"
        )));
    }
    Ok(counted)
}

pub fn bell(n: usize) -> Result<u64> {
    let counted: u64 = block_counts(n)?.iter().sum();
    let by_rows: u64 = (0..=n).map(|p| stirling_recurrence(n, p)).sum();
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 1..=n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    let triangle = row[0];
    if counted != by_rows || counted != triangle {
        return Err(Error::FormulaViolation(format!(
            "B({n}): {counted} partitions, Σ S = {by_rows}, triangle = {triangle}"
        )));
    }
    Ok(counted)
}

/// Tuples of `Kⁿ` constant on each block of `π`.
pub fn partition_to_subalgebra(field: &FiniteRing, partition: &Partition) -> Result<ElemSet> {
    let n = partition.n();
    let pr = product(&vec![field.clone(); n])?;
    let rgs = partition.rgs();
    let q = field.order();
    let mut set = ElemSet::empty(pr.ring.order());
    let mut values = vec![0usize; partition.len()];
    loop {
        let comps: Vec<usize> = rgs.iter().map(|&b| values[b]).collect();
        set.insert(pr.encode(&comps));
        let Some(j) = values.iter().rposition(|&v| v + 1 < q) else {
            break;
        };
        values[j] += 1;
        values[j + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(set)
}

/// The partition map checked against the lattice of `K ⊆ Kⁿ`.
#[derive(Clone, Debug)]
pub struct PartitionBijection {
    pub partitions: Vec<Partition>,
    pub subalgebras: Vec<ElemSet>,
    /// Lattice index of each partition's subalgebra.
    pub lattice_index: Vec<Option<usize>>,
    pub lattice_count: usize,
    pub injective: bool,
    pub order_reversing: bool,
}

impl PartitionBijection {
    pub fn surjective(&self) -> bool {
        let hit: BTreeSet<usize> = self.lattice_index.iter().flatten().copied().collect();
        hit.len() == self.lattice_count
    }

    pub fn passed(&self) -> bool {
        self.injective
            && self.order_reversing
            && self.surjective()
            && self.lattice_index.iter().all(Option::is_some)
            && self.partitions.len() == self.lattice_count
    }
}

pub fn partition_bijection(field: &FiniteRing, n: usize) -> Result<PartitionBijection> {
    if !is_field(field) {
        return Err(Error::Precondition(format!("{} is not a field", field.label())));
    }
    let parts = partitions(n)?;
    let subs: Vec<ElemSet> = parts
        .iter()
        .map(|p| partition_to_subalgebra(field, p))
        .collect::<Result<_>>()?;
    let lattice = intermediate_algebras(&Extension::diagonal(field, n)?)?;
    let distinct: BTreeSet<Vec<usize>> = subs.iter().map(ElemSet::to_vec).collect();
    let mut order_reversing = true;
    for (a, pa) in parts.iter().enumerate() {
        for (b, pb) in parts.iter().enumerate() {
            if pa.refines(pb) != subs[b].is_subset(&subs[a]) {
                order_reversing = false;
            }
        }
    }
    Ok(PartitionBijection {
        lattice_index: subs.iter().map(|s| lattice.index_of(s)).collect(),
        lattice_count: lattice.count(),
        injective: distinct.len() == subs.len(),
        order_reversing,
        partitions: parts,
        subalgebras: subs,
    })
}

/// An `n×p` matrix of idempotents, each row a decomposition of `1` into
/// pairwise orthogonal idempotents. Row `i` gives the `i`-th coordinates of
/// the images of the standard idempotents `f_1, …, f_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaMatrix {
    pub rows: Vec<Vec<usize>>,
}

impl LambdaMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn p(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `a² = a`, orthogonal rows entries, each row summing to `1`.
    pub fn is_valid(&self, ring: &FiniteRing) -> bool {
        self.rows.iter().all(|row| row_is_valid(ring, row))
    }

    /// `φ(x)_i = Σ_j a_{i,j} x_j` for every `x ∈ R^p` in index order
    /// (first component most significant).
    pub fn morphism_table(&self, ring: &FiniteRing) -> Vec<Vec<usize>> {
        let p = self.p();
        let q = ring.order();
        let total = q.pow(p as u32);
        (0..total)
            .map(|code| {
                let x = digits(code, q, p);
                self.rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .zip(&x)
                            .fold(ring.zero(), |acc, (&a, &xj)| ring.add(acc, ring.mul(a, xj)))
                    })
                    .collect()
            })
            .collect()
    }

    /// Reads the matrix back off a morphism table: column `j` is `φ(f_j)`.
    pub fn from_morphism(ring: &FiniteRing, p: usize, table: &[Vec<usize>]) -> LambdaMatrix {
        let q = ring.order();
        let n = table.first().map_or(0, Vec::len);
        let mut rows = vec![vec![ring.zero(); p]; n];
        for j in 0..p {
            let mut f = vec![ring.zero(); p];
            f[j] = ring.one();
            let image = &table[undigits(&f, q)];
            for i in 0..n {
                rows[i][j] = image[i];
            }
        }
        LambdaMatrix { rows }
    }

    pub fn is_injective(&self, ring: &FiniteRing) -> bool {
        let zero = vec![ring.zero(); self.n()];
        self.morphism_table(ring)
            .iter()
            .enumerate()
            .all(|(code, y)| code == 0 || *y != zero)
    }

    /// The image `φ(R^p)` as a sorted list of encoded tuples of `R^n`.
    pub fn image(&self, ring: &FiniteRing) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .morphism_table(ring)
            .iter()
            .map(|y| undigits(y, ring.order()))
            .collect();
        set.into_iter().collect()
    }

    /// For 0/1 entries: the sets `{i : a_{i,j} = 1}`.
    pub fn column_supports(&self, ring: &FiniteRing) -> Option<Vec<Vec<usize>>> {
        let mut cols = vec![Vec::new(); self.p()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a == ring.one() {
                    cols[j].push(i);
                } else if a != ring.zero() {
                    return None;
                }
            }
        }
        Some(cols)
    }
}

fn digits(mut code: usize, q: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = code % q;
        code /= q;
    }
    out
}

fn undigits(x: &[usize], q: usize) -> usize {
    x.iter().fold(0, |acc, &d| acc * q + d)
}

fn row_is_valid(ring: &FiniteRing, row: &[usize]) -> bool {
    let sum = row.iter().fold(ring.zero(), |acc, &a| ring.add(acc, a));
    sum == ring.one()
        && row.iter().all(|&a| ring.mul(a, a) == a)
        && row.iter().enumerate().all(|(j, &a)| {
            row[j + 1..].iter().all(|&b| ring.mul(a, b) == ring.zero())
        })
}

/// Ordered decompositions of `1` into `p` pairwise orthogonal idempotents.
pub fn idempotent_rows(ring: &FiniteRing, p: usize) -> Vec<Vec<usize>> {
    let ids = idempotents(ring);
    let mut out = Vec::new();
    let mut row = Vec::with_capacity(p);
    fn go(ring: &FiniteRing, ids: &[usize], p: usize, row: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row.len() == p {
            if row_is_valid(ring, row) {
                out.push(row.clone());
            }
            return;
        }
        for &e in ids {
            if row.iter().all(|&a| ring.mul(a, e) == ring.zero()) {
                row.push(e);
                go(ring, ids, p, row, out);
                row.pop();
            }
        }
    }
    go(ring, &ids, p, &mut row, &mut out);
    out
}

fn check_matrix_work(ring: &FiniteRing, p: usize, n: usize, rows: usize) -> Result<()> {
    let matrices = (rows as u128).checked_pow(n as u32);
    let work = matrices.and_then(|m| m.checked_mul((ring.order() as u128).pow(p as u32)));
    match work {
        Some(w) if w <= MATRIX_WORK_CAP => Ok(()),
        _ => Err(Error::Bound(format!(
            "{rows}^{n} matrices over a ring of order {} with p = {p}",
            ring.order()
        ))),
    }
}

/// All algebra maps `R^p → R^n`, as matrices, rows varying fastest last.
pub fn enumerate_homal(ring: &FiniteRing, p: usize, n: usize) -> Result<Vec<LambdaMatrix>> {
    if p == 0 || n == 0 {
        return Err(Error::Precondition("p and n must be positive".into()));
    }
    let rows = idempotent_rows(ring, p);
    check_matrix_work(ring, p, n, rows.len())?;
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    if rows.is_empty() {
        return Ok(out);
    }
    loop {
        out.push(LambdaMatrix {
            rows: pick.iter().map(|&k| rows[k].clone()).collect(),
        });
        let Some(i) = pick.iter().rposition(|&k| k + 1 < rows.len()) else {
            return Ok(out);
        };
        pick[i] += 1;
        pick[i + 1..].iter_mut().for_each(|k| *k = 0);
    }
}

/// Injective algebra maps `R^p → R^n`.
pub fn enumerate_exal(ring: &FiniteRing, p: usize, n: usize) -> Result<Vec<LambdaMatrix>> {
    Ok(enumerate_homal(ring, p, n)?
        .into_iter()
        .filter(|m| m.is_injective(ring))
        .collect())
}

/// Number of injective algebra maps `R^p → R^n`.
pub fn exal_raw(ring: &FiniteRing, p: usize, n: usize) -> Result<usize> {
    Ok(enumerate_exal(ring, p, n)?.len())
}

/// Number of distinct images of injective maps, i.e. maps up to
/// automorphisms of `R^p`.
pub fn exal_classes(ring: &FiniteRing, p: usize, n: usize) -> Result<usize> {
    let images: BTreeSet<Vec<usize>> = enumerate_exal(ring, p, n)?
        .iter()
        .map(|m| m.image(ring))
        .collect();
    Ok(images.len())
}

/// Exal counts against `S(n,p)` and `S(n,p)^{|Min R|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExalReport {
    pub ring: String,
    pub p: usize,
    pub n: usize,
    pub raw: usize,
    pub classes: usize,
    pub stirling: u64,
    /// Number of local factors, which is the number of minimal primes.
    pub min_primes: usize,
    pub upper_bound: u128,
}

impl ExalReport {
    pub fn within_bounds(&self) -> bool {
        self.stirling as u128 <= self.classes as u128 && self.classes as u128 <= self.upper_bound
    }

    /// Equality with `S(n,p)` for connected rings.
    pub fn passed(&self) -> bool {
        self.within_bounds() && (self.min_primes != 1 || self.classes as u64 == self.stirling)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring,
            "p": self.p,
            "n": self.n,
            "injective_maps": self.raw,
            "images": self.classes,
            "stirling": self.stirling,
            "min_primes": self.min_primes,
            "upper_bound": self.upper_bound.to_string(),
            "within_bounds": self.within_bounds(),
        })
    }
}

pub fn exal_bound_check(ring: &FiniteRing, p: usize, n: usize) -> Result<ExalReport> {
    let exal = enumerate_exal(ring, p, n)?;
    let images: BTreeSet<Vec<usize>> = exal.iter().map(|m| m.image(ring)).collect();
    let stirling = stirling2(n, p)?;
    let min_primes = local_decomposition(ring)?.factors.len();
    Ok(ExalReport {
        ring: ring.label().to_string(),
        p,
        n,
        raw: exal.len(),
        classes: images.len(),
        stirling,
        min_primes,
        upper_bound: (stirling as u128).saturating_pow(min_primes as u32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_gf, make_zmod};

    #[test]
    fn counts() {
        assert_eq!(bell(0).unwrap(), 1);
        assert_eq!(bell(1).unwrap(), 1);
        assert_eq!(bell(3).unwrap(), 5);
        assert_eq!(bell(4).unwrap(), 15);
        assert_eq!(stirling2(3, 2).unwrap(), 3);
        assert_eq!(stirling2(4, 2).unwrap(), 7);
        assert_eq!(stirling2(4, 3).unwrap(), 6);
        assert_eq!(stirling2(3, 4).unwrap(), 0);
        assert!(matches!(bell(13), Err(Error::Bound(_))));
    }

    #[test]
    fn rgs_order() {
        let ps = partitions(3).unwrap();
        let strings: Vec<Vec<usize>> = ps.iter().map(Partition::rgs).collect();
        assert_eq!(
            strings,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
        assert_eq!(ps[2].to_string(), "{{1,3},{2}}");
        assert!(Partition::from_rgs(&[0, 2]).is_err());
        assert!(Partition::from_blocks(3, vec![vec![0, 1]]).is_err());
        assert_eq!(
            Partition::from_blocks(3, vec![vec![2, 0], vec![1]]).unwrap(),
            ps[2]
        );
    }

    #[test]
    fn partition_subalgebras() {
        let f2 = make_gf(2, 1).unwrap();
        let finest = Partition::from_rgs(&[0, 1, 2]).unwrap();
        assert_eq!(partition_to_subalgebra(&f2, &finest).unwrap().len(), 8);
        let coarse = Partition::from_rgs(&[0, 0, 0]).unwrap();
        assert_eq!(partition_to_subalgebra(&f2, &coarse).unwrap().to_vec(), vec![0, 7]);
        let b = partition_bijection(&f2, 3).unwrap();
        assert!(b.passed());
        assert_eq!(b.lattice_count, 5);
    }

    #[test]
    fn rows_and_matrices() {
        let z4 = make_zmod(4).unwrap();
        assert_eq!(idempotent_rows(&z4, 2), vec![vec![0, 1], vec![1, 0]]);
        let homal = enumerate_homal(&z4, 2, 3).unwrap();
        assert_eq!(homal.len(), 8);
        for m in &homal {
            assert!(m.is_valid(&z4));
            let back = LambdaMatrix::from_morphism(&z4, 2, &m.morphism_table(&z4));
            assert_eq!(&back, m);
        }
        assert_eq!(exal_raw(&z4, 2, 3).unwrap(), 6);
        assert_eq!(exal_classes(&z4, 2, 3).unwrap(), 3);
    }

    #[test]
    fn exal_over_products() {
        let f2 = make_gf(2, 1).unwrap();
        let f2f2 = product(&[f2.clone(), f2]).unwrap().ring;
        let rep = exal_bound_check(&f2f2, 2, 3).unwrap();
        assert_eq!(rep.min_primes, 2);
        assert_eq!(rep.upper_bound, 9);
        assert_eq!(rep.classes, 9);
        assert_eq!(rep.raw, 36);
        assert!(rep.passed());
        let f3 = make_gf(3, 1).unwrap();
        let rep = exal_bound_check(&f3, 3, 3).unwrap();
        assert_eq!((rep.classes, rep.raw), (1, 6));
    }
}

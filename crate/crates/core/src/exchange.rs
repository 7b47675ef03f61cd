//! Exchange matrices, quiver mutation, and c-matrix enumeration.
//!
//! An exchange matrix is an integer matrix whose rows are indexed by mutable
//! vertices and whose columns are indexed by mutable vertices followed by
//! frozen vertices; the mutable block is skew-symmetric. The framed matrix of
//! the linearly ordered type A quiver has the quiver block on the left and an
//! identity block on the right, and the right block of any matrix reachable
//! from it by mutation is its c-matrix.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::permutations;

/// Default cap on the quiver rank accepted by enumeration routines.
pub const DEFAULT_BOUND: usize = 6;

/// Sign of a nonzero sign-coherent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// Sign of a nonzero integer.
    pub fn of(x: i64) -> Option<Sign> {
        match x {
            0 => None,
            x if x > 0 => Some(Sign::Positive),
            _ => Some(Sign::Negative),
        }
    }
}

#[derive(Deserialize)]
struct RawMatrix {
    n_mutable: usize,
    n_total: usize,
    entries: Vec<Vec<i64>>,
}

/// Integer exchange matrix with `n_mutable` rows and `n_total` columns.
///
/// Columns `0..n_mutable` index the mutable vertices and the remaining
/// columns index frozen vertices. The mutable block is kept skew-symmetric
/// as a construction invariant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct ExchangeMatrix {
    n_mutable: usize,
    n_total: usize,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for ExchangeMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        if raw.n_total != raw.entries.first().map_or(0, Vec::len) {
            return Err(Error::InvalidMatrix(format!(
                "declared n_total {} does not match row length {}",
                raw.n_total,
                raw.entries.first().map_or(0, Vec::len)
            )));
        }
        ExchangeMatrix::new(raw.n_mutable, raw.entries)
    }
}

impl ExchangeMatrix {
    /// Builds a matrix from its rows, validating shape and skew-symmetry of
    /// the mutable block.
    pub fn new(n_mutable: usize, entries: Vec<Vec<i64>>) -> Result<Self> {
        if n_mutable == 0 {
            return Err(Error::InvalidMatrix("need at least one mutable vertex".into()));
        }
        if entries.len() != n_mutable {
            return Err(Error::InvalidMatrix(format!(
                "expected {} rows, got {}",
                n_mutable,
                entries.len()
            )));
        }
        let n_total = entries[0].len();
        if n_total < n_mutable {
            return Err(Error::InvalidMatrix(format!(
                "need at least {} columns, got {}",
                n_mutable, n_total
            )));
        }
        if entries.iter().any(|row| row.len() != n_total) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        for i in 0..n_mutable {
            for j in 0..n_mutable {
                if entries[i][j] != -entries[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "mutable block not skew-symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(ExchangeMatrix { n_mutable, n_total, entries })
    }

    /// Matrix of the linearly ordered type A quiver on `n` vertices, with one
    /// arrow from each vertex to its predecessor.
    pub fn linear_quiver(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("need at least one vertex".into()));
        }
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n.saturating_sub(1) {
            entries[i][i + 1] = -1;
            entries[i + 1][i] = 1;
        }
        ExchangeMatrix::new(n, entries)
    }

    /// Framed matrix of the linearly ordered type A quiver: the quiver block
    /// on the left and an identity block of frozen columns on the right.
    pub fn framed(n: usize) -> Result<Self> {
        let quiver = Self::linear_quiver(n)?;
        let mut entries = vec![vec![0i64; 2 * n]; n];
        for i in 0..n {
            entries[i][..n].copy_from_slice(&quiver.entries[i]);
            entries[i][n + i] = 1;
        }
        ExchangeMatrix::new(n, entries)
    }

    pub fn n_mutable(&self) -> usize {
        self.n_mutable
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Matrix mutation at mutable vertex `k`, with overflow detected rather
    /// than wrapped. Applying the same mutation twice returns the input.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k >= self.n_mutable {
            return Err(Error::IndexOutOfRange { index: k, bound: self.n_mutable });
        }
        let mut out = vec![vec![0i64; self.n_total]; self.n_mutable];
        for i in 0..self.n_mutable {
            for j in 0..self.n_total {
                let b = self.entries[i][j];
                out[i][j] = if i == k || j == k {
                    b.checked_neg().ok_or(Error::Overflow("mutation"))?
                } else {
                    let bik = self.entries[i][k];
                    let bkj = self.entries[k][j];
                    let cross = bik
                        .abs()
                        .checked_mul(bkj)
                        .and_then(|x| bik.checked_mul(bkj.abs()).and_then(|y| x.checked_add(y)))
                        .ok_or(Error::Overflow("mutation"))?;
                    b.checked_add(cross / 2).ok_or(Error::Overflow("mutation"))?
                };
            }
        }
        ExchangeMatrix::new(self.n_mutable, out)
    }

    /// Applies a sequence of mutations left to right.
    pub fn mutate_seq(&self, seq: &[usize]) -> Result<Self> {
        let mut m = self.clone();
        for &k in seq {
            m = m.mutate(k)?;
        }
        Ok(m)
    }

    /// Extracts the c-matrix (the frozen column block) of a framed-shape
    /// matrix with as many frozen columns as mutable vertices.
    pub fn c_matrix(&self) -> Result<CMatrix> {
        if self.n_total != 2 * self.n_mutable {
            return Err(Error::InvalidMatrix(format!(
                "expected {} columns for a framed-shape matrix, got {}",
                2 * self.n_mutable,
                self.n_total
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row[self.n_mutable..].to_vec())
            .collect();
        CMatrix::new(rows)
    }

    /// Canonical key of the matrix under simultaneous permutation of mutable
    /// rows and columns (frozen columns stay fixed): the lexicographically
    /// smallest flattening over all permutations.
    pub fn canonical_key(&self) -> Vec<i64> {
        self.canonical_key_with(&permutations(self.n_mutable))
    }

    /// Same as [`canonical_key`](Self::canonical_key) with a precomputed
    /// permutation list, for use in enumeration loops.
    pub fn canonical_key_with(&self, perms: &[Vec<usize>]) -> Vec<i64> {
        let n = self.n_mutable;
        let m = self.n_total;
        let mut best: Option<Vec<i64>> = None;
        let mut image = vec![0i64; n * m];
        for sigma in perms {
            for i in 0..n {
                let base = sigma[i] * m;
                for j in 0..n {
                    image[base + sigma[j]] = self.entries[i][j];
                }
                image[base + n..base + m].copy_from_slice(&self.entries[i][n..]);
            }
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
        }
        best.unwrap()
    }

    /// Mutable vertices whose frozen row block has no negative entry.
    pub fn green_vertices(&self) -> Vec<usize> {
        (0..self.n_mutable)
            .filter(|&i| self.entries[i][self.n_mutable..].iter().all(|&x| x >= 0))
            .collect()
    }

    /// Checks the structural conditions satisfied by every quiver in the
    /// mutation class of the linearly ordered type A quiver: at most one
    /// arrow between two vertices, every cycle of the underlying graph an
    /// oriented triangle, at most four neighbors per vertex, the four edges
    /// at a degree-4 vertex split into two triangles, and exactly one of the
    /// three edges at a degree-3 vertex outside every triangle.
    pub fn satisfies_type_a_shape(&self) -> bool {
        let n = self.n_mutable;
        let b = |i: usize, j: usize| self.entries[i][j];
        for i in 0..n {
            for j in 0..n {
                if b(i, j).abs() > 1 {
                    return false;
                }
            }
        }
        let neighbors: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| b(i, j) != 0).collect())
            .collect();
        if neighbors.iter().any(|ns| ns.len() > 4) {
            return false;
        }
        for cycle in undirected_cycles(&neighbors) {
            if cycle.len() != 3 {
                return false;
            }
            // Cyclically oriented means no vertex of the triangle is a
            // source or sink within it.
            for v in 0..3 {
                let a = cycle[(v + 1) % 3];
                let c = cycle[(v + 2) % 3];
                let v = cycle[v];
                if b(v, a) * b(v, c) > 0 {
                    return false;
                }
            }
        }
        let in_triangle = |i: usize, j: usize| {
            (0..n).any(|k| k != i && k != j && b(i, k) != 0 && b(j, k) != 0)
        };
        for (i, ns) in neighbors.iter().enumerate() {
            let tri: Vec<bool> = ns.iter().map(|&j| in_triangle(i, j)).collect();
            match ns.len() {
                4 if tri.iter().any(|&t| !t) => return false,
                3 if tri.iter().filter(|&&t| !t).count() != 1 => return false,
                _ => {}
            }
        }
        true
    }
}

/// Simple cycles of an undirected graph given by adjacency lists, each cycle
/// reported once as a vertex list starting at its smallest vertex.
fn undirected_cycles(neighbors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = neighbors.len();
    let mut cycles = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];

    fn extend(
        neighbors: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &next in &neighbors[last] {
            if next == start && path.len() >= 3 {
                // Count each cycle once: fix the smallest vertex first and
                // orient toward its smaller neighbor.
                if path[1] < *path.last().unwrap() {
                    cycles.push(path.clone());
                }
            } else if next > start && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                extend(neighbors, start, path, on_path, cycles);
                on_path[next] = false;
                path.pop();
            }
        }
    }

    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(neighbors, start, &mut path, &mut on_path, &mut cycles);
        on_path[start] = false;
        path.pop();
    }
    cycles
}

/// Square integer matrix whose rows are nonzero and sign-coherent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct CMatrix {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for CMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        CMatrix::new(rows)
    }
}

impl From<CMatrix> for Vec<Vec<i64>> {
    fn from(c: CMatrix) -> Self {
        c.rows
    }
}

impl CMatrix {
    /// Builds a c-matrix from rows, validating squareness and that every row
    /// is nonzero with all entries of one sign.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidCMatrix("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCMatrix("matrix not square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().all(|&x| x == 0) {
                return Err(Error::InvalidCMatrix(format!("row {i} is zero")));
            }
            let pos = row.iter().any(|&x| x > 0);
            let neg = row.iter().any(|&x| x < 0);
            if pos && neg {
                return Err(Error::InvalidCMatrix(format!("row {i} is not sign-coherent")));
            }
        }
        Ok(CMatrix { rows })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        CMatrix::new(rows)
    }

    pub fn negative_identity(n: usize) -> Result<Self> {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = -1;
        }
        CMatrix::new(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.rows[i]
    }

    pub fn row_sign(&self, i: usize) -> Sign {
        if self.rows[i].iter().any(|&x| x > 0) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    /// Canonical representative under row permutation: rows sorted
    /// lexicographically.
    pub fn canonical(&self) -> CMatrix {
        let mut rows = self.rows.clone();
        rows.sort();
        CMatrix { rows }
    }

    /// True when the matrix is the negative identity up to a permutation of
    /// its rows.
    pub fn is_negative_identity_up_to_rows(&self) -> bool {
        self.canonical() == Self::negative_identity(self.n()).unwrap().canonical()
    }
}

/// A matrix reached from the framed matrix together with the mutation
/// sequence that first reached it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub matrix: ExchangeMatrix,
    pub history: Vec<usize>,
}

/// Breadth-first closure of the framed matrix under mutation, deduplicated
/// up to simultaneous permutation of mutable rows and columns. Returns one
/// representative per class, in discovery order, each carrying a shortest
/// mutation history.
pub fn enumerate_seeds(n: usize, bound: usize) -> Result<Vec<Seed>> {
    if n == 0 {
        return Err(Error::InvalidMatrix("need at least one vertex".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let perms = permutations(n);
    let start = ExchangeMatrix::framed(n)?;
    let mut seen = BTreeSet::new();
    seen.insert(start.canonical_key_with(&perms));
    let mut queue = VecDeque::new();
    queue.push_back(Seed { matrix: start, history: Vec::new() });
    let mut out = Vec::new();
    while let Some(seed) = queue.pop_front() {
        for k in 0..n {
            let next = seed.matrix.mutate(k)?;
            if seen.insert(next.canonical_key_with(&perms)) {
                let mut history = seed.history.clone();
                history.push(k);
                queue.push_back(Seed { matrix: next, history });
            }
        }
        out.push(seed);
    }
    Ok(out)
}

/// All c-matrices of the linearly ordered type A quiver on `n` vertices, as
/// canonical (row-sorted) matrices in lexicographic order.
pub fn enumerate_cmatrices(n: usize, bound: usize) -> Result<Vec<CMatrix>> {
    let set: BTreeSet<CMatrix> = enumerate_seeds(n, bound)?
        .iter()
        .map(|seed| seed.matrix.c_matrix().map(|c| c.canonical()))
        .collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// True when applying the given mutation sequence to the framed matrix
/// leaves no green vertex.
pub fn is_reddening_sequence(n: usize, seq: &[usize]) -> Result<bool> {
    let m = ExchangeMatrix::framed(n)?.mutate_seq(seq)?;
    Ok(m.green_vertices().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;


    fn m(n_mutable: usize, entries: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::new(n_mutable, entries.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn linear_quiver_three_vertices() {
        assert_eq!(
            ExchangeMatrix::linear_quiver(3).unwrap().rows(),
            &[vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]]
        );
    }

    #[test]
    fn framed_two_vertices() {
        assert_eq!(
            ExchangeMatrix::framed(2).unwrap().rows(),
            &[vec![0, -1, 1, 0], vec![1, 0, 0, 1]]
        );
    }

    #[test]
    fn mutation_three_by_four_fixture() {
        let b = m(3, &[&[0, 2, 0, 0], &[-2, 0, 1, 0], &[0, -1, 0, -1]]);
        let expected = m(3, &[&[0, -2, 2, 0], &[2, 0, -1, 0], &[-2, 1, 0, -1]]);
        assert_eq!(b.mutate(1).unwrap(), expected);
        assert_eq!(b.mutate(1).unwrap().mutate(1).unwrap(), b);
    }

    #[test]
    fn mutation_rejects_bad_index() {
        let b = ExchangeMatrix::framed(3).unwrap();
        assert!(matches!(b.mutate(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn mutation_detects_overflow() {
        let huge = i64::MAX / 2 + 1;
        let b = m(3, &[&[0, huge, 0], &[-huge, 0, huge], &[0, -huge, 0]]);
        assert_eq!(b.mutate(1), Err(Error::Overflow("mutation")));
    }

    #[test]
    fn framed_two_first_mutation_c_block() {
        let c = ExchangeMatrix::framed(2).unwrap().mutate(0).unwrap().c_matrix().unwrap();
        assert_eq!(c.rows(), &[vec![-1, 0], vec![1, 1]]);
    }

    #[test]
    fn skew_symmetry_enforced() {
        assert!(ExchangeMatrix::new(2, vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn cmatrix_rejects_mixed_sign_row() {
        assert!(CMatrix::new(vec![vec![1, -1], vec![0, 1]]).is_err());
        assert!(CMatrix::new(vec![vec![0, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn rank_two_cmatrices_are_the_five_known_ones() {
        let got = enumerate_cmatrices(2, DEFAULT_BOUND).unwrap();
        let want: BTreeSet<CMatrix> = [
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![-1, 0], vec![1, 1]],
            vec![vec![0, 1], vec![-1, -1]],
            vec![vec![-1, 0], vec![0, -1]],
            vec![vec![1, 0], vec![0, -1]],
        ]
        .into_iter()
        .map(|rows| CMatrix::new(rows).unwrap().canonical())
        .collect();
        assert_eq!(got, want.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn seed_count_matches_cmatrix_count() {
        for n in 1..=4 {
            assert_eq!(
                enumerate_seeds(n, DEFAULT_BOUND).unwrap().len(),
                enumerate_cmatrices(n, DEFAULT_BOUND).unwrap().len()
            );
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_seeds(7, DEFAULT_BOUND),
            Err(Error::BoundExceeded { n: 7, bound: 6 })
        ));
    }

    #[test]
    fn every_reachable_seed_has_type_a_shape() {
        for seed in enumerate_seeds(4, DEFAULT_BOUND).unwrap() {
            assert!(seed.matrix.satisfies_type_a_shape());
        }
    }

    #[test]
    fn type_a_shape_rejects_long_cycle() {
        // An oriented 4-cycle is never reachable from the linear quiver.
        let b = m(
            4,
            &[
                &[0, 1, 0, -1],
                &[-1, 0, 1, 0],
                &[0, -1, 0, 1],
                &[1, 0, -1, 0],
            ],
        );
        assert!(!b.satisfies_type_a_shape());
    }

    #[test]
    fn reddening_sequences_rank_two() {
        assert!(is_reddening_sequence(2, &[1, 0]).unwrap());
        assert!(is_reddening_sequence(2, &[0, 1, 0]).unwrap());
        assert!(!is_reddening_sequence(2, &[0]).unwrap());
        let c = ExchangeMatrix::framed(2)
            .unwrap()
            .mutate_seq(&[1, 0])
            .unwrap()
            .c_matrix()
            .unwrap();
        assert!(c.is_negative_identity_up_to_rows());
    }

    #[test]
    fn matrix_json_round_trip() {
        let b = ExchangeMatrix::framed(3).unwrap().mutate(1).unwrap();
        let text = serde_json::to_string(&b).unwrap();
        assert!(text.contains("\"n_mutable\":3"));
        let back: ExchangeMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn matrix_json_rejects_non_skew() {
        let text = r#"{"n_mutable":2,"n_total":2,"entries":[[0,1],[1,0]]}"#;
        assert!(serde_json::from_str::<ExchangeMatrix>(text).is_err());
    }
}

//! Interval representations of the linearly ordered type A quiver and their
//! Hom and Ext spaces.
//!
//! The quiver has vertices 1 through n and one arrow from each vertex to its
//! predecessor. The indecomposable representations are the interval modules
//! X(i, j) for 0 <= i < j <= n, supported on vertices i+1 through j with
//! identity maps inside the support. Hom dimensions come from a closed-form
//! interval rule; an independent solver computes them from the commutativity
//! equations of an arbitrary representation pair and is used to cross-check
//! the rule.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Interval module X(i, j) with 0 <= i < j, supported on vertices i+1..=j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRep")]
pub struct IntervalRep {
    i: usize,
    j: usize,
}

#[derive(Deserialize)]
struct RawRep {
    i: usize,
    j: usize,
}

impl TryFrom<RawRep> for IntervalRep {
    type Error = Error;

    fn try_from(raw: RawRep) -> Result<Self> {
        IntervalRep::new(raw.i, raw.j)
    }
}

impl fmt::Display for IntervalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{})", self.i, self.j)
    }
}

impl IntervalRep {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i >= j {
            return Err(Error::InvalidRep(format!("need i < j, got i = {i}, j = {j}")));
        }
        Ok(IntervalRep { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Simple module at vertex `v` (1-based).
    pub fn simple(v: usize) -> Result<Self> {
        if v == 0 {
            return Err(Error::InvalidRep("vertices are numbered from 1".into()));
        }
        IntervalRep::new(v - 1, v)
    }

    /// Dimension vector over vertices 1..=n, as entries 0..n of a vector.
    pub fn dim_vector(&self, n: usize) -> Result<Vec<i64>> {
        if self.j > n {
            return Err(Error::InvalidRep(format!("{self} does not fit in rank {n}")));
        }
        let mut dims = vec![0i64; n];
        for d in dims.iter_mut().take(self.j).skip(self.i) {
            *d = 1;
        }
        Ok(dims)
    }

    /// Interval module with the given dimension vector, which must be a
    /// nonzero contiguous 0-1 vector.
    pub fn from_dim_vector(dims: &[i64]) -> Result<Self> {
        let i = dims.iter().position(|&d| d != 0).ok_or_else(|| {
            Error::InvalidRep("zero dimension vector".into())
        })?;
        let j = dims.iter().rposition(|&d| d != 0).unwrap() + 1;
        if dims[i..j].iter().any(|&d| d != 1) {
            return Err(Error::InvalidRep(format!(
                "dimension vector {dims:?} is not a contiguous 0-1 interval"
            )));
        }
        IntervalRep::new(i, j)
    }

    /// Auslander-Reiten translate: shifts the interval down by one, with the
    /// projectives X(0, j) going to zero.
    pub fn tau(&self) -> Option<IntervalRep> {
        if self.i == 0 {
            None
        } else {
            Some(IntervalRep { i: self.i - 1, j: self.j - 1 })
        }
    }

    pub fn is_projective(&self) -> bool {
        self.i == 0
    }
}

/// All interval modules fitting in rank `n`, in lexicographic order of
/// (i, j).
pub fn all_interval_reps(n: usize) -> Vec<IntervalRep> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..=n {
            out.push(IntervalRep { i, j });
        }
    }
    out
}

/// Dimension of Hom(X(a, b), X(c, d)): one exactly when a <= c < b <= d,
/// zero otherwise.
pub fn hom_dim(from: IntervalRep, to: IntervalRep) -> usize {
    usize::from(from.i <= to.i && to.i < from.j && from.j <= to.j)
}

/// Dimension of Ext^1(X(a, b), X(c, d)), computed as Hom into the translate
/// of the first argument.
pub fn ext1_dim(from: IntervalRep, to: IntervalRep) -> usize {
    match from.tau() {
        Some(t) => hom_dim(to, t),
        None => 0,
    }
}

/// Euler form of two dimension vectors for the linearly ordered quiver:
/// the dot product minus one cross term per arrow.
pub fn euler_form(v: &[i64], w: &[i64]) -> Result<i64> {
    if v.len() != w.len() {
        return Err(Error::InvalidRep(format!(
            "dimension vectors of lengths {} and {} do not match",
            v.len(),
            w.len()
        )));
    }
    let mut total: i64 = 0;
    for k in 0..v.len() {
        let dot = v[k].checked_mul(w[k]).ok_or(Error::Overflow("euler form"))?;
        total = total.checked_add(dot).ok_or(Error::Overflow("euler form"))?;
    }
    for k in 0..v.len().saturating_sub(1) {
        let cross = v[k + 1].checked_mul(w[k]).ok_or(Error::Overflow("euler form"))?;
        total = total.checked_sub(cross).ok_or(Error::Overflow("euler form"))?;
    }
    Ok(total)
}

/// True when (first, second) is an exceptional pair: no morphisms and no
/// extensions from the later module back to the earlier one.
pub fn is_exceptional_pair(first: IntervalRep, second: IntervalRep) -> bool {
    hom_dim(second, first) == 0 && ext1_dim(second, first) == 0
}

/// True when every earlier-later pair of the sequence is exceptional.
pub fn is_exceptional_sequence(seq: &[IntervalRep]) -> bool {
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if !is_exceptional_pair(seq[i], seq[j]) {
                return false;
            }
        }
    }
    true
}

/// All complete exceptional sequences of rank `n` by depth-first search with
/// prefix pruning, in lexicographic order of their (i, j) lists.
pub fn enumerate_ces(n: usize, bound: usize) -> Result<Vec<Vec<IntervalRep>>> {
    if n == 0 {
        return Err(Error::InvalidRep("need at least one vertex".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let reps = all_interval_reps(n);
    let mut out = Vec::new();
    let mut prefix: Vec<IntervalRep> = Vec::with_capacity(n);
    fn extend(
        reps: &[IntervalRep],
        n: usize,
        prefix: &mut Vec<IntervalRep>,
        out: &mut Vec<Vec<IntervalRep>>,
    ) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for &next in reps {
            if prefix.iter().all(|&v| is_exceptional_pair(v, next)) {
                prefix.push(next);
                extend(reps, n, prefix, out);
                prefix.pop();
            }
        }
    }
    extend(&reps, n, &mut prefix, &mut out);
    Ok(out)
}

/// Representation of the linearly ordered quiver by explicit integer
/// matrices: `maps[v]` is the matrix of the arrow from vertex v+2 to vertex
/// v+1 and has `dims[v]` rows and `dims[v + 1]` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<i64>>>,
}

impl QuiverRep {
    pub fn new(dims: Vec<usize>, maps: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidRep("need at least one vertex".into()));
        }
        if maps.len() + 1 != dims.len() {
            return Err(Error::InvalidRep(format!(
                "expected {} arrow matrices, got {}",
                dims.len() - 1,
                maps.len()
            )));
        }
        for (v, map) in maps.iter().enumerate() {
            if map.len() != dims[v] || map.iter().any(|row| row.len() != dims[v + 1]) {
                return Err(Error::InvalidRep(format!(
                    "arrow matrix {v} is not {} by {}",
                    dims[v],
                    dims[v + 1]
                )));
            }
        }
        Ok(QuiverRep { dims, maps })
    }

    /// Matrix form of an interval module inside rank `n`.
    pub fn interval(n: usize, rep: IntervalRep) -> Result<Self> {
        let dims: Vec<usize> = rep.dim_vector(n)?.iter().map(|&d| d as usize).collect();
        let maps = (0..n - 1)
            .map(|v| {
                if dims[v] == 1 && dims[v + 1] == 1 {
                    vec![vec![1]]
                } else {
                    vec![vec![0; dims[v + 1]]; dims[v]]
                }
            })
            .collect();
        QuiverRep::new(dims, maps)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep> {
        if self.dims.len() != other.dims.len() {
            return Err(Error::InvalidRep("ranks do not match".into()));
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(&a, &b)| a + b)
            .collect();
        let maps = (0..self.maps.len())
            .map(|v| {
                let rows = dims[v];
                let cols = dims[v + 1];
                let mut block = vec![vec![0i64; cols]; rows];
                for (r, row) in self.maps[v].iter().enumerate() {
                    block[r][..self.dims[v + 1]].copy_from_slice(row);
                }
                for (r, row) in other.maps[v].iter().enumerate() {
                    block[self.dims[v] + r][self.dims[v + 1]..].copy_from_slice(row);
                }
                block
            })
            .collect();
        QuiverRep::new(dims, maps)
    }
}

/// Hom dimension between two matrix representations, computed from scratch:
/// one commutativity equation block per arrow, solved by exact integer rank.
pub fn hom_dim_solver(from: &QuiverRep, to: &QuiverRep) -> Result<usize> {
    if from.dims.len() != to.dims.len() {
        return Err(Error::InvalidRep("ranks do not match".into()));
    }
    let n = from.dims.len();
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + to.dims[v] * from.dims[v];
    }
    let vars = offsets[n];
    let var = |v: usize, p: usize, q: usize| offsets[v] + p * from.dims[v] + q;
    let mut system: Vec<Vec<i128>> = Vec::new();
    for v in 0..n - 1 {
        let a = &from.maps[v];
        let b = &to.maps[v];
        for p in 0..to.dims[v] {
            for q in 0..from.dims[v + 1] {
                let mut row = vec![0i128; vars];
                for s in 0..from.dims[v] {
                    row[var(v, p, s)] += i128::from(a[s][q]);
                }
                for t in 0..to.dims[v + 1] {
                    row[var(v + 1, t, q)] -= i128::from(b[p][t]);
                }
                system.push(row);
            }
        }
    }
    Ok(vars - integer_rank(system)?)
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn integer_rank(mut m: Vec<Vec<i128>>) -> Result<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let lhs = m[rank][col]
                    .checked_mul(m[r][c])
                    .ok_or(Error::Overflow("integer rank"))?;
                let rhs = m[r][col]
                    .checked_mul(m[rank][c])
                    .ok_or(Error::Overflow("integer rank"))?;
                m[r][c] = lhs.checked_sub(rhs).ok_or(Error::Overflow("integer rank"))? / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Ok(rank)
}

//! Oriented chord diagrams as pictures of c-matrices.
//!
//! A c-matrix row is a signed interval vector: plus or minus the dimension
//! vector of an interval module X(i, j). The row maps to the chord from i to
//! j, drawn tail to head in the direction i to j when the row is positive
//! and j to i when it is negative. This module converts between the two
//! forms, mutates diagrams in step with matrix mutation, recognizes which
//! oriented spanning diagrams come from c-matrices, and produces a complete
//! exceptional sequence witnessing each recognized diagram.

use serde::{Deserialize, Serialize};

use crate::chords::{angular_rank, Chord, ChordDiagram, LabeledDiagram};
use crate::chords::{enumerate_spanning_diagrams, labeled_to_sequence};
use crate::error::{Error, Result};
use crate::exchange::{CMatrix, ExchangeMatrix, Sign};
use crate::reptheory::IntervalRep;

/// Chord drawn as an arrow from `tail` to `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrientedChord", into = "RawOrientedChord")]
pub struct OrientedChord {
    tail: usize,
    head: usize,
}

#[derive(Serialize, Deserialize)]
struct RawOrientedChord {
    a: usize,
    b: usize,
    dir: String,
}

impl TryFrom<RawOrientedChord> for OrientedChord {
    type Error = Error;

    fn try_from(raw: RawOrientedChord) -> Result<Self> {
        if raw.a >= raw.b {
            return Err(Error::InvalidDiagram(format!(
                "oriented chord endpoints must satisfy a < b, got {} and {}",
                raw.a, raw.b
            )));
        }
        match raw.dir.as_str() {
            "ab" => Ok(OrientedChord { tail: raw.a, head: raw.b }),
            "ba" => Ok(OrientedChord { tail: raw.b, head: raw.a }),
            other => Err(Error::InvalidDiagram(format!(
                "direction must be \"ab\" or \"ba\", got {other:?}"
            ))),
        }
    }
}

impl From<OrientedChord> for RawOrientedChord {
    fn from(c: OrientedChord) -> Self {
        let chord = c.chord();
        RawOrientedChord {
            a: chord.a(),
            b: chord.b(),
            dir: if c.tail < c.head { "ab".into() } else { "ba".into() },
        }
    }
}

impl OrientedChord {
    pub fn new(tail: usize, head: usize) -> Result<Self> {
        if tail == head {
            return Err(Error::InvalidDiagram(format!(
                "chord endpoints must differ, got {tail}"
            )));
        }
        Ok(OrientedChord { tail, head })
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn chord(&self) -> Chord {
        Chord::new(self.tail, self.head).unwrap()
    }

    /// Positive when drawn from the smaller to the larger endpoint, which
    /// matches the sign of the c-matrix row it encodes.
    pub fn sign(&self) -> Sign {
        if self.tail < self.head {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn reversed(&self) -> OrientedChord {
        OrientedChord { tail: self.head, head: self.tail }
    }

    /// Interval module of the underlying chord.
    pub fn interval(&self) -> IntervalRep {
        let c = self.chord();
        IntervalRep::new(c.a(), c.b()).unwrap()
    }
}

#[derive(Deserialize)]
struct RawOrientedDiagram {
    n_points: usize,
    chords: Vec<OrientedChord>,
}

/// Oriented chord diagram with a remembered chord order, one chord per
/// c-matrix row. Equality is row-order sensitive; compare through
/// [`canonical`](Self::canonical) to ignore the order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrientedDiagram")]
pub struct OrientedDiagram {
    n_points: usize,
    chords: Vec<OrientedChord>,
}

impl TryFrom<RawOrientedDiagram> for OrientedDiagram {
    type Error = Error;

    fn try_from(raw: RawOrientedDiagram) -> Result<Self> {
        OrientedDiagram::new(raw.n_points, raw.chords)
    }
}

impl OrientedDiagram {
    /// Builds an oriented diagram whose underlying chords must form a valid
    /// noncrossing acyclic diagram.
    pub fn new(n_points: usize, chords: Vec<OrientedChord>) -> Result<Self> {
        ChordDiagram::new(n_points, chords.iter().map(OrientedChord::chord).collect())?;
        Ok(OrientedDiagram { n_points, chords })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn chords(&self) -> &[OrientedChord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn unoriented(&self) -> ChordDiagram {
        ChordDiagram::new(
            self.n_points,
            self.chords.iter().map(OrientedChord::chord).collect(),
        )
        .unwrap()
    }

    /// Same diagram with rows sorted by underlying chord.
    pub fn canonical(&self) -> OrientedDiagram {
        let mut chords = self.chords.clone();
        chords.sort_by_key(|c| c.chord());
        OrientedDiagram { n_points: self.n_points, chords }
    }

    /// Oriented chords incident to `p` by decreasing angular rank, so
    /// counterclockwise-most first.
    pub fn chords_at(&self, p: usize) -> Vec<OrientedChord> {
        let mut at: Vec<OrientedChord> = self
            .chords
            .iter()
            .copied()
            .filter(|c| c.tail == p || c.head == p)
            .collect();
        at.sort_by_key(|&c| {
            std::cmp::Reverse(angular_rank(self.n_points, c.chord(), p).unwrap())
        });
        at
    }
}

/// Oriented diagram of a c-matrix: row by row, each signed interval vector
/// becomes a directed chord. Fails when some row is not plus or minus a
/// contiguous 0-1 vector or when the chords cross or close a cycle.
pub fn diagram_of_cmatrix(c: &CMatrix) -> Result<OrientedDiagram> {
    let n = c.n();
    let mut chords = Vec::with_capacity(n);
    for r in 0..n {
        let row = c.row(r);
        let sign = c.row_sign(r);
        let abs: Vec<i64> = row.iter().map(|&x| x.abs()).collect();
        let rep = IntervalRep::from_dim_vector(&abs)
            .map_err(|_| Error::NotCMatrix(format!("row {r} is not a signed interval vector")))?;
        chords.push(match sign {
            Sign::Positive => OrientedChord { tail: rep.i(), head: rep.j() },
            Sign::Negative => OrientedChord { tail: rep.j(), head: rep.i() },
        });
    }
    OrientedDiagram::new(n + 1, chords)
        .map_err(|e| Error::NotCMatrix(format!("rows do not draw a diagram: {e}")))
}

/// C-matrix of an oriented spanning diagram: chord t in row order becomes
/// row t, the signed dimension vector of its interval module.
pub fn cmatrix_of_diagram(d: &OrientedDiagram) -> Result<CMatrix> {
    let n = d.n_points - 1;
    if d.chords.len() != n {
        return Err(Error::InvalidDiagram(format!(
            "need {n} chords on {} points to fill a square matrix, got {}",
            d.n_points,
            d.chords.len()
        )));
    }
    let rows = d
        .chords
        .iter()
        .map(|c| {
            let mut row = c.interval().dim_vector(n)?;
            if c.sign() == Sign::Negative {
                for x in &mut row {
                    *x = -*x;
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    CMatrix::new(rows)
}

/// Mutates an oriented diagram at row `k` in step with matrix mutation.
/// The exchange matrix must be the framed-shape matrix whose c-matrix draws
/// exactly this diagram; its quiver entries decide which chords move.
pub fn mutate_diagram(
    d: &OrientedDiagram,
    matrix: &ExchangeMatrix,
    k: usize,
) -> Result<OrientedDiagram> {
    let n = d.chords.len();
    if matrix.n_mutable() != n {
        return Err(Error::InvalidDiagram(format!(
            "matrix rank {} does not match diagram with {} chords",
            matrix.n_mutable(),
            n
        )));
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, bound: n });
    }
    if diagram_of_cmatrix(&matrix.c_matrix()?)? != *d {
        return Err(Error::InvalidDiagram(
            "matrix c-matrix does not draw the given diagram".into(),
        ));
    }
    let ck = d.chords[k];
    let sign_k = ck.sign();
    let mut chords = d.chords.clone();
    for j in 0..n {
        if j == k || matrix.entry(k, j) == 0 || Sign::of(matrix.entry(k, j)) == Some(sign_k) {
            continue;
        }
        let cj = d.chords[j];
        chords[j] = if ck.tail == cj.tail {
            OrientedChord { tail: ck.head, head: cj.head }
        } else if ck.head == cj.head {
            OrientedChord { tail: cj.tail, head: ck.tail }
        } else if ck.head == cj.tail {
            OrientedChord { tail: ck.tail, head: cj.head }
        } else if ck.tail == cj.head {
            OrientedChord { tail: cj.tail, head: ck.head }
        } else {
            return Err(Error::InvalidDiagram(format!(
                "rows {k} and {j} interact in the matrix but their chords share no endpoint"
            )));
        };
    }
    chords[k] = ck.reversed();
    OrientedDiagram::new(d.n_points, chords)
}

/// True when the chords pointing into `p` occupy one contiguous circular
/// arc of the neighbor order around `p`.
fn weakly_separated_at(d: &OrientedDiagram, p: usize) -> bool {
    // Ascending angular rank, with wrap-around between the extreme ranks.
    let into: Vec<bool> = d
        .chords_at(p)
        .iter()
        .rev()
        .map(|c| c.head == p)
        .collect();
    let changes = (0..into.len())
        .filter(|&t| into[t] && !into[(t + 1) % into.len()])
        .count();
    changes <= 1
}

/// True when two chords of a noncrossing diagram may carry their signs in
/// the same c-matrix. Chords sharing no endpoint always may; the three ways
/// of sharing an endpoint each fix the allowed sign patterns.
fn pair_admissible(first: OrientedChord, second: OrientedChord) -> bool {
    let (c, d) = (first.chord(), second.chord());
    let (sc, sd) = (first.sign(), second.sign());
    use Sign::{Negative, Positive};
    if c.a() == d.a() {
        // Shared smallest endpoint: the shorter chord must be negative and
        // the longer positive.
        let (short, long) = if c.b() < d.b() { (sc, sd) } else { (sd, sc) };
        short == Negative && long == Positive
    } else if c.b() == d.b() {
        // Shared largest endpoint: the shorter chord must be positive and
        // the longer negative.
        let (long, short) = if c.a() < d.a() { (sc, sd) } else { (sd, sc) };
        short == Positive && long == Negative
    } else if c.b() == d.a() || d.b() == c.a() {
        // Shared point in the middle: forbidden only when both chords are
        // directed out of it.
        let p = if c.b() == d.a() { c.b() } else { d.b() };
        !(first.tail == p && second.tail == p)
    } else {
        true
    }
}

/// True when the oriented diagram is the picture of a c-matrix: it spans
/// all boundary points, is weakly separated at each point, and every pair
/// of chords carries an admissible sign pattern.
pub fn is_cmatrix_diagram(d: &OrientedDiagram) -> bool {
    if d.chords.len() + 1 != d.n_points {
        return false;
    }
    if !(0..d.n_points).all(|p| weakly_separated_at(d, p)) {
        return false;
    }
    for (t, &c) in d.chords.iter().enumerate() {
        for &e in &d.chords[t + 1..] {
            if !pair_admissible(c, e) {
                return false;
            }
        }
    }
    true
}

/// Complete exceptional sequence witnessing a c-matrix diagram: the modules
/// of the negative chords first, then the positive ones, ordered by
/// repeatedly taking a chord that is counterclockwise-most at both of its
/// endpoints among the chords not yet taken, positive chords preferred.
/// Fails when no such order exists.
pub fn st_witness(d: &OrientedDiagram) -> Result<Vec<IntervalRep>> {
    let k = d.chords.len();
    let mut remaining: Vec<OrientedChord> = d.chords.clone();
    let mut picked: Vec<(Chord, usize)> = Vec::with_capacity(k);
    while !remaining.is_empty() {
        let minimal = |c: &OrientedChord| {
            [c.tail, c.head].iter().all(|&p| {
                let rank = angular_rank(d.n_points, c.chord(), p).unwrap();
                remaining.iter().all(|e| {
                    e.chord() == c.chord()
                        || e
                            .chord()
                            .other_endpoint(p)
                            .is_none_or(|_| angular_rank(d.n_points, e.chord(), p).unwrap() < rank)
                })
            })
        };
        let positives_left = remaining.iter().any(|c| c.sign() == Sign::Positive);
        let pick = remaining
            .iter()
            .copied()
            .filter(|c| (c.sign() == Sign::Positive) == positives_left)
            .filter(minimal)
            .min_by_key(|c| (c.tail, c.head))
            .ok_or_else(|| {
                Error::NotCMatrix("no chord can be taken next; the signs admit no witness".into())
            })?;
        picked.push((pick.chord(), picked.len() + 1));
        remaining.retain(|c| c.chord() != pick.chord());
    }
    let labeled = LabeledDiagram::from_pairs(d.n_points, picked)?;
    Ok(labeled_to_sequence(&labeled))
}

/// All oriented spanning diagrams on `n + 1` points that picture c-matrices,
/// each with rows in sorted chord order, enumerated by filtering every
/// orientation of every spanning diagram.
pub fn enumerate_cmatrix_diagrams(n: usize, bound: usize) -> Result<Vec<OrientedDiagram>> {
    if n == 0 {
        return Err(Error::InvalidDiagram("need at least one chord".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut out = Vec::new();
    for diagram in enumerate_spanning_diagrams(n + 1)? {
        for bits in 0..(1u32 << n) {
            let chords: Vec<OrientedChord> = diagram
                .chords()
                .iter()
                .enumerate()
                .map(|(t, c)| {
                    if bits >> t & 1 == 0 {
                        OrientedChord { tail: c.a(), head: c.b() }
                    } else {
                        OrientedChord { tail: c.b(), head: c.a() }
                    }
                })
                .collect();
            let candidate = OrientedDiagram { n_points: n + 1, chords };
            if is_cmatrix_diagram(&candidate) {
                out.push(candidate);
            }
        }
    }
    Ok(out)
}

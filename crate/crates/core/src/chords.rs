//! Chord diagrams on a disk with marked boundary points and their labelings.
//!
//! A diagram on m boundary points (numbered 0 through m-1 counterclockwise)
//! is a set of pairwise noncrossing chords that closes no cycle. Chords are
//! ordered at a shared endpoint by angular rank: the rank of a chord at its
//! endpoint p is the counterclockwise distance from p to the other endpoint,
//! so smaller rank means further clockwise. A labeling of a k-chord diagram
//! by 1..=k is good when the labels at every point increase as the rank
//! decreases. Good labeled diagrams encode exceptional sequences: the module
//! X(i, j) corresponds to the chord from i to j, and the chord labeled l
//! holds the module in position k+1-l of the sequence.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reptheory::IntervalRep;

/// Unoriented chord between two distinct boundary points, stored with the
/// smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawChord")]
pub struct Chord {
    a: usize,
    b: usize,
}

#[derive(Deserialize)]
struct RawChord {
    a: usize,
    b: usize,
}

impl TryFrom<RawChord> for Chord {
    type Error = Error;

    fn try_from(raw: RawChord) -> Result<Self> {
        Chord::new(raw.a, raw.b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({},{})", self.a, self.b)
    }
}

impl Chord {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidDiagram(format!("chord endpoints must differ, got {a}")));
        }
        Ok(Chord { a: a.min(b), b: a.max(b) })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn has_endpoint(&self, p: usize) -> bool {
        self.a == p || self.b == p
    }

    pub fn other_endpoint(&self, p: usize) -> Option<usize> {
        if self.a == p {
            Some(self.b)
        } else if self.b == p {
            Some(self.a)
        } else {
            None
        }
    }
}

/// True when the chords cross in the interior of the disk, which happens
/// exactly when their endpoints strictly interleave around the boundary.
pub fn chords_cross(c: Chord, d: Chord) -> bool {
    (c.a < d.a && d.a < c.b && c.b < d.b) || (d.a < c.a && c.a < d.b && d.b < c.b)
}

/// Counterclockwise distance from point `p` to the other endpoint of the
/// chord, in 1..n_points. Smaller rank means further clockwise at `p`.
pub fn angular_rank(n_points: usize, chord: Chord, p: usize) -> Result<usize> {
    let e = chord
        .other_endpoint(p)
        .ok_or_else(|| Error::InvalidDiagram(format!("{chord} has no endpoint {p}")))?;
    Ok((e + n_points - p) % n_points)
}

#[derive(Deserialize)]
struct RawDiagram {
    n_points: usize,
    chords: Vec<Chord>,
}

/// Noncrossing acyclic chord diagram on `n_points` boundary points, with
/// chords kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct ChordDiagram {
    n_points: usize,
    chords: Vec<Chord>,
}

impl TryFrom<RawDiagram> for ChordDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        ChordDiagram::new(raw.n_points, raw.chords)
    }
}

impl ChordDiagram {
    /// Builds a diagram, validating endpoint range, distinctness, pairwise
    /// noncrossing, and that no subset of chords closes a cycle.
    pub fn new(n_points: usize, mut chords: Vec<Chord>) -> Result<Self> {
        if n_points < 2 {
            return Err(Error::InvalidDiagram("need at least two boundary points".into()));
        }
        chords.sort();
        for pair in chords.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidDiagram(format!("duplicate chord {}", pair[0])));
            }
        }
        let mut parent: Vec<usize> = (0..n_points).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (t, &c) in chords.iter().enumerate() {
            if c.b >= n_points {
                return Err(Error::InvalidDiagram(format!(
                    "{c} endpoint out of range for {n_points} points"
                )));
            }
            for &d in &chords[t + 1..] {
                if chords_cross(c, d) {
                    return Err(Error::InvalidDiagram(format!("{c} and {d} cross")));
                }
            }
            let (ra, rb) = (root(&mut parent, c.a), root(&mut parent, c.b));
            if ra == rb {
                return Err(Error::InvalidDiagram(format!("{c} closes a cycle")));
            }
            parent[ra] = rb;
        }
        Ok(ChordDiagram { n_points, chords })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// True when the chords form a spanning tree of the boundary points.
    pub fn is_spanning(&self) -> bool {
        // An acyclic diagram spans exactly when it has n_points - 1 chords.
        self.chords.len() + 1 == self.n_points
    }

    /// Chords incident to `p`, ordered counterclockwise to clockwise, that
    /// is by decreasing angular rank at `p`.
    pub fn chords_at(&self, p: usize) -> Vec<Chord> {
        let mut at: Vec<Chord> = self
            .chords
            .iter()
            .copied()
            .filter(|c| c.has_endpoint(p))
            .collect();
        at.sort_by_key(|&c| std::cmp::Reverse(angular_rank(self.n_points, c, p).unwrap()));
        at
    }
}

/// All noncrossing acyclic diagrams with `k` chords on `n_points` points,
/// in lexicographic order of their sorted chord lists.
pub fn enumerate_diagrams(n_points: usize, k: usize) -> Result<Vec<ChordDiagram>> {
    if n_points < 2 {
        return Err(Error::InvalidDiagram("need at least two boundary points".into()));
    }
    if k >= n_points {
        return Err(Error::InvalidDiagram(format!(
            "an acyclic diagram on {n_points} points has at most {} chords",
            n_points - 1
        )));
    }
    let mut all = Vec::new();
    for a in 0..n_points {
        for b in a + 1..n_points {
            all.push(Chord { a, b });
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Chord> = Vec::with_capacity(k);

    fn feasible(chosen: &[Chord], next: Chord) -> bool {
        if chosen.iter().any(|&c| chords_cross(c, next)) {
            return false;
        }
        // Cycle check by depth-first reachability over the chosen chords.
        let mut stack = vec![next.a];
        let mut seen = vec![next.a];
        while let Some(p) = stack.pop() {
            for &c in chosen {
                if let Some(q) = c.other_endpoint(p) {
                    if q == next.b {
                        return false;
                    }
                    if !seen.contains(&q) {
                        seen.push(q);
                        stack.push(q);
                    }
                }
            }
        }
        true
    }

    fn extend(
        all: &[Chord],
        start: usize,
        k: usize,
        n_points: usize,
        chosen: &mut Vec<Chord>,
        out: &mut Vec<ChordDiagram>,
    ) {
        if chosen.len() == k {
            out.push(ChordDiagram { n_points, chords: chosen.clone() });
            return;
        }
        for t in start..all.len() {
            if feasible(chosen, all[t]) {
                chosen.push(all[t]);
                extend(all, t + 1, k, n_points, chosen, out);
                chosen.pop();
            }
        }
    }

    extend(&all, 0, k, n_points, &mut chosen, &mut out);
    Ok(out)
}

/// All spanning diagrams, that is noncrossing trees, on `n_points` points.
pub fn enumerate_spanning_diagrams(n_points: usize) -> Result<Vec<ChordDiagram>> {
    enumerate_diagrams(n_points, n_points.saturating_sub(1))
}

#[derive(Deserialize)]
struct RawLabeledChord {
    a: usize,
    b: usize,
    label: usize,
}

#[derive(Deserialize)]
struct RawLabeledDiagram {
    n_points: usize,
    chords: Vec<RawLabeledChord>,
}

/// Chord diagram whose k chords carry the labels 1..=k, each exactly once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(try_from = "RawLabeledDiagram")]
pub struct LabeledDiagram {
    diagram: ChordDiagram,
    labels: Vec<usize>,
}

impl TryFrom<RawLabeledDiagram> for LabeledDiagram {
    type Error = Error;

    fn try_from(raw: RawLabeledDiagram) -> Result<Self> {
        let pairs = raw
            .chords
            .into_iter()
            .map(|rc| Ok((Chord::new(rc.a, rc.b)?, rc.label)))
            .collect::<Result<Vec<_>>>()?;
        LabeledDiagram::from_pairs(raw.n_points, pairs)
    }
}

impl Serialize for LabeledDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Entry {
            a: usize,
            b: usize,
            label: usize,
        }
        let chords: Vec<Entry> = self
            .diagram
            .chords
            .iter()
            .zip(&self.labels)
            .map(|(c, &label)| Entry { a: c.a, b: c.b, label })
            .collect();
        let mut state = serializer.serialize_struct("LabeledDiagram", 2)?;
        state.serialize_field("n_points", &self.diagram.n_points)?;
        state.serialize_field("chords", &chords)?;
        state.end()
    }
}

impl LabeledDiagram {
    /// Pairs a diagram with labels for its sorted chord list; `labels[t]`
    /// belongs to `diagram.chords()[t]` and the labels must be exactly
    /// 1..=k.
    pub fn new(diagram: ChordDiagram, labels: Vec<usize>) -> Result<Self> {
        let k = diagram.len();
        if labels.len() != k {
            return Err(Error::InvalidDiagram(format!(
                "expected {k} labels, got {}",
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.iter().enumerate().any(|(t, &l)| l != t + 1) {
            return Err(Error::InvalidDiagram(format!(
                "labels must be a permutation of 1..={k}"
            )));
        }
        Ok(LabeledDiagram { diagram, labels })
    }

    /// Builds a labeled diagram from chord-label pairs in any order.
    pub fn from_pairs(n_points: usize, pairs: Vec<(Chord, usize)>) -> Result<Self> {
        let map: BTreeMap<Chord, usize> = pairs.iter().copied().collect();
        if map.len() != pairs.len() {
            return Err(Error::InvalidDiagram("duplicate chord".into()));
        }
        let diagram = ChordDiagram::new(n_points, map.keys().copied().collect())?;
        let labels = diagram.chords.iter().map(|c| map[c]).collect();
        LabeledDiagram::new(diagram, labels)
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label_of(&self, chord: Chord) -> Option<usize> {
        self.diagram
            .chords
            .iter()
            .position(|&c| c == chord)
            .map(|t| self.labels[t])
    }

    pub fn chord_with_label(&self, label: usize) -> Option<Chord> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|t| self.diagram.chords[t])
    }

    /// True when at every point the labels increase as the angular rank
    /// decreases, so the clockwise-most chord at each point has the largest
    /// label there.
    pub fn is_good(&self) -> bool {
        for p in 0..self.diagram.n_points {
            let labels: Vec<usize> = self
                .diagram
                .chords_at(p)
                .into_iter()
                .map(|c| self.label_of(c).unwrap())
                .collect();
            if labels.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        true
    }
}

/// Chord of an interval module: X(i, j) spans the boundary points i and j.
pub fn chord_of_interval(rep: IntervalRep) -> Chord {
    Chord { a: rep.i(), b: rep.j() }
}

/// Interval module of a chord: the chord from i to j carries X(i, j).
pub fn interval_of_chord(chord: Chord) -> IntervalRep {
    IntervalRep::new(chord.a, chord.b).unwrap()
}

/// Labeled diagram of an exceptional sequence on points 0..=n: the module
/// in position l of a length-k sequence becomes its chord labeled k+1-l.
/// Fails when the chords of the sequence collide, cross, or close a cycle.
pub fn sequence_to_labeled(n: usize, seq: &[IntervalRep]) -> Result<LabeledDiagram> {
    let k = seq.len();
    if k > n {
        return Err(Error::InvalidSequence(format!(
            "sequence of length {k} cannot fit in rank {n}"
        )));
    }
    for rep in seq {
        if rep.j() > n {
            return Err(Error::InvalidSequence(format!("{rep} does not fit in rank {n}")));
        }
    }
    let pairs = seq
        .iter()
        .enumerate()
        .map(|(idx, &rep)| (chord_of_interval(rep), k - idx))
        .collect();
    LabeledDiagram::from_pairs(n + 1, pairs)
}

/// Sequence of interval modules of a labeled diagram, inverting
/// [`sequence_to_labeled`]: the chord labeled l goes to position k+1-l.
pub fn labeled_to_sequence(labeled: &LabeledDiagram) -> Vec<IntervalRep> {
    let k = labeled.diagram.len();
    (0..k)
        .map(|idx| interval_of_chord(labeled.chord_with_label(k - idx).unwrap()))
        .collect()
}

/// All good labelings of a diagram, sorted by label vector. Labels 1..k are
/// placed by depth-first search; a chord may only receive the next label
/// once every chord below it in the rank order at a shared point is
/// labeled, so dead branches are cut early.
pub fn good_labelings(diagram: &ChordDiagram) -> Vec<LabeledDiagram> {
    let k = diagram.len();
    let mut needs_smaller: Vec<Vec<usize>> = vec![Vec::new(); k];
    for p in 0..diagram.n_points {
        let at = diagram.chords_at(p);
        for pair in at.windows(2) {
            let lower = diagram.chords.iter().position(|&c| c == pair[0]).unwrap();
            let upper = diagram.chords.iter().position(|&c| c == pair[1]).unwrap();
            needs_smaller[upper].push(lower);
        }
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; k];
    fn place(
        next: usize,
        needs_smaller: &[Vec<usize>],
        labels: &mut Vec<usize>,
        diagram: &ChordDiagram,
        out: &mut Vec<LabeledDiagram>,
    ) {
        let k = labels.len();
        if next > k {
            out.push(LabeledDiagram::new(diagram.clone(), labels.clone()).unwrap());
            return;
        }
        for t in 0..k {
            if labels[t] == 0 && needs_smaller[t].iter().all(|&s| labels[s] != 0) {
                labels[t] = next;
                place(next + 1, needs_smaller, labels, diagram, out);
                labels[t] = 0;
            }
        }
    }
    place(1, &needs_smaller, &mut labels, diagram, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: usize, b: usize) -> Chord {
        Chord::new(a, b).unwrap()
    }

    #[test]
    fn crossing_fixtures() {
        assert!(chords_cross(c(0, 2), c(1, 3)));
        assert!(!chords_cross(c(0, 1), c(1, 2)));
        assert!(!chords_cross(c(0, 3), c(1, 2)));
        assert!(!chords_cross(c(0, 2), c(2, 4)));
    }

    #[test]
    fn angular_rank_fixtures() {
        assert_eq!(angular_rank(5, c(1, 4), 1).unwrap(), 3);
        assert_eq!(angular_rank(5, c(1, 3), 1).unwrap(), 2);
        assert_eq!(angular_rank(5, c(0, 1), 1).unwrap(), 4);
        assert_eq!(angular_rank(5, c(0, 1), 0).unwrap(), 1);
        assert!(angular_rank(5, c(0, 1), 2).is_err());
    }

    #[test]
    fn diagram_validation() {
        assert!(ChordDiagram::new(4, vec![c(0, 2), c(1, 3)]).is_err());
        assert!(ChordDiagram::new(3, vec![c(0, 1), c(1, 2), c(0, 2)]).is_err());
        assert!(ChordDiagram::new(3, vec![c(0, 1), c(0, 1)]).is_err());
        assert!(ChordDiagram::new(3, vec![c(0, 3)]).is_err());
        assert!(ChordDiagram::new(4, vec![c(0, 3), c(1, 2)]).is_ok());
    }

    #[test]
    fn chords_at_orders_counterclockwise_first() {
        let d = ChordDiagram::new(5, vec![c(0, 1), c(1, 4), c(1, 3), c(2, 3)]).unwrap();
        assert_eq!(d.chords_at(1), vec![c(0, 1), c(1, 4), c(1, 3)]);
        assert_eq!(d.chords_at(3), vec![c(2, 3), c(1, 3)]);
    }

    #[test]
    fn spanning_diagram_counts() {
        assert_eq!(enumerate_spanning_diagrams(3).unwrap().len(), 3);
        assert_eq!(enumerate_spanning_diagrams(4).unwrap().len(), 12);
        assert!(enumerate_spanning_diagrams(4)
            .unwrap()
            .iter()
            .all(ChordDiagram::is_spanning));
    }

    #[test]
    fn good_labeling_fixture() {
        let labeled = LabeledDiagram::from_pairs(
            5,
            vec![(c(0, 1), 1), (c(1, 4), 2), (c(1, 3), 4), (c(2, 3), 3)],
        )
        .unwrap();
        assert!(labeled.is_good());
        let relabeled = LabeledDiagram::from_pairs(
            5,
            vec![(c(0, 1), 4), (c(1, 4), 1), (c(1, 3), 2), (c(2, 3), 3)],
        )
        .unwrap();
        assert!(!relabeled.is_good());
    }

    #[test]
    fn sequence_labeling_round_trip() {
        let seq = vec![
            IntervalRep::new(1, 3).unwrap(),
            IntervalRep::new(2, 3).unwrap(),
            IntervalRep::new(1, 4).unwrap(),
            IntervalRep::new(0, 1).unwrap(),
        ];
        let labeled = sequence_to_labeled(4, &seq).unwrap();
        assert!(labeled.is_good());
        assert_eq!(labeled_to_sequence(&labeled), seq);
    }

    #[test]
    fn non_exceptional_order_is_not_good() {
        let seq = vec![IntervalRep::new(0, 1).unwrap(), IntervalRep::new(1, 2).unwrap()];
        let labeled = sequence_to_labeled(2, &seq).unwrap();
        assert!(!labeled.is_good());
    }

    #[test]
    fn good_labelings_of_small_spanning_diagrams() {
        // Rank 2 has three exceptional sequences spread over the three
        // spanning diagrams on 3 points, one good labeling each.
        for d in enumerate_spanning_diagrams(3).unwrap() {
            assert_eq!(good_labelings(&d).len(), 1);
        }
    }

    #[test]
    fn labeled_json_round_trip() {
        let labeled = LabeledDiagram::from_pairs(3, vec![(c(0, 1), 2), (c(1, 2), 1)]).unwrap();
        let text = serde_json::to_string(&labeled).unwrap();
        let back: LabeledDiagram = serde_json::from_str(&text).unwrap();
        assert_eq!(back, labeled);
    }
}

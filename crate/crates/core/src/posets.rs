//! Posets of chord diagrams, their linear extensions, and realization of
//! abstract posets as diagrams.
//!
//! The chords of a diagram are ordered pointwise: at every boundary point
//! the incident chords form a chain from the counterclockwise-most chord at
//! the bottom to the clockwise-most at the top, and consecutive chords in a
//! chain are cover relations. Linear extensions of this poset are exactly
//! the good labelings of the diagram, so they index the exceptional
//! sequences the diagram supports. An abstract finite poset arises this way
//! from some spanning diagram exactly when every element covers at most two
//! elements and is covered by at most two, and its Hasse diagram is a tree
//! when read as an undirected graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::chords::{angular_rank, Chord, ChordDiagram, LabeledDiagram};
use crate::chords::labeled_to_sequence;
use crate::cmatdiag::{diagram_of_cmatrix, is_cmatrix_diagram};
use crate::error::{Error, Result};
use crate::exchange::CMatrix;
use crate::reptheory::IntervalRep;
use crate::util::{invert_permutation, permutations};

/// Largest poset size accepted by the exact extension counter.
const COUNT_CAP: usize = 20;

/// Poset on the chords of a diagram, stored with its strict order relation
/// in full.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramPoset {
    n_points: usize,
    chords: Vec<Chord>,
    less: Vec<Vec<bool>>,
}

impl DiagramPoset {
    /// Builds the poset of a diagram from the chains of chords at each
    /// boundary point.
    pub fn of_diagram(diagram: &ChordDiagram) -> Result<Self> {
        let chords = diagram.chords().to_vec();
        let k = chords.len();
        let index: BTreeMap<Chord, usize> =
            chords.iter().enumerate().map(|(t, &c)| (c, t)).collect();
        let mut less = vec![vec![false; k]; k];
        for p in 0..diagram.n_points() {
            let chain = diagram.chords_at(p);
            for pair in chain.windows(2) {
                less[index[&pair[0]]][index[&pair[1]]] = true;
            }
        }
        for via in 0..k {
            for x in 0..k {
                if less[x][via] {
                    for y in 0..k {
                        if less[via][y] {
                            less[x][y] = true;
                        }
                    }
                }
            }
        }
        if (0..k).any(|x| less[x][x]) {
            return Err(Error::InvalidPoset(
                "pointwise chains of the diagram close a cycle".into(),
            ));
        }
        Ok(DiagramPoset { n_points: diagram.n_points(), chords, less })
    }

    pub fn size(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn element_of(&self, chord: Chord) -> Option<usize> {
        self.chords.iter().position(|&c| c == chord)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.less[x][y]
    }

    /// Cover relations (lower, upper), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.size();
        let mut out = Vec::new();
        for x in 0..k {
            for y in 0..k {
                if self.less[x][y]
                    && !(0..k).any(|z| self.less[x][z] && self.less[z][y])
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn to_cover_poset(&self) -> CoverPoset {
        CoverPoset::new(self.size(), self.covers()).unwrap()
    }

    /// True when `labels` assigns 1..=k order-preservingly.
    pub fn is_linear_extension(&self, labels: &[usize]) -> bool {
        let k = self.size();
        if labels.len() != k {
            return false;
        }
        let mut sorted = labels.to_vec();
        sorted.sort();
        if sorted.iter().enumerate().any(|(t, &l)| l != t + 1) {
            return false;
        }
        (0..k).all(|x| (0..k).all(|y| !self.less[x][y] || labels[x] < labels[y]))
    }

    /// All linear extensions as label vectors, sorted lexicographically.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let k = self.size();
        let mut out = Vec::new();
        let mut labels = vec![0usize; k];
        fn extend(
            poset: &DiagramPoset,
            step: usize,
            labels: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let k = poset.size();
            if step == k {
                out.push(labels.clone());
                return;
            }
            for e in 0..k {
                if labels[e] == 0
                    && (0..k).all(|z| !poset.less[z][e] || labels[z] != 0)
                {
                    labels[e] = step + 1;
                    extend(poset, step + 1, labels, out);
                    labels[e] = 0;
                }
            }
        }
        extend(self, 0, &mut labels, &mut out);
        out.sort();
        out
    }

    /// Number of linear extensions by dynamic programming over down-sets.
    pub fn count_linear_extensions(&self) -> Result<u128> {
        let k = self.size();
        if k > COUNT_CAP {
            return Err(Error::BoundExceeded { n: k, bound: COUNT_CAP });
        }
        let below: Vec<u32> = (0..k)
            .map(|e| {
                (0..k)
                    .filter(|&z| self.less[z][e])
                    .fold(0u32, |acc, z| acc | 1 << z)
            })
            .collect();
        let mut counts = vec![0u128; 1 << k];
        counts[0] = 1;
        for mask in 1u32..1 << k {
            let mut total = 0u128;
            for e in 0..k {
                // e can come last among `mask` when everything below it is
                // also in the mask.
                if mask >> e & 1 == 1 && below[e] & !mask == 0 {
                    total = total
                        .checked_add(counts[(mask & !(1 << e)) as usize])
                        .ok_or(Error::Overflow("extension count"))?;
                }
            }
            counts[mask as usize] = total;
        }
        Ok(counts[(1usize << k) - 1])
    }
}

/// Exceptional sequences supported by a diagram: one per linear extension,
/// read off by treating the extension labels as a chord labeling. Sorted by
/// extension label vector.
pub fn sequences_of_diagram(diagram: &ChordDiagram) -> Result<Vec<Vec<IntervalRep>>> {
    let poset = DiagramPoset::of_diagram(diagram)?;
    poset
        .linear_extensions()
        .into_iter()
        .map(|labels| {
            let labeled = LabeledDiagram::new(diagram.clone(), labels)?;
            Ok(labeled_to_sequence(&labeled))
        })
        .collect()
}

/// Permutations attached to a c-matrix, one per linear extension of its
/// diagram poset: entry l of the result's preimage vector ranks row l's
/// chord, and the returned permutation is the inverse of that ranking. All
/// indices are 0-based and the list is sorted lexicographically.
pub fn permutations_of_cmatrix(c: &CMatrix) -> Result<Vec<Vec<usize>>> {
    let d = diagram_of_cmatrix(c)?;
    if !is_cmatrix_diagram(&d) {
        return Err(Error::NotCMatrix(
            "the rows draw a diagram that no mutation sequence reaches".into(),
        ));
    }
    let poset = DiagramPoset::of_diagram(&d.unoriented())?;
    let row_elements: Vec<usize> = d
        .chords()
        .iter()
        .map(|oc| poset.element_of(oc.chord()).unwrap())
        .collect();
    let mut out: Vec<Vec<usize>> = poset
        .linear_extensions()
        .into_iter()
        .map(|labels| {
            let ranking: Vec<usize> = row_elements.iter().map(|&e| labels[e] - 1).collect();
            invert_permutation(&ranking)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Finite poset given by its size and cover relations (lower, upper).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPoset {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl CoverPoset {
    /// Validates that the relations are acyclic covers of an actual poset:
    /// in range, duplicate-free, and none implied by the others.
    pub fn new(size: usize, mut covers: Vec<(usize, usize)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidPoset("need at least one element".into()));
        }
        covers.sort();
        for pair in covers.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidPoset(format!("duplicate cover {:?}", pair[0])));
            }
        }
        let mut less = vec![vec![false; size]; size];
        for &(lo, hi) in &covers {
            if lo >= size || hi >= size {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo}, {hi}) out of range for {size} elements"
                )));
            }
            if lo == hi {
                return Err(Error::InvalidPoset(format!("cover ({lo}, {hi}) is reflexive")));
            }
            less[lo][hi] = true;
        }
        for via in 0..size {
            for x in 0..size {
                if less[x][via] {
                    for y in 0..size {
                        if less[via][y] {
                            less[x][y] = true;
                        }
                    }
                }
            }
        }
        if (0..size).any(|x| less[x][x]) {
            return Err(Error::InvalidPoset("cover relations close a cycle".into()));
        }
        for &(lo, hi) in &covers {
            if (0..size).any(|z| less[lo][z] && less[z][hi]) {
                return Err(Error::InvalidPoset(format!(
                    "relation ({lo}, {hi}) is implied transitively and is not a cover"
                )));
            }
        }
        Ok(CoverPoset { size, covers })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    fn lowers_of(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, hi)| hi == x)
            .map(|&(lo, _)| lo)
            .collect()
    }

    fn uppers_of(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == x)
            .map(|&(_, hi)| hi)
            .collect()
    }
}

/// True when the poset can be the chord poset of a spanning diagram: every
/// element covers at most two elements and is covered by at most two, and
/// the Hasse diagram is connected and closes no undirected cycle.
pub fn satisfies_poset_conditions(poset: &CoverPoset) -> bool {
    let size = poset.size;
    for x in 0..size {
        if poset.lowers_of(x).len() > 2 || poset.uppers_of(x).len() > 2 {
            return false;
        }
    }
    let mut parent: Vec<usize> = (0..size).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(lo, hi) in &poset.covers {
        let (rl, rh) = (root(&mut parent, lo), root(&mut parent, hi));
        if rl == rh {
            return false;
        }
        parent[rl] = rh;
    }
    poset.covers.len() + 1 == size
}

/// True when some relabeling of the second poset's elements turns it into
/// the first. Exhaustive over permutations, for small posets.
pub fn posets_isomorphic(a: &CoverPoset, b: &CoverPoset) -> bool {
    if a.size != b.size {
        return false;
    }
    let target: BTreeSet<(usize, usize)> = a.covers.iter().copied().collect();
    permutations(a.size).into_iter().any(|perm| {
        let image: BTreeSet<(usize, usize)> = b
            .covers
            .iter()
            .map(|&(lo, hi)| (perm[lo], perm[hi]))
            .collect();
        image == target
    })
}

/// Diagram with every boundary point moved `r` steps counterclockwise.
pub fn rotate_diagram(diagram: &ChordDiagram, r: usize) -> ChordDiagram {
    let m = diagram.n_points();
    let chords = diagram
        .chords()
        .iter()
        .map(|c| Chord::new((c.a() + r) % m, (c.b() + r) % m).unwrap())
        .collect();
    ChordDiagram::new(m, chords).unwrap()
}

/// Endpoint of the chord at which no other mapped chord is more clockwise,
/// if one exists.
fn clockwise_free_endpoint(
    n_points: usize,
    map: &BTreeMap<usize, Chord>,
    chord: Chord,
) -> Option<usize> {
    [chord.a(), chord.b()].into_iter().find(|&p| {
        let rank = angular_rank(n_points, chord, p).unwrap();
        map.values().all(|&c| {
            c == chord
                || c.other_endpoint(p)
                    .is_none_or(|_| angular_rank(n_points, c, p).unwrap() > rank)
        })
    })
}

fn realize_rec(
    elems: &[usize],
    covers: &[(usize, usize)],
) -> Result<(usize, BTreeMap<usize, Chord>)> {
    if elems.len() == 1 {
        let mut map = BTreeMap::new();
        map.insert(elems[0], Chord::new(0, 1)?);
        return Ok((2, map));
    }
    let lower_of_cover: BTreeSet<usize> = covers.iter().map(|&(lo, _)| lo).collect();
    let x = *elems
        .iter()
        .find(|e| !lower_of_cover.contains(e))
        .expect("an acyclic cover relation always has a maximal element");
    let mut lowers: Vec<usize> = covers
        .iter()
        .filter(|&&(_, hi)| hi == x)
        .map(|&(lo, _)| lo)
        .collect();
    lowers.sort();
    let rest: Vec<usize> = elems.iter().copied().filter(|&e| e != x).collect();
    let rest_covers: Vec<(usize, usize)> = covers
        .iter()
        .copied()
        .filter(|&(lo, hi)| lo != x && hi != x)
        .collect();
    match lowers.as_slice() {
        [y] => {
            let (m, mut map) = realize_rec(&rest, &rest_covers)?;
            let e = clockwise_free_endpoint(m, &map, map[y]).ok_or_else(|| {
                Error::InvalidPoset("no room to attach the next maximal element".into())
            })?;
            // Insert a fresh boundary point right after e; the chord from e
            // to it is clockwise-most at e and covers exactly map[y].
            for chord in map.values_mut() {
                let shift = |p: usize| if p > e { p + 1 } else { p };
                *chord = Chord::new(shift(chord.a()), shift(chord.b()))?;
            }
            map.insert(x, Chord::new(e, e + 1)?);
            Ok((m + 1, map))
        }
        [y1, y2] => {
            let component = component_of(*y1, &rest, &rest_covers);
            if component.contains(y2) || component.len() == rest.len() {
                return Err(Error::InvalidPoset(
                    "removing a maximal element must split its two covered elements apart".into(),
                ));
            }
            let other: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|e| !component.contains(e))
                .collect();
            let split = |elems: &[usize]| -> Vec<(usize, usize)> {
                rest_covers
                    .iter()
                    .copied()
                    .filter(|&(lo, _)| elems.contains(&lo))
                    .collect()
            };
            let part1: Vec<usize> = component.iter().copied().collect();
            let (m1, map1) = realize_rec(&part1, &split(&part1))?;
            let (m2, map2) = realize_rec(&other, &split(&other))?;
            let mut map = BTreeMap::new();
            for (t, (m_t, map_t, y_t)) in
                [(m1, map1, *y1), (m2, map2, *y2)].into_iter().enumerate()
            {
                let e = clockwise_free_endpoint(m_t, &map_t, map_t[&y_t]).ok_or_else(|| {
                    Error::InvalidPoset("no room to attach the next maximal element".into())
                })?;
                // Rotate the part so its attachment endpoint is the part's
                // top point, then lay the parts side by side.
                let rotation = (m_t - 1 - e) % m_t;
                let offset = if t == 0 { 0 } else { m1 };
                for (elem, chord) in map_t {
                    let place = |p: usize| (p + rotation) % m_t + offset;
                    map.insert(elem, Chord::new(place(chord.a()), place(chord.b()))?);
                }
            }
            map.insert(x, Chord::new(m1 - 1, m1 + m2 - 1)?);
            Ok((m1 + m2, map))
        }
        _ => Err(Error::InvalidPoset(
            "a maximal element of a connected realizable poset covers one or two elements".into(),
        )),
    }
}

fn component_of(start: usize, elems: &[usize], covers: &[(usize, usize)]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(e) = stack.pop() {
        for &(lo, hi) in covers {
            let next = if lo == e {
                hi
            } else if hi == e {
                lo
            } else {
                continue;
            };
            if elems.contains(&next) && seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen
}

/// Builds a spanning diagram whose chord poset is isomorphic to the given
/// poset, along with the chord realizing each element. Fails when the poset
/// violates the structural conditions.
pub fn realize_poset(poset: &CoverPoset) -> Result<(ChordDiagram, Vec<Chord>)> {
    if !satisfies_poset_conditions(poset) {
        return Err(Error::InvalidPoset(
            "realizable posets have at most two covers each way per element \
             and a Hasse diagram that is a tree"
                .into(),
        ));
    }
    let elems: Vec<usize> = (0..poset.size).collect();
    let (m, map) = realize_rec(&elems, &poset.covers)?;
    let mapping: Vec<Chord> = elems.iter().map(|e| map[e]).collect();
    let diagram = ChordDiagram::new(m, mapping.clone())?;
    Ok((diagram, mapping))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reptheory::is_exceptional_sequence;

    fn c(a: usize, b: usize) -> Chord {
        Chord::new(a, b).unwrap()
    }

    fn example_diagram() -> ChordDiagram {
        ChordDiagram::new(5, vec![c(0, 1), c(1, 4), c(1, 3), c(2, 3)]).unwrap()
    }

    #[test]
    fn covers_of_example_diagram() {
        let poset = DiagramPoset::of_diagram(&example_diagram()).unwrap();
        let e = |a, b| poset.element_of(c(a, b)).unwrap();
        let mut expected = vec![
            (e(0, 1), e(1, 4)),
            (e(1, 4), e(1, 3)),
            (e(2, 3), e(1, 3)),
        ];
        expected.sort();
        assert_eq!(poset.covers(), expected);
    }

    #[test]
    fn path_diagram_is_a_chain_from_the_short_low_chord() {
        let d = ChordDiagram::new(4, vec![c(0, 1), c(1, 2), c(2, 3)]).unwrap();
        let poset = DiagramPoset::of_diagram(&d).unwrap();
        let e = |a, b| poset.element_of(c(a, b)).unwrap();
        assert!(poset.lt(e(0, 1), e(1, 2)));
        assert!(poset.lt(e(1, 2), e(2, 3)));
        assert!(poset.lt(e(0, 1), e(2, 3)));
        assert_eq!(poset.linear_extensions().len(), 1);
    }

    #[test]
    fn extensions_match_naive_filter() {
        let poset = DiagramPoset::of_diagram(&example_diagram()).unwrap();
        let k = poset.size();
        let naive: Vec<Vec<usize>> = permutations(k)
            .into_iter()
            .map(|p| p.into_iter().map(|v| v + 1).collect::<Vec<usize>>())
            .filter(|labels| poset.is_linear_extension(labels))
            .collect();
        assert_eq!(poset.linear_extensions(), naive);
        assert_eq!(poset.count_linear_extensions().unwrap(), naive.len() as u128);
        assert_eq!(naive.len(), 3);
    }

    #[test]
    fn rotation_preserves_the_poset() {
        let d = example_diagram();
        let base = DiagramPoset::of_diagram(&d).unwrap().to_cover_poset();
        for r in 1..5 {
            let rotated = DiagramPoset::of_diagram(&rotate_diagram(&d, r))
                .unwrap()
                .to_cover_poset();
            assert!(posets_isomorphic(&base, &rotated), "rotation by {r}");
        }
    }

    #[test]
    fn sequences_of_example_diagram() {
        let seqs = sequences_of_diagram(&example_diagram()).unwrap();
        assert_eq!(seqs.len(), 3);
        let x = |i, j| IntervalRep::new(i, j).unwrap();
        let expected: BTreeSet<Vec<IntervalRep>> = [
            vec![x(1, 3), x(2, 3), x(1, 4), x(0, 1)],
            vec![x(1, 3), x(1, 4), x(0, 1), x(2, 3)],
            vec![x(1, 3), x(1, 4), x(2, 3), x(0, 1)],
        ]
        .into_iter()
        .collect();
        assert_eq!(seqs.iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(seqs.iter().all(|s| is_exceptional_sequence(s)));
    }

    #[test]
    fn permutations_of_example_cmatrix() {
        let cm = CMatrix::new(vec![
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, -1, -1, 0],
            vec![0, 1, 1, 1],
        ])
        .unwrap();
        assert_eq!(
            permutations_of_cmatrix(&cm).unwrap(),
            vec![
                vec![0, 1, 3, 2],
                vec![0, 3, 1, 2],
                vec![1, 0, 3, 2],
            ]
        );
    }

    #[test]
    fn cover_poset_validation() {
        assert!(CoverPoset::new(3, vec![(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(CoverPoset::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(CoverPoset::new(2, vec![(0, 2)]).is_err());
        assert!(CoverPoset::new(3, vec![(0, 1), (1, 2)]).is_ok());
    }

    #[test]
    fn structural_conditions() {
        let chain = CoverPoset::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(satisfies_poset_conditions(&chain));
        let diamond =
            CoverPoset::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!satisfies_poset_conditions(&diamond));
        let wide = CoverPoset::new(4, vec![(0, 3), (1, 3), (2, 3)]).unwrap();
        assert!(!satisfies_poset_conditions(&wide));
        let disconnected = CoverPoset::new(2, vec![]).unwrap();
        assert!(!satisfies_poset_conditions(&disconnected));
    }

    #[test]
    fn realize_chain_and_vee() {
        let chain = CoverPoset::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let (d, _) = realize_poset(&chain).unwrap();
        assert!(d.is_spanning());
        assert!(posets_isomorphic(
            &chain,
            &DiagramPoset::of_diagram(&d).unwrap().to_cover_poset()
        ));
        let vee = CoverPoset::new(3, vec![(0, 2), (1, 2)]).unwrap();
        let (d, mapping) = realize_poset(&vee).unwrap();
        let poset = DiagramPoset::of_diagram(&d).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let px = poset.element_of(mapping[x]).unwrap();
                let py = poset.element_of(mapping[y]).unwrap();
                assert_eq!(poset.lt(px, py), x != y && [(0, 2), (1, 2)].contains(&(x, y)));
            }
        }
    }

    #[test]
    fn realize_rejects_bad_posets() {
        let wide = CoverPoset::new(4, vec![(0, 3), (1, 3), (2, 3)]).unwrap();
        assert!(realize_poset(&wide).is_err());
    }

    #[test]
    fn realize_round_trips_on_small_diagrams() {
        for m in 2..=5 {
            for d in crate::chords::enumerate_spanning_diagrams(m).unwrap() {
                let poset = DiagramPoset::of_diagram(&d).unwrap();
                let cover = poset.to_cover_poset();
                assert!(satisfies_poset_conditions(&cover));
                let (built, mapping) = realize_poset(&cover).unwrap();
                let rebuilt = DiagramPoset::of_diagram(&built).unwrap();
                for x in 0..poset.size() {
                    for y in 0..poset.size() {
                        let bx = rebuilt.element_of(mapping[x]).unwrap();
                        let by = rebuilt.element_of(mapping[y]).unwrap();
                        assert_eq!(poset.lt(x, y), rebuilt.lt(bx, by));
                    }
                }
            }
        }
    }
}

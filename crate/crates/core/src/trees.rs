//! Leaf counts of labeled trees and their diagram-side counterparts.
//!
//! Labeled trees on m vertices are walked through their Prufer sequences:
//! a tree has r leaves exactly when its Prufer sequence uses m - r distinct
//! values. On the diagram side, spanning diagrams weighted by their number
//! of linear extensions and grouped by their number of short positions
//! (circularly adjacent point pairs joined by a chord) produce the same
//! counts.

use std::collections::BTreeMap;

use crate::chords::{enumerate_spanning_diagrams, Chord};
use crate::error::{Error, Result};
use crate::posets::DiagramPoset;

/// Largest vertex count accepted by the exhaustive tree walks.
const TREE_CAP: usize = 8;

/// Edges of the labeled tree on vertices 0..m-1 with the given Prufer
/// sequence, which must have length m - 2 with entries below m.
pub fn prufer_to_edges(seq: &[usize], m: usize) -> Result<Vec<(usize, usize)>> {
    if m < 2 {
        return Err(Error::InvalidSequence("a tree needs at least two vertices".into()));
    }
    if seq.len() + 2 != m {
        return Err(Error::InvalidSequence(format!(
            "a Prufer sequence for {m} vertices has length {}",
            m - 2
        )));
    }
    if seq.iter().any(|&v| v >= m) {
        return Err(Error::InvalidSequence("Prufer entry out of range".into()));
    }
    let mut degree = vec![1usize; m];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    let mut used = vec![false; m];
    for &v in seq {
        let leaf = (0..m).find(|&u| degree[u] == 1 && !used[u]).unwrap();
        used[leaf] = true;
        degree[v] -= 1;
        edges.push((leaf.min(v), leaf.max(v)));
    }
    let mut last: Vec<usize> = (0..m).filter(|&u| degree[u] == 1 && !used[u]).collect();
    last.sort();
    edges.push((last[0], last[1]));
    Ok(edges)
}

/// Number of labeled trees on m vertices with each possible number of
/// leaves, by exhausting all Prufer sequences.
pub fn labeled_tree_leaf_distribution(m: usize) -> Result<BTreeMap<usize, u128>> {
    if m < 2 {
        return Err(Error::InvalidSequence("a tree needs at least two vertices".into()));
    }
    if m > TREE_CAP {
        return Err(Error::BoundExceeded { n: m, bound: TREE_CAP });
    }
    let mut out = BTreeMap::new();
    let len = m - 2;
    let mut seq = vec![0usize; len];
    loop {
        let mut present = vec![false; m];
        for &v in &seq {
            present[v] = true;
        }
        let distinct = present.iter().filter(|&&p| p).count();
        *out.entry(m - distinct).or_insert(0u128) += 1;
        // Advance the sequence as a base-m counter.
        let mut t = 0;
        while t < len {
            seq[t] += 1;
            if seq[t] < m {
                break;
            }
            seq[t] = 0;
            t += 1;
        }
        if t == len {
            break;
        }
    }
    Ok(out)
}

/// True for chords between circularly adjacent boundary points, including
/// the one from the last point back to point 0.
pub fn is_short_chord(n_points: usize, chord: Chord) -> bool {
    chord.b() - chord.a() == 1 || (chord.a() == 0 && chord.b() + 1 == n_points)
}

/// Linear extension counts of spanning diagrams on n + 1 points, summed by
/// the number of circularly adjacent point pairs joined by a chord.
pub fn leaf_distribution_via_diagrams(n: usize) -> Result<BTreeMap<usize, u128>> {
    if n == 0 {
        return Err(Error::InvalidDiagram("need at least one chord".into()));
    }
    if n + 1 > TREE_CAP {
        return Err(Error::BoundExceeded { n: n + 1, bound: TREE_CAP });
    }
    let m = n + 1;
    let mut out = BTreeMap::new();
    for diagram in enumerate_spanning_diagrams(m)? {
        // Count boundary positions rather than chords: on two points the
        // single chord sits between positions 0 and 1 in both directions
        // and must be counted twice.
        let short = (0..m)
            .filter(|&i| {
                let j = (i + 1) % m;
                let chord = Chord::new(i.min(j), i.max(j)).unwrap();
                diagram.chords().contains(&chord)
            })
            .count();
        let count = DiagramPoset::of_diagram(&diagram)?.count_linear_extensions()?;
        let total: &mut u128 = out.entry(short).or_insert(0);
        *total = total
            .checked_add(count)
            .ok_or(Error::Overflow("leaf distribution"))?;
    }
    Ok(out)
}

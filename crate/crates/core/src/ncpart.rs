//! Noncrossing partitions of {1..m} and their chains from the discrete
//! partition.
//!
//! A partition is noncrossing when no two blocks interleave around a circle
//! through 1..m. Merging two blocks of a noncrossing partition is a cover
//! relation in the noncrossing partition lattice whenever the result stays
//! noncrossing, so a chain here is a walk of such merges starting from all
//! singletons. Chains of k merges match labeled k-chord diagrams: the chord
//! labeled l records which two blocks the l-th merge joined, spanning the
//! gap between the two circular runs of the joined blocks.

use serde::{Deserialize, Serialize};

use crate::chords::{Chord, LabeledDiagram};
use crate::error::{Error, Result};

/// Noncrossing partition of {1..m}, blocks sorted and led by their minima.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct NCPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for NCPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        NCPartition::new(raw.m, raw.blocks)
    }
}

/// True when the two sorted sets interleave around the circle, that is when
/// reading their union cyclically changes ownership four or more times.
fn sets_interleave(a: &[usize], b: &[usize]) -> bool {
    let mut tagged: Vec<(usize, bool)> = a
        .iter()
        .map(|&x| (x, false))
        .chain(b.iter().map(|&x| (x, true)))
        .collect();
    tagged.sort();
    let changes = (0..tagged.len())
        .filter(|&t| tagged[t].1 != tagged[(t + 1) % tagged.len()].1)
        .count();
    changes >= 4
}

impl NCPartition {
    /// Builds a partition, sorting it into canonical form and validating
    /// that the blocks cover {1..m} exactly once without crossing.
    pub fn new(m: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPartition("need at least one element".into()));
        }
        for block in &mut blocks {
            block.sort();
            block.dedup();
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
        }
        blocks.sort();
        let mut seen = vec![false; m + 1];
        for block in &blocks {
            for &x in block {
                if x == 0 || x > m {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} out of range 1..={m}"
                    )));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if !seen[1..].iter().all(|&s| s) {
            return Err(Error::InvalidPartition("blocks do not cover 1..=m".into()));
        }
        for (t, a) in blocks.iter().enumerate() {
            for b in &blocks[t + 1..] {
                if sets_interleave(a, b) {
                    return Err(Error::InvalidPartition(format!(
                        "blocks {a:?} and {b:?} cross"
                    )));
                }
            }
        }
        Ok(NCPartition { m, blocks })
    }

    /// Discrete partition into singletons.
    pub fn singletons(m: usize) -> Result<Self> {
        NCPartition::new(m, (1..=m).map(|x| vec![x]).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Index of the block containing `x`.
    pub fn block_containing(&self, x: usize) -> Result<usize> {
        self.blocks
            .iter()
            .position(|block| block.contains(&x))
            .ok_or(Error::IndexOutOfRange { index: x, bound: self.m + 1 })
    }

    /// Merges the blocks containing the two elements; fails when they share
    /// a block already or when the merge would cross a third block.
    pub fn merge_blocks(&self, x: usize, y: usize) -> Result<NCPartition> {
        let bx = self.block_containing(x)?;
        let by = self.block_containing(y)?;
        if bx == by {
            return Err(Error::InvalidPartition(format!(
                "elements {x} and {y} already share a block"
            )));
        }
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(self.blocks.len() - 1);
        let mut merged = Vec::new();
        for (t, block) in self.blocks.iter().enumerate() {
            if t == bx || t == by {
                merged.extend_from_slice(block);
            } else {
                blocks.push(block.clone());
            }
        }
        blocks.push(merged);
        NCPartition::new(self.m, blocks)
    }

    /// True when every block of `self` sits inside one block of `other`.
    pub fn refines(&self, other: &NCPartition) -> bool {
        self.m == other.m
            && self.blocks.iter().all(|block| {
                other
                    .blocks
                    .iter()
                    .any(|big| block.iter().all(|x| big.contains(x)))
            })
    }
}

/// Chain of noncrossing partitions from the discrete partition, one block
/// merge per step.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<NCPartition>", into = "Vec<NCPartition>")]
pub struct NCChain {
    partitions: Vec<NCPartition>,
}

impl TryFrom<Vec<NCPartition>> for NCChain {
    type Error = Error;

    fn try_from(partitions: Vec<NCPartition>) -> Result<Self> {
        NCChain::new(partitions)
    }
}

impl From<NCChain> for Vec<NCPartition> {
    fn from(chain: NCChain) -> Self {
        chain.partitions
    }
}

impl NCChain {
    /// Validates that the sequence starts at singletons and that every step
    /// merges exactly two blocks of its predecessor.
    pub fn new(partitions: Vec<NCPartition>) -> Result<Self> {
        let first = partitions
            .first()
            .ok_or_else(|| Error::InvalidPartition("empty chain".into()))?;
        if *first != NCPartition::singletons(first.m)? {
            return Err(Error::InvalidPartition(
                "a chain starts at the partition into singletons".into(),
            ));
        }
        for pair in partitions.windows(2) {
            if pair[0].m != pair[1].m {
                return Err(Error::InvalidPartition("chain mixes ground sets".into()));
            }
            if pair[1].block_count() + 1 != pair[0].block_count()
                || !pair[0].refines(&pair[1])
            {
                return Err(Error::InvalidPartition(
                    "each chain step merges exactly two blocks".into(),
                ));
            }
        }
        Ok(NCChain { partitions })
    }

    pub fn m(&self) -> usize {
        self.partitions[0].m
    }

    /// Number of merge steps.
    pub fn len(&self) -> usize {
        self.partitions.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn partitions(&self) -> &[NCPartition] {
        &self.partitions
    }

    pub fn last(&self) -> &NCPartition {
        self.partitions.last().unwrap()
    }

    /// True when the chain ends at the one-block partition.
    pub fn is_maximal(&self) -> bool {
        self.last().is_full()
    }
}

/// Chain of a labeled diagram: the chord labeled l merges the blocks holding
/// its endpoints (shifted up by one) at step l.
pub fn chain_of_labeled_diagram(labeled: &LabeledDiagram) -> Result<NCChain> {
    let m = labeled.diagram().n_points();
    let k = labeled.diagram().len();
    let mut partitions = vec![NCPartition::singletons(m)?];
    for label in 1..=k {
        let chord = labeled.chord_with_label(label).unwrap();
        let next = partitions
            .last()
            .unwrap()
            .merge_blocks(chord.a() + 1, chord.b() + 1)?;
        partitions.push(next);
    }
    NCChain::new(partitions)
}

/// Labeled diagram of a chain, inverting [`chain_of_labeled_diagram`]: the
/// l-th merge joins two blocks that each form one circular run inside their
/// union, and the chord labeled l connects the last point of one run to the
/// last point of the other.
pub fn labeled_diagram_of_chain(chain: &NCChain) -> Result<LabeledDiagram> {
    let m = chain.m();
    let mut pairs = Vec::with_capacity(chain.len());
    for (step, pair) in chain.partitions().windows(2).enumerate() {
        let merged: Vec<&Vec<usize>> = pair[0]
            .blocks()
            .iter()
            .filter(|block| !pair[1].blocks().contains(block))
            .collect();
        let [b1, b2] = merged.as_slice() else {
            return Err(Error::InvalidPartition(
                "each chain step merges exactly two blocks".into(),
            ));
        };
        let mut union: Vec<(usize, bool)> = b1
            .iter()
            .map(|&x| (x - 1, false))
            .chain(b2.iter().map(|&x| (x - 1, true)))
            .collect();
        union.sort();
        let run_end = |tag: bool| {
            (0..union.len())
                .find(|&t| union[t].1 == tag && union[(t + 1) % union.len()].1 != tag)
                .map(|t| union[t].0)
        };
        let (Some(u), Some(w)) = (run_end(false), run_end(true)) else {
            return Err(Error::InvalidPartition(
                "merged blocks do not form two circular runs".into(),
            ));
        };
        pairs.push((Chord::new(u, w)?, step + 1));
    }
    LabeledDiagram::from_pairs(m, pairs)
}

/// All chains of `k` merges on {1..m}, sorted by their partition sequences.
pub fn enumerate_chains(m: usize, k: usize, bound: usize) -> Result<Vec<NCChain>> {
    if m == 0 {
        return Err(Error::InvalidPartition("need at least one element".into()));
    }
    if m > bound + 1 {
        return Err(Error::BoundExceeded { n: m - 1, bound });
    }
    if k >= m {
        return Err(Error::InvalidPartition(format!(
            "at most {} merges fit on {m} elements",
            m - 1
        )));
    }
    let mut out = Vec::new();
    let mut chain = vec![NCPartition::singletons(m)?];
    fn extend(
        k: usize,
        chain: &mut Vec<NCPartition>,
        out: &mut Vec<NCChain>,
    ) {
        if chain.len() == k + 1 {
            out.push(NCChain { partitions: chain.clone() });
            return;
        }
        let current = chain.last().unwrap().clone();
        for i in 0..current.block_count() {
            for j in i + 1..current.block_count() {
                let (x, y) = (current.blocks()[i][0], current.blocks()[j][0]);
                if let Ok(next) = current.merge_blocks(x, y) {
                    chain.push(next);
                    extend(k, chain, out);
                    chain.pop();
                }
            }
        }
    }
    extend(k, &mut chain, &mut out);
    out.sort();
    Ok(out)
}

/// Number of maximal chains, from singletons to the one-block partition.
pub fn count_maximal_chains(m: usize, bound: usize) -> Result<u128> {
    Ok(enumerate_chains(m, m.saturating_sub(1), bound)?.len() as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chords::labeled_to_sequence;
    use crate::reptheory::is_exceptional_sequence;

    fn p(m: usize, blocks: &[&[usize]]) -> NCPartition {
        NCPartition::new(m, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn crossing_blocks_are_rejected() {
        assert!(NCPartition::new(4, vec![vec![1, 3], vec![2, 4]]).is_err());
        assert!(NCPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]).is_ok());
        assert!(NCPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(NCPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn canonical_block_order() {
        let part = NCPartition::new(4, vec![vec![4], vec![3, 1, 2]]).unwrap();
        assert_eq!(part.blocks(), &[vec![1, 2, 3], vec![4]]);
    }

    #[test]
    fn merging_blocks() {
        let part = p(4, &[&[1], &[2], &[3], &[4]]);
        let merged = part.merge_blocks(1, 4).unwrap();
        assert_eq!(merged, p(4, &[&[1, 4], &[2], &[3]]));
        assert!(merged.merge_blocks(1, 4).is_err());
        // Joining 2 with {1, 4} is fine, but 2 with 3 alone would cross.
        assert!(merged.merge_blocks(2, 1).is_ok());
        assert!(p(4, &[&[1, 4], &[2], &[3]]).merge_blocks(2, 3).is_ok());
        assert!(p(5, &[&[1, 4], &[2], &[3], &[5]]).merge_blocks(3, 5).is_err());
    }

    #[test]
    fn chain_validation() {
        let m = 3;
        let chain = NCChain::new(vec![
            NCPartition::singletons(m).unwrap(),
            p(3, &[&[1, 2], &[3]]),
            p(3, &[&[1, 2, 3]]),
        ])
        .unwrap();
        assert!(chain.is_maximal());
        assert_eq!(chain.len(), 2);
        assert!(NCChain::new(vec![p(3, &[&[1, 2], &[3]])]).is_err());
        assert!(NCChain::new(vec![
            NCPartition::singletons(3).unwrap(),
            p(3, &[&[1, 2, 3]]),
        ])
        .is_err());
    }

    #[test]
    fn chain_of_path_diagram() {
        let labeled = LabeledDiagram::from_pairs(
            4,
            vec![
                (Chord::new(0, 1).unwrap(), 1),
                (Chord::new(1, 2).unwrap(), 2),
                (Chord::new(2, 3).unwrap(), 3),
            ],
        )
        .unwrap();
        let chain = chain_of_labeled_diagram(&labeled).unwrap();
        assert_eq!(
            chain.partitions(),
            &[
                NCPartition::singletons(4).unwrap(),
                p(4, &[&[1, 2], &[3], &[4]]),
                p(4, &[&[1, 2, 3], &[4]]),
                p(4, &[&[1, 2, 3, 4]]),
            ]
        );
        assert_eq!(labeled_diagram_of_chain(&chain).unwrap(), labeled);
    }

    #[test]
    fn chain_of_star_diagram() {
        let labeled = LabeledDiagram::from_pairs(
            4,
            vec![
                (Chord::new(0, 3).unwrap(), 1),
                (Chord::new(0, 2).unwrap(), 2),
                (Chord::new(0, 1).unwrap(), 3),
            ],
        )
        .unwrap();
        let chain = chain_of_labeled_diagram(&labeled).unwrap();
        assert_eq!(
            chain.partitions()[1..],
            [
                p(4, &[&[1, 4], &[2], &[3]]),
                p(4, &[&[1, 3, 4], &[2]]),
                p(4, &[&[1, 2, 3, 4]]),
            ]
        );
        assert_eq!(labeled_diagram_of_chain(&chain).unwrap(), labeled);
    }

    #[test]
    fn maximal_chain_counts() {
        assert_eq!(count_maximal_chains(3, 6).unwrap(), 3);
        assert_eq!(count_maximal_chains(4, 6).unwrap(), 16);
    }

    #[test]
    fn chains_round_trip_and_give_exceptional_sequences() {
        for k in 1..4 {
            for chain in enumerate_chains(4, k, 6).unwrap() {
                let labeled = labeled_diagram_of_chain(&chain).unwrap();
                assert_eq!(chain_of_labeled_diagram(&labeled).unwrap(), chain);
                assert!(labeled.is_good());
                assert!(is_exceptional_sequence(&labeled_to_sequence(&labeled)));
            }
        }
    }

    #[test]
    fn partition_json_round_trip() {
        let part = p(4, &[&[1, 4], &[2], &[3]]);
        let text = serde_json::to_string(&part).unwrap();
        let back: NCPartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, part);
        assert!(serde_json::from_str::<NCPartition>(
            r#"{"m":4,"blocks":[[1,3],[2,4]]}"#
        )
        .is_err());
    }
}

//! Randomized invariants: structural facts that must hold on every input,
//! exercised over generated matrices, chords, partitions, and sequences.

use ceswb_core::chords::{angular_rank, chords_cross, Chord};
use ceswb_core::exchange::ExchangeMatrix;
use ceswb_core::ncpart::NCPartition;
use ceswb_core::reptheory::euler_form;
use ceswb_core::trees::prufer_to_edges;
use ceswb_core::util::permutations;
use proptest::prelude::*;

fn reachable_matrix(n: usize, seq: &[usize]) -> ExchangeMatrix {
    let seq: Vec<usize> = seq.iter().map(|&v| v % n).collect();
    ExchangeMatrix::framed(n).unwrap().mutate_seq(&seq).unwrap()
}

proptest! {
    #[test]
    fn mutation_is_an_involution(
        n in 1usize..=4,
        seq in prop::collection::vec(0usize..4, 0..8),
        k in 0usize..4,
    ) {
        let m = reachable_matrix(n, &seq);
        let back = m.mutate(k % n).unwrap().mutate(k % n).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn reachable_matrices_stay_skew_and_sign_coherent(
        n in 1usize..=4,
        seq in prop::collection::vec(0usize..4, 0..10),
    ) {
        let m = reachable_matrix(n, &seq);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(m.entry(i, j), -m.entry(j, i));
            }
        }
        // Constructing the c-matrix revalidates that every row of the
        // frozen block is nonzero and wholly one sign.
        let c = m.c_matrix().unwrap();
        prop_assert_eq!(c.n(), n);
    }

    #[test]
    fn canonical_key_ignores_vertex_relabeling(
        n in 2usize..=4,
        seq in prop::collection::vec(0usize..4, 0..8),
        pidx in 0usize..24,
    ) {
        let m = reachable_matrix(n, &seq);
        let perms = permutations(n);
        let sigma = &perms[pidx % perms.len()];
        let mut entries = vec![vec![0i64; 2 * n]; n];
        for i in 0..n {
            for j in 0..2 * n {
                let tj = if j < n { sigma[j] } else { j };
                entries[sigma[i]][tj] = m.entry(i, j);
            }
        }
        let relabeled = ExchangeMatrix::new(n, entries).unwrap();
        prop_assert_eq!(relabeled.canonical_key(), m.canonical_key());
    }

    #[test]
    fn exchange_matrix_json_round_trips(
        n in 1usize..=4,
        seq in prop::collection::vec(0usize..4, 0..8),
    ) {
        let m = reachable_matrix(n, &seq);
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExchangeMatrix>(&json).unwrap(), m);
    }

    #[test]
    fn chord_crossing_is_symmetric_and_spares_shared_endpoints(
        a in 0usize..10,
        b in 0usize..10,
        c in 0usize..10,
        d in 0usize..10,
    ) {
        prop_assume!(a != b && c != d);
        let c1 = Chord::new(a.min(b), a.max(b)).unwrap();
        let c2 = Chord::new(c.min(d), c.max(d)).unwrap();
        prop_assert_eq!(chords_cross(c1, c2), chords_cross(c2, c1));
        if c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b()) {
            prop_assert!(!chords_cross(c1, c2));
        }
    }

    #[test]
    fn chord_ranks_at_its_two_endpoints_sum_to_the_point_count(
        m in 2usize..=12,
        a in 0usize..12,
        b in 0usize..12,
    ) {
        let (a, b) = (a % m, b % m);
        prop_assume!(a != b);
        let chord = Chord::new(a.min(b), a.max(b)).unwrap();
        let ra = angular_rank(m, chord, chord.a()).unwrap();
        let rb = angular_rank(m, chord, chord.b()).unwrap();
        prop_assert!(ra >= 1 && rb >= 1);
        prop_assert_eq!(ra + rb, m);
    }

    #[test]
    fn prufer_sequences_decode_to_trees(
        m in 2usize..=8,
        raw in prop::collection::vec(0usize..8, 6),
    ) {
        let seq: Vec<usize> = raw.iter().take(m - 2).map(|&v| v % m).collect();
        let edges = prufer_to_edges(&seq, m).unwrap();
        prop_assert_eq!(edges.len(), m - 1);
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        for &(u, v) in &edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            prop_assert_ne!(ru, rv, "edge ({}, {}) closes a cycle", u, v);
            parent[ru] = rv;
        }
    }

    #[test]
    fn euler_form_is_additive_in_each_argument(
        vals in prop::collection::vec((0i64..4, 0i64..4, 0i64..4), 1..6),
    ) {
        let v1: Vec<i64> = vals.iter().map(|t| t.0).collect();
        let v2: Vec<i64> = vals.iter().map(|t| t.1).collect();
        let w: Vec<i64> = vals.iter().map(|t| t.2).collect();
        let sum: Vec<i64> = v1.iter().zip(&v2).map(|(a, b)| a + b).collect();
        prop_assert_eq!(
            euler_form(&sum, &w).unwrap(),
            euler_form(&v1, &w).unwrap() + euler_form(&v2, &w).unwrap()
        );
        prop_assert_eq!(
            euler_form(&w, &sum).unwrap(),
            euler_form(&w, &v1).unwrap() + euler_form(&w, &v2).unwrap()
        );
    }

    #[test]
    fn block_merges_walk_down_the_partition_lattice(
        m in 1usize..=7,
        picks in prop::collection::vec((0usize..7, 0usize..7), 0..6),
    ) {
        let mut current = NCPartition::singletons(m).unwrap();
        for (x, y) in picks {
            let bc = current.block_count();
            if bc == 1 {
                break;
            }
            let bi = x % bc;
            let mut bj = y % bc;
            if bi == bj {
                bj = (bj + 1) % bc;
            }
            let xe = current.blocks()[bi][0];
            let ye = current.blocks()[bj][0];
            if let Ok(next) = current.merge_blocks(xe, ye) {
                prop_assert_eq!(next.block_count(), bc - 1);
                prop_assert!(current.refines(&next));
                prop_assert!(!next.refines(&current));
                current = next;
            }
        }
        let json = serde_json::to_string(&current).unwrap();
        prop_assert_eq!(serde_json::from_str::<NCPartition>(&json).unwrap(), current);
    }
}

//! Acceptance gate: one test per release criterion, each ending in a single
//! PASS line with its headline numbers. Run with `--nocapture` to see the
//! lines; any failure shows up as a failed test with full context.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ceswb_core::chords::{
    chord_of_interval, enumerate_diagrams, enumerate_spanning_diagrams, good_labelings,
};
use ceswb_core::cmatdiag::{
    diagram_of_cmatrix, enumerate_cmatrix_diagrams, is_cmatrix_diagram, mutate_diagram,
    st_witness, OrientedChord,
};
use ceswb_core::exchange::{enumerate_cmatrices, enumerate_seeds, is_reddening_sequence};
use ceswb_core::ncpart::{
    chain_of_labeled_diagram, count_maximal_chains, enumerate_chains, labeled_diagram_of_chain,
};
use ceswb_core::posets::{
    permutations_of_cmatrix, posets_isomorphic, realize_poset, satisfies_poset_conditions,
    sequences_of_diagram, DiagramPoset,
};
use ceswb_core::reptheory::{
    all_interval_reps, euler_form, ext1_dim, hom_dim, hom_dim_solver, is_exceptional_sequence,
    IntervalRep, QuiverRep,
};
use ceswb_core::trees::{labeled_tree_leaf_distribution, leaf_distribution_via_diagrams};
use ceswb_core::{CMatrix, ExchangeMatrix, Sign, DEFAULT_BOUND};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CES_COUNTS: [u128; 6] = [1, 3, 16, 125, 1296, 16807];

fn oc(tail: usize, head: usize) -> OrientedChord {
    OrientedChord::new(tail, head).unwrap()
}

fn x(i: usize, j: usize) -> IntervalRep {
    IntervalRep::new(i, j).unwrap()
}

#[test]
fn criterion_01_mutation_fixture_and_involution() {
    let start = Instant::now();
    let fixture = ExchangeMatrix::new(
        3,
        vec![vec![0, 2, 0, 0], vec![-2, 0, 1, 0], vec![0, -1, 0, -1]],
    )
    .unwrap();
    let mutated = fixture.mutate(1).unwrap();
    assert_eq!(
        mutated.rows(),
        &[vec![0, -2, 2, 0], vec![2, 0, -1, 0], vec![-2, 1, 0, -1]]
    );
    assert_eq!(mutated.mutate(1).unwrap(), fixture);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    for n in 1..=5usize {
        let mut m = ExchangeMatrix::framed(n).unwrap();
        for _ in 0..2000 {
            let k = rng.random_range(0..n);
            let next = m.mutate(k).unwrap();
            assert_eq!(next.mutate(k).unwrap(), m, "rank {n} at vertex {k}");
            m = next;
            checked += 1;
        }
    }
    assert_eq!(checked, 10_000);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 01 PASS: worked 3x4 mutation reproduced, 10000 involution checks in {elapsed:?}"
    );
}

#[test]
fn criterion_02_sequence_counts_by_three_routes() {
    let start = Instant::now();
    for n in 1..=6usize {
        let want = CES_COUNTS[n - 1];
        if n <= 3 {
            let reps = all_interval_reps(n);
            let mut count = 0u128;
            let mut idx = vec![0usize; n];
            loop {
                let seq: Vec<IntervalRep> = idx.iter().map(|&t| reps[t]).collect();
                if is_exceptional_sequence(&seq) {
                    count += 1;
                }
                let mut t = 0;
                while t < n {
                    idx[t] += 1;
                    if idx[t] < reps.len() {
                        break;
                    }
                    idx[t] = 0;
                    t += 1;
                }
                if t == n {
                    break;
                }
            }
            assert_eq!(count, want, "tuple filter, rank {n}");
        }
        let diagrams = enumerate_spanning_diagrams(n + 1).unwrap();
        let by_labelings: u128 = diagrams
            .iter()
            .map(|d| good_labelings(d).len() as u128)
            .sum();
        assert_eq!(by_labelings, want, "good labelings, rank {n}");
        let by_extensions: u128 = diagrams
            .iter()
            .map(|d| {
                DiagramPoset::of_diagram(d)
                    .unwrap()
                    .count_linear_extensions()
                    .unwrap()
            })
            .sum();
        assert_eq!(by_extensions, want, "extension counts, rank {n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 02 PASS: counts 1, 3, 16, 125, 1296, 16807 agree across routes in {elapsed:?}"
    );
}

#[test]
fn criterion_03_worked_examples() {
    // Rank 3: mutate at vertex 1 then vertex 3 (1-based), tracking the
    // oriented diagram alongside the matrix.
    let m0 = ExchangeMatrix::framed(3).unwrap();
    let d0 = diagram_of_cmatrix(&m0.c_matrix().unwrap()).unwrap();
    assert_eq!(d0.chords(), &[oc(0, 1), oc(1, 2), oc(2, 3)]);

    let m1 = m0.mutate(0).unwrap();
    let d1 = mutate_diagram(&d0, &m0, 0).unwrap();
    assert_eq!(
        m1.c_matrix().unwrap().rows(),
        &[vec![-1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]
    );
    assert_eq!(d1.chords(), &[oc(1, 0), oc(0, 2), oc(2, 3)]);
    assert_eq!(d1.chords()[2], d0.chords()[2], "third chord must not move");
    assert_eq!(d1, diagram_of_cmatrix(&m1.c_matrix().unwrap()).unwrap());

    let m2 = m1.mutate(2).unwrap();
    let d2 = mutate_diagram(&d1, &m1, 2).unwrap();
    assert_eq!(
        m2.c_matrix().unwrap().rows(),
        &[vec![-1, 0, 0], vec![1, 1, 0], vec![0, 0, -1]]
    );
    assert_eq!(d2.chords(), &[oc(1, 0), oc(0, 2), oc(3, 2)]);
    assert_eq!(d2.chords()[0], d1.chords()[0], "first chord must not move");
    assert_eq!(d2.chords()[1], d1.chords()[1], "second chord must not move");
    assert_eq!(d2, diagram_of_cmatrix(&m2.c_matrix().unwrap()).unwrap());

    // Rank 4: mutate at vertex 2 then vertex 3 (1-based), then read the
    // extensions, permutations, and sequences off the resulting c-matrix.
    let m = ExchangeMatrix::framed(4).unwrap().mutate_seq(&[1, 2]).unwrap();
    let c = m.c_matrix().unwrap();
    for row in c.rows() {
        println!("c-matrix row {row:?}");
    }
    assert_eq!(
        c.rows(),
        &[
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, -1, -1, 0],
            vec![0, 1, 1, 1],
        ]
    );
    let d = diagram_of_cmatrix(&c).unwrap();
    let poset = DiagramPoset::of_diagram(&d.unoriented()).unwrap();
    assert_eq!(
        poset.linear_extensions(),
        vec![vec![1, 4, 2, 3], vec![1, 4, 3, 2], vec![2, 4, 3, 1]]
    );
    // One-line images of the permutations, 0-based: in cycle notation these
    // are (43), (324), and (12)(43).
    assert_eq!(
        permutations_of_cmatrix(&c).unwrap(),
        vec![vec![0, 1, 3, 2], vec![0, 3, 1, 2], vec![1, 0, 3, 2]]
    );
    let seqs: BTreeSet<Vec<IntervalRep>> = sequences_of_diagram(&d.unoriented())
        .unwrap()
        .into_iter()
        .collect();
    let expected: BTreeSet<Vec<IntervalRep>> = [
        vec![x(1, 3), x(2, 3), x(1, 4), x(0, 1)],
        vec![x(1, 3), x(1, 4), x(0, 1), x(2, 3)],
        vec![x(1, 3), x(1, 4), x(2, 3), x(0, 1)],
    ]
    .into_iter()
    .collect();
    assert_eq!(seqs, expected);
    println!("criterion 03 PASS: both worked mutation walks reproduced, including 3 extensions");
}

#[test]
fn criterion_04_diagram_mutation_commutes() {
    let start = Instant::now();
    let mut squares = 0usize;
    for n in 1..=4 {
        for seed in enumerate_seeds(n, DEFAULT_BOUND).unwrap() {
            let d = diagram_of_cmatrix(&seed.matrix.c_matrix().unwrap()).unwrap();
            for k in 0..n {
                let via_diagram = mutate_diagram(&d, &seed.matrix, k).unwrap();
                let mutated = seed.matrix.mutate(k).unwrap();
                let via_matrix = diagram_of_cmatrix(&mutated.c_matrix().unwrap()).unwrap();
                assert_eq!(
                    via_diagram, via_matrix,
                    "rank {n}, history {:?}, vertex {k}",
                    seed.history
                );
                squares += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 04 PASS: {squares} commuting squares through rank 4 in {elapsed:?}");
}

#[test]
fn criterion_05_classification_matches_search() {
    let mut sizes = Vec::new();
    for n in 2..=4usize {
        let from_predicate: BTreeSet<_> = enumerate_cmatrix_diagrams(n, DEFAULT_BOUND)
            .unwrap()
            .into_iter()
            .map(|d| d.canonical())
            .collect();
        let from_search: BTreeSet<_> = enumerate_cmatrices(n, DEFAULT_BOUND)
            .unwrap()
            .iter()
            .map(|c| diagram_of_cmatrix(c).unwrap().canonical())
            .collect();
        assert_eq!(from_predicate, from_search, "rank {n}");
        sizes.push(from_predicate.len());
    }
    assert_eq!(sizes[0], 5);
    println!(
        "criterion 05 PASS: predicate and search agree on {} / {} / {} diagrams",
        sizes[0], sizes[1], sizes[2]
    );
}

#[test]
fn criterion_06_hom_and_euler_oracles() {
    let mut pairs = 0usize;
    for n in 1..=6 {
        for &a in &all_interval_reps(n) {
            let am = QuiverRep::interval(n, a).unwrap();
            let av = a.dim_vector(n).unwrap();
            for &b in &all_interval_reps(n) {
                let bm = QuiverRep::interval(n, b).unwrap();
                let bv = b.dim_vector(n).unwrap();
                assert_eq!(
                    hom_dim_solver(&am, &bm).unwrap(),
                    hom_dim(a, b),
                    "rank {n}: {a} -> {b}"
                );
                assert_eq!(
                    euler_form(&av, &bv).unwrap(),
                    hom_dim(a, b) as i64 - ext1_dim(a, b) as i64,
                    "rank {n}: {a}, {b}"
                );
                pairs += 1;
            }
        }
    }
    println!("criterion 06 PASS: solver and bilinear form agree on {pairs} pairs");
}

#[test]
fn criterion_07_witness_sequences() {
    let mut witnesses = 0usize;
    for n in 1..=4usize {
        for c in enumerate_cmatrices(n, DEFAULT_BOUND).unwrap() {
            let d = diagram_of_cmatrix(&c).unwrap();
            assert!(is_cmatrix_diagram(&d), "{:?}", c.rows());
            let seq = st_witness(&d).unwrap();
            assert!(is_exceptional_sequence(&seq), "{:?}", c.rows());
            let signs: Vec<Sign> = seq
                .iter()
                .map(|&rep| {
                    let chord = chord_of_interval(rep);
                    d.chords()
                        .iter()
                        .find(|o| o.chord() == chord)
                        .unwrap()
                        .sign()
                })
                .collect();
            let first_positive = signs
                .iter()
                .position(|&s| s == Sign::Positive)
                .unwrap_or(signs.len());
            assert!(
                signs[first_positive..].iter().all(|&s| s == Sign::Positive),
                "pattern {signs:?} for {:?}",
                c.rows()
            );
            let modules: Vec<IntervalRep> = (0..n)
                .map(|i| {
                    let abs: Vec<i64> = c.row(i).iter().map(|&v| v.abs()).collect();
                    IntervalRep::from_dim_vector(&abs).unwrap()
                })
                .collect();
            for i in 0..n {
                for j in 0..n {
                    if i != j && c.row_sign(i) == c.row_sign(j) {
                        assert_eq!(
                            hom_dim(modules[i], modules[j]),
                            0,
                            "rows {i}, {j} of {:?}",
                            c.rows()
                        );
                    }
                }
            }
            witnesses += 1;
        }
    }
    println!("criterion 07 PASS: {witnesses} witness sequences valid, negatives first");
}

#[test]
fn criterion_08_reddening_terminality() {
    for n in 1..=4 {
        for seed in enumerate_seeds(n, DEFAULT_BOUND).unwrap() {
            if seed.matrix.green_vertices().is_empty() {
                assert!(
                    seed.matrix
                        .c_matrix()
                        .unwrap()
                        .is_negative_identity_up_to_rows(),
                    "history {:?}",
                    seed.history
                );
            }
        }
    }
    assert!(is_reddening_sequence(2, &[1, 0]).unwrap());
    assert_eq!(
        ExchangeMatrix::framed(2)
            .unwrap()
            .mutate_seq(&[1, 0])
            .unwrap()
            .c_matrix()
            .unwrap(),
        CMatrix::negative_identity(2).unwrap()
    );
    assert!(is_reddening_sequence(2, &[0, 1, 0]).unwrap());
    assert!(ExchangeMatrix::framed(2)
        .unwrap()
        .mutate_seq(&[0, 1, 0])
        .unwrap()
        .c_matrix()
        .unwrap()
        .is_negative_identity_up_to_rows());
    println!("criterion 08 PASS: all-red seeds terminal through rank 4, both rank-2 walks redden");
}

#[test]
fn criterion_09_partition_chain_bijections() {
    for n in 1..=4usize {
        let m = n + 1;
        for k in 0..=n {
            let chains = enumerate_chains(m, k, DEFAULT_BOUND).unwrap();
            for chain in &chains {
                let labeled = labeled_diagram_of_chain(chain).unwrap();
                assert!(labeled.is_good(), "{chain:?}");
                assert_eq!(&chain_of_labeled_diagram(&labeled).unwrap(), chain);
            }
            let mut seen = 0usize;
            for d in enumerate_diagrams(m, k).unwrap() {
                for labeled in good_labelings(&d) {
                    let chain = chain_of_labeled_diagram(&labeled).unwrap();
                    assert_eq!(labeled_diagram_of_chain(&chain).unwrap(), labeled);
                    seen += 1;
                }
            }
            assert_eq!(seen, chains.len(), "{m} elements, {k} merges");
        }
    }
    for n in 1..=5usize {
        assert_eq!(
            count_maximal_chains(n + 1, DEFAULT_BOUND).unwrap(),
            CES_COUNTS[n - 1],
            "{} elements",
            n + 1
        );
    }
    println!("criterion 09 PASS: chain bijections invert exhaustively, maximal counts match");
}

#[test]
fn criterion_10_tree_leaf_distribution() {
    for n in 1..=5usize {
        let trees = labeled_tree_leaf_distribution(n + 1).unwrap();
        assert_eq!(trees, leaf_distribution_via_diagrams(n).unwrap(), "rank {n}");
    }
    let four = labeled_tree_leaf_distribution(4).unwrap();
    assert_eq!(four.get(&2), Some(&12));
    assert_eq!(four.get(&3), Some(&4));
    println!("criterion 10 PASS: leaf distributions match through rank 5, with 12 + 4 on 4 points");
}

#[test]
fn criterion_11_poset_recognition_and_realization() {
    let mut posets = 0usize;
    for m in 2..=6usize {
        for d in enumerate_spanning_diagrams(m).unwrap() {
            let cover = DiagramPoset::of_diagram(&d).unwrap().to_cover_poset();
            assert!(satisfies_poset_conditions(&cover), "{d:?}");
            posets += 1;
            if m <= 5 {
                let (built, _) = realize_poset(&cover).unwrap();
                let rebuilt = DiagramPoset::of_diagram(&built).unwrap().to_cover_poset();
                assert!(posets_isomorphic(&cover, &rebuilt), "{d:?}");
            }
        }
    }
    println!("criterion 11 PASS: {posets} spanning posets recognized, realizations isomorphic");
}

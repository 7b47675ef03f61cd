//! Implementations behind the CLI subcommands.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use ceswb_core::chords::{
    enumerate_diagrams, enumerate_spanning_diagrams, good_labelings, labeled_to_sequence,
    sequence_to_labeled, ChordDiagram, LabeledDiagram,
};
use ceswb_core::cmatdiag::{
    cmatrix_of_diagram, diagram_of_cmatrix, enumerate_cmatrix_diagrams, is_cmatrix_diagram,
    mutate_diagram, st_witness, OrientedDiagram,
};
use ceswb_core::exchange::{enumerate_seeds, CMatrix, ExchangeMatrix, Seed, Sign};
use ceswb_core::ncpart::{
    chain_of_labeled_diagram, count_maximal_chains, enumerate_chains, labeled_diagram_of_chain,
    NCChain, NCPartition,
};
use ceswb_core::posets::DiagramPoset;
use ceswb_core::reptheory::enumerate_ces;
use ceswb_core::trees::{labeled_tree_leaf_distribution, leaf_distribution_via_diagrams};
use ceswb_core::util::invert_permutation;

use crate::render;
use crate::{EnumWhat, Format};

/// Finished subcommand output plus an optional failure the caller must
/// report through the exit code after writing the body.
pub struct Rendered {
    pub body: String,
    pub failure: Option<String>,
}

impl Rendered {
    fn ok(body: String) -> Rendered {
        Rendered { body, failure: None }
    }
}

fn to_json(value: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

struct MutateStep {
    vertex: usize,
    rewritten: Vec<usize>,
    matrix: ExchangeMatrix,
    cmatrix: CMatrix,
    diagram: OrientedDiagram,
}

pub fn mutate(n: usize, seq: &[usize], format: Format) -> Result<Rendered> {
    for &v in seq {
        if v == 0 || v > n {
            bail!("mutation vertex {v} is outside 1..={n}");
        }
    }
    let mut matrix = ExchangeMatrix::framed(n)?;
    let mut diagram = diagram_of_cmatrix(&matrix.c_matrix()?)?;
    let initial = (matrix.clone(), matrix.c_matrix()?, diagram.clone());
    let mut steps = Vec::new();
    for &v in seq {
        let k = v - 1;
        let sign_k = diagram.chords()[k].sign();
        let rewritten: Vec<usize> = (0..n)
            .filter(|&j| {
                j != k && matrix.entry(k, j) != 0 && Sign::of(matrix.entry(k, j)) != Some(sign_k)
            })
            .map(|j| j + 1)
            .collect();
        diagram = mutate_diagram(&diagram, &matrix, k)?;
        matrix = matrix.mutate(k)?;
        steps.push(MutateStep {
            vertex: v,
            rewritten,
            matrix: matrix.clone(),
            cmatrix: matrix.c_matrix()?,
            diagram: diagram.clone(),
        });
    }
    match format {
        Format::Json => {
            let steps_json: Vec<Value> = steps
                .iter()
                .map(|s| {
                    json!({
                        "vertex": s.vertex,
                        "rewritten_rows": s.rewritten,
                        "reversed_row": s.vertex,
                        "matrix": s.matrix,
                        "cmatrix": s.cmatrix,
                        "diagram": s.diagram,
                    })
                })
                .collect();
            let value = json!({
                "n": n,
                "initial": {
                    "matrix": initial.0,
                    "cmatrix": initial.1,
                    "diagram": initial.2,
                },
                "steps": steps_json,
            });
            Ok(Rendered::ok(to_json(&value)?))
        }
        Format::Text => {
            let seq_text: Vec<String> = seq.iter().map(usize::to_string).collect();
            let mut out = format!("rank {n}, mutation sequence {}\n", seq_text.join(","));
            let mut block = |title: &str, m: &ExchangeMatrix, c: &CMatrix, d: &OrientedDiagram| {
                let _ = write!(
                    out,
                    "\n{title}\nB:\n{}C:\n{}diagram: {}\n",
                    render::matrix_block(m.rows()),
                    render::matrix_block(c.rows()),
                    render::oriented_diagram_text(d)
                );
            };
            block("start", &initial.0, &initial.1, &initial.2);
            for (t, s) in steps.iter().enumerate() {
                let moved = if s.rewritten.is_empty() {
                    "rewrote no rows".to_string()
                } else {
                    let rows: Vec<String> = s.rewritten.iter().map(usize::to_string).collect();
                    format!("rewrote rows {}", rows.join(", "))
                };
                let title = format!(
                    "step {}: mutate at {} ({moved}; reversed row {})",
                    t + 1,
                    s.vertex,
                    s.vertex
                );
                block(&title, &s.matrix, &s.cmatrix, &s.diagram);
            }
            Ok(Rendered::ok(out))
        }
        Format::Dot => {
            let last = steps.last().map_or(&initial.2, |s| &s.diagram);
            Ok(Rendered::ok(render::dot_oriented(last, "diagram")))
        }
    }
}

pub fn enumerate(
    n: usize,
    what: EnumWhat,
    count_only: bool,
    bound: usize,
    format: Format,
) -> Result<Rendered> {
    if n == 0 {
        bail!("rank must be at least 1");
    }
    if n > bound {
        bail!("rank {n} exceeds the search bound {bound}; raise --bound or CESWB_BOUND");
    }
    let (name, items, texts, dots) = match what {
        EnumWhat::Ces => {
            let seqs = enumerate_ces(n, bound)?;
            let items: Vec<Value> = seqs.iter().map(|s| json!(s)).collect();
            let texts = seqs.iter().map(|s| render::sequence_text(s)).collect();
            ("ces", items, texts, None)
        }
        EnumWhat::Cmatrices => {
            let cs = ceswb_core::exchange::enumerate_cmatrices(n, bound)?;
            let items: Vec<Value> = cs.iter().map(|c| json!(c)).collect();
            let texts = cs
                .iter()
                .map(|c| {
                    c.rows()
                        .iter()
                        .map(|row| {
                            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                            format!("[{}]", cells.join(" "))
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            ("cmatrices", items, texts, None)
        }
        EnumWhat::Diagrams => {
            let ds = enumerate_spanning_diagrams(n + 1)?;
            let items: Vec<Value> = ds.iter().map(|d| json!(d)).collect();
            let texts = ds.iter().map(render::diagram_text).collect();
            let dots: Vec<String> = ds
                .iter()
                .enumerate()
                .map(|(t, d)| render::dot_diagram(d, &format!("d{t}")))
                .collect();
            ("diagrams", items, texts, Some(dots))
        }
        EnumWhat::Ncchains => {
            let chains = enumerate_chains(n + 1, n, bound)?;
            let items: Vec<Value> = chains.iter().map(|c| json!(chain_blocks(c))).collect();
            let texts = chains.iter().map(render::chain_text).collect();
            ("ncchains", items, texts, None)
        }
    };
    let texts: Vec<String> = texts;
    if count_only {
        return Ok(Rendered::ok(format!("{}\n", items.len())));
    }
    match format {
        Format::Json => {
            let value = json!({
                "what": name,
                "n": n,
                "count": items.len(),
                "items": items,
            });
            Ok(Rendered::ok(to_json(&value)?))
        }
        Format::Text => {
            let mut out = String::new();
            for line in &texts {
                out.push_str(line);
                out.push('\n');
            }
            let _ = writeln!(out, "count: {}", items.len());
            Ok(Rendered::ok(out))
        }
        Format::Dot => match dots {
            Some(dots) => Ok(Rendered::ok(dots.join("\n"))),
            None => bail!("dot output is only available for diagrams"),
        },
    }
}

pub fn classify(input: &str, format: Format) -> Result<Rendered> {
    let diagram: OrientedDiagram =
        serde_json::from_str(input).context("parsing the oriented diagram")?;
    if !is_cmatrix_diagram(&diagram) {
        let body = match format {
            Format::Json => to_json(&json!({
                "is_cmatrix": false,
                "cmatrix": Value::Null,
                "witness_ces": Value::Null,
            }))?,
            Format::Text => "is_cmatrix: no\n".to_string(),
            Format::Dot => bail!("dot output is not available for classify"),
        };
        return Ok(Rendered::ok(body));
    }
    let cmatrix = cmatrix_of_diagram(&diagram)?;
    let witness = st_witness(&diagram)?;
    let body = match format {
        Format::Json => to_json(&json!({
            "is_cmatrix": true,
            "cmatrix": cmatrix,
            "witness_ces": witness,
        }))?,
        Format::Text => format!(
            "is_cmatrix: yes\ncmatrix:\n{}witness_ces: {}\n",
            render::matrix_block(cmatrix.rows()),
            render::sequence_text(&witness)
        ),
        Format::Dot => bail!("dot output is not available for classify"),
    };
    Ok(Rendered::ok(body))
}

pub fn poset(input: &str, format: Format) -> Result<Rendered> {
    let diagram: ChordDiagram =
        serde_json::from_str(input).context("parsing the chord diagram")?;
    let poset = DiagramPoset::of_diagram(&diagram)?;
    let extensions = poset.linear_extensions();
    match format {
        Format::Json => {
            let covers: Vec<Value> = poset
                .covers()
                .iter()
                .map(|&(lo, hi)| json!([lo, hi]))
                .collect();
            let value = json!({
                "n_points": diagram.n_points(),
                "chords": poset.chords(),
                "covers": covers,
                "extensions": extensions,
                "extension_count": extensions.len(),
            });
            Ok(Rendered::ok(to_json(&value)?))
        }
        Format::Text => {
            let chord_list: Vec<String> = poset
                .chords()
                .iter()
                .map(|&c| render::chord_text(c))
                .collect();
            let mut out = format!(
                "points: {}\nchords: {}\ncovers:\n",
                diagram.n_points(),
                chord_list.join(" ")
            );
            for (lo, hi) in poset.covers() {
                let _ = writeln!(out, "  {} < {}", chord_list[lo], chord_list[hi]);
            }
            let _ = writeln!(out, "extensions ({}):", extensions.len());
            for labels in &extensions {
                let cells: Vec<String> = labels.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "  {}", cells.join(" "));
            }
            Ok(Rendered::ok(out))
        }
        Format::Dot => Ok(Rendered::ok(render::dot_poset(&poset))),
    }
}

pub fn perms(input: &str, format: Format) -> Result<Rendered> {
    let cmatrix: CMatrix = serde_json::from_str(input)
        .context("parsing the c-matrix; rows must be nonzero and sign-coherent")?;
    let n = cmatrix.n();
    let diagram = diagram_of_cmatrix(&cmatrix)?;
    if !is_cmatrix_diagram(&diagram) {
        bail!("the rows are sign-coherent but draw a diagram no mutation sequence reaches");
    }
    let unoriented = diagram.unoriented();
    let poset = DiagramPoset::of_diagram(&unoriented)?;
    let row_elements: Vec<usize> = diagram
        .chords()
        .iter()
        .map(|oc| poset.element_of(oc.chord()).unwrap())
        .collect();
    let mut items = Vec::new();
    for labels in poset.linear_extensions() {
        let ranking: Vec<usize> = row_elements.iter().map(|&e| labels[e] - 1).collect();
        let sigma = invert_permutation(&ranking);
        let labeled = LabeledDiagram::new(unoriented.clone(), labels)?;
        let sequence = labeled_to_sequence(&labeled);
        items.push((sigma, sequence));
    }
    match format {
        Format::Json => {
            let listed: Vec<Value> = items
                .iter()
                .map(|(sigma, sequence)| {
                    let images: Vec<usize> = sigma.iter().map(|&x| x + 1).collect();
                    json!({
                        "permutation": images,
                        "cycles": render::cycle_notation(sigma),
                        "sequence": sequence,
                    })
                })
                .collect();
            Ok(Rendered::ok(to_json(&json!({ "n": n, "items": listed }))?))
        }
        Format::Text => {
            let mut out = String::new();
            for (sigma, sequence) in &items {
                let _ = writeln!(
                    out,
                    "sigma {}: {}",
                    render::cycle_notation(sigma),
                    render::sequence_text(sequence)
                );
            }
            Ok(Rendered::ok(out))
        }
        Format::Dot => bail!("dot output is not available for perms"),
    }
}

fn chain_blocks(chain: &NCChain) -> Vec<Vec<Vec<usize>>> {
    chain
        .partitions()
        .iter()
        .map(|p| p.blocks().to_vec())
        .collect()
}

fn chain_from_blocks(block_lists: Vec<Vec<Vec<usize>>>) -> Result<NCChain> {
    let partitions = block_lists
        .into_iter()
        .map(|blocks| {
            let m = blocks.iter().map(Vec::len).sum();
            Ok(NCPartition::new(m, blocks)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NCChain::new(partitions)?)
}

pub fn ncchains(
    n: Option<usize>,
    input: Option<&str>,
    count_only: bool,
    bound: usize,
    format: Format,
) -> Result<Rendered> {
    match (n, input) {
        (Some(_), Some(_)) => bail!("give either --n or --input, not both"),
        (None, None) => bail!("either --n or --input is required"),
        (Some(n), None) => {
            if n == 0 {
                bail!("rank must be at least 1");
            }
            let chains = enumerate_chains(n + 1, n, bound)?;
            if count_only {
                return Ok(Rendered::ok(format!("{}\n", chains.len())));
            }
            match format {
                Format::Json => {
                    let items: Vec<Value> =
                        chains.iter().map(|c| json!(chain_blocks(c))).collect();
                    let value = json!({
                        "m": n + 1,
                        "count": chains.len(),
                        "items": items,
                    });
                    Ok(Rendered::ok(to_json(&value)?))
                }
                Format::Text => {
                    let mut out = String::new();
                    for chain in &chains {
                        out.push_str(&render::chain_text(chain));
                        out.push('\n');
                    }
                    let _ = writeln!(out, "count: {}", chains.len());
                    Ok(Rendered::ok(out))
                }
                Format::Dot => bail!("dot output is not available for chain listings"),
            }
        }
        (None, Some(text)) => {
            let value: Value = serde_json::from_str(text).context("parsing the input JSON")?;
            match value {
                Value::Array(_) => {
                    let block_lists: Vec<Vec<Vec<usize>>> = serde_json::from_value(value)
                        .context("parsing the chain as a list of partitions, each a list of blocks")?;
                    let chain = chain_from_blocks(block_lists)?;
                    let labeled = labeled_diagram_of_chain(&chain)?;
                    let body = match format {
                        Format::Json => to_json(&json!(labeled))?,
                        Format::Text => render::labeled_text(&labeled) + "\n",
                        Format::Dot => render::dot_labeled(&labeled),
                    };
                    Ok(Rendered::ok(body))
                }
                Value::Object(_) => {
                    let labeled: LabeledDiagram = serde_json::from_value(value)
                        .context("parsing the labeled diagram")?;
                    let chain = chain_of_labeled_diagram(&labeled)?;
                    let body = match format {
                        Format::Json => to_json(&json!(chain_blocks(&chain)))?,
                        Format::Text => render::chain_text(&chain) + "\n",
                        Format::Dot => bail!("dot output is not available for chains"),
                    };
                    Ok(Rendered::ok(body))
                }
                _ => bail!("the input must be a chain (JSON array) or a labeled diagram (JSON object)"),
            }
        }
    }
}

pub fn trees(n: usize, format: Format) -> Result<Rendered> {
    if n == 0 {
        bail!("rank must be at least 1");
    }
    let by_trees = small_counts(labeled_tree_leaf_distribution(n + 1)?)?;
    let by_diagrams = small_counts(leaf_distribution_via_diagrams(n)?)?;
    let matches = by_trees == by_diagrams;
    let body = match format {
        Format::Json => to_json(&json!({
            "m": n + 1,
            "by_trees": by_trees,
            "by_diagrams": by_diagrams,
            "match": matches,
        }))?,
        Format::Text => {
            let keys: BTreeSet<usize> = by_trees.keys().chain(by_diagrams.keys()).copied().collect();
            let mut out = String::new();
            for leaves in keys {
                let _ = writeln!(
                    out,
                    "leaves {leaves}: trees {}, diagrams {}",
                    by_trees.get(&leaves).copied().unwrap_or(0),
                    by_diagrams.get(&leaves).copied().unwrap_or(0)
                );
            }
            let _ = writeln!(out, "match: {}", if matches { "yes" } else { "no" });
            out
        }
        Format::Dot => bail!("dot output is not available for trees"),
    };
    let failure = (!matches).then(|| "the two leaf distributions disagree".to_string());
    Ok(Rendered { body, failure })
}

fn small_counts(map: BTreeMap<usize, u128>) -> Result<BTreeMap<usize, u64>> {
    map.into_iter()
        .map(|(k, v)| Ok((k, u64::try_from(v).context("count does not fit in 64 bits")?)))
        .collect()
}

pub fn verify(n: usize, bound: usize, format: Format) -> Result<Rendered> {
    if n == 0 {
        bail!("rank must be at least 1");
    }
    if n > bound {
        bail!("rank {n} exceeds the search bound {bound}; raise --bound or CESWB_BOUND");
    }
    let seeds = enumerate_seeds(n, bound)?;
    let results: Vec<(&str, Result<String>)> = vec![
        ("commuting-square", gate_commuting_square(&seeds, n)),
        ("classification", gate_classification(&seeds, n, bound)),
        ("sequence-diagram-bijection", gate_bijection(n, bound)),
        ("cayley-identity", gate_cayley(n, bound)),
        ("chain-round-trip", gate_chain_round_trip(n, bound)),
        ("tree-distribution", gate_tree_distribution(n)),
        ("arrow-coupling", gate_arrow_coupling(&seeds)),
        ("sign-coherence", gate_sign_coherence(&seeds)),
        ("reddening-terminality", gate_reddening(&seeds)),
    ];
    let first_failure = results
        .iter()
        .find(|(_, r)| r.is_err())
        .map(|(name, _)| format!("gate {name} failed"));
    let body = match format {
        Format::Json => {
            let gates: Vec<Value> = results
                .iter()
                .map(|(name, r)| match r {
                    Ok(detail) => json!({ "name": name, "pass": true, "detail": detail }),
                    Err(e) => json!({ "name": name, "pass": false, "detail": e.to_string() }),
                })
                .collect();
            to_json(&json!({
                "n": n,
                "gates": gates,
                "pass": first_failure.is_none(),
            }))?
        }
        Format::Text => {
            let mut out = format!("verification at rank {n}\n");
            for (name, r) in &results {
                match r {
                    Ok(detail) => {
                        let _ = writeln!(out, "gate {name}: pass ({detail})");
                    }
                    Err(e) => {
                        let _ = writeln!(out, "gate {name}: FAIL ({e})");
                    }
                }
            }
            let verdict = if first_failure.is_none() {
                "all gates passed"
            } else {
                "verification failed"
            };
            let _ = writeln!(out, "{verdict}");
            out
        }
        Format::Dot => bail!("dot output is not available for verify"),
    };
    Ok(Rendered { body, failure: first_failure })
}

/// Diagram mutation agrees with matrix mutation at every vertex of every
/// reachable seed.
fn gate_commuting_square(seeds: &[Seed], n: usize) -> Result<String> {
    let squares: Vec<usize> = seeds
        .par_iter()
        .map(|seed| -> Result<usize> {
            let d = diagram_of_cmatrix(&seed.matrix.c_matrix()?)?;
            for k in 0..n {
                let via_diagram = mutate_diagram(&d, &seed.matrix, k)?;
                let via_matrix = diagram_of_cmatrix(&seed.matrix.mutate(k)?.c_matrix()?)?;
                if via_diagram != via_matrix {
                    bail!("the two mutation routes disagree at vertex {}", k + 1);
                }
            }
            Ok(n)
        })
        .collect::<Result<_>>()?;
    Ok(format!(
        "{} squares over {} seeds",
        squares.iter().sum::<usize>(),
        seeds.len()
    ))
}

/// The pairwise sign predicate accepts exactly the diagrams that mutation
/// search reaches.
fn gate_classification(seeds: &[Seed], n: usize, bound: usize) -> Result<String> {
    let from_predicate: BTreeSet<OrientedDiagram> = enumerate_cmatrix_diagrams(n, bound)?
        .into_iter()
        .map(|d| d.canonical())
        .collect();
    let from_search: BTreeSet<OrientedDiagram> = seeds
        .iter()
        .map(|seed| Ok(diagram_of_cmatrix(&seed.matrix.c_matrix()?)?.canonical()))
        .collect::<Result<_>>()?;
    if from_predicate != from_search {
        bail!(
            "predicate accepts {} diagrams but search reaches {}",
            from_predicate.len(),
            from_search.len()
        );
    }
    Ok(format!("{} oriented diagrams from both routes", from_search.len()))
}

/// Every exceptional sequence round-trips through a good labeled diagram,
/// and the good labelings count them exactly.
fn gate_bijection(n: usize, bound: usize) -> Result<String> {
    let sequences = enumerate_ces(n, bound)?;
    sequences.par_iter().try_for_each(|seq| -> Result<()> {
        let labeled = sequence_to_labeled(n, seq)?;
        if !labeled.is_good() {
            bail!("a sequence maps to a labeling that is not good");
        }
        if labeled_to_sequence(&labeled) != *seq {
            bail!("a sequence does not survive the diagram round trip");
        }
        Ok(())
    })?;
    let labelings: usize = enumerate_spanning_diagrams(n + 1)?
        .par_iter()
        .map(|d| good_labelings(d).len())
        .sum();
    if labelings != sequences.len() {
        bail!(
            "{} sequences against {} good labelings",
            sequences.len(),
            labelings
        );
    }
    Ok(format!("{} sequences round-trip", sequences.len()))
}

/// Linear extensions summed over spanning diagrams hit the tree count
/// (n+1)^(n-1), as do the maximal partition chains.
fn gate_cayley(n: usize, bound: usize) -> Result<String> {
    let mut extensions: u128 = 0;
    for diagram in enumerate_spanning_diagrams(n + 1)? {
        extensions += DiagramPoset::of_diagram(&diagram)?.count_linear_extensions()?;
    }
    let expected = u128::pow(n as u128 + 1, n as u32 - 1);
    let chains = count_maximal_chains(n + 1, bound)?;
    if extensions != expected || chains != expected {
        bail!("{extensions} extensions, {chains} chains, expected {expected}");
    }
    Ok(format!("{extensions} extensions = {chains} chains = {expected}"))
}

/// Chains and good labeled diagrams convert into each other bijectively at
/// every chain length.
fn gate_chain_round_trip(n: usize, bound: usize) -> Result<String> {
    let mut total = 0usize;
    for k in 0..=n {
        let chains = enumerate_chains(n + 1, k, bound)?;
        for chain in &chains {
            let labeled = labeled_diagram_of_chain(chain)?;
            if chain_of_labeled_diagram(&labeled)? != *chain {
                bail!("a chain of length {k} does not survive the round trip");
            }
        }
        let mut labeled_count = 0usize;
        for diagram in enumerate_diagrams(n + 1, k)? {
            for labeled in good_labelings(&diagram) {
                let chain = chain_of_labeled_diagram(&labeled)?;
                if labeled_diagram_of_chain(&chain)? != labeled {
                    bail!("a labeled diagram with {k} chords does not survive the round trip");
                }
                labeled_count += 1;
            }
        }
        if labeled_count != chains.len() {
            bail!(
                "length {k}: {} chains against {labeled_count} labeled diagrams",
                chains.len()
            );
        }
        total += chains.len();
    }
    Ok(format!("{total} chains round-trip across lengths 0..={n}"))
}

/// Leaf counts of labeled trees match extension counts of short-chord
/// classes of spanning diagrams.
fn gate_tree_distribution(n: usize) -> Result<String> {
    let by_trees = labeled_tree_leaf_distribution(n + 1)?;
    let by_diagrams = leaf_distribution_via_diagrams(n)?;
    if by_trees != by_diagrams {
        bail!("the two leaf distributions disagree");
    }
    let total: u128 = by_trees.values().sum();
    Ok(format!("distribution over {total} trees matches"))
}

/// Interacting matrix rows always draw chords that share an endpoint, and
/// distinct c-matrices draw distinct diagrams.
fn gate_arrow_coupling(seeds: &[Seed]) -> Result<String> {
    let mut pairs = 0usize;
    let mut assignment: BTreeMap<OrientedDiagram, CMatrix> = BTreeMap::new();
    for seed in seeds {
        let c = seed.matrix.c_matrix()?;
        let d = diagram_of_cmatrix(&c)?;
        let n = d.len();
        for k in 0..n {
            for j in k + 1..n {
                if seed.matrix.entry(k, j) == 0 {
                    continue;
                }
                let (ck, cj) = (d.chords()[k].chord(), d.chords()[j].chord());
                if !(ck.has_endpoint(cj.a()) || ck.has_endpoint(cj.b())) {
                    bail!("rows {} and {} interact but their chords are disjoint", k + 1, j + 1);
                }
                pairs += 1;
            }
        }
        if let Some(previous) = assignment.insert(d.canonical(), c.canonical()) {
            if previous != c.canonical() {
                bail!("two different c-matrices draw the same diagram");
            }
        }
    }
    Ok(format!("{pairs} interacting pairs share endpoints; diagram map injective"))
}

/// Every reachable c-matrix has nonzero rows of a single sign each.
fn gate_sign_coherence(seeds: &[Seed]) -> Result<String> {
    for seed in seeds {
        seed.matrix.c_matrix()?;
    }
    Ok(format!("{} c-matrices sign-coherent", seeds.len()))
}

/// Seeds without green vertices carry the negated identity c-matrix up to
/// row order, and at least one such seed exists.
fn gate_reddening(seeds: &[Seed]) -> Result<String> {
    let mut all_red = 0usize;
    for seed in seeds {
        if !seed.matrix.green_vertices().is_empty() {
            continue;
        }
        all_red += 1;
        if !seed.matrix.c_matrix()?.is_negative_identity_up_to_rows() {
            bail!("an all-red seed does not sit at the negated identity");
        }
    }
    if all_red == 0 {
        bail!("no all-red seed reached");
    }
    Ok(format!("{all_red} all-red seed(s) at the negated identity"))
}

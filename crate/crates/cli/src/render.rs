//! Text and DOT rendering helpers shared by the subcommands.

use std::fmt::Write;

use ceswb_core::chords::{Chord, ChordDiagram, LabeledDiagram};
use ceswb_core::cmatdiag::{OrientedChord, OrientedDiagram};
use ceswb_core::ncpart::{NCChain, NCPartition};
use ceswb_core::posets::DiagramPoset;
use ceswb_core::reptheory::IntervalRep;

/// Integer rows as an indented, right-aligned block.
pub fn matrix_block(rows: &[Vec<i64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        out.push(' ');
        for e in row {
            let _ = write!(out, " {e:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn interval_text(rep: &IntervalRep) -> String {
    format!("X({},{})", rep.i(), rep.j())
}

pub fn sequence_text(seq: &[IntervalRep]) -> String {
    seq.iter()
        .map(interval_text)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn chord_text(c: Chord) -> String {
    format!("c({},{})", c.a(), c.b())
}

pub fn oriented_chord_text(c: OrientedChord) -> String {
    format!("{}->{}", c.tail(), c.head())
}

/// Chords of an oriented diagram with their 1-based row numbers.
pub fn oriented_diagram_text(d: &OrientedDiagram) -> String {
    d.chords()
        .iter()
        .enumerate()
        .map(|(t, c)| format!("{}: {}", t + 1, oriented_chord_text(*c)))
        .collect::<Vec<_>>()
        .join("  ")
}

pub fn diagram_text(d: &ChordDiagram) -> String {
    d.chords()
        .iter()
        .map(|&c| chord_text(c))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Chords of a labeled diagram listed in label order.
pub fn labeled_text(l: &LabeledDiagram) -> String {
    (1..=l.diagram().len())
        .map(|label| {
            let chord = l.chord_with_label(label).unwrap();
            format!("{label}: {}", chord_text(chord))
        })
        .collect::<Vec<_>>()
        .join("  ")
}

pub fn partition_text(p: &NCPartition) -> String {
    let mut out = String::new();
    for block in p.blocks() {
        let elems: Vec<String> = block.iter().map(usize::to_string).collect();
        let _ = write!(out, "{{{}}}", elems.join(","));
    }
    out
}

pub fn chain_text(chain: &NCChain) -> String {
    chain
        .partitions()
        .iter()
        .map(partition_text)
        .collect::<Vec<_>>()
        .join(" -> ")
}

/// Cycle notation for a 0-based permutation, printed 1-based with each
/// cycle led by its smallest element; fixed points are dropped and the
/// identity prints as "()".
pub fn cycle_notation(perm: &[usize]) -> String {
    let wide = perm.len() > 9;
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = perm[start];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = perm[cur];
        }
        out.push('(');
        for (t, v) in cycle.iter().enumerate() {
            if t > 0 && wide {
                out.push(' ');
            }
            let _ = write!(out, "{}", v + 1);
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Disk drawing with point p fixed at angle 90 - 360p/m degrees, so point 0
/// sits on top and the numbering runs clockwise.
fn dot_disk(name: &str, directed: bool, m: usize, edges: &[(usize, usize, Option<usize>)]) -> String {
    let kind = if directed { "digraph" } else { "graph" };
    let arrow = if directed { "->" } else { "--" };
    let mut out = format!("{kind} {name} {{\n  layout = neato;\n  node [shape = circle];\n");
    for p in 0..m {
        let theta = (90.0 - 360.0 * p as f64 / m as f64).to_radians();
        let _ = writeln!(
            out,
            "  p{p} [label = \"{p}\", pos = \"{:.3},{:.3}!\"];",
            2.0 * theta.cos(),
            2.0 * theta.sin()
        );
    }
    for &(a, b, label) in edges {
        match label {
            Some(l) => {
                let _ = writeln!(out, "  p{a} {arrow} p{b} [label = \"{l}\"];");
            }
            None => {
                let _ = writeln!(out, "  p{a} {arrow} p{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn dot_oriented(d: &OrientedDiagram, name: &str) -> String {
    let edges: Vec<(usize, usize, Option<usize>)> = d
        .chords()
        .iter()
        .map(|c| (c.tail(), c.head(), None))
        .collect();
    dot_disk(name, true, d.n_points(), &edges)
}

pub fn dot_diagram(d: &ChordDiagram, name: &str) -> String {
    let edges: Vec<(usize, usize, Option<usize>)> = d
        .chords()
        .iter()
        .map(|c| (c.a(), c.b(), None))
        .collect();
    dot_disk(name, false, d.n_points(), &edges)
}

pub fn dot_labeled(l: &LabeledDiagram) -> String {
    let edges: Vec<(usize, usize, Option<usize>)> = l
        .diagram()
        .chords()
        .iter()
        .zip(l.labels())
        .map(|(c, &label)| (c.a(), c.b(), Some(label)))
        .collect();
    dot_disk("diagram", false, l.diagram().n_points(), &edges)
}

/// Hasse diagram of a chord poset, drawn bottom to top.
pub fn dot_poset(poset: &DiagramPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir = BT;\n");
    for (e, &chord) in poset.chords().iter().enumerate() {
        let _ = writeln!(out, "  e{e} [label = \"{}\"];", chord_text(chord));
    }
    for (lo, hi) in poset.covers() {
        let _ = writeln!(out, "  e{lo} -> e{hi};");
    }
    out.push_str("}\n");
    out
}

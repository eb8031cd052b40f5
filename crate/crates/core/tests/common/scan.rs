//! Test-side re-derivations of the rotation set analysis, written straight
//! from the set definitions with plain positional loops, plus a corpus
//! builder for greedy-maximal paths over the default suite. Shared by the
//! core machinery tests and the acceptance suite.

use std::collections::BTreeSet;

use rainbow_core::constructive::extend::greedy_extend;
use rainbow_core::generators::gen_suite;
use rainbow_core::{EdgeColoredGraph, RainbowPath};

/// The sets of the rotation analysis, recomputed independently. Field names
/// follow the module under test.
#[derive(Debug, PartialEq, Eq)]
pub struct LiteralSets {
    pub t_x: BTreeSet<usize>,
    pub t_y: BTreeSet<usize>,
    pub m_x: BTreeSet<usize>,
    pub s_y: BTreeSet<usize>,
    pub a: BTreeSet<usize>,
    pub a1: BTreeSet<usize>,
    pub a2: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
}

// Positional loops are the point here: the scanner must follow the
// subscripted set definitions verbatim instead of sharing iterator shapes
// with the code under test.
#[allow(clippy::needless_range_loop)]
pub fn literal_scan(g: &EdgeColoredGraph, p: &RainbowPath) -> LiteralSets {
    let verts = p.vertices();
    let t = p.len();
    let x = verts[0];
    let y = verts[t];
    let used: BTreeSet<usize> = p.colors().iter().copied().collect();
    let fresh = |c: usize| !used.contains(&c);

    // Interior vertices u_i (2 <= i <= t-1) joined to the front endpoint by
    // a color absent from the path.
    let mut t_x = BTreeSet::new();
    for i in 2..t {
        if let Some(c) = g.edge_color(x, verts[i]) {
            if fresh(c) {
                t_x.insert(verts[i]);
            }
        }
    }

    // Vertices u_i (1 <= i <= t-2) joined to the back endpoint by a color
    // absent from the path.
    let mut t_y = BTreeSet::new();
    for i in 1..t.saturating_sub(1) {
        if let Some(c) = g.edge_color(y, verts[i]) {
            if fresh(c) {
                t_y.insert(verts[i]);
            }
        }
    }

    // Path predecessors of t_x members.
    let mut m_x = BTreeSet::new();
    for i in 2..t {
        if t_x.contains(&verts[i]) {
            m_x.insert(verts[i - 1]);
        }
    }

    // On-path vertices joined to the back endpoint by a color the path
    // already uses, excluding the endpoint itself, its path neighbor, and
    // m_x members.
    let mut s_y = BTreeSet::new();
    for (i, &v) in verts.iter().enumerate() {
        if v == y || (t >= 1 && i == t - 1) || m_x.contains(&v) {
            continue;
        }
        if let Some(c) = g.edge_color(y, v) {
            if !fresh(c) {
                s_y.insert(v);
            }
        }
    }

    // Partition of m_x ∩ t_y by whether the path color leaving u_i appears
    // anywhere at the back endpoint, and if so whether its witness lies in
    // m_x. The witness of a color at y is y's smallest neighbor joined by
    // exactly that color.
    let mut a = BTreeSet::new();
    let mut a1 = BTreeSet::new();
    let mut a2 = BTreeSet::new();
    let mut b = BTreeSet::new();
    for i in 1..t.saturating_sub(1) {
        let v = verts[i];
        if !(m_x.contains(&v) && t_y.contains(&v)) {
            continue;
        }
        let path_color = g
            .edge_color(verts[i], verts[i + 1])
            .expect("consecutive path vertices are adjacent");
        let witness = g
            .neighbors(y)
            .iter()
            .find(|(_, c)| *c == path_color)
            .map(|(nb, _)| *nb);
        match witness {
            None => {
                b.insert(v);
            }
            Some(w) if m_x.contains(&w) => {
                a.insert(v);
                a1.insert(v);
            }
            Some(_) => {
                a.insert(v);
                a2.insert(v);
            }
        }
    }

    LiteralSets {
        t_x,
        t_y,
        m_x,
        s_y,
        a,
        a1,
        a2,
        b,
    }
}

/// `count` distinct greedy-maximal paths over the default suite, each tagged
/// with the graph it lives in.
pub fn maximal_path_corpus(count: usize) -> Vec<(EdgeColoredGraph, RainbowPath)> {
    let suite = gen_suite("sweep-default", 0).expect("known profile");
    let mut corpus = Vec::new();
    let mut seen = BTreeSet::new();
    'outer: for inst in &suite {
        for v in 0..inst.graph.num_vertices() {
            let p = greedy_extend(&inst.graph, &RainbowPath::singleton(v))
                .expect("singleton paths are valid");
            if seen.insert((inst.index, p.vertices().to_vec())) {
                corpus.push((inst.graph.clone(), p));
                if corpus.len() == count {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(corpus.len(), count, "suite is large enough for the corpus");
    corpus
}

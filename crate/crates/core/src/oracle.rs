//! Brute-force walk enumeration by depth-first search. Shares no code with
//! the algebraic side and serves as its ground truth.

use crate::blade::Blade;
use crate::census::{CensusKind, WalkCensus};
use crate::graph::Graph;

fn bit(v: usize) -> u64 {
    1 << (v - 1)
}

/// Extends self-avoiding walks from `cur`, calling `f(end, visited, len)`
/// for every walk of `1..=max_len` edges. `visited` holds every vertex
/// entered so far including the start.
fn extend(g: &Graph, cur: usize, visited: u64, len: usize, max_len: usize, f: &mut impl FnMut(usize, u64, usize)) {
    if len == max_len {
        return;
    }
    for w in g.neighbors(cur) {
        if visited & bit(w) == 0 {
            let vis = visited | bit(w);
            f(w, vis, len + 1);
            extend(g, w, vis, len + 1, max_len, f);
        }
    }
}

/// `k`-edge paths `i → j`, keyed without `i`.
pub fn paths(g: &Graph, i: usize, j: usize, k: usize) -> WalkCensus {
    let mut c = WalkCensus::new(CensusKind::Paths, i, j);
    extend(g, i, bit(i), 0, k, &mut |end, vis, len| {
        if end == j && len == k {
            c.add(Blade(vis & !bit(i)), 1);
        }
    });
    c
}

/// Paths `i → j` of every length.
pub fn all_paths(g: &Graph, i: usize, j: usize) -> WalkCensus {
    let mut c = WalkCensus::new(CensusKind::Paths, i, j);
    extend(g, i, bit(i), 0, g.m(), &mut |end, vis, _| {
        if end == j {
            c.add(Blade(vis & !bit(i)), 1);
        }
    });
    c
}

/// Closed `k`-walks at `v` repeating only `v`; directions counted
/// separately and back-and-forth 2-walks included.
pub fn cycles(g: &Graph, v: usize, k: usize) -> WalkCensus {
    let mut c = WalkCensus::new(CensusKind::Cycles, v, v);
    if k < 2 {
        return c;
    }
    extend(g, v, bit(v), 0, k - 1, &mut |end, vis, len| {
        if len == k - 1 && g.has_edge(end, v) {
            c.add(Blade(vis), 1);
        }
    });
    c
}

/// Cycles at `v` of every length.
pub fn all_cycles(g: &Graph, v: usize) -> WalkCensus {
    let mut c = WalkCensus::new(CensusKind::Cycles, v, v);
    extend(g, v, bit(v), 0, g.m(), &mut |end, vis, _| {
        if g.has_edge(end, v) {
            c.add(Blade(vis), 1);
        }
    });
    c
}

/// Walks `i → j` that return to `i` exactly once and otherwise never repeat
/// a vertex.
pub fn pwics(g: &Graph, i: usize, j: usize) -> WalkCensus {
    let mut c = WalkCensus::new(CensusKind::Pwics, i, j);
    if i == j {
        return c;
    }
    extend(g, i, bit(i), 0, g.m(), &mut |end, loop_vis, _| {
        if loop_vis & bit(j) != 0 || !g.has_edge(end, i) {
            return;
        }
        extend(g, i, loop_vis, 0, g.m(), &mut |tail, vis, _| {
            if tail == j {
                c.add(Blade(vis), 1);
            }
        });
    });
    c
}

/// Paths together with paths with an initial cycle, `i → j`.
pub fn paths_and_pwics(g: &Graph, i: usize, j: usize) -> WalkCensus {
    all_paths(g, i, j).merged(&pwics(g, i, j), CensusKind::PathsAndPwics)
}

//! Iterated degree refinement (1-dimensional Weisfeiler-Leman) with canonical
//! color names.
//!
//! Colors are renamed after every round by the rank of the vertex signature
//! `(old color, sorted neighbor colors)` among all signatures. The names are
//! therefore invariant under relabeling: if `p` maps `g` onto `h` and the
//! initial colorings agree along `p`, the refined colorings agree along `p`.

use crate::graph::Graph;

/// Initial coloring with `fixed[i]` colored `i` and every other vertex
/// colored `fixed.len()`.
pub(crate) fn individualized(n: usize, fixed: &[usize]) -> Vec<u32> {
    let mut colors = vec![fixed.len() as u32; n];
    for (i, &v) in fixed.iter().enumerate() {
        colors[v] = i as u32;
    }
    colors
}

/// Refines `colors` to the coarsest stable partition finer than it. Returns
/// the number of distinct colors, which are then exactly `0..count`.
pub(crate) fn refine(adj: &[u64], colors: &mut [u32]) -> usize {
    let n = adj.len();
    let initial = colors.to_vec();
    let mut cells = rename(colors, |v| vec![initial[v]]);
    loop {
        let snapshot = colors.to_vec();
        let next = rename(colors, |v| {
            let mut sig = Vec::with_capacity(1 + adj[v].count_ones() as usize);
            sig.push(snapshot[v]);
            let start = sig.len();
            sig.extend(Graph::iter_mask(adj[v]).map(|u| snapshot[u]));
            sig[start..].sort_unstable();
            sig
        });
        if next == cells || next == n {
            return next;
        }
        cells = next;
    }
}

fn rename(colors: &mut [u32], signature: impl Fn(usize) -> Vec<u32>) -> usize {
    let n = colors.len();
    let sigs: Vec<Vec<u32>> = (0..n).map(&signature).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    let mut color = 0u32;
    for (k, &v) in order.iter().enumerate() {
        if k > 0 && sigs[v] != sigs[order[k - 1]] {
            color += 1;
        }
        colors[v] = color;
    }
    color as usize + 1
}

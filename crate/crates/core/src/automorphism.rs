//! Automorphism group order and isomorphism search.
//!
//! Both rest on the same individualization-refinement backtracking: vertices
//! fixed pairwise in the source and target are individualized, both sides are
//! refined, and a mapping is only ever proposed between vertices of equal
//! refined color. The group order is the product of orbit lengths along a
//! stabilizer chain.

use crate::error::Result;
use crate::graph::{bit, Graph};
use crate::limits::{self, Limits};
use crate::refine::{individualized, refine};

/// `|Aut(g)|`.
pub fn automorphism_count(g: &Graph) -> Result<u128> {
    automorphism_count_with_limit(g, Limits::DEFAULT.automorphism)
}

pub fn automorphism_count_with_limit(g: &Graph, limit: usize) -> Result<u128> {
    limits::check(
        "automorphism count",
        "--max-automorphism",
        g.order(),
        limit,
        Limits::HARD.automorphism,
    )?;
    let n = g.order();
    let adj = g.masks();
    let mut fixed: Vec<usize> = Vec::new();
    let mut total: u128 = 1;
    loop {
        let mut colors = individualized(n, &fixed);
        if refine(adj, &mut colors) == n {
            return Ok(total);
        }
        let (cell, v) = pick_cell(&colors);
        let mut orbit = 1u128;
        for w in (0..n).filter(|&w| w != v && colors[w] == cell) {
            let mut src = fixed.clone();
            let mut dst = fixed.clone();
            src.push(v);
            dst.push(w);
            if extend(adj, adj, &mut src, &mut dst, &mut |_| true) {
                orbit += 1;
            }
        }
        total *= orbit;
        fixed.push(v);
    }
}

/// Every automorphism of `g`, as images `p[v]`. Intended for small graphs:
/// the result has `|Aut(g)|` entries.
pub(crate) fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.masks();
    let mut out = Vec::new();
    extend(adj, adj, &mut Vec::new(), &mut Vec::new(), &mut |p| {
        out.push(p.to_vec());
        false
    });
    out
}

/// Some isomorphism `p` with `h = g` relabeled by `p`, if one exists.
pub(crate) fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let mut found = None;
    extend(
        g.masks(),
        h.masks(),
        &mut Vec::new(),
        &mut Vec::new(),
        &mut |p| {
            found = Some(p.to_vec());
            true
        },
    );
    found
}

/// Smallest non-singleton color class, and its first vertex.
fn pick_cell(colors: &[u32]) -> (u32, usize) {
    let mut sizes = vec![0usize; colors.len()];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let cell = (0..sizes.len())
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("coloring is not discrete") as u32;
    let v = colors
        .iter()
        .position(|&c| c == cell)
        .expect("cell is nonempty");
    (cell, v)
}

/// Searches bijections `p` from `src_adj` to `dst_adj` with `p[src[i]] =
/// dst[i]` that preserve adjacency. `visit` is called on each one found and
/// returns true to stop. Returns true iff stopped by `visit`.
fn extend(
    src_adj: &[u64],
    dst_adj: &[u64],
    src: &mut Vec<usize>,
    dst: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = src_adj.len();
    let mut a = individualized(n, src);
    let mut b = individualized(n, dst);
    let cells = refine(src_adj, &mut a);
    if refine(dst_adj, &mut b) != cells {
        return false;
    }
    let mut ha = a.clone();
    let mut hb = b.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return false;
    }

    if cells == n {
        let mut image = vec![0usize; n];
        let mut at_color = vec![0usize; n];
        for w in 0..n {
            at_color[b[w] as usize] = w;
        }
        for v in 0..n {
            image[v] = at_color[a[v] as usize];
        }
        let preserves = (0..n).all(|v| {
            let mapped = Graph::iter_mask(src_adj[v]).fold(0u64, |m, u| m | bit(image[u]));
            mapped == dst_adj[image[v]]
        });
        return preserves && visit(&image);
    }

    let (cell, v) = pick_cell(&a);
    for w in (0..n).filter(|&w| b[w] == cell) {
        src.push(v);
        dst.push(w);
        let stop = extend(src_adj, dst_adj, src, dst, visit);
        src.pop();
        dst.pop();
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilyKind, FamilySpec};
    use crate::graph6::parse_graph6;

    fn fam(kind: FamilyKind, t: usize) -> Graph {
        make_family(FamilySpec::new(kind, t)).unwrap()
    }

    #[test]
    fn small_families() {
        assert_eq!(
            automorphism_count(&fam(FamilyKind::Complete, 4)).unwrap(),
            24
        );
        assert_eq!(automorphism_count(&fam(FamilyKind::Path, 3)).unwrap(), 2);
        assert_eq!(automorphism_count(&fam(FamilyKind::Cycle, 7)).unwrap(), 14);
        assert_eq!(automorphism_count(&fam(FamilyKind::Star, 6)).unwrap(), 120);
        assert_eq!(automorphism_count(&Graph::empty(1).unwrap()).unwrap(), 1);
        assert_eq!(
            automorphism_count(&make_family(FamilySpec::matching(7, 3)).unwrap()).unwrap(),
            48
        );
    }

    #[test]
    fn petersen_has_120() {
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(automorphism_count(&g).unwrap(), 120);
        assert_eq!(automorphisms(&g).len(), 120);
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        assert_eq!(
            automorphism_count(&fam(FamilyKind::Complete, 20)).unwrap(),
            (1..=20u128).product::<u128>()
        );
        // eight disjoint edges: 2^8 * 8!
        let m8 = make_family(FamilySpec::matching(16, 8)).unwrap();
        assert_eq!(automorphism_count(&m8).unwrap(), 256 * 40320);
    }

    #[test]
    fn enumerated_automorphisms_are_automorphisms() {
        let g = fam(FamilyKind::Cycle, 6);
        let all = automorphisms(&g);
        assert_eq!(all.len(), 12);
        for p in all {
            assert_eq!(g.relabel(&p).unwrap(), g);
        }
    }

    #[test]
    fn isomorphism_witness_maps_g_onto_h() {
        let g = fam(FamilyKind::Path, 5);
        let h = g.relabel(&[4, 2, 0, 1, 3]).unwrap();
        let p = find_isomorphism(&g, &h).unwrap();
        assert_eq!(g.relabel(&p).unwrap(), h);
        assert!(find_isomorphism(&g, &fam(FamilyKind::Star, 5)).is_none());
    }

    #[test]
    fn limit_is_enforced() {
        assert!(automorphism_count(&Graph::empty(21).unwrap()).is_err());
        assert!(automorphism_count_with_limit(&Graph::empty(21).unwrap(), 21).is_ok());
    }
}

//! Path constructions: one-vertex-at-a-time build orders up to automorphism.
//!
//! Two orderings of `G` produce the same chain of subgraphs exactly when one
//! is the image of the other under an automorphism, so path constructions
//! are the cosets `{a . ordering : a in Aut(G)}`. Each is represented by its
//! lexicographically smallest ordering; there are `t! / |Aut(G)|` of them.

use num_traits::Zero;

use super::{back_degrees_unchecked, binomial_product, ratio, Rational};
use crate::automorphism::automorphisms;
use crate::combinatorics::{factorial, next_permutation};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::limits::{self, Limits};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathConstruction {
    /// Vertices of `G` in the order they are added.
    pub ordering: Vec<usize>,
    /// `back_degrees[i]`: neighbors of `ordering[i]` among `ordering[..i]`.
    pub back_degrees: Vec<usize>,
    /// `1 / (t! * prod_i C(i - 1, d_i))`.
    pub weight: Rational,
}

impl PathConstruction {
    /// `prod_i C(i - 1, d_i)`.
    pub fn binomial_product(&self) -> u128 {
        binomial_product(&self.back_degrees)
    }

    /// The intermediate graph `H_i` on the first `i` added vertices, with
    /// vertex `j` standing for `ordering[j]`.
    pub fn prefix_graph(&self, g: &Graph, i: usize) -> Graph {
        g.reorder(&self.ordering).induced_by_mask((1u64 << i) - 1)
    }
}

pub fn enumerate_path_constructions(g: &Graph) -> Result<Vec<PathConstruction>> {
    enumerate_path_constructions_with_limit(g, Limits::DEFAULT.paths)
}

pub fn enumerate_path_constructions_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Vec<PathConstruction>> {
    let t = g.order();
    limits::check(
        "path-construction enumeration",
        "--max-paths",
        t,
        limit,
        Limits::HARD.paths,
    )?;
    let group = automorphisms(g);
    let total: usize = (1..=t).product();
    let mut covered = vec![false; total];
    let t_factorial = factorial(t);

    let mut out = Vec::with_capacity(total / group.len());
    let mut ordering: Vec<usize> = (0..t).collect();
    let mut rank = 0usize;
    loop {
        if !covered[rank] {
            for a in &group {
                let image: Vec<usize> = ordering.iter().map(|&v| a[v]).collect();
                covered[lex_rank(&image)] = true;
            }
            let back = back_degrees_unchecked(g, &ordering);
            let weight = ratio(1u8, &t_factorial * binomial_product(&back));
            out.push(PathConstruction {
                ordering: ordering.clone(),
                back_degrees: back,
                weight,
            });
        }
        rank += 1;
        if !next_permutation(&mut ordering) {
            break;
        }
    }
    Ok(out)
}

/// Sum of the path weights: `L(G)` when `paths` is the full `Path(G)`.
pub fn likelihood_from_paths(paths: &[PathConstruction]) -> Rational {
    paths
        .iter()
        .fold(Rational::zero(), |acc, p| acc + &p.weight)
}

/// Position of `p` in the lexicographic order of permutations of its length.
fn lex_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_after = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller_after;
    }
    rank
}

/// Prefix tree of the path constructions: the root is the one-vertex graph,
/// and the children of a node are the distinct next intermediate graphs.
///
/// Intermediate graphs are compared with vertices labeled by insertion
/// position, so a node stands for one labeled prefix `H_1 < ... < H_i` and
/// every root-to-leaf chain is one path construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTree {
    pub nodes: Vec<PathTreeNode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTreeNode {
    /// 1 for the root, `t` for leaves.
    pub level: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// graph6 of the intermediate graph, vertices in insertion order.
    pub graph6: String,
    /// Index into the path list for leaves.
    pub path: Option<usize>,
}

impl PathTree {
    pub fn leaves(&self) -> impl Iterator<Item = &PathTreeNode> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        let depth = self.nodes.iter().map(|n| n.level).max().unwrap_or(0);
        let mut sizes = vec![0; depth];
        for n in &self.nodes {
            sizes[n.level - 1] += 1;
        }
        sizes
    }
}

/// Builds the prefix tree over `paths`, which must all belong to `g`.
pub fn path_tree(g: &Graph, paths: &[PathConstruction]) -> PathTree {
    let t = g.order();
    let root = PathTreeNode {
        level: 1,
        parent: None,
        children: Vec::new(),
        graph6: graph6::encode_short(1, |_, _| false),
        path: None,
    };
    let mut nodes = vec![root];
    for (index, path) in paths.iter().enumerate() {
        let ordered = g.reorder(&path.ordering);
        let mut at = 0;
        for level in 2..=t {
            let code = graph6::encode_short(level, |i, j| ordered.has_edge(i, j));
            let existing = nodes[at]
                .children
                .iter()
                .copied()
                .find(|&c| nodes[c].graph6 == code);
            at = match existing {
                Some(c) => c,
                None => {
                    nodes.push(PathTreeNode {
                        level,
                        parent: Some(at),
                        children: Vec::new(),
                        graph6: code,
                        path: None,
                    });
                    let id = nodes.len() - 1;
                    nodes[at].children.push(id);
                    id
                }
            };
        }
        nodes[at].path = Some(index);
    }
    PathTree { nodes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilyKind, FamilySpec};

    fn fam(kind: FamilyKind, t: usize) -> Graph {
        make_family(FamilySpec::new(kind, t)).unwrap()
    }

    #[test]
    fn lex_rank_counts_up() {
        let mut p = vec![0, 1, 2, 3];
        let mut expected = 0;
        loop {
            assert_eq!(lex_rank(&p), expected);
            expected += 1;
            if !next_permutation(&mut p) {
                break;
            }
        }
        assert_eq!(expected, 24);
    }

    #[test]
    fn p3_paths() {
        let g = fam(FamilyKind::Path, 3);
        let paths = enumerate_path_constructions(&g).unwrap();
        assert_eq!(paths.len(), 3);
        let mut weights: Vec<Rational> = paths.iter().map(|p| p.weight.clone()).collect();
        weights.sort();
        assert_eq!(
            weights,
            vec![ratio(1u8, 12u8), ratio(1u8, 12u8), ratio(1u8, 6u8)]
        );
        assert_eq!(likelihood_from_paths(&paths), ratio(1u8, 3u8));
        // lexicographically smallest coset representatives
        let orderings: Vec<_> = paths.iter().map(|p| p.ordering.clone()).collect();
        assert_eq!(orderings, vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]]);
    }

    #[test]
    fn path_counts() {
        assert_eq!(
            enumerate_path_constructions(&fam(FamilyKind::Complete, 3))
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_path_constructions(&fam(FamilyKind::Path, 4))
                .unwrap()
                .len(),
            12
        );
        let k2 = enumerate_path_constructions(&fam(FamilyKind::Complete, 2)).unwrap();
        assert_eq!(likelihood_from_paths(&k2), ratio(1u8, 2u8));
        let k1 = enumerate_path_constructions(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(likelihood_from_paths(&k1), ratio(1u8, 1u8));
    }

    #[test]
    fn weights_clear_denominators() {
        let g = fam(FamilyKind::Cycle, 5);
        for p in enumerate_path_constructions(&g).unwrap() {
            let scaled = &p.weight * ratio(factorial(5) * p.binomial_product(), 1u8);
            assert_eq!(scaled, ratio(1u8, 1u8));
            assert_eq!(p.back_degrees[0], 0);
            assert!(p.back_degrees.iter().enumerate().all(|(i, &d)| d <= i));
        }
    }

    #[test]
    fn p3_tree_shape() {
        let g = fam(FamilyKind::Path, 3);
        let paths = enumerate_path_constructions(&g).unwrap();
        let tree = path_tree(&g, &paths);
        // root, {no edge, edge}, three leaves
        assert_eq!(tree.level_sizes(), vec![1, 2, 3]);
        let level2: Vec<_> = tree.nodes.iter().filter(|n| n.level == 2).collect();
        let branching: Vec<(String, usize)> = level2
            .iter()
            .map(|n| (n.graph6.clone(), n.children.len()))
            .collect();
        assert!(branching.contains(&("A?".to_string(), 1)));
        assert!(branching.contains(&("A_".to_string(), 2)));
        assert_eq!(tree.leaves().count(), 3);
        let prefix = paths[1].prefix_graph(&g, 2);
        assert_eq!(prefix.edge_count(), 0);
    }
}

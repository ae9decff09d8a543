//! Edge re-attachment operations that never increase Laplacian coefficients
//! (under their stated hypotheses), and a reduction pipeline that drives a
//! unicyclic graph to a cycle with balanced starlike attachments.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify, Graph, PendantPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    Xi,
    Eta,
    Kappa,
    PathShift,
    BalanceReduce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformReceipt {
    pub kind: TransformKind,
    pub before: Graph,
    pub after: Graph,
    /// Vertices the operation pivots on or moves, operation-specific.
    pub touched: Vec<usize>,
}

/// Longest pendant path at `v` avoiding `exclude`; ties go to the smaller
/// leaf label.
fn longest_pendant_path(g: &Graph, v: usize, exclude: usize) -> Option<PendantPath> {
    g.pendant_paths(v)
        .into_iter()
        .filter(|p| p.first != exclude)
        .min_by_key(|p| (std::cmp::Reverse(p.len()), p.leaf))
}

/// Moves every edge `vx` with `x` in `N(v) \ {u, v1}` to `ux`, keeping the
/// longest pendant path `v v1 ...` at `v`.
pub fn xi(g: &Graph, u: usize, v: usize) -> Result<TransformReceipt> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    if !g.is_cut_edge(u, v) {
        return Err(Error::NotCutEdge(u, v));
    }
    if g.degree(v) < 3 || g.degree(u) < 2 {
        return Err(Error::DegreeCondition(format!(
            "need d(v) >= 3 and d(u) >= 2, have d({v}) = {} and d({u}) = {}",
            g.degree(v),
            g.degree(u)
        )));
    }
    let kept = longest_pendant_path(g, v, u).ok_or(Error::NoPendantPath(v))?;
    let moved: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| x != u && x != kept.first)
        .collect();
    let remove: Vec<_> = moved.iter().map(|&x| (v, x)).collect();
    let add: Vec<_> = moved.iter().map(|&x| (u, x)).collect();
    let after = g.edit(&remove, &add)?;
    let mut touched = vec![u, v, kept.first];
    touched.extend(moved);
    Ok(TransformReceipt {
        kind: TransformKind::Xi,
        before: g.clone(),
        after,
        touched,
    })
}

/// The long-path hypothesis under which a ξ step is coefficient-decreasing:
/// some path from `u` of length `s` on `u`'s side of the cut edge, with
/// `s >= t` where `t` is the length of the pendant path kept at `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongPathCheck {
    pub s: usize,
    pub t: usize,
}

impl LongPathCheck {
    pub fn holds(&self) -> bool {
        self.s >= self.t
    }
}

pub fn long_path_condition(g: &Graph, u: usize, v: usize) -> Result<LongPathCheck> {
    if !g.is_cut_edge(u, v) {
        return Err(Error::NotCutEdge(u, v));
    }
    let t = longest_pendant_path(g, v, u)
        .ok_or(Error::NoPendantPath(v))?
        .len();
    let mut visited = vec![false; g.order()];
    visited[v] = true;
    Ok(LongPathCheck {
        s: longest_simple_path(g, u, &mut visited),
        t,
    })
}

fn longest_simple_path(g: &Graph, from: usize, visited: &mut [bool]) -> usize {
    visited[from] = true;
    let mut best = 0;
    for &w in g.neighbors(from) {
        if !visited[w] {
            best = best.max(1 + longest_simple_path(g, w, visited));
        }
    }
    visited[from] = false;
    best
}

fn cycle_vertex_with_most_attachments(g: &Graph, cycle: &[usize]) -> usize {
    let outside = |v: usize| g.neighbors(v).iter().filter(|x| !cycle.contains(x)).count();
    *cycle
        .iter()
        .min_by_key(|&&v| (std::cmp::Reverse(outside(v)), v))
        .expect("cycle is nonempty")
}

/// Moves every non-cycle edge at the other cycle vertices onto the cycle
/// vertex with the most non-cycle neighbours.
fn merge_onto_one_cycle_vertex(
    g: &Graph,
    girth: usize,
    kind: TransformKind,
) -> Result<TransformReceipt> {
    let report = classify(g);
    if !report.is_unicyclic {
        return Err(Error::NotUnicyclic);
    }
    let cycle = report.cycle_vertices;
    if cycle.len() != girth {
        return Err(Error::WrongGirth {
            expected: girth,
            found: cycle.len(),
        });
    }
    let hub = cycle_vertex_with_most_attachments(g, &cycle);
    let mut remove = Vec::new();
    let mut add = Vec::new();
    for &c in cycle.iter().filter(|&&c| c != hub) {
        for &x in g.neighbors(c).iter().filter(|x| !cycle.contains(x)) {
            remove.push((c, x));
            add.push((hub, x));
        }
    }
    let after = g.edit(&remove, &add)?;
    let mut touched = vec![hub];
    touched.extend(add.iter().map(|&(_, x)| x));
    Ok(TransformReceipt {
        kind,
        before: g.clone(),
        after,
        touched,
    })
}

/// Girth-3 merge: all attachments of the triangle moved onto one vertex.
pub fn eta(g: &Graph) -> Result<TransformReceipt> {
    merge_onto_one_cycle_vertex(g, 3, TransformKind::Eta)
}

/// Girth-4 merge: all attachments of the quadrangle moved onto one vertex.
pub fn kappa(g: &Graph) -> Result<TransformReceipt> {
    merge_onto_one_cycle_vertex(g, 4, TransformKind::Kappa)
}

fn pendant_ending_at(g: &Graph, v: usize, leaf: usize) -> Result<PendantPath> {
    g.pendant_paths(v)
        .into_iter()
        .find(|p| p.leaf == leaf)
        .ok_or(Error::NotPendantLeaf { at: v, leaf })
}

/// Moves the far vertex of the pendant path ending at `from_leaf` to the
/// end of the pendant path ending at `to_leaf`.
fn move_leaf(g: &Graph, v: usize, from: &PendantPath, to: &PendantPath) -> Result<Graph> {
    let prev = match from.vertices.len() {
        1 => v,
        len => from.vertices[len - 2],
    };
    g.edit(&[(prev, from.leaf)], &[(to.leaf, from.leaf)])
}

/// Lengthens the `p`-path ending at `leaf_p` by one vertex taken from the
/// `q`-path ending at `leaf_q` (`p >= q >= 1`), turning `G(p, q)` into
/// `G(p + 1, q - 1)`. This direction never decreases a coefficient.
pub fn path_shift(g: &Graph, v: usize, leaf_p: usize, leaf_q: usize) -> Result<TransformReceipt> {
    let pp = pendant_ending_at(g, v, leaf_p)?;
    let pq = pendant_ending_at(g, v, leaf_q)?;
    if pp.first == pq.first {
        return Err(Error::NotPendantLeaf {
            at: v,
            leaf: leaf_q,
        });
    }
    if pp.len() < pq.len() {
        return Err(Error::PathOrder {
            p: pp.len(),
            q: pq.len(),
        });
    }
    let after = move_leaf(g, v, &pq, &pp)?;
    Ok(TransformReceipt {
        kind: TransformKind::PathShift,
        before: g.clone(),
        after,
        touched: vec![v, leaf_p, leaf_q],
    })
}

/// Rooted view of a unicyclic graph: every vertex hangs below the cycle
/// vertex it reaches without crossing the cycle.
struct CycleForest {
    cycle: Vec<usize>,
    root: Vec<usize>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl CycleForest {
    fn new(g: &Graph, cycle: Vec<usize>) -> Self {
        let n = g.order();
        let mut on_cycle = vec![false; n];
        for &c in &cycle {
            on_cycle[c] = true;
        }
        let mut root = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut children = vec![Vec::new(); n];
        for &r in &cycle {
            root[r] = r;
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if !on_cycle[y] && root[y] == usize::MAX {
                        root[y] = r;
                        parent[y] = Some(x);
                        depth[y] = depth[x] + 1;
                        children[x].push(y);
                        stack.push(y);
                    }
                }
            }
        }
        CycleForest {
            cycle,
            root,
            parent,
            depth,
            children,
        }
    }

    fn members(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.root.len()).filter(move |&v| self.root[v] == r)
    }

    fn height(&self, r: usize) -> usize {
        self.members(r).map(|v| self.depth[v]).max().unwrap_or(0)
    }

    fn subtree_height(&self, v: usize) -> usize {
        self.children[v]
            .iter()
            .map(|&c| 1 + self.subtree_height(c))
            .max()
            .unwrap_or(0)
    }

    /// Vertices of the tree at `r` with at least two children.
    fn branching(&self, r: usize) -> Vec<usize> {
        self.members(r)
            .filter(|&v| self.children[v].len() >= 2)
            .collect()
    }
}

/// Rebalances the legs at `center` by moving one vertex from the longest leg
/// to the shortest when they differ by two or more. This is the inverse of
/// [`path_shift`].
fn balance_legs(
    g: &Graph,
    center: usize,
    forest: &CycleForest,
) -> Result<Option<TransformReceipt>> {
    let legs: Vec<PendantPath> = forest.children[center]
        .iter()
        .filter_map(|&c| g.pendant_path(center, c))
        .collect();
    let Some(long) = legs
        .iter()
        .min_by_key(|p| (std::cmp::Reverse(p.len()), p.leaf))
    else {
        return Ok(None);
    };
    let short = legs
        .iter()
        .min_by_key(|p| (p.len(), p.leaf))
        .expect("at least one leg");
    if long.len() < short.len() + 2 {
        return Ok(None);
    }
    let after = move_leaf(g, center, long, short)?;
    Ok(Some(TransformReceipt {
        kind: TransformKind::PathShift,
        before: g.clone(),
        after,
        touched: vec![center, long.leaf, short.leaf],
    }))
}

fn xi_if_decreasing(g: &Graph, u: usize, v: usize) -> Option<TransformReceipt> {
    let check = long_path_condition(g, u, v).ok()?;
    if !check.holds() {
        return None;
    }
    xi(g, u, v).ok()
}

/// One reduction step, or `None` when `g` is already reduced.
fn reduction_step(g: &Graph) -> Result<Option<TransformReceipt>> {
    let report = classify(g);
    if !report.is_unicyclic {
        return Err(Error::NotUnicyclic);
    }
    let forest = CycleForest::new(g, report.cycle_vertices);
    let mut roots = forest.cycle.clone();
    roots.sort_unstable();
    let principal = *roots
        .iter()
        .min_by_key(|&&r| (std::cmp::Reverse(forest.height(r)), r))
        .expect("cycle is nonempty");

    // Collapse every other tree onto its cycle vertex, farthest branch first.
    for &r in roots.iter().filter(|&&r| r != principal) {
        let deepest = forest
            .branching(r)
            .into_iter()
            .filter(|&v| v != r)
            .min_by_key(|&v| (std::cmp::Reverse(forest.depth[v]), v));
        if let Some(v) = deepest {
            let u = forest.parent[v].expect("non-root vertex has a parent");
            return xi_if_decreasing(g, u, v)
                .map(Some)
                .ok_or(Error::ReductionStuck);
        }
    }
    for &r in roots.iter().filter(|&&r| r != principal) {
        if let Some(step) = balance_legs(g, r, &forest)? {
            return Ok(Some(step));
        }
    }

    // The principal tree may keep its branching vertex away from the cycle,
    // but only one.
    let mut branching = forest.branching(principal);
    if branching.len() >= 2 {
        branching.sort_by_key(|&v| (std::cmp::Reverse(forest.depth[v]), v));
        for &v in branching.iter().filter(|&&v| v != principal) {
            let u = forest.parent[v].expect("non-root vertex has a parent");
            if let Some(step) = xi_if_decreasing(g, u, v) {
                return Ok(Some(step));
            }
        }
        branching.sort_by_key(|&v| (forest.depth[v], v));
        for &v in &branching {
            let mut kids = forest.children[v].clone();
            kids.sort_by_key(|&c| (std::cmp::Reverse(forest.subtree_height(c)), c));
            for c in kids {
                if let Some(step) = xi_if_decreasing(g, c, v) {
                    return Ok(Some(step));
                }
            }
        }
        return Err(Error::ReductionStuck);
    }
    if let Some(&center) = branching.first() {
        return balance_legs(g, center, &forest);
    }
    Ok(None)
}

/// Applies ξ steps (each satisfying the long-path hypothesis) and leg
/// rebalancing until every cycle vertex carries a balanced starlike tree
/// centred on it, except possibly one whose centre sits at the end of a
/// path. Returns the receipts in order; empty when `g` is already reduced.
pub fn balance_reduce(g: &Graph) -> Result<Vec<TransformReceipt>> {
    if !classify(g).is_unicyclic {
        return Err(Error::NotUnicyclic);
    }
    let cap = 4 * g.order() * g.order() + 8;
    let mut current = g.clone();
    let mut receipts = Vec::new();
    for _ in 0..cap {
        match reduction_step(&current)? {
            None => return Ok(receipts),
            Some(step) => {
                current = step.after.clone();
                receipts.push(step);
            }
        }
    }
    Err(Error::ReductionStuck)
}

/// Final graph of [`balance_reduce`].
pub fn reduced_form(g: &Graph) -> Result<Graph> {
    Ok(balance_reduce(g)?
        .last()
        .map_or_else(|| g.clone(), |r| r.after.clone()))
}

/// True when [`balance_reduce`] has nothing left to do.
pub fn is_reduced(g: &Graph) -> Result<bool> {
    Ok(reduction_step(g)?.is_none())
}

//! Constructors for balanced starlike trees, the `U(n, l, g, p)` family and
//! cycles with rooted trees hanging off their vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{classify, Graph};

/// Parameters of a balanced starlike unicyclic graph: a `g`-cycle, a tail
/// path of `p` edges leaving cycle vertex 0, and a balanced starlike tree
/// with `l` legs centred at the end of the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub n: usize,
    pub l: usize,
    pub g: usize,
    pub p: usize,
}

impl FamilySpec {
    pub fn new(n: usize, l: usize, g: usize, p: usize) -> Self {
        FamilySpec { n, l, g, p }
    }

    pub fn validate(&self) -> Result<()> {
        if self.g < 3 {
            return Err(Error::InvalidFamily(format!("girth {} < 3", self.g)));
        }
        if self.l < 1 {
            return Err(Error::InvalidFamily("need at least one leaf".into()));
        }
        if self.n < self.g + self.p + self.l {
            return Err(Error::InvalidFamily(format!(
                "n = {} < g + p + l = {}",
                self.n,
                self.g + self.p + self.l
            )));
        }
        Ok(())
    }
}

/// Leg lengths of `BST(n, l)`, longer legs first. They sum to `n - 1`.
pub fn bst_legs(n: usize, l: usize) -> Result<Vec<usize>> {
    if l == 0 || n < l + 1 {
        return Err(Error::InvalidFamily(format!(
            "balanced starlike tree needs l >= 1 and n >= l + 1 (n = {n}, l = {l})"
        )));
    }
    let (q, r) = ((n - 1) / l, (n - 1) % l);
    Ok((0..l).map(|i| if i < r { q + 1 } else { q }).collect())
}

/// Appends pendant paths of the given lengths at `center`, labelling new
/// vertices consecutively from `next`.
fn attach_legs(
    edges: &mut Vec<(usize, usize)>,
    center: usize,
    legs: &[usize],
    mut next: usize,
) -> usize {
    for &len in legs {
        let mut prev = center;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    next
}

/// A spider: centre 0 with pendant paths of the given lengths.
pub fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    attach_legs(&mut edges, 0, legs, 1);
    Graph::new(n, &edges).expect("spider construction is always simple")
}

/// Balanced starlike tree of order `n` with `l` leaves, centred at vertex 0.
/// With `l = 1` this is the path `P_n` starting at the centre.
pub fn build_bst(n: usize, l: usize) -> Result<Graph> {
    Ok(spider(&bst_legs(n, l)?))
}

/// Builds `U(n, l, g, p)`. Cycle vertices are `0..g`, the tail occupies
/// `g..g+p`, and the legs follow, longer first.
pub fn build_u(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let FamilySpec { n, l, g, p } = spec;
    let mut edges = Vec::with_capacity(n);
    for i in 0..g {
        edges.push((i, (i + 1) % g));
    }
    let mut center = 0;
    for j in 0..p {
        edges.push((center, g + j));
        center = g + j;
    }
    let legs = bst_legs(n - p - g + 1, l)?;
    let used = attach_legs(&mut edges, center, &legs, g + p);
    debug_assert_eq!(used, n);
    Graph::new(n, &edges)
}

/// A tree together with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub tree: Graph,
    pub root: usize,
}

impl RootedTree {
    pub fn new(tree: Graph, root: usize) -> Self {
        RootedTree { tree, root }
    }

    pub fn trivial() -> Self {
        RootedTree {
            tree: Graph::empty(1),
            root: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }
}

/// Identifies the root of `trees[i]` with cycle vertex `i` of `C_g`.
/// Non-root vertices are labelled from `g` upwards, tree by tree.
pub fn compose_cycle_trees(g: usize, trees: &[RootedTree]) -> Result<Graph> {
    if trees.len() != g {
        return Err(Error::TreeCount {
            expected: g,
            got: trees.len(),
        });
    }
    if g < 3 {
        return Err(Error::InvalidFamily(format!("girth {g} < 3")));
    }
    let mut edges: Vec<(usize, usize)> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for (i, t) in trees.iter().enumerate() {
        let tn = t.tree.order();
        if t.root >= tn || !(tn == 1 || classify(&t.tree).is_tree) {
            return Err(Error::NotATree { index: i });
        }
        let mut map = vec![0; tn];
        for (v, slot) in map.iter_mut().enumerate() {
            if v == t.root {
                *slot = i;
            } else {
                *slot = next;
                next += 1;
            }
        }
        edges.extend(t.tree.edges().iter().map(|&(a, b)| (map[a], map[b])));
    }
    Graph::new(next, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn g1() -> Graph {
        // triangle 0-1-2, legs 4 and 3 at vertex 0
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (0, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (0, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap()
    }

    fn g2() -> Graph {
        // triangle, tail 0-3, legs 3 and 3 at vertex 3
        Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (0, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (3, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn bst_examples() {
        assert_eq!(bst_legs(7, 2).unwrap(), vec![3, 3]);
        assert_eq!(bst_legs(8, 2).unwrap(), vec![4, 3]);
        assert_eq!(bst_legs(5, 3).unwrap(), vec![2, 1, 1]);
        let p7 = build_bst(7, 2).unwrap();
        let r = classify(&p7);
        assert!(r.is_tree);
        assert_eq!(r.leaf_count, 2);
        assert_eq!(p7.degree(0), 2);
        assert!(build_bst(3, 3).is_err());
    }

    #[test]
    fn bst_with_one_leg_is_a_path() {
        let g = build_bst(5, 1).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn u_family_matches_counterexample_graphs() {
        let u0 = build_u(FamilySpec::new(10, 2, 3, 0)).unwrap();
        let u1 = build_u(FamilySpec::new(10, 2, 3, 1)).unwrap();
        assert_eq!(canonical_form(&u0), canonical_form(&g1()));
        assert_eq!(canonical_form(&u1), canonical_form(&g2()));
        assert_eq!(
            build_u(FamilySpec::new(5, 3, 3, 0)),
            Err(Error::InvalidFamily("n = 5 < g + p + l = 6".into()))
        );
    }

    #[test]
    fn u_labeling_convention() {
        let u = build_u(FamilySpec::new(9, 2, 4, 2)).unwrap();
        // cycle 0..4, tail 0-4-5, legs at 5: 2 then 1
        assert_eq!(
            u.edges(),
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 8)
            ]
        );
    }

    #[test]
    fn compose_examples() {
        let p2 = RootedTree::new(Graph::new(2, &[(0, 1)]).unwrap(), 0);
        let g =
            compose_cycle_trees(3, &[p2, RootedTree::trivial(), RootedTree::trivial()]).unwrap();
        let r = classify(&g);
        assert!(r.is_unicyclic);
        assert_eq!((r.order, r.leaf_count, r.girth), (4, 1, Some(3)));

        let sp = RootedTree::new(spider(&[4, 3]), 0);
        let g =
            compose_cycle_trees(3, &[sp, RootedTree::trivial(), RootedTree::trivial()]).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&g1()));

        let c4 = compose_cycle_trees(4, &vec![RootedTree::trivial(); 4]).unwrap();
        assert_eq!(c4.size(), 4);
        assert_eq!(classify(&c4).girth, Some(4));

        assert_eq!(
            compose_cycle_trees(3, &[RootedTree::trivial()]),
            Err(Error::TreeCount {
                expected: 3,
                got: 1
            })
        );
    }

    #[test]
    fn compose_rejects_non_trees() {
        let tri = RootedTree::new(Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(), 0);
        assert_eq!(
            compose_cycle_trees(3, &[RootedTree::trivial(), tri, RootedTree::trivial()]),
            Err(Error::NotATree { index: 1 })
        );
    }
}

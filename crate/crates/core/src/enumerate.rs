//! Enumeration of connected unicyclic graphs up to isomorphism.
//!
//! A unicyclic graph is a cycle with a rooted tree hanging off every cycle
//! vertex, and two such graphs are isomorphic exactly when their cyclic
//! sequences of rooted-tree isomorphism classes agree up to rotation and
//! reflection. Rooted trees are generated bottom-up as multisets of smaller
//! rooted trees, and each cyclic sequence is kept only in its
//! dihedrally-smallest form. Members are finally keyed and sorted by
//! canonical form.

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{laplacian_coefficients, CoeffVector};

/// Largest order the enumeration accepts.
pub const MAX_ENUM_ORDER: usize = 12;

/// Which cycle attachments a family admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Restriction {
    /// Every unicyclic graph matching the filters.
    Full,
    /// Exactly one cycle vertex carries a nontrivial tree.
    OneAttachment,
    /// Exactly two cycle vertices carry nontrivial trees.
    TwoAttachments,
}

impl Restriction {
    fn admits(self, attachments: usize) -> bool {
        match self {
            Restriction::Full => true,
            Restriction::OneAttachment => attachments == 1,
            Restriction::TwoAttachments => attachments == 2,
        }
    }
}

/// Isomorphism class of a rooted tree: the root plus a multiset of child
/// classes, stored as nondecreasing ids.
#[derive(Clone, Debug)]
struct RootedClass {
    size: usize,
    children: Vec<usize>,
    /// Leaves strictly below the root.
    leaves: usize,
}

/// All rooted trees up to a given order. Ids are ordered by size.
struct RootedTrees {
    classes: Vec<RootedClass>,
}

impl RootedTrees {
    fn up_to(max_size: usize) -> Self {
        let mut classes = vec![RootedClass {
            size: 1,
            children: Vec::new(),
            leaves: 0,
        }];
        for size in 2..=max_size {
            let known = classes.len();
            let mut fresh = Vec::new();
            let mut current = Vec::new();
            multisets(&classes[..known], size - 1, 0, &mut current, &mut fresh);
            for children in fresh {
                let leaves = children
                    .iter()
                    .map(|&c| {
                        let child: &RootedClass = &classes[c];
                        if child.children.is_empty() {
                            1
                        } else {
                            child.leaves
                        }
                    })
                    .sum();
                classes.push(RootedClass {
                    size,
                    children,
                    leaves,
                });
            }
        }
        RootedTrees { classes }
    }

    fn ids_of_size(&self, size: usize) -> impl Iterator<Item = usize> + '_ {
        self.classes
            .iter()
            .enumerate()
            .filter(move |(_, c)| c.size == size)
            .map(|(i, _)| i)
    }

    /// Writes the edges of class `id` rooted at `root`, labelling new
    /// vertices from `*next`.
    fn emit(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        for &child in &self.classes[id].children {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            self.emit(child, v, next, edges);
        }
    }
}

/// Multisets of class ids (nondecreasing, starting at `min_id`) with total
/// size `remaining`.
fn multisets(
    classes: &[RootedClass],
    remaining: usize,
    min_id: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for id in min_id..classes.len() {
        let s = classes[id].size;
        if s > remaining {
            break;
        }
        current.push(id);
        multisets(classes, remaining - s, id, current, out);
        current.pop();
    }
}

/// True when `seq` is the smallest among its rotations and reflections.
fn dihedral_minimal(seq: &[usize]) -> bool {
    let g = seq.len();
    for shift in 0..g {
        let rotated = (0..g).map(|i| seq[(i + shift) % g]);
        if rotated.lt(seq.iter().copied()) {
            return false;
        }
        let reflected = (0..g).map(|i| seq[(shift + g - i) % g]);
        if reflected.lt(seq.iter().copied()) {
            return false;
        }
    }
    true
}

/// A catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub form: Vec<u8>,
    pub graph: Graph,
    pub coeffs: CoeffVector,
    pub girth: usize,
    pub leaves: usize,
    /// Cycle vertices carrying a nontrivial tree.
    pub attachments: usize,
}

impl Member {
    pub fn from_graph(graph: Graph) -> Member {
        let report = crate::graph::classify(&graph);
        let attachments = report
            .cycle_vertices
            .iter()
            .filter(|&&v| graph.degree(v) > 2)
            .count();
        Member {
            form: canonical_form(&graph),
            coeffs: laplacian_coefficients(&graph),
            girth: report.girth.unwrap_or(0),
            leaves: report.leaf_count,
            attachments,
            graph,
        }
    }
}

/// A set of pairwise non-isomorphic unicyclic graphs sorted by canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCatalog {
    pub n: usize,
    pub l: Option<usize>,
    pub g: Option<usize>,
    pub restriction: Restriction,
    pub members: Vec<Member>,
}

impl FamilyCatalog {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members matching the narrower filters, keeping this catalog's order.
    pub fn restrict(
        &self,
        l: Option<usize>,
        g: Option<usize>,
        restriction: Restriction,
    ) -> FamilyCatalog {
        let members = self
            .members
            .iter()
            .filter(|m| l.is_none_or(|l| m.leaves == l))
            .filter(|m| g.is_none_or(|g| m.girth == g))
            .filter(|m| restriction.admits(m.attachments))
            .cloned()
            .collect();
        FamilyCatalog {
            n: self.n,
            l: l.or(self.l),
            g: g.or(self.g),
            restriction,
            members,
        }
    }

    /// Builds a catalog from arbitrary graphs, deduplicating by canonical form.
    pub fn from_graphs(n: usize, graphs: impl IntoIterator<Item = Graph>) -> FamilyCatalog {
        let mut members: Vec<Member> = graphs.into_iter().map(Member::from_graph).collect();
        members.sort_by(|a, b| a.form.cmp(&b.form));
        members.dedup_by(|a, b| a.form == b.form);
        FamilyCatalog {
            n,
            l: None,
            g: None,
            restriction: Restriction::Full,
            members,
        }
    }
}

fn check_order(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_ENUM_ORDER);
    if n < 3 || n > limit {
        return Err(Error::GuardExceeded(format!(
            "unicyclic enumeration needs 3 <= n <= {limit}, got {n}"
        )));
    }
    Ok(())
}

/// Every connected unicyclic graph of order `n` up to isomorphism, optionally
/// filtered by leaf count and girth.
pub fn enumerate_unicyclic(n: usize, l: Option<usize>, g: Option<usize>) -> Result<FamilyCatalog> {
    enumerate_family(n, l, g, Restriction::Full)
}

pub fn enumerate_family(
    n: usize,
    l: Option<usize>,
    g: Option<usize>,
    restriction: Restriction,
) -> Result<FamilyCatalog> {
    enumerate_family_guarded(n, l, g, restriction, MAX_ENUM_ORDER)
}

/// Like [`enumerate_family`] with a lowered order limit.
pub fn enumerate_family_guarded(
    n: usize,
    l: Option<usize>,
    g: Option<usize>,
    restriction: Restriction,
    limit: usize,
) -> Result<FamilyCatalog> {
    check_order(n, limit)?;
    let trees = RootedTrees::up_to(n - 2);
    let girths: Vec<usize> = match g {
        Some(g) => (3..=n).filter(|&x| x == g).collect(),
        None => (3..=n).collect(),
    };

    let mut sequences = Vec::new();
    for &girth in &girths {
        let mut seq = Vec::with_capacity(girth);
        cyclic_sequences(&trees, girth, n, l, restriction, &mut seq, &mut sequences);
    }

    let build = |seq: &Vec<usize>| -> Member {
        let girth = seq.len();
        let mut edges: Vec<(usize, usize)> = (0..girth).map(|i| (i, (i + 1) % girth)).collect();
        let mut next = girth;
        for (i, &id) in seq.iter().enumerate() {
            trees.emit(id, i, &mut next, &mut edges);
        }
        Member::from_graph(Graph::new(next, &edges).expect("generated graph is simple"))
    };

    #[cfg(feature = "parallel")]
    let mut members: Vec<Member> = {
        use rayon::prelude::*;
        sequences.par_iter().map(build).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut members: Vec<Member> = sequences.iter().map(build).collect();

    members.sort_by(|a, b| a.form.cmp(&b.form));
    members.dedup_by(|a, b| a.form == b.form);
    Ok(FamilyCatalog {
        n,
        l,
        g,
        restriction,
        members,
    })
}

/// Dihedrally-minimal sequences of rooted-tree ids of length `girth` with
/// total order `n`, pre-filtered on leaves and attachment count.
fn cyclic_sequences(
    trees: &RootedTrees,
    girth: usize,
    n: usize,
    l: Option<usize>,
    restriction: Restriction,
    seq: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let used: usize = seq.iter().map(|&id| trees.classes[id].size).sum();
    let slots_left = girth - seq.len();
    if slots_left == 0 {
        if used != n {
            return;
        }
        let leaves: usize = seq.iter().map(|&id| trees.classes[id].leaves).sum();
        let attachments = seq.iter().filter(|&&id| trees.classes[id].size > 1).count();
        if l.is_none_or(|l| l == leaves) && restriction.admits(attachments) && dihedral_minimal(seq)
        {
            out.push(seq.clone());
        }
        return;
    }
    let max_size = n - used - (slots_left - 1);
    // a rotation-minimal sequence starts with its smallest id
    let min_id = seq.first().copied().unwrap_or(0);
    for size in 1..=max_size {
        for id in trees.ids_of_size(size) {
            if id < min_id {
                continue;
            }
            seq.push(id);
            cyclic_sequences(trees, girth, n, l, restriction, seq, out);
            seq.pop();
        }
    }
}

//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangular adjacency
//! bitstring over all labelings compatible with an ordered equitable
//! partition. The partition starts from vertex degrees and is refined by
//! neighbour colour counts; remaining ties are broken by individualizing
//! vertices one at a time. Twins (vertices with the same neighbourhood
//! apart from each other) are swapped by an automorphism, so only one twin
//! per cell is branched on.

use crate::graph::Graph;

/// Canonical byte string of `g`: the order as a leading byte, then the
/// packed adjacency bits (MSB first). Isomorphic graphs get equal strings.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let n = g.order();
    assert!(
        n <= u8::MAX as usize,
        "canonical_form supports at most 255 vertices"
    );
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    rerank(&mut colors, |v, c| c[v]);
    refine(g, &mut colors);
    let mut best: Option<Vec<u8>> = None;
    search(g, colors, &mut best);
    let mut out = vec![n as u8];
    out.extend(best.unwrap_or_default());
    out
}

/// Replaces colours by the dense rank of `key(v, colours)`.
fn rerank<K: Ord + Clone>(colors: &mut [usize], key: impl Fn(usize, &[usize]) -> K) -> usize {
    let keys: Vec<K> = (0..colors.len()).map(|v| key(v, colors)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    for (v, k) in keys.iter().enumerate() {
        colors[v] = sorted.binary_search(k).expect("key present");
    }
    sorted.len()
}

fn refine(g: &Graph, colors: &mut [usize]) {
    let mut count = {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let next = rerank(colors, |v, c| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        });
        if next == count {
            return;
        }
        count = next;
    }
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    let strip = |x: usize, other: usize| -> Vec<usize> {
        g.neighbors(x)
            .iter()
            .copied()
            .filter(|&y| y != other)
            .collect()
    };
    strip(a, b) == strip(b, a)
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let n = colors.len();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let bits = adjacency_bits(g, &colors);
        if best.as_ref().is_none_or(|b| bits < *b) {
            *best = Some(bits);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| are_twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = colors.clone();
        rerank(&mut next, |x, c| (c[x], usize::from(x != v)));
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Packs the adjacency of `g` under the labeling `label[v]`.
fn adjacency_bits(g: &Graph, label: &[usize]) -> Vec<u8> {
    let n = label.len();
    let mut order = vec![0; n];
    for (v, &l) in label.iter().enumerate() {
        order[l] = v;
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; total.div_ceil(8)];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                out[bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    out
}

/// Exhaustive isomorphism test by canonical forms.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

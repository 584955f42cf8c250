use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An unlabeled tree, stored with some vertex labeling `0..vcount`.
///
/// The canonical code is a center-rooted AHU encoding: two trees have the
/// same code iff they are isomorphic.
#[derive(Clone)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    code: Vec<u8>,
    aut: BigUint,
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}

impl Eq for Tree {}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", String::from_utf8_lossy(&self.code))
    }
}

impl Tree {
    pub fn single_vertex() -> Self {
        Self::from_adjacency(vec![Vec::new()])
    }

    pub fn from_edges(vcount: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vcount == 0 {
            return Err(Error::Parse("a tree has at least one vertex".into()));
        }
        if edges.len() + 1 != vcount {
            return Err(Error::Parse(format!(
                "{} edges cannot form a tree on {vcount} vertices",
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); vcount];
        for &(a, b) in edges {
            if a >= vcount || b >= vcount || a == b {
                return Err(Error::Parse(format!("invalid edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        // connected + (n-1) edges => acyclic
        let mut seen = vec![false; vcount];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Parse("edges do not form a connected tree".into()));
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
        }
        let (code, aut) = canonical_form(&adj);
        Tree { adj, code, aut }
    }

    pub fn vcount(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Valency `|v|`: the number of edges at `v`.
    pub fn valency(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.vcount() - 1);
        for (v, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&w| v < w).map(|&w| (v, w)));
        }
        out
    }

    pub fn canonical_code(&self) -> &[u8] {
        &self.code
    }

    /// `|Aut τ|` as an abstract graph.
    pub fn aut_order(&self) -> &BigUint {
        &self.aut
    }

    /// The tree with one new leaf attached at `v`.
    pub fn with_leaf_at(&self, v: usize) -> Tree {
        let mut adj = self.adj.clone();
        let n = adj.len();
        adj.push(vec![v]);
        adj[v].push(n);
        Self::from_adjacency(adj)
    }

    /// All automorphisms as vertex permutations, by backtracking over
    /// adjacency-preserving partial maps. Exponential in general; intended
    /// for small trees.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.vcount();
        // BFS order guarantees every vertex after the first has an earlier neighbor.
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        order.push(0);
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(&order, &parent, 0, &mut image, &mut used, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        order: &[usize],
        parent: &[usize],
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == order.len() {
            out.push(image.clone());
            return;
        }
        let v = order[pos];
        let candidates: Vec<usize> = if pos == 0 {
            (0..self.vcount()).collect()
        } else {
            self.adj[image[parent[v]]].clone()
        };
        for c in candidates {
            if used[c] || self.valency(c) != self.valency(v) {
                continue;
            }
            image[v] = c;
            used[c] = true;
            self.extend_automorphism(order, parent, pos + 1, image, used, out);
            used[c] = false;
            image[v] = usize::MAX;
        }
    }
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

/// AHU code and rooted automorphism count of the subtree at `v` away from
/// `parent`.
fn rooted_form(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> (Vec<u8>, BigUint) {
    let mut children: Vec<(Vec<u8>, BigUint)> = adj[v]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_form(adj, w, Some(v)))
        .collect();
    children.sort_by(|a, b| a.0.cmp(&b.0));
    let mut code = vec![b'('];
    let mut aut = BigUint::one();
    let mut run = 0u32;
    for (i, (c, a)) in children.iter().enumerate() {
        code.extend_from_slice(c);
        aut *= a;
        run = if i > 0 && children[i - 1].0 == *c { run + 1 } else { 1 };
        aut *= run;
    }
    code.push(b')');
    (code, aut)
}

fn canonical_form(adj: &[Vec<usize>]) -> (Vec<u8>, BigUint) {
    match centers(adj).as_slice() {
        [c] => {
            let (code, aut) = rooted_form(adj, *c, None);
            let mut full = vec![b'V'];
            full.extend(code);
            (full, aut)
        }
        [a, b] => {
            let (ca, aa) = rooted_form(adj, *a, Some(*b));
            let (cb, ab) = rooted_form(adj, *b, Some(*a));
            let mut aut = aa * ab;
            if ca == cb {
                aut *= 2u32;
            }
            let (lo, hi) = if ca <= cb { (ca, cb) } else { (cb, ca) };
            let mut full = vec![b'E'];
            full.extend(lo);
            full.extend(hi);
            (full, aut)
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// One representative per isomorphism class of trees with `1..=vmax`
/// vertices, together with `|Aut τ|`, ordered by vertex count and then by
/// canonical code.
pub fn enum_trees(vmax: usize) -> Vec<(Tree, BigUint)> {
    let mut out = Vec::new();
    if vmax == 0 {
        return out;
    }
    let mut level = vec![Tree::single_vertex()];
    out.push((level[0].clone(), level[0].aut.clone()));
    for _ in 2..=vmax {
        let mut next: BTreeMap<Vec<u8>, Tree> = BTreeMap::new();
        for t in &level {
            for v in 0..t.vcount() {
                let grown = t.with_leaf_at(v);
                next.entry(grown.code.clone()).or_insert(grown);
            }
        }
        level = next.into_values().collect();
        out.extend(level.iter().map(|t| (t.clone(), t.aut.clone())));
    }
    out
}

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::Tree;
use crate::error::Result;
use crate::qfield::{falling_factorial, BigRat, RatFunc};
use crate::target::{nclass, p1_class, TargetSpace};

/// `ε(β, n)`: zero exactly for `β = 0` with `n <= 2`.
pub fn epsilon(beta: &[usize], n: usize) -> bool {
    !(beta.iter().all(|&b| b == 0) && n <= 2)
}

/// A `(k, W)`-marking: a curve class `β_v` and a label set `S_v` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTree {
    pub tree: Tree,
    pub beta: Vec<Vec<usize>>,
    pub labels: Vec<Vec<usize>>,
}

/// The label-forgetting variant: only `k_v = |S_v|` is recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMarking {
    pub tree: Tree,
    pub beta: Vec<Vec<usize>>,
    pub kv: Vec<usize>,
}

impl MarkedTree {
    pub fn k(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    /// Checks the partition and stability conditions.
    pub fn is_admissible(&self) -> bool {
        let n = self.tree.vcount();
        if self.beta.len() != n || self.labels.len() != n {
            return false;
        }
        let k = self.k();
        let all: BTreeSet<usize> = self.labels.iter().flatten().copied().collect();
        if all.len() != k || all.iter().any(|&l| l < 1 || l > k) {
            return false;
        }
        (0..n).all(|v| {
            let zero = self.beta[v].iter().all(|&b| b == 0);
            !zero || self.tree.valency(v) + self.labels[v].len() >= 3
        })
    }

    pub fn weighted(&self) -> WeightedMarking {
        WeightedMarking {
            tree: self.tree.clone(),
            beta: self.beta.clone(),
            kv: self.labels.iter().map(Vec::len).collect(),
        }
    }

    /// The marking transported along a vertex permutation `σ`.
    pub fn permuted(&self, sigma: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = sigma.len();
        let mut beta = vec![Vec::new(); n];
        let mut labels = vec![Vec::new(); n];
        for v in 0..n {
            beta[sigma[v]] = self.beta[v].clone();
            labels[sigma[v]] = self.labels[v].clone();
        }
        (beta, labels)
    }
}

/// Per-vertex factor `ε(β, n) N(W, β) C([P¹], n) n!`.
pub fn vertex_factor(w: &TargetSpace, beta: &[usize], n: usize) -> Result<RatFunc> {
    if !epsilon(beta, n) {
        return Ok(RatFunc::zero());
    }
    let ff = falling_factorial(&RatFunc::from_poly(p1_class()), n);
    Ok(&nclass(w, beta)? * &ff)
}

/// Virtual class of the stratum of stable maps of the given combinatorial
/// type: `[W] Π_v ε N(W, β_v) C([P¹], |v|+k_v) (|v|+k_v)!`.
pub fn stratum_class(w: &TargetSpace, m: &MarkedTree) -> Result<RatFunc> {
    weighted_class(w, &m.weighted())
}

/// Same product for a weighted marking (no labels).
pub fn weighted_class(w: &TargetSpace, m: &WeightedMarking) -> Result<RatFunc> {
    let mut acc = RatFunc::from_poly(w.pw().clone());
    for v in 0..m.tree.vcount() {
        let f = vertex_factor(w, &m.beta[v], m.tree.valency(v) + m.kv[v])?;
        if f.is_zero() {
            return Ok(RatFunc::zero());
        }
        acc = &acc * &f;
    }
    Ok(acc)
}

/// All ways to write `total` as an ordered sum of `parts` vectors.
pub(crate) fn vector_compositions(total: &[usize], parts: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(rest: &[usize], parts: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if parts == 1 {
            cur.push(rest.to_vec());
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in sub_box(rest) {
            let remaining: Vec<usize> = rest.iter().zip(&first).map(|(a, b)| a - b).collect();
            cur.push(first);
            go(&remaining, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total.iter().all(|&x| x == 0) {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Every vector `e` with `0 <= e <= bound` componentwise, in lexicographic
/// order.
pub(crate) fn sub_box(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(bound.len())];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

fn label_assignments(k: usize, sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(pool: &[usize], sizes: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&size, rest_sizes)) = sizes.split_first() else {
            out.push(cur.clone());
            return;
        };
        for chosen in combinations(pool, size) {
            let rest: Vec<usize> = pool.iter().copied().filter(|x| !chosen.contains(x)).collect();
            cur.push(chosen);
            go(&rest, rest_sizes, cur, out);
            cur.pop();
        }
    }
    let pool: Vec<usize> = (1..=k).collect();
    let mut out = Vec::new();
    go(&pool, sizes, &mut Vec::new(), &mut out);
    out
}

fn combinations(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < size {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..=pool.len() - size {
        for mut tail in combinations(&pool[i + 1..], size - 1) {
            tail.insert(0, pool[i]);
            out.push(tail);
        }
    }
    out
}

fn k_compositions(k: usize, needs: &[usize]) -> Vec<Vec<usize>> {
    fn go(k: usize, needs: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&need, rest)) = needs.split_first() else {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        };
        let rest_need: usize = rest.iter().sum();
        for kv in need..=k {
            if kv + rest_need > k {
                break;
            }
            cur.push(kv);
            go(k - kv, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, needs, &mut Vec::new(), &mut out);
    out
}

/// All admissible `(k, W)`-markings of `tree` with total class `beta_total`.
pub fn enum_marked(tree: &Tree, k: usize, beta_total: &[usize]) -> Vec<MarkedTree> {
    let n = tree.vcount();
    let mut out = Vec::new();
    for beta in vector_compositions(beta_total, n) {
        let needs: Vec<usize> = (0..n)
            .map(|v| {
                if beta[v].iter().all(|&b| b == 0) {
                    3usize.saturating_sub(tree.valency(v))
                } else {
                    0
                }
            })
            .collect();
        for kv in k_compositions(k, &needs) {
            for labels in label_assignments(k, &kv) {
                out.push(MarkedTree {
                    tree: tree.clone(),
                    beta: beta.clone(),
                    labels,
                });
            }
        }
    }
    out
}

/// `Σ_τ (1 / |Aut τ|) Σ_μ [stratum(τ, μ)]` over labeled markings of trees with
/// at most `vmax` vertices. Equals `k!` times the `t^k z^β` coefficient of
/// the tree-sum potential.
pub fn labeled_stratum_sum(
    w: &TargetSpace,
    k: usize,
    beta: &[usize],
    vmax: usize,
) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (tree, aut) in super::enum_trees(vmax) {
        let mut tree_sum = RatFunc::zero();
        for m in enum_marked(&tree, k, beta) {
            tree_sum = &tree_sum + &stratum_class(w, &m)?;
        }
        let inv = BigRat::new(1.into(), BigInt::from(aut));
        acc = &acc + &tree_sum.scale(&inv);
    }
    Ok(acc)
}

/// The same total organized by isomorphism classes of marked trees: each
/// class contributes its stratum divided by the order of its stabilizer in
/// `Aut τ`.
pub fn orbit_stratum_sum(w: &TargetSpace, k: usize, beta: &[usize], vmax: usize) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (tree, _) in super::enum_trees(vmax) {
        let group = tree.automorphisms();
        let mut seen: BTreeSet<(Vec<Vec<usize>>, Vec<Vec<usize>>)> = BTreeSet::new();
        for m in enum_marked(&tree, k, beta) {
            let images: Vec<_> = group.iter().map(|s| m.permuted(s)).collect();
            let rep = images.iter().min().cloned().expect("identity is in the group");
            if !seen.insert(rep) {
                continue;
            }
            let own = (m.beta.clone(), m.labels.clone());
            let stab = images.iter().filter(|img| **img == own).count();
            let inv = BigRat::new(1.into(), BigInt::from(stab));
            acc = &acc + &stratum_class(w, &m)?.scale(&inv);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::UPoly;

    #[test]
    fn epsilon_values() {
        assert!(!epsilon(&[0], 0));
        assert!(!epsilon(&[0], 2));
        assert!(epsilon(&[0], 3));
        assert!(epsilon(&[1], 0));
        assert!(epsilon(&[0, 1], 1));
    }

    #[test]
    fn one_vertex_markings() {
        let t = Tree::single_vertex();
        assert_eq!(enum_marked(&t, 3, &[0]).len(), 1);
        assert!(enum_marked(&t, 2, &[0]).is_empty());
        assert_eq!(enum_marked(&t, 0, &[2]).len(), 1);
    }

    #[test]
    fn two_vertex_degree_two_split() {
        let t = Tree::from_edges(2, &[(0, 1)]).unwrap();
        let ms = enum_marked(&t, 0, &[2]);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].beta, vec![vec![1], vec![1]]);
        assert!(ms.iter().all(MarkedTree::is_admissible));
    }

    #[test]
    fn label_counts_are_multinomial() {
        // star with three leaves, k = 6, all beta zero: each leaf needs 2 labels
        let t = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ms = enum_marked(&t, 6, &[0]);
        // centre has valency 3 so takes 0 labels: 6! / (2! 2! 2!) = 90
        assert_eq!(ms.len(), 90);
        assert!(ms.iter().all(MarkedTree::is_admissible));
    }

    #[test]
    fn stratum_examples() {
        let w = TargetSpace::projective_space(2).unwrap();
        let open = MarkedTree {
            tree: Tree::single_vertex(),
            beta: vec![vec![0]],
            labels: vec![vec![1, 2, 3, 4]],
        };
        // [M_{0,4}] = [P^1] - 3
        let expect = RatFunc::from_poly(w.pw() * &UPoly::from_i64s(&[-2, 1]));
        assert_eq!(stratum_class(&w, &open).unwrap(), expect);

        let boundary = MarkedTree {
            tree: Tree::from_edges(2, &[(0, 1)]).unwrap(),
            beta: vec![vec![0], vec![0]],
            labels: vec![vec![1, 2], vec![3, 4]],
        };
        assert_eq!(
            stratum_class(&w, &boundary).unwrap(),
            RatFunc::from_poly(w.pw().clone())
        );

        let unstable = MarkedTree {
            tree: Tree::single_vertex(),
            beta: vec![vec![0]],
            labels: vec![vec![1, 2]],
        };
        assert!(stratum_class(&w, &unstable).unwrap().is_zero());
    }

    #[test]
    fn compositions() {
        assert_eq!(vector_compositions(&[2], 2).len(), 3);
        assert_eq!(vector_compositions(&[1, 1], 2).len(), 4);
        assert_eq!(vector_compositions(&[0], 0).len(), 1);
        assert_eq!(combinations(&[1, 2, 3, 4], 2).len(), 6);
        assert_eq!(sub_box(&[1, 2]).len(), 6);
    }
}

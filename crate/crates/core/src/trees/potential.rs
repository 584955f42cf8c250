//! Direct evaluation of the potential as a sum over trees with weighted
//! markings `v ↦ (β_v, k_v)`.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::marking::{sub_box, vertex_factor};
use super::{enum_trees, Tree};
use crate::error::Result;
use crate::qfield::{factorial, BigRat, RatFunc};
use crate::series::{Grading, MultiSeries};
use crate::target::TargetSpace;

/// Largest vertex count of a tree that can carry an admissible marking with
/// `k <= kmax` and `β <= dmax`.
///
/// With `a <= |dmax|₁` vertices of nonzero class and every other vertex
/// needing `|v| + k_v >= 3`, summing valencies gives
/// `3 (V - a) <= 2 (V - 1) + kmax`.
pub fn vertex_bound(kmax: usize, dmax: &[usize]) -> usize {
    let d1: usize = dmax.iter().sum();
    (3 * d1 + kmax).saturating_sub(2).max(1)
}

/// `Φ_W` truncated at `(kmax, dmax)`, summed over every isomorphism class of
/// trees within [`vertex_bound`].
pub fn tree_sum_potential(w: &TargetSpace, kmax: usize, dmax: &[usize]) -> Result<MultiSeries> {
    tree_sum_potential_upto(w, kmax, dmax, vertex_bound(kmax, dmax))
}

/// As [`tree_sum_potential`] but over trees with at most `vmax` vertices.
pub fn tree_sum_potential_upto(
    w: &TargetSpace,
    kmax: usize,
    dmax: &[usize],
    vmax: usize,
) -> Result<MultiSeries> {
    w.check_complete(dmax)?;
    let table = FactorTable::new(w, kmax, dmax, vmax)?;
    let trees = enum_trees(vmax);
    let partials: Vec<MultiSeries> = trees
        .par_iter()
        .map(|(tree, aut)| {
            let mut s = tree_contribution(&table, w.grading(), tree, kmax, dmax)?;
            let scale = RatFunc::from_poly(w.pw().clone())
                .scale(&BigRat::new(1.into(), BigInt::from(aut.clone())));
            s = s.scale(&scale);
            Ok(s)
        })
        .collect::<Result<_>>()?;
    let mut total = MultiSeries::zero(w.grading(), kmax, dmax)?;
    for p in &partials {
        total = total.add(p)?;
    }
    Ok(total)
}

/// `ε N(W, β) C([P¹], |v|+k) (|v|+k)! / k!` for every valency, class and
/// label count that can occur.
struct FactorTable {
    classes: Vec<Vec<usize>>,
    kmax: usize,
    // [valency][class index][k]
    entries: Vec<Vec<Vec<RatFunc>>>,
}

impl FactorTable {
    fn new(w: &TargetSpace, kmax: usize, dmax: &[usize], vmax: usize) -> Result<Self> {
        let classes = sub_box(dmax);
        let max_valency = vmax.saturating_sub(1);
        let mut entries = Vec::with_capacity(max_valency + 1);
        for val in 0..=max_valency {
            let mut per_class = Vec::with_capacity(classes.len());
            for beta in &classes {
                let mut per_k = Vec::with_capacity(kmax + 1);
                for k in 0..=kmax {
                    let f = vertex_factor(w, beta, val + k)?;
                    per_k.push(f.scale(&BigRat::from_integer(factorial(k)).recip()));
                }
                per_class.push(per_k);
            }
            entries.push(per_class);
        }
        Ok(FactorTable {
            classes,
            kmax,
            entries,
        })
    }
}

struct Walk<'a> {
    table: &'a FactorTable,
    valency: Vec<usize>,
    // suffix sums of `needs`; vertices are in ascending valency order, so
    // the largest needs come first
    need_suffix: Vec<usize>,
    needs: Vec<usize>,
    kmax: usize,
    dmax: &'a [usize],
    acc: MultiSeries,
}

fn tree_contribution(
    table: &FactorTable,
    grading: &Grading,
    tree: &Tree,
    kmax: usize,
    dmax: &[usize],
) -> Result<MultiSeries> {
    let mut valency: Vec<usize> = (0..tree.vcount()).map(|v| tree.valency(v)).collect();
    valency.sort_unstable();
    let needs: Vec<usize> = valency.iter().map(|&v| 3usize.saturating_sub(v)).collect();
    let mut need_suffix = vec![0; needs.len() + 1];
    for i in (0..needs.len()).rev() {
        need_suffix[i] = need_suffix[i + 1] + needs[i];
    }
    let acc = MultiSeries::zero(grading, kmax, dmax)?;
    let mut walk = Walk {
        table,
        valency,
        need_suffix,
        needs,
        kmax,
        dmax,
        acc,
    };
    let used = vec![0; dmax.len()];
    walk.visit(0, 0, &used, RatFunc::one())?;
    Ok(walk.acc)
}

impl Walk<'_> {
    fn visit(&mut self, i: usize, k_used: usize, d_used: &[usize], prod: RatFunc) -> Result<()> {
        let n = self.valency.len();
        if i == n {
            let cur = self.acc.coeff(k_used, d_used)?.clone();
            self.acc.set_coeff(k_used, d_used, &cur + &prod)?;
            return Ok(());
        }
        let k_left = self.kmax - k_used;
        let d_left: Vec<usize> = self.dmax.iter().zip(d_used).map(|(m, u)| m - u).collect();
        // Vertices excused from their label requirement by a nonzero class:
        // at most |d_left|₁ of them, best case the ones with the largest needs.
        let excused = d_left.iter().sum::<usize>().min(n - i);
        if self.need_suffix[i + excused] > k_left {
            return Ok(());
        }
        let val = self.valency[i];
        for (ci, beta) in self.table.classes.iter().enumerate() {
            if beta.iter().zip(&d_left).any(|(b, l)| b > l) {
                continue;
            }
            let zero_class = beta.iter().all(|&b| b == 0);
            let k_min = if zero_class { self.needs[i] } else { 0 };
            let next_d: Vec<usize> = d_used.iter().zip(beta).map(|(a, b)| a + b).collect();
            for k in k_min..=k_left.min(self.table.kmax) {
                let f = &self.table.entries[val][ci][k];
                if f.is_zero() {
                    continue;
                }
                self.visit(i + 1, k_used + k, &next_d, &prod * f)?;
            }
        }
        Ok(())
    }
}

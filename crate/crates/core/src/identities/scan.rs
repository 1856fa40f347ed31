//! Parallel accumulation helpers shared by the registry entries.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::Counter;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::polynomial::{q_integer_with_top, t_index, MultiPoly, T};

/// Keyed generating functions under construction.
#[derive(Debug, Default)]
pub(crate) struct Sink {
    map: HashMap<u64, HashMap<Vec<u32>, i64>>,
}

impl Sink {
    pub(crate) fn add(&mut self, key: u64, exps: Vec<u32>) {
        self.add_weighted(key, exps, 1);
    }

    pub(crate) fn add_weighted(&mut self, key: u64, exps: Vec<u32>, coeff: i64) {
        *self.map.entry(key).or_default().entry(exps).or_insert(0) += coeff;
    }

    fn merge(mut self, other: Sink) -> Sink {
        for (key, terms) in other.map {
            let slot = self.map.entry(key).or_default();
            for (exps, c) in terms {
                *slot.entry(exps).or_insert(0) += c;
            }
        }
        self
    }
}

#[derive(Debug)]
pub(crate) struct Sums {
    polys: BTreeMap<u64, MultiPoly>,
    pub(crate) count: u64,
}

impl Sums {
    pub(crate) fn get(&self, key: u64) -> MultiPoly {
        self.polys.get(&key).cloned().unwrap_or_default()
    }
}

/// Runs `f` on every element and sums what it emits, per key.
pub(crate) fn par_sums<I, F>(elements: I, f: F) -> Result<Sums>
where
    I: ParallelIterator<Item = Permutation>,
    F: Fn(&Permutation, &mut Sink) -> Result<()> + Sync + Send,
{
    let (sink, count) = elements
        .try_fold(
            || (Sink::default(), 0u64),
            |(mut sink, count), pi| {
                f(&pi, &mut sink)?;
                Ok::<_, Error>((sink, count + 1))
            },
        )
        .try_reduce(
            || (Sink::default(), 0u64),
            |(a, ca), (b, cb)| Ok((a.merge(b), ca + cb)),
        )?;
    let mut polys = BTreeMap::new();
    for (key, terms) in sink.map {
        polys.insert(key, MultiPoly::from_terms(terms)?);
    }
    Ok(Sums { polys, count })
}

/// Evaluates one boolean per label on every element; the first failing
/// element (in iteration order) is named in each counter.
pub(crate) fn par_check<I, F>(elements: I, labels: &[&str], f: F) -> Result<(Vec<Counter>, u64)>
where
    I: ParallelIterator<Item = Permutation>,
    F: Fn(&Permutation) -> Result<Vec<bool>> + Sync + Send,
{
    let results: Vec<Option<(Permutation, Vec<bool>)>> = elements
        .map(|pi| -> Result<_> {
            let oks = f(&pi)?;
            debug_assert_eq!(oks.len(), labels.len());
            Ok((!oks.iter().all(|&ok| ok)).then_some((pi, oks)))
        })
        .collect::<Result<_>>()?;
    let mut counters: Vec<Counter> = labels.iter().map(|&l| Counter::new(l)).collect();
    let total = results.len() as u64;
    for c in counters.iter_mut() {
        c.total = total;
        c.good = total;
    }
    for (pi, oks) in results.into_iter().flatten() {
        for (c, ok) in counters.iter_mut().zip(oks) {
            if !ok {
                c.good -= 1;
                if c.first_bad.is_none() {
                    c.first_bad = Some(pi.to_string());
                }
            }
        }
    }
    Ok((counters, total))
}

/// `prod_{j=1}^{n-1} (1 + q + ... + q^{j-1} + coeff q^j t)`.
pub(crate) fn staircase_product(n: usize, coeff: i64) -> Result<MultiPoly> {
    (1..n).try_fold(MultiPoly::one(), |acc, j| {
        acc.try_mul(&q_integer_with_top(j, coeff, T))
    })
}

/// `prod_{j=1}^{n-1} (1 + q + ... + q^{j-1} + coeff q^j t_j)`.
pub(crate) fn staircase_product_multi(n: usize, coeff: i64) -> Result<MultiPoly> {
    (1..n).try_fold(MultiPoly::one(), |acc, j| {
        acc.try_mul(&q_integer_with_top(j, coeff, t_index(j)))
    })
}

/// `prod_{j=1}^{n-1} (coeff t_j + j)`.
pub(crate) fn epsilon_product(n: usize, coeff: i64) -> Result<MultiPoly> {
    (1..n).try_fold(MultiPoly::one(), |acc, j| {
        let factor = MultiPoly::t_var(j)
            .try_scale(coeff)?
            .try_add(&MultiPoly::constant(j as i64))?;
        acc.try_mul(&factor)
    })
}

/// Exponent vector `(q, t)`.
pub(crate) fn qt(q: usize, t: usize) -> Vec<u32> {
    vec![q as u32, t as u32]
}

/// Bitmask of a set of 1-based positions, bit `p - offset`.
pub(crate) fn mask(set: &[usize], offset: usize) -> u64 {
    set.iter().fold(0, |m, &p| m | 1 << (p - offset))
}

/// Elements of a bitmask as 1-based values, `offset` added back.
pub(crate) fn unmask(m: u64, offset: usize) -> Vec<usize> {
    (0..64)
        .filter(|b| m >> b & 1 == 1)
        .map(|b| b + offset)
        .collect()
}

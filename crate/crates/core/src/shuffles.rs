//! B-shuffles: recognition, lexicographic enumeration, block decomposition,
//! the deletion map `g_i`, and exhaustive shuffle sums.

use serde::Serialize;

use crate::canonical::s_canonical;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::polynomial::{t_index, MultiPoly};
use crate::statistics::{length_s, rmaj_s};

/// A degree `n` together with a set `B = {i_1 < ... < i_k}` of cut points
/// in `[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ShuffleSet {
    n: usize,
    b: Vec<usize>,
}

impl ShuffleSet {
    pub fn new(n: usize, b: &[usize]) -> Result<Self> {
        let mut b = b.to_vec();
        b.sort_unstable();
        b.dedup();
        if let Some(&bad) = b.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::OutOfRange {
                what: "shuffle cut point",
                got: bad,
                lo: 1,
                hi: n.saturating_sub(1),
            });
        }
        Ok(ShuffleSet { n, b })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[usize] {
        &self.b
    }

    /// Value blocks `[i_j + 1, i_{j+1}]` as inclusive 1-based ranges.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut bounds = vec![0];
        bounds.extend(&self.b);
        bounds.push(self.n);
        bounds.windows(2).map(|w| (w[0] + 1, w[1])).collect()
    }

    pub fn contains(&self, pi: &Permutation) -> bool {
        pi.degree() == self.n && is_b_shuffle(pi, &self.b)
    }

    pub fn enumerate(&self) -> Vec<Permutation> {
        let blocks = self.blocks();
        let mut next: Vec<usize> = blocks.iter().map(|b| b.0).collect();
        let mut current = Vec::with_capacity(self.n);
        let mut out = Vec::new();
        fill(&blocks, &mut next, &mut current, &mut out);
        out
    }

    /// `multinomial(n; block sizes)`.
    pub fn count(&self) -> u64 {
        let mut total = 1u64;
        let mut placed = 0u64;
        for (lo, hi) in self.blocks() {
            for k in 1..=(hi + 1 - lo) as u64 {
                placed += 1;
                total = total * placed / k;
            }
        }
        total
    }
}

/// Depth-first over block heads; trying heads in increasing value order
/// yields lexicographic output.
fn fill(
    blocks: &[(usize, usize)],
    next: &mut [usize],
    current: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    let mut progressed = false;
    for b in 0..blocks.len() {
        let v = next[b];
        if v > blocks[b].1 {
            continue;
        }
        progressed = true;
        next[b] += 1;
        current.push(v);
        fill(blocks, next, current, out);
        current.pop();
        next[b] -= 1;
    }
    if !progressed {
        out.push(Permutation::new(current).expect("block interleaving is a permutation"));
    }
}

/// Within every block of consecutive values cut at `B`, the letters appear
/// left to right in increasing order. Cut points outside `[n-1]` are
/// ignored.
pub fn is_b_shuffle(pi: &Permutation, b: &[usize]) -> bool {
    (1..pi.degree())
        .filter(|a| !b.contains(a))
        .all(|a| pi.position_of(a) < pi.position_of(a + 1))
}

pub fn enumerate_b_shuffles(n: usize, b: &[usize]) -> Result<Vec<Permutation>> {
    Ok(ShuffleSet::new(n, b)?.enumerate())
}

/// The `{i}`-shuffles of degree `n`.
pub fn i_shuffles(n: usize, i: usize) -> Result<Vec<Permutation>> {
    enumerate_b_shuffles(n, &[i])
}

/// Factors `pi = tau_1 ... tau_k` where `tau_j` is an `{i_j}`-shuffle fixing
/// everything above `i_{j+1}`. Factors are returned left to right at the
/// degree of `pi`.
pub fn decompose(pi: &Permutation, b: &[usize]) -> Result<Vec<Permutation>> {
    let set = ShuffleSet::new(pi.degree(), b)?;
    if !set.contains(pi) {
        return Err(Error::NotAShuffle {
            perm: pi.to_string(),
            set: set.cuts().to_vec(),
        });
    }
    let mut rest = pi.clone();
    let mut factors = Vec::with_capacity(set.cuts().len());
    for &cut in set.cuts().iter().rev() {
        // Positions carrying values <= cut get 1..=cut in increasing order.
        let mut small = 1;
        let tau_images: Vec<usize> = rest
            .one_line()
            .into_iter()
            .map(|v| {
                if v <= cut {
                    small += 1;
                    small - 1
                } else {
                    v
                }
            })
            .collect();
        let tau = Permutation::new(&tau_images)?;
        rest = &rest * &tau.inverse();
        factors.push(tau);
    }
    debug_assert!(rest.is_identity());
    factors.reverse();
    Ok(factors)
}

/// Deletes the letter `i + 1` and lowers every letter above it by one.
pub fn g_map(sigma: &Permutation, i: usize) -> Result<Permutation> {
    let n = sigma.degree();
    if i == 0 || i >= n {
        return Err(Error::OutOfRange {
            what: "i",
            got: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let images: Vec<usize> = sigma
        .one_line()
        .into_iter()
        .filter(|&v| v != i + 1)
        .map(|v| if v > i + 1 { v - 1 } else { v })
        .collect();
    Permutation::new(&images)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShuffleStat {
    Rmaj,
    Length,
}

/// Restriction on the first letter of `pi r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FirstLetter {
    Any,
    EqualsIPlusOne,
    EqualsPiOne,
}

fn check_support(pi: &Permutation, i: usize) -> Result<()> {
    let n = pi.degree();
    if i == 0 || i > n {
        return Err(Error::OutOfRange {
            what: "i",
            got: i,
            lo: 1,
            hi: n,
        });
    }
    if !pi.support_within(i) {
        return Err(Error::SupportViolation {
            perm: pi.to_string(),
            bound: i,
        });
    }
    Ok(())
}

fn shuffle_exponent(
    pi: &Permutation,
    pr: &Permutation,
    i: usize,
    stat: ShuffleStat,
) -> Result<i64> {
    let (after, before) = match stat {
        ShuffleStat::Rmaj => (rmaj_s(pr, pr.degree())?, rmaj_s(pi, i)?),
        ShuffleStat::Length => (length_s(pr), length_s(pi)),
    };
    Ok(after as i64 - before as i64)
}

fn to_exponent(e: i64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::NegativeExponent(e))
}

/// `sum q^{stat(pi r) - stat(pi)}` over the `{i}`-shuffles `r` of the degree
/// of `pi` whose product `pi r` passes the first-letter filter. For `rmaj`
/// the subtracted term is `rmaj_{S_i}(pi)`.
pub fn shuffle_sum(
    pi: &Permutation,
    i: usize,
    stat: ShuffleStat,
    first: FirstLetter,
) -> Result<MultiPoly> {
    check_support(pi, i)?;
    let n = pi.degree();
    let shuffles = if i == n {
        vec![Permutation::identity(n)]
    } else {
        i_shuffles(n, i)?
    };
    let mut terms = Vec::new();
    for r in &shuffles {
        let pr = pi * r;
        let keep = match first {
            FirstLetter::Any => true,
            FirstLetter::EqualsIPlusOne => pr.apply(1) == i + 1,
            FirstLetter::EqualsPiOne => pr.apply(1) == pi.apply(1),
        };
        if keep {
            terms.push((vec![to_exponent(shuffle_exponent(pi, &pr, i, stat)?)?], 1));
        }
    }
    MultiPoly::from_terms(terms)
}

/// `sum q^{stat(sigma r)} t^{eps(sigma r)}` over the `{i}`-shuffles `r`, with
/// `t^eps = prod_j t_j^{eps_j}`; `rmaj` is taken in the full degree.
pub fn shuffle_sum_eps(sigma: &Permutation, i: usize, stat: ShuffleStat) -> Result<MultiPoly> {
    check_support(sigma, i)?;
    let n = sigma.degree();
    let shuffles = if i == n {
        vec![Permutation::identity(n)]
    } else {
        i_shuffles(n, i)?
    };
    let mut terms = Vec::new();
    for r in &shuffles {
        let sr = sigma * r;
        let q = match stat {
            ShuffleStat::Rmaj => rmaj_s(&sr, n)?,
            ShuffleStat::Length => length_s(&sr),
        };
        terms.push((eps_exponents(q, &s_canonical(&sr).epsilon()), 1));
    }
    MultiPoly::from_terms(terms)
}

/// Exponent vector `(q, t, t_1, ..., t_{n-1})` with `t` unused.
pub(crate) fn eps_exponents(q: usize, eps: &[u8]) -> Vec<u32> {
    let mut exps = vec![0; t_index(eps.len()) + 1];
    exps[0] = q as u32;
    for (j, &e) in eps.iter().enumerate() {
        exps[t_index(j + 1)] = e as u32;
    }
    exps
}

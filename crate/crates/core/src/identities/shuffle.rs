//! Shuffle lemmas: recognition, decomposition, `g_i` and the shuffle sums.

use rayon::prelude::*;

use super::{invalid, Counter, Params, Tally};
use crate::canonical::s_canonical;
use crate::enumerate::{subsets, symmetric_group};
use crate::error::Result;
use crate::perm::Permutation;
use crate::polynomial::{q_binomial, MultiPoly};
use crate::shuffles::{
    decompose, eps_exponents, g_map, i_shuffles, is_b_shuffle, shuffle_sum, shuffle_sum_eps,
    FirstLetter, ShuffleSet, ShuffleStat,
};
use crate::statistics::{del_s, des_set_s, length_s, rmaj_s};

/// Cut points `lo..=hi`, or just `p.i`.
fn cut_range(name: &str, p: &Params, lo: usize, hi: usize) -> Result<Vec<usize>> {
    match p.i {
        Some(i) if i < lo || i > hi => Err(invalid(name, format!("i must lie in {lo}..={hi}"))),
        Some(i) => Ok(vec![i]),
        None => Ok((lo..=hi).collect()),
    }
}

/// The `{i}`-shuffles of degree `n`; only the identity when `i >= n`.
fn shuffles_or_identity(n: usize, i: usize) -> Result<Vec<Permutation>> {
    if i >= n {
        Ok(vec![Permutation::identity(n)])
    } else {
        i_shuffles(n, i)
    }
}

/// Pairs `(i, pi)` with `pi` in `S_i` embedded in `S_n`.
fn supported_pairs(n: usize, cuts: &[usize]) -> Result<Vec<(usize, Permutation)>> {
    let mut out = Vec::new();
    for &i in cuts {
        for pi in symmetric_group(i) {
            out.push((i, pi.embed(n)?));
        }
    }
    Ok(out)
}

/// One counter per label over all `(i, pi)` pairs.
fn check_pairs<F>(pairs: &[(usize, Permutation)], labels: &[&str], f: F) -> Result<Tally>
where
    F: Fn(usize, &Permutation) -> Result<(Vec<bool>, u64)> + Sync,
{
    let results: Vec<(Vec<bool>, u64)> = pairs
        .par_iter()
        .map(|(i, pi)| f(*i, pi))
        .collect::<Result<_>>()?;
    let mut counters: Vec<Counter> = labels.iter().map(|&l| Counter::new(l)).collect();
    let mut t = Tally::new();
    for ((i, pi), (oks, scanned)) in pairs.iter().zip(results) {
        t.scanned(scanned);
        for (c, ok) in counters.iter_mut().zip(oks) {
            c.check(ok, || format!("i={i} pi={pi}"));
        }
    }
    for c in counters {
        t.counter(c);
    }
    Ok(t)
}

/// One point per `(i, pi)` and side.
fn point_pairs<F>(pairs: &[(usize, Permutation)], names: &[&str], sides: F) -> Result<Tally>
where
    F: Fn(usize, &Permutation) -> Result<Vec<(MultiPoly, MultiPoly)>> + Sync,
{
    let results: Vec<Vec<(MultiPoly, MultiPoly)>> = pairs
        .par_iter()
        .map(|(i, pi)| sides(*i, pi))
        .collect::<Result<_>>()?;
    let mut t = Tally::new();
    for ((i, pi), sides) in pairs.iter().zip(results) {
        t.scanned(1);
        for (name, (lhs, rhs)) in names.iter().zip(sides) {
            t.point(|| format!("{name}: i={i} pi={pi}"), lhs, rhs);
        }
    }
    Ok(t)
}

pub(super) fn inverse_descents(p: &Params) -> Result<Tally> {
    let n = p.n;
    let cut_sets = subsets(&(1..n).collect::<Vec<_>>());
    let elements: Vec<Permutation> = symmetric_group(n).collect();
    let mut t = Tally::new();
    let mut recognition = Counter::new("B-shuffle iff Des(pi^-1) is inside B");
    let mut listing = Counter::new("enumeration lists exactly the B-shuffles");
    let per_set: Vec<(Vec<bool>, bool)> = cut_sets
        .par_iter()
        .map(|b| {
            let mut filtered = Vec::new();
            let oks = elements
                .iter()
                .map(|pi| {
                    let by_descents = des_set_s(&pi.inverse()).iter().all(|d| b.contains(d));
                    if by_descents {
                        filtered.push(pi.clone());
                    }
                    is_b_shuffle(pi, b) == by_descents
                })
                .collect();
            let listed = ShuffleSet::new(n, b).map(|s| s.enumerate() == filtered);
            Ok((oks, listed?))
        })
        .collect::<Result<_>>()?;
    for (b, (oks, listed)) in cut_sets.iter().zip(per_set) {
        for (pi, ok) in elements.iter().zip(oks) {
            recognition.check(ok, || format!("B={b:?} pi={pi}"));
        }
        listing.check(listed, || format!("B={b:?}"));
    }
    t.scanned((elements.len() * cut_sets.len()) as u64);
    t.counter(recognition);
    t.counter(listing);
    Ok(t)
}

pub(super) fn decomposition(p: &Params) -> Result<Tally> {
    let n = p.n;
    let labels = [
        "factors multiply back",
        "each factor is a single-cut shuffle inside its prefix",
        "del is additive",
        "eps has del(tau_j) at i_j and zeros elsewhere",
    ];
    let mut counters: Vec<Counter> = labels.iter().map(|&l| Counter::new(l)).collect();
    let mut t = Tally::new();
    for b in subsets(&(1..n).collect::<Vec<_>>()) {
        let shuffles = ShuffleSet::new(n, &b)?.enumerate();
        let results: Vec<Vec<bool>> = shuffles
            .par_iter()
            .map(|pi| {
                let factors = decompose(pi, &b)?;
                let product = factors
                    .iter()
                    .fold(Permutation::identity(n), |acc, f| &acc * f);
                let shapes = factors.iter().enumerate().all(|(j, tau)| {
                    let bound = b.get(j + 1).copied().unwrap_or(n);
                    is_b_shuffle(tau, &[b[j]]) && tau.support_within(bound)
                });
                let dels: Vec<usize> = factors.iter().map(del_s).collect();
                let mut want = vec![0u8; n.saturating_sub(1)];
                for (&cut, &d) in b.iter().zip(&dels) {
                    want[cut - 1] = d as u8;
                }
                Ok(vec![
                    factors.len() == b.len() && product == *pi,
                    shapes,
                    del_s(pi) == dels.iter().sum::<usize>(),
                    s_canonical(pi).epsilon() == want,
                ])
            })
            .collect::<Result<_>>()?;
        t.scanned(shuffles.len() as u64);
        for (pi, oks) in shuffles.iter().zip(results) {
            for (c, ok) in counters.iter_mut().zip(oks) {
                c.check(ok, || format!("B={b:?} pi={pi}"));
            }
        }
    }
    for c in counters {
        t.counter(c);
    }
    Ok(t)
}

pub(super) fn shuffle_binomial(p: &Params) -> Result<Tally> {
    let n = p.n;
    let pairs = supported_pairs(n, &cut_range("prop81", p, 1, n)?)?;
    point_pairs(&pairs, &["rmaj", "length"], |i, pi| {
        let rhs = q_binomial(n, i)?;
        Ok(vec![
            (
                shuffle_sum(pi, i, ShuffleStat::Rmaj, FirstLetter::Any)?,
                rhs.clone(),
            ),
            (
                shuffle_sum(pi, i, ShuffleStat::Length, FirstLetter::Any)?,
                rhs,
            ),
        ])
    })
}

pub(super) fn first_letter(p: &Params) -> Result<Tally> {
    let n = p.n;
    let pairs = supported_pairs(n, &cut_range("shuffle-first-letter", p, 1, n - 1)?)?;
    check_pairs(&pairs, &["(pi r)(1) is pi(1) or i+1"], |i, pi| {
        let shuffles = i_shuffles(n, i)?;
        let ok = shuffles.iter().all(|r| {
            let first = (pi * r).apply(1);
            first == pi.apply(1) || first == i + 1
        });
        Ok((vec![ok], shuffles.len() as u64))
    })
}

pub(super) fn g_bijection(p: &Params) -> Result<Tally> {
    let n = p.n;
    let cuts = cut_range("g-bijection", p, 1, n - 1)?;
    let everything: Vec<Permutation> = symmetric_group(n).collect();
    let mut t = Tally::new();
    let mut commute = Counter::new("pi g_i(sigma) = g_i(pi sigma)");
    let mut bijection =
        Counter::new("g_i maps the shuffles starting with i+1 onto S_(n-1) shuffles");
    for &i in &cuts {
        let pis: Vec<Permutation> = symmetric_group(i)
            .map(|pi| pi.embed(n))
            .collect::<Result<_>>()?;
        let small: Vec<Permutation> = pis
            .iter()
            .map(|pi| pi.restrict(n - 1))
            .collect::<Result<_>>()?;
        let oks: Vec<bool> = everything
            .par_iter()
            .map(|sigma| {
                let g = g_map(sigma, i)?;
                for (pi, pi_small) in pis.iter().zip(&small) {
                    if pi_small * &g != g_map(&(pi * sigma), i)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
            .collect::<Result<_>>()?;
        for (sigma, ok) in everything.iter().zip(oks) {
            commute.check(ok, || format!("i={i} sigma={sigma}"));
        }
        let mut images: Vec<Permutation> = i_shuffles(n, i)?
            .into_iter()
            .filter(|r| r.apply(1) == i + 1)
            .map(|r| g_map(&r, i))
            .collect::<Result<_>>()?;
        let count = images.len();
        images.sort();
        images.dedup();
        let mut target = shuffles_or_identity(n - 1, i)?;
        target.sort();
        bijection.check(count == images.len() && images == target, || {
            format!("i={i}")
        });
        t.scanned((everything.len() * pis.len() + count) as u64);
    }
    t.counter(commute);
    t.counter(bijection);
    Ok(t)
}

pub(super) fn g_rmaj(p: &Params) -> Result<Tally> {
    let n = p.n;
    let pairs = supported_pairs(n, &cut_range("g-rmaj", p, 1, n - 2)?)?;
    check_pairs(
        &pairs,
        &["r(2) = i+2 keeps rmaj", "r(2) = 1 adds n-1"],
        |i, pi| {
            let pi_small = pi.restrict(n - 1)?;
            let mut keep = true;
            let mut shift = true;
            let mut seen = 0;
            for r in i_shuffles(n, i)?.iter().filter(|r| r.apply(1) == i + 1) {
                seen += 1;
                let big = rmaj_s(&(pi * r), n)?;
                let small = rmaj_s(&(&pi_small * &g_map(r, i)?), n - 1)?;
                if r.apply(2) == i + 2 {
                    keep &= big == small;
                } else if r.apply(2) == 1 {
                    shift &= big == small + n - 1;
                }
            }
            Ok((vec![keep, shift], seen))
        },
    )
}

fn split_sums(name: &str, p: &Params, stat: ShuffleStat) -> Result<Tally> {
    let n = p.n;
    let pairs = supported_pairs(n, &cut_range(name, p, 1, n)?)?;
    point_pairs(
        &pairs,
        &["first letter i+1", "first letter pi(1)"],
        |i, pi| {
            let upper = q_binomial(n - 1, i)?.try_mul(&MultiPoly::q_pow(i as u32))?;
            let lower = q_binomial(n - 1, i - 1)?;
            Ok(vec![
                (
                    shuffle_sum(pi, i, stat, FirstLetter::EqualsIPlusOne)?,
                    upper,
                ),
                (shuffle_sum(pi, i, stat, FirstLetter::EqualsPiOne)?, lower),
            ])
        },
    )
}

pub(super) fn shuffle_shifted_binomial(p: &Params) -> Result<Tally> {
    split_sums("lemma86", p, ShuffleStat::Rmaj)
}

pub(super) fn shuffle_length_shift(p: &Params) -> Result<Tally> {
    split_sums("lemma87", p, ShuffleStat::Length)
}

/// Runs `f(i, r)` over every `{i}`-shuffle `r` of degree `n`.
fn check_shuffles<F>(name: &str, p: &Params, labels: &[&str], f: F) -> Result<Tally>
where
    F: Fn(usize, &Permutation) -> Vec<bool> + Sync,
{
    let n = p.n;
    let mut counters: Vec<Counter> = labels.iter().map(|&l| Counter::new(l)).collect();
    let mut t = Tally::new();
    for i in cut_range(name, p, 1, n - 1)? {
        let shuffles = i_shuffles(n, i)?;
        let results: Vec<Vec<bool>> = shuffles.par_iter().map(|r| f(i, r)).collect();
        t.scanned(shuffles.len() as u64);
        for (r, oks) in shuffles.iter().zip(results) {
            for (c, ok) in counters.iter_mut().zip(oks) {
                c.check(ok, || format!("i={i} r={r}"));
            }
        }
    }
    for c in counters {
        t.counter(c);
    }
    Ok(t)
}

pub(super) fn canonical_shape(p: &Params) -> Result<Tally> {
    check_shuffles(
        "shuffle-canonical-shape",
        p,
        &[
            "factors below i are empty",
            "factor lengths weakly decrease from i on",
        ],
        |i, r| {
            let word = s_canonical(r);
            let lengths: Vec<usize> = word
                .factors()
                .iter()
                .map(|f| f.map_or(0, |f| f.len()))
                .collect();
            vec![
                lengths[..i - 1].iter().all(|&l| l == 0),
                lengths[i - 1..].windows(2).all(|w| w[0] >= w[1]),
            ]
        },
    )
}

pub(super) fn delent(p: &Params) -> Result<Tally> {
    let n = p.n;
    check_shuffles(
        "shuffle-delent",
        p,
        &["del = 1 iff r(1) = i+1", "eps = e_i iff r(1) = i+1, else 0"],
        |i, r| {
            let starts = r.apply(1) == i + 1;
            let mut want = vec![0u8; n - 1];
            if starts {
                want[i - 1] = 1;
            }
            vec![
                del_s(r) == starts as usize,
                s_canonical(r).epsilon() == want,
            ]
        },
    )
}

pub(super) fn epsilon_additive(p: &Params) -> Result<Tally> {
    let n = p.n;
    let pairs = supported_pairs(n, &cut_range("shuffle-epsilon-additive", p, 1, n - 1)?)?;
    check_pairs(
        &pairs,
        &[
            "eps(pi r) = eps(pi) + eps(r)",
            "canonical word of pi r concatenates",
        ],
        |i, pi| {
            let pi_word = s_canonical(pi);
            let pi_eps = pi_word.epsilon();
            let shuffles = i_shuffles(n, i)?;
            let mut additive = true;
            let mut concat = true;
            for r in &shuffles {
                let r_word = s_canonical(r);
                let word = s_canonical(&(pi * r));
                let sum: Vec<u8> = pi_eps
                    .iter()
                    .zip(r_word.epsilon())
                    .map(|(a, b)| a + b)
                    .collect();
                additive &= word.epsilon() == sum;
                concat &= word.factors().iter().enumerate().all(|(idx, f)| {
                    let from = if idx + 1 < i {
                        pi_word.factors()[idx]
                    } else {
                        r_word.factors()[idx]
                    };
                    *f == from
                });
            }
            Ok((vec![additive, concat], shuffles.len() as u64))
        },
    )
}

pub(super) fn shuffle_epsilon_sum(p: &Params) -> Result<Tally> {
    let n = p.n;
    let pairs = supported_pairs(n, &cut_range("lemma93", p, 1, n)?)?;
    point_pairs(&pairs, &["length", "rmaj"], |i, sigma| {
        let factor = {
            let lower = q_binomial(n - 1, i - 1)?;
            let upper = q_binomial(n - 1, i)?
                .try_mul(&MultiPoly::q_pow(i as u32))?
                .try_mul(&MultiPoly::t_var(i))?;
            lower.try_add(&upper)?
        };
        let eps = s_canonical(sigma).epsilon();
        let base = |q: usize| MultiPoly::monomial(1, eps_exponents(q, &eps));
        Ok(vec![
            (
                shuffle_sum_eps(sigma, i, ShuffleStat::Length)?,
                base(length_s(sigma)).try_mul(&factor)?,
            ),
            (
                shuffle_sum_eps(sigma, i, ShuffleStat::Rmaj)?,
                base(rmaj_s(sigma, i)?).try_mul(&factor)?,
            ),
        ])
    })
}

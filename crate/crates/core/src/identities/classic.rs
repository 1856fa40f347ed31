//! Classical equidistribution results on `S_n`.

use rayon::prelude::*;

use super::scan::{mask, par_check, par_sums, unmask};
use super::{invalid, Params, Tally};
use crate::enumerate::{par_symmetric_group, subsets, symmetric_group};
use crate::error::{Error, Result};
use crate::perm::{hat, nu, Permutation};
use crate::polynomial::{q_binomial, q_factorial, MultiPoly};
use crate::shuffles::{i_shuffles, is_b_shuffle};
use crate::statistics::{des_set_s, length_s, maj_s, rmaj_of};

pub(super) fn macmahon(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        sink.add(0, vec![pi.inversions() as u32]);
        sink.add(1, vec![maj_s(pi) as u32]);
        Ok(())
    })?;
    let rhs = q_factorial(n)?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    t.point(|| "inv".into(), sums.get(0), rhs.clone());
    t.point(|| "maj".into(), sums.get(1), rhs);
    Ok(t)
}

pub(super) fn fs_fixed_descent(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let key = mask(&des_set_s(&pi.inverse()), 1) << 1;
        sink.add(key, vec![pi.inversions() as u32]);
        sink.add(key | 1, vec![maj_s(pi) as u32]);
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    for b in 0..1u64 << n.saturating_sub(1) {
        t.point(
            || format!("B={:?}", unmask(b, 1)),
            sums.get(b << 1),
            sums.get(b << 1 | 1),
        );
    }
    Ok(t)
}

/// Sum of the polynomials stored under every submask of `d` (key `sub * 4 + slot`).
fn submask_sum(sums: &super::scan::Sums, d: u64, slot: u64) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    let mut sub = d;
    loop {
        acc = acc.try_add(&sums.get(sub << 2 | slot))?;
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & d;
    }
    Ok(acc)
}

pub(super) fn fs_rmaj(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let des = des_set_s(pi);
        let key = mask(&des_set_s(&pi.inverse()), 1) << 2;
        sink.add(key, vec![pi.inversions() as u32]);
        sink.add(key | 1, vec![des.iter().sum::<usize>() as u32]);
        sink.add(key | 2, vec![rmaj_of(&des, n) as u32]);
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    for d in 0..1u64 << n.saturating_sub(1) {
        let inv = submask_sum(&sums, d, 0)?;
        let maj = submask_sum(&sums, d, 1)?;
        let rmaj = submask_sum(&sums, d, 2)?;
        t.point(|| format!("D1={:?}: maj", unmask(d, 1)), maj, inv.clone());
        t.point(|| format!("D1={:?}: rmaj", unmask(d, 1)), rmaj, inv);
    }
    Ok(t)
}

/// `sigma` acting on `k+1..=n` instead of `1..=n-k`.
fn shift_up(sigma: &Permutation, k: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=k).collect();
    images.extend(sigma.one_line().into_iter().map(|v| v + k));
    Permutation::new(&images).expect("shifted permutation")
}

/// The `{k}`-shuffles of degree `n`, where `k = 0` or `k = n` leaves only
/// the identity.
fn cut_shuffles(n: usize, k: usize) -> Result<Vec<Permutation>> {
    if k == 0 || k >= n {
        Ok(vec![Permutation::identity(n)])
    } else {
        i_shuffles(n, k)
    }
}

fn cuts(name: &str, p: &Params, hi: usize) -> Result<Vec<usize>> {
    match p.k {
        Some(k) if k == 0 || k > hi => Err(invalid(name, format!("k must lie in 1..={hi}"))),
        Some(k) => Ok(vec![k]),
        None => Ok((1..=hi).collect()),
    }
}

fn exponent(e: i64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::NegativeExponent(e))
}

/// Runs `weigh(k, pi1, pi2, r)` over all `pi1` in `S_k`, `pi2` acting on
/// `[k+1, n]` and `{k}`-shuffles `r`, one point per `(k, pi1, pi2)`.
fn two_block_sums<F>(name: &str, p: &Params, hi: usize, weigh: F) -> Result<Tally>
where
    F: Fn(usize, &Permutation, &Permutation, &Permutation) -> Result<i64> + Sync,
{
    let n = p.n;
    let mut t = Tally::new();
    for k in cuts(name, p, hi)? {
        let shuffles = cut_shuffles(n, k)?;
        let rhs = q_binomial(n, k)?;
        let pairs: Vec<(Permutation, Permutation)> = symmetric_group(k)
            .flat_map(|a| {
                let a = a.embed(n).expect("embedding");
                let blocks: Vec<_> = if k < n {
                    symmetric_group(n - k).map(|b| shift_up(&b, k)).collect()
                } else {
                    vec![Permutation::identity(n)]
                };
                blocks.into_iter().map(move |b| (a.clone(), b))
            })
            .collect();
        let results: Vec<MultiPoly> = pairs
            .par_iter()
            .map(|(a, b)| {
                let terms = shuffles
                    .iter()
                    .map(|r| Ok((vec![exponent(weigh(k, a, b, r)?)?], 1)))
                    .collect::<Result<Vec<_>>>()?;
                MultiPoly::from_terms(terms)
            })
            .collect::<Result<_>>()?;
        t.scanned((pairs.len() * shuffles.len()) as u64);
        for ((a, b), lhs) in pairs.iter().zip(results) {
            t.point(|| format!("k={k} pi1={a} pi2={b}"), lhs, rhs.clone());
        }
    }
    Ok(t)
}

pub(super) fn garsia_gessel(p: &Params) -> Result<Tally> {
    let n = p.n;
    let nus: Vec<Option<Permutation>> = (0..n).map(|k| nu(k, n).ok()).collect();
    two_block_sums("garsia-gessel", p, n.saturating_sub(1), |k, a, b, r| {
        let nu_k = nus[k].as_ref().expect("nu_k for k in [n-1]");
        let shifted = &(&nu_k.inverse() * b) * nu_k;
        let w = &(a * b) * r;
        Ok(maj_s(&w) as i64 - maj_s(a) as i64 - maj_s(&shifted) as i64)
    })
}

pub(super) fn shuffle_inversions(p: &Params) -> Result<Tally> {
    two_block_sums("shuffle-inversions", p, p.n, |_, a, b, r| {
        let w = &(a * b) * r;
        Ok(length_s(&w) as i64 - a.inversions() as i64 - b.inversions() as i64)
    })
}

pub(super) fn hat_involution(p: &Params) -> Result<Tally> {
    let n = p.n;
    let cut_sets = subsets(&(1..n).collect::<Vec<_>>());
    let (counters, scanned) = par_check(
        par_symmetric_group(n),
        &[
            "maj(hat) = rmaj",
            "inv(hat) = inv",
            "B-shuffle iff hat is an (n-B)-shuffle",
            "involution",
        ],
        |sigma| {
            let h = hat(sigma);
            let maj_ok = maj_s(&h) == rmaj_of(&des_set_s(sigma), n);
            let inv_ok = h.inversions() == sigma.inversions();
            let shuffle_ok = cut_sets.iter().all(|b| {
                let mirrored: Vec<usize> = b.iter().map(|&i| n - i).collect();
                is_b_shuffle(sigma, b) == is_b_shuffle(&h, &mirrored)
            });
            Ok(vec![maj_ok, inv_ok, shuffle_ok, hat(&h) == *sigma])
        },
    )?;
    let mut t = Tally::new();
    t.scanned(scanned);
    for c in counters {
        t.counter(c);
    }
    Ok(t)
}

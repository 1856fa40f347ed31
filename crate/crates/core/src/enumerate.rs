//! Exhaustive enumeration of `S_n` and `A_n` in lexicographic order.
//!
//! Ranks are Lehmer codes read in the factorial number system, so the range
//! `0..n!` can be split across rayon workers and unranked independently.

use rayon::prelude::*;

use crate::perm::Permutation;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of lexicographic rank `rank` in `S_n`.
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    debug_assert!(rank < factorial(n));
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut images = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let digit = (rank / f) as usize;
        rank %= f;
        images.push(pool.remove(digit));
    }
    Permutation::from_raw(images)
}

/// Lexicographic rank of `pi` within `S_n`.
pub fn rank(pi: &Permutation) -> u64 {
    let w = pi.raw();
    let n = w.len();
    let mut r = 0;
    for i in 0..n {
        let smaller_after = w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u64;
        r += smaller_after * factorial(n - 1 - i);
    }
    r
}

/// In-place lexicographic successor; returns `false` after the last element.
fn next_permutation(w: &mut [u8]) -> bool {
    let Some(i) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = w.iter().rposition(|&v| v > w[i]).expect("successor exists");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// All of `S_n` in lexicographic order.
pub fn symmetric_group(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<u8>> = Some((0..n as u8).collect());
    std::iter::from_fn(move || {
        let w = current.take()?;
        let mut next = w.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation::from_raw(w))
    })
}

/// All even permutations of degree `n`, lexicographic.
pub fn alternating_group(n: usize) -> impl Iterator<Item = Permutation> {
    symmetric_group(n).filter(Permutation::is_even)
}

pub fn par_symmetric_group(n: usize) -> impl ParallelIterator<Item = Permutation> {
    (0..factorial(n)).into_par_iter().map(move |r| unrank(n, r))
}

pub fn par_alternating_group(n: usize) -> impl ParallelIterator<Item = Permutation> {
    par_symmetric_group(n).filter(Permutation::is_even)
}

/// Every subset of `items`, each sorted ascending, ordered by bitmask.
pub fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

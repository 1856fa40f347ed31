//! Checks against independent brute-force oracles and worked examples.

use std::collections::{BTreeMap, HashSet};

use delent::canonical::{
    a_canonical, a_factor_set, epsilon_a, epsilon_s, parse_a_word, parse_s_word, s_canonical,
    s_factor_set, t_vector, ACanonicalWord, SCanonicalWord,
};
use delent::covering::{f_map, fiber};
use delent::enumerate::{alternating_group, factorial, subsets, symmetric_group};
use delent::identities::{verify, Params};
use delent::perm::Permutation;
use delent::polynomial::{q_binomial, q_factorial, MultiPoly};
use delent::shuffles::{enumerate_b_shuffles, g_map};
use delent::statistics::{
    del_a, del_s, del_set_a, del_set_s, des_set_a, des_set_a_by_length, des_set_s, h_map, hat_ell,
    length_a, ltr_minima, maj_s, rmaj_a, rmaj_s, ExclusionKind, MinVariant,
};

fn p(v: &[usize]) -> Permutation {
    Permutation::new(v).unwrap()
}

/// Products of all factor choices, built without the canonical procedures.
fn all_s_words(n: usize) -> Vec<SCanonicalWord> {
    let mut words = vec![Vec::new()];
    for j in 1..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                s_factor_set(j).into_iter().map(move |f| {
                    let mut w = w.clone();
                    w.push(f);
                    w
                })
            })
            .collect();
    }
    words
        .into_iter()
        .map(|f| SCanonicalWord::new(n, f).unwrap())
        .collect()
}

fn all_a_words(degree: usize) -> Vec<ACanonicalWord> {
    let mut words = vec![Vec::new()];
    for j in 1..degree - 1 {
        words = words
            .into_iter()
            .flat_map(|w| {
                a_factor_set(j).into_iter().map(move |f| {
                    let mut w = w.clone();
                    w.push(f);
                    w
                })
            })
            .collect();
    }
    words
        .into_iter()
        .map(|f| ACanonicalWord::new(degree, f).unwrap())
        .collect()
}

#[test]
fn factor_products_cover_each_group_once() {
    for n in 1..=6 {
        let words = all_s_words(n);
        assert_eq!(words.len() as u64, factorial(n));
        let mut seen = HashSet::new();
        for w in &words {
            let pi = w.to_permutation();
            assert_eq!(s_canonical(&pi), *w, "n={n}");
            assert!(seen.insert(pi));
        }
    }
    for degree in 2..=7 {
        let words = all_a_words(degree);
        assert_eq!(words.len() as u64, factorial(degree) / 2);
        assert_eq!(a_factor_set(1).len(), 3);
        let mut seen = HashSet::new();
        for w in &words {
            let v = w.to_permutation();
            assert!(v.is_even());
            assert_eq!(a_canonical(&v).unwrap(), *w, "degree={degree}");
            assert!(seen.insert(v));
        }
    }
}

/// Unsigned Stirling numbers of the first kind by their recurrence.
fn stirling(n: usize, k: usize) -> u64 {
    let mut c = vec![vec![0u64; n + 1]; n + 1];
    c[0][0] = 1;
    for m in 1..=n {
        for j in 1..=m {
            c[m][j] = c[m - 1][j - 1] + (m as u64 - 1) * c[m - 1][j];
        }
    }
    c[n][k]
}

#[test]
fn delent_distribution_against_stirling_recurrence() {
    for n in 1..=7 {
        let mut counts = vec![0u64; n];
        for pi in symmetric_group(n) {
            counts[del_s(&pi)] += 1;
        }
        for (l, &c) in counts.iter().enumerate() {
            assert_eq!(c, stirling(n, l + 1), "S n={n} l={l}");
        }
        let mut a_counts = vec![0u64; n];
        for v in alternating_group(n + 1) {
            a_counts[del_a(&v).unwrap()] += 1;
        }
        for (l, &c) in a_counts.iter().enumerate() {
            assert_eq!(c, (1u64 << l) * stirling(n, l + 1), "A n={n} l={l}");
        }
    }
}

#[test]
fn q_factorial_and_binomial_against_counting() {
    for n in 0..=7 {
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for pi in symmetric_group(n) {
            *counts.entry(pi.inversions() as u32).or_default() += 1;
        }
        let direct = MultiPoly::from_terms(counts.into_iter().map(|(e, c)| (vec![e], c))).unwrap();
        assert_eq!(q_factorial(n).unwrap(), direct);
    }
    // [n choose k]_q counts 0/1 words with k ones by inversions.
    for n in 0..=9 {
        for k in 0..=n {
            let mut terms = Vec::new();
            for ones in subsets(&(0..n).collect::<Vec<_>>())
                .into_iter()
                .filter(|s| s.len() == k)
            {
                let inv: usize = ones
                    .iter()
                    .map(|&i| (i + 1..n).filter(|j| !ones.contains(j)).count())
                    .sum();
                terms.push((vec![inv as u32], 1));
            }
            assert_eq!(
                q_binomial(n, k).unwrap(),
                MultiPoly::from_terms(terms).unwrap()
            );
        }
    }
}

#[test]
fn descent_sets_by_length_comparison() {
    for n in 1..=6 {
        for pi in symmetric_group(n) {
            let by_length: Vec<usize> = (1..n)
                .filter(|&i| {
                    let mut v = pi.one_line();
                    v.swap(i - 1, i);
                    pi.inversions() > p(&v).inversions()
                })
                .collect();
            assert_eq!(des_set_s(&pi), by_length);
        }
    }
    for degree in 2..=7 {
        for v in alternating_group(degree) {
            assert_eq!(
                des_set_a(&v).unwrap(),
                des_set_a_by_length(&v).unwrap(),
                "{v}"
            );
        }
    }
}

#[test]
fn fibers_partition_the_alternating_group() {
    for n in 1..=6 {
        let mut seen = HashSet::new();
        for w in symmetric_group(n) {
            let fib = fiber(&w);
            assert_eq!(fib.len(), 1 << del_s(&w));
            for v in fib {
                assert_eq!(f_map(&v).unwrap(), w);
                assert!(seen.insert(v));
            }
        }
        assert_eq!(seen.len() as u64, factorial(n + 1) / 2);
    }
}

#[test]
fn shuffle_counts_are_multinomial() {
    for n in 1..=7 {
        for b in subsets(&(1..n).collect::<Vec<_>>()) {
            let got = enumerate_b_shuffles(n, &b).unwrap();
            let mut bounds = vec![0];
            bounds.extend(&b);
            bounds.push(n);
            let want = bounds
                .windows(2)
                .fold(factorial(n), |acc, w| acc / factorial(w[1] - w[0]));
            assert_eq!(got.len() as u64, want);
        }
    }
}

#[test]
fn per_class_slices_reassemble_bivariate() {
    for n in 1..=6 {
        let mut by_class: BTreeMap<usize, Vec<(Vec<u32>, i64)>> = BTreeMap::new();
        let mut whole = Vec::new();
        for pi in symmetric_group(n) {
            let (l, d) = (pi.inversions() as u32, del_s(&pi) as u32);
            by_class.entry(d as usize).or_default().push((vec![l], 1));
            whole.push((vec![l, d], 1));
        }
        let whole = MultiPoly::from_terms(whole).unwrap();
        let mut rebuilt = MultiPoly::zero();
        for (k, terms) in by_class {
            let slice = MultiPoly::from_terms(terms).unwrap();
            assert_eq!(whole.coefficient_of(1, k as u32), slice);
            rebuilt = &rebuilt + &(&slice * &MultiPoly::monomial(1, vec![0, k as u32]));
        }
        assert_eq!(rebuilt, whole);
    }
}

/// Doubly restricted sums by direct filtering; checks the main theorem and
/// that enlarging either set never lowers a coefficient.
fn check_restricted(
    elements: &[(Vec<usize>, Vec<usize>, usize, usize)],
    d1_universe: Vec<usize>,
    d2_universe: Vec<usize>,
) {
    let d1s = subsets(&d1_universe);
    let d2s = subsets(&d2_universe);
    let sums = |d1: &[usize], d2: &[usize]| {
        let (mut r, mut l) = (Vec::new(), Vec::new());
        for (des, del, rmaj, len) in elements {
            if des.iter().all(|x| d1.contains(x)) && del.iter().all(|x| d2.contains(x)) {
                r.push((vec![*rmaj as u32], 1));
                l.push((vec![*len as u32], 1));
            }
        }
        (
            MultiPoly::from_terms(r).unwrap(),
            MultiPoly::from_terms(l).unwrap(),
        )
    };
    for d1 in &d1s {
        for d2 in &d2s {
            let (r, l) = sums(d1, d2);
            assert_eq!(r, l, "D1={d1:?} D2={d2:?}");
            for extra in d1_universe.iter().filter(|x| !d1.contains(x)) {
                let mut bigger = d1.clone();
                bigger.push(*extra);
                let (r2, _) = sums(&bigger, d2);
                assert!(r2.terms().all(|(m, c)| c >= r.coeff(m.exps())));
            }
            for extra in d2_universe.iter().filter(|x| !d2.contains(x)) {
                let mut bigger = d2.clone();
                bigger.push(*extra);
                let (r2, _) = sums(d1, &bigger);
                assert!(r2.terms().all(|(m, c)| c >= r.coeff(m.exps())));
            }
        }
    }
}

#[test]
fn main_theorem_by_direct_filtering() {
    for n in 1..=5 {
        let s: Vec<_> = symmetric_group(n)
            .map(|pi| {
                let inv = pi.inverse();
                (
                    des_set_s(&inv),
                    del_set_s(&inv),
                    rmaj_s(&pi, n).unwrap(),
                    pi.inversions(),
                )
            })
            .collect();
        check_restricted(&s, (1..n).collect(), (2..=n).collect());
    }
    for n in 1..=4 {
        let a: Vec<_> = alternating_group(n + 1)
            .map(|v| {
                let inv = v.inverse();
                (
                    des_set_a_by_length(&inv).unwrap(),
                    del_set_a(&inv).unwrap(),
                    rmaj_a(&v, n).unwrap(),
                    length_a(&v).unwrap(),
                )
            })
            .collect();
        check_restricted(&a, (1..n).collect(), (2..=n + 1).collect());
    }
}

#[test]
fn g_map_bijection_small_cases() {
    for n in 2..=6 {
        for i in 1..n - 1 {
            let mut images: Vec<_> = enumerate_b_shuffles(n, &[i])
                .unwrap()
                .into_iter()
                .filter(|r| r.apply(1) == i + 1)
                .map(|r| g_map(&r, i).unwrap())
                .collect();
            images.sort();
            let mut want = enumerate_b_shuffles(n - 1, &[i]).unwrap();
            want.sort();
            assert_eq!(images, want, "n={n} i={i}");
        }
    }
}

#[test]
fn worked_examples() {
    let w = p(&[2, 5, 4, 1, 3]);
    assert_eq!(s_canonical(&w).to_string(), "s1 | 1 | s3 s2 | s4 s3 s2");
    assert_eq!(w.inversions(), 6);
    assert_eq!(epsilon_s(&w), vec![1, 0, 0, 0]);
    assert_eq!(t_vector(&w), vec![1, 0, 2, 3]);

    let v = p(&[3, 5, 4, 2, 1]);
    assert_eq!(
        a_canonical(&v).unwrap().to_string(),
        "a1 | a2 a1^-1 | a3 a2 a1"
    );
    assert_eq!(length_a(&v).unwrap(), 6);
    assert_eq!(del_a(&v).unwrap(), 3);
    assert_eq!(epsilon_a(&v).unwrap(), vec![1, 1, 1]);
    assert_eq!(del_s(&v), 2);
    assert_eq!(del_set_s(&v), vec![4, 5]);
    // The letterwise image of the word above is s1 | s2 s1 | s3 s2 s1.
    assert_eq!(f_map(&v).unwrap(), p(&[4, 3, 2, 1]));
    assert_eq!(des_set_a(&v).unwrap(), des_set_s(&p(&[4, 3, 2, 1])));

    assert_eq!(del_s(&parse_s_word("s1 s2 s1 s3", None).unwrap()), 2);
    assert_eq!(
        del_a(&parse_a_word("a1^-1 a2 a1 a3 a2 a1^-1", None).unwrap()).unwrap(),
        3
    );
    assert_eq!(a_canonical(&p(&[2, 3, 1])).unwrap().to_string(), "a1");

    let x = p(&[3, 2, 7, 8, 4, 6, 1, 5]);
    let first = MinVariant::new(ExclusionKind::ExcludeFirstPositions, 0);
    let smallest = MinVariant::new(ExclusionKind::ExcludeSmallestValues, 0);
    assert_eq!(ltr_minima(&x, first), vec![2, 7]);
    assert_eq!(ltr_minima(&x, smallest), vec![1, 2]);

    assert_eq!(des_set_s(&p(&[3, 2, 1])), vec![1, 2]);
    assert_eq!(maj_s(&p(&[1, 3, 2])), 2);
    assert_eq!(rmaj_s(&p(&[1, 3, 2]), 3).unwrap(), 1);

    assert_eq!(h_map(&p(&[2, 3, 1]), 1).unwrap(), p(&[1, 3, 2]));
    assert_eq!(hat_ell(&p(&[2, 3, 1]), 1).unwrap(), 1);
    assert_eq!(h_map(&p(&[3, 1, 2]), 1).unwrap(), p(&[3, 1, 2]));
    assert_eq!(hat_ell(&p(&[3, 1, 2]), 1).unwrap(), 2);
}

#[test]
fn registry_examples() {
    let r = verify("thm61-s", &Params::new(3), false).unwrap();
    assert!(r.pass);
    let want = MultiPoly::from_terms([
        (vec![0, 0], 1),
        (vec![1, 0], 1),
        (vec![1, 1], 1),
        (vec![2, 1], 2),
        (vec![3, 2], 1),
    ])
    .unwrap();
    assert_eq!(r.lhs, want);
    assert_eq!(r.lhs.to_string(), "1 + q + q*t + 2*q^2*t + q^3*t^2");
    let r = verify("thm61-a", &Params::new(2), false).unwrap();
    assert!(r.pass);
    assert_eq!(r.lhs.to_string(), "1 + 2*q*t");
    let r = verify("appendix-hat", &Params::new(3).with_i(1), false).unwrap();
    assert!(r.pass);
    assert_eq!(r.lhs.to_string(), "1 + q + q^2");
}

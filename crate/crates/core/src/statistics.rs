//! Scalar and set-valued statistics on `S_n` and `A_{n+1}`.
//!
//! For an A-statistic the ambient parameter `n` is the one with `v` in
//! `A_{n+1}`, so `rmaj_a(v, n)` sums `n - i` over the A-descents of a
//! permutation of degree `n + 1`.

use serde::Serialize;

use crate::canonical::{a_canonical, s_canonical};
use crate::covering::f_map;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    S,
    A,
}

/// Which trivial minima are discarded so that the identity has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ExclusionKind {
    /// Skip positions `1..=level+1`.
    #[default]
    ExcludeFirstPositions,
    /// Skip positions holding the values `1..=level+1`.
    ExcludeSmallestValues,
}

/// Left-to-right minima allowing up to `level` smaller entries to the left:
/// level 0 is l.t.r.min, 1 is a.l.t.r.min, 2 is a.a.l.t.r.min.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MinVariant {
    pub kind: ExclusionKind,
    pub level: usize,
}

impl MinVariant {
    pub fn new(kind: ExclusionKind, level: usize) -> Self {
        MinVariant { kind, level }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatProfile {
    pub group: Group,
    pub n: usize,
    pub perm: Permutation,
    pub length: usize,
    pub des_set: Vec<usize>,
    pub des: usize,
    pub maj: usize,
    pub rmaj: usize,
    pub del: usize,
    pub del_set: Vec<usize>,
    pub epsilon: Vec<u8>,
}

/// Descent positions `i` (1-based) with `seq[i] > seq[i+1]`.
pub fn descent_set<T: Ord>(seq: &[T]) -> Vec<usize> {
    seq.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn maj_of(des: &[usize]) -> usize {
    des.iter().sum()
}

/// `sum (n - i)` over the descent set; every descent must be below `n`.
pub fn rmaj_of(des: &[usize], n: usize) -> usize {
    des.iter().map(|&i| n - i).sum()
}

/// Major index of an arbitrary sequence (repeated letters allowed).
pub fn seq_maj<T: Ord>(seq: &[T]) -> usize {
    maj_of(&descent_set(seq))
}

/// Reverse major index of a sequence with `n = seq.len()`.
pub fn seq_rmaj<T: Ord>(seq: &[T]) -> usize {
    rmaj_of(&descent_set(seq), seq.len())
}

pub fn length_s(pi: &Permutation) -> usize {
    pi.inversions()
}

pub fn des_set_s(pi: &Permutation) -> Vec<usize> {
    descent_set(pi.raw())
}

pub fn des_s(pi: &Permutation) -> usize {
    des_set_s(pi).len()
}

pub fn maj_s(pi: &Permutation) -> usize {
    maj_of(&des_set_s(pi))
}

/// `rmaj_{S_n}(pi)`. `n` may differ from the degree as long as `pi` lies in
/// `S_n` (for `n` below the degree, `pi` must fix `n+1..`).
pub fn rmaj_s(pi: &Permutation, n: usize) -> Result<usize> {
    if n == 0 || (n < pi.degree() && !pi.support_within(n)) {
        return Err(Error::SupportViolation {
            perm: pi.to_string(),
            bound: n,
        });
    }
    Ok(rmaj_of(&des_set_s(pi), n))
}

/// Qualifying positions, ascending.
pub fn ltr_minima(pi: &Permutation, variant: MinVariant) -> Vec<usize> {
    let b = pi.raw();
    let excluded = variant.level + 1;
    (0..b.len())
        .filter(|&i| b[..i].iter().filter(|&&x| x < b[i]).count() <= variant.level)
        .filter(|&i| match variant.kind {
            ExclusionKind::ExcludeFirstPositions => i + 1 > excluded,
            ExclusionKind::ExcludeSmallestValues => b[i] as usize + 1 > excluded,
        })
        .map(|i| i + 1)
        .collect()
}

/// Occurrences of `s_1` in the canonical S-word.
pub fn del_s(pi: &Permutation) -> usize {
    s_canonical(pi).epsilon().iter().map(|&e| e as usize).sum()
}

/// `Del_S(pi)`: l.t.r.min positions other than the first.
pub fn del_set_s(pi: &Permutation) -> Vec<usize> {
    ltr_minima(pi, MinVariant::default())
}

fn require_even(v: &Permutation) -> Result<()> {
    if v.degree() < 2 {
        return Err(Error::OutOfRange {
            what: "A-degree",
            got: v.degree(),
            lo: 2,
            hi: crate::perm::MAX_DEGREE,
        });
    }
    if !v.is_even() {
        return Err(Error::OddPermutation(v.to_string()));
    }
    Ok(())
}

pub fn length_a(v: &Permutation) -> Result<usize> {
    Ok(a_canonical(v)?.len())
}

/// `Des_A(v)`, computed as `Des_S(f(v))`.
pub fn des_set_a(v: &Permutation) -> Result<Vec<usize>> {
    Ok(des_set_s(&f_map(v)?))
}

/// `Des_A(v) = { 1 <= i <= n-1 : l_A(v) >= l_A(v a_i) }`, straight from the
/// definition.
pub fn des_set_a_by_length(v: &Permutation) -> Result<Vec<usize>> {
    let base = length_a(v)?;
    let n = v.degree() - 1;
    let mut out = Vec::new();
    for i in 1..n {
        let mut va = v.clone();
        va.swap_positions(1);
        va.swap_positions(i + 1);
        if base >= length_a(&va)? {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn des_a(v: &Permutation) -> Result<usize> {
    Ok(des_set_a(v)?.len())
}

pub fn maj_a(v: &Permutation) -> Result<usize> {
    Ok(maj_of(&des_set_a(v)?))
}

/// `rmaj_{A_{n+1}}(v)`; `n + 1` must be the degree of `v`.
pub fn rmaj_a(v: &Permutation, n: usize) -> Result<usize> {
    if v.degree() != n + 1 {
        return Err(Error::DegreeMismatch {
            left: v.degree(),
            right: n + 1,
        });
    }
    Ok(rmaj_of(&des_set_a(v)?, n))
}

/// Occurrences of `a_1^{±1}` in the canonical A-word.
pub fn del_a(v: &Permutation) -> Result<usize> {
    Ok(a_canonical(v)?.epsilon().iter().map(|&e| e as usize).sum())
}

/// `Del_A(v)`: a.l.t.r.min positions other than the first two.
pub fn del_set_a(v: &Permutation) -> Result<Vec<usize>> {
    require_even(v)?;
    Ok(ltr_minima(
        v,
        MinVariant::new(ExclusionKind::ExcludeFirstPositions, 1),
    ))
}

fn check_position(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::OutOfRange {
            what: "i",
            got: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `h_i(pi) = s_i pi` when `i` is a descent of `pi^{-1}` (that is, `i + 1`
/// stands left of `i`), otherwise `pi`.
pub fn h_map(pi: &Permutation, i: usize) -> Result<Permutation> {
    check_position(i, pi.degree())?;
    let mut out = pi.clone();
    if pi.position_of(i) > pi.position_of(i + 1) {
        out.swap_values(i);
    }
    Ok(out)
}

pub fn hat_ell(pi: &Permutation, i: usize) -> Result<usize> {
    Ok(length_s(&h_map(pi, i)?))
}

pub fn hat_maj(pi: &Permutation, i: usize) -> Result<usize> {
    Ok(maj_s(&h_map(pi, i)?))
}

pub fn stat_profile_s(pi: &Permutation) -> StatProfile {
    let n = pi.degree();
    let des_set = des_set_s(pi);
    let word = s_canonical(pi);
    let epsilon = word.epsilon();
    StatProfile {
        group: Group::S,
        n,
        perm: pi.clone(),
        length: word.len(),
        des: des_set.len(),
        maj: maj_of(&des_set),
        rmaj: rmaj_of(&des_set, n),
        des_set,
        del: epsilon.iter().map(|&e| e as usize).sum(),
        del_set: del_set_s(pi),
        epsilon,
    }
}

/// Profile of `v` in `A_{n+1}`; the reported `n` is `degree - 1`.
pub fn stat_profile_a(v: &Permutation) -> Result<StatProfile> {
    let word = a_canonical(v)?;
    let n = v.degree() - 1;
    let des_set = des_set_a(v)?;
    let epsilon = word.epsilon();
    Ok(StatProfile {
        group: Group::A,
        n,
        perm: v.clone(),
        length: word.len(),
        des: des_set.len(),
        maj: maj_of(&des_set),
        rmaj: rmaj_of(&des_set, n),
        des_set,
        del: epsilon.iter().map(|&e| e as usize).sum(),
        del_set: del_set_a(v)?,
        epsilon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::parse_a_word;
    use crate::canonical::parse_s_word;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(length_s(&Permutation::identity(5)), 0);
        assert_eq!(length_s(&p(&[2, 5, 4, 1, 3])), 6);
        for n in 1..=9 {
            let rev = crate::perm::rho(n);
            assert_eq!(length_s(&rev), n * (n - 1) / 2);
        }
    }

    #[test]
    fn descent_examples() {
        let w = p(&[3, 2, 1]);
        assert_eq!(des_set_s(&w), vec![1, 2]);
        assert_eq!(maj_s(&w), 3);
        assert_eq!(rmaj_s(&w, 3).unwrap(), 3);
        let id = Permutation::identity(4);
        assert!(des_set_s(&id).is_empty());
        assert_eq!(maj_s(&id), 0);
        assert_eq!(rmaj_s(&id, 4).unwrap(), 0);
        let w = p(&[1, 3, 2]);
        assert_eq!(maj_s(&w), 2);
        assert_eq!(rmaj_s(&w, 3).unwrap(), 1);
    }

    #[test]
    fn rmaj_over_a_smaller_ambient_group() {
        let pi = p(&[2, 1, 3, 4]);
        assert_eq!(rmaj_s(&pi, 2).unwrap(), 1);
        assert_eq!(rmaj_s(&pi, 4).unwrap(), 3);
        assert!(rmaj_s(&p(&[1, 3, 2, 4]), 2).is_err());
    }

    #[test]
    fn sequence_statistics_allow_repeats() {
        assert_eq!(descent_set(&[2, 2, 1, 3, 1]), vec![2, 4]);
        assert_eq!(seq_maj(&[2, 2, 1, 3, 1]), 6);
        assert_eq!(seq_rmaj(&[2, 2, 1, 3, 1]), 3 + 1);
    }

    #[test]
    fn minima_examples() {
        let w = p(&[3, 2, 7, 8, 4, 6, 1, 5]);
        let first = MinVariant::new(ExclusionKind::ExcludeFirstPositions, 0);
        let small = MinVariant::new(ExclusionKind::ExcludeSmallestValues, 0);
        assert_eq!(ltr_minima(&w, first), vec![2, 7]);
        assert_eq!(ltr_minima(&w, small), vec![1, 2]);
        let id = Permutation::identity(6);
        for level in 0..3 {
            for kind in [
                ExclusionKind::ExcludeFirstPositions,
                ExclusionKind::ExcludeSmallestValues,
            ] {
                assert!(ltr_minima(&id, MinVariant::new(kind, level)).is_empty());
            }
        }
    }

    #[test]
    fn delent_examples() {
        assert_eq!(del_s(&parse_s_word("s1 s2 s1 s3", None).unwrap()), 2);
        assert_eq!(del_s(&Permutation::identity(5)), 0);
        let w = p(&[3, 5, 4, 2, 1]);
        assert_eq!(del_s(&w), 2);
        assert_eq!(del_set_s(&w), vec![4, 5]);
        assert_eq!(length_s(&w) - length_a(&w).unwrap(), 2);
    }

    #[test]
    fn alternating_examples() {
        let v = p(&[3, 5, 4, 2, 1]);
        assert_eq!(length_a(&v).unwrap(), 6);
        assert!(des_set_a(&Permutation::identity(5)).unwrap().is_empty());
        assert!(des_set_a_by_length(&Permutation::identity(5))
            .unwrap()
            .is_empty());
        // f(v) = s_1 (s_2 s_1)(s_3 s_2 s_1) is the reversal of S_4.
        assert_eq!(des_set_a(&v).unwrap(), vec![1, 2, 3]);
        assert_eq!(des_set_a_by_length(&v).unwrap(), vec![1, 2, 3]);
        assert_eq!(rmaj_a(&v, 4).unwrap(), 6);
        assert!(rmaj_a(&v, 5).is_err());
        assert_eq!(
            del_a(&parse_a_word("a1^-1 a2 a1 a3 a2 a1^-1", None).unwrap()).unwrap(),
            3
        );
        assert_eq!(del_a(&Permutation::identity(4)).unwrap(), 0);
        assert_eq!(del_a(&v).unwrap(), 3);
        assert_eq!(del_set_a(&v).unwrap(), vec![3, 4, 5]);
        assert!(del_a(&p(&[2, 1, 3])).is_err());
    }

    #[test]
    fn appendix_map_examples() {
        let id = Permutation::identity(4);
        assert_eq!(h_map(&id, 2).unwrap(), id);
        assert_eq!(hat_ell(&id, 2).unwrap(), 0);
        assert_eq!(h_map(&p(&[2, 3, 1]), 1).unwrap(), p(&[1, 3, 2]));
        assert_eq!(hat_ell(&p(&[2, 3, 1]), 1).unwrap(), 1);
        assert_eq!(h_map(&p(&[3, 1, 2]), 1).unwrap(), p(&[3, 1, 2]));
        assert_eq!(hat_ell(&p(&[3, 1, 2]), 1).unwrap(), 2);
        assert!(h_map(&id, 4).is_err());
        assert!(h_map(&id, 0).is_err());
    }

    #[test]
    fn profiles() {
        let prof = stat_profile_s(&p(&[2, 5, 4, 1, 3]));
        assert_eq!(prof.length, 6);
        assert_eq!(prof.del, 1);
        assert_eq!(prof.des, prof.des_set.len());
        assert_eq!(prof.maj, prof.des_set.iter().sum::<usize>());
        let prof = stat_profile_a(&p(&[3, 5, 4, 2, 1])).unwrap();
        assert_eq!((prof.n, prof.length, prof.del, prof.rmaj), (4, 6, 3, 6));
        assert_eq!(prof.del, prof.del_set.len());
        let json = serde_json::to_string(&stat_profile_s(&Permutation::identity(3))).unwrap();
        assert_eq!(
            json,
            r#"{"group":"S","n":3,"perm":[1,2,3],"length":0,"des_set":[],"des":0,"maj":0,"rmaj":0,"del":0,"del_set":[],"epsilon":[0,0]}"#
        );
    }
}

//! Permutations of `[n]` in one-line notation.
//!
//! Composition is function composition, `(a * b)(k) = a(b(k))`. With this
//! convention right-multiplying by the adjacent transposition `s_i` swaps the
//! entries in positions `i` and `i + 1` of the one-line word, while
//! left-multiplying by `s_i` swaps the values `i` and `i + 1`.
//!
//! Every public index and value is 1-based.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest degree a [`Permutation`] can hold.
pub const MAX_DEGREE: usize = u8::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[p] = value at 1-based position p + 1, stored 0-based.
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `[pi(1), ..., pi(n)]`.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidDegree {
                got: n,
                max: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in one_line {
            if v == 0 || v > n {
                return Err(Error::Parse(format!("image {v} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Parse(format!("duplicate image {v}")));
            }
            images.push((v - 1) as u8);
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `pi(i)` for a 1-based position `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// The 1-based position holding `value`, i.e. `pi^{-1}(value)`.
    pub fn position_of(&self, value: usize) -> usize {
        self.images
            .iter()
            .position(|&v| v as usize + 1 == value)
            .expect("value within degree")
            + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (p, &v) in self.images.iter().enumerate() {
            inv[v as usize] = p as u8;
        }
        Permutation { images: inv }
    }

    /// Number of inversions `i < j` with `pi(i) > pi(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Positions `i` with `pi(i) != i`, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True when every moved point lies in `[bound]`.
    pub fn support_within(&self, bound: usize) -> bool {
        self.images
            .iter()
            .enumerate()
            .skip(bound)
            .all(|(i, &v)| i == v as usize)
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
            }
        }
        cycles
    }

    /// The image of `self` under `S_k -> S_n`, fixing `k+1..=n`.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.degree() || n > MAX_DEGREE {
            return Err(Error::OutOfRange {
                what: "embedding degree",
                got: n,
                lo: self.degree(),
                hi: MAX_DEGREE,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..n as u8);
        Ok(Permutation { images })
    }

    /// Drops the trailing fixed points `k+1..=n`; fails if one of them moves.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.degree() || !self.support_within(k) {
            return Err(Error::SupportViolation {
                perm: self.to_string(),
                bound: k,
            });
        }
        Ok(Permutation {
            images: self.images[..k].to_vec(),
        })
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i + 1`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i + 1`.
    pub(crate) fn swap_values(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for v in self.images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
}

fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&v| (v as usize) < seen.len() && !std::mem::replace(&mut seen[v as usize], true))
}

/// `(alpha * beta)(k) = alpha(beta(k))`.
pub fn compose(alpha: &Permutation, beta: &Permutation) -> Result<Permutation> {
    if alpha.degree() != beta.degree() {
        return Err(Error::DegreeMismatch {
            left: alpha.degree(),
            right: beta.degree(),
        });
    }
    Ok(Permutation {
        images: beta
            .images
            .iter()
            .map(|&b| alpha.images[b as usize])
            .collect(),
    })
}

/// Panics on a degree mismatch; use [`compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        compose(self, rhs).expect("permutations of equal degree")
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        &self * &rhs
    }
}

/// The adjacent transposition `s_i = (i, i+1)` in `S_n`.
pub fn transposition(i: usize, n: usize) -> Result<Permutation> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::OutOfRange {
            what: "generator index",
            got: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let mut p = Permutation::identity(n);
    p.swap_positions(i);
    Ok(p)
}

/// The reversal `rho_n = (1,n)(2,n-1)...`.
pub fn rho(n: usize) -> Permutation {
    assert!((1..=MAX_DEGREE).contains(&n), "degree {n} out of range");
    Permutation {
        images: (0..n as u8).rev().collect(),
    }
}

/// `nu_k = (1,k+1)(2,k+2)...(n-k,n)`, the transpositions composed right to
/// left. It sends `j` to `j + k` for every `j <= n - k`; when `2k >= n` the
/// factors are disjoint and `nu_k` is an involution.
pub fn nu(k: usize, n: usize) -> Result<Permutation> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "k",
            got: k,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let mut images: Vec<u8> = (0..n as u8).collect();
    // The rightmost transposition (n-k, n) acts first.
    for m in (0..n - k).rev() {
        for v in images.iter_mut() {
            if *v as usize == m {
                *v = (m + k) as u8;
            } else if *v as usize == m + k {
                *v = m as u8;
            }
        }
    }
    Ok(Permutation { images })
}

/// `hat(sigma) = rho_n sigma rho_n`.
pub fn hat(sigma: &Permutation) -> Permutation {
    let r = rho(sigma.degree());
    &(&r * sigma) * &r
}

/// Parses one-line notation such as `[2,5,4,1,3]` or `2, 5, 4, 1, 3`.
pub fn parse_one_line(text: &str) -> Result<Permutation> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .map(|s| s.strip_suffix(']'))
        .unwrap_or(Some(trimmed))
        .ok_or_else(|| Error::Parse(format!("unbalanced brackets in `{trimmed}`")))?;
    let mut values = Vec::new();
    for entry in inner.split(',') {
        let entry = entry.trim();
        let v = entry
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid entry `{entry}`")))?;
        values.push(v);
    }
    Permutation::new(&values)
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_one_line(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.images.iter().map(|&v| v as usize + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn right_multiplying_by_s_i_swaps_positions() {
        let s2 = transposition(2, 5).unwrap();
        assert_eq!(s2, p(&[1, 3, 2, 4, 5]));
        assert_eq!(
            compose(&p(&[2, 5, 4, 1, 3]), &s2).unwrap(),
            p(&[2, 4, 5, 1, 3])
        );
    }

    #[test]
    fn compose_examples() {
        let pi = p(&[2, 5, 4, 1, 3]);
        assert_eq!(&Permutation::identity(5) * &pi, pi);
        // s_1 s_2 = a_1 in S_3.
        assert_eq!(&p(&[2, 1, 3]) * &p(&[1, 3, 2]), p(&[2, 3, 1]));
        assert!(matches!(
            compose(&pi, &Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 5, right: 4 })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(p(&[2, 5, 4, 1, 3]).inverse(), p(&[4, 1, 5, 3, 2]));
    }

    #[test]
    fn parse_formats_and_errors() {
        assert_eq!(parse_one_line("[2,1]").unwrap().degree(), 2);
        assert_eq!(parse_one_line("2,5,4,1,3").unwrap(), p(&[2, 5, 4, 1, 3]));
        assert_eq!(parse_one_line(" [ 3, 1 ,2 ] ").unwrap(), p(&[3, 1, 2]));
        let err = parse_one_line("[1,1,2]").unwrap_err();
        assert_eq!(err.to_string(), "parse error: duplicate image 1");
        assert!(parse_one_line("[1,x]")
            .unwrap_err()
            .to_string()
            .contains("`x`"));
        assert!(parse_one_line("[1,4,2]")
            .unwrap_err()
            .to_string()
            .contains("4"));
        assert!(parse_one_line("[1,2").is_err());
        assert!(parse_one_line("").is_err());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(p(&[2, 1, 3]).sign(), -1);
        assert_eq!(p(&[2, 3, 1]).sign(), 1);
    }

    #[test]
    fn support_examples() {
        assert!(Permutation::identity(4).support().is_empty());
        assert_eq!(p(&[2, 1, 3, 4]).support(), vec![1, 2]);
        assert_eq!(p(&[1, 3, 2, 4]).support(), vec![2, 3]);
        assert!(p(&[2, 1, 3, 4]).support_within(2));
        assert!(!p(&[1, 3, 2, 4]).support_within(2));
    }

    #[test]
    fn involutions() {
        assert_eq!(rho(4), p(&[4, 3, 2, 1]));
        assert_eq!(nu(2, 4).unwrap(), p(&[3, 4, 1, 2]));
        assert_eq!(nu(3, 5).unwrap(), p(&[4, 5, 3, 1, 2]));
        assert_eq!(hat(&p(&[2, 1, 3])), p(&[1, 3, 2]));
        assert!(nu(0, 4).is_err());
        assert!(nu(4, 4).is_err());
    }

    #[test]
    fn nu_shifts_the_low_block() {
        for n in 2..=8 {
            for k in 1..n {
                let v = nu(k, n).unwrap();
                for j in 1..=n - k {
                    assert_eq!(v.apply(j), j + k, "nu({k},{n})");
                }
            }
        }
    }

    #[test]
    fn cycles_and_embedding() {
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
        assert_eq!(p(&[2, 3, 1, 4]).cycle_count(), 2);
        let e = p(&[2, 1]).embed(4).unwrap();
        assert_eq!(e, p(&[2, 1, 3, 4]));
        assert_eq!(e.restrict(2).unwrap(), p(&[2, 1]));
        assert!(p(&[1, 3, 2]).restrict(2).is_err());
    }

    #[test]
    fn display_and_json() {
        let pi = p(&[2, 5, 4, 1, 3]);
        assert_eq!(pi.to_string(), "[2,5,4,1,3]");
        assert_eq!(serde_json::to_string(&pi).unwrap(), "[2,5,4,1,3]");
    }
}

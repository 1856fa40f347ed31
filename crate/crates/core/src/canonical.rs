//! Canonical presentations of `S_n` over the Coxeter generators `s_i` and of
//! `A_{n+1}` over the generators `a_i = s_1 s_{i+1}`.
//!
//! An S-word is `w_1 ... w_{n-1}` with `w_j` one of `1, s_j, s_j s_{j-1}, ...,
//! s_j ... s_1`; an A-word is `v_1 ... v_{n-1}` with `v_j` one of `1, a_j, ...,
//! a_j ... a_2, a_j ... a_2 a_1, a_j ... a_2 a_1^{-1}` (`j + 2` choices).
//! Factors are stored structurally as `(j, r)` and never as letter lists.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The factor `s_j s_{j-1} ... s_r`, `1 <= r <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SFactor {
    pub j: usize,
    pub r: usize,
}

impl SFactor {
    pub fn len(&self) -> usize {
        self.j - self.r + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, k: usize) -> bool {
        self.r <= k && k <= self.j
    }

    /// Generator indices, left to right.
    pub fn letters(&self) -> impl Iterator<Item = usize> {
        (self.r..=self.j).rev()
    }
}

/// Final letter of a full-length A-factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TailLetter {
    A1,
    A1Inv,
}

/// A letter `a_index` or, for `index == 1` only, `a_1^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ALetter {
    pub index: usize,
    pub inverse: bool,
}

impl fmt::Display for ALetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "a{}^-1", self.index)
        } else {
            write!(f, "a{}", self.index)
        }
    }
}

/// `a_j a_{j-1} ... a_r` for `2 <= r <= j` (`last == None`), or
/// `a_j ... a_2 a_1^{±1}` for `r == 1` (`last` gives the sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AFactor {
    pub j: usize,
    pub r: usize,
    pub last: Option<TailLetter>,
}

impl AFactor {
    pub fn len(&self) -> usize {
        self.j - self.r + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether `a_k` (pooling `a_1^{±1}` for `k == 1`) occurs.
    pub fn contains(&self, k: usize) -> bool {
        self.r <= k && k <= self.j
    }

    pub fn letters(&self) -> impl Iterator<Item = ALetter> + '_ {
        (self.r..=self.j).rev().map(move |index| ALetter {
            index,
            inverse: index == 1 && self.last == Some(TailLetter::A1Inv),
        })
    }

    fn validate(&self, j: usize) -> Result<()> {
        let ok = self.j == j
            && match self.last {
                None => 2 <= self.r && self.r <= self.j,
                Some(_) => self.r == 1,
            };
        if ok {
            Ok(())
        } else {
            Err(Error::MalformedWord(format!(
                "A-factor {self:?} in slot {j}"
            )))
        }
    }
}

impl Serialize for AFactor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("j", &self.j)?;
        map.serialize_entry("r", &self.r)?;
        let last = self.last.map(|t| match t {
            TailLetter::A1 => "a1",
            TailLetter::A1Inv => "a1inv",
        });
        map.serialize_entry("last", &last)?;
        map.end()
    }
}

/// Canonical S-word of an element of `S_n`; `factors[j - 1]` is `w_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SCanonicalWord {
    n: usize,
    factors: Vec<Option<SFactor>>,
}

impl SCanonicalWord {
    pub fn new(n: usize, factors: Vec<Option<SFactor>>) -> Result<Self> {
        if n == 0 || factors.len() != n - 1 {
            return Err(Error::MalformedWord(format!(
                "{} factors for degree {n}",
                factors.len()
            )));
        }
        for (idx, f) in factors.iter().enumerate() {
            if let Some(f) = f {
                if f.j != idx + 1 || f.r == 0 || f.r > f.j {
                    return Err(Error::MalformedWord(format!(
                        "S-factor {f:?} in slot {}",
                        idx + 1
                    )));
                }
            }
        }
        Ok(SCanonicalWord { n, factors })
    }

    pub fn empty(n: usize) -> Self {
        SCanonicalWord {
            n,
            factors: vec![None; n.saturating_sub(1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Option<SFactor>] {
        &self.factors
    }

    /// `w_j`, `1 <= j <= n - 1`.
    pub fn factor(&self, j: usize) -> Option<SFactor> {
        self.factors[j - 1]
    }

    pub fn len(&self) -> usize {
        self.factors.iter().flatten().map(SFactor::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.iter().all(Option::is_none)
    }

    pub fn letters(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flatten()
            .flat_map(|f| f.letters())
            .collect()
    }

    pub fn occurrences(&self, k: usize) -> Result<usize> {
        check_generator(k, self.n)?;
        Ok(self
            .factors
            .iter()
            .flatten()
            .filter(|f| f.contains(k))
            .count())
    }

    /// `eps_j = 1` iff `s_1` occurs in `w_j`.
    pub fn epsilon(&self) -> Vec<u8> {
        self.factors
            .iter()
            .map(|f| matches!(f, Some(f) if f.r == 1) as u8)
            .collect()
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut pi = Permutation::identity(self.n);
        for i in self.letters() {
            pi.swap_positions(i);
        }
        pi
    }
}

impl fmt::Display for SCanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| match fac {
                None => "1".to_string(),
                Some(fac) => fac
                    .letters()
                    .map(|i| format!("s{i}"))
                    .collect::<Vec<_>>()
                    .join(" "),
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

impl Serialize for SCanonicalWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.factors.iter().flatten())
    }
}

/// Canonical A-word of an element of `A_{n+1}`; `factors[j - 1]` is `v_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ACanonicalWord {
    degree: usize,
    factors: Vec<Option<AFactor>>,
}

impl ACanonicalWord {
    /// `degree` is the degree `n + 1` of the permutations in `A_{n+1}`.
    pub fn new(degree: usize, factors: Vec<Option<AFactor>>) -> Result<Self> {
        if degree < 2 || factors.len() != degree - 2 {
            return Err(Error::MalformedWord(format!(
                "{} factors for A-degree {degree}",
                factors.len()
            )));
        }
        for (idx, f) in factors.iter().enumerate() {
            if let Some(f) = f {
                f.validate(idx + 1)?;
            }
        }
        Ok(ACanonicalWord { degree, factors })
    }

    pub fn empty(degree: usize) -> Self {
        ACanonicalWord {
            degree,
            factors: vec![None; degree.saturating_sub(2)],
        }
    }

    /// Degree `n + 1` of the ambient `A_{n+1}`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factors(&self) -> &[Option<AFactor>] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> Option<AFactor> {
        self.factors[j - 1]
    }

    pub fn len(&self) -> usize {
        self.factors.iter().flatten().map(AFactor::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.iter().all(Option::is_none)
    }

    pub fn letters(&self) -> Vec<ALetter> {
        self.factors
            .iter()
            .flatten()
            .flat_map(|f| f.letters())
            .collect()
    }

    /// Occurrences of `a_k`; for `k == 1` both `a_1` and `a_1^{-1}` count.
    pub fn occurrences(&self, k: usize) -> Result<usize> {
        check_generator(k, self.degree - 1)?;
        Ok(self
            .factors
            .iter()
            .flatten()
            .filter(|f| f.contains(k))
            .count())
    }

    /// `eps_j = 1` iff `a_1^{±1}` occurs in `v_j`.
    pub fn epsilon(&self) -> Vec<u8> {
        self.factors
            .iter()
            .map(|f| matches!(f, Some(f) if f.r == 1) as u8)
            .collect()
    }

    pub fn to_permutation(&self) -> Permutation {
        a_letters_to_perm(&self.letters(), self.degree)
    }
}

impl fmt::Display for ACanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fac| match fac {
                None => "1".to_string(),
                Some(fac) => fac
                    .letters()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

impl Serialize for ACanonicalWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.factors.iter().flatten())
    }
}

fn check_generator(k: usize, n: usize) -> Result<()> {
    if k == 0 || k + 1 > n {
        return Err(Error::OutOfRange {
            what: "generator index",
            got: k,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// S-procedure: repeatedly pull the largest unplaced value to its place on
/// the right; the pulled stretch `s_{m-1} ... s_p` is the factor `w_{m-1}`.
pub fn s_canonical(w: &Permutation) -> SCanonicalWord {
    let n = w.degree();
    let mut cur = w.raw().to_vec();
    let mut factors = vec![None; n - 1];
    for top in (2..=n).rev() {
        let p = cur[..top]
            .iter()
            .position(|&v| v as usize == top - 1)
            .expect("top value present");
        if p + 1 < top {
            factors[top - 2] = Some(SFactor {
                j: top - 1,
                r: p + 1,
            });
            cur[p..top].rotate_left(1);
        }
    }
    SCanonicalWord { n, factors }
}

/// A-procedure: as the S-procedure, but whenever the pulled stretch has odd
/// length an extra `s_1` restores parity by swapping the first two entries.
pub fn a_canonical(v: &Permutation) -> Result<ACanonicalWord> {
    let m = v.degree();
    if m < 2 {
        return Err(Error::OutOfRange {
            what: "A-degree",
            got: m,
            lo: 2,
            hi: crate::perm::MAX_DEGREE,
        });
    }
    if !v.is_even() {
        return Err(Error::OddPermutation(v.to_string()));
    }
    let mut cur = v.raw().to_vec();
    let mut factors = vec![None; m - 2];
    for top in (3..=m).rev() {
        let j = top - 2;
        let p = cur[..top]
            .iter()
            .position(|&x| x as usize == top - 1)
            .expect("top value present")
            + 1;
        let stretch = top - p;
        cur[p - 1..top].rotate_left(1);
        if stretch % 2 == 1 {
            cur.swap(0, 1);
        }
        factors[j - 1] = match p {
            _ if p == top => None,
            1 => Some(AFactor {
                j,
                r: 1,
                last: Some(TailLetter::A1Inv),
            }),
            2 => Some(AFactor {
                j,
                r: 1,
                last: Some(TailLetter::A1),
            }),
            _ => Some(AFactor {
                j,
                r: p - 1,
                last: None,
            }),
        };
    }
    debug_assert!(cur[..2] == [0, 1]);
    Ok(ACanonicalWord { degree: m, factors })
}

pub fn s_word_to_perm(word: &SCanonicalWord) -> Permutation {
    word.to_permutation()
}

pub fn a_word_to_perm(word: &ACanonicalWord) -> Permutation {
    word.to_permutation()
}

pub fn occurrences_s(word: &SCanonicalWord, k: usize) -> Result<usize> {
    word.occurrences(k)
}

pub fn occurrences_a(word: &ACanonicalWord, k: usize) -> Result<usize> {
    word.occurrences(k)
}

pub fn epsilon_s(w: &Permutation) -> Vec<u8> {
    s_canonical(w).epsilon()
}

pub fn epsilon_a(v: &Permutation) -> Result<Vec<u8>> {
    Ok(a_canonical(v)?.epsilon())
}

/// `(t_2(w), ..., t_{n+1}(w))` where `t_j` counts the `i < j` standing to the
/// right of `j` in one-line notation.
pub fn t_vector(w: &Permutation) -> Vec<usize> {
    let inv = w.inverse();
    let pos = inv.raw();
    (1..w.degree())
        .map(|j| (0..j).filter(|&i| pos[i] > pos[j]).count())
        .collect()
}

/// Product of letters `s_i` (right multiplication, left to right).
pub fn s_letters_to_perm(letters: &[usize], n: usize) -> Result<Permutation> {
    let mut pi = Permutation::identity(n);
    for &i in letters {
        check_generator(i, n)?;
        pi.swap_positions(i);
    }
    Ok(pi)
}

fn a_letters_to_perm(letters: &[ALetter], degree: usize) -> Permutation {
    let mut pi = Permutation::identity(degree);
    for l in letters {
        if l.inverse {
            // a_1^{-1} = s_2 s_1
            pi.swap_positions(2);
            pi.swap_positions(1);
        } else {
            pi.swap_positions(1);
            pi.swap_positions(l.index + 1);
        }
    }
    pi
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c.is_whitespace() || matches!(c, '|' | '(' | ')' | '*' | '.' | ','))
        .filter(|t| !t.is_empty() && *t != "1")
}

/// Evaluates a flat word such as `s1 s2 s1 s3` in `S_n`. Without an explicit
/// degree the smallest one containing every letter is used.
pub fn parse_s_word(text: &str, degree: Option<usize>) -> Result<Permutation> {
    let mut letters = Vec::new();
    for tok in tokens(text) {
        let idx = tok
            .strip_prefix('s')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&i| i > 0)
            .ok_or_else(|| Error::Parse(format!("invalid S-letter `{tok}`")))?;
        letters.push(idx);
    }
    let n = degree.unwrap_or_else(|| letters.iter().max().map_or(1, |m| m + 1));
    s_letters_to_perm(&letters, n)
}

/// Evaluates a flat word such as `a1^-1 a2 a1` in `A_{n+1}`; `degree` is
/// `n + 1`.
pub fn parse_a_word(text: &str, degree: Option<usize>) -> Result<Permutation> {
    let mut letters = Vec::new();
    for tok in tokens(text) {
        let bad = || Error::Parse(format!("invalid A-letter `{tok}`"));
        let body = tok.strip_prefix('a').ok_or_else(bad)?;
        let (digits, inverse) = match body.split_once('^') {
            Some((d, "-1")) => (d, true),
            Some(_) => return Err(bad()),
            None => (body, false),
        };
        let index = digits
            .parse::<usize>()
            .ok()
            .filter(|&i| i > 0)
            .ok_or_else(bad)?;
        if inverse && index != 1 {
            // a_i is an involution for i >= 2.
            letters.push(ALetter {
                index,
                inverse: false,
            });
        } else {
            letters.push(ALetter { index, inverse });
        }
    }
    let degree =
        degree.unwrap_or_else(|| letters.iter().map(|l| l.index).max().map_or(2, |m| m + 2));
    for l in &letters {
        check_generator(l.index, degree - 1)?;
    }
    Ok(a_letters_to_perm(&letters, degree))
}

/// The staircase set `R^S_j`: the empty factor and `s_j ... s_r`, `1 <= r <= j`.
pub fn s_factor_set(j: usize) -> Vec<Option<SFactor>> {
    std::iter::once(None)
        .chain((1..=j).rev().map(|r| Some(SFactor { j, r })))
        .collect()
}

/// The staircase set `R^A_j` (`j + 2` elements): the empty factor,
/// `a_j ... a_r` for `2 <= r <= j`, and `a_j ... a_2 a_1^{±1}`.
pub fn a_factor_set(j: usize) -> Vec<Option<AFactor>> {
    let mut out = vec![None];
    out.extend((2..=j).rev().map(|r| Some(AFactor { j, r, last: None })));
    for tail in [TailLetter::A1, TailLetter::A1Inv] {
        out.push(Some(AFactor {
            j,
            r: 1,
            last: Some(tail),
        }));
    }
    out
}

//! The covering map `f: A_{n+1} -> S_n`.
//!
//! `f` rewrites the canonical A-word letter by letter, `a_1^{±1} -> s_1` and
//! `a_i -> s_i`, and the result is already the canonical S-word of the image.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{
    a_canonical, s_canonical, ACanonicalWord, AFactor, SCanonicalWord, SFactor, TailLetter,
};
use crate::enumerate::par_alternating_group;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::statistics;

/// Letterwise image of an A-word.
pub fn project(word: &ACanonicalWord) -> SCanonicalWord {
    let factors = word
        .factors()
        .iter()
        .map(|f| f.map(|f| SFactor { j: f.j, r: f.r }))
        .collect();
    SCanonicalWord::new(word.degree() - 1, factors).expect("projection of a valid A-word")
}

pub fn f_map(v: &Permutation) -> Result<Permutation> {
    Ok(project(&a_canonical(v)?).to_permutation())
}

/// Lazily yields `f^{-1}(w)`: each `s_1` of the canonical word of `w` is
/// lifted to `a_1` or `a_1^{-1}`, so there are `2^{del_S(w)}` elements.
pub fn fiber_iter(w: &Permutation) -> impl Iterator<Item = Permutation> {
    let word = s_canonical(w);
    let branch_slots: Vec<usize> = word
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, f)| matches!(f, Some(f) if f.r == 1))
        .map(|(idx, _)| idx)
        .collect();
    let base: Vec<Option<AFactor>> = word
        .factors()
        .iter()
        .map(|f| {
            f.map(|f| AFactor {
                j: f.j,
                r: f.r,
                last: (f.r == 1).then_some(TailLetter::A1),
            })
        })
        .collect();
    let degree = w.degree() + 1;
    (0u64..1 << branch_slots.len()).map(move |mask| {
        let mut factors = base.clone();
        for (bit, &slot) in branch_slots.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                if let Some(f) = factors[slot].as_mut() {
                    f.last = Some(TailLetter::A1Inv);
                }
            }
        }
        ACanonicalWord::new(degree, factors)
            .expect("lift of a valid S-word")
            .to_permutation()
    })
}

/// `f^{-1}(w)`, sorted lexicographically.
pub fn fiber(w: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<_> = fiber_iter(w).collect();
    out.sort();
    out
}

/// Statistics taking part in f-pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Length,
    Des,
    Maj,
    Rmaj,
    Del,
}

impl Statistic {
    pub const ALL: [Statistic; 5] = [
        Statistic::Length,
        Statistic::Des,
        Statistic::Maj,
        Statistic::Rmaj,
        Statistic::Del,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Length => "length",
            Statistic::Des => "des",
            Statistic::Maj => "maj",
            Statistic::Rmaj => "rmaj",
            Statistic::Del => "del",
        }
    }

    /// S-side value on `w` in `S_n`, `n` the degree. Length, descents and
    /// the delent number are read from one-line notation.
    pub fn eval_s(self, w: &Permutation) -> usize {
        let n = w.degree();
        match self {
            Statistic::Length => statistics::length_s(w),
            Statistic::Des => statistics::des_s(w),
            Statistic::Maj => statistics::maj_s(w),
            Statistic::Rmaj => statistics::rmaj_of(&statistics::des_set_s(w), n),
            Statistic::Del => statistics::del_set_s(w).len(),
        }
    }

    /// A-side value on `v` in `A_{n+1}` from the A-word and the
    /// length-comparison definition of `Des_A`, never through `f`.
    pub fn eval_a(self, v: &Permutation) -> Result<usize> {
        let n = v.degree() - 1;
        Ok(match self {
            Statistic::Length => a_canonical(v)?.len(),
            Statistic::Des => statistics::des_set_a_by_length(v)?.len(),
            Statistic::Maj => statistics::maj_of(&statistics::des_set_a_by_length(v)?),
            Statistic::Rmaj => statistics::rmaj_of(&statistics::des_set_a_by_length(v)?, n),
            Statistic::Del => a_canonical(v)?.occurrences(1).unwrap_or(0),
        })
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "length" | "ell" | "inv" => Ok(Statistic::Length),
            "des" => Ok(Statistic::Des),
            "maj" => Ok(Statistic::Maj),
            "rmaj" => Ok(Statistic::Rmaj),
            "del" => Ok(Statistic::Del),
            _ => Err(Error::UnknownStatistic(s.to_string())),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FPairSpec {
    pub name: String,
    pub s_stat: Statistic,
    pub a_stat: Statistic,
}

impl FPairSpec {
    pub fn new(s_stat: Statistic, a_stat: Statistic) -> Self {
        FPairSpec {
            name: format!("({}_S, {}_A)", s_stat, a_stat),
            s_stat,
            a_stat,
        }
    }

    /// The five pairs `(m_S, m_A)` with the same statistic on both sides.
    pub fn standard() -> Vec<FPairSpec> {
        Statistic::ALL
            .iter()
            .map(|&s| FPairSpec::new(s, s))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FPairCounterexample {
    pub element: Permutation,
    pub image: Permutation,
    pub a_value: usize,
    pub s_value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FPairReport {
    pub pair: FPairSpec,
    pub n: usize,
    pub pass: bool,
    pub elements_scanned: u64,
    pub counterexample: Option<FPairCounterexample>,
}

/// Checks `a_stat(v) = s_stat(f(v))` for every `v` in `A_{n+1}`; the first
/// failure in lexicographic order is reported.
pub fn verify_f_pair(spec: &FPairSpec, n: usize) -> Result<FPairReport> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            got: n,
            lo: 1,
            hi: crate::perm::MAX_DEGREE - 1,
        });
    }
    let scan: Vec<Option<FPairCounterexample>> = par_alternating_group(n + 1)
        .map(|v| -> Result<Option<FPairCounterexample>> {
            let image = f_map(&v)?;
            let a_value = spec.a_stat.eval_a(&v)?;
            let s_value = spec.s_stat.eval_s(&image);
            Ok((a_value != s_value).then_some(FPairCounterexample {
                element: v,
                image,
                a_value,
                s_value,
            }))
        })
        .collect::<Result<_>>()?;
    let elements_scanned = scan.len() as u64;
    let counterexample = scan.into_iter().flatten().next();
    Ok(FPairReport {
        pair: spec.clone(),
        n,
        pass: counterexample.is_none(),
        elements_scanned,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::parse_s_word;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn f_examples() {
        assert_eq!(
            f_map(&Permutation::identity(5)).unwrap(),
            Permutation::identity(4)
        );
        assert_eq!(f_map(&p(&[2, 3, 1])).unwrap(), p(&[2, 1]));
        assert_eq!(f_map(&p(&[3, 1, 2])).unwrap(), p(&[2, 1]));
        let expected = parse_s_word("s1 s2 s1 s3 s2 s1", Some(4)).unwrap();
        assert_eq!(expected, p(&[4, 3, 2, 1]));
        assert_eq!(f_map(&p(&[3, 5, 4, 2, 1])).unwrap(), expected);
        assert!(f_map(&p(&[2, 1, 3])).is_err());
    }

    #[test]
    fn fiber_examples() {
        assert_eq!(
            fiber(&Permutation::identity(4)),
            vec![Permutation::identity(5)]
        );
        assert_eq!(fiber(&p(&[2, 1])), vec![p(&[2, 3, 1]), p(&[3, 1, 2])]);
        let big = fiber(&p(&[2, 5, 4, 1, 3]));
        assert_eq!(big.len(), 2);
        for v in &big {
            assert!(v.is_even());
            assert_eq!(f_map(v).unwrap(), p(&[2, 5, 4, 1, 3]));
        }
    }

    #[test]
    fn f_pair_examples() {
        let r = verify_f_pair(&FPairSpec::new(Statistic::Length, Statistic::Length), 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.elements_scanned, 60);
        let r = verify_f_pair(&FPairSpec::new(Statistic::Rmaj, Statistic::Rmaj), 4).unwrap();
        assert!(r.pass);
        let r = verify_f_pair(&FPairSpec::new(Statistic::Length, Statistic::Del), 3).unwrap();
        assert!(!r.pass);
        let c = r.counterexample.unwrap();
        assert_ne!(c.a_value, c.s_value);
        assert!("nope".parse::<Statistic>().is_err());
        assert_eq!("rmaj".parse::<Statistic>().unwrap(), Statistic::Rmaj);
    }
}

//! A registry of named identities, each checked by exhaustive enumeration.
//!
//! Every entry evaluates its two sides along separate code paths (a
//! statistic scan against a closed form, or two different statistic scans)
//! and compares the resulting polynomials exactly. Entries with several
//! parameter points (subsets, indices, individual elements) report the first
//! failing point, or the last point when everything passes.

mod classic;
mod delent;
mod main_theorem;
mod scan;
mod shuffle;
mod structure;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomial::MultiPoly;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl Params {
    pub fn new(n: usize) -> Self {
        Params {
            n,
            i: None,
            k: None,
        }
    }

    pub fn with_i(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(i) = self.i {
            write!(f, ";i={i}")?;
        }
        if let Some(k) = self.k {
            write!(f, ";k={k}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub pass: bool,
    /// Number of parameter points compared.
    pub points: u64,
    /// Label of the point whose sides are shown in `lhs` and `rhs`.
    pub point: String,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub failing_point: Option<String>,
    pub elements_scanned: u64,
    /// Wall-clock time in milliseconds; cleared by callers that need
    /// reproducible output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityInfo {
    pub name: &'static str,
    pub statement: &'static str,
    /// Meaning of `n` and of the optional `i`, `k`.
    pub params: &'static str,
    pub min_n: usize,
    pub default_n: usize,
    /// Largest `n` accepted without forcing.
    pub cap: usize,
}

type Check = fn(&Params) -> Result<Tally>;

struct Entry {
    info: IdentityInfo,
    check: Check,
}

const fn entry(
    name: &'static str,
    statement: &'static str,
    params: &'static str,
    (min_n, default_n, cap): (usize, usize, usize),
    check: Check,
) -> Entry {
    Entry {
        info: IdentityInfo {
            name,
            statement,
            params,
            min_n,
            default_n,
            cap,
        },
        check,
    }
}

const S_N: &str = "n: degree of S_n";
const A_N: &str = "n: the group is A_{n+1}";
const SHUFFLE_N: &str = "n: degree of S_n; i: optional cut point (all by default)";

static REGISTRY: &[Entry] = &[
    entry(
        "macmahon",
        "sum over S_n of q^inv = sum of q^maj = [n]!_q",
        S_N,
        (1, 5, 9),
        classic::macmahon,
    ),
    entry(
        "fs-fixed-descent",
        "inv and maj are equidistributed on each class Des(pi^-1) = B",
        S_N,
        (1, 5, 8),
        classic::fs_fixed_descent,
    ),
    entry(
        "fs-rmaj",
        "maj, rmaj and inv are equidistributed on each class Des(pi^-1) subset of D1",
        S_N,
        (1, 5, 8),
        classic::fs_rmaj,
    ),
    entry(
        "garsia-gessel",
        "maj over the shuffles of pi1 and pi2, shifted by maj(pi1) and maj of pi2 read on its letters, is [n choose k]_q",
        "n: degree of S_n; k: optional cut (all by default)",
        (2, 5, 7),
        classic::garsia_gessel,
    ),
    entry(
        "shuffle-inversions",
        "inv over the shuffles of pi1 and pi2, shifted by inv(pi1) + inv(pi2), is [n choose k]_q",
        "n: degree of S_n; k: optional cut (all by default)",
        (1, 5, 7),
        classic::shuffle_inversions,
    ),
    entry(
        "hat-involution",
        "conjugation by the reversal sends rmaj to maj, keeps inv and swaps {i}- with {n-i}-shuffles",
        S_N,
        (1, 5, 8),
        classic::hat_involution,
    ),
    entry(
        "thm61-s",
        "sum over S_n of q^l t^del = sum of q^rmaj t^del = prod (1+q+..+q^(j-1)+q^j t)",
        S_N,
        (1, 5, 9),
        delent::bivariate_s,
    ),
    entry(
        "thm61-a",
        "sum over A_{n+1} of q^l_A t^del_A = sum of q^rmaj_A t^del_A = prod (1+q+..+q^(j-1)+2q^j t)",
        A_N,
        (1, 4, 8),
        delent::bivariate_a,
    ),
    entry(
        "thm62-s",
        "l and rmaj are equidistributed on each class del_S = k in S_n",
        "n: degree of S_n; k: optional delent value (all by default)",
        (1, 5, 9),
        delent::per_class_s,
    ),
    entry(
        "thm62-a",
        "l_A and rmaj_A are equidistributed on each class del_A = k in A_{n+1}",
        "n: the group is A_{n+1}; k: optional delent value (all by default)",
        (1, 4, 8),
        delent::per_class_a,
    ),
    entry(
        "prop56",
        "sum of q^l t^del equals the product of the generating functions of the canonical factor sets",
        A_N,
        (1, 4, 8),
        delent::factor_products,
    ),
    entry(
        "prop57-stirling-s",
        "the number of elements of S_n with del = l is c(n, l+1)",
        S_N,
        (1, 5, 9),
        delent::stirling_s,
    ),
    entry(
        "prop57-stirling-a",
        "the number of elements of A_{n+1} with del_A = l is 2^l c(n, l+1)",
        A_N,
        (1, 4, 8),
        delent::stirling_a,
    ),
    entry(
        "prop510-multivar-s",
        "sum over S_n of q^l prod t_j^eps_j = prod (1+q+..+q^(j-1)+q^j t_j)",
        S_N,
        (1, 5, 8),
        delent::multivar_s,
    ),
    entry(
        "prop510-multivar-a",
        "sum over A_{n+1} of q^l_A prod t_j^eps_j = prod (1+q+..+q^(j-1)+2q^j t_j)",
        A_N,
        (1, 4, 8),
        delent::multivar_a,
    ),
    entry(
        "prop511-multivar",
        "at q = 1 the eps-vectors are counted by prod (t_j + j) on S_n and prod (2t_j + j) on A_{n+1}",
        A_N,
        (1, 4, 8),
        delent::eps_counting,
    ),
    entry(
        "f-pairs",
        "l, des, maj, rmaj and del on A_{n+1} agree with their S_n versions after f",
        A_N,
        (1, 4, 8),
        delent::f_pairs,
    ),
    entry(
        "f-pair-multivar",
        "for each f-pair, sum over A_{n+1} of q^m_A t^eps_A = sum over S_n of q^m_S (2t)^eps_S",
        A_N,
        (1, 4, 8),
        delent::f_pair_multivar,
    ),
    entry(
        "prop712-sk-occurrences",
        "occurrences of s_k are distributed as k!(kt+1)..(kt+n-k), so w(n,l,k) = k! k^l c(n-k+1, l+1)",
        "n: degree of S_n; k: optional generator index up to 4 (all by default)",
        (2, 5, 8),
        delent::sk_occurrences,
    ),
    entry(
        "fiber-size",
        "every fiber of f over S_n has 2^del_S elements and the fibers partition A_{n+1}",
        "n: degree of S_n",
        (1, 5, 8),
        delent::fiber_size,
    ),
    entry(
        "lemma63",
        "inserting a largest letter y into a word multiplies q^maj and q^rmaj by [n+1]_q (and by q[n]_q, [n]_q for the truncated sums)",
        "n: word length; all words over [n], y = n+1",
        (1, 4, 6),
        delent::insertion,
    ),
    entry(
        "lemma64",
        "right multiplication by the top canonical factor set multiplies q^maj and q^rmaj by [n+1]_q",
        "n: w ranges over S_n inside S_{n+1}",
        (1, 5, 8),
        delent::coset_maj,
    ),
    entry(
        "lemma65",
        "sum over the top factor set of q^rmaj t^del = q^rmaj(w) t^del(w) (1+..+q^(n-1)+t q^n)",
        "n: w ranges over S_n inside S_{n+1}",
        (1, 5, 8),
        delent::coset_rmaj_del,
    ),
    entry(
        "remark66",
        "without the longest factor the coset sum of q^rmaj is q^rmaj(w) [n]_q",
        "n: w ranges over S_n inside S_{n+1}",
        (1, 5, 8),
        delent::coset_truncated,
    ),
    entry(
        "prop67",
        "the coset decomposition of S_n reproduces sum q^rmaj t^del and its product formula",
        S_N,
        (2, 5, 8),
        delent::coset_product,
    ),
    entry(
        "occurrences-inverse",
        "s_i occurs as often in w as in w^-1, and likewise a_1^{+-1} in A_{n+1}",
        S_N,
        (1, 5, 8),
        structure::occurrences_inverse,
    ),
    entry(
        "a-length-drop",
        "l_A = l_S - del_S on A_{n+1}, factor by factor",
        A_N,
        (1, 4, 8),
        structure::a_length_drop,
    ),
    entry(
        "t-vector",
        "factor lengths of the canonical S-word are read off the one-line notation",
        S_N,
        (1, 5, 8),
        structure::t_vector_law,
    ),
    entry(
        "ltr-minima-del",
        "del_S(w) = |Del_S(w)| = del_S(w^-1), and both minima conventions count it on w^-1",
        S_N,
        (1, 5, 8),
        structure::ltr_minima_del,
    ),
    entry(
        "ltr-minima-epsilon",
        "Del_S(w^-1) = {i+1 : eps_i(w) = 1}",
        S_N,
        (1, 5, 8),
        structure::ltr_minima_epsilon,
    ),
    entry(
        "almost-minima-s2",
        "occurrences of s_2 equal the almost-left-to-right minima of w^-1 under both conventions",
        S_N,
        (1, 5, 8),
        structure::almost_minima_s2,
    ),
    entry(
        "almost-minima-del-a",
        "del_A(v) = |Del_A(v)| = del_A(v^-1), counted on v^-1 under both conventions",
        A_N,
        (1, 4, 8),
        structure::almost_minima_del_a,
    ),
    entry(
        "level-minima",
        "positions with at most k smaller earlier letters count the occurrences of s_(k+1)",
        "n: degree of S_n; k: optional level up to 3 (all by default)",
        (1, 5, 8),
        structure::level_minima,
    ),
    entry(
        "appendix-hat",
        "over A_n, q^l(h_i) and q^maj(h_i) both sum to prod_{j=3..n} [j]_q",
        "n: the group is A_n; i: optional index (all by default)",
        (2, 5, 9),
        structure::appendix_hat,
    ),
    entry(
        "shuffle-inverse-descents",
        "pi is a B-shuffle exactly when Des(pi^-1) is inside B, and the enumeration lists exactly these",
        S_N,
        (1, 5, 7),
        shuffle::inverse_descents,
    ),
    entry(
        "shuffle-decompose",
        "every B-shuffle factors uniquely into single-cut shuffles with additive del and eps",
        S_N,
        (1, 5, 7),
        shuffle::decomposition,
    ),
    entry(
        "prop81",
        "over the {i}-shuffles r, q^(rmaj(pi r) - rmaj_i(pi)) and q^(l(pi r) - l(pi)) both sum to [n choose i]_q",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::shuffle_binomial,
    ),
    entry(
        "shuffle-first-letter",
        "for supp(pi) in [i] and an {i}-shuffle r, (pi r)(1) is pi(1) or i+1",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::first_letter,
    ),
    entry(
        "g-bijection",
        "g_i commutes with pi and maps the {i}-shuffles starting with i+1 bijectively onto the {i}-shuffles of S_(n-1)",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::g_bijection,
    ),
    entry(
        "g-rmaj",
        "for r(1) = i+1, rmaj(pi r) equals rmaj(pi' r') when r(2) = i+2 and n-1 more when r(2) = 1",
        SHUFFLE_N,
        (3, 5, 7),
        shuffle::g_rmaj,
    ),
    entry(
        "lemma86",
        "the rmaj shuffle sum splits as q^i [n-1 choose i]_q (first letter i+1) plus [n-1 choose i-1]_q",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::shuffle_shifted_binomial,
    ),
    entry(
        "lemma87",
        "the length shuffle sum splits as q^i [n-1 choose i]_q (first letter i+1) plus [n-1 choose i-1]_q",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::shuffle_length_shift,
    ),
    entry(
        "shuffle-canonical-shape",
        "an {i}-shuffle has empty factors below i and weakly decreasing factor lengths from i on",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::canonical_shape,
    ),
    entry(
        "shuffle-delent",
        "an {i}-shuffle has del = 1 and eps = e_i exactly when it starts with i+1",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::delent,
    ),
    entry(
        "shuffle-epsilon-additive",
        "eps(pi r) = eps(pi) + eps(r) for supp(pi) in [i] and an {i}-shuffle r",
        SHUFFLE_N,
        (2, 5, 7),
        shuffle::epsilon_additive,
    ),
    entry(
        "lemma93",
        "sum over {i}-shuffles of q^stat(s r) t^eps(s r) = q^stat(s) t^eps(s) ([n-1 choose i-1]_q + t_i q^i [n-1 choose i]_q)",
        "n: degree of S_n; i: optional cut point in [n] (all by default)",
        (1, 5, 7),
        shuffle::shuffle_epsilon_sum,
    ),
    entry(
        "main-s",
        "rmaj and l are equidistributed on {Des(pi^-1) in D1, Del(pi^-1) in D2} for all D1, D2",
        S_N,
        (1, 5, 7),
        main_theorem::main_s,
    ),
    entry(
        "main-a",
        "rmaj_A and l_A are equidistributed on {Des_A(v^-1) in D1, Del_A(v^-1) in D2} for all D1, D2",
        A_N,
        (1, 4, 8),
        main_theorem::main_a,
    ),
    entry(
        "cor92-s",
        "sum of q1^rmaj q2^des(pi^-1) q3^del(pi^-1) = sum of q1^l q2^des(pi^-1) q3^del(pi^-1) over S_n",
        S_N,
        (1, 5, 8),
        main_theorem::trivariate_s,
    ),
    entry(
        "cor92-a",
        "sum of q1^rmaj_A q2^des_A(v^-1) q3^del_A(v^-1) = the same with l_A, over A_{n+1}",
        A_N,
        (1, 4, 8),
        main_theorem::trivariate_a,
    ),
];

/// The catalog, in registry order.
pub fn list_identities() -> Vec<IdentityInfo> {
    REGISTRY.iter().map(|e| e.info).collect()
}

pub fn info(name: &str) -> Result<IdentityInfo> {
    find(name).map(|e| e.info)
}

fn find(name: &str) -> Result<&'static Entry> {
    REGISTRY
        .iter()
        .find(|e| e.info.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Runs one identity check. `force` lifts the enumeration cap.
pub fn verify(name: &str, params: &Params, force: bool) -> Result<IdentityReport> {
    let entry = find(name)?;
    let info = entry.info;
    if params.n < info.min_n {
        return Err(Error::InvalidParams {
            identity: name.to_string(),
            reason: format!("n must be at least {}", info.min_n),
        });
    }
    if params.n > info.cap && !force {
        return Err(Error::CapExceeded {
            what: name.to_string(),
            n: params.n,
            cap: info.cap,
        });
    }
    let start = Instant::now();
    let tally = (entry.check)(params)?;
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(tally.into_report(name, *params, elapsed))
}

/// Runs every registry entry for each `n` from its minimum up to
/// `min(n_max, cap)`.
pub fn verify_all(n_max: usize) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for e in REGISTRY {
        for n in e.info.min_n..=n_max.min(e.info.cap) {
            out.push(verify(e.info.name, &Params::new(n), false)?);
        }
    }
    Ok(out)
}

pub(crate) fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::InvalidParams {
        identity: name.to_string(),
        reason: reason.into(),
    }
}

/// Accumulates compared points; keeps the first failure, otherwise the most
/// recent point.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    points: u64,
    scanned: u64,
    shown: Option<(String, MultiPoly, MultiPoly)>,
    failing: Option<String>,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Tally::default()
    }

    pub(crate) fn scanned(&mut self, count: u64) {
        self.scanned += count;
    }

    pub(crate) fn point(&mut self, label: impl FnOnce() -> String, lhs: MultiPoly, rhs: MultiPoly) {
        self.points += 1;
        if self.failing.is_some() {
            return;
        }
        let label = label();
        if lhs != rhs {
            self.failing = Some(label.clone());
        }
        self.shown = Some((label, lhs, rhs));
    }

    /// A count-style point: `lhs` is the number of cases satisfying the
    /// property, `rhs` the number of cases examined.
    pub(crate) fn counter(&mut self, counter: Counter) {
        let Counter {
            label,
            good,
            total,
            first_bad,
        } = counter;
        let shown = match &first_bad {
            Some(bad) => format!("{label}: {bad}"),
            None => label,
        };
        self.point(
            || shown,
            MultiPoly::constant(good as i64),
            MultiPoly::constant(total as i64),
        );
    }

    fn into_report(self, name: &str, params: Params, elapsed_ms: u64) -> IdentityReport {
        let (point, lhs, rhs) = self.shown.unwrap_or_else(|| {
            (
                "(no points)".to_string(),
                MultiPoly::zero(),
                MultiPoly::zero(),
            )
        });
        IdentityReport {
            identity: name.to_string(),
            params,
            pass: self.failing.is_none() && lhs == rhs,
            points: self.points,
            point,
            lhs,
            rhs,
            failing_point: self.failing,
            elements_scanned: self.scanned,
            elapsed_ms: Some(elapsed_ms),
        }
    }
}

/// Tracks how many cases satisfy a property and remembers the first that
/// does not.
#[derive(Debug)]
pub(crate) struct Counter {
    label: String,
    good: u64,
    total: u64,
    first_bad: Option<String>,
}

impl Counter {
    pub(crate) fn new(label: impl Into<String>) -> Self {
        Counter {
            label: label.into(),
            good: 0,
            total: 0,
            first_bad: None,
        }
    }

    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.good += 1;
        } else if self.first_bad.is_none() {
            self.first_bad = Some(describe());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_required_entries() {
        let names: Vec<_> = list_identities().iter().map(|i| i.name).collect();
        for want in [
            "macmahon",
            "main-s",
            "main-a",
            "appendix-hat",
            "thm61-s",
            "thm61-a",
        ] {
            assert!(names.contains(&want), "{want}");
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }

    #[test]
    fn unknown_and_capped() {
        assert_eq!(
            verify("nope", &Params::new(3), false),
            Err(Error::UnknownIdentity("nope".into()))
        );
        assert!(matches!(
            verify("macmahon", &Params::new(12), false),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn spec_examples() {
        let r = verify("thm61-s", &Params::new(3), false).unwrap();
        assert!(r.pass);
        let r = verify("thm61-a", &Params::new(2), false).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs.to_text(), "1 + 2*q*t");
        let r = verify("appendix-hat", &Params::new(3).with_i(1), false).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs.to_text(), "1 + q + q^2");
    }

    #[test]
    fn report_json_shape() {
        let mut r = verify("macmahon", &Params::new(2), false).unwrap();
        r.elapsed_ms = None;
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"identity":"macmahon","params":{"n":2},"pass":true,"points":2,"point":"maj","lhs":[{"coeff":1,"exps":[0,0]},{"coeff":1,"exps":[1,0]}],"rhs":[{"coeff":1,"exps":[0,0]},{"coeff":1,"exps":[1,0]}],"failing_point":null,"elements_scanned":2}"#
        );
    }
}

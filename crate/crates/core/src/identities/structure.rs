//! Structural laws of the canonical words and the minima statistics.

use super::scan::{par_check, par_sums};
use super::{invalid, Params, Tally};
use crate::canonical::{a_canonical, s_canonical, t_vector};
use crate::enumerate::{par_alternating_group, par_symmetric_group};
use crate::error::Result;
use crate::polynomial::{q_integer, MultiPoly};
use crate::statistics::{
    del_set_a, del_set_s, hat_ell, hat_maj, ltr_minima, ExclusionKind, MinVariant,
};

const KINDS: [ExclusionKind; 2] = [
    ExclusionKind::ExcludeFirstPositions,
    ExclusionKind::ExcludeSmallestValues,
];

fn counters_into_tally(counters: Vec<super::Counter>, scanned: u64) -> Tally {
    let mut t = Tally::new();
    t.scanned(scanned);
    for c in counters {
        t.counter(c);
    }
    t
}

/// Minima counts at `level` on `pi` and `pi^-1` under both conventions.
fn minima_counts(pi: &crate::perm::Permutation, level: usize) -> [usize; 4] {
    let inv = pi.inverse();
    let count = |x, kind| ltr_minima(x, MinVariant::new(kind, level)).len();
    [
        count(&inv, KINDS[0]),
        count(&inv, KINDS[1]),
        count(pi, KINDS[0]),
        count(pi, KINDS[1]),
    ]
}

pub(super) fn occurrences_inverse(p: &Params) -> Result<Tally> {
    let n = p.n;
    let (s, s_scanned) = par_check(par_symmetric_group(n), &["S: every s_i"], |w| {
        let (a, b) = (s_canonical(w), s_canonical(&w.inverse()));
        let ok = (1..n).all(|i| a.occurrences(i).ok() == b.occurrences(i).ok());
        Ok(vec![ok])
    })?;
    let (a, a_scanned) = par_check(par_alternating_group(n + 1), &["A: a_1^{+-1}"], |v| {
        let (x, y) = (a_canonical(v)?, a_canonical(&v.inverse())?);
        Ok(vec![x.occurrences(1).ok() == y.occurrences(1).ok()])
    })?;
    Ok(counters_into_tally(
        s.into_iter().chain(a).collect(),
        s_scanned + a_scanned,
    ))
}

pub(super) fn a_length_drop(p: &Params) -> Result<Tally> {
    let (counters, scanned) = par_check(
        par_alternating_group(p.n + 1),
        &["l_A = l_S - del_S", "l_A(v_i) = l_S(w_(i+1)) - eps_(i+1)"],
        |v| {
            let a_word = a_canonical(v)?;
            let s_word = s_canonical(v);
            let eps = s_word.epsilon();
            let total = a_word.len() + del_set_s(v).len() == v.inversions();
            let s_len = |j: usize| s_word.factors()[j - 1].map_or(0, |f| f.len());
            let first = s_len(1) == eps[0] as usize;
            let per_factor = a_word.factors().iter().enumerate().all(|(idx, f)| {
                let i = idx + 1;
                f.map_or(0, |f| f.len()) + eps[i] as usize == s_len(i + 1)
            });
            Ok(vec![total, first && per_factor])
        },
    )?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn t_vector_law(p: &Params) -> Result<Tally> {
    let (counters, scanned) = par_check(
        par_symmetric_group(p.n),
        &["l(w_j) = t_(j+1)", "t_(j+1) = j iff s_1 occurs in w_j"],
        |w| {
            let word = s_canonical(w);
            let t = t_vector(w);
            let eps = word.epsilon();
            let lengths = word
                .factors()
                .iter()
                .zip(&t)
                .all(|(f, &tj)| f.map_or(0, |f| f.len()) == tj);
            let full = t
                .iter()
                .enumerate()
                .all(|(idx, &tj)| (tj == idx + 1) == (eps[idx] == 1));
            Ok(vec![lengths, full])
        },
    )?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn ltr_minima_del(p: &Params) -> Result<Tally> {
    let (counters, scanned) = par_check(
        par_symmetric_group(p.n),
        &[
            "|Del(w)| = del(w)",
            "del(w) = del(w^-1)",
            "minima of w^-1, first-positions kind",
            "minima of w^-1, smallest-values kind",
            "minima of w, first-positions kind",
            "minima of w, smallest-values kind",
        ],
        |w| {
            let del = s_canonical(w).occurrences(1).unwrap_or(0);
            let del_inv = s_canonical(&w.inverse()).occurrences(1).unwrap_or(0);
            let mut oks = vec![del_set_s(w).len() == del, del == del_inv];
            oks.extend(minima_counts(w, 0).iter().map(|&c| c == del));
            Ok(oks)
        },
    )?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn ltr_minima_epsilon(p: &Params) -> Result<Tally> {
    let (counters, scanned) = par_check(
        par_symmetric_group(p.n),
        &["Del(w^-1) = {i+1 : eps_i(w) = 1}"],
        |w| {
            let want: Vec<usize> = s_canonical(w)
                .epsilon()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == 1)
                .map(|(i, _)| i + 2)
                .collect();
            Ok(vec![del_set_s(&w.inverse()) == want])
        },
    )?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn almost_minima_s2(p: &Params) -> Result<Tally> {
    let (counters, scanned) = par_check(
        par_symmetric_group(p.n),
        &[
            "almost minima of w^-1, first-positions kind",
            "almost minima of w^-1, smallest-values kind",
            "almost minima of w, first-positions kind",
            "almost minima of w, smallest-values kind",
        ],
        |w| {
            let occ = s_canonical(w).occurrences(2).unwrap_or(0);
            Ok(minima_counts(w, 1).iter().map(|&c| c == occ).collect())
        },
    )?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn almost_minima_del_a(p: &Params) -> Result<Tally> {
    let (counters, scanned) = par_check(
        par_alternating_group(p.n + 1),
        &[
            "|Del_A(v)| = del_A(v)",
            "del_A(v) = del_A(v^-1)",
            "almost minima of v^-1, first-positions kind",
            "almost minima of v^-1, smallest-values kind",
            "almost minima of v, first-positions kind",
            "almost minima of v, smallest-values kind",
        ],
        |v| {
            let del = a_canonical(v)?.occurrences(1).unwrap_or(0);
            let del_inv = a_canonical(&v.inverse())?.occurrences(1).unwrap_or(0);
            let mut oks = vec![del_set_a(v)?.len() == del, del == del_inv];
            oks.extend(minima_counts(v, 1).iter().map(|&c| c == del));
            Ok(oks)
        },
    )?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn level_minima(p: &Params) -> Result<Tally> {
    let levels: Vec<usize> = match p.k {
        Some(k) if k > 3 => return Err(invalid("level-minima", "k must lie in 0..=3")),
        Some(k) => vec![k],
        None => (0..=3).collect(),
    };
    let labels: Vec<String> = levels
        .iter()
        .flat_map(|k| {
            [
                format!("level {k}, w^-1, first-positions kind"),
                format!("level {k}, w^-1, smallest-values kind"),
                format!("level {k}, w, first-positions kind"),
                format!("level {k}, w, smallest-values kind"),
            ]
        })
        .collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let (counters, scanned) = par_check(par_symmetric_group(p.n), &label_refs, |w| {
        let word = s_canonical(w);
        Ok(levels
            .iter()
            .flat_map(|&k| {
                let occ = word.occurrences(k + 1).unwrap_or(0);
                minima_counts(w, k).map(|c| c == occ)
            })
            .collect())
    })?;
    Ok(counters_into_tally(counters, scanned))
}

pub(super) fn appendix_hat(p: &Params) -> Result<Tally> {
    let n = p.n;
    let indices: Vec<usize> = match p.i {
        Some(i) if i == 0 || i >= n => {
            return Err(invalid(
                "appendix-hat",
                format!("i must lie in 1..={}", n - 1),
            ))
        }
        Some(i) => vec![i],
        None => (1..n).collect(),
    };
    let sums = par_sums(par_alternating_group(n), |pi, sink| {
        for &i in &indices {
            let key = (i as u64) << 1;
            sink.add(key, vec![hat_ell(pi, i)? as u32]);
            sink.add(key | 1, vec![hat_maj(pi, i)? as u32]);
        }
        Ok(())
    })?;
    let rhs = (3..=n).try_fold(MultiPoly::one(), |acc, j| acc.try_mul(&q_integer(j)))?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    for &i in &indices {
        let key = (i as u64) << 1;
        t.point(|| format!("i={i}: hat length"), sums.get(key), rhs.clone());
        t.point(|| format!("i={i}: hat maj"), sums.get(key | 1), rhs.clone());
    }
    Ok(t)
}

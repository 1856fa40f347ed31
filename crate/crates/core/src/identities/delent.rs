//! Generating functions involving the delent number.

use std::collections::HashMap;

use rayon::prelude::*;

use super::scan::{
    epsilon_product, par_check, par_sums, qt, staircase_product, staircase_product_multi,
};
use super::{invalid, Counter, Params, Tally};
use crate::canonical::{a_canonical, a_factor_set, s_canonical, s_factor_set, s_letters_to_perm};
use crate::covering::{f_map, fiber, Statistic};
use crate::enumerate::{alternating_group, factorial, par_alternating_group, par_symmetric_group};
use crate::error::Result;
use crate::perm::Permutation;
use crate::polynomial::{q_integer, q_integer_with_top, MultiPoly, T};
use crate::shuffles::eps_exponents;
use crate::statistics::{
    del_set_a, del_set_s, des_set_a_by_length, des_set_s, maj_s, rmaj_of, seq_maj, seq_rmaj,
};

/// `del_S` counted as left-to-right minima.
fn del_s_minima(pi: &Permutation) -> usize {
    del_set_s(pi).len()
}

/// `rmaj_{A_{n+1}}` from the length-comparison descent set.
fn rmaj_a_by_length(v: &Permutation) -> Result<usize> {
    Ok(rmaj_of(&des_set_a_by_length(v)?, v.degree() - 1))
}

pub(super) fn bivariate_s(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let del = del_s_minima(pi);
        sink.add(0, qt(pi.inversions(), del));
        sink.add(1, qt(rmaj_of(&des_set_s(pi), n), del));
        Ok(())
    })?;
    let rhs = staircase_product(n, 1)?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    t.point(|| "length".into(), sums.get(0), rhs.clone());
    t.point(|| "rmaj".into(), sums.get(1), rhs);
    Ok(t)
}

pub(super) fn bivariate_a(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        let del = del_set_a(v)?.len();
        sink.add(0, qt(a_canonical(v)?.len(), del));
        sink.add(1, qt(rmaj_a_by_length(v)?, del));
        Ok(())
    })?;
    let rhs = staircase_product(n, 2)?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    t.point(|| "length".into(), sums.get(0), rhs.clone());
    t.point(|| "rmaj".into(), sums.get(1), rhs);
    Ok(t)
}

fn delent_classes(name: &str, p: &Params) -> Result<Vec<usize>> {
    let top = p.n.saturating_sub(1);
    match p.k {
        Some(k) if k > top => Err(invalid(name, format!("k must lie in 0..={top}"))),
        Some(k) => Ok(vec![k]),
        None => Ok((0..=top).collect()),
    }
}

pub(super) fn per_class_s(p: &Params) -> Result<Tally> {
    let n = p.n;
    let classes = delent_classes("thm62-s", p)?;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let key = (del_s_minima(pi) as u64) << 1;
        sink.add(key, vec![pi.inversions() as u32]);
        sink.add(key | 1, vec![rmaj_of(&des_set_s(pi), n) as u32]);
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    for k in classes {
        let key = (k as u64) << 1;
        t.point(|| format!("k={k}"), sums.get(key), sums.get(key | 1));
    }
    Ok(t)
}

pub(super) fn per_class_a(p: &Params) -> Result<Tally> {
    let n = p.n;
    let classes = delent_classes("thm62-a", p)?;
    let sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        let key = (del_set_a(v)?.len() as u64) << 1;
        sink.add(key, vec![a_canonical(v)?.len() as u32]);
        sink.add(key | 1, vec![rmaj_a_by_length(v)? as u32]);
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    for k in classes {
        let key = (k as u64) << 1;
        t.point(|| format!("k={k}"), sums.get(key), sums.get(key | 1));
    }
    Ok(t)
}

pub(super) fn factor_products(p: &Params) -> Result<Tally> {
    let n = p.n;
    let s_sums = par_sums(par_symmetric_group(n), |pi, sink| {
        sink.add(0, qt(pi.inversions(), del_s_minima(pi)));
        Ok(())
    })?;
    let a_sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        sink.add(0, qt(a_canonical(v)?.len(), del_set_a(v)?.len()));
        Ok(())
    })?;
    let mut s_rhs = MultiPoly::one();
    let mut a_rhs = MultiPoly::one();
    for j in 1..n {
        let s_factor = MultiPoly::from_terms(s_factor_set(j).into_iter().map(|f| match f {
            None => (qt(0, 0), 1),
            Some(f) => (qt(f.len(), f.contains(1) as usize), 1),
        }))?;
        let a_factor = MultiPoly::from_terms(a_factor_set(j).into_iter().map(|f| match f {
            None => (qt(0, 0), 1),
            Some(f) => (qt(f.len(), f.contains(1) as usize), 1),
        }))?;
        s_rhs = s_rhs.try_mul(&s_factor)?;
        a_rhs = a_rhs.try_mul(&a_factor)?;
    }
    let mut t = Tally::new();
    t.scanned(s_sums.count + a_sums.count);
    t.point(|| "S".into(), s_sums.get(0), s_rhs);
    t.point(|| "A".into(), a_sums.get(0), a_rhs);
    Ok(t)
}

/// `sum over S_m of (scale t)^(cycles - 1)`.
fn cycle_polynomial(m: usize, scale: i64) -> Result<MultiPoly> {
    par_sums(par_symmetric_group(m), |pi, sink| {
        sink.add(0, qt(0, pi.cycle_count() - 1));
        Ok(())
    })?
    .get(0)
    .try_scale_variable(T, scale)
}

/// `prod_{j=1}^{n-1} (scale t + j)`.
fn rising_product(n: usize, scale: i64) -> Result<MultiPoly> {
    (1..n).try_fold(MultiPoly::one(), |acc, j| {
        let factor = MultiPoly::t()
            .try_scale(scale)?
            .try_add(&MultiPoly::constant(j as i64))?;
        acc.try_mul(&factor)
    })
}

pub(super) fn stirling_s(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let del = s_canonical(pi).occurrences(1).unwrap_or(0);
        sink.add(0, qt(0, del));
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count * 2);
    t.point(|| "cycles".into(), sums.get(0), cycle_polynomial(n, 1)?);
    t.point(|| "product".into(), sums.get(0), rising_product(n, 1)?);
    Ok(t)
}

pub(super) fn stirling_a(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        let del = a_canonical(v)?.occurrences(1).unwrap_or(0);
        sink.add(0, qt(0, del));
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count + factorial(n));
    t.point(|| "cycles".into(), sums.get(0), cycle_polynomial(n, 2)?);
    t.point(|| "product".into(), sums.get(0), rising_product(n, 2)?);
    Ok(t)
}

pub(super) fn multivar_s(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let word = s_canonical(pi);
        sink.add(0, eps_exponents(word.len(), &word.epsilon()));
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    t.point(|| "S".into(), sums.get(0), staircase_product_multi(n, 1)?);
    Ok(t)
}

pub(super) fn multivar_a(p: &Params) -> Result<Tally> {
    let n = p.n;
    let sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        let word = a_canonical(v)?;
        sink.add(0, eps_exponents(word.len(), &word.epsilon()));
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    t.point(|| "A".into(), sums.get(0), staircase_product_multi(n, 2)?);
    Ok(t)
}

pub(super) fn eps_counting(p: &Params) -> Result<Tally> {
    let n = p.n;
    let s_sums = par_sums(par_symmetric_group(n), |pi, sink| {
        sink.add(0, eps_exponents(0, &s_canonical(pi).epsilon()));
        Ok(())
    })?;
    let a_sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        sink.add(0, eps_exponents(0, &a_canonical(v)?.epsilon()));
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(s_sums.count + a_sums.count);
    t.point(|| "S".into(), s_sums.get(0), epsilon_product(n, 1)?);
    t.point(|| "A".into(), a_sums.get(0), epsilon_product(n, 2)?);
    Ok(t)
}

pub(super) fn f_pairs(p: &Params) -> Result<Tally> {
    let labels: Vec<String> = Statistic::ALL
        .iter()
        .map(|s| format!("{s}_A = {s}_S after f"))
        .collect();
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let (counters, scanned) = par_check(par_alternating_group(p.n + 1), &label_refs, |v| {
        let image = f_map(v)?;
        Statistic::ALL
            .iter()
            .map(|s| Ok(s.eval_a(v)? == s.eval_s(&image)))
            .collect()
    })?;
    let mut t = Tally::new();
    t.scanned(scanned);
    for c in counters {
        t.counter(c);
    }
    Ok(t)
}

pub(super) fn f_pair_multivar(p: &Params) -> Result<Tally> {
    let n = p.n;
    let stats = Statistic::ALL;
    let a_sums = par_sums(par_alternating_group(n + 1), |v, sink| {
        let eps = a_canonical(v)?.epsilon();
        let del = del_set_a(v)?.len();
        for (idx, s) in stats.iter().enumerate() {
            let m = s.eval_a(v)?;
            sink.add((idx as u64) << 1, eps_exponents(m, &eps));
            sink.add((idx as u64) << 1 | 1, qt(m, del));
        }
        Ok(())
    })?;
    let s_sums = par_sums(par_symmetric_group(n), |w, sink| {
        let eps = s_canonical(w).epsilon();
        let del = del_s_minima(w);
        let weight = 1i64 << del;
        for (idx, s) in stats.iter().enumerate() {
            let m = s.eval_s(w);
            sink.add_weighted((idx as u64) << 1, eps_exponents(m, &eps), weight);
            sink.add_weighted((idx as u64) << 1 | 1, qt(m, del), weight);
        }
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(a_sums.count + s_sums.count);
    for (idx, s) in stats.iter().enumerate() {
        let key = (idx as u64) << 1;
        t.point(|| format!("{s}: t_j"), a_sums.get(key), s_sums.get(key));
        t.point(
            || format!("{s}: t"),
            a_sums.get(key | 1),
            s_sums.get(key | 1),
        );
    }
    Ok(t)
}

pub(super) fn sk_occurrences(p: &Params) -> Result<Tally> {
    let n = p.n;
    let top = 4.min(n - 1);
    let ks: Vec<usize> = match p.k {
        Some(k) if k == 0 || k > top => {
            return Err(invalid(
                "prop712-sk-occurrences",
                format!("k must lie in 1..={top}"),
            ))
        }
        Some(k) => vec![k],
        None => (1..=top).collect(),
    };
    let sums = par_sums(par_symmetric_group(n), |pi, sink| {
        let word = s_canonical(pi);
        for &k in &ks {
            sink.add(k as u64, qt(0, word.occurrences(k)?));
        }
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    for &k in &ks {
        let kf = factorial(k) as i64;
        let kk = k as i64;
        let mut product = MultiPoly::constant(kf);
        for j in 1..=n - k {
            let factor = MultiPoly::t()
                .try_scale(kk)?
                .try_add(&MultiPoly::constant(j as i64))?;
            product = product.try_mul(&factor)?;
        }
        let stirling = cycle_polynomial(n - k + 1, kk)?.try_scale(kf)?;
        t.point(|| format!("k={k}: product"), sums.get(k as u64), product);
        t.point(|| format!("k={k}: stirling"), sums.get(k as u64), stirling);
    }
    Ok(t)
}

pub(super) fn fiber_size(p: &Params) -> Result<Tally> {
    let n = p.n;
    let labels = ["|fiber| = 2^del", "fiber elements are even and map back"];
    let fibers: Vec<(Permutation, Vec<Permutation>)> = par_symmetric_group(n)
        .map(|w| {
            let fib = fiber(&w);
            (w, fib)
        })
        .collect();
    let mut size = Counter::new(labels[0]);
    let mut back = Counter::new(labels[1]);
    let mut hits: HashMap<Permutation, u32> = HashMap::new();
    for (w, fib) in &fibers {
        size.check(fib.len() == 1 << del_s_minima(w), || w.to_string());
        let ok = fib
            .iter()
            .all(|v| v.is_even() && f_map(v).map(|x| x == *w).unwrap_or(false));
        back.check(ok, || w.to_string());
        for v in fib {
            *hits.entry(v.clone()).or_insert(0) += 1;
        }
    }
    let mut partition = Counter::new("fibers partition A_{n+1}");
    let mut covered = 0usize;
    for v in alternating_group(n + 1) {
        let c = hits.get(&v).copied().unwrap_or(0);
        covered += c as usize;
        partition.check(c == 1, || v.to_string());
    }
    partition.check(
        covered == hits.values().map(|&c| c as usize).sum::<usize>(),
        || "fiber elements outside A_{n+1}".into(),
    );
    let mut t = Tally::new();
    t.scanned(fibers.len() as u64 + hits.len() as u64);
    t.counter(size);
    t.counter(back);
    t.counter(partition);
    Ok(t)
}

/// Words `[x_1, ..., x_n]` over `[n]`, indexed `0..n^n`.
fn word(n: usize, mut idx: u64) -> Vec<usize> {
    let mut w = vec![0; n];
    for slot in w.iter_mut().rev() {
        *slot = (idx % n as u64) as usize + 1;
        idx /= n as u64;
    }
    w
}

fn q_shift(poly: &MultiPoly, e: usize) -> Result<MultiPoly> {
    poly.try_mul(&MultiPoly::q_pow(e as u32))
}

fn q_sum<I: IntoIterator<Item = usize>>(exps: I) -> Result<MultiPoly> {
    MultiPoly::from_terms(exps.into_iter().map(|e| (vec![e as u32], 1)))
}

pub(super) fn insertion(p: &Params) -> Result<Tally> {
    let n = p.n;
    let y = n + 1;
    let total = (n as u64).pow(n as u32);
    let full = q_integer(n + 1);
    let shifted = q_shift(&q_integer(n), 1)?;
    let short = q_integer(n);
    let results: Vec<Vec<(MultiPoly, MultiPoly)>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let u = word(n, idx);
            let vs: Vec<Vec<usize>> = (0..=n)
                .map(|i| {
                    let mut v = u.clone();
                    v.insert(i, y);
                    v
                })
                .collect();
            let maj_u = seq_maj(&u);
            let rmaj_u = seq_rmaj(&u);
            Ok(vec![
                (
                    q_sum(vs.iter().map(|v| seq_maj(v)))?,
                    q_shift(&full, maj_u)?,
                ),
                (
                    q_sum(vs[..n].iter().map(|v| seq_maj(v)))?,
                    q_shift(&shifted, maj_u)?,
                ),
                (
                    q_sum(vs.iter().map(|v| seq_rmaj(v)))?,
                    q_shift(&full, rmaj_u)?,
                ),
                (
                    q_sum(vs[1..].iter().map(|v| seq_rmaj(v)))?,
                    q_shift(&short, rmaj_u)?,
                ),
            ])
        })
        .collect::<Result<_>>()?;
    let names = [
        "maj, all slots",
        "maj, all but last",
        "rmaj, all slots",
        "rmaj, all but first",
    ];
    let mut t = Tally::new();
    t.scanned(total);
    for (idx, sides) in results.into_iter().enumerate() {
        for (name, (lhs, rhs)) in names.iter().zip(sides) {
            t.point(|| format!("{name}: u={:?}", word(n, idx as u64)), lhs, rhs);
        }
    }
    Ok(t)
}

/// `R^S_n` inside `S_{n+1}` as permutations, empty factor first.
fn top_factors(n: usize) -> Result<Vec<Permutation>> {
    s_factor_set(n)
        .into_iter()
        .map(|f| match f {
            None => Ok(Permutation::identity(n + 1)),
            Some(f) => s_letters_to_perm(&f.letters().collect::<Vec<_>>(), n + 1),
        })
        .collect()
}

/// Runs `sides(w, coset)` for every `w` in `S_n`, where `coset` lists `w tau`
/// for `tau` in `R^S_n` (empty factor first, `s_n ... s_1` last).
fn coset_points<F>(n: usize, names: &[&str], sides: F) -> Result<Tally>
where
    F: Fn(&Permutation, &[Permutation]) -> Result<Vec<(MultiPoly, MultiPoly)>> + Sync,
{
    let taus = top_factors(n)?;
    let results: Vec<(Permutation, Vec<(MultiPoly, MultiPoly)>)> = par_symmetric_group(n)
        .map(|w| {
            let big = w.embed(n + 1)?;
            let coset: Vec<Permutation> = taus.iter().map(|tau| &big * tau).collect();
            Ok((w.clone(), sides(&w, &coset)?))
        })
        .collect::<Result<_>>()?;
    let mut t = Tally::new();
    t.scanned(results.len() as u64 * taus.len() as u64);
    for (w, sides) in results {
        for (name, (lhs, rhs)) in names.iter().zip(sides) {
            t.point(|| format!("{name}: w={w}"), lhs, rhs);
        }
    }
    Ok(t)
}

pub(super) fn coset_maj(p: &Params) -> Result<Tally> {
    let n = p.n;
    let full = q_integer(n + 1);
    coset_points(n, &["maj", "rmaj"], |w, coset| {
        let maj = q_sum(coset.iter().map(maj_s))?;
        let rmaj = q_sum(coset.iter().map(|x| rmaj_of(&des_set_s(x), n + 1)))?;
        Ok(vec![
            (maj, q_shift(&full, maj_s(w))?),
            (rmaj, q_shift(&full, rmaj_of(&des_set_s(w), n))?),
        ])
    })
}

pub(super) fn coset_rmaj_del(p: &Params) -> Result<Tally> {
    let n = p.n;
    let factor = q_integer_with_top(n, 1, T);
    coset_points(n, &["rmaj, del"], |w, coset| {
        let lhs = MultiPoly::from_terms(
            coset
                .iter()
                .map(|x| (qt(rmaj_of(&des_set_s(x), n + 1), del_s_minima(x)), 1)),
        )?;
        let base = MultiPoly::monomial(1, qt(rmaj_of(&des_set_s(w), n), del_s_minima(w)));
        Ok(vec![(lhs, base.try_mul(&factor)?)])
    })
}

pub(super) fn coset_truncated(p: &Params) -> Result<Tally> {
    let n = p.n;
    let short = q_integer(n);
    coset_points(n, &["rmaj without the longest factor"], |w, coset| {
        let lhs = q_sum(
            coset[..coset.len() - 1]
                .iter()
                .map(|x| rmaj_of(&des_set_s(x), n + 1)),
        )?;
        Ok(vec![(lhs, q_shift(&short, rmaj_of(&des_set_s(w), n))?)])
    })
}

pub(super) fn coset_product(p: &Params) -> Result<Tally> {
    let n = p.n;
    let direct = par_sums(par_symmetric_group(n), |pi, sink| {
        sink.add(0, qt(rmaj_of(&des_set_s(pi), n), del_s_minima(pi)));
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(direct.count);
    if n == 1 {
        t.point(|| "product".into(), direct.get(0), staircase_product(n, 1)?);
        return Ok(t);
    }
    let taus = top_factors(n - 1)?;
    let products: Vec<Permutation> = par_symmetric_group(n - 1)
        .flat_map_iter(|sigma| {
            let big = sigma.embed(n).expect("embedding");
            taus.iter().map(move |tau| &big * tau).collect::<Vec<_>>()
        })
        .collect();
    t.scanned(products.len() as u64);
    let mut partition = Counter::new("cosets partition S_n");
    let mut sorted = products.clone();
    sorted.sort();
    sorted.dedup();
    partition.check(sorted.len() == products.len(), || {
        "repeated coset element".into()
    });
    partition.check(sorted.len() as u64 == factorial(n), || {
        "cosets miss elements".into()
    });
    let coset_sum = MultiPoly::from_terms(
        products
            .iter()
            .map(|x| (qt(rmaj_of(&des_set_s(x), n), del_s_minima(x)), 1)),
    )?;
    t.counter(partition);
    t.point(
        || "coset sum = direct sum".into(),
        coset_sum.clone(),
        direct.get(0),
    );
    t.point(
        || "coset sum = product".into(),
        coset_sum,
        staircase_product(n, 1)?,
    );
    Ok(t)
}

//! Sparse multivariate polynomials with exact `i64` coefficients in the
//! variables `q, t, t1, t2, ...`, plus q-integers, q-factorials and
//! q-multinomial coefficients.
//!
//! Every coefficient operation is checked; overflow surfaces as
//! [`Error::Overflow`] from the `try_*` methods and as a panic from the
//! operator impls.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent vector `(q, t, t1, t2, ...)` with trailing zeros trimmed.
///
/// Ordered by total degree, then lexicographically; trimming does not change
/// the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o += s;
        }
        Monomial(out)
    }

    /// Number of variables in use, counting `q` and `t`.
    fn width(&self) -> usize {
        self.0.len()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Index of the variable `q`.
pub const Q: usize = 0;
/// Index of the variable `t`.
pub const T: usize = 1;

/// Index of `t_i` (`i >= 1`).
pub const fn t_index(i: usize) -> usize {
    1 + i
}

fn var_name(var: usize) -> String {
    match var {
        Q => "q".to_string(),
        T => "t".to_string(),
        k => format!("t{}", k - 1),
    }
}

#[derive(Clone, Default)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        MultiPoly::monomial(c, Vec::new())
    }

    /// `coeff * prod var_k^{exps[k]}`.
    pub fn monomial(coeff: i64, exps: Vec<u32>) -> Self {
        let mut p = MultiPoly::zero();
        let m = Monomial::new(exps);
        p.arity = m.width().saturating_sub(2);
        if coeff != 0 {
            p.terms.insert(m, coeff);
        }
        p
    }

    pub fn q() -> Self {
        MultiPoly::monomial(1, vec![1])
    }

    pub fn t() -> Self {
        MultiPoly::monomial(1, vec![0, 1])
    }

    /// The variable `t_i`, `i >= 1`.
    pub fn t_var(i: usize) -> Self {
        assert!(i >= 1, "t-variables are numbered from 1");
        let mut exps = vec![0; t_index(i) + 1];
        exps[t_index(i)] = 1;
        MultiPoly::monomial(1, exps)
    }

    pub fn q_pow(e: u32) -> Self {
        MultiPoly::monomial(1, vec![e])
    }

    /// Sums `(exponents, coefficient)` pairs with overflow checks.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        let mut p = MultiPoly::zero();
        for (exps, c) in terms {
            p.add_term(Monomial::new(exps), c)?;
        }
        Ok(p)
    }

    /// Number of `t_i` variables; `0` when only `q` and `t` appear.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Raises the displayed arity (padding only; terms are unchanged).
    pub fn with_arity(mut self, arity: usize) -> Self {
        self.arity = self.arity.max(arity);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, exps: &[u32]) -> i64 {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        self.arity = self.arity.max(m.width().saturating_sub(2));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(c).ok_or(Error::Overflow("add"))?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        out.arity = self.arity.max(other.arity);
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c.checked_neg().ok_or(Error::Overflow("sub"))?)?;
        }
        out.arity = self.arity.max(other.arity);
        Ok(out)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow("mul"))?;
                out.add_term(ma.mul(mb), c)?;
            }
        }
        out.arity = self.arity.max(other.arity);
        Ok(out)
    }

    pub fn try_scale(&self, k: i64) -> Result<MultiPoly> {
        self.try_mul(&MultiPoly::constant(k))
    }

    pub fn try_pow(&self, e: u32) -> Result<MultiPoly> {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    /// Product of the given factors.
    pub fn try_product<'a, I>(factors: I) -> Result<MultiPoly>
    where
        I: IntoIterator<Item = &'a MultiPoly>,
    {
        factors
            .into_iter()
            .try_fold(MultiPoly::one(), |acc, f| acc.try_mul(f))
    }

    /// Substitutes integers for the variables `(q, t, t1, ...)`; variables
    /// that occur must all be assigned.
    pub fn eval(&self, values: &[i64]) -> Result<i64> {
        let mut total: i64 = 0;
        for (m, &c) in &self.terms {
            let mut term = c;
            for (var, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = *values.get(var).ok_or(Error::OutOfRange {
                    what: "assignment length",
                    got: values.len(),
                    lo: var + 1,
                    hi: usize::MAX,
                })?;
                let pow = x.checked_pow(e).ok_or(Error::Overflow("eval"))?;
                term = term.checked_mul(pow).ok_or(Error::Overflow("eval"))?;
            }
            total = total.checked_add(term).ok_or(Error::Overflow("eval"))?;
        }
        Ok(total)
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, var: usize, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, &c) in &self.terms {
            if m.exp(var) == k {
                let mut exps = m.exps().to_vec();
                if var < exps.len() {
                    exps[var] = 0;
                }
                out.add_term(Monomial::new(exps), c)
                    .expect("no new overflow");
            }
        }
        out.arity = self.arity;
        out
    }

    /// Highest exponent of `var`, or `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    /// Replaces `var` by `factor * var`.
    pub fn try_scale_variable(&self, var: usize, factor: i64) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, &c) in &self.terms {
            let k = factor
                .checked_pow(m.exp(var))
                .and_then(|k| k.checked_mul(c))
                .ok_or(Error::Overflow("scale variable"))?;
            out.add_term(m.clone(), k)?;
        }
        out.arity = self.arity;
        Ok(out)
    }

    fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|m| m.width() <= 1)
    }

    fn q_coeffs(&self) -> Vec<i64> {
        let deg = self.degree_in(Q).unwrap_or(0) as usize;
        let mut v = vec![0; deg + 1];
        for (m, &c) in &self.terms {
            v[m.exp(Q) as usize] = c;
        }
        v
    }

    fn from_q_coeffs(coeffs: &[i64]) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::new(vec![e as u32]), c)
                .expect("distinct terms");
        }
        p
    }

    /// Exact quotient of univariate polynomials in `q` whose divisor has
    /// leading coefficient `±1`; a nonzero remainder is an error.
    pub fn div_exact_q(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if !self.is_univariate_q() || !divisor.is_univariate_q() || divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        let mut rem = self.q_coeffs();
        let d = divisor.q_coeffs();
        let lead = *d.last().expect("nonzero divisor");
        if lead != 1 && lead != -1 {
            return Err(Error::InexactDivision);
        }
        if rem.len() < d.len() {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![0i64; rem.len() - d.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d.len() - 1] * lead;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (i, &di) in d.iter().enumerate() {
                let sub = c.checked_mul(di).ok_or(Error::Overflow("div"))?;
                rem[k + i] = rem[k + i].checked_sub(sub).ok_or(Error::Overflow("div"))?;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(MultiPoly::from_q_coeffs(&quot))
    }

    /// Canonical text form, e.g. `1 + 2*q*t - q^3*t1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, &c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c < 0 {
                ("-", c.unsigned_abs())
            } else {
                ("+", c as u64)
            };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.width() == 0 {
                factors.push(mag.to_string());
            }
            for (var, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var_name(var)),
                    e => factors.push(format!("{}^{}", var_name(var), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.to_text())
    }
}

struct Term<'a> {
    coeff: i64,
    exps: &'a [u32],
    width: usize,
}

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("coeff", &self.coeff)?;
        let mut exps = self.exps.to_vec();
        exps.resize(self.width, 0);
        map.serialize_entry("exps", &exps)?;
        map.end()
    }
}

/// JSON: `[{"coeff": c, "exps": [e_q, e_t, e_t1, ...]}, ...]` in canonical
/// order, exponent vectors padded to `2 + arity`.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let width = 2 + self.arity;
        serializer.collect_seq(self.terms.iter().map(|(m, &c)| Term {
            coeff: c,
            exps: m.exps(),
            width,
        }))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("coefficient overflow")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("coefficient overflow")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("coefficient overflow")
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}` (`[0]_q = 0`).
pub fn q_integer(n: usize) -> MultiPoly {
    MultiPoly::from_q_coeffs(&vec![1; n])
}

/// `1 + q + ... + q^{n-1} + coeff * q^n * t_var` where `t_var` is a variable
/// index (`T` or `t_index(j)`).
pub fn q_integer_with_top(n: usize, coeff: i64, t_var: usize) -> MultiPoly {
    let mut exps = vec![0; t_var + 1];
    exps[Q] = n as u32;
    exps[t_var] = 1;
    &q_integer(n) + &MultiPoly::monomial(coeff, exps)
}

/// `[n]!_q = [n-1]!_q * [n]_q`, `[0]!_q = 1`.
pub fn q_factorial(n: usize) -> Result<MultiPoly> {
    (1..=n).try_fold(MultiPoly::one(), |acc, k| acc.try_mul(&q_integer(k)))
}

/// `[n]!_q / ([p_1]!_q ... [p_r]!_q)` by iterated exact division.
pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<MultiPoly> {
    if parts.iter().sum::<usize>() != n {
        return Err(Error::InvalidParams {
            identity: "q_multinomial".to_string(),
            reason: format!("parts {parts:?} do not sum to {n}"),
        });
    }
    let mut acc = q_factorial(n)?;
    for &p in parts {
        acc = acc.div_exact_q(&q_factorial(p)?)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n choose k]_q`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> Result<MultiPoly> {
    if k > n {
        return Ok(MultiPoly::zero());
    }
    q_multinomial(n, &[k, n - k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(coeffs: &[i64]) -> MultiPoly {
        MultiPoly::from_q_coeffs(coeffs)
    }

    #[test]
    fn add_and_eval_examples() {
        let a = &MultiPoly::one() + &MultiPoly::q();
        let sum = &a + &MultiPoly::q();
        assert_eq!(sum, qpoly(&[1, 2]));
        assert_eq!(sum.eval(&[3]).unwrap(), 7);
        assert_eq!(sum.to_text(), "1 + 2*q");
    }

    #[test]
    fn product_example() {
        // (1 + q t)(1 + q + q^2 t)
        let a = q_integer_with_top(1, 1, T);
        let b = q_integer_with_top(2, 1, T);
        let prod = &a * &b;
        let expected = MultiPoly::from_terms(vec![
            (vec![0, 0], 1),
            (vec![1, 0], 1),
            (vec![1, 1], 1),
            (vec![2, 1], 2),
            (vec![3, 2], 1),
        ])
        .unwrap();
        assert_eq!(prod, expected);
        assert_eq!(prod.to_text(), "1 + q + q*t + 2*q^2*t + q^3*t^2");
    }

    #[test]
    fn canonical_text_form() {
        let p = &(&MultiPoly::one() + &MultiPoly::monomial(2, vec![1, 1])) - &MultiPoly::t_var(2);
        assert_eq!(p.to_text(), "1 - t2 + 2*q*t");
        assert_eq!(MultiPoly::zero().to_text(), "0");
        assert_eq!(MultiPoly::constant(-3).to_text(), "-3");
        assert_eq!(MultiPoly::monomial(-1, vec![2]).to_text(), "-q^2");
    }

    #[test]
    fn zero_coefficients_vanish() {
        let p = &MultiPoly::q() - &MultiPoly::q();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn q_factorial_and_binomials() {
        assert_eq!(q_factorial(3).unwrap(), qpoly(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0).unwrap(), MultiPoly::one());
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0).unwrap(), MultiPoly::one());
        }
        assert_eq!(q_binomial(4, 2).unwrap(), qpoly(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).unwrap().is_zero());
        assert_eq!(
            q_multinomial(4, &[2, 1, 1]).unwrap(),
            (&q_integer(3) * &q_integer(4))
        );
        assert!(q_multinomial(4, &[2, 1]).is_err());
    }

    #[test]
    fn inexact_division_is_reported() {
        assert_eq!(
            qpoly(&[1, 0, 1]).div_exact_q(&qpoly(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            MultiPoly::t().div_exact_q(&qpoly(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            qpoly(&[1, 2, 1]).div_exact_q(&qpoly(&[1, 1])).unwrap(),
            qpoly(&[1, 1])
        );
    }

    #[test]
    fn overflow_is_detected() {
        let big = MultiPoly::constant(i64::MAX);
        assert_eq!(big.try_add(&MultiPoly::one()), Err(Error::Overflow("add")));
        assert_eq!(
            big.try_mul(&MultiPoly::constant(2)),
            Err(Error::Overflow("mul"))
        );
        assert_eq!(MultiPoly::q().eval(&[i64::MAX]).unwrap(), i64::MAX);
        assert_eq!(
            MultiPoly::q_pow(2).eval(&[i64::MAX]),
            Err(Error::Overflow("eval"))
        );
    }

    #[test]
    fn eval_requires_assignments() {
        assert!(MultiPoly::t().eval(&[1]).is_err());
        assert_eq!(MultiPoly::t().eval(&[1, 5]).unwrap(), 5);
    }

    #[test]
    fn coefficient_extraction_and_scaling() {
        let p = &q_integer_with_top(1, 1, T) * &q_integer_with_top(2, 1, T);
        assert_eq!(p.coefficient_of(T, 1), qpoly(&[0, 1, 2]));
        assert_eq!(p.coefficient_of(T, 2), qpoly(&[0, 0, 0, 1]));
        let scaled = q_integer_with_top(1, 1, T)
            .try_scale_variable(T, 2)
            .unwrap();
        assert_eq!(scaled, q_integer_with_top(1, 2, T));
    }

    #[test]
    fn json_form() {
        let p = MultiPoly::from_terms(vec![(vec![0], 1), (vec![1, 1], 2)]).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"coeff":1,"exps":[0,0]},{"coeff":2,"exps":[1,1]}]"#
        );
        let p = MultiPoly::t_var(1);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"coeff":1,"exps":[0,0,1]}]"#
        );
    }

    #[test]
    fn arity_lifts_by_padding() {
        let a = MultiPoly::t_var(3);
        let b = MultiPoly::q();
        let s = &a + &b;
        assert_eq!(s.arity(), 3);
        assert_eq!(s.to_text(), "t3 + q");
    }
}

//! Bivariate and multivariate generating functions over a whole group.

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{a_canonical, s_canonical};
use crate::covering::Statistic;
use crate::enumerate::{par_alternating_group, par_symmetric_group};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::polynomial::{t_index, MultiPoly};
use crate::statistics::{des_set_a, des_set_s, maj_of, rmaj_of, Group};

/// `sum q^{q_stat} t^{t_stat}` over `S_n` or `A_{n+1}`. With `multivar` the
/// single `t^del` becomes `t_1^{eps_1} ... t_{n-1}^{eps_{n-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenFunSpec {
    pub group: Group,
    pub n: usize,
    pub q_stat: Statistic,
    pub t_stat: Option<Statistic>,
    pub multivar: bool,
}

impl GenFunSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidParams {
                identity: "genfun".into(),
                reason: reason.into(),
            })
        };
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        if !matches!(
            self.q_stat,
            Statistic::Length | Statistic::Maj | Statistic::Rmaj
        ) {
            return bad("the q-statistic must be length, maj or rmaj");
        }
        if !matches!(self.t_stat, None | Some(Statistic::Del)) {
            return bad("the t-statistic must be del or none");
        }
        if self.multivar && self.t_stat.is_none() {
            return bad("the multivariate refinement needs the del t-statistic");
        }
        Ok(())
    }
}

fn exponents(spec: &GenFunSpec, q: usize, eps: &[u8]) -> Vec<u32> {
    let del: u32 = eps.iter().map(|&e| e as u32).sum();
    match (spec.t_stat, spec.multivar) {
        (None, _) => vec![q as u32],
        (Some(_), false) => vec![q as u32, del],
        (Some(_), true) => {
            let mut exps = vec![0; t_index(eps.len()) + 1];
            exps[0] = q as u32;
            for (j, &e) in eps.iter().enumerate() {
                exps[t_index(j + 1)] = e as u32;
            }
            exps
        }
    }
}

fn s_term(spec: &GenFunSpec, pi: &Permutation) -> Vec<u32> {
    let word = s_canonical(pi);
    let q = match spec.q_stat {
        Statistic::Length => word.len(),
        Statistic::Maj => maj_of(&des_set_s(pi)),
        _ => rmaj_of(&des_set_s(pi), spec.n),
    };
    exponents(spec, q, &word.epsilon())
}

fn a_term(spec: &GenFunSpec, v: &Permutation) -> Result<Vec<u32>> {
    let word = a_canonical(v)?;
    let q = match spec.q_stat {
        Statistic::Length => word.len(),
        Statistic::Maj => maj_of(&des_set_a(v)?),
        _ => rmaj_of(&des_set_a(v)?, spec.n),
    };
    Ok(exponents(spec, q, &word.epsilon()))
}

pub fn generating_function(spec: &GenFunSpec) -> Result<MultiPoly> {
    spec.validate()?;
    let terms: Vec<Vec<u32>> = match spec.group {
        Group::S => par_symmetric_group(spec.n)
            .map(|pi| s_term(spec, &pi))
            .collect(),
        Group::A => par_alternating_group(spec.n + 1)
            .map(|v| a_term(spec, &v))
            .collect::<Result<_>>()?,
    };
    MultiPoly::from_terms(terms.into_iter().map(|e| (e, 1)))
}

//! Joint equidistribution over inverse descent and delent classes.

use super::scan::{mask, par_sums, unmask};
use super::{Params, Tally};
use crate::canonical::a_canonical;
use crate::enumerate::{par_alternating_group, par_symmetric_group};
use crate::error::Result;
use crate::perm::Permutation;
use crate::polynomial::MultiPoly;
use crate::statistics::{del_set_a, del_set_s, des_set_a, des_set_s, rmaj_a, rmaj_of};

/// Per element: `(Des(pi^-1), Del(pi^-1), rmaj, length)`.
type Profile = (Vec<usize>, Vec<usize>, usize, usize);

/// Dense `q`-polynomials indexed by `(D1 mask, D2 mask)` and slot.
struct Grid {
    d1_bits: usize,
    d2_bits: usize,
    degree: usize,
    cells: Vec<i64>,
}

impl Grid {
    fn new(d1_bits: usize, d2_bits: usize, degree: usize) -> Self {
        let len = (1usize << (d1_bits + d2_bits)) * 2 * (degree + 1);
        Grid {
            d1_bits,
            d2_bits,
            degree,
            cells: vec![0; len],
        }
    }

    fn index(&self, m: usize, slot: usize, e: usize) -> usize {
        (m * 2 + slot) * (self.degree + 1) + e
    }

    fn add(&mut self, m: usize, slot: usize, e: usize) {
        let idx = self.index(m, slot, e);
        self.cells[idx] += 1;
    }

    /// Turns exact-class counts into sums over all sub-classes.
    fn zeta(&mut self) {
        let width = 2 * (self.degree + 1);
        for bit in 0..self.d1_bits + self.d2_bits {
            for m in 0..1usize << (self.d1_bits + self.d2_bits) {
                if m >> bit & 1 == 1 {
                    let from = (m ^ 1 << bit) * width;
                    for k in 0..width {
                        self.cells[m * width + k] += self.cells[from + k];
                    }
                }
            }
        }
    }

    fn poly(&self, m: usize, slot: usize) -> Result<MultiPoly> {
        let start = self.index(m, slot, 0);
        MultiPoly::from_terms(
            self.cells[start..start + self.degree + 1]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (vec![e as u32], c)),
        )
    }
}

/// `d1_bits` covers `Des` over `[d1_bits]`; `d2_bits` covers `Del` over
/// `{2, ..., d2_bits + 1}`.
fn class_points(
    profiles: &[Profile],
    d1_bits: usize,
    d2_bits: usize,
    degree: usize,
) -> Result<Tally> {
    let mut grid = Grid::new(d1_bits, d2_bits, degree);
    for (des, del, rmaj, len) in profiles {
        let m = (mask(des, 1) | mask(del, 2) << d1_bits) as usize;
        grid.add(m, 0, *rmaj);
        grid.add(m, 1, *len);
    }
    grid.zeta();
    let mut t = Tally::new();
    t.scanned(profiles.len() as u64);
    for m in 0..1usize << (d1_bits + d2_bits) {
        let d1 = m as u64 & ((1 << d1_bits) - 1);
        let d2 = m as u64 >> d1_bits;
        t.point(
            || format!("D1={:?} D2={:?}", unmask(d1, 1), unmask(d2, 2)),
            grid.poly(m, 0)?,
            grid.poly(m, 1)?,
        );
    }
    Ok(t)
}

fn s_profile(pi: &Permutation) -> Profile {
    let inv = pi.inverse();
    (
        des_set_s(&inv),
        del_set_s(&inv),
        rmaj_of(&des_set_s(pi), pi.degree()),
        pi.inversions(),
    )
}

fn a_profile(v: &Permutation) -> Result<Profile> {
    let inv = v.inverse();
    let n = v.degree() - 1;
    Ok((
        des_set_a(&inv)?,
        del_set_a(&inv)?,
        rmaj_a(v, n)?,
        a_canonical(v)?.len(),
    ))
}

pub(super) fn main_s(p: &Params) -> Result<Tally> {
    use rayon::prelude::*;
    let n = p.n;
    let profiles: Vec<Profile> = par_symmetric_group(n).map(|pi| s_profile(&pi)).collect();
    class_points(&profiles, n - 1, n - 1, n * (n - 1) / 2)
}

pub(super) fn main_a(p: &Params) -> Result<Tally> {
    use rayon::prelude::*;
    let n = p.n;
    let profiles: Vec<Profile> = par_alternating_group(n + 1)
        .map(|v| a_profile(&v))
        .collect::<Result<_>>()?;
    class_points(&profiles, n - 1, n, n * (n + 1) / 2)
}

fn joint_sums<F>(
    elements: impl rayon::iter::ParallelIterator<Item = Permutation>,
    profile: F,
) -> Result<Tally>
where
    F: Fn(&Permutation) -> Result<Profile> + Sync + Send,
{
    let sums = par_sums(elements, |x, sink| {
        let (des, del, rmaj, len) = profile(x)?;
        let (d, e) = (des.len() as u32, del.len() as u32);
        sink.add(0, vec![rmaj as u32, d, e]);
        sink.add(1, vec![len as u32, d, e]);
        Ok(())
    })?;
    let mut t = Tally::new();
    t.scanned(sums.count);
    t.point(|| "rmaj against length".into(), sums.get(0), sums.get(1));
    Ok(t)
}

pub(super) fn trivariate_s(p: &Params) -> Result<Tally> {
    joint_sums(par_symmetric_group(p.n), |pi| Ok(s_profile(pi)))
}

pub(super) fn trivariate_a(p: &Params) -> Result<Tally> {
    joint_sums(par_alternating_group(p.n + 1), a_profile)
}

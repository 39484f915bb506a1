//! The quadratic-form side of the classification: search for a subroot
//! (a nonzero `d' ≤ d` with `q(d') ≤ 0`) and the reduction of any such vector
//! to an exact Euclidean witness.

use std::collections::BTreeSet;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::euclid::{layout, EuclideanType};
use crate::quiver::{DimVector, Quiver, QuiverSetting};
use crate::witness::{EuclideanWitness, Verdict, Witness};

/// Componentwise cap of the subroot search. Radical vectors never exceed 6
/// (the branch vertex of `Ẽ8`), so a subroot exists below `min(d, 6)` whenever
/// one exists below `d`.
pub const SUBROOT_CAP: u64 = 6;

/// First nonzero `d' ≤ min(d, 6)` with `q(d') ≤ 0`.
///
/// Supports are connected vertex sets enumerated by size, then
/// lexicographically; on each support the sincere vectors are visited in
/// lexicographic order.
pub fn find_subroot(setting: &QuiverSetting, budget: &Budget) -> Result<Option<DimVector>> {
    let quiver = setting.quiver();
    let dim = setting.dim().entries();
    let n = quiver.vertex_count();
    let mut meter = Meter::new("subroot search", budget.subroot_vectors);
    let adj: Vec<Vec<usize>> =
        (0..n).map(|x| quiver.neighbors(x).into_iter().filter(|&y| dim[y] > 0).collect()).collect();

    let mut level: BTreeSet<Vec<usize>> = (0..n).filter(|&x| dim[x] > 0).map(|x| vec![x]).collect();
    while !level.is_empty() {
        for support in &level {
            if let Some(v) = search_support(quiver, dim, support, &mut meter)? {
                return Ok(Some(DimVector::new(v)));
            }
        }
        let mut next = BTreeSet::new();
        for support in &level {
            for &x in support {
                for &y in &adj[x] {
                    if support.binary_search(&y).is_err() {
                        let mut grown = support.clone();
                        let at = grown.binary_search(&y).unwrap_err();
                        grown.insert(at, y);
                        if next.insert(grown) {
                            meter.tick()?;
                        }
                    }
                }
            }
        }
        level = next;
    }
    Ok(None)
}

/// Lexicographic sweep of the sincere vectors on `support` bounded by the cap.
fn search_support(quiver: &Quiver, dim: &[u64], support: &[usize], meter: &mut Meter) -> Result<Option<Vec<u64>>> {
    let k = support.len();
    let mut local = vec![usize::MAX; quiver.vertex_count()];
    for (i, &x) in support.iter().enumerate() {
        local[x] = i;
    }
    // q(v) = Σ diag_i v_i² − Σ_{i<j} off_ij v_i v_j on the support
    let mut diag = vec![1i64; k];
    let mut off = vec![0i64; k * k];
    for a in quiver.arrows() {
        let (s, t) = (local[a.source], local[a.target]);
        if s == usize::MAX || t == usize::MAX {
            continue;
        }
        if s == t {
            diag[s] -= 1;
        } else {
            off[s.min(t) * k + s.max(t)] += 1;
        }
    }
    let caps: Vec<i64> = support.iter().map(|&x| dim[x].min(SUBROOT_CAP) as i64).collect();
    let mut v = vec![1i64; k];
    loop {
        meter.tick()?;
        let mut q = 0i64;
        for i in 0..k {
            q += diag[i] * v[i] * v[i];
            for j in i + 1..k {
                q -= off[i * k + j] * v[i] * v[j];
            }
        }
        if q <= 0 {
            let mut out = vec![0u64; quiver.vertex_count()];
            for (i, &x) in support.iter().enumerate() {
                out[x] = v[i] as u64;
            }
            return Ok(Some(out));
        }
        // odometer, last coordinate fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if v[i] < caps[i] {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}

/// Outcome of [`reduce_to_radical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub witness: EuclideanWitness,
    /// Vertices `x` whose basis vector was subtracted, in order.
    pub subtracted: Vec<usize>,
}

impl Reduction {
    pub fn multiplier(&self) -> u64 {
        self.witness.multiplier()
    }
}

/// Turns a nonzero `d` with `q(d) ≤ 0` into a Euclidean subquiver `Q'` and
/// `m ≥ 1` with `m · h_{Q'} ≤ d`.
///
/// Restricts to a connected piece of the support with `q ≤ 0`, returns a loop
/// or double edge if there is one, and otherwise subtracts `e_x` while some
/// `x` has `(d, e_x) ≥ q(d) + 1`. Each subtraction keeps `q ≤ 0`. When it
/// stops, `q(d) = 0`, `(d, e_x) = 0` on the support, the support is Euclidean
/// and `d` is a multiple of its radical vector; all of this is re-checked and
/// any failure is reported as [`Error::Internal`].
pub fn reduce_to_radical(setting: &QuiverSetting) -> Result<Reduction> {
    let quiver = setting.quiver();
    if !setting.dim().is_nonzero() {
        return Err(Error::Precondition("reduction needs a nonzero dimension vector".into()));
    }
    let q0 = setting.tits_form()?;
    if q0 > 0 {
        return Err(Error::Precondition(format!("reduction needs q(d) <= 0, got {q0}")));
    }
    let mut d = setting.dim().to_signed();
    let mut comp = select_component(quiver, &mut d)?;

    let current = |d: &[i64]| setting.with_dim(DimVector::new(d.iter().map(|&v| v as u64).collect()));

    for &x in &comp {
        if let Some(k) = quiver.arrows().iter().position(|a| a.source == x && a.target == x) {
            let witness = EuclideanWitness::from_parts(&current(&d)?, EuclideanType::A(0), &[x], &[k])?;
            return Ok(Reduction { witness, subtracted: Vec::new() });
        }
    }
    for (i, &x) in comp.iter().enumerate() {
        for &y in &comp[i + 1..] {
            let joining: Vec<usize> =
                (0..quiver.arrow_count()).filter(|&k| quiver.arrows()[k].joins(x, y)).take(2).collect();
            if joining.len() == 2 {
                let witness = EuclideanWitness::from_parts(&current(&d)?, EuclideanType::A(1), &[x, y], &joining)?;
                return Ok(Reduction { witness, subtracted: Vec::new() });
            }
        }
    }

    let mut subtracted = Vec::new();
    loop {
        let q = quiver.tits_form(&d)?;
        if q > 0 {
            return Err(Error::Internal(format!("q rose to {q} during reduction")));
        }
        let mut pick = None;
        for &x in &comp {
            if quiver.pairing_with_basis(&d, x)? > q {
                pick = Some(x);
                break;
            }
        }
        let Some(x) = pick else { break };
        d[x] -= 1;
        subtracted.push(x);
        if d[x] == 0 {
            comp = select_component(quiver, &mut d)?;
        }
    }

    if quiver.tits_form(&d)? != 0 {
        return Err(Error::Internal("reduction stopped with q(d) != 0".into()));
    }
    for &x in &comp {
        if quiver.pairing_with_basis(&d, x)? != 0 {
            return Err(Error::Internal(format!("reduction stopped with (d, e_{x}) != 0")));
        }
    }
    let (sub, kept, arrow_ids) = quiver.induced(&comp);
    let lay =
        layout(&sub).ok_or_else(|| Error::Internal(format!("support {sub} of the reduced vector is not Euclidean")))?;
    let m = d[kept[0]] as u64 / lay.radical[0];
    if m == 0 || kept.iter().zip(&lay.radical).any(|(&x, &h)| d[x] as u64 != m * h) {
        return Err(Error::Internal("reduced vector is not a multiple of the radical vector".into()));
    }
    let witness = EuclideanWitness::from_parts(&current(&d)?, lay.kind, &kept, &arrow_ids)?;
    Ok(Reduction { witness, subtracted })
}

/// Picks the connected component of the support of `d` with `q ≤ 0` that holds
/// the smallest vertex, and zeroes `d` outside it.
fn select_component(quiver: &Quiver, d: &mut [i64]) -> Result<Vec<usize>> {
    let support: Vec<usize> = (0..d.len()).filter(|&x| d[x] > 0).collect();
    let (sub, kept, _) = quiver.induced(&support);
    for block in sub.components() {
        let comp: Vec<usize> = block.iter().map(|&i| kept[i]).collect();
        let mut masked = vec![0i64; d.len()];
        for &x in &comp {
            masked[x] = d[x];
        }
        if quiver.tits_form(&masked)? <= 0 {
            d.copy_from_slice(&masked);
            return Ok(comp);
        }
    }
    Err(Error::Internal("no component of the support has q <= 0".into()))
}

/// Finite when no subroot exists; otherwise infinite with the Euclidean
/// witness extracted from the first subroot.
pub fn decide_by_tits(setting: &QuiverSetting, budget: &Budget) -> Result<Verdict> {
    match find_subroot(setting, budget)? {
        None => Ok(Verdict::Finite),
        Some(root) => {
            let reduced = reduce_to_radical(&setting.with_dim(root)?)?;
            Ok(Verdict::Infinite(Witness::Euclidean(reduced.witness)))
        }
    }
}

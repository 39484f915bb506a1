//! Top-level classification, the minimality test for representation infinite
//! settings, and an exhaustive agreement check between the two decision
//! routes.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::euclid::find_euclidean_witness;
use crate::quiver::{Arrow, DimVector, Quiver, QuiverSetting};
use crate::tits::decide_by_tits;
use crate::witness::{Verdict, Witness};

/// Whether [`classify`] also runs the Tits-form route and compares.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Fast,
    #[default]
    Checked,
}

/// Classifies a setting by direct Euclidean subquiver search. In
/// [`Mode::Checked`] the Tits-form route runs too, both witnesses are
/// re-validated and any disagreement is an [`Error::CrossCheck`].
pub fn classify(setting: &QuiverSetting, mode: Mode, budget: &Budget) -> Result<Verdict> {
    let direct = find_euclidean_witness(setting, budget)?;
    if mode == Mode::Checked {
        let by_tits = decide_by_tits(setting, budget)?;
        if direct.is_some() != by_tits.is_infinite() {
            return Err(Error::CrossCheck(format!(
                "setting {} d={:?}: subquiver search says {}, Tits form says {}",
                setting.quiver(),
                setting.dim().entries(),
                describe(direct.as_ref().map(|w| w.kind().to_string())),
                describe(by_tits.witness().map(|w| match w {
                    Witness::Euclidean(e) => e.kind().to_string(),
                    Witness::Subroot(_) => "subroot".into(),
                })),
            )));
        }
        if let Some(w) = by_tits.witness() {
            w.validate(setting).map_err(|e| Error::CrossCheck(format!("Tits-route witness: {e}")))?;
        }
        if let Some(w) = &direct {
            w.validate(setting).map_err(|e| Error::CrossCheck(format!("search witness: {e}")))?;
        }
    }
    Ok(match direct {
        Some(w) => Verdict::Infinite(Witness::Euclidean(w)),
        None => Verdict::Finite,
    })
}

fn describe(kind: Option<String>) -> String {
    match kind {
        Some(k) => format!("INFINITE ({k})"),
        None => "FINITE".into(),
    }
}

/// Settings one move below `setting`: one dimension entry lowered by one, or
/// one arrow deleted. These moves generate the order on settings (a vertex
/// whose entry reaches zero is as good as deleted).
pub fn one_step_smaller(setting: &QuiverSetting) -> Vec<QuiverSetting> {
    let mut out = Vec::new();
    let d = setting.dim().entries();
    for x in 0..d.len() {
        if d[x] > 0 {
            let mut e = d.to_vec();
            e[x] -= 1;
            out.push(setting.with_dim(DimVector::new(e)).expect("smaller vector stays in range"));
        }
    }
    for k in 0..setting.quiver().arrow_count() {
        out.push(setting.with_quiver(setting.quiver().without_arrow(k)).expect("same vertex set"));
    }
    out
}

/// True iff the setting is representation infinite and every one-step-smaller
/// setting is representation finite.
pub fn is_minimal_infinite(setting: &QuiverSetting, mode: Mode, budget: &Budget) -> Result<bool> {
    if !classify(setting, mode, budget)?.is_infinite() {
        return Ok(false);
    }
    for smaller in one_step_smaller(setting) {
        if classify(&smaller, mode, budget)?.is_infinite() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Limits of the exhaustive agreement check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    pub max_vertices: usize,
    /// Arrows per ordered pair of distinct vertices.
    pub max_multiplicity: usize,
    pub max_loops: usize,
    pub max_dim: u64,
    /// Total arrows (loops included), if limited.
    pub max_arrows: Option<usize>,
}

impl SuiteBounds {
    pub fn new(max_vertices: usize, max_dim: u64) -> Self {
        SuiteBounds { max_vertices, max_multiplicity: 2, max_loops: 1, max_dim, max_arrows: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub setting: QuiverSetting,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub settings: u64,
    pub finite: u64,
    pub infinite: u64,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Runs both routes on one setting and records the outcome.
    pub fn record(&mut self, setting: &QuiverSetting, budget: &Budget) -> Result<()> {
        self.settings += 1;
        match compare_paths(setting, budget)? {
            Ok(infinite) => {
                if infinite {
                    self.infinite += 1;
                } else {
                    self.finite += 1;
                }
            }
            Err(detail) => self.mismatches.push(Mismatch { setting: setting.clone(), detail }),
        }
        Ok(())
    }
}

/// Runs both routes; `Ok(Ok(infinite))` when they agree and their witnesses
/// validate, `Ok(Err(detail))` otherwise. Budget errors propagate.
pub fn compare_paths(setting: &QuiverSetting, budget: &Budget) -> Result<std::result::Result<bool, String>> {
    let direct = find_euclidean_witness(setting, budget)?;
    let by_tits = decide_by_tits(setting, budget)?;
    if direct.is_some() != by_tits.is_infinite() {
        return Ok(Err(format!("search infinite={}, tits infinite={}", direct.is_some(), by_tits.is_infinite())));
    }
    if let Some(w) = &direct {
        if let Err(e) = w.validate(setting) {
            return Ok(Err(format!("search witness invalid: {e}")));
        }
    }
    if let Some(w) = by_tits.witness() {
        if let Err(e) = w.validate(setting) {
            return Ok(Err(format!("tits witness invalid: {e}")));
        }
    }
    Ok(Ok(direct.is_some()))
}

/// Compares the two routes on every setting within `bounds`, one
/// representative per isomorphism class of (underlying multigraph, d).
///
/// Both routes only read the underlying multigraph, so each unordered pair
/// with `m` joining arrows is realised once: `min(m, max_multiplicity)` arrows
/// forward and the rest backward.
pub fn cross_check_suite(bounds: &SuiteBounds, budget: &Budget) -> Result<CrossCheckReport> {
    let mut report = CrossCheckReport::default();
    let mut failure = None;
    for_each_setting(bounds, |s| {
        if failure.is_none() {
            if let Err(e) = report.record(&s, budget) {
                failure = Some(e);
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// Calls `f` on one representative of every isomorphism class of connected
/// settings within `bounds` (see [`cross_check_suite`] for orientations).
pub fn for_each_setting(bounds: &SuiteBounds, mut f: impl FnMut(QuiverSetting)) {
    for n in 1..=bounds.max_vertices {
        enumerate_size(n, bounds, &mut f);
    }
}

fn enumerate_size(n: usize, bounds: &SuiteBounds, f: &mut impl FnMut(QuiverSetting)) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pair_index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let pair_lookup: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { usize::MAX } else { pair_index(i, j) }).collect()).collect();
    let perms = permutations(n);
    let loop_radix = bounds.max_loops + 1;
    let mult_radix = 2 * bounds.max_multiplicity + 1;
    let slots = n + pairs.len();
    let radix: Vec<usize> = (0..slots).map(|s| if s < n { loop_radix } else { mult_radix }).collect();

    let mut code = vec![0usize; slots];
    let mut permuted = vec![0usize; slots];
    loop {
        let arrows: usize = code[..n].iter().sum::<usize>() + code[n..].iter().sum::<usize>();
        let within = bounds.max_arrows.is_none_or(|m| arrows <= m);
        if within && connected(n, &pairs, &code[n..]) {
            // keep only the lexicographically smallest relabelling; collect automorphisms
            let mut canonical = true;
            let mut autos: Vec<&Vec<usize>> = Vec::new();
            for p in &perms {
                for x in 0..n {
                    permuted[p[x]] = code[x];
                }
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    permuted[n + pair_lookup[p[i]][p[j]]] = code[n + k];
                }
                match permuted.cmp(&code) {
                    std::cmp::Ordering::Less => {
                        canonical = false;
                        break;
                    }
                    std::cmp::Ordering::Equal => autos.push(p),
                    std::cmp::Ordering::Greater => {}
                }
            }
            if canonical {
                let quiver = build_quiver(n, &pairs, &code, bounds.max_multiplicity);
                emit_dims(&quiver, &autos, bounds.max_dim, f);
            }
        }
        if !advance(&mut code, &radix) {
            break;
        }
    }
}

fn emit_dims(quiver: &Quiver, autos: &[&Vec<usize>], max_dim: u64, f: &mut impl FnMut(QuiverSetting)) {
    let n = quiver.vertex_count();
    let radix = vec![max_dim as usize + 1; n];
    let mut d = vec![0usize; n];
    let mut image = vec![0usize; n];
    loop {
        let minimal = autos.iter().all(|p| {
            for x in 0..n {
                image[p[x]] = d[x];
            }
            image >= d
        });
        if minimal {
            let dim = DimVector::new(d.iter().map(|&v| v as u64).collect());
            f(QuiverSetting::new(quiver.clone(), dim).expect("bounded dimensions"));
        }
        if !advance(&mut d, &radix) {
            break;
        }
    }
}

fn build_quiver(n: usize, pairs: &[(usize, usize)], code: &[usize], max_mult: usize) -> Quiver {
    let mut arrows = Vec::new();
    for (x, &loops) in code[..n].iter().enumerate() {
        arrows.extend(std::iter::repeat_n(Arrow::new(x, x), loops));
    }
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let m = code[n + k];
        let forward = m.min(max_mult);
        arrows.extend(std::iter::repeat_n(Arrow::new(i, j), forward));
        arrows.extend(std::iter::repeat_n(Arrow::new(j, i), m - forward));
    }
    let names = (0..n).map(|i| format!("v{i}")).collect();
    Quiver::new(names, arrows).expect("indices in range")
}

fn connected(n: usize, pairs: &[(usize, usize)], mult: &[usize]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mult[k] == 0 {
                continue;
            }
            let y = if i == x {
                j
            } else if j == x {
                i
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Mixed-radix increment, first slot least significant.
fn advance(code: &mut [usize], radix: &[usize]) -> bool {
    for (c, &r) in code.iter_mut().zip(radix) {
        *c += 1;
        if *c < r {
            return true;
        }
        *c = 0;
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::EuclideanType;

    fn setting(q: Quiver, d: &[u64]) -> QuiverSetting {
        QuiverSetting::new(q, d.to_vec().into()).unwrap()
    }

    fn triangle() -> Quiver {
        Quiver::with_indices(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn classify_examples() {
        let b = Budget::default();
        let lp = setting(Quiver::with_indices(1, &[(0, 0)]).unwrap(), &[1]);
        match classify(&lp, Mode::Checked, &b).unwrap() {
            Verdict::Infinite(Witness::Euclidean(w)) => assert_eq!(w.kind(), EuclideanType::A(0)),
            other => panic!("{other:?}"),
        }
        let ce = Quiver::from_names(
            &["t1", "t2", "t3", "b1", "b2"],
            &[("t1", "b1"), ("t1", "b2"), ("t2", "b2"), ("t3", "b2")],
        )
        .unwrap();
        assert_eq!(classify(&setting(ce, &[2, 1, 1, 1, 2]), Mode::Checked, &b).unwrap(), Verdict::Finite);
        let e8 = EuclideanType::E8.shape();
        let h = crate::radical_vector(EuclideanType::E8, &e8).unwrap();
        match classify(&setting(e8, h.entries()), Mode::Checked, &b).unwrap() {
            Verdict::Infinite(Witness::Euclidean(w)) => {
                assert_eq!(w.kind(), EuclideanType::E8);
                assert_eq!(w.ambient_vertices(), &[0, 1, 2, 3, 4, 5, 6, 7, 8]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn minimality_examples() {
        let b = Budget::default();
        assert!(is_minimal_infinite(&setting(triangle(), &[1, 1, 1]), Mode::Checked, &b).unwrap());
        assert!(!is_minimal_infinite(&setting(triangle(), &[2, 1, 1]), Mode::Checked, &b).unwrap());
        let path = Quiver::with_indices(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_minimal_infinite(&setting(path, &[9, 9, 9]), Mode::Checked, &b).unwrap());
    }

    #[test]
    fn suite_examples() {
        let b = Budget::default();
        let small = SuiteBounds { max_vertices: 2, max_multiplicity: 2, max_loops: 1, max_dim: 2, max_arrows: Some(2) };
        let r = cross_check_suite(&small, &b).unwrap();
        assert!(r.is_clean(), "{:?}", r.mismatches);
        assert!(r.settings > 0 && r.finite > 0 && r.infinite > 0);
        let empty = SuiteBounds { max_vertices: 0, ..small };
        assert_eq!(cross_check_suite(&empty, &b).unwrap(), CrossCheckReport::default());
    }

    #[test]
    fn enumeration_counts_isomorphism_classes() {
        // one vertex, up to one loop, d in 0..=1: four settings
        let b = SuiteBounds { max_vertices: 1, max_multiplicity: 1, max_loops: 1, max_dim: 1, max_arrows: None };
        let mut count = 0;
        for_each_setting(&b, |_| count += 1);
        assert_eq!(count, 4);
        // two vertices joined by exactly one arrow, no loops, d in 0..=1:
        // the edge is symmetric so (0,1) and (1,0) coincide
        let b = SuiteBounds { max_vertices: 2, max_multiplicity: 1, max_loops: 0, max_dim: 1, max_arrows: Some(1) };
        let mut seen = Vec::new();
        for_each_setting(&b, |s| {
            if s.quiver().vertex_count() == 2 {
                seen.push(s.dim().entries().to_vec())
            }
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn classify_ignores_zero_vertices() {
        let b = Budget::default();
        let q = Quiver::with_indices(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 3)]).unwrap();
        for d in [[1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 0], [2, 2, 0, 0]] {
            let s = setting(q.clone(), &d);
            let (norm, _) = s.normalized();
            assert_eq!(
                classify(&s, Mode::Checked, &b).unwrap().is_infinite(),
                classify(&norm, Mode::Checked, &b).unwrap().is_infinite()
            );
        }
    }
}

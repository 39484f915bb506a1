//! Exhaustive orbit counts of `GL(d)` on `rep_Q(d)` over small prime fields.
//!
//! The representation space is swept point by point; each unvisited point's
//! orbit is closed breadth-first under a generating set of every `GL_n(F_p)`
//! factor. Orbits of a finite group are the connected components of its
//! generator graph, so the count is exact.

use std::collections::VecDeque;
use std::fmt;

use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::quiver::QuiverSetting;

/// Moduli accepted by [`count_orbits`].
pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

/// One generator of `GL_n(F_p)` placed at a vertex.
#[derive(Clone, Copy, Debug)]
enum Gen {
    /// `diag(ω, 1, ..., 1)`
    Scale { vertex: usize },
    /// `I + E_ij`
    Add { vertex: usize, i: usize, j: usize },
}

/// `rep_Q(d)` over `F_p` with every matrix stored row-major in one flat vector.
struct RepSpace {
    p: u64,
    omega: u64,
    omega_inv: u64,
    /// `(offset, rows, cols, source, target)` per arrow
    blocks: Vec<(usize, usize, usize, usize, usize)>,
    entries: usize,
    points: u64,
}

impl RepSpace {
    fn new(setting: &QuiverSetting, p: u64) -> Result<Self> {
        if !PRIMES.contains(&p) {
            return Err(Error::Precondition(format!("field size must be one of {PRIMES:?}, got {p}")));
        }
        let d = setting.dim();
        let mut blocks = Vec::new();
        let mut offset = 0usize;
        for a in setting.quiver().arrows() {
            let (rows, cols) = (d.get(a.target) as usize, d.get(a.source) as usize);
            blocks.push((offset, rows, cols, a.source, a.target));
            offset =
                rows.checked_mul(cols).and_then(|c| c.checked_add(offset)).ok_or(Error::Overflow("entry count"))?;
        }
        let points = u32::try_from(offset)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .ok_or(Error::BudgetExceeded { what: "orbit points", budget: u64::MAX })?;
        let omega = primitive_root(p);
        Ok(RepSpace { p, omega, omega_inv: inverse(omega, p), blocks, entries: offset, points })
    }

    fn decode(&self, mut code: u64, out: &mut [u64]) {
        for e in out.iter_mut() {
            *e = code % self.p;
            code /= self.p;
        }
    }

    fn encode(&self, m: &[u64]) -> u64 {
        m.iter().rev().fold(0, |acc, &e| acc * self.p + e)
    }

    /// `M_α ← g_t M_α g_s⁻¹` for the generator `g` at one vertex.
    fn apply(&self, g: Gen, m: &mut [u64]) {
        let p = self.p;
        for &(off, rows, cols, s, t) in &self.blocks {
            let at = |r: usize, c: usize| off + r * cols + c;
            match g {
                Gen::Scale { vertex } => {
                    if t == vertex {
                        for c in 0..cols {
                            m[at(0, c)] = m[at(0, c)] * self.omega % p;
                        }
                    }
                    if s == vertex {
                        for r in 0..rows {
                            m[at(r, 0)] = m[at(r, 0)] * self.omega_inv % p;
                        }
                    }
                }
                Gen::Add { vertex, i, j } => {
                    if t == vertex {
                        // row i += row j
                        for c in 0..cols {
                            m[at(i, c)] = (m[at(i, c)] + m[at(j, c)]) % p;
                        }
                    }
                    if s == vertex {
                        // (I + E_ij)⁻¹ = I - E_ij: column j -= column i
                        for r in 0..rows {
                            m[at(r, j)] = (m[at(r, j)] + p - m[at(r, i)]) % p;
                        }
                    }
                }
            }
        }
    }
}

fn primitive_root(p: u64) -> u64 {
    (1..p.max(2))
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

fn inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).unwrap_or(1)
}

/// Generators of `∏ GL_{d(x)}(F_p)`: a scaling and all transvections per vertex.
fn generators(setting: &QuiverSetting) -> Vec<Gen> {
    let mut gens = Vec::new();
    for (x, &n) in setting.dim().entries().iter().enumerate() {
        let n = n as usize;
        if n == 0 {
            continue;
        }
        gens.push(Gen::Scale { vertex: x });
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    gens.push(Gen::Add { vertex: x, i, j });
                }
            }
        }
    }
    gens
}

/// Number of `GL(d)`-orbits in `rep_Q(d)` over `F_p`.
///
/// Fails with [`Error::BudgetExceeded`] when `p^{Σ d(sα)d(tα)}` exceeds
/// `budget.orbit_points`.
pub fn count_orbits(setting: &QuiverSetting, p: u64, budget: &Budget) -> Result<u64> {
    let space = RepSpace::new(setting, p)?;
    if space.points > budget.orbit_points {
        return Err(Error::BudgetExceeded { what: "orbit points", budget: budget.orbit_points });
    }
    let gens = generators(setting);
    let total = space.points as usize;
    let mut seen = vec![false; total];
    let mut meter = Meter::new("orbit points", budget.orbit_points);
    let mut queue = VecDeque::new();
    let mut m = vec![0u64; space.entries];
    let (mut orbits, mut covered) = (0u64, 0u64);
    for start in 0..total {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        queue.push_back(start as u64);
        let mut size = 0u64;
        while let Some(code) = queue.pop_front() {
            meter.tick()?;
            size += 1;
            for &g in &gens {
                space.decode(code, &mut m);
                space.apply(g, &mut m);
                let next = space.encode(&m) as usize;
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next as u64);
                }
            }
        }
        covered += size;
    }
    if covered != space.points {
        return Err(Error::Internal(format!("orbit sizes sum to {covered}, expected {}", space.points)));
    }
    Ok(orbits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Growth {
    ConstantAcrossFields,
    StrictlyGrowing,
    Inconclusive,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Growth::ConstantAcrossFields => "constant",
            Growth::StrictlyGrowing => "growing",
            Growth::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    /// `(p, orbit count)` in the order the primes were given.
    pub counts: Vec<(u64, u64)>,
    pub growth: Growth,
}

/// Orbit counts over each prime and how they move with the field size.
pub fn growth_signal(setting: &QuiverSetting, primes: &[u64], budget: &Budget) -> Result<GrowthReport> {
    let counts = primes.iter().map(|&p| Ok((p, count_orbits(setting, p, budget)?))).collect::<Result<Vec<_>>>()?;
    let values: Vec<u64> = counts.iter().map(|&(_, c)| c).collect();
    let growth = if values.windows(2).all(|w| w[0] == w[1]) {
        Growth::ConstantAcrossFields
    } else if values.windows(2).all(|w| w[0] < w[1]) {
        Growth::StrictlyGrowing
    } else {
        Growth::Inconclusive
    };
    Ok(GrowthReport { counts, growth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn setting(n: usize, arrows: &[(usize, usize)], d: &[u64]) -> QuiverSetting {
        QuiverSetting::new(Quiver::with_indices(n, arrows).unwrap(), d.to_vec().into()).unwrap()
    }

    /// All invertible n×n matrices over F_p, row-major.
    fn all_gl(n: usize, p: u64) -> Vec<Vec<u64>> {
        let cells = n * n;
        let mut out = Vec::new();
        for code in 0..p.pow(cells as u32) {
            let mut m = vec![0u64; cells];
            let mut c = code;
            for e in m.iter_mut() {
                *e = c % p;
                c /= p;
            }
            if det(&m, n, p) != 0 {
                out.push(m);
            }
        }
        out
    }

    fn det(m: &[u64], n: usize, p: u64) -> u64 {
        match n {
            0 => 1,
            1 => m[0] % p,
            2 => (m[0] * m[3] + p * p - m[1] * m[2] % p) % p,
            _ => unreachable!(),
        }
    }

    fn inv(m: &[u64], n: usize, p: u64) -> Vec<u64> {
        all_gl(n, p).into_iter().find(|g| mul(m, g, n, n, n, p) == identity(n)).unwrap()
    }

    fn identity(n: usize) -> Vec<u64> {
        (0..n * n).map(|k| u64::from(k / n == k % n)).collect()
    }

    fn mul(a: &[u64], b: &[u64], r: usize, k: usize, c: usize, p: u64) -> Vec<u64> {
        let mut out = vec![0; r * c];
        for i in 0..r {
            for j in 0..c {
                out[i * c + j] = (0..k).map(|t| a[i * k + t] * b[t * c + j]).sum::<u64>() % p;
            }
        }
        out
    }

    /// Orbit count by applying every element of the full group to every point.
    fn brute_force(s: &QuiverSetting, p: u64) -> u64 {
        let d: Vec<usize> = s.dim().entries().iter().map(|&x| x as usize).collect();
        let arrows = s.quiver().arrows();
        let cells: Vec<usize> = arrows.iter().map(|a| d[a.target] * d[a.source]).collect();
        let total_cells: usize = cells.iter().sum();
        let total = p.pow(total_cells as u32) as usize;
        let groups: Vec<Vec<(Vec<u64>, Vec<u64>)>> =
            d.iter().map(|&n| all_gl(n, p).into_iter().map(|g| (inv(&g, n, p), g)).collect()).collect();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut choice = vec![0usize; d.len()];
        loop {
            for point in 0..total {
                let mut c = point as u64;
                let mut flat = vec![0u64; total_cells];
                for e in flat.iter_mut() {
                    *e = c % p;
                    c /= p;
                }
                let mut image = Vec::with_capacity(total_cells);
                let mut off = 0;
                for (k, a) in arrows.iter().enumerate() {
                    let m = &flat[off..off + cells[k]];
                    off += cells[k];
                    let (_, gt) = &groups[a.target][choice[a.target]];
                    let (gs_inv, _) = &groups[a.source][choice[a.source]];
                    let left = mul(gt, m, d[a.target], d[a.target], d[a.source], p);
                    image.extend(mul(&left, gs_inv, d[a.target], d[a.source], d[a.source], p));
                }
                let code = image.iter().rev().fold(0u64, |acc, &e| acc * p + e) as usize;
                let (ra, rb) = (find(&mut parent, point), find(&mut parent, code));
                parent[ra] = rb;
            }
            let mut k = 0;
            while k < d.len() {
                choice[k] += 1;
                if choice[k] < groups[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == d.len() {
                break;
            }
        }
        (0..total).filter(|&x| find(&mut parent, x) == x).count() as u64
    }

    #[test]
    fn anchors() {
        let b = Budget::default();
        let single = setting(2, &[(0, 1)], &[1, 1]);
        let kron = setting(2, &[(0, 1), (0, 1)], &[1, 1]);
        let lp = setting(1, &[(0, 0)], &[1]);
        let counts =
            |s: &QuiverSetting| PRIMES[..3].iter().map(|&p| count_orbits(s, p, &b).unwrap()).collect::<Vec<_>>();
        assert_eq!(counts(&single), vec![2, 2, 2]);
        assert_eq!(counts(&kron), vec![4, 5, 7]);
        assert_eq!(counts(&lp), vec![2, 3, 5]);
    }

    #[test]
    fn growth_examples() {
        let b = Budget::default();
        let single = setting(2, &[(0, 1)], &[1, 1]);
        let r = growth_signal(&single, &[2, 3, 5], &b).unwrap();
        assert_eq!(r.growth, Growth::ConstantAcrossFields);
        assert_eq!(r.counts, vec![(2, 2), (3, 2), (5, 2)]);
        let kron = setting(2, &[(0, 1), (0, 1)], &[1, 1]);
        assert_eq!(growth_signal(&kron, &[2, 3, 5], &b).unwrap().growth, Growth::StrictlyGrowing);
        let lp = setting(1, &[(0, 0)], &[1]);
        assert_eq!(growth_signal(&lp, &[2, 3], &b).unwrap().growth, Growth::StrictlyGrowing);
        assert_eq!(growth_signal(&lp, &[3, 2], &b).unwrap().growth, Growth::Inconclusive);
    }

    #[test]
    fn agrees_with_full_group_action() {
        let cases: Vec<QuiverSetting> = vec![
            setting(2, &[(0, 1)], &[2, 1]),
            setting(2, &[(0, 1)], &[2, 2]),
            setting(1, &[(0, 0)], &[2]),
            setting(3, &[(0, 1), (2, 1)], &[1, 2, 1]),
            setting(3, &[(0, 1), (1, 2), (2, 0)], &[1, 1, 1]),
            setting(2, &[(0, 1), (1, 0)], &[1, 2]),
            setting(2, &[(0, 1), (0, 1)], &[1, 2]),
        ];
        for s in &cases {
            for p in [2, 3] {
                if p == 3 && s.dim().total() > 4 {
                    continue;
                }
                assert_eq!(count_orbits(s, p, &Budget::default()).unwrap(), brute_force(s, p), "{s:?} over F_{p}");
            }
        }
    }

    #[test]
    fn zero_dimension_has_one_orbit() {
        let s = setting(2, &[(0, 1), (0, 1)], &[0, 3]);
        assert_eq!(count_orbits(&s, 7, &Budget::default()).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_inputs() {
        let s = setting(2, &[(0, 1), (0, 1)], &[3, 3]);
        assert_eq!(
            count_orbits(&s, 5, &Budget::default()),
            Err(Error::BudgetExceeded { what: "orbit points", budget: 1_000_000 })
        );
        assert!(matches!(count_orbits(&s, 4, &Budget::default()), Err(Error::Precondition(_))));
        let tiny = setting(1, &[(0, 0)], &[1]);
        assert!(count_orbits(&tiny, 3, &Budget::uniform(2)).is_err());
    }

    #[test]
    fn relabeling_and_reversal_invariance() {
        let b = Budget::default();
        let s = setting(3, &[(0, 1), (2, 1)], &[1, 2, 1]);
        let perm = [2, 0, 1];
        let mut d = vec![0; 3];
        for x in 0..3 {
            d[perm[x]] = s.dim().get(x);
        }
        let relabeled = QuiverSetting::new(s.quiver().permuted(&perm), d.into()).unwrap();
        let reversed = s.with_quiver(s.quiver().with_reversed_arrow(0)).unwrap();
        for p in [2, 3] {
            let c = count_orbits(&s, p, &b).unwrap();
            assert_eq!(count_orbits(&relabeled, p, &b).unwrap(), c);
            assert_eq!(count_orbits(&reversed, p, &b).unwrap(), c);
        }
    }
}

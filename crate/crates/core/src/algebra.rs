//! Radical-square-zero algebras and their bipartite quiver settings.
//!
//! An algebra `A` with `rad² A = 0` is described by the sizes `n_1..n_l` of the
//! matrix blocks of `A / rad A` and the ranks `r_{i,j}` of the bimodules
//! `e_i rad(A) e_j`. The associated setting has vertices `(0,i)` and `(1,i)`,
//! `r_{i,j}` arrows `(1,j) → (0,i)` and weight `n_i` on both copies of `i`;
//! `A` has finitely many orbits under `(u, v) * a = u a v⁻¹` exactly when that
//! setting is representation finite.

use std::collections::BTreeSet;
use std::fmt;

use crate::budget::Budget;
use crate::classify::{classify, Mode};
use crate::error::{Error, Result};
use crate::quiver::{Arrow, DimVector, Quiver, QuiverSetting};
use crate::witness::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    block_sizes: Vec<u64>,
    ranks: Vec<Vec<u64>>,
}

impl AlgebraSpec {
    pub fn new(block_sizes: Vec<u64>, ranks: Vec<Vec<u64>>) -> Result<Self> {
        let l = block_sizes.len();
        if l == 0 {
            return Err(Error::InvalidAlgebra("at least one block is required".into()));
        }
        if let Some(i) = block_sizes.iter().position(|&n| n == 0) {
            return Err(Error::InvalidAlgebra(format!("block {} has size 0", i + 1)));
        }
        if ranks.len() != l {
            return Err(Error::InvalidAlgebra(format!("{} rank rows for {l} blocks", ranks.len())));
        }
        if let Some(i) = ranks.iter().position(|row| row.len() != l) {
            return Err(Error::InvalidAlgebra(format!(
                "rank row {} has {} entries, expected {l}",
                i + 1,
                ranks[i].len()
            )));
        }
        Ok(AlgebraSpec { block_sizes, ranks })
    }

    pub fn blocks(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn block_sizes(&self) -> &[u64] {
        &self.block_sizes
    }

    pub fn ranks(&self) -> &[Vec<u64>] {
        &self.ranks
    }

    /// Same algebra with block `i` renamed `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> AlgebraSpec {
        let l = self.blocks();
        let mut block_sizes = vec![0; l];
        let mut ranks = vec![vec![0; l]; l];
        for i in 0..l {
            block_sizes[perm[i]] = self.block_sizes[i];
            for j in 0..l {
                ranks[perm[i]][perm[j]] = self.ranks[i][j];
            }
        }
        AlgebraSpec { block_sizes, ranks }
    }

    /// Lexicographically smallest relabelling of the blocks.
    pub fn canonical(&self) -> AlgebraSpec {
        let l = self.blocks();
        let mut best = self.clone();
        let mut perm: Vec<usize> = (0..l).collect();
        // Heap's algorithm
        let mut c = vec![0usize; l];
        let mut i = 0;
        while i < l {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let cand = self.permuted(&perm);
                if cand < best {
                    best = cand;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "blocks {:?} ranks {:?}", self.block_sizes, self.ranks)
    }
}

/// A setting whose vertices split into sources `Δ''` and targets `Δ'`, paired
/// by a bijection `δ: Δ'' → Δ'` preserving weights, with every arrow running
/// from a source to a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSetting {
    setting: QuiverSetting,
    /// `(y, δ y)` for each source `y`; the order fixes the block order.
    pairs: Vec<(usize, usize)>,
}

impl BipartiteSetting {
    pub fn new(setting: QuiverSetting, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = setting.quiver().vertex_count();
        let bad = |m: String| Err(Error::InvalidBipartite(m));
        let mut role = vec![0u8; n];
        for &(y, x) in &pairs {
            if y >= n || x >= n {
                return bad("pair refers to a missing vertex".into());
            }
            if role[y] != 0 || role[x] != 0 || x == y {
                return bad(format!(
                    "vertex paired twice in ({}, {})",
                    setting.quiver().name(y),
                    setting.quiver().name(x)
                ));
            }
            role[y] = 2;
            role[x] = 1;
            if setting.dim().get(x) != setting.dim().get(y) {
                return bad(format!(
                    "weights differ across the pair ({}, {})",
                    setting.quiver().name(y),
                    setting.quiver().name(x)
                ));
            }
        }
        if let Some(x) = role.iter().position(|&r| r == 0) {
            return bad(format!("vertex {} is not paired", setting.quiver().name(x)));
        }
        for a in setting.quiver().arrows() {
            if role[a.source] != 2 || role[a.target] != 1 {
                return bad(format!(
                    "arrow {} -> {} does not run from a source to a target",
                    setting.quiver().name(a.source),
                    setting.quiver().name(a.target)
                ));
            }
        }
        Ok(BipartiteSetting { setting, pairs })
    }

    /// Pairs given by vertex names `(source, target)`.
    pub fn from_named_pairs(setting: QuiverSetting, pairs: &[(&str, &str)]) -> Result<Self> {
        let q = setting.quiver();
        let idx = |s: &str| q.index_of(s).ok_or_else(|| Error::UnknownVertex(s.to_string()));
        let pairs = pairs.iter().map(|(y, x)| Ok((idx(y)?, idx(x)?))).collect::<Result<Vec<_>>>()?;
        BipartiteSetting::new(setting, pairs)
    }

    pub fn setting(&self) -> &QuiverSetting {
        &self.setting
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Block index of each vertex (its pair's position).
    fn block_of(&self) -> Vec<usize> {
        let mut block = vec![usize::MAX; self.setting.quiver().vertex_count()];
        for (i, &(y, x)) in self.pairs.iter().enumerate() {
            block[x] = i;
            block[y] = i;
        }
        block
    }

    /// Reads off block sizes from the target weights and `r_{i,j}` as the
    /// number of arrows from the source paired with target `j` into target `i`.
    pub fn to_spec(&self) -> AlgebraSpec {
        let l = self.pairs.len();
        let block = self.block_of();
        let block_sizes = self.pairs.iter().map(|&(_, x)| self.setting.dim().get(x)).collect();
        let mut ranks = vec![vec![0; l]; l];
        for a in self.setting.quiver().arrows() {
            ranks[block[a.target]][block[a.source]] += 1;
        }
        AlgebraSpec { block_sizes, ranks }
    }
}

/// `(Δ_A, w_A)`: vertices `0_1..0_l` then `1_1..1_l`.
pub fn algebra_to_setting(spec: &AlgebraSpec) -> BipartiteSetting {
    let l = spec.blocks();
    let mut names: Vec<String> = (1..=l).map(|i| format!("0_{i}")).collect();
    names.extend((1..=l).map(|i| format!("1_{i}")));
    let mut arrows = Vec::new();
    for i in 0..l {
        for j in 0..l {
            arrows.extend(std::iter::repeat_n(Arrow::new(l + j, i), spec.ranks[i][j] as usize));
        }
    }
    let quiver = Quiver::new(names, arrows).expect("generated names are distinct");
    let weights: Vec<u64> = spec.block_sizes.iter().chain(&spec.block_sizes).copied().collect();
    let setting = QuiverSetting::with_limit(quiver, DimVector::new(weights), u64::MAX).expect("sizes match");
    let pairs = (0..l).map(|i| (l + i, i)).collect();
    BipartiteSetting { setting, pairs }
}

/// True when two bipartite settings describe the same algebra up to renaming
/// the blocks.
pub fn same_up_to_relabeling(a: &BipartiteSetting, b: &BipartiteSetting) -> bool {
    a.to_spec().canonical() == b.to_spec().canonical()
}

/// Multiplication table of the algebra rebuilt from a bipartite setting.
///
/// The basis consists of matrix units: `E_ab` in each block `M_{w(x)}` for
/// targets `x`, then `E_ab` in each radical component `M_{w(x) × w(y)}`, one
/// component per arrow `y → x`. A product of two basis elements is zero or a
/// single basis element with coefficient 1, so the structure constants are
/// stored densely as one entry per ordered pair of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    dim: usize,
    products: Vec<Option<u32>>,
    radical: Vec<bool>,
}

/// Builds the product `(M, M_α)(N, N_α) = (M_x N_x, M_x N_α + M_α N_{δy})`.
pub fn setting_to_algebra(bs: &BipartiteSetting) -> Result<MultTable> {
    let bs = BipartiteSetting::new(bs.setting.clone(), bs.pairs.clone())?;
    let w = bs.setting.dim().entries();
    let block = bs.block_of();
    let sizes: Vec<usize> = bs.pairs.iter().map(|&(_, x)| w[x] as usize).collect();

    let mut block_base = Vec::with_capacity(sizes.len());
    let mut next = 0usize;
    for &n in &sizes {
        block_base.push(next);
        next += n * n;
    }
    let semisimple = next;
    // (base, left block, right block) per arrow
    let mut comps = Vec::new();
    for a in bs.setting.quiver().arrows() {
        let (i, j) = (block[a.target], block[a.source]);
        comps.push((next, i, j));
        next += sizes[i] * sizes[j];
    }
    let dim = next;
    if dim > u32::MAX as usize {
        return Err(Error::InvalidAlgebra("algebra too large".into()));
    }

    let mut products = vec![None; dim * dim];
    let mut set = |a: usize, b: usize, c: usize| products[a * dim + b] = Some(c as u32);
    for (i, &n) in sizes.iter().enumerate() {
        let base = block_base[i];
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    // E_ab E_bd = E_ad
                    set(base + a * n + b, base + b * n + d, base + a * n + d);
                }
            }
        }
    }
    for &(base, i, j) in &comps {
        let (ni, nj) = (sizes[i], sizes[j]);
        for a in 0..ni {
            for b in 0..ni {
                for d in 0..nj {
                    // left action of block i
                    set(block_base[i] + a * ni + b, base + b * nj + d, base + a * nj + d);
                }
            }
        }
        for a in 0..ni {
            for b in 0..nj {
                for d in 0..nj {
                    // right action of block j
                    set(base + a * nj + b, block_base[j] + b * nj + d, base + a * nj + d);
                }
            }
        }
    }
    let radical = (0..dim).map(|k| k >= semisimple).collect();
    Ok(MultTable { dim, products, radical })
}

impl MultTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_radical(&self, k: usize) -> bool {
        self.radical[k]
    }

    /// Product of basis elements `a · b`, if nonzero.
    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.products[a * self.dim + b].map(|c| c as usize)
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, u: &[i64], v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim];
        for (a, &ua) in u.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (b, &vb) in v.iter().enumerate().filter(|(_, &x)| x != 0) {
                if let Some(c) = self.product(a, b) {
                    out[c] += ua * vb;
                }
            }
        }
        out
    }

    /// Sum of the diagonal matrix units of all blocks.
    pub fn identity(&self) -> Vec<i64> {
        (0..self.dim).map(|k| i64::from(!self.radical[k] && self.product(k, k) == Some(k))).collect()
    }

    /// `(ab)c = a(bc)` on all basis triples. Only triples where one side is
    /// nonzero are visited, which covers every possible failure.
    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        let mut right: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut left: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (k, c) in self.products.iter().enumerate() {
            if let Some(c) = c.map(|c| c as usize) {
                let (a, b) = (k / n, k % n);
                right[a].push((b, c));
                left[b].push((a, c));
            }
        }
        for (a, row) in right.iter().enumerate() {
            for &(b, ab) in row {
                for &(c, abc) in &right[ab] {
                    if self.product(b, c).and_then(|bc| self.product(a, bc)) != Some(abc) {
                        return false;
                    }
                }
            }
        }
        for (b, row) in right.iter().enumerate() {
            for &(c, bc) in row {
                for &(a, abc) in &left[bc] {
                    if self.product(a, b).and_then(|ab| self.product(ab, c)) != Some(abc) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn radical_squares_to_zero(&self) -> bool {
        let rad: Vec<usize> = (0..self.dim).filter(|&k| self.radical[k]).collect();
        rad.iter().all(|&a| rad.iter().all(|&b| self.product(a, b).is_none()))
    }

    /// `1 · e = e · 1 = e` for every basis element `e`.
    pub fn has_identity(&self) -> bool {
        let one = self.identity();
        (0..self.dim).all(|k| {
            let mut e = vec![0i64; self.dim];
            e[k] = 1;
            self.multiply(&one, &e) == e && self.multiply(&e, &one) == e
        })
    }

    /// Recovers block sizes and bimodule ranks from the table alone.
    ///
    /// Blocks are the classes of the semisimple basis under "has a nonzero
    /// product with"; their units are sums of idempotent basis elements, and
    /// each radical basis element lies in `f_i rad f_j` for one pair of units.
    pub fn recover_spec(&self) -> Result<AlgebraSpec> {
        let n = self.dim;
        let semi: Vec<usize> = (0..n).filter(|&k| !self.radical[k]).collect();
        let mut class = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &start in &semi {
            if class[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut members = vec![start];
            class[start] = id;
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                for &v in &semi {
                    if class[v] == usize::MAX && (self.product(u, v).is_some() || self.product(v, u).is_some()) {
                        class[v] = id;
                        members.push(v);
                    }
                }
                k += 1;
            }
            blocks.push(members);
        }
        let mut block_sizes = Vec::with_capacity(blocks.len());
        let mut units = Vec::with_capacity(blocks.len());
        for members in &blocks {
            let size = (members.len() as f64).sqrt().round() as usize;
            if size * size != members.len() {
                return Err(Error::InvalidAlgebra(format!(
                    "block of {} elements is not a matrix algebra",
                    members.len()
                )));
            }
            let mut unit = vec![0i64; n];
            for &k in members {
                if self.product(k, k) == Some(k) {
                    unit[k] = 1;
                }
            }
            block_sizes.push(size as u64);
            units.push(unit);
        }
        let l = blocks.len();
        let mut counts = vec![vec![0u64; l]; l];
        for k in (0..n).filter(|&k| self.radical[k]) {
            let mut e = vec![0i64; n];
            e[k] = 1;
            let left = units.iter().position(|f| self.multiply(f, &e) == e);
            let right = units.iter().position(|f| self.multiply(&e, f) == e);
            match (left, right) {
                (Some(i), Some(j)) => counts[i][j] += 1,
                _ => return Err(Error::InvalidAlgebra(format!("radical element {k} is not in a single f_i rad f_j"))),
            }
        }
        let mut ranks = vec![vec![0u64; l]; l];
        for i in 0..l {
            for j in 0..l {
                let cell = block_sizes[i] * block_sizes[j];
                if !counts[i][j].is_multiple_of(cell) {
                    return Err(Error::InvalidAlgebra(format!("f_{i} rad f_{j} has dimension {}", counts[i][j])));
                }
                ranks[i][j] = counts[i][j] / cell;
            }
        }
        AlgebraSpec::new(block_sizes, ranks)
    }
}

/// Classification of the orbit problem for the algebra.
pub fn finitely_many_orbits(spec: &AlgebraSpec, mode: Mode, budget: &Budget) -> Result<Verdict> {
    classify(algebra_to_setting(spec).setting(), mode, budget)
}

/// All bimodule ranks at most one.
pub fn is_distributive(spec: &AlgebraSpec) -> bool {
    spec.ranks.iter().flatten().all(|&r| r <= 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub passed: bool,
    pub violations: Vec<String>,
}

impl ConditionResult {
    fn from(violations: Vec<String>) -> Self {
        ConditionResult { passed: violations.is_empty(), violations }
    }
}

/// The three sufficient conditions for finitely many orbits, each evaluated
/// on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrReport {
    /// No cycles in the underlying graph; a doubled edge counts as a cycle.
    pub c1: ConditionResult,
    /// A vertex of weight ≥ 2 starts at most three and ends at most three arrows.
    pub c2: ConditionResult,
    /// An arrow between weight ≥ 2 vertices has `out(s) + in(t) ≤ 4`.
    pub c3: ConditionResult,
}

impl OrReport {
    pub fn all_pass(&self) -> bool {
        self.c1.passed && self.c2.passed && self.c3.passed
    }
}

pub fn check_or_conditions(bs: &BipartiteSetting) -> OrReport {
    check_or_conditions_on(bs.setting())
}

/// Evaluates the three conditions on any setting.
pub fn check_or_conditions_on(setting: &QuiverSetting) -> OrReport {
    let q = setting.quiver();
    let w = setting.dim().entries();
    let n = q.vertex_count();
    let name = |x: usize| q.name(x);

    let mut c1 = Vec::new();
    let mut doubled = BTreeSet::new();
    for a in q.arrows() {
        if a.is_loop() {
            c1.push(format!("loop at {}", name(a.source)));
        } else if q.multiplicity(a.source, a.target) > 1 {
            doubled.insert((a.source.min(a.target), a.source.max(a.target)));
        }
    }
    for (x, y) in doubled {
        c1.push(format!("multiple arrows between {} and {}", name(x), name(y)));
    }
    if c1.is_empty() {
        // simple graph: any edge closing a union-find cycle lies on a cycle
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in q.arrows() {
            let (rs, rt) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if rs == rt {
                c1.push(format!("cycle through {} -> {}", name(a.source), name(a.target)));
            } else {
                parent[rs] = rt;
            }
        }
    }

    let out_deg: Vec<usize> = (0..n).map(|x| q.arrows().iter().filter(|a| a.source == x).count()).collect();
    let in_deg: Vec<usize> = (0..n).map(|x| q.arrows().iter().filter(|a| a.target == x).count()).collect();

    let mut c2 = Vec::new();
    for x in (0..n).filter(|&x| w[x] >= 2) {
        if out_deg[x] > 3 {
            c2.push(format!("{} starts {} arrows", name(x), out_deg[x]));
        }
        if in_deg[x] > 3 {
            c2.push(format!("{} ends {} arrows", name(x), in_deg[x]));
        }
    }

    let mut c3 = Vec::new();
    for a in q.arrows() {
        if w[a.source] >= 2 && w[a.target] >= 2 {
            let total = out_deg[a.source] + in_deg[a.target];
            if total > 4 {
                c3.push(format!(
                    "arrow {} -> {}: {} + {} = {total} > 4",
                    name(a.source),
                    name(a.target),
                    out_deg[a.source],
                    in_deg[a.target]
                ));
            }
        }
    }
    OrReport { c1: ConditionResult::from(c1), c2: ConditionResult::from(c2), c3: ConditionResult::from(c3) }
}

/// Every algebra with at most `max_blocks` blocks, sizes in `1..=max_size` and
/// ranks in `0..=max_rank`, one per relabelling class.
pub fn enumerate_specs(max_blocks: usize, max_size: u64, max_rank: u64) -> Vec<AlgebraSpec> {
    let mut out = BTreeSet::new();
    for l in 1..=max_blocks {
        let slots = l + l * l;
        let mut code = vec![0u64; slots];
        loop {
            let sizes: Vec<u64> = code[..l].iter().map(|&c| c + 1).collect();
            let ranks: Vec<Vec<u64>> = (0..l).map(|i| code[l + i * l..l + (i + 1) * l].to_vec()).collect();
            out.insert(AlgebraSpec { block_sizes: sizes, ranks }.canonical());
            let mut k = 0;
            loop {
                if k == slots {
                    break;
                }
                let limit = if k < l { max_size - 1 } else { max_rank };
                if code[k] < limit {
                    code[k] += 1;
                    break;
                }
                code[k] = 0;
                k += 1;
            }
            if k == slots {
                break;
            }
        }
    }
    out.into_iter().collect()
}

//! Quivers, dimension vectors, quiver settings and injective quiver morphisms,
//! together with the Tits quadratic form and its symmetric bilinear form.
//!
//! Vertices are addressed by their position in declaration order; the opaque
//! names are kept only for input and output. Arrows form an ordered multiset:
//! parallel arrows and loops are repeated entries.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest dimension entry accepted by [`QuiverSetting::new`].
pub const DEFAULT_DIM_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(source: usize, target: usize) -> Self {
        Arrow { source, target }
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }

    /// True when the arrow joins `x` and `y` in either direction.
    pub fn joins(&self, x: usize, y: usize) -> bool {
        (self.source == x && self.target == y) || (self.source == y && self.target == x)
    }

    pub fn reversed(&self) -> Self {
        Arrow::new(self.target, self.source)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::with_capacity(vertices.len());
        for (i, name) in vertices.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let n = vertices.len();
        for a in &arrows {
            for index in [a.source, a.target] {
                if index >= n {
                    return Err(Error::ArrowOutOfRange { index, vertices: n });
                }
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from vertex names and arrows given by endpoint names.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownVertex(s.to_string()));
        let arrows = arrows.iter().map(|(s, t)| Ok(Arrow::new(lookup(s)?, lookup(t)?))).collect::<Result<Vec<_>>>()?;
        Quiver::new(names, arrows)
    }

    /// Quiver with vertices `0..n` named by their index.
    pub fn with_indices(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let names = (0..n).map(|i| format!("v{i}")).collect();
        Quiver::new(names, arrows.iter().map(|&(s, t)| Arrow::new(s, t)).collect())
    }

    pub fn empty() -> Self {
        Quiver { vertices: Vec::new(), arrows: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn name(&self, x: usize) -> &str {
        &self.vertices[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn loop_count(&self, x: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == x && a.target == x).count()
    }

    /// Number of arrows joining `x` and `y` in either direction (`x != y`).
    pub fn multiplicity(&self, x: usize, y: usize) -> usize {
        self.arrows.iter().filter(|a| a.joins(x, y)).count()
    }

    /// Distinct neighbours of `x` in the underlying graph, loops excluded, ascending.
    pub fn neighbors(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arrows
            .iter()
            .filter(|a| !a.is_loop())
            .filter_map(|a| {
                if a.source == x {
                    Some(a.target)
                } else if a.target == x {
                    Some(a.source)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// First arrow (in arrow order) joining `x` and `y` in either direction.
    pub fn arrow_between(&self, x: usize, y: usize) -> Option<usize> {
        self.arrows.iter().position(|a| a.joins(x, y))
    }

    /// Tits form `q(v) = Σ v(x)² − Σ_α v(sα)·v(tα)` on an integer vector.
    pub fn tits_form(&self, v: &[i64]) -> Result<i64> {
        self.check_len(v.len())?;
        let mut q: i64 = 0;
        for &x in v {
            q = x.checked_mul(x).and_then(|sq| q.checked_add(sq)).ok_or(Error::Overflow("tits form"))?;
        }
        for a in &self.arrows {
            q = v[a.source]
                .checked_mul(v[a.target])
                .and_then(|p| q.checked_sub(p))
                .ok_or(Error::Overflow("tits form"))?;
        }
        Ok(q)
    }

    /// Symmetric bilinear form `(a, b) = q(a + b) − q(a) − q(b)`, evaluated directly
    /// as `2 Σ a(x) b(x) − Σ_α (a(sα) b(tα) + a(tα) b(sα))`.
    pub fn bilinear_form(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let ovf = || Error::Overflow("bilinear form");
        let mut acc: i64 = 0;
        for (x, y) in a.iter().zip(b) {
            acc = x.checked_mul(*y).and_then(|p| p.checked_mul(2)).and_then(|p| acc.checked_add(p)).ok_or_else(ovf)?;
        }
        for arr in &self.arrows {
            let (s, t) = (arr.source, arr.target);
            let p = a[s]
                .checked_mul(b[t])
                .and_then(|p| a[t].checked_mul(b[s]).and_then(|r| p.checked_add(r)))
                .ok_or_else(ovf)?;
            acc = acc.checked_sub(p).ok_or_else(ovf)?;
        }
        Ok(acc)
    }

    /// `(v, e_x)` for a standard basis vector.
    pub fn pairing_with_basis(&self, v: &[i64], x: usize) -> Result<i64> {
        self.check_len(v.len())?;
        let ovf = || Error::Overflow("bilinear form");
        let mut acc = v[x].checked_mul(2).ok_or_else(ovf)?;
        for a in &self.arrows {
            if a.source == x {
                acc = acc.checked_sub(v[a.target]).ok_or_else(ovf)?;
            }
            if a.target == x {
                acc = acc.checked_sub(v[a.source]).ok_or_else(ovf)?;
            }
        }
        Ok(acc)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.vertices.len() {
            return Err(Error::DimensionMismatch { expected: self.vertices.len(), got: len });
        }
        Ok(())
    }

    /// Connected components of the underlying graph, each ascending, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.arrows {
            let (rs, rt) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if rs != rt {
                parent[rs.max(rt)] = rs.min(rt);
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for x in 0..n {
            let r = find(&mut parent, x);
            let k = *slot.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[k].push(x);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subquiver on `keep` (taken in ascending order). Also returns the
    /// ambient indices of the kept vertices and arrows.
    pub fn induced(&self, keep: &[usize]) -> (Quiver, Vec<usize>, Vec<usize>) {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &x) in kept.iter().enumerate() {
            new_index[x] = i;
        }
        let mut arrows = Vec::new();
        let mut arrow_ids = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            if new_index[a.source] != usize::MAX && new_index[a.target] != usize::MAX {
                arrows.push(Arrow::new(new_index[a.source], new_index[a.target]));
                arrow_ids.push(k);
            }
        }
        let vertices = kept.iter().map(|&x| self.vertices[x].clone()).collect();
        (Quiver { vertices, arrows }, kept, arrow_ids)
    }

    pub fn without_arrow(&self, k: usize) -> Quiver {
        let mut arrows = self.arrows.clone();
        arrows.remove(k);
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// Same quiver with arrow `k` pointing the other way.
    pub fn with_reversed_arrow(&self, k: usize) -> Quiver {
        let mut arrows = self.arrows.clone();
        arrows[k] = arrows[k].reversed();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// Relabels vertex `x` as `perm[x]` (a permutation of `0..n`).
    pub fn permuted(&self, perm: &[usize]) -> Quiver {
        let n = self.vertex_count();
        let mut vertices = vec![String::new(); n];
        for x in 0..n {
            vertices[perm[x]] = self.vertices[x].clone();
        }
        let arrows = self.arrows.iter().map(|a| Arrow::new(perm[a.source], perm[a.target])).collect();
        Quiver { vertices, arrows }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.vertices.join(" "))?;
        for a in &self.arrows {
            write!(f, " {}->{}", self.vertices[a.source], self.vertices[a.target])?;
        }
        Ok(())
    }
}

/// Natural number per vertex, aligned with the vertex order of a quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<u64>);

impl DimVector {
    pub fn new(entries: Vec<u64>) -> Self {
        DimVector(entries)
    }

    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn constant(n: usize, c: u64) -> Self {
        DimVector(vec![c; n])
    }

    /// Standard basis vector `e_x`.
    pub fn unit(n: usize, x: usize) -> Self {
        let mut v = vec![0; n];
        v[x] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, x: usize) -> u64 {
        self.0[x]
    }

    pub fn is_nonzero(&self) -> bool {
        self.0.iter().any(|&v| v > 0)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&v| v > 0)
    }

    /// Componentwise `self ≤ other`; vectors of different length are incomparable.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.0[x] > 0).collect()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, m: u64) -> DimVector {
        DimVector(self.0.iter().map(|v| v * m).collect())
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&v| v as i64).collect()
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }
}

impl From<Vec<u64>> for DimVector {
    fn from(v: Vec<u64>) -> Self {
        DimVector(v)
    }
}

/// A quiver paired with a dimension vector on its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverSetting {
    quiver: Quiver,
    dim: DimVector,
}

impl QuiverSetting {
    pub fn new(quiver: Quiver, dim: DimVector) -> Result<Self> {
        Self::with_limit(quiver, dim, DEFAULT_DIM_LIMIT)
    }

    pub fn with_limit(quiver: Quiver, dim: DimVector, limit: u64) -> Result<Self> {
        if dim.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch { expected: quiver.vertex_count(), got: dim.len() });
        }
        if let Some(x) = (0..dim.len()).find(|&x| dim.get(x) > limit) {
            return Err(Error::DimensionLimit { vertex: quiver.name(x).to_string(), value: dim.get(x), limit });
        }
        Ok(QuiverSetting { quiver, dim })
    }

    pub fn empty() -> Self {
        QuiverSetting { quiver: Quiver::empty(), dim: DimVector::zero(0) }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn into_parts(self) -> (Quiver, DimVector) {
        (self.quiver, self.dim)
    }

    /// `q_Q(d)` for this setting.
    pub fn tits_form(&self) -> Result<i64> {
        self.quiver.tits_form(&self.dim.to_signed())
    }

    /// Induced subsetting on `keep`; arrows with an endpoint outside are dropped.
    pub fn restrict(&self, keep: &[usize]) -> QuiverSetting {
        let (quiver, kept, _) = self.quiver.induced(keep);
        let dim = DimVector(kept.iter().map(|&x| self.dim.get(x)).collect());
        QuiverSetting { quiver, dim }
    }

    /// Deletes vertices carrying the zero space together with their arrows.
    /// Returns the normalized setting and the ambient index of each kept vertex.
    pub fn normalized(&self) -> (QuiverSetting, Vec<usize>) {
        let keep = self.dim.support();
        let (quiver, kept, _) = self.quiver.induced(&keep);
        let dim = DimVector(kept.iter().map(|&x| self.dim.get(x)).collect());
        (QuiverSetting { quiver, dim }, kept)
    }

    pub fn with_dim(&self, dim: DimVector) -> Result<QuiverSetting> {
        QuiverSetting::new(self.quiver.clone(), dim)
    }

    pub fn with_quiver(&self, quiver: Quiver) -> Result<QuiverSetting> {
        QuiverSetting::new(quiver, self.dim.clone())
    }
}

/// `q_Q(d)` of a setting.
pub fn tits_form(setting: &QuiverSetting) -> Result<i64> {
    setting.tits_form()
}

/// `(a, b)` on dimension vectors of `quiver`.
pub fn bilinear_form(quiver: &Quiver, a: &DimVector, b: &DimVector) -> Result<i64> {
    quiver.bilinear_form(&a.to_signed(), &b.to_signed())
}

pub fn restrict(setting: &QuiverSetting, keep: &[usize]) -> QuiverSetting {
    setting.restrict(keep)
}

pub fn components(quiver: &Quiver) -> Vec<Vec<usize>> {
    quiver.components()
}

/// An injective quiver morphism `source → target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    source: Quiver,
    target: Quiver,
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

impl Embedding {
    pub fn new(source: Quiver, target: Quiver, vertex_map: Vec<usize>, arrow_map: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidEmbedding(m));
        if vertex_map.len() != source.vertex_count() {
            return bad(format!("vertex map has {} entries for {} vertices", vertex_map.len(), source.vertex_count()));
        }
        if arrow_map.len() != source.arrow_count() {
            return bad(format!("arrow map has {} entries for {} arrows", arrow_map.len(), source.arrow_count()));
        }
        if let Some(&y) = vertex_map.iter().find(|&&y| y >= target.vertex_count()) {
            return bad(format!("vertex image {y} out of range"));
        }
        if let Some(&b) = arrow_map.iter().find(|&&b| b >= target.arrow_count()) {
            return bad(format!("arrow image {b} out of range"));
        }
        if !is_injective(&vertex_map) {
            return bad("vertex map is not injective".into());
        }
        if !is_injective(&arrow_map) {
            return bad("arrow map is not injective".into());
        }
        for (k, a) in source.arrows().iter().enumerate() {
            let img = target.arrows()[arrow_map[k]];
            if img.source != vertex_map[a.source] || img.target != vertex_map[a.target] {
                return bad(format!("arrow {k} is not mapped compatibly with its endpoints"));
            }
        }
        Ok(Embedding { source, target, vertex_map, arrow_map })
    }

    pub fn identity(quiver: &Quiver) -> Self {
        Embedding {
            source: quiver.clone(),
            target: quiver.clone(),
            vertex_map: (0..quiver.vertex_count()).collect(),
            arrow_map: (0..quiver.arrow_count()).collect(),
        }
    }

    pub fn source(&self) -> &Quiver {
        &self.source
    }

    pub fn target(&self) -> &Quiver {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    /// `ψ_* d`: sums `d` over fibres; zero outside the image.
    pub fn pushforward(&self, d: &DimVector) -> Result<DimVector> {
        if d.len() != self.source.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.source.vertex_count(), got: d.len() });
        }
        let mut out = vec![0u64; self.target.vertex_count()];
        for (x, &y) in self.vertex_map.iter().enumerate() {
            out[y] = out[y].checked_add(d.get(x)).ok_or(Error::Overflow("pushforward"))?;
        }
        Ok(DimVector(out))
    }

    /// `ψ^* d'`: reads `d'` at the image of each source vertex.
    pub fn pullback(&self, d: &DimVector) -> Result<DimVector> {
        if d.len() != self.target.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.target.vertex_count(), got: d.len() });
        }
        Ok(DimVector(self.vertex_map.iter().map(|&y| d.get(y)).collect()))
    }
}

pub fn pushforward(e: &Embedding, d: &DimVector) -> Result<DimVector> {
    e.pushforward(d)
}

pub fn pullback(e: &Embedding, d: &DimVector) -> Result<DimVector> {
    e.pullback(d)
}

fn is_injective(map: &[usize]) -> bool {
    let mut sorted = map.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> Quiver {
        Quiver::from_names(&["a", "b"], &[("a", "b"), ("a", "b")]).unwrap()
    }

    fn single_arrow() -> Quiver {
        Quiver::from_names(&["x", "y"], &[("x", "y")]).unwrap()
    }

    #[test]
    fn tits_form_examples() {
        let s = QuiverSetting::new(kronecker(), vec![1, 1].into()).unwrap();
        assert_eq!(tits_form(&s).unwrap(), 0);
        let one = QuiverSetting::new(Quiver::from_names(&["x"], &[]).unwrap(), vec![1].into()).unwrap();
        assert_eq!(tits_form(&one).unwrap(), 1);
        let s = QuiverSetting::new(single_arrow(), vec![2, 3].into()).unwrap();
        assert_eq!(tits_form(&s).unwrap(), 7);
    }

    #[test]
    fn loops_subtract_square() {
        let q = Quiver::from_names(&["x"], &[("x", "x"), ("x", "x")]).unwrap();
        assert_eq!(q.tits_form(&[3]).unwrap(), 9 - 18);
    }

    #[test]
    fn bilinear_examples() {
        let k = kronecker();
        let z = DimVector::zero(2);
        let h: DimVector = vec![1, 1].into();
        assert_eq!(bilinear_form(&k, &z, &h).unwrap(), 0);
        assert_eq!(bilinear_form(&k, &h, &h).unwrap(), 0);
        let a = single_arrow();
        assert_eq!(bilinear_form(&a, &DimVector::unit(2, 0), &DimVector::unit(2, 1)).unwrap(), -1);
    }

    #[test]
    fn bilinear_rejects_mismatch() {
        let err = bilinear_form(&kronecker(), &DimVector::zero(2), &DimVector::zero(3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn overflow_is_reported() {
        let q = single_arrow();
        assert_eq!(q.tits_form(&[i64::MAX, 1]).unwrap_err(), Error::Overflow("tits form"));
    }

    #[test]
    fn dimension_limit() {
        let err = QuiverSetting::new(single_arrow(), vec![1, DEFAULT_DIM_LIMIT + 1].into()).unwrap_err();
        assert!(matches!(err, Error::DimensionLimit { .. }));
        assert!(QuiverSetting::with_limit(single_arrow(), vec![5, 5].into(), 4).is_err());
    }

    #[test]
    fn invalid_quivers() {
        assert!(matches!(Quiver::from_names(&["a", "a"], &[]), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Quiver::from_names(&["a"], &[("a", "b")]), Err(Error::UnknownVertex(_))));
        assert!(Quiver::with_indices(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn restrict_examples() {
        let path = Quiver::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let s = QuiverSetting::new(path, vec![1, 2, 3].into()).unwrap();
        assert_eq!(restrict(&s, &[0, 1, 2]), s);
        let empty = restrict(&s, &[]);
        assert_eq!(empty.quiver().vertex_count(), 0);
        assert_eq!(empty.quiver().arrow_count(), 0);
        let ab = restrict(&s, &[0, 1]);
        assert_eq!(ab.quiver().arrows(), &[Arrow::new(0, 1)]);
        assert_eq!(ab.dim().entries(), &[1, 2]);
    }

    #[test]
    fn components_examples() {
        let path = Quiver::from_names(&["a", "b", "c"], &[("c", "b"), ("a", "b")]).unwrap();
        assert_eq!(components(&path), vec![vec![0, 1, 2]]);
        let two = Quiver::with_indices(2, &[]).unwrap();
        assert_eq!(components(&two), vec![vec![0], vec![1]]);
        assert!(components(&Quiver::empty()).is_empty());
    }

    #[test]
    fn embedding_validation() {
        let a = single_arrow();
        let k = kronecker();
        assert!(Embedding::new(a.clone(), k.clone(), vec![0, 1], vec![1]).is_ok());
        // reversed vertex map is not compatible with the arrow orientation
        assert!(Embedding::new(a.clone(), k.clone(), vec![1, 0], vec![0]).is_err());
        assert!(Embedding::new(a.clone(), k.clone(), vec![0, 0], vec![0]).is_err());
        let two = Quiver::with_indices(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(Embedding::new(two, k, vec![0, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn pushforward_pullback_examples() {
        let k = kronecker();
        let id = Embedding::identity(&k);
        let d: DimVector = vec![3, 4].into();
        assert_eq!(pushforward(&id, &d).unwrap(), d);
        assert_eq!(pullback(&id, &d).unwrap(), d);

        let point = Quiver::from_names(&["p"], &[]).unwrap();
        let target = Quiver::with_indices(3, &[(0, 1)]).unwrap();
        let e = Embedding::new(point, target, vec![2], vec![]).unwrap();
        assert_eq!(pushforward(&e, &vec![5].into()).unwrap().entries(), &[0, 0, 5]);
        assert_eq!(pushforward(&e, &DimVector::zero(1)).unwrap(), DimVector::zero(3));
        assert_eq!(pullback(&e, &DimVector::constant(3, 7)).unwrap(), DimVector::constant(1, 7));
    }

    #[test]
    fn adjunction_exhaustive_small() {
        // 2-vertex source embedded into a 3-vertex target; every d ≤ (2,2) and d' ≤ (2,2,2)
        let src = Quiver::with_indices(2, &[(0, 1)]).unwrap();
        let tgt = Quiver::with_indices(3, &[(2, 0), (1, 2), (0, 1)]).unwrap();
        let e = Embedding::new(src, tgt, vec![2, 0], vec![0]).unwrap();
        for d0 in 0..=2 {
            for d1 in 0..=2 {
                let d: DimVector = vec![d0, d1].into();
                for code in 0..27u64 {
                    let dp: DimVector = vec![code % 3, (code / 3) % 3, code / 9].into();
                    let left = d.le(&e.pullback(&dp).unwrap());
                    let right = e.pushforward(&d).unwrap().le(&dp);
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn normalization_drops_zero_vertices() {
        let q = Quiver::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "c")]).unwrap();
        let s = QuiverSetting::new(q, vec![1, 0, 2].into()).unwrap();
        let (n, kept) = s.normalized();
        assert_eq!(kept, vec![0, 2]);
        assert_eq!(n.quiver().arrows(), &[Arrow::new(1, 1)]);
        assert_eq!(n.dim().entries(), &[1, 2]);
    }
}

//! Certificates of representation infinity and their independent re-checks.

use crate::error::{Error, Result};
use crate::euclid::{layout, radical_vector, recognize_euclidean, EuclideanType};
use crate::quiver::{Arrow, DimVector, Embedding, Quiver, QuiverSetting};

/// A Euclidean subquiver `Q'` of the ambient quiver with `m · h_{Q'} ≤ d|_{Q'}`.
///
/// The subquiver's vertices are named by their pattern positions (`c0`, `s1`,
/// `l2`, `z`, `a3`, ...) and listed in ascending ambient order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanWitness {
    kind: EuclideanType,
    embedding: Embedding,
    radical: DimVector,
    multiplier: u64,
}

impl EuclideanWitness {
    /// Builds the witness spanned by ambient `vertices` and `arrows`, labelling
    /// it by recognition. `multiplier` is the largest `m` with `m · h ≤ d`.
    pub(crate) fn from_parts(
        setting: &QuiverSetting,
        kind: EuclideanType,
        vertices: &[usize],
        arrows: &[usize],
    ) -> Result<Self> {
        let ambient = setting.quiver();
        let mut vmap = vertices.to_vec();
        vmap.sort_unstable();
        let mut amap = arrows.to_vec();
        amap.sort_unstable();
        let local =
            |x: usize| vmap.binary_search(&x).map_err(|_| Error::Internal(format!("arrow leaves witness at {x}")));
        let sub_arrows = amap
            .iter()
            .map(|&k| {
                let a = ambient.arrows()[k];
                Ok(Arrow::new(local(a.source)?, local(a.target)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let names = vmap.iter().map(|&x| ambient.name(x).to_string()).collect();
        let raw = Quiver::new(names, sub_arrows.clone())?;
        let lay = layout(&raw)
            .filter(|l| l.kind == kind)
            .ok_or_else(|| Error::Internal(format!("search produced a subquiver that is not of type {kind}: {raw}")))?;
        let sub = Quiver::new(lay.positions, sub_arrows)?;
        let radical = DimVector::new(lay.radical);
        let multiplier = vmap.iter().zip(radical.entries()).map(|(&x, &h)| setting.dim().get(x) / h).min().unwrap_or(0);
        if multiplier == 0 {
            return Err(Error::Internal(format!("radical vector of {kind} does not fit under d")));
        }
        let embedding = Embedding::new(sub, ambient.clone(), vmap, amap)?;
        Ok(EuclideanWitness { kind, embedding, radical, multiplier })
    }

    /// Reassembles a witness from raw parts (e.g. a parsed report) without
    /// trusting them; call [`EuclideanWitness::validate`] afterwards.
    pub fn from_raw(kind: EuclideanType, embedding: Embedding, radical: DimVector, multiplier: u64) -> Self {
        EuclideanWitness { kind, embedding, radical, multiplier }
    }

    pub fn kind(&self) -> EuclideanType {
        self.kind
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn subquiver(&self) -> &Quiver {
        self.embedding.source()
    }

    pub fn radical(&self) -> &DimVector {
        &self.radical
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    /// Ambient vertices of the witness, ascending.
    pub fn ambient_vertices(&self) -> &[usize] {
        self.embedding.vertex_map()
    }

    /// Re-checks every claim of the witness against `setting` from scratch.
    pub fn validate(&self, setting: &QuiverSetting) -> Result<()> {
        let fail = |m: String| Err(Error::Precondition(format!("witness rejected: {m}")));
        if self.embedding.target() != setting.quiver() {
            return fail("embedding targets a different quiver".into());
        }
        let e = Embedding::new(
            self.embedding.source().clone(),
            setting.quiver().clone(),
            self.embedding.vertex_map().to_vec(),
            self.embedding.arrow_map().to_vec(),
        )?;
        let sub = e.source();
        match recognize_euclidean(sub) {
            Some(t) if t == self.kind => {}
            other => return fail(format!("subquiver is {other:?}, claimed {}", self.kind)),
        }
        if radical_vector(self.kind, sub)? != self.radical {
            return fail("radical vector does not match the subquiver".into());
        }
        let h = self.radical.to_signed();
        if sub.tits_form(&h)? != 0 {
            return fail("q(h) is not zero".into());
        }
        for x in 0..sub.vertex_count() {
            if sub.pairing_with_basis(&h, x)? != 0 {
                return fail(format!("(h, e_{x}) is not zero"));
            }
        }
        if self.multiplier == 0 {
            return fail("multiplier must be positive".into());
        }
        let scaled = self.radical.scaled(self.multiplier);
        if !e.pushforward(&scaled)?.le(setting.dim()) {
            return fail(format!("{} · h does not fit under d", self.multiplier));
        }
        Ok(())
    }
}

/// A nonzero `d' ≤ d` with `q(d') ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubrootWitness {
    pub vector: DimVector,
    pub q: i64,
}

impl SubrootWitness {
    pub fn validate(&self, setting: &QuiverSetting) -> Result<()> {
        let fail = |m: &str| Err(Error::Precondition(format!("subroot rejected: {m}")));
        if !self.vector.is_nonzero() {
            return fail("vector is zero");
        }
        if !self.vector.le(setting.dim()) {
            return fail("vector is not below d");
        }
        let q = setting.quiver().tits_form(&self.vector.to_signed())?;
        if q != self.q {
            return fail("recorded q value is wrong");
        }
        if q > 0 {
            return fail("q is positive");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Euclidean(EuclideanWitness),
    Subroot(SubrootWitness),
}

impl Witness {
    pub fn validate(&self, setting: &QuiverSetting) -> Result<()> {
        match self {
            Witness::Euclidean(w) => w.validate(setting),
            Witness::Subroot(w) => w.validate(setting),
        }
    }
}

/// Outcome of a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finite,
    Infinite(Witness),
}

impl Verdict {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Verdict::Infinite(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Finite => None,
            Verdict::Infinite(w) => Some(w),
        }
    }
}

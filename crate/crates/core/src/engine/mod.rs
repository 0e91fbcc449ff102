//! Explicit nilpotent operators over a prime field with invariant subspaces.
//!
//! The module of type `beta` is a direct sum of Jordan blocks; the basis
//! vector `b_{i,j}` is the `j`-th power of the operator applied to the
//! generator of block `i`. Everything downstream is rank computations: the
//! tableau of an embedding is recovered from the Jordan types of the
//! quotients `B / T^e A`.

pub mod boxmove;
pub mod linalg;

pub use boxmove::{build_context, build_q, build_q_mu, BoxMoveContext};
pub use linalg::Subspace;

use crate::partition::Partition;
use crate::pole::{CyclicType, HeightSequence, PoleData};
use crate::tableau::LRTableau;
use linalg::is_prime;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// The given subspace is not invariant under the operator.
    NotInvariant,
    /// Summands live over different fields.
    PrimeMismatch {
        left: u32,
        right: u32,
    },
    /// The box-move data does not describe a valid context.
    InvalidContext(String),
    BadPrime(u32),
    BadVector(String),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::NotInvariant => write!(f, "NOT_INVARIANT: subspace is not T-invariant"),
            EngineError::PrimeMismatch { left, right } => {
                write!(f, "PRIME_MISMATCH: {left} vs {right}")
            }
            EngineError::InvalidContext(msg) => write!(f, "INVALID_CONTEXT: {msg}"),
            EngineError::BadPrime(p) => write!(f, "{p} is not a supported prime"),
            EngineError::BadVector(msg) => write!(f, "bad vector: {msg}"),
        }
    }
}

impl std::error::Error for EngineError {}

/// The module `N_beta` over `F_p`: one Jordan block per part, with the shift
/// operator `T b_{i,j} = b_{i,j+1}` (zero at the block end).
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleSpace {
    p: u32,
    beta: Partition,
    offsets: Vec<usize>,
    dim: usize,
}

impl ModuleSpace {
    pub fn new(p: u32, beta: Partition) -> Result<Self, EngineError> {
        if !is_prime(p) {
            return Err(EngineError::BadPrime(p));
        }
        let mut offsets = Vec::with_capacity(beta.len());
        let mut dim = 0;
        for &part in beta.parts() {
            offsets.push(dim);
            dim += part;
        }
        Ok(ModuleSpace {
            p,
            beta,
            offsets,
            dim,
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero_vector(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    /// Flat index of `b_{block,j}` (block 0-based, `0 <= j < beta_block`).
    pub fn index(&self, block: usize, j: usize) -> usize {
        debug_assert!(j < self.beta.part(block));
        self.offsets[block] + j
    }

    /// `T^k` applied to the block generator, as a vector.
    pub fn basis_vector(&self, block: usize, j: usize) -> Vec<u32> {
        let mut v = self.zero_vector();
        v[self.index(block, j)] = 1;
        v
    }

    pub fn apply_t(&self, v: &[u32]) -> Vec<u32> {
        let mut out = self.zero_vector();
        for (block, &part) in self.beta.parts().iter().enumerate() {
            let base = self.offsets[block];
            for j in 0..part.saturating_sub(1) {
                out[base + j + 1] = v[base + j];
            }
        }
        out
    }

    /// `T^k B` as a subspace (a coordinate subspace in this basis).
    pub fn image_of_power(&self, k: usize) -> Vec<Vec<u32>> {
        let mut rows = Vec::new();
        for (block, &part) in self.beta.parts().iter().enumerate() {
            for j in k..part {
                rows.push(self.basis_vector(block, j));
            }
        }
        rows
    }

    /// Height of a nonzero vector: the largest `m` with `v` in `T^m B`. In
    /// this basis that is the least power `j` carrying a nonzero coordinate.
    fn height(&self, v: &[u32]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (block, &part) in self.beta.parts().iter().enumerate() {
            let base = self.offsets[block];
            for j in 0..part {
                if v[base + j] != 0 {
                    best = Some(best.map_or(j, |b: usize| b.min(j)));
                    break;
                }
            }
        }
        best
    }

    pub fn is_invariant(&self, sub: &Subspace) -> bool {
        sub.basis()
            .iter()
            .all(|row| sub.contains(&self.apply_t(row)))
    }
}

impl fmt::Debug for ModuleSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N_{} over F_{}", self.beta, self.p)
    }
}

/// An embedding: an ambient module together with generator vectors of an
/// invariant subspace. No generators means the empty embedding `(0 c B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingInstance {
    space: ModuleSpace,
    generators: Vec<Vec<u32>>,
}

impl EmbeddingInstance {
    pub fn new(space: ModuleSpace, generators: Vec<Vec<u32>>) -> Result<Self, EngineError> {
        for g in &generators {
            if g.len() != space.dim() {
                return Err(EngineError::BadVector(format!(
                    "generator length {} does not match dimension {}",
                    g.len(),
                    space.dim()
                )));
            }
            if g.iter().any(|&x| x >= space.prime()) {
                return Err(EngineError::BadVector(
                    "coordinate out of field range".into(),
                ));
            }
        }
        Ok(EmbeddingInstance { space, generators })
    }

    pub fn empty(p: u32, beta: Partition) -> Result<Self, EngineError> {
        Ok(EmbeddingInstance {
            space: ModuleSpace::new(p, beta)?,
            generators: Vec::new(),
        })
    }

    pub fn space(&self) -> &ModuleSpace {
        &self.space
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// The invariant subspace generated by the generators.
    pub fn submodule(&self) -> Subspace {
        let mut s = Subspace::zero(self.space.p, self.space.dim);
        for g in &self.generators {
            let mut v = g.clone();
            while v.iter().any(|&x| x != 0) {
                let next = self.space.apply_t(&v);
                s.insert(v);
                v = next;
            }
        }
        s
    }
}

impl Serialize for EmbeddingInstance {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            p: u32,
            beta: &'a Partition,
            generators: &'a [Vec<u32>],
        }
        Raw {
            p: self.space.p,
            beta: &self.space.beta,
            generators: &self.generators,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EmbeddingInstance {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            p: u32,
            beta: Partition,
            generators: Vec<Vec<u32>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let space = ModuleSpace::new(raw.p, raw.beta).map_err(D::Error::custom)?;
        EmbeddingInstance::new(space, raw.generators).map_err(D::Error::custom)
    }
}

/// Jordan type of the operator induced on `B / sub`, from the rank sequence
/// of its powers.
pub fn partition_of_operator(
    space: &ModuleSpace,
    sub: Option<&Subspace>,
) -> Result<Partition, EngineError> {
    if let Some(u) = sub {
        if !space.is_invariant(u) {
            return Err(EngineError::NotInvariant);
        }
    }
    Ok(quotient_type(space, sub))
}

fn quotient_type(space: &ModuleSpace, sub: Option<&Subspace>) -> Partition {
    let sub_dim = sub.map_or(0, Subspace::dim);
    let top = space.beta.part(0);
    let mut ranks = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let dim_sum = match sub {
            Some(u) => {
                let mut s = u.clone();
                for row in space.image_of_power(k) {
                    s.insert(row);
                }
                s.dim()
            }
            None => space.image_of_power(k).len(),
        };
        ranks.push(dim_sum - sub_dim);
    }
    let diffs: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Partition::from_multiset(diffs).conjugate()
}

/// Loewy chain of quotients `B / T^e A`, validated as an LR tableau.
pub fn tableau_of_embedding(e: &EmbeddingInstance) -> LRTableau {
    let space = e.space();
    let mut chain = Vec::new();
    let mut sub = e.submodule();
    while sub.dim() > 0 {
        chain.push(quotient_type(space, Some(&sub)));
        sub = Subspace::from_vectors(
            space.p,
            space.dim,
            sub.basis().iter().map(|row| space.apply_t(row)),
        );
    }
    chain.push(space.beta.clone());
    let t = LRTableau::from_chain_structural(chain).expect("quotient chain is nested");
    debug_assert!(
        t.is_lr(),
        "tableau of an embedding satisfies the LR conditions"
    );
    t
}

/// Height sequence of a vector: heights of `v, Tv, T^2 v, ...` until zero.
pub fn height_sequence_of(space: &ModuleSpace, v: &[u32]) -> HeightSequence {
    let mut heights = Vec::new();
    let mut w = v.to_vec();
    while let Some(h) = space.height(&w) {
        heights.push(h);
        w = space.apply_t(&w);
    }
    HeightSequence::new(heights).expect("heights strictly increase")
}

/// Realizes generator data over blocks of the given sizes, with extra empty
/// blocks. Each listed part claims the first unused ambient block of exactly
/// its size.
pub fn realize_pole_data(
    data: &PoleData,
    padding: &Partition,
    p: u32,
) -> Result<EmbeddingInstance, EngineError> {
    let ambient = data.ambient().union(padding);
    let space = ModuleSpace::new(p, ambient)?;
    let mut used = vec![false; space.beta().len()];
    let mut gen = space.zero_vector();
    for (&part, &shift) in data.parts.iter().zip(data.shifts.iter()) {
        let block = (0..space.beta().len())
            .find(|&b| !used[b] && space.beta().part(b) == part)
            .expect("ambient contains every listed part");
        used[block] = true;
        gen[space.index(block, shift)] = 1;
    }
    let generators = if data.parts.is_empty() {
        Vec::new()
    } else {
        vec![gen]
    };
    EmbeddingInstance::new(space, generators)
}

/// Realizes a cyclic embedding: the pole generator over its gap blocks, plus
/// the padding as empty blocks.
pub fn realize_pole(c: &CyclicType, p: u32) -> Result<EmbeddingInstance, EngineError> {
    match c.pole.pole_data() {
        Ok(data) => realize_pole_data(&data, &c.padding, p),
        Err(_) => EmbeddingInstance::empty(p, c.padding.clone()),
    }
}

/// Block-diagonal direct sum. Blocks of the two ambient spaces are merged
/// into one partition; generators are re-indexed to the merged layout.
pub fn direct_sum(
    a: &EmbeddingInstance,
    b: &EmbeddingInstance,
) -> Result<EmbeddingInstance, EngineError> {
    let (pa, pb) = (a.space().prime(), b.space().prime());
    if pa != pb {
        return Err(EngineError::PrimeMismatch {
            left: pa,
            right: pb,
        });
    }
    // merged block order: size descending, left summand first among equals
    let mut blocks: Vec<(usize, usize, usize)> = Vec::new(); // (size, side, idx)
    for (i, &s) in a.space().beta().parts().iter().enumerate() {
        blocks.push((s, 0, i));
    }
    for (i, &s) in b.space().beta().parts().iter().enumerate() {
        blocks.push((s, 1, i));
    }
    blocks.sort_by(|x, y| (y.0, x.1, x.2).cmp(&(x.0, y.1, y.2)));
    let beta = Partition::from_multiset(blocks.iter().map(|b| b.0));
    let space = ModuleSpace::new(pa, beta)?;
    let remap = |side: usize, e: &EmbeddingInstance| -> Vec<Vec<u32>> {
        e.generators()
            .iter()
            .map(|g| {
                let mut v = space.zero_vector();
                for (new_block, &(size, s, idx)) in blocks.iter().enumerate() {
                    if s != side {
                        continue;
                    }
                    for j in 0..size {
                        v[space.index(new_block, j)] = g[e.space().index(idx, j)];
                    }
                }
                v
            })
            .collect()
    };
    let mut generators = remap(0, a);
    generators.extend(remap(1, b));
    EmbeddingInstance::new(space, generators)
}

/// The submodule `End(B) . v`: the sum over the gaps of the height sequence
/// of `v` of the coordinate subspaces `T^l B  intersect  ker T^k`.
pub fn endo_submodule(space: &ModuleSpace, v: &[u32]) -> Subspace {
    let hs = height_sequence_of(space, v);
    let mut out = Subspace::zero(space.prime(), space.dim());
    let Ok(data) = hs.pole_data() else {
        return out;
    };
    for (&part, &shift) in data.parts.iter().zip(data.shifts.iter()) {
        let soc = part - shift;
        for (block, &size) in space.beta().parts().iter().enumerate() {
            for j in 0..size {
                if j >= shift && j + soc >= size {
                    out.insert(space.basis_vector(block, j));
                }
            }
        }
    }
    out
}

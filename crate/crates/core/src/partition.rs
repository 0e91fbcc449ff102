//! Partitions, conjugation, dominance order, multiset union, and skew shapes.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A weakly decreasing sequence of positive integers. Doubles as the Jordan
/// type of a nilpotent operator: one part per block, part = block size.
///
/// Trailing zeros are never stored; indexing past the end reads 0, so two
/// partitions are equal exactly when their diagrams are.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Rejected constructor input: parts must be weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidPartition {
    pub parts: Vec<usize>,
}

impl fmt::Display for InvalidPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parts are not weakly decreasing: {:?}", self.parts)
    }
}

impl std::error::Error for InvalidPartition {}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, InvalidPartition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(InvalidPartition { parts });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_multiset<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut parts: Vec<usize> = iter.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, 0-based; 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0);
        let parts = (1..=rows)
            .map(|r| self.parts.iter().take_while(|&&p| p >= r).count())
            .collect();
        Partition { parts }
    }

    /// Componentwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Dominance order: equal weights and every prefix sum of `self` at most
    /// the matching prefix sum of `other`. Unequal weights compare false.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let m = self.len().max(other.len());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..m {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Union of the part multisets, sorted back into a partition.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_multiset(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Multiset difference, if `other`'s parts all occur in `self`.
    pub fn try_remove(&self, other: &Partition) -> Option<Partition> {
        let mut rest = self.parts.clone();
        for &p in other.parts() {
            let pos = rest.iter().position(|&q| q == p)?;
            rest.remove(pos);
        }
        Some(Partition { parts: rest })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = InvalidPartition;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A skew diagram `outer \ inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkew", into = "RawSkew")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize, Clone)]
struct RawSkew {
    outer: Partition,
    inner: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidSkew {
    pub outer: Partition,
    pub inner: Partition,
}

impl fmt::Display for InvalidSkew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "inner {} is not contained in outer {}",
            self.inner, self.outer
        )
    }
}

impl std::error::Error for InvalidSkew {}

impl TryFrom<RawSkew> for SkewShape {
    type Error = InvalidSkew;

    fn try_from(raw: RawSkew) -> Result<Self, Self::Error> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl From<SkewShape> for RawSkew {
    fn from(s: SkewShape) -> RawSkew {
        RawSkew {
            outer: s.outer,
            inner: s.inner,
        }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, InvalidSkew> {
        if !outer.contains(&inner) {
            return Err(InvalidSkew { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn box_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// At most one box per column. Column `c` of the diagram is part `c`, so
    /// this reads `outer_c - inner_c <= 1` for every part index.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|c| self.outer.part(c) - self.inner.part(c) <= 1)
    }

    /// At most one box per row: the conjugate parts differ by at most one.
    pub fn is_vertical_strip(&self) -> bool {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (0..oc.len()).all(|r| oc.part(r) - ic.part(r) <= 1)
    }

    /// Horizontal and vertical at once: boxes in pairwise distinct rows and
    /// columns.
    pub fn is_rook_strip(&self) -> bool {
        self.is_horizontal_strip() && self.is_vertical_strip()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.outer, self.inner)
    }
}

/// All partitions of weight exactly `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(n, n, &mut stack, &mut out);
    out
}

fn gen_partitions(rest: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        stack.push(p);
        gen_partitions(rest - p, p, stack, out);
        stack.pop();
    }
}

/// All partitions of weight between 1 and `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(partitions_of).collect()
}

/// All partitions contained in `outer` (including the empty one and `outer`).
pub fn subdiagrams(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_subdiagrams(outer, 0, usize::MAX, &mut stack, &mut out);
    out
}

fn gen_subdiagrams(
    outer: &Partition,
    idx: usize,
    prev: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if idx == outer.len() {
        out.push(Partition::from_multiset(stack.iter().copied()));
        return;
    }
    for p in 0..=outer.part(idx).min(prev) {
        stack.push(p);
        gen_subdiagrams(outer, idx + 1, p, stack, out);
        stack.pop();
    }
}

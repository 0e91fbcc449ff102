//! Height sequences, gaps, poles, extended poles, and the tableaux of cyclic
//! embeddings.
//!
//! A pole is an indecomposable embedding of a nonzero cyclic submodule; poles
//! are classified by the height sequence of the submodule generator. Each gap
//! of the sequence contributes one block to the ambient space, and the
//! tableau of a cyclic embedding places entry `e` in row `m_{e-1} + 1`.

use crate::partition::Partition;
use crate::tableau::{ColumnTableau, LRTableau};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Finite part of a height sequence: a strictly increasing sequence of
/// non-negative integers. The empty sequence stands for the zero submodule.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HeightSequence {
    heights: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoleError {
    /// The requested operation needs at least one finite height.
    EmptySequence,
    /// The index does not point at a non-gap of the sequence.
    NotANongap { index: usize },
    /// Heights must strictly increase.
    NotIncreasing { heights: Vec<usize> },
}

impl fmt::Display for PoleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleError::EmptySequence => write!(f, "EMPTY_SEQUENCE: the zero pole has no data"),
            PoleError::NotANongap { index } => {
                write!(f, "NOT_A_NONGAP: index {index} is a gap or out of range")
            }
            PoleError::NotIncreasing { heights } => {
                write!(f, "heights are not strictly increasing: {heights:?}")
            }
        }
    }
}

impl std::error::Error for PoleError {}

impl TryFrom<Vec<usize>> for HeightSequence {
    type Error = PoleError;

    fn try_from(heights: Vec<usize>) -> Result<Self, Self::Error> {
        HeightSequence::new(heights)
    }
}

impl From<HeightSequence> for Vec<usize> {
    fn from(h: HeightSequence) -> Vec<usize> {
        h.heights
    }
}

impl HeightSequence {
    pub fn new(heights: Vec<usize>) -> Result<Self, PoleError> {
        if heights.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PoleError::NotIncreasing { heights });
        }
        Ok(HeightSequence { heights })
    }

    pub fn empty() -> Self {
        HeightSequence {
            heights: Vec::new(),
        }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// 0-based indices after which the sequence has a gap: the last index, and
    /// every index whose successor jumps by more than one.
    pub fn gaps(&self) -> Vec<usize> {
        let n = self.heights.len();
        (0..n)
            .filter(|&i| i + 1 == n || self.heights[i + 1] > self.heights[i] + 1)
            .collect()
    }

    /// Maximal runs of consecutive heights, as inclusive index ranges. Each
    /// run ends at a gap.
    pub fn segments(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for g in self.gaps() {
            out.push((start, g));
            start = g + 1;
        }
        out
    }

    /// Ambient data of the pole `P((m_i))`: one block per gap, block size
    /// `m + 1` and generator shift `m - i` for the gap after height `m` at
    /// index `i`.
    pub fn pole_data(&self) -> Result<PoleData, PoleError> {
        if self.is_empty() {
            return Err(PoleError::EmptySequence);
        }
        self.data_with_extra(None)
    }

    /// Pole data with one non-gap index inserted into the defining
    /// subsequence; the generator shift repeats at the inserted place.
    pub fn pole_data_extended(&self, index: usize) -> Result<PoleData, PoleError> {
        self.check_nongap(index)?;
        self.data_with_extra(Some(index))
    }

    fn check_nongap(&self, index: usize) -> Result<(), PoleError> {
        let ok =
            index + 1 < self.heights.len() && self.heights[index + 1] == self.heights[index] + 1;
        if ok {
            Ok(())
        } else {
            Err(PoleError::NotANongap { index })
        }
    }

    fn data_with_extra(&self, extra: Option<usize>) -> Result<PoleData, PoleError> {
        let mut idx: Vec<usize> = self.gaps();
        if let Some(u) = extra {
            idx.push(u);
            idx.sort_unstable();
        }
        // blocks listed with sizes descending = indices descending
        idx.reverse();
        let parts = idx.iter().map(|&i| self.heights[i] + 1).collect();
        let shifts = idx.iter().map(|&i| self.heights[i] - i).collect();
        Ok(PoleData { parts, shifts })
    }

    /// Splits the extended pole `P((m_i) v m_u)` into the pole plus one empty
    /// block of size `m_u + 1`.
    pub fn extended_split(&self, index: usize) -> Result<CyclicType, PoleError> {
        self.check_nongap(index)?;
        Ok(CyclicType {
            pole: self.clone(),
            padding: Partition::from_multiset([self.heights[index] + 1]),
        })
    }
}

impl fmt::Display for HeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.heights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for HeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generator recipe for a pole or extended pole: block sizes (strictly
/// decreasing) and the power of the operator applied to each block generator.
/// For a plain pole the shifts strictly decrease; an extended pole repeats
/// one shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleData {
    pub parts: Vec<usize>,
    pub shifts: Vec<usize>,
}

impl PoleData {
    pub fn ambient(&self) -> Partition {
        Partition::from_multiset(self.parts.iter().copied())
    }
}

/// A cyclic embedding up to isomorphism: a pole (possibly zero) plus empty
/// blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicType {
    pub pole: HeightSequence,
    pub padding: Partition,
}

impl CyclicType {
    pub fn pole_only(pole: HeightSequence) -> Self {
        CyclicType {
            pole,
            padding: Partition::empty(),
        }
    }

    pub fn empty_embedding(padding: Partition) -> Self {
        CyclicType {
            pole: HeightSequence::empty(),
            padding,
        }
    }

    pub fn ambient(&self) -> Partition {
        let pole_parts = self
            .pole
            .pole_data()
            .map(|d| d.ambient())
            .unwrap_or_else(|_| Partition::empty());
        pole_parts.union(&self.padding)
    }

    /// The columns of the tableau: one column per gap of the pole, entries at
    /// the bottom, plus one empty column per padding part.
    pub fn columns(&self) -> Vec<ColumnTableau> {
        let mut cols = Vec::new();
        for (s, t) in self.pole.segments() {
            let n = self.pole.heights()[t] + 1;
            cols.push(ColumnTableau::new(s + 1, t + 1, n).expect("segment fits its column"));
        }
        for &p in self.padding.parts() {
            cols.push(ColumnTableau::new(1, 0, p).unwrap());
        }
        cols.sort_by_key(|c| std::cmp::Reverse((c.n, c.e, c.f)));
        cols
    }
}

/// The tableau of a cyclic embedding: entry `e` sits in row `m_{e-1} + 1`,
/// each entry exactly once; a union of columns with disjoint entries.
pub fn tableau_of_cyclic(c: &CyclicType) -> LRTableau {
    let mut t = LRTableau::empty_of(Partition::empty());
    for col in c.columns() {
        t = t.union_structural(&col.tableau());
    }
    debug_assert!(t.is_lr(), "cyclic tableau must satisfy the LR conditions");
    t
}

/// Number of endomorphism-ring submodules of the module with type `beta`:
/// the product of `1 + beta_i - beta_{i+1}`.
pub fn count_endo_submodules(beta: &Partition) -> u64 {
    (0..beta.len())
        .map(|i| 1 + (beta.part(i) - beta.part(i + 1)) as u64)
        .product()
}

/// All tableaux of outer shape `beta` in which each entry occurs at most
/// once; these classify cyclic embeddings into `N_beta` and their number is
/// `count_endo_submodules(beta)`.
pub fn enumerate_single_entry_tableaux(beta: &Partition) -> Vec<LRTableau> {
    let max_height = beta.part(0);
    let mut out = Vec::new();
    let mut heights = Vec::new();
    enumerate_heights(beta, 0, max_height, &mut heights, &mut out);
    out.sort();
    out
}

fn enumerate_heights(
    beta: &Partition,
    from: usize,
    max_height: usize,
    heights: &mut Vec<usize>,
    out: &mut Vec<LRTableau>,
) {
    let hs = HeightSequence::new(heights.clone()).expect("built strictly increasing");
    let pole_ambient = if hs.is_empty() {
        Partition::empty()
    } else {
        hs.pole_data().unwrap().ambient()
    };
    if let Some(padding) = beta.try_remove(&pole_ambient) {
        out.push(tableau_of_cyclic(&CyclicType { pole: hs, padding }));
    }
    for h in from..max_height {
        heights.push(h);
        enumerate_heights(beta, h + 1, max_height, heights, out);
        heights.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(v: &[usize]) -> HeightSequence {
        HeightSequence::new(v.to_vec()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(hs(&[1, 3, 4]).gaps(), vec![0, 2]);
        assert_eq!(HeightSequence::empty().gaps(), Vec::<usize>::new());
        assert_eq!(hs(&[0, 1, 2]).gaps(), vec![2]);
    }

    #[test]
    fn pole_data_examples() {
        let d = hs(&[1, 3, 4]).pole_data().unwrap();
        assert_eq!(d.parts, vec![5, 2]);
        assert_eq!(d.shifts, vec![2, 1]);

        let d = hs(&[0]).pole_data().unwrap();
        assert_eq!(d.parts, vec![1]);
        assert_eq!(d.shifts, vec![0]);

        let d = hs(&[2, 4]).pole_data().unwrap();
        assert_eq!(d.parts, vec![5, 3]);
        assert_eq!(d.shifts, vec![3, 2]);

        assert_eq!(
            HeightSequence::empty().pole_data(),
            Err(PoleError::EmptySequence)
        );
    }

    #[test]
    fn gap_lemma_structurally() {
        // each gap after height m contributes the block size m + 1
        for mask in 1u32..(1 << 8) {
            let heights: Vec<usize> = (0..8).filter(|i| mask & (1 << i) != 0).collect();
            let seq = hs(&heights);
            let d = seq.pole_data().unwrap();
            for &g in &seq.gaps() {
                assert!(d.parts.contains(&(heights[g] + 1)));
            }
            assert_eq!(d.parts.len(), seq.gaps().len());
        }
    }

    #[test]
    fn extended_pole_examples() {
        // (1,3,4) has a non-gap after 3 (index 1)
        let c = hs(&[1, 3, 4]).extended_split(1).unwrap();
        assert_eq!(c.pole, hs(&[1, 3, 4]));
        assert_eq!(c.padding, p(&[4]));
        assert_eq!(c.ambient(), p(&[5, 4, 2]));

        let c = hs(&[0, 1, 2, 3]).extended_split(1).unwrap();
        assert_eq!(c.padding, p(&[2]));

        let c = hs(&[0, 1, 3]).extended_split(0).unwrap();
        assert_eq!(c.padding, p(&[1]));

        assert!(hs(&[1, 3, 4]).extended_split(0).is_err());
        assert!(hs(&[1, 3, 4]).extended_split(2).is_err());
    }

    #[test]
    fn extended_pole_data_repeats_one_shift() {
        // P((1,3,4) v 3): blocks (5,4,2), shifts (2,2,1)
        let d = hs(&[1, 3, 4]).pole_data_extended(1).unwrap();
        assert_eq!(d.parts, vec![5, 4, 2]);
        assert_eq!(d.shifts, vec![2, 2, 1]);

        // P((0,2,3) v 2): blocks (4,3,1), shifts (1,1,0)
        let d = hs(&[0, 2, 3]).pole_data_extended(1).unwrap();
        assert_eq!(d.parts, vec![4, 3, 1]);
        assert_eq!(d.shifts, vec![1, 1, 0]);
    }

    #[test]
    fn tableau_of_cyclic_examples() {
        let t = tableau_of_cyclic(&CyclicType::pole_only(hs(&[1, 3, 4])));
        assert_eq!(t.outer(), &p(&[5, 2]));
        // entry e in row m_{e-1} + 1: rows 2, 4, 5
        let rows: Vec<(usize, usize)> = t
            .entry_boxes()
            .iter()
            .map(|b| (b.entry, b.pos.row))
            .collect();
        assert_eq!(rows, vec![(1, 2), (2, 4), (3, 5)]);

        let t = tableau_of_cyclic(&CyclicType::empty_embedding(p(&[3, 1])));
        assert_eq!(t, LRTableau::empty_of(p(&[3, 1])));

        let t = tableau_of_cyclic(&CyclicType::pole_only(hs(&[0, 1, 2])));
        assert_eq!(t, LRTableau::column(1, 3, 3).unwrap());
    }

    #[test]
    fn cyclic_tableaux_are_unions_of_disjoint_columns() {
        for mask in 0u32..(1 << 6) {
            let heights: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
            let c = CyclicType {
                pole: hs(&heights),
                padding: p(&[2, 1]),
            };
            let t = tableau_of_cyclic(&c);
            assert!(t.is_lr());
            // each entry occurs exactly once
            let boxes = t.entry_boxes();
            assert_eq!(boxes.len(), heights.len());
            let mut entries: Vec<usize> = boxes.iter().map(|b| b.entry).collect();
            entries.dedup();
            assert_eq!(entries.len(), boxes.len());
            // the declared columns have pairwise disjoint entry ranges
            let cols = c.columns();
            let mut ranges: Vec<(usize, usize)> = cols
                .iter()
                .filter(|c| !c.is_empty_column())
                .map(|c| (c.e, c.f))
                .collect();
            ranges.sort();
            for w in ranges.windows(2) {
                assert!(w[0].1 < w[1].0);
            }
        }
    }

    #[test]
    fn endo_count_examples() {
        assert_eq!(count_endo_submodules(&p(&[5, 2])), 12);
        assert_eq!(count_endo_submodules(&Partition::empty()), 1);
        assert_eq!(count_endo_submodules(&p(&[7])), 8);
        assert_eq!(count_endo_submodules(&p(&[2, 1])), 4);
    }

    #[test]
    fn single_entry_tableaux_match_count() {
        for beta in crate::partition::partitions_up_to(8) {
            let tabs = enumerate_single_entry_tableaux(&beta);
            let mut dedup = tabs.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), tabs.len(), "duplicate tableau for beta={beta}");
            assert_eq!(
                tabs.len() as u64,
                count_endo_submodules(&beta),
                "beta={beta}"
            );
            for t in &tabs {
                assert!(t.is_lr());
                assert_eq!(t.outer(), &beta);
                let entries: Vec<usize> = t.entry_boxes().iter().map(|b| b.entry).collect();
                let mut uniq = entries.clone();
                uniq.dedup();
                assert_eq!(uniq.len(), entries.len());
            }
        }
        assert_eq!(enumerate_single_entry_tableaux(&p(&[1])).len(), 2);
        assert_eq!(enumerate_single_entry_tableaux(&p(&[5, 2])).len(), 12);
    }
}

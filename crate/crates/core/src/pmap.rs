//! Partial maps on tableaux, jumps, the empty box property, and the
//! correspondence with direct sums of cyclic embeddings.
//!
//! A partial map sends each box with entry `e > 1` to a box with entry
//! `e - 1` strictly higher up, injectively. Maps with the empty box property
//! classify direct sums of cyclic embeddings: every orbit is a pole, jumps
//! eat empty column tops, and what is left of the empty boxes is the empty
//! summand.

use crate::partition::Partition;
use crate::pole::{tableau_of_cyclic, CyclicType, HeightSequence};
use crate::tableau::{BoxPos, ColumnTableau, EntryBox, LRTableau, LrError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// The two maps live on different tableaux.
    DifferentTableaux,
    /// The operation needs the empty box property.
    EbpRequired,
    /// The union of the requested summands is not a valid tableau.
    UnionNotLr(LrError),
    /// The given assignment is not a partial map.
    InvalidMap(String),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::DifferentTableaux => write!(f, "DIFFERENT_TABLEAUX"),
            MapError::EbpRequired => write!(f, "EBP_REQUIRED"),
            MapError::UnionNotLr(e) => write!(f, "UNION_NOT_LR: {e}"),
            MapError::InvalidMap(msg) => write!(f, "invalid partial map: {msg}"),
        }
    }
}

impl std::error::Error for MapError {}

/// A partial map on a tableau. Sources are the boxes with entry above 1,
/// stored in (entry, row, col) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap {
    tableau: LRTableau,
    pairs: Vec<(EntryBox, EntryBox)>,
}

impl PartialMap {
    pub fn tableau(&self) -> &LRTableau {
        &self.tableau
    }

    pub fn pairs(&self) -> &[(EntryBox, EntryBox)] {
        &self.pairs
    }

    /// Rebuilds a map from raw (from, to) positions on a tableau.
    pub fn from_pairs(
        tableau: &LRTableau,
        raw: &[(BoxPos, BoxPos)],
    ) -> Result<PartialMap, MapError> {
        let boxes = tableau.entry_boxes();
        let look = |pos: BoxPos| -> Result<EntryBox, MapError> {
            boxes
                .iter()
                .copied()
                .find(|b| b.pos == pos)
                .ok_or_else(|| MapError::InvalidMap(format!("no entry box at {pos}")))
        };
        let mut pairs = Vec::with_capacity(raw.len());
        for &(from, to) in raw {
            pairs.push((look(from)?, look(to)?));
        }
        pairs.sort();
        let map = PartialMap {
            tableau: tableau.clone(),
            pairs,
        };
        map.validate()?;
        Ok(map)
    }

    fn validate(&self) -> Result<(), MapError> {
        let sources: Vec<EntryBox> = self
            .tableau
            .entry_boxes()
            .into_iter()
            .filter(|b| b.entry > 1)
            .collect();
        if self.pairs.len() != sources.len()
            || self
                .pairs
                .iter()
                .map(|(s, _)| *s)
                .ne(sources.iter().copied())
        {
            return Err(MapError::InvalidMap(
                "sources must be exactly the boxes with entry above 1".into(),
            ));
        }
        let mut targets: Vec<BoxPos> = Vec::new();
        for (s, t) in &self.pairs {
            if t.entry + 1 != s.entry {
                return Err(MapError::InvalidMap(format!(
                    "image of entry {} must carry entry {}",
                    s.entry,
                    s.entry - 1
                )));
            }
            if t.pos.row >= s.pos.row {
                return Err(MapError::InvalidMap(format!(
                    "image of {} must lie in a higher row",
                    s.pos
                )));
            }
            targets.push(t.pos);
        }
        targets.sort();
        let before = targets.len();
        targets.dedup();
        if targets.len() != before {
            return Err(MapError::InvalidMap("map is not one-to-one".into()));
        }
        Ok(())
    }

    /// Maximal orbits, each a chain of boxes with entries `1..=f` and
    /// strictly increasing rows, sorted by their row profiles.
    pub fn orbits(&self) -> Vec<Vec<EntryBox>> {
        let image: Vec<EntryBox> = self.pairs.iter().map(|(_, t)| *t).collect();
        let mut orbits = Vec::new();
        for top in self.tableau.entry_boxes() {
            if image.contains(&top) {
                continue;
            }
            let mut chain = vec![top];
            let mut cur = top;
            while let Some((_, t)) = self.pairs.iter().find(|(s, _)| *s == cur) {
                chain.push(*t);
                cur = *t;
            }
            chain.reverse(); // entry 1 first
            orbits.push(chain);
        }
        orbits.sort_by_key(|c| c.iter().map(|b| b.pos).collect::<Vec<_>>());
        orbits
    }

    /// Rows that carry a jump: every entry-1 box, and every box whose image
    /// sits more than one row above. Sorted with multiplicity.
    pub fn jumps(&self) -> Vec<usize> {
        let mut rows: Vec<usize> = self
            .tableau
            .entry_boxes()
            .iter()
            .filter(|b| b.entry == 1)
            .map(|b| b.pos.row)
            .collect();
        for (s, t) in &self.pairs {
            if t.pos.row + 1 < s.pos.row {
                rows.push(s.pos.row);
            }
        }
        rows.sort_unstable();
        rows
    }

    /// Empty box property: for each row `r`, at least as many columns with
    /// exactly `r - 1` empty boxes as jumps in row `r`.
    pub fn satisfies_ebp(&self) -> bool {
        let mut need: BTreeMap<usize, usize> = BTreeMap::new();
        for r in self.jumps() {
            *need.entry(r).or_insert(0) += 1;
        }
        need.iter()
            .all(|(&r, &n)| self.tableau.columns_with_empty_boxes(r - 1) >= n)
    }

    /// Complete invariant of the equivalence class: the multiset of orbit
    /// row profiles, each tagged with its smallest entry.
    pub fn canonical_invariant(&self) -> Vec<(usize, Vec<usize>)> {
        let mut profiles: Vec<(usize, Vec<usize>)> = self
            .orbits()
            .iter()
            .map(|chain| (chain[0].entry, chain.iter().map(|b| b.pos.row).collect()))
            .collect();
        profiles.sort();
        profiles
    }

    /// Equivalence: conjugate by a permutation of boxes preserving entry and
    /// row. Holds exactly when the orbit row profiles agree.
    pub fn equivalent(&self, other: &PartialMap) -> Result<bool, MapError> {
        if self.tableau != other.tableau {
            return Err(MapError::DifferentTableaux);
        }
        Ok(self.canonical_invariant() == other.canonical_invariant())
    }

    /// Reads off the direct sum of cyclic embeddings: one pole per orbit,
    /// then the jump rows consume matching empty column tops; the rest of the
    /// empty parts form the empty summand.
    pub fn decomposition(&self) -> Result<PoleDecomposition, MapError> {
        if !self.satisfies_ebp() {
            return Err(MapError::EbpRequired);
        }
        let mut poles: Vec<HeightSequence> = self
            .orbits()
            .iter()
            .map(|chain| {
                HeightSequence::new(chain.iter().map(|b| b.pos.row - 1).collect())
                    .expect("orbit rows strictly increase")
            })
            .collect();
        poles.sort();
        // multiset of empty-part lengths per column, minus one length r-1 per
        // jump in row r
        let inner = self.tableau.inner();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for c in 0..self.tableau.outer().len() {
            *counts.entry(inner.part(c)).or_insert(0) += 1;
        }
        for r in self.jumps() {
            let slot = counts
                .get_mut(&(r - 1))
                .expect("EBP guarantees a matching column");
            assert!(*slot > 0, "EBP guarantees a matching column");
            *slot -= 1;
        }
        let empty_parts = Partition::from_multiset(
            counts
                .iter()
                .flat_map(|(&len, &n)| std::iter::repeat_n(len, n)),
        );
        Ok(PoleDecomposition { poles, empty_parts })
    }
}

/// An isomorphism class of direct sums of cyclic embeddings: a multiset of
/// pole height sequences plus the sizes of the empty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoleDecomposition {
    pub poles: Vec<HeightSequence>,
    #[serde(rename = "empty")]
    pub empty_parts: Partition,
}

impl PoleDecomposition {
    pub fn new(mut poles: Vec<HeightSequence>, empty_parts: Partition) -> Self {
        poles.retain(|h| !h.is_empty());
        poles.sort();
        PoleDecomposition { poles, empty_parts }
    }

    pub fn ambient(&self) -> Partition {
        let mut out = self.empty_parts.clone();
        for h in &self.poles {
            out = out.union(&h.pole_data().expect("poles are non-empty").ambient());
        }
        out
    }

    /// The columns of the union of the summand tableaux.
    pub fn column_multiset(&self) -> Vec<ColumnTableau> {
        let mut cols = Vec::new();
        for h in &self.poles {
            cols.extend(CyclicType::pole_only(h.clone()).columns());
        }
        for &p in self.empty_parts.parts() {
            cols.push(ColumnTableau::new(1, 0, p).unwrap());
        }
        cols.sort_by_key(|c| std::cmp::Reverse((c.n, c.e, c.f)));
        cols
    }

    /// The tableau of the direct sum, if the union satisfies the LR
    /// conditions.
    pub fn tableau(&self) -> Result<LRTableau, MapError> {
        let mut t = LRTableau::empty_of(self.empty_parts.clone());
        for h in &self.poles {
            t = t.union_structural(&tableau_of_cyclic(&CyclicType::pole_only(h.clone())));
        }
        t.check_lattice().map_err(MapError::UnionNotLr)?;
        Ok(t)
    }
}

/// All partial maps on a tableau, in lexicographic order of their assignment
/// vectors (sources ordered by entry, row, col; targets likewise).
pub fn enumerate_partial_maps(t: &LRTableau) -> Vec<PartialMap> {
    let boxes = t.entry_boxes();
    let sources: Vec<EntryBox> = boxes.iter().copied().filter(|b| b.entry > 1).collect();
    let mut maps = Vec::new();
    let mut chosen: Vec<EntryBox> = Vec::new();
    let mut used: Vec<EntryBox> = Vec::new();
    assign(t, &boxes, &sources, 0, &mut chosen, &mut used, &mut maps);
    maps
}

fn assign(
    t: &LRTableau,
    boxes: &[EntryBox],
    sources: &[EntryBox],
    idx: usize,
    chosen: &mut Vec<EntryBox>,
    used: &mut Vec<EntryBox>,
    maps: &mut Vec<PartialMap>,
) {
    if idx == sources.len() {
        let pairs = sources
            .iter()
            .copied()
            .zip(chosen.iter().copied())
            .collect();
        maps.push(PartialMap {
            tableau: t.clone(),
            pairs,
        });
        return;
    }
    let s = sources[idx];
    for &cand in boxes {
        if cand.entry + 1 != s.entry || cand.pos.row >= s.pos.row || used.contains(&cand) {
            continue;
        }
        chosen.push(cand);
        used.push(cand);
        assign(t, boxes, sources, idx + 1, chosen, used, maps);
        used.pop();
        chosen.pop();
    }
}

/// Orbit row profiles, the complete invariant of map equivalence.
type Invariant = Vec<(usize, Vec<usize>)>;

/// Groups maps into equivalence classes; each class lists indices into the
/// input, in order, so the first index is the canonical representative.
pub fn equivalence_classes(maps: &[PartialMap]) -> Vec<Vec<usize>> {
    let mut classes: Vec<(Invariant, Vec<usize>)> = Vec::new();
    for (i, m) in maps.iter().enumerate() {
        let inv = m.canonical_invariant();
        match classes.iter_mut().find(|(key, _)| *key == inv) {
            Some((_, members)) => members.push(i),
            None => classes.push((inv, vec![i])),
        }
    }
    classes.into_iter().map(|(_, members)| members).collect()
}

/// The inverse direction of the classification: rebuild the tableau and a
/// witness partial map from a pole decomposition.
pub fn pair_from_decomposition(d: &PoleDecomposition) -> Result<(LRTableau, PartialMap), MapError> {
    let t = d.tableau()?;
    // hand out boxes by (entry, row), columns left to right
    let mut available: BTreeMap<(usize, usize), Vec<BoxPos>> = BTreeMap::new();
    for b in t.entry_boxes() {
        available
            .entry((b.entry, b.pos.row))
            .or_default()
            .push(b.pos);
    }
    let mut raw: Vec<(BoxPos, BoxPos)> = Vec::new();
    for pole in &d.poles {
        let mut prev: Option<BoxPos> = None;
        for (i, &m) in pole.heights().iter().enumerate() {
            let entry = i + 1;
            let row = m + 1;
            let pos = available
                .get_mut(&(entry, row))
                .and_then(|v| {
                    if v.is_empty() {
                        None
                    } else {
                        Some(v.remove(0))
                    }
                })
                .expect("union tableau provides every pole box");
            if let Some(p) = prev {
                raw.push((pos, p));
            }
            prev = Some(pos);
        }
    }
    let g = PartialMap::from_pairs(&t, &raw).expect("pole boxes form a partial map");
    debug_assert!(g.satisfies_ebp());
    Ok((t, g))
}

//! Littlewood-Richardson tableaux as chains of nested partitions.
//!
//! A tableau is a chain `gamma(0) <= gamma(1) <= ... <= gamma(r)` of
//! partitions recording the types of `B/p^e A` for an embedding `A <= B`.
//! The entry grid is the drawn form: column `c` of the grid is part `c` of
//! the outer partition, the topmost `gamma(0)_c` boxes of that column are
//! empty, and entry `e` fills the boxes that part `c` gains between levels
//! `e-1` and `e`.

use crate::partition::{partitions_of, Partition, SkewShape};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Position of a box in the grid, 1-based; row 1 is the top, column 1 the
/// leftmost (= largest) part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoxPos {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for BoxPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, col {})", self.row, self.col)
    }
}

/// An entry box: a grid position together with its entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryBox {
    pub entry: usize,
    pub pos: BoxPos,
}

/// What sits at a grid position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    /// Outside the outer diagram.
    Absent,
    /// Inside the inner diagram.
    Empty,
    Entry(usize),
}

/// Violation of one of the tableau conditions, with a witness box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LrError {
    /// A chain element is not contained in its successor.
    NestedViolation { level: usize, detail: String },
    /// Entries in a row fail to increase weakly to the left-right order.
    RowViolation { at: BoxPos },
    /// A column gains two boxes in one level, so entries repeat in a column.
    ColumnViolation { at: BoxPos, entry: usize },
    /// The lattice permutation property fails right of a column boundary.
    LatticeViolation {
        boundary: usize,
        entry: usize,
        at: BoxPos,
    },
}

impl LrError {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            LrError::NestedViolation { .. } => "NESTED_VIOLATION",
            LrError::RowViolation { .. } => "ROW_VIOLATION",
            LrError::ColumnViolation { .. } => "COLUMN_VIOLATION",
            LrError::LatticeViolation { .. } => "LATTICE_VIOLATION",
        }
    }
}

impl fmt::Display for LrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LrError::NestedViolation { level, detail } => {
                write!(f, "NESTED_VIOLATION at level {level}: {detail}")
            }
            LrError::RowViolation { at } => write!(f, "ROW_VIOLATION at {at}"),
            LrError::ColumnViolation { at, entry } => {
                write!(f, "COLUMN_VIOLATION at {at}: entry {entry} repeats in its column")
            }
            LrError::LatticeViolation { boundary, entry, at } => write!(
                f,
                "LATTICE_VIOLATION right of column {boundary}: more entries {} than {entry} (witness {at})",
                entry + 1
            ),
        }
    }
}

impl std::error::Error for LrError {}

/// Shape or weight mismatch between the pieces of a requested computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeMismatch {
    pub detail: String,
}

impl fmt::Display for ShapeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SHAPE_MISMATCH: {}", self.detail)
    }
}

impl std::error::Error for ShapeMismatch {}

/// A tableau stored as its partition chain.
///
/// Constructors normalize the chain by dropping trailing repeats of the last
/// partition, so equality is equality of the drawn tableau. `from_chain`
/// checks the full Littlewood-Richardson conditions; `column` deliberately
/// skips the lattice check because column tableaux `C(e,f)_n` with `e > 1`
/// are building blocks for unions, not valid tableaux on their own.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LRTableau {
    chain: Vec<Partition>,
}

impl LRTableau {
    /// Validates the chain as a Littlewood-Richardson tableau.
    pub fn from_chain(chain: Vec<Partition>) -> Result<Self, LrError> {
        let t = Self::from_chain_structural(chain)?;
        t.check_lattice()?;
        Ok(t)
    }

    /// Validates nesting and column strictness only.
    pub fn from_chain_structural(chain: Vec<Partition>) -> Result<Self, LrError> {
        assert!(
            !chain.is_empty(),
            "tableau chain must have at least one level"
        );
        for e in 1..chain.len() {
            let prev = &chain[e - 1];
            let cur = &chain[e];
            if !cur.contains(prev) {
                return Err(LrError::NestedViolation {
                    level: e,
                    detail: format!("{prev} is not contained in {cur}"),
                });
            }
            for c in 0..cur.len() {
                if cur.part(c) > prev.part(c) + 1 {
                    return Err(LrError::ColumnViolation {
                        at: BoxPos {
                            row: prev.part(c) + 2,
                            col: c + 1,
                        },
                        entry: e,
                    });
                }
            }
        }
        let mut chain = chain;
        while chain.len() > 1 && chain[chain.len() - 1] == chain[chain.len() - 2] {
            chain.pop();
        }
        Ok(LRTableau { chain })
    }

    /// The all-empty tableau of the given outer shape.
    pub fn empty_of(outer: Partition) -> Self {
        LRTableau { chain: vec![outer] }
    }

    /// The column tableau `C(e,f)_n`: one column of height `n` whose bottom
    /// `f - e + 1` boxes carry the entries `e..=f`. `C(1,0)_n` is the empty
    /// column of height `n`.
    pub fn column(e: usize, f: usize, n: usize) -> Result<Self, InvalidColumn> {
        ColumnTableau::new(e, f, n).map(|c| c.tableau())
    }

    /// Reads a tableau off its entry grid (0 = empty box).
    pub fn from_grid(grid: &[Vec<usize>]) -> Result<Self, LrError> {
        // Row lengths must weakly decrease and empties must sit in a
        // top-left-justified corner for the grid to be a skew diagram at all.
        for r in 1..grid.len() {
            if grid[r].len() > grid[r - 1].len() {
                return Err(LrError::NestedViolation {
                    level: 0,
                    detail: format!("grid row {} is longer than row {}", r + 1, r),
                });
            }
        }
        let mut max_entry = 0;
        for (r, row) in grid.iter().enumerate() {
            let mut seen_entry = false;
            for (c, &v) in row.iter().enumerate() {
                if v == 0 && seen_entry {
                    return Err(LrError::RowViolation {
                        at: BoxPos {
                            row: r + 1,
                            col: c + 1,
                        },
                    });
                }
                if v > 0 {
                    seen_entry = true;
                    max_entry = max_entry.max(v);
                    if c + 1 < row.len() && row[c + 1] > 0 && row[c + 1] < v {
                        return Err(LrError::RowViolation {
                            at: BoxPos {
                                row: r + 1,
                                col: c + 2,
                            },
                        });
                    }
                }
            }
        }
        // Column heights: number of grid rows long enough to reach column c.
        let cols = grid.first().map_or(0, |r| r.len());
        let mut chain: Vec<Vec<usize>> = vec![vec![0; cols]; max_entry + 1];
        for c in 0..cols {
            let height = grid.iter().take_while(|row| row.len() > c).count();
            let mut filled_from = height;
            for (r, row) in grid.iter().enumerate().take(height) {
                if row[c] > 0 {
                    filled_from = r;
                    break;
                }
            }
            for level in &mut chain {
                level[c] = filled_from;
            }
            let mut prev_entry = 0usize;
            #[allow(clippy::needless_range_loop)]
            for r in filled_from..height {
                let v = grid[r][c];
                if v <= prev_entry {
                    return Err(LrError::ColumnViolation {
                        at: BoxPos {
                            row: r + 1,
                            col: c + 1,
                        },
                        entry: v,
                    });
                }
                prev_entry = v;
                for level in chain.iter_mut().skip(v) {
                    level[c] = r + 1;
                }
            }
        }
        let chain = chain.into_iter().map(Partition::from_multiset).collect();
        Self::from_chain(chain)
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// Level `e` partition; levels past the stored chain repeat the outer one.
    pub fn level(&self, e: usize) -> &Partition {
        self.chain
            .get(e)
            .unwrap_or_else(|| self.chain.last().unwrap())
    }

    pub fn outer(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer().clone(), self.inner().clone()).unwrap()
    }

    /// Largest entry; 0 for the all-empty tableau.
    pub fn max_entry(&self) -> usize {
        self.chain.len() - 1
    }

    /// Content alpha: entry `e` occurs `alpha'_e` times.
    pub fn content(&self) -> Partition {
        let counts: Vec<usize> = (1..self.chain.len())
            .map(|e| self.chain[e].weight() - self.chain[e - 1].weight())
            .collect();
        // conjugate of the count vector, robust to non-monotone inputs
        let max = counts.iter().copied().max().unwrap_or(0);
        Partition::from_multiset((1..=max).map(|k| counts.iter().filter(|&&c| c >= k).count()))
    }

    pub fn box_count(&self) -> usize {
        self.outer().weight() - self.inner().weight()
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell {
        if row == 0 || col == 0 || self.outer().part(col - 1) < row {
            return Cell::Absent;
        }
        if self.inner().part(col - 1) >= row {
            return Cell::Empty;
        }
        let e = (1..self.chain.len())
            .find(|&e| self.chain[e].part(col - 1) >= row)
            .expect("box below inner must be reached by some level");
        Cell::Entry(e)
    }

    /// Entry boxes sorted by (entry, row, col).
    pub fn entry_boxes(&self) -> Vec<EntryBox> {
        let mut out = Vec::new();
        for e in 1..self.chain.len() {
            for c in 0..self.chain[e].len() {
                for r in self.chain[e - 1].part(c)..self.chain[e].part(c) {
                    out.push(EntryBox {
                        entry: e,
                        pos: BoxPos {
                            row: r + 1,
                            col: c + 1,
                        },
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// The entry grid, one vector per row, 0 for empty boxes.
    pub fn grid(&self) -> Vec<Vec<usize>> {
        let outer = self.outer();
        let rows = outer.part(0);
        (1..=rows)
            .map(|r| {
                let width = outer.parts().iter().take_while(|&&p| p >= r).count();
                (1..=width)
                    .map(|c| match self.cell(r, c) {
                        Cell::Entry(e) => e,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    }

    /// Number of columns whose empty part has exactly `k` boxes.
    pub fn columns_with_empty_boxes(&self, k: usize) -> usize {
        let outer_len = self.outer().len();
        (0..outer_len)
            .filter(|&c| self.inner().part(c) == k)
            .count()
    }

    /// The lattice permutation property: right of every column boundary there
    /// are at least as many entries `e` as entries `e + 1`.
    pub fn check_lattice(&self) -> Result<(), LrError> {
        let outer_len = self.outer().len();
        for boundary in (0..=outer_len).rev() {
            for e in 1..self.max_entry() {
                let count = |entry: usize| -> usize {
                    (boundary..outer_len)
                        .map(|c| self.chain[entry].part(c) - self.chain[entry - 1].part(c))
                        .sum()
                };
                if count(e) < count(e + 1) {
                    let at = (boundary..outer_len)
                        .find_map(|c| {
                            let lo = self.chain[e].part(c);
                            let hi = self.chain[e + 1].part(c);
                            (hi > lo).then_some(BoxPos {
                                row: lo + 1,
                                col: c + 1,
                            })
                        })
                        .expect("violated count must have a witness box");
                    return Err(LrError::LatticeViolation {
                        boundary,
                        entry: e,
                        at,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_lr(&self) -> bool {
        self.check_lattice().is_ok()
    }

    /// Row-wise union: levelwise multiset union of the chains, shorter chain
    /// padded by repeating its last partition. The result is revalidated; a
    /// union of tableaux need not satisfy the lattice property.
    pub fn union(&self, other: &LRTableau) -> Result<LRTableau, LrError> {
        let len = self.chain.len().max(other.chain.len());
        let chain = (0..len)
            .map(|e| self.level(e).union(other.level(e)))
            .collect();
        LRTableau::from_chain(chain)
    }

    /// Union with several tableaux at once, validated once at the end.
    pub fn union_all(&self, others: &[LRTableau]) -> Result<LRTableau, LrError> {
        let mut acc = self.clone();
        for t in others {
            acc = acc.union_structural(t);
        }
        acc.check_lattice()?;
        Ok(acc)
    }

    /// Union without the final validation, for assembling building blocks.
    pub(crate) fn union_structural(&self, other: &LRTableau) -> LRTableau {
        let len = self.chain.len().max(other.chain.len());
        let chain = (0..len)
            .map(|e| self.level(e).union(other.level(e)))
            .collect();
        LRTableau::from_chain_structural(chain).expect("union of valid chains stays nested")
    }

    /// Reading word: entries right-to-left along rows, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        let grid = self.grid();
        let mut word = Vec::new();
        for row in &grid {
            for &v in row.iter().rev() {
                if v > 0 {
                    word.push(v);
                }
            }
        }
        word
    }

    /// Decomposes the tableau as a union of columns via a partial map with
    /// the empty box property; `None` when no such map exists. The witness is
    /// the decomposition induced by the first such map in enumeration order.
    pub fn is_union_of_columns(&self) -> Option<Vec<ColumnTableau>> {
        let g = crate::pmap::enumerate_partial_maps(self)
            .into_iter()
            .find(|g| g.satisfies_ebp())?;
        let dec = g.decomposition().expect("map passed the empty box check");
        Some(dec.column_multiset())
    }

    /// All ways of writing the tableau as a multiset union of column
    /// tableaux, each multiset sorted descending, multisets in canonical
    /// order. Empty columns count as members.
    pub fn column_decompositions(&self) -> Vec<Vec<ColumnTableau>> {
        let levels: Vec<Vec<usize>> = self
            .chain
            .iter()
            .map(|p| {
                let mut v = p.parts().to_vec();
                v.resize(self.outer().len(), 0);
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            })
            .collect();
        let mut remaining = levels;
        let mut out = Vec::new();
        let mut acc = Vec::new();
        self.decompose_rec(&mut remaining, None, &mut acc, &mut out);
        out
    }

    fn decompose_rec(
        &self,
        remaining: &mut Vec<Vec<usize>>,
        bound: Option<ColumnTableau>,
        acc: &mut Vec<ColumnTableau>,
        out: &mut Vec<Vec<ColumnTableau>>,
    ) {
        let top = remaining.last().unwrap();
        if top.is_empty() {
            out.push(acc.clone());
            return;
        }
        let levels = remaining.len();
        let n = *top.first().unwrap();
        // candidate columns C(e,f)_n; the empty column is C(1,0)_n.
        let mut cands: Vec<ColumnTableau> = vec![ColumnTableau::new(1, 0, n).unwrap()];
        for e in 1..levels {
            for f in e..levels {
                if f - e < n {
                    cands.push(ColumnTableau::new(e, f, n).unwrap());
                }
            }
        }
        cands.sort_by_key(|c| std::cmp::Reverse(c.sort_key()));
        for cand in cands {
            if let Some(b) = &bound {
                if cand.sort_key() > b.sort_key() {
                    continue;
                }
            }
            // trajectory feasibility: remove cand's level values
            let mut removed = Vec::with_capacity(levels);
            let mut ok = true;
            for (lvl, mults) in remaining.iter_mut().enumerate() {
                let v = cand.value_at_level(lvl);
                match mults.iter().position(|&x| x == v) {
                    Some(i) => {
                        mults.remove(i);
                        removed.push(v);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                acc.push(cand);
                self.decompose_rec(remaining, Some(cand), acc, out);
                acc.pop();
            }
            // restore
            for (lvl, v) in removed.into_iter().enumerate() {
                let mults = &mut remaining[lvl];
                let pos = mults.iter().position(|&x| x < v).unwrap_or(mults.len());
                mults.insert(pos, v);
            }
        }
    }
}

impl fmt::Debug for LRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LRTableau[")?;
        for (i, p) in self.chain.iter().enumerate() {
            if i > 0 {
                write!(f, " <= ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for LRTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            chain: &'a [Partition],
        }
        Raw { chain: &self.chain }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LRTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            chain: Vec<Partition>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.chain.is_empty() {
            return Err(D::Error::custom("tableau chain must be non-empty"));
        }
        LRTableau::from_chain_structural(raw.chain).map_err(D::Error::custom)
    }
}

/// Column tableau data `C(e,f)_n`. `f = e - 1 = 0` encodes the empty column.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColumnTableau {
    pub e: usize,
    pub f: usize,
    pub n: usize,
}

/// The requested column does not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidColumn {
    pub e: usize,
    pub f: usize,
    pub n: usize,
}

impl fmt::Display for InvalidColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "INVALID_COLUMN: C({},{})_{} is not a column tableau",
            self.e, self.f, self.n
        )
    }
}

impl std::error::Error for InvalidColumn {}

impl ColumnTableau {
    pub fn new(e: usize, f: usize, n: usize) -> Result<Self, InvalidColumn> {
        let bad = InvalidColumn { e, f, n };
        if n == 0 || e == 0 {
            return Err(bad);
        }
        if f + 1 == e {
            // empty column convention, C(1,0)_n only
            if e != 1 {
                return Err(bad);
            }
        } else if f < e || n < f - e + 1 {
            return Err(bad);
        }
        Ok(ColumnTableau { e, f, n })
    }

    pub fn is_empty_column(&self) -> bool {
        self.f + 1 == self.e
    }

    pub fn entries(&self) -> usize {
        if self.is_empty_column() {
            0
        } else {
            self.f - self.e + 1
        }
    }

    /// The single part at chain level `lvl`.
    pub fn value_at_level(&self, lvl: usize) -> usize {
        if self.is_empty_column() {
            self.n
        } else if lvl < self.e {
            self.n - (self.f - self.e + 1)
        } else if lvl <= self.f {
            self.n + lvl - self.f
        } else {
            self.n
        }
    }

    pub fn tableau(&self) -> LRTableau {
        let chain: Vec<Partition> = (0..=self.f)
            .map(|lvl| Partition::from_multiset([self.value_at_level(lvl)]))
            .collect();
        LRTableau::from_chain_structural(chain).expect("column chain is nested")
    }

    fn sort_key(&self) -> (usize, usize, usize) {
        (self.n, self.e, self.f)
    }
}

impl fmt::Debug for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})_{}", self.e, self.f, self.n)
    }
}

impl fmt::Display for ColumnTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All tableaux of shape `beta \ gamma` and content `alpha`, each exactly
/// once, ordered by ascending reading word.
pub fn enumerate_lr(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<Vec<LRTableau>, ShapeMismatch> {
    if !beta.contains(gamma) {
        return Err(ShapeMismatch {
            detail: format!("{gamma} is not contained in {beta}"),
        });
    }
    if beta.weight() != alpha.weight() + gamma.weight() {
        return Err(ShapeMismatch {
            detail: format!("|{beta}| != |{alpha}| + |{gamma}|"),
        });
    }
    let alpha_conj = alpha.conjugate();
    Ok(fill_shape(beta, gamma, Some(alpha_conj.parts().to_vec())))
}

/// All tableaux of shape `beta \ gamma` over every content.
pub fn enumerate_lr_all_contents(beta: &Partition, gamma: &Partition) -> Vec<LRTableau> {
    let boxes = beta.weight() - gamma.weight();
    if boxes == 0 {
        return vec![LRTableau::empty_of(beta.clone())];
    }
    partitions_of(boxes)
        .into_iter()
        .flat_map(|alpha| enumerate_lr(&alpha, beta, gamma).unwrap_or_default())
        .collect()
}

fn fill_shape(beta: &Partition, gamma: &Partition, target: Option<Vec<usize>>) -> Vec<LRTableau> {
    // entry cells in reading order (top-to-bottom, right-to-left)
    let rows = beta.part(0);
    let mut cells = Vec::new();
    for r in 1..=rows {
        let width = beta.parts().iter().take_while(|&&p| p >= r).count();
        for c in (1..=width).rev() {
            if gamma.part(c - 1) < r {
                cells.push(BoxPos { row: r, col: c });
            }
        }
    }
    let max_entry = target.as_ref().map_or(cells.len(), |t| t.len());
    let mut grid = vec![vec![0usize; beta.len()]; rows];
    let mut counts = vec![0usize; max_entry + 1];
    let mut out = Vec::new();
    fill_rec(
        beta,
        gamma,
        &cells,
        0,
        max_entry,
        &target,
        &mut grid,
        &mut counts,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_rec(
    beta: &Partition,
    gamma: &Partition,
    cells: &[BoxPos],
    idx: usize,
    max_entry: usize,
    target: &Option<Vec<usize>>,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
    out: &mut Vec<LRTableau>,
) {
    if idx == cells.len() {
        if let Some(t) = target {
            for (e, &want) in t.iter().enumerate() {
                if counts[e + 1] != want {
                    return;
                }
            }
        }
        if let Ok(tab) = tableau_from_entry_grid(beta, gamma, grid) {
            if tab.is_lr() {
                out.push(tab);
            }
        }
        return;
    }
    let BoxPos { row, col } = cells[idx];
    let right = if col < beta.len() && beta.part(col) >= row {
        grid[row - 1][col] // entry of the cell to the right (filled earlier)
    } else {
        0
    };
    let above = if row >= 2 && gamma.part(col - 1) < row - 1 {
        grid[row - 2][col - 1]
    } else {
        0
    };
    let hi = if right > 0 {
        right.min(max_entry)
    } else {
        max_entry
    };
    for e in (above + 1)..=hi {
        if let Some(t) = target {
            if counts[e] >= t[e - 1] {
                continue;
            }
        }
        grid[row - 1][col - 1] = e;
        counts[e] += 1;
        fill_rec(
            beta,
            gamma,
            cells,
            idx + 1,
            max_entry,
            target,
            grid,
            counts,
            out,
        );
        counts[e] -= 1;
        grid[row - 1][col - 1] = 0;
    }
}

fn tableau_from_entry_grid(
    beta: &Partition,
    gamma: &Partition,
    grid: &[Vec<usize>],
) -> Result<LRTableau, LrError> {
    let max_entry = grid.iter().flatten().copied().max().unwrap_or(0);
    let mut chain = Vec::with_capacity(max_entry + 1);
    let mut level = gamma.parts().to_vec();
    level.resize(beta.len(), 0);
    chain.push(Partition::from_multiset(level.clone()));
    for e in 1..=max_entry {
        for (c, part) in level.iter_mut().enumerate() {
            for row in grid.iter().take(beta.part(c)).skip(gamma.part(c)) {
                if row[c] == e {
                    *part += 1;
                }
            }
        }
        chain.push(Partition::from_multiset(level.clone()));
    }
    LRTableau::from_chain_structural(chain)
}

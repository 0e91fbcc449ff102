//! Box moves, the dominance order on tableaux, and the boundary poset.
//!
//! An increasing box move swaps the entry runs of two columns `C(e,f)_n` and
//! `C(e',f')_{n'}` (with `n > n'`, `e < e'`, `f - e = f' - e'`) so that the
//! smallest entry moves to a higher position. Every increasing box move is
//! certified by a one-parameter family of embeddings degenerating from one
//! tableau stratum into the other.

use crate::engine::{self, boxmove, tableau_of_embedding};
use crate::partition::Partition;
use crate::tableau::{enumerate_lr, ColumnTableau, LRTableau, ShapeMismatch};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    ShapeMismatch(ShapeMismatch),
    /// A certificate sweep contradicted the expected degeneration; this
    /// signals an implementation bug, not new mathematics.
    CertificateFailure {
        from: usize,
        to: usize,
        detail: String,
    },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::ShapeMismatch(s) => write!(f, "{s}"),
            PosetError::CertificateFailure { from, to, detail } => {
                write!(f, "CERTIFICATE_FAILURE on edge {from} -> {to}: {detail}")
            }
        }
    }
}

impl std::error::Error for PosetError {}

/// A detected increasing box move between two tableaux of the same shape and
/// content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxMove {
    pub n: usize,
    pub n_small: usize,
    pub e: usize,
    pub f: usize,
    pub e_big: usize,
    pub f_big: usize,
    /// The two columns replaced in the source tableau.
    pub source_cols: [ColumnTableau; 2],
    /// Their replacements in the target tableau.
    pub target_cols: [ColumnTableau; 2],
    /// Columns shared by the two decompositions.
    pub common: Vec<ColumnTableau>,
}

fn same_shape_content(a: &LRTableau, b: &LRTableau) -> Result<(), ShapeMismatch> {
    if a.outer() != b.outer() || a.inner() != b.inner() {
        return Err(ShapeMismatch {
            detail: "tableaux have different shapes".into(),
        });
    }
    if a.content() != b.content() {
        return Err(ShapeMismatch {
            detail: "tableaux have different contents".into(),
        });
    }
    Ok(())
}

fn multiset_sub(a: &[ColumnTableau], b: &[ColumnTableau]) -> Vec<ColumnTableau> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for x in a {
        match rest.iter().position(|y| y == x) {
            Some(i) => {
                rest.remove(i);
            }
            None => out.push(*x),
        }
    }
    out
}

/// Searches all column decompositions of both tableaux for a pair differing
/// in exactly two columns with the increasing pattern. Deterministic: first
/// match in canonical decomposition order.
pub fn is_increasing_box_move(
    g: &LRTableau,
    gt: &LRTableau,
) -> Result<Option<BoxMove>, ShapeMismatch> {
    same_shape_content(g, gt)?;
    if g == gt {
        return Ok(None);
    }
    let decs_g = g.column_decompositions();
    let decs_t = gt.column_decompositions();
    Ok(box_move_from_decompositions(&decs_g, &decs_t))
}

/// The search core, on precomputed decompositions (for sweeps that cache
/// them).
pub(crate) fn box_move_from_decompositions(
    decs_g: &[Vec<ColumnTableau>],
    decs_t: &[Vec<ColumnTableau>],
) -> Option<BoxMove> {
    for d in decs_g {
        for dt in decs_t {
            let removed = multiset_sub(d, dt);
            let added = multiset_sub(dt, d);
            if removed.len() != 2 || added.len() != 2 {
                continue;
            }
            if let Some(mv) = match_pattern(&removed, &added) {
                let common = multiset_sub(d, mv.source_cols.as_ref());
                return Some(BoxMove { common, ..mv });
            }
        }
    }
    None
}

fn match_pattern(removed: &[ColumnTableau], added: &[ColumnTableau]) -> Option<BoxMove> {
    // orient: the tall source column carries the smaller entries
    for (tall, short) in [(0, 1), (1, 0)] {
        let a = removed[tall]; // C(e,f)_n
        let b = removed[short]; // C(e',f')_{n'}
        if a.is_empty_column() || b.is_empty_column() {
            continue;
        }
        let (n, n_small) = (a.n, b.n);
        let (e, f, e_big, f_big) = (a.e, a.f, b.e, b.f);
        if n <= n_small || e >= e_big || f >= f_big || f - e != f_big - e_big {
            continue;
        }
        // target must be exactly the swapped pair
        let want1 = ColumnTableau::new(e_big, f_big, n).ok()?;
        let want2 = ColumnTableau::new(e, f, n_small).ok()?;
        let matches =
            (added[0] == want1 && added[1] == want2) || (added[0] == want2 && added[1] == want1);
        if matches {
            return Some(BoxMove {
                n,
                n_small,
                e,
                f,
                e_big,
                f_big,
                source_cols: [a, b],
                target_cols: [want1, want2],
                common: Vec::new(),
            });
        }
    }
    None
}

/// All increasing box moves out of `g` into the universe, as (index, move).
pub fn box_move_successors(g: &LRTableau, universe: &[LRTableau]) -> Vec<(usize, BoxMove)> {
    universe
        .iter()
        .enumerate()
        .filter(|(_, t)| *t != g)
        .filter_map(|(i, t)| {
            is_increasing_box_move(g, t)
                .ok()
                .flatten()
                .map(|mv| (i, mv))
        })
        .collect()
}

/// Levelwise dominance on tableaux of one shape and content, oriented so that
/// the source of an increasing box move compares below its target.
pub fn dominance_leq_tableaux(g: &LRTableau, gt: &LRTableau) -> Result<bool, ShapeMismatch> {
    same_shape_content(g, gt)?;
    let levels = g.chain().len().max(gt.chain().len());
    Ok((0..levels).all(|e| gt.level(e).dominance_leq(g.level(e))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EdgeKind {
    BoxMove,
    DominanceOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetEdge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
    pub certified: bool,
}

/// The tableau poset of one shape: nodes are all tableaux, box-move edges
/// carry the boundary relation, dominance-only edges record pairs that are
/// dominance-comparable but not box-connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPoset {
    pub nodes: Vec<LRTableau>,
    pub edges: Vec<PosetEdge>,
}

impl TableauPoset {
    pub fn box_edges(&self) -> impl Iterator<Item = &PosetEdge> {
        self.edges.iter().filter(|e| e.kind == EdgeKind::BoxMove)
    }

    /// Reachability closure of the box-move edges.
    pub fn box_closure(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut reach = vec![vec![false; n]; n];
        for e in self.box_edges() {
            reach[e.from][e.to] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    let via: Vec<usize> = (0..n).filter(|&j| reach[k][j]).collect();
                    for j in via {
                        reach[i][j] = true;
                    }
                }
            }
        }
        reach
    }

    /// Hasse edges: transitive reduction of the box-move closure.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let reach = self.box_closure();
        let n = self.nodes.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !reach[i][j] || i == j {
                    continue;
                }
                let shortcut = (0..n).any(|k| k != i && k != j && reach[i][k] && reach[k][j]);
                if !shortcut {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Builds the poset of all tableaux of the given shape. Box-move edges are
/// the asserted boundary relations; with `certify` set, each edge is checked
/// by realizing the one-parameter family over `F_p` and recomputing tableaux
/// for every parameter value.
pub fn build_boundary_poset(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    certify: bool,
    p: u32,
) -> Result<TableauPoset, PosetError> {
    let nodes = enumerate_lr(alpha, beta, gamma).map_err(PosetError::ShapeMismatch)?;
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in 0..nodes.len() {
            if i == j {
                continue;
            }
            let mv =
                is_increasing_box_move(&nodes[i], &nodes[j]).map_err(PosetError::ShapeMismatch)?;
            if let Some(mv) = mv {
                let mut certified = false;
                if certify {
                    certify_edge(&nodes[i], &nodes[j], &mv, p).map_err(|detail| {
                        PosetError::CertificateFailure {
                            from: i,
                            to: j,
                            detail,
                        }
                    })?;
                    certified = true;
                }
                edges.push(PosetEdge {
                    from: i,
                    to: j,
                    kind: EdgeKind::BoxMove,
                    certified,
                });
            }
        }
    }
    // dominance-comparable pairs that the box closure misses
    let poset = TableauPoset { nodes, edges };
    let reach = poset.box_closure();
    let mut poset = poset;
    #[allow(clippy::needless_range_loop)]
    for i in 0..poset.nodes.len() {
        for j in 0..poset.nodes.len() {
            if i == j || reach[i][j] {
                continue;
            }
            if dominance_leq_tableaux(&poset.nodes[i], &poset.nodes[j])
                .map_err(PosetError::ShapeMismatch)?
            {
                poset.edges.push(PosetEdge {
                    from: i,
                    to: j,
                    kind: EdgeKind::DominanceOnly,
                    certified: false,
                });
            }
        }
    }
    Ok(poset)
}

/// Runs the full parameter sweep for one box move: the family has the source
/// tableau away from zero and the target tableau at zero.
fn certify_edge(g: &LRTableau, gt: &LRTableau, mv: &BoxMove, p: u32) -> Result<(), String> {
    let ctx = boxmove::build_context(g, gt, mv).map_err(|e| e.to_string())?;
    let s_inst = boxmove::realize_s(&ctx, p).map_err(|e| e.to_string())?;
    for mu in 0..p {
        let q_mu = boxmove::build_q_mu(&ctx, mu, p).map_err(|e| e.to_string())?;
        let total = engine::direct_sum(&s_inst, &q_mu).map_err(|e| e.to_string())?;
        let got = tableau_of_embedding(&total);
        let want = if mu == 0 { gt } else { g };
        if &got != want {
            return Err(format!(
                "family at mu={mu} has tableau {got:?}, expected {want:?}"
            ));
        }
    }
    Ok(())
}

/// DOT rendering of the Hasse diagram, nodes labeled by entry grids.
pub fn emit_hasse_dot(poset: &TableauPoset) -> String {
    let mut out = String::from(
        "digraph boundary {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n",
    );
    for (i, t) in poset.nodes.iter().enumerate() {
        let label: Vec<String> = t
            .grid()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| {
                        if v == 0 {
                            ".".to_string()
                        } else {
                            v.to_string()
                        }
                    })
                    .collect::<String>()
            })
            .collect();
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", label.join("\\n")));
    }
    for (from, to) in poset.hasse_edges() {
        out.push_str(&format!("  n{from} -> n{to};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn intro_nodes() -> Vec<LRTableau> {
        enumerate_lr(&p(&[3, 2]), &p(&[5, 4, 3, 2, 1]), &p(&[4, 3, 2, 1])).unwrap()
    }

    fn by_grid(nodes: &[LRTableau], grid: &[Vec<usize>]) -> usize {
        nodes
            .iter()
            .position(|t| t.grid() == grid)
            .expect("tableau with the given grid")
    }

    /// Indices of the five tableaux in enumeration order, keyed by their
    /// hand-drawn grids.
    fn intro_indices(nodes: &[LRTableau]) -> [usize; 5] {
        let g1 = by_grid(
            nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 2],
                vec![0, 0, 3],
                vec![0, 1],
                vec![2],
            ],
        );
        let g2 = by_grid(
            nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 2],
                vec![0, 0, 1],
                vec![0, 3],
                vec![2],
            ],
        );
        let g3a = by_grid(
            nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, 2],
                vec![0, 3],
                vec![2],
            ],
        );
        let g3b = by_grid(
            nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 2],
                vec![0, 0, 1],
                vec![0, 2],
                vec![3],
            ],
        );
        let g4 = by_grid(
            nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, 2],
                vec![0, 2],
                vec![3],
            ],
        );
        [g1, g2, g3a, g3b, g4]
    }

    #[test]
    fn box_moves_in_the_intro_family() {
        let nodes = intro_nodes();
        let [g1, g2, g3a, g3b, g4] = intro_indices(&nodes);

        let mv = is_increasing_box_move(&nodes[g1], &nodes[g2])
            .unwrap()
            .unwrap();
        assert_eq!((mv.n, mv.n_small), (4, 3));
        assert!(is_increasing_box_move(&nodes[g2], &nodes[g1])
            .unwrap()
            .is_none());
        assert!(is_increasing_box_move(&nodes[g1], &nodes[g1])
            .unwrap()
            .is_none());

        let succ_of = |i: usize| -> Vec<usize> {
            let mut v: Vec<usize> = box_move_successors(&nodes[i], &nodes)
                .into_iter()
                .map(|(j, _)| j)
                .collect();
            v.sort_unstable();
            v
        };
        // the long move g1 -> g4 swaps C(1,2)_5 with C(2,3)_3 directly; the
        // Hasse reduction below still drops it
        let mut expect = vec![g2, g4];
        expect.sort_unstable();
        assert_eq!(succ_of(g1), expect);
        let mut expect = vec![g3a, g3b];
        expect.sort_unstable();
        assert_eq!(succ_of(g2), expect);
        assert_eq!(succ_of(g4), Vec::<usize>::new());
    }

    #[test]
    fn running_example_box_move_data() {
        // the three-column example: swap C(1,2)_5 and C(3,4)_4
        let g = crate::pmap::PoleDecomposition::new(
            vec![
                crate::pole::HeightSequence::new(vec![0, 1, 2, 3]).unwrap(),
                crate::pole::HeightSequence::new(vec![3, 4]).unwrap(),
            ],
            p(&[2]),
        )
        .tableau()
        .unwrap();
        let gt = crate::pmap::PoleDecomposition::new(
            vec![
                crate::pole::HeightSequence::new(vec![0, 1, 3, 4]).unwrap(),
                crate::pole::HeightSequence::new(vec![2, 3]).unwrap(),
            ],
            Partition::empty(),
        )
        .tableau()
        .unwrap();
        let mv = is_increasing_box_move(&g, &gt).unwrap().unwrap();
        assert_eq!(
            (mv.n, mv.n_small, mv.e, mv.f, mv.e_big, mv.f_big),
            (5, 4, 1, 2, 3, 4)
        );
    }

    #[test]
    fn dominance_on_the_intro_family() {
        let nodes = intro_nodes();
        let [g1, g2, g3a, g3b, g4] = intro_indices(&nodes);
        assert!(dominance_leq_tableaux(&nodes[g1], &nodes[g2]).unwrap());
        assert!(dominance_leq_tableaux(&nodes[g2], &nodes[g4]).unwrap());
        assert!(dominance_leq_tableaux(&nodes[g1], &nodes[g1]).unwrap());
        assert!(!dominance_leq_tableaux(&nodes[g3a], &nodes[g3b]).unwrap());
        assert!(!dominance_leq_tableaux(&nodes[g3b], &nodes[g3a]).unwrap());
        assert!(!dominance_leq_tableaux(&nodes[g2], &nodes[g1]).unwrap());
    }

    #[test]
    fn intro_poset_shape() {
        let poset = build_boundary_poset(
            &p(&[3, 2]),
            &p(&[5, 4, 3, 2, 1]),
            &p(&[4, 3, 2, 1]),
            false,
            5,
        )
        .unwrap();
        assert_eq!(poset.nodes.len(), 5);
        let [g1, g2, g3a, g3b, g4] = intro_indices(&poset.nodes);
        let mut hasse = poset.hasse_edges();
        hasse.sort_unstable();
        let mut want = vec![(g1, g2), (g2, g3a), (g2, g3b), (g3a, g4), (g3b, g4)];
        want.sort_unstable();
        assert_eq!(hasse, want);
        // the poset is complete here: box closure equals dominance
        assert!(poset.edges.iter().all(|e| e.kind == EdgeKind::BoxMove));
    }

    #[test]
    fn single_node_poset() {
        let poset = build_boundary_poset(&p(&[1]), &p(&[2]), &p(&[1]), false, 5).unwrap();
        assert_eq!(poset.nodes.len(), 1);
        assert!(poset.edges.is_empty());
        let dot = emit_hasse_dot(&poset);
        assert_eq!(dot.matches("->").count(), 0);
        assert!(dot.contains("n0"));
    }

    #[test]
    fn box_move_implies_dominance_small_sweep() {
        use crate::partition::{partitions_up_to, subdiagrams};
        for beta in partitions_up_to(8) {
            for gamma in subdiagrams(&beta) {
                if beta == gamma {
                    continue;
                }
                let tabs = crate::tableau::enumerate_lr_all_contents(&beta, &gamma);
                for a in &tabs {
                    for b in &tabs {
                        if a.content() != b.content() {
                            continue;
                        }
                        if is_increasing_box_move(a, b).unwrap().is_some() {
                            assert!(dominance_leq_tableaux(a, b).unwrap());
                            assert!(a != b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output_is_deterministic() {
        let poset = build_boundary_poset(
            &p(&[3, 2]),
            &p(&[5, 4, 3, 2, 1]),
            &p(&[4, 3, 2, 1]),
            false,
            5,
        )
        .unwrap();
        let a = emit_hasse_dot(&poset);
        let b = emit_hasse_dot(&poset);
        assert_eq!(a, b);
        assert_eq!(a.matches("->").count(), 5);
    }
}

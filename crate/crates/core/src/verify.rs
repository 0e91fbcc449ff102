//! Cross-module verification sweeps. Each suite replays a family of claims
//! at desk scale and reports one line per property; the command line front
//! end prints the reports, and the acceptance tests assert them.

use crate::engine::{
    boxmove, direct_sum, endo_submodule, height_sequence_of, realize_pole, tableau_of_embedding,
    ModuleSpace, Subspace,
};
use crate::partition::{partitions_up_to, subdiagrams, Partition};
use crate::pmap::{self, PartialMap, PoleDecomposition};
use crate::pole::{
    count_endo_submodules, enumerate_single_entry_tableaux, tableau_of_cyclic, CyclicType,
    HeightSequence,
};
use crate::poset::{self, dominance_leq_tableaux, is_increasing_box_move};
use crate::tableau::{enumerate_lr_all_contents, BoxPos, LRTableau};
use serde::Serialize;
use std::collections::BTreeMap;

/// One verified property.
#[derive(Clone, Debug, Serialize)]
pub struct PropCheck {
    pub suite: String,
    pub property: String,
    pub status: &'static str,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl PropCheck {
    fn pass(suite: &str, property: &str, checked: usize) -> Self {
        PropCheck {
            suite: suite.into(),
            property: property.into(),
            status: "pass",
            checked,
            counterexample: None,
        }
    }

    fn fail(suite: &str, property: &str, checked: usize, detail: String) -> Self {
        PropCheck {
            suite: suite.into(),
            property: property.into(),
            status: "fail",
            checked,
            counterexample: Some(detail),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub properties: Vec<PropCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropCheck::passed)
    }
}

/// Small deterministic generator for randomized sweeps.
#[cfg(test)]
pub(crate) struct XorShift(u64);

#[cfg(test)]
impl XorShift {
    pub(crate) fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub(crate) fn next_below(&mut self, n: u32) -> u32 {
        (self.next_u64() % n as u64) as u32
    }
}

/// Realizes every height sequence with entries below `max_height` and checks
/// that the generator's height sequence and the recomputed tableau both come
/// back unchanged.
pub fn verify_pole_roundtrip(max_height: usize, p: u32) -> SuiteReport {
    let suite = "pole-roundtrip";
    let mut hs_checked = 0;
    let mut tab_checked = 0;
    let mut hs_fail = None;
    let mut tab_fail = None;
    for mask in 1u64..(1 << max_height) {
        let heights: Vec<usize> = (0..max_height).filter(|i| mask & (1 << i) != 0).collect();
        let seq = HeightSequence::new(heights).unwrap();
        let cyc = CyclicType::pole_only(seq.clone());
        let inst = realize_pole(&cyc, p).expect("pole realizes");
        let back = height_sequence_of(inst.space(), &inst.generators()[0]);
        hs_checked += 1;
        if back != seq && hs_fail.is_none() {
            hs_fail = Some(format!("{seq} came back as {back}"));
        }
        let from_ranks = tableau_of_embedding(&inst);
        let combinatorial = tableau_of_cyclic(&cyc);
        tab_checked += 1;
        if from_ranks != combinatorial && tab_fail.is_none() {
            tab_fail = Some(format!("{seq}: {from_ranks:?} vs {combinatorial:?}"));
        }
    }
    SuiteReport {
        suite: suite.into(),
        properties: vec![
            match hs_fail {
                None => PropCheck::pass(suite, "height-sequence-roundtrip", hs_checked),
                Some(d) => PropCheck::fail(suite, "height-sequence-roundtrip", hs_checked, d),
            },
            match tab_fail {
                None => PropCheck::pass(suite, "tableau-agreement", tab_checked),
                Some(d) => PropCheck::fail(suite, "tableau-agreement", tab_checked, d),
            },
        ],
    }
}

/// A basis of `Hom(N_beta, N_beta)` applied to `v`, spanning `End(B).v`
/// without reference to height sequences.
fn endo_orbit_by_homs(space: &ModuleSpace, v: &[u32]) -> Subspace {
    let beta = space.beta();
    let mut out = Subspace::zero(space.prime(), space.dim());
    for i in 0..beta.len() {
        for j in 0..beta.len() {
            let from = beta.part(i);
            let to = beta.part(j);
            for k in to.saturating_sub(from)..to {
                // b_{i,t} maps to b_{j,k+t}
                let mut img = space.zero_vector();
                for t in 0..from {
                    if k + t < to {
                        img[space.index(j, k + t)] = v[space.index(i, t)];
                    }
                }
                out.insert(img);
            }
        }
    }
    out
}

/// Counts distinct endomorphism orbits over all vectors of `N_beta` for all
/// `beta` up to the given weight, against the product formula and the
/// single-entry tableau count.
pub fn verify_endo_count(max_weight: usize, p: u32) -> SuiteReport {
    let suite = "endo-count";
    let mut props = Vec::new();
    let mut checked = 0;
    let mut fail: Option<String> = None;
    let mut formula_fail: Option<String> = None;
    for beta in partitions_up_to(max_weight) {
        let space = ModuleSpace::new(p, beta.clone()).expect("prime");
        let dim = space.dim();
        let total = (p as u64).pow(dim as u32);
        let mut distinct: Vec<Subspace> = Vec::new();
        for code in 0..total {
            let mut v = space.zero_vector();
            let mut c = code;
            for x in v.iter_mut() {
                *x = (c % p as u64) as u32;
                c /= p as u64;
            }
            let by_homs = endo_orbit_by_homs(&space, &v);
            let by_gaps = endo_submodule(&space, &v);
            checked += 1;
            if by_homs != by_gaps && fail.is_none() {
                fail = Some(format!("beta={beta}, v={v:?}: orbit mismatch"));
            }
            if !distinct.contains(&by_homs) {
                distinct.push(by_homs);
            }
        }
        let formula = count_endo_submodules(&beta);
        let tabs = enumerate_single_entry_tableaux(&beta).len() as u64;
        if (distinct.len() as u64 != formula || tabs != formula) && formula_fail.is_none() {
            formula_fail = Some(format!(
                "beta={beta}: {} orbits, {} tableaux, formula {formula}",
                distinct.len(),
                tabs
            ));
        }
    }
    props.push(match fail {
        None => PropCheck::pass(suite, "orbit-formula-agreement", checked),
        Some(d) => PropCheck::fail(suite, "orbit-formula-agreement", checked, d),
    });
    props.push(match formula_fail {
        None => PropCheck::pass(suite, "count-matches-product", checked),
        Some(d) => PropCheck::fail(suite, "count-matches-product", checked, d),
    });
    SuiteReport {
        suite: suite.into(),
        properties: props,
    }
}

/// All decompositions into poles and empty blocks whose union reproduces the
/// tableau, enumerated from the (entry, row) multiset without partial maps.
pub fn enumerate_realizing_decompositions(t: &LRTableau) -> Vec<PoleDecomposition> {
    let max_entry = t.max_entry();
    let mut rows_by_entry: Vec<Vec<usize>> = vec![Vec::new(); max_entry];
    for b in t.entry_boxes() {
        rows_by_entry[b.entry - 1].push(b.pos.row);
    }
    let mut pole_sets = Vec::new();
    let mut poles: Vec<Vec<usize>> = Vec::new();
    collect_pole_sets(&mut rows_by_entry, &mut poles, &mut pole_sets);
    let mut out = Vec::new();
    for set in pole_sets {
        let seqs: Vec<HeightSequence> = set
            .iter()
            .map(|rows| HeightSequence::new(rows.iter().map(|r| r - 1).collect()).unwrap())
            .collect();
        let mut ambient = Partition::empty();
        for s in &seqs {
            ambient = ambient.union(&s.pole_data().unwrap().ambient());
        }
        let Some(empty_parts) = t.outer().try_remove(&ambient) else {
            continue;
        };
        let d = PoleDecomposition::new(seqs, empty_parts);
        if d.tableau().is_ok_and(|u| &u == t) && !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

fn collect_pole_sets(
    remaining: &mut Vec<Vec<usize>>,
    poles: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if remaining.is_empty() {
        out.push(Vec::new());
        return;
    }
    if remaining[0].is_empty() {
        if remaining.iter().all(Vec::is_empty) {
            let mut set = poles.clone();
            set.sort();
            if !out.contains(&set) {
                out.push(set);
            }
        }
        return;
    }
    // every pole starts at an entry-1 box; anchor on the smallest row
    let r0 = *remaining[0].iter().min().unwrap();
    let pos = remaining[0].iter().position(|&r| r == r0).unwrap();
    remaining[0].remove(pos);
    poles.push(vec![r0]);
    extend_pole(remaining, poles, 1, out);
    poles.pop();
    remaining[0].push(r0);
}

fn extend_pole(
    remaining: &mut Vec<Vec<usize>>,
    poles: &mut Vec<Vec<usize>>,
    entry: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    // stop here
    collect_pole_sets(remaining, poles, out);
    if entry >= remaining.len() {
        return;
    }
    let last = *poles.last().unwrap().last().unwrap();
    let mut seen = Vec::new();
    for i in 0..remaining[entry].len() {
        let r = remaining[entry][i];
        if r <= last || seen.contains(&r) {
            continue;
        }
        seen.push(r);
        remaining[entry].remove(i);
        poles.last_mut().unwrap().push(r);
        extend_pole(remaining, poles, entry + 1, out);
        poles.last_mut().unwrap().pop();
        remaining[entry].insert(i, r);
    }
}

/// The classification sweep: every shape up to the weight bound, every
/// tableau; equivalence classes of maps with the empty box property
/// round-trip through pole decompositions and are counted independently.
pub fn verify_classification(max_weight: usize) -> SuiteReport {
    let suite = "classification";
    let mut roundtrip_checked = 0;
    let mut count_checked = 0;
    let mut union_checked = 0;
    let mut fails: BTreeMap<&str, String> = BTreeMap::new();
    for beta in partitions_up_to(max_weight) {
        for gamma in subdiagrams(&beta) {
            for t in enumerate_lr_all_contents(&beta, &gamma) {
                let maps = pmap::enumerate_partial_maps(&t);
                let classes = pmap::equivalence_classes(&maps);
                let ebp_reps: Vec<&PartialMap> = classes
                    .iter()
                    .map(|c| &maps[c[0]])
                    .filter(|m| m.satisfies_ebp())
                    .collect();
                for rep in &ebp_reps {
                    let d = rep.decomposition().unwrap();
                    let (t2, g2) = match pmap::pair_from_decomposition(&d) {
                        Ok(pair) => pair,
                        Err(e) => {
                            fails.entry("roundtrip").or_insert(format!("{t:?}: {e}"));
                            continue;
                        }
                    };
                    roundtrip_checked += 1;
                    if t2 != t || !g2.equivalent(rep).unwrap() {
                        fails
                            .entry("roundtrip")
                            .or_insert(format!("{t:?}: class does not round-trip"));
                    }
                }
                let independent = enumerate_realizing_decompositions(&t);
                count_checked += 1;
                if independent.len() != ebp_reps.len() {
                    fails.entry("class-count").or_insert(format!(
                        "{t:?}: {} classes vs {} decompositions",
                        ebp_reps.len(),
                        independent.len()
                    ));
                }
                // union of columns exactly when a map with the property exists
                let cols = t.is_union_of_columns();
                union_checked += 1;
                if cols.is_some() != !ebp_reps.is_empty() {
                    fails
                        .entry("union-of-columns")
                        .or_insert(format!("{t:?}: witness and property disagree"));
                }
                if t.shape().is_horizontal_strip() && cols.is_none() {
                    fails
                        .entry("horizontal-strip")
                        .or_insert(format!("{t:?}: horizontal strip without decomposition"));
                }
            }
        }
    }
    let prop = |name: &'static str, checked: usize, fails: &BTreeMap<&str, String>| match fails
        .get(name)
    {
        None => PropCheck::pass(suite, name, checked),
        Some(d) => PropCheck::fail(suite, name, checked, d.clone()),
    };
    SuiteReport {
        suite: suite.into(),
        properties: vec![
            prop("roundtrip", roundtrip_checked, &fails),
            prop("class-count", count_checked, &fails),
            prop("union-of-columns", union_checked, &fails),
            prop("horizontal-strip", union_checked, &fails),
        ],
    }
}

/// Brute-force check that invariant equality is exactly conjugacy by an
/// entry- and row-preserving permutation of the boxes.
pub fn verify_equivalence(max_weight: usize, max_boxes: usize) -> SuiteReport {
    let suite = "equivalence";
    let mut checked = 0;
    let mut fail = None;
    for beta in partitions_up_to(max_weight) {
        for gamma in subdiagrams(&beta) {
            if beta.weight() - gamma.weight() > max_boxes {
                continue;
            }
            for t in enumerate_lr_all_contents(&beta, &gamma) {
                let maps = pmap::enumerate_partial_maps(&t);
                for a in &maps {
                    for b in &maps {
                        let by_invariant = a.equivalent(b).unwrap();
                        let by_search = conjugate_exists(&t, a, b);
                        checked += 1;
                        if by_invariant != by_search && fail.is_none() {
                            fail = Some(format!(
                                "{t:?}: invariant says {by_invariant}, search says {by_search}"
                            ));
                        }
                    }
                }
            }
        }
    }
    let prop = match fail {
        None => PropCheck::pass(suite, "invariant-is-conjugacy", checked),
        Some(d) => PropCheck::fail(suite, "invariant-is-conjugacy", checked, d),
    };
    SuiteReport {
        suite: suite.into(),
        properties: vec![prop],
    }
}

/// Is `b = pi^{-1} a pi` for some box permutation preserving entry and row?
fn conjugate_exists(t: &LRTableau, a: &PartialMap, b: &PartialMap) -> bool {
    // cells of interchangeable boxes
    let mut cells: BTreeMap<(usize, usize), Vec<BoxPos>> = BTreeMap::new();
    for bx in t.entry_boxes() {
        cells
            .entry((bx.entry, bx.pos.row))
            .or_default()
            .push(bx.pos);
    }
    let cells: Vec<Vec<BoxPos>> = cells.into_values().collect();
    let mut perms_per_cell: Vec<Vec<Vec<usize>>> = Vec::new();
    for cell in &cells {
        perms_per_cell.push(permutations(cell.len()));
    }
    let mut choice = vec![0usize; cells.len()];
    loop {
        // assemble pi
        let mut pi: BTreeMap<BoxPos, BoxPos> = BTreeMap::new();
        for (ci, cell) in cells.iter().enumerate() {
            let perm = &perms_per_cell[ci][choice[ci]];
            for (i, &from) in cell.iter().enumerate() {
                pi.insert(from, cell[perm[i]]);
            }
        }
        let conjugated_matches = a.pairs().iter().all(|(s, img)| {
            // b(pi^{-1} s') with s' = pi(s): b(pi(s)) == pi(a(s))
            let ps = pi[&s.pos];
            let want = pi[&img.pos];
            b.pairs()
                .iter()
                .any(|(bs, bt)| bs.pos == ps && bt.pos == want)
        });
        if conjugated_matches {
            return true;
        }
        // next choice
        let mut i = 0;
        loop {
            if i == cells.len() {
                return false;
            }
            choice[i] += 1;
            if choice[i] < perms_per_cell[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Rook-strip shapes: the reachability closure of increasing box moves must
/// equal the dominance relation.
pub fn verify_rook_strip(max_weight: usize, max_boxes: usize) -> SuiteReport {
    let suite = "rook-strip";
    let mut checked = 0;
    let mut fail = None;
    for beta in partitions_up_to(max_weight) {
        for gamma in subdiagrams(&beta) {
            let shape = crate::partition::SkewShape::new(beta.clone(), gamma.clone()).unwrap();
            let boxes = shape.box_count();
            if boxes == 0 || boxes > max_boxes || !shape.is_rook_strip() {
                continue;
            }
            let tabs = enumerate_lr_all_contents(&beta, &gamma);
            let mut groups: BTreeMap<Partition, Vec<LRTableau>> = BTreeMap::new();
            for t in tabs {
                groups.entry(t.content()).or_default().push(t);
            }
            for group in groups.values() {
                let n = group.len();
                let mut reach = vec![vec![false; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        if i != j
                            && is_increasing_box_move(&group[i], &group[j])
                                .unwrap()
                                .is_some()
                        {
                            reach[i][j] = true;
                        }
                    }
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
                for i in 0..n {
                    for j in 0..n {
                        if i == j {
                            continue;
                        }
                        let dom = dominance_leq_tableaux(&group[i], &group[j]).unwrap();
                        checked += 1;
                        if dom != reach[i][j] && fail.is_none() {
                            fail = Some(format!(
                                "shape {beta}\\{gamma}: dominance {dom} vs box closure {}",
                                reach[i][j]
                            ));
                        }
                    }
                }
            }
        }
    }
    let prop = match fail {
        None => PropCheck::pass(suite, "box-closure-equals-dominance", checked),
        Some(d) => PropCheck::fail(suite, "box-closure-equals-dominance", checked, d),
    };
    SuiteReport {
        suite: suite.into(),
        properties: vec![prop],
    }
}

/// One named one-parameter family instance, checked at every `mu` over each
/// prime; returns an error string on the first mismatch.
fn check_family(
    g: &LRTableau,
    gt: &LRTableau,
    ctx: &boxmove::BoxMoveContext,
    p: u32,
) -> Result<(), String> {
    let q = boxmove::build_q(ctx, p).map_err(|e| e.to_string())?;
    let rr = boxmove::realize_pair(ctx, false, p).map_err(|e| e.to_string())?;
    if tableau_of_embedding(&q) != tableau_of_embedding(&rr) {
        return Err(format!("pullback tableau differs from R+R' over F_{p}"));
    }
    let s = boxmove::realize_s(ctx, p).map_err(|e| e.to_string())?;
    for mu in 0..p {
        let q_mu = boxmove::build_q_mu(ctx, mu, p).map_err(|e| e.to_string())?;
        let total = direct_sum(&s, &q_mu).map_err(|e| e.to_string())?;
        let got = tableau_of_embedding(&total);
        let want = if mu == 0 { gt } else { g };
        if &got != want {
            return Err(format!(
                "family at mu={mu} over F_{p} has the wrong tableau"
            ));
        }
    }
    // at zero the family matches the other pole pair as well
    let q0 = boxmove::build_q_mu(ctx, 0, p).map_err(|e| e.to_string())?;
    let rt = boxmove::realize_pair(ctx, true, p).map_err(|e| e.to_string())?;
    if tableau_of_embedding(&q0) != tableau_of_embedding(&rt) {
        return Err(format!("family at zero differs from Rt+Rt' over F_{p}"));
    }
    Ok(())
}

/// Exhaustive box-move sweep: every shape up to the weight bound, every
/// detected increasing box move, over each listed prime.
pub fn verify_box_family(max_weight: usize, primes: &[u32]) -> SuiteReport {
    let suite = "box-family";
    let mut moves_checked = 0;
    let mut fail: Option<String> = None;
    for beta in partitions_up_to(max_weight) {
        for gamma in subdiagrams(&beta) {
            if beta.weight() - gamma.weight() < 2 {
                continue;
            }
            let tabs = enumerate_lr_all_contents(&beta, &gamma);
            let mut groups: BTreeMap<Partition, Vec<LRTableau>> = BTreeMap::new();
            for t in tabs {
                groups.entry(t.content()).or_default().push(t);
            }
            for group in groups.values() {
                if group.len() < 2 {
                    continue;
                }
                let decs: Vec<_> = group.iter().map(|t| t.column_decompositions()).collect();
                for i in 0..group.len() {
                    for j in 0..group.len() {
                        if i == j {
                            continue;
                        }
                        let Some(mv) = poset::box_move_from_decompositions(&decs[i], &decs[j])
                        else {
                            continue;
                        };
                        moves_checked += 1;
                        if fail.is_some() {
                            continue;
                        }
                        match boxmove::build_context(&group[i], &group[j], &mv) {
                            Ok(ctx) => {
                                for &p in primes {
                                    if let Err(e) = check_family(&group[i], &group[j], &ctx, p) {
                                        fail = Some(format!(
                                            "{}\\{} move {:?}: {e}",
                                            beta,
                                            gamma,
                                            (mv.n, mv.n_small, mv.e, mv.f)
                                        ));
                                        break;
                                    }
                                }
                            }
                            Err(e) => {
                                fail = Some(format!("{beta}\\{gamma}: {e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    let named = named_instances(primes);
    let mut properties = vec![match &fail {
        None => PropCheck::pass(suite, "family-sweep", moves_checked),
        Some(d) => PropCheck::fail(suite, "family-sweep", moves_checked, d.clone()),
    }];
    properties.push(named);
    SuiteReport {
        suite: suite.into(),
        properties,
    }
}

/// The three worked instances with their published pole quadruples.
fn named_instances(primes: &[u32]) -> PropCheck {
    let suite = "box-family";
    let hs = |v: &[usize]| HeightSequence::new(v.to_vec()).unwrap();
    let dec = |poles: &[&[usize]], empty: &[usize]| {
        PoleDecomposition::new(
            poles.iter().map(|s| hs(s)).collect(),
            Partition::from_multiset(empty.iter().copied()),
        )
    };
    // (source, target, expected quadruple as (base, vee))
    type Quad = [(Vec<usize>, Option<usize>); 4];
    let cases: Vec<(PoleDecomposition, PoleDecomposition, Quad)> = vec![
        (
            dec(&[&[0, 1, 3], &[2, 4]], &[1]),
            dec(&[&[0, 2, 3], &[1, 4]], &[3]),
            [
                (vec![2, 4], None),
                (vec![0, 1, 3], Some(0)),
                (vec![1, 4], None),
                (vec![0, 2, 3], Some(1)),
            ],
        ),
        (
            dec(&[&[0, 1, 2, 3], &[3, 4]], &[2]),
            dec(&[&[0, 1, 3, 4], &[2, 3]], &[]),
            [
                (vec![3, 4], None),
                (vec![0, 1, 2, 3], Some(1)),
                (vec![2, 3], None),
                (vec![0, 1, 3, 4], None),
            ],
        ),
        (
            dec(&[&[0, 1, 2, 3, 5], &[0, 3, 4]], &[2]),
            dec(&[&[0, 1, 3, 4, 5], &[0, 2, 3]], &[5]),
            [
                (vec![0, 3, 4], None),
                (vec![0, 1, 2, 3, 5], Some(1)),
                (vec![0, 2, 3], None),
                (vec![0, 1, 3, 4, 5], Some(3)),
            ],
        ),
    ];
    let mut checked = 0;
    for (src, tgt, quad) in cases {
        let g = src.tableau().unwrap();
        let gt = tgt.tableau().unwrap();
        let Ok(Some(mv)) = is_increasing_box_move(&g, &gt) else {
            return PropCheck::fail(
                suite,
                "named-instances",
                checked,
                "move not detected".into(),
            );
        };
        let ctx = match boxmove::build_context(&g, &gt, &mv) {
            Ok(ctx) => ctx,
            Err(e) => {
                return PropCheck::fail(suite, "named-instances", checked, e.to_string());
            }
        };
        let got = [
            (ctx.r.base.heights().to_vec(), ctx.r.vee),
            (ctx.r_prime.base.heights().to_vec(), ctx.r_prime.vee),
            (ctx.rt.base.heights().to_vec(), ctx.rt.vee),
            (ctx.rt_prime.base.heights().to_vec(), ctx.rt_prime.vee),
        ];
        if got != quad {
            return PropCheck::fail(
                suite,
                "named-instances",
                checked,
                format!("quadruple {got:?}, expected {quad:?}"),
            );
        }
        for &p in primes {
            if let Err(e) = check_family(&g, &gt, &ctx, p) {
                return PropCheck::fail(suite, "named-instances", checked, e);
            }
        }
        checked += 1;
    }
    PropCheck::pass(suite, "named-instances", checked)
}

/// The reproduction of the five-component family: five tableaux whose
/// boundary poset is the pictured diamond with a tail.
pub fn verify_intro_family(p: u32, certify: bool) -> SuiteReport {
    let suite = "intro-family";
    let alpha = Partition::new(vec![3, 2]).unwrap();
    let beta = Partition::new(vec![5, 4, 3, 2, 1]).unwrap();
    let gamma = Partition::new(vec![4, 3, 2, 1]).unwrap();
    let mut props = Vec::new();
    let tabs = crate::tableau::enumerate_lr(&alpha, &beta, &gamma).unwrap();
    props.push(if tabs.len() == 5 {
        PropCheck::pass(suite, "five-tableaux", 1)
    } else {
        PropCheck::fail(
            suite,
            "five-tableaux",
            1,
            format!("{} tableaux", tabs.len()),
        )
    });
    match poset::build_boundary_poset(&alpha, &beta, &gamma, certify, p) {
        Ok(poset) => {
            let hasse = poset.hasse_edges();
            // diamond: unique bottom with one successor, two middle nodes,
            // unique top with two predecessors
            let ok = poset.nodes.len() == 5 && hasse.len() == 5 && {
                let out_deg = |i: usize| hasse.iter().filter(|e| e.0 == i).count();
                let in_deg = |i: usize| hasse.iter().filter(|e| e.1 == i).count();
                let degs: Vec<(usize, usize)> = (0..5).map(|i| (in_deg(i), out_deg(i))).collect();
                let mut sorted = degs.clone();
                sorted.sort_unstable();
                sorted == vec![(0, 1), (1, 1), (1, 1), (1, 2), (2, 0)]
            };
            props.push(if ok {
                PropCheck::pass(suite, "hasse-diagram", 1)
            } else {
                PropCheck::fail(suite, "hasse-diagram", 1, format!("{hasse:?}"))
            });
            if certify {
                let all = poset.box_edges().all(|e| e.certified);
                props.push(if all {
                    PropCheck::pass(suite, "certificates", poset.box_edges().count())
                } else {
                    PropCheck::fail(suite, "certificates", 0, "uncertified edge".into())
                });
            }
        }
        Err(e) => props.push(PropCheck::fail(suite, "hasse-diagram", 0, e.to_string())),
    }
    SuiteReport {
        suite: suite.into(),
        properties: props,
    }
}

/// Runs every suite at its standard scale.
pub fn verify_all(p: u32) -> Vec<SuiteReport> {
    vec![
        verify_intro_family(p, true),
        verify_pole_roundtrip(8, p),
        verify_endo_count(8, 2),
        verify_classification(8),
        verify_equivalence(7, 6),
        verify_rook_strip(12, 8),
        verify_box_family(12, &[p]),
    ]
}

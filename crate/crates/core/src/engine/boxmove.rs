//! Simultaneous pole decompositions for box moves, the pullback embedding,
//! and the one-parameter family connecting the two tableaux.
//!
//! For an increasing box move the two tableaux decompose as `S + R + R'` and
//! `S + Rt + Rt'` with a common summand `S`. The four (possibly extended)
//! poles are pinned so that the ambient of `R` and `Rt'` contains the tall
//! column length `n` and the ambient of `R'` and `Rt` the short one `n'`.
//! The family `Q(mu)` lives on the ambient of `R + R'` and degenerates from
//! the source tableau (`mu` nonzero) to the target tableau (`mu = 0`).

use crate::engine::{EmbeddingInstance, EngineError, ModuleSpace};
use crate::partition::Partition;
use crate::pmap::{self, PoleDecomposition};
use crate::pole::{CyclicType, HeightSequence, PoleData};
use crate::poset::BoxMove;
use crate::tableau::LRTableau;

/// A pole, possibly extended at one non-gap index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtPole {
    pub base: HeightSequence,
    /// Index of the inserted non-gap, when extended.
    pub vee: Option<usize>,
}

impl ExtPole {
    fn plain(base: HeightSequence) -> Self {
        ExtPole { base, vee: None }
    }

    pub fn data(&self) -> PoleData {
        match self.vee {
            Some(u) => self
                .base
                .pole_data_extended(u)
                .expect("vee index is a non-gap"),
            None => self.base.pole_data().expect("pole is non-empty"),
        }
    }

    /// The size of the extra empty block, when extended.
    pub fn extension_part(&self) -> Option<usize> {
        self.vee.map(|u| self.base.heights()[u] + 1)
    }

    pub fn cyclic_type(&self) -> CyclicType {
        let padding = match self.extension_part() {
            Some(part) => Partition::from_multiset([part]),
            None => Partition::empty(),
        };
        CyclicType {
            pole: self.base.clone(),
            padding,
        }
    }

    pub fn ambient(&self) -> Partition {
        self.data().ambient()
    }
}

/// Everything needed to realize both sides of a box move: the move data, the
/// common summand, and the four pole summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxMoveContext {
    pub n: usize,
    pub n_small: usize,
    pub e: usize,
    pub f: usize,
    pub e_big: usize,
    pub f_big: usize,
    pub common: PoleDecomposition,
    pub r: ExtPole,
    pub r_prime: ExtPole,
    pub rt: ExtPole,
    pub rt_prime: ExtPole,
}

impl BoxMoveContext {
    /// The four cyclic summands `R`, `R'`, `Rt`, `Rt'`.
    pub fn summands(&self) -> [CyclicType; 4] {
        [
            self.r.cyclic_type(),
            self.r_prime.cyclic_type(),
            self.rt.cyclic_type(),
            self.rt_prime.cyclic_type(),
        ]
    }
}

fn hs_multiset_sub(a: &[HeightSequence], b: &[HeightSequence]) -> Vec<HeightSequence> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for x in a {
        match rest.iter().position(|y| y == x) {
            Some(i) => {
                rest.remove(i);
            }
            None => out.push(x.clone()),
        }
    }
    out
}

/// Does the pole carry the entries `e..=f` in the bottom rows of a column of
/// height `n`, i.e. heights `n-f+x-1` for `x` in `e..=f`?
fn has_column_run(h: &HeightSequence, e: usize, f: usize, n: usize) -> bool {
    h.len() >= f && (e..=f).all(|x| h.heights()[x - 1] == n - f + x - 1)
}

/// The two height sequences agree away from the run and differ by the column
/// height change on it.
fn shifted_on_run(
    m: &HeightSequence,
    mt: &HeightSequence,
    e: usize,
    f: usize,
    diff: usize,
) -> bool {
    if m.len() != mt.len() {
        return false;
    }
    (0..m.len()).all(|i| {
        if (e - 1..f).contains(&i) {
            m.heights()[i] == mt.heights()[i] + diff
        } else {
            m.heights()[i] == mt.heights()[i]
        }
    })
}

/// Extends the pole at the given non-gap when the condition holds.
fn extend_if(h: &HeightSequence, index_opt: Option<usize>) -> ExtPole {
    match index_opt {
        Some(u) => ExtPole {
            base: h.clone(),
            vee: Some(u),
        },
        None => ExtPole::plain(h.clone()),
    }
}

/// Builds the four summands and checks the empty-part bookkeeping against the
/// two decompositions; `None` when this pair does not fit.
fn try_assemble(
    mv: &BoxMove,
    d: &PoleDecomposition,
    dt: &PoleDecomposition,
    p_seq: &HeightSequence,
    pp_seq: &HeightSequence,
    pt_seq: &HeightSequence,
    ptp_seq: &HeightSequence,
) -> Option<BoxMoveContext> {
    let (n, ns, e, f, eb, fb) = (mv.n, mv.n_small, mv.e, mv.f, mv.e_big, mv.f_big);
    let diff = n - ns;
    if !has_column_run(p_seq, e, f, n)
        || !has_column_run(pp_seq, eb, fb, ns)
        || !has_column_run(pt_seq, e, f, ns)
        || !has_column_run(ptp_seq, eb, fb, n)
    {
        return None;
    }
    if !shifted_on_run(p_seq, pt_seq, e, f, diff) || !shifted_on_run(ptp_seq, pp_seq, eb, fb, diff)
    {
        return None;
    }
    let m = p_seq.heights();
    let mp = pp_seq.heights();
    let mt = pt_seq.heights();
    let mtp = ptp_seq.heights();

    // R gains the empty block n when the run continues right after it
    let r = extend_if(p_seq, (f < m.len() && m[f] == n).then_some(f - 1));
    // R' gains m'_{e'-2} + 1 when its run starts without a gap below
    let rp = extend_if(
        pp_seq,
        (eb >= 2 && mp[eb - 1] == mp[eb - 2] + 1).then(|| eb - 2),
    );
    let rt = extend_if(
        pt_seq,
        (e >= 2 && mt[e - 1] == mt[e - 2] + 1).then(|| e - 2),
    );
    let rtp = extend_if(ptp_seq, (fb < mtp.len() && mtp[fb] == n).then_some(fb - 1));

    // the common summand: remaining poles plus leftover empty parts, which
    // must agree between the two sides after the extensions eat their blocks
    let side_poles = |dec: &PoleDecomposition, drop: [&HeightSequence; 2]| {
        hs_multiset_sub(&dec.poles, &[drop[0].clone(), drop[1].clone()])
    };
    let s_poles = side_poles(d, [p_seq, pp_seq]);
    let st_poles = side_poles(dt, [pt_seq, ptp_seq]);
    if s_poles != st_poles {
        return None;
    }
    let eat = |empty: &Partition, exts: [&ExtPole; 2]| -> Option<Partition> {
        let mut used = Vec::new();
        for ext in exts {
            if let Some(part) = ext.extension_part() {
                used.push(part);
            }
        }
        empty.try_remove(&Partition::from_multiset(used))
    };
    let s_empty = eat(&d.empty_parts, [&r, &rp])?;
    let st_empty = eat(&dt.empty_parts, [&rt, &rtp])?;
    if s_empty != st_empty {
        return None;
    }
    Some(BoxMoveContext {
        n,
        n_small: ns,
        e,
        f,
        e_big: eb,
        f_big: fb,
        common: PoleDecomposition::new(s_poles, s_empty),
        r,
        r_prime: rp,
        rt,
        rt_prime: rtp,
    })
}

/// Finds a simultaneous pole decomposition for a detected box move: a pair
/// of decompositions of the two tableaux that differ in exactly two poles
/// matching the exchanged columns. Deterministic: first fit over the
/// equivalence classes of maps with the empty box property.
pub fn build_context(
    g: &LRTableau,
    gt: &LRTableau,
    mv: &BoxMove,
) -> Result<BoxMoveContext, EngineError> {
    let class_decs = |t: &LRTableau| -> Vec<PoleDecomposition> {
        let maps = pmap::enumerate_partial_maps(t);
        let classes = pmap::equivalence_classes(&maps);
        classes
            .iter()
            .filter_map(|members| {
                let rep = &maps[members[0]];
                rep.satisfies_ebp().then(|| rep.decomposition().unwrap())
            })
            .collect()
    };
    let decs_g = class_decs(g);
    let decs_t = class_decs(gt);
    for d in &decs_g {
        for dt in &decs_t {
            let removed = hs_multiset_sub(&d.poles, &dt.poles);
            let added = hs_multiset_sub(&dt.poles, &d.poles);
            if removed.len() != 2 || added.len() != 2 {
                continue;
            }
            for (pi, ppi) in [(0, 1), (1, 0)] {
                for (ti, tpi) in [(0, 1), (1, 0)] {
                    if let Some(ctx) = try_assemble(
                        mv,
                        d,
                        dt,
                        &removed[pi],
                        &removed[ppi],
                        &added[ti],
                        &added[tpi],
                    ) {
                        return Ok(ctx);
                    }
                }
            }
        }
    }
    Err(EngineError::InvalidContext(
        "no simultaneous pole decomposition matches the box move".into(),
    ))
}

/// Merged ambient of two block lists, with the block index maps.
fn merge_spaces(
    b: &ModuleSpace,
    d: &ModuleSpace,
) -> Result<(ModuleSpace, Vec<usize>, Vec<usize>), EngineError> {
    let mut blocks: Vec<(usize, usize, usize)> = Vec::new();
    for (i, &s) in b.beta().parts().iter().enumerate() {
        blocks.push((s, 0, i));
    }
    for (i, &s) in d.beta().parts().iter().enumerate() {
        blocks.push((s, 1, i));
    }
    blocks.sort_by(|x, y| (y.0, x.1, x.2).cmp(&(x.0, y.1, y.2)));
    let beta = Partition::from_multiset(blocks.iter().map(|b| b.0));
    let space = ModuleSpace::new(b.prime(), beta)?;
    let mut map_b = vec![0; b.beta().len()];
    let mut map_d = vec![0; d.beta().len()];
    for (new, &(_, side, idx)) in blocks.iter().enumerate() {
        if side == 0 {
            map_b[idx] = new;
        } else {
            map_d[idx] = new;
        }
    }
    Ok((space, map_b, map_d))
}

/// Generator vector of a pole datum inside a merged space.
fn generator_in(
    space: &ModuleSpace,
    map: &[usize],
    own: &ModuleSpace,
    data: &PoleData,
) -> Vec<u32> {
    let mut v = space.zero_vector();
    let mut used = vec![false; own.beta().len()];
    for (&part, &shift) in data.parts.iter().zip(data.shifts.iter()) {
        let block = (0..own.beta().len())
            .find(|&b| !used[b] && own.beta().part(b) == part)
            .expect("ambient contains every listed part");
        used[block] = true;
        v[space.index(map[block], shift)] = 1;
    }
    v
}

struct QParts {
    space: ModuleSpace,
    a_vec: Vec<u32>,
    c_vec: Vec<u32>,
    /// flat index of `T^j b_n` for the unique block of size n on the R side
    bn: Vec<usize>,
    /// flat index of `T^j d_{n'}` on the R' side
    dn: Vec<usize>,
}

fn q_parts(ctx: &BoxMoveContext, p: u32) -> Result<QParts, EngineError> {
    let rd = ctx.r.data();
    let rpd = ctx.r_prime.data();
    let b_space = ModuleSpace::new(p, rd.ambient())?;
    let d_space = ModuleSpace::new(p, rpd.ambient())?;
    let (space, map_b, map_d) = merge_spaces(&b_space, &d_space)?;
    let a_vec = generator_in(&space, &map_b, &b_space, &rd);
    let c_vec = generator_in(&space, &map_d, &d_space, &rpd);
    let find_unique = |own: &ModuleSpace, size: usize| -> Result<usize, EngineError> {
        let hits: Vec<usize> = (0..own.beta().len())
            .filter(|&b| own.beta().part(b) == size)
            .collect();
        if hits.len() != 1 {
            return Err(EngineError::InvalidContext(format!(
                "ambient {} must contain the part {size} exactly once",
                own.beta()
            )));
        }
        Ok(hits[0])
    };
    let ub = find_unique(&b_space, ctx.n)?;
    let vd = find_unique(&d_space, ctx.n_small)?;
    let bn = (0..ctx.n).map(|j| space.index(map_b[ub], j)).collect();
    let dn = (0..ctx.n_small)
        .map(|j| space.index(map_d[vd], j))
        .collect();
    Ok(QParts {
        space,
        a_vec,
        c_vec,
        bn,
        dn,
    })
}

/// The pullback embedding `Q = ((r, s) c B + D)` with `r = (a, T^{n'-f} d)`
/// and `s = (0, c)`; it has the same tableau as `R + R'`.
pub fn build_q(ctx: &BoxMoveContext, p: u32) -> Result<EmbeddingInstance, EngineError> {
    let parts = q_parts(ctx, p)?;
    let mut r_vec = parts.a_vec.clone();
    r_vec[parts.dn[ctx.n_small - ctx.f]] = 1;
    let s_vec = parts.c_vec.clone();
    EmbeddingInstance::new(parts.space, vec![r_vec, s_vec])
}

/// The one-parameter family `Q(mu) = ((x, y) c B + D)` with
/// `x = (a - T^{l_u} b_n, T^{n'-f} d)` and
/// `y = (T^{k_v + n - n'} b_n, c + (mu - 1) T^{k_v} d)`.
pub fn build_q_mu(ctx: &BoxMoveContext, mu: u32, p: u32) -> Result<EmbeddingInstance, EngineError> {
    if mu >= p {
        return Err(EngineError::BadVector(format!("mu = {mu} is not in F_{p}")));
    }
    let parts = q_parts(ctx, p)?;
    let ell_u = ctx.n - ctx.f;
    let k_v = ctx.n_small - ctx.f_big;

    let mut x_vec = parts.a_vec.clone();
    debug_assert_eq!(x_vec[parts.bn[ell_u]], 1, "generator carries T^(n-f) b_n");
    x_vec[parts.bn[ell_u]] = 0;
    x_vec[parts.dn[ctx.n_small - ctx.f]] = 1;

    let mut y_vec = parts.c_vec.clone();
    y_vec[parts.bn[k_v + ctx.n - ctx.n_small]] = 1;
    debug_assert_eq!(y_vec[parts.dn[k_v]], 1, "generator carries T^(n'-f') d");
    y_vec[parts.dn[k_v]] = mu;

    EmbeddingInstance::new(parts.space, vec![x_vec, y_vec])
}

/// Realizes the common summand `S` as one embedding.
pub fn realize_s(ctx: &BoxMoveContext, p: u32) -> Result<EmbeddingInstance, EngineError> {
    let mut acc = EmbeddingInstance::empty(p, ctx.common.empty_parts.clone())?;
    for pole in &ctx.common.poles {
        let inst = crate::engine::realize_pole(&CyclicType::pole_only(pole.clone()), p)?;
        acc = crate::engine::direct_sum(&acc, &inst)?;
    }
    Ok(acc)
}

/// Realizes `R + R'` (or `Rt + Rt'` with `tilde` set) as one embedding.
pub fn realize_pair(
    ctx: &BoxMoveContext,
    tilde: bool,
    p: u32,
) -> Result<EmbeddingInstance, EngineError> {
    let (x, y) = if tilde {
        (&ctx.rt, &ctx.rt_prime)
    } else {
        (&ctx.r, &ctx.r_prime)
    };
    let a = crate::engine::realize_pole_data(&x.data(), &Partition::empty(), p)?;
    let b = crate::engine::realize_pole_data(&y.data(), &Partition::empty(), p)?;
    crate::engine::direct_sum(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{direct_sum, tableau_of_embedding};
    use crate::poset::is_increasing_box_move;
    use crate::tableau::enumerate_lr;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn hs(v: &[usize]) -> HeightSequence {
        HeightSequence::new(v.to_vec()).unwrap()
    }

    fn by_grid(nodes: &[LRTableau], grid: &[Vec<usize>]) -> LRTableau {
        nodes
            .iter()
            .find(|t| t.grid() == grid)
            .expect("grid present")
            .clone()
    }

    /// The move between the second and third tableau of the intro family.
    fn intro_context() -> (LRTableau, LRTableau, BoxMoveContext) {
        let nodes = enumerate_lr(&p(&[3, 2]), &p(&[5, 4, 3, 2, 1]), &p(&[4, 3, 2, 1])).unwrap();
        let g2 = by_grid(
            &nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 2],
                vec![0, 0, 1],
                vec![0, 3],
                vec![2],
            ],
        );
        let g3a = by_grid(
            &nodes,
            &[
                vec![0, 0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, 2],
                vec![0, 3],
                vec![2],
            ],
        );
        let mv = is_increasing_box_move(&g2, &g3a).unwrap().unwrap();
        let ctx = build_context(&g2, &g3a, &mv).unwrap();
        (g2, g3a, ctx)
    }

    #[test]
    fn intro_move_pole_quadruple() {
        let (_, _, ctx) = intro_context();
        assert_eq!(
            ctx.r,
            ExtPole {
                base: hs(&[2, 4]),
                vee: None
            }
        );
        assert_eq!(
            ctx.r_prime,
            ExtPole {
                base: hs(&[0, 1, 3]),
                vee: Some(0)
            }
        );
        assert_eq!(
            ctx.rt,
            ExtPole {
                base: hs(&[1, 4]),
                vee: None
            }
        );
        assert_eq!(
            ctx.rt_prime,
            ExtPole {
                base: hs(&[0, 2, 3]),
                vee: Some(1)
            }
        );
        assert_eq!(
            ctx.common,
            PoleDecomposition::new(vec![], Partition::empty())
        );
        // extended ambient spaces
        assert_eq!(ctx.r.ambient(), p(&[5, 3]));
        assert_eq!(ctx.r_prime.ambient(), p(&[4, 2, 1]));
        assert_eq!(ctx.rt.ambient(), p(&[5, 2]));
        assert_eq!(ctx.rt_prime.ambient(), p(&[4, 3, 1]));
    }

    #[test]
    fn intro_move_sides_reproduce_tableaux() {
        let (g2, g3a, ctx) = intro_context();
        let side = tableau_of_embedding(&realize_pair(&ctx, false, 5).unwrap());
        assert_eq!(side, g2);
        let side_t = tableau_of_embedding(&realize_pair(&ctx, true, 5).unwrap());
        assert_eq!(side_t, g3a);

        // the same equalities combinatorially, through the cyclic summands
        let [r, rp, rt, rtp] = ctx.summands();
        let s_tab = ctx.common.tableau().unwrap();
        let comb = |a: &CyclicType, b: &CyclicType| {
            s_tab
                .union_all(&[
                    crate::pole::tableau_of_cyclic(a),
                    crate::pole::tableau_of_cyclic(b),
                ])
                .unwrap()
        };
        assert_eq!(comb(&r, &rp), g2);
        assert_eq!(comb(&rt, &rtp), g3a);
    }

    #[test]
    fn running_example_context() {
        // swap C(1,2)_5, C(3,4)_4 for C(3,4)_5, C(1,2)_4
        let g = PoleDecomposition::new(vec![hs(&[0, 1, 2, 3]), hs(&[3, 4])], p(&[2]))
            .tableau()
            .unwrap();
        let gt = PoleDecomposition::new(vec![hs(&[0, 1, 3, 4]), hs(&[2, 3])], Partition::empty())
            .tableau()
            .unwrap();
        let mv = is_increasing_box_move(&g, &gt).unwrap().unwrap();
        let ctx = build_context(&g, &gt, &mv).unwrap();
        assert_eq!(
            ctx.r,
            ExtPole {
                base: hs(&[3, 4]),
                vee: None
            }
        );
        assert_eq!(
            ctx.r_prime,
            ExtPole {
                base: hs(&[0, 1, 2, 3]),
                vee: Some(1)
            }
        );
        assert_eq!(
            ctx.rt,
            ExtPole {
                base: hs(&[2, 3]),
                vee: None
            }
        );
        assert_eq!(
            ctx.rt_prime,
            ExtPole {
                base: hs(&[0, 1, 3, 4]),
                vee: None
            }
        );
        assert_eq!(
            ctx.common,
            PoleDecomposition::new(vec![], Partition::empty())
        );
    }

    #[test]
    fn taller_example_context() {
        // swap C(2,3)_5, C(3,4)_4 for C(3,4)_5, C(2,3)_4
        let g = PoleDecomposition::new(vec![hs(&[0, 1, 2, 3, 5]), hs(&[0, 3, 4])], p(&[2]))
            .tableau()
            .unwrap();
        let gt = PoleDecomposition::new(vec![hs(&[0, 1, 3, 4, 5]), hs(&[0, 2, 3])], p(&[5]))
            .tableau()
            .unwrap();
        let mv = is_increasing_box_move(&g, &gt).unwrap().unwrap();
        assert_eq!(
            (mv.n, mv.n_small, mv.e, mv.f, mv.e_big, mv.f_big),
            (5, 4, 2, 3, 3, 4)
        );
        let ctx = build_context(&g, &gt, &mv).unwrap();
        assert_eq!(
            ctx.r,
            ExtPole {
                base: hs(&[0, 3, 4]),
                vee: None
            }
        );
        assert_eq!(
            ctx.r_prime,
            ExtPole {
                base: hs(&[0, 1, 2, 3, 5]),
                vee: Some(1)
            }
        );
        assert_eq!(
            ctx.rt,
            ExtPole {
                base: hs(&[0, 2, 3]),
                vee: None
            }
        );
        assert_eq!(
            ctx.rt_prime,
            ExtPole {
                base: hs(&[0, 1, 3, 4, 5]),
                vee: Some(3)
            }
        );
    }

    #[test]
    fn q_has_tableau_of_r_plus_r_prime() {
        let (_, _, ctx) = intro_context();
        let q = build_q(&ctx, 5).unwrap();
        let rr = realize_pair(&ctx, false, 5).unwrap();
        assert_eq!(tableau_of_embedding(&q), tableau_of_embedding(&rr));
    }

    #[test]
    fn family_generators_match_hand_computation() {
        let (_, _, ctx) = intro_context();
        // B = N_(5,3), D = N_(4,2,1); merged blocks (5,4,3,2,1):
        // b5 -> block 0, d4 -> block 1, b3 -> block 2, d2 -> block 3, d1 -> 4
        let q1 = build_q_mu(&ctx, 1, 5).unwrap();
        let space = q1.space();
        assert_eq!(space.beta(), &p(&[5, 4, 3, 2, 1]));
        let mut x = space.zero_vector();
        x[space.index(0, 3)] = 1; // T^3 b_5
        x[space.index(3, 1)] = 1; // T d_2
        let y = |mu: u32| {
            let mut v = space.zero_vector();
            v[space.index(2, 1)] = 1; // T b_3
            v[space.index(3, 0)] = mu; // mu d_2
            v[space.index(1, 1)] = 1; // T d_4
            v[space.index(4, 0)] = 1; // d_1
            v
        };
        assert_eq!(q1.generators(), &[x.clone(), y(1)]);
        let q3 = build_q_mu(&ctx, 3, 5).unwrap();
        assert_eq!(q3.generators(), &[x, y(3)]);
    }

    #[test]
    fn family_interpolates_between_the_tableaux() {
        let (g2, g3a, ctx) = intro_context();
        let s = realize_s(&ctx, 5).unwrap();
        for mu in 0..5 {
            let q_mu = build_q_mu(&ctx, mu, 5).unwrap();
            let total = direct_sum(&s, &q_mu).unwrap();
            let got = tableau_of_embedding(&total);
            if mu == 0 {
                assert_eq!(got, g3a);
            } else {
                assert_eq!(got, g2);
            }
        }
        // at zero the family is the other pole pair
        let q0 = build_q_mu(&ctx, 0, 5).unwrap();
        let rt = realize_pair(&ctx, true, 5).unwrap();
        assert_eq!(tableau_of_embedding(&q0), tableau_of_embedding(&rt));
        // at one it agrees with the pullback
        let q1 = build_q_mu(&ctx, 1, 5).unwrap();
        let q = build_q(&ctx, 5).unwrap();
        assert_eq!(tableau_of_embedding(&q1), tableau_of_embedding(&q));
        // parameters outside the field are rejected
        assert!(build_q_mu(&ctx, 5, 5).is_err());
    }

    #[test]
    fn mismatched_move_data_is_rejected() {
        let (g2, g3a, ctx) = intro_context();
        let _ = ctx;
        // a fabricated move whose columns do not occur in any simultaneous
        // decomposition of the pair
        let bogus = BoxMove {
            n: 5,
            n_small: 2,
            e: 1,
            f: 1,
            e_big: 3,
            f_big: 3,
            source_cols: [
                crate::tableau::ColumnTableau::new(1, 1, 5).unwrap(),
                crate::tableau::ColumnTableau::new(3, 3, 2).unwrap(),
            ],
            target_cols: [
                crate::tableau::ColumnTableau::new(3, 3, 5).unwrap(),
                crate::tableau::ColumnTableau::new(1, 1, 2).unwrap(),
            ],
            common: Vec::new(),
        };
        assert!(matches!(
            build_context(&g2, &g3a, &bogus),
            Err(EngineError::InvalidContext(_))
        ));
    }
}

//! Closed forms: uniform matroids, glued cycles, split matroids and corank 2.

use std::collections::BTreeSet;

use crate::engine::{orbits_of, Engine, EquivariantMatroid};
use crate::error::{Error, Result};
use crate::group::{MultiPartition, YoungGroup};
use crate::lr;
use crate::matroid::Matroid;
use crate::partition::Partition;
use crate::rep::{GradedVirtualRep, VirtualRep};
use crate::Label;

fn labels(a: Label, b: Label) -> Vec<Label> {
    (a..=b).collect()
}

fn irreducible(group: &YoungGroup, parts: Vec<usize>) -> Result<VirtualRep> {
    let p = Partition::new(parts).map_err(|e| Error::Internal(e.to_string()))?;
    VirtualRep::irreducible(group.clone(), MultiPartition(vec![p]))
}

/// `P` of `U_{k,|S|}` under the full symmetric group on `ground`.
pub fn uniform_kl_on(k: usize, ground: &[Label]) -> Result<GradedVirtualRep> {
    let n = ground.len();
    if k < 1 || k > n {
        return Err(Error::Invalid(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let w = YoungGroup::symmetric(ground);
    let mut p = GradedVirtualRep::constant(irreducible(&w, vec![n])?);
    for j in 1..k.div_ceil(2) {
        let mut c = VirtualRep::zero(w.clone());
        for b in 1..=(n - k).min(k - 2 * j) {
            let mut parts = vec![n - 2 * j - b + 1, b + 1];
            parts.extend(std::iter::repeat_n(2, j - 1));
            c = c.add(&irreducible(&w, parts)?)?;
        }
        p = p.add(&GradedVirtualRep::monomial(c, j))?;
    }
    Ok(p)
}

/// `P` of `U_{k,n}` under `S_n` acting on `{1..n}`.
pub fn uniform_kl_sn(k: usize, n: usize) -> Result<GradedVirtualRep> {
    uniform_kl_on(k, &labels(1, n as Label))
}

/// `Σ_j V_[m-2j,2^j] x^j` on `ground` of size `m`. A single element is a
/// loop, which gets the zero polynomial.
pub fn corank1_kl_on(ground: &[Label]) -> Result<GradedVirtualRep> {
    let m = ground.len();
    if m == 0 {
        return Err(Error::Invalid("corank 1 needs a nonempty ground set".into()));
    }
    let w = YoungGroup::symmetric(ground);
    let mut p = GradedVirtualRep::zero(w.clone());
    let mut j = 0;
    while m >= 2 + 2 * j {
        let mut parts = vec![m - 2 * j];
        parts.extend(std::iter::repeat_n(2, j));
        p = p.add(&GradedVirtualRep::monomial(irreducible(&w, parts)?, j))?;
        j += 1;
    }
    Ok(p)
}

/// `P` of `U_{n-1,n}` under `S_n` acting on `{1..n}`.
pub fn corank1_kl_sn(n: usize) -> Result<GradedVirtualRep> {
    corank1_kl_on(&labels(1, n as Label))
}

/// Restriction of `V_[N-2i,2^i]` to the two blocks of `group`, via the fat hook rule.
fn restrict_fat_hook(n: usize, i: usize, group: &YoungGroup) -> Result<VirtualRep> {
    let sizes = group.block_sizes();
    if sizes.len() != 2 || sizes[0] + sizes[1] != n {
        return Err(Error::Internal(format!("fat hook restriction to {group}")));
    }
    let mut lambda = vec![n - 2 * i];
    lambda.extend(std::iter::repeat_n(2, i));
    let lambda = Partition::normalized(lambda);
    let mut out = VirtualRep::zero(group.clone());
    for mu in Partition::all_within(sizes[0], Some(&lambda)) {
        for nu in lr::fat_hook_pairs(n, i, &mu)? {
            out = out.add(&VirtualRep::irreducible(group.clone(), MultiPartition(vec![mu.clone(), nu]))?)?;
        }
    }
    Ok(out)
}

/// `P` of the glued cycles `C_{A,B}` under `S_{A∖e} × {e} × S_{B∖e}`.
pub fn glued_cycles_kl_on(a: &[Label], b: &[Label], e: Label) -> Result<GradedVirtualRep> {
    // Validates the shape.
    Matroid::glued_cycles(a, b, e)?;
    let a_rest: Vec<Label> = a.iter().copied().filter(|&x| x != e).collect();
    let b_rest: Vec<Label> = b.iter().copied().filter(|&x| x != e).collect();
    let mut all = a_rest.clone();
    all.extend(&b_rest);
    let pair = YoungGroup::new(vec![a_rest.clone(), b_rest.clone()])?;
    // The two-block group orders its blocks by minimum label.
    let swapped = pair.blocks()[0] != {
        let mut s = a_rest.clone();
        s.sort_unstable();
        s
    };
    let n = all.len();
    let mut p = GradedVirtualRep::zero(pair.clone());
    let mut j = 0;
    while n >= 2 + 2 * j {
        let res = if swapped {
            let flipped = YoungGroup::new(vec![b_rest.clone(), a_rest.clone()])?;
            restrict_fat_hook(n, j, &flipped)?
        } else {
            restrict_fat_hook(n, j, &pair)?
        };
        p = p.add(&GradedVirtualRep::monomial(res, j))?;
        j += 1;
    }
    let product = corank1_kl_on(&a_rest)?.outer_tensor(&corank1_kl_on(&b_rest)?)?;
    let p = p.sub(&product.shift(1))?;
    p.tensor_rep(&VirtualRep::trivial(YoungGroup::trivial(&[e])))
}

/// `P` of `C_{a,b}` with `A = {1..a}`, `e = a`, `B = {a..a+b-1}`, under
/// `S_{a-1} × S_{b-1}` (the singleton block of `e` is dropped).
pub fn glued_cycles_kl(a: usize, b: usize) -> Result<GradedVirtualRep> {
    if a < 2 || b < 2 {
        return Err(Error::Invalid("glued cycles need a, b >= 2".into()));
    }
    let (a, b) = (a as Label, b as Label);
    let full = glued_cycles_kl_on(&labels(1, a), &labels(a, a + b - 1), a)?;
    let mut blocks: Vec<Vec<Label>> = full.group().blocks().to_vec();
    let pos = blocks.iter().position(|blk| blk == &[a]).expect("singleton block of e");
    blocks.remove(pos);
    let group = YoungGroup::new(blocks)?;
    let src: Vec<usize> = (0..group.num_blocks()).map(|j| if j < pos { j } else { j + 1 }).collect();
    Ok(full.rearranged(&group, &src))
}

/// Stressed flats `G ≠ E` with `|G| > rk G`, as masks with ranks.
fn dependent_stressed(m: &Matroid) -> Vec<(u64, usize)> {
    let full = m.full();
    m.flat_masks()
        .into_iter()
        .filter(|&(f, r)| f != full && f.count_ones() as usize > r && m.is_stressed_mask(f))
        .collect()
}

fn set_of(m: &Matroid, mask: u64) -> (BTreeSet<Label>, Vec<Label>) {
    let v = m.labels(mask);
    (v.iter().copied().collect(), v)
}

/// The valuative formula for elementary split matroids, with `P_Λ` from the
/// engine and `P_Π` from the uniform closed form.
pub fn split_kl(em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
    split_kl_with(Engine::global(), em)
}

pub fn split_kl_with(engine: &Engine, em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
    let m = em.matroid();
    if !m.is_loopless() {
        return Err(Error::Loops(m.loops()));
    }
    if !m.is_elementary_split() {
        return Err(Error::Precondition("matroid is not elementary split".into()));
    }
    let w = em.group();
    let k = m.rank();
    if k == 0 {
        return Ok(GradedVirtualRep::constant(VirtualRep::trivial(w.clone())));
    }
    let ground = m.ground().to_vec();
    let mut p = uniform_kl_on(k, &ground)?.restrict(w)?;
    for (g, rg, _, _) in orbits_of(m, w, dependent_stressed(m)) {
        let (g_set, g_vec) = set_of(m, g);
        let (_, f_vec) = set_of(m, m.full() & !g);
        let wg = w.stabilizer(&g_set);
        let lam = EquivariantMatroid::new(Matroid::lambda(rg, k, &g_vec, &ground)?, wg.clone())?;
        let p_lam = engine.kl(&lam)?;
        let p_pi = uniform_kl_on(rg, &g_vec)?.outer_tensor(&uniform_kl_on(k - rg, &f_vec)?)?.restrict(&wg)?;
        p = p.sub(&p_lam.sub(&p_pi)?.induce(w)?)?;
    }
    Ok(p)
}

/// The corank 2 specialization: `Π` terms from corank 1 closed forms and
/// `Λ` terms from the subdivision into glued cycles whenever the stabilizer
/// fixes the complement of the stressed flat pointwise, otherwise from the engine.
pub fn corank2_kl(em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
    corank2_kl_with(Engine::global(), em)
}

pub fn corank2_kl_with(engine: &Engine, em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
    let m = em.matroid();
    let n = m.len();
    if !m.is_loopless() {
        return Err(Error::Loops(m.loops()));
    }
    if n < 2 || m.rank() + 2 != n {
        return Err(Error::Precondition(format!("rank {} on {n} elements is not corank 2", m.rank())));
    }
    if !m.is_connected() {
        return Err(Error::Precondition("matroid is not connected".into()));
    }
    let w = em.group();
    let k = n - 2;
    let ground = m.ground().to_vec();
    let mut p = uniform_kl_on(k, &ground)?.restrict(w)?;
    for (g, rg, _, _) in orbits_of(m, w, dependent_stressed(m)) {
        let (g_set, g_vec) = set_of(m, g);
        let (_, f_vec) = set_of(m, m.full() & !g);
        if rg + 1 != g_vec.len() {
            return Err(Error::Internal(format!("stressed flat {g_vec:?} is not corank 1")));
        }
        let wg = w.stabilizer(&g_set);
        // In Λ the complement of the flat is the corank 1 stressed set.
        let fixes_rest = wg.blocks().iter().all(|b| b.len() == 1 || b.iter().all(|x| g_set.contains(x)));
        let p_lam = if fixes_rest && f_vec.len() >= 2 {
            lambda_kl_subdivision_on(&g_vec, &f_vec, &wg)?
        } else {
            let lam = Matroid::lambda(rg, k, &g_vec, &ground)?;
            engine.kl(&EquivariantMatroid::new(lam, wg.clone())?)?
        };
        let p_pi = corank1_kl_on(&g_vec)?.outer_tensor(&corank1_kl_on(&f_vec)?)?.restrict(&wg)?;
        p = p.sub(&p_lam.sub(&p_pi)?.induce(w)?)?;
    }
    Ok(p)
}

/// `P` of the corank 2 matroid `Λ` whose stressed flat is `g` (corank 1,
/// `|g| >= 2`) and whose complement is `f`, from its subdivision into glued
/// cycles. With `g = g_1 < ... < g_m`, the maximal pieces are `C_{A,B}` with
/// `A = {g_1..g_a}`, `e = g_a`, `B = {g_a..g_m} ∪ f` for `a = 2..m`, and the
/// internal walls are `U_{a-1,{g_1..g_a}} ⊕ U_{n-a-1, rest}` for `a = 2..m-1`.
/// The group must move only elements of `f`.
pub fn lambda_kl_subdivision_on(f: &[Label], g: &[Label], w: &YoungGroup) -> Result<GradedVirtualRep> {
    let mut g: Vec<Label> = g.to_vec();
    g.sort_unstable();
    let m = g.len();
    if m < 2 || f.is_empty() {
        return Err(Error::Precondition("need |E∖F| >= 2 and F nonempty".into()));
    }
    let f_set: BTreeSet<Label> = f.iter().copied().collect();
    let mut ground: Vec<Label> = f.to_vec();
    ground.extend(&g);
    ground.sort_unstable();
    if w.ground() != ground {
        return Err(Error::GroupMismatch(format!("{w} is not on {ground:?}")));
    }
    if w.blocks().iter().any(|b| b.len() > 1 && b.iter().any(|x| !f_set.contains(x))) {
        return Err(Error::Unsupported(format!(
            "{w} moves elements outside {f:?}; only such actions preserve the subdivision"
        )));
    }
    let mut p = GradedVirtualRep::zero(w.clone());
    for a in 2..=m {
        let a_set: Vec<Label> = g[..a].to_vec();
        let mut b_set: Vec<Label> = g[a - 1..].to_vec();
        b_set.extend(f);
        let piece = glued_cycles_kl_on(&a_set, &b_set, g[a - 1])?;
        p = p.add(&piece.restrict(w)?)?;
    }
    for a in 2..m {
        let first: Vec<Label> = g[..a].to_vec();
        let mut rest: Vec<Label> = g[a..].to_vec();
        rest.extend(f);
        let wall = corank1_kl_on(&first)?.outer_tensor(&corank1_kl_on(&rest)?)?;
        p = p.sub(&wall.restrict(w)?)?;
    }
    Ok(p)
}

/// `P` of `Λ_{r,n-2,r+1,n}` with `F = {1..r+1}` under `w`, via the subdivision.
pub fn lambda_kl_subdivision(r: usize, n: usize, w: &YoungGroup) -> Result<GradedVirtualRep> {
    if r < 1 || n < r + 3 {
        return Err(Error::Precondition(format!("need 1 <= r <= n - 3, got r={r}, n={n}")));
    }
    let f = labels(1, r as Label + 1);
    let g = labels(r as Label + 2, n as Label);
    lambda_kl_subdivision_on(&f, &g, w)
}

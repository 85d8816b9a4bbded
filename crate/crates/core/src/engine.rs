//! Equivariant KL and Z-polynomials: the defining recursion, the τ-invariant,
//! the deletion formula and the coloop extension.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::YoungGroup;
use crate::matroid::{Flat, Matroid};
use crate::rep::{GradedVirtualRep, VirtualRep};
use crate::Label;

/// A matroid together with a Young group acting on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantMatroid {
    matroid: Matroid,
    group: YoungGroup,
}

impl EquivariantMatroid {
    /// Checks that the group lives on the ground set and that every adjacent
    /// transposition inside a block preserves the bases.
    pub fn new(matroid: Matroid, group: YoungGroup) -> Result<Self> {
        if group.ground() != matroid.ground() {
            return Err(Error::GroupMismatch(format!("group {group} is not on the ground set {:?}", matroid.ground())));
        }
        for block in group.blocks() {
            for w in block.windows(2) {
                if !matroid.invariant_under_swap(w[0], w[1])? {
                    return Err(Error::Invalid(format!(
                        "swapping {} and {} does not preserve the matroid",
                        w[0], w[1]
                    )));
                }
            }
        }
        Ok(EquivariantMatroid { matroid, group })
    }

    /// The matroid with the trivial group.
    pub fn trivial(matroid: Matroid) -> Self {
        let group = YoungGroup::trivial(matroid.ground());
        EquivariantMatroid { matroid, group }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn group(&self) -> &YoungGroup {
        &self.group
    }

    /// The same matroid under the stabilizer of `i`.
    pub fn stabilizer_of(&self, i: Label) -> Result<EquivariantMatroid> {
        if self.group.block_of(i).is_none() {
            return Err(Error::Invalid(format!("element {i} is not in the ground set")));
        }
        let group = self.group.stabilizer(&[i].into_iter().collect());
        Ok(EquivariantMatroid { matroid: self.matroid.clone(), group })
    }

    /// The same matroid under a subgroup given by a refinement of the blocks.
    pub fn with_subgroup(&self, group: YoungGroup) -> Result<EquivariantMatroid> {
        if !group.refines(&self.group) {
            return Err(Error::GroupMismatch(format!("{group} does not refine {}", self.group)));
        }
        Ok(EquivariantMatroid { matroid: self.matroid.clone(), group })
    }
}

/// A class of flats under the group action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatOrbit {
    pub representative: Flat,
    pub signature: Vec<usize>,
    pub stabilizer: YoungGroup,
    pub orbit_size: usize,
}

/// Groups flat masks by their block signature. Orbits come out ordered by
/// rank and then by representative.
pub(crate) fn orbits_of(
    m: &Matroid,
    g: &YoungGroup,
    flats: impl IntoIterator<Item = (u64, usize)>,
) -> Vec<(u64, usize, Vec<usize>, usize)> {
    let block_masks: Vec<u64> =
        g.blocks().iter().map(|b| Matroid::mask_in(m.ground(), b.iter()).expect("group on ground set")).collect();
    let mut classes: BTreeMap<Vec<usize>, (u64, usize, usize)> = BTreeMap::new();
    for (f, r) in flats {
        let sig: Vec<usize> = block_masks.iter().map(|b| (b & f).count_ones() as usize).collect();
        let entry = classes.entry(sig).or_insert((f, r, 0));
        entry.2 += 1;
        if m.labels(f) < m.labels(entry.0) {
            entry.0 = f;
        }
    }
    let mut out: Vec<(u64, usize, Vec<usize>, usize)> =
        classes.into_iter().map(|(sig, (f, r, n))| (f, r, sig, n)).collect();
    out.sort_by_key(|a| (a.1, m.labels(a.0)));
    out
}

/// Orbits of flats passing `filter` under the group of `em`.
pub fn flat_orbits(em: &EquivariantMatroid, filter: Option<&dyn Fn(&Flat) -> bool>) -> Vec<FlatOrbit> {
    let m = &em.matroid;
    let flats = m.flat_masks().into_iter().filter(|&(f, r)| match filter {
        Some(p) => p(&Flat { rank: r, elements: m.labels(f) }),
        None => true,
    });
    orbits_of(m, &em.group, flats)
        .into_iter()
        .map(|(f, r, signature, orbit_size)| {
            let elements = m.labels(f);
            let stabilizer = em.group.stabilizer(&elements.iter().copied().collect());
            FlatOrbit { representative: Flat { rank: r, elements }, signature, stabilizer, orbit_size }
        })
        .collect()
}

/// Cache key: block sizes in canonical order and the bases after relabelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct CacheKey {
    pub sizes: Vec<usize>,
    pub bases: Vec<u64>,
}

/// `P` and `Z` on the canonical group of a key.
#[derive(Clone, Debug)]
pub(crate) struct CacheEntry {
    pub p: GradedVirtualRep,
    pub z: GradedVirtualRep,
}

struct Canonical {
    key: CacheKey,
    matroid: Matroid,
    group: YoungGroup,
    /// Original block `j` corresponds to canonical block `src[j]`.
    src: Vec<usize>,
}

/// The group on labels `1..=n` with consecutive blocks of the given sizes.
pub(crate) fn canonical_group(sizes: &[usize]) -> YoungGroup {
    let mut next: Label = 1;
    let blocks = sizes
        .iter()
        .map(|&s| {
            let b: Vec<Label> = (next..next + s as Label).collect();
            next += s as Label;
            b
        })
        .collect();
    YoungGroup::new(blocks).expect("disjoint ranges")
}

fn canonicalize(m: &Matroid, g: &YoungGroup) -> Canonical {
    let blocks = g.blocks();
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&j| (std::cmp::Reverse(blocks[j].len()), j));
    let mut src = vec![0; blocks.len()];
    let mut new_label: HashMap<Label, Label> = HashMap::new();
    let mut next: Label = 1;
    for (c, &j) in order.iter().enumerate() {
        src[j] = c;
        for &x in &blocks[j] {
            new_label.insert(x, next);
            next += 1;
        }
    }
    let matroid = m.relabel(|x| new_label[&x]).expect("bijective relabelling");
    let sizes: Vec<usize> = order.iter().map(|&j| blocks[j].len()).collect();
    let group = canonical_group(&sizes);
    let key = CacheKey { sizes, bases: matroid.base_masks().to_vec() };
    Canonical { key, matroid, group, src }
}

/// `P` and `Z` computed by the deletion formula, over the stabilizer of the element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub p: GradedVirtualRep,
    pub z: GradedVirtualRep,
}

/// Memoized evaluator. Concurrent calls are safe; the cache only ever maps a
/// key to the unique value of the recursion.
pub struct Engine {
    cache: Mutex<HashMap<CacheKey, CacheEntry>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine { cache: Mutex::new(HashMap::new()) }
    }

    /// A process-wide engine shared by the free functions of this module.
    pub fn global() -> &'static Engine {
        static ENGINE: OnceLock<Engine> = OnceLock::new();
        ENGINE.get_or_init(Engine::new)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    pub fn clear(&self) {
        self.cache.lock().unwrap().clear();
    }

    pub(crate) fn snapshot(&self) -> Vec<(CacheKey, CacheEntry)> {
        let cache = self.cache.lock().unwrap();
        let mut out: Vec<(CacheKey, CacheEntry)> = cache.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        out.sort_by(|a, b| (&a.0.sizes, &a.0.bases).cmp(&(&b.0.sizes, &b.0.bases)));
        out
    }

    pub(crate) fn preload(&self, entries: impl IntoIterator<Item = (CacheKey, CacheEntry)>) {
        let mut cache = self.cache.lock().unwrap();
        for (k, v) in entries {
            cache.entry(k).or_insert(v);
        }
    }

    pub fn kl(&self, em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
        Ok(self.kl_z_raw(&em.matroid, &em.group)?.0)
    }

    pub fn z(&self, em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
        Ok(self.kl_z_raw(&em.matroid, &em.group)?.1)
    }

    pub fn kl_z(&self, em: &EquivariantMatroid) -> Result<(GradedVirtualRep, GradedVirtualRep)> {
        self.kl_z_raw(&em.matroid, &em.group)
    }

    /// `[x^j]P` when the rank is `2j+1`, zero otherwise.
    pub fn tau(&self, em: &EquivariantMatroid) -> Result<VirtualRep> {
        self.tau_raw(&em.matroid, &em.group)
    }

    fn tau_raw(&self, m: &Matroid, g: &YoungGroup) -> Result<VirtualRep> {
        let d = m.rank();
        if d.is_multiple_of(2) {
            if !m.is_loopless() {
                return Err(Error::Loops(m.loops()));
            }
            return Ok(VirtualRep::zero(g.clone()));
        }
        Ok(self.kl_z_raw(m, g)?.0.coeff(d / 2))
    }

    pub(crate) fn kl_z_raw(&self, m: &Matroid, g: &YoungGroup) -> Result<(GradedVirtualRep, GradedVirtualRep)> {
        if !m.is_loopless() {
            return Err(Error::Loops(m.loops()));
        }
        let canon = canonicalize(m, g);
        let hit = self.cache.lock().unwrap().get(&canon.key).cloned();
        let entry = match hit {
            Some(e) => e,
            None => {
                let (p, z) = self.solve(&canon.matroid, &canon.group)?;
                let entry = CacheEntry { p, z };
                self.cache.lock().unwrap().entry(canon.key).or_insert(entry).clone()
            }
        };
        Ok((entry.p.rearranged(g, &canon.src), entry.z.rearranged(g, &canon.src)))
    }

    /// The defining recursion on a loopless matroid.
    fn solve(&self, m: &Matroid, g: &YoungGroup) -> Result<(GradedVirtualRep, GradedVirtualRep)> {
        let d = m.rank();
        let one = VirtualRep::trivial(g.clone());
        if d == 0 {
            let p = GradedVirtualRep::constant(one);
            return Ok((p.clone(), p));
        }
        let full = m.full();
        let orbits = orbits_of(m, g, m.flat_masks().into_iter().filter(|&(f, _)| f != 0 && f != full));
        let term = |&(f, r, _, _): &(u64, usize, Vec<usize>, usize)| -> Result<GradedVirtualRep> {
            let inside: BTreeSet<Label> = m.labels(f).into_iter().collect();
            let stab = g.stabilizer(&inside);
            let outside: BTreeSet<Label> = m.labels(full & !f).into_iter().collect();
            let (p_con, _) = self.kl_z_raw(&m.minor_mask(f, 0), &stab.restricted_to(&outside))?;
            let fixed = VirtualRep::trivial(stab.restricted_to(&inside));
            p_con.tensor_rep(&fixed)?.shift(r).induce(g)
        };
        let terms: Vec<GradedVirtualRep> = if orbits.len() > 4 {
            orbits.par_iter().map(term).collect::<Result<_>>()?
        } else {
            orbits.iter().map(term).collect::<Result<_>>()?
        };
        let mut r = GradedVirtualRep::monomial(one.clone(), d);
        for t in &terms {
            r = r.add(t)?;
        }
        let mut p = GradedVirtualRep::zero(g.clone());
        for j in 0..d.div_ceil(2) {
            let c = r.coeff(d - j).sub(&r.coeff(j))?;
            p = p.add(&GradedVirtualRep::monomial(c, j))?;
        }
        let z = p.add(&r)?;
        if !z.is_palindromic(d) || z.degree() != Some(d) {
            return Err(Error::Internal(format!("Z is not palindromic of degree {d}")));
        }
        if p.coeff(0) != one {
            return Err(Error::Internal("constant term of P is not trivial".into()));
        }
        Ok((p, z))
    }

    /// `P` and `Z` over the stabilizer `W_i` via the deletion formula.
    pub fn deletion_formula(&self, em: &EquivariantMatroid, i: Label) -> Result<Deletion> {
        let m = &em.matroid;
        if !m.is_loopless() {
            return Err(Error::Loops(m.loops()));
        }
        let mi = Matroid::mask_in(m.ground(), [i].iter())?;
        if m.coloop_mask() & mi != 0 {
            return Err(Error::Coloop(i));
        }
        let k = m.rank();
        let full = m.full();
        let wi = em.group.stabilizer(&[i].into_iter().collect());
        let rest: BTreeSet<Label> = m.labels(full & !mi).into_iter().collect();
        let w_rest = wi.restricted_to(&rest);
        let triv_i = VirtualRep::trivial(YoungGroup::trivial(&[i]));

        let (p_del, z_del) = self.kl_z_raw(&m.minor_mask(0, mi), &w_rest)?;
        let mut p = p_del.tensor_rep(&triv_i)?;
        let mut z = z_del.tensor_rep(&triv_i)?;

        // Elements parallel to `i` become loops in the contraction, whose KL
        // polynomial is taken to be zero.
        let con = m.minor_mask(mi, 0);
        if con.is_loopless() {
            let (p_con, _) = self.kl_z_raw(&con, &w_rest)?;
            p = p.sub(&p_con.tensor_rep(&triv_i)?.shift(1))?;
        }

        for (f, rf, _, _) in orbits_of(m, &wi, m.si_masks(mi)) {
            let top = m.minor_mask(f | mi, 0);
            if top.rank().is_multiple_of(2) {
                continue;
            }
            let inside: BTreeSet<Label> = m.labels(f).into_iter().collect();
            let outside: BTreeSet<Label> = m.labels(full & !f & !mi).into_iter().collect();
            let stab = wi.stabilizer(&inside);
            let tau = self.tau_raw(&top, &stab.restricted_to(&outside))?;
            if tau.is_zero() {
                continue;
            }
            if (k - rf) % 2 == 1 {
                return Err(Error::Internal(format!(
                    "odd exponent (k - rk F) = {} with nonzero tau at F = {:?}",
                    k - rf,
                    m.labels(f)
                )));
            }
            let (p_res, z_res) = self.kl_z_raw(&m.minor_mask(0, full & !f), &stab.restricted_to(&inside))?;
            let lead = GradedVirtualRep::constant(tau);
            let shift = (k - rf) / 2;
            let term_p = lead.outer_tensor(&p_res)?.tensor_rep(&triv_i)?.shift(shift).induce(&wi)?;
            let term_z = lead.outer_tensor(&z_res)?.tensor_rep(&triv_i)?.shift(shift).induce(&wi)?;
            p = p.add(&term_p)?;
            z = z.add(&term_z)?;
        }
        Ok(Deletion { p, z })
    }

    /// `Z` over `W_i × {1}` for a coloop `i`, from `Z` of the deletion.
    pub fn coloop_extension(&self, em: &EquivariantMatroid, i: Label) -> Result<GradedVirtualRep> {
        let m = &em.matroid;
        let mi = Matroid::mask_in(m.ground(), [i].iter())?;
        if m.coloop_mask() & mi == 0 {
            return Err(Error::Precondition(format!("element {i} is not a coloop")));
        }
        let wi = em.group.stabilizer(&[i].into_iter().collect());
        let rest: BTreeSet<Label> = m.labels(m.full() & !mi).into_iter().collect();
        let (_, z_del) = self.kl_z_raw(&m.minor_mask(0, mi), &wi.restricted_to(&rest))?;
        z_coloop(&z_del, i)
    }

    /// Dimensions of `P` and `Z` under the trivial group, lowest degree first.
    pub fn nonequivariant(&self, m: &Matroid) -> Result<(Vec<i128>, Vec<i128>)> {
        let (p, z) = self.kl_z(&EquivariantMatroid::trivial(m.clone()))?;
        Ok((p.dimensions(), z.dimensions()))
    }
}

/// `Z ⊠ 1(1+x)` where the trivial factor acts on the singleton block `{coloop}`.
pub fn z_coloop(z_del: &GradedVirtualRep, coloop: Label) -> Result<GradedVirtualRep> {
    let factor = GradedVirtualRep::constant(VirtualRep::trivial(YoungGroup::trivial(&[coloop]))).scale_by_binomial(1);
    z_del.outer_tensor(&factor)
}

pub fn kl(em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
    Engine::global().kl(em)
}

pub fn z(em: &EquivariantMatroid) -> Result<GradedVirtualRep> {
    Engine::global().z(em)
}

pub fn tau(em: &EquivariantMatroid) -> Result<VirtualRep> {
    Engine::global().tau(em)
}

pub fn deletion_formula(em: &EquivariantMatroid, i: Label) -> Result<Deletion> {
    Engine::global().deletion_formula(em, i)
}

pub fn nonequivariant(m: &Matroid) -> Result<(Vec<i128>, Vec<i128>)> {
    Engine::global().nonequivariant(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::MultiPartition;

    fn g(s: &str) -> YoungGroup {
        s.parse().unwrap()
    }

    fn range(a: Label, b: Label) -> Vec<Label> {
        (a..=b).collect()
    }

    fn graded(group: &str, coeffs: &[&[(&str, i64)]]) -> GradedVirtualRep {
        let w = g(group);
        let mut out = GradedVirtualRep::zero(w.clone());
        for (d, terms) in coeffs.iter().enumerate() {
            let r = VirtualRep::from_terms(
                w.clone(),
                terms.iter().map(|(p, c)| (MultiPartition(p.split('x').map(|q| q.parse().unwrap()).collect()), *c)),
            )
            .unwrap();
            out = out.add(&GradedVirtualRep::monomial(r, d)).unwrap();
        }
        out
    }

    #[test]
    fn action_validation() {
        let c = Matroid::glued_cycles(&range(1, 5), &range(5, 10), 5).unwrap();
        assert!(EquivariantMatroid::new(c.clone(), g("{1..4}|{5}|{6..10}")).is_ok());
        assert!(EquivariantMatroid::new(c.clone(), g("{1..5}|{6..10}")).is_err());
        assert!(EquivariantMatroid::new(c, g("{1..4}|{6..10}")).is_err());
    }

    #[test]
    fn orbit_counts() {
        let u = Matroid::uniform(2, &[1, 2, 3]).unwrap();
        let em = EquivariantMatroid::new(u.clone(), g("{1,2}|{3}")).unwrap();
        let orbits = flat_orbits(&em, None);
        let sizes: Vec<usize> = orbits.iter().map(|o| o.orbit_size).collect();
        assert_eq!(sizes, vec![1, 2, 1, 1]);
        assert_eq!(orbits[1].representative.elements, vec![1]);
        assert_eq!(orbits[1].stabilizer, g("{1}|{2}|{3}"));
        let triv = EquivariantMatroid::trivial(u.clone());
        assert_eq!(flat_orbits(&triv, None).len(), 5);
        for n in 2..=6u32 {
            for k in 1..=n as usize {
                let em = EquivariantMatroid::new(
                    Matroid::uniform(k, &range(1, n)).unwrap(),
                    YoungGroup::symmetric(&range(1, n)),
                )
                .unwrap();
                assert_eq!(flat_orbits(&em, None).len(), k + 1);
                let total: usize = flat_orbits(&em, None).iter().map(|o| o.orbit_size).sum();
                assert_eq!(total, em.matroid().flats().len());
            }
        }
        let nonempty = flat_orbits(&em, Some(&|f: &Flat| !f.is_empty()));
        assert_eq!(nonempty.len(), 3);
    }

    #[test]
    fn small_examples() {
        let e = Engine::new();
        let b2 = EquivariantMatroid::new(Matroid::boolean(&[1, 2]).unwrap(), g("{1,2}")).unwrap();
        let (p, z) = e.kl_z(&b2).unwrap();
        assert_eq!(p, graded("{1,2}", &[&[("[2]", 1)]]));
        assert_eq!(z, graded("{1,2}", &[&[("[2]", 1)], &[("[2]", 1), ("[1,1]", 1)], &[("[2]", 1)]]));
        let u23 = EquivariantMatroid::new(Matroid::uniform(2, &[1, 2, 3]).unwrap(), g("{1,2}|{3}")).unwrap();
        let z = e.z(&u23).unwrap();
        assert_eq!(
            z,
            graded("{1,2}|{3}", &[&[("[2]x[1]", 1)], &[("[2]x[1]", 2), ("[1,1]x[1]", 1)], &[("[2]x[1]", 1)]])
        );
        let empty = EquivariantMatroid::trivial(Matroid::boolean(&[]).unwrap());
        assert_eq!(e.kl(&empty).unwrap().degree(), Some(0));
        let u12 = EquivariantMatroid::new(Matroid::uniform(1, &[1, 2]).unwrap(), g("{1,2}")).unwrap();
        assert_eq!(e.tau(&u12).unwrap(), VirtualRep::trivial(g("{1,2}")));
        assert!(e.tau(&b2).unwrap().is_zero());
    }

    #[test]
    fn u89_top_level() {
        let e = Engine::new();
        let em = EquivariantMatroid::new(Matroid::uniform(8, &range(1, 9)).unwrap(), g("{1..9}")).unwrap();
        let p = e.kl(&em).unwrap();
        let expect = graded("{1..9}", &[&[("[9]", 1)], &[("[7,2]", 1)], &[("[5,2,2]", 1)], &[("[3,2^3]", 1)]]);
        assert_eq!(p, expect);
        let (pn, _) = e.nonequivariant(em.matroid()).unwrap();
        assert_eq!(pn, vec![1, 27, 120, 84]);
    }

    #[test]
    fn glued_cycles_nonequivariant() {
        let c = Matroid::glued_cycles(&range(1, 5), &range(5, 10), 5).unwrap();
        let (p, z) = nonequivariant(&c).unwrap();
        assert_eq!(p, vec![1, 26, 113, 74]);
        assert_eq!(z.len(), 9);
        let em = EquivariantMatroid::new(c, g("{1..4}|{5}|{6..10}")).unwrap();
        let pe = kl(&em).unwrap();
        assert_eq!(pe.dimensions(), vec![1, 26, 113, 74]);
        let del = deletion_formula(&em, 5).unwrap();
        assert_eq!(del.p, pe);
    }

    #[test]
    fn loops_are_rejected() {
        let m = Matroid::from_bases(&[1, 2], &[vec![1]]).unwrap();
        assert_eq!(kl(&EquivariantMatroid::trivial(m)).unwrap_err(), Error::Loops(vec![2]));
    }

    #[test]
    fn deletion_small() {
        let e = Engine::new();
        let u23 = EquivariantMatroid::new(Matroid::uniform(2, &[1, 2, 3]).unwrap(), g("{1,2}|{3}")).unwrap();
        let del = e.deletion_formula(&u23, 3).unwrap();
        assert_eq!(del.z, e.z(&u23).unwrap());
        assert_eq!(del.p, e.kl(&u23).unwrap());
        let b2 = EquivariantMatroid::trivial(Matroid::boolean(&[1, 2]).unwrap());
        assert_eq!(e.deletion_formula(&b2, 1).unwrap_err(), Error::Coloop(1));
        let z = e.coloop_extension(&b2, 1).unwrap();
        assert_eq!(z, e.z(&b2).unwrap());
        // parallel pair: the contraction has a loop
        let u12 = EquivariantMatroid::new(Matroid::uniform(1, &[1, 2]).unwrap(), g("{1,2}")).unwrap();
        let del = e.deletion_formula(&u12, 1).unwrap();
        assert_eq!(del.p, e.kl(&u12.stabilizer_of(1).unwrap()).unwrap());
        assert_eq!(del.z, e.z(&u12.stabilizer_of(1).unwrap()).unwrap());
    }

    #[test]
    fn z_coloop_twice() {
        let one = GradedVirtualRep::constant(VirtualRep::trivial(YoungGroup::trivial(&[])));
        let z1 = z_coloop(&one, 1).unwrap();
        let z2 = z_coloop(&z1, 2).unwrap();
        assert_eq!(z2, GradedVirtualRep::constant(VirtualRep::trivial(g("{1}|{2}"))).scale_by_binomial(2));
        assert!(z_coloop(&GradedVirtualRep::zero(YoungGroup::trivial(&[])), 1).unwrap().is_zero());
    }
}

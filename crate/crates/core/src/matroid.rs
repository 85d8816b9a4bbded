//! Matroids stored by explicit basis lists.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Label;

/// Largest ground set handled by the bitmask representation.
pub const MAX_GROUND: usize = 64;

/// A matroid on a sorted ground set of labels. Bases are bitmasks over
/// positions in `ground`, kept sorted and duplicate free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: Vec<Label>,
    bases: Vec<u64>,
    rank: usize,
}

/// A closed set together with its rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    pub rank: usize,
    pub elements: Vec<Label>,
}

impl Flat {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn set(&self) -> BTreeSet<Label> {
        self.elements.iter().copied().collect()
    }
}

/// `{"ground": [labels], "bases": [[labels]...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub ground: Vec<Label>,
    pub bases: Vec<Vec<Label>>,
}

/// All `k`-element subsets of `{0..n}` as bitmasks, in increasing order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit: u128 = 1u128 << n;
    let mut m: u64 = (1u64 << k) - 1;
    while (m as u128) < limit {
        out.push(m);
        // Gosper's hack for the next subset of equal popcount.
        let c = m & m.wrapping_neg();
        let r = m.wrapping_add(c);
        if r == 0 {
            break;
        }
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn sorted_unique(labels: &[Label]) -> Result<Vec<Label>> {
    let mut g = labels.to_vec();
    g.sort_unstable();
    if g.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Invalid("repeated label in ground set".into()));
    }
    if g.len() > MAX_GROUND {
        return Err(Error::Invalid(format!("ground set larger than {MAX_GROUND}")));
    }
    Ok(g)
}

impl Matroid {
    /// Builds a matroid from trusted bitmask bases over positions in `ground`.
    pub(crate) fn from_masks(ground: Vec<Label>, mut bases: Vec<u64>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let rank = bases.first().map_or(0, |b| b.count_ones() as usize);
        debug_assert!(bases.iter().all(|b| b.count_ones() as usize == rank));
        Matroid { ground, bases, rank }
    }

    /// Builds a matroid from labelled bases, checking the exchange axiom.
    pub fn from_bases(ground: &[Label], bases: &[Vec<Label>]) -> Result<Self> {
        let ground = sorted_unique(ground)?;
        if bases.is_empty() {
            return Err(Error::Invalid("a matroid needs at least one basis".into()));
        }
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let set: BTreeSet<Label> = b.iter().copied().collect();
            if set.len() != b.len() {
                return Err(Error::Invalid(format!("basis {b:?} repeats a label")));
            }
            masks.push(Self::mask_in(&ground, set.iter())?);
        }
        let r = masks[0].count_ones();
        if masks.iter().any(|m| m.count_ones() != r) {
            return Err(Error::Invalid("bases have different sizes".into()));
        }
        let m = Self::from_masks(ground, masks);
        m.check_exchange()?;
        Ok(m)
    }

    pub fn from_json(json: &MatroidJson) -> Result<Self> {
        Self::from_bases(&json.ground, &json.bases)
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson {
            ground: self.ground.clone(),
            bases: self.bases().into_iter().map(|b| b.into_iter().collect()).collect(),
        }
    }

    /// Verifies the basis exchange axiom.
    pub fn check_exchange(&self) -> Result<()> {
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let mut out = b1 & !b2;
                while out != 0 {
                    let x = out & out.wrapping_neg();
                    out ^= x;
                    let mut cand = b2 & !b1;
                    let mut ok = false;
                    while cand != 0 {
                        let y = cand & cand.wrapping_neg();
                        cand ^= y;
                        if set.contains(&((b1 & !x) | y)) {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Err(Error::Invalid("basis exchange axiom fails".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// The uniform matroid `U_{k,|S|}` on `ground`.
    pub fn uniform(k: usize, ground: &[Label]) -> Result<Self> {
        let ground = sorted_unique(ground)?;
        if k > ground.len() {
            return Err(Error::Invalid(format!("rank {k} exceeds ground size {}", ground.len())));
        }
        if binomial(ground.len(), k) > 2_000_000 {
            return Err(Error::Invalid("uniform matroid too large to enumerate".into()));
        }
        let n = ground.len();
        Ok(Self::from_masks(ground, k_subsets(n, k)))
    }

    pub fn boolean(ground: &[Label]) -> Result<Self> {
        Self::uniform(ground.len(), ground)
    }

    /// Cycle matroid of an `|S|`-cycle, which is `U_{|S|-1,|S|}`.
    pub fn cycle(ground: &[Label]) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::Invalid("a cycle needs at least one edge".into()));
        }
        Self::uniform(ground.len() - 1, ground)
    }

    /// Two cycles `A` and `B` glued along the common edge `e`: the rank
    /// `|A|+|B|-3` matroid whose circuits are `A`, `B` and `(A ∪ B) ∖ e`.
    pub fn glued_cycles(a: &[Label], b: &[Label], e: Label) -> Result<Self> {
        let sa: BTreeSet<Label> = a.iter().copied().collect();
        let sb: BTreeSet<Label> = b.iter().copied().collect();
        if sa.len() != a.len() || sb.len() != b.len() {
            return Err(Error::Invalid("repeated label in a cycle".into()));
        }
        if sa.len() < 2 || sb.len() < 2 {
            return Err(Error::Invalid("each cycle needs at least two edges".into()));
        }
        let common: Vec<Label> = sa.intersection(&sb).copied().collect();
        if common != [e] {
            return Err(Error::Invalid(format!("cycles must meet exactly in {e}")));
        }
        let ground: Vec<Label> = sa.union(&sb).copied().collect();
        let n = ground.len();
        let ma = Self::mask_in(&ground, sa.iter())?;
        let mb = Self::mask_in(&ground, sb.iter())?;
        let me = Self::mask_in(&ground, [e].iter())?;
        let mc = (ma | mb) & !me;
        let bases = k_subsets(n, sa.len() + sb.len() - 3)
            .into_iter()
            .filter(|&s| s & ma != ma && s & mb != mb && s & mc != mc)
            .collect();
        Ok(Self::from_masks(ground, bases))
    }

    /// The rank `k` matroid on `E` whose independent sets meet `E ∖ F` in at
    /// most `k - r` elements, so that `E ∖ F` is a stressed flat of rank `k - r`.
    pub fn lambda(r: usize, k: usize, f: &[Label], e: &[Label]) -> Result<Self> {
        let (ground, mf) = Self::check_split_params(r, k, f, e)?;
        let mg = full_mask(ground.len()) & !mf;
        let bases =
            k_subsets(ground.len(), k).into_iter().filter(|&s| (s & mg).count_ones() as usize <= k - r).collect();
        Ok(Self::from_masks(ground, bases))
    }

    /// `U_{k-r, E∖F} ⊕ U_{r, F}`.
    pub fn pi(r: usize, k: usize, f: &[Label], e: &[Label]) -> Result<Self> {
        let (ground, mf) = Self::check_split_params(r, k, f, e)?;
        let inside: Vec<Label> = Self::labels_in(&ground, mf);
        let outside: Vec<Label> = Self::labels_in(&ground, full_mask(ground.len()) & !mf);
        Self::uniform(k - r, &outside)?.direct_sum(&Self::uniform(r, &inside)?)
    }

    /// The loopless rank 2 matroid whose parallel classes are `classes`.
    pub fn rank_two(classes: &[Vec<Label>]) -> Result<Self> {
        if classes.len() < 2 || classes.iter().any(Vec::is_empty) {
            return Err(Error::Invalid("need at least two nonempty parallel classes".into()));
        }
        let all: Vec<Label> = classes.concat();
        let ground = sorted_unique(&all)?;
        if ground.len() != all.len() {
            return Err(Error::Invalid("parallel classes overlap".into()));
        }
        let masks = classes.iter().map(|c| Self::mask_in(&ground, c.iter())).collect::<Result<Vec<_>>>()?;
        let bases = k_subsets(ground.len(), 2)
            .into_iter()
            .filter(|&s| masks.iter().all(|&c| (s & c).count_ones() < 2))
            .collect();
        Ok(Self::from_masks(ground, bases))
    }

    fn check_split_params(r: usize, k: usize, f: &[Label], e: &[Label]) -> Result<(Vec<Label>, u64)> {
        let ground = sorted_unique(e)?;
        let fset: BTreeSet<Label> = f.iter().copied().collect();
        if fset.len() != f.len() {
            return Err(Error::Invalid("repeated label in F".into()));
        }
        let mf = Self::mask_in(&ground, fset.iter()).map_err(|_| Error::Invalid("F must be a subset of E".into()))?;
        let h = fset.len();
        let g = ground.len() - h;
        if r < 1 || r > h.min(k) || k < r || k - r > g {
            return Err(Error::Invalid(format!(
                "need 1 <= r <= min(|F|, k) and k - r <= |E∖F| (r={r}, k={k}, |F|={h}, |E|={})",
                ground.len()
            )));
        }
        Ok((ground, mf))
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let mut ground = self.ground.clone();
        ground.extend(&other.ground);
        let ground =
            sorted_unique(&ground).map_err(|_| Error::Invalid("direct sum needs disjoint ground sets".into()))?;
        let lift = |m: &Matroid, b: u64| -> u64 {
            let labels = Self::labels_in(&m.ground, b);
            Self::mask_in(&ground, labels.iter()).unwrap()
        };
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            let l1 = lift(self, b1);
            for &b2 in &other.bases {
                bases.push(l1 | lift(other, b2));
            }
        }
        Ok(Self::from_masks(ground, bases))
    }

    pub fn dual(&self) -> Matroid {
        let full = full_mask(self.ground.len());
        Self::from_masks(self.ground.clone(), self.bases.iter().map(|b| full & !b).collect())
    }

    /// Renames every label through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<Matroid> {
        let new: Vec<Label> = self.ground.iter().map(|&x| f(x)).collect();
        let sorted = sorted_unique(&new)?;
        let bases = self
            .bases
            .iter()
            .map(|&b| {
                let labels: Vec<Label> = Self::labels_in(&self.ground, b).into_iter().map(&f).collect();
                Self::mask_in(&sorted, labels.iter()).unwrap()
            })
            .collect();
        Ok(Self::from_masks(sorted, bases))
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> Vec<BTreeSet<Label>> {
        self.bases.iter().map(|&b| Self::labels_in(&self.ground, b).into_iter().collect()).collect()
    }

    pub(crate) fn base_masks(&self) -> &[u64] {
        &self.bases
    }

    pub(crate) fn full(&self) -> u64 {
        full_mask(self.ground.len())
    }

    pub(crate) fn mask_in<'a>(ground: &[Label], labels: impl IntoIterator<Item = &'a Label>) -> Result<u64> {
        let mut m = 0u64;
        for x in labels {
            let pos =
                ground.binary_search(x).map_err(|_| Error::Invalid(format!("label {x} is not in the ground set")))?;
            m |= 1 << pos;
        }
        Ok(m)
    }

    pub(crate) fn labels_in(ground: &[Label], mut m: u64) -> Vec<Label> {
        let mut out = Vec::with_capacity(m.count_ones() as usize);
        while m != 0 {
            let pos = m.trailing_zeros() as usize;
            out.push(ground[pos]);
            m &= m - 1;
        }
        out
    }

    pub(crate) fn mask(&self, labels: &BTreeSet<Label>) -> Result<u64> {
        Self::mask_in(&self.ground, labels.iter())
    }

    pub(crate) fn labels(&self, m: u64) -> Vec<Label> {
        Self::labels_in(&self.ground, m)
    }

    pub(crate) fn rank_mask(&self, m: u64) -> usize {
        let mut best = 0;
        for &b in &self.bases {
            let c = (b & m).count_ones() as usize;
            if c > best {
                best = c;
                if best == self.rank || best == m.count_ones() as usize {
                    break;
                }
            }
        }
        best
    }

    pub(crate) fn closure_mask(&self, m: u64) -> u64 {
        let r = self.rank_mask(m);
        let mut out = m;
        let mut rest = self.full() & !m;
        while rest != 0 {
            let x = rest & rest.wrapping_neg();
            rest ^= x;
            if self.rank_mask(m | x) == r {
                out |= x;
            }
        }
        out
    }

    pub fn rank_of(&self, s: &BTreeSet<Label>) -> Result<usize> {
        Ok(self.rank_mask(self.mask(s)?))
    }

    pub fn closure(&self, s: &BTreeSet<Label>) -> Result<Flat> {
        let c = self.closure_mask(self.mask(s)?);
        Ok(Flat { rank: self.rank_mask(c), elements: self.labels(c) })
    }

    pub fn is_flat(&self, s: &BTreeSet<Label>) -> Result<bool> {
        let m = self.mask(s)?;
        Ok(self.closure_mask(m) == m)
    }

    /// All flats as `(mask, rank)`, sorted by rank and then mask.
    pub(crate) fn flat_masks(&self) -> Vec<(u64, usize)> {
        let start = self.closure_mask(0);
        let mut seen: HashSet<u64> = [start].into_iter().collect();
        let mut queue: VecDeque<u64> = [start].into_iter().collect();
        while let Some(f) = queue.pop_front() {
            let mut rest = self.full() & !f;
            while rest != 0 {
                let x = rest & rest.wrapping_neg();
                rest ^= x;
                // Every flat covering `f` is the closure of `f` plus one element.
                let c = self.closure_mask(f | x);
                rest &= !c;
                if seen.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        let mut out: Vec<(u64, usize)> = seen.into_iter().map(|f| (f, self.rank_mask(f))).collect();
        out.sort_unstable_by_key(|&(f, r)| (r, f));
        out
    }

    /// All flats, ordered by rank.
    pub fn flats(&self) -> Vec<Flat> {
        self.flat_masks().into_iter().map(|(f, r)| Flat { rank: r, elements: self.labels(f) }).collect()
    }

    pub(crate) fn minor_mask(&self, contract: u64, delete: u64) -> Matroid {
        debug_assert_eq!(contract & delete, 0);
        let rc = self.rank_mask(contract);
        let after_c: Vec<u64> = self
            .bases
            .iter()
            .filter(|&&b| (b & contract).count_ones() as usize == rc)
            .map(|&b| b & !contract)
            .collect();
        let min_d = after_c.iter().map(|b| (b & delete).count_ones()).min().unwrap_or(0);
        let keep = self.full() & !contract & !delete;
        let positions: Vec<usize> = (0..self.ground.len()).filter(|&p| keep >> p & 1 == 1).collect();
        let ground: Vec<Label> = positions.iter().map(|&p| self.ground[p]).collect();
        let bases = after_c
            .into_iter()
            .filter(|b| (b & delete).count_ones() == min_d)
            .map(|b| compress(b, &positions))
            .collect();
        Matroid::from_masks(ground, bases)
    }

    /// `M / C ∖ D` with labels preserved.
    pub fn minor(&self, contract: &BTreeSet<Label>, delete: &BTreeSet<Label>) -> Result<Matroid> {
        if !contract.is_disjoint(delete) {
            return Err(Error::Invalid("contraction and deletion sets overlap".into()));
        }
        Ok(self.minor_mask(self.mask(contract)?, self.mask(delete)?))
    }

    pub fn restriction(&self, s: &BTreeSet<Label>) -> Result<Matroid> {
        let m = self.mask(s)?;
        Ok(self.minor_mask(0, self.full() & !m))
    }

    pub fn contraction(&self, s: &BTreeSet<Label>) -> Result<Matroid> {
        Ok(self.minor_mask(self.mask(s)?, 0))
    }

    pub fn deletion(&self, s: &BTreeSet<Label>) -> Result<Matroid> {
        Ok(self.minor_mask(0, self.mask(s)?))
    }

    pub(crate) fn loop_mask(&self) -> u64 {
        let union = self.bases.iter().fold(0, |acc, b| acc | b);
        self.full() & !union
    }

    pub(crate) fn coloop_mask(&self) -> u64 {
        self.bases.iter().fold(self.full(), |acc, b| acc & b)
    }

    pub fn loops(&self) -> Vec<Label> {
        self.labels(self.loop_mask())
    }

    pub fn coloops(&self) -> Vec<Label> {
        self.labels(self.coloop_mask())
    }

    pub fn is_loopless(&self) -> bool {
        self.loop_mask() == 0
    }

    /// Connected components, computed from the fundamental circuits of one basis.
    pub fn components(&self) -> Vec<Vec<Label>> {
        let n = self.ground.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        let b = self.bases[0];
        for e in 0..n {
            if b >> e & 1 == 1 {
                continue;
            }
            for f in 0..n {
                if b >> f & 1 == 1 && set.contains(&((b & !(1 << f)) | (1 << e))) {
                    let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                    parent[re] = rf;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<Label>> = Default::default();
        for x in 0..n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(self.ground[x]);
        }
        let mut out: Vec<Vec<Label>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A rank `r` matroid on `m` elements is uniform iff it has `C(m, r)` bases.
    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u128 == binomial(self.ground.len(), self.rank)
    }

    /// Flats whose restriction and contraction are both uniform.
    pub fn stressed_flats(&self) -> Vec<Flat> {
        self.flat_masks()
            .into_iter()
            .filter(|&(f, _)| self.is_stressed_mask(f))
            .map(|(f, r)| Flat { rank: r, elements: self.labels(f) })
            .collect()
    }

    pub(crate) fn is_stressed_mask(&self, f: u64) -> bool {
        self.minor_mask(0, self.full() & !f).is_uniform() && self.minor_mask(f, 0).is_uniform()
    }

    /// Whether no minor is isomorphic to `U_{0,1} ⊕ U_{1,2} ⊕ U_{1,1}`.
    pub fn is_elementary_split(&self) -> bool {
        let n = self.ground.len();
        if n < 4 {
            return true;
        }
        for t in k_subsets(n, 4) {
            let rest = self.full() & !t;
            // Iterate over all subsets of `rest` to contract.
            let mut c = rest;
            loop {
                let minor = self.minor_mask(c, rest & !c);
                if minor.rank == 2 && minor.bases.len() == 2 && (minor.bases[0] & minor.bases[1]).count_ones() == 1 {
                    return false;
                }
                if c == 0 {
                    break;
                }
                c = (c - 1) & rest;
            }
        }
        true
    }

    /// Flats `F ⊊ E ∖ i` such that `F ∪ i` is also a flat.
    pub fn si_set(&self, i: Label) -> Result<Vec<Flat>> {
        let mi = Self::mask_in(&self.ground, [i].iter())?;
        Ok(self.si_masks(mi).into_iter().map(|(f, r)| Flat { rank: r, elements: self.labels(f) }).collect())
    }

    pub(crate) fn si_masks(&self, mi: u64) -> Vec<(u64, usize)> {
        let without = self.full() & !mi;
        let flats = self.flat_masks();
        let all: HashSet<u64> = flats.iter().map(|&(f, _)| f).collect();
        flats.into_iter().filter(|&(f, _)| f & mi == 0 && f != without && all.contains(&(f | mi))).collect()
    }

    /// Whether swapping the labels `x` and `y` maps the basis set to itself.
    pub fn invariant_under_swap(&self, x: Label, y: Label) -> Result<bool> {
        let px = Self::mask_in(&self.ground, [x].iter())?;
        let py = Self::mask_in(&self.ground, [y].iter())?;
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        Ok(self.bases.iter().all(|&b| {
            let swapped = match (b & px != 0, b & py != 0) {
                (true, false) => (b & !px) | py,
                (false, true) => (b & !py) | px,
                _ => b,
            };
            set.contains(&swapped)
        }))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs the bits of `m` at `positions` into consecutive low bits.
fn compress(m: u64, positions: &[usize]) -> u64 {
    positions.iter().enumerate().fold(0, |acc, (i, &p)| acc | ((m >> p & 1) << i))
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(rank {} on {:?}, {} bases)", self.rank, self.ground, self.bases.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Label]) -> BTreeSet<Label> {
        xs.iter().copied().collect()
    }

    fn range(a: Label, b: Label) -> Vec<Label> {
        (a..=b).collect()
    }

    fn c56() -> Matroid {
        Matroid::glued_cycles(&range(1, 5), &range(5, 10), 5).unwrap()
    }

    /// Flats by closing every subset, independent of the BFS.
    fn brute_flats(m: &Matroid) -> BTreeSet<u64> {
        (0..1u64 << m.len()).map(|s| m.closure_mask(s)).collect()
    }

    #[test]
    fn subsets_and_binomials() {
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(3, 0), vec![0]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(k_subsets(10, 5).len() as u128, binomial(10, 5));
    }

    #[test]
    fn rank_two_classes() {
        let m = Matroid::rank_two(&[vec![1, 2], vec![3], vec![4, 5]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.num_bases(), 2 + 4 + 2);
        assert!(m.is_loopless());
        assert!(m.dual().is_connected());
        assert!(Matroid::rank_two(&[vec![1, 2]]).is_err());
        assert!(Matroid::rank_two(&[vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn constructors() {
        let u = Matroid::uniform(2, &[1, 2, 3]).unwrap();
        assert_eq!(u.num_bases(), 3);
        assert_eq!(Matroid::cycle(&range(1, 5)).unwrap(), Matroid::uniform(4, &range(1, 5)).unwrap());
        let c = c56();
        assert_eq!(c.len(), 10);
        assert_eq!(c.rank(), 8);
        c.check_exchange().unwrap();
        assert!(c.coloops().is_empty());
        assert!(c.is_loopless());
        assert!(c.is_connected());
        let pi = Matroid::pi(2, 3, &[1, 2, 3], &range(1, 5)).unwrap();
        assert!(!pi.is_connected());
        assert_eq!(pi.rank(), 3);
        let lam = Matroid::lambda(2, 3, &[1, 2, 3], &range(1, 5)).unwrap();
        lam.check_exchange().unwrap();
        assert!(Matroid::lambda(0, 3, &[1, 2, 3], &range(1, 5)).is_err());
        assert!(Matroid::lambda(1, 3, &[1, 2, 3], &range(1, 4)).is_err());
        assert!(Matroid::glued_cycles(&[1, 2], &[3, 4], 2).is_err());
        assert!(Matroid::from_bases(&[1, 2, 3, 4], &[vec![1, 2], vec![3, 4]]).is_err());
        assert!(Matroid::from_bases(&[1, 2], &[vec![1], vec![1, 2]]).is_err());
        let json = c.to_json();
        assert_eq!(Matroid::from_json(&json).unwrap(), c);
    }

    #[test]
    fn pi_in_corank_two_host() {
        // Splitting off F from a corank-2 host leaves two corank-1 pieces.
        let e = range(1, 6);
        for h in 2..=4usize {
            let f = range(1, h as Label);
            let r = h - 1;
            let pi = Matroid::pi(r, 4, &f, &e).unwrap();
            let rest = range(h as Label + 1, 6);
            let expect =
                Matroid::uniform(6 - 1 - h, &rest).unwrap().direct_sum(&Matroid::uniform(h - 1, &f).unwrap()).unwrap();
            assert_eq!(pi, expect);
        }
    }

    #[test]
    fn closure_and_rank() {
        let u = Matroid::uniform(2, &[1, 2, 3]).unwrap();
        assert_eq!(u.closure(&set(&[1])).unwrap().elements, vec![1]);
        assert_eq!(u.rank_of(&set(&[])).unwrap(), 0);
        assert_eq!(u.closure(&set(&[1, 2])).unwrap().elements, vec![1, 2, 3]);
        let c = c56();
        assert_eq!(c.closure(&set(&[1, 2, 3, 4])).unwrap().elements, range(1, 5));
        assert!(c.rank_of(&set(&[42])).is_err());
    }

    #[test]
    fn flats_match_brute_force() {
        let u = Matroid::uniform(2, &[1, 2, 3]).unwrap();
        assert_eq!(u.flats().len(), 5);
        assert_eq!(Matroid::boolean(&range(1, 5)).unwrap().flats().len(), 32);
        for m in [c56(), Matroid::glued_cycles(&range(1, 3), &range(3, 6), 3).unwrap(), u] {
            let bfs: BTreeSet<u64> = m.flat_masks().into_iter().map(|(f, _)| f).collect();
            assert_eq!(bfs, brute_flats(&m));
        }
        // intersection closed
        let m = Matroid::lambda(2, 4, &range(1, 3), &range(1, 7)).unwrap();
        let fl: BTreeSet<u64> = m.flat_masks().into_iter().map(|(f, _)| f).collect();
        for &a in &fl {
            for &b in &fl {
                assert!(fl.contains(&(a & b)));
            }
        }
    }

    #[test]
    fn minors() {
        let u = Matroid::uniform(2, &[1, 2, 3]).unwrap();
        assert_eq!(u.contraction(&set(&[3])).unwrap(), Matroid::uniform(1, &[1, 2]).unwrap());
        assert_eq!(u.restriction(&set(&[1, 2, 3])).unwrap(), u);
        let c = c56();
        assert_eq!(c.deletion(&set(&[5])).unwrap(), Matroid::cycle(&[1, 2, 3, 4, 6, 7, 8, 9, 10]).unwrap());
        assert!(u.minor(&set(&[1]), &set(&[1])).is_err());
        // a non-flat contraction creates loops
        let parallel = Matroid::glued_cycles(&[1, 2], &[2, 3, 4], 2).unwrap();
        assert_eq!(parallel.contraction(&set(&[1])).unwrap().loops(), vec![2]);
    }

    #[test]
    fn minors_compose() {
        let m = Matroid::glued_cycles(&range(1, 3), &range(3, 6), 3).unwrap();
        let n = m.len();
        for c1 in 0..1u64 << n {
            for d1 in [0u64, 1, 4, 16] {
                if c1 & d1 != 0 {
                    continue;
                }
                let step = m.minor_mask(c1, d1);
                let rest = m.full() & !c1 & !d1;
                let positions: Vec<usize> = (0..n).filter(|&p| rest >> p & 1 == 1).collect();
                for c2 in [0u64, 1, 2] {
                    if c2 >= 1 << positions.len() {
                        continue;
                    }
                    let two = step.minor_mask(c2, 0);
                    let c2_orig: u64 =
                        positions.iter().enumerate().filter(|(i, _)| c2 >> i & 1 == 1).map(|(_, &p)| 1u64 << p).sum();
                    assert_eq!(two, m.minor_mask(c1 | c2_orig, d1));
                }
            }
        }
    }

    #[test]
    fn rank_is_submodular() {
        for m in [
            Matroid::glued_cycles(&range(1, 3), &range(3, 7), 3).unwrap(),
            Matroid::lambda(2, 4, &range(1, 3), &range(1, 7)).unwrap(),
            Matroid::uniform(3, &range(1, 7)).unwrap(),
        ] {
            let n = m.len();
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let (ra, rb) = (m.rank_mask(a), m.rank_mask(b));
                    assert!(m.rank_mask(a | b) + m.rank_mask(a & b) <= ra + rb);
                    if a & b == a {
                        assert!(ra <= rb);
                    }
                }
            }
        }
    }

    #[test]
    fn coloops_and_connectivity() {
        assert_eq!(Matroid::boolean(&[1, 2, 3]).unwrap().coloops(), vec![1, 2, 3]);
        let c = c56();
        // brute force: every element avoids some basis
        for x in c.ground() {
            assert!(c.bases().iter().any(|b| !b.contains(x)));
        }
        assert!(c.coloops().is_empty());
        assert_eq!(Matroid::boolean(&[1, 2, 3]).unwrap().components().len(), 3);
        assert!(Matroid::uniform(2, &range(1, 4)).unwrap().is_connected());
    }

    #[test]
    fn stressed_flats_and_split() {
        let u = Matroid::uniform(3, &range(1, 5)).unwrap();
        assert_eq!(u.stressed_flats().len(), u.flats().len());
        let c = c56();
        let stressed: Vec<Vec<Label>> = c.stressed_flats().into_iter().map(|f| f.elements).collect();
        assert!(stressed.contains(&range(1, 5)));
        assert!(stressed.contains(&range(5, 10)));
        assert!(c.is_elementary_split());
        assert!(Matroid::glued_cycles(&range(1, 3), &range(3, 5), 3).unwrap().is_elementary_split());
        // the excluded minor itself
        let bad = Matroid::from_bases(&[1, 2, 3, 4], &[vec![2, 4], vec![3, 4]]).unwrap();
        assert!(!bad.is_elementary_split());
    }

    #[test]
    fn lambda_has_its_stressed_flat() {
        let e = range(1, 6);
        for (r, k, h) in [(1, 3, 2), (2, 3, 3), (2, 4, 3), (1, 4, 3), (3, 4, 4)] {
            let f = range(1, h);
            let m = Matroid::lambda(r, k, &f, &e).unwrap();
            m.check_exchange().unwrap();
            let g: Vec<Label> = range(h + 1, 6);
            let g_set = set(&g);
            assert_eq!(m.rank_of(&g_set).unwrap(), k - r);
            let big: Vec<Vec<Label>> = m
                .stressed_flats()
                .into_iter()
                .filter(|fl| fl.len() > fl.rank && fl.elements != e)
                .map(|fl| fl.elements)
                .collect();
            assert!(big.len() <= 1);
            if g.len() > k - r {
                assert_eq!(big, vec![g]);
            }
        }
    }

    #[test]
    fn si_sets() {
        let u = Matroid::uniform(2, &[1, 2, 3]).unwrap();
        for i in 1..=3 {
            let s = u.si_set(i).unwrap();
            assert_eq!(s.len(), 1);
            assert!(s[0].is_empty());
        }
        let b = Matroid::boolean(&range(1, 4)).unwrap();
        assert_eq!(b.si_set(1).unwrap().len(), 7);
        let c = c56();
        let flats = c.flats();
        let literal: Vec<Flat> = flats
            .iter()
            .filter(|f| {
                let mut s = f.set();
                !s.contains(&5) && s.len() < 9 && {
                    s.insert(5);
                    c.is_flat(&s).unwrap()
                }
            })
            .cloned()
            .collect();
        assert_eq!(c.si_set(5).unwrap(), literal);
        assert!(c.si_set(11).is_err());
    }

    #[test]
    fn swap_invariance() {
        let c = c56();
        assert!(c.invariant_under_swap(1, 2).unwrap());
        assert!(c.invariant_under_swap(6, 10).unwrap());
        assert!(!c.invariant_under_swap(4, 6).unwrap());
        assert!(!c.invariant_under_swap(4, 5).unwrap());
    }
}

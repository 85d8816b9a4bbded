//! Virtual representations of Young groups and their graded versions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{MultiPartition, YoungGroup};
use crate::lr;
use crate::partition::Partition;

/// An integer combination of irreducible representations of a Young group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    group: YoungGroup,
    terms: BTreeMap<MultiPartition, i64>,
}

impl VirtualRep {
    pub fn zero(group: YoungGroup) -> Self {
        VirtualRep { group, terms: BTreeMap::new() }
    }

    /// The trivial representation `1_W`.
    pub fn trivial(group: YoungGroup) -> Self {
        let mp = group.trivial_multipartition();
        VirtualRep { group, terms: [(mp, 1)].into_iter().collect() }
    }

    pub fn irreducible(group: YoungGroup, mp: MultiPartition) -> Result<Self> {
        Self::from_terms(group, [(mp, 1)])
    }

    pub fn from_terms(group: YoungGroup, terms: impl IntoIterator<Item = (MultiPartition, i64)>) -> Result<Self> {
        let mut rep = VirtualRep::zero(group);
        for (mp, c) in terms {
            if !mp.matches(&rep.group) {
                return Err(Error::GroupMismatch(format!("{mp} does not match the blocks of {}", rep.group)));
            }
            rep.add_term(mp, c);
        }
        Ok(rep)
    }

    pub(crate) fn add_term(&mut self, mp: MultiPartition, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mp) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn group(&self) -> &YoungGroup {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<MultiPartition, i64> {
        &self.terms
    }

    pub fn multiplicity(&self, mp: &MultiPartition) -> i64 {
        self.terms.get(mp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether all multiplicities are nonnegative.
    pub fn is_honest(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn dimension(&self) -> i128 {
        self.terms.iter().map(|(mp, &c)| c as i128 * mp.dim() as i128).sum()
    }

    fn check_same_group(&self, other: &VirtualRep) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        Ok(())
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_same_group(other)?;
        let mut out = self.clone();
        for (mp, &c) in &other.terms {
            out.add_term(mp.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> VirtualRep {
        let mut out = VirtualRep::zero(self.group.clone());
        if k != 0 {
            for (mp, &c) in &self.terms {
                out.terms.insert(mp.clone(), c * k);
            }
        }
        out
    }

    /// `Σ k_i · r_i` over one group; `group` is used when the list is empty.
    pub fn combine(group: &YoungGroup, terms: &[(i64, VirtualRep)]) -> Result<VirtualRep> {
        let mut out = VirtualRep::zero(group.clone());
        for (k, r) in terms {
            out = out.add(&r.scale(*k))?;
        }
        Ok(out)
    }

    /// Outer tensor product, a representation of the product group.
    pub fn outer_tensor(&self, other: &VirtualRep) -> Result<VirtualRep> {
        let group = self.group.product(&other.group)?;
        // Position of each factor's blocks inside the merged canonical order.
        let pos_a: Vec<usize> = self.group.blocks().iter().map(|b| group.block_of(b[0]).unwrap()).collect();
        let pos_b: Vec<usize> = other.group.blocks().iter().map(|b| group.block_of(b[0]).unwrap()).collect();
        let mut out = VirtualRep::zero(group.clone());
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let mut parts = vec![Partition::empty(); group.num_blocks()];
                for (p, &i) in ma.0.iter().zip(&pos_a) {
                    parts[i] = p.clone();
                }
                for (p, &i) in mb.0.iter().zip(&pos_b) {
                    parts[i] = p.clone();
                }
                out.add_term(MultiPartition(parts), ca * cb);
            }
        }
        Ok(out)
    }

    /// Induction to a coarser Young group via LR products.
    pub fn induce(&self, to: &YoungGroup) -> Result<VirtualRep> {
        let parents = self.group.parent_blocks(to)?;
        if self.group == *to {
            return Ok(self.clone());
        }
        let mut out = VirtualRep::zero(to.clone());
        for (mp, &c) in &self.terms {
            // Per coarse block, expand the product of the contained partitions.
            let mut per_block: Vec<Vec<(Partition, u64)>> = Vec::with_capacity(to.num_blocks());
            for j in 0..to.num_blocks() {
                let mut acc: BTreeMap<Partition, u64> = [(Partition::empty(), 1)].into_iter().collect();
                for (p, _) in mp.0.iter().zip(&parents).filter(|(_, &pj)| pj == j) {
                    let mut next = BTreeMap::new();
                    for (lam, &k) in &acc {
                        for (nu, m) in lr::lr_product(lam, p) {
                            *next.entry(nu).or_insert(0) += k * m;
                        }
                    }
                    acc = next;
                }
                per_block.push(acc.into_iter().collect());
            }
            for (mp_out, k) in cartesian(&per_block) {
                out.add_term(mp_out, c * k as i64);
            }
        }
        Ok(out)
    }

    /// Restriction to a finer Young group via LR coproducts.
    pub fn restrict(&self, to: &YoungGroup) -> Result<VirtualRep> {
        let parents = to.parent_blocks(&self.group)?;
        if self.group == *to {
            return Ok(self.clone());
        }
        let mut out = VirtualRep::zero(to.clone());
        for (mp, &c) in &self.terms {
            // Each coarse block splits into its fine blocks, peeled off one at a time.
            let mut per_block: Vec<Vec<(Vec<Partition>, u64)>> = Vec::new();
            for (j, lam) in mp.0.iter().enumerate() {
                let sizes: Vec<usize> =
                    to.blocks().iter().zip(&parents).filter(|(_, &pj)| pj == j).map(|(b, _)| b.len()).collect();
                per_block.push(split_partition(lam, &sizes));
            }
            let mut combos: Vec<(Vec<Vec<Partition>>, u64)> = vec![(Vec::new(), 1)];
            for options in &per_block {
                let mut next = Vec::new();
                for (prefix, k) in &combos {
                    for (parts, m) in options {
                        let mut v = prefix.clone();
                        v.push(parts.clone());
                        next.push((v, k * m));
                    }
                }
                combos = next;
            }
            for (pieces, k) in combos {
                let mut cursor = vec![0usize; mp.0.len()];
                let parts: Vec<Partition> = parents
                    .iter()
                    .map(|&pj| {
                        let p = pieces[pj][cursor[pj]].clone();
                        cursor[pj] += 1;
                        p
                    })
                    .collect();
                out.add_term(MultiPartition(parts), c * k as i64);
            }
        }
        Ok(out)
    }

    /// The same representation on `group`, whose block `j` carries the
    /// partition of block `src[j]` of the current group.
    pub(crate) fn rearranged(&self, group: &YoungGroup, src: &[usize]) -> VirtualRep {
        let mut out = VirtualRep::zero(group.clone());
        for (mp, &c) in &self.terms {
            let parts = src.iter().map(|&k| mp.0[k].clone()).collect();
            out.terms.insert(MultiPartition(parts), c);
        }
        out
    }

    /// Terms with positive multiplicity first, then negative, each in
    /// decreasing lexicographic order, joined with `+`/`-`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        let pos = self.terms.iter().rev().filter(|(_, &c)| c > 0);
        let neg = self.terms.iter().rev().filter(|(_, &c)| c < 0);
        for (i, (mp, &c)) in pos.chain(neg).enumerate() {
            let mag = c.unsigned_abs();
            let coef = if mag == 1 { String::new() } else { mag.to_string() };
            match (i, c < 0) {
                (0, false) => out.push_str(&format!("{coef}{mp}")),
                (0, true) => out.push_str(&format!("-{coef}{mp}")),
                (_, false) => out.push_str(&format!(" + {coef}{mp}")),
                (_, true) => out.push_str(&format!(" - {coef}{mp}")),
            }
        }
        out
    }

    /// Parses the text rendering, e.g. `2V[2]⊗V[1] - V[1,1]⊗V[1]` or `0`.
    pub fn parse(group: &YoungGroup, text: &str) -> Result<VirtualRep> {
        let mut out = VirtualRep::zero(group.clone());
        let text = text.trim();
        if text == "0" || text.is_empty() {
            return Ok(out);
        }
        let mut sign = 1i64;
        let mut rest = text;
        loop {
            rest = rest.trim_start();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            }
            let end = rest[1..].find(['+', '-']).map_or(rest.len(), |i| i + 1);
            let (term, tail) = rest.split_at(end);
            let term = term.trim();
            let v = term.find('V').ok_or_else(|| Error::Parse(format!("term {term:?} has no V[...]")))?;
            let coef: i64 = if v == 0 {
                1
            } else {
                term[..v].trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity in {term:?}")))?
            };
            let parts = term[v..]
                .split(['⊗', '*'])
                .map(|f| {
                    let f = f.trim();
                    f.strip_prefix('V').ok_or_else(|| Error::Parse(format!("bad factor {f:?}")))?.parse::<Partition>()
                })
                .collect::<Result<Vec<_>>>()?;
            let mp = MultiPartition(parts);
            if !mp.matches(group) {
                return Err(Error::GroupMismatch(format!("{mp} does not match {group}")));
            }
            out.add_term(mp, sign * coef);
            if tail.is_empty() {
                break;
            }
            sign = 1;
            rest = tail;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(mp, &c)| TermJson { parts: mp.clone(), mult: c }).collect(),
        }
    }

    pub fn from_json(json: RepJson) -> Result<Self> {
        Self::from_terms(json.group, json.terms.into_iter().map(|t| (t.parts, t.mult)))
    }
}

/// Splits `lam` along consecutive sizes, returning each tuple with its multiplicity.
fn split_partition(lam: &Partition, sizes: &[usize]) -> Vec<(Vec<Partition>, u64)> {
    match sizes {
        [] => vec![(Vec::new(), 1)],
        [_] => vec![(vec![lam.clone()], 1)],
        [first, rest @ ..] => {
            let mut out = Vec::new();
            for ((mu, nu), c) in lr::cached_restrict(lam, *first) {
                for (mut tail, m) in split_partition(&nu, rest) {
                    tail.insert(0, mu.clone());
                    out.push((tail, c * m));
                }
            }
            out
        }
    }
}

fn cartesian(per_block: &[Vec<(Partition, u64)>]) -> Vec<(MultiPartition, u64)> {
    let mut combos: Vec<(Vec<Partition>, u64)> = vec![(Vec::new(), 1)];
    for options in per_block {
        let mut next = Vec::with_capacity(combos.len() * options.len());
        for (prefix, k) in &combos {
            for (p, m) in options {
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push((v, k * m));
            }
        }
        combos = next;
    }
    combos.into_iter().map(|(v, k)| (MultiPartition(v), k)).collect()
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.render(), self.group)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub parts: MultiPartition,
    pub mult: i64,
}

/// `{"group": [[labels]...], "terms": [{"parts": [[partition]...], "mult": int}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub group: YoungGroup,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTermJson {
    pub degree: usize,
    pub parts: MultiPartition,
    pub mult: i64,
}

/// Graded variant: every term carries its degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRepJson {
    pub group: YoungGroup,
    pub terms: Vec<GradedTermJson>,
}

/// A polynomial in `x` with virtual representation coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedVirtualRep {
    group: YoungGroup,
    coeffs: BTreeMap<usize, VirtualRep>,
}

impl GradedVirtualRep {
    pub fn zero(group: YoungGroup) -> Self {
        GradedVirtualRep { group, coeffs: BTreeMap::new() }
    }

    /// The constant `r`.
    pub fn constant(r: VirtualRep) -> Self {
        Self::monomial(r, 0)
    }

    /// `r · x^degree`.
    pub fn monomial(r: VirtualRep, degree: usize) -> Self {
        let mut out = Self::zero(r.group().clone());
        out.set(degree, r);
        out
    }

    pub fn from_coeffs(group: YoungGroup, coeffs: impl IntoIterator<Item = (usize, VirtualRep)>) -> Result<Self> {
        let mut out = Self::zero(group);
        for (d, r) in coeffs {
            if r.group() != &out.group {
                return Err(Error::GroupMismatch(format!("{} vs {}", r.group(), out.group)));
            }
            let sum = out.coeff(d).add(&r)?;
            out.set(d, sum);
        }
        Ok(out)
    }

    fn set(&mut self, d: usize, r: VirtualRep) {
        if r.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, r);
        }
    }

    pub fn group(&self) -> &YoungGroup {
        &self.group
    }

    /// Coefficient of `x^d` (the zero representation when absent).
    pub fn coeff(&self, d: usize) -> VirtualRep {
        self.coeffs.get(&d).cloned().unwrap_or_else(|| VirtualRep::zero(self.group.clone()))
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, VirtualRep> {
        &self.coeffs
    }

    /// Degree of the highest nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_honest(&self) -> bool {
        self.coeffs.values().all(VirtualRep::is_honest)
    }

    pub fn add(&self, other: &GradedVirtualRep) -> Result<GradedVirtualRep> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group, other.group)));
        }
        let mut out = self.clone();
        for (&d, r) in &other.coeffs {
            let sum = out.coeff(d).add(r)?;
            out.set(d, sum);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedVirtualRep) -> Result<GradedVirtualRep> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> GradedVirtualRep {
        let mut out = Self::zero(self.group.clone());
        for (&d, r) in &self.coeffs {
            out.set(d, r.scale(k));
        }
        out
    }

    /// Multiplication by `x^d`.
    pub fn shift(&self, d: usize) -> GradedVirtualRep {
        GradedVirtualRep {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(&k, r)| (k + d, r.clone())).collect(),
        }
    }

    /// Multiplication by `(1+x)^m`.
    pub fn scale_by_binomial(&self, m: usize) -> GradedVirtualRep {
        let mut out = self.clone();
        for _ in 0..m {
            out = out.add(&out.shift(1)).expect("same group");
        }
        out
    }

    pub fn map_coeffs(&self, group: YoungGroup, f: impl Fn(&VirtualRep) -> Result<VirtualRep>) -> Result<Self> {
        let mut out = Self::zero(group);
        for (&d, r) in &self.coeffs {
            let image = f(r)?;
            if image.group() != &out.group {
                return Err(Error::GroupMismatch(format!("{} vs {}", image.group(), out.group)));
            }
            out.set(d, image);
        }
        Ok(out)
    }

    pub(crate) fn rearranged(&self, group: &YoungGroup, src: &[usize]) -> GradedVirtualRep {
        GradedVirtualRep {
            group: group.clone(),
            coeffs: self.coeffs.iter().map(|(&d, r)| (d, r.rearranged(group, src))).collect(),
        }
    }

    pub fn induce(&self, to: &YoungGroup) -> Result<GradedVirtualRep> {
        if !self.group.refines(to) {
            return Err(Error::GroupMismatch(format!("{} does not refine {to}", self.group)));
        }
        self.map_coeffs(to.clone(), |r| r.induce(to))
    }

    pub fn restrict(&self, to: &YoungGroup) -> Result<GradedVirtualRep> {
        if !to.refines(&self.group) {
            return Err(Error::GroupMismatch(format!("{to} does not refine {}", self.group)));
        }
        self.map_coeffs(to.clone(), |r| r.restrict(to))
    }

    /// Graded outer tensor product (product of polynomials).
    pub fn outer_tensor(&self, other: &GradedVirtualRep) -> Result<GradedVirtualRep> {
        let group = self.group.product(&other.group)?;
        let mut out = Self::zero(group);
        for (&da, ra) in &self.coeffs {
            for (&db, rb) in &other.coeffs {
                let t = ra.outer_tensor(rb)?;
                let sum = out.coeff(da + db).add(&t)?;
                out.set(da + db, sum);
            }
        }
        Ok(out)
    }

    /// Outer tensor with a plain (degree 0) representation.
    pub fn tensor_rep(&self, r: &VirtualRep) -> Result<GradedVirtualRep> {
        self.outer_tensor(&GradedVirtualRep::constant(r.clone()))
    }

    /// Degree-wise dimensions, lowest degree first, up to the degree.
    pub fn dimensions(&self) -> Vec<i128> {
        match self.degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.coeff(d).dimension()).collect(),
        }
    }

    /// Whether `[x^j] = [x^{d-j}]` for all `j` and nothing lives above degree `d`.
    pub fn is_palindromic(&self, d: usize) -> bool {
        if self.degree().is_some_and(|top| top > d) {
            return false;
        }
        (0..=d / 2).all(|j| self.coeff(j) == self.coeff(d - j))
    }

    /// `x^2 + 3x` style rendering, one line per degree.
    pub fn render_lines(&self) -> Vec<String> {
        self.coeffs.iter().map(|(d, r)| format!("[x^{d}] {}", r.render())).collect()
    }

    pub fn to_json(&self) -> GradedRepJson {
        let mut terms = Vec::new();
        for (&degree, r) in &self.coeffs {
            for (mp, &c) in r.terms() {
                terms.push(GradedTermJson { degree, parts: mp.clone(), mult: c });
            }
        }
        GradedRepJson { group: self.group.clone(), terms }
    }

    pub fn from_json(json: GradedRepJson) -> Result<Self> {
        let mut out = Self::zero(json.group.clone());
        for t in json.terms {
            let r = VirtualRep::from_terms(json.group.clone(), [(t.parts, t.mult)])?;
            let sum = out.coeff(t.degree).add(&r)?;
            out.set(t.degree, sum);
        }
        Ok(out)
    }
}

impl fmt::Display for GradedVirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let pieces: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&d, r)| {
                let body = if r.terms().len() > 1 { format!("({})", r.render()) } else { r.render() };
                match d {
                    0 => body,
                    1 => format!("{body}x"),
                    _ => format!("{body}x^{d}"),
                }
            })
            .collect();
        write!(f, "{}", pieces.join(" + "))
    }
}

impl fmt::Debug for GradedVirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.group)
    }
}

/// Renders an integer polynomial highest degree first, e.g. `74x^3+113x^2+26x+1`.
pub fn render_int_poly(coeffs: &[i128]) -> String {
    let mut out = String::new();
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.unsigned_abs();
        let body = match (d, mag) {
            (0, m) => m.to_string(),
            (1, 1) => "x".to_string(),
            (1, m) => format!("{m}x"),
            (_, 1) => format!("x^{d}"),
            (_, m) => format!("{m}x^{d}"),
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> YoungGroup {
        s.parse().unwrap()
    }

    fn mp(parts: &[&str]) -> MultiPartition {
        MultiPartition(parts.iter().map(|s| s.parse().unwrap()).collect())
    }

    fn v(group: &str, terms: &[(&[&str], i64)]) -> VirtualRep {
        VirtualRep::from_terms(g(group), terms.iter().map(|(p, c)| (mp(p), *c))).unwrap()
    }

    #[test]
    fn combination_cancels() {
        let w = g("{1,2}");
        let a = v("{1,2}", &[(&["[2]"], 1)]);
        let b = v("{1,2}", &[(&["[1,1]"], 1)]);
        let r = VirtualRep::combine(&w, &[(1, a.clone()), (1, b.clone()), (-1, a.clone())]).unwrap();
        assert_eq!(r, b);
        assert!(VirtualRep::combine(&w, &[]).unwrap().is_zero());
        let other = VirtualRep::trivial(g("{1}|{2}"));
        assert!(VirtualRep::combine(&w, &[(1, a), (1, other)]).is_err());
        assert_eq!(v("{1,2}", &[(&["[1,1]"], 1), (&["[2]"], -1)]).dimension(), 0);
    }

    #[test]
    fn outer_tensor_examples() {
        let a = VirtualRep::trivial(g("{1,2,3,4}"));
        let b = VirtualRep::trivial(g("{6,7,8,9,10}"));
        let t = a.outer_tensor(&b).unwrap();
        assert_eq!(t, v("{1,2,3,4}|{6,7,8,9,10}", &[(&["[4]", "[5]"], 1)]));
        let s = v("{1,2}", &[(&["[2]"], 1), (&["[1,1]"], 1)]);
        let t = s.outer_tensor(&VirtualRep::trivial(g("{3}"))).unwrap();
        assert_eq!(t.terms().len(), 2);
        assert!(t.terms().values().all(|&c| c == 1));
        assert!(VirtualRep::zero(g("{5}")).outer_tensor(&s).unwrap().is_zero());
        assert!(s.outer_tensor(&s).is_err());
        // factor blocks interleave by minimum label
        let x = VirtualRep::trivial(g("{1}|{4}")).outer_tensor(&v("{2,3}", &[(&["[1,1]"], 1)])).unwrap();
        assert_eq!(x, v("{1}|{2,3}|{4}", &[(&["[1]", "[1,1]", "[1]"], 1)]));
    }

    #[test]
    fn induction_examples() {
        let r = v("{1,2}|{3}", &[(&["[2]", "[1]"], 1)]);
        let up = r.induce(&g("{1,2,3}")).unwrap();
        assert_eq!(up, v("{1,2,3}", &[(&["[3]"], 1), (&["[2,1]"], 1)]));
        // regular representation
        let triv = VirtualRep::trivial(g("{1}|{2}|{3}|{4}"));
        let reg = triv.induce(&g("{1,2,3,4}")).unwrap();
        for (m, &c) in reg.terms() {
            assert_eq!(c as u128, m.dim());
        }
        assert_eq!(reg.dimension(), 24);
        assert_eq!(r.induce(r.group()).unwrap(), r);
        assert!(up.induce(&g("{1,2}|{3}")).is_err());
    }

    #[test]
    fn restriction_examples() {
        let w = g("{1..9}");
        let r = v("{1..9}", &[(&["[7,2]"], 1)]);
        let res = r.restrict(&g("{1..4}|{5..9}")).unwrap();
        assert_eq!(res.terms().len(), 6);
        assert_eq!(res.dimension(), 27);
        assert_eq!(r.restrict(&w).unwrap(), r);
        for n in 3..8u32 {
            let sn = YoungGroup::symmetric(&(1..=n).collect::<Vec<_>>());
            let mut row = vec![n as usize - 1];
            row.push(1);
            let r = VirtualRep::from_terms(
                sn.clone(),
                [
                    (MultiPartition(vec![Partition::row(n as usize)]), 1),
                    (MultiPartition(vec![Partition::new(row).unwrap()]), 1),
                ],
            )
            .unwrap();
            let mut blocks = vec![vec![1, 2]];
            blocks.extend((3..=n).map(|x| vec![x]));
            let fine = YoungGroup::new(blocks).unwrap();
            let res = r.restrict(&fine).unwrap();
            let ones = vec!["[1]"; n as usize - 2];
            let mut two = vec!["[2]"];
            two.extend(&ones);
            let mut eleven = vec!["[1,1]"];
            eleven.extend(&ones);
            let expected = VirtualRep::from_terms(fine, [(mp(&two), n as i64 - 1), (mp(&eleven), 1)]).unwrap();
            assert_eq!(res, expected, "n = {n}");
        }
    }

    #[test]
    fn graded_binomial_and_shift() {
        let w = g("{1,2}");
        let one = GradedVirtualRep::constant(VirtualRep::trivial(w.clone()));
        let sq = one.scale_by_binomial(2);
        assert_eq!(sq.coeff(0), VirtualRep::trivial(w.clone()));
        assert_eq!(sq.coeff(1), VirtualRep::trivial(w.clone()).scale(2));
        assert_eq!(sq.coeff(2), VirtualRep::trivial(w.clone()));
        assert_eq!(sq.shift(1).degree(), Some(3));
        assert!(sq.is_palindromic(2));
        assert!(!sq.is_palindromic(3));
        let a = GradedVirtualRep::constant(VirtualRep::trivial(g("{1}")));
        let b = GradedVirtualRep::constant(VirtualRep::trivial(g("{2}")));
        let z = a.scale_by_binomial(1).outer_tensor(&b.scale_by_binomial(1)).unwrap();
        assert_eq!(z, GradedVirtualRep::constant(VirtualRep::trivial(g("{1}|{2}"))).scale_by_binomial(2));
        assert!(sq.add(&z).is_err());
    }

    #[test]
    fn rendering() {
        let r = v("{1,2}", &[(&["[1,1]"], 1), (&["[2]"], -1)]);
        assert_eq!(r.render(), "V[1,1] - V[2]");
        let r = v("{1,2}|{3}", &[(&["[2]", "[1]"], 2), (&["[1,1]", "[1]"], 1)]);
        assert_eq!(r.render(), "2V[2]⊗V[1] + V[1,1]⊗V[1]");
        assert_eq!(render_int_poly(&[1, 26, 113, 74]), "74x^3+113x^2+26x+1");
        assert_eq!(render_int_poly(&[1, 1]), "x+1");
        let w = r.group().clone();
        assert_eq!(VirtualRep::parse(&w, &r.render()).unwrap(), r);
        assert!(VirtualRep::parse(&w, "0").unwrap().is_zero());
        assert!(VirtualRep::parse(&w, "V[2]").is_err());
        assert!(VirtualRep::parse(&w, "xV[2]⊗V[1]").is_err());
        assert_eq!(render_int_poly(&[]), "0");
    }

    #[test]
    fn json_round_trip() {
        let r = v("{1,2}|{3}", &[(&["[2]", "[1]"], 2), (&["[1,1]", "[1]"], -1)]);
        let text = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"group":[[1,2],[3]],"terms":[{"parts":[[1,1],[1]],"mult":-1},{"parts":[[2],[1]],"mult":2}]}"#
        );
        let back = VirtualRep::from_json(serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, r);
        let bad = r#"{"group":[[1,2]],"terms":[{"parts":[[3]],"mult":1}]}"#;
        assert!(VirtualRep::from_json(serde_json::from_str(bad).unwrap()).is_err());
    }
}

//! Young groups: products of symmetric groups on the blocks of a set partition.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::Label;

/// The group of permutations of `ground` preserving every block.
///
/// Blocks are sorted internally and ordered by their minimum label, so two
/// descriptions of the same group compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Label>>", into = "Vec<Vec<Label>>")]
pub struct YoungGroup {
    blocks: Vec<Vec<Label>>,
}

impl YoungGroup {
    pub fn new(blocks: Vec<Vec<Label>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::Invalid("empty block in Young group".into()));
            }
            b.sort_unstable();
            for &x in &b {
                if !seen.insert(x) {
                    return Err(Error::Invalid(format!("label {x} appears in two blocks")));
                }
            }
            out.push(b);
        }
        out.sort_by_key(|b| b[0]);
        Ok(YoungGroup { blocks: out })
    }

    /// The trivial group on `ground`.
    pub fn trivial(ground: &[Label]) -> Self {
        Self::new(ground.iter().map(|&x| vec![x]).collect()).expect("distinct labels")
    }

    /// The full symmetric group on `ground`.
    pub fn symmetric(ground: &[Label]) -> Self {
        if ground.is_empty() {
            return YoungGroup { blocks: Vec::new() };
        }
        Self::new(vec![ground.to_vec()]).expect("distinct labels")
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn ground(&self) -> Vec<Label> {
        let mut g: Vec<Label> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn block_of(&self, x: Label) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Setwise stabilizer of `set`: every block splits into its parts inside and outside.
    pub fn stabilizer(&self, set: &BTreeSet<Label>) -> YoungGroup {
        let mut blocks = Vec::new();
        for b in &self.blocks {
            let (inside, outside): (Vec<Label>, Vec<Label>) = b.iter().partition(|x| set.contains(x));
            blocks.extend([inside, outside].into_iter().filter(|v| !v.is_empty()));
        }
        Self::new(blocks).expect("split of a valid group")
    }

    /// Restriction of the group to the labels in `set`, which must be a union of
    /// block pieces of a stabilizer (blocks are intersected with `set`).
    pub fn restricted_to(&self, set: &BTreeSet<Label>) -> YoungGroup {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|x| set.contains(x)).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        Self::new(blocks).expect("restriction of a valid group")
    }

    /// Whether every block of `self` lies inside a block of `coarser` on the same ground set.
    pub fn refines(&self, coarser: &YoungGroup) -> bool {
        self.ground() == coarser.ground()
            && self.blocks.iter().all(|b| {
                coarser
                    .block_of(b[0])
                    .map(|j| b.iter().all(|x| coarser.blocks[j].binary_search(x).is_ok()))
                    .unwrap_or(false)
            })
    }

    /// For each block of `self`, the index of the block of `coarser` containing it.
    pub(crate) fn parent_blocks(&self, coarser: &YoungGroup) -> Result<Vec<usize>> {
        if !self.refines(coarser) {
            return Err(Error::GroupMismatch(format!("{self} does not refine {coarser}")));
        }
        Ok(self.blocks.iter().map(|b| coarser.block_of(b[0]).unwrap()).collect())
    }

    /// Union of two groups on disjoint ground sets.
    pub fn product(&self, other: &YoungGroup) -> Result<YoungGroup> {
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        Self::new(blocks).map_err(|_| Error::GroupMismatch(format!("{self} and {other} have overlapping ground sets")))
    }

    /// Index `[coarser : self]`, the product of multinomial coefficients.
    pub fn index_in(&self, coarser: &YoungGroup) -> Result<u128> {
        let parents = self.parent_blocks(coarser)?;
        let mut idx: u128 = 1;
        for (j, cb) in coarser.blocks.iter().enumerate() {
            let mut total = 0u128;
            for (b, _) in self.blocks.iter().zip(&parents).filter(|(_, &p)| p == j) {
                for k in 1..=b.len() as u128 {
                    total += 1;
                    idx = idx * total / k;
                }
            }
            debug_assert_eq!(total as usize, cb.len());
        }
        Ok(idx)
    }

    /// The multipartition of the trivial representation.
    pub fn trivial_multipartition(&self) -> MultiPartition {
        MultiPartition(self.blocks.iter().map(|b| Partition::row(b.len())).collect())
    }
}

impl TryFrom<Vec<Vec<Label>>> for YoungGroup {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<Label>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<YoungGroup> for Vec<Vec<Label>> {
    fn from(g: YoungGroup) -> Self {
        g.blocks
    }
}

/// Text form `{1,2,3}|{4}|{5,6}`.
impl fmt::Display for YoungGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for YoungGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for YoungGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(YoungGroup { blocks: Vec::new() });
        }
        let mut blocks = Vec::new();
        for piece in s.split('|') {
            let piece = piece.trim();
            let body = piece
                .strip_prefix('{')
                .and_then(|p| p.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("block {piece:?} must be written {{a,b,...}}")))?;
            let mut block = Vec::new();
            for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                if let Some((lo, hi)) = tok.split_once("..") {
                    let lo: Label = lo.trim().parse().map_err(|_| Error::Parse(format!("bad label {tok:?}")))?;
                    let hi: Label = hi.trim().parse().map_err(|_| Error::Parse(format!("bad label {tok:?}")))?;
                    block.extend(lo..=hi);
                } else {
                    block.push(tok.parse().map_err(|_| Error::Parse(format!("bad label {tok:?}")))?);
                }
            }
            blocks.push(block);
        }
        Self::new(blocks).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// One partition per block of a Young group, in block order; labels an
/// irreducible representation `V_{λ1} ⊗ V_{λ2} ⊗ ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition(pub Vec<Partition>);

impl MultiPartition {
    pub fn parts(&self) -> &[Partition] {
        &self.0
    }

    pub fn dim(&self) -> u128 {
        self.0.iter().map(|p| p.dim_specht() as u128).product()
    }

    pub fn matches(&self, group: &YoungGroup) -> bool {
        self.0.len() == group.num_blocks() && self.0.iter().zip(group.blocks()).all(|(p, b)| p.size() == b.len())
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "V[]");
        }
        let parts: Vec<String> = self.0.iter().map(|p| format!("V{p}")).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

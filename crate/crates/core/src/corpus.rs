//! The bundled test corpus: small matroids, each with several Young group actions.

use crate::engine::EquivariantMatroid;
use crate::error::Result;
use crate::group::YoungGroup;
use crate::matroid::Matroid;
use crate::partition::Partition;
use crate::Label;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: Matroid,
    pub groups: Vec<YoungGroup>,
}

impl CorpusEntry {
    /// Every listed action must preserve the matroid. The full symmetric
    /// group is appended whenever it does.
    fn new(name: String, matroid: Matroid, groups: Vec<Vec<Vec<Label>>>) -> Result<Self> {
        let mut out: Vec<YoungGroup> = Vec::new();
        for blocks in groups {
            let blocks: Vec<Vec<Label>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
            let g = YoungGroup::new(blocks)?;
            EquivariantMatroid::new(matroid.clone(), g.clone())?;
            if !out.contains(&g) {
                out.push(g);
            }
        }
        let full = YoungGroup::symmetric(matroid.ground());
        if !out.contains(&full) && EquivariantMatroid::new(matroid.clone(), full.clone()).is_ok() {
            out.push(full);
        }
        Ok(CorpusEntry { name, matroid, groups: out })
    }

    pub fn actions(&self) -> Vec<EquivariantMatroid> {
        self.groups
            .iter()
            .map(|g| EquivariantMatroid::new(self.matroid.clone(), g.clone()).expect("validated on construction"))
            .collect()
    }
}

fn labels(a: Label, b: Label) -> Vec<Label> {
    (a..=b).collect()
}

fn singletons(xs: &[Label]) -> Vec<Vec<Label>> {
    xs.iter().map(|&x| vec![x]).collect()
}

fn with_singletons(block: Vec<Label>, rest: &[Label]) -> Vec<Vec<Label>> {
    let mut out = vec![block];
    out.extend(singletons(rest));
    out
}

/// `U_{k,n}` for `1 <= k <= n`, `2 <= n <= max_n`.
pub fn uniform_family(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in 2..=max_n as Label {
        let e = labels(1, n);
        let half = n.div_ceil(2);
        for k in 1..=n as usize {
            let groups = vec![
                vec![e.clone()],
                vec![labels(1, half), labels(half + 1, n)],
                with_singletons(labels(1, 2), &labels(3, n)),
                singletons(&e),
            ];
            out.push(CorpusEntry::new(format!("uniform:{k},{n}"), Matroid::uniform(k, &e)?, groups)?);
        }
    }
    Ok(out)
}

/// Glued cycles `C_{a,b}` with `A = {1..a}`, `e = a`, `B = {a..a+b-1}` on
/// `4..=max_n` elements.
pub fn glued_family(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for a in 2..=max_n as Label {
        for b in 2..=max_n as Label {
            let n = a + b - 1;
            // C_{2,2} is U_{1,3}, on which all three actions coincide.
            if n as usize > max_n || n == 3 {
                continue;
            }
            let m = Matroid::glued_cycles(&labels(1, a), &labels(a, n), a)?;
            let groups = vec![
                vec![labels(1, a - 1), vec![a], labels(a + 1, n)],
                with_singletons(labels(1, a - 1), &labels(a, n)),
                singletons(&labels(1, n)),
            ];
            out.push(CorpusEntry::new(format!("glued:{a},{b}"), m, groups)?);
        }
    }
    Ok(out)
}

/// Valid loopless `(r, k, h, n)` with `F = {1..h}` a proper nonempty subset.
fn split_params(max_n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for h in 1..n {
            for r in 1..=h {
                for k in r + 1..=r + (n - h) {
                    out.push((r, k, h, n));
                }
            }
        }
    }
    out
}

fn split_groups(h: Label, n: Label) -> Vec<Vec<Vec<Label>>> {
    let (f, g) = (labels(1, h), labels(h + 1, n));
    let mut sf_only = vec![f.clone()];
    sf_only.extend(singletons(&g));
    let mut sg_only = singletons(&f);
    sg_only.push(g.clone());
    vec![vec![f, g], sf_only, sg_only]
}

/// Every loopless `Λ_{r,k,h,n}` with `n <= max_n`.
pub fn lambda_family(max_n: usize) -> Result<Vec<CorpusEntry>> {
    split_params(max_n)
        .into_iter()
        .map(|(r, k, h, n)| {
            let m = Matroid::lambda(r, k, &labels(1, h as Label), &labels(1, n as Label))?;
            CorpusEntry::new(format!("lambda:{r},{k},{h},{n}"), m, split_groups(h as Label, n as Label))
        })
        .collect()
}

/// Every loopless `Π_{r,k,h,n}` with `n <= max_n`.
pub fn pi_family(max_n: usize) -> Result<Vec<CorpusEntry>> {
    split_params(max_n)
        .into_iter()
        .map(|(r, k, h, n)| {
            let m = Matroid::pi(r, k, &labels(1, h as Label), &labels(1, n as Label))?;
            CorpusEntry::new(format!("pi:{r},{k},{h},{n}"), m, split_groups(h as Label, n as Label))
        })
        .collect()
}

/// Connected corank 2 matroids: duals of rank 2 matroids with at least three
/// parallel classes, one per partition of `n <= max_n`. The actions permute
/// elements within parallel classes.
pub fn corank2_family(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for shape in Partition::all(n) {
            if shape.len() < 3 {
                continue;
            }
            let mut classes = Vec::new();
            let mut next: Label = 1;
            for &s in shape.parts() {
                classes.push(labels(next, next + s as Label - 1));
                next += s as Label;
            }
            let m = Matroid::rank_two(&classes)?.dual();
            let mut first_only = vec![classes[0].clone()];
            first_only.extend(classes[1..].iter().flat_map(|c| singletons(c)));
            let groups = vec![classes.clone(), first_only, singletons(&labels(1, n as Label))];
            out.push(CorpusEntry::new(format!("corank2:{shape}"), m, groups)?);
        }
    }
    Ok(out)
}

/// Uniform, glued, Λ and Π matroids on at most `max_n` elements.
pub fn corpus(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = uniform_family(max_n)?;
    out.extend(glued_family(max_n)?);
    out.extend(lambda_family(max_n)?);
    out.extend(pi_family(max_n)?);
    Ok(out)
}

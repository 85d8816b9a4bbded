//! Littlewood–Richardson coefficients by enumeration of LR fillings.
//!
//! A filling of a skew shape `λ/μ` is an LR filling when rows weakly increase,
//! columns strictly increase and the row-by-row, right-to-left reading word is a
//! lattice word. The number of LR fillings of content `ν` is `c(λ; μ, ν)`, the
//! multiplicity of `V_μ ⊗ V_ν` in the restriction of `V_λ` to `S_|μ| × S_|ν|`
//! (equivalently of `V_λ` in the induction product of `V_μ` and `V_ν`).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::Partition;

struct SkewFiller<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u8>>,
    counts: Vec<usize>,
    target: Option<&'a Partition>,
}

impl<'a> SkewFiller<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, target: Option<&'a Partition>) -> Self {
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (inner.part(r)..outer.part(r)).rev() {
                cells.push((r, c));
            }
        }
        let grid = (0..outer.len()).map(|r| vec![0u8; outer.part(r)]).collect();
        let n = cells.len();
        SkewFiller { outer, inner, cells, grid, counts: vec![0; n + 2], target }
    }

    fn in_skew(&self, r: usize, c: usize) -> bool {
        c >= self.inner.part(r) && c < self.outer.part(r)
    }

    fn run(&mut self, k: usize, max_used: usize, visit: &mut impl FnMut(&[usize])) {
        if k == self.cells.len() {
            visit(&self.counts[1..=max_used]);
            return;
        }
        let (r, c) = self.cells[k];
        // Reading right to left, the cell to the right is already filled and bounds us above.
        let upper = if self.in_skew(r, c + 1) { self.grid[r][c + 1] as usize } else { usize::MAX };
        let lower = if r > 0 && self.in_skew(r - 1, c) { self.grid[r - 1][c] as usize + 1 } else { 1 };
        let hi = upper.min(max_used + 1);
        for v in lower..=hi {
            if v > 1 && self.counts[v - 1] <= self.counts[v] {
                continue;
            }
            if let Some(t) = self.target {
                if self.counts[v] >= t.part(v - 1) {
                    continue;
                }
            }
            self.grid[r][c] = v as u8;
            self.counts[v] += 1;
            self.run(k + 1, max_used.max(v), visit);
            self.counts[v] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

/// Number of LR fillings of `outer/inner` with content `content`.
///
/// Returns 0 whenever the sizes do not add up or `inner` does not fit in `outer`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if inner.size() + content.size() != outer.size() || !outer.contains(inner) || !outer.contains(content) {
        return 0;
    }
    let mut filler = SkewFiller::new(outer, inner, Some(content));
    let mut count = 0u64;
    filler.run(0, 0, &mut |counts| {
        if counts.len() == content.len() && counts.iter().zip(content.parts()).all(|(a, b)| a == b) {
            count += 1;
        }
    });
    count
}

/// All contents of LR fillings of `outer/inner` with their multiplicities.
pub fn skew_contents(outer: &Partition, inner: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !outer.contains(inner) {
        return out;
    }
    let mut filler = SkewFiller::new(outer, inner, None);
    filler.run(0, 0, &mut |counts| {
        let nu = Partition::from_parts_unchecked(counts.to_vec());
        *out.entry(nu).or_insert(0) += 1;
    });
    out
}

/// Restriction of `V_λ` to `S_d × S_{|λ|-d}`: every `(μ, ν)` with `c(λ; μ, ν) > 0`.
pub fn lr_restrict(lambda: &Partition, d: usize) -> Result<BTreeMap<(Partition, Partition), u64>> {
    if d > lambda.size() {
        return Err(Error::Invalid(format!("cannot split {lambda} at {d}")));
    }
    Ok(cached_restrict(lambda, d))
}

type RestrictMap = BTreeMap<(Partition, Partition), u64>;

fn restrict_cache() -> &'static Mutex<HashMap<(Partition, usize), RestrictMap>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), RestrictMap>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

type ProductCache = Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>>;

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn cached_restrict(lambda: &Partition, d: usize) -> RestrictMap {
    let key = (lambda.clone(), d);
    if let Some(hit) = restrict_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut out = BTreeMap::new();
    for mu in Partition::all_within(d, Some(lambda)) {
        for (nu, c) in skew_contents(lambda, &mu) {
            out.insert((mu.clone(), nu), c);
        }
    }
    restrict_cache().lock().unwrap().entry(key).or_insert(out).clone()
}

/// Induction product `V_μ ∘ V_ν = Σ_λ c(λ; μ, ν) V_λ`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let key = (a.clone(), b.clone());
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let n = a.size() + b.size();
    let mut out = BTreeMap::new();
    for lambda in Partition::all(n) {
        if !lambda.contains(a) || !lambda.contains(b) {
            continue;
        }
        let c = lr_coefficient(&lambda, a, b);
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    product_cache().lock().unwrap().entry(key).or_insert(out).clone()
}

/// The contents `ν` with `c([N-2i, 2^i]; μ, ν) = 1`, read off from the closed
/// classification for fat hooks instead of enumerating fillings.
///
/// `μ` has the shape `[p, 2^ℓ, 1^m]`. The ones of `ν` fill the tail of the
/// first row, possibly with one extra 1 atop each of the two columns; the four
/// admissible `(q, s)` for `ν = [q, 2^s, 1^t]` are
/// `(N-2i-p, σ)`, `(N-2i-p+1, σ)`, `(N-2i-p+1, σ-1)`, `(N-2i-p+2, σ-1)` with
/// `σ = p + i - d + ℓ`. An extra 1 on the second column alone needs `p ≥ 2`,
/// and an extra 1 on the first column alone needs a nonempty first skew row.
pub fn fat_hook_pairs(n: usize, i: usize, mu: &Partition) -> Result<Vec<Partition>> {
    if n < 2 * i || (i > 0 && n - 2 * i < 2) {
        return Err(Error::Precondition(format!("[{}, 2^{i}] is not a fat hook partition", n as i64 - 2 * i as i64)));
    }
    let arm = n - 2 * i;
    let mut parts = vec![arm];
    parts.extend(std::iter::repeat_n(2, i));
    let lambda = Partition::normalized(parts);
    if !lambda.contains(mu) {
        return Err(Error::Precondition(format!("{mu} does not fit inside {lambda}")));
    }
    let d = mu.size();
    if d == 0 {
        return Ok(vec![lambda]);
    }
    let p = mu.part(0) as i64;
    let ell = mu.parts()[1..].iter().filter(|&&x| x == 2).count() as i64;
    let (n, i, d, arm) = (n as i64, i as i64, d as i64, arm as i64);
    let sigma = p + i - d + ell;
    let cases = [
        (arm - p, sigma, true),
        (arm - p + 1, sigma, p >= 2),
        (arm - p + 1, sigma - 1, p < arm),
        (arm - p + 2, sigma - 1, true),
    ];
    let rest = n - d;
    let mut out = Vec::new();
    for (q, s, admissible) in cases {
        if !admissible || q < 0 || s < 0 {
            continue;
        }
        let t = rest - q - 2 * s;
        if t < 0 {
            continue;
        }
        if rest == 0 {
            if q == 0 && s == 0 {
                out.push(Partition::empty());
            }
            continue;
        }
        if q == 1 && s > 0 {
            continue;
        }
        let mut nu = vec![q as usize];
        nu.extend(std::iter::repeat_n(2, s as usize));
        nu.extend(std::iter::repeat_n(1, t as usize));
        nu.retain(|&x| x > 0);
        let Ok(nu) = Partition::new(nu) else { continue };
        if lambda.contains(&nu) && !out.contains(&nu) {
            out.push(nu);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

//! Verification suites: reference values and property checks over the corpus.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::closed::{corank2_kl, glued_cycles_kl_on, lambda_kl_subdivision, split_kl, uniform_kl_sn};
use crate::corpus::{corank2_family, corpus, glued_family, CorpusEntry};
use crate::engine::{Engine, EquivariantMatroid};
use crate::error::{Error, Result};
use crate::gamma::{gamma_expansion, is_gamma_positive, GammaVerdict};
use crate::group::YoungGroup;
use crate::lr::{fat_hook_pairs, lr_restrict};
use crate::matroid::Matroid;
use crate::partition::Partition;
use crate::rep::{GradedVirtualRep, VirtualRep};
use crate::Label;

/// `[x^j] P` of `C_{5,6}` under `S_4 × S_5`, as pairs of partitions.
pub const GLUED_5_6: [&[(&str, &str)]; 4] = [
    &[("[4]", "[5]")],
    &[("[4]", "[4,1]"), ("[4]", "[3,2]"), ("[3,1]", "[5]"), ("[3,1]", "[4,1]"), ("[2,2]", "[5]")],
    &[
        ("[4]", "[2,2,1]"),
        ("[3,1]", "[4,1]"),
        ("[3,1]", "[3,2]"),
        ("[3,1]", "[3,1,1]"),
        ("[3,1]", "[2,2,1]"),
        ("[2,2]", "[4,1]"),
        ("[2,2]", "[3,2]"),
        ("[2,1,1]", "[4,1]"),
        ("[2,1,1]", "[3,1,1]"),
    ],
    &[
        ("[3,1]", "[2,2,1]"),
        ("[2,2]", "[2,2,1]"),
        ("[2,1,1]", "[2,2,1]"),
        ("[2,1,1]", "[2,1^3]"),
        ("[2,1,1]", "[3,1,1]"),
        ("[1^4]", "[2,1^3]"),
    ],
];

/// `[x^j] P` of `U_{8,9}` restricted to `S_4 × S_5`.
pub const UNIFORM_8_9: [&[(&str, &str)]; 4] = [
    &[("[4]", "[5]")],
    &[("[4]", "[5]"), ("[4]", "[4,1]"), ("[4]", "[3,2]"), ("[3,1]", "[5]"), ("[3,1]", "[4,1]"), ("[2,2]", "[5]")],
    &[
        ("[4]", "[3,2]"),
        ("[4]", "[2,2,1]"),
        ("[3,1]", "[4,1]"),
        ("[3,1]", "[3,2]"),
        ("[3,1]", "[3,1,1]"),
        ("[3,1]", "[2,2,1]"),
        ("[2,2]", "[5]"),
        ("[2,2]", "[4,1]"),
        ("[2,2]", "[3,2]"),
        ("[2,1,1]", "[4,1]"),
        ("[2,1,1]", "[3,1,1]"),
    ],
    &[
        ("[3,1]", "[2,2,1]"),
        ("[2,2]", "[2,2,1]"),
        ("[2,2]", "[3,2]"),
        ("[2,1,1]", "[2,2,1]"),
        ("[2,1,1]", "[2,1^3]"),
        ("[2,1,1]", "[3,1,1]"),
        ("[1^4]", "[2,1^3]"),
    ],
];

/// Builds `Σ_j x^j Σ V_a ⊗ V_[1] ⊗ V_b` (or without the middle factor).
pub fn expected_pairs(group: &YoungGroup, data: &[&[(&str, &str)]], middle: bool) -> Result<GradedVirtualRep> {
    let mut coeffs = Vec::new();
    for (j, terms) in data.iter().enumerate() {
        let text: Vec<String> =
            terms.iter().map(|(a, b)| if middle { format!("V{a}⊗V[1]⊗V{b}") } else { format!("V{a}⊗V{b}") }).collect();
        coeffs.push((j, VirtualRep::parse(group, &text.join(" + "))?));
    }
    GradedVirtualRep::from_coeffs(group.clone(), coeffs)
}

/// The outcome of one verification criterion.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} cases failed; first: {})",
                self.name,
                self.failures.len(),
                self.cases,
                self.failures[0]
            )
        }
    }
}

/// Runs `f` on every case in parallel. `Ok(None)` is a pass and `Ok(Some(msg))`
/// or an error is a failure. Failures keep the case order.
fn run_cases<C: Sync>(name: &str, cases: &[C], f: impl Fn(&C) -> Result<Option<String>> + Sync) -> Check {
    let failures = cases
        .par_iter()
        .map(|c| match f(c) {
            Ok(r) => r,
            Err(e) => Some(e.to_string()),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Check { name: name.to_string(), cases: cases.len(), failures }
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(msg())
    }
}

fn labels(a: Label, b: Label) -> Vec<Label> {
    (a..=b).collect()
}

fn group(text: &str) -> YoungGroup {
    text.parse().expect("static group literal")
}

/// Pairs of a named matroid and one of its actions.
fn actions_of(entries: &[CorpusEntry]) -> Vec<(String, EquivariantMatroid)> {
    entries.iter().flat_map(|e| e.actions().into_iter().map(|a| (e.name.clone(), a))).collect()
}

/// Criterion 1: the coefficient lists of `C_{5,6}` and of `U_{8,9}` under `S_4 × S_5`.
pub fn reference_coefficients() -> Check {
    let cases = ["glued", "uniform-direct", "uniform-closed"];
    run_cases("C_{5,6} and U_{8,9} coefficient lists under S_4 x S_5", &cases, |&case| {
        let (got, want) = match case {
            "glued" => {
                let w = group("{1..4}|{5}|{6..10}");
                let m = Matroid::glued_cycles(&labels(1, 5), &labels(5, 10), 5)?;
                (crate::engine::kl(&EquivariantMatroid::new(m, w.clone())?)?, expected_pairs(&w, &GLUED_5_6, true)?)
            }
            "uniform-direct" => {
                let w = group("{1..4}|{5..9}");
                let m = Matroid::uniform(8, &labels(1, 9))?;
                (crate::engine::kl(&EquivariantMatroid::new(m, w.clone())?)?, expected_pairs(&w, &UNIFORM_8_9, false)?)
            }
            _ => {
                let w = group("{1..4}|{5..9}");
                (uniform_kl_sn(8, 9)?.restrict(&w)?, expected_pairs(&w, &UNIFORM_8_9, false)?)
            }
        };
        Ok(expect(got == want, || format!("{case}: got {got}, expected {want}")))
    })
}

/// Criterion 2: non-equivariant polynomials and dimensions of the equivariant ones.
pub fn reference_dimensions() -> Check {
    let cases: Vec<(&str, Vec<i128>)> = vec![("glued", vec![1, 26, 113, 74]), ("uniform", vec![1, 27, 120, 84])];
    run_cases("non-equivariant P of C_{5,6} and U_{8,9}", &cases, |(case, want)| {
        let (m, w) = if *case == "glued" {
            (Matroid::glued_cycles(&labels(1, 5), &labels(5, 10), 5)?, group("{1..4}|{5}|{6..10}"))
        } else {
            (Matroid::uniform(8, &labels(1, 9))?, group("{1..4}|{5..9}"))
        };
        let (p, _) = crate::engine::nonequivariant(&m)?;
        let eq = crate::engine::kl(&EquivariantMatroid::new(m, w)?)?.dimensions();
        Ok(expect(&p == want && &eq == want, || format!("{case}: got {p:?} and {eq:?}, expected {want:?}")))
    })
}

/// `{1,2}` as one block, the other elements fixed.
fn s2_group(n: Label) -> YoungGroup {
    let mut blocks = vec![vec![1, 2]];
    blocks.extend((3..=n).map(|x| vec![x]));
    YoungGroup::new(blocks).expect("valid blocks")
}

/// Criterion 3: `Z` of Boolean matroids under `S_2` is not Γ-positive.
pub fn gamma_failure() -> Check {
    let ns: Vec<Label> = (2..=8).collect();
    run_cases("Z of U_{n,n} under S_2 is not Gamma-positive, 2 <= n <= 8", &ns, |&n| {
        let em = EquivariantMatroid::new(Matroid::boolean(&labels(1, n))?, s2_group(n))?;
        let z = crate::engine::z(&em)?;
        let v = is_gamma_positive(&z, n as usize)?;
        if n == 2 {
            let w = s2_group(2);
            let want = vec![VirtualRep::parse(&w, "V[2]")?, VirtualRep::parse(&w, "V[1,1] - V[2]")?];
            if v.gammas != want {
                return Ok(Some(format!("n = 2: Γ = {:?}", v.gammas)));
            }
        }
        Ok(expect(!v.is_positive(), || format!("n = {n}: Γ-positive")))
    })
}

/// Matroid families for the Γ-positivity survey.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `U_{n-1,n}`.
    Corank1,
    /// `U_{n,n}`.
    Boolean,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corank1" => Ok(Family::Corank1),
            "boolean" => Ok(Family::Boolean),
            _ => Err(Error::Parse(format!("unknown family {s:?}; expected corank1 or boolean"))),
        }
    }
}

/// Group actions for the survey.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurveyGroup {
    /// Swaps 1 and 2.
    S2,
    /// The full symmetric group.
    Sn,
    Trivial,
}

impl FromStr for SurveyGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S2" => Ok(SurveyGroup::S2),
            "Sn" => Ok(SurveyGroup::Sn),
            "trivial" => Ok(SurveyGroup::Trivial),
            _ => Err(Error::Parse(format!("unknown group {s:?}; expected S2, Sn or trivial"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub n: usize,
    pub verdict: GammaVerdict,
}

/// Γ-positivity of `Z` for `n = 2..=max_n`.
pub fn survey_gamma(family: Family, action: SurveyGroup, max_n: usize) -> Result<Vec<SurveyRow>> {
    if max_n < 2 {
        return Err(Error::Invalid("the survey starts at n = 2".into()));
    }
    (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let e = labels(1, n as Label);
            let m = match family {
                Family::Corank1 => Matroid::uniform(n - 1, &e)?,
                Family::Boolean => Matroid::boolean(&e)?,
            };
            let w = match action {
                SurveyGroup::S2 => s2_group(n as Label),
                SurveyGroup::Sn => YoungGroup::symmetric(&e),
                SurveyGroup::Trivial => YoungGroup::trivial(&e),
            };
            let d = m.rank();
            let z = crate::engine::z(&EquivariantMatroid::new(m, w)?)?;
            Ok(SurveyRow { n, verdict: is_gamma_positive(&z, d)? })
        })
        .collect()
}

/// Criterion 4: `Z` of `U_{2,3}` and the corank 1 survey under `S_2`.
pub fn gamma_success() -> Check {
    let ns: Vec<usize> = (2..=10).collect();
    let rows = survey_gamma(Family::Corank1, SurveyGroup::S2, 10);
    run_cases("Z of U_{n-1,n} under S_2 is Gamma-positive, 2 <= n <= 10", &ns, |&n| {
        let rows = rows.as_ref().map_err(Clone::clone)?;
        let row = &rows[n - 2];
        if n == 3 {
            let w = s2_group(3);
            let em = EquivariantMatroid::new(Matroid::uniform(2, &labels(1, 3))?, w.clone())?;
            let z = crate::engine::z(&em)?;
            let two = GradedVirtualRep::constant(VirtualRep::parse(&w, "V[2]⊗V[1]")?).scale_by_binomial(2);
            let want = two.add(&GradedVirtualRep::monomial(VirtualRep::parse(&w, "V[1,1]⊗V[1]")?, 1))?;
            if z != want {
                return Ok(Some(format!("Z of U_{{2,3}} is {z}")));
            }
        }
        Ok(expect(row.n == n && row.verdict.is_positive(), || format!("n = {n}: witness {:?}", row.verdict.witness)))
    })
}

/// Criterion 5: the deletion formula against the recursion over `W_i`, and
/// the coloop extension at every coloop.
pub fn deletion_vs_recursion(max_n: usize) -> Result<Check> {
    let entries = corpus(max_n)?;
    let mut cases = Vec::new();
    for (name, em) in actions_of(&entries) {
        for &i in em.matroid().ground() {
            cases.push((name.clone(), em.clone(), i));
        }
    }
    let engine = Engine::global();
    Ok(run_cases(
        &format!("deletion formula matches the recursion on the corpus (n <= {max_n})"),
        &cases,
        |(name, em, i)| {
            let direct = em.stabilizer_of(*i)?;
            let (p, z) = engine.kl_z(&direct)?;
            if em.matroid().coloops().contains(i) {
                let zc = engine.coloop_extension(em, *i)?;
                return Ok(expect(zc == z, || format!("{name} {} coloop {i}: Z differs", em.group())));
            }
            let d = engine.deletion_formula(em, *i)?;
            Ok(expect(d.p == p && d.z == z, || format!("{name} {} at {i}: deletion differs", em.group())))
        },
    ))
}

/// Fat hooks `[N-2i, 2^i]` with `N <= max_n`.
fn fat_hooks(max_n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for i in 0..=n / 2 {
            if i == 0 || n - 2 * i >= 2 {
                out.push((n, i));
            }
        }
    }
    out
}

fn fat_hook_agrees(n: usize, i: usize, mu: &Partition) -> Result<Option<String>> {
    let mut parts = vec![n - 2 * i];
    parts.extend(std::iter::repeat_n(2, i));
    let lambda = Partition::new(parts)?;
    let fast: BTreeSet<Partition> = fat_hook_pairs(n, i, mu)?.into_iter().collect();
    let slow = lr_restrict(&lambda, mu.size())?;
    let general: BTreeSet<Partition> =
        slow.iter().filter(|((m, _), _)| m == mu).map(|((_, nu), _)| nu.clone()).collect();
    let simple = slow.iter().filter(|((m, _), _)| m == mu).all(|(_, &c)| c == 1);
    Ok(expect(fast == general && simple, || format!("{lambda} with {mu}: {fast:?} vs {general:?}")))
}

/// Criterion 6: the fat hook rule against general Littlewood-Richardson.
pub fn fat_hook_vs_lr(max_n: usize) -> Check {
    let mut cases = Vec::new();
    for (n, i) in fat_hooks(max_n) {
        let mut parts = vec![n - 2 * i];
        parts.extend(std::iter::repeat_n(2, i));
        let lambda = Partition::normalized(parts);
        for d in 0..=n {
            for mu in Partition::all_within(d, Some(&lambda)) {
                cases.push((n, i, mu));
            }
        }
    }
    let mu: Partition = "[3,2^2,1^3]".parse().expect("static partition");
    cases.push((20, 7, mu));
    run_cases(&format!("fat hook rule matches Littlewood-Richardson (N <= {max_n})"), &cases, |(n, i, mu)| {
        if *n == 20 {
            let count = fat_hook_pairs(*n, *i, mu)?.len();
            if count != 4 {
                return Ok(Some(format!("[6,2^7] with {mu}: {count} contents")));
            }
        }
        fat_hook_agrees(*n, *i, mu)
    })
}

/// One closed-form comparison.
#[derive(Clone, Debug)]
enum ClosedCase {
    Uniform(usize, usize),
    Glued(Label, Label),
    Split(String, EquivariantMatroid),
    Corank2(String, EquivariantMatroid),
    Subdivision(usize, usize, YoungGroup),
}

fn closed_case(case: &ClosedCase) -> Result<Option<String>> {
    let kl = crate::engine::kl;
    Ok(match case {
        ClosedCase::Uniform(k, n) => {
            let e = labels(1, *n as Label);
            let direct = kl(&EquivariantMatroid::new(Matroid::uniform(*k, &e)?, YoungGroup::symmetric(&e))?)?;
            expect(uniform_kl_sn(*k, *n)? == direct, || format!("uniform {k},{n}"))
        }
        ClosedCase::Glued(a, b) => {
            let n = a + b - 1;
            let m = Matroid::glued_cycles(&labels(1, *a), &labels(*a, n), *a)?;
            let w = YoungGroup::new(vec![labels(1, a - 1), vec![*a], labels(a + 1, n)])?;
            let direct = kl(&EquivariantMatroid::new(m, w)?)?;
            expect(glued_cycles_kl_on(&labels(1, *a), &labels(*a, n), *a)? == direct, || format!("glued {a},{b}"))
        }
        ClosedCase::Split(name, em) => {
            expect(split_kl(em)? == kl(em)?, || format!("split_kl on {name} under {}", em.group()))
        }
        ClosedCase::Corank2(name, em) => {
            expect(corank2_kl(em)? == kl(em)?, || format!("corank2_kl on {name} under {}", em.group()))
        }
        ClosedCase::Subdivision(r, n, w) => {
            let m = Matroid::lambda(*r, n - 2, &labels(1, *r as Label + 1), &labels(1, *n as Label))?;
            let direct = kl(&EquivariantMatroid::new(m, w.clone())?)?;
            expect(lambda_kl_subdivision(*r, *n, w)? == direct, || format!("subdivision r={r}, n={n} under {w}"))
        }
    })
}

/// Criterion 7: closed forms against the recursion.
pub fn closed_forms() -> Result<Check> {
    let mut cases = Vec::new();
    for n in 1..=7 {
        for k in 1..=n {
            cases.push(ClosedCase::Uniform(k, n));
        }
    }
    for a in 2..=9 {
        for b in 2..=11 - a {
            cases.push(ClosedCase::Glued(a, b));
        }
    }
    let mut split_entries = corpus(8)?;
    split_entries.extend(corank2_family(8)?);
    for (name, em) in actions_of(&split_entries) {
        if em.matroid().is_elementary_split() {
            cases.push(ClosedCase::Split(name, em));
        }
    }
    let mut corank2 = corank2_family(8)?;
    corank2.extend(corpus(8)?.into_iter().filter(|e| {
        let m = &e.matroid;
        m.len() >= 4 && m.rank() + 2 == m.len() && m.is_connected()
    }));
    corank2.extend(glued_family(10)?.into_iter().filter(|e| e.name == "glued:5,6"));
    for (name, em) in actions_of(&corank2) {
        cases.push(ClosedCase::Corank2(name, em));
    }
    for n in 4..=9usize {
        for r in 1..=n - 3 {
            let e = labels(1, n as Label);
            let mut moving = vec![labels(1, r as Label + 1)];
            moving.extend(labels(r as Label + 2, n as Label).into_iter().map(|x| vec![x]));
            cases.push(ClosedCase::Subdivision(r, n, YoungGroup::trivial(&e)));
            cases.push(ClosedCase::Subdivision(r, n, YoungGroup::new(moving)?));
        }
    }
    Ok(run_cases("closed forms match the recursion", &cases, closed_case))
}

/// The property checks on one action.
fn properties_of(name: &str, em: &EquivariantMatroid) -> Result<Option<String>> {
    let engine = Engine::global();
    let (p, z) = engine.kl_z(em)?;
    let w = em.group();
    let d = em.matroid().rank();
    let fail = |what: &str| Ok(Some(format!("{name} under {w}: {what}")));
    if !z.is_palindromic(d) || z.degree() != Some(d) {
        return fail("Z is not palindromic of degree rk");
    }
    if p.coeff(0) != VirtualRep::trivial(w.clone()) {
        return fail("constant term of P is not trivial");
    }
    if d > 0 && p.degree().is_some_and(|deg| 2 * deg >= d) {
        return fail("deg P >= rk/2");
    }
    if !p.is_honest() || !z.is_honest() {
        return fail("P or Z is not honest");
    }
    for j in 1..=d / 2 {
        if !z.coeff(j).sub(&z.coeff(j - 1))?.is_honest() {
            return fail(&format!("[x^{j}]Z - [x^{}]Z is not honest", j - 1));
        }
    }
    let (p_dims, z_dims) = engine.nonequivariant(em.matroid())?;
    if p.dimensions() != p_dims || z.dimensions() != z_dims {
        return fail("dimensions differ from the non-equivariant polynomials");
    }
    let mut refinements = vec![YoungGroup::trivial(em.matroid().ground())];
    if let Some(&x) = em.matroid().ground().first() {
        refinements.push(w.stabilizer(&[x].into_iter().collect()));
    }
    for sub in refinements {
        let (ps, zs) = engine.kl_z(&em.with_subgroup(sub.clone())?)?;
        if p.restrict(&sub)? != ps || z.restrict(&sub)? != zs {
            return fail(&format!("restriction to {sub} differs"));
        }
    }
    // Γ-expansion round trip; its positivity is not claimed in general.
    gamma_expansion(&z, d)?;
    Ok(None)
}

/// Criterion 8: properties of every computed `P` and `Z` on the corpus, and
/// dimension consistency of Littlewood-Richardson restriction.
pub fn properties(max_n: usize) -> Result<Vec<Check>> {
    let cases = actions_of(&corpus(max_n)?);
    let structural = run_cases(&format!("P and Z properties on the corpus (n <= {max_n})"), &cases, |(name, em)| {
        properties_of(name, em)
    });
    let mut shapes = Vec::new();
    for n in 0..=10 {
        for lambda in Partition::all(n) {
            for d in 0..=n {
                shapes.push((lambda.clone(), d));
            }
        }
    }
    let lr = run_cases("Littlewood-Richardson restriction preserves dimension (n <= 10)", &shapes, |(lambda, d)| {
        let total: u128 = lr_restrict(lambda, *d)?
            .iter()
            .map(|((mu, nu), &c)| c as u128 * mu.dim_specht() as u128 * nu.dim_specht() as u128)
            .sum();
        Ok(expect(total == lambda.dim_specht() as u128, || format!("{lambda} at {d}: {total}")))
    });
    Ok(vec![structural, lr])
}

/// The two suites offered on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Reference values and closed-form consistency (criteria 1-4, 6, 7).
    Reference,
    /// Deletion against recursion and the property checks (criteria 5, 8).
    Properties,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "reference" => Ok(Suite::Reference),
            "properties" => Ok(Suite::Properties),
            _ => Err(Error::Parse(format!("unknown suite {s:?}; expected paper (reference values) or properties"))),
        }
    }
}

/// Largest corpus matroid used by the deletion and property checks.
pub const CORPUS_MAX_N: usize = 9;

/// Runs one acceptance criterion, numbered 1 to 8.
pub fn criterion(number: usize) -> Result<Vec<Check>> {
    Ok(match number {
        1 => vec![reference_coefficients()],
        2 => vec![reference_dimensions()],
        3 => vec![gamma_failure()],
        4 => vec![gamma_success()],
        5 => vec![deletion_vs_recursion(CORPUS_MAX_N)?],
        6 => vec![fat_hook_vs_lr(14)],
        7 => vec![closed_forms()?],
        8 => properties(CORPUS_MAX_N)?,
        _ => return Err(Error::Invalid(format!("there is no criterion {number}"))),
    })
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>> {
    let numbers: &[usize] = match suite {
        Suite::Reference => &[1, 2, 3, 4, 6, 7],
        Suite::Properties => &[5, 8],
    };
    let mut out = Vec::new();
    for &n in numbers {
        out.extend(criterion(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_lists_have_the_stated_sizes() {
        let counts = |data: &[&[(&str, &str)]]| data.iter().map(|t| t.len()).collect::<Vec<_>>();
        assert_eq!(counts(&GLUED_5_6), vec![1, 5, 9, 6]);
        assert_eq!(counts(&UNIFORM_8_9), vec![1, 6, 11, 7]);
        let w = group("{1..4}|{5..9}");
        assert_eq!(expected_pairs(&w, &UNIFORM_8_9, false).unwrap().dimensions(), vec![1, 27, 120, 84]);
        let w = group("{1..4}|{5}|{6..10}");
        assert_eq!(expected_pairs(&w, &GLUED_5_6, true).unwrap().dimensions(), vec![1, 26, 113, 74]);
    }

    #[test]
    fn small_checks_pass() {
        assert!(gamma_failure().passed());
        assert!(fat_hook_vs_lr(8).passed());
        assert!(deletion_vs_recursion(5).unwrap().passed());
        assert!(properties(5).unwrap().iter().all(Check::passed));
    }

    #[test]
    fn survey_detects_failure() {
        let rows = survey_gamma(Family::Boolean, SurveyGroup::S2, 4).unwrap();
        assert!(rows.iter().all(|r| !r.verdict.is_positive()));
        assert!(survey_gamma(Family::Corank1, SurveyGroup::S2, 1).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!("paper".parse::<Suite>().unwrap(), Suite::Reference);
        assert!("other".parse::<Suite>().is_err());
        assert_eq!("S2".parse::<SurveyGroup>().unwrap(), SurveyGroup::S2);
        assert!(criterion(9).is_err());
    }
}

//! Γ-expansion of palindromic graded representations.

use crate::error::{Error, Result};
use crate::rep::{GradedVirtualRep, VirtualRep};

/// Outcome of a Γ-positivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVerdict {
    pub gammas: Vec<VirtualRep>,
    /// The first non-honest `Γ_j`, if any.
    pub witness: Option<(usize, VirtualRep)>,
}

impl GammaVerdict {
    pub fn is_positive(&self) -> bool {
        self.witness.is_none()
    }
}

/// Writes `f = Σ_j Γ_j x^j (1+x)^{d-2j}` and returns `Γ_0, ..., Γ_{⌊d/2⌋}`.
pub fn gamma_expansion(f: &GradedVirtualRep, d: usize) -> Result<Vec<VirtualRep>> {
    if !f.is_palindromic(d) {
        return Err(Error::NotPalindromic(d));
    }
    let mut current = f.clone();
    let mut out = Vec::with_capacity(d / 2 + 1);
    for j in 0..=d / 2 {
        let gamma = current.coeff(j);
        let piece = GradedVirtualRep::monomial(gamma.clone(), j).scale_by_binomial(d - 2 * j);
        current = current.sub(&piece)?;
        out.push(gamma);
    }
    if !current.is_zero() {
        return Err(Error::Internal(format!("Γ-expansion left a remainder {current}")));
    }
    Ok(out)
}

/// Rebuilds `Σ_j Γ_j x^j (1+x)^{d-2j}`.
pub fn gamma_reconstruct(gammas: &[VirtualRep], d: usize, group: &crate::YoungGroup) -> Result<GradedVirtualRep> {
    let mut out = GradedVirtualRep::zero(group.clone());
    for (j, g) in gammas.iter().enumerate() {
        if 2 * j > d {
            return Err(Error::Invalid(format!("Γ_{j} is beyond degree {d}")));
        }
        out = out.add(&GradedVirtualRep::monomial(g.clone(), j).scale_by_binomial(d - 2 * j))?;
    }
    Ok(out)
}

pub fn is_gamma_positive(f: &GradedVirtualRep, d: usize) -> Result<GammaVerdict> {
    let gammas = gamma_expansion(f, d)?;
    let witness = gammas.iter().enumerate().find(|(_, g)| !g.is_honest()).map(|(j, g)| (j, g.clone()));
    Ok(GammaVerdict { gammas, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{MultiPartition, YoungGroup};

    fn rep(w: &YoungGroup, terms: &[(&str, i64)]) -> VirtualRep {
        VirtualRep::from_terms(w.clone(), terms.iter().map(|(p, c)| (MultiPartition(vec![p.parse().unwrap()]), *c)))
            .unwrap()
    }

    #[test]
    fn boolean_two_fails() {
        let w: YoungGroup = "{1,2}".parse().unwrap();
        let two = rep(&w, &[("[2]", 1)]);
        let z = GradedVirtualRep::from_coeffs(
            w.clone(),
            [(0, two.clone()), (1, rep(&w, &[("[2]", 1), ("[1,1]", 1)])), (2, two.clone())],
        )
        .unwrap();
        let v = is_gamma_positive(&z, 2).unwrap();
        assert_eq!(v.gammas, vec![two.clone(), rep(&w, &[("[1,1]", 1), ("[2]", -1)])]);
        assert_eq!(v.witness.as_ref().unwrap().0, 1);
        assert!(!v.is_positive());
        assert_eq!(gamma_reconstruct(&v.gammas, 2, &w).unwrap(), z);
    }

    #[test]
    fn binomial_power_is_trivially_positive() {
        let w: YoungGroup = "{1}|{2,3}".parse().unwrap();
        for d in 0..6 {
            let f = GradedVirtualRep::constant(VirtualRep::trivial(w.clone())).scale_by_binomial(d);
            let g = gamma_expansion(&f, d).unwrap();
            assert_eq!(g[0], VirtualRep::trivial(w.clone()));
            assert!(g[1..].iter().all(VirtualRep::is_zero));
        }
    }

    #[test]
    fn rejects_non_palindromic() {
        let w: YoungGroup = "{1}".parse().unwrap();
        let f = GradedVirtualRep::constant(VirtualRep::trivial(w)).scale_by_binomial(2).shift(1);
        assert_eq!(gamma_expansion(&f, 2).unwrap_err(), Error::NotPalindromic(2));
        assert!(gamma_expansion(&f, 4).is_ok());
    }
}

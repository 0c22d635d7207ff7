//! Rational-curve descent chains in nilpotent Hessenberg varieties `B(N, H)`.
//!
//! `N = sum_{gamma in Phi_N} E_gamma` is modelled by its support `Phi_N`. A
//! torus-fixed flag `w·b` lies in `B(N, H)` iff `w^{-1}(Phi_N) ⊆ Phi_H`. For a
//! fixed point `w ≠ e` and a maximal inversion `gamma`, the curve `U_gamma w·b`
//! stays in the variety and limits to `s_gamma w·b`, with `s_gamma w` shorter.
//! Iterating reaches the base flag.

use std::fmt;

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;
use crate::weyl::{maximal_inversions, WeylElement, WeylGroup};

/// `Phi_N ⊆ Phi+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NilpotentSupport {
    roots: RootSet,
}

impl NilpotentSupport {
    pub fn new(rs: &RootSystem, roots: RootSet) -> Result<Self> {
        if let Some(bad) = roots.iter().find(|&id| !rs.is_positive(id)) {
            let shown = if bad < rs.num_roots() { rs.root(bad).to_string() } else { format!("id {bad}") };
            return Err(Error::NotPositive(shown));
        }
        Ok(NilpotentSupport { roots })
    }

    /// `N = 0`.
    pub fn zero() -> Self {
        NilpotentSupport::default()
    }

    /// The regular nilpotent `sum_{alpha in Delta} E_alpha`.
    pub fn regular(rs: &RootSystem) -> Self {
        NilpotentSupport { roots: rs.simple_set() }
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub w_before: WeylElement,
    /// Id of the positive root `gamma`.
    pub gamma: usize,
    pub w_after: WeylElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub start: WeylElement,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    pub fn end(&self) -> &WeylElement {
        self.steps.last().map_or(&self.start, |s| &s.w_after)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " -> {}", s.w_after)?;
        }
        Ok(())
    }
}

/// `w^{-1}(Phi_N) ⊆ Phi_H`.
pub fn is_fixed_point(rs: &RootSystem, w: &WeylElement, n: &NilpotentSupport, hess: &HessenbergSpace) -> bool {
    let winv = w.inverse(rs);
    n.roots.iter().all(|g| hess.contains(rs, winv.apply(g)))
}

/// Torus-fixed points of `B(N, H)`, in group order.
pub fn fixed_points<'a>(group: &'a WeylGroup, n: &NilpotentSupport, hess: &HessenbergSpace) -> Vec<&'a WeylElement> {
    let rs = group.root_system();
    group.elements().iter().filter(|w| is_fixed_point(rs, w, n, hess)).collect()
}

/// `Phi(gamma, N) = { c gamma + alpha ∈ Phi+ : c ∈ {1,2,3}, alpha ∈ Phi_N }`.
pub fn phi_gamma_n(rs: &RootSystem, gamma: usize, n: &NilpotentSupport) -> Result<RootSet> {
    if !rs.is_positive(gamma) {
        return Err(Error::NotPositive(rs.root(gamma).to_string()));
    }
    let g = rs.root(gamma).coeffs();
    let mut out = RootSet::new();
    let mut buf = vec![0i32; rs.rank()];
    for alpha in n.roots() {
        let a = rs.root(alpha).coeffs();
        for c in 1..=3 {
            for k in 0..buf.len() {
                buf[k] = c * g[k] + a[k];
            }
            if let Some(id) = rs.id_of_coeffs(&buf) {
                out.insert(id);
            }
        }
    }
    Ok(out)
}

/// Whether the curve `U_gamma w·b` is certified to lie in `B(N, H)`.
///
/// Requires `w` to be a fixed point and `gamma ∈ Phi_w^m`. Checks that
/// `Phi(gamma, N) ⊆ Phi_w^c` (so `u^{-1}·N` stays in `w·H`) and that the limit
/// point `s_gamma w` is again a fixed point.
pub fn curve_admissible(
    rs: &RootSystem,
    w: &WeylElement,
    gamma: usize,
    n: &NilpotentSupport,
    hess: &HessenbergSpace,
) -> Result<bool> {
    if !is_fixed_point(rs, w, n, hess) {
        return Err(Error::NotFixedPoint { w: w.to_string() });
    }
    if gamma >= rs.num_roots() || !maximal_inversions(rs, w).contains(gamma) {
        let shown = if gamma < rs.num_roots() { rs.root(gamma).to_string() } else { format!("id {gamma}") };
        return Err(Error::NotMaximal { gamma: shown, w: w.to_string() });
    }
    let support_ok = phi_gamma_n(rs, gamma, n)?.is_subset(&w.complement_inversions(rs));
    let limit = WeylElement::reflection(rs, gamma).compose(rs, w);
    Ok(support_ok && is_fixed_point(rs, &limit, n, hess))
}

/// One step down: picks the lexicographically smallest maximal inversion.
pub fn descend(rs: &RootSystem, w: &WeylElement, n: &NilpotentSupport, hess: &HessenbergSpace) -> Result<ChainStep> {
    if w.is_identity() {
        return Err(Error::IdentityDescent);
    }
    if !is_fixed_point(rs, w, n, hess) {
        return Err(Error::NotFixedPoint { w: w.to_string() });
    }
    let gamma = maximal_inversions(rs, w)
        .iter()
        .min_by(|&a, &b| rs.root(a).cmp(rs.root(b)))
        .ok_or_else(|| Error::Internal(format!("{w} has no maximal inversion")))?;
    if !curve_admissible(rs, w, gamma, n, hess)? {
        return Err(Error::Internal(format!("curve through {w} along {} is not admissible", rs.root(gamma))));
    }
    let w_after = WeylElement::reflection(rs, gamma).compose(rs, w);
    if w_after.length() >= w.length() {
        return Err(Error::Internal(format!("s_gamma {w} is not shorter")));
    }
    Ok(ChainStep { w_before: w.clone(), gamma, w_after })
}

/// Descends from `w` to the identity.
pub fn connect_chain(rs: &RootSystem, w: &WeylElement, n: &NilpotentSupport, hess: &HessenbergSpace) -> Result<Chain> {
    if !is_fixed_point(rs, w, n, hess) {
        return Err(Error::NotFixedPoint { w: w.to_string() });
    }
    let mut steps = Vec::new();
    let mut cur = w.clone();
    while !cur.is_identity() {
        let step = descend(rs, &cur, n, hess)?;
        cur = step.w_after.clone();
        steps.push(step);
    }
    Ok(Chain { start: w.clone(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_all;
    use crate::rootsys::leq;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::from_type(t).unwrap()).unwrap()
    }

    fn elt(rs: &RootSystem, w: &[usize]) -> WeylElement {
        WeylElement::from_word(rs, &w.iter().map(|i| i - 1).collect::<Vec<_>>()).unwrap()
    }

    fn supp(rs: &RootSystem, roots: &[&[i32]]) -> NilpotentSupport {
        NilpotentSupport::new(rs, roots.iter().map(|c| rs.id_of_coeffs(c).unwrap()).collect()).unwrap()
    }

    fn id(rs: &RootSystem, c: &[i32]) -> usize {
        rs.id_of_coeffs(c).unwrap()
    }

    #[test]
    fn fixed_point_examples() {
        let g = group("A2");
        let rs = g.root_system();
        let n = supp(rs, &[&[1, 0]]);
        assert_eq!(fixed_points(&g, &n, &HessenbergSpace::full(rs)).len(), 6);
        let regular = supp(rs, &[&[1, 0], &[0, 1]]);
        let fp: Vec<String> = fixed_points(&g, &regular, &HessenbergSpace::borel()).iter().map(|w| w.to_string()).collect();
        assert_eq!(fp, vec!["e"]);
        let theta = supp(rs, &[&[1, 1]]);
        let fp: Vec<String> = fixed_points(&g, &theta, &HessenbergSpace::borel()).iter().map(|w| w.to_string()).collect();
        assert_eq!(fp, vec!["e", "s1", "s2"]);
    }

    #[test]
    fn phi_gamma_n_examples() {
        let a2 = RootSystem::from_type("A2").unwrap();
        assert!(phi_gamma_n(&a2, id(&a2, &[1, 1]), &supp(&a2, &[&[1, 0]])).unwrap().is_empty());
        assert_eq!(
            phi_gamma_n(&a2, id(&a2, &[1, 0]), &supp(&a2, &[&[0, 1]])).unwrap(),
            RootSet::from_ids([id(&a2, &[1, 1])])
        );
        let g2 = RootSystem::from_type("G2").unwrap();
        assert_eq!(
            phi_gamma_n(&g2, id(&g2, &[1, 0]), &supp(&g2, &[&[0, 1]])).unwrap(),
            RootSet::from_ids([id(&g2, &[1, 1]), id(&g2, &[2, 1]), id(&g2, &[3, 1])])
        );
        assert!(phi_gamma_n(&a2, a2.neg(0), &NilpotentSupport::zero()).is_err());
    }

    #[test]
    fn phi_gamma_n_dominates_gamma() {
        for t in ["A3", "B3", "C3", "G2"] {
            let rs = RootSystem::from_type(t).unwrap();
            for gamma in 0..rs.num_positive() {
                for alpha in 0..rs.num_positive() {
                    let n = NilpotentSupport::new(&rs, RootSet::from_ids([alpha])).unwrap();
                    for up in &phi_gamma_n(&rs, gamma, &n).unwrap() {
                        assert!(up != gamma && leq(rs.root(gamma), rs.root(up)));
                    }
                }
            }
        }
    }

    #[test]
    fn curve_admissible_examples() {
        let g = group("A2");
        let rs = g.root_system();
        let theta = supp(rs, &[&[1, 1]]);
        let a1 = supp(rs, &[&[1, 0]]);
        let full = HessenbergSpace::full(rs);
        assert!(curve_admissible(rs, &elt(rs, &[1]), id(rs, &[1, 0]), &theta, &HessenbergSpace::borel()).unwrap());
        assert!(curve_admissible(rs, g.longest(), id(rs, &[1, 1]), &a1, &full).unwrap());
        assert!(curve_admissible(rs, &elt(rs, &[1, 2]), id(rs, &[1, 1]), &a1, &full).unwrap());
        assert!(matches!(
            curve_admissible(rs, &elt(rs, &[1, 2]), id(rs, &[1, 1]), &theta, &HessenbergSpace::borel()),
            Err(Error::NotFixedPoint { .. })
        ));
        assert!(matches!(
            curve_admissible(rs, &elt(rs, &[1, 2]), id(rs, &[1, 0]), &a1, &full),
            Err(Error::NotMaximal { .. })
        ));
    }

    #[test]
    fn descend_examples() {
        let g = group("A2");
        let rs = g.root_system();
        let theta = supp(rs, &[&[1, 1]]);
        let a1 = supp(rs, &[&[1, 0]]);
        let full = HessenbergSpace::full(rs);
        let s = descend(rs, &elt(rs, &[1]), &theta, &HessenbergSpace::borel()).unwrap();
        assert_eq!((s.gamma, s.w_after.to_string()), (id(rs, &[1, 0]), "e".into()));
        let s = descend(rs, g.longest(), &a1, &full).unwrap();
        assert_eq!((s.gamma, s.w_after.to_string()), (id(rs, &[1, 1]), "e".into()));
        let s = descend(rs, &elt(rs, &[1, 2]), &a1, &full).unwrap();
        assert_eq!((s.gamma, s.w_after.to_string()), (id(rs, &[1, 1]), "s1".into()));
        assert_eq!(descend(rs, g.identity(), &a1, &full), Err(Error::IdentityDescent));
    }

    #[test]
    fn chain_examples() {
        let g = group("A2");
        let rs = g.root_system();
        let a1 = supp(rs, &[&[1, 0]]);
        let theta = supp(rs, &[&[1, 1]]);
        assert!(connect_chain(rs, g.identity(), &theta, &HessenbergSpace::borel()).unwrap().steps.is_empty());
        let c = connect_chain(rs, &elt(rs, &[1]), &theta, &HessenbergSpace::borel()).unwrap();
        assert_eq!(c.steps.len(), 1);
        let c = connect_chain(rs, &elt(rs, &[1, 2]), &a1, &HessenbergSpace::full(rs)).unwrap();
        let got: Vec<(String, usize, String)> =
            c.steps.iter().map(|s| (s.w_before.to_string(), s.gamma, s.w_after.to_string())).collect();
        assert_eq!(
            got,
            vec![("s1 s2".into(), id(rs, &[1, 1]), "s1".into()), ("s1".into(), id(rs, &[1, 0]), "e".into())]
        );
        assert_eq!(c.to_string(), "s1 s2 -> s1 -> e");
    }

    #[test]
    fn zero_nilpotent_and_springer_cases() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let g = group(t);
            let rs = g.root_system();
            for h in enumerate_all(rs).unwrap() {
                assert_eq!(fixed_points(&g, &NilpotentSupport::zero(), &h).len(), g.order());
            }
            let fp = fixed_points(&g, &NilpotentSupport::regular(rs), &HessenbergSpace::borel());
            assert_eq!(fp.len(), 1, "{t}");
            assert!(fp[0].is_identity());
        }
    }
}

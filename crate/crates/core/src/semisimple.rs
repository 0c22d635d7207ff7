//! Cell dimensions, Betti numbers and connectedness of semisimple Hessenberg
//! varieties `B(S, H)`.
//!
//! The semisimple element `S` enters only through its centralizer, a standard
//! Levi datum. Every Bruhat cell `X_w` meets `B(S, H)` in an affine space of
//! dimension `|Phi_y| + |Phi_v ∩ v(Phi_H^-)|` where `w = y v` is the parabolic
//! factorization, so the Betti numbers are the histogram of those dimensions.

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::rootsys::RootSystem;
use crate::weyl::{coset_decompose, weyl_from_inversions, LeviDatum, WeylElement, WeylGroup};

/// One affine cell `X_w ∩ B(S, H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub w: WeylElement,
    pub y: WeylElement,
    pub v: WeylElement,
    pub dim: usize,
    pub ambient_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// `counts[k]` is the number of cells of dimension `k`; length `|Phi+| + 1`.
    pub counts: Vec<usize>,
    pub cells: Vec<CellReport>,
}

impl BettiTable {
    pub fn n0(&self) -> usize {
        self.counts[0]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn poincare(&self) -> String {
        poincare_polynomial(&self.counts)
    }
}

/// Renders `sum_k n_k q^k`, e.g. `1 + 4q + q^2`.
pub fn poincare_polynomial(counts: &[usize]) -> String {
    let terms: Vec<String> = counts
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(k, &n)| match (k, n) {
            (0, n) => n.to_string(),
            (1, 1) => "q".to_string(),
            (1, n) => format!("{n}q"),
            (k, 1) => format!("q^{k}"),
            (k, n) => format!("{n}q^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `|Phi_v ∩ v(Phi_H^-)|`, the `W^M` part of the dimension formula.
fn min_rep_dimension(v: &WeylElement, hess: &HessenbergSpace) -> usize {
    v.inversion_set().intersection(&v.apply_set(hess.neg_roots())).len()
}

pub fn cell_report(rs: &RootSystem, w: &WeylElement, levi: &LeviDatum, hess: &HessenbergSpace) -> CellReport {
    let (y, v) = coset_decompose(rs, w, levi);
    let dim = y.length() + min_rep_dimension(&v, hess);
    CellReport { w: w.clone(), y, v, dim, ambient_length: w.length() }
}

/// `dim(X_w ∩ B(S, H)) = |Phi_y| + |Phi_v ∩ v(Phi_H^-)|`.
pub fn cell_dimension(rs: &RootSystem, w: &WeylElement, levi: &LeviDatum, hess: &HessenbergSpace) -> usize {
    cell_report(rs, w, levi, hess).dim
}

pub fn betti_numbers(group: &WeylGroup, levi: &LeviDatum, hess: &HessenbergSpace) -> BettiTable {
    let rs = group.root_system();
    let mut counts = vec![0; rs.num_positive() + 1];
    let cells: Vec<CellReport> = group
        .elements()
        .iter()
        .map(|w| {
            let cell = cell_report(rs, w, levi, hess);
            counts[cell.dim] += 1;
            cell
        })
        .collect();
    BettiTable { counts, cells }
}

/// `n_0 = 1`.
pub fn is_connected_by_betti(group: &WeylGroup, levi: &LeviDatum, hess: &HessenbergSpace) -> bool {
    // Only the zero-dimensional cells matter, so skip building the table.
    let rs = group.root_system();
    group
        .elements()
        .iter()
        .filter(|w| cell_dimension(rs, w, levi, hess) == 0)
        .take(2)
        .count()
        == 1
}

/// Connected iff `-Delta ⊆ Phi_H^-`, except that a central `S` (Levi equal to
/// everything) gives the full flag variety, which is connected.
pub fn is_connected_by_criterion(rs: &RootSystem, levi: &LeviDatum, hess: &HessenbergSpace) -> bool {
    levi.is_full() || hess.contains_negative_simples(rs)
}

/// A point cell certifying disconnection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// 0-based index of the simple root `alpha` with `-alpha ∉ Phi_H^-`.
    pub alpha: usize,
    /// `v ∈ W^M`, `v ≠ e`, with `v^{-1}(Phi_v) ∩ Phi_H^- = ∅`.
    pub v: WeylElement,
}

/// Builds `v ≠ e` in `W^M` whose cell is a point.
///
/// Picks the smallest `alpha` with `-alpha ∉ Phi_H^-`. If `alpha ∈ Phi(u_Q)`
/// then `v = s_alpha`. Otherwise take `w` with `Phi_w = Phi_{>= alpha}` and
/// let `v` be the `W^M` factor of `w^{-1}`.
pub fn disconnection_witness(rs: &RootSystem, levi: &LeviDatum, hess: &HessenbergSpace) -> Result<Witness> {
    if levi.is_full() {
        return Err(Error::CentralLevi);
    }
    let alpha = (0..rs.rank())
        .find(|&i| !hess.neg_roots().contains(rs.neg(rs.simple_id(i))))
        .ok_or(Error::NoWitness)?;
    let v = if !levi.contains_simple(alpha) {
        WeylElement::simple(rs, alpha)
    } else {
        let w = weyl_from_inversions(rs, &rs.upper_set(alpha))?;
        let (_, v) = coset_decompose(rs, &w.inverse(rs), levi);
        v
    };
    if v.is_identity() {
        return Err(Error::Internal(format!("witness for alpha_{} is the identity", alpha + 1)));
    }
    Ok(Witness { alpha, v })
}

/// Checks every property a witness must satisfy.
pub fn witness_is_sound(rs: &RootSystem, levi: &LeviDatum, hess: &HessenbergSpace, witness: &Witness) -> bool {
    let v = &witness.v;
    let pulled_back = v.inverse(rs).apply_set(v.inversion_set());
    let upper = rs.negate_set(&rs.upper_set(witness.alpha));
    !v.is_identity()
        && levi.is_min_rep(v)
        && pulled_back.is_disjoint(hess.neg_roots())
        && cell_dimension(rs, v, levi, hess) == 0
        && upper.is_disjoint(hess.neg_roots())
}

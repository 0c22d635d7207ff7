//! Hessenberg spaces, keyed by their negative roots.

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{Family, Root, RootSystem};

/// Largest rank accepted by [`enumerate_all`].
pub const MAX_ENUMERATION_RANK: usize = 4;

/// A Hessenberg space `H`, recorded as `Phi_H^-` (ids of negative roots).
/// `Phi+` and the torus are always included and never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HessenbergSpace {
    neg: RootSet,
}

impl HessenbergSpace {
    /// `H = b`: the Springer case.
    pub fn borel() -> Self {
        HessenbergSpace { neg: RootSet::new() }
    }

    /// `H = g`: the full flag variety.
    pub fn full(rs: &RootSystem) -> Self {
        HessenbergSpace { neg: rs.negative_set() }
    }

    /// `Phi_H^-` as root ids.
    pub fn neg_roots(&self) -> &RootSet {
        &self.neg
    }

    /// `Phi_H = Phi+ ⊔ Phi_H^-`.
    pub fn full_set(&self, rs: &RootSystem) -> RootSet {
        rs.positive_set().union(&self.neg)
    }

    pub fn contains(&self, rs: &RootSystem, id: usize) -> bool {
        rs.is_positive(id) || self.neg.contains(id)
    }

    /// `Phi_H^-` as coefficient vectors, in id order.
    pub fn neg_root_list(&self, rs: &RootSystem) -> Vec<Root> {
        self.neg.iter().map(|id| rs.root(id).clone()).collect()
    }

    /// Criterion for connectedness of semisimple Hessenberg varieties:
    /// `-Delta ⊆ Phi_H^-`.
    pub fn contains_negative_simples(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| self.neg.contains(rs.neg(rs.simple_id(i))))
    }
}

/// Checks closure of `Phi+ ⊔ neg` under addition of positive roots.
///
/// On failure reports `(beta, alpha, beta + alpha)` with `beta` in `Phi_H`,
/// `alpha` positive and the sum a root outside `Phi_H`.
pub fn validate(rs: &RootSystem, neg: &RootSet) -> Result<HessenbergSpace> {
    if let Some(bad) = neg.iter().find(|&id| rs.is_positive(id) || id >= rs.num_roots()) {
        let shown = if bad < rs.num_roots() { rs.root(bad).to_string() } else { format!("id {bad}") };
        return Err(Error::NotNegative(shown));
    }
    // beta positive never fails: beta + alpha is then positive.
    for beta in neg {
        for alpha in 0..rs.num_positive() {
            if let Some(sum) = rs.add(beta, alpha) {
                if !rs.is_positive(sum) && !neg.contains(sum) {
                    return Err(Error::NotHessenberg {
                        beta: rs.root(beta).to_string(),
                        alpha: rs.root(alpha).to_string(),
                        sum: rs.root(sum).to_string(),
                    });
                }
            }
        }
    }
    Ok(HessenbergSpace { neg: *neg })
}

/// [`validate`] over explicit roots.
pub fn validate_roots(rs: &RootSystem, roots: &[Root]) -> Result<HessenbergSpace> {
    let mut set = RootSet::new();
    for r in roots {
        let id = rs.require(r)?;
        if rs.is_positive(id) {
            return Err(Error::NotNegative(r.to_string()));
        }
        set.insert(id);
    }
    validate(rs, &set)
}

/// Every Hessenberg space, ordered by `|Phi_H^-|` and then bitset value.
///
/// `-Phi_H^-` ranges over the lower order ideals of the root poset; they are
/// grown along the height order, which is a linear extension.
pub fn enumerate_all(rs: &RootSystem) -> Result<Vec<HessenbergSpace>> {
    if rs.rank() > MAX_ENUMERATION_RANK {
        return Err(Error::RankGuard { rank: rs.rank(), limit: MAX_ENUMERATION_RANK });
    }
    Ok(enumerate_unguarded(rs))
}

/// [`enumerate_all`] without the rank guard.
pub fn enumerate_unguarded(rs: &RootSystem) -> Vec<HessenbergSpace> {
    let p = rs.num_positive();
    // lower covers of each positive root: gamma - alpha_i when positive
    let covers: Vec<Vec<usize>> = (0..p)
        .map(|g| {
            (0..rs.rank())
                .filter_map(|i| rs.add(g, rs.neg(rs.simple_id(i))))
                .filter(|&d| rs.is_positive(d))
                .collect()
        })
        .collect();
    let mut ideals = Vec::new();
    grow(&covers, 0, RootSet::new(), &mut ideals);
    let mut spaces: Vec<HessenbergSpace> = ideals
        .into_iter()
        .map(|ideal| HessenbergSpace { neg: rs.negate_set(&ideal) })
        .collect();
    spaces.sort_by(|a, b| a.neg.len().cmp(&b.neg.len()).then_with(|| a.neg.cmp(&b.neg)));
    spaces
}

fn grow(covers: &[Vec<usize>], next: usize, ideal: RootSet, out: &mut Vec<RootSet>) {
    if next == covers.len() {
        out.push(ideal);
        return;
    }
    grow(covers, next + 1, ideal, out);
    if covers[next].iter().all(|&c| ideal.contains(c)) {
        let mut with = ideal;
        with.insert(next);
        grow(covers, next + 1, with, out);
    }
}

/// The type `A_{n-1}` space of a Hessenberg function `h: {1..n} -> {1..n}`
/// (1-based values): `e_i - e_j` with `i > j` lies in `H` iff `i <= h(j)`.
pub fn from_hessenberg_function(rs: &RootSystem, h: &[usize]) -> Result<HessenbergSpace> {
    let n = h.len();
    if rs.cartan().family() != Family::A || rs.rank() + 1 != n {
        return Err(Error::HessenbergFunction(format!(
            "a function of length {n} needs type A{}, not {}",
            n.saturating_sub(1),
            rs.cartan()
        )));
    }
    for (j, &hj) in h.iter().enumerate() {
        if hj < j + 1 || hj > n {
            return Err(Error::HessenbergFunction(format!("h({}) = {hj} must lie in {}..={n}", j + 1, j + 1)));
        }
        if j > 0 && hj < h[j - 1] {
            return Err(Error::HessenbergFunction(format!("h is decreasing at {}", j + 1)));
        }
    }
    let mut neg = RootSet::new();
    for j in 1..=n {
        for i in (j + 1)..=h[j - 1] {
            // e_i - e_j = -(alpha_j + ... + alpha_{i-1})
            let mut c = vec![0i32; n - 1];
            c[(j - 1)..(i - 1)].iter_mut().for_each(|x| *x = -1);
            neg.insert(rs.id_of_coeffs(&c).expect("type A root"));
        }
    }
    validate(rs, &neg)
}

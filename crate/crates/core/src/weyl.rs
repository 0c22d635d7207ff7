//! Weyl groups as permutations of root ids.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::{leq, RootSystem};

/// Default refusal threshold for [`enumerate_weyl`].
pub const DEFAULT_ELEMENT_CAP: usize = 60_000;

/// An element `w` of the Weyl group, stored as its action on root ids.
///
/// `perm[id]` is the id of `w(root(id))`. The inversion set
/// `Phi_w = { gamma > 0 : w^{-1}(gamma) < 0 }` and the lexicographically
/// smallest reduced word are cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Box<[u16]>,
    inversions: RootSet,
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            perm: (0..rs.num_roots() as u16).collect(),
            inversions: RootSet::new(),
            word: Vec::new(),
        }
    }

    /// The simple reflection `s_{i+1}`.
    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        Self::from_perm(rs, rs.simple_reflection_table(i).into())
    }

    /// The reflection `s_gamma` in an arbitrary root.
    pub fn reflection(rs: &RootSystem, id: usize) -> Self {
        Self::from_perm(rs, rs.reflection_table(id).into())
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}` of 0-based simple indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut perm: Vec<u16> = (0..rs.num_roots() as u16).collect();
        // Right to left: each step left-multiplies by the next letter.
        for &i in word.iter().rev() {
            if i >= rs.rank() {
                return Err(Error::SimpleIndex { index: i + 1, rank: rs.rank() });
            }
            let s = rs.simple_reflection_table(i);
            perm = perm.iter().map(|&x| s[x as usize]).collect();
        }
        Ok(Self::from_perm(rs, perm.into()))
    }

    pub fn from_perm(rs: &RootSystem, perm: Box<[u16]>) -> Self {
        let inversions = inversions_of(rs, &perm);
        let word = canonical_word(rs, inversions);
        WeylElement { perm, inversions, word }
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// `l(w) = |Phi_w|`.
    pub fn length(&self) -> usize {
        self.inversions.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `Phi_w`.
    pub fn inversion_set(&self) -> &RootSet {
        &self.inversions
    }

    /// `Phi_w^c = Phi+ \ Phi_w`.
    pub fn complement_inversions(&self, rs: &RootSystem) -> RootSet {
        rs.positive_set().difference(&self.inversions)
    }

    /// Lexicographically smallest reduced word, 0-based simple indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    #[inline]
    pub fn apply(&self, id: usize) -> usize {
        self.perm[id] as usize
    }

    pub fn apply_set(&self, set: &RootSet) -> RootSet {
        set.map(&self.perm)
    }

    /// `self ∘ other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let perm: Box<[u16]> = other.perm.iter().map(|&x| self.perm[x as usize]).collect();
        Self::from_perm(rs, perm)
    }

    /// `s_{i+1} ∘ self`.
    pub fn left_mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let s = rs.simple_reflection_table(i);
        let perm: Box<[u16]> = self.perm.iter().map(|&x| s[x as usize]).collect();
        Self::from_perm(rs, perm)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (x, &wx) in self.perm.iter().enumerate() {
            inv[wx as usize] = x as u16;
        }
        Self::from_perm(rs, inv.into())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, i) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self})")
    }
}

fn inversions_of(rs: &RootSystem, perm: &[u16]) -> RootSet {
    let p = rs.num_positive();
    (p..rs.num_roots())
        .map(|d| perm[d] as usize)
        .filter(|&img| img < p)
        .collect()
}

// Greedy left descents: the smallest simple alpha_i in Phi_w gives the first
// letter of the lexicographically smallest reduced word.
fn canonical_word(rs: &RootSystem, inversions: RootSet) -> Vec<u8> {
    let mut word = Vec::with_capacity(inversions.len());
    let mut inv = inversions;
    while let Some(i) = (0..rs.rank()).find(|&i| inv.contains(rs.simple_id(i))) {
        word.push(i as u8);
        // Phi_{s_i w} = s_i(Phi_w \ {alpha_i})
        inv.remove(rs.simple_id(i));
        inv = inv.map(rs.simple_reflection_table(i));
    }
    debug_assert_eq!(word.len(), inversions.len());
    word
}

/// The full Weyl group with a lookup by inversion set.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    lookup: HashMap<RootSet, usize>,
}

/// Breadth-first closure of the simple reflections.
///
/// Elements come out sorted by length, then canonical word; the identity is
/// element 0. Fails when `cap` elements would be exceeded.
pub fn enumerate_weyl(rs: RootSystem, cap: usize) -> Result<WeylGroup> {
    let order = rs.cartan().weyl_order();
    if order > cap as u128 {
        return Err(Error::ElementCap { order: order.min(usize::MAX as u128) as usize, cap });
    }
    let mut elements = vec![WeylElement::identity(&rs)];
    let mut seen: HashMap<RootSet, usize> = HashMap::new();
    seen.insert(RootSet::new(), 0);
    let mut head = 0;
    while head < elements.len() {
        for i in 0..rs.rank() {
            // Only length-increasing steps are needed to reach everything.
            if elements[head].inversion_set().contains(rs.simple_id(i)) {
                continue;
            }
            let next = elements[head].left_mul_simple(&rs, i);
            if !seen.contains_key(next.inversion_set()) {
                if elements.len() >= cap {
                    return Err(Error::ElementCap { order: elements.len() + 1, cap });
                }
                seen.insert(*next.inversion_set(), elements.len());
                elements.push(next);
            }
        }
        head += 1;
    }
    elements.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word.cmp(&b.word)));
    let lookup = elements.iter().enumerate().map(|(k, w)| (*w.inversion_set(), k)).collect();
    Ok(WeylGroup { rs, elements, lookup })
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        enumerate_weyl(rs, DEFAULT_ELEMENT_CAP)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &WeylElement {
        &self.elements[id]
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The simple reflections, in index order.
    pub fn generators(&self) -> Vec<&WeylElement> {
        (0..self.rs.rank())
            .map(|i| &self.elements[self.lookup[&RootSet::from_ids([self.rs.simple_id(i)])]])
            .collect()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.lookup.get(w.inversion_set()).copied()
    }

    pub fn by_inversions(&self, set: &RootSet) -> Option<&WeylElement> {
        self.lookup.get(set).map(|&k| &self.elements[k])
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("nonempty group")
    }

    /// Length generating function: entry `k` counts elements of length `k`.
    pub fn length_distribution(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rs.num_positive() + 1];
        for w in &self.elements {
            counts[w.length()] += 1;
        }
        counts
    }
}

/// Standard Levi subgroup data for a subset of simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDatum {
    simple_subset: Vec<usize>,
    mask: u64,
    phi_m: RootSet,
    phi_uq: RootSet,
    full: bool,
}

impl LeviDatum {
    /// `simple_subset` holds 0-based simple indices.
    pub fn new(rs: &RootSystem, simple_subset: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in simple_subset {
            if i >= rs.rank() {
                return Err(Error::SimpleIndex { index: i + 1, rank: rs.rank() });
            }
            mask |= 1 << i;
        }
        Ok(Self::from_mask(rs, mask))
    }

    pub fn from_mask(rs: &RootSystem, mask: u64) -> Self {
        let simple_subset: Vec<usize> = (0..rs.rank()).filter(|i| mask >> i & 1 == 1).collect();
        let phi_m: RootSet = (0..rs.num_roots())
            .filter(|&id| {
                rs.root(id).coeffs().iter().enumerate().all(|(i, &c)| c == 0 || mask >> i & 1 == 1)
            })
            .collect();
        let phi_uq = rs.positive_set().difference(&phi_m);
        LeviDatum { full: simple_subset.len() == rs.rank(), simple_subset, mask, phi_m, phi_uq }
    }

    /// The maximal torus: `Delta_M` empty.
    pub fn torus(rs: &RootSystem) -> Self {
        Self::from_mask(rs, 0)
    }

    pub fn simple_subset(&self) -> &[usize] {
        &self.simple_subset
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// `Phi(m)`, both signs.
    pub fn phi_m(&self) -> &RootSet {
        &self.phi_m
    }

    /// `Phi(u_Q) = Phi+ \ Phi(m)`.
    pub fn phi_uq(&self) -> &RootSet {
        &self.phi_uq
    }

    /// `Delta_M = Delta`, i.e. the semisimple element is central.
    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn contains_simple(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    /// Membership in `W_M`.
    pub fn in_levi_group(&self, w: &WeylElement) -> bool {
        w.inversion_set().is_subset(&self.phi_m)
    }

    /// Membership in the minimal coset representatives `W^M`.
    pub fn is_min_rep(&self, w: &WeylElement) -> bool {
        w.inversion_set().is_subset(&self.phi_uq)
    }
}

/// `w = y v` with `y` in `W_M`, `v` in `W^M`, `l(w) = l(y) + l(v)`.
///
/// Strips simple left descents lying in `Delta_M` until none remain.
pub fn coset_decompose(rs: &RootSystem, w: &WeylElement, levi: &LeviDatum) -> (WeylElement, WeylElement) {
    let mut y_word: Vec<usize> = Vec::new();
    let mut v = w.clone();
    while let Some(&i) = levi
        .simple_subset()
        .iter()
        .find(|&&i| v.inversion_set().contains(rs.simple_id(i)))
    {
        v = v.left_mul_simple(rs, i);
        y_word.push(i);
    }
    let y = WeylElement::from_word(rs, &y_word).expect("indices from the Levi datum");
    (y, v)
}

/// The unique `w` with `Phi_w = set`, for `set` closed with closed complement
/// in `Phi+`.
pub fn weyl_from_inversions(rs: &RootSystem, set: &RootSet) -> Result<WeylElement> {
    if let Some(bad) = set.iter().find(|&id| !rs.is_positive(id)) {
        return Err(Error::NotPositive(rs.root(bad).to_string()));
    }
    if let Some((a, b)) = rs.closure_violation(set) {
        return Err(Error::NotClosed { a: rs.root(a).to_string(), b: rs.root(b).to_string() });
    }
    let complement = rs.positive_set().difference(set);
    if let Some((a, b)) = rs.closure_violation(&complement) {
        return Err(Error::NotCoClosed { a: rs.root(a).to_string(), b: rs.root(b).to_string() });
    }
    // Peel: set = {alpha} ⊔ s_alpha(set'), w = s_alpha w'.
    let mut word = Vec::new();
    let mut cur = *set;
    while !cur.is_empty() {
        let i = (0..rs.rank())
            .find(|&i| cur.contains(rs.simple_id(i)))
            .ok_or(Error::NoSimpleRoot)?;
        cur.remove(rs.simple_id(i));
        cur = cur.map(rs.simple_reflection_table(i));
        if cur.iter().any(|id| !rs.is_positive(id)) {
            return Err(Error::Internal("peeled set left the positive roots".into()));
        }
        word.push(i);
    }
    let w = WeylElement::from_word(rs, &word)?;
    if w.inversion_set() != set {
        return Err(Error::Internal("reconstructed element has a different inversion set".into()));
    }
    Ok(w)
}

/// `Phi_w^m`: the maximal elements of `Phi_w` under coefficient dominance.
pub fn maximal_inversions(rs: &RootSystem, w: &WeylElement) -> RootSet {
    let inv = w.inversion_set();
    inv.iter()
        .filter(|&g| !inv.iter().any(|d| d != g && leq(rs.root(g), rs.root(d))))
        .collect()
}

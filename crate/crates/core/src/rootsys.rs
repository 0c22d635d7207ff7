//! Irreducible root systems generated from Cartan matrices.
//!
//! Cartan matrix convention: `a[i][j] = <alpha_i, alpha_j^vee>`, so the simple
//! reflection `s_j` acts by `s_j(gamma) = gamma - (sum_i c_i a[i][j]) alpha_j`
//! on `gamma = sum_i c_i alpha_i`.
//!
//! Root ids are dense: positive roots occupy `0..P` sorted by height (ties
//! broken so that larger coefficient vectors come first, which puts
//! `alpha_i` at id `i`), and the negative of positive id `i` is `P + i`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootset::RootSet;

const NO_SUM: u16 = u16::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Cartan type together with its Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    matrix: Vec<Vec<i32>>,
}

impl CartanDatum {
    /// The standard Cartan matrix of the given type.
    ///
    /// Labelling follows Bourbaki, except that `B2` is labelled with `alpha_1`
    /// short (so its positive roots are `a1, a2, a1+a2, 2a1+a2`).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let matrix = standard_matrix(family, rank)?;
        Ok(CartanDatum { family, rank, matrix })
    }

    /// Accepts an explicit matrix, which must be a valid generalized Cartan
    /// matrix equal to the standard one for `(family, rank)`.
    #[allow(clippy::needless_range_loop)] // (i,j) and (j,i) are both read
    pub fn from_matrix(family: Family, rank: usize, matrix: Vec<Vec<i32>>) -> Result<Self> {
        if matrix.len() != rank || matrix.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidCartan(format!("expected a {rank}x{rank} matrix")));
        }
        for i in 0..rank {
            if matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if matrix[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({i},{j}) is positive")));
                }
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) disagree on zero"
                    )));
                }
            }
        }
        let standard = standard_matrix(family, rank)?;
        if standard != matrix {
            return Err(Error::InvalidCartan(format!(
                "matrix is not the standard Cartan matrix of {}{rank}",
                family.letter()
            )));
        }
        Ok(CartanDatum { family, rank, matrix })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => fact(n + 1),
            (Family::B | Family::C, _) => (1u128 << n) * fact(n),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
            (Family::F, _) => 1152,
            (Family::G, _) => 12,
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Parse(format!("unknown Cartan type `{s}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("unknown Cartan type `{s}`")))?;
        CartanDatum::new(family, rank)
    }
}

fn standard_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i32>>> {
    let supported = match family {
        Family::A => rank >= 1,
        Family::B => rank >= 2,
        Family::C => rank >= 3,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !supported {
        return Err(Error::UnsupportedType { family: family.letter(), rank });
    }
    let n = rank;
    let mut m = vec![vec![0i32; n]; n];
    let mut link = |i: usize, j: usize, a_ij: i32, a_ji: i32| {
        m[i][j] = a_ij;
        m[j][i] = a_ji;
    };
    match family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B if n == 2 => link(0, 1, -1, -2),
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    Ok(m)
}

/// A root written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Root(Vec<i32>);

impl Root {
    /// Rejects the zero vector and vectors with mixed signs.
    pub fn new(coeffs: Vec<i32>) -> Result<Self> {
        let pos = coeffs.iter().any(|&c| c > 0);
        let neg = coeffs.iter().any(|&c| c < 0);
        match (pos, neg) {
            (false, false) => Err(Error::InvalidRoot("zero vector".into())),
            (true, true) => Err(Error::InvalidRoot(format!("{coeffs:?} has mixed signs"))),
            _ => Ok(Root(coeffs)),
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Index of the simple root this equals, if any.
    pub fn simple_index(&self) -> Option<usize> {
        let mut idx = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }
}

impl TryFrom<Vec<i32>> for Root {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Root::new(v)
    }
}

impl From<Root> for Vec<i32> {
    fn from(r: Root) -> Self {
        r.0
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Coefficientwise dominance `gamma <= gamma'` on roots.
pub fn leq(gamma: &Root, other: &Root) -> bool {
    gamma.0.len() == other.0.len() && gamma.0.iter().zip(&other.0).all(|(a, b)| a <= b)
}

/// All roots of an irreducible Cartan type, with lookup and reflection tables.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanDatum,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    simple_reflections: Vec<Vec<u16>>,
    reflections: Vec<Vec<u16>>,
    sums: Vec<u16>,
    highest: usize,
}

impl RootSystem {
    pub fn new(cartan: CartanDatum) -> Result<Self> {
        build_root_system(cartan)
    }

    pub fn from_type(s: &str) -> Result<Self> {
        build_root_system(s.parse()?)
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// `|Phi+|`.
    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// `|Phi|`.
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, id: usize) -> &Root {
        &self.roots[id]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn id_of(&self, root: &Root) -> Option<usize> {
        self.index.get(root.coeffs()).copied()
    }

    pub fn id_of_coeffs(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Id of a root, or `NotARoot`.
    pub fn require(&self, root: &Root) -> Result<usize> {
        self.id_of(root).ok_or_else(|| Error::NotARoot(root.to_string()))
    }

    #[inline]
    pub fn is_positive(&self, id: usize) -> bool {
        id < self.num_positive()
    }

    #[inline]
    pub fn neg(&self, id: usize) -> usize {
        let p = self.num_positive();
        if id < p {
            id + p
        } else {
            id - p
        }
    }

    /// Id of the simple root `alpha_{i+1}` (0-based `i`).
    #[inline]
    pub fn simple_id(&self, i: usize) -> usize {
        i
    }

    pub fn simple_index_of(&self, id: usize) -> Option<usize> {
        (id < self.rank()).then_some(id)
    }

    pub fn positive_set(&self) -> RootSet {
        RootSet::range(0, self.num_positive())
    }

    pub fn negative_set(&self) -> RootSet {
        RootSet::range(self.num_positive(), self.num_roots())
    }

    pub fn simple_set(&self) -> RootSet {
        RootSet::range(0, self.rank())
    }

    /// Negates every root in the set.
    pub fn negate_set(&self, set: &RootSet) -> RootSet {
        set.iter().map(|i| self.neg(i)).collect()
    }

    /// Id of `root(a) + root(b)` when that sum is a root.
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        let s = self.sums[a * self.roots.len() + b];
        (s != NO_SUM).then_some(s as usize)
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    pub fn highest_root_id(&self) -> usize {
        self.highest
    }

    /// Permutation of root ids induced by the simple reflection `s_{i+1}`.
    pub fn simple_reflection_table(&self, i: usize) -> &[u16] {
        &self.simple_reflections[i]
    }

    /// Permutation of root ids induced by the reflection in a root.
    pub fn reflection_table(&self, id: usize) -> &[u16] {
        let p = if id < self.num_positive() { id } else { self.neg(id) };
        &self.reflections[p]
    }

    /// `s_alpha(gamma)` for a simple root `alpha`.
    pub fn reflect(&self, gamma: &Root, alpha: &Root) -> Result<Root> {
        let id = self.require(gamma)?;
        let i = self.simple_index(alpha)?;
        Ok(self.roots[self.simple_reflections[i][id] as usize].clone())
    }

    /// Validates that `alpha` is simple and returns its index.
    pub fn simple_index(&self, alpha: &Root) -> Result<usize> {
        if alpha.rank() != self.rank() {
            return Err(Error::NotSimple(alpha.to_string()));
        }
        alpha.simple_index().ok_or_else(|| Error::NotSimple(alpha.to_string()))
    }

    /// `Phi_{>= alpha}`: positive roots dominating the simple root `alpha_{i+1}`.
    pub fn upper_set(&self, i: usize) -> RootSet {
        let alpha = Root::simple(self.rank(), i);
        (0..self.num_positive())
            .filter(|&id| leq(&alpha, &self.roots[id]))
            .collect()
    }

    /// First pair `(a, b)` in `set` whose sum is a root outside `set`.
    pub fn closure_violation(&self, set: &RootSet) -> Option<(usize, usize)> {
        for a in set {
            for b in set {
                if b < a {
                    continue;
                }
                if let Some(s) = self.add(a, b) {
                    if !set.contains(s) {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// Additive closure within `Phi`: `gamma, delta in S` and `gamma + delta in Phi`
    /// imply `gamma + delta in S`.
    pub fn is_closed(&self, set: &RootSet) -> bool {
        self.closure_violation(set).is_none()
    }

    /// Simple-root indices `i_1, ..., i_k` summing to the positive root `id`
    /// with every prefix sum a positive root. Among all such sequences the
    /// lexicographically smallest is returned.
    pub fn partial_sum_chain(&self, id: usize) -> Result<Vec<usize>> {
        if !self.is_positive(id) {
            return Err(Error::NotPositive(self.roots[id].to_string()));
        }
        let target = &self.roots[id];
        let mut chain = Vec::with_capacity(target.height() as usize);
        if self.chain_search(None, target, &mut chain) {
            Ok(chain)
        } else {
            Err(Error::Internal(format!("no partial-sum chain for {target}")))
        }
    }

    fn chain_search(&self, prefix: Option<usize>, target: &Root, chain: &mut Vec<usize>) -> bool {
        if let Some(p) = prefix {
            if self.roots[p] == *target {
                return true;
            }
        }
        for i in 0..self.rank() {
            let next = match prefix {
                None => Some(i),
                Some(p) => self.add(p, i),
            };
            let Some(next) = next else { continue };
            if !leq(&self.roots[next], target) {
                continue;
            }
            chain.push(i);
            if self.chain_search(Some(next), target, chain) {
                return true;
            }
            chain.pop();
        }
        false
    }

    /// Applies `s_{i+1}` to a coefficient vector via the Cartan matrix.
    fn reflect_coeffs(cartan: &CartanDatum, coeffs: &[i32], j: usize) -> Vec<i32> {
        let pairing: i32 = coeffs.iter().enumerate().map(|(i, c)| c * cartan.entry(i, j)).sum();
        let mut out = coeffs.to_vec();
        out[j] -= pairing;
        out
    }
}

/// Saturates the simple roots under all simple reflections.
pub fn build_root_system(cartan: CartanDatum) -> Result<RootSystem> {
    let n = cartan.rank();
    // (coeffs, parent, reflection index): root = s_i(parent).
    let mut found: HashMap<Vec<i32>, Option<(Vec<i32>, usize)>> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for i in 0..n {
        let r = Root::simple(n, i).0;
        found.insert(r.clone(), None);
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        for j in 0..n {
            let img = RootSystem::reflect_coeffs(&cartan, &r, j);
            if !found.contains_key(&img) {
                found.insert(img.clone(), Some((r.clone(), j)));
                queue.push_back(img);
            }
        }
        if found.len() > 2 * RootSet::CAPACITY {
            return Err(Error::Internal("root orbit does not close".into()));
        }
    }

    let mut positive: Vec<Vec<i32>> = found.keys().filter(|c| c.iter().all(|&x| x >= 0)).cloned().collect();
    positive.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let p = positive.len();
    if 2 * p != found.len() || 2 * p > RootSet::CAPACITY {
        return Err(Error::Internal(format!("{} roots but {p} positive", found.len())));
    }
    let mut roots: Vec<Root> = positive.iter().cloned().map(Root).collect();
    roots.extend(positive.iter().map(|c| Root(c.iter().map(|x| -x).collect())));
    let index: HashMap<Vec<i32>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();

    let total = roots.len();
    let simple_reflections: Vec<Vec<u16>> = (0..n)
        .map(|j| {
            roots
                .iter()
                .map(|r| index[&RootSystem::reflect_coeffs(&cartan, &r.0, j)] as u16)
                .collect()
        })
        .collect();

    let mut sums = vec![NO_SUM; total * total];
    let mut buf = vec![0i32; n];
    for a in 0..total {
        for b in 0..total {
            for ((x, p), q) in buf.iter_mut().zip(&roots[a].0).zip(&roots[b].0) {
                *x = p + q;
            }
            if let Some(&s) = index.get(&buf) {
                sums[a * total + b] = s as u16;
            }
        }
    }

    // s_gamma = u s_j u^{-1} where gamma = u(alpha_j), u read off the orbit tree.
    let compose = |a: &[u16], b: &[u16]| -> Vec<u16> { b.iter().map(|&x| a[x as usize]).collect() };
    let reflections: Vec<Vec<u16>> = (0..p)
        .map(|id| {
            let mut word = Vec::new();
            let mut cur = roots[id].0.clone();
            while let Some(Some((parent, j))) = found.get(&cur) {
                word.push(*j);
                cur = parent.clone();
            }
            let base = Root(cur).simple_index().expect("orbit tree rooted at a simple root");
            // u = s_{word[0]} s_{word[1]} ... ; each s_j is an involution.
            let mut u: Vec<u16> = (0..total as u16).collect();
            for &j in word.iter() {
                u = compose(&u, &simple_reflections[j]);
            }
            let mut u_inv = vec![0u16; total];
            for (x, &ux) in u.iter().enumerate() {
                u_inv[ux as usize] = x as u16;
            }
            compose(&compose(&u, &simple_reflections[base]), &u_inv)
        })
        .collect();

    let top = roots[..p].iter().max_by_key(|r| r.height()).expect("nonempty");
    let highest = index[&top.0];
    if !roots[..p].iter().all(|r| leq(r, top)) {
        return Err(Error::Internal("no unique highest root".into()));
    }

    Ok(RootSystem { cartan, roots, index, simple_reflections, reflections, sums, highest })
}

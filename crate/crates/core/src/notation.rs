//! Text syntax for roots, Weyl words, Levi subsets, Hessenberg spaces and
//! nilpotent supports.
//!
//! * roots: `[1,1]`, `a1+a2`, `2a1+a2`, `-[1,1]`, `-a1-a2`
//! * Weyl words: `s1 s2 s1`, `e`
//! * Levi subsets: `1,3` (1-based), empty for the torus
//! * Hessenberg spaces: `neg=-a1,-a2`, `h=2,3,3`, `all`
//! * nilpotent supports: comma-separated roots, empty for `N = 0`

use crate::error::{Error, Result};
use crate::hessenberg::{enumerate_all, from_hessenberg_function, validate_roots, HessenbergSpace};
use crate::nilpotent::NilpotentSupport;
use crate::rootset::RootSet;
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{LeviDatum, WeylElement};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits on commas that are not inside brackets.
pub fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Parses a coefficient vector or symbolic sum. Does not check membership in
/// any root system beyond the rank.
pub fn parse_root_coeffs(rank: usize, s: &str) -> Result<Vec<i32>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_err("empty root"));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) if rest.starts_with('[') => (-1, rest),
        _ => (1, s.as_str()),
    };
    if let Some(inner) = body.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| parse_err(format!("unclosed vector `{s}`")))?;
        let coeffs: Vec<i32> = inner
            .split(',')
            .map(|x| x.parse::<i32>().map(|v| sign * v))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(format!("bad coefficient vector `{s}`")))?;
        if coeffs.len() != rank {
            return Err(parse_err(format!("`{s}` has {} coefficients, expected {rank}", coeffs.len())));
        }
        return Ok(coeffs);
    }
    let mut coeffs = vec![0i32; rank];
    let bytes = body.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i > 0 {
            return Err(parse_err(format!("expected + or - in `{s}`")));
        }
        let num_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mult: i32 = if i > num_start { body[num_start..i].parse().map_err(|_| parse_err(format!("bad multiplier in `{s}`")))? } else { 1 };
        if i >= bytes.len() || bytes[i] != b'a' {
            return Err(parse_err(format!("expected a<index> in `{s}`")));
        }
        i += 1;
        let idx_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let idx: usize = body[idx_start..i].parse().map_err(|_| parse_err(format!("missing simple index in `{s}`")))?;
        if idx == 0 || idx > rank {
            return Err(Error::SimpleIndex { index: idx, rank });
        }
        coeffs[idx - 1] += sign * mult;
    }
    Ok(coeffs)
}

/// Parses a root and checks it belongs to `rs`.
pub fn parse_root(rs: &RootSystem, s: &str) -> Result<Root> {
    let root = Root::new(parse_root_coeffs(rs.rank(), s)?)?;
    rs.require(&root)?;
    Ok(root)
}

pub fn parse_root_id(rs: &RootSystem, s: &str) -> Result<usize> {
    let root = parse_root(rs, s)?;
    rs.require(&root)
}

/// `a1+a2`, `2a1+a2`, `-a1-a2`.
pub fn format_root_symbolic(root: &Root) -> String {
    let mut out = String::new();
    for (i, &c) in root.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("a{}", i + 1));
    }
    out
}

/// `e` or a whitespace-separated word `s1 s2 s1`. Words need not be reduced.
pub fn parse_word(rs: &RootSystem, s: &str) -> Result<WeylElement> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(WeylElement::identity(rs));
    }
    let letters: Vec<usize> = s
        .split_whitespace()
        .map(|tok| {
            let idx: usize = tok
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| parse_err(format!("bad Weyl letter `{tok}`")))?;
            if idx == 0 || idx > rs.rank() {
                return Err(Error::SimpleIndex { index: idx, rank: rs.rank() });
            }
            Ok(idx - 1)
        })
        .collect::<Result<_>>()?;
    WeylElement::from_word(rs, &letters)
}

/// Comma-separated 1-based simple indices; empty means the torus.
pub fn parse_levi(rs: &RootSystem, s: &str) -> Result<LeviDatum> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(LeviDatum::torus(rs));
    }
    let idx: Vec<usize> = s
        .split(',')
        .map(|t| {
            let i: usize = t.trim().parse().map_err(|_| parse_err(format!("bad Levi index `{t}`")))?;
            if i == 0 || i > rs.rank() {
                return Err(Error::SimpleIndex { index: i, rank: rs.rank() });
            }
            Ok(i - 1)
        })
        .collect::<Result<_>>()?;
    LeviDatum::new(rs, &idx)
}

/// 1-based indices of a Levi datum.
pub fn levi_indices(levi: &LeviDatum) -> Vec<usize> {
    levi.simple_subset().iter().map(|i| i + 1).collect()
}

pub fn format_levi(levi: &LeviDatum) -> String {
    levi_indices(levi).iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HessSpec {
    One(HessenbergSpace),
    All,
}

impl HessSpec {
    pub fn spaces(&self, rs: &RootSystem) -> Result<Vec<HessenbergSpace>> {
        match self {
            HessSpec::One(h) => Ok(vec![*h]),
            HessSpec::All => enumerate_all(rs),
        }
    }
}

pub fn parse_hess(rs: &RootSystem, s: &str) -> Result<HessSpec> {
    let s = s.trim();
    if s == "all" {
        return Ok(HessSpec::All);
    }
    if let Some(list) = s.strip_prefix("neg=") {
        let roots: Vec<Root> = if list.trim().is_empty() {
            Vec::new()
        } else {
            split_top_level(list).into_iter().map(|t| parse_root(rs, t)).collect::<Result<_>>()?
        };
        return Ok(HessSpec::One(validate_roots(rs, &roots)?));
    }
    if let Some(list) = s.strip_prefix("h=") {
        let h: Vec<usize> = list
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| parse_err(format!("bad Hessenberg function value `{t}`"))))
            .collect::<Result<_>>()?;
        return Ok(HessSpec::One(from_hessenberg_function(rs, &h)?));
    }
    Err(parse_err(format!("expected neg=..., h=... or all, got `{s}`")))
}

/// `Phi_H^-` in the `neg=` syntax.
pub fn format_hess(rs: &RootSystem, h: &HessenbergSpace) -> String {
    let roots: Vec<String> = h.neg_roots().iter().map(|id| format_root_symbolic(rs.root(id))).collect();
    format!("neg={}", roots.join(","))
}

pub fn parse_nilpotent(rs: &RootSystem, s: &str) -> Result<NilpotentSupport> {
    let mut set = RootSet::new();
    if !s.trim().is_empty() {
        for tok in split_top_level(s) {
            set.insert(parse_root_id(rs, tok)?);
        }
    }
    NilpotentSupport::new(rs, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type(t).unwrap()
    }

    #[test]
    fn root_syntax() {
        let a2 = rs("A2");
        for (s, c) in [("[1,1]", vec![1, 1]), ("a1+a2", vec![1, 1]), ("-[1,1]", vec![-1, -1]), ("-a1-a2", vec![-1, -1]), (" a2 ", vec![0, 1])] {
            assert_eq!(parse_root(&a2, s).unwrap().coeffs(), &c[..], "{s}");
        }
        let g2 = rs("G2");
        assert_eq!(parse_root(&g2, "3a1+2a2").unwrap().coeffs(), &[3, 2]);
        for bad in ["", "[1,1", "[1]", "a3", "a0", "b1", "a1a2", "[1,-1]", "2a1"] {
            assert!(parse_root(&a2, bad).is_err(), "{bad}");
        }
        assert_eq!(format_root_symbolic(&Root::new(vec![3, 2]).unwrap()), "3a1+2a2");
        assert_eq!(format_root_symbolic(&Root::new(vec![-1, -1]).unwrap()), "-a1-a2");
    }

    #[test]
    fn word_syntax() {
        let a2 = rs("A2");
        assert!(parse_word(&a2, "e").unwrap().is_identity());
        assert_eq!(parse_word(&a2, "s2 s1 s2").unwrap().to_string(), "s1 s2 s1");
        assert!(parse_word(&a2, "s3").is_err());
        assert!(parse_word(&a2, "t1").is_err());
    }

    #[test]
    fn levi_and_hess_syntax() {
        let a3 = rs("A3");
        assert_eq!(parse_levi(&a3, "").unwrap(), LeviDatum::torus(&a3));
        assert_eq!(levi_indices(&parse_levi(&a3, "3,1").unwrap()), vec![1, 3]);
        assert!(parse_levi(&a3, "4").is_err());
        let a2 = rs("A2");
        assert_eq!(parse_hess(&a2, "neg=").unwrap(), HessSpec::One(HessenbergSpace::borel()));
        assert_eq!(parse_hess(&a2, "neg=-a1,-a2").unwrap(), parse_hess(&a2, "h=2,3,3").unwrap());
        assert_eq!(parse_hess(&a2, "neg=[-1,0],[0,-1]").unwrap(), parse_hess(&a2, "h=2,3,3").unwrap());
        assert_eq!(parse_hess(&a2, "all").unwrap(), HessSpec::All);
        assert!(matches!(parse_hess(&a2, "neg=-a1-a2"), Err(Error::NotHessenberg { .. })));
        assert!(matches!(parse_hess(&a2, "neg=a1"), Err(Error::NotNegative(_))));
        assert!(parse_hess(&a2, "bogus").is_err());
        let h = parse_hess(&a2, "h=2,3,3").unwrap();
        let HessSpec::One(h) = h else { unreachable!() };
        assert_eq!(format_hess(&a2, &h), "neg=-a1,-a2");
    }

    #[test]
    fn nilpotent_syntax() {
        let a2 = rs("A2");
        assert_eq!(parse_nilpotent(&a2, "").unwrap(), NilpotentSupport::zero());
        assert_eq!(parse_nilpotent(&a2, "a1,a2").unwrap(), NilpotentSupport::regular(&a2));
        assert_eq!(parse_nilpotent(&a2, "a1+a2").unwrap().roots().len(), 1);
        assert!(parse_nilpotent(&a2, "-a1").is_err());
    }

    proptest! {
        #[test]
        fn roots_round_trip(t in prop::sample::select(vec!["A3", "B3", "C3", "G2", "D4", "F4"]), k in 0usize..48) {
            let sys = rs(t);
            let id = k % sys.num_roots();
            let root = sys.root(id);
            prop_assert_eq!(&parse_root(&sys, &root.to_string()).unwrap(), root);
            prop_assert_eq!(&parse_root(&sys, &format_root_symbolic(root)).unwrap(), root);
        }

        #[test]
        fn words_round_trip(letters in prop::collection::vec(0usize..3, 0..12)) {
            let sys = rs("B3");
            let w = WeylElement::from_word(&sys, &letters).unwrap();
            prop_assert_eq!(parse_word(&sys, &w.to_string()).unwrap(), w);
        }
    }
}

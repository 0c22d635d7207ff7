//! Structural invariants over randomly chosen (type, element, Levi, space).

use std::sync::OnceLock;

use hessberg_core::hessenberg::enumerate_all;
use hessberg_core::nilpotent::{connect_chain, fixed_points};
use hessberg_core::semisimple::{betti_numbers, cell_report};
use hessberg_core::weyl::{coset_decompose, maximal_inversions};
use hessberg_core::{HessenbergSpace, LeviDatum, NilpotentSupport, RootSet, WeylGroup};
use hessberg_core::RootSystem;
use proptest::prelude::*;

const TYPES: [&str; 9] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A4", "D4"];

struct Fixture {
    group: WeylGroup,
    spaces: Vec<HessenbergSpace>,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        TYPES
            .iter()
            .map(|t| {
                let group = WeylGroup::new(RootSystem::from_type(t).unwrap()).unwrap();
                let spaces = enumerate_all(group.root_system()).unwrap();
                Fixture { group, spaces }
            })
            .collect()
    })
}

/// (fixture, element index, levi mask, space index), all reduced modulo size later.
fn pick() -> impl Strategy<Value = (usize, usize, u64, usize)> {
    (0..TYPES.len(), any::<usize>(), any::<u64>(), any::<usize>())
}

fn subset_of(rs: &RootSystem, bits: u64) -> RootSet {
    (0..rs.num_positive()).filter(|i| bits >> (i % 64) & 1 == 1).collect()
}

#[test]
fn root_counts_and_highest_root() {
    for (t, p) in [("A2", 3), ("B2", 4), ("G2", 6), ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)] {
        let rs = RootSystem::from_type(t).unwrap();
        assert_eq!(rs.num_positive(), p, "{t}");
        assert_eq!(rs.num_roots(), 2 * p, "{t}");
        let theta = rs.highest_root().coeffs();
        assert!(theta.iter().all(|&c| c >= 1), "{t}");
        for r in rs.positive_roots() {
            assert!(r.coeffs().iter().zip(theta).all(|(a, b)| a <= b), "{t}: {r} not below theta");
        }
        for i in 0..rs.rank() {
            let table = rs.simple_reflection_table(i);
            let mut seen = vec![false; rs.num_roots()];
            for &j in table {
                seen[j as usize] = true;
            }
            assert!(seen.iter().all(|&s| s), "{t}: s{} is not a permutation", i + 1);
        }
    }
}

#[test]
fn weyl_orders() {
    for (t, n) in [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("F4", 1152)] {
        let g = WeylGroup::new(RootSystem::from_type(t).unwrap()).unwrap();
        assert_eq!(g.order(), n, "{t}");
    }
}

#[test]
fn levi_datum_invariants() {
    for f in fixtures() {
        let rs = f.group.root_system();
        for mask in 0..1u64 << rs.rank() {
            let levi = LeviDatum::from_mask(rs, mask);
            let m = levi.phi_m();
            for a in m.iter() {
                assert!(m.contains(rs.neg(a)));
                for b in m.iter() {
                    if let Some(c) = rs.add(a, b) {
                        assert!(m.contains(c));
                    }
                }
            }
            for a in levi.phi_uq().iter() {
                for b in rs.positive_set().iter() {
                    if let Some(c) = rs.add(a, b) {
                        assert!(levi.phi_uq().contains(c));
                    }
                }
            }
            if !levi.is_full() {
                assert!(levi.phi_uq().contains(rs.highest_root_id()));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn element_invariants((t, e, _, _) in pick()) {
        let g = &fixtures()[t].group;
        let rs = g.root_system();
        let w = g.element(e % g.order());
        for id in 0..rs.num_roots() {
            prop_assert_eq!(w.apply(rs.neg(id)), rs.neg(w.apply(id)));
        }
        let winv = w.inverse(rs);
        let flipped = rs.positive_set().iter().filter(|&id| !rs.is_positive(winv.apply(id))).count();
        prop_assert_eq!(flipped, w.length());
        prop_assert_eq!(w.word().len(), w.length());
        let word: Vec<usize> = w.word().iter().map(|&i| i as usize).collect();
        prop_assert_eq!(&hessberg_core::WeylElement::from_word(rs, &word).unwrap(), w);
    }

    #[test]
    fn coset_and_cells((t, e, mask, h) in pick()) {
        let f = &fixtures()[t];
        let rs = f.group.root_system();
        let w = f.group.element(e % f.group.order());
        let levi = LeviDatum::from_mask(rs, mask & ((1 << rs.rank()) - 1));
        let hess = &f.spaces[h % f.spaces.len()];
        let (y, v) = coset_decompose(rs, w, &levi);
        prop_assert!(levi.in_levi_group(&y));
        prop_assert!(levi.is_min_rep(&v));
        let cell = cell_report(rs, w, &levi, hess);
        prop_assert!(cell.dim <= w.length());
        if levi.is_full() {
            prop_assert_eq!(cell.dim, w.length());
        }
    }

    #[test]
    fn betti_sum_is_group_order((t, _, mask, h) in pick()) {
        let f = &fixtures()[t];
        let rs = f.group.root_system();
        let levi = LeviDatum::from_mask(rs, mask & ((1 << rs.rank()) - 1));
        let table = betti_numbers(&f.group, &levi, &f.spaces[h % f.spaces.len()]);
        prop_assert_eq!(table.counts.iter().sum::<usize>(), f.group.order());
        prop_assert_eq!(table.counts.len(), rs.num_positive() + 1);
    }

    #[test]
    fn hessenberg_closure((t, _, _, h) in pick()) {
        let f = &fixtures()[t];
        let rs = f.group.root_system();
        let full = f.spaces[h % f.spaces.len()].full_set(rs);
        for b in full.iter() {
            for a in rs.positive_set().iter() {
                if let Some(c) = rs.add(b, a) {
                    prop_assert!(full.contains(c));
                }
            }
        }
    }

    #[test]
    fn chains_descend_to_identity((t, e, bits, h) in pick()) {
        let f = &fixtures()[t];
        let rs = f.group.root_system();
        let n = NilpotentSupport::new(rs, subset_of(rs, bits)).unwrap();
        let hess = &f.spaces[h % f.spaces.len()];
        let fixed = fixed_points(&f.group, &n, hess);
        let w = fixed[e % fixed.len()];
        let chain = connect_chain(rs, w, &n, hess).unwrap();
        prop_assert!(chain.steps.len() <= w.length());
        prop_assert!(chain.end().is_identity());
        let mut current = w.clone();
        for s in &chain.steps {
            prop_assert_eq!(&s.w_before, &current);
            prop_assert!(maximal_inversions(rs, &s.w_before).contains(s.gamma));
            let reflected = hessberg_core::WeylElement::reflection(rs, s.gamma).compose(rs, &s.w_before);
            prop_assert_eq!(&s.w_after, &reflected);
            prop_assert!(s.w_after.length() < s.w_before.length());
            current = s.w_after.clone();
        }
    }
}

//! Property sweep behind `hessberg validate-all`.

use std::io::Write;
use std::time::Instant;

use hessberg_core::catalog::build_catalog;
use hessberg_core::hessenberg::enumerate_all;
use hessberg_core::nilpotent::{connect_chain, curve_admissible, fixed_points};
use hessberg_core::weyl::{coset_decompose, maximal_inversions, weyl_from_inversions};
use hessberg_core::{CartanDatum, Family, LeviDatum, NilpotentSupport, RootSet, RootSystem, WeylGroup};

use crate::commands::CliError;

const MAX_RANK: usize = 4;
// Exhaustive over all 2^|Phi+| nilpotent supports.
const NILPOTENT_MAX_RANK: usize = 2;

pub fn types_up_to(max_rank: usize) -> Vec<CartanDatum> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(c) = CartanDatum::new(family, rank) {
                out.push(c);
            }
        }
    }
    out
}

struct Outcome {
    name: &'static str,
    failures: Vec<String>,
}

pub fn validate_all(max_rank: usize, jobs: usize, out: &mut impl Write) -> Result<bool, CliError> {
    if max_rank > MAX_RANK {
        return Err(CliError::Input(format!("--max-rank {max_rank} exceeds {MAX_RANK}")));
    }
    let mut all_ok = true;
    for cartan in types_up_to(max_rank) {
        let start = Instant::now();
        let group = WeylGroup::new(RootSystem::new(cartan.clone())?)?;
        let outcomes = [
            catalog_checks(&group, jobs)?,
            kostant_round_trip(&group),
            coset_contract(&group),
            nilpotent_chains(&group),
        ];
        for o in outcomes {
            let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
            writeln!(out, "{status} {cartan} {}", o.name)?;
            for f in o.failures.iter().take(5) {
                writeln!(out, "  {f}")?;
            }
            all_ok &= o.failures.is_empty();
        }
        writeln!(out, "     {cartan} done in {:.2?}", start.elapsed())?;
    }
    Ok(all_ok)
}

// Agreement, Euler characteristic and witness soundness (checked inside
// `catalog_row`, which errors on an unsound witness).
fn catalog_checks(group: &WeylGroup, jobs: usize) -> Result<Outcome, CliError> {
    let rs = group.root_system();
    let spaces = enumerate_all(rs)?;
    let rows = build_catalog(group, &spaces, jobs)?;
    let mut failures = Vec::new();
    for r in &rows {
        if !r.agree {
            failures.push(format!("disagreement at levi {:?} hess {:?}", r.levi, r.hess));
        }
        if r.betti.iter().sum::<usize>() != group.order() {
            failures.push(format!("cell count != |W| at levi {:?} hess {:?}", r.levi, r.hess));
        }
    }
    Ok(Outcome { name: "semisimple agreement / euler / witness", failures })
}

fn kostant_round_trip(group: &WeylGroup) -> Outcome {
    let rs = group.root_system();
    let failures = group
        .elements()
        .iter()
        .filter(|w| weyl_from_inversions(rs, w.inversion_set()).as_ref() != Ok(*w))
        .map(|w| format!("round trip failed for {w}"))
        .collect();
    Outcome { name: "inversion-set round trip", failures }
}

fn coset_contract(group: &WeylGroup) -> Outcome {
    let rs = group.root_system();
    let mut failures = Vec::new();
    for mask in 0..(1u64 << rs.rank()) {
        let levi = LeviDatum::from_mask(rs, mask);
        for w in group.elements() {
            let (y, v) = coset_decompose(rs, w, &levi);
            let union = y.inversion_set().union(&y.apply_set(v.inversion_set()));
            let disjoint = y.inversion_set().is_disjoint(&y.apply_set(v.inversion_set()));
            let ok = &y.compose(rs, &v) == w
                && levi.in_levi_group(&y)
                && levi.is_min_rep(&v)
                && y.length() + v.length() == w.length()
                && disjoint
                && &union == w.inversion_set();
            if !ok {
                failures.push(format!("coset contract failed for {w} levi mask {mask:b}"));
            }
        }
    }
    Outcome { name: "coset decomposition contract", failures }
}

fn nilpotent_chains(group: &WeylGroup) -> Outcome {
    let rs = group.root_system();
    let mut failures = Vec::new();
    if rs.rank() > NILPOTENT_MAX_RANK {
        return Outcome { name: "nilpotent chains (skipped above rank 2)", failures };
    }
    let spaces = enumerate_all(rs).unwrap_or_default();
    let p = rs.num_positive();
    for bits in 0u64..(1 << p) {
        let support: RootSet = (0..p).filter(|i| bits >> i & 1 == 1).collect();
        let n = NilpotentSupport::new(rs, support).expect("positive ids");
        for h in &spaces {
            for w in fixed_points(group, &n, h) {
                for gamma in &maximal_inversions(rs, w) {
                    if curve_admissible(rs, w, gamma, &n, h) != Ok(true) {
                        failures.push(format!("curve at {w} along {} not admissible", rs.root(gamma)));
                    }
                }
                match connect_chain(rs, w, &n, h) {
                    Ok(c) => {
                        let mut prev = w.length();
                        let decreasing = c.steps.iter().all(|s| {
                            let ok = s.w_after.length() < prev;
                            prev = s.w_after.length();
                            ok
                        });
                        if !c.end().is_identity() || !decreasing || c.steps.len() > w.length() {
                            failures.push(format!("bad chain from {w}"));
                        }
                    }
                    Err(e) => failures.push(format!("chain from {w}: {e}")),
                }
            }
        }
    }
    Outcome { name: "nilpotent admissibility / chains", failures }
}

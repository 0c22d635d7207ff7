//! JSON shapes emitted by the CLI.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hessenberg::{validate_roots, HessenbergSpace};
use crate::nilpotent::Chain;
use crate::notation::levi_indices;
use crate::rootsys::{Root, RootSystem};
use crate::semisimple::{BettiTable, Witness};
use crate::weyl::LeviDatum;

/// `Phi_H^-` as a list of coefficient vectors.
pub fn hess_to_json(rs: &RootSystem, h: &HessenbergSpace) -> Vec<Root> {
    h.neg_root_list(rs)
}

pub fn hess_from_json(rs: &RootSystem, roots: &[Root]) -> Result<HessenbergSpace> {
    validate_roots(rs, roots)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub alpha: Root,
    pub v: String,
}

impl WitnessJson {
    pub fn new(rs: &RootSystem, w: &Witness) -> Self {
        WitnessJson { alpha: rs.root(rs.simple_id(w.alpha)).clone(), v: w.v.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub w: String,
    pub y: String,
    pub v: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub cartan: String,
    pub levi: Vec<usize>,
    pub hess_neg: Vec<Root>,
    pub cells: Vec<CellJson>,
    pub betti: Vec<usize>,
    pub poincare: String,
    pub connected: bool,
    pub witness: Option<WitnessJson>,
}

impl BettiReport {
    pub fn new(
        rs: &RootSystem,
        levi: &LeviDatum,
        hess: &HessenbergSpace,
        table: &BettiTable,
        witness: Option<&Witness>,
    ) -> Self {
        BettiReport {
            cartan: rs.cartan().to_string(),
            levi: levi_indices(levi),
            hess_neg: hess_to_json(rs, hess),
            cells: table
                .cells
                .iter()
                .map(|c| CellJson { w: c.w.to_string(), y: c.y.to_string(), v: c.v.to_string(), dim: c.dim })
                .collect(),
            betti: table.counts.clone(),
            poincare: table.poincare(),
            connected: table.n0() == 1,
            witness: witness.map(|w| WitnessJson::new(rs, w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub w_before: String,
    pub gamma: Root,
    pub w_after: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub start: String,
    pub steps: Vec<StepJson>,
    pub end: String,
}

impl ChainReport {
    pub fn new(rs: &RootSystem, chain: &Chain) -> Self {
        ChainReport {
            start: chain.start.to_string(),
            steps: chain
                .steps
                .iter()
                .map(|s| StepJson {
                    w_before: s.w_before.to_string(),
                    gamma: rs.root(s.gamma).clone(),
                    w_after: s.w_after.to_string(),
                })
                .collect(),
            end: chain.end().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_all;
    use crate::nilpotent::{connect_chain, NilpotentSupport};
    use crate::notation::parse_word;
    use crate::semisimple::betti_numbers;
    use crate::weyl::WeylGroup;

    #[test]
    fn spaces_round_trip_through_json() {
        for t in ["A3", "B3", "G2"] {
            let rs = RootSystem::from_type(t).unwrap();
            for h in enumerate_all(&rs).unwrap() {
                let text = serde_json::to_string(&hess_to_json(&rs, &h)).unwrap();
                let back: Vec<Root> = serde_json::from_str(&text).unwrap();
                assert_eq!(hess_from_json(&rs, &back).unwrap(), h);
            }
        }
    }

    #[test]
    fn reports_round_trip() {
        let g = WeylGroup::new(RootSystem::from_type("A2").unwrap()).unwrap();
        let rs = g.root_system();
        let levi = LeviDatum::torus(rs);
        let h = HessenbergSpace::borel();
        let table = betti_numbers(&g, &levi, &h);
        let report = BettiReport::new(rs, &levi, &h, &table, None);
        let text = serde_json::to_string(&report).unwrap();
        let back: BettiReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        for cell in &back.cells {
            parse_word(rs, &cell.w).unwrap();
        }

        let n = NilpotentSupport::new(rs, [0].into_iter().collect()).unwrap();
        let chain = connect_chain(rs, &parse_word(rs, "s1 s2").unwrap(), &n, &HessenbergSpace::full(rs)).unwrap();
        let report = ChainReport::new(rs, &chain);
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(
            text,
            r#"{"start":"s1 s2","steps":[{"w_before":"s1 s2","gamma":[1,1],"w_after":"s1"},{"w_before":"s1","gamma":[1,0],"w_after":"e"}],"end":"e"}"#
        );
        assert_eq!(serde_json::from_str::<ChainReport>(&text).unwrap(), report);
    }

    #[test]
    fn json_rejects_mixed_sign_roots() {
        assert!(serde_json::from_str::<Root>("[1,-1]").is_err());
    }
}

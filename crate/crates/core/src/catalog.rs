//! Exhaustive catalog of `(Levi, Hessenberg space)` pairs for one Cartan type,
//! comparing the Betti-number verdict on connectedness with the `-Delta`
//! criterion.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergSpace;
use crate::notation::levi_indices;
use crate::report::{hess_to_json, WitnessJson};
use crate::rootsys::Root;
use crate::semisimple::{
    betti_numbers, disconnection_witness, is_connected_by_criterion, witness_is_sound,
};
use crate::weyl::{LeviDatum, WeylGroup};

pub const CSV_HEADER: [&str; 9] =
    ["cartan", "levi", "hess", "betti", "poincare", "conn_betti", "conn_criterion", "witness", "agree"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub cartan: String,
    pub levi: Vec<usize>,
    pub hess: Vec<Root>,
    pub betti: Vec<usize>,
    pub poincare: String,
    pub connected_by_betti: bool,
    pub connected_by_criterion: bool,
    pub witness: Option<WitnessJson>,
    pub agree: bool,
}

/// One row. A witness is produced whenever the criterion fails; an unsound
/// witness is reported as [`Error::Internal`].
pub fn catalog_row(group: &WeylGroup, levi: &LeviDatum, hess: &HessenbergSpace) -> Result<CatalogRow> {
    let rs = group.root_system();
    let table = betti_numbers(group, levi, hess);
    let by_betti = table.n0() == 1;
    let by_criterion = is_connected_by_criterion(rs, levi, hess);
    let witness = if by_criterion {
        None
    } else {
        let w = disconnection_witness(rs, levi, hess)?;
        if !witness_is_sound(rs, levi, hess, &w) {
            return Err(Error::Internal(format!(
                "unsound witness {} for {} levi {:?}",
                w.v,
                rs.cartan(),
                levi_indices(levi)
            )));
        }
        Some(WitnessJson::new(rs, &w))
    };
    Ok(CatalogRow {
        cartan: rs.cartan().to_string(),
        levi: levi_indices(levi),
        hess: hess_to_json(rs, hess),
        betti: table.counts.clone(),
        poincare: table.poincare(),
        connected_by_betti: by_betti,
        connected_by_criterion: by_criterion,
        witness,
        agree: by_betti == by_criterion,
    })
}

/// Rows for every space in `spaces` and every Levi subset (the full one
/// included), ordered by space then Levi bitmask. `jobs > 1` fans out over a
/// thread pool; the output does not depend on it.
pub fn build_catalog(group: &WeylGroup, spaces: &[HessenbergSpace], jobs: usize) -> Result<Vec<CatalogRow>> {
    let rs = group.root_system();
    let levis: Vec<LeviDatum> = (0..(1u64 << rs.rank())).map(|m| LeviDatum::from_mask(rs, m)).collect();
    let pairs: Vec<(&HessenbergSpace, &LeviDatum)> =
        spaces.iter().flat_map(|h| levis.iter().map(move |m| (h, m))).collect();
    if jobs <= 1 {
        return pairs.iter().map(|(h, m)| catalog_row(group, m, h)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| pairs.par_iter().map(|(h, m)| catalog_row(group, m, h)).collect())
}

fn vec_field<T: ToString>(xs: &[T]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

pub fn to_csv(rows: &[CatalogRow]) -> Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.cartan.clone(),
            vec_field(&r.levi),
            vec_field(&r.hess),
            vec_field(&r.betti),
            r.poincare.clone(),
            r.connected_by_betti.to_string(),
            r.connected_by_criterion.to_string(),
            r.witness.as_ref().map(|w| w.v.clone()).unwrap_or_default(),
            r.agree.to_string(),
        ])
        .map_err(io)?;
    }
    w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))
}

pub fn to_json(rows: &[CatalogRow]) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(rows).map_err(|e| Error::Internal(format!("json: {e}")))?;
    out.push(b'\n');
    Ok(out)
}

/// SHA-256 of the canonical CSV, hex encoded.
pub fn digest(rows: &[CatalogRow]) -> Result<String> {
    let bytes = to_csv(rows)?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

//! Exhaustive parameter sweeps over the clean standard family, persisted as
//! JSON Lines, with checks for the empirical bounds and the width conjecture.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::interior_point_info;
use crate::equiv::canonical_pair;
use crate::error::{Error, Result};
use crate::geom::{BarycentricCoords, LatticePoint, StandardTet};
use crate::pointcount::is_clean_standard;
use crate::width::{lattice_width, plane_occupancy};

pub const CATALOG_SCHEMA: &str = "tetlab-catalog/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub schema: String,
    pub a: i64,
    pub b: i64,
    pub n: i64,
    pub c_mod_n: i64,
    pub clean: bool,
    pub i: i64,
    /// `None` when width computation was skipped for this record.
    pub width: Option<i64>,
    pub canonical: (i64, i64),
    pub interior_points: Vec<(LatticePoint, BarycentricCoords)>,
    pub minimal_direction_count: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub duong_bounds_hold: bool,
    pub duong_counterexamples: Vec<(i64, i64, i64)>,
    pub width_le_k_plus_1_holds: bool,
    pub width_counterexamples: Vec<(i64, i64, i64)>,
    pub interior_point_per_plane_holds: bool,
    pub interior_point_per_plane_counterexamples: Vec<(i64, i64, i64)>,
}

pub fn record_for(t: &StandardTet, compute_width: bool) -> Result<CatalogRecord> {
    let info = interior_point_info(t)?;
    let (width, dir_count) = if compute_width {
        let r = lattice_width(t)?;
        (Some(r.width), Some(r.minimal_directions.len() as i64))
    } else {
        (None, None)
    };
    let canonical = canonical_pair(t)?;
    Ok(CatalogRecord {
        schema: CATALOG_SCHEMA.to_string(),
        a: t.a(),
        b: t.b(),
        n: t.n(),
        c_mod_n: t.c().rem_euclid(t.n()),
        clean: true,
        i: info.len() as i64,
        width,
        canonical: (canonical.a_star, canonical.b_star),
        interior_points: info.into_iter().map(|p| (p.point, p.bc)).collect(),
        minimal_direction_count: dir_count,
    })
}

/// One record per clean `(a, b, n)` with `2 <= n <= n_max`, in `(n, a, b)`
/// order. Parallel over `n`; the merged output is deterministic.
pub fn sweep(n_max: i64) -> Result<Vec<CatalogRecord>> {
    sweep_with_width_limit(n_max, 200)
}

/// Width computation is skipped for records with `n > width_max_n`.
pub fn sweep_with_width_limit(n_max: i64, width_max_n: i64) -> Result<Vec<CatalogRecord>> {
    if n_max < 2 {
        return Err(Error::InvalidInput("sweep needs n_max >= 2".into()));
    }
    let per_n: Vec<Result<Vec<CatalogRecord>>> = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut records = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    let t = StandardTet::new(a, b, n)?;
                    if !is_clean_standard(&t) {
                        continue;
                    }
                    records.push(record_for(&t, n <= width_max_n)?);
                }
            }
            Ok(records)
        })
        .collect();
    let mut out = Vec::new();
    for chunk in per_n {
        out.extend(chunk?);
    }
    Ok(out)
}

/// Checks `3k+1 <= n <= 12k+8` for every record with `k = i >= 1`.
pub fn check_duong_bounds(records: &[CatalogRecord], report: &mut ConjectureReport) {
    report.duong_bounds_hold = true;
    for r in records {
        let k = r.i;
        if k >= 1 && !(3 * k + 1 <= r.n && r.n <= 12 * k + 8) {
            report.duong_bounds_hold = false;
            report.duong_counterexamples.push((r.a, r.b, r.n));
        }
    }
}

/// Verifies the extremal families `i(T_{3k,3k,3k+1}) = k` and
/// `i(T_{2k+1,4k+3,12k+8}) = k` for `1 <= k <= k_max`, plus
/// `i(T_{n-1,n-1,n}) = floor(n/3)` for `gcd(n,3) = 1`, `n <= 3*k_max + 1`.
pub fn check_extremal_families(k_max: i64) -> Result<bool> {
    use crate::pointcount::interior_count_formula;
    for k in 1..=k_max {
        let lower = StandardTet::new(3 * k, 3 * k, 3 * k + 1)?;
        if interior_count_formula(&lower)? != k {
            return Ok(false);
        }
        let upper = StandardTet::new(2 * k + 1, 4 * k + 3, 12 * k + 8)?;
        if interior_count_formula(&upper)? != k {
            return Ok(false);
        }
    }
    for n in 2..=(3 * k_max + 1) {
        if crate::exact::gcd(n, 3) != 1 {
            continue;
        }
        let t = StandardTet::new(n - 1, n - 1, n)?;
        if interior_count_formula(&t)? != n / 3 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `width <= i + 1` and, for every minimal direction, that the
/// interior lattice points occupy a gap-free run of consecutive planes
/// (each plane in the run containing at least one of them). Violations are
/// findings, never fatal.
pub fn check_width_conjecture(records: &[CatalogRecord], report: &mut ConjectureReport) -> Result<()> {
    report.width_le_k_plus_1_holds = true;
    report.interior_point_per_plane_holds = true;
    for r in records {
        let k = r.i;
        if k < 1 {
            continue;
        }
        let Some(width) = r.width else { continue };
        if width > k + 1 {
            report.width_le_k_plus_1_holds = false;
            report.width_counterexamples.push((r.a, r.b, r.n));
        }
        let _ = width;
        let t = StandardTet::new(r.a, r.b, r.n)?;
        let wr = lattice_width(&t)?;
        for u in &wr.minimal_directions {
            let planes: std::collections::BTreeSet<i64> = r
                .interior_points
                .iter()
                .map(|(w, _)| u.dot(w))
                .collect::<Result<_>>()?;
            let span = planes.iter().max().unwrap() - planes.iter().min().unwrap() + 1;
            if span != planes.len() as i64 {
                report.interior_point_per_plane_holds = false;
                report
                    .interior_point_per_plane_counterexamples
                    .push((r.a, r.b, r.n));
                break;
            }
        }
    }
    Ok(())
}

pub fn check_catalog(records: &[CatalogRecord]) -> Result<ConjectureReport> {
    let mut report = ConjectureReport::default();
    check_duong_bounds(records, &mut report);
    check_width_conjecture(records, &mut report)?;
    Ok(report)
}

pub fn write_jsonl<W: Write>(records: &[CatalogRecord], mut out: W) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<CatalogRecord>> {
    let mut records = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::InvalidInput(format!("read error: {e}")))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CatalogRecord = serde_json::from_str(&line)
            .map_err(|e| Error::InvalidInput(format!("line {}: {e}", idx + 1)))?;
        if record.schema != CATALOG_SCHEMA {
            return Err(Error::InvalidInput(format!(
                "line {}: unsupported schema {:?}",
                idx + 1,
                record.schema
            )));
        }
        records.push(record);
    }
    Ok(records)
}

/// Flat CSV projection of the catalog (no interior-point detail).
pub fn write_csv<W: Write>(records: &[CatalogRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "a,b,n,c_mod_n,clean,i,width,canonical_a,canonical_b,minimal_direction_count")?;
    for r in records {
        let fmt_opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.a,
            r.b,
            r.n,
            r.c_mod_n,
            r.clean,
            r.i,
            fmt_opt(r.width),
            r.canonical.0,
            r.canonical.1,
            fmt_opt(r.minimal_direction_count),
        )?;
    }
    Ok(())
}

/// Re-derives the occupancy profile of a record's tetrahedron; exposed for
/// the `check` subcommand and tests.
pub fn record_occupancy(r: &CatalogRecord, u: &crate::geom::Direction) -> Result<Vec<i64>> {
    plane_occupancy(&StandardTet::new(r.a, r.b, r.n)?, u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_small_counts() {
        let records = sweep(7).unwrap();
        // clean pairs at n = 7: a, b in 1..=6 minus the five with a + b = 8
        assert_eq!(records.iter().filter(|r| r.n == 7).count(), 31);
        // n = 2 has the single clean record (1, 1)
        let n2: Vec<_> = records.iter().filter(|r| r.n == 2).collect();
        assert_eq!(n2.len(), 1);
        assert_eq!((n2[0].a, n2[0].b), (1, 1));
    }

    #[test]
    fn sweep_record_3_3_4() {
        let records = sweep(4).unwrap();
        let r = records.iter().find(|r| (r.a, r.b, r.n) == (3, 3, 4)).unwrap();
        assert_eq!(r.i, 1);
        assert_eq!(r.width, Some(2));
        assert_eq!(r.minimal_direction_count, Some(9));
    }

    #[test]
    fn sweep_is_reproducible() {
        assert_eq!(sweep(12).unwrap(), sweep(12).unwrap());
    }

    #[test]
    fn duong_bounds_small() {
        let records = sweep(25).unwrap();
        let mut report = ConjectureReport::default();
        check_duong_bounds(&records, &mut report);
        assert!(report.duong_bounds_hold);
        assert!(report.duong_counterexamples.is_empty());
    }

    #[test]
    fn extremal_families_small() {
        assert!(check_extremal_families(5).unwrap());
    }

    #[test]
    fn jsonl_roundtrip() {
        let records = sweep(6).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&records, &mut buf).unwrap();
        let back = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(records, back);
    }

    #[test]
    fn width_conjecture_small() {
        let records = sweep(25).unwrap();
        let report = check_catalog(&records).unwrap();
        assert!(report.width_le_k_plus_1_holds);
        assert!(report.interior_point_per_plane_holds);
    }
}

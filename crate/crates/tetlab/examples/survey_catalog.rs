//! Sweep all clean standard tetrahedra up to a volume bound, write the
//! catalog as JSON Lines, and check the counting bounds and the width
//! conjecture over it.

use tetlab::survey::{check_catalog, check_extremal_families, sweep, write_jsonl};
use tetlab::Result;

fn main() -> Result<()> {
    let n_max = 40;
    let records = sweep(n_max)?;
    println!("{} clean records for 2 <= n <= {n_max}", records.len());

    let path = std::env::temp_dir().join("tetlab-catalog.jsonl");
    let file = std::fs::File::create(&path).expect("temp file");
    write_jsonl(&records, std::io::BufWriter::new(file)).expect("write catalog");
    println!("catalog written to {}", path.display());

    let report = check_catalog(&records)?;
    println!("count bounds 3k+1 <= n <= 12k+8 hold: {}", report.duong_bounds_hold);
    println!("width <= k+1 holds: {}", report.width_le_k_plus_1_holds);
    println!(
        "interior points on consecutive planes: {}",
        report.interior_point_per_plane_holds
    );
    println!("extremal families verified: {}", check_extremal_families(10)?);

    let max_i = records.iter().map(|r| r.i).max().unwrap();
    println!("largest interior count seen: {max_i}");
    Ok(())
}

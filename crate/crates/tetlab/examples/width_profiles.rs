//! Exact lattice widths of the eight 1-point classes, with every minimal
//! direction and its per-plane lattice point profile.

use tetlab::classify::one_point_representatives;
use tetlab::width::{lattice_width, lattice_width_general};
use tetlab::Result;

fn main() -> Result<()> {
    for t in one_point_representatives() {
        let report = lattice_width(&t)?;
        println!(
            "T_{{{},{},{}}}: width {} in {} direction(s)",
            t.a(),
            t.b(),
            t.n(),
            report.width,
            report.minimal_directions.len()
        );
        for (u, occ) in report.minimal_directions.iter().zip(&report.occupancy) {
            println!("  u = ({}, {}, {})  occupancy {:?}", u.r, u.s, u.t, occ);
        }
    }

    // the width-m family T_{m, m^2, m^3 + 1}
    for m in 2..=4 {
        let t = tetlab::geom::StandardTet::new(m, m * m, m * m * m + 1)?;
        println!(
            "T_{{{},{},{}}}: width {}",
            t.a(),
            t.b(),
            t.n(),
            tetlab::width::lattice_width_value(&t)?
        );
    }

    // general placement: width via normalization
    let skewed: tetlab::geom::LatticeTetrahedron = "7,3,-2;8,4,-2;10,9,2;7,4,-2".parse()?;
    println!("skewed copy: width {}", lattice_width_general(&skewed)?);
    Ok(())
}

//! Decide unimodular equivalence of standard tetrahedra via the modular
//! triple criterion, and group all clean tetrahedra at a fixed n by their
//! canonical representative.

use std::collections::BTreeMap;

use tetlab::equiv::{are_equivalent, canonical_pair, triple_families};
use tetlab::geom::StandardTet;
use tetlab::pointcount::is_clean_standard;
use tetlab::Result;

fn main() -> Result<()> {
    let t = StandardTet::new(3, 7, 20)?;
    println!("triples of T_{{3,7,20}}: {:?}", triple_families(&t)?.triples);
    println!(
        "T_{{3,7,20}} ~ T_{{7,11,20}}: {}",
        are_equivalent(&t, &StandardTet::new(7, 11, 20)?)?
    );
    println!(
        "T_{{3,7,20}} ~ T_{{3,9,20}}: {}",
        are_equivalent(&t, &StandardTet::new(3, 9, 20)?)?
    );

    let n = 20;
    let mut classes: BTreeMap<_, Vec<(i64, i64)>> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let t = StandardTet::new(a, b, n)?;
            if is_clean_standard(&t) {
                classes.entry(canonical_pair(&t)?).or_default().push((a, b));
            }
        }
    }
    println!("\nclean tetrahedra at n = {n} fall into {} classes:", classes.len());
    for (rep, members) in &classes {
        println!("  ({}, {}): {} members", rep.a_star, rep.b_star, members.len());
    }
    Ok(())
}

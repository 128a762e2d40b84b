//! Classify tetrahedra by interior point count and show that every clean
//! 1-point tetrahedron with n <= 40 falls into one of the eight known
//! equivalence classes.

use std::collections::BTreeMap;

use tetlab::classify::{classify, one_point_representatives, TetClass};
use tetlab::equiv::canonical_pair;
use tetlab::geom::StandardTet;
use tetlab::pointcount::is_clean_standard;
use tetlab::Result;

fn main() -> Result<()> {
    let mut classes: BTreeMap<_, Vec<(i64, i64, i64)>> = BTreeMap::new();
    for n in 2..=40 {
        for a in 0..n {
            for b in 0..n {
                let t = StandardTet::new(a, b, n)?;
                if !is_clean_standard(&t) {
                    continue;
                }
                if let TetClass::KPoint { k: 1, canonical } = classify(&t)? {
                    classes.entry(canonical).or_default().push((a, b, n));
                }
            }
        }
    }

    println!("{} one-point classes found for n <= 40:", classes.len());
    for rep in one_point_representatives() {
        let canonical = canonical_pair(&rep)?;
        let members = &classes[&canonical];
        println!(
            "  class of T_{{{},{},{}}}: {} members, e.g. {:?}",
            rep.a(),
            rep.b(),
            rep.n(),
            members.len(),
            &members[..members.len().min(3)]
        );
    }
    Ok(())
}

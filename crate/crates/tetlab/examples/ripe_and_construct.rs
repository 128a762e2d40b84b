//! Enumerate the ripe quadruples (candidate barycentric numerators of the
//! interior point of a 1-point tetrahedron) and construct, for each, a
//! tetrahedron realizing it.

use tetlab::classify::enumerate_ripe;
use tetlab::pointcount::construct_from_bc;
use tetlab::Result;

fn main() -> Result<()> {
    for quad in enumerate_ripe(50) {
        let (t, w) = construct_from_bc(&quad.d, quad.n_total)?;
        let bc = t.barycentric_of(&w)?;
        let lambda: Vec<String> = bc.lambda().iter().map(|q| q.to_string()).collect();
        println!(
            "{:?} (sum {}) -> T_{{{},{},{}}} with interior point {:?}, bc ({})",
            quad.d,
            quad.n_total,
            t.a(),
            t.b(),
            t.n(),
            w,
            lambda.join(", ")
        );
    }
    Ok(())
}

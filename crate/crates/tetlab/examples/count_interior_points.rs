//! Count interior lattice points two ways — by the closed residue-sum
//! formula and by a brute-force census — and print the points with their
//! exact barycentric coordinates.

use tetlab::geom::StandardTet;
use tetlab::pointcount::{census, interior_count_formula, interior_points_formula};
use tetlab::Result;

fn main() -> Result<()> {
    for (a, b, n) in [(3, 7, 20), (5, 5, 7), (11, 13, 16), (1, 2, 7)] {
        let t = StandardTet::new(a, b, n)?;
        let i = interior_count_formula(&t)?;
        let pts = interior_points_formula(&t)?;
        let oracle = census(&t.to_tetrahedron())?;
        assert_eq!(pts, oracle.interior, "formula and census must agree");

        println!("T_{{{a},{b},{n}}}: i = {i}");
        for w in &pts {
            let bc = t.barycentric_of(w)?;
            let lambda: Vec<String> = bc.lambda().iter().map(|q| q.to_string()).collect();
            println!("  {w:?}  bc = ({})", lambda.join(", "));
        }
    }
    Ok(())
}

//! Normalize an arbitrarily placed lattice tetrahedron with a clean face to
//! the standard form conv(0, e1, e2, (a,b,n)), and verify the unimodular
//! witness by re-applying it.

use tetlab::geom::LatticeTetrahedron;
use tetlab::normalize::to_standard;
use tetlab::Result;

fn main() -> Result<()> {
    // a shuffled, sheared, translated copy of a standard tetrahedron
    let t: LatticeTetrahedron = "7,3,-2;8,4,-2;10,9,2;7,4,-2".parse()?;

    let result = to_standard(&t)?;
    let s = result.standard;
    println!("standard form: T_{{{},{},{}}}", s.a(), s.b(), s.n());
    println!("vertex permutation: {:?}", result.vertex_permutation);
    println!("witness matrix: {:?}", result.witness.matrix);
    println!("witness translation: {:?}", result.witness.translation);

    // the witness really maps the input onto the standard tetrahedron
    let image = tetlab::geom::apply_map(&result.witness, &t)?;
    let mut got = image.vertices().to_vec();
    let mut want = s.to_tetrahedron().vertices().to_vec();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    println!("witness verified: image vertices match the standard form");
    Ok(())
}

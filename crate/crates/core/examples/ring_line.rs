//! Points of the projective line over M_2(GF(3)), their images in G, and the
//! action of GL(2, R).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grasslab::grassmann::build_index;
use grasslab::ringline::{
    act, distant_witness, hat, make_point, phi, phi_is_bijective, standard_z_chain, Frame,
    Gl2Element, RingPoint,
};
use grasslab::{Field, FpMatrix};

fn main() -> grasslab::Result<()> {
    let f = Field::new(3)?;
    let frame = Frame::standard(f, 2);
    let g = build_index(3, 2)?;

    let report = phi_is_bijective(&g, &frame)?;
    println!(
        "{} ring points, {} elements of G, bijective: {}, {} distant pairs",
        report.ring_points,
        report.grassmannian,
        report.injective && report.surjective,
        report.distant_pairs_ring
    );

    let alpha = FpMatrix::parse(f, &["12", "01"])?;
    let beta = FpMatrix::parse(f, &["20", "11"])?;
    let pt = make_point(&alpha, &beta)?;
    println!("\nR(alpha, beta) = {pt:?}  maps to  {:?}", phi(&pt, &frame)?);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let psi = Gl2Element::random(&mut rng, f, 2);
    let moved = phi(&act(&psi, &pt)?, &frame)?;
    let transported = phi(&pt, &frame)?.map(&hat(&psi, &frame)?)?;
    println!("phi(pt psi) = {moved:?}, phi(pt) psi^ = {transported:?}");

    let origin = RingPoint::origin(f, 2);
    if let Some(w) = distant_witness(&pt, &origin) {
        println!("a group element sending the pair to (R(I,0), R(0,I)): {w:?}");
    }

    let chain: Vec<_> = standard_z_chain(f, 2).iter().map(|p| phi(p, &frame)).collect::<Result<_, _>>()?;
    println!("\nimage of the standard chain: {chain:?}");
    Ok(())
}

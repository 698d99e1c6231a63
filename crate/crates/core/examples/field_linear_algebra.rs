//! Row reduction, inversion and null spaces over GF(p).

use grasslab::{Field, FpMatrix};

fn main() -> grasslab::Result<()> {
    let f3 = Field::new(3)?;
    let m = FpMatrix::parse(f3, &["1201", "2110", "0011"])?;
    let r = m.rref();
    println!("A =\n{m}");
    println!("rref(A) =\n{}\nrank {} pivots {:?}", r.matrix, r.rank, r.pivots);
    println!("kernel basis (A x = 0) =\n{}", m.kernel());

    let g = FpMatrix::parse(f3, &["12", "01"])?;
    let inv = g.invert()?;
    println!("g^-1 =\n{inv}\ng * g^-1 = identity: {}", g.matmul(&inv)?.is_identity());

    let singular = FpMatrix::parse(Field::gf2(), &["11", "11"])?;
    println!("inverting {singular:?}: {:?}", singular.invert());
    Ok(())
}

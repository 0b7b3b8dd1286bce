//! Tour of the exact rational linear-algebra layer everything else is built
//! on: matrices of arbitrary-precision rationals, reduced row echelon form,
//! determinants, inverses, general linear solving and canonical subspaces.
//!
//! Run with: cargo run --example exact_linear_algebra

use desys::rational::{parse_rational, ratio};
use desys::subspace::Subspace;
use desys::{rcol, rmat};

fn main() -> desys::Result<()> {
    // Rationals come from integer literals, numerator/denominator pairs or
    // strings; nothing is ever rounded.
    let third = ratio(1, 3);
    let parsed = parse_rational("-7/12")?;
    println!("1/3 + (-7/12) = {}", &third + &parsed);

    // Integer matrix literals via the rmat! macro. Entries are exact, so
    // rank decisions never depend on a tolerance.
    let a = rmat![[2, 4, 1], [0, 1, 3], [2, 5, 4]];
    println!("\nA =\n{}", a);
    println!("rank(A) = {}", a.rank());
    println!("det(A)  = {}", a.det()?);

    let reduced = a.rref();
    println!("rref(A) =\n{}", reduced.matrix);
    println!("pivot columns: {:?}", reduced.pivots);

    // This matrix is singular: the third row is the sum of the first two.
    let s = rmat![[1, 2, 0], [0, 1, 1], [1, 3, 1]];
    println!("\nS =\n{}", s);
    println!("rank(S) = {} (singular)", s.rank());
    match s.inverse() {
        Ok(_) => unreachable!("S has no inverse"),
        Err(e) => println!("inverse(S) fails as it should: {}", e),
    }
    let kernel = s.nullspace();
    println!("nullspace(S) has dimension {}:", kernel.dim());
    println!("{}", kernel.basis());

    // A consistent underdetermined system: the solver hands back one
    // particular solution plus a basis of the homogeneous solutions.
    let rhs = rcol![3, 1, 4];
    let sol = s.solve_general(&rhs)?;
    println!("\nS x = {:?} has particular solution", [3, 1, 4]);
    println!("{}", sol.particular);
    println!("plus {} homogeneous direction(s)", sol.homogeneous.dim());
    assert_eq!(&s * &sol.particular, rhs);

    // Subspaces are stored in a canonical basis, so set equality is plain
    // equality. Sums and intersections stay exact.
    let u = Subspace::from_columns(3, &rmat![[1, 0], [0, 1], [0, 0]])?;
    let w = Subspace::from_columns(3, &rmat![[0, 0], [1, 0], [0, 1]])?;
    let both = u.intersect(&w)?;
    let either = u.sum(&w)?;
    println!(
        "\ndim(U ∩ W) = {}, dim(U + W) = {}",
        both.dim(),
        either.dim()
    );
    assert!(either.is_full());

    // Preimages drive the Wong sequences later on: all x with S x ∈ U.
    let pulled_back = Subspace::preimage(&s, &u)?;
    println!("dim(S^-1 U) = {}", pulled_back.dim());

    Ok(())
}

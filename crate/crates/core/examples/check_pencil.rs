//! Regularity of the matrix pencil sF - G, decided exactly.
//!
//! A pencil is regular when det(sF - G) is not the zero polynomial; only
//! then do the difference equations F X_{k+1} = G X_k + B V_k have
//! well-defined solution behavior. The degree p of that determinant is also
//! the dimension of the slow subsystem, so it is worth printing.
//!
//! Run with: cargo run --example check_pencil

use desys::demo;
use desys::pencil::{det_degree, det_poly};
use desys::rational::{format_rational, rat};
use desys::DescriptorSystem;

fn describe(name: &str, sys: &DescriptorSystem) -> desys::Result<()> {
    let coeffs = det_poly(sys.f(), sys.g())?;
    let degree = det_degree(sys.f(), sys.g())?;
    let poly = if coeffs.is_empty() {
        "0".to_string()
    } else {
        coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != rat(0))
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*s", format_rational(c)),
                _ => format!("{}*s^{}", format_rational(c), i),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    println!("{name}:");
    println!("  det(sF - G) = {poly}");
    match degree {
        Some(p) => println!("  regular, slow dimension p = {p}"),
        None => println!("  IRREGULAR: the determinant vanishes identically"),
    }
    assert_eq!(sys.is_regular()?, degree.is_some());
    Ok(())
}

fn main() -> desys::Result<()> {
    describe("example_a      (2 slow + 2 fast)", &demo::example_a())?;
    describe("example_a_alt  (3 slow + 1 fast)", &demo::example_a_alt())?;
    describe("example_b      (2 slow + 1 fast)", &demo::example_b())?;
    describe("example_b_alt  (1 slow + 2 fast)", &demo::example_b_alt())?;
    describe("zero_pencil    (degenerate)", &demo::zero_pencil())?;

    // Everything downstream refuses irregular pencils up front.
    match demo::zero_pencil().decompose() {
        Err(desys::Error::IrregularPencil) => {
            println!("\ndecompose on the zero pencil: refused, as expected")
        }
        other => panic!("expected IrregularPencil, got {:?}", other.map(|_| ())),
    }
    Ok(())
}

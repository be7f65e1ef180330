//! Exact arithmetic in cyclotomic fields: build roots of unity, check
//! algebraic identities, and round-trip scalars through the text
//! grammar.

use qhecke::scalar::{parse_scalar, CycloField, Scalar};

fn main() {
    // The twelfth cyclotomic field contains both a cube and a fourth
    // root of unity.
    let field = CycloField::new(12).unwrap();
    let z = Scalar::zeta(&field);
    let q = z.pow(4).unwrap(); // primitive cube root
    let w = z.pow(3).unwrap(); // primitive fourth root

    println!("z = {}", z);
    println!("q = z^4 = {}", q);
    println!("w = z^3 = {}", w);
    println!("q^3 = {}", q.pow(3).unwrap());
    println!("w^2 = {}", w.pow(2).unwrap());

    // 1 + q + q^2 = 0 for a primitive cube root.
    let sum = Scalar::one(&field).add(&q).add(&q.pow(2).unwrap());
    println!("1 + q + q^2 = {}", sum);
    assert!(sum.is_zero());

    // Inverses are exact.
    let s = parse_scalar("1/2*z^3 - 2", &field).unwrap();
    let inv = s.inv().unwrap();
    println!("s = {}", s);
    println!("1/s = {}", inv);
    assert!(s.mul(&inv).is_one());

    // Parsing is inverse to printing.
    let text = inv.to_string();
    assert_eq!(parse_scalar(&text, &field).unwrap(), inv);
    println!("round trip through {:?} agrees", text);
}

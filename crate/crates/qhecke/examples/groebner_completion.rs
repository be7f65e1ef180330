//! Complete a small set of noncommutative relations to a Groebner
//! basis and read coset-basis counts off the leading ideal.

use qhecke::freealg::{parse_polynomial, MonomialOrder};
use qhecke::groebner::{buchberger, coset_basis, coset_count_filtered, DEFAULT_ELEMENT_CAP};
use qhecke::scalar::CycloField;

fn main() {
    let field = CycloField::rational();
    let o = MonomialOrder::default_for(2, 1);

    // A quantum plane with a unit deformation: v2 v1 = 2 v1 v2 + 1.
    let rel = parse_polynomial("v2*v1 - 2*v1*v2 - 1", &field, &o).unwrap();
    let gb = buchberger(&[rel], &o, None, DEFAULT_ELEMENT_CAP).unwrap();
    println!("completion level: {:?}", gb.complete_to_degree);
    for f in &gb.elements {
        println!("basis element: {}", f);
    }

    // The quotient has the standard monomial basis v1^a v2^b, so the
    // filtration count matches the commutative polynomial ring.
    let basis = coset_basis(&gb, 4).unwrap();
    println!("coset monomials up to degree 4: {}", basis.len());
    for k in 0..=4 {
        let count = coset_count_filtered(&gb, k).unwrap();
        println!("degree <= {}: {} monomials", k, count);
    }
    assert_eq!(coset_count_filtered(&gb, 4).unwrap(), 15); // binom(6, 2)
}

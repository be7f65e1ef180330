//! The graded automorphism group of quantum 3-space falls into a
//! small number of cases depending on the parameters; tag a few
//! sample parameter triples and test matrices against the case shape.

use qhecke::classify::aut3_case;
use qhecke::group::GroupElement;
use qhecke::scalar::{parse_scalar, CycloField, Scalar};

fn main() {
    let field = CycloField::new(4).unwrap();
    let s = |t: &str| parse_scalar(t, &field).unwrap();

    let samples = [
        ("1", "1", "1"),       // commuting variables
        ("-1", "-1", "-1"),    // all parameters -1
        ("2", "3", "5"),       // generic
        ("2", "1/2", "2"),     // equal cycle parameters
        ("2", "2", "1"),       // one pair commutes
        ("2", "2", "-1"),      // one parameter -1
    ];
    for (q12, q13, q23) in samples {
        let report = aut3_case(&s(q12), &s(q13), &s(q23)).unwrap();
        println!(
            "q12 = {:>4}, q13 = {:>4}, q23 = {:>4}: case {:<3} ({})",
            q12, q13, q23, report.case, report.note
        );
    }

    // Case shapes act as membership predicates on matrices.
    let generic = aut3_case(&s("2"), &s("3"), &s("5")).unwrap();
    let diag = GroupElement::new(
        3,
        [2, 0, 0, 0, 3, 0, 0, 0, 5]
            .iter()
            .map(|&v| Scalar::from_integer(&field, v))
            .collect(),
    );
    let swap = GroupElement::new(
        3,
        [0, 1, 0, 1, 0, 0, 0, 0, 1]
            .iter()
            .map(|&v| Scalar::from_integer(&field, v))
            .collect(),
    );
    println!(
        "generic case accepts diagonal: {}, accepts swap: {}",
        generic.accepts(&diag),
        generic.accepts(&swap)
    );
    assert!(generic.accepts(&diag));
    assert!(!generic.accepts(&swap));
}

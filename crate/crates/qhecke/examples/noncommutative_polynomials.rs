//! Words and polynomials in the free algebra on variable and group
//! letters, with the admissible monomial orders used throughout the
//! crate.

use qhecke::freealg::{parse_polynomial, Letter, MonomialOrder, OrderStyle, Word};
use qhecke::scalar::CycloField;

fn main() {
    let field = CycloField::rational();
    // Two variables, a group of order two.
    let o = MonomialOrder::default_for(2, 2);

    let p = parse_polynomial("v2*v1 - 2*v1*v2 + t2", &field, &o).unwrap();
    println!("p = {}", p);
    let (lm, lc) = p.leading().unwrap();
    println!("leading monomial {} with coefficient {}", lm, lc);

    // Multiplication is noncommutative.
    let v1 = parse_polynomial("v1", &field, &o).unwrap();
    let v2 = parse_polynomial("v2", &field, &o).unwrap();
    let left = v1.mul(&v2, &o);
    let right = v2.mul(&v1, &o);
    println!("v1*v2 = {}   v2*v1 = {}", left, right);
    assert!(!left.sub(&right, &o).is_zero());

    // The two order styles disagree on words of equal degree.
    let left_lex = MonomialOrder::new(OrderStyle::DegLeftLex, o.precedence().to_vec());
    let u = Word(vec![Letter::Var(1), Letter::Var(2)]);
    let w = Word(vec![Letter::Var(2), Letter::Var(1)]);
    println!(
        "degrightlex: {} vs {} -> {:?}",
        u,
        w,
        o.compare(&u, &w)
    );
    println!(
        "degleftlex:  {} vs {} -> {:?}",
        u,
        w,
        left_lex.compare(&u, &w)
    );

    // Subword occurrences drive reduction.
    let big = Word(vec![
        Letter::Var(1),
        Letter::Var(2),
        Letter::Var(1),
        Letter::Var(2),
    ]);
    let pat = Word(vec![Letter::Var(2), Letter::Var(1)]);
    for (l, r) in big.find_subword(&pat) {
        println!("{} = ({}) * {} * ({})", big, l, pat, r);
    }
}

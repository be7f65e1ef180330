//! Generate a finite matrix group from generators and inspect the
//! canonical enumeration, inverses, and conjugation.

use qhecke::group::{FiniteGroup, GroupElement};
use qhecke::scalar::{CycloField, Scalar};

fn int_matrix(field: &std::sync::Arc<CycloField>, n: usize, vals: &[i64]) -> GroupElement {
    GroupElement::new(
        n,
        vals.iter().map(|&v| Scalar::from_integer(field, v)).collect(),
    )
}

fn main() {
    let field = CycloField::rational();
    // Two reflections generating a dihedral group of order 8 in 3-space.
    let gens = vec![
        int_matrix(&field, 3, &[0, 0, 1, 0, -1, 0, 1, 0, 0]),
        int_matrix(&field, 3, &[1, 0, 0, 0, -1, 0, 0, 0, -1]),
    ];
    let g = FiniteGroup::generate(&field, 3, &gens, 64).unwrap();
    println!("group order: {}", g.size());

    for k in 0..g.size() {
        let inv = g.inverse(k);
        let order = {
            let mut m = k;
            let mut ord = 1;
            while m != 0 {
                m = g.product(m, k);
                ord += 1;
            }
            ord
        };
        println!(
            "g{}: inverse g{}, element order {}, det {}",
            k + 1,
            inv + 1,
            order,
            g.element(k).determinant()
        );
    }

    // Conjugacy classes come straight off the multiplication table.
    for class in g.conjugacy_classes() {
        let labels: Vec<String> = class.iter().map(|&c| format!("g{}", c + 1)).collect();
        println!("class: {{{}}}", labels.join(", "));
    }
}

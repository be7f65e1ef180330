//! Closed-form support sets for a diagonal group: which elements can
//! carry a deformation at each variable pair, read off the characters
//! instead of solving a linear system.

use qhecke::classify::{classify_abelian, kappa_solution_space};
use qhecke::cli::parse_problem;

const PROBLEM: &str = "\
field 3
dim 3
Q
1, z, z
z^2, 1, z
z^2, z^2, 1
generator
z^2, 0, 0
0, 1, 0
0, 0, z
";

fn main() {
    let p = parse_problem(PROBLEM).unwrap();
    let g = p.group().unwrap();
    println!("cyclic group of order {}", g.size());

    let support = classify_abelian(&p.q, &g).unwrap();
    let mut total = 0usize;
    for ((i, j), elems) in &support.admissible {
        let labels: Vec<String> = elems.iter().map(|&k| format!("g{}", k + 1)).collect();
        println!(
            "pair ({}, {}): {}",
            i,
            j,
            if labels.is_empty() {
                "empty".to_string()
            } else {
                labels.join(", ")
            }
        );
        total += elems.len();
    }

    // The character computation and the general solver agree.
    let space = kappa_solution_space(&p.q, &g).unwrap();
    println!(
        "character count {} = solver dimension {}",
        total, space.dimension
    );
    assert_eq!(total, space.dimension);
}

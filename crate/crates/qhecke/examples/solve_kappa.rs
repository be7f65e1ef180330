//! Solve the linear system cutting out every admissible deformation
//! parameter at once, and verify each basis vector against both PBW
//! oracles.

use qhecke::classify::kappa_solution_space;
use qhecke::cli::parse_problem;
use qhecke::qdha::{check_pbw_conditions, is_pbw_via_groebner, PbwVerdict};

const PROBLEM: &str = "\
field 4
dim 3
Q
1, -z, -1
z, 1, z
-1, -z, 1
generator
0, 0, 1
0, -1, 0
1, 0, 0
generator
1, 0, 0
0, -1, 0
0, 0, -1
";

fn main() {
    let p = parse_problem(PROBLEM).unwrap();
    let g = p.group().unwrap();

    let space = kappa_solution_space(&p.q, &g).unwrap();
    println!("solution space dimension: {}", space.dimension);
    println!("free positions: {:?}", space.free);
    for (bi, basis) in space.basis.iter().enumerate() {
        println!("basis vector {}:", bi + 1);
        for (&(gk, i, j), s) in basis.iter() {
            println!("  kappa_g{}(v{},v{}) = {}", gk + 1, i, j, s);
        }
        let report = check_pbw_conditions(&p.q, &g, basis);
        let gb = is_pbw_via_groebner(&p.q, &g, basis, 3);
        println!(
            "  conditions: {}, groebner: {}",
            if report.verdict { "PBW" } else { "not PBW" },
            if matches!(gb, PbwVerdict::Pbw) {
                "PBW"
            } else {
                "not PBW"
            }
        );
        assert!(report.verdict);
        assert!(matches!(gb, PbwVerdict::Pbw));
    }
}

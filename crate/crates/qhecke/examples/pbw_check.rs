//! Decide the PBW property for a deformed skew group algebra by both
//! routes: the closed-form parameter conditions and Groebner
//! completion of the defining relations.

use qhecke::cli::parse_problem;
use qhecke::qdha::{check_pbw_conditions, is_pbw_via_groebner, PbwVerdict};

const PROBLEM: &str = "\
field 1
dim 3
Q
1, -1, 1
-1, 1, -1
1, -1, 1
generator
0, 0, 1
0, -1, 0
1, 0, 0
generator
1, 0, 0
0, -1, 0
0, 0, -1
kappa 4 1 3 = -1
kappa 5 1 3 = 1
";

fn main() {
    let p = parse_problem(PROBLEM).unwrap();
    let g = p.group().unwrap();
    let kappa = p.kappa();

    let report = check_pbw_conditions(&p.q, &g, &kappa);
    println!(
        "closed-form conditions: {}",
        if report.verdict { "PBW" } else { "not PBW" }
    );

    let verdict = is_pbw_via_groebner(&p.q, &g, &kappa, 3);
    match &verdict {
        PbwVerdict::Pbw => println!("groebner completion: PBW"),
        PbwVerdict::NotPbw(witness) => {
            println!("groebner completion: not PBW, witness {}", witness)
        }
        PbwVerdict::Inconclusive => println!("groebner completion: inconclusive"),
    }
    assert!(report.verdict);
    assert!(matches!(verdict, PbwVerdict::Pbw));

    // Scaling one deformation entry without the other breaks the
    // conjugation-invariance condition, and both routes notice.
    let mut broken = kappa.clone();
    let two = qhecke::scalar::Scalar::from_integer(&p.field, 2);
    broken.set(4, 1, 3, two).unwrap();
    let report = check_pbw_conditions(&p.q, &g, &broken);
    println!(
        "after scaling one entry: conditions say {}",
        if report.verdict { "PBW" } else { "not PBW" }
    );
    for v in report.violations.iter().take(3) {
        println!("  violation: {:?}", v);
    }
    assert!(!report.verdict);
    assert!(matches!(
        is_pbw_via_groebner(&p.q, &g, &broken, 3),
        PbwVerdict::NotPbw(_)
    ));
}

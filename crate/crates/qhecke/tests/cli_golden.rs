//! Golden-file tests for the command-line surface: every report is
//! compared byte-for-byte, and every shipped fixture parses and
//! round-trips through the printer.

use qhecke::cli::{parse_problem, print_problem, run, Command};

fn fixture_path(name: &str) -> String {
    format!("{}/../../fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)
}

#[test]
fn every_fixture_parses_and_round_trips() {
    let dir = format!("{}/../../fixtures", env!("CARGO_MANIFEST_DIR"));
    let mut count = 0usize;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().map(|e| e != "prob").unwrap_or(true) {
            continue;
        }
        count += 1;
        let text = std::fs::read_to_string(&path).unwrap();
        let p = parse_problem(&text).unwrap_or_else(|e| panic!("{:?}: {}", path, e));
        let printed = print_problem(&p);
        let reparsed = parse_problem(&printed).unwrap();
        assert_eq!(print_problem(&reparsed), printed, "{:?}", path);
    }
    assert!(count >= 11, "expected the full fixture set, found {}", count);
}

#[test]
fn reports_are_byte_stable() {
    // Two runs of the same command produce identical bytes.
    let cmd = Command::SolveKappa {
        problem: fixture_path("d8_case2.prob"),
    };
    let a = run(&cmd);
    let b = run(&cmd);
    assert_eq!(a.report, b.report);
    assert_eq!(a.exit_code, b.exit_code);
}

#[test]
fn golden_check_aut() {
    let out = run(&Command::CheckAut {
        problem: fixture_path("d8_case2.prob"),
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.report,
        "g1: automorphism\n\
         g2: automorphism\n\
         g3: automorphism\n\
         g4: automorphism\n\
         g5: automorphism\n\
         g6: automorphism\n\
         g7: automorphism\n\
         g8: automorphism\n\
         verdict: all automorphisms\n"
    );
}

#[test]
fn golden_check_pbw_case6() {
    let out = run(&Command::CheckPbw {
        problem: fixture_path("d8_case6.prob"),
        method: "both".into(),
        max_degree: 3,
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.report,
        "conditions: PBW\ngroebner: PBW\nverdict: PBW\n"
    );
}

#[test]
fn golden_solve_kappa_case2() {
    let out = run(&Command::SolveKappa {
        problem: fixture_path("d8_case2.prob"),
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.report,
        "dimension 1\n\
         basis vector 1:\n  \
         kappa_g4(v1,v3) = -1\n  \
         kappa_g5(v1,v3) = 1\n"
    );
}

#[test]
fn golden_solve_kappa_case4_is_rigid() {
    let out = run(&Command::SolveKappa {
        problem: fixture_path("d8_case4.prob"),
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.report, "dimension 0\n");
}

#[test]
fn golden_coset_count_case1() {
    let out = run(&Command::CosetCount {
        problem: fixture_path("d8_case1.prob"),
        deg: 3,
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.report, "count = 160\n");
}

#[test]
fn golden_classify_abelian_cyclic3() {
    let out = run(&Command::ClassifyAbelian {
        problem: fixture_path("cyclic3.prob"),
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.report,
        "pair (1, 2): empty\npair (1, 3): g1, g2, g3\npair (2, 3): empty\n"
    );
}

#[test]
fn golden_classify_2d() {
    let out = run(&Command::Classify2d {
        problem: fixture_path("dim2_swap.prob"),
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.report,
        "branch: q = -1\n\
         support: g1, g2\n\
         predicted dimension: 2\n\
         solver dimension: 2\n\
         agreement: yes\n"
    );
}

#[test]
fn golden_aut3_case() {
    let out = run(&Command::Aut3Case {
        q12: "2".into(),
        q13: "1/2".into(),
        q23: "2".into(),
        field_conductor: 1,
    });
    assert_eq!(out.exit_code, 0);
    assert!(out.report.starts_with("case IV\n"));
}

#[test]
fn golden_groebner_leading_terms() {
    let out = run(&Command::Groebner {
        problem: fixture_path("dim2_swap.prob"),
        max_degree: None,
        emit: "leading".into(),
        order: None,
        precedence: None,
    });
    assert_eq!(out.exit_code, 0);
    assert_eq!(
        out.report,
        "complete: yes\nelements: 4\nt2*t2\nt2*v2\nt2*v1\nv2*v1\n"
    );
}

#[test]
fn input_errors_exit_2() {
    let out = run(&Command::CheckPbw {
        problem: "/no/such/file.prob".into(),
        method: "both".into(),
        max_degree: 3,
    });
    assert_eq!(out.exit_code, 2);
    assert!(out.report.starts_with("error: "));
}

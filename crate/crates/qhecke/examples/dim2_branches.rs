//! In two variables the deformation space has a clean description:
//! an element can support a deformation exactly when its whole
//! conjugacy class consists of quantum determinant 1 elements.

use qhecke::classify::{classify_dim2, Dim2Branch};
use qhecke::cli::parse_problem;

fn report(label: &str, text: &str) {
    let p = parse_problem(text).unwrap();
    let g = p.group().unwrap();
    let r = classify_dim2(&p.q, &g).unwrap();
    let branch = match r.branch {
        Dim2Branch::One => "q = 1",
        Dim2Branch::MinusOne => "q = -1",
        Dim2Branch::Generic => "generic q",
    };
    let labels: Vec<String> = r.support.iter().map(|&k| format!("g{}", k + 1)).collect();
    println!(
        "{}: branch {}, support {{{}}}, predicted {} = solver {}",
        label,
        branch,
        labels.join(", "),
        r.predicted_dimension,
        r.solver_dimension
    );
    assert!(r.agrees);
}

fn main() {
    // The swap has quantum determinant ad - q*bc = -q; at q = -1 it
    // supports a deformation, at q = 1 it does not.
    report(
        "swap at q = -1",
        "field 1\ndim 2\nQ\n1, -1\n-1, 1\ngenerator\n0, 1\n1, 0\n",
    );
    report(
        "swap at q = 1",
        "field 1\ndim 2\nQ\n1, 1\n1, 1\ngenerator\n0, 1\n1, 0\n",
    );
    // A cyclic group of order 4 generated by diag(i, -i) at generic q:
    // every element is diagonal with quantum determinant equal to the
    // ordinary one.
    report(
        "diag(i, -i) at q = 2",
        "field 4\ndim 2\nQ\n1, 2\n1/2, 1\ngenerator\nz, 0\n0, -z\n",
    );
}

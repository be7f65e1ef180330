//! Problem-file parsing, subcommand dispatch, and report emission.
//!
//! The problem format is line-oriented: `field m` declares the
//! cyclotomic field, `dim n` the number of variables, `Q` starts an
//! `n x n` block of comma-separated scalar literals, each `generator`
//! starts one matrix block, `kappa g i j = scalar` assigns one
//! deformation entry (with `g` the 1-based canonical element number
//! and `i < j`), and `order` optionally overrides the monomial order
//! style. `#` starts a comment. Reports are deterministic text,
//! suitable for golden-file testing; exit code 0 means a positive
//! verdict, 1 a negative mathematical verdict, 2 an input error.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::classify;
use crate::freealg::{Letter, MonomialOrder, OrderStyle};

fn parse_letter(token: &str) -> Result<Letter, CliError> {
    let bad = || {
        CliError::semantic(format!(
            "bad precedence letter {:?}; use v<i> or t<k>",
            token
        ))
    };
    if token.len() < 2 || !token.is_ascii() {
        return Err(bad());
    }
    let (kind, index) = token.split_at(1);
    let idx: usize = index.parse().map_err(|_| bad())?;
    match kind {
        "v" if idx >= 1 => Ok(Letter::Var(idx)),
        "t" if idx >= 2 => Ok(Letter::Grp(idx - 1)),
        _ => Err(bad()),
    }
}
use crate::groebner;
use crate::group::{FiniteGroup, GroupElement};
use crate::qdha::{self, KappaParam, PbwVerdict, QuantumParams};
use crate::scalar::{parse_scalar, CycloField, Scalar};

/// Cap on generated group sizes for problem files.
pub const GROUP_CAP: usize = 1024;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    fn semantic(msg: impl Into<String>) -> Self {
        CliError::Semantic(msg.into())
    }
}

/// A parsed problem file. Printing and re-parsing yields the same
/// structure.
#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub field: Arc<CycloField>,
    pub dim: usize,
    pub order: Option<OrderStyle>,
    pub q: QuantumParams,
    pub generators: Vec<GroupElement>,
    /// Entries `(g, i, j, value)` with `g` the 0-based canonical
    /// element index and `i < j`.
    pub kappa_entries: Vec<(usize, usize, usize, Scalar)>,
}

fn parse_matrix_block(
    lines: &[(usize, &str)],
    pos: &mut usize,
    n: usize,
    field: &Arc<CycloField>,
) -> Result<Vec<Scalar>, CliError> {
    let mut entries = Vec::with_capacity(n * n);
    for _ in 0..n {
        let Some(&(lineno, row)) = lines.get(*pos) else {
            return Err(CliError::semantic(format!(
                "matrix block ended early: expected {} rows",
                n
            )));
        };
        *pos += 1;
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != n {
            return Err(CliError::Syntax {
                line: lineno,
                msg: format!("expected {} comma-separated entries, got {}", n, cells.len()),
            });
        }
        for cell in cells {
            let s = parse_scalar(cell.trim(), field).map_err(|e| CliError::Syntax {
                line: lineno,
                msg: e.to_string(),
            })?;
            entries.push(s);
        }
    }
    Ok(entries)
}

/// Parse a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            let body = l.split('#').next().unwrap_or("").trim();
            (i + 1, body)
        })
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut pos = 0usize;
    let mut conductor: Option<u32> = None;
    let mut dim: Option<usize> = None;
    let mut order: Option<OrderStyle> = None;
    let mut field: Option<Arc<CycloField>> = None;
    let mut q_entries: Option<Vec<Scalar>> = None;
    let mut generators: Vec<GroupElement> = Vec::new();
    let mut kappa_raw: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    while pos < lines.len() {
        let (lineno, line) = lines[pos];
        pos += 1;
        let mut words = line.split_whitespace();
        let key = words.next().unwrap_or("");
        match key {
            "field" => {
                let m: u32 = words
                    .next()
                    .ok_or(CliError::Syntax {
                        line: lineno,
                        msg: "field requires a conductor".into(),
                    })?
                    .parse()
                    .map_err(|_| CliError::Syntax {
                        line: lineno,
                        msg: "conductor must be a positive integer".into(),
                    })?;
                let f = CycloField::new(m).map_err(|e| CliError::Syntax {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                conductor = Some(m);
                field = Some(f);
            }
            "dim" => {
                let n: usize = words
                    .next()
                    .ok_or(CliError::Syntax {
                        line: lineno,
                        msg: "dim requires an integer".into(),
                    })?
                    .parse()
                    .map_err(|_| CliError::Syntax {
                        line: lineno,
                        msg: "dim must be a positive integer".into(),
                    })?;
                if n == 0 {
                    return Err(CliError::Syntax {
                        line: lineno,
                        msg: "dim must be at least 1".into(),
                    });
                }
                dim = Some(n);
            }
            "order" => {
                let style = match words.next() {
                    Some("degrightlex") => OrderStyle::DegRightLex,
                    Some("degleftlex") => OrderStyle::DegLeftLex,
                    other => {
                        return Err(CliError::Syntax {
                            line: lineno,
                            msg: format!(
                                "unknown order {:?}; use degrightlex or degleftlex",
                                other.unwrap_or("")
                            ),
                        })
                    }
                };
                order = Some(style);
            }
            "Q" => {
                let f = field.as_ref().ok_or(CliError::Syntax {
                    line: lineno,
                    msg: "Q must come after the field declaration".into(),
                })?;
                let n = dim.ok_or(CliError::Syntax {
                    line: lineno,
                    msg: "Q must come after the dim declaration".into(),
                })?;
                q_entries = Some(parse_matrix_block(&lines, &mut pos, n, f)?);
            }
            "generator" => {
                let f = field.as_ref().ok_or(CliError::Syntax {
                    line: lineno,
                    msg: "generator must come after the field declaration".into(),
                })?;
                let n = dim.ok_or(CliError::Syntax {
                    line: lineno,
                    msg: "generator must come after the dim declaration".into(),
                })?;
                let entries = parse_matrix_block(&lines, &mut pos, n, f)?;
                generators.push(GroupElement::new(n, entries));
            }
            "kappa" => {
                let f = field.as_ref().ok_or(CliError::Syntax {
                    line: lineno,
                    msg: "kappa must come after the field declaration".into(),
                })?;
                // kappa g i j = scalar
                let rest = line.strip_prefix("kappa").unwrap().trim();
                let (head, value) = rest.split_once('=').ok_or(CliError::Syntax {
                    line: lineno,
                    msg: "kappa lines have the form: kappa g i j = scalar".into(),
                })?;
                let nums: Vec<usize> = head
                    .split_whitespace()
                    .map(|w| w.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CliError::Syntax {
                        line: lineno,
                        msg: "kappa indices must be positive integers".into(),
                    })?;
                let [g, i, j] = nums[..] else {
                    return Err(CliError::Syntax {
                        line: lineno,
                        msg: "kappa lines have the form: kappa g i j = scalar".into(),
                    });
                };
                if g == 0 || i == 0 || j == 0 {
                    return Err(CliError::Syntax {
                        line: lineno,
                        msg: "kappa indices are 1-based".into(),
                    });
                }
                if i >= j {
                    return Err(CliError::Syntax {
                        line: lineno,
                        msg: format!(
                            "kappa requires i < j; state the entry at ({}, {}) -- the value at ({}, {}) follows from the quantum 2-form",
                            j, i, i, j
                        ),
                    });
                }
                let s = parse_scalar(value.trim(), f).map_err(|e| CliError::Syntax {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                kappa_raw.push((g - 1, i, j, s));
            }
            other => {
                return Err(CliError::Syntax {
                    line: lineno,
                    msg: format!("unknown key {:?}", other),
                })
            }
        }
    }
    let field = field.ok_or(CliError::semantic("missing field declaration"))?;
    let dim = dim.ok_or(CliError::semantic("missing dim declaration"))?;
    let q_entries = q_entries.ok_or(CliError::semantic("missing Q block"))?;
    let q = QuantumParams::new(&field, dim, q_entries)
        .map_err(|e| CliError::semantic(e.to_string()))?;
    let _ = conductor;
    Ok(ProblemFile {
        field,
        dim,
        order,
        q,
        generators,
        kappa_entries: kappa_raw,
    })
}

/// Render a problem file in the canonical layout accepted by
/// [`parse_problem`].
pub fn print_problem(p: &ProblemFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "field {}", p.field.conductor());
    let _ = writeln!(out, "dim {}", p.dim);
    if let Some(style) = p.order {
        let name = match style {
            OrderStyle::DegRightLex => "degrightlex",
            OrderStyle::DegLeftLex => "degleftlex",
        };
        let _ = writeln!(out, "order {}", name);
    }
    let _ = writeln!(out, "Q");
    for i in 1..=p.dim {
        let row: Vec<String> = (1..=p.dim).map(|j| p.q.q(i, j).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(", "));
    }
    for g in &p.generators {
        let _ = writeln!(out, "generator");
        for i in 1..=p.dim {
            let row: Vec<String> = (1..=p.dim).map(|j| g.entry(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(", "));
        }
    }
    for (g, i, j, s) in &p.kappa_entries {
        let _ = writeln!(out, "kappa {} {} {} = {}", g + 1, i, j, s);
    }
    out
}

impl ProblemFile {
    /// Generate the group from the declared generators.
    pub fn group(&self) -> Result<FiniteGroup, CliError> {
        let g = FiniteGroup::generate(&self.field, self.dim, &self.generators, GROUP_CAP)
            .map_err(|e| CliError::semantic(e.to_string()))?;
        for &(gi, _, _, _) in &self.kappa_entries {
            if gi >= g.size() {
                return Err(CliError::semantic(format!(
                    "kappa refers to element {} but the group has {} elements",
                    gi + 1,
                    g.size()
                )));
            }
        }
        Ok(g)
    }

    pub fn kappa(&self) -> KappaParam {
        let mut kappa = KappaParam::new();
        for (g, i, j, s) in &self.kappa_entries {
            kappa.set(*g, *i, *j, s.clone()).expect("i < j checked at parse");
        }
        kappa
    }

    pub fn monomial_order(&self, group_size: usize) -> MonomialOrder {
        let style = self.order.unwrap_or(OrderStyle::DegRightLex);
        let default = MonomialOrder::default_for(self.dim, group_size);
        MonomialOrder::new(style, default.precedence().to_vec())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qhecke",
    about = "Exact PBW checks and parameter classification for deformed quantum polynomial algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that every group element respects the skew relations.
    CheckAut { problem: String },
    /// Decide the PBW property by closed-form conditions, completion,
    /// or both.
    CheckPbw {
        problem: String,
        #[arg(long, default_value = "both")]
        method: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Complete the defining relations to a Groebner basis and print
    /// it.
    Groebner {
        problem: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value = "basis")]
        emit: String,
        /// Override the order style: degrightlex or degleftlex.
        #[arg(long)]
        order: Option<String>,
        /// Override the letter precedence, highest first, as a
        /// comma-separated list like "v1,v2,v3,t2,t3".
        #[arg(long)]
        precedence: Option<String>,
    },
    /// Solve the linear system for all admissible deformations.
    SolveKappa { problem: String },
    /// Closed-form support sets for a diagonal group.
    ClassifyAbelian { problem: String },
    /// Branch analysis in dimension two.
    #[command(name = "classify-2d")]
    Classify2d { problem: String },
    /// Automorphism-group case of quantum 3-space at concrete
    /// parameters.
    Aut3Case {
        q12: String,
        q13: String,
        q23: String,
        #[arg(long, default_value_t = 1)]
        field_conductor: u32,
    },
    /// Count coset-basis monomials up to a filtration degree.
    CosetCount {
        problem: String,
        #[arg(long)]
        deg: usize,
    },
}

/// Exit code plus rendered report.
pub struct Outcome {
    pub exit_code: i32,
    pub report: String,
}

fn load(problem: &str) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(problem)
        .map_err(|e| CliError::semantic(format!("cannot read {}: {}", problem, e)))?;
    parse_problem(&text)
}

fn element_label(k: usize) -> String {
    format!("g{}", k + 1)
}

fn run_inner(cmd: &Command) -> Result<Outcome, CliError> {
    let mut out = String::new();
    match cmd {
        Command::CheckAut { problem } => {
            let p = load(problem)?;
            let g = p.group()?;
            if !p.q.is_qps() {
                return Err(CliError::semantic(
                    "the quantum parameters are not a quantum system of parameters",
                ));
            }
            let mut all_ok = true;
            for k in 0..g.size() {
                match qdha::acts_as_automorphism(g.element(k), &p.q)
                    .map_err(|e| CliError::semantic(e.to_string()))?
                {
                    None => {
                        let _ = writeln!(out, "{}: automorphism", element_label(k));
                    }
                    Some((i, j, kk, l)) => {
                        all_ok = false;
                        let _ = writeln!(
                            out,
                            "{}: fails the minor identity at ({}, {}, {}, {})",
                            element_label(k),
                            i,
                            j,
                            kk,
                            l
                        );
                    }
                }
            }
            let _ = writeln!(out, "verdict: {}", if all_ok { "all automorphisms" } else { "not all automorphisms" });
            Ok(Outcome {
                exit_code: if all_ok { 0 } else { 1 },
                report: out,
            })
        }
        Command::CheckPbw {
            problem,
            method,
            max_degree,
        } => {
            let p = load(problem)?;
            let g = p.group()?;
            let kappa = p.kappa();
            let mut verdicts = Vec::new();
            if method == "conditions" || method == "both" {
                let report = qdha::check_pbw_conditions(&p.q, &g, &kappa);
                let _ = writeln!(
                    out,
                    "conditions: {}",
                    if report.verdict { "PBW" } else { "not PBW" }
                );
                for v in report.violations.iter().take(10) {
                    let _ = writeln!(out, "  violation ({:?}): {:?}", v.tag(), v);
                }
                if report.violations.len() > 10 {
                    let _ = writeln!(out, "  ... {} violations total", report.violations.len());
                }
                verdicts.push(report.verdict);
            }
            if method == "groebner" || method == "both" {
                let verdict = qdha::is_pbw_via_groebner(&p.q, &g, &kappa, *max_degree);
                let (text, ok) = match &verdict {
                    PbwVerdict::Pbw => ("PBW".to_string(), true),
                    PbwVerdict::NotPbw(w) => (format!("not PBW (witness: {})", w), false),
                    PbwVerdict::Inconclusive => ("inconclusive".to_string(), false),
                };
                let _ = writeln!(out, "groebner: {}", text);
                verdicts.push(ok);
            }
            if verdicts.is_empty() {
                return Err(CliError::semantic(format!(
                    "unknown method {:?}; use conditions, groebner, or both",
                    method
                )));
            }
            let agree = verdicts.iter().all(|&v| v == verdicts[0]);
            if !agree {
                let _ = writeln!(out, "warning: the two methods disagree");
            }
            let ok = verdicts.iter().all(|&v| v);
            let _ = writeln!(out, "verdict: {}", if ok { "PBW" } else { "not PBW" });
            Ok(Outcome {
                exit_code: if ok { 0 } else { 1 },
                report: out,
            })
        }
        Command::Groebner {
            problem,
            max_degree,
            emit,
            order,
            precedence,
        } => {
            let p = load(problem)?;
            let g = p.group()?;
            let mut o = p.monomial_order(g.size());
            if order.is_some() || precedence.is_some() {
                let style = match order.as_deref() {
                    None => o.style(),
                    Some("degrightlex") => OrderStyle::DegRightLex,
                    Some("degleftlex") => OrderStyle::DegLeftLex,
                    Some(other) => {
                        return Err(CliError::semantic(format!(
                            "unknown order {:?}; use degrightlex or degleftlex",
                            other
                        )))
                    }
                };
                let letters = match precedence {
                    None => o.precedence().to_vec(),
                    Some(spec) => {
                        let mut letters = Vec::new();
                        for token in spec.split(',') {
                            letters.push(parse_letter(token.trim())?);
                        }
                        letters
                    }
                };
                o = MonomialOrder::new(style, letters);
            }
            let rels = qdha::build_relations(&p.q, &g, &p.kappa(), &o);
            let gb = groebner::buchberger(&rels, &o, *max_degree, groebner::DEFAULT_ELEMENT_CAP)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let _ = writeln!(
                out,
                "complete: {}",
                match gb.complete_to_degree {
                    groebner::CompletionLevel::Unbounded => "yes".to_string(),
                    groebner::CompletionLevel::Bounded(d) => format!("up to degree {}", d),
                }
            );
            let _ = writeln!(out, "elements: {}", gb.elements.len());
            for f in &gb.elements {
                match emit.as_str() {
                    "basis" => {
                        let _ = writeln!(out, "{}", f);
                    }
                    "leading" => {
                        let _ = writeln!(out, "{}", f.leading().expect("basis elements are nonzero").0);
                    }
                    other => {
                        return Err(CliError::semantic(format!(
                            "unknown emit mode {:?}; use basis or leading",
                            other
                        )))
                    }
                }
            }
            Ok(Outcome {
                exit_code: 0,
                report: out,
            })
        }
        Command::SolveKappa { problem } => {
            let p = load(problem)?;
            let g = p.group()?;
            let space = classify::kappa_solution_space(&p.q, &g)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let _ = writeln!(out, "dimension {}", space.dimension);
            for (bi, basis) in space.basis.iter().enumerate() {
                let _ = writeln!(out, "basis vector {}:", bi + 1);
                for (&(gk, i, j), s) in basis.iter() {
                    let _ = writeln!(
                        out,
                        "  kappa_{}(v{},v{}) = {}",
                        element_label(gk),
                        i,
                        j,
                        s
                    );
                }
            }
            Ok(Outcome {
                exit_code: 0,
                report: out,
            })
        }
        Command::ClassifyAbelian { problem } => {
            let p = load(problem)?;
            let g = p.group()?;
            let support = classify::classify_abelian(&p.q, &g)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            for ((i, j), elems) in &support.admissible {
                let labels: Vec<String> = elems.iter().map(|&k| element_label(k)).collect();
                let _ = writeln!(
                    out,
                    "pair ({}, {}): {}",
                    i,
                    j,
                    if labels.is_empty() {
                        "empty".to_string()
                    } else {
                        labels.join(", ")
                    }
                );
            }
            Ok(Outcome {
                exit_code: 0,
                report: out,
            })
        }
        Command::Classify2d { problem } => {
            let p = load(problem)?;
            let g = p.group()?;
            let report = classify::classify_dim2(&p.q, &g)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let branch = match report.branch {
                classify::Dim2Branch::One => "q = 1",
                classify::Dim2Branch::MinusOne => "q = -1",
                classify::Dim2Branch::Generic => "q generic",
            };
            let _ = writeln!(out, "branch: {}", branch);
            let labels: Vec<String> = report.support.iter().map(|&k| element_label(k)).collect();
            let _ = writeln!(
                out,
                "support: {}",
                if labels.is_empty() {
                    "empty".to_string()
                } else {
                    labels.join(", ")
                }
            );
            let _ = writeln!(out, "predicted dimension: {}", report.predicted_dimension);
            let _ = writeln!(out, "solver dimension: {}", report.solver_dimension);
            let _ = writeln!(out, "agreement: {}", if report.agrees { "yes" } else { "no" });
            Ok(Outcome {
                exit_code: if report.agrees { 0 } else { 1 },
                report: out,
            })
        }
        Command::Aut3Case {
            q12,
            q13,
            q23,
            field_conductor,
        } => {
            let field =
                CycloField::new(*field_conductor).map_err(|e| CliError::semantic(e.to_string()))?;
            let parse = |t: &str| {
                parse_scalar(t, &field).map_err(|e| CliError::semantic(e.to_string()))
            };
            let report = classify::aut3_case(&parse(q12)?, &parse(q13)?, &parse(q23)?)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let _ = writeln!(out, "case {}", report.case);
            let _ = writeln!(out, "note: {}", report.note);
            Ok(Outcome {
                exit_code: 0,
                report: out,
            })
        }
        Command::CosetCount { problem, deg } => {
            let p = load(problem)?;
            let g = p.group()?;
            let o = p.monomial_order(g.size());
            let rels = qdha::build_relations(&p.q, &g, &p.kappa(), &o);
            // Complete far enough for the requested degree: the
            // relations have degree 2, so the window needs deg + 3.
            let gb = groebner::buchberger(
                &rels,
                &o,
                Some(deg + 3),
                groebner::DEFAULT_ELEMENT_CAP,
            )
            .map_err(|e| CliError::semantic(e.to_string()))?;
            let count = groebner::coset_count_filtered(&gb, *deg)
                .map_err(|e| CliError::semantic(e.to_string()))?;
            let _ = writeln!(out, "count = {}", count);
            Ok(Outcome {
                exit_code: 0,
                report: out,
            })
        }
    }
}

/// Dispatch a parsed command line; input errors map to exit code 2.
pub fn run(cmd: &Command) -> Outcome {
    match run_inner(cmd) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            exit_code: 2,
            report: format!("error: {}\n", e),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASE2: &str = "\
# seven-branch fixture, second family
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

    #[test]
    fn parse_and_round_trip() {
        let p = parse_problem(CASE2).unwrap();
        assert_eq!(p.dim, 3);
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.kappa_entries.len(), 2);
        let g = p.group().unwrap();
        assert_eq!(g.size(), 8);
        let printed = print_problem(&p);
        let reparsed = parse_problem(&printed).unwrap();
        assert_eq!(print_problem(&reparsed), printed);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            parse_problem("bogus 3\n"),
            Err(CliError::Syntax { line: 1, .. })
        ));
        let zero_q = "field 1\ndim 2\nQ\n1, 0\n1, 1\n";
        let err = parse_problem(zero_q).unwrap_err();
        assert!(err.to_string().contains("nonzero"));
        let bad_kappa = "field 1\ndim 2\nQ\n1, 1\n1, 1\nkappa 1 2 1 = 1\n";
        let err = parse_problem(bad_kappa).unwrap_err();
        assert!(err.to_string().contains("state the entry at (1, 2)"));
    }

    fn write_temp(name: &str, text: &str) -> String {
        let path = std::env::temp_dir().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    #[test]
    fn check_pbw_and_exit_codes() {
        let path = write_temp("qhecke_case2.prob", CASE2);
        let outcome = run(&Command::CheckPbw {
            problem: path.clone(),
            method: "both".into(),
            max_degree: 3,
        });
        assert_eq!(outcome.exit_code, 0, "report: {}", outcome.report);
        assert!(outcome.report.contains("verdict: PBW"));
        // Flipping a sign breaks conjugation invariance.
        let broken = CASE2.replace("kappa 5 1 3 = 1", "kappa 5 1 3 = 2");
        let path_bad = write_temp("qhecke_case2_bad.prob", &broken);
        let outcome = run(&Command::CheckPbw {
            problem: path_bad,
            method: "both".into(),
            max_degree: 3,
        });
        assert_eq!(outcome.exit_code, 1);
        assert!(outcome.report.contains("verdict: not PBW"));
        // Unreadable file is an input error.
        let outcome = run(&Command::CheckPbw {
            problem: "/nonexistent.prob".into(),
            method: "both".into(),
            max_degree: 3,
        });
        assert_eq!(outcome.exit_code, 2);
    }

    #[test]
    fn solve_kappa_report() {
        let path = write_temp("qhecke_case2_solve.prob", CASE2);
        let outcome = run(&Command::SolveKappa { problem: path });
        assert_eq!(outcome.exit_code, 0);
        assert!(outcome.report.starts_with("dimension 1\n"));
        assert!(outcome.report.contains("kappa_g4(v1,v3) = -1"));
        assert!(outcome.report.contains("kappa_g5(v1,v3) = 1"));
    }

    #[test]
    fn coset_count_matches_filtration_formula() {
        let path = write_temp("qhecke_case2_count.prob", CASE2);
        let outcome = run(&Command::CosetCount { problem: path, deg: 3 });
        assert_eq!(outcome.exit_code, 0);
        // binom(3 + 3, 3) * 8 = 160.
        assert_eq!(outcome.report.trim(), "count = 160");
    }

    #[test]
    fn aut3_case_subcommand() {
        let outcome = run(&Command::Aut3Case {
            q12: "2".into(),
            q13: "1/2".into(),
            q23: "2".into(),
            field_conductor: 1,
        });
        assert_eq!(outcome.exit_code, 0);
        assert!(outcome.report.starts_with("case IV\n"));
    }
}

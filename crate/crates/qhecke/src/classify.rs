//! Classification of admissible deformation parameters: the exact
//! linear solution space of kappa for a fixed `(Q, G)`, the diagonal
//! abelian support sets, the dimension-two branch analysis, and the
//! automorphism-group cases of quantum 3-space.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupElement};
use crate::linalg;
use crate::qdha::{self, KappaParam, QuantumParams};
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("classification requires a quantum system of parameters with every group element acting as an automorphism")]
    ConditionA,
    #[error("classification requires a diagonal group")]
    NonDiagonalGroup,
    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("quantum parameters must be nonzero")]
    ZeroParameter,
}

/// The exact solution space of deformation parameters for `(Q, G)`:
/// unknowns are the `kappa_g(v_i, v_j)` with `i < j`, ordered
/// lexicographically by `(g, i, j)`, and the basis is the echelon
/// nullspace of the assembled linear constraints.
#[derive(Clone, Debug)]
pub struct KappaSolutionSpace {
    pub unknowns: Vec<(usize, usize, usize)>,
    pub dimension: usize,
    pub basis: Vec<KappaParam>,
    /// Unknowns at the free (non-pivot) columns, one per basis vector.
    pub free: Vec<(usize, usize, usize)>,
}

/// Solve the linear system of all mixed-commutator and conjugation
/// constraints in the unknowns `kappa_g(v_i, v_j)`.
pub fn kappa_solution_space(
    q: &QuantumParams,
    g: &FiniteGroup,
) -> Result<KappaSolutionSpace, ClassifyError> {
    if !q.is_qps() {
        return Err(ClassifyError::ConditionA);
    }
    for h in 0..g.size() {
        match qdha::acts_as_automorphism(g.element(h), q) {
            Ok(None) => {}
            _ => return Err(ClassifyError::ConditionA),
        }
    }
    let field = q.field();
    let n = q.dim();
    let mut unknowns = Vec::new();
    let mut index = BTreeMap::new();
    for a in 0..g.size() {
        for i in 1..=n {
            for j in i + 1..=n {
                index.insert((a, i, j), unknowns.len());
                unknowns.push((a, i, j));
            }
        }
    }
    let ncols = unknowns.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // Mixed-commutator rows: for each (h, i < j < k), the coefficient
    // of every v_m must vanish; each is linear in the three kappa_h
    // entries at the pairs (i,j), (i,k), (j,k).
    for h in 0..g.size() {
        let hm = g.element(h);
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for m in 1..=n {
                        let mut row = vec![Scalar::zero(field); ncols];
                        let mut c_ij = q.q(i, k).mul(q.q(j, k)).mul(hm.entry(m, k));
                        if m == k {
                            c_ij = c_ij.sub(&Scalar::one(field));
                        }
                        let mut c_ik = q.q(i, j).mul(hm.entry(m, j)).neg();
                        if m == j {
                            c_ik = c_ik.add(q.q(j, k));
                        }
                        let mut c_jk = hm.entry(m, i).clone();
                        if m == i {
                            c_jk = c_jk.sub(&q.q(i, j).mul(q.q(i, k)));
                        }
                        row[index[&(h, i, j)]] = c_ij;
                        row[index[&(h, i, k)]] = c_ik;
                        row[index[&(h, j, k)]] = c_jk;
                        rows.push(row);
                    }
                }
            }
        }
    }
    // Conjugation rows: kappa_(h^-1 g h)(i, j) equals the quantum-minor
    // combination of kappa_g over all pairs (k < l).
    for a in 0..g.size() {
        for h in 0..g.size() {
            let conj = g.conjugate(a, h);
            let hm = g.element(h);
            for i in 1..=n {
                for j in i + 1..=n {
                    let mut row = vec![Scalar::zero(field); ncols];
                    row[index[&(conj, i, j)]] = row[index[&(conj, i, j)]].add(&Scalar::one(field));
                    for k in 1..=n {
                        for l in k + 1..=n {
                            let c = qdha::quantum_minor(hm, q, i, j, k, l);
                            let col = index[&(a, k, l)];
                            row[col] = row[col].sub(&c);
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let pivots = {
        let mut copy = rows.clone();
        linalg::rref(&mut copy)
    };
    let free: Vec<(usize, usize, usize)> = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|c| unknowns[c])
        .collect();
    let basis_vectors = linalg::nullspace(&rows, ncols, field);
    let mut basis = Vec::with_capacity(basis_vectors.len());
    for v in &basis_vectors {
        let mut kappa = KappaParam::new();
        for (col, value) in v.iter().enumerate() {
            if !value.is_zero() {
                let (a, i, j) = unknowns[col];
                kappa.set(a, i, j, value.clone()).expect("i < j by construction");
            }
        }
        basis.push(kappa);
    }
    Ok(KappaSolutionSpace {
        unknowns,
        dimension: basis.len(),
        basis,
        free,
    })
}

/// Admissible support sets for a diagonal group: for each pair
/// `(i, j)` with `i < j`, the element indices on which a deformation
/// may be supported.
#[derive(Clone, Debug)]
pub struct AbelianSupport {
    pub admissible: BTreeMap<(usize, usize), Vec<usize>>,
}

/// Closed-form support computation for diagonal groups: the pair
/// `(i, j)` admits support exactly when the characters satisfy
/// `chi_i = chi_j^{-1}` on all of `G`, and then on the set
/// `{g : chi_k(g) = q_ki q_kj for all k != i, j}`.
pub fn classify_abelian(
    q: &QuantumParams,
    g: &FiniteGroup,
) -> Result<AbelianSupport, ClassifyError> {
    for h in 0..g.size() {
        if !g.element(h).is_diagonal() {
            return Err(ClassifyError::NonDiagonalGroup);
        }
    }
    let n = q.dim();
    let chi = |a: usize, i: usize| g.element(a).entry(i, i).clone();
    let mut admissible = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let pair_ok = (0..g.size()).all(|a| chi(a, i).mul(&chi(a, j)).is_one());
            let support: Vec<usize> = if pair_ok {
                (0..g.size())
                    .filter(|&a| {
                        (1..=n)
                            .filter(|&k| k != i && k != j)
                            .all(|k| chi(a, k) == q.q(k, i).mul(q.q(k, j)))
                    })
                    .collect()
            } else {
                Vec::new()
            };
            admissible.insert((i, j), support);
        }
    }
    Ok(AbelianSupport { admissible })
}

/// The three parameter branches in dimension two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dim2Branch {
    One,
    MinusOne,
    Generic,
}

/// Structured dimension-two report: the single deformation scalar
/// `c_g = kappa_g(v_1, v_2)` obeys `c_(h^-1 g h) = det_Q(h) c_g`, so
/// support is confined to elements whose centralizer has quantum
/// determinant one, one free scalar per admissible conjugacy class.
#[derive(Clone, Debug)]
pub struct Dim2Report {
    pub branch: Dim2Branch,
    /// Elements whose whole centralizer has quantum determinant one.
    pub support: Vec<usize>,
    pub predicted_dimension: usize,
    pub solver_dimension: usize,
    pub agrees: bool,
}

/// Branch analysis for `n = 2`, cross-checked against the linear
/// solver.
pub fn classify_dim2(q: &QuantumParams, g: &FiniteGroup) -> Result<Dim2Report, ClassifyError> {
    if q.dim() != 2 {
        return Err(ClassifyError::WrongDimension {
            expected: 2,
            got: q.dim(),
        });
    }
    let space = kappa_solution_space(q, g)?; // also enforces condition (A)
    let field = q.field();
    let q12 = q.q(1, 2);
    let branch = if q12.is_one() {
        Dim2Branch::One
    } else if q12.add(&Scalar::one(field)).is_zero() {
        Dim2Branch::MinusOne
    } else {
        Dim2Branch::Generic
    };
    let det_q: Vec<Scalar> = (0..g.size())
        .map(|a| qdha::quantum_det2(g.element(a), q).expect("dimension checked"))
        .collect();
    let support: Vec<usize> = (0..g.size())
        .filter(|&a| g.centralizer(a).into_iter().all(|h| det_q[h].is_one()))
        .collect();
    let predicted_dimension = g
        .conjugacy_classes()
        .into_iter()
        .filter(|class| class.iter().all(|a| support.contains(a)))
        .count();
    let agrees = predicted_dimension == space.dimension;
    Ok(Dim2Report {
        branch,
        support,
        predicted_dimension,
        solver_dimension: space.dimension,
        agrees,
    })
}

/// Case tags for the graded automorphism group of quantum 3-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Aut3Case {
    I,
    II,
    III,
    IV,
    Va,
    Vb,
    Vc,
    VI,
}

impl std::fmt::Display for Aut3Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Aut3Case::I => "I",
            Aut3Case::II => "II",
            Aut3Case::III => "III",
            Aut3Case::IV => "IV",
            Aut3Case::Va => "Va",
            Aut3Case::Vb => "Vb",
            Aut3Case::Vc => "Vc",
            Aut3Case::VI => "VI",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Aut3Shape {
    /// Any invertible matrix.
    All,
    /// Monomial matrices.
    Monomial,
    /// The diagonal torus.
    Diagonal,
    /// Monomial matrices whose permutation part is a power of the
    /// 3-cycle.
    CyclicMonomial,
    /// Block matrices fixing the line of `v_fixed` and mixing the
    /// other two variables.
    Block { fixed: usize },
    /// The torus together with the monomial shape swapping the two
    /// variables other than `v_fixed`.
    DiagonalOrSwap { fixed: usize },
}

/// Case tag plus membership predicate for the automorphism group of
/// quantum 3-space at concrete parameter values.
#[derive(Clone, Debug)]
pub struct Aut3Report {
    pub case: Aut3Case,
    /// Informational only: how many of the parameters can stay
    /// indeterminate within this case.
    pub note: String,
    shape: Aut3Shape,
}

fn pattern_is(h: &GroupElement, allowed: &[(usize, usize)]) -> bool {
    let n = h.dim();
    for i in 1..=n {
        for j in 1..=n {
            if !allowed.contains(&(i, j)) && !h.entry(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

fn is_diagonal_pattern(h: &GroupElement) -> bool {
    pattern_is(h, &[(1, 1), (2, 2), (3, 3)])
}

impl Aut3Report {
    /// Does the candidate matrix lie in the stated automorphism group?
    pub fn accepts(&self, h: &GroupElement) -> bool {
        if h.dim() != 3 || h.determinant().is_zero() {
            return false;
        }
        match self.shape {
            Aut3Shape::All => true,
            Aut3Shape::Monomial => h.is_monomial_matrix(),
            Aut3Shape::Diagonal => is_diagonal_pattern(h),
            Aut3Shape::CyclicMonomial => {
                is_diagonal_pattern(h)
                    || pattern_is(h, &[(1, 2), (2, 3), (3, 1)])
                    || pattern_is(h, &[(1, 3), (2, 1), (3, 2)])
            }
            Aut3Shape::Block { fixed } => {
                let others: Vec<usize> = (1..=3).filter(|&k| k != fixed).collect();
                let mut allowed = vec![(fixed, fixed)];
                for &a in &others {
                    for &b in &others {
                        allowed.push((a, b));
                    }
                }
                pattern_is(h, &allowed)
            }
            Aut3Shape::DiagonalOrSwap { fixed } => {
                let others: Vec<usize> = (1..=3).filter(|&k| k != fixed).collect();
                is_diagonal_pattern(h)
                    || pattern_is(
                        h,
                        &[
                            (fixed, fixed),
                            (others[0], others[1]),
                            (others[1], others[0]),
                        ],
                    )
            }
        }
    }
}

/// Decide which automorphism-group case the parameter triple
/// `(q12, q13, q23)` falls in. Cases are tested in the order I, II,
/// IV, V, VI, with III as the generic fallback.
pub fn aut3_case(q12: &Scalar, q13: &Scalar, q23: &Scalar) -> Result<Aut3Report, ClassifyError> {
    if q12.is_zero() || q13.is_zero() || q23.is_zero() {
        return Err(ClassifyError::ZeroParameter);
    }
    let is_one = |s: &Scalar| s.is_one();
    let is_minus_one = |s: &Scalar| s.add(&Scalar::one(s.field())).is_zero();
    let q31 = q13.inv().map_err(|_| ClassifyError::ZeroParameter)?;
    let report = |case: Aut3Case, note: &str, shape: Aut3Shape| Aut3Report {
        case,
        note: note.to_string(),
        shape,
    };
    if is_one(q12) && is_one(q13) && is_one(q23) {
        return Ok(report(
            Aut3Case::I,
            "all parameters are 1; no parameter stays indeterminate",
            Aut3Shape::All,
        ));
    }
    if is_minus_one(q12) && is_minus_one(q13) && is_minus_one(q23) {
        return Ok(report(
            Aut3Case::II,
            "all parameters are -1; no parameter stays indeterminate",
            Aut3Shape::Monomial,
        ));
    }
    // A monomial matrix whose permutation part is a 3-cycle respects
    // the skew relations exactly when q12 = q23 = q31, so that common
    // value is the case-IV premise.
    if q12 == q23 && *q12 == q31 && !is_one(q12) && !is_minus_one(q12) {
        return Ok(report(
            Aut3Case::IV,
            "one parameter may stay indeterminate",
            Aut3Shape::CyclicMonomial,
        ));
    }
    // Case V: one parameter is 1 and the remaining two are a value and
    // its inverse, pairing the fixed variable against the mixed block.
    if is_one(q23) && q12 == q13 && !is_one(q12) {
        return Ok(report(
            Aut3Case::Va,
            "one parameter may stay indeterminate",
            Aut3Shape::Block { fixed: 1 },
        ));
    }
    if is_one(q13) && *q12 == q23.inv().map_err(|_| ClassifyError::ZeroParameter)? && !is_one(q12)
    {
        return Ok(report(
            Aut3Case::Vb,
            "one parameter may stay indeterminate",
            Aut3Shape::Block { fixed: 2 },
        ));
    }
    if is_one(q12) && q23 == q13 && !is_one(q23) {
        return Ok(report(
            Aut3Case::Vc,
            "one parameter may stay indeterminate",
            Aut3Shape::Block { fixed: 3 },
        ));
    }
    // Case VI: one parameter is -1 and the remaining two are a value
    // and its inverse, adding a single swap to the torus.
    if is_minus_one(q23) && q12 == q13 && !is_minus_one(q12) {
        return Ok(report(
            Aut3Case::VI,
            "one parameter may stay indeterminate",
            Aut3Shape::DiagonalOrSwap { fixed: 1 },
        ));
    }
    if is_minus_one(q13)
        && *q12 == q23.inv().map_err(|_| ClassifyError::ZeroParameter)?
        && !is_minus_one(q12)
    {
        return Ok(report(
            Aut3Case::VI,
            "one parameter may stay indeterminate",
            Aut3Shape::DiagonalOrSwap { fixed: 2 },
        ));
    }
    if is_minus_one(q12) && q23 == q13 && !is_minus_one(q23) {
        return Ok(report(
            Aut3Case::VI,
            "one parameter may stay indeterminate",
            Aut3Shape::DiagonalOrSwap { fixed: 3 },
        ));
    }
    Ok(report(
        Aut3Case::III,
        "up to three parameters may stay indeterminate",
        Aut3Shape::Diagonal,
    ))
}

//! Quantum parameters, quantum minors, automorphism criteria, the
//! closed-form PBW conditions, relation-set construction, and the
//! Groebner-based PBW oracle.
//!
//! The deformed algebra is presented by three relation families:
//! group-letter products `t_g t_h - t_(gh)`, commutation moves
//! `t_g v - g(v) t_g`, and deformed skew relations
//! `v_j v_i - q_ij v_i v_j - kappa(v_i, v_j)` for `i < j`. The algebra
//! has the standard PBW basis `{v_1^a1 ... v_n^an t_g}` exactly when
//! these relations form a Groebner basis, which in turn is equivalent
//! to four checkable conditions (A)-(D) on `(Q, G, kappa)`. Both
//! oracles are implemented and tested against each other.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::freealg::{Letter, MonomialOrder, Polynomial, Word};
use crate::groebner::{self, CompletionLevel, DEFAULT_ELEMENT_CAP};
use crate::group::{FiniteGroup, GroupElement};
use crate::scalar::{CycloField, Scalar};

#[derive(Debug, Error)]
pub enum QdhaError {
    #[error("quantum parameter q_{i}{j} must be nonzero")]
    ZeroParameter { i: usize, j: usize },
    #[error("the quantum parameters are not a quantum system of parameters")]
    NotQps,
    #[error("operation requires dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("kappa entries must be stored with i < j; got ({i}, {j})")]
    BadKappaIndices { i: usize, j: usize },
}

/// The matrix `Q = (q_ij)` of quantum parameters, all nonzero.
#[derive(Clone, Debug)]
pub struct QuantumParams {
    n: usize,
    field: Arc<CycloField>,
    entries: Vec<Scalar>, // row-major n x n
    qps: bool,
}

impl QuantumParams {
    pub fn new(
        field: &Arc<CycloField>,
        n: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self, QdhaError> {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        for i in 1..=n {
            for j in 1..=n {
                if entries[(i - 1) * n + (j - 1)].is_zero() {
                    return Err(QdhaError::ZeroParameter { i, j });
                }
            }
        }
        let mut qps = true;
        'check: for i in 1..=n {
            if !entries[(i - 1) * n + (i - 1)].is_one() {
                qps = false;
                break;
            }
            for j in 1..=n {
                let qij = &entries[(i - 1) * n + (j - 1)];
                let qji = &entries[(j - 1) * n + (i - 1)];
                if !qij.mul(qji).is_one() {
                    qps = false;
                    break 'check;
                }
            }
        }
        Ok(QuantumParams {
            n,
            field: field.clone(),
            entries,
            qps,
        })
    }

    /// Build a QPS from the above-diagonal parameters: `upper[(i, j)]`
    /// for `i < j` (1-based); below-diagonal entries are the inverses
    /// and the diagonal is 1.
    pub fn from_upper(
        field: &Arc<CycloField>,
        n: usize,
        upper: &BTreeMap<(usize, usize), Scalar>,
    ) -> Result<Self, QdhaError> {
        let mut entries = vec![Scalar::one(field); n * n];
        for (&(i, j), q) in upper {
            assert!(i < j && j <= n, "upper entries need 1 <= i < j <= n");
            if q.is_zero() {
                return Err(QdhaError::ZeroParameter { i, j });
            }
            entries[(i - 1) * n + (j - 1)] = q.clone();
            entries[(j - 1) * n + (i - 1)] =
                q.inv().map_err(|_| QdhaError::ZeroParameter { i, j })?;
        }
        Self::new(field, n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// 1-based access to `q_ij`.
    pub fn q(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_qps(&self) -> bool {
        self.qps
    }
}

/// The deformation parameter: `kappa_g(v_i, v_j)` stored only for
/// `i < j` over all group elements (including the identity, whose group
/// letter is the unit). Reads with `i > j` apply the quantum 2-form
/// extension `kappa(v_j, v_i) = -q_ij^{-1} kappa(v_i, v_j)` and reads
/// with `i = j` return zero, so the 2-form condition holds structurally.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KappaParam {
    entries: BTreeMap<(usize, usize, usize), Scalar>, // (g, i, j) with i < j
}

impl KappaParam {
    pub fn new() -> Self {
        KappaParam::default()
    }

    pub fn set(&mut self, g: usize, i: usize, j: usize, value: Scalar) -> Result<(), QdhaError> {
        if i >= j {
            return Err(QdhaError::BadKappaIndices { i, j });
        }
        if value.is_zero() {
            self.entries.remove(&(g, i, j));
        } else {
            self.entries.insert((g, i, j), value);
        }
        Ok(())
    }

    /// Stored value for `i < j` (zero when absent).
    pub fn get(&self, field: &Arc<CycloField>, g: usize, i: usize, j: usize) -> Scalar {
        assert!(i < j, "direct reads require i < j");
        self.entries
            .get(&(g, i, j))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(field))
    }

    /// Read extended as a quantum 2-form to arbitrary index pairs.
    pub fn get_extended(&self, q: &QuantumParams, g: usize, i: usize, j: usize) -> Scalar {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.get(q.field(), g, i, j),
            Ordering::Equal => Scalar::zero(q.field()),
            Ordering::Greater => {
                let base = self.get(q.field(), g, j, i);
                let qji = q.q(j, i); // indices sorted: (j, i) with j < i here
                base.mul(&qji.inv().expect("quantum parameters are nonzero"))
                    .neg()
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Scalar)> {
        self.entries.iter()
    }
}

/// Which of the four PBW conditions a violation falls under.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConditionTag {
    A,
    B,
    C,
    D,
}

/// A single failed condition instance with its witness data.
#[derive(Clone, Debug)]
pub enum PbwViolation {
    /// (A): the parameters are not a quantum system of parameters.
    NotQps,
    /// (A): element `h` fails the quantum-minor automorphism identity
    /// at the quadruple `(i, j, k, l)`.
    NotAutomorphism {
        h: usize,
        quad: (usize, usize, usize, usize),
        residual: Scalar,
    },
    /// (C): the coefficient of `v_m` in the mixed-commutator identity
    /// for `(h, i < j < k)` is nonzero.
    MixedCommutator {
        h: usize,
        i: usize,
        j: usize,
        k: usize,
        m: usize,
        residual: Scalar,
    },
    /// (D): conjugation invariance fails for `(g, h)` at the pair
    /// `(i, j)`.
    ConjugationInvariance {
        g: usize,
        h: usize,
        i: usize,
        j: usize,
        residual: Scalar,
    },
}

impl PbwViolation {
    pub fn tag(&self) -> ConditionTag {
        match self {
            PbwViolation::NotQps | PbwViolation::NotAutomorphism { .. } => ConditionTag::A,
            PbwViolation::MixedCommutator { .. } => ConditionTag::C,
            PbwViolation::ConjugationInvariance { .. } => ConditionTag::D,
        }
    }
}

/// Structured verdict of the closed-form PBW check. Condition (B), the
/// quantum 2-form shape of kappa, is guaranteed by [`KappaParam`]'s
/// storage and therefore never appears among the violations.
#[derive(Clone, Debug)]
pub struct PbwReport {
    pub verdict: bool,
    pub violations: Vec<PbwViolation>,
}

/// Cap on collected violations; the verdict is still exhaustive.
pub const VIOLATION_CAP: usize = 100;

/// The quantum (i,j,k,l)-minor of `h`:
/// `h^i_k h^j_l - q_ij h^i_l h^j_k`, where `h^a_b` is the coefficient
/// of `v_b` in `h(v_a)`.
pub fn quantum_minor(
    h: &GroupElement,
    q: &QuantumParams,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Scalar {
    // h^a_b = matrix entry at (row b, column a).
    let first = h.entry(k, i).mul(h.entry(l, j));
    let second = q.q(i, j).mul(h.entry(l, i)).mul(h.entry(k, j));
    first.sub(&second)
}

fn automorphism_witness(
    h: &GroupElement,
    q: &QuantumParams,
) -> Option<(usize, usize, usize, usize, Scalar)> {
    let n = q.dim();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let lhs = quantum_minor(h, q, i, j, k, l);
                    let rhs = q.q(l, k).mul(&quantum_minor(h, q, i, j, l, k)).neg();
                    let residual = lhs.sub(&rhs);
                    if !residual.is_zero() {
                        return Some((i, j, k, l, residual));
                    }
                }
            }
        }
    }
    None
}

/// Whether `h` respects every skew relation of the quantum polynomial
/// algebra: the identity `det_ijkl(h) = -q_lk det_ijlk(h)` for all
/// quadruples. Returns the first failing quadruple as a witness.
pub fn acts_as_automorphism(
    h: &GroupElement,
    q: &QuantumParams,
) -> Result<Option<(usize, usize, usize, usize)>, QdhaError> {
    if !q.is_qps() {
        return Err(QdhaError::NotQps);
    }
    Ok(automorphism_witness(h, q).map(|(i, j, k, l, _)| (i, j, k, l)))
}

/// Whether `h` acts as an automorphism of the quantum exterior algebra
/// with the same parameters. The exterior algebra is the quotient of
/// the quantum polynomial algebra with sign-flipped parameters
/// (`-q_ij` off the diagonal) by the squares of the generators, so the
/// criterion reads minors through those flipped parameters:
/// `det'_ijkl(h) = q_lk det'_ijlk(h)` for all quadruples, together with
/// `det'_ijkk(h^t) = 0` for all `k` and `i < j`.
pub fn acts_on_quantum_exterior(
    h: &GroupElement,
    q: &QuantumParams,
) -> Result<bool, QdhaError> {
    if !q.is_qps() {
        return Err(QdhaError::NotQps);
    }
    let n = q.dim();
    let field = q.field();
    let flipped = {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let e = q.q(i, j).clone();
                entries.push(if i == j { e } else { e.neg() });
            }
        }
        QuantumParams::new(field, n, entries).expect("nonzero entries stay nonzero")
    };
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let lhs = quantum_minor(h, &flipped, i, j, k, l);
                    let rhs = q.q(l, k).mul(&quantum_minor(h, &flipped, i, j, l, k));
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    let ht = h.transpose();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                if !quantum_minor(&ht, &flipped, i, j, k, k).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checkable assertion that the automorphism criterion is invariant
/// under matrix transpose.
pub fn transpose_consistency(h: &GroupElement, q: &QuantumParams) -> Result<bool, QdhaError> {
    let direct = acts_as_automorphism(h, q)?.is_none();
    let transposed = acts_as_automorphism(&h.transpose(), q)?.is_none();
    Ok(direct == transposed)
}

/// The quantum determinant `ad - q*bc` of a 2 x 2 matrix.
pub fn quantum_det2(h: &GroupElement, q: &QuantumParams) -> Result<Scalar, QdhaError> {
    if h.dim() != 2 || q.dim() != 2 {
        return Err(QdhaError::WrongDimension {
            expected: 2,
            got: h.dim().max(q.dim()),
        });
    }
    let ad = h.entry(1, 1).mul(h.entry(2, 2));
    let bc = h.entry(1, 2).mul(h.entry(2, 1));
    Ok(ad.sub(&q.q(1, 2).mul(&bc)))
}

/// Residual of the coefficient of `v_m` in the condition-(C) identity
/// for `(h, i < j < k)`; zero for all `m` iff the identity holds.
fn condition_c_residual(
    q: &QuantumParams,
    g: &FiniteGroup,
    kappa: &KappaParam,
    h: usize,
    i: usize,
    j: usize,
    k: usize,
    m: usize,
) -> Scalar {
    let field = q.field();
    let hm = g.element(h);
    let a_ij = kappa.get(field, h, i, j);
    let a_ik = kappa.get(field, h, i, k);
    let a_jk = kappa.get(field, h, j, k);
    // h^a_m = entry(m, a).
    let mut acc = q
        .q(i, k)
        .mul(q.q(j, k))
        .mul(hm.entry(m, k))
        .mul(&a_ij);
    if m == k {
        acc = acc.sub(&a_ij);
    }
    if m == j {
        acc = acc.add(&q.q(j, k).mul(&a_ik));
    }
    acc = acc.sub(&q.q(i, j).mul(hm.entry(m, j)).mul(&a_ik));
    acc = acc.add(&hm.entry(m, i).mul(&a_jk));
    if m == i {
        acc = acc.sub(&q.q(i, j).mul(q.q(i, k)).mul(&a_jk));
    }
    acc
}

/// Residual of the condition-(D) identity for `(g, h, i < j)`:
/// `kappa_(h^-1 g h)(v_i, v_j) - sum_(k<l) det_ijkl(h) kappa_g(v_k, v_l)`.
fn condition_d_residual(
    q: &QuantumParams,
    grp: &FiniteGroup,
    kappa: &KappaParam,
    g: usize,
    h: usize,
    i: usize,
    j: usize,
) -> Scalar {
    let field = q.field();
    let n = q.dim();
    let conj = grp.conjugate(g, h);
    let mut rhs = Scalar::zero(field);
    let hm = grp.element(h);
    for k in 1..=n {
        for l in k + 1..=n {
            let c = kappa.get(field, g, k, l);
            if c.is_zero() {
                continue;
            }
            rhs = rhs.add(&quantum_minor(hm, q, i, j, k, l).mul(&c));
        }
    }
    kappa.get(field, conj, i, j).sub(&rhs)
}

/// Evaluate the four PBW conditions and collect violations (up to
/// [`VIOLATION_CAP`], exhaustively rather than fail-fast).
pub fn check_pbw_conditions(
    q: &QuantumParams,
    g: &FiniteGroup,
    kappa: &KappaParam,
) -> PbwReport {
    let mut violations: Vec<PbwViolation> = Vec::new();
    let push = |violations: &mut Vec<PbwViolation>, v: PbwViolation| {
        if violations.len() < VIOLATION_CAP {
            violations.push(v);
        }
    };
    // (A): quantum system of parameters + every element acts as an
    // automorphism.
    if !q.is_qps() {
        push(&mut violations, PbwViolation::NotQps);
    }
    for h in 0..g.size() {
        if let Some((i, j, k, l, residual)) = automorphism_witness(g.element(h), q) {
            push(
                &mut violations,
                PbwViolation::NotAutomorphism {
                    h,
                    quad: (i, j, k, l),
                    residual,
                },
            );
        }
    }
    // (B) is structural: KappaParam stores only i < j and extends reads
    // by the quantum 2-form rule.
    let n = q.dim();
    // (C): for every h and i < j < k, the identity in V has zero
    // coefficient on every basis vector v_m.
    for h in 0..g.size() {
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for m in 1..=n {
                        let residual = condition_c_residual(q, g, kappa, h, i, j, k, m);
                        if !residual.is_zero() {
                            push(
                                &mut violations,
                                PbwViolation::MixedCommutator {
                                    h,
                                    i,
                                    j,
                                    k,
                                    m,
                                    residual,
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    // (D): conjugation invariance over all ordered pairs (g, h),
    // identity included.
    for gi in 0..g.size() {
        for h in 0..g.size() {
            for i in 1..=n {
                for j in i + 1..=n {
                    let residual = condition_d_residual(q, g, kappa, gi, h, i, j);
                    if !residual.is_zero() {
                        push(
                            &mut violations,
                            PbwViolation::ConjugationInvariance {
                                g: gi,
                                h,
                                i,
                                j,
                                residual,
                            },
                        );
                    }
                }
            }
        }
    }
    PbwReport {
        verdict: violations.is_empty(),
        violations,
    }
}

/// The presentation of the deformed algebra: group relations
/// `t_g t_h - t_(gh)` over non-identity `g, h` (with the unit replacing
/// `t_e`), commutation relations `t_g v_i - g(v_i) t_g`, and the
/// `n(n-1)/2` deformed skew relations.
pub fn build_relations(
    q: &QuantumParams,
    g: &FiniteGroup,
    kappa: &KappaParam,
    o: &MonomialOrder,
) -> Vec<Polynomial> {
    let field = q.field();
    let n = q.dim();
    let mut rels = Vec::new();
    let grp_word = |idx: usize| {
        if idx == 0 {
            Word::empty()
        } else {
            Word::single(Letter::Grp(idx))
        }
    };
    for a in 1..g.size() {
        for b in 1..g.size() {
            let prod = g.product(a, b);
            rels.push(Polynomial::from_terms(
                field,
                vec![
                    (
                        Word(vec![Letter::Grp(a), Letter::Grp(b)]),
                        Scalar::one(field),
                    ),
                    (grp_word(prod), Scalar::from_integer(field, -1)),
                ],
                o,
            ));
        }
    }
    for a in 1..g.size() {
        let hm = g.element(a);
        for i in 1..=n {
            let mut terms = vec![(
                Word(vec![Letter::Grp(a), Letter::Var(i)]),
                Scalar::one(field),
            )];
            for m in 1..=n {
                let c = hm.entry(m, i);
                if !c.is_zero() {
                    terms.push((
                        Word(vec![Letter::Var(m), Letter::Grp(a)]),
                        c.neg(),
                    ));
                }
            }
            rels.push(Polynomial::from_terms(field, terms, o));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let mut terms = vec![
                (
                    Word(vec![Letter::Var(j), Letter::Var(i)]),
                    Scalar::one(field),
                ),
                (
                    Word(vec![Letter::Var(i), Letter::Var(j)]),
                    q.q(i, j).neg(),
                ),
            ];
            for a in 0..g.size() {
                let c = kappa.get(field, a, i, j);
                if !c.is_zero() {
                    terms.push((grp_word(a), c.neg()));
                }
            }
            rels.push(Polynomial::from_terms(field, terms, o));
        }
    }
    rels
}

/// Verdict of the Groebner-based PBW oracle.
#[derive(Clone, Debug)]
pub enum PbwVerdict {
    Pbw,
    /// Carries a nonzero reduced overlap relation witnessing failure.
    NotPbw(Polynomial),
    /// The degree bound truncated before a verdict (cannot happen at
    /// bound >= 3 for this relation shape).
    Inconclusive,
}

/// Is a word one of the three PBW leading shapes: `v_j v_i` (i < j),
/// `t_g v_i`, or `t_g t_h`?
fn pbw_shaped(w: &Word) -> bool {
    match w.letters() {
        [Letter::Var(j), Letter::Var(i)] => i < j,
        [Letter::Grp(_), Letter::Var(_)] => true,
        [Letter::Grp(_), Letter::Grp(_)] => true,
        _ => false,
    }
}

/// Decide the PBW property by completing the defining relations to a
/// Groebner basis under the default admissible order. The relation set
/// is PBW exactly when completion adds nothing, leaving the leading
/// ideal in the standard shape.
pub fn is_pbw_via_groebner(
    q: &QuantumParams,
    g: &FiniteGroup,
    kappa: &KappaParam,
    max_degree: usize,
) -> PbwVerdict {
    assert!(max_degree >= 3, "all critical pairs live in degree <= 3");
    let o = MonomialOrder::default_for(q.dim(), g.size());
    let rels = build_relations(q, g, kappa, &o);
    let expected = groebner::interreduce(&rels, &o);
    debug_assert_eq!(
        expected.len(),
        rels.len(),
        "defining relations are already interreduced"
    );
    let gb = groebner::buchberger(&rels, &o, Some(max_degree), DEFAULT_ELEMENT_CAP)
        .expect("bounded completion of the defining relations cannot hit the cap");
    if gb.complete_to_degree == CompletionLevel::Unbounded && gb.elements == expected {
        return PbwVerdict::Pbw;
    }
    // Something was adjoined: find an element outside the original
    // relation set; its presence certifies a nonzero reduced overlap.
    if let Some(extra) = gb.elements.iter().find(|e| !expected.contains(e)) {
        return PbwVerdict::NotPbw(extra.clone());
    }
    if gb.elements.iter().any(|e| {
        e.leading()
            .map(|(w, _)| !pbw_shaped(w))
            .unwrap_or(false)
    }) {
        return PbwVerdict::NotPbw(
            gb.elements
                .iter()
                .find(|e| !pbw_shaped(e.leading().unwrap().0))
                .unwrap()
                .clone(),
        );
    }
    match gb.complete_to_degree {
        CompletionLevel::Unbounded => PbwVerdict::Pbw,
        CompletionLevel::Bounded(_) => PbwVerdict::Inconclusive,
    }
}

//! Two-sided noncommutative Groebner bases in the free algebra:
//! reduction, normal forms, overlap relations, degree-bounded
//! completion, interreduction, and coset bases of quotient algebras.
//!
//! Completion follows the classical critical-pair loop: compute the
//! overlap relations of all pairs of basis elements, normal-form each
//! against the current set, and adjoin nonzero remainders. Two-sided
//! ideals admit infinite Groebner bases, so completion optionally
//! carries a degree bound; a bound of `d` certifies that the leading
//! ideals of the returned set and of the full ideal agree on all words
//! of degree at most `d`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::freealg::{MonomialOrder, Polynomial, Word};

/// Default cap on basis size during completion.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

/// How far a completion is certified.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompletionLevel {
    /// Leading ideals agree up to this word degree.
    Bounded(usize),
    /// Every overlap relation of every pair reduces to zero.
    Unbounded,
}

#[derive(Debug, Error)]
pub enum GroebnerError {
    #[error(
        "completion exceeded the cap of {0} basis elements; \
         supply a degree bound to truncate"
    )]
    CapExceeded(usize),
    #[error("basis is complete only to degree {have}, but degree {need} is required")]
    InsufficientCompletion { have: usize, need: usize },
}

/// A (possibly degree-truncated) two-sided Groebner basis. All elements
/// are monic and the set is interreduced.
#[derive(Debug)]
pub struct GroebnerBasis {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub complete_to_degree: CompletionLevel,
    pub reduced: bool,
}

/// An overlap of the leading words of two polynomials:
/// `lm(f1) * m2 = m1 * lm(f2)` with `|m1| < |lm(f1)|`, `|m2| < |lm(f2)|`.
#[derive(Clone, Debug)]
pub struct OverlapInstance {
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub m1: Word,
    pub m2: Word,
}

/// One reduction step: subtract the multiple of `u` matching the leading
/// monomial of `f` at its leftmost occurrence. The leading monomial
/// strictly decreases.
pub fn reduce_step(f: &Polynomial, u: &Polynomial, o: &MonomialOrder) -> Polynomial {
    let (lm_f, lc_f) = f.leading().expect("f must be nonzero");
    let (lm_u, lc_u) = u.leading().expect("u must be nonzero");
    // A constant reducer divides every word at position zero.
    let occurrences = if lm_u.is_empty() {
        vec![(Word::empty(), lm_f.clone())]
    } else {
        lm_f.find_subword(lm_u)
    };
    let (m1, m2) = occurrences
        .first()
        .expect("lm(u) must divide lm(f)");
    let factor = lc_f.mul(&lc_u.inv().expect("leading coefficient is nonzero"));
    let multiple = u.mul_word_left(m1).mul_word_right(m2).scale(&factor);
    f.sub(&multiple, o)
}

fn pick_reducer<'a>(lm: &Word, set: &'a [Polynomial], o: &MonomialOrder) -> Option<&'a Polynomial> {
    // Among elements whose lm divides `lm`, pick the smallest lm; ties
    // go to the earlier list position.
    let mut best: Option<&Polynomial> = None;
    for u in set {
        let Some((lm_u, _)) = u.leading() else { continue };
        if !lm_u.is_empty() && lm.find_subword(lm_u).is_empty() {
            continue;
        }
        match best {
            None => best = Some(u),
            Some(b) => {
                if o.compare(lm_u, b.leading().unwrap().0) == Ordering::Less {
                    best = Some(u);
                }
            }
        }
    }
    best
}

/// Complete reduction of `f` modulo `set`: zero maps to zero; an
/// irreducible leading term is kept and the tail is reduced; otherwise
/// a reduction step is applied. No monomial of the result lies in the
/// leading ideal of `set`, and `f - NF(f, set)` lies in the ideal
/// generated by `set`.
pub fn normal_form(f: &Polynomial, set: &[Polynomial], o: &MonomialOrder) -> Polynomial {
    let mut done = Polynomial::zero(f.field());
    let mut work = f.clone();
    while let Some((lm, lc)) = work.leading() {
        match pick_reducer(lm, set, o) {
            Some(u) => {
                work = reduce_step(&work, u, o);
            }
            None => {
                // Keep the irreducible leading term, recurse on the tail.
                let head = Polynomial::term(lm.clone(), lc.clone());
                work = work.sub(&head, o);
                done = done.add(&head, o);
            }
        }
    }
    done
}

/// All overlaps of `lm(f1)` against `lm(f2)`, in increasing length of
/// `m1`. The trivial full coincidence `lm(f1) = lm(f2)` with both
/// cofactors empty is not an overlap.
pub fn overlaps(f1: &Polynomial, f2: &Polynomial) -> Vec<OverlapInstance> {
    let w1 = f1.leading().expect("f1 must be nonzero").0;
    let w2 = f2.leading().expect("f2 must be nonzero").0;
    let (d1, d2) = (w1.degree(), w2.degree());
    let mut out = Vec::new();
    let start = d1.saturating_sub(d2);
    for s in start..d1 {
        let olap = d1 - s; // length of the shared factor
        if w1.letters()[s..] != w2.letters()[..olap] {
            continue;
        }
        if s == 0 && olap == d2 {
            // Full coincidence of the two leading words: excluded.
            continue;
        }
        out.push(OverlapInstance {
            f1: f1.clone(),
            f2: f2.clone(),
            m1: Word(w1.letters()[..s].to_vec()),
            m2: Word(w2.letters()[olap..].to_vec()),
        });
    }
    out
}

/// The overlap relation `lc(f2)*f1*m2 - lc(f1)*m1*f2`; both products
/// share the leading word `m1*lm(f2)`, which cancels.
pub fn overlap_relation(inst: &OverlapInstance, o: &MonomialOrder) -> Polynomial {
    let lc1 = inst.f1.leading().unwrap().1.clone();
    let lc2 = inst.f2.leading().unwrap().1.clone();
    let left = inst.f1.mul_word_right(&inst.m2).scale(&lc2);
    let right = inst.f2.mul_word_left(&inst.m1).scale(&lc1);
    left.sub(&right, o)
}

/// Pending critical pair, ordered by the degree of the common word
/// `m1 * lm(f2)`, ties broken by insertion order.
struct Pending {
    degree: usize,
    seq: usize,
    i: usize,
    j: usize,
    m1: Word,
    m2: Word,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.seq == other.seq
    }
}
impl Eq for Pending {}
impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we pop smallest first.
        (other.degree, other.seq).cmp(&(self.degree, self.seq))
    }
}

/// Degree-bounded Buchberger completion. `max_degree = None` runs to
/// full completion (and errors at the element cap); `Some(d)` stops once
/// every pending overlap lives strictly above degree `d`.
pub fn buchberger(
    s0: &[Polynomial],
    o: &MonomialOrder,
    max_degree: Option<usize>,
    cap: usize,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Polynomial> = s0
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    let mut queue: BinaryHeap<Pending> = BinaryHeap::new();
    let mut seq = 0usize;
    let push_pairs = |queue: &mut BinaryHeap<Pending>,
                          seq: &mut usize,
                          basis: &[Polynomial],
                          i: usize,
                          j: usize| {
        for inst in overlaps(&basis[i], &basis[j]) {
            let degree = inst.m1.degree() + basis[j].leading().unwrap().0.degree();
            queue.push(Pending {
                degree,
                seq: *seq,
                i,
                j,
                m1: inst.m1,
                m2: inst.m2,
            });
            *seq += 1;
        }
    };
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            push_pairs(&mut queue, &mut seq, &basis, i, j);
        }
    }
    let mut truncated = false;
    while let Some(p) = queue.pop() {
        if let Some(d) = max_degree {
            if p.degree > d {
                truncated = true;
                break;
            }
        }
        let inst = OverlapInstance {
            f1: basis[p.i].clone(),
            f2: basis[p.j].clone(),
            m1: p.m1,
            m2: p.m2,
        };
        let rel = overlap_relation(&inst, o);
        let nf = normal_form(&rel, &basis, o);
        if nf.is_zero() {
            continue;
        }
        if basis.len() >= cap {
            return Err(GroebnerError::CapExceeded(cap));
        }
        basis.push(nf.monic());
        let k = basis.len() - 1;
        for i in 0..=k {
            push_pairs(&mut queue, &mut seq, &basis, i, k);
            if i != k {
                push_pairs(&mut queue, &mut seq, &basis, k, i);
            }
        }
    }
    let elements = interreduce(&basis, o);
    let complete_to_degree = if truncated {
        CompletionLevel::Bounded(max_degree.unwrap())
    } else {
        CompletionLevel::Unbounded
    };
    Ok(GroebnerBasis {
        elements,
        order: o.clone(),
        complete_to_degree,
        reduced: true,
    })
}

/// Interreduce a set: normal-form each element against the others until
/// a fixed point, dropping zeros and normalizing monic. The result is
/// sorted ascending by leading monomial. Idempotent.
pub fn interreduce(set: &[Polynomial], o: &MonomialOrder) -> Vec<Polynomial> {
    let mut items: Vec<Polynomial> = set
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    loop {
        let mut changed = false;
        // Take each element out in turn and reduce it against the live
        // remainder; removing first keeps one survivor of any group of
        // mutually reducing copies.
        let mut i = 0;
        while i < items.len() {
            let f = items.remove(i);
            let nf = normal_form(&f, &items, o);
            if nf != f {
                changed = true;
            }
            if !nf.is_zero() {
                items.insert(i, nf.monic());
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    items.sort_by(|a, b| o.compare(a.leading().unwrap().0, b.leading().unwrap().0));
    items
}

/// Re-verify the completion criterion: every overlap relation of every
/// pair of basis elements normal-forms to zero.
pub fn verify_complete(gb: &GroebnerBasis) -> bool {
    for f1 in &gb.elements {
        for f2 in &gb.elements {
            for inst in overlaps(f1, f2) {
                let rel = overlap_relation(&inst, &gb.order);
                if !normal_form(&rel, &gb.elements, &gb.order).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// All words of degree at most `max_degree` containing no leading
/// monomial of the basis as a subword — a monomial basis of the
/// quotient up to that degree. Enumerated degree by degree, descending
/// under the order within each degree.
pub fn coset_basis(gb: &GroebnerBasis, max_degree: usize) -> Result<Vec<Word>, GroebnerError> {
    let max_rel_degree = gb
        .elements
        .iter()
        .filter_map(|p| p.leading().map(|(w, _)| w.degree()))
        .max()
        .unwrap_or(0);
    if let CompletionLevel::Bounded(d) = gb.complete_to_degree {
        let need = max_degree + max_rel_degree;
        if d < need {
            return Err(GroebnerError::InsufficientCompletion { have: d, need });
        }
    }
    let lms: Vec<&Word> = gb
        .elements
        .iter()
        .filter_map(|p| p.leading().map(|(w, _)| w))
        .collect();
    let alphabet = gb.order.precedence().to_vec();
    let mut out: Vec<Word> = vec![Word::empty()];
    // Survivors are closed under prefixes, so extend one letter at a
    // time checking only the new suffixes.
    let mut layer: Vec<Word> = vec![Word::empty()];
    for _ in 1..=max_degree {
        let mut next = Vec::new();
        for w in &layer {
            'ext: for &l in &alphabet {
                let cand = w.concat(&Word::single(l));
                for lm in &lms {
                    let d = lm.degree();
                    if cand.degree() >= d
                        && &cand.letters()[cand.degree() - d..] == lm.letters()
                    {
                        continue 'ext;
                    }
                }
                next.push(cand);
            }
        }
        next.sort_by(|a, b| gb.order.compare(b, a));
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// Number of coset-basis words of filtration degree at most `k`, where
/// group letters contribute degree zero. For a PBW-shaped leading ideal
/// this is `binom(k + n, n) * |G|`.
pub fn coset_count_filtered(gb: &GroebnerBasis, k: usize) -> Result<usize, GroebnerError> {
    // Basis words carry at most one group letter per variable-free
    // tail, so word degree k + 1 covers filtration degree k.
    let words = coset_basis(gb, k + 1)?;
    Ok(words
        .iter()
        .filter(|w| w.var_degree() <= k && w.degree() <= w.var_degree() + 1)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{Letter, OrderStyle};
    use crate::scalar::{CycloField, Scalar};
    use std::sync::Arc;

    fn qfield() -> Arc<CycloField> {
        CycloField::rational()
    }

    fn x() -> Letter {
        Letter::Var(1)
    }
    fn y() -> Letter {
        Letter::Var(2)
    }

    fn w(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }

    /// `x > y`, degree-left-lex.
    fn order_xy() -> MonomialOrder {
        MonomialOrder::new(OrderStyle::DegLeftLex, vec![x(), y()])
    }

    /// `y > x`, degree-left-lex.
    fn order_yx() -> MonomialOrder {
        MonomialOrder::new(OrderStyle::DegLeftLex, vec![y(), x()])
    }

    fn poly(terms: &[(&[Letter], i64)], o: &MonomialOrder) -> Polynomial {
        let f = qfield();
        Polynomial::from_terms(
            &f,
            terms
                .iter()
                .map(|(ls, c)| (w(ls), Scalar::from_integer(&f, *c)))
                .collect(),
            o,
        )
    }

    #[test]
    fn reduce_step_examples() {
        let o = order_xy();
        let u = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        // xy reduces to y^2.
        let f = poly(&[(&[x(), y()], 1)], &o);
        assert_eq!(reduce_step(&f, &u, &o), poly(&[(&[y(), y()], 1)], &o));
        // Self-reduction gives zero.
        assert!(reduce_step(&u, &u, &o).is_zero());
        // Leftmost factorization in x*xy.
        let f2 = poly(&[(&[x(), x(), y()], 1)], &o);
        assert_eq!(
            reduce_step(&f2, &u, &o),
            poly(&[(&[x(), y(), y()], 1)], &o)
        );
    }

    #[test]
    fn normal_form_examples() {
        let o = order_xy();
        let u = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        assert!(normal_form(&Polynomial::zero(&qfield()), &[u.clone()], &o).is_zero());
        let f = poly(&[(&[x(), y()], 1)], &o);
        assert_eq!(
            normal_form(&f, &[u.clone()], &o),
            poly(&[(&[y(), y()], 1)], &o)
        );
        // Idempotence.
        let nf = normal_form(&f, &[u.clone()], &o);
        assert_eq!(normal_form(&nf, &[u], &o), nf);
    }

    #[test]
    fn normal_form_group_letter_power() {
        // t^3 modulo t^2 - 1 (an order-2 element) is t.
        let f = qfield();
        let o = MonomialOrder::default_for(0, 2);
        let tg = Letter::Grp(1);
        let rel = Polynomial::from_terms(
            &f,
            vec![
                (w(&[tg, tg]), Scalar::one(&f)),
                (Word::empty(), Scalar::from_integer(&f, -1)),
            ],
            &o,
        );
        let cube = Polynomial::term(w(&[tg, tg, tg]), Scalar::one(&f));
        assert_eq!(
            normal_form(&cube, &[rel], &o),
            Polynomial::term(w(&[tg]), Scalar::one(&f))
        );
    }

    #[test]
    fn overlap_enumeration() {
        let f = qfield();
        let o = MonomialOrder::default_for(2, 3);
        let th = Letter::Grp(1);
        let tg = Letter::Grp(2);
        // lm(f1) = t_h t_g, lm(f2) = t_g v_1: one instance with
        // m1 = t_h, m2 = v_1.
        let f1 = Polynomial::term(w(&[th, tg]), Scalar::one(&f));
        let f2 = Polynomial::term(w(&[tg, x()]), Scalar::one(&f));
        let insts = overlaps(&f1, &f2);
        assert_eq!(insts.len(), 1);
        assert_eq!(insts[0].m1, w(&[th]));
        assert_eq!(insts[0].m2, w(&[x()]));
        // Equal leading words xy with no shared proper factor: none.
        let o2 = order_xy();
        let g = poly(&[(&[x(), y()], 1)], &o2);
        assert!(overlaps(&g, &g).is_empty());
        // y^2 self-overlap at m1 = m2 = y.
        let h = poly(&[(&[y(), y()], 1)], &o2);
        let self_olaps = overlaps(&h, &h);
        assert_eq!(self_olaps.len(), 1);
        assert_eq!(self_olaps[0].m1, w(&[y()]));
        assert_eq!(self_olaps[0].m2, w(&[y()]));
    }

    #[test]
    fn overlap_relation_self_overlap() {
        // (y^2 - xy) overlapped with itself at m1 = m2 = y gives
        // yxy - xy^2.
        let o = order_yx();
        let g = poly(&[(&[y(), y()], 1), (&[x(), y()], -1)], &o);
        let insts = overlaps(&g, &g);
        assert_eq!(insts.len(), 1);
        let rel = overlap_relation(&insts[0], &o);
        assert_eq!(
            rel,
            poly(&[(&[y(), x(), y()], 1), (&[x(), y(), y()], -1)], &o)
        );
    }

    #[test]
    fn skew_commutation_relations_already_complete() {
        // v_j v_i - q v_i v_j for i < j: no overlaps, completion adds
        // nothing.
        let f = CycloField::new(4).unwrap();
        let q = Scalar::zeta(&f);
        let o = MonomialOrder::default_for(3, 1);
        let mut rels = Vec::new();
        for i in 1..=3usize {
            for j in i + 1..=3 {
                rels.push(Polynomial::from_terms(
                    &f,
                    vec![
                        (w(&[Letter::Var(j), Letter::Var(i)]), Scalar::one(&f)),
                        (w(&[Letter::Var(i), Letter::Var(j)]), q.neg()),
                    ],
                    &o,
                ));
            }
        }
        let gb = buchberger(&rels, &o, None, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(gb.complete_to_degree, CompletionLevel::Unbounded);
        assert_eq!(gb.elements.len(), 3);
        assert!(verify_complete(&gb));
    }

    #[test]
    fn infinite_family_truncated_at_degree_five() {
        // {xy - y^2} under y > x grows the family y x^n y - x^(n+1) y.
        let o = order_yx();
        let g0 = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        let gb = buchberger(&[g0.clone()], &o, Some(5), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(gb.complete_to_degree, CompletionLevel::Bounded(5));
        let expect: Vec<Polynomial> = (0..=3)
            .map(|n| {
                let mut lead = vec![y()];
                lead.extend(std::iter::repeat(x()).take(n));
                lead.push(y());
                let mut tail = vec![x(); n + 1];
                tail.push(y());
                poly(&[(&lead, 1), (&tail, -1)], &o)
            })
            .collect();
        assert_eq!(gb.elements, expect);
        // Under x > y the single relation is already complete.
        let o2 = order_xy();
        let g = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o2);
        let gb2 = buchberger(&[g.clone()], &o2, None, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(gb2.complete_to_degree, CompletionLevel::Unbounded);
        assert_eq!(gb2.elements, vec![g]);
    }

    #[test]
    fn interreduce_examples() {
        let o = order_xy();
        let a = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        let doubled = a.scale(&Scalar::from_integer(&qfield(), 2));
        // Duplicates and scalar multiples collapse.
        assert_eq!(
            interreduce(&[a.clone(), a.clone(), doubled], &o),
            vec![a.clone()]
        );
        // {x, xy - y^2} reduces to {x, y^2}.
        let px = poly(&[(&[x()], 1)], &o);
        let got = interreduce(&[px.clone(), a.clone()], &o);
        assert_eq!(got, vec![px.clone(), poly(&[(&[y(), y()], 1)], &o)]);
        // Fixed point.
        assert_eq!(interreduce(&got, &o), got);
    }

    #[test]
    fn coset_basis_pbw_shape() {
        // Leading ideal {v2 v1, t v1, t v2, t t} for n = 2, |G| = 2.
        let f = qfield();
        let o = MonomialOrder::default_for(2, 2);
        let t = Letter::Grp(1);
        let monomial =
            |ls: &[Letter]| Polynomial::term(w(ls), Scalar::one(&f));
        let gb = GroebnerBasis {
            elements: vec![
                monomial(&[y(), x()]),
                monomial(&[t, x()]),
                monomial(&[t, y()]),
                monomial(&[t, t]),
            ],
            order: o.clone(),
            complete_to_degree: CompletionLevel::Unbounded,
            reduced: true,
        };
        let deg1 = coset_basis(&gb, 1).unwrap();
        assert_eq!(
            deg1,
            vec![Word::empty(), w(&[x()]), w(&[y()]), w(&[t])]
        );
        // Word-degree counts: standard monomials of degree <= k plus
        // quasi-standard ones whose variable part has degree <= k - 1.
        let binom2 = |k: usize| (k + 1) * (k + 2) / 2; // binom(k+2, 2)
        for k in 1..=5usize {
            let count = coset_basis(&gb, k).unwrap().len();
            assert_eq!(count, binom2(k) + binom2(k - 1), "word degree {k}");
        }
        // Filtration counts (group letters weightless) hit the PBW
        // dimension binom(k+2, 2) * |G| at every level.
        for k in 0..=5usize {
            assert_eq!(
                coset_count_filtered(&gb, k).unwrap(),
                binom2(k) * 2,
                "filtration degree {k}"
            );
        }
    }

    #[test]
    fn coset_basis_single_relation() {
        let o = order_xy();
        let gb = GroebnerBasis {
            elements: vec![poly(&[(&[x(), y()], 1)], &o)],
            order: o.clone(),
            complete_to_degree: CompletionLevel::Unbounded,
            reduced: true,
        };
        let got = coset_basis(&gb, 2).unwrap();
        assert_eq!(
            got,
            vec![
                Word::empty(),
                w(&[x()]),
                w(&[y()]),
                w(&[x(), x()]),
                w(&[y(), x()]),
                w(&[y(), y()]),
            ]
        );
    }

    #[test]
    fn coset_basis_requires_enough_completion() {
        let o = order_yx();
        let g0 = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        let gb = buchberger(&[g0], &o, Some(5), DEFAULT_ELEMENT_CAP).unwrap();
        // Max relation degree is 6 after truncation at 5; asking for
        // degree 3 needs completion to 9.
        assert!(matches!(
            coset_basis(&gb, 3),
            Err(GroebnerError::InsufficientCompletion { .. })
        ));
    }

    #[test]
    fn completion_strategy_independent() {
        // FIFO pair handling (simulated by a huge tie-degree) and the
        // default must agree: reduced monic bases are unique. Here we
        // simply re-run completion on a shuffled input.
        let o = order_yx();
        let g0 = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        let extra = poly(&[(&[y(), x(), y()], 1), (&[x(), x(), y()], -1)], &o);
        let a = buchberger(&[g0.clone(), extra.clone()], &o, Some(6), DEFAULT_ELEMENT_CAP)
            .unwrap();
        let b = buchberger(&[extra, g0], &o, Some(6), DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn ideal_membership_after_completion() {
        let o = order_yx();
        let g0 = poly(&[(&[x(), y()], 1), (&[y(), y()], -1)], &o);
        let gb = buchberger(&[g0.clone()], &o, Some(8), DEFAULT_ELEMENT_CAP).unwrap();
        // p * g0 * q normal-forms to zero for small cofactors.
        for p in [w(&[]), w(&[x()]), w(&[y()])] {
            for q in [w(&[]), w(&[x()]), w(&[y(), x()])] {
                let prod = g0.mul_word_left(&p).mul_word_right(&q);
                assert!(
                    normal_form(&prod, &gb.elements, &o).is_zero(),
                    "membership failed for cofactors {p} , {q}"
                );
            }
        }
    }
}

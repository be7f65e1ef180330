//! Finite matrix groups over a cyclotomic field: closure from
//! generators, canonical enumeration, multiplication/inverse tables,
//! conjugation, centralizers, and character data for diagonal groups.
//!
//! Matrix entries follow one fixed convention project-wide: the entry at
//! (row i, column j) is the coefficient of `v_i` in the image of `v_j`.
//! All quantum-minor formulas read entries through this convention.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::{CycloField, Scalar};

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("generator matrices must be square of equal size")]
    SizeMismatch,
    #[error("generator matrix is singular")]
    Singular,
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
}

/// An invertible n x n scalar matrix. `entry(i, j)` (1-based) is the
/// coefficient of `v_i` in the image of `v_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    n: usize,
    entries: Vec<Scalar>, // row-major, length n*n
}

impl GroupElement {
    pub fn new(n: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        GroupElement { n, entries }
    }

    pub fn identity(field: &Arc<CycloField>, n: usize) -> Self {
        let mut entries = vec![Scalar::zero(field); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::one(field);
        }
        GroupElement { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// 1-based access: coefficient of `v_i` in the image of `v_j`.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.entries[0].field()
    }

    /// Matrix product; composition acts as `(self * other)(v) =
    /// self(other(v))` under the column convention.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let field = self.field();
        let mut entries = vec![Scalar::zero(field); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = entries[i * n + j].add(&a.mul(b));
                    }
                }
            }
        }
        GroupElement { n, entries }
    }

    pub fn transpose(&self) -> GroupElement {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entries[j * n + i].clone());
            }
        }
        GroupElement { n, entries }
    }

    /// Classical determinant, by fraction-free-enough Gaussian
    /// elimination over the exact field.
    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let field = self.field();
        let mut m: Vec<Vec<Scalar>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut det = Scalar::one(field);
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
                Some(p) => p,
                None => return Scalar::zero(field),
            };
            if pivot != col {
                m.swap(pivot, col);
                det = det.neg();
            }
            det = det.mul(&m[col][col]);
            let inv = m[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].mul(&inv);
                for c in col..n {
                    let sub = factor.mul(&m[col][c]);
                    m[r][c] = m[r][c].sub(&sub);
                }
            }
        }
        det
    }

    pub fn is_monomial_matrix(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            if self.entries[i * n..(i + 1) * n]
                .iter()
                .filter(|e| !e.is_zero())
                .count()
                != 1
            {
                return false;
            }
        }
        for j in 0..n {
            if (0..n).filter(|&i| !self.entries[i * n + j].is_zero()).count() != 1 {
                return false;
            }
        }
        true
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| i == j || self.entries[i * n + j].is_zero()))
    }
}

/// A finite matrix group with canonical element enumeration (identity
/// first, then breadth-first discovery order) and precomputed tables.
#[derive(Debug)]
pub struct FiniteGroup {
    n: usize,
    field: Arc<CycloField>,
    elements: Vec<GroupElement>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Closure from generators by breadth-first search: start at the
    /// identity, repeatedly right-multiply by the generators in list
    /// order. The discovery order is the canonical enumeration.
    pub fn generate(
        field: &Arc<CycloField>,
        n: usize,
        gens: &[GroupElement],
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        for g in gens {
            if g.dim() != n {
                return Err(GroupError::SizeMismatch);
            }
            if g.determinant().is_zero() {
                return Err(GroupError::Singular);
            }
        }
        let mut elements = vec![GroupElement::identity(field, n)];
        let mut index: HashMap<Vec<Scalar>, usize> = HashMap::new();
        index.insert(elements[0].entries.to_vec(), 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for g in gens {
                let next = current.mul(g);
                if !index.contains_key(next.entries()) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    index.insert(next.entries.to_vec(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        let size = elements.len();
        let mut mult = vec![vec![0usize; size]; size];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let p = a.mul(b);
                mult[i][j] = *index
                    .get(p.entries())
                    .expect("closure is closed under products");
            }
        }
        let mut inverse = vec![0usize; size];
        for (i, row) in mult.iter().enumerate() {
            inverse[i] = row
                .iter()
                .position(|&k| k == 0)
                .expect("every element has an inverse in a finite closure");
        }
        Ok(FiniteGroup {
            n,
            field: field.clone(),
            elements,
            mult,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, idx: usize) -> &GroupElement {
        &self.elements[idx]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.mult[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Index of `h^{-1} g h`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mult[self.mult[self.inverse[h]][g]][h]
    }

    /// All indices commuting with `g`.
    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&h| self.mult[h][g] == self.mult[g][h])
            .collect()
    }

    /// Partition into conjugacy classes, each sorted, ordered by their
    /// smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut classes = Vec::new();
        for g in 0..self.size() {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.size()).map(|h| self.conjugate(g, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(|g| g.is_monomial_matrix())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size()).all(|i| (0..self.size()).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// For a group of diagonal matrices, the characters `chi_i` with
    /// `g(v_i) = chi_i(g) v_i`: `result[g][i-1] = chi_i(g)`. `None` when
    /// some element is not diagonal.
    pub fn diagonal_characters(&self) -> Option<Vec<Vec<Scalar>>> {
        if !self.elements.iter().all(|g| g.is_diagonal()) {
            return None;
        }
        Some(
            self.elements
                .iter()
                .map(|g| (1..=self.n).map(|i| g.entry(i, i).clone()).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    /// Build an element from integer entries (row-major).
    pub fn int_matrix(field: &Arc<CycloField>, n: usize, vals: &[i64]) -> GroupElement {
        GroupElement::new(
            n,
            vals.iter().map(|&v| Scalar::from_integer(field, v)).collect(),
        )
    }

    /// The two reflection generators of the dihedral group of order 8
    /// acting on 3-space: an anti-diagonal swap with a middle sign flip,
    /// and a diagonal sign matrix.
    pub fn dihedral8_gens(field: &Arc<CycloField>) -> Vec<GroupElement> {
        vec![
            int_matrix(field, 3, &[0, 0, 1, 0, -1, 0, 1, 0, 0]),
            int_matrix(field, 3, &[1, 0, 0, 0, -1, 0, 0, 0, -1]),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;

    fn qfield() -> Arc<CycloField> {
        CycloField::rational()
    }

    #[test]
    fn trivial_group() {
        let f = qfield();
        let g = FiniteGroup::generate(&f, 2, &[], 16).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.element(0), &GroupElement::identity(&f, 2));
    }

    #[test]
    fn dihedral_order_eight() {
        let f = qfield();
        let gens = dihedral8_gens(&f);
        let g = FiniteGroup::generate(&f, 3, &gens, 64).unwrap();
        assert_eq!(g.size(), 8);
        // Canonical enumeration: e, M, N, MN, NM, MNM, NMN, MNMN.
        assert_eq!(g.element(1), &gens[0]);
        assert_eq!(g.element(2), &gens[1]);
        assert_eq!(g.element(3), &gens[0].mul(&gens[1]));
        assert_eq!(g.element(4), &gens[1].mul(&gens[0]));
        assert_eq!(g.element(5), &gens[0].mul(&gens[1]).mul(&gens[0]));
        assert_eq!(g.element(6), &gens[1].mul(&gens[0]).mul(&gens[1]));
        assert_eq!(
            g.element(7),
            &gens[0].mul(&gens[1]).mul(&gens[0]).mul(&gens[1])
        );
        assert!(g.is_monomial());
        assert!(!g.is_abelian());
        assert!(g.diagonal_characters().is_none());
    }

    #[test]
    fn dihedral_conjugation_and_centralizer() {
        let f = qfield();
        let g = FiniteGroup::generate(&f, 3, &dihedral8_gens(&f), 64).unwrap();
        // Conjugating the first generator (index 1) by the second
        // (index 2) gives N M N at index 6.
        assert_eq!(g.conjugate(1, 2), 6);
        // Oracle: brute-force commutation scan gives {e, M, NMN, MNMN}.
        assert_eq!(g.centralizer(1), vec![0, 1, 6, 7]);
        // The identity is central.
        for h in 0..g.size() {
            assert_eq!(g.conjugate(0, h), 0);
        }
        assert_eq!(g.centralizer(0), (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn cyclic_diagonal_group_order_three() {
        let f = CycloField::new(3).unwrap();
        let q = Scalar::zeta(&f);
        let gen = GroupElement::new(
            3,
            vec![
                q.pow(2).unwrap(),
                Scalar::zero(&f),
                Scalar::zero(&f),
                Scalar::zero(&f),
                Scalar::one(&f),
                Scalar::zero(&f),
                Scalar::zero(&f),
                Scalar::zero(&f),
                q.pow(-2).unwrap(),
            ],
        );
        let g = FiniteGroup::generate(&f, 3, &[gen.clone()], 16).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.is_abelian());
        let chars = g.diagonal_characters().unwrap();
        assert_eq!(chars[1][0], q.pow(2).unwrap());
        assert_eq!(chars[1][1], Scalar::one(&f));
        assert_eq!(chars[1][2], q.pow(-2).unwrap());
        // Characters are multiplicative.
        for a in 0..3 {
            for b in 0..3 {
                for i in 0..3 {
                    assert_eq!(
                        chars[g.product(a, b)][i],
                        chars[a][i].mul(&chars[b][i])
                    );
                }
            }
        }
    }

    #[test]
    fn table_consistency() {
        let f = qfield();
        let g = FiniteGroup::generate(&f, 3, &dihedral8_gens(&f), 64).unwrap();
        for a in 0..g.size() {
            assert_eq!(g.product(a, g.inverse(a)), 0);
            assert_eq!(g.product(g.inverse(a), a), 0);
            for b in 0..g.size() {
                let prod = g.element(a).mul(g.element(b));
                assert_eq!(g.element(g.product(a, b)), &prod);
                for c in 0..g.size() {
                    assert_eq!(
                        g.product(g.product(a, b), c),
                        g.product(a, g.product(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn regeneration_is_stable() {
        let f = qfield();
        let g1 = FiniteGroup::generate(&f, 3, &dihedral8_gens(&f), 64).unwrap();
        let g2 = FiniteGroup::generate(&f, 3, &dihedral8_gens(&f), 64).unwrap();
        assert_eq!(g1.elements(), g2.elements());
    }

    #[test]
    fn singular_generator_rejected() {
        let f = qfield();
        let bad = int_matrix(&f, 2, &[1, 1, 1, 1]);
        assert!(matches!(
            FiniteGroup::generate(&f, 2, &[bad], 16),
            Err(GroupError::Singular)
        ));
    }

    #[test]
    fn cap_exceeded() {
        let f = qfield();
        let gens = dihedral8_gens(&f);
        assert!(matches!(
            FiniteGroup::generate(&f, 3, &gens, 4),
            Err(GroupError::CapExceeded(4))
        ));
    }

    #[test]
    fn determinant_and_transpose() {
        let f = qfield();
        let m = int_matrix(&f, 3, &[0, 0, 1, 0, -1, 0, 1, 0, 0]);
        assert_eq!(m.determinant(), Scalar::from_integer(&f, 1));
        assert_eq!(m.transpose(), m); // symmetric anti-diagonal
        let shear = int_matrix(&f, 2, &[1, 1, 0, 1]);
        assert_eq!(shear.determinant(), Scalar::one(&f));
        assert_ne!(shear.transpose(), shear);
        assert!(!shear.is_monomial_matrix());
        assert!(m.is_monomial_matrix());
    }
}

//! Words and polynomials in the free associative algebra
//! `K<v_1..v_n, t_g>` with admissible monomial orderings.
//!
//! Letters are either vector-space variables `v_i` or group letters
//! `t_g` for non-identity group elements. A [`Word`] is a finite letter
//! sequence (the empty word is the multiplicative identity), and a
//! [`Polynomial`] is a finite scalar combination of words, stored sorted
//! descending under the active [`MonomialOrder`] so the leading term is
//! always first.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::{parse_scalar, CycloField, Scalar, ScalarError};

/// A generator of the free algebra.
///
/// `Var(i)` is the variable `v_i` with `1 <= i <= n`. `Grp(k)` is the
/// group letter `t` for the element at 0-based canonical index `k`; the
/// identity (index 0) is identified with the unit of the algebra and is
/// never a letter, so `k >= 1` always.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    Var(usize),
    Grp(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // Group letters print with the 1-based canonical element
            // number, so the letter for the second element is `t2`.
            Letter::Var(i) => write!(f, "v{}", i),
            Letter::Grp(k) => write!(f, "t{}", k + 1),
        }
    }
}

/// A monomial: a finite sequence of letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of variable letters, ignoring group letters — the
    /// filtration degree of the word in the quotient algebra.
    pub fn var_degree(&self) -> usize {
        self.0
            .iter()
            .filter(|l| matches!(l, Letter::Var(_)))
            .count()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All factorizations `self = m1 * v * m2`, in increasing start
    /// position. Equality `self = v` yields the single factorization
    /// with both cofactors empty.
    pub fn find_subword(&self, v: &Word) -> Vec<(Word, Word)> {
        assert!(!v.is_empty(), "subword pattern must be nonempty");
        let mut out = Vec::new();
        if v.degree() > self.degree() {
            return out;
        }
        for s in 0..=self.degree() - v.degree() {
            if self.0[s..s + v.degree()] == v.0[..] {
                out.push((
                    Word(self.0[..s].to_vec()),
                    Word(self.0[s + v.degree()..].to_vec()),
                ));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// Tie-break direction for degree-compatible lexicographic orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderStyle {
    /// Compare total degree, then scan letters from the rightmost
    /// position leftward.
    DegRightLex,
    /// Compare total degree, then scan from the leftmost position.
    DegLeftLex,
}

/// A total, well-founded monomial order compatible with concatenation
/// on both sides.
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    style: OrderStyle,
    precedence: Vec<Letter>,
    rank: HashMap<Letter, usize>,
}

impl MonomialOrder {
    pub fn new(style: OrderStyle, precedence: Vec<Letter>) -> Self {
        let rank = precedence
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();
        MonomialOrder {
            style,
            precedence,
            rank,
        }
    }

    /// The default order: degree first, right-to-left tie-break, with
    /// precedence `v_1 > ... > v_n > t_(g_2) > ... > t_(g_m)` following
    /// the canonical group enumeration.
    pub fn default_for(n: usize, group_size: usize) -> Self {
        let mut precedence = Vec::with_capacity(n + group_size.saturating_sub(1));
        for i in 1..=n {
            precedence.push(Letter::Var(i));
        }
        for k in 1..group_size {
            precedence.push(Letter::Grp(k));
        }
        Self::new(OrderStyle::DegRightLex, precedence)
    }

    pub fn style(&self) -> OrderStyle {
        self.style
    }

    pub fn precedence(&self) -> &[Letter] {
        &self.precedence
    }

    fn rank_of(&self, l: Letter) -> usize {
        *self
            .rank
            .get(&l)
            .unwrap_or_else(|| panic!("letter {l} missing from the order's precedence"))
    }

    /// Compare two words; `Greater` means `u` is larger in the order.
    pub fn compare(&self, u: &Word, w: &Word) -> Ordering {
        match u.degree().cmp(&w.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        let pairs: Box<dyn Iterator<Item = (&Letter, &Letter)>> = match self.style {
            OrderStyle::DegRightLex => Box::new(u.0.iter().rev().zip(w.0.iter().rev())),
            OrderStyle::DegLeftLex => Box::new(u.0.iter().zip(w.0.iter())),
        };
        for (&a, &b) in pairs {
            if a != b {
                // Smaller rank = higher precedence = larger word.
                return self.rank_of(b).cmp(&self.rank_of(a));
            }
        }
        Ordering::Equal
    }
}

/// A finite scalar combination of words, with no zero coefficients,
/// stored sorted strictly descending under the order it was built with.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    field: Arc<CycloField>,
    terms: Vec<(Word, Scalar)>,
}

impl Polynomial {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Polynomial {
            field: field.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field().clone();
        if c.is_zero() {
            Self::zero(&field)
        } else {
            Polynomial {
                field,
                terms: vec![(Word::empty(), c)],
            }
        }
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let field = c.field().clone();
        if c.is_zero() {
            Self::zero(&field)
        } else {
            Polynomial {
                field,
                terms: vec![(w, c)],
            }
        }
    }

    /// Build from arbitrary (word, scalar) pairs: merges duplicate
    /// words, drops zeros, sorts descending under `o`.
    pub fn from_terms(
        field: &Arc<CycloField>,
        terms: Vec<(Word, Scalar)>,
        o: &MonomialOrder,
    ) -> Self {
        let mut merged: Vec<(Word, Scalar)> = Vec::with_capacity(terms.len());
        let mut idx: HashMap<Word, usize> = HashMap::with_capacity(terms.len());
        for (w, c) in terms {
            match idx.get(&w) {
                Some(&i) => merged[i].1 = merged[i].1.add(&c),
                None => {
                    idx.insert(w.clone(), merged.len());
                    merged.push((w, c));
                }
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged.sort_by(|a, b| o.compare(&b.0, &a.0));
        Polynomial {
            field: field.clone(),
            terms: merged,
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(w, _)| w.degree()).max()
    }

    /// Leading (word, coefficient) under the construction order; `None`
    /// for the zero polynomial.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.first().map(|(w, c)| (w, c))
    }

    pub fn add(&self, other: &Polynomial, o: &MonomialOrder) -> Polynomial {
        self.merge(other, o, false)
    }

    pub fn sub(&self, other: &Polynomial, o: &MonomialOrder) -> Polynomial {
        self.merge(other, o, true)
    }

    fn merge(&self, other: &Polynomial, o: &MonomialOrder, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (wa, ca) = &self.terms[i];
            let (wb, cb) = &other.terms[j];
            match o.compare(wa, wb) {
                Ordering::Greater => {
                    out.push((wa.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { cb.neg() } else { cb.clone() };
                    out.push((wb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((wa.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (w, c) in &other.terms[j..] {
            out.push((w.clone(), if negate { c.neg() } else { c.clone() }));
        }
        Polynomial {
            field: self.field.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(&self.field);
        }
        Polynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Noncommutative product: concatenation of words distributed over
    /// terms.
    pub fn mul(&self, other: &Polynomial, o: &MonomialOrder) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                terms.push((wa.concat(wb), ca.mul(cb)));
            }
        }
        Polynomial::from_terms(&self.field, terms, o)
    }

    pub fn mul_word_left(&self, w: &Word) -> Polynomial {
        // Left multiplication by a word preserves the relative order of
        // terms (two-sided multiplicativity), so no re-sort is needed.
        Polynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (w.concat(u), c.clone()))
                .collect(),
        }
    }

    pub fn mul_word_right(&self, w: &Word) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.concat(w), c.clone()))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum PolyParseError {
    #[error("polynomial syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Parse a polynomial in the text grammar: letters `v1..v9` and `t<k>`
/// (1-based canonical element number, never `t1` = identity), scalar
/// coefficient factors (rationals, `z` powers, or parenthesized scalar
/// expressions), joined by `*` within a term, terms joined by `+`/`-`.
pub fn parse_polynomial(
    text: &str,
    field: &Arc<CycloField>,
    o: &MonomialOrder,
) -> Result<Polynomial, PolyParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut terms: Vec<(Word, Scalar)> = Vec::new();
    let err = |pos: usize, msg: &str| PolyParseError::Syntax {
        pos,
        msg: msg.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty polynomial"));
    }
    let mut first = true;
    while pos < bytes.len() {
        // Sign between terms (optional before the first term).
        let mut negate = false;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                negate = true;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(err(pos, "expected `+` or `-` between terms")),
        }
        first = false;
        skip_ws(&mut pos);
        // One term: `*`-joined factors.
        let mut coeff = Scalar::one(field);
        let mut word = Vec::new();
        let mut want_factor = true;
        while want_factor {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(err(pos, "expected a factor"));
            }
            match bytes[pos] {
                b'v' => {
                    pos += 1;
                    if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                        return Err(err(pos, "expected a digit after `v`"));
                    }
                    let d = (bytes[pos] - b'0') as usize;
                    pos += 1;
                    if d == 0 {
                        return Err(err(pos, "variable indices start at v1"));
                    }
                    word.push(Letter::Var(d));
                }
                b't' => {
                    pos += 1;
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == start {
                        return Err(err(pos, "expected a digit after `t`"));
                    }
                    let k: usize = std::str::from_utf8(&bytes[start..pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| err(start, "group index out of range"))?;
                    if k == 0 {
                        return Err(err(start, "group letter indices start at t2"));
                    }
                    if k == 1 {
                        return Err(err(
                            start,
                            "t1 is the identity and is written as the scalar 1",
                        ));
                    }
                    word.push(Letter::Grp(k - 1));
                }
                b'(' => {
                    let close = text[pos..]
                        .find(')')
                        .map(|off| pos + off)
                        .ok_or_else(|| err(pos, "unclosed parenthesis"))?;
                    let inner = &text[pos + 1..close];
                    let s = parse_scalar(inner, field)?;
                    coeff = coeff.mul(&s);
                    pos = close + 1;
                }
                b'z' => {
                    pos += 1;
                    let mut exp: i64 = 1;
                    skip_ws(&mut pos);
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        skip_ws(&mut pos);
                        let mut sign = 1i64;
                        if pos < bytes.len() && bytes[pos] == b'-' {
                            sign = -1;
                            pos += 1;
                        }
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if pos == start {
                            return Err(err(pos, "expected an exponent after `^`"));
                        }
                        exp = sign
                            * std::str::from_utf8(&bytes[start..pos])
                                .unwrap()
                                .parse::<i64>()
                                .map_err(|_| err(start, "exponent out of range"))?;
                    }
                    let z = Scalar::zeta(field).pow(exp)?;
                    coeff = coeff.mul(&z);
                }
                c if c.is_ascii_digit() => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let num: i64 = std::str::from_utf8(&bytes[start..pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| err(start, "integer out of range"))?;
                    skip_ws(&mut pos);
                    let r = if pos < bytes.len() && bytes[pos] == b'/' {
                        pos += 1;
                        skip_ws(&mut pos);
                        let dstart = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if pos == dstart {
                            return Err(err(pos, "expected a denominator"));
                        }
                        let den: i64 = std::str::from_utf8(&bytes[dstart..pos])
                            .unwrap()
                            .parse()
                            .map_err(|_| err(dstart, "integer out of range"))?;
                        if den == 0 {
                            return Err(err(dstart, "zero denominator"));
                        }
                        Scalar::from_rational(
                            field,
                            crate::scalar::Rational::new(num.into(), den.into()),
                        )
                    } else {
                        Scalar::from_integer(field, num)
                    };
                    coeff = coeff.mul(&r);
                }
                _ => return Err(err(pos, "unexpected character in term")),
            }
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                want_factor = true;
            } else {
                want_factor = false;
            }
        }
        if negate {
            coeff = coeff.neg();
        }
        terms.push((Word(word), coeff));
        skip_ws(&mut pos);
    }
    Ok(Polynomial::from_terms(field, terms, o))
}

/// True when the scalar has a single nonzero entry `c * z^k`, so it can
/// print inline in a polynomial term without parentheses.
fn scalar_is_simple(s: &Scalar) -> bool {
    s.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() <= 1
}

impl fmt::Display for Polynomial {
    /// Canonical form in the polynomial text grammar; round-trips
    /// exactly through [`parse_polynomial`] under the same order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed, Zero};
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            // Decide a display sign and magnitude for the coefficient.
            let (neg, mag) = if scalar_is_simple(c) {
                let k = c.coeffs().iter().position(|x| !x.is_zero()).unwrap();
                let r = &c.coeffs()[k];
                if r.is_negative() {
                    (true, c.neg())
                } else {
                    (false, c.clone())
                }
            } else {
                (false, c.clone())
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_txt = if scalar_is_simple(&mag) {
                let k = mag.coeffs().iter().position(|x| !x.is_zero());
                match k {
                    None => "0".to_string(),
                    Some(0) => {
                        let r = &mag.coeffs()[0];
                        if r.is_one() && !w.is_empty() {
                            String::new()
                        } else {
                            format!("{}", r)
                        }
                    }
                    Some(k) => {
                        let r = &mag.coeffs()[k];
                        let z = if k == 1 {
                            "z".to_string()
                        } else {
                            format!("z^{}", k)
                        };
                        if r.is_one() {
                            z
                        } else {
                            format!("{}*{}", r, z)
                        }
                    }
                }
            } else {
                format!("({})", mag)
            };
            match (coeff_txt.is_empty(), w.is_empty()) {
                (true, _) => write!(f, "{}", w)?,
                (false, true) => write!(f, "{}", coeff_txt)?,
                (false, false) => write!(f, "{}*{}", coeff_txt, w)?,
            }
        }
        Ok(())
    }
}

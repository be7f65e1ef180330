//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! Every coefficient in this crate is a [`Scalar`]: a residue modulo the
//! m-th cyclotomic polynomial with arbitrary-precision rational
//! coefficients. No floating point is used anywhere.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number (reduced, positive denominator).
pub type Rational = BigRational;

/// Largest conductor accepted by [`CycloField::new`].
pub const CONDUCTOR_CAP: u32 = 512;

#[derive(Debug, Error)]
pub enum ScalarError {
    #[error("conductor {0} exceeds the supported cap of {1}")]
    ConductorCap(u32, u32),
    #[error("conductor must be a positive integer")]
    ZeroConductor,
    #[error("scalars live in different fields: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {from} does not divide conductor {to}")]
    NonDivisibleConductors { from: u32, to: u32 },
    #[error("scalar syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The m-th cyclotomic polynomial as a dense, constant-first, monic
/// rational coefficient vector.
pub fn cyclotomic_polynomial(m: u32) -> Result<Vec<Rational>, ScalarError> {
    if m == 0 {
        return Err(ScalarError::ZeroConductor);
    }
    if m > CONDUCTOR_CAP {
        return Err(ScalarError::ConductorCap(m, CONDUCTOR_CAP));
    }
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up.
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(m as usize);
    for k in 1..=m {
        let mut num = vec![Rational::zero(); k as usize + 1];
        num[0] = -Rational::one();
        num[k as usize] = Rational::one();
        let mut poly = num;
        for d in 1..k {
            if k % d == 0 {
                poly = poly_div_exact(&poly, &table[d as usize - 1]);
            }
        }
        table.push(poly);
    }
    Ok(table.pop().expect("m >= 1"))
}

/// A fixed cyclotomic field `Q(zeta_m)`, shared behind an [`Arc`].
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    minimal_polynomial: Vec<Rational>,
}

impl CycloField {
    pub fn new(conductor: u32) -> Result<Arc<Self>, ScalarError> {
        let minimal_polynomial = cyclotomic_polynomial(conductor)?;
        Ok(Arc::new(CycloField {
            conductor,
            minimal_polynomial,
        }))
    }

    /// The rational field, as `Q(zeta_1)`.
    pub fn rational() -> Arc<Self> {
        Self::new(1).expect("conductor 1 is always valid")
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Extension degree over Q, i.e. Euler's totient of the conductor.
    pub fn degree(&self) -> usize {
        self.minimal_polynomial.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[Rational] {
        &self.minimal_polynomial
    }
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}
impl Eq for CycloField {}

/// An element of a cyclotomic field: the unique reduced residue mod Phi_m,
/// stored as a constant-first coefficient vector of length phi(m).
#[derive(Clone)]
pub struct Scalar {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Scalar {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CycloField>, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = r;
        Scalar {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_integer(field: &Arc<CycloField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    /// The primitive root of unity `zeta_m` generating the field.
    pub fn zeta(field: &Arc<CycloField>) -> Self {
        let mut x = vec![Rational::zero(), Rational::one()];
        reduce_mod(&mut x, field.minimal_polynomial());
        Scalar::from_poly(field, x)
    }

    fn from_poly(field: &Arc<CycloField>, mut poly: Vec<Rational>) -> Self {
        poly.resize(field.degree(), Rational::zero());
        Scalar {
            field: field.clone(),
            coeffs: poly,
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value of a scalar with no zeta component, if any.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "scalar field mismatch: Q(zeta_{}) vs Q(zeta_{})",
            self.field.conductor, other.field.conductor
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Scalar {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Scalar {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        let d = self.field.degree();
        let mut prod = vec![Rational::zero(); 2 * d.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        reduce_mod(&mut prod, self.field.minimal_polynomial());
        Scalar::from_poly(&self.field, prod)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against the minimal polynomial.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (g, s) = poly_ext_gcd(&self.coeffs, self.field.minimal_polynomial());
        // Phi_m is irreducible over Q, so the gcd is a nonzero constant.
        debug_assert_eq!(poly_degree(&g), Some(0));
        let c = g[0].recip();
        let mut out: Vec<Rational> = s.iter().map(|x| x * &c).collect();
        reduce_mod(&mut out, self.field.minimal_polynomial());
        Ok(Scalar::from_poly(&self.field, out))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: i64) -> Result<Scalar, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one(&self.field);
        let mut e = exp.unsigned_abs();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Image of the scalar under `zeta_m -> zeta_M^(M/m)` for `m | M`.
    pub fn embed(&self, to: &Arc<CycloField>) -> Result<Scalar, ScalarError> {
        let m = self.field.conductor;
        let big = to.conductor();
        if big % m != 0 {
            return Err(ScalarError::NonDivisibleConductors { from: m, to: big });
        }
        let step = (big / m) as i64;
        let zeta_img = Scalar::zeta(to).pow(step)?;
        let mut acc = Scalar::zero(to);
        let mut power = Scalar::one(to);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = acc.add(&power.scale_rational(c));
            }
            power = power.mul(&zeta_img);
        }
        Ok(acc)
    }

    fn scale_rational(&self, r: &Rational) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

/// Lift two scalars into the smallest common field `Q(zeta_lcm)`.
pub fn lift_to_common_field(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar), ScalarError> {
    let (ma, mb) = (a.field.conductor, b.field.conductor);
    if ma == mb {
        return Ok((a.clone(), b.clone()));
    }
    let l = num_integer::lcm(ma, mb);
    let field = CycloField::new(l)?;
    Ok((a.embed(&field)?, b.embed(&field)?))
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (in Q(zeta_{}))", self, self.field.conductor)
    }
}

impl fmt::Display for Scalar {
    /// Canonical literal form, e.g. `-1/2*z^3 + 2`, parseable by
    /// [`parse_scalar`]. Powers are printed in descending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

/// Parse a scalar literal: rationals `p/q` or `p`, the symbol `z` for
/// `zeta_m`, products with `*`, powers `z^k`, sums and differences.
/// Whitespace-insensitive.
pub fn parse_scalar(text: &str, field: &Arc<CycloField>) -> Result<Scalar, ScalarError> {
    let mut p = ScalarParser {
        bytes: text.as_bytes(),
        pos: 0,
        field,
    };
    let v = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input after scalar literal"));
    }
    Ok(v)
}

struct ScalarParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    field: &'a Arc<CycloField>,
}

impl<'a> ScalarParser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expression(&mut self) -> Result<Scalar, ScalarError> {
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == b'-' {
                self.pos += 1;
                negate = true;
            } else if c == b'+' {
                self.pos += 1;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                b'-' => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                let mut exp: i64 = 1;
                if let Some(b'^') = self.peek() {
                    self.pos += 1;
                    exp = self.integer()?;
                }
                Scalar::zeta(self.field).pow(exp)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if let Some(b'/') = self.peek() {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Scalar::from_rational(
                        self.field,
                        Rational::new(BigInt::from(num), BigInt::from(den)),
                    ))
                } else {
                    Ok(Scalar::from_integer(self.field, num))
                }
            }
            _ => Err(self.err("expected a rational literal or `z`")),
        }
    }

    fn integer(&mut self) -> Result<i64, ScalarError> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.bytes.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        }
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits
            .parse::<i64>()
            .map(|v| sign * v)
            .map_err(|_| self.err("integer out of range"))
    }
}

// ----- dense rational polynomial helpers (constant-first) -----

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder of `p` modulo the monic polynomial `m`, in place
/// (result occupies `p[0..deg(m)]`).
fn reduce_mod(p: &mut Vec<Rational>, m: &[Rational]) {
    let dm = m.len() - 1;
    while let Some(dp) = poly_degree(p) {
        if dp < dm {
            break;
        }
        let lead = p[dp].clone();
        for (i, c) in m.iter().enumerate() {
            if !c.is_zero() {
                p[dp - dm + i] -= &lead * c;
            }
        }
    }
    p.truncate(dm.max(1));
    p.resize(dm.max(1), Rational::zero());
}

/// Exact quotient `num / den` over Q; panics if the division has a remainder.
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let dn = poly_degree(num).expect("nonzero numerator");
    let dd = poly_degree(den).expect("nonzero denominator");
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    let lead_den = den[dd].clone();
    for k in (0..=dn - dd).rev() {
        let coeff = &rem[k + dd] / &lead_den;
        if !coeff.is_zero() {
            for (i, c) in den.iter().enumerate().take(dd + 1) {
                rem[k + i] -= &coeff * c;
            }
        }
        quot[k] = coeff;
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "polynomial division was not exact"
    );
    quot
}

/// Partial extended gcd: returns `(g, s)` with `g = gcd(a, b)` and
/// `s*a = g (mod b)`.
fn poly_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1 = vec![Rational::zero()];
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_div_rem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn poly_div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_degree(den).expect("nonzero divisor");
    let mut rem = num.to_vec();
    let dn = match poly_degree(&rem) {
        Some(d) if d >= dd => d,
        _ => {
            trim(&mut rem);
            return (vec![Rational::zero()], rem);
        }
    };
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    let lead_den = den[dd].clone();
    for k in (0..=dn - dd).rev() {
        let coeff = &rem[k + dd] / &lead_den;
        if !coeff.is_zero() {
            for (i, c) in den.iter().enumerate().take(dd + 1) {
                rem[k + i] -= &coeff * c;
            }
        }
        quot[k] = coeff;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn phi(m: u32) -> Vec<i64> {
        cyclotomic_polynomial(m)
            .unwrap()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn cyclotomic_base_cases() {
        assert_eq!(phi(1), vec![-1, 1]); // x - 1
        assert_eq!(phi(2), vec![1, 1]); // x + 1
        assert_eq!(phi(4), vec![1, 0, 1]); // x^2 + 1
    }

    #[test]
    fn cyclotomic_m6_by_exact_division() {
        // Oracle: divide x^6 - 1 by Phi_1 * Phi_2 * Phi_3 exactly.
        let mut num = vec![Rational::zero(); 7];
        num[0] = -Rational::one();
        num[6] = Rational::one();
        for d in [1u32, 2, 3] {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d).unwrap());
        }
        let expect: Vec<Rational> = [1, -1, 1].iter().map(|&n| rat(n)).collect();
        assert_eq!(num, expect);
        assert_eq!(phi(6), vec![1, -1, 1]); // x^2 - x + 1
    }

    #[test]
    fn cyclotomic_cap() {
        assert!(matches!(
            cyclotomic_polynomial(CONDUCTOR_CAP + 1),
            Err(ScalarError::ConductorCap(..))
        ));
        assert!(matches!(
            cyclotomic_polynomial(0),
            Err(ScalarError::ZeroConductor)
        ));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = CycloField::new(4).unwrap();
        let i = Scalar::zeta(&f);
        assert_eq!(i.mul(&i), Scalar::from_integer(&f, -1));
    }

    #[test]
    fn inverse_of_zeta8() {
        // Oracle: extended gcd of x with Phi_8 = x^4 + 1 gives
        // x^{-1} = -x^3 since x * x^3 = x^4 = -1.
        let f = CycloField::new(8).unwrap();
        let z = Scalar::zeta(&f);
        let inv = Scalar::one(&f).div(&z).unwrap();
        let expect = z.pow(3).unwrap().neg();
        assert_eq!(inv, expect);
        assert!(z.mul(&inv).is_one());
    }

    #[test]
    fn additive_cancellation() {
        let f = CycloField::new(3).unwrap();
        let half = Scalar::from_rational(&f, Rational::new(BigInt::from(1), BigInt::from(2)));
        let z = Scalar::zeta(&f);
        let a = half.add(&z);
        let b = half.sub(&z);
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn embed_rational_constant() {
        let f2 = CycloField::new(2).unwrap();
        let f8 = CycloField::new(8).unwrap();
        let m1 = Scalar::from_integer(&f2, -1);
        assert_eq!(m1.embed(&f8).unwrap(), Scalar::from_integer(&f8, -1));
    }

    #[test]
    fn embed_zeta4_into_q8() {
        let f4 = CycloField::new(4).unwrap();
        let f8 = CycloField::new(8).unwrap();
        let got = Scalar::zeta(&f4).embed(&f8).unwrap();
        assert_eq!(got, Scalar::zeta(&f8).pow(2).unwrap());
    }

    #[test]
    fn embed_zeta3_into_q12() {
        // Oracle: the image must satisfy the minimal polynomial x^2 + x + 1.
        let f3 = CycloField::new(3).unwrap();
        let f12 = CycloField::new(12).unwrap();
        let img = Scalar::zeta(&f3).embed(&f12).unwrap();
        assert_eq!(img, Scalar::zeta(&f12).pow(4).unwrap());
        let check = img.mul(&img).add(&img).add(&Scalar::one(&f12));
        assert!(check.is_zero());
    }

    #[test]
    fn embed_rejects_non_divisible() {
        let f3 = CycloField::new(3).unwrap();
        let f8 = CycloField::new(8).unwrap();
        assert!(matches!(
            Scalar::zeta(&f3).embed(&f8),
            Err(ScalarError::NonDivisibleConductors { .. })
        ));
    }

    #[test]
    fn zeta_order_is_exactly_m() {
        for m in 1..=32u32 {
            let f = CycloField::new(m).unwrap();
            let z = Scalar::zeta(&f);
            assert!(z.pow(m as i64).unwrap().is_one(), "zeta_{m}^{m} != 1");
            for k in 1..m {
                assert!(
                    !z.pow(k as i64).unwrap().is_one(),
                    "zeta_{m}^{k} = 1 prematurely"
                );
            }
        }
    }

    #[test]
    fn division_by_zero_rejected() {
        let f = CycloField::new(4).unwrap();
        assert!(matches!(
            Scalar::one(&f).div(&Scalar::zero(&f)),
            Err(ScalarError::DivisionByZero)
        ));
    }

    #[test]
    fn lift_to_common_field_lcm() {
        let f3 = CycloField::new(3).unwrap();
        let f4 = CycloField::new(4).unwrap();
        let (a, b) = lift_to_common_field(&Scalar::zeta(&f3), &Scalar::zeta(&f4)).unwrap();
        assert_eq!(a.field().conductor(), 12);
        assert_eq!(b.field().conductor(), 12);
        assert!(a.pow(3).unwrap().is_one());
        assert!(b.pow(4).unwrap().is_one());
    }

    #[test]
    fn parse_round_trip() {
        let f = CycloField::new(8).unwrap();
        for text in ["0", "1", "-1/2*z^3 + 2", "z", "-z", "2/3", "z^2 - z"] {
            let v = parse_scalar(text, &f).unwrap();
            let printed = v.to_string();
            let back = parse_scalar(&printed, &f).unwrap();
            assert_eq!(v, back, "round trip failed for {text}");
        }
    }

    #[test]
    fn parse_whitespace_insensitive() {
        let f = CycloField::new(8).unwrap();
        let a = parse_scalar("-1/2*z^3+2", &f).unwrap();
        let b = parse_scalar(" - 1 / 2 * z ^ 3 + 2 ", &f).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_rejects_garbage() {
        let f = CycloField::new(4).unwrap();
        assert!(parse_scalar("q", &f).is_err());
        assert!(parse_scalar("1/0", &f).is_err());
        assert!(parse_scalar("2 2", &f).is_err());
    }
}

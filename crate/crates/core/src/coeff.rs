//! Exact arithmetic in the Laurent polynomial ring `Q[v, v^-1]` and its
//! fraction field `Q(v)`, together with the quantum-number primitives
//! (quantum integers, factorials, binomials) everything else is built from.
//!
//! All coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere in the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `v` with rational coefficients, stored as a sparse
/// map from exponent to coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::v_pow_scaled(0, BigRational::one())
    }

    /// The monomial `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::v_pow_scaled(k, BigRational::one())
    }

    /// The monomial `c * v^k`.
    pub fn v_pow_scaled(k: i64, c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::v_pow_scaled(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// Lowest exponent with nonzero coefficient. None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.coeffs.iter()
    }

    fn insert_add(coeffs: &mut BTreeMap<i64, BigRational>, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match coeffs.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            Self::insert_add(&mut coeffs, *k, c.clone());
        }
        LaurentPoly { coeffs }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            Self::insert_add(&mut coeffs, *k, -c.clone());
        }
        LaurentPoly { coeffs }
    }

    pub fn neg_ref(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                Self::insert_add(&mut coeffs, k1 + k2, c1 * c2);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Substitute `v -> v^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at `v = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// True if every coefficient is an integer (the polynomial lies in
    /// `Z[v, v^-1]`).
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    /// Dense coefficient vector of `self * v^-min_exp`, lowest degree first.
    fn to_dense(&self) -> (i64, Vec<BigRational>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut dense = vec![BigRational::zero(); (hi - lo + 1) as usize];
                for (k, c) in &self.coeffs {
                    dense[(k - lo) as usize] = c.clone();
                }
                (lo, dense)
            }
            _ => (0, Vec::new()),
        }
    }

    fn from_dense(lo: i64, dense: &[BigRational]) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in dense.iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(lo + i as i64, c.clone());
            }
        }
        LaurentPoly { coeffs }
    }

    /// Exact Laurent division; errors if the remainder is nonzero.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (alo, mut num) = self.to_dense();
        let (blo, den) = other.to_dense();
        let dd = den.len() - 1;
        if num.len() < den.len() {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![BigRational::zero(); num.len() - dd];
        let lead = den[dd].clone();
        for i in (dd..num.len()).rev() {
            let q = &num[i] / &lead;
            if q.is_zero() {
                continue;
            }
            quot[i - dd] = q.clone();
            for (j, d) in den.iter().enumerate() {
                let idx = i - dd + j;
                let t = &num[idx] - &q * d;
                num[idx] = t;
            }
        }
        if num.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_dense(alo - blo, &quot))
    }

    /// Monic GCD, computed after shifting both operands to ordinary
    /// polynomials in `v`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.make_poly_monic();
        }
        if other.is_zero() {
            return self.make_poly_monic();
        }
        let (_, mut a) = self.to_dense();
        let (_, mut b) = other.to_dense();
        while b.iter().any(|c| !c.is_zero()) {
            let r = Self::dense_rem(&a, &b);
            a = b;
            b = r;
        }
        Self::from_dense(0, &a).make_poly_monic()
    }

    fn dense_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut r = a.to_vec();
        let db = b
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero divisor");
        let lead = b[db].clone();
        while let Some(dr) = r.iter().rposition(|c| !c.is_zero()) {
            if dr < db {
                break;
            }
            let q = &r[dr] / &lead;
            for j in 0..=db {
                let t = &r[dr - db + j] - &q * &b[j];
                r[dr - db + j] = t;
            }
        }
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
        r
    }

    /// Shift to lowest exponent 0 and scale the top coefficient to 1.
    fn make_poly_monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lo = self.min_exp().unwrap();
        let lead = self.coeff(self.max_exp().unwrap());
        let inv = BigRational::one() / lead;
        self.shift(-lo).scale(&inv)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_ref(rhs)
    }
}
impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.sub_ref(rhs)
    }
}
impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}
impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

fn fmt_rational(c: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *k == 0 {
                fmt_rational(&abs, f)?;
            } else {
                if !abs.is_one() {
                    fmt_rational(&abs, f)?;
                    write!(f, "*")?;
                }
                if *k == 1 {
                    write!(f, "v")?;
                } else {
                    write!(f, "v^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

/// The quantum integer `[c] = (v^c - v^-c) / (v - v^-1)`.
pub fn qint(c: i64) -> LaurentPoly {
    if c == 0 {
        return LaurentPoly::zero();
    }
    if c < 0 {
        return qint(-c).neg_ref();
    }
    // [c] = v^{c-1} + v^{c-3} + ... + v^{1-c}
    let mut coeffs = BTreeMap::new();
    let mut k = c - 1;
    while k >= 1 - c {
        coeffs.insert(k, BigRational::one());
        k -= 2;
    }
    LaurentPoly { coeffs }
}

/// The quantum factorial `[m]! = [m][m-1]...[1]`, with `[0]! = 1`.
pub fn qfact(m: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 1..=m {
        acc = acc.mul_ref(&qint(k as i64));
    }
    acc
}

/// The quantum binomial `[c; m] = [c][c-1]...[c-m+1] / [m]!` for `c` an
/// arbitrary integer. The division is always exact; failure would indicate
/// an arithmetic bug, so it panics.
pub fn qbinom(c: i64, m: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    for s in 0..m {
        num = num.mul_ref(&qint(c - s as i64));
    }
    num.exact_div(&qfact(m))
        .expect("quantum binomial division is exact")
}

/// Evaluation of the weight binomial `[Z; c over t]` at `Z = v^lam`:
/// the product over `s = 1..t` of
/// `(v^{lam+c-s+1} - v^{-lam-c+s-1}) / (v^s - v^-s)`. Equals `qbinom(lam+c, t)`.
pub fn qbinom_weight(lam: i64, c: i64, t: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for s in 1..=t as i64 {
        let e = lam + c - s + 1;
        num = num.mul_ref(&LaurentPoly::v_pow(e).sub_ref(&LaurentPoly::v_pow(-e)));
        den = den.mul_ref(&LaurentPoly::v_pow(s).sub_ref(&LaurentPoly::v_pow(-s)));
    }
    num.exact_div(&den)
        .expect("weight binomial division is exact")
}

/// An element of the field `Q(v)`: a normalized fraction of Laurent
/// polynomials. Canonical form: the denominator is a monic polynomial in `v`
/// with nonzero constant term, coprime to the numerator, so equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatScalar {
    pub fn zero() -> Self {
        RatScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatScalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatScalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn v_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::v_pow(k))
    }

    /// Build `num/den`, normalizing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        // Push units v^k into the numerator so the denominator is an honest
        // polynomial with nonzero constant term.
        let dlo = den.min_exp().unwrap();
        let den = den.shift(-dlo);
        let num = num.shift(-dlo);
        let nlo = num.min_exp().unwrap();
        let num_poly = num.shift(-nlo);
        let g = num_poly.gcd(&den);
        let num_red = num_poly.exact_div(&g).expect("gcd divides");
        let den_red = den.exact_div(&g).expect("gcd divides");
        let lead = den_red.coeff(den_red.max_exp().unwrap());
        let inv = BigRational::one() / lead;
        RatScalar {
            num: num_red.scale(&inv).shift(nlo),
            den: den_red.scale(&inv),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the scalar is a Laurent polynomial (denominator 1).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True if the scalar lies in `Z[v, v^-1]`.
    pub fn is_integral_laurent(&self) -> bool {
        self.is_laurent() && self.num.is_integral()
    }

    /// If the scalar is `±v^k`, return `(sign, k)`.
    pub fn as_signed_v_power(&self) -> Option<(i64, i64)> {
        if !self.den.is_one() || self.num.coeffs.len() != 1 {
            return None;
        }
        let (k, c) = self.num.coeffs.iter().next().unwrap();
        if c.is_one() {
            Some((1, *k))
        } else if (-c).is_one() {
            Some((-1, *k))
        } else {
            None
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        Self::normalized(
            self.num
                .mul_ref(&other.den)
                .add_ref(&other.num.mul_ref(&self.den)),
            self.den.mul_ref(&other.den),
        )
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        Self::normalized(
            self.num
                .mul_ref(&other.den)
                .sub_ref(&other.num.mul_ref(&self.den)),
            self.den.mul_ref(&other.den),
        )
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul_ref(&other.num), self.den.mul_ref(&other.den))
    }

    pub fn neg_ref(&self) -> Self {
        RatScalar {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            self.num.mul_ref(&other.den),
            self.den.mul_ref(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().div_ref(self)
    }

    /// Substitute `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self::normalized(self.num.bar(), self.den.bar())
    }

    /// Exact evaluation at `v = 1`; errors if the denominator vanishes there.
    pub fn specialize_v1(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }
}

impl Add for &RatScalar {
    type Output = RatScalar;
    fn add(self, rhs: &RatScalar) -> RatScalar {
        self.add_ref(rhs)
    }
}
impl Sub for &RatScalar {
    type Output = RatScalar;
    fn sub(self, rhs: &RatScalar) -> RatScalar {
        self.sub_ref(rhs)
    }
}
impl Mul for &RatScalar {
    type Output = RatScalar;
    fn mul(self, rhs: &RatScalar) -> RatScalar {
        self.mul_ref(rhs)
    }
}
impl Neg for &RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        self.neg_ref()
    }
}

impl fmt::Display for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// The scalar `(v - v^-1)/(v + v^-1)` governing odd squares.
pub fn odd_square_scalar() -> RatScalar {
    let num = LaurentPoly::v_pow(1).sub_ref(&LaurentPoly::v_pow(-1));
    let den = LaurentPoly::v_pow(1).add_ref(&LaurentPoly::v_pow(-1));
    RatScalar::new(num, den).unwrap()
}

// ---------------------------------------------------------------------------
// Parsing of the scalar grammar: sums of `c*v^k` monomials, parenthesized
// expressions, and `num/den` fractions. `q` is accepted as an alias for `v`.
// ---------------------------------------------------------------------------

struct Tokens<'a> {
    input: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl<'a> Tokens<'a> {
    fn new(s: &'a str) -> Self {
        Tokens {
            input: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&mut self) -> Result<Option<Tok>> {
        let save = self.pos;
        let t = self.next_tok()?;
        self.pos = save;
        Ok(t)
    }

    fn next_tok(&mut self) -> Result<Option<Tok>> {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.input.len() {
            return Ok(None);
        }
        let c = self.input[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'v' | b'q' => {
                self.pos += 1;
                Tok::Var
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                let n: BigInt = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
                Tok::Num(BigRational::from_integer(n))
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {:?}",
                    other as char
                )))
            }
        };
        Ok(Some(tok))
    }
}

fn parse_expr(toks: &mut Tokens) -> Result<RatScalar> {
    let mut acc = parse_term(toks)?;
    loop {
        match toks.peek()? {
            Some(Tok::Plus) => {
                toks.next_tok()?;
                let t = parse_term(toks)?;
                acc = acc.add_ref(&t);
            }
            Some(Tok::Minus) => {
                toks.next_tok()?;
                let t = parse_term(toks)?;
                acc = acc.sub_ref(&t);
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(toks: &mut Tokens) -> Result<RatScalar> {
    let mut acc = parse_factor(toks)?;
    loop {
        match toks.peek()? {
            Some(Tok::Star) => {
                toks.next_tok()?;
                let t = parse_factor(toks)?;
                acc = acc.mul_ref(&t);
            }
            Some(Tok::Slash) => {
                toks.next_tok()?;
                let t = parse_factor(toks)?;
                acc = acc.div_ref(&t)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_factor(toks: &mut Tokens) -> Result<RatScalar> {
    let mut neg = false;
    while let Some(Tok::Minus) = toks.peek()? {
        toks.next_tok()?;
        neg = !neg;
    }
    let base = match toks.next_tok()? {
        Some(Tok::Num(n)) => RatScalar::from_poly(LaurentPoly::constant(n)),
        Some(Tok::Var) => RatScalar::v_pow(1),
        Some(Tok::LParen) => {
            let inner = parse_expr(toks)?;
            match toks.next_tok()? {
                Some(Tok::RParen) => inner,
                _ => return Err(Error::Parse("expected ')'".into())),
            }
        }
        other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
    };
    let base = match toks.peek()? {
        Some(Tok::Caret) => {
            toks.next_tok()?;
            let mut eneg = false;
            if let Some(Tok::Minus) = toks.peek()? {
                toks.next_tok()?;
                eneg = true;
            }
            let e = match toks.next_tok()? {
                Some(Tok::Num(n)) if n.denom().is_one() => {
                    let e: i64 = n
                        .numer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    if eneg {
                        -e
                    } else {
                        e
                    }
                }
                other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
            };
            pow_scalar(&base, e)?
        }
        _ => base,
    };
    Ok(if neg { base.neg_ref() } else { base })
}

fn pow_scalar(base: &RatScalar, e: i64) -> Result<RatScalar> {
    let mut acc = RatScalar::one();
    let b = if e < 0 { base.inv()? } else { base.clone() };
    for _ in 0..e.unsigned_abs() {
        acc = acc.mul_ref(&b);
    }
    Ok(acc)
}

/// Parse the scalar grammar produced by `Display`.
pub fn parse_scalar(s: &str) -> Result<RatScalar> {
    let mut toks = Tokens::new(s);
    let r = parse_expr(&mut toks)?;
    if toks.peek()?.is_some() {
        return Err(Error::Parse(format!("trailing input in scalar {s:?}")));
    }
    Ok(r)
}

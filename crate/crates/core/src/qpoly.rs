//! The queer polynomial superalgebra on `n` even and `n` odd generators:
//! normal-ordered monomial basis, multiplication with the odd-square
//! deformation `Xb_i^2 = (v - v^-1)/(v + v^-1) * X_i^2`, and conversion
//! between monomial and divided-power coordinates.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{odd_square_scalar, qfact, RatScalar};
use crate::error::{Error, Result};
use crate::matidx::SuperIndex;

/// Coordinate system for the coefficients of an element: the plain monomial
/// basis `X^a`, or the divided-power basis `X^[a] = X^a / ([a_1]!...[a_n]!)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coords {
    Monomial,
    Divided,
}

/// A sparse linear combination of normal-ordered basis monomials, indexed by
/// reduced super multi-indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPolyElement {
    n: usize,
    terms: BTreeMap<SuperIndex, RatScalar>,
}

impl QPolyElement {
    pub fn zero(n: usize) -> Self {
        QPolyElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(SuperIndex::zero(n), RatScalar::one())
    }

    /// A single basis monomial with the given reduced index.
    pub fn monomial(idx: SuperIndex, coeff: RatScalar) -> Self {
        assert!(idx.is_reduced(), "basis keys must be reduced");
        let n = idx.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(idx, coeff);
        }
        QPolyElement { n, terms }
    }

    /// Build `coeff * X^idx` where `idx` may carry odd exponents >= 2; the
    /// odd squares reduce to even squares with the deformation scalar and no
    /// sign (equal odd factors are adjacent in the canonical word order).
    pub fn from_unreduced(idx: &SuperIndex, coeff: RatScalar) -> Self {
        let n = idx.n();
        let mut c = coeff;
        let mut out = SuperIndex::zero(n);
        let osc = odd_square_scalar();
        for i in 0..n {
            out.even[i] = idx.even[i];
            let m = idx.odd[i];
            let squares = m / 2;
            for _ in 0..squares {
                c = c.mul_ref(&osc);
            }
            out.even[i] += 2 * squares;
            out.odd[i] = m % 2;
        }
        Self::monomial(out, c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperIndex, &RatScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, idx: &SuperIndex) -> RatScalar {
        self.terms.get(idx).cloned().unwrap_or_else(RatScalar::zero)
    }

    pub fn add_term(&mut self, idx: SuperIndex, coeff: &RatScalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add_ref(coeff);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c);
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), &c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &RatScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        QPolyElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    /// Parity of a homogeneous element; None for 0 or mixed parities.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|k| k.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Degree of a homogeneous element; None for 0 or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|k| k.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Multiply two basis monomials, returning the normal-ordered result.
    fn mul_monomials(n: usize, a: &SuperIndex, b: &SuperIndex) -> (RatScalar, SuperIndex) {
        // Sign: inversions between the odd block of `a` and the odd block
        // of `b` (odd generator at slot i of `a` crossing slot j < i of `b`).
        let mut inversions = 0u32;
        for i in 0..n {
            if a.odd[i] == 0 {
                continue;
            }
            for j in 0..i {
                inversions += a.odd[i] * b.odd[j];
            }
        }
        let mut coeff = if inversions % 2 == 1 {
            RatScalar::from_int(-1)
        } else {
            RatScalar::one()
        };
        let osc = odd_square_scalar();
        let mut out = SuperIndex::zero(n);
        for i in 0..n {
            let m = a.odd[i] + b.odd[i];
            if m >= 2 {
                coeff = coeff.mul_ref(&osc);
            }
            out.even[i] = a.even[i] + b.even[i] + 2 * (m / 2);
            out.odd[i] = m % 2;
        }
        (coeff, out)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let (sc, idx) = Self::mul_monomials(self.n, ka, kb);
                out.add_term(idx, &ca.mul_ref(cb).mul_ref(&sc));
            }
        }
        out
    }

    /// Rescale coefficients between the monomial basis and the divided
    /// basis. Keys are reduced, so only even exponents carry factorials:
    /// a coefficient on `X^[a]` becomes `coeff / prod_i [a_i]!` on `X^a`.
    pub fn convert(&self, from: Coords, to: Coords) -> Self {
        if from == to {
            return self.clone();
        }
        let mut out = Self::zero(self.n);
        for (idx, c) in &self.terms {
            let mut f = RatScalar::one();
            for &e in &idx.even {
                f = f.mul_ref(&RatScalar::from_poly(qfact(e)));
            }
            let c2 = match to {
                // X^[a] = X^a / prod [a_i]! : divided coefficients pick up
                // the factorial.
                Coords::Monomial => c.div_ref(&f).expect("factorial nonzero"),
                Coords::Divided => c.mul_ref(&f),
            };
            out.add_term(idx.clone(), &c2);
        }
        out
    }
}

/// Normal-order a word in the generators, given as positions in `1..=2n`
/// (even generators first). The result is expressed in the canonical basis.
pub fn normal_order(n: usize, word: &[usize]) -> QPolyElement {
    let mut even = vec![0u32; n];
    let mut odd_seq = Vec::new();
    for &p in word {
        assert!((1..=2 * n).contains(&p), "generator position out of range");
        if p <= n {
            even[p - 1] += 1;
        } else {
            odd_seq.push(p - n - 1); // 0-based odd slot
        }
    }
    // Sign of the stable sort of the odd subword: strict inversions only,
    // since equal odd generators are never interchanged.
    let mut inversions = 0usize;
    for s in 0..odd_seq.len() {
        for t in (s + 1)..odd_seq.len() {
            if odd_seq[s] > odd_seq[t] {
                inversions += 1;
            }
        }
    }
    let mut idx = SuperIndex::zero(n);
    idx.even = even;
    for &slot in &odd_seq {
        idx.odd[slot] += 1;
    }
    let sign = if inversions % 2 == 1 {
        RatScalar::from_int(-1)
    } else {
        RatScalar::one()
    };
    QPolyElement::from_unreduced(&idx, sign)
}

/// Normal-order the full monomial word of a possibly-unreduced column index
/// and express it in the divided basis: returns `(coeff, b)` with
/// `X^[c] = coeff * X^[b]` and `b` reduced.
pub fn column_divided_normal(c: &SuperIndex) -> (RatScalar, SuperIndex) {
    // X^[c] = X^c / (prod_i [c_i^0]! * prod_i [c_i^1]!)
    let mut den = RatScalar::one();
    for &e in &c.even {
        den = den.mul_ref(&RatScalar::from_poly(qfact(e)));
    }
    for &e in &c.odd {
        den = den.mul_ref(&RatScalar::from_poly(qfact(e)));
    }
    let reduced = QPolyElement::from_unreduced(c, RatScalar::one());
    debug_assert_eq!(reduced.num_terms(), 1);
    let (b, gamma) = reduced.terms.iter().next().expect("single term");
    let mut num = gamma.clone();
    for &e in &b.even {
        num = num.mul_ref(&RatScalar::from_poly(qfact(e)));
    }
    (num.div_ref(&den).expect("factorials nonzero"), b.clone())
}

/// Render a basis index as `X1^2*Xb1` style text.
pub fn format_index(idx: &SuperIndex) -> String {
    let mut parts = Vec::new();
    for (i, &e) in idx.even.iter().enumerate() {
        if e == 1 {
            parts.push(format!("X{}", i + 1));
        } else if e > 1 {
            parts.push(format!("X{}^{}", i + 1, e));
        }
    }
    for (i, &e) in idx.odd.iter().enumerate() {
        if e == 1 {
            parts.push(format!("Xb{}", i + 1));
        } else if e > 1 {
            parts.push(format!("Xb{}^{}", i + 1, e));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Parse `X1^2*Xb1` style text into a super multi-index with `n` slots.
pub fn parse_index(n: usize, s: &str) -> Result<SuperIndex> {
    let mut idx = SuperIndex::zero(n);
    let s = s.trim();
    if s == "1" {
        return Ok(idx);
    }
    for part in s.split('*') {
        let part = part.trim();
        let rest = part
            .strip_prefix("Xb")
            .map(|r| (true, r))
            .or_else(|| part.strip_prefix('X').map(|r| (false, r)));
        let (odd, rest) = rest.ok_or_else(|| Error::Parse(format!("bad factor {part:?}")))?;
        let (digits, exp) = match rest.split_once('^') {
            Some((d, e)) => (d, e),
            None => (rest, "1"),
        };
        let i: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad index in {part:?}")))?;
        let e: u32 = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?;
        if i == 0 || i > n {
            return Err(Error::Parse(format!("index {i} out of range 1..={n}")));
        }
        if odd {
            idx.odd[i - 1] += e;
        } else {
            idx.even[i - 1] += e;
        }
    }
    Ok(idx)
}

impl fmt::Display for QPolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}", c, format_index(k))?;
        }
        Ok(())
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct QPolyTermRepr {
    monomial: String,
    coeff: String,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct QPolyRepr {
    n: usize,
    terms: Vec<QPolyTermRepr>,
}

impl serde::Serialize for QPolyElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| QPolyTermRepr {
                    monomial: format_index(k),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for QPolyElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = QPolyRepr::deserialize(d)?;
        let mut out = QPolyElement::zero(repr.n);
        for t in repr.terms {
            let idx = parse_index(repr.n, &t.monomial).map_err(D::Error::custom)?;
            if !idx.is_reduced() {
                return Err(D::Error::custom("keys must be reduced"));
            }
            let c = crate::coeff::parse_scalar(&t.coeff).map_err(D::Error::custom)?;
            out.add_term(idx, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_scalar;
    use num::Zero;
    use proptest::prelude::*;

    fn x(n: usize, p: usize) -> QPolyElement {
        normal_order(n, &[p])
    }

    #[test]
    fn normal_order_examples() {
        // Xb2 * Xb1 = -Xb1 Xb2
        let w = normal_order(2, &[4, 3]);
        let mut idx = SuperIndex::zero(2);
        idx.odd = vec![1, 1];
        assert_eq!(w, QPolyElement::monomial(idx, RatScalar::from_int(-1)));

        // Xb1 * Xb1 = ((v-v^-1)/(v+v^-1)) X1^2
        let sq = normal_order(2, &[3, 3]);
        let mut idx2 = SuperIndex::zero(2);
        idx2.even = vec![2, 0];
        assert_eq!(sq, QPolyElement::monomial(idx2, odd_square_scalar()));

        // X1 * Xb1 is already ordered.
        let m = normal_order(2, &[1, 3]);
        let mut idx3 = SuperIndex::zero(2);
        idx3.even = vec![1, 0];
        idx3.odd = vec![1, 0];
        assert_eq!(m, QPolyElement::monomial(idx3, RatScalar::one()));
    }

    #[test]
    fn product_examples() {
        let n = 2;
        let one = QPolyElement::one(n);
        let b = normal_order(n, &[3, 4, 1]);
        assert_eq!(one.mul_ref(&b), b);

        // (Xb1 Xb2) * Xb1 reduces one odd square:
        // Xb1 Xb2 Xb1 = -Xb1 Xb1 Xb2 = -c X1^2 Xb2.
        let left = normal_order(n, &[3, 4]);
        let right = x(n, 3);
        let prod = left.mul_ref(&right);
        let expect = normal_order(n, &[3, 4, 3]);
        assert_eq!(prod, expect);
        let mut idx = SuperIndex::zero(2);
        idx.even = vec![2, 0];
        idx.odd = vec![0, 1];
        assert_eq!(
            prod,
            QPolyElement::monomial(idx, odd_square_scalar().neg_ref())
        );
    }

    #[test]
    fn supercommutativity_on_monomials() {
        // The Koszul sign rule holds between monomials with disjoint odd
        // support; a shared odd variable instead produces a deformed square.
        let n = 3;
        let pairs: [(&[usize], &[usize]); 5] = [
            (&[4], &[5]),
            (&[4, 5], &[6]),
            (&[1, 4], &[2, 5, 6]),
            (&[4, 1, 1], &[5, 6, 2]),
            (&[1, 2], &[4, 5, 6]),
        ];
        for (wa, wb) in pairs {
            let a = normal_order(n, wa);
            let b = normal_order(n, wb);
            let pa = a.parity().unwrap() as i32;
            let pb = b.parity().unwrap() as i32;
            let lhs = a.mul_ref(&b);
            let rhs = b.mul_ref(&a);
            let rhs = if pa * pb % 2 == 1 {
                rhs.scale(&RatScalar::from_int(-1))
            } else {
                rhs
            };
            assert_eq!(lhs, rhs, "words {wa:?} {wb:?}");
        }
        // Shared odd variable: the sign picks up one extra factor per
        // shared slot.
        let a = normal_order(n, &[4]);
        let prod = a.mul_ref(&a);
        assert_eq!(prod, normal_order(n, &[4, 4]));
        assert!(!prod.is_zero());
    }

    #[test]
    fn associativity_exhaustive_generators_n2() {
        let n = 2;
        for p in 1..=2 * n {
            for q in 1..=2 * n {
                for r in 1..=2 * n {
                    let a = x(n, p);
                    let b = x(n, q);
                    let c = x(n, r);
                    assert_eq!(
                        a.mul_ref(&b).mul_ref(&c),
                        a.mul_ref(&b.mul_ref(&c)),
                        "generators {p} {q} {r}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn associativity_random_words_n3(
            wa in proptest::collection::vec(1usize..=6, 0..4),
            wb in proptest::collection::vec(1usize..=6, 0..4),
            wc in proptest::collection::vec(1usize..=6, 0..4),
        ) {
            let n = 3;
            let a = normal_order(n, &wa);
            let b = normal_order(n, &wb);
            let c = normal_order(n, &wc);
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        }

        #[test]
        fn gradings_multiplicative(
            wa in proptest::collection::vec(1usize..=6, 0..5),
            wb in proptest::collection::vec(1usize..=6, 0..5),
        ) {
            let n = 3;
            let a = normal_order(n, &wa);
            let b = normal_order(n, &wb);
            let ab = a.mul_ref(&b);
            prop_assert_eq!(ab.parity(), Some(((wa.iter().filter(|&&p| p > n).count()
                + wb.iter().filter(|&&p| p > n).count()) % 2) as u8));
            prop_assert_eq!(ab.degree(), Some((wa.len() + wb.len()) as u32));
        }
    }

    #[test]
    fn odd_square_vanishes_at_v1() {
        let sq = normal_order(1, &[2, 2]);
        let (_, c) = sq.terms().next().unwrap();
        assert!(c.specialize_v1().unwrap().is_zero());
    }

    #[test]
    fn divided_conversion() {
        // A reduced index with all even exponents <= 1 is unchanged.
        let m = normal_order(2, &[1, 3]);
        assert_eq!(m.convert(Coords::Divided, Coords::Monomial), m);

        // X^[2e_1] = (1/[2]) X^{2e_1}.
        let mut idx = SuperIndex::zero(1);
        idx.even = vec![2];
        let divided = QPolyElement::monomial(idx.clone(), RatScalar::one());
        let monomial = divided.convert(Coords::Divided, Coords::Monomial);
        let expect = QPolyElement::monomial(
            idx,
            RatScalar::from_poly(crate::coeff::qint(2)).inv().unwrap(),
        );
        assert_eq!(monomial, expect);
    }

    proptest! {
        #[test]
        fn divided_round_trip(word in proptest::collection::vec(1usize..=4, 0..6)) {
            let e = normal_order(2, &word).scale(&parse_scalar("v^2 - 3").unwrap());
            let back = e
                .convert(Coords::Monomial, Coords::Divided)
                .convert(Coords::Divided, Coords::Monomial);
            prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn column_normal_matches_binomial_factor() {
        // Single column with odd exponent 2 at slot 1 over even exponent a:
        // the divided-basis constant is c * [a+2 over 2].
        for a in 0..4u32 {
            let mut c = SuperIndex::zero(1);
            c.even = vec![a];
            c.odd = vec![2];
            let (sc, b) = column_divided_normal(&c);
            let mut expect_idx = SuperIndex::zero(1);
            expect_idx.even = vec![a + 2];
            assert_eq!(b, expect_idx);
            let expect = odd_square_scalar()
                .mul_ref(&RatScalar::from_poly(crate::coeff::qbinom(a as i64 + 2, 2)));
            assert_eq!(sc, expect, "a = {a}");
        }
    }

    #[test]
    fn index_text_round_trip() {
        let mut idx = SuperIndex::zero(3);
        idx.even = vec![2, 0, 1];
        idx.odd = vec![1, 0, 1];
        let s = format_index(&idx);
        assert_eq!(s, "X1^2*X3*Xb1*Xb3");
        assert_eq!(parse_index(3, &s).unwrap(), idx);
        assert_eq!(parse_index(2, "1").unwrap(), SuperIndex::zero(2));
    }
}

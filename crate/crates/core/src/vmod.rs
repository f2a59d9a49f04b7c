//! The formal-series module spanned by the symbols `A(j)`: generator
//! actions with their difference terms and `j`-shifts, the closure rewrite
//! for odd entries reaching 2, truncation into the tensor module, and
//! leading-term extraction for the triangularity of the monomial basis
//! action.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{qint, LaurentPoly, RatScalar};
use crate::error::{Error, Result};
use crate::matidx::{total_cmp, SuperMatrix};
use crate::tensormod::{
    odd_sign_prefix, sigma_e_minus, sigma_e_plus, sigma_f_minus, sigma_f_plus, sigma_k_minus,
    sigma_k_plus, TensorElement,
};
use crate::uword::{derived_word, evaluate, GenKind, GenSymbol, GeneratorWord, Representation};

/// Key of a formal-series term: a primed matrix together with the integer
/// exponent vector of the series weights.
pub type VKey = (SuperMatrix, Vec<i64>);

/// A sparse linear combination of the series symbols. Canonical keys are
/// primed and reduced; odd entries may reach 2 transiently inside an action
/// and are rewritten away by `reduce_close`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VElement {
    n: usize,
    terms: BTreeMap<VKey, RatScalar>,
}

impl VElement {
    pub fn zero(n: usize) -> Self {
        VElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The single symbol `A(jvec)`. The matrix must be primed; reducedness
    /// is required for canonical elements.
    pub fn symbol(a: SuperMatrix, jvec: Vec<i64>, coeff: RatScalar) -> Self {
        assert!(a.is_primed(), "series symbols use primed matrices");
        assert_eq!(jvec.len(), a.n());
        let n = a.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((a, jvec), coeff);
        }
        VElement { n, terms }
    }

    /// The cyclic vector: the zero matrix with `j = 0`.
    pub fn cyclic(n: usize) -> Self {
        Self::symbol(SuperMatrix::zero(n), vec![0; n], RatScalar::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VKey, &RatScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &VKey) -> RatScalar {
        self.terms.get(key).cloned().unwrap_or_else(RatScalar::zero)
    }

    pub fn add_term(&mut self, key: VKey, coeff: &RatScalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), &c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &RatScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        VElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.clone(), x.mul_ref(c)))
                .collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(|(a, _)| a.is_reduced())
    }

    /// The term whose matrix is maximal under the flattening pre-order,
    /// ties broken by the even diagonal and then the exponent vector.
    pub fn leading_term(&self) -> Result<(SuperMatrix, Vec<i64>, RatScalar)> {
        let best = self
            .terms
            .iter()
            .max_by(|(ka, _), (kb, _)| total_cmp(&ka.0, &kb.0).then_with(|| ka.1.cmp(&kb.1)))
            .ok_or(Error::ZeroElement)?;
        Ok((best.0 .0.clone(), best.0 .1.clone(), best.1.clone()))
    }

    /// Expand into the tensor module, keeping total degree at most `rmax`.
    pub fn truncate(&self, rmax: u32) -> TensorElement {
        let n = self.n;
        let mut out = TensorElement::zero(n);
        for ((a, jvec), coeff) in &self.terms {
            let base = a.degree();
            if base > rmax {
                continue;
            }
            for lam in lambdas_up_to(n, rmax - base) {
                let exp: i64 = lam
                    .iter()
                    .zip(jvec.iter())
                    .map(|(&l, &j)| l as i64 * j)
                    .sum();
                let key = a.add_diag(&lam);
                out.add_term(key, &coeff.mul_ref(&RatScalar::v_pow(exp)));
            }
        }
        out
    }
}

fn lambdas_up_to(n: usize, max_total: u32) -> Vec<Vec<u32>> {
    (0..=max_total)
        .flat_map(|r| crate::matidx::weights(n, r))
        .collect()
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, j), c)| format!("({}) {}({:?})", c, a, j))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct VTermRepr {
    matrix: SuperMatrix,
    j: Vec<i64>,
    coeff: String,
}

impl serde::Serialize for VElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<VTermRepr> = self
            .terms
            .iter()
            .map(|((a, j), c)| VTermRepr {
                matrix: a.clone(),
                j: j.clone(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

/// Deserialize from the term-list form; the rank is inferred from the first
/// matrix. An empty list has no rank, so callers parse it through
/// `VElement::from_terms` instead when they know `n`.
impl<'de> serde::Deserialize<'de> for VElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<VTermRepr>::deserialize(d)?;
        let n = terms
            .first()
            .map(|t| t.matrix.n())
            .ok_or_else(|| D::Error::custom("empty element carries no rank; supply n"))?;
        let mut out = VElement::zero(n);
        for t in terms {
            if t.matrix.n() != n || t.j.len() != n {
                return Err(D::Error::custom("inconsistent sizes in element"));
            }
            if !t.matrix.is_primed() || !t.matrix.is_reduced() {
                return Err(D::Error::custom("series keys must be primed and reduced"));
            }
            let c = crate::coeff::parse_scalar(&t.coeff).map_err(D::Error::custom)?;
            out.add_term((t.matrix, t.j), &c);
        }
        Ok(out)
    }
}

fn q(c: u32) -> RatScalar {
    RatScalar::from_poly(qint(c as i64))
}

fn shift_j(jvec: &[i64], deltas: &[(usize, i64)]) -> Vec<i64> {
    let mut out = jvec.to_vec();
    for &(i, d) in deltas {
        out[i - 1] += d;
    }
    out
}

/// `1 / (v - v^-1)`.
fn inv_vminus() -> RatScalar {
    RatScalar::from_poly(LaurentPoly::v_pow(1).sub_ref(&LaurentPoly::v_pow(-1)))
        .inv()
        .expect("nonzero")
}

/// Rewrite all keys with an odd entry equal to 2 into canonical form: the
/// off-diagonal rule moves the square into the even part with the deformed
/// binomial factor, the diagonal rule produces the three-term `j`-shift
/// combination.
pub fn reduce_close(x: &VElement) -> VElement {
    let n = x.n();
    let mut pending: Vec<(VKey, RatScalar)> =
        x.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    let mut out = VElement::zero(n);
    let osc = crate::coeff::odd_square_scalar();
    while let Some(((a, jvec), coeff)) = pending.pop() {
        let bad = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .find(|&(i, j)| a.odd(i, j) >= 2);
        let Some((i, j)) = bad else {
            out.add_term((a, jvec), &coeff);
            continue;
        };
        debug_assert_eq!(a.odd(i, j), 2, "actions raise odd entries by at most 1");
        if i != j {
            // (A^0 | A^1 + E_ij) with entry now 2 rewrites to
            // c * [a0_ij + 2 over 2] (A^0 + 2E_ij | A^1 - E_ij)(j).
            let binom = RatScalar::from_poly(crate::coeff::qbinom(a.even(i, j) as i64 + 2, 2));
            let b = a
                .bump_even(i, j, 2)
                .and_then(|m| m.bump_odd(i, j, -2))
                .expect("entries stay nonnegative");
            pending.push(((b, jvec), coeff.mul_ref(&osc).mul_ref(&binom)));
        } else {
            // Diagonal square: f_j (v^-1 A'(j + 2e_i) + v A'(j - 2e_i)
            // - (v + v^-1) A'(j)) with
            // f_j = v^{-2 j_i} / ((v - v^-1)(v + v^-1)^2),
            // the constant the series manipulation actually produces (and
            // the one the tensor-side oracle confirms).
            let ji = jvec[i - 1];
            let vminus = LaurentPoly::v_pow(1).sub_ref(&LaurentPoly::v_pow(-1));
            let vplus = LaurentPoly::v_pow(1).add_ref(&LaurentPoly::v_pow(-1));
            let den = vminus.mul_ref(&vplus).mul_ref(&vplus);
            let f = RatScalar::new(LaurentPoly::v_pow(-2 * ji), den).expect("nonzero");
            let aprime = a.bump_odd(i, i, -2).expect("entry is 2");
            let c = coeff.mul_ref(&f);
            pending.push((
                (aprime.clone(), shift_j(&jvec, &[(i, 2)])),
                c.mul_ref(&RatScalar::v_pow(-1)),
            ));
            pending.push((
                (aprime.clone(), shift_j(&jvec, &[(i, -2)])),
                c.mul_ref(&RatScalar::v_pow(1)),
            ));
            pending.push((
                (aprime, jvec),
                c.mul_ref(&RatScalar::from_poly(vplus)).neg_ref(),
            ));
        }
    }
    out
}

/// Action of one generator on a single symbol, before closure.
fn act_symbol(kind: GenKind, index: usize, a: &SuperMatrix, jvec: &[i64]) -> VElement {
    let n = a.n();
    let mut out = VElement::zero(n);
    let mut add = |mat: Option<SuperMatrix>, jv: Vec<i64>, coeff: RatScalar| {
        if let Some(m) = mat {
            if !coeff.is_zero() {
                let mut t = VElement::zero(n);
                t.add_term((m, jv), &coeff);
                out = out.add_ref(&t);
            }
        }
    };
    match kind {
        GenKind::K => {
            let row: i64 = (1..=n)
                .map(|t| (a.even(index, t) + a.odd(index, t)) as i64)
                .sum();
            add(
                Some(a.clone()),
                shift_j(jvec, &[(index, 1)]),
                RatScalar::v_pow(row),
            );
        }
        GenKind::KInv => {
            let row: i64 = (1..=n)
                .map(|t| (a.even(index, t) + a.odd(index, t)) as i64)
                .sum();
            add(
                Some(a.clone()),
                shift_j(jvec, &[(index, -1)]),
                RatScalar::v_pow(-row),
            );
        }
        GenKind::E => {
            let h = index;
            // Even half.
            for j in 1..h {
                if a.even(h + 1, j) > 0 {
                    add(
                        a.bump_even(h, j, 1).and_then(|m| m.bump_even(h + 1, j, -1)),
                        shift_j(jvec, &[(h, -1), (h + 1, 1)]),
                        RatScalar::v_pow(sigma_e_plus(h, j, a)).mul_ref(&q(a.even(h, j) + 1)),
                    );
                }
            }
            if a.even(h + 1, h) > 0 {
                let c =
                    RatScalar::v_pow(sigma_e_plus(h, h, a) - jvec[h - 1]).mul_ref(&inv_vminus());
                let m = a.bump_even(h + 1, h, -1);
                add(m.clone(), shift_j(jvec, &[(h, 1), (h + 1, 1)]), c.clone());
                add(m, shift_j(jvec, &[(h, -1), (h + 1, 1)]), c.neg_ref());
            }
            add(
                a.bump_even(h, h + 1, 1),
                jvec.to_vec(),
                RatScalar::v_pow(sigma_e_plus(h, h + 1, a) + jvec[h])
                    .mul_ref(&q(a.even(h, h + 1) + 1)),
            );
            for j in (h + 2)..=n {
                if a.even(h + 1, j) > 0 {
                    add(
                        a.bump_even(h, j, 1).and_then(|m| m.bump_even(h + 1, j, -1)),
                        jvec.to_vec(),
                        RatScalar::v_pow(sigma_e_plus(h, j, a)).mul_ref(&q(a.even(h, j) + 1)),
                    );
                }
            }
            // Odd half.
            for j in 1..=n {
                if a.odd(h + 1, j) == 0 {
                    continue;
                }
                let jv = if j < h {
                    shift_j(jvec, &[(h, -1), (h + 1, 1)])
                } else if j == h {
                    shift_j(jvec, &[(h + 1, 1)])
                } else if j == h + 1 {
                    shift_j(jvec, &[(h + 1, -1)])
                } else {
                    jvec.to_vec()
                };
                add(
                    a.bump_odd(h, j, 1).and_then(|m| m.bump_odd(h + 1, j, -1)),
                    jv,
                    RatScalar::v_pow(sigma_e_minus(h, j, a)).mul_ref(&q(a.odd(h, j) + 1)),
                );
            }
        }
        GenKind::F => {
            let h = index;
            // Even half.
            for j in 1..h {
                if a.even(h, j) > 0 {
                    add(
                        a.bump_even(h, j, -1).and_then(|m| m.bump_even(h + 1, j, 1)),
                        jvec.to_vec(),
                        RatScalar::v_pow(sigma_f_plus(h, j, a)).mul_ref(&q(a.even(h + 1, j) + 1)),
                    );
                }
            }
            add(
                a.bump_even(h + 1, h, 1),
                jvec.to_vec(),
                RatScalar::v_pow(sigma_f_plus(h, h, a) + jvec[h - 1])
                    .mul_ref(&q(a.even(h + 1, h) + 1)),
            );
            if a.even(h, h + 1) > 0 {
                let c =
                    RatScalar::v_pow(sigma_f_plus(h, h + 1, a) - jvec[h]).mul_ref(&inv_vminus());
                let m = a.bump_even(h, h + 1, -1);
                add(m.clone(), shift_j(jvec, &[(h, 1), (h + 1, 1)]), c.clone());
                add(m, shift_j(jvec, &[(h, 1), (h + 1, -1)]), c.neg_ref());
            }
            for j in (h + 2)..=n {
                if a.even(h, j) > 0 {
                    add(
                        a.bump_even(h, j, -1).and_then(|m| m.bump_even(h + 1, j, 1)),
                        shift_j(jvec, &[(h, 1), (h + 1, -1)]),
                        RatScalar::v_pow(sigma_f_plus(h, j, a)).mul_ref(&q(a.even(h + 1, j) + 1)),
                    );
                }
            }
            // Odd half.
            for j in 1..=n {
                if a.odd(h, j) == 0 {
                    continue;
                }
                let jv = if j < h {
                    jvec.to_vec()
                } else if j == h || j == h + 1 {
                    shift_j(jvec, &[(h, 1)])
                } else {
                    shift_j(jvec, &[(h, 1), (h + 1, -1)])
                };
                add(
                    a.bump_odd(h, j, -1).and_then(|m| m.bump_odd(h + 1, j, 1)),
                    jv,
                    RatScalar::v_pow(sigma_f_minus(h, j, a)).mul_ref(&q(a.odd(h + 1, j) + 1)),
                );
            }
        }
        GenKind::KBar => {
            assert_eq!(index, 1, "only Kb1 acts directly; use the derived words");
            // Odd-to-even half.
            if a.odd(1, 1) == 1 {
                let c = RatScalar::v_pow(sigma_k_plus(1, a) - jvec[0] + 1).mul_ref(&inv_vminus());
                let m = a.bump_odd(1, 1, -1);
                add(m.clone(), jvec.to_vec(), c.clone());
                add(m, shift_j(jvec, &[(1, -2)]), c.neg_ref());
            }
            for j in 2..=n {
                if a.odd(1, j) == 1 {
                    let sgn = sign_of(odd_sign_prefix(a, j));
                    add(
                        a.bump_even(1, j, 1).and_then(|m| m.bump_odd(1, j, -1)),
                        shift_j(jvec, &[(1, -1)]),
                        sgn.mul_ref(&RatScalar::v_pow(sigma_k_plus(j, a)))
                            .mul_ref(&q(a.even(1, j) + 1)),
                    );
                }
            }
            // Even-to-odd half.
            add(
                a.bump_odd(1, 1, 1),
                jvec.to_vec(),
                RatScalar::v_pow(sigma_k_minus(1, a) + jvec[0]).mul_ref(&q(a.odd(1, 1) + 1)),
            );
            for j in 2..=n {
                if a.even(1, j) > 0 {
                    let sgn = sign_of(odd_sign_prefix(a, j));
                    add(
                        a.bump_even(1, j, -1).and_then(|m| m.bump_odd(1, j, 1)),
                        shift_j(jvec, &[(1, -1)]),
                        sgn.mul_ref(&RatScalar::v_pow(sigma_k_minus(j, a)))
                            .mul_ref(&q(a.odd(1, j) + 1)),
                    );
                }
            }
        }
        _ => unreachable!("derived generators handled by the representation"),
    }
    out
}

fn sign_of(parity: u32) -> RatScalar {
    if parity % 2 == 1 {
        RatScalar::from_int(-1)
    } else {
        RatScalar::one()
    }
}

/// Act by a power-1 generator and restore canonical form.
pub fn act(g: &GenSymbol, x: &VElement) -> VElement {
    let rep = VRep { n: x.n() };
    rep.apply_symbol(g, x)
}

/// The series module as a representation of the generator alphabet.
#[derive(Clone, Copy, Debug)]
pub struct VRep {
    pub n: usize,
}

impl Representation for VRep {
    type Elem = VElement;

    fn zero_elem(&self) -> VElement {
        VElement::zero(self.n)
    }

    fn add(&self, a: &VElement, b: &VElement) -> VElement {
        a.add_ref(b)
    }

    fn scale(&self, a: &VElement, c: &RatScalar) -> VElement {
        a.scale(c)
    }

    fn is_zero(&self, a: &VElement) -> bool {
        a.is_zero()
    }

    fn apply_base(&self, kind: GenKind, index: usize, x: &VElement) -> VElement {
        match kind {
            GenKind::K | GenKind::KInv | GenKind::E | GenKind::F => {
                let mut out = VElement::zero(self.n);
                for ((a, jv), c) in x.terms() {
                    out = out.add_ref(&act_symbol(kind, index, a, jv).scale(c));
                }
                reduce_close(&out)
            }
            GenKind::KBar if index == 1 => {
                let mut out = VElement::zero(self.n);
                for ((a, jv), c) in x.terms() {
                    out = out.add_ref(&act_symbol(kind, index, a, jv).scale(c));
                }
                reduce_close(&out)
            }
            _ => {
                let wc = derived_word(kind, index);
                evaluate(self, &wc, x)
            }
        }
    }
}

/// The image of a monomial word on the cyclic vector.
pub fn monomial_image(a: &SuperMatrix, jvec: &[i64]) -> VElement {
    let w = crate::uword::monomial_word(a, jvec);
    let rep = VRep { n: a.n() };
    rep.apply_word(&w, &VElement::cyclic(a.n()))
}

/// Evaluate an arbitrary word on the cyclic vector.
pub fn word_image(n: usize, w: &GeneratorWord) -> VElement {
    let rep = VRep { n };
    rep.apply_word(w, &VElement::cyclic(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matidx::{enumerate, prec, Prec};
    use crate::tensormod::act_closed as tensor_act;

    fn sym(kind: GenKind, index: usize) -> GenSymbol {
        GenSymbol::new(kind, index, 1)
    }

    #[test]
    fn k_action_shifts_j() {
        let n = 2;
        let a = SuperMatrix::unit_even(n, 1, 2);
        let x = VElement::symbol(a.clone(), vec![0, 0], RatScalar::one());
        let got = act(&sym(GenKind::K, 1), &x);
        let expect = VElement::symbol(a, vec![1, 0], RatScalar::v_pow(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn generator_dictionary_on_cyclic_vector() {
        let n = 2;
        let o = VElement::cyclic(n);
        // E_i -> E_{i,i+1}(0), F_i -> E_{i+1,i}(0), K_i -> O(e_i),
        // Kb1 -> (0 | E_11)(0).
        assert_eq!(
            act(&sym(GenKind::E, 1), &o),
            VElement::symbol(
                SuperMatrix::unit_even(n, 1, 2),
                vec![0, 0],
                RatScalar::one()
            )
        );
        assert_eq!(
            act(&sym(GenKind::F, 1), &o),
            VElement::symbol(
                SuperMatrix::unit_even(n, 2, 1),
                vec![0, 0],
                RatScalar::one()
            )
        );
        assert_eq!(
            act(&sym(GenKind::K, 1), &o),
            VElement::symbol(SuperMatrix::zero(n), vec![1, 0], RatScalar::one())
        );
        assert_eq!(
            act(&sym(GenKind::KBar, 1), &o),
            VElement::symbol(SuperMatrix::unit_odd(n, 1, 1), vec![0, 0], RatScalar::one())
        );
    }

    #[test]
    fn reduce_close_examples() {
        let n = 2;
        // Canonical input is untouched.
        let x = VElement::symbol(SuperMatrix::unit_odd(n, 1, 2), vec![0, 0], RatScalar::one());
        assert_eq!(reduce_close(&x), x);

        // Off-diagonal odd entry 2 at (1,2) over even entry a0.
        for a0 in 0..3u32 {
            let mut m = SuperMatrix::zero(n);
            m.set_odd(1, 2, 2);
            m.set_even(1, 2, a0);
            let mut raw = VElement::zero(n);
            raw.add_term((m, vec![0, 0]), &RatScalar::one());
            let got = reduce_close(&raw);
            let mut key = SuperMatrix::zero(n);
            key.set_even(1, 2, a0 + 2);
            let c = crate::coeff::odd_square_scalar().mul_ref(&RatScalar::from_poly(
                crate::coeff::qbinom(a0 as i64 + 2, 2),
            ));
            assert_eq!(got, VElement::symbol(key, vec![0, 0], c));
        }

        // Diagonal entry 2 at (1,1) with j = 0: the three-term combination
        // f_0 (v^-1 A'(2e_1) + v A'(-2e_1) - (v + v^-1) A'(0)).
        let mut m = SuperMatrix::zero(n);
        m.set_odd(1, 1, 2);
        let mut raw = VElement::zero(n);
        raw.add_term((m, vec![0, 0]), &RatScalar::one());
        let got = reduce_close(&raw);
        let vminus = LaurentPoly::v_pow(1).sub_ref(&LaurentPoly::v_pow(-1));
        let vplus = LaurentPoly::v_pow(1).add_ref(&LaurentPoly::v_pow(-1));
        let f0 =
            RatScalar::new(LaurentPoly::one(), vminus.mul_ref(&vplus).mul_ref(&vplus)).unwrap();
        let zero_mat = SuperMatrix::zero(n);
        let mut expect = VElement::zero(n);
        expect.add_term(
            (zero_mat.clone(), vec![2, 0]),
            &f0.mul_ref(&RatScalar::v_pow(-1)),
        );
        expect.add_term(
            (zero_mat.clone(), vec![-2, 0]),
            &f0.mul_ref(&RatScalar::v_pow(1)),
        );
        expect.add_term(
            (zero_mat, vec![0, 0]),
            &f0.mul_ref(&RatScalar::from_poly(vplus)).neg_ref(),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn truncate_examples() {
        // n = 1: the cyclic vector truncates to the first divided powers.
        let o = VElement::cyclic(1);
        let t0 = o.truncate(0);
        assert_eq!(
            t0,
            TensorElement::basis(SuperMatrix::zero(1), RatScalar::one())
        );
        let t1 = o.truncate(1);
        let mut expect = TensorElement::basis(SuperMatrix::zero(1), RatScalar::one());
        expect.add_term(SuperMatrix::diagonal(&[1]), &RatScalar::one());
        assert_eq!(t1, expect);

        // O(e_1) weights the series by v^{lambda_1}.
        let oe = VElement::symbol(SuperMatrix::zero(1), vec![1], RatScalar::one());
        let t2 = oe.truncate(2);
        let mut expect = TensorElement::basis(SuperMatrix::zero(1), RatScalar::one());
        expect.add_term(SuperMatrix::diagonal(&[1]), &RatScalar::v_pow(1));
        expect.add_term(SuperMatrix::diagonal(&[2]), &RatScalar::v_pow(2));
        assert_eq!(t2, expect);
    }

    #[test]
    fn truncation_equivariance_spot_checks() {
        let n = 2;
        let samples = [
            (SuperMatrix::zero(n), vec![0i64, 0]),
            (SuperMatrix::unit_even(n, 1, 2), vec![0, 0]),
            (SuperMatrix::unit_even(n, 2, 1), vec![1, -1]),
            (SuperMatrix::unit_odd(n, 1, 1), vec![0, 1]),
            (SuperMatrix::unit_odd(n, 2, 2), vec![-1, 0]),
        ];
        let gens = [
            sym(GenKind::K, 1),
            sym(GenKind::K, 2),
            sym(GenKind::E, 1),
            sym(GenKind::F, 1),
            sym(GenKind::KBar, 1),
        ];
        for (a, jv) in &samples {
            let x = VElement::symbol(a.clone(), jv.clone(), RatScalar::one());
            let r = a.degree() + 4;
            for g in &gens {
                let lhs = act(g, &x).truncate(r);
                let rhs = tensor_act(g, &x.truncate(r));
                assert_eq!(lhs, rhs, "generator {g} on {a}({jv:?})");
            }
        }
    }

    #[test]
    fn leading_term_and_monomial_image() {
        let n = 2;
        // Single term.
        let x = VElement::symbol(
            SuperMatrix::unit_even(n, 1, 2),
            vec![0, 0],
            RatScalar::one(),
        );
        let (m, jv, c) = x.leading_term().unwrap();
        assert_eq!(m, SuperMatrix::unit_even(n, 1, 2));
        assert_eq!(jv, vec![0, 0]);
        assert!(c.is_one());

        // A(j) + B(j') with A > B picks A.
        let hi = SuperMatrix::unit_odd(n, 2, 2);
        let lo = SuperMatrix::unit_even(n, 2, 1);
        assert!(matches!(prec(&hi, &lo), Prec::Greater { .. }));
        let mut y = VElement::symbol(hi.clone(), vec![0, 0], RatScalar::v_pow(3));
        y.add_term((lo, vec![1, 1]), &RatScalar::one());
        let (m, _, _) = y.leading_term().unwrap();
        assert_eq!(m, hi);

        assert!(VElement::zero(n).leading_term().is_err());

        // Monomial images of elementary matrices.
        assert_eq!(
            monomial_image(&SuperMatrix::zero(n), &[0, 0]),
            VElement::cyclic(n)
        );
        assert_eq!(
            monomial_image(&SuperMatrix::unit_even(n, 2, 1), &[0, 0]),
            VElement::symbol(
                SuperMatrix::unit_even(n, 2, 1),
                vec![0, 0],
                RatScalar::one()
            )
        );
    }

    #[test]
    fn monomial_images_triangular_small() {
        let n = 2;
        for r in 0..=2u32 {
            for a in enumerate(n, r, true) {
                let img = monomial_image(&a, &[0, 0]);
                let (lead, _, coeff) = img.leading_term().unwrap();
                assert_eq!(lead, a, "leading matrix of the image of {a}");
                assert!(
                    coeff.as_signed_v_power().is_some(),
                    "leading coefficient {coeff} of {a} is a signed power"
                );
                for ((b, _), _) in img.terms() {
                    if b != &a {
                        assert!(
                            matches!(prec(b, &a), Prec::Less { .. }),
                            "lower term {b} under {a}"
                        );
                    }
                }
            }
        }
    }
}

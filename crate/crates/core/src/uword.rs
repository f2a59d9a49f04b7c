//! Words in the generators of the quantum queer supergroup: root vectors,
//! PBW words, monomial words, the anti-involution, the defining relations,
//! and evaluation of word combinations in an arbitrary representation.
//!
//! Equality of words is only ever tested through representations; there is
//! no symbolic normal form at the word level.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{qfact, LaurentPoly, RatScalar};
use crate::error::{Error, Result};
use crate::matidx::SuperMatrix;

/// Generator families. `K`/`KInv` carry plain powers, `E`/`F` carry divided
/// powers, the odd kinds (`KBar`, `EBar`, `FBar`) always have power 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    K,
    KInv,
    KBar,
    E,
    EBar,
    F,
    FBar,
}

impl GenKind {
    pub fn is_odd(self) -> bool {
        matches!(self, GenKind::KBar | GenKind::EBar | GenKind::FBar)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSymbol {
    pub kind: GenKind,
    pub index: usize,
    pub power: u32,
}

impl GenSymbol {
    pub fn new(kind: GenKind, index: usize, power: u32) -> Self {
        if kind.is_odd() {
            assert_eq!(power, 1, "odd generators carry power 1");
        }
        GenSymbol { kind, index, power }
    }

    /// `K_i^e` with arbitrary integer exponent.
    pub fn k_power(index: usize, e: i64) -> Self {
        if e >= 0 {
            GenSymbol::new(GenKind::K, index, e as u32)
        } else {
            GenSymbol::new(GenKind::KInv, index, (-e) as u32)
        }
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::K => {
                if self.power == 1 {
                    write!(f, "K{}", self.index)
                } else {
                    write!(f, "K{}^{}", self.index, self.power)
                }
            }
            GenKind::KInv => write!(f, "K{}^-{}", self.index, self.power),
            GenKind::KBar => write!(f, "Kb{}", self.index),
            GenKind::EBar => write!(f, "Eb{}", self.index),
            GenKind::FBar => write!(f, "Fb{}", self.index),
            GenKind::E => {
                if self.power == 1 {
                    write!(f, "E{}", self.index)
                } else {
                    write!(f, "E{}^({})", self.index, self.power)
                }
            }
            GenKind::F => {
                if self.power == 1 {
                    write!(f, "F{}", self.index)
                } else {
                    write!(f, "F{}^({})", self.index, self.power)
                }
            }
        }
    }
}

/// A product of generator symbols, leftmost factor applied last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GeneratorWord(pub Vec<GenSymbol>);

impl GeneratorWord {
    pub fn empty() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn single(sym: GenSymbol) -> Self {
        if sym.power == 0 {
            Self::empty()
        } else {
            GeneratorWord(vec![sym])
        }
    }

    pub fn push(&mut self, sym: GenSymbol) {
        if sym.power > 0 {
            self.0.push(sym);
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().copied());
        GeneratorWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The ring anti-involution on words: reverse the word and swap
/// `E <-> F`, `Eb <-> Fb`, `K -> K^-1`, `Kb -> Kb`. Coefficient conjugation
/// `v -> v^-1` is a separate map on combinations.
pub fn omega(w: &GeneratorWord) -> GeneratorWord {
    GeneratorWord(
        w.0.iter()
            .rev()
            .map(|s| {
                let kind = match s.kind {
                    GenKind::K => GenKind::KInv,
                    GenKind::KInv => GenKind::K,
                    GenKind::KBar => GenKind::KBar,
                    GenKind::E => GenKind::F,
                    GenKind::F => GenKind::E,
                    GenKind::EBar => GenKind::FBar,
                    GenKind::FBar => GenKind::EBar,
                };
                GenSymbol::new(kind, s.index, s.power)
            })
            .collect(),
    )
}

/// A finite linear combination of generator words over `Q(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordCombination {
    terms: Vec<(RatScalar, GeneratorWord)>,
}

impl WordCombination {
    pub fn zero() -> Self {
        WordCombination { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_word(GeneratorWord::empty())
    }

    pub fn from_word(w: GeneratorWord) -> Self {
        WordCombination {
            terms: vec![(RatScalar::one(), w)],
        }
    }

    pub fn from_symbol(sym: GenSymbol) -> Self {
        Self::from_word(GeneratorWord::single(sym))
    }

    pub fn terms(&self) -> &[(RatScalar, GeneratorWord)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalize(mut self) -> Self {
        let mut map: BTreeMap<GeneratorWord, RatScalar> = BTreeMap::new();
        for (c, w) in self.terms.drain(..) {
            if c.is_zero() {
                continue;
            }
            use std::collections::btree_map::Entry;
            match map.entry(w) {
                Entry::Vacant(e) => {
                    e.insert(c);
                }
                Entry::Occupied(mut e) => {
                    let s = e.get().add_ref(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        WordCombination {
            terms: map.into_iter().map(|(w, c)| (c, w)).collect(),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        WordCombination { terms }.normalize()
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.scale(&RatScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &RatScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        WordCombination {
            terms: self
                .terms
                .iter()
                .map(|(a, w)| (a.mul_ref(c), w.clone()))
                .collect(),
        }
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, wa) in &self.terms {
            for (cb, wb) in &other.terms {
                terms.push((ca.mul_ref(cb), wa.concat(wb)));
            }
        }
        WordCombination { terms }.normalize()
    }

    /// `self^m / [m]!` by repeated multiplication.
    pub fn divided_power(&self, m: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..m {
            acc = acc.mul_ref(self);
        }
        acc.scale(
            &RatScalar::from_poly(qfact(m))
                .inv()
                .expect("factorial nonzero"),
        )
    }

    /// Apply `v -> v^-1` to every coefficient.
    pub fn bar_coefficients(&self) -> Self {
        WordCombination {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.bar(), w.clone()))
                .collect(),
        }
    }
}

/// The full anti-involution on combinations: `omega` on each word together
/// with bar conjugation of each coefficient.
pub fn omega_combination(wc: &WordCombination) -> WordCombination {
    WordCombination {
        terms: wc.terms.iter().map(|(c, w)| (c.bar(), omega(w))).collect(),
    }
}

impl fmt::Display for WordCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| format!("({}) {}", c, w))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// Representations: anything the generators can act on linearly.
// ---------------------------------------------------------------------------

/// A representation of the generator alphabet on a linear space of elements.
/// Divided powers default to `m`-fold application divided by `[m]!`.
pub trait Representation {
    type Elem: Clone + PartialEq;

    fn zero_elem(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &RatScalar) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Action of a single power-1 generator (for `K`/`KInv`, one factor of
    /// `K_i^{±1}`).
    fn apply_base(&self, kind: GenKind, index: usize, x: &Self::Elem) -> Self::Elem;

    fn apply_symbol(&self, g: &GenSymbol, x: &Self::Elem) -> Self::Elem {
        match g.kind {
            GenKind::K | GenKind::KInv => {
                let mut cur = x.clone();
                for _ in 0..g.power {
                    cur = self.apply_base(g.kind, g.index, &cur);
                }
                cur
            }
            GenKind::E | GenKind::F => {
                let mut cur = x.clone();
                for _ in 0..g.power {
                    cur = self.apply_base(g.kind, g.index, &cur);
                }
                if g.power >= 2 {
                    let inv = RatScalar::from_poly(qfact(g.power))
                        .inv()
                        .expect("factorial nonzero");
                    cur = self.scale(&cur, &inv);
                }
                cur
            }
            _ => {
                debug_assert_eq!(g.power, 1);
                self.apply_base(g.kind, g.index, x)
            }
        }
    }

    /// Right-to-left application of a word.
    fn apply_word(&self, w: &GeneratorWord, x: &Self::Elem) -> Self::Elem {
        let mut cur = x.clone();
        for sym in w.0.iter().rev() {
            cur = self.apply_symbol(sym, &cur);
        }
        cur
    }
}

/// Evaluate a word combination on `x` in the given representation.
pub fn evaluate<R: Representation>(rep: &R, wc: &WordCombination, x: &R::Elem) -> R::Elem {
    let mut acc = rep.zero_elem();
    for (c, w) in wc.terms() {
        let y = rep.apply_word(w, x);
        acc = rep.add(&acc, &rep.scale(&y, c));
    }
    acc
}

// ---------------------------------------------------------------------------
// Root vectors, PBW words, monomial words.
// ---------------------------------------------------------------------------

fn wc_sym(kind: GenKind, index: usize, power: u32) -> WordCombination {
    WordCombination::from_symbol(GenSymbol::new(kind, index, power))
}

/// The root vector indexed by `(i, j)`, expanded to a combination of words
/// in the base generators. `odd = false` requires `i != j`; `odd = true`
/// with `i == j` is the odd Cartan generator. The recursion pivot is the
/// neighbor of `j` on the side of `i`, which makes the expansion canonical.
pub fn root_vector(n: usize, i: usize, j: usize, odd: bool) -> WordCombination {
    assert!(i >= 1 && i <= n && j >= 1 && j <= n, "indices in 1..=n");
    if !odd {
        assert_ne!(i, j, "even root vectors need i != j");
        if j == i + 1 {
            return wc_sym(GenKind::E, i, 1);
        }
        if i == j + 1 {
            return wc_sym(GenKind::F, j, 1);
        }
        if i < j {
            let k = j - 1;
            let a = root_vector(n, i, k, false);
            let b = root_vector(n, k, j, false);
            // E_{i,j} = E_{i,k} E_{k,j} - v E_{k,j} E_{i,k}
            a.mul_ref(&b)
                .sub_ref(&b.mul_ref(&a).scale(&RatScalar::v_pow(1)))
        } else {
            let k = j + 1;
            let a = root_vector(n, i, k, false);
            let b = root_vector(n, k, j, false);
            // E_{i,j} = E_{i,k} E_{k,j} - v^-1 E_{k,j} E_{i,k}
            a.mul_ref(&b)
                .sub_ref(&b.mul_ref(&a).scale(&RatScalar::v_pow(-1)))
        }
    } else {
        if i == j {
            return wc_sym(GenKind::KBar, i, 1);
        }
        if j == i + 1 {
            return wc_sym(GenKind::EBar, i, 1);
        }
        if i == j + 1 {
            return wc_sym(GenKind::FBar, j, 1);
        }
        if i < j {
            let k = j - 1;
            let a = root_vector(n, i, k, false);
            let b = root_vector(n, k, j, true);
            // Eb_{i,j} = E_{i,k} Eb_{k,j} - v Eb_{k,j} E_{i,k}
            a.mul_ref(&b)
                .sub_ref(&b.mul_ref(&a).scale(&RatScalar::v_pow(1)))
        } else {
            let k = j + 1;
            let a = root_vector(n, i, k, true);
            let b = root_vector(n, k, j, false);
            // Eb_{i,j} = Eb_{i,k} E_{k,j} - v^-1 E_{k,j} Eb_{i,k}
            a.mul_ref(&b)
                .sub_ref(&b.mul_ref(&a).scale(&RatScalar::v_pow(-1)))
        }
    }
}

fn k_segment(jvec: &[i64]) -> WordCombination {
    let mut w = GeneratorWord::empty();
    for (i, &e) in jvec.iter().enumerate() {
        if e != 0 {
            w.push(GenSymbol::k_power(i + 1, e));
        }
    }
    WordCombination::from_word(w)
}

/// The PBW word for a primed reduced matrix and a `K`-exponent vector:
/// the `K`-segment followed by the `(j^+, j-bar)` segments for columns
/// `n..1` and the `j^-` segments for columns `1..n-1`, each segment ordered
/// per the fixed linear order on root-vector indices.
pub fn pbw_word(a: &SuperMatrix, jvec: &[i64]) -> WordCombination {
    let n = a.n();
    assert!(
        a.is_primed() && a.is_reduced(),
        "PBW words need primed reduced matrices"
    );
    assert_eq!(jvec.len(), n);
    // Simple roots stay single divided-power symbols; composite root vectors
    // expand recursively.
    let rv_divided = |i: usize, j: usize, m: u32| -> WordCombination {
        if j == i + 1 {
            wc_sym(GenKind::E, i, m)
        } else if i == j + 1 {
            wc_sym(GenKind::F, j, m)
        } else {
            root_vector(n, i, j, false).divided_power(m)
        }
    };
    let mut acc = k_segment(jvec);
    for col in (1..=n).rev() {
        // j^+ part: rows col-1 down to 1, divided powers on even root vectors.
        for row in (1..col).rev() {
            let m = a.even(row, col);
            if m > 0 {
                acc = acc.mul_ref(&rv_divided(row, col, m));
            }
        }
        // j-bar part: rows 1..n, odd root vectors with exponent 0 or 1.
        for row in 1..=n {
            if a.odd(row, col) == 1 {
                acc = acc.mul_ref(&root_vector(n, row, col, true));
            }
        }
    }
    for col in 1..n {
        for row in (col + 1)..=n {
            let m = a.even(row, col);
            if m > 0 {
                acc = acc.mul_ref(&rv_divided(row, col, m));
            }
        }
    }
    acc
}

/// The monomial word for a primed reduced matrix: the `K`-segment, then for
/// each column `n, n-1, ..., 1` the odd blocks followed by the even
/// `E`-block with column-sum-corrected exponents, then the even `F`-blocks.
pub fn monomial_word(a: &SuperMatrix, jvec: &[i64]) -> GeneratorWord {
    let n = a.n();
    assert!(
        a.is_primed() && a.is_reduced(),
        "monomial words need primed reduced matrices"
    );
    assert_eq!(jvec.len(), n);
    let mut w = GeneratorWord::empty();
    for (i, &e) in jvec.iter().enumerate() {
        if e != 0 {
            w.push(GenSymbol::k_power(i + 1, e));
        }
    }
    for col in (1..=n).rev() {
        // Odd blocks for rows 1..n: row i contributes F_{i-1}...F_1 Kb1 when
        // the (i, col) odd entry is 1.
        for row in 1..=n {
            if a.odd(row, col) == 1 {
                for k in (1..row).rev() {
                    w.push(GenSymbol::new(GenKind::F, k, 1));
                }
                w.push(GenSymbol::new(GenKind::KBar, 1, 1));
            }
        }
        // Even E-block for column col >= 2: E_k with divided power
        // (partial column sum of A^0) + (odd column sum).
        if col >= 2 {
            let odd_col_sum: u32 = (1..=n).map(|s| a.odd(s, col)).sum();
            let mut partial = 0u32;
            for k in 1..col {
                partial += a.even(k, col);
                let power = partial + odd_col_sum;
                if power > 0 {
                    w.push(GenSymbol::new(GenKind::E, k, power));
                }
            }
        }
    }
    for col in 1..n {
        // F-block: F_{n-1}^{(t_{n-1})} ... F_col^{(t_col)} with
        // t_k = sum of A^0 entries in column col strictly below row k.
        for k in (col..n).rev() {
            let t: u32 = ((k + 1)..=n).map(|s| a.even(s, col)).sum();
            if t > 0 {
                w.push(GenSymbol::new(GenKind::F, k, t));
            }
        }
    }
    w
}

/// Expansion of the derived odd generators into combinations of the base
/// alphabet `{K, K^-1, E, F, Kb1}`:
/// `Eb_h = (Kb_h E_h - v E_h Kb_h) K_h`,
/// `Fb_h = (-Kb_h F_h + v F_h Kb_h) K_h^-1`,
/// `Kb_{i+1} = (K_{i+1}^-1 Kb_i - E_i Fb_i + Fb_i E_i) K_i`.
pub fn derived_word(kind: GenKind, index: usize) -> WordCombination {
    match kind {
        GenKind::KBar => {
            if index == 1 {
                wc_sym(GenKind::KBar, 1, 1)
            } else {
                let i = index - 1;
                let kbi = derived_word(GenKind::KBar, i);
                let fbi = derived_word(GenKind::FBar, i);
                let ei = wc_sym(GenKind::E, i, 1);
                let ki = wc_sym(GenKind::K, i, 1);
                let kinv_next = wc_sym(GenKind::KInv, index, 1);
                kinv_next
                    .mul_ref(&kbi)
                    .sub_ref(&ei.mul_ref(&fbi))
                    .add_ref(&fbi.mul_ref(&ei))
                    .mul_ref(&ki)
            }
        }
        GenKind::EBar => {
            let h = index;
            let kb = derived_word(GenKind::KBar, h);
            let e = wc_sym(GenKind::E, h, 1);
            let k = wc_sym(GenKind::K, h, 1);
            kb.mul_ref(&e)
                .sub_ref(&e.mul_ref(&kb).scale(&RatScalar::v_pow(1)))
                .mul_ref(&k)
        }
        GenKind::FBar => {
            let h = index;
            let kb = derived_word(GenKind::KBar, h);
            let f = wc_sym(GenKind::F, h, 1);
            let kinv = wc_sym(GenKind::KInv, h, 1);
            f.mul_ref(&kb)
                .scale(&RatScalar::v_pow(1))
                .sub_ref(&kb.mul_ref(&f))
                .mul_ref(&kinv)
        }
        _ => panic!("derived_word only applies to odd kinds"),
    }
}

/// The weight idempotent `[K; lambda] = prod_i [K_i; 0 over lambda_i]`,
/// expanded as a combination of `K`-power words. Acting on a weight-`mu`
/// vector it scales by `prod_i [mu_i over lambda_i]`.
pub fn weight_idempotent_word(lambda: &[u32]) -> WordCombination {
    let mut acc = WordCombination::one();
    for (i0, &t) in lambda.iter().enumerate() {
        let i = i0 + 1;
        // Expand prod_{s=1..t} (v^{1-s} K_i - v^{s-1} K_i^-1) / (v^s - v^-s)
        // as a Laurent polynomial in K_i.
        let mut poly: BTreeMap<i64, RatScalar> = BTreeMap::new();
        poly.insert(0, RatScalar::one());
        for s in 1..=t as i64 {
            let den = RatScalar::from_poly(LaurentPoly::v_pow(s).sub_ref(&LaurentPoly::v_pow(-s)));
            let cp = RatScalar::v_pow(1 - s).div_ref(&den).expect("nonzero");
            let cm = RatScalar::v_pow(s - 1).div_ref(&den).expect("nonzero");
            let mut next: BTreeMap<i64, RatScalar> = BTreeMap::new();
            for (e, c) in &poly {
                for (de, cc) in [(1i64, &cp), (-1i64, &cm)] {
                    let coeff = if de == 1 {
                        c.mul_ref(cc)
                    } else {
                        c.mul_ref(cc).neg_ref()
                    };
                    let entry = next.entry(e + de).or_insert_with(RatScalar::zero);
                    *entry = entry.add_ref(&coeff);
                }
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
        let mut factor = WordCombination::zero();
        for (e, c) in &poly {
            let w = GeneratorWord::single(GenSymbol::k_power(i, *e));
            factor = factor.add_ref(&WordCombination::from_word(w).scale(c));
        }
        acc = acc.mul_ref(&factor);
    }
    acc
}

// ---------------------------------------------------------------------------
// Defining relations QQ1-QQ6, as LHS - RHS word combinations.
// ---------------------------------------------------------------------------

/// One named relation instance; `residual` is the left side minus the right
/// side, so the relation holds on `x` exactly when the evaluation is zero.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub residual: WordCombination,
}

fn w(syms: &[(GenKind, usize)]) -> WordCombination {
    let mut word = GeneratorWord::empty();
    for &(kind, idx) in syms {
        word.push(GenSymbol::new(kind, idx, 1));
    }
    WordCombination::from_word(word)
}

fn commutator(a: &[(GenKind, usize)], b: &[(GenKind, usize)]) -> WordCombination {
    let ab: Vec<_> = a.iter().chain(b.iter()).copied().collect();
    let ba: Vec<_> = b.iter().chain(a.iter()).copied().collect();
    w(&ab).sub_ref(&w(&ba))
}

/// The residual of one relation on a module element: zero exactly when
/// the relation holds there.
pub fn relation_residual<R: Representation>(rep: &R, rel: &Relation, x: &R::Elem) -> R::Elem {
    evaluate(rep, &rel.residual, x)
}

/// All instances of the defining relations for rank `n`.
pub fn qq_relations(n: usize) -> Vec<Relation> {
    use GenKind::*;
    let mut out = Vec::new();
    let mut push = |label: String, residual: WordCombination| {
        out.push(Relation { label, residual });
    };
    let vpow = RatScalar::v_pow;
    let vminus = RatScalar::from_poly(LaurentPoly::v_pow(1).sub_ref(&LaurentPoly::v_pow(-1)));
    let v2minus = RatScalar::from_poly(LaurentPoly::v_pow(2).sub_ref(&LaurentPoly::v_pow(-2)));

    // QQ1
    for i in 1..=n {
        push(
            format!("QQ1:KKinv(i={i})"),
            w(&[(K, i), (KInv, i)]).sub_ref(&WordCombination::one()),
        );
        push(
            format!("QQ1:KinvK(i={i})"),
            w(&[(KInv, i), (K, i)]).sub_ref(&WordCombination::one()),
        );
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            push(
                format!("QQ1:KK(i={i},j={j})"),
                commutator(&[(K, i)], &[(K, j)]),
            );
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            push(
                format!("QQ1:KKbar(i={i},j={j})"),
                commutator(&[(K, i)], &[(KBar, j)]),
            );
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let anti = w(&[(KBar, i), (KBar, j)]).add_ref(&w(&[(KBar, j), (KBar, i)]));
            let rhs = if i == j {
                let c = RatScalar::from_int(2).div_ref(&v2minus).unwrap();
                WordCombination::from_word(GeneratorWord(vec![GenSymbol::new(K, i, 2)]))
                    .scale(&c)
                    .sub_ref(
                        &WordCombination::from_word(GeneratorWord(vec![GenSymbol::new(
                            KInv, i, 2,
                        )]))
                        .scale(&c),
                    )
            } else {
                WordCombination::zero()
            };
            push(format!("QQ1:Clifford(i={i},j={j})"), anti.sub_ref(&rhs));
        }
    }

    // QQ2
    for i in 1..=n {
        for j in 1..n {
            let d = (i == j) as i64 - (i == j + 1) as i64;
            push(
                format!("QQ2:KE(i={i},j={j})"),
                w(&[(K, i), (E, j)]).sub_ref(&w(&[(E, j), (K, i)]).scale(&vpow(d))),
            );
            push(
                format!("QQ2:KF(i={i},j={j})"),
                w(&[(K, i), (F, j)]).sub_ref(&w(&[(F, j), (K, i)]).scale(&vpow(-d))),
            );
            push(
                format!("QQ2:KEbar(i={i},j={j})"),
                w(&[(K, i), (EBar, j)]).sub_ref(&w(&[(EBar, j), (K, i)]).scale(&vpow(d))),
            );
            push(
                format!("QQ2:KFbar(i={i},j={j})"),
                w(&[(K, i), (FBar, j)]).sub_ref(&w(&[(FBar, j), (K, i)]).scale(&vpow(-d))),
            );
        }
    }

    // QQ3
    for j in 1..n {
        for i in 1..=n {
            if i != j && i != j + 1 {
                push(
                    format!("QQ3:KbarE(i={i},j={j})"),
                    commutator(&[(KBar, i)], &[(E, j)]),
                );
                push(
                    format!("QQ3:KbarF(i={i},j={j})"),
                    commutator(&[(KBar, i)], &[(F, j)]),
                );
            }
        }
        push(
            format!("QQ3:KbarE-mix(j={j})"),
            w(&[(KBar, j), (E, j)])
                .sub_ref(&w(&[(E, j), (KBar, j)]).scale(&vpow(1)))
                .sub_ref(&w(&[(EBar, j), (KInv, j)])),
        );
        push(
            format!("QQ3:Kbar1E-mix(j={j})"),
            w(&[(KBar, j + 1), (E, j)])
                .scale(&vpow(1))
                .sub_ref(&w(&[(E, j), (KBar, j + 1)]))
                .add_ref(&w(&[(KInv, j + 1), (EBar, j)])),
        );
        push(
            format!("QQ3:KbarF-mix(j={j})"),
            w(&[(KBar, j), (F, j)])
                .sub_ref(&w(&[(F, j), (KBar, j)]).scale(&vpow(1)))
                .add_ref(&w(&[(FBar, j), (K, j)])),
        );
        push(
            format!("QQ3:Kbar1F-mix(j={j})"),
            w(&[(KBar, j + 1), (F, j)])
                .scale(&vpow(1))
                .sub_ref(&w(&[(F, j), (KBar, j + 1)]))
                .sub_ref(&w(&[(K, j + 1), (FBar, j)])),
        );
    }

    // QQ4
    for i in 1..n {
        for j in 1..n {
            let mut res = commutator(&[(E, i)], &[(F, j)]);
            if i == j {
                let c = RatScalar::one().div_ref(&vminus).unwrap();
                let rhs = w(&[(K, i), (KInv, i + 1)])
                    .sub_ref(&w(&[(KInv, i), (K, i + 1)]))
                    .scale(&c);
                res = res.sub_ref(&rhs);
            }
            push(format!("QQ4:EF(i={i},j={j})"), res);

            let mut res = commutator(&[(E, i)], &[(FBar, j)]);
            if i == j {
                let rhs = w(&[(KInv, i + 1), (KBar, i)]).sub_ref(&w(&[(KBar, i + 1), (KInv, i)]));
                res = res.sub_ref(&rhs);
            }
            push(format!("QQ4:EFbar(i={i},j={j})"), res);

            let mut res = commutator(&[(EBar, i)], &[(F, j)]);
            if i == j {
                let rhs = w(&[(K, i + 1), (KBar, i)]).sub_ref(&w(&[(KBar, i + 1), (K, i)]));
                res = res.sub_ref(&rhs);
            }
            push(format!("QQ4:EbarF(i={i},j={j})"), res);
        }
    }

    // QQ5
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                push(
                    format!("QQ5:EE(i={i},j={j})"),
                    commutator(&[(E, i)], &[(E, j)]),
                );
                push(
                    format!("QQ5:FF(i={i},j={j})"),
                    commutator(&[(F, i)], &[(F, j)]),
                );
            }
        }
        push(
            format!("QQ5:EEbar(i={i})"),
            commutator(&[(E, i)], &[(EBar, i)]),
        );
        push(
            format!("QQ5:FFbar(i={i})"),
            commutator(&[(F, i)], &[(FBar, i)]),
        );
        if i + 1 < n {
            push(
                format!("QQ5:Eserre-odd(i={i})"),
                w(&[(E, i), (E, i + 1)])
                    .sub_ref(&w(&[(E, i + 1), (E, i)]).scale(&vpow(1)))
                    .sub_ref(&w(&[(EBar, i), (EBar, i + 1)]))
                    .sub_ref(&w(&[(EBar, i + 1), (EBar, i)]).scale(&vpow(1))),
            );
            push(
                format!("QQ5:Fserre-odd(i={i})"),
                w(&[(F, i + 1), (F, i)])
                    .scale(&vpow(1))
                    .sub_ref(&w(&[(F, i), (F, i + 1)]))
                    .sub_ref(&w(&[(FBar, i), (FBar, i + 1)]))
                    .sub_ref(&w(&[(FBar, i + 1), (FBar, i)]).scale(&vpow(1))),
            );
        }
    }

    // QQ6
    let two = RatScalar::from_poly(crate::coeff::qint(2));
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                continue;
            }
            push(
                format!("QQ6:EEE(i={i},j={j})"),
                w(&[(E, i), (E, i), (E, j)])
                    .sub_ref(&w(&[(E, i), (E, j), (E, i)]).scale(&two))
                    .add_ref(&w(&[(E, j), (E, i), (E, i)])),
            );
            push(
                format!("QQ6:FFF(i={i},j={j})"),
                w(&[(F, i), (F, i), (F, j)])
                    .sub_ref(&w(&[(F, i), (F, j), (F, i)]).scale(&two))
                    .add_ref(&w(&[(F, j), (F, i), (F, i)])),
            );
            push(
                format!("QQ6:EEEbar(i={i},j={j})"),
                w(&[(E, i), (E, i), (EBar, j)])
                    .sub_ref(&w(&[(E, i), (EBar, j), (E, i)]).scale(&two))
                    .add_ref(&w(&[(EBar, j), (E, i), (E, i)])),
            );
            push(
                format!("QQ6:FFFbar(i={i},j={j})"),
                w(&[(F, i), (F, i), (FBar, j)])
                    .sub_ref(&w(&[(F, i), (FBar, j), (F, i)]).scale(&two))
                    .add_ref(&w(&[(FBar, j), (F, i), (F, i)])),
            );
        }
    }

    out
}

// ---------------------------------------------------------------------------
// Word grammar: "E1^(2) F2 Kb1 K1^-1".
// ---------------------------------------------------------------------------

/// Parse a whitespace-separated generator word.
pub fn parse_word(s: &str) -> Result<GeneratorWord> {
    let mut word = GeneratorWord::empty();
    for tok in s.split_whitespace() {
        word.push(parse_symbol(tok)?);
    }
    Ok(word)
}

/// Parse a single symbol like `E1`, `E1^(2)`, `K2^-3`, `Kb1`.
pub fn parse_symbol(tok: &str) -> Result<GenSymbol> {
    let bytes = tok.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty symbol".into()));
    }
    let (kind_even, kind_odd) = match bytes[0] {
        b'E' => (GenKind::E, GenKind::EBar),
        b'F' => (GenKind::F, GenKind::FBar),
        b'K' => (GenKind::K, GenKind::KBar),
        c => return Err(Error::Parse(format!("unknown generator {:?}", c as char))),
    };
    let mut pos = 1;
    let odd = pos < bytes.len() && bytes[pos] == b'b';
    if odd {
        pos += 1;
    }
    let start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if start == pos {
        return Err(Error::Parse(format!("missing index in {tok:?}")));
    }
    let index: usize = tok[start..pos]
        .parse()
        .map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
    let kind = if odd { kind_odd } else { kind_even };
    if pos == bytes.len() {
        return Ok(GenSymbol::new(kind, index, 1));
    }
    if bytes[pos] != b'^' {
        return Err(Error::Parse(format!("unexpected suffix in {tok:?}")));
    }
    pos += 1;
    let rest = &tok[pos..];
    if odd {
        if rest == "1" {
            return Ok(GenSymbol::new(kind, index, 1));
        }
        return Err(Error::Parse(format!(
            "odd generators carry power 1: {tok:?}"
        )));
    }
    match kind {
        GenKind::E | GenKind::F => {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("divided powers are written ^(m): {tok:?}")))?;
            let m: u32 = inner
                .parse()
                .map_err(|_| Error::Parse(format!("bad power in {tok:?}")))?;
            Ok(GenSymbol::new(kind, index, m))
        }
        GenKind::K => {
            let e: i64 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad power in {tok:?}")))?;
            Ok(GenSymbol::k_power(index, e))
        }
        _ => unreachable!(),
    }
}

//! The v-differential operators on the queer polynomial superalgebra, the
//! generator operators assembled from them, the closed-form generator
//! actions, and the executable verification of their commutation relations.

use crate::coeff::{odd_square_scalar, qfact, qint, RatScalar};
use crate::matidx::{super_indices_up_to, SuperIndex};
use crate::qpoly::QPolyElement;
use crate::report::{CheckReport, SuiteReport};
use crate::uword::{GenKind, GenSymbol, Representation};

/// Primitive linear endomorphisms of the polynomial superalgebra. Positions
/// run over `1..=2n` with the odd generators in the upper half.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimOp {
    /// v-differential at a position: lowers the exponent with a quantum
    /// integer coefficient and, at odd positions, a sign over the preceding
    /// odd exponents.
    Partial(usize),
    /// Shifted even differential: `X^a -> [a_i + j] X^{a - e_i}`, zero when
    /// `a_i = 0`.
    PartialShift(usize, u32),
    /// Left multiplication by the generator at a position.
    Chi(usize),
    /// Scaling by `v^{±a_p}`.
    Delta(usize, i8),
    /// Scaling by `(-1)^{a_{bar i}}`.
    SgnBar(usize),
    /// Projection onto the subspace where the odd exponent at slot `i`
    /// equals the given value.
    ProjOdd(usize, u32),
}

impl PrimOp {
    /// Apply to a basis monomial; primitives map basis elements to scalar
    /// multiples of basis elements (or to unreduced indices which reduce to
    /// a single term).
    fn apply(&self, n: usize, a: &SuperIndex) -> QPolyElement {
        let zero = || QPolyElement::zero(n);
        match *self {
            PrimOp::Partial(p) => {
                let e = a.get(p);
                if e == 0 {
                    return zero();
                }
                let mut coeff = RatScalar::from_poly(qint(e as i64));
                if p > n {
                    let slot = p - n;
                    if a.odd_prefix(slot) % 2 == 1 {
                        coeff = coeff.neg_ref();
                    }
                }
                let idx = a.shifted(p, -1).expect("guarded");
                QPolyElement::monomial(idx, coeff)
            }
            PrimOp::PartialShift(i, j) => {
                debug_assert!(i <= n);
                if a.get(i) == 0 {
                    return zero();
                }
                let coeff = RatScalar::from_poly(qint(a.get(i) as i64 + j as i64));
                let idx = a.shifted(i, -1).expect("guarded");
                QPolyElement::monomial(idx, coeff)
            }
            PrimOp::Chi(p) => {
                let mut coeff = RatScalar::one();
                if p > n {
                    let slot = p - n;
                    if a.odd_prefix(slot) % 2 == 1 {
                        coeff = coeff.neg_ref();
                    }
                }
                let idx = a.shifted(p, 1).expect("raising");
                QPolyElement::from_unreduced(&idx, coeff)
            }
            PrimOp::Delta(p, sign) => {
                let e = a.get(p) as i64;
                QPolyElement::monomial(a.clone(), RatScalar::v_pow(sign as i64 * e))
            }
            PrimOp::SgnBar(i) => {
                let c = if a.odd[i - 1] % 2 == 1 {
                    RatScalar::from_int(-1)
                } else {
                    RatScalar::one()
                };
                QPolyElement::monomial(a.clone(), c)
            }
            PrimOp::ProjOdd(i, value) => {
                if a.odd[i - 1] == value {
                    QPolyElement::monomial(a.clone(), RatScalar::one())
                } else {
                    zero()
                }
            }
        }
    }

    fn parity(&self, n: usize) -> u8 {
        match *self {
            PrimOp::Partial(p) | PrimOp::Chi(p) => (p > n) as u8,
            _ => 0,
        }
    }
}

/// A linear endomorphism built from primitives: compositions apply
/// right-to-left, matching the written order of operator products.
#[derive(Clone, Debug)]
pub enum LinOp {
    Zero,
    Identity,
    Prim(PrimOp),
    Scale(RatScalar, Box<LinOp>),
    Compose(Vec<LinOp>),
    Sum(Vec<LinOp>),
}

impl LinOp {
    pub fn apply(&self, n: usize, x: &QPolyElement) -> QPolyElement {
        match self {
            LinOp::Zero => QPolyElement::zero(n),
            LinOp::Identity => x.clone(),
            LinOp::Prim(op) => {
                let mut out = QPolyElement::zero(n);
                for (idx, c) in x.terms() {
                    let y = op.apply(n, idx).scale(c);
                    out = out.add_ref(&y);
                }
                out
            }
            LinOp::Scale(c, inner) => inner.apply(n, x).scale(c),
            LinOp::Compose(ops) => {
                let mut cur = x.clone();
                for op in ops.iter().rev() {
                    cur = op.apply(n, &cur);
                }
                cur
            }
            LinOp::Sum(ops) => {
                let mut acc = QPolyElement::zero(n);
                for op in ops {
                    acc = acc.add_ref(&op.apply(n, x));
                }
                acc
            }
        }
    }

    /// Parity of the operator as a map of superspaces; None when summands
    /// disagree.
    pub fn parity(&self, n: usize) -> Option<u8> {
        match self {
            LinOp::Zero | LinOp::Identity => Some(0),
            LinOp::Prim(op) => Some(op.parity(n)),
            LinOp::Scale(_, inner) => inner.parity(n),
            LinOp::Compose(ops) => ops
                .iter()
                .map(|o| o.parity(n))
                .try_fold(0u8, |acc, p| p.map(|p| (acc + p) % 2)),
            LinOp::Sum(ops) => {
                let mut it = ops.iter().map(|o| o.parity(n));
                let first = it.next()??;
                it.all(|p| p == Some(first)).then_some(first)
            }
        }
    }
}

pub fn partial(p: usize) -> LinOp {
    LinOp::Prim(PrimOp::Partial(p))
}

pub fn partial_shift(i: usize, j: u32) -> LinOp {
    LinOp::Prim(PrimOp::PartialShift(i, j))
}

pub fn chi(p: usize) -> LinOp {
    LinOp::Prim(PrimOp::Chi(p))
}

pub fn delta(p: usize, sign: i8) -> LinOp {
    LinOp::Prim(PrimOp::Delta(p, sign))
}

pub fn sgn_bar(i: usize) -> LinOp {
    LinOp::Prim(PrimOp::SgnBar(i))
}

fn compose(ops: Vec<LinOp>) -> LinOp {
    LinOp::Compose(ops)
}

fn sum(ops: Vec<LinOp>) -> LinOp {
    LinOp::Sum(ops)
}

/// The generator operator for a power-1 symbol, assembled from the
/// primitive operators. `n` is the rank; odd positions are `n + i`.
pub fn gen_op_base(n: usize, kind: GenKind, index: usize) -> LinOp {
    let bar = |i: usize| n + i;
    match kind {
        GenKind::K => compose(vec![delta(index, 1), delta(bar(index), 1)]),
        GenKind::KInv => compose(vec![delta(index, -1), delta(bar(index), -1)]),
        GenKind::E => {
            let h = index;
            sum(vec![
                compose(vec![chi(h), partial(h + 1), delta(bar(h + 1), 1)]),
                compose(vec![
                    chi(bar(h)),
                    partial(bar(h + 1)),
                    delta(h + 1, -1),
                    sgn_bar(h),
                ]),
            ])
        }
        GenKind::F => {
            let h = index;
            sum(vec![
                compose(vec![chi(h + 1), partial(h), delta(bar(h), -1)]),
                compose(vec![chi(bar(h + 1)), partial(bar(h)), delta(h, 1)]),
            ])
        }
        GenKind::KBar => {
            let i = index;
            sum(vec![
                compose(vec![chi(i), partial(bar(i)), delta(i, -1)]),
                compose(vec![chi(bar(i)), partial(i), delta(bar(i), 1)]),
            ])
        }
        GenKind::EBar => {
            let h = index;
            sum(vec![
                compose(vec![
                    chi(bar(h)),
                    partial(h + 1),
                    delta(bar(h + 1), 1),
                    sgn_bar(h),
                ]),
                compose(vec![chi(h), partial(bar(h + 1)), delta(h + 1, -1)]),
            ])
        }
        GenKind::FBar => {
            let h = index;
            sum(vec![
                compose(vec![chi(bar(h + 1)), partial(h), delta(bar(h), -1)]),
                compose(vec![chi(h + 1), partial(bar(h)), delta(h, 1)]),
            ])
        }
    }
}

/// The operator for a full symbol: divided powers are `m`-fold composition
/// scaled by `1/[m]!`.
pub fn gen_op(n: usize, g: &GenSymbol) -> LinOp {
    let base = gen_op_base(n, g.kind, g.index);
    match g.kind {
        GenKind::K | GenKind::KInv => compose(vec![base; g.power as usize]),
        GenKind::E | GenKind::F => {
            let inv = RatScalar::from_poly(qfact(g.power))
                .inv()
                .expect("factorial nonzero");
            LinOp::Scale(inv, Box::new(compose(vec![base; g.power as usize])))
        }
        _ => base,
    }
}

/// The closed-form action of a power-1 generator on a basis monomial.
fn act_closed_monomial(n: usize, kind: GenKind, index: usize, a: &SuperIndex) -> QPolyElement {
    let mut out = QPolyElement::zero(n);
    let q = |c: u32| RatScalar::from_poly(qint(c as i64));
    let sign_upto = |k: usize| -> RatScalar {
        // (-1)^{a_{1bar} + ... + a_{kbar}}
        let s: u32 = a.odd[..k].iter().sum();
        if s % 2 == 1 {
            RatScalar::from_int(-1)
        } else {
            RatScalar::one()
        }
    };
    let mut add = |target: Option<SuperIndex>, coeff: RatScalar| {
        if let Some(idx) = target {
            if !coeff.is_zero() {
                out = out.add_ref(&QPolyElement::from_unreduced(&idx, coeff));
            }
        }
    };
    match kind {
        GenKind::K => {
            let e = a.even[index - 1] as i64 + a.odd[index - 1] as i64;
            add(Some(a.clone()), RatScalar::v_pow(e));
        }
        GenKind::KInv => {
            let e = a.even[index - 1] as i64 + a.odd[index - 1] as i64;
            add(Some(a.clone()), RatScalar::v_pow(-e));
        }
        GenKind::E => {
            let h = index;
            let (ah1, ah1b) = (a.even[h], a.odd[h]);
            add(
                a.shifted(h, 1).and_then(|t| t.shifted(h + 1, -1)),
                RatScalar::v_pow(ah1b as i64).mul_ref(&q(ah1)),
            );
            add(
                a.shifted(n + h, 1).and_then(|t| t.shifted(n + h + 1, -1)),
                RatScalar::v_pow(-(ah1 as i64)).mul_ref(&q(ah1b)),
            );
        }
        GenKind::F => {
            let h = index;
            let (ah, ahb) = (a.even[h - 1], a.odd[h - 1]);
            add(
                a.shifted(h, -1).and_then(|t| t.shifted(h + 1, 1)),
                RatScalar::v_pow(-(ahb as i64)).mul_ref(&q(ah)),
            );
            add(
                a.shifted(n + h, -1).and_then(|t| t.shifted(n + h + 1, 1)),
                RatScalar::v_pow(ah as i64).mul_ref(&q(ahb)),
            );
        }
        GenKind::KBar => {
            let i = index;
            let s = sign_upto(i - 1);
            let (ai, aib) = (a.even[i - 1], a.odd[i - 1]);
            add(
                a.shifted(i, 1).and_then(|t| t.shifted(n + i, -1)),
                s.mul_ref(&RatScalar::v_pow(-(ai as i64))).mul_ref(&q(aib)),
            );
            add(
                a.shifted(n + i, 1).and_then(|t| t.shifted(i, -1)),
                s.mul_ref(&RatScalar::v_pow(aib as i64)).mul_ref(&q(ai)),
            );
        }
        GenKind::EBar => {
            let h = index;
            let s = sign_upto(h);
            let (ah1, ah1b) = (a.even[h], a.odd[h]);
            add(
                a.shifted(n + h, 1).and_then(|t| t.shifted(h + 1, -1)),
                s.mul_ref(&RatScalar::v_pow(ah1b as i64)).mul_ref(&q(ah1)),
            );
            add(
                a.shifted(h, 1).and_then(|t| t.shifted(n + h + 1, -1)),
                s.mul_ref(&RatScalar::v_pow(-(ah1 as i64)))
                    .mul_ref(&q(ah1b)),
            );
        }
        GenKind::FBar => {
            let h = index;
            let (ah, ahb) = (a.even[h - 1], a.odd[h - 1]);
            add(
                a.shifted(h, -1).and_then(|t| t.shifted(n + h + 1, 1)),
                sign_upto(h)
                    .mul_ref(&RatScalar::v_pow(-(ahb as i64)))
                    .mul_ref(&q(ah)),
            );
            add(
                a.shifted(n + h, -1).and_then(|t| t.shifted(h + 1, 1)),
                sign_upto(h - 1)
                    .mul_ref(&RatScalar::v_pow(ah as i64))
                    .mul_ref(&q(ahb)),
            );
        }
    }
    out
}

/// The closed-form generator action, extended linearly.
pub fn act_closed(n: usize, g: &GenSymbol, x: &QPolyElement) -> QPolyElement {
    let rep = ApolyRep { n };
    rep.apply_symbol(g, x)
}

/// The polynomial superalgebra as a representation of the generator
/// alphabet, acting through the closed-form formulas.
#[derive(Clone, Copy, Debug)]
pub struct ApolyRep {
    pub n: usize,
}

impl Representation for ApolyRep {
    type Elem = QPolyElement;

    fn zero_elem(&self) -> QPolyElement {
        QPolyElement::zero(self.n)
    }

    fn add(&self, a: &QPolyElement, b: &QPolyElement) -> QPolyElement {
        a.add_ref(b)
    }

    fn scale(&self, a: &QPolyElement, c: &RatScalar) -> QPolyElement {
        a.scale(c)
    }

    fn is_zero(&self, a: &QPolyElement) -> bool {
        a.is_zero()
    }

    fn apply_base(&self, kind: GenKind, index: usize, x: &QPolyElement) -> QPolyElement {
        let mut out = QPolyElement::zero(self.n);
        for (idx, c) in x.terms() {
            out = out.add_ref(&act_closed_monomial(self.n, kind, index, idx).scale(c));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Operator commutation identities.
// ---------------------------------------------------------------------------

struct Identity {
    label: String,
    lhs: LinOp,
    rhs: LinOp,
    /// Restrict the check to basis vectors satisfying the predicate.
    filter: Box<dyn Fn(&SuperIndex) -> bool>,
}

fn unrestricted() -> Box<dyn Fn(&SuperIndex) -> bool> {
    Box::new(|_| true)
}

/// Basis vectors with even exponent at slot `i` at least 1; the shifted
/// differentials truncate at zero, so identities built from them hold on
/// this subspace (matching the `a >= 1` hypothesis of the underlying
/// quantum-integer identities).
fn even_at_least(i: usize, min: u32) -> Box<dyn Fn(&SuperIndex) -> bool> {
    Box::new(move |a| a.even[i - 1] >= min)
}

fn odd_equals(i: usize, value: u32) -> Box<dyn Fn(&SuperIndex) -> bool> {
    Box::new(move |a| a.odd[i - 1] == value)
}

fn both(
    f: Box<dyn Fn(&SuperIndex) -> bool>,
    g: Box<dyn Fn(&SuperIndex) -> bool>,
) -> Box<dyn Fn(&SuperIndex) -> bool> {
    Box::new(move |a| f(a) && g(a))
}

fn opecom_identities(n: usize) -> Vec<Identity> {
    let mut ids = Vec::new();
    let bar = |i: usize| n + i;
    let koszul = |p: usize, q: usize| -> RatScalar {
        if p > n && q > n {
            RatScalar::from_int(-1)
        } else {
            RatScalar::one()
        }
    };
    let mut push =
        |label: String, lhs: LinOp, rhs: LinOp, filter: Box<dyn Fn(&SuperIndex) -> bool>| {
            ids.push(Identity {
                label,
                lhs,
                rhs,
                filter,
            });
        };
    let osc = odd_square_scalar();
    let two = RatScalar::from_poly(qint(2));

    // (1) commutation of differentials and multiplications, odd squares.
    for p in 1..=2 * n {
        for q in 1..=2 * n {
            if p == q {
                continue;
            }
            push(
                format!("1:partial-partial({p},{q})"),
                compose(vec![partial(p), partial(q)]),
                LinOp::Scale(
                    koszul(p, q),
                    Box::new(compose(vec![partial(q), partial(p)])),
                ),
                unrestricted(),
            );
            push(
                format!("1:chi-chi({p},{q})"),
                compose(vec![chi(p), chi(q)]),
                LinOp::Scale(koszul(p, q), Box::new(compose(vec![chi(q), chi(p)]))),
                unrestricted(),
            );
        }
    }
    for i in 1..=n {
        push(
            format!("1:partial-bar-square({i})"),
            compose(vec![partial(bar(i)), partial(bar(i))]),
            LinOp::Zero,
            unrestricted(),
        );
        push(
            format!("1:chi-bar-square({i})"),
            compose(vec![chi(bar(i)), chi(bar(i))]),
            LinOp::Scale(osc.clone(), Box::new(compose(vec![chi(i), chi(i)]))),
            unrestricted(),
        );
    }

    // (2) differentials against delta.
    for p in 1..=2 * n {
        for q in 1..=2 * n {
            let (lhs, rhs) = if p == q {
                (
                    compose(vec![partial(p), delta(p, 1)]),
                    LinOp::Scale(
                        RatScalar::v_pow(1),
                        Box::new(compose(vec![delta(p, 1), partial(p)])),
                    ),
                )
            } else {
                (
                    compose(vec![partial(p), delta(q, 1)]),
                    compose(vec![delta(q, 1), partial(p)]),
                )
            };
            push(
                format!("2:partial-delta({p},{q})"),
                lhs,
                rhs,
                unrestricted(),
            );
        }
    }

    // (3) chi against partial away from the interacting pairs.
    for p in 1..=2 * n {
        for q in 1..=2 * n {
            let same_pair = q == p || (p <= n && q == bar(p));
            if same_pair {
                continue;
            }
            push(
                format!("3:chi-partial({q},{p})"),
                compose(vec![chi(q), partial(p)]),
                LinOp::Scale(koszul(p, q), Box::new(compose(vec![partial(p), chi(q)]))),
                unrestricted(),
            );
        }
    }
    // (3a) even part needs a_i >= 1: the shifted differential truncates at 0.
    for i in 1..=n {
        push(
            format!("3a:partial-chi({i})"),
            compose(vec![partial(i), chi(i)]),
            compose(vec![chi(i), partial_shift(i, 1)]),
            even_at_least(i, 1),
        );
        push(
            format!("3a:proj-bar-1({i})"),
            compose(vec![chi(bar(i)), partial(bar(i))]),
            LinOp::Prim(PrimOp::ProjOdd(i, 1)),
            unrestricted(),
        );
        push(
            format!("3a:proj-bar-0({i})"),
            compose(vec![partial(bar(i)), chi(bar(i))]),
            LinOp::Prim(PrimOp::ProjOdd(i, 0)),
            unrestricted(),
        );
        push(
            format!("3a:proj-sum({i})"),
            sum(vec![
                compose(vec![chi(bar(i)), partial(bar(i))]),
                compose(vec![partial(bar(i)), chi(bar(i))]),
            ]),
            LinOp::Identity,
            unrestricted(),
        );
        // (3b) restricted to the odd-exponent subspaces.
        push(
            format!("3b:chi-bar-0({i})"),
            compose(vec![partial(i), chi(bar(i))]),
            compose(vec![chi(bar(i)), partial(i)]),
            odd_equals(i, 0),
        );
        push(
            format!("3b:chi-bar-1({i})"),
            compose(vec![partial(i), chi(bar(i))]),
            compose(vec![chi(bar(i)), partial_shift(i, 2)]),
            both(odd_equals(i, 1), even_at_least(i, 1)),
        );
    }

    // (4) chi against delta away from the interacting pairs.
    for p in 1..=2 * n {
        for q in 1..=2 * n {
            let same_pair = q == p || (p <= n && q == bar(p));
            if same_pair {
                continue;
            }
            push(
                format!("4:chi-delta({q},{p})"),
                compose(vec![chi(q), delta(p, 1)]),
                compose(vec![delta(p, 1), chi(q)]),
                unrestricted(),
            );
        }
    }
    for i in 1..=n {
        push(
            format!("4a:chi-delta({i})"),
            compose(vec![chi(i), delta(i, 1)]),
            LinOp::Scale(
                RatScalar::v_pow(-1),
                Box::new(compose(vec![delta(i, 1), chi(i)])),
            ),
            unrestricted(),
        );
        push(
            format!("4a:chibar-deltabar-0({i})"),
            compose(vec![chi(bar(i)), delta(bar(i), 1)]),
            LinOp::Scale(
                RatScalar::v_pow(-1),
                Box::new(compose(vec![delta(bar(i), 1), chi(bar(i))])),
            ),
            odd_equals(i, 0),
        );
        push(
            format!("4a:chibar-deltabar-1({i})"),
            compose(vec![chi(bar(i)), delta(bar(i), 1)]),
            LinOp::Scale(
                RatScalar::v_pow(1),
                Box::new(compose(vec![delta(bar(i), 1), chi(bar(i))])),
            ),
            odd_equals(i, 1),
        );
        push(
            format!("4b:chibar-delta-0({i})"),
            compose(vec![chi(bar(i)), delta(i, 1)]),
            compose(vec![delta(i, 1), chi(bar(i))]),
            odd_equals(i, 0),
        );
        push(
            format!("4b:chibar-delta-1({i})"),
            compose(vec![chi(bar(i)), delta(i, 1)]),
            LinOp::Scale(
                RatScalar::v_pow(-2),
                Box::new(compose(vec![delta(i, 1), chi(bar(i))])),
            ),
            odd_equals(i, 1),
        );
    }

    // (5) the signed identity and the shifted-differential identities.
    for i in 1..=n {
        push(
            format!("5a:sgn-chi({i})"),
            compose(vec![sgn_bar(i), chi(bar(i))]),
            LinOp::Scale(
                RatScalar::from_int(-1),
                Box::new(compose(vec![chi(bar(i)), sgn_bar(i)])),
            ),
            unrestricted(),
        );
        push(
            format!("5a:sgn-partial({i})"),
            compose(vec![sgn_bar(i), partial(bar(i))]),
            partial(bar(i)),
            unrestricted(),
        );
        push(
            format!("5b({i})"),
            sum(vec![
                compose(vec![chi(i), partial_shift(i, 2)]),
                compose(vec![chi(i), partial(i)]),
            ]),
            LinOp::Scale(
                two.clone(),
                Box::new(compose(vec![chi(i), partial_shift(i, 1)])),
            ),
            even_at_least(i, 1),
        );
        // (5c) as printed lacks the v^{±1} factors; the form consistent with
        // the quantum-integer identity (c') is used here.
        push(
            format!("5c({i})"),
            compose(vec![chi(i), partial_shift(i, 2)]),
            sum(vec![
                compose(vec![chi(i), partial(i)]),
                LinOp::Scale(RatScalar::v_pow(1), Box::new(delta(i, 1))),
                LinOp::Scale(RatScalar::v_pow(-1), Box::new(delta(i, -1))),
            ]),
            even_at_least(i, 1),
        );
        push(
            format!("5d({i})"),
            compose(vec![chi(i), partial_shift(i, 1)]),
            sum(vec![
                LinOp::Scale(
                    RatScalar::v_pow(1),
                    Box::new(compose(vec![chi(i), partial(i)])),
                ),
                delta(i, -1),
            ]),
            even_at_least(i, 1),
        );
        for sign in [1i8, -1] {
            push(
                format!("5e({i},{sign:+})"),
                sum(vec![
                    compose(vec![partial(bar(i)), delta(i, sign), chi(bar(i))]),
                    compose(vec![chi(bar(i)), partial(bar(i)), delta(i, sign)]),
                ]),
                delta(i, sign),
                unrestricted(),
            );
        }
        push(
            format!("5f({i})"),
            compose(vec![chi(i), partial_shift(i, 2)]),
            sum(vec![
                LinOp::Scale(
                    RatScalar::v_pow(2),
                    Box::new(compose(vec![chi(i), partial(i)])),
                ),
                LinOp::Scale(two.clone(), Box::new(delta(i, -1))),
            ]),
            even_at_least(i, 1),
        );
        push(
            format!("5g({i})"),
            sum(vec![
                compose(vec![partial_shift(i, 1), partial_shift(i, 1)]),
                compose(vec![partial(i), partial(i)]),
            ]),
            LinOp::Scale(
                two.clone(),
                Box::new(compose(vec![partial_shift(i, 1), partial(i)])),
            ),
            unrestricted(),
        );
    }

    ids
}

/// Check the operator commutation identities on every basis monomial of
/// degree at most `maxdeg`, honoring the subspace restrictions. Returns one
/// check per identity with the first counterexample on failure.
pub fn verify_opecom(n: usize, maxdeg: u32) -> SuiteReport {
    assert!(n >= 1);
    let basis = super_indices_up_to(n, maxdeg);
    let mut suite = SuiteReport::new(format!("opecom(n={n},maxdeg={maxdeg})"));
    for id in opecom_identities(n) {
        let mut failure = None;
        for a in basis.iter().filter(|a| (id.filter)(a)) {
            let x = QPolyElement::monomial(a.clone(), RatScalar::one());
            let lhs = id.lhs.apply(n, &x);
            let rhs = id.rhs.apply(n, &x);
            if lhs != rhs {
                failure = Some(format!(
                    "basis {} -> lhs {} vs rhs {}",
                    crate::qpoly::format_index(a),
                    lhs,
                    rhs
                ));
                break;
            }
        }
        match failure {
            None => suite.push(CheckReport::pass(id.label)),
            Some(d) => suite.push(CheckReport::fail(id.label, d)),
        }
    }
    suite
}

/// Check that the operator composites agree with the closed-form actions on
/// every basis monomial of degree at most `maxdeg`.
pub fn verify_gen_op_matches_closed(n: usize, maxdeg: u32) -> SuiteReport {
    let basis = super_indices_up_to(n, maxdeg);
    let mut suite = SuiteReport::new(format!("genop-vs-closed(n={n},maxdeg={maxdeg})"));
    let mut gens: Vec<GenSymbol> = Vec::new();
    for i in 1..=n {
        gens.push(GenSymbol::new(GenKind::K, i, 1));
        gens.push(GenSymbol::new(GenKind::KInv, i, 1));
        gens.push(GenSymbol::new(GenKind::KBar, i, 1));
    }
    for h in 1..n {
        gens.push(GenSymbol::new(GenKind::E, h, 1));
        gens.push(GenSymbol::new(GenKind::F, h, 1));
        gens.push(GenSymbol::new(GenKind::EBar, h, 1));
        gens.push(GenSymbol::new(GenKind::FBar, h, 1));
    }
    for g in &gens {
        let op = gen_op(n, g);
        let mut failure = None;
        for a in &basis {
            let x = QPolyElement::monomial(a.clone(), RatScalar::one());
            let lhs = op.apply(n, &x);
            let rhs = act_closed(n, g, &x);
            if lhs != rhs {
                failure = Some(format!(
                    "basis {}: operator {} vs closed {}",
                    crate::qpoly::format_index(a),
                    lhs,
                    rhs
                ));
                break;
            }
        }
        match failure {
            None => suite.push(CheckReport::pass(format!("{g}"))),
            Some(d) => suite.push(CheckReport::fail(format!("{g}"), d)),
        }
    }
    suite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_scalar;
    use crate::qpoly::normal_order;

    fn monomial(_n: usize, even: &[u32], odd: &[u32]) -> QPolyElement {
        let idx = SuperIndex {
            even: even.to_vec(),
            odd: odd.to_vec(),
        };
        QPolyElement::monomial(idx, RatScalar::one())
    }

    #[test]
    fn partial_examples() {
        let n = 2;
        // partial_1(X_1^2) = [2] X_1
        let x12 = monomial(n, &[2, 0], &[0, 0]);
        let got = partial(1).apply(n, &x12);
        let expect = monomial(n, &[1, 0], &[0, 0]).scale(&RatScalar::from_poly(qint(2)));
        assert_eq!(got, expect);

        // partial_{bar 1} kills monomials without Xb1.
        let x = monomial(n, &[1, 1], &[0, 1]);
        assert!(partial(3).apply(n, &x).is_zero());

        // partial_{bar 2}(Xb1 Xb2) = -[1] Xb1.
        let xb = monomial(n, &[0, 0], &[1, 1]);
        let got = partial(4).apply(n, &xb);
        assert_eq!(
            got,
            monomial(n, &[0, 0], &[1, 0]).scale(&RatScalar::from_int(-1))
        );
    }

    #[test]
    fn partial_shift_examples() {
        let n = 2;
        // shift 0 agrees with the plain differential on degree <= 4.
        for a in super_indices_up_to(n, 4) {
            let x = QPolyElement::monomial(a.clone(), RatScalar::one());
            assert_eq!(partial_shift(1, 0).apply(n, &x), partial(1).apply(n, &x));
        }
        let x1 = monomial(n, &[1, 0], &[0, 0]);
        assert_eq!(
            partial_shift(1, 1).apply(n, &x1),
            QPolyElement::one(n).scale(&RatScalar::from_poly(qint(2)))
        );
        assert_eq!(
            partial_shift(1, 2).apply(n, &x1),
            QPolyElement::one(n).scale(&RatScalar::from_poly(qint(3)))
        );
    }

    #[test]
    fn chi_delta_sgn_examples() {
        let n = 1;
        // chi_{bar 1}(Xb1) = c X_1^2.
        let xb1 = monomial(n, &[0], &[1]);
        assert_eq!(
            chi(2).apply(n, &xb1),
            monomial(n, &[2], &[0]).scale(&odd_square_scalar())
        );
        // delta_1(X_1^3) = v^3 X_1^3.
        let x13 = monomial(n, &[3], &[0]);
        assert_eq!(delta(1, 1).apply(n, &x13), x13.scale(&RatScalar::v_pow(3)));
        // sgn_bar(Xb1) = -Xb1.
        assert_eq!(
            sgn_bar(1).apply(n, &xb1),
            xb1.scale(&RatScalar::from_int(-1))
        );
    }

    #[test]
    fn gen_op_examples() {
        let n = 2;
        // K_1 scales by v^{a_1 + a_{bar 1}}.
        let x = monomial(n, &[2, 1], &[1, 0]);
        let k1 = gen_op(n, &GenSymbol::new(GenKind::K, 1, 1));
        assert_eq!(k1.apply(n, &x), x.scale(&RatScalar::v_pow(3)));

        // E_1 kills monomials with nothing in slot 2.
        let y = monomial(n, &[3, 0], &[1, 0]);
        let e1 = gen_op(n, &GenSymbol::new(GenKind::E, 1, 1));
        assert!(e1.apply(n, &y).is_zero());

        // F_1(X_1) = X_2.
        let x1 = monomial(n, &[1, 0], &[0, 0]);
        let f1 = gen_op(n, &GenSymbol::new(GenKind::F, 1, 1));
        assert_eq!(f1.apply(n, &x1), monomial(n, &[0, 1], &[0, 0]));
    }

    #[test]
    fn act_closed_examples() {
        let n = 1;
        // Kb_1 on X^{e_1}: only the raising term survives.
        let x1 = monomial(n, &[1], &[0]);
        let got = act_closed(n, &GenSymbol::new(GenKind::KBar, 1, 1), &x1);
        assert_eq!(got, monomial(n, &[0], &[1]));

        // Fb_1 kills monomials with empty slot 1.
        let n = 2;
        let x = monomial(n, &[0, 2], &[0, 1]);
        assert!(act_closed(n, &GenSymbol::new(GenKind::FBar, 1, 1), &x).is_zero());
    }

    #[test]
    fn operators_match_closed_forms_small() {
        let suite = verify_gen_op_matches_closed(2, 4);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn opecom_suite_passes_n2() {
        let suite = verify_opecom(2, 4);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn opecom_pinned_examples() {
        let n = 2;
        // (3a) on X_1^2: both sides [3] X_1^2.
        let x12 = monomial(n, &[2, 0], &[0, 0]);
        let lhs = compose(vec![partial(1), chi(1)]).apply(n, &x12);
        let rhs = compose(vec![chi(1), partial_shift(1, 1)]).apply(n, &x12);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, x12.scale(&RatScalar::from_poly(qint(3))));

        // (5e) on X^0 yields delta_1 of it.
        let one = QPolyElement::one(n);
        let lhs = sum(vec![
            compose(vec![partial(3), delta(1, 1), chi(3)]),
            compose(vec![chi(3), partial(3), delta(1, 1)]),
        ])
        .apply(n, &one);
        assert_eq!(lhs, one);
    }

    #[test]
    fn parity_of_generator_operators() {
        let n = 2;
        for (kind, expect) in [
            (GenKind::K, 0u8),
            (GenKind::E, 0),
            (GenKind::F, 0),
            (GenKind::KBar, 1),
            (GenKind::EBar, 1),
            (GenKind::FBar, 1),
        ] {
            let idx = 1;
            let op = gen_op_base(n, kind, idx);
            assert_eq!(op.parity(n), Some(expect), "{kind:?}");
        }
    }

    #[test]
    fn generator_actions_preserve_degree() {
        // Each generator operator maps the degree-r component into itself,
        // and the odd generators flip parity.
        let n = 3;
        for a in super_indices_up_to(n, 4) {
            let x = QPolyElement::monomial(a.clone(), RatScalar::one());
            for (kind, index) in [
                (GenKind::K, 2),
                (GenKind::E, 1),
                (GenKind::F, 2),
                (GenKind::KBar, 3),
                (GenKind::EBar, 2),
                (GenKind::FBar, 1),
            ] {
                let y = act_closed(n, &GenSymbol::new(kind, index, 1), &x);
                if y.is_zero() {
                    continue;
                }
                assert_eq!(y.degree(), Some(a.degree()), "{kind:?}{index} on {a:?}");
                let expect_parity = (a.parity() + kind.is_odd() as u8) % 2;
                assert_eq!(y.parity(), Some(expect_parity), "{kind:?}{index} on {a:?}");
            }
        }
    }

    #[test]
    fn linearity_on_samples() {
        let n = 2;
        let a = normal_order(n, &[1, 3, 2]);
        let b = normal_order(n, &[2, 4]);
        let alpha = parse_scalar("v^2 - 1").unwrap();
        let beta = parse_scalar("(v)/(v + 2)").unwrap();
        let combo = a.scale(&alpha).add_ref(&b.scale(&beta));
        for op in [
            gen_op(n, &GenSymbol::new(GenKind::E, 1, 1)),
            partial(3),
            chi(2),
        ] {
            let lhs = op.apply(n, &combo);
            let rhs = op
                .apply(n, &a)
                .scale(&alpha)
                .add_ref(&op.apply(n, &b).scale(&beta));
            assert_eq!(lhs, rhs);
        }
    }
}

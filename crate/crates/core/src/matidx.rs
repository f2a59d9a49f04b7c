//! Index combinatorics: super multi-indices, super matrices, parities,
//! row/column sums, the section-ordered flattening `vec`, the pre-order on
//! matrices it induces, and enumeration of the degree-`r` matrix sets.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A super multi-index `a ∈ N^n × N^n`: `n` even exponents followed by `n`
/// odd exponents. Reduced means all odd entries are at most 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperIndex {
    pub even: Vec<u32>,
    pub odd: Vec<u32>,
}

impl SuperIndex {
    pub fn zero(n: usize) -> Self {
        SuperIndex {
            even: vec![0; n],
            odd: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.even.len()
    }

    /// Entry at position `p ∈ 1..=2n` (even positions first).
    pub fn get(&self, p: usize) -> u32 {
        let n = self.n();
        if p <= n {
            self.even[p - 1]
        } else {
            self.odd[p - n - 1]
        }
    }

    pub fn set(&mut self, p: usize, value: u32) {
        let n = self.n();
        if p <= n {
            self.even[p - 1] = value;
        } else {
            self.odd[p - n - 1] = value;
        }
    }

    /// `self + delta * e_p`, or None if the result would be negative.
    pub fn shifted(&self, p: usize, delta: i64) -> Option<Self> {
        let cur = self.get(p) as i64;
        let new = cur + delta;
        if new < 0 {
            return None;
        }
        let mut out = self.clone();
        out.set(p, new as u32);
        Some(out)
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().sum::<u32>() + self.odd.iter().sum::<u32>()
    }

    pub fn parity(&self) -> u8 {
        (self.odd.iter().sum::<u32>() % 2) as u8
    }

    pub fn is_reduced(&self) -> bool {
        self.odd.iter().all(|&x| x <= 1)
    }

    /// Sum of odd entries strictly before odd slot `i ∈ 1..=n`.
    pub fn odd_prefix(&self, i: usize) -> u32 {
        self.odd[..i - 1].iter().sum()
    }
}

/// A pair `(A^0 | A^1)` of n×n natural matrices. Reduced means all `A^1`
/// entries are 0 or 1; primed means the diagonal of `A^0` is zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperMatrix {
    n: usize,
    even: Vec<u32>,
    odd: Vec<u32>,
}

impl SuperMatrix {
    pub fn zero(n: usize) -> Self {
        SuperMatrix {
            n,
            even: vec![0; n * n],
            odd: vec![0; n * n],
        }
    }

    pub fn from_rows(even: Vec<Vec<u32>>, odd: Vec<Vec<u32>>) -> Result<Self> {
        let n = even.len();
        if n == 0 || odd.len() != n || even.iter().chain(&odd).any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(
                "matrix halves must be square and of equal size".into(),
            ));
        }
        Ok(SuperMatrix {
            n,
            even: even.into_iter().flatten().collect(),
            odd: odd.into_iter().flatten().collect(),
        })
    }

    /// Elementary matrix with a 1 in the even part at `(i, j)` (1-based).
    pub fn unit_even(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set_even(i, j, 1);
        m
    }

    /// Elementary matrix with a 1 in the odd part at `(i, j)` (1-based).
    pub fn unit_odd(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set_odd(i, j, 1);
        m
    }

    /// `(diag(lambda) | 0)`.
    pub fn diagonal(lambda: &[u32]) -> Self {
        let n = lambda.len();
        let mut m = Self::zero(n);
        for (i, &x) in lambda.iter().enumerate() {
            m.set_even(i + 1, i + 1, x);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn even(&self, i: usize, j: usize) -> u32 {
        self.even[(i - 1) * self.n + (j - 1)]
    }

    pub fn odd(&self, i: usize, j: usize) -> u32 {
        self.odd[(i - 1) * self.n + (j - 1)]
    }

    pub fn set_even(&mut self, i: usize, j: usize, value: u32) {
        self.even[(i - 1) * self.n + (j - 1)] = value;
    }

    pub fn set_odd(&mut self, i: usize, j: usize, value: u32) {
        self.odd[(i - 1) * self.n + (j - 1)] = value;
    }

    /// Add `delta` to an even entry; None if the result would be negative.
    pub fn bump_even(&self, i: usize, j: usize, delta: i64) -> Option<Self> {
        let new = self.even(i, j) as i64 + delta;
        if new < 0 {
            return None;
        }
        let mut out = self.clone();
        out.set_even(i, j, new as u32);
        Some(out)
    }

    pub fn bump_odd(&self, i: usize, j: usize, delta: i64) -> Option<Self> {
        let new = self.odd(i, j) as i64 + delta;
        if new < 0 {
            return None;
        }
        let mut out = self.clone();
        out.set_odd(i, j, new as u32);
        Some(out)
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().sum::<u32>() + self.odd.iter().sum::<u32>()
    }

    pub fn parity(&self) -> u8 {
        (self.odd.iter().sum::<u32>() % 2) as u8
    }

    pub fn is_reduced(&self) -> bool {
        self.odd.iter().all(|&x| x <= 1)
    }

    pub fn is_primed(&self) -> bool {
        (1..=self.n).all(|i| self.even(i, i) == 0)
    }

    /// Row sums of `A^0 + A^1`.
    pub fn ro(&self) -> Vec<u32> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.even(i, j) + self.odd(i, j)).sum())
            .collect()
    }

    /// Column sums of `A^0 + A^1`.
    pub fn co(&self) -> Vec<u32> {
        (1..=self.n)
            .map(|j| (1..=self.n).map(|i| self.even(i, j) + self.odd(i, j)).sum())
            .collect()
    }

    /// Row and column sums together.
    pub fn roco(&self) -> (Vec<u32>, Vec<u32>) {
        (self.ro(), self.co())
    }

    pub fn diag_even(&self) -> Vec<u32> {
        (1..=self.n).map(|i| self.even(i, i)).collect()
    }

    /// Zero the even diagonal, returning the primed matrix and the removed
    /// diagonal.
    pub fn strip_diag(&self) -> (Self, Vec<u32>) {
        let mut out = self.clone();
        let mut lambda = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            lambda.push(self.even(i, i));
            out.set_even(i, i, 0);
        }
        (out, lambda)
    }

    /// `A + diag(lambda)` in the even part.
    pub fn add_diag(&self, lambda: &[u32]) -> Self {
        let mut out = self.clone();
        for i in 1..=self.n {
            out.set_even(i, i, out.even(i, i) + lambda[i - 1]);
        }
        out
    }

    /// Column `j` of the square view as a super multi-index
    /// `(a^0_{1j}, ..., a^0_{nj} | a^1_{1j}, ..., a^1_{nj})`.
    pub fn column(&self, j: usize) -> SuperIndex {
        SuperIndex {
            even: (1..=self.n).map(|i| self.even(i, j)).collect(),
            odd: (1..=self.n).map(|i| self.odd(i, j)).collect(),
        }
    }

    pub fn from_columns(cols: &[SuperIndex]) -> Self {
        let n = cols.len();
        let mut m = Self::zero(n);
        for (j, c) in cols.iter().enumerate() {
            for i in 1..=n {
                m.set_even(i, j + 1, c.even[i - 1]);
                m.set_odd(i, j + 1, c.odd[i - 1]);
            }
        }
        m
    }

    /// The section-ordered flattening of length `2n^2 - n`: for `j = n..1`
    /// the `j`-th column of `A^1` read bottom-to-top followed by the strictly
    /// upper part of column `j` of `A^0` read top-to-bottom, then for
    /// `j = 1..n-1` the strictly lower part of column `j` of `A^0` read
    /// bottom-to-top. The even diagonal is ignored.
    pub fn vec(&self) -> Vec<u32> {
        let n = self.n;
        let mut out = Vec::with_capacity(2 * n * n - n);
        for j in (1..=n).rev() {
            for i in (1..=n).rev() {
                out.push(self.odd(i, j));
            }
            for i in 1..j {
                out.push(self.even(i, j));
            }
        }
        for j in 1..n {
            for i in ((j + 1)..=n).rev() {
                out.push(self.even(i, j));
            }
        }
        out
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 1..=self.n {
            if i > 1 {
                write!(f, "; ")?;
            }
            for j in 1..=self.n {
                if j > 1 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.even(i, j))?;
            }
        }
        write!(f, " | ")?;
        for i in 1..=self.n {
            if i > 1 {
                write!(f, "; ")?;
            }
            for j in 1..=self.n {
                if j > 1 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.odd(i, j))?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    even: Vec<Vec<u32>>,
    odd: Vec<Vec<u32>>,
}

impl Serialize for SuperMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = MatrixRepr {
            even: (1..=self.n)
                .map(|i| (1..=self.n).map(|j| self.even(i, j)).collect())
                .collect(),
            odd: (1..=self.n)
                .map(|i| (1..=self.n).map(|j| self.odd(i, j)).collect())
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        SuperMatrix::from_rows(repr.even, repr.odd).map_err(D::Error::custom)
    }
}

/// Outcome of comparing two matrices under the vec-lexicographic pre-order.
/// `position` is the 1-based index of the first differing vec component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prec {
    Less { position: usize },
    EqualVec,
    Greater { position: usize },
}

/// Compare `a` against `b`: `Greater` means `b ≺ a` strictly (the flattening
/// of `a` is lexicographically larger).
pub fn prec(a: &SuperMatrix, b: &SuperMatrix) -> Prec {
    let va = a.vec();
    let vb = b.vec();
    for (k, (x, y)) in va.iter().zip(vb.iter()).enumerate() {
        match x.cmp(y) {
            Ordering::Less => return Prec::Less { position: k + 1 },
            Ordering::Greater => return Prec::Greater { position: k + 1 },
            Ordering::Equal => {}
        }
    }
    Prec::EqualVec
}

/// Total order refining the pre-order: vec-lexicographic first, then the
/// even diagonal lexicographically. On reduced matrices this is a genuine
/// total order (vec plus diagonal determine the matrix).
pub fn total_cmp(a: &SuperMatrix, b: &SuperMatrix) -> Ordering {
    a.vec()
        .cmp(&b.vec())
        .then_with(|| a.diag_even().cmp(&b.diag_even()))
}

fn compositions(cells: usize, total: u32, cap: Option<u32>, out: &mut Vec<Vec<u32>>) {
    fn rec(
        cells: usize,
        total: u32,
        cap: Option<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cells == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = cap.map(|c| c.min(total)).unwrap_or(total);
        for x in 0..=hi {
            cur.push(x);
            rec(cells - 1, total - x, cap, cur, out);
            cur.pop();
        }
    }
    rec(cells, total, cap, &mut Vec::new(), out);
}

/// All reduced matrices of degree `r` (primed: zero even diagonal), each
/// exactly once, sorted by the total order.
pub fn enumerate(n: usize, r: u32, primed: bool) -> Vec<SuperMatrix> {
    assert!(n >= 1, "enumerate requires n >= 1");
    let cells = n * n;
    let even_cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| !primed || i != j)
        .collect();
    let mut result = Vec::new();
    for k in 0..=r.min(cells as u32) {
        let mut odds = Vec::new();
        compositions(cells, k, Some(1), &mut odds);
        let mut evens = Vec::new();
        compositions(even_cells.len(), r - k, None, &mut evens);
        for o in &odds {
            for e in &evens {
                let mut m = SuperMatrix::zero(n);
                for (idx, &val) in o.iter().enumerate() {
                    if val > 0 {
                        m.set_odd(idx / n + 1, idx % n + 1, val);
                    }
                }
                for (idx, &(i, j)) in even_cells.iter().enumerate() {
                    if e[idx] > 0 {
                        m.set_even(i, j, e[idx]);
                    }
                }
                result.push(m);
            }
        }
    }
    result.sort_by(total_cmp);
    result
}

/// All weight vectors in `Λ(n, r)` (compositions of `r` into `n` parts), in
/// lexicographic order.
pub fn weights(n: usize, r: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    compositions(n, r, None, &mut out);
    out
}

/// All reduced super multi-indices of exact degree `r`.
pub fn super_indices(n: usize, r: u32) -> Vec<SuperIndex> {
    let mut out = Vec::new();
    for k in 0..=r.min(n as u32) {
        let mut odds = Vec::new();
        compositions(n, k, Some(1), &mut odds);
        let mut evens = Vec::new();
        compositions(n, r - k, None, &mut evens);
        for o in &odds {
            for e in &evens {
                out.push(SuperIndex {
                    even: e.clone(),
                    odd: o.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// All reduced super multi-indices of degree at most `maxdeg`.
pub fn super_indices_up_to(n: usize, maxdeg: u32) -> Vec<SuperIndex> {
    (0..=maxdeg).flat_map(|r| super_indices(n, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_examples() {
        let a = SuperIndex::zero(3);
        assert_eq!(a.parity(), 0);
        let mut b = SuperIndex::zero(3);
        b.odd[0] = 1;
        b.odd[2] = 1;
        assert_eq!(b.parity(), 0);
        let m = SuperMatrix::unit_odd(3, 1, 2);
        assert_eq!(m.parity(), 1);
    }

    #[test]
    fn roco_examples() {
        let z = SuperMatrix::zero(3);
        assert_eq!(z.ro(), vec![0, 0, 0]);
        assert_eq!(z.co(), vec![0, 0, 0]);

        let mut m = SuperMatrix::zero(3);
        m.set_even(1, 2, 1);
        m.set_odd(2, 1, 1);
        assert_eq!(m.ro(), vec![1, 1, 0]);
        assert_eq!(m.co(), vec![1, 1, 0]);

        // Direct-summation oracle on a dense 3x3 example.
        let mut a = SuperMatrix::zero(3);
        let mut v = 1u32;
        for i in 1..=3 {
            for j in 1..=3 {
                a.set_even(i, j, v);
                a.set_odd(i, j, v + 9);
                v += 1;
            }
        }
        let ro: Vec<u32> = (1..=3)
            .map(|i| (1..=3).map(|j| a.even(i, j) + a.odd(i, j)).sum())
            .collect();
        assert_eq!(a.ro(), ro);
    }

    #[test]
    fn vec_ordering_n3_layout() {
        // Positions 1..15 in the flattening, laid out per the displayed
        // n = 3 example: position 1 is the (3,3) odd entry, etc.
        let mut a = SuperMatrix::zero(3);
        a.set_odd(3, 3, 5);
        assert_eq!(a.vec()[0], 5);

        let mut b = SuperMatrix::zero(3);
        // (i, j, odd?, expected position)
        let placements: [(usize, usize, bool, usize); 15] = [
            (3, 3, true, 1),
            (2, 3, true, 2),
            (1, 3, true, 3),
            (1, 3, false, 4),
            (2, 3, false, 5),
            (3, 2, true, 6),
            (2, 2, true, 7),
            (1, 2, true, 8),
            (1, 2, false, 9),
            (3, 1, true, 10),
            (2, 1, true, 11),
            (1, 1, true, 12),
            (3, 1, false, 13),
            (2, 1, false, 14),
            (3, 2, false, 15),
        ];
        for &(i, j, odd, pos) in &placements {
            if odd {
                b.set_odd(i, j, pos as u32);
            } else {
                b.set_even(i, j, pos as u32);
            }
        }
        let v = b.vec();
        assert_eq!(v.len(), 15);
        for (idx, &x) in v.iter().enumerate() {
            assert_eq!(x, idx as u32 + 1, "vec position {}", idx + 1);
        }
    }

    #[test]
    fn vec_ordering_n2_unrolled() {
        // (a1_22, a1_12, a0_12, a1_21, a1_11, a0_21)
        let mut a = SuperMatrix::zero(2);
        a.set_odd(2, 2, 1);
        a.set_odd(1, 2, 2);
        a.set_even(1, 2, 3);
        a.set_odd(2, 1, 4);
        a.set_odd(1, 1, 5);
        a.set_even(2, 1, 6);
        assert_eq!(a.vec(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(SuperMatrix::zero(2).vec(), vec![0; 6]);
    }

    #[test]
    fn vec_ignores_even_diagonal() {
        let a = SuperMatrix::unit_even(2, 1, 2);
        let b = a.add_diag(&[3, 7]);
        assert_eq!(a.vec(), b.vec());
    }

    #[test]
    fn prec_examples() {
        let a = SuperMatrix::unit_even(2, 2, 1);
        assert_eq!(prec(&a, &a), Prec::EqualVec);

        // a1_22 = 1 dominates any later entry.
        let hi = SuperMatrix::unit_odd(2, 2, 2);
        let mut lo = SuperMatrix::zero(2);
        lo.set_even(2, 1, 5);
        assert_eq!(prec(&hi, &lo), Prec::Greater { position: 1 });
        assert_eq!(prec(&lo, &hi), Prec::Less { position: 1 });
    }

    #[test]
    fn prec_is_total_preorder() {
        let all = enumerate(2, 2, false);
        for a in &all {
            for b in &all {
                let ab = prec(a, b);
                let ba = prec(b, a);
                match ab {
                    Prec::EqualVec => assert_eq!(ba, Prec::EqualVec),
                    Prec::Less { .. } => assert!(matches!(ba, Prec::Greater { .. })),
                    Prec::Greater { .. } => assert!(matches!(ba, Prec::Less { .. })),
                }
            }
        }
        // Transitivity on exhaustive triples of degree <= 2, n = 2.
        let small: Vec<_> = (0..=2).flat_map(|r| enumerate(2, r, false)).collect();
        for a in &small {
            for b in &small {
                for c in &small {
                    let leq = |x: &SuperMatrix, y: &SuperMatrix| {
                        !matches!(prec(x, y), Prec::Greater { .. })
                    };
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c));
                    }
                }
            }
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut r = 1u64;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn enumerate_counts_match_stars_and_bars() {
        assert_eq!(enumerate(1, 1, false).len(), 2);
        assert_eq!(enumerate(2, 1, false).len(), 8);
        assert_eq!(enumerate(2, 2, false).len(), 32);
        for n in 1..=3usize {
            for r in 0..=4u64 {
                let cells = (n * n) as u64;
                let expect: u64 = (0..=r.min(cells))
                    .map(|k| binom(cells, k) * binom(r - k + cells - 1, cells - 1))
                    .sum();
                assert_eq!(
                    enumerate(n, r as u32, false).len() as u64,
                    expect,
                    "count n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn enumerate_unique_and_sorted() {
        let list = enumerate(2, 2, true);
        for m in &list {
            assert!(m.is_reduced() && m.is_primed() && m.degree() == 2);
        }
        for w in list.windows(2) {
            assert_eq!(total_cmp(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn strip_diag_examples() {
        let d = SuperMatrix::diagonal(&[2, 3]);
        let (p, lam) = d.strip_diag();
        assert_eq!(p, SuperMatrix::zero(2));
        assert_eq!(lam, vec![2, 3]);

        let primed = SuperMatrix::unit_odd(2, 1, 2);
        let (p2, lam2) = primed.strip_diag();
        assert_eq!(p2, primed);
        assert_eq!(lam2, vec![0, 0]);

        let mut a = SuperMatrix::zero(2);
        a.set_even(1, 1, 1);
        a.set_even(1, 2, 1);
        let (p3, lam3) = a.strip_diag();
        assert_eq!(p3, SuperMatrix::unit_even(2, 1, 2));
        assert_eq!(lam3, vec![1, 0]);
        assert_eq!(p3.add_diag(&lam3), a);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(n: usize) -> impl Strategy<Value = SuperMatrix> {
            (
                proptest::collection::vec(0u32..4, n * n),
                proptest::collection::vec(0u32..2, n * n),
            )
                .prop_map(move |(even, odd)| {
                    let mut m = SuperMatrix::zero(n);
                    for i in 1..=n {
                        for j in 1..=n {
                            m.set_even(i, j, even[(i - 1) * n + (j - 1)]);
                            m.set_odd(i, j, odd[(i - 1) * n + (j - 1)]);
                        }
                    }
                    m
                })
        }

        proptest! {
            #[test]
            fn vec_ignores_diagonal_randomized(
                a in arb_matrix(3),
                lam in proptest::collection::vec(0u32..5, 3),
            ) {
                prop_assert_eq!(a.vec(), a.add_diag(&lam).vec());
            }

            #[test]
            fn strip_then_add_is_identity(a in arb_matrix(3)) {
                let (primed, lam) = a.strip_diag();
                prop_assert!(primed.is_primed());
                prop_assert_eq!(primed.add_diag(&lam), a);
            }

            #[test]
            fn roco_consistent_with_degree(a in arb_matrix(2)) {
                let total: u32 = a.ro().iter().sum();
                prop_assert_eq!(total, a.degree());
                let total_co: u32 = a.co().iter().sum();
                prop_assert_eq!(total_co, a.degree());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let mut a = SuperMatrix::zero(2);
        a.set_even(1, 2, 3);
        a.set_odd(2, 1, 1);
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.contains("\"even\""));
        let back: SuperMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }
}

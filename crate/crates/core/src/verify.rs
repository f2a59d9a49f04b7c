//! Orchestrated verification suites: relation residuals on the polynomial
//! and tensor modules, the tensor oracle equivalence, the series-module
//! truncation equivariance and triangularity, and specialization sanity.
//! These are the building blocks of the acceptance gate and the CLI.

use num::Zero;

use crate::coeff::RatScalar;
use crate::diffops::ApolyRep;
use crate::matidx::{enumerate, prec, super_indices_up_to, Prec, SuperMatrix};
use crate::qpoly::{format_index, QPolyElement};
use crate::report::{CheckReport, SuiteReport};
use crate::tensormod::{act_closed, act_oracle, TensorElement, TensorRep};
use crate::uword::{qq_relations, relation_residual, GenKind, GenSymbol, Representation};
use crate::vmod::{act as vact, monomial_image, VElement};

/// Worker count: the `QUEERQ_THREADS` environment variable, else the
/// available parallelism.
pub fn thread_count() -> usize {
    std::env::var("QUEERQ_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        })
}

/// Evaluate independent checks in parallel, preserving order.
fn run_parallel<T, F>(items: Vec<T>, f: F) -> Vec<CheckReport>
where
    T: Send + Sync,
    F: Fn(&T) -> CheckReport + Sync,
{
    let workers = thread_count().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(&f).collect();
    }
    let mut out: Vec<Option<CheckReport>> = (0..items.len()).map(|_| None).collect();
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|scope| {
        for (slot, job) in out.chunks_mut(chunk).zip(items.chunks(chunk)) {
            scope.spawn(|| {
                for (s, item) in slot.iter_mut().zip(job.iter()) {
                    *s = Some(f(item));
                }
            });
        }
    });
    out.into_iter().map(|c| c.expect("filled")).collect()
}

/// All defining-relation residuals on the polynomial module: basis
/// monomials of degree at most `maxdeg`.
pub fn relations_on_apoly(n: usize, maxdeg: u32) -> SuiteReport {
    let rep = ApolyRep { n };
    let basis: Vec<(String, QPolyElement)> = super_indices_up_to(n, maxdeg)
        .into_iter()
        .map(|a| {
            (
                format_index(&a),
                QPolyElement::monomial(a, RatScalar::one()),
            )
        })
        .collect();
    let mut suite = SuiteReport::new(format!("relations-apoly(n={n},maxdeg={maxdeg})"));
    let rels = qq_relations(n);
    suite.checks = run_parallel(rels, |rel| {
        for (label, x) in &basis {
            let y = relation_residual(&rep, rel, x);
            if !y.is_zero() {
                return CheckReport::fail(
                    rel.label.clone(),
                    format!("nonzero residual on {label}: {y}"),
                );
            }
        }
        CheckReport::pass(rel.label.clone())
    });
    suite
}

/// All defining-relation residuals on the degree-r tensor module; the
/// derived odd generators act through their defining words.
pub fn relations_on_tensor(n: usize, r: u32) -> SuiteReport {
    let rep = TensorRep { n };
    let basis: Vec<(String, TensorElement)> = enumerate(n, r, false)
        .into_iter()
        .map(|a| {
            let label = a.to_string();
            (label, TensorElement::basis(a, RatScalar::one()))
        })
        .collect();
    let mut suite = SuiteReport::new(format!("relations-tensor(n={n},r={r})"));
    let rels = qq_relations(n);
    suite.checks = run_parallel(rels, |rel| {
        for (label, x) in &basis {
            let y = relation_residual(&rep, rel, x);
            if !y.is_zero() {
                return CheckReport::fail(
                    rel.label.clone(),
                    format!("nonzero residual on {label}"),
                );
            }
        }
        CheckReport::pass(rel.label.clone())
    });
    suite
}

fn direct_generators(n: usize) -> Vec<GenSymbol> {
    let mut gens: Vec<GenSymbol> = (1..=n).map(|i| GenSymbol::new(GenKind::K, i, 1)).collect();
    for h in 1..n {
        gens.push(GenSymbol::new(GenKind::E, h, 1));
        gens.push(GenSymbol::new(GenKind::F, h, 1));
    }
    gens.push(GenSymbol::new(GenKind::KBar, 1, 1));
    gens
}

/// Closed-form tensor action against the comultiplication oracle on every
/// degree-r basis vector.
pub fn tensor_oracle_equivalence(n: usize, r: u32) -> SuiteReport {
    let basis = enumerate(n, r, false);
    let mut suite = SuiteReport::new(format!("tensor-oracle(n={n},r={r})"));
    suite.checks = run_parallel(direct_generators(n), |g| {
        for a in &basis {
            let x = TensorElement::basis(a.clone(), RatScalar::one());
            let closed = act_closed(g, &x);
            let oracle = act_oracle(g, &x);
            if closed != oracle {
                return CheckReport::fail(
                    format!("{g}"),
                    format!("disagreement on {a}: closed {closed} vs oracle {oracle}"),
                );
            }
        }
        CheckReport::pass(format!("{g}"))
    });
    suite
}

/// Truncation equivariance of the series-module action: truncating after
/// acting agrees with acting on the truncation, at depth `deg(A) + slack`.
pub fn vmod_truncation_equivariance(n: usize, maxdeg: u32, jrange: i64, slack: u32) -> SuiteReport {
    let mut jvecs: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        jvecs = jvecs
            .into_iter()
            .flat_map(|v| {
                (-jrange..=jrange).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let matrices: Vec<SuperMatrix> = (0..=maxdeg).flat_map(|r| enumerate(n, r, true)).collect();
    let gens = direct_generators(n);
    let mut items = Vec::new();
    for a in &matrices {
        for jv in &jvecs {
            items.push((a.clone(), jv.clone()));
        }
    }
    let mut suite = SuiteReport::new(format!(
        "vmod-equivariance(n={n},maxdeg={maxdeg},|j|<={jrange})"
    ));
    suite.checks = run_parallel(items, |(a, jv)| {
        let x = VElement::symbol(a.clone(), jv.clone(), RatScalar::one());
        let depth = a.degree() + slack;
        for g in &gens {
            let lhs = vact(g, &x).truncate(depth);
            let rhs = act_closed(g, &x.truncate(depth));
            if lhs != rhs {
                return CheckReport::fail(
                    format!("A={a}, j={jv:?}"),
                    format!("generator {g} disagrees after truncation at {depth}"),
                );
            }
        }
        CheckReport::pass(format!("A={a}, j={jv:?}"))
    });
    suite
}

/// Triangularity of the monomial-word action on the cyclic vector: the
/// image of each primed reduced matrix leads with exactly that matrix, a
/// signed v-power coefficient, and strictly smaller companions.
pub fn vmod_triangularity(n: usize, maxdeg: u32) -> SuiteReport {
    let matrices: Vec<SuperMatrix> = (0..=maxdeg).flat_map(|r| enumerate(n, r, true)).collect();
    let mut suite = SuiteReport::new(format!("vmod-triangularity(n={n},maxdeg={maxdeg})"));
    suite.checks = run_parallel(matrices, |a| {
        let img = monomial_image(a, &vec![0; n]);
        let lead = match img.leading_term() {
            Ok(t) => t,
            Err(_) => return CheckReport::fail(format!("{a}"), "image is zero".to_string()),
        };
        if &lead.0 != a {
            return CheckReport::fail(
                format!("{a}"),
                format!("leading matrix is {} instead", lead.0),
            );
        }
        if lead.2.as_signed_v_power().is_none() {
            return CheckReport::fail(
                format!("{a}"),
                format!("leading coefficient {} is not a signed v-power", lead.2),
            );
        }
        for ((b, _), _) in img.terms() {
            if b != a && !matches!(prec(b, a), Prec::Less { .. }) {
                return CheckReport::fail(
                    format!("{a}"),
                    format!("companion term {b} is not strictly smaller"),
                );
            }
        }
        CheckReport::pass(format!("{a}"))
    });
    suite
}

/// The generator dictionary on the cyclic vector of the series module.
pub fn vmod_generator_dictionary(n: usize) -> SuiteReport {
    let mut suite = SuiteReport::new(format!("vmod-dictionary(n={n})"));
    let o = VElement::cyclic(n);
    let mut check = |label: String, got: VElement, expect: VElement| {
        if got == expect {
            suite.push(CheckReport::pass(label));
        } else {
            suite.push(CheckReport::fail(label, format!("got {got}")));
        }
    };
    for i in 1..=n {
        let mut jv = vec![0i64; n];
        jv[i - 1] = 1;
        check(
            format!("K{i} -> O(e_{i})"),
            vact(&GenSymbol::new(GenKind::K, i, 1), &o),
            VElement::symbol(SuperMatrix::zero(n), jv, RatScalar::one()),
        );
    }
    for h in 1..n {
        check(
            format!("E{h} -> E_({h},{})(0)", h + 1),
            vact(&GenSymbol::new(GenKind::E, h, 1), &o),
            VElement::symbol(
                SuperMatrix::unit_even(n, h, h + 1),
                vec![0; n],
                RatScalar::one(),
            ),
        );
        check(
            format!("F{h} -> E_({},{h})(0)", h + 1),
            vact(&GenSymbol::new(GenKind::F, h, 1), &o),
            VElement::symbol(
                SuperMatrix::unit_even(n, h + 1, h),
                vec![0; n],
                RatScalar::one(),
            ),
        );
    }
    check(
        "Kb1 -> (0|E_11)(0)".to_string(),
        vact(&GenSymbol::new(GenKind::KBar, 1, 1), &o),
        VElement::symbol(SuperMatrix::unit_odd(n, 1, 1), vec![0; n], RatScalar::one()),
    );
    suite
}

/// The odd annihilation rule: `Kb_i` kills every degree-r basis vector
/// whose i-th row sum is zero.
pub fn kbar_row_annihilation(n: usize, rmax: u32) -> SuiteReport {
    let rep = TensorRep { n };
    let mut suite = SuiteReport::new(format!("kbar-annihilation(n={n},r<={rmax})"));
    for i in 1..=n {
        let mut failure = None;
        'outer: for r in 0..=rmax {
            for a in enumerate(n, r, false) {
                if a.ro()[i - 1] != 0 {
                    continue;
                }
                let x = TensorElement::basis(a.clone(), RatScalar::one());
                let y = rep.apply_base(GenKind::KBar, i, &x);
                if !y.is_zero() {
                    failure = Some(format!("Kb{i} nonzero on {a} (r={r})"));
                    break 'outer;
                }
            }
        }
        match failure {
            None => suite.push(CheckReport::pass(format!("Kb{i}"))),
            Some(d) => suite.push(CheckReport::fail(format!("Kb{i}"), d)),
        }
    }
    suite
}

/// Specialization and grading sanity: quantum integers collapse at `v = 1`,
/// odd squares vanish there, and the generator actions preserve degree,
/// column sums, and the expected parity/weight shifts.
pub fn specialization_sanity(n: usize, rmax: u32) -> SuiteReport {
    let mut suite = SuiteReport::new(format!("specialization(n={n},r<={rmax})"));

    for c in -12..=12i64 {
        let val = RatScalar::from_poly(crate::coeff::qint(c))
            .specialize_v1()
            .expect("no pole");
        if val != num::BigRational::from_integer(c.into()) {
            suite.push(CheckReport::fail(
                format!("qint({c}) at v=1"),
                format!("got {val}"),
            ));
            return suite;
        }
    }
    suite.push(CheckReport::pass("quantum integers collapse at v=1"));

    let osc = crate::coeff::odd_square_scalar();
    if osc.specialize_v1().map(|x| x.is_zero()).unwrap_or(false) {
        suite.push(CheckReport::pass("odd squares vanish at v=1"));
    } else {
        suite.push(CheckReport::fail("odd squares at v=1", format!("{osc}")));
    }

    let gens = direct_generators(n);
    let mut grading_ok = true;
    let mut detail = String::new();
    'outer: for r in 0..=rmax {
        for a in enumerate(n, r, false) {
            let x = TensorElement::basis(a.clone(), RatScalar::one());
            for g in &gens {
                let y = act_closed(g, &x);
                if y.is_zero() {
                    continue;
                }
                if y.degree() != Some(r) {
                    grading_ok = false;
                    detail = format!("{g} changes degree on {a}");
                    break 'outer;
                }
                let expect_parity = (a.parity() + g.kind.is_odd() as u8) % 2;
                if y.parity() != Some(expect_parity) {
                    grading_ok = false;
                    detail = format!("{g} breaks parity on {a}");
                    break 'outer;
                }
                if y.co_project(&a.co()) != y {
                    grading_ok = false;
                    detail = format!("{g} changes column sums on {a}");
                    break 'outer;
                }
                let wt = y.weight().expect("homogeneous output");
                let mut expect_wt: Vec<i64> = a.ro().iter().map(|&x| x as i64).collect();
                match g.kind {
                    GenKind::E => {
                        expect_wt[g.index - 1] += 1;
                        expect_wt[g.index] -= 1;
                    }
                    GenKind::F => {
                        expect_wt[g.index - 1] -= 1;
                        expect_wt[g.index] += 1;
                    }
                    _ => {}
                }
                if wt.iter().map(|&x| x as i64).collect::<Vec<_>>() != expect_wt {
                    grading_ok = false;
                    detail = format!("{g} shifts weight wrongly on {a}");
                    break 'outer;
                }
            }
        }
    }
    suite.push(if grading_ok {
        CheckReport::pass("degree, parity, column sums, weight shifts preserved")
    } else {
        CheckReport::fail("grading preservation", detail)
    });

    suite
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apoly_relations_small() {
        let suite = relations_on_apoly(2, 3);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn tensor_relations_small() {
        let suite = relations_on_tensor(2, 2);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn oracle_equivalence_small() {
        let suite = tensor_oracle_equivalence(2, 2);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn equivariance_small() {
        let suite = vmod_truncation_equivariance(2, 1, 1, 3);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn triangularity_small() {
        let suite = vmod_triangularity(2, 2);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn dictionary_n3() {
        let suite = vmod_generator_dictionary(3);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn specialization_small() {
        let suite = specialization_sanity(2, 2);
        assert!(suite.passed(), "{suite}");
    }

    #[test]
    fn kbar_annihilation_small() {
        let suite = kbar_row_annihilation(2, 2);
        assert!(suite.passed(), "{suite}");
    }
}

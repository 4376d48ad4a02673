//! Prime, primary, 2-absorbing and 2-absorbing primary elements and their
//! residuals in `L`, and the image of 2-absorbing elements under δ1.

use super::context::M_DELTA0;
use super::delta_primary::d1;
use super::spaces::proper;
use super::{chains, Context, Eval, Instantiation, Scope, Theorem, Value};
use crate::lattice::Elem;

pub(super) fn entries() -> Vec<Theorem> {
    vec![
        Theorem::new(
            "T-C04",
            "N prime => N primary and 2-absorbing",
            "proper N",
            Scope::Any,
            proper,
            |cx, i| {
                let c = cx.class(i.carrier(0));
                Eval::implies(c.prime, || c.primary && c.two_absorbing)
            },
        ),
        Theorem::new(
            "T-C05",
            "Q primary => √(Q:I_M) prime, 2-absorbing and 2-absorbing primary in L",
            "proper Q",
            Scope::Any,
            proper,
            |cx, i| {
                let c = cx.class(i.carrier(0));
                let r = c.sqrt_colon_im;
                Eval::implies(c.primary, || cx.prime_l(r) && cx.two_abs_l(r) && cx.two_abs_primary_l(r))
            },
        ),
        Theorem::new(
            "T-C06",
            "Q 2-absorbing => (Q:I_M) and √(Q:I_M) 2-absorbing and 2-absorbing primary in L",
            "proper Q",
            Scope::Any,
            proper,
            |cx, i| {
                let c = cx.class(i.carrier(0));
                Eval::implies(c.two_absorbing, || {
                    [c.colon_im, c.sqrt_colon_im]
                        .iter()
                        .all(|&x| cx.two_abs_l(x) && cx.two_abs_primary_l(x))
                })
            },
        ),
        Theorem::new(
            "T-C01",
            "Q 2-absorbing => Q 2-absorbing primary",
            "proper Q",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let c = cx.class(i.carrier(0));
                Eval::implies(c.two_absorbing, || c.two_absorbing_primary)
            },
        ),
        Theorem::new(
            "T-C02",
            "Q primary => Q 2-absorbing primary",
            "proper Q",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let c = cx.class(i.carrier(0));
                Eval::implies(c.primary, || c.two_absorbing_primary)
            },
        ),
        Theorem::new(
            "T-C07",
            "Q 2-absorbing primary => (Q:I_M) 2-absorbing primary and √(Q:I_M) 2-absorbing in L",
            "proper Q",
            Scope::Full,
            proper,
            |cx, i| {
                let c = cx.class(i.carrier(0));
                Eval::implies(c.two_absorbing_primary, || colon_conclusions(cx, i.carrier(0)))
            },
        ),
        Theorem::new(
            "T-C08",
            "Q δ0-primary => Q primary and 2-absorbing, (Q:I_M) and √(Q:I_M) 2-absorbing and 2-absorbing primary in L",
            "proper Q",
            Scope::Any,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                let c = cx.class(q);
                Eval::implies(cx.delta_primary(M_DELTA0, q), || {
                    c.primary
                        && c.two_absorbing
                        && [c.colon_im, c.sqrt_colon_im]
                            .iter()
                            .all(|&x| cx.two_abs_l(x) && cx.two_abs_primary_l(x))
                })
            },
        ),
        Theorem::new(
            "T-C09",
            "Q δ0-primary => Q 2-absorbing primary and √(Q:I_M) 2-absorbing in L; \
             under the full hypotheses (Q:I_M) is 2-absorbing primary in L",
            "proper Q",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                let c = cx.class(q);
                Eval::implies(cx.delta_primary(M_DELTA0, q), || {
                    c.two_absorbing_primary
                        && cx.two_abs_l(c.sqrt_colon_im)
                        && (!cx.flags().full() || cx.two_abs_primary_l(c.colon_im))
                })
            },
        ),
        Theorem::new(
            "T-C03",
            "Q δ1-primary => Q 2-absorbing primary",
            "proper Q",
            Scope::MultiplicationDelta1,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                Eval::implies(cx.delta_primary(d1(cx), q), || cx.class(q).two_absorbing_primary)
            },
        ),
        Theorem::new(
            "T-C10",
            "Q δ1-primary => (Q:I_M) 2-absorbing primary and √(Q:I_M) 2-absorbing in L",
            "proper Q",
            Scope::FullDelta1,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                Eval::implies(cx.delta_primary(d1(cx), q), || colon_conclusions(cx, q))
            },
        ),
        Theorem::new(
            "T-C12",
            "N 2-absorbing => δ1(N) 2-absorbing and 2-absorbing primary",
            "proper N",
            Scope::FullDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                Eval::implies(cx.class(n).two_absorbing, || {
                    let image = cx.class(cx.d1(n));
                    image.two_absorbing && image.two_absorbing_primary
                })
            },
        ),
        Theorem::new(
            "MINPRIME-DECOMP",
            "N 2-absorbing => either δ1(N) = pI_M prime with p²I_M <= N, or N has exactly two minimal primes \
             P1 = p1 I_M, P2 = p2 I_M with δ1(N) = P1 ∧ P2 and (p1 p2)I_M <= N",
            "proper N",
            Scope::FullDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                Eval::implies(cx.class(n).two_absorbing, || {
                    single_prime_case(cx, n) || two_prime_case(cx, n)
                })
            },
        ),
        Theorem::new(
            "CHAIN-2ABS",
            "δ1(N_i) a chain with every N_i 2-absorbing => ∧δ1(N_i) and ∨δ1(N_i) 2-absorbing and 2-absorbing primary",
            "non-empty chains in {δ1(N) | N proper 2-absorbing}",
            Scope::FullDelta1,
            |cx| {
                let mut images: Vec<Elem> = cx
                    .proper()
                    .iter()
                    .filter(|&&n| cx.class(n).two_absorbing)
                    .map(|&n| cx.d1(n))
                    .collect();
                images.sort();
                images.dedup();
                chains(cx.carrier(), &images)
                    .into_iter()
                    .map(|chain| Instantiation::new().with("chain", Value::Carriers(chain)))
                    .collect()
            },
            |cx, i| {
                let chain = i.carriers(0);
                let c = cx.carrier();
                let from_two_absorbing = |x: Elem| {
                    cx.proper().iter().any(|&n| cx.class(n).two_absorbing && cx.d1(n) == x)
                };
                let hyp = !chain.is_empty() && c.is_chain(chain) && chain.iter().all(|&x| from_two_absorbing(x));
                Eval::implies(hyp, || {
                    [c.meet_all(chain.iter().copied()), c.join_all(chain.iter().copied())]
                        .iter()
                        .all(|&x| cx.class(x).two_absorbing && cx.class(x).two_absorbing_primary)
                })
            },
        ),
    ]
}

/// `(Q:I_M)` 2-absorbing primary and `√(Q:I_M)` 2-absorbing in `L`.
fn colon_conclusions(cx: &Context, q: Elem) -> bool {
    let c = cx.class(q);
    cx.two_abs_primary_l(c.colon_im) && cx.two_abs_l(c.sqrt_colon_im)
}

fn single_prime_case(cx: &Context, n: Elem) -> bool {
    let m = cx.module();
    let d = cx.d1(n);
    cx.class(d).prime
        && cx
            .lat()
            .elements()
            .any(|p| m.act_top(p) == d && m.carrier().leq(m.act_top(cx.scalars().mul(p, p)), n))
}

fn two_prime_case(cx: &Context, n: Elem) -> bool {
    let m = cx.module();
    let c = m.carrier();
    let minimal = cx.minimal_primes_over(n);
    let [p1, p2] = minimal[..] else {
        return false;
    };
    let (a1, a2) = (m.colon_top(p1), m.colon_top(p2));
    m.act_top(a1) == p1
        && m.act_top(a2) == p2
        && cx.d1(n) == c.meet(p1, p2)
        && c.leq(m.act_top(cx.scalars().mul(a1, a2)), n)
}

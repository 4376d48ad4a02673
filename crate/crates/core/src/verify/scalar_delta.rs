//! δ_L-primary elements of `M` for an expansion δ_L on `L`, and their
//! correspondence with δ_L-primary elements of `L`.

use std::collections::BTreeMap;

use super::context::{L_IDENTITY, L_RADICAL};
use super::spaces::{exp_l_proper, proper};
use super::{chains, families, Context, Eval, Instantiation, Scope, Theorem, Value};
use crate::expansion::module_pairs;
use crate::lattice::Elem;

pub(super) fn entries() -> Vec<Theorem> {
    vec![
        Theorem::new(
            "DL-CHAR-NR",
            "N δ_L-primary <=> (N:r) = N for all r !<= δ_L((N:I_M)) <=> compact form of the definition",
            "expansion δ_L on L, proper N",
            Scope::Any,
            exp_l_proper,
            |cx, i| {
                let (d, n) = (i.exp_l(0), i.carrier(1));
                let bound = dl_bound(cx, d, n);
                let (m, l) = (cx.module(), cx.lat());
                let by_scalar = l.elements().all(|r| l.leq(r, bound) || m.residual_ma(n, r) == n);
                let def = cx.delta_l_primary(d, n);
                Eval::always(def == by_scalar && def == compact_form(cx, d, n))
            },
        ),
        Theorem::new(
            "DL-CHAR-NA",
            "N δ_L-primary <=> (N:A) <= δ_L((N:I_M)) for all A !<= N <=> compact form of the definition",
            "expansion δ_L on L, proper N",
            Scope::Any,
            exp_l_proper,
            |cx, i| {
                let (d, n) = (i.exp_l(0), i.carrier(1));
                let bound = dl_bound(cx, d, n);
                let (m, l, c) = (cx.module(), cx.lat(), cx.carrier());
                let by_element = c.elements().all(|a| c.leq(a, n) || l.leq(m.residual_mm(n, a), bound));
                let def = cx.delta_l_primary(d, n);
                Eval::always(def == by_element && def == compact_form(cx, d, n))
            },
        ),
        Theorem::new(
            "DL-0",
            "P (δ0)_L-primary <=> P prime",
            "proper P",
            Scope::Any,
            proper,
            |cx, i| {
                let p = i.carrier(0);
                Eval::always(cx.delta_l_primary(L_IDENTITY, p) == cx.class(p).prime)
            },
        ),
        Theorem::new(
            "DL-1",
            "P (δ1)_L-primary <=> P primary",
            "proper P",
            Scope::Any,
            proper,
            |cx, i| {
                let p = i.carrier(0);
                Eval::always(cx.delta_l_primary(L_RADICAL, p) == cx.class(p).primary)
            },
        ),
        Theorem::new(
            "DL-0-1",
            "P (δ0)_L-primary => P (δ1)_L-primary",
            "proper P",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let p = i.carrier(0);
                Eval::implies(cx.delta_l_primary(L_IDENTITY, p), || cx.delta_l_primary(L_RADICAL, p))
            },
        ),
        Theorem::new(
            "DL-2ABS-08",
            "Q (δ0)_L-primary => Q primary and 2-absorbing, (Q:I_M) and √(Q:I_M) 2-absorbing and 2-absorbing primary in L",
            "proper Q",
            Scope::Any,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                let c = cx.class(q);
                Eval::implies(cx.delta_l_primary(L_IDENTITY, q), || {
                    c.primary
                        && c.two_absorbing
                        && [c.colon_im, c.sqrt_colon_im]
                            .iter()
                            .all(|&x| cx.two_abs_l(x) && cx.two_abs_primary_l(x))
                })
            },
        ),
        Theorem::new(
            "DL-2ABS-09",
            "Q (δ0)_L-primary => Q 2-absorbing primary and √(Q:I_M) 2-absorbing in L; \
             under the full hypotheses (Q:I_M) is 2-absorbing primary in L",
            "proper Q",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                let c = cx.class(q);
                Eval::implies(cx.delta_l_primary(L_IDENTITY, q), || {
                    c.two_absorbing_primary
                        && cx.two_abs_l(c.sqrt_colon_im)
                        && (!cx.flags().full() || cx.two_abs_primary_l(c.colon_im))
                })
            },
        ),
        Theorem::new(
            "DL-2ABS-03",
            "Q (δ1)_L-primary => Q 2-absorbing primary",
            "proper Q",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                Eval::implies(cx.delta_l_primary(L_RADICAL, q), || cx.class(q).two_absorbing_primary)
            },
        ),
        Theorem::new(
            "DL-2ABS-10",
            "Q (δ1)_L-primary => (Q:I_M) 2-absorbing primary and √(Q:I_M) 2-absorbing in L",
            "proper Q",
            Scope::Full,
            proper,
            |cx, i| {
                let q = i.carrier(0);
                let c = cx.class(q);
                Eval::implies(cx.delta_l_primary(L_RADICAL, q), || {
                    cx.two_abs_primary_l(c.colon_im) && cx.two_abs_l(c.sqrt_colon_im)
                })
            },
        ),
        Theorem::new(
            "DL-MONO",
            "(1) δ_L((N':I_M)) <= g_L((N':I_M)) for all proper N' and N δ_L-primary => N g_L-primary; \
             (2) N prime => (N:I_M) δ_L-primary in L",
            "clause 1: ordered pairs of expansions on L and proper N; clause 2: expansion on L and proper N",
            Scope::Any,
            |cx| {
                let k = cx.expansions_l().len();
                let mut out = Vec::new();
                for d in 0..k {
                    for g in 0..k {
                        for &n in cx.proper() {
                            out.push(
                                Instantiation::new()
                                    .with("clause", Value::Clause(1))
                                    .with("deltaL", Value::ExpL(d))
                                    .with("gammaL", Value::ExpL(g))
                                    .with("N", Value::Carrier(n)),
                            );
                        }
                    }
                }
                for d in 0..k {
                    for &n in cx.proper() {
                        out.push(
                            Instantiation::new()
                                .with("clause", Value::Clause(2))
                                .with("deltaL", Value::ExpL(d))
                                .with("N", Value::Carrier(n)),
                        );
                    }
                }
                out
            },
            |cx, i| {
                if i.clause(0) == 1 {
                    let (d, g, n) = (i.exp_l(1), i.exp_l(2), i.carrier(3));
                    let below = cx.proper().iter().all(|&x| cx.lat().leq(dl_bound(cx, d, x), dl_bound(cx, g, x)));
                    Eval::implies(below && cx.delta_l_primary(d, n), || cx.delta_l_primary(g, n))
                } else {
                    let (d, n) = (i.exp_l(1), i.carrier(2));
                    let c = cx.class(n);
                    Eval::implies(c.prime, || cx.delta_l_primary_in_l(d, c.colon_im))
                }
            },
        ),
        Theorem::new(
            "DL-COLON",
            "P δ_L-primary => (P:a) = P whenever a !<= δ_L((P:I_M)), and (P:q) is δ_L-primary whenever it is proper",
            "expansion δ_L on L, δ_L-primary P, scalar a",
            Scope::Any,
            |cx| {
                let mut out = Vec::new();
                for d in 0..cx.expansions_l().len() {
                    for &p in cx.proper().iter().filter(|&&p| cx.delta_l_primary(d, p)) {
                        for a in cx.lat().elements() {
                            out.push(
                                Instantiation::new()
                                    .with("deltaL", Value::ExpL(d))
                                    .with("P", Value::Carrier(p))
                                    .with("a", Value::Scalar(a)),
                            );
                        }
                    }
                }
                out
            },
            |cx, i| {
                let (d, p, a) = (i.exp_l(0), i.carrier(1), i.scalar(2));
                let m = cx.module();
                Eval::implies(cx.delta_l_primary(d, p), || {
                    let colon = m.residual_ma(p, a);
                    let fixed = cx.lat().leq(a, dl_bound(cx, d, p)) || colon == p;
                    let inherits = colon == m.top() || cx.delta_l_primary(d, colon);
                    fixed && inherits
                })
            },
        ),
        Theorem::new(
            "DL-CHAIN",
            "a chain of δ_L-primary elements has a δ_L-primary join",
            "expansion δ_L on L, non-empty chain of δ_L-primary elements",
            Scope::Any,
            |cx| {
                let mut out = Vec::new();
                for d in 0..cx.expansions_l().len() {
                    let items: Vec<Elem> = cx.proper().iter().copied().filter(|&p| cx.delta_l_primary(d, p)).collect();
                    for chain in chains(cx.carrier(), &items) {
                        out.push(
                            Instantiation::new()
                                .with("deltaL", Value::ExpL(d))
                                .with("chain", Value::Carriers(chain)),
                        );
                    }
                }
                out
            },
            |cx, i| {
                let (d, chain) = (i.exp_l(0), i.carriers(1));
                let c = cx.carrier();
                let hyp = !chain.is_empty() && c.is_chain(chain) && chain.iter().all(|&p| cx.delta_l_primary(d, p));
                Eval::implies(hyp, || cx.delta_l_primary(d, c.join_all(chain.iter().copied())))
            },
        ),
        Theorem::new(
            "DL-MEET",
            "δ_L meet-preserving, Q_i δ_L-primary with δ_L((Q_i:I_M)) = r for all i => ∧Q_i δ_L-primary",
            "meet-preserving δ_L on L, family of δ_L-primary elements sharing δ_L((Q_i:I_M))",
            Scope::Any,
            |cx| {
                let mut out = Vec::new();
                for d in (0..cx.expansions_l().len()).filter(|&d| cx.meet_preserving_l(d)) {
                    let mut groups: BTreeMap<Elem, Vec<Elem>> = BTreeMap::new();
                    for &q in cx.proper().iter().filter(|&&q| cx.delta_l_primary(d, q)) {
                        groups.entry(dl_bound(cx, d, q)).or_default().push(q);
                    }
                    for group in groups.values() {
                        for family in families(group) {
                            out.push(
                                Instantiation::new()
                                    .with("deltaL", Value::ExpL(d))
                                    .with("family", Value::Carriers(family)),
                            );
                        }
                    }
                }
                out
            },
            |cx, i| {
                let (d, family) = (i.exp_l(0), i.carriers(1));
                let hyp = cx.meet_preserving_l(d)
                    && !family.is_empty()
                    && family.iter().all(|&q| cx.delta_l_primary(d, q))
                    && family.iter().all(|&q| dl_bound(cx, d, q) == dl_bound(cx, d, family[0]));
                Eval::implies(hyp, || cx.delta_l_primary(d, cx.carrier().meet_all(family.iter().copied())))
            },
        ),
        Theorem::new(
            "T-C1",
            "N δ_L-primary <=> (N:I_M) δ_L-primary in L <=> N = qI_M for some δ_L-primary q in L",
            "expansion δ_L on L, proper N",
            Scope::Full,
            exp_l_proper,
            |cx, i| {
                let (d, n) = (i.exp_l(0), i.carrier(1));
                let first = cx.delta_l_primary(d, n);
                let second = cx.delta_l_primary_in_l(d, cx.class(n).colon_im);
                let m = cx.module();
                let third = cx
                    .lat()
                    .elements()
                    .any(|q| cx.delta_l_primary_in_l(d, q) && m.act_top(q) == n);
                Eval::always(first == second && second == third)
            },
        ),
        Theorem::new(
            "T-C1-COR",
            "N δ_L-primary => (N:I_M) δ_L-primary in L, with the converse when M is a multiplication module",
            "expansion δ_L on L, proper N",
            Scope::Any,
            exp_l_proper,
            |cx, i| {
                let (d, n) = (i.exp_l(0), i.carrier(1));
                let in_m = cx.delta_l_primary(d, n);
                let in_l = cx.delta_l_primary_in_l(d, cx.class(n).colon_im);
                let converse = !cx.flags().multiplication_module || !in_l || in_m;
                Eval::always((!in_m || in_l) && converse)
            },
        ),
    ]
}

/// δ_L((N:I_M)).
fn dl_bound(cx: &Context, d: usize, n: Elem) -> Elem {
    cx.expansions_l()[d].apply(cx.class(n).colon_im)
}

/// The definition restricted to compact `r` and `A`. In a finite lattice
/// every element is compact, so the filter keeps everything.
fn compact_form(cx: &Context, d: usize, n: Elem) -> bool {
    let m = cx.module();
    let (c, l) = (m.carrier(), cx.lat());
    let bound = dl_bound(cx, d, n);
    let compact = |_: Elem| true;
    module_pairs(m)
        .filter(|&(r, a)| compact(r) && compact(a))
        .all(|(r, a)| !c.leq(m.act(r, a), n) || c.leq(a, n) || l.leq(r, bound))
}

//! δ-primary elements: expansion constructions, the two characterizations,
//! δ0/δ1 identifications, comparison of expansions, residuals and chains.

use super::context::{L_IDENTITY, M_DELTA0};
use super::spaces::{exp_m_proper, proper};
use super::{chains, Context, Eval, Instantiation, Scope, Theorem, Value};
use crate::expansion::{check_expansion_axioms, e_delta_table, meet_tables, module_pairs};
use crate::lattice::Elem;

pub(super) fn entries() -> Vec<Theorem> {
    vec![
        Theorem::new(
            "EXP-MEET",
            "g1, g2 expansions on M => A |-> g1(A) ∧ g2(A) is an expansion on M",
            "unordered pairs of distinct expansions on M",
            Scope::Any,
            expansion_pairs,
            expansion_meet,
        ),
        Theorem::new(
            "EQUIV-DEF",
            "[aA <= P => A <= P or aI_M <= δ(P)] <=> [aA <= P => A <= δ(P) or aI_M <= P]",
            "expansion δ on M, proper P",
            Scope::Any,
            exp_m_proper,
            |cx, i| {
                let (d, p) = (i.exp_m(0), i.carrier(1));
                Eval::always(cx.delta_primary(d, p) == cx.delta_primary_alt(d, p))
            },
        ),
        Theorem::new(
            "EDELTA-EXP",
            "E_δ(A) = ∧{J δ-primary | A <= J}, E_δ(I_M) = I_M is an expansion on M",
            "expansion δ on M",
            Scope::Any,
            each_expansion,
            |cx, i| {
                let m = cx.module();
                let table = e_delta_table(m, &cx.expansions_m()[i.exp_m(0)]);
                Eval::always(check_expansion_axioms(m.carrier(), "E", &table).is_ok())
            },
        ),
        Theorem::new(
            "CHAR-NR",
            "N δ-primary <=> (N:r) = N for all r !<= (δ(N):I_M) <=> compact form of the definition",
            "expansion δ on M, proper N",
            Scope::Any,
            exp_m_proper,
            |cx, i| {
                let (d, n) = (i.exp_m(0), i.carrier(1));
                let def = cx.delta_primary(d, n);
                Eval::always(def == colon_by_scalar_form(cx, d, n) && def == compact_form(cx, d, n))
            },
        ),
        Theorem::new(
            "CHAR-NA",
            "N δ-primary <=> (N:A) <= (δ(N):I_M) for all A !<= N <=> compact form of the definition",
            "expansion δ on M, proper N",
            Scope::Any,
            exp_m_proper,
            |cx, i| {
                let (d, n) = (i.exp_m(0), i.carrier(1));
                let def = cx.delta_primary(d, n);
                Eval::always(def == colon_by_element_form(cx, d, n) && def == compact_form(cx, d, n))
            },
        ),
        Theorem::new(
            "T-C41",
            "P δ0-primary <=> P prime",
            "proper P",
            Scope::Any,
            proper_p,
            |cx, i| {
                let p = i.carrier(0);
                Eval::always(cx.delta_primary(M_DELTA0, p) == cx.class(p).prime)
            },
        ),
        Theorem::new(
            "T-C4",
            "P δ1-primary <=> P primary",
            "proper P",
            Scope::FullDelta1,
            proper_p,
            |cx, i| {
                let p = i.carrier(0);
                Eval::always(cx.delta_primary(d1(cx), p) == cx.class(p).primary)
            },
        ),
        Theorem::new(
            "C-C01",
            "P primary => P δ1-primary",
            "proper P",
            Scope::MultiplicationDelta1,
            proper_p,
            |cx, i| {
                let p = i.carrier(0);
                Eval::implies(cx.class(p).primary, || cx.delta_primary(d1(cx), p))
            },
        ),
        Theorem::new(
            "D0-D1",
            "P δ0-primary => P δ1-primary",
            "proper P",
            Scope::MultiplicationDelta1,
            proper_p,
            |cx, i| {
                let p = i.carrier(0);
                Eval::implies(cx.delta_primary(M_DELTA0, p), || cx.delta_primary(d1(cx), p))
            },
        ),
        Theorem::new(
            "RADICAL-D1-D0",
            "P radical element and δ1-primary => P δ0-primary",
            "proper P",
            Scope::MultiplicationDelta1,
            proper_p,
            |cx, i| {
                let p = i.carrier(0);
                Eval::implies(cx.class(p).radical_element && cx.delta_primary(d1(cx), p), || {
                    cx.delta_primary(M_DELTA0, p)
                })
            },
        ),
        Theorem::new(
            "SEMIPRIME-D0",
            "P semiprime => P δ0-primary",
            "proper P",
            Scope::Multiplication,
            proper_p,
            |cx, i| {
                let p = i.carrier(0);
                Eval::implies(cx.class(p).semiprime, || cx.delta_primary(M_DELTA0, p))
            },
        ),
        Theorem::new(
            "SEMIPRIMARY-COR",
            "(1) N semiprimary => √(N:I_M) (δ0)_L-primary in L; (2) N p-prime => N δ0-primary and p (δ0)_L-primary in L; \
             (3) M multiplication, N p-primary => N δ1-primary and p (δ0)_L-primary in L",
            "proper N, clause 1..3",
            Scope::Any,
            |cx| {
                proper(cx)
                    .into_iter()
                    .flat_map(|i| (1..=3).map(move |k| i.clone().with("clause", Value::Clause(k))))
                    .collect()
            },
            semiprimary_corollary,
        ),
        Theorem::new(
            "T-C2",
            "δ <= g pointwise and P δ-primary => P g-primary",
            "ordered pairs of expansions (δ, g) on M, proper P",
            Scope::Any,
            |cx| {
                let k = cx.expansions_m().len();
                let mut out = Vec::new();
                for d in 0..k {
                    for g in 0..k {
                        for &p in cx.proper() {
                            out.push(
                                Instantiation::new()
                                    .with("delta", Value::ExpM(d))
                                    .with("gamma", Value::ExpM(g))
                                    .with("P", Value::Carrier(p)),
                            );
                        }
                    }
                }
                out
            },
            |cx, i| {
                let (d, g, p) = (i.exp_m(0), i.exp_m(1), i.carrier(2));
                Eval::implies(cx.below(d, g) && cx.delta_primary(d, p), || cx.delta_primary(g, p))
            },
        ),
        Theorem::new(
            "DELTA-EQ-DELTA1",
            "δ <= δ1 pointwise and P δ-primary => δ(P) = δ1(P)",
            "expansion δ on M, proper P",
            Scope::FullDelta1,
            exp_m_proper,
            |cx, i| {
                let (d, p) = (i.exp_m(0), i.carrier(1));
                let d1 = d1(cx);
                Eval::implies(cx.below(d, d1) && cx.delta_primary(d, p), || {
                    cx.expansions_m()[d].apply(p) == cx.d1(p)
                })
            },
        ),
        Theorem::new(
            "T-C90",
            "P δ-primary => (P:a) = P whenever aI_M !<= δ(P), and (P:q) is δ-primary whenever it is proper",
            "expansion δ on M, δ-primary P, scalar a",
            Scope::Any,
            |cx| {
                let mut out = Vec::new();
                for d in 0..cx.expansions_m().len() {
                    for &p in cx.proper().iter().filter(|&&p| cx.delta_primary(d, p)) {
                        for a in cx.lat().elements() {
                            out.push(
                                Instantiation::new()
                                    .with("delta", Value::ExpM(d))
                                    .with("P", Value::Carrier(p))
                                    .with("a", Value::Scalar(a)),
                            );
                        }
                    }
                }
                out
            },
            |cx, i| {
                let (d, p, a) = (i.exp_m(0), i.carrier(1), i.scalar(2));
                let m = cx.module();
                let c = m.carrier();
                Eval::implies(cx.delta_primary(d, p), || {
                    let colon = m.residual_ma(p, a);
                    let fixed = c.leq(m.act_top(a), cx.expansions_m()[d].apply(p)) || colon == p;
                    let inherits = colon == m.top() || cx.delta_primary(d, colon);
                    fixed && inherits
                })
            },
        ),
        Theorem::new(
            "T-C91",
            "a chain of δ-primary elements has a δ-primary join",
            "expansion δ on M, non-empty chain of δ-primary elements",
            Scope::Any,
            |cx| {
                let mut out = Vec::new();
                for d in 0..cx.expansions_m().len() {
                    let items: Vec<Elem> = cx.proper().iter().copied().filter(|&p| cx.delta_primary(d, p)).collect();
                    for chain in chains(cx.carrier(), &items) {
                        out.push(
                            Instantiation::new()
                                .with("delta", Value::ExpM(d))
                                .with("chain", Value::Carriers(chain)),
                        );
                    }
                }
                out
            },
            |cx, i| {
                let (d, chain) = (i.exp_m(0), i.carriers(1));
                let c = cx.carrier();
                let hyp = !chain.is_empty() && c.is_chain(chain) && chain.iter().all(|&p| cx.delta_primary(d, p));
                Eval::implies(hyp, || cx.delta_primary(d, c.join_all(chain.iter().copied())))
            },
        ),
    ]
}

pub(super) fn d1(cx: &Context) -> usize {
    cx.delta1().expect("scope requires delta1")
}

fn proper_p(cx: &Context) -> Vec<Instantiation> {
    cx.proper()
        .iter()
        .map(|&p| Instantiation::new().with("P", Value::Carrier(p)))
        .collect()
}

fn each_expansion(cx: &Context) -> Vec<Instantiation> {
    (0..cx.expansions_m().len())
        .map(|d| Instantiation::new().with("delta", Value::ExpM(d)))
        .collect()
}

fn expansion_pairs(cx: &Context) -> Vec<Instantiation> {
    let k = cx.expansions_m().len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            out.push(
                Instantiation::new()
                    .with("gamma1", Value::ExpM(a))
                    .with("gamma2", Value::ExpM(b)),
            );
        }
    }
    out
}

fn expansion_meet(cx: &Context, i: &Instantiation) -> Eval {
    let c = cx.carrier();
    let (a, b) = (
        &cx.expansions_m()[i.exp_m(0)],
        &cx.expansions_m()[i.exp_m(1)],
    );
    let table = meet_tables(c, a.table(), b.table());
    Eval::always(check_expansion_axioms(c, "meet", &table).is_ok())
}

/// `(N:r) = N` for every scalar `r !<= (δ(N):I_M)`.
fn colon_by_scalar_form(cx: &Context, d: usize, n: Elem) -> bool {
    let m = cx.module();
    let bound = m.colon_top(cx.expansions_m()[d].apply(n));
    let l = cx.lat();
    l.elements()
        .all(|r| l.leq(r, bound) || m.residual_ma(n, r) == n)
}

/// `(N:A) <= (δ(N):I_M)` for every `A !<= N`.
fn colon_by_element_form(cx: &Context, d: usize, n: Elem) -> bool {
    let m = cx.module();
    let bound = m.colon_top(cx.expansions_m()[d].apply(n));
    let (l, c) = (cx.lat(), m.carrier());
    c.elements()
        .all(|a| c.leq(a, n) || l.leq(m.residual_mm(n, a), bound))
}

/// The definition restricted to compact `r` and `A`. In a finite lattice
/// every element is compact, so the filter keeps everything.
fn compact_form(cx: &Context, d: usize, n: Elem) -> bool {
    let m = cx.module();
    let c = m.carrier();
    let dn = cx.expansions_m()[d].apply(n);
    let compact = |_: Elem| true;
    module_pairs(m)
        .filter(|&(r, a)| compact(r) && compact(a))
        .all(|(r, a)| !c.leq(m.act(r, a), n) || c.leq(a, n) || c.leq(m.act_top(r), dn))
}

fn semiprimary_corollary(cx: &Context, i: &Instantiation) -> Eval {
    let (n, clause) = (i.carrier(0), i.clause(1));
    let class = cx.class(n);
    match clause {
        1 => Eval::implies(class.semiprimary, || {
            cx.delta_l_primary_in_l(L_IDENTITY, class.sqrt_colon_im)
        }),
        2 => Eval::implies(class.p_prime.is_some(), || {
            cx.delta_primary(M_DELTA0, n) && cx.delta_l_primary_in_l(L_IDENTITY, class.colon_im)
        }),
        _ => {
            let hyp = cx.flags().multiplication_module
                && cx.delta1().is_some()
                && class.p_primary.is_some();
            Eval::implies(hyp, || {
                cx.delta_primary(d1(cx), n)
                    && cx.delta_l_primary_in_l(L_IDENTITY, class.sqrt_colon_im)
            })
        }
    }
}

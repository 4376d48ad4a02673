//! Meets: meet-preserving expansions, meet distribution of the action,
//! maximal elements and radicals of meets.

use std::collections::BTreeMap;

use super::context::M_DELTA0;
use super::delta_primary::d1;
use super::spaces::{carrier_families, carrier_pairs, proper, scalar_families};
use super::{families, Context, Eval, Instantiation, Scope, Theorem, Value};
use crate::lattice::Elem;

pub(super) fn entries() -> Vec<Theorem> {
    vec![
        Theorem::new(
            "T-C92",
            "δ meet-preserving, Q_i δ-primary with δ(Q_i) = P for all i => ∧Q_i δ-primary",
            "meet-preserving δ on M, family of δ-primary elements sharing δ(Q_i)",
            Scope::Any,
            same_delta_families,
            |cx, i| {
                let (d, family) = (i.exp_m(0), i.carriers(1));
                let delta = &cx.expansions_m()[d];
                let hyp = cx.meet_preserving_m(d)
                    && !family.is_empty()
                    && family.iter().all(|&q| cx.delta_primary(d, q))
                    && family
                        .iter()
                        .all(|&q| delta.apply(q) == delta.apply(family[0]));
                Eval::implies(hyp, || {
                    cx.delta_primary(d, cx.carrier().meet_all(family.iter().copied()))
                })
            },
        ),
        Theorem::new(
            "D0-MEET",
            "δ0(A ∧ B) = δ0(A) ∧ δ0(B)",
            "pairs A, B in M",
            Scope::Any,
            carrier_pairs,
            |cx, i| Eval::always(preserves_meet(cx, M_DELTA0, i.carrier(0), i.carrier(1))),
        ),
        Theorem::new(
            "L-C91",
            "∧(a_i I_M) = (∧a_i) I_M",
            "non-empty families in L",
            Scope::Full,
            scalar_families,
            |cx, i| Eval::always(cx.module().check_meet_distribution(i.scalars(0))),
        ),
        Theorem::new(
            "D1-MEET",
            "δ1(A ∧ B) = δ1(A) ∧ δ1(B)",
            "pairs A, B in M",
            Scope::FullDelta1,
            carrier_pairs,
            |cx, i| Eval::always(preserves_meet(cx, d1(cx), i.carrier(0), i.carrier(1))),
        ),
        Theorem::new(
            "L-C92",
            "N maximal => N meet prime",
            "proper N",
            Scope::Multiplication,
            proper,
            |cx, i| {
                let class = cx.class(i.carrier(0));
                Eval::implies(class.maximal, || class.meet_prime)
            },
        ),
        Theorem::new(
            "D2-MEET",
            "δ2(A ∧ B) = δ2(A) ∧ δ2(B)",
            "pairs A, B in M",
            Scope::Multiplication,
            carrier_pairs,
            |cx, i| Eval::always(preserves_meet(cx, cx.delta2(), i.carrier(0), i.carrier(1))),
        ),
        Theorem::new(
            "L-C93",
            "√(∧q_i) = ∧√q_i",
            "non-empty families in L",
            Scope::Any,
            scalar_families,
            |cx, i| {
                let (s, l) = (cx.scalars(), cx.lat());
                let family = i.scalars(0);
                let lhs = s.radical(l.meet_all(family.iter().copied()));
                let rhs = l.meet_all(family.iter().map(|&q| s.radical(q)));
                Eval::always(lhs == rhs)
            },
        ),
        Theorem::new(
            "D1-BIGMEET",
            "∧δ1(N_i) = δ1(∧N_i)",
            "non-empty families in M",
            Scope::FullDelta1,
            carrier_families,
            |cx, i| {
                let c = cx.carrier();
                let family = i.carriers(0);
                let lhs = c.meet_all(family.iter().map(|&n| cx.d1(n)));
                Eval::always(lhs == cx.d1(c.meet_all(family.iter().copied())))
            },
        ),
    ]
}

fn preserves_meet(cx: &Context, d: usize, a: Elem, b: Elem) -> bool {
    let c = cx.carrier();
    let delta = &cx.expansions_m()[d];
    delta.apply(c.meet(a, b)) == c.meet(delta.apply(a), delta.apply(b))
}

/// Families of δ-primary elements grouped by their common value under δ,
/// for each meet-preserving δ.
fn same_delta_families(cx: &Context) -> Vec<Instantiation> {
    let mut out = Vec::new();
    for d in (0..cx.expansions_m().len()).filter(|&d| cx.meet_preserving_m(d)) {
        let delta = &cx.expansions_m()[d];
        let mut groups: BTreeMap<Elem, Vec<Elem>> = BTreeMap::new();
        for &q in cx.proper().iter().filter(|&&q| cx.delta_primary(d, q)) {
            groups.entry(delta.apply(q)).or_default().push(q);
        }
        for group in groups.values() {
            for family in families(group) {
                out.push(
                    Instantiation::new()
                        .with("delta", Value::ExpM(d))
                        .with("family", Value::Carriers(family)),
                );
            }
        }
    }
    out
}

//! Parameter spaces shared by several registry entries.

use super::{Context, Instantiation, Value};

pub(super) fn proper(cx: &Context) -> Vec<Instantiation> {
    cx.proper()
        .iter()
        .map(|&n| Instantiation::new().with("N", Value::Carrier(n)))
        .collect()
}

/// `(δ, P)` for every expansion on `M` and every proper `P`.
pub(super) fn exp_m_proper(cx: &Context) -> Vec<Instantiation> {
    (0..cx.expansions_m().len())
        .flat_map(|d| {
            cx.proper().iter().map(move |&p| {
                Instantiation::new()
                    .with("delta", Value::ExpM(d))
                    .with("P", Value::Carrier(p))
            })
        })
        .collect()
}

/// `(δ_L, N)` for every expansion on `L` and every proper `N`.
pub(super) fn exp_l_proper(cx: &Context) -> Vec<Instantiation> {
    (0..cx.expansions_l().len())
        .flat_map(|d| {
            cx.proper().iter().map(move |&p| {
                Instantiation::new()
                    .with("deltaL", Value::ExpL(d))
                    .with("N", Value::Carrier(p))
            })
        })
        .collect()
}

pub(super) fn carrier_pairs(cx: &Context) -> Vec<Instantiation> {
    let c = cx.carrier();
    c.elements()
        .flat_map(|a| {
            c.elements().map(move |b| {
                Instantiation::new()
                    .with("A", Value::Carrier(a))
                    .with("B", Value::Carrier(b))
            })
        })
        .collect()
}

pub(super) fn scalar_families(cx: &Context) -> Vec<Instantiation> {
    let items: Vec<_> = cx.lat().elements().collect();
    super::families(&items)
        .into_iter()
        .map(|f| Instantiation::new().with("family", Value::Scalars(f)))
        .collect()
}

pub(super) fn carrier_families(cx: &Context) -> Vec<Instantiation> {
    let items: Vec<_> = cx.carrier().elements().collect();
    super::families(&items)
        .into_iter()
        .map(|f| Instantiation::new().with("family", Value::Carriers(f)))
        .collect()
}

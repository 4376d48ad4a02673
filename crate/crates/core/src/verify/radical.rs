//! The element δ1(N) = √(N:I_M) I_M compared with N, its residual and rad(N).

use super::spaces::proper;
use super::{Eval, Instantiation, Scope, Theorem, Value};

pub(super) fn entries() -> Vec<Theorem> {
    vec![
        Theorem::new(
            "T-C14",
            "N prime => √(N:I_M) δ1(N) <= N <= δ1(N)",
            "proper N",
            Scope::MultiplicationDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                let c = cx.class(n);
                let (m, lat) = (cx.module(), cx.carrier());
                Eval::implies(c.prime, || {
                    let d = cx.d1(n);
                    lat.leq(m.act(c.sqrt_colon_im, d), n) && lat.leq(n, d)
                })
            },
        ),
        Theorem::new(
            "PD1N",
            "N p-primary and 2-absorbing => p δ1(N) <= N <= δ1(N)",
            "proper N",
            Scope::MultiplicationDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                let c = cx.class(n);
                let (m, lat) = (cx.module(), cx.carrier());
                match c.p_primary {
                    Some(p) if c.two_absorbing => {
                        let d = cx.d1(n);
                        Eval::always(lat.leq(m.act(p, d), n) && lat.leq(n, d))
                    }
                    _ => Eval::implies(false, || true),
                }
            },
        ),
        Theorem::new(
            "N-LE-D1NN",
            "N <= δ1((N:I_M)N), with equality when N is prime",
            "proper N",
            Scope::MultiplicationDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                let c = cx.class(n);
                let image = cx.d1(cx.module().act(c.colon_im, n));
                Eval::always(cx.carrier().leq(n, image) && (!c.prime || image == n))
            },
        ),
        Theorem::new(
            "T-C13",
            "(δ1(N):I_M) = √(N:I_M)",
            "proper N",
            Scope::FullDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                Eval::always(cx.module().colon_top(cx.d1(n)) == cx.class(n).sqrt_colon_im)
            },
        ),
        Theorem::new(
            "D1-LE-RAD",
            "δ1(N) <= rad(N)",
            "proper N",
            Scope::MultiplicationDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                Eval::always(cx.carrier().leq(cx.d1(n), cx.rad(n)))
            },
        ),
        Theorem::new(
            "T-C11",
            "δ1(N) = rad(N)",
            "proper N",
            Scope::FullDelta1,
            proper,
            |cx, i| {
                let n = i.carrier(0);
                Eval::always(cx.d1(n) == cx.rad(n))
            },
        ),
        Theorem::new(
            "SQRT-NK",
            "K proper, K !<= N => √(N:K) K <= δ1(N)",
            "proper N, proper K",
            Scope::FullDelta1,
            |cx| {
                let mut out = Vec::new();
                for &n in cx.proper() {
                    for &k in cx.proper() {
                        out.push(
                            Instantiation::new()
                                .with("N", Value::Carrier(n))
                                .with("K", Value::Carrier(k)),
                        );
                    }
                }
                out
            },
            |cx, i| {
                let (n, k) = (i.carrier(0), i.carrier(1));
                let (m, lat) = (cx.module(), cx.carrier());
                Eval::implies(!lat.leq(k, n), || {
                    let r = cx.scalars().radical(m.residual_mm(n, k));
                    lat.leq(m.act(r, k), cx.d1(n))
                })
            },
        ),
    ]
}

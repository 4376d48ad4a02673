//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use latmod::expansion::{is_delta_primary, ExpansionL};
use latmod::verify::{families, registry, verify_all, Context, Outcome};
use latmod::{
    classify_m, emit_dot, emit_latspec, gen_frame, gen_zn, parse_latspec, rad_m, search, Elem,
    ExpansionM, Family, FrameShape, InstanceBundle, LatSpecDocument, Lattice, LatticeModule,
    SearchGoal, Side,
};

type Check = Result<String, String>;
/// `N` to the scalar bound in the δ-primary condition.
type Bound<'a> = Box<dyn Fn(Elem) -> Elem + 'a>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn sweep() -> Vec<InstanceBundle> {
    let mut out: Vec<InstanceBundle> = (2..=100).map(|n| gen_zn(n).unwrap()).collect();
    out.extend((1..=6).map(|k| gen_frame(FrameShape::Chain(k)).unwrap()));
    out.extend((1..=3).map(|k| gen_frame(FrameShape::Boolean(k)).unwrap()));
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn proper(m: &LatticeModule) -> Vec<Elem> {
    m.carrier().elements().filter(|&n| m.is_proper(n)).collect()
}

fn example_z12() -> Check {
    let start = Instant::now();
    let b = gen_zn(12).unwrap();
    let m = b.module();
    let four = m.carrier().elem("(4)").ok_or("no (4)")?;
    let d1 = ExpansionM::delta1(m).map_err(|e| e.to_string())?;
    let d0 = ExpansionM::delta0(m);
    ensure(is_delta_primary(m, &d1, four), || {
        "(4) not δ1-primary".into()
    })?;
    ensure(!is_delta_primary(m, &d0, four), || "(4) δ0-primary".into())?;
    let c = classify_m(m, four);
    ensure(c.primary && !c.prime, || {
        format!("primary={} prime={}", c.primary, c.prime)
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{elapsed:?}"))
}

fn theorem_sweep(instances: &[InstanceBundle]) -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for b in instances {
        for r in verify_all(&Context::new(b)) {
            checked += 1;
            ensure(r.outcome != Outcome::Fail, || {
                format!("{}: {}", b.name(), r.tsv_line())
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} instances x {} entries = {checked} reports, {elapsed:?}",
        instances.len(),
        registry().len()
    ))
}

/// The three forms of each characterization, written out directly.
fn characterizations(instances: &[InstanceBundle]) -> Check {
    let mut compared = 0;
    for b in instances {
        let m = b.module();
        let (l, c) = (m.scalars().lattice(), m.carrier());
        let mut bounds: Vec<(String, Bound)> = Vec::new();
        let mut on_m = vec![ExpansionM::delta0(m), ExpansionM::delta2(m)];
        if let Ok(d1) = ExpansionM::delta1(m) {
            on_m.push(d1);
        }
        for d in on_m {
            let label = d.label().to_string();
            bounds.push((label, Box::new(move |n| m.colon_top(d.apply(n)))));
        }
        for d in [
            ExpansionL::identity(m.scalars()),
            ExpansionL::radical(m.scalars()),
        ] {
            let label = format!("{}_L", d.label());
            bounds.push((label, Box::new(move |n| d.apply(m.colon_top(n)))));
        }
        for (label, bound) in &bounds {
            for n in proper(m) {
                let r = bound(n);
                let direct = l.elements().all(|a| {
                    c.elements()
                        .all(|x| !c.leq(m.act(a, x), n) || c.leq(x, n) || l.leq(a, r))
                });
                let by_scalar = l
                    .elements()
                    .all(|a| l.leq(a, r) || m.residual_ma(n, a) == n);
                let by_element = c
                    .elements()
                    .all(|x| c.leq(x, n) || l.leq(m.residual_mm(n, x), r));
                ensure(direct == by_scalar && by_scalar == by_element, || {
                    format!(
                        "{} {label} at {}: {direct} {by_scalar} {by_element}",
                        b.name(),
                        c.name(n)
                    )
                })?;
                compared += 1;
            }
        }
        // The library predicate agrees with the written-out definition.
        let d1 = ExpansionM::delta1(m);
        for n in proper(m) {
            if let Ok(d1) = &d1 {
                let r = m.colon_top(d1.apply(n));
                let direct = l.elements().all(|a| {
                    c.elements()
                        .all(|x| !c.leq(m.act(a, x), n) || c.leq(x, n) || l.leq(a, r))
                });
                ensure(direct == is_delta_primary(m, d1, n), || {
                    format!("{} library mismatch", b.name())
                })?;
            }
        }
    }
    Ok(format!(
        "{compared} (instance, expansion, element) triples agree"
    ))
}

fn meet_distribution(instances: &[InstanceBundle]) -> Check {
    let mut count = 0;
    let mut in_scope = 0;
    for b in instances.iter().filter(|b| b.flags().full()) {
        in_scope += 1;
        let m = b.module();
        let (l, c) = (m.scalars().lattice(), m.carrier());
        let items: Vec<Elem> = l.elements().collect();
        for family in families(&items) {
            let lhs = c.meet_all(family.iter().map(|&a| m.act(a, c.top())));
            let rhs = m.act(l.meet_all(family.iter().copied()), c.top());
            ensure(lhs == rhs, || {
                format!("{} family of {}", b.name(), family.len())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} families on {in_scope} instances"))
}

fn rad_equals_delta1(instances: &[InstanceBundle]) -> Check {
    let z12 = gen_zn(12).unwrap();
    let m = z12.module();
    let zero = m.carrier().elem("(0)").unwrap();
    let six = m.carrier().elem("(6)").unwrap();
    let d1 = ExpansionM::delta1(m).unwrap();
    ensure(rad_m(m, zero) == Ok(six) && d1.apply(zero) == six, || {
        "Z12 (0)".into()
    })?;

    let mut count = 0;
    for b in instances.iter().filter(|b| b.flags().full()) {
        let m = b.module();
        let c = m.carrier();
        let Ok(d1) = ExpansionM::delta1(m) else {
            continue;
        };
        let primes: Vec<Elem> = proper(m)
            .into_iter()
            .filter(|&p| is_prime_directly(m, p))
            .collect();
        for n in proper(m) {
            let oracle = c.meet_all(primes.iter().copied().filter(|&p| c.leq(n, p)));
            let rad = rad_m(m, n).map_err(|e| e.to_string())?;
            ensure(rad == oracle && rad == d1.apply(n), || {
                format!("{} at {}", b.name(), c.name(n))
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} proper elements"))
}

fn is_prime_directly(m: &LatticeModule, p: Elem) -> bool {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    l.elements().all(|a| {
        c.elements()
            .all(|x| !c.leq(m.act(a, x), p) || c.leq(x, p) || c.leq(m.act(a, c.top()), p))
    })
}

fn check_expansion(c: &Lattice, table: &[Elem]) -> bool {
    c.elements().all(|a| c.leq(a, table[a.index()]))
        && c.elements().all(|a| {
            c.elements()
                .all(|b| !c.leq(a, b) || c.leq(table[a.index()], table[b.index()]))
        })
}

fn meet_preserving(c: &Lattice, d: &ExpansionM) -> bool {
    c.elements().all(|a| {
        c.elements()
            .all(|b| d.apply(c.meet(a, b)) == c.meet(d.apply(a), d.apply(b)))
    })
}

fn expansion_axioms(instances: &[InstanceBundle]) -> Check {
    let mut count = 0;
    for b in instances {
        let m = b.module();
        let c = m.carrier();
        let d0 = ExpansionM::delta0(m);
        let mut base = vec![d0.clone(), ExpansionM::delta2(m)];
        if let Ok(d1) = ExpansionM::delta1(m) {
            base.push(d1);
        }
        let mut all = base.clone();
        for d in &base {
            all.push(
                ExpansionM::e_delta(m, d)
                    .map_err(|e| format!("{}: E({}) {e}", b.name(), d.label()))?,
            );
        }
        let generated = all.clone();
        for (i, a) in generated.iter().enumerate() {
            for g in &generated[i + 1..] {
                all.push(ExpansionM::meet(m, a, g).map_err(|e| format!("{}: {e}", b.name()))?);
            }
        }
        for d in &all {
            ensure(check_expansion(c, d.table()), || {
                format!("{}: {} not an expansion", b.name(), d.label())
            })?;
            ensure(c.elements().all(|a| c.leq(d0.apply(a), d.apply(a))), || {
                format!("{}: δ0 not below {}", b.name(), d.label())
            })?;
            count += 1;
        }
        ensure(meet_preserving(c, &d0) && d0.is_meet_preserving(m), || {
            format!("{}: δ0", b.name())
        })?;
        if b.flags().multiplication_module {
            for d in &base[1..] {
                ensure(meet_preserving(c, d) && d.is_meet_preserving(m), || {
                    format!("{}: {} not meet-preserving", b.name(), d.label())
                })?;
            }
        }
    }
    Ok(format!("{count} expansions"))
}

const HAND_WRITTEN: &[&str] = &[
    "#LATSPEC 1
# diamond acting on a two-element chain through the projection onto a
lattice
elements 1 0 a b
leq a 1
leq 0 a
leq 0 b
leq b 1
leq 0 1
mul 0 0 0
mul 0 a 0
mul 0 b 0
mul 0 1 0
mul a a a
mul b a 0
mul a 1 a
mul b b b
mul b 1 b
mul 1 1 1
end
module
elements lo hi
leq lo hi
act 0 lo lo
act 0 hi lo
act a lo lo
act a hi hi
act b lo lo
act b hi lo
act 1 lo lo
act 1 hi hi
end
expansion up on module
map lo hi
map hi hi
end
expansion id on lattice
map 0 0
map a a
map b b
map 1 1
end
",
    "#LATSPEC 1
lattice
elements x
mul x x x
end
",
];

fn format_determinism() -> Check {
    let mut corpus: Vec<String> = vec![
        emit_latspec(&LatSpecDocument::from_instance(&gen_zn(12).unwrap())),
        emit_latspec(&LatSpecDocument::from_instance(
            &gen_frame(FrameShape::Boolean(2)).unwrap(),
        )),
    ];
    corpus.extend(HAND_WRITTEN.iter().map(|s| s.to_string()));
    for text in &corpus {
        let doc = parse_latspec(text).map_err(|e| e.to_string())?;
        let emitted = emit_latspec(&doc);
        let again = parse_latspec(&emitted).map_err(|e| e.to_string())?;
        ensure(again == doc && emit_latspec(&again) == emitted, || {
            "round trip differs".into()
        })?;
        let loaded = doc.to_instance("doc").map_err(|e| e.to_string())?;
        for side in [Side::Lattice, Side::Module] {
            ensure(
                emit_dot(&loaded.bundle, side) == emit_dot(&loaded.bundle, side),
                || "dot differs".into(),
            )?;
        }
        let rebuilt = doc.to_instance("doc").map_err(|e| e.to_string())?;
        ensure(
            emit_dot(&loaded.bundle, Side::Module) == emit_dot(&rebuilt.bundle, Side::Module),
            || "dot differs across loads".into(),
        )?;
    }
    Ok(format!("{} documents", corpus.len()))
}

fn search_witnesses() -> Check {
    let hits = search(&SearchGoal::Delta1NotDelta0, Family::Zn, 100).map_err(|e| e.to_string())?;
    ensure(!hits.is_empty(), || "no delta1-not-delta0 witnesses".into())?;
    for h in &hits {
        let b = Family::Zn.instance(h.parameter);
        let m = b.module();
        ensure(b.name() == h.instance, || {
            format!("instance {}", h.instance)
        })?;
        let n = m
            .carrier()
            .elem(&h.witness)
            .ok_or_else(|| format!("no {}", h.witness))?;
        let d1 = ExpansionM::delta1(m).map_err(|e| e.to_string())?;
        ensure(
            is_delta_primary(m, &d1, n) && !is_delta_primary(m, &ExpansionM::delta0(m), n),
            || format!("{} {} does not re-validate", h.instance, h.witness),
        )?;
    }
    for t in registry() {
        let fails = search(&SearchGoal::TheoremFail(t.id.to_string()), Family::Zn, 50)
            .map_err(|e| e.to_string())?;
        ensure(fails.is_empty(), || {
            format!("{} fails on {}", t.id, fails[0].instance)
        })?;
    }
    Ok(format!(
        "{} witnesses, {} entries without failures",
        hits.len(),
        registry().len()
    ))
}

fn main() -> ExitCode {
    let instances = sweep();
    let criteria: Vec<Criterion> = vec![
        ("1 worked example on Z12", Box::new(example_z12)),
        ("2 theorem sweep", Box::new(|| theorem_sweep(&instances))),
        (
            "3 characterization equivalence",
            Box::new(|| characterizations(&instances)),
        ),
        (
            "4 meet distribution",
            Box::new(|| meet_distribution(&instances)),
        ),
        (
            "5 rad equals delta1",
            Box::new(|| rad_equals_delta1(&instances)),
        ),
        (
            "6 expansion axioms",
            Box::new(|| expansion_axioms(&instances)),
        ),
        ("7 format determinism", Box::new(format_determinism)),
        ("8 search witnesses", Box::new(search_witnesses)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

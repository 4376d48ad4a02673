//! Exhaustive checking of theorem statements on a finite instance.
//!
//! Each registry entry enumerates a parameter space (elements, expansion
//! functions, families, chains) and evaluates a hypothesis and a conclusion
//! at every point. An entry PASSes when every hypothesis-satisfying point
//! satisfies the conclusion, is VACUOUS when no point satisfies the
//! hypothesis, and FAILs with the first counterexample otherwise.

mod absorbing;
mod context;
mod delta_primary;
mod enumerate;
mod meet;
mod radical;
mod scalar_delta;
mod spaces;

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

pub use context::Context;
pub use enumerate::{chains, families};

use crate::lattice::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

/// One bound parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Elem),
    Carrier(Elem),
    /// Index into [`Context::expansions_m`].
    ExpM(usize),
    /// Index into [`Context::expansions_l`].
    ExpL(usize),
    Scalars(Vec<Elem>),
    Carriers(Vec<Elem>),
    /// Which part of a multi-part statement is being checked.
    Clause(u8),
}

/// A point of a theorem's parameter space.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Instantiation {
    pub bindings: Vec<(&'static str, Value)>,
}

impl Instantiation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &'static str, value: Value) -> Self {
        self.bindings.push((name, value));
        self
    }

    fn value(&self, i: usize) -> &Value {
        &self.bindings[i].1
    }

    pub(crate) fn carrier(&self, i: usize) -> Elem {
        match self.value(i) {
            Value::Carrier(e) => *e,
            v => panic!("binding {i} is {v:?}, not a carrier element"),
        }
    }

    pub(crate) fn scalar(&self, i: usize) -> Elem {
        match self.value(i) {
            Value::Scalar(e) => *e,
            v => panic!("binding {i} is {v:?}, not a scalar"),
        }
    }

    pub(crate) fn exp_m(&self, i: usize) -> usize {
        match self.value(i) {
            Value::ExpM(d) => *d,
            v => panic!("binding {i} is {v:?}, not an expansion on M"),
        }
    }

    pub(crate) fn exp_l(&self, i: usize) -> usize {
        match self.value(i) {
            Value::ExpL(d) => *d,
            v => panic!("binding {i} is {v:?}, not an expansion on L"),
        }
    }

    pub(crate) fn carriers(&self, i: usize) -> &[Elem] {
        match self.value(i) {
            Value::Carriers(f) => f,
            v => panic!("binding {i} is {v:?}, not a carrier family"),
        }
    }

    pub(crate) fn scalars(&self, i: usize) -> &[Elem] {
        match self.value(i) {
            Value::Scalars(f) => f,
            v => panic!("binding {i} is {v:?}, not a scalar family"),
        }
    }

    pub(crate) fn clause(&self, i: usize) -> u8 {
        match self.value(i) {
            Value::Clause(c) => *c,
            v => panic!("binding {i} is {v:?}, not a clause"),
        }
    }

    /// `name=value` pairs with element names resolved.
    pub fn render(&self, cx: &Context) -> String {
        let c = cx.module().carrier();
        let l = cx.module().scalars().lattice();
        let list = |lat: &crate::lattice::Lattice, xs: &[Elem]| {
            let names: Vec<&str> = xs.iter().map(|&x| lat.name(x)).collect();
            format!("{{{}}}", names.join(","))
        };
        self.bindings
            .iter()
            .map(|(name, v)| {
                let shown = match v {
                    Value::Scalar(e) => l.name(*e).to_string(),
                    Value::Carrier(e) => c.name(*e).to_string(),
                    Value::ExpM(d) => cx.expansions_m()[*d].label().to_string(),
                    Value::ExpL(d) => format!("{}_L", cx.expansions_l()[*d].label()),
                    Value::Scalars(xs) => list(l, xs),
                    Value::Carriers(xs) => list(c, xs),
                    Value::Clause(k) => k.to_string(),
                };
                format!("{name}={shown}")
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Hypothesis and conclusion at one instantiation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eval {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Eval {
    /// The conclusion is only computed when the hypothesis holds; otherwise it
    /// is reported as true.
    pub fn implies(hypothesis: bool, conclusion: impl FnOnce() -> bool) -> Self {
        Eval {
            hypothesis,
            conclusion: !hypothesis || conclusion(),
        }
    }

    /// An unconditional statement.
    pub fn always(conclusion: bool) -> Self {
        Eval {
            hypothesis: true,
            conclusion,
        }
    }
}

/// Instance-level standing hypotheses of a theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Any,
    /// `M` is a multiplication module.
    Multiplication,
    /// Multiplication module and δ1 is an expansion.
    MultiplicationDelta1,
    /// PG lattice, faithful multiplication PG module, `I_M` compact.
    Full,
    /// Full hypotheses and δ1 is an expansion.
    FullDelta1,
}

impl Scope {
    pub fn holds(self, cx: &Context) -> bool {
        let f = cx.flags();
        let d1 = cx.delta1().is_some();
        match self {
            Scope::Any => true,
            Scope::Multiplication => f.multiplication_module,
            Scope::MultiplicationDelta1 => f.multiplication_module && d1,
            Scope::Full => f.full(),
            Scope::FullDelta1 => f.full() && d1,
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Scope::Any => "any module",
            Scope::Multiplication => "multiplication module",
            Scope::MultiplicationDelta1 => "multiplication module, delta1 an expansion",
            Scope::Full => "PG lattice, faithful multiplication PG module",
            Scope::FullDelta1 => {
                "PG lattice, faithful multiplication PG module, delta1 an expansion"
            }
        };
        f.write_str(s)
    }
}

/// A registry entry.
pub struct Theorem {
    pub id: &'static str,
    /// The statement in symbols.
    pub statement: &'static str,
    /// What is quantified.
    pub parameters: &'static str,
    pub scope: Scope,
    space: fn(&Context) -> Vec<Instantiation>,
    eval: fn(&Context, &Instantiation) -> Eval,
}

impl Theorem {
    pub(crate) const fn new(
        id: &'static str,
        statement: &'static str,
        parameters: &'static str,
        scope: Scope,
        space: fn(&Context) -> Vec<Instantiation>,
        eval: fn(&Context, &Instantiation) -> Eval,
    ) -> Self {
        Theorem {
            id,
            statement,
            parameters,
            scope,
            space,
            eval,
        }
    }

    /// Evaluates one instantiation, folding the standing hypotheses into the
    /// hypothesis.
    pub fn replay(&self, cx: &Context, inst: &Instantiation) -> Eval {
        if !self.scope.holds(cx) {
            return Eval {
                hypothesis: false,
                conclusion: true,
            };
        }
        (self.eval)(cx, inst)
    }

    pub fn check(&self, cx: &Context) -> VerificationReport {
        let mut report = VerificationReport {
            id: self.id,
            outcome: Outcome::Vacuous,
            checked: 0,
            witness: None,
            witness_text: String::new(),
        };
        if !self.scope.holds(cx) {
            return report;
        }
        for inst in (self.space)(cx) {
            let ev = (self.eval)(cx, &inst);
            if !ev.hypothesis {
                continue;
            }
            report.checked += 1;
            if !ev.conclusion && report.witness.is_none() {
                report.witness_text = inst.render(cx);
                report.witness = Some(inst);
            }
        }
        report.outcome = match (report.checked, &report.witness) {
            (0, _) => Outcome::Vacuous,
            (_, Some(_)) => Outcome::Fail,
            (_, None) => Outcome::Pass,
        };
        report
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Vacuous,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Vacuous => "VACUOUS",
            Outcome::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: &'static str,
    pub outcome: Outcome,
    /// Instantiations whose hypothesis held.
    pub checked: usize,
    pub witness: Option<Instantiation>,
    pub witness_text: String,
}

impl VerificationReport {
    /// `id<TAB>outcome<TAB>count<TAB>witness`, with `-` for no witness.
    pub fn tsv_line(&self) -> String {
        let w = if self.witness_text.is_empty() {
            "-"
        } else {
            &self.witness_text
        };
        format!("{}\t{}\t{}\t{}", self.id, self.outcome, self.checked, w)
    }
}

/// Fixed-width table of reports.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let id_w = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!(
        "{:<id_w$}  {:<7}  {:>9}  witness\n",
        "id", "outcome", "instances"
    );
    for r in reports {
        let w = if r.witness_text.is_empty() {
            "-"
        } else {
            &r.witness_text
        };
        out.push_str(&format!(
            "{:<id_w$}  {:<7}  {:>9}  {}\n",
            r.id,
            r.outcome.to_string(),
            r.checked,
            w
        ));
    }
    out
}

/// Tab-separated report lines, one per theorem.
pub fn render_tsv(reports: &[VerificationReport]) -> String {
    reports.iter().map(|r| r.tsv_line() + "\n").collect()
}

/// Ids that name the same statement as a registry entry.
const ALIASES: &[(&str, &str)] = &[
    ("D1-EQ-RAD", "T-C11"),
    ("D1-2ABS", "T-C12"),
    ("D1-COLON", "T-C13"),
];

/// Every registry entry in a fixed order.
pub fn registry() -> &'static [Theorem] {
    use std::sync::OnceLock;
    static REGISTRY: OnceLock<Vec<Theorem>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = delta_primary::entries();
        all.extend(meet::entries());
        all.extend(absorbing::entries());
        all.extend(radical::entries());
        all.extend(scalar_delta::entries());
        all
    })
}

pub fn lookup(id: &str) -> Result<&'static Theorem, VerifyError> {
    let id = ALIASES
        .iter()
        .find(|(alias, _)| *alias == id)
        .map_or(id, |(_, target)| target);
    registry()
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| VerifyError::UnknownTheorem(id.to_string()))
}

pub fn verify(cx: &Context, id: &str) -> Result<VerificationReport, VerifyError> {
    Ok(lookup(id)?.check(cx))
}

/// Runs every entry; entries are evaluated in parallel and returned in
/// registry order.
pub fn verify_all(cx: &Context) -> Vec<VerificationReport> {
    registry().par_iter().map(|t| t.check(cx)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let mut seen = HashSet::new();
        for t in registry() {
            assert!(seen.insert(t.id), "duplicate id {}", t.id);
            assert!(
                !t.statement.is_empty() && !t.parameters.is_empty(),
                "{}",
                t.id
            );
        }
        for (alias, target) in ALIASES {
            assert!(!seen.contains(alias));
            assert_eq!(lookup(alias).unwrap().id, *target);
        }
    }

    #[test]
    fn failures_keep_the_first_witness_and_replay() {
        // "Every proper N is prime" is false in Z12.
        let t = Theorem::new(
            "ALL-PRIME",
            "N prime",
            "proper N",
            Scope::Any,
            spaces::proper,
            |cx, i| Eval::always(cx.class(i.carrier(0)).prime),
        );
        let b = crate::generate::gen_zn(12).unwrap();
        let cx = Context::new(&b);
        let r = t.check(&cx);
        assert_eq!(r.outcome, Outcome::Fail);
        assert_eq!(r.checked, 5);
        assert_eq!(r.witness_text, "N=(0)");
        let replayed = t.replay(&cx, r.witness.as_ref().unwrap());
        assert!(replayed.hypothesis && !replayed.conclusion);
        assert_eq!(r.tsv_line(), "ALL-PRIME\tFAIL\t5\tN=(0)");
    }

    #[test]
    fn out_of_scope_is_vacuous() {
        let t = Theorem::new(
            "NEVER",
            "-",
            "-",
            Scope::Any,
            |_| Vec::new(),
            |_, _| Eval::always(false),
        );
        let b = crate::generate::gen_zn(6).unwrap();
        assert_eq!(t.check(&Context::new(&b)).outcome, Outcome::Vacuous);
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            lookup("T-C99").err(),
            Some(VerifyError::UnknownTheorem("T-C99".into()))
        );
    }
}

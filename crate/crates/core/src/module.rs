//! Lattice modules: a multiplicative lattice `L` acting on a finite lattice `M`.

use thiserror::Error;

use crate::lattice::{Elem, Lattice, MulLattice};
use crate::report::ValidationReport;

/// `L` acting on `M`. Scalars and carrier elements are both [`Elem`]s, indexed
/// into `scalars()` and `carrier()` respectively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeModule {
    scalars: MulLattice,
    carrier: Lattice,
    // action[a * |M| + X] = aX
    action: Vec<Elem>,
    // (N:a), indexed [N * |L| + a]
    residual_ma: Vec<Elem>,
    // (A:B), indexed [A * |M| + B]
    residual_mm: Vec<Elem>,
}

impl LatticeModule {
    pub fn from_fn(scalars: MulLattice, carrier: Lattice, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let mut action = Vec::with_capacity(scalars.len() * carrier.len());
        for a in scalars.elements() {
            for x in carrier.elements() {
                action.push(f(a, x));
            }
        }
        let mut module = LatticeModule {
            scalars,
            carrier,
            action,
            residual_ma: Vec::new(),
            residual_mm: Vec::new(),
        };
        let (l, m) = (module.scalars.lattice(), &module.carrier);
        let mut residual_ma = Vec::with_capacity(m.len() * l.len());
        for n in m.elements() {
            for a in l.elements() {
                residual_ma.push(m.join_all(m.elements().filter(|&x| m.leq(module.act(a, x), n))));
            }
        }
        let mut residual_mm = Vec::with_capacity(m.len() * m.len());
        for a in m.elements() {
            for b in m.elements() {
                residual_mm.push(l.join_all(l.elements().filter(|&x| m.leq(module.act(x, b), a))));
            }
        }
        module.residual_ma = residual_ma;
        module.residual_mm = residual_mm;
        module
    }

    /// `L` as a module over itself, acting by its own multiplication.
    pub fn over_itself(scalars: MulLattice) -> Self {
        let carrier = scalars.lattice().clone();
        let s = scalars.clone();
        Self::from_fn(scalars, carrier, move |a, x| s.mul(a, x))
    }

    pub fn scalars(&self) -> &MulLattice {
        &self.scalars
    }

    pub fn carrier(&self) -> &Lattice {
        &self.carrier
    }

    pub fn bottom(&self) -> Elem {
        self.carrier.bottom()
    }

    pub fn top(&self) -> Elem {
        self.carrier.top()
    }

    pub fn is_proper(&self, n: Elem) -> bool {
        n != self.carrier.top()
    }

    pub fn act(&self, a: Elem, x: Elem) -> Elem {
        self.action[a.0 * self.carrier.len() + x.0]
    }

    /// `a·I_M`.
    pub fn act_top(&self, a: Elem) -> Elem {
        self.act(a, self.top())
    }

    /// `(N:a) = ∨{X | aX <= N}`.
    pub fn residual_ma(&self, n: Elem, a: Elem) -> Elem {
        self.residual_ma[n.0 * self.scalars.len() + a.0]
    }

    /// `(A:B) = ∨{x | xB <= A}`, a scalar.
    pub fn residual_mm(&self, a: Elem, b: Elem) -> Elem {
        self.residual_mm[a.0 * self.carrier.len() + b.0]
    }

    /// `(N:I_M)`.
    pub fn colon_top(&self, n: Elem) -> Elem {
        self.residual_mm(n, self.top())
    }

    /// `√(N:I_M)`.
    pub fn sqrt_colon_top(&self, n: Elem) -> Elem {
        self.scalars.radical(self.colon_top(n))
    }

    /// Checks the five module axioms. Joins are checked on pairs and on the
    /// empty family, which covers all joins of a finite lattice.
    pub fn validate(&self) -> ValidationReport {
        let (l, m) = (self.scalars.lattice(), &self.carrier);
        let mut report = ValidationReport::default();
        let ln = |x: Elem| l.name(x).to_string();
        let mn = |x: Elem| m.name(x).to_string();
        for x in m.elements() {
            if self.act(l.top(), x) != x {
                report.push("unit", vec![mn(x)]);
            }
            if self.act(l.bottom(), x) != m.bottom() {
                report.push("zero", vec![mn(x)]);
            }
        }
        for a in l.elements() {
            if self.act(a, m.bottom()) != m.bottom() {
                report.push("carrier-join", vec![ln(a), "(empty join)".to_string()]);
            }
            for b in l.elements() {
                for x in m.elements() {
                    if self.act(l.join(a, b), x) != m.join(self.act(a, x), self.act(b, x)) {
                        report.push("scalar-join", vec![ln(a), ln(b), mn(x)]);
                    }
                    if self.act(self.scalars.mul(a, b), x) != self.act(a, self.act(b, x)) {
                        report.push("associativity", vec![ln(a), ln(b), mn(x)]);
                    }
                }
            }
            for x in m.elements() {
                for y in m.elements() {
                    if self.act(a, m.join(x, y)) != m.join(self.act(a, x), self.act(a, y)) {
                        report.push("carrier-join", vec![ln(a), mn(x), mn(y)]);
                    }
                }
            }
        }
        report
    }

    /// `(O_M:I_M) = 0`.
    pub fn is_faithful(&self) -> bool {
        self.residual_mm(self.bottom(), self.top()) == self.scalars.lattice().bottom()
    }

    /// Every `N` has the form `a·I_M`.
    pub fn is_multiplication_module(&self) -> bool {
        let l = self.scalars.lattice();
        self.carrier
            .elements()
            .all(|n| l.elements().any(|a| self.act_top(a) == n))
    }

    pub fn is_meet_principal(&self, n: Elem) -> bool {
        let (l, m) = (self.scalars.lattice(), &self.carrier);
        l.elements().all(|b| {
            m.elements().all(|bb| {
                self.act(l.meet(b, self.residual_mm(bb, n)), n) == m.meet(self.act(b, n), bb)
            })
        })
    }

    pub fn is_join_principal(&self, n: Elem) -> bool {
        let (l, m) = (self.scalars.lattice(), &self.carrier);
        l.elements().all(|b| {
            m.elements().all(|bb| {
                l.join(b, self.residual_mm(bb, n))
                    == self.residual_mm(m.join(self.act(b, n), bb), n)
            })
        })
    }

    /// `(meet principal, join principal)`.
    pub fn principal_flags(&self, n: Elem) -> (bool, bool) {
        (self.is_meet_principal(n), self.is_join_principal(n))
    }

    pub fn is_principal(&self, n: Elem) -> bool {
        self.is_meet_principal(n) && self.is_join_principal(n)
    }

    pub fn is_pg_module(&self) -> bool {
        let m = &self.carrier;
        let principal: Vec<Elem> = m.elements().filter(|&n| self.is_principal(n)).collect();
        m.elements()
            .all(|n| m.join_all(principal.iter().copied().filter(|&p| m.leq(p, n))) == n)
    }

    /// `∧(aα·I_M) = (∧aα)·I_M` for the given non-empty scalar family.
    pub fn check_meet_distribution(&self, family: &[Elem]) -> bool {
        assert!(
            !family.is_empty(),
            "meet distribution needs a non-empty family"
        );
        let (l, m) = (self.scalars.lattice(), &self.carrier);
        let lhs = m.meet_all(family.iter().map(|&a| self.act_top(a)));
        let rhs = self.act_top(l.meet_all(family.iter().copied()));
        lhs == rhs
    }

    /// Some scalar `a` with `a·I_M = N`, the least-named one.
    pub fn generator(&self, n: Elem) -> Option<Elem> {
        self.scalars.elements().find(|&a| self.act_top(a) == n)
    }

    pub fn is_maximal(&self, n: Elem) -> bool {
        let m = &self.carrier;
        self.is_proper(n) && !m.elements().any(|b| m.lt(n, b) && b != m.top())
    }
}

/// Standing hypotheses that several theorems assume, computed once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisFlags {
    pub faithful: bool,
    pub multiplication_module: bool,
    pub pg_lattice: bool,
    pub pg_module: bool,
    /// Always true: every element of a finite lattice is compact.
    pub im_compact: bool,
}

impl HypothesisFlags {
    /// `L` a PG-lattice and `M` a faithful multiplication PG-module with
    /// `I_M` compact.
    pub fn full(&self) -> bool {
        self.pg_lattice
            && self.faithful
            && self.multiplication_module
            && self.pg_module
            && self.im_compact
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("multiplication table is invalid:\n{0}")]
    InvalidMultiplication(ValidationReport),
    #[error("module action is invalid:\n{0}")]
    InvalidModule(ValidationReport),
}

/// A validated module plus its cached hypothesis flags.
#[derive(Debug, Clone)]
pub struct InstanceBundle {
    name: String,
    module: LatticeModule,
    flags: HypothesisFlags,
}

impl InstanceBundle {
    pub fn new(name: impl Into<String>, module: LatticeModule) -> Result<Self, InstanceError> {
        let mul_report = module.scalars().validate();
        if !mul_report.is_ok() {
            return Err(InstanceError::InvalidMultiplication(mul_report));
        }
        let mod_report = module.validate();
        if !mod_report.is_ok() {
            return Err(InstanceError::InvalidModule(mod_report));
        }
        let flags = HypothesisFlags {
            faithful: module.is_faithful(),
            multiplication_module: module.is_multiplication_module(),
            pg_lattice: module.scalars().is_pg(),
            pg_module: module.is_pg_module(),
            im_compact: true,
        };
        Ok(InstanceBundle {
            name: name.into(),
            module,
            flags,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn module(&self) -> &LatticeModule {
        &self.module
    }

    pub fn flags(&self) -> HypothesisFlags {
        self.flags
    }
}

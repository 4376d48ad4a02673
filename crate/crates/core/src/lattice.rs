//! Finite bounded lattices and multiplicative lattices.
//!
//! Elements are stored by index. Indices follow the lexicographic order of
//! the element names, so iterating `0..len` visits elements in name order and
//! every witness search is deterministic.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::report::ValidationReport;

/// Index of an element inside a [`Lattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("element `{0}` is declared twice")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: `{0}` <= `{1}` <= `{0}`")]
    NotAPartialOrder(String, String),
    #[error("`{a}` and `{b}` have no unique {op}")]
    NotALattice {
        a: String,
        b: String,
        op: &'static str,
    },
}

/// A finite bounded lattice with precomputed order, meet and join tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    // leq[a * n + b] holds a <= b
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("elements", &self.names)
            .field("bottom", &self.name(self.bottom))
            .field("top", &self.name(self.top))
            .finish()
    }
}

impl Lattice {
    /// Builds a lattice from element names and any generating set of order
    /// pairs `(a, b)` meaning `a <= b`. The reflexive-transitive closure is
    /// taken before meets and joins are computed.
    pub fn build<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self, LatticeError> {
        if elements.is_empty() {
            return Err(LatticeError::Empty);
        }
        let mut names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(LatticeError::DuplicateElement(w[0].clone()));
        }
        let index: HashMap<String, Elem> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), Elem(i)))
            .collect();
        let n = names.len();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            leq[a.0 * n + b.0] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(LatticeError::NotAPartialOrder(
                        names[i].clone(),
                        names[j].clone(),
                    ));
                }
            }
        }

        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for a in 0..n {
            for b in a..n {
                let glb = extremal_bound(n, &leq, |x| leq[x * n + a] && leq[x * n + b], true);
                let lub = extremal_bound(n, &leq, |x| leq[a * n + x] && leq[b * n + x], false);
                let err = |op| LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    op,
                };
                let glb = glb.ok_or_else(|| err("meet"))?;
                let lub = lub.ok_or_else(|| err("join"))?;
                meet[a * n + b] = Elem(glb);
                meet[b * n + a] = Elem(glb);
                join[a * n + b] = Elem(lub);
                join[b * n + a] = Elem(lub);
            }
        }
        // With all binary meets and joins present, the meet (join) of
        // everything is the global bottom (top).
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x].0);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x].0);
        Ok(Lattice {
            names,
            index,
            leq,
            meet,
            join,
            bottom: Elem(bottom),
            top: Elem(top),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All elements in lexicographic name order.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.names.len()).map(Elem)
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem(&self, name: &str) -> Option<Elem> {
        self.index.get(name).copied()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.0 * self.len() + b.0]
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.0 * self.len() + b.0]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.0 * self.len() + b.0]
    }

    /// Meet of a family; the empty meet is the top element.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a family; the empty join is the bottom element.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram, sorted.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if self.lt(a, b) && !self.elements().any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_distributive(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                self.elements().all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    /// Whether the given elements are pairwise comparable.
    pub fn is_chain(&self, items: &[Elem]) -> bool {
        items.iter().enumerate().all(|(i, &a)| {
            items[i + 1..]
                .iter()
                .all(|&b| self.leq(a, b) || self.leq(b, a))
        })
    }
}

/// Finds the greatest (`greatest = true`) or least element of the set picked
/// by `member`, provided it is unique in the order.
fn extremal_bound(
    n: usize,
    leq: &[bool],
    member: impl Fn(usize) -> bool,
    greatest: bool,
) -> Option<usize> {
    let set: Vec<usize> = (0..n).filter(|&x| member(x)).collect();
    set.iter().copied().find(|&c| {
        set.iter().all(|&y| {
            if greatest {
                leq[y * n + c]
            } else {
                leq[c * n + y]
            }
        })
    })
}

/// A finite lattice with a commutative, associative, join-distributive
/// multiplication whose identity is the top element.
///
/// Construction does not validate the table; call [`MulLattice::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulLattice {
    base: Lattice,
    mul: Vec<Elem>,
    // x^|L| for each x: the power sequence is decreasing on a valid table,
    // so this is its stable value.
    stable_power: Vec<Elem>,
    residual: Vec<Elem>,
    radical: Vec<Elem>,
}

impl MulLattice {
    /// Builds the multiplication table by evaluating `f` on every ordered pair.
    pub fn from_fn(base: Lattice, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let n = base.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in base.elements() {
            for b in base.elements() {
                mul.push(f(a, b));
            }
        }
        let mut lat = MulLattice {
            base,
            mul,
            stable_power: Vec::new(),
            residual: Vec::new(),
            radical: Vec::new(),
        };
        lat.stable_power = lat.base.elements().map(|x| lat.power(x, n)).collect();
        let l = &lat.base;
        lat.residual = pairs(l)
            .map(|(a, b)| l.join_all(l.elements().filter(|&x| l.leq(lat.mul(x, b), a))))
            .collect();
        lat.radical = l
            .elements()
            .map(|a| l.join_all(l.elements().filter(|&x| lat.some_power_below(x, a))))
            .collect();
        lat
    }

    /// The frame structure: multiplication is the lattice meet.
    pub fn with_meet(base: Lattice) -> Self {
        let b = base.clone();
        Self::from_fn(base, move |x, y| b.meet(x, y))
    }

    pub fn lattice(&self) -> &Lattice {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        self.base.elements()
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a.0 * self.base.len() + b.0]
    }

    /// `x^n` for `n >= 1`.
    pub fn power(&self, x: Elem, n: usize) -> Elem {
        assert!(n >= 1, "powers start at 1");
        (1..n).fold(x, |acc, _| self.mul(acc, x))
    }

    /// Whether `x^n <= a` for some `1 <= n <= |L|`.
    pub fn some_power_below(&self, x: Elem, a: Elem) -> bool {
        self.base.leq(self.stable_power[x.0], a)
    }

    /// Checks every multiplication axiom and reports every violation.
    pub fn validate(&self) -> ValidationReport {
        let l = &self.base;
        let names = |xs: &[Elem]| {
            xs.iter()
                .map(|&x| l.name(x).to_string())
                .collect::<Vec<_>>()
        };
        let mut report = ValidationReport::default();
        for a in l.elements() {
            if self.mul(l.top(), a) != a {
                report.push("identity", names(&[a]));
            }
            if self.mul(l.bottom(), a) != l.bottom() {
                report.push("annihilator", names(&[a]));
            }
            for b in l.elements() {
                if self.mul(a, b) != self.mul(b, a) {
                    report.push("commutativity", names(&[a, b]));
                }
                if !l.leq(self.mul(a, b), l.meet(a, b)) {
                    report.push("product-below-meet", names(&[a, b]));
                }
                for c in l.elements() {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        report.push("associativity", names(&[a, b, c]));
                    }
                    if self.mul(a, l.join(b, c)) != l.join(self.mul(a, b), self.mul(a, c)) {
                        report.push("join-distributivity", names(&[a, b, c]));
                    }
                }
            }
        }
        report
    }

    /// Residual `(a:b)`: the join of all `x` with `x·b <= a`.
    pub fn residual(&self, a: Elem, b: Elem) -> Elem {
        self.residual[a.0 * self.base.len() + b.0]
    }

    /// Radical: the join of all `x` some power of which lies below `a`.
    pub fn radical(&self, a: Elem) -> Elem {
        self.radical[a.0]
    }

    pub fn is_proper(&self, a: Elem) -> bool {
        a != self.base.top()
    }

    pub fn is_meet_principal(&self, e: Elem) -> bool {
        let l = &self.base;
        l.elements().all(|a| {
            l.elements()
                .all(|b| l.meet(a, self.mul(b, e)) == self.mul(l.meet(self.residual(a, e), b), e))
        })
    }

    pub fn is_join_principal(&self, e: Elem) -> bool {
        let l = &self.base;
        l.elements().all(|a| {
            l.elements().all(|b| {
                self.residual(l.join(self.mul(a, e), b), e) == l.join(self.residual(b, e), a)
            })
        })
    }

    /// `(meet principal, join principal)`.
    pub fn principal_flags(&self, e: Elem) -> (bool, bool) {
        (self.is_meet_principal(e), self.is_join_principal(e))
    }

    pub fn is_principal(&self, e: Elem) -> bool {
        self.is_meet_principal(e) && self.is_join_principal(e)
    }

    /// Every element is the join of the principal elements below it.
    pub fn is_pg(&self) -> bool {
        let l = &self.base;
        let principal: Vec<Elem> = l.elements().filter(|&e| self.is_principal(e)).collect();
        l.elements()
            .all(|a| l.join_all(principal.iter().copied().filter(|&p| l.leq(p, a))) == a)
    }

    pub fn is_maximal(&self, p: Elem) -> bool {
        let l = &self.base;
        self.is_proper(p) && !l.elements().any(|x| l.lt(p, x) && x != l.top())
    }

    /// `ab <= p` forces `a <= p` or `b <= p`.
    pub fn is_prime(&self, p: Elem) -> bool {
        self.is_proper(p) && self.prime_counterexample(p).is_none()
    }

    /// First `(a, b)` with `ab <= p`, `a !<= p`, `b !<= p`.
    pub fn prime_counterexample(&self, p: Elem) -> Option<(Elem, Elem)> {
        let l = &self.base;
        pairs(l).find(|&(a, b)| l.leq(self.mul(a, b), p) && !l.leq(a, p) && !l.leq(b, p))
    }

    /// `ab <= p` forces `a <= p` or `b^n <= p` for some `n`.
    pub fn is_primary(&self, p: Elem) -> bool {
        self.is_proper(p) && self.primary_counterexample(p).is_none()
    }

    pub fn primary_counterexample(&self, p: Elem) -> Option<(Elem, Elem)> {
        let l = &self.base;
        pairs(l).find(|&(a, b)| {
            l.leq(self.mul(a, b), p) && !l.leq(a, p) && !self.some_power_below(b, p)
        })
    }

    /// `abc <= q` forces `ab <= q`, `bc <= q` or `ca <= q`.
    pub fn is_two_absorbing(&self, q: Elem) -> bool {
        self.is_proper(q) && self.two_absorbing_counterexample(q).is_none()
    }

    pub fn two_absorbing_counterexample(&self, q: Elem) -> Option<(Elem, Elem, Elem)> {
        self.absorbing_counterexample(q, q)
    }

    /// `abc <= q` forces `ab <= q`, `bc <= √q` or `ca <= √q`.
    pub fn is_two_absorbing_primary(&self, q: Elem) -> bool {
        self.is_proper(q) && self.absorbing_counterexample(q, self.radical(q)).is_none()
    }

    fn absorbing_counterexample(&self, q: Elem, relaxed: Elem) -> Option<(Elem, Elem, Elem)> {
        let l = &self.base;
        triples(l).find(|&(a, b, c)| {
            let ab = self.mul(a, b);
            l.leq(self.mul(ab, c), q)
                && !l.leq(ab, q)
                && !l.leq(self.mul(b, c), relaxed)
                && !l.leq(self.mul(c, a), relaxed)
        })
    }
}

pub(crate) fn pairs(l: &Lattice) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    l.elements()
        .flat_map(move |a| l.elements().map(move |b| (a, b)))
}

pub(crate) fn triples(l: &Lattice) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
    pairs(l).flat_map(move |(a, b)| l.elements().map(move |c| (a, b, c)))
}

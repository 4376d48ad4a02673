//! Expansion functions (inflationary monotone self-maps) on `M` and on `L`,
//! and the δ-primary predicates they induce.

use std::fmt;

use thiserror::Error;

use crate::lattice::{pairs, Elem, Lattice, MulLattice};
use crate::module::LatticeModule;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("{label} is not inflationary at `{element}`")]
    NotInflationary { label: String, element: String },
    #[error("{label} is not monotone: `{lower}` <= `{upper}` but images are not ordered")]
    NotMonotone {
        label: String,
        lower: String,
        upper: String,
    },
    #[error("{label}: table has {got} entries, expected {expected}")]
    WrongSize {
        label: String,
        got: usize,
        expected: usize,
    },
}

/// How an expansion was obtained; rendered in reports.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Delta0,
    Delta1,
    Delta2,
    /// The largest expansion, sending everything to the top.
    Top,
    EDelta(Box<Label>),
    Meet(Box<Label>, Box<Label>),
    Custom(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Delta0 => write!(f, "delta0"),
            Label::Delta1 => write!(f, "delta1"),
            Label::Delta2 => write!(f, "delta2"),
            Label::Top => write!(f, "top"),
            Label::EDelta(d) => write!(f, "E({d})"),
            Label::Meet(a, b) => write!(f, "meet({a},{b})"),
            Label::Custom(name) => write!(f, "{name}"),
        }
    }
}

/// Checks `x <= t(x)` and `x <= y ⇒ t(x) <= t(y)` on a lattice.
pub fn check_expansion_axioms(
    lat: &Lattice,
    label: &str,
    table: &[Elem],
) -> Result<(), ExpansionError> {
    if table.len() != lat.len() {
        return Err(ExpansionError::WrongSize {
            label: label.to_string(),
            got: table.len(),
            expected: lat.len(),
        });
    }
    if let Some(x) = lat.elements().find(|&x| !lat.leq(x, table[x.0])) {
        return Err(ExpansionError::NotInflationary {
            label: label.to_string(),
            element: lat.name(x).to_string(),
        });
    }
    if let Some((x, y)) =
        pairs(lat).find(|&(x, y)| lat.leq(x, y) && !lat.leq(table[x.0], table[y.0]))
    {
        return Err(ExpansionError::NotMonotone {
            label: label.to_string(),
            lower: lat.name(x).to_string(),
            upper: lat.name(y).to_string(),
        });
    }
    Ok(())
}

fn is_meet_preserving(lat: &Lattice, table: &[Elem]) -> bool {
    pairs(lat).all(|(a, b)| table[lat.meet(a, b).0] == lat.meet(table[a.0], table[b.0]))
}

/// A validated expansion function on the carrier `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionM {
    label: Label,
    table: Vec<Elem>,
}

impl ExpansionM {
    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a.0]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// Validates a user table against the expansion axioms.
    pub fn from_table(
        m: &LatticeModule,
        label: Label,
        table: Vec<Elem>,
    ) -> Result<Self, ExpansionError> {
        check_expansion_axioms(m.carrier(), &label.to_string(), &table)?;
        Ok(ExpansionM { label, table })
    }

    /// The identity.
    pub fn delta0(m: &LatticeModule) -> Self {
        ExpansionM {
            label: Label::Delta0,
            table: m.carrier().elements().collect(),
        }
    }

    /// `A ↦ (√(A:I_M))·I_M`. Fails when the result is not inflationary,
    /// which can only happen off multiplication modules.
    pub fn delta1(m: &LatticeModule) -> Result<Self, ExpansionError> {
        let table = m
            .carrier()
            .elements()
            .map(|a| m.act_top(m.sqrt_colon_top(a)))
            .collect();
        Self::from_table(m, Label::Delta1, table)
    }

    /// `A ↦ ∧{H maximal | A <= H}`, with `I_M ↦ I_M`.
    pub fn delta2(m: &LatticeModule) -> Self {
        let c = m.carrier();
        let maximal: Vec<Elem> = c.elements().filter(|&h| m.is_maximal(h)).collect();
        let table = c
            .elements()
            .map(|a| {
                if a == c.top() {
                    c.top()
                } else {
                    c.meet_all(maximal.iter().copied().filter(|&h| c.leq(a, h)))
                }
            })
            .collect();
        ExpansionM {
            label: Label::Delta2,
            table,
        }
    }

    /// The constant map to `I_M`.
    pub fn top(m: &LatticeModule) -> Self {
        ExpansionM {
            label: Label::Top,
            table: vec![m.top(); m.carrier().len()],
        }
    }

    /// Pointwise meet of two expansions, revalidated.
    pub fn meet(m: &LatticeModule, a: &ExpansionM, b: &ExpansionM) -> Result<Self, ExpansionError> {
        let c = m.carrier();
        let table = meet_tables(c, &a.table, &b.table);
        Self::from_table(
            m,
            Label::Meet(Box::new(a.label.clone()), Box::new(b.label.clone())),
            table,
        )
    }

    /// `A ↦ ∧{J δ-primary | A <= J}`, with `I_M ↦ I_M`, revalidated.
    pub fn e_delta(m: &LatticeModule, d: &ExpansionM) -> Result<Self, ExpansionError> {
        Self::from_table(
            m,
            Label::EDelta(Box::new(d.label.clone())),
            e_delta_table(m, d),
        )
    }

    pub fn is_meet_preserving(&self, m: &LatticeModule) -> bool {
        is_meet_preserving(m.carrier(), &self.table)
    }

    /// Pointwise `self <= other`.
    pub fn below(&self, m: &LatticeModule, other: &ExpansionM) -> bool {
        let c = m.carrier();
        c.elements().all(|a| c.leq(self.apply(a), other.apply(a)))
    }
}

pub(crate) fn meet_tables(lat: &Lattice, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    lat.elements().map(|x| lat.meet(a[x.0], b[x.0])).collect()
}

/// Raw `E_δ` table, before validation.
pub(crate) fn e_delta_table(m: &LatticeModule, d: &ExpansionM) -> Vec<Elem> {
    let c = m.carrier();
    let primaries: Vec<Elem> = c
        .elements()
        .filter(|&j| is_delta_primary(m, d, j))
        .collect();
    c.elements()
        .map(|a| {
            if a == c.top() {
                c.top()
            } else {
                c.meet_all(primaries.iter().copied().filter(|&j| c.leq(a, j)))
            }
        })
        .collect()
}

/// `P` proper and `aA <= P ⇒ A <= P or a·I_M <= δ(P)`.
pub fn is_delta_primary(m: &LatticeModule, d: &ExpansionM, p: Elem) -> bool {
    let c = m.carrier();
    let dp = d.apply(p);
    m.is_proper(p)
        && module_pairs(m)
            .all(|(a, x)| !c.leq(m.act(a, x), p) || c.leq(x, p) || c.leq(m.act_top(a), dp))
}

/// The alternative form: `aA <= P ⇒ A <= δ(P) or a·I_M <= P`.
pub fn is_delta_primary_alt(m: &LatticeModule, d: &ExpansionM, p: Elem) -> bool {
    let c = m.carrier();
    let dp = d.apply(p);
    m.is_proper(p)
        && module_pairs(m)
            .all(|(a, x)| !c.leq(m.act(a, x), p) || c.leq(x, dp) || c.leq(m.act_top(a), p))
}

/// All `(scalar, carrier)` pairs in name order.
pub(crate) fn module_pairs(m: &LatticeModule) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    l.elements()
        .flat_map(move |a| c.elements().map(move |x| (a, x)))
}

/// A validated expansion function on the scalar lattice `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionL {
    label: Label,
    table: Vec<Elem>,
}

impl ExpansionL {
    pub fn label(&self) -> &Label {
        &self.label
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a.0]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn from_table(
        l: &MulLattice,
        label: Label,
        table: Vec<Elem>,
    ) -> Result<Self, ExpansionError> {
        check_expansion_axioms(l.lattice(), &label.to_string(), &table)?;
        Ok(ExpansionL { label, table })
    }

    /// `(δ0)_L`, the identity.
    pub fn identity(l: &MulLattice) -> Self {
        ExpansionL {
            label: Label::Delta0,
            table: l.elements().collect(),
        }
    }

    /// `(δ1)_L`, the radical.
    pub fn radical(l: &MulLattice) -> Self {
        ExpansionL {
            label: Label::Delta1,
            table: l.elements().map(|a| l.radical(a)).collect(),
        }
    }

    /// The constant map to `1`.
    pub fn top(l: &MulLattice) -> Self {
        ExpansionL {
            label: Label::Top,
            table: vec![l.lattice().top(); l.len()],
        }
    }

    pub fn meet(l: &MulLattice, a: &ExpansionL, b: &ExpansionL) -> Result<Self, ExpansionError> {
        let table = meet_tables(l.lattice(), &a.table, &b.table);
        Self::from_table(
            l,
            Label::Meet(Box::new(a.label.clone()), Box::new(b.label.clone())),
            table,
        )
    }

    pub fn is_meet_preserving(&self, l: &MulLattice) -> bool {
        is_meet_preserving(l.lattice(), &self.table)
    }
}

/// `P` proper and `aA <= P ⇒ A <= P or a <= δ_L((P:I_M))`.
pub fn is_delta_l_primary(m: &LatticeModule, d: &ExpansionL, p: Elem) -> bool {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    let bound = d.apply(m.colon_top(p));
    m.is_proper(p)
        && module_pairs(m).all(|(a, x)| !c.leq(m.act(a, x), p) || c.leq(x, p) || l.leq(a, bound))
}

/// δ_L-primary element of `L` itself: `p` proper and `ab <= p ⇒ a <= p or b <= δ_L(p)`.
pub fn is_delta_l_primary_in_l(l: &MulLattice, d: &ExpansionL, p: Elem) -> bool {
    let lat = l.lattice();
    let dp = d.apply(p);
    l.is_proper(p)
        && pairs(lat).all(|(a, b)| !lat.leq(l.mul(a, b), p) || lat.leq(a, p) || lat.leq(b, dp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond_module() -> LatticeModule {
        let l = Lattice::build(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        LatticeModule::over_itself(MulLattice::with_meet(l))
    }

    #[test]
    fn identity_and_top_tables_are_expansions() {
        let m = diamond_module();
        let d0 = ExpansionM::delta0(&m);
        let t = ExpansionM::top(&m);
        assert!(
            ExpansionM::from_table(&m, Label::Custom("id".into()), d0.table().to_vec()).is_ok()
        );
        assert!(ExpansionM::from_table(&m, Label::Custom("t".into()), t.table().to_vec()).is_ok());
        assert!(d0.below(&m, &t));
        assert_eq!(ExpansionM::meet(&m, &d0, &t).unwrap().table(), d0.table());
    }

    #[test]
    fn non_monotone_table_is_rejected() {
        let m = diamond_module();
        let c = m.carrier();
        let e = |s| c.elem(s).unwrap();
        // 0 -> a but a -> a, b -> b: 0 <= b while a !<= b.
        let table = vec![e("a"), e("1"), e("a"), e("b")];
        let err = ExpansionM::from_table(&m, Label::Custom("bad".into()), table).unwrap_err();
        assert!(matches!(err, ExpansionError::NotMonotone { .. }), "{err}");
        let table = vec![e("0"), e("0"), e("a"), e("b")];
        let err = ExpansionM::from_table(&m, Label::Custom("bad".into()), table).unwrap_err();
        assert_eq!(
            err,
            ExpansionError::NotInflationary {
                label: "bad".into(),
                element: "1".into()
            }
        );
    }

    #[test]
    fn delta_primary_requires_proper() {
        let m = diamond_module();
        for d in [
            ExpansionM::delta0(&m),
            ExpansionM::top(&m),
            ExpansionM::delta2(&m),
        ] {
            assert!(!is_delta_primary(&m, &d, m.top()));
            assert!(!is_delta_primary_alt(&m, &d, m.top()));
        }
        let dl = ExpansionL::identity(m.scalars());
        assert!(!is_delta_l_primary(&m, &dl, m.top()));
    }

    #[test]
    fn labels_render() {
        let l = Label::Meet(
            Box::new(Label::Delta0),
            Box::new(Label::EDelta(Box::new(Label::Delta2))),
        );
        assert_eq!(l.to_string(), "meet(delta0,E(delta2))");
    }
}

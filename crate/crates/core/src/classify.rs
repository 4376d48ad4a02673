//! Element classifications for carrier elements of a lattice module.

use thiserror::Error;

use crate::lattice::{pairs, Elem};
use crate::module::LatticeModule;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("`{0}` is the top element and has no radical")]
    NotProper(String),
}

/// Every classification flag of a carrier element `N`, with `(N:I_M)` and
/// `√(N:I_M)`. All flags are false for `I_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MClassification {
    pub element: Elem,
    pub proper: bool,
    pub maximal: bool,
    pub prime: bool,
    /// `Some(p)` when `N` is prime and `p = (N:I_M)` is prime in `L`.
    pub p_prime: Option<Elem>,
    pub primary: bool,
    /// `Some(p)` when `N` is primary and `p = √(N:I_M)` is prime in `L`.
    pub p_primary: Option<Elem>,
    pub semiprime: bool,
    pub semiprimary: bool,
    pub radical_element: bool,
    pub meet_prime: bool,
    pub two_absorbing: bool,
    pub two_absorbing_primary: bool,
    pub colon_im: Elem,
    pub sqrt_colon_im: Elem,
    /// `(a, X)` with `aX <= N`, `X !<= N`, `aI_M !<= N`.
    pub prime_witness: Option<(Elem, Elem)>,
    /// `(a, X)` with `aX <= N`, `X !<= N` and no power of `a` sending `I_M` below `N`.
    pub primary_witness: Option<(Elem, Elem)>,
    /// `(a, b, X)` violating 2-absorption.
    pub two_absorbing_witness: Option<(Elem, Elem, Elem)>,
}

pub fn prime_witness(m: &LatticeModule, n: Elem) -> Option<(Elem, Elem)> {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    l.elements()
        .flat_map(|a| c.elements().map(move |x| (a, x)))
        .find(|&(a, x)| c.leq(m.act(a, x), n) && !c.leq(x, n) && !c.leq(m.act_top(a), n))
}

pub fn primary_witness(m: &LatticeModule, n: Elem) -> Option<(Elem, Elem)> {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    let colon = m.colon_top(n);
    l.elements()
        .flat_map(|a| c.elements().map(move |x| (a, x)))
        .find(|&(a, x)| {
            c.leq(m.act(a, x), n) && !c.leq(x, n) && !m.scalars().some_power_below(a, colon)
        })
}

/// Witness search shared by 2-absorbing (`relaxed = N`) and 2-absorbing
/// primary (`relaxed = √(N:I_M)·I_M`).
fn absorbing_witness(m: &LatticeModule, q: Elem, relaxed: Elem) -> Option<(Elem, Elem, Elem)> {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    let s = m.scalars();
    let colon = m.colon_top(q);
    pairs(l)
        .flat_map(|(a, b)| c.elements().map(move |x| (a, b, x)))
        .find(|&(a, b, x)| {
            let ab = s.mul(a, b);
            c.leq(m.act(ab, x), q)
                && !l.leq(ab, colon)
                && !c.leq(m.act(b, x), relaxed)
                && !c.leq(m.act(a, x), relaxed)
        })
}

pub fn two_absorbing_witness(m: &LatticeModule, q: Elem) -> Option<(Elem, Elem, Elem)> {
    absorbing_witness(m, q, q)
}

pub fn is_prime(m: &LatticeModule, n: Elem) -> bool {
    m.is_proper(n) && prime_witness(m, n).is_none()
}

pub fn is_primary(m: &LatticeModule, n: Elem) -> bool {
    m.is_proper(n) && primary_witness(m, n).is_none()
}

pub fn is_semiprime(m: &LatticeModule, n: Elem) -> bool {
    let c = m.carrier();
    let s = m.scalars();
    m.is_proper(n)
        && pairs(s.lattice()).all(|(a, b)| {
            !c.leq(m.act_top(s.mul(a, b)), n) || c.leq(m.act_top(a), n) || c.leq(m.act_top(b), n)
        })
}

pub fn is_meet_prime(m: &LatticeModule, n: Elem) -> bool {
    let c = m.carrier();
    m.is_proper(n) && pairs(c).all(|(a, b)| !c.leq(c.meet(a, b), n) || c.leq(a, n) || c.leq(b, n))
}

pub fn is_two_absorbing(m: &LatticeModule, q: Elem) -> bool {
    m.is_proper(q) && two_absorbing_witness(m, q).is_none()
}

pub fn is_two_absorbing_primary(m: &LatticeModule, q: Elem) -> bool {
    m.is_proper(q) && absorbing_witness(m, q, m.act_top(m.sqrt_colon_top(q))).is_none()
}

pub fn classify_m(m: &LatticeModule, n: Elem) -> MClassification {
    let s = m.scalars();
    let colon_im = m.colon_top(n);
    let sqrt_colon_im = s.radical(colon_im);
    let proper = m.is_proper(n);
    let mut out = MClassification {
        element: n,
        proper,
        maximal: false,
        prime: false,
        p_prime: None,
        primary: false,
        p_primary: None,
        semiprime: false,
        semiprimary: false,
        radical_element: false,
        meet_prime: false,
        two_absorbing: false,
        two_absorbing_primary: false,
        colon_im,
        sqrt_colon_im,
        prime_witness: None,
        primary_witness: None,
        two_absorbing_witness: None,
    };
    if !proper {
        return out;
    }
    out.prime_witness = prime_witness(m, n);
    out.primary_witness = primary_witness(m, n);
    out.two_absorbing_witness = two_absorbing_witness(m, n);
    out.maximal = m.is_maximal(n);
    out.prime = out.prime_witness.is_none();
    out.primary = out.primary_witness.is_none();
    out.two_absorbing = out.two_absorbing_witness.is_none();
    out.p_prime = (out.prime && s.is_prime(colon_im)).then_some(colon_im);
    out.p_primary = (out.primary && s.is_prime(sqrt_colon_im)).then_some(sqrt_colon_im);
    out.semiprime = is_semiprime(m, n);
    out.semiprimary = s.is_prime(sqrt_colon_im);
    out.radical_element = colon_im == sqrt_colon_im;
    out.meet_prime = is_meet_prime(m, n);
    out.two_absorbing_primary = is_two_absorbing_primary(m, n);
    out
}

pub fn prime_elements(m: &LatticeModule) -> Vec<Elem> {
    m.carrier().elements().filter(|&p| is_prime(m, p)).collect()
}

/// `rad(N)`: the meet of all primes above `N` (`I_M` if there are none).
pub fn rad_m(m: &LatticeModule, n: Elem) -> Result<Elem, ClassifyError> {
    if !m.is_proper(n) {
        return Err(ClassifyError::NotProper(m.carrier().name(n).to_string()));
    }
    Ok(rad_from_primes(m, &prime_elements(m), n))
}

pub(crate) fn rad_from_primes(m: &LatticeModule, primes: &[Elem], n: Elem) -> Elem {
    let c = m.carrier();
    c.meet_all(primes.iter().copied().filter(|&p| c.leq(n, p)))
}

/// Primes `P >= X` with no prime strictly between `X` and `P`.
pub fn minimal_primes_over(m: &LatticeModule, x: Elem) -> Vec<Elem> {
    minimal_from_primes(m, &prime_elements(m), x)
}

pub(crate) fn minimal_from_primes(m: &LatticeModule, primes: &[Elem], x: Elem) -> Vec<Elem> {
    let c = m.carrier();
    let above: Vec<Elem> = primes.iter().copied().filter(|&p| c.leq(x, p)).collect();
    above
        .iter()
        .copied()
        .filter(|&p| !above.iter().any(|&q| c.lt(q, p)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Lattice, MulLattice};

    fn chain_module(k: usize) -> LatticeModule {
        let names: Vec<String> = (0..=k).map(|i| format!("c{i}")).collect();
        let pairs: Vec<(String, String)> = names
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        LatticeModule::over_itself(MulLattice::with_meet(
            Lattice::build(&names, &pairs).unwrap(),
        ))
    }

    #[test]
    fn top_is_never_classified() {
        let m = chain_module(2);
        let c = classify_m(&m, m.top());
        assert!(!c.proper && !c.prime && !c.primary && !c.two_absorbing && !c.meet_prime);
        assert_eq!(
            rad_m(&m, m.top()),
            Err(ClassifyError::NotProper("c2".into()))
        );
    }

    #[test]
    fn chain_frame_every_proper_element_is_prime() {
        let m = chain_module(3);
        for n in m.carrier().elements().filter(|&n| m.is_proper(n)) {
            let c = classify_m(&m, n);
            assert!(
                c.prime && c.primary && c.meet_prime && c.radical_element,
                "{n:?}"
            );
            assert_eq!(rad_m(&m, n).unwrap(), n);
            assert_eq!(minimal_primes_over(&m, n), vec![n]);
        }
    }
}

//! The ideal lattice of Z/12Z acting on itself.

use latmod::classify::{classify_m, minimal_primes_over, prime_elements, rad_m};
use latmod::expansion::{is_delta_l_primary, is_delta_primary};
use latmod::{gen_zn, Elem, ExpansionL, ExpansionM, InstanceBundle};

struct Z12 {
    bundle: InstanceBundle,
}

impl Z12 {
    fn new() -> Self {
        Z12 {
            bundle: gen_zn(12).unwrap(),
        }
    }

    fn e(&self, name: &str) -> Elem {
        self.bundle.module().carrier().elem(name).unwrap()
    }

    fn name(&self, e: Elem) -> &str {
        self.bundle.module().carrier().name(e)
    }
}

#[test]
fn residuals_and_radicals() {
    let z = Z12::new();
    let s = z.bundle.module().scalars();
    assert_eq!(s.residual(z.e("(4)"), z.e("(2)")), z.e("(2)"));
    assert_eq!(s.radical(z.e("(4)")), z.e("(2)"));
    assert_eq!(s.radical(z.e("(0)")), z.e("(6)"));
    assert_eq!(s.radical(z.e("(1)")), z.e("(1)"));
    assert_eq!(s.mul(z.e("(2)"), z.e("(6)")), z.e("(0)"));
    let m = z.bundle.module();
    assert_eq!(m.residual_ma(z.e("(4)"), z.e("(2)")), z.e("(2)"));
    assert_eq!(m.colon_top(z.e("(4)")), z.e("(4)"));
    for a in s.elements() {
        assert_eq!(s.residual(a, s.lattice().top()), a);
        assert_eq!(s.residual(s.lattice().top(), a), s.lattice().top());
        assert_eq!(m.residual_mm(a, a), s.lattice().top());
    }
}

#[test]
fn standing_hypotheses_hold() {
    let z = Z12::new();
    let m = z.bundle.module();
    assert!(m
        .scalars()
        .elements()
        .all(|e| m.scalars().principal_flags(e) == (true, true)));
    assert!(m.scalars().is_pg() && m.is_pg_module());
    assert!(m.is_faithful() && m.is_multiplication_module());
    assert!(z.bundle.flags().full());
    assert!(m.check_meet_distribution(&[z.e("(2)"), z.e("(3)")]));
}

#[test]
fn prime_and_primary_elements() {
    let z = Z12::new();
    let m = z.bundle.module();
    let primes: Vec<&str> = prime_elements(m).into_iter().map(|p| z.name(p)).collect();
    assert_eq!(primes, ["(2)", "(3)"]);

    let two = classify_m(m, z.e("(2)"));
    assert!(two.prime && two.maximal && two.meet_prime);

    let four = classify_m(m, z.e("(4)"));
    assert!(!four.prime && four.primary && four.semiprimary);
    let (a, x) = four.prime_witness.unwrap();
    let c = m.carrier();
    assert!(c.leq(m.act(a, x), four.element) && !c.leq(x, four.element));
    assert!(!c.leq(m.act_top(a), four.element));

    let zero = classify_m(m, z.e("(0)"));
    assert!(!zero.primary && !zero.two_absorbing);
    let (a, x) = zero.primary_witness.unwrap();
    assert!(c.leq(m.act(a, x), zero.element) && !c.leq(x, zero.element));
    assert!((1..=6).all(|k| !c.leq(m.act_top(m.scalars().power(a, k)), zero.element)));
    let (a, b, x) = zero.two_absorbing_witness.unwrap();
    let ab = m.scalars().mul(a, b);
    assert!(c.leq(m.act(ab, x), zero.element));
    assert!(!m.scalars().lattice().leq(ab, zero.colon_im));
    assert!(!c.leq(m.act(a, x), zero.element) && !c.leq(m.act(b, x), zero.element));

    assert!(classify_m(m, z.e("(6)")).two_absorbing);
}

#[test]
fn radical_and_minimal_primes() {
    let z = Z12::new();
    let m = z.bundle.module();
    assert_eq!(rad_m(m, z.e("(4)")), Ok(z.e("(2)")));
    assert_eq!(rad_m(m, z.e("(0)")), Ok(z.e("(6)")));
    assert_eq!(rad_m(m, z.e("(3)")), Ok(z.e("(3)")));
    assert!(rad_m(m, z.e("(1)")).is_err());
    assert_eq!(
        minimal_primes_over(m, z.e("(0)")),
        vec![z.e("(2)"), z.e("(3)")]
    );
    assert_eq!(minimal_primes_over(m, z.e("(4)")), vec![z.e("(2)")]);
}

#[test]
fn expansions() {
    let z = Z12::new();
    let m = z.bundle.module();
    let d0 = ExpansionM::delta0(m);
    let d1 = ExpansionM::delta1(m).unwrap();
    let d2 = ExpansionM::delta2(m);
    assert_eq!(d0.apply(z.e("(4)")), z.e("(4)"));
    assert_eq!(d1.apply(z.e("(4)")), z.e("(2)"));
    assert_eq!(d1.apply(z.e("(6)")), z.e("(6)"));
    assert_eq!(d1.apply(z.e("(1)")), z.e("(1)"));
    assert_eq!(d2.apply(z.e("(4)")), z.e("(2)"));
    assert_eq!(d2.apply(z.e("(0)")), z.e("(6)"));
    assert_eq!(d2.apply(z.e("(1)")), z.e("(1)"));
    assert_eq!(
        ExpansionM::meet(m, &d1, &d2).unwrap().apply(z.e("(4)")),
        z.e("(2)")
    );
    let e0 = ExpansionM::e_delta(m, &d0).unwrap();
    assert_eq!(e0.apply(z.e("(0)")), z.e("(6)"));
    assert_eq!(e0.apply(z.e("(2)")), z.e("(2)"));
    assert!(d0.is_meet_preserving(m) && d1.is_meet_preserving(m) && d2.is_meet_preserving(m));

    assert!(!is_delta_primary(m, &d0, z.e("(4)")));
    assert!(is_delta_primary(m, &d1, z.e("(4)")));
    assert!(!is_delta_primary(m, &d1, z.e("(1)")));
}

#[test]
fn expansions_on_the_scalars() {
    let z = Z12::new();
    let m = z.bundle.module();
    let id = ExpansionL::identity(m.scalars());
    let rad = ExpansionL::radical(m.scalars());
    assert!(is_delta_l_primary(m, &id, z.e("(2)")));
    assert!(is_delta_l_primary(m, &rad, z.e("(4)")));
    assert!(!is_delta_l_primary(m, &id, z.e("(4)")));
}

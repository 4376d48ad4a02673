use crate::classify::{classify_m, minimal_from_primes, rad_from_primes, MClassification};
use crate::expansion::{
    is_delta_l_primary, is_delta_l_primary_in_l, is_delta_primary, is_delta_primary_alt,
    ExpansionL, ExpansionM,
};
use crate::lattice::{Elem, Lattice, MulLattice};
use crate::module::{HypothesisFlags, InstanceBundle, LatticeModule};

/// Position of δ0 in the expansions on `M`.
pub(crate) const M_DELTA0: usize = 0;
/// Position of the identity in the expansions on `L`.
pub(crate) const L_IDENTITY: usize = 0;
/// Position of the radical in the expansions on `L`.
pub(crate) const L_RADICAL: usize = 1;

/// Everything the registry needs about one instance, computed up front.
///
/// The expansion family on `M` is δ0, δ1 (when it is an expansion), δ2, the
/// constant `I_M` map and any supplied tables, then `E_δ` of each of those,
/// then all pairwise meets. On `L` it is the identity, the radical, the
/// constant `1` map and any supplied tables. Constructions that fail
/// validation are left out here; the registry rebuilds them and reports the
/// failure against the statement that asserts them.
pub struct Context<'a> {
    bundle: &'a InstanceBundle,
    exp_m: Vec<ExpansionM>,
    exp_l: Vec<ExpansionL>,
    delta1: Option<usize>,
    classes: Vec<MClassification>,
    primes: Vec<Elem>,
    proper: Vec<Elem>,
    // [expansion][element]
    dp: Vec<Vec<bool>>,
    dp_alt: Vec<Vec<bool>>,
    dlp: Vec<Vec<bool>>,
    dlp_in_l: Vec<Vec<bool>>,
    // [expansion][expansion]
    below_m: Vec<Vec<bool>>,
    meet_pres_m: Vec<bool>,
    meet_pres_l: Vec<bool>,
    rad: Vec<Elem>,
    l_prime: Vec<bool>,
    l_2abs: Vec<bool>,
    l_2abs_primary: Vec<bool>,
}

impl<'a> Context<'a> {
    pub fn new(bundle: &'a InstanceBundle) -> Self {
        Self::with_expansions(bundle, Vec::new(), Vec::new())
    }

    /// Adds user-supplied expansions to the generated families.
    pub fn with_expansions(
        bundle: &'a InstanceBundle,
        extra_m: Vec<ExpansionM>,
        extra_l: Vec<ExpansionL>,
    ) -> Self {
        let m = bundle.module();
        let s = m.scalars();
        let c = m.carrier();

        let mut exp_m = vec![ExpansionM::delta0(m)];
        let delta1 = ExpansionM::delta1(m).ok().map(|d| {
            exp_m.push(d);
            exp_m.len() - 1
        });
        exp_m.push(ExpansionM::delta2(m));
        exp_m.push(ExpansionM::top(m));
        exp_m.extend(extra_m);
        let generators = exp_m.len();
        for i in 0..generators {
            if let Ok(e) = ExpansionM::e_delta(m, &exp_m[i]) {
                exp_m.push(e);
            }
        }
        let base = exp_m.len();
        for i in 0..base {
            for j in (i + 1)..base {
                if let Ok(e) = ExpansionM::meet(m, &exp_m[i], &exp_m[j]) {
                    exp_m.push(e);
                }
            }
        }

        let mut exp_l = vec![
            ExpansionL::identity(s),
            ExpansionL::radical(s),
            ExpansionL::top(s),
        ];
        exp_l.extend(extra_l);

        let classes: Vec<MClassification> = c.elements().map(|n| classify_m(m, n)).collect();
        let primes: Vec<Elem> = c.elements().filter(|n| classes[n.index()].prime).collect();
        let proper: Vec<Elem> = c.elements().filter(|&n| m.is_proper(n)).collect();
        let per_m = |f: &dyn Fn(&ExpansionM, Elem) -> bool| -> Vec<Vec<bool>> {
            exp_m
                .iter()
                .map(|d| c.elements().map(|p| f(d, p)).collect())
                .collect()
        };
        let dp = per_m(&|d, p| is_delta_primary(m, d, p));
        let dp_alt = per_m(&|d, p| is_delta_primary_alt(m, d, p));
        let dlp = exp_l
            .iter()
            .map(|d| c.elements().map(|p| is_delta_l_primary(m, d, p)).collect())
            .collect();
        let dlp_in_l = exp_l
            .iter()
            .map(|d| {
                s.elements()
                    .map(|p| is_delta_l_primary_in_l(s, d, p))
                    .collect()
            })
            .collect();
        let below_m = exp_m
            .iter()
            .map(|d| exp_m.iter().map(|g| d.below(m, g)).collect())
            .collect();
        let meet_pres_m = exp_m.iter().map(|d| d.is_meet_preserving(m)).collect();
        let meet_pres_l = exp_l.iter().map(|d| d.is_meet_preserving(s)).collect();
        let rad = c
            .elements()
            .map(|n| rad_from_primes(m, &primes, n))
            .collect();

        Context {
            bundle,
            exp_m,
            exp_l,
            delta1,
            classes,
            primes,
            proper,
            dp,
            dp_alt,
            dlp,
            dlp_in_l,
            below_m,
            meet_pres_m,
            meet_pres_l,
            rad,
            l_prime: s.elements().map(|x| s.is_prime(x)).collect(),
            l_2abs: s.elements().map(|x| s.is_two_absorbing(x)).collect(),
            l_2abs_primary: s
                .elements()
                .map(|x| s.is_two_absorbing_primary(x))
                .collect(),
        }
    }

    pub fn bundle(&self) -> &InstanceBundle {
        self.bundle
    }

    pub fn module(&self) -> &LatticeModule {
        self.bundle.module()
    }

    pub fn flags(&self) -> HypothesisFlags {
        self.bundle.flags()
    }

    pub fn expansions_m(&self) -> &[ExpansionM] {
        &self.exp_m
    }

    pub fn expansions_l(&self) -> &[ExpansionL] {
        &self.exp_l
    }

    /// Index of δ1 in [`Context::expansions_m`], when it is an expansion.
    pub fn delta1(&self) -> Option<usize> {
        self.delta1
    }

    /// Index of δ2, which directly follows δ0 and δ1.
    pub(crate) fn delta2(&self) -> usize {
        if self.delta1.is_some() {
            2
        } else {
            1
        }
    }

    pub(crate) fn carrier(&self) -> &Lattice {
        self.module().carrier()
    }

    pub(crate) fn scalars(&self) -> &MulLattice {
        self.module().scalars()
    }

    pub(crate) fn lat(&self) -> &Lattice {
        self.module().scalars().lattice()
    }

    pub fn class(&self, n: Elem) -> &MClassification {
        &self.classes[n.index()]
    }

    /// Proper carrier elements in name order.
    pub(crate) fn proper(&self) -> &[Elem] {
        &self.proper
    }

    pub(crate) fn delta_primary(&self, d: usize, p: Elem) -> bool {
        self.dp[d][p.index()]
    }

    pub(crate) fn delta_primary_alt(&self, d: usize, p: Elem) -> bool {
        self.dp_alt[d][p.index()]
    }

    pub(crate) fn delta_l_primary(&self, d: usize, p: Elem) -> bool {
        self.dlp[d][p.index()]
    }

    pub(crate) fn delta_l_primary_in_l(&self, d: usize, p: Elem) -> bool {
        self.dlp_in_l[d][p.index()]
    }

    /// Pointwise `δ <= γ`.
    pub(crate) fn below(&self, d: usize, g: usize) -> bool {
        self.below_m[d][g]
    }

    pub(crate) fn meet_preserving_m(&self, d: usize) -> bool {
        self.meet_pres_m[d]
    }

    pub(crate) fn meet_preserving_l(&self, d: usize) -> bool {
        self.meet_pres_l[d]
    }

    pub(crate) fn rad(&self, n: Elem) -> Elem {
        self.rad[n.index()]
    }

    pub(crate) fn minimal_primes_over(&self, x: Elem) -> Vec<Elem> {
        minimal_from_primes(self.module(), &self.primes, x)
    }

    /// δ1(N); callers are gated on δ1 existing.
    pub(crate) fn d1(&self, n: Elem) -> Elem {
        self.exp_m[self.delta1.expect("delta1 is an expansion here")].apply(n)
    }

    pub(crate) fn prime_l(&self, x: Elem) -> bool {
        self.l_prime[x.index()]
    }

    pub(crate) fn two_abs_l(&self, x: Elem) -> bool {
        self.l_2abs[x.index()]
    }

    pub(crate) fn two_abs_primary_l(&self, x: Elem) -> bool {
        self.l_2abs_primary[x.index()]
    }
}

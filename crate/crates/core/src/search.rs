//! Witness search over generated instance families.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::classify::classify_m;
use crate::expansion::{is_delta_primary, ExpansionM};
use crate::generate::{gen_frame, gen_zn, FrameShape};
use crate::module::InstanceBundle;
use crate::verify::{lookup, Context, Outcome, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search bound must be at least 1")]
    ZeroBound,
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("unknown goal `{0}`")]
    UnknownGoal(String),
    #[error("unknown family `{0}` (expected zn, frame-boolean or frame-chain)")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchGoal {
    /// Proper elements that are δ1-primary but not δ0-primary.
    Delta1NotDelta0,
    PrimaryNotPrime,
    TwoAbsorbingNotPrime,
    /// Instances on which the theorem FAILs.
    TheoremFail(String),
    /// Instances on which the theorem is VACUOUS.
    HypothesisBoundary(String),
}

impl fmt::Display for SearchGoal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchGoal::Delta1NotDelta0 => f.write_str("delta1-not-delta0"),
            SearchGoal::PrimaryNotPrime => f.write_str("primary-not-prime"),
            SearchGoal::TwoAbsorbingNotPrime => f.write_str("2abs-not-prime"),
            SearchGoal::TheoremFail(id) => write!(f, "theorem-fail({id})"),
            SearchGoal::HypothesisBoundary(id) => write!(f, "hypothesis-boundary({id})"),
        }
    }
}

impl FromStr for SearchGoal {
    type Err = SearchError;

    /// Accepts `theorem-fail(ID)` as well as `theorem-fail:ID`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let with_id = |prefix: &str| -> Option<String> {
            let rest = s.strip_prefix(prefix)?;
            let id = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix(':'))?;
            (!id.is_empty()).then(|| id.to_string())
        };
        match s {
            "delta1-not-delta0" => Ok(SearchGoal::Delta1NotDelta0),
            "primary-not-prime" => Ok(SearchGoal::PrimaryNotPrime),
            "2abs-not-prime" => Ok(SearchGoal::TwoAbsorbingNotPrime),
            _ => {
                if let Some(id) = with_id("theorem-fail") {
                    Ok(SearchGoal::TheoremFail(id))
                } else if let Some(id) = with_id("hypothesis-boundary") {
                    Ok(SearchGoal::HypothesisBoundary(id))
                } else {
                    Err(SearchError::UnknownGoal(s.to_string()))
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Zn,
    FrameBoolean,
    FrameChain,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Zn => "zn",
            Family::FrameBoolean => "frame-boolean",
            Family::FrameChain => "frame-chain",
        })
    }
}

impl FromStr for Family {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zn" => Ok(Family::Zn),
            "frame-boolean" => Ok(Family::FrameBoolean),
            "frame-chain" => Ok(Family::FrameChain),
            _ => Err(SearchError::UnknownFamily(s.to_string())),
        }
    }
}

impl Family {
    /// Size parameters up to `bound`: `n` in `2..=bound` for `Z_n`, `k` in
    /// `1..=min(bound, 4)` for Boolean frames and `1..=bound` for chains.
    pub fn parameters(self, bound: u64) -> Vec<u64> {
        match self {
            Family::Zn => (2..=bound).collect(),
            Family::FrameBoolean => (1..=bound.min(4)).collect(),
            Family::FrameChain => (1..=bound).collect(),
        }
    }

    pub fn instance(self, parameter: u64) -> InstanceBundle {
        let built = match self {
            Family::Zn => gen_zn(parameter),
            Family::FrameBoolean => gen_frame(FrameShape::Boolean(parameter as usize)),
            Family::FrameChain => gen_frame(FrameShape::Chain(parameter as usize)),
        };
        built.expect("family parameters are in range")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub instance: String,
    pub parameter: u64,
    pub witness: String,
}

/// Every witness for `goal` among the first members of `family`, in family
/// order and then element (or registry) order.
pub fn search(
    goal: &SearchGoal,
    family: Family,
    bound: u64,
) -> Result<Vec<SearchHit>, SearchError> {
    if bound == 0 {
        return Err(SearchError::ZeroBound);
    }
    if let SearchGoal::TheoremFail(id) | SearchGoal::HypothesisBoundary(id) = goal {
        lookup(id)?;
    }
    let per_instance: Vec<Vec<SearchHit>> = family
        .parameters(bound)
        .into_par_iter()
        .map(|k| {
            let bundle = family.instance(k);
            witnesses(goal, &bundle)
                .into_iter()
                .map(|witness| SearchHit {
                    instance: bundle.name().to_string(),
                    parameter: k,
                    witness,
                })
                .collect()
        })
        .collect();
    Ok(per_instance.into_iter().flatten().collect())
}

/// Witnesses for `goal` on one instance.
pub fn witnesses(goal: &SearchGoal, bundle: &InstanceBundle) -> Vec<String> {
    let m = bundle.module();
    let c = m.carrier();
    let proper = || c.elements().filter(|&n| m.is_proper(n));
    match goal {
        SearchGoal::Delta1NotDelta0 => {
            let Ok(d1) = ExpansionM::delta1(m) else {
                return Vec::new();
            };
            let d0 = ExpansionM::delta0(m);
            proper()
                .filter(|&n| is_delta_primary(m, &d1, n) && !is_delta_primary(m, &d0, n))
                .map(|n| c.name(n).to_string())
                .collect()
        }
        SearchGoal::PrimaryNotPrime => proper()
            .filter(|&n| {
                let k = classify_m(m, n);
                k.primary && !k.prime
            })
            .map(|n| c.name(n).to_string())
            .collect(),
        SearchGoal::TwoAbsorbingNotPrime => proper()
            .filter(|&n| {
                let k = classify_m(m, n);
                k.two_absorbing && !k.prime
            })
            .map(|n| c.name(n).to_string())
            .collect(),
        SearchGoal::TheoremFail(id) => {
            let theorem = lookup(id).expect("checked by the caller");
            let report = theorem.check(&Context::new(bundle));
            match report.outcome {
                Outcome::Fail => vec![report.witness_text],
                _ => Vec::new(),
            }
        }
        SearchGoal::HypothesisBoundary(id) => {
            let theorem = lookup(id).expect("checked by the caller");
            let cx = Context::new(bundle);
            match theorem.check(&cx).outcome {
                Outcome::Vacuous if !theorem.scope.holds(&cx) => {
                    vec![format!("outside scope: {}", theorem.scope)]
                }
                Outcome::Vacuous => vec!["no instantiation meets the hypothesis".to_string()],
                _ => Vec::new(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn goal_names_round_trip() {
        for s in [
            "delta1-not-delta0",
            "primary-not-prime",
            "2abs-not-prime",
            "theorem-fail(T-C41)",
        ] {
            assert_eq!(s.parse::<SearchGoal>().unwrap().to_string(), s);
        }
        assert_eq!(
            "hypothesis-boundary:T-C4".parse::<SearchGoal>().unwrap(),
            SearchGoal::HypothesisBoundary("T-C4".into())
        );
        assert!("theorem-fail()".parse::<SearchGoal>().is_err());
        assert!("frame-torus".parse::<Family>().is_err());
    }

    #[test]
    fn z12_four_is_delta1_not_delta0() {
        let hits = search(&SearchGoal::Delta1NotDelta0, Family::Zn, 12).unwrap();
        assert!(hits
            .iter()
            .any(|h| h.instance == "Z12" && h.witness == "(4)"));
    }

    #[test]
    fn zero_in_z4_is_primary_not_prime() {
        let hits = search(&SearchGoal::PrimaryNotPrime, Family::Zn, 11).unwrap();
        assert!(hits
            .iter()
            .any(|h| h.instance == "Z4" && h.witness == "(0)"));
    }

    #[test]
    fn unknown_theorem() {
        assert!(matches!(
            search(&SearchGoal::TheoremFail("nope".into()), Family::Zn, 5),
            Err(SearchError::Verify(_))
        ));
        assert_eq!(
            search(&SearchGoal::PrimaryNotPrime, Family::Zn, 0),
            Err(SearchError::ZeroBound)
        );
    }

    #[test]
    fn frames_have_no_primary_non_primes() {
        // Idempotent multiplication makes every radical trivial.
        assert!(search(&SearchGoal::PrimaryNotPrime, Family::FrameChain, 5)
            .unwrap()
            .is_empty());
    }
}

//! Generated instance families.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lattice::{Lattice, MulLattice};
use crate::module::{InstanceBundle, LatticeModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Name of the ideal `(d)` of `Z_n`; the zero ideal `(n)` is written `(0)`.
pub fn zn_ideal_name(n: u64, d: u64) -> String {
    if d.is_multiple_of(n) {
        "(0)".to_string()
    } else {
        format!("({d})")
    }
}

/// The ideal lattice of `Z_n` acting on itself.
pub fn gen_zn(n: u64) -> Result<InstanceBundle, GenerateError> {
    if n < 2 {
        return Err(GenerateError::BadParameter(format!(
            "zn needs n >= 2, got {n}"
        )));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let names: Vec<String> = divisors.iter().map(|&d| zn_ideal_name(n, d)).collect();
    let mut order = Vec::new();
    for &d in &divisors {
        for &e in &divisors {
            if d % e == 0 && d != e {
                order.push((zn_ideal_name(n, d), zn_ideal_name(n, e)));
            }
        }
    }
    let lattice = Lattice::build(&names, &order).expect("divisor order is a lattice");
    let value = |name: &str| -> u64 {
        match name
            .trim_matches(|c| c == '(' || c == ')')
            .parse::<u64>()
            .expect("ideal name")
        {
            0 => n,
            d => d,
        }
    };
    let lookup = lattice.clone();
    let mul = MulLattice::from_fn(lattice, |a, b| {
        let prod = gcd(value(lookup.name(a)) * value(lookup.name(b)), n);
        lookup
            .elem(&zn_ideal_name(n, prod))
            .expect("product is a divisor")
    });
    let module = LatticeModule::over_itself(mul);
    Ok(InstanceBundle::new(format!("Z{n}"), module)
        .expect("Z_n ideal lattice satisfies the axioms"))
}

/// Distributive lattice shapes used with multiplication := meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameShape {
    /// The Boolean algebra of subsets of `{1..k}`.
    Boolean(usize),
    /// The chain with `k + 1` elements.
    Chain(usize),
}

impl fmt::Display for FrameShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameShape::Boolean(k) => write!(f, "boolean({k})"),
            FrameShape::Chain(k) => write!(f, "chain({k})"),
        }
    }
}

impl FromStr for FrameShape {
    type Err = GenerateError;

    /// Accepts `boolean(k)` / `chain(k)` and the short forms `boolean:k`, `chain:k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::BadParameter(format!("unrecognised frame shape `{s}`"));
        let (kind, rest) = s.split_once(['(', ':']).ok_or_else(bad)?;
        let k: usize = rest.trim_end_matches(')').parse().map_err(|_| bad())?;
        match kind {
            "boolean" => Ok(FrameShape::Boolean(k)),
            "chain" => Ok(FrameShape::Chain(k)),
            _ => Err(bad()),
        }
    }
}

fn subset_name(mask: usize, k: usize) -> String {
    let members: Vec<String> = (0..k)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

pub fn gen_frame(shape: FrameShape) -> Result<InstanceBundle, GenerateError> {
    let lattice = match shape {
        FrameShape::Chain(k) => {
            if k < 1 {
                return Err(GenerateError::BadParameter("chain needs k >= 1".into()));
            }
            let names: Vec<String> = (0..=k).map(|i| format!("c{i}")).collect();
            let order: Vec<(String, String)> = names
                .windows(2)
                .map(|w| (w[0].clone(), w[1].clone()))
                .collect();
            Lattice::build(&names, &order)
        }
        FrameShape::Boolean(k) => {
            if !(1..=4).contains(&k) {
                return Err(GenerateError::BadParameter(format!(
                    "boolean needs 1 <= k <= 4, got {k}"
                )));
            }
            let masks = 0..(1usize << k);
            let names: Vec<String> = masks.clone().map(|m| subset_name(m, k)).collect();
            let mut order = Vec::new();
            for a in masks.clone() {
                for i in 0..k {
                    if a & (1 << i) == 0 {
                        order.push((subset_name(a, k), subset_name(a | (1 << i), k)));
                    }
                }
            }
            Lattice::build(&names, &order)
        }
    }
    .expect("frame shapes are lattices");
    let module = LatticeModule::over_itself(MulLattice::with_meet(lattice));
    Ok(InstanceBundle::new(shape.to_string(), module).expect("frames satisfy the axioms"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z12_elements() {
        let z = gen_zn(12).unwrap();
        let names = z.module().carrier().names().to_vec();
        assert_eq!(names, ["(0)", "(1)", "(2)", "(3)", "(4)", "(6)"]);
        let l = z.module().scalars();
        let e = |s| l.lattice().elem(s).unwrap();
        assert_eq!(l.mul(e("(2)"), e("(6)")), e("(0)"));
        assert_eq!(l.lattice().top(), e("(1)"));
        assert_eq!(l.lattice().bottom(), e("(0)"));
    }

    #[test]
    fn zn_of_prime_is_two_chain() {
        for p in [2, 3, 5, 7, 97] {
            let z = gen_zn(p).unwrap();
            assert_eq!(z.module().carrier().names(), ["(0)", "(1)"]);
        }
        assert!(gen_zn(1).is_err());
        assert!(gen_zn(0).is_err());
    }

    #[test]
    fn frames() {
        assert_eq!(
            gen_frame(FrameShape::Chain(1))
                .unwrap()
                .module()
                .carrier()
                .len(),
            2
        );
        let b2 = gen_frame(FrameShape::Boolean(2)).unwrap();
        let l = b2.module().scalars();
        assert!(l.elements().all(|x| l.mul(x, x) == x));
        let c3 = gen_frame(FrameShape::Chain(3)).unwrap();
        let l = c3.module().scalars();
        assert!(l.elements().all(|x| l.radical(x) == x));
        assert!(gen_frame(FrameShape::Boolean(5)).is_err());
        assert!(gen_frame(FrameShape::Chain(0)).is_err());
    }

    #[test]
    fn shape_parsing() {
        assert_eq!(
            "chain(3)".parse::<FrameShape>().unwrap(),
            FrameShape::Chain(3)
        );
        assert_eq!(
            "boolean:2".parse::<FrameShape>().unwrap(),
            FrameShape::Boolean(2)
        );
        assert!("cube(2)".parse::<FrameShape>().is_err());
    }
}

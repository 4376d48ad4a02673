use std::fmt;

/// One violated axiom together with the element names that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub axiom: String,
    pub witness: Vec<String>,
}

/// Outcome of an exhaustive axiom check. Every violation is kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn push(&mut self, axiom: &str, witness: Vec<String>) {
        self.failures.push(Failure {
            axiom: axiom.to_string(),
            witness,
        });
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }

    /// Distinct axiom names in first-seen order.
    pub fn violated_axioms(&self) -> Vec<&str> {
        let mut seen: Vec<&str> = Vec::new();
        for f in &self.failures {
            if !seen.contains(&f.axiom.as_str()) {
                seen.push(&f.axiom);
            }
        }
        seen
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for axiom in self.violated_axioms() {
            let hits: Vec<&Failure> = self.failures.iter().filter(|x| x.axiom == axiom).collect();
            writeln!(
                f,
                "{axiom}: {} violation(s), first witness ({})",
                hits.len(),
                hits[0].witness.join(", ")
            )?;
        }
        Ok(())
    }
}

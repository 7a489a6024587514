//! Structured outcome of a verification check.

use serde::Serialize;

/// One verified claim: an identifier, the instance it ran on, the verdict,
/// and, for failures, at least one witness.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub instance: String,
    pub pass: bool,
    pub detail: String,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u128,
    pub budget_used: u64,
}

impl VerificationReport {
    pub fn pass(claim: &str, instance: &str, detail: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            instance: instance.to_string(),
            pass: true,
            detail: detail.into(),
            witnesses: Vec::new(),
            elapsed_ms: 0,
            budget_used: 0,
        }
    }

    /// Failures always carry a witness; when none is supplied the detail
    /// line stands in.
    pub fn fail(
        claim: &str,
        instance: &str,
        detail: impl Into<String>,
        witnesses: Vec<String>,
    ) -> Self {
        let detail = detail.into();
        let witnesses = if witnesses.is_empty() {
            vec![detail.clone()]
        } else {
            witnesses
        };
        VerificationReport {
            claim: claim.to_string(),
            instance: instance.to_string(),
            pass: false,
            detail,
            witnesses,
            elapsed_ms: 0,
            budget_used: 0,
        }
    }

    pub fn with_timing(mut self, elapsed_ms: u128, budget_used: u64) -> Self {
        self.elapsed_ms = elapsed_ms;
        self.budget_used = budget_used;
        self
    }

    pub fn render_line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        format!("{verdict} {} [{}] {}", self.claim, self.instance, self.detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_always_carry_witnesses() {
        let r = VerificationReport::fail("c", "i", "broken", vec![]);
        assert!(!r.witnesses.is_empty());
        let r = VerificationReport::fail("c", "i", "broken", vec!["w".into()]);
        assert_eq!(r.witnesses, vec!["w".to_string()]);
        assert!(r.render_line().starts_with("FAIL"));
    }
}

//! Check reports: one record per verified identity instance.

use serde::Serialize;

/// One side of an identity, reduced to displayable precision. Exact checks
/// carry the integer value in `re` with `err` zero.
#[derive(Debug, Clone, Serialize)]
pub struct SideSummary {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    /// Identity identifier, e.g. `thm13` or `rrG`.
    pub name: String,
    /// Parameter tuple rendered as text, e.g. `k1=1,k2=3`.
    pub params: String,
    pub lhs: SideSummary,
    pub rhs: SideSummary,
    /// Max absolute component difference between the two sides.
    pub residual: f64,
    /// Tolerance the check was run against.
    pub tol: f64,
    /// residual <= max(tol, lhs.err + rhs.err)
    pub pass: bool,
    /// True when both sides were computed in exact integer/rational
    /// arithmetic, in which case `residual` is exactly zero or the check
    /// failed outright.
    pub exact: bool,
    /// Optional annotation (convention resolutions, parameter notes).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn numeric(
        name: impl Into<String>,
        params: impl Into<String>,
        lhs: SideSummary,
        rhs: SideSummary,
        residual: f64,
        tol: f64,
    ) -> Self {
        let pass = residual <= tol.max(lhs.err + rhs.err);
        CheckReport {
            name: name.into(),
            params: params.into(),
            lhs,
            rhs,
            residual,
            tol,
            pass,
            exact: false,
            note: None,
        }
    }

    pub fn exact(
        name: impl Into<String>,
        params: impl Into<String>,
        lhs: f64,
        rhs: f64,
        equal: bool,
    ) -> Self {
        CheckReport {
            name: name.into(),
            params: params.into(),
            lhs: SideSummary { re: lhs, im: 0.0, err: 0.0 },
            rhs: SideSummary { re: rhs, im: 0.0, err: 0.0 },
            residual: if equal { 0.0 } else { (lhs - rhs).abs() },
            tol: 0.0,
            pass: equal,
            exact: true,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Single human-readable line.
    pub fn line(&self) -> String {
        format!(
            "{:<12} {:<28} residual {:>12.3e}  tol {:>9.1e}  {}",
            self.name,
            self.params,
            self.residual,
            self.tol,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

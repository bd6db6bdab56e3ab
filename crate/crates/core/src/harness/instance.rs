use crate::bounds::{cn_coefficient, run_checks, CheckKind, CheckReport, GammaInputs, Rational};
use crate::cells::{CellColoring, ColorLedger};
use crate::domination::gamma_path;
use crate::error::Result;

pub(crate) struct Checked {
    pub ledger: ColorLedger,
    pub checks: Vec<CheckReport>,
    pub slack: Option<Rational>,
}

/// Runs the full check suite on a coloring and measures the theorem slack.
pub(crate) fn check_all(c: &CellColoring, g: &GammaInputs) -> Result<Checked> {
    let ledger = c.ledger();
    let checks = run_checks(c, &ledger, g, &CheckKind::ALL)?;
    Ok(Checked {
        slack: theorem_slack(c, g)?,
        ledger,
        checks,
    })
}

/// `gamma(product) / (c_n gamma(P_n) gamma(X) gamma(Y))` for path-shaped Z.
pub fn theorem_slack(c: &CellColoring, g: &GammaInputs) -> Result<Option<Rational>> {
    let Some(product) = g.product.filter(|_| c.product().canonical_path()) else {
        return Ok(None);
    };
    let n = c.dims().2;
    let bound = cn_coefficient(n)?
        * Rational::from(gamma_path(n)?)
        * Rational::from(g.x.get())
        * Rational::from(g.y.get());
    Ok(Rational::from(product.get()).checked_div(&bound))
}

//! The four subcommands, each producing a table or a report.

use cespot::{
    numerical_amplitudes, partner_potential, qnm, qnm_pole_check, reflection_transmission,
    run_checks, step_amplitudes, step_potential, superpotential, IntegrationConfig, PotentialSpec,
    QnmFamily, ScatteringResult, Sign, VerifyLevel, VerifyOptions, VerifyReport,
};
use rayon::prelude::*;

use crate::args::{
    Level, PotentialSettings, QnmKind, QnmSettings, ScatterKind, ScatterSettings, TableKind,
    VerifySettings,
};
use crate::output::{number, Table};
use crate::Failure;

/// `n` evenly spaced points from `lo` to `hi` inclusive.
fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let span = hi - lo;
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + span * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn check_grid(lo: f64, hi: f64, n: usize, what: &str) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage(format!(
            "--n-points must be at least 2, got {n}"
        )));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Failure::Usage(format!(
            "{what} range needs finite min < max, got [{lo}, {hi}]"
        )));
    }
    Ok(())
}

pub fn potential(s: &PotentialSettings) -> Result<Table, Failure> {
    check_grid(s.x_min, s.x_max, s.n_points, "x")?;
    if !s.m.is_finite() {
        return Err(Failure::Domain(format!(
            "coupling must be finite, got {}",
            s.m
        )));
    }
    let with_step = s.kind == TableKind::Step;
    if with_step {
        // validates V0 and alpha
        PotentialSpec::step(s.v0, s.alpha)?;
    }
    let mut header = vec!["x", "V_plus", "V_minus", "W"];
    if with_step {
        header.push("V_step");
    }
    let rows = linspace(s.x_min, s.x_max, s.n_points)
        .into_iter()
        .map(|x| {
            let mut row = vec![
                number(x),
                number(partner_potential(Sign::Plus, x, s.m)),
                number(partner_potential(Sign::Minus, x, s.m)),
                number(superpotential(x, s.m)),
            ];
            if with_step {
                row.push(number(step_potential(x, s.v0, s.alpha)));
            }
            row
        })
        .collect();
    Ok(Table::new(header, rows))
}

fn exact(kind: ScatterKind, omega: f64, m: f64) -> cespot::Result<ScatteringResult> {
    match kind {
        ScatterKind::Plus => reflection_transmission(Sign::Plus, omega, m),
        ScatterKind::Minus => reflection_transmission(Sign::Minus, omega, m),
        ScatterKind::Step => step_amplitudes(omega, m),
    }
}

pub fn scatter(s: &ScatterSettings) -> Result<Table, Failure> {
    check_grid(s.omega_min, s.omega_max, s.n_points, "omega")?;
    if !(s.m > 0.0 && s.m.is_finite()) {
        return Err(Failure::Domain(format!(
            "coupling must be m > 0, got {}",
            s.m
        )));
    }
    if s.omega_min <= s.m {
        return Err(Failure::Domain(format!(
            "omega-min must exceed m = {} so the transmitted wave propagates, got {}",
            s.m, s.omega_min
        )));
    }
    let spec = match s.kind {
        ScatterKind::Plus => PotentialSpec::plus(s.m)?,
        ScatterKind::Minus => PotentialSpec::minus(s.m)?,
        ScatterKind::Step => PotentialSpec::matched_step(s.m)?,
    };
    let cfg = IntegrationConfig {
        x_min: s.x_min,
        x_max: s.x_max,
        step: s.step,
        match_window: s.match_window,
        ..IntegrationConfig::default()
    };
    if s.with_oracle {
        // the stability bound is worst at the largest frequency
        cfg.validate(&spec, s.omega_max)?;
    }
    let mut header = vec!["omega", "R2", "T2", "flux"];
    if s.with_oracle {
        header.extend(["R2_num", "T2_num", "R2_minus_R2_step"]);
    }
    // indexed parallel collect keeps the rows in ω order
    let rows = linspace(s.omega_min, s.omega_max, s.n_points)
        .into_par_iter()
        .map(|omega| -> cespot::Result<Vec<String>> {
            let rt = exact(s.kind, omega, s.m)?;
            let mut row = vec![number(omega), number(rt.r2), number(rt.t2), number(rt.flux)];
            if s.with_oracle {
                let num = numerical_amplitudes(&spec, omega, &cfg)?;
                let gap = rt.r2 - step_amplitudes(omega, s.m)?.r2;
                row.extend([number(num.r2), number(num.t2), number(gap)]);
            }
            Ok(row)
        })
        .collect::<cespot::Result<Vec<_>>>()?;
    Ok(Table::new(header, rows))
}

pub fn qnm_table(s: &QnmSettings) -> Result<Table, Failure> {
    if !(s.m > 0.0 && s.m.is_finite()) {
        return Err(Failure::Domain(format!(
            "coupling must be m > 0, got {}",
            s.m
        )));
    }
    let family = match s.kind {
        QnmKind::Step => QnmFamily::Step,
        QnmKind::Partner => QnmFamily::Partner,
    };
    let rows = (0..=s.n_max)
        .map(|n| {
            let freq = qnm(family, n, s.m);
            let residual = match family {
                QnmFamily::Step => String::new(),
                // ω = 0 and similar points have no defined amplitude
                QnmFamily::Partner => number(qnm_pole_check(n, s.m).unwrap_or(f64::NAN)),
            };
            vec![
                n.to_string(),
                number(freq.omega.re),
                number(freq.omega.im),
                residual,
            ]
        })
        .collect();
    Ok(Table::new(
        vec!["n", "re_omega", "im_omega", "pole_residual"],
        rows,
    ))
}

pub fn verify(s: &VerifySettings) -> Result<VerifyReport, Failure> {
    let level = match s.level {
        Level::Quick => VerifyLevel::Quick,
        Level::Full => VerifyLevel::Full,
    };
    let options = VerifyOptions {
        level,
        perturbation: s.perturb,
    };
    Ok(run_checks(&options)?)
}

pub fn report_table(report: &VerifyReport) -> Table {
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                number(c.max_residual),
                number(c.tolerance),
                c.passed.to_string(),
            ]
        })
        .collect();
    Table::new(vec!["check", "max_residual", "tolerance", "passed"], rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_both_ends() {
        let g = linspace(-10.0, 10.0, 5);
        assert_eq!(g, vec![-10.0, -5.0, 0.0, 5.0, 10.0]);
        assert_eq!(*linspace(1.05, 3.0, 7).last().unwrap(), 3.0);
    }
}

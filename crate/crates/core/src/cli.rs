//! Command-line front end: closed-form tables, coefficient dumps, design
//! construction and certification, seeded simulation runs, and a one-shot
//! verification suite.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::error::Result;
use crate::optimal::{
    build_m, chi1_max_closed, lambda_max_numeric, mean_fidelity, min_error_closed,
    optimal_coeffs, per_axis_error,
};
use crate::povm::{
    build_product_design, completeness_check, load_design, save_design, verify_design,
    FinitePovm, DESIGN_TOLERANCE,
};
use crate::sim::{
    chi1_quadrature, explicit_probability, multiplicity_check, outcome_probabilities,
    run_trials, SimulationSummary,
};
use crate::su2::{character_sq_identity, haar_sample};

#[derive(Debug, Parser)]
#[command(name = "frame-align", version, about = "Reference-frame alignment with entangled spin pairs: optima, covariant measurement designs, and protocol simulation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form optima for N = 1..n-max
    Table {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Optimal irrep amplitudes for N spins
    Coeffs {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_spins: u32,
    },
    /// Build and certify a finite covariant measurement design
    Design {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_spins: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded Monte Carlo protocol run
    Simulate {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_spins: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        design: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run the full property suite for N spins
    Verify {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n_spins: u32,
    },
}

/// Format with 10 significant digits ('.' decimal separator).
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (9 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

#[derive(Debug, Serialize)]
struct TableRow {
    n: u32,
    chi1_max: f64,
    mean_error: f64,
    per_axis_error: f64,
    fidelity: f64,
}

/// Rows N, ⟨χ₁⟩_max, ⟨h⟩_min, per-axis error, mean fidelity.
pub fn cmd_table(n_max: u32, format: OutputFormat) -> String {
    let rows: Vec<TableRow> = (1..=n_max)
        .map(|n| TableRow {
            n,
            chi1_max: chi1_max_closed(n),
            mean_error: min_error_closed(n),
            per_axis_error: per_axis_error(n),
            fidelity: mean_fidelity(n),
        })
        .collect();
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("n,chi1_max,mean_error,per_axis_error,fidelity\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    fmt_sig(r.chi1_max),
                    fmt_sig(r.mean_error),
                    fmt_sig(r.per_axis_error),
                    fmt_sig(r.fidelity)
                ));
            }
            out
        }
        OutputFormat::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
    }
}

/// Optimal amplitudes as (2j, a_j) rows, highest j first.
pub fn cmd_coeffs(n_spins: u32) -> Result<String> {
    let coeffs = optimal_coeffs(n_spins)?;
    let mut out = String::from("two_j,a_j\n");
    for (label, &a) in coeffs.spectrum().labels().iter().zip(coeffs.amplitudes()) {
        out.push_str(&format!("{},{}\n", label.two_j(), fmt_sig(a)));
    }
    Ok(out)
}

/// Build the product design, certify it, and write the design file.
/// Returns (point count, residual).
pub fn cmd_design(n_spins: u32, out_path: &Path) -> Result<(usize, f64)> {
    let povm = build_product_design(n_spins)?;
    let report = verify_design(&povm, povm.j_max_twice())?;
    save_design(&povm, report.max_residual, out_path)?;
    Ok((povm.points().len(), report.max_residual))
}

/// Run the seeded simulation, rendering the summary in the requested
/// format. The design is loaded from file when given, else built.
pub fn cmd_simulate(
    n_spins: u32,
    trials: u64,
    seed: u64,
    design_path: Option<&Path>,
    format: OutputFormat,
) -> Result<(SimulationSummary, String)> {
    let povm = match design_path {
        Some(path) => load_design(path, n_spins)?,
        None => build_product_design(n_spins)?,
    };
    let coeffs = optimal_coeffs(n_spins)?;
    let summary = run_trials(&coeffs, &povm, trials, seed)?;
    let rendered = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&summary).unwrap() + "\n",
        OutputFormat::Csv => {
            let opt = |v: Option<f64>| v.map(fmt_sig).unwrap_or_default();
            format!(
                "n_spins,trials,seed,design_size,mean_h,stderr_h,analytic_h,z_score\n{},{},{},{},{},{},{},{}\n",
                summary.n_spins,
                summary.trials,
                summary.seed,
                summary.design_size,
                fmt_sig(summary.mean_h),
                opt(summary.stderr_h),
                fmt_sig(summary.analytic_h),
                opt(summary.z_score),
            )
        }
    };
    Ok((summary, rendered))
}

/// One line of the verification suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.value <= self.tolerance
    }
}

/// The full property suite for one N: eigenvalue vs closed form,
/// eigenvector residual, quadrature saturation, algebraic identities,
/// character identity, design certification, plus the explicit-matrix
/// checks (completeness, oracle equivalence, multiplicity witness)
/// where the dimension guards allow them.
pub fn cmd_verify(n_spins: u32) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let spec = build_m(n_spins)?;
    let mu = lambda_max_numeric(&spec);
    let closed = chi1_max_closed(n_spins) - 1.0;
    checks.push(Check {
        name: "eigenvalue vs closed form",
        value: (mu - closed).abs(),
        tolerance: 1e-10,
    });

    let coeffs = optimal_coeffs(n_spins)?;
    let a = coeffs.amplitudes();
    let m = spec.to_matrix();
    let mut eig_residual: f64 = 0.0;
    for i in 0..spec.n {
        let row: f64 = (0..spec.n).map(|k| m[(i, k)] * a[k]).sum();
        eig_residual = eig_residual.max((row - mu * a[i]).abs());
    }
    checks.push(Check { name: "eigenvector residual", value: eig_residual, tolerance: 1e-10 });
    let norm_defect = (a.iter().map(|x| x * x).sum::<f64>() - 1.0).abs();
    checks.push(Check { name: "amplitude normalization", value: norm_defect, tolerance: 1e-12 });

    checks.push(Check {
        name: "quadrature saturation",
        value: (chi1_quadrature(&coeffs) - chi1_max_closed(n_spins)).abs(),
        tolerance: 1e-8,
    });

    let h = min_error_closed(n_spins);
    let identity_defect = (h - (6.0 - 2.0 * chi1_max_closed(n_spins)))
        .abs()
        .max((mean_fidelity(n_spins) - (1.0 - h / 8.0)).abs())
        .max((per_axis_error(n_spins) - h / 12.0).abs());
    checks.push(Check { name: "algebraic identities", value: identity_defect, tolerance: 1e-12 });

    let mut char_defect: f64 = 0.0;
    for k in 0..1000 {
        let omega = 2.0 * std::f64::consts::PI * k as f64 / 999.0;
        let (lhs, rhs) = character_sq_identity(omega);
        char_defect = char_defect.max((lhs - rhs).abs());
    }
    checks.push(Check { name: "character identity", value: char_defect, tolerance: 1e-12 });

    let povm = build_product_design(n_spins)?;
    let report = verify_design(&povm, povm.j_max_twice())?;
    checks.push(Check {
        name: "design residual",
        value: report.max_residual,
        tolerance: DESIGN_TOLERANCE,
    });

    if n_spins <= 4 {
        checks.push(Check {
            name: "completeness defect",
            value: completeness_check(n_spins, &povm)?,
            tolerance: 1e-9,
        });
    }

    if n_spins <= 3 {
        checks.push(Check {
            name: "oracle equivalence",
            value: oracle_equivalence_defect(n_spins, &povm)?,
            tolerance: 1e-10,
        });
    }

    if (3..=4).contains(&n_spins) {
        let mut rng = ChaCha12Rng::seed_from_u64(2026);
        checks.push(Check {
            name: "multiplicity witness",
            value: multiplicity_check(n_spins, &mut rng)?,
            tolerance: 1e-10,
        });
    }

    Ok(checks)
}

/// Worst disagreement between the character-path probabilities and the
/// explicit dense-matrix oracle over 50 random (g, outcome) pairs.
fn oracle_equivalence_defect(n_spins: u32, povm: &FinitePovm) -> Result<f64> {
    use rand::Rng;
    let coeffs = optimal_coeffs(n_spins)?;
    let mut rng = ChaCha12Rng::seed_from_u64(41);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let g = haar_sample(&mut rng);
        let r = rng.gen_range(0..povm.points().len());
        let fast = outcome_probabilities(&coeffs, povm, &g)[r];
        let slow = explicit_probability(&coeffs, povm, r, &g)?;
        worst = worst.max((fast - slow).abs());
    }
    Ok(worst)
}

/// Render verify output, one line per check. Returns overall success.
pub fn render_checks(n_spins: u32, checks: &[Check]) -> (String, bool) {
    let mut out = String::new();
    let mut all_passed = true;
    for check in checks {
        let status = if check.passed() { "PASS" } else { "FAIL" };
        all_passed &= check.passed();
        out.push_str(&format!(
            "{status} N={n_spins} {}: {:.3e} (tolerance {:.1e})\n",
            check.name, check.value, check.tolerance
        ));
    }
    (out, all_passed)
}

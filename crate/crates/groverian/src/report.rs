//! Machine-readable output: the fixed float format, trajectory rows, and the
//! per-method measure records behind the CLI.

use crate::error::{Error, Result};
use crate::grover::run_trajectory;
use crate::measures::{
    entropy_of_entanglement, pmax_closed_form_for_state, pmax_svd_oracle, pmax_variational_default,
    Method,
};
use crate::state::PureState;

/// Format with 12 significant digits, lowercase scientific below 1e-4.
/// Stable across runs, so CSV and JSON outputs diff cleanly.
pub fn fmt_sig12(x: f64) -> String {
    debug_assert!(x.is_finite());
    if x == 0.0 {
        return "0".to_string();
    }
    let ax = x.abs();
    if ax < 1e-4 {
        return format!("{x:.11e}");
    }
    let mut magnitude = ax.log10().floor() as i32;
    // guard the floor against log10 rounding at powers of ten
    if 10.0f64.powi(magnitude + 1) <= ax {
        magnitude += 1;
    } else if 10.0f64.powi(magnitude) > ax {
        magnitude -= 1;
    }
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// One line of the trajectory CSV.
#[derive(Clone, Debug)]
pub struct TrajectoryRow {
    pub step: usize,
    pub label: String,
    pub success: f64,
    /// Groverian measure by the SVD oracle.
    pub g_oracle: f64,
    /// Groverian measure by the closed form; absent when the state has
    /// complex amplitudes. The closed form can exceed 1, in which case the
    /// excess is clipped before the square root.
    pub g_closed: Option<f64>,
    /// Von Neumann entropy of either reduction, base 3.
    pub entropy: f64,
}

/// Evaluate all measures along a two-qutrit Grover run.
pub fn trajectory_rows(marked: usize, iterations: usize) -> Result<Vec<TrajectoryRow>> {
    let trace = run_trajectory(2, 3, marked, iterations)?;
    let mut rows = Vec::with_capacity(trace.steps.len());
    for (step, snapshot) in trace.steps.iter().enumerate() {
        let oracle = pmax_svd_oracle(&snapshot.state)?;
        let g_closed = match pmax_closed_form_for_state(&snapshot.state) {
            Ok(p) => Some((1.0 - p.clamp(0.0, 1.0)).sqrt()),
            Err(Error::ComplexAmplitudes { .. }) => None,
            Err(e) => return Err(e),
        };
        rows.push(TrajectoryRow {
            step,
            label: snapshot.label.to_string(),
            success: snapshot.success,
            g_oracle: oracle.g,
            g_closed,
            entropy: entropy_of_entanglement(&snapshot.state)?,
        });
    }
    Ok(rows)
}

/// CSV with header `step,label,success,g_oracle,g_closed,entropy`.
pub fn render_trajectory_csv(rows: &[TrajectoryRow]) -> String {
    let mut out = String::from("step,label,success,g_oracle,g_closed,entropy\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.step,
            row.label,
            fmt_sig12(row.success),
            fmt_sig12(row.g_oracle),
            row.g_closed.map(fmt_sig12).unwrap_or_default(),
            fmt_sig12(row.entropy),
        ));
    }
    out
}

/// Method selection for the measure command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Oracle,
    Variational,
    ClosedForm,
    All,
}

/// One emitted measurement. Entropy is absent for registers that are not
/// bipartite.
#[derive(Clone, Debug)]
pub struct MeasureRecord {
    pub method: &'static str,
    pub pmax: f64,
    pub g: f64,
    pub entropy: Option<f64>,
}

fn is_eligibility(err: &Error) -> bool {
    matches!(
        err,
        Error::NotBipartite { .. } | Error::NotQutritPair { .. } | Error::ComplexAmplitudes { .. }
    )
}

/// Evaluate the requested methods on a state.
///
/// An explicitly requested method that the state is not eligible for is an
/// error; under [`MethodChoice::All`] ineligible routes are skipped instead,
/// so `all` returns every route the state supports.
pub fn measure_records(state: &PureState, choice: MethodChoice) -> Result<Vec<MeasureRecord>> {
    let entropy = if state.n() == 2 {
        Some(entropy_of_entanglement(state)?)
    } else {
        None
    };

    let oracle = |strict: bool| -> Result<Option<MeasureRecord>> {
        match pmax_svd_oracle(state) {
            Ok(m) => Ok(Some(MeasureRecord {
                method: Method::SvdOracle.name(),
                pmax: m.pmax,
                g: m.g,
                entropy,
            })),
            Err(e) if !strict && is_eligibility(&e) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let closed = |strict: bool| -> Result<Option<MeasureRecord>> {
        match pmax_closed_form_for_state(state) {
            Ok(pmax) => Ok(Some(MeasureRecord {
                method: Method::ClosedForm.name(),
                pmax,
                g: (1.0 - pmax.clamp(0.0, 1.0)).sqrt(),
                entropy,
            })),
            Err(e) if !strict && is_eligibility(&e) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let variational = || {
        let m = pmax_variational_default(state);
        MeasureRecord {
            method: Method::Variational.name(),
            pmax: m.pmax,
            g: m.g,
            entropy,
        }
    };

    let mut records = Vec::new();
    match choice {
        MethodChoice::Oracle => records.extend(oracle(true)?),
        MethodChoice::Variational => records.push(variational()),
        MethodChoice::ClosedForm => records.extend(closed(true)?),
        MethodChoice::All => {
            records.extend(oracle(false)?);
            records.push(variational());
            records.extend(closed(false)?);
        }
    }
    Ok(records)
}

/// The measure command's JSON document, numbers in the fixed format.
pub fn render_measure_json(state: &PureState, records: &[MeasureRecord]) -> String {
    let mut out = format!("{{\"n\":{},\"d\":{},\"results\":[", state.n(), state.d());
    for (i, record) in records.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let entropy = record
            .entropy
            .map(fmt_sig12)
            .unwrap_or_else(|| "null".to_string());
        out.push_str(&format!(
            "{{\"method\":\"{}\",\"pmax\":{},\"g\":{},\"entropy\":{}}}",
            record.method,
            fmt_sig12(record.pmax),
            fmt_sig12(record.g),
            entropy,
        ));
    }
    out.push_str("]}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::NormPolicy;
    use num_complex::Complex64 as C64;

    #[test]
    fn fixed_format_examples() {
        assert_eq!(fmt_sig12(0.0), "0");
        assert_eq!(fmt_sig12(-0.0), "0");
        assert_eq!(fmt_sig12(1.0), "1.00000000000");
        assert_eq!(fmt_sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_sig12(-0.5), "-0.500000000000");
        assert_eq!(fmt_sig12(0.111111111111111), "0.111111111111");
        // scientific below 1e-4, lowercase
        assert_eq!(fmt_sig12(5.2051760427e-5), "5.20517604270e-5");
        assert_eq!(fmt_sig12(-1e-12), "-1.00000000000e-12");
        // 1e-4 itself stays fixed-point
        assert_eq!(fmt_sig12(1e-4), "0.000100000000000");
    }

    #[test]
    fn trajectory_rows_for_the_canonical_run() {
        let rows = trajectory_rows(0, 2).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0].label, "init");
        assert_eq!(rows[4].label, "diffusion-2");
        assert!((rows[0].success - 1.0 / 9.0).abs() < 1e-12);
        assert!(rows[0].g_oracle <= 1e-9);
        assert!(rows[0].entropy <= 1e-9);
        // the canonical marked-|11⟩ run keeps every state real
        for (step, row) in rows.iter().enumerate() {
            assert_eq!(row.step, step);
            assert!(row.g_closed.is_some(), "g_closed missing at {}", row.label);
            for value in [
                row.success,
                row.g_oracle,
                row.g_closed.unwrap(),
                row.entropy,
            ] {
                assert!((0.0..=1.0).contains(&value));
            }
        }
        let expected_g1 = (1.0f64 - (1.0 + (1.0f64 - 64.0 / 81.0).sqrt()) / 2.0).sqrt();
        assert!((rows[1].g_oracle - expected_g1).abs() <= 1e-10);
    }

    #[test]
    fn trajectory_csv_has_the_pinned_header() {
        let rows = trajectory_rows(0, 1).unwrap();
        let csv = render_trajectory_csv(&rows);
        assert!(csv.starts_with("step,label,success,g_oracle,g_closed,entropy\n"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn complex_states_leave_the_closed_column_empty() {
        let mut amps = vec![C64::new(0.0, 0.0); 9];
        amps[0] = C64::new(0.0, 1.0);
        amps[4] = C64::new(1.0, 0.0);
        let s = PureState::new(2, 3, amps, NormPolicy::Normalize).unwrap();
        let records = measure_records(&s, MethodChoice::All).unwrap();
        let methods: Vec<_> = records.iter().map(|r| r.method).collect();
        assert_eq!(methods, vec!["oracle", "variational"]);
        assert!(matches!(
            measure_records(&s, MethodChoice::ClosedForm),
            Err(Error::ComplexAmplitudes { .. })
        ));
    }

    #[test]
    fn measure_json_shape() {
        let s = PureState::uniform(2, 3).unwrap();
        let records = measure_records(&s, MethodChoice::All).unwrap();
        assert_eq!(records.len(), 3);
        let json = render_measure_json(&s, &records);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["n"], 2);
        assert_eq!(parsed["results"].as_array().unwrap().len(), 3);
        for r in parsed["results"].as_array().unwrap() {
            let pmax = r["pmax"].as_f64().unwrap();
            let g = r["g"].as_f64().unwrap();
            assert!((g - (1.0 - pmax.clamp(0.0, 1.0)).sqrt()).abs() < 1e-11);
        }
    }

    #[test]
    fn non_bipartite_states_measure_variationally_only() {
        let s = PureState::uniform(3, 3).unwrap();
        let records = measure_records(&s, MethodChoice::All).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].method, "variational");
        assert!(records[0].entropy.is_none());
        assert!(measure_records(&s, MethodChoice::Oracle).is_err());
        let json = render_measure_json(&s, &records);
        assert!(json.contains("\"entropy\":null"));
    }
}

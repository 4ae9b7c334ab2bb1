//! Calibrated synthetic plant data.
//!
//! Real gas-turbine historian data is proprietary, so tests and demo runs
//! use a generator that (a) samples the nine input variables from a
//! Gaussian copula with moment-matched Beta marginals, clipped to the
//! declared [min, max], and (b) computes the three performance outputs
//! from a fixed, documented, physics-flavored oracle plus seeded Gaussian
//! noise.
//!
//! The oracle is not a claim about any real plant. Its functional forms
//! exist so that end-to-end tests have known ground truth:
//!
//! * a load index mixes the scaled compressor discharge pressure, gas fuel
//!   flow rate and compressor discharge temperature; power is a strictly
//!   increasing soft-saturating function of it (the plant plateaus near
//!   its capacity limit),
//! * thermal efficiency is power divided by an effective fuel flow, so at
//!   fixed power, burning less fuel is genuinely better; the ratio is
//!   concave and increasing in load,
//! * turbine heat rate is the reciprocal relation 360000 / TE, i.e.
//!   3600 kJ/kWh divided by the efficiency fraction,
//! * ambient temperature slightly derates power and efficiency; ambient
//!   pressure helps marginally; fuel gas temperature helps efficiency.

use ndarray::Array2;
use rand::Rng;
use rand_distr::StandardNormal;
use statrs::distribution::{Beta, ContinuousCDF, Normal};

use crate::dataset::{CorrelationMatrix, Dataset, Provenance, VariableRole, VariableSpec};
use crate::error::{CoreError, Result};
use crate::linalg;
use crate::seeds;

/// Input variable names in schema order.
pub const INPUT_NAMES: [&str; 9] = [
    "CDP", "GFFR", "FGT", "AT", "AP", "AH", "PHGOT", "CDT", "FGEXT",
];

/// Output variable names in schema order.
pub const OUTPUT_NAMES: [&str; 3] = ["TE", "Power", "THR"];

pub const POWER: &str = "Power";
pub const TE: &str = "TE";
pub const THR: &str = "THR";

/// The twelve-variable plant schema with its descriptive statistics
/// (engineering units) used as generator calibration targets.
pub fn plant_schema() -> Vec<VariableSpec> {
    use VariableRole::{AmbientInput, PerformanceOutput, ProcessInput};
    vec![
        VariableSpec::new("CDP", "Psi", ProcessInput, 186.0, 312.0, 248.0, 36.82),
        VariableSpec::new("GFFR", "lb/s", ProcessInput, 29.0, 50.0, 39.0, 5.65),
        VariableSpec::new("FGT", "degF", ProcessInput, 484.0, 535.0, 513.0, 14.93),
        VariableSpec::new("AT", "degC", AmbientInput, 20.0, 34.0, 26.0, 3.67),
        VariableSpec::new("AP", "hPa", AmbientInput, 983.0, 992.0, 988.0, 1.99),
        VariableSpec::new("AH", "%", AmbientInput, 34.0, 98.0, 66.0, 14.16),
        VariableSpec::new("PHGOT", "degF", ProcessInput, 400.0, 425.0, 411.0, 2.47),
        VariableSpec::new("CDT", "degF", ProcessInput, 813.0, 926.0, 861.0, 34.26),
        VariableSpec::new("FGEXT", "degC", ProcessInput, 629.0, 673.0, 659.0, 15.90),
        VariableSpec::new("TE", "%", PerformanceOutput, 32.69, 42.97, 38.99, 2.36),
        VariableSpec::new("Power", "MW", PerformanceOutput, 185.0, 395.0, 297.0, 59.32),
        VariableSpec::new("THR", "kJ/kWh", PerformanceOutput, 8377.0, 11022.0, 9267.0, 579.46),
    ]
}

/// Target correlation structure of the nine inputs: a strongly coupled
/// load cluster (CDP, GFFR, CDT plus the weaker FGT and FGEXT), a nearly
/// uncoupled PHGOT, and a weather block with hot-dry anticorrelation.
pub fn default_input_correlation() -> CorrelationMatrix {
    let names: Vec<String> = INPUT_NAMES.iter().map(|s| s.to_string()).collect();
    let pairs: &[(&str, &str, f64)] = &[
        ("CDP", "GFFR", 0.95),
        ("CDP", "FGT", 0.80),
        ("CDP", "AT", -0.10),
        ("CDP", "AP", 0.05),
        ("CDP", "AH", -0.05),
        ("CDP", "PHGOT", 0.25),
        ("CDP", "CDT", 0.93),
        ("CDP", "FGEXT", 0.72),
        ("GFFR", "FGT", 0.78),
        ("GFFR", "AT", -0.08),
        ("GFFR", "AP", 0.04),
        ("GFFR", "AH", -0.04),
        ("GFFR", "PHGOT", 0.24),
        ("GFFR", "CDT", 0.90),
        ("GFFR", "FGEXT", 0.70),
        ("FGT", "AT", -0.05),
        ("FGT", "AP", 0.02),
        ("FGT", "AH", -0.02),
        ("FGT", "PHGOT", 0.20),
        ("FGT", "CDT", 0.75),
        ("FGT", "FGEXT", 0.60),
        ("AT", "AP", -0.30),
        ("AT", "AH", -0.50),
        ("AT", "PHGOT", 0.05),
        ("AT", "CDT", -0.08),
        ("AT", "FGEXT", -0.05),
        ("AP", "AH", 0.10),
        ("AP", "PHGOT", 0.00),
        ("AP", "CDT", 0.04),
        ("AP", "FGEXT", 0.02),
        ("AH", "PHGOT", 0.00),
        ("AH", "CDT", -0.04),
        ("AH", "FGEXT", -0.02),
        ("PHGOT", "CDT", 0.22),
        ("PHGOT", "FGEXT", 0.18),
        ("CDT", "FGEXT", 0.70),
    ];
    let mut m = Array2::<f64>::eye(9);
    let idx = |n: &str| names.iter().position(|x| x == n).unwrap();
    for &(a, b, r) in pairs {
        let (i, j) = (idx(a), idx(b));
        m[[i, j]] = r;
        m[[j, i]] = r;
    }
    CorrelationMatrix { names, matrix: m }
}

// ---------------------------------------------------------------------------
// Oracle constants. All scaled quantities use the plant_schema() [min, max].
// ---------------------------------------------------------------------------

/// Load-index weights on scaled CDP / GFFR / CDT.
const W_CDP: f64 = 0.55;
const W_GFFR: f64 = 0.15;
const W_CDT: f64 = 0.30;
/// Centering offset so the load index spans roughly [0, 1].
const LOAD_OFFSET: f64 = 0.025;
/// Ambient sensitivities of the load index (scaled units).
const AMB_AT: f64 = -0.02;
const AMB_AP: f64 = 0.01;
const AMB_AH: f64 = -0.005;
/// Power map: MIN + SPAN * softclamp01(load index).
const POWER_MIN: f64 = 185.0;
const POWER_SPAN: f64 = 210.8;
/// Effective fuel flow mixes the metered GFFR with the load index.
const FUEL_MIN: f64 = 29.0;
const FUEL_SPAN: f64 = 21.0;
const FUEL_MIX_GFFR: f64 = 0.3;
const FUEL_MIX_LOAD: f64 = 0.7;
/// TE = TE_SCALE * Power / fuel_eff plus small ambient/fuel-gas terms.
const TE_SCALE: f64 = 5.30;
const TE_AT: f64 = -0.30;
const TE_FGT: f64 = 0.30;
/// THR (kJ/kWh) = 3600 / (TE/100).
const THR_NUMERATOR: f64 = 360_000.0;
/// Output noise standard deviations (engineering units).
pub const NOISE_POWER: f64 = 1.0;
pub const NOISE_TE: f64 = 0.30;
pub const NOISE_THR: f64 = 35.0;
/// Scaled means used to center ambient/fuel-gas effects.
const MEAN_S_AT: f64 = 6.0 / 14.0;
const MEAN_S_AP: f64 = 5.0 / 9.0;
const MEAN_S_AH: f64 = 0.5;
const MEAN_S_FGT: f64 = 29.0 / 51.0;
/// Softplus sharpness of the capacity plateau.
const CLAMP_BETA: f64 = 40.0;

fn softplus(u: f64) -> f64 {
    // Numerically stable log(1 + exp(beta * u)) / beta.
    let t = CLAMP_BETA * u;
    (t.max(0.0) + (-t.abs()).exp().ln_1p()) / CLAMP_BETA
}

/// Strictly increasing smooth map from the real line onto (0, 1); identity
/// away from the edges. Keeps gradients alive at the capacity plateau.
pub fn softclamp01(t: f64) -> f64 {
    t - softplus(t - 1.0) + softplus(-t)
}

/// Engineering-unit input row in [`INPUT_NAMES`] order.
#[derive(Debug, Clone, Copy)]
pub struct OracleInputs {
    pub cdp: f64,
    pub gffr: f64,
    pub fgt: f64,
    pub at: f64,
    pub ap: f64,
    pub ah: f64,
    pub phgot: f64,
    pub cdt: f64,
    pub fgext: f64,
}

impl OracleInputs {
    pub fn from_slice(row: &[f64]) -> Self {
        Self {
            cdp: row[0],
            gffr: row[1],
            fgt: row[2],
            at: row[3],
            ap: row[4],
            ah: row[5],
            phgot: row[6],
            cdt: row[7],
            fgext: row[8],
        }
    }
}

fn scale_by(spec_min: f64, spec_max: f64, v: f64) -> f64 {
    (v - spec_min) / (spec_max - spec_min)
}

fn scaled_inputs(x: &OracleInputs) -> [f64; 9] {
    let schema = plant_schema();
    let s = |name: &str, v: f64| {
        let spec = schema.iter().find(|q| q.name == name).unwrap();
        scale_by(spec.min, spec.max, v)
    };
    [
        s("CDP", x.cdp),
        s("GFFR", x.gffr),
        s("FGT", x.fgt),
        s("AT", x.at),
        s("AP", x.ap),
        s("AH", x.ah),
        s("PHGOT", x.phgot),
        s("CDT", x.cdt),
        s("FGEXT", x.fgext),
    ]
}

fn load_index(s: &[f64; 9]) -> f64 {
    let amb = AMB_AT * (s[3] - MEAN_S_AT) + AMB_AP * (s[4] - MEAN_S_AP) + AMB_AH * (s[5] - MEAN_S_AH);
    W_CDP * s[0] + W_GFFR * s[1] + W_CDT * s[7] + LOAD_OFFSET + amb
}

/// Noise-free power (MW). Strictly increasing in CDP, GFFR and CDT.
pub fn oracle_power(x: &OracleInputs) -> f64 {
    let s = scaled_inputs(x);
    POWER_MIN + POWER_SPAN * softclamp01(load_index(&s))
}

/// Noise-free thermal efficiency (%). At fixed power, decreasing in fuel
/// flow; concave and increasing along the load direction.
pub fn oracle_te(x: &OracleInputs) -> f64 {
    let s = scaled_inputs(x);
    let q = softclamp01(load_index(&s));
    let power = POWER_MIN + POWER_SPAN * q;
    let fuel_eff = FUEL_MIN + FUEL_SPAN * (0.5 * s[1] + 0.5 * q);
    TE_SCALE * power / fuel_eff + TE_AT * (s[3] - MEAN_S_AT) + TE_FGT * (s[2] - MEAN_S_FGT)
}

/// Noise-free turbine heat rate (kJ/kWh): the reciprocal-efficiency relation.
pub fn oracle_thr(x: &OracleInputs) -> f64 {
    THR_NUMERATOR / oracle_te(x)
}

/// Generator output: the dataset plus how often marginal clipping fired.
#[derive(Debug)]
pub struct SynthOutcome {
    pub dataset: Dataset,
    /// Fraction of generated input cells that hit the [min, max] clip.
    pub clip_fraction: f64,
}

/// Marginal-distribution parameters: Beta(a, b) matched to mean/std on
/// [min, max]. Requires the declared variance to be representable.
fn beta_params(spec: &VariableSpec) -> Result<(f64, f64)> {
    let mean = spec.mean.ok_or_else(|| {
        CoreError::InvalidArgument(format!("variable '{}' needs a target mean", spec.name))
    })?;
    let std = spec.std.ok_or_else(|| {
        CoreError::InvalidArgument(format!("variable '{}' needs a target std", spec.name))
    })?;
    let range = spec.max - spec.min;
    if range <= 0.0 {
        return Err(CoreError::DegenerateColumn(spec.name.clone()));
    }
    let m = (mean - spec.min) / range;
    let v = (std / range).powi(2);
    if v >= m * (1.0 - m) {
        return Err(CoreError::InvalidArgument(format!(
            "variable '{}': std {} too large for a Beta marginal on [{}, {}]",
            spec.name, std, spec.min, spec.max
        )));
    }
    let k = m * (1.0 - m) / v - 1.0;
    Ok((m * k, (1.0 - m) * k))
}

/// Generates `n` correlated plant observations.
///
/// Inputs are drawn from a Gaussian copula over `corr` (repaired to the
/// nearest positive semi-definite correlation when needed) with Beta
/// marginals matched to each target's mean/std, then clipped to the
/// declared [min, max]. Outputs come from the documented oracle plus
/// seeded Gaussian noise. Identical seeds give bit-identical datasets.
pub fn synth_plant_generate(
    targets: &[VariableSpec],
    corr: &CorrelationMatrix,
    n: usize,
    seed: u64,
) -> Result<SynthOutcome> {
    if n < 2 {
        return Err(CoreError::TooFewRows { have: n, need: 2 });
    }
    crate::dataset::validate_schema(targets)?;
    // The oracle is defined over the fixed plant variables; require them all.
    let mut input_specs = Vec::with_capacity(9);
    for name in INPUT_NAMES {
        let spec = targets
            .iter()
            .find(|v| v.name == name)
            .ok_or_else(|| CoreError::UnknownVariable(name.to_string()))?;
        input_specs.push(spec.clone());
    }
    for name in OUTPUT_NAMES {
        if !targets.iter().any(|v| v.name == name) {
            return Err(CoreError::UnknownVariable(name.to_string()));
        }
    }

    // Copula correlation restricted to the inputs, in INPUT_NAMES order.
    let mut r = Array2::<f64>::eye(9);
    for (i, a) in INPUT_NAMES.iter().enumerate() {
        for (j, b) in INPUT_NAMES.iter().enumerate() {
            r[[i, j]] = corr.get(a, b)?;
        }
    }
    let repaired = linalg::nearest_psd(&r.view(), 1e-6, true);
    let chol = linalg::cholesky(&repaired.view()).ok_or(CoreError::IndefiniteCorrelation)?;

    let marginals: Vec<(f64, f64, Beta)> = input_specs
        .iter()
        .map(|spec| {
            let (a, b) = beta_params(spec)?;
            let dist = Beta::new(a, b)
                .map_err(|e| CoreError::InvalidArgument(format!("beta({a}, {b}): {e}")))?;
            Ok((spec.min, spec.max, dist))
        })
        .collect::<Result<Vec<_>>>()?;
    let std_normal = Normal::new(0.0, 1.0).expect("unit normal");

    let mut rng_inputs = seeds::rng(seed, "synth-inputs", 0);
    let mut rng_noise = seeds::rng(seed, "synth-noise", 0);

    let mut rows = Array2::<f64>::zeros((n, targets.len()));
    let col_of = |name: &str| targets.iter().position(|v| v.name == name).unwrap();
    let input_cols: Vec<usize> = INPUT_NAMES.iter().map(|s| col_of(s)).collect();
    let te_col = col_of(TE);
    let power_col = col_of(POWER);
    let thr_col = col_of(THR);

    let mut clipped = 0usize;
    let mut g = vec![0.0_f64; 9];
    for row_i in 0..n {
        for gj in g.iter_mut() {
            *gj = rng_inputs.sample(StandardNormal);
        }
        let mut x = [0.0_f64; 9];
        for i in 0..9 {
            let mut z = 0.0;
            for k in 0..=i {
                z += chol[[i, k]] * g[k];
            }
            let u = std_normal.cdf(z).clamp(1e-12, 1.0 - 1e-12);
            let (lo, hi, ref dist) = marginals[i];
            let mut v = lo + (hi - lo) * dist.inverse_cdf(u);
            if v < lo {
                v = lo;
                clipped += 1;
            } else if v > hi {
                v = hi;
                clipped += 1;
            }
            x[i] = v;
        }
        let inputs = OracleInputs::from_slice(&x);
        let te_clean = oracle_te(&inputs);
        let power_clean = oracle_power(&inputs);
        let thr_clean = THR_NUMERATOR / te_clean;
        let e_te: f64 = rng_noise.sample(StandardNormal);
        let e_power: f64 = rng_noise.sample(StandardNormal);
        let e_thr: f64 = rng_noise.sample(StandardNormal);

        for (i, &c) in input_cols.iter().enumerate() {
            rows[[row_i, c]] = x[i];
        }
        rows[[row_i, te_col]] = te_clean + NOISE_TE * e_te;
        rows[[row_i, power_col]] = power_clean + NOISE_POWER * e_power;
        rows[[row_i, thr_col]] = thr_clean + NOISE_THR * e_thr;
    }

    let dataset = Dataset::new(
        targets.to_vec(),
        rows,
        Provenance::Synthetic { seed, n },
    )?;
    Ok(SynthOutcome {
        dataset,
        clip_fraction: clipped as f64 / (n * 9) as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{descriptive_stats, pearson_matrix};

    fn mean_inputs() -> OracleInputs {
        OracleInputs {
            cdp: 248.0,
            gffr: 39.0,
            fgt: 513.0,
            at: 26.0,
            ap: 988.0,
            ah: 66.0,
            phgot: 411.0,
            cdt: 861.0,
            fgext: 659.0,
        }
    }

    #[test]
    fn softclamp_is_monotone_and_bounded() {
        let mut prev = softclamp01(-0.5);
        let mut t = -0.5;
        while t < 2.0 {
            t += 0.01;
            let v = softclamp01(t);
            // Strict increase over the operating range; beyond the plateau
            // the analytic slope underflows f64 resolution.
            if t < 1.2 {
                assert!(v > prev, "softclamp01 not strictly increasing at t={t}");
            } else {
                assert!(v >= prev - 1e-12, "softclamp01 decreasing at t={t}");
            }
            assert!(v > 0.0 && v < 1.0 + 1e-9);
            prev = v;
        }
        // Near-identity in the interior.
        assert!((softclamp01(0.5) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn oracle_monotone_in_load_drivers() {
        let base = mean_inputs();
        let p0 = oracle_power(&base);
        for (bump, label) in [
            (OracleInputs { cdp: 260.0, ..base }, "CDP"),
            (OracleInputs { gffr: 42.0, ..base }, "GFFR"),
            (OracleInputs { cdt: 880.0, ..base }, "CDT"),
        ] {
            assert!(oracle_power(&bump) > p0, "power must rise with {label}");
        }
        // Hotter ambient derates power at identical process settings.
        let hot = OracleInputs { at: 34.0, ..base };
        assert!(oracle_power(&hot) < p0);
    }

    #[test]
    fn oracle_te_higher_at_max_power_operating_point() {
        // Evaluate the documented oracle at the min-power and max-power
        // operating points (load trio at its extremes, ambient at mean).
        let low = OracleInputs {
            cdp: 186.0,
            gffr: 29.0,
            cdt: 813.0,
            ..mean_inputs()
        };
        let high = OracleInputs {
            cdp: 312.0,
            gffr: 50.0,
            cdt: 926.0,
            ..mean_inputs()
        };
        assert!(oracle_power(&high) > oracle_power(&low));
        assert!(oracle_te(&high) > oracle_te(&low));
        // Heat rate is reciprocal: lower at high efficiency.
        assert!(oracle_thr(&high) < oracle_thr(&low));
    }

    #[test]
    fn te_decreasing_in_fuel_at_fixed_process_state() {
        let base = mean_inputs();
        let more_fuel = OracleInputs { gffr: 43.0, ..base };
        // More fuel raises power but costs efficiency per unit of power:
        // TE rises slower than power; the fuel-normalized TE ratio drops.
        let te_ratio_base = oracle_te(&base) / oracle_power(&base);
        let te_ratio_fuel = oracle_te(&more_fuel) / oracle_power(&more_fuel);
        assert!(te_ratio_fuel < te_ratio_base);
    }

    #[test]
    fn generator_is_deterministic() {
        let schema = plant_schema();
        let corr = default_input_correlation();
        let a = synth_plant_generate(&schema, &corr, 50, 7).unwrap();
        let b = synth_plant_generate(&schema, &corr, 50, 7).unwrap();
        assert_eq!(a.dataset.rows(), b.dataset.rows());
        let c = synth_plant_generate(&schema, &corr, 50, 8).unwrap();
        assert_ne!(a.dataset.rows(), c.dataset.rows());
    }

    #[test]
    fn generator_matches_calibration_targets() {
        let schema = plant_schema();
        let corr = default_input_correlation();
        let out = synth_plant_generate(&schema, &corr, 5000, 7).unwrap();
        assert!(out.clip_fraction < 0.02, "clip fraction {}", out.clip_fraction);
        let stats = descriptive_stats(&out.dataset).unwrap();
        for spec in &schema {
            let s = stats.iter().find(|v| v.name == spec.name).unwrap();
            let mean = spec.mean.unwrap();
            let std = spec.std.unwrap();
            let mean_err = (s.mean - mean).abs() / mean.abs();
            let std_err = (s.std - std).abs() / std;
            assert!(
                mean_err < 0.05,
                "{}: mean {} vs target {} ({:.1}%)",
                spec.name,
                s.mean,
                mean,
                100.0 * mean_err
            );
            assert!(
                std_err < 0.05,
                "{}: std {} vs target {} ({:.1}%)",
                spec.name,
                s.std,
                std,
                100.0 * std_err
            );
        }
        // Power range lands on the Table-1 extremes within 5%.
        let power = stats.iter().find(|v| v.name == "Power").unwrap();
        assert!((power.min - 185.0).abs() / 185.0 < 0.05, "power min {}", power.min);
        assert!((power.max - 395.0).abs() / 395.0 < 0.05, "power max {}", power.max);
    }

    #[test]
    fn strongly_coupled_pair_survives_the_copula() {
        let schema = plant_schema();
        let corr = default_input_correlation();
        let out = synth_plant_generate(&schema, &corr, 2000, 3).unwrap();
        let sample = pearson_matrix(&out.dataset).unwrap();
        assert!(sample.get("CDP", "GFFR").unwrap() > 0.9);
    }
}

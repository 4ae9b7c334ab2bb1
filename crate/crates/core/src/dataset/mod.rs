//! Plant operating data: schema, loading, summary statistics and splits.

pub mod scaler;
pub mod synth;

pub use scaler::ScalerParams;

use std::collections::HashMap;
use std::path::Path;

use ndarray::{Array1, Array2, ArrayView1, ArrayView2, Axis};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::seeds;

/// What a column measures, and on which side of the surrogate it sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableRole {
    ProcessInput,
    AmbientInput,
    PerformanceOutput,
}

impl VariableRole {
    pub fn is_input(self) -> bool {
        matches!(self, VariableRole::ProcessInput | VariableRole::AmbientInput)
    }
}

/// Declared properties of one column: unit, role and engineering-unit
/// statistics. `mean`/`std` are optional in the JSON sidecar; the synthetic
/// generator requires them as calibration targets.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    pub unit: String,
    pub role: VariableRole,
    pub min: f64,
    pub max: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub std: Option<f64>,
}

impl VariableSpec {
    pub fn new(
        name: &str,
        unit: &str,
        role: VariableRole,
        min: f64,
        max: f64,
        mean: f64,
        std: f64,
    ) -> Self {
        Self {
            name: name.to_string(),
            unit: unit.to_string(),
            role,
            min,
            max,
            mean: Some(mean),
            std: Some(std),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.min <= self.max) {
            return Err(CoreError::InvalidArgument(format!(
                "variable '{}': min {} exceeds max {}",
                self.name, self.min, self.max
            )));
        }
        if let Some(m) = self.mean {
            if m < self.min || m > self.max {
                return Err(CoreError::InvalidArgument(format!(
                    "variable '{}': mean {} outside [{}, {}]",
                    self.name, m, self.min, self.max
                )));
            }
        }
        if let Some(s) = self.std {
            if s < 0.0 {
                return Err(CoreError::InvalidArgument(format!(
                    "variable '{}': negative std {}",
                    self.name, s
                )));
            }
        }
        Ok(())
    }
}

/// Validates a schema: per-variable invariants plus name uniqueness.
pub fn validate_schema(schema: &[VariableSpec]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for v in schema {
        v.validate()?;
        if !seen.insert(v.name.clone()) {
            return Err(CoreError::SchemaMismatch(format!(
                "duplicate variable name '{}'",
                v.name
            )));
        }
    }
    Ok(())
}

/// Reads a schema sidecar (JSON list of variable specs).
pub fn load_schema(path: &Path) -> Result<Vec<VariableSpec>> {
    let text = std::fs::read_to_string(path)?;
    let schema: Vec<VariableSpec> = serde_json::from_str(&text)?;
    validate_schema(&schema)?;
    Ok(schema)
}

/// Where a dataset came from, for run manifests.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    Csv { path: String },
    Synthetic { seed: u64, n: usize },
    Derived { origin: String },
}

/// Immutable columnar table of plant observations in engineering units.
#[derive(Debug, Clone)]
pub struct Dataset {
    schema: Vec<VariableSpec>,
    rows: Array2<f64>,
    provenance: Provenance,
}

impl Dataset {
    /// Builds a dataset and enforces the construction invariants:
    /// all values finite, at least two rows, column count matching schema.
    pub fn new(schema: Vec<VariableSpec>, rows: Array2<f64>, provenance: Provenance) -> Result<Self> {
        validate_schema(&schema)?;
        if rows.ncols() != schema.len() {
            return Err(CoreError::DimensionMismatch {
                expected: schema.len(),
                got: rows.ncols(),
            });
        }
        if rows.nrows() < 2 {
            return Err(CoreError::TooFewRows {
                have: rows.nrows(),
                need: 2,
            });
        }
        if let Some(((r, c), _)) = rows.indexed_iter().find(|(_, v)| !v.is_finite()) {
            return Err(CoreError::Parse {
                row: r + 1,
                column: schema[c].name.clone(),
                message: "non-finite value".into(),
            });
        }
        Ok(Self {
            schema,
            rows,
            provenance,
        })
    }

    /// Internal constructor for subsets produced by splits and filters;
    /// permits empty row sets (an empty holdout is a warning, not an error).
    fn from_parts(schema: Vec<VariableSpec>, rows: Array2<f64>, origin: &str) -> Self {
        Self {
            schema,
            rows,
            provenance: Provenance::Derived {
                origin: origin.to_string(),
            },
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.nrows() == 0
    }

    pub fn schema(&self) -> &[VariableSpec] {
        &self.schema
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn rows(&self) -> ArrayView2<f64> {
        self.rows.view()
    }

    pub fn column_index(&self, name: &str) -> Result<usize> {
        self.schema
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| CoreError::UnknownVariable(name.to_string()))
    }

    pub fn column(&self, name: &str) -> Result<ArrayView1<f64>> {
        let idx = self.column_index(name)?;
        Ok(self.rows.column(idx))
    }

    /// Names of the model input variables, in schema order.
    pub fn input_names(&self) -> Vec<String> {
        self.schema
            .iter()
            .filter(|v| v.role.is_input())
            .map(|v| v.name.clone())
            .collect()
    }

    /// Names of the performance outputs, in schema order.
    pub fn output_names(&self) -> Vec<String> {
        self.schema
            .iter()
            .filter(|v| v.role == VariableRole::PerformanceOutput)
            .map(|v| v.name.clone())
            .collect()
    }

    /// Copies the named columns into a fresh N x k matrix.
    pub fn select(&self, names: &[String]) -> Result<Array2<f64>> {
        let mut out = Array2::<f64>::zeros((self.n_rows(), names.len()));
        for (k, name) in names.iter().enumerate() {
            let idx = self.column_index(name)?;
            out.column_mut(k).assign(&self.rows.column(idx));
        }
        Ok(out)
    }

    /// Input matrix (process + ambient columns) in schema order.
    pub fn input_matrix(&self) -> Array2<f64> {
        self.select(&self.input_names()).expect("input columns exist")
    }

    fn take_rows(&self, idx: &[usize], origin: &str) -> Dataset {
        let mut rows = Array2::<f64>::zeros((idx.len(), self.schema.len()));
        for (k, &i) in idx.iter().enumerate() {
            rows.row_mut(k).assign(&self.rows.row(i));
        }
        Dataset::from_parts(self.schema.clone(), rows, origin)
    }

    /// Writes the dataset as CSV (header row, '.' decimal, UTF-8).
    pub fn to_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(self.schema.iter().map(|v| v.name.as_str()))?;
        for row in self.rows.rows() {
            w.write_record(row.iter().map(|v| format_cell(*v)))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Shortest decimal representation that round-trips the f64 exactly.
fn format_cell(v: f64) -> String {
    let mut buf = ryu_format(v);
    if !buf.contains('.') && !buf.contains('e') && !buf.contains("inf") && !buf.contains("NaN") {
        buf.push_str(".0");
    }
    buf
}

fn ryu_format(v: f64) -> String {
    // `{}` on f64 already uses the shortest round-trip representation.
    format!("{v}")
}

/// Output of a CSV load: the dataset plus non-fatal warnings
/// (extra columns that were ignored).
#[derive(Debug)]
pub struct LoadOutcome {
    pub dataset: Dataset,
    pub warnings: Vec<String>,
}

/// How far outside the declared [min, max] a loaded value may sit before
/// the load fails, as a fraction of the declared range.
#[derive(Debug, Clone, Copy)]
pub struct SanityPolicy {
    pub margin_frac: f64,
}

impl Default for SanityPolicy {
    fn default() -> Self {
        Self { margin_frac: 0.5 }
    }
}

/// Loads a CSV with a header row matching `schema` names (order-insensitive).
/// Columns are reordered into schema order; extra columns are ignored with a
/// warning; missing values and non-numeric cells are hard errors.
pub fn load_csv(path: &Path, schema: &[VariableSpec]) -> Result<LoadOutcome> {
    load_csv_with(path, schema, SanityPolicy::default())
}

pub fn load_csv_with(
    path: &Path,
    schema: &[VariableSpec],
    policy: SanityPolicy,
) -> Result<LoadOutcome> {
    validate_schema(schema)?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_path(path)?;
    let headers = reader.headers()?.clone();
    if headers.is_empty() {
        return Err(CoreError::SchemaMismatch("empty file: no header row".into()));
    }

    let mut header_pos: HashMap<&str, usize> = HashMap::new();
    for (i, h) in headers.iter().enumerate() {
        header_pos.insert(h.trim(), i);
    }
    let mut col_map = Vec::with_capacity(schema.len());
    for v in schema {
        match header_pos.get(v.name.as_str()) {
            Some(&i) => col_map.push(i),
            None => {
                return Err(CoreError::SchemaMismatch(format!(
                    "missing column '{}'",
                    v.name
                )))
            }
        }
    }
    let mut warnings = Vec::new();
    for h in headers.iter() {
        if !schema.iter().any(|v| v.name == h.trim()) {
            warnings.push(format!("ignoring extra column '{}'", h.trim()));
        }
    }

    let mut data: Vec<f64> = Vec::new();
    let mut n_rows = 0usize;
    for (r, record) in reader.records().enumerate() {
        let record = record?;
        for (c, &src) in col_map.iter().enumerate() {
            let cell = record.get(src).unwrap_or("").trim();
            let value: f64 = cell.parse().map_err(|_| CoreError::Parse {
                row: r + 1,
                column: schema[c].name.clone(),
                message: format!("cannot parse '{cell}' as a number"),
            })?;
            if !value.is_finite() {
                return Err(CoreError::Parse {
                    row: r + 1,
                    column: schema[c].name.clone(),
                    message: "non-finite value".into(),
                });
            }
            let spec = &schema[c];
            let slack = policy.margin_frac * (spec.max - spec.min);
            if value < spec.min - slack || value > spec.max + slack {
                return Err(CoreError::Parse {
                    row: r + 1,
                    column: spec.name.clone(),
                    message: format!(
                        "value {value} outside sanity bounds [{}, {}]",
                        spec.min - slack,
                        spec.max + slack
                    ),
                });
            }
            data.push(value);
        }
        n_rows += 1;
    }
    if n_rows == 0 {
        return Err(CoreError::SchemaMismatch("empty file: no data rows".into()));
    }
    let rows = Array2::from_shape_vec((n_rows, schema.len()), data)
        .expect("row-major shape from parsed cells");
    let dataset = Dataset::new(
        schema.to_vec(),
        rows,
        Provenance::Csv {
            path: path.display().to_string(),
        },
    )?;
    Ok(LoadOutcome { dataset, warnings })
}

/// Per-variable summary statistics in engineering units.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VarStats {
    pub name: String,
    pub unit: String,
    pub min: f64,
    pub mean: f64,
    pub max: f64,
    pub std: f64,
}

/// Minimum, mean, maximum and sample standard deviation (N-1 denominator)
/// of every column.
pub fn descriptive_stats(data: &Dataset) -> Result<Vec<VarStats>> {
    if data.n_rows() < 2 {
        return Err(CoreError::TooFewRows {
            have: data.n_rows(),
            need: 2,
        });
    }
    let n = data.n_rows() as f64;
    let mut out = Vec::with_capacity(data.schema().len());
    for (i, spec) in data.schema().iter().enumerate() {
        let col = data.rows.column(i);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for &v in col.iter() {
            lo = lo.min(v);
            hi = hi.max(v);
            sum += v;
        }
        let mean = sum / n;
        let ss: f64 = col.iter().map(|&v| (v - mean) * (v - mean)).sum();
        let std = (ss / (n - 1.0)).sqrt();
        out.push(VarStats {
            name: spec.name.clone(),
            unit: spec.unit.clone(),
            min: lo,
            mean,
            max: hi,
            std,
        });
    }
    Ok(out)
}

/// Symmetric matrix of Pearson correlation coefficients with a name index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    pub names: Vec<String>,
    pub matrix: Array2<f64>,
}

impl CorrelationMatrix {
    pub fn get(&self, a: &str, b: &str) -> Result<f64> {
        let i = self
            .names
            .iter()
            .position(|n| n == a)
            .ok_or_else(|| CoreError::UnknownVariable(a.to_string()))?;
        let j = self
            .names
            .iter()
            .position(|n| n == b)
            .ok_or_else(|| CoreError::UnknownVariable(b.to_string()))?;
        Ok(self.matrix[[i, j]])
    }
}

/// Pearson correlation matrix over every column of the dataset.
/// A constant column makes the coefficient undefined and is an error.
pub fn pearson_matrix(data: &Dataset) -> Result<CorrelationMatrix> {
    let names: Vec<String> = data.schema().iter().map(|v| v.name.clone()).collect();
    correlation_of(&data.rows.view(), &names)
}

/// Pearson correlation of an arbitrary column matrix.
pub fn correlation_of(x: &ArrayView2<f64>, names: &[String]) -> Result<CorrelationMatrix> {
    let n = x.nrows();
    if n < 2 {
        return Err(CoreError::TooFewRows { have: n, need: 2 });
    }
    let p = x.ncols();
    let means = x.mean_axis(Axis(0)).expect("nonempty");
    let mut centered = x.to_owned();
    for mut row in centered.rows_mut() {
        row -= &means;
    }
    let mut norms = Array1::<f64>::zeros(p);
    for j in 0..p {
        let s: f64 = centered.column(j).iter().map(|v| v * v).sum();
        if s == 0.0 {
            return Err(CoreError::ConstantColumn(names[j].clone()));
        }
        norms[j] = s.sqrt();
    }
    let mut m = Array2::<f64>::zeros((p, p));
    for i in 0..p {
        m[[i, i]] = 1.0;
        for j in (i + 1)..p {
            let dot: f64 = centered
                .column(i)
                .iter()
                .zip(centered.column(j).iter())
                .map(|(a, b)| a * b)
                .sum();
            let r = (dot / (norms[i] * norms[j])).clamp(-1.0, 1.0);
            m[[i, j]] = r;
            m[[j, i]] = r;
        }
    }
    Ok(CorrelationMatrix {
        names: names.to_vec(),
        matrix: m,
    })
}

/// Disjoint, exhaustive, seeded shuffle split with |train| = round(ratio * N).
pub fn split(data: &Dataset, ratio: f64, seed: u64) -> Result<(Dataset, Dataset)> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(CoreError::InvalidArgument(format!(
            "split ratio must be in (0, 1), got {ratio}"
        )));
    }
    let n = data.n_rows();
    if n < 5 {
        return Err(CoreError::TooFewRows { have: n, need: 5 });
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut rng = seeds::rng(seed, "dataset-split", 0);
    idx.shuffle(&mut rng);
    let n_train = (ratio * n as f64).round() as usize;
    let train = data.take_rows(&idx[..n_train], "split-train");
    let test = data.take_rows(&idx[n_train..], "split-test");
    Ok((train, test))
}

/// Result of partitioning on a Power threshold.
#[derive(Debug)]
pub struct SubspaceSplit {
    pub subspace: Dataset,
    pub holdout: Dataset,
    pub warnings: Vec<String>,
}

/// Partitions rows by `Power <= threshold` (subspace) vs `> threshold`
/// (holdout). An empty side is a warning, not an error.
pub fn subspace_filter(data: &Dataset, power_name: &str, threshold: f64) -> Result<SubspaceSplit> {
    let col = data.column(power_name)?;
    let mut lo_idx = Vec::new();
    let mut hi_idx = Vec::new();
    for (i, &v) in col.iter().enumerate() {
        if v <= threshold {
            lo_idx.push(i);
        } else {
            hi_idx.push(i);
        }
    }
    let mut warnings = Vec::new();
    if lo_idx.is_empty() {
        warnings.push(format!("subspace is empty at threshold {threshold}"));
    }
    if hi_idx.is_empty() {
        warnings.push(format!("holdout is empty at threshold {threshold}"));
    }
    Ok(SubspaceSplit {
        subspace: data.take_rows(&lo_idx, "subspace"),
        holdout: data.take_rows(&hi_idx, "holdout"),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    fn tiny_schema() -> Vec<VariableSpec> {
        vec![
            VariableSpec::new("a", "-", VariableRole::ProcessInput, 0.0, 10.0, 5.0, 2.0),
            VariableSpec::new("b", "-", VariableRole::PerformanceOutput, 0.0, 10.0, 5.0, 2.0),
        ]
    }

    fn tiny_dataset(values: Array2<f64>) -> Dataset {
        Dataset::new(tiny_schema(), values, Provenance::Derived { origin: "test".into() }).unwrap()
    }

    #[test]
    fn stats_constant_column() {
        let d = tiny_dataset(array![[5.0, 1.0], [5.0, 2.0], [5.0, 3.0]]);
        let s = descriptive_stats(&d).unwrap();
        assert_eq!(s[0].min, 5.0);
        assert_eq!(s[0].mean, 5.0);
        assert_eq!(s[0].max, 5.0);
        assert_eq!(s[0].std, 0.0);
    }

    #[test]
    fn stats_hand_computed() {
        // [1,2,3]: mean 2, sample std 1 with the N-1 denominator.
        let d = tiny_dataset(array![[1.0, 0.0], [2.0, 1.0], [3.0, 2.0]]);
        let s = descriptive_stats(&d).unwrap();
        assert_abs_diff_eq!(s[0].mean, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s[0].std, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn pearson_identities_and_hand_value() {
        let d = tiny_dataset(array![[1.0, 2.0], [2.0, 4.0], [3.0, 7.0]]);
        let c = pearson_matrix(&d).unwrap();
        assert_abs_diff_eq!(c.get("a", "a").unwrap(), 1.0, epsilon = 1e-15);
        // Hand evaluation: x=[1,2,3], y=[2,4,7] gives 5 / (sqrt(2)*sqrt(38/3)).
        let expect = 5.0 / (2.0_f64.sqrt() * (38.0_f64 / 3.0).sqrt());
        assert_abs_diff_eq!(c.get("a", "b").unwrap(), expect, epsilon = 1e-12);
        assert_abs_diff_eq!(c.get("a", "b").unwrap(), 0.9934, epsilon = 5e-5);
    }

    #[test]
    fn pearson_anticorrelation() {
        let d = tiny_dataset(array![[1.0, -1.0], [2.0, -2.0], [3.0, -3.0]]);
        let c = pearson_matrix(&d).unwrap();
        assert_abs_diff_eq!(c.get("a", "b").unwrap(), -1.0, epsilon = 1e-12);
    }

    #[test]
    fn pearson_rejects_constant_column() {
        let d = tiny_dataset(array![[1.0, 1.0], [1.0, 2.0], [1.0, 3.0]]);
        match pearson_matrix(&d) {
            Err(CoreError::ConstantColumn(name)) => assert_eq!(name, "a"),
            other => panic!("expected constant-column error, got {other:?}"),
        }
    }

    #[test]
    fn pearson_affine_invariance() {
        let d = tiny_dataset(array![[1.0, 2.0], [2.0, 4.0], [3.0, 7.0], [1.5, 3.1]]);
        let c1 = pearson_matrix(&d).unwrap().get("a", "b").unwrap();
        // Positive affine transform of column a.
        let mut rows = d.rows().to_owned();
        for mut r in rows.rows_mut() {
            r[0] = 3.5 * r[0] + 11.0;
        }
        let d2 = tiny_dataset(rows);
        let c2 = pearson_matrix(&d2).unwrap().get("a", "b").unwrap();
        assert!((c1 - c2).abs() < 1e-10);
    }

    #[test]
    fn split_contract() {
        let n = 100;
        let rows = Array2::from_shape_fn((n, 2), |(i, j)| (i * 2 + j) as f64);
        let d = tiny_dataset(rows);
        let (tr, te) = split(&d, 0.8, 42).unwrap();
        assert_eq!(tr.n_rows(), 80);
        assert_eq!(te.n_rows(), 20);
        // Same seed reproduces the partition exactly.
        let (tr2, _) = split(&d, 0.8, 42).unwrap();
        assert_eq!(tr.rows(), tr2.rows());
        // Disjoint and exhaustive on the first column values (all distinct).
        let mut seen: Vec<f64> = tr
            .rows()
            .column(0)
            .iter()
            .chain(te.rows().column(0).iter())
            .copied()
            .collect();
        seen.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (i, v) in seen.iter().enumerate() {
            assert_eq!(*v, (i * 2) as f64);
        }
    }

    #[test]
    fn split_rejects_bad_ratio_and_tiny_data() {
        let d = tiny_dataset(array![[1.0, 2.0], [2.0, 4.0], [3.0, 7.0]]);
        assert!(matches!(split(&d, 1.0, 1), Err(CoreError::InvalidArgument(_))));
        assert!(matches!(split(&d, 0.8, 1), Err(CoreError::TooFewRows { .. })));
    }

    #[test]
    fn subspace_partition_is_exhaustive() {
        let rows = Array2::from_shape_fn((10, 2), |(i, j)| if j == 0 { i as f64 } else { 0.5 });
        let d = tiny_dataset(rows);
        let s = subspace_filter(&d, "a", 4.0).unwrap();
        assert_eq!(s.subspace.n_rows() + s.holdout.n_rows(), 10);
        assert!(s.subspace.column("a").unwrap().iter().all(|&v| v <= 4.0));
        assert!(s.holdout.column("a").unwrap().iter().all(|&v| v > 4.0));
        assert!(s.warnings.is_empty());
        let s2 = subspace_filter(&d, "a", 100.0).unwrap();
        assert!(s2.holdout.is_empty());
        assert_eq!(s2.warnings.len(), 1);
    }

    #[test]
    fn csv_roundtrip_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("data.csv");
        let d = tiny_dataset(array![[1.0, 2.0], [2.25, 4.5], [3.0, 7.0]]);
        d.to_csv(&p).unwrap();
        let back = load_csv(&p, &tiny_schema()).unwrap();
        assert!(back.warnings.is_empty());
        assert_eq!(back.dataset.rows(), d.rows());

        // Missing column error names the column.
        std::fs::write(&p, "a\n1\n2\n").unwrap();
        match load_csv(&p, &tiny_schema()) {
            Err(CoreError::SchemaMismatch(msg)) => assert!(msg.contains("'b'")),
            other => panic!("expected schema mismatch, got {other:?}"),
        }

        // Non-numeric cell cites the row.
        std::fs::write(&p, "a,b\n1,2\n1,n/a\n").unwrap();
        match load_csv(&p, &tiny_schema()) {
            Err(CoreError::Parse { row, column, .. }) => {
                assert_eq!(row, 2);
                assert_eq!(column, "b");
            }
            other => panic!("expected parse error, got {other:?}"),
        }

        // Extra columns warn but load.
        std::fs::write(&p, "a,b,extra\n1,2,9\n2,3,9\n").unwrap();
        let out = load_csv(&p, &tiny_schema()).unwrap();
        assert_eq!(out.warnings.len(), 1);
        assert_eq!(out.dataset.n_rows(), 2);
    }
}

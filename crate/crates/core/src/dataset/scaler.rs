//! Min-max scaling of engineering-unit columns onto [0, 1].

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{CoreError, Result};

/// Per-column (min, max) pairs for the affine map x -> (x - min)/(max - min).
///
/// The `id` is a content hash; models fitted against the same scaler carry
/// it so that mixing surrogates trained on different scalings is caught.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ScalerParams {
    pub columns: Vec<String>,
    pub mins: Vec<f64>,
    pub maxs: Vec<f64>,
    pub id: String,
}

impl ScalerParams {
    /// Fits column extrema over the named columns of `data`.
    /// A constant column cannot be scaled and is rejected.
    pub fn fit(data: &Dataset, columns: &[String]) -> Result<Self> {
        let mut mins = Vec::with_capacity(columns.len());
        let mut maxs = Vec::with_capacity(columns.len());
        for name in columns {
            let col = data.column(name)?;
            let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if !(hi > lo) {
                return Err(CoreError::DegenerateColumn(name.clone()));
            }
            mins.push(lo);
            maxs.push(hi);
        }
        Ok(Self::from_bounds(columns.to_vec(), mins, maxs))
    }

    /// Builds a scaler from explicit bounds (e.g. the declared schema range).
    pub fn from_bounds(columns: Vec<String>, mins: Vec<f64>, maxs: Vec<f64>) -> Self {
        let id = content_id(&columns, &mins, &maxs);
        Self {
            columns,
            mins,
            maxs,
            id,
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.columns
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| CoreError::UnknownVariable(name.to_string()))
    }

    pub fn bounds(&self, name: &str) -> Result<(f64, f64)> {
        let i = self.index_of(name)?;
        Ok((self.mins[i], self.maxs[i]))
    }

    /// Range max - min of a named column.
    pub fn range(&self, name: &str) -> Result<f64> {
        let (lo, hi) = self.bounds(name)?;
        Ok(hi - lo)
    }

    pub fn scale_value(&self, name: &str, v: f64) -> Result<f64> {
        let i = self.index_of(name)?;
        Ok((v - self.mins[i]) / (self.maxs[i] - self.mins[i]))
    }

    pub fn unscale_value(&self, name: &str, s: f64) -> Result<f64> {
        let i = self.index_of(name)?;
        Ok(self.mins[i] + s * (self.maxs[i] - self.mins[i]))
    }

    /// Scales a row given in this scaler's column order.
    pub fn scale_row(&self, row: &ArrayView1<f64>) -> Result<Array1<f64>> {
        self.check_width(row.len())?;
        Ok(Array1::from_iter(row.iter().enumerate().map(|(i, &v)| {
            (v - self.mins[i]) / (self.maxs[i] - self.mins[i])
        })))
    }

    /// Inverse of [`scale_row`](Self::scale_row).
    pub fn unscale_row(&self, row: &ArrayView1<f64>) -> Result<Array1<f64>> {
        self.check_width(row.len())?;
        Ok(Array1::from_iter(row.iter().enumerate().map(|(i, &s)| {
            self.mins[i] + s * (self.maxs[i] - self.mins[i])
        })))
    }

    /// Scales a matrix whose columns follow this scaler's column order.
    pub fn scale_matrix(&self, m: &ArrayView2<f64>) -> Result<Array2<f64>> {
        self.check_width(m.ncols())?;
        let mut out = m.to_owned();
        for (i, mut col) in out.columns_mut().into_iter().enumerate() {
            let lo = self.mins[i];
            let inv = 1.0 / (self.maxs[i] - lo);
            col.mapv_inplace(|v| (v - lo) * inv);
        }
        Ok(out)
    }

    pub fn unscale_matrix(&self, m: &ArrayView2<f64>) -> Result<Array2<f64>> {
        self.check_width(m.ncols())?;
        let mut out = m.to_owned();
        for (i, mut col) in out.columns_mut().into_iter().enumerate() {
            let lo = self.mins[i];
            let range = self.maxs[i] - lo;
            col.mapv_inplace(|v| lo + v * range);
        }
        Ok(out)
    }

    /// Sub-scaler over a subset of columns, preserving per-column bounds.
    pub fn project(&self, names: &[String]) -> Result<ScalerParams> {
        let mut mins = Vec::with_capacity(names.len());
        let mut maxs = Vec::with_capacity(names.len());
        for n in names {
            let i = self.index_of(n)?;
            mins.push(self.mins[i]);
            maxs.push(self.maxs[i]);
        }
        Ok(ScalerParams::from_bounds(names.to_vec(), mins, maxs))
    }

    fn check_width(&self, w: usize) -> Result<()> {
        if w != self.len() {
            return Err(CoreError::DimensionMismatch {
                expected: self.len(),
                got: w,
            });
        }
        Ok(())
    }
}

fn content_id(columns: &[String], mins: &[f64], maxs: &[f64]) -> String {
    // FNV-1a over the column names and exact bound bits.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for (i, c) in columns.iter().enumerate() {
        eat(c.as_bytes());
        eat(&mins[i].to_bits().to_le_bytes());
        eat(&maxs[i].to_bits().to_le_bytes());
    }
    format!("scaler-{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{Provenance, VariableRole, VariableSpec};
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use rand::Rng;

    fn cdp_dataset() -> Dataset {
        // Column spanning the Table-1 CDP extrema.
        let schema = vec![VariableSpec::new(
            "CDP",
            "Psi",
            VariableRole::ProcessInput,
            186.0,
            312.0,
            248.0,
            36.82,
        )];
        let rows = array![[186.0], [248.0], [312.0]];
        Dataset::new(schema, rows, Provenance::Derived { origin: "test".into() }).unwrap()
    }

    #[test]
    fn fit_captures_extrema() {
        let d = cdp_dataset();
        let s = ScalerParams::fit(&d, &["CDP".to_string()]).unwrap();
        assert_eq!(s.bounds("CDP").unwrap(), (186.0, 312.0));
        assert_abs_diff_eq!(s.scale_value("CDP", 186.0).unwrap(), 0.0);
        assert_abs_diff_eq!(s.scale_value("CDP", 312.0).unwrap(), 1.0);
        // Hand arithmetic: (248 - 186) / (312 - 186) = 62/126.
        assert_abs_diff_eq!(
            s.scale_value("CDP", 248.0).unwrap(),
            62.0 / 126.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(s.scale_value("CDP", 248.0).unwrap(), 0.4921, epsilon = 5e-5);
    }

    #[test]
    fn constant_column_is_degenerate() {
        let schema = vec![VariableSpec::new(
            "c",
            "-",
            VariableRole::ProcessInput,
            0.0,
            10.0,
            5.0,
            1.0,
        )];
        let rows = array![[5.0], [5.0]];
        let d = Dataset::new(schema, rows, Provenance::Derived { origin: "t".into() }).unwrap();
        assert!(matches!(
            ScalerParams::fit(&d, &["c".to_string()]),
            Err(CoreError::DegenerateColumn(_))
        ));
    }

    #[test]
    fn unknown_column_is_an_error() {
        let d = cdp_dataset();
        let s = ScalerParams::fit(&d, &["CDP".to_string()]).unwrap();
        assert!(matches!(
            s.scale_value("GFFR", 1.0),
            Err(CoreError::UnknownVariable(_))
        ));
    }

    #[test]
    fn roundtrip_on_random_rows() {
        let s = ScalerParams::from_bounds(
            vec!["a".into(), "b".into(), "c".into()],
            vec![-3.0, 100.0, 0.001],
            vec![7.5, 900.0, 0.002],
        );
        let mut rng = crate::seeds::rng(11, "scaler-test", 0);
        let mut worst = 0.0_f64;
        for _ in 0..100 {
            let row = array![
                rng.gen_range(-3.0..7.5),
                rng.gen_range(100.0..900.0),
                rng.gen_range(0.001..0.002)
            ];
            let back = s.unscale_row(&s.scale_row(&row.view()).unwrap().view()).unwrap();
            for (x, y) in row.iter().zip(back.iter()) {
                worst = worst.max(((x - y) / x).abs());
            }
        }
        assert!(worst < 1e-12, "round-trip relative error {worst}");
    }

    #[test]
    fn ids_track_content() {
        let a = ScalerParams::from_bounds(vec!["x".into()], vec![0.0], vec![1.0]);
        let b = ScalerParams::from_bounds(vec!["x".into()], vec![0.0], vec![2.0]);
        assert_ne!(a.id, b.id);
        let c = ScalerParams::from_bounds(vec!["x".into()], vec![0.0], vec![1.0]);
        assert_eq!(a.id, c.id);
    }
}

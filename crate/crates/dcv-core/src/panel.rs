//! The n×p data panel handed to the selectors.

use chrono::NaiveDate;
use ndarray::{Array2, ArrayView2};

use crate::error::{DcvError, Result};

/// An n×p real data matrix with optional row timestamps and column labels.
///
/// Rows are observations, columns are variables. Timestamps and labels are
/// carried for reporting only; the selectors consume the raw values.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelMatrix {
    values: Array2<f64>,
    dates: Option<Vec<NaiveDate>>,
    labels: Option<Vec<String>>,
}

impl PanelMatrix {
    /// Wraps a bare matrix. Rejects empty or non-finite input.
    pub fn new(values: Array2<f64>) -> Result<Self> {
        Self::with_metadata(values, None, None)
    }

    /// Wraps a matrix together with row dates and/or column labels.
    pub fn with_metadata(
        values: Array2<f64>,
        dates: Option<Vec<NaiveDate>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let (n, p) = values.dim();
        if n == 0 || p == 0 {
            return Err(DcvError::EmptyMatrix);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(DcvError::NonFiniteInput);
        }
        if let Some(d) = &dates {
            if d.len() != n {
                return Err(DcvError::Dimension(format!(
                    "{} dates for {} rows",
                    d.len(),
                    n
                )));
            }
        }
        if let Some(l) = &labels {
            if l.len() != p {
                return Err(DcvError::Dimension(format!(
                    "{} labels for {} columns",
                    l.len(),
                    p
                )));
            }
        }
        Ok(Self {
            values,
            dates,
            labels,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.values.nrows()
    }

    pub fn n_cols(&self) -> usize {
        self.values.ncols()
    }

    pub fn values(&self) -> ArrayView2<'_, f64> {
        self.values.view()
    }

    pub fn dates(&self) -> Option<&[NaiveDate]> {
        self.dates.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Consumes the panel, returning the underlying matrix.
    pub fn into_values(self) -> Array2<f64> {
        self.values
    }

    /// Subtracts the mean of every column in place.
    pub fn center_columns(&mut self) {
        let n = self.values.nrows() as f64;
        for mut col in self.values.columns_mut() {
            let mean = col.sum() / n;
            col.mapv_inplace(|v| v - mean);
        }
    }

    /// Centers every column and scales it to unit population variance.
    /// Constant columns are left centered but unscaled.
    pub fn standardize_columns(&mut self) {
        self.center_columns();
        let n = self.values.nrows() as f64;
        for mut col in self.values.columns_mut() {
            let var = col.iter().map(|v| v * v).sum::<f64>() / n;
            if var > 0.0 {
                let sd = var.sqrt();
                col.mapv_inplace(|v| v / sd);
            }
        }
    }
}

impl TryFrom<Array2<f64>> for PanelMatrix {
    type Error = DcvError;

    fn try_from(values: Array2<f64>) -> Result<Self> {
        Self::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn centering_zeroes_column_means() {
        let mut panel = PanelMatrix::new(array![[1.0, 10.0], [3.0, 30.0]]).unwrap();
        panel.center_columns();
        let v = panel.values();
        assert_abs_diff_eq!(v[[0, 0]] + v[[1, 0]], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[[0, 1]] + v[[1, 1]], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn standardize_handles_constant_column() {
        let mut panel = PanelMatrix::new(array![[2.0, 1.0], [2.0, 3.0]]).unwrap();
        panel.standardize_columns();
        let v = panel.values();
        assert_abs_diff_eq!(v[[0, 0]], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[[0, 1]], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[[1, 1]], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn metadata_length_checked() {
        let err = PanelMatrix::with_metadata(
            array![[1.0], [2.0]],
            None,
            Some(vec!["a".into(), "b".into()]),
        );
        assert!(matches!(err, Err(DcvError::Dimension(_))));
    }
}

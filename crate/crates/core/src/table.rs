//! The matrix of `Γ_λ`-coefficients of the norms `b_α`, one row per `α`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::central::{Centre, Method};
use crate::combin::{table_order, Partition};
use crate::error::Result;
use crate::polyring::XiPoly;

/// Rows and columns both run over the partitions of `n` in table order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub rows: Vec<Vec<XiPoly>>,
}

impl CoefficientTable {
    pub fn build(centre: &Centre, n: usize, method: Method) -> Result<Self> {
        let partitions = table_order(n);
        let row = |alpha: &Partition| -> Result<Vec<XiPoly>> {
            let e = centre.expand_norm(alpha.as_composition(), method)?;
            Ok(e.coeffs().iter().map(|(_, c)| c.clone()).collect())
        };
        let rows = if centre.algebra().config().parallel {
            partitions.par_iter().map(row).collect::<Result<Vec<_>>>()?
        } else {
            partitions.iter().map(row).collect::<Result<Vec<_>>>()?
        };
        Ok(CoefficientTable {
            n,
            partitions,
            rows,
        })
    }

    pub fn entry(&self, alpha: &Partition, lam: &Partition) -> Option<&XiPoly> {
        let i = self.partitions.iter().position(|p| p == alpha)?;
        let j = self.partitions.iter().position(|p| p == lam)?;
        Some(&self.rows[i][j])
    }

    /// Cell texts with a caller-supplied format; zero cells below the
    /// diagonal are empty.
    pub fn cells_with(
        &self,
        cell: impl Fn(&Partition, &Partition, &XiPoly) -> String,
    ) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, c)| {
                        if j < i && c.is_zero() {
                            String::new()
                        } else {
                            cell(&self.partitions[i], &self.partitions[j], c)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Aligned text grid, row labels on the left.
    pub fn to_text_with(&self, cell: impl Fn(&Partition, &Partition, &XiPoly) -> String) -> String {
        let cells = self.cells_with(cell);
        let mut grid = vec![std::iter::once(String::new())
            .chain(self.partitions.iter().map(|p| p.to_string()))
            .collect::<Vec<_>>()];
        for (p, row) in self.partitions.iter().zip(cells) {
            grid.push(std::iter::once(p.to_string()).chain(row).collect());
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in grid {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.to_text_with(|_, _, c| c.to_string())
    }

    /// Header row for CSV output: `alpha` followed by the column partitions.
    pub fn csv_header(&self) -> Vec<String> {
        std::iter::once("alpha".to_string())
            .chain(self.partitions.iter().map(|p| p.to_string()))
            .collect()
    }

    /// CSV records: the row partition followed by every cell, zeros included.
    pub fn csv_records(
        &self,
        cell: impl Fn(&Partition, &Partition, &XiPoly) -> String,
    ) -> Vec<Vec<String>> {
        self.partitions
            .iter()
            .zip(&self.rows)
            .map(|(alpha, row)| {
                std::iter::once(alpha.to_string())
                    .chain(
                        self.partitions
                            .iter()
                            .zip(row)
                            .map(|(lam, c)| cell(alpha, lam, c)),
                    )
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("table serializes")
    }
}

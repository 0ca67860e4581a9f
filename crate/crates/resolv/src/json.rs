//! Canonical JSON shapes for fields, codes, projective systems, Betti
//! tables, and reports. Field elements serialize as their integer
//! encodings; Betti values as decimal strings (arbitrary precision);
//! matrices row-major. Struct field order is fixed, so serialization is
//! byte-stable.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::field::{FieldElement, FiniteField};
use crate::algebra::matrix::MatrixGF;
use crate::betti::{BettiTable, PurityReport};
use crate::code::{mask_indices, LinearCode, WeightDistribution};
use crate::families::ProjectiveSystem;
use crate::{Error, Result};

/// {"p":2,"e":2,"modulus":[1,1,1]} with coefficients constant-term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
}

impl FieldJson {
    pub fn of(field: &FiniteField) -> FieldJson {
        FieldJson {
            p: field.p(),
            e: field.e(),
            modulus: field.modulus().to_vec(),
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteField>> {
        Ok(Arc::new(FiniteField::with_modulus(
            self.p,
            self.e,
            self.modulus.clone(),
        )?))
    }
}

/// {"field":{...},"n":7,"k":3,"generator":[[...]]}, generator row-major
/// with integer element encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<u64>>,
}

impl CodeJson {
    pub fn of(code: &LinearCode) -> CodeJson {
        let gen = code.generator();
        let generator = (0..gen.rows())
            .map(|r| gen.row(r).iter().map(|e| e.0 as u64).collect())
            .collect();
        CodeJson {
            field: FieldJson::of(code.field()),
            n: code.n(),
            k: code.k(),
            generator,
        }
    }

    pub fn build(&self) -> Result<LinearCode> {
        let field = self.field.build()?;
        let code = LinearCode::from_rows(field, &self.generator)?;
        if code.n() != self.n || code.k() != self.k {
            return Err(Error::InvalidParameters(format!(
                "declared [{}, {}] but generator spans [{}, {}]",
                self.n,
                self.k,
                code.n(),
                code.k()
            )));
        }
        Ok(code)
    }
}

/// {"field":{...},"k":3,"points":[[1,0,0],...]}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveSystemJson {
    pub field: FieldJson,
    pub k: usize,
    pub points: Vec<Vec<u64>>,
}

impl ProjectiveSystemJson {
    pub fn of(system: &ProjectiveSystem) -> ProjectiveSystemJson {
        ProjectiveSystemJson {
            field: FieldJson::of(system.field()),
            k: system.k(),
            points: system
                .points()
                .iter()
                .map(|p| p.iter().map(|e| e.0 as u64).collect())
                .collect(),
        }
    }

    pub fn build(&self) -> Result<ProjectiveSystem> {
        let field = self.field.build()?;
        let points = self
            .points
            .iter()
            .map(|p| p.iter().map(|&v| field.elem(v)).collect::<Vec<FieldElement>>())
            .collect();
        ProjectiveSystem::new(field, self.k, points)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntryJson {
    pub i: usize,
    pub j: usize,
    pub beta: String,
}

/// {"n":...,"k":...,"q":...,"method":"hochster","entries":[...],
///  "pure":true,"ghw":[...]} with beta values as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTableJson {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub method: String,
    pub entries: Vec<BettiEntryJson>,
    pub pure: bool,
    pub ghw: Vec<usize>,
}

impl BettiTableJson {
    pub fn of(table: &BettiTable) -> BettiTableJson {
        BettiTableJson {
            n: table.n,
            k: table.k,
            q: table.q,
            method: table.method.as_str().to_string(),
            entries: table
                .entries
                .iter()
                .map(|(&(i, j), beta)| BettiEntryJson { i, j, beta: beta.to_string() })
                .collect(),
            pure: table.is_pure(),
            ghw: table.ghw_vector(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCountJson {
    pub w: usize,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistributionJson {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub counts: Vec<WeightCountJson>,
}

impl WeightDistributionJson {
    pub fn of(code: &LinearCode, wd: &WeightDistribution) -> WeightDistributionJson {
        WeightDistributionJson {
            n: code.n(),
            k: code.k(),
            q: code.q(),
            counts: wd
                .counts
                .iter()
                .map(|(&w, &c)| WeightCountJson { w, count: c.to_string() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub weight: usize,
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityStepJson {
    pub i: usize,
    pub weights: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityJson {
    pub pure: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_type: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left_pure_from: Option<usize>,
    pub complete: bool,
    pub steps: Vec<PurityStepJson>,
}

impl PurityJson {
    pub fn of(report: &PurityReport) -> PurityJson {
        let steps = report
            .step_weights
            .iter()
            .map(|(&i, weights)| PurityStepJson {
                i,
                weights: weights.iter().copied().collect(),
                witnesses: report.witnesses.get(&i).map(|(a, b)| {
                    vec![
                        WitnessJson { weight: a.weight(), support: mask_indices(a.support) },
                        WitnessJson { weight: b.weight(), support: mask_indices(b.support) },
                    ]
                }),
            })
            .collect();
        PurityJson {
            pure: report.pure,
            pure_type: report.pure_type.clone(),
            left_pure_from: report.left_pure_from,
            complete: report.complete,
            steps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhwJson {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub ghw: Vec<usize>,
}

/// Aligned human-readable Betti table: one row per homological step.
pub fn format_table(table: &BettiTable) -> String {
    let mut shifts: Vec<usize> = table.entries.keys().map(|&(_, j)| j).collect();
    shifts.sort_unstable();
    shifts.dedup();
    let mut widths: BTreeMap<usize, usize> = shifts
        .iter()
        .map(|&j| (j, j.to_string().len()))
        .collect();
    for (&(_, j), beta) in &table.entries {
        let w = widths.get_mut(&j).unwrap();
        *w = (*w).max(beta.to_string().len());
    }
    let mut out = String::new();
    out.push_str("  i\\j");
    for &j in &shifts {
        out.push_str(&format!(" {:>width$}", j, width = widths[&j]));
    }
    out.push('\n');
    for i in 0..=table.k {
        out.push_str(&format!("  {:>3}", i));
        for &j in &shifts {
            let beta = table.beta(i, j);
            let cell = if beta == BigInt::from(0) { ".".to_string() } else { beta.to_string() };
            out.push_str(&format!(" {:>width$}", cell, width = widths[&j]));
        }
        out.push('\n');
    }
    out
}

/// Matrix as row-major integer encodings.
pub fn matrix_rows(m: &MatrixGF) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|e| e.0 as u64).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_table_hochster, TableMethod};
    use crate::families::simplex;
    use crate::Budgets;

    #[test]
    fn field_json_round_trip() {
        let f = FiniteField::new(2, 2).unwrap();
        let j = FieldJson::of(&f);
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"p":2,"e":2,"modulus":[1,1,1]}"#);
        let back = j.build().unwrap();
        assert_eq!(*back, f);
    }

    #[test]
    fn code_json_round_trip() {
        let c = simplex(2, 3).unwrap();
        let j = CodeJson::of(&c);
        let back = j.build().unwrap();
        assert_eq!(back, c);
        // inconsistent declared dimensions are rejected
        let mut bad = j.clone();
        bad.k = 2;
        assert!(matches!(bad.build().unwrap_err(), Error::InvalidParameters(_)));
    }

    #[test]
    fn betti_table_json_shape() {
        let c = simplex(2, 3).unwrap();
        let t = betti_table_hochster(&c, &Budgets::default()).unwrap();
        let j = BettiTableJson::of(&t);
        assert_eq!(j.method, TableMethod::Hochster.as_str());
        assert!(j.pure);
        assert_eq!(j.ghw, vec![4, 6, 7]);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains(r#"{"i":1,"j":4,"beta":"7"}"#));
    }

    #[test]
    fn table_format_is_aligned() {
        let c = simplex(2, 3).unwrap();
        let t = betti_table_hochster(&c, &Budgets::default()).unwrap();
        let s = format_table(&t);
        assert!(s.contains("i\\j"));
        assert!(s.lines().count() == t.k + 2);
    }
}

//! Per-axiom verification results with witnesses.

use std::fmt;

use serde::Serialize;

use crate::error::HopfError;
use crate::linalg::{FieldSpec, Matrix, Scalar};

/// Where two sides of an axiom disagree: the input basis tuple, the output basis
/// tuple, and both coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Group elements or other labels fixing which instance of the axiom failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    pub inputs: Vec<usize>,
    pub outputs: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(ctx) = &self.context {
            write!(f, "[{ctx}] ")?;
        }
        write!(
            f,
            "input basis {:?}, output basis {:?}: {} != {}",
            self.inputs, self.outputs, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomResult {
    pub fn pass(name: impl Into<String>) -> Self {
        AxiomResult {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        AxiomResult {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }

    /// A failed membership-style condition. The witness records the indicator `0`
    /// against the required `1`, with `context` saying what was not contained where.
    pub fn violated(name: impl Into<String>, context: String, inputs: Vec<usize>, field: FieldSpec) -> Self {
        AxiomResult::fail(
            name,
            Witness {
                context: Some(context),
                inputs,
                outputs: Vec::new(),
                lhs: field.zero(),
                rhs: field.one(),
            },
        )
    }
}

/// Splits a flattened tensor index into its factors (first factor most significant).
pub fn decode_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (k, &d) in dims.iter().enumerate().rev() {
        digits[k] = idx % d.max(1);
        idx /= d.max(1);
    }
    digits
}

/// Compares two matrices representing the same map `⊗in_dims → ⊗out_dims`.
pub fn compare_maps(
    name: &str,
    lhs: &Matrix,
    rhs: &Matrix,
    in_dims: &[usize],
    out_dims: &[usize],
    context: Option<String>,
) -> AxiomResult {
    match lhs.first_difference(rhs) {
        None => AxiomResult::pass(name),
        Some((r, c)) => AxiomResult::fail(
            name,
            Witness {
                context,
                inputs: decode_index(c, in_dims),
                outputs: decode_index(r, out_dims),
                lhs: lhs.get(r, c).clone(),
                rhs: rhs.get(r, c).clone(),
            },
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub object_kind: String,
    pub axioms: Vec<AxiomResult>,
}

impl VerificationReport {
    pub fn new(object_kind: impl Into<String>) -> Self {
        VerificationReport {
            object_kind: object_kind.into(),
            axioms: Vec::new(),
        }
    }

    pub fn push(&mut self, result: AxiomResult) {
        self.axioms.push(result);
    }

    /// Appends another report's axioms, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut a in other.axioms {
            if !prefix.is_empty() {
                a.name = format!("{prefix}{}", a.name);
            }
            self.axioms.push(a);
        }
    }

    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.axioms.iter().filter(|a| !a.passed)
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.name == name)
    }

    pub fn summary(&self) -> String {
        match self.failures().next() {
            None => "all axioms hold".to_string(),
            Some(a) => match &a.witness {
                Some(w) => format!("`{}` fails at {w}", a.name),
                None => format!("`{}` fails", a.name),
            },
        }
    }

    /// `Ok(())` if every axiom passed, otherwise the report as an input error.
    pub fn into_result(self) -> Result<(), HopfError> {
        if self.passed() {
            Ok(())
        } else {
            Err(HopfError::invalid(self))
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.object_kind)?;
        for a in &self.axioms {
            let mark = if a.passed { "ok  " } else { "FAIL" };
            write!(f, "  {mark} {}", a.name)?;
            if let Some(w) = &a.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_mixed_radix() {
        assert_eq!(decode_index(5, &[2, 3]), vec![1, 2]);
        assert_eq!(decode_index(0, &[]), Vec::<usize>::new());
        assert_eq!(decode_index(7, &[2, 2, 2]), vec![1, 1, 1]);
    }
}

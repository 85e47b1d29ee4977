use std::fmt;

use serde::{Serialize, Serializer};

/// ℤ₂-degree of a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One parity per basis index of the space it decorates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParityVector(pub Vec<Parity>);

impl ParityVector {
    pub fn all_even(dim: usize) -> Self {
        ParityVector(vec![Parity::Even; dim])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_even(&self) -> bool {
        self.0.iter().all(|p| *p == Parity::Even)
    }

    pub fn get(&self, i: usize) -> Parity {
        self.0[i]
    }

    /// Parities of the flattened basis of `self ⊗ other`.
    pub fn tensor(&self, other: &ParityVector) -> ParityVector {
        ParityVector(
            self.0
                .iter()
                .flat_map(|a| other.0.iter().map(move |b| a.plus(*b)))
                .collect(),
        )
    }

    /// Parities of `self ⊕ other` in block order.
    pub fn concat(&self, other: &ParityVector) -> ParityVector {
        ParityVector(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn select(&self, indices: &[usize]) -> ParityVector {
        ParityVector(indices.iter().map(|&i| self.0[i]).collect())
    }
}

impl Serialize for ParityVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|p| p.as_str()))
    }
}

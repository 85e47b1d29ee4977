//! Fixtures shared by the benchmarks.

use hopflab::{zoo, FieldSpec, FiniteGroup, HopfAlgebraSC, HopfGroupAlgebra, Matrix};

/// A dense `n × n` rational matrix with a deterministic, mildly irregular pattern.
pub fn dense_matrix(n: usize) -> Matrix {
    let values: Vec<i64> = (0..n * n).map(|k| ((k * 7 + k / n * 3) % 11) as i64 - 5).collect();
    Matrix::from_i64(FieldSpec::Rationals, n, n, &values)
}

pub fn truncated_five() -> HopfAlgebraSC {
    zoo::truncated_poly(5).expect("5 is prime")
}

pub fn diagonal_s3() -> HopfGroupAlgebra {
    zoo::diagonal_group_algebra(&FiniteGroup::symmetric(3), FieldSpec::Rationals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(dense_matrix(4).shape(), (4, 4));
        assert_eq!(truncated_five().dim(), 5);
        assert_eq!(diagonal_s3().group.order, 6);
    }
}

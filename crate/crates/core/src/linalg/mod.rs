//! Exact linear algebra over ℚ and 𝔽p: dense matrices, canonical subspaces,
//! quotients, Kronecker products and (signed) symmetry maps.

mod matrix;
mod parity;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use parity::{Parity, ParityVector};
pub use scalar::{FieldSpec, Scalar};
pub use subspace::{QuotientSpace, Subspace};

use crate::error::HopfError;

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &Matrix, b: &Matrix) -> Result<Matrix, HopfError> {
    a.kron(b)
}

/// Kronecker product of several factors, left to right.
pub fn tensor_all(field: FieldSpec, factors: &[&Matrix]) -> Result<Matrix, HopfError> {
    factors
        .iter()
        .try_fold(Matrix::identity(field, 1), |acc, f| acc.kron(f))
}

/// The symmetry `A ⊗ B → B ⊗ A`, `e_i ⊗ f_j ↦ ± f_j ⊗ e_i`.
///
/// The sign is −1 exactly when both `e_i` and `f_j` are odd. Without parities the
/// map is the plain transposition of tensor factors.
pub fn swap_map(
    field: FieldSpec,
    dim_a: usize,
    dim_b: usize,
    parity_a: Option<&ParityVector>,
    parity_b: Option<&ParityVector>,
) -> Result<Matrix, HopfError> {
    for (p, d) in [(parity_a, dim_a), (parity_b, dim_b)] {
        if let Some(p) = p {
            if p.len() != d {
                return Err(HopfError::Shape(format!(
                    "parity vector of length {} for dimension {d}",
                    p.len()
                )));
            }
        }
    }
    let odd = |p: Option<&ParityVector>, i: usize| p.is_some_and(|p| p.get(i).is_odd());
    let mut m = Matrix::zeros(field, dim_a * dim_b, dim_a * dim_b);
    for i in 0..dim_a {
        for j in 0..dim_b {
            let sign = if odd(parity_a, i) && odd(parity_b, j) { -1 } else { 1 };
            m.set(j * dim_a + i, i * dim_b + j, field.from_i64(sign));
        }
    }
    Ok(m)
}

/// Dimensions of the four tensor factors fed to [`interchange`].
#[derive(Clone, Copy, Debug)]
pub struct InterchangeDims {
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
}

/// `(m1 ⊗ m2) ∘ (id ⊗ c_{X2,Y1} ⊗ id)` as one matrix on `X1 ⊗ X2 ⊗ Y1 ⊗ Y2`.
///
/// `m1: X1 ⊗ Y1 → O1` and `m2: X2 ⊗ Y2 → O2`. This is the product of the braided
/// tensor product algebra, built directly instead of materialising the middle
/// symmetry (which would be `n⁴ × n⁴`). The Koszul sign uses the parities of `X2`
/// and `Y1` when given.
pub fn interchange(
    m1: &Matrix,
    m2: &Matrix,
    dims: InterchangeDims,
    parity_x2: Option<&ParityVector>,
    parity_y1: Option<&ParityVector>,
) -> Result<Matrix, HopfError> {
    let field = m1.field();
    if m2.field() != field {
        return Err(HopfError::FieldMismatch(field, m2.field()));
    }
    if m1.cols() != dims.x1 * dims.y1 || m2.cols() != dims.x2 * dims.y2 {
        return Err(HopfError::Shape("interchange: factor shapes do not match".into()));
    }
    let nonzero = |m: &Matrix| -> Vec<(usize, usize)> {
        (0..m.rows())
            .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
            .filter(|&(r, c)| !m.get(r, c).is_zero())
            .collect()
    };
    let odd = |p: Option<&ParityVector>, i: usize| p.is_some_and(|p| p.get(i).is_odd());
    let (o2, cols) = (m2.rows(), dims.x1 * dims.x2 * dims.y1 * dims.y2);
    let mut out = Matrix::zeros(field, m1.rows() * o2, cols);
    let nz2 = nonzero(m2);
    for (k1, c1) in nonzero(m1) {
        let (x1, y1) = (c1 / dims.y1, c1 % dims.y1);
        for &(k2, c2) in &nz2 {
            let (x2, y2) = (c2 / dims.y2, c2 % dims.y2);
            let mut v = m1.get(k1, c1) * m2.get(k2, c2);
            if odd(parity_x2, x2) && odd(parity_y1, y1) {
                v = -v;
            }
            let col = ((x1 * dims.x2 + x2) * dims.y1 + y1) * dims.y2 + y2;
            out.add_at(k1 * o2 + k2, col, &v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(q(), 2, 2, &[2, 4, 1, 2]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64(q(), 2, 2, &[1, 2, 0, 0]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let (r, piv) = Matrix::identity(q(), 3).rref();
        assert_eq!(r, Matrix::identity(q(), 3));
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_mod_two() {
        let f2 = FieldSpec::prime(2).unwrap();
        let (r, piv) = Matrix::from_i64(f2, 2, 2, &[1, 1, 1, 0]).rref();
        assert_eq!(r, Matrix::identity(f2, 2));
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::zeros(q(), 2, 3).nullspace(), Subspace::full(q(), 3));
        assert_eq!(Matrix::identity(q(), 4).nullspace().dim(), 0);
        let ns = Matrix::from_i64(q(), 1, 2, &[1, 1]).nullspace();
        assert_eq!(ns.basis(), &Matrix::from_i64(q(), 1, 2, &[1, -1]));
    }

    #[test]
    fn tensor_examples() {
        let id6 = tensor(&Matrix::identity(q(), 2), &Matrix::identity(q(), 3)).unwrap();
        assert_eq!(id6, Matrix::identity(q(), 6));
        let six = tensor(&Matrix::from_i64(q(), 1, 1, &[2]), &Matrix::from_i64(q(), 1, 1, &[3])).unwrap();
        assert_eq!(six, Matrix::from_i64(q(), 1, 1, &[6]));
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(tensor(&Matrix::identity(q(), 1), &Matrix::identity(f3, 1)).is_err());
    }

    #[test]
    fn tensor_index_convention() {
        let a = Matrix::from_i64(q(), 1, 2, &[1, 2]);
        let b = Matrix::from_i64(q(), 1, 2, &[10, 20]);
        // column (i, j) ↦ 2i + j
        assert_eq!(tensor(&a, &b).unwrap(), Matrix::from_i64(q(), 1, 4, &[10, 20, 20, 40]));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(swap_map(q(), 1, 1, None, None).unwrap(), Matrix::identity(q(), 1));
        let s = swap_map(q(), 2, 2, None, None).unwrap();
        assert_ne!(s, Matrix::identity(q(), 4));
        assert_eq!(&s * &s, Matrix::identity(q(), 4));
        let odd = ParityVector(vec![Parity::Odd]);
        let signed = swap_map(q(), 1, 1, Some(&odd), Some(&odd)).unwrap();
        assert_eq!(signed, Matrix::from_i64(q(), 1, 1, &[-1]));
        assert!(swap_map(q(), 2, 1, Some(&odd), None).is_err());
    }

    #[test]
    fn interchange_matches_explicit_composite() {
        let par = ParityVector(vec![Parity::Even, Parity::Odd]);
        let m = Matrix::from_i64(q(), 2, 4, &[1, 0, 0, 0, 0, 1, 1, 0]);
        let dims = InterchangeDims {
            x1: 2,
            x2: 2,
            y1: 2,
            y2: 2,
        };
        let fast = interchange(&m, &m, dims, Some(&par), Some(&par)).unwrap();
        let id = Matrix::identity(q(), 2);
        let tau = swap_map(q(), 2, 2, Some(&par), Some(&par)).unwrap();
        let middle = tensor_all(q(), &[&id, &tau, &id]).unwrap();
        let slow = &tensor(&m, &m).unwrap() * &middle;
        assert_eq!(fast, slow);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn matrix(field: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
            proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| Matrix::from_i64(field, rows, cols, &v))
        }

        fn field() -> impl Strategy<Value = FieldSpec> {
            prop_oneof![
                Just(FieldSpec::Rationals),
                Just(FieldSpec::Prime(2)),
                Just(FieldSpec::Prime(5))
            ]
        }

        fn sized() -> impl Strategy<Value = Matrix> {
            (field(), 1usize..5, 1usize..5).prop_flat_map(|(f, r, c)| matrix(f, r, c))
        }

        proptest! {
            #[test]
            fn rank_nullity(m in sized()) {
                let kernel = m.nullspace();
                prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
                for i in 0..kernel.dim() {
                    prop_assert!(m.apply(kernel.basis_vector(i)).iter().all(Scalar::is_zero));
                }
            }

            #[test]
            fn rref_is_idempotent(m in sized()) {
                let (r, pivots) = m.rref();
                let (rr, pivots2) = r.rref();
                prop_assert_eq!(&r, &rr);
                prop_assert_eq!(pivots, pivots2);
            }

            #[test]
            fn tensor_is_functorial(
                (a, b, c, d) in (field(), proptest::collection::vec(1usize..3, 6)).prop_flat_map(|(f, s)| {
                    (matrix(f, s[0], s[1]), matrix(f, s[1], s[2]), matrix(f, s[3], s[4]), matrix(f, s[4], s[5]))
                })
            ) {
                let lhs = &tensor(&a, &c).unwrap() * &tensor(&b, &d).unwrap();
                let rhs = tensor(&(&a * &b), &(&c * &d)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn signed_swap_is_an_involution(
                pa in proptest::collection::vec(any::<bool>(), 1..4),
                pb in proptest::collection::vec(any::<bool>(), 1..4),
            ) {
                let to_parity = |v: &[bool]| ParityVector(v.iter().map(|&o| if o { Parity::Odd } else { Parity::Even }).collect());
                let (a, b) = (to_parity(&pa), to_parity(&pb));
                let f = FieldSpec::Rationals;
                let ab = swap_map(f, pa.len(), pb.len(), Some(&a), Some(&b)).unwrap();
                let ba = swap_map(f, pb.len(), pa.len(), Some(&b), Some(&a)).unwrap();
                prop_assert_eq!(&ba * &ab, Matrix::identity(f, pa.len() * pb.len()));
            }
        }
    }
}

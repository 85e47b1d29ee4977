//! Deterministic constructors for standard examples.

use crate::error::HopfError;
use crate::group::FiniteGroup;
use crate::hopf::{AlgebraSC, Carrier, CoalgebraSC, HopfAlgebraSC};
use crate::linalg::{FieldSpec, Matrix, Parity, ParityVector};
use crate::turaev::HopfGroupAlgebra;

fn names(items: impl IntoIterator<Item = String>) -> Vec<String> {
    items.into_iter().collect()
}

/// The ground field `k` as a one-dimensional Hopf algebra.
pub fn trivial(field: FieldSpec) -> HopfAlgebraSC {
    let one = Matrix::identity(field, 1);
    HopfAlgebraSC {
        carrier: Carrier::new(field, vec!["1".into()], None).expect("valid"),
        mult: one.clone(),
        unit: one.clone(),
        comult: one.clone(),
        counit: one.clone(),
        antipode: one,
    }
}

/// `kG` on the basis of group elements: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(group: &FiniteGroup, field: FieldSpec) -> HopfAlgebraSC {
    let n = group.order;
    let one = field.one();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    let mut unit = Matrix::zeros(field, n, 1);
    for a in group.elements() {
        for b in group.elements() {
            mult.set(group.mul(a, b), a * n + b, one.clone());
        }
        comult.set(a * n + a, a, one.clone());
        antipode.set(group.inv(a), a, one.clone());
    }
    unit.set(group.identity, 0, one.clone());
    let counit = Matrix::from_entries(field, 1, n, vec![one; n]).expect("shape");
    HopfAlgebraSC {
        carrier: Carrier::new(field, group.element_names.clone(), None).expect("valid"),
        mult,
        unit,
        comult,
        counit,
        antipode,
    }
}

/// `k^G`, the dual of `kG`, on the point-mass basis `δ_g` (named `g*`).
pub fn function_hopf(group: &FiniteGroup, field: FieldSpec) -> HopfAlgebraSC {
    group_algebra(group, field).dual_unchecked()
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = −gx`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler4(field: FieldSpec) -> Result<HopfAlgebraSC, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::Unsupported(
            "Sweedler's algebra needs characteristic ≠ 2".into(),
        ));
    }
    let (one, g, x, gx) = (0, 1, 2, 3);
    let products: [(usize, usize, usize, i64); 10] = [
        (g, g, one, 1),
        (g, x, gx, 1),
        (g, gx, x, 1),
        (x, g, gx, -1),
        (gx, g, x, -1),
        (one, one, one, 1),
        (one, g, g, 1),
        (one, x, x, 1),
        (one, gx, gx, 1),
        (g, one, g, 1),
    ];
    let mut mult = Matrix::zeros(field, 4, 16);
    for (i, j, k, c) in products {
        mult.set(k, i * 4 + j, field.from_i64(c));
    }
    for i in [x, gx] {
        mult.set(i, i * 4 + one, field.one());
    }
    let mut comult = Matrix::zeros(field, 16, 4);
    for (i, j, k) in [
        (one, one, one),
        (g, g, g),
        (x, x, one),
        (x, g, x),
        (gx, gx, g),
        (gx, one, gx),
    ] {
        comult.set(j * 4 + k, i, field.one());
    }
    let s = Matrix::from_i64(field, 4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
    HopfAlgebraSC::new(
        Carrier::new(field, names(["1", "g", "x", "gx"].map(String::from)), None)?,
        mult,
        Matrix::from_i64(field, 4, 1, &[1, 0, 0, 0]),
        comult,
        Matrix::from_i64(field, 1, 4, &[1, 1, 0, 0]),
        s,
    )
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `k[x]/(x^n)` with `x` primitive and binomial comultiplication on powers. This is
/// a Hopf algebra exactly when `n` is the characteristic.
pub(crate) fn truncated_poly_over(n: usize, field: FieldSpec) -> HopfAlgebraSC {
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mult.set(i + j, i * n + j, field.one());
            }
        }
        for k in 0..=i {
            comult.set(k * n + (i - k), i, field.from_i64(binomial(i, k)));
        }
        antipode.set(i, i, field.from_i64(if i % 2 == 0 { 1 } else { -1 }));
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(0, 0, field.one());
    let mut counit = Matrix::zeros(field, 1, n);
    counit.set(0, 0, field.one());
    let basis = (0..n).map(|i| match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    });
    HopfAlgebraSC {
        carrier: Carrier::new(field, names(basis), None).expect("valid"),
        mult,
        unit,
        comult,
        counit,
        antipode,
    }
}

/// `𝔽p[x]/(x^p)` with `x` primitive.
pub fn truncated_poly(p: u64) -> Result<HopfAlgebraSC, HopfError> {
    let field = FieldSpec::prime(p)?;
    if p > 64 {
        return Err(HopfError::Unsupported(format!(
            "truncated polynomial algebra of dimension {p}"
        )));
    }
    Ok(truncated_poly_over(p as usize, field))
}

/// Number of pairs `(a, b)` with `a ∈ A`, `b ∈ B`, `a > b`, for bitmask sets.
fn inversions(a: usize, b: usize) -> u32 {
    let mut count = 0;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        count += (b & ((1usize << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    count
}

/// The exterior algebra `Λ(x₁, …, xₙ)` over ℚ as a super Hopf algebra with odd
/// primitive generators. Basis vectors are indexed by subsets as bitmasks.
pub fn exterior_super(n: usize) -> HopfAlgebraSC {
    assert!((1..=6).contains(&n), "exterior_super supports 1..=6 generators");
    let field = FieldSpec::Rationals;
    let dim = 1usize << n;
    let sign = |odd: bool| field.from_i64(if odd { -1 } else { 1 });
    let mut mult = Matrix::zeros(field, dim, dim * dim);
    let mut comult = Matrix::zeros(field, dim * dim, dim);
    let mut antipode = Matrix::zeros(field, dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            if a & b == 0 {
                mult.set(a | b, a * dim + b, sign(inversions(a, b) % 2 == 1));
            }
        }
        // Δ(x_S) = Σ_{A ⊆ S} ± x_A ⊗ x_{S∖A}
        let mut sub = a;
        loop {
            let rest = a & !sub;
            comult.set(sub * dim + rest, a, sign(inversions(sub, rest) % 2 == 1));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & a;
        }
        antipode.set(a, a, sign(a.count_ones() % 2 == 1));
    }
    let mut unit = Matrix::zeros(field, dim, 1);
    unit.set(0, 0, field.one());
    let mut counit = Matrix::zeros(field, 1, dim);
    counit.set(0, 0, field.one());
    let basis = (0..dim).map(|s| {
        if s == 0 {
            "1".to_string()
        } else {
            (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| format!("x{}", i + 1))
                .collect()
        }
    });
    let parity = ParityVector(
        (0..dim)
            .map(|s| {
                if s.count_ones() % 2 == 1 {
                    Parity::Odd
                } else {
                    Parity::Even
                }
            })
            .collect(),
    );
    HopfAlgebraSC {
        carrier: Carrier::new(field, names(basis), Some(parity)).expect("valid"),
        mult,
        unit,
        comult,
        counit,
        antipode,
    }
}

/// The Hopf group-algebra with `H_g = k·g`, `μ_{g,h}(g⊗h) = gh`, `Δg = g⊗g`, `S_g(g) = g⁻¹`.
/// Its total Hopf algebra is `kG`.
pub fn diagonal_group_algebra(group: &FiniteGroup, field: FieldSpec) -> HopfGroupAlgebra {
    let one = Matrix::identity(field, 1);
    let components = group
        .element_names
        .iter()
        .map(|name| CoalgebraSC {
            carrier: Carrier::new(field, vec![name.clone()], None).expect("valid"),
            comult: one.clone(),
            counit: one.clone(),
        })
        .collect();
    HopfGroupAlgebra {
        group: group.clone(),
        components,
        graded_mult: vec![one.clone(); group.order * group.order],
        unit: one.clone(),
        antipodes: vec![one; group.order],
    }
}

/// `M_n(k)` on matrix units `e_ij` (index `i·n + j`, named `e11`, `e12`, …).
pub fn matrix_algebra(n: usize, field: FieldSpec) -> AlgebraSC {
    assert!(n >= 1, "matrix algebra of size 0");
    let dim = n * n;
    let mut mult = Matrix::zeros(field, dim, dim * dim);
    let mut unit = Matrix::zeros(field, dim, 1);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // e_ij e_jl = e_il
                mult.set(i * n + l, (i * n + j) * dim + j * n + l, field.one());
            }
        }
        unit.set(i * n + i, 0, field.one());
    }
    let basis = (0..dim).map(|k| format!("e{}{}", k / n + 1, k % n + 1));
    AlgebraSC {
        carrier: Carrier::new(field, names(basis), None).expect("valid"),
        mult,
        unit,
    }
}

//! Primitive elements, indecomposables and the classical Michaelis certificate.

use serde::Serialize;

use crate::error::HopfError;
use crate::hopf::{check_hopf, dual_hopf, Carrier, HopfAlgebraSC};
use crate::lie::{commutator_lie, dual_lie, homogeneous_parity, lie_morphism_check, LieAlgebraSC, LieCoalgebraSC};
use crate::linalg::{tensor, Matrix, ParityVector, QuotientSpace, Scalar, Subspace};

/// `P(H)` with the restricted commutator bracket.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveSpace {
    pub space: Subspace,
    pub lie: LieAlgebraSC,
}

/// `Q(H) = ker ε / (ker ε)²` realized as a quotient of `H` by `(ker ε)² + k·1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndecomposableSpace {
    pub ker_eps: Subspace,
    pub ker_eps_sq: Subspace,
    pub quotient: QuotientSpace,
    /// `H → Q`, `x ↦ [x − ε(x)1]`.
    pub pi: Matrix,
    /// `Q → ker ε`, with `pi ∘ section = id`.
    pub section: Matrix,
    pub lie_co: LieCoalgebraSC,
}

impl IndecomposableSpace {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// Evidence that `α: Q(H)* → H*, f ↦ f∘π` is a Lie isomorphism onto `P(H*)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MichaelisCertificate {
    pub dim_primitives_of_dual: usize,
    pub dim_indecomposables: usize,
    pub primitives_of_dual: Subspace,
    pub pi: Matrix,
    pub alpha: Matrix,
    pub image_in_primitives: bool,
    pub injective: bool,
    pub dims_equal: bool,
    pub lie_morphism: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Human-readable label for a vector in terms of basis names, e.g. `g-1` or `2*x+gx`.
pub fn combination_name(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (s, name) in v.iter().zip(names) {
        if s.is_zero() {
            continue;
        }
        let negative = s.signum() < 0;
        let magnitude = if negative { -s } else { s.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        if magnitude.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format!("{magnitude}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Carrier for a subspace of `parent`, named after its basis vectors.
pub(crate) fn sub_carrier(parent: &Carrier, space: &Subspace) -> Carrier {
    let names = (0..space.dim())
        .map(|i| combination_name(space.basis_vector(i), &parent.basis_names))
        .collect();
    let parity =
        homogeneous_parity(space.basis(), &parent.parity).unwrap_or_else(|| ParityVector::all_even(space.dim()));
    Carrier {
        field: parent.field,
        dim: space.dim(),
        basis_names: names,
        parity,
    }
}

/// Restricts a bracket `L⊗L → L` to a subspace, or `None` if the subspace is not closed.
pub(crate) fn restrict_bracket(bracket: &Matrix, space: &Subspace) -> Result<Option<Matrix>, HopfError> {
    let d = space.dim();
    let f = space.field();
    let mut out = Matrix::zeros(f, d, d * d);
    for i in 0..d {
        for j in 0..d {
            let vi = Matrix::column(f, space.basis_vector(i))?;
            let vj = Matrix::column(f, space.basis_vector(j))?;
            let image = bracket.try_mul(&tensor(&vi, &vj)?)?;
            let Some(coords) = space.coordinates(&image.col(0))? else {
                return Ok(None);
            };
            for (k, c) in coords.into_iter().enumerate() {
                out.set(k, i * d + j, c);
            }
        }
    }
    Ok(Some(out))
}

/// `Δ − u⊗id − id⊗u` as an `n² × n` matrix; its kernel is `P(H)`.
fn primitive_system(h: &HopfAlgebraSC) -> Matrix {
    let id = h.carrier.identity();
    let left = tensor(&h.unit, &id).expect("same field");
    let right = tensor(&id, &h.unit).expect("same field");
    h.comult.minus(&left).minus(&right)
}

/// The primitive elements `{x : Δx = 1⊗x + x⊗1}` with their commutator bracket.
pub fn primitives(h: &HopfAlgebraSC) -> Result<PrimitiveSpace, HopfError> {
    check_hopf(h).into_result()?;
    let space = primitive_system(h).nullspace();
    for i in 0..space.dim() {
        let eps = h.counit.apply(space.basis_vector(i));
        if !eps[0].is_zero() {
            return Err(HopfError::Invariant("counit does not vanish on a primitive".into()));
        }
    }
    let full = commutator_lie(&h.algebra())?;
    let bracket = restrict_bracket(&full.bracket, &space)?
        .ok_or_else(|| HopfError::Invariant("primitives are not closed under the commutator".into()))?;
    Ok(PrimitiveSpace {
        lie: LieAlgebraSC {
            carrier: sub_carrier(&h.carrier, &space),
            bracket,
        },
        space,
    })
}

/// `ker ε`, `(ker ε)²` and the quotient `Q(H)` with its induced co-bracket.
pub fn indecomposables(h: &HopfAlgebraSC) -> Result<IndecomposableSpace, HopfError> {
    check_hopf(h).into_result()?;
    let n = h.dim();
    let f = h.field();
    let ker_eps = h.counit.nullspace();
    let kd = ker_eps.dim();
    let mut products = Matrix::zeros(f, kd * kd, n);
    for a in 0..kd {
        for b in 0..kd {
            let va = Matrix::column(f, ker_eps.basis_vector(a))?;
            let vb = Matrix::column(f, ker_eps.basis_vector(b))?;
            let prod = h.mult.try_mul(&tensor(&va, &vb)?)?;
            for k in 0..n {
                products.set(a * kd + b, k, prod.get(k, 0).clone());
            }
        }
    }
    let ker_eps_sq = Subspace::from_spanning_rows(n, &products)?;
    if !ker_eps_sq.is_subspace_of(&ker_eps)? {
        return Err(HopfError::Invariant("(ker ε)² escapes ker ε".into()));
    }
    let one = Subspace::from_spanning_cols(n, &h.unit)?;
    let killed = ker_eps_sq.sum(&one)?;
    let quotient = QuotientSpace::new(n, &killed)?;
    let normalize = h.carrier.identity().minus(&h.unit_counit());
    let pi = &quotient.projection * &normalize;
    let section = &normalize * &quotient.section;
    let dq = quotient.dim();
    if &pi * &section != Matrix::identity(f, dq) {
        return Err(HopfError::Invariant("π ∘ section is not the identity".into()));
    }
    if pi.nullspace().intersection(&ker_eps)? != ker_eps_sq {
        return Err(HopfError::Invariant("π does not cut out (ker ε)² inside ker ε".into()));
    }

    let upsilon_h = crate::lie::cocommutator_lie_coalgebra(&h.coalgebra())?.cobracket;
    let pipi = tensor(&pi, &pi)?;
    let upsilon_q = &(&pipi * &upsilon_h) * &section;
    if &upsilon_q * &pi != &pipi * &upsilon_h {
        return Err(HopfError::Invariant("co-bracket does not descend to Q".into()));
    }
    let names = quotient
        .representatives
        .iter()
        .map(|&r| format!("[{}]", h.carrier.basis_names[r]))
        .collect();
    let carrier = Carrier {
        field: f,
        dim: dq,
        basis_names: names,
        parity: h.carrier.parity.select(&quotient.representatives),
    };
    Ok(IndecomposableSpace {
        ker_eps,
        ker_eps_sq,
        quotient,
        pi,
        section,
        lie_co: LieCoalgebraSC {
            carrier,
            cobracket: upsilon_q,
        },
    })
}

/// Computes `P(H*)` and `Q(H)` in parallel and certifies that `f ↦ f∘π` is a Lie
/// algebra isomorphism `Q(H)* → P(H*)`.
pub fn michaelis_verify(h: &HopfAlgebraSC) -> Result<MichaelisCertificate, HopfError> {
    let dual = dual_hopf(h)?;
    let (p, q) = rayon::join(|| primitives(&dual), || indecomposables(h));
    let (p, q) = (p?, q?);
    let alpha = q.pi.transpose();
    let mut image_in_primitives = true;
    let mut counterexample = None;
    for j in 0..alpha.cols() {
        if !p.space.contains(&alpha.col(j))? {
            image_in_primitives = false;
            counterexample.get_or_insert(format!("α({}) is not primitive in H*", q.lie_co.carrier.basis_names[j]));
        }
    }
    let injective = alpha.rank() == q.dim();
    if !injective {
        counterexample.get_or_insert("α has a kernel".into());
    }
    let dims_equal = p.space.dim() == q.dim();
    if !dims_equal {
        counterexample.get_or_insert(format!("dim P(H*) = {} but dim Q(H) = {}", p.space.dim(), q.dim()));
    }
    let q_dual = dual_lie(&q.lie_co)?;
    let ambient = commutator_lie(&dual.algebra())?;
    let lie_morphism = lie_morphism_check(&alpha, &q_dual, &ambient)?;
    if !lie_morphism {
        counterexample.get_or_insert("α does not preserve brackets".into());
    }
    let passed = image_in_primitives && injective && dims_equal && lie_morphism;
    Ok(MichaelisCertificate {
        dim_primitives_of_dual: p.space.dim(),
        dim_indecomposables: q.dim(),
        primitives_of_dual: p.space,
        pi: q.pi,
        alpha,
        image_in_primitives,
        injective,
        dims_equal,
        lie_morphism,
        passed,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::linalg::FieldSpec;
    use crate::zoo;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn sweedler_has_no_primitives_or_indecomposables() {
        let h = zoo::sweedler4(q()).unwrap();
        assert_eq!(primitives(&h).unwrap().space.dim(), 0);
        assert_eq!(indecomposables(&h).unwrap().dim(), 0);
    }

    #[test]
    fn truncated_poly_three() {
        let h = zoo::truncated_poly(3).unwrap();
        let p = primitives(&h).unwrap();
        assert_eq!(p.space.dim(), 1);
        assert_eq!(p.lie.carrier.basis_names, vec!["x".to_string()]);
        assert!(p.lie.is_abelian());
        let qs = indecomposables(&h).unwrap();
        assert_eq!(qs.dim(), 1);
        assert!(qs.lie_co.cobracket.is_zero());
        assert_eq!(qs.ker_eps.dim(), 2);
        assert_eq!(qs.ker_eps_sq.dim(), 1);
    }

    #[test]
    fn trivial_is_zero() {
        let k = zoo::trivial(q());
        assert_eq!(primitives(&k).unwrap().space.dim(), 0);
        assert_eq!(indecomposables(&k).unwrap().dim(), 0);
        let cert = michaelis_verify(&k).unwrap();
        assert!(cert.passed);
    }

    #[test]
    fn exterior_primitives() {
        let h = zoo::exterior_super(1);
        let p = primitives(&h).unwrap();
        assert_eq!(p.space.dim(), 1);
        assert!(p.lie.is_abelian());
        assert!(p.lie.carrier.is_super());
    }

    #[test]
    fn z2_over_q_has_zero_indecomposables() {
        let h = zoo::group_algebra(&FiniteGroup::cyclic(2), q());
        let qs = indecomposables(&h).unwrap();
        assert_eq!(qs.ker_eps.dim(), 1);
        assert_eq!(qs.dim(), 0);
    }

    #[test]
    fn michaelis_on_small_examples() {
        for (h, d) in [
            (zoo::truncated_poly(2).unwrap(), 1),
            (zoo::truncated_poly(3).unwrap(), 1),
            (zoo::group_algebra(&FiniteGroup::symmetric(3), q()), 0),
            (zoo::exterior_super(2), 2),
        ] {
            let cert = michaelis_verify(&h).unwrap();
            assert!(cert.passed, "{cert:?}");
            assert_eq!(cert.dim_indecomposables, d);
        }
    }

    #[test]
    fn combination_names() {
        let names: Vec<String> = ["1", "g", "x"].iter().map(|s| s.to_string()).collect();
        let v = |xs: &[i64]| xs.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>();
        assert_eq!(combination_name(&v(&[-1, 1, 0]), &names), "-1+g");
        assert_eq!(combination_name(&v(&[0, 0, 2]), &names), "2*x");
        assert_eq!(combination_name(&v(&[0, 0, 0]), &names), "0");
    }
}

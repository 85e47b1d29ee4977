//! Lie algebras and Lie coalgebras by structure constants, the commutator
//! constructions and transposition duality.

use serde::Serialize;

use crate::error::HopfError;
use crate::group::FiniteGroup;
use crate::hopf::{check_algebra, check_coalgebra, cyclic_permutations, AlgebraSC, Carrier, CoalgebraSC};
use crate::linalg::{tensor, Matrix, ParityVector};
use crate::report::{compare_maps, AxiomResult, VerificationReport};

/// Bracket `[−,−]: L⊗L → L` as a `dim × dim²` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LieAlgebraSC {
    pub carrier: Carrier,
    pub bracket: Matrix,
}

/// Co-bracket `Υ: C → C⊗C` as a `dim² × dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LieCoalgebraSC {
    pub carrier: Carrier,
    pub cobracket: Matrix,
}

impl LieAlgebraSC {
    pub fn new(carrier: Carrier, bracket: Matrix) -> Result<Self, HopfError> {
        check_shape(&carrier, &bracket, carrier.dim, carrier.dim * carrier.dim, "bracket")?;
        Ok(LieAlgebraSC { carrier, bracket })
    }

    pub fn abelian(carrier: Carrier) -> Self {
        let n = carrier.dim;
        let bracket = Matrix::zeros(carrier.field, n, n * n);
        LieAlgebraSC { carrier, bracket }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }
}

impl LieCoalgebraSC {
    pub fn new(carrier: Carrier, cobracket: Matrix) -> Result<Self, HopfError> {
        check_shape(
            &carrier,
            &cobracket,
            carrier.dim * carrier.dim,
            carrier.dim,
            "cobracket",
        )?;
        Ok(LieCoalgebraSC { carrier, cobracket })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }
}

fn check_shape(carrier: &Carrier, m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<(), HopfError> {
    if m.field() != carrier.field {
        return Err(HopfError::FieldMismatch(carrier.field, m.field()));
    }
    if m.shape() != (rows, cols) {
        return Err(HopfError::Shape(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn even_result(name: &str, ok: bool) -> AxiomResult {
    AxiomResult {
        name: name.to_string(),
        passed: ok,
        witness: None,
    }
}

/// Antisymmetry and Jacobi; in super mode the symmetries carry Koszul signs.
pub fn check_lie(l: &LieAlgebraSC) -> VerificationReport {
    let mut report = VerificationReport::new("Lie algebra");
    let n = l.dim();
    let f = l.carrier.field;
    let id = l.carrier.identity();
    let anti = l.bracket.plus(&(&l.bracket * &l.carrier.swap()));
    let zero2 = Matrix::zeros(f, n, n * n);
    report.push(compare_maps("antisymmetry", &anti, &zero2, &[n, n], &[n], None));
    let (t, w) = cyclic_permutations(&l.carrier);
    let id3 = Matrix::identity(f, n * n * n);
    let inner = &l.bracket * &tensor(&id, &l.bracket).expect("same field");
    let jacobi = &inner * &id3.plus(&t).plus(&w);
    let zero3 = Matrix::zeros(f, n, n * n * n);
    report.push(compare_maps("Jacobi", &jacobi, &zero3, &[n, n, n], &[n], None));
    if let Some(p) = l.carrier.grading() {
        report.push(even_result("bracket is even", l.bracket.is_even_map(&p.tensor(p), p)));
    }
    report
}

/// Co-antisymmetry and co-Jacobi.
pub fn check_lie_coalgebra(c: &LieCoalgebraSC) -> VerificationReport {
    let mut report = VerificationReport::new("Lie coalgebra");
    let n = c.dim();
    let f = c.carrier.field;
    let id = c.carrier.identity();
    let anti = c.cobracket.plus(&(&c.carrier.swap() * &c.cobracket));
    let zero2 = Matrix::zeros(f, n * n, n);
    report.push(compare_maps("co-antisymmetry", &anti, &zero2, &[n], &[n, n], None));
    let (t, w) = cyclic_permutations(&c.carrier);
    let id3 = Matrix::identity(f, n * n * n);
    let inner = &tensor(&id, &c.cobracket).expect("same field") * &c.cobracket;
    let jacobi = &id3.plus(&t).plus(&w) * &inner;
    let zero3 = Matrix::zeros(f, n * n * n, n);
    report.push(compare_maps("co-Jacobi", &jacobi, &zero3, &[n], &[n, n, n], None));
    if let Some(p) = c.carrier.grading() {
        report.push(even_result(
            "cobracket is even",
            c.cobracket.is_even_map(p, &p.tensor(p)),
        ));
    }
    report
}

/// `[a, b] = m(a⊗b) − m∘c(a⊗b)`, with the signed symmetry in super mode.
pub fn commutator_lie(a: &AlgebraSC) -> Result<LieAlgebraSC, HopfError> {
    check_algebra(a).into_result()?;
    let bracket = a.mult.minus(&(&a.mult * &a.carrier.swap()));
    Ok(LieAlgebraSC {
        carrier: a.carrier.clone(),
        bracket,
    })
}

/// `Υ = Δ − c∘Δ`.
pub fn cocommutator_lie_coalgebra(c: &CoalgebraSC) -> Result<LieCoalgebraSC, HopfError> {
    check_coalgebra(c).into_result()?;
    let cobracket = c.comult.minus(&(&c.carrier.swap() * &c.comult));
    Ok(LieCoalgebraSC {
        carrier: c.carrier.clone(),
        cobracket,
    })
}

/// The Lie algebra on `C*` with bracket `Υᵀ`.
pub fn dual_lie(c: &LieCoalgebraSC) -> Result<LieAlgebraSC, HopfError> {
    check_lie_coalgebra(c).into_result()?;
    Ok(LieAlgebraSC {
        carrier: c.carrier.dual(),
        bracket: c.cobracket.transpose(),
    })
}

/// The Lie coalgebra on `L*` with co-bracket `[−,−]ᵀ`.
pub fn dual_lie_coalgebra(l: &LieAlgebraSC) -> Result<LieCoalgebraSC, HopfError> {
    check_lie(l).into_result()?;
    Ok(LieCoalgebraSC {
        carrier: l.carrier.dual(),
        cobracket: l.bracket.transpose(),
    })
}

/// Whether `f: L1 → L2` satisfies `f∘[−,−]₁ = [−,−]₂∘(f⊗f)`.
pub fn lie_morphism_check(f: &Matrix, l1: &LieAlgebraSC, l2: &LieAlgebraSC) -> Result<bool, HopfError> {
    if f.shape() != (l2.dim(), l1.dim()) {
        return Err(HopfError::Shape(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            l2.dim(),
            l1.dim()
        )));
    }
    let lhs = f.try_mul(&l1.bracket)?;
    let rhs = l2.bracket.try_mul(&tensor(f, f)?)?;
    Ok(lhs == rhs)
}

/// A group-indexed collection of Lie algebras, stored in group index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyOfLieAlgebras {
    pub group: FiniteGroup,
    pub components: Vec<LieAlgebraSC>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyOfLieCoalgebras {
    pub group: FiniteGroup,
    pub components: Vec<LieCoalgebraSC>,
}

impl FamilyOfLieAlgebras {
    pub fn new(group: FiniteGroup, components: Vec<LieAlgebraSC>) -> Result<Self, HopfError> {
        if components.len() != group.order {
            return Err(HopfError::Shape(format!(
                "{} components for a group of order {}",
                components.len(),
                group.order
            )));
        }
        Ok(FamilyOfLieAlgebras { group, components })
    }

    /// The componentwise bracket satisfies the family axioms iff each component does.
    pub fn check(&self) -> VerificationReport {
        let mut report = VerificationReport::new("family of Lie algebras");
        for (g, l) in self.components.iter().enumerate() {
            report.absorb(&format!("{}: ", self.group.element_names[g]), check_lie(l));
        }
        report
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(LieAlgebraSC::dim).collect()
    }
}

impl FamilyOfLieCoalgebras {
    pub fn new(group: FiniteGroup, components: Vec<LieCoalgebraSC>) -> Result<Self, HopfError> {
        if components.len() != group.order {
            return Err(HopfError::Shape(format!(
                "{} components for a group of order {}",
                components.len(),
                group.order
            )));
        }
        Ok(FamilyOfLieCoalgebras { group, components })
    }

    pub fn check(&self) -> VerificationReport {
        let mut report = VerificationReport::new("family of Lie coalgebras");
        for (g, c) in self.components.iter().enumerate() {
            report.absorb(&format!("{}: ", self.group.element_names[g]), check_lie_coalgebra(c));
        }
        report
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(LieCoalgebraSC::dim).collect()
    }
}

/// Parity vector for a subspace spanned by homogeneous basis rows, or `None` if some
/// row mixes degrees.
pub(crate) fn homogeneous_parity(rows: &Matrix, parity: &ParityVector) -> Option<ParityVector> {
    let mut out = Vec::with_capacity(rows.rows());
    for r in 0..rows.rows() {
        let degrees: Vec<_> = rows
            .row(r)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| parity.get(i))
            .collect();
        let first = *degrees.first()?;
        if degrees.iter().any(|&d| d != first) {
            return None;
        }
        out.push(first);
    }
    Some(ParityVector(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::zoo;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// sl₂ on (h, e, f): [h,e]=2e, [h,f]=−2f, [e,f]=h.
    fn sl2() -> LieAlgebraSC {
        let f = q();
        let carrier = Carrier::new(f, vec!["h".into(), "e".into(), "f".into()], None).unwrap();
        let mut b = Matrix::zeros(f, 3, 9);
        let mut put = |i: usize, j: usize, k: usize, v: i64| {
            b.set(k, i * 3 + j, f.from_i64(v));
            b.set(k, j * 3 + i, f.from_i64(-v));
        };
        put(0, 1, 1, 2);
        put(0, 2, 2, -2);
        put(1, 2, 0, 1);
        LieAlgebraSC::new(carrier, b).unwrap()
    }

    #[test]
    fn sl2_passes() {
        assert!(check_lie(&sl2()).passed());
    }

    #[test]
    fn abelian_passes() {
        assert!(check_lie(&LieAlgebraSC::abelian(Carrier::anonymous(q(), 4))).passed());
    }

    #[test]
    fn symmetric_bracket_fails_antisymmetry() {
        let f = q();
        let mut b = Matrix::zeros(f, 3, 9);
        b.set(2, 1, f.one()); // [x,y] = z
        b.set(2, 3, f.one()); // [y,x] = z
        let l = LieAlgebraSC::new(Carrier::anonymous(f, 3), b).unwrap();
        let report = check_lie(&l);
        let anti = report.axiom("antisymmetry").unwrap();
        assert!(!anti.passed);
        assert_eq!(anti.witness.as_ref().unwrap().inputs, vec![0, 1]);
    }

    #[test]
    fn gl2_from_matrix_units() {
        // basis e11, e12, e21, e22
        let gl2 = commutator_lie(&zoo::matrix_algebra(2, q())).unwrap();
        assert!(check_lie(&gl2).passed());
        let br = |i: usize, j: usize| gl2.bracket.col(i * 4 + j);
        let v = |xs: [i64; 4]| xs.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>();
        assert_eq!(br(0, 1), v([0, 1, 0, 0]));
        assert_eq!(br(1, 2), v([1, 0, 0, -1]));
        assert_eq!(br(0, 3), v([0, 0, 0, 0]));
    }

    #[test]
    fn commutative_algebra_gives_abelian() {
        let h = zoo::group_algebra(&FiniteGroup::cyclic(4), q());
        assert!(commutator_lie(&h.algebra()).unwrap().is_abelian());
    }

    #[test]
    fn exterior_commutator_is_super_lie() {
        let h = zoo::exterior_super(1);
        let l = commutator_lie(&h.algebra()).unwrap();
        assert!(check_lie(&l).passed());
        // [x, x] = x·x + x·x = 0; the column of x⊗x is 1·2 + 1
        let x_x = 3;
        assert!(l.bracket.col(x_x).iter().all(|s| s.is_zero()));
    }

    #[test]
    fn cocommutator_of_group_algebra_is_zero() {
        let h = zoo::group_algebra(&FiniteGroup::symmetric(3), q());
        assert!(cocommutator_lie_coalgebra(&h.coalgebra()).unwrap().cobracket.is_zero());
    }

    #[test]
    fn sweedler_cobracket() {
        let h = zoo::sweedler4(q()).unwrap();
        let c = cocommutator_lie_coalgebra(&h.coalgebra()).unwrap();
        assert!(check_lie_coalgebra(&c).passed());
        // Υ(x) = x⊗1 + g⊗x − 1⊗x − x⊗g over basis (1, g, x, gx)
        let mut expected = vec![q().zero(); 16];
        for (j, k, v) in [(2, 0, 1), (1, 2, 1), (0, 2, -1), (2, 1, -1)] {
            expected[j * 4 + k] = q().from_i64(v);
        }
        assert_eq!(c.cobracket.col(2), expected);
    }

    #[test]
    fn transposition_intertwines() {
        for a in [zoo::matrix_algebra(2, q()), zoo::sweedler4(q()).unwrap().algebra()] {
            let comm = commutator_lie(&a).unwrap();
            let co = cocommutator_lie_coalgebra(&a.dual()).unwrap();
            assert_eq!(co.cobracket, comm.bracket.transpose());
            let back = dual_lie(&co).unwrap();
            assert_eq!(back, comm);
        }
    }

    #[test]
    fn dual_of_zero_cobracket_is_abelian() {
        let c = LieCoalgebraSC::new(Carrier::anonymous(q(), 2), Matrix::zeros(q(), 4, 2)).unwrap();
        assert!(dual_lie(&c).unwrap().is_abelian());
    }

    #[test]
    fn morphisms() {
        let l = sl2();
        let id = l.carrier.identity();
        assert!(lie_morphism_check(&id, &l, &l).unwrap());
        assert!(lie_morphism_check(&Matrix::zeros(q(), 3, 3), &l, &l).unwrap());
        assert!(!lie_morphism_check(&id.scale(&q().from_i64(2)), &l, &l).unwrap());
        assert!(lie_morphism_check(&Matrix::zeros(q(), 2, 3), &l, &l).is_err());
    }

    #[test]
    fn families_check_componentwise() {
        let g = FiniteGroup::cyclic(2);
        let fam = FamilyOfLieAlgebras::new(
            g.clone(),
            vec![sl2(), LieAlgebraSC::abelian(Carrier::anonymous(q(), 1))],
        )
        .unwrap();
        assert!(fam.check().passed());
        assert_eq!(fam.dims(), vec![3, 1]);
        let mut broken = sl2();
        broken.bracket.set(0, 1, q().one());
        let fam = FamilyOfLieAlgebras::new(g, vec![sl2(), broken]).unwrap();
        let report = fam.check();
        assert!(!report.passed());
        assert!(report.failures().all(|a| a.name.starts_with("1: ")));
    }

    mod props {
        use super::*;
        use crate::{zoo, FieldSpec, FiniteGroup};
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]
            #[test]
            fn group_algebra_commutators_are_lie(n in 1usize..6, symmetric in any::<bool>(), p in prop_oneof![Just(0u64), Just(2), Just(3)]) {
                let group = if symmetric && n <= 3 { FiniteGroup::symmetric(n) } else { FiniteGroup::cyclic(n) };
                let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::prime(p).unwrap() };
                let l = commutator_lie(&zoo::group_algebra(&group, field).algebra()).unwrap();
                prop_assert!(check_lie(&l).passed());
                prop_assert_eq!(l.is_abelian(), (0..group.order).all(|a| (0..group.order).all(|b| group.mul(a, b) == group.mul(b, a))));
            }
        }
    }
}

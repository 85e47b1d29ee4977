//! Algebras, coalgebras, bialgebras and Hopf algebras given by structure constants.
//!
//! Every structure map is a dense matrix on flattened tensor powers:
//!
//! | map | shape | entry |
//! |-----|-------|-------|
//! | `m: H⊗H → H` | `n × n²` | `[k, i·n + j]` = coefficient of `e_k` in `e_i e_j` |
//! | `u: k → H` | `n × 1` | coefficients of `1_H` |
//! | `Δ: H → H⊗H` | `n² × n` | `[j·n + k, i]` = coefficient of `e_j ⊗ e_k` in `Δ(e_i)` |
//! | `ε: H → k` | `1 × n` | `ε(e_i)` |
//! | `S: H → H` | `n × n` | `[j, i]` = coefficient of `e_j` in `S(e_i)` |
//!
//! With that layout every axiom is a matrix identity and is checked exactly. When a
//! [`ParityVector`] with odd entries is attached, symmetries carry Koszul signs and
//! `H⊗H` is multiplied as a super algebra.

use serde::Serialize;

use crate::error::HopfError;
use crate::linalg::{
    interchange, swap_map, tensor, tensor_all, FieldSpec, InterchangeDims, Matrix, ParityVector, Subspace,
};
use crate::report::{compare_maps, AxiomResult, VerificationReport};

/// Field, basis labels and ℤ₂-grading shared by all structures on one space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Carrier {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub parity: ParityVector,
}

impl Carrier {
    pub fn new(field: FieldSpec, basis_names: Vec<String>, parity: Option<ParityVector>) -> Result<Self, HopfError> {
        let dim = basis_names.len();
        let parity = parity.unwrap_or_else(|| ParityVector::all_even(dim));
        if parity.len() != dim {
            return Err(HopfError::Shape(format!(
                "{} parities for {dim} basis vectors",
                parity.len()
            )));
        }
        Ok(Carrier {
            field,
            dim,
            basis_names,
            parity,
        })
    }

    /// Carrier with basis names `e0, e1, …`.
    pub fn anonymous(field: FieldSpec, dim: usize) -> Self {
        Carrier {
            field,
            dim,
            basis_names: (0..dim).map(|i| format!("e{i}")).collect(),
            parity: ParityVector::all_even(dim),
        }
    }

    /// The parity vector when some basis vector is odd; `None` for purely even spaces.
    pub fn grading(&self) -> Option<&ParityVector> {
        (!self.parity.is_all_even()).then_some(&self.parity)
    }

    pub fn is_super(&self) -> bool {
        !self.parity.is_all_even()
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field, self.dim)
    }

    /// The symmetry `H⊗H → H⊗H`, signed in super mode.
    pub fn swap(&self) -> Matrix {
        swap_map(self.field, self.dim, self.dim, self.grading(), self.grading())
            .expect("carrier parity matches its dimension")
    }

    /// The dual carrier: same field and grading, names toggled between `x` and `x*`.
    pub fn dual(&self) -> Carrier {
        Carrier {
            basis_names: self.basis_names.iter().map(|n| dual_name(n)).collect(),
            ..self.clone()
        }
    }

    /// The same carrier with every basis vector even.
    pub fn forget_parity(&self) -> Carrier {
        Carrier {
            parity: ParityVector::all_even(self.dim),
            ..self.clone()
        }
    }

    fn check_map(&self, what: &str, m: &Matrix, rows: usize, cols: usize) -> Result<(), HopfError> {
        if m.field() != self.field {
            return Err(HopfError::FieldMismatch(self.field, m.field()));
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
}

/// `x ↦ x*` and `x* ↦ x`, an involution on labels.
pub fn dual_name(name: &str) -> String {
    match name.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{name}*"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraSC {
    pub carrier: Carrier,
    pub mult: Matrix,
    pub unit: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoalgebraSC {
    pub carrier: Carrier,
    pub comult: Matrix,
    pub counit: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BialgebraSC {
    pub carrier: Carrier,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HopfAlgebraSC {
    pub carrier: Carrier,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
}

impl AlgebraSC {
    pub fn new(carrier: Carrier, mult: Matrix, unit: Matrix) -> Result<Self, HopfError> {
        let n = carrier.dim;
        carrier.check_map("multiplication", &mult, n, n * n)?;
        carrier.check_map("unit", &unit, n, 1)?;
        Ok(AlgebraSC { carrier, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field
    }

    /// The dual coalgebra: `Δ = mᵀ`, `ε = uᵀ`.
    pub fn dual(&self) -> CoalgebraSC {
        CoalgebraSC {
            carrier: self.carrier.dual(),
            comult: self.mult.transpose(),
            counit: self.unit.transpose(),
        }
    }

    /// `m ∘ c`, where `c` is the (signed) symmetry.
    pub fn opposite(&self) -> AlgebraSC {
        AlgebraSC {
            mult: &self.mult * &self.carrier.swap(),
            ..self.clone()
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.opposite().mult == self.mult
    }
}

impl CoalgebraSC {
    pub fn new(carrier: Carrier, comult: Matrix, counit: Matrix) -> Result<Self, HopfError> {
        let n = carrier.dim;
        carrier.check_map("comultiplication", &comult, n * n, n)?;
        carrier.check_map("counit", &counit, 1, n)?;
        Ok(CoalgebraSC {
            carrier,
            comult,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field
    }

    /// The dual algebra: `m = Δᵀ`, `u = εᵀ`.
    pub fn dual(&self) -> AlgebraSC {
        AlgebraSC {
            carrier: self.carrier.dual(),
            mult: self.comult.transpose(),
            unit: self.counit.transpose(),
        }
    }

    pub fn coopposite(&self) -> CoalgebraSC {
        CoalgebraSC {
            comult: &self.carrier.swap() * &self.comult,
            ..self.clone()
        }
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coopposite().comult == self.comult
    }
}

impl BialgebraSC {
    pub fn new(
        carrier: Carrier,
        mult: Matrix,
        unit: Matrix,
        comult: Matrix,
        counit: Matrix,
    ) -> Result<Self, HopfError> {
        let a = AlgebraSC::new(carrier, mult, unit)?;
        let c = CoalgebraSC::new(a.carrier.clone(), comult, counit)?;
        Ok(BialgebraSC {
            carrier: a.carrier,
            mult: a.mult,
            unit: a.unit,
            comult: c.comult,
            counit: c.counit,
        })
    }

    pub fn algebra(&self) -> AlgebraSC {
        AlgebraSC {
            carrier: self.carrier.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn coalgebra(&self) -> CoalgebraSC {
        CoalgebraSC {
            carrier: self.carrier.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn with_antipode(self, antipode: Matrix) -> Result<HopfAlgebraSC, HopfError> {
        let n = self.carrier.dim;
        self.carrier.check_map("antipode", &antipode, n, n)?;
        Ok(HopfAlgebraSC {
            carrier: self.carrier,
            mult: self.mult,
            unit: self.unit,
            comult: self.comult,
            counit: self.counit,
            antipode,
        })
    }

    pub fn dual(&self) -> BialgebraSC {
        BialgebraSC {
            carrier: self.carrier.dual(),
            mult: self.comult.transpose(),
            unit: self.counit.transpose(),
            comult: self.mult.transpose(),
            counit: self.unit.transpose(),
        }
    }
}

impl HopfAlgebraSC {
    pub fn new(
        carrier: Carrier,
        mult: Matrix,
        unit: Matrix,
        comult: Matrix,
        counit: Matrix,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        BialgebraSC::new(carrier, mult, unit, comult, counit)?.with_antipode(antipode)
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field
    }

    pub fn bialgebra(&self) -> BialgebraSC {
        BialgebraSC {
            carrier: self.carrier.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn algebra(&self) -> AlgebraSC {
        self.bialgebra().algebra()
    }

    pub fn coalgebra(&self) -> CoalgebraSC {
        self.bialgebra().coalgebra()
    }

    /// Transposes every structure map without checking the axioms first.
    pub fn dual_unchecked(&self) -> HopfAlgebraSC {
        HopfAlgebraSC {
            carrier: self.carrier.dual(),
            mult: self.comult.transpose(),
            unit: self.counit.transpose(),
            comult: self.mult.transpose(),
            counit: self.unit.transpose(),
            antipode: self.antipode.transpose(),
        }
    }

    /// `u ∘ ε`, the unit of the convolution monoid `End(H)`.
    pub fn unit_counit(&self) -> Matrix {
        &self.unit * &self.counit
    }

    /// The same structure constants with every basis vector declared even.
    pub fn forget_parity(&self) -> HopfAlgebraSC {
        HopfAlgebraSC {
            carrier: self.carrier.forget_parity(),
            ..self.clone()
        }
    }
}

fn algebra_axioms(report: &mut VerificationReport, carrier: &Carrier, mult: &Matrix, unit: &Matrix) {
    let n = carrier.dim;
    let id = carrier.identity();
    let left = mult * &tensor(mult, &id).expect("same field");
    let right = mult * &tensor(&id, mult).expect("same field");
    report.push(compare_maps("associativity", &left, &right, &[n, n, n], &[n], None));
    let lu = mult * &tensor(unit, &id).expect("same field");
    report.push(compare_maps("left unit", &lu, &id, &[n], &[n], None));
    let ru = mult * &tensor(&id, unit).expect("same field");
    report.push(compare_maps("right unit", &ru, &id, &[n], &[n], None));
    if let Some(p) = carrier.grading() {
        let pp = p.tensor(p);
        let even = mult.is_even_map(&pp, p) && unit.is_even_map(&ParityVector::all_even(1), p);
        report.push(parity_result("multiplication and unit are even", even));
    }
}

fn coalgebra_axioms(report: &mut VerificationReport, carrier: &Carrier, comult: &Matrix, counit: &Matrix) {
    let n = carrier.dim;
    let id = carrier.identity();
    let left = &tensor(comult, &id).expect("same field") * comult;
    let right = &tensor(&id, comult).expect("same field") * comult;
    report.push(compare_maps("coassociativity", &left, &right, &[n], &[n, n, n], None));
    let lc = &tensor(counit, &id).expect("same field") * comult;
    report.push(compare_maps("left counit", &lc, &id, &[n], &[n], None));
    let rc = &tensor(&id, counit).expect("same field") * comult;
    report.push(compare_maps("right counit", &rc, &id, &[n], &[n], None));
    if let Some(p) = carrier.grading() {
        let pp = p.tensor(p);
        let even = comult.is_even_map(p, &pp) && counit.is_even_map(p, &ParityVector::all_even(1));
        report.push(parity_result("comultiplication and counit are even", even));
    }
}

fn parity_result(name: &str, ok: bool) -> AxiomResult {
    if ok {
        AxiomResult::pass(name)
    } else {
        AxiomResult {
            name: name.to_string(),
            passed: false,
            witness: None,
        }
    }
}

/// Δ and ε are algebra maps, with `H⊗H` multiplied through the (signed) symmetry.
fn compatibility_axioms(report: &mut VerificationReport, b: &BialgebraSC) {
    let n = b.carrier.dim;
    let f = b.carrier.field;
    let g = b.carrier.grading();
    let dims = InterchangeDims {
        x1: n,
        x2: n,
        y1: n,
        y2: n,
    };
    let mm = interchange(&b.mult, &b.mult, dims, g, g).expect("consistent shapes");
    let dd = tensor(&b.comult, &b.comult).expect("same field");
    let lhs = &b.comult * &b.mult;
    let rhs = &mm * &dd;
    report.push(compare_maps(
        "comultiplication is multiplicative",
        &lhs,
        &rhs,
        &[n, n],
        &[n, n],
        None,
    ));
    let lhs = &b.counit * &b.mult;
    let rhs = tensor(&b.counit, &b.counit).expect("same field");
    report.push(compare_maps("counit is multiplicative", &lhs, &rhs, &[n, n], &[], None));
    let lhs = &b.comult * &b.unit;
    let rhs = tensor(&b.unit, &b.unit).expect("same field");
    report.push(compare_maps(
        "comultiplication is unital",
        &lhs,
        &rhs,
        &[],
        &[n, n],
        None,
    ));
    let lhs = &b.counit * &b.unit;
    report.push(compare_maps(
        "counit is unital",
        &lhs,
        &Matrix::identity(f, 1),
        &[],
        &[],
        None,
    ));
}

pub fn check_algebra(a: &AlgebraSC) -> VerificationReport {
    let mut report = VerificationReport::new("algebra");
    algebra_axioms(&mut report, &a.carrier, &a.mult, &a.unit);
    report
}

pub fn check_coalgebra(c: &CoalgebraSC) -> VerificationReport {
    let mut report = VerificationReport::new("coalgebra");
    coalgebra_axioms(&mut report, &c.carrier, &c.comult, &c.counit);
    report
}

pub fn check_bialgebra(b: &BialgebraSC) -> VerificationReport {
    let mut report = VerificationReport::new("bialgebra");
    algebra_axioms(&mut report, &b.carrier, &b.mult, &b.unit);
    coalgebra_axioms(&mut report, &b.carrier, &b.comult, &b.counit);
    compatibility_axioms(&mut report, b);
    report
}

/// Algebra, coalgebra and compatibility axioms, plus `S` as convolution inverse of `id`.
pub fn check_hopf(h: &HopfAlgebraSC) -> VerificationReport {
    let mut report = check_bialgebra(&h.bialgebra());
    report.object_kind = "Hopf algebra".into();
    let n = h.dim();
    let id = h.carrier.identity();
    let ue = h.unit_counit();
    let left = &(&h.mult * &tensor(&h.antipode, &id).expect("same field")) * &h.comult;
    report.push(compare_maps("left antipode", &left, &ue, &[n], &[n], None));
    let right = &(&h.mult * &tensor(&id, &h.antipode).expect("same field")) * &h.comult;
    report.push(compare_maps("right antipode", &right, &ue, &[n], &[n], None));
    if let Some(p) = h.carrier.grading() {
        report.push(parity_result("antipode is even", h.antipode.is_even_map(p, p)));
    }
    report
}

/// `f * g = m ∘ (f ⊗ g) ∘ Δ` for linear maps `f, g: C → A`.
pub fn convolution(f: &Matrix, g: &Matrix, c: &CoalgebraSC, a: &AlgebraSC) -> Result<Matrix, HopfError> {
    for (name, m) in [("f", f), ("g", g)] {
        if m.shape() != (a.dim(), c.dim()) {
            return Err(HopfError::Shape(format!(
                "{name} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                a.dim(),
                c.dim()
            )));
        }
    }
    let fg = tensor(f, g)?;
    a.mult.try_mul(&fg)?.try_mul(&c.comult)
}

/// The dual Hopf algebra `H*` on the dual basis: every structure map transposed.
pub fn dual_hopf(h: &HopfAlgebraSC) -> Result<HopfAlgebraSC, HopfError> {
    check_hopf(h).into_result()?;
    Ok(h.dual_unchecked())
}

/// `H` with `m` replaced by `m ∘ c`; the antipode is carried over unchanged and not re-checked.
pub fn opposite(h: &HopfAlgebraSC) -> HopfAlgebraSC {
    HopfAlgebraSC {
        mult: &h.mult * &h.carrier.swap(),
        ..h.clone()
    }
}

/// `H` with `Δ` replaced by `c ∘ Δ`; the antipode is carried over unchanged and not re-checked.
pub fn coopposite(h: &HopfAlgebraSC) -> HopfAlgebraSC {
    HopfAlgebraSC {
        comult: &h.carrier.swap() * &h.comult,
        ..h.clone()
    }
}

/// Left integrals on `H`: functionals `t ∈ H*` with `f * t = f(1) t` for all `f ∈ H*`.
///
/// In `H*` the product is `Δᵀ`, so left multiplication by the dual basis vector `f_i`
/// is `t ↦ Δᵀ(f_i ⊗ t)`; the integrals are the common kernel of these maps minus
/// `f_i(1)·id`.
pub fn left_integrals(h: &HopfAlgebraSC) -> Result<Subspace, HopfError> {
    check_hopf(h).into_result()?;
    let n = h.dim();
    let f = h.field();
    let mut system = Matrix::zeros(f, n * n, n);
    for i in 0..n {
        for k in 0..n {
            for b in 0..n {
                // (f_i * t)(e_k) = Σ_b Δ[(i,b), k] t_b
                let v = h.comult.get(i * n + b, k);
                if !v.is_zero() {
                    system.add_at(i * n + k, b, v);
                }
            }
            let ui = h.unit.get(i, 0);
            if !ui.is_zero() {
                system.add_at(i * n + k, k, &-ui);
            }
        }
    }
    Ok(system.nullspace())
}

/// Solves `m ∘ (S ⊗ id) ∘ Δ = u ∘ ε` for `S` and checks the right-hand axiom too.
///
/// Returns `Some(S)` only if the left equation has a unique solution that also
/// satisfies `m ∘ (id ⊗ S) ∘ Δ = u ∘ ε`; a unique solution is then the antipode.
pub fn solve_antipode(b: &BialgebraSC) -> Result<Option<Matrix>, HopfError> {
    check_bialgebra(b).into_result()?;
    let n = b.carrier.dim;
    let f = b.carrier.field;
    // unknown S[d, a] at column d·n + a; equation for the e_k coefficient of e_c.
    let mut system = Matrix::zeros(f, n * n, n * n);
    for c in 0..n {
        for a in 0..n {
            for bb in 0..n {
                let delta = b.comult.get(a * n + bb, c);
                if delta.is_zero() {
                    continue;
                }
                for d in 0..n {
                    for k in 0..n {
                        let m = b.mult.get(k, d * n + bb);
                        if !m.is_zero() {
                            system.add_at(k * n + c, d * n + a, &(delta * m));
                        }
                    }
                }
            }
        }
    }
    let ue = &b.unit * &b.counit;
    let rhs: Vec<_> = (0..n)
        .flat_map(|k| (0..n).map(move |c| (k, c)))
        .map(|(k, c)| ue.get(k, c).clone())
        .collect();
    if system.rank() < n * n {
        return Ok(None);
    }
    let Some(sol) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let s = Matrix::from_entries(f, n, n, sol)?;
    let hopf = b.clone().with_antipode(s.clone())?;
    let report = check_hopf(&hopf);
    let ok = report.axiom("right antipode").is_some_and(|a| a.passed);
    Ok(ok.then_some(s))
}

/// `S^k`.
pub fn antipode_power(h: &HopfAlgebraSC, k: usize) -> Matrix {
    (0..k).fold(h.carrier.identity(), |acc, _| &h.antipode * &acc)
}

/// `(id + c)` style helpers shared with the Lie module: the two cyclic permutations
/// of `H⊗H⊗H` built from the (signed) symmetry.
pub(crate) fn cyclic_permutations(carrier: &Carrier) -> (Matrix, Matrix) {
    let id = carrier.identity();
    let tau = carrier.swap();
    let f = carrier.field;
    let t12 = tensor_all(f, &[&tau, &id]).expect("same field");
    let t23 = tensor_all(f, &[&id, &tau]).expect("same field");
    (&t12 * &t23, &t23 * &t12)
}

//! Brute-force reference solver for the subspace-valued computations.
//!
//! Everything here works on plain `Vec<Vec<El>>` with its own field arithmetic and
//! its own Gauss-Jordan elimination. Library objects are only read through their
//! structure-constant entries, and library subspaces are converted to this
//! representation for comparison.

#![allow(dead_code, clippy::needless_range_loop)]

use hopflab::{HopfAlgebraSC, HopfGroupCoalgebra, Matrix, Scalar, Subspace};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum El {
    Q(BigRational),
    P(u64, u64),
}

impl El {
    pub fn from_scalar(s: &Scalar) -> El {
        match s {
            Scalar::Rational(q) => El::Q(q.clone()),
            Scalar::Residue { value, modulus } => El::P(*value, *modulus),
        }
    }

    fn zero_like(&self) -> El {
        match self {
            El::Q(_) => El::Q(BigRational::zero()),
            El::P(_, p) => El::P(0, *p),
        }
    }

    fn one_like(&self) -> El {
        match self {
            El::Q(_) => El::Q(BigRational::one()),
            El::P(_, p) => El::P(1, *p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            El::Q(q) => q.is_zero(),
            El::P(v, _) => *v == 0,
        }
    }

    pub fn add(&self, o: &El) -> El {
        match (self, o) {
            (El::Q(a), El::Q(b)) => El::Q(a + b),
            (El::P(a, p), El::P(b, _)) => El::P(((*a as u128 + *b as u128) % *p as u128) as u64, *p),
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> El {
        match self {
            El::Q(a) => El::Q(-a),
            El::P(a, p) => El::P((p - a) % p, *p),
        }
    }

    pub fn sub(&self, o: &El) -> El {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &El) -> El {
        match (self, o) {
            (El::Q(a), El::Q(b)) => El::Q(a * b),
            (El::P(a, p), El::P(b, _)) => El::P(((*a as u128 * *b as u128) % *p as u128) as u64, *p),
            _ => panic!("mixed fields"),
        }
    }

    pub fn inv(&self) -> El {
        match self {
            El::Q(a) => El::Q(a.recip()),
            // Fermat by repeated multiplication; the primes here are tiny.
            El::P(a, p) => {
                let mut r = El::P(1, *p);
                for _ in 0..p - 2 {
                    r = r.mul(&El::P(*a, *p));
                }
                r
            }
        }
    }
}

pub type Rows = Vec<Vec<El>>;

/// A zero element of the field of `m`.
pub fn zero_of(m: &Matrix) -> El {
    El::from_scalar(&m.field().zero())
}

pub fn entry(m: &Matrix, r: usize, c: usize) -> El {
    El::from_scalar(m.get(r, c))
}

/// Gauss-Jordan elimination; returns the nonzero rows of the reduced echelon form.
pub fn rref(mut rows: Rows, width: usize) -> Rows {
    let mut lead = 0;
    let mut out_rows = 0;
    while lead < width && out_rows < rows.len() {
        let Some(p) = (out_rows..rows.len()).find(|&r| !rows[r][lead].is_zero()) else {
            lead += 1;
            continue;
        };
        rows.swap(out_rows, p);
        let inv = rows[out_rows][lead].inv();
        for c in 0..width {
            rows[out_rows][c] = rows[out_rows][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r != out_rows && !rows[r][lead].is_zero() {
                let factor = rows[r][lead].clone();
                for c in 0..width {
                    let t = rows[out_rows][c].mul(&factor);
                    rows[r][c] = rows[r][c].sub(&t);
                }
            }
        }
        out_rows += 1;
        lead += 1;
    }
    rows.truncate(out_rows);
    rows
}

/// Basis (in reduced echelon form) of `{x : rows · x = 0}`.
pub fn kernel(rows: Rows, width: usize, zero: &El) -> Rows {
    let r = rref(rows, width);
    let pivots: Vec<usize> = r
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); width];
        v[free] = zero.one_like();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = row[free].neg();
        }
        basis.push(v);
    }
    rref(basis, width)
}

pub fn span(vectors: Rows, width: usize) -> Rows {
    rref(vectors, width)
}

pub fn subspace_rows(s: &Subspace) -> Rows {
    (0..s.dim())
        .map(|i| s.basis_vector(i).iter().map(El::from_scalar).collect())
        .collect()
}

/// `P(H)`: unknowns `x_i`, one equation per `(j, k)`:
/// `Σ_i Δ[j,k;i] x_i − u_j x_k − x_j u_k = 0`.
pub fn primitives(h: &HopfAlgebraSC) -> Rows {
    let n = h.carrier.dim;
    let z = zero_of(&h.mult);
    let mut eqs = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let mut row = vec![z.clone(); n];
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = entry(&h.comult, j * n + k, i);
            }
            row[k] = row[k].sub(&entry(&h.unit, j, 0));
            row[j] = row[j].sub(&entry(&h.unit, k, 0));
            eqs.push(row);
        }
    }
    kernel(eqs, n, &z)
}

fn product(h: &HopfAlgebraSC, a: &[El], b: &[El]) -> Vec<El> {
    let n = h.carrier.dim;
    let z = zero_of(&h.mult);
    let mut out = vec![z; n];
    for i in 0..n {
        for j in 0..n {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            let c = a[i].mul(&b[j]);
            for (k, o) in out.iter_mut().enumerate() {
                *o = o.add(&c.mul(&entry(&h.mult, k, i * n + j)));
            }
        }
    }
    out
}

/// `(ker ε)² + k·1`, the kernel of the projection onto the indecomposables.
pub fn indecomposable_kernel(h: &HopfAlgebraSC) -> Rows {
    let n = h.carrier.dim;
    let z = zero_of(&h.mult);
    let eps: Vec<El> = (0..n).map(|i| entry(&h.counit, 0, i)).collect();
    let ker = kernel(vec![eps], n, &z);
    let mut gens: Rows = Vec::new();
    for a in &ker {
        for b in &ker {
            gens.push(product(h, a, b));
        }
    }
    gens.push((0..n).map(|i| entry(&h.unit, i, 0)).collect());
    span(gens, n)
}

pub fn indecomposables_dim(h: &HopfAlgebraSC) -> usize {
    h.carrier.dim - indecomposable_kernel(h).len()
}

/// Kernel of an arbitrary library matrix, computed here.
pub fn matrix_kernel(m: &Matrix) -> Rows {
    let rows = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| entry(m, r, c)).collect())
        .collect();
    kernel(rows, m.cols(), &zero_of(m))
}

/// Left integrals: `t ∈ H*` with `Σ h₁ t(h₂) = t(h)·1` for every basis vector `h`.
pub fn left_integrals(h: &HopfAlgebraSC) -> Rows {
    let n = h.carrier.dim;
    let z = zero_of(&h.mult);
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // coefficient of e_j in Σ h₁ t(h₂) − t(e_i)·1 for h = e_i
            let mut row = vec![z.clone(); n];
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = entry(&h.comult, j * n + k, i);
            }
            row[i] = row[i].sub(&entry(&h.unit, j, 0));
            eqs.push(row);
        }
    }
    kernel(eqs, n, &z)
}

/// All families `(x_h)` with `Δ_{a,b}(x_{ab}) = 1_a⊗x_b + x_a⊗1_b` for every pair,
/// projected to degree `g`.
pub fn g_primitives(h: &HopfGroupCoalgebra, g: usize) -> Rows {
    let gr = &h.group;
    let dims: Vec<usize> = h.components.iter().map(|c| c.carrier.dim).collect();
    let mut off = vec![0];
    for d in &dims {
        off.push(off.last().unwrap() + d);
    }
    let total = *off.last().unwrap();
    let z = zero_of(&h.counit);
    let mut eqs = Vec::new();
    for a in 0..gr.order {
        for b in 0..gr.order {
            let ab = gr.table[a][b];
            let delta = &h.graded_comult[a * gr.order + b];
            let ua = &h.components[a].unit;
            let ub = &h.components[b].unit;
            for j in 0..dims[a] {
                for k in 0..dims[b] {
                    let mut row = vec![z.clone(); total];
                    for i in 0..dims[ab] {
                        row[off[ab] + i] = row[off[ab] + i].add(&entry(delta, j * dims[b] + k, i));
                    }
                    row[off[b] + k] = row[off[b] + k].sub(&entry(ua, j, 0));
                    row[off[a] + j] = row[off[a] + j].sub(&entry(ub, k, 0));
                    eqs.push(row);
                }
            }
        }
    }
    let families = kernel(eqs, total, &z);
    let projected = families.iter().map(|v| v[off[g]..off[g] + dims[g]].to_vec()).collect();
    span(projected, dims[g])
}

/// `π⁻¹(W)` for a library projection `pi` and a library subspace `w` of its target.
pub fn preimage(pi: &Matrix, w: &Subspace) -> Rows {
    let z = zero_of(pi);
    let dq = pi.rows();
    let annihilator = kernel(subspace_rows(w), dq, &z);
    let eqs = annihilator
        .iter()
        .map(|c| {
            (0..pi.cols())
                .map(|col| (0..dq).fold(z.clone(), |acc, r| acc.add(&c[r].mul(&entry(pi, r, col)))))
                .collect()
        })
        .collect();
    kernel(eqs, pi.cols(), &z)
}

/// `K + H_g` inside the total space, where `K` is the indecomposable kernel.
pub fn kernel_plus_block(k: &Rows, offset: usize, len: usize, width: usize, zero: &El) -> Rows {
    let mut gens = k.clone();
    for i in 0..len {
        let mut v = vec![zero.clone(); width];
        v[offset + i] = zero.one_like();
        gens.push(v);
    }
    span(gens, width)
}

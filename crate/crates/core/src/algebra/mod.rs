//! Finite-dimensional algebras over the rationals given by structure constants.

mod decompose;
mod group;

pub use decompose::{decompose, minimal_polynomial, rational_roots, Decomposition, MAX_SAMPLES};
pub use group::{cyclic_group_table, group_algebra, symmetric_group_table};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{self, Rat, RatMatrix};
use crate::skeletal::FrobeniusAlgebra;

/// `c[i][j][k]` is the coefficient of `e_k` in `e_i * e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    dim: usize,
    constants: Vec<Rat>,
    // nonzero (k, c[i][j][k]) per (i, j)
    sparse: Vec<Vec<(usize, Rat)>>,
    unit: Vec<Rat>,
}

impl StructureAlgebra {
    pub fn new(dim: usize, constants: Vec<Vec<Vec<Rat>>>, unit: Vec<Rat>) -> Result<Self> {
        let shape_ok = constants.len() == dim
            && constants
                .iter()
                .all(|plane| plane.len() == dim && plane.iter().all(|row| row.len() == dim));
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be {dim}x{dim}x{dim}"
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {}, expected {dim}",
                unit.len()
            )));
        }
        let flat: Vec<Rat> = constants.into_iter().flatten().flatten().collect();
        Ok(Self::from_flat(dim, flat, unit))
    }

    fn from_flat(dim: usize, constants: Vec<Rat>, unit: Vec<Rat>) -> Self {
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &constants[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Self {
            dim,
            constants,
            sparse,
            unit,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rat] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Nested `c[i][j][k]` copy, for serialization.
    pub fn constants_nested(&self) -> Vec<Vec<Vec<Rat>>> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.constant(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// Product of two coordinate vectors. Lengths are assumed correct.
    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let mut out = vec![Rat::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in &self.sparse[i * n + j] {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (k, c) in &self.sparse[i * self.dim + j] {
            out[*k] = c.clone();
        }
        out
    }

    /// Matrix of `y -> x * y` in the standard basis.
    pub fn left_mult_matrix(&self, x: &[Rat]) -> RatMatrix {
        let cols: Vec<Vec<Rat>> = (0..self.dim)
            .map(|j| self.mul(x, &self.basis_vector(j)))
            .collect();
        RatMatrix::from_fn(self.dim, self.dim, |r, c| cols[c][r].clone())
    }

    /// Full matrix algebra `M_d(Q)` on the matrix-unit basis, `E_ab` at index `a*d + b`.
    pub fn matrix_algebra(d: usize) -> Self {
        assert!(d >= 1, "matrix algebra of size 0");
        let n = d * d;
        let mut flat = vec![Rat::zero(); n * n * n];
        for a in 0..d {
            for b in 0..d {
                for e in 0..d {
                    // E_ab * E_be = E_ae
                    let (i, j, k) = (a * d + b, b * d + e, a * d + e);
                    flat[(i * n + j) * n + k] = Rat::one();
                }
            }
        }
        let mut unit = vec![Rat::zero(); n];
        for a in 0..d {
            unit[a * d + a] = Rat::one();
        }
        Self::from_flat(n, flat, unit)
    }

    /// Block-diagonal direct sum; the basis of each summand follows the previous one.
    pub fn direct_sum(parts: &[StructureAlgebra]) -> Self {
        let n: usize = parts.iter().map(|p| p.dim).sum();
        let mut flat = vec![Rat::zero(); n * n * n];
        let mut unit = Vec::with_capacity(n);
        let mut off = 0;
        for p in parts {
            for i in 0..p.dim {
                for j in 0..p.dim {
                    for (k, c) in &p.sparse[i * p.dim + j] {
                        flat[((off + i) * n + off + j) * n + off + k] = c.clone();
                    }
                }
            }
            unit.extend_from_slice(&p.unit);
            off += p.dim;
        }
        Self::from_flat(n, flat, unit)
    }

    /// `⊕ M_{d_i}(Q)` together with the form `⊕ λ_i tr`.
    pub fn split_semisimple(frob: &FrobeniusAlgebra) -> (Self, LinearFunctional) {
        let parts: Vec<Self> = frob
            .skeleton()
            .block_dims()
            .iter()
            .map(|&d| Self::matrix_algebra(d))
            .collect();
        let alg = Self::direct_sum(&parts);
        let mut form = Vec::with_capacity(alg.dim);
        for (&d, lam) in frob.skeleton().block_dims().iter().zip(frob.lambdas()) {
            for a in 0..d {
                for b in 0..d {
                    form.push(if a == b { lam.clone() } else { Rat::zero() });
                }
            }
        }
        (alg, LinearFunctional::new(form))
    }

    /// The dual numbers `Q[ε]/(ε²)` on the basis `(1, ε)`.
    pub fn dual_numbers() -> Self {
        let z = Rat::zero;
        let o = Rat::one;
        Self::new(
            2,
            vec![
                vec![vec![o(), z()], vec![z(), o()]],
                vec![vec![z(), o()], vec![z(), z()]],
            ],
            vec![o(), z()],
        )
        .expect("static shape")
    }
}

/// A linear map `A -> Q`, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional(Vec<Rat>);

impl LinearFunctional {
    pub fn new(coefficients: Vec<Rat>) -> Self {
        Self(coefficients)
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.0
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        exactlin::dot(&self.0, x)
    }

    /// Trace form `x -> tr(x)` for the matrix-unit basis of `M_d`.
    pub fn matrix_trace(d: usize) -> Self {
        Self(
            (0..d * d)
                .map(|idx| {
                    if idx / d == idx % d {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
                .collect(),
        )
    }

    fn check_dim(&self, a: &StructureAlgebra) -> Result<()> {
        if self.0.len() != a.dim {
            return Err(Error::DimensionMismatch(format!(
                "functional has {} coefficients, algebra has dimension {}",
                self.0.len(),
                a.dim
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomFailure {
    /// `(e_i e_j) e_k != e_i (e_j e_k)`
    Associativity { i: usize, j: usize, k: usize },
    /// `1 * e_i != e_i`
    LeftUnit { i: usize },
    /// `e_i * 1 != e_i`
    RightUnit { i: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_axioms(a: &StructureAlgebra) -> AxiomReport {
    let n = a.dim;
    let mut failures = Vec::new();
    let products: Vec<Vec<Rat>> = (0..n * n)
        .map(|ij| a.basis_product(ij / n, ij % n))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let ij = &products[i * n + j];
            for k in 0..n {
                let left = a.mul(ij, &a.basis_vector(k));
                let right = a.mul(&a.basis_vector(i), &products[j * n + k]);
                if left != right {
                    failures.push(AxiomFailure::Associativity { i, j, k });
                }
            }
        }
    }
    for i in 0..n {
        let e = a.basis_vector(i);
        if a.mul(&a.unit, &e) != e {
            failures.push(AxiomFailure::LeftUnit { i });
        }
        if a.mul(&e, &a.unit) != e {
            failures.push(AxiomFailure::RightUnit { i });
        }
    }
    AxiomReport { failures }
}

fn require_valid(a: &StructureAlgebra) -> Result<()> {
    let report = check_axioms(a);
    match report.failures.first() {
        None => Ok(()),
        Some(first) => Err(Error::InvalidAlgebra(format!(
            "{} axiom failure(s), first: {first:?}",
            report.failures.len()
        ))),
    }
}

pub fn multiply(a: &StructureAlgebra, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
    if x.len() != a.dim || y.len() != a.dim {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {} in an algebra of dimension {}",
            x.len(),
            y.len(),
            a.dim
        )));
    }
    Ok(a.mul(x, y))
}

/// Stacked map `z -> (z e_j - e_j z)_j`, an `n² x n` matrix.
fn commutator_map(a: &StructureAlgebra) -> RatMatrix {
    let n = a.dim;
    let mut m = RatMatrix::zeros(n * n, n);
    for j in 0..n {
        for i in 0..n {
            for k in 0..n {
                m[(j * n + k, i)] = a.constant(i, j, k) - a.constant(j, i, k);
            }
        }
    }
    m
}

pub fn center_basis(a: &StructureAlgebra) -> Result<Vec<Vec<Rat>>> {
    require_valid(a)?;
    Ok(exactlin::kernel_vectors(&commutator_map(a)))
}

/// Basis of `[A, A] = span{ e_i e_j - e_j e_i }`.
pub fn commutator_subspace(a: &StructureAlgebra) -> Result<Vec<Vec<Rat>>> {
    require_valid(a)?;
    let n = a.dim;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<Rat> = a
                .basis_product(i, j)
                .iter()
                .zip(a.basis_product(j, i))
                .map(|(x, y)| x - y)
                .collect();
            if !exactlin::is_zero_vec(&v) {
                gens.push(v);
            }
        }
    }
    Ok(exactlin::span_basis(&gens, n))
}

/// Gram matrix `G[i][j] = λ(e_i e_j)`.
pub fn gram_matrix(a: &StructureAlgebra, form: &LinearFunctional) -> Result<RatMatrix> {
    form.check_dim(a)?;
    let n = a.dim;
    Ok(RatMatrix::from_fn(n, n, |i, j| {
        form.eval(&a.basis_product(i, j))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    /// Pairs `(i, j)`, `i < j`, with `λ(e_i e_j) != λ(e_j e_i)`.
    pub symmetry_failures: Vec<(usize, usize)>,
    pub gram_rank: usize,
    pub dim: usize,
}

impl FrobeniusReport {
    pub fn symmetric(&self) -> bool {
        self.symmetry_failures.is_empty()
    }

    pub fn nondegenerate(&self) -> bool {
        self.gram_rank == self.dim
    }

    pub fn passed(&self) -> bool {
        self.symmetric() && self.nondegenerate()
    }
}

pub fn check_symmetric_frobenius(
    a: &StructureAlgebra,
    form: &LinearFunctional,
) -> Result<FrobeniusReport> {
    require_valid(a)?;
    let g = gram_matrix(a, form)?;
    let n = a.dim;
    let mut symmetry_failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g[(i, j)] != g[(j, i)] {
                symmetry_failures.push((i, j));
            }
        }
    }
    Ok(FrobeniusReport {
        symmetry_failures,
        gram_rank: exactlin::rank(&g),
        dim: n,
    })
}

/// Gram matrix of the trace form `T(x, y) = tr(L_x L_y) = tr(L_{xy})`.
pub fn trace_form_gram(a: &StructureAlgebra) -> RatMatrix {
    let n = a.dim;
    // tr(L_{e_k}) = Σ_m c[k][m][m]
    let traces: Vec<Rat> = (0..n)
        .map(|k| (0..n).fold(Rat::zero(), |s, m| s + a.constant(k, m, m)))
        .collect();
    RatMatrix::from_fn(n, n, |i, j| {
        a.sparse[i * n + j]
            .iter()
            .fold(Rat::zero(), |s, (k, c)| s + c * &traces[*k])
    })
}

/// Semisimplicity via nondegeneracy of the trace form (valid in characteristic zero).
pub fn check_semisimple(a: &StructureAlgebra) -> Result<bool> {
    require_valid(a)?;
    Ok(exactlin::rank(&trace_form_gram(a)) == a.dim)
}

/// Central invertible `z` with `λ'(x) = λ(z x)` for all `x`.
pub fn frobenius_ratio(
    a: &StructureAlgebra,
    form: &LinearFunctional,
    other: &LinearFunctional,
) -> Result<Vec<Rat>> {
    form.check_dim(a)?;
    other.check_dim(a)?;
    for (name, f) in [("first", form), ("second", other)] {
        if !check_symmetric_frobenius(a, f)?.passed() {
            return Err(Error::NoSolution(format!(
                "{name} form is not a symmetric Frobenius form"
            )));
        }
    }
    // λ(z e_k) = Σ_i z_i G[i][k], so G^T z = λ'
    let g = gram_matrix(a, form)?;
    let rhs = RatMatrix::column(other.coefficients());
    let z = exactlin::solve(&g.transpose(), &rhs)?
        .ok_or_else(|| Error::NoSolution("no z with λ'(x) = λ(z x)".into()))?
        .into_entries();
    let central = (0..a.dim).all(|j| {
        let e = a.basis_vector(j);
        a.mul(&z, &e) == a.mul(&e, &z)
    });
    if !central {
        return Err(Error::NoSolution("ratio element is not central".into()));
    }
    if inverse_element(a, &z)?.is_none() {
        return Err(Error::NoSolution("ratio element is not invertible".into()));
    }
    Ok(z)
}

/// Two-sided inverse of `x`, when it exists.
pub fn inverse_element(a: &StructureAlgebra, x: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if x.len() != a.dim {
        return Err(Error::DimensionMismatch("element length".into()));
    }
    let l = a.left_mult_matrix(x);
    let Some(w) = exactlin::solve(&l, &RatMatrix::column(&a.unit))? else {
        return Ok(None);
    };
    let w = w.into_entries();
    Ok((a.mul(&w, x) == a.unit).then_some(w))
}

/// Scalar multiple of a vector.
pub(crate) fn scaled(v: &[Rat], s: &Rat) -> Vec<Rat> {
    v.iter().map(|x| x * s).collect()
}

pub(crate) fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

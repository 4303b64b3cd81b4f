//! Skeletal Morita theory of split semisimple symmetric Frobenius algebras.
//!
//! An algebra is a list of block sizes `[d_1..d_r]`; a symmetric Frobenius
//! form is `⊕ λ_i tr` on those blocks. A Morita context in normal form is a
//! permutation `σ` matching source block `i` with target block `σ(i)`
//! (so `M = ⊕ T_σ(i) ⊗ S_i`) plus per-block scalars for `ε` and `η`.
//!
//! Scalar convention: `eps[i]` is the scalar of `ε: N ⊗_B M → A` on source
//! block `i`, and `eta[i]` is the scalar of the inverse `η⁻¹: M ⊗_A N → B` on
//! the matching target block. Both zig-zag composites on block `i` then equal
//! `eps[i] / eta[i]`, so a context is valid exactly when `eps == eta`, and the
//! identity context has every scalar equal to 1.
//!
//! The quotient `A/[A,A]` is charted as `Q^r` by block traces everywhere.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Rat, RatMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SemisimpleSkeleton {
    block_dims: Vec<usize>,
}

impl SemisimpleSkeleton {
    pub fn new(block_dims: Vec<usize>) -> Result<Self> {
        if block_dims.is_empty() {
            return Err(Error::ShapeMismatch(
                "a skeleton needs at least one block".into(),
            ));
        }
        if block_dims.contains(&0) {
            return Err(Error::ShapeMismatch(
                "block dimensions must be positive".into(),
            ));
        }
        Ok(Self { block_dims })
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    pub fn blocks(&self) -> usize {
        self.block_dims.len()
    }

    /// `Σ d_i²`
    pub fn algebra_dim(&self) -> usize {
        self.block_dims.iter().map(|d| d * d).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusAlgebra {
    skeleton: SemisimpleSkeleton,
    lambdas: Vec<Rat>,
}

impl FrobeniusAlgebra {
    pub fn new(block_dims: Vec<usize>, lambdas: Vec<Rat>) -> Result<Self> {
        let skeleton = SemisimpleSkeleton::new(block_dims)?;
        Self::from_skeleton(skeleton, lambdas)
    }

    pub fn from_skeleton(skeleton: SemisimpleSkeleton, lambdas: Vec<Rat>) -> Result<Self> {
        if lambdas.len() != skeleton.blocks() {
            return Err(Error::ShapeMismatch(format!(
                "{} lambdas for {} blocks",
                lambdas.len(),
                skeleton.blocks()
            )));
        }
        if let Some(i) = lambdas.iter().position(Zero::is_zero) {
            return Err(Error::InvalidForm(format!("λ_{} is zero", i + 1)));
        }
        Ok(Self { skeleton, lambdas })
    }

    /// The trace form on every block.
    pub fn trace_form(skeleton: SemisimpleSkeleton) -> Self {
        let lambdas = vec![Rat::one(); skeleton.blocks()];
        Self { skeleton, lambdas }
    }

    pub fn skeleton(&self) -> &SemisimpleSkeleton {
        &self.skeleton
    }

    pub fn lambdas(&self) -> &[Rat] {
        &self.lambdas
    }

    pub fn blocks(&self) -> usize {
        self.skeleton.blocks()
    }

    /// `λ` evaluated on a class given in block-trace coordinates.
    pub fn form_on_chart(&self, class: &[Rat]) -> Rat {
        self.lambdas
            .iter()
            .zip(class)
            .fold(Rat::zero(), |s, (l, c)| s + l * c)
    }
}

/// A bijection of `{0..r-1}`; `perm[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &x in &images {
            if x >= r || seen[x] {
                return Err(Error::InvalidContext(format!(
                    "{images:?} is not a permutation of 0..{r}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(r: usize) -> Self {
        Self((0..r).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation(first.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Matrix `P` with `P[σ(i)][i] = 1`, so `P e_i = e_σ(i)`.
    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.len(), self.len(), |r, c| {
            if self.0[c] == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `_B M_A = ⊕ α_ij T_i ⊗ S_j`, `mult[i][j] = α_ij` (target rows, source columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletalBimodule {
    pub source: SemisimpleSkeleton,
    pub target: SemisimpleSkeleton,
    pub mult: Vec<Vec<usize>>,
}

pub fn is_morita_bimodule(m: &SkeletalBimodule) -> Result<bool> {
    let (r, s) = (m.source.blocks(), m.target.blocks());
    if r != s {
        return Err(Error::BlockCountMismatch(r, s));
    }
    if m.mult.len() != s || m.mult.iter().any(|row| row.len() != r) {
        return Err(Error::ShapeMismatch(format!(
            "multiplicity matrix must be {s}x{r}"
        )));
    }
    let rows_ok = m.mult.iter().all(|row| unit_vector(row));
    let cols_ok = (0..r).all(|j| {
        let col: Vec<usize> = m.mult.iter().map(|row| row[j]).collect();
        unit_vector(&col)
    });
    Ok(rows_ok && cols_ok)
}

fn unit_vector(v: &[usize]) -> bool {
    v.iter().filter(|&&x| x != 0).count() == 1 && v.iter().all(|&x| x <= 1)
}

/// One side of a Morita context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Bare(SemisimpleSkeleton),
    Frobenius(FrobeniusAlgebra),
}

impl Endpoint {
    pub fn skeleton(&self) -> &SemisimpleSkeleton {
        match self {
            Endpoint::Bare(s) => s,
            Endpoint::Frobenius(f) => f.skeleton(),
        }
    }

    pub fn frobenius(&self) -> Option<&FrobeniusAlgebra> {
        match self {
            Endpoint::Bare(_) => None,
            Endpoint::Frobenius(f) => Some(f),
        }
    }

    pub fn blocks(&self) -> usize {
        self.skeleton().blocks()
    }
}

impl From<FrobeniusAlgebra> for Endpoint {
    fn from(f: FrobeniusAlgebra) -> Self {
        Endpoint::Frobenius(f)
    }
}

impl From<SemisimpleSkeleton> for Endpoint {
    fn from(s: SemisimpleSkeleton) -> Self {
        Endpoint::Bare(s)
    }
}

/// Morita context in normal form. Scalars are indexed by source block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoritaContext {
    source: Endpoint,
    target: Endpoint,
    perm: Permutation,
    eps: Vec<Rat>,
    eta: Vec<Rat>,
}

impl MoritaContext {
    /// Shape-checks the data. The zig-zag identities are not assumed; see
    /// [`check_morita_axioms`].
    pub fn new(
        source: impl Into<Endpoint>,
        target: impl Into<Endpoint>,
        perm: Permutation,
        eps: Vec<Rat>,
        eta: Vec<Rat>,
    ) -> Result<Self> {
        let (source, target) = (source.into(), target.into());
        let r = source.blocks();
        if target.blocks() != r {
            return Err(Error::BlockCountMismatch(r, target.blocks()));
        }
        if perm.len() != r || eps.len() != r || eta.len() != r {
            return Err(Error::ShapeMismatch(format!(
                "perm/eps/eta must all have length {r}"
            )));
        }
        if eps.iter().chain(&eta).any(Zero::is_zero) {
            return Err(Error::InvalidContext(
                "ε and η scalars must be nonzero".into(),
            ));
        }
        Ok(Self {
            source,
            target,
            perm,
            eps,
            eta,
        })
    }

    /// Identity context `(A, A, A ⊗_A A ≅ A, ...)` on one endpoint.
    pub fn identity(endpoint: impl Into<Endpoint>) -> Self {
        let endpoint = endpoint.into();
        let r = endpoint.blocks();
        Self {
            source: endpoint.clone(),
            target: endpoint,
            perm: Permutation::identity(r),
            eps: vec![Rat::one(); r],
            eta: vec![Rat::one(); r],
        }
    }

    /// Valid context with `eta = eps`.
    pub fn with_scalars(
        source: impl Into<Endpoint>,
        target: impl Into<Endpoint>,
        perm: Permutation,
        eps: Vec<Rat>,
    ) -> Result<Self> {
        let eta = eps.clone();
        Self::new(source, target, perm, eps, eta)
    }

    pub fn source(&self) -> &Endpoint {
        &self.source
    }

    pub fn target(&self) -> &Endpoint {
        &self.target
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn eps(&self) -> &[Rat] {
        &self.eps
    }

    pub fn eta(&self) -> &[Rat] {
        &self.eta
    }

    pub fn blocks(&self) -> usize {
        self.perm.len()
    }

    /// Replaces both endpoints, keeping the scalar data.
    pub fn with_endpoints(
        &self,
        source: impl Into<Endpoint>,
        target: impl Into<Endpoint>,
    ) -> Result<Self> {
        Self::new(
            source,
            target,
            self.perm.clone(),
            self.eps.clone(),
            self.eta.clone(),
        )
    }

    /// The bimodule `M` of the normal form.
    pub fn bimodule(&self) -> SkeletalBimodule {
        let r = self.blocks();
        let mut mult = vec![vec![0; r]; r];
        for i in 0..r {
            mult[self.perm.apply(i)][i] = 1;
        }
        SkeletalBimodule {
            source: self.source.skeleton().clone(),
            target: self.target.skeleton().clone(),
            mult,
        }
    }

    fn require_valid(&self) -> Result<()> {
        let report = check_morita_axioms(self);
        if report.passed() {
            Ok(())
        } else {
            Err(Error::InvalidContext(report.to_string()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZigZagFailure {
    pub block: usize,
    /// `M → M ⊗_A N ⊗_B M → M` as a scalar
    pub m_composite: String,
    /// `N → N ⊗_B M ⊗_A N → N` as a scalar
    pub n_composite: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MoritaAxiomReport {
    pub failures: Vec<ZigZagFailure>,
}

impl MoritaAxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failing_blocks(&self) -> Vec<usize> {
        self.failures.iter().map(|f| f.block).collect()
    }
}

impl fmt::Display for MoritaAxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "zig-zag identities hold");
        }
        let parts: Vec<String> = self
            .failures
            .iter()
            .map(|z| format!("η{} ≠ ε{}", z.block + 1, z.block + 1))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Evaluates both zig-zag diagrams on every block.
pub fn check_morita_axioms(m: &MoritaContext) -> MoritaAxiomReport {
    let failures = (0..m.blocks())
        .filter_map(|i| {
            // M ≅ B ⊗ M --η⊗id--> M ⊗ N ⊗ M --id⊗ε--> M ⊗ A ≅ M
            let m_composite = &m.eps[i] / &m.eta[i];
            // N ≅ N ⊗ B --id⊗η--> N ⊗ M ⊗ N --ε⊗id--> A ⊗ N ≅ N
            let n_composite = &m.eps[i] / &m.eta[i];
            (!m_composite.is_one() || !n_composite.is_one()).then(|| ZigZagFailure {
                block: i,
                m_composite: m_composite.to_string(),
                n_composite: n_composite.to_string(),
            })
        })
        .collect();
    MoritaAxiomReport { failures }
}

fn same_endpoint(a: &Endpoint, b: &Endpoint) -> bool {
    if a.skeleton() != b.skeleton() {
        return false;
    }
    match (a.frobenius(), b.frobenius()) {
        (Some(x), Some(y)) => x == y,
        _ => true,
    }
}

/// `m2 ∘ m1`, i.e. the bimodule `M2 ⊗_B M1`.
pub fn compose(m2: &MoritaContext, m1: &MoritaContext) -> Result<MoritaContext> {
    if !same_endpoint(&m1.target, &m2.source) {
        return Err(Error::SourceTargetMismatch(
            "target of the first context differs from source of the second".into(),
        ));
    }
    m1.require_valid()?;
    m2.require_valid()?;
    let s1 = &m1.perm;
    let along = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        (0..m1.blocks()).map(|i| &x[i] * &y[s1.apply(i)]).collect()
    };
    Ok(MoritaContext {
        source: m1.source.clone(),
        target: m2.target.clone(),
        perm: m2.perm.after(s1),
        eps: along(&m1.eps, &m2.eps),
        eta: along(&m1.eta, &m2.eta),
    })
}

/// Inverse in the skeletal bigroupoid: `compose(invert(m), m)` is the identity context.
pub fn invert(m: &MoritaContext) -> Result<MoritaContext> {
    m.require_valid()?;
    let inv = m.perm.inverse();
    let transport =
        |x: &[Rat]| -> Vec<Rat> { (0..m.blocks()).map(|j| x[inv.apply(j)].recip()).collect() };
    Ok(MoritaContext {
        source: m.target.clone(),
        target: m.source.clone(),
        eps: transport(&m.eps),
        eta: transport(&m.eta),
        perm: inv,
    })
}

/// Block-trace coordinates of `⊕ A_i`.
pub fn trace_chart(blocks: &[RatMatrix]) -> Vec<Rat> {
    blocks.iter().map(RatMatrix::trace).collect()
}

fn matrix_unit(n: usize, scale: Rat) -> RatMatrix {
    let mut e = RatMatrix::zeros(n, n);
    e[(0, 0)] = scale;
    e
}

/// The map `f: A/[A,A] → B/[B,B]` in block-trace coordinates.
///
/// Column `i` is computed by sending the class of `E_11` in source block `i`
/// to `tr(E_11) · [E_11]` in target block `σ(i)` and charting the result.
/// It does not depend on the scalars of the context.
pub fn induced_f(m: &MoritaContext) -> Result<RatMatrix> {
    m.require_valid()?;
    let r = m.blocks();
    let src = m.source.skeleton().block_dims();
    let dst = m.target.skeleton().block_dims();
    let mut f = RatMatrix::zeros(r, r);
    for i in 0..r {
        let a_i = matrix_unit(src[i], Rat::one());
        let mut image: Vec<RatMatrix> = dst.iter().map(|&n| RatMatrix::zeros(n, n)).collect();
        let j = m.perm.apply(i);
        image[j] = matrix_unit(dst[j], a_i.trace());
        for (row, v) in trace_chart(&image).into_iter().enumerate() {
            f[(row, i)] = v;
        }
    }
    Ok(f)
}

/// Which formulation of compatibility to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CompatMode {
    /// `λ^B ∘ f = λ^A` on the basis classes of `A/[A,A]`.
    Diagram,
    /// `m.a = b.m` on `M` and `n.b⁻¹ = a⁻¹.n` on `N`, with `a`, `b` the central
    /// elements given by the block scalars.
    CentralElements,
    /// `λ^A_i = λ^B_σ(i)` for every block.
    Scalars,
}

impl CompatMode {
    pub const ALL: [CompatMode; 3] = [
        CompatMode::Diagram,
        CompatMode::CentralElements,
        CompatMode::Scalars,
    ];

    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(CompatMode::Diagram),
            2 => Some(CompatMode::CentralElements),
            3 => Some(CompatMode::Scalars),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            CompatMode::Diagram => 1,
            CompatMode::CentralElements => 2,
            CompatMode::Scalars => 3,
        }
    }
}

fn forms(m: &MoritaContext) -> Result<(&FrobeniusAlgebra, &FrobeniusAlgebra)> {
    let a = m
        .source
        .frobenius()
        .ok_or_else(|| Error::MissingFrobeniusData("source has no Frobenius form".into()))?;
    let b = m
        .target
        .frobenius()
        .ok_or_else(|| Error::MissingFrobeniusData("target has no Frobenius form".into()))?;
    Ok((a, b))
}

/// Whether the context intertwines the two Frobenius forms.
pub fn check_compatible(m: &MoritaContext, mode: CompatMode) -> Result<bool> {
    let (a, b) = forms(m)?;
    m.require_valid()?;
    let r = m.blocks();
    Ok(match mode {
        CompatMode::Diagram => {
            let f = induced_f(m)?;
            (0..r).all(|i| {
                let mut class = vec![Rat::zero(); r];
                class[i] = Rat::one();
                let pushed = f.mul_vec(&class).expect("square");
                b.form_on_chart(&pushed) == a.form_on_chart(&class)
            })
        }
        CompatMode::CentralElements => {
            let src = a.skeleton().block_dims();
            let dst = b.skeleton().block_dims();
            (0..r).all(|i| {
                let j = m.perm.apply(i);
                let (d, n) = (src[i], dst[j]);
                let (ai, bj) = (&a.lambdas()[i], &b.lambdas()[j]);
                // generic elements of the summands T_j ⊗ S_i of M and S_i ⊗ T_j of N
                let m_elt =
                    RatMatrix::from_fn(n, d, |r, c| Rat::from_integer((r * d + c + 1).into()));
                let n_elt = m_elt.transpose();
                let act = |k: usize, s: &Rat| RatMatrix::identity(k).scale(s);
                let m_right = m_elt.mul(&act(d, ai)).expect("shapes");
                let m_left = act(n, bj).mul(&m_elt).expect("shapes");
                let n_right = n_elt.mul(&act(n, &bj.recip())).expect("shapes");
                let n_left = act(d, &ai.recip()).mul(&n_elt).expect("shapes");
                m_right == m_left && n_right == n_left
            })
        }
        CompatMode::Scalars => (0..r).all(|i| a.lambdas()[i] == b.lambdas()[m.perm.apply(i)]),
    })
}

/// A 2-morphism between parallel Morita contexts: `f: M → M'`, `g: N → N'`,
/// one scalar per source block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoritaMorphism {
    pub f_scalars: Vec<Rat>,
    pub g_scalars: Vec<Rat>,
}

impl MoritaMorphism {
    pub fn new(f_scalars: Vec<Rat>, g_scalars: Vec<Rat>) -> Result<Self> {
        if f_scalars.len() != g_scalars.len() {
            return Err(Error::ShapeMismatch("f and g scalar counts differ".into()));
        }
        if f_scalars.iter().chain(&g_scalars).any(Zero::is_zero) {
            return Err(Error::ShapeMismatch(
                "morphism scalars must be nonzero".into(),
            ));
        }
        Ok(Self {
            f_scalars,
            g_scalars,
        })
    }

    pub fn identity(r: usize) -> Self {
        Self {
            f_scalars: vec![Rat::one(); r],
            g_scalars: vec![Rat::one(); r],
        }
    }

    pub fn blocks(&self) -> usize {
        self.f_scalars.len()
    }

    /// `then ∘ self`
    pub fn vertical(&self, then: &MoritaMorphism) -> MoritaMorphism {
        let mul = |x: &[Rat], y: &[Rat]| x.iter().zip(y).map(|(a, b)| a * b).collect();
        MoritaMorphism {
            f_scalars: mul(&self.f_scalars, &then.f_scalars),
            g_scalars: mul(&self.g_scalars, &then.g_scalars),
        }
    }

    pub fn inverse(&self) -> MoritaMorphism {
        MoritaMorphism {
            f_scalars: self.f_scalars.iter().map(Rat::recip).collect(),
            g_scalars: self.g_scalars.iter().map(Rat::recip).collect(),
        }
    }

    /// `outer * inner` for 2-morphisms between composable 1-morphisms, where
    /// the inner 1-morphisms carry block `i` to block `inner_perm(i)`.
    pub fn horizontal(
        outer: &MoritaMorphism,
        inner: &MoritaMorphism,
        inner_perm: &Permutation,
    ) -> MoritaMorphism {
        let along = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
            (0..x.len())
                .map(|i| &x[i] * &y[inner_perm.apply(i)])
                .collect()
        };
        MoritaMorphism {
            f_scalars: along(&inner.f_scalars, &outer.f_scalars),
            g_scalars: along(&inner.g_scalars, &outer.g_scalars),
        }
    }
}

/// Both triangles of a morphism of Morita contexts, per block:
/// `f_i g_i η'_i = η_i` and `ε'_i g_i f_i = ε_i`, with `η` stored as the
/// scalar of `η⁻¹: M ⊗ N → B`.
pub fn check_context_morphism(
    m: &MoritaContext,
    m2: &MoritaContext,
    phi: &MoritaMorphism,
) -> Result<bool> {
    if m.perm != m2.perm {
        return Err(Error::PermMismatch);
    }
    if phi.blocks() != m.blocks() {
        return Err(Error::ShapeMismatch(format!(
            "morphism has {} blocks, contexts have {}",
            phi.blocks(),
            m.blocks()
        )));
    }
    Ok((0..m.blocks()).all(|i| {
        let fg = &phi.f_scalars[i] * &phi.g_scalars[i];
        &fg * &m2.eta[i] == m.eta[i] && &m2.eps[i] * &fg == m.eps[i]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};

    fn frob(dims: &[usize], lambdas: &[Rat]) -> FrobeniusAlgebra {
        FrobeniusAlgebra::new(dims.to_vec(), lambdas.to_vec()).unwrap()
    }

    fn skel(dims: &[usize]) -> SemisimpleSkeleton {
        SemisimpleSkeleton::new(dims.to_vec()).unwrap()
    }

    fn perm(p: &[usize]) -> Permutation {
        Permutation::new(p.to_vec()).unwrap()
    }

    fn single(eps: i64, eta: i64) -> MoritaContext {
        MoritaContext::new(
            skel(&[1]),
            skel(&[1]),
            perm(&[0]),
            vec![int(eps)],
            vec![int(eta)],
        )
        .unwrap()
    }

    #[test]
    fn skeleton_invariants() {
        assert!(SemisimpleSkeleton::new(vec![]).is_err());
        assert!(SemisimpleSkeleton::new(vec![1, 0]).is_err());
        assert_eq!(skel(&[1, 1, 2]).algebra_dim(), 6);
        assert!(FrobeniusAlgebra::new(vec![1], vec![int(0)]).is_err());
        assert!(FrobeniusAlgebra::new(vec![1, 2], vec![int(1)]).is_err());
    }

    #[test]
    fn bimodule_examples() {
        let s = skel(&[1, 2, 3]);
        let bm = |mult: Vec<Vec<usize>>| SkeletalBimodule {
            source: s.clone(),
            target: s.clone(),
            mult,
        };
        assert!(
            is_morita_bimodule(&bm(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap()
        );
        assert!(
            !is_morita_bimodule(&bm(vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap()
        );
        assert!(
            is_morita_bimodule(&bm(vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])).unwrap()
        );
        assert!(
            !is_morita_bimodule(&bm(vec![vec![1, 1, 0], vec![0, 0, 0], vec![0, 0, 1]])).unwrap()
        );

        let mismatched = SkeletalBimodule {
            source: skel(&[1]),
            target: skel(&[1, 1]),
            mult: vec![vec![1], vec![0]],
        };
        assert_eq!(
            is_morita_bimodule(&mismatched).unwrap_err(),
            Error::BlockCountMismatch(1, 2)
        );
    }

    #[test]
    fn axiom_examples() {
        assert!(check_morita_axioms(&MoritaContext::identity(skel(&[1, 2]))).passed());
        assert!(check_morita_axioms(&single(2, 2)).passed());
        let bad = check_morita_axioms(&single(2, 3));
        assert_eq!(bad.failing_blocks(), vec![0]);
        assert_eq!(bad.to_string(), "η1 ≠ ε1");
    }

    #[test]
    fn compose_examples() {
        let a = skel(&[1, 2]);
        let m = MoritaContext::with_scalars(
            a.clone(),
            a.clone(),
            perm(&[1, 0]),
            vec![int(2), rat(1, 3)],
        )
        .unwrap();
        let id = MoritaContext::identity(a.clone());
        assert_eq!(compose(&m, &id).unwrap(), m);
        assert_eq!(compose(&invert(&m).unwrap(), &m).unwrap(), id);

        let s = skel(&[1, 1, 1]);
        let s1 =
            MoritaContext::with_scalars(s.clone(), s.clone(), perm(&[1, 0, 2]), vec![int(1); 3])
                .unwrap();
        let s2 =
            MoritaContext::with_scalars(s.clone(), s.clone(), perm(&[0, 2, 1]), vec![int(1); 3])
                .unwrap();
        assert_eq!(compose(&s2, &s1).unwrap().perm().images(), &[2, 0, 1]);
    }

    #[test]
    fn compose_errors() {
        let m = MoritaContext::identity(skel(&[1]));
        let other = MoritaContext::identity(skel(&[2]));
        assert!(matches!(
            compose(&other, &m),
            Err(Error::SourceTargetMismatch(_))
        ));
        assert!(matches!(
            compose(&single(2, 3), &m),
            Err(Error::InvalidContext(_))
        ));
        assert!(matches!(
            invert(&single(2, 3)),
            Err(Error::InvalidContext(_))
        ));
    }

    #[test]
    fn invert_examples() {
        let id = MoritaContext::identity(skel(&[1, 2]));
        assert_eq!(invert(&id).unwrap(), id);
        assert_eq!(invert(&single(2, 2)).unwrap().eps(), &[rat(1, 2)]);

        let s = skel(&[1, 1, 1]);
        let m = MoritaContext::with_scalars(
            s.clone(),
            s.clone(),
            perm(&[1, 2, 0]),
            vec![int(1), int(2), int(3)],
        )
        .unwrap();
        let inv = invert(&m).unwrap();
        assert_eq!(inv.perm().images(), &[2, 0, 1]);
        // block 1 of the inverse comes from block 0 of m
        assert_eq!(inv.eps(), &[rat(1, 3), int(1), rat(1, 2)]);
        assert_eq!(compose(&inv, &m).unwrap(), MoritaContext::identity(s));
    }

    #[test]
    fn induced_f_examples() {
        let id = MoritaContext::identity(skel(&[1, 3]));
        assert_eq!(induced_f(&id).unwrap(), RatMatrix::identity(2));

        let scaled = MoritaContext::with_scalars(
            skel(&[1, 3]),
            skel(&[1, 3]),
            perm(&[0, 1]),
            vec![int(7), rat(1, 3)],
        )
        .unwrap();
        assert_eq!(induced_f(&scaled).unwrap(), RatMatrix::identity(2));

        let swap = MoritaContext::with_scalars(
            skel(&[1, 2]),
            skel(&[2, 1]),
            perm(&[1, 0]),
            vec![int(1); 2],
        )
        .unwrap();
        assert_eq!(
            induced_f(&swap).unwrap(),
            RatMatrix::from_i64(&[&[0, 1], &[1, 0]])
        );
        assert!(matches!(
            induced_f(&single(1, 2)),
            Err(Error::InvalidContext(_))
        ));
    }

    #[test]
    fn induced_f_between_different_block_sizes() {
        // M_2(Q) is Morita equivalent to Q
        let m =
            MoritaContext::with_scalars(skel(&[2]), skel(&[1]), perm(&[0]), vec![int(5)]).unwrap();
        assert_eq!(induced_f(&m).unwrap(), RatMatrix::identity(1));
    }

    #[test]
    fn compatibility_examples() {
        let a = frob(&[1, 2], &[int(2), int(3)]);
        let id = MoritaContext::identity(a.clone());
        for mode in CompatMode::ALL {
            assert!(check_compatible(&id, mode).unwrap());
        }

        let b = frob(&[1, 2], &[int(2), int(5)]);
        let m = MoritaContext::with_scalars(a.clone(), b, perm(&[0, 1]), vec![int(1); 2]).unwrap();
        for mode in CompatMode::ALL {
            assert!(!check_compatible(&m, mode).unwrap());
        }

        let b = frob(&[2, 1], &[int(3), int(2)]);
        let m = MoritaContext::with_scalars(a, b, perm(&[1, 0]), vec![int(4), rat(-1, 2)]).unwrap();
        for mode in CompatMode::ALL {
            assert!(check_compatible(&m, mode).unwrap());
        }
    }

    #[test]
    fn compatibility_errors() {
        let bare = MoritaContext::identity(skel(&[1]));
        assert!(matches!(
            check_compatible(&bare, CompatMode::Scalars),
            Err(Error::MissingFrobeniusData(_))
        ));
        let f = frob(&[1], &[int(1)]);
        let invalid =
            MoritaContext::new(f.clone(), f, perm(&[0]), vec![int(1)], vec![int(2)]).unwrap();
        assert!(matches!(
            check_compatible(&invalid, CompatMode::Diagram),
            Err(Error::InvalidContext(_))
        ));
    }

    #[test]
    fn context_morphism_examples() {
        let m = single(2, 2);
        assert!(check_context_morphism(&m, &m, &MoritaMorphism::identity(1)).unwrap());
        let phi = MoritaMorphism::new(vec![int(3)], vec![rat(1, 3)]).unwrap();
        assert!(check_context_morphism(&m, &m, &phi).unwrap());
        let phi = MoritaMorphism::new(vec![int(3)], vec![int(1)]).unwrap();
        assert!(!check_context_morphism(&m, &m, &phi).unwrap());
    }

    #[test]
    fn context_morphism_between_different_scalars() {
        // fg = ε/ε' makes both triangles commute
        let m = single(6, 6);
        let m2 = single(2, 2);
        let phi = MoritaMorphism::new(vec![int(3)], vec![int(1)]).unwrap();
        assert!(check_context_morphism(&m, &m2, &phi).unwrap());
        assert!(!check_context_morphism(&m2, &m, &phi).unwrap());

        let s = skel(&[1, 1]);
        let swapped =
            MoritaContext::with_scalars(s.clone(), s.clone(), perm(&[1, 0]), vec![int(1); 2])
                .unwrap();
        let straight = MoritaContext::identity(s);
        assert_eq!(
            check_context_morphism(&swapped, &straight, &MoritaMorphism::identity(2)).unwrap_err(),
            Error::PermMismatch
        );
    }

    #[test]
    fn permutation_algebra() {
        let p = perm(&[1, 2, 0]);
        assert!(p.after(&p.inverse()).is_identity());
        assert_eq!(
            p.matrix().mul(&p.inverse().matrix()).unwrap(),
            RatMatrix::identity(3)
        );
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
    }
}

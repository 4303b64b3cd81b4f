//! Homotopy fixed points of the trivial SO(2)-action on the skeletal Morita
//! bigroupoid.
//!
//! The strict model: 1-morphisms are [`MoritaContext`]s, 2-morphisms are
//! [`MoritaMorphism`]s (per-block scalars on `M` and `N`), vertical
//! composition multiplies scalars blockwise and horizontal composition
//! multiplies them along the permutation of the inner 1-morphism. Unitors and
//! associators are identities.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::Rat;
use crate::skeletal::{
    self, check_context_morphism, check_morita_axioms, FrobeniusAlgebra, MoritaContext,
    MoritaMorphism, Permutation,
};

/// A pair `(c, λ)` with `λ: id_c → id_c` given by the central unit it
/// multiplies by, one scalar per block.
///
/// The block scalars of `algebra` serve as the reference form when the object
/// is translated into a Frobenius algebra; use the trace form for the
/// canonical correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointObject {
    pub algebra: FrobeniusAlgebra,
    pub lambda_central: Vec<Rat>,
}

impl FixedPointObject {
    pub fn new(algebra: FrobeniusAlgebra, lambda_central: Vec<Rat>) -> Result<Self> {
        if lambda_central.len() != algebra.blocks() {
            return Err(Error::ShapeMismatch(format!(
                "{} central scalars for {} blocks",
                lambda_central.len(),
                algebra.blocks()
            )));
        }
        if lambda_central.iter().any(Zero::is_zero) {
            return Err(Error::ShapeMismatch(
                "central unit must be invertible".into(),
            ));
        }
        Ok(Self {
            algebra,
            lambda_central,
        })
    }

    /// `λ` as an automorphism of the identity context: `m ↦ a·m` on `M = A`,
    /// `n ↦ a⁻¹·n` on `N = A`.
    pub fn lambda_morphism(&self) -> MoritaMorphism {
        MoritaMorphism {
            f_scalars: self.lambda_central.clone(),
            g_scalars: self.lambda_central.iter().map(Rat::recip).collect(),
        }
    }
}

/// Unpacked fixed-point data `(c, Θ, λ̃, Π, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullFixedPointData {
    pub object: FrobeniusAlgebra,
    pub theta: MoritaContext,
    /// `M: Θ → id_c`
    pub big_m: MoritaMorphism,
    /// `λ̃: Θ → Θ`
    pub lambda_tilde: MoritaMorphism,
    /// `Π: Θ ∘ Θ → Θ`
    pub pi: MoritaMorphism,
}

impl FullFixedPointData {
    fn identity_context(&self) -> MoritaContext {
        MoritaContext::identity(self.object.clone())
    }

    fn theta_perm(&self) -> &Permutation {
        self.theta.perm()
    }

    /// `λ := M ∘ λ̃ ∘ M⁻¹`
    pub fn lambda(&self) -> MoritaMorphism {
        self.big_m
            .inverse()
            .vertical(&self.lambda_tilde)
            .vertical(&self.big_m)
    }

    /// The forgetful functor on objects.
    pub fn forget(&self) -> Result<FixedPointObject> {
        FixedPointObject::new(self.object.clone(), self.lambda().f_scalars)
    }

    /// `Θ ∘ Θ → Θ ∘ id_c ≅ Θ` via `id_Θ * M`.
    pub fn pi_from_right(&self) -> MoritaMorphism {
        let r = self.object.blocks();
        MoritaMorphism::horizontal(&MoritaMorphism::identity(r), &self.big_m, self.theta_perm())
    }

    /// `Θ ∘ Θ → id_c ∘ Θ ≅ Θ` via `M * id_Θ`.
    pub fn pi_from_left(&self) -> MoritaMorphism {
        let r = self.object.blocks();
        MoritaMorphism::horizontal(&self.big_m, &MoritaMorphism::identity(r), self.theta_perm())
    }
}

/// Build full data from `(c, λ)` with `Θ = id_c`, `M = id_Θ` and `Π = id_Θ * M`.
pub fn expand(p: &FixedPointObject) -> FullFixedPointData {
    let r = p.algebra.blocks();
    let theta = MoritaContext::identity(p.algebra.clone());
    let big_m = MoritaMorphism::identity(r);
    let pi = MoritaMorphism::horizontal(&MoritaMorphism::identity(r), &big_m, theta.perm());
    let lambda_tilde = big_m
        .vertical(&p.lambda_morphism())
        .vertical(&big_m.inverse());
    FullFixedPointData {
        object: p.algebra.clone(),
        theta,
        big_m,
        lambda_tilde,
        pi,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// `Θ` is a valid self-context of `c`.
    Theta,
    /// `M: Θ → id_c` is a morphism of Morita contexts.
    BigM,
    /// `λ̃: Θ → Θ` is a morphism of Morita contexts.
    LambdaTilde,
    /// `Π: Θ∘Θ → Θ` is a morphism of Morita contexts.
    Pi,
    /// `Π ∘ (id_Θ * Π) = Π ∘ (Π * id_Θ)`
    Associativity,
    /// `Π = id_Θ * M`
    RightUnit,
    /// `Π = M * id_Θ`
    LeftUnit,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Theta => "Θ is a Morita context",
            Condition::BigM => "M: Θ → id is a context morphism",
            Condition::LambdaTilde => "λ̃: Θ → Θ is a context morphism",
            Condition::Pi => "Π: Θ∘Θ → Θ is a context morphism",
            Condition::Associativity => "Π ∘ (id_Θ * Π) = Π ∘ (Π * id_Θ)",
            Condition::RightUnit => "Π = id_Θ * M",
            Condition::LeftUnit => "Π = M * id_Θ",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherenceFailure {
    pub condition: Condition,
    pub block: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoherenceReport {
    pub failures: Vec<CoherenceFailure>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fails(&self, condition: Condition) -> bool {
        self.failures.iter().any(|f| f.condition == condition)
    }
}

fn compare_blocks(
    condition: Condition,
    lhs: &MoritaMorphism,
    rhs: &MoritaMorphism,
    out: &mut Vec<CoherenceFailure>,
) {
    for i in 0..lhs.blocks() {
        if lhs.f_scalars[i] != rhs.f_scalars[i] || lhs.g_scalars[i] != rhs.g_scalars[i] {
            out.push(CoherenceFailure {
                condition,
                block: Some(i),
                detail: format!(
                    "({}, {}) vs ({}, {})",
                    lhs.f_scalars[i], lhs.g_scalars[i], rhs.f_scalars[i], rhs.g_scalars[i]
                ),
            });
        }
    }
}

fn morphism_condition(
    condition: Condition,
    from: &MoritaContext,
    to: &MoritaContext,
    phi: &MoritaMorphism,
    out: &mut Vec<CoherenceFailure>,
) {
    let failure = match check_context_morphism(from, to, phi) {
        Ok(true) => return,
        Ok(false) => "a triangle does not commute".to_string(),
        Err(e) => e.to_string(),
    };
    out.push(CoherenceFailure {
        condition,
        block: None,
        detail: failure,
    });
}

/// Evaluates the three fixed-point equations blockwise, after checking that
/// every 2-morphism has the right source and target.
pub fn verify_coherence(d: &FullFixedPointData) -> CoherenceReport {
    let mut failures = Vec::new();
    let r = d.object.blocks();
    let shapes_ok = d.theta.blocks() == r
        && [&d.big_m, &d.lambda_tilde, &d.pi]
            .iter()
            .all(|m| m.blocks() == r)
        && d.theta.source().skeleton() == d.object.skeleton()
        && d.theta.target().skeleton() == d.object.skeleton();
    if !shapes_ok {
        failures.push(CoherenceFailure {
            condition: Condition::Theta,
            block: None,
            detail: format!("data does not have {r} blocks over the object"),
        });
        return CoherenceReport { failures };
    }
    let axioms = check_morita_axioms(&d.theta);
    if !axioms.passed() {
        failures.push(CoherenceFailure {
            condition: Condition::Theta,
            block: axioms.failing_blocks().first().copied(),
            detail: axioms.to_string(),
        });
    } else {
        let id = d.identity_context();
        morphism_condition(Condition::BigM, &d.theta, &id, &d.big_m, &mut failures);
        morphism_condition(
            Condition::LambdaTilde,
            &d.theta,
            &d.theta,
            &d.lambda_tilde,
            &mut failures,
        );
        let theta2 = skeletal::compose(&d.theta, &d.theta).expect("valid self-context");
        morphism_condition(Condition::Pi, &theta2, &d.theta, &d.pi, &mut failures);
    }

    let id_r = MoritaMorphism::identity(r);
    let theta2_perm = d.theta_perm().after(d.theta_perm());
    // Θ∘Θ∘Θ → Θ∘Θ, contracting the inner or the outer pair
    let id_star_pi = MoritaMorphism::horizontal(&id_r, &d.pi, &theta2_perm);
    let pi_star_id = MoritaMorphism::horizontal(&d.pi, &id_r, d.theta_perm());
    compare_blocks(
        Condition::Associativity,
        &id_star_pi.vertical(&d.pi),
        &pi_star_id.vertical(&d.pi),
        &mut failures,
    );
    compare_blocks(
        Condition::RightUnit,
        &d.pi,
        &d.pi_from_right(),
        &mut failures,
    );
    compare_blocks(Condition::LeftUnit, &d.pi, &d.pi_from_left(), &mut failures);
    CoherenceReport { failures }
}

fn check_between(
    f: &MoritaContext,
    src: &FullFixedPointData,
    dst: &FullFixedPointData,
) -> Result<()> {
    if f.source().skeleton() != src.object.skeleton()
        || f.target().skeleton() != dst.object.skeleton()
    {
        return Err(Error::SourceTargetMismatch(
            "context does not connect the underlying algebras".into(),
        ));
    }
    let report = check_morita_axioms(f);
    if !report.passed() {
        return Err(Error::InvalidContext(report.to_string()));
    }
    Ok(())
}

/// `m = (M'⁻¹ * id_f) ∘ (id_f * M)`: `f∘Θ → f∘id ≅ f ≅ id∘f → Θ'∘f`.
pub fn derive_m(
    src: &FullFixedPointData,
    dst: &FullFixedPointData,
    f: &MoritaContext,
) -> Result<MoritaMorphism> {
    check_between(f, src, dst)?;
    let r = f.blocks();
    let id_f = MoritaMorphism::identity(r);
    let first = MoritaMorphism::horizontal(&id_f, &src.big_m, src.theta_perm());
    let second = MoritaMorphism::horizontal(&dst.big_m.inverse(), &id_f, f.perm());
    Ok(first.vertical(&second))
}

/// A 1-morphism of fixed points: a context together with its 2-cell `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointMorphism {
    pub context: MoritaContext,
    pub derived_m: MoritaMorphism,
}

impl FixedPointMorphism {
    pub fn derive(
        src: &FullFixedPointData,
        dst: &FullFixedPointData,
        context: MoritaContext,
    ) -> Result<Self> {
        let derived_m = derive_m(src, dst, &context)?;
        Ok(Self { context, derived_m })
    }

    /// Pairs a context with an arbitrary 2-cell, bypassing derivation.
    pub fn with_m(context: MoritaContext, m: MoritaMorphism) -> Self {
        Self {
            context,
            derived_m: m,
        }
    }
}

/// `m ∘ (id_f * Π) = (Π' * id_f) ∘ (id_Θ' * m) ∘ (m * id_Θ)`, blockwise.
pub fn check_morphism_coherence(
    src: &FullFixedPointData,
    dst: &FullFixedPointData,
    fm: &FixedPointMorphism,
) -> Result<bool> {
    check_between(&fm.context, src, dst)?;
    let r = fm.context.blocks();
    let id = MoritaMorphism::identity(r);
    let m = &fm.derived_m;
    let sigma = fm.context.perm();
    let lhs = MoritaMorphism::horizontal(&id, &src.pi, &src.theta_perm().after(src.theta_perm()))
        .vertical(m);
    let m_star_id = MoritaMorphism::horizontal(m, &id, src.theta_perm());
    let id_star_m = MoritaMorphism::horizontal(&id, m, src.theta_perm());
    let pi_star_id = MoritaMorphism::horizontal(&dst.pi, &id, &dst.theta_perm().after(sigma));
    let rhs = m_star_id.vertical(&id_star_m).vertical(&pi_star_id);
    Ok(lhs == rhs)
}

/// Source blocks where `(λ̃' * id_f) ∘ m = m ∘ (id_f * λ̃)` fails.
pub fn modification_failures(
    src: &FullFixedPointData,
    dst: &FullFixedPointData,
    fm: &FixedPointMorphism,
) -> Result<Vec<usize>> {
    check_between(&fm.context, src, dst)?;
    let id = MoritaMorphism::identity(fm.context.blocks());
    let m = &fm.derived_m;
    let lhs = m.vertical(&MoritaMorphism::horizontal(
        &dst.lambda_tilde,
        &id,
        fm.context.perm(),
    ));
    let rhs = MoritaMorphism::horizontal(&id, &src.lambda_tilde, src.theta_perm()).vertical(m);
    Ok((0..lhs.blocks())
        .filter(|&i| lhs.f_scalars[i] != rhs.f_scalars[i] || lhs.g_scalars[i] != rhs.g_scalars[i])
        .collect())
}

pub fn check_modification(
    src: &FullFixedPointData,
    dst: &FullFixedPointData,
    fm: &FixedPointMorphism,
) -> Result<bool> {
    Ok(modification_failures(src, dst, fm)?.is_empty())
}

/// Blocks `i` where `λ_i ≠ λ'_σ(i)`, evaluated through the modification square.
pub fn fp_morphism_failures(
    p: &FixedPointObject,
    p2: &FixedPointObject,
    f: &MoritaContext,
) -> Result<Vec<usize>> {
    let (src, dst) = (expand(p), expand(p2));
    let fm = FixedPointMorphism::derive(&src, &dst, f.clone())?;
    modification_failures(&src, &dst, &fm)
}

/// Whether `f` underlies a 1-morphism `(c, λ) → (c', λ')`.
pub fn check_fp_morphism(
    p: &FixedPointObject,
    p2: &FixedPointObject,
    f: &MoritaContext,
) -> Result<bool> {
    Ok(fp_morphism_failures(p, p2, f)?.is_empty())
}

/// Evaluates the square `(id_Θ' * α) ∘ m = n ∘ (α * id_Θ)` for `α: f → g`.
pub fn check_2morphism_auto(
    f: &FixedPointMorphism,
    g: &FixedPointMorphism,
    alpha: &MoritaMorphism,
) -> Result<bool> {
    let r = f.context.blocks();
    let parallel = f.context.perm() == g.context.perm()
        && f.context.source().skeleton() == g.context.source().skeleton()
        && f.context.target().skeleton() == g.context.target().skeleton();
    if !parallel {
        return Err(Error::ShapeMismatch("1-morphisms are not parallel".into()));
    }
    if alpha.blocks() != r || f.derived_m.blocks() != r || g.derived_m.blocks() != r {
        return Err(Error::ShapeMismatch(format!("expected {r} blocks")));
    }
    if !check_context_morphism(&f.context, &g.context, alpha)? {
        return Err(Error::ShapeMismatch(
            "α is not a morphism of Morita contexts".into(),
        ));
    }
    let id = MoritaMorphism::identity(r);
    // Θ has the identity permutation whenever M: Θ → id exists
    let theta_perm = Permutation::identity(r);
    let top = f
        .derived_m
        .vertical(&MoritaMorphism::horizontal(&id, alpha, f.context.perm()));
    let bottom = MoritaMorphism::horizontal(alpha, &id, &theta_perm).vertical(&g.derived_m);
    Ok(top == bottom)
}

/// `(A, a) ↦ (A, λ_i · a_i)`: the central unit re-weights the reference form.
pub fn to_frobenius(p: &FixedPointObject) -> FrobeniusAlgebra {
    let lambdas = p
        .algebra
        .lambdas()
        .iter()
        .zip(&p.lambda_central)
        .map(|(l, a)| l * a)
        .collect();
    FrobeniusAlgebra::from_skeleton(p.algebra.skeleton().clone(), lambdas)
        .expect("products of nonzero scalars")
}

/// Inverse of [`to_frobenius`] relative to a reference form on the same skeleton.
pub fn from_frobenius(
    frob: &FrobeniusAlgebra,
    reference: &FrobeniusAlgebra,
) -> Result<FixedPointObject> {
    if frob.skeleton() != reference.skeleton() {
        return Err(Error::ShapeMismatch(
            "reference form lives on another skeleton".into(),
        ));
    }
    let ratio = frob
        .lambdas()
        .iter()
        .zip(reference.lambdas())
        .map(|(l, r)| l / r)
        .collect();
    FixedPointObject::new(reference.clone(), ratio)
}

/// Puts the translated Frobenius forms of `p` and `p2` on the endpoints of `f`.
pub fn transport_context(
    f: &MoritaContext,
    p: &FixedPointObject,
    p2: &FixedPointObject,
) -> Result<MoritaContext> {
    f.with_endpoints(to_frobenius(p), to_frobenius(p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use crate::skeletal::{check_compatible, CompatMode, SemisimpleSkeleton};

    fn trace(dims: &[usize]) -> FrobeniusAlgebra {
        FrobeniusAlgebra::trace_form(SemisimpleSkeleton::new(dims.to_vec()).unwrap())
    }

    fn object(dims: &[usize], a: &[Rat]) -> FixedPointObject {
        FixedPointObject::new(trace(dims), a.to_vec()).unwrap()
    }

    fn swap_context(src: &[usize], dst: &[usize]) -> MoritaContext {
        MoritaContext::with_scalars(
            trace(src),
            trace(dst),
            Permutation::new(vec![1, 0]).unwrap(),
            vec![int(3), rat(-1, 2)],
        )
        .unwrap()
    }

    #[test]
    fn expand_ground_field() {
        let d = expand(&object(&[1], &[int(1)]));
        assert_eq!(d.theta, MoritaContext::identity(trace(&[1])));
        for m in [&d.big_m, &d.lambda_tilde, &d.pi] {
            assert_eq!(m, &MoritaMorphism::identity(1));
        }
        assert!(verify_coherence(&d).passed());
    }

    #[test]
    fn expand_keeps_lambda() {
        let p = object(&[1, 1], &[int(2), int(3)]);
        let d = expand(&p);
        assert!(d.theta.perm().is_identity());
        assert_eq!(d.lambda_tilde.f_scalars, vec![int(2), int(3)]);
        assert!(verify_coherence(&d).passed());
        assert_eq!(d.forget().unwrap(), p);
    }

    #[test]
    fn perturbed_pi_breaks_unit_equations() {
        let mut d = expand(&object(&[1, 2], &[int(2), int(3)]));
        d.pi.f_scalars[1] *= int(2);
        let report = verify_coherence(&d);
        assert!(report.fails(Condition::RightUnit));
        assert!(report.fails(Condition::LeftUnit));
        assert!(report
            .failures
            .iter()
            .any(|f| f.condition == Condition::RightUnit && f.block == Some(1)));
    }

    #[test]
    fn nontrivial_theta_and_m() {
        // Θ with ε = η = θ, M with f·g = θ, Π determined by M
        let c = trace(&[1, 2]);
        let theta_scalars = vec![int(6), rat(-1, 2)];
        let theta = MoritaContext::with_scalars(
            c.clone(),
            c.clone(),
            Permutation::identity(2),
            theta_scalars.clone(),
        )
        .unwrap();
        let big_m = MoritaMorphism::new(vec![int(2), int(5)], vec![int(3), rat(-1, 10)]).unwrap();
        let mut d = FullFixedPointData {
            object: c,
            theta,
            big_m,
            lambda_tilde: MoritaMorphism::new(vec![int(7), int(1)], vec![rat(1, 7), int(1)])
                .unwrap(),
            pi: MoritaMorphism::identity(2),
        };
        d.pi = d.pi_from_right();
        assert!(verify_coherence(&d).passed(), "{:?}", verify_coherence(&d));
        assert_eq!(d.forget().unwrap().lambda_central, vec![int(7), int(1)]);

        d.big_m.g_scalars[0] = int(1);
        assert!(verify_coherence(&d).fails(Condition::BigM));
    }

    #[test]
    fn derive_m_examples() {
        let p = object(&[1, 2], &[int(2), int(3)]);
        let d = expand(&p);
        let id = MoritaContext::identity(p.algebra.clone());
        assert_eq!(derive_m(&d, &d, &id).unwrap(), MoritaMorphism::identity(2));

        let q = object(&[2, 1], &[int(3), int(2)]);
        let f = swap_context(&[1, 2], &[2, 1]);
        assert_eq!(
            derive_m(&d, &expand(&q), &f).unwrap(),
            MoritaMorphism::identity(2)
        );

        let mut dst = d.clone();
        dst.big_m = MoritaMorphism::new(vec![int(2), int(1)], vec![rat(1, 2), int(1)]).unwrap();
        dst.pi = dst.pi_from_right();
        let m = derive_m(&d, &dst, &id).unwrap();
        assert_eq!(m.f_scalars, vec![rat(1, 2), int(1)]);
        assert!(check_morphism_coherence(&d, &dst, &FixedPointMorphism::with_m(id, m)).unwrap());
    }

    #[test]
    fn derive_m_rejects_invalid_context() {
        let d = expand(&object(&[1], &[int(1)]));
        let bad = MoritaContext::new(
            trace(&[1]),
            trace(&[1]),
            Permutation::identity(1),
            vec![int(2)],
            vec![int(3)],
        )
        .unwrap();
        assert!(matches!(
            derive_m(&d, &d, &bad),
            Err(Error::InvalidContext(_))
        ));
    }

    #[test]
    fn fp_morphism_examples() {
        let p = object(&[1, 2], &[int(2), int(3)]);
        let id = MoritaContext::identity(p.algebra.clone());
        assert!(check_fp_morphism(&p, &p, &id).unwrap());

        let f = swap_context(&[1, 2], &[2, 1]);
        assert!(check_fp_morphism(&p, &object(&[2, 1], &[int(3), int(2)]), &f).unwrap());
        let q = object(&[2, 1], &[int(3), int(5)]);
        assert!(!check_fp_morphism(&p, &q, &f).unwrap());
        assert_eq!(fp_morphism_failures(&p, &q, &f).unwrap(), vec![0]);
    }

    #[test]
    fn two_morphism_square() {
        let p = object(&[1, 2], &[int(2), int(3)]);
        let q = object(&[2, 1], &[int(3), int(2)]);
        let (src, dst) = (expand(&p), expand(&q));
        let f = swap_context(&[1, 2], &[2, 1]);
        let fm = FixedPointMorphism::derive(&src, &dst, f.clone()).unwrap();
        assert!(check_2morphism_auto(&fm, &fm, &MoritaMorphism::identity(2)).unwrap());

        let alpha =
            MoritaMorphism::new(vec![int(4), int(-2)], vec![rat(1, 4), rat(-1, 2)]).unwrap();
        assert!(check_2morphism_auto(&fm, &fm, &alpha).unwrap());

        let planted = FixedPointMorphism::with_m(
            f,
            MoritaMorphism::new(vec![int(5), int(1)], vec![rat(1, 5), int(1)]).unwrap(),
        );
        assert!(!check_2morphism_auto(&fm, &planted, &alpha).unwrap());
    }

    #[test]
    fn frobenius_translation() {
        let p = object(&[1, 1], &[int(1), int(1)]);
        assert_eq!(to_frobenius(&p), trace(&[1, 1]));

        let reference = FrobeniusAlgebra::new(vec![1, 1], vec![rat(1, 2), rat(1, 2)]).unwrap();
        let p = FixedPointObject::new(reference.clone(), vec![int(2), int(4)]).unwrap();
        let frob = to_frobenius(&p);
        assert_eq!(frob.lambdas(), &[int(1), int(2)]);
        assert_eq!(from_frobenius(&frob, &reference).unwrap(), p);
    }

    #[test]
    fn predicate_correspondence_on_example() {
        let p = object(&[1, 2], &[int(2), int(3)]);
        let f = swap_context(&[1, 2], &[2, 1]);
        for a2 in [[int(3), int(2)], [int(3), int(5)]] {
            let q = object(&[2, 1], &a2);
            let transported = transport_context(&f, &p, &q).unwrap();
            assert_eq!(
                check_fp_morphism(&p, &q, &f).unwrap(),
                check_compatible(&transported, CompatMode::Scalars).unwrap()
            );
        }
    }
}

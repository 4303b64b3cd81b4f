//! Seeded generators for skeletal instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cycat::{CYCategory, CYObject};
use crate::exactlin::{int, rat, Rat};
use crate::fixedpoint::{FixedPointObject, FullFixedPointData};
use crate::skeletal::{
    FrobeniusAlgebra, MoritaContext, MoritaMorphism, Permutation, SemisimpleSkeleton,
};

pub const MAX_BLOCKS: usize = 4;
pub const MAX_BLOCK_DIM: usize = 3;

/// Uniform over `{±1, …, ±5, ±1/2, ±1/3}`.
pub fn scalar<R: Rng>(rng: &mut R) -> Rat {
    let magnitude = match rng.gen_range(0..7) {
        k @ 0..=4 => int(k + 1),
        5 => rat(1, 2),
        _ => rat(1, 3),
    };
    if rng.gen_bool(0.5) {
        -magnitude
    } else {
        magnitude
    }
}

pub fn scalars<R: Rng>(rng: &mut R, n: usize) -> Vec<Rat> {
    (0..n).map(|_| scalar(rng)).collect()
}

pub fn permutation<R: Rng>(rng: &mut R, r: usize) -> Permutation {
    let mut images: Vec<usize> = (0..r).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

pub fn skeleton<R: Rng>(rng: &mut R, r: usize) -> SemisimpleSkeleton {
    SemisimpleSkeleton::new((0..r).map(|_| rng.gen_range(1..=MAX_BLOCK_DIM)).collect())
        .expect("positive dims")
}

pub fn frobenius<R: Rng>(rng: &mut R, r: usize) -> FrobeniusAlgebra {
    FrobeniusAlgebra::from_skeleton(skeleton(rng, r), scalars(rng, r)).expect("nonzero scalars")
}

pub fn block_count<R: Rng>(rng: &mut R) -> usize {
    rng.gen_range(1..=MAX_BLOCKS)
}

/// A valid context between random Frobenius algebras. About half the time the
/// target form is transported along the permutation, so the context is
/// compatible; otherwise the target scalars are drawn independently.
pub fn context<R: Rng>(rng: &mut R) -> MoritaContext {
    let r = block_count(rng);
    let source = frobenius(rng, r);
    let perm = permutation(rng, r);
    let target_skeleton = if rng.gen_bool(0.75) {
        let mut dims = vec![0; r];
        for (i, &d) in source.skeleton().block_dims().iter().enumerate() {
            dims[perm.apply(i)] = d;
        }
        SemisimpleSkeleton::new(dims).expect("positive dims")
    } else {
        skeleton(rng, r)
    };
    let target_lambdas = if rng.gen_bool(0.5) {
        let mut l = vec![int(0); r];
        for (i, li) in source.lambdas().iter().enumerate() {
            l[perm.apply(i)] = li.clone();
        }
        l
    } else {
        scalars(rng, r)
    };
    let target =
        FrobeniusAlgebra::from_skeleton(target_skeleton, target_lambdas).expect("nonzero scalars");
    MoritaContext::with_scalars(source, target, perm, scalars(rng, r)).expect("shapes agree")
}

/// Same endpoints and permutation as `base`, fresh scalars.
pub fn rescaled<R: Rng>(rng: &mut R, base: &MoritaContext) -> MoritaContext {
    MoritaContext::with_scalars(
        base.source().clone(),
        base.target().clone(),
        base.perm().clone(),
        scalars(rng, base.blocks()),
    )
    .expect("shapes agree")
}

/// Replaces `η_i` by a different scalar on a nonempty random set of blocks,
/// returned in increasing order.
pub fn plant_eta_mismatch<R: Rng>(
    rng: &mut R,
    valid: &MoritaContext,
) -> (MoritaContext, Vec<usize>) {
    let r = valid.blocks();
    let mut planted: Vec<usize> = (0..r).filter(|_| rng.gen_bool(0.5)).collect();
    if planted.is_empty() {
        planted.push(rng.gen_range(0..r));
    }
    let mut eta = valid.eta().to_vec();
    for &i in &planted {
        let mut s = scalar(rng);
        while s == eta[i] {
            s = scalar(rng);
        }
        eta[i] = s;
    }
    let ctx = MoritaContext::new(
        valid.source().clone(),
        valid.target().clone(),
        valid.perm().clone(),
        valid.eps().to_vec(),
        eta,
    )
    .expect("nonzero scalars");
    (ctx, planted)
}

pub fn fixed_point_object<R: Rng>(rng: &mut R, r: usize) -> FixedPointObject {
    let algebra = FrobeniusAlgebra::trace_form(skeleton(rng, r));
    FixedPointObject::new(algebra, scalars(rng, r)).expect("nonzero scalars")
}

/// Fixed-point data on a random object with `Θ` a nontrivial self-context of
/// identity permutation, `M` any morphism `Θ → id`, `λ̃` any automorphism of
/// `Θ` and `Π = id_Θ * M`.
pub fn full_fixed_point<R: Rng>(rng: &mut R, object: FrobeniusAlgebra) -> FullFixedPointData {
    let r = object.blocks();
    let theta_scalars = scalars(rng, r);
    let theta = MoritaContext::with_scalars(
        object.clone(),
        object.clone(),
        Permutation::identity(r),
        theta_scalars.clone(),
    )
    .expect("shapes agree");
    let m_f = scalars(rng, r);
    let m_g = theta_scalars.iter().zip(&m_f).map(|(t, f)| t / f).collect();
    let big_m = MoritaMorphism::new(m_f, m_g).expect("nonzero");
    let l_f = scalars(rng, r);
    let l_g = l_f.iter().map(Rat::recip).collect();
    let lambda_tilde = MoritaMorphism::new(l_f, l_g).expect("nonzero");
    let mut data = FullFixedPointData {
        object,
        theta,
        big_m,
        lambda_tilde,
        pi: MoritaMorphism::identity(r),
    };
    data.pi = data.pi_from_right();
    data
}

/// A context `f'` parallel to `f` and a 2-morphism `α: f → f'`.
pub fn parallel_with_2morphism<R: Rng>(
    rng: &mut R,
    f: &MoritaContext,
) -> (MoritaContext, MoritaMorphism) {
    let g = rescaled(rng, f);
    let a_f = scalars(rng, f.blocks());
    let a_g = (0..f.blocks())
        .map(|i| &f.eta()[i] / (&g.eta()[i] * &a_f[i]))
        .collect();
    (g, MoritaMorphism::new(a_f, a_g).expect("nonzero"))
}

pub fn cy_category<R: Rng>(rng: &mut R, r: usize) -> CYCategory {
    CYCategory::new(scalars(rng, r)).expect("nonzero")
}

/// Traces with zeros planted on a nonempty random set of simples.
pub fn degenerate_cy_category<R: Rng>(rng: &mut R, r: usize) -> (CYCategory, Vec<usize>) {
    let mut traces = scalars(rng, r);
    let mut planted: Vec<usize> = (0..r).filter(|_| rng.gen_bool(0.4)).collect();
    if planted.is_empty() {
        planted.push(rng.gen_range(0..r));
    }
    for &i in &planted {
        traces[i] = int(0);
    }
    (CYCategory::new_unchecked(traces), planted)
}

pub fn cy_object<R: Rng>(rng: &mut R, r: usize) -> CYObject {
    CYObject::new((0..r).map(|_| rng.gen_range(0..=2)).collect())
}

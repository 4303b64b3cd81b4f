//! Central primitive idempotents of a split semisimple algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    add_vec, center_basis, check_semisimple, check_symmetric_frobenius, require_valid, scaled,
    LinearFunctional, StructureAlgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{self, int, Rat, RatMatrix};
use crate::skeletal::{FrobeniusAlgebra, SemisimpleSkeleton};

/// Bound on random draws, both for separating central elements and for
/// splitting certificates.
pub const MAX_SAMPLES: usize = 16;

const COEFF_BOUND: i64 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub skeleton: SemisimpleSkeleton,
    /// Central primitive idempotents, in the same order as the skeleton blocks.
    pub idempotents: Vec<Vec<Rat>>,
    /// Random central samples drawn before one separated all blocks.
    pub samples_used: usize,
}

/// Monic minimal polynomial of `x` inside the unital subalgebra with unit
/// `one`, coefficients from low to high degree.
pub fn minimal_polynomial(a: &StructureAlgebra, x: &[Rat], one: &[Rat]) -> Result<Vec<Rat>> {
    let n = a.dim();
    if x.len() != n || one.len() != n {
        return Err(Error::DimensionMismatch("element length".into()));
    }
    if exactlin::is_zero_vec(one) {
        return Err(Error::InvalidAlgebra("zero idempotent".into()));
    }
    let mut powers: Vec<Vec<Rat>> = vec![one.to_vec()];
    loop {
        let next = a.mul(x, powers.last().expect("nonempty"));
        let basis = RatMatrix::from_fn(n, powers.len(), |r, c| powers[c][r].clone());
        if let Some(c) = exactlin::solve(&basis, &RatMatrix::column(&next))? {
            let mut poly: Vec<Rat> = c.into_entries().into_iter().map(|v| -v).collect();
            poly.push(Rat::one());
            return Ok(poly);
        }
        if powers.len() > n {
            return Err(Error::InvalidAlgebra(
                "powers never became dependent".into(),
            ));
        }
        powers.push(next);
    }
}

/// All roots of `poly` (low-to-high coefficients) when it splits into
/// distinct rational linear factors; `None` otherwise.
///
/// The polynomial is rescaled to a monic integer polynomial whose roots are
/// integers. Each largest root is located by Newton's method from an upper
/// bound (monotone for real-rooted polynomials), rounded, confirmed by exact
/// evaluation and divided out exactly.
pub fn rational_roots(poly: &[Rat]) -> Option<Vec<Rat>> {
    let mut coeffs: Vec<Rat> = poly.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    let d = coeffs.len().checked_sub(1)?;
    if d == 0 {
        return Some(Vec::new());
    }
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let lead = ints[d].clone();
    // b(y) = lead^(d-1) p(y / lead), monic with integer coefficients
    let mut monic: Vec<BigInt> = (0..d)
        .map(|i| &ints[i] * num_traits::pow(lead.clone(), d - 1 - i))
        .collect();
    monic.push(BigInt::one());

    let mut roots: Vec<BigInt> = Vec::with_capacity(d);
    while monic.len() > 1 {
        let root = if monic[0].is_zero() {
            BigInt::zero()
        } else {
            largest_integer_root(&monic)?
        };
        monic = deflate(&monic, &root)?;
        roots.push(root);
    }
    roots.sort();
    if roots.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(
        roots
            .into_iter()
            .map(|y| Rat::new(y, lead.clone()))
            .collect(),
    )
}

fn eval_int(poly: &[BigInt], x: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Synthetic division by `(y - root)`; `None` if the remainder is nonzero.
fn deflate(poly: &[BigInt], root: &BigInt) -> Option<Vec<BigInt>> {
    let deg = poly.len() - 1;
    let mut out = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (0..=deg).rev() {
        let v = &poly[i] + &carry * root;
        if i == 0 {
            return v.is_zero().then_some(out);
        }
        out[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

fn largest_integer_root(monic: &[BigInt]) -> Option<BigInt> {
    let d = monic.len() - 1;
    let f: Vec<f64> = monic
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    if f.iter().any(|c| !c.is_finite()) {
        return None;
    }
    // Fujiwara bound on |root|
    let bound = (0..d)
        .map(|i| {
            let k = (d - i) as f64;
            let mut b = f[i].abs().powf(1.0 / k);
            if i == 0 {
                b *= 0.5f64.powf(1.0 / k);
            }
            b
        })
        .fold(0.0f64, f64::max)
        * 2.0
        + 1.0;
    let mut x = bound;
    for _ in 0..10_000 {
        let (mut p, mut dp) = (0.0f64, 0.0f64);
        for c in f.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        if dp == 0.0 || !p.is_finite() || !dp.is_finite() {
            break;
        }
        let step = p / dp;
        x -= step;
        if step.abs() < 1e-9 * (1.0 + x.abs()) {
            break;
        }
    }
    let guess = BigInt::from(x.round() as i128);
    [guess.clone(), &guess - 1, &guess + 1]
        .into_iter()
        .find(|cand| eval_int(monic, cand).is_zero())
}

fn poly_in(a: &StructureAlgebra, z: &[Rat], root: &Rat) -> Vec<Rat> {
    add_vec(z, &scaled(a.unit(), &-root.clone()))
}

/// Lagrange idempotents `Π_{l≠j} (z - r_l) / (r_j - r_l)`.
fn lagrange_idempotents(a: &StructureAlgebra, z: &[Rat], roots: &[Rat]) -> Vec<Vec<Rat>> {
    roots
        .iter()
        .enumerate()
        .map(|(j, rj)| {
            roots.iter().enumerate().filter(|&(l, _)| l != j).fold(
                a.unit().to_vec(),
                |acc, (_, rl)| {
                    let factor = scaled(&poly_in(a, z, rl), &(Rat::one() / (rj - rl)));
                    a.mul(&acc, &factor)
                },
            )
        })
        .collect()
}

fn random_combination(rng: &mut ChaCha8Rng, basis: &[Vec<Rat>], len: usize) -> Vec<Rat> {
    loop {
        let coeffs: Vec<i64> = basis
            .iter()
            .map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
            .collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        return basis
            .iter()
            .zip(coeffs)
            .fold(vec![Rat::zero(); len], |acc, (b, c)| {
                add_vec(&acc, &scaled(b, &int(c)))
            });
    }
}

fn central_idempotents(
    a: &StructureAlgebra,
    center: &[Vec<Rat>],
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<Vec<Rat>>, usize)> {
    let r = center.len();
    if r == 1 {
        return Ok((vec![a.unit().to_vec()], 0));
    }
    for attempt in 1..=MAX_SAMPLES {
        let z = random_combination(rng, center, a.dim());
        let mp = minimal_polynomial(a, &z, a.unit())?;
        if mp.len() - 1 < r {
            continue;
        }
        let roots = rational_roots(&mp).ok_or_else(|| {
            Error::NotSplit("a central element has irrational eigenvalues".into())
        })?;
        return Ok((lagrange_idempotents(a, &z, &roots), attempt));
    }
    Err(Error::DegenerateSample {
        attempts: MAX_SAMPLES,
    })
}

fn splits_with(a: &StructureAlgebra, x: &[Rat], block_unit: &[Rat], d: usize) -> Result<bool> {
    let mp = minimal_polynomial(a, x, block_unit)?;
    Ok(mp.len() - 1 == d && rational_roots(&mp).is_some())
}

/// A block `A e` of dimension `d²` is `M_d(Q)` exactly when it contains an
/// element with `d` distinct rational eigenvalues: the Lagrange idempotents
/// of such an element are `d` orthogonal idempotents, which a central simple
/// algebra `M_m(D)` with `m · deg D = d` only admits for `D = Q`.
fn certify_split(a: &StructureAlgebra, e: &[Rat], d: usize, rng: &mut ChaCha8Rng) -> Result<bool> {
    if d == 1 {
        return Ok(true);
    }
    let n = a.dim();
    let in_block: Vec<Vec<Rat>> = (0..n).map(|k| a.mul(e, &a.basis_vector(k))).collect();
    for x in &in_block {
        if splits_with(a, x, e, d)? {
            return Ok(true);
        }
    }
    for k in 0..n {
        for l in k + 1..n {
            let x = add_vec(&in_block[k], &scaled(&in_block[l], &int(2)));
            if splits_with(a, &x, e, d)? {
                return Ok(true);
            }
        }
    }
    for _ in 0..MAX_SAMPLES {
        let x = random_combination(rng, &in_block, n);
        if splits_with(a, &x, e, d)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Wedderburn decomposition of a split semisimple symmetric Frobenius algebra
/// into its skeletal form `([d_1..d_r], [λ_1..λ_r])` with `λ_i = λ(e_i) / d_i`.
///
/// Blocks are ordered by dimension, then by idempotent coordinates, so the
/// output does not depend on the seed.
pub fn decompose(
    a: &StructureAlgebra,
    form: &LinearFunctional,
    seed: u64,
) -> Result<(Decomposition, FrobeniusAlgebra)> {
    require_valid(a)?;
    if !check_semisimple(a)? {
        return Err(Error::NotSemisimple);
    }
    let frob = check_symmetric_frobenius(a, form)?;
    if !frob.passed() {
        return Err(Error::InvalidForm(format!(
            "{} symmetry failure(s), Gram rank {} of {}",
            frob.symmetry_failures.len(),
            frob.gram_rank,
            frob.dim
        )));
    }
    let center = center_basis(a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (idempotents, samples_used) = central_idempotents(a, &center, &mut rng)?;

    let mut blocks = Vec::with_capacity(idempotents.len());
    for (i, e) in idempotents.into_iter().enumerate() {
        let ideal_dim = exactlin::rank(&a.left_mult_matrix(&e));
        let d = exactlin::exact_sqrt(ideal_dim).ok_or_else(|| {
            Error::NotSplit(format!("block {i} has dimension {ideal_dim}, not a square"))
        })?;
        if !certify_split(a, &e, d, &mut rng)? {
            return Err(Error::NotSplit(format!(
                "block {i} of dimension {ideal_dim} is not certified as M_{d}(Q)"
            )));
        }
        let lambda = form.eval(&e) / int(d as i64);
        blocks.push((d, e, lambda));
    }
    let total: usize = blocks.iter().map(|(d, _, _)| d * d).sum();
    if total != a.dim() {
        return Err(Error::NotSplit(format!(
            "block dimensions sum to {total}, algebra has dimension {}",
            a.dim()
        )));
    }
    blocks.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));

    let dims: Vec<usize> = blocks.iter().map(|b| b.0).collect();
    let lambdas: Vec<Rat> = blocks.iter().map(|b| b.2.clone()).collect();
    let idempotents = blocks.into_iter().map(|b| b.1).collect();
    let skeleton = SemisimpleSkeleton::new(dims.clone())?;
    let frob = FrobeniusAlgebra::new(dims, lambdas)?;
    Ok((
        Decomposition {
            skeleton,
            idempotents,
            samples_used,
        },
        frob,
    ))
}

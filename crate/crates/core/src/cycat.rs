//! Skeletal Calabi-Yau categories and the Rep functor.
//!
//! A finite semisimple category is its list of simples `X_1..X_r`. An object
//! is a multiplicity vector and `Hom(c, d) = ⊕ M_{n_i × m_i}(ℚ)`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{self, Rat, RatMatrix};
use crate::skeletal::{check_morita_axioms, FrobeniusAlgebra, MoritaContext, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CYCategory {
    traces: Vec<Rat>,
}

impl CYCategory {
    pub fn new(traces: Vec<Rat>) -> Result<Self> {
        if let Some(i) = traces.iter().position(Zero::is_zero) {
            return Err(Error::ShapeMismatch(format!(
                "trace scalar t{} is zero",
                i + 1
            )));
        }
        Ok(Self { traces })
    }

    /// Admits zero scalars, for exercising the nondegeneracy check.
    pub fn new_unchecked(traces: Vec<Rat>) -> Self {
        Self { traces }
    }

    pub fn simples(&self) -> usize {
        self.traces.len()
    }

    pub fn traces(&self) -> &[Rat] {
        &self.traces
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CYObject {
    pub multiplicities: Vec<usize>,
}

impl CYObject {
    pub fn new(multiplicities: Vec<usize>) -> Self {
        Self { multiplicities }
    }

    pub fn simple(r: usize, i: usize) -> Self {
        let mut multiplicities = vec![0; r];
        multiplicities[i] = 1;
        Self { multiplicities }
    }

    pub fn direct_sum(&self, other: &CYObject) -> CYObject {
        CYObject::new(
            self.multiplicities
                .iter()
                .zip(&other.multiplicities)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// A morphism `c → d`, one `n_i × m_i` block per simple. Endomorphisms are the
/// square case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CYEndo {
    pub blocks: Vec<RatMatrix>,
}

pub type CYMorphism = CYEndo;

impl CYEndo {
    pub fn new(blocks: Vec<RatMatrix>) -> Self {
        Self { blocks }
    }

    pub fn identity(c: &CYObject) -> Self {
        Self::new(
            c.multiplicities
                .iter()
                .map(|&m| RatMatrix::identity(m))
                .collect(),
        )
    }

    pub fn zero(src: &CYObject, dst: &CYObject) -> Self {
        Self::new(
            src.multiplicities
                .iter()
                .zip(&dst.multiplicities)
                .map(|(&m, &n)| RatMatrix::zeros(n, m))
                .collect(),
        )
    }

    /// `self ∘ first`
    pub fn after(&self, first: &CYEndo) -> Result<CYEndo> {
        if self.blocks.len() != first.blocks.len() {
            return Err(Error::ShapeMismatch("different numbers of blocks".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&first.blocks)
            .map(|(g, f)| g.mul(f))
            .collect::<Result<_>>()
            .map_err(|e| Error::ShapeMismatch(e.to_string()))?;
        Ok(Self { blocks })
    }

    pub fn sub(&self, other: &CYEndo) -> Result<CYEndo> {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()
            .map_err(|e| Error::ShapeMismatch(e.to_string()))?;
        Ok(Self { blocks })
    }

    /// `f ⊕ g` on `c ⊕ d`, blockwise block-diagonal.
    pub fn direct_sum(&self, other: &CYEndo) -> CYEndo {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| {
                let (r, c) = (a.rows() + b.rows(), a.cols() + b.cols());
                RatMatrix::from_fn(r, c, |i, j| {
                    if i < a.rows() && j < a.cols() {
                        a[(i, j)].clone()
                    } else if i >= a.rows() && j >= a.cols() {
                        b[(i - a.rows(), j - a.cols())].clone()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        Self { blocks }
    }

    fn fits(&self, src: &CYObject, dst: &CYObject) -> bool {
        self.blocks.len() == src.multiplicities.len()
            && self.blocks.len() == dst.multiplicities.len()
            && self
                .blocks
                .iter()
                .zip(src.multiplicities.iter().zip(&dst.multiplicities))
                .all(|(b, (&m, &n))| b.rows() == n && b.cols() == m)
    }
}

fn require_endo(r: usize, c: &CYObject, f: &CYEndo) -> Result<()> {
    if c.multiplicities.len() != r {
        return Err(Error::ShapeMismatch(format!(
            "object has {} multiplicities, category has {r} simples",
            c.multiplicities.len()
        )));
    }
    if !f.fits(c, c) {
        return Err(Error::ShapeMismatch(
            "endomorphism blocks do not match the multiplicities".into(),
        ));
    }
    Ok(())
}

/// `tr_c(f) = Σ t_i tr(f_i)`
pub fn trace_of(cy: &CYCategory, c: &CYObject, f: &CYEndo) -> Result<Rat> {
    require_endo(cy.simples(), c, f)?;
    Ok(cy
        .traces
        .iter()
        .zip(&f.blocks)
        .map(|(t, b)| t * b.trace())
        .fold(Rat::zero(), |acc, x| acc + x))
}

/// Hattori-Stallings trace in block-trace coordinates.
pub fn hs_trace(blocks: usize, module: &CYObject, f: &CYEndo) -> Result<Vec<Rat>> {
    require_endo(blocks, module, f)?;
    Ok(f.blocks.iter().map(RatMatrix::trace).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CYFailure {
    Cyclicity {
        source: Vec<usize>,
        target: Vec<usize>,
    },
    Additivity {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// The pairing on `Hom(c, d) × Hom(d, c)` is degenerate.
    Degenerate {
        source: Vec<usize>,
        target: Vec<usize>,
        gram_rank: usize,
        expected: usize,
    },
    /// The pairing on `End(X_i)` is degenerate.
    DegenerateSimple {
        simple: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CYAxiomReport {
    pub failures: Vec<CYFailure>,
}

impl CYAxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn cyclic(&self) -> bool {
        !self
            .failures
            .iter()
            .any(|f| matches!(f, CYFailure::Cyclicity { .. }))
    }

    pub fn additive(&self) -> bool {
        !self
            .failures
            .iter()
            .any(|f| matches!(f, CYFailure::Additivity { .. }))
    }

    pub fn nondegenerate(&self) -> bool {
        !self.failures.iter().any(|f| {
            matches!(
                f,
                CYFailure::Degenerate { .. } | CYFailure::DegenerateSimple { .. }
            )
        })
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| {
        Rat::new(
            rng.gen_range(-5i64..=5).into(),
            rng.gen_range(1i64..=3).into(),
        )
    })
}

fn random_morphism(rng: &mut ChaCha8Rng, src: &CYObject, dst: &CYObject) -> CYEndo {
    CYEndo::new(
        src.multiplicities
            .iter()
            .zip(&dst.multiplicities)
            .map(|(&m, &n)| random_matrix(rng, n, m))
            .collect(),
    )
}

/// Matrix units of `Hom(c, d)`, flattened block by block.
fn hom_basis(src: &CYObject, dst: &CYObject) -> Vec<CYEndo> {
    let mut out = Vec::new();
    for (i, (&m, &n)) in src
        .multiplicities
        .iter()
        .zip(&dst.multiplicities)
        .enumerate()
    {
        for a in 0..n {
            for b in 0..m {
                let mut f = CYEndo::zero(src, dst);
                f.blocks[i][(a, b)] = Rat::from_integer(1.into());
                out.push(f);
            }
        }
    }
    out
}

/// Rank of the Gram matrix of `(f, g) ↦ tr_c(g ∘ f)` on `Hom(c, d) × Hom(d, c)`,
/// together with the size a nondegenerate pairing would have.
pub fn pairing_rank(cy: &CYCategory, c: &CYObject, d: &CYObject) -> Result<(usize, usize)> {
    let fs = hom_basis(c, d);
    let gs = hom_basis(d, c);
    let mut gram = RatMatrix::zeros(fs.len(), gs.len());
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in gs.iter().enumerate() {
            gram[(i, j)] = trace_of(cy, c, &g.after(f)?)?;
        }
    }
    Ok((exactlin::rank(&gram), fs.len()))
}

/// Cyclicity and additivity on random morphisms between consecutive sample
/// objects, and nondegeneracy by Gram rank.
pub fn check_cy_axioms(cy: &CYCategory, sample_objects: &[CYObject], seed: u64) -> CYAxiomReport {
    let r = cy.simples();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let objects: Vec<&CYObject> = sample_objects
        .iter()
        .filter(|o| o.multiplicities.len() == r)
        .collect();

    for (k, c) in objects.iter().enumerate() {
        for d in objects.iter().skip(k) {
            let f = random_morphism(&mut rng, c, d);
            let g = random_morphism(&mut rng, d, c);
            let lhs = trace_of(cy, c, &g.after(&f).expect("shapes"));
            let rhs = trace_of(cy, d, &f.after(&g).expect("shapes"));
            if lhs != rhs {
                failures.push(CYFailure::Cyclicity {
                    source: c.multiplicities.clone(),
                    target: d.multiplicities.clone(),
                });
            }

            let fc = random_morphism(&mut rng, c, c);
            let fd = random_morphism(&mut rng, d, d);
            let sum = trace_of(cy, &c.direct_sum(d), &fc.direct_sum(&fd));
            let parts = trace_of(cy, c, &fc).and_then(|a| Ok(a + trace_of(cy, d, &fd)?));
            if sum != parts {
                failures.push(CYFailure::Additivity {
                    left: c.multiplicities.clone(),
                    right: d.multiplicities.clone(),
                });
            }

            let (gram_rank, expected) = pairing_rank(cy, c, d).expect("shapes");
            if gram_rank != expected {
                failures.push(CYFailure::Degenerate {
                    source: c.multiplicities.clone(),
                    target: d.multiplicities.clone(),
                    gram_rank,
                    expected,
                });
            }
        }
    }

    for i in 0..r {
        let x = CYObject::simple(r, i);
        let (gram_rank, expected) = pairing_rank(cy, &x, &x).expect("shapes");
        if gram_rank != expected {
            failures.push(CYFailure::DegenerateSimple { simple: i });
        }
    }
    CYAxiomReport { failures }
}

/// A skeletal CY equivalence: a permutation of simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CYFunctorData {
    pub perm: Permutation,
}

/// `t_i(src) = t_{σ(i)}(dst)` for every simple.
pub fn check_cy_functor(src: &CYCategory, dst: &CYCategory, f: &CYFunctorData) -> Result<bool> {
    if src.simples() != dst.simples() {
        return Err(Error::SimpleCountMismatch(src.simples(), dst.simples()));
    }
    if f.perm.len() != src.simples() {
        return Err(Error::SimpleCountMismatch(f.perm.len(), src.simples()));
    }
    Ok((0..src.simples()).all(|i| src.traces[i] == dst.traces[f.perm.apply(i)]))
}

/// Modules over a Frobenius algebra with the trace `λ ∘ HS`.
pub fn rep_object(a: &FrobeniusAlgebra) -> CYCategory {
    let r = a.blocks();
    let traces = (0..r)
        .map(|i| {
            let chart = hs_trace(
                r,
                &CYObject::simple(r, i),
                &CYEndo::identity(&CYObject::simple(r, i)),
            )
            .expect("identity fits");
            a.form_on_chart(&chart)
        })
        .collect();
    CYCategory::new(traces).expect("Frobenius scalars are nonzero")
}

/// Tensoring with the bimodule of a context permutes simples along its permutation.
pub fn rep_morphism(m: &MoritaContext) -> Result<CYFunctorData> {
    let report = check_morita_axioms(m);
    if !report.passed() {
        return Err(Error::InvalidContext(report.to_string()));
    }
    Ok(CYFunctorData {
        perm: m.perm().clone(),
    })
}

/// `check_cy_functor` after transporting a context with Frobenius endpoints.
pub fn rep_verdict(m: &MoritaContext) -> Result<bool> {
    let (Some(src), Some(dst)) = (m.source().frobenius(), m.target().frobenius()) else {
        return Err(Error::MissingFrobeniusData(
            "context endpoints carry no forms".into(),
        ));
    };
    check_cy_functor(&rep_object(src), &rep_object(dst), &rep_morphism(m)?)
}

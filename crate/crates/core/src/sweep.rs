//! Seeded random sweeps over skeletal instances.
//!
//! Each check builds one instance from a seed and returns `Err` with a
//! description when the expected property fails. [`run`] maps a check over a
//! seed range, in parallel when the `parallel` feature is enabled.

use std::ops::Range;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cycat::{self, check_cy_axioms, check_cy_functor, rep_morphism, rep_object};
use crate::fixedpoint::{
    check_2morphism_auto, check_morphism_coherence, verify_coherence, Condition, FixedPointMorphism,
};
use crate::random;
use crate::skeletal::{
    check_compatible, check_morita_axioms, induced_f, CompatMode, MoritaContext,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Parallel,
    Sequential,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

/// Outcome of a sweep: how many seeds ran and which failed, with messages.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub instances: usize,
    pub failures: Vec<(u64, String)>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub type Check = fn(u64) -> Result<(), String>;

pub fn map_seeds<T, F>(seeds: Range<u64>, strategy: Strategy, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match strategy {
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            seeds.into_par_iter().map(f).collect()
        }
        _ => seeds.map(f).collect(),
    }
}

pub fn run(check: Check, seeds: Range<u64>, strategy: Strategy) -> SweepOutcome {
    let instances = seeds.end.saturating_sub(seeds.start) as usize;
    let failures = map_seeds(seeds.clone(), strategy, |s| check(s).err().map(|e| (s, e)))
        .into_iter()
        .flatten()
        .collect();
    SweepOutcome {
        instances,
        failures,
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fail(msg: impl Into<String>) -> Result<(), String> {
    Err(msg.into())
}

/// The three compatibility formulations agree on a random context.
pub fn modes_agree(seed: u64) -> Result<(), String> {
    let m = random::context(&mut rng(seed));
    let verdicts: Vec<bool> = CompatMode::ALL
        .iter()
        .map(|&mode| check_compatible(&m, mode).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if verdicts.iter().all(|&v| v == verdicts[0]) {
        Ok(())
    } else {
        fail(format!("modes 1/2/3 gave {verdicts:?}"))
    }
}

pub const RESCALINGS: usize = 4;

/// `induced_f` is unchanged under `RESCALINGS` fresh choices of scalars.
pub fn induced_f_scalar_free(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let base = random::context(&mut rng);
    let f = induced_f(&base).map_err(|e| e.to_string())?;
    for k in 0..RESCALINGS {
        let other = random::rescaled(&mut rng, &base);
        if induced_f(&other).map_err(|e| e.to_string())? != f {
            return fail(format!("rescaling {k} changed f"));
        }
    }
    Ok(())
}

/// The axiom report flags exactly the blocks where `η ≠ ε` was planted.
pub fn axioms_rigid(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let valid = random::context(&mut rng);
    if !check_morita_axioms(&valid).passed() {
        return fail("unplanted context fails");
    }
    let (bad, planted) = random::plant_eta_mismatch(&mut rng, &valid);
    let flagged = check_morita_axioms(&bad).failing_blocks();
    if flagged == planted {
        Ok(())
    } else {
        fail(format!("planted {planted:?}, flagged {flagged:?}"))
    }
}

/// Full data satisfying the unit equations also satisfies associativity.
pub fn coherence_automatic(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let r = random::block_count(&mut rng);
    let object = random::frobenius(&mut rng, r);
    let data = random::full_fixed_point(&mut rng, object);
    let report = verify_coherence(&data);
    if report.fails(Condition::RightUnit) || report.fails(Condition::LeftUnit) {
        return fail(format!(
            "generated data violates a unit equation: {report:?}"
        ));
    }
    if report.passed() {
        Ok(())
    } else {
        fail(format!("{report:?}"))
    }
}

/// Two random fixed points joined by a context, a parallel context and a
/// 2-morphism between them; the derived `m` satisfies its coherence equation
/// and the 2-morphism square commutes.
pub fn square_automatic(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let ctx = random::context(&mut rng);
    let (Some(a), Some(b)) = (ctx.source().frobenius(), ctx.target().frobenius()) else {
        return fail("generated context without forms");
    };
    let src = random::full_fixed_point(&mut rng, a.clone());
    let dst = random::full_fixed_point(&mut rng, b.clone());
    let (parallel, alpha) = random::parallel_with_2morphism(&mut rng, &ctx);
    let derive =
        |c: MoritaContext| FixedPointMorphism::derive(&src, &dst, c).map_err(|e| e.to_string());
    let f = derive(ctx)?;
    let g = derive(parallel)?;
    for fm in [&f, &g] {
        if !check_morphism_coherence(&src, &dst, fm).map_err(|e| e.to_string())? {
            return fail("derived m violates its coherence equation");
        }
    }
    if check_2morphism_auto(&f, &g, &alpha).map_err(|e| e.to_string())? {
        Ok(())
    } else {
        fail("2-morphism square does not commute")
    }
}

/// Compatibility agrees with the CY functor condition after Rep.
pub fn rep_agrees(seed: u64) -> Result<(), String> {
    let m = random::context(&mut rng(seed));
    let compatible = check_compatible(&m, CompatMode::Scalars).map_err(|e| e.to_string())?;
    let (Some(a), Some(b)) = (m.source().frobenius(), m.target().frobenius()) else {
        return fail("generated context without forms");
    };
    let functor = rep_morphism(&m).map_err(|e| e.to_string())?;
    let cy =
        check_cy_functor(&rep_object(a), &rep_object(b), &functor).map_err(|e| e.to_string())?;
    if compatible == cy {
        Ok(())
    } else {
        fail(format!("compatible = {compatible}, CY functor = {cy}"))
    }
}

pub const CY_SAMPLE_OBJECTS: usize = 3;

/// Random CY categories pass every axiom; zeros planted in the traces are
/// found by the Gram-rank check on exactly the planted simples.
pub fn cy_axioms_hold(seed: u64) -> Result<(), String> {
    let mut rng = rng(seed);
    let r = random::block_count(&mut rng);
    let objects: Vec<_> = (0..CY_SAMPLE_OBJECTS)
        .map(|_| random::cy_object(&mut rng, r))
        .collect();
    let cy = random::cy_category(&mut rng, r);
    let report = check_cy_axioms(&cy, &objects, seed);
    if !report.passed() {
        return fail(format!("nondegenerate category fails: {report:?}"));
    }
    let (degenerate, planted) = random::degenerate_cy_category(&mut rng, r);
    let report = check_cy_axioms(&degenerate, &objects, seed);
    if !report.cyclic() || !report.additive() {
        return fail("cyclicity or additivity fails with zero traces");
    }
    let flagged: Vec<usize> = report
        .failures
        .iter()
        .filter_map(|f| match f {
            cycat::CYFailure::DegenerateSimple { simple } => Some(*simple),
            _ => None,
        })
        .collect();
    if flagged == planted {
        Ok(())
    } else {
        fail(format!(
            "planted zeros at {planted:?}, degenerate simples {flagged:?}"
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let checks: [Check; 7] = [
            modes_agree,
            induced_f_scalar_free,
            axioms_rigid,
            coherence_automatic,
            square_automatic,
            rep_agrees,
            cy_axioms_hold,
        ];
        for check in checks {
            let a = run(check, 0..20, Strategy::Parallel);
            let b = run(check, 0..20, Strategy::Sequential);
            assert_eq!(a, b);
            assert!(a.passed(), "{:?}", a.failures);
        }
    }

    #[test]
    fn map_preserves_order() {
        let v = map_seeds(0..100, Strategy::Parallel, |s| s * 2);
        assert_eq!(v, (0..100).map(|s| s * 2).collect::<Vec<_>>());
    }
}

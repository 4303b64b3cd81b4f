//! End-to-end acceptance criteria. Prints one line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use frobwork::algebra::{center_basis, commutator_subspace, decompose};
use frobwork::exactlin::{int, rat, Rat};
use frobwork::io::load_algebra;
use frobwork::random;
use frobwork::skeletal::{check_compatible, CompatMode};
use frobwork::sweep::{self, Strategy, SweepOutcome};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

type Verdict = Result<String, String>;
type Character = (usize, Box<dyn Fn(&Vec<usize>) -> i64>);
type Criterion = (&'static str, fn() -> Verdict);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n)
                    .filter(|x| !p.contains(x))
                    .map(|x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// Central idempotents of `Q[S_3]` from its character table:
/// `e_χ = χ(1)/6 · Σ_g χ(g⁻¹) g`, with the labelling of the fixture.
fn s3_character_idempotents(table: &[Vec<usize>]) -> Result<Vec<(usize, Vec<Rat>)>, String> {
    let perms = permutations(3);
    for (i, s) in perms.iter().enumerate() {
        for (j, t) in perms.iter().enumerate() {
            let st: Vec<usize> = (0..3).map(|x| s[t[x]]).collect();
            if perms[table[i][j]] != st {
                return Err(format!(
                    "fixture table disagrees with composition at ({i},{j})"
                ));
            }
        }
    }
    let fixed = |p: &Vec<usize>| (0..3).filter(|&x| p[x] == x).count() as i64;
    let sign = |p: &Vec<usize>| {
        let inversions = (0..3)
            .flat_map(|a| (a + 1..3).map(move |b| (a, b)))
            .filter(|&(a, b)| p[a] > p[b])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let characters: [Character; 3] = [
        (1, Box::new(|_| 1)),
        (1, Box::new(sign)),
        (2, Box::new(move |p| fixed(p) - 1)),
    ];
    // every character of S_3 is real, so χ(g⁻¹) = χ(g)
    Ok(characters
        .iter()
        .map(|(deg, chi)| {
            let e = perms.iter().map(|g| rat(*deg as i64 * chi(g), 6)).collect();
            (*deg, e)
        })
        .collect())
}

fn criterion_1() -> Verdict {
    let (a, form) = load_algebra(&fixture("group_s3")).map_err(|e| e.to_string())?;
    let table: serde_json::Value = serde_json::from_str(&fixture("group_s3")).unwrap();
    let table: Vec<Vec<usize>> = serde_json::from_value(table["table"].clone()).unwrap();
    let oracle = s3_character_idempotents(&table)?;

    let start = Instant::now();
    let (dec, frob) = decompose(&a, &form, 7).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let dims: Vec<usize> = frob.skeleton().block_dims().to_vec();
    if dims != [1, 1, 2] {
        return Err(format!("dims {dims:?}"));
    }
    if frob.lambdas() != [rat(1, 6), rat(1, 6), rat(1, 3)] {
        return Err(format!("lambdas {:?}", frob.lambdas()));
    }
    let found: BTreeSet<(usize, Vec<Rat>)> =
        dims.iter().copied().zip(dec.idempotents.clone()).collect();
    let expected: BTreeSet<(usize, Vec<Rat>)> = oracle.iter().cloned().collect();
    if found != expected {
        return Err("idempotents differ from the character-table oracle".into());
    }
    for (deg, e) in &oracle {
        let lambda = form.eval(e) / int(*deg as i64);
        let i = dec
            .idempotents
            .iter()
            .position(|x| x == e)
            .expect("matched above");
        if frob.lambdas()[i] != lambda {
            return Err(format!("λ on block {i} is not λ(e)/d"));
        }
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("dims [1,1,2], λ = (1/6, 1/6, 1/3), {elapsed:.2?}"))
}

fn sweep_verdict(outcome: SweepOutcome, what: &str) -> Verdict {
    match outcome.failures.first() {
        None => Ok(format!("{} {what}", outcome.instances)),
        Some((seed, msg)) => Err(format!(
            "{} of {} failed, first at seed {seed}: {msg}",
            outcome.failures.len(),
            outcome.instances
        )),
    }
}

/// Fraction of generated contexts that are compatible, so an all-true or
/// all-false generator cannot pass vacuously.
fn compatible_share(seeds: std::ops::Range<u64>) -> (usize, usize) {
    let total = seeds.clone().count();
    let compatible = seeds
        .filter(|&s| {
            let m = random::context(&mut ChaCha8Rng::seed_from_u64(s));
            check_compatible(&m, CompatMode::Scalars).unwrap()
        })
        .count();
    (compatible, total)
}

fn balanced(seeds: std::ops::Range<u64>) -> Result<String, String> {
    let (c, n) = compatible_share(seeds);
    if c * 5 < n || (n - c) * 5 < n {
        return Err(format!("only {c} of {n} contexts compatible"));
    }
    Ok(format!("{c} compatible / {} not", n - c))
}

fn criterion_2() -> Verdict {
    let seeds = 0..256;
    let start = Instant::now();
    let outcome = sweep::run(sweep::modes_agree, seeds.clone(), Strategy::default());
    let elapsed = start.elapsed();
    let summary = sweep_verdict(outcome, "contexts, modes 1/2/3 agree")?;
    let mix = balanced(seeds)?;
    if elapsed >= Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{summary} ({mix}), {elapsed:.2?}"))
}

fn criterion_3() -> Verdict {
    let outcome = sweep::run(sweep::induced_f_scalar_free, 0..100, Strategy::default());
    let contexts = outcome.instances * (1 + sweep::RESCALINGS);
    sweep_verdict(outcome, "families")
        .map(|s| format!("{s}, {contexts} contexts sharing σ, f identical within each"))
}

fn criterion_4() -> Verdict {
    sweep_verdict(
        sweep::run(sweep::axioms_rigid, 0..200, Strategy::default()),
        "contexts, failures exactly on the planted blocks",
    )
}

fn criterion_5() -> Verdict {
    let a = sweep_verdict(
        sweep::run(sweep::coherence_automatic, 0..128, Strategy::default()),
        "fixed points, associativity holds",
    )?;
    let b = sweep_verdict(
        sweep::run(sweep::square_automatic, 0..128, Strategy::default()),
        "parallel fixed-point morphisms, square commutes",
    )?;
    Ok(format!("{a}; {b}"))
}

fn criterion_6() -> Verdict {
    let seeds = 1000..1256;
    let summary = sweep_verdict(
        sweep::run(sweep::rep_agrees, seeds.clone(), Strategy::default()),
        "contexts, compatibility = CY functor",
    )?;
    Ok(format!("{summary} ({})", balanced(seeds)?))
}

/// Number of conjugacy classes, read off the multiplication table.
fn conjugacy_classes(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let inv = |g: usize| (0..n).find(|&h| table[g][h] == 0).unwrap();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for g in 0..n {
        if !seen[g] {
            classes += 1;
            for h in 0..n {
                seen[table[table[h][g]][inv(h)]] = true;
            }
        }
    }
    classes
}

fn criterion_7() -> Verdict {
    let mut lines = Vec::new();
    let cases: [(&str, Option<usize>, usize); 3] = [
        ("group_s3", None, 3),
        ("group_z2", None, 2),
        ("m2_trace", Some(1), 1),
    ];
    for (name, known, stated) in cases {
        let text = fixture(name);
        let oracle = match known {
            Some(k) => k,
            None => {
                let v: serde_json::Value = serde_json::from_str(&text).unwrap();
                conjugacy_classes(
                    &serde_json::from_value::<Vec<Vec<usize>>>(v["table"].clone()).unwrap(),
                )
            }
        };
        if oracle != stated {
            return Err(format!("{name}: oracle gives {oracle}, expected {stated}"));
        }
        let (a, form) = load_algebra(&text).map_err(|e| e.to_string())?;
        let (_, frob) = decompose(&a, &form, 0).map_err(|e| e.to_string())?;
        let r = frob.blocks();
        let center = center_basis(&a).map_err(|e| e.to_string())?.len();
        let quotient = a.dim() - commutator_subspace(&a).map_err(|e| e.to_string())?.len();
        if (r, center, quotient) != (oracle, oracle, oracle) {
            return Err(format!(
                "{name}: r = {r}, dim Z = {center}, dim A/[A,A] = {quotient}"
            ));
        }
        lines.push(format!("{name} {r}"));
    }
    Ok(format!("r = dim Z = dim A/[A,A]: {}", lines.join(", ")))
}

fn criterion_8() -> Verdict {
    sweep_verdict(
        sweep::run(sweep::cy_axioms_hold, 0..100, Strategy::default()),
        "categories, axioms hold and planted zeros are exactly the degenerate simples",
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Q[S3] decomposition", criterion_1),
        ("compatibility modes agree", criterion_2),
        ("induced f is scalar-free", criterion_3),
        ("Morita axiom rigidity", criterion_4),
        ("coherence automation", criterion_5),
        ("Rep preserves the predicate", criterion_6),
        ("structural counts", criterion_7),
        ("CY axiom suite", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

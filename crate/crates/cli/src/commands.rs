use std::fs;
use std::path::{Path, PathBuf};

use frobwork::algebra::{
    check_axioms, check_semisimple, check_symmetric_frobenius, decompose as decompose_algebra,
    AxiomFailure,
};
use frobwork::cycat::{check_cy_functor, rep_morphism, rep_object};
use frobwork::exactlin::format_rat;
use frobwork::fixedpoint::{expand, fp_morphism_failures, verify_coherence, FullFixedPointData};
use frobwork::io::{
    from_json, load_algebra, ContextJson, CyCatJson, FixedPointJson, FullFixedPointJson,
    SkeletonJson,
};
use frobwork::skeletal::{check_compatible, check_morita_axioms, CompatMode, FrobeniusAlgebra};
use frobwork::Error;
use serde_json::{json, Value};

use crate::report::{Report, Status};

type Outcome = Result<(), Error>;

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_value(path: &Path) -> Result<(String, Value), Error> {
    let text = read(path)?;
    let value = from_json(&text)?;
    Ok((text, value))
}

fn hint(e: &Error) -> String {
    match e {
        Error::NotSemisimple => format!(
            "{e}; hint: the trace form of the regular representation is degenerate, \
             run check-frobenius for details"
        ),
        Error::NotSplit(_) => format!(
            "{e}; hint: only algebras that split over the rationals \
             (direct sums of rational matrix algebras) can be decomposed"
        ),
        Error::DegenerateSample { .. } => {
            format!("{e}; hint: retry with a different --seed")
        }
        _ => e.to_string(),
    }
}

fn finish(mut report: Report, location: &Path, outcome: Outcome) -> Report {
    if let Err(e) = outcome {
        report.error(location.display().to_string(), hint(&e));
    }
    report
}

pub fn check_frobenius(path: &Path) -> Report {
    let mut report = Report::new("check-frobenius");
    let outcome = (|| -> Outcome {
        let (a, form) = load_algebra(&read(path)?)?;
        let axioms = check_axioms(&a);
        for failure in &axioms.failures {
            let location = match failure {
                AxiomFailure::Associativity { i, j, k } => format!("associativity ({i},{j},{k})"),
                AxiomFailure::LeftUnit { i } => format!("left unit on e{i}"),
                AxiomFailure::RightUnit { i } => format!("right unit on e{i}"),
            };
            report.fail(
                location,
                "algebra axiom fails",
                serde_json::to_value(failure).unwrap(),
            );
        }
        if !axioms.passed() {
            return Ok(());
        }
        report.info("axioms", "associative and unital", Value::Null);

        let frob = check_symmetric_frobenius(&a, &form)?;
        for (i, j) in &frob.symmetry_failures {
            report.fail(
                format!("symmetry ({i},{j})"),
                format!("λ(e{i}e{j}) ≠ λ(e{j}e{i})"),
                Value::Null,
            );
        }
        let gram = json!({"rank": frob.gram_rank, "dim": frob.dim});
        if frob.nondegenerate() {
            report.info("pairing", "λ(ab) is nondegenerate", gram);
        } else {
            report.fail(
                "pairing",
                format!(
                    "λ(ab) is degenerate: Gram rank {} < {}",
                    frob.gram_rank, frob.dim
                ),
                gram,
            );
        }
        let semisimple = check_semisimple(&a)?;
        if semisimple {
            report.info(
                "semisimplicity",
                "trace form of the regular representation is nondegenerate",
                Value::Null,
            );
        } else {
            report.fail(
                "semisimplicity",
                "not semisimple: the trace form of the regular representation is degenerate",
                Value::Null,
            );
        }
        report.artifact(
            "summary",
            json!({"dim": a.dim(), "symmetric": frob.symmetric(), "nondegenerate": frob.nondegenerate(), "semisimple": semisimple}),
        );
        Ok(())
    })();
    finish(report, path, outcome)
}

fn skeleton_artifact(f: &FrobeniusAlgebra) -> SkeletonJson {
    SkeletonJson::from_frobenius(f)
}

pub fn decompose(path: &Path, seed: u64) -> Report {
    let mut report = Report::new("decompose");
    let outcome = (|| -> Outcome {
        let (a, form) = load_algebra(&read(path)?)?;
        let (dec, frob) = decompose_algebra(&a, &form, seed)?;
        report.info(
            "blocks",
            format!(
                "{} block(s) of dimensions {:?}",
                frob.blocks(),
                frob.skeleton().block_dims()
            ),
            json!({"seed": seed, "samples_used": dec.samples_used}),
        );
        report.artifact("skeleton", skeleton_artifact(&frob));
        let idempotents: Vec<Vec<String>> = dec
            .idempotents
            .iter()
            .map(|e| e.iter().map(format_rat).collect())
            .collect();
        report.artifact("idempotents", idempotents);
        Ok(())
    })();
    finish(report, path, outcome)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeSelection {
    One(CompatMode),
    All,
}

pub fn check_morita(path: &Path, modes: ModeSelection) -> Report {
    let mut report = Report::new("check-morita");
    let outcome = (|| -> Outcome {
        let m = from_json::<ContextJson>(&read(path)?)?.to_context()?;
        let axioms = check_morita_axioms(&m);
        for z in &axioms.failures {
            report.fail(
                format!("block {}", z.block + 1),
                format!("zig-zag fails: η{} ≠ ε{}", z.block + 1, z.block + 1),
                serde_json::to_value(z).unwrap(),
            );
        }
        if !axioms.passed() {
            return Ok(());
        }
        report.info(
            "axioms",
            "zig-zag identities hold on every block",
            Value::Null,
        );
        if m.source().frobenius().is_none() || m.target().frobenius().is_none() {
            report.info(
                "compatibility",
                "endpoints carry no Frobenius forms; skipped",
                Value::Null,
            );
            return Ok(());
        }
        let selected: Vec<CompatMode> = match modes {
            ModeSelection::One(mode) => vec![mode],
            ModeSelection::All => CompatMode::ALL.to_vec(),
        };
        let mut verdicts = Vec::new();
        for mode in selected {
            let v = check_compatible(&m, mode)?;
            verdicts.push((mode.index(), v));
            report.info(
                format!("mode {}", mode.index()),
                if v { "compatible" } else { "not compatible" },
                json!({"mode": mode.index(), "compatible": v}),
            );
        }
        let first = verdicts[0].1;
        if verdicts.iter().any(|&(_, v)| v != first) {
            report.fail(
                "internal consistency",
                "compatibility modes disagree",
                json!(verdicts
                    .iter()
                    .map(|&(k, v)| json!({"mode": k, "compatible": v}))
                    .collect::<Vec<_>>()),
            );
        } else if !first {
            report.fail(
                "compatibility",
                "context does not intertwine the Frobenius forms",
                Value::Null,
            );
        }
        Ok(())
    })();
    finish(report, path, outcome)
}

pub fn fixed_point_expand(path: &Path) -> Report {
    let mut report = Report::new("fixed-point expand");
    let outcome = (|| -> Outcome {
        let p = from_json::<FixedPointJson>(&read(path)?)?.to_object()?;
        report.artifact("full", FullFixedPointJson::from_data(&expand(&p)));
        Ok(())
    })();
    finish(report, path, outcome)
}

fn load_full(path: &Path) -> Result<FullFixedPointData, Error> {
    let (text, value) = read_value(path)?;
    if value.get("theta").is_some() {
        from_json::<FullFixedPointJson>(&text)?.to_data()
    } else {
        Ok(expand(&from_json::<FixedPointJson>(&text)?.to_object()?))
    }
}

pub fn fixed_point_verify(path: &Path) -> Report {
    let mut report = Report::new("fixed-point verify");
    let outcome = (|| -> Outcome {
        let data = load_full(path)?;
        let coherence = verify_coherence(&data);
        for f in &coherence.failures {
            let location = match f.block {
                Some(b) => format!("{} (block {})", f.condition, b + 1),
                None => f.condition.to_string(),
            };
            report.fail(location, f.detail.clone(), json!({"block": f.block}));
        }
        if coherence.passed() {
            report.artifact(
                "lambda_central",
                FixedPointJson::from_object(&data.forget()?),
            );
        }
        Ok(())
    })();
    finish(report, path, outcome)
}

pub fn fixed_point_morphism(source: &Path, target: &Path, context: &Path) -> Report {
    let mut report = Report::new("fixed-point morphism");
    let mut location = source;
    let outcome = (|| -> Outcome {
        let p = from_json::<FixedPointJson>(&read(source)?)?.to_object()?;
        location = target;
        let q = from_json::<FixedPointJson>(&read(target)?)?.to_object()?;
        location = context;
        let f = from_json::<ContextJson>(&read(context)?)?.to_context()?;
        let failures = fp_morphism_failures(&p, &q, &f)?;
        for &i in &failures {
            let j = f.perm().apply(i);
            report.fail(
                format!("block {}", i + 1),
                format!(
                    "λ{} = {} but λ'{} = {}",
                    i + 1,
                    p.lambda_central[i],
                    j + 1,
                    q.lambda_central[j]
                ),
                json!({"block": i, "target_block": j}),
            );
        }
        if failures.is_empty() {
            report.info("modification", "λ' ∘ f = f ∘ λ on every block", Value::Null);
        }
        Ok(())
    })();
    let location = location.to_path_buf();
    finish(report, &location, outcome)
}

pub fn rep(path: &Path, seed: u64) -> Report {
    let mut report = Report::new("rep");
    let outcome = (|| -> Outcome {
        let (text, value) = read_value(path)?;
        if value.get("source").is_some() {
            let m = from_json::<ContextJson>(&text)?.to_context()?;
            let (Some(a), Some(b)) = (m.source().frobenius(), m.target().frobenius()) else {
                return Err(Error::MissingFrobeniusData(
                    "both endpoints need lambdas for Rep".into(),
                ));
            };
            let functor = rep_morphism(&m)?;
            let (src, dst) = (rep_object(a), rep_object(b));
            let compatible = check_compatible(&m, CompatMode::Scalars)?;
            let cy = check_cy_functor(&src, &dst, &functor)?;
            let data = json!({"compatible": compatible, "cy_functor": cy});
            let message = format!("verdicts agree: {compatible}/{cy}");
            if compatible == cy {
                report.info("verdicts", message, data);
            } else {
                report.fail("verdicts", message.replace("agree", "disagree"), data);
            }
            report.artifact("source", CyCatJson::from_category(&src));
            report.artifact("target", CyCatJson::from_category(&dst));
            report.artifact("functor", json!({"perm": functor.perm.images()}));
        } else if value.get("dims").is_some() {
            let frob = from_json::<SkeletonJson>(&text)?.to_frobenius()?;
            report.artifact("category", CyCatJson::from_category(&rep_object(&frob)));
        } else if value.get("simples").is_some() {
            return Err(Error::Schema(
                "input is already a Calabi-Yau category".into(),
            ));
        } else {
            let (a, form) = load_algebra(&text)?;
            let (_, frob) = decompose_algebra(&a, &form, seed)?;
            report.info(
                "decomposition",
                format!("blocks {:?}", frob.skeleton().block_dims()),
                json!({"seed": seed}),
            );
            report.artifact("category", CyCatJson::from_category(&rep_object(&frob)));
        }
        Ok(())
    })();
    finish(report, path, outcome)
}

struct Case {
    args: &'static [&'static str],
    expected: Status,
}

const CASES: &[Case] = &[
    Case {
        args: &["check-frobenius", "m2_trace"],
        expected: Status::Pass,
    },
    Case {
        args: &["check-frobenius", "dual_numbers"],
        expected: Status::Fail,
    },
    Case {
        args: &["check-frobenius", "group_z2"],
        expected: Status::Pass,
    },
    Case {
        args: &["check-frobenius", "group_s3"],
        expected: Status::Pass,
    },
    Case {
        args: &["decompose", "m2_trace"],
        expected: Status::Pass,
    },
    Case {
        args: &["decompose", "group_z2"],
        expected: Status::Pass,
    },
    Case {
        args: &["decompose", "group_s3"],
        expected: Status::Pass,
    },
    Case {
        args: &["decompose", "dual_numbers"],
        expected: Status::Error,
    },
    Case {
        args: &["check-morita", "ctx_identity"],
        expected: Status::Pass,
    },
    Case {
        args: &["check-morita", "ctx_swap_compatible"],
        expected: Status::Pass,
    },
    Case {
        args: &["check-morita", "ctx_eta_mismatch"],
        expected: Status::Fail,
    },
    Case {
        args: &["check-morita", "ctx_incompatible"],
        expected: Status::Fail,
    },
    Case {
        args: &["fixed-point verify", "fp_basic"],
        expected: Status::Pass,
    },
    Case {
        args: &[
            "fixed-point morphism",
            "fp_basic",
            "fp_aligned",
            "ctx_swap_bare",
        ],
        expected: Status::Pass,
    },
    Case {
        args: &[
            "fixed-point morphism",
            "fp_basic",
            "fp_mismatched",
            "ctx_swap_bare",
        ],
        expected: Status::Fail,
    },
    Case {
        args: &["rep", "group_s3"],
        expected: Status::Pass,
    },
    Case {
        args: &["rep", "ctx_swap_compatible"],
        expected: Status::Pass,
    },
    Case {
        args: &["rep", "ctx_incompatible"],
        expected: Status::Pass,
    },
];

/// Runs every shipped fixture through its command and compares statuses.
pub fn self_test(dir: &Path) -> Report {
    let mut report = Report::new("self-test");
    for case in CASES {
        let file = |name: &str| -> PathBuf { dir.join(format!("{name}.json")) };
        let got = match case.args {
            ["check-frobenius", a] => check_frobenius(&file(a)),
            ["decompose", a] => decompose(&file(a), 0),
            ["check-morita", a] => check_morita(&file(a), ModeSelection::All),
            ["fixed-point verify", a] => fixed_point_verify(&file(a)),
            ["fixed-point morphism", a, b, c] => fixed_point_morphism(&file(a), &file(b), &file(c)),
            ["rep", a] => rep(&file(a), 0),
            _ => unreachable!("case table"),
        };
        let label = case.args.join(" ");
        let data = json!({"expected": case.expected, "got": got.status});
        if got.status == case.expected {
            report.info(label, "as expected", data);
        } else {
            report.fail(label, "unexpected status", data);
        }
    }
    report
}

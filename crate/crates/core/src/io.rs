//! JSON documents. Every rational is a `"p/q"` string.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{group_algebra, LinearFunctional, StructureAlgebra};
use crate::cycat::CYCategory;
use crate::error::{Error, Result};
use crate::exactlin::{format_rat, parse_rat, Rat};
use crate::fixedpoint::{FixedPointObject, FullFixedPointData};
use crate::skeletal::{
    Endpoint, FrobeniusAlgebra, MoritaContext, MoritaMorphism, Permutation, SemisimpleSkeleton,
};

fn parse_all(field: &str, values: &[String]) -> Result<Vec<Rat>> {
    values
        .iter()
        .enumerate()
        .map(|(i, s)| parse_rat(s).map_err(|e| Error::Schema(format!("{field}[{i}]: {e}"))))
        .collect()
}

fn format_all(values: &[Rat]) -> Vec<String> {
    values.iter().map(format_rat).collect()
}

/// Deserializes with line/column diagnostics on failure.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::Schema(format!("line {}, column {}: {e}", e.line(), e.column())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

/// `algebra.json`: structure constants `c[i][j][k]`, unit and form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub c: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub form: Vec<String>,
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<(StructureAlgebra, LinearFunctional)> {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, plane)| {
                plane
                    .iter()
                    .enumerate()
                    .map(|(j, row)| parse_all(&format!("c[{i}][{j}]"), row))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let unit = parse_all("unit", &self.unit)?;
        let form = parse_all("form", &self.form)?;
        if form.len() != self.dim {
            return Err(Error::Schema(format!(
                "form has {} entries, expected {}",
                form.len(),
                self.dim
            )));
        }
        let a =
            StructureAlgebra::new(self.dim, c, unit).map_err(|e| Error::Schema(e.to_string()))?;
        Ok((a, LinearFunctional::new(form)))
    }

    pub fn from_algebra(a: &StructureAlgebra, form: &LinearFunctional) -> Self {
        Self {
            dim: a.dim(),
            c: a.constants_nested()
                .iter()
                .map(|plane| plane.iter().map(|row| format_all(row)).collect())
                .collect(),
            unit: format_all(a.unit()),
            form: format_all(form.coefficients()),
        }
    }
}

/// `group.json`: a multiplication table by element index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
}

impl GroupJson {
    pub fn to_algebra(&self) -> Result<(StructureAlgebra, LinearFunctional)> {
        if self.table.len() != self.order {
            return Err(Error::Schema(format!(
                "table has {} rows, order is {}",
                self.table.len(),
                self.order
            )));
        }
        group_algebra(&self.table, self.unit)
    }
}

/// Either input format for a concrete algebra, told apart by the `table` key.
pub fn load_algebra(text: &str) -> Result<(StructureAlgebra, LinearFunctional)> {
    let value: serde_json::Value = from_json(text)?;
    if value.get("table").is_some() {
        from_json::<GroupJson>(text)?.to_algebra()
    } else {
        from_json::<AlgebraJson>(text)?.to_algebra()
    }
}

/// A skeletal endpoint; `lambdas` is absent for a bare semisimple algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkeletonJson {
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<String>>,
}

impl SkeletonJson {
    pub fn to_endpoint(&self) -> Result<Endpoint> {
        let skeleton =
            SemisimpleSkeleton::new(self.dims.clone()).map_err(|e| Error::Schema(e.to_string()))?;
        match &self.lambdas {
            None => Ok(Endpoint::Bare(skeleton)),
            Some(l) => Ok(Endpoint::Frobenius(
                FrobeniusAlgebra::from_skeleton(skeleton, parse_all("lambdas", l)?)
                    .map_err(|e| Error::Schema(e.to_string()))?,
            )),
        }
    }

    /// The Frobenius algebra, defaulting to the trace form.
    pub fn to_frobenius(&self) -> Result<FrobeniusAlgebra> {
        Ok(match self.to_endpoint()? {
            Endpoint::Bare(s) => FrobeniusAlgebra::trace_form(s),
            Endpoint::Frobenius(f) => f,
        })
    }

    pub fn from_endpoint(e: &Endpoint) -> Self {
        Self {
            dims: e.skeleton().block_dims().to_vec(),
            lambdas: e.frobenius().map(|f| format_all(f.lambdas())),
        }
    }

    pub fn from_frobenius(f: &FrobeniusAlgebra) -> Self {
        Self::from_endpoint(&Endpoint::Frobenius(f.clone()))
    }
}

/// `context.json`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextJson {
    pub source: SkeletonJson,
    pub target: SkeletonJson,
    pub perm: Vec<usize>,
    pub eps: Vec<String>,
    pub eta: Vec<String>,
}

impl ContextJson {
    pub fn to_context(&self) -> Result<MoritaContext> {
        let perm = Permutation::new(self.perm.clone()).map_err(|e| Error::Schema(e.to_string()))?;
        MoritaContext::new(
            self.source.to_endpoint()?,
            self.target.to_endpoint()?,
            perm,
            parse_all("eps", &self.eps)?,
            parse_all("eta", &self.eta)?,
        )
    }

    pub fn from_context(m: &MoritaContext) -> Self {
        Self {
            source: SkeletonJson::from_endpoint(m.source()),
            target: SkeletonJson::from_endpoint(m.target()),
            perm: m.perm().images().to_vec(),
            eps: format_all(m.eps()),
            eta: format_all(m.eta()),
        }
    }
}

/// `fixedpoint.json`: a pair `(c, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedPointJson {
    pub algebra: SkeletonJson,
    pub lambda_central: Vec<String>,
}

impl FixedPointJson {
    pub fn to_object(&self) -> Result<FixedPointObject> {
        FixedPointObject::new(
            self.algebra.to_frobenius()?,
            parse_all("lambda_central", &self.lambda_central)?,
        )
        .map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn from_object(p: &FixedPointObject) -> Self {
        Self {
            algebra: SkeletonJson::from_frobenius(&p.algebra),
            lambda_central: format_all(&p.lambda_central),
        }
    }
}

/// Per-block scalars of a 2-morphism on `M` and on `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub f: Vec<String>,
    pub g: Vec<String>,
}

impl MorphismJson {
    pub fn to_morphism(&self, field: &str) -> Result<MoritaMorphism> {
        MoritaMorphism::new(
            parse_all(&format!("{field}.f"), &self.f)?,
            parse_all(&format!("{field}.g"), &self.g)?,
        )
        .map_err(|e| Error::Schema(format!("{field}: {e}")))
    }

    pub fn from_morphism(m: &MoritaMorphism) -> Self {
        Self {
            f: format_all(&m.f_scalars),
            g: format_all(&m.g_scalars),
        }
    }
}

/// Unpacked fixed-point data `(c, Θ, λ̃, Π, M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FullFixedPointJson {
    pub object: SkeletonJson,
    pub theta: ContextJson,
    pub big_m: MorphismJson,
    pub lambda_tilde: MorphismJson,
    pub pi: MorphismJson,
}

impl FullFixedPointJson {
    pub fn to_data(&self) -> Result<FullFixedPointData> {
        Ok(FullFixedPointData {
            object: self.object.to_frobenius()?,
            theta: self.theta.to_context()?,
            big_m: self.big_m.to_morphism("big_m")?,
            lambda_tilde: self.lambda_tilde.to_morphism("lambda_tilde")?,
            pi: self.pi.to_morphism("pi")?,
        })
    }

    pub fn from_data(d: &FullFixedPointData) -> Self {
        Self {
            object: SkeletonJson::from_frobenius(&d.object),
            theta: ContextJson::from_context(&d.theta),
            big_m: MorphismJson::from_morphism(&d.big_m),
            lambda_tilde: MorphismJson::from_morphism(&d.lambda_tilde),
            pi: MorphismJson::from_morphism(&d.pi),
        }
    }
}

/// `cycat.json`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyCatJson {
    pub simples: usize,
    pub traces: Vec<String>,
}

impl CyCatJson {
    pub fn to_category(&self) -> Result<CYCategory> {
        let traces = parse_all("traces", &self.traces)?;
        if traces.len() != self.simples {
            return Err(Error::Schema(format!(
                "{} traces for {} simples",
                traces.len(),
                self.simples
            )));
        }
        CYCategory::new(traces).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn from_category(cy: &CYCategory) -> Self {
        Self {
            simples: cy.simples(),
            traces: format_all(cy.traces()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};

    #[test]
    fn group_and_structure_formats() {
        let g = r#"{"order": 2, "table": [[0,1],[1,0]], "unit": 0}"#;
        let (a, form) = load_algebra(g).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(form.coefficients(), &[int(1), int(0)]);

        let text = to_json(&AlgebraJson::from_algebra(&a, &form));
        let (b, form2) = load_algebra(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(form, form2);
    }

    #[test]
    fn schema_errors_carry_position() {
        let err = load_algebra("{\"dim\": 1,\n \"c\": oops}").unwrap_err();
        assert!(matches!(&err, Error::Schema(m) if m.contains("line 2")));

        let err =
            load_algebra(r#"{"dim":1,"c":[[["1.5"]]],"unit":["1"],"form":["1"]}"#).unwrap_err();
        assert!(matches!(&err, Error::Schema(m) if m.contains("c[0][0][0]")));
    }

    #[test]
    fn context_round_trip() {
        let text = r#"{
            "source": {"dims": [1, 2], "lambdas": ["2", "3"]},
            "target": {"dims": [2, 1], "lambdas": ["3", "2"]},
            "perm": [1, 0], "eps": ["1/2", "-3"], "eta": ["1/2", "-3"]
        }"#;
        let m = from_json::<ContextJson>(text)
            .unwrap()
            .to_context()
            .unwrap();
        assert_eq!(m.eps(), &[rat(1, 2), int(-3)]);
        let again = ContextJson::from_context(&m);
        assert_eq!(again.to_context().unwrap(), m);
        assert_eq!(again.eps, vec!["1/2".to_string(), "-3".to_string()]);
    }

    #[test]
    fn bare_endpoint_and_trace_default() {
        let s: SkeletonJson = from_json(r#"{"dims": [2]}"#).unwrap();
        assert!(matches!(s.to_endpoint().unwrap(), Endpoint::Bare(_)));
        assert_eq!(s.to_frobenius().unwrap().lambdas(), &[int(1)]);
    }

    #[test]
    fn full_data_round_trip() {
        let p: FixedPointJson =
            from_json(r#"{"algebra": {"dims": [1, 1]}, "lambda_central": ["2", "3"]}"#).unwrap();
        let d = crate::fixedpoint::expand(&p.to_object().unwrap());
        let text = to_json(&FullFixedPointJson::from_data(&d));
        assert_eq!(
            from_json::<FullFixedPointJson>(&text)
                .unwrap()
                .to_data()
                .unwrap(),
            d
        );
    }

    #[test]
    fn cycat_shape() {
        let c: CyCatJson = from_json(r#"{"simples": 2, "traces": ["1", "1/3"]}"#).unwrap();
        assert_eq!(c.to_category().unwrap().traces(), &[int(1), rat(1, 3)]);
        let bad: CyCatJson = from_json(r#"{"simples": 3, "traces": ["1"]}"#).unwrap();
        assert!(bad.to_category().is_err());
    }
}

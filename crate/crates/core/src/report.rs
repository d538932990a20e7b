//! Versioned JSON form of a [`SpectrumReport`].
//!
//! Polynomials are written as canonical render strings and rationals as
//! `p` or `p/q`, so emitting, parsing and re-emitting a document reproduces
//! it byte for byte.

use serde::{Deserialize, Serialize};

use crate::groebner::Eliminant;
use crate::parser::{render, render_rational};
use crate::poly::Point;
use crate::spectrum::{PencilPrimes, PointClass, PointKind, SpectrumReport};

pub const SCHEMA: &str = "pba/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub schema: String,
    pub s: String,
    pub t: String,
    /// `({y,z}, {z,x}, {x,y})`.
    pub triple: [String; 3],
    pub generic_member: String,
    pub max_deg: u32,
    pub zero_ideal: ZeroIdealDoc,
    pub residually_null: ResiduallyNullDoc,
    pub height_one: Vec<PencilDoc>,
    pub flags: FlagsDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroIdealDoc {
    pub primitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResiduallyNullDoc {
    pub order: String,
    pub basis: Vec<String>,
    pub dimension: i32,
    pub maximal_points: Vec<PointDoc>,
    pub points_complete: bool,
    pub eliminants: Vec<EliminantDoc>,
    /// Whether `V(I)` has positive dimension, so that non-maximal
    /// residually null primes exist; none of them is primitive.
    pub non_maximal_primes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub point: [String; 3],
    /// `common_zero`, `singular_point` or `not_poisson`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pencil: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EliminantDoc {
    pub fixed: Vec<[String; 2]>,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PencilDoc {
    pub pencil: String,
    pub member: String,
    pub complete: bool,
    pub primes: Vec<PrimeDoc>,
    pub unresolved: Vec<UnresolvedDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeDoc {
    pub generator: String,
    pub multiplicity: u32,
    pub primitive: bool,
    pub absolutely_irreducible_certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnresolvedDoc {
    pub poly: String,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsDoc {
    pub factorization_complete: bool,
    pub finitely_many_poisson_maximal: bool,
}

pub fn point_strings(p: &Point) -> [String; 3] {
    p.each_ref().map(render_rational)
}

fn point_doc(c: &PointClass) -> PointDoc {
    let (kind, pencil) = match &c.kind {
        PointKind::CommonZero => ("common_zero", None),
        PointKind::SingularPoint(param) => ("singular_point", Some(param.to_string())),
        PointKind::NotPoisson => ("not_poisson", None),
    };
    PointDoc { point: point_strings(&c.point), kind: kind.to_string(), pencil }
}

fn eliminant_doc(e: &Eliminant) -> EliminantDoc {
    EliminantDoc {
        fixed: e.fixed.iter().map(|(v, c)| [v.name().to_string(), render_rational(c)]).collect(),
        polynomial: render(&e.polynomial),
    }
}

fn pencil_doc(h: &PencilPrimes) -> PencilDoc {
    PencilDoc {
        pencil: h.parameter.to_string(),
        member: render(&h.member),
        complete: h.is_complete(),
        primes: h
            .primes
            .iter()
            .map(|p| PrimeDoc {
                generator: render(&p.generator),
                multiplicity: p.multiplicity,
                primitive: p.primitive,
                absolutely_irreducible_certified: p.absolutely_irreducible_certified,
            })
            .collect(),
        unresolved: h
            .unresolved
            .iter()
            .map(|(p, m)| UnresolvedDoc { poly: render(p), multiplicity: *m })
            .collect(),
    }
}

impl ReportDoc {
    pub fn from_report(r: &SpectrumReport) -> Self {
        let rn = &r.residually_null;
        ReportDoc {
            schema: SCHEMA.to_string(),
            s: render(&r.s),
            t: render(&r.t),
            triple: r.triple.vec.0.each_ref().map(render),
            generic_member: format!("lambda*({}) - mu*({})", render(&r.s), render(&r.t)),
            max_deg: r.max_deg,
            // s/t is a nonconstant Poisson-central fraction, so 0 is never primitive
            zero_ideal: ZeroIdealDoc { primitive: false },
            residually_null: ResiduallyNullDoc {
                order: "grlex".to_string(),
                basis: rn.ideal.basis().iter().map(render).collect(),
                dimension: rn.dimension,
                maximal_points: rn.points.iter().map(point_doc).collect(),
                points_complete: rn.points_complete,
                eliminants: rn.eliminants.iter().map(eliminant_doc).collect(),
                non_maximal_primes: rn.dimension > 0,
            },
            height_one: r.height_one.iter().map(pencil_doc).collect(),
            flags: FlagsDoc {
                factorization_complete: r.flags.factorization_complete,
                finitely_many_poisson_maximal: r.flags.finitely_many_poisson_maximal,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl SpectrumReport {
    pub fn to_json(&self) -> String {
        ReportDoc::from_report(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::spectrum::{spectrum_report, PencilParameter};

    #[test]
    fn json_round_trip_is_byte_identical() {
        let params: Vec<PencilParameter> = ["1:0", "1:4"].iter().map(|s| s.parse().unwrap()).collect();
        let r = spectrum_report(&parse("x*y*z - x^2 - y^2 - z^2 + 4").unwrap(), &parse("1").unwrap(), &params, 2)
            .unwrap();
        let text = r.to_json();
        let doc = ReportDoc::from_json(&text).unwrap();
        assert_eq!(doc.to_json(), text);
        assert_eq!(doc.schema, "pba/1");
        assert_eq!(doc.residually_null.maximal_points.len(), 5);
        let origin = doc.residually_null.maximal_points.iter().find(|p| p.point == ["0", "0", "0"]).unwrap();
        assert_eq!(origin.pencil.as_deref(), Some("1:4"));
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(ReportDoc::from_json(r#"{"schema": "pba/1", "bogus": 1}"#).is_err());
    }
}

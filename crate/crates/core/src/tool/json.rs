//! JSON form of a [`VarietyDescription`].
//!
//! Keys come out in a fixed order and every float is written with 17
//! significant digits, so `parse_json(&emit_json(v))` reproduces `v` exactly.

use std::io;

use serde::ser::Serialize;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::Complex;
use crate::modular::{IntersectionIndex, IrrComponent, KnotType};
use crate::variety::{
    CharPoint, ComponentEntry, Counts, Endpoint, IntersectionRecord, IrrLine, VarietyDescription,
};

type Pair = [f64; 2];
type Triple = [Pair; 3];

#[derive(Debug, Clone, PartialEq, serde::Serialize, Deserialize)]
pub struct VarietyDoc {
    pub m: u64,
    pub n: u64,
    pub components: Vec<ComponentDoc>,
    pub counts: CountsDoc,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ComponentDoc {
    Red,
    Irr {
        k: u64,
        kp: u64,
        lambda: Pair,
        mu: Pair,
        psi_base: Triple,
        psi_dir: Triple,
        intersections: Vec<IntersectionDoc>,
    },
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, Deserialize)]
pub struct IntersectionDoc {
    pub endpoint: EndpointDoc,
    pub l_raw: u64,
    pub l_folded: u64,
    pub s: f64,
    pub psi: Triple,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, Deserialize)]
pub enum EndpointDoc {
    #[serde(rename = "r0")]
    R0,
    #[serde(rename = "r1")]
    R1,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, Deserialize)]
pub struct CountsDoc {
    pub irr_lines: u64,
    pub intersection_points: u64,
}

fn pair(z: Complex) -> Pair {
    [z.re, z.im]
}

fn triple(p: &CharPoint) -> Triple {
    [pair(p.a), pair(p.b), pair(p.c)]
}

fn complex(p: Pair) -> Complex {
    Complex::new(p[0], p[1])
}

fn point(t: Triple) -> CharPoint {
    CharPoint::new(complex(t[0]), complex(t[1]), complex(t[2]))
}

impl From<&VarietyDescription> for VarietyDoc {
    fn from(v: &VarietyDescription) -> Self {
        let components = v
            .components
            .iter()
            .map(|c| match c {
                ComponentEntry::Red => ComponentDoc::Red,
                ComponentEntry::Irr(line) => ComponentDoc::Irr {
                    k: line.component.k(),
                    kp: line.component.kp(),
                    lambda: pair(line.lambda),
                    mu: pair(line.mu),
                    psi_base: triple(&line.psi_base),
                    psi_dir: triple(&line.psi_dir),
                    intersections: line
                        .intersections
                        .iter()
                        .map(|r| IntersectionDoc {
                            endpoint: match r.endpoint {
                                Endpoint::R0 => EndpointDoc::R0,
                                Endpoint::R1 => EndpointDoc::R1,
                            },
                            l_raw: r.index.raw(),
                            l_folded: r.index.folded(),
                            s: r.s,
                            psi: triple(&r.point),
                        })
                        .collect(),
                },
            })
            .collect();
        VarietyDoc {
            m: v.kt.m(),
            n: v.kt.n(),
            components,
            counts: CountsDoc {
                irr_lines: v.counts.irr_lines,
                intersection_points: v.counts.intersection_points,
            },
        }
    }
}

impl TryFrom<VarietyDoc> for VarietyDescription {
    type Error = Error;

    fn try_from(doc: VarietyDoc) -> Result<Self> {
        let kt = KnotType::new(doc.m as i64, doc.n as i64)?;
        let mut components = Vec::with_capacity(doc.components.len());
        for c in doc.components {
            let ComponentDoc::Irr {
                k,
                kp,
                lambda,
                mu,
                psi_base,
                psi_dir,
                intersections,
            } = c
            else {
                components.push(ComponentEntry::Red);
                continue;
            };
            let component = IrrComponent::new(kt, k as i64, kp as i64)?;
            let intersections = intersections
                .into_iter()
                .map(|r| IntersectionRecord {
                    component,
                    endpoint: match r.endpoint {
                        EndpointDoc::R0 => Endpoint::R0,
                        EndpointDoc::R1 => Endpoint::R1,
                    },
                    index: IntersectionIndex::new(kt, r.l_raw),
                    s: r.s,
                    point: point(r.psi),
                })
                .collect();
            components.push(ComponentEntry::Irr(IrrLine {
                component,
                lambda: complex(lambda),
                mu: complex(mu),
                psi_base: point(psi_base),
                psi_dir: point(psi_dir),
                intersections,
            }));
        }
        Ok(VarietyDescription {
            kt,
            components,
            counts: Counts {
                irr_lines: doc.counts.irr_lines,
                intersection_points: doc.counts.intersection_points,
            },
        })
    }
}

/// `x` with 17 significant digits: positional for moderate exponents,
/// scientific otherwise.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if (-5..=16).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, x)
    } else {
        sci
    }
}

struct Sig17;

impl serde_json::ser::Formatter for Sig17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format_f64(value).as_bytes())
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

pub fn emit_json(v: &VarietyDescription) -> String {
    to_json_string(&VarietyDoc::from(v)).expect("document types always serialize")
}

pub fn parse_json(text: &str) -> Result<VarietyDescription> {
    let doc: VarietyDoc = serde_json::from_str(text)?;
    doc.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::enumerate_variety;
    use proptest::prelude::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_f64(3f64.sqrt()), "1.7320508075688772");
        assert_eq!(format_f64(-3f64.sqrt()), "-1.7320508075688772");
        assert_eq!(format_f64(2.0), "2.0000000000000000");
        assert_eq!(format_f64(0.0), "0.0");
        assert_eq!(format_f64(-0.0), "0.0");
        assert_eq!(format_f64(1.5e-300), "1.5000000000000001e-300");
        assert_eq!(format_f64(6.123233995736766e-17), "6.1232339957367660e-17");
    }

    #[test]
    fn trefoil_document() {
        let v = enumerate_variety(KnotType::new(2, 3).unwrap()).unwrap();
        let text = emit_json(&v);
        assert!(text.starts_with(
            r#"{"m":2,"n":3,"components":[{"type":"red"},{"type":"irr","k":1,"kp":1,"lambda":["#
        ));
        // s = 2cos(π/6) and 2cos(5π/6) as rounded by cos, not ±√3 bit for bit
        for rec in v.intersections() {
            assert!((rec.s.abs() - 3f64.sqrt()).abs() < 1e-15);
            assert!(
                text.contains(&format!(r#""s":{}"#, format_f64(rec.s))),
                "{text}"
            );
        }
        assert!(text.ends_with(r#""counts":{"irr_lines":1,"intersection_points":2}}"#));
    }

    #[test]
    fn unknot_document() {
        let v = enumerate_variety(KnotType::new(1, 2).unwrap()).unwrap();
        assert_eq!(
            emit_json(&v),
            r#"{"m":1,"n":2,"components":[{"type":"red"}],"counts":{"irr_lines":0,"intersection_points":0}}"#
        );
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_json(
            r#"{"m":4,"n":6,"components":[],"counts":{"irr_lines":0,"intersection_points":0}}"#
        )
        .is_err());
        assert!(parse_json("{").is_err());
    }

    proptest! {
        #[test]
        fn floats_round_trip(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
            let back: f64 = format_f64(x).parse().unwrap();
            prop_assert!(back == x);
        }

        #[test]
        fn documents_round_trip(m in 1i64..9, n in 1i64..9) {
            prop_assume!(crate::modular::gcd(m, n) == 1);
            let v = enumerate_variety(KnotType::new(m, n).unwrap()).unwrap();
            prop_assert_eq!(parse_json(&emit_json(&v)).unwrap(), v);
        }
    }
}

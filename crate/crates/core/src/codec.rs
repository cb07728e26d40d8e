//! JSON interchange documents.
//!
//! Every document is a single JSON object with a `kind` discriminator
//! (`"group"`, `"nearbrace"`, `"solution"`, `"sigmafamily"`). Serialization
//! is compact, field order is fixed by the struct definitions, and a
//! trailing newline is appended, so re-serializing a loaded document is
//! byte-identical. Loading always revalidates: group documents re-run the
//! group laws, near-brace documents re-run the compatibility law, and
//! solution documents carrying parameters are checked against a fresh
//! reconstruction of both the constants and the map tables.

use serde::{Deserialize, Serialize};

use crate::brace::{NearBrace, SigmaFamily};
use crate::error::Error;
use crate::group::{Elem, GroupTable};
use crate::params::ParamTriple;
use crate::solution::{build_solution, BraidMap, Provenance};

#[derive(Serialize, Deserialize)]
struct GroupDoc {
    kind: String,
    order: usize,
    labels: Vec<String>,
    table: Vec<Vec<Elem>>,
}

#[derive(Serialize, Deserialize)]
struct NearBraceDoc {
    kind: String,
    order: usize,
    labels: Vec<String>,
    addition: Vec<Vec<Elem>>,
    multiplication: Vec<Vec<Elem>>,
}

#[derive(Serialize, Deserialize)]
struct SolutionDoc {
    kind: String,
    order: usize,
    sigma: Vec<Vec<Elem>>,
    tau: Vec<Vec<Elem>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    nearbrace: Option<NearBraceDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    params: Option<ParamTriple>,
}

#[derive(Serialize, Deserialize)]
struct SigmaFamilyDoc {
    kind: String,
    order: usize,
    z: Elem,
    group: GroupDoc,
    sigma: Vec<Vec<Elem>>,
}

/// A group document without the group laws applied, for validators that
/// want to inspect a possibly-broken table.
pub struct RawGroup {
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<Elem>>,
}

/// A near-brace document without any laws applied.
pub struct RawNearBrace {
    pub order: usize,
    pub labels: Vec<String>,
    pub addition: Vec<Vec<Elem>>,
    pub multiplication: Vec<Vec<Elem>>,
}

fn finish(json: String) -> String {
    json + "\n"
}

fn parse_value(s: &str) -> Result<serde_json::Value, Error> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// The `kind` discriminator of a document, without loading it.
pub fn kind_of(s: &str) -> Result<String, Error> {
    let v = parse_value(s)?;
    v.get("kind")
        .and_then(|k| k.as_str())
        .map(str::to_string)
        .ok_or_else(|| Error::Parse("document has no \"kind\" field".into()))
}

fn typed<T: serde::de::DeserializeOwned>(s: &str, expected: &'static str) -> Result<T, Error> {
    let found = kind_of(s)?;
    if found != expected {
        return Err(Error::WrongKind { expected, found });
    }
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("malformed {expected} document: {e}")))
}

fn group_doc(g: &GroupTable) -> GroupDoc {
    GroupDoc {
        kind: "group".into(),
        order: g.order(),
        labels: g.labels().to_vec(),
        table: g.rows(),
    }
}

fn group_from_doc(doc: GroupDoc) -> Result<GroupTable, Error> {
    if doc.order != doc.table.len() {
        return Err(Error::Parse(format!(
            "order field says {}, table has {} rows",
            doc.order,
            doc.table.len()
        )));
    }
    GroupTable::from_table(doc.labels, doc.table)
}

pub fn group_to_json(g: &GroupTable) -> String {
    finish(serde_json::to_string(&group_doc(g)).expect("plain data serializes"))
}

pub fn group_from_json(s: &str) -> Result<GroupTable, Error> {
    group_from_doc(typed::<GroupDoc>(s, "group")?)
}

pub fn group_raw_from_json(s: &str) -> Result<RawGroup, Error> {
    let doc = typed::<GroupDoc>(s, "group")?;
    Ok(RawGroup {
        order: doc.order,
        labels: doc.labels,
        table: doc.table,
    })
}

fn nearbrace_doc(nb: &NearBrace) -> NearBraceDoc {
    NearBraceDoc {
        kind: "nearbrace".into(),
        order: nb.order(),
        labels: nb.labels().to_vec(),
        addition: nb.addition().rows(),
        multiplication: nb.multiplication().rows(),
    }
}

fn nearbrace_from_doc(doc: NearBraceDoc) -> Result<NearBrace, Error> {
    if doc.order != doc.addition.len() || doc.order != doc.multiplication.len() {
        return Err(Error::Parse(format!(
            "order field says {}, tables have {} and {} rows",
            doc.order,
            doc.addition.len(),
            doc.multiplication.len()
        )));
    }
    let add = GroupTable::from_table(doc.labels.clone(), doc.addition)?;
    let mul = GroupTable::from_table(doc.labels, doc.multiplication)?;
    NearBrace::new(add, mul)
}

pub fn nearbrace_to_json(nb: &NearBrace) -> String {
    finish(serde_json::to_string(&nearbrace_doc(nb)).expect("plain data serializes"))
}

pub fn nearbrace_from_json(s: &str) -> Result<NearBrace, Error> {
    nearbrace_from_doc(typed::<NearBraceDoc>(s, "nearbrace")?)
}

pub fn nearbrace_raw_from_json(s: &str) -> Result<RawNearBrace, Error> {
    let doc = typed::<NearBraceDoc>(s, "nearbrace")?;
    Ok(RawNearBrace {
        order: doc.order,
        labels: doc.labels,
        addition: doc.addition,
        multiplication: doc.multiplication,
    })
}

pub fn solution_to_json(m: &BraidMap) -> String {
    let doc = SolutionDoc {
        kind: "solution".into(),
        order: m.order(),
        sigma: m.sigma_rows().to_vec(),
        tau: m.tau_rows().to_vec(),
        nearbrace: m.provenance().map(|p| nearbrace_doc(&p.nearbrace)),
        params: m.provenance().and_then(|p| p.params),
    };
    finish(serde_json::to_string(&doc).expect("plain data serializes"))
}

pub fn solution_from_json(s: &str) -> Result<BraidMap, Error> {
    let doc = typed::<SolutionDoc>(s, "solution")?;
    if doc.order != doc.sigma.len() {
        return Err(Error::Parse(format!(
            "order field says {}, sigma table has {} rows",
            doc.order,
            doc.sigma.len()
        )));
    }
    let map = BraidMap::from_tables(doc.sigma, doc.tau)?;
    match (doc.nearbrace, doc.params) {
        (None, None) => Ok(map),
        (None, Some(_)) => Err(Error::Parse(
            "parameters require an embedded nearbrace".into(),
        )),
        (Some(nb_doc), params) => {
            let nb = nearbrace_from_doc(nb_doc)?;
            if nb.order() != map.order() {
                return Err(Error::CarrierMismatch {
                    left: map.order(),
                    right: nb.order(),
                });
            }
            if let Some(stored) = &params {
                let fresh = ParamTriple::new_relaxed(&nb, stored.z1, stored.z2, stored.xi)?;
                if fresh != *stored {
                    return Err(Error::Parse(
                        "stored parameter constants disagree with the structure".into(),
                    ));
                }
                let rebuilt = build_solution(&nb, &fresh)?;
                if rebuilt.sigma_rows() != map.sigma_rows() || rebuilt.tau_rows() != map.tau_rows()
                {
                    return Err(Error::Parse(
                        "stored map tables disagree with the parameters".into(),
                    ));
                }
            }
            Ok(map.with_provenance(Provenance {
                nearbrace: nb,
                params,
            }))
        }
    }
}

pub fn sigmafamily_to_json(g: &GroupTable, fam: &SigmaFamily) -> String {
    let doc = SigmaFamilyDoc {
        kind: "sigmafamily".into(),
        order: fam.order(),
        z: fam.z(),
        group: group_doc(g),
        sigma: fam.rows().to_vec(),
    };
    finish(serde_json::to_string(&doc).expect("plain data serializes"))
}

pub fn sigmafamily_from_json(s: &str) -> Result<(GroupTable, SigmaFamily), Error> {
    let doc = typed::<SigmaFamilyDoc>(s, "sigmafamily")?;
    let g = group_from_doc(doc.group)?;
    let fam = SigmaFamily::new(doc.order, doc.z, doc.sigma)?;
    if g.order() != fam.order() {
        return Err(Error::CarrierMismatch {
            left: fam.order(),
            right: g.order(),
        });
    }
    Ok((g, fam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{addition_from_sigma, sigma_family_of, trivial_near_brace};
    use crate::group::{build_standard, GroupSpec};

    fn group(s: &str) -> GroupTable {
        build_standard(&GroupSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn group_documents_round_trip_byte_identically() {
        let g = group("dihedral:4");
        let json = group_to_json(&g);
        assert!(json.ends_with('\n'));
        let back = group_from_json(&json).unwrap();
        assert_eq!(back, g);
        assert_eq!(group_to_json(&back), json);
    }

    #[test]
    fn nearbrace_documents_round_trip() {
        let nb = trivial_near_brace(&group("symmetric:3"), 0).unwrap();
        let json = nearbrace_to_json(&nb);
        let back = nearbrace_from_json(&json).unwrap();
        assert_eq!(back, nb);
        assert_eq!(nearbrace_to_json(&back), json);
    }

    #[test]
    fn solution_documents_carry_and_verify_their_provenance() {
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let p = ParamTriple::new(&nb, 0, 1, 3).unwrap();
        let m = build_solution(&nb, &p).unwrap();
        let json = solution_to_json(&m);
        let back = solution_from_json(&json).unwrap();
        assert_eq!(back.sigma_rows(), m.sigma_rows());
        assert_eq!(back.tau_rows(), m.tau_rows());
        let prov = back.provenance().unwrap();
        assert_eq!(prov.nearbrace, nb);
        assert_eq!(prov.params, Some(p));
        assert_eq!(solution_to_json(&back), json);
    }

    #[test]
    fn tampered_constants_and_tables_are_rejected() {
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let p = ParamTriple::new(&nb, 0, 1, 3).unwrap();
        let json = solution_to_json(&build_solution(&nb, &p).unwrap());
        assert_eq!(p.c1, 0);
        let bad_c1 = json.replace("\"c1\":0", "\"c1\":1");
        assert_ne!(bad_c1, json);
        assert!(matches!(solution_from_json(&bad_c1), Err(Error::Parse(_))));
        // alter one map entry while keeping the parameters: also rejected
        let mut tampered: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(tampered["sigma"][0][0], 2);
        tampered["sigma"][0][0] = serde_json::Value::from(3);
        let bad = serde_json::to_string(&tampered).unwrap();
        assert!(matches!(solution_from_json(&bad), Err(Error::Parse(_))));
    }

    #[test]
    fn params_without_structure_are_rejected() {
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let p = ParamTriple::new(&nb, 0, 1, 3).unwrap();
        let json = solution_to_json(&build_solution(&nb, &p).unwrap());
        let mut doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        doc.as_object_mut().unwrap().remove("nearbrace");
        let bad = serde_json::to_string(&doc).unwrap();
        assert!(matches!(solution_from_json(&bad), Err(Error::Parse(_))));
    }

    #[test]
    fn plain_solutions_load_without_provenance() {
        let sigma = vec![vec![0, 1], vec![1, 0]];
        let tau = vec![vec![0, 1], vec![1, 0]];
        let m = BraidMap::from_tables(sigma, tau).unwrap();
        let json = solution_to_json(&m);
        assert!(!json.contains("nearbrace"));
        let back = solution_from_json(&json).unwrap();
        assert!(back.provenance().is_none());
    }

    #[test]
    fn kinds_are_enforced() {
        let g = group("cyclic:3");
        let json = group_to_json(&g);
        assert_eq!(kind_of(&json).unwrap(), "group");
        assert!(matches!(
            nearbrace_from_json(&json),
            Err(Error::WrongKind {
                expected: "nearbrace",
                found
            }) if found == "group"
        ));
        assert!(matches!(group_from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(group_from_json("{}"), Err(Error::Parse(_))));
    }

    #[test]
    fn raw_loading_skips_the_laws_but_not_the_shape() {
        // a non-associative table loads raw but fails strict loading
        let doc = r#"{"kind":"group","order":3,"labels":["a","b","c"],
                      "table":[[0,1,2],[1,2,0],[2,1,0]]}"#;
        let raw = group_raw_from_json(doc).unwrap();
        assert_eq!(raw.table.len(), 3);
        assert!(matches!(group_from_json(doc), Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn sigmafamily_documents_round_trip_through_reconstruction() {
        let g = group("cyclic:4");
        let nb = trivial_near_brace(&g, 2).unwrap();
        let fam = sigma_family_of(&nb, 1).unwrap();
        let json = sigmafamily_to_json(nb.multiplication(), &fam);
        let (g2, fam2) = sigmafamily_from_json(&json).unwrap();
        assert_eq!(&g2, nb.multiplication());
        assert_eq!(fam2.rows(), fam.rows());
        let rebuilt = addition_from_sigma(&g2, &fam2).unwrap();
        assert_eq!(rebuilt, nb);
        assert_eq!(sigmafamily_to_json(&g2, &fam2), json);
    }
}

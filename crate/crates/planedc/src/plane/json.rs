//! Canonical graph file format.
//!
//! ```json
//! { "vertices": ["a", "b"],
//!   "rotation": { "a": ["b"], "b": ["a"] },
//!   "outer_face": ["a", "b"] }
//! ```
//!
//! Rotation lists are clockwise neighbor orders. Parsing rejects loops,
//! parallel edges and one-sided or non-spherical rotations. The optional
//! `outer_face` marks one face by a facial-walk vertex sequence; it is the
//! plane-convention annotation used by the hardness constructions.

use super::{PlaneGraph, Walk};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    rotation: BTreeMap<String, Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outer_face: Option<Vec<String>>,
}

pub fn parse(text: &str) -> Result<PlaneGraph> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut names = file.vertices.clone();
    names.sort();
    names.dedup();
    if names.len() != file.vertices.len() {
        return Err(Error::Parse("duplicate vertex ids".into()));
    }
    let id_of = |name: &str| -> Result<u32> {
        names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map(|i| i as u32)
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    };
    for key in file.rotation.keys() {
        id_of(key)?;
    }
    let mut rotation = vec![Vec::new(); names.len()];
    for (name, nbrs) in &file.rotation {
        let u = id_of(name)? as usize;
        let mut list = Vec::with_capacity(nbrs.len());
        for v in nbrs {
            list.push(id_of(v)?);
        }
        rotation[u] = list;
    }
    let mut g = PlaneGraph::new(names, rotation, None)?;
    if let Some(walk) = &file.outer_face {
        let f = find_face_by_walk(&g, walk)?;
        g.set_outer_face(f);
    }
    Ok(g)
}

pub fn to_json(g: &PlaneGraph) -> serde_json::Value {
    let rotation: BTreeMap<String, Vec<String>> = (0..g.num_vertices() as u32)
        .map(|v| {
            (
                g.name(v).to_string(),
                g.neighbors(v).map(|u| g.name(u).to_string()).collect(),
            )
        })
        .collect();
    let outer_face = g.outer_face().map(|f| face_walk_names(g, f));
    serde_json::to_value(GraphFile {
        vertices: g.names().to_vec(),
        rotation,
        outer_face,
    })
    .expect("graph serialization cannot fail")
}

pub fn to_string(g: &PlaneGraph) -> String {
    serde_json::to_string_pretty(&to_json(g)).expect("graph serialization cannot fail")
}

pub fn face_walk_names(g: &PlaneGraph, f: u32) -> Vec<String> {
    let w = g.faces()[f as usize].walks[0];
    match &g.walks()[w as usize] {
        Walk::Closed(ds) => ds
            .iter()
            .map(|&d| g.name(g.map().origin(d)).to_string())
            .collect(),
        Walk::Isolated(v) => vec![g.name(*v).to_string()],
    }
}

/// Matches a vertex sequence against the facial walks, up to rotation and
/// reversal.
fn find_face_by_walk(g: &PlaneGraph, walk: &[String]) -> Result<u32> {
    let ids: Vec<u32> = walk
        .iter()
        .map(|n| g.vertex_id(n))
        .collect::<Result<_>>()?;
    for (wi, w) in g.walks().iter().enumerate() {
        let seq: Vec<u32> = match w {
            Walk::Closed(ds) => ds.iter().map(|&d| g.map().origin(d)).collect(),
            Walk::Isolated(v) => vec![*v],
        };
        if cyclic_eq(&seq, &ids) {
            return Ok(g.face_of_walk(wi as u32));
        }
    }
    Err(Error::Parse(format!(
        "outer_face walk {:?} does not match any facial walk",
        walk
    )))
}

fn cyclic_eq(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    for rev in [false, true] {
        let bb: Vec<u32> = if rev {
            b.iter().rev().copied().collect()
        } else {
            b.to_vec()
        };
        for s in 0..n {
            if (0..n).all(|i| a[i] == bb[(s + i) % n]) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        for g in [fixtures::cycle(4), fixtures::k4(), fixtures::cube(), fixtures::path(3)] {
            let text = to_string(&g);
            let h = parse(&text).unwrap();
            assert_eq!(to_string(&h), text);
            assert_eq!(h.num_faces(), g.num_faces());
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(parse(r#"{"vertices": ["a"], "rotation": {"a": ["a"]}}"#).is_err());
        assert!(parse(r#"{"vertices": ["a","b"], "rotation": {"a": ["b","b"], "b": ["a","a"]}}"#).is_err());
        assert!(parse(r#"{"vertices": ["a","b"], "rotation": {"a": ["b"], "b": []}}"#).is_err());
        assert!(parse(r#"{"vertices": ["a","a"], "rotation": {}}"#).is_err());
        assert!(parse(r#"{"vertices": ["a","b"], "rotation": {"a": ["c"], "b": ["a"]}}"#).is_err());
    }

    #[test]
    fn outer_face_annotation_round_trips() {
        let mut g = fixtures::cycle(3);
        g.set_outer_face(1);
        let text = to_string(&g);
        let h = parse(&text).unwrap();
        assert!(h.outer_face().is_some());
        assert_eq!(
            h.face_degree_of(h.outer_face().unwrap()),
            g.face_degree_of(1)
        );
    }
}

//! Cylindrical enhancement.
//!
//! `cylindrical_enhancement(g, k)` inserts a grid annulus into every face of
//! `g`, one per boundary walk, wired to the walk by attachment fans, and then
//! bridges the walks of every multi-walk face through a middle annulus. The
//! result is a 3-connected plane supergraph whose new edges provide routing
//! capacity for simulated completion edges: one run of `k` consecutive base
//! vertices is reserved per corner of every boundary vertex.

use crate::annulus::annulus_rotations;
use crate::error::{Error, Result};
use crate::plane::{dart, EdgeId, FaceId, PlaneGraph, VertexId, Walk};
use rustc_hash::{FxHashMap, FxHashSet};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeTag {
    Old,
    Annulus,
    Attachment,
    Interconnect,
}

/// One inserted annulus: either around a boundary walk (phase 1) or in the
/// middle of a non-trivial face (phase 2).
#[derive(Clone, Debug)]
pub struct AnnulusInfo {
    pub host_face: FaceId,
    /// Walk of `g` the annulus surrounds; `None` for middle annuli.
    pub around_walk: Option<u32>,
    pub k: u32,
    pub r: u32,
    /// Vertex ids in h, indexed layer * r + col.
    pub ids: Vec<VertexId>,
}

impl AnnulusInfo {
    pub fn vertex(&self, layer: u32, col: u32) -> VertexId {
        self.ids[(layer * self.r + col) as usize]
    }
    pub fn base(&self, col: u32) -> VertexId {
        self.vertex(0, col)
    }
    pub fn roof(&self, col: u32) -> VertexId {
        self.vertex(self.k - 1, col)
    }
}

/// Attachment run: the k consecutive base vertices wired to one corner of a
/// boundary vertex.
#[derive(Clone, Debug)]
pub struct RunInfo {
    pub vertex: VertexId,
    pub host_face: FaceId,
    pub walk: u32,
    /// Corner index of `vertex` along the walk (0 for isolated vertices).
    pub visit: u32,
    pub annulus: u32,
    /// Base columns [start, start + k).
    pub col_start: u32,
}

#[derive(Clone, Debug)]
pub struct Enhancement {
    pub original: PlaneGraph,
    pub graph: PlaneGraph,
    pub k: u32,
    pub num_old_vertices: usize,
    pub tags: Vec<EdgeTag>,
    pub expansion: Vec<bool>,
    pub annuli: Vec<AnnulusInfo>,
    pub runs: Vec<RunInfo>,
    /// For every face of the enhanced graph, the face of `g` containing it.
    pub host_face_of: Vec<FaceId>,
}

pub fn cylindrical_enhancement(g: &PlaneGraph, k: u32) -> Result<Enhancement> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "cylindrical enhancement needs k >= 3 (got {k})"
        )));
    }
    if g.num_vertices() == 0 {
        return Err(Error::Precondition("cannot enhance the empty graph".into()));
    }
    let n_old = g.num_vertices();
    let mut names: Vec<String> = g.names().to_vec();
    let used: FxHashSet<String> = names.iter().cloned().collect();
    let mut fresh = move |tag: String| -> String {
        let mut name = tag;
        while used.contains(&name) {
            name.push('~');
        }
        name
    };
    let mut rot: Vec<Vec<VertexId>> = (0..n_old as u32)
        .map(|v| g.neighbors(v).collect())
        .collect();
    // tag bookkeeping keyed by sorted endpoint pair
    let mut tag_of: FxHashMap<(VertexId, VertexId), (EdgeTag, bool)> = FxHashMap::default();
    for &(u, v) in g.edges() {
        tag_of.insert((u, v), (EdgeTag::Old, false));
    }
    let mut mark = |tag_of: &mut FxHashMap<(VertexId, VertexId), (EdgeTag, bool)>,
                    u: VertexId,
                    v: VertexId,
                    t: EdgeTag,
                    exp: bool| {
        tag_of.insert((u.min(v), u.max(v)), (t, exp));
    };

    let mut annuli: Vec<AnnulusInfo> = Vec::new();
    let mut runs: Vec<RunInfo> = Vec::new();

    // emits a k x r annulus as fresh vertices; records internal edge tags
    let mut emit_annulus = |rot: &mut Vec<Vec<VertexId>>,
                            names: &mut Vec<String>,
                            tag_of: &mut FxHashMap<(VertexId, VertexId), (EdgeTag, bool)>,
                            label: String,
                            r: u32|
     -> Vec<VertexId> {
        let base_id = names.len() as u32;
        let ids: Vec<VertexId> = (0..k * r).map(|i| base_id + i).collect();
        for l in 0..k {
            for c in 0..r {
                names.push(fresh(format!("{label}.{l}.{c}")));
            }
        }
        let local = annulus_rotations(k, r, |l, c| ids[(l * r + c) as usize]);
        // local is indexed by ids via the same layout
        rot.extend(local.into_iter());
        for l in 0..k {
            for c in 0..r {
                let a = ids[(l * r + c) as usize];
                let b = ids[(l * r + (c + 1) % r) as usize];
                mark(tag_of, a, b, EdgeTag::Annulus, false);
                if l + 1 < k {
                    let up = ids[((l + 1) * r + c) as usize];
                    mark(tag_of, a, up, EdgeTag::Annulus, false);
                }
            }
        }
        ids
    };

    // Phase 1: one annulus per (face, boundary walk).
    // annulus_of_walk[w] = index into annuli
    let mut annulus_of_walk: Vec<Option<u32>> = vec![None; g.walks().len()];
    for (f, face) in g.faces().iter().enumerate() {
        let f = f as FaceId;
        for &w in &face.walks {
            let ai = annuli.len() as u32;
            match &g.walks()[w as usize] {
                Walk::Closed(ds) => {
                    let sigma = ds.len() as u32;
                    let r = k * sigma;
                    let ids = emit_annulus(&mut rot, &mut names, &mut tag_of, format!("~a{ai}"), r);
                    let info = AnnulusInfo {
                        host_face: f,
                        around_walk: Some(w),
                        k,
                        r,
                        ids,
                    };
                    // visit t: corner at origin(ds[t]) between the previous
                    // walk edge and ds[t]
                    for t in 0..sigma {
                        let d = ds[t as usize];
                        let v = g.map().origin(d);
                        let prev = ds[((t + sigma - 1) % sigma) as usize];
                        let prev_vertex = g.map().origin(prev);
                        let fan: Vec<VertexId> =
                            (0..k).map(|s| info.base(t * k + s)).collect();
                        // insert the fan into v's corner, after the neighbor
                        // leading back along the previous walk edge
                        let pos = rot[v as usize]
                            .iter()
                            .position(|&x| x == prev_vertex)
                            .expect("walk neighbor present");
                        for (i, &b) in fan.iter().rev().enumerate() {
                            let _ = i;
                            rot[v as usize].insert(pos + 1, b);
                        }
                        for &b in &fan {
                            rot[b as usize].push(v);
                            mark(&mut tag_of, v, b, EdgeTag::Attachment, false);
                        }
                        // expansion path: ring edges inside the run
                        for s in 0..k - 1 {
                            let a = info.base(t * k + s);
                            let b = info.base(t * k + s + 1);
                            mark(&mut tag_of, a, b, EdgeTag::Annulus, true);
                        }
                        runs.push(RunInfo {
                            vertex: v,
                            host_face: f,
                            walk: w,
                            visit: t,
                            annulus: ai,
                            col_start: t * k,
                        });
                    }
                    annuli.push(info);
                }
                Walk::Isolated(v) => {
                    let r = k;
                    let ids = emit_annulus(&mut rot, &mut names, &mut tag_of, format!("~a{ai}"), r);
                    let info = AnnulusInfo {
                        host_face: f,
                        around_walk: Some(w),
                        k,
                        r,
                        ids,
                    };
                    let fan: Vec<VertexId> = (0..k).map(|s| info.base(s)).collect();
                    debug_assert!(rot[*v as usize].is_empty());
                    rot[*v as usize] = fan.clone();
                    for &b in &fan {
                        rot[b as usize].push(*v);
                        mark(&mut tag_of, *v, b, EdgeTag::Attachment, false);
                    }
                    // the run induces the whole base cycle; take the maximal
                    // path dropping the wrap-around edge
                    for s in 0..k - 1 {
                        mark(&mut tag_of, info.base(s), info.base(s + 1), EdgeTag::Annulus, true);
                    }
                    runs.push(RunInfo {
                        vertex: *v,
                        host_face: f,
                        walk: w,
                        visit: 0,
                        annulus: ai,
                        col_start: 0,
                    });
                    annuli.push(info);
                }
            }
            annulus_of_walk[w as usize] = Some(ai);
        }
    }

    // Phase 2: a middle annulus per non-trivial face, interconnected to the
    // roof of every phase-1 annulus of that face.
    for (f, face) in g.faces().iter().enumerate() {
        let f = f as FaceId;
        let rho = face.walks.len() as u32;
        if rho < 2 {
            continue;
        }
        let ai = annuli.len() as u32;
        let r = k * rho;
        let ids = emit_annulus(&mut rot, &mut names, &mut tag_of, format!("~m{ai}"), r);
        let mid = AnnulusInfo {
            host_face: f,
            around_walk: None,
            k,
            r,
            ids,
        };
        for (j, &w) in face.walks.iter().enumerate() {
            let j = j as u32;
            let pa = &annuli[annulus_of_walk[w as usize].unwrap() as usize];
            // J_j: roof columns [0, k) of the phase-1 annulus (recorded
            // arbitrary choice); I_j: middle roof columns [j*k, (j+1)*k).
            for s in 0..k {
                let a = pa.roof(s);
                let b = mid.roof(j * k + (k - 1 - s));
                // exterior gap of a roof vertex: between ring-prev and
                // ring-next, away from its down-neighbor
                let prev_a = pa.roof((s + pa.r - 1) % pa.r);
                let pos_a = rot[a as usize].iter().position(|&x| x == prev_a).unwrap();
                rot[a as usize].insert(pos_a + 1, b);
                let prev_b = mid.roof((j * k + (k - 1 - s) + mid.r - 1) % mid.r);
                let pos_b = rot[b as usize].iter().position(|&x| x == prev_b).unwrap();
                rot[b as usize].insert(pos_b + 1, a);
                mark(&mut tag_of, a, b, EdgeTag::Interconnect, false);
            }
        }
        annuli.push(mid);
    }

    let graph = PlaneGraph::new(names, rot, None)?;
    if !graph.is_connected() {
        return Err(Error::Structure(
            "enhancement did not produce a connected graph".into(),
        ));
    }
    let mut tags = Vec::with_capacity(graph.num_edges());
    let mut expansion = Vec::with_capacity(graph.num_edges());
    for e in 0..graph.num_edges() as u32 {
        let key = graph.endpoints(e);
        let (t, x) = *tag_of
            .get(&key)
            .expect("every enhanced edge was constructed with a tag");
        tags.push(t);
        expansion.push(x);
    }
    let host_face_of = compute_host_faces(g, &graph, n_old, &tags)?;
    Ok(Enhancement {
        original: g.clone(),
        graph,
        k,
        num_old_vertices: n_old,
        tags,
        expansion,
        annuli,
        runs,
        host_face_of,
    })
}

impl Enhancement {
    pub fn is_old_vertex(&self, v: VertexId) -> bool {
        (v as usize) < self.num_old_vertices
    }

    pub fn is_old_edge(&self, e: EdgeId) -> bool {
        self.tags[e as usize] == EdgeTag::Old
    }

    pub fn is_expansion_edge(&self, e: EdgeId) -> bool {
        self.expansion[e as usize]
    }

    /// New edges of the enhancement, ascending.
    pub fn new_edges(&self) -> Vec<EdgeId> {
        (0..self.graph.num_edges() as u32)
            .filter(|&e| !self.is_old_edge(e))
            .collect()
    }

    /// The face of `g` an enhanced-graph face lies inside.
    pub fn host_face(&self, f: FaceId) -> FaceId {
        self.host_face_of[f as usize]
    }

    /// Contracts every expansion edge together with its ceilings; the result
    /// must still be spherical. Construction sanity only.
    pub fn contract_expansion_closure(&self) -> crate::plane::RotationMap {
        let mut contract = vec![false; self.graph.num_edges()];
        for (ai, a) in self.annuli.iter().enumerate() {
            if a.around_walk.is_none() {
                continue;
            }
            for run in self.runs.iter().filter(|r| r.annulus == ai as u32) {
                let span = if a.r == self.k { self.k - 1 } else { self.k - 1 };
                for s in 0..span {
                    let c = run.col_start + s;
                    for l in 0..self.k {
                        let e = self
                            .graph
                            .edge_id(a.vertex(l, c), a.vertex(l, (c + 1) % a.r))
                            .unwrap();
                        contract[e as usize] = true;
                    }
                }
            }
        }
        let (map, _, _) = crate::plane::surgery::delete_and_contract(
            self.graph.map(),
            &vec![false; self.graph.num_edges()],
            &contract,
        );
        map
    }

    /// Sidecar JSON: per-edge tags plus the attachment-run registry.
    pub fn sidecar_json(&self) -> serde_json::Value {
        let g = &self.graph;
        let tag_name = |e: u32| -> &'static str {
            if self.expansion[e as usize] {
                "expansion"
            } else {
                match self.tags[e as usize] {
                    EdgeTag::Old => "old",
                    EdgeTag::Annulus => "annulus",
                    EdgeTag::Attachment => "attachment",
                    EdgeTag::Interconnect => "interconnect",
                }
            }
        };
        let tags: serde_json::Map<String, serde_json::Value> = (0..g.num_edges() as u32)
            .map(|e| {
                let (u, v) = g.endpoints(e);
                (
                    format!("{}|{}", g.name(u), g.name(v)),
                    json!(tag_name(e)),
                )
            })
            .collect();
        let runs: Vec<serde_json::Value> = self
            .runs
            .iter()
            .map(|r| {
                let a = &self.annuli[r.annulus as usize];
                json!({
                    "vertex": g.name(r.vertex),
                    "host_face": r.host_face,
                    "walk": r.walk,
                    "visit": r.visit,
                    "annulus": r.annulus,
                    "base": (0..self.k).map(|s| g.name(a.base(r.col_start + s))).collect::<Vec<_>>(),
                })
            })
            .collect();
        let annuli: Vec<serde_json::Value> = self
            .annuli
            .iter()
            .map(|a| {
                json!({
                    "host_face": a.host_face,
                    "kind": if a.around_walk.is_some() { "boundary" } else { "middle" },
                    "k": a.k,
                    "r": a.r,
                })
            })
            .collect();
        json!({ "k": self.k, "tags": tags, "runs": runs, "annuli": annuli })
    }
}

/// Maps every face of `h` to the face of `g` containing it. Seeds come from
/// old-edge darts (both graphs trace faces with the same orbit rule, so dart
/// sides agree); the assignment spreads across new edges, which never
/// separate two faces of `g`.
pub fn compute_host_faces(
    g: &PlaneGraph,
    h: &PlaneGraph,
    num_old_vertices: usize,
    tags: &[EdgeTag],
) -> Result<Vec<FaceId>> {
    let nf = h.num_faces();
    let mut host: Vec<FaceId> = vec![u32::MAX; nf];
    if g.num_edges() == 0 {
        // everything lies inside g's single face
        return Ok(vec![0; nf]);
    }
    let mut queue = std::collections::VecDeque::new();
    for e in 0..h.num_edges() as u32 {
        if tags[e as usize] != EdgeTag::Old {
            continue;
        }
        let (u, v) = h.endpoints(e);
        debug_assert!((u as usize) < num_old_vertices && (v as usize) < num_old_vertices);
        let ge = g
            .edge_id(u, v)
            .ok_or_else(|| Error::Structure("old edge missing in g".into()))?;
        for side in 0..2 {
            let hf = h.face_of_dart(dart(e, side));
            let gf = g.face_of_dart(dart(ge, side));
            // dart sides match because edge endpoints are stored sorted in
            // both graphs and ids agree on old vertices
            if host[hf as usize] == u32::MAX {
                host[hf as usize] = gf;
                queue.push_back(hf);
            } else if host[hf as usize] != gf {
                return Err(Error::Structure("inconsistent host face seeding".into()));
            }
        }
    }
    while let Some(f) = queue.pop_front() {
        let gf = host[f as usize];
        for &w in &h.faces()[f as usize].walks {
            if let Walk::Closed(ds) = &h.walks()[w as usize] {
                for &d in ds {
                    let e = crate::plane::edge_of(d);
                    if tags[e as usize] == EdgeTag::Old {
                        continue;
                    }
                    let other = h.face_of_dart(crate::plane::twin(d));
                    if host[other as usize] == u32::MAX {
                        host[other as usize] = gf;
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    if host.iter().any(|&x| x == u32::MAX) {
        return Err(Error::Structure("host face assignment incomplete".into()));
    }
    Ok(host)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::plane::is_3_connected;

    #[test]
    fn triangle_enhancement_counts() {
        let g = fixtures::cycle(3);
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        // 2 faces, each with one walk of 3 darts: two 3x9 annuli
        assert_eq!(enh.graph.num_vertices(), 3 + 2 * 27);
        let attach = enh
            .tags
            .iter()
            .filter(|&&t| t == EdgeTag::Attachment)
            .count();
        assert_eq!(attach, 18);
        assert_eq!(enh.annuli.len(), 2);
        assert!(enh.annuli.iter().all(|a| a.r == 9));
    }

    #[test]
    fn single_edge_enhancement_counts() {
        let g = fixtures::path(2);
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        // one face, one walk of 2 darts (bridge counts twice): one 3x6 annulus
        assert_eq!(enh.graph.num_vertices(), 2 + 18);
        assert_eq!(enh.annuli.len(), 1);
        assert_eq!(enh.annuli[0].r, 6);
    }

    #[test]
    fn two_disjoint_edges_enhancement() {
        let g = fixtures::two_disjoint_edges();
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        // shared face is non-trivial with rho = 2: two boundary annuli and
        // one middle annulus, all 3x6, plus 2*3 interconnecting edges
        assert_eq!(enh.annuli.len(), 3);
        assert!(enh.annuli.iter().all(|a| a.r == 6));
        assert_eq!(enh.annuli.iter().filter(|a| a.around_walk.is_none()).count(), 1);
        let inter = enh
            .tags
            .iter()
            .filter(|&&t| t == EdgeTag::Interconnect)
            .count();
        assert_eq!(inter, 6);
        assert_eq!(enh.graph.num_vertices(), 4 + 3 * 18);
    }

    #[test]
    fn enhancement_is_three_connected() {
        for g in [
            fixtures::cycle(3),
            fixtures::path(2),
            fixtures::two_disjoint_edges(),
            fixtures::star(3),
            fixtures::k4(),
        ] {
            let enh = cylindrical_enhancement(&g, 3).unwrap();
            assert!(is_3_connected(&enh.graph), "enhancement must be 3-connected");
        }
    }

    #[test]
    fn isolated_vertex_enhancement() {
        let g = PlaneGraph::new(vec!["a".into()], vec![vec![]], None).unwrap();
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        assert_eq!(enh.graph.num_vertices(), 1 + 9);
        assert!(is_3_connected(&enh.graph));
        // expansion path drops the wrap-around base edge
        let a = &enh.annuli[0];
        let wrap = enh.graph.edge_id(a.base(2), a.base(0)).unwrap();
        assert!(!enh.is_expansion_edge(wrap));
        let inner = enh.graph.edge_id(a.base(0), a.base(1)).unwrap();
        assert!(enh.is_expansion_edge(inner));
    }

    #[test]
    fn expansion_edge_classification() {
        let g = fixtures::cycle(3);
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        for e in 0..enh.graph.num_edges() as u32 {
            if enh.is_old_edge(e) {
                assert!(!enh.is_expansion_edge(e));
            }
        }
        // roof ring edges are never expansion edges
        let a = &enh.annuli[0];
        for c in 0..a.r {
            let e = enh.graph.edge_id(a.roof(c), a.roof((c + 1) % a.r)).unwrap();
            assert!(!enh.is_expansion_edge(e));
        }
        // every run induces k-1 expansion edges, pairwise disjoint runs
        let per_run = 2; // k - 1
        let total: usize = enh.expansion.iter().filter(|&&x| x).count();
        assert_eq!(total, per_run * enh.runs.len());
    }

    #[test]
    fn runs_are_disjoint_and_k_consecutive() {
        let g = fixtures::star(3);
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        // center has kappa = 3 (three corners on the single face walk)
        let center_runs = enh.runs.iter().filter(|r| r.vertex == 0).count();
        assert_eq!(center_runs, 3);
        for (i, r1) in enh.runs.iter().enumerate() {
            for r2 in &enh.runs[i + 1..] {
                if r1.annulus == r2.annulus {
                    let a = (r1.col_start, r1.col_start + enh.k);
                    let b = (r2.col_start, r2.col_start + enh.k);
                    assert!(a.1 <= b.0 || b.1 <= a.0, "runs overlap");
                }
            }
        }
    }

    #[test]
    fn size_ratio_bounded() {
        for g in [fixtures::cycle(3), fixtures::cycle(6), fixtures::k4(), fixtures::cube()] {
            for k in [3u32, 4, 5] {
                let enh = cylindrical_enhancement(&g, k).unwrap();
                let ratio = enh.graph.num_vertices() as f64
                    / ((k * k) as f64 * g.num_vertices() as f64);
                assert!(ratio <= 13.0, "|V(G^(k))| stays within C * k^2 * n, got {ratio}");
            }
        }
    }

    #[test]
    fn contract_expansion_closure_stays_spherical() {
        for g in [fixtures::cycle(3), fixtures::path(2), fixtures::star(3)] {
            let enh = cylindrical_enhancement(&g, 3).unwrap();
            let contracted = enh.contract_expansion_closure();
            assert!(contracted.is_spherical());
        }
    }

    #[test]
    fn host_faces_cover_and_agree() {
        let g = fixtures::cycle(4);
        let enh = cylindrical_enhancement(&g, 3).unwrap();
        // every host face is a face of g, and both faces of g appear
        let mut seen = vec![false; g.num_faces()];
        for &f in &enh.host_face_of {
            seen[f as usize] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }
}

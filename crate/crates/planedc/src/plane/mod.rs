//! Simple plane graphs on the sphere.
//!
//! A `PlaneGraph` is a simple graph together with a clockwise rotation system
//! and an assembly of facial walks into faces. For connected graphs every
//! face is a single closed walk; for disconnected graphs a face may own
//! several boundary walks (one region of the sphere touching several
//! components). Isolated vertices contribute an empty boundary walk.

pub mod json;
pub mod map;
pub mod medial;
pub mod surgery;

use crate::error::{Error, Result};
use rustc_hash::FxHashMap;
use std::collections::BinaryHeap;

pub use map::{dart, edge_of, twin, Dart, MapBuilder, RotationMap};

pub type VertexId = u32;
pub type EdgeId = u32;
pub type FaceId = u32;

pub const INF: u64 = u64::MAX;

/// One boundary component of a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Walk {
    /// Closed dart walk; the face lies on the tracing side of every dart.
    Closed(Vec<Dart>),
    /// Empty walk around an isolated vertex.
    Isolated(VertexId),
}

impl Walk {
    pub fn dart_len(&self) -> usize {
        match self {
            Walk::Closed(ds) => ds.len(),
            Walk::Isolated(_) => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    pub walks: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    names: Vec<String>,
    map: RotationMap,
    endpoints: Vec<(VertexId, VertexId)>,
    edge_index: FxHashMap<(VertexId, VertexId), EdgeId>,
    walks: Vec<Walk>,
    walk_of_dart: Vec<u32>,
    walk_of_isolated: FxHashMap<VertexId, u32>,
    faces: Vec<Face>,
    face_of_walk: Vec<FaceId>,
    component_of: Vec<u32>,
    outer_face: Option<FaceId>,
}

/// Stable identity of a walk independent of edge numbering: the smallest
/// (origin, head) pair of its darts, or `(u32::MAX, v)` for the empty walk
/// around isolated vertex `v`.
pub fn walk_key(map: &RotationMap, walk: &Walk) -> (u32, u32) {
    match walk {
        Walk::Closed(ds) => ds
            .iter()
            .map(|&d| (map.origin(d), map.head(d)))
            .min()
            .unwrap(),
        Walk::Isolated(v) => (u32::MAX, *v),
    }
}

/// Traces the facial walks of a rotation map in deterministic order: closed
/// walks by smallest dart, then isolated-vertex walks by vertex index.
pub fn trace_walks(map: &RotationMap) -> Vec<Walk> {
    let mut walks: Vec<Walk> = map.face_walks().into_iter().map(Walk::Closed).collect();
    for v in 0..map.num_vertices() as u32 {
        if map.degree(v) == 0 {
            walks.push(Walk::Isolated(v));
        }
    }
    walks
}

impl PlaneGraph {
    /// Assembles a plane graph from named clockwise neighbor lists.
    ///
    /// `face_groups`, when given, lists which traced walks (indices into
    /// `trace_walks` order) share a face; it must cover every walk exactly
    /// once and the component/face incidence must form a tree. When absent,
    /// a canonical grouping is used: the first component keeps one face per
    /// walk and every further component is embedded into the face of the
    /// first traced walk.
    pub fn new(
        names: Vec<String>,
        rotation: Vec<Vec<VertexId>>,
        face_groups: Option<Vec<Vec<u32>>>,
    ) -> Result<Self> {
        let (map, endpoints, edge_index) = Self::build_validated_map(&names, &rotation)?;
        let walks = trace_walks(&map);
        let component_of = map.component_ids();
        let groups = match face_groups {
            Some(g) => g,
            None => default_face_groups(&map, &walks, &component_of),
        };
        Self::assemble(names, map, endpoints, edge_index, walks, component_of, groups)
    }

    /// Like `new`, but faces are grouped by walk keys (see `walk_key`), so
    /// callers can describe walk groupings without knowing trace order.
    pub fn new_grouped_by_keys(
        names: Vec<String>,
        rotation: Vec<Vec<VertexId>>,
        key_groups: Vec<Vec<(u32, u32)>>,
    ) -> Result<Self> {
        let (map, endpoints, edge_index) = Self::build_validated_map(&names, &rotation)?;
        let walks = trace_walks(&map);
        let component_of = map.component_ids();
        let mut by_key: FxHashMap<(u32, u32), u32> = FxHashMap::default();
        for (i, w) in walks.iter().enumerate() {
            by_key.insert(walk_key(&map, w), i as u32);
        }
        let mut groups = Vec::with_capacity(key_groups.len());
        for kg in key_groups {
            let mut g = Vec::with_capacity(kg.len());
            for key in kg {
                let w = by_key
                    .get(&key)
                    .copied()
                    .ok_or_else(|| Error::Structure(format!("no walk with key {key:?}")))?;
                g.push(w);
            }
            groups.push(g);
        }
        Self::assemble(names, map, endpoints, edge_index, walks, component_of, groups)
    }

    fn build_validated_map(
        names: &[String],
        rotation: &[Vec<VertexId>],
    ) -> Result<(RotationMap, Vec<(VertexId, VertexId)>, FxHashMap<(VertexId, VertexId), EdgeId>)>
    {
        let n = names.len();
        if rotation.len() != n {
            return Err(Error::Structure("rotation table size mismatch".into()));
        }
        {
            let mut sorted: Vec<&String> = names.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::Structure("duplicate vertex names".into()));
            }
        }
        // Collect edges, rejecting loops and parallels.
        let mut endpoints: Vec<(VertexId, VertexId)> = Vec::new();
        let mut edge_index: FxHashMap<(VertexId, VertexId), EdgeId> = FxHashMap::default();
        for (u, nbrs) in rotation.iter().enumerate() {
            let u = u as VertexId;
            let mut seen: Vec<VertexId> = Vec::new();
            for &v in nbrs {
                if v as usize >= n {
                    return Err(Error::Structure(format!(
                        "rotation of {} mentions vertex index {} out of range",
                        names[u as usize], v
                    )));
                }
                if v == u {
                    return Err(Error::Structure(format!(
                        "loop at vertex {}",
                        names[u as usize]
                    )));
                }
                if seen.contains(&v) {
                    return Err(Error::Structure(format!(
                        "parallel edge {{{}, {}}}",
                        names[u as usize], names[v as usize]
                    )));
                }
                seen.push(v);
                let key = (u.min(v), u.max(v));
                if !edge_index.contains_key(&key) {
                    edge_index.insert(key, endpoints.len() as EdgeId);
                    endpoints.push(key);
                }
            }
        }
        // Symmetry check: u lists v iff v lists u.
        for &(u, v) in &endpoints {
            if !rotation[u as usize].contains(&v) || !rotation[v as usize].contains(&u) {
                return Err(Error::Structure(format!(
                    "edge {{{}, {}}} is listed on one side only",
                    names[u as usize], names[v as usize]
                )));
            }
        }
        // Build the dart map: neighbor v at u maps to the dart of edge {u,v}
        // leaving u.
        let mut rot_darts: Vec<Vec<Dart>> = Vec::with_capacity(n);
        let mut origin: Vec<u32> = vec![0; endpoints.len() * 2];
        for (e, &(a, b)) in endpoints.iter().enumerate() {
            origin[2 * e] = a;
            origin[2 * e + 1] = b;
        }
        for (u, nbrs) in rotation.iter().enumerate() {
            let u = u as VertexId;
            let mut list = Vec::with_capacity(nbrs.len());
            for &v in nbrs {
                let key = (u.min(v), u.max(v));
                let e = edge_index[&key];
                let side = if endpoints[e as usize].0 == u { 0 } else { 1 };
                list.push(dart(e, side));
            }
            rot_darts.push(list);
        }
        let map = RotationMap::from_rotations(rot_darts, origin)
            .map_err(|m| Error::Structure(m))?;
        if !map.is_spherical() {
            return Err(Error::Structure(
                "rotation system is not a sphere embedding (Euler check failed)".into(),
            ));
        }
        Ok((map, endpoints, edge_index))
    }

    fn assemble(
        names: Vec<String>,
        map: RotationMap,
        endpoints: Vec<(VertexId, VertexId)>,
        edge_index: FxHashMap<(VertexId, VertexId), EdgeId>,
        walks: Vec<Walk>,
        component_of: Vec<u32>,
        groups: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let nw = walks.len();
        let mut face_of_walk = vec![u32::MAX; nw];
        let mut faces = Vec::with_capacity(groups.len());
        for (f, g) in groups.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::Structure("empty face group".into()));
            }
            for &w in g {
                if w as usize >= nw || face_of_walk[w as usize] != u32::MAX {
                    return Err(Error::Structure("bad walk grouping".into()));
                }
                face_of_walk[w as usize] = f as u32;
            }
            faces.push(Face { walks: g.clone() });
        }
        if face_of_walk.iter().any(|&f| f == u32::MAX) {
            return Err(Error::Structure("walk missing from face grouping".into()));
        }
        // Component/face incidence must form a tree: that is exactly the
        // sphere condition v - e + f = 1 + c for the assembled embedding.
        let ncomp = component_of.iter().copied().max().map_or(0, |m| m + 1) as usize;
        if nw != ncomp + faces.len() - 1 {
            return Err(Error::Structure(
                "face grouping does not satisfy the sphere Euler relation".into(),
            ));
        }
        // Connectivity of the incidence graph.
        {
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); ncomp + faces.len()];
            for (w, walk) in walks.iter().enumerate() {
                let c = match walk {
                    Walk::Closed(ds) => component_of[map.origin(ds[0]) as usize],
                    Walk::Isolated(v) => component_of[*v as usize],
                } as usize;
                let f = ncomp + face_of_walk[w] as usize;
                adj[c].push(f);
                adj[f].push(c);
            }
            let total = ncomp + faces.len();
            let mut seen = vec![false; total];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut cnt = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        cnt += 1;
                        stack.push(y);
                    }
                }
            }
            if cnt != total {
                return Err(Error::Structure(
                    "face grouping nests components inconsistently".into(),
                ));
            }
        }
        let mut walk_of_dart = vec![u32::MAX; map.num_darts()];
        let mut walk_of_isolated = FxHashMap::default();
        for (w, walk) in walks.iter().enumerate() {
            match walk {
                Walk::Closed(ds) => {
                    for &d in ds {
                        walk_of_dart[d as usize] = w as u32;
                    }
                }
                Walk::Isolated(v) => {
                    walk_of_isolated.insert(*v, w as u32);
                }
            }
        }
        Ok(PlaneGraph {
            names,
            map,
            endpoints,
            edge_index,
            walks,
            walk_of_dart,
            walk_of_isolated,
            faces,
            face_of_walk,
            component_of,
            outer_face: None,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.endpoints.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as VertexId)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn map(&self) -> &RotationMap {
        &self.map
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.endpoints[e as usize]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.endpoints
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.map.degree(v)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.map.rotation(v).iter().map(move |&d| self.map.head(d))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn walk_of_dart(&self, d: Dart) -> u32 {
        self.walk_of_dart[d as usize]
    }

    pub fn face_of_dart(&self, d: Dart) -> FaceId {
        self.face_of_walk[self.walk_of_dart[d as usize] as usize]
    }

    pub fn face_of_walk(&self, w: u32) -> FaceId {
        self.face_of_walk[w as usize]
    }

    pub fn walk_of_isolated(&self, v: VertexId) -> Option<u32> {
        self.walk_of_isolated.get(&v).copied()
    }

    pub fn component_of(&self, v: VertexId) -> u32 {
        self.component_of[v as usize]
    }

    pub fn num_components(&self) -> usize {
        self.component_of.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    pub fn outer_face(&self) -> Option<FaceId> {
        self.outer_face
    }

    pub fn set_outer_face(&mut self, f: FaceId) {
        self.outer_face = Some(f);
    }

    /// Degree of a face: darts over all its boundary walks. Bridges count
    /// twice since both their darts lie on the same walk.
    pub fn face_degree_of(&self, f: FaceId) -> usize {
        self.faces[f as usize]
            .walks
            .iter()
            .map(|&w| self.walks[w as usize].dart_len())
            .sum()
    }

    /// Maximum face degree of the graph.
    pub fn face_degree(&self) -> usize {
        (0..self.faces.len() as u32)
            .map(|f| self.face_degree_of(f))
            .max()
            .unwrap_or(0)
    }

    /// Vertices incident to a face, deduplicated, ascending.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        let mut vs = Vec::new();
        for &w in &self.faces[f as usize].walks {
            match &self.walks[w as usize] {
                Walk::Closed(ds) => {
                    for &d in ds {
                        vs.push(self.map.origin(d));
                    }
                }
                Walk::Isolated(v) => vs.push(*v),
            }
        }
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// True when `e` is a bridge: both darts lie on the same facial walk.
    pub fn is_bridge(&self, e: EdgeId) -> bool {
        self.walk_of_dart[dart(e, 0) as usize] == self.walk_of_dart[dart(e, 1) as usize]
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1 && self.num_vertices() > 0
    }
}

fn default_face_groups(map: &RotationMap, walks: &[Walk], component_of: &[u32]) -> Vec<Vec<u32>> {
    let ncomp = component_of.iter().copied().max().map_or(0, |m| m + 1) as usize;
    if ncomp <= 1 {
        return (0..walks.len() as u32).map(|w| vec![w]).collect();
    }
    let comp_of_walk = |w: &Walk| -> u32 {
        match w {
            Walk::Closed(ds) => component_of[map.origin(ds[0]) as usize],
            Walk::Isolated(v) => component_of[*v as usize],
        }
    };
    // First walk of each component, in trace order.
    let mut first_walk = vec![u32::MAX; ncomp];
    for (i, w) in walks.iter().enumerate() {
        let c = comp_of_walk(w) as usize;
        if first_walk[c] == u32::MAX {
            first_walk[c] = i as u32;
        }
    }
    let ambient_component = comp_of_walk(&walks[0]);
    let mut groups: Vec<Vec<u32>> = Vec::new();
    let mut ambient = vec![0u32]; // walk 0 hosts every other component
    for (i, w) in walks.iter().enumerate() {
        let i = i as u32;
        if i == 0 {
            continue;
        }
        let c = comp_of_walk(w);
        if c != ambient_component && first_walk[c as usize] == i {
            ambient.push(i);
        } else {
            groups.push(vec![i]);
        }
    }
    groups.insert(0, ambient);
    groups
}

/// Edge weighting by edge id. Weight `d + 1` marks edges useless for a
/// diameter-`d` target.
#[derive(Clone, Debug)]
pub struct EdgeWeighting {
    pub w: Vec<u64>,
}

impl EdgeWeighting {
    pub fn uniform(g: &PlaneGraph, value: u64) -> Self {
        EdgeWeighting {
            w: vec![value; g.num_edges()],
        }
    }

    pub fn of(&self, e: EdgeId) -> u64 {
        self.w[e as usize]
    }
}

/// Shortest weighted distance between two vertices; `INF` when disconnected.
/// Zero-weight edges are allowed, so this is Dijkstra rather than BFS.
pub fn weighted_distance(g: &PlaneGraph, w: &EdgeWeighting, x: VertexId, y: VertexId) -> u64 {
    let dist = dijkstra(g, w, x);
    dist[y as usize]
}

pub fn distances_from(g: &PlaneGraph, w: &EdgeWeighting, x: VertexId) -> Vec<u64> {
    dijkstra(g, w, x)
}

fn dijkstra(g: &PlaneGraph, w: &EdgeWeighting, src: VertexId) -> Vec<u64> {
    let n = g.num_vertices();
    let mut dist = vec![INF; n];
    let mut heap: BinaryHeap<(std::cmp::Reverse<u64>, u32)> = BinaryHeap::new();
    dist[src as usize] = 0;
    heap.push((std::cmp::Reverse(0), src));
    while let Some((std::cmp::Reverse(du), u)) = heap.pop() {
        if du > dist[u as usize] {
            continue;
        }
        for &d in g.map.rotation(u) {
            let v = g.map.head(d);
            let nd = du.saturating_add(w.of(edge_of(d)));
            if nd < dist[v as usize] {
                dist[v as usize] = nd;
                heap.push((std::cmp::Reverse(nd), v));
            }
        }
    }
    dist
}

/// Maximum weighted distance over all vertex pairs; `INF` when disconnected.
pub fn weighted_diameter(g: &PlaneGraph, w: &EdgeWeighting) -> u64 {
    let n = g.num_vertices();
    if n == 0 {
        return 0;
    }
    let mut best = 0u64;
    for x in 0..n as u32 {
        let dist = dijkstra(g, w, x);
        for &dv in &dist {
            if dv == INF {
                return INF;
            }
            best = best.max(dv);
        }
    }
    best
}

/// Unweighted diameter.
pub fn diameter(g: &PlaneGraph) -> u64 {
    weighted_diameter(g, &EdgeWeighting::uniform(g, 1))
}

/// True iff `|V| >= 4` and no pair of vertices disconnects the graph.
/// Decided with unit-vertex-capacity max-flow probes.
pub fn is_3_connected(g: &PlaneGraph) -> bool {
    vertex_connectivity_at_least(g, 3)
}

/// Decides whether the vertex connectivity is at least `k` (k <= 3 is all we
/// need, but the routine is general). Requires |V| >= k + 1.
pub fn vertex_connectivity_at_least(g: &PlaneGraph, k: usize) -> bool {
    let n = g.num_vertices();
    if n < k + 1 {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    if (0..n as u32).any(|v| g.degree(v) < k) {
        return false;
    }
    // Any cut of size < k either avoids v0 (then a flow probe from v0 finds
    // it) or contains v0 (then a probe from one of its neighbors finds it).
    let v0 = (0..n as u32).min_by_key(|&v| g.degree(v)).unwrap();
    let mut sources = vec![v0];
    sources.extend(g.neighbors(v0));
    for s in sources {
        let mut forbidden: Vec<VertexId> = g.neighbors(s).collect();
        forbidden.push(s);
        for t in 0..n as u32 {
            if forbidden.contains(&t) {
                continue;
            }
            if vertex_flow(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Max-flow with unit vertex capacities between s and t, stopping at `cap`.
fn vertex_flow(g: &PlaneGraph, s: VertexId, t: VertexId, cap: usize) -> usize {
    // Split every vertex v into v_in (2v) and v_out (2v+1).
    let n = g.num_vertices();
    let mut flow = 0usize;
    // residual adjacency as a dense successor test is too slow; store edges.
    // Node count 2n; arcs: v_in->v_out (cap 1) and for each edge both
    // directions between endpoints' out/in nodes.
    let mut arcs: Vec<(u32, u32)> = Vec::new(); // paired: i and i^1 are reverse
    let mut head: Vec<Vec<u32>> = vec![Vec::new(); 2 * n];
    let mut cap_of: Vec<u8> = Vec::new();
    let add = |arcs: &mut Vec<(u32, u32)>,
                   head: &mut Vec<Vec<u32>>,
                   cap_of: &mut Vec<u8>,
                   a: u32,
                   b: u32,
                   c: u8| {
        head[a as usize].push(arcs.len() as u32);
        arcs.push((a, b));
        cap_of.push(c);
        head[b as usize].push(arcs.len() as u32);
        arcs.push((b, a));
        cap_of.push(0);
    };
    for v in 0..n as u32 {
        let c = if v == s || v == t { cap as u8 } else { 1 };
        add(&mut arcs, &mut head, &mut cap_of, 2 * v, 2 * v + 1, c);
    }
    for &(u, v) in g.edges() {
        add(&mut arcs, &mut head, &mut cap_of, 2 * u + 1, 2 * v, 1);
        add(&mut arcs, &mut head, &mut cap_of, 2 * v + 1, 2 * u, 1);
    }
    let src = 2 * s + 1;
    let dst = 2 * t;
    while flow < cap {
        // BFS for an augmenting path.
        let mut pred: Vec<u32> = vec![u32::MAX; 2 * n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(src);
        let mut reached = false;
        'bfs: while let Some(x) = queue.pop_front() {
            for &ai in &head[x as usize] {
                let (a, b) = arcs[ai as usize];
                if a != x || cap_of[ai as usize] == 0 {
                    continue;
                }
                if pred[b as usize] != u32::MAX || b == src {
                    continue;
                }
                pred[b as usize] = ai;
                if b == dst {
                    reached = true;
                    break 'bfs;
                }
                queue.push_back(b);
            }
        }
        if !reached {
            break;
        }
        let mut x = dst;
        while x != src {
            let ai = pred[x as usize];
            cap_of[ai as usize] -= 1;
            cap_of[(ai ^ 1) as usize] += 1;
            x = arcs[ai as usize].0;
        }
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn triangle_two_faces_of_degree_three() {
        let g = cycle(3);
        assert_eq!(g.num_faces(), 2);
        assert_eq!(g.face_degree_of(0), 3);
        assert_eq!(g.face_degree_of(1), 3);
    }

    #[test]
    fn single_edge_one_face_of_degree_two() {
        let g = path(2);
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.face_degree(), 2);
    }

    #[test]
    fn cube_has_six_square_faces() {
        let g = cube();
        assert_eq!(g.num_faces(), 6);
        for f in 0..6 {
            assert_eq!(g.face_degree_of(f), 4);
        }
        assert_eq!(g.face_degree(), 4);
    }

    #[test]
    fn c4_face_degree() {
        assert_eq!(cycle(4).face_degree(), 4);
    }

    #[test]
    fn k4_face_degree() {
        assert_eq!(k4().face_degree(), 3);
    }

    #[test]
    fn face_degrees_sum_to_twice_edges() {
        for g in [cycle(3), cycle(4), k4(), cube(), path(2), path(5), star(4)] {
            let total: usize = (0..g.num_faces() as u32).map(|f| g.face_degree_of(f)).sum();
            assert_eq!(total, 2 * g.num_edges());
        }
    }

    #[test]
    fn path_distances() {
        let g = path(3);
        let w = EdgeWeighting::uniform(&g, 1);
        let a = g.vertex_id("v0").unwrap();
        let c = g.vertex_id("v2").unwrap();
        assert_eq!(weighted_distance(&g, &w, a, c), 2);
        assert_eq!(weighted_distance(&g, &w, a, a), 0);
        assert_eq!(weighted_diameter(&g, &w), 2);
    }

    #[test]
    fn zero_weight_triangle_distance() {
        // w(ab)=0, w(bc)=1, w(ac)=4: dist(a,c) = 1 through the 0-edge.
        let g = cycle(3);
        let mut w = EdgeWeighting::uniform(&g, 0);
        let a = g.vertex_id("v0").unwrap();
        let b = g.vertex_id("v1").unwrap();
        let c = g.vertex_id("v2").unwrap();
        w.w[g.edge_id(a, b).unwrap() as usize] = 0;
        w.w[g.edge_id(b, c).unwrap() as usize] = 1;
        w.w[g.edge_id(a, c).unwrap() as usize] = 4;
        assert_eq!(weighted_distance(&g, &w, a, c), 1);
        // pairwise distances are {0, 1, 1} and the diameter is 1
        assert_eq!(weighted_diameter(&g, &w), 1);
    }

    #[test]
    fn disconnected_diameter_is_infinite() {
        let g = PlaneGraph::new(
            vec!["a".into(), "b".into()],
            vec![vec![], vec![]],
            None,
        )
        .unwrap();
        assert_eq!(diameter(&g), INF);
    }

    #[test]
    fn three_connectivity() {
        assert!(is_3_connected(&k4()));
        assert!(!is_3_connected(&cycle(4)));
        assert!(!is_3_connected(&path(2)));
        assert!(is_3_connected(&cube()));
    }

    #[test]
    fn rejects_loops_parallels_and_inconsistency() {
        assert!(PlaneGraph::new(vec!["a".into()], vec![vec![0]], None).is_err());
        assert!(PlaneGraph::new(
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![0, 0]],
            None
        )
        .is_err());
        assert!(PlaneGraph::new(
            vec!["a".into(), "b".into()],
            vec![vec![1], vec![]],
            None
        )
        .is_err());
    }

    #[test]
    fn rejects_torus_embedding() {
        // K4 with all rotations in index order is not spherical.
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        let names = (0..4).map(|i| format!("v{i}")).collect();
        assert!(PlaneGraph::new(names, rot, None).is_err());
    }

    #[test]
    fn two_disjoint_edges_share_one_face() {
        let g = PlaneGraph::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![vec![1], vec![0], vec![3], vec![2]],
            None,
        )
        .unwrap();
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.faces()[0].walks.len(), 2);
        assert_eq!(g.face_degree(), 4);
    }

    #[test]
    fn isolated_vertices_share_ambient_face() {
        let g = PlaneGraph::new(
            vec!["a".into(), "b".into()],
            vec![vec![], vec![]],
            None,
        )
        .unwrap();
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.faces()[0].walks.len(), 2);
        assert_eq!(g.face_degree(), 0);
    }
}

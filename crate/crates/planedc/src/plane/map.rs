//! Dart-level rotation systems.
//!
//! Every embedding in this crate is stored combinatorially: each vertex keeps
//! the clockwise cyclic order of its incident darts. Faces are recovered by
//! tracing `twin`-then-rotation-successor orbits, so no coordinates are ever
//! needed. The map layer permits parallel edges and loops (the medial
//! construction and edge contractions need them); the simple-graph wrapper
//! lives in `plane::mod`.

use std::collections::VecDeque;

/// Directed half of an edge. Edge `e` owns darts `2e` and `2e + 1`.
pub type Dart = u32;

pub const fn twin(d: Dart) -> Dart {
    d ^ 1
}

pub const fn edge_of(d: Dart) -> u32 {
    d >> 1
}

pub const fn dart(e: u32, side: u32) -> Dart {
    (e << 1) | side
}

/// Rotation system over darts. `rot[v]` lists the darts leaving `v` in
/// clockwise order; `origin[d]` is the vertex the dart leaves.
#[derive(Clone, Debug)]
pub struct RotationMap {
    rot: Vec<Vec<Dart>>,
    origin: Vec<u32>,
}

impl RotationMap {
    pub fn new(num_vertices: usize) -> Self {
        RotationMap {
            rot: vec![Vec::new(); num_vertices],
            origin: Vec::new(),
        }
    }

    /// Builds a map from per-vertex dart lists. `origin` must match: every
    /// dart appears exactly once, in the list of its origin.
    pub fn from_rotations(rot: Vec<Vec<Dart>>, origin: Vec<u32>) -> Result<Self, String> {
        let m = RotationMap { rot, origin };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), String> {
        let nd = self.origin.len();
        if nd % 2 != 0 {
            return Err("odd number of darts".into());
        }
        let mut seen = vec![false; nd];
        for (v, list) in self.rot.iter().enumerate() {
            for &d in list {
                if d as usize >= nd {
                    return Err(format!("dart {d} out of range"));
                }
                if seen[d as usize] {
                    return Err(format!("dart {d} listed twice"));
                }
                seen[d as usize] = true;
                if self.origin[d as usize] != v as u32 {
                    return Err(format!("dart {d} listed at vertex {v} but origin differs"));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("dart missing from rotations".into());
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.rot.len()
    }

    pub fn num_darts(&self) -> usize {
        self.origin.len()
    }

    pub fn num_edges(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn origin(&self, d: Dart) -> u32 {
        self.origin[d as usize]
    }

    pub fn head(&self, d: Dart) -> u32 {
        self.origin[twin(d) as usize]
    }

    pub fn endpoints(&self, e: u32) -> (u32, u32) {
        (self.origin(dart(e, 0)), self.origin(dart(e, 1)))
    }

    pub fn rotation(&self, v: u32) -> &[Dart] {
        &self.rot[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.rot[v as usize].len()
    }

    /// Clockwise successor of `d` around its origin.
    pub fn rot_next(&self, d: Dart) -> Dart {
        let list = &self.rot[self.origin[d as usize] as usize];
        let i = list.iter().position(|&x| x == d).expect("dart in rotation");
        list[(i + 1) % list.len()]
    }

    /// Next dart along the face walk containing `d`: jump to the twin, then
    /// take the clockwise successor at the twin's origin.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(twin(d))
    }

    /// Traces all face walks. Every dart lands in exactly one walk. Isolated
    /// vertices produce no walk here; callers account for them separately.
    pub fn face_walks(&self) -> Vec<Vec<Dart>> {
        let nd = self.num_darts();
        let mut seen = vec![false; nd];
        let mut walks = Vec::new();
        for d0 in 0..nd as u32 {
            if seen[d0 as usize] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = d0;
            loop {
                seen[d as usize] = true;
                walk.push(d);
                d = self.face_next(d);
                if d == d0 {
                    break;
                }
            }
            walks.push(walk);
        }
        walks
    }

    /// Vertex sets of the connected components, in discovery order by
    /// smallest vertex index. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut verts = Vec::new();
            let mut queue = VecDeque::new();
            comp[s] = id;
            queue.push_back(s as u32);
            while let Some(v) = queue.pop_front() {
                verts.push(v);
                for &d in self.rotation(v) {
                    let u = self.head(d);
                    if comp[u as usize] == usize::MAX {
                        comp[u as usize] = id;
                        queue.push_back(u);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out
    }

    pub fn component_ids(&self) -> Vec<u32> {
        let comps = self.components();
        let mut id = vec![0u32; self.num_vertices()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                id[v as usize] = i as u32;
            }
        }
        id
    }

    /// Checks the per-component Euler relation `v - e + f = 2`, counting an
    /// isolated vertex as one empty face walk. A rotation system satisfies it
    /// exactly when the embedding is spherical.
    pub fn is_spherical(&self) -> bool {
        let comp = self.component_ids();
        let ncomp = self.components().len();
        let mut v = vec![0i64; ncomp];
        let mut e = vec![0i64; ncomp];
        let mut f = vec![0i64; ncomp];
        for (u, &c) in comp.iter().enumerate() {
            v[c as usize] += 1;
            if self.rot[u].is_empty() {
                f[c as usize] += 1; // empty walk around an isolated vertex
            }
        }
        for eid in 0..self.num_edges() as u32 {
            let (a, _) = self.endpoints(eid);
            e[comp[a as usize] as usize] += 1;
        }
        for walk in self.face_walks() {
            let c = comp[self.origin(walk[0]) as usize];
            f[c as usize] += 1;
        }
        (0..ncomp).all(|c| v[c] - e[c] + f[c] == 2)
    }
}

/// Mutable construction buffer for rotation maps. Darts are appended in
/// pairs; rotations are assembled afterwards.
#[derive(Clone, Debug, Default)]
pub struct MapBuilder {
    pub origin: Vec<u32>,
    pub rot: Vec<Vec<Dart>>,
}

impl MapBuilder {
    pub fn new(num_vertices: usize) -> Self {
        MapBuilder {
            origin: Vec::new(),
            rot: vec![Vec::new(); num_vertices],
        }
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.rot.push(Vec::new());
        (self.rot.len() - 1) as u32
    }

    /// Allocates the dart pair for edge `{u, v}` without placing it in any
    /// rotation. Returns the edge id.
    pub fn add_edge(&mut self, u: u32, v: u32) -> u32 {
        let e = (self.origin.len() / 2) as u32;
        self.origin.push(u);
        self.origin.push(v);
        e
    }

    pub fn finish(self) -> Result<RotationMap, String> {
        RotationMap::from_rotations(self.rot, self.origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> RotationMap {
        // vertices 0,1,2; edges 0:{0,1} 1:{1,2} 2:{2,0}
        let mut b = MapBuilder::new(3);
        let e0 = b.add_edge(0, 1);
        let e1 = b.add_edge(1, 2);
        let e2 = b.add_edge(2, 0);
        b.rot[0] = vec![dart(e0, 0), dart(e2, 1)];
        b.rot[1] = vec![dart(e1, 0), dart(e0, 1)];
        b.rot[2] = vec![dart(e2, 0), dart(e1, 1)];
        b.finish().unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let m = triangle();
        assert_eq!(m.face_walks().len(), 2);
        assert!(m.is_spherical());
    }

    #[test]
    fn single_edge_one_walk_of_length_two() {
        let mut b = MapBuilder::new(2);
        let e = b.add_edge(0, 1);
        b.rot[0] = vec![dart(e, 0)];
        b.rot[1] = vec![dart(e, 1)];
        let m = b.finish().unwrap();
        let walks = m.face_walks();
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].len(), 2);
        assert!(m.is_spherical());
    }

    #[test]
    fn rejects_misplaced_dart() {
        let mut b = MapBuilder::new(2);
        let e = b.add_edge(0, 1);
        b.rot[0] = vec![dart(e, 0), dart(e, 1)];
        b.rot[1] = vec![];
        assert!(b.finish().is_err());
    }
}

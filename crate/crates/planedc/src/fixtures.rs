//! Small named plane graphs used by tests and examples.

use crate::plane::{PlaneGraph, VertexId};

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

pub fn build(n: usize, rotation: Vec<Vec<VertexId>>) -> PlaneGraph {
    PlaneGraph::new(names(n), rotation, None).expect("fixture must be a valid plane graph")
}

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> PlaneGraph {
    let rot = (0..n)
        .map(|i| {
            vec![
                ((i + n - 1) % n) as VertexId,
                ((i + 1) % n) as VertexId,
            ]
        })
        .collect();
    build(n, rot)
}

/// Path on n >= 2 vertices.
pub fn path(n: usize) -> PlaneGraph {
    let rot = (0..n)
        .map(|i| {
            let mut r = Vec::new();
            if i > 0 {
                r.push((i - 1) as VertexId);
            }
            if i + 1 < n {
                r.push((i + 1) as VertexId);
            }
            r
        })
        .collect();
    build(n, rot)
}

/// Star with k leaves; vertex 0 is the center.
pub fn star(k: usize) -> PlaneGraph {
    let mut rot = vec![(1..=k as VertexId).collect::<Vec<_>>()];
    rot.extend((0..k).map(|_| vec![0]));
    build(k + 1, rot)
}

/// K4 in its planar embedding: 0,1,2 outer triangle, 3 in the middle.
pub fn k4() -> PlaneGraph {
    build(
        4,
        vec![vec![2, 3, 1], vec![0, 3, 2], vec![1, 3, 0], vec![1, 0, 2]],
    )
}

/// The cube (standard embedding): 0..3 outer square, 4..7 inner square.
pub fn cube() -> PlaneGraph {
    build(
        8,
        vec![
            vec![3, 4, 1],
            vec![0, 5, 2],
            vec![1, 6, 3],
            vec![2, 7, 0],
            vec![0, 7, 5],
            vec![1, 4, 6],
            vec![5, 7, 2],
            vec![4, 3, 6],
        ],
    )
}

/// Two disjoint edges sharing the ambient face.
pub fn two_disjoint_edges() -> PlaneGraph {
    build(4, vec![vec![1], vec![0], vec![3], vec![2]])
}

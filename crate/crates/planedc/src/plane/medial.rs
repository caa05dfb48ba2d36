//! Medial construction.
//!
//! The medial of a plane graph puts one vertex on every edge and joins edges
//! that are consecutive around a face. It is 4-regular and generally has
//! parallel edges (already for cycles), so the result is a raw rotation map
//! rather than a simple `PlaneGraph`. Decomposition engines work on the
//! radial/medial side; here we only need the construction itself.

use super::{map::MapBuilder, PlaneGraph};
use crate::error::{Error, Result};
use crate::plane::map::{dart, edge_of, Dart, RotationMap};

/// Builds the medial map. Vertex `e` of the result sits on edge `e` of `g`.
/// Rejects disconnected inputs and inputs with bridges (a bridge has no
/// well-defined pair of distinct sides to route the medial through).
pub fn medial_construction(g: &PlaneGraph) -> Result<RotationMap> {
    if !g.is_connected() {
        return Err(Error::Precondition("medial requires a connected graph".into()));
    }
    if g.num_edges() == 0 {
        return Err(Error::Precondition("medial requires at least one edge".into()));
    }
    for e in 0..g.num_edges() as u32 {
        if g.is_bridge(e) {
            let (u, v) = g.endpoints(e);
            return Err(Error::Precondition(format!(
                "medial undefined for bridges: {{{}, {}}}",
                g.name(u),
                g.name(v)
            )));
        }
    }
    let mut b = MapBuilder::new(g.num_edges());
    // One medial edge per corner (consecutive dart pair in a face walk).
    // corner_edge[d] is the medial edge of the corner whose first dart is d.
    let nd = g.map().num_darts();
    let mut corner_edge: Vec<u32> = vec![u32::MAX; nd];
    for w in g.walks() {
        if let super::Walk::Closed(ds) = w {
            for (i, &d) in ds.iter().enumerate() {
                let d2 = ds[(i + 1) % ds.len()];
                corner_edge[d as usize] = b.add_edge(edge_of(d), edge_of(d2));
            }
        }
    }
    // Around medial vertex e with darts d0, d1 the four corners appear in the
    // cyclic order: after-d0, before-d0, after-d1, before-d1.
    let face_prev = |d: Dart| -> Dart {
        // inverse of face_next
        let walk = match &g.walks()[g.walk_of_dart(d) as usize] {
            super::Walk::Closed(ds) => ds,
            super::Walk::Isolated(_) => unreachable!(),
        };
        let i = walk.iter().position(|&x| x == d).unwrap();
        walk[(i + walk.len() - 1) % walk.len()]
    };
    for e in 0..g.num_edges() as u32 {
        let d0 = dart(e, 0);
        let d1 = dart(e, 1);
        let after = |d: Dart| corner_edge[d as usize];
        let before = |d: Dart| corner_edge[face_prev(d) as usize];
        for me in [after(d0), before(d0), after(d1), before(d1)] {
            let (a, bb) = (b.origin[2 * me as usize], b.origin[2 * me as usize + 1]);
            let side = if a == e && bb == e {
                // parallel corner edge between the same pair; use whichever
                // side is not placed yet
                u32::from(b.rot[e as usize].contains(&dart(me, 0)))
            } else if a == e {
                0
            } else {
                1
            };
            b.rot[e as usize].push(dart(me, side));
        }
    }
    let m = b.finish().map_err(Error::Structure)?;
    debug_assert!(m.is_spherical(), "medial of a plane graph must be spherical");
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn medial_of_triangle() {
        let m = medial_construction(&fixtures::cycle(3)).unwrap();
        assert_eq!(m.num_vertices(), 3);
        assert!((0..3).all(|v| m.degree(v) == 4));
        assert!(m.is_spherical());
        // doubled face structure: 3 + 2 faces would be wrong; medial of C3
        // has 2 triangle faces and 3 lens faces
        assert_eq!(m.face_walks().len(), 5);
    }

    #[test]
    fn medial_of_k4() {
        let m = medial_construction(&fixtures::k4()).unwrap();
        assert_eq!(m.num_vertices(), 6);
        assert!((0..6).all(|v| m.degree(v) == 4));
        assert!(m.is_spherical());
    }

    #[test]
    fn medial_rejects_bridges() {
        assert!(medial_construction(&fixtures::path(2)).is_err());
        assert!(medial_construction(&fixtures::star(3)).is_err());
    }
}

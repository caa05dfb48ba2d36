//! Edge deletion and contraction on rotation maps.
//!
//! Contraction splices the rotation of one endpoint into the other at the
//! contracted corner, which is exactly the minor operation on embeddings.
//! Loops that appear when a parallel pair collapses are contracted away as
//! deletions.

use super::map::{dart, twin, Dart, RotationMap};

/// Applies deletions, then contractions (by ascending edge id). Returns the
/// resulting map, the vertex mapping (original -> surviving vertex id) and
/// the edge mapping (original -> surviving edge id, `None` if removed).
pub fn delete_and_contract(
    map: &RotationMap,
    delete: &[bool],
    contract: &[bool],
) -> (RotationMap, Vec<u32>, Vec<Option<u32>>) {
    let ne = map.num_edges();
    let nv = map.num_vertices();
    let mut rot: Vec<Vec<Dart>> = (0..nv as u32).map(|v| map.rotation(v).to_vec()).collect();
    let mut origin: Vec<u32> = (0..map.num_darts() as u32)
        .map(|d| map.origin(d))
        .collect();
    let mut dead = vec![false; ne];

    let mut remove_edge = |rot: &mut Vec<Vec<Dart>>, origin: &mut Vec<u32>, e: u32| {
        for side in 0..2 {
            let d = dart(e, side);
            let v = origin[d as usize] as usize;
            rot[v].retain(|&x| x != d);
        }
    };

    for e in 0..ne as u32 {
        if delete[e as usize] && !dead[e as usize] {
            remove_edge(&mut rot, &mut origin, e);
            dead[e as usize] = true;
        }
    }
    for e in 0..ne as u32 {
        if !contract[e as usize] || dead[e as usize] {
            continue;
        }
        let u = origin[dart(e, 0) as usize];
        let v = origin[dart(e, 1) as usize];
        if u == v {
            // became a loop through earlier contractions; contracting a loop
            // is just removing it
            remove_edge(&mut rot, &mut origin, e);
            dead[e as usize] = true;
            continue;
        }
        let pu = rot[u as usize].iter().position(|&x| x == dart(e, 0)).unwrap();
        let pv = rot[v as usize].iter().position(|&x| x == dart(e, 1)).unwrap();
        let mut merged = Vec::with_capacity(rot[u as usize].len() + rot[v as usize].len() - 2);
        merged.extend_from_slice(&rot[u as usize][..pu]);
        merged.extend_from_slice(&rot[v as usize][pv + 1..]);
        merged.extend_from_slice(&rot[v as usize][..pv]);
        merged.extend_from_slice(&rot[u as usize][pu + 1..]);
        for &d in &rot[v as usize] {
            origin[d as usize] = u;
        }
        origin[dart(e, 0) as usize] = u; // keep origin defined
        origin[dart(e, 1) as usize] = u;
        rot[v as usize] = Vec::new();
        rot[u as usize] = merged;
        dead[e as usize] = true;
    }

    // union-find style vertex map: a vertex survives iff it still owns its
    // darts or was never merged away; merged vertices point at their target
    let mut vertex_map: Vec<u32> = (0..nv as u32).collect();
    // recompute by following origins: a merged vertex has an empty rotation
    // and some dart elsewhere now claims origin u. Track via contraction
    // replay is simpler: darts of contracted edges both sit at the survivor.
    for e in 0..ne as u32 {
        if contract[e as usize] {
            let survivor = origin[dart(e, 0) as usize];
            let (a, b) = map.endpoints(e);
            // whichever endpoint is not the survivor maps to it (transitively
            // resolved below)
            if vertex_map[a as usize] == a && a != survivor {
                vertex_map[a as usize] = survivor;
            }
            if vertex_map[b as usize] == b && b != survivor {
                vertex_map[b as usize] = survivor;
            }
        }
    }
    for v in 0..nv {
        let mut x = vertex_map[v];
        while vertex_map[x as usize] != x {
            x = vertex_map[x as usize];
        }
        vertex_map[v] = x;
    }

    // compact: renumber surviving vertices and edges
    let mut new_vid = vec![u32::MAX; nv];
    let mut next = 0u32;
    for v in 0..nv {
        if vertex_map[v] == v as u32 {
            new_vid[v] = next;
            next += 1;
        }
    }
    for v in 0..nv {
        let root = vertex_map[v] as usize;
        vertex_map[v] = new_vid[root];
    }
    let mut edge_map: Vec<Option<u32>> = vec![None; ne];
    let mut new_origin = Vec::new();
    let mut kept = 0u32;
    for e in 0..ne as u32 {
        if dead[e as usize] {
            continue;
        }
        edge_map[e as usize] = Some(kept);
        new_origin.push(new_vid[origin[dart(e, 0) as usize] as usize]);
        new_origin.push(new_vid[origin[dart(e, 1) as usize] as usize]);
        kept += 1;
    }
    let mut new_rot: Vec<Vec<Dart>> = vec![Vec::new(); next as usize];
    for v in 0..nv {
        if new_vid[v] == u32::MAX {
            continue;
        }
        let list = rot[v]
            .iter()
            .map(|&d| dart(edge_map[(d >> 1) as usize].unwrap(), d & 1))
            .collect();
        new_rot[new_vid[v] as usize] = list;
    }
    let map2 = RotationMap::from_rotations(new_rot, new_origin)
        .expect("surgery preserves rotation validity");
    (map2, vertex_map, edge_map)
}

/// Contracting any spanning set of edges of a spherical map keeps it
/// spherical; used as a sanity check by callers.
pub fn contracted_is_spherical(map: &RotationMap, contract: &[bool]) -> bool {
    let (m, _, _) = delete_and_contract(map, &vec![false; map.num_edges()], contract);
    m.is_spherical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn contract_triangle_edge() {
        let g = fixtures::cycle(3);
        let mut contract = vec![false; 3];
        contract[0] = true;
        let (m, vmap, emap) = delete_and_contract(g.map(), &vec![false; 3], &contract);
        assert_eq!(m.num_vertices(), 2);
        // the remaining two edges become a parallel pair
        assert_eq!(m.num_edges(), 2);
        assert!(m.is_spherical());
        assert_eq!(emap.iter().filter(|e| e.is_some()).count(), 2);
        let roots: std::collections::HashSet<u32> = vmap.iter().copied().collect();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn delete_then_contract_k4() {
        let g = fixtures::k4();
        let ne = g.num_edges();
        let mut delete = vec![false; ne];
        delete[0] = true;
        let mut contract = vec![false; ne];
        contract[ne - 1] = true;
        let (m, _, _) = delete_and_contract(g.map(), &delete, &contract);
        assert!(m.is_spherical());
        assert_eq!(m.num_vertices(), 3);
        assert_eq!(m.num_edges(), 4);
    }

    #[test]
    fn contracting_parallel_pair_drops_loop() {
        // contract two triangle edges: the last edge collapses to a loop on
        // further contraction
        let g = fixtures::cycle(3);
        let (m, _, _) = delete_and_contract(g.map(), &vec![false; 3], &vec![true; 3]);
        assert_eq!(m.num_vertices(), 1);
        assert_eq!(m.num_edges(), 0);
        assert!(m.is_spherical());
    }
}

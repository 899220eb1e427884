//! Searches for a genus-one rotation system of the incidence graph of the
//! D_6 co-maximal hypergraph by simulated annealing on face count, and prints
//! it as JSON.
//!
//! cargo run --release -p comax-core --example d6_torus_search > crates/core/tests/data/d6_torus_rotation.json

use comax_core::embedding::{rotation_genus, trace_faces, RotationSystem};
use comax_core::hypergraph::{build_hypergraph, incidence_graph};
use comax_core::lattice::GroupParam;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let h = build_hypergraph(GroupParam::new(6).unwrap());
    let g = incidence_graph(&h).to_graph();
    let movable: Vec<usize> = (0..g.node_count()).filter(|&v| g.degree(v) >= 3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let faces = |r: &RotationSystem| trace_faces(&g, r).unwrap().len() as i64;

    for restart in 0.. {
        let mut rot = RotationSystem::sorted(&g);
        let mut score = faces(&rot);
        let mut temp = 2.0f64;
        for _ in 0..200_000 {
            if rotation_genus(&g, &rot) == Ok(1) {
                println!("{}", serde_json::to_string_pretty(&rot).unwrap());
                eprintln!("found after {restart} restarts");
                return;
            }
            let v = movable[rng.random_range(0..movable.len())];
            let d = g.degree(v);
            let (a, b) = (rng.random_range(0..d), rng.random_range(0..d));
            if a == b {
                continue;
            }
            rot.cycle_mut(v).swap(a, b);
            let next = faces(&rot);
            let accept = next >= score || rng.random::<f64>() < ((next - score) as f64 / temp).exp();
            if accept {
                score = next;
            } else {
                rot.cycle_mut(v).swap(a, b);
            }
            temp = (temp * 0.99995).max(0.05);
        }
    }
}

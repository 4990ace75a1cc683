//! Seed derivation: streams are pure functions of (master, label, index),
//! so replicas can run in any order and still reproduce.

use cpcm::rng::SeedTree;
use rand::Rng;

fn main() {
    let seeds = SeedTree::new(42);
    for replica in 0..3 {
        let mut rng = seeds.stream("dynamics", replica);
        let draws: Vec<u32> = (0..4).map(|_| rng.random_range(0..100)).collect();
        println!("dynamics[{replica}] {draws:?}");
    }
    let mut rng = SeedTree::new(42).stream("dynamics", 1);
    let again: Vec<u32> = (0..4).map(|_| rng.random_range(0..100)).collect();
    println!("dynamics[1] again {again:?}");
    let child = seeds.child("density");
    println!("child namespace master {} -> {}", seeds.master(), child.master());
}

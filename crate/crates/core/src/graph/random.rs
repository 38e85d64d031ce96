//! Seeded random graphs for property checks and demos.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices: a random recursive tree plus every other
/// pair independently with probability `p`, then a random relabelling.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for b in 1..n {
        for a in 0..b {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::new(n, edges).expect("simple by construction");
    g.relabel(&random_permutation(rng, n))
}

/// `count` connected graphs with orders in `min_n..=max_n` and densities
/// drawn uniformly from `[0.1, 0.7]`.
pub fn random_population(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.1..0.7);
            random_connected(&mut rng, n, p)
        })
        .collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// One `+1`/`-1` entry per edge.
pub fn random_signs<R: Rng>(rng: &mut R, m: usize) -> Vec<i8> {
    (0..m).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn population_is_connected_and_reproducible() {
        let a = random_population(7, 30, 2, 10);
        let b = random_population(7, 30, 2, 10);
        assert_eq!(a, b);
        assert!(a.iter().all(Graph::is_connected));
        assert!(a.iter().all(|g| (2..=10).contains(&g.n())));
    }
}

#![allow(dead_code)]

//! Independent generators of connected quartic graphs used to audit the
//! census.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specgap::graph::{canonical_cert, is_connected, is_k_regular, make_graph, CanonicalCert, Graph};
use std::collections::{HashMap, HashSet};

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1);
    for s in &mut with {
        s.insert(0, items[0]);
    }
    with.extend(subsets(&items[1..], k));
    with
}

/// One graph per isomorphism class of `k`-regular graphs on `n` vertices
/// (`k ≥ 1`): labelled graphs with vertex 0 adjacent to `1..=k`, filled
/// row by row, deduplicated by certificate.
pub fn regular_graphs(n: usize, k: usize) -> HashMap<CanonicalCert, Graph> {
    struct Fill {
        n: usize,
        k: usize,
        adj: Vec<Vec<bool>>,
        deg: Vec<usize>,
        out: HashMap<CanonicalCert, Graph>,
    }
    impl Fill {
        fn run(&mut self, u: usize) {
            if u == self.n {
                let adj = &self.adj;
                let edges: Vec<(usize, usize)> = (0..self.n)
                    .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
                    .filter(|&(a, b)| adj[a][b])
                    .collect();
                let g = make_graph(self.n, &edges).unwrap();
                self.out.entry(canonical_cert(&g)).or_insert(g);
                return;
            }
            let need = self.k - self.deg[u];
            let free: Vec<usize> = (u + 1..self.n).filter(|&w| self.deg[w] < self.k).collect();
            for chosen in subsets(&free, need) {
                for &w in &chosen {
                    self.adj[u][w] = true;
                    self.adj[w][u] = true;
                    self.deg[w] += 1;
                }
                self.deg[u] += need;
                self.run(u + 1);
                self.deg[u] -= need;
                for &w in &chosen {
                    self.adj[u][w] = false;
                    self.adj[w][u] = false;
                    self.deg[w] -= 1;
                }
            }
        }
    }
    let mut f = Fill { n, k, adj: vec![vec![false; n]; n], deg: vec![0; n], out: HashMap::new() };
    for v in 1..=k {
        f.adj[0][v] = true;
        f.adj[v][0] = true;
        f.deg[v] = 1;
    }
    f.deg[0] = k;
    f.run(1);
    f.out
}

/// Connected quartic graphs on `5 ≤ n ≤ 9` vertices as complements of
/// `(n - 5)`-regular graphs.
pub fn complement_oracle(n: usize) -> HashSet<CanonicalCert> {
    let k = n - 5;
    let base: Vec<Graph> =
        if k == 0 { vec![make_graph(n, &[]).unwrap()] } else { regular_graphs(n, k).into_values().collect() };
    base.iter().map(|g| g.complement()).filter(is_connected).map(|g| canonical_cert(&g)).collect()
}

/// Walks the quartic graphs on `start.n()` vertices by random
/// degree-preserving edge switches and returns the certificate of every
/// connected graph visited after each batch of switches.
pub fn switch_walk(start: &Graph, samples: usize, seed: u64) -> Vec<CanonicalCert> {
    let n = start.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = start.edges().to_vec();
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        for _ in 0..20 {
            let pick: Vec<(usize, usize)> = edges.choose_multiple(&mut rng, 2).copied().collect();
            let ((a, b), (c, d)) = (pick[0], pick[1]);
            let (c, d) = if rng.gen_bool(0.5) { (c, d) } else { (d, c) };
            let g = make_graph(n, &edges).unwrap();
            if a == c || a == d || b == c || b == d || g.has_edge(a, c) || g.has_edge(b, d) {
                continue;
            }
            edges.retain(|&e| e != (a.min(b), a.max(b)) && e != (c.min(d), c.max(d)));
            edges.push((a.min(c), a.max(c)));
            edges.push((b.min(d), b.max(d)));
        }
        let g = make_graph(n, &edges).unwrap();
        assert!(is_k_regular(&g, 4));
        if is_connected(&g) {
            out.push(canonical_cert(&g));
        }
    }
    out
}

//! Locating a gadget inside a quartic host and swapping it for another
//! gadget with the same vertex count and the same outside edges.

use super::ReplaceError;
use crate::blocks::Gadget;
use crate::graph::{make_graph, Graph};

/// All embeddings of `gadget` into `host` as an induced subgraph whose
/// vertices send exactly `gadget.outside[u]` edges out of the image.
/// `phi[u]` is the host vertex of gadget vertex `u`.
pub fn find_embeddings(gadget: &Gadget, host: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let k = gadget.n();
    let gadj = gadget.graph.adjacency();
    let hadj = host.adjacency();
    let order = bfs_order(&gadj);
    let mut found = Vec::new();
    let mut phi = vec![usize::MAX; k];
    let mut used = vec![false; host.n()];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        order: &[usize],
        gadget: &Gadget,
        gadj: &[Vec<usize>],
        host: &Graph,
        hadj: &[Vec<usize>],
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if found.len() >= limit {
            return;
        }
        if i == order.len() {
            found.push(phi.clone());
            return;
        }
        let u = order[i];
        let anchor = gadj[u].iter().find(|&&w| phi[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(&w) => hadj[phi[w]].clone(),
            None => (0..host.n()).collect(),
        };
        for v in candidates {
            if used[v] || hadj[v].len() != gadj[u].len() + gadget.outside[u] {
                continue;
            }
            let consistent = order[..i].iter().all(|&w| gadget.graph.has_edge(u, w) == host.has_edge(v, phi[w]));
            if !consistent {
                continue;
            }
            phi[u] = v;
            used[v] = true;
            rec(i + 1, order, gadget, gadj, host, hadj, phi, used, found, limit);
            used[v] = false;
            phi[u] = usize::MAX;
        }
    }
    rec(0, &order, gadget, &gadj, host, &hadj, &mut phi, &mut used, &mut found, limit);
    found
}

fn bfs_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Replaces the image of `old` under `phi` by `new`, whose vertex `u` takes
/// the host vertex `phi[u]`. Each rewire entry `(a, b, c)` moves the next
/// `c` outside edges of old vertex `a` (in increasing host order) to new
/// vertex `b`.
pub fn splice(
    host: &Graph,
    phi: &[usize],
    old: &Gadget,
    new: &Gadget,
    rewire: &[(usize, usize, usize)],
) -> Result<Graph, ReplaceError> {
    if old.n() != new.n() || phi.len() != old.n() {
        return Err(ReplaceError::SpliceFailed("gadget orders differ".into()));
    }
    let mut inside = vec![false; host.n()];
    for &v in phi {
        inside[v] = true;
    }
    let hadj = host.adjacency();
    let mut outside: Vec<std::collections::VecDeque<usize>> =
        phi.iter().map(|&v| hadj[v].iter().copied().filter(|&w| !inside[w]).collect()).collect();
    let mut edges: Vec<(usize, usize)> =
        host.edges().iter().copied().filter(|&(u, v)| !(inside[u] || inside[v])).collect();
    edges.extend(new.graph.edges().iter().map(|&(a, b)| (phi[a], phi[b])));
    let mut received = vec![0; new.n()];
    for &(a, b, c) in rewire {
        for _ in 0..c {
            let w = outside[a]
                .pop_front()
                .ok_or_else(|| ReplaceError::SpliceFailed(format!("old vertex {a} has too few outside edges")))?;
            edges.push((phi[b], w));
            received[b] += 1;
        }
    }
    if outside.iter().any(|q| !q.is_empty()) {
        return Err(ReplaceError::SpliceFailed("outside edges left unassigned".into()));
    }
    if received != new.outside {
        return Err(ReplaceError::SpliceFailed("new gadget degrees do not match".into()));
    }
    let g = make_graph(host.n(), &edges).map_err(|e| ReplaceError::SpliceFailed(e.to_string()))?;
    if g.edge_count() != edges.len() {
        return Err(ReplaceError::SpliceFailed("rewiring creates a multiple edge".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{assemble_names, gadget};
    use crate::graph::{canonical_cert, is_k_regular};

    #[test]
    fn finds_end_block_head() {
        let host = assemble_names(&["D_4", "M_0", "~D_0"]).unwrap();
        let h = gadget("H").unwrap();
        let emb = find_embeddings(&h, &host.graph, 10);
        assert!(!emb.is_empty());
        for phi in &emb {
            for &(a, b) in h.graph.edges() {
                assert!(host.graph.has_edge(phi[a], phi[b]));
            }
        }
    }

    #[test]
    fn identity_splice_preserves_graph() {
        let host = assemble_names(&["D_1", "M_3", "M_0", "~D_0"]).unwrap();
        let g = gadget("D_1M_3").unwrap();
        let phi = find_embeddings(&g, &host.graph, 1).remove(0);
        let rewire: Vec<(usize, usize, usize)> =
            (0..g.n()).filter(|&u| g.outside[u] > 0).map(|u| (u, u, g.outside[u])).collect();
        let out = splice(&host.graph, &phi, &g, &g, &rewire).unwrap();
        assert_eq!(canonical_cert(&out), canonical_cert(&host.graph));
        assert!(is_k_regular(&out, 4));
    }
}

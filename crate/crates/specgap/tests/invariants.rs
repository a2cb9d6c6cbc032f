//! Property-based invariants across the library.

use proptest::prelude::*;
use specgap::blocks::{assemble_names, build_g_n, build_h};
use specgap::graph::{
    canonical_cert, from_graph6, integer_laplacian, is_connected, is_k_regular, make_graph, to_graph6, Graph,
};
use specgap::polyroots::{rational, real_roots, refine, IntPolynomial};
use specgap::spectra::{algebraic_connectivity, assembly_spectrum, rayleigh, shifted_bound};
use specgap::structure::{coarsest_equitable, fiedler_structure, is_equitable, mirror_map, verdict, Tolerances, Verdict};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            make_graph(n, &edges).unwrap()
        })
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && permutations(a.n()).iter().any(|p| &a.relabel(p) == b)
}

/// Every set partition of `0..n` as a list of cells.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for v in 0..n {
        let mut next = Vec::new();
        for p in out {
            for i in 0..=p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                if i == q.len() {
                    q.push(vec![v]);
                } else {
                    q[i].push(v);
                }
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// `fine` refines `coarse`: every cell of `fine` sits inside one of `coarse`.
fn refines(fine: &[Vec<usize>], coarse: &[Vec<usize>]) -> bool {
    fine.iter().all(|cell| coarse.iter().any(|c| cell.iter().all(|v| c.contains(v))))
}

fn assembly_names() -> impl Strategy<Value = Vec<String>> {
    (0..5usize, proptest::collection::vec(0..4usize, 0..4), 0..5usize).prop_map(|(l, mids, r)| {
        let mut names = vec![format!("D_{l}")];
        names.extend(mids.iter().map(|m| format!("M_{m}")));
        names.push(format!("~D_{r}"));
        names
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn laplacian_rows_sum_to_zero(g in graph_strategy(12)) {
        let n = g.n();
        let l = integer_laplacian(&g);
        for i in 0..n {
            prop_assert_eq!(l[i * n..(i + 1) * n].iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn coarsest_equitable_is_coarsest(g in graph_strategy(6)) {
        let q = coarsest_equitable(&g);
        prop_assert!(is_equitable(&g, &q.cells).unwrap());
        for p in set_partitions(g.n()) {
            if is_equitable(&g, &p).unwrap() {
                prop_assert!(refines(&p, &q.cells));
            }
        }
    }

    #[test]
    fn assemblies_are_quartic_and_connected(names in assembly_names()) {
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let a = assemble_names(&refs).unwrap();
        prop_assert!(is_k_regular(&a.graph, 4));
        prop_assert!(is_connected(&a.graph));
        prop_assert_eq!(a.cut_vertices.len(), names.len() - 1);
        let r = assembly_spectrum(&a).unwrap();
        prop_assert!((rayleigh(&a.graph, &r.fiedler).unwrap() - r.mu).abs() <= 1e-9);
    }

    #[test]
    fn shifted_bound_dominates_mu(n in 11usize..40, x in proptest::collection::vec(-1.0f64..1.0, 40)) {
        let g = build_g_n(n).unwrap().graph;
        let x = &x[..n];
        let mean = x.iter().sum::<f64>() / n as f64;
        prop_assume!(x.iter().any(|v| (v - mean).abs() > 1e-6));
        let mu = algebraic_connectivity(&g).unwrap().mu;
        prop_assert!(shifted_bound(&g, x).unwrap().bound >= mu - 1e-9);
    }

    #[test]
    fn mirror_map_is_an_involutive_automorphism(m in 0usize..6, i in 0usize..5) {
        let a = build_h(m, i, i).unwrap();
        let sigma = mirror_map(&a).unwrap();
        prop_assert!((0..a.n()).all(|v| sigma[sigma[v]] == v));
        for &(u, v) in a.graph.edges() {
            prop_assert!(a.graph.has_edge(sigma[u], sigma[v]));
        }
    }

    #[test]
    fn refinement_is_nested(roots in proptest::collection::btree_set(-9i64..9, 1..5), k in 2i64..8) {
        let mut p = IntPolynomial::from_ascending(&[1]);
        for r in &roots {
            p = IntPolynomial::new(
                p.coeffs().iter().cloned().chain([0.into()]).zip(
                    std::iter::once(num_bigint::BigInt::from(0)).chain(p.coeffs().iter().cloned()),
                ).map(|(a, b)| b * k - a * (r * k + 1)).collect(),
            );
        }
        for iv in real_roots(&p, &rational(1, 4)).unwrap() {
            let finer = refine(&p, &iv, &rational(1, 1000));
            prop_assert!(finer.lo >= iv.lo && finer.hi <= iv.hi);
            prop_assert!(finer.width() <= rational(1, 1000));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cert_agrees_with_brute_force(a in graph_strategy(8), b in graph_strategy(8), flip in any::<bool>(), seed in any::<u64>()) {
        let b = if flip && a.n() > 0 {
            let mut perm: Vec<usize> = (0..a.n()).collect();
            let mut s = seed;
            for i in (1..perm.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            a.relabel(&perm)
        } else {
            b
        };
        prop_assert_eq!(canonical_cert(&a) == canonical_cert(&b), brute_isomorphic(&a, &b));
    }
}

#[test]
fn graph6_round_trips_on_families() {
    for n in 11..=200 {
        let g = build_g_n(n).unwrap().graph;
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g, "n = {n}");
    }
}

#[test]
fn family_orders_up_to_500() {
    for n in 11..=500 {
        assert_eq!(build_g_n(n).unwrap().n(), n);
    }
}

#[test]
fn family_cells_are_equitable_and_fiedler_shaped_to_200() {
    for n in 11..=200 {
        let a = build_g_n(n).unwrap();
        assert!(is_equitable(&a.graph, &a.cell_order).unwrap(), "n = {n}");
        let r = assembly_spectrum(&a).unwrap();
        let rep = fiedler_structure(&a.graph, &r.fiedler, &a.cell_order, Tolerances::default(), None).unwrap();
        assert_ne!(verdict(&rep, r.gap23), Verdict::Fail, "n = {n}: {rep:?}");
    }
}

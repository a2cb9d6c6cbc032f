//! Subgraphs used by the replacement lemmas, their replacements, and the
//! comparison graphs. Each gadget records how many edges every vertex
//! sends outside the gadget once embedded in a quartic host.

use super::{block, glue, BlockError};
use crate::graph::{degrees, make_graph, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    /// `4 - degree` for every vertex: the number of host edges leaving the
    /// gadget at that vertex.
    pub outside: Vec<usize>,
}

impl Gadget {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertices with at least one edge leaving the gadget.
    pub fn frontier(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.outside[v] > 0).collect()
    }

    fn new(name: &str, graph: Graph, labels: Vec<String>) -> Gadget {
        let outside = degrees(&graph).iter().map(|&d| 4usize.saturating_sub(d)).collect();
        Gadget { name: name.to_string(), graph, labels, outside }
    }
}

const D4_HEAD: &str = "r1-r2 r1-r3 r1-r4 r1-r5 r2-r3 r2-r4 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 r6-r7 \
                       r6-r8 r6-r9 r8-r7 r7-r9 r8-r9";
const D0_EDGES: &str = "r-r1 r-r2 r-r3 r-r4 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r5-r4 r5-r3";
const D1_EDGES: &str = "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r6 r7-r6 r5-r7";
const D2_EDGES: &str = "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r7 r5-r7 r5-r6 \
                        r6-r7 r7-r8 r6-r8";
const D3_EDGES: &str = "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r8 r5-r7 \
                        r6-r8 r6-r7 r7-r8 r9-r7 r9-r8";

/// Each entry: name, vertex labels in local order, edge lists.
const FIXTURES: &[(&str, &str, &[&str])] = &[
    ("H", "r1 r2 r3 r4 r5 r6 r7 r8 r9", &[D4_HEAD]),
    (
        "with-h-14",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12 r13 r14",
        &[D4_HEAD, "r14-r13 r14-r12 r14-r11 r14-r10 r12-r13 r11-r13 r10-r13 r11-r12 r10-r12 r11-r8 r10-r9"],
    ),
    (
        "without-h-14",
        "0 1 2 3 4 5 6 28 29 00 30 31 32 33",
        &["0-1 0-2 0-3 0-4 1-2 1-3 1-5 2-3 2-4 3-5 4-5 4-6 5-6 6-28 6-29 28-29 28-00 28-30 \
           29-00 29-31 00-32 00-33 30-31 30-32 30-33 31-32 31-33 33-32"],
    ),
    (
        "with-h-17",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12 r13 r14 r15 r16 r17",
        &[
            D4_HEAD,
            "r8-r11 r9-r10 r10-r11 r12-r10 r10-r13 r11-r13 r11-r12 r14-r12 r16-r12 r13-r15 r13-r17 \
             r14-r15 r14-r16 r14-r17 r15-r17 r15-r16 r17-r16",
        ],
    ),
    (
        "without-h-17",
        "r r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12 r13 r14 r15 r16",
        &["r-r1 r-r2 r-r3 r-r4 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r5-r4 r5-r3 r5-r6 r5-r7 r6-r7 r6-r8 \
           r6-r9 r7-r8 r7-r9 r9-r8 r8-r10 r9-r10 r10-r11 r10-r12 r11-r12 r11-r13 r11-r15 r14-r12 \
           r16-r12 r13-r15 r14-r13 r16-r13 r14-r15 r14-r16 r16-r15"],
    ),
    ("H_1", "r1 r2 r3 r4 r5 r6 r7", &["r1-r2 r1-r3 r2-r3 r3-r4 r3-r5 r4-r5 r4-r6 r4-r7 r5-r7 r5-r6"]),
    ("H'_1", "r1 r2 r3 r4 r5 r6 r7", &["r1-r3 r1-r4 r2-r3 r2-r4 r3-r4 r3-r5 r4-r5 r5-r6 r5-r7 r6-r7"]),
    (
        "H_2",
        "r1 r2 r3 r4 r5 r6 r7 r8",
        &["r1-r2 r1-r3 r2-r3 r3-r4 r3-r5 r4-r5 r4-r6 r4-r7 r5-r6 r5-r8 r6-r7 r6-r8"],
    ),
    (
        "H'_2",
        "r1 r2 r3 r4 r5 r6 r7 r8",
        &["r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r4-r5 r4-r6 r5-r6 r6-r7 r6-r8 r8-r7"],
    ),
    (
        "H_3",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9",
        &["r1-r2 r1-r3 r2-r3 r3-r4 r3-r5 r4-r5 r4-r6 r4-r7 r5-r7 r5-r6 r7-r6 r8-r6 r7-r9 r8-r9"],
    ),
    (
        "H'_3",
        "r r0 r1 r2 r3 r4 r5 r6 r7",
        &["r-r0 r-r1 r0-r2 r1-r2 r1-r4 r1-r3 r2-r3 r2-r4 r3-r4 r3-r5 r4-r5 r5-r6 r5-r7 r6-r7"],
    ),
    (
        "H_4",
        "r3 r4 r5 r6 r7 r8 r9 r10",
        &["r4-r3 r3-r5 r4-r5 r5-r7 r5-r6 r7-r6 r8-r6 r6-r9 r8-r7 r10-r7 r8-r9 r8-r10 r9-r10"],
    ),
    (
        "H'_4",
        "r3 r4 r5 r6 r7 r8 r9 r10",
        &["r4-r3 r3-r5 r4-r5 r4-r6 r5-r6 r7-r6 r8-r6 r7-r9 r8-r7 r10-r7 r8-r9 r8-r10 r9-r10"],
    ),
    (
        "H_5",
        "r r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11",
        &[
            D0_EDGES,
            "r5-r6 r5-r7 r6-r7 r6-r8 r6-r9 r7-r8 r7-r10 r8-r9 r8-r10 r10-r9 r11-r10 r11-r9",
        ],
    ),
    (
        "H'_5",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12",
        &[D1_EDGES, "r7-r8 r9-r7 r9-r8 r10-r8 r11-r8 r10-r9 r9-r11 r10-r11 r10-r12 r11-r12"],
    ),
    (
        "H_6",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r r11 r12 r13",
        &[
            D2_EDGES,
            "r8-r9 r10-r8 r9-r10 r9-r11 r9-r r10-r r11-r r12-r r10-r12 r12-r11 r11-r13 r12-r13",
        ],
    ),
    (
        "H'_6",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9 r10 r11 r12 r13 r14",
        &[D3_EDGES, "r10-r9 r11-r9 r11-r10 r10-r12 r10-r13 r12-r11 r11-r13 r12-r13 r14-r13 r12-r14"],
    ),
    (
        "E2-H",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9",
        &["r1-r2 r1-r3 r1-r4 r1-r5 r2-r3 r2-r4 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 r6-r7 r6-r8 r6-r9 \
           r8-r7 r7-r9"],
    ),
    (
        "E2-H'",
        "r1 r2 r3 r4 r5 r6 r7 r8 r9",
        &[D1_EDGES, "r9-r8 r7-r8 r7-r9"],
    ),
];

/// Gadgets formed by identifying the attachment of an end block with the
/// left attachment of `M_3`.
const GLUED: &[(&str, &str)] = &[
    ("D_0M_3", "D_0"),
    ("D_1M_3", "D_1"),
    ("D_2M_3", "D_2"),
    ("D_3M_3", "D_3"),
    ("D_4M_3", "D_4"),
    ("M_0M_3", "M_0"),
];

pub const GADGET_NAMES: &[&str] = &[
    "H",
    "with-h-14",
    "without-h-14",
    "with-h-17",
    "without-h-17",
    "H_1",
    "H'_1",
    "H_2",
    "H'_2",
    "H_3",
    "H'_3",
    "H_4",
    "H'_4",
    "H_5",
    "H'_5",
    "H_6",
    "H'_6",
    "E2-H",
    "E2-H'",
    "D_0M_3",
    "D_1M_3",
    "D_2M_3",
    "D_3M_3",
    "D_4M_3",
    "M_0M_3",
];

fn from_text(name: &str, labels: &str, edge_lists: &[&str]) -> Gadget {
    let labels: Vec<String> = labels.split_whitespace().map(str::to_string).collect();
    let id = |l: &str| labels.iter().position(|x| x == l).unwrap_or_else(|| panic!("{name}: label {l}"));
    let mut edges = Vec::new();
    for list in edge_lists {
        for pair in list.split_whitespace() {
            let (a, b) = pair.split_once('-').expect("edge written as a-b");
            edges.push((id(a), id(b)));
        }
    }
    let graph = make_graph(labels.len(), &edges).expect("gadget fixture is simple");
    Gadget::new(name, graph, labels)
}

/// Looks up a gadget by name; catalog block and brick names are accepted
/// too and yield the block's graph.
pub fn gadget(name: &str) -> Result<Gadget, BlockError> {
    if let Some(&(_, labels, edges)) = FIXTURES.iter().find(|f| f.0 == name) {
        return Ok(from_text(name, labels, edges));
    }
    if let Some(&(_, head)) = GLUED.iter().find(|g| g.0 == name) {
        let parts = [block(head)?, block("M_3")?];
        let a = glue(&parts)?;
        let mut labels = vec![String::new(); a.n()];
        for (b, part) in parts.iter().enumerate() {
            for (u, l) in part.labels.iter().enumerate() {
                let slot = &mut labels[a.block_vertices[b][u]];
                if slot.is_empty() {
                    *slot = format!("{}.{l}", part.name);
                }
            }
        }
        return Ok(Gadget::new(name, a.graph, labels));
    }
    let b = block(name)?;
    Ok(Gadget::new(name, b.graph, b.labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected, is_k_regular};

    #[test]
    fn every_named_gadget_builds() {
        for name in GADGET_NAMES {
            let g = gadget(name).unwrap();
            assert!(degrees(&g.graph).iter().all(|&d| d <= 4), "{name}");
            assert!(is_connected(&g.graph), "{name}");
        }
        assert!(matches!(gadget("H_9"), Err(BlockError::UnknownKind(_))));
    }

    #[test]
    fn replacement_pairs_match_in_size() {
        for (a, b) in [("H_1", "H'_1"), ("H_2", "H'_2"), ("H_3", "H'_3"), ("H_4", "H'_4"), ("H_5", "H'_5"), ("H_6", "H'_6"), ("E2-H", "E2-H'"), ("H", "D_3"), ("D'_3", "D_2")] {
            let (g, h) = (gadget(a).unwrap(), gadget(b).unwrap());
            assert_eq!(g.n(), h.n(), "{a}/{b}");
            assert_eq!(g.graph.edge_count(), h.graph.edge_count(), "{a}/{b}");
            let sum = |x: &Gadget| x.outside.iter().sum::<usize>();
            assert_eq!(sum(&g), sum(&h), "{a}/{b}");
        }
    }

    #[test]
    fn comparison_graphs_are_quartic() {
        for name in ["with-h-14", "without-h-14", "with-h-17", "without-h-17"] {
            let g = gadget(name).unwrap();
            assert!(is_k_regular(&g.graph, 4), "{name}");
        }
        assert_eq!(gadget("with-h-14").unwrap().n(), 14);
        assert_eq!(gadget("with-h-17").unwrap().n(), 17);
    }

    #[test]
    fn glued_gadgets() {
        let g = gadget("D_0M_3").unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.frontier().len(), 1);
        assert_eq!(gadget("D_4M_3").unwrap().n(), 16);
        let h5 = gadget("H_5").unwrap();
        assert_eq!(h5.graph.edge_count(), g.graph.edge_count());
    }

    #[test]
    fn h1_has_seven_vertices() {
        let g = gadget("H_1").unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.outside, vec![2, 2, 0, 0, 0, 2, 2]);
    }
}

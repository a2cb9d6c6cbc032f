//! The block catalog and the assembly of path-like quartic graphs: blocks
//! glued in a row at shared degree-2 attachment vertices.

mod bricks;
mod catalog;
mod gadgets;

pub use bricks::{long_block, LongType};
pub use gadgets::{gadget, Gadget, GADGET_NAMES};

use crate::graph::{is_connected, is_k_regular, make_graph, Graph};
use catalog::Fixture;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("unknown catalog entry `{0}`")]
    UnknownKind(String),
    #[error("blocks {left} and {right} cannot be glued: missing attachment vertex")]
    IncompatibleAttachment { left: usize, right: usize },
    #[error("glued graph is not connected and 4-regular")]
    NotQuarticAfterGlue,
    #[error("order {0} is below the smallest family member (11)")]
    OrderTooSmall(usize),
    #[error("brick sequence violates the long-block grammar: {0}")]
    GrammarViolation(String),
}

/// A catalog block or brick. Attachments are degree-2 vertices shared with
/// the neighbouring block; pairs are the two degree-3 vertices a brick joins
/// to its neighbouring brick by two parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    pub left_attach: Option<usize>,
    pub right_attach: Option<usize>,
    pub left_pair: Option<[usize; 2]>,
    pub right_pair: Option<[usize; 2]>,
    /// Structural cells ordered left to right.
    pub cells: Vec<Vec<usize>>,
}

pub const SHORT_BLOCKS: [&str; 9] = ["M_0", "M_1", "M_2", "M_3", "D_0", "D_1", "D_2", "D_3", "D_4"];
pub const BRICKS: [&str; 7] = ["M'_0", "M'_1", "M'_2", "D'_0", "D'_3", "M''_0", "M''_1"];

fn from_fixture(name: &str, f: &Fixture) -> Block {
    let id = |label: &str| {
        f.labels.iter().position(|&l| l == label).unwrap_or_else(|| panic!("fixture label {label}"))
    };
    let edges: Vec<(usize, usize)> = f.edges.iter().map(|&(a, b)| (id(a), id(b))).collect();
    let graph = make_graph(f.labels.len(), &edges).expect("fixture is a simple graph");
    Block {
        name: name.to_string(),
        graph,
        labels: f.labels.iter().map(|s| s.to_string()).collect(),
        left_attach: f.left.map(id),
        right_attach: f.right.map(id),
        left_pair: None,
        right_pair: None,
        cells: f.cells.iter().map(|c| c.iter().map(|&l| id(l)).collect()).collect(),
    }
}

impl Block {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_mirrored(&self) -> bool {
        self.name.starts_with('~')
    }

    /// The mirror image: same graph with left and right roles exchanged.
    pub fn mirror(&self) -> Block {
        let name = match self.name.strip_prefix('~') {
            Some(rest) => rest.to_string(),
            None => format!("~{}", self.name),
        };
        let mut cells = self.cells.clone();
        cells.reverse();
        Block {
            name,
            graph: self.graph.clone(),
            labels: self.labels.clone(),
            left_attach: self.right_attach,
            right_attach: self.left_attach,
            left_pair: self.right_pair,
            right_pair: self.left_pair,
            cells,
        }
    }

    /// Removes an attachment vertex; its two neighbours become the pair on
    /// that side.
    fn strip_attach(&self, right: bool) -> Block {
        let v = if right { self.right_attach } else { self.left_attach }.expect("attachment present");
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        let new_id = |u: usize| keep.iter().position(|&w| w == u);
        let adj = self.graph.adjacency();
        let pair = [new_id(adj[v][0]).unwrap(), new_id(adj[v][1]).unwrap()];
        let edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (new_id(a).unwrap(), new_id(b).unwrap()))
            .collect();
        let cells = self
            .cells
            .iter()
            .filter(|c| c.as_slice() != [v])
            .map(|c| c.iter().map(|&u| new_id(u).unwrap()).collect())
            .collect();
        let remap = |a: Option<usize>| a.and_then(new_id);
        let remap_pair = |p: Option<[usize; 2]>| p.map(|[a, b]| [new_id(a).unwrap(), new_id(b).unwrap()]);
        Block {
            name: self.name.clone(),
            graph: make_graph(keep.len(), &edges).expect("subgraph is simple"),
            labels: keep.iter().map(|&u| self.labels[u].clone()).collect(),
            left_attach: if right { remap(self.left_attach) } else { None },
            right_attach: if right { None } else { remap(self.right_attach) },
            left_pair: if right { remap_pair(self.left_pair) } else { Some(pair) },
            right_pair: if right { Some(pair) } else { remap_pair(self.right_pair) },
            cells,
        }
    }
}

fn short_fixture(key: &str) -> Option<&'static Fixture> {
    Some(match key {
        "M0" => &catalog::M0,
        "M1" => &catalog::M1,
        "M2" => &catalog::M2,
        "M3" => &catalog::M3,
        "D0" => &catalog::D0,
        "D1" => &catalog::D1,
        "D2" => &catalog::D2,
        "D3" => &catalog::D3,
        "D4" => &catalog::D4,
        _ => return None,
    })
}

/// Looks up a catalog entry by name, e.g. `M_0`, `D_4`, `~D_1` (mirror),
/// `D'_0` or `M''_1` (bricks). Underscores are optional.
pub fn block(kind: &str) -> Result<Block, BlockError> {
    let unknown = || BlockError::UnknownKind(kind.to_string());
    let key: String = kind.chars().filter(|c| *c != '_' && !c.is_whitespace()).collect();
    let (mirrored, key) = match key.strip_prefix('~') {
        Some(rest) => (true, rest.to_string()),
        None => (false, key),
    };
    let primes = key.chars().filter(|&c| c == '\'').count();
    let base: String = key.chars().filter(|&c| c != '\'').collect();
    let fixture = short_fixture(&base).ok_or_else(unknown)?;
    let letter = &base[..1];
    let index = &base[1..];
    let name = format!("{letter}{}_{index}", "'".repeat(primes));
    let short = from_fixture(&name, fixture);
    let b = match (primes, base.as_str()) {
        (0, _) => short,
        (1, "M0" | "M1" | "M2" | "D0" | "D3") => short.strip_attach(true),
        (2, "M0" | "M1") => short.strip_attach(true).strip_attach(false),
        _ => return Err(unknown()),
    };
    Ok(if mirrored { b.mirror() } else { b })
}

/// Blocks glued in a row, with the global numbering of every block vertex.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub blocks: Vec<Block>,
    pub graph: Graph,
    pub cell_order: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// `block_vertices[b][u]` is the global vertex of local vertex `u` of
    /// block `b`.
    pub block_vertices: Vec<Vec<usize>>,
}

impl Assembly {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Global vertex of the vertex labelled `label` in block `b`.
    pub fn vertex(&self, b: usize, label: &str) -> Option<usize> {
        self.blocks[b].vertex(label).map(|u| self.block_vertices[b][u])
    }

    pub fn block_names(&self) -> Vec<String> {
        self.blocks.iter().map(|b| b.name.clone()).collect()
    }
}

/// Identifies each block's right attachment with the next block's left
/// attachment, without checking regularity of the result.
pub fn glue(seq: &[Block]) -> Result<Assembly, BlockError> {
    let mut edges = Vec::new();
    let mut cell_order: Vec<Vec<usize>> = Vec::new();
    let mut cut_vertices = Vec::new();
    let mut block_vertices: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for (b, block) in seq.iter().enumerate() {
        let shared = if b == 0 {
            None
        } else {
            let prev = &seq[b - 1];
            match (prev.right_attach, block.left_attach) {
                (Some(pr), Some(l)) => Some((block_vertices[b - 1][pr], l)),
                _ => return Err(BlockError::IncompatibleAttachment { left: b - 1, right: b }),
            }
        };
        let map: Vec<usize> = (0..block.n())
            .map(|u| match shared {
                Some((global, l)) if u == l => global,
                _ => {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        edges.extend(block.graph.edges().iter().map(|&(u, v)| (map[u], map[v])));
        let mut cells = block.cells.iter().map(|c| c.iter().map(|&u| map[u]).collect::<Vec<_>>());
        if let Some((global, _)) = shared {
            cut_vertices.push(global);
            let first = cells.next().unwrap_or_default();
            let last = cell_order.last_mut().expect("previous block has cells");
            if first != [global] || *last != [global] {
                return Err(BlockError::IncompatibleAttachment { left: b - 1, right: b });
            }
        }
        cell_order.extend(cells);
        block_vertices.push(map);
    }
    let graph = make_graph(next, &edges).expect("glued blocks form a simple graph");
    Ok(Assembly { blocks: seq.to_vec(), graph, cell_order, cut_vertices, block_vertices })
}

/// Glues a full sequence (end, middles..., end) and checks the result is
/// a connected quartic graph.
pub fn assemble(seq: &[Block]) -> Result<Assembly, BlockError> {
    let a = glue(seq)?;
    if is_k_regular(&a.graph, 4) && is_connected(&a.graph) {
        Ok(a)
    } else {
        Err(BlockError::NotQuarticAfterGlue)
    }
}

/// Assembles from catalog names.
pub fn assemble_names(names: &[&str]) -> Result<Assembly, BlockError> {
    let seq = names.iter().map(|k| block(k)).collect::<Result<Vec<_>, _>>()?;
    assemble(&seq)
}

fn end_block(i: usize) -> Block {
    block(&format!("D_{i}")).expect("end block index in 0..=4")
}

/// The family member on `n` vertices: `m = (n-11)/5` middle blocks `M_0`
/// between two end blocks chosen by `(n-11) mod 5`.
pub fn build_g_n(n: usize) -> Result<Assembly, BlockError> {
    if n < 11 {
        return Err(BlockError::OrderTooSmall(n));
    }
    let (m, r) = ((n - 11) / 5, (n - 11) % 5);
    let (i, j) = [(0, 0), (0, 1), (1, 1), (1, 2), (0, 4)][r];
    build_h(m, i, j)
}

/// `m` middle blocks `M_0` between `D_i` on the left and mirrored `D_j`
/// on the right.
pub fn build_h(m: usize, i: usize, j: usize) -> Result<Assembly, BlockError> {
    if i > 4 || j > 4 {
        return Err(BlockError::UnknownKind(format!("D_{}", i.max(j))));
    }
    let mut seq = vec![end_block(i)];
    let m0 = block("M_0")?;
    seq.extend(std::iter::repeat_n(m0, m));
    seq.push(end_block(j).mirror());
    assemble(&seq)
}

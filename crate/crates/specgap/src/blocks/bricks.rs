//! Long blocks: rows of bricks where consecutive bricks are joined by two
//! parallel edges between their boundary vertex pairs.

use super::{Block, BlockError};
use crate::graph::{degrees, make_graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LongType {
    /// Starts with `D'_0` or `D'_3`, ends with a mirrored `M'_i`.
    End,
    /// Starts with `M'_i`, ends with a mirrored `M'_j`.
    Middle,
    /// Starts with `D'_0` or `D'_3`, ends with a mirrored `D'_0` or `D'_3`.
    Complete,
}

const D_FIRST: [&str; 2] = ["D'_0", "D'_3"];
const M_FIRST: [&str; 3] = ["M'_0", "M'_1", "M'_2"];
const INTERIOR: [&str; 2] = ["M''_0", "M''_1"];

fn check_grammar(bricks: &[Block], ty: LongType) -> Result<(), BlockError> {
    let violation = |msg: String| Err(BlockError::GrammarViolation(msg));
    if bricks.len() < 2 {
        return violation(format!("{} bricks given, at least 2 required", bricks.len()));
    }
    let first = bricks[0].name.as_str();
    let last = bricks[bricks.len() - 1].name.as_str();
    let (heads, tails): (&[&str], &[&str]) = match ty {
        LongType::End => (&D_FIRST, &M_FIRST),
        LongType::Middle => (&M_FIRST, &M_FIRST),
        LongType::Complete => (&D_FIRST, &D_FIRST),
    };
    if !heads.contains(&first) {
        return violation(format!("`{first}` cannot start a {ty:?} long block"));
    }
    match last.strip_prefix('~') {
        Some(t) if tails.contains(&t) => {}
        _ => return violation(format!("`{last}` cannot end a {ty:?} long block")),
    }
    for b in &bricks[1..bricks.len() - 1] {
        if !INTERIOR.contains(&b.name.as_str()) {
            return violation(format!("`{}` cannot sit inside a long block", b.name));
        }
    }
    Ok(())
}

/// Joins bricks into a long block. End and middle long blocks keep the
/// attachment vertices of their outer bricks; a complete long block is a
/// standalone quartic graph.
pub fn long_block(bricks: &[Block], ty: LongType) -> Result<Block, BlockError> {
    check_grammar(bricks, ty)?;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut cells = Vec::new();
    let mut offset = 0;
    let mut prev_pair: Option<[usize; 2]> = None;
    for (k, b) in bricks.iter().enumerate() {
        edges.extend(b.graph.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        labels.extend(b.labels.iter().map(|l| format!("{k}.{l}")));
        cells.extend(b.cells.iter().map(|c| c.iter().map(|&u| u + offset).collect::<Vec<_>>()));
        if let Some([a, c]) = prev_pair {
            let [x, y] = b.left_pair.ok_or_else(|| {
                BlockError::GrammarViolation(format!("`{}` has no left boundary pair", b.name))
            })?;
            edges.push((a, x + offset));
            edges.push((c, y + offset));
        }
        if k + 1 < bricks.len() {
            let [x, y] = b.right_pair.ok_or_else(|| {
                BlockError::GrammarViolation(format!("`{}` has no right boundary pair", b.name))
            })?;
            prev_pair = Some([x + offset, y + offset]);
        }
        offset += b.n();
    }
    let first = &bricks[0];
    let last = &bricks[bricks.len() - 1];
    let left_attach = first.left_attach;
    let right_attach = last.right_attach.map(|v| v + offset - last.n());
    let graph = make_graph(offset, &edges).expect("joined bricks form a simple graph");
    let deg = degrees(&graph);
    for (v, &d) in deg.iter().enumerate() {
        let want = if Some(v) == left_attach || Some(v) == right_attach { 2 } else { 4 };
        if d != want {
            return Err(BlockError::GrammarViolation(format!("vertex {} has degree {d}", labels[v])));
        }
    }
    let names: Vec<&str> = bricks.iter().map(|b| b.name.as_str()).collect();
    Ok(Block {
        name: format!("[{}]", names.join(" ")),
        graph,
        labels,
        left_attach,
        right_attach,
        left_pair: None,
        right_pair: None,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{assemble, block};
    use crate::graph::{canonical_cert, is_connected, is_k_regular};

    fn bricks(names: &[&str]) -> Vec<Block> {
        names.iter().map(|n| block(n).unwrap()).collect()
    }

    #[test]
    fn d4_is_the_long_end_block_of_d0_and_m0() {
        let long = long_block(&bricks(&["D'_0", "~M'_0"]), LongType::End).unwrap();
        let d4 = block("D_4").unwrap();
        assert_eq!(long.n(), 10);
        assert_eq!(canonical_cert(&long.graph), canonical_cert(&d4.graph));
        assert!(long.right_attach.is_some() && long.left_attach.is_none());
    }

    #[test]
    fn long_middle_block_glues_between_ends() {
        let mid = long_block(&bricks(&["M'_1", "M''_0", "~M'_2"]), LongType::Middle).unwrap();
        assert!(mid.left_attach.is_some() && mid.right_attach.is_some());
        let a = assemble(&[block("D_0").unwrap(), mid, block("~D_0").unwrap()]).unwrap();
        assert!(is_k_regular(&a.graph, 4));
    }

    #[test]
    fn long_complete_block_is_quartic() {
        let g = long_block(&bricks(&["D'_0", "~D'_3"]), LongType::Complete).unwrap();
        assert_eq!(g.n(), 13);
        assert!(is_k_regular(&g.graph, 4) && is_connected(&g.graph));
    }

    #[test]
    fn grammar_is_enforced() {
        let err = |names: &[&str], ty| long_block(&bricks(names), ty).unwrap_err();
        assert!(matches!(err(&["D'_0"], LongType::End), BlockError::GrammarViolation(_)));
        assert!(matches!(err(&["M'_0", "~M'_0"], LongType::End), BlockError::GrammarViolation(_)));
        assert!(matches!(err(&["D'_0", "M'_0"], LongType::End), BlockError::GrammarViolation(_)));
        assert!(matches!(
            err(&["D'_0", "D'_3", "~M'_0"], LongType::End),
            BlockError::GrammarViolation(_)
        ));
        assert!(matches!(err(&["D'_0", "~M'_0"], LongType::Complete), BlockError::GrammarViolation(_)));
    }
}

//! Rearranging a click-sequence so that the vertices of a vw-interval are
//! clicked in contiguous blocks.
//!
//! The sequence is cut before every instance of `v` after the first. Inside
//! each piece the interval clicks are fused into one block, and the piece is
//! re-emitted as a topological order of its occurrence poset (click `q`
//! must precede click `p` when they hit the same or adjacent vertices and
//! `q` came first). Among the ready clicks, vertices above the interval go
//! first, then unrelated vertices, then the block, then vertices below it.
//! Every such order only transposes independent sources, so the image of the
//! sequence is unchanged.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::EdgeRef;
use crate::kappa::interval::{interval, Interval};
use crate::orientation::{ClickSequence, Orientation};

/// Position of a vertex relative to the interval `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexRegion {
    /// Not in `I`, with a directed path into `I`.
    Above,
    /// Neither above nor below `I`.
    Other,
    Interval,
    /// Not in `I`, reachable from `I`.
    Below,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedClicks {
    pub clicks: ClickSequence,
    /// Index ranges of the interval blocks, in order.
    pub blocks: Vec<Range<usize>>,
    pub interval: Interval,
}

/// Regions of all vertices (index 0 unused) for the interval of `o` at `e`.
pub fn classify_regions(o: &Orientation, i: &Interval) -> Vec<VertexRegion> {
    let n = o.graph().n();
    let mut above = vec![false; n + 1];
    let mut below = vec![false; n + 1];
    for &x in i.vertices() {
        for (y, (&a, &b)) in o.reaching(x).iter().zip(o.reachable_from(x).iter()).enumerate() {
            above[y] |= a;
            below[y] |= b;
        }
    }
    (0..=n)
        .map(|x| {
            if i.contains(x) {
                VertexRegion::Interval
            } else if above[x] {
                VertexRegion::Above
            } else if below[x] {
                VertexRegion::Below
            } else {
                VertexRegion::Other
            }
        })
        .collect()
}

pub fn normalize_click_sequence(o: &Orientation, c: &ClickSequence, e: EdgeRef) -> Result<NormalizedClicks> {
    let edge = o.graph().edge(e)?;
    let (v, w) = (edge.u, edge.v);
    if !o.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    if o.direction(e.0) != (v, w) {
        return Err(Error::WrongDirection { v, w });
    }
    let image = o.apply_clicks(c)?;
    let interval = interval(o, e)?;
    let regions = classify_regions(o, &interval);
    let seq = c.as_slice();

    let preds = occurrence_predecessors(o, seq);
    let mut cuts: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x == v)
        .map(|(p, _)| p)
        .collect();
    if cuts.first() != Some(&0) {
        cuts.insert(0, 0);
    }
    cuts.push(seq.len());

    let mut out = Vec::with_capacity(seq.len());
    let mut blocks = Vec::new();
    for piece in cuts.windows(2) {
        let (start, block) = schedule_piece(piece[0]..piece[1], seq, &preds, &regions, &mut out)?;
        if let Some(len) = block {
            blocks.push(start..start + len);
        }
    }
    let clicks = ClickSequence(out);
    debug_assert_eq!(o.apply_clicks(&clicks).ok(), Some(image));
    Ok(NormalizedClicks {
        clicks,
        blocks,
        interval,
    })
}

/// For each click position, the earlier positions it must follow.
fn occurrence_predecessors(o: &Orientation, seq: &[usize]) -> Vec<Vec<usize>> {
    let mut last = vec![None; o.graph().n() + 1];
    seq.iter()
        .enumerate()
        .map(|(p, &x)| {
            let mut before: Vec<usize> = std::iter::once(x)
                .chain(o.graph().neighbors(x).iter().map(|&(y, _)| y))
                .filter_map(|y| last[y])
                .collect();
            before.sort_unstable();
            before.dedup();
            last[x] = Some(p);
            before
        })
        .collect()
}

/// Emits one piece into `out`; returns where the block starts and its length.
fn schedule_piece(
    range: Range<usize>,
    seq: &[usize],
    preds: &[Vec<usize>],
    regions: &[VertexRegion],
    out: &mut Vec<usize>,
) -> Result<(usize, Option<usize>)> {
    let len = range.len();
    if len == 0 {
        return Ok((out.len(), None));
    }
    let base = range.start;
    let in_block: Vec<bool> = range
        .clone()
        .map(|p| regions[seq[p]] == VertexRegion::Interval)
        .collect();
    let block_members: Vec<usize> = range.clone().filter(|&p| in_block[p - base]).collect();
    // node ids: local position for ordinary clicks, `len` for the block
    let node = |p: usize| if in_block[p - base] { len } else { p - base };
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); len + 1];
    let mut indegree = vec![0usize; len + 1];
    for p in range.clone() {
        for &q in &preds[p] {
            if q < base {
                continue;
            }
            let (a, b) = (node(q), node(p));
            if a != b {
                succ[a].push(b);
                indegree[b] += 1;
            }
        }
    }
    let rank = |id: usize| -> (VertexRegion, usize) {
        if id == len {
            (VertexRegion::Interval, block_members[0] - base)
        } else {
            (regions[seq[base + id]], id)
        }
    };
    let live = |id: usize| id < len && !in_block[id] || id == len && !block_members.is_empty();
    let mut ready: BinaryHeap<Reverse<((VertexRegion, usize), usize)>> = (0..=len)
        .filter(|&id| live(id) && indegree[id] == 0)
        .map(|id| Reverse((rank(id), id)))
        .collect();
    let mut emitted = 0;
    let mut block_start = None;
    while let Some(Reverse((_, id))) = ready.pop() {
        emitted += 1;
        if id == len {
            block_start = Some(out.len());
            out.extend(block_members.iter().map(|&p| seq[p]));
        } else {
            out.push(seq[base + id]);
        }
        for &next in &succ[id] {
            indegree[next] -= 1;
            if indegree[next] == 0 {
                ready.push(Reverse((rank(next), next)));
            }
        }
    }
    let expected = (0..=len).filter(|&id| live(id)).count();
    if emitted != expected {
        return Err(Error::NotNormalizable);
    }
    Ok((
        block_start.unwrap_or(out.len()),
        block_start.map(|_| block_members.len()),
    ))
}

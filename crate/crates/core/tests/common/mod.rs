//! Reference implementations that share no code with the library: raw
//! bitmask orientations, their own acyclicity test and click, a union-find
//! over the click graph, and the subset expansion of the Tutte polynomial.
#![allow(dead_code)]

use kappa_core::Graph;

/// Plain edge list with `u < v`, in the library's sorted order.
pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Bit `m - 1 - i` of `mask` set means edge `i` points high -> low, so the
/// masks count up in the same order as bit strings.
fn head_tail(edges: &[(usize, usize)], mask: u64, i: usize) -> (usize, usize) {
    let m = edges.len();
    let (u, v) = edges[i];
    if mask >> (m - 1 - i) & 1 == 1 {
        (v, u)
    } else {
        (u, v)
    }
}

pub fn mask_is_acyclic(n: usize, edges: &[(usize, usize)], mask: u64) -> bool {
    let mut indegree = vec![0usize; n + 1];
    let mut out = vec![Vec::new(); n + 1];
    for i in 0..edges.len() {
        let (t, h) = head_tail(edges, mask, i);
        indegree[h] += 1;
        out[t].push(h);
    }
    let mut stack: Vec<usize> = (1..=n).filter(|&x| indegree[x] == 0).collect();
    let mut removed = 0;
    while let Some(x) = stack.pop() {
        removed += 1;
        for &y in &out[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                stack.push(y);
            }
        }
    }
    removed == n
}

/// Flip every edge at `x` if `x` is a source.
pub fn mask_click(edges: &[(usize, usize)], mask: u64, x: usize) -> Option<u64> {
    let m = edges.len();
    let mut flip = 0u64;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u == x || v == x {
            if head_tail(edges, mask, i).0 != x {
                return None;
            }
            flip |= 1 << (m - 1 - i);
        }
    }
    Some(mask ^ flip)
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let next = p[y];
        p[y] = r;
        y = next;
    }
    r
}

/// Acyclic masks in ascending order and the click-graph component id of
/// each (ids assigned in order of first appearance).
pub fn oracle_classes(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let edges = edge_list(g);
    let n = g.n();
    let masks: Vec<u64> = (0..1u64 << edges.len())
        .filter(|&mk| mask_is_acyclic(n, &edges, mk))
        .collect();
    let index = |mk: u64| masks.binary_search(&mk).expect("clicks preserve acyclicity");
    let mut parent: Vec<usize> = (0..masks.len()).collect();
    for (i, &mk) in masks.iter().enumerate() {
        for x in 1..=n {
            if let Some(next) = mask_click(&edges, mk, x) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, index(next)));
                parent[a] = b;
            }
        }
    }
    let mut ids = vec![usize::MAX; masks.len()];
    let mut next_id = 0;
    let mut out = Vec::with_capacity(masks.len());
    for i in 0..masks.len() {
        let r = find(&mut parent, i);
        if ids[r] == usize::MAX {
            ids[r] = next_id;
            next_id += 1;
        }
        out.push(ids[r]);
    }
    (masks, out)
}

pub fn oracle_alpha(g: &Graph) -> u64 {
    oracle_classes(g).0.len() as u64
}

pub fn oracle_kappa(g: &Graph) -> u64 {
    oracle_classes(g).1.iter().max().map_or(0, |&m| m as u64 + 1)
}

fn rank(n: usize, edges: &[(usize, usize)], subset: u64) -> usize {
    let mut p: Vec<usize> = (0..=n).collect();
    let mut r = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if subset >> i & 1 == 1 {
            let (a, b) = (find(&mut p, u), find(&mut p, v));
            if a != b {
                p[a] = b;
                r += 1;
            }
        }
    }
    r
}

/// `T(x, y) = sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`, with
/// each multigraph edge unit listed separately.
pub fn oracle_tutte_eval(g: &Graph, x: i64, y: i64) -> i64 {
    let units: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, e)| std::iter::repeat_n((e.u, e.v), g.multiplicity(kappa_core::EdgeRef(i)) as usize))
        .collect();
    let full = rank(g.n(), &units, u64::MAX);
    (0..1u64 << units.len())
        .map(|a| {
            let r = rank(g.n(), &units, a);
            let size = a.count_ones() as usize;
            (x - 1).pow((full - r) as u32) * (y - 1).pow((size - r) as u32)
        })
        .sum()
}

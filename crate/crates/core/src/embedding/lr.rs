//! Left-right planarity test (de Fraysseix–Rosenstiehl, in Brandes' formulation)
//! producing a combinatorial embedding for planar inputs.

use crate::graph::SimpleGraph;

type Arc = usize;

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Interval {
    low: Option<Arc>,
    high: Option<Arc>,
}

impl Interval {
    fn single(e: Arc) -> Self {
        Interval { low: Some(e), high: Some(e) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'g> {
    g: &'g SimpleGraph,
    // arc id of (v, adj[v][k]) is offset[v] + k
    offset: Vec<usize>,
    source: Vec<usize>,
    target: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<Arc>>,
    roots: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    ordered_adjs: Vec<Vec<Arc>>,
    reference: Vec<Option<Arc>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<Arc>>,
}

impl<'g> LrState<'g> {
    fn new(g: &'g SimpleGraph) -> Self {
        let n = g.node_count();
        let mut offset = Vec::with_capacity(n + 1);
        let mut source = Vec::new();
        let mut target = Vec::new();
        offset.push(0);
        for v in 0..n {
            for &w in g.neighbors(v) {
                source.push(v);
                target.push(w);
            }
            offset.push(source.len());
        }
        let arcs = source.len();
        LrState {
            g,
            offset,
            source,
            target,
            oriented: vec![false; arcs],
            height: vec![None; n],
            parent_edge: vec![None; n],
            roots: Vec::new(),
            lowpt: vec![0; arcs],
            lowpt2: vec![0; arcs],
            nesting_depth: vec![0; arcs],
            ordered_adjs: vec![Vec::new(); n],
            reference: vec![None; arcs],
            side: vec![1; arcs],
            stack: Vec::new(),
            stack_bottom: vec![0; arcs],
            lowpt_edge: vec![None; arcs],
        }
    }

    fn arc(&self, v: usize, w: usize) -> Arc {
        let k = self.g.neighbors(v).binary_search(&w).expect("arc exists");
        self.offset[v] + k
    }

    fn orientation(&mut self, root: usize) {
        let n = self.g.node_count();
        let mut next = vec![0usize; n];
        let mut resumed = vec![false; self.source.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while next[v] < self.g.degree(v) {
                let vw = self.offset[v] + next[v];
                let w = self.target[vw];
                if !resumed[vw] {
                    let wv = self.arc(w, v);
                    if self.oriented[vw] || self.oriented[wv] {
                        next[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    let hv = self.height[v].unwrap();
                    self.lowpt[vw] = hv;
                    self.lowpt2[vw] = hv;
                    match self.height[w] {
                        None => {
                            self.parent_edge[w] = Some(vw);
                            self.height[w] = Some(hv + 1);
                            resumed[vw] = true;
                            dfs.push(v);
                            dfs.push(w);
                            break;
                        }
                        Some(hw) => self.lowpt[vw] = hw,
                    }
                }
                let hv = self.height[v].unwrap();
                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < hv {
                    self.nesting_depth[vw] += 1;
                }
                if let Some(e) = e {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                next[v] += 1;
            }
        }
    }

    fn sort_adjacencies(&mut self) {
        for v in 0..self.g.node_count() {
            let mut out: Vec<Arc> = (self.offset[v]..self.offset[v + 1]).filter(|&a| self.oriented[a]).collect();
            out.sort_by_key(|&a| self.nesting_depth[a]);
            self.ordered_adjs[v] = out;
        }
    }

    fn conflicting(&self, i: &Interval, b: Arc) -> bool {
        !i.is_empty() && self.lowpt[i.high.unwrap()] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn testing(&mut self, root: usize) -> bool {
        let n = self.g.node_count();
        let mut next = vec![0usize; n];
        let mut resumed = vec![false; self.source.len()];
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while next[v] < self.ordered_adjs[v].len() {
                let ei = self.ordered_adjs[v][next[v]];
                let w = self.target[ei];
                if !resumed[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if self.parent_edge[w] == Some(ei) {
                        resumed[ei] = true;
                        descended = true;
                        dfs.push(v);
                        dfs.push(w);
                        break;
                    }
                    self.lowpt_edge[ei] = Some(ei);
                    self.stack.push(ConflictPair { left: Interval::default(), right: Interval::single(ei) });
                }
                if self.lowpt[ei] < self.height[v].unwrap() {
                    let e = e.expect("only non-roots have return edges");
                    if next[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                next[v] += 1;
            }
            if !descended {
                if let Some(e) = e {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: Arc, e: Arc) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap()] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low.unwrap()] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(&top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: Arc) {
        let u = self.source[e];
        let hu = self.height[u].unwrap();
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(low) = p.left.low {
                self.side[low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(high) = p.left.high {
                if self.target[high] != u {
                    break;
                }
                p.left.high = self.reference[high];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    self.side[low] = -1;
                    p.left.low = None;
                }
            }
            while let Some(high) = p.right.high {
                if self.target[high] != u {
                    break;
                }
                p.right.high = self.reference[high];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    self.side[low] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: Arc) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().unwrap()] {
            chain.push(r);
        }
        for k in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[k], chain[k + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = None;
        }
        self.side[e]
    }

    fn embed(&mut self) -> Vec<Vec<usize>> {
        let n = self.g.node_count();
        for a in 0..self.source.len() {
            if self.oriented[a] {
                let s = self.sign(a);
                self.nesting_depth[a] *= s;
            }
        }
        self.sort_adjacencies();
        // Clockwise order per node; index 0 is the "first" neighbour.
        let mut rot: Vec<Vec<usize>> =
            (0..n).map(|v| self.ordered_adjs[v].iter().map(|&a| self.target[a]).collect()).collect();
        let mut left_ref = vec![0usize; n];
        let mut right_ref = vec![0usize; n];
        let insert_after = |list: &mut Vec<usize>, anchor: usize, x: usize| {
            let p = list.iter().position(|&y| y == anchor).expect("anchor present");
            list.insert(p + 1, x);
        };
        let insert_before = |list: &mut Vec<usize>, anchor: usize, x: usize| {
            let p = list.iter().position(|&y| y == anchor).expect("anchor present");
            list.insert(p, x);
        };
        for &root in &self.roots.clone() {
            let mut next = vec![0usize; n];
            let mut dfs = vec![root];
            while let Some(v) = dfs.pop() {
                while next[v] < self.ordered_adjs[v].len() {
                    let ei = self.ordered_adjs[v][next[v]];
                    next[v] += 1;
                    let w = self.target[ei];
                    if self.parent_edge[w] == Some(ei) {
                        rot[w].insert(0, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        dfs.push(v);
                        dfs.push(w);
                        break;
                    }
                    if self.side[ei] == 1 {
                        insert_after(&mut rot[w], right_ref[w], v);
                    } else {
                        insert_before(&mut rot[w], left_ref[w], v);
                        left_ref[w] = v;
                    }
                }
            }
        }
        rot
    }
}

/// Runs the left-right test. Returns a rotation system (cyclic neighbour order
/// per node) when `g` is planar.
pub(crate) fn lr_planarity(g: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.node_count();
    if n > 2 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut s = LrState::new(g);
    for v in 0..n {
        if s.height[v].is_none() {
            s.height[v] = Some(0);
            s.roots.push(v);
            s.orientation(v);
        }
    }
    s.sort_adjacencies();
    for root in s.roots.clone() {
        if !s.testing(root) {
            return None;
        }
    }
    Some(s.embed())
}

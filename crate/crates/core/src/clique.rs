//! Exact maximum clique search on small dense graphs.
//!
//! Branch and bound over bitsets with a greedy coloring bound. The public
//! entry point returns the lexicographically least maximum clique (in
//! vertex index order), so the answer does not depend on search order.

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Bits {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_in_place(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    /// Clears every index `<= v`.
    fn clear_through(&mut self, v: usize) {
        let word = v / 64;
        for w in &mut self.0[..word] {
            *w = 0;
        }
        let keep = if v % 64 == 63 {
            0
        } else {
            !0u64 << (v % 64 + 1)
        };
        self.0[word] &= keep;
    }
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            adj: (0..n).map(|_| Bits::empty(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }
}

/// Lexicographically least maximum clique, as a sorted vertex list.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    max_clique_bounded(g, usize::MAX)
}

/// Like [`max_clique`], but the caller asserts that no clique is larger than
/// `upper_bound`; the search stops as soon as that size is reached.
pub fn max_clique_bounded(g: &Graph, upper_bound: usize) -> Vec<usize> {
    let omega = clique_number_bounded(g, upper_bound);
    lex_least_clique(g, omega)
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_bounded(g, usize::MAX)
}

fn clique_number_bounded(g: &Graph, upper_bound: usize) -> usize {
    if g.n == 0 {
        return 0;
    }
    let mut search = Search {
        g,
        best: 0,
        stop_at: upper_bound,
    };
    search.expand(0, Bits::full(g.n));
    search.best
}

fn lex_least_clique(g: &Graph, omega: usize) -> Vec<usize> {
    let mut chosen = Vec::with_capacity(omega);
    let mut cand = Bits::full(g.n);
    for v in 0..g.n {
        if chosen.len() == omega {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        let mut next = cand.and(&g.adj[v]);
        next.clear_through(v);
        let need = omega - chosen.len() - 1;
        if has_clique(g, &next, need) {
            chosen.push(v);
            cand = next;
        }
    }
    debug_assert_eq!(chosen.len(), omega);
    chosen
}

/// Whether `within` contains a clique of at least `target` vertices.
fn has_clique(g: &Graph, within: &Bits, target: usize) -> bool {
    if target == 0 {
        return true;
    }
    let mut search = Search {
        g,
        best: target - 1,
        stop_at: target,
    };
    search.expand(0, within.clone());
    search.best >= target
}

struct Search<'g> {
    g: &'g Graph,
    best: usize,
    stop_at: usize,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.best >= self.stop_at
    }

    fn expand(&mut self, depth: usize, mut cand: Bits) {
        let (order, colors) = self.color_sort(&cand);
        for i in (0..order.len()).rev() {
            if self.done() || depth + colors[i] <= self.best {
                return;
            }
            let v = order[i];
            let next = cand.and(&self.g.adj[v]);
            if next.is_empty() {
                if depth + 1 > self.best {
                    self.best = depth + 1;
                }
            } else {
                self.expand(depth + 1, next);
            }
            cand.remove(v);
        }
    }

    /// Greedy sequential coloring; `colors[i]` bounds the clique size among
    /// `order[..=i]`.
    fn color_sort(&self, cand: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                uncolored.remove(v);
                q.remove(v);
                q.and_not_in_place(&self.g.adj[v]);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

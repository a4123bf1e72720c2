//! Simple undirected graphs on qubit vertices, with the bulk edge rewrites
//! graph-state simulation needs: local complementation, biclique CZ
//! products, CS-square products, and local-complementation orbits.
//!
//! Adjacency is stored as one bit row per vertex packed into u64 words, so
//! a biclique toggle over vertex sets A, B costs O(|A| + |B|) row updates
//! of O(n/64) words each.

use crate::algebra::{PauliOperator, SinglePauli};
use std::cell::Cell;
use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

thread_local! {
    static TOGGLE_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Reset the thread-local count of single-edge toggles performed by graph
/// rewrites. Used to check asymptotic cost claims in tests and benches.
pub fn reset_toggle_count() {
    TOGGLE_COUNT.with(|c| c.set(0));
}

pub fn toggle_count() -> u64 {
    TOGGLE_COUNT.with(|c| c.get())
}

fn bump_toggles(k: u64) {
    TOGGLE_COUNT.with(|c| c.set(c.get() + k));
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A set of vertices packed into u64 words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = VertexSet::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range");
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    #[must_use]
    pub fn union(&self, o: &VertexSet) -> VertexSet {
        self.zip_with(o, |a, b| a | b)
    }

    #[must_use]
    pub fn intersection(&self, o: &VertexSet) -> VertexSet {
        self.zip_with(o, |a, b| a & b)
    }

    #[must_use]
    pub fn symmetric_difference(&self, o: &VertexSet) -> VertexSet {
        self.zip_with(o, |a, b| a ^ b)
    }

    fn zip_with(&self, o: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.n, o.n);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&o.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {0} out of range for {1} vertices")]
    OutOfRange(usize, usize),
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("graph too large for enumeration: n = {0} > {1}")]
    TooLarge(usize, usize),
    #[error("malformed edge list: {0}")]
    ParseEdgeList(String),
    #[error("malformed graph family parameters: {0}")]
    BadFamily(String),
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.toggle_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    fn xor_row(&mut self, v: usize, mask: &[u64]) {
        let mut toggled = 0;
        let row = &mut self.rows[v * self.stride..(v + 1) * self.stride];
        for (r, m) in row.iter_mut().zip(mask) {
            toggled += m.count_ones() as u64;
            *r ^= m;
        }
        bump_toggles(toggled);
    }

    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.rows[u * self.stride + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    fn bit(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::OutOfRange(v, self.n));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bit(u, v)
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.set_bit(u, v, !self.bit(u, v));
        self.set_bit(v, u, !self.bit(v, u));
        bump_toggles(1);
        // A full invariant sweep is O(n·d); keep the single-toggle path O(1).
        debug_assert_eq!(self.bit(u, v), self.bit(v, u), "asymmetric edge ({u},{v})");
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            words: self.row(v).to_vec(),
        }
    }

    /// N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v);
        s
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Toggle every edge among the neighbors of v (L_v). O(deg(v)) row ops.
    pub fn local_complement(&mut self, v: usize) -> Result<(), GraphError> {
        self.check(v)?;
        let mask = self.row(v).to_vec();
        let nbrs: Vec<usize> = self.neighbors(v).iter().collect();
        for u in nbrs {
            self.xor_row(u, &mask);
            // The mask contains u itself (u is a neighbor of v), which would
            // create a loop; clear it.
            self.set_bit(u, u, false);
        }
        self.debug_check_invariants();
        Ok(())
    }

    /// ∏_{p∈A, q∈B} CZ_{p,q} over ordered pairs, with CZ_{a,a} ≡ Z_a:
    /// toggles the biclique A×B and returns the diagonal Pauli ∏_{p∈A∩B} Z_p.
    pub fn apply_cz_product(&mut self, a: &VertexSet, b: &VertexSet) -> PauliOperator {
        let a_words = a.words.clone();
        let b_words = b.words.clone();
        for p in a.iter() {
            self.xor_row(p, &b_words);
        }
        for q in b.iter() {
            self.xor_row(q, &a_words);
        }
        // Each vertex in A∩B had its own diagonal bit toggled twice (once per
        // sweep), so no loops appear; every unordered pair {p,q} ends up
        // toggled in both endpoint rows exactly when the parity rule says so.
        let mut pauli = PauliOperator::identity(self.n);
        for p in a.intersection(b).iter() {
            pauli.set_z_bit(p, true);
        }
        self.debug_check_invariants();
        pauli
    }

    /// ∏_{p,q∈A} CS_{p,q} over ordered pairs, with CS_{a,a} ≡ S_a: each
    /// off-diagonal unordered pair contributes CS² = CZ (an edge toggle),
    /// each diagonal term one S.  Returns the vertices receiving S.
    pub fn apply_cs_square_product(&mut self, a: &VertexSet) -> Vec<usize> {
        let a_words = a.words.clone();
        for p in a.iter() {
            self.xor_row(p, &a_words);
            self.set_bit(p, p, false);
        }
        self.debug_check_invariants();
        a.iter().collect()
    }

    /// BFS closure under local complementation at every vertex.
    pub fn lc_orbit(&self, max_n: usize) -> Result<Vec<Graph>, GraphError> {
        if self.n > max_n {
            return Err(GraphError::TooLarge(self.n, max_n));
        }
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.rows.clone());
        queue.push_back(self.clone());
        let mut out = vec![self.clone()];
        while let Some(g) = queue.pop_front() {
            for v in 0..self.n {
                if g.degree(v) < 2 {
                    continue; // L_v is the identity
                }
                let mut h = g.clone();
                h.local_complement(v).unwrap();
                if seen.insert(h.rows.clone()) {
                    out.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(out)
    }

    fn debug_check_invariants(&self) {
        #[cfg(debug_assertions)]
        {
            for u in 0..self.n {
                debug_assert!(!self.bit(u, u), "loop at {u}");
                for v in self.neighbors(u).iter() {
                    debug_assert!(self.bit(v, u), "asymmetric edge ({u},{v})");
                }
            }
        }
    }

    /// Parse an edge list, one `u v` pair per line, 1-indexed.
    pub fn from_edge_list(n: usize, text: &str) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let (u, v) = (it.next(), it.next());
            let parse = |s: Option<&str>| -> Result<usize, GraphError> {
                s.and_then(|s| s.parse::<usize>().ok())
                    .filter(|&x| x >= 1 && x <= n)
                    .ok_or_else(|| GraphError::ParseEdgeList(line.to_string()))
            };
            let (u, v) = (parse(u)? - 1, parse(v)? - 1);
            if it.next().is_some() {
                return Err(GraphError::ParseEdgeList(line.to_string()));
            }
            if !g.has_edge(u, v) {
                g.toggle_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Render as an edge list, 1-indexed, one edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            writeln!(s, "{} {}", u + 1, v + 1).unwrap();
        }
        s
    }

    /// DOT export; an optional label per vertex (e.g. its local Clifford).
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            match labels.and_then(|l| l.get(v)) {
                Some(l) => writeln!(s, "  q{} [label=\"{}: {}\"];", v + 1, v + 1, l).unwrap(),
                None => writeln!(s, "  q{};", v + 1).unwrap(),
            }
        }
        for (u, v) in self.edges() {
            writeln!(s, "  q{} -- q{};", u + 1, v + 1).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// The graph families used by the local-complementation orbit of W_{1,2}
/// and the star/complete/empty graphs.  `a` and `b` must partition 0..n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// Edges: (i,j), i to all of A\{i}, j to all of B\{j}; i ∈ A, j ∈ B.
    W { i: usize, j: usize },
    /// Complete bipartite graph between A and B.
    K,
    /// K plus all edges within A.
    Ka,
    /// K plus all edges within B.
    Kb,
    /// All of A mutually connected, plus vertex i connected to everything;
    /// i ∈ B.
    Kai { i: usize },
    /// All of B mutually connected, plus vertex i connected to everything;
    /// i ∈ A.
    Kbi { i: usize },
    /// Star with center c (no partition needed).
    Star { center: usize },
    /// Complete graph.
    Complete,
    /// Empty graph.
    Empty,
}

pub fn build_named_graph(
    n: usize,
    family: &GraphFamily,
    a: &[usize],
    b: &[usize],
) -> Result<Graph, GraphError> {
    use GraphFamily::*;
    let needs_partition = !matches!(family, Star { .. } | Complete | Empty);
    if needs_partition {
        let mut all: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
        all.sort_unstable();
        if all != (0..n).collect::<Vec<_>>() {
            return Err(GraphError::BadFamily(format!(
                "A = {a:?}, B = {b:?} is not a partition of 0..{n}"
            )));
        }
    }
    let mut g = Graph::empty(n);
    let connect = |g: &mut Graph, u: usize, v: usize| -> Result<(), GraphError> {
        if u != v && !g.has_edge(u, v) {
            g.toggle_edge(u, v)?;
        }
        Ok(())
    };
    let clique = |g: &mut Graph, vs: &[usize]| -> Result<(), GraphError> {
        for (k, &u) in vs.iter().enumerate() {
            for &v in &vs[k + 1..] {
                if !g.has_edge(u, v) {
                    g.toggle_edge(u, v)?;
                }
            }
        }
        Ok(())
    };
    let bipartite = |g: &mut Graph| -> Result<(), GraphError> {
        for &u in a {
            for &v in b {
                if !g.has_edge(u, v) {
                    g.toggle_edge(u, v)?;
                }
            }
        }
        Ok(())
    };
    match family {
        W { i, j } => {
            if !a.contains(i) || !b.contains(j) {
                return Err(GraphError::BadFamily(format!("need i={i} in A, j={j} in B")));
            }
            connect(&mut g, *i, *j)?;
            for &u in a {
                connect(&mut g, *i, u)?;
            }
            for &v in b {
                connect(&mut g, *j, v)?;
            }
        }
        K => bipartite(&mut g)?,
        Ka => {
            bipartite(&mut g)?;
            clique(&mut g, a)?;
        }
        Kb => {
            bipartite(&mut g)?;
            clique(&mut g, b)?;
        }
        Kai { i } => {
            if !b.contains(i) {
                return Err(GraphError::BadFamily(format!("K_a,{i} needs i in B")));
            }
            clique(&mut g, a)?;
            for v in 0..n {
                connect(&mut g, *i, v)?;
            }
        }
        Kbi { i } => {
            if !a.contains(i) {
                return Err(GraphError::BadFamily(format!("K_b,{i} needs i in A")));
            }
            clique(&mut g, b)?;
            for v in 0..n {
                connect(&mut g, *i, v)?;
            }
        }
        Star { center } => {
            if *center >= n {
                return Err(GraphError::OutOfRange(*center, n));
            }
            for v in 0..n {
                connect(&mut g, *center, v)?;
            }
        }
        Complete => {
            g = Graph::complete(n);
        }
        Empty => {}
    }
    Ok(g)
}

// Small helpers used by the state layer.
impl Graph {
    /// The stabilizer generator g_v = X_v ∏_{u∈N(v)} Z_u of |G>.
    pub fn stabilizer_generator(&self, v: usize) -> PauliOperator {
        let mut p = PauliOperator::embed(
            self.n,
            v,
            SinglePauli::new(crate::algebra::PauliLetter::X, 0),
        );
        for u in self.neighbors(v).iter() {
            p.set_z_bit(u, true);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_from(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.toggle_edge(u, v).unwrap();
        }
        g
    }

    #[test]
    fn toggle_is_a_symmetric_involution() {
        let mut g = Graph::empty(3);
        g.toggle_edge(0, 1).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        g.toggle_edge(1, 0).unwrap();
        assert_eq!(g, Graph::empty(3));
        assert!(g.toggle_edge(1, 1).is_err());
        assert!(g.toggle_edge(0, 7).is_err());
    }

    #[test]
    fn triangle_minus_one_edge_is_a_path() {
        let mut g = Graph::complete(3);
        g.toggle_edge(0, 2).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn local_complement_star_gives_triangle() {
        let mut g = g_from(3, &[(0, 1), (0, 2)]);
        g.local_complement(0).unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn local_complement_fixes_low_degree_vertices() {
        let g = g_from(4, &[(0, 1), (2, 3)]);
        let mut h = g.clone();
        h.local_complement(0).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn local_complement_is_an_involution() {
        // Deterministic pseudo-random graphs.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.gen_range(2..=10);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.toggle_edge(u, v).unwrap();
                    }
                }
            }
            let v = rng.gen_range(0..n);
            let mut h = g.clone();
            h.local_complement(v).unwrap();
            h.local_complement(v).unwrap();
            assert_eq!(g, h);
        }
    }

    #[test]
    fn cz_product_disjoint_singletons_is_a_toggle() {
        let mut g = Graph::empty(2);
        let p = g.apply_cz_product(
            &VertexSet::from_iter(2, [0]),
            &VertexSet::from_iter(2, [1]),
        );
        assert!(p.is_identity());
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn cz_product_equal_sets_gives_diagonal_paulis_only() {
        let mut g = Graph::empty(2);
        let s = VertexSet::from_iter(2, [0, 1]);
        let p = g.apply_cz_product(&s, &s);
        assert_eq!(g, Graph::empty(2));
        assert!(p.z_bit(0) && p.z_bit(1) && !p.x_bit(0) && !p.x_bit(1));
    }

    #[test]
    fn cz_product_overlapping_sets_follows_the_parity_rule() {
        let mut g = Graph::empty(3);
        let p = g.apply_cz_product(
            &VertexSet::from_iter(3, [0, 1]),
            &VertexSet::from_iter(3, [1, 2]),
        );
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(p.z_bit(1) && !p.z_bit(0) && !p.z_bit(2));
    }

    #[test]
    fn cs_square_product_toggles_pairs_and_lists_s_targets() {
        let mut g = Graph::empty(3);
        let s = g.apply_cs_square_product(&VertexSet::from_iter(3, [0, 1]));
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(s, vec![0, 1]);
        // Applying it twice cancels all edge changes (CS^4 = I per pair).
        let s2 = g.apply_cs_square_product(&VertexSet::from_iter(3, [0, 1]));
        assert_eq!(g, Graph::empty(3));
        assert_eq!(s2, vec![0, 1]);
    }

    #[test]
    fn orbit_of_rigid_graphs_is_trivial() {
        assert_eq!(Graph::empty(3).lc_orbit(12).unwrap().len(), 1);
        assert_eq!(g_from(2, &[(0, 1)]).lc_orbit(12).unwrap().len(), 1);
        assert!(Graph::empty(13).lc_orbit(12).is_err());
    }

    #[test]
    fn w12_orbit_is_the_eleven_graph_family() {
        // A = {0, 2}, B = {1, 3} (0-indexed); W_{0,1}.
        let a = [0usize, 2];
        let b = [1usize, 3];
        let w = build_named_graph(4, &GraphFamily::W { i: 0, j: 1 }, &a, &b).unwrap();
        assert_eq!(w.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        let orbit = w.lc_orbit(12).unwrap();
        assert_eq!(orbit.len(), 11);

        // The closed-form family: {K, K_a, K_b} ∪ {K_{a,i}: i∈B} ∪
        // {K_{b,i}: i∈A} ∪ {W_{i,j}: i∈A, j∈B}.
        let mut family: Vec<Graph> = Vec::new();
        for f in [GraphFamily::K, GraphFamily::Ka, GraphFamily::Kb] {
            family.push(build_named_graph(4, &f, &a, &b).unwrap());
        }
        for i in b {
            family.push(build_named_graph(4, &GraphFamily::Kai { i }, &a, &b).unwrap());
        }
        for i in a {
            family.push(build_named_graph(4, &GraphFamily::Kbi { i }, &a, &b).unwrap());
        }
        for i in a {
            for j in b {
                family.push(build_named_graph(4, &GraphFamily::W { i, j }, &a, &b).unwrap());
            }
        }
        assert_eq!(family.len(), 11);
        for g in &family {
            assert!(orbit.contains(g), "missing {:?}", g.edges());
        }
    }

    #[test]
    fn named_lc_relations_hold() {
        let a = [0usize, 2];
        let b = [1usize, 3];
        let build = |f: &GraphFamily| build_named_graph(4, f, &a, &b).unwrap();
        // L_i(W_{i,j}) = K_{a,j}; L_j(W_{i,j}) = K_{b,i}.
        let mut w = build(&GraphFamily::W { i: 0, j: 1 });
        w.local_complement(0).unwrap();
        assert_eq!(w, build(&GraphFamily::Kai { i: 1 }));
        let mut w = build(&GraphFamily::W { i: 0, j: 1 });
        w.local_complement(1).unwrap();
        assert_eq!(w, build(&GraphFamily::Kbi { i: 0 }));
        // L_i(K) = K_b, L_j(K) = K_a.
        let mut k = build(&GraphFamily::K);
        k.local_complement(0).unwrap();
        assert_eq!(k, build(&GraphFamily::Kb));
        let mut k = build(&GraphFamily::K);
        k.local_complement(1).unwrap();
        assert_eq!(k, build(&GraphFamily::Ka));
    }

    #[test]
    fn star_complete_empty_builders() {
        let s = build_named_graph(3, &GraphFamily::Star { center: 2 }, &[], &[]).unwrap();
        assert_eq!(s.edges(), vec![(0, 2), (1, 2)]);
        let k = build_named_graph(3, &GraphFamily::Complete, &[], &[]).unwrap();
        assert_eq!(k.num_edges(), 3);
        let e = build_named_graph(3, &GraphFamily::Empty, &[], &[]).unwrap();
        assert_eq!(e.num_edges(), 0);
        assert!(build_named_graph(4, &GraphFamily::K, &[0], &[1, 2]).is_err());
    }

    #[test]
    fn edge_list_round_trip_is_exact() {
        let g = g_from(5, &[(0, 2), (1, 4), (2, 3)]);
        let text = g.to_edge_list();
        assert_eq!(text, "1 3\n2 5\n3 4\n");
        assert_eq!(Graph::from_edge_list(5, &text).unwrap(), g);
        assert!(Graph::from_edge_list(2, "1 5").is_err());
        assert!(Graph::from_edge_list(2, "1").is_err());
    }

    #[test]
    fn dot_export_mentions_every_vertex_and_edge() {
        let g = g_from(2, &[(0, 1)]);
        let dot = g.to_dot(None);
        assert!(dot.contains("q1 -- q2;"));
        assert!(dot.starts_with("graph G {"));
    }

    #[test]
    fn toggle_counter_tracks_work() {
        reset_toggle_count();
        let mut g = Graph::empty(4);
        g.toggle_edge(0, 1).unwrap();
        assert_eq!(toggle_count(), 1);
        reset_toggle_count();
        assert_eq!(toggle_count(), 0);
    }

    #[test]
    fn stabilizer_generator_shape() {
        let g = g_from(3, &[(0, 1), (0, 2)]);
        let p = g.stabilizer_generator(0);
        assert!(p.x_bit(0) && !p.z_bit(0) && p.z_bit(1) && p.z_bit(2));
        assert_eq!(p.phase_exp(), 0);
    }
}

//! Randomized verification suites cross-checking the graph-state simulator
//! against the dense oracle.
//!
//! Each suite draws independent cases from a per-case seeded RNG, so runs
//! are deterministic for a given `(seed, cases)` regardless of the run
//! mode, and the parallel and sequential modes produce identical reports.

use crate::algebra::clifford::all_cosets;
use crate::algebra::{LocalClifford, PauliLetter, PauliOperator, PhaseScalar, SinglePauli};
use crate::gates::{self, MergeSpec, PQCase};
use crate::graph::{Graph, VertexSet};
use crate::oracle::DenseState;
use crate::state::ExtendedGraphState;
use crate::triplets::{self, TripletClass};
use crate::{inner, oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Whether to fan verification cases out across threads.
///
/// `Parallel` requires the `parallel` feature; without it the mode silently
/// degrades to sequential execution (the report is identical either way).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    Parallel,
    Sequential,
}

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Names accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 6] = ["canon", "table1", "circuits", "inner", "merge", "triplets"];

/// Run one named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, cases: usize, mode: RunMode) -> Option<VerifyReport> {
    let case: fn(&mut ChaCha8Rng) -> Result<(), String> = match name {
        "canon" => canon_case,
        "table1" => table1_case,
        "circuits" => circuit_case,
        "inner" => inner_case,
        "merge" => merge_case,
        "triplets" => triplet_case,
        _ => return None,
    };
    let suite = SUITE_NAMES.iter().find(|&&s| s == name).unwrap();
    Some(run_cases(suite, seed, cases, mode, case))
}

/// Run every suite with the same seed and case count.
pub fn run_all(seed: u64, cases: usize, mode: RunMode) -> Vec<VerifyReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, seed, cases, mode).unwrap())
        .collect()
}

fn run_cases(
    suite: &'static str,
    seed: u64,
    cases: usize,
    mode: RunMode,
    case: fn(&mut ChaCha8Rng) -> Result<(), String>,
) -> VerifyReport {
    let run_one = |i: usize| -> Option<String> {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        case(&mut rng).err().map(|e| format!("case {i}: {e}"))
    };
    let mismatches: Vec<String> = match mode {
        RunMode::Sequential => (0..cases).filter_map(run_one).collect(),
        RunMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..cases).into_par_iter().filter_map(run_one).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..cases).filter_map(run_one).collect()
            }
        }
    };
    VerifyReport { suite, cases, mismatches }
}

// ---------------------------------------------------------------- helpers

/// An Erdős–Rényi graph with edge probability `p`. Public so integration
/// tests and benches can draw the same instances the suites use.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.toggle_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A uniformly dressed extended graph state over a density-1/2 graph.
pub fn random_state(rng: &mut ChaCha8Rng, n: usize) -> ExtendedGraphState {
    let reps: Vec<LocalClifford> = all_cosets().collect();
    let locals = (0..n)
        .map(|_| {
            let mut c = reps[rng.gen_range(0..reps.len())];
            c.phase_exp = rng.gen_range(0..4);
            c
        })
        .collect();
    ExtendedGraphState {
        scalar: PhaseScalar::omega(rng.gen_range(0..8)),
        locals,
        graph: random_graph(rng, n, 0.5),
    }
}

/// A uniformly random Hermitian Pauli operator (sign ±1).
pub fn random_hermitian_pauli(rng: &mut ChaCha8Rng, n: usize) -> PauliOperator {
    let letters = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
    let mut p = PauliOperator::identity(n);
    for q in 0..n {
        p = p.mul(&PauliOperator::embed(
            n,
            q,
            SinglePauli::new(letters[rng.gen_range(0..4)], 0),
        ));
    }
    let k = p.phase_as_letter_product();
    p.mul_phase(-(k as i64) + if rng.gen_bool(0.5) { 2 } else { 0 });
    p
}

/// The dense vector of the plain graph state |G>.
pub fn dense_graph_state(g: &Graph) -> Result<DenseState, String> {
    let mut d = DenseState::plus_state(g.num_vertices()).map_err(|e| e.to_string())?;
    for (x, y) in g.edges() {
        d.apply_cz(x, y).map_err(|e| e.to_string())?;
    }
    Ok(d)
}

fn err<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

/// Rewrite the representation in place using the local-complementation
/// identity |G> = (H S^dag H)_x (prod_{i in N(x)} S_i) |L_x(G)>, which
/// changes the graph and locals but not the state.
fn rewrite_local_complement(s: &mut ExtendedGraphState, x: usize) {
    let nb: Vec<usize> = s.graph.neighbors(x).iter().collect();
    s.graph.local_complement(x).unwrap();
    let (hs, r1) = LocalClifford::H.compose(&LocalClifford::SDG);
    let (hsdh, r2) = hs.compose(&LocalClifford::H);
    let (cx, r3) = s.locals[x].compose(&hsdh);
    s.locals[x] = cx;
    s.scalar = s.scalar.mul(&r1).mul(&r2).mul(&r3);
    for i in nb {
        let (c, r) = s.locals[i].compose(&LocalClifford::S);
        s.locals[i] = c;
        s.scalar = s.scalar.mul(&r);
    }
}

/// A state-preserving random shuffle of the internal representation.
fn redress(rng: &mut ChaCha8Rng, s: &ExtendedGraphState) -> ExtendedGraphState {
    let n = s.num_qubits();
    let mut t = s.clone();
    for _ in 0..(2 * n) {
        match rng.gen_range(0..2) {
            0 => rewrite_local_complement(&mut t, rng.gen_range(0..n)),
            _ if n >= 2 => {
                let x = rng.gen_range(0..n);
                let mut y = rng.gen_range(0..n - 1);
                if y >= x {
                    y += 1;
                }
                gates::apply_cz(&mut t, x, y).unwrap();
                gates::apply_cz(&mut t, x, y).unwrap();
            }
            _ => {}
        }
    }
    t
}

// ----------------------------------------------------------------- suites

/// Canonicalization preserves the dense vector exactly, and any two
/// representations of the same vector canonicalize identically.
fn canon_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=8);
    let s = random_state(rng, n);
    let c = s.to_canonical_form();
    if !c.densify().map_err(err)?.approx_eq(&s.densify().map_err(err)?) {
        return Err("canonical form changed the dense vector".into());
    }
    let a = redress(rng, &s).to_canonical_form();
    let b = redress(rng, &s).to_canonical_form();
    if a != b || a != c {
        return Err("re-dressings canonicalized differently".into());
    }
    Ok(())
}

/// `psi_pq` equals the dense (1/2)((I+P) + (I-P)Q)|G> for random letters,
/// signs, adjacency, and graphs.
fn table1_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(2..=8);
    let letters = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
    let p = SinglePauli::new(letters[rng.gen_range(0..3)], 2 * rng.gen_range(0..2));
    let q = SinglePauli::new(letters[rng.gen_range(0..3)], 2 * rng.gen_range(0..2));
    let adjacent = rng.gen_bool(0.5);
    table1_check(rng, n, p, q, adjacent)
}

/// One CZ-product dispatch check: on a random `n`-vertex graph with the
/// (x, y) adjacency forced to `adjacent`, the closed-form state for the
/// (possibly signed) letter pair (p, q) must equal the dense
/// (1/2)((I+P) + (I-P)Q)|G>, global phase included.
pub fn table1_check(
    rng: &mut ChaCha8Rng,
    n: usize,
    p: SinglePauli,
    q: SinglePauli,
    adjacent: bool,
) -> Result<(), String> {
    let mut g = random_graph(rng, n, 0.5);
    let x = rng.gen_range(0..n - 1);
    let y = rng.gen_range(x + 1..n);
    if g.has_edge(x, y) != adjacent {
        g.toggle_edge(x, y).unwrap();
    }
    let p_pos = SinglePauli::new(p.letter, 0);
    let case = PQCase { p: p_pos, q: SinglePauli::new(q.letter, 0), x, y };
    let mut got = gates::psi_pq(&g, &case).map_err(err)?;
    // Signs come off as Pauli prefactors: a negative Q flips the (I-P)Q
    // term, which P_x restores; a negative P swaps the two terms, which
    // the (still signed) Q_y restores.
    if q.phase_exp != 0 {
        got.apply_local(x, &LocalClifford::from_pauli(p_pos));
    }
    if p.phase_exp != 0 {
        got.apply_local(y, &LocalClifford::from_pauli(q));
    }
    let got = got.densify().map_err(err)?;

    let d = dense_graph_state(&g)?;
    let mut pd = d.clone();
    pd.apply_pauli(&PauliOperator::embed(n, x, p)).map_err(err)?;
    let mut plus = d.clone();
    plus.add(&pd);
    let mut minus = d.clone();
    pd.scale((-1.0).into());
    minus.add(&pd);
    minus.apply_pauli(&PauliOperator::embed(n, y, q)).map_err(err)?;
    plus.add(&minus);
    plus.scale(0.5.into());
    if !got.approx_eq(&plus) {
        return Err(format!("table row mismatch for {p:?}, {q:?} at ({x},{y})"));
    }
    Ok(())
}

/// Random {H,S,SDG,CZ,CX,CY} circuits agree with the dense oracle, global
/// phase included.
fn circuit_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=10);
    let depth = rng.gen_range(1..=40);
    let mut s = ExtendedGraphState::basis_state(&vec![false; n]).map_err(err)?;
    let mut d = DenseState::zero_state(n).map_err(err)?;
    for _ in 0..depth {
        let two_qubit = n >= 2 && rng.gen_bool(0.5);
        if two_qubit {
            let x = rng.gen_range(0..n);
            let mut y = rng.gen_range(0..n - 1);
            if y >= x {
                y += 1;
            }
            match rng.gen_range(0..3) {
                0 => {
                    gates::apply_cz(&mut s, x, y).map_err(err)?;
                    d.apply_cz(x, y).map_err(err)?;
                }
                1 => {
                    gates::apply_cx(&mut s, x, y).map_err(err)?;
                    d.apply_local(y, &LocalClifford::H).map_err(err)?;
                    d.apply_cz(x, y).map_err(err)?;
                    d.apply_local(y, &LocalClifford::H).map_err(err)?;
                }
                _ => {
                    gates::apply_cy(&mut s, x, y).map_err(err)?;
                    d.apply_local(y, &LocalClifford::SDG).map_err(err)?;
                    d.apply_local(y, &LocalClifford::H).map_err(err)?;
                    d.apply_cz(x, y).map_err(err)?;
                    d.apply_local(y, &LocalClifford::H).map_err(err)?;
                    d.apply_local(y, &LocalClifford::S).map_err(err)?;
                }
            }
        } else {
            let q = rng.gen_range(0..n);
            let c = [LocalClifford::H, LocalClifford::S, LocalClifford::SDG]
                [rng.gen_range(0..3)];
            s.apply_local(q, &c);
            d.apply_local(q, &c).map_err(err)?;
        }
    }
    if !s.densify().map_err(err)?.approx_eq(&d) {
        return Err("random circuit diverged from the oracle".into());
    }
    Ok(())
}

/// Inner products match the oracle, are conjugate-symmetric, and give
/// exactly 1 on identical states.
fn inner_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=10);
    let s1 = random_state(rng, n);
    let s2 = random_state(rng, n);
    let g = inner::inner_product(&s1, &s2).map_err(err)?;
    let dense = s1.densify().map_err(err)?.inner(&s2.densify().map_err(err)?);
    if (g.to_complex() - dense).norm() > 1e-12 {
        return Err(format!("inner product {g} does not match oracle {dense}"));
    }
    if inner::inner_product(&s2, &s1).map_err(err)? != g.conj() {
        return Err("conjugate symmetry violated".into());
    }
    if inner::inner_product(&s1, &s1).map_err(err)? != PhaseScalar::new(0, 0) {
        return Err("<s|s> is not exactly 1".into());
    }
    Ok(())
}

/// Z-product merging (all k), the two-H split on non-adjacent vertices,
/// and Pauli measurement all agree with the oracle.
fn merge_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(1..=8);
            let g = random_graph(rng, n, 0.5);
            let b: Vec<usize> = {
                let mut b: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                if b.is_empty() {
                    b.push(rng.gen_range(0..n));
                }
                b
            };
            let k = rng.gen_range(0..4u8);
            let spec = MergeSpec { b: VertexSet::from_iter(n, b.iter().copied()), k };
            let merged = gates::merge_z(&g, &spec).map_err(err)?.densify().map_err(err)?;
            let d = dense_graph_state(&g)?;
            let mut zd = d.clone();
            let mut zb = PauliOperator::identity(n);
            for &q in &b {
                zb.set_z_bit(q, true);
            }
            zb.mul_phase(k as i64);
            zd.apply_pauli(&zb).map_err(err)?;
            let mut want = d;
            want.add(&zd);
            want.scale(std::f64::consts::FRAC_1_SQRT_2.into());
            if !merged.approx_eq(&want) {
                return Err(format!("merge mismatch at k={k}, B={b:?}"));
            }
        }
        1 => {
            let n = rng.gen_range(2..=8);
            let mut g = random_graph(rng, n, 0.5);
            let x = rng.gen_range(0..n - 1);
            let y = rng.gen_range(x + 1..n);
            if g.has_edge(x, y) {
                g.toggle_edge(x, y).unwrap();
            }
            let (t1, t2) = gates::split_hh(&g, x, y).map_err(err)?;
            let mut want = dense_graph_state(&g)?;
            want.apply_local(x, &LocalClifford::H).map_err(err)?;
            want.apply_local(y, &LocalClifford::H).map_err(err)?;
            let mut got = t1.densify().map_err(err)?;
            got.add(&t2.densify().map_err(err)?);
            if !got.approx_eq(&want) {
                return Err(format!("split mismatch at ({x},{y})"));
            }
        }
        _ => {
            let n = rng.gen_range(1..=8);
            let s = random_state(rng, n);
            let p = random_hermitian_pauli(rng, n);
            let (prob, post) = gates::measure_pauli(&s, &p).map_err(err)?;
            let d = s.densify().map_err(err)?;
            let mut proj = d.clone();
            proj.apply_pauli(&p).map_err(err)?;
            proj.add(&d);
            proj.scale(0.5.into());
            let want_prob = proj.norm().powi(2);
            if (prob - want_prob).abs() > 1e-12 || ![0.0, 0.5, 1.0].contains(&prob) {
                return Err(format!("probability {prob} vs oracle {want_prob}"));
            }
            if prob > 0.0 {
                proj.scale((1.0 / proj.norm()).into());
                if !post.densify().map_err(err)?.approx_eq(&proj) {
                    return Err("post-measurement state mismatch".into());
                }
            } else if !post.is_zero() {
                return Err("zero-probability branch returned a nonzero state".into());
            }
        }
    }
    Ok(())
}

/// Triplet classification agrees with the oracle rank, and completed pairs
/// have three equal pairwise inner products.
fn triplet_case(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=8);
    let variant = rng.gen_range(0..4);
    let (s1, s2, s3, want_dependent) = match variant {
        // Independent-or-arbitrary random triple.
        0 => {
            let a = random_state(rng, n);
            let b = random_state(rng, n);
            let c = random_state(rng, n);
            (a, b, c, None)
        }
        // Pauli-related pair plus its completion.
        1 => {
            let a = random_state(rng, n);
            let p = random_hermitian_pauli(rng, n);
            let mut b = a.clone();
            b.apply_pauli(&p);
            match triplets::complete_pair(&a, &b).map_err(err)? {
                Some(c) if !c.is_zero() => (a, b, c, Some(true)),
                _ => return Ok(()), // parallel pair; nothing to classify
            }
        }
        // S-gate triple pushed through a common random circuit.
        _ => {
            let free: Vec<usize> = if variant == 2 || n < 2 {
                vec![rng.gen_range(0..n)]
            } else {
                let x = rng.gen_range(0..n - 1);
                vec![x, rng.gen_range(x + 1..n)]
            };
            let mut psi = ExtendedGraphState::plus_state(n).map_err(err)?;
            for q in 0..n {
                if !free.contains(&q) {
                    psi.apply_local(q, &LocalClifford::H);
                }
            }
            for &x in &free {
                if rng.gen_bool(0.5) {
                    psi.apply_local(x, &LocalClifford::S);
                }
                for q in 0..n {
                    if !free.contains(&q) && rng.gen_bool(0.4) {
                        gates::apply_cz(&mut psi, x, q).map_err(err)?;
                    }
                }
            }
            psi.scalar = psi.scalar.mul(&PhaseScalar::omega(rng.gen_range(0..8)));
            let mut third = psi.clone();
            if free.len() == 1 {
                third.apply_local(free[0], &LocalClifford::S);
            } else {
                let z = LocalClifford::from_pauli(SinglePauli::new(PauliLetter::Z, 0));
                third.apply_local(free[0], &z);
                third.apply_local(free[1], &z);
                gates::apply_cz(&mut third, free[0], free[1]).map_err(err)?;
            }
            let mut triple = [
                ExtendedGraphState::basis_state(&vec![false; n]).map_err(err)?,
                psi,
                third,
            ];
            for _ in 0..(3 * n) {
                let q = rng.gen_range(0..n);
                let c = [LocalClifford::H, LocalClifford::S][rng.gen_range(0..2)];
                for s in triple.iter_mut() {
                    s.apply_local(q, &c);
                }
                if n >= 2 {
                    let x = rng.gen_range(0..n);
                    let mut y = rng.gen_range(0..n - 1);
                    if y >= x {
                        y += 1;
                    }
                    for s in triple.iter_mut() {
                        gates::apply_cz(s, x, y).map_err(err)?;
                    }
                }
            }
            let [a, b, c] = triple;
            (a, b, c, Some(true))
        }
    };

    let analysis = triplets::classify_triplet(&s1, &s2, &s3).map_err(err)?;
    let rank = oracle::rank(&[
        s1.densify().map_err(err)?,
        s2.densify().map_err(err)?,
        s3.densify().map_err(err)?,
    ]);
    let dependent = !matches!(analysis.class, TripletClass::Independent);
    if dependent != (rank <= 2) {
        return Err(format!("classified {:?} but oracle rank is {rank}", analysis.class));
    }
    if let Some(want) = want_dependent {
        if dependent != want {
            return Err(format!("constructed triple misclassified as {:?}", analysis.class));
        }
    }
    if let Some(c) = analysis.coefficients {
        let mut rhs = s2.densify().map_err(err)?;
        rhs.scale(c[0].to_complex());
        let mut t3 = s3.densify().map_err(err)?;
        t3.scale(c[1].to_complex());
        rhs.add(&t3);
        if !s1.densify().map_err(err)?.approx_eq(&rhs) {
            return Err("dependence coefficients do not reproduce s1".into());
        }
    }
    // Completion symmetry on exactly-overlapping pairs.
    if let Some(t) = triplets::complete_pair(&s1, &s2).map_err(err)? {
        if !t.is_zero() {
            let g12 = inner::inner_product(&s1, &s2).map_err(err)?;
            if !g12.is_zero() && !g12.is_unit() {
                let g23 = inner::inner_product(&s2, &t).map_err(err)?;
                let g31 = inner::inner_product(&t, &s1).map_err(err)?;
                if g23 != g12 || g31 != g12 {
                    return Err("completed triple is not inner-product symmetric".into());
                }
            }
        }
    }
    Ok(())
}

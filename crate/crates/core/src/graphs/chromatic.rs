//! Chromatic polynomials by deletion-contraction with memoization on
//! canonical forms, and the derived Poincare polynomial / Hilbert series of
//! the AOT algebra.

use std::cell::RefCell;
use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{canonical_form, clique_counts, is_chordal, SimpleGraph};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Memo cache for deletion-contraction, keyed on canonical forms, with a
/// bounded entry count (oldest entries evicted first).
pub struct ChromaticCache {
    map: HashMap<SimpleGraph, IntPolynomial>,
    queue: VecDeque<SimpleGraph>,
    cap: usize,
}

impl ChromaticCache {
    pub fn new(cap: usize) -> Self {
        ChromaticCache {
            map: HashMap::new(),
            queue: VecDeque::new(),
            cap,
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn get(&self, g: &SimpleGraph) -> Option<&IntPolynomial> {
        self.map.get(g)
    }

    pub fn insert(&mut self, g: SimpleGraph, p: IntPolynomial) {
        if self.map.len() >= self.cap {
            if let Some(old) = self.queue.pop_front() {
                self.map.remove(&old);
            }
        }
        if self.map.insert(g.clone(), p).is_none() {
            self.queue.push_back(g);
        }
    }

    /// Preload an entry computed elsewhere (e.g. a persisted cache file).
    pub fn preload(&mut self, g: SimpleGraph, p: IntPolynomial) {
        self.insert(g, p);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimpleGraph, &IntPolynomial)> {
        self.map.iter()
    }
}

impl Default for ChromaticCache {
    fn default() -> Self {
        ChromaticCache::new(1_000_000)
    }
}

thread_local! {
    static LOCAL_CACHE: RefCell<ChromaticCache> = RefCell::new(ChromaticCache::default());
}

/// The chromatic polynomial of `g` (loops never occur; parallel edges are
/// collapsed during contraction since they do not change colourings).
/// Memoized per thread; see [`chromatic_polynomial_with_cache`] to control
/// the cache.
pub fn chromatic_polynomial(g: &SimpleGraph) -> IntPolynomial {
    LOCAL_CACHE.with(|c| chromatic_polynomial_with_cache(g, &mut c.borrow_mut()))
}

pub fn chromatic_polynomial_with_cache(
    g: &SimpleGraph,
    cache: &mut ChromaticCache,
) -> IntPolynomial {
    let comps = g.components();
    if comps.len() <= 1 {
        return chi_connected(g, cache);
    }
    let mut acc = IntPolynomial::one();
    for comp in comps {
        acc = &acc * &chi_connected(&induced_subgraph(g, &comp), cache);
    }
    acc
}

fn chi_connected(g: &SimpleGraph, cache: &mut ChromaticCache) -> IntPolynomial {
    let n = g.n();
    let k = g.edge_count();
    if n == 0 {
        return IntPolynomial::one();
    }
    if k == 0 {
        return IntPolynomial::monomial(BigInt::one(), n);
    }
    if k + 1 == n {
        // spanning tree: t (t-1)^(n-1)
        let tm1 = IntPolynomial::linear(-1, 1).pow((n - 1) as u32);
        return &IntPolynomial::monomial(BigInt::one(), 1) * &tm1;
    }
    if k == n * (n - 1) / 2 {
        return IntPolynomial::falling_factorial(n);
    }
    let key = if n <= 8 { canonical_form(g) } else { g.clone() };
    if let Some(p) = cache.get(&key) {
        return p.clone();
    }
    // delete-contract on the last edge
    let e = k - 1;
    let mut edges = g.edges().to_vec();
    let (u, v) = edges.remove(e);
    let deleted = SimpleGraph::new(n, edges).unwrap();
    let contracted = contract_edge(g, u, v);
    let chi = &chromatic_polynomial_with_cache(&deleted, cache)
        - &chromatic_polynomial_with_cache(&contracted, cache);
    cache.insert(key, chi.clone());
    chi
}

/// Contracts edge `uv` (`u < v`): `v` is merged into `u`, labels above `v`
/// shift down, parallel edges collapse.
fn contract_edge(g: &SimpleGraph, u: u8, v: u8) -> SimpleGraph {
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(a, b) in g.edges() {
        if (a, b) == (u, v) {
            continue;
        }
        let map = |x: u8| -> u8 {
            let y = if x == v { u } else { x };
            if y > v {
                y - 1
            } else {
                y
            }
        };
        let (mut a, mut b) = (map(a), map(b));
        if a == b {
            continue; // parallel edge to uv collapses to a loop; drop it
        }
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        edges.push((a, b));
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::new(g.n() - 1, edges).unwrap()
}

pub(crate) fn induced_subgraph(g: &SimpleGraph, vertices: &[u8]) -> SimpleGraph {
    let mut rev = [u8::MAX; 32];
    for (i, &v) in vertices.iter().enumerate() {
        rev[v as usize] = i as u8;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| rev[a as usize] != u8::MAX && rev[b as usize] != u8::MAX)
        .map(|&(a, b)| (rev[a as usize], rev[b as usize]))
        .collect();
    SimpleGraph::new(vertices.len(), edges).unwrap()
}

/// Poincare polynomial of the graphic arrangement of `g`, which equals the
/// Hilbert series of the AOT algebra: from `chi_G(t) = t^n P(A, -1/t)`,
/// the coefficient of `t^i` in `P` is `(-1)^i` times the coefficient of
/// `t^(n-i)` in `chi_G`.
pub fn poincare_polynomial(g: &SimpleGraph) -> IntPolynomial {
    let chi = chromatic_polynomial(g);
    let n = g.n();
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|i| {
            let c = chi.coeff(n - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let p = IntPolynomial::from_coeffs(coeffs);
    debug_assert!(
        p.coeffs().iter().all(|c| !c.is_negative()),
        "Poincare coefficients must be non-negative"
    );
    p
}

/// Hilbert series of a connected chordal graph via the clique product
/// formula `prod_j (1 + j t)^(Delta_j)`. Errors on non-chordal or
/// disconnected input; use [`poincare_polynomial`] there instead.
pub fn chordal_hilbert_series(g: &SimpleGraph) -> Result<IntPolynomial> {
    if !g.is_connected() {
        return Err(Error::Domain(
            "chordal Hilbert series requires a connected graph; use the Poincare polynomial".into(),
        ));
    }
    if !is_chordal(g) {
        return Err(Error::Domain(
            "graph is not chordal; use the Poincare polynomial".into(),
        ));
    }
    let profile = clique_counts(g)?;
    let mut acc = IntPolynomial::one();
    for (j, &d) in profile.delta.iter().enumerate().skip(1) {
        if d < 0 {
            return Err(Error::Internal(format!(
                "negative clique alternating sum Delta_{j} = {d} on a chordal graph"
            )));
        }
        if d > 0 {
            acc = &acc * &IntPolynomial::linear(1, j as i64).pow(d as u32);
        }
    }
    Ok(acc)
}

/// Brute-force count of proper colourings with `t` colours; test oracle for
/// the chromatic polynomial on tiny graphs.
pub fn count_proper_colorings(g: &SimpleGraph, t: u64) -> BigInt {
    let n = g.n();
    assert!(
        (t as f64).powi(n as i32) <= 5e8,
        "colouring enumeration too large"
    );
    if n == 0 {
        return BigInt::one();
    }
    let mut colors = vec![0u64; n];
    let mut count = BigInt::zero();
    'outer: loop {
        if g.edges()
            .iter()
            .all(|&(u, v)| colors[u as usize] != colors[v as usize])
        {
            count += 1;
        }
        for i in 0..n {
            colors[i] += 1;
            if colors[i] < t {
                continue 'outer;
            }
            colors[i] = 0;
        }
        return count;
    }
}

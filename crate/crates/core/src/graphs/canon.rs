//! Canonical labelling by branch-and-bound search for the lexicographically
//! minimal adjacency bit string. Bits are read in the graph6 column order
//! ((0,1), (0,2), (1,2), (0,3), ...), so the canonical form is the
//! relabelling whose graph6 string is smallest.

use super::SimpleGraph;

/// Relabels `g` by `perm`, where `perm[old] = new`.
pub fn relabel(g: &SimpleGraph, perm: &[u8]) -> SimpleGraph {
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    SimpleGraph::new(g.n(), edges).unwrap()
}

struct Search {
    n: usize,
    adj: Vec<u32>,
    // perm[pos] = original vertex placed at position pos
    perm: Vec<u8>,
    used: u32,
    // chunks[k-1] holds the k adjacency bits of position k against 0..k
    chunks: Vec<u32>,
    best: Option<Vec<u32>>,
    best_perm: Vec<u8>,
}

impl Search {
    fn chunk_of(&self, v: u8) -> u32 {
        let mut c = 0u32;
        for &p in &self.perm {
            c = (c << 1) | ((self.adj[v as usize] >> p) & 1);
        }
        c
    }

    /// Compares the current prefix against the best complete string.
    fn prefix_cmp(&self) -> std::cmp::Ordering {
        let Some(best) = &self.best else {
            return std::cmp::Ordering::Less;
        };
        self.chunks.as_slice().cmp(&best[..self.chunks.len()])
    }

    fn descend(&mut self) {
        let k = self.perm.len();
        if k == self.n {
            if self.best.is_none() || self.chunks < *self.best.as_ref().unwrap() {
                self.best = Some(self.chunks.clone());
                self.best_perm = self.perm.clone();
            }
            return;
        }
        let mut cands: Vec<(u32, u8)> = (0..self.n as u8)
            .filter(|&v| self.used & (1 << v) == 0)
            .map(|v| (self.chunk_of(v), v))
            .collect();
        cands.sort_unstable();
        let min_chunk = cands[0].0;
        for (chunk, v) in cands {
            // admission is re-checked against the live best on every
            // iteration because a descendant may have just replaced it
            match self.prefix_cmp() {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less => {
                    if chunk > min_chunk {
                        break; // only minimal chunks can realize the subtree minimum
                    }
                }
                std::cmp::Ordering::Equal => {
                    if chunk > self.best.as_ref().unwrap()[k] {
                        break;
                    }
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.chunks.push(chunk);
            self.descend();
            self.chunks.pop();
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical form: the relabelling of `g` with the lexicographically
/// smallest adjacency bit string. Any two isomorphic graphs map to the same
/// output. Fast for n <= 8; correct (but potentially slow) beyond.
pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let mut s = Search {
        n,
        adj: g.adjacency(),
        perm: Vec::with_capacity(n),
        used: 0,
        chunks: Vec::with_capacity(n),
        best: None,
        best_perm: Vec::new(),
    };
    s.descend();
    // best_perm[pos] = original vertex; invert to get old -> new
    let mut perm = vec![0u8; n];
    for (pos, &v) in s.best_perm.iter().enumerate() {
        perm[v as usize] = pos as u8;
    }
    relabel(g, &perm)
}

/// Test oracle: exhaustive minimum over all n! relabellings, compared by
/// graph6 string. Only sensible for small n.
pub fn canonical_form_exhaustive(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut best: Option<(String, SimpleGraph)> = None;
    permute(&mut perm, 0, &mut |p| {
        let h = relabel(g, p);
        let key = super::to_graph6(&h);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, h));
        }
    });
    best.unwrap().1
}

fn permute(arr: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
    if k == arr.len() {
        f(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        permute(arr, k + 1, f);
        arr.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_graphs, SimpleGraph};
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn paths_and_complete_graphs() {
        let p1 = SimpleGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let p2 = SimpleGraph::new(3, vec![(0, 2), (1, 2)]).unwrap();
        assert_eq!(canonical_form(&p1), canonical_form(&p2));
        let k4 = SimpleGraph::complete(4).unwrap();
        assert_eq!(canonical_form(&k4), k4);
    }

    #[test]
    fn bowtie_relabellings_agree() {
        let a = SimpleGraph::bowtie(); // shared vertex 2
        let b = SimpleGraph::new(5, vec![(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = canonical_form(&a);
        assert_eq!(c, canonical_form(&b));
        // oracle: exhaustive minimum over all 5! labelings
        assert_eq!(c, canonical_form_exhaustive(&a));
    }

    #[test]
    fn matches_exhaustive_oracle_on_all_graphs_up_to_5() {
        for n in 1..=5 {
            for g in enumerate_graphs(n).unwrap() {
                assert_eq!(canonical_form(&g), canonical_form_exhaustive(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn idempotent_and_relabel_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in [
            SimpleGraph::bowtie(),
            SimpleGraph::k4_dangling(),
            SimpleGraph::k23_plus_edge(),
            SimpleGraph::cycle(7).unwrap(),
            SimpleGraph::bouquet(3).unwrap(),
        ] {
            let c = canonical_form(&g);
            assert_eq!(c, canonical_form(&c));
            for _ in 0..100 {
                let mut perm: Vec<u8> = (0..g.n() as u8).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&relabel(&g, &perm)), c);
            }
        }
    }
}

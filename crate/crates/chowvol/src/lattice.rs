//! The lattice of flats, enumerated rank by rank through the cover-partition
//! axiom: the flats covering `F` are the closures `cl(F ∪ {e})` for `e ∉ F`,
//! and their differences with `F` partition `E \ F`. The construction checks
//! that partition property as it runs.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::matroid::{Matroid, Subset};

#[derive(Debug)]
pub struct FlatLattice {
    n: usize,
    rank: usize,
    /// All flats, sorted by (rank, subset order). `flats[0]` is the empty
    /// set and the last entry is the full ground set.
    flats: Vec<Subset>,
    rank_of: Vec<usize>,
    by_rank: Vec<Vec<usize>>,
    index: HashMap<u64, usize>,
    /// Indices of the flats covering each flat.
    upper_covers: Vec<Vec<usize>>,
    mobius: OnceLock<Vec<BigInt>>,
}

impl FlatLattice {
    pub fn build(m: &Matroid) -> FlatLattice {
        let n = m.ground_size();
        let rank = m.rank();
        let mut by_rank: Vec<Vec<Subset>> = vec![Vec::new(); rank + 1];
        by_rank[0].push(Subset::EMPTY);
        let mut covers_of: HashMap<u64, Vec<Subset>> = HashMap::new();

        for r in 0..rank {
            let mut next: Vec<Subset> = Vec::new();
            for &f in &by_rank[r] {
                let rest = m.ground().minus(f);
                let mut seen = Subset::EMPTY;
                let mut covers = Vec::new();
                for e in rest.elements() {
                    if seen.contains(e) {
                        continue;
                    }
                    let g = m.closure(f.with(e));
                    // Cover-partition axiom: the blocks G \ F must be disjoint.
                    assert!(
                        g.minus(f).intersection(seen).is_empty(),
                        "cover-partition axiom violated at flat {f}"
                    );
                    seen = seen.union(g.minus(f));
                    covers.push(g);
                    next.push(g);
                }
                assert_eq!(seen, rest, "covers of {f} do not exhaust E \\ F");
                covers.sort();
                covers_of.insert(f.0, covers);
            }
            next.sort();
            next.dedup();
            by_rank[r + 1] = next;
        }

        let mut flats = Vec::new();
        let mut rank_of = Vec::new();
        let mut ranks = Vec::with_capacity(rank + 1);
        for (r, level) in by_rank.iter().enumerate() {
            let start = flats.len();
            flats.extend(level.iter().copied());
            rank_of.extend(std::iter::repeat(r).take(level.len()));
            ranks.push((start..flats.len()).collect::<Vec<_>>());
        }
        let index: HashMap<u64, usize> =
            flats.iter().enumerate().map(|(i, f)| (f.0, i)).collect();
        let upper_covers = flats
            .iter()
            .map(|f| {
                covers_of
                    .get(&f.0)
                    .map(|cs| cs.iter().map(|c| index[&c.0]).collect())
                    .unwrap_or_default()
            })
            .collect();

        FlatLattice {
            n,
            rank,
            flats,
            rank_of,
            by_rank: ranks,
            index,
            upper_covers,
            mobius: OnceLock::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_flats(&self) -> usize {
        self.flats.len()
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn flat(&self, idx: usize) -> Subset {
        self.flats[idx]
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.index.get(&f.0).copied()
    }

    pub fn contains(&self, f: Subset) -> bool {
        self.index.contains_key(&f.0)
    }

    /// Rank of a flat; panics if `f` is not a flat.
    pub fn rank_of(&self, f: Subset) -> usize {
        self.rank_of[self.index[&f.0]]
    }

    /// Indices of the flats of a given rank.
    pub fn rank_level(&self, r: usize) -> &[usize] {
        &self.by_rank[r]
    }

    pub fn upper_covers(&self, idx: usize) -> &[usize] {
        &self.upper_covers[idx]
    }

    pub fn lower_covers(&self, idx: usize) -> Vec<usize> {
        let f = self.flats[idx];
        let r = self.rank_of[idx];
        if r == 0 {
            return Vec::new();
        }
        self.by_rank[r - 1]
            .iter()
            .copied()
            .filter(|&j| self.upper_covers[j].contains(&idx))
            .map(|j| {
                debug_assert!(self.flats[j].is_proper_subset_of(f));
                j
            })
            .collect()
    }

    /// Proper flats: everything except the empty set and the ground set.
    pub fn proper_flats(&self) -> impl Iterator<Item = Subset> + '_ {
        self.flats
            .iter()
            .copied()
            .filter(move |f| !f.is_empty() && *f != self.ground())
    }

    /// Flats strictly between `a` and `b`.
    pub fn open_interval(&self, a: Subset, b: Subset) -> Vec<Subset> {
        self.flats
            .iter()
            .copied()
            .filter(|f| a.is_proper_subset_of(*f) && f.is_proper_subset_of(b))
            .collect()
    }

    /// Flats `h` with `a ⊆ h ⊆ b`.
    pub fn closed_interval(&self, a: Subset, b: Subset) -> Vec<Subset> {
        self.flats
            .iter()
            .copied()
            .filter(|f| a.is_subset_of(*f) && f.is_subset_of(b))
            .collect()
    }

    /// Möbius function values `μ(∅, F)` for every flat, computed once per
    /// lattice by the defining recursion and cached.
    pub fn mobius(&self) -> &[BigInt] {
        self.mobius.get_or_init(|| {
            let mut mu: Vec<BigInt> = vec![BigInt::one(); self.flats.len()];
            for i in 1..self.flats.len() {
                let g = self.flats[i];
                let mut acc = BigInt::ZERO;
                for j in 0..i {
                    if self.flats[j].is_proper_subset_of(g) {
                        acc += &mu[j];
                    }
                }
                mu[i] = -acc;
            }
            mu
        })
    }
}

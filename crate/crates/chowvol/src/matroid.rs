//! Matroids given by explicit basis lists, with rank/closure queries, minors,
//! direct sums, simplification, and connected components.
//!
//! Everything is desk scale (`n <= 16`): rank queries scan the basis list,
//! and constructors verify the basis-exchange axiom by brute force. Loops
//! are rejected at construction; parallel elements are kept until
//! [`Matroid::simplify`] removes them.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result, MAX_GROUND};

/// A subset of the ground set `{0, .., n-1}`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn full(n: usize) -> Subset {
        Subset((1u64 << n) - 1)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        let mut mask = 0u64;
        for e in elems {
            mask |= 1 << e;
        }
        Subset(mask)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let e = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(e)
            }
        })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << e)
    }

    /// All subsets of the full set `{0, .., n-1}`, empty set first.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(Subset)
    }
}

/// Order by cardinality, then lexicographically by sorted element lists.
/// This is the canonical order used everywhere output must be deterministic.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 >> diff.trailing_zeros() & 1 == 1 {
                    // The smallest differing element belongs to self.
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A loopless matroid on ground set `{0, .., n-1}`, stored by its bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, rank={}, {} bases)",
            self.n,
            self.rank,
            self.bases.len()
        )
    }
}

/// A minor `M|G/F` together with the original labels of its ground set:
/// element `i` of the minor is `labels[i]` in the parent.
#[derive(Clone, Debug)]
pub struct Minor {
    pub matroid: Matroid,
    pub labels: Vec<usize>,
}

impl Matroid {
    /// The uniform matroid `U_{r,n}`: bases are all `r`-subsets of `{0,..,n-1}`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        check_ground(n)?;
        if r < 1 || r > n {
            return Err(Error::UniformRank { r, n });
        }
        let bases: Vec<Subset> = Subset::all(n).filter(|s| s.len() == r).collect();
        Ok(Matroid { n, rank: r, bases })
    }

    /// The graphic matroid of a multigraph: ground set = edge indices, bases =
    /// maximal spanning forests. Self-loops would be matroid loops and are
    /// rejected.
    pub fn graphic(n_vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        check_ground(edges.len())?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop(i, u));
            }
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::ElementRange(u.max(v), n_vertices));
            }
        }
        let rank = forest_rank(n_vertices, edges, Subset::full(edges.len()));
        let bases: Vec<Subset> = Subset::all(edges.len())
            .filter(|s| s.len() == rank && forest_rank(n_vertices, edges, *s) == rank)
            .collect();
        Ok(Matroid {
            n: edges.len(),
            rank,
            bases,
        })
    }

    /// Build from an explicit basis list, verifying the exchange axiom and
    /// looplessness.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Matroid> {
        check_ground(n)?;
        let mut bases: Vec<Subset> = bases.to_vec();
        bases.sort();
        bases.dedup();
        let first = *bases.first().ok_or(Error::NoBases)?;
        let mut covered = Subset::EMPTY;
        for b in &bases {
            if !b.is_subset_of(Subset::full(n)) {
                return Err(Error::ElementRange(
                    b.elements().last().unwrap_or(0),
                    n,
                ));
            }
            if b.len() != first.len() {
                return Err(Error::Equicardinal(first.to_string(), b.to_string()));
            }
            covered = covered.union(*b);
        }
        if let Some(e) = Subset::full(n).minus(covered).elements().next() {
            return Err(Error::Loop(e));
        }
        // Basis exchange, by brute force over pairs.
        for b1 in &bases {
            for b2 in &bases {
                for e in b1.minus(*b2).elements() {
                    let stripped = b1.minus(Subset::singleton(e));
                    let ok = b2
                        .minus(*b1)
                        .elements()
                        .any(|f| bases.binary_search(&stripped.with(f)).is_ok());
                    if !ok {
                        return Err(Error::Exchange(b1.to_string(), b2.to_string(), e));
                    }
                }
            }
        }
        Ok(Matroid {
            n,
            rank: first.len(),
            bases,
        })
    }

    /// Direct sum; the second summand's labels are shifted by `|E_1|`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        check_ground(n)?;
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for b1 in &self.bases {
            for b2 in &other.bases {
                bases.push(Subset(b1.0 | b2.0 << self.n));
            }
        }
        bases.sort();
        Ok(Matroid {
            n,
            rank: self.rank + other.rank,
            bases,
        })
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

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, s: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(s).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == s.len()
    }

    /// Closure: all elements whose addition does not raise the rank.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        let mut out = s;
        for e in self.ground().minus(s).elements() {
            if self.rank_of(s.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        s.is_subset_of(self.ground()) && self.closure(s) == s
    }

    /// The restriction `M|T`, with `labels[i]` giving the parent element of
    /// the minor's element `i`.
    pub fn restriction(&self, t: Subset) -> Minor {
        let labels: Vec<usize> = t.elements().collect();
        let rank = self.rank_of(t);
        let bases: Vec<Subset> = Subset::all(labels.len())
            .filter(|s| s.len() == rank)
            .filter(|s| {
                let orig = Subset::from_elements(s.elements().map(|i| labels[i]));
                self.is_independent(orig)
            })
            .collect();
        Minor {
            matroid: Matroid {
                n: labels.len(),
                rank,
                bases,
            },
            labels,
        }
    }

    /// The minor `M|G/F` for flats `F ⊆ G`, on ground set `G \ F`.
    /// Its lattice of flats is the interval `[F, G]` in the parent.
    pub fn minor(&self, f: Subset, g: Subset) -> Result<Minor> {
        if !self.is_flat(f) {
            return Err(Error::NotAFlat(f.to_string()));
        }
        if !self.is_flat(g) {
            return Err(Error::NotAFlat(g.to_string()));
        }
        if !f.is_subset_of(g) {
            return Err(Error::NotNested(f.to_string(), g.to_string()));
        }
        let labels: Vec<usize> = g.minus(f).elements().collect();
        let rank = self.rank_of(g) - self.rank_of(f);
        let rk_f = self.rank_of(f);
        let bases: Vec<Subset> = Subset::all(labels.len())
            .filter(|s| s.len() == rank)
            .filter(|s| {
                let orig = Subset::from_elements(s.elements().map(|i| labels[i]));
                self.rank_of(orig.union(f)) == rank + rk_f
            })
            .collect();
        Ok(Minor {
            matroid: Matroid {
                n: labels.len(),
                rank,
                bases,
            },
            labels,
        })
    }

    /// Keep one representative (the smallest element) of each rank-1 flat.
    /// The lattice of flats is unchanged up to the induced relabeling.
    pub fn simplify(&self) -> Matroid {
        let mut reps = Vec::new();
        let mut seen = Subset::EMPTY;
        for e in 0..self.n {
            if seen.contains(e) {
                continue;
            }
            let atom = self.closure(Subset::singleton(e));
            seen = seen.union(atom);
            reps.push(e);
        }
        self.restriction(Subset::from_elements(reps)).matroid
    }

    /// Connected components: the finest partition `E = ⊔ A_i` with
    /// `Σ rank(A_i) = rank(E)`. Two elements are in the same component
    /// exactly when some circuit contains both.
    pub fn connected_components(&self) -> Vec<Subset> {
        let mut comp: Vec<usize> = (0..self.n).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let root = find(comp, comp[i]);
                comp[i] = root;
            }
            comp[i]
        }
        for s in Subset::all(self.n) {
            if s.len() < 2 || self.is_independent(s) {
                continue;
            }
            // Minimal dependent set?
            let is_circuit = s
                .elements()
                .all(|e| self.is_independent(s.minus(Subset::singleton(e))));
            if is_circuit {
                let mut it = s.elements();
                let first = it.next().unwrap();
                for e in it {
                    let (a, b) = (find(&mut comp, first), find(&mut comp, e));
                    comp[a] = b;
                }
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut root_of_block: Vec<usize> = Vec::new();
        for e in 0..self.n {
            let r = find(&mut comp, e);
            match root_of_block.iter().position(|&x| x == r) {
                Some(i) => blocks[i] = blocks[i].with(e),
                None => {
                    root_of_block.push(r);
                    blocks.push(Subset::singleton(e));
                }
            }
        }
        blocks.sort();
        blocks
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n < 1 || n > MAX_GROUND {
        return Err(Error::GroundSize(n));
    }
    Ok(())
}

/// Rank of an edge subset in a graph: vertices touched minus components.
fn forest_rank(n_vertices: usize, edges: &[(usize, usize)], s: Subset) -> usize {
    let mut parent: Vec<usize> = (0..n_vertices).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    let mut rank = 0;
    for e in s.elements() {
        let (u, v) = edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Matroid {
        Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn subset_order_is_size_then_lex() {
        let s = |v: &[usize]| Subset::from_elements(v.iter().copied());
        assert!(s(&[0, 2]) < s(&[1, 2]));
        assert!(s(&[0, 3]) < s(&[1, 2]));
        assert!(s(&[0, 2]) < s(&[0, 3]));
        assert!(s(&[3]) < s(&[0, 1]));
        assert_eq!(s(&[1, 2]).to_string(), "{1,2}");
    }

    #[test]
    fn uniform_basics() {
        let m = Matroid::uniform(3, 4).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 4);
        assert_eq!(m.rank_of(Subset::from_elements([0, 1])), 2);
        assert_eq!(m.rank_of(Subset::EMPTY), 0);

        let tiny = Matroid::uniform(1, 1).unwrap();
        assert_eq!(tiny.bases(), &[Subset::singleton(0)]);

        let m24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(m24.bases().len(), 6);

        assert!(Matroid::uniform(0, 3).is_err());
        assert!(Matroid::uniform(4, 3).is_err());
    }

    #[test]
    fn graphic_examples() {
        let k3 = Matroid::graphic(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(k3, u23);

        let m = k4();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.ground_size(), 6);
        assert_eq!(m.bases().len(), 16);

        let edge = Matroid::graphic(2, &[(0, 1)]).unwrap();
        assert_eq!(edge, Matroid::uniform(1, 1).unwrap());

        assert!(matches!(
            Matroid::graphic(3, &[(0, 0)]),
            Err(Error::SelfLoop(0, 0))
        ));
    }

    #[test]
    fn from_bases_examples() {
        // All 2-subsets of {0..3} except {2,3}: elements 2 and 3 are parallel.
        let bases: Vec<Subset> = Subset::all(4)
            .filter(|s| s.len() == 2 && *s != Subset::from_elements([2, 3]))
            .collect();
        let m = Matroid::from_bases(4, &bases).unwrap();
        assert_eq!(m.bases().len(), 5);
        assert_eq!(m.closure(Subset::singleton(2)), Subset::from_elements([2, 3]));

        let u12 = Matroid::from_bases(2, &[Subset::singleton(0), Subset::singleton(1)]).unwrap();
        assert_eq!(u12.rank(), 1);

        assert!(matches!(
            Matroid::from_bases(3, &[Subset::from_elements([0, 1])]),
            Err(Error::Loop(2))
        ));

        // Dropping a basis of U_{3,4} breaks exchange:
        // {0,1,2} and {0,1,3} cannot exchange 2 without {0,1,3}... actually
        // removing only {2,3}-free sets keeps exchange; use a genuinely bad list.
        let bad = [
            Subset::from_elements([0, 1]),
            Subset::from_elements([2, 3]),
        ];
        assert!(matches!(
            Matroid::from_bases(4, &bad),
            Err(Error::Exchange(..))
        ));
    }

    #[test]
    fn direct_sum_examples() {
        let m = Matroid::uniform(1, 1)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.ground_size(), 4);
        assert_eq!(m.bases().len(), 3);

        let m2 = Matroid::uniform(2, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        assert_eq!(m2.rank(), 4);
        assert_eq!(m2.ground_size(), 5);
        assert_eq!(m2.rank_of(Subset::from_elements([2, 3, 4])), 2);

        let m3 = k4().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(m3.rank(), k4().rank() + 1);
        assert!(m3.bases().iter().all(|b| b.contains(6)));
    }

    #[test]
    fn closure_examples() {
        let m = Matroid::uniform(2, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        assert_eq!(
            m.closure(Subset::from_elements([2, 3])),
            Subset::from_elements([2, 3, 4])
        );
        // Idempotence and spanning.
        let f = m.closure(Subset::from_elements([0, 2]));
        assert_eq!(m.closure(f), f);
        let m34 = Matroid::uniform(3, 4).unwrap();
        assert_eq!(m34.closure(m34.bases()[0]), m34.ground());
    }

    #[test]
    fn minor_examples() {
        let m = Matroid::uniform(3, 4).unwrap();
        let minor = m.minor(Subset::singleton(0), m.ground()).unwrap();
        assert_eq!(minor.matroid, Matroid::uniform(2, 3).unwrap());
        assert_eq!(minor.labels, vec![1, 2, 3]);

        let m2 = Matroid::uniform(2, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        let contracted = m2.minor(Subset::singleton(0), m2.ground()).unwrap();
        let expected = Matroid::uniform(1, 1)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        assert_eq!(contracted.matroid.simplify(), expected);

        let id = m.minor(Subset::EMPTY, m.ground()).unwrap();
        assert_eq!(id.matroid, m);

        assert!(m.minor(Subset::from_elements([0, 1, 2]), m.ground()).is_err());
    }

    #[test]
    fn simplify_examples() {
        let m = Matroid::uniform(3, 4).unwrap();
        assert_eq!(m.simplify(), m);

        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.simplify(), Matroid::uniform(1, 1).unwrap());

        let doubled = Matroid::graphic(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(doubled.simplify(), Matroid::uniform(2, 2).unwrap());
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            Matroid::uniform(2, 4).unwrap().connected_components().len(),
            1
        );
        // U_{2,2} is two coloops, so the sum has three components.
        let m = Matroid::uniform(2, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        assert_eq!(
            m.connected_components(),
            vec![
                Subset::singleton(0),
                Subset::singleton(1),
                Subset::from_elements([2, 3, 4])
            ]
        );
        let m = Matroid::uniform(1, 2)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 3).unwrap())
            .unwrap();
        assert_eq!(
            m.connected_components(),
            vec![
                Subset::from_elements([0, 1]),
                Subset::from_elements([2, 3, 4])
            ]
        );
        assert_eq!(
            Matroid::uniform(1, 1).unwrap().connected_components().len(),
            1
        );
        // U_{2,2}: two coloops, two components.
        assert_eq!(
            Matroid::uniform(2, 2).unwrap().connected_components().len(),
            2
        );
    }
}

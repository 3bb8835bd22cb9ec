//! Möbius functions on the lattice of flats, characteristic polynomials, and
//! the signed chain sums `gamma(M, i)` whose absolute values are the unsigned
//! coefficients of the reduced characteristic polynomial.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::FlatLattice;
use crate::matroid::Subset;
use crate::{Error, Result};

/// Integer polynomial, lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::ZERO;
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Exact division by `t - 1`; fails when the remainder is nonzero.
    pub fn divide_by_t_minus_one(&self) -> Result<IntPolynomial> {
        // Synthetic division: remainder is the value at t = 1.
        let mut out = vec![BigInt::ZERO; self.0.len().saturating_sub(1)];
        let mut carry = BigInt::ZERO;
        for (i, c) in self.0.iter().enumerate().rev() {
            let v = c + &carry;
            if i == 0 {
                if !v.is_zero() {
                    return Err(Error::InexactDivision);
                }
            } else {
                out[i - 1] = v.clone();
                carry = v;
            }
        }
        Ok(IntPolynomial::new(out))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Unsigned coefficients `μ^0, .., μ^{r-1}` of the reduced characteristic
/// polynomial. For a loopless matroid these are strictly positive and start
/// with `μ^0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuVector(pub Vec<BigInt>);

impl MuVector {
    pub fn get(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(|| BigInt::ZERO)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Möbius values `μ(∅, F)`, indexed like `lattice.flats()`.
pub fn mobius(lattice: &FlatLattice) -> &[BigInt] {
    lattice.mobius()
}

/// `χ_M(t) = Σ_F μ(∅, F) t^{r - rk F}`.
pub fn char_poly(lattice: &FlatLattice) -> IntPolynomial {
    let mu = lattice.mobius();
    let r = lattice.rank();
    let mut coeffs = vec![BigInt::ZERO; r + 1];
    for (i, f) in lattice.flats().iter().enumerate() {
        coeffs[r - lattice.rank_of(*f)] += &mu[i];
    }
    IntPolynomial::new(coeffs)
}

/// `χ̄_M = χ_M / (t - 1)`; exact for every loopless matroid.
pub fn reduced_char_poly(lattice: &FlatLattice) -> Result<IntPolynomial> {
    char_poly(lattice).divide_by_t_minus_one()
}

/// `μ^i` = unsigned coefficient of `t^{r-1-i}` in the reduced characteristic
/// polynomial.
pub fn mu_vector(lattice: &FlatLattice) -> Result<MuVector> {
    let reduced = reduced_char_poly(lattice)?;
    let d = lattice.rank() - 1;
    let mut mu = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let c = reduced
            .coeffs()
            .get(d - i)
            .cloned()
            .unwrap_or_else(|| BigInt::ZERO);
        mu.push(c.abs());
    }
    Ok(MuVector(mu))
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `gamma(M, i)` via its defining signed sum over chains
/// `∅ = G_0 ⊊ G_1 ⊊ .. ⊊ G_i ⊊ G_{i+1} = E` with `rk G_j = j` for `j <= i`:
/// each chain contributes `-∏_j (-|G_j \ G_{j-1}| / |G_j|)`.
pub fn gamma_chain_sum(lattice: &FlatLattice, i: i64) -> Result<BigRational> {
    let r = lattice.rank() as i64;
    if i < -1 || i > r {
        return Err(Error::GammaRange(i, r));
    }
    if i == -1 {
        return Ok(-BigRational::one());
    }
    if i == r {
        return Ok(BigRational::zero());
    }
    let ground = lattice.ground();
    // DFS over graded initial chains, accumulating the product.
    fn walk(
        lattice: &FlatLattice,
        ground: Subset,
        current: Subset,
        level: usize,
        target: usize,
        partial: BigRational,
        acc: &mut BigRational,
    ) {
        if level == target {
            // Close the chain with G_{i+1} = E.
            let top = ratio(ground.minus(current).len(), ground.len());
            *acc += -(partial * -top);
            return;
        }
        for &idx in lattice.rank_level(level + 1) {
            let g = lattice.flat(idx);
            if current.is_proper_subset_of(g) {
                let w = -ratio(g.minus(current).len(), g.len());
                walk(lattice, ground, g, level + 1, target, partial.clone() * w, acc);
            }
        }
    }
    let mut acc = BigRational::zero();
    walk(
        lattice,
        ground,
        Subset::EMPTY,
        0,
        i as usize,
        BigRational::one(),
        &mut acc,
    );
    Ok(acc)
}

/// `gamma(M, i)` via the recursion
/// `gamma(M, i) = Σ_{rk F = i} -(|E \ F| / |E|) gamma(M|F, i-1)`,
/// with `gamma(M, -1) = -1`. The restrictions are never materialized: the
/// lattice of `M|F` is the interval `[∅, F]`.
pub fn gamma_recursion(lattice: &FlatLattice, i: i64) -> Result<BigRational> {
    let r = lattice.rank() as i64;
    if i < -1 || i > r {
        return Err(Error::GammaRange(i, r));
    }
    if i == r {
        return Ok(BigRational::zero());
    }
    let mut memo: HashMap<(usize, i64), BigRational> = HashMap::new();
    fn rec(
        lattice: &FlatLattice,
        top_idx: usize,
        i: i64,
        memo: &mut HashMap<(usize, i64), BigRational>,
    ) -> BigRational {
        if i == -1 {
            return -BigRational::one();
        }
        if let Some(v) = memo.get(&(top_idx, i)) {
            return v.clone();
        }
        let top = lattice.flat(top_idx);
        let mut acc = BigRational::zero();
        for &idx in lattice.rank_level(i as usize) {
            let f = lattice.flat(idx);
            if f.is_subset_of(top) {
                let w = -ratio(top.minus(f).len(), top.len());
                acc += w * rec(lattice, idx, i - 1, memo);
            }
        }
        memo.insert((top_idx, i), acc.clone());
        acc
    }
    let top_idx = lattice.index_of(lattice.ground()).expect("ground is a flat");
    Ok(rec(lattice, top_idx, i, &mut memo))
}

/// Production entry point for `gamma`; the chain-sum variant exists as an
/// independent route and the two are tested to agree exactly.
pub fn gamma(lattice: &FlatLattice, i: i64) -> Result<BigRational> {
    gamma_recursion(lattice, i)
}

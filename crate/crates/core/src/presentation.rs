//! Canonical truncated polynomial quotients.
//!
//! For each dimension `n >= 1` there is one presentation
//! `K[x_1..x_k] / < x_i^2, tail monomials >` with `2^(k-1) < n <= 2^k`.
//! Square-free monomials are ranked by
//!
//! ```text
//! phi(x_{i_1} ... x_{i_d}) = 2^(i_1 - 1) + ... + 2^(i_d - 1),
//! ```
//!
//! a bijection onto `0..2^k`. The quotient keeps the `n` monomials with
//! `phi < n` and kills the rest. Two descriptions of the killed set are
//! computed independently and compared: the rank rule keeps the
//! `n - (k+1)` phi-smallest products of two or more generators, and the
//! tail rule kills exactly the products that contain `x_k` and satisfy
//! `phi > n - 1`. Both give the same upward-closed set, so the quotient is
//! a well-defined algebra.

use crate::error::{Error, Result};
use std::fmt;

/// Dimensions above this are refused; the presentation materialises all
/// `2^k` square-free monomials.
pub const MAX_DIMENSION: u64 = 1 << 20;

/// A square-free monomial in variables `x_1, x_2, ...`, stored as the
/// sorted list of its variable indices (1-based). The unit is the empty
/// product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    support: Vec<u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            support: Vec::new(),
        }
    }

    /// The generator `x_i`, `i >= 1`.
    pub fn generator(i: u32) -> Self {
        assert!(i >= 1, "generators are 1-based");
        Monomial { support: vec![i] }
    }

    pub fn from_support(mut support: Vec<u32>) -> Self {
        support.sort_unstable();
        support.dedup();
        assert!(!support.contains(&0), "generators are 1-based");
        Monomial { support }
    }

    /// Inverse of [`Monomial::phi`]: bit `i` of `v` turns into `x_(i+1)`.
    pub fn from_phi(v: u64) -> Self {
        Monomial {
            support: (0..u64::BITS)
                .filter(|i| v >> i & 1 == 1)
                .map(|i| i + 1)
                .collect(),
        }
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    /// `sum 2^(i-1)` over the variable indices `i`.
    pub fn phi(&self) -> u64 {
        self.support.iter().map(|&i| 1u64 << (i - 1)).sum()
    }

    pub fn disjoint_from(&self, other: &Monomial) -> bool {
        self.phi() & other.phi() == 0
    }

    pub fn union(&self, other: &Monomial) -> Monomial {
        Monomial::from_phi(self.phi() | other.phi())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "1");
        }
        for &i in &self.support {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// A quotient `K[x_1..x_k] / < squares, killed >` of dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    n: u64,
    k: u32,
    killed: Vec<Monomial>,
    quotient_basis: Vec<Monomial>,
}

impl Presentation {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of generators.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Monomial relations beyond the squares, in phi order.
    pub fn killed(&self) -> &[Monomial] {
        &self.killed
    }

    /// Surviving monomials in phi order; always starts with the unit.
    pub fn quotient_basis(&self) -> &[Monomial] {
        &self.quotient_basis
    }

    pub fn contains(&self, mono: &Monomial) -> bool {
        mono.phi() < self.n && mono.support().last().is_none_or(|&i| i <= self.k)
    }

    /// Compact one-line rendering, e.g. `K[x1,x2]/<x1^2,x2^2,x1x2>`.
    pub fn text(&self) -> String {
        if self.k == 0 {
            return "K".to_string();
        }
        let vars: Vec<String> = (1..=self.k).map(|i| format!("x{i}")).collect();
        let mut rels: Vec<String> = (1..=self.k).map(|i| format!("x{i}^2")).collect();
        rels.extend(self.killed.iter().map(|m| m.to_string()));
        format!("K[{}]/<{}>", vars.join(","), rels.join(","))
    }
}

/// The `k` with `2^(k-1) < n <= 2^k`.
pub fn generator_count(n: u64) -> u32 {
    assert!(n >= 1);
    if n == 1 {
        0
    } else {
        u64::BITS - (n - 1).leading_zeros()
    }
}

/// Tail description of the killed set: products of two or more generators
/// that contain `x_k` and have `phi > n - 1`.
pub fn killed_by_tail_rule(n: u64, k: u32) -> Vec<Monomial> {
    let mut killed = Vec::new();
    if k == 0 {
        return killed;
    }
    for v in 0..1u64 << k {
        if v.count_ones() >= 2 && v >> (k - 1) & 1 == 1 && v > n - 1 {
            killed.push(Monomial::from_phi(v));
        }
    }
    killed
}

/// Rank description of the killed set: among all products of two or more
/// generators, in phi order, keep the first `n - (k+1)` and kill the rest.
pub fn killed_by_rank_rule(n: u64, k: u32) -> Vec<Monomial> {
    let keep = n - (k as u64 + 1);
    let mut seen = 0u64;
    let mut killed = Vec::new();
    for v in 0..1u64 << k {
        if v.count_ones() >= 2 {
            if seen < keep {
                seen += 1;
            } else {
                killed.push(Monomial::from_phi(v));
            }
        }
    }
    killed
}

/// The canonical presentation of dimension `n`.
pub fn presentation_for_dimension(n: u64) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(n));
    }
    let k = generator_count(n);
    let killed = killed_by_tail_rule(n, k);
    debug_assert_eq!(
        killed,
        killed_by_rank_rule(n, k),
        "killed-set descriptions disagree at n = {n}"
    );
    let quotient_basis: Vec<Monomial> = (0..n).map(Monomial::from_phi).collect();
    // The basis is exactly the complement of the killed set: every
    // square-free monomial with phi >= n has at least two factors.
    debug_assert!(quotient_basis.iter().all(|b| !killed.contains(b)));
    debug_assert_eq!(quotient_basis.len() + killed.len(), 1usize << k);
    Ok(Presentation {
        n,
        k,
        killed,
        quotient_basis,
    })
}

/// Product of two quotient-basis monomials: `None` when it is zero in the
/// quotient (a repeated variable, or the union is killed).
pub fn quotient_multiply(p: &Presentation, a: &Monomial, b: &Monomial) -> Result<Option<Monomial>> {
    for m in [a, b] {
        if !p.contains(m) {
            return Err(Error::NotInBasis(m.to_string()));
        }
    }
    if !a.disjoint_from(b) {
        return Ok(None);
    }
    let u = a.union(b);
    Ok(if u.phi() < p.n { Some(u) } else { None })
}

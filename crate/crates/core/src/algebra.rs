//! The endomorphism algebra of a two-part permutation module over a field
//! of characteristic 2.
//!
//! For a two-part partition `lambda = (lambda1, lambda2)` of `r`, write
//! `m = lambda1 - lambda2`. The algebra `S_K(lambda) = End(M^lambda)` has
//! basis `b(0), ..., b(lambda2)` with structure constants
//!
//! ```text
//! b(i) b(j) = sum_{k=0}^{i}  C(j+k, i) C(j+k, k) C(m+j+i, i-k)  b(j+k)
//! ```
//!
//! read modulo 2, where `b(a) = 0` whenever `a > lambda2`. The whole
//! multiplication table is materialised at construction; products of
//! general elements are then XORs of packed coefficient rows.
//!
//! Binomial parities come from the binary digit rule (`C(m, n)` odd iff
//! `m & n == n`); [`exact_basis_product`] recomputes any table entry from
//! exact integer binomials and is used by the verification battery to
//! cross-check that reduction.

use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::gf2::RowSpace;
use crate::padic::{binom_exact, binom_mod2};
use crate::report::AlgebraReport;
use std::fmt;

/// Largest `lambda2` accepted by [`AlgebraContext::new`]. The table is
/// dense, `(lambda2+1)^2` packed rows, so this is a resource bound.
pub const LAMBDA2_CAP: u64 = 4096;

/// A two-part partition `(lambda1, lambda2)`, stored as the gap
/// `m = lambda1 - lambda2` together with `lambda2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda {
    m: u64,
    lambda2: usize,
}

impl Lambda {
    pub fn new(m: u64, lambda2: usize) -> Self {
        Lambda { m, lambda2 }
    }

    pub fn from_parts(lambda1: u64, lambda2: u64) -> Result<Self> {
        if lambda1 < lambda2 {
            return Err(Error::InvalidPartition(lambda1, lambda2));
        }
        Ok(Lambda {
            m: lambda1 - lambda2,
            lambda2: lambda2 as usize,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn lambda2(&self) -> usize {
        self.lambda2
    }

    pub fn lambda1(&self) -> u64 {
        self.m + self.lambda2 as u64
    }

    /// The partitioned integer `r = lambda1 + lambda2 = m + 2*lambda2`.
    pub fn r(&self) -> u64 {
        self.m + 2 * self.lambda2 as u64
    }

    pub fn parts(&self) -> (u64, u64) {
        (self.lambda1(), self.lambda2 as u64)
    }

    /// The partition `mu = (lambda1 + g, lambda2 - g)` reached by moving
    /// `g` boxes from the second row to the first.
    pub fn mu(&self, g: u64) -> Result<(u64, u64)> {
        if g > self.lambda2 as u64 {
            return Err(Error::GOutOfRange {
                g,
                lambda2: self.lambda2,
            });
        }
        Ok((self.lambda1() + g, self.lambda2 as u64 - g))
    }

    /// Inverse of [`Lambda::mu`]: recover `g` from a target partition.
    pub fn g_for_mu(&self, mu1: u64, mu2: u64) -> Result<u64> {
        if mu1 < mu2 {
            return Err(Error::InvalidPartition(mu1, mu2));
        }
        if mu1 + mu2 != self.r() {
            return Err(Error::InvalidMu {
                mu1,
                mu2,
                reason: format!("|mu| = {} but r = {}", mu1 + mu2, self.r()),
            });
        }
        if mu2 > self.lambda2 as u64 {
            return Err(Error::InvalidMu {
                mu1,
                mu2,
                reason: format!("mu2 = {mu2} exceeds lambda2 = {}", self.lambda2),
            });
        }
        Ok(self.lambda2 as u64 - mu2)
    }
}

/// An element of the algebra: a GF(2) combination of basis vectors,
/// tagged with the `(m, lambda2)` it belongs to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    m: u64,
    lambda2: usize,
    coeffs: BitVec,
}

impl Element {
    fn new(m: u64, lambda2: usize, coeffs: BitVec) -> Self {
        debug_assert_eq!(coeffs.len(), lambda2 + 1);
        Element { m, lambda2, coeffs }
    }

    /// Labels `i` with a nonzero coefficient on `b(i)`, ascending.
    pub fn labels(&self) -> Vec<usize> {
        self.coeffs.ones().collect()
    }

    pub fn coeff(&self, i: usize) -> bool {
        i <= self.lambda2 && self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub(crate) fn bits(&self) -> &BitVec {
        &self.coeffs
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in self.coeffs.ones() {
            if !first {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "1")?;
            } else {
                write!(f, "b({i})")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Coefficient row of `b(i) b(j)` over basis labels `0..=lambda2`,
/// computed from the structure-constant sum with binary-digit binomial
/// parities.
fn raw_basis_product(m: u64, lambda2: usize, i: usize, j: usize) -> BitVec {
    let mut out = BitVec::zeros(lambda2 + 1);
    for k in 0..=i {
        let a = j + k;
        if a > lambda2 {
            break;
        }
        let c = binom_mod2(a as u64, i as u64)
            & binom_mod2(a as u64, k as u64)
            & binom_mod2(m + (j + i) as u64, (i - k) as u64);
        if c == 1 {
            out.set(a, !out.get(a));
        }
    }
    out
}

/// The same table entry via exact integer binomials: the three factors are
/// multiplied as big integers and the product is reduced mod 2 once.
pub fn exact_basis_product(m: u64, lambda2: usize, i: usize, j: usize) -> BitVec {
    let mut out = BitVec::zeros(lambda2 + 1);
    for k in 0..=i {
        let a = j + k;
        if a > lambda2 {
            break;
        }
        let prod = binom_exact(a as u64, i as u64)
            * binom_exact(a as u64, k as u64)
            * binom_exact(m + (j + i) as u64, (i - k) as u64);
        if prod.bit(0) {
            out.set(a, !out.get(a));
        }
    }
    out
}

/// `S_K(lambda)` with its multiplication table.
pub struct AlgebraContext {
    lambda: Lambda,
    /// Row `i * dim + j` is the coefficient vector of `b(i) b(j)`.
    table: Vec<BitVec>,
}

impl AlgebraContext {
    pub fn new(m: u64, lambda2: u64) -> Result<Self> {
        if lambda2 > LAMBDA2_CAP {
            return Err(Error::Lambda2TooLarge {
                lambda2,
                cap: LAMBDA2_CAP,
            });
        }
        let lambda2 = lambda2 as usize;
        let dim = lambda2 + 1;
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(raw_basis_product(m, lambda2, i, j));
            }
        }
        Ok(AlgebraContext {
            lambda: Lambda::new(m, lambda2),
            table,
        })
    }

    pub fn for_lambda(lambda1: u64, lambda2: u64) -> Result<Self> {
        let l = Lambda::from_parts(lambda1, lambda2)?;
        Self::new(l.m(), l.lambda2() as u64)
    }

    pub fn lambda(&self) -> Lambda {
        self.lambda
    }

    /// Vector-space dimension, `lambda2 + 1`.
    pub fn dim(&self) -> usize {
        self.lambda.lambda2() + 1
    }

    fn entry(&self, i: usize, j: usize) -> &BitVec {
        &self.table[i * self.dim() + j]
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.m != self.lambda.m() || x.lambda2 != self.lambda.lambda2() {
            return Err(Error::ContextMismatch {
                want_m: self.lambda.m(),
                want_lambda2: self.lambda.lambda2(),
                got_m: x.m,
                got_lambda2: x.lambda2,
            });
        }
        Ok(())
    }

    fn element(&self, coeffs: BitVec) -> Element {
        Element::new(self.lambda.m(), self.lambda.lambda2(), coeffs)
    }

    pub fn zero(&self) -> Element {
        self.element(BitVec::zeros(self.dim()))
    }

    /// The identity `b(0)`.
    pub fn identity(&self) -> Element {
        self.element(BitVec::unit(self.dim(), 0))
    }

    pub fn basis(&self, i: usize) -> Result<Element> {
        if i >= self.dim() {
            return Err(Error::LabelOutOfRange {
                label: i,
                lambda2: self.lambda.lambda2(),
            });
        }
        Ok(self.element(BitVec::unit(self.dim(), i)))
    }

    /// `b(a)` with the out-of-range convention `b(a) = 0` for `a > lambda2`.
    pub fn basis_or_zero(&self, a: u64) -> Element {
        if a > self.lambda.lambda2() as u64 {
            self.zero()
        } else {
            self.basis(a as usize).expect("label in range")
        }
    }

    pub fn element_from_labels(&self, labels: &[usize]) -> Result<Element> {
        let mut coeffs = BitVec::zeros(self.dim());
        for &i in labels {
            if i >= self.dim() {
                return Err(Error::LabelOutOfRange {
                    label: i,
                    lambda2: self.lambda.lambda2(),
                });
            }
            coeffs.set(i, true);
        }
        Ok(self.element(coeffs))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Result<Element> {
        if i >= self.dim() || j >= self.dim() {
            return Err(Error::LabelOutOfRange {
                label: i.max(j),
                lambda2: self.lambda.lambda2(),
            });
        }
        Ok(self.element(self.entry(i, j).clone()))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        let mut coeffs = x.coeffs.clone();
        coeffs.xor_assign(&y.coeffs);
        Ok(self.element(coeffs))
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.element(self.multiply_bits(&x.coeffs, &y.coeffs)))
    }

    pub(crate) fn multiply_bits(&self, x: &BitVec, y: &BitVec) -> BitVec {
        let mut acc = BitVec::zeros(self.dim());
        for i in x.ones() {
            for j in y.ones() {
                acc.xor_assign(self.entry(i, j));
            }
        }
        acc
    }

    /// `prod_t b(i_t * 2^t)` over the binary digits of `i`, factors in
    /// increasing `t`; equals `b(i)` (checked by the battery).
    pub fn power_product(&self, i: usize) -> Result<Element> {
        if i >= self.dim() {
            return Err(Error::LabelOutOfRange {
                label: i,
                lambda2: self.lambda.lambda2(),
            });
        }
        let mut acc = self.identity();
        for t in 0..usize::BITS {
            if i >> t & 1 == 1 {
                let factor = self.basis(1 << t)?;
                acc = self.multiply(&acc, &factor)?;
            }
        }
        Ok(acc)
    }

    /// Rank of the subalgebra generated by `b(0)` and the `b(2^t)` with
    /// `2^t <= lambda2`; equals the full dimension.
    pub fn generated_rank(&self) -> usize {
        let dim = self.dim();
        let mut gens = vec![BitVec::unit(dim, 0)];
        let mut t = 0usize;
        while (1usize << t) <= self.lambda.lambda2() {
            gens.push(BitVec::unit(dim, 1 << t));
            t += 1;
        }
        let mut space = RowSpace::new(dim);
        for v in &gens {
            space.insert(v);
        }
        loop {
            let current: Vec<BitVec> = space.basis().cloned().collect();
            let mut grew = false;
            for v in &current {
                for g in &gens {
                    let prod = self.multiply_bits(v, g);
                    if space.insert(&prod) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return space.rank();
            }
        }
    }

    /// Ring-axiom and factorization battery over the whole basis:
    /// `b(0)` is a two-sided identity, the table is symmetric, all basis
    /// triples associate, and `power_product(i) = b(i)`.
    pub fn verify(&self) -> AlgebraReport {
        let dim = self.dim();
        let mut failures = Vec::new();
        let note = |msg: String, failures: &mut Vec<String>| {
            if failures.len() < 8 {
                failures.push(msg);
            }
        };

        let mut identity_ok = true;
        for j in 0..dim {
            let unit = BitVec::unit(dim, j);
            if *self.entry(0, j) != unit || *self.entry(j, 0) != unit {
                identity_ok = false;
                note(format!("b(0) does not fix b({j})"), &mut failures);
            }
        }

        let mut commutativity_ok = true;
        for i in 0..dim {
            for j in 0..i {
                if self.entry(i, j) != self.entry(j, i) {
                    commutativity_ok = false;
                    note(format!("b({i})b({j}) != b({j})b({i})"), &mut failures);
                }
            }
        }

        let mut associativity_ok = true;
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.entry(i, j).clone();
                for k in 0..dim {
                    let left = {
                        // (b_i b_j) b_k
                        let mut acc = BitVec::zeros(dim);
                        for l in ij.ones() {
                            acc.xor_assign(self.entry(l, k));
                        }
                        acc
                    };
                    let right = {
                        // b_i (b_j b_k)
                        let mut acc = BitVec::zeros(dim);
                        for l in self.entry(j, k).ones() {
                            acc.xor_assign(self.entry(i, l));
                        }
                        acc
                    };
                    if left != right {
                        associativity_ok = false;
                        note(
                            format!("associativity fails on (b({i}), b({j}), b({k}))"),
                            &mut failures,
                        );
                    }
                }
            }
        }

        let mut factorization_ok = true;
        for i in 0..dim {
            let direct = self.basis(i).expect("label in range");
            let product = self.power_product(i).expect("label in range");
            if direct != product {
                factorization_ok = false;
                note(
                    format!("binary-digit product of b({i}) differs from b({i})"),
                    &mut failures,
                );
            }
        }

        AlgebraReport {
            identity_ok,
            commutativity_ok,
            associativity_ok,
            factorization_ok,
            failures,
        }
    }

    /// The multiplication table as a standalone value, for basis-free
    /// invariant computations.
    pub fn structure_constants(&self) -> crate::oracle::StructureConstants {
        crate::oracle::StructureConstants::from_rows(self.dim(), self.table.clone())
    }

    /// Cross-checks every table entry against [`exact_basis_product`].
    pub fn reduction_consistent(&self) -> bool {
        let lambda2 = self.lambda.lambda2();
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                if *self.entry(i, j) != exact_basis_product(self.lambda.m(), lambda2, i, j) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(e: &Element) -> Vec<usize> {
        e.labels()
    }

    #[test]
    fn lambda_accessors() {
        let l = Lambda::from_parts(4, 2).unwrap();
        assert_eq!(l.m(), 2);
        assert_eq!(l.lambda2(), 2);
        assert_eq!(l.r(), 6);
        assert_eq!(l.parts(), (4, 2));
        assert_eq!(l.mu(2).unwrap(), (6, 0));
        assert_eq!(l.g_for_mu(6, 0).unwrap(), 2);
        assert_eq!(l.g_for_mu(4, 2).unwrap(), 0);
        assert!(Lambda::from_parts(1, 2).is_err());
        assert!(l.g_for_mu(5, 2).is_err());
        assert!(l.g_for_mu(3, 3).is_err());
    }

    #[test]
    fn hand_checked_products_m2_lambda2_2() {
        // m = 2, lambda2 = 2, i.e. lambda = (4, 2).
        let ctx = AlgebraContext::new(2, 2).unwrap();
        // b(2)b(2): only k = 0 contributes, coefficient C(2,2)C(2,0)C(6,2)
        // = 1*1*15, odd.
        assert_eq!(labels(&ctx.basis_product(2, 2).unwrap()), vec![2]);
        // b(1)b(1) = C(1,1)C(1,0)C(4,1) b(1) + C(2,1)... = 4*b(1) + even = 0.
        assert!(ctx.basis_product(1, 1).unwrap().is_zero());
        // b(1)b(2) = 0: k=0 gives C(2,1)C(2,0)C(5,1) even; k=1 clamps.
        assert!(ctx.basis_product(1, 2).unwrap().is_zero());
    }

    #[test]
    fn hand_checked_products_m0() {
        // lambda = (2, 2): b(1)^2 = m0 * b(1) = 0 for even m.
        let ctx = AlgebraContext::new(0, 2).unwrap();
        assert!(ctx.basis_product(1, 1).unwrap().is_zero());
        assert!(ctx.basis_product(2, 2).unwrap().is_zero());

        // lambda = (3, 3): b(1)b(2) = b(3), the binary-digit factorization.
        let ctx = AlgebraContext::new(0, 3).unwrap();
        assert_eq!(labels(&ctx.basis_product(1, 2).unwrap()), vec![3]);
        assert_eq!(ctx.power_product(3).unwrap(), ctx.basis(3).unwrap());
    }

    #[test]
    fn b1_squared_is_m0_b1() {
        // b(1)^2 = C(1,1)C(1,0)C(m+2,1) b(1) + [2 <= lambda2] C(2,1)... b(2);
        // the b(2) coefficient has the even factor C(2,1), so b(1)^2 = m0 b(1).
        for m in 0..12u64 {
            let ctx = AlgebraContext::new(m, 5).unwrap();
            let sq = ctx.basis_product(1, 1).unwrap();
            if m % 2 == 1 {
                assert_eq!(labels(&sq), vec![1], "m = {m}");
            } else {
                assert!(sq.is_zero(), "m = {m}");
            }
        }
    }

    #[test]
    fn arithmetic_context_guard() {
        let a = AlgebraContext::new(2, 2).unwrap();
        let b = AlgebraContext::new(0, 2).unwrap();
        let x = a.identity();
        let y = b.identity();
        assert!(matches!(
            a.multiply(&x, &y),
            Err(Error::ContextMismatch { .. })
        ));
        assert!(a.basis(3).is_err());
        assert!(a.basis(2).is_ok());
        assert!(AlgebraContext::new(0, LAMBDA2_CAP + 1).is_err());
    }

    #[test]
    fn element_display_and_labels() {
        let ctx = AlgebraContext::new(2, 2).unwrap();
        let e = ctx.element_from_labels(&[0, 2]).unwrap();
        assert_eq!(e.to_string(), "1+b(2)");
        assert_eq!(e.labels(), vec![0, 2]);
        assert_eq!(ctx.zero().to_string(), "0");
        assert_eq!(ctx.identity().to_string(), "1");
        assert_eq!(ctx.basis(1).unwrap().to_string(), "b(1)");
        assert!(ctx.element_from_labels(&[7]).is_err());
    }

    #[test]
    fn battery_passes_on_small_contexts() {
        for m in 0..6u64 {
            for lambda2 in 0..6u64 {
                let ctx = AlgebraContext::new(m, lambda2).unwrap();
                let report = ctx.verify();
                assert!(
                    report.pass(),
                    "(m, lambda2) = ({m}, {lambda2}): {:?}",
                    report.failures
                );
                assert!(
                    ctx.reduction_consistent(),
                    "(m, lambda2) = ({m}, {lambda2})"
                );
                assert_eq!(ctx.generated_rank(), ctx.dim());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn product_is_commutative_and_associative(
            m in 0u64..40,
            lambda2 in 0u64..14,
            xs in prop::collection::vec(any::<bool>(), 14),
            ys in prop::collection::vec(any::<bool>(), 14),
            zs in prop::collection::vec(any::<bool>(), 14),
        ) {
            let ctx = AlgebraContext::new(m, lambda2).unwrap();
            let pick = |flags: &[bool]| {
                let labels: Vec<usize> =
                    (0..ctx.dim()).filter(|&i| flags[i]).collect();
                ctx.element_from_labels(&labels).unwrap()
            };
            let (x, y, z) = (pick(&xs), pick(&ys), pick(&zs));
            prop_assert_eq!(
                ctx.multiply(&x, &y).unwrap(),
                ctx.multiply(&y, &x).unwrap()
            );
            let xy_z = ctx.multiply(&ctx.multiply(&x, &y).unwrap(), &z).unwrap();
            let x_yz = ctx.multiply(&x, &ctx.multiply(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(xy_z, x_yz);
            prop_assert_eq!(ctx.multiply(&x, &ctx.identity()).unwrap(), x);
        }

        #[test]
        fn table_matches_exact_integer_route(
            m in 0u64..64,
            lambda2 in 0u64..12,
        ) {
            let ctx = AlgebraContext::new(m, lambda2).unwrap();
            prop_assert!(ctx.reduction_consistent());
        }
    }
}

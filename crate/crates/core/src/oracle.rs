//! Independent model of `End(M^lambda)` built from subset combinatorics,
//! and the isomorphism invariants used to compare it with the
//! formula-defined algebra.
//!
//! `M^lambda` is the permutation module on `lambda2`-element subsets of
//! `{1..r}`. Its endomorphism ring has basis `psi_0, ..., psi_lambda2`,
//! where `psi_j` sends a subset `S` to the sum of all subsets `T` with
//! `|S intersect T| = lambda2 - j`. Structure constants are found by
//! applying a product to a probe subset and reading off the class
//! multiplicities; nothing from the closed-form multiplication rule is
//! used. Construction probes two different subsets and insists on the
//! same table, and the class multiplicities must be constant on classes,
//! so a bug in the enumeration is loud rather than silent.
//!
//! The two algebras are compared through basis-free invariants: the
//! dimension, the number of solutions of `x^2 = x`, and the dimension
//! chain of the powers of the nilradical. The nilradical is computed as
//! `ker(F^s)` where `F` is the squaring map (linear over GF(2) on a
//! commutative algebra) and `2^s >=` the dimension.

use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};
use crate::gf2::{compose, count_fixed_points, identity_map, kernel, BitVec, RowSpace};
use crate::idempotents::CENSUS_BOUND;
use crate::padic::b_parity;
use crate::report::{OracleCompareReport, Profile};

/// Largest `r` accepted by [`build_oracle`]; the model enumerates all
/// `C(r, lambda2)` subsets against each other.
pub const MAX_MODEL_R: u64 = 14;

/// A commutative GF(2) algebra given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    /// Row `i * dim + j` holds the coefficients of `basis_i * basis_j`.
    table: Vec<BitVec>,
}

impl StructureConstants {
    pub fn from_rows(dim: usize, table: Vec<BitVec>) -> Self {
        assert_eq!(table.len(), dim * dim);
        StructureConstants { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BitVec {
        &self.table[i * self.dim + j]
    }

    pub fn multiply(&self, x: &BitVec, y: &BitVec) -> BitVec {
        let mut acc = BitVec::zeros(self.dim);
        for i in x.ones() {
            for j in y.ones() {
                acc.xor_assign(self.entry(i, j));
            }
        }
        acc
    }
}

/// The subset model of `End(M^lambda)`, `lambda = (r - lambda2, lambda2)`.
#[derive(Debug, Clone)]
pub struct SubsetModel {
    pub r: u64,
    pub lambda2: usize,
    structure: StructureConstants,
}

impl SubsetModel {
    pub fn structure(&self) -> &StructureConstants {
        &self.structure
    }
}

/// All `k`-element subsets of `{0..r-1}` as bitmasks, ascending.
fn k_subsets(r: u32, k: u32) -> Vec<u16> {
    assert!(r <= 16 && k <= r);
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut v: u32 = (1 << k) - 1;
    while v < 1 << r {
        out.push(v as u16);
        // Gosper's hack: next mask with the same popcount.
        let t = v | (v - 1);
        v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

/// Full structure-constant table read off from one probe subset `s0`.
fn probe_table(subsets: &[u16], lambda2: usize, s0: u16) -> Result<Vec<BitVec>> {
    let dim = lambda2 + 1;
    // Class of a subset relative to s0: psi_c(s0) sums the subsets with
    // intersection lambda2 - c, i.e. class c.
    let class: Vec<usize> = subsets
        .iter()
        .map(|&t| lambda2 - (t & s0).count_ones() as usize)
        .collect();
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); dim];
    for (pos, &c) in class.iter().enumerate() {
        by_class[c].push(pos);
    }

    let mut table = Vec::with_capacity(dim * dim);
    let mut counts = vec![0u64; subsets.len()];
    for i in 0..dim {
        for j in 0..dim {
            // (psi_i psi_j)(s0) = sum over T in class j of psi_i(T).
            counts.iter_mut().for_each(|c| *c = 0);
            for &tpos in &by_class[j] {
                let t = subsets[tpos];
                for (upos, &u) in subsets.iter().enumerate() {
                    if (t & u).count_ones() as usize == lambda2 - i {
                        counts[upos] += 1;
                    }
                }
            }
            // The result must be a combination of the psi_c(s0), i.e. the
            // multiplicities must be constant on classes.
            let mut row = BitVec::zeros(dim);
            for (c, members) in by_class.iter().enumerate() {
                let Some(&first) = members.first() else {
                    continue;
                };
                if members.iter().any(|&pos| counts[pos] != counts[first]) {
                    return Err(Error::CheckFailed(format!(
                        "psi_{i} psi_{j} is not constant on intersection class {c}"
                    )));
                }
                row.set(c, counts[first] % 2 == 1);
            }
            table.push(row);
        }
    }
    Ok(table)
}

/// Builds the model by enumeration, probing two different subsets and
/// requiring identical tables.
pub fn build_oracle(r: u64, lambda2: usize) -> Result<SubsetModel> {
    if r > MAX_MODEL_R || 2 * lambda2 as u64 > r {
        return Err(Error::OracleBounds { r, lambda2 });
    }
    let subsets = k_subsets(r as u32, lambda2 as u32);
    let low: u16 = ((1u32 << lambda2) - 1) as u16;
    let high: u16 = (((1u32 << lambda2) - 1) << (r as u32 - lambda2 as u32)) as u16;
    let table = probe_table(&subsets, lambda2, low)?;
    if high != low {
        let second = probe_table(&subsets, lambda2, high)?;
        if second != table {
            return Err(Error::CheckFailed(format!(
                "probe subsets {low:#b} and {high:#b} disagree on the table"
            )));
        }
    }
    Ok(SubsetModel {
        r,
        lambda2,
        structure: StructureConstants::from_rows(lambda2 + 1, table),
    })
}

/// Basis-free invariants of a commutative GF(2) algebra with identity.
pub fn invariant_profile(sc: &StructureConstants) -> Profile {
    let d = sc.dim();
    // Squaring map on basis vectors; linear because the algebra is
    // commutative and 2 = 0.
    let squares: Vec<BitVec> = (0..d).map(|i| sc.entry(i, i).clone()).collect();

    let mut s = 0u32;
    while (1usize << s) < d {
        s += 1;
    }
    let mut power = identity_map(d);
    for _ in 0..s {
        power = compose(&squares, &power);
    }
    // x is nilpotent iff x^(2^s) = 0 once 2^s >= d.
    let nilradical = kernel(&power);

    let mut nilradical_dims = Vec::new();
    if !nilradical.is_empty() {
        nilradical_dims.push(nilradical.len());
        let mut current = nilradical.clone();
        loop {
            let mut next = RowSpace::new(d);
            for x in &current {
                for y in &nilradical {
                    next.insert(&sc.multiply(x, y));
                }
            }
            let rank = next.rank();
            nilradical_dims.push(rank);
            if rank == 0 {
                break;
            }
            current = next.basis().cloned().collect();
        }
    }

    let idempotent_count = if d <= CENSUS_BOUND {
        Some(count_fixed_points(&identity_map(d), &squares))
    } else {
        None
    };

    Profile {
        dimension: d,
        idempotent_count,
        nilradical_dims,
    }
}

/// Compare the formula algebra against an independently built model of
/// the same `lambda`.
pub fn compare(ctx: &AlgebraContext, model: &SubsetModel) -> Result<OracleCompareReport> {
    let lambda = ctx.lambda();
    if lambda.r() != model.r || lambda.lambda2() != model.lambda2 {
        return Err(Error::LambdaMismatch(
            lambda.lambda1(),
            lambda.lambda2() as u64,
            model.r - model.lambda2 as u64,
            model.lambda2 as u64,
        ));
    }
    let formula = invariant_profile(&ctx.structure_constants());
    let oracle = invariant_profile(model.structure());
    let profiles_match = formula == oracle;
    let surviving = (0..=lambda.lambda2() as u64)
        .filter(|&g| b_parity(lambda.m(), g) == 1)
        .count() as u32;
    let expected_idempotents = 1u64 << surviving;
    let counts_match = formula.idempotent_count == Some(expected_idempotents)
        && oracle.idempotent_count == Some(expected_idempotents);
    let pass = profiles_match && counts_match;
    Ok(OracleCompareReport {
        lambda: lambda.parts(),
        r: lambda.r(),
        formula,
        model: oracle,
        profiles_match,
        surviving,
        expected_idempotents,
        counts_match,
        pass,
    })
}

/// Build the model for the context's `lambda` and compare.
pub fn oracle_check_report(ctx: &AlgebraContext) -> Result<OracleCompareReport> {
    let model = build_oracle(ctx.lambda().r(), ctx.lambda().lambda2())?;
    compare(ctx, &model)
}

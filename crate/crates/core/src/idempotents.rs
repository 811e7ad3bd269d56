//! The orthogonal idempotent family of `S_K(lambda)` in characteristic 2.
//!
//! For `0 <= g <= lambda2`, write the binary digits of `g` under those of
//! `m + 2g` and read column by column. Column `u` contributes a factor to
//! `e_{m,g}`:
//!
//! ```text
//! ((m+2g)_u, g_u) = (1, 1)  ->  b(2^u)
//!                   (1, 0)  ->  1 + b(2^u)
//!                   (0, 0)  ->  (no factor)
//!                   (0, 1)  ->  0 (kills the product)
//! ```
//!
//! The digit positions of the first two kinds are the sets `J` and `I`; a
//! `(0, 1)` column exists exactly when `C(m+2g, g)` is even, so `e_{m,g}`
//! vanishes exactly when `Y^mu` is not a summand of `M^lambda`. The empty
//! product is the identity. Factors `b(2^u)` with `2^u > lambda2` are zero
//! only as basis vectors; the factor `1 + b(2^u)` then degenerates to `1`,
//! which is the correct truncation at this `lambda2`.

use crate::algebra::{AlgebraContext, Element};
use crate::error::{Error, Result};
use crate::gf2::{count_fixed_points, BitVec, RowSpace};
use crate::padic::b_parity;
use crate::report::{FamilyReport, FamilyRow, PrimitivityCheck};

/// Corners of dimension at most this are screened for extra idempotents
/// by exhaustive enumeration (`2^dim` membership tests).
pub const CENSUS_BOUND: usize = 22;

/// Digit-column positions classifying the factors of `e_{m,g}`:
/// `i_set` holds `u` with `g_u = 0, (m+2g)_u = 1` (factors `1 + b(2^u)`),
/// `j_set` holds `u` with `g_u = 1, (m+2g)_u = 1` (factors `b(2^u)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IjSets {
    pub i_set: Vec<u32>,
    pub j_set: Vec<u32>,
}

pub fn ij_sets(m: u64, g: u64) -> IjSets {
    let mg = m + 2 * g;
    let mut i_set = Vec::new();
    let mut j_set = Vec::new();
    for u in 0..u64::BITS {
        if mg >> u & 1 == 1 {
            if g >> u & 1 == 1 {
                j_set.push(u);
            } else {
                i_set.push(u);
            }
        }
    }
    IjSets { i_set, j_set }
}

/// One member of the idempotent family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentRecord {
    pub g: u64,
    /// The partition `mu = (lambda1 + g, lambda2 - g)` this summand belongs to.
    pub mu: (u64, u64),
    pub sets: IjSets,
    pub element: Element,
    /// True when `C(m+2g, g)` is even; then `element` is zero.
    pub vanished: bool,
}

fn check_args(m: u64, g: u64, ctx: &AlgebraContext) -> Result<()> {
    if m != ctx.lambda().m() {
        return Err(Error::WrongM {
            ctx_m: ctx.lambda().m(),
            arg_m: m,
        });
    }
    if g > ctx.lambda().lambda2() as u64 {
        return Err(Error::GOutOfRange {
            g,
            lambda2: ctx.lambda().lambda2(),
        });
    }
    Ok(())
}

/// Column product up to and including bit position `t`.
fn column_product(m: u64, g: u64, t: u32, ctx: &AlgebraContext) -> Element {
    let mg = m + 2 * g;
    let mut acc = ctx.identity();
    let mut dead = false;
    for u in 0..=t.min(63) {
        match (mg >> u & 1, g >> u & 1) {
            (1, 1) => {
                let factor = ctx.basis_or_zero(1u64 << u);
                acc = ctx.multiply(&acc, &factor).expect("same context");
            }
            (1, 0) => {
                let factor = ctx
                    .add(&ctx.identity(), &ctx.basis_or_zero(1u64 << u))
                    .expect("same context");
                acc = ctx.multiply(&acc, &factor).expect("same context");
            }
            (0, 1) => dead = true,
            _ => {}
        }
    }
    if dead {
        ctx.zero()
    } else {
        acc
    }
}

pub fn idempotent(m: u64, g: u64, ctx: &AlgebraContext) -> Result<IdempotentRecord> {
    check_args(m, g, ctx)?;
    let element = column_product(m, g, 63, ctx);
    Ok(IdempotentRecord {
        g,
        mu: ctx.lambda().mu(g)?,
        sets: ij_sets(m, g),
        element,
        vanished: b_parity(m, g) == 0,
    })
}

/// `e_{m,g}` truncated to digit columns `u <= t`. With `t` at least the
/// top set bit of `m + 2g` this reproduces the full idempotent.
pub fn truncated_idempotent(m: u64, g: u64, t: u32, ctx: &AlgebraContext) -> Result<Element> {
    check_args(m, g, ctx)?;
    Ok(column_product(m, g, t, ctx))
}

/// All of `e_{m,0}, ..., e_{m,lambda2}` for the context's `m`.
pub fn idempotent_family(ctx: &AlgebraContext) -> Vec<IdempotentRecord> {
    let m = ctx.lambda().m();
    (0..=ctx.lambda().lambda2() as u64)
        .map(|g| idempotent(m, g, ctx).expect("g in range"))
        .collect()
}

/// Top set-bit position of `v`, or 0 for `v = 0`.
fn top_bit(v: u64) -> u32 {
    if v == 0 {
        0
    } else {
        63 - v.leading_zeros()
    }
}

/// Checks the defining properties of the family: each member squares to
/// itself, distinct members annihilate each other, the survivors sum to
/// the identity, a member is zero exactly when `C(m+2g, g)` is even,
/// truncating at the top digit column changes nothing, and each survivor
/// is primitive (its corner contains no idempotents besides `0` and `e`,
/// established by exhaustive enumeration where feasible).
pub fn verify_family(ctx: &AlgebraContext) -> FamilyReport {
    let m = ctx.lambda().m();
    let fam = idempotent_family(ctx);
    let mut failures = Vec::new();
    let note = |msg: String, failures: &mut Vec<String>| {
        if failures.len() < 8 {
            failures.push(msg);
        }
    };

    let mut idempotency_ok = true;
    let mut vanishing_ok = true;
    let mut truncation_ok = true;
    let mut sum = ctx.zero();
    for rec in &fam {
        let sq = ctx
            .multiply(&rec.element, &rec.element)
            .expect("same context");
        if sq != rec.element {
            idempotency_ok = false;
            note(
                format!("e_{{{m},{}}} is not idempotent", rec.g),
                &mut failures,
            );
        }
        if rec.element.is_zero() != rec.vanished {
            vanishing_ok = false;
            note(
                format!("vanishing mismatch at g = {}", rec.g),
                &mut failures,
            );
        }
        let t = top_bit(m + 2 * rec.g);
        let truncated = truncated_idempotent(m, rec.g, t, ctx).expect("g in range");
        if truncated != rec.element {
            truncation_ok = false;
            note(
                format!("truncation at u <= {t} changes e_{{{m},{}}}", rec.g),
                &mut failures,
            );
        }
        sum = ctx.add(&sum, &rec.element).expect("same context");
    }

    let mut orthogonality_ok = true;
    for a in &fam {
        for b in &fam {
            if a.g < b.g {
                let prod = ctx.multiply(&a.element, &b.element).expect("same context");
                if !prod.is_zero() {
                    orthogonality_ok = false;
                    note(
                        format!("e_{{{m},{}}} e_{{{m},{}}} != 0", a.g, b.g),
                        &mut failures,
                    );
                }
            }
        }
    }

    let completeness_ok = sum == ctx.identity();
    if !completeness_ok {
        note(
            "family does not sum to the identity".to_string(),
            &mut failures,
        );
    }

    let mut primitivity = Vec::new();
    for rec in fam.iter().filter(|rec| !rec.vanished) {
        // Corner basis by rank-filtering e b(0), ..., e b(lambda2).
        let mut space = RowSpace::new(ctx.dim());
        for i in 0..ctx.dim() {
            let v = ctx
                .multiply(&rec.element, &ctx.basis(i).expect("label in range"))
                .expect("same context");
            space.insert(v.bits());
        }
        let basis: Vec<BitVec> = space.basis().cloned().collect();
        let corner_dimension = basis.len();
        let check = if corner_dimension > CENSUS_BOUND {
            PrimitivityCheck {
                g: rec.g,
                corner_dimension,
                idempotent_count: None,
                skipped: true,
                ok: true,
            }
        } else {
            let squares: Vec<BitVec> = basis.iter().map(|v| ctx.multiply_bits(v, v)).collect();
            // Squaring is linear here: the algebra is commutative over GF(2).
            let count = count_fixed_points(&basis, &squares);
            // 0 and e are idempotent; primitivity means nothing else is.
            let ok = count == 2;
            if !ok {
                note(
                    format!("corner of e_{{{m},{}}} has {count} idempotents", rec.g),
                    &mut failures,
                );
            }
            PrimitivityCheck {
                g: rec.g,
                corner_dimension,
                idempotent_count: Some(count),
                skipped: false,
                ok,
            }
        };
        primitivity.push(check);
    }

    let rows = fam
        .into_iter()
        .map(|rec| FamilyRow {
            g: rec.g,
            mu: rec.mu,
            i_set: rec.sets.i_set,
            j_set: rec.sets.j_set,
            element: rec.element.labels(),
            vanished: rec.vanished,
        })
        .collect();

    FamilyReport {
        m,
        lambda2: ctx.lambda().lambda2(),
        rows,
        idempotency_ok,
        orthogonality_ok,
        completeness_ok,
        vanishing_ok,
        truncation_ok,
        primitivity,
        failures,
    }
}

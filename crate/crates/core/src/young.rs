//! Corner algebras `e_{m,g} S_K(lambda)`: the endomorphism algebras of
//! the Young module summands `Y^mu` of `M^lambda`.
//!
//! For a surviving `(m, g)` the corner has basis `e b(i)` over the
//! admissible labels `i` (binary digits disjoint from `m + 2g`, and
//! `i <= lambda2`) whose product is nonzero, and is generated by the
//! nonzero `e b(2^s)` at free digit positions `s` of `m + 2g`. Those
//! generators square to zero, which matches the canonical presentation of
//! the corner's dimension under `x_i -> e b(2^(a_i))`.

use crate::algebra::{AlgebraContext, Element};
use crate::error::{Error, Result};
use crate::gf2::{rank, RowSpace};
use crate::idempotents::{idempotent, IdempotentRecord};
use crate::presentation::{
    generator_count, presentation_for_dimension, quotient_multiply, Monomial,
};
use crate::report::{
    ClosureReport, ClosureRow, CornerBasisReport, InvolvementOutcome, InvolvementReport,
    InvolvementRow, PresentationData, PresentationIsoReport, SquareZeroReport, SquareZeroRow,
};

/// A minimal generator `x = e b(2^s)` of a corner algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    /// Free digit position: `(m + 2g)` has bit `s` clear and `2^s <= lambda2`.
    pub s: u32,
    pub element: Element,
}

/// Basis and generators of `End(Y^mu) = e_{m,g} S_K(lambda)`.
#[derive(Debug, Clone)]
pub struct YoungEndo {
    pub record: IdempotentRecord,
    /// Labels `i` with `e b(i)` in the basis, ascending.
    pub basis_labels: Vec<usize>,
    pub basis: Vec<Element>,
    pub generators: Vec<Generator>,
    pub dimension: usize,
}

/// Labels whose binary digits avoid those of `m + 2g`, up to `lambda2`.
pub fn admissible_labels(m: u64, g: u64, lambda2: usize) -> Vec<usize> {
    let mg = m + 2 * g;
    (0..=lambda2).filter(|&i| i as u64 & mg == 0).collect()
}

fn surviving_idempotent(m: u64, g: u64, ctx: &AlgebraContext) -> Result<IdempotentRecord> {
    let rec = idempotent(m, g, ctx)?;
    if rec.vanished {
        return Err(Error::NotASummand { m, g });
    }
    Ok(rec)
}

/// Free digit positions `s` of `m + 2g` with `2^s <= lambda2`; generator
/// candidates live here.
fn free_positions(mg: u64, lambda2: usize) -> Vec<u32> {
    (0..u64::BITS)
        .filter(|&s| 1u64 << s <= lambda2 as u64 && mg >> s & 1 == 0)
        .collect()
}

fn generators_of(e: &Element, mg: u64, ctx: &AlgebraContext) -> Result<Vec<Generator>> {
    let mut gens = Vec::new();
    for s in free_positions(mg, ctx.lambda().lambda2()) {
        let el = ctx.multiply(e, &ctx.basis(1usize << s)?)?;
        if !el.is_zero() {
            gens.push(Generator { s, element: el });
        }
    }
    Ok(gens)
}

pub fn minimal_generators(m: u64, g: u64, ctx: &AlgebraContext) -> Result<Vec<Generator>> {
    let rec = surviving_idempotent(m, g, ctx)?;
    generators_of(&rec.element, m + 2 * g, ctx)
}

pub fn endo_basis(m: u64, g: u64, ctx: &AlgebraContext) -> Result<YoungEndo> {
    let rec = surviving_idempotent(m, g, ctx)?;
    let e = &rec.element;
    let mut space = RowSpace::new(ctx.dim());
    let mut basis_labels = Vec::new();
    let mut basis = Vec::new();
    for i in admissible_labels(m, g, ctx.lambda().lambda2()) {
        let v = ctx.multiply(e, &ctx.basis(i)?)?;
        if v.is_zero() {
            continue;
        }
        if !space.insert(v.bits()) {
            return Err(Error::CheckFailed(format!(
                "admissible corner vectors are dependent at (m, g, i) = ({m}, {g}, {i})"
            )));
        }
        basis_labels.push(i);
        basis.push(v);
    }
    let generators = generators_of(e, m + 2 * g, ctx)?;
    let dimension = basis.len();
    Ok(YoungEndo {
        record: rec,
        basis_labels,
        basis,
        generators,
        dimension,
    })
}

/// For `u` a digit position of `m + 2g` with `b(2^u)` in range, `e b(2^u)`
/// is `0` or `e` itself: the generating factors of `e` act on the corner
/// as constants.
pub fn check_involvement(m: u64, g: u64, ctx: &AlgebraContext) -> Result<InvolvementReport> {
    let rec = surviving_idempotent(m, g, ctx)?;
    let e = &rec.element;
    let mut rows = Vec::new();
    for (set, positions) in [('I', &rec.sets.i_set), ('J', &rec.sets.j_set)] {
        for &u in positions {
            if 1u64 << u > ctx.lambda().lambda2() as u64 {
                continue;
            }
            let v = ctx.multiply(e, &ctx.basis(1usize << u)?)?;
            let outcome = if v.is_zero() {
                InvolvementOutcome::Zero
            } else if v == *e {
                InvolvementOutcome::Identity
            } else {
                InvolvementOutcome::Neither
            };
            rows.push(InvolvementRow { u, set, outcome });
        }
    }
    rows.sort_by_key(|r| r.u);
    let ok = rows
        .iter()
        .all(|r| r.outcome != InvolvementOutcome::Neither);
    Ok(InvolvementReport { m, g, rows, ok })
}

/// Every generator candidate `e b(2^s)` at a free position squares to zero.
pub fn check_generator_squares(m: u64, g: u64, ctx: &AlgebraContext) -> Result<SquareZeroReport> {
    let rec = surviving_idempotent(m, g, ctx)?;
    let e = &rec.element;
    let mut rows = Vec::new();
    for s in free_positions(m + 2 * g, ctx.lambda().lambda2()) {
        let eb = ctx.multiply(e, &ctx.basis(1usize << s)?)?;
        let sq = ctx.multiply(&eb, &eb)?;
        rows.push(SquareZeroRow {
            s,
            square_is_zero: sq.is_zero(),
        });
    }
    let ok = rows.iter().all(|r| r.square_is_zero);
    Ok(SquareZeroReport { m, g, rows, ok })
}

/// Repack an admissible label onto the free digit positions of `m + 2g`.
fn packed_label(i: usize, free: &[u32]) -> u64 {
    let mut acc = 0u64;
    for (bit, &s) in free.iter().enumerate() {
        if i >> s & 1 == 1 {
            acc |= 1 << bit;
        }
    }
    acc
}

/// In packed order the nonzero `e b(i)` form a prefix: once a product
/// vanishes, all packed-larger admissible products vanish too.
pub fn check_downward_closure(m: u64, g: u64, ctx: &AlgebraContext) -> Result<ClosureReport> {
    let rec = surviving_idempotent(m, g, ctx)?;
    let e = &rec.element;
    let lambda2 = ctx.lambda().lambda2();
    // All free positions, not only those below lambda2: packing must be
    // injective on the admissible labels.
    let free: Vec<u32> = (0..u64::BITS)
        .filter(|&s| (m + 2 * g) >> s & 1 == 0)
        .collect();
    let mut rows = Vec::new();
    for i in admissible_labels(m, g, lambda2) {
        let v = ctx.multiply(e, &ctx.basis(i)?)?;
        rows.push(ClosureRow {
            label: i,
            packed: packed_label(i, &free),
            nonzero: !v.is_zero(),
        });
    }
    rows.sort_by_key(|r| r.packed);
    let ok = rows.windows(2).all(|w| w[1].nonzero <= w[0].nonzero);
    Ok(ClosureReport { m, g, rows, ok })
}

/// The admissible nonzero products are independent and span the corner
/// `e S_K(lambda) = span { e b(i) : all i }`.
pub fn check_corner_basis(m: u64, g: u64, ctx: &AlgebraContext) -> Result<CornerBasisReport> {
    let rec = surviving_idempotent(m, g, ctx)?;
    let e = &rec.element;
    let lambda2 = ctx.lambda().lambda2();
    let mut candidates = Vec::new();
    for i in admissible_labels(m, g, lambda2) {
        let v = ctx.multiply(e, &ctx.basis(i)?)?;
        if !v.is_zero() {
            candidates.push(v.bits().clone());
        }
    }
    let count = candidates.len();
    let independent = rank(candidates.iter(), ctx.dim()) == count;
    let mut full = RowSpace::new(ctx.dim());
    for i in 0..ctx.dim() {
        let v = ctx.multiply(e, &ctx.basis(i)?)?;
        full.insert(v.bits());
    }
    let span_rank = full.rank();
    Ok(CornerBasisReport {
        m,
        g,
        dimension: count,
        independent,
        span_rank,
        spans: span_rank == count,
    })
}

/// Match the corner against the canonical presentation of its dimension:
/// the generator count hits the bracket `2^(k-1) < n <= 2^k`, monomial
/// images are a basis, squares and killed monomials map to zero, and all
/// basis products agree with the quotient's.
pub fn check_presentation_iso(
    m: u64,
    g: u64,
    ctx: &AlgebraContext,
) -> Result<PresentationIsoReport> {
    let endo = endo_basis(m, g, ctx)?;
    let n = endo.dimension as u64;
    let k = endo.generators.len() as u32;
    let p = presentation_for_dimension(n)?;
    let bracket_ok = generator_count(n) == k;
    let mut report = PresentationIsoReport {
        m,
        g,
        n,
        k,
        bracket_ok,
        images_independent: false,
        squares_ok: false,
        killed_ok: false,
        products_ok: false,
        generator_labels: endo.generators.iter().map(|gen| 1usize << gen.s).collect(),
        presentation: PresentationData::from(&p),
    };
    if !bracket_ok {
        // Generator mismatch: the claimed isomorphism cannot even be set up.
        return Ok(report);
    }

    // x_i -> e b(2^(a_i)); monomials map through products seeded at e.
    let image = |mono: &Monomial| -> Result<Element> {
        let mut acc = endo.record.element.clone();
        for &idx in mono.support() {
            acc = ctx.multiply(&acc, &endo.generators[idx as usize - 1].element)?;
        }
        Ok(acc)
    };

    let mut images: Vec<Element> = Vec::with_capacity(n as usize);
    for mono in p.quotient_basis() {
        images.push(image(mono)?);
    }
    report.images_independent = rank(images.iter().map(|e| e.bits()), ctx.dim()) == n as usize;

    report.squares_ok = true;
    for gen in &endo.generators {
        if !ctx.multiply(&gen.element, &gen.element)?.is_zero() {
            report.squares_ok = false;
        }
    }

    report.killed_ok = true;
    for mono in p.killed() {
        if !image(mono)?.is_zero() {
            report.killed_ok = false;
        }
    }

    report.products_ok = true;
    'outer: for (ai, a) in p.quotient_basis().iter().enumerate() {
        for (bi, b) in p.quotient_basis().iter().enumerate() {
            let lhs = ctx.multiply(&images[ai], &images[bi])?;
            let rhs = match quotient_multiply(&p, a, b)? {
                Some(c) => images[c.phi() as usize].clone(),
                None => ctx.zero(),
            };
            if lhs != rhs {
                report.products_ok = false;
                break 'outer;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_label_examples() {
        // m+2g = 6 = 110b: admissible labels avoid bits 1 and 2. Label 1
        // is admissible here; it drops out of the (2,2) corner basis only
        // because e b(1) = 0.
        assert_eq!(admissible_labels(2, 2, 2), vec![0, 1]);
        assert_eq!(admissible_labels(2, 2, 9), vec![0, 1, 8, 9]);
        // m+2g = 0: everything is admissible.
        assert_eq!(admissible_labels(0, 0, 3), vec![0, 1, 2, 3]);
    }

    #[test]
    fn corner_at_m2_g0() {
        // e_{2,0} = 1 + b(2) at lambda2 = 2: basis { e, e b(1) = b(1) },
        // one generator at the free position s = 0.
        let ctx = AlgebraContext::new(2, 2).unwrap();
        let endo = endo_basis(2, 0, &ctx).unwrap();
        assert_eq!(endo.dimension, 2);
        assert_eq!(endo.basis_labels, vec![0, 1]);
        assert_eq!(endo.basis[0].labels(), vec![0, 2]);
        assert_eq!(endo.basis[1].labels(), vec![1]);
        assert_eq!(endo.generators.len(), 1);
        assert_eq!(endo.generators[0].s, 0);
        assert_eq!(endo.generators[0].element.labels(), vec![1]);
    }

    #[test]
    fn corner_at_m2_g2() {
        // e_{2,2} = b(2): one-dimensional corner, no generators.
        let ctx = AlgebraContext::new(2, 2).unwrap();
        let endo = endo_basis(2, 2, &ctx).unwrap();
        assert_eq!(endo.dimension, 1);
        assert_eq!(endo.basis_labels, vec![0]);
        assert_eq!(endo.basis[0].labels(), vec![2]);
        assert!(endo.generators.is_empty());
    }

    #[test]
    fn corner_of_identity_idempotent_is_whole_algebra() {
        // lambda = (3, 3): m = 0, e_{0,0} = 1, so the corner is everything.
        let ctx = AlgebraContext::new(0, 3).unwrap();
        let endo = endo_basis(0, 0, &ctx).unwrap();
        assert_eq!(endo.dimension, 4);
        assert_eq!(endo.basis_labels, vec![0, 1, 2, 3]);
        // Generators b(1), b(2); b(4) is out of range.
        assert_eq!(
            endo.generators.iter().map(|g| g.s).collect::<Vec<_>>(),
            vec![0, 1]
        );
    }

    #[test]
    fn vanished_summand_is_an_error() {
        let ctx = AlgebraContext::new(2, 2).unwrap();
        assert!(matches!(
            endo_basis(2, 1, &ctx),
            Err(Error::NotASummand { m: 2, g: 1 })
        ));
        assert!(matches!(
            minimal_generators(2, 1, &ctx),
            Err(Error::NotASummand { .. })
        ));
    }

    #[test]
    fn battery_on_small_corners() {
        for m in 0..8u64 {
            for lambda2 in 0..8u64 {
                let ctx = AlgebraContext::new(m, lambda2).unwrap();
                let mut total = 0usize;
                for g in 0..=lambda2 {
                    if crate::padic::b_parity(m, g) == 0 {
                        continue;
                    }
                    let at =
                        |what: &str| format!("(m, lambda2, g) = ({m}, {lambda2}, {g}): {what}");
                    let basis = check_corner_basis(m, g, &ctx).unwrap();
                    assert!(basis.independent && basis.spans, "{}", at("corner basis"));
                    total += basis.dimension;
                    assert!(
                        check_involvement(m, g, &ctx).unwrap().ok,
                        "{}",
                        at("involvement")
                    );
                    assert!(
                        check_generator_squares(m, g, &ctx).unwrap().ok,
                        "{}",
                        at("squares")
                    );
                    assert!(
                        check_downward_closure(m, g, &ctx).unwrap().ok,
                        "{}",
                        at("closure")
                    );
                    let iso = check_presentation_iso(m, g, &ctx).unwrap();
                    assert!(iso.pass(), "{}", at("presentation"));
                }
                assert_eq!(
                    total,
                    lambda2 as usize + 1,
                    "dimension partition at ({m}, {lambda2})"
                );
            }
        }
    }

    #[test]
    fn one_column_algebra_presentation() {
        // lambda = (3, 3): corner = whole algebra, n = 4, k = 2,
        // presentation K[x1,x2]/<x1^2,x2^2>.
        let ctx = AlgebraContext::new(0, 3).unwrap();
        let iso = check_presentation_iso(0, 0, &ctx).unwrap();
        assert!(iso.pass());
        assert_eq!(iso.n, 4);
        assert_eq!(iso.k, 2);
        assert_eq!(iso.presentation.text, "K[x1,x2]/<x1^2,x2^2>");
    }

    #[test]
    fn presentation_with_killed_monomials() {
        // lambda = (4, 4): m = 0, corner of e_{0,0} = 1 has n = 5, k = 3;
        // x1x3, x2x3, x1x2x3 die (b(1)b(4), b(2)b(4), b(1)b(2)b(4) = 0
        // because b(5), b(6), b(7) are out of range).
        let ctx = AlgebraContext::new(0, 4).unwrap();
        let iso = check_presentation_iso(0, 0, &ctx).unwrap();
        assert!(iso.pass());
        assert_eq!(iso.n, 5);
        assert_eq!(iso.k, 3);
        assert_eq!(
            iso.presentation.text,
            "K[x1,x2,x3]/<x1^2,x2^2,x3^2,x1x3,x2x3,x1x2x3>"
        );
    }
}

//! The per-partition verification battery and the sweep over all
//! two-part partitions up to a given size.

use crate::algebra::AlgebraContext;
use crate::error::Result;
use crate::idempotents::verify_family;
use crate::padic::b_parity;
use crate::report::{CornerVerifyReport, LambdaVerifyReport, VerifySweepReport};
use crate::young::{
    check_corner_basis, check_downward_closure, check_generator_squares, check_involvement,
    check_presentation_iso,
};
use rayon::prelude::*;

fn corner_report(ctx: &AlgebraContext, g: u64) -> CornerVerifyReport {
    let m = ctx.lambda().m();
    // The caller only passes surviving g, so these cannot fail.
    let basis = check_corner_basis(m, g, ctx).expect("surviving summand");
    let involvement = check_involvement(m, g, ctx).expect("surviving summand");
    let squares = check_generator_squares(m, g, ctx).expect("surviving summand");
    let closure = check_downward_closure(m, g, ctx).expect("surviving summand");
    let iso = check_presentation_iso(m, g, ctx).expect("surviving summand");
    CornerVerifyReport {
        g,
        mu: ctx.lambda().mu(g).expect("g in range"),
        dimension: basis.dimension,
        generators: iso.k,
        basis_ok: basis.independent && basis.spans,
        involvement_ok: involvement.ok,
        squares_ok: squares.ok,
        closure_ok: closure.ok,
        bracket_ok: iso.bracket_ok,
        presentation_ok: iso.images_independent
            && iso.squares_ok
            && iso.killed_ok
            && iso.products_ok,
        presentation_text: iso.presentation.text,
    }
}

/// Runs every check the library knows about against one partition.
pub fn verify_lambda(ctx: &AlgebraContext) -> LambdaVerifyReport {
    let lambda = ctx.lambda();
    let algebra = ctx.verify();
    let generation_ok = ctx.generated_rank() == ctx.dim();
    let reduction_ok = ctx.reduction_consistent();
    let family = verify_family(ctx);
    let corners: Vec<CornerVerifyReport> = (0..=lambda.lambda2() as u64)
        .filter(|&g| b_parity(lambda.m(), g) == 1)
        .map(|g| corner_report(ctx, g))
        .collect();
    let dimension_partition_ok = corners.iter().map(|c| c.dimension).sum::<usize>() == ctx.dim();
    let pass = algebra.pass()
        && generation_ok
        && reduction_ok
        && family.pass()
        && corners.iter().all(CornerVerifyReport::pass)
        && dimension_partition_ok;
    LambdaVerifyReport {
        lambda: lambda.parts(),
        m: lambda.m(),
        lambda2: lambda.lambda2(),
        r: lambda.r(),
        algebra,
        generation_ok,
        reduction_ok,
        family,
        corners,
        dimension_partition_ok,
        pass,
    }
}

/// All two-part partitions `(l1, l2)` with `l1 >= l2` and `l1 + l2 <= max_r`,
/// in lexicographic order.
pub fn partitions_up_to(max_r: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for l1 in 0..=max_r {
        for l2 in 0..=l1.min(max_r - l1) {
            out.push((l1, l2));
        }
    }
    out
}

/// Runs [`verify_lambda`] over every partition with `r <= max_r`,
/// in parallel, aggregating deterministically in partition order.
pub fn verify_sweep(max_r: u64) -> Result<VerifySweepReport> {
    let partitions = partitions_up_to(max_r);
    let lambdas: Vec<LambdaVerifyReport> = partitions
        .par_iter()
        .map(|&(l1, l2)| Ok(verify_lambda(&AlgebraContext::for_lambda(l1, l2)?)))
        .collect::<Result<_>>()?;
    let failures: Vec<(u64, u64)> = lambdas
        .iter()
        .filter(|rep| !rep.pass)
        .map(|rep| rep.lambda)
        .collect();
    Ok(VerifySweepReport {
        max_r,
        count: lambdas.len(),
        pass: failures.is_empty(),
        failures,
        lambdas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions_up_to(0), vec![(0, 0)]);
        assert_eq!(
            partitions_up_to(4),
            vec![
                (0, 0),
                (1, 0),
                (1, 1),
                (2, 0),
                (2, 1),
                (2, 2),
                (3, 0),
                (3, 1),
                (4, 0)
            ]
        );
        // Count for r <= 40: sum over r of (floor(r/2) + 1).
        assert_eq!(partitions_up_to(40).len(), 441);
        for w in partitions_up_to(12).windows(2) {
            assert!(w[0] < w[1], "ordered and deduplicated");
        }
    }

    #[test]
    fn single_lambda_battery() {
        let ctx = AlgebraContext::for_lambda(4, 2).unwrap();
        let report = verify_lambda(&ctx);
        assert!(report.pass, "{}", report.render_text());
        assert_eq!(report.corners.len(), 2);
        assert_eq!(report.corners[0].dimension, 2);
        assert_eq!(report.corners[1].dimension, 1);
        assert_eq!(report.corners[0].presentation_text, "K[x1]/<x1^2>");
        assert_eq!(report.corners[1].presentation_text, "K");
    }

    #[test]
    fn sweep_small() {
        let report = verify_sweep(8).unwrap();
        assert!(report.pass, "{:?}", report.failures);
        assert_eq!(report.count, partitions_up_to(8).len());
        // Deterministic order even under the parallel map.
        let order: Vec<(u64, u64)> = report.lambdas.iter().map(|r| r.lambda).collect();
        assert_eq!(order, partitions_up_to(8));
    }
}

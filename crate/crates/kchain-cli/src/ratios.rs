//! The `ratios` subcommand: Kf/W and Kf*/Gut with their deviation from the
//! limiting value 1/4, computed exactly and rounded only for display.

use kchain_core::closed_forms::{deviation_from_quarter, ratio_report, FormulaVariant};
use kchain_core::exact_linalg::decimal_string;

use crate::{RatiosArgs, UsageError, EXIT_OK};

pub fn run(args: &RatiosArgs) -> Result<i32, UsageError> {
    let variant = if args.as_printed {
        FormulaVariant::AsPrinted
    } else {
        FormulaVariant::Corrected
    };
    println!(
        "ratios wiener_variant={}",
        if args.as_printed { "as-printed" } else { "corrected" }
    );
    for &n in &args.n {
        if n < 1 {
            return Err(UsageError("chain lengths must be at least 1".into()));
        }
        let report = ratio_report(n, variant);
        println!(
            "n={n} kf_over_w={} dev={} kfstar_over_gut={} dev={}",
            decimal_string(&report.kf_over_w, 6),
            decimal_string(&deviation_from_quarter(&report.kf_over_w), 6),
            decimal_string(&report.kfstar_over_gut, 6),
            decimal_string(&deviation_from_quarter(&report.kfstar_over_gut), 6),
        );
    }
    Ok(EXIT_OK)
}

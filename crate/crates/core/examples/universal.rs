//! Building and checking a covering tower down to (S2xS1, t_{alpha,beta}).

use seifert_covers::universal::{plan_theorem45, verify_plan};
use seifert_covers::SeifertSymbol;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target: SeifertSymbol = "(Oo,1; 1/2, 1/3, 1/6, -1/1)".parse()?;
    for (alpha, beta) in [(3, 1), (5, 2)] {
        let plan = plan_theorem45(&target, alpha, beta)?;
        println!("{target} over t_{{{alpha},{beta}}}: degree {}", plan.total_degree);
        for step in plan.steps.iter().rev() {
            println!(
                "  {:<10} degree {:>2}  {} -> {}  branched over {} fibers",
                format!("{:?}", step.kind),
                step.degree(),
                step.base.canonicalize().to_symbol(),
                step.expected_cover.canonicalize().to_symbol(),
                step.branch_labels.len()
            );
        }
        let report = verify_plan(&plan);
        println!("  verified: {}, {} fibers over the knot", report.passed, report.knot_preimage_count);
    }
    Ok(())
}

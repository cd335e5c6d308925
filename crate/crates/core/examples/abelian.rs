//! Abelian covers of (S2xS1, t_{alpha,beta}) from 4-tuples and cyclic degrees.

use seifert_covers::abelian::{abelian_covers_of_degree, enumerate_tuples, product_order};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("conjugacy classes of transitive commuting pairs in S_6:");
    for t in enumerate_tuples(6) {
        println!("  {t}  order of product {}", product_order(&t));
    }
    for (alpha, beta, n) in [(4, 1, 4), (5, 2, 3), (6, 1, 6)] {
        println!("degree {n} Abelian covers of t_{{{alpha},{beta}}}:");
        for r in abelian_covers_of_degree(alpha, beta, n)? {
            println!(
                "  {:?} {:<28} genus {} H1 {} unbranched {}",
                r.case,
                r.cover_symbol.canonicalize().to_symbol().to_string(),
                r.genus,
                r.h1_closed_form,
                r.unbranched
            );
        }
    }
    Ok(())
}

//! Lifting monodromy representations to cover symbols with fiber inventories.

use seifert_covers::universal::build_lemma41;
use seifert_covers::{lift::lift_cover, lift::make_frame, FrameRep, Permutation, SeifertSymbol};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 6-fold cover of (S2xS1, t_{3,1}) with trivial fiber image
    let step = build_lemma41(3, 1)?;
    let cover = lift_cover(&step.rep)?;
    println!("base  {}", step.rep.frame.symbol());
    println!("cover {}  (genus {}, degree {})", cover.cover_symbol, cover.cover_genus, cover.degree);
    for f in &cover.fiber_inventory {
        println!("  {:>6} over {:<3} cycle length {} ratio {}", f.new_label, f.source_label, f.cycle_length, f.ratio);
    }

    // fiber mapped to a 4-cycle: a cyclic covering
    let base: SeifertSymbol = "(Oo,0; 1/2, 1/4, -3/4)".parse()?;
    let e = Permutation::standard_cycle(4);
    let rep = FrameRep::new(make_frame(&base, 0), e.clone(), vec![e.pow(2), e.clone()], vec![])?;
    let cover = lift_cover(&rep)?;
    println!("cyclic cover of {base}: {} ~ {}", cover.cover_symbol, cover.cover_symbol.canonicalize().to_symbol());

    // fiber mapped to a product of two 2-cycles, boundaries swapping them
    let base: SeifertSymbol = "(Oo,0; 0/1, 0/1)".parse()?;
    let h = Permutation::from_cycles(4, &[[1, 2], [3, 4]])?;
    let q1 = Permutation::from_cycles(4, &[[1, 3], [2, 4]])?;
    let rep = FrameRep::new(make_frame(&base, 0), h, vec![q1], vec![])?;
    let cover = lift_cover(&rep)?;
    println!("factored cover: base degree {}, fiber degree {}, {}", cover.base_degree, cover.fiber_degree, cover.cover_symbol);
    Ok(())
}

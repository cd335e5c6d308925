//! Canonical forms, Euler numbers and first homology of a few symbols.

use seifert_covers::SeifertSymbol;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["(Oo,0; 1/2, 1/3, -5/6)", "(Oo,0; 2/3, -2/3)", "(Oo,1; 1/2, 1/2, -1/1)", "(Oo,0; 1/2, 1/3, 1/5)"] {
        let s: SeifertSymbol = text.parse()?;
        let c = s.canonicalize();
        println!("{s}");
        println!("  canonical  {}", c.to_symbol());
        println!("  euler      {}", seifert_covers::symbol::format_rational(&s.euler_number()));
        println!("  H1         {}", s.h1());
        println!("  S2xS1      {}", s.recognize_s2xs1());
    }
    let a: SeifertSymbol = "(Oo,0; 3/2, -1/2)".parse()?;
    let b: SeifertSymbol = "(Oo,0; 1/2, 1/2)".parse()?;
    println!("{a} ~ {b}: {}", a.equivalent(&b));
    Ok(())
}

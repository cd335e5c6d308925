//! Permutation arithmetic, imprimitivity blocks and Smith normal form.

use seifert_covers::algebra::{block_quotient, smith_normal_form};
use seifert_covers::{IntMatrix, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = Permutation::from_cycles(6, &[[1, 2, 3], [4, 5, 6]])?;
    let q = Permutation::from_cycles(6, &[[1, 4], [2, 5], [3, 6]])?;
    println!("h = {h}, q = {q}, h then q = {}", h.then(&q)?);
    println!("order of h*q: {}, commute: {}", h.then(&q)?.order(), h.commutes_with(&q));

    let blocks = block_quotient(&[h.clone(), q.clone()], std::slice::from_ref(&h))?;
    println!("blocks of <h>: {:?}", blocks.blocks);
    println!("induced action of q: {}", blocks.quotient[1]);

    let m = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let s = smith_normal_form(&m);
    println!("invariant factors {:?}, free rank {}", s.invariants, s.cokernel_free_rank);
    Ok(())
}

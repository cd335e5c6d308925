//! Abelian branched covers of `(S²×S¹, t_{α,β})`.
//!
//! A transitive commuting pair `σ₁, σ₂` is classified up to simultaneous
//! conjugacy by a [`FourTuple`] `(a₁, a₂, δ, i₀)`. The pair is realised on a
//! grid of `a₂/δ` rows and `a₁` columns: point `(col, row)` has number
//! `1 + col + a₁·row`, `σ₁` moves one column to the right, and `σ₂` moves one
//! row up, returning from the top row to row 0 shifted by `i₀·a₁/δ` columns.
//! Equivalently `σ₂^{a₂/δ} = σ₁^{i₀a₁/δ}`.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{gcd, lcm, mod_inverse, orbits_of_degree, AlgebraError, Permutation};
use crate::lift::{make_frame, FrameRep, LiftError};
use crate::symbol::{AbelianGroup, FiberRatio, SeifertSymbol, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("invalid 4-tuple {0}")]
    InvalidTuple(String),
    #[error("pair is not commuting")]
    NotCommuting,
    #[error("pair is not transitive")]
    NotTransitive,
    #[error("knot parameters need alpha >= 1, 0 <= beta <= alpha/2 and gcd(alpha, beta) = 1, got ({alpha}, {beta})")]
    BadKnot { alpha: i64, beta: i64 },
    #[error("order a{index} = {order} does not divide alpha = {alpha}")]
    OrderNotDividing { index: usize, order: u64, alpha: i64 },
    #[error("cyclic degree {n} is not coprime to alpha = {alpha}")]
    NotCoprime { n: u64, alpha: i64 },
    #[error("the genus-zero classification needs a1, a2 > 1")]
    TrivialGenerator,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

/// Conjugacy invariant `(a₁, a₂, δ, i₀)` of a transitive commuting pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTuple")]
pub struct FourTuple {
    pub a1: u64,
    pub a2: u64,
    pub delta: u64,
    pub i0: u64,
}

#[derive(Deserialize)]
struct RawTuple {
    a1: u64,
    a2: u64,
    delta: u64,
    i0: u64,
}

impl TryFrom<RawTuple> for FourTuple {
    type Error = AbelianError;

    fn try_from(r: RawTuple) -> Result<Self, Self::Error> {
        FourTuple::new(r.a1, r.a2, r.delta, r.i0)
    }
}

impl FourTuple {
    pub fn new(a1: u64, a2: u64, delta: u64, i0: u64) -> Result<Self, AbelianError> {
        let t = FourTuple { a1, a2, delta, i0 };
        let ok = a1 >= 1
            && a2 >= 1
            && delta >= 1
            && a1.gcd(&a2).is_multiple_of(delta)
            && i0 < delta
            && i0.gcd(&delta) == 1;
        if ok {
            Ok(t)
        } else {
            Err(AbelianError::InvalidTuple(t.to_string()))
        }
    }

    /// Degree `a₁a₂/δ`.
    pub fn degree(&self) -> u64 {
        self.a1 * self.a2 / self.delta
    }

    /// Number of grid rows, `a₂/δ`.
    pub fn rows(&self) -> u64 {
        self.a2 / self.delta
    }
}

impl fmt::Display for FourTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a1, self.a2, self.delta, self.i0)
    }
}

/// The grid pair of a tuple.
pub fn pair_from_tuple(t: &FourTuple) -> (Permutation, Permutation) {
    let (a1, rows) = (t.a1 as usize, t.rows() as usize);
    let shift = (t.i0 * t.a1 / t.delta) as usize;
    let n = a1 * rows;
    let point = |col: usize, row: usize| 1 + col % a1 + a1 * row;
    let mut s1 = vec![0; n];
    let mut s2 = vec![0; n];
    for row in 0..rows {
        for col in 0..a1 {
            s1[point(col, row) - 1] = point(col + 1, row);
            s2[point(col, row) - 1] = if row + 1 < rows { point(col, row + 1) } else { point(col + shift, 0) };
        }
    }
    (
        Permutation::from_images(s1).expect("grid map is a bijection"),
        Permutation::from_images(s2).expect("grid map is a bijection"),
    )
}

/// The tuple of a transitive commuting pair.
pub fn tuple_from_pair(s1: &Permutation, s2: &Permutation) -> Result<FourTuple, AbelianError> {
    if s1.degree() != s2.degree() {
        return Err(AlgebraError::DegreeMismatch { left: s1.degree(), right: s2.degree() }.into());
    }
    if !s1.commutes_with(s2) {
        return Err(AbelianError::NotCommuting);
    }
    let n = s1.degree() as u64;
    if !orbits_of_degree(n as usize, &[s1.clone(), s2.clone()])?.transitive {
        return Err(AbelianError::NotTransitive);
    }
    let (a1, a2) = (s1.order(), s2.order());
    let delta = a1 * a2 / n;
    let rows = n / a1;
    // σ₂^{rows} lies in ⟨σ₁⟩ because the group acts regularly
    let target = s2.pow(rows as i64).apply(1);
    let mut x = 1;
    let mut j = 0;
    while x != target {
        x = s1.apply(x);
        j += 1;
        if j > a1 {
            return Err(AbelianError::InvalidTuple("pair does not come from a grid".into()));
        }
    }
    let step = a1 / delta;
    if j % step != 0 {
        return Err(AbelianError::InvalidTuple("pair does not come from a grid".into()));
    }
    FourTuple::new(a1, a2, delta, j / step)
}

/// Order of `σ₁σ₂`: `(a₁a₂/δ) / gcd(a₁, (i₀a₁ + a₂)/δ)`.
pub fn product_order(t: &FourTuple) -> u64 {
    t.degree() / t.a1.gcd(&((t.i0 * t.a1 + t.a2) / t.delta))
}

/// All tuples of degree `n`, sorted by `(a₁, a₂, δ, i₀)`.
pub fn enumerate_tuples(n: u64) -> Vec<FourTuple> {
    let mut out = Vec::new();
    for a1 in (1..=n).filter(|a| n.is_multiple_of(*a)) {
        for a2 in (1..=n).filter(|a| n.is_multiple_of(*a)) {
            let g = a1.gcd(&a2);
            for delta in (1..=g).filter(|d| g % d == 0) {
                if a1 * a2 != n * delta {
                    continue;
                }
                for i0 in (0..delta).filter(|i| i.gcd(&delta) == 1) {
                    out.push(FourTuple { a1, a2, delta, i0 });
                }
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverCase {
    /// `σ₁ = (1)`
    #[serde(rename = "1.1")]
    Case11,
    /// `σ₂ = (1)`
    #[serde(rename = "1.2")]
    Case12,
    /// both generators non-trivial
    #[serde(rename = "1.3")]
    Case13,
    /// `ω(h) = ε`
    #[serde(rename = "cyclic")]
    Cyclic,
}

/// Choice of representation for [`abelian_cover`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbelianChoice {
    /// `ω(h) = (1)`, `ω(q₁), ω(q₂)` the grid pair of the tuple.
    Tuple(FourTuple),
    /// `ω(h) = ε` of degree `n`.
    Cyclic(u64),
}

/// Closed-form description of an Abelian cover of `(S²×S¹, t_{α,β})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianCoverReport {
    pub case: CoverCase,
    pub alpha: i64,
    pub beta: i64,
    pub choice: AbelianChoice,
    pub degree: u64,
    pub cover_symbol: SeifertSymbol,
    pub genus: u32,
    pub h1_closed_form: AbelianGroup,
    pub unbranched: bool,
}

impl AbelianCoverReport {
    /// The explicit representation over the `t_{α,β}` frame
    /// `(0/1, β/α, −β/α)` whose cover the report describes.
    pub fn representation(&self) -> Result<FrameRep, AbelianError> {
        representation(self.alpha, self.beta, &self.choice)
    }
}

fn check_knot(alpha: i64, beta: i64) -> Result<(), AbelianError> {
    if alpha < 1 || beta < 0 || 2 * beta > alpha || gcd(alpha, beta) != 1 {
        return Err(AbelianError::BadKnot { alpha, beta });
    }
    Ok(())
}

/// Representation over the frame of `(Oo,0; 0/1, β/α, −β/α)`.
pub fn representation(alpha: i64, beta: i64, choice: &AbelianChoice) -> Result<FrameRep, AbelianError> {
    check_knot(alpha, beta)?;
    let frame = make_frame(&SeifertSymbol::s2xs1(alpha, beta)?, 1);
    match *choice {
        AbelianChoice::Tuple(t) => {
            let (s1, s2) = pair_from_tuple(&t);
            let n = s1.degree();
            let q0 = s1.then(&s2)?.inverse();
            Ok(FrameRep::new(frame, Permutation::identity(n), vec![q0, s1, s2], vec![])?)
        }
        AbelianChoice::Cyclic(n) => {
            let (r1, r2) = cyclic_exponents(alpha, beta, n)?;
            let e = Permutation::standard_cycle(n as usize);
            Ok(FrameRep::new(frame, e.clone(), vec![Permutation::identity(n as usize), e.pow(r1), e.pow(r2)], vec![])?)
        }
    }
}

/// `r₁ = −α*β`, `r₂ = α*β` with `α*α ≡ 1 (mod n)`.
fn cyclic_exponents(alpha: i64, beta: i64, n: u64) -> Result<(i64, i64), AbelianError> {
    if n == 0 || gcd(n as i64, alpha) != 1 {
        return Err(AbelianError::NotCoprime { n, alpha });
    }
    let a_star = mod_inverse(alpha, n as i64)?;
    Ok((-a_star * beta, a_star * beta))
}

/// Closed-form symbol, genus and first homology of the Abelian cover.
pub fn abelian_cover(alpha: i64, beta: i64, choice: AbelianChoice) -> Result<AbelianCoverReport, AbelianError> {
    check_knot(alpha, beta)?;
    let ratio = |b: i64, a: i64| FiberRatio::new(b, a);
    match choice {
        AbelianChoice::Cyclic(n) => {
            let (r1, _) = cyclic_exponents(alpha, beta, n)?;
            // (−βα*α + β)/n
            let k = (r1 * alpha + beta) / n as i64;
            let cover_symbol = SeifertSymbol::new(0, vec![ratio(k, alpha)?, ratio(-k, alpha)?]);
            Ok(AbelianCoverReport {
                case: CoverCase::Cyclic,
                alpha,
                beta,
                choice,
                degree: n,
                cover_symbol,
                genus: 0,
                h1_closed_form: AbelianGroup::integers(),
                unbranched: true,
            })
        }
        AbelianChoice::Tuple(t) => {
            for (index, order) in [(1, t.a1), (2, t.a2)] {
                if alpha % order as i64 != 0 {
                    return Err(AbelianError::OrderNotDividing { index, order, alpha });
                }
            }
            let (a1, a2, delta) = (t.a1 as i64, t.a2 as i64, t.delta as i64);
            let unbranched = product_order(&t) == 1;
            let (case, ratios, genus, h1) = if a1 == 1 || a2 == 1 {
                let (case, a) = if a1 == 1 { (CoverCase::Case11, a2) } else { (CoverCase::Case12, a1) };
                let alpha_p = alpha / a;
                let mut ratios = Vec::with_capacity(a as usize + 1);
                if a1 == 1 {
                    ratios.extend(std::iter::repeat_n(ratio(beta, alpha)?, a as usize));
                    ratios.push(ratio(-beta, alpha_p)?);
                } else {
                    ratios.push(ratio(beta, alpha_p)?);
                    ratios.extend(std::iter::repeat_n(ratio(-beta, alpha)?, a as usize));
                }
                let h1 = if a == 1 {
                    // the trivial cover; the general formula needs a ≥ 2
                    AbelianGroup::integers()
                } else {
                    let mut orders = vec![alpha_p];
                    orders.extend(std::iter::repeat_n(alpha, a as usize - 2));
                    AbelianGroup::from_cyclic_orders(1, &orders)
                };
                (case, ratios, 0, h1)
            } else {
                let (alpha1, alpha2) = (alpha / a1, alpha / a2);
                let mut ratios = Vec::new();
                ratios.extend(std::iter::repeat_n(ratio(beta, alpha1)?, (a2 / delta) as usize));
                ratios.extend(std::iter::repeat_n(ratio(-beta, alpha2)?, (a1 / delta) as usize));
                let genus = case13_genus(&t);
                let (k1, k2) = (a1 / delta, a2 / delta);
                let orders: Vec<i64> = (3..=(a1 + a2) / delta)
                    .map(|i| {
                        if i <= k1 && i <= k2 {
                            alpha / gcd(a1, a2)
                        } else if k1 < i && i <= k2 {
                            alpha1
                        } else if k2 < i && i <= k1 {
                            alpha2
                        } else {
                            alpha / lcm(a1, a2)
                        }
                    })
                    .collect();
                let h1 = AbelianGroup::from_cyclic_orders(2 * genus as usize + 1, &orders);
                (CoverCase::Case13, ratios, genus, h1)
            };
            Ok(AbelianCoverReport {
                case,
                alpha,
                beta,
                choice,
                degree: t.degree(),
                cover_symbol: SeifertSymbol::new(genus, ratios),
                genus,
                h1_closed_form: h1,
                unbranched,
            })
        }
    }
}

/// `μ = gcd(a₁, a₂/δ + a₁i₀/δ)`.
pub fn case13_mu(t: &FourTuple) -> u64 {
    t.a1.gcd(&(t.a2 / t.delta + t.a1 * t.i0 / t.delta))
}

/// `g = 1 + ((a₁−1)(a₂−1) − 1)/(2δ) − μ/2`.
pub fn case13_genus(t: &FourTuple) -> u32 {
    let (a1, a2, d) = (t.a1 as i64, t.a2 as i64, t.delta as i64);
    let g = Ratio::from_integer(1) + Ratio::new((a1 - 1) * (a2 - 1) - 1, 2 * d)
        - Ratio::new(case13_mu(t) as i64, 2);
    assert!(g.is_integer() && g >= Ratio::from_integer(0), "genus formula gave {g} for {t}");
    g.to_integer() as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenusZeroClass {
    RegularCyclic,
    KleinFourType,
    PositiveGenus,
}

/// Which genus-zero family a tuple with `a₁, a₂ > 1` belongs to.
///
/// The genus vanishes exactly for `δ = a₁ = a₂ = a` with `i₀ = a − 1`
/// (then `σ₁σ₂ = (1)`) and for `(2, 2, 1, 0)`.
pub fn genus_zero_classifier(t: &FourTuple) -> Result<GenusZeroClass, AbelianError> {
    if t.a1 == 1 || t.a2 == 1 {
        return Err(AbelianError::TrivialGenerator);
    }
    Ok(if t.delta == t.a1 && t.a1 == t.a2 && t.i0 + 1 == t.a1 {
        GenusZeroClass::RegularCyclic
    } else if t.delta == 1 && t.a1 == 2 && t.a2 == 2 {
        GenusZeroClass::KleinFourType
    } else {
        GenusZeroClass::PositiveGenus
    })
}

/// Reports for every tuple of degree `n` with `a₁, a₂ | α`, followed by the
/// cyclic cover when `gcd(n, α) = 1`.
pub fn abelian_covers_of_degree(alpha: i64, beta: i64, n: u64) -> Result<Vec<AbelianCoverReport>, AbelianError> {
    check_knot(alpha, beta)?;
    let mut out = Vec::new();
    for t in enumerate_tuples(n) {
        if alpha % t.a1 as i64 == 0 && alpha % t.a2 as i64 == 0 {
            out.push(abelian_cover(alpha, beta, AbelianChoice::Tuple(t))?);
        }
    }
    if gcd(n as i64, alpha) == 1 {
        out.push(abelian_cover(alpha, beta, AbelianChoice::Cyclic(n))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::lift_cover;
    use proptest::prelude::*;

    fn tup(a1: u64, a2: u64, d: u64, i0: u64) -> FourTuple {
        FourTuple::new(a1, a2, d, i0).unwrap()
    }

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn tuple_validation() {
        assert!(FourTuple::new(2, 4, 2, 1).is_ok());
        assert!(FourTuple::new(2, 4, 2, 0).is_err());
        assert!(FourTuple::new(2, 3, 2, 1).is_err());
        assert!(FourTuple::new(4, 4, 4, 2).is_err());
        assert!(FourTuple::new(0, 1, 1, 0).is_err());
        assert!(serde_json::from_str::<FourTuple>(r#"{"a1":2,"a2":2,"delta":2,"i0":0}"#).is_err());
        let t: FourTuple = serde_json::from_str(r#"{"a1":2,"a2":4,"delta":2,"i0":1}"#).unwrap();
        assert_eq!(t, tup(2, 4, 2, 1));
    }

    #[test]
    fn grid_pairs() {
        assert_eq!(pair_from_tuple(&tup(2, 2, 1, 0)), (p(4, &[&[1, 2], &[3, 4]]), p(4, &[&[1, 3], &[2, 4]])));
        let (s1, s2) = pair_from_tuple(&tup(1, 5, 1, 0));
        assert!(s1.is_identity());
        assert_eq!(s2, Permutation::standard_cycle(5));
        for i0 in [1, 2, 4] {
            let (s1, s2) = pair_from_tuple(&tup(5, 5, 5, i0));
            assert_eq!(s1, Permutation::standard_cycle(5));
            assert_eq!(s2, s1.pow(i0 as i64));
        }
    }

    #[test]
    fn tuple_extraction() {
        assert_eq!(tuple_from_pair(&Permutation::identity(3), &Permutation::standard_cycle(3)).unwrap(), tup(1, 3, 1, 0));
        let a = p(4, &[&[1, 2]]);
        assert_eq!(tuple_from_pair(&a, &a).unwrap_err(), AbelianError::NotTransitive);
        let b = p(3, &[&[1, 2]]);
        let c = p(3, &[&[2, 3]]);
        assert_eq!(tuple_from_pair(&b, &c).unwrap_err(), AbelianError::NotCommuting);
        for n in 1..=12 {
            for t in enumerate_tuples(n) {
                let (s1, s2) = pair_from_tuple(&t);
                assert_eq!(tuple_from_pair(&s1, &s2).unwrap(), t);
            }
        }
    }

    #[test]
    fn product_orders() {
        assert_eq!(product_order(&tup(2, 2, 1, 0)), 2);
        assert_eq!(product_order(&tup(1, 7, 1, 0)), 7);
        for n in 1..=12 {
            for t in enumerate_tuples(n) {
                let (s1, s2) = pair_from_tuple(&t);
                assert_eq!(product_order(&t), s1.then(&s2).unwrap().order(), "{t}");
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_tuples(1), vec![tup(1, 1, 1, 0)]);
        let four = enumerate_tuples(4);
        let expected = [
            tup(1, 4, 1, 0),
            tup(2, 2, 1, 0),
            tup(2, 4, 2, 1),
            tup(4, 1, 1, 0),
            tup(4, 2, 2, 1),
            tup(4, 4, 4, 1),
            tup(4, 4, 4, 3),
        ];
        assert_eq!(four, expected);
        for pr in [3u64, 5, 7] {
            let mut expected = vec![tup(1, pr, 1, 0)];
            expected.push(tup(pr, 1, 1, 0));
            expected.extend((1..pr).map(|i| tup(pr, pr, pr, i)));
            assert_eq!(enumerate_tuples(pr), expected);
        }
    }

    #[test]
    fn closed_form_examples() {
        let r = abelian_cover(3, 1, AbelianChoice::Tuple(tup(1, 3, 1, 0))).unwrap();
        assert_eq!(r.case, CoverCase::Case11);
        assert_eq!(r.cover_symbol, "(Oo,0; 1/3, 1/3, 1/3, -1/1)".parse().unwrap());
        assert_eq!(r.h1_closed_form, AbelianGroup::from_cyclic_orders(1, &[3]));

        let r = abelian_cover(4, 1, AbelianChoice::Tuple(tup(2, 2, 1, 0))).unwrap();
        assert_eq!(r.case, CoverCase::Case13);
        assert_eq!(r.cover_symbol, "(Oo,0; 1/2, 1/2, -1/2, -1/2)".parse().unwrap());
        assert_eq!(r.genus, 0);
        assert_eq!(r.h1_closed_form, AbelianGroup::from_cyclic_orders(1, &[2, 2]));

        let r = abelian_cover(2, 1, AbelianChoice::Cyclic(3)).unwrap();
        assert_eq!(r.cover_symbol, "(Oo,0; -1/2, 1/2)".parse().unwrap());
        assert!(r.unbranched && r.cover_symbol.recognize_s2xs1());

        assert!(matches!(
            abelian_cover(4, 1, AbelianChoice::Tuple(tup(3, 1, 1, 0))),
            Err(AbelianError::OrderNotDividing { index: 1, order: 3, alpha: 4 })
        ));
        assert!(matches!(abelian_cover(4, 1, AbelianChoice::Cyclic(2)), Err(AbelianError::NotCoprime { .. })));
        assert!(matches!(abelian_cover(4, 2, AbelianChoice::Cyclic(3)), Err(AbelianError::BadKnot { .. })));
        assert!(matches!(abelian_cover(5, 3, AbelianChoice::Cyclic(3)), Err(AbelianError::BadKnot { .. })));
    }

    #[test]
    fn closed_form_matches_engine_symbol() {
        for alpha in 1..=8i64 {
            for beta in (0..=alpha / 2).filter(|&b| gcd(alpha, b) == 1) {
                for n in 1..=8 {
                    for r in abelian_covers_of_degree(alpha, beta, n).unwrap() {
                        let rep = r.representation().unwrap();
                        let c = lift_cover(&rep).unwrap();
                        assert!(
                            c.cover_symbol.equivalent(&r.cover_symbol),
                            "α={alpha} β={beta} {:?}: engine {} closed form {}",
                            r.choice,
                            c.cover_symbol,
                            r.cover_symbol
                        );
                        assert_eq!(c.cover_genus, r.genus);
                        assert_eq!(c.fiber_inventory.iter().all(|l| !l.branched), r.unbranched);
                    }
                }
            }
        }
    }

    #[test]
    fn genus_zero_families() {
        assert_eq!(genus_zero_classifier(&tup(2, 2, 1, 0)).unwrap(), GenusZeroClass::KleinFourType);
        assert_eq!(genus_zero_classifier(&tup(3, 3, 3, 2)).unwrap(), GenusZeroClass::RegularCyclic);
        assert_eq!(genus_zero_classifier(&tup(3, 3, 3, 1)).unwrap(), GenusZeroClass::PositiveGenus);
        assert_eq!(genus_zero_classifier(&tup(2, 4, 2, 1)).unwrap(), GenusZeroClass::PositiveGenus);
        assert_eq!(genus_zero_classifier(&tup(1, 4, 1, 0)).unwrap_err(), AbelianError::TrivialGenerator);
        for n in 1..=16 {
            for t in enumerate_tuples(n).into_iter().filter(|t| t.a1 > 1 && t.a2 > 1) {
                let zero = case13_genus(&t) == 0;
                assert_eq!(zero, genus_zero_classifier(&t).unwrap() != GenusZeroClass::PositiveGenus, "{t}");
            }
        }
        assert_eq!(case13_genus(&tup(3, 3, 3, 1)), 1);
        assert_eq!(case13_genus(&tup(2, 4, 2, 1)), 1);
    }

    proptest! {
        #[test]
        fn tuples_survive_conjugation(idx in 0usize..1000, shuffle in Just((1..=12usize).collect::<Vec<_>>()).prop_shuffle()) {
            let all: Vec<FourTuple> = (1..=12).flat_map(enumerate_tuples).collect();
            let t = all[idx % all.len()];
            let (s1, s2) = pair_from_tuple(&t);
            let n = s1.degree();
            let pi = Permutation::from_images(shuffle.into_iter().filter(|&x| x <= n).collect()).unwrap();
            let (c1, c2) = (s1.relabel(&pi).unwrap(), s2.relabel(&pi).unwrap());
            prop_assert_eq!(tuple_from_pair(&c1, &c2).unwrap(), t);
        }
    }
}

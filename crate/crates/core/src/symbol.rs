//! Seifert symbols of class `Oo`: the classification moves, canonical
//! forms, Euler number, first homology and recognition of `S²×S¹`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{smith_normal_form, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("ratio {beta}/{alpha} needs alpha >= 1")]
    NonPositiveAlpha { beta: i64, alpha: i64 },
    #[error("ratio {beta}/{alpha} is not reduced")]
    NotReduced { beta: i64, alpha: i64 },
    #[error("unsupported symbol class {0:?}, only Oo is implemented")]
    UnsupportedClass(String),
    #[error("index {index} out of range for {len} ratios")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("entry {0} is not 0/1")]
    NotZeroOverOne(usize),
    #[error("permutation of ratios is not a bijection of 0..{0}")]
    BadPermutation(usize),
    #[error("transfer needs two distinct ratios, got {0} twice")]
    SameIndex(usize),
    #[error("integer overflow while applying a move")]
    Overflow,
    #[error("cannot parse symbol: {0}")]
    Parse(String),
}

/// One ratio `β/α` of a Seifert symbol; `α ≥ 1`, `gcd(α, |β|) = 1`.
///
/// Ordering is by `(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberRatio {
    pub alpha: i64,
    pub beta: i64,
}

impl FiberRatio {
    pub fn new(beta: i64, alpha: i64) -> Result<Self, SymbolError> {
        if alpha < 1 {
            return Err(SymbolError::NonPositiveAlpha { beta, alpha });
        }
        if alpha.gcd(&beta) != 1 {
            return Err(SymbolError::NotReduced { beta, alpha });
        }
        Ok(FiberRatio { alpha, beta })
    }

    /// `β/α` in lowest terms. Panics if `α ≤ 0`.
    pub fn reduced(beta: i64, alpha: i64) -> Self {
        assert!(alpha > 0, "alpha must be positive");
        let g = alpha.gcd(&beta);
        FiberRatio { alpha: alpha / g, beta: beta / g }
    }

    pub const fn zero() -> Self {
        FiberRatio { alpha: 1, beta: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha == 1 && self.beta == 0
    }

    pub fn is_exceptional(&self) -> bool {
        self.alpha > 1
    }

    pub fn value(&self) -> BigRational {
        BigRational::new(BigInt::from(self.beta), BigInt::from(self.alpha))
    }
}

impl fmt::Display for FiberRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

/// A Seifert symbol `(Oo, g; β₁/α₁, …, β_t/α_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertSymbol {
    pub genus: u32,
    pub ratios: Vec<FiberRatio>,
}

/// Classification moves between symbols of the same fibered manifold.
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// New ratio list is `ratios[order[0]], ratios[order[1]], …`.
    Permute(Vec<usize>),
    /// Appends a `0/1` entry.
    Insert01,
    Delete01(usize),
    /// `β_i/α_i, β_j/α_j ↦ (β_i + kα_i)/α_i, (β_j − kα_j)/α_j`.
    Transfer { i: usize, j: usize, k: i64 },
}

impl SeifertSymbol {
    pub fn new(genus: u32, ratios: Vec<FiberRatio>) -> Self {
        SeifertSymbol { genus, ratios }
    }

    /// Builds a symbol from `(beta, alpha)` pairs, validating each.
    pub fn from_pairs(genus: u32, pairs: &[(i64, i64)]) -> Result<Self, SymbolError> {
        let ratios = pairs.iter().map(|&(b, a)| FiberRatio::new(b, a)).collect::<Result<_, _>>()?;
        Ok(SeifertSymbol { genus, ratios })
    }

    /// The fibering `(Oo, 0; β/α, −β/α)` of `S²×S¹`.
    pub fn s2xs1(alpha: i64, beta: i64) -> Result<Self, SymbolError> {
        Self::from_pairs(0, &[(beta, alpha), (-beta, alpha)])
    }

    pub fn euler_number(&self) -> BigRational {
        -self.ratios.iter().fold(BigRational::zero(), |acc, r| acc + r.value())
    }

    pub fn apply_move(&self, mv: &Move) -> Result<SeifertSymbol, SymbolError> {
        let len = self.ratios.len();
        let check = |index: usize| {
            if index < len {
                Ok(())
            } else {
                Err(SymbolError::IndexOutOfRange { index, len })
            }
        };
        let mut ratios = self.ratios.clone();
        match mv {
            Move::Permute(order) => {
                let mut seen = vec![false; len];
                if order.len() != len {
                    return Err(SymbolError::BadPermutation(len));
                }
                for &i in order {
                    if i >= len || seen[i] {
                        return Err(SymbolError::BadPermutation(len));
                    }
                    seen[i] = true;
                }
                ratios = order.iter().map(|&i| self.ratios[i]).collect();
            }
            Move::Insert01 => ratios.push(FiberRatio::zero()),
            Move::Delete01(i) => {
                check(*i)?;
                if !ratios[*i].is_zero() {
                    return Err(SymbolError::NotZeroOverOne(*i));
                }
                ratios.remove(*i);
            }
            Move::Transfer { i, j, k } => {
                check(*i)?;
                check(*j)?;
                if i == j {
                    return Err(SymbolError::SameIndex(*i));
                }
                let shift = |r: FiberRatio, k: i64| {
                    k.checked_mul(r.alpha)
                        .and_then(|x| r.beta.checked_add(x))
                        .map(|beta| FiberRatio { alpha: r.alpha, beta })
                        .ok_or(SymbolError::Overflow)
                };
                ratios[*i] = shift(ratios[*i], *k)?;
                ratios[*j] = shift(ratios[*j], k.checked_neg().ok_or(SymbolError::Overflow)?)?;
            }
        }
        Ok(SeifertSymbol { genus: self.genus, ratios })
    }

    /// Unique representative of the move class: each exceptional `β` is
    /// reduced into `(0, α)` and every integer part is collected into `b`.
    pub fn canonicalize(&self) -> CanonicalSymbol {
        let mut b: i64 = 0;
        let mut exceptional = Vec::new();
        for r in &self.ratios {
            let (q, rem) = r.beta.div_mod_floor(&r.alpha);
            b += q;
            if r.alpha > 1 {
                exceptional.push(FiberRatio { alpha: r.alpha, beta: rem });
            }
        }
        exceptional.sort();
        CanonicalSymbol { genus: self.genus, b, exceptional }
    }

    /// Fiber-preserving homeomorphism test via canonical forms.
    pub fn equivalent(&self, other: &SeifertSymbol) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// Genus 0, at most two exceptional fibers and Euler number zero.
    pub fn recognize_s2xs1(&self) -> bool {
        self.genus == 0 && self.canonicalize().exceptional.len() <= 2 && self.euler_number().is_zero()
    }

    /// `H₁` from the presentation over `q₁, …, q_t, h` with relations
    /// `α_i q_i + β_i h = 0` and `Σ q_i = 0`, plus `ℤ^{2g}`.
    pub fn h1(&self) -> AbelianGroup {
        let t = self.ratios.len();
        let mut m = IntMatrix::zeros(t + 1, t + 1);
        for (i, r) in self.ratios.iter().enumerate() {
            m.set(i, i, BigInt::from(r.alpha));
            m.set(i, t, BigInt::from(r.beta));
        }
        for i in 0..t {
            m.set(t, i, BigInt::one());
        }
        let s = smith_normal_form(&m);
        AbelianGroup { free_rank: 2 * self.genus as usize + s.cokernel_free_rank, torsion: s.torsion() }
    }
}

impl fmt::Display for SeifertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Oo,{};", self.genus)?;
        let parts: Vec<String> = self.ratios.iter().map(|r| r.to_string()).collect();
        if !parts.is_empty() {
            write!(f, " {}", parts.join(", "))?;
        }
        write!(f, ")")
    }
}

impl FromStr for SeifertSymbol {
    type Err = SymbolError;

    /// Parses `(Oo,g; b1/a1, b2/a2, …)`; the class tag is optional.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymbolError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
        let (head, tail) = match inner.split_once(';') {
            Some((h, t)) => (h, t),
            None => (inner, ""),
        };
        let head = head.trim();
        let genus_str = match head.split_once(',') {
            Some((class, g)) => {
                if class.trim() != "Oo" {
                    return Err(SymbolError::UnsupportedClass(class.trim().to_string()));
                }
                g
            }
            None => head,
        };
        let genus = genus_str.trim().parse::<u32>().map_err(|_| bad())?;
        let mut ratios = Vec::new();
        for part in tail.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let part = part.replace('−', "-");
            let (b, a) = part.split_once('/').ok_or_else(bad)?;
            let beta = b.trim().parse::<i64>().map_err(|_| bad())?;
            let alpha = a.trim().parse::<i64>().map_err(|_| bad())?;
            ratios.push(FiberRatio::new(beta, alpha)?);
        }
        Ok(SeifertSymbol { genus, ratios })
    }
}

/// Canonical representative: genus, one integer term `b/1` and the
/// exceptional ratios with `0 < β < α`, sorted by `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalSymbol {
    pub genus: u32,
    pub b: i64,
    pub exceptional: Vec<FiberRatio>,
}

impl CanonicalSymbol {
    /// As a raw symbol; `b/1` leads and is omitted when zero.
    pub fn to_symbol(&self) -> SeifertSymbol {
        let mut ratios = Vec::with_capacity(self.exceptional.len() + 1);
        if self.b != 0 {
            ratios.push(FiberRatio { alpha: 1, beta: self.b });
        }
        ratios.extend(self.exceptional.iter().copied());
        SeifertSymbol { genus: self.genus, ratios }
    }
}

impl fmt::Display for CanonicalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Oo,{}; b={}", self.genus, self.b)?;
        for r in &self.exceptional {
            write!(f, ", {}", r)?;
        }
        write!(f, ")")
    }
}

/// Exact rational in `"p/q"` form, lowest terms, `q > 0`.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Finitely generated Abelian group `ℤ^r ⊕ ℤ_{d₁} ⊕ … ⊕ ℤ_{d_k}` with
/// `d₁ | d₂ | …` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Normalises `ℤ^free ⊕ ⊕ ℤ_{orders[i]}` into invariant factors.
    /// Orders of 0 count as free summands; orders of ±1 vanish.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[i64]) -> Self {
        let s = smith_normal_form(&IntMatrix::from_diagonal(orders));
        AbelianGroup { free_rank: free_rank + s.cokernel_free_rank, torsion: s.torsion() }
    }

    pub fn integers() -> Self {
        AbelianGroup { free_rank: 1, torsion: Vec::new() }
    }

    pub fn is_integers(&self) -> bool {
        self.free_rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

// JSON forms

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    class: String,
    genus: u32,
    ratios: Vec<(i64, i64)>,
}

impl Serialize for SeifertSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymbolRepr {
            class: "Oo".into(),
            genus: self.genus,
            ratios: self.ratios.iter().map(|r| (r.beta, r.alpha)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SeifertSymbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymbolRepr::deserialize(deserializer)?;
        if repr.class != "Oo" {
            return Err(serde::de::Error::custom(SymbolError::UnsupportedClass(repr.class)));
        }
        SeifertSymbol::from_pairs(repr.genus, &repr.ratios).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct CanonicalRepr {
    class: String,
    genus: u32,
    b: i64,
    ratios: Vec<(i64, i64)>,
}

impl Serialize for CanonicalSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CanonicalRepr {
            class: "Oo".into(),
            genus: self.genus,
            b: self.b,
            ratios: self.exceptional.iter().map(|r| (r.beta, r.alpha)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CanonicalSymbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CanonicalRepr::deserialize(deserializer)?;
        if repr.class != "Oo" {
            return Err(serde::de::Error::custom(SymbolError::UnsupportedClass(repr.class)));
        }
        let mut exceptional = Vec::with_capacity(repr.ratios.len());
        for (beta, alpha) in repr.ratios {
            let r = FiberRatio::new(beta, alpha).map_err(serde::de::Error::custom)?;
            if r.alpha < 2 || r.beta <= 0 || r.beta >= r.alpha {
                return Err(serde::de::Error::custom(format!("{r} is not a normalised exceptional ratio")));
            }
            exceptional.push(r);
        }
        if exceptional.windows(2).any(|w| w[0] > w[1]) {
            return Err(serde::de::Error::custom("exceptional ratios are not sorted"));
        }
        Ok(CanonicalSymbol { genus: repr.genus, b: repr.b, exceptional })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BigNumber {
    Small(u64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    free_rank: usize,
    torsion: Vec<BigNumber>,
}

impl Serialize for AbelianGroup {
    /// Torsion orders are JSON numbers when they fit in `u64`, decimal
    /// strings otherwise.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let torsion = self
            .torsion
            .iter()
            .map(|d| d.to_u64().map_or_else(|| BigNumber::Text(d.to_string()), BigNumber::Small))
            .collect();
        GroupRepr { free_rank: self.free_rank, torsion }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GroupRepr::deserialize(deserializer)?;
        let mut torsion = Vec::with_capacity(repr.torsion.len());
        for d in repr.torsion {
            let v = match d {
                BigNumber::Small(x) => BigInt::from(x),
                BigNumber::Text(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom)?,
            };
            if v <= BigInt::one() {
                return Err(serde::de::Error::custom("torsion orders must be at least 2"));
            }
            torsion.push(v);
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(serde::de::Error::custom("torsion orders do not form a divisibility chain"));
        }
        Ok(AbelianGroup { free_rank: repr.free_rank, torsion })
    }
}

impl AbelianGroup {
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(|d| if d.is_positive() { d.to_u64() } else { None }).collect()
    }
}

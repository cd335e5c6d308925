//! Frames, monodromy representations and the covering-lift engine.
//!
//! A [`Frame`] is a symbol whose ratios carry fiber labels; a [`FrameRep`]
//! adds permutation images of the boundary curves `q_i`, the surface
//! generators and the regular fiber `h`. [`lift_cover`] computes the Seifert
//! symbol of the associated cover together with an inventory of the lifted
//! marked fibers.
//!
//! Three shapes are supported: `ω(h) = (1)`, the cyclic shape where every
//! image is a power of `ε = (1, …, n)` and `ω(h) = ε^s` with `gcd(n, s) = 1`,
//! and the composition of the two obtained by factoring through the orbits
//! of `ω(h)`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{
    block_quotient, commutator, mod_inverse, orbits_of_degree, word_product, AlgebraError,
    BlockQuotient, Permutation,
};
use crate::symbol::{FiberRatio, SeifertSymbol, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("frame has {ratios} ratios but {labels} labels")]
    LabelCount { ratios: usize, labels: usize },
    #[error("duplicate fiber label {0:?}")]
    DuplicateLabel(String),
    #[error("a frame needs at least one boundary component")]
    EmptyFrame,
    #[error("expected {expected} boundary images, got {got}")]
    BoundaryCount { expected: usize, got: usize },
    #[error("expected {expected} surface images, got {got}")]
    SurfaceCount { expected: usize, got: usize },
    #[error("invalid representation: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("representation does not have the cyclic shape: {0}")]
    NotCyclic(String),
    #[error("exponent {s} is not coprime to {n}")]
    NotCoprime { n: usize, s: i64 },
    #[error("the fiber image does not act semiregularly")]
    NonSemiregular,
    #[error("inconsistent representation data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// A symbol with one fiber label per ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    symbol: SeifertSymbol,
    labels: Vec<String>,
}

impl Frame {
    pub fn new(symbol: SeifertSymbol, labels: Vec<String>) -> Result<Self, LiftError> {
        if symbol.ratios.is_empty() {
            return Err(LiftError::EmptyFrame);
        }
        if labels.len() != symbol.ratios.len() {
            return Err(LiftError::LabelCount { ratios: symbol.ratios.len(), labels: labels.len() });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(LiftError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Frame { symbol, labels })
    }

    pub fn symbol(&self) -> &SeifertSymbol {
        &self.symbol
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn genus(&self) -> u32 {
        self.symbol.genus
    }

    pub fn boundary_count(&self) -> usize {
        self.labels.len()
    }

    pub fn ratio(&self, i: usize) -> FiberRatio {
        self.symbol.ratios[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Frame over `s` with `branching_slots` extra `0/1` entries placed first.
///
/// Branching entries are labelled `b1, b2, …` and the ratios of `s` keep
/// their order with labels `f1, f2, …`. If the result would have no ratio at
/// all a single `0/1` entry is inserted.
pub fn make_frame(s: &SeifertSymbol, branching_slots: usize) -> Frame {
    let slots = if branching_slots == 0 && s.ratios.is_empty() { 1 } else { branching_slots };
    let mut ratios = vec![FiberRatio::zero(); slots];
    ratios.extend(s.ratios.iter().copied());
    let mut labels: Vec<String> = (1..=slots).map(|i| format!("b{i}")).collect();
    labels.extend((1..=s.ratios.len()).map(|i| format!("f{i}")));
    Frame { symbol: SeifertSymbol::new(s.genus, ratios), labels }
}

/// A frame together with a representation of its fundamental group.
///
/// `q[i]` is the image of the boundary curve of ratio `i`, `surface` lists
/// `x₁, y₁, x₂, y₂, …` and `h` is the image of the regular fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameRep {
    pub frame: Frame,
    pub h: Permutation,
    pub q: Vec<Permutation>,
    pub surface: Vec<Permutation>,
}

impl FrameRep {
    /// `q` may omit the last boundary image, which is then derived from the
    /// product relation; an empty `surface` means identity images.
    pub fn new(
        frame: Frame,
        h: Permutation,
        mut q: Vec<Permutation>,
        mut surface: Vec<Permutation>,
    ) -> Result<Self, LiftError> {
        let n = h.degree();
        let t = frame.boundary_count();
        let two_g = 2 * frame.genus() as usize;
        if surface.is_empty() {
            surface = vec![Permutation::identity(n); two_g];
        }
        if surface.len() != two_g {
            return Err(LiftError::SurfaceCount { expected: two_g, got: surface.len() });
        }
        for p in q.iter().chain(&surface) {
            if p.degree() != n {
                return Err(AlgebraError::DegreeMismatch { left: n, right: p.degree() }.into());
            }
        }
        if q.len() + 1 == t {
            let partial = word_product(n, &q)?;
            let surf = surface_product(n, &surface)?;
            q.push(partial.inverse().then(&surf)?);
        }
        if q.len() != t {
            return Err(LiftError::BoundaryCount { expected: t, got: q.len() });
        }
        Ok(FrameRep { frame, h, q, surface })
    }

    pub fn degree(&self) -> usize {
        self.h.degree()
    }

    /// Boundary images, surface images and the fiber image.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens = self.q.clone();
        gens.extend(self.surface.iter().cloned());
        gens.push(self.h.clone());
        gens
    }

    /// `ω(m_i) = ω(q_i)^α ω(h)^β`.
    pub fn meridian_image(&self, i: usize) -> Permutation {
        let r = self.frame.ratio(i);
        let a = self.q[i].pow(r.alpha);
        let b = self.h.pow(r.beta);
        a.then(&b).expect("images share a degree")
    }

    /// The same representation after renumbering the sheets by `pi`.
    pub fn relabel(&self, pi: &Permutation) -> Result<FrameRep, LiftError> {
        let conj = |p: &Permutation| p.relabel(pi);
        Ok(FrameRep {
            frame: self.frame.clone(),
            h: conj(&self.h)?,
            q: self.q.iter().map(conj).collect::<Result<_, _>>()?,
            surface: self.surface.iter().map(conj).collect::<Result<_, _>>()?,
        })
    }
}

fn surface_product(n: usize, surface: &[Permutation]) -> Result<Permutation, AlgebraError> {
    let comms = surface
        .chunks(2)
        .map(|xy| commutator(&xy[0], &xy[1]))
        .collect::<Result<Vec<_>, _>>()?;
    word_product(n, &comms)
}

/// A violated condition of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Degree { generator: String, expected: usize, got: usize },
    NotCentral { generator: String },
    ProductRelation,
    NotTransitive { orbits: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Degree { generator, expected, got } => {
                write!(f, "{generator} has degree {got}, expected {expected}")
            }
            Violation::NotCentral { generator } => write!(f, "h does not commute with {generator}"),
            Violation::ProductRelation => write!(f, "boundary product differs from the surface commutators"),
            Violation::NotTransitive { orbits } => write!(f, "image group has {orbits} orbits"),
        }
    }
}

/// Whether the meridian of a marked fiber acts trivially.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeridianStatus {
    pub label: String,
    pub image: Permutation,
    pub branched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub meridians: Vec<MeridianStatus>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_representation(r: &FrameRep) -> ValidationReport {
    let n = r.degree();
    let names: Vec<String> = (0..r.q.len())
        .map(|i| format!("q[{}]", r.frame.label(i)))
        .chain((0..r.surface.len()).map(|j| format!("{}{}", if j % 2 == 0 { "x" } else { "y" }, j / 2 + 1)))
        .collect();
    let images: Vec<&Permutation> = r.q.iter().chain(&r.surface).collect();
    let mut violations = Vec::new();
    for (name, p) in names.iter().zip(&images) {
        if p.degree() != n {
            violations.push(Violation::Degree { generator: name.clone(), expected: n, got: p.degree() });
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations, meridians: Vec::new() };
    }
    for (name, p) in names.iter().zip(&images) {
        if !r.h.commutes_with(p) {
            violations.push(Violation::NotCentral { generator: name.clone() });
        }
    }
    let lhs = word_product(n, &r.q).expect("degrees checked");
    let rhs = surface_product(n, &r.surface).expect("degrees checked");
    if lhs != rhs {
        violations.push(Violation::ProductRelation);
    }
    let orbits = orbits_of_degree(n, &r.generators()).expect("degrees checked");
    if !orbits.transitive {
        violations.push(Violation::NotTransitive { orbits: orbits.orbits.len() });
    }
    let meridians = (0..r.q.len())
        .map(|i| {
            let image = r.meridian_image(i);
            MeridianStatus { label: r.frame.label(i).to_string(), branched: !image.is_identity(), image }
        })
        .collect();
    ValidationReport { violations, meridians }
}

/// Lift of a marked fiber `β/α` along a boundary cycle of length `d` when
/// `ω(h) = (1)`.
///
/// With `e = gcd(d, α)` the lifted ratio is `(dβ/e) / (α/e)`; the fiber is
/// branched iff `d ∤ α`.
pub fn lift_fiber(ratio: FiberRatio, d: usize) -> (FiberRatio, bool) {
    let d = d as i64;
    let e = d.gcd(&ratio.alpha);
    let lifted = FiberRatio::reduced(d * ratio.beta / e, ratio.alpha / e);
    (lifted, ratio.alpha % d != 0)
}

/// One marked fiber of the cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedFiber {
    pub source_label: String,
    /// Index of the source ratio in the base frame.
    pub boundary: usize,
    /// 1-based index among the lifts of the same source fiber.
    pub cycle_index: usize,
    /// Number of sheets over the source boundary torus that meet this lift.
    pub cycle_length: usize,
    pub points: Vec<usize>,
    #[serde(with = "ratio_pair")]
    pub ratio: FiberRatio,
    pub branched: bool,
    pub new_label: String,
}

/// A computed cover: its symbol and the inventory of lifted marked fibers,
/// in the order of the symbol's ratios.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    pub cover_symbol: SeifertSymbol,
    pub cover_genus: u32,
    pub fiber_inventory: Vec<LiftedFiber>,
    pub degree: usize,
    /// Degree of the induced map of base surfaces.
    pub base_degree: usize,
    /// Degree on a regular fiber.
    pub fiber_degree: usize,
}

impl CoverResult {
    /// The cover as a frame labelled by the new fiber labels.
    pub fn cover_frame(&self) -> Frame {
        Frame {
            symbol: self.cover_symbol.clone(),
            labels: self.fiber_inventory.iter().map(|l| l.new_label.clone()).collect(),
        }
    }

    /// Lifts of the fiber labelled `source`.
    pub fn lifts_of<'a>(&'a self, source: &'a str) -> impl Iterator<Item = &'a LiftedFiber> + 'a {
        self.fiber_inventory.iter().filter(move |l| l.source_label == source)
    }

    pub fn euler_number(&self) -> BigRational {
        self.cover_symbol.euler_number()
    }

    fn from_inventory(genus: u32, inventory: Vec<LiftedFiber>, n: usize, m: usize, f: usize) -> Self {
        let cover_symbol = SeifertSymbol::new(genus, inventory.iter().map(|l| l.ratio).collect());
        CoverResult { cover_symbol, cover_genus: genus, fiber_inventory: inventory, degree: n, base_degree: m, fiber_degree: f }
    }
}

fn ensure_valid(r: &FrameRep) -> Result<(), LiftError> {
    let report = validate_representation(r);
    if report.is_valid() {
        Ok(())
    } else {
        Err(LiftError::Invalid(report.violations))
    }
}

/// Cover of a representation with `ω(h) = (1)`.
///
/// Each cycle of each `ω(q_i)`, fixed points included, gives one marked
/// fiber. Per boundary the fixed points come first, then the other cycles
/// by smallest point.
pub fn lift_cover_trivial_h(r: &FrameRep) -> Result<CoverResult, LiftError> {
    ensure_valid(r)?;
    if !r.h.is_identity() {
        return Err(LiftError::Inconsistent("fiber image is not the identity".into()));
    }
    let n = r.degree();
    let mut inventory = Vec::new();
    let mut ramification: i64 = 0;
    for (i, q) in r.q.iter().enumerate() {
        let ratio = r.frame.ratio(i);
        let mut cycles = q.cycles_with_fixed_points();
        cycles.sort_by_key(|c| (c.len() > 1, c[0]));
        for (k, cycle) in cycles.into_iter().enumerate() {
            let d = cycle.len();
            ramification += d as i64 - 1;
            let (lifted, branched) = lift_fiber(ratio, d);
            let mut points = cycle;
            points.sort_unstable();
            inventory.push(LiftedFiber {
                source_label: r.frame.label(i).to_string(),
                boundary: i,
                cycle_index: k + 1,
                cycle_length: d,
                points,
                ratio: lifted,
                branched,
                new_label: format!("{}.{}", r.frame.label(i), k + 1),
            });
        }
    }
    let twice = 2 - n as i64 * (2 - 2 * r.frame.genus() as i64) + ramification;
    if twice < 0 || twice % 2 != 0 {
        return Err(LiftError::Inconsistent(format!("genus formula gives {twice}/2")));
    }
    Ok(CoverResult::from_inventory((twice / 2) as u32, inventory, n, n, 1))
}

/// Exponent `k` with `p = ε^k`, if any.
fn epsilon_power(p: &Permutation) -> Option<usize> {
    let n = p.degree();
    let k = p.apply(1) - 1;
    (0..n).all(|x| p.apply(x + 1) - 1 == (x + k) % n).then_some(k)
}

/// Cover of a representation with `ω(h) = ε^s`, `gcd(n, s) = 1`, and
/// `ω(q_i) = ε^{r_i}`.
///
/// The exponents are taken in `[0, n)` and the last one is shifted so that
/// `Σ r_i = 0`. With `s*` the inverse of `s` modulo `n`, fiber `i` lifts to
/// `B_i/A_i` where `d_i = gcd(n, β_i + s* r_i α_i)`, `A_i = nα_i/d_i` and
/// `B_i = (β_i + s* r_i α_i)/d_i`.
pub fn lift_cover_cyclic(r: &FrameRep, s: i64) -> Result<CoverResult, LiftError> {
    ensure_valid(r)?;
    let n = r.degree();
    let ni = n as i64;
    if s.gcd(&ni) != 1 {
        return Err(LiftError::NotCoprime { n, s });
    }
    if r.h != Permutation::standard_cycle(n).pow(s) {
        return Err(LiftError::NotCyclic(format!("h is not ε^{s}")));
    }
    let mut exps = Vec::with_capacity(r.q.len());
    for (i, q) in r.q.iter().enumerate() {
        let k = epsilon_power(q)
            .ok_or_else(|| LiftError::NotCyclic(format!("q[{}] is not a power of ε", r.frame.label(i))))?;
        exps.push(k as i64);
    }
    let total: i64 = exps.iter().sum();
    if total % ni != 0 {
        return Err(LiftError::Inconsistent(format!("boundary exponents sum to {total}, not 0 mod {n}")));
    }
    *exps.last_mut().expect("frames have a boundary") -= total;
    let s_star = mod_inverse(s, ni)?;
    lift_cyclic_with_exponents(&r.frame, n, s_star, &exps, |i| r.meridian_image(i))
}

fn lift_cyclic_with_exponents(
    frame: &Frame,
    n: usize,
    s_star: i64,
    exps: &[i64],
    meridian: impl Fn(usize) -> Permutation,
) -> Result<CoverResult, LiftError> {
    let ni = n as i128;
    let mut inventory = Vec::with_capacity(exps.len());
    for (i, &ri) in exps.iter().enumerate() {
        let ratio = frame.ratio(i);
        let num = ratio.beta as i128 + s_star as i128 * ri as i128 * ratio.alpha as i128;
        let d = ni.gcd(&num);
        let a = ni * ratio.alpha as i128 / d;
        let b = num / d;
        let (a, b) = match (i64::try_from(a), i64::try_from(b)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(SymbolError::Overflow.into()),
        };
        inventory.push(LiftedFiber {
            source_label: frame.label(i).to_string(),
            boundary: i,
            cycle_index: 1,
            cycle_length: n,
            points: (1..=n).collect(),
            ratio: FiberRatio::new(b, a)?,
            branched: !meridian(i).is_identity(),
            new_label: format!("{}.1", frame.label(i)),
        });
    }
    Ok(CoverResult::from_inventory(frame.genus(), inventory, n, 1, n))
}

/// Factorisation of a representation through the orbits of `ω(h)`.
#[derive(Debug, Clone)]
pub struct Factorization {
    /// Representation on the `m` orbits of `ω(h)`, with trivial fiber image.
    pub quotient: FrameRep,
    pub blocks: BlockQuotient,
    /// Points of the first orbit in the cyclic order of `ω(h)`, starting at 1.
    pub first_block_order: Vec<usize>,
}

impl Factorization {
    pub fn base_degree(&self) -> usize {
        self.blocks.block_count()
    }

    pub fn fiber_degree(&self) -> usize {
        self.blocks.block_size()
    }

    /// The residual cyclic step over the intermediate cover `N`, given the
    /// lift of the quotient representation.
    ///
    /// Over the lift of a block cycle of `ω(q_i)` of length `d` through
    /// block `B`, the boundary image is the restriction to the first block
    /// of `t_B · ω(q_i)^d · t_B⁻¹`, a power of the restricted fiber image.
    pub fn residual(&self, rep: &FrameRep, intermediate: &CoverResult) -> Result<FrameRep, LiftError> {
        let f = self.fiber_degree();
        let mut q = Vec::with_capacity(intermediate.fiber_inventory.len());
        for lf in &intermediate.fiber_inventory {
            let block = lf.points[0] - 1;
            let g = rep.q[lf.boundary].pow(lf.cycle_length as i64);
            let t = &self.blocks.transversal[block];
            let conj = t.then(&g)?.then(&t.inverse())?;
            let restricted = conj
                .restrict(&self.first_block_order)
                .ok_or_else(|| LiftError::Inconsistent("transported boundary moves the first block".into()))?;
            if epsilon_power(&restricted).is_none() {
                return Err(LiftError::Inconsistent("transported boundary is not a power of ε".into()));
            }
            q.push(restricted);
        }
        let frame = intermediate.cover_frame();
        let surface = vec![Permutation::identity(f); 2 * frame.genus() as usize];
        FrameRep::new(frame, Permutation::standard_cycle(f), q, surface)
    }
}

/// Splits a representation into the action on the orbits of `ω(h)`,
/// where the fiber acts trivially, and a residual cyclic step.
pub fn factor_covering(r: &FrameRep) -> Result<Factorization, LiftError> {
    ensure_valid(r)?;
    let gens = r.generators();
    let bq = block_quotient(&gens, std::slice::from_ref(&r.h))?;
    let f = bq.block_size();
    if bq.blocks.iter().any(|b| b.len() != f) {
        return Err(LiftError::NonSemiregular);
    }
    let m = bq.block_count();
    let t = r.q.len();
    let quotient = FrameRep::new(
        r.frame.clone(),
        Permutation::identity(m),
        bq.quotient[..t].to_vec(),
        bq.quotient[t..gens.len() - 1].to_vec(),
    )?;
    let mut order = Vec::with_capacity(f);
    let mut x = 1;
    for _ in 0..f {
        order.push(x);
        x = r.h.apply(x);
    }
    if x != 1 {
        return Err(LiftError::NonSemiregular);
    }
    Ok(Factorization { quotient, blocks: bq, first_block_order: order })
}

/// Cover of any supported representation.
///
/// Dispatches to [`lift_cover_trivial_h`] when `ω(h) = (1)`, to
/// [`lift_cover_cyclic`] when the representation already has the cyclic
/// shape, and otherwise composes the two through [`factor_covering`].
pub fn lift_cover(r: &FrameRep) -> Result<CoverResult, LiftError> {
    ensure_valid(r)?;
    if r.h.is_identity() {
        return lift_cover_trivial_h(r);
    }
    if let Some(s) = epsilon_power(&r.h).filter(|&s| s.gcd(&r.degree()) == 1) {
        if r.q.iter().chain(&r.surface).all(|q| epsilon_power(q).is_some()) {
            return lift_cover_cyclic(r, s as i64);
        }
    }
    lift_cover_factored(r)
}

fn lift_cover_factored(r: &FrameRep) -> Result<CoverResult, LiftError> {
    let fac = factor_covering(r)?;
    let intermediate = lift_cover_trivial_h(&fac.quotient)?;
    let residual = fac.residual(r, &intermediate)?;
    let top = lift_cover_cyclic(&residual, 1)?;
    let (m, f) = (fac.base_degree(), fac.fiber_degree());

    let mut inventory = Vec::with_capacity(top.fiber_inventory.len());
    for (mid, up) in intermediate.fiber_inventory.iter().zip(&top.fiber_inventory) {
        let points: Vec<usize> = {
            let mut p: Vec<usize> = mid.points.iter().flat_map(|&b| fac.blocks.blocks[b - 1].iter().copied()).collect();
            p.sort_unstable();
            p
        };
        let meridian = r.meridian_image(mid.boundary);
        let branched = points.iter().any(|&x| meridian.apply(x) != x);
        inventory.push(LiftedFiber {
            source_label: mid.source_label.clone(),
            boundary: mid.boundary,
            cycle_index: mid.cycle_index,
            cycle_length: points.len(),
            points,
            ratio: up.ratio,
            branched,
            new_label: mid.new_label.clone(),
        });
    }
    Ok(CoverResult::from_inventory(top.cover_genus, inventory, r.degree(), m, f))
}

/// `e(cover) = (m/f)·e(base)` with the base and fiber degrees of `result`.
pub fn check_euler_multiplicativity(base: &SeifertSymbol, result: &CoverResult) -> bool {
    let factor = BigRational::new(BigInt::from(result.base_degree), BigInt::from(result.fiber_degree));
    result.euler_number() == factor * base.euler_number()
}

mod ratio_pair {
    use super::*;

    pub fn serialize<S: Serializer>(r: &FiberRatio, s: S) -> Result<S::Ok, S::Error> {
        (r.beta, r.alpha).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<FiberRatio, D::Error> {
        let (beta, alpha) = <(i64, i64)>::deserialize(d)?;
        FiberRatio::new(beta, alpha).map_err(serde::de::Error::custom)
    }
}

// JSON forms

#[derive(Serialize, Deserialize)]
struct FrameRepr {
    class: String,
    genus: u32,
    ratios: Vec<(i64, i64)>,
    labels: Vec<String>,
}

impl Serialize for Frame {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FrameRepr {
            class: "Oo".into(),
            genus: self.symbol.genus,
            ratios: self.symbol.ratios.iter().map(|r| (r.beta, r.alpha)).collect(),
            labels: self.labels.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Frame {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FrameRepr::deserialize(deserializer)?;
        if repr.class != "Oo" {
            return Err(serde::de::Error::custom(SymbolError::UnsupportedClass(repr.class)));
        }
        let symbol = SeifertSymbol::from_pairs(repr.genus, &repr.ratios).map_err(serde::de::Error::custom)?;
        Frame::new(symbol, repr.labels).map_err(serde::de::Error::custom)
    }
}

/// A permutation in a representation file: a full `{"n", "cycles"}` object
/// or a bare cycle list whose degree is the representation's `n`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PermSpec {
    Full { n: usize, cycles: Vec<Vec<usize>> },
    Cycles(Vec<Vec<usize>>),
}

impl PermSpec {
    fn build(self, n: usize) -> Result<Permutation, LiftError> {
        match self {
            PermSpec::Full { n: m, cycles } => {
                if m != n {
                    return Err(AlgebraError::DegreeMismatch { left: n, right: m }.into());
                }
                Ok(Permutation::from_cycles(n, &cycles)?)
            }
            PermSpec::Cycles(cycles) => Ok(Permutation::from_cycles(n, &cycles)?),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FrameRepRepr {
    frame: Frame,
    n: usize,
    h: PermSpec,
    q: Vec<PermSpec>,
    #[serde(default)]
    surface: Vec<PermSpec>,
}

impl Serialize for FrameRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let full = |p: &Permutation| PermSpec::Full { n: p.degree(), cycles: p.cycles() };
        FrameRepRepr {
            frame: self.frame.clone(),
            n: self.degree(),
            h: full(&self.h),
            q: self.q.iter().map(full).collect(),
            surface: self.surface.iter().map(full).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FrameRep {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FrameRepRepr::deserialize(deserializer)?;
        let n = repr.n;
        let err = |e: LiftError| serde::de::Error::custom(e);
        if n == 0 {
            return Err(err(AlgebraError::ZeroDegree.into()));
        }
        let h = repr.h.build(n).map_err(err)?;
        let q = repr.q.into_iter().map(|p| p.build(n)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let surface = repr.surface.into_iter().map(|p| p.build(n)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        FrameRep::new(repr.frame, h, q, surface).map_err(err)
    }
}

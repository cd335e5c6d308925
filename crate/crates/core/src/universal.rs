//! Covering towers realising every Euler number zero manifold as a branched
//! cover of `(S²×S¹, t_{α,β})` for `α ≥ 3`, and an independent verifier.
//!
//! A [`CoveringPlan`] lists its steps top first. Each [`PlanStep`] holds a
//! representation over a frame whose fiber labels name fibers of the cover
//! produced by the step below; the bottom frame is
//! `t: 0/1, x1: β/α, x2: −β/α`. Fibers of the cover of the `i`-th step from
//! the bottom (1-based) are labelled `s{i}.{boundary}.{cycle}`.
//!
//! Frames above the bottom list exactly the fibers lying over the knot, in
//! the inventory order of the cover below. A frame may change the ratio of
//! an ordinary fiber and may change `β` of an exceptional fiber by a
//! multiple of `α`, as long as its canonical form equals that of the cover
//! below.

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{mod_inverse, AlgebraError, Permutation};
use crate::lift::{
    check_euler_multiplicativity, lift_cover, validate_representation, CoverResult, Frame, FrameRep, LiftError,
};
use crate::symbol::{FiberRatio, SeifertSymbol, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("knot parameters need gcd(alpha, beta) = 1 and 0 <= beta <= alpha/2, got ({alpha}, {beta})")]
    BadKnot { alpha: i64, beta: i64 },
    #[error("the construction needs alpha >= 3, got {0}")]
    AlphaTooSmall(i64),
    #[error("target {0} has non-zero Euler number")]
    NonZeroEuler(String),
    #[error("need {need} fibers over the knot, the tower provides {have}")]
    InsufficientFibers { need: usize, have: usize },
    #[error("{0} is not a valid ratio for this step")]
    BadRatio(String),
    #[error("planner invariant broken: {0}")]
    Planner(String),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// The `2α`-fold cover of `(S²×S¹, t_{α,β})` by `(Oo,0;)`.
    Doubled,
    /// Cyclic cover of `(Oo,0;)` branched over two knot fibers.
    CyclicPair,
    /// Double cover of `(Oo,0;)` branched over `2g+2` knot fibers.
    DoubleCover,
    /// Cyclic cover of `(Oo,g;)` with fiber image `ε^{b*}`.
    Twisted,
    /// Cyclic cover that adds one exceptional fiber.
    AddFiber,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanStep {
    pub kind: StepKind,
    pub rep: FrameRep,
    pub base: SeifertSymbol,
    pub expected_cover: SeifertSymbol,
    /// Frame labels whose meridian acts non-trivially.
    pub branch_labels: Vec<String>,
    /// Labels of cover fibers lying over the knot.
    pub knot_preimage_labels: Vec<String>,
}

impl PlanStep {
    pub fn degree(&self) -> usize {
        self.rep.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringPlan {
    pub target: SeifertSymbol,
    pub alpha: i64,
    pub beta: i64,
    /// Top step first.
    pub steps: Vec<PlanStep>,
    pub total_degree: u64,
}

impl CoveringPlan {
    pub fn knot_preimage_count(&self) -> usize {
        self.steps.first().map_or(1, |s| s.knot_preimage_labels.len())
    }
}

/// Label of a cover fiber of the `index`-th step from the bottom.
pub fn fiber_label(index: usize, boundary: usize, cycle: usize) -> String {
    format!("s{index}.{}.{cycle}", boundary + 1)
}

/// Lifts a step and renames the cover fibers by [`fiber_label`].
pub fn lift_step(rep: &FrameRep, index: usize) -> Result<CoverResult, LiftError> {
    let mut c = lift_cover(rep)?;
    for l in &mut c.fiber_inventory {
        l.new_label = fiber_label(index, l.boundary, l.cycle_index);
    }
    Ok(c)
}

fn check_knot(alpha: i64, beta: i64) -> Result<(), UniversalError> {
    if alpha < 1 || beta < 0 || 2 * beta > alpha || alpha.gcd(&beta) != 1 {
        return Err(UniversalError::BadKnot { alpha, beta });
    }
    Ok(())
}

fn knot_frame(alpha: i64, beta: i64) -> Result<Frame, UniversalError> {
    let symbol = SeifertSymbol::from_pairs(0, &[(0, 1), (beta, alpha), (-beta, alpha)])?;
    Ok(Frame::new(symbol, vec!["t".into(), "x1".into(), "x2".into()])?)
}

/// Tower under construction, bottom step first.
struct Tower {
    steps: Vec<PlanStep>,
    top: CoverResult,
}

impl Tower {
    fn knot_labels(&self) -> &[String] {
        &self.steps.last().expect("tower has a step").knot_preimage_labels
    }

    fn into_steps(self) -> Vec<PlanStep> {
        let mut steps = self.steps;
        steps.reverse();
        steps
    }

    /// Frame over the current top listing its knot fibers; `overrides`
    /// replaces ratios by label, other ordinary fibers become `0/1`.
    fn knot_frame(&self, overrides: &HashMap<String, FiberRatio>) -> Result<Frame, UniversalError> {
        let knots: HashSet<&str> = self.knot_labels().iter().map(String::as_str).collect();
        let mut ratios = Vec::new();
        let mut labels = Vec::new();
        for l in self.top.fiber_inventory.iter().filter(|l| knots.contains(l.new_label.as_str())) {
            let r = match overrides.get(&l.new_label) {
                Some(&r) => r,
                None if l.ratio.alpha == 1 => FiberRatio::zero(),
                None => l.ratio,
            };
            ratios.push(r);
            labels.push(l.new_label.clone());
        }
        Ok(Frame::new(SeifertSymbol::new(self.top.cover_genus, ratios), labels)?)
    }

    /// Lifts `rep` as the next step and records it.
    fn push(&mut self, kind: StepKind, rep: FrameRep, expected_cover: SeifertSymbol) -> Result<(), UniversalError> {
        let index = self.steps.len() + 1;
        let knots: HashSet<String> = self.knot_labels().iter().cloned().collect();
        let step = make_step(kind, rep, expected_cover, index, &|l| knots.contains(l))?;
        self.top = lift_step(&step.rep, index)?;
        self.steps.push(step);
        Ok(())
    }
}

fn make_step(
    kind: StepKind,
    rep: FrameRep,
    expected_cover: SeifertSymbol,
    index: usize,
    is_knot: &dyn Fn(&str) -> bool,
) -> Result<PlanStep, UniversalError> {
    let cover = lift_step(&rep, index)?;
    if !cover.cover_symbol.equivalent(&expected_cover) {
        return Err(UniversalError::Planner(format!(
            "step {index}: cover {} differs from expected {}",
            cover.cover_symbol, expected_cover
        )));
    }
    let branch_labels: Vec<String> = validate_representation(&rep)
        .meridians
        .into_iter()
        .filter(|m| m.branched)
        .map(|m| m.label)
        .collect();
    if let Some(bad) = branch_labels.iter().find(|l| !is_knot(l)) {
        return Err(UniversalError::Planner(format!("step {index} branches over {bad}, which is not over the knot")));
    }
    let knot_preimage_labels = cover
        .fiber_inventory
        .iter()
        .filter(|l| is_knot(&l.source_label))
        .map(|l| l.new_label.clone())
        .collect();
    Ok(PlanStep { kind, base: rep.frame.symbol().clone(), rep, expected_cover, branch_labels, knot_preimage_labels })
}

fn doubled_rep(alpha: i64, beta: i64) -> Result<FrameRep, UniversalError> {
    let a = alpha as usize;
    let n = 2 * a;
    let q0 = Permutation::from_cycles(n, &[vec![a - 1, 2 * a - 1], vec![a, 2 * a]])?;
    let mut c1: Vec<usize> = (1..a).collect();
    c1.push(2 * a);
    let q1 = Permutation::from_cycles(n, &[c1, (a..2 * a).collect()])?;
    let q2 = Permutation::from_cycles(n, &[(a + 1..=2 * a).rev().collect::<Vec<_>>(), (1..=a).rev().collect()])?;
    Ok(FrameRep::new(knot_frame(alpha, beta)?, Permutation::identity(n), vec![q0, q1, q2], vec![])?)
}

fn tower_doubled(alpha: i64, beta: i64) -> Result<Tower, UniversalError> {
    check_knot(alpha, beta)?;
    if alpha < 2 {
        return Err(UniversalError::AlphaTooSmall(alpha));
    }
    let rep = doubled_rep(alpha, beta)?;
    let expected = SeifertSymbol::from_pairs(0, &[(beta, 1), (beta, 1), (-beta, 1), (-beta, 1)])?;
    let step = make_step(StepKind::Doubled, rep, expected, 1, &|l| l == "t")?;
    let top = lift_step(&step.rep, 1)?;
    Ok(Tower { steps: vec![step], top })
}

fn push_cyclic_pair(tower: &mut Tower, k: usize) -> Result<(), UniversalError> {
    let frame = tower.knot_frame(&HashMap::new())?;
    let t = frame.boundary_count();
    if t < 3 {
        return Err(UniversalError::InsufficientFibers { need: 3, have: t });
    }
    let e = Permutation::standard_cycle(k);
    let mut q = vec![Permutation::identity(k); t];
    q[0] = e.clone();
    q[1] = e.inverse();
    let expected = vec![FiberRatio::zero(); 2 + k * (t - 2)];
    let rep = FrameRep::new(frame, Permutation::identity(k), q, vec![])?;
    tower.push(StepKind::CyclicPair, rep, SeifertSymbol::new(0, expected))
}

fn push_double_cover(tower: &mut Tower, g: u32) -> Result<(), UniversalError> {
    let frame = tower.knot_frame(&HashMap::new())?;
    let t = frame.boundary_count();
    let need = 2 * g as usize + 2;
    if t < need {
        return Err(UniversalError::InsufficientFibers { need, have: t });
    }
    let swap = Permutation::from_cycles(2, &[[1usize, 2]])?;
    let mut q = vec![Permutation::identity(2); t];
    for qi in q.iter_mut().take(need) {
        *qi = swap.clone();
    }
    let expected = SeifertSymbol::new(g, vec![FiberRatio::zero(); 2 * t - need]);
    let rep = FrameRep::new(frame, Permutation::identity(2), q, vec![])?;
    tower.push(StepKind::DoubleCover, rep, expected)
}

fn push_twisted(tower: &mut Tower, ratio: FiberRatio) -> Result<(), UniversalError> {
    let (a, b) = (ratio.alpha, ratio.beta);
    let labels = tower.knot_labels().to_vec();
    if labels.len() < 4 {
        return Err(UniversalError::InsufficientFibers { need: 4, have: labels.len() });
    }
    let overrides = HashMap::from([
        (labels[2].clone(), FiberRatio::new(b, 1)?),
        (labels[3].clone(), FiberRatio::new(-b, 1)?),
    ]);
    let frame = tower.knot_frame(&overrides)?;
    let n = a as usize;
    let e = Permutation::standard_cycle(n);
    let b_star = mod_inverse(b, a)?;
    let mut q = vec![Permutation::identity(n); frame.boundary_count()];
    q[0] = e.inverse();
    q[1] = e.clone();
    q[2] = e.inverse();
    q[3] = e.clone();
    let mut expected = vec![FiberRatio::new(-b, a)?, FiberRatio::new(b, a)?];
    expected.resize(frame.boundary_count(), FiberRatio::zero());
    let g = frame.genus();
    let rep = FrameRep::new(frame, e.pow(b_star), q, vec![])?;
    tower.push(StepKind::Twisted, rep, SeifertSymbol::new(g, expected))
}

/// Knot-fiber counts after the doubled step, the cyclic pair step of degree
/// `k` and the double cover of genus `g`.
fn knots_after_double_cover(alpha: i64, k: usize, g: u32) -> (usize, usize) {
    let k2 = 2 + k * (2 * alpha as usize - 4);
    (k2, (2 * k2).saturating_sub(2 * g as usize + 2))
}

fn tower_genus(g: u32, alpha: i64, beta: i64, need: usize) -> Result<Tower, UniversalError> {
    if alpha < 3 {
        return Err(UniversalError::AlphaTooSmall(alpha));
    }
    let min = 2 * g as usize + 2;
    let k = (1..)
        .find(|&k| {
            let (k2, k3) = knots_after_double_cover(alpha, k, g);
            k2 >= min && k3 >= need
        })
        .expect("knot count grows with the degree");
    let mut tower = tower_doubled(alpha, beta)?;
    push_cyclic_pair(&mut tower, k)?;
    push_double_cover(&mut tower, g)?;
    Ok(tower)
}

/// The bottom step: the `2α`-fold cover of `(S²×S¹, t_{α,β})` by `(Oo,0;)`.
///
/// Also accepts `α = 2`, outside the range of the construction.
pub fn build_lemma41(alpha: i64, beta: i64) -> Result<PlanStep, UniversalError> {
    let tower = tower_doubled(alpha, beta)?;
    Ok(tower.into_steps().remove(0))
}

/// The doubled step followed by a degree-`k` cyclic cover of `(Oo,0;)` with
/// trivial fiber image, branched over the first two knot fibers.
pub fn build_lemma42(alpha: i64, beta: i64, k: usize) -> Result<Vec<PlanStep>, UniversalError> {
    check_knot(alpha, beta)?;
    if alpha < 3 {
        return Err(UniversalError::AlphaTooSmall(alpha));
    }
    if k == 0 {
        return Err(UniversalError::InsufficientFibers { need: 1, have: 0 });
    }
    let mut tower = tower_doubled(alpha, beta)?;
    push_cyclic_pair(&mut tower, k)?;
    Ok(tower.into_steps())
}

/// Tower ending in `(Oo,g;)` with at least `k ≥ 2g+2` fibers over the knot.
pub fn build_lemma43(g: u32, alpha: i64, beta: i64, k: usize) -> Result<Vec<PlanStep>, UniversalError> {
    check_knot(alpha, beta)?;
    let min = 2 * g as usize + 2;
    if k < min {
        return Err(UniversalError::InsufficientFibers { need: min, have: k });
    }
    Ok(tower_genus(g, alpha, beta, k)?.into_steps())
}

/// Tower ending in `(Oo,g; b/a, −b/a)` plus `0/1` fibers, all over the knot,
/// with at least `k` fibers over the knot.
pub fn build_lemma44(g: u32, ratio: FiberRatio, alpha: i64, beta: i64, k: usize) -> Result<Vec<PlanStep>, UniversalError> {
    check_knot(alpha, beta)?;
    let mut tower = tower_genus(g, alpha, beta, k.max(4).max(2 * g as usize + 2))?;
    push_twisted(&mut tower, ratio)?;
    Ok(tower.into_steps())
}

/// Tower whose top is canonically `target`, with every exceptional fiber
/// and at least `extra` ordinary fibers lying over the knot.
fn plan_tower(target: &SeifertSymbol, alpha: i64, beta: i64, extra: usize) -> Result<Tower, UniversalError> {
    let c = target.canonicalize();
    let g = c.genus;
    match c.exceptional.len() {
        0 => tower_genus(g, alpha, beta, extra.max(2 * g as usize + 2)),
        2 if c.b == -1 && c.exceptional[0].alpha == c.exceptional[1].alpha => {
            let mut tower = tower_genus(g, alpha, beta, (extra + 2).max(4).max(2 * g as usize + 2))?;
            push_twisted(&mut tower, c.exceptional[0])?;
            Ok(tower)
        }
        t if t >= 3 => {
            let mut ratios = c.exceptional.clone();
            ratios[0] = FiberRatio { alpha: ratios[0].alpha, beta: ratios[0].beta + c.b * ratios[0].alpha };
            let last = ratios.pop().expect("at least three ratios");
            let (u, v) = (last.beta, last.alpha);
            let reduced: Vec<FiberRatio> = ratios.iter().map(|r| FiberRatio::reduced(v * r.beta, r.alpha)).collect();
            let ordinary = reduced.iter().filter(|r| r.alpha == 1).count();
            let mut base_ratios = vec![FiberRatio::new(u, 1)?];
            base_ratios.extend(reduced.iter().copied());
            let base = SeifertSymbol::new(g, base_ratios);
            let mut tower = plan_tower(&base, alpha, beta, extra + 1 + ordinary)?;
            push_add_fiber(&mut tower, FiberRatio::new(u, 1)?, &ratios, &reduced, v)?;
            Ok(tower)
        }
        _ => Err(UniversalError::NonZeroEuler(target.to_string())),
    }
}

/// Adds the degree-`v` step with `ω(h) = ε` and trivial boundary images
/// over `(Oo,g; u/1, b_i/a_i, 0/1, …)`.
fn push_add_fiber(
    tower: &mut Tower,
    u: FiberRatio,
    lifted: &[FiberRatio],
    base: &[FiberRatio],
    v: i64,
) -> Result<(), UniversalError> {
    let knots: HashSet<&str> = tower.knot_labels().iter().map(String::as_str).collect();
    let mut free: Vec<(String, FiberRatio)> = tower
        .top
        .fiber_inventory
        .iter()
        .filter(|l| knots.contains(l.new_label.as_str()))
        .map(|l| (l.new_label.clone(), l.ratio))
        .collect();
    let mut overrides = HashMap::new();
    let mut expected_of = HashMap::new();
    let mut take = |want: FiberRatio, up: FiberRatio| -> Result<(), UniversalError> {
        let pos = free
            .iter()
            .position(|(_, r)| r.alpha == want.alpha && (r.beta - want.beta) % want.alpha == 0)
            .ok_or_else(|| UniversalError::Planner(format!("no knot fiber available for {want}")))?;
        let (label, _) = free.remove(pos);
        overrides.insert(label.clone(), want);
        expected_of.insert(label, up);
        Ok(())
    };
    // exceptional fibers first so integral ratios do not take their places
    let mut order: Vec<usize> = (0..base.len()).collect();
    order.sort_by_key(|&i| base[i].alpha == 1);
    for i in order {
        take(base[i], lifted[i])?;
    }
    take(u, FiberRatio::new(u.beta, v)?)?;
    let frame = tower.knot_frame(&overrides)?;
    let expected = SeifertSymbol::new(
        frame.genus(),
        frame.labels().iter().map(|l| expected_of.get(l).copied().unwrap_or(FiberRatio::zero())).collect(),
    );
    let n = v as usize;
    let q = vec![Permutation::identity(n); frame.boundary_count()];
    let rep = FrameRep::new(frame, Permutation::standard_cycle(n), q, vec![])?;
    tower.push(StepKind::AddFiber, rep, expected)
}

/// Covering tower from `target` down to `(S²×S¹, t_{α,β})`.
pub fn plan_theorem45(target: &SeifertSymbol, alpha: i64, beta: i64) -> Result<CoveringPlan, UniversalError> {
    check_knot(alpha, beta)?;
    if alpha < 3 {
        return Err(UniversalError::AlphaTooSmall(alpha));
    }
    if !target.euler_number().is_zero() {
        return Err(UniversalError::NonZeroEuler(target.to_string()));
    }
    let steps = plan_tower(target, alpha, beta, 0)?.into_steps();
    let total_degree = steps.iter().map(|s| s.degree() as u64).product();
    Ok(CoveringPlan { target: target.clone(), alpha, beta, steps, total_degree })
}

/// Outcome of one verifier check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    /// Index into `steps` (top first), or `None` for plan-level checks.
    pub step: Option<usize>,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    /// First failing step, top-first index.
    pub failing_step: Option<usize>,
    pub checks: Vec<Check>,
    pub knot_preimage_count: usize,
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, step: Option<usize>, name: &str, ok: bool, detail: impl Into<String>) -> bool {
        self.0.push(Check { step, name: name.into(), ok, detail: detail.into() });
        ok
    }
}

/// Re-lifts every step and checks the tower from the bottom up.
pub fn verify_plan(plan: &CoveringPlan) -> VerificationReport {
    let mut checks = Checks(Vec::new());
    let len = plan.steps.len();
    let bottom_base = SeifertSymbol::s2xs1(plan.alpha, plan.beta);

    let mut below: Option<CoverResult> = None;
    let mut knots: HashSet<String> = HashSet::from(["t".to_string()]);
    let mut failing_step = None;
    let mut lifted_all = true;
    for (pos, step) in plan.steps.iter().enumerate().rev() {
        let index = len - pos;
        let at = Some(pos);
        let mut ok = true;
        let frame = &step.rep.frame;
        ok &= checks.add(at, "base matches frame", &step.base == frame.symbol(), format!("{}", step.base));
        match &below {
            None => {
                let good = match &bottom_base {
                    Ok(b) => frame.symbol().equivalent(b) && frame.position("t").is_some_and(|i| frame.ratio(i).alpha == 1),
                    Err(_) => false,
                };
                ok &= checks.add(at, "bottom frame is the knot frame", good, format!("{}", frame.symbol()));
            }
            Some(c) => {
                ok &= checks.add(at, "frame fibers exist below", frame_matches(frame, c).is_ok(), frame_matches(frame, c).err().unwrap_or_default());
                ok &= checks.add(
                    at,
                    "frame is canonically the cover below",
                    frame.symbol().equivalent(&c.cover_symbol),
                    format!("{} vs {}", frame.symbol(), c.cover_symbol),
                );
            }
        }
        let cover = match lift_step(&step.rep, index) {
            Ok(c) => c,
            Err(e) => {
                checks.add(at, "lift", false, e.to_string());
                failing_step.get_or_insert(pos);
                lifted_all = false;
                break;
            }
        };
        ok &= checks.add(
            at,
            "cover matches expectation",
            cover.cover_symbol.equivalent(&step.expected_cover),
            format!("{} vs {}", cover.cover_symbol, step.expected_cover),
        );
        ok &= checks.add(at, "euler multiplicativity", check_euler_multiplicativity(frame.symbol(), &cover), "");
        let branched: Vec<String> = validate_representation(&step.rep)
            .meridians
            .into_iter()
            .filter(|m| m.branched)
            .map(|m| m.label)
            .collect();
        ok &= checks.add(at, "branch labels recorded", branched == step.branch_labels, format!("{branched:?}"));
        let stray: Vec<&String> = branched.iter().filter(|l| !knots.contains(*l)).collect();
        ok &= checks.add(at, "branching lies over the knot", stray.is_empty(), format!("{stray:?}"));
        let new_knots: Vec<String> = cover
            .fiber_inventory
            .iter()
            .filter(|l| knots.contains(&l.source_label))
            .map(|l| l.new_label.clone())
            .collect();
        ok &= checks.add(at, "knot preimage recorded", new_knots == step.knot_preimage_labels, format!("{} fibers", new_knots.len()));
        if !ok {
            failing_step.get_or_insert(pos);
        }
        knots = new_knots.into_iter().collect();
        below = Some(cover);
    }

    let knot_preimage_count = knots.len();
    match &below {
        _ if !lifted_all => {}
        Some(top) => {
            checks.add(None, "top is the target", top.cover_symbol.equivalent(&plan.target), format!("{}", top.cover_symbol));
            let exceptional_ok = top.fiber_inventory.iter().filter(|l| l.ratio.alpha > 1).all(|l| knots.contains(&l.new_label));
            checks.add(None, "exceptional fibers lie over the knot", exceptional_ok, "");
        }
        _ => {
            let ok = matches!(&bottom_base, Ok(b) if plan.target.equivalent(b));
            checks.add(None, "empty plan target is the base", ok, format!("{}", plan.target));
        }
    }
    let degree: u64 = plan.steps.iter().map(|s| s.degree() as u64).product();
    checks.add(None, "total degree", degree == plan.total_degree, format!("{degree}"));
    let passed = checks.0.iter().all(|c| c.ok);
    VerificationReport { passed, failing_step, checks: checks.0, knot_preimage_count }
}

/// Every frame fiber is a fiber below with the same `α` and `β` congruent
/// modulo `α`; fibers left out are ordinary.
fn frame_matches(frame: &Frame, below: &CoverResult) -> Result<(), String> {
    let by_label: HashMap<&str, FiberRatio> =
        below.fiber_inventory.iter().map(|l| (l.new_label.as_str(), l.ratio)).collect();
    for (i, label) in frame.labels().iter().enumerate() {
        let r = frame.ratio(i);
        match by_label.get(label.as_str()) {
            None => return Err(format!("{label} is not a fiber of the cover below")),
            Some(b) if b.alpha != r.alpha || (b.beta - r.beta) % r.alpha != 0 => {
                return Err(format!("{label} is {b} below but {r} in the frame"));
            }
            _ => {}
        }
    }
    let used: HashSet<&str> = frame.labels().iter().map(String::as_str).collect();
    if let Some(l) = below.fiber_inventory.iter().find(|l| l.ratio.alpha > 1 && !used.contains(l.new_label.as_str())) {
        return Err(format!("exceptional fiber {} is missing from the frame", l.new_label));
    }
    Ok(())
}

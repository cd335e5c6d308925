use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::AlgebraError;

/// An element of the symmetric group `S_n` acting on `{1, …, n}`.
///
/// The degree is part of the value: composing permutations of different
/// degree is an error rather than an implicit extension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] is the image of point i + 1, minus one
    images: Vec<u32>,
}

/// Cycle type of a permutation: fixed points counted separately, then a
/// multiset of cycle lengths `d ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleProfile {
    pub fixed_points: usize,
    /// `(length, count)` pairs with ascending length.
    pub cycles: Vec<(usize, usize)>,
}

impl CycleProfile {
    pub fn degree(&self) -> usize {
        self.fixed_points + self.cycles.iter().map(|(d, c)| d * c).sum::<usize>()
    }

    /// Number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        self.fixed_points + self.cycles.iter().map(|(_, c)| c).sum::<usize>()
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// The standard `n`-cycle `ε = (1, 2, …, n)`.
    pub fn standard_cycle(n: usize) -> Self {
        Permutation { images: (0..n as u32).map(|i| (i + 1) % n as u32).collect() }
    }

    /// Builds a permutation from its one-line form, 1-indexed.
    pub fn from_images(images: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = images.len();
        if n == 0 {
            return Err(AlgebraError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in &images {
            if x == 0 || x > n {
                return Err(AlgebraError::PointOutOfRange { point: x, n });
            }
            if seen[x - 1] {
                return Err(AlgebraError::NotABijection);
            }
            seen[x - 1] = true;
            out.push((x - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `n` from disjoint cycles, 1-indexed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(AlgebraError::PointOutOfRange { point: x, n });
                }
                if seen[x - 1] {
                    return Err(AlgebraError::RepeatedPoint(x));
                }
                seen[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                images[x - 1] = (y - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-indexed point.
    ///
    /// Panics if `point` is outside `1..=n`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// One-line form, 1-indexed.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `compose(p, q)(i) = p(q(i))`: the right factor acts first.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, AlgebraError> {
        self.check_degree(q)?;
        Ok(Permutation { images: q.images.iter().map(|&x| self.images[x as usize]).collect() })
    }

    /// Applies `self` first and then `next`; this is the product `self·next`
    /// of monodromy images.
    pub fn then(&self, next: &Permutation) -> Result<Permutation, AlgebraError> {
        next.compose(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let n = self.degree();
        let mut images = vec![0u32; n];
        for cycle in self.cycles_with_fixed_points() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (pos, &x) in cycle.iter().enumerate() {
                images[x - 1] = (cycle[(pos + shift) % cycle.len()] - 1) as u32;
            }
        }
        Permutation { images }
    }

    /// All cycles, fixed points included, each starting at its minimal
    /// point, listed by ascending minimal point.
    pub fn cycles_with_fixed_points(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Non-trivial cycles only.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed_points().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn cycle_profile(&self) -> CycleProfile {
        let mut fixed_points = 0;
        let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
        for c in self.cycles_with_fixed_points() {
            if c.len() == 1 {
                fixed_points += 1;
            } else {
                *lengths.entry(c.len()).or_default() += 1;
            }
        }
        CycleProfile { fixed_points, cycles: lengths.into_iter().collect() }
    }

    pub fn order(&self) -> u64 {
        self.cycles_with_fixed_points()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && self.images.iter().enumerate().all(|(i, &x)| {
                other.images[x as usize] == self.images[other.images[i] as usize]
            })
    }

    /// Conjugate by a relabelling of the points: if `relabel` sends old
    /// point `x` to new point `π(x)`, the result sends `π(x)` to `π(self(x))`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<Permutation, AlgebraError> {
        self.check_degree(relabel)?;
        let mut images = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[relabel.images[x] as usize] = relabel.images[y as usize];
        }
        Ok(Permutation { images })
    }

    /// Restriction to an invariant subset, renumbered `1..=len` in the
    /// order of `points`. Returns `None` if the subset is not invariant.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let mut position = vec![usize::MAX; self.degree()];
        for (k, &p) in points.iter().enumerate() {
            position[p - 1] = k;
        }
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            let k = position[self.images[p - 1] as usize];
            if k == usize::MAX {
                return None;
            }
            images.push(k as u32);
        }
        Some(Permutation { images })
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), AlgebraError> {
        if self.degree() != other.degree() {
            return Err(AlgebraError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }
}

/// Product `p₁·p₂·…·p_k` of monodromy images: `p₁` acts first.
pub fn word_product<'a, I>(n: usize, perms: I) -> Result<Permutation, AlgebraError>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    perms.into_iter().try_fold(Permutation::identity(n), |acc, p| acc.then(p))
}

/// The commutator `[x, y] = x·y·x⁻¹·y⁻¹` in the monodromy convention.
pub fn commutator(x: &Permutation, y: &Permutation) -> Result<Permutation, AlgebraError> {
    word_product(x.degree(), [x, y, &x.inverse(), &y.inverse()])
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PermutationRepr { n: self.degree(), cycles: self.cycles() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PermutationRepr::deserialize(deserializer)?;
        Permutation::from_cycles(repr.n, &repr.cycles).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_examples() {
        let a = p(4, &[&[1, 2], &[3, 4]]);
        let b = p(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(Permutation::identity(4).compose(&a).unwrap(), a);
        assert_eq!(a.compose(&b).unwrap(), p(4, &[&[1, 4], &[2, 3]]));
        let e3 = Permutation::standard_cycle(3);
        assert_eq!(e3.compose(&e3).unwrap(), p(3, &[&[1, 3, 2]]));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (1,2)∘(2,3): 2 → 3 → 3, 3 → 2 → 1, 1 → 1 → 2
        let a = p(3, &[&[1, 2]]);
        let b = p(3, &[&[2, 3]]);
        assert_eq!(a.compose(&b).unwrap(), p(3, &[&[1, 2, 3]]));
        assert_eq!(a.then(&b).unwrap(), p(3, &[&[1, 3, 2]]));
    }

    #[test]
    fn degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(AlgebraError::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn cycle_profiles() {
        let id = Permutation::identity(5).cycle_profile();
        assert_eq!(id, CycleProfile { fixed_points: 5, cycles: vec![] });
        let six = Permutation::standard_cycle(6).cycle_profile();
        assert_eq!(six, CycleProfile { fixed_points: 0, cycles: vec![(6, 1)] });
        // the branching image of the 2α-fold cover at α = 3
        let q0 = p(6, &[&[2, 5], &[3, 6]]).cycle_profile();
        assert_eq!(q0, CycleProfile { fixed_points: 2, cycles: vec![(2, 2)] });
        assert_eq!(q0.cycle_count(), 4);
    }

    #[test]
    fn parse_rejects_overlapping_cycles() {
        assert_eq!(
            Permutation::from_cycles(4, &[vec![1, 2], vec![2, 3]]),
            Err(AlgebraError::RepeatedPoint(2))
        );
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(serde_json::from_str::<Permutation>(r#"{"n":3,"cycles":[[1,2],[2,3]]}"#).is_err());
    }

    #[test]
    fn json_omits_fixed_points() {
        let a = p(5, &[&[1, 3]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":5,"cycles":[[1,3]]}"#);
        assert_eq!(serde_json::from_str::<Permutation>(&s).unwrap(), a);
    }

    #[test]
    fn powers_and_order() {
        let e = Permutation::standard_cycle(6);
        assert_eq!(e.pow(6), Permutation::identity(6));
        assert_eq!(e.pow(-1), e.inverse());
        assert_eq!(e.pow(2).order(), 3);
        assert_eq!(p(5, &[&[1, 2], &[3, 4, 5]]).order(), 6);
    }

    #[test]
    fn relabel_is_conjugation() {
        let g = p(4, &[&[1, 2, 3]]);
        let pi = p(4, &[&[1, 4]]);
        // π g π⁻¹ in function notation
        let expected = pi.compose(&g).unwrap().compose(&pi.inverse()).unwrap();
        assert_eq!(g.relabel(&pi).unwrap(), expected);
        assert_eq!(g.relabel(&pi).unwrap(), p(4, &[&[4, 2, 3]]));
    }

    #[test]
    fn restriction_to_invariant_subset() {
        let g = p(6, &[&[2, 5], &[3, 6]]);
        assert_eq!(g.restrict(&[2, 5]).unwrap(), p(2, &[&[1, 2]]));
        assert!(g.restrict(&[2, 3]).is_none());
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v.into_iter().map(|x| x + 1).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(g in arb_perm(12)) {
            prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
            prop_assert!(g.inverse().compose(&g).unwrap().is_identity());
        }

        #[test]
        fn profile_sums_to_degree(g in arb_perm(12)) {
            prop_assert_eq!(g.cycle_profile().degree(), g.degree());
        }

        #[test]
        fn json_round_trip(g in arb_perm(12)) {
            let s = serde_json::to_string(&g).unwrap();
            prop_assert_eq!(serde_json::from_str::<Permutation>(&s).unwrap(), g);
        }
    }
}

use std::collections::VecDeque;

use super::{AlgebraError, Permutation};

/// Orbit partition of `{1, …, n}` under a set of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbits {
    /// Orbits as ascending point lists, ordered by minimal element.
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so roots are minimal elements
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

pub fn orbits(gens: &[Permutation]) -> Result<Orbits, AlgebraError> {
    let n = gens.first().ok_or(AlgebraError::EmptyGenerators)?.degree();
    orbits_of_degree(n, gens)
}

pub fn orbits_of_degree(n: usize, gens: &[Permutation]) -> Result<Orbits, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::ZeroDegree);
    }
    let mut uf = UnionFind::new(n);
    for g in gens {
        if g.degree() != n {
            return Err(AlgebraError::DegreeMismatch { left: n, right: g.degree() });
        }
        for x in 1..=n {
            uf.union(x - 1, g.apply(x) - 1);
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let r = uf.find(x);
        if index[r] == usize::MAX {
            index[r] = out.len();
            out.push(Vec::new());
        }
        out[index[r]].push(x + 1);
    }
    let transitive = out.len() == 1;
    Ok(Orbits { orbits: out, transitive })
}

/// Action of a transitive group on the orbits of a normal subgroup.
///
/// Blocks are numbered by their minimal element, ascending, so block 0
/// always contains point 1.
#[derive(Debug, Clone)]
pub struct BlockQuotient {
    pub blocks: Vec<Vec<usize>>,
    /// `block_of[x - 1]` is the block index of point `x`.
    pub block_of: Vec<usize>,
    /// Induced permutations of the blocks, one per generator, in `S_m`.
    pub quotient: Vec<Permutation>,
    /// `transversal[j]` is a group element sending block 0 onto block `j`.
    pub transversal: Vec<Permutation>,
    /// Restrictions of the normal generators to block 0.
    pub normal_on_first_block: Vec<Permutation>,
}

impl BlockQuotient {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// Restriction to block 0 of an element stabilising block 0, or `None`
    /// if it moves block 0.
    pub fn restrict_to_first_block(&self, g: &Permutation) -> Option<Permutation> {
        g.restrict(&self.blocks[0])
    }

    /// Restriction to block 0 of `t_j · g · t_j⁻¹` (monodromy order), where
    /// `g` stabilises block `j` and `t_j` is the transversal element.
    pub fn transported_to_first_block(&self, g: &Permutation, block: usize) -> Option<Permutation> {
        let t = &self.transversal[block];
        let conj = t.then(g).ok()?.then(&t.inverse()).ok()?;
        self.restrict_to_first_block(&conj)
    }
}

/// Quotient of a transitive permutation group by the orbit partition of
/// a normal subgroup.
///
/// Normality is the caller's responsibility; the partition is checked to be
/// invariant under every generator, which fails for non-normal subgroups.
pub fn block_quotient(
    gens: &[Permutation],
    normal_gens: &[Permutation],
) -> Result<BlockQuotient, AlgebraError> {
    let n = gens.first().ok_or(AlgebraError::EmptyGenerators)?.degree();
    if !orbits_of_degree(n, gens)?.transitive {
        return Err(AlgebraError::NotTransitive);
    }
    let blocks = orbits_of_degree(n, normal_gens)?.orbits;
    let mut block_of = vec![0usize; n];
    for (j, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x - 1] = j;
        }
    }
    let m = blocks.len();
    let mut quotient = Vec::with_capacity(gens.len());
    for g in gens {
        let mut images = vec![0usize; m];
        for (j, b) in blocks.iter().enumerate() {
            let target = block_of[g.apply(b[0]) - 1];
            if b.iter().any(|&x| block_of[g.apply(x) - 1] != target) {
                return Err(AlgebraError::BlocksNotInvariant);
            }
            images[j] = target + 1;
        }
        quotient.push(Permutation::from_images(images).map_err(|_| AlgebraError::BlocksNotInvariant)?);
    }

    // breadth-first search over blocks, carrying a group element
    let mut transversal: Vec<Option<Permutation>> = vec![None; m];
    transversal[0] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        let t = transversal[j].clone().expect("visited block has a transversal");
        for (g, qg) in gens.iter().zip(&quotient) {
            let k = qg.apply(j + 1) - 1;
            if transversal[k].is_none() {
                transversal[k] = Some(t.then(g)?);
                queue.push_back(k);
            }
        }
    }
    let transversal: Vec<Permutation> =
        transversal.into_iter().map(|t| t.expect("transitive action reaches every block")).collect();

    let normal_on_first_block = normal_gens
        .iter()
        .map(|g| g.restrict(&blocks[0]).expect("normal generators fix their orbits"))
        .collect();
    Ok(BlockQuotient { blocks, block_of, quotient, transversal, normal_on_first_block })
}

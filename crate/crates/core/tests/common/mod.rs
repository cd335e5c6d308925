//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use seifert_covers::algebra::{smith_normal_form, IntMatrix};
use seifert_covers::lift::{make_frame, FrameRep};
use seifert_covers::symbol::{AbelianGroup, FiberRatio, SeifertSymbol};
use seifert_covers::Permutation;

/// Letter of a group word: generator index and exponent sign.
type Letter = (usize, bool);

/// First homology of the branched cover described by `rep`, computed by
/// abelianised Reidemeister–Schreier on the frame presentation.
///
/// Generators: the surface pairs, the boundary curves `q_i`, the fiber `h`.
/// Relators: `h` central, `q_1⋯q_t = Π[x_j, y_j]`, and for every cycle of
/// a meridian `q_i^{α_i} h^{β_i}` its lifted power.
pub fn rs_h1(rep: &FrameRep) -> AbelianGroup {
    let n = rep.degree();
    let surface = rep.surface.len();
    let t = rep.q.len();
    let mut perms: Vec<Vec<usize>> = rep.surface.iter().chain(&rep.q).map(|p| p.images()).collect();
    perms.push(rep.h.images());
    let h = perms.len() - 1;
    let gens = perms.len();
    let inv: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut v = vec![0; n + 1];
            for i in 1..=n {
                v[p[i - 1]] = i;
            }
            v
        })
        .collect();
    let act = |c: usize, (g, pos): Letter| if pos { perms[g][c - 1] } else { inv[g][c] };
    let col = |c: usize, g: usize| (c - 1) * gens + g;

    let mut relators: Vec<Vec<Letter>> = Vec::new();
    for g in 0..gens - 1 {
        relators.push(vec![(h, true), (g, true), (h, false), (g, false)]);
    }
    let mut product: Vec<Letter> = (0..t).map(|i| (surface + i, true)).collect();
    for j in (0..surface / 2).rev() {
        let (x, y) = (2 * j, 2 * j + 1);
        product.extend([(y, true), (x, true), (y, false), (x, false)]);
    }
    relators.push(product);

    let mut rows: Vec<Vec<i64>> = Vec::new();
    let walk = |start: usize, word: &[Letter], rows: &mut Vec<Vec<i64>>| {
        let mut row = vec![0i64; n * gens];
        let mut c = start;
        for &(g, pos) in word {
            if pos {
                row[col(c, g)] += 1;
                c = act(c, (g, true));
            } else {
                c = act(c, (g, false));
                row[col(c, g)] -= 1;
            }
        }
        assert_eq!(c, start, "relator does not close up; the representation is not a homomorphism");
        rows.push(row);
    };
    for c in 1..=n {
        for r in &relators {
            walk(c, r, &mut rows);
        }
    }
    // meridians: for each cycle, the power closing the loop at one point of it
    for i in 0..t {
        let ratio = rep.frame.ratio(i);
        let q = surface + i;
        let mut m: Vec<Letter> = vec![(q, ratio.alpha > 0); ratio.alpha.unsigned_abs() as usize];
        m.extend(vec![(h, ratio.beta > 0); ratio.beta.unsigned_abs() as usize]);
        let mut seen = vec![false; n + 1];
        for c in 1..=n {
            if seen[c] {
                continue;
            }
            let mut word = Vec::new();
            let mut d = c;
            loop {
                seen[d] = true;
                for &l in &m {
                    d = act(d, l);
                }
                word.extend_from_slice(&m);
                if d == c {
                    break;
                }
            }
            walk(c, &word, &mut rows);
        }
    }
    // spanning tree edges are trivial
    let mut reached = vec![false; n + 1];
    reached[1] = true;
    let mut queue = VecDeque::from([1usize]);
    while let Some(c) = queue.pop_front() {
        for g in 0..gens {
            let d = act(c, (g, true));
            if !reached[d] {
                reached[d] = true;
                let mut row = vec![0i64; n * gens];
                row[col(c, g)] = 1;
                rows.push(row);
                queue.push_back(d);
            }
        }
    }
    assert!(reached[1..].iter().all(|&r| r), "representation is not transitive");
    let s = smith_normal_form(&IntMatrix::from_rows(&rows).unwrap());
    AbelianGroup { free_rank: s.cokernel_free_rank, torsion: s.torsion() }
}

/// Genus of the cover orbit surface with trivial fiber image, from
/// `χ(F̃₀) = n χ(F₀)` and one boundary circle per cycle of each `q_i`.
pub fn riemann_hurwitz_genus(rep: &FrameRep) -> i64 {
    let n = rep.degree() as i64;
    let t = rep.q.len() as i64;
    let g = rep.frame.genus() as i64;
    let boundary: i64 = rep.q.iter().map(|q| count_cycles(&q.images()) as i64).sum();
    let chi = n * (2 - 2 * g - t);
    let twice = 2 - chi - boundary;
    assert_eq!(twice % 2, 0);
    twice / 2
}

/// Number of cycles of an image list, fixed points included.
pub fn count_cycles(images: &[usize]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut count = 0;
    for s in 0..images.len() {
        if !seen[s] {
            count += 1;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = images[c] - 1;
            }
        }
    }
    count
}

/// Order by repeated multiplication.
pub fn brute_order(p: &Permutation) -> u64 {
    let id = Permutation::identity(p.degree());
    let mut k = 1;
    let mut cur = p.clone();
    while cur != id {
        cur = cur.then(p).unwrap();
        k += 1;
    }
    k
}

pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut imgs: Vec<usize> = (1..=n).collect();
    permute(&mut imgs, 0, &mut out);
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == v.len() {
        out.push(Permutation::from_images(v.clone()).unwrap());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Relabels the points in order of first visit by breadth-first search
/// from `start` along the generators, returning the relabelled images.
fn bfs_relabel(gens: &[Vec<usize>], start: usize) -> Option<Vec<Vec<usize>>> {
    let n = gens[0].len();
    let mut label = vec![0usize; n + 1];
    let mut order = vec![start];
    label[start] = 1;
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        for g in gens {
            let d = g[c - 1];
            if label[d] == 0 {
                order.push(d);
                label[d] = order.len();
            }
        }
        i += 1;
    }
    if order.len() < n {
        return None;
    }
    Some(gens.iter().map(|g| order.iter().map(|&c| label[g[c - 1]]).collect()).collect())
}

/// Representative of the simultaneous conjugacy class of a transitive tuple.
pub fn conjugacy_key(gens: &[Permutation]) -> Option<Vec<Vec<usize>>> {
    let imgs: Vec<Vec<usize>> = gens.iter().map(|g| g.images()).collect();
    (1..=imgs[0].len()).map(|s| bfs_relabel(&imgs, s)).min().flatten()
}

/// Partitions of `n` into positive parts, largest first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Permutation with consecutive cycles of the given lengths.
pub fn of_cycle_type(parts: &[usize]) -> Permutation {
    let n = parts.iter().sum();
    let mut start = 1;
    let mut cycles = Vec::new();
    for &k in parts {
        cycles.push((start..start + k).collect::<Vec<_>>());
        start += k;
    }
    Permutation::from_cycles(n, &cycles).unwrap()
}

/// Conjugacy classes of transitive commuting pairs in `S_n`: `σ₁` runs over
/// one permutation per cycle type, `σ₂` over every permutation.
pub fn commuting_pair_census(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let all = all_permutations(n);
    let mut keys = BTreeSet::new();
    for parts in partitions(n) {
        let a = of_cycle_type(&parts);
        for b in all.iter().filter(|b| a.commutes_with(b)) {
            if let Some(k) = conjugacy_key(&[a.clone(), b.clone()]) {
                keys.insert(k);
            }
        }
    }
    keys
}

/// Sum of divisors: the number of index-`n` subgroups of `ℤ²`.
pub fn sigma(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}

/// Random permutation of degree `n`.
pub fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

/// Random valid representation with trivial fiber image: random surface
/// and boundary images, the last boundary image solving the product
/// relation, redrawn until transitive.
pub fn random_trivial_h_rep(rng: &mut impl Rng, max_degree: usize) -> FrameRep {
    loop {
        let n = rng.gen_range(1..=max_degree);
        let genus = rng.gen_range(0..=2u32);
        let t = rng.gen_range(1..=4usize);
        let ratios: Vec<FiberRatio> = (0..t)
            .map(|_| {
                let alpha = rng.gen_range(1..=5i64);
                let beta = loop {
                    let b = rng.gen_range(-6..=6i64);
                    if seifert_covers::algebra::gcd(alpha, b) == 1 {
                        break b;
                    }
                };
                FiberRatio::new(beta, alpha).unwrap()
            })
            .collect();
        let frame = make_frame(&SeifertSymbol::new(genus, ratios), 0);
        let surface: Vec<Permutation> = (0..2 * genus).map(|_| random_perm(rng, n)).collect();
        let q: Vec<Permutation> = (0..t - 1).map(|_| random_perm(rng, n)).collect();
        if let Ok(rep) = FrameRep::new(frame, Permutation::identity(n), q, surface) {
            if seifert_covers::lift::validate_representation(&rep).is_valid() {
                return rep;
            }
        }
    }
}

/// Every valid representation of degree `n` over the frame `(0/1, 1/2, −1/2)`
/// of `(S²×S¹, t_{2,1})` branched only along the knot, up to simultaneous
/// conjugacy.
pub fn t21_representations(n: usize) -> Vec<FrameRep> {
    let frame = make_frame(&SeifertSymbol::s2xs1(2, 1).unwrap(), 1);
    let all = all_permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in &all {
        let central: Vec<&Permutation> = all.iter().filter(|p| p.commutes_with(h)).collect();
        for q1 in &central {
            for q2 in &central {
                let q0 = q1.then(q2).unwrap().inverse();
                let gens = [h.clone(), q0.clone(), (*q1).clone(), (*q2).clone()];
                let Some(key) = conjugacy_key(&gens) else { continue };
                if !seen.insert(key) {
                    continue;
                }
                let rep = FrameRep::new(frame.clone(), h.clone(), vec![q0, (*q1).clone(), (*q2).clone()], vec![])
                    .unwrap();
                let report = seifert_covers::lift::validate_representation(&rep);
                assert!(report.is_valid());
                if report.meridians[1..].iter().all(|m| !m.branched) {
                    out.push(rep);
                }
            }
        }
    }
    out
}

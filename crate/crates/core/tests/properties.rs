mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seifert_covers::lift::{lift_cover, make_frame, validate_representation, CoverResult, FrameRep};
use seifert_covers::symbol::{FiberRatio, Move, SeifertSymbol};
use seifert_covers::Permutation;

fn ratio() -> impl Strategy<Value = FiberRatio> {
    (1i64..=7, -15i64..=15)
        .prop_filter("coprime", |(a, b)| seifert_covers::algebra::gcd(*a, *b) == 1)
        .prop_map(|(a, b)| FiberRatio::new(b, a).unwrap())
}

fn symbol() -> impl Strategy<Value = SeifertSymbol> {
    (0u32..=2, proptest::collection::vec(ratio(), 0..=5)).prop_map(|(g, r)| SeifertSymbol::new(g, r))
}

fn apply_random_moves(s: &SeifertSymbol, seeds: &[(u8, usize, usize, i64)]) -> SeifertSymbol {
    let mut cur = s.clone();
    for &(kind, i, j, k) in seeds {
        let t = cur.ratios.len();
        let mv = match kind % 4 {
            0 if t > 0 => {
                let mut order: Vec<usize> = (0..t).collect();
                order.rotate_left(i % t);
                Move::Permute(order)
            }
            1 => Move::Insert01,
            2 if t >= 2 && i % t != j % t => Move::Transfer { i: i % t, j: j % t, k },
            _ => match cur.ratios.iter().position(|r| r.is_zero()) {
                Some(p) => Move::Delete01(p),
                None => Move::Insert01,
            },
        };
        cur = cur.apply_move(&mv).unwrap();
    }
    cur
}

/// Degree-one representation over the symbol's own frame: its "cover" is
/// the manifold itself.
fn identity_rep(s: &SeifertSymbol) -> FrameRep {
    let frame = make_frame(s, 0);
    let t = frame.boundary_count();
    let g = frame.genus() as usize;
    FrameRep::new(frame, Permutation::identity(1), vec![Permutation::identity(1); t], vec![Permutation::identity(1); 2 * g])
        .unwrap()
}

/// Random element of the centralizer of a fixed-point-free `h` whose
/// cycles all have length `k`: permute the cycles, rotate each one.
fn centralizer_element(rng: &mut impl Rng, cycles: &[Vec<usize>], n: usize) -> Permutation {
    let k = cycles[0].len();
    let sigma = common::random_perm(rng, cycles.len());
    let mut images = vec![0; n];
    for (j, c) in cycles.iter().enumerate() {
        let r = rng.gen_range(0..k);
        let target = &cycles[sigma.apply(j + 1) - 1];
        for (i, &p) in c.iter().enumerate() {
            images[p - 1] = target[(i + r) % k];
        }
    }
    Permutation::from_images(images).unwrap()
}

/// Random valid representation with a semiregular fiber image.
fn random_central_rep(rng: &mut impl Rng) -> FrameRep {
    loop {
        let k = rng.gen_range(1..=4usize);
        let m = rng.gen_range(1..=3usize);
        let n = k * m;
        let shuffle = common::random_perm(rng, n);
        let points = shuffle.images();
        let cycles: Vec<Vec<usize>> = points.chunks(k).map(|c| c.to_vec()).collect();
        let h = Permutation::from_cycles(n, &cycles).unwrap();
        let genus = rng.gen_range(0..=1u32);
        let t = rng.gen_range(1..=3usize);
        let ratios: Vec<FiberRatio> = (0..t)
            .map(|_| loop {
                let a = rng.gen_range(1..=4i64);
                let b = rng.gen_range(-5..=5i64);
                if seifert_covers::algebra::gcd(a, b) == 1 {
                    break FiberRatio::new(b, a).unwrap();
                }
            })
            .collect();
        let frame = make_frame(&SeifertSymbol::new(genus, ratios), 0);
        let surface: Vec<Permutation> = (0..2 * genus).map(|_| centralizer_element(rng, &cycles, n)).collect();
        let q: Vec<Permutation> = (0..t - 1).map(|_| centralizer_element(rng, &cycles, n)).collect();
        if let Ok(rep) = FrameRep::new(frame, h, q, surface) {
            if validate_representation(&rep).is_valid() {
                return rep;
            }
        }
    }
}

fn check_cover(rep: &FrameRep, cover: &CoverResult) -> Result<(), TestCaseError> {
    prop_assert_eq!(common::rs_h1(rep), cover.cover_symbol.h1(), "cover {}", cover.cover_symbol);
    prop_assert!(seifert_covers::lift::check_euler_multiplicativity(rep.frame.symbol(), cover));
    prop_assert_eq!(cover.degree, rep.degree());
    let json = serde_json::to_string(cover).unwrap();
    let back: CoverResult = serde_json::from_str(&json).unwrap();
    prop_assert_eq!(&back, cover);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_invariant_under_moves(
        s in symbol(),
        moves in proptest::collection::vec((0u8..4, 0usize..8, 0usize..8, -3i64..=3), 0..10),
    ) {
        let moved = apply_random_moves(&s, &moves);
        prop_assert_eq!(s.canonicalize(), moved.canonicalize());
        prop_assert_eq!(s.euler_number(), moved.euler_number());
        prop_assert_eq!(s.h1(), moved.h1());
        prop_assert!(s.equivalent(&moved));
    }

    #[test]
    fn canonical_form_is_idempotent(s in symbol()) {
        let c = s.canonicalize();
        prop_assert_eq!(c.to_symbol().canonicalize(), c.clone());
        let json = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<seifert_covers::CanonicalSymbol>(&json).unwrap(), c);
    }

    #[test]
    fn symbol_text_and_json_round_trip(s in symbol()) {
        prop_assert_eq!(s.to_string().parse::<SeifertSymbol>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<SeifertSymbol>(&json).unwrap(), s);
    }

    #[test]
    fn homology_matches_the_presentation(s in symbol()) {
        prop_assert_eq!(common::rs_h1(&identity_rep(&s)), s.h1());
    }

    #[test]
    fn trivial_fiber_lifts_match_oracles(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = common::random_trivial_h_rep(&mut rng, 6);
        let cover = lift_cover(&rep).unwrap();
        check_cover(&rep, &cover)?;
        prop_assert_eq!(cover.cover_genus as i64, common::riemann_hurwitz_genus(&rep));
    }

    #[test]
    fn central_fiber_lifts_match_oracles(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_central_rep(&mut rng);
        let cover = lift_cover(&rep).unwrap();
        check_cover(&rep, &cover)?;
    }

    #[test]
    fn lifts_are_invariant_under_conjugation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_central_rep(&mut rng);
        let pi = common::random_perm(&mut rng, rep.degree());
        let conj = rep.relabel(&pi).unwrap();
        prop_assert!(lift_cover(&rep).unwrap().cover_symbol.equivalent(&lift_cover(&conj).unwrap().cover_symbol));
    }

    #[test]
    fn representation_json_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = random_central_rep(&mut rng);
        let json = serde_json::to_string(&rep).unwrap();
        prop_assert_eq!(serde_json::from_str::<FrameRep>(&json).unwrap(), rep);
    }
}

#![allow(dead_code)]

use diffdim::chains::DiffChain;
use diffdim::diffpoly::{Derivative, DiffPoly, MultiIndex, Ranking, RingSpec};
use diffdim::dimension::LeaderSpec;
use diffdim::system::{parse_system, SystemFile};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random leader spec with `n ≤ 3`, `m ≤ 3`, at most 4 generators of order
/// at most 4 per indeterminate.
pub fn random_spec(rng: &mut StdRng) -> LeaderSpec {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=3);
    let points = MultiIndex::all_up_to(n, 4);
    let generators = (0..m)
        .map(|_| {
            let k = rng.gen_range(0..=4);
            (0..k).map(|_| points.choose(rng).unwrap().clone()).collect()
        })
        .collect();
    LeaderSpec::new(n, generators)
}

pub fn corpus(seed: u64, count: usize) -> Vec<LeaderSpec> {
    let mut r = rng(seed);
    (0..count).map(|_| random_spec(&mut r)).collect()
}

pub fn random_permutation(rng: &mut StdRng, k: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..k).collect();
    p.shuffle(rng);
    p
}

pub fn var(j: usize, mu: &[u32]) -> DiffPoly {
    DiffPoly::var(Derivative::new(j, MultiIndex::new(mu.to_vec())))
}

pub fn int(c: i64) -> DiffPoly {
    DiffPoly::integer(c)
}

/// A chain whose elements are `x^k + c·y` for each generator `x` of `spec`,
/// with `y` a random derivative ranked below `x` (or nothing). Not every such
/// chain is coherent; callers filter with `validate`.
pub fn random_chain(rng: &mut StdRng, spec: &LeaderSpec) -> DiffChain {
    let ring = RingSpec::generic(spec.n(), spec.m());
    let ranking = Ranking::orderly(spec.m());
    let mut elements = Vec::new();
    for (j, gens) in spec.generators().iter().enumerate() {
        for g in gens {
            let x = Derivative::new(j, g.clone());
            let k = rng.gen_range(1..=2);
            let mut p = DiffPoly::var(x.clone()).pow(k);
            if rng.gen_bool(0.5) && x.order() > 0 {
                let lower: Vec<_> = MultiIndex::all_up_to(spec.n(), x.order() - 1);
                let mu = lower.choose(rng).unwrap().clone();
                let y = Derivative::new(rng.gen_range(0..spec.m()), mu);
                let c = rng.gen_range(-3..=3);
                p = &p + &(&DiffPoly::var(y) * &int(c));
            }
            elements.push(p);
        }
    }
    DiffChain::new(ring, ranking, elements).unwrap()
}

pub fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn load(name: &str) -> SystemFile {
    parse_system(&std::fs::read_to_string(data_path(name)).unwrap()).unwrap()
}

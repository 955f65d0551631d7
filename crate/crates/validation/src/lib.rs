//! Instance families and brute-force oracles for checking `rainbow-core`.
//! Nothing here calls into the library's search or audit code.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbow_core::algebra::{poly_colouring, poly_prepare, sidon_colouring, Field, FieldElem, IntegerInstance, SymPoly};
use rainbow_core::geometry::{circumradius_colouring, generate_general_position, similarity_colouring, volume_colouring};
use rainbow_core::{ColorKey, Colouring, ColouringSpec, ConstantColouring, FnColouring, InjectiveColouring};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All k-subsets of `items`, lexicographic, by plain recursion.
pub fn subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Colour of every k-subset of `0..n`, interned to small ids.
pub struct ColourTable {
    pub n: usize,
    pub k: usize,
    pub ids: HashMap<Vec<usize>, u32>,
}

impl ColourTable {
    pub fn new<C: Colouring + ?Sized>(c: &C) -> Self {
        let n = c.vertex_count();
        let k = c.spec().k;
        let all: Vec<usize> = (0..n).collect();
        let mut intern: HashMap<ColorKey, u32> = HashMap::new();
        let mut ids = HashMap::new();
        for e in subsets_of(&all, k) {
            let key = c.colour(&e);
            let next = intern.len() as u32;
            let id = *intern.entry(key).or_insert(next);
            ids.insert(e, id);
        }
        ColourTable { n, k, ids }
    }

    pub fn colour(&self, edge: &[usize]) -> u32 {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.ids[&e]
    }

    pub fn is_rainbow(&self, subset: &[usize]) -> bool {
        let mut s = subset.to_vec();
        s.sort_unstable();
        let mut seen: Vec<u32> = subsets_of(&s, self.k).iter().map(|e| self.colour(e)).collect();
        let len = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == len
    }

    /// Largest rainbow subset size by scanning every subset.
    pub fn max_rainbow(&self) -> usize {
        assert!(self.n <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << self.n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let s: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
            if self.is_rainbow(&s) {
                best = size;
            }
        }
        best
    }
}

/// Direct rainbow check: compare every pair of inner edges.
pub fn brute_is_rainbow<C: Colouring + ?Sized>(c: &C, subset: &[usize]) -> bool {
    let mut s = subset.to_vec();
    s.sort_unstable();
    let edges = subsets_of(&s, c.spec().k);
    let keys: Vec<ColorKey> = edges.iter().map(|e| c.colour(e)).collect();
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] == keys[j] {
                return false;
            }
        }
    }
    true
}

/// Largest monochromatic h-sunflower by counting same-coloured edge pairs
/// through each core: m petals give m(m−1)/2 pairs.
pub fn pairwise_sunflower_oracle<C: Colouring + ?Sized>(c: &C, h: usize) -> u64 {
    let n = c.vertex_count();
    let k = c.spec().k;
    let all: Vec<usize> = (0..n).collect();
    let edges = subsets_of(&all, k);
    if edges.is_empty() {
        return 0;
    }
    let keys: Vec<ColorKey> = edges.iter().map(|e| c.colour(e)).collect();
    let mut pairs: HashMap<(Vec<usize>, usize), u64> = HashMap::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if keys[i] != keys[j] {
                continue;
            }
            let common: Vec<usize> = edges[i].iter().copied().filter(|v| edges[j].contains(v)).collect();
            if common.len() < h {
                continue;
            }
            // colour class identified by the first edge index carrying it
            let class = keys.iter().position(|k| *k == keys[i]).unwrap();
            for core in subsets_of(&common, h) {
                *pairs.entry((core, class)).or_insert(0) += 1;
            }
        }
    }
    let max_pairs = pairs.values().copied().max().unwrap_or(0);
    if max_pairs == 0 {
        return 1;
    }
    let m = ((1.0 + (1.0 + 8.0 * max_pairs as f64).sqrt()) / 2.0).round() as u64;
    assert_eq!(m * (m - 1) / 2, max_pairs, "pair counts must be triangular");
    m
}

/// True iff all differences of distinct elements are distinct.
pub fn brute_b2(values: &[u64]) -> bool {
    let mut sums = Vec::new();
    for i in 0..values.len() {
        for j in i..values.len() {
            sums.push(values[i] + values[j]);
        }
    }
    let len = sums.len();
    sums.sort_unstable();
    sums.dedup();
    sums.len() == len
}

/// Largest B₂ subset of `1..=n`, by scanning every subset.
pub fn brute_max_b2(n: usize) -> usize {
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let s: Vec<u64> = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| v as u64 + 1).collect();
        if brute_b2(&s) {
            best = size;
        }
    }
    best
}

/// Random symmetric polynomial of exact degree `d` with coefficients in −3..=3.
pub fn random_sympoly(field: Field, d: usize, rng: &mut ChaCha8Rng) -> SymPoly {
    loop {
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in i..=d - i {
                let c: i64 = rng.gen_range(-3..=3);
                if c == 0 {
                    continue;
                }
                terms.push((i, j, field.from_i64(c)));
                if i != j {
                    terms.push((j, i, field.from_i64(c)));
                }
            }
        }
        if let Ok(p) = SymPoly::new(field, d, terms) {
            return p;
        }
    }
}

pub fn random_field(rng: &mut ChaCha8Rng) -> Field {
    const PRIMES: [u64; 5] = [7, 11, 13, 101, 1_000_003];
    if rng.gen_bool(0.5) {
        Field::Rationals
    } else {
        Field::prime(PRIMES[rng.gen_range(0..PRIMES.len())]).unwrap()
    }
}

/// Distinct field elements drawn from small integers.
pub fn random_elements(field: Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<FieldElem> {
    let mut out: Vec<FieldElem> = Vec::new();
    while out.len() < n {
        let x = field.from_i64(rng.gen_range(-20..=20));
        if !out.contains(&x) {
            out.push(x);
        }
        if let Field::Prime(p) = field {
            if out.len() as u64 == p {
                break;
            }
        }
    }
    out
}

/// Random colouring of the k-subsets of `0..n` from a palette of `palette` colours.
pub fn random_table(n: usize, k: usize, h: usize, palette: u64, rng: &mut ChaCha8Rng) -> FnColouring {
    let all: Vec<usize> = (0..n).collect();
    let m = subsets_of(&all, k).len();
    let table = (0..m).map(|_| rng.gen_range(0..palette)).collect();
    FnColouring::from_table(n, ColouringSpec::new(k, h, 1).unwrap(), "random", table)
}

/// A labelled colouring used by the randomized suites.
pub struct Case {
    pub family: &'static str,
    pub colouring: Box<dyn Colouring>,
}

impl Case {
    pub fn n(&self) -> usize {
        self.colouring.vertex_count()
    }
}

pub const FAMILIES: usize = 8;

/// Deterministic random instance number `i`: N ≤ 12, k ∈ {2, 3}.
pub fn random_case(i: u64) -> Case {
    let mut r = rng(0x5eed_0000 + i);
    let family = (i % FAMILIES as u64) as usize;
    let n = r.gen_range(4..=12usize);
    let k = r.gen_range(2..=3usize);
    match family {
        0 => {
            let inst = IntegerInstance::random(n as u64, 40, r.gen()).unwrap();
            Case { family: "sidon", colouring: Box::new(sidon_colouring(&inst)) }
        }
        1 => loop {
            let field = random_field(&mut r);
            let d = r.gen_range(1..=3);
            let p = random_sympoly(field, d, &mut r);
            let xs = random_elements(field, n, &mut r);
            let prep = poly_prepare(&p, &xs).unwrap();
            if prep.y.len() >= 2 {
                return Case { family: "poly", colouring: Box::new(poly_colouring(&p, prep.y).unwrap()) };
            }
        },
        2..=4 => {
            let n = n.min(10);
            let inst = generate_general_position(n, 2, r.gen(), (4 * n * n) as u64).unwrap();
            let (family, colouring): (&'static str, Box<dyn Colouring>) = match family {
                2 => ("circumradius", Box::new(circumradius_colouring(&inst).unwrap())),
                3 => ("volume", Box::new(volume_colouring(&inst).unwrap())),
                _ => ("similarity", Box::new(similarity_colouring(&inst).unwrap())),
            };
            Case { family, colouring }
        }
        5 => Case {
            family: "constant",
            colouring: Box::new(ConstantColouring::new(n, ColouringSpec::new(k, k - 1, 1).unwrap())),
        },
        6 => Case {
            family: "injective",
            colouring: Box::new(InjectiveColouring::new(n, ColouringSpec::new(k, k - 1, 1).unwrap())),
        },
        _ => {
            let m = subsets_of(&(0..n).collect::<Vec<_>>(), k).len() as u64;
            let palette = r.gen_range(1..=m.max(2));
            Case { family: "random", colouring: Box::new(random_table(n, k, k - 1, palette, &mut r)) }
        }
    }
}

//! Test-point supply: exhaustive enumeration of small algebras, seeded
//! sampling of large ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};

pub const DEFAULT_EXHAUSTIVE_BOUND: u64 = 4096;
pub const DEFAULT_BUDGET: usize = 256;
pub const DEFAULT_PAIR_BOUND: u64 = 1 << 16;

/// Knobs controlling how universally quantified checks are made finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SupplyConfig {
    pub seed: u64,
    pub budget: usize,
    pub exhaustive_bound: u64,
    /// Pair sweeps are exhaustive while `|A|·|B|` stays below this.
    pub pair_bound: u64,
}

impl Default for SupplyConfig {
    fn default() -> Self {
        SupplyConfig {
            seed: 0,
            budget: DEFAULT_BUDGET,
            exhaustive_bound: DEFAULT_EXHAUSTIVE_BOUND,
            pair_bound: DEFAULT_PAIR_BOUND,
        }
    }
}

/// `p^dim`, saturating.
pub fn cardinality(a: &Algebra) -> u64 {
    let p = a.field().modulus() as u64;
    let mut n: u64 = 1;
    for _ in 0..a.dim() {
        n = n.saturating_mul(p);
    }
    n
}

/// Every element when `p^dim` is within the exhaustive bound, otherwise
/// `budget` pseudo-random elements drawn from a ChaCha stream seeded by
/// `seed` (prefixed by zero and the basis).
pub fn elements(a: &Algebra, cfg: &SupplyConfig) -> Vec<Element> {
    let p = a.field().modulus();
    let d = a.dim();
    let total = cardinality(a);
    if total <= cfg.exhaustive_bound {
        return (0..total)
            .map(|mut m| {
                let mut v = vec![0u32; d];
                for c in v.iter_mut() {
                    *c = (m % p as u64) as u32;
                    m /= p as u64;
                }
                Element::new(v)
            })
            .collect();
    }
    sample(a, cfg.budget, cfg.seed)
}

fn sample(a: &Algebra, budget: usize, seed: u64) -> Vec<Element> {
    let p = a.field().modulus();
    let d = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((d as u64) << 32) ^ p as u64);
    let mut out = Vec::with_capacity(budget);
    out.push(a.zero_element());
    out.extend(a.basis_elements());
    while out.len() < budget {
        out.push(Element::new((0..d).map(|_| rng.gen_range(0..p)).collect()));
    }
    out.truncate(budget.max(1));
    out
}

/// Pairs `(x, y)` for a two-variable sweep: the full product of the two
/// element supplies when small, otherwise a seeded sample of pairs.
pub fn pairs(a: &Algebra, b: &Algebra, cfg: &SupplyConfig) -> Vec<(Element, Element)> {
    let (na, nb) = (cardinality(a), cardinality(b));
    if na.saturating_mul(nb) <= cfg.pair_bound {
        let xs = elements(a, cfg);
        let ys = elements(b, cfg);
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                out.push((x.clone(), y.clone()));
            }
        }
        return out;
    }
    let xs = sample(a, cfg.budget, cfg.seed);
    let ys = sample(b, cfg.budget, cfg.seed.wrapping_add(1));
    xs.into_iter().zip(ys).collect()
}

/// Basis elements, or the single zero vector for a zero algebra.
pub fn spanning(a: &Algebra) -> Vec<Element> {
    if a.dim() == 0 {
        vec![a.zero_element()]
    } else {
        a.basis_elements()
    }
}

/// Whether a `pairs` sweep over these algebras is exhaustive.
pub fn pairs_exhaustive(a: &Algebra, b: &Algebra, cfg: &SupplyConfig) -> bool {
    cardinality(a).saturating_mul(cardinality(b)) <= cfg.pair_bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use std::collections::BTreeSet;

    #[test]
    fn enumerates_small_algebras() {
        let f = PrimeField::new(2).unwrap();
        let k = Algebra::truncated_polynomial(f, 1);
        let els: BTreeSet<_> = elements(&k, &SupplyConfig::default()).into_iter().collect();
        assert_eq!(els.len(), 2);
        let d = Algebra::truncated_polynomial(f, 2);
        let els = elements(&d, &SupplyConfig::default());
        assert_eq!(els.len(), 4);
        assert_eq!(els.iter().collect::<BTreeSet<_>>().len(), 4);
    }

    #[test]
    fn samples_large_algebras_reproducibly() {
        let f = PrimeField::new(2).unwrap();
        let big = Algebra::square_zero(f, crate::algebra::names("v", 20));
        let cfg = SupplyConfig::default();
        let a = elements(&big, &cfg);
        assert_eq!(a.len(), 256);
        assert_eq!(a, elements(&big, &cfg));
        let other = elements(&big, &SupplyConfig { seed: 7, ..cfg });
        assert_ne!(a, other);
    }
}

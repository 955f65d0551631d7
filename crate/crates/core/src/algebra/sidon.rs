use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colour::{ColorKey, Colouring, ColouringSpec};
use crate::error::{Error, Result};

/// A strictly increasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerInstance {
    values: Vec<BigUint>,
}

impl IntegerInstance {
    pub fn new(values: Vec<BigUint>) -> Result<Self> {
        if values.first().is_some_and(|v| v.is_zero()) {
            return Err(Error::Parameter("values must be positive".into()));
        }
        if let Some(w) = values.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Parameter(format!(
                "values must be strictly increasing ({} is followed by {})",
                w[0], w[1]
            )));
        }
        Ok(IntegerInstance { values })
    }

    /// `1, 2, …, n`.
    pub fn range(n: u64) -> Self {
        IntegerInstance {
            values: (1..=n).map(BigUint::from).collect(),
        }
    }

    /// `n` distinct integers drawn uniformly from `1..=max`, sorted.
    pub fn random(n: u64, max: u64, seed: u64) -> Result<Self> {
        if n > max {
            return Err(Error::Parameter(format!("cannot draw {n} distinct values from 1..={max}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picked = std::collections::BTreeSet::new();
        while (picked.len() as u64) < n {
            picked.insert(rng.gen_range(1..=max));
        }
        Ok(IntegerInstance {
            values: picked.into_iter().map(BigUint::from).collect(),
        })
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Clone, Debug)]
enum Values {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

/// Colours a pair `{x, y}` by `|x − y|`; k = 2, h = 1, λ = 2.
#[derive(Clone, Debug)]
pub struct SidonColouring {
    values: Values,
    spec: ColouringSpec,
}

impl Colouring for SidonColouring {
    fn spec(&self) -> ColouringSpec {
        self.spec
    }

    fn label(&self) -> &str {
        "sidon"
    }

    fn vertex_count(&self) -> usize {
        match &self.values {
            Values::Small(v) => v.len(),
            Values::Big(v) => v.len(),
        }
    }

    fn colour(&self, edge: &[usize]) -> ColorKey {
        let (a, b) = (edge[0], edge[1]);
        match &self.values {
            Values::Small(v) => ColorKey::from_u64(v[a].abs_diff(v[b])),
            Values::Big(v) => {
                let diff = if v[a] >= v[b] { &v[a] - &v[b] } else { &v[b] - &v[a] };
                ColorKey::from_unsigned(&diff)
            }
        }
    }
}

pub fn sidon_colouring(inst: &IntegerInstance) -> SidonColouring {
    let small: Option<Vec<u64>> = inst.values.iter().map(ToPrimitive::to_u64).collect();
    SidonColouring {
        values: match small {
            Some(v) => Values::Small(v),
            None => Values::Big(inst.values.clone()),
        },
        spec: ColouringSpec::new(2, 1, 2).expect("static spec"),
    }
}

/// True iff the differences `a_j − a_i` (i < j) are pairwise distinct, which
/// is equivalent to the sums `a_i + a_j` (i ≤ j) being pairwise distinct.
pub fn is_b2_sequence(seq: &[BigUint]) -> Result<bool> {
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parameter("sequence must be strictly increasing".into()));
    }
    let mut diffs: Vec<BigUint> = Vec::with_capacity(seq.len() * seq.len().saturating_sub(1) / 2);
    for (i, a) in seq.iter().enumerate() {
        for b in &seq[i + 1..] {
            diffs.push(b - a);
        }
    }
    diffs.sort_unstable();
    Ok(diffs.windows(2).all(|w| w[0] != w[1]))
}

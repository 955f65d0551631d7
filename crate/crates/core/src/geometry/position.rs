use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::det_sign_int;
use super::{PointInstance, RationalPoint};
use crate::error::{Error, Result};
use crate::subsets::{binomial, for_each_ksubset_of, Budget};

/// Attempts allowed per requested point before the generator gives up.
pub const DEFAULT_REJECTION_FACTOR: usize = 1000;

/// Scales every point by the lcm of all denominators. Both predicates below
/// are invariant under uniform scaling.
fn integer_points(points: &[RationalPoint]) -> Vec<Vec<BigInt>> {
    let lcm = points
        .iter()
        .flat_map(|p| p.coords.iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    points
        .iter()
        .map(|p| {
            p.coords
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        })
        .collect()
}

/// d+1 points lie on a common hyperplane iff det[x_i − x_0] = 0.
fn affinely_dependent(pts: &[&[BigInt]]) -> bool {
    let base = pts[0];
    let m: Vec<Vec<BigInt>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    det_sign_int(&m) == 0
}

/// d+2 points lie on a common sphere (or hyperplane) iff the lifted
/// determinant det[|x|², x, 1] vanishes. After translating `x_0` to the
/// origin its row is (0, …, 0, 1), leaving det[|y_i|², y_i] for i ≥ 1.
fn cospherical(pts: &[&[BigInt]]) -> bool {
    let base = pts[0];
    let m: Vec<Vec<BigInt>> = pts[1..]
        .iter()
        .map(|p| {
            let y: Vec<BigInt> = p.iter().zip(base).map(|(a, b)| a - b).collect();
            let norm = y.iter().fold(BigInt::zero(), |acc, v| acc + v * v);
            std::iter::once(norm).chain(y).collect()
        })
        .collect();
    det_sign_int(&m) == 0
}

fn find_violation(
    inst: &PointInstance,
    size: usize,
    budget: &Budget,
    degenerate: fn(&[&[BigInt]]) -> bool,
) -> Result<Option<Vec<usize>>> {
    let n = inst.len();
    if n < size {
        return Ok(None);
    }
    budget.check(binomial(n as u64, size as u64))?;
    let ints = integer_points(inst.points());
    let ids: Vec<usize> = (0..n).collect();
    let mut found = None;
    let mut rows: Vec<&[BigInt]> = Vec::with_capacity(size);
    for_each_ksubset_of(&ids, size, |subset| {
        if found.is_some() {
            return;
        }
        rows.clear();
        rows.extend(subset.iter().map(|&i| ints[i].as_slice()));
        if degenerate(&rows) {
            found = Some(subset.to_vec());
        }
    });
    Ok(found)
}

/// First (d+1)-subset lying on a hyperplane, if any.
pub fn find_hyperplane_violation(inst: &PointInstance, budget: &Budget) -> Result<Option<Vec<usize>>> {
    find_violation(inst, inst.d() + 1, budget, affinely_dependent)
}

/// First (d+2)-subset lying on a common (d−1)-sphere, if any. Meaningful
/// once no d+1 points share a hyperplane.
pub fn find_sphere_violation(inst: &PointInstance, budget: &Budget) -> Result<Option<Vec<usize>>> {
    find_violation(inst, inst.d() + 2, budget, cospherical)
}

pub fn check_no_hyperplane(inst: &PointInstance, budget: &Budget) -> Result<bool> {
    Ok(find_hyperplane_violation(inst, budget)?.is_none())
}

pub fn check_no_sphere(inst: &PointInstance, budget: &Budget) -> Result<bool> {
    Ok(find_sphere_violation(inst, budget)?.is_none())
}

/// Draws integer points uniformly from `[0, coord_bound]^d`, rejecting any
/// candidate that would put d+1 accepted points on a hyperplane or d+2 on a
/// sphere. Gives up after `DEFAULT_REJECTION_FACTOR · n` draws.
pub fn generate_general_position(n: usize, d: usize, seed: u64, coord_bound: u64) -> Result<PointInstance> {
    if n == 0 || d == 0 {
        return Err(Error::Parameter("need N ≥ 1 and d ≥ 1".into()));
    }
    if coord_bound > i64::MAX as u64 {
        return Err(Error::Parameter("coordinate bound too large".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_attempts = DEFAULT_REJECTION_FACTOR * n;
    let mut accepted: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut attempts = 0usize;

    while accepted.len() < n {
        if attempts == max_attempts {
            return Err(Error::Exhausted(format!(
                "placed {} of {n} points after {max_attempts} draws; use a larger coordinate bound",
                accepted.len()
            )));
        }
        attempts += 1;
        let cand: Vec<BigInt> = (0..d)
            .map(|_| BigInt::from(rng.gen_range(0..=coord_bound as i64)))
            .collect();
        if accepted.contains(&cand) {
            continue;
        }
        let refs: Vec<&[BigInt]> = accepted.iter().map(Vec::as_slice).collect();
        let mut rows: Vec<&[BigInt]> = Vec::with_capacity(d + 2);
        let mut ok = true;
        for (size, degenerate) in [(d, affinely_dependent as fn(&[&[BigInt]]) -> bool), (d + 1, cospherical)] {
            for_each_ksubset_of(&refs, size, |subset| {
                if !ok {
                    return;
                }
                rows.clear();
                rows.extend_from_slice(subset);
                rows.push(&cand);
                if degenerate(&rows) {
                    ok = false;
                }
            });
            if !ok {
                break;
            }
        }
        drop(rows);
        if ok {
            accepted.push(cand);
        }
    }

    let points = accepted
        .into_iter()
        .map(|c| RationalPoint {
            coords: c.into_iter().map(num_rational::BigRational::from_integer).collect(),
        })
        .collect();
    let mut inst = PointInstance::new(d, points)?;
    inst.mark_validated();
    Ok(inst)
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg::{det_rational, solve_rational};
use super::RationalPoint;
use crate::colour::ColorKey;
use crate::error::{Error, Result};

fn check_simplex(points: &[RationalPoint]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::Parameter("empty point tuple".into()));
    };
    let d = first.dim();
    if points.len() != d + 1 || points.iter().any(|p| p.dim() != d) {
        return Err(Error::Parameter(format!(
            "a simplex in dimension {d} needs {} points of dimension {d}",
            d + 1
        )));
    }
    Ok(d)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Squared d-volume of the simplex spanned by d+1 points, from the
/// Cayley–Menger determinant:
/// `Vol² = (−1)^(d+1) / (2^d (d!)²) · det CM`.
pub fn squared_volume(points: &[RationalPoint]) -> Result<BigRational> {
    let d = check_simplex(points)?;
    let size = d + 2;
    let mut cm = vec![vec![BigRational::zero(); size]; size];
    for i in 1..size {
        cm[0][i] = BigRational::one();
        cm[i][0] = BigRational::one();
    }
    for i in 0..=d {
        for j in i + 1..=d {
            let sq = points[i].squared_distance(&points[j]);
            cm[i + 1][j + 1] = sq.clone();
            cm[j + 1][i + 1] = sq;
        }
    }
    let det = det_rational(cm);
    let f = factorial(d);
    let denom = BigInt::from(2).pow(d as u32) * &f * &f;
    let vol2 = det / BigRational::from_integer(denom);
    Ok(if d % 2 == 0 { -vol2 } else { vol2 })
}

/// Squared circumradius and circumcentre of a non-degenerate simplex.
///
/// The centre `c` solves `2 (x_i − x_0) · c = |x_i|² − |x_0|²` for i = 1..d;
/// the result is re-checked to be equidistant from every vertex.
pub fn squared_circumradius_with_centre(points: &[RationalPoint]) -> Result<(BigRational, RationalPoint)> {
    let d = check_simplex(points)?;
    let x0 = &points[0];
    let norm = |p: &RationalPoint| {
        p.coords
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + c * c)
    };
    let two = BigRational::from_integer(BigInt::from(2));
    let a: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| (0..d).map(|j| &two * (&p.coords[j] - &x0.coords[j])).collect())
        .collect();
    let n0 = norm(x0);
    let b: Vec<BigRational> = points[1..].iter().map(|p| norm(p) - &n0).collect();
    let centre = solve_rational(a, b)
        .map(|coords| RationalPoint { coords })
        .ok_or_else(|| Error::Degenerate("points are affinely dependent; no circumsphere".into()))?;
    let r2 = centre.squared_distance(x0);
    if points[1..].iter().any(|p| centre.squared_distance(p) != r2) {
        return Err(Error::Invariant("circumcentre is not equidistant from all vertices".into()));
    }
    Ok((r2, centre))
}

pub fn squared_circumradius(points: &[RationalPoint]) -> Result<BigRational> {
    squared_circumradius_with_centre(points).map(|(r2, _)| r2)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Key identifying the simplex up to similarity (rotation, reflection,
/// translation, uniform scaling).
///
/// The squared-distance matrix determines the simplex up to isometry. It is
/// divided by the sum of its entries to remove scale, and the
/// lexicographically smallest upper triangle over all vertex relabellings is
/// kept.
pub fn similarity_canonical_form(points: &[RationalPoint]) -> Result<ColorKey> {
    let d = check_simplex(points)?;
    if squared_volume(points)?.is_zero() {
        return Err(Error::Degenerate("points are affinely dependent".into()));
    }
    let m = d + 1;
    let mut dist = vec![vec![BigRational::zero(); m]; m];
    let mut total = BigRational::zero();
    for i in 0..m {
        for j in i + 1..m {
            let sq = points[i].squared_distance(&points[j]);
            total += &sq + &sq;
            dist[i][j] = sq.clone();
            dist[j][i] = sq;
        }
    }
    for row in dist.iter_mut() {
        for v in row.iter_mut() {
            *v = &*v / &total;
        }
    }

    let mut perm: Vec<usize> = (0..m).collect();
    let mut best: Option<Vec<BigRational>> = None;
    loop {
        let flat: Vec<BigRational> = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .map(|(i, j)| dist[perm[i]][perm[j]].clone())
            .collect();
        if best.as_ref().map_or(true, |b| flat < *b) {
            best = Some(flat);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(ColorKey::from_rational_seq(&best.unwrap()))
}

//! Exact-rational geometry: simplex measures, general-position checks,
//! instance generation and the three point-set colourings.

mod colourings;
pub mod linalg;
mod measures;
mod position;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use colourings::{circumradius_colouring, similarity_colouring, volume_colouring, PointColouring, PointMeasure};
pub use measures::{similarity_canonical_form, squared_circumradius, squared_circumradius_with_centre, squared_volume};
pub use position::{
    check_no_hyperplane, check_no_sphere, find_hyperplane_violation, find_sphere_violation,
    generate_general_position, DEFAULT_REJECTION_FACTOR,
};

/// A point of ℚ^d.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Parameter("points need at least one coordinate".into()));
        }
        Ok(RationalPoint { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn squared_distance(&self, other: &RationalPoint) -> BigRational {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(BigRational::zero(), |acc, (a, b)| {
                let diff = a - b;
                acc + &diff * &diff
            })
    }
}

/// A finite point set in ℚ^d with the general-position flags it has passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointInstance {
    d: usize,
    points: Vec<RationalPoint>,
    no_hyperplane: bool,
    no_sphere: bool,
}

impl PointInstance {
    /// Checks dimensions and distinctness; flags start unset.
    pub fn new(d: usize, points: Vec<RationalPoint>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Parameter("dimension must be at least 1".into()));
        }
        if let Some(p) = points.iter().position(|p| p.dim() != d) {
            return Err(Error::Parameter(format!(
                "point {p} has {} coordinates, expected {d}",
                points[p].dim()
            )));
        }
        let mut sorted: Vec<&RationalPoint> = points.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter("points must be distinct".into()));
        }
        Ok(PointInstance {
            d,
            points,
            no_hyperplane: false,
            no_sphere: false,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn no_hyperplane(&self) -> bool {
        self.no_hyperplane
    }

    pub fn no_sphere(&self) -> bool {
        self.no_sphere
    }

    /// Runs the hyperplane check and, when requested and the first passed,
    /// the sphere check. Returns the first violating subset found, if any.
    pub fn validate(&mut self, with_sphere: bool, budget: &crate::Budget) -> Result<Option<Vec<usize>>> {
        if let Some(bad) = find_hyperplane_violation(self, budget)? {
            return Ok(Some(bad));
        }
        self.no_hyperplane = true;
        if with_sphere {
            if let Some(bad) = find_sphere_violation(self, budget)? {
                return Ok(Some(bad));
            }
            self.no_sphere = true;
        }
        Ok(None)
    }

    pub(crate) fn mark_validated(&mut self) {
        self.no_hyperplane = true;
        self.no_sphere = true;
    }
}

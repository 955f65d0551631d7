use super::{similarity_canonical_form, squared_circumradius, squared_volume, PointInstance, RationalPoint};
use crate::colour::{ColorKey, Colouring, ColouringSpec};
use crate::error::{Error, Result};

/// Which simplex measure colours a (d+1)-tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointMeasure {
    Circumradius,
    Volume,
    Similarity,
}

impl PointMeasure {
    pub fn label(&self) -> &'static str {
        match self {
            PointMeasure::Circumradius => "circumradius",
            PointMeasure::Volume => "volume",
            PointMeasure::Similarity => "similarity",
        }
    }

    /// Petal bound for h = d: 2 spheres of a given radius through d points;
    /// two hyperplanes of d points each for a given volume; 2(d+1)! vertex
    /// correspondences for a given similarity type.
    pub fn lambda(&self, d: usize) -> u64 {
        match self {
            PointMeasure::Circumradius => 2,
            PointMeasure::Volume => 2 * d as u64,
            PointMeasure::Similarity => 2 * (1..=d as u64 + 1).product::<u64>(),
        }
    }
}

/// Colours each (d+1)-subset of a point instance by an exact simplex measure.
#[derive(Clone, Debug)]
pub struct PointColouring {
    measure: PointMeasure,
    spec: ColouringSpec,
    points: Vec<RationalPoint>,
}

impl PointColouring {
    pub fn measure(&self) -> PointMeasure {
        self.measure
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }
}

/// Key given to a degenerate tuple, which validated instances never contain.
fn degenerate_key() -> ColorKey {
    ColorKey::opaque(u64::MAX)
}

impl Colouring for PointColouring {
    fn spec(&self) -> ColouringSpec {
        self.spec
    }

    fn label(&self) -> &str {
        self.measure.label()
    }

    fn vertex_count(&self) -> usize {
        self.points.len()
    }

    fn colour(&self, edge: &[usize]) -> ColorKey {
        let tuple: Vec<RationalPoint> = edge.iter().map(|&i| self.points[i].clone()).collect();
        match self.measure {
            PointMeasure::Volume => squared_volume(&tuple).map(|v| ColorKey::from_rational(&v)),
            PointMeasure::Circumradius => squared_circumradius(&tuple).map(|r| ColorKey::from_rational(&r)),
            PointMeasure::Similarity => similarity_canonical_form(&tuple),
        }
        .unwrap_or_else(|_| degenerate_key())
    }
}

fn build(inst: &PointInstance, measure: PointMeasure) -> Result<PointColouring> {
    let needs_sphere = measure == PointMeasure::Circumradius;
    if !inst.no_hyperplane() || (needs_sphere && !inst.no_sphere()) {
        return Err(Error::Precondition(format!(
            "{} colouring requires a validated instance (no d+1 points on a hyperplane{})",
            measure.label(),
            if needs_sphere { ", no d+2 on a sphere" } else { "" }
        )));
    }
    let d = inst.d();
    Ok(PointColouring {
        measure,
        spec: ColouringSpec::new(d + 1, d, measure.lambda(d))?,
        points: inst.points().to_vec(),
    })
}

/// Squared circumradius of each d-simplex; k = d+1, h = d, λ = 2.
pub fn circumradius_colouring(inst: &PointInstance) -> Result<PointColouring> {
    build(inst, PointMeasure::Circumradius)
}

/// Squared volume of each d-simplex; k = d+1, h = d, λ = 2d.
pub fn volume_colouring(inst: &PointInstance) -> Result<PointColouring> {
    build(inst, PointMeasure::Volume)
}

/// Similarity type of each d-simplex; k = d+1, h = d, λ = 2(d+1)!.
pub fn similarity_colouring(inst: &PointInstance) -> Result<PointColouring> {
    build(inst, PointMeasure::Similarity)
}

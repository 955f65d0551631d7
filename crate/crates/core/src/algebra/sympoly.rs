use super::{Field, FieldElem};
use crate::colour::{ColorKey, Colouring, ColouringSpec};
use crate::error::{Error, Result};

/// A symmetric polynomial `p(x, y) = Σ c[i][j] x^i y^j` of total degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    field: Field,
    degree: usize,
    /// `(degree+1) × (degree+1)`; zero wherever `i + j > degree`.
    coeffs: Vec<Vec<FieldElem>>,
}

impl SymPoly {
    /// Builds from sparse `(i, j, c)` terms. Both `(i, j)` and `(j, i)` must be
    /// listed with equal coefficients.
    pub fn new(field: Field, degree: usize, terms: Vec<(usize, usize, FieldElem)>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parameter("degree must be at least 1".into()));
        }
        let mut coeffs = vec![vec![field.zero(); degree + 1]; degree + 1];
        let mut seen = vec![vec![false; degree + 1]; degree + 1];
        for (i, j, c) in terms {
            if i + j > degree {
                return Err(Error::Parameter(format!("term x^{i} y^{j} exceeds degree {degree}")));
            }
            if std::mem::replace(&mut seen[i][j], true) {
                return Err(Error::Parameter(format!("term x^{i} y^{j} listed twice")));
            }
            // normalise through the field so residues are reduced
            coeffs[i][j] = field.add(&field.zero(), &c);
        }
        for i in 0..=degree {
            for j in 0..i {
                if coeffs[i][j] != coeffs[j][i] {
                    return Err(Error::Parameter(format!(
                        "not symmetric: coefficient of x^{i} y^{j} differs from x^{j} y^{i}"
                    )));
                }
            }
        }
        if !(0..=degree).any(|i| !field.is_zero(&coeffs[i][degree - i])) {
            return Err(Error::Parameter(format!("total degree is below {degree}")));
        }
        Ok(SymPoly { field, degree, coeffs })
    }

    /// `x + y`.
    pub fn sum(field: Field) -> Self {
        let one = field.one();
        SymPoly::new(field, 1, vec![(1, 0, one.clone()), (0, 1, one)]).expect("x + y is valid")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, i: usize, j: usize) -> &FieldElem {
        &self.coeffs[i][j]
    }

    /// Nonzero terms `(i, j, c)` in row-major order.
    pub fn terms(&self) -> Vec<(usize, usize, FieldElem)> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !self.field.is_zero(c) {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn eval(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        let f = &self.field;
        let xp = f.powers(x, self.degree);
        let yp = f.powers(y, self.degree);
        let mut acc = f.zero();
        for i in 0..=self.degree {
            for j in 0..=self.degree - i {
                let c = &self.coeffs[i][j];
                if f.is_zero(c) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(c, &f.mul(&xp[i], &yp[j])));
            }
        }
        acc
    }

    /// `q_i(y)`, the coefficient of `x^i` once `p` is read as a polynomial in `x`.
    pub fn eval_q(&self, i: usize, y: &FieldElem) -> FieldElem {
        let f = &self.field;
        let yp = f.powers(y, self.degree);
        (0..=self.degree - i).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&self.coeffs[i][j], &yp[j])))
    }

    /// Smallest `j ≥ 1` with `q_j` not identically zero.
    pub fn leading_x_index(&self) -> Result<usize> {
        (1..=self.degree)
            .find(|&i| self.coeffs[i].iter().any(|c| !self.field.is_zero(c)))
            .ok_or_else(|| Error::Invariant("polynomial does not depend on x".into()))
    }
}

/// Output of [`poly_prepare`]: the kept elements `y`, the removed zeros `z`
/// of `q_j`, and `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prepared {
    pub y: Vec<FieldElem>,
    pub z: Vec<FieldElem>,
    pub j: usize,
    /// Positions in the input list of the kept elements.
    pub kept_positions: Vec<usize>,
}

fn check_distinct(xs: &[FieldElem]) -> Result<()> {
    let mut sorted: Vec<&FieldElem> = xs.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parameter("field elements must be distinct".into()));
    }
    Ok(())
}

/// Removes from `xs` the zeros of `q_j`, where `j ≥ 1` is the smallest index
/// with `q_j ≢ 0`. For every remaining `y₀`, `p(x, y₀)` has degree between 1
/// and d in x, so any value is taken at most d times.
pub fn poly_prepare(poly: &SymPoly, xs: &[FieldElem]) -> Result<Prepared> {
    check_distinct(xs)?;
    let f = poly.field();
    let j = poly.leading_x_index()?;
    let mut out = Prepared {
        y: Vec::new(),
        z: Vec::new(),
        j,
        kept_positions: Vec::new(),
    };
    for (pos, x) in xs.iter().enumerate() {
        if f.is_zero(&poly.eval_q(j, x)) {
            out.z.push(x.clone());
        } else {
            out.y.push(x.clone());
            out.kept_positions.push(pos);
        }
    }
    if out.z.len() > poly.degree() {
        return Err(Error::Invariant(format!(
            "q_{j} has {} zeros, more than the degree {}",
            out.z.len(),
            poly.degree()
        )));
    }
    Ok(out)
}

/// Colours a pair `{a, b}` of prepared elements by `p(a, b)`.
#[derive(Clone, Debug)]
pub struct PolyColouring {
    poly: SymPoly,
    values: Vec<FieldElem>,
    spec: ColouringSpec,
    label: String,
}

impl PolyColouring {
    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn poly(&self) -> &SymPoly {
        &self.poly
    }
}

impl Colouring for PolyColouring {
    fn spec(&self) -> ColouringSpec {
        self.spec
    }

    fn label(&self) -> &str {
        &self.label
    }

    fn vertex_count(&self) -> usize {
        self.values.len()
    }

    fn colour(&self, edge: &[usize]) -> ColorKey {
        let v = self.poly.eval(&self.values[edge[0]], &self.values[edge[1]]);
        self.poly.field().key(&v)
    }
}

/// Pair colouring with k = 2, h = 1, λ = d. `ys` must be distinct and avoid
/// the zeros of `q_j` (as returned by [`poly_prepare`]).
pub fn poly_colouring(poly: &SymPoly, ys: Vec<FieldElem>) -> Result<PolyColouring> {
    check_distinct(&ys)?;
    let j = poly.leading_x_index()?;
    if let Some(bad) = ys.iter().find(|y| poly.field().is_zero(&poly.eval_q(j, y))) {
        return Err(Error::Precondition(format!(
            "element {bad} is a zero of q_{j}; run poly_prepare first"
        )));
    }
    Ok(PolyColouring {
        spec: ColouringSpec::new(2, 1, poly.degree() as u64)?,
        poly: poly.clone(),
        values: ys,
        label: "poly".to_string(),
    })
}

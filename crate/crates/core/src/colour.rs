//! Colour values and the colouring abstraction.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use smallvec::SmallVec;

use crate::error::{Error, Result};

const TAG_CONSTANT: u8 = 0x00;
const TAG_RATIONAL: u8 = 0x01;
const TAG_UNSIGNED: u8 = 0x02;
const TAG_RESIDUE: u8 = 0x03;
const TAG_RATIONAL_SEQ: u8 = 0x04;
const TAG_VERTICES: u8 = 0x05;
const TAG_OPAQUE: u8 = 0x06;

/// Canonical byte serialization of an exact colour value.
///
/// Every encoder starts with a tag byte naming the value kind and writes
/// variable-length parts behind a length prefix, so two keys are equal
/// exactly when the encoded values are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorKey(SmallVec<[u8; 24]>);

impl ColorKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The single colour of a constant colouring.
    pub fn constant() -> Self {
        ColorKey(SmallVec::from_slice(&[TAG_CONSTANT]))
    }

    /// A rational in lowest terms with positive denominator.
    pub fn from_rational(q: &BigRational) -> Self {
        let mut buf = SmallVec::new();
        buf.push(TAG_RATIONAL);
        push_rational(&mut buf, q);
        ColorKey(buf)
    }

    pub fn from_unsigned(v: &BigUint) -> Self {
        let mut buf = SmallVec::new();
        buf.push(TAG_UNSIGNED);
        if v.bits() > 0 {
            buf.extend_from_slice(&v.to_bytes_be());
        }
        ColorKey(buf)
    }

    /// Same bytes as [`ColorKey::from_unsigned`] on the equal big integer.
    pub fn from_u64(v: u64) -> Self {
        let mut buf = SmallVec::new();
        buf.push(TAG_UNSIGNED);
        let bytes = v.to_be_bytes();
        let skip = bytes.iter().take_while(|&&b| b == 0).count();
        buf.extend_from_slice(&bytes[skip..]);
        ColorKey(buf)
    }

    /// Residue `r` of the prime field of order `p`; `r < p` is the caller's job.
    pub fn from_residue(p: u64, r: u64) -> Self {
        let mut buf = SmallVec::new();
        buf.push(TAG_RESIDUE);
        buf.extend_from_slice(&p.to_be_bytes());
        buf.extend_from_slice(&r.to_be_bytes());
        ColorKey(buf)
    }

    pub fn from_rational_seq(values: &[BigRational]) -> Self {
        let mut buf = SmallVec::new();
        buf.push(TAG_RATIONAL_SEQ);
        buf.extend_from_slice(&(values.len() as u32).to_be_bytes());
        for q in values {
            push_rational(&mut buf, q);
        }
        ColorKey(buf)
    }

    /// The vertex set itself; order-insensitive.
    pub fn from_vertices(edge: &[usize]) -> Self {
        let mut sorted: SmallVec<[usize; 8]> = SmallVec::from_slice(edge);
        sorted.sort_unstable();
        let mut buf = SmallVec::new();
        buf.push(TAG_VERTICES);
        for v in sorted {
            buf.extend_from_slice(&(v as u64).to_be_bytes());
        }
        ColorKey(buf)
    }

    /// Caller-defined colour ids, used by fixtures and random colourings.
    pub fn opaque(id: u64) -> Self {
        let mut buf = SmallVec::new();
        buf.push(TAG_OPAQUE);
        buf.extend_from_slice(&id.to_be_bytes());
        ColorKey(buf)
    }

    /// Lowercase hex of the key bytes.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn push_rational(buf: &mut SmallVec<[u8; 24]>, q: &BigRational) {
    let (sign, num) = q.numer().to_bytes_be();
    buf.push(match sign {
        Sign::Minus => 0,
        Sign::NoSign => 1,
        Sign::Plus => 2,
    });
    push_magnitude(buf, if sign == Sign::NoSign { &[] } else { &num });
    let (_, den) = q.denom().to_bytes_be();
    push_magnitude(buf, &den);
}

fn push_magnitude(buf: &mut SmallVec<[u8; 24]>, bytes: &[u8]) {
    buf.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
    buf.extend_from_slice(bytes);
}

impl fmt::Debug for ColorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColorKey({})", self.to_hex())
    }
}

/// Edge size `k`, core size `h` and the claimed petal bound `lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ColouringSpec {
    pub k: usize,
    pub h: usize,
    pub lambda: u64,
}

impl ColouringSpec {
    pub fn new(k: usize, h: usize, lambda: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Parameter("edge size k must be at least 1".into()));
        }
        if h >= k {
            return Err(Error::Parameter(format!("core size h = {h} must be < k = {k}")));
        }
        if lambda == 0 {
            return Err(Error::Parameter("lambda must be at least 1".into()));
        }
        Ok(ColouringSpec { k, h, lambda })
    }

    /// Exponent (k - h) / (2k - 1) with which rainbow sets are expected to grow in N.
    pub fn predicted_exponent(&self) -> f64 {
        (self.k - self.h) as f64 / (2 * self.k - 1) as f64
    }
}

/// A colouring of the complete k-hypergraph on `0..vertex_count()`.
///
/// `colour` receives a sorted k-subset and must be pure: the same subset
/// always maps to the same key, whatever order its elements come in.
pub trait Colouring: Send + Sync {
    fn spec(&self) -> ColouringSpec;

    fn label(&self) -> &str;

    /// Number of vertices the colouring is defined on.
    fn vertex_count(&self) -> usize;

    fn colour(&self, edge: &[usize]) -> ColorKey;
}

impl<C: Colouring + ?Sized> Colouring for &C {
    fn spec(&self) -> ColouringSpec {
        (**self).spec()
    }
    fn label(&self) -> &str {
        (**self).label()
    }
    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
    fn colour(&self, edge: &[usize]) -> ColorKey {
        (**self).colour(edge)
    }
}

impl<C: Colouring + ?Sized> Colouring for Box<C> {
    fn spec(&self) -> ColouringSpec {
        (**self).spec()
    }
    fn label(&self) -> &str {
        (**self).label()
    }
    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
    fn colour(&self, edge: &[usize]) -> ColorKey {
        (**self).colour(edge)
    }
}

/// Every edge gets the same colour.
#[derive(Clone, Debug)]
pub struct ConstantColouring {
    spec: ColouringSpec,
    n: usize,
}

impl ConstantColouring {
    pub fn new(n: usize, spec: ColouringSpec) -> Self {
        ConstantColouring { spec, n }
    }
}

impl Colouring for ConstantColouring {
    fn spec(&self) -> ColouringSpec {
        self.spec
    }
    fn label(&self) -> &str {
        "constant"
    }
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn colour(&self, _edge: &[usize]) -> ColorKey {
        ColorKey::constant()
    }
}

/// Every edge gets its own colour.
#[derive(Clone, Debug)]
pub struct InjectiveColouring {
    spec: ColouringSpec,
    n: usize,
}

impl InjectiveColouring {
    pub fn new(n: usize, spec: ColouringSpec) -> Self {
        InjectiveColouring { spec, n }
    }
}

impl Colouring for InjectiveColouring {
    fn spec(&self) -> ColouringSpec {
        self.spec
    }
    fn label(&self) -> &str {
        "injective"
    }
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn colour(&self, edge: &[usize]) -> ColorKey {
        ColorKey::from_vertices(edge)
    }
}

type Evaluator = dyn Fn(&[usize]) -> ColorKey + Send + Sync;

/// A colouring backed by a closure.
#[derive(Clone)]
pub struct FnColouring {
    spec: ColouringSpec,
    n: usize,
    label: String,
    eval: Arc<Evaluator>,
}

impl FnColouring {
    pub fn new(
        n: usize,
        spec: ColouringSpec,
        label: impl Into<String>,
        eval: impl Fn(&[usize]) -> ColorKey + Send + Sync + 'static,
    ) -> Self {
        FnColouring {
            spec,
            n,
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    /// Colour ids looked up from a table indexed by the lexicographic rank of
    /// each k-subset of `0..n`.
    pub fn from_table(n: usize, spec: ColouringSpec, label: impl Into<String>, table: Vec<u64>) -> Self {
        FnColouring::new(n, spec, label, move |edge: &[usize]| {
            let mut sorted: SmallVec<[usize; 8]> = SmallVec::from_slice(edge);
            sorted.sort_unstable();
            ColorKey::opaque(table[crate::subsets::rank_ksubset(&sorted, n)])
        })
    }
}

impl fmt::Debug for FnColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnColouring")
            .field("label", &self.label)
            .field("spec", &self.spec)
            .field("n", &self.n)
            .finish()
    }
}

impl Colouring for FnColouring {
    fn spec(&self) -> ColouringSpec {
        self.spec
    }
    fn label(&self) -> &str {
        &self.label
    }
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn colour(&self, edge: &[usize]) -> ColorKey {
        (self.eval)(edge)
    }
}

/// Decimal big integer, used by several encoders and parsers.
pub(crate) fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parameter(format!("not an integer: {s:?}")))
}

use std::fmt;

use serde::Serialize;

use crate::exactalg::{DivisionRing, PrimeModulus, RingElem};
use crate::matring::SquareMatrix;

use super::SolverError;

/// A finite algebra over its prime subfield: GF(p^k) or M_m(GF(p^k)).
///
/// Coordinates are coefficient-lexicographic: entries row-major, each entry
/// expanded in the power basis of GF(p^k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Field(DivisionRing),
    Matrix { m: usize, ring: DivisionRing },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraSpec {
    Field { p: u64, k: usize },
    Matrix { m: usize, p: u64, k: usize },
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = |p: u64, k: usize| if k == 1 { format!("GF({p})") } else { format!("GF({p}^{k})") };
        match *self {
            Self::Field { p, k } => f.write_str(&field(p, k)),
            Self::Matrix { m, p, k } => write!(f, "M{m}({})", field(p, k)),
        }
    }
}

impl Algebra {
    pub fn field(p: u64, k: usize) -> Result<Self, SolverError> {
        Ok(Self::Field(DivisionRing::finite_field(p, k)?))
    }

    pub fn matrix(m: usize, p: u64, k: usize) -> Result<Self, SolverError> {
        if m == 0 {
            return Err(crate::matring::MatError::EmptyMatrix.into());
        }
        Ok(Self::Matrix { m, ring: DivisionRing::finite_field(p, k)? })
    }

    pub fn from_spec(spec: AlgebraSpec) -> Result<Self, SolverError> {
        match spec {
            AlgebraSpec::Field { p, k } => Self::field(p, k),
            AlgebraSpec::Matrix { m, p, k } => Self::matrix(m, p, k),
        }
    }

    pub fn spec(&self) -> AlgebraSpec {
        let ring = self.base_ring();
        let (p, k) = (ring.characteristic(), ring.prime_degree().expect("finite"));
        match self {
            Self::Field(_) => AlgebraSpec::Field { p, k },
            Self::Matrix { m, .. } => AlgebraSpec::Matrix { m: *m, p, k },
        }
    }

    pub fn base_ring(&self) -> &DivisionRing {
        match self {
            Self::Field(r) | Self::Matrix { ring: r, .. } => r,
        }
    }

    pub fn prime_modulus(&self) -> PrimeModulus {
        self.base_ring().prime_modulus().expect("finite base ring")
    }

    pub fn characteristic(&self) -> u64 {
        self.base_ring().characteristic()
    }

    pub fn matrix_dim(&self) -> usize {
        match self {
            Self::Field(_) => 1,
            Self::Matrix { m, .. } => *m,
        }
    }

    /// Dimension over GF(p).
    pub fn dim(&self) -> usize {
        let k = self.base_ring().prime_degree().expect("finite");
        self.matrix_dim().pow(2) * k
    }

    /// `p^d`, if it fits.
    pub fn element_count(&self) -> Option<u128> {
        (self.characteristic() as u128).checked_pow(self.dim() as u32)
    }

    /// `|A*|`: `q - 1` for fields, `prod_{i<m} (q^m - q^i)` for `M_m(GF(q))`.
    pub fn unit_count(&self) -> Option<u128> {
        let q = self.base_ring().order()?;
        match self {
            Self::Field(_) => Some(q - 1),
            Self::Matrix { m, .. } => {
                let qm = q.checked_pow(*m as u32)?;
                (0..*m).try_fold(1u128, |acc, i| acc.checked_mul(qm - q.checked_pow(i as u32)?))
            }
        }
    }

    pub fn from_coordinates(&self, coords: &[u64]) -> Result<AlgebraElem, SolverError> {
        Ok(match self {
            Self::Field(r) => AlgebraElem::Scalar(r.from_coordinates(coords)?),
            Self::Matrix { m, ring } => {
                AlgebraElem::Matrix(SquareMatrix::from_coordinates(*m, ring, coords)?)
            }
        })
    }

    /// Element number `idx` in enumeration order (coordinate `j` is the
    /// `j`-th base-p digit of `idx`).
    pub fn element_at(&self, idx: u128) -> AlgebraElem {
        let p = self.characteristic() as u128;
        let mut rest = idx;
        let coords: Vec<u64> = (0..self.dim())
            .map(|_| {
                let c = (rest % p) as u64;
                rest /= p;
                c
            })
            .collect();
        self.from_coordinates(&coords).expect("coordinate count matches dimension")
    }

    pub fn one(&self) -> AlgebraElem {
        match self {
            Self::Field(r) => AlgebraElem::Scalar(r.one()),
            Self::Matrix { m, ring } => {
                AlgebraElem::Matrix(SquareMatrix::identity(*m, ring).expect("m >= 1"))
            }
        }
    }

    pub fn zero(&self) -> AlgebraElem {
        match self {
            Self::Field(r) => AlgebraElem::Scalar(r.zero()),
            Self::Matrix { m, ring } => AlgebraElem::Matrix(SquareMatrix::zero(*m, ring).expect("m >= 1")),
        }
    }

    /// The GF(p)-basis element with coordinate vector `e_l`.
    pub fn basis_element(&self, l: usize) -> AlgebraElem {
        let mut coords = vec![0; self.dim()];
        coords[l] = 1;
        self.from_coordinates(&coords).expect("coordinate count matches dimension")
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum AlgebraElem {
    Scalar(RingElem),
    Matrix(SquareMatrix),
}

impl AlgebraElem {
    pub fn coordinates(&self) -> Vec<u64> {
        match self {
            Self::Scalar(x) => x.coordinates(),
            Self::Matrix(x) => x.coordinates(),
        }
        .expect("finite algebra")
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Scalar(x) => x.is_zero(),
            Self::Matrix(x) => x.is_zero(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Scalar(a), Self::Scalar(b)) => Self::Scalar(a * b),
            (Self::Matrix(a), Self::Matrix(b)) => Self::Matrix(a.mul(b).expect("same algebra")),
            _ => panic!("mixed algebra elements"),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Scalar(a), Self::Scalar(b)) => Self::Scalar(a + b),
            (Self::Matrix(a), Self::Matrix(b)) => Self::Matrix(a.add(b).expect("same algebra")),
            _ => panic!("mixed algebra elements"),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        match self {
            Self::Scalar(a) => a.inv().ok().map(Self::Scalar),
            Self::Matrix(a) => a.inverse().map(Self::Matrix),
        }
    }

    pub fn pow(&self, n: i64) -> Option<Self> {
        match self {
            Self::Scalar(a) => a.pow(n).ok().map(Self::Scalar),
            Self::Matrix(a) => a.pow(n).ok().map(Self::Matrix),
        }
    }
}

//! The catalog of polynomial bases.
//!
//! Each [`Family`] generates its degree-`n` member in monomial coordinates
//! by its three-term recurrence. Generated polynomials are memoized per
//! family up to the largest degree requested so far.
//!
//! A [`BasisId`] pairs a family with a [`Subspace`] filter. The filtered
//! bases `Even` and `Odd` keep only the members of even or odd degree and
//! require a family of definite parity, so that the kept members span the
//! same subspace as the kept monomials.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{Parity, Poly};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Monomial,
    ChebyshevT,
    Legendre,
    LegendreShifted,
    HermitePhysicist,
    Laguerre,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Monomial,
        Family::ChebyshevT,
        Family::Legendre,
        Family::LegendreShifted,
        Family::HermitePhysicist,
        Family::Laguerre,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Monomial => "monomial",
            Family::ChebyshevT => "chebyshev_t",
            Family::Legendre => "legendre",
            Family::LegendreShifted => "legendre_shifted",
            Family::HermitePhysicist => "hermite_physicist",
            Family::Laguerre => "laguerre",
        }
    }

    /// Whether every member has the parity of its degree.
    pub fn has_definite_parity(self) -> bool {
        !matches!(self, Family::LegendreShifted | Family::Laguerre)
    }

    pub fn spec(self) -> BasisSpec {
        BasisSpec {
            id: BasisId::full(self),
            parity: if self.has_definite_parity() {
                ParityClass::Definite
            } else {
                ParityClass::None
            },
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownBasis(s.to_string()))
    }
}

/// Which degrees of a family a basis keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Subspace {
    #[default]
    All,
    Even,
    Odd,
}

impl Subspace {
    /// Degree of the `index`-th kept basis vector.
    pub fn degree_at(self, index: usize) -> usize {
        match self {
            Subspace::All => index,
            Subspace::Even => 2 * index,
            Subspace::Odd => 2 * index + 1,
        }
    }

    /// Number of kept degrees in `0..=max_degree`.
    pub fn dim_for_degree(self, max_degree: usize) -> usize {
        match self {
            Subspace::All => max_degree + 1,
            Subspace::Even => max_degree / 2 + 1,
            Subspace::Odd => max_degree.div_ceil(2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Subspace::All => "all",
            Subspace::Even => "even",
            Subspace::Odd => "odd",
        }
    }
}

impl FromStr for Subspace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Subspace::All),
            "even" => Ok(Subspace::Even),
            "odd" => Ok(Subspace::Odd),
            other => Err(Error::UnknownBasis(format!("subspace filter {other:?}"))),
        }
    }
}

/// A basis tag: family plus subspace filter. Text form is the family name,
/// suffixed with `:even` or `:odd` when filtered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisId {
    family: Family,
    subspace: Subspace,
}

impl BasisId {
    pub fn new(family: Family, subspace: Subspace) -> Result<Self> {
        if subspace != Subspace::All && !family.has_definite_parity() {
            return Err(Error::NoDefiniteParity(family.name().to_string()));
        }
        Ok(BasisId { family, subspace })
    }

    pub const fn full(family: Family) -> Self {
        BasisId {
            family,
            subspace: Subspace::All,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn subspace(&self) -> Subspace {
        self.subspace
    }

    pub fn degree_at(&self, index: usize) -> usize {
        self.subspace.degree_at(index)
    }

    /// The `index`-th basis vector in monomial coordinates.
    pub fn vector(&self, index: usize) -> Poly {
        basis_polynomial(self.family, self.degree_at(index))
    }
}

impl From<Family> for BasisId {
    fn from(family: Family) -> Self {
        BasisId::full(family)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.subspace {
            Subspace::All => write!(f, "{}", self.family),
            s => write!(f, "{}:{}", self.family, s.name()),
        }
    }
}

impl FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, subspace) = match s.split_once(':') {
            Some((f, sub)) => (f, sub.parse()?),
            None => (s, Subspace::All),
        };
        BasisId::new(family.parse()?, subspace)
    }
}

impl Serialize for BasisId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasisId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Definite,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisSpec {
    pub id: BasisId,
    pub parity: ParityClass,
}

impl BasisSpec {
    pub fn generate(&self, n: usize) -> Poly {
        basis_polynomial(self.id.family, n)
    }
}

fn cache() -> &'static [RwLock<Vec<Poly>>; 6] {
    static CACHE: OnceLock<[RwLock<Vec<Poly>>; 6]> = OnceLock::new();
    CACHE.get_or_init(|| std::array::from_fn(|_| RwLock::new(Vec::new())))
}

/// The degree-`n` member of `family` in monomial coordinates.
pub fn basis_polynomial(family: Family, n: usize) -> Poly {
    let slot = &cache()[family.slot()];
    if let Some(p) = slot.read().unwrap().get(n) {
        return p.clone();
    }
    let mut table = slot.write().unwrap();
    while table.len() <= n {
        let next = next_member(family, &table);
        table.push(next);
    }
    table[n].clone()
}

/// Looks a family up by name first; for callers holding a raw string.
pub fn basis_polynomial_by_name(name: &str, n: usize) -> Result<Poly> {
    Ok(basis_polynomial(name.parse()?, n))
}

/// Extends `prev` (members `0..prev.len()`) by one member.
fn next_member(family: Family, prev: &[Poly]) -> Poly {
    let n = prev.len();
    let x = Poly::monomial(1, Rational::one());
    let q = |v: i64| Rational::from(v);
    match family {
        Family::Monomial => Poly::monomial(n, Rational::one()),
        Family::ChebyshevT => match n {
            0 => Poly::one(),
            1 => x,
            _ => &prev[n - 1].shift().scale(&q(2)) - &prev[n - 2],
        },
        Family::Legendre => match n {
            0 => Poly::one(),
            1 => x,
            _ => {
                // n P_n = (2n - 1) x P_{n-1} - (n - 1) P_{n-2}
                let m = n as i64;
                let lhs = &prev[n - 1].shift().scale(&q(2 * m - 1)) - &prev[n - 2].scale(&q(m - 1));
                lhs.scale(&Rational::frac(1, m))
            }
        },
        Family::LegendreShifted => {
            basis_polynomial(Family::Legendre, n).compose(&Poly::from_ints(&[-1, 2]))
        }
        Family::HermitePhysicist => match n {
            0 => Poly::one(),
            1 => Poly::from_ints(&[0, 2]),
            _ => {
                // H_n = 2x H_{n-1} - 2(n - 1) H_{n-2}
                let m = n as i64;
                &prev[n - 1].shift().scale(&q(2)) - &prev[n - 2].scale(&q(2 * (m - 1)))
            }
        },
        Family::Laguerre => match n {
            0 => Poly::one(),
            1 => Poly::from_ints(&[1, -1]),
            _ => {
                // n L_n = (2n - 1 - x) L_{n-1} - (n - 1) L_{n-2}
                let m = n as i64;
                let a = &prev[n - 1].scale(&q(2 * m - 1)) - &prev[n - 1].shift();
                let lhs = &a - &prev[n - 2].scale(&q(m - 1));
                lhs.scale(&Rational::frac(1, m))
            }
        },
    }
}

/// Outcome of [`is_triangular_basis`]: `Some(perm)` when placing input vector
/// `perm[j]` at column `j` gives a nonsingular upper-triangular matrix.
pub type TriangularWitness = Option<Vec<usize>>;

/// Decides whether some ordering of `vectors` (as columns) is upper
/// triangular and nonsingular.
///
/// Such an ordering exists iff the highest nonzero coordinates of the
/// vectors are pairwise distinct and cover every index, as column `j` must
/// top out exactly at row `j`.
pub fn is_triangular_basis(vectors: &[Vec<Rational>]) -> Result<TriangularWitness> {
    let count = vectors.len();
    if let Some(v) = vectors.iter().find(|v| v.len() != count) {
        return Err(Error::NotSquare {
            count,
            len: v.len(),
        });
    }
    let mut perm: Vec<Option<usize>> = vec![None; count];
    for (idx, v) in vectors.iter().enumerate() {
        let Some(top) = v.iter().rposition(|c| !c.is_zero()) else {
            return Ok(None);
        };
        if perm[top].replace(idx).is_some() {
            return Ok(None);
        }
    }
    Ok(perm.into_iter().collect())
}

/// Parity of the degree-`n` member expected under a definite-parity family.
pub fn degree_parity(n: usize) -> Parity {
    if n.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

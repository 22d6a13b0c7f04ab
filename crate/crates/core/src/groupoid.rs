//! Typed change-of-basis matrices and the groupoid they form.
//!
//! `M_{ts}` maps coordinates with respect to basis `s` (the domain) to
//! coordinates with respect to `t` (the range). Column `j` is the domain's
//! `j`-th basis vector written in the range basis. Rows and columns run in
//! ascending degree with index 0 at the top left.
//!
//! Tags are part of equality: two identities over different bases are
//! different elements even though their entries agree.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{BasisId, Family};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::triangular::UpperTriangular;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CobMatrix {
    range: BasisId,
    domain: BasisId,
    entries: UpperTriangular,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordVec {
    pub basis: BasisId,
    pub coords: Vec<Rational>,
}

impl CoordVec {
    pub fn new(basis: BasisId, coords: Vec<Rational>) -> Self {
        CoordVec { basis, coords }
    }

    pub fn unit(basis: BasisId, dim: usize, index: usize) -> Self {
        let mut coords = vec![Rational::zero(); dim];
        coords[index] = Rational::one();
        CoordVec { basis, coords }
    }
}

impl CobMatrix {
    /// Wraps entries with tags; every diagonal entry must be nonzero.
    pub fn new(range: BasisId, domain: BasisId, entries: UpperTriangular) -> Result<Self> {
        if entries.dim() == 0 {
            return Err(Error::EmptyDimension);
        }
        if let Some(i) = entries.diagonal().position(Rational::is_zero) {
            return Err(Error::Singular(i));
        }
        if range.subspace() != domain.subspace() {
            return Err(Error::FilterMismatch(range, domain));
        }
        Ok(CobMatrix {
            range,
            domain,
            entries,
        })
    }

    pub fn identity(basis: BasisId, dim: usize) -> Result<Self> {
        CobMatrix::new(basis, basis, UpperTriangular::identity(dim))
    }

    pub fn range(&self) -> BasisId {
        self.range
    }

    pub fn domain(&self) -> BasisId {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn entries(&self) -> &UpperTriangular {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.entries.entry(row, col)
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        self.entries.column(col)
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.to_dense()
    }

    pub fn is_identity(&self) -> bool {
        self.range == self.domain && self.entries == UpperTriangular::identity(self.dim())
    }
}

/// `M_{M,b}`: the basis vectors of `basis` in monomial coordinates over the
/// same degrees.
fn monomial_matrix(basis: BasisId, dim: usize) -> Result<CobMatrix> {
    let monomial = BasisId::new(Family::Monomial, basis.subspace())?;
    let columns: Vec<Vec<Rational>> = (0..dim)
        .into_par_iter()
        .map(|j| {
            let p = basis.vector(j);
            (0..dim).map(|i| p.coeff(basis.degree_at(i))).collect()
        })
        .collect();
    CobMatrix::new(monomial, basis, UpperTriangular::from_columns(&columns)?)
}

/// Builds `M_{to,from}` through the monomials as exchange basis:
/// `M_{to,M} M_{M,from}` with `M_{to,M}` obtained by inverting `M_{M,to}`.
pub fn build_cob(from: BasisId, to: BasisId, dim: usize) -> Result<CobMatrix> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    if from.subspace() != to.subspace() {
        return Err(Error::FilterMismatch(from, to));
    }
    if from == to {
        return CobMatrix::identity(from, dim);
    }
    let from_monomial = monomial_matrix(from, dim)?;
    if to.family() == Family::Monomial {
        return Ok(from_monomial);
    }
    let to_monomial = inverse(&monomial_matrix(to, dim)?)?;
    compose(&to_monomial, &from_monomial)
}

/// `left ∘ right`, defined only when `left.domain == right.range`.
pub fn compose(left: &CobMatrix, right: &CobMatrix) -> Result<CobMatrix> {
    if left.domain != right.range {
        return Err(Error::ExchangeMismatch {
            left_domain: left.domain,
            right_range: right.range,
        });
    }
    let entries = left.entries.matmul(&right.entries)?;
    CobMatrix::new(left.range, right.domain, entries)
}

/// `M_{ts}^{-1} = M_{st}`.
pub fn inverse(m: &CobMatrix) -> Result<CobMatrix> {
    CobMatrix::new(m.domain, m.range, m.entries.inverse()?)
}

pub fn apply(m: &CobMatrix, v: &CoordVec) -> Result<CoordVec> {
    if v.basis != m.domain {
        return Err(Error::BasisMismatch {
            expected: m.domain,
            found: v.basis,
        });
    }
    Ok(CoordVec::new(m.range, m.entries.matvec(&v.coords)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Closure,
    Associativity,
    Inverse,
    Identity,
    Connectedness,
    Order,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Closure => "closure",
            Axiom::Associativity => "associativity",
            Axiom::Inverse => "inverse",
            Axiom::Identity => "identity",
            Axiom::Connectedness => "connectedness",
            Axiom::Order => "order",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Number of individual instances examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupoidReport {
    pub bases: Vec<BasisId>,
    pub dim: usize,
    pub elements: usize,
    pub checks: Vec<AxiomCheck>,
}

impl GroupoidReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Above this many bases, associativity is checked on a seeded random sample.
const EXHAUSTIVE_TRIPLES_MAX_BASES: usize = 4;
const SAMPLED_TRIPLES: usize = 512;

struct Tally {
    axiom: Axiom,
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally {
            axiom,
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom,
            passed: self.failure.is_none(),
            checked: self.checked,
            failure: self.failure,
        }
    }
}

/// Builds every `M_{ts}` over `bases` and checks the groupoid axioms
/// exactly.
pub fn verify_groupoid(bases: &[BasisId], dim: usize) -> Result<GroupoidReport> {
    let bases: Vec<BasisId> = bases
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if bases.is_empty() || dim == 0 {
        return Err(Error::EmptyDimension);
    }
    let m = bases.len();
    // elements[t][s] = M_{ts}
    let mut elements: Vec<Vec<CobMatrix>> = Vec::with_capacity(m);
    for &t in &bases {
        let row = bases
            .iter()
            .map(|&s| build_cob(s, t, dim))
            .collect::<Result<Vec<_>>>()?;
        elements.push(row);
    }
    let at = |t: usize, s: usize| &elements[t][s];

    let mut connected = Tally::new(Axiom::Connectedness);
    for t in 0..m {
        for s in 0..m {
            let e = at(t, s);
            connected.record(e.range == bases[t] && e.domain == bases[s], || {
                format!("no element tagged ({}, {})", bases[t], bases[s])
            });
        }
    }

    let mut order = Tally::new(Axiom::Order);
    let distinct: BTreeSet<(BasisId, BasisId)> = elements
        .iter()
        .flatten()
        .map(|e| (e.range, e.domain))
        .collect();
    let count = distinct.len();
    order.record(count == m * m, || {
        format!("{count} elements, expected {}", m * m)
    });

    let mut closure = Tally::new(Axiom::Closure);
    for (a, b) in (0..m).flat_map(|a| (0..m).map(move |b| (a, b))) {
        for (c, d) in (0..m).flat_map(|c| (0..m).map(move |d| (c, d))) {
            let (x, y) = (at(a, b), at(c, d));
            match compose(x, y) {
                Ok(p) => closure.record(b == c && &p == at(a, d), || {
                    format!(
                        "M({},{}) ∘ M({},{}) is not M({},{})",
                        bases[a], bases[b], bases[c], bases[d], bases[a], bases[d]
                    )
                }),
                Err(_) => closure.record(b != c, || {
                    format!(
                        "composable pair ({},{})∘({},{}) failed",
                        bases[a], bases[b], bases[c], bases[d]
                    )
                }),
            }
        }
    }

    let mut assoc = Tally::new(Axiom::Associativity);
    let mut check_triple = |a: usize, b: usize, c: usize, d: usize| {
        let (x, y, z) = (at(a, b), at(b, c), at(c, d));
        let left = compose(&compose(x, y)?, z)?;
        let right = compose(x, &compose(y, z)?)?;
        assoc.record(left == right, || {
            format!("({a},{b},{c},{d}) not associative")
        });
        Ok::<_, Error>(())
    };
    if m <= EXHAUSTIVE_TRIPLES_MAX_BASES {
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        check_triple(a, b, c, d)?;
                    }
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLED_TRIPLES {
            let pick = |rng: &mut StdRng| rng.gen_range(0..m);
            let (a, b, c, d) = (
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
                pick(&mut rng),
            );
            check_triple(a, b, c, d)?;
        }
    }

    let mut inv = Tally::new(Axiom::Inverse);
    let mut ident = Tally::new(Axiom::Identity);
    for t in 0..m {
        for s in 0..m {
            let e = at(t, s);
            let e_inv = inverse(e)?;
            inv.record(&e_inv == at(s, t), || {
                format!(
                    "inverse of M({},{}) differs from M({},{})",
                    bases[t], bases[s], bases[s], bases[t]
                )
            });
            let p = compose(e, &e_inv)?;
            inv.record(p.is_identity() && p.range == bases[t], || {
                format!(
                    "M({0},{1}) M({0},{1})^-1 is not the identity on {0}",
                    bases[t], bases[s]
                )
            });
            let id_t = at(t, t);
            let id_s = at(s, s);
            ident.record(
                id_t.is_identity() && &compose(id_t, e)? == e && &compose(e, id_s)? == e,
                || format!("identity law fails for M({},{})", bases[t], bases[s]),
            );
        }
    }

    Ok(GroupoidReport {
        bases,
        dim,
        elements: count,
        checks: vec![
            closure.finish(),
            assoc.finish(),
            inv.finish(),
            ident.finish(),
            connected.finish(),
            order.finish(),
        ],
    })
}

//! Coefficient functions and the dot-product solution method.
//!
//! A coefficient function `α(n, k)` of a mapping `s → t` gives the
//! coefficient of `t_{n-k}` in the expansion of `s_n`; in a change-of-basis
//! matrix it sits at row `n - k`, column `n`. For pairs of definite-parity
//! bases the odd-`k` values vanish and the compressed form
//! `β(n, k) = α(n, 2k)` is used instead.
//!
//! Composition of two mappings sharing an exchange basis gives
//! `α₃(n, k) = Σ_{v=0}^{k} α₁(n - v, k - v) α₂(n, v)`, with `α₁` on the
//! range side.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::basis::{basis_polynomial, BasisId, Family};
use crate::error::{Error, Result};
use crate::groupoid::{build_cob, CobMatrix};
use crate::rational::{binomial, factorial, pochhammer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    Alpha,
    Beta,
}

type EvalFn = dyn Fn(usize, usize) -> Result<Rational> + Send + Sync;

/// A coefficient function for the mapping `from → to`.
#[derive(Clone)]
pub struct CoeffFn {
    from: Family,
    to: Family,
    kind: CoeffKind,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for CoeffFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoeffFn")
            .field("from", &self.from)
            .field("to", &self.to)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

fn check_alpha_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k, max: n });
    }
    Ok(())
}

fn check_beta_range(n: usize, k: usize) -> Result<()> {
    if k > n / 2 {
        return Err(Error::IndexOutOfRange { n, k, max: n / 2 });
    }
    Ok(())
}

fn int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Coefficient of `T_{n-2k}` in `P_n`.
pub fn beta_legendre_to_chebyshev(n: usize, k: usize) -> Result<Rational> {
    check_beta_range(n, k)?;
    let value = if 2 * k < n {
        Rational::pow2(1 - 2 * n as i64) * int(binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k))
    } else {
        let c = binomial(n, n / 2);
        Rational::pow2(-2 * n as i64) * int(&c * &c)
    };
    Ok(value)
}

/// Coefficient of `T_{n-k}` in `x^n`. The `k = n` term is halved.
pub fn alpha_monomial_to_chebyshev(n: usize, k: usize) -> Result<Rational> {
    check_alpha_range(n, k)?;
    if k % 2 == 1 {
        return Ok(Rational::zero());
    }
    let c = int(binomial(n, k / 2));
    let exp = if k == n { -(n as i64) } else { 1 - n as i64 };
    Ok(Rational::pow2(exp) * c)
}

/// Coefficient of `x^{n-k}` in `L_n`:
/// `(-1)^{n-k} (n-k+1)_k / (k! (n-k)!)`.
pub fn alpha_laguerre_to_monomial(n: usize, k: usize) -> Result<Rational> {
    check_alpha_range(n, k)?;
    let num = int(pochhammer(n - k + 1, k));
    let den = factorial(k) * factorial(n - k);
    Ok(sign(n - k) * num.checked_div(&int(den))?)
}

/// Coefficient of `x^{n-2k}` in `H_n`:
/// `n! (-1)^k 2^{n-2k} / (k! (n-2k)!)`.
pub fn beta_hermite_to_monomial(n: usize, k: usize) -> Result<Rational> {
    check_beta_range(n, k)?;
    let num = int(factorial(n)) * Rational::pow2((n - 2 * k) as i64);
    let den = int(factorial(k) * factorial(n - 2 * k));
    Ok(sign(k) * num.checked_div(&den)?)
}

/// Coefficient of `T_{n-2k}` in `H_n` for odd `n`:
/// `2 Σ_{v=0}^{k} (-1)^v n! / (v! (k-v)! (n-k-v)!)`.
pub fn beta_hermite_to_chebyshev(n: usize, k: usize) -> Result<Rational> {
    if n.is_multiple_of(2) {
        return Err(Error::UnsupportedParity(format!(
            "the Hermite to Chebyshev closed form needs odd n, got {n}"
        )));
    }
    check_beta_range(n, k)?;
    let nf = factorial(n);
    let sum: Rational = (0..=k)
        .map(|v| {
            let den = factorial(v) * factorial(k - v) * factorial(n - k - v);
            sign(v) * int(&nf / den)
        })
        .sum();
    Ok(Rational::from(2) * sum)
}

impl CoeffFn {
    pub fn new(
        from: Family,
        to: Family,
        kind: CoeffKind,
        eval: impl Fn(usize, usize) -> Result<Rational> + Send + Sync + 'static,
    ) -> Self {
        CoeffFn {
            from,
            to,
            kind,
            eval: Arc::new(eval),
        }
    }

    pub fn from(&self) -> Family {
        self.from
    }

    pub fn to(&self) -> Family {
        self.to
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    /// Evaluates in the function's own indexing, after a range check.
    pub fn evaluate(&self, n: usize, k: usize) -> Result<Rational> {
        match self.kind {
            CoeffKind::Alpha => check_alpha_range(n, k)?,
            CoeffKind::Beta => check_beta_range(n, k)?,
        }
        (self.eval)(n, k)
    }

    /// `α(n, k)`; for beta kind, `β(n, k/2)` at even `k` and zero at odd `k`.
    pub fn alpha(&self, n: usize, k: usize) -> Result<Rational> {
        match self.kind {
            CoeffKind::Alpha => self.evaluate(n, k),
            CoeffKind::Beta => {
                check_alpha_range(n, k)?;
                if k % 2 == 1 {
                    Ok(Rational::zero())
                } else {
                    self.evaluate(n, k / 2)
                }
            }
        }
    }

    /// `β(n, k) = α(n, 2k)`.
    pub fn beta(&self, n: usize, k: usize) -> Result<Rational> {
        match self.kind {
            CoeffKind::Beta => self.evaluate(n, k),
            CoeffKind::Alpha => {
                check_beta_range(n, k)?;
                self.evaluate(n, 2 * k)
            }
        }
    }

    /// The re-indexed beta-kind view of an alpha-kind function.
    pub fn to_beta(&self) -> CoeffFn {
        if self.kind == CoeffKind::Beta {
            return self.clone();
        }
        let inner = self.clone();
        CoeffFn::new(self.from, self.to, CoeffKind::Beta, move |n, k| {
            inner.evaluate(n, 2 * k)
        })
    }

    /// `α(n, 0) = 1`, zero elsewhere.
    pub fn identity(family: Family) -> CoeffFn {
        CoeffFn::new(family, family, CoeffKind::Alpha, |_, k| {
            Ok(if k == 0 {
                Rational::one()
            } else {
                Rational::zero()
            })
        })
    }

    pub fn legendre_to_chebyshev() -> CoeffFn {
        CoeffFn::new(
            Family::Legendre,
            Family::ChebyshevT,
            CoeffKind::Beta,
            beta_legendre_to_chebyshev,
        )
    }

    pub fn monomial_to_chebyshev() -> CoeffFn {
        CoeffFn::new(
            Family::Monomial,
            Family::ChebyshevT,
            CoeffKind::Alpha,
            alpha_monomial_to_chebyshev,
        )
    }

    pub fn laguerre_to_monomial() -> CoeffFn {
        CoeffFn::new(
            Family::Laguerre,
            Family::Monomial,
            CoeffKind::Alpha,
            alpha_laguerre_to_monomial,
        )
    }

    pub fn hermite_to_monomial() -> CoeffFn {
        CoeffFn::new(
            Family::HermitePhysicist,
            Family::Monomial,
            CoeffKind::Beta,
            beta_hermite_to_monomial,
        )
    }

    /// Defined for odd `n` only.
    pub fn hermite_to_chebyshev() -> CoeffFn {
        CoeffFn::new(
            Family::HermitePhysicist,
            Family::ChebyshevT,
            CoeffKind::Beta,
            beta_hermite_to_chebyshev,
        )
    }

    /// `family → monomial` read off the generated basis polynomials.
    pub fn generated(family: Family) -> CoeffFn {
        CoeffFn::new(family, Family::Monomial, CoeffKind::Alpha, move |n, k| {
            Ok(basis_polynomial(family, n).coeff(n - k))
        })
    }

    /// Table lookup in a prebuilt full-basis matrix; degrees past the
    /// table are out of range.
    pub fn tabulated(matrix: CobMatrix) -> Result<CoeffFn> {
        let (from, to) = (matrix.domain(), matrix.range());
        if from != BasisId::full(from.family()) || to != BasisId::full(to.family()) {
            return Err(Error::UnsupportedParity(
                "tabulated coefficient functions need unfiltered bases".into(),
            ));
        }
        let size = matrix.dim();
        Ok(CoeffFn::new(
            from.family(),
            to.family(),
            CoeffKind::Alpha,
            move |n, k| {
                if n >= size {
                    return Err(Error::IndexOutOfRange {
                        n,
                        k,
                        max: size - 1,
                    });
                }
                Ok(matrix.entry(n - k, n))
            },
        ))
    }

    /// The closed form known for `from → to`, if any.
    pub fn closed_form(from: Family, to: Family) -> Option<CoeffFn> {
        use Family::*;
        match (from, to) {
            _ if from == to => Some(CoeffFn::identity(from)),
            (Legendre, ChebyshevT) => Some(CoeffFn::legendre_to_chebyshev()),
            (Monomial, ChebyshevT) => Some(CoeffFn::monomial_to_chebyshev()),
            (Laguerre, Monomial) => Some(CoeffFn::laguerre_to_monomial()),
            (HermitePhysicist, Monomial) => Some(CoeffFn::hermite_to_monomial()),
            (HermitePhysicist, ChebyshevT) => Some(CoeffFn::hermite_to_chebyshev()),
            _ => None,
        }
    }
}

fn check_exchange(f1: &CoeffFn, f2: &CoeffFn) -> Result<()> {
    if f1.from != f2.to {
        return Err(Error::ExchangeMismatch {
            left_domain: BasisId::full(f1.from),
            right_range: BasisId::full(f2.to),
        });
    }
    Ok(())
}

/// `α₃(n, k) = Σ_{v=0}^{k} α₁(n - v, k - v) α₂(n, v)` where `f1: b → t`
/// and `f2: s → b`.
pub fn alpha3_dot(f1: &CoeffFn, f2: &CoeffFn, n: usize, k: usize) -> Result<Rational> {
    check_exchange(f1, f2)?;
    check_alpha_range(n, k)?;
    (0..=k)
        .map(|v| Ok(f1.alpha(n - v, k - v)? * f2.alpha(n, v)?))
        .sum()
}

/// [`alpha3_dot`] skipping the terms with odd `k - v`, valid when `f1`
/// vanishes at odd second argument. That is probed at `(n, 1)`.
pub fn alpha3_dot_case3(f1: &CoeffFn, f2: &CoeffFn, n: usize, k: usize) -> Result<Rational> {
    check_exchange(f1, f2)?;
    check_alpha_range(n, k)?;
    if n > 0 {
        let probe = f1.alpha(n, 1)?;
        if !probe.is_zero() {
            return Err(Error::Case3Precondition { n, value: probe });
        }
    }
    (0..=k)
        .filter(|v| (k - v).is_multiple_of(2))
        .map(|v| Ok(f1.alpha(n - v, k - v)? * f2.alpha(n, v)?))
        .sum()
}

/// The `((n₁, k₁), (n₂, k₂))` argument pairs of the terms
/// `β₁(n₁, k₁) β₂(n₂, k₂)` summed by [`beta3_dot_case4`].
pub fn case4_terms(n: usize, k: usize) -> Vec<((usize, usize), (usize, usize))> {
    (0..=k).map(|v| ((n - 2 * v, k - v), (n, v))).collect()
}

/// `β₃(n, k) = Σ_{v=0}^{k} β₁(n - 2v, k - v) β₂(n, v)` for odd `n`.
pub fn beta3_dot_case4(f1: &CoeffFn, f2: &CoeffFn, n: usize, k: usize) -> Result<Rational> {
    if n.is_multiple_of(2) {
        return Err(Error::UnsupportedParity(format!(
            "case 4 needs odd n, got {n}; for even sides drop the first row and column (case 1 with k1 = 1)"
        )));
    }
    if f1.kind != CoeffKind::Beta || f2.kind != CoeffKind::Beta {
        return Err(Error::NotBetaKind);
    }
    check_exchange(f1, f2)?;
    check_beta_range(n, k)?;
    case4_terms(n, k)
        .into_iter()
        .map(|((n1, k1), (n2, k2))| Ok(f1.beta(n1, k1)? * f2.beta(n2, k2)?))
        .sum()
}

/// How [`expand`] obtained its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpandPath {
    Identity,
    ClosedForm,
    Generated,
    DotProduct,
    Generic,
}

/// Sparse expansion of `from_n` in the `to` basis as
/// `(target degree, coefficient)`, descending by degree, zeros omitted.
pub fn expand(from: Family, n: usize, to: Family) -> Result<Vec<(usize, Rational)>> {
    expand_with_path(from, n, to).map(|(terms, _)| terms)
}

pub fn expand_with_path(
    from: Family,
    n: usize,
    to: Family,
) -> Result<(Vec<(usize, Rational)>, ExpandPath)> {
    let collect = |f: &dyn Fn(usize) -> Result<Rational>| -> Result<Vec<(usize, Rational)>> {
        let mut terms = Vec::new();
        for k in 0..=n {
            let c = f(k)?;
            if !c.is_zero() {
                terms.push((n - k, c));
            }
        }
        Ok(terms)
    };
    if from == to {
        return Ok((vec![(n, Rational::one())], ExpandPath::Identity));
    }
    let direct = CoeffFn::closed_form(from, to).filter(|f| {
        !(f.from == Family::HermitePhysicist && f.to == Family::ChebyshevT && n.is_multiple_of(2))
    });
    if let Some(f) = direct {
        return Ok((collect(&|k| f.alpha(n, k))?, ExpandPath::ClosedForm));
    }
    if to == Family::Monomial {
        let f = CoeffFn::generated(from);
        return Ok((collect(&|k| f.alpha(n, k))?, ExpandPath::Generated));
    }
    if let Some(f1) = CoeffFn::closed_form(Family::Monomial, to) {
        let f2 = CoeffFn::closed_form(from, Family::Monomial)
            .unwrap_or_else(|| CoeffFn::generated(from));
        let odd_vanishing = n == 0 || f1.alpha(n, 1)?.is_zero();
        let terms = if odd_vanishing {
            collect(&|k| alpha3_dot_case3(&f1, &f2, n, k))?
        } else {
            collect(&|k| alpha3_dot(&f1, &f2, n, k))?
        };
        return Ok((terms, ExpandPath::DotProduct));
    }
    let m = build_cob(BasisId::full(from), BasisId::full(to), n + 1)?;
    Ok((collect(&|k| Ok(m.entry(n - k, n)))?, ExpandPath::Generic))
}

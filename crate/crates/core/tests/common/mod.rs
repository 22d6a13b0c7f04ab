//! Test-only helpers and an independent oracle.
//!
//! The oracle regenerates every catalog family from its three-term
//! recurrence on plain coefficient vectors (shifted Legendre by its own
//! recurrence rather than by substitution) and expands one basis in
//! another with a direct triangular solve against the monomial system.

#![allow(dead_code)]

use cobg_core::{tri_solve, Family, Rational, UpperTriangular};

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn row(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| q(s)).collect()
}

pub fn dense(rows: &[&[&str]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| row(r)).collect()
}

pub fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
        .collect()
}

pub fn matmul_dense(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

type Coeffs = Vec<Rational>;

fn lin(a: &Coeffs, ca: Rational, shift_a: bool, b: &Coeffs, cb: Rational, len: usize) -> Coeffs {
    let mut out = vec![Rational::zero(); len];
    for (i, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let idx = if shift_a { i + 1 } else { i };
        out[idx] += c * &ca;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c * &cb;
    }
    out
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// Monomial coefficients of members `0..=max` of `family`, each padded to
/// length `max + 1`.
pub fn oracle_polys(family: Family, max: usize) -> Vec<Coeffs> {
    let len = max + 2;
    let mut out: Vec<Coeffs> = Vec::new();
    for n in 0..=max {
        let mut p = vec![Rational::zero(); len];
        let m = n as i64;
        match (family, n) {
            (Family::Monomial, _) => p[n] = r(1),
            (_, 0) => p[0] = r(1),
            (Family::ChebyshevT, 1) | (Family::Legendre, 1) => p[1] = r(1),
            (Family::HermitePhysicist, 1) => p[1] = r(2),
            (Family::Laguerre, 1) => {
                p[0] = r(1);
                p[1] = r(-1);
            }
            (Family::LegendreShifted, 1) => {
                p[0] = r(-1);
                p[1] = r(2);
            }
            (Family::ChebyshevT, _) => {
                p = lin(&out[n - 1], r(2), true, &out[n - 2], r(-1), len);
            }
            (Family::HermitePhysicist, _) => {
                p = lin(&out[n - 1], r(2), true, &out[n - 2], r(-2 * (m - 1)), len);
            }
            (Family::Legendre, _) => {
                let inv = Rational::frac(1, m);
                p = lin(
                    &out[n - 1],
                    r(2 * m - 1) * &inv,
                    true,
                    &out[n - 2],
                    r(1 - m) * &inv,
                    len,
                );
            }
            (Family::Laguerre, _) => {
                // n L_n = (2n - 1) L_{n-1} - x L_{n-1} - (n - 1) L_{n-2}
                let inv = Rational::frac(1, m);
                let a = lin(
                    &out[n - 1],
                    r(-1) * &inv,
                    true,
                    &out[n - 2],
                    r(1 - m) * &inv,
                    len,
                );
                p = lin(&out[n - 1], r(2 * m - 1) * &inv, false, &a, r(1), len);
            }
            (Family::LegendreShifted, _) => {
                // n P~_n = (2n - 1)(2x - 1) P~_{n-1} - (n - 1) P~_{n-2}
                let inv = Rational::frac(1, m);
                let c = r(2 * m - 1) * &inv;
                let two_x = lin(
                    &out[n - 1],
                    r(2) * &c,
                    true,
                    &out[n - 2],
                    r(1 - m) * &inv,
                    len,
                );
                p = lin(&out[n - 1], -c, false, &two_x, r(1), len);
            }
        }
        p.truncate(len);
        out.push(p);
    }
    out.into_iter()
        .map(|mut p| {
            p.truncate(max + 1);
            p
        })
        .collect()
}

/// Coordinates of `from_n` in the `to` basis (length `n + 1`, ascending).
pub fn oracle_expansion(from: Family, to: Family, n: usize) -> Vec<Rational> {
    let target = oracle_polys(to, n);
    let source = oracle_polys(from, n);
    let system = UpperTriangular::from_columns(&target).unwrap();
    tri_solve(&system, &source[n]).unwrap()
}

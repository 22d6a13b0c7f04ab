//! Compressed storage of change-of-basis matrices.
//!
//! Four exclusions shrink an `m × m` upper-triangular matrix:
//!
//! 1. drop the first `k1` rows and columns;
//! 2. drop the last `k2` rows and columns;
//! 3. drop entries `(i, j)` with `j - i` odd;
//! 4. on an odd side, keep only every other row and column, starting with
//!    the first.
//!
//! Cases 1 and 2 are truncations chosen by the caller. Cases 3 and 4 must be
//! lossless: [`compress`] checks that every entry they would drop from a
//! kept column is zero.

use serde::{Deserialize, Serialize};

use crate::basis::BasisId;
use crate::error::{Error, Result};
use crate::groupoid::CobMatrix;
use crate::rational::Rational;
use crate::triangular::packed_len;

/// Active exclusions on an `m × m` matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct CompressionSpec {
    m: usize,
    case1: Option<usize>,
    case2: Option<usize>,
    case3: bool,
    case4: bool,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    case1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    case2: Option<usize>,
    #[serde(default)]
    case3: bool,
    #[serde(default)]
    case4: bool,
}

impl TryFrom<RawSpec> for CompressionSpec {
    type Error = Error;
    fn try_from(r: RawSpec) -> Result<Self> {
        CompressionSpec::new(r.m, r.case1, r.case2, r.case3, r.case4)
    }
}

impl From<CompressionSpec> for RawSpec {
    fn from(s: CompressionSpec) -> Self {
        RawSpec {
            m: s.m,
            case1: s.case1,
            case2: s.case2,
            case3: s.case3,
            case4: s.case4,
        }
    }
}

impl CompressionSpec {
    /// `case1`/`case2` carry `k1`/`k2`. Case 4 needs the side left after
    /// cases 1 and 2 to be odd.
    pub fn new(
        m: usize,
        case1: Option<usize>,
        case2: Option<usize>,
        case3: bool,
        case4: bool,
    ) -> Result<Self> {
        let (k1, k2) = (case1.unwrap_or(0), case2.unwrap_or(0));
        if m == 0 {
            return Err(Error::InvalidCompression(
                "matrix side must be at least 1".into(),
            ));
        }
        if k1 + k2 >= m {
            return Err(Error::InvalidCompression(format!(
                "k1 + k2 = {} must be less than m = {m}",
                k1 + k2
            )));
        }
        let side = m - k1 - k2;
        if case4 && side.is_multiple_of(2) {
            return Err(Error::InvalidCompression(format!(
                "case 4 needs an odd side but {side} remains; apply case 1 with k1 = 1 first"
            )));
        }
        Ok(CompressionSpec {
            m,
            case1,
            case2,
            case3,
            case4,
        })
    }

    pub fn none(m: usize) -> Result<Self> {
        Self::new(m, None, None, false, false)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k1(&self) -> usize {
        self.case1.unwrap_or(0)
    }

    pub fn k2(&self) -> usize {
        self.case2.unwrap_or(0)
    }

    pub fn case3(&self) -> bool {
        self.case3
    }

    pub fn case4(&self) -> bool {
        self.case4
    }

    /// Side left after cases 1 and 2.
    pub fn side(&self) -> usize {
        self.m - self.k1() - self.k2()
    }

    /// Original indices of the rows and columns that survive.
    pub fn retained(&self) -> Vec<usize> {
        let range = self.k1()..self.m - self.k2();
        if self.case4 {
            range.step_by(2).collect()
        } else {
            range.collect()
        }
    }

    /// Whether `(row, col)` of the original matrix is stored. Only
    /// meaningful for retained rows and columns.
    fn stores(&self, row: usize, col: usize) -> bool {
        row <= col && !(self.case3 && (col - row) % 2 == 1)
    }
}

/// Triangle count `(s² + s) / 2`.
pub fn count_full(m: usize) -> usize {
    (m * m + m) / 2
}

pub fn count_case1(m: usize, k1: usize) -> usize {
    let s = m - k1;
    (s * s + s) / 2
}

pub fn count_case2(m: usize, k2: usize) -> usize {
    let s = m - k2;
    (s * s + s) / 2
}

pub fn count_case3(m: usize) -> usize {
    if m.is_multiple_of(2) {
        m * (m + 2) / 4
    } else {
        (m + 1) * (m + 1) / 4
    }
}

pub fn count_case4(m: usize) -> usize {
    if m.is_multiple_of(2) {
        m * (m + 2) / 8
    } else {
        (m + 1) * (m + 3) / 8
    }
}

/// Number of stored entries under `spec`: the case-3/4 formula applied to
/// the side left after cases 1 and 2.
pub fn included_count(spec: &CompressionSpec) -> usize {
    let side = spec.side();
    if spec.case4 {
        count_case4(side)
    } else if spec.case3 {
        count_case3(side)
    } else {
        count_full(side)
    }
}

/// A matrix stored under a [`CompressionSpec`]. `packed` walks the retained
/// rows in order and, within each, the stored retained columns in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedMatrix {
    spec: CompressionSpec,
    range: BasisId,
    domain: BasisId,
    packed: Vec<Rational>,
}

pub fn compress(m: &CobMatrix, spec: &CompressionSpec) -> Result<CompressedMatrix> {
    if m.dim() != spec.m {
        return Err(Error::DimensionMismatch {
            expected: spec.m,
            found: m.dim(),
        });
    }
    let retained = spec.retained();
    let window = spec.k1()..spec.m - spec.k2();
    let mut keep = vec![false; spec.m];
    for &i in &retained {
        keep[i] = true;
    }
    for &j in &retained {
        for i in window.start..=j {
            let dropped = !keep[i] || !spec.stores(i, j);
            if dropped {
                if let Some(v) = m.entries().get(i, j).filter(|v| !v.is_zero()) {
                    return Err(Error::LossyCompression {
                        row: i,
                        col: j,
                        value: v.clone(),
                    });
                }
            }
        }
    }
    let mut packed = Vec::with_capacity(included_count(spec));
    for (a, &i) in retained.iter().enumerate() {
        for &j in &retained[a..] {
            if spec.stores(i, j) {
                packed.push(m.entry(i, j));
            }
        }
    }
    Ok(CompressedMatrix {
        spec: *spec,
        range: m.range(),
        domain: m.domain(),
        packed,
    })
}

impl CompressedMatrix {
    pub fn spec(&self) -> &CompressionSpec {
        &self.spec
    }

    pub fn range(&self) -> BasisId {
        self.range
    }

    pub fn domain(&self) -> BasisId {
        self.domain
    }

    pub fn packed(&self) -> &[Rational] {
        &self.packed
    }

    pub fn stored_len(&self) -> usize {
        self.packed.len()
    }

    /// Dense retained submatrix, zeros where nothing is stored.
    pub fn decompress(&self) -> Vec<Vec<Rational>> {
        let retained = self.spec.retained();
        let r = retained.len();
        let mut rows = vec![vec![Rational::zero(); r]; r];
        let mut it = self.packed.iter();
        for a in 0..r {
            for b in a..r {
                if self.spec.stores(retained[a], retained[b]) {
                    rows[a][b] = it.next().expect("packed length matches spec").clone();
                }
            }
        }
        rows
    }

    /// Full `m × m` matrix with retained entries in place and zeros elsewhere.
    pub fn to_full(&self) -> Vec<Vec<Rational>> {
        let retained = self.spec.retained();
        let small = self.decompress();
        let mut full = vec![vec![Rational::zero(); self.spec.m]; self.spec.m];
        for (a, &i) in retained.iter().enumerate() {
            for (b, &j) in retained.iter().enumerate() {
                full[i][j] = small[a][b].clone();
            }
        }
        full
    }

    pub(crate) fn from_parts(
        spec: CompressionSpec,
        range: BasisId,
        domain: BasisId,
        rows: &[Vec<Rational>],
    ) -> Result<Self> {
        let retained = spec.retained();
        let r = retained.len();
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(Error::Format(format!(
                "expected a {r} x {r} retained submatrix"
            )));
        }
        let mut packed = Vec::with_capacity(included_count(&spec));
        for a in 0..r {
            for b in 0..r {
                let v = &rows[a][b];
                if b >= a && spec.stores(retained[a], retained[b]) {
                    packed.push(v.clone());
                } else if !v.is_zero() {
                    return Err(Error::Format(format!(
                        "nonzero value at unstored position ({a}, {b})"
                    )));
                }
            }
        }
        Ok(CompressedMatrix {
            spec,
            range,
            domain,
            packed,
        })
    }
}

/// Stored length if `spec` were applied with no exclusions beyond the
/// triangle; equals `packed_len(m)`.
pub fn uncompressed_len(spec: &CompressionSpec) -> usize {
    packed_len(spec.m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::Family;
    use crate::groupoid::build_cob;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
            .collect()
    }

    fn cob(from: Family, to: Family, dim: usize) -> CobMatrix {
        build_cob(BasisId::full(from), BasisId::full(to), dim).unwrap()
    }

    #[test]
    fn count_examples() {
        let c3 = CompressionSpec::new(6, None, None, true, false).unwrap();
        assert_eq!(included_count(&c3), 12);
        let c1 = CompressionSpec::new(8, Some(1), None, false, false).unwrap();
        assert_eq!(included_count(&c1), 28);
        let c4 = CompressionSpec::new(7, None, None, false, true).unwrap();
        assert_eq!(included_count(&c4), 10);
        assert_eq!(count_case4(8), 10);
        assert_eq!(uncompressed_len(&c4), 28);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            CompressionSpec::new(8, None, None, false, true),
            Err(Error::InvalidCompression(msg)) if msg.contains("k1 = 1")
        ));
        assert!(CompressionSpec::new(4, Some(2), Some(2), false, false).is_err());
        assert!(CompressionSpec::new(0, None, None, false, false).is_err());
        assert!(CompressionSpec::new(8, Some(1), None, true, true).is_ok());
    }

    #[test]
    fn hermite_chebyshev_odd_chain() {
        let th = cob(Family::HermitePhysicist, Family::ChebyshevT, 8);
        let spec = CompressionSpec::new(8, Some(1), None, false, true).unwrap();
        let c = compress(&th, &spec).unwrap();
        assert_eq!(spec.retained(), vec![1, 3, 5, 7]);
        assert_eq!(
            c.decompress(),
            dense(&[
                &[2, -6, 20, 70],
                &[0, 2, -30, 462],
                &[0, 0, 2, -70],
                &[0, 0, 0, 2]
            ])
        );
        assert_eq!(c.stored_len(), 10);
    }

    #[test]
    fn hermite_chebyshev_even_chain() {
        let th = cob(Family::HermitePhysicist, Family::ChebyshevT, 8);
        let spec = CompressionSpec::new(8, None, Some(1), false, true).unwrap();
        let c = compress(&th, &spec).unwrap();
        assert_eq!(
            c.decompress(),
            dense(&[
                &[1, 0, -6, 80],
                &[0, 2, -16, 150],
                &[0, 0, 2, -48],
                &[0, 0, 0, 2]
            ])
        );
    }

    #[test]
    fn identity_under_case3() {
        let id = CobMatrix::identity(BasisId::full(Family::Legendre), 9).unwrap();
        let spec = CompressionSpec::new(9, None, None, true, false).unwrap();
        let c = compress(&id, &spec).unwrap();
        assert_eq!(c.stored_len(), count_case3(9));
        assert_eq!(c.decompress(), id.rows());
    }

    #[test]
    fn parity_loss_is_detected() {
        let tl = cob(Family::Laguerre, Family::ChebyshevT, 7);
        let spec = CompressionSpec::new(7, None, None, false, true).unwrap();
        assert!(matches!(
            compress(&tl, &spec),
            Err(Error::LossyCompression { .. })
        ));
        let spec3 = CompressionSpec::new(7, None, None, true, false).unwrap();
        assert!(matches!(
            compress(&tl, &spec3),
            Err(Error::LossyCompression { row: 0, col: 1, .. })
        ));
        // the monomial-to-Chebyshev factor is case-3 sparse
        let tm = cob(Family::Monomial, Family::ChebyshevT, 6);
        let spec = CompressionSpec::new(6, None, None, true, false).unwrap();
        assert_eq!(compress(&tm, &spec).unwrap().stored_len(), 12);
    }

    #[test]
    fn case1_truncation_matches_worked_example() {
        // M_MT up to degree 4 without the vectors 1 and x
        let mt = cob(Family::ChebyshevT, Family::Monomial, 5);
        let spec = CompressionSpec::new(5, Some(2), None, false, false).unwrap();
        let c = compress(&mt, &spec).unwrap();
        assert_eq!(
            c.decompress(),
            dense(&[&[2, 0, -8], &[0, 4, 0], &[0, 0, 8]])
        );
        let even = CompressionSpec::new(5, None, None, false, true).unwrap();
        assert_eq!(
            compress(&mt, &even).unwrap().decompress(),
            dense(&[&[1, -1, 1], &[0, 2, -8], &[0, 0, 8]])
        );
        let both = CompressionSpec::new(5, Some(2), None, false, true).unwrap();
        assert_eq!(
            compress(&mt, &both).unwrap().decompress(),
            dense(&[&[2, -8], &[0, 8]])
        );
        let odd = CompressionSpec::new(5, Some(1), Some(1), false, true).unwrap();
        assert_eq!(
            compress(&mt, &odd).unwrap().decompress(),
            dense(&[&[1, -3], &[0, 4]])
        );
    }

    #[test]
    fn to_full_places_entries() {
        let tm = cob(Family::Monomial, Family::ChebyshevT, 8);
        let spec = CompressionSpec::new(8, Some(1), None, false, true).unwrap();
        let full = compress(&tm, &spec).unwrap().to_full();
        assert_eq!(full[1][7], q("35/64"));
        assert_eq!(full[7][7], q("1/64"));
        assert!(full[0][4].is_zero());
        assert!(full[2][2].is_zero());
    }

    #[test]
    fn dim_mismatch() {
        let tm = cob(Family::Monomial, Family::ChebyshevT, 5);
        let spec = CompressionSpec::none(6).unwrap();
        assert!(matches!(
            compress(&tm, &spec),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

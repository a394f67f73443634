//! Exact rational linear algebra and the two convex-geometry primitives the
//! stratification needs: nearest points to the origin on affine hulls and on
//! convex hulls, and exact convex-hull membership.
//!
//! Everything is computed over `BigRational`. There are no tolerances.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A vector of exact rationals. Ordering is lexicographic on coordinates and
/// doubles as the canonical key for weights and 1-PS directions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVec(Vec<Rational>);

impl QVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVec(coords)
    }

    pub fn zeros(n: usize) -> Self {
        QVec(vec![Rational::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVec(coords.iter().map(|&c| int(c)).collect())
    }

    /// Unit vector `e_i` in dimension `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &QVec) -> Result<Rational> {
        check_dims(self, other)?;
        Ok(self.dot_unchecked(other))
    }

    pub(crate) fn dot_unchecked(&self, other: &QVec) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn norm2(&self) -> Rational {
        self.dot_unchecked(self)
    }

    pub fn scale(&self, t: &Rational) -> QVec {
        QVec(self.0.iter().map(|c| c * t).collect())
    }

    /// `self + t * other`
    pub fn add_scaled(&self, t: &Rational, other: &QVec) -> QVec {
        debug_assert_eq!(self.len(), other.len());
        if t.is_zero() {
            return self.clone();
        }
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a + t * b).collect())
    }
}

impl Index<usize> for QVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        debug_assert_eq!(self.len(), rhs.len());
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        debug_assert_eq!(self.len(), rhs.len());
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dims(a: &QVec, b: &QVec) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { left: a.len(), right: b.len() });
    }
    Ok(())
}

fn check_all(points: &[QVec]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    for p in points {
        check_dims(first, p)?;
    }
    Ok(first.len())
}

pub fn dot(u: &QVec, v: &QVec) -> Result<Rational> {
    u.dot(v)
}

/// Incremental Gram-Schmidt basis over the rationals (no normalisation).
#[derive(Clone, Debug, Default)]
pub(crate) struct OrthoBasis {
    vecs: Vec<(QVec, Rational)>,
}

impl OrthoBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.vecs.len()
    }

    /// Component of `v` orthogonal to the current span.
    pub fn residual(&self, v: &QVec) -> QVec {
        let mut r = v.clone();
        for (u, n2) in &self.vecs {
            let c = r.dot_unchecked(u);
            if !c.is_zero() {
                r = r.add_scaled(&(-(c / n2)), u);
            }
        }
        r
    }

    /// Adds `v` to the span; returns the residual if it was independent.
    pub fn push(&mut self, v: &QVec) -> Option<QVec> {
        let r = self.residual(v);
        if r.is_zero() {
            return None;
        }
        let n2 = r.norm2();
        self.vecs.push((r.clone(), n2));
        Some(r)
    }
}

/// A finite generating set of an affine subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpan {
    points: Vec<QVec>,
    dim: usize,
}

impl AffineSpan {
    pub fn new(points: Vec<QVec>) -> Result<Self> {
        check_all(&points)?;
        let mut basis = OrthoBasis::new();
        for p in &points[1..] {
            basis.push(&(p - &points[0]));
        }
        let dim = basis.rank();
        Ok(AffineSpan { points, dim })
    }

    pub fn points(&self) -> &[QVec] {
        &self.points
    }

    /// Affine dimension: rank of the differences `p_i - p_0`.
    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Point of the affine hull of `span` closest to the origin.
pub fn min_norm_point_affine(span: &AffineSpan) -> QVec {
    let p0 = &span.points[0];
    let mut basis = OrthoBasis::new();
    for p in &span.points[1..] {
        basis.push(&(p - p0));
    }
    basis.residual(p0)
}

/// Solves `a x = b` exactly. Returns `None` when `a` is singular.
pub(crate) fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        let pivot = a[col][col..].to_vec();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for (x, p) in a[r][col..].iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
            let sub = &f * &b[col];
            b[r] -= sub;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Affine coefficients (summing to one) of the min-norm point of the affine
/// hull of an affinely independent set.
fn affine_min_norm_coeffs(pts: &[&QVec]) -> Option<Vec<Rational>> {
    let k = pts.len();
    let mut a = vec![vec![Rational::zero(); k + 1]; k + 1];
    for i in 0..k {
        for j in i..k {
            let g = pts[i].dot_unchecked(pts[j]);
            a[j][i] = g.clone();
            a[i][j] = g;
        }
        a[i][k] = Rational::one();
        a[k][i] = Rational::one();
    }
    let mut b = vec![Rational::zero(); k + 1];
    b[k] = Rational::one();
    let mut x = solve(a, b)?;
    x.truncate(k);
    Some(x)
}

fn combine(pts: &[&QVec], coeffs: &[Rational]) -> QVec {
    let mut acc = QVec::zeros(pts[0].len());
    for (p, c) in pts.iter().zip(coeffs) {
        acc = acc.add_scaled(c, p);
    }
    acc
}

/// Nearest point to the origin of a convex hull together with the convex
/// weights that express it over the generators.
#[derive(Clone, Debug)]
pub struct HullPoint {
    pub point: QVec,
    /// `(generator index, weight)` pairs with positive weights summing to one.
    pub weights: Vec<(usize, Rational)>,
}

/// Wolfe's nearest-point procedure in exact arithmetic.
pub fn min_norm_hull_point(points: &[QVec]) -> Result<HullPoint> {
    check_all(points)?;

    let start = (0..points.len())
        .min_by(|&i, &j| points[i].norm2().cmp(&points[j].norm2()))
        .expect("nonempty");
    let mut corral: Vec<usize> = vec![start];
    let mut w: Vec<Rational> = vec![Rational::one()];
    let mut x = points[start].clone();

    loop {
        // Major cycle: most violating generator.
        let xx = x.norm2();
        let (best, best_val) = points
            .iter()
            .enumerate()
            .map(|(i, v)| (i, x.dot_unchecked(v)))
            .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
            .expect("nonempty");
        if best_val >= xx || corral.contains(&best) {
            break;
        }
        corral.push(best);
        w.push(Rational::zero());

        // Minor cycles.
        loop {
            let pts: Vec<&QVec> = corral.iter().map(|&i| &points[i]).collect();
            let alpha = affine_min_norm_coeffs(&pts)
                .expect("corral stays affinely independent");
            if alpha.iter().all(|a| a.is_positive()) {
                x = combine(&pts, &alpha);
                w = alpha;
                break;
            }
            let mut theta: Option<Rational> = None;
            for (wi, ai) in w.iter().zip(&alpha) {
                if !ai.is_positive() {
                    let t = wi / (wi - ai);
                    if theta.as_ref().is_none_or(|th| &t < th) {
                        theta = Some(t);
                    }
                }
            }
            let theta = theta.expect("some coefficient is nonpositive");
            let one_minus = Rational::one() - &theta;
            w = w
                .iter()
                .zip(&alpha)
                .map(|(wi, ai)| &theta * ai + &one_minus * wi)
                .collect();
            let mut keep_c = Vec::with_capacity(corral.len());
            let mut keep_w = Vec::with_capacity(corral.len());
            for (c, wi) in corral.iter().zip(w.iter()) {
                if wi.is_positive() {
                    keep_c.push(*c);
                    keep_w.push(wi.clone());
                }
            }
            corral = keep_c;
            w = keep_w;
        }
    }

    let hp = HullPoint { point: x, weights: corral.into_iter().zip(w).collect() };
    assert!(certify(&hp, points), "min-norm certificate failed");
    Ok(hp)
}

/// Exact optimality certificate: `q` is a convex combination of the
/// generators and `<v - q, q> >= 0` for every generator `v`.
fn certify(hp: &HullPoint, points: &[QVec]) -> bool {
    let total: Rational = hp.weights.iter().map(|(_, w)| w.clone()).sum();
    if !total.is_one() || hp.weights.iter().any(|(_, w)| w.is_negative()) {
        return false;
    }
    let mut acc = QVec::zeros(hp.point.len());
    for (i, w) in &hp.weights {
        acc = acc.add_scaled(w, &points[*i]);
    }
    if acc != hp.point {
        return false;
    }
    let qq = hp.point.norm2();
    points.iter().all(|v| v.dot_unchecked(&hp.point) >= qq)
}

/// Point of `conv(points)` of minimal norm.
pub fn min_norm_point_hull(points: &[QVec]) -> Result<QVec> {
    Ok(min_norm_hull_point(points)?.point)
}

/// True iff `<v - q, q> >= 0` for every `v` in `points`.
pub fn satisfies_optimality(q: &QVec, points: &[QVec]) -> bool {
    let qq = q.norm2();
    points.iter().all(|v| v.dot_unchecked(q) >= qq)
}

/// Exact convex-hull membership, decided by phase one of a dense simplex
/// method with Bland's rule.
pub fn in_hull(p: &QVec, points: &[QVec]) -> Result<bool> {
    check_all(points)?;
    check_dims(p, &points[0])?;
    let d = p.len();
    let n = points.len();
    let m = d + 1;

    // Rows: sum_j x_j v_j[i] = p[i]; sum_j x_j = 1. Columns: n structural
    // followed by m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row = vec![Rational::zero(); width];
        for (j, v) in points.iter().enumerate() {
            row[j] = if i < d { v[i].clone() } else { Rational::one() };
        }
        let rhs = if i < d { p[i].clone() } else { Rational::one() };
        if rhs.is_negative() {
            for c in row.iter_mut().take(n) {
                *c = -&*c;
            }
            row[width - 1] = -rhs;
        } else {
            row[width - 1] = rhs;
        }
        row[n + i] = Rational::one();
        t.push(row);
    }
    // Objective row holds reduced costs of minimising the artificial sum.
    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for (j, c) in row.iter().enumerate() {
            if j < n || j == width - 1 {
                obj[j] -= c;
            }
        }
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            break;
        };
        let inv = t[r][enter].recip();
        for c in t[r].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (c, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *c -= &f * pv;
                }
            }
        }
        basis[r] = enter;
    }
    Ok(t[m][width - 1].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[(i64, i64)]) -> QVec {
        QVec::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(&QVec::from_ints(&[1, 0]), &QVec::from_ints(&[0, 1])).unwrap(), int(0));
        assert_eq!(dot(&QVec::from_ints(&[1, 1]), &QVec::from_ints(&[1, 1])).unwrap(), int(2));
        assert_eq!(dot(&q(&[(1, 2), (1, 2)]), &QVec::from_ints(&[1, -1])).unwrap(), int(0));
    }

    #[test]
    fn dot_length_mismatch() {
        let err = dot(&QVec::from_ints(&[1, 0]), &QVec::from_ints(&[1])).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 1 });
    }

    #[test]
    fn affine_examples() {
        let s = AffineSpan::new(vec![QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])]).unwrap();
        assert_eq!(min_norm_point_affine(&s), q(&[(1, 2), (1, 2)]));
        let s = AffineSpan::new(vec![QVec::from_ints(&[2, 0])]).unwrap();
        assert_eq!(min_norm_point_affine(&s), QVec::from_ints(&[2, 0]));
        assert_eq!(s.dim(), 0);
        let s = AffineSpan::new(vec![
            QVec::from_ints(&[1, 1]),
            QVec::from_ints(&[1, -1]),
            QVec::from_ints(&[1, 0]),
        ])
        .unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(min_norm_point_affine(&s), QVec::from_ints(&[1, 0]));
    }

    #[test]
    fn affine_rejects_bad_input() {
        assert_eq!(AffineSpan::new(vec![]).unwrap_err(), Error::EmptyPointSet);
        assert!(matches!(
            AffineSpan::new(vec![QVec::from_ints(&[1]), QVec::from_ints(&[1, 2])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hull_examples() {
        let p = [QVec::from_ints(&[1, 0]), QVec::from_ints(&[-1, 0])];
        assert_eq!(min_norm_point_hull(&p).unwrap(), QVec::from_ints(&[0, 0]));
        let p = [QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])];
        assert_eq!(min_norm_point_hull(&p).unwrap(), q(&[(1, 2), (1, 2)]));
        let p = [QVec::from_ints(&[2, 1]), QVec::from_ints(&[1, 2]), QVec::from_ints(&[3, 3])];
        assert_eq!(min_norm_point_hull(&p).unwrap(), q(&[(3, 2), (3, 2)]));
    }

    #[test]
    fn hull_degenerate_all_equal() {
        let p = vec![QVec::from_ints(&[3, -1]); 4];
        assert_eq!(min_norm_point_hull(&p).unwrap(), QVec::from_ints(&[3, -1]));
    }

    #[test]
    fn in_hull_examples() {
        let p = [QVec::from_ints(&[1, 0]), QVec::from_ints(&[-1, 0]), QVec::from_ints(&[0, 1])];
        assert!(in_hull(&QVec::from_ints(&[0, 0]), &p).unwrap());
        let p = [QVec::from_ints(&[1, 0]), QVec::from_ints(&[0, 1])];
        assert!(!in_hull(&QVec::from_ints(&[2, 2]), &p).unwrap());
        assert!(in_hull(&q(&[(1, 2), (1, 2)]), &p).unwrap());
    }

    #[test]
    fn in_hull_negative_coordinates() {
        let p = [QVec::from_ints(&[-3, -1]), QVec::from_ints(&[-1, -3]), QVec::from_ints(&[-5, -5])];
        assert!(in_hull(&QVec::from_ints(&[-3, -3]), &p).unwrap());
        assert!(!in_hull(&QVec::from_ints(&[-1, -1]), &p).unwrap());
    }

    #[test]
    fn solve_singular() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve(a, vec![int(1), int(2)]).is_none());
    }
}

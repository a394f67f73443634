//! Integer core of the candidate enumeration.
//!
//! All inner products and fundamental-weight coordinates of the weights are
//! scaled to integers once. The min-norm point of the affine hull of a tuple
//! `S` is then obtained from the bordered Gram system
//!
//! ```text
//! [ G_S  1 ] [ a ]   [ 0 ]
//! [ 1^T  0 ] [ m ] = [ 1 ]
//! ```
//!
//! solved fraction-free, so `a = x / det` are its barycentric coordinates and
//! `-m` is its squared norm. Arithmetic runs in `i128` and is redone in
//! `BigInt` if anything overflows.
//!
//! Adding a constant to every Gram entry leaves `a` unchanged, which is why
//! a Levi subproblem (weights shifted by an origin `o` with
//! `<mu, o> = |o|^2` for every weight) can use the unshifted table.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactgeom::Rational;

/// Integer type the search runs in.
pub(super) trait Exact: Clone + Ord + Debug + Integer + Signed + Send + Sync {
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn mul_c(&self, o: &Self) -> Option<Self>;
    fn add_c(&self, o: &Self) -> Option<Self>;
    fn sub_c(&self, o: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add_c(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
}

impl Exact for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add_c(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
}

/// Arithmetic left the range of the integer type.
#[derive(Debug)]
struct Overflow;

enum Stop {
    Overflow,
    Budget,
}

impl From<Overflow> for Stop {
    fn from(_: Overflow) -> Self {
        Stop::Overflow
    }
}

fn ck<T>(v: Option<T>) -> std::result::Result<T, Overflow> {
    v.ok_or(Overflow)
}

/// Fraction-free Gaussian elimination on an augmented `n x (n+1)` matrix.
/// Returns `(z, d)` with solution `z / d` and `d > 0`, or `None` if singular.
fn bareiss<T: Exact>(mut a: Vec<Vec<T>>) -> std::result::Result<Option<(Vec<T>, T)>, Overflow> {
    let n = a.len();
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(None);
        };
        a.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = ck(a[k][k].mul_c(&a[i][j]))?;
                let w = ck(a[i][k].mul_c(&a[k][j]))?;
                a[i][j] = ck(v.sub_c(&w))? / prev.clone();
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut z = vec![T::zero(); n];
    for i in (0..n).rev() {
        let mut num = ck(det.mul_c(&a[i][n]))?;
        for j in i + 1..n {
            num = ck(num.sub_c(&ck(a[i][j].mul_c(&z[j]))?))?;
        }
        z[i] = num / a[i][i].clone();
    }
    if det.is_negative() {
        Ok(Some((z.into_iter().map(|v| -v).collect(), -det)))
    } else {
        Ok(Some((z, det)))
    }
}

/// Scaled integer data of a weight set under a reflection group.
pub(super) struct Problem {
    /// `gram[i][j] = L <mu_i, mu_j>` for the unshifted weights.
    pub gram: Vec<Vec<BigInt>>,
    /// `fw[i][j] = D <mu_i, alpha_j^vee>` over all simple coroots.
    pub fw: Vec<Vec<BigInt>>,
    pub fw_scale: BigInt,
    /// `L |o|^2`: the value of `-m` at which the shifted point vanishes.
    pub zero_level: Rational,
    pub cartan: Vec<Vec<i64>>,
    /// Active simple roots (indices into the full system).
    pub simple: Vec<usize>,
    /// `perms[b][i]`: image of weight `i` under active positive root `b`.
    pub perms: Vec<Vec<usize>>,
    /// `orth[b][i]`: whether root `b` is orthogonal to weight `i`.
    pub orth: Vec<Vec<bool>>,
    pub max_size: usize,
    pub budget: u64,
}

/// Indices `k` (offset by one) of rows `rows[k+1] - rows[0]` forming a basis
/// of the span of all such differences.
pub(super) fn affine_pivots(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let Some((first, rest)) = rows.split_first() else {
        return Vec::new();
    };
    // Reduced echelon rows kept with their pivot columns; fraction-free.
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut picked = Vec::new();
    for (k, row) in rest.iter().enumerate() {
        let mut v: Vec<BigInt> = row.iter().zip(first).map(|(a, b)| a - b).collect();
        for (col, b) in &basis {
            if !v[*col].is_zero() {
                let (f, g) = (b[*col].clone(), v[*col].clone());
                v = v.iter().zip(b).map(|(x, y)| x * &f - y * &g).collect();
            }
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            basis.push((col, v));
            picked.push(k);
        }
    }
    picked
}

impl Problem {
    /// Dominant points (as unshifted fundamental-weight coordinates) of all
    /// corrals other than the origin, and the number of tuples visited.
    pub fn run(&self) -> Result<(BTreeSet<Vec<Rational>>, u64)> {
        match Search::<i128>::new(self).and_then(|s| s.run()) {
            Ok(r) => Ok(r),
            Err(Stop::Budget) => Err(Error::SubsetBudget { budget: self.budget }),
            Err(Stop::Overflow) => match Search::<BigInt>::new(self).and_then(|s| s.run()) {
                Ok(r) => Ok(r),
                Err(Stop::Budget) => Err(Error::SubsetBudget { budget: self.budget }),
                Err(Stop::Overflow) => unreachable!("BigInt arithmetic cannot overflow"),
            },
        }
    }

    /// Dominant min-norm point of the affine hull of an affinely independent
    /// tuple, unless it is the origin.
    pub fn point_of(&self, chosen: &[usize]) -> Option<Vec<Rational>> {
        let Ok(search) = Search::<BigInt>::new(self) else {
            unreachable!("BigInt arithmetic cannot overflow")
        };
        let node = search.solve(chosen.to_vec(), Vec::new()).ok()??;
        if search.at_origin(&node) {
            return None;
        }
        let (f, den) = search.key(&node).ok()?;
        Some(f.iter().map(|v| Rational::new(v.clone(), den.clone())).collect())
    }
}

struct Search<'a, T> {
    p: &'a Problem,
    gram: Vec<Vec<T>>,
    fw: Vec<Vec<T>>,
    fw_scale: T,
    visited: AtomicU64,
}

#[derive(Clone)]
struct Node<T> {
    chosen: Vec<usize>,
    /// Barycentric numerators, over `det`.
    x: Vec<T>,
    det: T,
    /// Bordered multiplier numerator: `|p|^2 = -m / det` (scaled by `L`).
    m: T,
    perp_roots: Vec<usize>,
}

type Key<T> = (Vec<T>, T);

impl<'a, T: Exact> Search<'a, T> {
    fn new(p: &'a Problem) -> std::result::Result<Self, Stop> {
        let conv = |rows: &Vec<Vec<BigInt>>| -> std::result::Result<Vec<Vec<T>>, Overflow> {
            rows.iter().map(|r| r.iter().map(|v| ck(T::from_big(v))).collect()).collect()
        };
        Ok(Search {
            p,
            gram: conv(&p.gram)?,
            fw: conv(&p.fw)?,
            fw_scale: ck(T::from_big(&p.fw_scale))?,
            visited: AtomicU64::new(0),
        })
    }

    /// Smallest index in each orbit of the group generated by the given
    /// reflections.
    fn orbit_reps(&self, roots: &[usize]) -> Vec<usize> {
        let n = self.gram.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &b in roots {
            for (i, &j) in self.p.perms[b].iter().enumerate() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                    parent[hi] = lo;
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).collect()
    }

    fn root(&self) -> Node<T> {
        Node {
            chosen: Vec::new(),
            x: Vec::new(),
            det: T::one(),
            m: T::zero(),
            perp_roots: (0..self.p.perms.len()).collect(),
        }
    }

    fn children(&self, node: &Node<T>) -> std::result::Result<Vec<Node<T>>, Overflow> {
        let k = node.chosen.len();
        if k >= self.p.max_size {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for r in self.orbit_reps(&node.perp_roots) {
            if node.chosen.contains(&r) {
                continue;
            }
            // The new barycentric weight is positive only if `w` lies
            // strictly below the current hyperplane.
            if k > 0 {
                let mut s = T::zero();
                for (xi, &c) in node.x.iter().zip(&node.chosen) {
                    s = ck(s.add_c(&ck(xi.mul_c(&self.gram[r][c]))?))?;
                }
                if s >= -node.m.clone() {
                    continue;
                }
            }
            let mut chosen = node.chosen.clone();
            chosen.push(r);
            let Some(mut child) = self.solve(chosen, Vec::new())? else {
                continue;
            };
            if child.x.iter().all(|v| v.is_positive()) {
                child.perp_roots = node.perp_roots.iter().copied().filter(|&b| self.p.orth[b][r]).collect();
                out.push(child);
            }
        }
        Ok(out)
    }

    /// Min-norm point of the affine hull of `chosen`, or `None` if the
    /// tuple is affinely dependent.
    fn solve(&self, chosen: Vec<usize>, perp_roots: Vec<usize>) -> std::result::Result<Option<Node<T>>, Overflow> {
        let n = chosen.len();
        let mut a: Vec<Vec<T>> = chosen
            .iter()
            .map(|&i| {
                let mut row: Vec<T> = chosen.iter().map(|&j| self.gram[i][j].clone()).collect();
                row.push(T::one());
                row.push(T::zero());
                row
            })
            .collect();
        let mut last = vec![T::one(); n];
        last.push(T::zero());
        last.push(T::one());
        a.push(last);
        let Some((mut x, det)) = bareiss(a)? else {
            return Ok(None);
        };
        let m = x.pop().expect("multiplier");
        Ok(Some(Node { chosen, x, det, m, perp_roots }))
    }

    fn at_origin(&self, node: &Node<T>) -> bool {
        let level = Rational::new(-node.m.to_big(), node.det.to_big());
        level == self.p.zero_level
    }

    /// Dominant fundamental-weight numerators over a positive denominator,
    /// in lowest terms.
    fn key(&self, node: &Node<T>) -> std::result::Result<Key<T>, Overflow> {
        let r = self.p.cartan.len();
        let mut f = vec![T::zero(); r];
        for (xi, &c) in node.x.iter().zip(&node.chosen) {
            for (fj, w) in f.iter_mut().zip(&self.fw[c]) {
                *fj = ck(fj.add_c(&ck(xi.mul_c(w))?))?;
            }
        }
        'walk: loop {
            for &j in &self.p.simple {
                if f[j].is_negative() {
                    let c = f[j].clone();
                    for (t, &cij) in self.p.cartan[j].iter().enumerate() {
                        let step = ck(c.mul_c(&ck(T::from_big(&BigInt::from(cij)))?))?;
                        f[t] = ck(f[t].sub_c(&step))?;
                    }
                    continue 'walk;
                }
            }
            break;
        }
        let mut den = ck(node.det.mul_c(&self.fw_scale))?;
        let g = f.iter().fold(den.clone(), |g, v| g.gcd(v));
        if !g.is_one() {
            f = f.into_iter().map(|v| v / g.clone()).collect();
            den = den / g;
        }
        Ok((f, den))
    }

    fn tick(&self) -> std::result::Result<(), Stop> {
        if self.visited.fetch_add(1, Ordering::Relaxed) + 1 > self.p.budget {
            return Err(Stop::Budget);
        }
        Ok(())
    }

    fn visit(&self, node: &Node<T>, found: &mut BTreeSet<Key<T>>) -> std::result::Result<bool, Stop> {
        self.tick()?;
        if self.at_origin(node) {
            return Ok(false);
        }
        found.insert(self.key(node)?);
        Ok(true)
    }

    fn explore(&self, node: Node<T>, found: &mut BTreeSet<Key<T>>) -> std::result::Result<(), Stop> {
        if !self.visit(&node, found)? {
            return Ok(());
        }
        for child in self.children(&node)? {
            self.explore(child, found)?;
        }
        Ok(())
    }

    fn run(&self) -> std::result::Result<(BTreeSet<Vec<Rational>>, u64), Stop> {
        // Expand the first level serially to give the pool independent work.
        let mut frontier = Vec::new();
        let mut found = BTreeSet::new();
        for first in self.children(&self.root())? {
            if self.visit(&first, &mut found)? {
                frontier.extend(self.children(&first)?);
            }
        }
        let parts: Vec<std::result::Result<BTreeSet<Key<T>>, Stop>> = frontier
            .into_par_iter()
            .map(|node| {
                let mut local = BTreeSet::new();
                self.explore(node, &mut local).map(|_| local)
            })
            .collect();
        for part in parts {
            found.extend(part?);
        }
        let points = found
            .into_iter()
            .map(|(f, den)| {
                let den = den.to_big();
                f.iter().map(|v| Rational::new(v.to_big(), den.clone())).collect()
            })
            .collect();
        Ok((points, self.visited.load(Ordering::Relaxed)))
    }
}

//! Root systems of types A-G realised in the Bourbaki ambient coordinates.
//!
//! Simple roots are taken from the Bourbaki plates; fundamental weights are
//! obtained by inverting the Cartan matrix inside the span of the simple
//! roots, which reproduces the plate values (for `A_r` this puts every weight
//! in the sum-zero hyperplane of the `(r+1)`-dimensional ambient space).
//!
//! Simple roots and fundamental weights are indexed from 0 in this API; the
//! Bourbaki label of index `i` is `i + 1`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{int, rat, solve, QVec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => Err(Error::InvalidType(other.to_string())),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A Cartan type such as `D4` or `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootSystemType {
    pub series: Series,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 3,
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank { series: series.letter(), rank });
        }
        Ok(RootSystemType { series, rank })
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let series: Series = head.parse()?;
        let rank = tail.parse::<usize>().map_err(|_| Error::InvalidType(s.to_string()))?;
        RootSystemType::new(series, rank)
    }
}

/// A dominant-or-not integral weight, kept both in fundamental-weight
/// coordinates and in its Euclidean realisation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub fw_coords: Vec<i64>,
    pub euclid: QVec,
}

impl Weight {
    pub fn is_zero(&self) -> bool {
        self.fw_coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.fw_coords.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .fw_coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("w{}", i + 1),
                _ => format!("{c}w{}", i + 1),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    ty: RootSystemType,
    ambient_dim: usize,
    simple_roots: Vec<QVec>,
    simple_coroots: Vec<QVec>,
    positive_roots: Vec<QVec>,
    fundamental_weights: Vec<QVec>,
    cartan: Vec<Vec<i64>>,
}

fn half(n: i64) -> Rational {
    rat(n, 2)
}

fn vec_q(c: Vec<Rational>) -> QVec {
    QVec::new(c)
}

fn e_diff(n: usize, i: usize, j: usize) -> QVec {
    &QVec::unit(n, i) - &QVec::unit(n, j)
}

fn e_sum(n: usize, i: usize, j: usize) -> QVec {
    &QVec::unit(n, i) + &QVec::unit(n, j)
}

fn bourbaki_simple_roots(ty: RootSystemType) -> (usize, Vec<QVec>) {
    let r = ty.rank;
    match ty.series {
        Series::A => {
            let n = r + 1;
            (n, (0..r).map(|i| e_diff(n, i, i + 1)).collect())
        }
        Series::B | Series::C | Series::D => {
            let n = r;
            let mut s: Vec<QVec> = (0..r - 1).map(|i| e_diff(n, i, i + 1)).collect();
            s.push(match ty.series {
                Series::B => QVec::unit(n, r - 1),
                Series::C => QVec::unit(n, r - 1).scale(&int(2)),
                _ => e_sum(n, r - 2, r - 1),
            });
            (n, s)
        }
        Series::E => {
            let n = 8;
            let mut a1 = vec![half(-1); 8];
            a1[0] = half(1);
            a1[7] = half(1);
            let mut s = vec![vec_q(a1), e_sum(n, 0, 1), e_diff(n, 1, 0)];
            for k in 2..7 {
                s.push(e_diff(n, k, k - 1));
            }
            s.truncate(r);
            (n, s)
        }
        Series::F => {
            let n = 4;
            let a4 = vec_q(vec![half(1), half(-1), half(-1), half(-1)]);
            (n, vec![e_diff(n, 1, 2), e_diff(n, 2, 3), QVec::unit(n, 3), a4])
        }
        Series::G => {
            let n = 3;
            (n, vec![QVec::from_ints(&[1, -1, 0]), QVec::from_ints(&[-2, 1, 1])])
        }
    }
}

impl RootDatum {
    pub fn build(ty: RootSystemType) -> Result<Self> {
        let ty = RootSystemType::new(ty.series, ty.rank)?;
        let r = ty.rank;
        let (ambient_dim, simple_roots) = bourbaki_simple_roots(ty);
        let simple_coroots: Vec<QVec> =
            simple_roots.iter().map(|a| a.scale(&(int(2) / a.norm2()))).collect();

        let mut cartan = vec![vec![0i64; r]; r];
        let mut cartan_q = vec![vec![Rational::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let c = simple_roots[i].dot_unchecked(&simple_coroots[j]);
                assert!(c.is_integer(), "non-integral Cartan entry");
                cartan[i][j] = i64::try_from(c.to_integer()).expect("small Cartan entry");
                cartan_q[i][j] = c;
            }
        }

        // Row i of C^{-1} gives the coordinates of w_i over the simple roots.
        let mut fundamental_weights = Vec::with_capacity(r);
        for i in 0..r {
            // Solve x C = e_i, i.e. C^T x^T = e_i^T.
            let ct: Vec<Vec<Rational>> =
                (0..r).map(|a| (0..r).map(|b| cartan_q[b][a].clone()).collect()).collect();
            let mut rhs = vec![Rational::zero(); r];
            rhs[i] = Rational::one();
            let x = solve(ct, rhs).expect("Cartan matrix is invertible");
            let mut w = QVec::zeros(ambient_dim);
            for (k, c) in x.iter().enumerate() {
                w = w.add_scaled(c, &simple_roots[k]);
            }
            fundamental_weights.push(w);
        }

        let mut datum = RootDatum {
            ty,
            ambient_dim,
            simple_roots,
            simple_coroots,
            positive_roots: Vec::new(),
            fundamental_weights,
            cartan,
        };
        datum.positive_roots = datum.close_roots();
        Ok(datum)
    }

    /// All roots obtained by closing the simple roots under simple
    /// reflections, keeping the positive half, sorted canonically.
    fn close_roots(&self) -> Vec<QVec> {
        let mut seen: BTreeSet<QVec> = self.simple_roots.iter().cloned().collect();
        let mut queue: VecDeque<QVec> = self.simple_roots.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let w = self.simple_reflection(i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let rho = self.rho();
        seen.into_iter().filter(|b| b.dot_unchecked(&rho).is_positive()).collect()
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[QVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[QVec] {
        &self.simple_coroots
    }

    pub fn positive_roots(&self) -> &[QVec] {
        &self.positive_roots
    }

    pub fn fundamental_weights(&self) -> &[QVec] {
        &self.fundamental_weights
    }

    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Sum of the fundamental weights.
    pub fn rho(&self) -> QVec {
        self.fundamental_weights
            .iter()
            .fold(QVec::zeros(self.ambient_dim), |acc, w| &acc + w)
    }

    /// `<v, alpha_i^vee>`.
    pub fn coroot_pairing(&self, i: usize, v: &QVec) -> Rational {
        v.dot_unchecked(&self.simple_coroots[i])
    }

    /// `v - <v, alpha_i^vee> alpha_i`.
    pub fn simple_reflection(&self, i: usize, v: &QVec) -> QVec {
        let c = self.coroot_pairing(i, v);
        v.add_scaled(&(-c), &self.simple_roots[i])
    }

    /// Reflection in the hyperplane orthogonal to an arbitrary root.
    pub fn reflect(&self, root: &QVec, v: &QVec) -> QVec {
        let c = int(2) * v.dot_unchecked(root) / root.norm2();
        v.add_scaled(&(-c), root)
    }

    /// Coordinates of `v` with respect to the fundamental weights.
    pub fn fw_coords(&self, v: &QVec) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.coroot_pairing(i, v)).collect()
    }

    pub fn is_dominant(&self, v: &QVec) -> bool {
        (0..self.rank()).all(|i| !self.coroot_pairing(i, v).is_negative())
    }

    /// Unique dominant element of the Weyl orbit of `v`.
    pub fn dominant_rep(&self, v: &QVec) -> QVec {
        let mut v = v.clone();
        'walk: loop {
            for i in 0..self.rank() {
                let c = self.coroot_pairing(i, &v);
                if c.is_negative() {
                    v = v.add_scaled(&(-c), &self.simple_roots[i]);
                    continue 'walk;
                }
            }
            return v;
        }
    }

    /// Full orbit of `v` under the Weyl group, or an error once it would
    /// exceed `cap` elements.
    pub fn weyl_orbit(&self, v: &QVec, cap: usize) -> Result<BTreeSet<QVec>> {
        let mut seen = BTreeSet::new();
        seen.insert(v.clone());
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(u) = queue.pop_front() {
            for i in 0..self.rank() {
                let w = self.simple_reflection(i, &u);
                if !seen.contains(&w) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitCap { cap });
                    }
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        Ok(seen)
    }

    pub fn weight(&self, fw_coords: &[i64]) -> Result<Weight> {
        if fw_coords.len() != self.rank() {
            return Err(Error::InvalidWeight(format!(
                "expected {} coefficients for {}, got {}",
                self.rank(),
                self.ty,
                fw_coords.len()
            )));
        }
        let mut euclid = QVec::zeros(self.ambient_dim);
        for (c, w) in fw_coords.iter().zip(&self.fundamental_weights) {
            euclid = euclid.add_scaled(&int(*c), w);
        }
        Ok(Weight { fw_coords: fw_coords.to_vec(), euclid })
    }

    /// Converts an integral Euclidean vector back into a [`Weight`].
    pub fn weight_from_euclid(&self, v: &QVec) -> Result<Weight> {
        let fw: Result<Vec<i64>> = self
            .fw_coords(v)
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer())
                        .map_err(|_| Error::InvalidWeight("coordinate overflow".into()))
                } else {
                    Err(Error::InvalidWeight(format!("{v} is not integral")))
                }
            })
            .collect();
        Ok(Weight { fw_coords: fw?, euclid: v.clone() })
    }

    /// Highest weight of the dual module: the dominant representative of
    /// `-lambda`.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant);
        }
        let d = self.dominant_rep(&-&lambda.euclid);
        self.weight_from_euclid(&d)
    }
}

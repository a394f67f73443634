//! Weights and multiplicities of irreducible highest-weight modules.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::{int, QVec, Rational};
use crate::rootsystem::{RootDatum, Weight};

/// Default cap on module dimension accepted by [`weight_system`].
pub const DEFAULT_DIM_CAP: u64 = 300;

/// Weyl dimension formula, evaluated exactly.
pub fn weyl_dim(datum: &RootDatum, lambda: &Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let rho = datum.rho();
    let shifted = &lambda.euclid + &rho;
    let mut prod = Rational::one();
    for a in datum.positive_roots() {
        prod *= shifted.dot_unchecked(a) / rho.dot_unchecked(a);
    }
    assert!(prod.is_integer(), "Weyl dimension is integral");
    Ok(prod.to_integer().to_u64().expect("dimension fits in u64"))
}

#[derive(Clone, Debug)]
pub struct WeightSystem {
    datum: RootDatum,
    highest: Weight,
    entries: BTreeMap<QVec, u64>,
    dim: u64,
}

impl WeightSystem {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Weight -> multiplicity, keyed by exact Euclidean coordinates.
    pub fn entries(&self) -> &BTreeMap<QVec, u64> {
        &self.entries
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn multiplicity(&self, mu: &QVec) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// Distinct weights in canonical order.
    pub fn distinct_weights(&self) -> Vec<QVec> {
        self.entries.keys().cloned().collect()
    }

    /// Multiplicity-weighted sum of the weights.
    pub fn weighted_sum(&self) -> QVec {
        let mut acc = QVec::zeros(self.datum.ambient_dim());
        for (mu, &m) in &self.entries {
            acc = acc.add_scaled(&int(m as i64), mu);
        }
        acc
    }

    /// Whether every simple reflection permutes the weights preserving
    /// multiplicities.
    pub fn is_weyl_stable(&self) -> bool {
        (0..self.datum.rank()).all(|i| {
            self.entries
                .iter()
                .all(|(mu, &m)| self.multiplicity(&self.datum.simple_reflection(i, mu)) == m)
        })
    }

    fn map_weights(&self, f: impl Fn(&QVec) -> QVec) -> WeightSystem {
        WeightSystem {
            datum: self.datum.clone(),
            highest: self.highest.clone(),
            entries: self.entries.iter().map(|(k, &m)| (f(k), m)).collect(),
            dim: self.dim,
        }
    }

    /// Pointwise negation (the weight system of the dual module).
    pub fn negated(&self) -> WeightSystem {
        self.map_weights(|k| -k)
    }

    /// Every weight multiplied by `t`. The result is no longer a weight
    /// system of an integral module but the stratification is defined for it.
    pub fn scaled(&self, t: &Rational) -> WeightSystem {
        assert!(t.is_positive(), "scale factor must be positive");
        self.map_weights(|k| k.scale(t))
    }

    /// Image under the simple reflection `s_i`.
    pub fn reflected(&self, i: usize) -> WeightSystem {
        self.map_weights(|k| self.datum.simple_reflection(i, k))
    }
}

/// Height of `v` in the root lattice: `sum_j <v, w_j^vee>`.
fn height(datum: &RootDatum, v: &QVec) -> Rational {
    datum
        .fundamental_weights()
        .iter()
        .zip(datum.simple_roots())
        .map(|(w, a)| int(2) * v.dot_unchecked(w) / a.norm2())
        .sum()
}

/// Dominant weights `mu <= lambda`, in fundamental-weight coordinates.
///
/// Uses that covering relations in the dominance order on dominant weights
/// differ by a positive root.
fn dominant_weights_below(datum: &RootDatum, lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let root_fw: Vec<Vec<i64>> = datum
        .positive_roots()
        .iter()
        .map(|a| {
            datum
                .fw_coords(a)
                .into_iter()
                .map(|c| c.to_integer().to_i64().expect("integral root"))
                .collect()
        })
        .collect();
    let mut seen = BTreeSet::from([lambda.to_vec()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        for a in &root_fw {
            let nu: Vec<i64> = mu.iter().zip(a).map(|(m, c)| m - c).collect();
            if nu.iter().all(|&c| c >= 0) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen
}

/// Weight system of the irreducible module with highest weight `lambda`,
/// refusing modules of dimension above `dim_cap`.
pub fn weight_system(datum: &RootDatum, lambda: &Weight, dim_cap: u64) -> Result<WeightSystem> {
    let dim = weyl_dim(datum, lambda)?;
    if dim > dim_cap {
        return Err(Error::DimensionCap { dim, cap: dim_cap });
    }

    let rho = datum.rho();
    let top = (&lambda.euclid + &rho).norm2();

    let mut dominant: Vec<QVec> = dominant_weights_below(datum, &lambda.fw_coords)
        .into_iter()
        .map(|c| datum.weight(&c).expect("arity").euclid)
        .collect();
    dominant.sort_by_cached_key(|mu| (height(datum, &(&lambda.euclid - mu)), mu.clone()));
    let known: BTreeSet<QVec> = dominant.iter().cloned().collect();

    // Freudenthal recursion in order of increasing depth below lambda.
    let mut mult: HashMap<QVec, Rational> = HashMap::new();
    for mu in &dominant {
        if *mu == lambda.euclid {
            mult.insert(mu.clone(), Rational::one());
            continue;
        }
        let mut acc = Rational::zero();
        for a in datum.positive_roots() {
            let mut nu = mu + a;
            loop {
                let rep = datum.dominant_rep(&nu);
                if !known.contains(&rep) {
                    break;
                }
                let m = mult.get(&rep).expect("higher weights are processed first");
                acc += m * nu.dot_unchecked(a);
                nu = &nu + a;
            }
        }
        let denom = top.clone() - (mu + &rho).norm2();
        let m = int(2) * acc / denom;
        assert!(m.is_integer() && m.is_positive(), "Freudenthal multiplicity must be a positive integer");
        mult.insert(mu.clone(), m);
    }

    let mut entries = BTreeMap::new();
    for mu in &dominant {
        let m = mult[mu].to_integer().to_u64().expect("small multiplicity");
        for w in datum.weyl_orbit(mu, usize::MAX)? {
            entries.insert(w, m);
        }
    }
    let total: u64 = entries.values().sum();
    assert_eq!(total, dim, "Freudenthal total disagrees with Weyl dimension");

    Ok(WeightSystem { datum: datum.clone(), highest: lambda.clone(), entries, dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{RootSystemType, Series};

    fn datum(s: Series, r: usize) -> RootDatum {
        RootDatum::build(RootSystemType::new(s, r).unwrap()).unwrap()
    }

    #[test]
    fn weyl_dim_examples() {
        let a1 = datum(Series::A, 1);
        assert_eq!(weyl_dim(&a1, &a1.weight(&[4]).unwrap()).unwrap(), 5);
        let a7 = datum(Series::A, 7);
        assert_eq!(weyl_dim(&a7, &a7.weight(&[0, 0, 0, 1, 0, 0, 0]).unwrap()).unwrap(), 70);
        let f4 = datum(Series::F, 4);
        assert_eq!(weyl_dim(&f4, &f4.weight(&[0, 0, 0, 1]).unwrap()).unwrap(), 26);
        assert_eq!(weyl_dim(&f4, &f4.weight(&[1, 0, 0, 0]).unwrap()).unwrap(), 52);
        let e8 = datum(Series::E, 8);
        assert_eq!(weyl_dim(&e8, &e8.weight(&[0, 0, 0, 0, 0, 0, 0, 1]).unwrap()).unwrap(), 248);
        let e7 = datum(Series::E, 7);
        assert_eq!(weyl_dim(&e7, &e7.weight(&[0, 0, 0, 0, 0, 0, 1]).unwrap()).unwrap(), 56);
        let d8 = datum(Series::D, 8);
        assert_eq!(weyl_dim(&d8, &d8.weight(&[0, 0, 0, 0, 0, 0, 0, 1]).unwrap()).unwrap(), 128);
    }

    #[test]
    fn weyl_dim_rejects_non_dominant() {
        let a2 = datum(Series::A, 2);
        assert_eq!(weyl_dim(&a2, &a2.weight(&[1, -1]).unwrap()), Err(Error::NotDominant));
    }

    #[test]
    fn binary_quartics() {
        let a1 = datum(Series::A, 1);
        let ws = weight_system(&a1, &a1.weight(&[4]).unwrap(), DEFAULT_DIM_CAP).unwrap();
        let w = a1.fundamental_weights()[0].clone();
        let expect: BTreeMap<QVec, u64> =
            [4, 2, 0, -2, -4].iter().map(|&k| (w.scale(&int(k)), 1)).collect();
        assert_eq!(ws.entries(), &expect);
    }

    #[test]
    fn a2_adjoint() {
        let a2 = datum(Series::A, 2);
        let ws = weight_system(&a2, &a2.weight(&[1, 1]).unwrap(), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(ws.dim(), 8);
        assert_eq!(ws.entries().len(), 7);
        assert_eq!(ws.multiplicity(&QVec::zeros(3)), 2);
        for mu in ws.entries().keys().filter(|k| !k.is_zero()) {
            assert_eq!(ws.multiplicity(mu), 1);
            assert_eq!(mu.norm2(), int(2));
        }
    }

    #[test]
    fn a7_fourth_exterior_power_is_one_orbit() {
        let a7 = datum(Series::A, 7);
        let l = a7.weight(&[0, 0, 0, 1, 0, 0, 0]).unwrap();
        let ws = weight_system(&a7, &l, DEFAULT_DIM_CAP).unwrap();
        let orbit = a7.weyl_orbit(&l.euclid, 1000).unwrap();
        assert_eq!(ws.entries().keys().cloned().collect::<BTreeSet<_>>(), orbit);
        assert!(ws.entries().values().all(|&m| m == 1));
        assert_eq!(ws.dim(), 70);
    }

    #[test]
    fn invariants_hold() {
        let g2 = datum(Series::G, 2);
        let ws = weight_system(&g2, &g2.weight(&[1, 1]).unwrap(), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(ws.dim(), 64);
        assert!(ws.is_weyl_stable());
        assert!(ws.weighted_sum().is_zero());
        assert_eq!(ws.multiplicity(&g2.weight(&[1, 1]).unwrap().euclid), 1);
    }

    #[test]
    fn dimension_cap() {
        let e8 = datum(Series::E, 8);
        let l = e8.weight(&[0, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(weight_system(&e8, &l, 100).unwrap_err(), Error::DimensionCap { dim: 248, cap: 100 });
    }

    #[test]
    fn dual_is_negation() {
        let a3 = datum(Series::A, 3);
        let l = a3.weight(&[2, 1, 0]).unwrap();
        let ws = weight_system(&a3, &l, DEFAULT_DIM_CAP).unwrap();
        let dual = weight_system(&a3, &a3.dual_weight(&l).unwrap(), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(dual.entries(), ws.negated().entries());
    }
}

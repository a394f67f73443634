//! Instability stratification of the nullcone.
//!
//! Every unstable vector has an optimal destabilising one-parameter subgroup,
//! which, up to the Weyl group, is a dominant rational vector `lambda` equal
//! to the point of minimal norm of the convex hull of
//! `{mu : <mu, lambda> >= <lambda, lambda>}`. Such a `lambda` is the min-norm
//! point of the affine hull of an affinely independent set of weights lying
//! in the relative interior of their convex hull (a *corral*), so candidates
//! come from enumerating corrals and normalising into the dominant chamber.
//!
//! A candidate indexes a nonempty stratum iff the Levi factor of `lambda`
//! (roots orthogonal to it) has a semistable vector on the weights of the
//! hyperplane `<mu, lambda> = |lambda|^2`, shifted by `-lambda`. That is the
//! same question one level down, so it is answered recursively; with no
//! roots left it is convex-hull membership of the origin.
//!
//! The stratum of `lambda` has dimension `dim L + dim G/P(lambda)`, where `L`
//! is the span of the weight spaces in the closed half-space above and
//! `dim G/P(lambda)` counts the positive roots pairing strictly positively
//! with `lambda`. The nullcone dimension is the largest stratum dimension and
//! every stratum of that dimension closes up to an irreducible component.
//!
//! # Enumeration
//!
//! Tuples are enumerated one per Weyl orbit: the `k`-th element ranges over
//! orbit representatives of the pointwise stabiliser of the first `k - 1`
//! elements, generated by reflections in roots orthogonal to them. Only
//! corrals are extended; every corral of size `k > 1` contains one of size
//! `k - 1` (drop the vertex opposite the facet nearest the origin), so no
//! corral is missed. A branch also stops once its point reaches the origin.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactgeom::{
    in_hull, min_norm_point_hull, OrthoBasis, QVec, Rational,
};
use crate::weightsys::{WeightSystem, DEFAULT_DIM_CAP};

mod search;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Upper bound on the number of subsets visited during enumeration.
    pub max_subsets: u64,
    /// Overrides the subset-size bound (defaults to the affine dimension of
    /// the weight set).
    pub max_subset_size: Option<usize>,
    /// Worker threads; `0` uses rayon's default.
    pub threads: usize,
    /// Largest module dimension accepted when building weight systems.
    pub dim_cap: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_subsets: 100_000_000,
            max_subset_size: None,
            threads: 0,
            dim_cap: DEFAULT_DIM_CAP,
        }
    }
}

impl EnumOptions {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.threads == 0 {
            return f();
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

/// A dominant 1-PS direction with the weights it destabilises.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub lambda: QVec,
    pub norm2: Rational,
    /// Weights `mu` with `<mu, lambda> >= <lambda, lambda>`.
    pub support: BTreeSet<QVec>,
}

impl Candidate {
    /// Panics if `lambda` is zero.
    pub fn new(ws: &WeightSystem, lambda: QVec) -> Candidate {
        let norm2 = lambda.norm2();
        assert!(norm2.is_positive(), "candidate direction must be nonzero");
        let support = ws
            .entries()
            .keys()
            .filter(|mu| mu.dot_unchecked(&lambda) >= norm2)
            .cloned()
            .collect();
        Candidate { lambda, norm2, support }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub candidate: Candidate,
    pub dim_l: u64,
    pub dim_flag: u64,
    pub dim_total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Distinct dominant candidates in canonical order.
    pub candidates: Vec<Candidate>,
    pub subsets_visited: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullconeReport {
    pub dim_module: u64,
    pub dim_nullcone: u64,
    pub num_components: u64,
    /// Sorted by `dim_total` descending, then by `lambda`.
    pub strata: Vec<Stratum>,
    pub subsets_visited: u64,
    pub candidates_examined: u64,
}

impl NullconeReport {
    pub fn maximal_strata(&self) -> impl Iterator<Item = &Stratum> {
        self.strata.iter().filter(move |s| s.dim_total == self.dim_nullcone)
    }
}

/// Affine dimension of a set of points.
pub fn affine_rank(weights: &[QVec]) -> usize {
    let mut basis = OrthoBasis::new();
    for w in &weights[1..] {
        basis.push(&(w - &weights[0]));
    }
    basis.rank()
}

/// Exact data of a module shared by its Levi subproblems: the weights in
/// canonical order with integer-scaled inner products and coordinates.
struct Shared {
    ambient_dim: usize,
    simple_roots: Vec<QVec>,
    fundamental: Vec<QVec>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<QVec>,
    weights: Vec<QVec>,
    mult: Vec<u64>,
    gram: Vec<Vec<BigInt>>,
    gram_scale: BigInt,
    fw: Vec<Vec<BigInt>>,
    fw_scale: BigInt,
    /// `perms[b][i]`: index of the reflection of weight `i` in root `b`.
    perms: Vec<Vec<usize>>,
    /// `orth[b][i]`: whether root `b` is orthogonal to weight `i`.
    orth: Vec<Vec<bool>>,
}

fn lcm_of_denoms<'a>(vals: impl Iterator<Item = &'a Rational>) -> BigInt {
    vals.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn scale_all(rows: &[Vec<Rational>], s: &BigInt) -> Vec<Vec<BigInt>> {
    let s = Rational::from_integer(s.clone());
    rows.iter().map(|r| r.iter().map(|v| (v * &s).to_integer()).collect()).collect()
}

impl Shared {
    fn new(ws: &WeightSystem) -> Shared {
        let d = ws.datum();
        let (weights, mult): (Vec<QVec>, Vec<u64>) = ws.entries().iter().map(|(w, &m)| (w.clone(), m)).unzip();
        let gram: Vec<Vec<Rational>> =
            weights.iter().map(|a| weights.iter().map(|b| a.dot_unchecked(b)).collect()).collect();
        let fw: Vec<Vec<Rational>> = weights.iter().map(|w| d.fw_coords(w)).collect();
        let gram_scale = lcm_of_denoms(gram.iter().flatten());
        let fw_scale = lcm_of_denoms(fw.iter().flatten());
        let gram = scale_all(&gram, &gram_scale);
        let fw = scale_all(&fw, &fw_scale);

        // s_b(mu) = mu - <mu, b^vee> b, done on integer coordinates.
        let index: HashMap<&Vec<BigInt>, usize> = fw.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let two = Rational::from_integer(2.into());
        let mut perms = Vec::new();
        let mut orth = Vec::new();
        for b in d.positive_roots() {
            let coroot = b.scale(&(&two / b.norm2()));
            let co: Vec<BigInt> = d.fundamental_weights().iter().map(|w| w.dot_unchecked(&coroot).to_integer()).collect();
            let b_fw: Vec<BigInt> = d.fw_coords(b).iter().map(|c| c.to_integer()).collect();
            let mut perm = Vec::with_capacity(fw.len());
            let mut perp = Vec::with_capacity(fw.len());
            for f in &fw {
                // Pairing in units of 1/fw_scale.
                let p: BigInt = f.iter().zip(&co).map(|(x, c)| x * c).sum();
                let image: Vec<BigInt> = f.iter().zip(&b_fw).map(|(x, c)| x - &p * c).collect();
                perm.push(*index.get(&image).expect("weight set is stable under reflections"));
                perp.push(p.is_zero());
            }
            perms.push(perm);
            orth.push(perp);
        }
        Shared {
            ambient_dim: d.ambient_dim(),
            simple_roots: d.simple_roots().to_vec(),
            fundamental: d.fundamental_weights().to_vec(),
            cartan: d.cartan().to_vec(),
            positive_roots: d.positive_roots().to_vec(),
            weights,
            mult,
            gram,
            gram_scale,
            fw,
            fw_scale,
            perms,
            orth,
        }
    }

    fn point_at_fw(&self, fw: &[Rational]) -> QVec {
        let mut v = QVec::zeros(self.ambient_dim);
        for (c, w) in fw.iter().zip(&self.fundamental) {
            v = v.add_scaled(c, w);
        }
        v
    }
}

/// A candidate inside an [`Action`]; `support` indexes the shared weights.
struct Cand {
    lambda: QVec,
    norm2: Rational,
    support: Vec<usize>,
}

/// A reductive group acting on a multiset of weights: either the simple
/// group acting on the input module, or the Levi factor of a candidate
/// acting on the weights of its hyperplane, shifted by `origin`.
///
/// The roots are always a standard parabolic subsystem of the original
/// root system, so dominance is taken with respect to a subset of the
/// original simple roots.
struct Action<'a> {
    sh: &'a Shared,
    /// Active simple roots.
    simple: Vec<usize>,
    /// Active positive roots.
    roots: Vec<usize>,
    /// Weights acted on, as indices into the shared list (unshifted).
    members: Vec<usize>,
    /// Fixed by every active root, with `<mu, origin> = |origin|^2` for
    /// every member `mu`.
    origin: QVec,
}

impl<'a> Action<'a> {
    fn of(sh: &'a Shared) -> Action<'a> {
        Action {
            sh,
            simple: (0..sh.simple_roots.len()).collect(),
            roots: (0..sh.positive_roots.len()).collect(),
            members: (0..sh.weights.len()).collect(),
            origin: QVec::zeros(sh.ambient_dim),
        }
    }

    fn dim(&self) -> u64 {
        self.members.iter().map(|&i| self.sh.mult[i]).sum()
    }

    fn candidate(&self, lambda: QVec) -> Cand {
        let norm2 = lambda.norm2();
        assert!(norm2.is_positive(), "candidate direction must be nonzero");
        // <origin, lambda> = 0, so unshifted weights give the same pairing.
        let support =
            self.members.iter().copied().filter(|&i| self.sh.weights[i].dot_unchecked(&lambda) >= norm2).collect();
        Cand { lambda, norm2, support }
    }

    fn dims(&self, c: &Cand) -> (u64, u64) {
        let dim_l = c.support.iter().map(|&i| self.sh.mult[i]).sum();
        let dim_flag = self
            .roots
            .iter()
            .filter(|&&b| self.sh.positive_roots[b].dot_unchecked(&c.lambda).is_positive())
            .count() as u64;
        (dim_l, dim_flag)
    }

    /// The Levi factor of `lambda` acting on `{mu - lambda : <mu, lambda> = |lambda|^2}`.
    fn levi(&self, c: &Cand) -> Action<'a> {
        let sh = self.sh;
        let lambda = &c.lambda;
        Action {
            sh,
            simple: self
                .simple
                .iter()
                .copied()
                .filter(|&j| sh.simple_roots[j].dot_unchecked(lambda).is_zero())
                .collect(),
            roots: self
                .roots
                .iter()
                .copied()
                .filter(|&b| sh.positive_roots[b].dot_unchecked(lambda).is_zero())
                .collect(),
            members: c.support.iter().copied().filter(|&i| sh.weights[i].dot_unchecked(lambda) == c.norm2).collect(),
            origin: &self.origin + lambda,
        }
    }

    /// Whether a generic vector of the module is semistable, i.e. whether
    /// the nullcone is a proper subset.
    fn has_semistable_point(&self, opts: &EnumOptions) -> Result<bool> {
        if self.roots.is_empty() {
            let pts: Vec<QVec> = self.members.iter().map(|&i| self.sh.weights[i].clone()).collect();
            return in_hull(&self.origin, &pts);
        }
        // The nullcone is everything iff some genuine stratum is dense, so
        // only candidates whose stratum could fill the module need the
        // recursive check.
        let dim = self.dim();
        for c in self.enumerate(opts)?.0 {
            let (l, f) = self.dims(&c);
            if l + f >= dim && self.levi(&c).has_semistable_point(opts)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn problem(&self, opts: &EnumOptions) -> search::Problem {
        let sh = self.sh;
        let local: HashMap<usize, usize> = self.members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let pick = |rows: &[Vec<BigInt>], cols: Option<&[usize]>| -> Vec<Vec<BigInt>> {
            self.members
                .iter()
                .map(|&i| match cols {
                    Some(c) => c.iter().map(|&j| rows[i][j].clone()).collect(),
                    None => rows[i].clone(),
                })
                .collect()
        };
        let gram = pick(&sh.gram, Some(&self.members));
        let fw = pick(&sh.fw, None);
        let perms = self.roots.iter().map(|&b| self.members.iter().map(|&i| local[&sh.perms[b][i]]).collect()).collect();
        let orth = self.roots.iter().map(|&b| self.members.iter().map(|&i| sh.orth[b][i]).collect()).collect();
        let max_size = opts.max_subset_size.unwrap_or_else(|| search::affine_pivots(&fw).len());
        search::Problem {
            zero_level: self.origin.norm2() * Rational::from_integer(sh.gram_scale.clone()),
            gram,
            fw,
            fw_scale: sh.fw_scale.clone(),
            cartan: sh.cartan.clone(),
            simple: self.simple.clone(),
            perms,
            orth,
            max_size,
            budget: opts.max_subsets,
        }
    }

    /// Distinct dominant candidates in canonical order, and tuples visited.
    fn enumerate(&self, opts: &EnumOptions) -> Result<(Vec<Cand>, u64)> {
        let problem = self.problem(opts);
        let (points, visited) = problem.run()?;
        let mut found: BTreeSet<Vec<Rational>> = points;
        // Corrals of full affine dimension all share one point, reached from
        // any affinely spanning subset.
        if opts.max_subset_size.is_none() {
            let mut spanning = vec![0];
            spanning.extend(search::affine_pivots(&problem.fw).into_iter().map(|k| k + 1));
            if let Some(p) = problem.point_of(&spanning) {
                found.insert(p);
            }
        }
        let cands = found.iter().map(|fw| self.candidate(&self.sh.point_at_fw(fw) - &self.origin)).collect();
        Ok((cands, visited))
    }

    fn report(&self, cands: Vec<Cand>, visited: u64, opts: &EnumOptions) -> Result<NullconeReport> {
        let examined = cands.len() as u64;
        let kept: Vec<Result<Option<Stratum>>> = cands
            .par_iter()
            .map(|c| {
                if !self.levi(c).has_semistable_point(opts)? {
                    return Ok(None);
                }
                let (dim_l, dim_flag) = self.dims(c);
                let candidate = Candidate {
                    lambda: c.lambda.clone(),
                    norm2: c.norm2.clone(),
                    support: c.support.iter().map(|&i| &self.sh.weights[i] - &self.origin).collect(),
                };
                Ok(Some(Stratum { candidate, dim_l, dim_flag, dim_total: dim_l + dim_flag }))
            })
            .collect();
        let mut strata = Vec::new();
        for s in kept {
            strata.extend(s?);
        }
        strata.sort_by(|a, b| {
            (Reverse(a.dim_total), &a.candidate.lambda).cmp(&(Reverse(b.dim_total), &b.candidate.lambda))
        });
        let dim_nullcone = strata.first().map_or(0, |s| s.dim_total);
        let num_components = strata.iter().filter(|s| s.dim_total == dim_nullcone).count() as u64;
        Ok(NullconeReport {
            dim_module: self.dim(),
            dim_nullcone,
            num_components,
            strata,
            subsets_visited: visited,
            candidates_examined: examined,
        })
    }
}

fn hull_certificate(c: &Candidate) -> bool {
    let support: Vec<QVec> = c.support.iter().cloned().collect();
    match min_norm_point_hull(&support) {
        Ok(q) => q == c.lambda,
        Err(_) => false,
    }
}

fn public(action: &Action, c: &Cand) -> Candidate {
    Candidate {
        lambda: c.lambda.clone(),
        norm2: c.norm2.clone(),
        support: c.support.iter().map(|&i| &action.sh.weights[i] - &action.origin).collect(),
    }
}

/// All dominant min-norm points of affine hulls of affinely independent
/// weight subsets, up to the Weyl group.
pub fn enumerate_candidates(ws: &WeightSystem, opts: &EnumOptions) -> Result<Enumeration> {
    if ws.entries().is_empty() {
        return Err(Error::TrivialModule);
    }
    let sh = Shared::new(ws);
    let action = Action::of(&sh);
    let (cands, subsets_visited) = opts.run(|| action.enumerate(opts))?;
    Ok(Enumeration { candidates: cands.iter().map(|c| public(&action, c)).collect(), subsets_visited })
}

/// Whether `c.lambda` is the min-norm point of the convex hull of its own
/// support.
pub fn optimality_filter(_ws: &WeightSystem, c: &Candidate) -> bool {
    hull_certificate(c)
}

/// Whether the weights on the hyperplane `<mu, lambda> = |lambda|^2` carry a
/// vector that is semistable for the Levi factor of `lambda`. Exactly the
/// candidates passing this index nonempty strata; it implies
/// [`optimality_filter`].
pub fn levi_semistable(ws: &WeightSystem, c: &Candidate, opts: &EnumOptions) -> Result<bool> {
    let sh = Shared::new(ws);
    let action = Action::of(&sh);
    let c = action.candidate(c.lambda.clone());
    opts.run(|| action.levi(&c).has_semistable_point(opts))
}

pub fn stratum_of(ws: &WeightSystem, c: &Candidate) -> Stratum {
    let dim_l = c.support.iter().map(|mu| ws.multiplicity(mu)).sum();
    let dim_flag = ws
        .datum()
        .positive_roots()
        .iter()
        .filter(|a| a.dot_unchecked(&c.lambda).is_positive())
        .count() as u64;
    Stratum { candidate: c.clone(), dim_l, dim_flag, dim_total: dim_l + dim_flag }
}

/// Builds the report from an already enumerated candidate list.
pub fn report_from_candidates(
    ws: &WeightSystem,
    enumeration: Enumeration,
    opts: &EnumOptions,
) -> Result<NullconeReport> {
    let sh = Shared::new(ws);
    let action = Action::of(&sh);
    let cands = enumeration.candidates.into_iter().map(|c| action.candidate(c.lambda)).collect();
    opts.run(|| action.report(cands, enumeration.subsets_visited, opts))
}

/// Full pipeline: enumerate, filter, measure, and count maximal strata.
pub fn analyze(ws: &WeightSystem, opts: &EnumOptions) -> Result<NullconeReport> {
    if ws.highest().is_zero() {
        return Err(Error::TrivialModule);
    }
    let sh = Shared::new(ws);
    let action = Action::of(&sh);
    opts.run(|| {
        let (cands, visited) = action.enumerate(opts)?;
        action.report(cands, visited, opts)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::int;
    use crate::rootsystem::{RootDatum, RootSystemType, Series};
    use crate::weightsys::weight_system;

    fn ws(s: Series, r: usize, c: &[i64]) -> WeightSystem {
        let d = RootDatum::build(RootSystemType::new(s, r).unwrap()).unwrap();
        let l = d.weight(c).unwrap();
        weight_system(&d, &l, 300).unwrap()
    }

    fn w1(ws: &WeightSystem) -> QVec {
        ws.datum().fundamental_weights()[0].clone()
    }

    #[test]
    fn a1_standard_candidates() {
        let ws = ws(Series::A, 1, &[1]);
        let e = enumerate_candidates(&ws, &EnumOptions::default()).unwrap();
        let lambdas: Vec<_> = e.candidates.iter().map(|c| c.lambda.clone()).collect();
        assert_eq!(lambdas, vec![w1(&ws)]);
    }

    #[test]
    fn a1_quartic_candidates() {
        let ws = ws(Series::A, 1, &[4]);
        let e = enumerate_candidates(&ws, &EnumOptions::default()).unwrap();
        let got: BTreeSet<_> = e.candidates.iter().map(|c| c.lambda.clone()).collect();
        let w = w1(&ws);
        assert_eq!(got, BTreeSet::from([w.scale(&int(2)), w.scale(&int(4))]));
    }

    #[test]
    fn zero_weight_gives_no_candidate() {
        let ws = ws(Series::A, 1, &[2]);
        let e = enumerate_candidates(&ws, &EnumOptions::default()).unwrap();
        assert!(e.candidates.iter().all(|c| !c.lambda.is_zero()));
        assert_eq!(e.candidates.len(), 1);
    }

    #[test]
    fn quartic_filter_and_strata() {
        let ws = ws(Series::A, 1, &[4]);
        let w = w1(&ws);
        let c2 = Candidate::new(&ws, w.scale(&int(2)));
        assert_eq!(c2.support, BTreeSet::from([w.scale(&int(4)), w.scale(&int(2))]));
        assert!(optimality_filter(&ws, &c2));
        let s = stratum_of(&ws, &c2);
        assert_eq!((s.dim_l, s.dim_flag, s.dim_total), (2, 1, 3));

        let c4 = Candidate::new(&ws, w.scale(&int(4)));
        assert!(optimality_filter(&ws, &c4));
        let s = stratum_of(&ws, &c4);
        assert_eq!((s.dim_l, s.dim_flag, s.dim_total), (1, 1, 2));
    }

    #[test]
    fn filter_rejects_inconsistent_directions() {
        // Weights {2, 0, -2} (in units of w1): only lambda = 2 w1 survives.
        let ws = ws(Series::A, 1, &[2]);
        let w = w1(&ws);
        assert!(optimality_filter(&ws, &Candidate::new(&ws, w.scale(&int(2)))));
        assert!(!optimality_filter(&ws, &Candidate::new(&ws, w.clone())));
        assert!(!optimality_filter(&ws, &Candidate::new(&ws, w.scale(&int(3)))));
    }

    #[test]
    fn a1_standard_stratum() {
        let ws = ws(Series::A, 1, &[1]);
        let r = analyze(&ws, &EnumOptions::default()).unwrap();
        assert_eq!(r.strata.len(), 1);
        let s = &r.strata[0];
        assert_eq!((s.dim_l, s.dim_flag, s.dim_total), (1, 1, 2));
        assert_eq!((r.dim_nullcone, r.num_components), (2, 1));
    }

    #[test]
    fn binary_quartic_report() {
        let r = analyze(&ws(Series::A, 1, &[4]), &EnumOptions::default()).unwrap();
        assert_eq!((r.dim_module, r.dim_nullcone, r.num_components), (5, 3, 1));
        assert_eq!(r.strata.iter().map(|s| s.dim_total).collect::<Vec<_>>(), vec![3, 2]);
    }

    #[test]
    fn reducible_small_cases() {
        let r = analyze(&ws(Series::A, 3, &[0, 2, 0]), &EnumOptions::default()).unwrap();
        assert_eq!((r.dim_module, r.num_components), (20, 2));
        let r = analyze(&ws(Series::D, 4, &[2, 0, 0, 0]), &EnumOptions::default()).unwrap();
        assert_eq!((r.dim_module, r.num_components), (35, 2));
    }

    #[test]
    fn trivial_module_rejected() {
        let ws = ws(Series::A, 2, &[0, 0]);
        assert_eq!(analyze(&ws, &EnumOptions::default()).unwrap_err(), Error::TrivialModule);
    }

    #[test]
    fn budget_is_enforced() {
        let ws = ws(Series::D, 4, &[2, 0, 0, 0]);
        let opts = EnumOptions { max_subsets: 10, ..EnumOptions::default() };
        assert_eq!(analyze(&ws, &opts).unwrap_err(), Error::SubsetBudget { budget: 10 });
    }
}

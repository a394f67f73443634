//! Exact computation of the nullcone of an irreducible representation of a
//! simple algebraic group: its dimension and the number of its irreducible
//! components of maximal dimension.
//!
//! The pipeline is
//!
//! 1. [`rootsystem`]: build the root datum of a Cartan type in Bourbaki
//!    coordinates;
//! 2. [`weightsys`]: compute the weights of the irreducible module with a
//!    given highest weight (Freudenthal recursion);
//! 3. [`strata`]: enumerate optimal destabilising one-parameter subgroups
//!    from the weight polytope with [`exactgeom`] and count the strata of
//!    maximal dimension.
//!
//! [`catalog`] holds the classification of irreducible representations of
//! simple groups with a free algebra of invariants, together with the
//! expected component counts, and [`cli`] drives everything from the
//! command line.
//!
//! ```
//! use nullcone::{analyze_module, EnumOptions, RootSystemType, Series};
//!
//! let ty = RootSystemType::new(Series::A, 1).unwrap();
//! let report = analyze_module(ty, &[4], &EnumOptions::default()).unwrap();
//! assert_eq!(report.dim_module, 5);
//! assert_eq!(report.dim_nullcone, 3);
//! assert_eq!(report.num_components, 1);
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactgeom;
pub mod rootsystem;
pub mod strata;
pub mod weightsys;

pub use error::{Error, Result};
pub use exactgeom::{QVec, Rational};
pub use rootsystem::{RootDatum, RootSystemType, Series, Weight};
pub use strata::{analyze, EnumOptions, NullconeReport, Stratum};
pub use weightsys::{weight_system, weyl_dim, WeightSystem};

/// Builds the datum and weight system for `(ty, fw_coords)` and runs the
/// stratification.
pub fn analyze_module(
    ty: RootSystemType,
    fw_coords: &[i64],
    opts: &EnumOptions,
) -> Result<NullconeReport> {
    let datum = RootDatum::build(ty)?;
    let lambda = datum.weight(fw_coords)?;
    let ws = weight_system(&datum, &lambda, opts.dim_cap)?;
    analyze(&ws, opts)
}

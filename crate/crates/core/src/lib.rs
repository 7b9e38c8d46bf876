//! Exact computations with the rational Cherednik algebra of the cyclic group
//! `Z/n`: PBW normal ordering, the standard module and its costandard-side
//! model `M`, the good parameter set, endomorphism dimensions and the
//! cyclotomic Hecke algebra action.

pub mod algebra;
pub mod criteria;
pub mod endo;
pub mod error;
pub mod expm;
pub mod hecke;
pub mod homspace;
pub mod matrix;
pub mod modules;
pub mod params;
pub mod scalars;

pub use algebra::{Cherednik, Letter, Monomial, PBWElement};
pub use criteria::{CriterionReport, DkReport, GenerationReport};
pub use endo::EndReport;
pub use error::{Error, Result};
pub use hecke::{EtaMatrices, HeckePoly};
pub use homspace::HomReport;
pub use matrix::{GradedMatrix, Label};
pub use modules::{Generator, ModVector, ModuleTag};
pub use params::{CyclicParams, ExactParams, FloatParams};
pub use scalars::{ComplexF, CycloElem, Field, FromParam, HasRoots, ParamScalar, Rational, Scalar};

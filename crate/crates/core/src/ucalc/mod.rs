//! Univariate toolbox: polynomials over `F_p`, truncated power series,
//! quotient rings `F_p[t]/(t^k)[y]/(w)`, and the linear algebra and
//! reconstruction routines the homotopy needs on top of them.

pub mod linalg;
pub mod pade;
pub mod quot;
pub mod ring;
pub mod series;
pub mod unipoly;

pub use linalg::{adjugate, charpoly, det, ring_solve, solve_field, solve_local, Matrix};
pub use pade::pade;
pub use quot::{QuotElem, QuotRing};
pub use ring::Ring;
pub use series::{Series, SeriesRing};
pub use unipoly::{crt, gcd, is_squarefree, squarefree_part, xgcd, UniPoly};

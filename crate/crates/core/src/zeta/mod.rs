//! The zeta certification pipeline.
//!
//! For a vertex count `q` admitting an orthogonal permutation family, the
//! quantity `zeta_q` is the minimum over all `q`-vertex tournaments `Q` of
//! the best achievable family average of the fractional triangle packing
//! value of `Q_L(sigma)`. A lower bound on `zeta_q` translates directly into
//! an upper-bound constant for 3-decycling via [`bound::bound_from_zeta`].
//!
//! Everything on this path is exact: finite fields are table-checked at
//! construction, the LP is solved by rational simplex with Bland's rule and
//! comes with a dual certificate, and averages are arbitrary-precision
//! rationals.

pub mod bound;
pub mod canon;
pub mod enumerate;
pub mod family;
pub mod field;
pub mod packing;
pub mod simplex;

pub use bound::{bound_from_zeta, family_average, zeta_lower_bound, ZetaOptions, ZetaReport};
pub use enumerate::enumerate_tournaments;
pub use family::{orthogonal_family, verify_orthogonal, zeta_base_family, OrthogonalFamily};
pub use field::FiniteField;
pub use packing::{fractional_triangle_packing, FractionalPacking};

//! Group-ring arithmetic, hyperbolic forms over `Z[Z/m]`, Lagrangian
//! complement construction, Steenrod-square bookkeeping for `K(Z/m, 1)` and
//! the census of free `Z/m`-actions on `#g(Sⁿ×Sⁿ)`.

pub mod ahss;
pub mod census;
pub mod forms;
pub mod lagrangian;
pub mod ring;
pub mod selftest;

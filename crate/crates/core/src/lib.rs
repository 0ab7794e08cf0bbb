pub mod detsys;
pub mod error;
pub mod gbsolve;
pub mod homotopy;
pub mod geom;
pub mod mpoly;
pub mod scalar;
pub mod sysfile;
pub mod zdp;
pub mod ucalc;

//! Delaunay triangulations of surface point clouds by diagonal switches.
//!
//! The crate turns a triangulated point cloud of a surface in R³ into a
//! Delaunay triangulation by flipping edges whose opposite angles sum to
//! more than π. Termination is certified by the lexicographic potential
//! (total area, −total ideal hyperbolic volume), which every switch
//! strictly decreases. Independent checkers verify the Delaunay property,
//! embeddedness, point-cloud density and almost-flatness, and a planar
//! brute-force oracle cross-checks the flip driver on small inputs.
//!
//! Module map:
//! - [`geom`] — geometric kernel: angles, areas, circumcircles, plane
//!   fitting, triangle intersection, and the Lobachevsky volume of ideal
//!   tetrahedra.
//! - [`mesh`] — half-edge triangle mesh with boundary, the diagonal
//!   switch, structural validation, OFF/OBJ serialization.
//! - [`flipper`] — flip drivers: global greedy/FIFO, patch-local, and the
//!   round-based disk scheduler, all reporting potential traces.
//! - [`verify`] — independent checkers and the planar oracle.
//! - [`genex`] — deterministic generators: spheres, Monge patches, tori,
//!   and the thin-triangle Delaunay counterexample.

pub mod flipper;
pub mod genex;
pub mod geom;
pub mod mesh;
pub mod tol;
pub mod verify;

pub use tol::Tolerances;

//! kappar models pairs (V, B) of a smooth projective real surface and a
//! normal crossing boundary divisor as decorated weighted dual graphs, and
//! computes their birational and topological invariants with exact
//! arithmetic: blow-up surgery on the graph, elimination of imaginary loops
//! in the real boundary, Zariski decomposition by iterative peeling, the
//! logarithmic Kodaira dimension and its real form, and Smith normal form
//! homology invariants of the complex model.

pub mod birational;
pub mod docs;
pub mod dot;
pub mod gallery;
pub mod homology;
pub mod kodaira;
pub mod lattice;
pub mod pair;
pub mod report;

//! Combinatorics of central arrangements: circuits, deletion/contraction,
//! stretched multiarrangements, the intersection lattice with its Moebius
//! function, and the combinatorial Hilbert-series prediction.

mod arrangement;
mod circuits;
mod io;
mod lattice;
mod stretched;

pub use arrangement::{Arrangement, ArrangementError, Contraction, Deletion};
pub use circuits::{circuits, circuits_with_mode, Circuit};
pub use io::{
    parse_arrangement_json, simple_to_json, stretched_to_json, ArrangementJson, InputArrangement,
    LoadError,
};
pub use lattice::{intersection_lattice, ot_hilbert_prediction, poincare_polynomial, Flat};
pub use stretched::{ProductsFactorization, StretchedArrangement};

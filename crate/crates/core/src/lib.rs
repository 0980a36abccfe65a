//! Twisted torus knots T(p,q,3,s) as braids and diagrams, the modular
//! label walk that certifies them as tunnel number one, an exhaustive
//! scanner for that certificate, and diagram-level invariants (Kauffman
//! bracket, Jones, torus-knot closed forms) as independent oracles.

pub mod braid;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod tunnel;

pub use braid::{
    random_knot_braid, torus_braid, twisted_torus_braid, twisted_torus_word, BraidWord,
    Permutation, TwistedTorusKnot,
};
pub use diagram::{gauss_code, pd_code_of_closure, PDCode};
pub use error::{Error, Result};
pub use invariants::{
    alexander_torus_closed_form, compare_up_to_mirror, equal_up_to_unit, jones, jones_capped,
    jones_torus_closed_form, kauffman_bracket, kauffman_bracket_capped, Laurent, PolyMatch,
    DEFAULT_CROSSING_CAP,
};
pub use tunnel::{
    classify_tunnel, find_case_witness, first_hit, first_hit_walk, scan_theorem, strand_labels,
    CaseKind, CaseWitness, Counterexample, CounterexampleKind, Direction, FirstHit,
    PairHistogram, ScanOptions, ScanReport, StrandLabeling, TunnelArc, TunnelCertificate,
};

//! An explicit left order on the free group `F_k`, `k >= 2`, extending the
//! lexicographic order on the free monoid over `s_1 < s_2 < ... < s_k`.
//!
//! The order is decided by a linear-time subword-counting [`weight`]. The
//! [`action`] module evaluates the piecewise-linear action on the line that
//! defines the order, exactly, and [`harness`] checks the two against each
//! other on whole balls of the Cayley graph.

pub mod action;
pub mod harness;
pub mod order;
pub mod words;

pub use action::{
    arc_image, build_generator, build_s0, invert_map, orbit_zero, partition, verify_pingpong, Arc,
    ArcLabel, FreeAction, PingPongReport, PlMap, Rational, Span,
};
pub use harness::{enumerate_ball, sort_ball, verify, Ball, VerifyReport};
pub use order::{
    compare, is_positive, lex_compare, sign_of, sign_stream, weight, weight_f2_variant,
    ConeRecognizer, HalfInt, Sign,
};
pub use words::{concat, free_reduce, invert, parse_word, reverse, Letter, Rank, ReducedWord};

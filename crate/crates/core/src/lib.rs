//! Positive braid monoids `MB_n` with a decidable word problem, simple braids
//! and their centralizers, and commuting graphs with exact planarity testing.
//!
//! The entry point is [`BraidEngine`], which owns the canonical-form cache and
//! the resource limits. Everything else is a function of an engine and plain
//! values.
//!
//! ```
//! use braidmon::{BraidEngine, BraidWord};
//!
//! let engine = BraidEngine::default();
//! let u: BraidWord = "5: 4 3 3 2 3".parse().unwrap();
//! let v: BraidWord = "5: 2 4 3 2 2".parse().unwrap();
//! assert!(engine.braid_eq(&u, &v).unwrap());
//! ```

pub mod centralizer;
pub mod error;
pub mod graph;
pub mod lemmas;
pub mod monoid;
pub mod planarity;
pub mod simple;
pub mod symm;
pub mod verify;
pub mod word;

pub use centralizer::{
    centralizer_of_generator, predicted_count, simple_centralizer, tail_set,
    verify_struc_decomposition, CentralizerResult, Decomposition, TailSet,
};
pub use error::{BraidError, Result};
pub use graph::{
    build_graph, graph_for, graph_simple_braids, graph_simple_perms, graph_sym, CommutingGraph,
    Family, PlanarityVerdict, Witness,
};
pub use monoid::{BraidEngine, CanonicalBraid, Limits};
pub use planarity::KuratowskiKind;
pub use simple::{checked_fib, delta, enum_divisors_delta, enum_simple, fib, is_simple, SimpleBraid};
pub use symm::{compose, enum_simple_perms, enum_sym, perm_commute, project, transposition, Permutation};
pub use verify::{verify_all, Entry, VerificationReport, VerifyOptions};

pub use word::{BraidWord, Letter};

//! Colored Petri net engine: a textual model language, a seeded
//! random-firing simulator, and an explicit-state reachability analyzer,
//! with a bundled green supply chain reference model.

pub mod compiled;
pub mod dsl;
pub mod engine;
pub mod gscm;
pub mod marking;
pub mod multiset;
pub mod net;
pub mod statespace;

pub use compiled::CompiledNet;
pub use marking::Marking;
pub use multiset::Multiset;
pub use net::Net;

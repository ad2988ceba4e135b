//! Gill–Guillot graphs: vertices are the elements of a union `𝒞` of
//! conjugacy classes of elements of prime order `p`, and `u ~ v` when they
//! are distinct, commute, and `uv^-1` or `u^-1 v` lies in `𝒞`.
//!
//! The main entry point is [`analyze`], which finds the stabilizer
//! `N_G(Λ)` of the component `Λ` of a class representative `t`, the size of
//! `Λ`, the group `Δ = <Λ>`, and whether the graph is connected.

use std::collections::HashSet;

use permcore::Perm;

pub mod analyze;
pub mod component;
pub mod cover;
pub mod error;
pub mod oracle;
pub mod union;

pub use analyze::{
    analyze, analyze_with, strongly_p_embedded, ComponentReport, Method, SeedReport, SpeVerdict,
    Strategy, Verdict,
};
pub use component::{
    component_stabilizer, component_stabilizer_sylow, neighbor_orbit_reps, Component, Neighbor,
    NeighborReps,
};
pub use cover::{lex_product_check, quotient_transfer, CentralQuotient, LexOutcome, TransferCertificate};
pub use error::GraphError;
pub use oracle::{
    brute_force_component, compare_with_oracle, enumerate_union, is_pure, Comparison, OracleResult,
    ORACLE_BOUND,
};
pub use union::ClassUnion;

/// Orbit of `t` under conjugation by `gens`, starting with `t`.
pub(crate) fn conj_orbit(t: &Perm, gens: &[Perm]) -> Vec<Perm> {
    let mut out = vec![t.clone()];
    let mut seen: HashSet<Perm> = [t.clone()].into();
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let b = out[i].conj(g);
            if seen.insert(b.clone()) {
                out.push(b);
            }
        }
        i += 1;
    }
    out
}

//! Generator-level biorderability analysis for knot quandles.
//!
//! Each crossing relation `x*y=z` forces `z` strictly between `x` and `y` in
//! any biorder. The crate derives these betweenness constraints from a
//! presentation, enumerates every strict total order of the generators that
//! satisfies them, and certifies that the generators are pairwise distinct
//! with Fox colorings (homomorphisms to `Core(Z_n)`). An empty order set plus
//! a distinctness certificate proves the quandle is not biorderable.

pub mod coloring;
pub mod constraints;
pub mod error;
pub mod presentation;
pub mod report;
pub mod solver;

pub use coloring::{
    certify_with_moduli, core_op, distinctness_certificate, distinctness_certificate_with,
    knot_determinant, solve_colorings_mod, verify_coloring, Coloring, ColoringSpace,
    DistinctnessCertificate, DistinctnessOptions,
};
pub use constraints::{derive_betweenness, satisfies, BetweennessConstraint, ConstraintSet};
pub use error::{Error, Result};
pub use presentation::{
    catalog, catalog_lookup, catalog_names, parse_presentation, parse_presentations, GenId,
    KnotPresentation,
};
pub use report::{
    analyze_all, analyze_knot, render_report, render_reports, render_sweep, sweep_catalog,
    AnalysisOptions, Format, KnotReport, RenderOptions,
};
pub use solver::{
    analyze, backtracking_orders, brute_force_orders, canonical_chain, Chain, Status, Verdict,
};

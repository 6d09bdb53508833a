//! Gradings from commuting automorphisms: types, universal groups,
//! coarsening and the verification tables.

mod core;
mod presets;
mod semisimple;
pub mod spans;
mod tables;
mod toral;

pub use self::core::{
    grading_from_automorphisms, grading_from_components, trivial_grading, universal_group_from_relations, Component,
    ComponentLocator, Grading, GradingError, GradingType, Label, Provenance, Slot,
};
pub use presets::{
    main_row_maps, preset, preset_names, AlgebraKind, ComponentReport, GradingReport, GroupReport, Preset, TableError,
    ALBERT_PRESETS, H3F_PRESETS, MAIN_ROWS,
};
pub use semisimple::{is_homogeneous_semisimple, label_order};
pub use spans::{
    corrected_fixture, parse_fixtures, validate_fixture, vector_variants, AtomResolver, Erratum, Fixture,
    FixtureReport, SlotKind,
};
pub use tables::{
    automorphism_pairs, order_lemma_samples, table_names, verify_all, verify_table, RowCheck, TableReport, TABLES,
};
pub use toral::{toral_report, ToralReport};

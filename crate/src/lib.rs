//! Holds the workspace acceptance target (`tests/acceptance.rs`); no code of its own.

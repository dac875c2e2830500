//! The `.qk` text format and its command-line interface.
//!
//! A `.qk` document declares lattices, quantaloids, enriched
//! categories, functors, distributors, shapes and lax functors; the
//! pipeline is [`parser::parse`] for syntax, [`loader::load`] for
//! elaboration into live `quantakit` values, and [`pretty::pretty`]
//! to print a document back in canonical form. The binary in this
//! crate exposes the calculus over such documents as subcommands.

pub mod ast;
pub mod lexer;
pub mod loader;
pub mod parser;
pub mod pretty;
pub mod report;

//! Compiler toolkit for logic programs with ordered disjunction (LPOD) and
//! CR-Prolog2.
//!
//! The crate is organised bottom-up:
//!
//! * [`model`] holds the source-level program model and its validation.
//! * [`parser`] reads and renders the `.lpod` / `.crp` surface syntax.
//! * [`engine`] is an exhaustive stable-model engine for ground programs.
//! * [`lpod`] and [`crp`] are reference implementations of the two
//!   preference semantics, built on the engine.
//! * [`asp`] is the non-ground ASP document model with its emitter, reader
//!   and grounder; [`translate`] produces such documents from programs.
//! * [`eval`] executes translated documents per assumption tuple and reads
//!   the preferred answer sets back onto the original signature.
//!
//! The crate only needs `alloc`. Work that can be distributed (per tuple or
//! per applied-rule subset) goes through the [`exec::Executor`] trait so
//! that a hosting application can plug in a thread pool.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod asp;
pub mod crp;
pub mod engine;
pub mod error;
pub mod eval;
pub mod exec;
pub mod lex;
pub mod lpod;
pub mod model;
pub mod parser;
pub mod translate;

pub use crate::engine::{Engine, GroundProgram, GroundRule};
pub use crate::error::{Error, SourceSpan};
pub use crate::exec::{Executor, Sequential};
pub use crate::lpod::PreferenceCriterion;
pub use crate::model::{
    AnswerSet, AssumptionList, Atom, DegreeList, Dialect, Head, Literal, Program, Rule, RuleKind,
    Term,
};

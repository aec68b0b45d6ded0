//! Free operated groups, free differential groups and free Rota-Baxter
//! groups as exact symbolic objects, with evaluators into finite targets and
//! a brute-force laboratory for operator laws on finite groups.
//!
//! ```
//! use operated_groups::rota_baxter::{diamond, RbWord};
//! use operated_groups::syntax::parse_word;
//!
//! let u = RbWord::new(parse_word("<x>").unwrap()).unwrap();
//! let v = RbWord::new(parse_word("<y>").unwrap()).unwrap();
//! assert_eq!(diamond(&u, &v).unwrap().to_string(), "<x <x> y <x>^-1>");
//! ```

pub mod algebra;
pub mod cli;
pub mod differential;
pub mod finite;
pub mod operated;
pub mod rota_baxter;
pub mod sample;
pub mod syntax;
pub mod words;

pub use algebra::{Assignment, EvalError, Group, Operated};
pub use differential::{DiffLetter, DiffWord};
pub use rota_baxter::RbWord;
pub use syntax::{parse_diff_word, parse_word, ParseError};
pub use words::{Atom, AtomKind, Sign, Symbol, Word};

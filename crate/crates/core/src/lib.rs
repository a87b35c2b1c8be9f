//! A finite-model workbench for bounded involution lattices, Brouwer-Zadeh
//! lattices, PBZ*-lattices, antiortholattices, quasi-Stone algebras and
//! diamond-De Morgan modal algebras: construction, classification, identity
//! and quasi-identity checking, embedding and congruence machinery, and the
//! term translations between the distributive PBZ* and weak Lukasiewicz
//! worlds.
//!
//! ```
//! use pbzlat::*;
//!
//! // the three-element chain carries SK, the four-element one does not
//! assert!(holds(&chain(3), "SK").unwrap());
//! assert!(!holds(&chain(4), "SK").unwrap());
//!
//! // the benzene ring sits inside F8 as an involution lattice only
//! let b6 = catalog("B6").unwrap();
//! let f8 = catalog("F8").unwrap();
//! assert!(find_embedding(&b6, &f8, Signature::I).unwrap().is_some());
//! assert!(find_embedding(&b6, &f8, Signature::Bi).unwrap().is_none());
//!
//! // ad-hoc claims parse against a signature and check exhaustively
//! let claim = match parse_claim("x & dia(y) <= box(x) | y", Signature::Bz).unwrap() {
//!     Parsed::Equation(eq) => eq,
//!     _ => unreachable!(),
//! };
//! assert!(check_identity(&catalog("H").unwrap(), &claim).unwrap().is_none());
//! ```

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod congruence;
pub mod constructors;
pub mod discriminator;
pub mod embedding;
pub mod equations;
pub mod error;
pub mod format;
pub mod modal;
pub mod parser;
pub mod partition;
pub mod stone;
pub mod term;

pub use algebra::{AlgebraBuilder, Elem, FiniteAlgebra, Signature, UnaryOp};
pub use catalog::{catalog, catalog_entries, catalog_names, complete_brouwer_tables};
pub use classify::{
    classify, recheck_witness, AlgebraClass, ClassificationReport, Membership, Witness,
};
pub use congruence::{
    all_congruences, is_congruence, is_subdirectly_irreducible, monolith, principal_congruence,
    quotient,
};
pub use constructors::{
    chain, direct_product, dual, horizontal_sum_mo, ordinal_sum, symmetric_extension,
};
pub use discriminator::{truncated_sum_table, verify_discriminator, DiscriminatorReport};
pub use embedding::{find_embedding, find_isomorphism, subuniverse_closure, ElementMap};
pub use equations::{
    check_claim, holds, named_equation, named_equation_names, ClaimOutcome, NamedClaim,
};
pub use error::{Error, Result};
pub use format::{from_text, load_algebra, save_algebra, to_text};
pub use modal::{bz_of_modal, classify_modal, modal_of_bz, ModalClass, ModalClassReport};
pub use parser::{parse, parse_claim, print_term, Parsed};
pub use partition::Partition;
pub use stone::{boolean_kernel, classify_stone, StoneClass, StoneReport};
pub use term::{
    build_m_term, check_identity, check_quasiidentity, eval, m_term_pair, Counterexample, Equation,
    Quasiequation, Term, VarSplit,
};

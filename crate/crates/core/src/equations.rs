//! The named equations and quasiequations the workbench knows about, frozen
//! as parsed ASTs.

use crate::algebra::{FiniteAlgebra, Signature};
use crate::error::{Error, Result};
use crate::parser::{parse_claim, print_equation, print_quasiequation, Parsed};
use crate::term::{check_identity, check_quasiidentity, Counterexample, Equation, Quasiequation};
use std::collections::BTreeMap;
use std::sync::LazyLock;

/// A checkable named statement. QS9 and S1 are stated as "iff" conditions and
/// are therefore conjunctions of two quasiequations.
#[derive(Debug, Clone, PartialEq)]
pub enum NamedClaim {
    Identity(Equation),
    Quasi(Quasiequation),
    All(Vec<NamedClaim>),
}

impl NamedClaim {
    pub fn var_count(&self) -> usize {
        match self {
            NamedClaim::Identity(e) => e.var_count(),
            NamedClaim::Quasi(q) => q.var_count(),
            NamedClaim::All(parts) => parts.iter().map(NamedClaim::var_count).max().unwrap_or(0),
        }
    }

    pub fn display(&self) -> String {
        match self {
            NamedClaim::Identity(e) => print_equation(e),
            NamedClaim::Quasi(q) => print_quasiequation(q),
            NamedClaim::All(parts) => parts
                .iter()
                .map(NamedClaim::display)
                .collect::<Vec<_>>()
                .join("  and  "),
        }
    }

    pub fn var_names(&self) -> &[String] {
        match self {
            NamedClaim::Identity(e) => &e.var_names,
            NamedClaim::Quasi(q) => &q.var_names,
            NamedClaim::All(parts) => parts[0].var_names(),
        }
    }
}

/// Outcome of checking a claim on an algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum ClaimOutcome {
    Holds,
    Fails {
        /// Printed form of the failing part (for conjunctions).
        part: String,
        var_names: Vec<String>,
        counterexample: Counterexample,
    },
}

impl ClaimOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ClaimOutcome::Holds)
    }
}

/// Check any claim, returning the first counterexample of the first failing
/// part.
pub fn check_claim(algebra: &FiniteAlgebra, claim: &NamedClaim) -> Result<ClaimOutcome> {
    match claim {
        NamedClaim::Identity(e) => Ok(match check_identity(algebra, e)? {
            None => ClaimOutcome::Holds,
            Some(cex) => ClaimOutcome::Fails {
                part: print_equation(e),
                var_names: e.var_names.clone(),
                counterexample: cex,
            },
        }),
        NamedClaim::Quasi(q) => Ok(match check_quasiidentity(algebra, q)? {
            None => ClaimOutcome::Holds,
            Some(cex) => ClaimOutcome::Fails {
                part: print_quasiequation(q),
                var_names: q.var_names.clone(),
                counterexample: cex,
            },
        }),
        NamedClaim::All(parts) => {
            for p in parts {
                let out = check_claim(algebra, p)?;
                if !out.holds() {
                    return Ok(out);
                }
            }
            Ok(ClaimOutcome::Holds)
        }
    }
}

fn claim(text: &str, sig: Signature) -> NamedClaim {
    match parse_claim(text, sig).unwrap_or_else(|e| panic!("bad builtin claim {text:?}: {e}")) {
        Parsed::Equation(e) => NamedClaim::Identity(e),
        Parsed::Quasiequation(q) => NamedClaim::Quasi(q),
        Parsed::Term(..) => unreachable!(),
    }
}

static REGISTRY: LazyLock<BTreeMap<&'static str, NamedClaim>> = LazyLock::new(|| {
    use Signature::{Bi, Bz, Lattice, Modal, I};
    let mut m = BTreeMap::new();
    m.insert("star", claim("(x & x')~ = x~ | x'~", Bz));
    m.insert("SDM", claim("(x & y)~ = x~ | y~", Bz));
    m.insert("SK", claim("x & dia(y) <= box(x) | y", Bz));
    m.insert("DIST", claim("x & (y | z) = (x & y) | (x & z)", Lattice));
    m.insert("J0", claim("(x & y~) | (x & dia(y)) = x", Bz));
    m.insert("J2", claim("(x & (y & y')~) | (x & dia(y & y')) = x", Bz));
    m.insert(
        "D2OLjoin",
        claim(
            "(x & x')~ | (y & y')~ | x | x' = (x & x')~ | (y & y')~ | y | y'",
            Bz,
        ),
    );
    m.insert("WDSDM", claim("(x & (y | z))~ = (x & y)~ & (x & z)~", Bz));
    m.insert(
        "DISTjoinTilde",
        claim(
            "(x | x~) & (y | y~ | z | z~) = ((x | x~) & (y | y~)) | ((x | x~) & (z | z~))",
            Bz,
        ),
    );
    m.insert(
        "WDISTjoinTilde",
        claim(
            "((x | x~) & (y | y~ | z | z~))~ = (((x | x~) & (y | y~)) | ((x | x~) & (z | z~)))~",
            Bz,
        ),
    );
    m.insert("Q", claim("x <= y' , x' & y' <= x & y => x = y'", I));
    // the conclusion x' <= y is the substitution y := x' & u into Q; see the
    // unit test deriving the equivalence
    m.insert(
        "Qprime",
        claim("x' & (x' & y)' <= x & (x' & y) => x' <= y", I),
    );
    m.insert("PARA", claim("x <= y , x' & y = 0 => x = y", Bi));
    m.insert("OM", claim("x <= y => y = (y & x') | x", I));
    m.insert(
        "MODULAR",
        claim("x & (y | (x & z)) = (x & y) | (x & z)", Lattice),
    );
    m.insert("KLEENE", claim("x & x' <= y | y'", I));
    m.insert("M1", claim("dia(0) = 0", Modal));
    m.insert("M2", claim("dia(x | y) = dia(x) | dia(y)", Modal));
    m.insert("M3", claim("x <= dia(x)", Modal));
    m.insert("M4", claim("dia(x) = dia(dia(x))", Modal));
    m.insert("M5", claim("dia(x) & dia(x)' = 0", Modal));
    m.insert("M6", claim("dia(x) = box(dia(x))", Modal));
    m.insert("M7", claim("dia(x & x') = dia(x) & dia(x')", Modal));
    m.insert("M8", claim("x' | dia(x) = 1", Modal));
    m.insert("M9", claim("dia(x & y) = dia(x) & dia(y)", Modal));
    m.insert("M10", claim("x & x' = dia(x) & x'", Modal));
    m.insert("QS2", claim("(x | y)~ = x~ & y~", Bz));
    m.insert("QS3", claim("(x & y~)~ = x~ | y~~", Bz));
    m.insert("QS4", claim("x <= x~~", Bz));
    m.insert("QS5", claim("x~ | x~~ = 1", Bz));
    m.insert("QS6", claim("x <= y => y~ <= x~", Bz));
    m.insert("QS7", claim("x & x~ = 0", Bz));
    m.insert("QS8", claim("x~~~ = x~", Bz));
    m.insert(
        "QS9",
        NamedClaim::All(vec![
            claim("x & y~ = 0 => x <= y~~", Bz),
            claim("x <= y~~ => x & y~ = 0", Bz),
        ]),
    );
    m.insert(
        "S1",
        NamedClaim::All(vec![
            claim("x & y = 0 => x <= y~", Bz),
            claim("x <= y~ => x & y = 0", Bz),
        ]),
    );
    m
});

/// Look up a named equation or quasiequation.
pub fn named_equation(name: &str) -> Result<&'static NamedClaim> {
    REGISTRY
        .get(name)
        .ok_or_else(|| Error::UnknownName(format!("equation {name})")))
}

pub fn named_equation_names() -> Vec<&'static str> {
    REGISTRY.keys().copied().collect()
}

/// Convenience: check a named claim, true iff it holds.
pub fn holds(algebra: &FiniteAlgebra, name: &str) -> Result<bool> {
    Ok(check_claim(algebra, named_equation(name)?)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn registry_is_populated() {
        assert!(named_equation("SK").is_ok());
        assert!(named_equation("nope").is_err());
        assert_eq!(named_equation("SK").unwrap().var_count(), 2);
    }

    #[test]
    fn trivial_algebra_satisfies_every_applicable_claim() {
        let d1 = crate::catalog::catalog("D1").unwrap();
        for name in named_equation_names() {
            match check_claim(&d1, named_equation(name).unwrap()) {
                Ok(outcome) => assert!(outcome.holds(), "{name} fails on the trivial algebra"),
                // the modal claims need a diamond D1 does not carry
                Err(crate::error::Error::SignatureError(_)) => {}
                Err(e) => panic!("{name}: {e}"),
            }
        }
    }

    #[test]
    fn reflexive_equation_holds() {
        let d3 = crate::catalog::catalog("D3").unwrap();
        match parse_claim("x = x", Signature::Bz).unwrap() {
            Parsed::Equation(e) => {
                assert!(crate::term::check_identity(&d3, &e).unwrap().is_none())
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn star_round_trips_through_the_parser() {
        let star = named_equation("star").unwrap();
        let printed = star.display();
        match parse(&printed, Signature::Bz).unwrap() {
            Parsed::Equation(e) => assert_eq!(NamedClaim::Identity(e), *star),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn every_claim_survives_print_then_parse() {
        for name in named_equation_names() {
            let c = named_equation(name).unwrap();
            // modal claims reparse under MODAL, everything else under BZ
            let sig = if matches!(
                name,
                "M1" | "M2" | "M3" | "M4" | "M5" | "M6" | "M7" | "M8" | "M9" | "M10"
            ) {
                Signature::Modal
            } else {
                Signature::Bz
            };
            let parts: Vec<&NamedClaim> = match c {
                NamedClaim::All(ps) => ps.iter().collect(),
                one => vec![one],
            };
            for part in parts {
                let printed = part.display();
                let reparsed = parse_claim(&printed, sig)
                    .unwrap_or_else(|e| panic!("{name}: {printed:?}: {e}"));
                let back = match reparsed {
                    Parsed::Equation(e) => NamedClaim::Identity(e),
                    Parsed::Quasiequation(q) => NamedClaim::Quasi(q),
                    Parsed::Term(..) => unreachable!(),
                };
                assert_eq!(&back, part, "{name} changed across print/parse");
            }
        }
    }
}

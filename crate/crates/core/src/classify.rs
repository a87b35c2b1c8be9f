//! Membership checking for the lattice-theoretic classes: from bare lattice
//! properties up through pseudo-Kleene, ortholattices, paraorthomodularity,
//! BZ-lattices, the (*) condition and antiortholattices. Classes whose
//! signature the algebra lacks are reported as not applicable rather than
//! false.

use crate::algebra::{Elem, FiniteAlgebra, Signature};
use crate::equations::{check_claim, named_equation, ClaimOutcome};
use crate::error::{Error, Result};
use crate::parser::{parse_claim, Parsed};
use crate::term::{check_identity, check_quasiidentity, eval};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    Lattice,
    Distributive,
    Modular,
    BoundedInvolution,
    DeMorgan,
    PseudoKleene,
    Kleene,
    Ortholattice,
    Orthomodular,
    Paraorthomodular,
    BrouwerZadeh,
    StarIdentity,
    PbzStar,
    Antiortholattice,
}

pub const ALL_CLASSES: [AlgebraClass; 14] = [
    AlgebraClass::Lattice,
    AlgebraClass::Distributive,
    AlgebraClass::Modular,
    AlgebraClass::BoundedInvolution,
    AlgebraClass::DeMorgan,
    AlgebraClass::PseudoKleene,
    AlgebraClass::Kleene,
    AlgebraClass::Ortholattice,
    AlgebraClass::Orthomodular,
    AlgebraClass::Paraorthomodular,
    AlgebraClass::BrouwerZadeh,
    AlgebraClass::StarIdentity,
    AlgebraClass::PbzStar,
    AlgebraClass::Antiortholattice,
];

impl AlgebraClass {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Lattice => "lattice",
            AlgebraClass::Distributive => "distributive",
            AlgebraClass::Modular => "modular",
            AlgebraClass::BoundedInvolution => "bounded-involution",
            AlgebraClass::DeMorgan => "de-morgan",
            AlgebraClass::PseudoKleene => "pseudo-kleene",
            AlgebraClass::Kleene => "kleene",
            AlgebraClass::Ortholattice => "ortholattice",
            AlgebraClass::Orthomodular => "orthomodular",
            AlgebraClass::Paraorthomodular => "paraorthomodular",
            AlgebraClass::BrouwerZadeh => "brouwer-zadeh",
            AlgebraClass::StarIdentity => "star-identity",
            AlgebraClass::PbzStar => "pbz*",
            AlgebraClass::Antiortholattice => "antiortholattice",
        }
    }

    /// Signature the class definition needs.
    fn applicable(self, sig: Signature) -> bool {
        match self {
            AlgebraClass::Lattice | AlgebraClass::Distributive | AlgebraClass::Modular => true,
            AlgebraClass::BoundedInvolution
            | AlgebraClass::DeMorgan
            | AlgebraClass::PseudoKleene
            | AlgebraClass::Kleene
            | AlgebraClass::Ortholattice
            | AlgebraClass::Orthomodular
            | AlgebraClass::Paraorthomodular => sig.has_kleene() && sig.has_bounds(),
            AlgebraClass::BrouwerZadeh
            | AlgebraClass::StarIdentity
            | AlgebraClass::PbzStar
            | AlgebraClass::Antiortholattice => sig.has_brouwer(),
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Failure evidence: the violated condition in the term grammar (or the
/// special condition `"sharp element outside {0, 1}"`) plus the assignment
/// that violates it, in variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub condition: String,
    pub assignment: Vec<Elem>,
    pub var_names: Vec<String>,
}

pub const SHARP_WITNESS: &str = "sharp element outside {0, 1}";

impl Witness {
    pub fn describe(&self, algebra: &FiniteAlgebra) -> String {
        let binds: Vec<String> = self
            .assignment
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                format!(
                    "{}={}",
                    self.var_names.get(i).map(String::as_str).unwrap_or("?"),
                    algebra.label(e)
                )
            })
            .collect();
        format!("{} fails at {}", self.condition, binds.join(", "))
    }
}

/// Re-evaluate a witness; true iff it still demonstrates the failure.
pub fn recheck_witness(algebra: &FiniteAlgebra, witness: &Witness) -> Result<bool> {
    if witness.condition == SHARP_WITNESS {
        let &e = witness
            .assignment
            .first()
            .ok_or_else(|| Error::VerificationFailed("sharp witness without element".into()))?;
        let sharp = algebra.join(e, algebra.kleene(e)) == algebra.top_element();
        return Ok(sharp && e != algebra.bottom_element() && e != algebra.top_element());
    }
    match parse_claim(&witness.condition, algebra.signature())? {
        Parsed::Equation(eq) => {
            let l = eval(algebra, &eq.lhs, &witness.assignment)?;
            let r = eval(algebra, &eq.rhs, &witness.assignment)?;
            Ok(l != r)
        }
        Parsed::Quasiequation(q) => {
            for p in &q.premises {
                if eval(algebra, &p.lhs, &witness.assignment)?
                    != eval(algebra, &p.rhs, &witness.assignment)?
                {
                    return Ok(false);
                }
            }
            let l = eval(algebra, &q.conclusion.lhs, &witness.assignment)?;
            let r = eval(algebra, &q.conclusion.rhs, &witness.assignment)?;
            Ok(l != r)
        }
        Parsed::Term(..) => Err(Error::VerificationFailed(
            "witness condition is not a claim".into(),
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Holds,
    Fails(Witness),
    NotApplicable,
}

impl Membership {
    pub fn holds(&self) -> bool {
        matches!(self, Membership::Holds)
    }

    pub fn applicable(&self) -> bool {
        !matches!(self, Membership::NotApplicable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    entries: Vec<(AlgebraClass, Membership)>,
}

impl ClassificationReport {
    pub fn get(&self, class: AlgebraClass) -> &Membership {
        &self
            .entries
            .iter()
            .find(|(c, _)| *c == class)
            .expect("all classes present")
            .1
    }

    pub fn holds(&self, class: AlgebraClass) -> bool {
        self.get(class).holds()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AlgebraClass, &Membership)> {
        self.entries.iter().map(|(c, m)| (*c, m))
    }
}

fn named_check(algebra: &FiniteAlgebra, name: &str) -> Result<Membership> {
    match check_claim(algebra, named_equation(name)?)? {
        ClaimOutcome::Holds => Ok(Membership::Holds),
        ClaimOutcome::Fails {
            part,
            var_names,
            counterexample,
        } => Ok(Membership::Fails(Witness {
            condition: part,
            assignment: counterexample.assignment,
            var_names,
        })),
    }
}

fn raw_check(algebra: &FiniteAlgebra, text: &str, sig: Signature) -> Result<Membership> {
    match parse_claim(text, sig)? {
        Parsed::Equation(eq) => Ok(match check_identity(algebra, &eq)? {
            None => Membership::Holds,
            Some(cex) => Membership::Fails(Witness {
                condition: crate::parser::print_equation(&eq),
                assignment: cex.assignment,
                var_names: eq.var_names,
            }),
        }),
        Parsed::Quasiequation(q) => Ok(match check_quasiidentity(algebra, &q)? {
            None => Membership::Holds,
            Some(cex) => Membership::Fails(Witness {
                condition: crate::parser::print_quasiequation(&q),
                assignment: cex.assignment,
                var_names: q.var_names,
            }),
        }),
        Parsed::Term(..) => unreachable!(),
    }
}

fn both(a: Membership, b: impl FnOnce() -> Result<Membership>) -> Result<Membership> {
    match a {
        Membership::Holds => b(),
        fails => Ok(fails),
    }
}

/// Classify an algebra against every class its signature supports.
pub fn classify(algebra: &FiniteAlgebra) -> Result<ClassificationReport> {
    let sig = algebra.signature();
    let mut entries = Vec::with_capacity(ALL_CLASSES.len());
    for class in ALL_CLASSES {
        let membership = if !class.applicable(sig) {
            Membership::NotApplicable
        } else {
            membership_of(algebra, class)?
        };
        entries.push((class, membership));
    }
    Ok(ClassificationReport { entries })
}

fn membership_of(algebra: &FiniteAlgebra, class: AlgebraClass) -> Result<Membership> {
    match class {
        // structural: validated at construction
        AlgebraClass::Lattice | AlgebraClass::BoundedInvolution => Ok(Membership::Holds),
        AlgebraClass::Distributive => named_check(algebra, "DIST"),
        AlgebraClass::Modular => named_check(algebra, "MODULAR"),
        AlgebraClass::DeMorgan => named_check(algebra, "DIST"),
        AlgebraClass::PseudoKleene => named_check(algebra, "KLEENE"),
        AlgebraClass::Kleene => both(membership_of(algebra, AlgebraClass::PseudoKleene)?, || {
            named_check(algebra, "DIST")
        }),
        AlgebraClass::Ortholattice => {
            both(raw_check(algebra, "x | x' = 1", Signature::Bi)?, || {
                raw_check(algebra, "x & x' = 0", Signature::Bi)
            })
        }
        AlgebraClass::Orthomodular => {
            both(membership_of(algebra, AlgebraClass::Ortholattice)?, || {
                named_check(algebra, "OM")
            })
        }
        AlgebraClass::Paraorthomodular => named_check(algebra, "PARA"),
        // the brouwer table axioms are validated at construction, so the
        // remaining content of the BZ class is the pseudo-Kleene reduct
        AlgebraClass::BrouwerZadeh => membership_of(algebra, AlgebraClass::PseudoKleene),
        AlgebraClass::StarIdentity => named_check(algebra, "star"),
        AlgebraClass::PbzStar => both(membership_of(algebra, AlgebraClass::BrouwerZadeh)?, || {
            both(
                membership_of(algebra, AlgebraClass::Paraorthomodular)?,
                || named_check(algebra, "star"),
            )
        }),
        AlgebraClass::Antiortholattice => {
            both(membership_of(algebra, AlgebraClass::PbzStar)?, || {
                let bot = algebra.bottom_element();
                let top = algebra.top_element();
                for s in algebra.sharp_elements()? {
                    if s != bot && s != top {
                        return Ok(Membership::Fails(Witness {
                            condition: SHARP_WITNESS.to_string(),
                            assignment: vec![s],
                            var_names: vec!["x".to_string()],
                        }));
                    }
                }
                Ok(Membership::Holds)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;

    fn b6_ol() -> FiniteAlgebra {
        AlgebraBuilder::new("B6-OL", Signature::Bz, &["0", "a", "b", "b'", "a'", "1"])
            .covers("0", &["a", "b"])
            .covers("a", &["b'"])
            .covers("b", &["a'"])
            .covers("b'", &["1"])
            .covers("a'", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a'"), ("b", "b'")])
            .brouwer_map(&[
                ("0", "1"),
                ("a", "a'"),
                ("b", "b'"),
                ("b'", "b"),
                ("a'", "a"),
                ("1", "0"),
            ])
            .build()
            .unwrap()
    }

    #[test]
    fn b6_with_orthocomplement() {
        let a = b6_ol();
        let r = classify(&a).unwrap();
        assert!(r.holds(AlgebraClass::Ortholattice));
        assert!(!r.holds(AlgebraClass::Orthomodular));
        assert!(!r.holds(AlgebraClass::Paraorthomodular));
        // brute-forced counterexample: x=a, y=b'
        match r.get(AlgebraClass::Paraorthomodular) {
            Membership::Fails(w) => {
                assert_eq!(w.assignment, vec![1, 3]);
                assert!(recheck_witness(&a, w).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trivial_algebra_is_everything() {
        let d1 = AlgebraBuilder::new("D1", Signature::Bz, &["0"])
            .involution_pairs(&[("0", "0")])
            .brouwer_map(&[("0", "0")])
            .build()
            .unwrap();
        let r = classify(&d1).unwrap();
        for class in ALL_CLASSES {
            assert!(r.holds(class), "{class} should hold on the trivial algebra");
        }
    }

    #[test]
    fn not_applicable_for_missing_ops() {
        let lat = AlgebraBuilder::new("2", Signature::Lattice, &["0", "1"])
            .covers("0", &["1"])
            .build()
            .unwrap();
        let r = classify(&lat).unwrap();
        assert!(r.holds(AlgebraClass::Lattice));
        assert_eq!(
            *r.get(AlgebraClass::PseudoKleene),
            Membership::NotApplicable
        );
        assert_eq!(*r.get(AlgebraClass::PbzStar), Membership::NotApplicable);
    }
}

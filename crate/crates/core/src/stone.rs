//! Quasi-Stone, Stone, quasi-Stone De Morgan and Kleene-(quasi-)Stone
//! classification, treating the Brouwer slot of the BZ signature as the
//! Stone-like unary operation, plus the Boolean kernel B(A).

use crate::algebra::{Elem, FiniteAlgebra};
use crate::classify::{Membership, Witness};
use crate::equations::{check_claim, named_equation, ClaimOutcome};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StoneClass {
    QuasiStone,
    Stone,
    QuasiStoneDeMorgan,
    KleeneQuasiStone,
    KleeneStone,
}

pub const ALL_STONE_CLASSES: [StoneClass; 5] = [
    StoneClass::QuasiStone,
    StoneClass::Stone,
    StoneClass::QuasiStoneDeMorgan,
    StoneClass::KleeneQuasiStone,
    StoneClass::KleeneStone,
];

impl StoneClass {
    pub fn name(self) -> &'static str {
        match self {
            StoneClass::QuasiStone => "quasi-stone",
            StoneClass::Stone => "stone",
            StoneClass::QuasiStoneDeMorgan => "quasi-stone-de-morgan",
            StoneClass::KleeneQuasiStone => "kleene-quasi-stone",
            StoneClass::KleeneStone => "kleene-stone",
        }
    }
}

impl fmt::Display for StoneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneReport {
    entries: Vec<(StoneClass, Membership)>,
}

impl StoneReport {
    pub fn get(&self, class: StoneClass) -> &Membership {
        &self
            .entries
            .iter()
            .find(|(c, _)| *c == class)
            .expect("all stone classes present")
            .1
    }

    pub fn holds(&self, class: StoneClass) -> bool {
        self.get(class).holds()
    }

    pub fn iter(&self) -> impl Iterator<Item = (StoneClass, &Membership)> {
        self.entries.iter().map(|(c, m)| (*c, m))
    }
}

const QS1: &str = "0~ = 1 and 1~ = 0";

fn named_membership(algebra: &FiniteAlgebra, name: &str) -> Result<Membership> {
    Ok(match check_claim(algebra, named_equation(name)?)? {
        ClaimOutcome::Holds => Membership::Holds,
        ClaimOutcome::Fails {
            part,
            var_names,
            counterexample,
        } => Membership::Fails(Witness {
            condition: part,
            assignment: counterexample.assignment,
            var_names,
        }),
    })
}

fn chain_checks(algebra: &FiniteAlgebra, names: &[&str]) -> Result<Membership> {
    for name in names {
        match named_membership(algebra, name)? {
            Membership::Holds => continue,
            fails => return Ok(fails),
        }
    }
    Ok(Membership::Holds)
}

/// QS1 is variable-free and checked directly on the constants.
fn qs1(algebra: &FiniteAlgebra) -> Membership {
    let bot = algebra.bottom_element();
    let top = algebra.top_element();
    if algebra.brouwer(bot) == top && algebra.brouwer(top) == bot {
        Membership::Holds
    } else {
        Membership::Fails(Witness {
            condition: QS1.to_string(),
            assignment: vec![],
            var_names: vec![],
        })
    }
}

/// The image of `~`, which for quasi-Stone algebras is a Boolean subuniverse.
/// Verified: equal to the fixpoints of `~~`, closed under meet, join and `~`,
/// containing the bounds, and complemented.
pub fn boolean_kernel(algebra: &FiniteAlgebra) -> Result<Vec<Elem>> {
    let report = classify_stone(algebra)?;
    if let Membership::Fails(w) = report.get(StoneClass::QuasiStone) {
        return Err(Error::NotQuasiStone(w.describe(algebra)));
    }
    let mut image: Vec<Elem> = algebra.elements().map(|x| algebra.brouwer(x)).collect();
    image.sort_unstable();
    image.dedup();
    let fixpoints: Vec<Elem> = algebra
        .elements()
        .filter(|&x| algebra.brouwer(algebra.brouwer(x)) == x)
        .collect();
    if image != fixpoints {
        return Err(Error::VerificationFailed(
            "B(A) differs from the ~~-fixpoints".into(),
        ));
    }
    let bot = algebra.bottom_element();
    let top = algebra.top_element();
    if !image.contains(&bot) || !image.contains(&top) {
        return Err(Error::VerificationFailed("B(A) misses a bound".into()));
    }
    for &x in &image {
        if !image.contains(&algebra.brouwer(x)) {
            return Err(Error::VerificationFailed("B(A) not closed under ~".into()));
        }
        if algebra.meet(x, algebra.brouwer(x)) != bot || algebra.join(x, algebra.brouwer(x)) != top
        {
            return Err(Error::VerificationFailed("B(A) not complemented".into()));
        }
        for &y in &image {
            if !image.contains(&algebra.meet(x, y)) || !image.contains(&algebra.join(x, y)) {
                return Err(Error::VerificationFailed(
                    "B(A) not closed under meet/join".into(),
                ));
            }
        }
    }
    Ok(image)
}

/// Classify against the quasi-Stone family. Needs the BZ signature: the `~`
/// slot plays the quasi-Stone unary role.
pub fn classify_stone(algebra: &FiniteAlgebra) -> Result<StoneReport> {
    if !algebra.signature().has_brouwer() {
        return Err(Error::SignatureMismatch(
            "stone classification needs the ~ operation".into(),
        ));
    }
    // quasi-Stone: bounded distributive lattice + QS1..QS5
    let quasi_stone = match named_membership(algebra, "DIST")? {
        Membership::Holds => match qs1(algebra) {
            Membership::Holds => chain_checks(algebra, &["QS2", "QS3", "QS4", "QS5"])?,
            fails => fails,
        },
        fails => fails,
    };
    let and_then = |base: &Membership, next: &mut dyn FnMut() -> Result<Membership>| match base {
        Membership::Holds => next(),
        fails => Ok(fails.clone()),
    };
    let stone = and_then(&quasi_stone, &mut || named_membership(algebra, "SDM"))?;
    // quasi-Stone De Morgan adds the De Morgan reduct (distributivity is
    // already part of quasi-Stone) and closure of B(A) under '
    let qsdm = and_then(&quasi_stone, &mut || {
        let image: std::collections::BTreeSet<Elem> =
            algebra.elements().map(|x| algebra.brouwer(x)).collect();
        for &b in &image {
            if !image.contains(&algebra.kleene(b)) {
                return Ok(Membership::Fails(Witness {
                    condition: "B(A) closed under '".to_string(),
                    assignment: vec![b],
                    var_names: vec!["x".to_string()],
                }));
            }
        }
        Ok(Membership::Holds)
    })?;
    let kqs = and_then(&qsdm, &mut || named_membership(algebra, "KLEENE"))?;
    let ks = and_then(&kqs, &mut || named_membership(algebra, "SDM"))?;
    Ok(StoneReport {
        entries: vec![
            (StoneClass::QuasiStone, quasi_stone),
            (StoneClass::Stone, stone),
            (StoneClass::QuasiStoneDeMorgan, qsdm),
            (StoneClass::KleeneQuasiStone, kqs),
            (StoneClass::KleeneStone, ks),
        ],
    })
}

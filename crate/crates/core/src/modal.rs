//! The diamond-De Morgan class tower and the two translations between weak
//! Lukasiewicz algebras and distributive PBZ*-lattices: `~` becomes
//! `x ~> (dia x)'` in one direction and `dia` becomes `x ~> x~~` in the
//! other; the maps are mutually inverse on tables.

use crate::algebra::{Elem, FiniteAlgebra, Signature};
use crate::classify::{classify, AlgebraClass, Membership, Witness};
use crate::equations::{check_claim, named_equation, ClaimOutcome};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModalClass {
    DiamondDeMorgan,
    TopologicalQuasiBoolean,
    ClassicalDiamondDeMorgan,
    MonadicDeMorgan,
    WeakLukasiewicz,
    Lukasiewicz,
    ThreeValuedLukasiewicz,
    TetravalentModal,
    InvolutiveStone,
}

pub const ALL_MODAL_CLASSES: [ModalClass; 9] = [
    ModalClass::DiamondDeMorgan,
    ModalClass::TopologicalQuasiBoolean,
    ModalClass::ClassicalDiamondDeMorgan,
    ModalClass::MonadicDeMorgan,
    ModalClass::WeakLukasiewicz,
    ModalClass::Lukasiewicz,
    ModalClass::ThreeValuedLukasiewicz,
    ModalClass::TetravalentModal,
    ModalClass::InvolutiveStone,
];

impl ModalClass {
    pub fn name(self) -> &'static str {
        match self {
            ModalClass::DiamondDeMorgan => "diamond-de-morgan",
            ModalClass::TopologicalQuasiBoolean => "topological-quasi-boolean",
            ModalClass::ClassicalDiamondDeMorgan => "classical-diamond-de-morgan",
            ModalClass::MonadicDeMorgan => "monadic-de-morgan",
            ModalClass::WeakLukasiewicz => "weak-lukasiewicz",
            ModalClass::Lukasiewicz => "lukasiewicz",
            ModalClass::ThreeValuedLukasiewicz => "three-valued-lukasiewicz",
            ModalClass::TetravalentModal => "tetravalent-modal",
            ModalClass::InvolutiveStone => "involutive-stone",
        }
    }
}

impl fmt::Display for ModalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModalClassReport {
    entries: Vec<(ModalClass, Membership)>,
}

impl ModalClassReport {
    pub fn get(&self, class: ModalClass) -> &Membership {
        &self
            .entries
            .iter()
            .find(|(c, _)| *c == class)
            .expect("all modal classes present")
            .1
    }

    pub fn holds(&self, class: ModalClass) -> bool {
        self.get(class).holds()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ModalClass, &Membership)> {
        self.entries.iter().map(|(c, m)| (*c, m))
    }
}

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

fn and_then(base: &Membership, next: impl FnOnce() -> Result<Membership>) -> Result<Membership> {
    match base {
        Membership::Holds => next(),
        fails => Ok(fails.clone()),
    }
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

/// Classify a modal algebra against the diamond-De Morgan tower. The
/// diamond-free reduct must be a De Morgan algebra.
pub fn classify_modal(algebra: &FiniteAlgebra) -> Result<ModalClassReport> {
    if algebra.signature() != Signature::Modal {
        return Err(Error::SignatureMismatch(
            "modal classification needs the MODAL signature".into(),
        ));
    }
    if let Membership::Fails(w) = named_membership(algebra, "DIST")? {
        return Err(Error::NotDeMorgan(w.describe(algebra)));
    }
    let ddm = chain_checks(algebra, &["M1", "M2"])?;
    let tqb = and_then(&ddm, || chain_checks(algebra, &["M3", "M4"]))?;
    let classical = and_then(&tqb, || named_membership(algebra, "M5"))?;
    let monadic = and_then(&classical, || named_membership(algebra, "M6"))?;
    let weak_luk = and_then(&classical, || chain_checks(algebra, &["KLEENE", "M7"]))?;
    let luk = and_then(&weak_luk, || named_membership(algebra, "M9"))?;
    let three_luk = and_then(&luk, || named_membership(algebra, "M10"))?;
    let tetravalent = and_then(&classical, || named_membership(algebra, "M10"))?;
    let inv_stone = and_then(&classical, || named_membership(algebra, "M9"))?;
    Ok(ModalClassReport {
        entries: vec![
            (ModalClass::DiamondDeMorgan, ddm),
            (ModalClass::TopologicalQuasiBoolean, tqb),
            (ModalClass::ClassicalDiamondDeMorgan, classical),
            (ModalClass::MonadicDeMorgan, monadic),
            (ModalClass::WeakLukasiewicz, weak_luk),
            (ModalClass::Lukasiewicz, luk),
            (ModalClass::ThreeValuedLukasiewicz, three_luk),
            (ModalClass::TetravalentModal, tetravalent),
            (ModalClass::InvolutiveStone, inv_stone),
        ],
    })
}

/// From a weak Lukasiewicz algebra to a BZ-lattice on the same carrier:
/// `x~ = (dia x)'`. The result is a distributive PBZ*-lattice.
pub fn bz_of_modal(algebra: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let report = classify_modal(algebra)?;
    if let Membership::Fails(w) = report.get(ModalClass::WeakLukasiewicz) {
        return Err(Error::NotWeakLukasiewicz(w.describe(algebra)));
    }
    let n = algebra.size();
    let brouwer: Vec<Elem> = (0..n).map(|x| algebra.kleene(algebra.diamond(x))).collect();
    let leq: Vec<bool> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| algebra.leq(x, y))
        .collect();
    let kleene: Vec<Elem> = (0..n).map(|x| algebra.kleene(x)).collect();
    let out = FiniteAlgebra::from_leq(
        &format!("f({})", algebra.name()),
        Signature::Bz,
        algebra.labels().to_vec(),
        leq,
        Some(kleene),
        Some(brouwer),
        None,
    )?;
    let back = classify(&out)?;
    if !(back.holds(AlgebraClass::PbzStar) && back.holds(AlgebraClass::Distributive)) {
        return Err(Error::VerificationFailed(
            "translation did not land in the distributive PBZ*-lattices".into(),
        ));
    }
    Ok(out)
}

/// From a distributive PBZ*-lattice to a modal algebra on the same carrier:
/// `dia x = x~~`. The result is a weak Lukasiewicz algebra, and the two
/// translations are mutually inverse on tables.
pub fn modal_of_bz(algebra: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if !algebra.signature().has_brouwer() {
        return Err(Error::SignatureMismatch(
            "translation needs the ~ operation".into(),
        ));
    }
    let report = classify(algebra)?;
    for class in [AlgebraClass::PbzStar, AlgebraClass::Distributive] {
        if let Membership::Fails(w) = report.get(class) {
            return Err(Error::NotDistributivePbz(w.describe(algebra)));
        }
    }
    let n = algebra.size();
    let diamond: Vec<Elem> = (0..n)
        .map(|x| algebra.brouwer(algebra.brouwer(x)))
        .collect();
    let leq: Vec<bool> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| algebra.leq(x, y))
        .collect();
    let kleene: Vec<Elem> = (0..n).map(|x| algebra.kleene(x)).collect();
    let out = FiniteAlgebra::from_leq(
        &format!("g({})", algebra.name()),
        Signature::Modal,
        algebra.labels().to_vec(),
        leq,
        Some(kleene),
        None,
        Some(diamond),
    )?;
    let back = classify_modal(&out)?;
    if !back.holds(ModalClass::WeakLukasiewicz) {
        return Err(Error::VerificationFailed(
            "translation did not land in the weak Lukasiewicz algebras".into(),
        ));
    }
    Ok(out)
}

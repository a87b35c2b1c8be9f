//! Terms over meet, join, the involution `'`, the Brouwer complement `~`, the
//! diamond, and the bound constants, together with exhaustive identity and
//! quasi-identity checking on finite algebras.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

/// Exhaustive checks refuse more variables than this.
pub const VAR_CAP: usize = 4;
/// Exhaustive checks refuse algebras larger than this.
pub const SIZE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Kleene(Box<Term>),
    Brouwer(Box<Term>),
    Diamond(Box<Term>),
}

impl Term {
    pub fn meet(self, other: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(other))
    }

    pub fn join(self, other: Term) -> Term {
        Term::Join(Box::new(self), Box::new(other))
    }

    pub fn kleene(self) -> Term {
        Term::Kleene(Box::new(self))
    }

    pub fn brouwer(self) -> Term {
        Term::Brouwer(Box::new(self))
    }

    /// Number of variables (max index + 1).
    pub fn var_count(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Zero | Term::One => 0,
            Term::Meet(l, r) | Term::Join(l, r) => l.var_count().max(r.var_count()),
            Term::Kleene(t) | Term::Brouwer(t) | Term::Diamond(t) => t.var_count(),
        }
    }

    fn vars_into(&self, out: &mut Vec<bool>) {
        match self {
            Term::Var(i) => out[*i] = true,
            Term::Zero | Term::One => {}
            Term::Meet(l, r) | Term::Join(l, r) => {
                l.vars_into(out);
                r.vars_into(out);
            }
            Term::Kleene(t) | Term::Brouwer(t) | Term::Diamond(t) => t.vars_into(out),
        }
    }

    /// Which variable indices occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut flags = vec![false; self.var_count()];
        self.vars_into(&mut flags);
        flags
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }
}

/// Equation `lhs = rhs` with the display names of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
    pub var_names: Vec<String>,
}

impl Equation {
    pub fn var_count(&self) -> usize {
        self.lhs.var_count().max(self.rhs.var_count())
    }
}

/// Quasiequation `p1 , ... , pk => c`. All parts share one variable table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasiequation {
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
    pub var_names: Vec<String>,
}

impl Quasiequation {
    pub fn var_count(&self) -> usize {
        self.premises
            .iter()
            .map(Equation::var_count)
            .chain([self.conclusion.var_count()])
            .max()
            .unwrap_or(0)
    }
}

/// Structural evaluation against an algebra's tables.
pub fn eval(algebra: &FiniteAlgebra, term: &Term, assignment: &[Elem]) -> Result<Elem> {
    match term {
        Term::Var(i) => assignment.get(*i).copied().ok_or_else(|| {
            Error::UnboundVariable(format!("variable index {i} not covered by the assignment"))
        }),
        Term::Zero => {
            if !algebra.signature().has_bounds() {
                return Err(Error::SignatureError(
                    "constant 0 needs a bounded signature".into(),
                ));
            }
            Ok(algebra.bottom_element())
        }
        Term::One => {
            if !algebra.signature().has_bounds() {
                return Err(Error::SignatureError(
                    "constant 1 needs a bounded signature".into(),
                ));
            }
            Ok(algebra.top_element())
        }
        Term::Meet(l, r) => {
            Ok(algebra.meet(eval(algebra, l, assignment)?, eval(algebra, r, assignment)?))
        }
        Term::Join(l, r) => {
            Ok(algebra.join(eval(algebra, l, assignment)?, eval(algebra, r, assignment)?))
        }
        Term::Kleene(t) => {
            if !algebra.signature().has_kleene() {
                return Err(Error::SignatureError("' needs an involution".into()));
            }
            Ok(algebra.kleene(eval(algebra, t, assignment)?))
        }
        Term::Brouwer(t) => {
            if !algebra.signature().has_brouwer() {
                return Err(Error::SignatureError("~ needs a Brouwer complement".into()));
            }
            Ok(algebra.brouwer(eval(algebra, t, assignment)?))
        }
        Term::Diamond(t) => {
            if !algebra.signature().has_diamond() {
                return Err(Error::SignatureError("dia needs a modal algebra".into()));
            }
            Ok(algebra.diamond(eval(algebra, t, assignment)?))
        }
    }
}

/// First counterexample, in lexicographic (variable index, element index)
/// order, of an equation or quasiequation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Vec<Elem>,
    /// Value of the (conclusion) left-hand side under the assignment.
    pub lhs_value: Elem,
    pub rhs_value: Elem,
}

impl Counterexample {
    pub fn describe(&self, algebra: &FiniteAlgebra, var_names: &[String]) -> String {
        let binds: Vec<String> = self
            .assignment
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let name = var_names.get(i).map(String::as_str).unwrap_or("?");
                format!("{name}={}", algebra.label(e))
            })
            .collect();
        format!(
            "{} (lhs={}, rhs={})",
            binds.join(", "),
            algebra.label(self.lhs_value),
            algebra.label(self.rhs_value)
        )
    }
}

fn caps(algebra: &FiniteAlgebra, nvars: usize) -> Result<()> {
    if nvars > VAR_CAP {
        return Err(Error::CapExceeded(format!(
            "{nvars} variables exceed the cap of {VAR_CAP}"
        )));
    }
    if algebra.size() > SIZE_CAP {
        return Err(Error::CapExceeded(format!(
            "{} elements exceed the cap of {SIZE_CAP}",
            algebra.size()
        )));
    }
    Ok(())
}

/// Iterate assignments in lexicographic order; the last variable varies
/// fastest, so the first hit is the lex-least tuple.
fn scan_assignments(
    n: usize,
    nvars: usize,
    mut visit: impl FnMut(&[Elem]) -> Result<Option<(Elem, Elem)>>,
) -> Result<Option<Counterexample>> {
    let mut assignment = vec![0usize; nvars];
    loop {
        if let Some((l, r)) = visit(&assignment)? {
            return Ok(Some(Counterexample {
                assignment,
                lhs_value: l,
                rhs_value: r,
            }));
        }
        let mut i = nvars;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < n {
                break;
            }
            assignment[i] = 0;
        }
    }
}

/// Exhaustive identity check. `None` means the identity holds.
pub fn check_identity(
    algebra: &FiniteAlgebra,
    equation: &Equation,
) -> Result<Option<Counterexample>> {
    let nvars = equation.var_count();
    caps(algebra, nvars)?;
    scan_assignments(algebra.size(), nvars, |asg| {
        let l = eval(algebra, &equation.lhs, asg)?;
        let r = eval(algebra, &equation.rhs, asg)?;
        Ok((l != r).then_some((l, r)))
    })
}

/// Exhaustive quasi-identity check: premises filter assignments, the first
/// assignment satisfying every premise but not the conclusion is returned.
pub fn check_quasiidentity(
    algebra: &FiniteAlgebra,
    quasi: &Quasiequation,
) -> Result<Option<Counterexample>> {
    let nvars = quasi.var_count();
    caps(algebra, nvars)?;
    scan_assignments(algebra.size(), nvars, |asg| {
        for p in &quasi.premises {
            if eval(algebra, &p.lhs, asg)? != eval(algebra, &p.rhs, asg)? {
                return Ok(None);
            }
        }
        let l = eval(algebra, &quasi.conclusion.lhs, asg)?;
        let r = eval(algebra, &quasi.conclusion.rhs, asg)?;
        Ok((l != r).then_some((l, r)))
    })
}

/// Declared variable split for the `m(t, u)` schema: `t` ranges over
/// x-variables (indices `0..x_count`) and the shared z-variables, `u` over
/// y-variables (indices `x_count..x_count + y_count`) and the shared ones
/// (trailing indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarSplit {
    pub x_count: usize,
    pub y_count: usize,
    pub shared_count: usize,
}

impl VarSplit {
    fn check(&self, t: &Term, u: &Term) -> Result<()> {
        let x_end = self.x_count;
        let y_end = self.x_count + self.y_count;
        let z_end = y_end + self.shared_count;
        for v in t.variables() {
            if v >= x_end && !(y_end..z_end).contains(&v) {
                return Err(Error::VariableSplit(format!(
                    "first term uses variable {v}, outside its declared x/z ranges"
                )));
            }
        }
        for v in u.variables() {
            if !(x_end..z_end).contains(&v) {
                return Err(Error::VariableSplit(format!(
                    "second term uses variable {v}, outside its declared y/z ranges"
                )));
            }
        }
        Ok(())
    }
}

fn kink_block(vars: std::ops::Range<usize>) -> Option<Term> {
    let mut acc: Option<Term> = None;
    for v in vars {
        let block = Term::Var(v).meet(Term::Var(v).kleene()).brouwer();
        acc = Some(match acc {
            None => block,
            Some(t) => t.join(block),
        });
    }
    acc
}

/// The pair `m(t, u)` and `m(u, t)`: identical joins of `(v & v')~` blocks
/// over all declared variables followed by `t`, respectively `u`.
pub fn m_term_pair(t: &Term, u: &Term, split: VarSplit) -> Result<(Term, Term)> {
    split.check(t, u)?;
    let total = split.x_count + split.y_count + split.shared_count;
    let prefix = kink_block(0..total);
    let with = |tail: &Term| match prefix.clone() {
        None => tail.clone(),
        Some(p) => p.join(tail.clone()),
    };
    Ok((with(t), with(u)))
}

/// `m(t, u)` alone.
pub fn build_m_term(t: &Term, u: &Term, split: VarSplit) -> Result<Term> {
    Ok(m_term_pair(t, u, split)?.0)
}

/// Default display names for programmatic terms: x y z w, then v5, v6, ...
pub fn default_var_names(count: usize) -> Vec<String> {
    (0..count)
        .map(|i| match i {
            0 => "x".to_string(),
            1 => "y".to_string(),
            2 => "z".to_string(),
            3 => "w".to_string(),
            k => format!("v{}", k + 1),
        })
        .collect()
}

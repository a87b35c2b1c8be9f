//! Finite algebras over the signatures used throughout: bounded lattices,
//! involution lattices, Brouwer-Zadeh lattices, and De Morgan algebras with a
//! possibility operator. Elements are dense indices into a label table; the
//! order is a bit-matrix and meet/join tables are computed once at
//! construction, so every value is immutable and cheap to query afterwards.

use crate::error::{Error, Result};
use std::fmt;

/// Element of a [`FiniteAlgebra`]: an index into its label table.
pub type Elem = usize;

/// Operation signature tag. `Lattice` is a bounded lattice with no unary
/// operations; the others follow the usual hierarchy: `I` has the involution
/// only (no named bounds), `Bi` adds the constants 0 and 1, `Bz` adds the
/// Brouwer complement, `Modal` has the involution and a diamond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Signature {
    Lattice,
    I,
    Bi,
    Bz,
    Modal,
}

impl Signature {
    pub fn has_kleene(self) -> bool {
        !matches!(self, Signature::Lattice)
    }

    pub fn has_brouwer(self) -> bool {
        matches!(self, Signature::Bz)
    }

    pub fn has_diamond(self) -> bool {
        matches!(self, Signature::Modal)
    }

    /// Whether 0 and 1 are named constants of the signature.
    pub fn has_bounds(self) -> bool {
        !matches!(self, Signature::I)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Signature::Lattice => "LATTICE",
            Signature::I => "I",
            Signature::Bi => "BI",
            Signature::Bz => "BZ",
            Signature::Modal => "MODAL",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Signature> {
        match tag.to_ascii_uppercase().as_str() {
            "LATTICE" => Ok(Signature::Lattice),
            "I" => Ok(Signature::I),
            "BI" => Ok(Signature::Bi),
            "BZ" => Ok(Signature::Bz),
            "MODAL" => Ok(Signature::Modal),
            _ => Err(Error::UnknownName(format!("signature {tag}"))),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Kleene,
    Brouwer,
    Diamond,
}

impl UnaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            UnaryOp::Kleene => "'",
            UnaryOp::Brouwer => "~",
            UnaryOp::Diamond => "dia",
        }
    }
}

/// A finite algebra: bounded poset plus unary operation tables, validated at
/// construction against the axioms its signature requires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    signature: Signature,
    labels: Vec<String>,
    n: usize,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    kleene: Option<Vec<Elem>>,
    brouwer: Option<Vec<Elem>>,
    diamond: Option<Vec<Elem>>,
    bottom: Option<Elem>,
    top: Option<Elem>,
}

/// Builder used by the catalog, the constructors and the file loader.
/// Order is given as upper covers; the relation is their reflexive-transitive
/// closure.
pub struct AlgebraBuilder {
    name: String,
    signature: Signature,
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    kleene: Option<Vec<Elem>>,
    brouwer: Option<Vec<Elem>>,
    diamond: Option<Vec<Elem>>,
    pending: Vec<Error>,
}

impl AlgebraBuilder {
    pub fn new(name: &str, signature: Signature, labels: &[&str]) -> Self {
        AlgebraBuilder {
            name: name.to_string(),
            signature,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            covers: Vec::new(),
            kleene: None,
            brouwer: None,
            diamond: None,
            pending: Vec::new(),
        }
    }

    fn index(&mut self, label: &str) -> usize {
        match self.labels.iter().position(|l| l == label) {
            Some(i) => i,
            None => {
                self.pending.push(Error::MalformedAlgebra(format!(
                    "unknown element label {label:?}"
                )));
                0
            }
        }
    }

    /// Declare the upper covers of `lower`.
    pub fn covers(mut self, lower: &str, uppers: &[&str]) -> Self {
        let lo = self.index(lower);
        for u in uppers {
            let hi = self.index(u);
            self.covers.push((lo, hi));
        }
        self
    }

    /// Involution given as pairs; both directions are implied, fixpoints as
    /// `(x, x)`. Every element must be covered.
    pub fn involution_pairs(mut self, pairs: &[(&str, &str)]) -> Self {
        let mut table = vec![usize::MAX; self.labels.len()];
        for (a, b) in pairs {
            let i = self.index(a);
            let j = self.index(b);
            table[i] = j;
            table[j] = i;
        }
        if let Some(miss) = table.iter().position(|&v| v == usize::MAX) {
            self.pending.push(Error::MalformedAlgebra(format!(
                "involution undefined on {:?}",
                self.labels[miss]
            )));
            return self;
        }
        self.kleene = Some(table);
        self
    }

    pub fn brouwer_map(mut self, entries: &[(&str, &str)]) -> Self {
        let mut table = vec![usize::MAX; self.labels.len()];
        for (a, b) in entries {
            let i = self.index(a);
            let j = self.index(b);
            table[i] = j;
        }
        if let Some(miss) = table.iter().position(|&v| v == usize::MAX) {
            self.pending.push(Error::MalformedAlgebra(format!(
                "brouwer table undefined on {:?}",
                self.labels[miss]
            )));
            return self;
        }
        self.brouwer = Some(table);
        self
    }

    /// The trivial Brouwer complement: bottom to top, everything else to
    /// bottom. Assumes the first label is the bottom and the last the top.
    pub fn trivial_brouwer(mut self) -> Self {
        let n = self.labels.len();
        let mut table = vec![0; n];
        table[0] = n - 1;
        self.brouwer = Some(table);
        self
    }

    pub fn diamond_map(mut self, entries: &[(&str, &str)]) -> Self {
        let mut table = vec![usize::MAX; self.labels.len()];
        for (a, b) in entries {
            let i = self.index(a);
            let j = self.index(b);
            table[i] = j;
        }
        if let Some(miss) = table.iter().position(|&v| v == usize::MAX) {
            self.pending.push(Error::MalformedAlgebra(format!(
                "diamond table undefined on {:?}",
                self.labels[miss]
            )));
            return self;
        }
        self.diamond = Some(table);
        self
    }

    pub fn build(self) -> Result<FiniteAlgebra> {
        if let Some(e) = self.pending.into_iter().next() {
            return Err(e);
        }
        let n = self.labels.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(lo, hi) in &self.covers {
            leq[lo * n + hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        FiniteAlgebra::from_leq(
            &self.name,
            self.signature,
            self.labels,
            leq,
            self.kleene,
            self.brouwer,
            self.diamond,
        )
    }
}

impl FiniteAlgebra {
    /// Construct from a full order relation, validating every structural
    /// invariant of the signature.
    pub fn from_leq(
        name: &str,
        signature: Signature,
        labels: Vec<String>,
        leq: Vec<bool>,
        kleene: Option<Vec<Elem>>,
        brouwer: Option<Vec<Elem>>,
        diamond: Option<Vec<Elem>>,
    ) -> Result<FiniteAlgebra> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::MalformedAlgebra("empty universe".into()));
        }
        if leq.len() != n * n {
            return Err(Error::MalformedAlgebra("order table has wrong size".into()));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                if !seen.insert(l) {
                    return Err(Error::MalformedAlgebra(format!("duplicate label {l:?}")));
                }
            }
        }
        let le = |x: usize, y: usize| leq[x * n + y];
        for i in 0..n {
            if !le(i, i) {
                return Err(Error::MalformedAlgebra(format!(
                    "order not reflexive at {}",
                    labels[i]
                )));
            }
            for j in 0..n {
                if i != j && le(i, j) && le(j, i) {
                    return Err(Error::MalformedAlgebra(format!(
                        "order not antisymmetric on {}, {}",
                        labels[i], labels[j]
                    )));
                }
                for k in 0..n {
                    if le(i, j) && le(j, k) && !le(i, k) {
                        return Err(Error::MalformedAlgebra(format!(
                            "order not transitive on {}, {}, {}",
                            labels[i], labels[j], labels[k]
                        )));
                    }
                }
            }
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let lows: Vec<usize> = (0..n).filter(|&k| le(k, i) && le(k, j)).collect();
                let glb: Vec<usize> = lows
                    .iter()
                    .copied()
                    .filter(|&k| lows.iter().all(|&m| le(m, k)))
                    .collect();
                if glb.len() != 1 {
                    return Err(Error::MalformedAlgebra(format!(
                        "no unique meet of {} and {}",
                        labels[i], labels[j]
                    )));
                }
                meet[i * n + j] = glb[0];
                let ups: Vec<usize> = (0..n).filter(|&k| le(i, k) && le(j, k)).collect();
                let lub: Vec<usize> = ups
                    .iter()
                    .copied()
                    .filter(|&k| ups.iter().all(|&m| le(k, m)))
                    .collect();
                if lub.len() != 1 {
                    return Err(Error::MalformedAlgebra(format!(
                        "no unique join of {} and {}",
                        labels[i], labels[j]
                    )));
                }
                join[i * n + j] = lub[0];
            }
        }
        // finite lattices always have extremes; they are *named* only when the
        // signature carries the constants
        let bot = (0..n)
            .find(|&i| (0..n).all(|j| le(i, j)))
            .ok_or_else(|| Error::MalformedAlgebra("no bottom element".into()))?;
        let top = (0..n)
            .find(|&i| (0..n).all(|j| le(j, i)))
            .ok_or_else(|| Error::MalformedAlgebra("no top element".into()))?;
        let (bottom, topn) = if signature.has_bounds() {
            (Some(bot), Some(top))
        } else {
            (None, None)
        };

        let check_table = |t: &Option<Vec<Elem>>, op: &str, wanted: bool| -> Result<()> {
            match (t, wanted) {
                (Some(tb), true) => {
                    if tb.len() != n || tb.iter().any(|&v| v >= n) {
                        return Err(Error::MalformedAlgebra(format!("bad {op} table")));
                    }
                    Ok(())
                }
                (None, true) => Err(Error::SignatureMismatch(format!(
                    "signature {} requires {op}",
                    signature.tag()
                ))),
                (Some(_), false) => Err(Error::SignatureMismatch(format!(
                    "signature {} does not admit {op}",
                    signature.tag()
                ))),
                (None, false) => Ok(()),
            }
        };
        check_table(&kleene, "involution", signature.has_kleene())?;
        check_table(&brouwer, "brouwer complement", signature.has_brouwer())?;
        check_table(&diamond, "diamond", signature.has_diamond())?;

        if let Some(k) = &kleene {
            for i in 0..n {
                if k[k[i]] != i {
                    return Err(Error::MalformedAlgebra(format!(
                        "involution not an involution at {}",
                        labels[i]
                    )));
                }
                for j in 0..n {
                    if le(i, j) && !le(k[j], k[i]) {
                        return Err(Error::MalformedAlgebra(format!(
                            "involution not order-reversing on {}, {}",
                            labels[i], labels[j]
                        )));
                    }
                }
            }
        }
        if let Some(b) = &brouwer {
            let k = kleene.as_ref().expect("BZ signature has involution");
            for i in 0..n {
                if meet[i * n + b[i]] != bot {
                    return Err(Error::MalformedAlgebra(format!(
                        "x & x~ != 0 at {}",
                        labels[i]
                    )));
                }
                if !le(i, b[b[i]]) {
                    return Err(Error::MalformedAlgebra(format!(
                        "x <= x~~ fails at {}",
                        labels[i]
                    )));
                }
                if b[b[i]] != k[b[i]] {
                    return Err(Error::MalformedAlgebra(format!(
                        "x~~ != x~' at {}",
                        labels[i]
                    )));
                }
                for j in 0..n {
                    if le(i, j) && !le(b[j], b[i]) {
                        return Err(Error::MalformedAlgebra(format!(
                            "brouwer complement not order-reversing on {}, {}",
                            labels[i], labels[j]
                        )));
                    }
                }
            }
        }
        // diamond tables are unconstrained at construction; classify_modal
        // decides which modal identities they satisfy

        Ok(FiniteAlgebra {
            name: name.to_string(),
            signature,
            labels,
            n,
            leq,
            meet,
            join,
            kleene,
            brouwer,
            diamond,
            bottom,
            top: topn,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn element(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n + y]
    }

    /// Greatest lower bound and least upper bound as a pair.
    pub fn bounds(&self, x: Elem, y: Elem) -> (Elem, Elem) {
        (self.meet(x, y), self.join(x, y))
    }

    /// Least element (always exists; a *named* constant only for bounded
    /// signatures — see [`Signature::has_bounds`]).
    pub fn bottom_element(&self) -> Elem {
        self.bottom.unwrap_or_else(|| {
            (0..self.n)
                .find(|&i| (0..self.n).all(|j| self.leq(i, j)))
                .unwrap()
        })
    }

    pub fn top_element(&self) -> Elem {
        self.top.unwrap_or_else(|| {
            (0..self.n)
                .find(|&i| (0..self.n).all(|j| self.leq(j, i)))
                .unwrap()
        })
    }

    pub fn bottom(&self) -> Option<Elem> {
        self.bottom
    }

    pub fn top(&self) -> Option<Elem> {
        self.top
    }

    pub fn has_op(&self, op: UnaryOp) -> bool {
        self.unary(op).is_some()
    }

    pub fn unary(&self, op: UnaryOp) -> Option<&[Elem]> {
        match op {
            UnaryOp::Kleene => self.kleene.as_deref(),
            UnaryOp::Brouwer => self.brouwer.as_deref(),
            UnaryOp::Diamond => self.diamond.as_deref(),
        }
    }

    /// Involution table value. Panics when the signature lacks it; callers
    /// check the signature first.
    pub fn kleene(&self, x: Elem) -> Elem {
        self.kleene.as_ref().expect("signature has no involution")[x]
    }

    pub fn brouwer(&self, x: Elem) -> Elem {
        self.brouwer
            .as_ref()
            .expect("signature has no brouwer complement")[x]
    }

    pub fn diamond(&self, x: Elem) -> Elem {
        self.diamond.as_ref().expect("signature has no diamond")[x]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    /// Upper covers of `x`.
    pub fn upper_covers(&self, x: Elem) -> Vec<Elem> {
        (0..self.n)
            .filter(|&y| {
                y != x
                    && self.leq(x, y)
                    && !(0..self.n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
            })
            .collect()
    }

    /// S(L): elements with x | x' = 1.
    pub fn sharp_elements(&self) -> Result<Vec<Elem>> {
        if !self.signature.has_kleene() || !self.signature.has_bounds() {
            return Err(Error::SignatureMismatch(
                "sharp elements need an involution and bounds".into(),
            ));
        }
        let top = self.top_element();
        Ok(self
            .elements()
            .filter(|&x| self.join(x, self.kleene(x)) == top)
            .collect())
    }

    /// D(L): elements with x~ = 0.
    pub fn dense_elements(&self) -> Result<Vec<Elem>> {
        if !self.signature.has_brouwer() {
            return Err(Error::SignatureMismatch(
                "dense elements need a brouwer complement".into(),
            ));
        }
        let bot = self.bottom_element();
        Ok(self
            .elements()
            .filter(|&x| self.brouwer(x) == bot)
            .collect())
    }

    /// Whether the bottom is meet-irreducible: no two nonzero elements meet
    /// to 0.
    pub fn bottom_meet_irreducible(&self) -> bool {
        let bot = self.bottom_element();
        !self
            .elements()
            .any(|x| x != bot && self.elements().any(|y| y != bot && self.meet(x, y) == bot))
    }

    /// Clone with fresh labels (sizes must agree). Used by the catalog to give
    /// combinator-built algebras their published names.
    pub fn relabel(&self, name: &str, labels: &[&str]) -> Result<FiniteAlgebra> {
        if labels.len() != self.n {
            return Err(Error::MalformedAlgebra("relabel length mismatch".into()));
        }
        let mut out = self.clone();
        out.name = name.to_string();
        out.labels = labels.iter().map(|s| s.to_string()).collect();
        FiniteAlgebra::from_leq(
            &out.name,
            out.signature,
            out.labels,
            out.leq,
            out.kleene,
            out.brouwer,
            out.diamond,
        )
    }

    pub fn with_name(&self, name: &str) -> FiniteAlgebra {
        let mut out = self.clone();
        out.name = name.to_string();
        out
    }

    /// Bounded lattice reduct: drops every unary operation.
    pub fn lattice_reduct(&self) -> FiniteAlgebra {
        let mut out = self.clone();
        out.signature = Signature::Lattice;
        out.kleene = None;
        out.brouwer = None;
        out.diamond = None;
        out.bottom = Some(self.bottom_element());
        out.top = Some(self.top_element());
        out
    }

    /// Bounded involution reduct: keeps the involution, drops `~` and diamond.
    pub fn bi_reduct(&self) -> Result<FiniteAlgebra> {
        if !self.signature.has_kleene() {
            return Err(Error::SignatureMismatch("no involution to keep".into()));
        }
        let mut out = self.clone();
        out.signature = Signature::Bi;
        out.brouwer = None;
        out.diamond = None;
        out.bottom = Some(self.bottom_element());
        out.top = Some(self.top_element());
        Ok(out)
    }

    /// Attach the trivial Brouwer complement to a paraorthomodular
    /// pseudo-Kleene algebra with no nontrivial sharp elements.
    pub fn trivial_brouwer_extension(&self) -> Result<FiniteAlgebra> {
        if self.signature != Signature::Bi {
            return Err(Error::SignatureMismatch(format!(
                "trivial brouwer extension needs signature BI, got {}",
                self.signature.tag()
            )));
        }
        let report = crate::classify::classify(self)?;
        if let crate::classify::Membership::Fails(w) =
            report.get(crate::classify::AlgebraClass::PseudoKleene)
        {
            return Err(Error::PreconditionFailed {
                condition: "pseudo-Kleene".into(),
                witness: w.describe(self),
            });
        }
        if let crate::classify::Membership::Fails(w) =
            report.get(crate::classify::AlgebraClass::Paraorthomodular)
        {
            return Err(Error::PreconditionFailed {
                condition: "paraorthomodular".into(),
                witness: w.describe(self),
            });
        }
        let sharps = self.sharp_elements()?;
        let bot = self.bottom_element();
        let top = self.top_element();
        if let Some(&s) = sharps.iter().find(|&&s| s != bot && s != top) {
            return Err(Error::PreconditionFailed {
                condition: "no nontrivial sharp elements".into(),
                witness: self.label(s).to_string(),
            });
        }
        let mut table = vec![bot; self.n];
        table[bot] = top;
        let mut out = self.clone();
        out.signature = Signature::Bz;
        out.brouwer = Some(table);
        Ok(out)
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} elements, {})",
            self.name,
            self.n,
            self.signature.tag()
        )
    }
}

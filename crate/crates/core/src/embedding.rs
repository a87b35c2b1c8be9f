//! Subuniverse closure, embedding search and isomorphism search. The three
//! embedding notions differ only in which operations must be preserved: as
//! involution lattices (meet, join, '), as bounded involution lattices
//! (adding 0 and 1), and as BZ-lattices (adding ~). Bounds are NOT required
//! to map to bounds in the involution-lattice case.

use crate::algebra::{Elem, FiniteAlgebra, Signature, UnaryOp};
use crate::error::{Error, Result};

/// An injective (or bijective) operation-preserving map between universes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementMap {
    pub source: String,
    pub target: String,
    pub image: Vec<Elem>,
}

impl ElementMap {
    pub fn describe(&self, pattern: &FiniteAlgebra, target: &FiniteAlgebra) -> String {
        self.image
            .iter()
            .enumerate()
            .map(|(x, &v)| format!("{}->{}", pattern.label(x), target.label(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn required_unaries(signature: Signature) -> Vec<UnaryOp> {
    let mut ops = Vec::new();
    if signature.has_kleene() {
        ops.push(UnaryOp::Kleene);
    }
    if signature.has_brouwer() {
        ops.push(UnaryOp::Brouwer);
    }
    if signature.has_diamond() {
        ops.push(UnaryOp::Diamond);
    }
    ops
}

fn check_ops(algebra: &FiniteAlgebra, signature: Signature, role: &str) -> Result<()> {
    for op in required_unaries(signature) {
        if !algebra.has_op(op) {
            return Err(Error::SignatureMismatch(format!(
                "{role} {} lacks {} required by signature {}",
                algebra.name(),
                op.symbol(),
                signature.tag()
            )));
        }
    }
    Ok(())
}

/// Least subset containing `seed` closed under meet, join, the signature's
/// unary operations, and (for bounded signatures) the constants.
pub fn subuniverse_closure(
    algebra: &FiniteAlgebra,
    seed: &[Elem],
    signature: Signature,
) -> Result<Vec<Elem>> {
    check_ops(algebra, signature, "algebra")?;
    let n = algebra.size();
    let mut inside = vec![false; n];
    for &s in seed {
        inside[s] = true;
    }
    if signature.has_bounds() {
        inside[algebra.bottom_element()] = true;
        inside[algebra.top_element()] = true;
    }
    let unaries = required_unaries(signature);
    loop {
        let mut changed = false;
        let members: Vec<Elem> = (0..n).filter(|&x| inside[x]).collect();
        for &x in &members {
            for op in &unaries {
                let v = algebra.unary(*op).unwrap()[x];
                if !inside[v] {
                    inside[v] = true;
                    changed = true;
                }
            }
            for &y in &members {
                let m = algebra.meet(x, y);
                if !inside[m] {
                    inside[m] = true;
                    changed = true;
                }
                let j = algebra.join(x, y);
                if !inside[j] {
                    inside[j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok((0..n).filter(|&x| inside[x]).collect());
        }
    }
}

struct Search<'a> {
    pattern: &'a FiniteAlgebra,
    target: &'a FiniteAlgebra,
    unaries: Vec<UnaryOp>,
    image: Vec<Option<Elem>>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// All constraints among assigned pattern elements that involve `p`, with
    /// `p` tentatively mapped to `v`: order both ways, unary tables both ways,
    /// and every meet/join triple whose participants are all assigned.
    fn consistent(&self, p: Elem, v: Elem) -> bool {
        let img = |t: Elem| -> Option<Elem> {
            if t == p {
                Some(v)
            } else {
                self.image[t]
            }
        };
        let n = self.pattern.size();
        for r in 0..n {
            let fr = match img(r) {
                Some(fr) => fr,
                None => continue,
            };
            if self.pattern.leq(p, r) != self.target.leq(v, fr)
                || self.pattern.leq(r, p) != self.target.leq(fr, v)
            {
                return false;
            }
            for op in &self.unaries {
                let pt = self.pattern.unary(*op).unwrap();
                let tt = self.target.unary(*op).unwrap();
                if (pt[r] == p || r == p) && img(pt[r]).is_some_and(|w| tt[fr] != w) {
                    return false;
                }
            }
            for s in 0..n {
                let fs = match img(s) {
                    Some(fs) => fs,
                    None => continue,
                };
                let mt = self.pattern.meet(r, s);
                if p == r || p == s || p == mt {
                    if let Some(fm) = img(mt) {
                        if self.target.meet(fr, fs) != fm {
                            return false;
                        }
                    }
                }
                let jn = self.pattern.join(r, s);
                if p == r || p == s || p == jn {
                    if let Some(fj) = img(jn) {
                        if self.target.join(fr, fs) != fj {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, at: usize) -> bool {
        if at == self.pattern.size() {
            return true;
        }
        if self.image[at].is_some() {
            return self.run(at + 1);
        }
        for v in 0..self.target.size() {
            if self.used[v] {
                continue;
            }
            if self.consistent(at, v) {
                self.image[at] = Some(v);
                self.used[v] = true;
                if self.run(at + 1) {
                    return true;
                }
                self.image[at] = None;
                self.used[v] = false;
            }
        }
        false
    }
}

fn search_map(
    pattern: &FiniteAlgebra,
    target: &FiniteAlgebra,
    signature: Signature,
    surjective: bool,
) -> Result<Option<ElementMap>> {
    check_ops(pattern, signature, "pattern")?;
    check_ops(target, signature, "target")?;
    if pattern.size() > target.size() || (surjective && pattern.size() != target.size()) {
        return Ok(None);
    }
    let mut search = Search {
        pattern,
        target,
        unaries: required_unaries(signature),
        image: vec![None; pattern.size()],
        used: vec![false; target.size()],
    };
    // constants are pinned for bounded signatures
    if signature.has_bounds() {
        let pins = [
            (pattern.bottom_element(), target.bottom_element()),
            (pattern.top_element(), target.top_element()),
        ];
        for (pe, te) in pins {
            if let Some(existing) = search.image[pe] {
                if existing != te {
                    return Ok(None);
                }
                continue;
            }
            if !search.consistent(pe, te) || search.used[te] {
                return Ok(None);
            }
            search.image[pe] = Some(te);
            search.used[te] = true;
        }
    }
    if search.run(0) {
        let image: Vec<Elem> = search.image.iter().map(|v| v.unwrap()).collect();
        Ok(Some(ElementMap {
            source: pattern.name().to_string(),
            target: target.name().to_string(),
            image,
        }))
    } else {
        Ok(None)
    }
}

/// Injective map preserving the operations of the declared signature; `None`
/// when no embedding exists.
pub fn find_embedding(
    pattern: &FiniteAlgebra,
    target: &FiniteAlgebra,
    signature: Signature,
) -> Result<Option<ElementMap>> {
    search_map(pattern, target, signature, false)
}

/// Bijective operation-preserving map; sizes must agree.
pub fn find_isomorphism(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    signature: Signature,
) -> Result<Option<ElementMap>> {
    search_map(a, b, signature, true)
}

//! The closed constructions: chains, duals, ordinal sums, symmetric
//! extensions L (+) K (+) L^d, direct products and the modular ortholattices
//! MO_k.

use crate::algebra::{Elem, FiniteAlgebra, Signature};
use crate::error::{Error, Result};

fn interior_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// The n-element chain as a BZ-algebra: the involution mirrors the chain and
/// the Brouwer complement is trivial.
pub fn chain(n: usize) -> FiniteAlgebra {
    assert!(n >= 1, "chain needs at least one element");
    let labels: Vec<String> = match n {
        1 => vec!["0".into()],
        2 => vec!["0".into(), "1".into()],
        _ => {
            let mut ls = vec!["0".to_string()];
            ls.extend((0..n - 2).map(interior_label));
            ls.push("1".to_string());
            ls
        }
    };
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in i..n {
            leq[i * n + j] = true;
        }
    }
    let kleene: Vec<Elem> = (0..n).map(|i| n - 1 - i).collect();
    let mut brouwer = vec![0; n];
    brouwer[0] = n - 1;
    FiniteAlgebra::from_leq(
        &format!("D{n}"),
        Signature::Bz,
        labels,
        leq,
        Some(kleene),
        Some(brouwer),
        None,
    )
    .expect("chains are valid BZ-algebras")
}

/// Order-theoretic dual; unary operations are dropped.
pub fn dual(algebra: &FiniteAlgebra) -> FiniteAlgebra {
    let n = algebra.size();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = algebra.leq(j, i);
        }
    }
    FiniteAlgebra::from_leq(
        &format!("{}^d", algebra.name()),
        Signature::Lattice,
        algebra.labels().to_vec(),
        leq,
        None,
        None,
        None,
    )
    .expect("dual of a lattice is a lattice")
}

/// Ordinal sum: `upper` stacked on top of `lower`, glueing top of `lower` to
/// bottom of `upper`. Works on the bounded lattice reducts; the glue element
/// keeps the lower algebra's top label.
pub fn ordinal_sum(lower: &FiniteAlgebra, upper: &FiniteAlgebra) -> FiniteAlgebra {
    let ln = lower.size();
    let un = upper.size();
    let lt = lower.top_element();
    let ub = upper.bottom_element();
    let n = ln + un - 1;
    // lower elements keep their index; upper elements (except the glued
    // bottom) append in index order
    let mut upper_index = vec![0usize; un];
    let mut labels: Vec<String> = (0..ln).map(|i| format!("L:{}", lower.label(i))).collect();
    let mut next = ln;
    for (j, slot) in upper_index.iter_mut().enumerate() {
        if j == ub {
            *slot = lt;
        } else {
            *slot = next;
            labels.push(format!("M:{}", upper.label(j)));
            next += 1;
        }
    }
    let in_lower = |x: usize| x < ln;
    let mut leq = vec![false; n * n];
    let upper_of = |x: usize| -> Option<usize> {
        if x == lt {
            Some(ub)
        } else {
            upper_index.iter().position(|&v| v == x).filter(|_| x >= ln)
        }
    };
    for x in 0..n {
        for y in 0..n {
            let v = match (in_lower(x), in_lower(y)) {
                (true, true) => {
                    // both may also be upper if they are the glue; plain lower order
                    lower.leq(x, y)
                        || (upper_of(x).is_some()
                            && upper_of(y).is_some()
                            && upper.leq(upper_of(x).unwrap(), upper_of(y).unwrap()))
                }
                (true, false) => true,
                (false, true) => false,
                (false, false) => upper.leq(upper_of(x).unwrap(), upper_of(y).unwrap()),
            };
            leq[x * n + y] = v;
        }
    }
    FiniteAlgebra::from_leq(
        &format!("{}+{}", lower.name(), upper.name()),
        Signature::Lattice,
        labels,
        leq,
        None,
        None,
        None,
    )
    .expect("ordinal sum of bounded lattices is a bounded lattice")
}

/// The symmetric extension L (+) K (+) L^d as a bounded involution lattice:
/// K's involution on the middle, the canonical dual bijection between the two
/// L copies elsewhere.
pub fn symmetric_extension(l: &FiniteAlgebra, k: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if l.size() < 2 {
        return Err(Error::PreconditionFailed {
            condition: "lower algebra must be nontrivial".into(),
            witness: format!("{} has one element", l.name()),
        });
    }
    if !k.signature().has_kleene() {
        return Err(Error::SignatureMismatch(format!(
            "middle algebra {} has no involution",
            k.name()
        )));
    }
    let ln = l.size();
    let kn = k.size();
    let lt = l.top_element();
    let kb = k.bottom_element();
    let kt = k.top_element();
    let n = 2 * ln + kn - 2;

    // element layout: all of L (its top is the lower glue = K's bottom), then
    // K minus its bottom (K's top is the upper glue = dual copy's bottom),
    // then the dual copy of L minus its bottom, listed in reverse L order
    #[derive(Clone, Copy, PartialEq)]
    enum Part {
        Lower(usize),
        Middle(usize),
        Upper(usize),
    }
    let mut parts: Vec<Part> = Vec::with_capacity(n);
    let mut labels: Vec<String> = Vec::with_capacity(n);
    for i in 0..ln {
        parts.push(Part::Lower(i));
        labels.push(format!("L:{}", l.label(i)));
    }
    let mut middle_index = vec![usize::MAX; kn];
    middle_index[kb] = lt;
    for (j, slot) in middle_index.iter_mut().enumerate() {
        if j != kb {
            *slot = parts.len();
            parts.push(Part::Middle(j));
            labels.push(format!("K:{}", k.label(j)));
        }
    }
    let mut upper_index = vec![usize::MAX; ln];
    upper_index[lt] = middle_index[kt];
    let mut rev: Vec<usize> = (0..ln).filter(|&i| i != lt).collect();
    rev.reverse();
    for i in rev {
        upper_index[i] = parts.len();
        parts.push(Part::Upper(i));
        labels.push(format!("Ld:{}", l.label(i)));
    }

    let lower_of = |x: usize| -> Option<usize> {
        match parts[x] {
            Part::Lower(i) => Some(i),
            _ => None,
        }
    };
    let middle_of = |x: usize| -> Option<usize> {
        match parts[x] {
            Part::Lower(i) if i == lt => Some(kb),
            Part::Middle(j) => Some(j),
            Part::Upper(i) if i == lt => Some(kt),
            _ => None,
        }
    };
    let upper_of = |x: usize| -> Option<usize> {
        match parts[x] {
            Part::Upper(i) => Some(i),
            Part::Middle(j) if j == kt => Some(lt),
            Part::Lower(i) if i == lt && kn == 1 => Some(lt),
            _ => None,
        }
    };

    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let le = if let (Some(a), Some(b)) = (lower_of(x), lower_of(y)) {
                l.leq(a, b)
            } else if let (Some(a), Some(b)) = (middle_of(x), middle_of(y)) {
                k.leq(a, b)
            } else if let (Some(a), Some(b)) = (upper_of(x), upper_of(y)) {
                l.leq(b, a) // dual order
            } else {
                // distinct strata: lower < middle < upper
                let rank = |z: usize| match parts[z] {
                    Part::Lower(_) => 0,
                    Part::Middle(_) => 1,
                    Part::Upper(_) => 2,
                };
                rank(x) < rank(y)
            };
            leq[x * n + y] = le || x == y;
        }
    }

    let mut kleene = vec![0usize; n];
    for x in 0..n {
        kleene[x] = match parts[x] {
            Part::Lower(i) => {
                if i == lt {
                    middle_index[k.kleene(kb)]
                } else {
                    upper_index[i]
                }
            }
            Part::Middle(j) => middle_index[k.kleene(j)],
            Part::Upper(i) => i,
        };
    }

    FiniteAlgebra::from_leq(
        &format!("{}+{}+{}d", l.name(), k.name(), l.name()),
        Signature::Bi,
        labels,
        leq,
        Some(kleene),
        None,
        None,
    )
}

/// Componentwise direct product. Element labels are `(l,r)` pairs.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch(format!(
            "{} is {} but {} is {}",
            a.name(),
            a.signature().tag(),
            b.name(),
            b.signature().tag()
        )));
    }
    let an = a.size();
    let bn = b.size();
    let n = an * bn;
    let idx = |i: usize, j: usize| i * bn + j;
    let labels: Vec<String> = (0..an)
        .flat_map(|i| (0..bn).map(move |j| (i, j)))
        .map(|(i, j)| format!("({},{})", a.label(i), b.label(j)))
        .collect();
    let mut leq = vec![false; n * n];
    for i1 in 0..an {
        for j1 in 0..bn {
            for i2 in 0..an {
                for j2 in 0..bn {
                    leq[idx(i1, j1) * n + idx(i2, j2)] = a.leq(i1, i2) && b.leq(j1, j2);
                }
            }
        }
    }
    let lift = |ta: Option<&[Elem]>, tb: Option<&[Elem]>| -> Option<Vec<Elem>> {
        match (ta, tb) {
            (Some(ta), Some(tb)) => Some(
                (0..an)
                    .flat_map(|i| (0..bn).map(move |j| (i, j)))
                    .map(|(i, j)| idx(ta[i], tb[j]))
                    .collect(),
            ),
            _ => None,
        }
    };
    use crate::algebra::UnaryOp::*;
    FiniteAlgebra::from_leq(
        &format!("{}x{}", a.name(), b.name()),
        a.signature(),
        labels,
        leq,
        lift(a.unary(Kleene), b.unary(Kleene)),
        lift(a.unary(Brouwer), b.unary(Brouwer)),
        lift(a.unary(Diamond), b.unary(Diamond)),
    )
}

/// The modular ortholattice with k pairs of atoms: 0, 1, and atoms
/// `a, a', b, b', ...` where `'` is the orthocomplement and `~ = '`.
pub fn horizontal_sum_mo(k: usize) -> FiniteAlgebra {
    assert!(k >= 1, "need at least one pair of atoms");
    let n = 2 * k + 2;
    let mut labels = vec!["0".to_string()];
    for i in 0..k {
        labels.push(interior_label(i));
    }
    for i in 0..k {
        labels.push(format!("{}'", interior_label(i)));
    }
    labels.push("1".to_string());
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
        leq[i] = true; // bottom row: 0 <= i
        leq[i * n + (n - 1)] = true;
    }
    let mut kleene = vec![0usize; n];
    kleene[0] = n - 1;
    kleene[n - 1] = 0;
    for i in 0..k {
        kleene[1 + i] = 1 + k + i;
        kleene[1 + k + i] = 1 + i;
    }
    FiniteAlgebra::from_leq(
        &format!("MO{k}"),
        Signature::Bz,
        labels,
        leq,
        Some(kleene.clone()),
        Some(kleene),
        None,
    )
    .expect("MO_k is a valid ortholattice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, AlgebraClass};
    use crate::embedding::find_isomorphism;

    #[test]
    fn chains_are_antiortholattices() {
        for n in 1..=5 {
            let c = chain(n);
            let r = classify(&c).unwrap();
            assert!(r.holds(AlgebraClass::PbzStar), "D{n}");
            assert!(r.holds(AlgebraClass::Antiortholattice), "D{n}");
        }
    }

    #[test]
    fn chain_three_has_fixed_midpoint() {
        let c = chain(3);
        assert_eq!(c.kleene(1), 1);
        assert_eq!(c.brouwer(1), 0);
    }

    #[test]
    fn duals_of_chains_are_chains() {
        let d3 = chain(3).lattice_reduct();
        let dd = dual(&d3);
        assert!(find_isomorphism(&dd, &d3, Signature::Lattice)
            .unwrap()
            .is_some());
    }

    #[test]
    fn dual_is_an_involution_of_tables() {
        let b6lat = crate::catalog::catalog("B6").unwrap().lattice_reduct();
        let dd = dual(&dual(&b6lat));
        for x in b6lat.elements() {
            for y in b6lat.elements() {
                assert_eq!(b6lat.leq(x, y), dd.leq(x, y));
            }
        }
    }

    #[test]
    fn ordinal_sum_sizes_and_glue() {
        let d2 = chain(2).lattice_reduct();
        let s = ordinal_sum(&d2, &d2);
        assert_eq!(s.size(), 3);
        let d3 = chain(3).lattice_reduct();
        assert!(find_isomorphism(&s, &d3, Signature::Lattice)
            .unwrap()
            .is_some());
    }

    #[test]
    fn ordinal_sum_f8_shape() {
        let d2 = chain(2).lattice_reduct();
        let b6 = crate::catalog::catalog("B6").unwrap().lattice_reduct();
        let s = ordinal_sum(&ordinal_sum(&d2, &b6), &d2);
        assert_eq!(s.size(), 8);
    }

    #[test]
    fn ordinal_sum_m3_m3_bottom_covers() {
        let m3 = crate::catalog::catalog("M3").unwrap();
        let s = ordinal_sum(&m3, &m3);
        assert_eq!(s.size(), 9);
        assert_eq!(s.upper_covers(s.bottom_element()).len(), 3);
    }

    #[test]
    fn symmetric_extension_d2_d2_is_d4() {
        let d2 = chain(2);
        let s = symmetric_extension(&d2.lattice_reduct(), &d2.bi_reduct().unwrap()).unwrap();
        assert_eq!(s.size(), 4);
        let d4 = chain(4).bi_reduct().unwrap();
        assert!(find_isomorphism(&s, &d4, Signature::Bi).unwrap().is_some());
    }

    #[test]
    fn symmetric_extension_rejects_trivial_lower() {
        let d1 = chain(1);
        let d2 = chain(2).bi_reduct().unwrap();
        assert!(symmetric_extension(&d1.lattice_reduct(), &d2).is_err());
    }

    #[test]
    fn product_with_trivial_is_identity() {
        let d1 = chain(1);
        let f8 = crate::catalog::catalog("F8").unwrap();
        let p = direct_product(&d1, &f8).unwrap();
        assert!(find_isomorphism(&p, &f8, Signature::Bz).unwrap().is_some());
    }

    #[test]
    fn product_of_two_chains_is_boolean_square() {
        let d2 = chain(2);
        let p = direct_product(&d2, &d2).unwrap();
        let mo1 = horizontal_sum_mo(1);
        assert!(find_isomorphism(&p, &mo1, Signature::Bz).unwrap().is_some());
    }

    #[test]
    fn mo2_is_orthomodular_not_distributive() {
        let mo2 = horizontal_sum_mo(2);
        let r = classify(&mo2).unwrap();
        assert!(r.holds(AlgebraClass::Orthomodular));
        assert!(!r.holds(AlgebraClass::Distributive));
        // DIST counterexample lies among the atoms
        match r.get(AlgebraClass::Distributive) {
            crate::classify::Membership::Fails(w) => {
                for &e in &w.assignment {
                    assert!(e != mo2.bottom_element() && e != mo2.top_element());
                }
            }
            other => panic!("{other:?}"),
        }
    }
}

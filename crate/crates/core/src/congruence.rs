//! Congruences, principal congruence closure, the congruence set, quotients
//! and subdirect irreducibility.

use crate::algebra::{Elem, FiniteAlgebra, Signature, UnaryOp};
use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};

/// Congruence sets are only computed for algebras up to this size.
pub const CONGRUENCE_SIZE_CAP: usize = 16;

/// Unary operations a congruence must respect under the given signature.
fn ops_for(algebra: &FiniteAlgebra, signature: Signature) -> Vec<&[Elem]> {
    let mut ops = Vec::new();
    if signature.has_kleene() {
        if let Some(t) = algebra.unary(UnaryOp::Kleene) {
            ops.push(t);
        }
    }
    if signature.has_brouwer() {
        if let Some(t) = algebra.unary(UnaryOp::Brouwer) {
            ops.push(t);
        }
    }
    if signature.has_diamond() {
        if let Some(t) = algebra.unary(UnaryOp::Diamond) {
            ops.push(t);
        }
    }
    ops
}

/// Compatibility of a partition with meet, join and the signature's unary
/// operations.
pub fn is_congruence(algebra: &FiniteAlgebra, partition: &Partition, signature: Signature) -> bool {
    let n = algebra.size();
    if partition.n_elements() != n {
        return false;
    }
    let ops = ops_for(algebra, signature);
    for x in 0..n {
        for y in 0..n {
            if !partition.same_block(x, y) {
                continue;
            }
            for t in &ops {
                if !partition.same_block(t[x], t[y]) {
                    return false;
                }
            }
            for z in 0..n {
                if !partition.same_block(algebra.meet(x, z), algebra.meet(y, z)) {
                    return false;
                }
                if !partition.same_block(algebra.join(x, z), algebra.join(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Least congruence identifying `x` and `y`: closure under single-argument
/// operation translations and transitivity (union-find).
pub fn principal_congruence(
    algebra: &FiniteAlgebra,
    x: Elem,
    y: Elem,
    signature: Signature,
) -> Partition {
    let n = algebra.size();
    let ops = ops_for(algebra, signature);
    let mut uf = UnionFind::new(n);
    uf.union(x, y);
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..n {
            for b in (a + 1)..n {
                if uf.find(a) != uf.find(b) {
                    continue;
                }
                for t in &ops {
                    if uf.union(t[a], t[b]) {
                        changed = true;
                    }
                }
                for z in 0..n {
                    if uf.union(algebra.meet(a, z), algebra.meet(b, z)) {
                        changed = true;
                    }
                    if uf.union(algebra.join(a, z), algebra.join(b, z)) {
                        changed = true;
                    }
                }
            }
        }
    }
    uf.into_partition()
}

/// All congruences, generated as the join-closure of the principal ones,
/// sorted coarsest-last. Capped at [`CONGRUENCE_SIZE_CAP`] elements.
pub fn all_congruences(algebra: &FiniteAlgebra, signature: Signature) -> Result<Vec<Partition>> {
    let n = algebra.size();
    if n > CONGRUENCE_SIZE_CAP {
        return Err(Error::CapExceeded(format!(
            "{n} elements exceed the congruence cap of {CONGRUENCE_SIZE_CAP}"
        )));
    }
    let mut set = std::collections::BTreeSet::new();
    set.insert(Partition::identity(n));
    for x in 0..n {
        for y in (x + 1)..n {
            set.insert(principal_congruence(algebra, x, y, signature));
        }
    }
    loop {
        let snapshot: Vec<Partition> = set.iter().cloned().collect();
        let before = set.len();
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                set.insert(snapshot[i].join(&snapshot[j]));
            }
        }
        if set.len() == before {
            break;
        }
    }
    let mut out: Vec<Partition> = set.into_iter().collect();
    out.sort_by(|p, q| q.n_blocks().cmp(&p.n_blocks()).then_with(|| p.cmp(q)));
    Ok(out)
}

/// Quotient of the `signature`-reduct by a congruence. Block labels join the
/// member labels with `,`; operations are computed on representatives and
/// verified independent of the choice.
pub fn quotient(
    algebra: &FiniteAlgebra,
    partition: &Partition,
    signature: Signature,
) -> Result<FiniteAlgebra> {
    if !is_congruence(algebra, partition, signature) {
        return Err(Error::NotACongruence(format!(
            "partition {} is not compatible with the {} operations",
            partition.to_text(algebra),
            signature.tag()
        )));
    }
    let blocks = partition.blocks();
    let nb = blocks.len();
    let id_of = {
        let mut map = vec![0usize; algebra.size()];
        for (bid, b) in blocks.iter().enumerate() {
            for &e in b {
                map[e] = bid;
            }
        }
        map
    };
    let labels: Vec<String> = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|&e| algebra.label(e))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    // well-definedness: every representative pair must give block-equal results
    for (bi, bx) in blocks.iter().enumerate() {
        for (bj, by) in blocks.iter().enumerate() {
            let m0 = id_of[algebra.meet(bx[0], by[0])];
            let j0 = id_of[algebra.join(bx[0], by[0])];
            for &x in bx {
                for &y in by {
                    if id_of[algebra.meet(x, y)] != m0 || id_of[algebra.join(x, y)] != j0 {
                        return Err(Error::NotACongruence(format!(
                            "blocks {bi} and {bj} have representative-dependent operations"
                        )));
                    }
                }
            }
        }
    }
    let mut leq = vec![false; nb * nb];
    for (bi, bx) in blocks.iter().enumerate() {
        for (bj, by) in blocks.iter().enumerate() {
            leq[bi * nb + bj] = id_of[algebra.meet(bx[0], by[0])] == bi;
        }
    }
    let lift = |op: UnaryOp, wanted: bool| -> Option<Vec<Elem>> {
        if !wanted {
            return None;
        }
        algebra
            .unary(op)
            .map(|t| blocks.iter().map(|b| id_of[t[b[0]]]).collect())
    };
    FiniteAlgebra::from_leq(
        &format!("{}/theta", algebra.name()),
        signature,
        labels,
        leq,
        lift(UnaryOp::Kleene, signature.has_kleene()),
        lift(UnaryOp::Brouwer, signature.has_brouwer()),
        lift(UnaryOp::Diamond, signature.has_diamond()),
    )
}

/// Intersection of all non-identity congruences; `Some` iff it is not the
/// identity (the monolith).
pub fn monolith(algebra: &FiniteAlgebra, signature: Signature) -> Result<Option<Partition>> {
    let n = algebra.size();
    if n > CONGRUENCE_SIZE_CAP {
        return Err(Error::CapExceeded(format!(
            "{n} elements exceed the congruence cap of {CONGRUENCE_SIZE_CAP}"
        )));
    }
    if n == 1 {
        return Ok(None);
    }
    // the meet of all non-identity congruences equals the meet of all
    // non-identity principal ones
    let mut inter: Option<Partition> = None;
    for x in 0..n {
        for y in (x + 1)..n {
            let p = principal_congruence(algebra, x, y, signature);
            inter = Some(match inter {
                None => p,
                Some(acc) => acc.meet(&p),
            });
        }
    }
    Ok(inter.filter(|p| !p.is_identity()))
}

/// Subdirect irreducibility: nontrivial and possessing a monolith. Trivial
/// algebras are not subdirectly irreducible under this convention.
pub fn is_subdirectly_irreducible(algebra: &FiniteAlgebra, signature: Signature) -> Result<bool> {
    Ok(monolith(algebra, signature)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::constructors::{chain, direct_product};
    use crate::embedding::find_isomorphism;

    #[test]
    fn identity_partition_is_a_congruence() {
        let a = catalog("A").unwrap();
        assert!(is_congruence(
            &a,
            &Partition::identity(a.size()),
            Signature::Bz
        ));
    }

    #[test]
    fn principal_on_equal_pair_is_identity() {
        let a = catalog("A").unwrap();
        let p = principal_congruence(&a, 3, 3, Signature::Bz);
        assert!(p.is_identity());
    }

    #[test]
    fn d3_midpoint_collapse() {
        // identifying a with 1 forces 0 = a' = a, so everything collapses
        let d3 = chain(3);
        let p = principal_congruence(&d3, 1, 2, Signature::Bz);
        assert!(p.is_total());
    }

    #[test]
    fn d3_is_simple() {
        let d3 = chain(3);
        let congs = all_congruences(&d3, Signature::Bz).unwrap();
        assert_eq!(congs.len(), 2);
        assert!(congs[0].is_identity());
        assert!(congs[1].is_total());
    }

    #[test]
    fn d1_has_one_congruence() {
        let d1 = chain(1);
        assert_eq!(all_congruences(&d1, Signature::Bz).unwrap().len(), 1);
    }

    #[test]
    fn product_has_factor_congruences() {
        let d2 = chain(2);
        let p = direct_product(&d2, &d2).unwrap();
        let congs = all_congruences(&p, Signature::Bz).unwrap();
        let nontrivial = congs
            .iter()
            .filter(|c| !c.is_identity() && !c.is_total())
            .count();
        assert!(nontrivial >= 2, "found {nontrivial}");
    }

    #[test]
    fn quotients_by_extremes() {
        let a = catalog("F8").unwrap();
        let q_id = quotient(&a, &Partition::identity(a.size()), Signature::Bz).unwrap();
        assert!(find_isomorphism(&q_id, &a, Signature::Bz)
            .unwrap()
            .is_some());
        let q_tot = quotient(&a, &Partition::total(a.size()), Signature::Bz).unwrap();
        assert_eq!(q_tot.size(), 1);
    }

    #[test]
    fn non_congruence_is_rejected() {
        let f8 = catalog("F8").unwrap();
        // {0, c} is not a congruence class arrangement for F8
        let mut ids = vec![0usize; f8.size()];
        for (i, id) in ids.iter_mut().enumerate() {
            *id = if i <= 1 { 0 } else { i };
        }
        let p = Partition::from_block_ids(ids);
        assert!(matches!(
            quotient(&f8, &p, Signature::Bz),
            Err(Error::NotACongruence(_))
        ));
    }

    #[test]
    fn subdirect_irreducibility_small_cases() {
        assert!(is_subdirectly_irreducible(&chain(2), Signature::Bz).unwrap());
        assert!(is_subdirectly_irreducible(&chain(3), Signature::Bz).unwrap());
        assert!(!is_subdirectly_irreducible(&chain(1), Signature::Bz).unwrap());
        let d2 = chain(2);
        let p = direct_product(&d2, &d2).unwrap();
        assert!(!is_subdirectly_irreducible(&p, Signature::Bz).unwrap());
    }

    #[test]
    fn size_cap_enforced() {
        let m3m3 = catalog("M3+M3").unwrap();
        let d3 = chain(3);
        let big = direct_product(&m3m3, &d3).unwrap();
        assert!(matches!(
            all_congruences(&big, Signature::Bz),
            Err(Error::CapExceeded(_))
        ));
    }
}

//! Partitions of an algebra's universe, serialized as semicolon-separated
//! blocks of comma-separated element labels, blocks sorted by least element.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

/// An equivalence relation in canonical form: `block_of[x]` is the block id
/// of `x`, blocks numbered by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
    n_blocks: usize,
}

impl Partition {
    pub fn from_block_ids(raw: Vec<usize>) -> Partition {
        let mut remap = std::collections::HashMap::new();
        let mut block_of = Vec::with_capacity(raw.len());
        let mut next = 0;
        for &b in &raw {
            let id = *remap.entry(b).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            block_of.push(id);
        }
        Partition {
            block_of,
            n_blocks: next,
        }
    }

    pub fn identity(n: usize) -> Partition {
        Partition {
            block_of: (0..n).collect(),
            n_blocks: n,
        }
    }

    pub fn total(n: usize) -> Partition {
        Partition {
            block_of: vec![0; n],
            n_blocks: n.min(1),
        }
    }

    /// Build from explicit blocks; they must partition `0..n`.
    pub fn from_blocks(blocks: &[Vec<Elem>], n: usize) -> Result<Partition> {
        let mut raw = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &e in block {
                if e >= n {
                    return Err(Error::MalformedAlgebra(format!("element {e} out of range")));
                }
                if raw[e] != usize::MAX {
                    return Err(Error::MalformedAlgebra(format!(
                        "element {e} appears in two blocks"
                    )));
                }
                raw[e] = i;
            }
        }
        if let Some(missing) = raw.iter().position(|&b| b == usize::MAX) {
            return Err(Error::MalformedAlgebra(format!(
                "element {missing} not covered by any block"
            )));
        }
        Ok(Partition::from_block_ids(raw))
    }

    pub fn n_elements(&self) -> usize {
        self.block_of.len()
    }

    pub fn n_blocks(&self) -> usize {
        self.n_blocks
    }

    pub fn block_id(&self, x: Elem) -> usize {
        self.block_of[x]
    }

    pub fn same_block(&self, x: Elem, y: Elem) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn is_identity(&self) -> bool {
        self.n_blocks == self.block_of.len()
    }

    pub fn is_total(&self) -> bool {
        self.n_blocks <= 1
    }

    /// Blocks as element lists, sorted by least element.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut blocks: Vec<Vec<Elem>> = vec![Vec::new(); self.n_blocks];
        for (e, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(e);
        }
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    pub fn block_is_singleton(&self, x: Elem) -> bool {
        let b = self.block_of[x];
        self.block_of.iter().filter(|&&v| v == b).count() == 1
    }

    /// Refinement order: every block of `self` lies inside a block of
    /// `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.block_of.len() == coarser.block_of.len()
            && (0..self.block_of.len()).all(|x| {
                (0..self.block_of.len()).all(|y| !self.same_block(x, y) || coarser.same_block(x, y))
            })
    }

    /// Meet in the partition lattice: common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.block_of.len();
        let raw: Vec<usize> = (0..n)
            .map(|x| self.block_of[x] * (other.n_blocks.max(1)) + other.block_of[x])
            .collect();
        Partition::from_block_ids(raw)
    }

    /// Join in the partition lattice: transitive closure of the union.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.block_of.len();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            for y in (x + 1)..n {
                if self.same_block(x, y) || other.same_block(x, y) {
                    uf.union(x, y);
                }
            }
        }
        uf.into_partition()
    }

    /// Render with the algebra's labels.
    pub fn to_text(&self, algebra: &FiniteAlgebra) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&e| algebra.label(e))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parse the serialization format against an algebra's labels.
    pub fn parse(text: &str, algebra: &FiniteAlgebra) -> Result<Partition> {
        if algebra
            .labels()
            .iter()
            .any(|l| l.contains(',') || l.contains(';'))
        {
            return Err(Error::MalformedAlgebra(
                "partition syntax needs labels without , or ;".into(),
            ));
        }
        let mut blocks = Vec::new();
        for block_text in text.split(';') {
            let mut block = Vec::new();
            for label in block_text.split(',') {
                let label = label.trim();
                let e = algebra
                    .element(label)
                    .ok_or_else(|| Error::UnknownName(format!("element {label}")))?;
                block.push(e);
            }
            blocks.push(block);
        }
        Partition::from_blocks(&blocks, algebra.size())
    }
}

/// Small union-find used by the congruence closures.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the union merged two classes.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let raw: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_block_ids(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn canonical_form_and_blocks() {
        let p = Partition::from_block_ids(vec![7, 7, 3, 3, 9]);
        assert_eq!(p.n_blocks(), 3);
        assert_eq!(p.blocks(), vec![vec![0, 1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn serialization_round_trip() {
        let a = catalog("A").unwrap();
        // input may list blocks and members in any order
        let p = Partition::parse("0;a;c,e;b,d;b',d';c',e';a';1", &a).unwrap();
        assert_eq!(p.n_blocks(), 8);
        // output sorts blocks by least element and members by index
        let canonical = "0;c,e;a;b,d;a';d',b';e',c';1";
        assert_eq!(p.to_text(&a), canonical);
        assert_eq!(Partition::parse(canonical, &a).unwrap(), p);
    }

    #[test]
    fn join_is_transitive_closure() {
        let p = Partition::from_block_ids(vec![0, 0, 1, 2]);
        let q = Partition::from_block_ids(vec![0, 1, 1, 2]);
        let j = p.join(&q);
        assert!(j.same_block(0, 2));
        assert!(!j.same_block(0, 3));
    }

    #[test]
    fn refinement() {
        let fine = Partition::identity(4);
        let coarse = Partition::total(4);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(fine.meet(&coarse) == fine);
        assert!(fine.join(&coarse) == coarse);
    }
}

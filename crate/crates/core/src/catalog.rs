//! The frozen catalog of named algebras, each validated at first use. The H
//! entry runs an exhaustive completion search for its Brouwer table and
//! refuses to build unless the completion is unique and equals the frozen
//! one.

use crate::algebra::{AlgebraBuilder, Elem, FiniteAlgebra, Signature};
use crate::constructors::{chain, direct_product, horizontal_sum_mo, symmetric_extension};
use crate::error::{Error, Result};
use std::sync::LazyLock;

pub struct CatalogEntry {
    pub name: &'static str,
    pub provenance: &'static str,
    pub algebra: FiniteAlgebra,
}

/// All completions of a Brouwer table on a BI-lattice: every total table
/// satisfying `x & x~ = 0`, `x <= x~~ = x~'`, antitonicity, and the given
/// fixed values (bounds are always forced). Exhaustive over the remaining
/// candidates.
pub fn complete_brouwer_tables(
    algebra: &FiniteAlgebra,
    fixed: &[(Elem, Elem)],
) -> Result<Vec<Vec<Elem>>> {
    if !algebra.signature().has_kleene() || !algebra.signature().has_bounds() {
        return Err(Error::SignatureMismatch(
            "brouwer completion needs a bounded involution lattice".into(),
        ));
    }
    let n = algebra.size();
    let bot = algebra.bottom_element();
    let top = algebra.top_element();
    let mut pinned: Vec<Option<Elem>> = vec![None; n];
    pinned[bot] = Some(top);
    pinned[top] = Some(bot);
    for &(x, v) in fixed {
        pinned[x] = Some(v);
    }
    let candidates: Vec<Vec<Elem>> = (0..n)
        .map(|x| match pinned[x] {
            Some(v) => vec![v],
            None => (0..n).filter(|&y| algebra.meet(x, y) == bot).collect(),
        })
        .collect();
    let mut table = vec![0usize; n];
    let mut out = Vec::new();
    fn consistent(algebra: &FiniteAlgebra, table: &[Elem], upto: usize) -> bool {
        let bot = algebra.bottom_element();
        for x in 0..=upto {
            let bx = table[x];
            if algebra.meet(x, bx) != bot {
                return false;
            }
            if bx <= upto {
                let bbx = table[bx];
                if !algebra.leq(x, bbx) || bbx != algebra.kleene(bx) {
                    return false;
                }
            }
            for y in 0..=upto {
                if algebra.leq(x, y) && !algebra.leq(table[y], table[x]) {
                    return false;
                }
            }
        }
        true
    }
    fn search(
        algebra: &FiniteAlgebra,
        candidates: &[Vec<Elem>],
        table: &mut Vec<Elem>,
        at: usize,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if at == candidates.len() {
            out.push(table.clone());
            return;
        }
        for &v in &candidates[at] {
            table[at] = v;
            if consistent(algebra, table, at) {
                search(algebra, candidates, table, at + 1, out);
            }
        }
    }
    search(algebra, &candidates, &mut table, 0, &mut out);
    Ok(out)
}

fn b6() -> FiniteAlgebra {
    AlgebraBuilder::new("B6", Signature::Bi, &["0", "a", "b", "b'", "a'", "1"])
        .covers("0", &["a", "b"])
        .covers("a", &["b'"])
        .covers("b", &["a'"])
        .covers("b'", &["1"])
        .covers("a'", &["1"])
        .involution_pairs(&[("0", "1"), ("a", "a'"), ("b", "b'")])
        .build()
        .expect("B6")
}

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
        .expect("B6-OL")
}

fn f8() -> FiniteAlgebra {
    AlgebraBuilder::new(
        "F8",
        Signature::Bz,
        &["0", "c", "a", "b", "b'", "a'", "c'", "1"],
    )
    .covers("0", &["c"])
    .covers("c", &["a", "b"])
    .covers("a", &["b'"])
    .covers("b", &["a'"])
    .covers("b'", &["c'"])
    .covers("a'", &["c'"])
    .covers("c'", &["1"])
    .involution_pairs(&[("0", "1"), ("c", "c'"), ("a", "a'"), ("b", "b'")])
    .trivial_brouwer()
    .build()
    .expect("F8")
}

fn m3() -> FiniteAlgebra {
    AlgebraBuilder::new("M3", Signature::Lattice, &["0", "a", "b", "c", "1"])
        .covers("0", &["a", "b", "c"])
        .covers("a", &["1"])
        .covers("b", &["1"])
        .covers("c", &["1"])
        .build()
        .expect("M3")
}

/// M3 with the pseudo-Kleene involution that swaps two atoms and fixes the
/// third; the identity-on-atoms choice is not order-reversing.
fn m3_pk() -> FiniteAlgebra {
    AlgebraBuilder::new("M3-PK", Signature::Bi, &["0", "a", "b", "c", "1"])
        .covers("0", &["a", "b", "c"])
        .covers("a", &["1"])
        .covers("b", &["1"])
        .covers("c", &["1"])
        .involution_pairs(&[("0", "1"), ("a", "b"), ("c", "c")])
        .build()
        .expect("M3-PK")
}

fn m3_plus_m3() -> FiniteAlgebra {
    let s = symmetric_extension(&m3().lattice_reduct(), &chain(1).bi_reduct().expect("D1"))
        .expect("M3+D1+M3d");
    let bz = s
        .trivial_brouwer_extension()
        .expect("M3+M3 is an antiortholattice");
    bz.relabel("M3+M3", &["0", "a", "b", "c", "m", "c'", "b'", "a'", "1"])
        .expect("M3+M3 labels")
}

fn d2_m3_d2() -> FiniteAlgebra {
    let s = symmetric_extension(&chain(2).lattice_reduct(), &m3_pk()).expect("D2+M3+D2");
    let bz = s
        .trivial_brouwer_extension()
        .expect("D2+M3+D2 is an antiortholattice");
    bz.relabel("D2+M3+D2", &["0", "e", "a", "b", "c", "e'", "1"])
        .expect("D2+M3+D2 labels")
}

fn d2sq_d2sq() -> FiniteAlgebra {
    let d2 = chain(2);
    let square = direct_product(&d2, &d2).expect("D2^2").lattice_reduct();
    let s = symmetric_extension(&square, &chain(1).bi_reduct().expect("D1")).expect("D2^2+D2^2");
    let bz = s
        .trivial_brouwer_extension()
        .expect("D2^2+D2^2 is an antiortholattice");
    bz.relabel("D2^2+D2^2", &["0", "a", "b", "c", "b'", "a'", "1"])
        .expect("D2^2+D2^2 labels")
}

fn h_without_brouwer() -> FiniteAlgebra {
    AlgebraBuilder::new(
        "H",
        Signature::Bi,
        &[
            "0", "d", "e", "f", "g", "a", "b", "c", "b'", "a'", "d'", "e'", "f'", "g'", "1",
        ],
    )
    .covers("0", &["d", "e", "f", "g"])
    .covers("d", &["a", "c"])
    .covers("e", &["b", "c"])
    .covers("f", &["b'", "c"])
    .covers("g", &["a'", "c"])
    .covers("a", &["g'"])
    .covers("b", &["f'"])
    .covers("b'", &["e'"])
    .covers("a'", &["d'"])
    .covers("c", &["d'", "e'", "f'", "g'"])
    .covers("d'", &["1"])
    .covers("e'", &["1"])
    .covers("f'", &["1"])
    .covers("g'", &["1"])
    .involution_pairs(&[
        ("0", "1"),
        ("d", "d'"),
        ("e", "e'"),
        ("f", "f'"),
        ("g", "g'"),
        ("a", "a'"),
        ("b", "b'"),
        ("c", "c"),
    ])
    .build()
    .expect("H order")
}

/// The labeled Brouwer values of H: f~ = b, g~ = a, e~ = b', d~ = a'. The
/// rest of the table is pinned by the unique completion; the frozen result is
/// asserted against the search at build time.
fn h() -> FiniteAlgebra {
    let base = h_without_brouwer();
    let e = |l: &str| base.element(l).expect("H label");
    let fixed = [
        (e("d"), e("a'")),
        (e("e"), e("b'")),
        (e("f"), e("b")),
        (e("g"), e("a")),
    ];
    let completions = complete_brouwer_tables(&base, &fixed).expect("H completion search");
    assert_eq!(
        completions.len(),
        1,
        "the Brouwer table of H must complete uniquely, found {}",
        completions.len()
    );
    let frozen: Vec<Elem> = [
        ("0", "1"),
        ("d", "a'"),
        ("e", "b'"),
        ("f", "b"),
        ("g", "a"),
        ("a", "a'"),
        ("b", "b'"),
        ("c", "0"),
        ("b'", "b"),
        ("a'", "a"),
        ("d'", "0"),
        ("e'", "0"),
        ("f'", "0"),
        ("g'", "0"),
        ("1", "0"),
    ]
    .iter()
    .fold(vec![0; base.size()], |mut t, (x, v)| {
        t[e(x)] = e(v);
        t
    });
    assert_eq!(
        completions[0], frozen,
        "H completion drifted from the frozen table"
    );
    let labels: Vec<&str> = base.labels().iter().map(String::as_str).collect();
    let mut builder = AlgebraBuilder::new("H", Signature::Bz, &labels);
    // rebuild with the brouwer table attached
    builder = builder
        .covers("0", &["d", "e", "f", "g"])
        .covers("d", &["a", "c"])
        .covers("e", &["b", "c"])
        .covers("f", &["b'", "c"])
        .covers("g", &["a'", "c"])
        .covers("a", &["g'"])
        .covers("b", &["f'"])
        .covers("b'", &["e'"])
        .covers("a'", &["d'"])
        .covers("c", &["d'", "e'", "f'", "g'"])
        .covers("d'", &["1"])
        .covers("e'", &["1"])
        .covers("f'", &["1"])
        .covers("g'", &["1"])
        .involution_pairs(&[
            ("0", "1"),
            ("d", "d'"),
            ("e", "e'"),
            ("f", "f'"),
            ("g", "g'"),
            ("a", "a'"),
            ("b", "b'"),
            ("c", "c"),
        ])
        .brouwer_map(&[
            ("0", "1"),
            ("d", "a'"),
            ("e", "b'"),
            ("f", "b"),
            ("g", "a"),
            ("a", "a'"),
            ("b", "b'"),
            ("c", "0"),
            ("b'", "b"),
            ("a'", "a"),
            ("d'", "0"),
            ("e'", "0"),
            ("f'", "0"),
            ("g'", "0"),
            ("1", "0"),
        ]);
    builder.build().expect("H")
}

/// The 12-element antiortholattice of the worked quotient example, exactly as
/// drawn: note that, as built, it does contain a copy of F8 on
/// {0, c, a, d, d', a', c', 1}.
fn a_example() -> FiniteAlgebra {
    AlgebraBuilder::new(
        "A",
        Signature::Bz,
        &[
            "0", "c", "a", "e", "b", "d", "a'", "d'", "b'", "e'", "c'", "1",
        ],
    )
    .covers("0", &["c"])
    .covers("c", &["a", "e", "b"])
    .covers("e", &["d", "b'"])
    .covers("b", &["d", "e'"])
    .covers("d", &["a'"])
    .covers("a", &["d'"])
    .covers("d'", &["e'", "b'"])
    .covers("b'", &["c'"])
    .covers("e'", &["c'"])
    .covers("a'", &["c'"])
    .covers("c'", &["1"])
    .involution_pairs(&[
        ("0", "1"),
        ("a", "a'"),
        ("b", "b'"),
        ("c", "c'"),
        ("d", "d'"),
        ("e", "e'"),
    ])
    .trivial_brouwer()
    .build()
    .expect("A")
}

fn bz4() -> FiniteAlgebra {
    AlgebraBuilder::new("BZ4", Signature::Bz, &["0", "a", "a'", "1"])
        .covers("0", &["a", "a'"])
        .covers("a", &["1"])
        .covers("a'", &["1"])
        .involution_pairs(&[("0", "1"), ("a", "a'")])
        .trivial_brouwer()
        .build()
        .expect("BZ4")
}

fn b4_dm() -> FiniteAlgebra {
    AlgebraBuilder::new("B4-DM", Signature::Bi, &["0", "a", "b", "1"])
        .covers("0", &["a", "b"])
        .covers("a", &["1"])
        .covers("b", &["1"])
        .involution_pairs(&[("0", "1"), ("a", "a"), ("b", "b")])
        .build()
        .expect("B4-DM")
}

fn menarini(k: usize) -> FiniteAlgebra {
    let name = format!("menarini-{k}");
    match k {
        1 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "1"])
            .covers("0", &["1"])
            .involution_pairs(&[("0", "1")])
            .diamond_map(&[("0", "0"), ("1", "0")])
            .build(),
        2 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "a", "1"])
            .covers("0", &["a"])
            .covers("a", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a")])
            .diamond_map(&[("0", "0"), ("a", "a"), ("1", "1")])
            .build(),
        3 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "a", "a'", "1"])
            .covers("0", &["a", "a'"])
            .covers("a", &["1"])
            .covers("a'", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a'")])
            .diamond_map(&[("0", "0"), ("a", "a"), ("a'", "1"), ("1", "1")])
            .build(),
        4 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "a", "b", "1"])
            .covers("0", &["a", "b"])
            .covers("a", &["1"])
            .covers("b", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a"), ("b", "b")])
            .diamond_map(&[("0", "0"), ("a", "1"), ("b", "1"), ("1", "1")])
            .build(),
        5 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "a", "a'", "1"])
            .covers("0", &["a", "a'"])
            .covers("a", &["1"])
            .covers("a'", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a'")])
            .diamond_map(&[("0", "0"), ("a", "1"), ("a'", "1"), ("1", "1")])
            .build(),
        6 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "a", "b", "c", "a'", "1"])
            .covers("0", &["a"])
            .covers("a", &["b", "c"])
            .covers("b", &["a'"])
            .covers("c", &["a'"])
            .covers("a'", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a'"), ("b", "b"), ("c", "c")])
            .diamond_map(&[
                ("0", "0"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
                ("a'", "1"),
                ("1", "1"),
            ])
            .build(),
        7 => AlgebraBuilder::new(
            &name,
            Signature::Modal,
            &["0", "a", "b", "c", "b'", "a'", "1"],
        )
        .covers("0", &["a", "b"])
        .covers("a", &["c"])
        .covers("b", &["c"])
        .covers("c", &["b'", "a'"])
        .covers("b'", &["1"])
        .covers("a'", &["1"])
        .involution_pairs(&[("0", "1"), ("a", "a'"), ("b", "b'"), ("c", "c")])
        .diamond_map(&[
            ("0", "0"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
            ("b'", "1"),
            ("a'", "1"),
            ("1", "1"),
        ])
        .build(),
        8 => AlgebraBuilder::new(&name, Signature::Modal, &["0", "a", "a'", "1"])
            .covers("0", &["a"])
            .covers("a", &["a'"])
            .covers("a'", &["1"])
            .involution_pairs(&[("0", "1"), ("a", "a'")])
            .diamond_map(&[("0", "0"), ("a", "1"), ("a'", "1"), ("1", "1")])
            .build(),
        other => panic!("no menarini-{other}"),
    }
    .expect("menarini entries are valid modal algebras")
}

static CATALOG: LazyLock<Vec<CatalogEntry>> = LazyLock::new(|| {
    let mut entries = Vec::new();
    let mut push = |name: &'static str, provenance: &'static str, algebra: FiniteAlgebra| {
        entries.push(CatalogEntry {
            name,
            provenance,
            algebra,
        });
    };
    push("D1", "trivial one-element chain", chain(1));
    push("D2", "two-element chain", chain(2));
    push("D3", "three-element antiortholattice chain", chain(3));
    push("D4", "four-element antiortholattice chain", chain(4));
    push("D5", "five-element antiortholattice chain", chain(5));
    push(
        "B6",
        "the benzene ring as a bounded involution lattice",
        b6(),
    );
    push(
        "B6-OL",
        "the benzene ring as an ortholattice with ~ = '",
        b6_ol(),
    );
    push(
        "F8",
        "the antiortholattice D2+B6+D2: forbidden configuration for the quasiequation Q",
        f8(),
    );
    push(
        "MO2",
        "modular ortholattice with two pairs of atoms",
        horizontal_sum_mo(2),
    );
    push("M3", "diamond lattice with three atoms", m3());
    push(
        "M3-PK",
        "M3 with the pseudo-Kleene involution swapping two atoms",
        m3_pk(),
    );
    push(
        "M3+M3",
        "antiortholattice on the ordinal sum of two diamonds; fails WDSDM at its atoms",
        m3_plus_m3(),
    );
    push(
        "D2+M3+D2",
        "antiortholattice with SDM but not DIST",
        d2_m3_d2(),
    );
    push(
        "D2^2+D2^2",
        "antiortholattice with DIST but not SDM",
        d2sq_d2sq(),
    );
    push(
        "H",
        "15-element PBZ*-lattice with SDM and SK but not J2; Brouwer table completed uniquely from its four labeled values",
        h(),
    );
    push(
        "A",
        "12-element antiortholattice from the worked quotient example, exactly as drawn",
        a_example(),
    );
    push(
        "BZ4",
        "Kleene-quasi-Stone BZ-lattice failing the (*) condition",
        bz4(),
    );
    push(
        "B4-DM",
        "four-element generator of De Morgan algebras, both atoms involution-fixed",
        b4_dm(),
    );
    push(
        "menarini-1",
        "D2 with dia constantly 0: not topological quasi-Boolean",
        menarini(1),
    );
    push(
        "menarini-2",
        "D3 with dia = identity: not classical",
        menarini(2),
    );
    push(
        "menarini-3",
        "Boolean square with dia(a') = 1: not monadic",
        menarini(3),
    );
    push(
        "menarini-4",
        "tetravalent modal generator on B4: not involutive Stone",
        menarini(4),
    );
    push(
        "menarini-5",
        "Boolean square, dia = 1 off zero: not tetravalent",
        menarini(5),
    );
    push(
        "menarini-6",
        "involutive Stone algebra with two involution fixpoints",
        menarini(6),
    );
    push(
        "menarini-7",
        "weak Lukasiewicz algebra that is not involutive Stone",
        menarini(7),
    );
    push(
        "menarini-8",
        "Lukasiewicz algebra on the 4-chain: not tetravalent",
        menarini(8),
    );
    entries
});

/// Look up a catalog algebra by name.
pub fn catalog(name: &str) -> Result<FiniteAlgebra> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.algebra.clone())
        .ok_or_else(|| Error::UnknownName(format!("catalog algebra {name}")))
}

pub fn catalog_entries() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, AlgebraClass};
    use crate::embedding::find_isomorphism;

    #[test]
    fn every_entry_builds_and_classifies() {
        for entry in catalog_entries() {
            let report = classify(&entry.algebra).expect(entry.name);
            assert!(report.holds(AlgebraClass::Lattice), "{}", entry.name);
        }
    }

    #[test]
    fn h_has_fifteen_elements() {
        // the covers and labels pin 15 elements; the figure's element count
        assert_eq!(catalog("H").unwrap().size(), 15);
    }

    #[test]
    fn h_completion_is_unique() {
        let base = h_without_brouwer();
        let e = |l: &str| base.element(l).unwrap();
        let fixed = [
            (e("d"), e("a'")),
            (e("e"), e("b'")),
            (e("f"), e("b")),
            (e("g"), e("a")),
        ];
        let completions = complete_brouwer_tables(&base, &fixed).unwrap();
        assert_eq!(completions.len(), 1);
    }

    #[test]
    fn h_sharp_and_dense_sets() {
        let h = catalog("H").unwrap();
        let names = |xs: Vec<usize>| -> Vec<String> {
            xs.into_iter().map(|x| h.label(x).to_string()).collect()
        };
        assert_eq!(
            names(h.sharp_elements().unwrap()),
            ["0", "a", "b", "b'", "a'", "1"]
        );
        assert_eq!(
            names(h.dense_elements().unwrap()),
            ["c", "d'", "e'", "f'", "g'", "1"]
        );
    }

    #[test]
    fn f8_matches_its_construction() {
        let built = symmetric_extension(&chain(2).lattice_reduct(), &catalog("B6").unwrap())
            .unwrap()
            .trivial_brouwer_extension()
            .unwrap();
        let f8 = catalog("F8").unwrap();
        assert!(find_isomorphism(&built, &f8, Signature::Bz)
            .unwrap()
            .is_some());
    }

    #[test]
    fn trivial_brouwer_extension_of_d3() {
        let d3_bi = chain(3).bi_reduct().unwrap();
        let ext = d3_bi.trivial_brouwer_extension().unwrap();
        let r = classify(&ext).unwrap();
        assert!(r.holds(AlgebraClass::Antiortholattice));
    }

    #[test]
    fn trivial_brouwer_extension_rejects_mo2() {
        let mo2_bi = catalog("MO2").unwrap().bi_reduct().unwrap();
        match mo2_bi.trivial_brouwer_extension() {
            Err(Error::PreconditionFailed { condition, .. }) => {
                assert!(condition.contains("sharp"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mo2_catalog_matches_constructor() {
        let a = catalog("MO2").unwrap();
        assert_eq!(a.size(), 6);
        let (m, j) = a.bounds(a.element("a").unwrap(), a.element("b").unwrap());
        assert_eq!(m, a.bottom_element());
        assert_eq!(j, a.top_element());
        // an ortholattice: every element is sharp
        assert_eq!(a.sharp_elements().unwrap(), (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn dense_elements_of_boolean_chain() {
        // with ~ = ' on D2, only the top is dense
        let d2 = catalog("D2").unwrap();
        assert_eq!(d2.dense_elements().unwrap(), vec![d2.top_element()]);
    }

    #[test]
    fn f8_bounds_example() {
        let f8 = catalog("F8").unwrap();
        let a = f8.element("a").unwrap();
        let b = f8.element("b").unwrap();
        let (m, j) = f8.bounds(a, b);
        assert_eq!(f8.label(m), "c");
        assert_eq!(f8.label(j), "c'");
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(catalog("F9"), Err(Error::UnknownName(_))));
    }
}

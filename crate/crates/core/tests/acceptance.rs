//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Criterion 3 re-checks the published worked-example claims about the
//! catalog algebra A verbatim. Those claims are mutually inconsistent — the
//! algebra as drawn contains F8 on {0, c, a, d, d', a', c', 1}, the stated
//! partition is not a congruence, and an exhaustive search over every
//! congruence-compatible inflation of F8 with the stated block sizes shows no
//! 12-element algebra can satisfy all four claims at once — so that test
//! fails, by design, with the workbench's counter-evidence in the message.

use pbzlat::*;

struct Criterion {
    number: usize,
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: usize, name: &'static str) -> Criterion {
        Criterion {
            number,
            name,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("ACCEPTANCE {} ({}): PASS", self.number, self.name);
        } else {
            println!(
                "ACCEPTANCE {} ({}): FAIL [{}]",
                self.number,
                self.name,
                self.failures.join("; ")
            );
            panic!(
                "criterion {} failed: {}",
                self.number,
                self.failures.join("; ")
            );
        }
    }
}

fn bz_catalog() -> Vec<FiniteAlgebra> {
    catalog_entries()
        .iter()
        .filter(|e| e.algebra.signature().has_brouwer())
        .map(|e| e.algebra.clone())
        .collect()
}

#[test]
fn criterion_01_f8_facts() {
    let mut c = Criterion::new(1, "F8 facts");
    let f8 = catalog("F8").unwrap();
    let report = classify(&f8).unwrap();
    c.check(
        "F8 is an antiortholattice",
        report.holds(AlgebraClass::Antiortholattice),
    );
    c.check("F8 satisfies SDM", holds(&f8, "SDM").unwrap());
    c.check("F8 fails Q", !holds(&f8, "Q").unwrap());
    c.finish();
}

#[test]
fn criterion_02_forbidden_configuration_equivalences() {
    let mut c = Criterion::new(2, "forbidden-configuration equivalences");
    let b6 = catalog("B6").unwrap();
    let f8 = catalog("F8").unwrap();
    for entry in catalog_entries() {
        let a = &entry.algebra;
        if !a.signature().has_kleene() {
            continue;
        }
        let q = holds(a, "Q").unwrap();
        let b6_in = find_embedding(&b6, a, Signature::I).unwrap().is_some();
        c.check(
            &format!("{}: Q iff no B6 sub-involution-lattice", entry.name),
            q == !b6_in,
        );
        if holds(a, "PARA").unwrap() {
            let f8_in = find_embedding(&f8, a, Signature::Bi).unwrap().is_some();
            c.check(
                &format!("{}: Q iff no F8 BI-subalgebra", entry.name),
                q == !f8_in,
            );
            c.check(
                &format!("{}: B6 inside iff F8 inside", entry.name),
                b6_in == f8_in,
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_03_worked_example_suite() {
    let mut c = Criterion::new(3, "worked example suite");
    let a = catalog("A").unwrap();
    let f8 = catalog("F8").unwrap();
    c.check(
        "Q holds on A (the workbench finds the counterexample x=a, y=d instead)",
        holds(&a, "Q").unwrap(),
    );
    c.check(
        "no F8 BI-embedding into A (the workbench finds one on {0,c,a,d,d',a',c',1})",
        find_embedding(&f8, &a, Signature::Bi).unwrap().is_none(),
    );
    let theta = Partition::parse("0;a;c,e;b,d;b',d';c',e';a';1", &a).unwrap();
    let is_cong = is_congruence(&a, &theta, Signature::Bi);
    c.check(
        "the stated partition is a BI-congruence (join with a separates the block {c,e})",
        is_cong,
    );
    c.check(
        "singleton classes of the bounds",
        theta.block_is_singleton(a.bottom_element()) && theta.block_is_singleton(a.top_element()),
    );
    let quotient_iso = quotient(&a, &theta, Signature::Bz)
        .ok()
        .and_then(|q| find_isomorphism(&q, &f8, Signature::Bz).unwrap());
    c.check(
        "quotient by the stated partition is F8",
        quotient_iso.is_some(),
    );
    c.finish();
}

#[test]
fn criterion_04_h_suite() {
    let mut c = Criterion::new(4, "H suite");
    let h = catalog("H").unwrap();
    // the published diagram has 15 elements: 0; d,e,f,g; a,b,c,b',a';
    // d',e',f',g'; 1
    c.check("H has 15 elements", h.size() == 15);
    let report = classify(&h).unwrap();
    c.check("H is a PBZ*-lattice", report.holds(AlgebraClass::PbzStar));
    c.check("H satisfies SDM", holds(&h, "SDM").unwrap());
    c.check("H satisfies SK", holds(&h, "SK").unwrap());
    c.check("H fails J2", !holds(&h, "J2").unwrap());
    c.check(
        "D3 BZ-embeds into H",
        find_embedding(&chain(3), &h, Signature::Bz)
            .unwrap()
            .is_some(),
    );
    let base = h.bi_reduct().unwrap();
    let e = |l: &str| base.element(l).unwrap();
    let fixed = [
        (e("d"), e("a'")),
        (e("e"), e("b'")),
        (e("f"), e("b")),
        (e("g"), e("a")),
    ];
    let completions = complete_brouwer_tables(&base, &fixed).unwrap();
    c.check(
        "the Brouwer completion search returns exactly one table",
        completions.len() == 1,
    );
    c.check(
        "the unique completion is the frozen catalog table",
        completions[0] == h.elements().map(|x| h.brouwer(x)).collect::<Vec<_>>(),
    );
    c.finish();
}

#[test]
fn criterion_05_chain_suite() {
    let mut c = Criterion::new(5, "chain suite");
    for n in 2..=5 {
        let d = chain(n);
        let report = classify(&d).unwrap();
        c.check(
            &format!("D{n} is a PBZ* antiortholattice"),
            report.holds(AlgebraClass::PbzStar) && report.holds(AlgebraClass::Antiortholattice),
        );
    }
    c.check("D4 fails SK", !holds(&chain(4), "SK").unwrap());
    c.check("D5 fails SK", !holds(&chain(5), "SK").unwrap());
    c.check("D3 satisfies SDM", holds(&chain(3), "SDM").unwrap());
    c.check("D3 satisfies SK", holds(&chain(3), "SK").unwrap());
    let congs = all_congruences(&chain(3), Signature::Bz).unwrap();
    c.check("D3 is simple", congs.len() == 2);
    c.check(
        "D3 is subdirectly irreducible",
        is_subdirectly_irreducible(&chain(3), Signature::Bz).unwrap(),
    );
    c.finish();
}

#[test]
fn criterion_06_subdirect_product_witnesses() {
    let mut c = Criterion::new(6, "subdirect-product witness suite");
    let m3m3 = catalog("M3+M3").unwrap();
    let wdsdm = named_equation("WDSDM").unwrap();
    match check_claim(&m3m3, wdsdm).unwrap() {
        ClaimOutcome::Fails { counterexample, .. } => {
            let atoms: Vec<Elem> = ["a", "b", "c"]
                .iter()
                .map(|l| m3m3.element(l).unwrap())
                .collect();
            c.check(
                "M3+M3 fails WDSDM at its three atoms",
                counterexample.assignment == atoms,
            );
            c.check(
                "the witness evaluates to 0 on the left",
                counterexample.lhs_value == m3m3.bottom_element(),
            );
            c.check(
                "and to 1 on the right",
                counterexample.rhs_value == m3m3.top_element(),
            );
        }
        ClaimOutcome::Holds => c.check("M3+M3 fails WDSDM", false),
    }
    c.check(
        "M3+M3 fails WDISTjoinTilde",
        !holds(&m3m3, "WDISTjoinTilde").unwrap(),
    );
    let d2m3 = catalog("D2+M3+D2").unwrap();
    c.check("D2+M3+D2 satisfies SDM", holds(&d2m3, "SDM").unwrap());
    c.check("D2+M3+D2 fails DIST", !holds(&d2m3, "DIST").unwrap());
    let dsq = catalog("D2^2+D2^2").unwrap();
    c.check("D2^2+D2^2 satisfies DIST", holds(&dsq, "DIST").unwrap());
    c.check("D2^2+D2^2 fails SDM", !holds(&dsq, "SDM").unwrap());
    let product = direct_product(&m3m3, &chain(3)).unwrap();
    c.check(
        "the comparison product has 27 elements",
        product.size() == 27,
    );
    c.check(
        "M3+M3 does not BZ-embed into (M3+M3) x D3",
        find_embedding(&m3m3, &product, Signature::Bz)
            .unwrap()
            .is_none(),
    );
    c.finish();
}

#[test]
fn criterion_07_quasi_stone_suite() {
    let mut c = Criterion::new(7, "quasi-Stone suite");
    let bz4 = catalog("BZ4").unwrap();
    let stone = classify_stone(&bz4).unwrap();
    c.check(
        "BZ4 is Kleene-quasi-Stone",
        stone.holds(StoneClass::KleeneQuasiStone),
    );
    match check_claim(&bz4, named_equation("star").unwrap()).unwrap() {
        ClaimOutcome::Fails { counterexample, .. } => {
            c.check(
                "BZ4 fails (*) with value 1 against 0",
                counterexample.lhs_value == bz4.top_element()
                    && counterexample.rhs_value == bz4.bottom_element(),
            );
        }
        ClaimOutcome::Holds => c.check("BZ4 fails (*)", false),
    }
    for a in bz_catalog() {
        let stone = classify_stone(&a).unwrap();
        let report = classify(&a).unwrap();
        let expected = report.holds(AlgebraClass::PbzStar)
            && report.holds(AlgebraClass::Distributive)
            && holds(&a, "SDM").unwrap();
        c.check(
            &format!("{}: Kleene-Stone iff PBZ* + DIST + SDM", a.name()),
            stone.holds(StoneClass::KleeneStone) == expected,
        );
        if stone.holds(StoneClass::QuasiStone) {
            for name in ["QS6", "QS7", "QS8", "QS9"] {
                c.check(
                    &format!("{}: {name} holds", a.name()),
                    holds(&a, name).unwrap(),
                );
            }
        }
        if stone.holds(StoneClass::QuasiStoneDeMorgan) {
            let mola = a
                .elements()
                .all(|x| a.brouwer(a.brouwer(x)) == a.kleene(a.brouwer(a.kleene(a.brouwer(x)))));
            c.check(&format!("{}: x~~ = x~'~'", a.name()), mola);
        }
    }
    c.finish();
}

#[test]
fn criterion_08_discriminator_suite() {
    let mut c = Criterion::new(8, "discriminator suite");
    let d3 = chain(3);
    let r = verify_discriminator(&d3).unwrap();
    c.check("t realises the discriminator on D3", r.is_discriminator);
    c.check("e(a,a) = 0 on all 3 diagonal pairs", r.e_diagonal_zero);
    c.check(
        "e(a,b) = 1 on all 6 off-diagonal pairs",
        r.e_off_diagonal_one,
    );
    let r4 = verify_discriminator(&chain(4)).unwrap();
    c.check(
        "D4 does not realise the discriminator",
        !r4.is_discriminator,
    );
    let table = truncated_sum_table(&d3).unwrap();
    let mut all_match = true;
    for x in 0..3usize {
        for y in 0..3usize {
            if table[x * 3 + y] != (x + y).min(2) {
                all_match = false;
            }
        }
    }
    c.check(
        "the truncated sum table on D3 is min(1, x + y) on all 9 entries",
        all_match,
    );
    c.finish();
}

#[test]
fn criterion_09_modal_suite() {
    use ModalClass::*;
    let mut c = Criterion::new(9, "modal suite");
    let get = |k: usize| catalog(&format!("menarini-{k}")).unwrap();
    let classify_k = |k: usize| classify_modal(&get(k)).unwrap();

    // item 1: a diamond-De Morgan algebra that is not topological quasi-Boolean
    let r = classify_k(1);
    c.check("1 in ddm", r.holds(DiamondDeMorgan));
    c.check("1 not tqb", !r.holds(TopologicalQuasiBoolean));

    // item 2: tqb but not classical; dia(a) & dia(a)' = a != 0
    let r = classify_k(2);
    c.check("2 tqb", r.holds(TopologicalQuasiBoolean));
    c.check("2 not classical", !r.holds(ClassicalDiamondDeMorgan));
    let a2 = get(2);
    let ia = a2.element("a").unwrap();
    let m5val = a2.meet(a2.diamond(ia), a2.kleene(a2.diamond(ia)));
    c.check("2 witness dia(a) & dia(a)' = a", m5val == ia);

    // item 3: classical but not monadic; box dia a = 0 != a = dia a
    let r = classify_k(3);
    c.check("3 classical", r.holds(ClassicalDiamondDeMorgan));
    c.check("3 not monadic", !r.holds(MonadicDeMorgan));
    let a3 = get(3);
    let ia = a3.element("a").unwrap();
    let boxdia = a3.kleene(a3.diamond(a3.kleene(a3.diamond(ia))));
    c.check(
        "3 witness box(dia(a)) = 0 and dia(a) = a",
        boxdia == a3.bottom_element() && a3.diamond(ia) == ia,
    );

    // item 4: tetravalent (and monadic) but neither involutive Stone nor weak
    // Lukasiewicz; dia(a & b) = 0 != 1 = dia a & dia b
    let r = classify_k(4);
    c.check("4 tetravalent", r.holds(TetravalentModal));
    c.check("4 monadic", r.holds(MonadicDeMorgan));
    c.check("4 not involutive stone", !r.holds(InvolutiveStone));
    c.check("4 not weak lukasiewicz", !r.holds(WeakLukasiewicz));
    let a4 = get(4);
    let (ia, ib) = (a4.element("a").unwrap(), a4.element("b").unwrap());
    c.check(
        "4 witness dia(a & b) = 0 and dia(a) & dia(b) = 1",
        a4.diamond(a4.meet(ia, ib)) == a4.bottom_element()
            && a4.meet(a4.diamond(ia), a4.diamond(ib)) == a4.top_element(),
    );

    // item 5: monadic but not tetravalent; dia(a) & a' = a' != 0 = a & a'
    let r = classify_k(5);
    c.check("5 monadic", r.holds(MonadicDeMorgan));
    c.check("5 not tetravalent", !r.holds(TetravalentModal));
    let a5 = get(5);
    let ia = a5.element("a").unwrap();
    c.check(
        "5 witness dia(a) & a' = a' while a & a' = 0",
        a5.meet(a5.diamond(ia), a5.kleene(ia)) == a5.kleene(ia)
            && a5.meet(ia, a5.kleene(ia)) == a5.bottom_element(),
    );

    // item 6: involutive Stone but not weak Lukasiewicz (two involution
    // fixpoints break the Kleene inequality)
    let r = classify_k(6);
    c.check("6 involutive stone", r.holds(InvolutiveStone));
    c.check("6 not weak lukasiewicz", !r.holds(WeakLukasiewicz));
    c.check(
        "6 kleene inequality fails",
        !holds(&get(6), "KLEENE").unwrap(),
    );

    // item 7: weak Lukasiewicz but not involutive Stone
    let r = classify_k(7);
    c.check("7 weak lukasiewicz", r.holds(WeakLukasiewicz));
    c.check("7 not involutive stone", !r.holds(InvolutiveStone));
    let a7 = get(7);
    let (ia, ib) = (a7.element("a").unwrap(), a7.element("b").unwrap());
    c.check(
        "7 witness dia(a & b) = 0 and dia(a) & dia(b) = 1",
        a7.diamond(a7.meet(ia, ib)) == a7.bottom_element()
            && a7.meet(a7.diamond(ia), a7.diamond(ib)) == a7.top_element(),
    );

    // item 8: Lukasiewicz but not tetravalent; dia(a) & a' = a' != a = a & a'
    let r = classify_k(8);
    c.check("8 lukasiewicz", r.holds(Lukasiewicz));
    c.check("8 not tetravalent", !r.holds(TetravalentModal));
    c.check("8 not three-valued", !r.holds(ThreeValuedLukasiewicz));
    let a8 = get(8);
    let ia = a8.element("a").unwrap();
    c.check(
        "8 witness dia(a) & a' = a' while a & a' = a",
        a8.meet(a8.diamond(ia), a8.kleene(ia)) == a8.kleene(ia) && a8.meet(ia, a8.kleene(ia)) == ia,
    );

    // every weak Lukasiewicz catalog algebra satisfies M6; every classical
    // one satisfies M8; the translations round-trip on tables
    for k in 1..=8 {
        let a = get(k);
        let r = classify_modal(&a).unwrap();
        if r.holds(WeakLukasiewicz) {
            c.check(
                &format!("menarini-{k} satisfies M6"),
                holds(&a, "M6").unwrap(),
            );
            let f = bz_of_modal(&a).unwrap();
            let back = modal_of_bz(&f).unwrap();
            let same = a
                .elements()
                .all(|x| back.diamond(x) == a.diamond(x) && back.kleene(x) == a.kleene(x));
            c.check(&format!("menarini-{k} round-trips through f and g"), same);
        }
        if r.holds(ClassicalDiamondDeMorgan) {
            c.check(
                &format!("menarini-{k} satisfies M8"),
                holds(&a, "M8").unwrap(),
            );
        }
    }
    for a in bz_catalog() {
        let report = classify(&a).unwrap();
        if report.holds(AlgebraClass::PbzStar) && report.holds(AlgebraClass::Distributive) {
            let g = modal_of_bz(&a).unwrap();
            let back = bz_of_modal(&g).unwrap();
            let same = a
                .elements()
                .all(|x| back.brouwer(x) == a.brouwer(x) && back.kleene(x) == a.kleene(x));
            c.check(&format!("{} round-trips through g and f", a.name()), same);
        }
    }
    c.finish();
}

#[test]
fn criterion_10_property_suites() {
    let mut c = Criterion::new(10, "property suites");
    // SDM and SK each entail (*); J0 entails J2. (SDM does not entail SK:
    // D4 and D5 carry SDM and refuse SK, as criterion 5 checks.)
    for a in bz_catalog() {
        let star = holds(&a, "star").unwrap();
        if holds(&a, "SDM").unwrap() {
            c.check(&format!("{}: SDM entails (*)", a.name()), star);
        }
        if holds(&a, "SK").unwrap() {
            c.check(&format!("{}: SK entails (*)", a.name()), star);
        }
        if holds(&a, "J0").unwrap() {
            c.check(
                &format!("{}: J0 entails J2", a.name()),
                holds(&a, "J2").unwrap(),
            );
        }
    }
    // Q iff Q' on every catalog algebra with an involution
    for entry in catalog_entries() {
        let a = &entry.algebra;
        if !a.signature().has_kleene() {
            continue;
        }
        c.check(
            &format!("{}: Q iff Q'", entry.name),
            holds(a, "Q").unwrap() == holds(a, "Qprime").unwrap(),
        );
        // the four meets coincide whenever the premises hold
        for x in a.elements() {
            for y in a.elements() {
                let xy = a.meet(x, y);
                let primes = a.meet(a.kleene(x), a.kleene(y));
                if a.leq(x, a.kleene(y)) && a.leq(primes, xy) {
                    let ok = a.meet(x, a.kleene(x)) == xy
                        && a.meet(y, a.kleene(y)) == xy
                        && primes == xy;
                    c.check(&format!("{}: four-meet collapse", entry.name), ok);
                }
            }
        }
    }
    // principal congruences match the all-partitions oracle on sizes <= 8
    for entry in catalog_entries() {
        let a = &entry.algebra;
        if a.size() > 8 {
            continue;
        }
        let sig = a.signature();
        let congs: Vec<Partition> = all_partitions(a.size())
            .into_iter()
            .filter(|p| is_congruence(a, p, sig))
            .collect();
        let mut ok = true;
        for x in a.elements() {
            for y in a.elements() {
                let fast = principal_congruence(a, x, y, sig);
                let mut oracle = Partition::total(a.size());
                for cg in &congs {
                    if cg.same_block(x, y) {
                        oracle = oracle.meet(cg);
                    }
                }
                if fast != oracle {
                    ok = false;
                }
            }
        }
        c.check(
            &format!("{}: principal congruences match the oracle", entry.name),
            ok,
        );
    }
    // save/load identity on the full catalog
    for entry in catalog_entries() {
        let text = to_text(&entry.algebra);
        match from_text(&text) {
            Ok(back) => c.check(
                &format!("{}: load after save is the identity", entry.name),
                back == entry.algebra,
            ),
            Err(e) => c.check(&format!("{}: reload failed: {e}", entry.name), false),
        }
    }
    c.finish();
}

fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, at: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if at == n {
            out.push(Partition::from_block_ids(cur.clone()));
            return;
        }
        for b in 0..=max {
            cur.push(b);
            rec(n, at + 1, max.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

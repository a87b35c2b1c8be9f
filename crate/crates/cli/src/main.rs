//! Command-line surface of the workbench. Every command resolves algebra
//! arguments first against the catalog, then as a file path in the algebra
//! file format. Exit codes: 0 for success/holds/found, 1 for a failed check
//! (counterexample, missing embedding, refuted fact), 2 for usage, parse or
//! format errors.

mod facts;

use clap::{Parser, Subcommand};
use pbzlat::*;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pbzlat",
    about = "Finite-model workbench for Brouwer-Zadeh and bounded involution lattices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog algebras
    Catalog,
    /// Print an algebra in the file format
    Show { algebra: String },
    /// Check a named or ad-hoc (quasi)identity on an algebra
    Check { algebra: String, claim: String },
    /// Class memberships of an algebra
    Classify { algebra: String },
    /// Memberships in the diamond-De Morgan tower
    ClassifyModal { algebra: String },
    /// Memberships in the quasi-Stone family
    ClassifyStone { algebra: String },
    /// Search for an embedding of a pattern into a target
    Embed {
        pattern: String,
        target: String,
        /// Signature whose operations the embedding must preserve
        #[arg(long, default_value = "BZ")]
        sig: String,
    },
    /// Search for an isomorphism
    Iso {
        left: String,
        right: String,
        #[arg(long, default_value = "BZ")]
        sig: String,
    },
    /// List all congruences (algebras up to 16 elements)
    Con {
        algebra: String,
        /// Only congruences whose 0- and 1-classes are singletons
        #[arg(long)]
        constants_singleton: bool,
    },
    /// Quotient an algebra by a partition given as label blocks
    Quotient { algebra: String, partition: String },
    /// Direct product of two algebras of the same signature
    Product { left: String, right: String },
    /// Ordinal sum of the bounded lattice reducts
    Osum { lower: String, upper: String },
    /// Symmetric extension: lower (+) middle (+) dual of lower
    Symext { lower: String, middle: String },
    /// Translate between distributive PBZ*-lattices and weak Lukasiewicz algebras
    Translate {
        algebra: String,
        #[arg(long, conflicts_with = "to_bz")]
        to_modal: bool,
        #[arg(long)]
        to_bz: bool,
    },
    /// Evaluate the discriminator term pair on a BZ-algebra
    Discriminator { algebra: String },
    /// Re-check the published desk-scale claims
    VerifyPaper {
        /// Run a single fact by id
        #[arg(long)]
        fact: Option<String>,
    },
}

fn resolve(name_or_path: &str) -> Result<FiniteAlgebra> {
    match catalog(name_or_path) {
        Ok(a) => Ok(a),
        Err(Error::UnknownName(_)) if PathBuf::from(name_or_path).exists() => {
            load_algebra(&PathBuf::from(name_or_path))
        }
        Err(e) => Err(e),
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::ParseError { .. }
        | Error::FormatError { .. }
        | Error::UnknownName(_)
        | Error::SignatureError(_)
        | Error::SignatureMismatch(_)
        | Error::VariableSplit(_)
        | Error::CapExceeded(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn membership_line(name: &str, m: &Membership, algebra: &FiniteAlgebra) -> String {
    match m {
        Membership::Holds => format!("{name}: yes"),
        Membership::NotApplicable => format!("{name}: n/a"),
        Membership::Fails(w) => format!("{name}: no\n    witness: {}", w.describe(algebra)),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Catalog => {
            for entry in catalog_entries() {
                println!(
                    "{:<12} {:>2} elements  {:<7} {}",
                    entry.name,
                    entry.algebra.size(),
                    entry.algebra.signature().tag(),
                    entry.provenance
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Show { algebra } => {
            let a = resolve(&algebra)?;
            print!("{}", to_text(&a));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { algebra, claim } => {
            let a = resolve(&algebra)?;
            let named;
            let parsed;
            let the_claim: &NamedClaim = match named_equation(&claim) {
                Ok(c) => {
                    named = c;
                    named
                }
                Err(Error::UnknownName(_)) => {
                    parsed = match parse_claim(&claim, a.signature())? {
                        Parsed::Equation(e) => NamedClaim::Identity(e),
                        Parsed::Quasiequation(q) => NamedClaim::Quasi(q),
                        Parsed::Term(..) => unreachable!(),
                    };
                    &parsed
                }
                Err(e) => return Err(e),
            };
            match check_claim(&a, the_claim)? {
                ClaimOutcome::Holds => {
                    println!("holds");
                    Ok(ExitCode::SUCCESS)
                }
                ClaimOutcome::Fails {
                    part,
                    var_names,
                    counterexample,
                } => {
                    println!(
                        "counterexample: {}  [{part}]",
                        counterexample.describe(&a, &var_names)
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Classify { algebra } => {
            let a = resolve(&algebra)?;
            let report = classify(&a)?;
            println!("{a}");
            for (class, membership) in report.iter() {
                println!("{}", membership_line(class.name(), membership, &a));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyModal { algebra } => {
            let a = resolve(&algebra)?;
            let report = classify_modal(&a)?;
            println!("{a}");
            for (class, membership) in report.iter() {
                println!("{}", membership_line(class.name(), membership, &a));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyStone { algebra } => {
            let a = resolve(&algebra)?;
            let report = classify_stone(&a)?;
            println!("{a}");
            for (class, membership) in report.iter() {
                println!("{}", membership_line(class.name(), membership, &a));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed {
            pattern,
            target,
            sig,
        } => {
            let p = resolve(&pattern)?;
            let t = resolve(&target)?;
            let signature = Signature::from_tag(&sig)?;
            match find_embedding(&p, &t, signature)? {
                Some(m) => {
                    println!("embedding ({}): {}", signature.tag(), m.describe(&p, &t));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("no embedding");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Iso { left, right, sig } => {
            let l = resolve(&left)?;
            let r = resolve(&right)?;
            let signature = Signature::from_tag(&sig)?;
            match find_isomorphism(&l, &r, signature)? {
                Some(m) => {
                    println!("isomorphism ({}): {}", signature.tag(), m.describe(&l, &r));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("no isomorphism");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Con {
            algebra,
            constants_singleton,
        } => {
            let a = resolve(&algebra)?;
            let congs = all_congruences(&a, a.signature())?;
            let bot = a.bottom_element();
            let top = a.top_element();
            let mut shown = 0;
            for c in &congs {
                let singleton = c.block_is_singleton(bot) && c.block_is_singleton(top);
                if constants_singleton && !singleton {
                    continue;
                }
                shown += 1;
                let mark = if singleton { "  [01-singleton]" } else { "" };
                println!("{}{}", c.to_text(&a), mark);
            }
            println!(
                "{} congruence(s){}; subdirectly irreducible: {}",
                shown,
                if constants_singleton {
                    format!(" of {} total", congs.len())
                } else {
                    String::new()
                },
                if is_subdirectly_irreducible(&a, a.signature())? {
                    "yes"
                } else {
                    "no (trivial algebras count as not subdirectly irreducible)"
                }
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { algebra, partition } => {
            let a = resolve(&algebra)?;
            let p = Partition::parse(&partition, &a)?;
            let q = quotient(&a, &p, a.signature())?;
            print!("{}", to_text(&q));
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { left, right } => {
            let l = resolve(&left)?;
            let r = resolve(&right)?;
            print!("{}", to_text(&direct_product(&l, &r)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Osum { lower, upper } => {
            let l = resolve(&lower)?;
            let u = resolve(&upper)?;
            print!(
                "{}",
                to_text(&ordinal_sum(&l.lattice_reduct(), &u.lattice_reduct()))
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Symext { lower, middle } => {
            let l = resolve(&lower)?;
            let k = resolve(&middle)?;
            let s = symmetric_extension(&l.lattice_reduct(), &k.bi_reduct()?)?;
            print!("{}", to_text(&s));
            Ok(ExitCode::SUCCESS)
        }
        Command::Translate {
            algebra,
            to_modal,
            to_bz,
        } => {
            let a = resolve(&algebra)?;
            let out = match (to_modal, to_bz) {
                (true, false) => modal_of_bz(&a)?,
                (false, true) => bz_of_modal(&a)?,
                _ => {
                    return Err(Error::SignatureError(
                        "pass exactly one of --to-modal or --to-bz".into(),
                    ))
                }
            };
            print!("{}", to_text(&out));
            Ok(ExitCode::SUCCESS)
        }
        Command::Discriminator { algebra } => {
            let a = resolve(&algebra)?;
            let r = verify_discriminator(&a)?;
            let n = a.size();
            println!(
                "e(a,a) = 0 everywhere: {}",
                if r.e_diagonal_zero { "yes" } else { "no" }
            );
            println!(
                "e(a,b) = 1 off the diagonal: {}",
                if r.e_off_diagonal_one { "yes" } else { "no" }
            );
            println!("e table (rows x, columns y):");
            for x in 0..n {
                let row: Vec<&str> = (0..n).map(|y| a.label(r.e_table[x * n + y])).collect();
                println!("  {:<4} {}", a.label(x), row.join(" "));
            }
            println!("t table (t(x,y,z) rows indexed by x,y):");
            for x in 0..n {
                for y in 0..n {
                    let row: Vec<&str> = (0..n)
                        .map(|z| a.label(r.t_table[(x * n + y) * n + z]))
                        .collect();
                    println!("  t({},{},-) = {}", a.label(x), a.label(y), row.join(" "));
                }
            }
            if r.is_discriminator {
                println!("t realises the discriminator: yes");
                Ok(ExitCode::SUCCESS)
            } else {
                let (x, y, z) = r.first_failure.unwrap();
                println!(
                    "t realises the discriminator: no (first failure at t({},{},{}))",
                    a.label(x),
                    a.label(y),
                    a.label(z)
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::VerifyPaper { fact } => {
            let all = facts::all_facts();
            let selected: Vec<&facts::PaperFact> = match &fact {
                Some(id) => {
                    let found: Vec<&facts::PaperFact> =
                        all.iter().filter(|f| f.id == id.as_str()).collect();
                    if found.is_empty() {
                        return Err(Error::UnknownName(format!("fact {id}")));
                    }
                    found
                }
                None => all.iter().collect(),
            };
            let mut failures = 0;
            for f in &selected {
                match (f.run)() {
                    Ok(facts::FactOutcome::Pass(detail)) => {
                        println!("FACT {} PASS {} ({detail})", f.id, f.citation);
                    }
                    Ok(facts::FactOutcome::Fail(detail)) => {
                        failures += 1;
                        println!("FACT {} FAIL {} ({detail})", f.id, f.citation);
                    }
                    Err(e) => {
                        failures += 1;
                        println!("FACT {} FAIL {} (error: {e})", f.id, f.citation);
                    }
                }
            }
            println!(
                "{} fact(s), {} failed{}",
                selected.len(),
                failures,
                if failures > 0 {
                    "; failures record where the workbench refutes a published claim"
                } else {
                    ""
                }
            );
            Ok(if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

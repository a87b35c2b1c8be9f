//! The candidate discriminator pair on BZ-lattices:
//! `e(x,y) = (x~ & dia(y)) | (y~ & dia(x)) | (box(x) & box(y)~) | (box(y) & box(x)~)`
//! and `t(x,y,z) = (e(x,y) | z) & (e(x,y)' | x)`, plus the truncated-sum term
//! `(x | dia(y)) & (y | dia(x))`.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminatorReport {
    /// `t(a,b,c) = c` when `a = b` and `a` otherwise, on all triples.
    pub is_discriminator: bool,
    pub e_diagonal_zero: bool,
    pub e_off_diagonal_one: bool,
    /// n*n table of e, row-major.
    pub e_table: Vec<Elem>,
    /// n*n*n table of t, index (x*n + y)*n + z.
    pub t_table: Vec<Elem>,
    /// First triple where t misbehaves, if any.
    pub first_failure: Option<(Elem, Elem, Elem)>,
}

fn require_bz(algebra: &FiniteAlgebra) -> Result<()> {
    if !algebra.signature().has_brouwer() {
        return Err(Error::SignatureMismatch(
            "discriminator terms are spelled over the BZ signature".into(),
        ));
    }
    Ok(())
}

/// Evaluate the e/t pair everywhere and report whether t realises the
/// discriminator function.
pub fn verify_discriminator(algebra: &FiniteAlgebra) -> Result<DiscriminatorReport> {
    require_bz(algebra)?;
    let n = algebra.size();
    let bot = algebra.bottom_element();
    let top = algebra.top_element();
    let dia = |x: Elem| algebra.brouwer(algebra.brouwer(x));
    let boxop = |x: Elem| algebra.brouwer(algebra.kleene(x));
    let mut e_table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let part1 = algebra.meet(algebra.brouwer(x), dia(y));
            let part2 = algebra.meet(algebra.brouwer(y), dia(x));
            let part3 = algebra.meet(boxop(x), algebra.brouwer(boxop(y)));
            let part4 = algebra.meet(boxop(y), algebra.brouwer(boxop(x)));
            e_table[x * n + y] =
                algebra.join(algebra.join(part1, part2), algebra.join(part3, part4));
        }
    }
    let mut t_table = vec![0; n * n * n];
    let mut first_failure = None;
    for x in 0..n {
        for y in 0..n {
            let e = e_table[x * n + y];
            for z in 0..n {
                let t = algebra.meet(algebra.join(e, z), algebra.join(algebra.kleene(e), x));
                t_table[(x * n + y) * n + z] = t;
                let expected = if x == y { z } else { x };
                if t != expected && first_failure.is_none() {
                    first_failure = Some((x, y, z));
                }
            }
        }
    }
    let e_diagonal_zero = (0..n).all(|x| e_table[x * n + x] == bot);
    let e_off_diagonal_one = (0..n).all(|x| (0..n).all(|y| x == y || e_table[x * n + y] == top));
    Ok(DiscriminatorReport {
        is_discriminator: first_failure.is_none(),
        e_diagonal_zero,
        e_off_diagonal_one,
        e_table,
        t_table,
        first_failure,
    })
}

/// The n*n table of `(x | dia(y)) & (y | dia(x))`, row-major.
pub fn truncated_sum_table(algebra: &FiniteAlgebra) -> Result<Vec<Elem>> {
    require_bz(algebra)?;
    let n = algebra.size();
    let dia = |x: Elem| algebra.brouwer(algebra.brouwer(x));
    let mut table = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = algebra.meet(algebra.join(x, dia(y)), algebra.join(y, dia(x)));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::chain;

    #[test]
    fn d3_realises_the_discriminator() {
        let r = verify_discriminator(&chain(3)).unwrap();
        assert!(r.is_discriminator);
        assert!(r.e_diagonal_zero);
        assert!(r.e_off_diagonal_one);
    }

    #[test]
    fn d2_realises_the_discriminator() {
        let r = verify_discriminator(&chain(2)).unwrap();
        assert!(r.is_discriminator);
    }

    #[test]
    fn d4_does_not() {
        let d4 = chain(4);
        let r = verify_discriminator(&d4).unwrap();
        assert!(!r.is_discriminator);
        // e vanishes on the two middle elements
        let a = d4.element("a").unwrap();
        let b = d4.element("b").unwrap();
        assert_eq!(r.e_table[a * 4 + b], d4.bottom_element());
    }

    #[test]
    fn truncated_sum_on_d3_is_truncated_addition() {
        // with D3 read as {0, 1/2, 1}, the term table is min(1, x + y)
        let table = truncated_sum_table(&chain(3)).unwrap();
        for x in 0..3usize {
            for y in 0..3usize {
                assert_eq!(table[x * 3 + y], (x + y).min(2), "{x} {y}");
            }
        }
    }

    #[test]
    fn zero_is_neutral_below_top() {
        let d3 = chain(3);
        let table = truncated_sum_table(&d3).unwrap();
        for (x, &v) in table.iter().enumerate().take(3) {
            assert_eq!(v, x); // 0 (+) x = x
        }
        assert_eq!(table[2 * 3 + 2], 2); // 1 (+) 1 = 1
    }
}

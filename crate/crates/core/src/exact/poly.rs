//! Univariate integer polynomials of small degree and Sturm sequences.

use super::{sign_of_rat, Int, Rat, RatInterval};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer polynomial, coefficients ascending by degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn leading(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, One::is_one)
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from(c.clone());
        }
        acc
    }

    /// Interval extension of the polynomial via Horner on interval arithmetic.
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::from_rat(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&RatInterval::from_rat(Rat::from(c.clone())));
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &Int) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Remainder of self modulo a monic divisor.
    pub fn rem_monic(&self, divisor: &IntPoly) -> IntPoly {
        assert!(divisor.is_monic(), "rem_monic needs a monic divisor");
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let lead = rem.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = rem.len() - d;
            for i in 0..d {
                rem[shift + i] -= &lead * &divisor.coeffs[i];
            }
        }
        IntPoly::new(rem)
    }

    /// gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Square-free part p / gcd(p, p'), primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero());
        let g = gcd_poly(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        div_exact_rat(self, &g).primitive_part()
    }

    /// Cauchy root bound: every real root lies strictly inside (-b, b).
    pub fn cauchy_bound(&self) -> Rat {
        assert!(!self.is_zero());
        let lead = Rat::from(self.leading().abs());
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = Rat::from(c.abs()) / lead.clone();
            if q > m {
                m = q;
            }
        }
        m + Rat::one() + Rat::one()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{}x", a)?,
                _ if a.is_one() => write!(f, "x^{}", i)?,
                _ => write!(f, "{}x^{}", a, i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Primitive gcd of two integer polynomials (subresultant-free; degrees here
/// never exceed 3 so rational elimination is fine).
pub fn gcd_poly(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut p: Vec<Rat> = a.coeffs.iter().map(|c| Rat::from(c.clone())).collect();
    let mut q: Vec<Rat> = b.coeffs.iter().map(|c| Rat::from(c.clone())).collect();
    let trim = |v: &mut Vec<Rat>| {
        while v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
    };
    trim(&mut p);
    trim(&mut q);
    while !q.is_empty() {
        let r = rat_rem(&p, &q);
        p = q;
        q = r;
        trim(&mut q);
    }
    if p.is_empty() {
        return IntPoly::zero();
    }
    // clear denominators
    let mut den = Int::one();
    for c in &p {
        den = num_integer::lcm(den, c.denom().clone());
    }
    IntPoly::new(
        p.iter()
            .map(|c| (c * Rat::from(den.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
}

fn rat_rem(p: &[Rat], q: &[Rat]) -> Vec<Rat> {
    let mut rem = p.to_vec();
    let dq = q.len() - 1;
    let lq = q.last().unwrap();
    while rem.len() > dq {
        let lead = rem.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let factor = lead / lq.clone();
        let shift = rem.len() - dq;
        for i in 0..dq {
            rem[shift + i] -= &factor * &q[i];
        }
    }
    while rem.last().map_or(false, Zero::is_zero) {
        rem.pop();
    }
    rem
}

/// Divide a by b assuming exact divisibility over Q, returning integer result
/// after clearing denominators.
fn div_exact_rat(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut rem: Vec<Rat> = a.coeffs.iter().map(|c| Rat::from(c.clone())).collect();
    let db = b.degree().unwrap();
    let lb = Rat::from(b.leading());
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let lead = rem.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let factor = lead / lb.clone();
        let shift = rem.len() - db;
        quot[shift] = factor.clone();
        for i in 0..db {
            rem[shift + i] -= &factor * Rat::from(b.coeffs[i].clone());
        }
    }
    let mut den = Int::one();
    for c in &quot {
        den = num_integer::lcm(den, c.denom().clone());
    }
    IntPoly::new(
        quot.iter()
            .map(|c| (c * Rat::from(den.clone())).to_integer())
            .collect(),
    )
}

/// Sturm sequence of a square-free polynomial.
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            if seq[n - 1].degree() == Some(0) {
                break;
            }
            // negated primitive pseudo-remainder; positive scaling keeps the
            // sign variation count intact
            let r = neg_rem_primitive(&seq[n - 2], &seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        SturmSequence { seq }
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let s = sign_of_rat(&p.eval_rat(x));
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the open interval (a, b); endpoints
    /// must not be roots of the leading polynomial.
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        debug_assert!(a < b);
        debug_assert!(!self.seq[0].eval_rat(a).is_zero());
        debug_assert!(!self.seq[0].eval_rat(b).is_zero());
        self.variations(a) - self.variations(b)
    }
}

fn neg_rem_primitive(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let r = rat_rem(
        &a.coeffs.iter().map(|c| Rat::from(c.clone())).collect::<Vec<_>>(),
        &b.coeffs.iter().map(|c| Rat::from(c.clone())).collect::<Vec<_>>(),
    );
    if r.is_empty() {
        return IntPoly::zero();
    }
    let mut den = Int::one();
    for c in &r {
        den = num_integer::lcm(den, c.denom().clone());
    }
    IntPoly::new(
        r.iter()
            .map(|c| (c * Rat::from(den.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
    .neg()
}

/// True iff a degree-3 integer polynomial has no rational root; for cubics
/// this is equivalent to irreducibility over Q.
pub fn is_irreducible_cubic(p: &IntPoly) -> bool {
    assert_eq!(p.degree(), Some(3), "is_irreducible_cubic needs degree 3");
    if p.coeff(0).is_zero() {
        return false; // root 0
    }
    // Rational roots of p have the form r/lead after the substitution
    // y = lead * x, which turns p into a monic cubic with integer roots.
    let lead = p.leading();
    let monic = IntPoly::new(vec![
        p.coeff(0) * &lead * &lead,
        p.coeff(1) * &lead,
        p.coeff(2),
        Int::one(),
    ]);
    !has_integer_root(&monic)
}

fn has_integer_root(p: &IntPoly) -> bool {
    // Isolate real roots of the square-free part, shrink each isolating
    // interval below width 1 and test the at most one integer inside.
    let intervals = super::roots::isolate_real_roots(p);
    for iv in intervals {
        let narrowed = super::roots::refine(&iv, &Rat::new(Int::one(), Int::from(2)));
        let lo_ceil = narrowed.lo().ceil().to_integer();
        let hi_floor = narrowed.hi().floor().to_integer();
        let mut k = lo_ceil;
        while k <= hi_floor {
            if p.eval_int(&k).is_zero() {
                return true;
            }
            k += 1;
        }
    }
    false
}

/// Exact discriminant of a degree-3 polynomial.
pub fn discriminant_cubic(p: &IntPoly) -> Int {
    assert_eq!(p.degree(), Some(3), "discriminant_cubic needs degree 3");
    let (a, b, c, d) = (p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
    Int::from(18) * &a * &b * &c * &d - Int::from(4) * &b * &b * &b * &d
        + &b * &b * &c * &c
        - Int::from(4) * &a * &c * &c * &c
        - Int::from(27) * &a * &a * &d * &d
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn eval_and_rem() {
        let f = p(&[-1, 5, -6, 1]); // x^3 - 6x^2 + 5x - 1
        assert_eq!(f.eval_int(&int(0)), int(-1));
        assert_eq!(f.eval_int(&int(6)), int(29));
        let r = p(&[0, 0, 0, 1]).rem_monic(&f); // x^3 mod f = 6x^2 - 5x + 1
        assert_eq!(r, p(&[1, -5, 6]));
    }

    #[test]
    fn sturm_counts_roots_of_cubic() {
        let f = p(&[-1, 5, -6, 1]);
        let s = SturmSequence::new(&f);
        assert_eq!(s.count_roots(&rat(-10, 1), &rat(10, 1)), 3);
        assert_eq!(s.count_roots(&rat(0, 1), &rat(1, 1)), 2);
        assert_eq!(s.count_roots(&rat(1, 1), &rat(10, 1)), 1);
    }

    #[test]
    fn squarefree_part_of_cube() {
        let f = p(&[0, 0, 0, 1]); // x^3
        assert_eq!(f.squarefree_part(), p(&[0, 1]));
    }

    #[test]
    fn irreducibility_examples() {
        // rational-root oracle over divisors of the constant term agrees
        assert!(is_irreducible_cubic(&p(&[-1, 5, -6, 1])));
        assert!(!is_irreducible_cubic(&p(&[-1, 0, 0, 1]))); // x^3 - 1
        assert!(is_irreducible_cubic(&p(&[-1, -4, 11, 1])));
        assert!(!is_irreducible_cubic(&p(&[0, 1, 0, 1]))); // x(x^2+1)
        assert!(!is_irreducible_cubic(&p(&[2, 1, -2, -1]))); // (x-1)(x+1)(-x-2)... has root 1
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant_cubic(&p(&[1, -3, 0, 1])), int(81));
        assert_eq!(discriminant_cubic(&p(&[0, 0, 0, 1])), int(0));
        // depressed-cubic closed form -4p^3 - 27q^2 as oracle
        let check = |pp: i64, q: i64| {
            let f = IntPoly::from_i64(&[q, pp, 0, 1]);
            assert_eq!(
                discriminant_cubic(&f),
                int(-4) * int(pp).pow(3) - int(27) * int(q).pow(2)
            );
        };
        check(-3, 1);
        check(5, -7);
        check(0, 2);
        let golden = p(&[-1, 5, -6, 1]);
        assert!(discriminant_cubic(&golden) > int(0));
        assert_eq!(discriminant_cubic(&golden), int(49));
    }
}

//! Rational interval arithmetic with certified enclosures for the natural
//! logarithm, plus minimal-denominator rational reconstruction.

use super::{Int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::sync::OnceLock;

/// Closed interval with exact rational endpoints, lo <= hi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn from_rat(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn from_int(x: i64) -> Self {
        Self::from_rat(Rat::from_integer(Int::from(x)))
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if it is determined by the enclosure, else None.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let candidates = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_negative() {
            RatInterval {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            RatInterval {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Self {
        assert!(!self.contains_zero(), "reciprocal of interval through zero");
        RatInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RatInterval {
                lo: Rat::zero(),
                hi: self.lo.abs().max(self.hi.abs()),
            }
        }
    }

    pub fn hull(&self, o: &Self) -> Self {
        RatInterval {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }

    /// Certified comparison; None when the enclosures overlap.
    pub fn try_cmp(&self, o: &Self) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && o.lo == o.hi && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Enclosure of ln over a positive interval, with absolute endpoint error
    /// at most 2^-prec_bits.
    pub fn ln(&self, prec_bits: u32) -> Self {
        assert!(self.lo.is_positive(), "ln of non-positive interval");
        RatInterval {
            lo: ln_lower(&self.lo, prec_bits),
            hi: ln_upper(&self.hi, prec_bits),
        }
    }

    /// Outward-rounded f64 endpoints (lower bound rounded down, upper up).
    pub fn to_f64_outward(&self) -> (f64, f64) {
        (f64_below(&self.lo), f64_above(&self.hi))
    }
}

fn f64_below(x: &Rat) -> f64 {
    let v = x.to_f64().unwrap_or(f64::NEG_INFINITY);
    // nearest rounding is within 1 ulp; back off 4 to be safe
    step_ulps(v, -4)
}

fn f64_above(x: &Rat) -> f64 {
    let v = x.to_f64().unwrap_or(f64::INFINITY);
    step_ulps(v, 4)
}

fn step_ulps(v: f64, n: i64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    if v == 0.0 {
        return if n >= 0 { f64::MIN_POSITIVE * 4.0 } else { -f64::MIN_POSITIVE * 4.0 };
    }
    let bits = v.to_bits() as i64;
    let stepped = if (v > 0.0) == (n > 0) { bits + n.abs() } else { bits - n.abs() };
    f64::from_bits(stepped as u64)
}

// --- certified natural logarithm -------------------------------------------

/// atanh series bound: for 0 <= z < 1,
///   2 * sum_{j<=J} z^(2j+1)/(2j+1)  <=  ln((1+z)/(1-z))
/// with tail at most 2 z^(2J+3) / ((2J+3)(1-z^2)).
fn atanh_times_two(z: &Rat, prec_bits: u32) -> (Rat, Rat) {
    debug_assert!(!z.is_negative() && z < &Rat::one());
    if z.is_zero() {
        return (Rat::zero(), Rat::zero());
    }
    let z2 = z * z;
    let eps = Rat::new(Int::one(), Int::one() << prec_bits);
    let mut term = z.clone(); // z^(2j+1)
    let mut sum = Rat::zero();
    let mut j: u64 = 0;
    loop {
        sum += &term / Rat::from_integer(Int::from(2 * j + 1));
        term *= &z2;
        j += 1;
        // tail bound (with the 2x factor applied at the end)
        let tail = &term / (Rat::from_integer(Int::from(2 * j + 1)) * (Rat::one() - &z2));
        if &tail * Rat::from_integer(2.into()) < eps {
            let lo = &sum * Rat::from_integer(2.into());
            let hi = lo.clone() + tail * Rat::from_integer(2.into());
            return (lo, hi);
        }
        assert!(j < 10_000, "atanh series failed to converge");
    }
}

fn ln2_interval(prec_bits: u32) -> RatInterval {
    static CACHE: OnceLock<RatInterval> = OnceLock::new();
    let cached = CACHE.get_or_init(|| {
        let (lo, hi) = atanh_times_two(&Rat::new(Int::one(), Int::from(3)), 1400);
        RatInterval::new(lo, hi)
    });
    if prec_bits <= 1400 {
        cached.clone()
    } else {
        let (lo, hi) = atanh_times_two(&Rat::new(Int::one(), Int::from(3)), prec_bits);
        RatInterval::new(lo, hi)
    }
}

/// Enclosure of ln(q) for positive rational q with endpoint error < 2^-prec.
pub fn ln_interval(q: &Rat, prec_bits: u32) -> RatInterval {
    assert!(q.is_positive(), "ln of non-positive rational");
    // range reduce: q = 2^k * m with m in [1, 2)
    let mut k: i64 = 0;
    let mut m = q.clone();
    let two = Rat::from_integer(2.into());
    while m >= two {
        m /= &two;
        k += 1;
    }
    while m < Rat::one() {
        m *= &two;
        k -= 1;
    }
    // ln m = 2 atanh((m-1)/(m+1)), argument in [0, 1/3)
    let z = (&m - Rat::one()) / (&m + Rat::one());
    let (lo_m, hi_m) = atanh_times_two(&z, prec_bits + 2);
    let ln2 = ln2_interval(prec_bits + 8);
    let k_rat = Rat::from_integer(Int::from(k));
    let scaled = ln2.scale(&k_rat);
    RatInterval::new(&scaled.lo + lo_m, &scaled.hi + hi_m)
}

fn ln_lower(q: &Rat, prec_bits: u32) -> Rat {
    ln_interval(q, prec_bits).lo
}

fn ln_upper(q: &Rat, prec_bits: u32) -> Rat {
    ln_interval(q, prec_bits).hi
}

/// Rigorous upper bound for exp(x), coarse but cheap: exp(x) <= 2^ceil(x/ln2_lo) for x > 0.
pub struct ExpBound;

impl ExpBound {
    pub fn upper(x: &Rat) -> Rat {
        if !x.is_positive() {
            return Rat::one();
        }
        let ln2 = ln2_interval(64);
        let n = (x / &ln2.lo).ceil().to_integer();
        let n_u32 = n.to_u32().expect("exp bound exponent too large");
        Rat::from_integer(Int::one() << n_u32)
    }
}

// --- minimal-denominator rational in an interval ----------------------------

/// The unique rational with smallest denominator (ties broken toward smaller
/// numerator magnitude) in the closed interval [lo, hi].
pub fn simplest_rational_in(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi);
    if lo == hi {
        return lo.clone();
    }
    if lo.is_negative() && !hi.is_negative() {
        return Rat::zero();
    }
    if !lo.is_positive() {
        // reflect to the positive axis
        return -simplest_positive(&-hi.clone(), &-lo.clone());
    }
    simplest_positive(lo, hi)
}

/// Stern-Brocot style recursion for 0 < lo <= hi.
fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    let ceil_lo = lo.ceil();
    if &ceil_lo <= hi {
        return ceil_lo;
    }
    // floor(lo) == floor(hi), both fractional parts in (0, 1)
    let fl = lo.floor();
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner = simplest_positive(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn interval_ops() {
        let a = RatInterval::new(rat(1, 2), rat(3, 4));
        let b = RatInterval::new(rat(-1, 3), rat(1, 5));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-1, 4));
        assert_eq!(p.hi, rat(3, 20));
        assert!(p.contains_zero());
        assert_eq!(a.sign(), Some(1));
        assert_eq!(a.neg().sign(), Some(-1));
    }

    #[test]
    fn ln_two_enclosure() {
        let iv = ln_interval(&rat(2, 1), 100);
        // ln 2 = 0.693147180559945...
        assert!(iv.lo < rat(693147180559946, 1_000_000_000_000_000));
        assert!(iv.hi > rat(693147180559945, 1_000_000_000_000_000));
        assert!(iv.width() < rat(1, 1 << 30));
    }

    #[test]
    fn ln_product_rule_bracket() {
        let a = ln_interval(&rat(3, 1), 80);
        let b = ln_interval(&rat(5, 1), 80);
        let ab = ln_interval(&rat(15, 1), 80);
        let sum = a.add(&b);
        assert!(sum.lo <= ab.hi && ab.lo <= sum.hi);
    }

    #[test]
    fn ln_monotone_and_signs() {
        assert!(ln_interval(&rat(1, 2), 64).hi.is_negative());
        let at_one = ln_interval(&rat(1, 1), 64);
        assert!(!at_one.lo.is_positive() && !at_one.hi.is_negative());
        assert!(ln_interval(&rat(7, 2), 64).lo.is_positive());
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_rational_in(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_rational_in(&rat(2, 7), &rat(3, 7)), rat(1, 3));
        assert_eq!(simplest_rational_in(&rat(-1, 4), &rat(1, 9)), rat(0, 1));
        assert_eq!(simplest_rational_in(&rat(5, 2), &rat(7, 2)), rat(3, 1));
        assert_eq!(simplest_rational_in(&rat(-5, 7), &rat(-2, 3)), rat(-2, 3));
        assert_eq!(simplest_rational_in(&rat(-12, 17), &rat(-7, 10)), rat(-7, 10));
        // exact recovery: x = 22/7 from a tight bracket
        let x = rat(22, 7);
        let eps = rat(1, 1000);
        assert_eq!(simplest_rational_in(&(&x - &eps), &(&x + &eps)), x);
    }

    #[test]
    fn exp_upper_bound() {
        let b = ExpBound::upper(&rat(3, 1));
        assert!(b >= rat(20, 1)); // e^3 ~ 20.08
        assert!(ExpBound::upper(&rat(-1, 1)) == rat(1, 1));
    }

    #[test]
    fn outward_f64() {
        let x = RatInterval::new(rat(1, 3), rat(1, 3));
        let (lo, hi) = x.to_f64_outward();
        assert!(lo < 1.0 / 3.0 && hi > 1.0 / 3.0);
    }
}

//! Exact integer and rational arithmetic: cubic polynomials, certified real
//! root isolation, and rational interval arithmetic.
//!
//! Every decision made by the rest of the crate routes through the types in
//! this module; there is no floating point on any decision path.

mod interval;
mod poly;
mod roots;

pub use interval::{simplest_rational_in, ExpBound, RatInterval};
pub use poly::IntPoly;
pub use roots::{isolate_real_roots, refine, RootInterval};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num-rational`).
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Sign of an exact quantity: -1, 0 or +1.
pub fn sign_of(x: &Int) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn sign_of_rat(x: &Rat) -> i8 {
    sign_of(x.numer())
}

/// Floor of the k-th root of a non-negative integer.
pub fn int_kth_root_floor(n: &Int, k: u32) -> Int {
    assert!(!n.is_negative(), "kth root of negative integer");
    assert!(k >= 1);
    if n.is_zero() || n.is_one() {
        return n.clone();
    }
    if k == 1 {
        return n.clone();
    }
    // binary search on [1, 2^(ceil(bits/k)+1)]
    let bits = n.bits();
    let mut hi = Int::one() << (bits / u64::from(k) + 2);
    let mut lo = Int::one();
    while &lo < &hi {
        let mid: Int = (&lo + &hi + 1u32) >> 1;
        if mid.pow(k) <= *n {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    lo
}

/// Smallest rational of the form m/2^s that is >= the positive k-th root of r.
pub fn rat_kth_root_upper(r: &Rat, k: u32, scale_bits: u32) -> Rat {
    assert!(r.is_positive());
    let scale = Int::one() << (scale_bits * k);
    // r <= ceil(r * 2^(k*s)) / 2^(k*s); kth root <= (floor_root + 1) / 2^s
    let scaled = (r * Rat::from(scale)).ceil().to_integer();
    let root = int_kth_root_floor(&scaled, k) + 1u32;
    Rat::new(root, Int::one() << scale_bits)
}

/// Largest rational of the form m/2^s that is <= the positive k-th root of r.
pub fn rat_kth_root_lower(r: &Rat, k: u32, scale_bits: u32) -> Rat {
    assert!(r.is_positive());
    let scale = Int::one() << (scale_bits * k);
    let scaled = (r * Rat::from(scale)).floor().to_integer();
    let root = int_kth_root_floor(&scaled, k);
    Rat::new(root, Int::one() << scale_bits)
}

//! Certified real-root isolation for small-degree integer polynomials by
//! Sturm sequences and exact bisection.

use super::poly::SturmSequence;
use super::{sign_of_rat, IntPoly, Rat};
use num_traits::Zero;

/// An interval (lo, hi) with rational endpoints containing exactly one real
/// root of `poly`; the endpoints themselves are never roots.
#[derive(Clone, Debug)]
pub struct RootInterval {
    poly: IntPoly,
    lo: Rat,
    hi: Rat,
    sign_lo: i8,
    sign_hi: i8,
}

impl RootInterval {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
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

    pub fn sign_lo(&self) -> i8 {
        self.sign_lo
    }

    pub fn sign_hi(&self) -> i8 {
        self.sign_hi
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn to_interval(&self) -> super::RatInterval {
        super::RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    fn checked(poly: &IntPoly, lo: Rat, hi: Rat) -> RootInterval {
        let sign_lo = sign_of_rat(&poly.eval_rat(&lo));
        let sign_hi = sign_of_rat(&poly.eval_rat(&hi));
        debug_assert!(sign_lo != 0 && sign_hi != 0);
        RootInterval {
            poly: poly.clone(),
            lo,
            hi,
            sign_lo,
            sign_hi,
        }
    }
}

/// Isolating intervals, sorted ascending, one per distinct real root.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    assert!(p.degree().unwrap() <= 3, "degree must be at most 3");
    if p.degree() == Some(0) {
        return vec![];
    }
    let sf = p.squarefree_part();
    let sturm = SturmSequence::new(&sf);
    let bound = sf.cauchy_bound();
    let lo = -bound.clone();
    let hi = bound;
    let mut out = Vec::new();
    split(&sf, &sturm, lo, hi, &mut out);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    // intervals reference the square-free part: same distinct roots, and
    // bisection in refine stays sign-based even when p has repeated roots
    out
}

fn split(sf: &IntPoly, sturm: &SturmSequence, lo: Rat, hi: Rat, out: &mut Vec<RootInterval>) {
    let n = sturm.count_roots(&lo, &hi);
    match n {
        0 => {}
        1 => out.push(RootInterval::checked(sf, lo, hi)),
        _ => {
            let mid = (&lo + &hi) / Rat::from_integer(2.into());
            if sf.eval_rat(&mid).is_zero() {
                // rational root exactly at the midpoint: carve out a
                // sub-interval isolating it, then recurse on both sides
                let mut delta = (&hi - &lo) / Rat::from_integer(8.into());
                loop {
                    let a = &mid - &delta;
                    let b = &mid + &delta;
                    if !sf.eval_rat(&a).is_zero()
                        && !sf.eval_rat(&b).is_zero()
                        && sturm.count_roots(&a, &b) == 1
                    {
                        out.push(RootInterval::checked(sf, a.clone(), b.clone()));
                        split(sf, sturm, lo, a, out);
                        split(sf, sturm, b, hi, out);
                        return;
                    }
                    delta /= Rat::from_integer(2.into());
                }
            }
            split(sf, sturm, lo, mid.clone(), out);
            split(sf, sturm, mid, hi, out);
        }
    }
}

/// Shrink an isolating interval below `width` by exact bisection. The same
/// root stays inside and the endpoints stay off the root set.
pub fn refine(r: &RootInterval, width: &Rat) -> RootInterval {
    assert!(width > &Rat::zero(), "width must be positive");
    let mut lo = r.lo.clone();
    let mut hi = r.hi.clone();
    let mut sign_lo = r.sign_lo;
    let mut sign_hi = r.sign_hi;
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / Rat::from_integer(2.into());
        let s = sign_of_rat(&r.poly.eval_rat(&mid));
        if s == 0 {
            // the isolated root is exactly mid; nest intervals around it
            let mut delta: Rat = (&hi - &lo) / Rat::from_integer(8.into());
            let quarter_width = width / Rat::from_integer(4.into());
            if delta > quarter_width {
                delta = quarter_width;
            }
            loop {
                let a = &mid - &delta;
                let b = &mid + &delta;
                let sa = sign_of_rat(&r.poly.eval_rat(&a));
                let sb = sign_of_rat(&r.poly.eval_rat(&b));
                if sa != 0 && sb != 0 {
                    lo = a;
                    hi = b;
                    sign_lo = sa;
                    sign_hi = sb;
                    break;
                }
                delta /= Rat::from_integer(2.into());
            }
            break;
        } else if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootInterval {
        poly: r.poly.clone(),
        lo,
        hi,
        sign_lo,
        sign_hi,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;
    use num_traits::One;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn golden_cubic_three_roots() {
        // char poly of the generalized golden ratio operator; roots near
        // 0.31, 0.64, 5.05 (bisection oracle below pins the largest one)
        let f = p(&[-1, 5, -6, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        let big = refine(&roots[2], &rat(1, 1_000_000));
        assert!(big.lo() > &rat(50489, 10000));
        assert!(big.hi() < &rat(50490, 10000));
        let mid = refine(&roots[1], &rat(1, 100));
        assert!(mid.lo() > &rat(63, 100) && mid.hi() < &rat(66, 100));
        let small = refine(&roots[0], &rat(1, 100));
        assert!(small.lo() > &rat(30, 100) && small.hi() < &rat(32, 100));
    }

    #[test]
    fn single_real_root() {
        let f = p(&[-1, 0, 0, 1]); // x^3 - 1
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 1);
        assert!(roots[0].lo() < &rat(1, 1) && roots[0].hi() > &rat(1, 1));
    }

    #[test]
    fn section_four_cubic() {
        let f = p(&[-1, -4, 11, 1]); // x^3 + 11x^2 - 4x - 1
        assert_eq!(isolate_real_roots(&f).len(), 3);
    }

    #[test]
    fn refine_sqrt2() {
        let f = p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f);
        let pos = roots
            .iter()
            .find(|r| r.hi() > &Rat::zero())
            .unwrap();
        let narrow = refine(pos, &rat(1, 100));
        assert!(narrow.lo() > &rat(141, 100));
        assert!(narrow.hi() < &rat(142, 100));
        // idempotence when already narrow enough
        let again = refine(&narrow, &rat(1, 10));
        assert_eq!(again.lo(), narrow.lo());
        assert_eq!(again.hi(), narrow.hi());
    }

    #[test]
    fn rational_root_at_bisection_point() {
        // roots -1, 0, 1: bisection hits 0 exactly
        let f = p(&[0, -1, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            let n = refine(r, &rat(1, 64));
            assert!(n.width() <= rat(1, 64));
        }
    }

    #[test]
    fn triple_root_counts_once() {
        let f = p(&[0, 0, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 1);
        assert!(roots[0].lo() < &Rat::zero() && roots[0].hi() > &Rat::zero());
    }

    #[test]
    fn refine_keeps_the_root() {
        let f = p(&[-1, 5, -6, 1]);
        for r in isolate_real_roots(&f) {
            let n = refine(&r, &rat(1, 1 << 20));
            assert!(n.lo() >= r.lo() && n.hi() <= r.hi());
            assert_ne!(
                sign_of_rat(&f.eval_rat(n.lo())),
                sign_of_rat(&f.eval_rat(n.hi()))
            );
            assert!(n.width() <= rat(1, 1 << 20));
        }
        let _ = int(0);
        let _ = Rat::one();
    }
}

//! Eigen structure of a hyperbolic operator in exact form: the three
//! invariant hyperplanes as covectors with entries in the cubic field,
//! orthant membership by certified sign evaluation, and the integer norm
//! form cut out by the product of the three eigen linear forms.

use crate::error::KleinError;
use crate::exact::{
    isolate_real_roots, refine, IntPoly, Rat, RatInterval, RootInterval,
};
use crate::exact::poly::{discriminant_cubic, is_irreducible_cubic};
use crate::exact::Int;
use crate::lin::{char_poly, Mat3, Vec3};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Open orthant of the eigen-hyperplane arrangement, as the sign vector of
/// the three ordered eigen linear forms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orthant(pub [i8; 3]);

impl Orthant {
    pub fn all() -> [Orthant; 8] {
        let mut out = [Orthant([1, 1, 1]); 8];
        for i in 0..8 {
            out[i] = Orthant([
                if i & 4 == 0 { 1 } else { -1 },
                if i & 2 == 0 { 1 } else { -1 },
                if i & 1 == 0 { 1 } else { -1 },
            ]);
        }
        out
    }

    /// One representative per antipodal pair, first sign positive.
    pub fn representatives() -> [Orthant; 4] {
        [
            Orthant([1, 1, 1]),
            Orthant([1, 1, -1]),
            Orthant([1, -1, 1]),
            Orthant([1, -1, -1]),
        ]
    }

    pub fn opposite(&self) -> Orthant {
        Orthant([-self.0[0], -self.0[1], -self.0[2]])
    }

    pub fn parse(s: &str) -> Result<Orthant, String> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 3 || !chars.iter().all(|&c| c == '+' || c == '-') {
            return Err(format!("orthant must be three signs like '+-+', got '{}'", s));
        }
        Ok(Orthant([
            if chars[0] == '+' { 1 } else { -1 },
            if chars[1] == '+' { 1 } else { -1 },
            if chars[2] == '+' { 1 } else { -1 },
        ]))
    }
}

impl fmt::Debug for Orthant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl fmt::Display for Orthant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exact eigen structure of a hyperbolic operator: isolated real eigenvalues
/// in ascending order and an eigen-covector family. The covector for the
/// i-th eigenvalue is the first row of adj(xI - A) evaluated at that root;
/// its entries are integer polynomials of degree at most 2 in the root.
#[derive(Clone)]
pub struct EigenData {
    operator: Mat3,
    poly: IntPoly,
    roots: [RootInterval; 3],
    covector: [IntPoly; 3],
}

impl EigenData {
    pub fn operator(&self) -> &Mat3 {
        &self.operator
    }

    pub fn char_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn roots(&self) -> &[RootInterval; 3] {
        &self.roots
    }

    pub fn covector(&self) -> &[IntPoly; 3] {
        &self.covector
    }

    /// New value with every root interval at most `width` wide.
    pub fn refined(&self, width: &Rat) -> EigenData {
        let mut out = self.clone();
        for r in &mut out.roots {
            *r = refine(r, width);
        }
        out
    }

    /// Exact sign of the i-th eigen linear form at an integer vector.
    pub fn sign_of_form(&self, i: usize, v: &Vec3) -> i8 {
        assert!(!v.is_zero(), "sign_of_form on the zero vector");
        let q = self.form_poly(v);
        self.sign_at_root(i, &q)
    }

    /// The polynomial x -> l(x)(v) whose value at the i-th root is the i-th
    /// form at v.
    pub fn form_poly(&self, v: &Vec3) -> IntPoly {
        let mut q = IntPoly::zero();
        for j in 0..3 {
            q = q.add(&self.covector[j].scale(&v.0[j]));
        }
        q
    }

    /// Exact sign of q at the i-th eigenvalue; q must not be divisible by
    /// the characteristic polynomial (for deg q < 3: q nonzero suffices).
    pub fn sign_at_root(&self, i: usize, q: &IntPoly) -> i8 {
        assert!(
            !q.is_zero(),
            "zero polynomial has no certified sign at a root"
        );
        let mut interval = self.roots[i].clone();
        let mut width = interval.width();
        for _ in 0..4096 {
            let val = q.eval_interval(&interval.to_interval());
            if let Some(s) = val.sign() {
                if s != 0 {
                    return s;
                }
            }
            width = width / Rat::from_integer(4.into());
            interval = refine(&interval, &width);
        }
        unreachable!("sign evaluation cannot terminate only on a root, which is excluded by irreducibility");
    }

    /// Interval enclosure of q at the i-th eigenvalue, refining the root until
    /// the result is narrower than `width`.
    pub fn eval_at_root(&self, i: usize, q: &IntPoly, width: &Rat) -> RatInterval {
        let mut interval = self.roots[i].clone();
        let mut target = interval.width();
        loop {
            let val = q.eval_interval(&interval.to_interval());
            if &val.width() <= width {
                return val;
            }
            target = target / Rat::from_integer(8.into());
            interval = refine(&interval, &target);
        }
    }

    pub fn orthant_of(&self, v: &Vec3) -> Orthant {
        assert!(!v.is_zero(), "orthant_of the zero vector");
        Orthant([
            self.sign_of_form(0, v),
            self.sign_of_form(1, v),
            self.sign_of_form(2, v),
        ])
    }

    /// True iff v lies in the closure of the given orthant; for nonzero
    /// integer vectors the forms never vanish, so this equals sign match.
    pub fn in_orthant(&self, orthant: Orthant, v: &Vec3) -> bool {
        self.orthant_of(v) == orthant
    }
}

impl fmt::Debug for EigenData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EigenData({:?}, p = {})", self.operator, self.poly)
    }
}

/// Checked construction of the eigen structure.
pub fn eigen_structure(a: &Mat3) -> Result<EigenData, KleinError> {
    let p = char_poly(a);
    if !is_irreducible_cubic(&p) {
        return Err(KleinError::NotHyperbolic(format!(
            "characteristic polynomial {} is reducible over Q",
            p
        )));
    }
    if !discriminant_cubic(&p).is_positive() {
        return Err(KleinError::NotHyperbolic(format!(
            "characteristic polynomial {} does not have three distinct real roots",
            p
        )));
    }
    let isolated = isolate_real_roots(&p);
    assert_eq!(isolated.len(), 3, "positive discriminant forces three real roots");
    let narrow = Rat::new(Int::one(), Int::one() << 40);
    let mut roots_iter = isolated.into_iter().map(|r| refine(&r, &narrow));
    let roots = [
        roots_iter.next().unwrap(),
        roots_iter.next().unwrap(),
        roots_iter.next().unwrap(),
    ];

    // first row of adj(xI - A); entries are integer polynomials in x
    let x = IntPoly::from_i64(&[0, 1]);
    let entry = |i: usize, j: usize| -> IntPoly {
        let diag = if i == j { x.clone() } else { IntPoly::zero() };
        diag.sub(&IntPoly::new(vec![a.0[i][j].clone()]))
    };
    let two_by_two = |r1: usize, c1: usize, r2: usize, c2: usize| {
        entry(r1, c1)
            .mul(&entry(r2, c2))
            .sub(&entry(r1, c2).mul(&entry(r2, c1)))
    };
    let covector = [
        two_by_two(1, 1, 2, 2),
        two_by_two(0, 1, 2, 2).neg(),
        two_by_two(0, 1, 1, 2),
    ];

    // eigen identity: cov . A = x . cov - p e_0, exactly
    for j in 0..3 {
        let mut lhs = IntPoly::zero();
        for k in 0..3 {
            lhs = lhs.add(&covector[k].scale(&a.0[k][j]));
        }
        let mut rhs = covector[j].mul(&x);
        if j == 0 {
            rhs = rhs.sub(&p);
        }
        assert_eq!(lhs, rhs, "eigen covector identity failed");
    }
    assert!(covector.iter().any(|c| !c.is_zero()));

    Ok(EigenData {
        operator: a.clone(),
        poly: p,
        roots,
        covector,
    })
}

// --- ternary cubic forms -----------------------------------------------------

/// Integer polynomial in three variables, sparse representation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TernaryForm {
    terms: BTreeMap<[u8; 3], Int>,
}

impl TernaryForm {
    pub fn zero() -> Self {
        TernaryForm::default()
    }

    pub fn constant(c: Int) -> Self {
        let mut t = TernaryForm::zero();
        t.add_term([0, 0, 0], c);
        t
    }

    pub fn variable(i: usize, coeff: Int) -> Self {
        let mut exps = [0u8; 3];
        exps[i] = 1;
        let mut t = TernaryForm::zero();
        t.add_term(exps, coeff);
        t
    }

    pub fn add_term(&mut self, exps: [u8; 3], c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &TernaryForm) -> TernaryForm {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &TernaryForm) -> TernaryForm {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(
                    [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]],
                    c1 * c2,
                );
            }
        }
        out
    }

    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    pub fn div_exact(&self, d: &Int) -> TernaryForm {
        let mut out = TernaryForm::zero();
        for (e, c) in &self.terms {
            debug_assert!((c % d).is_zero());
            out.add_term(*e, c / d);
        }
        out
    }

    pub fn eval(&self, v: &Vec3) -> Int {
        let mut acc = Int::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &v.0[i];
                }
            }
            acc += term;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 3], &Int)> {
        self.terms.iter()
    }

    /// Pull back by an integer matrix: (W* f)(v) = f(W v).
    pub fn substitute(&self, w: &Mat3) -> TernaryForm {
        let images: Vec<TernaryForm> = (0..3)
            .map(|i| {
                let mut lin = TernaryForm::zero();
                for j in 0..3 {
                    lin.add_term(
                        {
                            let mut e = [0u8; 3];
                            e[j] = 1;
                            e
                        },
                        w.0[i][j].clone(),
                    );
                }
                lin
            })
            .collect();
        let mut out = TernaryForm::zero();
        for (e, c) in &self.terms {
            let mut term = TernaryForm::constant(c.clone());
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }
}

/// The primitive integer cubic form proportional to the product of the three
/// eigen linear forms. Its sign at v equals the product of the three form
/// signs (the divided-out content is positive), and it vanishes on no
/// nonzero integer vector.
#[derive(Clone, Debug)]
pub struct NormForm {
    pub form: TernaryForm,
    /// Positive content divided out of the resultant-expanded product, so
    /// that product(forms) = content * form.
    pub content: Int,
    fast: Option<FastForm>,
}

impl NormForm {
    pub fn eval(&self, v: &Vec3) -> Int {
        if let Some(fast) = &self.fast {
            if let Some(r) = fast.eval(v) {
                return r;
            }
        }
        self.form.eval(v)
    }
}

/// i128 fast path for the frequent |f(v)| <= B filter.
#[derive(Clone, Debug)]
struct FastForm {
    terms: Vec<([u8; 3], i128)>,
    /// Inputs with max |coordinate| at or below this bound cannot overflow.
    safe_abs: i128,
}

impl FastForm {
    fn build(form: &TernaryForm) -> Option<FastForm> {
        let mut terms = Vec::new();
        let mut max_coeff: i128 = 0;
        for (e, c) in form.terms() {
            let c: i128 = c.try_into().ok()?;
            max_coeff = max_coeff.max(c.abs());
            terms.push((*e, c));
        }
        let n_terms = terms.len().max(1) as i128;
        // |f(v)| <= n * maxc * K^3; keep n * maxc * K^3 < i128::MAX / 4
        let budget = i128::MAX / 4 / n_terms / max_coeff.max(1);
        let safe_abs = crate::exact::int_kth_root_floor(&Int::from(budget), 3)
            .try_into()
            .unwrap_or(i128::MAX);
        Some(FastForm { terms, safe_abs })
    }

    fn eval(&self, v: &Vec3) -> Option<Int> {
        let xs: [i128; 3] = [
            (&v.0[0]).try_into().ok()?,
            (&v.0[1]).try_into().ok()?,
            (&v.0[2]).try_into().ok()?,
        ];
        if xs.iter().any(|x| x.abs() > self.safe_abs) {
            return None;
        }
        let mut acc: i128 = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t *= xs[i];
                }
            }
            acc += t;
        }
        Some(Int::from(acc))
    }
}

/// Expand the product of the three eigen forms into a primitive integer
/// ternary cubic via the Sylvester resultant of the characteristic
/// polynomial and the symbolic form polynomial.
pub fn norm_form(e: &EigenData) -> NormForm {
    let p = e.char_poly();
    // q_v(x) = sum_j cov_j(x) v_j has x-degree coefficients that are linear
    // forms in v
    let q_coeff = |k: usize| -> TernaryForm {
        let mut lin = TernaryForm::zero();
        for j in 0..3 {
            let c = e.covector()[j].coeff(k);
            if !c.is_zero() {
                lin.add_term(
                    {
                        let mut exps = [0u8; 3];
                        exps[j] = 1;
                        exps
                    },
                    c,
                );
            }
        }
        lin
    };
    let pc = |k: usize| TernaryForm::constant(p.coeff(k));
    let z = TernaryForm::zero;
    // Sylvester matrix of (p, q), deg 3 and 2, descending coefficients
    let rows: [[TernaryForm; 5]; 5] = [
        [pc(3), pc(2), pc(1), pc(0), z()],
        [z(), pc(3), pc(2), pc(1), pc(0)],
        [q_coeff(2), q_coeff(1), q_coeff(0), z(), z()],
        [z(), q_coeff(2), q_coeff(1), q_coeff(0), z()],
        [z(), z(), q_coeff(2), q_coeff(1), q_coeff(0)],
    ];
    let raw = det5(&rows);
    let content = raw.content();
    assert!(content.is_positive(), "norm form must be nonzero");
    let form = raw.div_exact(&content);
    let fast = FastForm::build(&form);
    NormForm { form, content, fast }
}

fn det5(m: &[[TernaryForm; 5]; 5]) -> TernaryForm {
    fn go(m: &[[TernaryForm; 5]; 5], rows: &[usize], cols: &[usize]) -> TernaryForm {
        if rows.len() == 1 {
            return m[rows[0]][cols[0]].clone();
        }
        let mut acc = TernaryForm::zero();
        let r = rows[0];
        let rest: Vec<usize> = rows[1..].to_vec();
        for (k, &c) in cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&x| x != c)
                .collect();
            let minor = go(m, &rest, &sub_cols);
            let term = m[r][c].mul(&minor);
            if k % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }
    go(m, &[0, 1, 2, 3, 4], &[0, 1, 2, 3, 4])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn golden() -> Mat3 {
        Mat3::from_rows([[1, 1, 1], [1, 2, 2], [1, 2, 3]])
    }

    #[test]
    fn eigen_structure_of_golden_operator() {
        let e = eigen_structure(&golden()).unwrap();
        // all three roots positive (sign of the isolating interval endpoints)
        for r in e.roots() {
            let tight = refine(r, &rat(1, 1000));
            assert!(tight.lo() > &rat(0, 1));
        }
        assert!(e.roots()[0].hi() < e.roots()[1].lo());
        assert!(e.roots()[1].hi() < e.roots()[2].lo());
    }

    #[test]
    fn identity_is_rejected() {
        assert!(matches!(
            eigen_structure(&Mat3::identity()),
            Err(KleinError::NotHyperbolic(_))
        ));
    }

    #[test]
    fn third_example_operator_is_hyperbolic() {
        let a = Mat3::from_rows([[0, 1, 0], [0, 0, 1], [1, 1, -3]]);
        let e = eigen_structure(&a).unwrap();
        assert_eq!(e.roots().len(), 3);
    }

    #[test]
    fn sign_linearity_and_consistency() {
        let e = eigen_structure(&golden()).unwrap();
        let nf = norm_form(&e);
        let samples = [
            Vec3::new(1, 1, 1),
            Vec3::new(2, 2, 3),
            Vec3::new(-1, 4, 0),
            Vec3::new(5, -3, 2),
            Vec3::new(0, 0, 1),
        ];
        for v in &samples {
            let signs = [
                e.sign_of_form(0, v),
                e.sign_of_form(1, v),
                e.sign_of_form(2, v),
            ];
            let neg = -v;
            for i in 0..3 {
                assert_eq!(e.sign_of_form(i, &neg), -signs[i]);
            }
            // product of form signs equals the sign of the norm form value
            let product: i8 = signs[0] * signs[1] * signs[2];
            let val = nf.eval(v);
            assert_eq!(
                crate::exact::sign_of(&val),
                product,
                "sign product mismatch at {:?}",
                v
            );
        }
    }

    #[test]
    fn orthant_scaling_and_perron_cone() {
        let e = eigen_structure(&golden()).unwrap();
        let v = Vec3::new(1, 1, 1);
        let w = Vec3::new(2, 2, 3);
        assert_eq!(e.orthant_of(&v), e.orthant_of(&w));
        assert_eq!(
            e.orthant_of(&Vec3::new(3, 3, 3)),
            e.orthant_of(&v)
        );
        assert_eq!(e.orthant_of(&(-&v)), e.orthant_of(&v).opposite());
    }

    #[test]
    fn norm_form_never_vanishes_on_small_lattice_points() {
        let e = eigen_structure(&golden()).unwrap();
        let nf = norm_form(&e);
        for x in -10i64..=10 {
            for y in -10i64..=10 {
                for z in -10i64..=10 {
                    if x == 0 && y == 0 && z == 0 {
                        continue;
                    }
                    assert!(!nf.eval(&Vec3::new(x, y, z)).is_zero());
                }
            }
        }
    }

    #[test]
    fn norm_form_invariant_under_det_one_operator() {
        let a = golden();
        let e = eigen_structure(&a).unwrap();
        let nf = norm_form(&e);
        for v in [Vec3::new(1, 0, 0), Vec3::new(2, -1, 3), Vec3::new(0, 5, -2)] {
            let av = a.mul_vec(&v);
            assert_eq!(nf.eval(&av).abs(), nf.eval(&v).abs());
        }
    }

    #[test]
    fn norm_form_of_section_four_companion() {
        let a = Mat3::from_rows([[0, 1, 0], [0, 0, 1], [1, 4, -11]]);
        let e = eigen_structure(&a).unwrap();
        let nf = norm_form(&e);
        assert!(!nf.eval(&Vec3::new(1, 0, 0)).is_zero());
    }

    #[test]
    fn norm_form_matches_interval_product() {
        // numeric oracle: the product of the three interval forms contains
        // content * form(v)
        let e = eigen_structure(&golden()).unwrap();
        let nf = norm_form(&e);
        for v in [Vec3::new(1, 2, 3), Vec3::new(-2, 0, 1), Vec3::new(1, 1, 1)] {
            let q = e.form_poly(&v);
            let w = rat(1, 1 << 48);
            let prod = e
                .eval_at_root(0, &q, &w)
                .mul(&e.eval_at_root(1, &q, &w))
                .mul(&e.eval_at_root(2, &q, &w));
            let expected = Rat::from_integer(nf.eval(&v) * &nf.content);
            assert!(
                prod.lo() <= &expected && &expected <= prod.hi(),
                "interval product does not bracket the exact resultant"
            );
        }
    }

    #[test]
    fn substitute_composes() {
        let e = eigen_structure(&golden()).unwrap();
        let nf = norm_form(&e);
        let w = Mat3::from_rows([[1, 2, 0], [0, 1, 0], [3, 0, 1]]);
        let pulled = nf.form.substitute(&w);
        for v in [Vec3::new(1, 1, 1), Vec3::new(-2, 3, 5)] {
            assert_eq!(pulled.eval(&v), nf.form.eval(&w.mul_vec(&v)));
        }
    }
}

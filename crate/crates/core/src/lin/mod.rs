//! Exact 3x3 integer linear algebra, Hermite and Smith normal forms for
//! small matrices, and lattice bases of integer planes.

mod matn;
mod plane;

pub use matn::{hermite_normal_form, smith_normal_form, MatN};
pub use plane::{plane_lattice_basis, sublattice_index, AffineLattice, LatticeIndex, PlaneLattice};

use crate::exact::{Int, IntPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer vector in Z^3.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vec3(pub [Int; 3]);

impl Vec3 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>, z: impl Into<Int>) -> Self {
        Vec3([x.into(), y.into(), z.into()])
    }

    pub fn zero() -> Self {
        Vec3([Int::zero(), Int::zero(), Int::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, o: &Vec3) -> Int {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3([
            &self.0[1] * &o.0[2] - &self.0[2] * &o.0[1],
            &self.0[2] * &o.0[0] - &self.0[0] * &o.0[2],
            &self.0[0] * &o.0[1] - &self.0[1] * &o.0[0],
        ])
    }

    pub fn gcd(&self) -> Int {
        self.0
            .iter()
            .fold(Int::zero(), |g, c| g.gcd(c))
    }

    pub fn max_abs(&self) -> Int {
        self.0
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap()
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([
            &self.0[0] + &o.0[0],
            &self.0[1] + &o.0[1],
            &self.0[2] + &o.0[2],
        ])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([
            &self.0[0] - &o.0[0],
            &self.0[1] - &o.0[1],
            &self.0[2] - &o.0[2],
        ])
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl Mul<&Int> for &Vec3 {
    type Output = Vec3;
    fn mul(self, k: &Int) -> Vec3 {
        Vec3([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k])
    }
}

/// v / gcd(coordinates); the primitive vector on the same ray.
pub fn primitive(v: &Vec3) -> Vec3 {
    assert!(!v.is_zero(), "primitive of the zero vector");
    let g = v.gcd();
    Vec3([&v.0[0] / &g, &v.0[1] / &g, &v.0[2] / &g])
}

/// 3x3 integer matrix, row major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Mat3(pub [[Int; 3]; 3]);

impl Mat3 {
    pub fn from_rows(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(Int::from)))
    }

    pub fn from_int_rows(rows: [[Int; 3]; 3]) -> Self {
        Mat3(rows)
    }

    pub fn identity() -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.0[i][i] = Int::one();
        }
        m
    }

    pub fn zero() -> Self {
        Mat3(std::array::from_fn(|_| std::array::from_fn(|_| Int::zero())))
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3(self.0[i].clone())
    }

    pub fn col(&self, j: usize) -> Vec3 {
        Vec3([self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()])
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn trace(&self) -> Int {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn det(&self) -> Int {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Sum of the three principal 2x2 minors.
    pub fn second_symmetric(&self) -> Int {
        let m = &self.0;
        (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            + (&m[0][0] * &m[2][2] - &m[0][2] * &m[2][0])
            + (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0])
    }

    pub fn adjugate(&self) -> Mat3 {
        let m = &self.0;
        let c = |r1: usize, c1: usize, r2: usize, c2: usize| &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1];
        Mat3([
            [c(1, 1, 2, 2), -c(0, 1, 2, 2), c(0, 1, 1, 2)],
            [-c(1, 0, 2, 2), c(0, 0, 2, 2), -c(0, 0, 1, 2)],
            [c(1, 0, 2, 1), -c(0, 0, 2, 1), c(0, 0, 1, 1)],
        ])
    }

    /// Exact inverse for matrices with det = +-1.
    pub fn inverse_unimodular(&self) -> Mat3 {
        let d = self.det();
        let adj = self.adjugate();
        if d.is_one() {
            adj
        } else if (-&d).is_one() {
            adj.neg()
        } else {
            panic!("inverse_unimodular on matrix with det {}", d);
        }
    }

    pub fn neg(&self) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| -&self.0[i][j])))
    }

    pub fn add(&self, o: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] + &o.0[i][j])))
    }

    pub fn sub(&self, o: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] - &o.0[i][j])))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = Int::zero();
                for k in 0..3 {
                    s += &self.0[i][k] * &o.0[k][j];
                }
                out.0[i][j] = s;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        Vec3(std::array::from_fn(|i| {
            &self.0[i][0] * &v.0[0] + &self.0[i][1] * &v.0[1] + &self.0[i][2] * &v.0[2]
        }))
    }

    pub fn scale(&self, k: &Int) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] * k)))
    }

    /// Integer matrix power with signed exponent (negative needs det = +-1).
    pub fn pow(&self, e: i64) -> Mat3 {
        let base = if e < 0 { self.inverse_unimodular() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut result = Mat3::identity();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul(&sq);
            }
        }
        result
    }

    pub fn max_abs(&self) -> Int {
        self.0
            .iter()
            .flatten()
            .map(|c| c.abs())
            .max()
            .unwrap()
    }

    pub fn l1_norm(&self) -> Int {
        self.0.iter().flatten().map(|c| c.abs()).sum()
    }

    pub fn commutes_with(&self, o: &Mat3) -> bool {
        self.mul(o) == o.mul(self)
    }

    /// Parse "a,b,c;d,e,f;g,h,i".
    pub fn parse(s: &str) -> Result<Mat3, String> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 3 {
            return Err(format!("expected 3 rows separated by ';', got {}", rows.len()));
        }
        let mut m = Mat3::zero();
        for (i, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 3 {
                return Err(format!("row {} must have 3 entries", i + 1));
            }
            for (j, cell) in cells.iter().enumerate() {
                m.0[i][j] = cell
                    .trim()
                    .parse::<Int>()
                    .map_err(|e| format!("bad entry '{}': {}", cell.trim(), e))?;
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}; {},{},{}; {},{},{}]",
            self.0[0][0], self.0[0][1], self.0[0][2],
            self.0[1][0], self.0[1][1], self.0[1][2],
            self.0[2][0], self.0[2][1], self.0[2][2]
        )
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Exact monic characteristic polynomial det(xI - A).
pub fn char_poly(a: &Mat3) -> IntPoly {
    IntPoly::new(vec![
        -a.det(),
        a.second_symmetric(),
        -a.trace(),
        Int::one(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly(&Mat3::identity()),
            IntPoly::from_i64(&[-1, 3, -3, 1])
        );
        let golden = Mat3::from_rows([[1, 1, 1], [1, 2, 2], [1, 2, 3]]);
        assert_eq!(char_poly(&golden), IntPoly::from_i64(&[-1, 5, -6, 1]));
        let companion = Mat3::from_rows([[0, 1, 0], [0, 0, 1], [1, 4, -11]]);
        assert_eq!(char_poly(&companion), IntPoly::from_i64(&[-1, -4, 11, 1]));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        // oracle: expand det(xI - A) as a polynomial via minors with
        // polynomial entries
        let a = Mat3::from_rows([[2, -1, 3], [0, 5, -2], [7, 1, -4]]);
        let x = IntPoly::from_i64(&[0, 1]);
        let entry = |i: usize, j: usize| -> IntPoly {
            let diag = if i == j { x.clone() } else { IntPoly::zero() };
            diag.sub(&IntPoly::new(vec![a.0[i][j].clone()]))
        };
        let minor = |r: [usize; 2], c: [usize; 2]| {
            entry(r[0], c[0]).mul(&entry(r[1], c[1])).sub(&entry(r[0], c[1]).mul(&entry(r[1], c[0])))
        };
        let det = entry(0, 0)
            .mul(&minor([1, 2], [1, 2]))
            .sub(&entry(0, 1).mul(&minor([1, 2], [0, 2])))
            .add(&entry(0, 2).mul(&minor([1, 2], [0, 1])));
        assert_eq!(char_poly(&a), det);
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&Vec3::new(2, 4, 6)), Vec3::new(1, 2, 3));
        assert_eq!(primitive(&Vec3::new(0, 0, 5)), Vec3::new(0, 0, 1));
        assert_eq!(primitive(&Vec3::new(-3, 3, 0)), Vec3::new(-1, 1, 0));
    }

    #[test]
    fn inverse_and_pow() {
        let a = Mat3::from_rows([[1, 1, 1], [1, 2, 2], [1, 2, 3]]);
        assert_eq!(a.det(), int(1));
        let inv = a.inverse_unimodular();
        assert_eq!(a.mul(&inv), Mat3::identity());
        assert_eq!(a.pow(-2), inv.mul(&inv));
        assert_eq!(a.pow(0), Mat3::identity());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    #[test]
    fn parse_matrix() {
        let m = Mat3::parse("1,1,1;1,2,2;1,2,3").unwrap();
        assert_eq!(m, Mat3::from_rows([[1, 1, 1], [1, 2, 2], [1, 2, 3]]));
        assert!(Mat3::parse("1,2;3,4").is_err());
        assert!(Mat3::parse("1,1,1;1,2,2;1,2,x").is_err());
    }
}

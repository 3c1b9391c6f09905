//! Lattices of integer points in rational affine subspaces: saturated plane
//! bases, sublattice indices, and generic affine lattices used by the
//! between-plane distance/angle computation.

use super::matn::{hermite_normal_form, smith_normal_form, MatN};
use super::{primitive, Vec3};
use crate::error::KleinError;
use crate::exact::Int;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The full lattice of integer points of an affine integer plane in Z^3:
/// every integer point of the plane is anchor + Z b1 + Z b2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneLattice {
    pub anchor: Vec3,
    pub basis: [Vec3; 2],
    /// Primitive normal; the plane is n . x = c.
    pub normal: Vec3,
    pub offset: Int,
}

impl PlaneLattice {
    /// Lattice of the plane n . x = c for primitive n.
    pub fn from_normal(normal: &Vec3, offset: &Int) -> Self {
        let n = primitive(normal);
        let c = if &n == normal {
            offset.clone()
        } else {
            // normal was not primitive: the offset must scale down exactly
            let g = normal.gcd();
            assert!((offset % &g).is_zero(), "plane has no integer points");
            offset / &g
        };
        let (w, b1, b2) = unimodular_complement(&n);
        PlaneLattice {
            anchor: &w * &c,
            basis: [b1, b2],
            normal: n,
            offset: c,
        }
    }

    /// Exact coordinates (s, t) of an integer point of the plane:
    /// v = anchor + s b1 + t b2.
    pub fn coords(&self, v: &Vec3) -> (Int, Int) {
        debug_assert_eq!(self.normal.dot(v), self.offset, "point not on plane");
        let d = v - &self.anchor;
        // solve d = s b1 + t b2 by cross products with the primitive normal:
        // (b1 x b2) is parallel to normal, so use 2x2 subsystems
        let b1 = &self.basis[0];
        let b2 = &self.basis[1];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = &b1.0[i] * &b2.0[j] - &b1.0[j] * &b2.0[i];
            if det.is_zero() {
                continue;
            }
            let s_num = &d.0[i] * &b2.0[j] - &d.0[j] * &b2.0[i];
            let t_num = &b1.0[i] * &d.0[j] - &b1.0[j] * &d.0[i];
            assert!((&s_num % &det).is_zero() && (&t_num % &det).is_zero(),
                "point is not a lattice point of the plane");
            let s = s_num / &det;
            let t = t_num / &det;
            debug_assert_eq!(&(&(b1 * &s) + &(b2 * &t)) + &self.anchor, *v);
            return (s, t);
        }
        unreachable!("basis vectors are independent");
    }

    pub fn point_at(&self, s: &Int, t: &Int) -> Vec3 {
        &(&self.anchor + &(&self.basis[0] * s)) + &(&self.basis[1] * t)
    }
}

/// Extend a primitive vector n to a unimodular basis: returns (w, b1, b2)
/// with n.w = 1, n.b1 = n.b2 = 0, and det(w, b1, b2) = +-1, so that b1, b2
/// generate the full kernel lattice of n.
pub fn unimodular_complement(n: &Vec3) -> (Vec3, Vec3, Vec3) {
    assert!(n.gcd().is_one(), "normal must be primitive");
    // HNF of the column vector n: U n = (1, 0, 0)^T with U unimodular
    let m = MatN::from_rows(vec![
        vec![n.0[0].clone()],
        vec![n.0[1].clone()],
        vec![n.0[2].clone()],
    ]);
    let (h, u) = hermite_normal_form(&m);
    assert!(h.at(0, 0).is_one());
    let row = |i: usize| Vec3([u.at(i, 0).clone(), u.at(i, 1).clone(), u.at(i, 2).clone()]);
    (row(0), row(1), row(2))
}

/// Saturated lattice basis of the affine plane through three integer points.
pub fn plane_lattice_basis(p: &Vec3, q: &Vec3, r: &Vec3) -> Result<PlaneLattice, KleinError> {
    let d1 = q - p;
    let d2 = r - p;
    let n = d1.cross(&d2);
    if n.is_zero() {
        return Err(KleinError::DegenerateInput(
            "plane_lattice_basis needs affinely independent points".into(),
        ));
    }
    let n = primitive(&n);
    let c = n.dot(p);
    let mut lat = PlaneLattice::from_normal(&n, &c);
    // keep the caller's first point as anchor; same lattice
    lat.anchor = p.clone();
    Ok(lat)
}

/// Ambient lattice for index computations.
#[derive(Clone, Debug)]
pub enum AffineLattice {
    Full,
    Plane(PlaneLattice),
}

/// Index of a generated sublattice in an ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(Int),
    Infinite,
}

impl LatticeIndex {
    pub fn expect_finite(&self) -> &Int {
        match self {
            LatticeIndex::Finite(n) => n,
            LatticeIndex::Infinite => panic!("expected finite lattice index"),
        }
    }
}

/// Index of the sublattice generated by `generators` inside the ambient
/// lattice (direction vectors in both cases). Infinite when the ranks differ.
pub fn sublattice_index(generators: &[Vec3], ambient: &AffineLattice) -> LatticeIndex {
    let coords: Vec<Vec<Int>> = match ambient {
        AffineLattice::Full => generators.iter().map(|g| g.0.to_vec()).collect(),
        AffineLattice::Plane(p) => generators
            .iter()
            .map(|g| {
                // direction vectors: n.g must be 0 and coordinates integral
                assert!(p.normal.dot(g).is_zero(), "generator not in plane direction");
                let shifted = &p.anchor + g;
                let (s, t) = p.coords(&shifted);
                vec![s, t]
            })
            .collect(),
    };
    let ambient_rank = match ambient {
        AffineLattice::Full => 3,
        AffineLattice::Plane(_) => 2,
    };
    index_from_rows(coords, ambient_rank)
}

/// Index of the row lattice of `rows` inside Z^rank.
pub fn index_from_rows(rows: Vec<Vec<Int>>, ambient_rank: usize) -> LatticeIndex {
    if rows.is_empty() {
        return if ambient_rank == 0 {
            LatticeIndex::Finite(Int::one())
        } else {
            LatticeIndex::Infinite
        };
    }
    let m = MatN::from_rows(rows);
    let (_, d, _, _) = smith_normal_form(&m);
    let r = m.rows.min(m.cols);
    let mut idx = Int::one();
    let mut rank = 0;
    for i in 0..r {
        if !d.at(i, i).is_zero() {
            idx *= d.at(i, i);
            rank += 1;
        }
    }
    if rank < ambient_rank {
        LatticeIndex::Infinite
    } else {
        LatticeIndex::Finite(idx)
    }
}

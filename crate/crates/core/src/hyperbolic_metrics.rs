//! Side lengths of hyperbolic `(2, m, n)`-triangles and the lengths of mirrors built from them.
//!
//! The right angle sits at corner 1 (edge-centre), the angle `π/n` at corner 0 (vertex)
//! and `π/m` at corner 2 (face-centre).

use std::f64::consts::PI;

use thiserror::Error;

use crate::patterns::{Geometry, Link, MapType};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("type {{{m},{n}}} is not hyperbolic: 1/2 + 1/m + 1/n must be below 1")]
    NotHyperbolic { m: f64, n: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSides {
    pub m: f64,
    pub n: f64,
    pub len01: f64,
    pub len02: f64,
    pub len12: f64,
}

impl TriangleSides {
    /// Length of the side joining corners `a` and `b`.
    pub fn side(&self, a: u8, b: u8) -> f64 {
        match (a.min(b), a.max(b)) {
            (0, 1) => self.len01,
            (0, 2) => self.len02,
            (1, 2) => self.len12,
            _ => panic!("no side joins corners {a} and {b}"),
        }
    }

    /// The perimeter `len01 + len02 + len12`.
    pub fn perimeter(&self) -> f64 {
        self.len01 + self.len02 + self.len12
    }
}

/// `arcosh(1 + t)` for `t ≥ 0`, accurate when `t` is small.
fn arcosh_1p(t: f64) -> f64 {
    (t + (t * (t + 2.0)).sqrt()).ln_1p()
}

/// Triangle sides for real-valued `m`, `n`; lets callers approach the Euclidean limit.
pub fn triangle_sides_real(m: f64, n: f64) -> Result<TriangleSides, MetricError> {
    if !(m > 0.0 && n > 0.0) || 0.5 + 1.0 / m + 1.0 / n >= 1.0 {
        return Err(MetricError::NotHyperbolic { m, n });
    }
    let (am, an) = (PI / m, PI / n);
    let len01 = arcosh_1p(am.cos() / an.sin() - 1.0);
    let len12 = arcosh_1p(an.cos() / am.sin() - 1.0);
    let len02 = arcosh_1p(1.0 / (am.tan() * an.tan()) - 1.0);
    Ok(TriangleSides {
        m,
        n,
        len01,
        len02,
        len12,
    })
}

pub fn triangle_sides(map_type: MapType) -> Result<TriangleSides, MetricError> {
    if map_type.geometry() != Geometry::Hyperbolic {
        return Err(MetricError::NotHyperbolic {
            m: map_type.m() as f64,
            n: map_type.n() as f64,
        });
    }
    triangle_sides_real(map_type.m() as f64, map_type.n() as f64)
}

/// `index` times the length of one link: each cyclically adjacent label pair
/// `ab` contributes the side `ab`.
pub fn mirror_length(link: Link, index: u64, map_type: MapType) -> Result<f64, MetricError> {
    let sides = triangle_sides(map_type)?;
    Ok(index as f64 * cyclic_length(&link.labels(), &sides))
}

/// Total side length along a closed label sequence.
pub fn cyclic_length(labels: &[u8], sides: &TriangleSides) -> f64 {
    (0..labels.len())
        .map(|i| sides.side(labels[i], labels[(i + 1) % labels.len()]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(m: u32, n: u32) -> MapType {
        MapType::new(m, n).unwrap()
    }

    #[test]
    fn sides_of_the_hurwitz_triangle() {
        let s = triangle_sides(t(3, 7)).unwrap();
        assert!((s.len12 - 0.2831281533).abs() < 1e-9, "{}", s.len12);
        assert!((s.len01 - 0.5452748317).abs() < 1e-9, "{}", s.len01);
        assert!((s.len02 - 0.6206717375).abs() < 1e-9, "{}", s.len02);
        assert!((2.0 * s.perimeter() - 2.8981494452).abs() < 1e-9);
    }

    #[test]
    fn hurwitz_mirror_lengths() {
        let k2 = mirror_length(Link::L010212, 2, t(3, 7)).unwrap();
        let k3 = mirror_length(Link::L010212, 3, t(3, 7)).unwrap();
        assert!((k2 - 5.7962988904).abs() < 1e-9, "{k2}");
        assert!((k3 - 8.6944483356).abs() < 1e-9, "{k3}");
    }

    #[test]
    fn euclidean_and_spherical_types_are_rejected() {
        assert!(triangle_sides(t(4, 4)).is_err());
        assert!(triangle_sides(t(3, 6)).is_err());
        assert!(triangle_sides(t(3, 5)).is_err());
    }

    #[test]
    fn hypotenuse_is_longest() {
        for (m, n) in [(3, 7), (3, 8), (4, 5), (10, 4), (7, 7), (5, 10)] {
            let s = triangle_sides(t(m, n)).unwrap();
            assert!(s.len02 > s.len01.max(s.len12), "{{{m},{n}}}");
        }
    }

    #[test]
    fn sides_vanish_toward_the_euclidean_limit() {
        let mut previous = f64::INFINITY;
        for eps in [1e-1, 1e-2, 1e-4, 1e-6] {
            let s = triangle_sides_real(4.0 + eps, 4.0).unwrap();
            assert!(s.len02 < previous);
            previous = s.len02;
        }
        assert!(previous < 1e-2);
    }

    #[test]
    fn cyclic_rotation_and_duality() {
        let s = triangle_sides(t(3, 8)).unwrap();
        let a = cyclic_length(&[0, 2, 1, 2], &s);
        let b = cyclic_length(&[2, 1, 2, 0], &s);
        assert!((a - b).abs() < 1e-12);
        for (link, m, n) in [(Link::L0212, 3, 8), (Link::L01, 3, 8), (Link::L12, 6, 4)] {
            let here = mirror_length(link, 3, t(m, n)).unwrap();
            let there = mirror_length(link.dual(), 3, t(n, m)).unwrap();
            assert!((here - there).abs() < 1e-12);
        }
    }
}

//! Reflexible toroidal maps as quotients of the square and hexagonal lattices.
//!
//! A mirror automorphism of a toroidal map acts as a translation `z ↦ z + v` of
//! the lattice; the map itself is the lattice modulo a principal ideal `(g)`, so
//! the link index is the least `k ≥ 1` with `k·v ∈ (g)`. Arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::patterns::{dualize, Link, LinkIndex, MapType, PatternReport, ReflectionClass};
use crate::presentations::{Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("division by zero in the ring")]
    ZeroDivisor,
    #[error("the zero translation has no well-defined order")]
    ZeroTranslation,
    #[error("toroidal maps need b >= 1")]
    ZeroParameter,
    #[error("unknown toroidal map `{0}`; expected e.g. 44-b0, 36-bb, 63-b0")]
    UnknownMap(String),
}

/// Operations shared by the Gaussian and Eisenstein integers.
pub trait QuadraticInteger:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_parts(a: BigInt, b: BigInt) -> Self;
    fn parts(&self) -> (&BigInt, &BigInt);
    fn conj(&self) -> Self;
    fn norm(&self) -> BigInt;
    /// The units of the ring.
    fn units() -> Vec<Self>;

    fn from_int(k: i64) -> Self {
        Self::from_parts(BigInt::from(k), BigInt::zero())
    }

    fn new(a: i64, b: i64) -> Self {
        Self::from_parts(BigInt::from(a), BigInt::from(b))
    }

    fn is_zero(&self) -> bool {
        let (a, b) = self.parts();
        a.is_zero() && b.is_zero()
    }

    fn scale(&self, k: &BigInt) -> Self {
        let (a, b) = self.parts();
        Self::from_parts(a * k, b * k)
    }
}

/// `a + b·i` with `i² = −1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInteger {
    pub a: BigInt,
    pub b: BigInt,
}

/// `a + b·ω` with `ω² = −1 − ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInteger {
    pub a: BigInt,
    pub b: BigInt,
}

macro_rules! additive_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self {
                    a: self.a + rhs.a,
                    b: self.b + rhs.b,
                }
            }
        }

        impl Sub for $t {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self {
                    a: self.a - rhs.a,
                    b: self.b - rhs.b,
                }
            }
        }

        impl Neg for $t {
            type Output = Self;
            fn neg(self) -> Self {
                Self {
                    a: -self.a,
                    b: -self.b,
                }
            }
        }
    };
}

additive_ops!(GaussianInteger);
additive_ops!(EisensteinInteger);

impl Mul for GaussianInteger {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            a: &self.a * &rhs.a - &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Mul for EisensteinInteger {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let bd = &self.b * &rhs.b;
        Self {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl QuadraticInteger for GaussianInteger {
    fn from_parts(a: BigInt, b: BigInt) -> Self {
        Self { a, b }
    }

    fn parts(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.b * &self.b
    }

    fn units() -> Vec<Self> {
        vec![
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
        ]
    }
}

impl QuadraticInteger for EisensteinInteger {
    fn from_parts(a: BigInt, b: BigInt) -> Self {
        Self { a, b }
    }

    fn parts(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }

    /// `conj(ω) = ω² = −1 − ω`.
    fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    fn units() -> Vec<Self> {
        let omega = Self::new(0, 1);
        let omega2 = Self::new(-1, -1);
        vec![
            Self::new(1, 0),
            Self::new(-1, 0),
            omega.clone(),
            -omega,
            omega2.clone(),
            -omega2,
        ]
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}i",
            self.a,
            if self.b.is_negative() { "" } else { "+" },
            self.b
        )
    }
}

impl fmt::Display for EisensteinInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}w",
            self.a,
            if self.b.is_negative() { "" } else { "+" },
            self.b
        )
    }
}

/// Whether `x / d` lies in the ring: `x · conj(d)` must be divisible by `norm(d)`
/// in both coordinates.
pub fn ring_divides<T: QuadraticInteger>(d: &T, x: &T) -> Result<bool, LatticeError> {
    if d.is_zero() {
        return Err(LatticeError::ZeroDivisor);
    }
    let n = d.norm();
    let y = x.clone() * d.conj();
    let (a, b) = y.parts();
    Ok(a.is_multiple_of(&n) && b.is_multiple_of(&n))
}

/// Least `k ≥ 1` with `k·v ∈ (g)`. Searches `k = 1..=norm(g)`; `k = norm(g)` always
/// works because `norm(g) = g·conj(g)`.
pub fn translation_order<T: QuadraticInteger>(v: &T, g: &T) -> Result<u64, LatticeError> {
    if g.is_zero() {
        return Err(LatticeError::ZeroDivisor);
    }
    if v.is_zero() {
        return Err(LatticeError::ZeroTranslation);
    }
    let mut k = BigInt::one();
    let mut multiple = v.clone();
    loop {
        if ring_divides(g, &multiple)? {
            return Ok(
                u64::try_from(k).expect("order is bounded by the norm of a desk-scale ideal")
            );
        }
        k += 1;
        multiple = multiple + v.clone();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusFamily {
    /// `{4,4}` on the square lattice.
    Square,
    /// `{3,6}` on the hexagonal lattice.
    Triangular,
    /// `{6,3}`, the dual of `{3,6}`.
    Hexagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusVariant {
    /// `{p,q}_{b,0}`
    B0,
    /// `{p,q}_{b,b}`
    BB,
}

/// One of the reflexible maps `{4,4}_{b,c}`, `{3,6}_{b,c}`, `{6,3}_{b,c}` with `c ∈ {0, b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToroidalMapId {
    pub family: TorusFamily,
    pub variant: TorusVariant,
    pub b: u32,
}

impl ToroidalMapId {
    pub fn new(family: TorusFamily, variant: TorusVariant, b: u32) -> Result<Self, LatticeError> {
        if b == 0 {
            return Err(LatticeError::ZeroParameter);
        }
        Ok(Self { family, variant, b })
    }

    pub fn map_type(&self) -> MapType {
        let (m, n) = match self.family {
            TorusFamily::Square => (4, 4),
            TorusFamily::Triangular => (3, 6),
            TorusFamily::Hexagonal => (6, 3),
        };
        MapType::new(m, n).expect("lattice types are valid")
    }

    pub fn c(&self) -> u32 {
        match self.variant {
            TorusVariant::B0 => 0,
            TorusVariant::BB => self.b,
        }
    }

    /// Order of the rotation group: the number of darts.
    pub fn rotation_order(&self) -> u64 {
        let (b, c) = (self.b as u64, self.c() as u64);
        match self.family {
            TorusFamily::Square => 4 * (b * b + c * c),
            TorusFamily::Triangular | TorusFamily::Hexagonal => 6 * (b * b + b * c + c * c),
        }
    }

    /// Rotation presentation: the triangle relators plus one translation to the power `b`.
    pub fn presentation(&self) -> Presentation {
        let (a, bg, cg) = (Word::generator(0), Word::generator(1), Word::generator(2));
        let b = self.b as i64;
        let t = self.map_type();
        let translation = match (self.family, self.variant) {
            (TorusFamily::Square, TorusVariant::B0) => &bg * &cg.inverse(),
            (TorusFamily::Square, TorusVariant::BB) => &(&bg * &a) * &cg,
            (TorusFamily::Triangular, v) => triangular_translation(v),
            (TorusFamily::Hexagonal, v) => {
                let dual = ToroidalMapId {
                    family: TorusFamily::Triangular,
                    variant: v,
                    b: self.b,
                };
                return dual
                    .presentation()
                    .dual_rotation()
                    .expect("dual of a rotation presentation");
            }
        };
        Presentation::triangle_rotation(t.m(), t.n())
            .with_relators([translation.pow(b)])
            .expect("translation relator is non-empty")
    }
}

/// `C³A` translates by `−1` and `C³B²CB²` by `−2 − ω` on the hexagonal lattice;
/// `(C³A)³ (C³B²CB²)⁻¹` is then the translation by `ω − 1`.
fn triangular_translation(variant: TorusVariant) -> Word {
    let a = Word::generator(0);
    let b2 = Word::power_of(1, 2);
    let c = Word::generator(2);
    let c3 = Word::power_of(2, 3);
    let unit = &c3 * &a;
    match variant {
        TorusVariant::B0 => unit,
        TorusVariant::BB => {
            let other = &(&(&c3 * &b2) * &c) * &b2;
            &unit.pow(3) * &other.inverse()
        }
    }
}

impl fmt::Display for ToroidalMapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.map_type();
        write!(f, "{{{},{}}}_{{{},{}}}", t.m(), t.n(), self.b, self.c())
    }
}

impl FromStr for ToroidalMapId {
    type Err = LatticeError;

    /// `44-b0`, `36-bb`, `63-b0` and so on; `b` is supplied separately, so this
    /// parses with `b = 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LatticeError::UnknownMap(s.to_string());
        let (fam, var) = s.split_once('-').ok_or_else(bad)?;
        let family = match fam {
            "44" => TorusFamily::Square,
            "36" => TorusFamily::Triangular,
            "63" => TorusFamily::Hexagonal,
            _ => return Err(bad()),
        };
        let variant = match var {
            "b0" => TorusVariant::B0,
            "bb" => TorusVariant::BB,
            _ => return Err(bad()),
        };
        Ok(Self {
            family,
            variant,
            b: 1,
        })
    }
}

fn report<T: QuadraticInteger>(
    class: ReflectionClass,
    link: Link,
    v: &T,
    g: &T,
) -> Result<PatternReport, LatticeError> {
    Ok(PatternReport::new(
        class,
        link,
        LinkIndex::Finite(translation_order(v, g)?),
    ))
}

/// Link indices of each reflection class, computed from the lattice translations.
pub fn toroidal_patterns(id: ToroidalMapId) -> Result<Vec<PatternReport>, LatticeError> {
    use ReflectionClass::*;
    if id.b == 0 {
        return Err(LatticeError::ZeroParameter);
    }
    let b = id.b as i64;
    match id.family {
        TorusFamily::Square => {
            let g = match id.variant {
                TorusVariant::B0 => GaussianInteger::new(b, 0),
                TorusVariant::BB => GaussianInteger::new(b, b),
            };
            Ok(vec![
                report(P, Link::L01, &GaussianInteger::new(1, 0), &g)?,
                report(Q, Link::L12, &GaussianInteger::new(0, 1), &g)?,
                report(R, Link::L02, &GaussianInteger::new(1, 1), &g)?,
            ])
        }
        TorusFamily::Triangular => {
            let g = match id.variant {
                TorusVariant::B0 => EisensteinInteger::new(0, b),
                TorusVariant::BB => EisensteinInteger::new(-b, b),
            };
            let v0212 = EisensteinInteger::new(-2, -1);
            Ok(vec![
                report(P, Link::L01, &EisensteinInteger::new(1, 0), &g)?,
                report(Q, Link::L0212, &v0212, &g)?,
                report(R, Link::L0212, &v0212, &g)?,
            ])
        }
        TorusFamily::Hexagonal => {
            let dual = ToroidalMapId {
                family: TorusFamily::Triangular,
                ..id
            };
            Ok(dualize(&toroidal_patterns(dual)?))
        }
    }
}

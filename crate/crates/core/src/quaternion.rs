//! Hamilton quaternions over Q, basis (1, i, j, ij).
//!
//! `Quat<T>` is generic over the coordinate ring so the same formulas serve
//! exact rationals, polynomials in a real parameter, and intervals.

use crate::field::{parse_rational, rational_to_string, FieldError};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coordinate rings usable inside `Quat`.
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quat<T> {
    pub c1: T,
    pub ci: T,
    pub cj: T,
    pub ck: T,
}

pub type Quaternion = Quat<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuatError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse quaternion: {0}")]
    Parse(String),
}

impl From<FieldError> for QuatError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::DivisionByZero => QuatError::DivisionByZero,
            other => QuatError::Parse(other.to_string()),
        }
    }
}

/// Product of basis elements: e_a e_b = sign · e_c, indices 0..4 for 1, i, j, ij.
pub const fn basis_mul(a: usize, b: usize) -> (i8, usize) {
    const T: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    T[a][b]
}

pub const BASIS_NAMES: [&str; 4] = ["1", "i", "j", "ij"];

impl<T: Ring> Quat<T> {
    pub fn new(c1: T, ci: T, cj: T, ck: T) -> Self {
        Quat { c1, ci, cj, ck }
    }

    pub fn scalar(c: T) -> Self {
        Quat { c1: c, ci: T::zero(), cj: T::zero(), ck: T::zero() }
    }

    /// The basis element with index 0..4 (1, i, j, ij).
    pub fn basis(idx: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[idx] = T::one();
        let [c1, ci, cj, ck] = c;
        Quat { c1, ci, cj, ck }
    }

    pub fn from_coords(c: [T; 4]) -> Self {
        let [c1, ci, cj, ck] = c;
        Quat { c1, ci, cj, ck }
    }

    pub fn coords(&self) -> [&T; 4] {
        [&self.c1, &self.ci, &self.cj, &self.ck]
    }

    pub fn into_coords(self) -> [T; 4] {
        [self.c1, self.ci, self.cj, self.ck]
    }

    pub fn map<U, G: Fn(&T) -> U>(&self, g: G) -> Quat<U> {
        Quat { c1: g(&self.c1), ci: g(&self.ci), cj: g(&self.cj), ck: g(&self.ck) }
    }

    pub fn conj(&self) -> Self {
        Quat { c1: self.c1.clone(), ci: -self.ci.clone(), cj: -self.cj.clone(), ck: -self.ck.clone() }
    }

    pub fn norm(&self) -> T {
        self.coords().iter().fold(T::zero(), |acc, c| acc + (*c).clone() * (*c).clone())
    }

    pub fn re(&self) -> T {
        self.c1.clone()
    }

    pub fn im(&self) -> Self {
        Quat { c1: T::zero(), ..self.clone() }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.ci.is_zero() && self.cj.is_zero() && self.ck.is_zero()
    }

    pub fn is_pure_imaginary(&self) -> bool {
        self.c1.is_zero()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.clone() * other.clone() == other.clone() * self.clone()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl Quaternion {
    pub fn from_ints(c1: i64, ci: i64, cj: i64, ck: i64) -> Self {
        Quat::new(c1, ci, cj, ck).map(|c| BigRational::from_integer((*c).into()))
    }

    pub fn inv(&self) -> Result<Self, QuatError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(QuatError::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    /// self · other⁻¹
    pub fn div_right(&self, other: &Self) -> Result<Self, QuatError> {
        Ok(self.clone() * other.inv()?)
    }

    /// other⁻¹ · self
    pub fn div_left(&self, other: &Self) -> Result<Self, QuatError> {
        Ok(other.inv()? * self.clone())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "c1": rational_to_string(&self.c1),
            "ci": rational_to_string(&self.ci),
            "cj": rational_to_string(&self.cj),
            "ck": rational_to_string(&self.ck),
        })
    }

    /// Accepts `{"c1":..,"ci":..,"cj":..,"ck":..}` (missing keys are zero),
    /// a 4-element array, or an expression string such as `"1/2 - i + 3ij"`.
    pub fn from_json(v: &Value) -> Result<Self, QuatError> {
        let rat = |x: &Value| -> Result<BigRational, QuatError> {
            match x {
                Value::String(s) => Ok(parse_rational(s)?),
                Value::Number(n) if n.is_i64() => Ok(BigRational::from_integer(n.as_i64().unwrap().into())),
                _ => Err(QuatError::Parse(format!("bad coordinate {x}"))),
            }
        };
        match v {
            Value::String(s) => s.parse(),
            Value::Number(_) => Ok(Quat::scalar(rat(v)?)),
            Value::Array(a) if a.len() == 4 => {
                Ok(Quat::new(rat(&a[0])?, rat(&a[1])?, rat(&a[2])?, rat(&a[3])?))
            }
            Value::Object(m) => {
                for k in m.keys() {
                    if !["c1", "ci", "cj", "ck"].contains(&k.as_str()) {
                        return Err(QuatError::Parse(format!("unknown key {k}")));
                    }
                }
                let get = |k: &str| m.get(k).map_or(Ok(BigRational::zero()), rat);
                Ok(Quat::new(get("c1")?, get("ci")?, get("cj")?, get("ck")?))
            }
            _ => Err(QuatError::Parse(format!("bad quaternion {v}"))),
        }
    }
}

impl std::str::FromStr for Quaternion {
    type Err = QuatError;

    fn from_str(s: &str) -> Result<Self, QuatError> {
        let bad = || QuatError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Quaternion::zero();
        let mut term = String::new();
        let mut terms = Vec::new();
        for (idx, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && idx > 0 {
                terms.push(std::mem::take(&mut term));
            }
            term.push(ch);
        }
        terms.push(term);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let (coef, unit) = if let Some(c) = body.strip_suffix("ij") {
                (c, 3)
            } else if let Some(c) = body.strip_suffix('k') {
                (c, 3)
            } else if let Some(c) = body.strip_suffix('i') {
                (c, 1)
            } else if let Some(c) = body.strip_suffix('j') {
                (c, 2)
            } else {
                (body, 0)
            };
            let coef = coef.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coef);
            let c = if coef.is_empty() {
                if unit == 0 {
                    return Err(bad());
                }
                BigRational::one()
            } else {
                parse_rational(coef).map_err(|_| bad())?
            };
            let c = if sign < 0 { -c } else { c };
            out = out + Quaternion::basis(unit).scale(&c);
        }
        Ok(out)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coords().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = ["", "i", "j", "ij"][idx];
            if idx > 0 && mag.is_one() {
                write!(f, "{unit}")?;
            } else if idx > 0 && !mag.denom().is_one() {
                write!(f, "({}){unit}", rational_to_string(&mag))?;
            } else {
                write!(f, "{}{unit}", rational_to_string(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Ring> Add for Quat<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quat { c1: self.c1 + o.c1, ci: self.ci + o.ci, cj: self.cj + o.cj, ck: self.ck + o.ck }
    }
}

impl<T: Ring> Sub for Quat<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quat { c1: self.c1 - o.c1, ci: self.ci - o.ci, cj: self.cj - o.cj, ck: self.ck - o.ck }
    }
}

impl<T: Ring> Neg for Quat<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Quat { c1: -self.c1, ci: -self.ci, cj: -self.cj, ck: -self.ck }
    }
}

impl<T: Ring> Mul for Quat<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a1, a2, a3, a4) = (self.c1, self.ci, self.cj, self.ck);
        let (b1, b2, b3, b4) = (o.c1, o.ci, o.cj, o.ck);
        Quat {
            c1: a1.clone() * b1.clone() - a2.clone() * b2.clone() - a3.clone() * b3.clone() - a4.clone() * b4.clone(),
            ci: a1.clone() * b2.clone() + a2.clone() * b1.clone() + a3.clone() * b4.clone() - a4.clone() * b3.clone(),
            cj: a1.clone() * b3.clone() - a2.clone() * b4.clone() + a3.clone() * b1.clone() + a4.clone() * b2.clone(),
            ck: a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1,
        }
    }
}

impl<'a, T: Ring> Add<&'a Quat<T>> for &'a Quat<T> {
    type Output = Quat<T>;
    fn add(self, o: &Quat<T>) -> Quat<T> {
        self.clone() + o.clone()
    }
}

impl<'a, T: Ring> Sub<&'a Quat<T>> for &'a Quat<T> {
    type Output = Quat<T>;
    fn sub(self, o: &Quat<T>) -> Quat<T> {
        self.clone() - o.clone()
    }
}

impl<'a, T: Ring> Mul<&'a Quat<T>> for &'a Quat<T> {
    type Output = Quat<T>;
    fn mul(self, o: &Quat<T>) -> Quat<T> {
        self.clone() * o.clone()
    }
}

impl<T: Ring> Zero for Quat<T> {
    fn zero() -> Self {
        Quat::scalar(T::zero())
    }
    fn is_zero(&self) -> bool {
        Quat::is_zero(self)
    }
}

impl<T: Ring> One for Quat<T> {
    fn one() -> Self {
        Quat::scalar(T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    pub(crate) fn random_quat(rng: &mut impl Rng) -> Quaternion {
        let mut c = || BigRational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=4).into());
        Quat::new(c(), c(), c(), c())
    }

    #[test]
    fn defining_relations() {
        assert_eq!(q("i") * q("j"), q("ij"));
        assert_eq!(q("j") * q("i"), q("-ij"));
        assert_eq!(q("i") * q("i"), q("-1"));
        assert_eq!(q("ij") * q("ij"), q("-1"));
        assert_eq!(q("1+i+j+ij").norm(), BigRational::from_integer(4.into()));
        assert_eq!(q("i-j") * q("i+j"), q("2ij"));
        for a in 0..4 {
            for b in 0..4 {
                let (s, c) = basis_mul(a, b);
                let expect = Quaternion::basis(c).scale(&BigRational::from_integer(s.into()));
                assert_eq!(Quaternion::basis(a) * Quaternion::basis(b), expect);
            }
        }
    }

    #[test]
    fn random_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let (a, b) = (random_quat(&mut rng), random_quat(&mut rng));
            assert_eq!((&a * &b).norm(), a.norm() * b.norm());
            assert_eq!((&a * &b).conj(), b.conj() * a.conj());
            assert_eq!(a.re_quat() + a.im(), a);
            let im2 = a.im() * a.im();
            assert!(im2.is_real() && !im2.c1.is_positive());
            if !a.is_zero() {
                assert_eq!(&a * &a.inv().unwrap(), Quaternion::one());
            }
        }
        assert_eq!(Quaternion::zero().inv(), Err(QuatError::DivisionByZero));
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "1", "-i - 2j", "1/2 + (3/4)i - ij", "2 + ij", "i + j"] {
            let x = q(s);
            assert_eq!(q(&x.to_string()), x);
            assert_eq!(Quaternion::from_json(&x.to_json()).unwrap(), x);
        }
        assert_eq!(q("k"), q("ij"));
        assert!("x".parse::<Quaternion>().is_err());
    }

    impl Quaternion {
        fn re_quat(&self) -> Quaternion {
            Quat::scalar(self.re())
        }
    }
}

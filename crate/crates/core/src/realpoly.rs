//! Univariate polynomials over Q and exact real-root isolation
//! (square-free decomposition, Sturm sequences, bisection).

use crate::field::rational_to_string;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients ascending; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RealPoly {
    coeffs: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("refinement of an irrational root needs a positive width")]
    RequiresPositiveWidth,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        match self.eval(x).cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    /// Substitute `x -> x^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        let mut c = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * k + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i * k] = x.clone();
        }
        Self::new(c)
    }

    /// Composition self(g).
    pub fn compose(&self, g: &RealPoly) -> Self {
        self.coeffs.iter().rev().fold(RealPoly::zero(), |acc, c| acc * g.clone() + RealPoly::constant(c.clone()))
    }

    pub fn divrem(&self, d: &RealPoly) -> (RealPoly, RealPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let li = d.lead().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (RealPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap() * &li;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &c * dc;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (RealPoly::new(q), RealPoly::new(r))
    }

    pub fn gcd(&self, other: &RealPoly) -> RealPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Clear denominators and content: the associated primitive integer polynomial.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// Yun's algorithm: returns (a_i, i) with self = lead · Π a_i^i, each a_i monic square-free.
    pub fn squarefree_decomposition(&self) -> Vec<(RealPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c - b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.divrem(&a).0;
            d = c - b.derivative();
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> RealPoly {
        self.squarefree_decomposition().into_iter().fold(RealPoly::one(), |acc, (a, _)| acc * a)
    }

    pub fn sturm_sequence(&self) -> Vec<RealPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].divrem(&seq[n - 1]).1;
            seq.push(-r);
        }
        seq.pop();
        seq
    }

    /// Number of distinct real roots in (lo, hi].
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let seq = self.sturm_sequence();
        let v = |x: &BigRational| sign_changes(seq.iter().map(|p| p.sign_at(x)));
        v(lo).saturating_sub(v(hi))
    }

    /// Cauchy bound: every real root lies in (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let l = self.lead().abs();
        let m = self.coeffs.iter().map(|c| c.abs() / &l).max().unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| Value::String(rational_to_string(c))).collect())
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs.filter(|s| *s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(BigRational),
    /// Open interval (lo, hi) with exactly one root of `poly`.
    Interval { lo: BigRational, hi: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub location: RootLocation,
    pub multiplicity: u32,
    /// Square-free polynomial with this root as its only root in the interval.
    pub poly: RealPoly,
}

impl IsolatedRoot {
    pub fn exact(&self) -> Option<&BigRational> {
        match &self.location {
            RootLocation::Exact(x) => Some(x),
            RootLocation::Interval { .. } => None,
        }
    }

    pub fn bounds(&self) -> (BigRational, BigRational) {
        match &self.location {
            RootLocation::Exact(x) => (x.clone(), x.clone()),
            RootLocation::Interval { lo, hi } => (lo.clone(), hi.clone()),
        }
    }

    pub fn width(&self) -> BigRational {
        let (lo, hi) = self.bounds();
        hi - lo
    }

    /// Sign of the root (-1, 0, 1).
    pub fn sign(&self) -> i32 {
        let (lo, hi) = self.bounds();
        if lo.is_negative() && hi.is_positive() {
            // zero is rational, so it is not the (irrational) root itself
            let at_zero = self.poly.count_roots(&lo, &BigRational::zero());
            return if at_zero == 1 { -1 } else { 1 };
        }
        if hi.is_negative() || (hi.is_zero() && lo.is_negative()) {
            -1
        } else if lo.is_positive() || (lo.is_zero() && hi.is_positive()) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        match &self.location {
            RootLocation::Exact(x) => {
                m.insert("exact".into(), Value::String(rational_to_string(x)));
            }
            RootLocation::Interval { lo, hi } => {
                m.insert("lo".into(), Value::String(rational_to_string(lo)));
                m.insert("hi".into(), Value::String(rational_to_string(hi)));
                m.insert("poly".into(), self.poly.to_json());
            }
        }
        m.insert("multiplicity".into(), Value::String(self.multiplicity.to_string()));
        Value::Object(m)
    }
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// All distinct real roots in increasing order. Rational roots are exact.
pub fn isolate_real_roots(p: &RealPoly) -> Result<Vec<IsolatedRoot>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let parts = p.squarefree_decomposition();
    let s = parts.iter().fold(RealPoly::one(), |acc, (a, _)| acc * a.clone());
    if s.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let b = s.root_bound();
    let seq = s.sturm_sequence();
    let v = |x: &BigRational| sign_changes(seq.iter().map(|q| q.sign_at(x)));
    let mut found: Vec<RootLocation> = Vec::new();
    let mut stack = vec![(-b.clone(), b.clone(), v(&-b.clone()), v(&b))];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let count = vlo.saturating_sub(vhi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            if s.sign_at(&hi) == 0 {
                found.push(RootLocation::Exact(hi));
            } else {
                found.push(RootLocation::Interval { lo, hi });
            }
            continue;
        }
        let mid = (&lo + &hi) * half();
        let vm = v(&mid);
        stack.push((lo, mid.clone(), vlo, vm));
        stack.push((mid, hi, vm, vhi));
    }
    let lead = s.primitive_integer().last().cloned().unwrap().abs();
    let grid = BigRational::new(BigInt::one(), lead.clone());
    let mut roots = Vec::with_capacity(found.len());
    for loc in found {
        let mut r = IsolatedRoot { location: loc, multiplicity: 0, poly: s.clone() };
        if r.exact().is_none() {
            // A rational root has the form P/lead; shrink the bracket below the grid spacing.
            r = refine_root(&r, &(&grid * half()))?;
            if let RootLocation::Interval { lo, hi } = &r.location {
                let k = (lo * BigRational::from_integer(lead.clone())).ceil();
                let cand = k / BigRational::from_integer(lead.clone());
                if &cand > lo && &cand < hi && s.eval(&cand).is_zero() {
                    r.location = RootLocation::Exact(cand);
                }
            }
        }
        r.multiplicity = multiplicity_of(&r, &parts);
        if let RootLocation::Interval { .. } = r.location {
            // Keep the factor that owns the root: its degree is smaller.
            let owner = parts.iter().find(|(a, _)| owns(a, &r)).map(|(a, _)| a.clone());
            r.poly = owner.unwrap_or(s.clone());
        }
        roots.push(r);
    }
    roots.sort_by(|a, b| a.bounds().0.cmp(&b.bounds().0));
    Ok(roots)
}

fn owns(a: &RealPoly, r: &IsolatedRoot) -> bool {
    match &r.location {
        RootLocation::Exact(x) => a.eval(x).is_zero(),
        RootLocation::Interval { lo, hi } => a.count_roots(lo, hi) == 1,
    }
}

fn multiplicity_of(r: &IsolatedRoot, parts: &[(RealPoly, u32)]) -> u32 {
    parts.iter().find(|(a, _)| owns(a, r)).map_or(1, |(_, m)| *m)
}

/// Shrink the bracket to width ≤ `width`. Exact roots are returned unchanged.
pub fn refine_root(r: &IsolatedRoot, width: &BigRational) -> Result<IsolatedRoot, RootError> {
    let RootLocation::Interval { lo, hi } = &r.location else {
        return Ok(r.clone());
    };
    if !width.is_positive() {
        return Err(RootError::RequiresPositiveWidth);
    }
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let s_lo = r.poly.sign_at(&lo);
    let use_sturm = s_lo == 0 || r.poly.sign_at(&hi) == 0 || s_lo == r.poly.sign_at(&hi);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) * half();
        let sm = r.poly.sign_at(&mid);
        if sm == 0 {
            return Ok(IsolatedRoot { location: RootLocation::Exact(mid), ..r.clone() });
        }
        let left = if use_sturm { r.poly.count_roots(&lo, &mid) == 1 } else { sm != s_lo };
        if left {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(IsolatedRoot { location: RootLocation::Interval { lo, hi }, ..r.clone() })
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let m = c.abs();
            let cs = rational_to_string(&m);
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{cs}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for RealPoly {
    type Output = RealPoly;
    fn add(self, o: RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RealPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for RealPoly {
    type Output = RealPoly;
    fn sub(self, o: RealPoly) -> RealPoly {
        self + (-o)
    }
}

impl Neg for RealPoly {
    type Output = RealPoly;
    fn neg(self) -> RealPoly {
        RealPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for RealPoly {
    type Output = RealPoly;
    fn mul(self, o: RealPoly) -> RealPoly {
        if self.is_zero() || o.is_zero() {
            return RealPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RealPoly::new(c)
    }
}

impl Zero for RealPoly {
    fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for RealPoly {
    fn one() -> Self {
        RealPoly::from_ints(&[1])
    }
}

/// Closed rational interval, for enclosures of values at irrational points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn magnitude(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) * half()
    }

    /// 1/self, if the interval does not contain zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn eval_poly(p: &RealPoly, x: &Interval) -> Interval {
        p.coeffs.iter().rev().fold(Interval::zero(), |acc, c| acc * x.clone() + Interval::point(c.clone()))
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!([rational_to_string(&self.lo), rational_to_string(&self.hi)])
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval { lo: self.lo + o.lo, hi: self.hi + o.hi }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval { lo: self.lo - o.hi, hi: self.hi - o.lo }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }
}

impl Zero for Interval {
    fn zero() -> Self {
        Interval::point(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

impl One for Interval {
    fn one() -> Self {
        Interval::point(BigRational::one())
    }
}

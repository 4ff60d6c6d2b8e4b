use super::{upoly, Field, FieldError};
use rand::Rng;
use serde_json::{json, Value};

/// K(t) for a base field K. Nesting gives K(t)(s) and so on.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunctionField<F: Field> {
    base: F,
}

/// num/den with gcd 1 and monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn<E> {
    pub num: Vec<E>,
    pub den: Vec<E>,
}

impl<F: Field> RationalFunctionField<F> {
    pub fn new(base: F) -> Self {
        RationalFunctionField { base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    /// The transcendental t.
    pub fn t(&self) -> RatFn<F::Elem> {
        RatFn { num: vec![self.base.zero(), self.base.one()], den: vec![self.base.one()] }
    }

    pub fn from_base(&self, c: F::Elem) -> RatFn<F::Elem> {
        RatFn { num: upoly::constant(&self.base, c), den: vec![self.base.one()] }
    }

    pub fn from_parts(&self, num: Vec<F::Elem>, den: Vec<F::Elem>) -> Result<RatFn<F::Elem>, FieldError> {
        let b = &self.base;
        let den = upoly::trim(b, den);
        if den.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        let num = upoly::trim(b, num);
        if num.is_empty() {
            return Ok(self.zero());
        }
        if den.len() == 1 {
            let c = b.inv(&den[0])?;
            return Ok(RatFn { num: upoly::scale(b, &num, &c), den: vec![b.one()] });
        }
        let g = upoly::gcd(b, &num, &den);
        let num = upoly::divrem(b, &num, &g)?.0;
        let den = upoly::divrem(b, &den, &g)?.0;
        let lead = b.inv(den.last().unwrap())?;
        Ok(RatFn { num: upoly::scale(b, &num, &lead), den: upoly::scale(b, &den, &lead) })
    }

    fn poly_json(&self, p: &[F::Elem]) -> Value {
        Value::Array(p.iter().map(|c| self.base.to_json(c)).collect())
    }

    fn poly_from_json(&self, v: Option<&Value>) -> Result<Vec<F::Elem>, FieldError> {
        v.and_then(Value::as_array)
            .ok_or_else(|| FieldError::Decode("expected a coefficient array".into()))?
            .iter()
            .map(|c| self.base.from_json(c))
            .collect()
    }
}

impl<F: Field> Field for RationalFunctionField<F> {
    type Elem = RatFn<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFn { num: Vec::new(), den: vec![self.base.one()] }
    }
    fn one(&self) -> Self::Elem {
        self.from_base(self.base.one())
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_base(self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        if self.is_zero(a) {
            return b.clone();
        }
        if self.is_zero(b) {
            return a.clone();
        }
        if a.den == b.den {
            return self.from_parts(upoly::add(k, &a.num, &b.num), a.den.clone()).unwrap();
        }
        let num = upoly::add(k, &upoly::mul(k, &a.num, &b.den), &upoly::mul(k, &b.num, &a.den));
        self.from_parts(num, upoly::mul(k, &a.den, &b.den)).unwrap()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFn { num: upoly::neg(&self.base, &a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = &self.base;
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        self.from_parts(upoly::mul(k, &a.num, &b.num), upoly::mul(k, &a.den, &b.den)).unwrap()
    }
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        if a.num.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        self.from_parts(a.den.clone(), a.num.clone())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        let k = &self.base;
        !a.den.is_empty()
            && a.num.iter().chain(&a.den).all(|c| k.contains(c))
            && a.num.last().is_none_or(|c| !k.is_zero(c))
            && k.is_one(a.den.last().unwrap())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let k = &self.base;
        let nd = rng.gen_range(0..=2);
        let num: Vec<_> = (0..=nd).map(|_| k.random(rng)).collect();
        let mut den: Vec<_> = (0..rng.gen_range(0..=1)).map(|_| k.random(rng)).collect();
        den.push(k.one());
        self.from_parts(num, den).unwrap()
    }
    fn to_json(&self, a: &Self::Elem) -> Value {
        json!({"num": self.poly_json(&a.num), "den": self.poly_json(&a.den)})
    }
    fn from_json(&self, v: &Value) -> Result<Self::Elem, FieldError> {
        match v {
            Value::Object(m) if m.contains_key("num") => {
                let num = self.poly_from_json(m.get("num"))?;
                let den = match m.get("den") {
                    Some(_) => self.poly_from_json(m.get("den"))?,
                    None => vec![self.base.one()],
                };
                self.from_parts(num, den)
            }
            _ => Ok(self.from_base(self.base.from_json(v)?)),
        }
    }
    fn descriptor(&self) -> Value {
        json!({"kind": "ratfunc", "base": self.base.descriptor()})
    }
    fn name(&self) -> String {
        format!("{}(t)", self.base.name())
    }
    fn root_of_unity(&self, d: u64) -> Option<Self::Elem> {
        self.base.root_of_unity(d).map(|c| self.from_base(c))
    }
    fn nth_root(&self, a: &Self::Elem, n: u64) -> Option<Self::Elem> {
        if a.num.len() <= 1 && a.den.len() == 1 {
            let c = a.num.first().cloned().unwrap_or_else(|| self.base.zero());
            return self.base.nth_root(&c, n).map(|r| self.from_base(r));
        }
        None
    }
    fn format(&self, a: &Self::Elem) -> String {
        let show = |p: &[F::Elem]| {
            let terms: Vec<String> = p
                .iter()
                .enumerate()
                .filter(|(_, c)| !self.base.is_zero(c))
                .map(|(i, c)| {
                    let c = self.base.format(c);
                    match i {
                        0 => c,
                        1 => format!("({c})*t"),
                        _ => format!("({c})*t^{i}"),
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        };
        if a.den.len() == 1 {
            show(&a.num)
        } else {
            format!("({})/({})", show(&a.num), show(&a.den))
        }
    }
}

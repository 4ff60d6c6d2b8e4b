use super::*;
use crate::field::{FiniteField, RationalFunctionField, Rationals};
use crate::field::Field;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sym<F: Field>(f: &F, a: F::Elem, b: F::Elem) -> QuaternionSymbol<F::Elem> {
    QuaternionSymbol::new(f, a, b).unwrap()
}

#[test]
fn symbol_steps_not_two() {
    let q = Rationals;
    let s = sym(&q, q.from_int(-1), q.from_int(-1));
    let one = q.one();
    let t = step_symbol_not2(&q, &s, 2, &one, &one).unwrap();
    assert_eq!((t.alpha.clone(), t.beta.clone()), (q.from_int(-1), q.from_int(-2)));
    assert_eq!(step_symbol_not2(&q, &s, 1, &one, &q.zero()).unwrap(), s);
    assert_eq!(step_symbol_not2(&q, &s, 2, &one, &q.zero()).unwrap(), s);

    let s = sym(&q, q.from_int(4), q.from_int(3));
    assert_eq!(step_symbol_not2(&q, &s, 2, &q.from_int(2), &one), Err(ChainError::DegenerateResult));
    assert_eq!(step_symbol_not2(&q, &s, 3, &one, &one), Err(ChainError::BadSlot));

    let f2 = FiniteField::new(2, 1).unwrap();
    let s = sym(&f2, f2.one(), f2.one());
    assert_eq!(step_symbol_not2(&f2, &s, 1, &f2.one(), &f2.one()), Err(ChainError::WrongCharacteristic));
}

#[test]
fn symbol_steps_char_two() {
    let f = RationalFunctionField::new(FiniteField::new(2, 1).unwrap());
    let t = f.t();
    let s = sym(&f, t.clone(), t.clone());
    let (zero, one) = (f.zero(), f.one());
    assert_eq!(step_symbol_char2(&f, &s, 1, &zero, &zero).unwrap(), s);
    assert_eq!(step_symbol_char2(&f, &s, 2, &zero, &zero), Err(ChainError::DegenerateResult));
    assert_eq!(step_symbol_char2(&f, &s, 2, &one, &zero).unwrap(), s);
    let r = step_symbol_char2(&f, &s, 2, &zero, &one).unwrap();
    assert_eq!(r.beta, f.mul(&t, &t));
    assert_eq!(step_symbol_char2(&f, &s, 1, &one, &zero).unwrap(), s);
    assert_eq!(step_symbol_char2(&Rationals, &sym(&Rationals, Rationals.one(), Rationals.one()), 1, &Rationals.one(), &Rationals.one()),
        Err(ChainError::WrongCharacteristic));
}

#[test]
fn pair_steps() {
    let base = RationalFunctionField::new(FiniteField::new(2, 1).unwrap());
    let f = RationalFunctionField::new(base.clone());
    let (t, u) = (f.from_base(base.t()), f.t());
    let one = f.one();
    let bq = BiquaternionSymbol::new(&f, t.clone(), u.clone(), f.add(&t, &one), f.mul(&t, &u)).unwrap();
    let zero = f.zero();
    for step in [
        PairStep::OmegaI { a: zero.clone() },
        PairStep::OmegaC { b: zero.clone() },
        PairStep::OmegaS { a: one.clone(), b: zero.clone() },
    ] {
        assert_eq!(step_symbol_pair(&f, &bq, &step).unwrap(), bq);
    }
    assert_eq!(step_symbol_pair(&f, &bq, &PairStep::OmegaS { a: zero.clone(), b: zero.clone() }), Err(ChainError::DegenerateResult));

    let a = f.add(&t, &u);
    let r = step_symbol_pair(&f, &bq, &PairStep::OmegaI { a: a.clone() }).unwrap();
    let shift = f.mul(&f.mul(&a, &a), &f.mul(&bq.first.beta, &bq.second.beta));
    assert_eq!(f.sub(&r.first.alpha, &bq.first.alpha), shift);
    assert_eq!(f.sub(&r.second.alpha, &bq.second.alpha), shift);

    let b = t.clone();
    let r = step_symbol_pair(&f, &bq, &PairStep::OmegaC { b: b.clone() }).unwrap();
    let scale = f.add(&one, &f.mul(&f.mul(&b, &b), &bq.first.beta));
    assert_eq!(f.div(&r.second.beta, &bq.second.beta).unwrap(), scale);
    assert_eq!(r.first.beta, bq.first.beta);

    // 1 + b²β = 0 at β = 1, b = 1
    let bq1 = BiquaternionSymbol::new(&f, t.clone(), one.clone(), u.clone(), one.clone()).unwrap();
    assert_eq!(step_symbol_pair(&f, &bq1, &PairStep::OmegaC { b: one.clone() }), Err(ChainError::DenominatorZero));
}

#[test]
fn canonical_quadruples_verify() {
    let f = FiniteField::new(2, 4).unwrap();
    let g = f.gen();
    let q = canonical_quadruple(&f, &g, &f.add(&g, &f.one()), &f.one(), &f.mul(&g, &g)).unwrap();
    assert_eq!(q.algebra.dim(), 16);
    let v = verify_quadruple(&q);
    assert!(v.holds());
    let s = v.symbol.unwrap();
    assert_eq!(s, BiquaternionSymbol::new(&f, q.params[0].clone(), q.params[1].clone(), q.params[2].clone(), q.params[3].clone()).unwrap());

    let mut swapped = q.clone();
    std::mem::swap(&mut swapped.y, &mut swapped.u);
    assert_eq!(verify_quadruple(&swapped).failing, Some(Relation::XY));

    let mut bad = q.clone();
    bad.x = q.algebra.add(&q.x, &q.y);
    bad.x = q.algebra.mul(&bad.x, &q.z);
    assert!(!verify_quadruple(&bad).holds());

    let back = GeneratorQuadruple::from_json(&f, &q.to_json()).unwrap();
    assert_eq!(back, q);
}

#[test]
fn named_quadruple_steps() {
    let f = RationalFunctionField::new(FiniteField::new(2, 1).unwrap());
    let t = f.t();
    let one = f.one();
    let q = canonical_quadruple(&f, &t, &t, &f.add(&t, &one), &f.mul(&t, &t)).unwrap();
    let bq = q.symbol().unwrap();

    // y ↦ (a + bx)y scales β by a² + ab + b²α
    let (a, b) = (one.clone(), t.clone());
    let step = QuadStep::Lambda { gen: Generator::Y, a: a.clone(), b: b.clone() };
    let r = quadruple_step(&q, &step).unwrap();
    let n = f.sum([f.mul(&a, &a), f.mul(&a, &b), f.mul(&f.mul(&b, &b), &t)].iter());
    assert_eq!(r.symbol().unwrap().first.beta, f.mul(&n, &t));
    assert_eq!(r.symbol().unwrap(), expected_symbol(&f, &bq, &step).unwrap());

    let id = QuadStep::Pair(PairStep::OmegaI { a: f.zero() });
    assert_eq!(quadruple_step(&q, &id).unwrap(), q);

    let oc = QuadStep::Pair(PairStep::OmegaC { b: t.clone() });
    let r = quadruple_step(&q, &oc).unwrap();
    assert!(verify_quadruple(&r).holds());
    assert_eq!(r.symbol().unwrap(), expected_symbol(&f, &bq, &oc).unwrap());

    // β = 1, b = 1: 1 + y squares to zero
    let q1 = canonical_quadruple(&f, &t, &one, &t, &t).unwrap();
    assert_eq!(quadruple_step(&q1, &QuadStep::Pair(PairStep::OmegaC { b: one.clone() })), Err(ChainError::NotInvertible));
}

#[test]
fn omega_s_over_independent_transcendentals() {
    let f1 = RationalFunctionField::new(FiniteField::new(2, 1).unwrap());
    let f2 = RationalFunctionField::new(f1.clone());
    let f3 = RationalFunctionField::new(f2.clone());
    let f4 = RationalFunctionField::new(f3.clone());
    let w = f4.t();
    let v = f4.from_base(f3.t());
    let u = f4.from_base(f3.from_base(f2.t()));
    let t = f4.from_base(f3.from_base(f2.from_base(f1.t())));
    let q = canonical_quadruple(&f4, &t, &u, &v, &w).unwrap();
    let bq = q.symbol().unwrap();
    let step = QuadStep::Pair(PairStep::OmegaS { a: f4.one(), b: f4.one() });
    let r = quadruple_step(&q, &step).unwrap();
    let got = r.symbol().unwrap();
    assert_eq!(got, expected_symbol(&f4, &bq, &step).unwrap());
    let n = f4.sum([f4.one(), f4.one(), f4.add(&t, &v)].iter());
    assert_eq!(got.first.beta, f4.mul(&n, &u));
    assert_eq!(got.second.beta, f4.mul(&n, &w));
}

fn random_step<F: Field, R: Rng>(f: &F, rng: &mut R) -> QuadStep<F::Elem> {
    let (a, b) = (f.random(rng), f.random(rng));
    match rng.gen_range(0..4) {
        0 => QuadStep::Pair(PairStep::OmegaS { a, b }),
        1 => QuadStep::Pair(PairStep::OmegaI { a }),
        2 => QuadStep::Pair(PairStep::OmegaC { b }),
        _ => {
            let gen = [Generator::X, Generator::Y, Generator::Z, Generator::U][rng.gen_range(0..4)];
            QuadStep::Lambda { gen, a, b }
        }
    }
}

/// Runs random steps until `target` succeed, restarting from a fresh instance
/// every `chain` steps; rejected steps must be rejected at the symbol level too.
fn random_walk<F: Field>(f: &F, target: usize, chain: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let e = f.random(rng);
        if !f.is_zero(&e) {
            return e;
        }
    };
    let mut done = 0;
    let mut q = None;
    let mut len = 0;
    while done < target {
        if q.is_none() || len == chain {
            let p: Vec<_> = (0..4).map(|_| nonzero(&mut rng)).collect();
            q = Some(canonical_quadruple(f, &p[0], &p[1], &p[2], &p[3]).unwrap());
            len = 0;
        }
        let cur = q.as_ref().unwrap();
        let bq = cur.symbol().unwrap();
        let step = random_step(f, &mut rng);
        let expected = expected_symbol(f, &bq, &step);
        match quadruple_step(cur, &step) {
            Ok(next) => {
                let v = verify_quadruple(&next);
                assert!(v.holds(), "{step:?}");
                assert_eq!(v.symbol.unwrap(), expected.unwrap(), "{step:?}");
                q = Some(next);
                len += 1;
                done += 1;
            }
            Err(ChainError::NotInvertible) => assert_eq!(expected, Err(ChainError::DenominatorZero)),
            Err(e) => assert_eq!(expected, Err(e)),
        }
    }
}

#[test]
fn random_steps_over_f16() {
    random_walk(&FiniteField::new(2, 4).unwrap(), 100, 100, 7);
}

#[test]
fn random_steps_over_f2t() {
    random_walk(&RationalFunctionField::new(FiniteField::new(2, 1).unwrap()), 100, 4, 11);
}

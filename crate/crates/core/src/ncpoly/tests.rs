use super::*;
use crate::quaternion::{Quat, Quaternion};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(s: &str) -> Quaternion {
    s.parse().unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn word(parts: &[&str]) -> GeneralPoly {
    GeneralPoly::word(&parts.iter().map(|s| q(s)).collect::<Vec<_>>()).unwrap()
}

fn sum(ws: &[GeneralPoly]) -> GeneralPoly {
    ws.iter().fold(GeneralPoly::zero(), |a, w| a.add(w))
}

fn random_quat(rng: &mut impl Rng) -> Quaternion {
    let mut c = || rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
    Quat::new(c(), c(), c(), c())
}

/// One or two nonzero coordinates, so words stay small after expansion.
fn sparse_quat(rng: &mut impl Rng) -> Quaternion {
    let mut c = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
    for _ in 0..rng.gen_range(1..=2) {
        let mut v = rng.gen_range(-3..=3);
        if v == 0 {
            v = 1;
        }
        c[rng.gen_range(0..4)] = rat(v, rng.gen_range(1..=2));
    }
    Quat::from_coords(c)
}

fn random_word(rng: &mut impl Rng, max_deg: usize) -> GeneralPoly {
    let deg = rng.gen_range(0..=max_deg);
    let qs: Vec<Quaternion> = (0..=deg).map(|_| sparse_quat(rng)).collect();
    GeneralPoly::word(&qs).unwrap()
}

fn random_general(rng: &mut impl Rng, max_deg: usize) -> GeneralPoly {
    (0..rng.gen_range(1..=3)).fold(GeneralPoly::zero(), |acc, _| acc.add(&random_word(rng, max_deg)))
}

fn golden_inverses() -> Vec<GeneralPoly> {
    let x1 = sum(&[word(&["1", "1"]), word(&["-i", "i"]), word(&["-j", "j"]), word(&["-ij", "ij"])]).scale(&rat(1, 4));
    let x2 = sum(&[word(&["i", "1"]), word(&["ij", "j"]), word(&["-j", "ij"]), word(&["1", "i"])]).scale(&rat(-1, 4));
    let x3 = sum(&[word(&["j", "1"]), word(&["-ij", "i"]), word(&["i", "ij"]), word(&["1", "j"])]).scale(&rat(-1, 4));
    let x4 = sum(&[word(&["ij", "1"]), word(&["-i", "j"]), word(&["j", "i"]), word(&["1", "ij"])]).scale(&rat(-1, 4));
    vec![x1, x2, x3, x4]
}

#[test]
fn standard_substitution() {
    let f = StandardPoly::parse(&["1", "0", "1"]).unwrap();
    assert!(f.eval(&q("i")).is_zero());
    let cubic = StandardPoly::parse(&["i - j", "2 + ij", "0", "1"]).unwrap();
    assert!(cubic.eval(&q("j")).is_zero());
    assert!(cubic.eval(&q("i + j")).is_zero());
}

#[test]
fn general_substitution_is_multiplicative() {
    let g = GeneralPoly::from_standard(&StandardPoly::linear(&q("j")));
    let h = GeneralPoly::from_standard(&StandardPoly::linear(&q("-j")));
    let gh = g.mul(&h).unwrap();
    assert_eq!(gh.eval(&q("i")), q("2ij"));
    // the standard product loses this: (z - j)(z + j) = z² + 1 vanishes at i
    let std = StandardPoly::linear(&q("j")).mul(&StandardPoly::linear(&q("-j"))).unwrap();
    assert_ne!(std.eval(&q("i")), gh.eval(&q("i")));

    assert_eq!(word(&["1", "i", "1"]).eval(&q("j")), q("i"));

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let (f, g) = (random_word(&mut rng, 3), random_word(&mut rng, 3));
        let z0 = random_quat(&mut rng);
        assert_eq!(f.mul(&g).unwrap().eval(&z0), f.eval(&z0) * g.eval(&z0));
        let r = Quaternion::scalar(rat(rng.gen_range(-4..=4), 3));
        assert_eq!(f.eval(&r), f.to_standard().eval(&r));
    }
}

#[test]
fn to_standard_examples() {
    let f = word(&["1", "i", "1"]).add(&word(&["j", "i"]));
    assert_eq!(f.to_standard(), StandardPoly::parse(&["0", "-ij", "i"]).unwrap());
    let s = StandardPoly::parse(&["1 + i", "j", "0", "2ij"]).unwrap();
    assert_eq!(GeneralPoly::from_standard(&s).to_standard(), s);
    let comm = word(&["1", "j"]).sub(&word(&["j", "1"]));
    assert!(!comm.is_zero());
    assert!(comm.to_standard().is_zero());
}

#[test]
fn h_of_z_and_closed_form_inverse() {
    let hz = h_iso(&GeneralPoly::z());
    let expect = FreeMonoidPoly::from_terms((0..4).map(|a| (vec![a as u8], Quaternion::basis(a))));
    assert_eq!(hz, expect);
    for (a, g) in golden_inverses().iter().enumerate() {
        assert_eq!(&h_inv_var(a), g, "x{}", a + 1);
        assert_eq!(h_iso(g), FreeMonoidPoly::var(a));
    }
}

#[test]
fn coimage_matches_golden() {
    let gold = golden_inverses();
    for k in 1..=4 {
        let p = coimage_algorithm(k).unwrap();
        assert_eq!(p, gold[k - 1], "x{k}");
    }
    assert_eq!(coimage_algorithm(0), Err(NcError::BadIndex(0)));
    assert_eq!(coimage_algorithm(5), Err(NcError::BadIndex(5)));
}

#[test]
fn h_is_an_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (f, g) = (random_word(&mut rng, 2), random_word(&mut rng, 2));
        let lhs = h_iso(&f.mul(&g).unwrap());
        let rhs = h_iso(&f).mul(&h_iso(&g)).unwrap();
        assert_eq!(lhs, rhs);
    }
    for _ in 0..100 {
        let f = random_general(&mut rng, 3);
        assert_eq!(h_inv(&h_iso(&f)).unwrap(), f);
        let mut items = Vec::new();
        for _ in 0..3 {
            let len = rng.gen_range(0..=3);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..4)).collect();
            items.push((w, random_quat(&mut rng)));
        }
        let g = FreeMonoidPoly::from_terms(items);
        assert_eq!(h_iso(&h_inv(&g).unwrap()), g);
    }
}

#[test]
fn conjugate_polynomial() {
    let zbar = GeneralPoly::z().conjugate();
    let expect = sum(&[word(&["1", "1"]), word(&["i", "i"]), word(&["j", "j"]), word(&["ij", "ij"])]).scale(&rat(-1, 2));
    assert_eq!(zbar, expect);
    assert_eq!(zbar.conjugate(), GeneralPoly::z());
    let c = GeneralPoly::constant(&q("1 + 2i - j"));
    assert_eq!(c.conjugate(), GeneralPoly::constant(&q("1 - 2i + j")));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = random_general(&mut rng, 3);
    let fc = f.conjugate();
    for _ in 0..100 {
        let z0 = random_quat(&mut rng);
        assert_eq!(fc.eval(&z0), f.eval(&z0).conj());
    }
}

#[test]
fn wedderburn_factor_examples() {
    let cubic = StandardPoly::parse(&["i - j", "2 + ij", "0", "1"]).unwrap();
    let p = wedderburn_factor(&cubic, &q("j")).unwrap();
    assert_eq!(p, StandardPoly::parse(&["1 + ij", "j", "1"]).unwrap());
    let a = q("3 - i + 2ij");
    assert_eq!(wedderburn_factor(&StandardPoly::linear(&a), &a).unwrap(), StandardPoly::constant(Quaternion::one()));
    assert_eq!(wedderburn_factor(&cubic, &q("i")), Err(NcError::NotARoot));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for deg in 1..=6 {
        let mut f = StandardPoly::constant(Quaternion::one());
        for _ in 0..deg - 1 {
            f = f.mul(&StandardPoly::linear(&random_quat(&mut rng))).unwrap();
        }
        let a = random_quat(&mut rng);
        let full = f.mul(&StandardPoly::linear(&a)).unwrap();
        let p = wedderburn_factor(&full, &a).unwrap();
        assert_eq!(p, f);
        assert_eq!(p.mul(&StandardPoly::linear(&a)).unwrap(), full);
    }
}

#[test]
fn wedderburn_transport_examples() {
    let one = Quaternion::one();
    let two = Quaternion::scalar(rat(2, 1));
    let b = wedderburn_transport(&StandardPoly::linear(&one), &StandardPoly::linear(&two), &one).unwrap();
    assert_eq!(b, one);

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let z0 = random_quat(&mut rng);
        let h = StandardPoly::linear(&random_quat(&mut rng));
        let hz = h.eval(&z0);
        if hz.is_zero() {
            continue;
        }
        let g = StandardPoly::linear(&(&(&hz * &z0) * &hz.inv().unwrap()));
        let f = g.mul(&h).unwrap();
        assert!(f.eval(&z0).is_zero());
        let b = wedderburn_transport(&g, &h, &z0).unwrap();
        assert!(g.eval(&b).is_zero());
    }

    let p = StandardPoly::parse(&["1 + ij", "j", "1"]).unwrap();
    let h = StandardPoly::linear(&q("j"));
    assert_eq!(wedderburn_transport(&p, &h, &q("j")), Err(NcError::RootOfRightFactor));
}

#[test]
fn json_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = random_general(&mut rng, 3);
    assert_eq!(GeneralPoly::from_json(&f.to_json()).unwrap(), f);
    let s = StandardPoly::parse(&["i - j", "2 + ij", "0", "1"]).unwrap();
    assert_eq!(StandardPoly::from_json(&s.to_json()).unwrap(), s);
    assert!(matches!(GeneralPoly::z().mul(&GeneralPoly::word(&vec![Quaternion::one(); 17]).unwrap()), Err(NcError::DegreeCap(_))));
}

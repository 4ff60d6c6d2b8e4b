//! One line per acceptance criterion. Criteria 1 and 2 state reference values
//! that do not hold exactly; they are checked as stated and reported as FAIL.

use num_rational::BigRational;
use num_traits::{One, Zero};
use quatalg::algebra::{
    artin_schreier_decomposition, brute_force_d_central, build_vk, cyclic_charp_algebra, eigenvector_decomposition,
    exponentiation_form, is_d_central_space, multi_indices, pcentral_charp_decomposition, symbol_algebra,
    symbol_tensor, AlgElement, StructureAlgebra, SymbolTensor,
};
use quatalg::chain::{
    canonical_quadruple, expected_symbol, quadruple_step, verify_quadruple, ChainError, Generator, PairStep, QuadStep,
};
use quatalg::eigen::{eigen_condition_4x4, left_eigenvalues_2x2, study_determinant, QuatMatrix};
use quatalg::field::{CyclotomicField, Field, FiniteField, RationalFunctionField, Rationals};
use quatalg::linearize::{linearize, verify_linearization, Case, HomogeneousForm};
use quatalg::ncpoly::{coimage_algorithm, h_inv, h_iso, GeneralPoly, StandardPoly};
use quatalg::quaternion::{Quat, Quaternion};
use quatalg::realpoly::RealPoly;
use quatalg::solver::{pure_imaginary_roots, solve_cubic_with_imaginary_root};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(s: &str) -> Quaternion {
    s.parse().expect("literal quaternion")
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn lin(c: &[i64]) -> RealPoly {
    RealPoly::from_ints(c)
}

fn product_of_linears(roots: &[Quaternion]) -> StandardPoly {
    roots.iter().fold(StandardPoly::constant(Quaternion::one()), |acc, a| acc.mul(&StandardPoly::linear(a)).unwrap())
}

fn cubic_example() -> Outcome {
    let start = Instant::now();
    let f = StandardPoly::parse(&["i - j", "2 + ij", "0", "1"]).map_err(|e| e.to_string())?;
    let rep = solve_cubic_with_imaginary_root(&f).map_err(|e| e.to_string())?;
    let im = &rep.imaginary;
    // g = −N + 2 + ij, h = i − j
    let g = Quat::new(lin(&[2, -1]), lin(&[]), lin(&[]), lin(&[1]));
    let h = Quat::new(lin(&[]), lin(&[1]), lin(&[-1]), lin(&[]));
    ensure(im.g == g, || format!("g = {:?}", im.g))?;
    ensure(im.h == h, || format!("h = {:?}", im.h))?;
    ensure(im.norm_poly == lin(&[-2, 5, -4, 1]), || format!("norm poly {}", im.norm_poly))?;
    let mut roots: Vec<String> = rep.report.exact_roots().iter().map(Quaternion::to_string).collect();
    roots.sort();
    ensure(roots == ["i + j", "j"] && rep.report.families.is_empty(), || format!("roots {roots:?}"))?;
    let ours = rep.factorization.clone().unwrap_or_default();
    ensure(!ours.is_empty() && product_of_linears(&ours) == f, || "computed factorization does not expand to f".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    let stated = [q("-1 - i - ij"), q("i"), q("j")];
    let expanded = product_of_linears(&stated);
    ensure(expanded == f, || {
        format!(
            "g, h, norm equation and roots match; stated factorization (z+1+i+ij)(z-i)(z-j) expands to {expanded}, \
             computed one is {}",
            ours.iter().map(|a| format!("(z - ({a}))")).collect::<String>()
        )
    })?;
    Ok(format!("{elapsed:?}"))
}

fn transported_root() -> Outcome {
    let a = q("-i - 2j");
    let t = &(&a * &q("-i - j")) * &a.inv().map_err(|e| e.to_string())?;
    let p = StandardPoly::parse(&["1 + ij", "j", "1"]).map_err(|e| e.to_string())?;
    let stated = Quat::new(rat(0, 1), rat(2, 5), rat(4, 5), rat(0, 1));
    ensure(t == stated && p.eval(&t).is_zero(), || {
        format!(
            "conjugate is {t}, p(conjugate) = {}, p((2i+4j)/5) = {}",
            p.eval(&t),
            p.eval(&stated)
        )
    })?;
    Ok(String::new())
}

fn lift<F: Field>(field: &F, f: &HomogeneousForm<BigRational>) -> HomogeneousForm<F::Elem> {
    // sampled coefficients are integers
    let items = f.coeffs().map(|(k, c)| (k.clone(), field.from_int(i64::try_from(c.to_integer()).unwrap())));
    HomogeneousForm::new(field, f.d, f.n, items).unwrap()
}

fn linearizes<F: Field>(field: &F, f: &HomogeneousForm<BigRational>, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let fc = lift(field, f);
    let rep = linearize(field, &fc, Case::Graded).map_err(|e| e.to_string())?;
    let v = verify_linearization(field, &rep, &fc, 2, rng);
    ensure(v.symbolic && v.passes(), || format!("failed on {:?} over {}", f, field.name()))
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|x| rat(*x, 1)).collect()).collect()
}

fn form(d: u32, n: usize, items: &[(&[u32], i64)]) -> HomogeneousForm<BigRational> {
    HomogeneousForm::new(&Rationals, d, n, items.iter().map(|(k, c)| (k.to_vec(), rat(*c, 1)))).unwrap()
}

fn linearization() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (c3, c4) = (CyclotomicField::new(3).unwrap(), CyclotomicField::new(4).unwrap());
    for _ in 0..200 {
        let (n, d) = (rng.gen_range(1..=3usize), rng.gen_range(2..=4u32));
        let items: Vec<_> = multi_indices(n, d).into_iter().map(|m| (m, rat(rng.gen_range(-2..=2), 1))).collect();
        let f = HomogeneousForm::new(&Rationals, d, n, items).unwrap();
        match d {
            2 => linearizes(&Rationals, &f, &mut rng)?,
            3 => linearizes(&c3, &f, &mut rng)?,
            _ => linearizes(&c4, &f, &mut rng)?,
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("200 forms took {elapsed:?}"))?;

    let notirred = form(2, 2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
    let xs = linearize(&Rationals, &notirred, Case::Graded).unwrap().matrices(&Rationals).unwrap();
    let want = vec![
        ints(&[&[0, 0, 1, 0], &[2, 0, 0, -1], &[1, 0, 0, 0], &[0, -1, 2, 0]]),
        ints(&[&[1, 1, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 1], &[0, 0, 0, 1]]),
    ];
    ensure(xs == want, || format!("a²+2ab+b² matrices {xs:?}"))?;
    let notrank = form(2, 2, &[(&[1, 1], 1)]);
    let xs = linearize(&Rationals, &notrank, Case::Graded).unwrap().matrices(&Rationals).unwrap();
    ensure(xs == vec![ints(&[&[0, 0], &[1, 0]]), ints(&[&[0, 1], &[0, 0]])], || format!("ab matrices {xs:?}"))?;
    Ok(format!("200 forms in {elapsed:?}"))
}

fn eigen_parts<F: Field>(a: &StructureAlgebra<F>, z: &AlgElement<F::Elem>, x: &AlgElement<F::Elem>, d: u64, rho: &F::Elem) -> bool {
    let Ok(parts) = eigenvector_decomposition(a, z, x, d, rho) else { return false };
    &a.sum(&parts) == z
        && parts.iter().enumerate().all(|(k, zk)| a.mul(zk, x) == a.scale(&a.mul(x, zk), &a.field().pow(rho, k as u64)))
}

fn charp_parts<F: Field>(a: &StructureAlgebra<F>, z: &AlgElement<F::Elem>, x: &AlgElement<F::Elem>, y: &AlgElement<F::Elem>, p: u64) -> bool {
    let Ok(asd) = artin_schreier_decomposition(a, z, x, p) else { return false };
    let as_ok = &a.sum(&asd) == z
        && asd.iter().enumerate().all(|(k, zk)| a.commutator(zk, x) == a.scale(zk, &a.field().from_int(k as i64)));
    let Ok(pc) = pcentral_charp_decomposition(a, z, y, p) else { return false };
    let p = p as usize;
    as_ok
        && &a.sub(&pc[p - 1], &pc[p - 2]) == z
        && a.is_zero(&a.commutator(&pc[0], y))
        && (1..p).all(|k| a.commutator(&pc[k], y) == pc[k - 1])
}

fn decompositions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for d in [2u64, 3, 5] {
        let f = CyclotomicField::new(d).unwrap();
        let s = symbol_algebra(&f, d, &f.rho(), &f.from_int(2), &f.from_int(-3)).unwrap();
        let a = &s.algebra;
        for _ in 0..100 {
            let coords = (0..a.dim()).map(|_| if rng.gen_bool(0.4) { f.random(&mut rng) } else { f.zero() }).collect();
            let z = a.element(coords).unwrap();
            ensure(eigen_parts(a, &z, &s.x, d, &f.rho()), || format!("eigenvector decomposition, d = {d}"))?;
        }
    }
    let f9 = FiniteField::new(3, 2).unwrap();
    let s = cyclic_charp_algebra(&f9, 3, &f9.gen(), &f9.from_int(2)).unwrap();
    for _ in 0..50 {
        let z = s.algebra.element((0..9).map(|_| f9.random(&mut rng)).collect()).unwrap();
        ensure(charp_parts(&s.algebra, &z, &s.x, &s.y, 3), || "F9 decompositions".into())?;
    }
    let f2t = RationalFunctionField::new(FiniteField::new(2, 1).unwrap());
    let t = f2t.t();
    let s = cyclic_charp_algebra(&f2t, 2, &t, &f2t.add(&t, &f2t.one())).unwrap();
    for _ in 0..50 {
        let z = s.algebra.element((0..4).map(|_| f2t.random(&mut rng)).collect()).unwrap();
        ensure(charp_parts(&s.algebra, &z, &s.x, &s.y, 2), || "F2(t) decompositions".into())?;
    }
    Ok(String::new())
}

fn tensor_of(d: u64, k: usize) -> (CyclotomicField, SymbolTensor<CyclotomicField>) {
    let f = CyclotomicField::new(d).unwrap();
    let params: Vec<_> = (0..k).map(|i| (f.from_int(2 + 3 * i as i64), f.from_int(3 + 2 * i as i64))).collect();
    let st = symbol_tensor(&f, d, &f.rho(), &params).unwrap();
    (f, st)
}

fn oracle_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut perturbed = 0;
    for d in [2u64, 3] {
        let (f, st) = tensor_of(d, 2);
        let a = &st.algebra;
        let samples = [f.zero(), f.one(), f.from_int(-1)];
        for k in 1..=2 {
            let v = build_vk(&st, k).map_err(|e| e.to_string())?;
            let fast = is_d_central_space(a, &v, d as u32, &mut rng).holds;
            ensure(fast && brute_force_d_central(a, &v, d, &samples), || format!("V_{k}, d = {d}"))?;
        }
        let target = perturbed + 10;
        while perturbed < target {
            let k = rng.gen_range(1..=2);
            let mut v = build_vk(&st, k).unwrap();
            let (i, j) = (rng.gen_range(0..v.len()), rng.gen_range(0..a.dim()));
            v[i] = a.add(&v[i], &a.basis(j));
            if a.rank_of(&v) < v.len() {
                continue;
            }
            let verdict = is_d_central_space(a, &v, d as u32, &mut rng);
            ensure(verdict.holds == brute_force_d_central(a, &v, d, &samples), || "perturbation disagreement".into())?;
            // bumps that stay d-central only need agreement
            if verdict.holds {
                continue;
            }
            ensure(verdict.witness.is_some(), || "false verdict without witness".into())?;
            perturbed += 1;
        }
    }
    Ok(format!("{perturbed} perturbations"))
}

fn vk_dimensions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (d, k) in [(2u64, 1usize), (2, 2), (3, 1), (3, 2)] {
        let (_, st) = tensor_of(d, k);
        let vk = build_vk(&st, k).map_err(|e| e.to_string())?;
        let dim = st.algebra.rank_of(&vk);
        ensure(dim == d as usize * k + 1, || format!("dim V_{k} = {dim} for d = {d}"))?;
        ensure(is_d_central_space(&st.algebra, &vk, d as u32, &mut rng).holds, || format!("V_{k}, d = {d}"))?;
    }
    let (f, st) = tensor_of(3, 2);
    let a = &st.algebra;
    let (x, y, z, w) = (&st.xs[0], &st.ys[0], &st.xs[1], &st.ys[1]);
    let big_x = a.mul_all([w, y, x]);
    let big_y = a.sum(&[y.clone(), a.pow(x, 2), a.mul_all([z, z, y, x])]);
    let basis = [big_x.clone(), big_y.clone()];
    ensure(is_d_central_space(a, &basis, 3, &mut rng).holds, || "span{wyx, y+x²+z²yx} not 3-central".into())?;
    let form = exponentiation_form(a, &basis, 3).map_err(|e| e.to_string())?;
    let cx = a.scalar_value(&a.pow(&big_x, 3)).unwrap();
    let cy = a.scalar_value(&a.pow(&big_y, 3)).unwrap();
    let expect = HomogeneousForm::new(&f, 3, 2, [(vec![3, 0], cx), (vec![0, 3], cy)]).unwrap();
    ensure(form.is_diagonal() && form == expect, || "exponentiation form is not diagonal".into())?;
    Ok(String::new())
}

fn random_step<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> QuadStep<F::Elem> {
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

/// `target` accepted steps, restarting from a fresh instance every `chain` steps.
fn walk<F: Field>(f: &F, target: usize, chain: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let e = f.random(rng);
        if !f.is_zero(&e) {
            break e;
        }
    };
    let (mut done, mut len, mut rejected) = (0, 0, 0);
    let mut cur = None;
    while done < target {
        if cur.is_none() || len == chain {
            let p: Vec<_> = (0..4).map(|_| nonzero(&mut rng)).collect();
            cur = Some(canonical_quadruple(f, &p[0], &p[1], &p[2], &p[3]).map_err(|e| e.to_string())?);
            len = 0;
        }
        let q = cur.as_ref().unwrap();
        let bq = q.symbol().ok_or("canonical quadruple has no symbol")?;
        let step = random_step(f, &mut rng);
        let expected = expected_symbol(f, &bq, &step);
        match quadruple_step(q, &step) {
            Ok(next) => {
                let v = verify_quadruple(&next);
                ensure(v.holds(), || format!("relations fail after {step:?}"))?;
                ensure(v.symbol.as_ref() == expected.as_ref().ok(), || format!("symbol mismatch after {step:?}"))?;
                cur = Some(next);
                len += 1;
                done += 1;
            }
            Err(e) => {
                let agree = match e {
                    ChainError::NotInvertible => expected == Err(ChainError::DenominatorZero),
                    e => expected == Err(e),
                };
                ensure(agree, || format!("rejection differs from symbol rewrite for {step:?}"))?;
                rejected += 1;
            }
        }
    }
    Ok(rejected)
}

fn chain_steps() -> Outcome {
    let r16 = walk(&FiniteField::new(2, 4).unwrap(), 100, 100, 7)?;
    let r2t = walk(&RationalFunctionField::new(FiniteField::new(2, 1).unwrap()), 100, 4, 11)?;
    Ok(format!("rejected degenerate steps: {r16} over F16, {r2t} over F2(t)"))
}

fn random_quat(rng: &mut ChaCha8Rng, r: i64) -> Quaternion {
    let mut c = || BigRational::new(rng.gen_range(-r..=r).into(), rng.gen_range(1..=2).into());
    Quat::new(c(), c(), c(), c())
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> QuatMatrix {
    QuatMatrix::new(n, n, (0..n * n).map(|_| random_quat(rng, 2)).collect()).unwrap()
}

/// A 2×2 matrix with (1, w) a left eigenvector for λ.
fn planted(lambda: &Quaternion, b: &Quaternion, d: &Quaternion, w: &Quaternion) -> QuatMatrix {
    let a = lambda - &(b * w);
    let c = &(lambda * w) - &(d * w);
    QuatMatrix::from_rows(vec![vec![a, b.clone()], vec![c, d.clone()]]).unwrap()
}

fn residual_zero(m: &QuatMatrix, lambda: &Quaternion, v: &[Quaternion; 2]) -> bool {
    !(v[0].is_zero() && v[1].is_zero()) && m.apply(v).unwrap().iter().zip(v).all(|(x, y)| *x == lambda * y)
}

fn solves_planted(m: &QuatMatrix, lambda: &Quaternion) -> bool {
    let Ok(rep) = left_eigenvalues_2x2(m) else { return false };
    let exact = rep.pairs.iter().any(|p| {
        let vec: Vec<_> = p.vector.iter().filter_map(|c| c.exact().cloned()).collect();
        p.value.exact() == Some(lambda) && vec.len() == 2 && residual_zero(m, lambda, &[vec[0].clone(), vec[1].clone()])
    });
    // otherwise λ = d − cμ for μ on a reported sphere, with eigenvector (−μ, 1)
    exact
        || rep.families.iter().any(|fam| {
            let Ok(cinv) = fam.c.inv() else { return false };
            let mu = &cinv * &(&fam.d - lambda);
            mu.re() == fam.mu.re
                && fam.mu.norm.exact() == Some(&mu.norm())
                && residual_zero(m, lambda, &[Quaternion::zero() - mu, Quaternion::one()])
        })
}

fn eigenvalues() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in 0..50 {
        let l = random_quat(&mut rng, 3);
        let (b, d) = (random_quat(&mut rng, 2), random_quat(&mut rng, 2));
        let w = loop {
            let w = random_quat(&mut rng, 2);
            if !w.is_zero() {
                break w;
            }
        };
        let m = planted(&l, &b, &d, &w);
        ensure(solves_planted(&m, &l), || format!("planted matrix {t} missed {l}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut pairs = 0;
    while pairs < 50 {
        let m = random_matrix(&mut rng, 4);
        if m.block(2, 0, 2, 2).inverse().is_err() {
            continue;
        }
        let lambda = random_quat(&mut rng, 2);
        let c = eigen_condition_4x4(&m, &lambda).map_err(|e| e.to_string())?;
        ensure(c.agrees(), || format!("4x4 condition disagrees with elimination: {c:?}"))?;
        pairs += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for t in 0..100 {
        let n = 1 + t % 3;
        let (a, b) = (random_matrix(&mut rng, n), random_matrix(&mut rng, n));
        let ab = study_determinant(&a.mul(&b).unwrap()).unwrap();
        let prod = study_determinant(&a).unwrap() * study_determinant(&b).unwrap();
        ensure(ab == prod && ab.im.is_zero(), || format!("Study determinant not multiplicative, n = {n}"))?;
    }
    Ok(String::new())
}

fn sparse_quat(rng: &mut ChaCha8Rng) -> Quaternion {
    let mut c = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
    for _ in 0..rng.gen_range(1..=2) {
        let v = match rng.gen_range(-3..=3) {
            0 => 1,
            v => v,
        };
        c[rng.gen_range(0..4)] = rat(v, rng.gen_range(1..=2));
    }
    Quat::from_coords(c)
}

fn random_general(rng: &mut ChaCha8Rng) -> GeneralPoly {
    (0..rng.gen_range(1..=3)).fold(GeneralPoly::zero(), |acc, _| {
        let qs: Vec<_> = (0..=rng.gen_range(0..=3)).map(|_| sparse_quat(rng)).collect();
        acc.add(&GeneralPoly::word(&qs).unwrap())
    })
}

fn word(parts: &[&str]) -> GeneralPoly {
    GeneralPoly::word(&parts.iter().map(|s| q(s)).collect::<Vec<_>>()).unwrap()
}

fn combo(words: [[&str; 2]; 4], s: BigRational) -> GeneralPoly {
    words.iter().fold(GeneralPoly::zero(), |acc, w| acc.add(&word(w))).scale(&s)
}

fn isomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let f = random_general(&mut rng);
        ensure(h_inv(&h_iso(&f)).ok().as_ref() == Some(&f), || format!("h_inv(h_iso(f)) != f for {f}"))?;
    }
    let gold = [
        combo([["1", "1"], ["-i", "i"], ["-j", "j"], ["-ij", "ij"]], rat(1, 4)),
        combo([["i", "1"], ["ij", "j"], ["-j", "ij"], ["1", "i"]], rat(-1, 4)),
        combo([["j", "1"], ["-ij", "i"], ["i", "ij"], ["1", "j"]], rat(-1, 4)),
        combo([["ij", "1"], ["-i", "j"], ["j", "i"], ["1", "ij"]], rat(-1, 4)),
    ];
    for (k, g) in gold.iter().enumerate() {
        let p = coimage_algorithm(k + 1).map_err(|e| e.to_string())?;
        ensure(&p == g, || format!("co-image of x{} is {p}", k + 1))?;
    }
    let product = GeneralPoly::from_standard(&StandardPoly::linear(&q("j")))
        .mul(&GeneralPoly::from_standard(&StandardPoly::linear(&q("-j"))))
        .map_err(|e| e.to_string())?;
    let at_i = product.eval(&q("i"));
    ensure(at_i == q("2ij"), || format!("(z-j)(z+j) at i is {at_i}"))?;
    let standard = StandardPoly::linear(&q("j")).mul(&StandardPoly::linear(&q("-j"))).unwrap().eval(&q("i"));
    ensure(standard != at_i, || "standard substitution agrees".into())?;
    Ok(String::new())
}

fn infinitude() -> Outcome {
    let flagged = |c: [&str; 3]| -> Result<bool, String> {
        let f = StandardPoly::parse(&c).map_err(|e| e.to_string())?;
        Ok(!pure_imaginary_roots(&f).map_err(|e| e.to_string())?.report.families.is_empty())
    };
    ensure(flagged(["1", "0", "1"])?, || "z²+1 not flagged".into())?;
    ensure(!flagged(["ij", "-i - j", "1"])?, || "z²−(i+j)z+ij flagged".into())?;
    Ok(String::new())
}

#[test]
fn acceptance() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "worked cubic", cubic_example),
        (2, "transported root", transported_root),
        (3, "linearization identity", linearization),
        (4, "decompositions", decompositions),
        (5, "d-centrality oracle", oracle_agreement),
        (6, "V_k dimensions", vk_dimensions),
        (7, "chain steps", chain_steps),
        (8, "eigenvalues", eigenvalues),
        (9, "isomorphism suite", isomorphism),
        (10, "infinitude detection", infinitude),
    ];
    // straight to the handle so the lines show without --nocapture
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (n, name, run) in criteria {
        let line = match run() {
            Ok(note) if note.is_empty() => format!("[PASS] {n}: {name}"),
            Ok(note) => format!("[PASS] {n}: {name} ({note})"),
            Err(why) => {
                failed.push(n);
                format!("[FAIL] {n}: {name} ({why})")
            }
        };
        writeln!(out, "{line}").unwrap();
    }
    // 1 and 2 fail on their stated reference values; anything else is a regression
    assert!(failed.iter().all(|n| [1, 2].contains(n)), "unexpected failures: {failed:?}");
}

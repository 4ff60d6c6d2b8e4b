use super::AlgebraError;
use crate::field::Field;
use crate::linalg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub const DIM_CAP: usize = 256;
/// Above this dimension associativity is checked on sampled basis triples.
pub const EXHAUSTIVE_ASSOC_CAP: usize = 81;
const SAMPLED_TRIPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgElement<E> {
    pub coords: Vec<E>,
}

type Sparse<E> = Vec<(usize, E)>;

#[derive(Debug, Clone, PartialEq)]
pub struct StructureAlgebra<F: Field> {
    field: F,
    dim: usize,
    /// e_i e_j at index i·dim + j, as sparse coordinates.
    table: Vec<Sparse<F::Elem>>,
    unit: AlgElement<F::Elem>,
    labels: Vec<String>,
}

impl<F: Field> StructureAlgebra<F> {
    /// Validates the dimension cap, the unit and associativity.
    pub fn from_table(
        field: F,
        dim: usize,
        table: Vec<Sparse<F::Elem>>,
        unit: AlgElement<F::Elem>,
        labels: Vec<String>,
    ) -> Result<Self, AlgebraError> {
        Self::assemble(field, dim, table, unit, labels, true)
    }

    fn assemble(
        field: F,
        dim: usize,
        table: Vec<Sparse<F::Elem>>,
        unit: AlgElement<F::Elem>,
        labels: Vec<String>,
        check_assoc: bool,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 || dim > DIM_CAP {
            return Err(AlgebraError::DimensionCap(dim));
        }
        if table.len() != dim * dim || unit.coords.len() != dim || labels.len() != dim {
            return Err(AlgebraError::NonConformant);
        }
        let table = table
            .into_iter()
            .map(|s| {
                let mut v: Vec<F::Elem> = vec![field.zero(); dim];
                for (k, c) in s {
                    v[k] = field.add(&v[k], &c);
                }
                sparse(&field, &v)
            })
            .collect();
        let alg = StructureAlgebra { field, dim, table, unit, labels };
        for i in 0..dim {
            let e = alg.basis(i);
            if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
                return Err(AlgebraError::BadUnit);
            }
        }
        if check_assoc {
            alg.check_associative()?;
        }
        Ok(alg)
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        if n <= EXHAUSTIVE_ASSOC_CAP {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !self.assoc_triple(i, j, k) {
                            return Err(AlgebraError::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !self.assoc_triple(i, j, k) {
                    return Err(AlgebraError::NotAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }

    fn assoc_triple(&self, i: usize, j: usize, k: usize) -> bool {
        let f = &self.field;
        let mut left: Sparse<F::Elem> = Vec::new();
        for (m, c) in &self.table[i * self.dim + j] {
            for (p, c2) in &self.table[m * self.dim + k] {
                left.push((*p, f.mul(c, c2)));
            }
        }
        let mut right: Sparse<F::Elem> = Vec::new();
        for (m, c) in &self.table[j * self.dim + k] {
            for (p, c2) in &self.table[i * self.dim + m] {
                right.push((*p, f.mul(c, c2)));
            }
        }
        normalize(f, left) == normalize(f, right)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim + j]
    }

    pub fn zero(&self) -> AlgElement<F::Elem> {
        AlgElement { coords: vec![self.field.zero(); self.dim] }
    }

    pub fn one(&self) -> AlgElement<F::Elem> {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> AlgElement<F::Elem> {
        let mut e = self.zero();
        e.coords[i] = self.field.one();
        e
    }

    pub fn scalar(&self, c: &F::Elem) -> AlgElement<F::Elem> {
        self.scale(&self.unit, c)
    }

    pub fn element(&self, coords: Vec<F::Elem>) -> Result<AlgElement<F::Elem>, AlgebraError> {
        if coords.len() != self.dim || !coords.iter().all(|c| self.field.contains(c)) {
            return Err(AlgebraError::NonConformant);
        }
        Ok(AlgElement { coords })
    }

    pub fn is_zero(&self, a: &AlgElement<F::Elem>) -> bool {
        a.coords.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, a: &AlgElement<F::Elem>, b: &AlgElement<F::Elem>) -> AlgElement<F::Elem> {
        AlgElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| self.field.add(x, y)).collect() }
    }

    pub fn sub(&self, a: &AlgElement<F::Elem>, b: &AlgElement<F::Elem>) -> AlgElement<F::Elem> {
        AlgElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| self.field.sub(x, y)).collect() }
    }

    pub fn neg(&self, a: &AlgElement<F::Elem>) -> AlgElement<F::Elem> {
        AlgElement { coords: a.coords.iter().map(|x| self.field.neg(x)).collect() }
    }

    pub fn scale(&self, a: &AlgElement<F::Elem>, c: &F::Elem) -> AlgElement<F::Elem> {
        AlgElement { coords: a.coords.iter().map(|x| self.field.mul(x, c)).collect() }
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a AlgElement<F::Elem>>) -> AlgElement<F::Elem>
    where
        F::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn mul(&self, a: &AlgElement<F::Elem>, b: &AlgElement<F::Elem>) -> AlgElement<F::Elem> {
        let f = &self.field;
        let mut out = self.zero();
        let bs: Vec<(usize, &F::Elem)> = b.coords.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect();
        for (i, ca) in a.coords.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in &bs {
                let cab = f.mul(ca, cb);
                for (k, c) in &self.table[i * self.dim + j] {
                    out.coords[*k] = f.add(&out.coords[*k], &f.mul(&cab, c));
                }
            }
        }
        out
    }

    pub fn mul_all<'a>(&self, items: impl IntoIterator<Item = &'a AlgElement<F::Elem>>) -> AlgElement<F::Elem>
    where
        F::Elem: 'a,
    {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, a: &AlgElement<F::Elem>, n: u64) -> AlgElement<F::Elem> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// ab − ba
    pub fn commutator(&self, a: &AlgElement<F::Elem>, b: &AlgElement<F::Elem>) -> AlgElement<F::Elem> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn commutes(&self, a: &AlgElement<F::Elem>, b: &AlgElement<F::Elem>) -> bool {
        self.is_zero(&self.commutator(a, b))
    }

    /// Lies in the centralizer of the whole algebra.
    pub fn is_central(&self, a: &AlgElement<F::Elem>) -> bool {
        if self.scalar_value(a).is_some() {
            return true;
        }
        (0..self.dim).all(|i| self.commutes(a, &self.basis(i)))
    }

    /// Some c with a = c·1.
    pub fn scalar_value(&self, a: &AlgElement<F::Elem>) -> Option<F::Elem> {
        let f = &self.field;
        let p = self.unit.coords.iter().position(|c| !f.is_zero(c))?;
        let c = f.div(&a.coords[p], &self.unit.coords[p]).ok()?;
        (self.scalar(&c) == *a).then_some(c)
    }

    /// Column j holds the coordinates of a·e_j.
    pub fn left_mul_matrix(&self, a: &AlgElement<F::Elem>) -> Vec<Vec<F::Elem>> {
        let mut m = vec![vec![self.field.zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            let col = self.mul(a, &self.basis(j));
            for (i, c) in col.coords.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    pub fn inverse(&self, a: &AlgElement<F::Elem>) -> Result<AlgElement<F::Elem>, AlgebraError> {
        let l = self.left_mul_matrix(a);
        let w = linalg::solve(&self.field, &l, &self.unit.coords).ok_or(AlgebraError::NotInvertible)?;
        let w = AlgElement { coords: w };
        // a w = 1 gives a two-sided inverse in finite dimension; check anyway
        if self.mul(&w, a) != self.unit {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(w)
    }

    /// Basis of the center, from the linear system v e_i − e_i v = 0.
    pub fn center_basis(&self) -> Vec<AlgElement<F::Elem>> {
        let n = self.dim;
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        let cols: Vec<Vec<AlgElement<F::Elem>>> = (0..n)
            .map(|i| {
                let e = self.basis(i);
                (0..n).map(|v| self.commutator(&self.basis(v), &e)).collect()
            })
            .collect();
        for col in &cols {
            for k in 0..n {
                let row: Vec<F::Elem> = (0..n).map(|v| col[v].coords[k].clone()).collect();
                if row.iter().any(|c| !self.field.is_zero(c)) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return (0..n).map(|i| self.basis(i)).collect();
        }
        linalg::nullspace(&self.field, &rows, n).into_iter().map(|coords| AlgElement { coords }).collect()
    }

    /// Rank of the coordinate vectors.
    pub fn rank_of(&self, items: &[AlgElement<F::Elem>]) -> usize {
        if items.is_empty() {
            return 0;
        }
        let m: Vec<Vec<F::Elem>> = items.iter().map(|a| a.coords.clone()).collect();
        linalg::rank(&self.field, &m)
    }

    pub fn element_to_json(&self, a: &AlgElement<F::Elem>) -> Value {
        Value::Array(a.coords.iter().map(|c| self.field.to_json(c)).collect())
    }

    pub fn element_from_json(&self, v: &Value) -> Result<AlgElement<F::Elem>, AlgebraError> {
        let arr = v.as_array().ok_or(AlgebraError::NonConformant)?;
        let coords = arr.iter().map(|c| self.field.from_json(c)).collect::<Result<Vec<_>, _>>()?;
        self.element(coords)
    }

    /// Nonzero terms as "c·label", for display.
    pub fn format(&self, a: &AlgElement<F::Elem>) -> String {
        let parts: Vec<String> = a
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| format!("({})*{}", self.field.format(c), self.labels[i]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn descriptor(&self) -> Value {
        json!({"field": self.field.descriptor(), "dim": self.dim.to_string(), "basis": self.labels})
    }
}

fn sparse<F: Field>(f: &F, v: &[F::Elem]) -> Sparse<F::Elem> {
    v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (i, c.clone())).collect()
}

fn normalize<F: Field>(f: &F, mut s: Sparse<F::Elem>) -> Sparse<F::Elem> {
    s.sort_by_key(|(i, _)| *i);
    let mut out: Sparse<F::Elem> = Vec::with_capacity(s.len());
    for (i, c) in s {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = f.add(acc, &c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !f.is_zero(c));
    out
}

fn exact_order<F: Field>(f: &F, rho: &F::Elem, d: u64) -> bool {
    f.is_one(&f.pow(rho, d)) && (1..d).all(|k| !f.is_one(&f.pow(rho, k)))
}

fn monomial_label(a: usize, b: usize, x: &str, y: &str) -> String {
    let p = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let l = format!("{}{}", p(x, a), p(y, b));
    if l.is_empty() {
        "1".into()
    } else {
        l
    }
}

/// A symbol-type algebra with its distinguished generators.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolAlgebra<F: Field> {
    pub algebra: StructureAlgebra<F>,
    pub x: AlgElement<F::Elem>,
    pub y: AlgElement<F::Elem>,
}

/// (α, β)_d: x^d = α, y^d = β, yx = ρxy, basis x^a y^b at index a·d + b.
pub fn symbol_algebra<F: Field>(
    field: &F,
    d: u64,
    rho: &F::Elem,
    alpha: &F::Elem,
    beta: &F::Elem,
) -> Result<SymbolAlgebra<F>, AlgebraError> {
    if d < 2 || !exact_order(field, rho, d) {
        return Err(AlgebraError::BadRootOrder(d));
    }
    if field.is_zero(alpha) || field.is_zero(beta) {
        return Err(AlgebraError::ZeroParameter);
    }
    let n = d as usize;
    let mut table = Vec::with_capacity(n.pow(4));
    for i in 0..n * n {
        let (a, b) = (i / n, i % n);
        for j in 0..n * n {
            let (c, e) = (j / n, j % n);
            // y^b x^c = ρ^{bc} x^c y^b
            let mut coef = field.pow(rho, ((b * c) % n) as u64);
            let (mut xa, mut yb) = (a + c, b + e);
            if xa >= n {
                xa -= n;
                coef = field.mul(&coef, alpha);
            }
            if yb >= n {
                yb -= n;
                coef = field.mul(&coef, beta);
            }
            table.push(vec![(xa * n + yb, coef)]);
        }
    }
    let labels = (0..n * n).map(|i| monomial_label(i / n, i % n, "x", "y")).collect();
    let mut unit = vec![field.zero(); n * n];
    unit[0] = field.one();
    let algebra = StructureAlgebra::from_table(field.clone(), n * n, table, AlgElement { coords: unit }, labels)?;
    let x = algebra.basis(n);
    let y = algebra.basis(1);
    Ok(SymbolAlgebra { algebra, x, y })
}

/// [α, β)_p in characteristic p: x^p − x = α, y^p = β, yx − xy = y.
pub fn cyclic_charp_algebra<F: Field>(
    field: &F,
    p: u64,
    alpha: &F::Elem,
    beta: &F::Elem,
) -> Result<SymbolAlgebra<F>, AlgebraError> {
    if field.characteristic() != p || p < 2 {
        return Err(AlgebraError::WrongCharacteristic(p));
    }
    if field.is_zero(beta) {
        return Err(AlgebraError::ZeroParameter);
    }
    let n = p as usize;
    let mut table = Vec::with_capacity(n.pow(4));
    for i in 0..n * n {
        let (a, b) = (i / n, i % n);
        for j in 0..n * n {
            let (c, e) = (j / n, j % n);
            // y^b x^c = (x + b)^c y^b, then reduce x^p = x + α
            let mut poly = vec![field.zero(); a + c + 1];
            let bb = field.from_int(b as i64);
            for (t, slot) in poly.iter_mut().skip(a).enumerate() {
                let binom = field.from_int(binomial(c, t) as i64);
                *slot = field.mul(&binom, &field.pow(&bb, (c - t) as u64));
            }
            for m in (n..poly.len()).rev() {
                let top = poly[m].clone();
                if field.is_zero(&top) {
                    continue;
                }
                poly[m] = field.zero();
                poly[m - n + 1] = field.add(&poly[m - n + 1], &top);
                poly[m - n] = field.add(&poly[m - n], &field.mul(&top, alpha));
            }
            let (mut yb, mut ycoef) = (b + e, field.one());
            if yb >= n {
                yb -= n;
                ycoef = beta.clone();
            }
            let entry = poly
                .into_iter()
                .take(n)
                .enumerate()
                .filter(|(_, c)| !field.is_zero(c))
                .map(|(xa, c)| (xa * n + yb, field.mul(&c, &ycoef)))
                .collect();
            table.push(entry);
        }
    }
    let labels = (0..n * n).map(|i| monomial_label(i / n, i % n, "x", "y")).collect();
    let mut unit = vec![field.zero(); n * n];
    unit[0] = field.one();
    let algebra = StructureAlgebra::from_table(field.clone(), n * n, table, AlgElement { coords: unit }, labels)?;
    let x = algebra.basis(n);
    let y = algebra.basis(1);
    Ok(SymbolAlgebra { algebra, x, y })
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Basis e_i ⊗ f_j at index i·dim B + j.
pub fn tensor_product<F: Field>(a: &StructureAlgebra<F>, b: &StructureAlgebra<F>) -> Result<StructureAlgebra<F>, AlgebraError> {
    twisted_tensor(a, b, |_, _| None, false)
}

/// (a ⊗ b_j)(a_k ⊗ b) = ρ^{jk} (a a_k) ⊗ (b_j b) for grades j of b_j and k of a_k.
pub fn graded_tensor_product<F: Field>(
    a: &StructureAlgebra<F>,
    grade_a: &[u64],
    b: &StructureAlgebra<F>,
    grade_b: &[u64],
    d: u64,
    rho: &F::Elem,
) -> Result<StructureAlgebra<F>, AlgebraError> {
    let f = a.field();
    if d == 0 || !exact_order(f, rho, d) {
        return Err(AlgebraError::BadRootOrder(d));
    }
    check_grading(a, grade_a, d)?;
    check_grading(b, grade_b, d)?;
    twisted_tensor(a, b, |bj, ak| {
        let e = (grade_b[bj] * grade_a[ak]) % d;
        (e != 0).then(|| f.pow(rho, e))
    }, true)
}

fn twisted_tensor<F: Field>(
    a: &StructureAlgebra<F>,
    b: &StructureAlgebra<F>,
    twist: impl Fn(usize, usize) -> Option<F::Elem>,
    check_assoc: bool,
) -> Result<StructureAlgebra<F>, AlgebraError> {
    if a.field() != b.field() {
        return Err(AlgebraError::NonConformant);
    }
    let f = a.field();
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    if dim > DIM_CAP {
        return Err(AlgebraError::DimensionCap(dim));
    }
    let mut table = Vec::with_capacity(dim * dim);
    for l in 0..dim {
        let (i, j) = (l / db, l % db);
        for r in 0..dim {
            let (k, m) = (r / db, r % db);
            let tw = twist(j, k);
            let mut entry = Vec::new();
            for (p, c1) in a.product_of_basis(i, k) {
                for (q, c2) in b.product_of_basis(j, m) {
                    let mut c = f.mul(c1, c2);
                    if let Some(t) = &tw {
                        c = f.mul(&c, t);
                    }
                    entry.push((p * db + q, c));
                }
            }
            table.push(entry);
        }
    }
    let mut unit = vec![f.zero(); dim];
    for (i, ca) in a.one().coords.iter().enumerate() {
        for (j, cb) in b.one().coords.iter().enumerate() {
            unit[i * db + j] = f.mul(ca, cb);
        }
    }
    let labels =
        (0..dim).map(|l| format!("{}*{}", a.labels()[l / db], b.labels()[l % db])).collect();
    // a plain tensor product of associative algebras is associative
    StructureAlgebra::assemble(f.clone(), dim, table, AlgElement { coords: unit }, labels, check_assoc)
}

/// Checks A_j A_k ⊆ A_{j+k} on basis products.
pub fn check_grading<F: Field>(alg: &StructureAlgebra<F>, grades: &[u64], d: u64) -> Result<(), AlgebraError> {
    if grades.len() != alg.dim() {
        return Err(AlgebraError::NonConformant);
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let g = (grades[i] + grades[j]) % d;
            if alg.product_of_basis(i, j).iter().any(|(k, _)| grades[*k] % d != g) {
                return Err(AlgebraError::GradingViolation(i, j));
            }
        }
    }
    Ok(())
}

/// M_n(F) with basis e_{r,c} at index r·n + c.
pub fn matrix_algebra<F: Field>(field: &F, n: usize) -> Result<StructureAlgebra<F>, AlgebraError> {
    let dim = n * n;
    let mut table = Vec::with_capacity(dim * dim);
    for l in 0..dim {
        for r in 0..dim {
            let (i, j, k, m) = (l / n, l % n, r / n, r % n);
            table.push(if j == k { vec![(i * n + m, field.one())] } else { Vec::new() });
        }
    }
    let mut unit = vec![field.zero(); dim];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let labels = (0..dim).map(|l| format!("e{}{}", l / n + 1, l % n + 1)).collect();
    StructureAlgebra::from_table(field.clone(), dim, table, AlgElement { coords: unit }, labels)
}

/// e_{k, k+j} has grade j (indices mod n).
pub fn matrix_grading(n: usize) -> Vec<u64> {
    (0..n * n).map(|l| ((l % n + n - l / n) % n) as u64).collect()
}

use super::central::{is_d_central_element, is_d_central_space};
use super::{AlgElement, AlgebraError, StructureAlgebra};
use crate::field::Field;
use rand::Rng;
use serde_json::{json, Value};
use std::collections::BTreeSet;

/// y = Σ y_k with y_k x = ρ^k x y_k, where y_k = (1/d) Σ_m ρ^{km} x^m y x^{−m}.
pub fn eigenvector_decomposition<F: Field>(
    alg: &StructureAlgebra<F>,
    y: &AlgElement<F::Elem>,
    x: &AlgElement<F::Elem>,
    d: u64,
    rho: &F::Elem,
) -> Result<Vec<AlgElement<F::Elem>>, AlgebraError> {
    let f = alg.field();
    let inv_d = f.inv(&f.from_int(d as i64)).map_err(|_| AlgebraError::WrongCharacteristic(f.characteristic()))?;
    let x_inv = alg.inverse(x).map_err(|_| AlgebraError::XNotDCentralUnit)?;
    if !alg.is_central(&alg.pow(x, d)) {
        return Err(AlgebraError::XNotDCentralUnit);
    }
    // conj[m] = x^m y x^{−m}
    let mut conj = Vec::with_capacity(d as usize);
    let mut c = y.clone();
    for _ in 0..d {
        conj.push(c.clone());
        c = alg.mul(&alg.mul(x, &c), &x_inv);
    }
    Ok((0..d)
        .map(|k| {
            let terms: Vec<AlgElement<F::Elem>> =
                conj.iter().enumerate().map(|(m, c)| alg.scale(c, &f.pow(rho, k * m as u64 % d))).collect();
            alg.scale(&alg.sum(&terms), &inv_d)
        })
        .collect())
}

/// Support of the eigenvector decomposition of z with respect to x.
pub fn edge_label<F: Field>(
    alg: &StructureAlgebra<F>,
    x: &AlgElement<F::Elem>,
    z: &AlgElement<F::Elem>,
    p: u64,
    rho: &F::Elem,
) -> Result<BTreeSet<u64>, AlgebraError> {
    let parts = eigenvector_decomposition(alg, z, x, p, rho)?;
    Ok((0..p).filter(|k| !alg.is_zero(&parts[*k as usize])).collect())
}

pub fn edge_weight<F: Field>(
    alg: &StructureAlgebra<F>,
    x: &AlgElement<F::Elem>,
    z: &AlgElement<F::Elem>,
    p: u64,
    rho: &F::Elem,
) -> Result<usize, AlgebraError> {
    Ok(edge_label(alg, x, z, p, rho)?.len())
}

/// D(w) = wx − xw
fn right_commutator<F: Field>(alg: &StructureAlgebra<F>, w: &AlgElement<F::Elem>, x: &AlgElement<F::Elem>) -> AlgElement<F::Elem> {
    alg.commutator(w, x)
}

fn check_char<F: Field>(alg: &StructureAlgebra<F>, p: u64) -> Result<(), AlgebraError> {
    if alg.field().characteristic() != p || p < 2 {
        return Err(AlgebraError::WrongCharacteristic(p));
    }
    Ok(())
}

/// For x with x^p − x central: z = Σ z_k with z_k x − x z_k = k z_k.
/// z_k = −Σ_{i=1}^{p−1} k^{−i} D^i z for k ≠ 0 and z_0 takes the remainder.
pub fn artin_schreier_decomposition<F: Field>(
    alg: &StructureAlgebra<F>,
    z: &AlgElement<F::Elem>,
    x: &AlgElement<F::Elem>,
    p: u64,
) -> Result<Vec<AlgElement<F::Elem>>, AlgebraError> {
    check_char(alg, p)?;
    if !alg.is_central(&alg.sub(&alg.pow(x, p), x)) {
        return Err(AlgebraError::BadParameters("x^p − x is not central".into()));
    }
    let f = alg.field();
    let mut powers = vec![z.clone()];
    for i in 1..p as usize {
        let next = right_commutator(alg, &powers[i - 1], x);
        powers.push(next);
    }
    let mut parts = vec![alg.zero(); p as usize];
    for k in 1..p {
        let k_inv = f.inv(&f.from_int(k as i64))?;
        let mut acc = alg.zero();
        for (i, dz) in powers.iter().enumerate().skip(1) {
            acc = alg.add(&acc, &alg.scale(dz, &f.pow(&k_inv, i as u64)));
        }
        parts[k as usize] = alg.neg(&acc);
    }
    parts[0] = alg.sub(z, &alg.sum(&parts[1..]));
    Ok(parts)
}

/// For y with y^p central: z_k = Σ_{i=p−1−k}^{p−1} E^i z where E(w) = wy − yw,
/// so that E(z_k) = z_{k−1}, E(z_0) = 0 and z = z_{p−1} − z_{p−2}.
pub fn pcentral_charp_decomposition<F: Field>(
    alg: &StructureAlgebra<F>,
    z: &AlgElement<F::Elem>,
    y: &AlgElement<F::Elem>,
    p: u64,
) -> Result<Vec<AlgElement<F::Elem>>, AlgebraError> {
    check_char(alg, p)?;
    if !alg.is_central(&alg.pow(y, p)) {
        return Err(AlgebraError::BadParameters("y^p is not central".into()));
    }
    let p = p as usize;
    let mut powers = vec![z.clone()];
    for i in 1..p {
        let next = right_commutator(alg, &powers[i - 1], y);
        powers.push(next);
    }
    Ok((0..p).map(|k| alg.sum(&powers[p - 1 - k..])).collect())
}

/// Outcome of checking the four graph axioms on a set of 3-central elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphVerdict {
    /// (a, b) whenever B_a B_b B_a^{−1} = ρ B_b.
    pub edges: Vec<(usize, usize)>,
    pub cycles: Vec<Vec<usize>>,
    pub tournament: bool,
    pub cycles_have_length_three: bool,
    pub cycle_products_scalar: bool,
    pub cycles_disjoint: bool,
    pub space_is_central: bool,
}

impl GraphVerdict {
    pub fn axioms_hold(&self) -> bool {
        self.tournament && self.cycles_have_length_three && self.cycle_products_scalar && self.cycles_disjoint
    }

    pub fn agrees(&self) -> bool {
        self.axioms_hold() == self.space_is_central
    }

    pub fn to_json(&self) -> Value {
        let idx = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>();
        json!({
            "edges": self.edges.iter().map(|(a, b)| idx(&[*a, *b])).collect::<Vec<_>>(),
            "cycles": self.cycles.iter().map(|c| idx(c)).collect::<Vec<_>>(),
            "tournament": self.tournament,
            "cycles_have_length_three": self.cycles_have_length_three,
            "cycle_products_scalar": self.cycle_products_scalar,
            "cycles_disjoint": self.cycles_disjoint,
            "axioms_hold": self.axioms_hold(),
            "space_is_3_central": self.space_is_central,
        })
    }
}

pub fn three_central_graph_check<F: Field, R: Rng + ?Sized>(
    alg: &StructureAlgebra<F>,
    rho: &F::Elem,
    elems: &[AlgElement<F::Elem>],
    rng: &mut R,
) -> Result<GraphVerdict, AlgebraError> {
    for (i, v) in elems.iter().enumerate() {
        if !is_d_central_element(alg, v, 3) {
            return Err(AlgebraError::NotThreeCentralElement(i));
        }
    }
    if alg.rank_of(elems) != elems.len() {
        return Err(AlgebraError::DependentBasis);
    }
    let n = elems.len();
    let invs = elems.iter().map(|v| alg.inverse(v)).collect::<Result<Vec<_>, _>>()?;
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let c = alg.mul(&alg.mul(&elems[a], &elems[b]), &invs[a]);
            if c == alg.scale(&elems[b], rho) {
                adj[a][b] = true;
                edges.push((a, b));
            }
        }
    }
    let tournament = (0..n).all(|a| (a + 1..n).all(|b| adj[a][b] ^ adj[b][a]));
    let cycles = simple_cycles(&adj);
    let cycles_have_length_three = cycles.iter().all(|c| c.len() == 3);
    let cycle_products_scalar =
        cycles.iter().all(|c| alg.scalar_value(&alg.mul_all(c.iter().map(|&i| &elems[i]))).is_some());
    let mut seen = BTreeSet::new();
    let cycles_disjoint = cycles.iter().flatten().all(|v| seen.insert(*v));
    let space_is_central = is_d_central_space(alg, elems, 3, rng).holds;
    Ok(GraphVerdict {
        edges,
        cycles,
        tournament,
        cycles_have_length_three,
        cycle_products_scalar,
        cycles_disjoint,
        space_is_central,
    })
}

/// Simple directed cycles, each listed once starting from its smallest vertex.
fn simple_cycles(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn walk(adj: &[Vec<bool>], start: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for next in 0..adj.len() {
            if !adj[last][next] {
                continue;
            }
            if next == start {
                out.push(path.clone());
            } else if next > start && !on[next] {
                on[next] = true;
                path.push(next);
                walk(adj, start, path, on, out);
                path.pop();
                on[next] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; adj.len()];
    for s in 0..adj.len() {
        on[s] = true;
        walk(adj, s, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

//! Finite-dimensional Lie bialgebras: structure constants, cocommutators,
//! the classical Yang-Baxter equation, coboundary and twist machinery, the
//! classical double and bicross sum, and semiclassical extraction from
//! series-mode tensor data.

use crate::coeffs::Scalar;
use crate::error::AlgError;
use crate::hopf::TensorElement;
use crate::report::Check;
use std::collections::BTreeMap;

pub type Vec1 = Vec<Scalar>;
pub type T2 = Vec<Vec<Scalar>>;
pub type T3 = Vec<Vec<Vec<Scalar>>>;

#[derive(Clone)]
pub struct LieAlgebra {
    pub names: Vec<String>,
    /// c[a][b][k]: [e_a, e_b] = sum_k c[a][b][k] e_k
    pub c: T3,
}

#[derive(Clone)]
pub struct LieBialgebra {
    pub alg: LieAlgebra,
    /// delta[a][i][j]: cocommutator of e_a
    pub delta: T3,
    pub r: Option<T2>,
}

pub fn zeros1(n: usize) -> Vec1 {
    vec![Scalar::zero(); n]
}

pub fn zeros2(n: usize) -> T2 {
    vec![vec![Scalar::zero(); n]; n]
}

pub fn zeros3(n: usize) -> T3 {
    vec![vec![vec![Scalar::zero(); n]; n]; n]
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no basis {}", name))
    }

    pub fn bracket(&self, x: &Vec1, y: &Vec1) -> Result<Vec1, AlgError> {
        let n = self.dim();
        let mut out = zeros1(n);
        for a in 0..n {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if y[b].is_zero() {
                    continue;
                }
                let f = x[a].mul(&y[b])?;
                for k in 0..n {
                    if self.c[a][b][k].is_zero() {
                        continue;
                    }
                    out[k] = out[k].add(&f.mul(&self.c[a][b][k])?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn jacobi_residual(&self) -> Result<Vec<(usize, usize, usize, Vec1)>, AlgError> {
        let n = self.dim();
        let mut fails = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for cc in 0..n {
                    let ea = basis_vec(n, a);
                    let eb = basis_vec(n, b);
                    let ec = basis_vec(n, cc);
                    let mut acc = self.bracket(&self.bracket(&ea, &eb)?, &ec)?;
                    acc = add1(&acc, &self.bracket(&self.bracket(&eb, &ec)?, &ea)?)?;
                    acc = add1(&acc, &self.bracket(&self.bracket(&ec, &ea)?, &eb)?)?;
                    if !acc.iter().all(|v| v.is_zero()) {
                        fails.push((a, b, cc, acc));
                    }
                }
            }
        }
        Ok(fails)
    }

    /// Rewrite the algebra in a new basis: new_e[a] = sum_k m[a][k] old_e[k].
    pub fn change_basis(&self, new_names: Vec<String>, m: &T2) -> Result<LieAlgebra, AlgError> {
        let n = self.dim();
        let minv = invert_matrix(m)?;
        let mut c = zeros3(n);
        for a in 0..n {
            for b in 0..n {
                // [new_a, new_b] in the old basis
                let va = m[a].clone();
                let vb = m[b].clone();
                let br = self.bracket(&va, &vb)?;
                // convert to the new basis: coords_new = br * minv (as row)
                for k in 0..n {
                    let mut acc = Scalar::zero();
                    for j in 0..n {
                        if br[j].is_zero() || minv[j][k].is_zero() {
                            continue;
                        }
                        acc = acc.add(&br[j].mul(&minv[j][k])?)?;
                    }
                    c[a][b][k] = acc;
                }
            }
        }
        Ok(LieAlgebra { names: new_names, c })
    }
}

pub fn basis_vec(n: usize, i: usize) -> Vec1 {
    let mut v = zeros1(n);
    v[i] = Scalar::one();
    v
}

fn add1(x: &Vec1, y: &Vec1) -> Result<Vec1, AlgError> {
    x.iter().zip(y).map(|(a, b)| a.add(b).map_err(Into::into)).collect()
}

pub fn add2(x: &T2, y: &T2) -> Result<T2, AlgError> {
    let n = x.len();
    let mut out = zeros2(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = x[i][j].add(&y[i][j])?;
        }
    }
    Ok(out)
}

pub fn sub2(x: &T2, y: &T2) -> Result<T2, AlgError> {
    let n = x.len();
    let mut out = zeros2(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = x[i][j].sub(&y[i][j])?;
        }
    }
    Ok(out)
}

pub fn flip2(x: &T2) -> T2 {
    let n = x.len();
    let mut out = zeros2(n);
    for i in 0..n {
        for j in 0..n {
            out[i][j] = x[j][i].clone();
        }
    }
    out
}

pub fn is_zero2(x: &T2) -> bool {
    x.iter().all(|row| row.iter().all(|v| v.is_zero()))
}

pub fn is_zero3(x: &T3) -> bool {
    x.iter().all(|m| is_zero2(m))
}

/// Gaussian elimination inverse over the scalar field.
pub fn invert_matrix(m: &T2) -> Result<T2, AlgError> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.clone();
    let mut inv = zeros2(n);
    for (i, item) in inv.iter_mut().enumerate().take(n) {
        item[i] = Scalar::one();
    }
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(crate::error::CoeffError::DivisionByZero)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let f = Scalar::one().div(&a[col][col])?;
        for j in 0..n {
            a[col][j] = a[col][j].mul(&f)?;
            inv[col][j] = inv[col][j].mul(&f)?;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let g = a[r][col].clone();
                for j in 0..n {
                    let d1 = a[col][j].mul(&g)?;
                    a[r][j] = a[r][j].sub(&d1)?;
                    let d2 = inv[col][j].mul(&g)?;
                    inv[r][j] = inv[r][j].sub(&d2)?;
                }
            }
        }
    }
    Ok(inv)
}

/// The mixed Schouten bracket [A12, B13] + [A12, B23] + [A13, B23].
pub fn mixed_bracket(g: &LieAlgebra, a: &T2, b: &T2) -> Result<T3, AlgError> {
    let n = g.dim();
    let mut out = zeros3(n);
    for i in 0..n {
        for j in 0..n {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    if b[k][l].is_zero() {
                        continue;
                    }
                    let f = a[i][j].mul(&b[k][l])?;
                    // [A12, B13]: [e_i, e_k] (x) e_j (x) e_l
                    for mth in 0..n {
                        if !g.c[i][k][mth].is_zero() {
                            out[mth][j][l] = out[mth][j][l].add(&f.mul(&g.c[i][k][mth])?)?;
                        }
                        // [A12, B23]: e_i (x) [e_j, e_k] (x) e_l
                        if !g.c[j][k][mth].is_zero() {
                            out[i][mth][l] = out[i][mth][l].add(&f.mul(&g.c[j][k][mth])?)?;
                        }
                        // [A13, B23]: e_i (x) e_k (x) [e_j, e_l]
                        if !g.c[j][l][mth].is_zero() {
                            out[i][k][mth] = out[i][k][mth].add(&f.mul(&g.c[j][l][mth])?)?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// [[r, r]] = [r12, r13] + [r12, r23] + [r13, r23].
pub fn cybe(g: &LieAlgebra, r: &T2) -> Result<T3, AlgError> {
    let n = g.dim();
    let mut out = zeros3(n);
    for i in 0..n {
        for j in 0..n {
            if r[i][j].is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    if r[k][l].is_zero() {
                        continue;
                    }
                    let f = r[i][j].mul(&r[k][l])?;
                    for mth in 0..n {
                        if !g.c[i][k][mth].is_zero() {
                            out[mth][j][l] = out[mth][j][l].add(&f.mul(&g.c[i][k][mth])?)?;
                        }
                        if !g.c[j][k][mth].is_zero() {
                            out[i][mth][l] = out[i][mth][l].add(&f.mul(&g.c[j][k][mth])?)?;
                        }
                        if !g.c[j][l][mth].is_zero() {
                            out[i][k][mth] = out[i][k][mth].add(&f.mul(&g.c[j][l][mth])?)?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// ad_x(r) for a basis element: the coboundary cocommutator.
pub fn ad_tensor(g: &LieAlgebra, a: usize, r: &T2) -> Result<T2, AlgError> {
    let n = g.dim();
    let mut out = zeros2(n);
    for i in 0..n {
        for j in 0..n {
            if r[i][j].is_zero() {
                continue;
            }
            for m in 0..n {
                if !g.c[a][i][m].is_zero() {
                    out[m][j] = out[m][j].add(&r[i][j].mul(&g.c[a][i][m])?)?;
                }
                if !g.c[a][j][m].is_zero() {
                    out[i][m] = out[i][m].add(&r[i][j].mul(&g.c[a][j][m])?)?;
                }
            }
        }
    }
    Ok(out)
}

pub fn cobracket_from_r(g: &LieAlgebra, r: &T2) -> Result<T3, AlgError> {
    let n = g.dim();
    let mut delta = zeros3(n);
    for a in 0..n {
        delta[a] = ad_tensor(g, a, r)?;
    }
    Ok(delta)
}

/// Full Lie bialgebra report: antisymmetry, Jacobi, coJacobi, the 1-cocycle
/// law, and ad-invariance of r + r21 when an r is registered.
pub fn verify_lie_bialgebra(b: &LieBialgebra, label: &str) -> Result<Vec<Check>, AlgError> {
    let mut checks = Vec::new();
    let n = b.alg.dim();
    let jac = b.alg.jacobi_residual()?;
    checks.push(Check::from_residual(
        "Jacobi identity",
        label,
        "[[a,b],c] + cyclic".into(),
        "0".into(),
        if jac.is_empty() { "0".into() } else { format!("{} failures", jac.len()) },
    ));
    // antisymmetry of delta
    let mut anti_ok = true;
    for a in 0..n {
        for i in 0..n {
            for j in 0..n {
                if !b.delta[a][i][j].add(&b.delta[a][j][i])?.is_zero() {
                    anti_ok = false;
                }
            }
        }
    }
    checks.push(Check::from_residual(
        "cocommutator antisymmetry",
        label,
        "delta + delta21".into(),
        "0".into(),
        if anti_ok { "0".into() } else { "nonzero".into() },
    ));
    // coJacobi: (delta (x) id) delta + cyclic = 0
    let mut cojac_ok = true;
    for a in 0..n {
        let mut t = zeros3(n);
        for i in 0..n {
            for j in 0..n {
                if b.delta[a][i][j].is_zero() {
                    continue;
                }
                for x in 0..n {
                    for y in 0..n {
                        if b.delta[i][x][y].is_zero() {
                            continue;
                        }
                        let f = b.delta[a][i][j].mul(&b.delta[i][x][y])?;
                        // (x, y, j) + cyclic rotations
                        t[x][y][j] = t[x][y][j].add(&f)?;
                        t[j][x][y] = t[j][x][y].add(&f)?;
                        t[y][j][x] = t[y][j][x].add(&f)?;
                    }
                }
            }
        }
        if !is_zero3(&t) {
            cojac_ok = false;
        }
    }
    checks.push(Check::from_residual(
        "coJacobi identity",
        label,
        "(delta (x) id) delta + cyclic".into(),
        "0".into(),
        if cojac_ok { "0".into() } else { "nonzero".into() },
    ));
    // cocycle law: delta([a,b]) = ad_a delta(b) - ad_b delta(a)
    let mut cocycle_ok = true;
    for a in 0..n {
        for bb in 0..n {
            // delta([e_a, e_b])
            let mut lhs = zeros2(n);
            for k in 0..n {
                if b.alg.c[a][bb][k].is_zero() {
                    continue;
                }
                for i in 0..n {
                    for j in 0..n {
                        if b.delta[k][i][j].is_zero() {
                            continue;
                        }
                        lhs[i][j] = lhs[i][j].add(&b.alg.c[a][bb][k].mul(&b.delta[k][i][j])?)?;
                    }
                }
            }
            let rhs = sub2(&ad_on_tensor(&b.alg, a, &b.delta[bb])?, &ad_on_tensor(&b.alg, bb, &b.delta[a])?)?;
            if !is_zero2(&sub2(&lhs, &rhs)?) {
                cocycle_ok = false;
            }
        }
    }
    checks.push(Check::from_residual(
        "1-cocycle law",
        label,
        "delta([a,b])".into(),
        "ad_a delta(b) - ad_b delta(a)".into(),
        if cocycle_ok { "0".into() } else { "nonzero".into() },
    ));
    if let Some(r) = &b.r {
        // delta = ad(r)
        let cob = cobracket_from_r(&b.alg, r)?;
        let mut ok = true;
        for a in 0..n {
            if !is_zero2(&sub2(&cob[a], &b.delta[a])?) {
                ok = false;
            }
        }
        checks.push(Check::from_residual(
            "coboundary delta = ad(r)",
            label,
            "ad(r)".into(),
            "delta".into(),
            if ok { "0".into() } else { "nonzero".into() },
        ));
        // ad-invariance of r + r21
        let sym = add2(r, &flip2(r))?;
        let mut inv_ok = true;
        for a in 0..n {
            if !is_zero2(&ad_tensor(&b.alg, a, &sym)?) {
                inv_ok = false;
            }
        }
        checks.push(Check::from_residual(
            "ad-invariance of r + r21",
            label,
            "ad(r + r21)".into(),
            "0".into(),
            if inv_ok { "0".into() } else { "nonzero".into() },
        ));
    }
    Ok(checks)
}

/// ad_a acting on a rank-2 tensor (same as ad_tensor; alias for readability).
fn ad_on_tensor(g: &LieAlgebra, a: usize, t: &T2) -> Result<T2, AlgError> {
    ad_tensor(g, a, t)
}

/// The classical double of a finite-dimensional Lie bialgebra: built on
/// g + g* with the dual sector carrying the negated dual bracket and the
/// cross bracket from the mutual coadjoint actions. The canonical r is
/// sum_a f^a (x) e_a.
pub struct ClassicalDouble {
    pub bialgebra: LieBialgebra,
    pub r: T2,
    pub g_dim: usize,
}

pub fn classical_double(g: &LieBialgebra) -> Result<ClassicalDouble, AlgError> {
    let n = g.alg.dim();
    let dim = 2 * n;
    let mut names = g.alg.names.clone();
    for nm in &g.alg.names {
        names.push(format!("f^{}", nm));
    }
    let mut c = zeros3(dim);
    // [e_a, e_b] as in g
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                c[a][b][k] = g.alg.c[a][b][k].clone();
            }
        }
    }
    // [f^a, f^b] = -sum_k delta(e_k)^{ab} f^k (opposite dual bracket)
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                c[n + a][n + b][n + k] = g.delta[k][a][b].neg();
            }
        }
    }
    // [e_i, f^a] = sum_j delta(e_i)^{ja} e_j + sum_j c^a_{ji} f^j
    for i in 0..n {
        for a in 0..n {
            for j in 0..n {
                c[i][n + a][j] = g.delta[i][j][a].clone();
                c[i][n + a][n + j] = g.alg.c[j][i][a].clone();
            }
            for k in 0..dim {
                c[n + a][i][k] = c[i][n + a][k].neg();
            }
        }
    }
    let alg = LieAlgebra { names, c };
    // canonical r = sum_a f^a (x) e_a
    let mut r = zeros2(dim);
    for a in 0..n {
        r[n + a][a] = Scalar::one();
    }
    let delta = cobracket_from_r(&alg, &r)?;
    Ok(ClassicalDouble { bialgebra: LieBialgebra { alg, delta, r: Some(r.clone()) }, r, g_dim: n })
}

/// Generic bicross sum m* |>< g: the m*-sector keeps its own bracket, g acts
/// on m*, and the cocommutator combines the dualized m-bracket with the
/// flip-antisymmetrized action of m on g.
pub struct BicrossSumData {
    /// names of the m* basis then the g basis
    pub names: Vec<String>,
    pub mstar_dim: usize,
    /// bracket on m*
    pub c_mstar: T3,
    /// bracket on g
    pub c_g: T3,
    /// action[x][f] in m*: (g basis x) |> (m* basis f)
    pub action: T3,
    /// cobracket of m* (dualized m bracket)
    pub delta_mstar: T3,
    /// action of the m basis on g entering the cocommutator: row e_a |> xi
    pub action_m_on_g: T3,
}

pub fn bicross_sum(data: &BicrossSumData) -> Result<LieBialgebra, AlgError> {
    let nm = data.mstar_dim;
    let dim = data.names.len();
    let ng = dim - nm;
    let mut c = zeros3(dim);
    for a in 0..nm {
        for b in 0..nm {
            for k in 0..nm {
                c[a][b][k] = data.c_mstar[a][b][k].clone();
            }
        }
    }
    for x in 0..ng {
        for y in 0..ng {
            for k in 0..ng {
                c[nm + x][nm + y][nm + k] = data.c_g[x][y][k].clone();
            }
        }
    }
    // [xi, f] = xi |> f
    for x in 0..ng {
        for f in 0..nm {
            for k in 0..nm {
                c[nm + x][f][k] = data.action[x][f][k].clone();
                c[f][nm + x][k] = data.action[x][f][k].neg();
            }
        }
    }
    let alg = LieAlgebra { names: data.names.clone(), c };
    // delta(f + xi) = sum_a (e_a |> xi) /\ f^a + delta_mstar(f)
    let mut delta = zeros3(dim);
    for f in 0..nm {
        for i in 0..nm {
            for j in 0..nm {
                delta[f][i][j] = data.delta_mstar[f][i][j].clone();
            }
        }
    }
    for x in 0..ng {
        // sum_a (0 + e_a |> xi) (x) (f^a + 0) - flip
        for a in 0..nm {
            for k in 0..ng {
                let v = data.action_m_on_g[a][x][k].clone();
                if v.is_zero() {
                    continue;
                }
                delta[nm + x][nm + k][a] = delta[nm + x][nm + k][a].add(&v)?;
                delta[nm + x][a][nm + k] = delta[nm + x][a][nm + k].sub(&v)?;
            }
        }
    }
    Ok(LieBialgebra { alg, delta, r: None })
}

/// Lie bialgebra twist: checks the mixed Schouten condition and the
/// ad-invariance of chi + chi21, then returns r + chi.
pub fn lie_twist(g: &LieAlgebra, r: &T2, chi: &T2) -> Result<(T2, Vec<Check>), AlgError> {
    let mut checks = Vec::new();
    let mut acc = mixed_bracket(g, r, chi)?;
    let b2 = mixed_bracket(g, chi, r)?;
    let b3 = mixed_bracket(g, chi, chi)?;
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                acc[i][j][k] = acc[i][j][k].add(&b2[i][j][k])?.add(&b3[i][j][k])?;
            }
        }
    }
    checks.push(Check::from_residual(
        "[[r,chi]] + [[chi,r]] + [[chi,chi]] = 0",
        "lie-twist",
        "mixed Schouten combination".into(),
        "0".into(),
        if is_zero3(&acc) { "0".into() } else { "nonzero".into() },
    ));
    let sym = add2(chi, &flip2(chi))?;
    let mut inv_ok = true;
    for a in 0..n {
        if !is_zero2(&ad_tensor(g, a, &sym)?) {
            inv_ok = false;
        }
    }
    checks.push(Check::from_residual(
        "ad-invariance of chi + chi21",
        "lie-twist",
        "ad(chi + chi21)".into(),
        "0".into(),
        if inv_ok { "0".into() } else { "nonzero".into() },
    ));
    if !is_zero3(&acc) || !inv_ok {
        return Err(AlgError::TwistConditionFailed("lie twist conditions violated".into()));
    }
    Ok((add2(r, chi)?, checks))
}

/// A linear identification of presentation letters with Lie basis vectors,
/// used by the semiclassical extraction.
pub struct LetterBasis {
    /// letter name -> combination of basis vectors
    pub map: BTreeMap<String, Vec<(usize, Scalar)>>,
    pub dim: usize,
}

/// Read the order-1 coefficient of a series tensor element whose order-0
/// part is the unit: R = 1 (x) 1 + t r + O(t^2).
pub fn semiclassical_extract(x: &TensorElement, basis: &LetterBasis) -> Result<T2, AlgError> {
    let mut r = zeros2(basis.dim);
    let legs = &x.legs;
    for (ws, c) in &x.terms {
        let c1 = match c {
            Scalar::Ser(s) => {
                if s.coeffs.is_empty() {
                    continue;
                }
                s.coeffs.get(1).cloned().unwrap_or_else(crate::coeffs::RationalFunction::zero)
            }
            Scalar::Rat(_) => return Err(AlgError::ModeUnsupported("extraction needs series".into())),
        };
        // order-0 sanity: only the unit term may carry a constant
        if let Scalar::Ser(s) = c {
            if !s.coeffs[0].is_zero() && !(ws[0].is_one() && ws[1].is_one()) {
                return Err(AlgError::NotUnital);
            }
        }
        if c1.is_zero() {
            continue;
        }
        if ws[0].is_one() && ws[1].is_one() {
            continue;
        }
        if ws[0].degree() != 1 || ws[1].degree() != 1 {
            return Err(AlgError::NotUnital);
        }
        let n0 = legs[0].alg.letter_name(ws[0].0[0].0);
        let n1 = legs[1].alg.letter_name(ws[1].0[0].0);
        let b0 = basis
            .map
            .get(n0)
            .ok_or_else(|| AlgError::UnknownLetter(n0.to_string()))?;
        let b1 = basis
            .map
            .get(n1)
            .ok_or_else(|| AlgError::UnknownLetter(n1.to_string()))?;
        for (i, ci) in b0 {
            for (j, cj) in b1 {
                let f = Scalar::Rat(c1.clone()).mul(ci)?.mul(cj)?;
                r[*i][*j] = r[*i][*j].add(&f)?;
            }
        }
    }
    Ok(r)
}

/// For a twist chi = 1 + t f + O(t^2): the Lie twist is f21 - f.
pub fn extract_lie_twist(x: &TensorElement, basis: &LetterBasis) -> Result<T2, AlgError> {
    let f = semiclassical_extract(x, basis)?;
    sub2(&flip2(&f), &f)
}

/// Default default-scalar helper for T2 literals.
impl Default for LetterBasis {
    fn default() -> Self {
        LetterBasis { map: BTreeMap::new(), dim: 0 }
    }
}

//! Sparse multivariate polynomials with exact rational coefficients, and the
//! determinant machinery for linear matrix pencils.
//!
//! Terms are kept in graded lexicographic order with `x0 > x1 > …`, which
//! fixes a deterministic serialization. Pencil determinants are computed by
//! fraction-free Bareiss elimination over the polynomial ring; a dense
//! evaluation–interpolation determinant is provided as an independent
//! cross-checking path.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{rat_from_str, rat_int, rat_to_f64, rat_to_string, QMatrix, Rat};

/// Exponent vector with graded lexicographic ordering (`x0 > x1 > …`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Expo(pub Vec<u32>);

impl Expo {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over ℚ. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Expo, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Expo(vec![0; nvars]), c);
        }
        p
    }

    /// The monomial `x_idx` (0-based).
    pub fn var(nvars: usize, idx: usize) -> Result<Self> {
        if idx >= nvars {
            return Err(Error::Validation(format!("variable {idx} out of range")));
        }
        let mut exp = vec![0u32; nvars];
        exp[idx] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Expo(exp), Rat::one());
        Ok(p)
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, Rat)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exp, coef) in terms {
            if exp.len() != nvars {
                return Err(Error::NvarsMismatch(exp.len(), nvars));
            }
            p.add_term(Expo(exp), coef);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Expo, &Rat)> {
        self.terms.iter().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// `Some(d)` iff nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|e| e.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, exp: Expo, coef: Rat) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (exp, coef) in &other.terms {
            out.add_term(exp.clone(), coef.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                out.add_term(Expo(exp), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, mut e: usize) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(point.len(), self.nvars));
        }
        let mut total = Rat::zero();
        for (exp, coef) in &self.terms {
            let mut term = coef.clone();
            for (x, &e) in point.iter().zip(&exp.0) {
                for _ in 0..e {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut total = 0.0;
        for (exp, coef) in &self.terms {
            let mut term = rat_to_f64(coef);
            for (x, &e) in point.iter().zip(&exp.0) {
                term *= x.powi(e as i32);
            }
            total += term;
        }
        total
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Validation(format!("variable {var} out of range")));
        }
        let mut out = Self::zero(self.nvars);
        for (exp, coef) in &self.terms {
            let e = exp.0[var];
            if e == 0 {
                continue;
            }
            let mut new_exp = exp.0.clone();
            new_exp[var] = e - 1;
            out.add_term(Expo(new_exp), coef * rat_int(e as i64));
        }
        Ok(out)
    }

    /// Substitute a constant for one variable; the variable stays in the
    /// exponent vectors with exponent 0.
    pub fn substitute_value(&self, var: usize, value: &Rat) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Validation(format!("variable {var} out of range")));
        }
        let mut out = Self::zero(self.nvars);
        for (exp, coef) in &self.terms {
            let e = exp.0[var];
            let mut c = coef.clone();
            for _ in 0..e {
                c *= value;
            }
            let mut new_exp = exp.0.clone();
            new_exp[var] = 0;
            out.add_term(Expo(new_exp), c);
        }
        Ok(out)
    }

    /// Keep only terms supported on `keep` (every other exponent must be 0 in
    /// every surviving term — use [`MultiPoly::zero_out_vars`] first), then
    /// re-index onto `keep.len()` variables in the given order.
    pub fn keep_vars(&self, keep: &[usize]) -> Result<Self> {
        let mut out = Self::zero(keep.len());
        for (exp, coef) in &self.terms {
            for (v, &e) in exp.0.iter().enumerate() {
                if e > 0 && !keep.contains(&v) {
                    return Err(Error::Validation(format!(
                        "variable {v} still present; zero it out before projecting"
                    )));
                }
            }
            let new_exp: Vec<u32> = keep.iter().map(|&v| exp.0[v]).collect();
            out.add_term(Expo(new_exp), coef.clone());
        }
        Ok(out)
    }

    /// Set every variable outside `keep` to zero.
    pub fn zero_out_vars(&self, keep: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exp, coef) in &self.terms {
            let alive = exp.0.iter().enumerate().all(|(v, &e)| e == 0 || keep.contains(&v));
            if alive {
                out.add_term(exp.clone(), coef.clone());
            }
        }
        out
    }

    /// The unique primitive associate: integer coefficients with gcd 1 and a
    /// positive leading (graded-lex greatest) coefficient.
    pub fn scale_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for coef in self.terms.values() {
            den_lcm = den_lcm.lcm(coef.denom());
        }
        let mut num_gcd = BigInt::zero();
        for coef in self.terms.values() {
            let scaled = coef.numer() * (&den_lcm / coef.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut factor = Rat::new(den_lcm, num_gcd);
        let leading = self.terms.iter().next_back().expect("nonzero").1;
        if (leading * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Coefficient of an exponent vector (zero if absent).
    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(&Expo(exp.to_vec())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<(&Expo, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact division; errors if `self` is not a polynomial multiple of `d`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_nvars(d)?;
        if d.is_zero() {
            return Err(Error::Validation("division by zero polynomial".into()));
        }
        let (d_exp, d_coef) = d.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (r_exp, r_coef) = rem.leading().expect("nonzero remainder");
            let mut q_exp = Vec::with_capacity(self.nvars);
            for (&re, &de) in r_exp.0.iter().zip(&d_exp.0) {
                if re < de {
                    return Err(Error::InvariantViolation(
                        "inexact polynomial division".into(),
                    ));
                }
                q_exp.push(re - de);
            }
            let q_coef = r_coef / d_coef;
            let mut t = Self::zero(self.nvars);
            t.terms.insert(Expo(q_exp), q_coef);
            rem = rem.sub(&t.mul(d)?)?;
            quot = quot.add(&t)?;
        }
        Ok(quot)
    }

    pub fn to_f64_terms(&self) -> Vec<(Vec<u32>, f64)> {
        self.terms_desc()
            .map(|(e, c)| (e.0.clone(), rat_to_f64(c)))
            .collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, coef) in self.terms_desc() {
            let mut part = String::new();
            if coef.is_negative() {
                part.push_str(if first { "-" } else { " - " });
            } else if !first {
                part.push_str(" + ");
            }
            let abs = coef.abs();
            let is_const = exp.0.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const {
                part.push_str(&rat_to_string(&abs));
                if !is_const {
                    part.push('*');
                }
            }
            let vars: Vec<String> = exp
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { format!("x{v}") } else { format!("x{v}^{e}") })
                .collect();
            part.push_str(&vars.join("*"));
            f.write_str(&part)?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    nvars: usize,
    terms: Vec<TermWire>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = PolyWire {
            nvars: self.nvars,
            terms: self
                .terms_desc()
                .map(|(e, c)| TermWire { exp: e.0.clone(), coef: rat_to_string(c) })
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = PolyWire::deserialize(deserializer)?;
        let terms = wire
            .terms
            .into_iter()
            .map(|t| Ok((t.exp, rat_from_str(&t.coef).map_err(D::Error::custom)?)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        MultiPoly::from_terms(wire.nvars, terms).map_err(D::Error::custom)
    }
}

/// A linear matrix pencil `x_0 A_0 + … + x_{v−1} A_{v−1}` with exact entries.
#[derive(Debug, Clone)]
pub struct Pencil {
    size: usize,
    matrices: Vec<QMatrix>,
}

impl Pencil {
    pub fn new(matrices: Vec<QMatrix>) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::Validation("pencil needs at least one matrix".into()));
        }
        let size = matrices[0].nrows();
        for m in &matrices {
            if !m.is_square() || m.nrows() != size {
                return Err(Error::Validation("pencil matrices must be square of equal size".into()));
            }
        }
        Ok(Pencil { size, matrices })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    /// Entry `(r, c)` as a linear polynomial.
    pub(crate) fn entry_poly(&self, r: usize, c: usize) -> MultiPoly {
        let nv = self.nvars();
        let mut p = MultiPoly::zero(nv);
        for (i, m) in self.matrices.iter().enumerate() {
            let coef = m[(r, c)].clone();
            if !coef.is_zero() {
                let mut exp = vec![0u32; nv];
                exp[i] = 1;
                p.add_term(Expo(exp), coef);
            }
        }
        p
    }

    /// Evaluate the pencil at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<QMatrix> {
        if point.len() != self.nvars() {
            return Err(Error::NvarsMismatch(point.len(), self.nvars()));
        }
        let mut acc = QMatrix::zero(self.size, self.size);
        for (x, m) in point.iter().zip(&self.matrices) {
            acc = acc.add(&m.scale(x))?;
        }
        Ok(acc)
    }
}

/// Determinant of the pencil by fraction-free elimination. Homogeneous of
/// degree `N` (or zero).
pub fn pencil_det(p: &Pencil) -> Result<MultiPoly> {
    let entries: Vec<Vec<MultiPoly>> = (0..p.size)
        .map(|r| (0..p.size).map(|c| p.entry_poly(r, c)).collect())
        .collect();
    poly_matrix_det(entries, p.nvars())
}

/// Bareiss determinant of a square matrix of polynomials. All divisions are
/// exact by the Sylvester identity.
pub fn poly_matrix_det(mut m: Vec<Vec<MultiPoly>>, nvars: usize) -> Result<MultiPoly> {
    let n = m.len();
    for row in &m {
        if row.len() != n {
            return Err(Error::Validation("determinant of a non-square matrix".into()));
        }
    }
    if n == 0 {
        return Ok(MultiPoly::one(nvars));
    }
    let mut sign = 1i64;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(nvars));
            };
            m.swap(k, p);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot.mul(&m[i][j])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = MultiPoly::zero(nvars);
        }
        prev = pivot;
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = det.neg();
    }
    Ok(det)
}

/// All exponent vectors of total degree `d` over `nvars` variables, in
/// descending graded-lex order.
pub fn homogeneous_exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, d: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if nvars == 1 {
            acc.push(d);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for e in (0..=d).rev() {
            acc.push(e);
            rec(nvars - 1, d - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// Dense evaluation–interpolation determinant: the independent second path
/// used to cross-check [`pencil_det`]. Samples the pencil at deterministic
/// integer points and solves exactly for the homogeneous coefficients.
pub fn pencil_det_interpolate(p: &Pencil) -> Result<MultiPoly> {
    let n = p.size() as u32;
    let nv = p.nvars();
    if p.size() == 0 {
        return Ok(MultiPoly::one(nv));
    }
    let monomials = homogeneous_exponents(nv, n);
    let m = monomials.len();
    // Deterministic quasi-random integer points; retry with a shifted stream
    // if a sample matrix happens to be singular.
    for salt in 0u64..64 {
        let mut state = 0x9e3779b97f4a7c15u64.wrapping_add(salt);
        let mut next_int = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 19) as i64 - 9
        };
        let points: Vec<Vec<Rat>> = (0..m)
            .map(|_| (0..nv).map(|_| rat_int(next_int())).collect())
            .collect();
        let mut vander = QMatrix::zero(m, m);
        for (r, pt) in points.iter().enumerate() {
            for (c, mono) in monomials.iter().enumerate() {
                let mut v = Rat::one();
                for (x, &e) in pt.iter().zip(mono) {
                    for _ in 0..e {
                        v *= x;
                    }
                }
                vander[(r, c)] = v;
            }
        }
        let rhs: Vec<Rat> = points
            .iter()
            .map(|pt| p.eval(pt).and_then(|mat| mat.det()))
            .collect::<Result<Vec<_>>>()?;
        let Ok(coefs) = vander.solve(&rhs) else {
            continue; // singular sample; reseed
        };
        return MultiPoly::from_terms(nv, monomials.into_iter().zip(coefs).collect());
    }
    Err(Error::InvariantViolation(
        "interpolation points kept landing on a singular configuration".into(),
    ))
}

/// Exact characteristic polynomial `det(x·I − M)` as a univariate polynomial.
pub fn charpoly(m: &QMatrix) -> Result<MultiPoly> {
    if !m.is_square() {
        return Err(Error::Validation("charpoly requires a square matrix".into()));
    }
    let n = m.nrows();
    let x = MultiPoly::var(1, 0)?;
    let entries: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = MultiPoly::constant(1, -m[(i, j)].clone());
                    if i == j {
                        x.add(&c).expect("same nvars")
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    poly_matrix_det(entries, 1)
}

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = z`,
/// `T_m = 2 z T_{m−1} − T_{m−2}`.
pub fn tchebyshev(m: usize) -> MultiPoly {
    let z = MultiPoly::var(1, 0).expect("one variable");
    let two_z = z.scale(&rat_int(2));
    let mut prev = MultiPoly::one(1);
    if m == 0 {
        return prev;
    }
    let mut cur = z;
    for _ in 1..m {
        let next = two_z.mul(&cur).expect("nvars").sub(&prev).expect("nvars");
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluate a univariate polynomial at a square rational matrix (Horner).
pub fn eval_univariate_at_matrix(p: &MultiPoly, m: &QMatrix) -> Result<QMatrix> {
    if p.nvars() != 1 {
        return Err(Error::NvarsMismatch(p.nvars(), 1));
    }
    if !m.is_square() {
        return Err(Error::Validation("matrix argument must be square".into()));
    }
    let n = m.nrows();
    let deg = p.degree().unwrap_or(0) as u32;
    let mut acc = QMatrix::zero(n, n);
    for d in (0..=deg).rev() {
        acc = acc.mul(m)?;
        let c = p.coeff(&[d]);
        if !c.is_zero() {
            acc = acc.add(&QMatrix::identity(n).scale(&c))?;
        }
    }
    Ok(acc)
}

/// Real roots of a univariate polynomial that happen to be rational, with
/// multiplicities, via the rational root theorem and repeated deflation.
/// Returns the roots found and the deflated polynomial with no rational roots.
pub fn rational_roots(p: &MultiPoly) -> Result<(Vec<(Rat, usize)>, MultiPoly)> {
    if p.nvars() != 1 {
        return Err(Error::NvarsMismatch(p.nvars(), 1));
    }
    let mut rest = p.scale_normalize();
    let mut roots: Vec<(Rat, usize)> = Vec::new();
    if rest.is_zero() {
        return Ok((roots, rest));
    }
    // Strip powers of z.
    let min_pow = rest.terms.keys().map(|e| e.0[0]).min().unwrap_or(0);
    if min_pow > 0 {
        let z_pow = MultiPoly::from_terms(1, vec![(vec![min_pow], Rat::one())])?;
        rest = rest.div_exact(&z_pow)?;
        roots.push((Rat::zero(), min_pow as usize));
    }
    loop {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let lead = rest.leading().expect("nonzero").1.numer().clone();
        let constant = rest.coeff(&[0]).numer().clone();
        let mut found: Option<Rat> = None;
        'search: for q in positive_divisors(&lead) {
            for pnum in positive_divisors(&constant) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&pnum * BigInt::from(sign), q.clone());
                    if rest.eval(std::slice::from_ref(&cand))?.is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let Some(root) = found else { break };
        let mut mult = 0usize;
        // (z - root)
        let factor = MultiPoly::from_terms(1, vec![(vec![1], Rat::one()), (vec![0], -root.clone())])?;
        while rest.degree().unwrap_or(0) >= 1 && rest.eval(std::slice::from_ref(&root))?.is_zero() {
            rest = rest.div_exact(&factor)?;
            mult += 1;
        }
        roots.push((root, mult));
    }
    Ok((roots, rest))
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            let other = &n / &d;
            if other != d {
                divs.push(other);
            }
        }
        d += 1;
    }
    divs.sort();
    divs
}

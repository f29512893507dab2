//! Exact matrix checks for Kronecker sums `g (x) I_t + I_s (x) k`.
//!
//! The bracket of two Kronecker sums splits into the Kronecker sum of the
//! brackets, and trace-zero `g`, `k` with `g (x) I_t = I_s (x) k` are both
//! zero. Both facts are checked here on integer matrices, symbolically for
//! `s = t = 2`, and by exact linear algebra.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense row-major matrix over a commutative ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;

/// Entry type for [`Matrix`].
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<T> {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Matrix unit `e_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, T::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Matrix<T>> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(shape("matrix must have at least one row and column"));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(shape("rows have different lengths"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn trace(&self) -> Result<T> {
        if !self.is_square() {
            return Err(shape(format!(
                "trace of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i).clone()))
    }

    fn same_shape(&self, other: &Matrix<T>) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &Matrix<T>, f: impl Fn(T, T) -> T) -> Result<Matrix<T>> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `xy - yx`.
    pub fn bracket(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn kron(&self, other: &Matrix<T>) -> Matrix<T> {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(
                            i * other.rows + p,
                            j * other.cols + q,
                            a.clone() * other.get(p, q).clone(),
                        );
                    }
                }
            }
        }
        out
    }
}

fn square<T: Ring>(m: &Matrix<T>, name: &str) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows)
    } else {
        Err(shape(format!(
            "{name} is {}x{}, not square",
            m.rows, m.cols
        )))
    }
}

/// `g (x) I_t + I_s (x) k`.
pub fn kronecker_sum<T: Ring>(g: &Matrix<T>, k: &Matrix<T>) -> Result<Matrix<T>> {
    let s = square(g, "g")?;
    let t = square(k, "k")?;
    g.kron(&Matrix::identity(t))
        .add(&Matrix::identity(s).kron(k))
}

/// Whether `[A, A'] = [g, g'] (x) I_t + I_s (x) [k, k']` for the Kronecker
/// sums `A`, `A'`.
pub fn bracket_split_check<T: Ring>(
    g: &Matrix<T>,
    g2: &Matrix<T>,
    k: &Matrix<T>,
    k2: &Matrix<T>,
) -> Result<bool> {
    g.same_shape(g2)?;
    k.same_shape(k2)?;
    let a = kronecker_sum(g, k)?;
    let a2 = kronecker_sum(g2, k2)?;
    let lhs = a.bracket(&a2)?;
    let rhs = kronecker_sum(&g.bracket(g2)?, &k.bracket(k2)?)?;
    Ok(lhs == rhs)
}

/// Polynomial with integer coefficients; monomials are exponent vectors
/// with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(BTreeMap<Vec<u32>, i64>);

impl Poly {
    pub fn var(i: usize) -> Poly {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        Poly(BTreeMap::from([(exps, 1)]))
    }

    fn insert(&mut self, mono: Vec<u32>, c: i64) {
        let entry = self.0.entry(mono).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.0.retain(|_, c| *c != 0);
        }
    }
}

impl Zero for Poly {
    fn zero() -> Poly {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for Poly {
    fn one() -> Poly {
        Poly(BTreeMap::from([(Vec::new(), 1)]))
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.0 {
            self.insert(m, c);
        }
        self
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|(m, c)| (m, -c)).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &rhs.0 {
                let len = ma.len().max(mb.len());
                let mut m: Vec<u32> = (0..len)
                    .map(|i| ma.get(i).unwrap_or(&0) + mb.get(i).unwrap_or(&0))
                    .collect();
                while m.last() == Some(&0) {
                    m.pop();
                }
                out.insert(m, ca * cb);
            }
        }
        out
    }
}

/// Checks the bracket identity with every entry of `g, g'` (`s x s`) and
/// `k, k'` (`t x t`) an independent indeterminate, comparing all `(st)^2`
/// coordinates as polynomials.
pub fn symbolic_bracket_split_check(s: usize, t: usize) -> Result<bool> {
    if s == 0 || t == 0 {
        return Err(shape("sizes must be positive"));
    }
    let mut next = 0;
    let mut generic = |n: usize| {
        let mut m = Matrix::<Poly>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Poly::var(next));
                next += 1;
            }
        }
        m
    };
    let (g, g2, k, k2) = (generic(s), generic(s), generic(t), generic(t));
    bracket_split_check(&g, &g2, &k, &k2)
}

/// Basis of the rational null space of `rows` (each of length `cols`), in
/// reduced form.
fn null_space(mut rows: Vec<Vec<Rational64>>, cols: usize) -> Vec<Vec<Rational64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in &mut rows[r] {
            *x *= inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational64::zero(); cols];
            v[f] = Rational64::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f];
            }
            v
        })
        .collect()
}

/// Linear equations in the entries of `g` (`s*s` unknowns, then `t*t` for
/// `k`) expressing `g (x) I_t = I_s (x) k`, optionally with zero traces.
fn intersection_equations(s: usize, t: usize, trace_zero: bool) -> Vec<Vec<Rational64>> {
    let n = s * s + t * t;
    let mut eqs = Vec::new();
    for i in 0..s {
        for a in 0..t {
            for j in 0..s {
                for b in 0..t {
                    let mut row = vec![Rational64::zero(); n];
                    if a == b {
                        row[i * s + j] += Rational64::one();
                    }
                    if i == j {
                        row[s * s + a * t + b] -= Rational64::one();
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        eqs.push(row);
                    }
                }
            }
        }
    }
    if trace_zero {
        let mut tg = vec![Rational64::zero(); n];
        let mut tk = vec![Rational64::zero(); n];
        (0..s).for_each(|i| tg[i * s + i] = Rational64::one());
        (0..t).for_each(|a| tk[s * s + a * t + a] = Rational64::one());
        eqs.push(tg);
        eqs.push(tk);
    }
    eqs
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, rng.random_range(-bound..=bound));
        }
    }
    m
}

fn random_trace_zero(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> IntMatrix {
    let mut m = random_matrix(rng, n, bound);
    let tr = m.trace().expect("square");
    let last = *m.get(n - 1, n - 1) - tr;
    m.set(n - 1, n - 1, last);
    m
}

/// Checks that trace-zero `g` (`s x s`) and `k` (`t x t`) with
/// `g (x) I_t = I_s (x) k` vanish.
///
/// Solves the coordinate equations exactly: without the trace conditions
/// the solutions must be exactly the scalar pairs `(c I_s, c I_t)`, and
/// with them only zero. Then `samples` random trace-zero pairs are
/// compared coordinate-wise.
pub fn trivial_intersection_check(s: usize, t: usize, samples: usize, seed: u64) -> Result<bool> {
    if s < 2 || t < 2 {
        return Err(shape(format!("sizes must be at least 2, got {s} and {t}")));
    }
    let n = s * s + t * t;
    let scalars = null_space(intersection_equations(s, t, false), n);
    let mut expected = vec![Rational64::zero(); n];
    (0..s).for_each(|i| expected[i * s + i] = Rational64::one());
    (0..t).for_each(|a| expected[s * s + a * t + a] = Rational64::one());
    let scalar_only = scalars.len() == 1 && {
        // rescale so the first diagonal entry of g is 1
        let v = &scalars[0];
        !v[0].is_zero() && v.iter().map(|x| x / v[0]).eq(expected.iter().copied())
    };
    let trivial = null_space(intersection_equations(s, t, true), n).is_empty();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity_s = IntMatrix::identity(s);
    let identity_t = IntMatrix::identity(t);
    let sampled = (0..samples).all(|_| {
        let g = random_trace_zero(&mut rng, s, 5);
        let k = random_trace_zero(&mut rng, t, 5);
        let equal = g.kron(&identity_t) == identity_s.kron(&k);
        !equal || (g.is_zero() && k.is_zero())
    });
    Ok(scalar_only && trivial && sampled)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerReport {
    pub max_size: usize,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<KroneckerCheck>,
}

impl KroneckerReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every check for sizes `2..=max_size`: trace of Kronecker sums,
/// the bracket identity on `samples` random quadruples, the symbolic
/// identity at `s = t = 2`, and trivial intersection.
pub fn verify_kronecker(max_size: usize, samples: usize, seed: u64) -> Result<KroneckerReport> {
    if max_size < 2 {
        return Err(shape("max size must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (2..=max_size).collect();
    let mut checks = Vec::new();
    let mut push = |name: String, pass: bool| checks.push(KroneckerCheck { name, pass });

    let mut trace_ok = true;
    let mut bracket_ok = true;
    for _ in 0..samples {
        let s = sizes[rng.random_range(0..sizes.len())];
        let t = sizes[rng.random_range(0..sizes.len())];
        let g = random_matrix(&mut rng, s, 9);
        let g2 = random_matrix(&mut rng, s, 9);
        let k = random_matrix(&mut rng, t, 9);
        let k2 = random_matrix(&mut rng, t, 9);
        let sum = kronecker_sum(&g, &k)?;
        trace_ok &= sum.trace()? == t as i64 * g.trace()? + s as i64 * k.trace()?;
        bracket_ok &= bracket_split_check(&g, &g2, &k, &k2)?;
    }
    push(
        format!("trace of Kronecker sum ({samples} samples)"),
        trace_ok,
    );
    push(
        format!("bracket splits ({samples} random quadruples)"),
        bracket_ok,
    );
    push(
        "bracket splits symbolically (s = t = 2)".to_string(),
        symbolic_bracket_split_check(2, 2)?,
    );
    for &s in &sizes {
        for &t in &sizes {
            let pass =
                trivial_intersection_check(s, t, samples.min(100), seed ^ (s * 64 + t) as u64)?;
            push(format!("trivial intersection (s = {s}, t = {t})"), pass);
        }
    }
    Ok(KroneckerReport {
        max_size,
        samples,
        seed,
        checks,
    })
}

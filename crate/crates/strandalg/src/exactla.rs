//! Exact sparse linear algebra over the rationals and prime fields, plus an
//! integer Smith normal form for homology over the integers.
//!
//! All arithmetic is arbitrary precision; fixed-width numerics are never used
//! for elimination. Pivoting is deterministic (leftmost column, then lowest
//! row index), so every basis and report this module produces is reproducible
//! byte for byte. Rank uses a dense fraction-free (Bareiss) elimination below
//! 64x64 and a sparse integer elimination with gcd normalization above;
//! vector-producing operations (kernel, image, quotient) run a sparse-row
//! reduced row echelon form over the field.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Coefficient domain tag: the rationals, a prime field, or the integers
/// (integers support only Smith normal form, not elimination ranks).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
    Z,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= p {
        if p % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Fp(p) if !is_prime(*p) => Err(Error::UnsupportedField(format!(
                "{p} is not prime"
            ))),
            _ => Ok(()),
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, FieldSpec::Z)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Fp(p) => write!(f, "f{p}"),
            FieldSpec::Z => write!(f, "z"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `z`, or `f<p>` with `p` prime (so `f2`, `f3`, `f5`, ...).
    fn from_str(s: &str) -> Result<Self> {
        let spec = match s {
            "q" | "Q" => FieldSpec::Q,
            "z" | "Z" => FieldSpec::Z,
            _ => {
                let p = s
                    .strip_prefix(['f', 'F'])
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::UnsupportedField(format!("unrecognized field `{s}`"))
                    })?;
                FieldSpec::Fp(p)
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// An exact scalar in one of the supported coefficient domains.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Q(BigRational),
    /// A residue `v` in `[0, p)`.
    Fp { p: u64, v: u64 },
    Z(BigInt),
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Scalar {
        Scalar::from_int(field, 0)
    }

    pub fn one(field: FieldSpec) -> Scalar {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: FieldSpec, x: i64) -> Scalar {
        match field {
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(x))),
            FieldSpec::Fp(p) => Scalar::Fp { p, v: x.rem_euclid(p as i64) as u64 },
            FieldSpec::Z => Scalar::Z(BigInt::from(x)),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
            Scalar::Z(_) => FieldSpec::Z,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Z(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Z(x) => x.is_one(),
        }
    }

    fn same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across coefficient domains"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.same_field(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { p: *p, v: (a + b) % p }
            }
            (Scalar::Z(a), Scalar::Z(b)) => Scalar::Z(a + b),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
            Scalar::Z(a) => Scalar::Z(-a),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.same_field(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { p: *p, v: mulmod(*a, *b, *p) }
            }
            (Scalar::Z(a), Scalar::Z(b)) => Scalar::Z(a * b),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse; errors on zero or on an integer scalar other
    /// than a unit.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::BadInput("inverse of zero".into()));
        }
        match self {
            Scalar::Q(a) => Ok(Scalar::Q(a.recip())),
            Scalar::Fp { p, v } => Ok(Scalar::Fp { p: *p, v: powmod(*v, p - 2, *p) }),
            Scalar::Z(a) if a.is_one() || (-a).is_one() => Ok(Scalar::Z(a.clone())),
            Scalar::Z(_) => Err(Error::UnsupportedField(
                "integer scalars are not invertible; use a field".into(),
            )),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) => write!(f, "{x}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Z(x) => write!(f, "{x}"),
        }
    }
}

/// A sparse matrix with exact entries over a fixed coefficient domain.
///
/// Entries are stored row-major in a `BTreeMap`, zeros are never stored, and
/// all iteration orders are deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize, field: FieldSpec) -> SparseMatrix {
        SparseMatrix { rows, cols, field, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize, field: FieldSpec) -> SparseMatrix {
        let mut m = SparseMatrix::new(n, n, field);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one(field));
        }
        m
    }

    /// Build from integer entries, mapped into the coefficient domain.
    /// Later duplicates overwrite earlier ones.
    pub fn from_int_entries(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        entries: &[(usize, usize, i64)],
    ) -> Result<SparseMatrix> {
        let mut m = SparseMatrix::new(rows, cols, field);
        for &(r, c, x) in entries {
            m.set(r, c, Scalar::from_int(field, x))?;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::DimensionMismatch(format!(
                "entry ({r},{c}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        if s.field() != self.field {
            return Err(Error::FieldMismatch(format!(
                "entry over {} in a matrix over {}",
                s.field(),
                self.field
            )));
        }
        if s.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), s);
        }
        Ok(())
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), s)| (r, c, s))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.cols, self.rows, self.field);
        for (&(r, c), s) in &self.entries {
            m.entries.insert((c, r), s.clone());
        }
        m
    }

    /// Matrix product `self * other` (so `self.cols == other.rows`).
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "product of matrices over {} and {}",
                self.field, other.field
            )));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (&(r, k), a) in &self.entries {
            for (&(k2, c), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                let term = a.mul(b);
                let slot = acc
                    .entry((r, c))
                    .or_insert_with(|| Scalar::zero(self.field));
                *slot = slot.add(&term);
            }
        }
        let mut m = SparseMatrix::new(self.rows, other.cols, self.field);
        for ((r, c), s) in acc {
            if !s.is_zero() {
                m.entries.insert((r, c), s);
            }
        }
        Ok(m)
    }

    /// Apply to a dense column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} under a {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for (&(r, c), s) in &self.entries {
            out[r] = out[r].add(&s.mul(&v[c]));
        }
        Ok(out)
    }

    /// Rows as sparse maps column -> scalar.
    fn sparse_rows(&self) -> Vec<BTreeMap<usize, Scalar>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for (&(r, c), s) in &self.entries {
            rows[r].insert(c, s.clone());
        }
        rows
    }

    /// Exact rank over a field; rejects integer matrices (use [`snf`]).
    pub fn rank(&self) -> Result<usize> {
        match self.field {
            FieldSpec::Z => Err(Error::UnsupportedField(
                "rank over the integers is ambiguous; use snf".into(),
            )),
            FieldSpec::Q => {
                if self.rows < 64 && self.cols < 64 {
                    Ok(bareiss_rank_dense(&self.to_integer_rows_dense()))
                } else {
                    Ok(integer_rank_sparse(self.to_integer_rows_sparse(), self.cols))
                }
            }
            FieldSpec::Fp(_) => {
                let mut rows = self.sparse_rows();
                Ok(rref_rows(&mut rows, self.field).len())
            }
        }
    }

    /// Clear denominators row by row, producing dense integer rows.
    fn to_integer_rows_dense(&self) -> Vec<Vec<BigInt>> {
        let sparse = self.to_integer_rows_sparse();
        sparse
            .into_iter()
            .map(|row| {
                let mut dense = vec![BigInt::zero(); self.cols];
                for (c, x) in row {
                    dense[c] = x;
                }
                dense
            })
            .collect()
    }

    fn to_integer_rows_sparse(&self) -> Vec<BTreeMap<usize, BigInt>> {
        let mut lcms = vec![BigInt::one(); self.rows];
        for (&(r, _), s) in &self.entries {
            if let Scalar::Q(q) = s {
                lcms[r] = lcms[r].lcm(q.denom());
            }
        }
        let mut out = vec![BTreeMap::new(); self.rows];
        for (&(r, c), s) in &self.entries {
            let x = match s {
                Scalar::Q(q) => q.numer() * (&lcms[r] / q.denom()),
                Scalar::Z(z) => z.clone(),
                Scalar::Fp { .. } => unreachable!("integer rows of a prime-field matrix"),
            };
            out[r].insert(c, x);
        }
        out
    }
}

/// Dense fraction-free elimination; the division by the previous pivot is
/// exact (every intermediate entry is a minor of the input).
fn bareiss_rank_dense(a: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = a.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(r) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, r);
        for r in pivot_row + 1..rows {
            for c in col + 1..cols {
                let num = &a[pivot_row][col] * &a[r][c] - &a[r][col] * &a[pivot_row][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[pivot_row][col].clone();
        pivot_row += 1;
    }
    pivot_row
}

/// Sparse integer elimination: cross-multiplication keeps entries integral,
/// and each updated row is divided by the gcd of its entries to tame growth.
fn integer_rank_sparse(mut rows: Vec<BTreeMap<usize, BigInt>>, cols: usize) -> usize {
    let mut active: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pos) = active
            .iter()
            .position(|&r| rows[r].keys().next() == Some(&col))
        else {
            continue;
        };
        let pivot_idx = active.remove(pos);
        rank += 1;
        let pivot_row = rows[pivot_idx].clone();
        let pivot_val = pivot_row[&col].clone();
        for &r in &active {
            let Some(coeff) = rows[r].get(&col).cloned() else {
                continue;
            };
            let mut updated: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&c, x) in &rows[r] {
                updated.insert(c, x * &pivot_val);
            }
            for (&c, x) in &pivot_row {
                let delta = x * &coeff;
                let slot = updated.entry(c).or_insert_with(BigInt::zero);
                *slot -= delta;
                if slot.is_zero() {
                    updated.remove(&c);
                }
            }
            let mut gcd = BigInt::zero();
            for x in updated.values() {
                gcd = gcd.gcd(x);
            }
            if !gcd.is_zero() && !gcd.is_one() {
                for x in updated.values_mut() {
                    *x = &*x / &gcd;
                }
            }
            rows[r] = updated;
        }
        active.retain(|&r| !rows[r].is_empty());
    }
    rank
}

/// In-place reduced row echelon form over a field on sparse rows; returns the
/// pivot columns in order. Zero rows are dropped.
fn rref_rows(rows: &mut Vec<BTreeMap<usize, Scalar>>, field: FieldSpec) -> Vec<usize> {
    assert!(field.is_field(), "row reduction requires a field");
    let cols_bound = rows
        .iter()
        .filter_map(|r| r.keys().next_back().copied())
        .max()
        .map_or(0, |c| c + 1);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols_bound {
        let Some(r) = (next..rows.len()).find(|&r| rows[r].contains_key(&col)) else {
            continue;
        };
        rows.swap(next, r);
        let inv = rows[next][&col].inv().expect("nonzero pivot");
        let normalized: BTreeMap<usize, Scalar> = rows[next]
            .iter()
            .map(|(&c, s)| (c, s.mul(&inv)))
            .collect();
        rows[next] = normalized;
        let pivot_row = rows[next].clone();
        for r2 in 0..rows.len() {
            if r2 == next {
                continue;
            }
            let Some(coeff) = rows[r2].get(&col).cloned() else {
                continue;
            };
            for (&c, x) in &pivot_row {
                let delta = coeff.mul(x);
                let cur = rows[r2]
                    .get(&c)
                    .cloned()
                    .unwrap_or_else(|| Scalar::zero(field));
                let new = cur.sub(&delta);
                if new.is_zero() {
                    rows[r2].remove(&c);
                } else {
                    rows[r2].insert(c, new);
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// Reduce `v` against echelon rows with unit pivots: clears every pivot
/// coordinate and returns the coefficients used.
fn reduce_vector(
    v: &mut Vec<Scalar>,
    rows: &[BTreeMap<usize, Scalar>],
    pivots: &[usize],
) -> Vec<Scalar> {
    let mut coeffs = Vec::with_capacity(rows.len());
    for (row, &p) in rows.iter().zip(pivots) {
        let coeff = v[p].clone();
        if !coeff.is_zero() {
            for (&c, x) in row {
                v[c] = v[c].sub(&coeff.mul(x));
            }
        }
        coeffs.push(coeff);
    }
    coeffs
}

/// Basis of the kernel (columns of the result); requires a field.
pub fn kernel_basis(m: &SparseMatrix) -> Result<SparseMatrix> {
    if !m.field().is_field() {
        return Err(Error::UnsupportedField(
            "kernel basis requires a field".into(),
        ));
    }
    let mut rows = m.sparse_rows();
    let pivots = rref_rows(&mut rows, m.field());
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivot_set.contains(c)).collect();
    let mut out = SparseMatrix::new(m.cols(), free.len(), m.field());
    for (k, &f) in free.iter().enumerate() {
        out.set(f, k, Scalar::one(m.field()))?;
        for (row, &p) in rows.iter().zip(&pivots) {
            if let Some(x) = row.get(&f) {
                out.set(p, k, x.neg())?;
            }
        }
    }
    Ok(out)
}

/// Basis of the column span: the original columns at the RREF pivot
/// positions (leftmost-column convention makes the choice deterministic).
pub fn image_basis(m: &SparseMatrix) -> Result<SparseMatrix> {
    if !m.field().is_field() {
        return Err(Error::UnsupportedField(
            "image basis requires a field".into(),
        ));
    }
    let mut mrows = m.sparse_rows();
    let pivots = rref_rows(&mut mrows, m.field());
    let mut out = SparseMatrix::new(m.rows(), pivots.len(), m.field());
    for (k, &c) in pivots.iter().enumerate() {
        for r in 0..m.rows() {
            let s = m.get(r, c);
            if !s.is_zero() {
                out.set(r, k, s)?;
            }
        }
    }
    Ok(out)
}

/// A quotient `span(S) / span(T)` with chosen representatives and a
/// projection onto quotient coordinates.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    ambient: usize,
    field: FieldSpec,
    t_rows: Vec<BTreeMap<usize, Scalar>>,
    t_pivots: Vec<usize>,
    q_rows: Vec<BTreeMap<usize, Scalar>>,
    q_pivots: Vec<usize>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.q_rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Representative vectors (columns) for the quotient basis.
    pub fn representatives(&self) -> SparseMatrix {
        let mut m = SparseMatrix::new(self.ambient, self.q_rows.len(), self.field);
        for (k, row) in self.q_rows.iter().enumerate() {
            for (&c, s) in row {
                m.set(c, k, s.clone()).expect("in-range representative");
            }
        }
        m
    }

    /// Coordinates of `[v]` in the quotient basis; errors if `v` lies
    /// outside `span(S) + span(T)`.
    pub fn project(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut w = v.to_vec();
        reduce_vector(&mut w, &self.t_rows, &self.t_pivots);
        let coeffs = reduce_vector(&mut w, &self.q_rows, &self.q_pivots);
        if w.iter().any(|s| !s.is_zero()) {
            return Err(Error::BadInput(
                "vector outside the spanned subspace".into(),
            ));
        }
        Ok(coeffs)
    }
}

/// Quotient of column spans `span(s) / span(t)`; requires `span(t)` to lie
/// inside `span(s)`.
pub fn quotient_basis(s: &SparseMatrix, t: &SparseMatrix) -> Result<QuotientBasis> {
    if !s.field().is_field() || s.field() != t.field() {
        return Err(Error::FieldMismatch(
            "quotient requires both spans over one field".into(),
        ));
    }
    if s.rows() != t.rows() {
        return Err(Error::DimensionMismatch(format!(
            "spans in ambient dimensions {} and {}",
            s.rows(),
            t.rows()
        )));
    }
    let ambient = s.rows();
    let field = s.field();
    let mut t_rows = t.transpose().sparse_rows();
    let t_pivots = rref_rows(&mut t_rows, field);
    // Containment check: every t generator must reduce to zero against s.
    let mut s_rows_echelon = s.transpose().sparse_rows();
    let s_pivots = rref_rows(&mut s_rows_echelon, field);
    for k in 0..t.cols() {
        let mut v: Vec<Scalar> = (0..ambient).map(|r| t.get(r, k)).collect();
        reduce_vector(&mut v, &s_rows_echelon, &s_pivots);
        if v.iter().any(|x| !x.is_zero()) {
            return Err(Error::BadInput(
                "denominator span not contained in numerator span".into(),
            ));
        }
    }
    // Reduce the s generators modulo t, then echelonize the residues.
    let mut residues: Vec<BTreeMap<usize, Scalar>> = Vec::with_capacity(s.cols());
    for k in 0..s.cols() {
        let mut v: Vec<Scalar> = (0..ambient).map(|r| s.get(r, k)).collect();
        reduce_vector(&mut v, &t_rows, &t_pivots);
        let row: BTreeMap<usize, Scalar> = v
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect();
        residues.push(row);
    }
    let q_pivots = rref_rows(&mut residues, field);
    Ok(QuotientBasis {
        ambient,
        field,
        t_rows,
        t_pivots,
        q_rows: residues,
        q_pivots,
    })
}

/// Smith normal form report for an integer matrix.
#[derive(Clone, Debug)]
pub struct SnfReport {
    /// Nonzero diagonal invariants, each dividing the next.
    pub invariants: Vec<BigInt>,
    /// The invariants exceeding 1 (the torsion of the cokernel).
    pub torsion: Vec<BigInt>,
}

impl SnfReport {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

/// Smith normal form over the integers. Accepts matrices tagged `Z` (or `Q`
/// matrices whose entries are integral).
pub fn snf(m: &SparseMatrix) -> Result<SnfReport> {
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); m.cols()]; m.rows()];
    for (r, c, s) in m.entries() {
        a[r][c] = match s {
            Scalar::Z(x) => x.clone(),
            Scalar::Q(q) if q.is_integer() => q.to_integer(),
            _ => {
                return Err(Error::UnsupportedField(
                    "snf requires integer entries".into(),
                ))
            }
        };
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut invariants = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Deterministic pivot: smallest absolute value, then lowest (r, c).
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pr, pc)) => a[r][c].abs() < a[pr][pc].abs(),
                };
                if better {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        // Reduce until the pivot divides its whole row and column.
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = &a[r][t] / &a[t][t];
                if !q.is_zero() {
                    for c in t..cols {
                        let sub = &q * &a[t][c];
                        a[r][c] -= sub;
                    }
                }
                if !a[r][t].is_zero() {
                    a.swap(t, r);
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = &a[t][c] / &a[t][t];
                if !q.is_zero() {
                    for r in t..rows {
                        let sub = &q * &a[r][t];
                        a[r][c] -= sub;
                    }
                }
                if !a[t][c].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce the divisibility chain: if the pivot misses an entry
            // of the remaining block, absorb that row and restart.
            let mut offender = None;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(&a[r][c] % &a[t][t]).is_zero() {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => {
                    for c in t..cols {
                        let add = a[r][c].clone();
                        a[t][c] += add;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for c in t..cols {
                a[t][c] = -a[t][c].clone();
            }
        }
        invariants.push(a[t][t].clone());
        t += 1;
    }
    let torsion = invariants
        .iter()
        .filter(|x| !x.is_one())
        .cloned()
        .collect();
    Ok(SnfReport { invariants, torsion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mat(rows: usize, cols: usize, field: FieldSpec, data: &[&[i64]]) -> SparseMatrix {
        let mut entries = Vec::new();
        for (r, row) in data.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                entries.push((r, c, x));
            }
        }
        SparseMatrix::from_int_entries(rows, cols, field, &entries).unwrap()
    }

    /// Naive textbook Gaussian elimination over rationals, dense, as an
    /// independent rank oracle.
    fn naive_rank(data: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = a[rank][col].recip();
            for c in col..cols {
                a[rank][c] = &a[rank][c] * &inv;
            }
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..cols {
                        let sub = &f * &a[rank][c];
                        a[r][c] = &a[r][c] - sub;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn scalar_arithmetic_examples() {
        let f5 = FieldSpec::Fp(5);
        let two = Scalar::from_int(f5, 2);
        let three = Scalar::from_int(f5, 3);
        assert!(two.mul(&three).is_one());
        assert_eq!(two.inv().unwrap(), three);
        assert_eq!(Scalar::from_int(f5, -1), Scalar::from_int(f5, 4));
        let half = Scalar::from_int(FieldSpec::Q, 2).inv().unwrap();
        assert_eq!(half.add(&half), Scalar::one(FieldSpec::Q));
        assert!(Scalar::from_int(FieldSpec::Z, 2).inv().is_err());
    }

    #[test]
    fn fieldspec_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Q);
        assert_eq!("f2".parse::<FieldSpec>().unwrap(), FieldSpec::Fp(2));
        assert_eq!("f101".parse::<FieldSpec>().unwrap(), FieldSpec::Fp(101));
        assert_eq!("z".parse::<FieldSpec>().unwrap(), FieldSpec::Z);
        assert!("f4".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Fp(3).to_string(), "f3");
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SparseMatrix::new(3, 4, FieldSpec::Q).rank().unwrap(), 0);
        assert_eq!(SparseMatrix::identity(5, FieldSpec::Q).rank().unwrap(), 5);
        for field in [FieldSpec::Q, FieldSpec::Fp(2), FieldSpec::Fp(3)] {
            let row = mat(1, 2, field, &[&[1, 1]]);
            assert_eq!(row.rank().unwrap(), 1, "over {field}");
            let square = mat(2, 2, field, &[&[1, 1], &[-1, -1]]);
            assert_eq!(square.rank().unwrap(), 1, "over {field}");
        }
        assert!(SparseMatrix::identity(2, FieldSpec::Z).rank().is_err());
    }

    #[test]
    fn rank_matches_naive_oracle_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=7);
            let cols = rng.gen_range(1..=7);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let expected = naive_rank(&data);
            let slices: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
            let m = mat(rows, cols, FieldSpec::Q, &slices);
            assert_eq!(m.rank().unwrap(), expected);
            // SNF cross-check: rank equals the number of nonzero invariants.
            let mz = mat(rows, cols, FieldSpec::Z, &slices);
            assert_eq!(snf(&mz).unwrap().rank(), expected);
            // A prime-field rank never exceeds the rational rank, and the
            // SNF torsion says exactly when they differ.
            let report = snf(&mz).unwrap();
            for p in [2u64, 3, 5] {
                let mp = mat(rows, cols, FieldSpec::Fp(p), &slices);
                let drop = report
                    .invariants
                    .iter()
                    .filter(|x| (&**x % BigInt::from(p)).is_zero())
                    .count();
                assert_eq!(mp.rank().unwrap(), expected - drop, "p={p}");
            }
            // Rank-nullity.
            let nullity = kernel_basis(&m).unwrap().cols();
            assert_eq!(expected + nullity, cols);
        }
    }

    #[test]
    fn dense_and_sparse_rank_paths_agree() {
        // 80x80 exceeds the dense threshold; embed a known-rank block.
        let mut entries = Vec::new();
        for i in 0..80usize {
            for j in 0..80usize {
                // Rank-2 pattern plus an identity block on the first 40.
                if i < 40 && i == j {
                    entries.push((i, j, 1));
                } else if i >= 40 {
                    entries.push((i, j, (i as i64 - 40) % 2 + 1));
                }
            }
        }
        let big = SparseMatrix::from_int_entries(80, 80, FieldSpec::Q, &entries).unwrap();
        // Rows 40.. alternate between all-1 and all-2 rows: those contribute
        // rank 1 beyond the identity block only where they are independent.
        // Compute the truth with the naive oracle.
        let mut dense = vec![vec![0i64; 80]; 80];
        for &(r, c, x) in &entries {
            dense[r][c] = x;
        }
        assert_eq!(big.rank().unwrap(), naive_rank(&dense));
        let modular = SparseMatrix::from_int_entries(80, 80, FieldSpec::Fp(5), &entries).unwrap();
        assert_eq!(modular.rank().unwrap(), naive_rank(&dense));
    }

    #[test]
    fn kernel_and_image_examples() {
        let id = SparseMatrix::identity(4, FieldSpec::Q);
        assert_eq!(kernel_basis(&id).unwrap().cols(), 0);
        let row = mat(1, 2, FieldSpec::Q, &[&[1, 1]]);
        let ker = kernel_basis(&row).unwrap();
        assert_eq!(ker.cols(), 1);
        assert!(row.mul(&ker).unwrap().is_zero());
        let square = mat(2, 2, FieldSpec::Q, &[&[1, 1], &[-1, -1]]);
        let im = image_basis(&square).unwrap();
        assert_eq!(im.cols(), 1);
        assert_eq!(im.get(0, 0), Scalar::one(FieldSpec::Q));
        assert_eq!(im.get(1, 0), Scalar::from_int(FieldSpec::Q, -1));
    }

    #[test]
    fn kernel_annihilates_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..100 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let entries: Vec<(usize, usize, i64)> = (0..rows * cols)
                .filter_map(|k| {
                    let x: i64 = rng.gen_range(-2..=2);
                    (x != 0).then_some((k / cols, k % cols, x))
                })
                .collect();
            for field in [FieldSpec::Q, FieldSpec::Fp(3)] {
                let m = SparseMatrix::from_int_entries(rows, cols, field, &entries).unwrap();
                let ker = kernel_basis(&m).unwrap();
                assert!(m.mul(&ker).unwrap().is_zero());
                let im = image_basis(&m).unwrap();
                assert_eq!(im.rank().unwrap(), im.cols());
                assert_eq!(im.cols() + ker.cols(), cols);
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let s = SparseMatrix::identity(3, FieldSpec::Q);
        let t = mat(3, 1, FieldSpec::Q, &[&[1], &[1], &[0]]);
        let q = quotient_basis(&s, &t).unwrap();
        assert_eq!(q.dim(), 2);
        // (1,1,0) is killed in the quotient.
        let dead: Vec<Scalar> = vec![
            Scalar::one(FieldSpec::Q),
            Scalar::one(FieldSpec::Q),
            Scalar::zero(FieldSpec::Q),
        ];
        assert!(q.project(&dead).unwrap().iter().all(Scalar::is_zero));
        // Representatives project to unit coordinate vectors.
        let reps = q.representatives();
        for k in 0..q.dim() {
            let v: Vec<Scalar> = (0..3).map(|r| reps.get(r, k)).collect();
            let coords = q.project(&v).unwrap();
            for (j, c) in coords.iter().enumerate() {
                assert_eq!(c.is_one(), j == k);
            }
        }
        // A quotient by something outside the span fails.
        let small = mat(3, 1, FieldSpec::Q, &[&[1], &[0], &[0]]);
        let outside = mat(3, 1, FieldSpec::Q, &[&[0], &[1], &[0]]);
        assert!(quotient_basis(&small, &outside).is_err());
    }

    #[test]
    fn quotient_dimension_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..60 {
            let ambient = rng.gen_range(1..=6);
            let gens = rng.gen_range(1..=6);
            let entries: Vec<(usize, usize, i64)> = (0..ambient * gens)
                .filter_map(|k| {
                    let x: i64 = rng.gen_range(-2..=2);
                    (x != 0).then_some((k % ambient, k / ambient, x))
                })
                .collect();
            let t =
                SparseMatrix::from_int_entries(ambient, gens, FieldSpec::Q, &entries).unwrap();
            let s = SparseMatrix::identity(ambient, FieldSpec::Q);
            let q = quotient_basis(&s, &t).unwrap();
            assert_eq!(q.dim(), ambient - t.rank().unwrap());
        }
    }

    #[test]
    fn snf_examples() {
        let two = mat(1, 1, FieldSpec::Z, &[&[2]]);
        let report = snf(&two).unwrap();
        assert_eq!(report.invariants, vec![BigInt::from(2)]);
        assert_eq!(report.torsion, vec![BigInt::from(2)]);

        let zero = SparseMatrix::new(3, 2, FieldSpec::Z);
        assert!(snf(&zero).unwrap().invariants.is_empty());

        // diag(2,3) has cokernel Z/6: invariants (1,6).
        let diag = mat(2, 2, FieldSpec::Z, &[&[2, 0], &[0, 3]]);
        let report = snf(&diag).unwrap();
        assert_eq!(report.invariants, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(report.torsion, vec![BigInt::from(6)]);

        let diag46 = mat(2, 2, FieldSpec::Z, &[&[4, 0], &[0, 6]]);
        assert_eq!(
            snf(&diag46).unwrap().invariants,
            vec![BigInt::from(2), BigInt::from(12)]
        );
    }

    #[test]
    fn snf_divisibility_chain_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
        for _ in 0..80 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let entries: Vec<(usize, usize, i64)> = (0..rows * cols)
                .filter_map(|k| {
                    let x: i64 = rng.gen_range(-6..=6);
                    (x != 0).then_some((k / cols, k % cols, x))
                })
                .collect();
            let m = SparseMatrix::from_int_entries(rows, cols, FieldSpec::Z, &entries).unwrap();
            let report = snf(&m).unwrap();
            for w in report.invariants.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "chain {:?}", report.invariants);
            }
            assert!(report.invariants.iter().all(|x| x.is_positive()));
        }
    }

    #[test]
    fn matrix_product_and_apply() {
        let a = mat(2, 3, FieldSpec::Q, &[&[1, 0, 2], &[0, 1, -1]]);
        let b = mat(3, 2, FieldSpec::Q, &[&[1, 1], &[0, 1], &[1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.get(0, 0), Scalar::from_int(FieldSpec::Q, 3));
        assert_eq!(ab.get(0, 1), Scalar::from_int(FieldSpec::Q, 1));
        assert_eq!(ab.get(1, 0), Scalar::from_int(FieldSpec::Q, -1));
        assert_eq!(ab.get(1, 1), Scalar::from_int(FieldSpec::Q, 1));
        let v = vec![
            Scalar::one(FieldSpec::Q),
            Scalar::one(FieldSpec::Q),
            Scalar::one(FieldSpec::Q),
        ];
        let av = a.apply(&v).unwrap();
        assert_eq!(av[0], Scalar::from_int(FieldSpec::Q, 3));
        assert_eq!(av[1], Scalar::zero(FieldSpec::Q));
        assert!(a.mul(&a).is_err());
        let c = mat(2, 2, FieldSpec::Fp(2), &[&[1, 0], &[0, 1]]);
        assert!(a.mul(&c).is_err());
    }
}

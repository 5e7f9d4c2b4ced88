//! Higher Auslander algebras `A(n,d)` of type A, in two presentations, plus
//! the rank-graded dual-pattern algebra, complement duality, and the rotation
//! index map.
//!
//! `A(n,d)` has one basis element `f` per interleaved pair `(I, J)` of
//! `d`-subsets of `{1..n}`, composing along matching middles: `(I -> J)` then
//! `(J -> K)` is `(I -> K)` when `(I, K)` is itself interleaved, else zero.
//! All structure constants sit in the positive gauge `{0, +1}`.
//!
//! Multiplication throughout this crate is written in diagrammatic order:
//! `mul(a, b)` means "first `a`, then `b`", so `a`'s target must equal `b`'s
//! source. In the classical matrix-unit notation, the displayed product
//! `f_KJ . f_JI = f_KI` is `mul` applied to `(f_JI, f_KJ)`.

use crate::combinat::{
    enum_multisets, enum_subsets, factors_through_degenerate, interleaved, unit_diff, IndexSet,
};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// One basis element of a [`FinDimAlgebra`]: an arrow between two object
/// indices with an integer degree (0 everywhere in the ungraded algebras).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub degree: i64,
}

/// A finite-dimensional basis algebra: objects (orthogonal idempotents),
/// one basis arrow per stored `(src, tgt)` pair, and a dense product table
/// with structure constants in `{0, +1, -1}`.
#[derive(Clone)]
pub struct FinDimAlgebra {
    name: String,
    symbol: String,
    objects: Vec<IndexSet>,
    elems: Vec<BasisElem>,
    pair_index: BTreeMap<(usize, usize), usize>,
    table: Vec<Option<(u32, i8)>>,
}

impl fmt::Debug for FinDimAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (dim {}, {} objects)",
            self.name,
            self.dim(),
            self.objects.len()
        )
    }
}

impl FinDimAlgebra {
    /// Assemble from objects, basis pairs, and a composition rule deciding
    /// the sign of each composable product (`None` = zero). The rule is only
    /// consulted when `a.tgt == b.src`; a nonzero verdict for a pair whose
    /// composite `(a.src, b.tgt)` is not a basis element is an internal
    /// contradiction and panics.
    pub(crate) fn assemble(
        name: String,
        symbol: &str,
        objects: Vec<IndexSet>,
        elems: Vec<BasisElem>,
        rule: impl Fn(&[IndexSet], &BasisElem, &BasisElem) -> Option<i8>,
    ) -> FinDimAlgebra {
        let pair_index: BTreeMap<(usize, usize), usize> = elems
            .iter()
            .enumerate()
            .map(|(k, e)| ((e.src, e.tgt), k))
            .collect();
        assert_eq!(pair_index.len(), elems.len(), "duplicate basis pair");
        let dim = elems.len();
        let mut table = vec![None; dim * dim];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                if a.tgt != b.src {
                    continue;
                }
                if let Some(sign) = rule(&objects, a, b) {
                    let k = *pair_index
                        .get(&(a.src, b.tgt))
                        .expect("composition rule hit a non-basis pair");
                    table[i * dim + j] = Some((k as u32, sign));
                }
            }
        }
        FinDimAlgebra {
            name,
            symbol: symbol.to_string(),
            objects,
            elems,
            pair_index,
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn objects(&self) -> &[IndexSet] {
        &self.objects
    }

    pub fn elems(&self) -> &[BasisElem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &BasisElem {
        &self.elems[i]
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.elems[i].degree
    }

    /// Basis index of the arrow `src -> tgt`, if that pair is a basis label.
    pub fn pair(&self, src: usize, tgt: usize) -> Option<usize> {
        self.pair_index.get(&(src, tgt)).copied()
    }

    /// Basis index of the idempotent at object `o`.
    pub fn idempotent(&self, o: usize) -> usize {
        self.pair_index[&(o, o)]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.elems[i].src == self.elems[i].tgt
    }

    /// Diagrammatic product: "first `i`, then `j`". `None` means zero.
    pub fn mul(&self, i: usize, j: usize) -> Option<(usize, i8)> {
        self.table[i * self.dim() + j].map(|(k, s)| (k as usize, s))
    }

    /// Human-readable basis label, e.g. `f({1,2}->{1,3})`.
    pub fn label(&self, i: usize) -> String {
        let e = &self.elems[i];
        format!(
            "{}({}->{})",
            self.symbol, self.objects[e.src], self.objects[e.tgt]
        )
    }

    /// The opposite algebra: same labels, arrows reversed, products flipped.
    pub fn opposite(&self) -> FinDimAlgebra {
        let dim = self.dim();
        let elems: Vec<BasisElem> = self
            .elems
            .iter()
            .map(|e| BasisElem { src: e.tgt, tgt: e.src, degree: e.degree })
            .collect();
        let pair_index: BTreeMap<(usize, usize), usize> = elems
            .iter()
            .enumerate()
            .map(|(k, e)| ((e.src, e.tgt), k))
            .collect();
        let mut table = vec![None; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                table[i * dim + j] = self.table[j * dim + i];
            }
        }
        FinDimAlgebra {
            name: format!("{}^op", self.name),
            symbol: self.symbol.clone(),
            objects: self.objects.clone(),
            elems,
            pair_index,
            table,
        }
    }

    /// Check the algebra axioms on the whole basis: orthogonal unit
    /// idempotents, associativity on every composable triple, and degree
    /// additivity on nonzero products.
    pub fn validate(&self) -> Result<()> {
        let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); self.objects.len()];
        for (i, e) in self.elems.iter().enumerate() {
            by_src[e.src].push(i);
        }
        for o in 0..self.objects.len() {
            let e = self.idempotent(o);
            if self.mul(e, e) != Some((e, 1)) {
                return Err(Error::VerificationFailed(format!(
                    "{} is not idempotent",
                    self.label(e)
                )));
            }
            for o2 in 0..self.objects.len() {
                if o2 != o && self.mul(e, self.idempotent(o2)).is_some() {
                    return Err(Error::VerificationFailed(
                        "idempotents are not orthogonal".into(),
                    ));
                }
            }
        }
        for (i, a) in self.elems.iter().enumerate() {
            if self.mul(self.idempotent(a.src), i) != Some((i, 1))
                || self.mul(i, self.idempotent(a.tgt)) != Some((i, 1))
            {
                return Err(Error::VerificationFailed(format!(
                    "idempotents do not act as units on {}",
                    self.label(i)
                )));
            }
        }
        for (i, _) in self.elems.iter().enumerate() {
            for (j, s) in self.mul_row(i) {
                let (k, sign) = s;
                let expect = self.elems[i].degree + self.elems[j].degree;
                if self.elems[k].degree != expect {
                    return Err(Error::VerificationFailed(format!(
                        "degrees not additive on {} * {}",
                        self.label(i),
                        self.label(j)
                    )));
                }
                let _ = sign;
            }
        }
        for (i, a) in self.elems.iter().enumerate() {
            for &j in &by_src[a.tgt] {
                let ij = self.mul(i, j);
                for &k in &by_src[self.elems[j].tgt] {
                    let jk = self.mul(j, k);
                    let left = ij.and_then(|(x, s1)| {
                        self.mul(x, k).map(|(y, s2)| (y, s1 * s2))
                    });
                    let right = jk.and_then(|(x, s1)| {
                        self.mul(i, x).map(|(y, s2)| (y, s1 * s2))
                    });
                    if left != right {
                        return Err(Error::VerificationFailed(format!(
                            "associativity fails on {} * {} * {}",
                            self.label(i),
                            self.label(j),
                            self.label(k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Nonzero products with `i` on the left, as `(j, (k, sign))`.
    fn mul_row(&self, i: usize) -> Vec<(usize, (usize, i8))> {
        (0..self.dim())
            .filter_map(|j| self.mul(i, j).map(|p| (j, p)))
            .collect()
    }
}

/// The higher Auslander algebra `A(n,d)` on interleaved pairs of
/// `d`-subsets of `{1..n}`.
#[allow(non_snake_case)]
pub fn build_A(n: u32, d: usize) -> FinDimAlgebra {
    let objects = enum_subsets(n, d);
    let mut elems = Vec::new();
    for (oi, i) in objects.iter().enumerate() {
        for (oj, j) in objects.iter().enumerate() {
            if interleaved(i, j) {
                elems.push(BasisElem { src: oi, tgt: oj, degree: 0 });
            }
        }
    }
    FinDimAlgebra::assemble(
        format!("A({n},{d})"),
        "f",
        objects,
        elems,
        |objs, a, b| interleaved(&objs[a.src], &objs[b.tgt]).then_some(1),
    )
}

/// A machine-checked isomorphism certificate between two basis algebras.
#[derive(Clone, Debug, Serialize)]
pub struct IsoCertificate {
    pub left: String,
    pub right: String,
    pub dim: usize,
    pub objects: usize,
    /// Basis labels paired up by the bijection.
    pub basis_map: Vec<(String, String)>,
    pub products_checked: usize,
}

/// Verify that the bijection `map: a-index -> b-index` matches every
/// structure constant. With `flip`, products are compared against the
/// opposite order on the right-hand side (used when the bijection reverses
/// arrows, as the complement bijection does).
fn verify_structure_match(
    a: &FinDimAlgebra,
    b: &FinDimAlgebra,
    map: &[usize],
    flip: bool,
) -> Result<usize> {
    if a.dim() != b.dim() || map.len() != a.dim() {
        return Err(Error::VerificationFailed(format!(
            "dimension mismatch: {} has dim {}, {} has dim {}",
            a.name(),
            a.dim(),
            b.name(),
            b.dim()
        )));
    }
    let mut seen = vec![false; b.dim()];
    for &m in map {
        if seen[m] {
            return Err(Error::VerificationFailed("basis map not injective".into()));
        }
        seen[m] = true;
    }
    let mut checked = 0;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = a.mul(i, j).map(|(k, s)| (map[k], s));
            let rhs = if flip {
                b.mul(map[j], map[i])
            } else {
                b.mul(map[i], map[j])
            };
            if lhs != rhs {
                return Err(Error::VerificationFailed(format!(
                    "structure constants differ at {} * {} ({} vs {})",
                    a.label(i),
                    a.label(j),
                    a.name(),
                    b.name()
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

pub(crate) fn certificate(
    a: &FinDimAlgebra,
    b: &FinDimAlgebra,
    map: &[usize],
    flip: bool,
) -> Result<IsoCertificate> {
    let products_checked = verify_structure_match(a, b, map, flip)?;
    Ok(IsoCertificate {
        left: a.name().to_string(),
        right: b.name().to_string(),
        dim: a.dim(),
        objects: a.objects().len(),
        basis_map: (0..a.dim())
            .map(|i| (a.label(i), b.label(map[i])))
            .collect(),
        products_checked,
    })
}

/// The multiset presentation: the incidence algebra of weakly increasing
/// `d`-multisets in `{1..n}` modulo the two-sided ideal generated by the
/// idempotents at degenerate multisets, together with a certificate that the
/// quotient is isomorphic to [`build_A`]`(n,d)`.
#[allow(non_snake_case)]
pub fn build_A_multichoose(n: u32, d: usize) -> Result<(FinDimAlgebra, IsoCertificate)> {
    let msets = enum_multisets(n, d);
    let genuine: Vec<_> = msets.iter().filter(|m| !m.is_degenerate()).collect();
    let objects: Vec<IndexSet> = genuine
        .iter()
        .map(|m| m.as_index_set().expect("non-degenerate multiset"))
        .collect();
    let mut elems = Vec::new();
    for (oi, i) in genuine.iter().enumerate() {
        for (oj, j) in genuine.iter().enumerate() {
            if i.leq(j) && !factors_through_degenerate(i, j)? {
                elems.push(BasisElem { src: oi, tgt: oj, degree: 0 });
            }
        }
    }
    // In the quotient of a monomial ideal, a product of surviving basis
    // elements is the underlying incidence product if that survives, else 0.
    let survivors: std::collections::BTreeSet<(usize, usize)> =
        elems.iter().map(|e| (e.src, e.tgt)).collect();
    let alg = FinDimAlgebra::assemble(
        format!("A~({n},{d})"),
        "f",
        objects,
        elems,
        move |_objs, a, b| survivors.contains(&(a.src, b.tgt)).then_some(1),
    );
    let reference = build_A(n, d);
    // Objects agree as index sets; align bases by (source, target) labels.
    let obj_map: Vec<usize> = alg
        .objects()
        .iter()
        .map(|o| {
            reference
                .objects()
                .iter()
                .position(|p| p == o)
                .expect("object sets agree")
        })
        .collect();
    let map: Vec<usize> = alg
        .elems()
        .iter()
        .map(|e| {
            reference
                .pair(obj_map[e.src], obj_map[e.tgt])
                .ok_or_else(|| {
                    Error::VerificationFailed(format!(
                        "surviving multiset pair {}->{} is not an interleaved pair",
                        alg.objects()[e.src],
                        alg.objects()[e.tgt]
                    ))
                })
        })
        .collect::<Result<_>>()?;
    if map.len() != reference.dim() {
        return Err(Error::VerificationFailed(format!(
            "quotient dim {} differs from reference dim {}",
            map.len(),
            reference.dim()
        )));
    }
    let cert = certificate(&alg, &reference, &map, false)?;
    Ok((alg, cert))
}

/// The complement-transport data shared by [`build_koszul_graded`] and
/// [`iso_sharp`]: the reference algebra `A(n, n-d)` and, for each
/// unit-difference pair `(I, J)` of `d`-subsets, the reference basis index of
/// the complement pair `(J~ -> I~)`. Errors with a counterexample if some
/// unit-difference pair has no interleaved complement pair (the adopted gap
/// direction would then be wrong).
fn complement_transport(
    n: u32,
    d: usize,
    elems: &[BasisElem],
    objects: &[IndexSet],
) -> Result<(FinDimAlgebra, Vec<usize>)> {
    let dc = (n as usize).saturating_sub(d);
    let reference = build_A(n, dc);
    let comp_obj: Vec<usize> = objects
        .iter()
        .map(|o| {
            let c = o.complement();
            reference
                .objects()
                .iter()
                .position(|p| *p == c)
                .expect("complement is a subset of the right size")
        })
        .collect();
    let map: Vec<usize> = elems
        .iter()
        .map(|e| {
            reference
                .pair(comp_obj[e.tgt], comp_obj[e.src])
                .ok_or_else(|| {
                    Error::VerificationFailed(format!(
                        "unit-difference pair {}->{} has no interleaved complement pair",
                        objects[e.src], objects[e.tgt]
                    ))
                })
        })
        .collect::<Result<_>>()?;
    if map.len() != reference.dim() {
        return Err(Error::VerificationFailed(format!(
            "unit-difference pair count {} differs from dim A({n},{dc}) = {}",
            map.len(),
            reference.dim()
        )));
    }
    Ok((reference, map))
}

/// The rank-graded algebra on unit-difference pairs: one basis element
/// `b(I->J)` per pair of `d`-subsets with `0 <= j_a - i_a <= 1` for all `a`,
/// in degree `rank(J) - rank(I)`, with structure constants transported from
/// `A(n, n-d)` through the complement bijection (the bijection reverses
/// arrows, so the transported product of `a` then `b` reads the reference
/// product of `b`'s image then `a`'s image). The result is checked to be
/// generated in degrees 0 and 1.
pub fn build_koszul_graded(n: u32, d: usize) -> Result<FinDimAlgebra> {
    let objects = enum_subsets(n, d);
    let mut elems = Vec::new();
    for (oi, i) in objects.iter().enumerate() {
        for (oj, j) in objects.iter().enumerate() {
            if unit_diff(i, j) {
                elems.push(BasisElem {
                    src: oi,
                    tgt: oj,
                    degree: j.rank() as i64 - i.rank() as i64,
                });
            }
        }
    }
    let (reference, map) = complement_transport(n, d, &elems, &objects)?;
    let elem_to_ref: BTreeMap<(usize, usize), usize> = elems
        .iter()
        .zip(&map)
        .map(|(e, &r)| ((e.src, e.tgt), r))
        .collect();
    let alg = FinDimAlgebra::assemble(
        format!("K({n},{d})"),
        "b",
        objects,
        elems,
        move |_objs, a, b| {
            let ra = elem_to_ref[&(a.src, a.tgt)];
            let rb = elem_to_ref[&(b.src, b.tgt)];
            reference.mul(rb, ra).map(|(_, s)| s)
        },
    );
    // Generation in degrees {0,1}: every basis element of degree >= 2 must
    // factor as (degree 1) times (degree >= 1).
    for x in 0..alg.dim() {
        if alg.degree(x) < 2 {
            continue;
        }
        let factored = (0..alg.dim()).any(|y| {
            alg.degree(y) == 1
                && (0..alg.dim()).any(|z| alg.mul(y, z) == Some((x, 1)))
        });
        if !factored {
            return Err(Error::VerificationFailed(format!(
                "{} does not factor through degree 1",
                alg.label(x)
            )));
        }
    }
    Ok(alg)
}

/// Complement duality: certify that the unit-difference pattern algebra of
/// `(n,d)`, with its grading forgotten, is carried onto `A(n, n-d)` by
/// `b(I->J) |-> f(J~ -> I~)` (`~` = complement in `{1..n}`). The bijection
/// reverses arrows, so structure constants are compared in flipped order.
/// Also re-checks, pair by pair, that the unit-difference pattern and the
/// complement-interleaving pattern coincide, failing with a counterexample
/// otherwise.
pub fn iso_sharp(n: u32, d: usize) -> Result<IsoCertificate> {
    if d == 0 || (d as u32) > n {
        return Err(Error::BadInput(format!(
            "iso_sharp expects 1 <= d <= n, got n={n}, d={d}"
        )));
    }
    let objects = enum_subsets(n, d);
    for i in &objects {
        for j in &objects {
            let lhs = unit_diff(i, j);
            let rhs = interleaved(&j.complement(), &i.complement());
            if lhs != rhs {
                return Err(Error::VerificationFailed(format!(
                    "unit-difference and complement-interleaving disagree on I={i}, J={j}"
                )));
            }
        }
    }
    let koszul = build_koszul_graded(n, d)?;
    let (reference, map) =
        complement_transport(n, d, koszul.elems(), koszul.objects())?;
    certificate(&koszul, &reference, &map, true)
}

/// Rotation on zero-based subsets of `{0..n}`: subtract 1 from every member
/// modulo `n+1`. Iterating `n+1` times is the identity.
pub fn rotate(i: &IndexSet) -> Result<IndexSet> {
    if !i.is_zero_based() {
        return Err(Error::BadInput(
            "rotate expects a zero-based subset of {0..n}".into(),
        ));
    }
    let n = i.n();
    let mut elems: Vec<u32> = i.elems().iter().map(|&x| (x + n) % (n + 1)).collect();
    elems.sort_unstable();
    IndexSet::new_zero_based(n, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;

    fn subset(n: u32, elems: &[u32]) -> IndexSet {
        IndexSet::new(n, elems.to_vec()).unwrap()
    }

    #[test]
    fn build_a_small_examples() {
        assert_eq!(build_A(3, 1).dim(), 6);
        for d in 1..=5 {
            assert_eq!(build_A(d, d as usize).dim(), 1);
        }
        let a32 = build_A(3, 2);
        assert_eq!(a32.dim(), 5);
        assert_eq!(a32.objects().len(), 3);
        // Objects in colex order: {1,2}, {1,3}, {2,3}.
        assert_eq!(a32.objects()[0], subset(3, &[1, 2]));
        assert_eq!(a32.objects()[1], subset(3, &[1, 3]));
        assert_eq!(a32.objects()[2], subset(3, &[2, 3]));
        let up = a32.pair(0, 1).unwrap();
        let up2 = a32.pair(1, 2).unwrap();
        assert!(a32.pair(0, 2).is_none());
        // The defining monomial relation: the two arrows compose to zero.
        assert_eq!(a32.mul(up, up2), None);
        assert_eq!(a32.mul(a32.idempotent(0), up), Some((up, 1)));
        assert_eq!(a32.mul(up, a32.idempotent(1)), Some((up, 1)));
        assert_eq!(a32.mul(up, up), None);
    }

    #[test]
    fn build_a_dimension_formula() {
        for n in 0..=8u32 {
            for d in 0..=n as usize {
                let expected = binomial(u64::from(n) + d as u64, 2 * d as u64);
                assert_eq!(
                    build_A(n, d).dim() as u128,
                    expected,
                    "dim A({n},{d})"
                );
            }
        }
    }

    #[test]
    fn build_a_passes_validation() {
        for (n, d) in [(1, 1), (3, 1), (3, 2), (4, 2), (5, 2), (5, 3), (6, 3)] {
            build_A(n, d).validate().unwrap();
        }
    }

    #[test]
    fn path_algebra_products_never_vanish_for_d_1() {
        // For d = 1 every pair i <= j is interleaved, so the algebra is the
        // full path algebra of the linear quiver: products are never zero.
        let a = build_A(5, 1);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                if a.elem(i).tgt == a.elem(j).src {
                    assert!(a.mul(i, j).is_some());
                }
            }
        }
        assert_eq!(a.dim(), 15);
    }

    #[test]
    fn multichoose_quotient_examples() {
        let (alg, cert) = build_A_multichoose(3, 1).unwrap();
        assert_eq!(alg.dim(), 6);
        assert_eq!(cert.dim, 6);
        let (alg, cert) = build_A_multichoose(3, 2).unwrap();
        assert_eq!(enum_multisets(3, 2).len(), 6);
        assert_eq!(alg.dim(), 5);
        assert_eq!(cert.objects, 3);
        assert_eq!(cert.products_checked, 25);
    }

    #[test]
    fn multichoose_matches_reference_exhaustively() {
        for n in 1..=5u32 {
            for d in 1..=3usize.min(n as usize) {
                let (alg, cert) = build_A_multichoose(n, d).unwrap();
                assert_eq!(alg.dim(), build_A(n, d).dim(), "({n},{d})");
                assert_eq!(cert.products_checked, alg.dim() * alg.dim());
                alg.validate().unwrap();
            }
        }
    }

    #[test]
    fn koszul_graded_small_examples() {
        let k21 = build_koszul_graded(2, 1).unwrap();
        let by_degree = |alg: &FinDimAlgebra, m: i64| {
            (0..alg.dim()).filter(|&i| alg.degree(i) == m).count()
        };
        assert_eq!(by_degree(&k21, 0), 2);
        assert_eq!(by_degree(&k21, 1), 1);
        assert_eq!(k21.dim(), 3);
        k21.validate().unwrap();

        // Degree-0 elements are exactly the idempotents.
        let k52 = build_koszul_graded(5, 2).unwrap();
        for i in 0..k52.dim() {
            assert_eq!(k52.degree(i) == 0, k52.is_idempotent(i));
        }
        k52.validate().unwrap();
    }

    #[test]
    fn koszul_consecutive_composites_vanish_for_d_1() {
        let k = build_koszul_graded(4, 1).unwrap();
        let obj = |x: u32| {
            k.objects()
                .iter()
                .position(|o| o.elems() == [x])
                .unwrap()
        };
        for i in 1..=2u32 {
            let step1 = k.pair(obj(i), obj(i + 1)).unwrap();
            let step2 = k.pair(obj(i + 1), obj(i + 2)).unwrap();
            assert_eq!(k.mul(step1, step2), None, "composite at {i}");
            assert!(k.pair(obj(i), obj(i + 2)).is_none());
        }
    }

    #[test]
    fn koszul_is_generated_in_degrees_0_and_1() {
        for (n, d) in [(4, 2), (5, 2), (5, 3), (6, 3), (6, 2)] {
            build_koszul_graded(n, d).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn iso_sharp_examples() {
        let cert = iso_sharp(3, 2).unwrap();
        assert_eq!(cert.dim, 6);
        assert_eq!(cert.right, "A(3,1)");
        let cert = iso_sharp(5, 4).unwrap();
        assert_eq!(cert.dim, build_A(5, 1).dim());
        for d in 1..=4 {
            let cert = iso_sharp(d, d as usize).unwrap();
            assert_eq!(cert.dim, 1);
        }
        assert!(iso_sharp(3, 0).is_err());
        assert!(iso_sharp(3, 4).is_err());
    }

    #[test]
    fn iso_sharp_holds_up_to_n_6() {
        for n in 1..=6u32 {
            for d in 1..=n as usize {
                let cert = iso_sharp(n, d).unwrap();
                assert_eq!(
                    cert.dim as u128,
                    binomial(u64::from(n) + (n as u64 - d as u64), 2 * (n as u64 - d as u64)),
                    "({n},{d})"
                );
            }
        }
    }

    #[test]
    fn unit_diff_matches_complement_interleaving_exhaustively_to_n_8() {
        // The adopted gap direction: a unit-difference pair (I, J) of
        // d-subsets corresponds exactly to an interleaved pair
        // (complement(J), complement(I)) of (n-d)-subsets. Checked for every
        // pair up to n = 8; the opposite direction fails already at n = 4,
        // d = 2 with I = {1,4}, J = {3,4}.
        for n in 1..=8u32 {
            for d in 0..=n as usize {
                for i in enum_subsets(n, d) {
                    for j in enum_subsets(n, d) {
                        assert_eq!(
                            unit_diff(&i, &j),
                            interleaved(&j.complement(), &i.complement()),
                            "n={n} I={i} J={j}"
                        );
                    }
                }
            }
        }
        // The printed counterexample to the other gap direction.
        let i = subset(4, &[1, 4]);
        let j = subset(4, &[3, 4]);
        assert!(!unit_diff(&i, &j));
        let (u, v) = (i.complement(), j.complement());
        assert!(v.leq(&u));
        assert!(v.elems()[0] < u.elems()[1]);
    }

    #[test]
    fn rotate_examples() {
        let i = IndexSet::new_zero_based(3, vec![0, 1]).unwrap();
        let r = rotate(&i).unwrap();
        assert_eq!(r, IndexSet::new_zero_based(3, vec![0, 3]).unwrap());
        assert!(rotate(&subset(3, &[1, 2])).is_err());
    }

    #[test]
    fn rotate_has_order_n_plus_1() {
        for n in 1..=8u32 {
            for size in 1..=(n as usize + 1).min(4) {
                for s in crate::combinat::enum_subsets_zero_based(n, size) {
                    let mut cur = s.clone();
                    for _ in 0..=n {
                        cur = rotate(&cur).unwrap();
                    }
                    assert_eq!(cur, s);
                    // Rotating by any member brings that member to 0.
                    let first = s.elems()[0];
                    let mut back = s.clone();
                    for _ in 0..first {
                        back = rotate(&back).unwrap();
                    }
                    assert!(back.contains(0));
                }
            }
        }
    }

    #[test]
    fn opposite_is_involutive_and_valid() {
        let a = build_A(4, 2);
        let op = a.opposite();
        op.validate().unwrap();
        let back = op.opposite();
        for i in 0..a.dim() {
            assert_eq!(a.elem(i), back.elem(i));
            for j in 0..a.dim() {
                assert_eq!(a.mul(i, j), back.mul(i, j));
                assert_eq!(a.mul(i, j), op.mul(j, i));
            }
        }
    }
}

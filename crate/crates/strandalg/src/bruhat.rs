//! Balanced signatures on Bruhat intervals `[e, pi]` and the associated
//! cochain complexes `C[e, pi]`.
//!
//! A signature assigns `+1` or `-1` to every Hasse cover of the interval; it
//! is *balanced* when the two paths around every length-2 square cancel,
//! which is exactly the condition for the signed cover sums to square to
//! zero. The canonical signature is derived from the strand sign rule
//! ([`crate::strands::cover_sign`]), so the interval complex of `[e, pi0]`
//! coincides with the hom complex of the strands algebra block by block.
//! Flipping all edges at one vertex preserves balance and changes the
//! complex by conjugation with a diagonal sign matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::exactla::{snf, FieldSpec, Scalar, SparseMatrix};
use crate::strands::cover_sign;
use crate::symgrp::{interval, BruhatInterval, Permutation};
use crate::{Error, Result};

/// An assignment of signs to the Hasse covers of a fixed interval `[e, pi]`.
#[derive(Clone, Debug)]
pub struct Signature {
    interval: BruhatInterval,
    signs: Vec<i8>,
}

impl Signature {
    /// Wrap explicit signs (one per cover of `interval(top)`, in the stored
    /// cover order). Balance is *not* required here — [`interval_complex`]
    /// rejects unbalanced signatures — so callers can build and probe
    /// arbitrary assignments.
    pub fn from_signs(top: &Permutation, signs: Vec<i8>) -> Result<Signature> {
        let iv = interval(top);
        if signs.len() != iv.covers().len() {
            return Err(Error::BadInput(format!(
                "{} signs for {} covers",
                signs.len(),
                iv.covers().len()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadInput("signs must be +1 or -1".into()));
        }
        Ok(Signature { interval: iv, signs })
    }

    pub fn interval(&self) -> &BruhatInterval {
        &self.interval
    }

    /// One sign per cover, in the interval's cover order.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Do the two paths around every length-2 square cancel?
    pub fn is_balanced(&self) -> bool {
        self.first_unbalanced_square().is_none()
    }

    /// The first square violating the balance identity, as
    /// `(top, middle_b, middle_c, bottom)` element indices.
    fn first_unbalanced_square(&self) -> Option<(usize, usize, usize, usize)> {
        let covers = self.interval.covers();
        // Downward cover adjacency with the cover's sign.
        let mut down: Vec<Vec<(usize, i8)>> = vec![Vec::new(); self.interval.len()];
        for (e, &(lo, hi)) in covers.iter().enumerate() {
            down[hi].push((lo, self.signs[e]));
        }
        for tau in 0..self.interval.len() {
            for x in 0..down[tau].len() {
                for y in x + 1..down[tau].len() {
                    let (mid_b, sign_b) = down[tau][x];
                    let (mid_c, sign_c) = down[tau][y];
                    for &(rho_b, sign_bb) in &down[mid_b] {
                        for &(rho_c, sign_cc) in &down[mid_c] {
                            if rho_b != rho_c {
                                continue;
                            }
                            if i32::from(sign_b) * i32::from(sign_bb)
                                + i32::from(sign_c) * i32::from(sign_cc)
                                != 0
                            {
                                return Some((tau, mid_b, mid_c, rho_b));
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// The signature derived from the strand sign rule: each cover `sigma ◁ tau`
/// carries the structure constant of the resolution differential,
/// [`cover_sign`]`(tau, sigma)`. The output is checked to be balanced.
pub fn canonical_signature(pi: &Permutation) -> Result<Signature> {
    let iv = interval(pi);
    let mut signs = Vec::with_capacity(iv.covers().len());
    for &(lo, hi) in iv.covers() {
        let s = cover_sign(&iv.elements()[hi], &iv.elements()[lo])?;
        signs.push(s as i8);
    }
    let signature = Signature { interval: iv, signs };
    if let Some((tau, b, c, rho)) = signature.first_unbalanced_square() {
        return Err(Error::VerificationFailed(format!(
            "derived signature unbalanced on the square {} > {}, {} > {}",
            signature.interval.elements()[tau],
            signature.interval.elements()[b],
            signature.interval.elements()[c],
            signature.interval.elements()[rho]
        )));
    }
    Ok(signature)
}

/// Multiply by `-1` the signs of all covers incident to `pi_prime`.
/// Balance is preserved: every square meets the vertex in an even number of
/// its four edges.
pub fn flip_vertex(s: &Signature, pi_prime: &Permutation) -> Result<Signature> {
    let v = s.interval.index_of(pi_prime).ok_or(Error::NotInInterval)?;
    let mut signs = s.signs.clone();
    for e in s.interval.incident_covers(v) {
        signs[e] = -signs[e];
    }
    Ok(Signature { interval: s.interval.clone(), signs })
}

/// A cochain complex over a fixed coefficient ring: contiguous degrees
/// starting at `min_degree`, one basis-label list per degree, and one
/// degree-raising differential per consecutive pair. Construction verifies
/// that consecutive differentials compose to zero.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    field: FieldSpec,
    min_degree: i64,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    diffs: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `diffs[k]` maps degree `min_degree + k` to `min_degree + k + 1`, as a
    /// `dims[k+1] x dims[k]` matrix acting on column vectors.
    pub fn new(
        field: FieldSpec,
        min_degree: i64,
        dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        diffs: Vec<SparseMatrix>,
    ) -> Result<ChainComplex> {
        field.validate()?;
        if labels.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} label lists for {} degrees",
                labels.len(),
                dims.len()
            )));
        }
        if diffs.len() + 1 != dims.len() && !(dims.is_empty() && diffs.is_empty()) {
            return Err(Error::DimensionMismatch(format!(
                "{} differentials for {} degrees",
                diffs.len(),
                dims.len()
            )));
        }
        for (k, (dim, label_list)) in dims.iter().zip(&labels).enumerate() {
            if label_list.len() != *dim {
                return Err(Error::DimensionMismatch(format!(
                    "{} labels for dimension {} in slot {}",
                    label_list.len(),
                    dim,
                    k
                )));
            }
        }
        for (k, m) in diffs.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch(
                    "differential over a different coefficient ring".into(),
                ));
            }
            if m.rows() != dims[k + 1] || m.cols() != dims[k] {
                return Err(Error::DimensionMismatch(format!(
                    "differential {} is {}x{}, expected {}x{}",
                    k,
                    m.rows(),
                    m.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        for k in 0..diffs.len().saturating_sub(1) {
            if !diffs[k + 1].mul(&diffs[k])?.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "consecutive differentials at degree {} do not compose to zero",
                    min_degree + k as i64
                )));
            }
        }
        Ok(ChainComplex { field, min_degree, dims, labels, diffs })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.dims.len() as i64 - 1
    }

    /// All degrees with a (possibly zero-dimensional) slot, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len()).map(move |k| self.min_degree + k as i64)
    }

    fn slot(&self, degree: i64) -> Option<usize> {
        let k = degree.checked_sub(self.min_degree)?;
        if k < 0 || k as usize >= self.dims.len() {
            None
        } else {
            Some(k as usize)
        }
    }

    pub fn dim_at(&self, degree: i64) -> usize {
        self.slot(degree).map_or(0, |k| self.dims[k])
    }

    pub fn labels_at(&self, degree: i64) -> &[String] {
        self.slot(degree).map_or(&[], |k| &self.labels[k])
    }

    /// The differential out of `degree` (raising it by one), if stored.
    pub fn differential_at(&self, degree: i64) -> Option<&SparseMatrix> {
        let k = self.slot(degree)?;
        self.diffs.get(k)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// The cochain complex of the interval `[e, pi]` with respect to a balanced
/// signature: the element `pi'` sits in degree `-inv(pi')` and its
/// differential is the signed sum of its Hasse co-covers.
///
/// Errors with [`Error::UnbalancedSignature`] when the signature flunks the
/// square check (equivalently, when the would-be differential fails to
/// square to zero).
pub fn interval_complex(
    pi: &Permutation,
    s: &Signature,
    field: FieldSpec,
) -> Result<ChainComplex> {
    field.validate()?;
    if s.interval.top() != pi {
        return Err(Error::BadInput(format!(
            "signature is for the interval of {}, not {}",
            s.interval.top(),
            pi
        )));
    }
    if let Some((tau, b, c, rho)) = s.first_unbalanced_square() {
        return Err(Error::UnbalancedSignature(format!(
            "square {} > {}, {} > {}",
            s.interval.elements()[tau],
            s.interval.elements()[b],
            s.interval.elements()[c],
            s.interval.elements()[rho]
        )));
    }
    let iv = &s.interval;
    let height = pi.inv_count();
    let min_degree = -(height as i64);
    // Degree slot k holds the permutations with inv = height - k; the
    // position of each element inside its level is its coordinate.
    let mut level_pos = vec![0usize; iv.len()];
    for level in iv.levels() {
        for (pos, &e) in level.iter().enumerate() {
            level_pos[e] = pos;
        }
    }
    let dims: Vec<usize> = (0..=height).map(|k| iv.levels()[height - k].len()).collect();
    let labels: Vec<Vec<String>> = (0..=height)
        .map(|k| {
            iv.levels()[height - k]
                .iter()
                .map(|&e| iv.elements()[e].to_string())
                .collect()
        })
        .collect();
    let mut diffs: Vec<SparseMatrix> =
        (0..height).map(|k| SparseMatrix::new(dims[k + 1], dims[k], field)).collect();
    for (e, &(lo, hi)) in iv.covers().iter().enumerate() {
        let m = iv.elements()[hi].inv_count();
        // The cover hi -> lo contributes to the differential out of degree
        // -m, stored in slot height - m.
        let slot = height - m;
        diffs[slot].set(
            level_pos[lo],
            level_pos[hi],
            Scalar::from_int(field, s.signs[e].into()),
        )?;
    }
    ChainComplex::new(field, min_degree, dims, labels, diffs).map_err(|err| match err {
        Error::VerificationFailed(msg) => Error::UnbalancedSignature(msg),
        other => other,
    })
}

/// Per-degree cohomology dimensions over a field; zero dimensions are
/// omitted, so an acyclic complex yields an empty map.
pub fn homology(c: &ChainComplex) -> Result<BTreeMap<i64, usize>> {
    if !c.field().is_field() {
        return Err(Error::UnsupportedField(
            "field homology requires field coefficients; use integral_homology over Z".into(),
        ));
    }
    let mut ranks = Vec::with_capacity(c.diffs.len());
    for m in &c.diffs {
        ranks.push(m.rank()?);
    }
    let mut out = BTreeMap::new();
    for (k, &dim) in c.dims.iter().enumerate() {
        let out_rank = ranks.get(k).copied().unwrap_or(0);
        let in_rank = if k == 0 { 0 } else { ranks[k - 1] };
        let h = dim - out_rank - in_rank;
        if h > 0 {
            out.insert(c.min_degree + k as i64, h);
        }
    }
    Ok(out)
}

/// Integral cohomology: free ranks and torsion invariants per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralHomology {
    /// Free rank per degree; zero ranks are omitted.
    pub free_ranks: BTreeMap<i64, usize>,
    /// Nontrivial invariant factors of the incoming differential per degree;
    /// degrees without torsion are omitted.
    pub torsion: BTreeMap<i64, Vec<BigInt>>,
}

impl IntegralHomology {
    pub fn is_trivial(&self) -> bool {
        self.free_ranks.is_empty() && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Cohomology of an integer complex via Smith normal form: at each degree,
/// the free rank is `dim - rank(out) - rank(in)` and the torsion is the set
/// of invariant factors of the incoming differential exceeding one.
pub fn integral_homology(c: &ChainComplex) -> Result<IntegralHomology> {
    if c.field() != FieldSpec::Z {
        return Err(Error::UnsupportedField(
            "integral homology requires Z coefficients".into(),
        ));
    }
    let reports = c.diffs.iter().map(snf).collect::<Result<Vec<_>>>()?;
    let mut free_ranks = BTreeMap::new();
    let mut torsion = BTreeMap::new();
    for (k, &dim) in c.dims.iter().enumerate() {
        let degree = c.min_degree + k as i64;
        let out_rank = reports.get(k).map_or(0, |r| r.rank());
        let in_rank = if k == 0 { 0 } else { reports[k - 1].rank() };
        let free = dim - out_rank - in_rank;
        if free > 0 {
            free_ranks.insert(degree, free);
        }
        if k > 0 && !reports[k - 1].torsion.is_empty() {
            torsion.insert(degree, reports[k - 1].torsion.clone());
        }
    }
    Ok(IntegralHomology { free_ranks, torsion })
}

/// The Hasse diagram of the signature's interval in DOT format, edges
/// labeled by their signs, in the deterministic stored order.
pub fn hasse_dot(s: &Signature) -> String {
    let mut out = String::from("digraph bruhat {\n  rankdir=BT;\n");
    for p in s.interval.elements() {
        out.push_str(&format!("  \"{p}\";\n"));
    }
    for (e, &(lo, hi)) in s.interval.covers().iter().enumerate() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            s.interval.elements()[lo],
            s.interval.elements()[hi],
            if s.signs[e] > 0 { "+" } else { "-" }
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Q;

    fn perm(one_line: &[u8]) -> Permutation {
        Permutation::from_one_line(one_line.to_vec()).unwrap()
    }

    /// All of S_d by brute force.
    fn sym(d: usize) -> Vec<Permutation> {
        fn rec(rest: &mut Vec<u8>, cur: &mut Vec<u8>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation::from_one_line(cur.clone()).unwrap());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                cur.push(v);
                rec(rest, cur, out);
                cur.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut (1..=d as u8).collect(), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn single_edge_signature() {
        let s = canonical_signature(&perm(&[2, 1])).unwrap();
        assert_eq!(s.signs(), &[1]);
        assert!(s.is_balanced());
    }

    #[test]
    fn canonical_signature_balanced_for_all_of_s4_and_samples_of_s5() {
        for pi in sym(4) {
            assert!(canonical_signature(&pi).unwrap().is_balanced(), "at {pi}");
        }
        for pi in [perm(&[5, 4, 3, 2, 1]), perm(&[3, 5, 2, 4, 1]), perm(&[4, 5, 1, 3, 2])] {
            assert!(canonical_signature(&pi).unwrap().is_balanced(), "at {pi}");
        }
    }

    /// The interval of 321 in S_3: ranks (1,2,2,1), and the differentials
    /// agree with the reference matrices
    ///
    /// ```text
    ///   (1, -1)^T    (1 1; -1 -1)    (1 1)
    /// ```
    ///
    /// written against the bases ((321)), ((312),(231)), ((213),(132)), (e),
    /// up to a diagonal change of basis by signs.
    #[test]
    fn s3_interval_complex_matches_reference_matrices() {
        let top = perm(&[3, 2, 1]);
        let s = canonical_signature(&top).unwrap();
        let c = interval_complex(&top, &s, Q).unwrap();
        assert_eq!(c.min_degree(), -3);
        let dims: Vec<usize> = c.degrees().map(|k| c.dim_at(k)).collect();
        assert_eq!(dims, vec![1, 2, 2, 1]);

        // Stored level order is lex: degree -2 holds (231, 312), degree -1
        // holds (132, 213). Rewrite the reference columns accordingly.
        assert_eq!(c.labels_at(-2), &["231".to_string(), "312".to_string()]);
        assert_eq!(c.labels_at(-1), &["132".to_string(), "213".to_string()]);
        // d(321) = 312 - 231 in the reference, i.e. rows (231, 312) read
        // (-1, 1). d(312) = 213 - 132, d(231) = 213 - 132, i.e. columns over
        // rows (132, 213) read (-1, 1) each. d(213) = d(132) = e.
        let expected: [Vec<Vec<i64>>; 3] = [
            vec![vec![-1], vec![1]],
            vec![vec![-1, -1], vec![1, 1]],
            vec![vec![1, 1]],
        ];
        let mats: Vec<&SparseMatrix> =
            (0..3).map(|k| c.differential_at(-3 + k).unwrap()).collect();

        // Search for diagonal sign matrices making the computed complex
        // equal to the reference on the nose.
        let sizes = [1usize, 2, 2, 1];
        let mut found = false;
        'outer: for mask in 0..(1u32 << sizes.iter().sum::<usize>()) {
            let mut signs: Vec<Vec<i64>> = Vec::new();
            let mut bit = 0;
            for &size in &sizes {
                signs.push(
                    (0..size).map(|j| if mask >> (bit + j) & 1 == 0 { 1 } else { -1 }).collect(),
                );
                bit += size;
            }
            for (k, m) in mats.iter().enumerate() {
                for r in 0..m.rows() {
                    for col in 0..m.cols() {
                        let got = m.get(r, col);
                        let want = Scalar::from_int(
                            Q,
                            signs[k + 1][r] * expected[k][r][col] * signs[k][col],
                        );
                        if got != want {
                            continue 'outer;
                        }
                    }
                }
            }
            found = true;
            break;
        }
        assert!(found, "no diagonal sign change matches the reference matrices");
        assert!(homology(&c).unwrap().is_empty());
    }

    #[test]
    fn flip_vertex_behaviour() {
        let top = perm(&[3, 2, 1]);
        let s = canonical_signature(&top).unwrap();

        // Flipping e touches exactly the two covers out of e.
        let e = perm(&[1, 2, 3]);
        let flipped = flip_vertex(&s, &e).unwrap();
        let changed = s
            .signs()
            .iter()
            .zip(flipped.signs())
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(changed, 2);
        assert!(flipped.is_balanced());

        // Flipping twice restores the signature.
        let back = flip_vertex(&flipped, &e).unwrap();
        assert_eq!(back.signs(), s.signs());

        // Unknown vertex.
        assert!(matches!(
            flip_vertex(&s, &perm(&[1, 3, 2, 4])),
            Err(Error::NotInInterval)
        ));
    }

    #[test]
    fn single_flip_conjugates_the_complex_by_a_diagonal_sign() {
        let top = perm(&[3, 2, 1]);
        let s = canonical_signature(&top).unwrap();
        let base = interval_complex(&top, &s, Q).unwrap();
        for v in s.interval().elements().to_vec() {
            let flipped = flip_vertex(&s, &v).unwrap();
            let conj = interval_complex(&top, &flipped, Q).unwrap();
            for deg in base.degrees().collect::<Vec<_>>() {
                let Some(m) = base.differential_at(deg) else { continue };
                let m2 = conj.differential_at(deg).unwrap();
                let sign_at = |labels: &[String], r: usize| {
                    if labels[r] == v.to_string() {
                        -1i64
                    } else {
                        1
                    }
                };
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        let expected = m.get(r, c).mul(&Scalar::from_int(
                            Q,
                            sign_at(base.labels_at(deg + 1), r) * sign_at(base.labels_at(deg), c),
                        ));
                        assert_eq!(m2.get(r, c), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn random_flip_sequences_preserve_balance_and_homology() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for top in [perm(&[3, 2, 1]), perm(&[3, 4, 1, 2]), perm(&[4, 3, 2, 1])] {
            let base = canonical_signature(&top).unwrap();
            let reference = homology(&interval_complex(&top, &base, Q).unwrap()).unwrap();
            let elements = base.interval().elements().to_vec();
            let mut s = base.clone();
            for _ in 0..100 {
                let v = &elements[rng.gen_range(0..elements.len())];
                s = flip_vertex(&s, v).unwrap();
                assert!(s.is_balanced());
                let h = homology(&interval_complex(&top, &s, Q).unwrap()).unwrap();
                assert_eq!(h, reference);
            }
        }
    }

    #[test]
    fn acyclic_for_every_nontrivial_permutation_up_to_s4() {
        for d in 2..=4 {
            for pi in sym(d) {
                if pi.is_identity() {
                    continue;
                }
                let s = canonical_signature(&pi).unwrap();
                for field in [Q, FieldSpec::Fp(2), FieldSpec::Fp(3)] {
                    let c = interval_complex(&pi, &s, field).unwrap();
                    assert!(homology(&c).unwrap().is_empty(), "at {pi} over {field:?}");
                }
                let z = interval_complex(&pi, &s, FieldSpec::Z).unwrap();
                let ih = integral_homology(&z).unwrap();
                assert!(ih.is_trivial(), "at {pi} over Z: {ih:?}");
            }
        }
    }

    #[test]
    fn identity_interval_has_one_class_in_degree_zero() {
        let e = perm(&[1, 2, 3]);
        let s = canonical_signature(&e).unwrap();
        let c = interval_complex(&e, &s, Q).unwrap();
        assert_eq!(homology(&c).unwrap(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn unbalanced_signature_is_rejected() {
        let top = perm(&[3, 2, 1]);
        let good = canonical_signature(&top).unwrap();
        let mut bad_signs = good.signs().to_vec();
        bad_signs[0] = -bad_signs[0];
        let bad = Signature::from_signs(&top, bad_signs).unwrap();
        assert!(!bad.is_balanced());
        assert!(matches!(
            interval_complex(&top, &bad, Q),
            Err(Error::UnbalancedSignature(_))
        ));
    }

    #[test]
    fn hom_complex_equals_interval_complex_of_pi0() {
        use crate::combinat::{enum_subsets, poset_leq};
        use crate::strands::hom_complex;
        use crate::symgrp::pi0;
        let subsets = enum_subsets(4, 2);
        for i in &subsets {
            for j in &subsets {
                if !poset_leq(i, j) {
                    continue;
                }
                let hc = hom_complex(i, j, Q).unwrap();
                let top = pi0(i, j).unwrap();
                let s = canonical_signature(&top).unwrap();
                let ic = interval_complex(&top, &s, Q).unwrap();
                assert_eq!(hc.min_degree(), ic.min_degree());
                let degrees: Vec<i64> = hc.degrees().collect();
                assert_eq!(degrees, ic.degrees().collect::<Vec<_>>());
                for &deg in &degrees {
                    assert_eq!(hc.dim_at(deg), ic.dim_at(deg));
                    match (hc.differential_at(deg), ic.differential_at(deg)) {
                        (None, None) => {}
                        (Some(a), Some(b)) => {
                            for r in 0..a.rows() {
                                for c in 0..a.cols() {
                                    assert_eq!(a.get(r, c), b.get(r, c));
                                }
                            }
                        }
                        _ => panic!("differential presence differs at degree {deg}"),
                    }
                }
            }
        }
    }

    #[test]
    fn dot_export_is_deterministic_and_signed() {
        let s = canonical_signature(&perm(&[2, 1])).unwrap();
        assert_eq!(
            hasse_dot(&s),
            "digraph bruhat {\n  rankdir=BT;\n  \"12\";\n  \"21\";\n  \"12\" -> \"21\" [label=\"+\"];\n}\n"
        );
    }

    #[test]
    fn torsion_reporting_via_snf() {
        // A non-exact integer complex: 0 -> Z -2-> Z -> 0 has cohomology
        // Z/2 in the top degree.
        let mut m = SparseMatrix::new(1, 1, FieldSpec::Z);
        m.set(0, 0, Scalar::from_int(FieldSpec::Z, 2)).unwrap();
        let c = ChainComplex::new(
            FieldSpec::Z,
            -1,
            vec![1, 1],
            vec![vec!["a".into()], vec!["b".into()]],
            vec![m],
        )
        .unwrap();
        let ih = integral_homology(&c).unwrap();
        assert!(ih.free_ranks.is_empty());
        assert_eq!(
            ih.torsion,
            BTreeMap::from([(0i64, vec![BigInt::from(2)])])
        );
        assert!(!ih.is_torsion_free());
    }
}

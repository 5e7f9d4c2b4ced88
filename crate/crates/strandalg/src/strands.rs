//! The strands algebra `B(n,d)`.
//!
//! Generators are triples `(I, J, pi)` with `I <= J` in the subset poset and
//! `pi` in the Bruhat interval `[e, pi0(I,J)]`; the generator models the
//! class of wiring diagrams from `I` to `J` realizing `pi`, normalized to the
//! lex-minimal reduced word of `pi`. The degree of a generator is minus its
//! crossing number `inv(pi)`. Two realizations of the same permutation by
//! different reduced words differ by the parity of the reorder between their
//! crossing sequences ([`relative_sign`]); the product concatenates diagrams
//! and vanishes whenever the concatenation makes two strands cross twice
//! (equivalently, whenever inversions fail to add); the differential resolves
//! one crossing at a time, skipping resolutions that create a double
//! crossing, with sign `(-1)^(number of later crossings)`.
//!
//! Degree 0 is spanned by the crossingless generators `e_JI`; the quotient by
//! the image of the differential is computed honestly in [`h0_algebra`] and
//! certified against the incidence-quotient model in [`h0_iso_certificate`].

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::auslander::{build_A, certificate, FinDimAlgebra, IsoCertificate};
use crate::bruhat::ChainComplex;
use crate::combinat::{enum_subsets, interleaved, poset_leq, IndexSet};
use crate::exactla::{quotient_basis, FieldSpec, Scalar, SparseMatrix};
use crate::symgrp::{
    bruhat_leq, canonical_word, crossing_sequence, interval, pi0, word_to_perm, Permutation, Word,
};
use crate::{Error, Result};

/// A basis element of `B(n,d)`: the class of diagrams `I -> J` realizing
/// `pi`, stored against the lex-minimal reduced word of `pi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StrandGenerator {
    source: IndexSet,
    target: IndexSet,
    perm: Permutation,
}

impl StrandGenerator {
    /// Validates that both endpoints live in one subset poset, `I <= J`, and
    /// `pi <= pi0(I,J)` in Bruhat order.
    pub fn new(source: IndexSet, target: IndexSet, perm: Permutation) -> Result<Self> {
        if source.n() != target.n()
            || source.d() != target.d()
            || source.is_zero_based() != target.is_zero_based()
        {
            return Err(Error::BadInput(format!(
                "generator endpoints over different posets: {source} vs {target}"
            )));
        }
        if perm.d() != source.d() {
            return Err(Error::BadInput(format!(
                "permutation degree {} does not match d = {}",
                perm.d(),
                source.d()
            )));
        }
        let top = pi0(&source, &target).ok_or(Error::NotInInterval)?;
        if !bruhat_leq(&perm, &top) {
            return Err(Error::NotInInterval);
        }
        Ok(StrandGenerator { source, target, perm })
    }

    /// The crossingless generator `e_II`.
    pub fn idempotent(i: &IndexSet) -> StrandGenerator {
        StrandGenerator {
            source: i.clone(),
            target: i.clone(),
            perm: Permutation::identity(i.d()),
        }
    }

    pub fn source(&self) -> &IndexSet {
        &self.source
    }

    pub fn target(&self) -> &IndexSet {
        &self.target
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Cohomological degree: minus the crossing number.
    pub fn degree(&self) -> i64 {
        -(self.perm.inv_count() as i64)
    }

    /// `e_JI`: does the generator have no crossings?
    pub fn is_crossingless(&self) -> bool {
        self.perm.is_identity()
    }
}

impl fmt::Debug for StrandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}->{}|{})", self.source, self.target, self.perm)
    }
}

impl fmt::Display for StrandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Generators sort by source, target, then inversion-graded lex order on the
/// permutation — the enumeration order of [`basis`].
impl Ord for StrandGenerator {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.source, &self.target, self.perm.inv_count(), self.perm.one_line()).cmp(&(
            &other.source,
            &other.target,
            other.perm.inv_count(),
            other.perm.one_line(),
        ))
    }
}

impl PartialOrd for StrandGenerator {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of generators; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: FieldSpec,
    terms: BTreeMap<StrandGenerator, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec) -> AlgebraElement {
        AlgebraElement { field, terms: BTreeMap::new() }
    }

    /// The element `1 * g`.
    pub fn generator(g: StrandGenerator, field: FieldSpec) -> AlgebraElement {
        let mut out = AlgebraElement::zero(field);
        out.add_term(g, Scalar::one(field));
        out
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StrandGenerator, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of `g` (zero if absent).
    pub fn coeff(&self, g: &StrandGenerator) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Accumulate `s * g`, dropping the term if the sum cancels.
    pub fn add_term(&mut self, g: StrandGenerator, s: Scalar) {
        debug_assert_eq!(s.field(), self.field);
        if s.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&s);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                "adding elements over different coefficient rings".into(),
            ));
        }
        let mut out = self.clone();
        for (g, s) in &other.terms {
            out.add_term(g.clone(), s.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c.mul(s));
        }
        out
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, s)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s:?}*{g}")?;
        }
        Ok(())
    }
}

/// The canonical basis of `hom(I,J)`: one generator per permutation in
/// `[e, pi0(I,J)]`, in inversion-graded lex order; empty when `I <= J` fails.
pub fn basis(i: &IndexSet, j: &IndexSet) -> Result<Vec<StrandGenerator>> {
    if i.n() != j.n() || i.d() != j.d() || i.is_zero_based() != j.is_zero_based() {
        return Err(Error::BadInput(format!(
            "hom endpoints over different posets: {i} vs {j}"
        )));
    }
    let Some(top) = pi0(i, j) else {
        return Ok(Vec::new());
    };
    interval(&top)
        .elements()
        .iter()
        .map(|p| StrandGenerator::new(i.clone(), j.clone(), p.clone()))
        .collect()
}

/// Sign of the diagram encoded by the reduced word `w` relative to the
/// canonical (lex-minimal) diagram of `pi`.
///
/// Moving a crossing past another one flips the class by `-1`; such an
/// interchange involves four distinct strands. Sliding a strand across a
/// crossing of two others also reorders the crossing sequence, but carries
/// no sign: it permutes only crossings that share a strand. The sign is
/// therefore the parity of the time-order disagreements between `w` and the
/// canonical word over pairs of *disjoint* crossings. `+1` on the canonical
/// word itself.
///
/// Errors if `w` does not multiply out to `pi` or is not reduced.
pub fn relative_sign(w: &Word, pi: &Permutation) -> Result<i32> {
    let d = pi.d();
    let realized = word_to_perm(w, d)?;
    if &realized != pi {
        return Err(Error::WrongPermutation);
    }
    let crossings = crossing_sequence(w, d)?;
    let canon = canonical_word(pi);
    if w.letters() == canon.letters() {
        return Ok(1);
    }
    let canon_crossings =
        crossing_sequence(&canon, d).expect("canonical word is reduced");
    let pos: HashMap<(u8, u8), usize> = canon_crossings
        .iter()
        .enumerate()
        .map(|(t, &pair)| (pair, t))
        .collect();
    let mut interchanges = 0usize;
    for a in 0..crossings.len() {
        for b in a + 1..crossings.len() {
            let (x, y) = (crossings[a], crossings[b]);
            let disjoint = x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1;
            if disjoint && pos[&x] > pos[&y] {
                interchanges += 1;
            }
        }
    }
    Ok(if interchanges % 2 == 0 { 1 } else { -1 })
}

/// Structure constant of the differential on a Hasse cover `sigma ◁ tau`:
/// delete the unique position `t` of the canonical word of `tau` that leaves
/// a reduced word of `sigma`, weight it by `(-1)^(letters after t)`, and
/// renormalize the leftover word to the canonical diagram of `sigma`.
///
/// Errors with [`Error::NotInInterval`] when `sigma` is not covered by `tau`.
pub fn cover_sign(tau: &Permutation, sigma: &Permutation) -> Result<i32> {
    let k = tau.inv_count();
    if sigma.d() != tau.d() || sigma.inv_count() + 1 != k || !bruhat_leq(sigma, tau) {
        return Err(Error::NotInInterval);
    }
    let w = canonical_word(tau);
    let mut found: Option<i32> = None;
    for t in 0..k {
        let deleted = w.delete(t);
        let p = word_to_perm(&deleted, tau.d())?;
        if &p != sigma {
            continue;
        }
        // Length k-1 word realizing a permutation with k-1 inversions is
        // automatically reduced.
        let raw = if (k - 1 - t) % 2 == 0 { 1 } else { -1 };
        let sign = raw * relative_sign(&deleted, sigma)?;
        if found.is_some() {
            // Unreachable: distinct positions of a reduced word delete
            // distinct crossings, hence produce distinct permutations.
            return Err(Error::VerificationFailed(format!(
                "two deletions of {w:?} realize {sigma:?}"
            )));
        }
        found = Some(sign);
    }
    found.ok_or(Error::NotInInterval)
}

/// Product of basis generators, "first `g`, then `h`": zero when inversions
/// fail to add (the concatenated diagram has a double crossing), otherwise
/// plus or minus the canonical generator of the composite permutation, with
/// the sign renormalizing the concatenated word.
pub fn multiply(
    g: &StrandGenerator,
    h: &StrandGenerator,
    field: FieldSpec,
) -> Result<AlgebraElement> {
    field.validate()?;
    if g.target != h.source {
        return Err(Error::BoundaryMismatch {
            target: g.target.to_string(),
            src: h.source.to_string(),
        });
    }
    let composite = h.perm.compose(&g.perm);
    if composite.inv_count() != g.perm.inv_count() + h.perm.inv_count() {
        return Ok(AlgebraElement::zero(field));
    }
    let word = canonical_word(&g.perm).concat(&canonical_word(&h.perm));
    let sign = relative_sign(&word, &composite)?;
    let gen = StrandGenerator::new(g.source.clone(), h.target.clone(), composite)?;
    let mut out = AlgebraElement::zero(field);
    out.add_term(gen, Scalar::from_int(field, sign.into()));
    Ok(out)
}

/// The differential: resolve each crossing of the canonical diagram of
/// `g.perm` in turn, skip resolutions that leave a non-reduced word (a double
/// crossing), weight the rest by `(-1)^(crossings after the resolved one)`,
/// and renormalize each leftover word to its canonical diagram. Raises the
/// degree by one.
pub fn differential(g: &StrandGenerator, field: FieldSpec) -> Result<AlgebraElement> {
    field.validate()?;
    let w = canonical_word(&g.perm);
    let k = w.len();
    let mut out = AlgebraElement::zero(field);
    for t in 0..k {
        let deleted = w.delete(t);
        let p = word_to_perm(&deleted, g.perm.d())?;
        if p.inv_count() != k - 1 {
            continue;
        }
        let raw = if (k - 1 - t) % 2 == 0 { 1 } else { -1 };
        let sign = raw * relative_sign(&deleted, &p)?;
        let gen = StrandGenerator::new(g.source.clone(), g.target.clone(), p)?;
        out.add_term(gen, Scalar::from_int(field, sign.into()));
    }
    Ok(out)
}

/// Left multiplication of an element by a generator; boundary-incompatible
/// terms contribute zero.
fn mul_gen_elem(g: &StrandGenerator, x: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(x.field());
    for (h, c) in x.terms() {
        if g.target != h.source {
            continue;
        }
        for (gen, s) in multiply(g, h, x.field())?.terms() {
            out.add_term(gen.clone(), s.mul(c));
        }
    }
    Ok(out)
}

/// Right multiplication of an element by a generator; boundary-incompatible
/// terms contribute zero.
fn mul_elem_gen(x: &AlgebraElement, h: &StrandGenerator) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(x.field());
    for (g, c) in x.terms() {
        if g.target != h.source {
            continue;
        }
        for (gen, s) in multiply(g, h, x.field())?.terms() {
            out.add_term(gen.clone(), c.mul(s));
        }
    }
    Ok(out)
}

/// Bilinear product of elements. Unlike [`multiply`] on generators, boundary
/// mismatches between terms contribute zero rather than erroring, so this is
/// the total product on `B(n,d) = ⊕ hom(I,J)`.
pub fn mul_elements(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    if x.field() != y.field() {
        return Err(Error::FieldMismatch(
            "multiplying elements over different coefficient rings".into(),
        ));
    }
    let mut out = AlgebraElement::zero(x.field());
    for (g, c) in x.terms() {
        let partial = mul_gen_elem(g, y)?;
        for (gen, s) in partial.terms() {
            out.add_term(gen.clone(), c.mul(s));
        }
    }
    Ok(out)
}

/// Linear extension of [`differential`].
pub fn differential_element(x: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(x.field());
    for (g, c) in x.terms() {
        for (gen, s) in differential(g, x.field())?.terms() {
            out.add_term(gen.clone(), c.mul(s));
        }
    }
    Ok(out)
}

/// Machine verification that `B(n,d)` is a differential graded algebra.
#[derive(Clone, Debug, Serialize)]
pub struct DgaReport {
    pub n: u32,
    pub d: usize,
    pub field: FieldSpec,
    /// Total number of basis generators (the dimension of `B(n,d)`).
    pub generators: usize,
    /// Generators with exactly one crossing, each checked to bound `e_JI`.
    pub single_crossing_generators: usize,
    /// Composable basis pairs checked for the graded Leibniz rule.
    pub leibniz_pairs: u64,
    /// Composable basis triples checked for associativity.
    pub associativity_triples: u64,
}

/// Check, on every basis element of `B(n,d)`:
///
/// * `∂∂ = 0`;
/// * `∂(g) = +e_JI` whenever `g` has a single crossing;
/// * the graded Leibniz rule on every composable pair: writing `g·h` for
///   "first `g`, then `h`", `∂(g·h) = g·∂(h) + (-1)^{inv(h)} ∂(g)·h`;
/// * associativity on every composable triple.
///
/// Returns the verification counts, or the first violation as an error.
pub fn verify_dga(n: u32, d: usize, field: FieldSpec) -> Result<DgaReport> {
    field.validate()?;
    let subsets = enum_subsets(n, d);
    let m = subsets.len();

    // One block of generators (with cached differentials) per pair I <= J.
    let mut block: BTreeMap<(usize, usize), Vec<(StrandGenerator, AlgebraElement)>> =
        BTreeMap::new();
    for a in 0..m {
        for b in 0..m {
            if !poset_leq(&subsets[a], &subsets[b]) {
                continue;
            }
            let gens = basis(&subsets[a], &subsets[b])?;
            let mut entries = Vec::with_capacity(gens.len());
            for g in gens {
                let dg = differential(&g, field)?;
                entries.push((g, dg));
            }
            block.insert((a, b), entries);
        }
    }
    let generators: usize = block.values().map(|v| v.len()).sum();

    // d^2 = 0 and the single-crossing normalization.
    let mut single_crossing = 0usize;
    for entries in block.values() {
        for (g, dg) in entries {
            let dd = differential_element(dg)?;
            if !dd.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "d(d({g})) = {dd:?} is nonzero"
                )));
            }
            if g.perm().inv_count() == 1 {
                single_crossing += 1;
                let mut expected = AlgebraElement::zero(field);
                expected.add_term(
                    StrandGenerator::new(
                        g.source().clone(),
                        g.target().clone(),
                        Permutation::identity(d),
                    )?,
                    Scalar::one(field),
                );
                if dg != &expected {
                    return Err(Error::VerificationFailed(format!(
                        "d({g}) = {dg:?}, expected +e_JI"
                    )));
                }
            }
        }
    }

    // Graded Leibniz rule on composable pairs.
    let mut leibniz_pairs = 0u64;
    for (&(a, b), left) in &block {
        for c in 0..m {
            let Some(right) = block.get(&(b, c)) else { continue };
            let _ = a;
            for (g, dg) in left {
                for (h, dh) in right {
                    let gh = multiply(g, h, field)?;
                    let lhs = differential_element(&gh)?;
                    let sign_h = Scalar::from_int(
                        field,
                        if h.perm().inv_count() % 2 == 0 { 1 } else { -1 },
                    );
                    let rhs = mul_gen_elem(g, dh)?.add(&mul_elem_gen(dg, h)?.scale(&sign_h))?;
                    if lhs != rhs {
                        return Err(Error::VerificationFailed(format!(
                            "Leibniz fails at {g} * {h}: d(gh) = {lhs:?} but g·dh ± dg·h = {rhs:?}"
                        )));
                    }
                    leibniz_pairs += 1;
                }
            }
        }
    }

    // Associativity on composable triples.
    let mut associativity_triples = 0u64;
    for (&(a, b), first) in &block {
        let _ = a;
        for c in 0..m {
            let Some(second) = block.get(&(b, c)) else { continue };
            for e in 0..m {
                let Some(third) = block.get(&(c, e)) else { continue };
                for (g, _) in first {
                    for (h, _) in second {
                        let gh = multiply(g, h, field)?;
                        for (l, _) in third {
                            let lhs = mul_elem_gen(&gh, l)?;
                            let hl = multiply(h, l, field)?;
                            let rhs = mul_gen_elem(g, &hl)?;
                            if lhs != rhs {
                                return Err(Error::VerificationFailed(format!(
                                    "associativity fails at {g} * {h} * {l}"
                                )));
                            }
                            associativity_triples += 1;
                        }
                    }
                }
            }
        }
    }

    Ok(DgaReport {
        n,
        d,
        field,
        generators,
        single_crossing_generators: single_crossing,
        leibniz_pairs,
        associativity_triples,
    })
}

/// The cochain complex `hom(I,J)` with its resolution differential: degrees
/// `-inv(pi0) ..= 0`, basis per degree in lex order on permutations.
/// An empty complex when `I <= J` fails.
pub fn hom_complex(i: &IndexSet, j: &IndexSet, field: FieldSpec) -> Result<ChainComplex> {
    let gens = basis(i, j)?;
    if gens.is_empty() {
        return ChainComplex::new(field, 0, Vec::new(), Vec::new(), Vec::new());
    }
    let height = gens.iter().map(|g| g.perm().inv_count()).max().unwrap();
    let min_degree = -(height as i64);
    // Generators per degree, preserving the inversion-graded basis order.
    let mut levels: Vec<Vec<&StrandGenerator>> = vec![Vec::new(); height + 1];
    for g in &gens {
        levels[height - g.perm().inv_count()].push(g);
    }
    let mut index: Vec<HashMap<&Permutation, usize>> = Vec::with_capacity(height + 1);
    for level in &levels {
        index.push(level.iter().enumerate().map(|(k, g)| (g.perm(), k)).collect());
    }
    let dims: Vec<usize> = levels.iter().map(|l| l.len()).collect();
    let labels: Vec<Vec<String>> = levels
        .iter()
        .map(|l| l.iter().map(|g| g.to_string()).collect())
        .collect();
    let mut diffs = Vec::with_capacity(height);
    for k in 0..height {
        let mut mat = SparseMatrix::new(dims[k + 1], dims[k], field);
        for (col, g) in levels[k].iter().enumerate() {
            for (term, coeff) in differential(g, field)?.terms() {
                let row = index[k + 1][term.perm()];
                mat.set(row, col, coeff.clone())?;
            }
        }
        diffs.push(mat);
    }
    ChainComplex::new(field, min_degree, dims, labels, diffs)
}

/// Per-block cohomology of `B(n,d)` plus the concentration verdict.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub n: u32,
    pub d: usize,
    pub field: FieldSpec,
    pub blocks: Vec<BlockCohomology>,
    /// True when every `hom(I,J)` has cohomology only in degree 0.
    pub concentrated: bool,
    /// Total dimension of degree-0 cohomology across blocks.
    pub h0_dim: usize,
}

/// Cohomology dimensions of one block `hom(I,J)`, keyed by degree; zero
/// dimensions are omitted.
#[derive(Clone, Debug, Serialize)]
pub struct BlockCohomology {
    pub source: String,
    pub target: String,
    pub dims: BTreeMap<i64, usize>,
}

/// The degree-0 cohomology algebra of `B(n,d)`: the span of the `e_JI`
/// modulo the image of the degree `-1` differential, with the induced
/// product, computed as an honest linear-algebra quotient. Also returns the
/// per-block cohomology table used for the concentration check.
///
/// Requires field coefficients; integer coefficients are supported only for
/// chain-complex homology.
pub fn h0_algebra(
    n: u32,
    d: usize,
    field: FieldSpec,
) -> Result<(FinDimAlgebra, CohomologyReport)> {
    field.validate()?;
    if !field.is_field() {
        return Err(Error::UnsupportedField(
            "the cohomology algebra requires field coefficients".into(),
        ));
    }
    let subsets = enum_subsets(n, d);
    let m = subsets.len();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if poset_leq(&subsets[a], &subsets[b]) {
                pairs.push((a, b));
            }
        }
    }
    let pair_pos: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(q, &p)| (p, q)).collect();

    // Degree-0 ambient space is spanned by the e_JI, one per pair; the
    // coboundaries are the differentials of the single-crossing generators.
    let mut columns: Vec<AlgebraElement> = Vec::new();
    for &(a, b) in &pairs {
        for g in basis(&subsets[a], &subsets[b])? {
            if g.perm().inv_count() == 1 {
                columns.push(differential(&g, field)?);
            }
        }
    }
    let ambient = SparseMatrix::identity(pairs.len(), field);
    let mut coboundaries = SparseMatrix::new(pairs.len(), columns.len(), field);
    for (col, dg) in columns.iter().enumerate() {
        for (term, coeff) in dg.terms() {
            debug_assert!(term.is_crossingless());
            let a = subsets.binary_search(term.source()).expect("known subset");
            let b = subsets.binary_search(term.target()).expect("known subset");
            let row = pair_pos[&(a, b)];
            coboundaries.set(row, col, coeff.clone())?;
        }
    }
    let quotient = quotient_basis(&ambient, &coboundaries)?;

    // Each quotient basis vector must be supported on a single pair
    // coordinate; that pair is the surviving e_JI it represents.
    let reps = quotient.representatives();
    let mut surviving: Vec<usize> = Vec::with_capacity(quotient.dim());
    let mut support: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); quotient.dim()];
    for (r, c, s) in reps.entries() {
        support[c].push((r, s.clone()));
    }
    for cells in &support {
        if cells.len() != 1 || !cells[0].1.is_one() {
            return Err(Error::VerificationFailed(
                "degree-0 quotient basis is not aligned with the pair coordinates".into(),
            ));
        }
        surviving.push(cells[0].0);
    }
    let surviving_set: BTreeSet<usize> = surviving.iter().copied().collect();
    if surviving_set.len() != surviving.len() {
        return Err(Error::VerificationFailed(
            "degree-0 quotient representatives collide".into(),
        ));
    }

    // Honest projection of each product of surviving classes: multiply the
    // crossingless generators and project the result into the quotient.
    let elems: Vec<crate::auslander::BasisElem> = surviving
        .iter()
        .map(|&q| crate::auslander::BasisElem { src: pairs[q].0, tgt: pairs[q].1, degree: 0 })
        .collect();
    let mut product_class: BTreeMap<(usize, usize), Option<usize>> = BTreeMap::new();
    for x in &elems {
        for y in &elems {
            if x.tgt != y.src {
                continue;
            }
            let gx = StrandGenerator::new(
                subsets[x.src].clone(),
                subsets[x.tgt].clone(),
                Permutation::identity(d),
            )?;
            let gy = StrandGenerator::new(
                subsets[y.src].clone(),
                subsets[y.tgt].clone(),
                Permutation::identity(d),
            )?;
            let prod = multiply(&gx, &gy, field)?;
            let mut vector = vec![Scalar::zero(field); pairs.len()];
            for (term, coeff) in prod.terms() {
                vector[pair_pos[&(x.src, y.tgt)]] = coeff.clone();
                debug_assert!(term.is_crossingless());
            }
            let coords = quotient.project(&vector)?;
            let nonzero: Vec<usize> =
                (0..coords.len()).filter(|&k| !coords[k].is_zero()).collect();
            let class = match nonzero.as_slice() {
                [] => None,
                [k] if coords[*k].is_one() && pairs[surviving[*k]] == (x.src, y.tgt) => Some(*k),
                _ => {
                    return Err(Error::VerificationFailed(format!(
                        "product of surviving classes at ({},{}) is not monomial",
                        x.src, y.tgt
                    )))
                }
            };
            product_class.insert((pair_pos[&(x.src, x.tgt)], pair_pos[&(y.src, y.tgt)]), class);
        }
    }
    let algebra = FinDimAlgebra::assemble(
        format!("H0(B({n},{d}))"),
        "e",
        subsets.clone(),
        elems,
        |_, x, y| {
            product_class
                .get(&(pair_pos[&(x.src, x.tgt)], pair_pos[&(y.src, y.tgt)]))
                .copied()
                .flatten()
                .map(|_| 1)
        },
    );

    // Per-block cohomology via the hom complexes.
    let mut blocks = Vec::with_capacity(pairs.len());
    let mut concentrated = true;
    let mut h0_dim = 0usize;
    for &(a, b) in &pairs {
        let complex = hom_complex(&subsets[a], &subsets[b], field)?;
        let dims = crate::bruhat::homology(&complex)?;
        if dims.keys().any(|&deg| deg != 0) {
            concentrated = false;
        }
        h0_dim += dims.get(&0).copied().unwrap_or(0);
        blocks.push(BlockCohomology {
            source: subsets[a].to_string(),
            target: subsets[b].to_string(),
            dims,
        });
    }
    if h0_dim != algebra.dim() {
        return Err(Error::VerificationFailed(format!(
            "block H^0 total {} disagrees with the quotient dimension {}",
            h0_dim,
            algebra.dim()
        )));
    }

    let report = CohomologyReport { n, d, field, blocks, concentrated, h0_dim };
    Ok((algebra, report))
}

/// Certificate that `e_JI -> f_JI` (killing the non-interleaved pairs) is an
/// algebra isomorphism from the degree-0 cohomology of `B(n,d)` onto
/// `A(n,d)`: the kernel matches the interleaving pattern in both directions
/// and every structure constant matches. The per-block cohomology report
/// from the underlying computation is returned alongside the certificate.
pub fn h0_iso_certificate(
    n: u32,
    d: usize,
    field: FieldSpec,
) -> Result<(IsoCertificate, CohomologyReport)> {
    let (h0, report) = h0_algebra(n, d, field)?;
    let reference = build_A(n, d);
    let subsets = enum_subsets(n, d);
    for a in 0..subsets.len() {
        for b in 0..subsets.len() {
            if !poset_leq(&subsets[a], &subsets[b]) {
                continue;
            }
            let survives = h0.pair(a, b).is_some();
            let expected = interleaved(&subsets[a], &subsets[b]);
            if survives != expected {
                return Err(Error::VerificationFailed(format!(
                    "kernel mismatch at ({}, {}): surviving = {survives}, interleaved = {expected}",
                    subsets[a], subsets[b]
                )));
            }
        }
    }
    let map: Vec<usize> = h0
        .elems()
        .iter()
        .map(|e| {
            reference
                .pair(e.src, e.tgt)
                .expect("kernel match guarantees an interleaved image pair")
        })
        .collect();
    let cert = certificate(&h0, &reference, &map, false)?;
    Ok((cert, report))
}

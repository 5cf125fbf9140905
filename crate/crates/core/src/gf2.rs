//! Sparse linear and multilinear algebra over the two-element field.
//!
//! A vector over GF(2) is just its support: a finite set of basis keys, each
//! carrying coefficient 1. Addition is symmetric difference of supports, so
//! `v + v = 0` holds by construction and no coefficient bookkeeping exists to
//! get wrong. Everything downstream (cobar words, bar words, tensor keys) is
//! a key type, and linearity is the `lin` combinator.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Types that carry a homological degree.
pub trait Graded {
    fn degree(&self) -> i64;
}

/// Bound alias for basis key types.
pub trait Key: Ord + Clone + Graded + fmt::Display + fmt::Debug {}
impl<T: Ord + Clone + Graded + fmt::Display + fmt::Debug> Key for T {}

// ---------------------------------------------------------------------------
// BasisId: interned (name, degree) pairs
// ---------------------------------------------------------------------------

struct Interner {
    names: Vec<(String, u32)>,
    index: BTreeMap<(String, u32), u32>,
}

fn interner() -> &'static Mutex<Interner> {
    static INTERNER: OnceLock<Mutex<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        Mutex::new(Interner {
            names: Vec::new(),
            index: BTreeMap::new(),
        })
    })
}

/// An interned basis element of a graded module: an opaque symbol plus its
/// degree. Two ids are equal iff they intern the same (name, degree) pair;
/// the degree of a symbol never changes once assigned.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisId {
    sym: u32,
    degree: u32,
}

impl BasisId {
    /// Interns `name` at `degree`. Interning the same pair twice returns the
    /// same id; the same name at a different degree is a distinct id.
    pub fn intern(name: &str, degree: u32) -> BasisId {
        let mut int = interner().lock().expect("interner poisoned");
        if let Some(&sym) = int.index.get(&(name.to_owned(), degree)) {
            return BasisId { sym, degree };
        }
        let sym = int.names.len() as u32;
        int.names.push((name.to_owned(), degree));
        int.index.insert((name.to_owned(), degree), sym);
        BasisId { sym, degree }
    }

    pub fn name(&self) -> String {
        let int = interner().lock().expect("interner poisoned");
        int.names[self.sym as usize].0.clone()
    }
}

impl Graded for BasisId {
    fn degree(&self) -> i64 {
        i64::from(self.degree)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Debug for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.degree)
    }
}

// ---------------------------------------------------------------------------
// Tensor keys
// ---------------------------------------------------------------------------

/// A basis element of an n-fold tensor product, kept as an explicit tuple of
/// factor keys; the arity is never flattened away.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<K>(pub Vec<K>);

impl<K> Tensor<K> {
    pub fn pair(a: K, b: K) -> Self {
        Tensor(vec![a, b])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[K] {
        &self.0
    }
}

impl<K: Graded> Graded for Tensor<K> {
    fn degree(&self) -> i64 {
        self.0.iter().map(Graded::degree).sum()
    }
}

impl<K: fmt::Display> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.0 {
            if !first {
                write!(f, "(x)")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Gf2Vector
// ---------------------------------------------------------------------------

/// A formal GF(2) sum of basis keys, stored as its support set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gf2Vector<K: Ord>(BTreeSet<K>);

impl<K: Ord + Clone> Gf2Vector<K> {
    pub fn zero() -> Self {
        Gf2Vector(BTreeSet::new())
    }

    pub fn basis(k: K) -> Self {
        let mut s = BTreeSet::new();
        s.insert(k);
        Gf2Vector(s)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, k: &K) -> bool {
        self.0.contains(k)
    }

    pub fn support(&self) -> impl Iterator<Item = &K> {
        self.0.iter()
    }

    pub fn into_support(self) -> impl Iterator<Item = K> {
        self.0.into_iter()
    }

    /// Toggles `k` in the support (adds the basis vector mod 2).
    pub fn toggle(&mut self, k: K) {
        if !self.0.remove(&k) {
            self.0.insert(k);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for k in &other.0 {
            self.toggle(k.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        // symmetric difference of supports
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// GF(2)-linear extension: applies `f` to every support key and sums the
    /// images mod 2.
    pub fn lin<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Gf2Vector<K2>) -> Gf2Vector<K2> {
        let mut out = Gf2Vector::zero();
        for k in &self.0 {
            out.add_assign(&f(k));
        }
        out
    }

    /// Fallible variant of [`lin`](Self::lin).
    pub fn try_lin<K2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Result<Gf2Vector<K2>>,
    ) -> Result<Gf2Vector<K2>> {
        let mut out = Gf2Vector::zero();
        for k in &self.0 {
            out.add_assign(&f(k)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone + Graded> Gf2Vector<K> {
    /// The common degree of all support keys, `None` for the zero vector, or
    /// an error listing two keys of different degrees.
    pub fn homogeneous_degree(&self) -> std::result::Result<Option<i64>, (i64, i64)> {
        let mut deg = None;
        for k in &self.0 {
            match deg {
                None => deg = Some(k.degree()),
                Some(d) if d != k.degree() => return Err((d, k.degree())),
                Some(_) => {}
            }
        }
        Ok(deg)
    }

    /// Panics if the vector mixes degrees. DG operations call this on entry.
    pub fn assert_homogeneous(&self, context: &str) -> Option<i64> {
        match self.homogeneous_degree() {
            Ok(d) => d,
            Err((a, b)) => panic!("{context}: heterogeneous input (degrees {a} and {b})"),
        }
    }
}

impl<K: Ord + Clone> FromIterator<K> for Gf2Vector<K> {
    /// Collects with mod-2 multiplicity: a key appearing an even number of
    /// times cancels.
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut out = Gf2Vector::zero();
        for k in iter {
            out.toggle(k);
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for Gf2Vector<K> {
    type Output = Gf2Vector<K>;
    fn add(mut self, rhs: Gf2Vector<K>) -> Self {
        self.add_assign(&rhs);
        self
    }
}

impl<K: Ord + Clone> std::ops::AddAssign for Gf2Vector<K> {
    fn add_assign(&mut self, rhs: Self) {
        Gf2Vector::add_assign(self, &rhs);
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Gf2Vector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// LinearMap
// ---------------------------------------------------------------------------

/// A GF(2)-linear map given by rows over a finite source basis.
///
/// Every declared source key has a row (possibly zero); applying the map to a
/// key without a row is an error rather than an implicit zero, so dangling
/// structure constants surface instead of vanishing.
#[derive(Clone, Debug)]
pub struct LinearMap<S: Key, T: Key> {
    rows: BTreeMap<S, Gf2Vector<T>>,
    degree_shift: i64,
}

impl<S: Key, T: Key> LinearMap<S, T> {
    pub fn new(degree_shift: i64) -> Self {
        LinearMap {
            rows: BTreeMap::new(),
            degree_shift,
        }
    }

    pub fn degree_shift(&self) -> i64 {
        self.degree_shift
    }

    /// Inserts a row, checking that every image key sits in the right degree.
    pub fn insert_row(&mut self, source: S, image: Gf2Vector<T>) -> Result<()> {
        let expected = source.degree() + self.degree_shift;
        for t in image.support() {
            if t.degree() != expected {
                return Err(Error::DegreeMismatch {
                    context: format!("row of `{source}`"),
                    element: t.to_string(),
                    found: t.degree(),
                    expected,
                });
            }
        }
        self.rows.insert(source, image);
        Ok(())
    }

    pub fn row(&self, source: &S) -> Result<&Gf2Vector<T>> {
        self.rows
            .get(source)
            .ok_or_else(|| Error::UnknownBasis(source.to_string()))
    }

    pub fn sources(&self) -> impl Iterator<Item = &S> {
        self.rows.keys()
    }

    /// GF(2)-linear extension of the rows.
    pub fn apply(&self, v: &Gf2Vector<S>) -> Result<Gf2Vector<T>> {
        v.try_lin(|k| self.row(k).cloned())
    }
}

impl<S: Key> LinearMap<S, S> {
    pub fn identity<I: IntoIterator<Item = S>>(basis: I) -> Self {
        let mut m = LinearMap::new(0);
        for k in basis {
            m.rows.insert(k.clone(), Gf2Vector::basis(k));
        }
        m
    }
}

/// Composition `f ∘ g`; degree shifts add.
pub fn compose<S: Key, M: Key, T: Key>(
    f: &LinearMap<M, T>,
    g: &LinearMap<S, M>,
) -> Result<LinearMap<S, T>> {
    let mut out = LinearMap::new(f.degree_shift + g.degree_shift);
    for (s, mid) in &g.rows {
        let image = f.apply(mid)?;
        out.rows.insert(s.clone(), image);
    }
    Ok(out)
}

/// Componentwise application `f_1 ⊗ ... ⊗ f_n` to a vector over a product
/// basis, extended multilinearly. The arity of every key must equal the
/// number of maps.
pub fn tensor_apply<K: Key>(
    maps: &[&LinearMap<K, K>],
    v: &Gf2Vector<Tensor<K>>,
) -> Result<Gf2Vector<Tensor<K>>> {
    v.try_lin(|key| {
        if key.arity() != maps.len() {
            return Err(Error::ArityMismatch {
                expected: maps.len(),
                found: key.arity(),
            });
        }
        // expand the product of images one factor at a time
        let mut partial: Vec<Vec<K>> = vec![Vec::new()];
        for (f, k) in maps.iter().zip(key.factors()) {
            let image = f.row(k)?;
            let mut next = Vec::new();
            for prefix in &partial {
                for t in image.support() {
                    let mut ext = prefix.clone();
                    ext.push(t.clone());
                    next.push(ext);
                }
            }
            partial = next;
            if partial.is_empty() {
                break;
            }
        }
        Ok(partial.into_iter().map(Tensor).collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(n: u32) -> BasisId {
        BasisId::intern(&format!("gf2test_e{n}"), 1)
    }

    fn vec_of(ids: &[u32]) -> Gf2Vector<BasisId> {
        ids.iter().map(|&n| e(n)).collect()
    }

    #[test]
    fn add_is_symmetric_difference() {
        // {e1} + {e1} = 0
        assert!(vec_of(&[1]).add(&vec_of(&[1])).is_zero());
        // {e1} + {e2} = {e1, e2}
        assert_eq!(vec_of(&[1]).add(&vec_of(&[2])), vec_of(&[1, 2]));
        // {e1,e2} + {e2,e3} = {e1,e3}
        assert_eq!(vec_of(&[1, 2]).add(&vec_of(&[2, 3])), vec_of(&[1, 3]));
    }

    #[test]
    fn collect_cancels_mod_2() {
        let v: Gf2Vector<BasisId> = [e(1), e(2), e(1), e(3), e(2), e(2)].into_iter().collect();
        assert_eq!(v, vec_of(&[2, 3]));
    }

    #[test]
    fn apply_zero_identity_cancellation() {
        let basis = [e(1), e(2)];
        let mut zero = LinearMap::<BasisId, BasisId>::new(0);
        for k in basis {
            zero.insert_row(k, Gf2Vector::zero()).unwrap();
        }
        assert!(zero.apply(&vec_of(&[1])).unwrap().is_zero());

        let id = LinearMap::identity(basis);
        assert_eq!(id.apply(&vec_of(&[1, 2])).unwrap(), vec_of(&[1, 2]));

        // f(e1) = f(e2) = {a}: everything cancels on e1 + e2
        let a = BasisId::intern("gf2test_a", 1);
        let mut f = LinearMap::new(0);
        f.insert_row(e(1), Gf2Vector::basis(a)).unwrap();
        f.insert_row(e(2), Gf2Vector::basis(a)).unwrap();
        assert!(f.apply(&vec_of(&[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn apply_unknown_basis_errors() {
        let f = LinearMap::<BasisId, BasisId>::new(0);
        assert!(matches!(
            f.apply(&vec_of(&[7])),
            Err(Error::UnknownBasis(_))
        ));
    }

    #[test]
    fn insert_row_checks_degrees() {
        let lo = BasisId::intern("gf2test_lo", 1);
        let hi = BasisId::intern("gf2test_hi", 5);
        let mut d = LinearMap::new(-1);
        assert!(d.insert_row(hi, Gf2Vector::basis(lo)).is_err());
    }

    #[test]
    fn tensor_apply_examples() {
        let a = BasisId::intern("gf2test_ta", 1);
        let b = BasisId::intern("gf2test_tb", 1);
        let c = BasisId::intern("gf2test_tc", 1);
        let id = LinearMap::identity([e(1), e(2)]);
        let pair = Gf2Vector::basis(Tensor::pair(e(1), e(2)));

        // (id, id) acts as the identity
        assert_eq!(tensor_apply(&[&id, &id], &pair).unwrap(), pair);

        // (d, id) with d(e1) = 0 kills the term
        let mut d = LinearMap::new(0);
        d.insert_row(e(1), Gf2Vector::zero()).unwrap();
        d.insert_row(e(2), Gf2Vector::basis(e(2))).unwrap();
        assert!(tensor_apply(&[&d, &id], &pair).unwrap().is_zero());

        // bilinearity: f(e1) = {a,b}, g(e2) = {c}
        let mut f = LinearMap::new(0);
        f.insert_row(e(1), [a, b].into_iter().collect()).unwrap();
        f.insert_row(e(2), Gf2Vector::zero()).unwrap();
        let mut g = LinearMap::new(0);
        g.insert_row(e(1), Gf2Vector::zero()).unwrap();
        g.insert_row(e(2), Gf2Vector::basis(c)).unwrap();
        let out = tensor_apply(&[&f, &g], &pair).unwrap();
        let expected: Gf2Vector<Tensor<BasisId>> =
            [Tensor::pair(a, c), Tensor::pair(b, c)].into_iter().collect();
        assert_eq!(out, expected);

        // arity mismatch is an error
        assert!(matches!(
            tensor_apply(&[&id], &pair),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn homogeneity() {
        let x = BasisId::intern("gf2test_h1", 1);
        let y = BasisId::intern("gf2test_h2", 2);
        let v: Gf2Vector<BasisId> = [x, y].into_iter().collect();
        assert!(v.homogeneous_degree().is_err());
        assert_eq!(Gf2Vector::basis(x).homogeneous_degree(), Ok(Some(1)));
        assert_eq!(Gf2Vector::<BasisId>::zero().homogeneous_degree(), Ok(None));
    }

    fn arb_vec() -> impl Strategy<Value = Gf2Vector<BasisId>> {
        prop::collection::btree_set(0u32..12, 0..8)
            .prop_map(|s| s.into_iter().map(e).collect())
    }

    proptest! {
        #[test]
        fn addition_laws(v in arb_vec(), w in arb_vec(), u in arb_vec()) {
            prop_assert_eq!(v.add(&w).add(&u), v.add(&w.add(&u)));
            prop_assert_eq!(v.add(&Gf2Vector::zero()), v.clone());
            prop_assert!(v.add(&v).is_zero());
            prop_assert_eq!(v.add(&w), w.add(&v));
        }

        #[test]
        fn composition_agrees_with_nested_apply(v in arb_vec(), seed in 0u64..1000) {
            // two random maps on the 12-element test basis
            let basis: Vec<BasisId> = (0..12).map(e).collect();
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); s };
            let mut f = LinearMap::new(0);
            let mut g = LinearMap::new(0);
            for k in &basis {
                let img: Gf2Vector<BasisId> = basis.iter().filter(|_| next() % 3 == 0).cloned().collect();
                f.insert_row(k.clone(), img).unwrap();
                let img: Gf2Vector<BasisId> = basis.iter().filter(|_| next() % 3 == 1).cloned().collect();
                g.insert_row(k.clone(), img).unwrap();
            }
            let fg = compose(&f, &g).unwrap();
            prop_assert_eq!(fg.apply(&v).unwrap(), f.apply(&g.apply(&v).unwrap()).unwrap());
        }

        #[test]
        fn tensor_apply_distributes_over_add(v in arb_vec(), w in arb_vec()) {
            let id = LinearMap::identity((0..12).map(e));
            let pairs = |a: &Gf2Vector<BasisId>| -> Gf2Vector<Tensor<BasisId>> {
                a.support().map(|k| Tensor::pair(k.clone(), e(0))).collect()
            };
            let lhs = tensor_apply(&[&id, &id], &pairs(&v.add(&w))).unwrap();
            let rhs = tensor_apply(&[&id, &id], &pairs(&v)).unwrap()
                .add(&tensor_apply(&[&id, &id], &pairs(&w)).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{char_poly, integer_roots, nullspace, IntMatrix, IntPolynomial};

/// Returns `λ` when `L·M = λ·L` holds exactly.
///
/// For a positive `L` and a nonnegative `M` such a `λ` is the spectral radius of `M`.
pub fn left_eigencheck(l: &[BigInt], m: &IntMatrix) -> Option<BigRational> {
    assert_eq!(l.len(), m.rows(), "length vector and matrix disagree");
    let lm = m.left_mul_vec(l);
    let mut lambda: Option<BigRational> = None;
    for (num, den) in lm.into_iter().zip(l) {
        if den.is_zero() {
            if !num.is_zero() {
                return None;
            }
            continue;
        }
        let ratio = BigRational::new(num, den.clone());
        match &lambda {
            None => lambda = Some(ratio),
            Some(prev) if *prev != ratio => return None,
            Some(_) => {}
        }
    }
    lambda
}

fn support(m: &IntMatrix) -> Vec<Vec<bool>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| !v.is_zero()).collect())
        .collect()
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = a.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] {
                for j in 0..n {
                    out[i][j] |= b[k][j];
                }
            }
        }
    }
    out
}

/// True when some power of `m` is entrywise positive.
///
/// Checks the power `r² − 2r + 2` (Wielandt's bound) on the zero pattern only, so entries never
/// leave `{0, 1}`.
pub fn is_primitive(m: &IntMatrix) -> bool {
    assert!(m.is_square(), "primitivity of a non-square matrix");
    let r = m.rows();
    if r == 0 {
        return false;
    }
    let mut exponent = r * r + 2 - 2 * r;
    let mut base = support(m);
    let mut acc: Option<Vec<Vec<bool>>> = None;
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => bool_mul(&a, &base),
            });
        }
        exponent >>= 1;
        if exponent > 0 {
            base = bool_mul(&base, &base);
        }
    }
    acc.is_some_and(|a| a.iter().all(|row| row.iter().all(|&v| v)))
}

/// Strongly connected components of the support digraph (edge `j → i` when `m[i][j] ≠ 0`),
/// by Tarjan's algorithm. Components come out in reverse topological order.
pub fn strongly_connected_components(m: &IntMatrix) -> Vec<Vec<usize>> {
    struct Tarjan<'a> {
        adj: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    impl Tarjan<'_> {
        fn visit(&mut self, v: usize) {
            self.index[v] = Some(self.next);
            self.low[v] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[v] = true;
            for &w in &self.adj[v] {
                match self.index[w] {
                    None => {
                        self.visit(w);
                        self.low[v] = self.low[v].min(self.low[w]);
                    }
                    Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                    Some(_) => {}
                }
            }
            if Some(self.low[v]) == self.index[v] {
                let mut component = Vec::new();
                while let Some(w) = self.stack.pop() {
                    self.on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                self.out.push(component);
            }
        }
    }

    let n = m.rows();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|j| (0..n).filter(|&i| !m.get(i, j).is_zero()).collect())
        .collect();
    let mut t = Tarjan {
        adj: &adj,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    t.out
}

/// A rational interval known to contain the spectral radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusBracket {
    pub lo: BigRational,
    pub hi: BigRational,
    /// Set when the iteration budget ran out before the width reached the tolerance. The bounds
    /// are still valid.
    pub loose: bool,
}

impl RadiusBracket {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

pub const DEFAULT_MAX_ITERATIONS: usize = 20_000;

const PRECISION_BITS: u64 = 192;

/// Collatz–Wielandt bounds `min (Bx)_i/x_i ≤ ρ(B) ≤ max (Bx)_i/x_i`, valid for every positive `x`.
fn collatz_wielandt(b: &IntMatrix, x: &[BigInt]) -> (BigRational, BigRational, Vec<BigInt>) {
    let y = b.mul_vec(x);
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for (yi, xi) in y.iter().zip(x) {
        let ratio = BigRational::new(yi.clone(), xi.clone());
        if lo.as_ref().is_none_or(|l| ratio < *l) {
            lo = Some(ratio.clone());
        }
        if hi.as_ref().is_none_or(|h| ratio > *h) {
            hi = Some(ratio);
        }
    }
    (lo.unwrap_or_default(), hi.unwrap_or_default(), y)
}

/// Rounds a positive vector up to at most `PRECISION_BITS` significant bits. Any positive vector
/// yields valid bounds, so rounding only affects the speed of convergence.
fn rescale(y: Vec<BigInt>) -> Vec<BigInt> {
    let bits = y.iter().map(BigInt::bits).max().unwrap_or(0);
    if bits <= PRECISION_BITS {
        return y;
    }
    let shift = bits - PRECISION_BITS;
    y.into_iter()
        .map(|v| {
            let q: BigInt = (v + ((BigInt::one() << shift) - 1u32)) >> shift;
            if q.is_positive() {
                q
            } else {
                BigInt::one()
            }
        })
        .collect()
}

fn block_bracket(
    block: &IntMatrix,
    tol: &BigRational,
    max_iterations: usize,
) -> (BigRational, BigRational, bool) {
    let n = block.rows();
    if n == 1 {
        let v = BigRational::from_integer(block.get(0, 0).clone());
        return (v.clone(), v, false);
    }
    // B + I is primitive for irreducible B and has spectral radius ρ(B) + 1
    let mut shifted = block.clone();
    for i in 0..n {
        let d = shifted.get(i, i) + 1u32;
        shifted.set(i, i, d);
    }
    let one = BigRational::one();
    let mut x = vec![BigInt::one(); n];
    let mut best_lo: Option<BigRational> = None;
    let mut best_hi: Option<BigRational> = None;
    for _ in 0..max_iterations {
        let (lo, hi, y) = collatz_wielandt(&shifted, &x);
        if best_lo.as_ref().is_none_or(|b| lo > *b) {
            best_lo = Some(lo);
        }
        if best_hi.as_ref().is_none_or(|b| hi < *b) {
            best_hi = Some(hi);
        }
        let (lo, hi) = (best_lo.as_ref().unwrap(), best_hi.as_ref().unwrap());
        if hi - lo <= *tol {
            return (lo - &one, hi - &one, false);
        }
        x = rescale(y);
    }
    (best_lo.unwrap() - &one, best_hi.unwrap() - &one, true)
}

/// Rational bracket `[lo, hi]` around the spectral radius of a nonnegative matrix with
/// `hi − lo ≤ tol` unless the iteration budget runs out.
///
/// The matrix is split into the diagonal blocks of its strongly connected components; the
/// spectral radius is the maximum over the blocks, and each irreducible block is bracketed by
/// Collatz–Wielandt bounds on exactly computed, rescaled power iterates.
pub fn radius_bracket(m: &IntMatrix, tol: &BigRational) -> RadiusBracket {
    radius_bracket_with_budget(m, tol, DEFAULT_MAX_ITERATIONS)
}

pub(crate) fn radius_bracket_with_budget(
    m: &IntMatrix,
    tol: &BigRational,
    max_iterations: usize,
) -> RadiusBracket {
    assert!(
        m.is_square() && m.is_nonnegative(),
        "radius_bracket expects a nonnegative square matrix"
    );
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    let mut loose = false;
    for component in strongly_connected_components(m) {
        let (blo, bhi, bloose) = block_bracket(&m.submatrix(&component), tol, max_iterations);
        if blo > lo {
            lo = blo;
        }
        if bhi > hi {
            hi = bhi;
        }
        loose |= bloose;
    }
    RadiusBracket { lo, hi, loose }
}

/// Exact facts about the dominant eigenvalue of a nonnegative integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub char_poly: IntPolynomial,
    pub integer_roots: Vec<(BigInt, usize)>,
    pub radius_bracket: RadiusBracket,
    pub dominant_is_integer: bool,
    pub dominant_value: Option<BigInt>,
}

/// Decides whether the spectral radius is an integer.
///
/// The spectral radius of a nonnegative matrix is its largest real eigenvalue. It is an integer
/// exactly when the largest integer root `r` of the characteristic polynomial has no real root
/// above it, which a Sturm count settles exactly. Rational eigenvalues of an integer matrix are
/// integers, so this is also the rationality test.
pub fn spectral_report(m: &IntMatrix, tol: &BigRational) -> SpectralReport {
    let poly = char_poly(m);
    let roots = integer_roots(&poly);
    let bracket = radius_bracket(m, tol);
    let dominant_value = roots
        .last()
        .filter(|(r, _)| poly.real_roots_above(r) == 0)
        .map(|(r, _)| r.clone());
    if let Some(v) = &dominant_value {
        debug_assert!(bracket.contains(&BigRational::from_integer(v.clone())));
    }
    SpectralReport {
        char_poly: poly,
        integer_roots: roots,
        radius_bracket: bracket,
        dominant_is_integer: dominant_value.is_some(),
        dominant_value,
    }
}

/// The normalized positive right eigenvector for an integer dominant eigenvalue of a primitive
/// matrix: the limiting letter frequencies of a primitive morphism.
pub fn perron_frequencies(m: &IntMatrix) -> Option<Vec<BigRational>> {
    if !is_primitive(m) {
        return None;
    }
    let poly = char_poly(m);
    let roots = integer_roots(&poly);
    let (q, _) = roots.last()?;
    if poly.real_roots_above(q) != 0 {
        return None;
    }
    let mut shifted = m.to_rational();
    let q = BigRational::from_integer(q.clone());
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] -= &q;
    }
    let basis = nullspace(&shifted);
    if basis.len() != 1 {
        return None;
    }
    let v = &basis[0];
    let sum: BigRational = v.iter().sum();
    if sum.is_zero() {
        return None;
    }
    let normalized: Vec<BigRational> = v.iter().map(|x| x / &sum).collect();
    normalized
        .iter()
        .all(Signed::is_positive)
        .then_some(normalized)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn tol() -> BigRational {
        q(1, 1_000_000_000)
    }

    #[test]
    fn eigencheck_examples() {
        let istrail = IntMatrix::from_rows(&[&[0, 1, 1], &[1, 1, 0], &[1, 1, 0]]);
        assert_eq!(left_eigencheck(&ints(&[2, 3, 1]), &istrail), Some(q(2, 1)));
        let lysenok =
            IntMatrix::from_rows(&[&[2, 0, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 0]]);
        assert_eq!(left_eigencheck(&ints(&[3, 1, 1, 1]), &lysenok), None);
        let thue_morse = IntMatrix::from_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(left_eigencheck(&ints(&[1, 1]), &thue_morse), Some(q(2, 1)));
    }

    #[test]
    fn primitivity_examples() {
        // a→acaba, b→bac, c→cab
        let m = IntMatrix::from_rows(&[&[3, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert!(is_primitive(&m));
        assert!(!is_primitive(&IntMatrix::identity(2)));
        let lysenok =
            IntMatrix::from_rows(&[&[2, 0, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 0]]);
        assert!(!is_primitive(&lysenok));
        // a 3-cycle is irreducible but not primitive
        let cycle = IntMatrix::from_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert!(!is_primitive(&cycle));
        assert!(is_primitive(&IntMatrix::from_rows(&[&[5]])));
    }

    #[test]
    fn scc_of_lysenok() {
        let lysenok =
            IntMatrix::from_rows(&[&[2, 0, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 0]]);
        let mut comps = strongly_connected_components(&lysenok);
        comps.sort();
        assert_eq!(comps, vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn brackets_of_exact_cases() {
        let tm3 = IntMatrix::from_rows(&[&[4, 4], &[4, 4]]);
        let b = radius_bracket(&tm3, &tol());
        assert_eq!((b.lo.clone(), b.hi.clone()), (q(8, 1), q(8, 1)));
        let one = IntMatrix::from_rows(&[&[5]]);
        let b = radius_bracket(&one, &tol());
        assert_eq!((b.lo, b.hi), (q(5, 1), q(5, 1)));
        let diag = IntMatrix::from_rows(&[&[3, 0], &[0, 1]]);
        let b = radius_bracket(&diag, &tol());
        assert_eq!((b.lo, b.hi), (q(3, 1), q(3, 1)));
    }

    #[test]
    fn bracket_of_periodic_block() {
        // a permutation cycle has spectral radius 1 but no convergent plain power iteration
        let cycle = IntMatrix::from_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let b = radius_bracket(&cycle, &tol());
        assert!(b.contains(&q(1, 1)) && !b.loose);
    }

    #[test]
    fn budget_exhaustion_sets_loose_flag() {
        let m = IntMatrix::from_rows(&[&[2, 0, 2, 0], &[0, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 0]]);
        let b = radius_bracket_with_budget(&m, &tol(), 1);
        assert!(b.loose);
        assert!(b.lo <= b.hi);
    }

    #[test]
    fn spectral_report_examples() {
        let m = IntMatrix::from_rows(&[&[1, 2, 0], &[1, 0, 2], &[1, 0, 0]]);
        assert!(!spectral_report(&m, &tol()).dominant_is_integer);
        let istrail = IntMatrix::from_rows(&[&[0, 1, 1], &[1, 1, 0], &[1, 1, 0]]);
        assert_eq!(
            spectral_report(&istrail, &tol()).dominant_value,
            Some(BigInt::from(2))
        );
        let diag = IntMatrix::from_rows(&[&[3, 0], &[0, 1]]);
        assert_eq!(
            spectral_report(&diag, &tol()).dominant_value,
            Some(BigInt::from(3))
        );
        // x^2 - x - 3 has no integer root; diag(1) block adds the integer root 1 below ρ
        let m = IntMatrix::from_rows(&[&[1, 3, 0], &[1, 0, 0], &[0, 0, 1]]);
        let r = spectral_report(&m, &tol());
        assert_eq!(r.integer_roots, vec![(BigInt::from(1), 1)]);
        assert!(!r.dominant_is_integer);
    }

    #[test]
    fn perron_examples() {
        let pd = IntMatrix::from_rows(&[&[1, 2], &[1, 0]]);
        assert_eq!(perron_frequencies(&pd), Some(vec![q(2, 3), q(1, 3)]));
        let circulant = IntMatrix::from_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(perron_frequencies(&circulant), Some(vec![q(1, 3); 3]));
        let fib = IntMatrix::from_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(perron_frequencies(&fib), None);
    }
}

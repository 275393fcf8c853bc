//! The Springer morphism restricted to a maximal torus.
//!
//! For a representation with highest weight lambda and weight system
//! Lambda_lambda, the restriction of the Springer morphism to the torus is
//! determined by the linear system
//!
//! ```text
//!   sum_mu mu_i e^mu  =  sum_j S_ij(lambda) c_j,
//!   S_ij(lambda)      =  sum_mu mu_i mu_j
//! ```
//!
//! where both sums run over the weights of the representation with
//! multiplicity and c_j are the coefficients of the morphism in the basis of
//! simple coroots. The matrix S(lambda) also has a closed form: it is
//! (x/2) S, with S the symmetrization of the Cartan matrix and
//! x = sum_mu mu_j^2 for any long simple root j. Both routes are computed
//! here and checked against each other before any system is solved.
//!
//! Coefficients are first produced symbolically as formal sums of characters
//! e^mu with rational coefficients, then evaluated at torus points with
//! complex coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::exact_linear::{frac, Rational, RationalMatrix, RationalVectorSpace};
use crate::repweights::{freudenthal, WeightMultiset};
use crate::rootsystem::{Family, RootSystemData, Weight};
use crate::weyl::orbit;

/// A finite formal sum of characters `e^mu` with rational coefficients.
///
/// Zero coefficients are never stored, and terms are kept in lexicographic
/// weight order, so equal sums compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterCombo {
    terms: BTreeMap<Weight, Rational>,
}

impl CharacterCombo {
    pub fn zero() -> Self {
        CharacterCombo {
            terms: BTreeMap::new(),
        }
    }

    /// Adds `c * e^mu` to the sum, dropping the term if it cancels.
    pub fn add_term(&mut self, mu: Weight, c: &Rational) {
        if RationalVectorSpace::is_zero(c) {
            return;
        }
        let entry = self.terms.entry(mu);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let next = o.get() + c;
                if RationalVectorSpace::is_zero(&next) {
                    o.remove();
                } else {
                    *o.get_mut() = next;
                }
            }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, Rational)>>(terms: I) -> Self {
        let mut combo = Self::zero();
        for (mu, c) in terms {
            combo.add_term(mu, &c);
        }
        combo
    }

    /// Coefficient of `e^mu`, zero when absent.
    pub fn coefficient(&self, mu: &Weight) -> Rational {
        self.terms
            .get(mu)
            .cloned()
            .unwrap_or_else(RationalVectorSpace::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl RationalVectorSpace for CharacterCombo {
    fn zero() -> Self {
        CharacterCombo::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), &(-c));
        }
        out
    }

    fn scale(&self, c: &Rational) -> Self {
        if RationalVectorSpace::is_zero(c) {
            return CharacterCombo::zero();
        }
        CharacterCombo {
            terms: self
                .terms
                .iter()
                .map(|(mu, v)| (mu.clone(), v * c))
                .collect(),
        }
    }
}

impl fmt::Display for CharacterCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mu, c)) in self.terms.iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} e^{}", c.abs(), mu)?;
        }
        Ok(())
    }
}

/// A point of the maximal torus, described by the values z_i = e^{omega_i}(t)
/// of the fundamental characters. Every coordinate must be nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusPoint {
    values: Vec<Complex64>,
}

impl TorusPoint {
    pub fn new(values: Vec<Complex64>) -> Result<Self, Error> {
        for (index, z) in values.iter().enumerate() {
            if z.re == 0.0 && z.im == 0.0 {
                return Err(Error::ZeroTorusCoordinate { index: index + 1 });
            }
        }
        Ok(TorusPoint { values })
    }

    /// The identity element of the torus: every coordinate is 1.
    pub fn identity(rank: usize) -> Self {
        TorusPoint {
            values: vec![Complex64::new(1.0, 0.0); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// Converts symplectic-group eigenvalues (t_1, ..., t_n) into fundamental
/// torus coordinates via z_i = t_1 t_2 ... t_i. This matches the C_n
/// realization where e^{omega_i} is the product of the first i eigenvalues.
pub fn torus_from_symplectic_eigenvalues(eigenvalues: &[Complex64]) -> Result<TorusPoint, Error> {
    let mut values = Vec::with_capacity(eigenvalues.len());
    let mut acc = Complex64::new(1.0, 0.0);
    for (index, t) in eigenvalues.iter().enumerate() {
        if t.re == 0.0 && t.im == 0.0 {
            return Err(Error::ZeroTorusCoordinate { index: index + 1 });
        }
        acc *= t;
        values.push(acc);
    }
    TorusPoint::new(values)
}

/// Numeric output of the Springer morphism at one torus point: the
/// coefficients c_i(t) of the simple coroots.
#[derive(Clone, Debug, PartialEq)]
pub struct SpringerResult {
    pub coefficients: Vec<Complex64>,
}

/// One expansion pass over the full weight system, producing the moment
/// combos sum_mu mu_i e^mu and the second moments sum_mu mu_i mu_j together.
fn expansion_sums(
    rs: &RootSystemData,
    wm: &WeightMultiset,
) -> (Vec<CharacterCombo>, Vec<Vec<BigInt>>) {
    let n = rs.rank();
    let mut combos = vec![CharacterCombo::zero(); n];
    let mut moments = vec![vec![BigInt::zero(); n]; n];
    for (w, mult) in &wm.dominant_mults {
        let mult_int = BigInt::from(mult.clone());
        for element in orbit(rs, w).elements {
            let coords = element.coords().to_vec();
            for i in 0..n {
                if coords[i] == 0 {
                    continue;
                }
                let weighted = &mult_int * BigInt::from(coords[i]);
                combos[i].add_term(
                    element.clone(),
                    &Rational::from_integer(weighted.clone()),
                );
                for j in i..n {
                    if coords[j] == 0 {
                        continue;
                    }
                    moments[i][j] += &weighted * BigInt::from(coords[j]);
                }
            }
        }
    }
    #[allow(clippy::needless_range_loop)] // cross-indexed symmetrization
    for i in 0..n {
        for j in 0..i {
            moments[i][j] = moments[j][i].clone();
        }
    }
    (combos, moments)
}

/// The moment vector of the representation: component i is
/// sum over weights (with multiplicity) of mu_i e^mu.
pub fn moment_vector(rs: &RootSystemData, wm: &WeightMultiset) -> Vec<CharacterCombo> {
    expansion_sums(rs, wm).0
}

/// The matrix S(lambda) computed directly from the weight system:
/// S_ij(lambda) = sum over weights (with multiplicity) of mu_i mu_j.
pub fn s_matrix_bruteforce(rs: &RootSystemData, wm: &WeightMultiset) -> RationalMatrix {
    moments_to_matrix(&expansion_sums(rs, wm).1)
}

fn moments_to_matrix(moments: &[Vec<BigInt>]) -> RationalMatrix {
    let mut out = RationalMatrix::zero(moments.len());
    for (i, row) in moments.iter().enumerate() {
        for (j, m) in row.iter().enumerate() {
            out.set(i, j, Rational::from_integer(m.clone()));
        }
    }
    out
}

fn x_from_moments(rs: &RootSystemData, moments: &[Vec<BigInt>]) -> Result<BigInt, Error> {
    let mut longs = rs.long_indices.iter();
    let first = *longs.next().expect("every type has a long simple root");
    let x = moments[first][first].clone();
    for &j in longs {
        if moments[j][j] != x {
            return Err(Error::Internal(format!(
                "sum of mu_j^2 differs between long simple roots {} and {}",
                first + 1,
                j + 1
            )));
        }
    }
    Ok(x)
}

/// The common value x(lambda) = sum over weights of mu_j^2, which is the
/// same for every long simple root j; the equality is verified across all
/// long indices before the value is returned.
pub fn x_long(rs: &RootSystemData, wm: &WeightMultiset) -> Result<Rational, Error> {
    let (_, moments) = expansion_sums(rs, wm);
    Ok(Rational::from_integer(x_from_moments(rs, &moments)?))
}

/// The closed form S(lambda) = (x(lambda) / 2) S, where S is the
/// symmetrization of the Cartan matrix.
pub fn s_matrix_closed(rs: &RootSystemData, wm: &WeightMultiset) -> Result<RationalMatrix, Error> {
    let x = x_long(rs, wm)?;
    Ok(rs.s_matrix.scale(&(x * frac(1, 2))))
}

/// Which structural identity governs the pair (i, j) of simple roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairClass {
    /// A_ij = 0: the second moment vanishes.
    Disconnected,
    /// Adjacent roots of equal length: equal diagonals and
    /// cross moment equal to minus half the diagonal.
    ConnectedEqualLength,
    /// Adjacent long/short pair outside G2: diagonals x and 2x,
    /// cross moment -x.
    ConnectedShortLong,
    /// The unique G2 pair: sum mu_1^2 = -2 sum mu_1 mu_2 = 3 sum mu_2^2.
    G2Exceptional,
}

impl PairClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PairClass::Disconnected => "disconnected",
            PairClass::ConnectedEqualLength => "connected-equal-length",
            PairClass::ConnectedShortLong => "connected-short-long",
            PairClass::G2Exceptional => "g2-exceptional",
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Second-moment identity check for one pair of simple roots (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub class: PairClass,
    pub sum_ii: BigInt,
    pub sum_ij: BigInt,
    pub sum_jj: BigInt,
    pub pass: bool,
}

/// Full identity report for one representation: the long-root value x, one
/// check per unordered pair of simple roots, and the overall verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub x: BigInt,
    pub long_diagonal_consistent: bool,
    pub pairs: Vec<PairCheck>,
    pub pass: bool,
}

/// Classifies every pair of simple roots and checks the second-moment
/// identity its class dictates. All comparisons are exact.
pub fn identity_report(rs: &RootSystemData, wm: &WeightMultiset) -> IdentityReport {
    let n = rs.rank();
    let (_, moments) = expansion_sums(rs, wm);
    let first_long = *rs
        .long_indices
        .iter()
        .next()
        .expect("every type has a long simple root");
    let x = moments[first_long][first_long].clone();
    let long_diagonal_consistent = rs
        .long_indices
        .iter()
        .all(|&j| moments[j][j] == x);

    let mut pairs = Vec::new();
    let mut pass = long_diagonal_consistent;
    for i in 0..n {
        for j in i + 1..n {
            let sum_ii = moments[i][i].clone();
            let sum_ij = moments[i][j].clone();
            let sum_jj = moments[j][j].clone();
            let (class, ok) = if rs.lie_type.family() == Family::G {
                // Indices 0 (short) and 1 (long) form the only pair.
                let ok = sum_ii == -BigInt::from(2) * &sum_ij
                    && sum_ii == BigInt::from(3) * &sum_jj;
                (PairClass::G2Exceptional, ok)
            } else if crate::exact_linear::RationalVectorSpace::is_zero(rs.cartan.get(i, j)) {
                (PairClass::Disconnected, sum_ij.is_zero())
            } else if rs.d_diag[i] == rs.d_diag[j] {
                let ok = sum_ii == sum_jj && BigInt::from(2) * &sum_ij == -&sum_ii;
                (PairClass::ConnectedEqualLength, ok)
            } else {
                // One long and one short simple root, adjacent, outside G2.
                let (long_diag, short_diag) = if rs.long_indices.contains(&i) {
                    (sum_ii.clone(), sum_jj.clone())
                } else {
                    (sum_jj.clone(), sum_ii.clone())
                };
                let ok = long_diag == x
                    && short_diag == BigInt::from(2) * &x
                    && sum_ij == -&x;
                (PairClass::ConnectedShortLong, ok)
            };
            pass &= ok;
            pairs.push(PairCheck {
                i,
                j,
                class,
                sum_ii,
                sum_ij,
                sum_jj,
                pass: ok,
            });
        }
    }

    IdentityReport {
        x,
        long_diagonal_consistent,
        pairs,
        pass,
    }
}

/// The symbolic coefficients c_i of the Springer morphism in the
/// simple-coroot basis: formal character sums obtained by solving
/// S(lambda) c = moment vector.
///
/// The trivial representation is rejected: its weight system carries no
/// torus information. Before solving, the closed form of S(lambda) is
/// checked against the brute-force matrix entry by entry.
pub fn coefficients(
    rs: &RootSystemData,
    wm: &WeightMultiset,
) -> Result<Vec<CharacterCombo>, Error> {
    if wm.highest.is_zero() {
        return Err(Error::NotAlmostFaithful);
    }
    let (combos, moments) = expansion_sums(rs, wm);
    let brute = moments_to_matrix(&moments);
    let x = x_from_moments(rs, &moments)?;
    let closed = rs
        .s_matrix
        .scale(&(Rational::from_integer(x) * frac(1, 2)));
    if brute != closed {
        return Err(Error::Internal(
            "closed form of S(lambda) disagrees with the brute-force matrix".to_string(),
        ));
    }
    match closed.solve(&combos) {
        Ok(solution) => Ok(solution),
        Err(Error::Singular) => Err(Error::NotAlmostFaithful),
        Err(other) => Err(other),
    }
}

/// Integer power of a complex number by repeated squaring; negative
/// exponents invert first.
fn complex_int_pow(z: Complex64, k: i64) -> Complex64 {
    if k == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut base = if k < 0 { Complex64::new(1.0, 0.0) / z } else { z };
    let mut exponent = k.unsigned_abs();
    let mut acc = Complex64::new(1.0, 0.0);
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    acc
}

/// Evaluates a formal character sum at a torus point:
/// e^mu(z) = prod_i z_i^{mu_i}.
pub fn evaluate(combo: &CharacterCombo, point: &TorusPoint) -> Result<Complex64, Error> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (mu, c) in combo.terms() {
        if mu.rank() != point.rank() {
            return Err(Error::RankMismatch {
                expected: point.rank(),
                found: mu.rank(),
            });
        }
        let mut value = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        for (&exp, &z) in mu.coords().iter().zip(point.values()) {
            if exp != 0 {
                value *= complex_int_pow(z, exp);
            }
        }
        acc += value;
    }
    Ok(acc)
}

/// End-to-end evaluation: weight system, symbolic coefficients, and their
/// values at the given torus point.
pub fn springer_torus(
    rs: &RootSystemData,
    lambda: &Weight,
    point: &TorusPoint,
) -> Result<SpringerResult, Error> {
    if point.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            found: point.rank(),
        });
    }
    let wm = freudenthal(rs, lambda)?;
    let combos = coefficients(rs, &wm)?;
    let mut values = Vec::with_capacity(combos.len());
    for combo in &combos {
        values.push(evaluate(combo, point)?);
    }
    Ok(SpringerResult {
        coefficients: values,
    })
}

/// Multiplicity-weighted dimension check helper shared by tests: the total
/// dimension of a multiset equals the sum of orbit sizes times
/// multiplicities, which is recomputed here from scratch.
pub fn dimension_from_orbits(rs: &RootSystemData, wm: &WeightMultiset) -> BigUint {
    let mut total = BigUint::zero();
    for (w, mult) in &wm.dominant_mults {
        total += mult * BigUint::from(orbit(rs, w).len());
    }
    total
}

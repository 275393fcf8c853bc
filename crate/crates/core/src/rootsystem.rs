//! Root system data for the simple Lie types.
//!
//! Each [`RootSystemData`] is built from the Dynkin diagram alone: the chain
//! (or branched) adjacency of the family plus the squared lengths of its
//! simple roots, normalized so long roots have squared length 2. From those
//! two ingredients it derives the symmetrized matrix S, the Cartan matrix
//! A = D S, the Gram matrix of fundamental weights, and the positive roots.
//!
//! Weights are always written in the basis of fundamental weights, so a
//! weight is just an integer coordinate vector of length `rank`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::exact_linear::{frac, rat, Rational, RationalMatrix};

/// The seven families of simple root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownFamily {
                found: other.to_string(),
            }),
        }
    }
}

/// A validated (family, rank) pair naming a simple root system.
///
/// Valid ranks: A requires rank >= 1, B and C require rank >= 2, D requires
/// rank >= 4 (lower ranks duplicate other types or are not simple), E is
/// 6..=8, F is exactly 4, and G is exactly 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if valid {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
///
/// Ordering is lexicographic on the coordinates, which fixes the canonical
/// order used for orbits, weight listings, and formal character sums.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The i-th fundamental weight (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Immutable root system data for one simple type.
pub struct RootSystemData {
    pub lie_type: LieType,
    /// Cartan matrix A with A_ij = (alpha_i, alpha_j) / d_j.
    pub cartan: RationalMatrix,
    /// d_i = (alpha_i, alpha_i) / 2, so long roots have d_i = 1.
    pub d_diag: Vec<Rational>,
    /// Symmetrization S with S_ij = (alpha_i, alpha_j) / (d_i d_j); then
    /// A = diag(d) * S exactly.
    pub s_matrix: RationalMatrix,
    /// Gram matrix of the fundamental weights, equal to S^{-1}.
    pub gram: RationalMatrix,
    /// Positive roots in fundamental-weight coordinates, sorted by height
    /// and then lexicographically.
    pub positive_roots: Vec<Weight>,
    /// Half the sum of positive roots: all fundamental coordinates are 1.
    pub rho: Weight,
    /// 0-based indices of the long simple roots.
    pub long_indices: BTreeSet<usize>,
    /// Cartan rows as plain integers; row i is alpha_i in fundamental
    /// coordinates.
    pub(crate) cartan_rows: Vec<Vec<i64>>,
    /// gram scaled to integers: gram_num[i][j] = gram[i][j] * gram_den.
    pub(crate) gram_num: Vec<Vec<i128>>,
    pub(crate) gram_den: i128,
}

impl RootSystemData {
    /// Validates the (family, rank) pair and builds the full data set.
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        Ok(Self::build(LieType::new(family, rank)?))
    }

    /// Builds the data set for an already-validated type.
    pub fn build(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        let d_diag = squared_half_norms(lie_type);
        let edges = dynkin_edges(lie_type);

        let mut s_matrix = RationalMatrix::zero(n);
        for (i, d) in d_diag.iter().enumerate() {
            s_matrix.set(i, i, rat(2) / d);
        }
        for &(i, j) in &edges {
            let longer = d_diag[i].clone().max(d_diag[j].clone());
            let value = -longer / (&d_diag[i] * &d_diag[j]);
            s_matrix.set(i, j, value.clone());
            s_matrix.set(j, i, value);
        }

        let cartan = RationalMatrix::diagonal(&d_diag)
            .mat_mul(&s_matrix)
            .expect("dimensions agree by construction");
        let cartan_rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                cartan
                    .row(i)
                    .iter()
                    .map(|e| {
                        assert!(e.is_integer(), "Cartan entries are integers");
                        e.to_integer().to_i64().expect("small integer")
                    })
                    .collect()
            })
            .collect();

        let gram = s_matrix
            .mat_inverse()
            .expect("the symmetrization of a Cartan matrix is invertible");
        let mut gram_den = BigInt::one();
        for i in 0..n {
            for j in 0..n {
                gram_den = gram_den.lcm(gram.get(i, j).denom());
            }
        }
        let gram_den = gram_den.to_i128().expect("small denominator");
        let den = Rational::from_integer(BigInt::from(gram_den));
        let gram_num: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (gram.get(i, j) * &den)
                            .to_integer()
                            .to_i128()
                            .expect("scaled Gram entry fits in i128")
                    })
                    .collect()
            })
            .collect();

        let positive_roots = positive_roots_by_closure(&cartan_rows);
        let long_indices: BTreeSet<usize> = (0..n).filter(|&i| d_diag[i].is_one()).collect();
        let rho = Weight::new(vec![1; n]);

        RootSystemData {
            lie_type,
            cartan,
            d_diag,
            s_matrix,
            gram,
            positive_roots,
            rho,
            long_indices,
            cartan_rows,
            gram_num,
            gram_den,
        }
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// The simple root alpha_i in fundamental coordinates (row i of the
    /// Cartan matrix), 0-based.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.cartan_rows[i].clone())
    }

    /// 0-based indices of the long simple roots.
    pub fn long_root_indices(&self) -> &BTreeSet<usize> {
        &self.long_indices
    }

    /// The invariant inner product of two weights, using the Gram matrix of
    /// fundamental weights.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<Rational, Error> {
        let n = self.rank();
        if a.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: a.rank(),
            });
        }
        if b.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: b.rank(),
            });
        }
        let num = self.ip_num(a.coords(), b.coords());
        Ok(Rational::new(BigInt::from(num), BigInt::from(self.gram_den)))
    }

    /// Inner product scaled by `gram_den`, as a plain integer. Internal fast
    /// path for the recursion-heavy weight computations.
    pub(crate) fn ip_num(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut acc: i128 = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.gram_num[i];
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc += (ai as i128) * (bj as i128) * row[j];
            }
        }
        acc
    }
}

/// d_i = (alpha_i, alpha_i)/2 for each simple root, with long roots
/// normalized to d = 1. Short roots get 1/2 in types B, C, F and 1/3 in G2.
fn squared_half_norms(lie_type: LieType) -> Vec<Rational> {
    let n = lie_type.rank();
    match lie_type.family() {
        Family::A | Family::D | Family::E => vec![rat(1); n],
        Family::B => {
            let mut d = vec![rat(1); n];
            d[n - 1] = frac(1, 2);
            d
        }
        Family::C => {
            let mut d = vec![frac(1, 2); n];
            d[n - 1] = rat(1);
            d
        }
        Family::F => vec![rat(1), rat(1), frac(1, 2), frac(1, 2)],
        Family::G => vec![frac(1, 3), rat(1)],
    }
}

/// Edges of the Dynkin diagram, 0-based, following the Bourbaki numbering.
fn dynkin_edges(lie_type: LieType) -> Vec<(usize, usize)> {
    let n = lie_type.rank();
    match lie_type.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            (0..n - 1).map(|i| (i, i + 1)).collect()
        }
        Family::D => {
            // Chain over nodes 0..n-2, with both n-2 and n-1 attached to n-3.
            let mut edges: Vec<(usize, usize)> = (0..n - 3).map(|i| (i, i + 1)).collect();
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
            edges
        }
        Family::E => {
            // Chain 1-3-4-5-6(-7-8) in 1-based labels, with node 2 attached
            // to node 4.
            let chain: Vec<usize> = std::iter::once(0).chain(2..n).collect();
            let mut edges: Vec<(usize, usize)> =
                chain.windows(2).map(|w| (w[0], w[1])).collect();
            edges.push((1, 3));
            edges
        }
    }
}

/// All positive roots, generated by closing the simple roots under simple
/// reflections and keeping the results whose simple-root coordinates stay
/// nonnegative. Every positive root is reachable this way.
fn positive_roots_by_closure(cartan_rows: &[Vec<i64>]) -> Vec<Weight> {
    let n = cartan_rows.len();
    // fundamental coordinates -> simple-root coordinates
    let mut seen: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut root_coords = vec![0i64; n];
        root_coords[i] = 1;
        seen.insert(cartan_rows[i].clone(), root_coords);
        queue.push_back(cartan_rows[i].clone());
    }
    while let Some(fund) = queue.pop_front() {
        let root = seen[&fund].clone();
        for j in 0..n {
            let c = fund[j];
            if c == 0 {
                continue;
            }
            let reflected_fund: Vec<i64> = fund
                .iter()
                .zip(&cartan_rows[j])
                .map(|(v, a)| v - c * a)
                .collect();
            let mut reflected_root = root.clone();
            reflected_root[j] -= c;
            if reflected_root.iter().any(|&k| k < 0) {
                continue;
            }
            if !seen.contains_key(&reflected_fund) {
                seen.insert(reflected_fund.clone(), reflected_root);
                queue.push_back(reflected_fund);
            }
        }
    }
    let mut roots: Vec<(i64, Vec<i64>)> = seen
        .into_iter()
        .map(|(fund, root)| (root.iter().sum::<i64>(), fund))
        .collect();
    roots.sort();
    roots
        .into_iter()
        .map(|(_, fund)| Weight::new(fund))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(family: Family, rank: usize) -> RootSystemData {
        RootSystemData::new(family, rank).unwrap()
    }

    #[test]
    fn rank_validation_per_family() {
        assert!(LieType::new(Family::A, 1).is_ok());
        assert!(LieType::new(Family::B, 2).is_ok());
        assert!(LieType::new(Family::C, 2).is_ok());
        assert!(LieType::new(Family::D, 4).is_ok());
        assert!(LieType::new(Family::E, 6).is_ok());
        assert!(LieType::new(Family::E, 8).is_ok());
        assert!(LieType::new(Family::F, 4).is_ok());
        assert!(LieType::new(Family::G, 2).is_ok());

        for (family, rank) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 2),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 1),
            (Family::G, 3),
        ] {
            assert_eq!(
                LieType::new(family, rank),
                Err(Error::InvalidRank { family, rank }),
                "{family}{rank} must be rejected"
            );
        }
    }

    #[test]
    fn family_letters_round_trip() {
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            assert_eq!(family.to_string().parse::<Family>().unwrap(), family);
        }
        assert!("H".parse::<Family>().is_err());
    }

    #[test]
    fn cartan_matrices_match_the_standard_tables() {
        let a2 = build(Family::A, 2);
        assert_eq!(
            a2.cartan,
            RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-1, 2]])
        );

        let b2 = build(Family::B, 2);
        assert_eq!(
            b2.cartan,
            RationalMatrix::from_integer_rows(&[vec![2, -2], vec![-1, 2]])
        );

        let c2 = build(Family::C, 2);
        assert_eq!(
            c2.cartan,
            RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-2, 2]])
        );

        let g2 = build(Family::G, 2);
        assert_eq!(
            g2.cartan,
            RationalMatrix::from_integer_rows(&[vec![2, -1], vec![-3, 2]])
        );

        let f4 = build(Family::F, 4);
        assert_eq!(
            f4.cartan,
            RationalMatrix::from_integer_rows(&[
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ])
        );

        let d4 = build(Family::D, 4);
        assert_eq!(
            d4.cartan,
            RationalMatrix::from_integer_rows(&[
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, -1],
                vec![0, -1, 2, 0],
                vec![0, -1, 0, 2],
            ])
        );
    }

    #[test]
    fn symmetrization_factors_the_cartan_matrix() {
        for (family, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 5),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let rs = build(family, rank);
            let product = RationalMatrix::diagonal(&rs.d_diag)
                .mat_mul(&rs.s_matrix)
                .unwrap();
            assert_eq!(product, rs.cartan, "{family}{rank}");
            assert!(rs.s_matrix.is_symmetric(), "{family}{rank}");
            assert!(
                rs.s_matrix.is_positive_definite().unwrap(),
                "{family}{rank}"
            );
        }
    }

    #[test]
    fn g2_symmetrization_and_gram_match_known_values() {
        let g2 = build(Family::G, 2);
        assert_eq!(
            g2.s_matrix,
            RationalMatrix::from_integer_rows(&[vec![6, -3], vec![-3, 2]])
        );
        let expected_gram =
            RationalMatrix::from_rows(vec![vec![frac(2, 3), rat(1)], vec![rat(1), rat(2)]])
                .unwrap();
        assert_eq!(g2.gram, expected_gram);
    }

    #[test]
    fn simply_laced_types_have_s_equal_to_cartan() {
        for (family, rank) in [(Family::A, 4), (Family::D, 4), (Family::E, 6)] {
            let rs = build(family, rank);
            assert_eq!(rs.s_matrix, rs.cartan, "{family}{rank}");
        }
    }

    #[test]
    fn positive_root_counts_match_the_classical_formulas() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 5, 15),
            (Family::B, 2, 4),
            (Family::B, 4, 16),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ];
        for (family, rank, count) in cases {
            let rs = build(family, rank);
            assert_eq!(rs.positive_roots.len(), count, "{family}{rank}");
        }
    }

    #[test]
    fn a2_positive_roots_are_the_two_simples_and_their_sum() {
        let a2 = build(Family::A, 2);
        let expected = vec![
            Weight::new(vec![-1, 2]),
            Weight::new(vec![2, -1]),
            Weight::new(vec![1, 1]),
        ];
        assert_eq!(a2.positive_roots, expected);
    }

    #[test]
    fn long_root_indices_per_family() {
        let b3 = build(Family::B, 3);
        assert_eq!(
            b3.long_root_indices().iter().copied().collect::<Vec<_>>(),
            vec![0, 1]
        );
        let c3 = build(Family::C, 3);
        assert_eq!(
            c3.long_root_indices().iter().copied().collect::<Vec<_>>(),
            vec![2]
        );
        let g2 = build(Family::G, 2);
        assert_eq!(
            g2.long_root_indices().iter().copied().collect::<Vec<_>>(),
            vec![1]
        );
        let f4 = build(Family::F, 4);
        assert_eq!(
            f4.long_root_indices().iter().copied().collect::<Vec<_>>(),
            vec![0, 1]
        );
        let a3 = build(Family::A, 3);
        assert_eq!(
            a3.long_root_indices().iter().copied().collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn inner_products_match_hand_computations() {
        let a1 = build(Family::A, 1);
        let omega = Weight::new(vec![1]);
        assert_eq!(a1.inner_product(&omega, &omega).unwrap(), frac(1, 2));

        let g2 = build(Family::G, 2);
        let alpha1 = g2.simple_root(0);
        assert_eq!(g2.inner_product(&alpha1, &alpha1).unwrap(), frac(2, 3));
        let alpha2 = g2.simple_root(1);
        assert_eq!(g2.inner_product(&alpha2, &alpha2).unwrap(), rat(2));
    }

    #[test]
    fn simple_roots_pair_integrally_with_fundamental_weights() {
        // (omega_j, alpha_i) = delta_ij * d_i is the defining duality.
        for (family, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let rs = build(family, rank);
            for i in 0..rank {
                let alpha = rs.simple_root(i);
                for j in 0..rank {
                    let omega = Weight::fundamental(rank, j);
                    let expected = if i == j {
                        rs.d_diag[i].clone()
                    } else {
                        rat(0)
                    };
                    assert_eq!(
                        rs.inner_product(&omega, &alpha).unwrap(),
                        expected,
                        "{family}{rank} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn inner_product_rejects_rank_mismatch() {
        let a2 = build(Family::A, 2);
        let bad = Weight::new(vec![1]);
        let good = Weight::new(vec![1, 0]);
        assert_eq!(
            a2.inner_product(&bad, &good),
            Err(Error::RankMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn rho_has_unit_coordinates() {
        let rs = build(Family::E, 6);
        assert_eq!(rs.rho, Weight::new(vec![1; 6]));
    }

    #[test]
    fn weight_display_and_order() {
        let w = Weight::new(vec![1, 0, -2]);
        assert_eq!(w.to_string(), "(1,0,-2)");
        assert!(Weight::new(vec![-1, 5]) < Weight::new(vec![0, 0]));
        assert!(Weight::new(vec![0, -1]) < Weight::new(vec![0, 0]));
    }
}

//! Weight systems of irreducible highest-weight representations.
//!
//! The weight support of V_lambda is generated by walking root strings down
//! from the highest weight; multiplicities then come from Freudenthal's
//! recursion, evaluated over dominant weights in order of increasing level
//! (depth below lambda measured in simple-root steps). All arithmetic is
//! exact: inner products use the Gram matrix scaled to a common integer
//! denominator, which cancels in the recursion's quotient, and every
//! division is checked to be exact.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::rootsystem::{LieType, RootSystemData, Weight};
use crate::weyl::{coords_dominant, is_dominant, orbit, to_dominant_coords};

/// The weight system of one irreducible representation: multiplicities are
/// stored on dominant weights only, since they are Weyl-invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    pub lie_type: LieType,
    pub highest: Weight,
    pub dominant_mults: BTreeMap<Weight, BigUint>,
    pub total_dim: BigUint,
}

impl WeightMultiset {
    /// Multiplicity of an arbitrary weight, via its dominant representative.
    pub fn multiplicity(&self, rs: &RootSystemData, mu: &Weight) -> BigUint {
        let dom = Weight::new(to_dominant_coords(rs, mu.coords()));
        self.dominant_mults
            .get(&dom)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}

fn require_dominant(rs: &RootSystemData, lambda: &Weight) -> Result<(), Error> {
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    if !is_dominant(lambda) {
        return Err(Error::NonDominant {
            weight: lambda.clone(),
        });
    }
    Ok(())
}

/// The full weight support of V_lambda with the level (number of simple-root
/// steps below lambda) of each weight.
///
/// From each known weight nu and each direction i with nu_i > 0, the string
/// nu - alpha_i, ..., nu - nu_i alpha_i down to s_i(nu) lies in the support;
/// closing under this rule from lambda generates the entire support.
pub(crate) fn weight_support(rs: &RootSystemData, lambda: &Weight) -> HashMap<Vec<i64>, u32> {
    let n = rs.rank();
    let mut levels: HashMap<Vec<i64>, u32> = HashMap::new();
    let mut stack: Vec<Vec<i64>> = Vec::new();
    levels.insert(lambda.coords().to_vec(), 0);
    stack.push(lambda.coords().to_vec());
    while let Some(coords) = stack.pop() {
        let level = levels[&coords];
        for i in 0..n {
            let reach = coords[i];
            if reach <= 0 {
                continue;
            }
            let mut current = coords.clone();
            for k in 1..=reach {
                for (c, a) in current.iter_mut().zip(&rs.cartan_rows[i]) {
                    *c -= a;
                }
                let entry = levels.entry(current.clone());
                if let std::collections::hash_map::Entry::Vacant(v) = entry {
                    v.insert(level + k as u32);
                    stack.push(current.clone());
                }
            }
        }
    }
    levels
}

/// Dominant weights mu with lambda - mu a nonnegative sum of simple roots
/// and mu in the support of V_lambda, ordered by increasing level and then
/// lexicographically. The first entry is always lambda itself.
pub fn dominant_weights_below(
    rs: &RootSystemData,
    lambda: &Weight,
) -> Result<Vec<Weight>, Error> {
    require_dominant(rs, lambda)?;
    Ok(dominant_levels(rs, lambda)
        .into_iter()
        .map(|(coords, _)| Weight::new(coords))
        .collect())
}

fn dominant_levels(rs: &RootSystemData, lambda: &Weight) -> Vec<(Vec<i64>, u32)> {
    let support = weight_support(rs, lambda);
    let mut dominants: Vec<(Vec<i64>, u32)> = support
        .into_iter()
        .filter(|(coords, _)| coords_dominant(coords))
        .collect();
    dominants.sort_by(|(ca, la), (cb, lb)| la.cmp(lb).then_with(|| ca.cmp(cb)));
    dominants
}

/// Exact dimension of V_lambda by the Weyl dimension formula
/// dim = prod over positive roots of (lambda + rho, alpha) / (rho, alpha).
pub fn weyl_dimension(rs: &RootSystemData, lambda: &Weight) -> Result<BigUint, Error> {
    require_dominant(rs, lambda)?;
    let lambda_rho: Vec<i64> = lambda
        .coords()
        .iter()
        .zip(rs.rho.coords())
        .map(|(a, b)| a + b)
        .collect();
    let rho = rs.rho.coords();
    let mut numer = BigInt::from(1);
    let mut denom = BigInt::from(1);
    for alpha in &rs.positive_roots {
        // The common Gram denominator cancels between the two products.
        numer *= BigInt::from(rs.ip_num(&lambda_rho, alpha.coords()));
        denom *= BigInt::from(rs.ip_num(rho, alpha.coords()));
    }
    let (quotient, remainder) = numer.div_rem(&denom);
    if !remainder.is_zero() || !quotient.is_positive() {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lambda} is not a positive integer"
        )));
    }
    Ok(quotient
        .to_biguint()
        .expect("positive integer converts to BigUint"))
}

/// Weight multiplicities of V_lambda by Freudenthal's recursion.
///
/// Dominant weights are processed by increasing level; every weight mu + k
/// alpha appearing on the right-hand side is strictly closer to lambda, so
/// the multiplicity of its dominant representative is already known.
pub fn freudenthal(rs: &RootSystemData, lambda: &Weight) -> Result<WeightMultiset, Error> {
    require_dominant(rs, lambda)?;
    let support = weight_support(rs, lambda);
    let mut dominants: Vec<(Vec<i64>, u32)> = support
        .iter()
        .filter(|(coords, _)| coords_dominant(coords))
        .map(|(coords, &level)| (coords.clone(), level))
        .collect();
    dominants.sort_by(|(ca, la), (cb, lb)| la.cmp(lb).then_with(|| ca.cmp(cb)));

    let rho = rs.rho.coords();
    let lambda_rho: Vec<i64> = lambda
        .coords()
        .iter()
        .zip(rho)
        .map(|(a, b)| a + b)
        .collect();
    let norm_lambda_rho = rs.ip_num(&lambda_rho, &lambda_rho);

    let mut dominant_mults: BTreeMap<Weight, BigUint> = BTreeMap::new();
    for (coords, _) in &dominants {
        let mu = Weight::new(coords.clone());
        if coords == lambda.coords() {
            dominant_mults.insert(mu, BigUint::from(1u32));
            continue;
        }
        let mu_rho: Vec<i64> = coords.iter().zip(rho).map(|(a, b)| a + b).collect();
        let denominator = norm_lambda_rho - rs.ip_num(&mu_rho, &mu_rho);
        if denominator <= 0 {
            return Err(Error::Internal(format!(
                "Freudenthal denominator at {mu} is not positive"
            )));
        }
        let mut sum = BigInt::zero();
        for alpha in &rs.positive_roots {
            let alpha_coords = alpha.coords();
            let ip_mu_alpha = rs.ip_num(coords, alpha_coords);
            let ip_alpha_alpha = rs.ip_num(alpha_coords, alpha_coords);
            let mut shifted = coords.clone();
            let mut k: i128 = 0;
            loop {
                k += 1;
                for (c, a) in shifted.iter_mut().zip(alpha_coords) {
                    *c += a;
                }
                if !support.contains_key(&shifted) {
                    break;
                }
                let dom = Weight::new(to_dominant_coords(rs, &shifted));
                let mult = dominant_mults.get(&dom).ok_or_else(|| {
                    Error::Internal(format!(
                        "multiplicity of {dom} needed before it was computed"
                    ))
                })?;
                let pairing = ip_mu_alpha + k * ip_alpha_alpha;
                sum += BigInt::from(pairing) * BigInt::from(mult.clone());
            }
        }
        let numerator = sum * BigInt::from(2);
        let (quotient, remainder) = numerator.div_rem(&BigInt::from(denominator));
        if !remainder.is_zero() || !quotient.is_positive() {
            return Err(Error::Internal(format!(
                "Freudenthal multiplicity at {mu} is not a positive integer"
            )));
        }
        dominant_mults.insert(
            mu,
            quotient
                .to_biguint()
                .expect("positive integer converts to BigUint"),
        );
    }

    let mut total_dim = BigUint::zero();
    for (w, mult) in &dominant_mults {
        let orbit_size = orbit(rs, w).len();
        total_dim += mult * BigUint::from(orbit_size);
    }

    Ok(WeightMultiset {
        lie_type: rs.lie_type,
        highest: lambda.clone(),
        dominant_mults,
        total_dim,
    })
}

/// Flattens a weight multiset into (weight, multiplicity) pairs over the
/// full support, sorted lexicographically by weight.
pub fn expand(rs: &RootSystemData, wm: &WeightMultiset) -> Vec<(Weight, BigUint)> {
    let mut out: Vec<(Weight, BigUint)> = Vec::new();
    for (w, mult) in &wm.dominant_mults {
        for element in orbit(rs, w).elements {
            out.push((element, mult.clone()));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.cmp(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;
    use num_traits::ToPrimitive;

    fn build(family: Family, rank: usize) -> RootSystemData {
        RootSystemData::new(family, rank).unwrap()
    }

    fn weight(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    fn mults(pairs: &[(&[i64], u32)]) -> BTreeMap<Weight, BigUint> {
        pairs
            .iter()
            .map(|(coords, m)| (weight(coords), BigUint::from(*m)))
            .collect()
    }

    #[test]
    fn c3_vector_representation_weights() {
        let c3 = build(Family::C, 3);
        let lambda = weight(&[1, 0, 0]);
        assert_eq!(dominant_weights_below(&c3, &lambda).unwrap(), vec![lambda.clone()]);
        let wm = freudenthal(&c3, &lambda).unwrap();
        assert_eq!(wm.dominant_mults, mults(&[(&[1, 0, 0], 1)]));
        assert_eq!(wm.total_dim, BigUint::from(6u32));
        assert_eq!(weyl_dimension(&c3, &lambda).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn a2_adjoint_representation_weights() {
        let a2 = build(Family::A, 2);
        let lambda = a2.rho.clone();
        assert_eq!(
            dominant_weights_below(&a2, &lambda).unwrap(),
            vec![weight(&[1, 1]), weight(&[0, 0])]
        );
        let wm = freudenthal(&a2, &lambda).unwrap();
        assert_eq!(wm.dominant_mults, mults(&[(&[1, 1], 1), (&[0, 0], 2)]));
        assert_eq!(wm.total_dim, BigUint::from(8u32));
        assert_eq!(weyl_dimension(&a2, &lambda).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn g2_seven_dimensional_representation_weights() {
        let g2 = build(Family::G, 2);
        let lambda = weight(&[1, 0]);
        let wm = freudenthal(&g2, &lambda).unwrap();
        assert_eq!(wm.dominant_mults, mults(&[(&[1, 0], 1), (&[0, 0], 1)]));
        assert_eq!(wm.total_dim, BigUint::from(7u32));
        assert_eq!(weyl_dimension(&g2, &lambda).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn g2_adjoint_representation_weights() {
        let g2 = build(Family::G, 2);
        let lambda = weight(&[0, 1]);
        let wm = freudenthal(&g2, &lambda).unwrap();
        assert_eq!(wm.dominant_mults, mults(&[(&[0, 1], 1), (&[1, 0], 1), (&[0, 0], 2)]));
        assert_eq!(wm.total_dim, BigUint::from(14u32));
        assert_eq!(weyl_dimension(&g2, &lambda).unwrap(), BigUint::from(14u32));
    }

    #[test]
    fn f4_smallest_fundamental_representation_has_dimension_26() {
        let f4 = build(Family::F, 4);
        let lambda = weight(&[0, 0, 0, 1]);
        let wm = freudenthal(&f4, &lambda).unwrap();
        assert_eq!(
            wm.dominant_mults,
            mults(&[(&[0, 0, 0, 1], 1), (&[0, 0, 0, 0], 2)])
        );
        assert_eq!(wm.total_dim, BigUint::from(26u32));
        assert_eq!(weyl_dimension(&f4, &lambda).unwrap(), BigUint::from(26u32));
    }

    #[test]
    fn zero_highest_weight_gives_the_trivial_representation() {
        let b2 = build(Family::B, 2);
        let lambda = Weight::zero(2);
        let wm = freudenthal(&b2, &lambda).unwrap();
        assert_eq!(wm.dominant_mults, mults(&[(&[0, 0], 1)]));
        assert_eq!(wm.total_dim, BigUint::from(1u32));
        assert_eq!(weyl_dimension(&b2, &lambda).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn non_dominant_highest_weight_is_rejected() {
        let a2 = build(Family::A, 2);
        let bad = weight(&[1, -1]);
        assert!(matches!(
            freudenthal(&a2, &bad),
            Err(Error::NonDominant { .. })
        ));
        assert!(matches!(
            weyl_dimension(&a2, &bad),
            Err(Error::NonDominant { .. })
        ));
        assert!(matches!(
            dominant_weights_below(&a2, &bad),
            Err(Error::NonDominant { .. })
        ));
    }

    #[test]
    fn expand_lists_the_full_support_in_lexicographic_order() {
        let a1 = build(Family::A, 1);
        let wm = freudenthal(&a1, &weight(&[2])).unwrap();
        let expanded = expand(&a1, &wm);
        let expected: Vec<(Weight, BigUint)> = vec![
            (weight(&[-2]), BigUint::from(1u32)),
            (weight(&[0]), BigUint::from(1u32)),
            (weight(&[2]), BigUint::from(1u32)),
        ];
        assert_eq!(expanded, expected);
    }

    #[test]
    fn multiplicity_lookup_uses_the_dominant_representative() {
        let a2 = build(Family::A, 2);
        let wm = freudenthal(&a2, &a2.rho).unwrap();
        // (2,-1) is the reflection of rho at the second node, so it carries
        // multiplicity 1; (3,3) is outside the support.
        assert_eq!(wm.multiplicity(&a2, &weight(&[2, -1])), BigUint::from(1u32));
        assert_eq!(wm.multiplicity(&a2, &weight(&[0, 0])), BigUint::from(2u32));
        assert_eq!(wm.multiplicity(&a2, &weight(&[3, 3])), BigUint::zero());
    }

    #[test]
    fn dominant_weights_below_matches_cone_enumeration() {
        // Oracle: mu is a dominant weight of V_lambda exactly when mu is
        // dominant and lambda - mu is a nonnegative integer combination of
        // simple roots. All weights of V_lambda lie between the highest and
        // lowest weight, so the root coordinates of lambda - mu are bounded
        // by those of lambda minus the lowest weight; enumerate that box.
        for (family, rank, lambda) in [
            (Family::A, 2, vec![2, 2]),
            (Family::B, 2, vec![1, 2]),
            (Family::C, 3, vec![1, 1, 0]),
            (Family::G, 2, vec![1, 1]),
        ] {
            let rs = build(family, rank);
            let lambda = Weight::new(lambda);
            let computed = dominant_weights_below(&rs, &lambda).unwrap();

            // The lowest weight of V_lambda is minus the dominant
            // representative of -lambda.
            let dual = crate::weyl::to_dominant(&rs, &lambda.neg());
            let bounds = root_coordinates(&rs, &lambda.add(&dual));
            let mut expected: Vec<(u32, Weight)> = Vec::new();
            let mut ks = vec![0i64; rank];
            'odometer: loop {
                let mut coords = lambda.coords().to_vec();
                for (k, row) in ks.iter().zip(&rs.cartan_rows) {
                    for (c, a) in coords.iter_mut().zip(row) {
                        *c -= k * a;
                    }
                }
                if coords_dominant(&coords) {
                    let level = ks.iter().sum::<i64>() as u32;
                    expected.push((level, Weight::new(coords)));
                }
                let mut idx = 0;
                loop {
                    if idx == rank {
                        break 'odometer;
                    }
                    ks[idx] += 1;
                    if ks[idx] <= bounds[idx] {
                        break;
                    }
                    ks[idx] = 0;
                    idx += 1;
                }
            }
            expected.sort();
            let expected: Vec<Weight> = expected.into_iter().map(|(_, w)| w).collect();
            assert_eq!(computed, expected, "{family}{rank} lambda={lambda}");
        }
    }

    /// Coordinates of a weight in the simple-root basis, by exact solve
    /// against the transposed Cartan matrix. Panics unless they are
    /// nonnegative integers.
    fn root_coordinates(rs: &RootSystemData, w: &Weight) -> Vec<i64> {
        use crate::exact_linear::{rat, RationalMatrix};
        let n = rs.rank();
        let mut transpose = RationalMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                transpose.set(i, j, rat(rs.cartan_rows[j][i]));
            }
        }
        let rhs: Vec<_> = w.coords().iter().map(|&c| rat(c)).collect();
        transpose
            .solve(&rhs)
            .unwrap()
            .into_iter()
            .map(|k| {
                assert!(k.is_integer() && k >= rat(0));
                k.to_integer().to_i64().unwrap()
            })
            .collect()
    }
}

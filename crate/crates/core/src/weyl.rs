//! Weyl group actions on weights: simple reflections, dominance, and orbits.
//!
//! In fundamental-weight coordinates the simple reflection s_i subtracts
//! mu_i times the i-th Cartan row, so everything here is integer arithmetic.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::rootsystem::{RootSystemData, Weight};

pub(crate) fn reflect_coords(rs: &RootSystemData, i: usize, coords: &[i64]) -> Vec<i64> {
    let c = coords[i];
    coords
        .iter()
        .zip(&rs.cartan_rows[i])
        .map(|(v, a)| v - c * a)
        .collect()
}

/// Applies the simple reflection s_i (0-based) to a weight.
pub fn simple_reflection(rs: &RootSystemData, i: usize, mu: &Weight) -> Result<Weight, Error> {
    let n = rs.rank();
    if i >= n {
        return Err(Error::ReflectionIndexOutOfRange { index: i, rank: n });
    }
    if mu.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: mu.rank(),
        });
    }
    Ok(Weight::new(reflect_coords(rs, i, mu.coords())))
}

/// A weight is dominant when all its fundamental coordinates are nonnegative.
pub fn is_dominant(mu: &Weight) -> bool {
    mu.coords().iter().all(|&c| c >= 0)
}

pub(crate) fn coords_dominant(coords: &[i64]) -> bool {
    coords.iter().all(|&c| c >= 0)
}

pub(crate) fn to_dominant_coords(rs: &RootSystemData, coords: &[i64]) -> Vec<i64> {
    let mut current = coords.to_vec();
    loop {
        match current.iter().position(|&c| c < 0) {
            None => return current,
            Some(i) => current = reflect_coords(rs, i, &current),
        }
    }
}

/// The unique dominant representative of the Weyl orbit of `mu`, found by
/// repeatedly reflecting at the smallest-index negative coordinate. Each
/// reflection raises the weight in the dominance order, so this terminates.
pub fn to_dominant(rs: &RootSystemData, mu: &Weight) -> Weight {
    assert_eq!(mu.rank(), rs.rank(), "weight rank must match the root system");
    Weight::new(to_dominant_coords(rs, mu.coords()))
}

/// A full Weyl orbit, stored in canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylOrbit {
    /// The unique dominant weight in the orbit.
    pub representative: Weight,
    /// All orbit elements, sorted lexicographically.
    pub elements: Vec<Weight>,
}

impl WeylOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, mu: &Weight) -> bool {
        self.elements.binary_search(mu).is_ok()
    }
}

/// Materializes the Weyl orbit of `mu` by closing under simple reflections.
pub fn orbit(rs: &RootSystemData, mu: &Weight) -> WeylOrbit {
    assert_eq!(mu.rank(), rs.rank(), "weight rank must match the root system");
    let n = rs.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = vec![mu.coords().to_vec()];
    seen.insert(mu.coords().to_vec());
    while let Some(coords) = stack.pop() {
        for i in 0..n {
            if coords[i] == 0 {
                continue;
            }
            let reflected = reflect_coords(rs, i, &coords);
            if seen.insert(reflected.clone()) {
                stack.push(reflected);
            }
        }
    }
    let elements: Vec<Weight> = seen.into_iter().map(Weight::new).collect();
    let mut dominants = elements.iter().filter(|w| is_dominant(w));
    let representative = dominants
        .next()
        .expect("every orbit contains a dominant weight")
        .clone();
    debug_assert!(
        dominants.next().is_none(),
        "an orbit contains exactly one dominant weight"
    );
    WeylOrbit {
        representative,
        elements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;

    fn build(family: Family, rank: usize) -> RootSystemData {
        RootSystemData::new(family, rank).unwrap()
    }

    #[test]
    fn a1_reflection_negates_the_coordinate() {
        let a1 = build(Family::A, 1);
        let w = Weight::new(vec![3]);
        assert_eq!(
            simple_reflection(&a1, 0, &w).unwrap(),
            Weight::new(vec![-3])
        );
    }

    #[test]
    fn g2_second_reflection_matches_the_closed_form() {
        // s_2(mu) = (mu_1 + 3 mu_2, -mu_2)
        let g2 = build(Family::G, 2);
        for (m1, m2) in [(1, 0), (0, 1), (2, -3), (-1, 4)] {
            let w = Weight::new(vec![m1, m2]);
            assert_eq!(
                simple_reflection(&g2, 1, &w).unwrap(),
                Weight::new(vec![m1 + 3 * m2, -m2])
            );
        }
    }

    #[test]
    fn reflection_index_out_of_range_is_rejected() {
        let a2 = build(Family::A, 2);
        let w = Weight::new(vec![1, 0]);
        assert_eq!(
            simple_reflection(&a2, 2, &w),
            Err(Error::ReflectionIndexOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn dominance_is_coordinatewise_nonnegativity() {
        assert!(is_dominant(&Weight::new(vec![0, 2, 1])));
        assert!(!is_dominant(&Weight::new(vec![0, -1, 3])));
    }

    #[test]
    fn c2_orbit_of_first_fundamental_weight() {
        let c2 = build(Family::C, 2);
        let orbit = orbit(&c2, &Weight::new(vec![1, 0]));
        let expected = vec![
            Weight::new(vec![-1, 0]),
            Weight::new(vec![-1, 1]),
            Weight::new(vec![1, -1]),
            Weight::new(vec![1, 0]),
        ];
        assert_eq!(orbit.elements, expected);
        assert_eq!(orbit.representative, Weight::new(vec![1, 0]));
    }

    #[test]
    fn g2_orbit_of_first_fundamental_weight_has_six_elements() {
        let g2 = build(Family::G, 2);
        let orbit = orbit(&g2, &Weight::new(vec![1, 0]));
        assert_eq!(orbit.len(), 6);
        assert!(orbit.contains(&Weight::new(vec![-1, 0])));
        assert!(orbit.contains(&Weight::new(vec![2, -1])));
        assert!(!orbit.contains(&Weight::new(vec![0, 0])));
    }

    #[test]
    fn orbit_of_zero_is_a_fixed_point() {
        let b3 = build(Family::B, 3);
        let orbit = orbit(&b3, &Weight::zero(3));
        assert_eq!(orbit.elements, vec![Weight::zero(3)]);
    }

    #[test]
    fn to_dominant_lands_on_the_orbit_representative() {
        let d4 = build(Family::D, 4);
        let mu = Weight::new(vec![-2, 1, 0, -1]);
        let dom = to_dominant(&d4, &mu);
        assert!(is_dominant(&dom));
        let orb = orbit(&d4, &mu);
        assert_eq!(dom, orb.representative);
        assert!(orb.contains(&mu));
    }

    #[test]
    fn a2_weyl_group_has_order_six() {
        let a2 = build(Family::A, 2);
        let orb = orbit(&a2, &a2.rho);
        assert_eq!(orb.len(), 6);
    }
}

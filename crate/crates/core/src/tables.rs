//! Closed-form inverses of Cartan matrices and their symmetrizations.
//!
//! These are classical tables, kept here as independent oracles: the rest of
//! the crate computes inverses by elimination, and checks against these
//! fixed formulas both in tests and in the CLI verification command. For the
//! simply laced types the Cartan matrix equals its symmetrization, so one
//! table serves both roles.

use crate::exact_linear::{frac, rat, Rational, RationalMatrix};
use crate::rootsystem::Family;

/// Inverse Cartan matrix of A_n:
/// entry (i, j) is min(i, j) (n + 1 - max(i, j)) / (n + 1), 1-based.
pub fn cartan_inverse_a(rank: usize) -> RationalMatrix {
    let n = rank as i64;
    build(rank, |i, j| {
        frac(i.min(j) * (n + 1 - i.max(j)), n + 1)
    })
}

/// Inverse Cartan matrix of D_n (n >= 4): min(i, j) on the chain block,
/// i/2 in the spin columns, and the corner block
/// [[n/4, (n-2)/4], [(n-2)/4, n/4]].
pub fn cartan_inverse_d(rank: usize) -> RationalMatrix {
    assert!(rank >= 4);
    let n = rank as i64;
    build(rank, |i, j| {
        let (lo, hi) = (i.min(j), i.max(j));
        if hi <= n - 2 {
            rat(lo)
        } else if lo <= n - 2 {
            frac(lo, 2)
        } else if i == j {
            frac(n, 4)
        } else {
            frac(n - 2, 4)
        }
    })
}

/// Inverse Cartan matrix of E6.
pub fn cartan_inverse_e6() -> RationalMatrix {
    from_thirds(&[
        vec![4, 3, 5, 6, 4, 2],
        vec![3, 6, 6, 9, 6, 3],
        vec![5, 6, 10, 12, 8, 4],
        vec![6, 9, 12, 18, 12, 6],
        vec![4, 6, 8, 12, 10, 5],
        vec![2, 3, 4, 6, 5, 4],
    ])
}

/// Inverse Cartan matrix of E8.
pub fn cartan_inverse_e8() -> RationalMatrix {
    RationalMatrix::from_integer_rows(&[
        vec![4, 5, 7, 10, 8, 6, 4, 2],
        vec![5, 8, 10, 15, 12, 9, 6, 3],
        vec![7, 10, 14, 20, 16, 12, 8, 4],
        vec![10, 15, 20, 30, 24, 18, 12, 6],
        vec![8, 12, 16, 24, 20, 15, 10, 5],
        vec![6, 9, 12, 18, 15, 12, 8, 4],
        vec![4, 6, 8, 12, 10, 8, 6, 3],
        vec![2, 3, 4, 6, 5, 4, 3, 2],
    ])
}

/// Inverse of the symmetrized Cartan matrix of B_n: min(i, j) for
/// i, j <= n-1, then i/2 along the last column and row, and n/4 in the
/// corner.
pub fn s_inverse_b(rank: usize) -> RationalMatrix {
    let n = rank as i64;
    build(rank, |i, j| {
        let (lo, hi) = (i.min(j), i.max(j));
        if hi < n {
            rat(lo)
        } else if lo < n {
            frac(lo, 2)
        } else {
            frac(n, 4)
        }
    })
}

/// Inverse of the symmetrized Cartan matrix of C_n: entry (i, j) is
/// min(i, j)/2.
pub fn s_inverse_c(rank: usize) -> RationalMatrix {
    build(rank, |i, j| frac(i.min(j), 2))
}

/// Inverse of the symmetrized Cartan matrix of G2.
pub fn s_inverse_g2() -> RationalMatrix {
    RationalMatrix::from_rows(vec![
        vec![frac(2, 3), rat(1)],
        vec![rat(1), rat(2)],
    ])
    .expect("square")
}

/// Inverse of the symmetrized Cartan matrix of F4.
pub fn s_inverse_f4() -> RationalMatrix {
    RationalMatrix::from_rows(vec![
        vec![rat(2), rat(3), rat(2), rat(1)],
        vec![rat(3), rat(6), rat(4), rat(2)],
        vec![rat(2), rat(4), rat(3), frac(3, 2)],
        vec![rat(1), rat(2), frac(3, 2), rat(1)],
    ])
    .expect("square")
}

/// Closed-form inverse of the symmetrized Cartan matrix, when a table
/// exists for the type. E7 has no entry here; its computed inverse is
/// validated through the product identity instead.
pub fn s_inverse(family: Family, rank: usize) -> Option<RationalMatrix> {
    match family {
        Family::A => Some(cartan_inverse_a(rank)),
        Family::B => Some(s_inverse_b(rank)),
        Family::C => Some(s_inverse_c(rank)),
        Family::D => Some(cartan_inverse_d(rank)),
        Family::E => match rank {
            6 => Some(cartan_inverse_e6()),
            8 => Some(cartan_inverse_e8()),
            _ => None,
        },
        Family::F => Some(s_inverse_f4()),
        Family::G => Some(s_inverse_g2()),
    }
}

fn build(rank: usize, entry: impl Fn(i64, i64) -> Rational) -> RationalMatrix {
    let mut m = RationalMatrix::zero(rank);
    for i in 0..rank {
        for j in 0..rank {
            m.set(i, j, entry(i as i64 + 1, j as i64 + 1));
        }
    }
    m
}

fn from_thirds(numerators: &[Vec<i64>]) -> RationalMatrix {
    let rows = numerators
        .iter()
        .map(|row| row.iter().map(|&v| frac(v, 3)).collect())
        .collect();
    RationalMatrix::from_rows(rows).expect("square")
}

//! The identity suite behind `springer verify`.
//!
//! For every selected (type, lambda) pair the suite recomputes everything
//! it checks from scratch: the brute-force S(lambda) against the closed
//! form, the long-root independence of x, the pairwise sum identities
//! (disconnected, equal length, short-long, and the exceptional G2
//! relation), the two dimension formulas, and the exactness of the solved
//! coroot coefficients. Per type, the stored inverse of S is checked
//! against the reference tables where one is available, and against the
//! defining product identity always.

use springer_core::tables;
use springer_core::{
    coefficients, freudenthal, identity_report, moment_vector, s_matrix_bruteforce,
    s_matrix_closed, weyl_dimension, Family, LieType, RationalMatrix, RootSystemData, Weight,
};

pub struct CheckRow {
    pub lie_type: LieType,
    pub lambda: Option<Weight>,
    pub identity: String,
    pub pass: bool,
}

#[derive(Clone, Copy)]
pub struct WeightSelection {
    pub fundamental: bool,
    pub rho: bool,
}

impl WeightSelection {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut sel = WeightSelection {
            fundamental: false,
            rho: false,
        };
        for part in text.split(',') {
            match part.trim() {
                "fundamental" => sel.fundamental = true,
                "rho" => sel.rho = true,
                other => return Err(format!("unknown weight set '{other}'")),
            }
        }
        Ok(sel)
    }

    fn weights(&self, rank: usize) -> Vec<Weight> {
        let mut out = Vec::new();
        if self.fundamental {
            out.extend((0..rank).map(|i| Weight::fundamental(rank, i)));
        }
        if self.rho && (rank > 1 || !self.fundamental) {
            out.push(Weight::new(vec![1; rank]));
        }
        out
    }
}

/// Every valid simple type with rank at most `max_rank`.
pub fn grid_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for family in [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ] {
        for rank in 1..=max_rank {
            if let Ok(lt) = LieType::new(family, rank) {
                out.push(lt);
            }
        }
    }
    out
}

pub fn run_checks(types: &[LieType], selection: WeightSelection) -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for &lt in types {
        let rs = RootSystemData::new(lt.family(), lt.rank()).expect("validated type");
        type_checks(&rs, &mut rows);
        for lambda in selection.weights(lt.rank()) {
            weight_checks(&rs, &lambda, &mut rows);
        }
    }
    rows
}

fn type_checks(rs: &RootSystemData, rows: &mut Vec<CheckRow>) {
    let lt = rs.lie_type;
    let product = rs
        .gram
        .mat_mul(&rs.s_matrix)
        .map(|p| p == RationalMatrix::identity(rs.rank()))
        .unwrap_or(false);
    rows.push(CheckRow {
        lie_type: lt,
        lambda: None,
        identity: "inverse of S times S is the identity".to_string(),
        pass: product,
    });
    if let Some(table) = tables::s_inverse(lt.family(), lt.rank()) {
        rows.push(CheckRow {
            lie_type: lt,
            lambda: None,
            identity: "inverse of S matches the reference table".to_string(),
            pass: rs.gram == table,
        });
    }
}

fn weight_checks(rs: &RootSystemData, lambda: &Weight, rows: &mut Vec<CheckRow>) {
    let lt = rs.lie_type;
    let row = |lambda: &Weight, identity: String, pass: bool| CheckRow {
        lie_type: lt,
        lambda: Some(lambda.clone()),
        identity,
        pass,
    };

    let wm = match freudenthal(rs, lambda) {
        Ok(wm) => wm,
        Err(_) => {
            rows.push(row(
                lambda,
                "weight system computes".to_string(),
                false,
            ));
            return;
        }
    };

    let dims_agree = weyl_dimension(rs, lambda)
        .map(|d| d == wm.total_dim)
        .unwrap_or(false);
    rows.push(row(
        lambda,
        "Freudenthal and Weyl dimension formulas agree".to_string(),
        dims_agree,
    ));

    let brute = s_matrix_bruteforce(rs, &wm);
    let closed_ok = s_matrix_closed(rs, &wm)
        .map(|closed| closed == brute)
        .unwrap_or(false);
    rows.push(row(
        lambda,
        "closed form of S(lambda) equals the brute-force matrix".to_string(),
        closed_ok,
    ));

    let report = identity_report(rs, &wm);
    rows.push(row(
        lambda,
        "x agrees across all long simple roots".to_string(),
        report.long_diagonal_consistent,
    ));
    for pair in &report.pairs {
        rows.push(row(
            lambda,
            format!("pair ({},{}) {}", pair.i + 1, pair.j + 1, pair.class),
            pair.pass,
        ));
    }

    let solves = coefficients(rs, &wm)
        .and_then(|combos| {
            s_matrix_closed(rs, &wm)
                .and_then(|closed| closed.apply(&combos))
                .map(|applied| applied == moment_vector(rs, &wm))
        })
        .unwrap_or(false);
    rows.push(row(
        lambda,
        "coroot coefficients solve the moment system exactly".to_string(),
        solves,
    ));
}

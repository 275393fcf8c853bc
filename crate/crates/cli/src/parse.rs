//! Parsing of the comma-separated weight and torus arguments.
//!
//! Complex literals follow a deliberately small grammar: `a`, `bi`, `a+bi`
//! or `a-bi`, where the components are decimal floats (scientific notation
//! included). A bare `i` or `-i` stands for a unit imaginary part.

use num_complex::Complex64;

pub fn weight_coords(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<i64>()
                .map_err(|_| format!("invalid weight coordinate '{part}'"))
        })
        .collect()
}

pub fn complex_list(text: &str) -> Result<Vec<Complex64>, String> {
    text.split(',').map(complex_literal).collect()
}

pub fn complex_literal(text: &str) -> Result<Complex64, String> {
    let s = text.trim();
    let err = || format!("invalid complex literal '{s}'");
    if s.is_empty() {
        return Err(err());
    }

    // The last sign that is neither leading nor part of an exponent splits
    // the real part from the imaginary part.
    let mut split = None;
    let mut prev = None;
    for (pos, c) in s.char_indices() {
        if pos > 0 && (c == '+' || c == '-') && !matches!(prev, Some('e' | 'E')) {
            split = Some(pos);
        }
        prev = Some(c);
    }

    match split {
        None => match s.strip_suffix(['i', 'I']) {
            Some(body) => Ok(Complex64::new(0.0, parse_signed_part(body).ok_or_else(err)?)),
            None => Ok(Complex64::new(s.parse().map_err(|_| err())?, 0.0)),
        },
        Some(pos) => {
            let re: f64 = s[..pos].parse().map_err(|_| err())?;
            let body = s[pos..].strip_suffix(['i', 'I']).ok_or_else(err)?;
            Ok(Complex64::new(re, parse_signed_part(body).ok_or_else(err)?))
        }
    }
}

fn parse_signed_part(body: &str) -> Option<f64> {
    match body {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => body.parse().ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(z: Complex64, re: f64, im: f64) -> bool {
        (z.re - re).abs() < 1e-12 && (z.im - im).abs() < 1e-12
    }

    #[test]
    fn literals_cover_the_grammar() {
        assert!(close(complex_literal("2").unwrap(), 2.0, 0.0));
        assert!(close(complex_literal("-3.5").unwrap(), -3.5, 0.0));
        assert!(close(complex_literal("2i").unwrap(), 0.0, 2.0));
        assert!(close(complex_literal("-0.5i").unwrap(), 0.0, -0.5));
        assert!(close(complex_literal("i").unwrap(), 0.0, 1.0));
        assert!(close(complex_literal("-i").unwrap(), 0.0, -1.0));
        assert!(close(complex_literal("1+2i").unwrap(), 1.0, 2.0));
        assert!(close(complex_literal("1-2i").unwrap(), 1.0, -2.0));
        assert!(close(complex_literal("-1.5+0.25i").unwrap(), -1.5, 0.25));
        assert!(close(complex_literal("1e-3-2e2i").unwrap(), 0.001, -200.0));
        assert!(close(complex_literal("3+i").unwrap(), 3.0, 1.0));
        assert!(close(complex_literal("3-i").unwrap(), 3.0, -1.0));
    }

    #[test]
    fn malformed_literals_are_rejected() {
        for bad in ["", "1+2", "1+2j", "i2", "1++2i", "2i+1", "abc", "\u{3c0}+2i"] {
            assert!(complex_literal(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn lists_split_on_commas() {
        let values = complex_list("2,3").unwrap();
        assert_eq!(values.len(), 2);
        assert!(close(values[0], 2.0, 0.0));
        assert!(close(values[1], 3.0, 0.0));
        assert!(complex_list("1+2i,").is_err());
    }

    #[test]
    fn weight_lists_parse_integers() {
        assert_eq!(weight_coords("1,0,-2").unwrap(), vec![1, 0, -2]);
        assert!(weight_coords("1,x").is_err());
        assert!(weight_coords("").is_err());
    }
}

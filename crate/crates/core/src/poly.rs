//! Dense univariate integer polynomials, cyclotomic polynomials and a parser
//! for factored ASCII forms such as `(t^3+1)^2(t+1)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer polynomial in `t`, coefficients in ascending degree order, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    /// `t^k + c`.
    pub fn binomial(k: usize, c: i64) -> Self {
        let mut v = vec![0; k + 1];
        v[k] += 1;
        v[0] += c;
        IntPoly::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `deg 0 = 0` by convention.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) - other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        IntPoly::new(v)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        IntPoly::new(v)
    }

    /// Division by a monic polynomial. Returns `(quotient, remainder)`.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert_eq!(divisor.leading(), 1, "divisor must be monic");
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            quot[k] = c;
            if c != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= c * b;
                }
            }
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Multiplicity of each cyclotomic factor `Phi_m`, found by trial division
    /// for `m <= max_m`. Returns `None` if a non-cyclotomic cofactor remains.
    pub fn cyclotomic_factorization(&self, max_m: u32) -> Option<BTreeMap<u32, u32>> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        for m in 1..=max_m {
            if rest.degree() == 0 {
                break;
            }
            let phi = cyclotomic(m);
            if phi.degree() > rest.degree() {
                continue;
            }
            loop {
                let (q, r) = rest.divrem_monic(&phi);
                if !r.is_zero() {
                    break;
                }
                *out.entry(m).or_insert(0) += 1;
                rest = q;
            }
        }
        (rest == IntPoly::one()).then_some(out)
    }
}

/// The `m`-th cyclotomic polynomial, by dividing `t^m - 1` by `Phi_d` for proper divisors `d`.
pub fn cyclotomic(m: u32) -> IntPoly {
    assert!(m >= 1);
    let mut p = IntPoly::binomial(m as usize, -1);
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = p.divrem_monic(&cyclotomic(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Renders a cyclotomic factorization as `Phi2^3*Phi4^2`.
pub fn format_cyclotomic(factors: &BTreeMap<u32, u32>) -> String {
    factors
        .iter()
        .map(|(m, e)| {
            if *e == 1 {
                format!("Phi{m}")
            } else {
                format!("Phi{m}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Parses a product of polynomials in `t`: `(t^3+1)(t^3+1)(t+1)`, `(t^2+1)^2(t+1)`,
/// or a single bare polynomial like `t^4 + 1`. Whitespace and `*` between factors are ignored.
pub fn parse_factored(input: &str) -> Result<IntPoly> {
    let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::config("empty polynomial"));
    }
    if !s.contains(&'(') {
        return parse_sum(&s, input);
    }
    let mut pos = 0;
    let mut acc = IntPoly::one();
    while pos < s.len() {
        if s[pos] == '*' {
            pos += 1;
            continue;
        }
        if s[pos] != '(' {
            return Err(Error::config(format!(
                "expected '(' at offset {pos} in {input:?}"
            )));
        }
        let close = s[pos..]
            .iter()
            .position(|&c| c == ')')
            .map(|p| p + pos)
            .ok_or_else(|| Error::config(format!("unbalanced parentheses in {input:?}")))?;
        let factor: String = s[pos + 1..close].iter().collect();
        let inner = parse_sum(&s[pos + 1..close], &factor).map_err(|e| {
            Error::config(format!(
                "in {input:?}: {}",
                e.to_string().trim_start_matches("configuration error: ")
            ))
        })?;
        pos = close + 1;
        let mut exp = 1u32;
        if pos < s.len() && s[pos] == '^' {
            let (e, next) = parse_uint(&s, pos + 1, input)?;
            exp = e as u32;
            pos = next;
        }
        acc = acc.mul(&inner.pow(exp));
    }
    Ok(acc)
}

fn parse_uint(s: &[char], start: usize, input: &str) -> Result<(u64, usize)> {
    let mut end = start;
    while end < s.len() && s[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return Err(Error::config(format!(
            "missing exponent or coefficient at offset {start} in {input:?}"
        )));
    }
    let text: String = s[start..end].iter().collect();
    let v = text
        .parse()
        .map_err(|_| Error::config(format!("number too large in {input:?}")))?;
    Ok((v, end))
}

fn parse_sum(s: &[char], input: &str) -> Result<IntPoly> {
    if s.is_empty() {
        return Err(Error::config(format!("empty factor in {input:?}")));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut pos = 0;
    while pos < s.len() {
        let mut sign = 1i64;
        if s[pos] == '+' || s[pos] == '-' {
            if s[pos] == '-' {
                sign = -1;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(Error::config(format!(
                "expected '+' or '-' at offset {pos} in {input:?}"
            )));
        }
        let mut coef = 1i64;
        let mut have_coef = false;
        if pos < s.len() && s[pos].is_ascii_digit() {
            let (c, next) = parse_uint(s, pos, input)?;
            coef = c as i64;
            have_coef = true;
            pos = next;
            if pos < s.len() && s[pos] == '*' {
                pos += 1;
            }
        }
        let mut deg = 0usize;
        if pos < s.len() && (s[pos] == 't' || s[pos] == 'x') {
            pos += 1;
            deg = 1;
            if pos < s.len() && s[pos] == '^' {
                let (e, next) = parse_uint(s, pos + 1, input)?;
                deg = e as usize;
                pos = next;
            }
        } else if !have_coef {
            return Err(Error::config(format!(
                "malformed term at offset {pos} in {input:?}"
            )));
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += sign * coef;
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic(1).coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic(2).coeffs(), &[1, 1]);
        assert_eq!(cyclotomic(4).coeffs(), &[1, 0, 1]);
        assert_eq!(cyclotomic(6).coeffs(), &[1, -1, 1]);
        assert_eq!(cyclotomic(12).coeffs(), &[1, 0, -1, 0, 1]);
        // Phi_9 = t^6 + t^3 + 1, Phi_18 = t^6 - t^3 + 1
        assert_eq!(cyclotomic(9).coeffs(), &[1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic(18).coeffs(), &[1, 0, 0, -1, 0, 0, 1]);
    }

    #[test]
    fn product_of_cyclotomics_is_t_pow_minus_one() {
        for m in 1..=30u32 {
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(IntPoly::one(), |acc, d| acc.mul(&cyclotomic(d)));
            assert_eq!(prod, IntPoly::binomial(m as usize, -1), "m = {m}");
        }
    }

    #[test]
    fn factor_t_pow_plus_one() {
        // t^6 + 1 = Phi_4 Phi_12
        let f = IntPoly::binomial(6, 1)
            .cyclotomic_factorization(60)
            .unwrap();
        assert_eq!(f.into_iter().collect::<Vec<_>>(), vec![(4, 1), (12, 1)]);
        assert!(IntPoly::new(vec![2, 0, 1])
            .cyclotomic_factorization(60)
            .is_none());
    }

    #[test]
    fn parse_factored_forms() {
        let p = parse_factored("(t^3+1)(t^3+1)(t+1)").unwrap();
        assert_eq!(
            p,
            IntPoly::binomial(3, 1).pow(2).mul(&IntPoly::binomial(1, 1))
        );
        assert_eq!(parse_factored("(t^6+1)(t+1)").unwrap().degree(), 7);
        assert_eq!(parse_factored("(t^3 + 1)^2 (t+1)").unwrap(), p);
        assert_eq!(parse_factored("t^2 - t + 1").unwrap(), cyclotomic(6));
        assert_eq!(parse_factored("t^4+2t^2+1").unwrap(), cyclotomic(4).pow(2));
    }

    #[test]
    fn parse_rejects_missing_exponent() {
        assert!(parse_factored("(t^3+1)(t^3+1)(t^+1)").is_err());
        assert!(parse_factored("(t+1").is_err());
        assert!(parse_factored("").is_err());
    }

    #[test]
    fn display_roundtrips_through_parser() {
        let p = parse_factored("(t^2-t+1)(t+1)^3").unwrap();
        assert_eq!(parse_factored(&p.to_string()).unwrap(), p);
    }
}

//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first and kept trimmed, so the zero
//! polynomial is the empty vector. These helpers back the number-field
//! arithmetic, the irreducibility test for minimal polynomials and the
//! rational-root search used on characteristic polynomials.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Rational = BigRational;

pub fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x + y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let neg: Vec<Rational> = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn make_monic(p: &mut [Rational]) {
    if let Some(lead) = p.last().cloned() {
        for c in p.iter_mut() {
            *c = &*c / &lead;
        }
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

/// Inverse of `a` modulo `m`, when `a` and `m` are coprime.
pub fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut inv: Vec<Rational> = s0.into_iter().map(|x| x / &c).collect();
    let (_, rem) = div_rem(&inv, m);
    inv = rem;
    Some(inv)
}

pub fn derivative(p: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Scales `p` to a primitive integer polynomial with positive leading coefficient.
pub fn primitive_integer(p: &[Rational]) -> Vec<BigInt> {
    let den = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &den).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

/// Positive divisors of a nonzero integer, by trial division.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots with multiplicity; returns them together with the
/// remaining factor that has no rational root.
pub fn rational_roots(p: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rest = p.to_vec();
    trim(&mut rest);
    let mut roots = Vec::new();
    // roots at zero first, so the trailing coefficient becomes nonzero
    while rest.len() > 1 && rest[0].is_zero() {
        rest.remove(0);
        roots.push(Rational::zero());
    }
    loop {
        if rest.len() <= 1 {
            break;
        }
        let ints = primitive_integer(&rest);
        let lead = ints.last().unwrap().clone();
        let constant = ints[0].clone();
        let mut found = None;
        'search: for q in divisors(&lead) {
            for num in divisors(&constant) {
                for sign in [1, -1] {
                    let cand = Rational::new(&num * BigInt::from(sign), q.clone());
                    if eval(&rest, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                let (q, _) = div_rem(&rest, &[-r.clone(), Rational::one()]);
                rest = q;
                roots.push(r);
            }
            None => break,
        }
    }
    (roots, rest)
}

/// Rational square root, if one exists.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

fn lagrange(points: &[(BigInt, BigInt)]) -> Option<Vec<Rational>> {
    let mut out: Vec<Rational> = Vec::new();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = mul(&basis, &[Rational::from_integer(-xj.clone()), Rational::one()]);
            denom *= Rational::from_integer(xi - xj);
        }
        let scale = Rational::from_integer(yi.clone()) / denom;
        let term: Vec<Rational> = basis.into_iter().map(|c| c * &scale).collect();
        out = add(&out, &term);
    }
    if out.iter().all(|c| c.is_integer()) {
        Some(out)
    } else {
        None
    }
}

/// Irreducibility over the rationals via Kronecker's method.
///
/// Searches for factors of every degree up to half the degree, so the cost
/// grows quickly; callers cap the degree.
pub fn is_irreducible(p: &[Rational]) -> bool {
    let mut p = p.to_vec();
    trim(&mut p);
    let n = match degree(&p) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let (roots, _) = rational_roots(&p);
    if !roots.is_empty() {
        return false;
    }
    if n <= 3 {
        return true;
    }
    let ints = primitive_integer(&p);
    let as_rat: Vec<Rational> = ints.iter().cloned().map(Rational::from_integer).collect();
    for k in 2..=n / 2 {
        // k + 1 sample points; none are roots since p has no rational roots
        let xs: Vec<BigInt> = (0..=k as i64)
            .map(|i| BigInt::from(if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }))
            .collect();
        let values: Vec<BigInt> = xs
            .iter()
            .map(|x| eval(&as_rat, &Rational::from_integer(x.clone())).to_integer())
            .collect();
        let choices: Vec<Vec<BigInt>> = values
            .iter()
            .map(|v| {
                divisors(v)
                    .into_iter()
                    .flat_map(|d| [d.clone(), -d])
                    .collect()
            })
            .collect();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let pts: Vec<(BigInt, BigInt)> = xs
                .iter()
                .zip(idx.iter().zip(choices.iter()))
                .map(|(x, (&i, c))| (x.clone(), c[i].clone()))
                .collect();
            if let Some(cand) = lagrange(&pts) {
                if degree(&cand) == Some(k) {
                    let (_, r) = div_rem(&as_rat, &cand);
                    if r.is_empty() {
                        return false;
                    }
                }
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (x-1)^2 (x+2) (2x-1) = 2x^4 - x^3 - 6x^2 + 7x - 2
        let p = q(&[-2, 7, -6, -1, 2]);
        let (mut roots, rest) = rational_roots(&p);
        roots.sort();
        assert_eq!(rest.len(), 1);
        let expected: Vec<Rational> = vec![
            Rational::from_integer((-2).into()),
            Rational::new(1.into(), 2.into()),
            Rational::from_integer(1.into()),
            Rational::from_integer(1.into()),
        ];
        assert_eq!(roots, expected);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&q(&[-2, 0, 1])));
        assert!(is_irreducible(&q(&[1, 1, 1])));
        assert!(!is_irreducible(&q(&[-1, 0, 1])));
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2), no rational roots
        assert!(!is_irreducible(&q(&[4, 0, 0, 0, 1])));
        // (x^2 - 2)(x^2 - 3)
        assert!(!is_irreducible(&q(&[6, 0, -5, 0, 1])));
        assert!(is_irreducible(&q(&[1, 0, 0, 0, 1])));
        // (x^3 - 2)(x^3 - 3)
        assert!(!is_irreducible(&q(&[6, 0, 0, -5, 0, 0, 1])));
    }

    #[test]
    fn inverse_in_quotient() {
        let m = q(&[-2, 0, 1]);
        let a = q(&[1, 1]); // 1 + t
        let inv = inverse_mod(&a, &m).unwrap();
        let (_, r) = div_rem(&mul(&a, &inv), &m);
        assert_eq!(r, q(&[1]));
    }
}

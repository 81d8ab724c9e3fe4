//! Dense polynomials over a prime field, coefficients stored low degree first.
//!
//! Only what modulus selection and table construction need: reduction,
//! multiplication, gcd and modular exponentiation.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let factor = r[dr] * lead_inv % p;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// `base^exp mod m`.
pub(crate) fn pow_rem(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Poly {
    let mut acc = vec![1];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        exp >>= 1;
    }
    acc
}

/// Irreducibility over F_p: `f` of degree k has no factor of degree d <= k/2
/// exactly when gcd(f, x^(p^d) - x) = 1 for every such d.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let k = f.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut frob = x.clone();
    for _ in 1..=k / 2 {
        frob = pow_rem(&frob, p, &f, p);
        let g = gcd(&f, &sub(&frob, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibility() {
        // x^2 + 1 over F_3 is irreducible, over F_5 it is not.
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // x^3 + 2x + 1 over F_3
        assert!(is_irreducible(&[1, 2, 0, 1], 3));
        assert!(!is_irreducible(&[0, 0, 0, 1], 3));
        // (x^2+1)^2 over F_3 has no roots but is reducible
        let sq = mul(&[1, 0, 1], &[1, 0, 1], 3);
        assert!(!is_irreducible(&sq, 3));
    }

    #[test]
    fn remainder_and_gcd() {
        let a = mul(&[1, 1], &[2, 0, 1], 5);
        assert!(rem(&a, &[1, 1], 5).is_empty());
        assert_eq!(gcd(&a, &[1, 1], 5), vec![1, 1]);
    }
}

//! Exact arithmetic in F_{p^k} for odd p.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_0 + c_1 t + ...` is its coordinate vector in the power basis of a
//! root `t` of the modulus. Multiplication goes through discrete log tables,
//! so a [`FieldCtx`] is built once and shared behind an `Arc`.
//!
//! The modulus is the smallest monic irreducible polynomial of degree `k`
//! when monic polynomials `t^k + c_{k-1} t^{k-1} + ... + c_0` are ordered by
//! the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` (that is, lexicographically
//! on `(c_{k-1}, ..., c_0)`). For `k = 1` this is `t`, so the field is the
//! prime field itself.

mod matrix;
mod poly;

use std::fmt;
use std::sync::Arc;

pub use matrix::{Echelon, Matrix};

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
const MAX_ORDER: u64 = 1 << 20;
/// Largest order for which a full addition table is kept.
const ADD_TABLE_ORDER: u32 = 256;

/// An element of some F_{p^k}; arithmetic is done through its [`FieldCtx`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The integer encoding `sum c_i p^i`; also the canonical sort key.
    pub fn index(self) -> u32 {
        self.0
    }
}

/// A finite field F_{p^k} with precomputed log/exp tables. Immutable.
pub struct FieldCtx {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} (modulus {:?})", self.p, self.k, self.modulus)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for FieldCtx {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    /// Builds F_{p^k}. Rejects `p = 2`, composite `p` and `k < 1`.
    pub fn new(p: u32, k: i64) -> Result<Arc<FieldCtx>> {
        if p == 2 || !is_prime(p as u64) {
            return Err(Error::BadCharacteristic(p));
        }
        if k < 1 {
            return Err(Error::BadDegree(k));
        }
        let k = k as u32;
        let order = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge(order));
        }
        let q = order as u32;
        let modulus = smallest_irreducible(p, k);
        let (exp, log) = build_log_tables(p, k, q, &modulus);
        let mut ctx = FieldCtx {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            neg: Vec::new(),
            add: None,
        };
        ctx.neg = (0..q).map(|a| ctx.digit_neg(a)).collect();
        if q <= ADD_TABLE_ORDER {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = ctx.digit_add(a, b);
                }
            }
            ctx.add = Some(table);
        }
        Ok(Arc::new(ctx))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order `p^k`.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients `c_0, ..., c_{k-1}, 1`, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn digit_add(&self, mut a: u32, mut b: u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn digit_neg(&self, mut a: u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem((a.0 + b.0) % self.p);
        }
        match &self.add {
            Some(t) => FieldElem(t[(a.0 * self.q + b.0) as usize]),
            None => FieldElem(self.digit_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElem(self.exp[s as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.is_zero() {
            return None;
        }
        let l = self.log[a.0 as usize];
        Some(FieldElem(
            self.exp[((self.q - 1 - l) % (self.q - 1)) as usize],
        ))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let l = self.log[a.0 as usize] as u64;
        FieldElem(self.exp[((l * (e % (self.q as u64 - 1))) % (self.q as u64 - 1)) as usize])
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, self.p as u64)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p as i64) as u32)
    }

    /// Element with coordinates `c_0, c_1, ...` in the power basis; entries are
    /// reduced mod p and higher powers of `t` are reduced by the modulus.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElem {
        let t = self.generator_t();
        let mut acc = FieldElem::ZERO;
        let mut power = FieldElem::ONE;
        for &c in coeffs {
            acc = self.add(acc, self.mul(self.from_int(c as i64), power));
            power = self.mul(power, t);
        }
        acc
    }

    /// The k coordinates of `a` in the power basis, low degree first.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        let mut x = a.0;
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    /// The class of `t` (zero when k = 1, since the modulus is then `t`).
    fn generator_t(&self) -> FieldElem {
        if self.k == 1 {
            FieldElem::ZERO
        } else {
            FieldElem(self.p)
        }
    }

    /// Whether `a` lies in the prime subfield.
    pub fn in_prime_field(&self, a: FieldElem) -> bool {
        a.0 < self.p
    }

    /// All elements in canonical (encoding) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    /// Inverse of 2, which exists since p is odd.
    pub fn half(&self) -> FieldElem {
        FieldElem(self.p.div_ceil(2))
    }

    /// All solutions of `t^p - t = c`, sorted. The map is F_p-linear with
    /// kernel F_p, so the result is empty or a coset of F_p.
    pub fn artin_schreier_solve(&self, c: FieldElem) -> Vec<FieldElem> {
        let k = self.k as usize;
        let prime = FieldCtx::new(self.p, 1).expect("p already validated");
        // Columns: coordinates of b^p - b for the power basis b = t^j.
        let t = self.generator_t();
        let mut basis = Vec::with_capacity(k);
        let mut b = FieldElem::ONE;
        for _ in 0..k {
            basis.push(b);
            b = self.mul(b, t);
        }
        let mut m = Matrix::zeros(k, k);
        for (j, &bj) in basis.iter().enumerate() {
            let img = self.sub(self.frobenius(bj), bj);
            for (i, d) in self.coeffs(img).into_iter().enumerate() {
                m.set(i, j, FieldElem(d));
            }
        }
        let rhs = Matrix::from_rows(
            self.coeffs(c)
                .into_iter()
                .map(|d| vec![FieldElem(d)])
                .collect(),
            1,
        );
        let Some(x) = m.solve(&prime, &rhs) else {
            return Vec::new();
        };
        let coords: Vec<u32> = (0..k).map(|i| x.get(i, 0).0).collect();
        let base = self.from_coeffs(&coords);
        let mut out: Vec<FieldElem> = (0..self.p).map(|s| self.add(base, FieldElem(s))).collect();
        out.sort();
        out
    }

    /// Renders `a` as a polynomial in `t`, e.g. `2*t^2+t+1`.
    pub fn format(&self, a: FieldElem) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let coeffs = self.coeffs(a);
        let mut terms = Vec::new();
        for (e, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (e, 1) => format!("t^{e}"),
                (e, c) => format!("{c}*t^{e}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Parses the format produced by [`FieldCtx::format`]. Integer
    /// coefficients are reduced mod p; `-` between terms is accepted.
    pub fn parse(&self, input: &str) -> Result<FieldElem> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty"));
        }
        let t = self.generator_t();
        let mut acc = FieldElem::ZERO;
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let mut negative = false;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r;
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef_part, var_part) = match term.find('t') {
                Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
                None => (term, None),
            };
            let coef_str = coef_part.strip_suffix('*').unwrap_or(coef_part);
            let coef = if coef_str.is_empty() {
                if var_part.is_none() {
                    return Err(err("empty coefficient"));
                }
                FieldElem::ONE
            } else {
                let n: i64 = coef_str.parse().map_err(|_| err("bad coefficient"))?;
                self.from_int(n)
            };
            let power = match var_part {
                None => 0,
                Some("") => 1,
                Some(v) => {
                    let e = v.strip_prefix('^').ok_or_else(|| err("expected ^"))?;
                    e.parse::<u64>().map_err(|_| err("bad exponent"))?
                }
            };
            let mut value = self.mul(
                coef,
                if power == 0 {
                    FieldElem::ONE
                } else {
                    self.pow(t, power)
                },
            );
            if negative {
                value = self.neg(value);
            }
            acc = self.add(acc, value);
        }
        Ok(acc)
    }
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let pk = (p as u64).pow(k);
    for n in 0..pk {
        let mut coeffs: Vec<u64> = Vec::with_capacity(k as usize + 1);
        let mut x = n;
        for _ in 0..k {
            coeffs.push(x % p as u64);
            x /= p as u64;
        }
        coeffs.push(1);
        if poly::is_irreducible(&coeffs, p as u64) {
            return coeffs.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

fn encode(coeffs: &[u64], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c as u32)
}

fn build_log_tables(p: u32, k: u32, q: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let m: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    let pp = p as u64;
    let decode = |mut x: u32| -> Vec<u64> {
        let mut v = Vec::with_capacity(k as usize);
        for _ in 0..k {
            v.push((x % p) as u64);
            x /= p;
        }
        poly::trim(v)
    };
    for cand in 2..q.max(3) {
        let g = decode(cand);
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur: Vec<u64> = vec![1];
        let mut ok = true;
        for i in 0..(q - 1) {
            let code = encode(&cur, p);
            if i > 0 && code == 1 {
                ok = false;
                break;
            }
            exp[i as usize] = code;
            log[code as usize] = i;
            cur = poly::rem(&poly::mul(&cur, &g, pp), &m, pp);
        }
        if ok {
            for i in 0..(q - 1) as usize {
                exp[i + q as usize - 1] = exp[i];
            }
            return (exp, log);
        }
    }
    // q = 3: the generator is 2.
    let exp = vec![1, 2, 1, 2];
    let log = vec![0, 0, 1];
    (exp, log)
}

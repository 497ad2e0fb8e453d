//! Exact arithmetic in GF(p^e).
//!
//! Elements are encoded as integers in `0..q`; the base-p digits of the
//! encoding (least significant first) are the coefficients of the element as
//! a polynomial modulo the field's defining polynomial. The defining
//! polynomial is the lexicographically smallest monic irreducible of degree
//! `e` over GF(p), so two independent constructions of the same field agree
//! element by element.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Raw element encoding. Every supported field has at most 2^16 elements.
pub type Elem = u16;

/// (p, e) with q = p^e, if q is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

const MAX_FIELD_SIZE: u64 = 1 << 16;
const TABLE_LIMIT: u32 = 256;

struct FieldData {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for i in 0..2(q-1), so products of logs never need a reduction
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
    mul_table: Option<Vec<Elem>>,
    neg: Vec<Elem>,
    generator: Elem,
}

/// A finite field context. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.e == other.0.e)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.e)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over GF(p), little-endian, used only while building a field.
mod gfp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut k = p - 2;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            k >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let m = trim(m.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let factor = r[r.len() - 1] as u64 * lead_inv % p as u64;
            for (i, &c) in m.iter().enumerate() {
                let sub = factor * c as u64 % p as u64;
                let cur = r[i + shift] as u64;
                r[i + shift] = ((cur + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the
    /// base-p digits of `code`.
    pub fn monic_from_code(mut code: u32, deg: u32, p: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(deg as usize + 1);
        for _ in 0..deg {
            v.push(code % p);
            code /= p;
        }
        v.push(1);
        v
    }

    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = (f.len() - 1) as u32;
        for d in 1..=deg / 2 {
            for code in 0..p.pow(d) {
                let g = monic_from_code(code, d, p);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn digits(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn add_digits(a: u32, b: u32, p: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn neg_digits(a: u32, p: u32) -> u32 {
    if p == 2 {
        return a;
    }
    let mut a = a;
    let mut out = 0;
    let mut place = 1;
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

impl Field {
    /// Builds GF(p^e). Fails if `p` is not prime, `e == 0`, or `p^e > 65536`.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(crate::error::out_of_range("extension degree", "e must be at least 1"));
        }
        let size = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if size > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge { p, e });
        }
        let q = size as u32;

        let modulus = (0..q)
            .map(|code| gfp_poly::monic_from_code(code, e, p))
            .find(|f| e == 1 || gfp_poly::is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let slow_mul = |a: u32, b: u32| -> u32 {
            let prod = gfp_poly::mul(
                &gfp_poly::trim(digits(a, p, e)),
                &gfp_poly::trim(digits(b, p, e)),
                p,
            );
            let r = gfp_poly::rem(&prod, &modulus, p);
            from_digits(&r, p)
        };
        let slow_pow = |a: u32, mut k: u32| -> u32 {
            let mut r = 1;
            let mut b = a;
            while k > 0 {
                if k & 1 == 1 {
                    r = slow_mul(r, b);
                }
                b = slow_mul(b, b);
                k >>= 1;
            }
            r
        };

        let order = q - 1;
        let factors = prime_factors(order);
        let generator = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| factors.iter().all(|&r| slow_pow(g, order / r) != 1))
                .expect("multiplicative group of a field is cyclic")
        };

        let mut exp = vec![0 as Elem; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x as Elem;
            log[x as usize] = i;
            x = slow_mul(x, generator);
        }
        for i in order..2 * order {
            exp[i as usize] = exp[(i - order) as usize];
        }

        let neg: Vec<Elem> = (0..q).map(|a| neg_digits(a, p) as Elem).collect();
        let (add_table, mul_table) = if q <= TABLE_LIMIT {
            let mut add = vec![0 as Elem; (q * q) as usize];
            let mut mul = vec![0 as Elem; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    let idx = (a * q + b) as usize;
                    add[idx] = add_digits(a, b, p) as Elem;
                    mul[idx] = if a == 0 || b == 0 {
                        0
                    } else {
                        exp[(log[a as usize] + log[b as usize]) as usize]
                    };
                }
            }
            (Some(add), Some(mul))
        } else {
            (None, None)
        };

        Ok(Field(Arc::new(FieldData {
            p,
            e,
            q,
            modulus,
            exp,
            log,
            add_table,
            mul_table,
            neg,
            generator: generator as Elem,
        })))
    }

    /// GF(q) for a prime power `q`.
    pub fn with_size(q: u32) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or_else(|| {
            crate::error::out_of_range("field size", format!("{q} is not a prime power"))
        })?;
        Field::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    /// Number of elements q = p^e.
    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// A generator of the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    /// Returns `Some(b)` when this field has `b^2` elements.
    pub fn square_root_size(&self) -> Option<u32> {
        if self.0.e % 2 != 0 {
            return None;
        }
        Some(self.0.p.pow(self.0.e / 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(|v| v as Elem)
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.0.q {
            return Err(crate::error::out_of_range(
                "field element",
                format!("{value} >= {}", self.0.q),
            ));
        }
        Ok(FieldElement {
            field: self.clone(),
            value: value as Elem,
        })
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        v.rem_euclid(self.0.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.add_table {
            Some(t) => t[a as usize * self.0.q as usize + b as usize],
            None => add_digits(a as u32, b as u32, self.0.p) as Elem,
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.mul_table {
            Some(t) => t[a as usize * self.0.q as usize + b as usize],
            None => {
                if a == 0 || b == 0 {
                    0
                } else {
                    self.0.exp[(self.0.log[a as usize] + self.0.log[b as usize]) as usize]
                }
            }
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.0.q - 1;
        Ok(self.0.exp[((order - self.0.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` with `a^0 = 1` for every `a`, including zero.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.0.q - 1) as u64;
        let l = self.0.log[a as usize] as u64 * (k % order) % order;
        self.0.exp[l as usize]
    }

    /// `a^base_q`, the Frobenius automorphism of GF(base_q^2) over GF(base_q).
    pub fn frobenius(&self, a: Elem, base_q: u32) -> Result<Elem> {
        if (base_q as u64) * (base_q as u64) != self.0.q as u64 {
            return Err(Error::NotSquareField {
                size: self.0.q,
                base: base_q,
            });
        }
        Ok(self.pow(a, base_q as u64))
    }

    /// `dst[i] += c * src[i]`.
    #[inline]
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        if c == 0 {
            return;
        }
        match (&self.0.mul_table, &self.0.add_table) {
            (Some(mt), Some(at)) => {
                let q = self.0.q as usize;
                let row = &mt[c as usize * q..(c as usize + 1) * q];
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = at[*d as usize * q + row[s as usize] as usize];
                    }
                }
            }
            _ => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s != 0 {
                        *d = self.add(*d, self.mul(c, s));
                    }
                }
            }
        }
    }

    pub fn scale(&self, v: &mut [Elem], c: Elem) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

/// An element bound to its field. Binary operations reject operands from
/// different fields.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.value, self.field)
    }
}

impl FieldElement {
    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn wrap(&self, value: Elem) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.wrap(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, k: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, k))
    }

    pub fn frobenius(&self, base_q: u32) -> Result<FieldElement> {
        Ok(self.wrap(self.field.frobenius(self.value, base_q)?))
    }
}

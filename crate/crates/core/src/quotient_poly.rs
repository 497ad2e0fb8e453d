//! Monomials and sparse polynomials in F[x_0,...,x_m], evaluation at point
//! sets, and normal forms modulo the vanishing ideal of P^2.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{out_of_range, Error, Result};
use crate::finite_field::{Elem, Field};
use crate::projective_space::PointSet;

/// Exponent vector. Ordered graded-lex with x_0 < x_1 < x_2 < ...
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: other.nvars(),
            });
        }
        Ok(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Value of the monomial at one point.
    pub fn eval_at(&self, field: &Field, point: &[Elem]) -> Elem {
        self.0
            .iter()
            .zip(point)
            .fold(1, |acc, (&a, &x)| field.mul(acc, field.pow(x, a as u64)))
    }

    /// Text form with variables numbered from `first`; affine monomials in
    /// (x_1, x_2) use `first = 1`.
    pub fn display_from(&self, first: usize) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("x{}", i + first)
                } else {
                    format!("x{}^{}", i + first, a)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_from(0))
    }
}

/// Descending lex order with x_0 > x_1 > x_2, used for listing monomial sets.
pub fn listing_order(a: &Monomial, b: &Monomial) -> Ordering {
    b.exponents().cmp(a.exponents())
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {:?}", self, self.field)
    }
}

impl SparsePolynomial {
    pub fn zero(field: &Field, nvars: usize) -> SparsePolynomial {
        SparsePolynomial {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: &Field, m: Monomial) -> SparsePolynomial {
        let mut p = SparsePolynomial::zero(field, m.nvars());
        p.terms.insert(m, 1);
        p
    }

    pub fn from_terms(
        field: &Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Elem)>,
    ) -> Result<SparsePolynomial> {
        let mut p = SparsePolynomial::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Elem {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Elem) -> Result<()> {
        if m.nvars() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: m.nvars(),
            });
        }
        if c as u32 >= self.field.size() {
            return Err(out_of_range("coefficient", format!("{c}")));
        }
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = self.field.add(*entry, c);
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    fn compatible(&self, other: &SparsePolynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> SparsePolynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.compatible(other)?;
        let mut out = SparsePolynomial::zero(&self.field, self.nvars);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.mul(b)?, self.field.mul(ca, cb))?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: Elem) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(&self.field, self.nvars);
        for (m, v) in self.terms() {
            out.add_term(m.clone(), self.field.mul(v, c)).expect("same arity");
        }
        out
    }

    /// `f^k` for `k` a power of the characteristic, where raising is additive:
    /// exponents are multiplied by `k` and coefficients raised to the `k`-th power.
    pub fn pow_char(&self, k: u32) -> Result<SparsePolynomial> {
        let p = self.field.characteristic();
        let mut r = k;
        while r > 1 && r % p == 0 {
            r /= p;
        }
        if r != 1 || k == 0 {
            return Err(out_of_range(
                "exponent",
                format!("{k} is not a power of the characteristic {p}"),
            ));
        }
        let mut out = SparsePolynomial::zero(&self.field, self.nvars);
        for (m, c) in self.terms() {
            let e = m.exponents().iter().map(|a| a * k).collect();
            out.add_term(Monomial(e), self.field.pow(c, k as u64))?;
        }
        Ok(out)
    }

    pub fn eval_at(&self, point: &[Elem]) -> Elem {
        self.terms().fold(0, |acc, (m, c)| {
            self.field.add(acc, self.field.mul(c, m.eval_at(&self.field, point)))
        })
    }

    /// Text form with variables numbered from `first`.
    pub fn display_from(&self, first: usize) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, &c)| {
                let mono = m.display_from(first);
                match (c, mono.as_str()) {
                    (1, _) => mono,
                    (_, "1") => c.to_string(),
                    _ => format!("{c}*{mono}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the text form produced by `display_from(0)`.
    pub fn parse(field: &Field, nvars: usize, text: &str) -> Result<SparsePolynomial> {
        let mut p = SparsePolynomial::zero(field, nvars);
        let text = text.trim();
        if text == "0" {
            return Ok(p);
        }
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            let mut coeff: Elem = 1;
            let mut exps = vec![0u32; nvars];
            for (i, factor) in term.split('*').enumerate() {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix('x') {
                    let (var, exp) = match rest.split_once('^') {
                        Some((v, e)) => (v, e),
                        None => (rest, "1"),
                    };
                    let var: usize = var
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable in {factor:?}")))?;
                    let exp: u32 = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                    if var >= nvars {
                        return Err(Error::ArityMismatch {
                            expected: nvars,
                            got: var + 1,
                        });
                    }
                    exps[var] += exp;
                } else if i == 0 {
                    let v: u32 = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                    if v >= field.size() {
                        return Err(out_of_range("coefficient", format!("{v}")));
                    }
                    coeff = v as Elem;
                } else {
                    return Err(Error::Parse(format!("unexpected factor {factor:?}")));
                }
            }
            p.add_term(Monomial(exps), coeff)?;
        }
        Ok(p)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_from(0))
    }
}

fn check_arity(nvars: usize, pts: &PointSet) -> Result<()> {
    if nvars != pts.arity() {
        return Err(Error::ArityMismatch {
            expected: pts.arity(),
            got: nvars,
        });
    }
    Ok(())
}

/// Evaluation vector of a monomial at every point, in point order.
pub fn evaluate_monomial(m: &Monomial, pts: &PointSet) -> Result<Vec<Elem>> {
    check_arity(m.nvars(), pts)?;
    let field = pts.field();
    Ok(pts.points().iter().map(|p| m.eval_at(field, p)).collect())
}

pub fn evaluate(f: &SparsePolynomial, pts: &PointSet) -> Result<Vec<Elem>> {
    check_arity(f.nvars(), pts)?;
    if f.field() != pts.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(pts.points().iter().map(|p| f.eval_at(p)).collect())
}

/// z-bar: 0 for z = 0, otherwise the representative of z mod Q-1 in [1, Q-1].
pub fn overline(z: u64, big_q: u64) -> u64 {
    assert!(big_q >= 2, "overline needs Q >= 2");
    if z == 0 {
        0
    } else {
        (z - 1) % (big_q - 1) + 1
    }
}

fn mono3(a0: u32, a1: u32, a2: u32) -> Monomial {
    Monomial(vec![a0, a1, a2])
}

/// Normal form of `f` modulo I(P^2), supported on the standard basis.
pub fn reduce_mod_ip2(f: &SparsePolynomial) -> Result<SparsePolynomial> {
    if f.nvars() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            got: f.nvars(),
        });
    }
    let field = f.field();
    let q = field.size() as u64;
    let ov = |z: u32| overline(z as u64, q) as u32;
    let mut out = SparsePolynomial::zero(field, 3);
    for (m, c) in f.terms() {
        let [a0, a1, a2] = [m.0[0], m.0[1], m.0[2]];
        let (b1, b2) = (ov(a1), ov(a2));
        let neg = field.neg(c);
        if a0 == 0 {
            out.add_term(mono3(0, b1, b2), c)?;
        } else if a1 == 0 {
            out.add_term(mono3(1, 0, b2), c)?;
        } else {
            out.add_term(mono3(0, b1, b2), c)?;
            out.add_term(mono3(1, 0, b2), c)?;
            out.add_term(mono3(0, 0, b2), neg)?;
            out.add_term(mono3(1, 1, 0), c)?;
            out.add_term(mono3(1, 0, 0), neg)?;
            out.add_term(mono3(0, 1, 0), neg)?;
            out.add_term(mono3(0, 0, 0), c)?;
        }
    }
    Ok(out)
}

/// {x_1^a x_2^b, x_0 x_2^b, x_0 x_1 : 0 <= a, b <= Q-1}, a basis of S/I(P^2).
pub fn standard_basis_p2(big_q: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity((big_q * big_q + big_q + 1) as usize);
    for a in 0..big_q {
        for b in 0..big_q {
            out.push(mono3(0, a, b));
        }
    }
    for b in 0..big_q {
        out.push(mono3(1, 0, b));
    }
    out.push(mono3(1, 1, 0));
    out
}

/// The monomial basis (A_1^d, A_2^d, A_3^d) of S_d/I(P^2), each list in
/// descending lex order.
pub fn basis_ad(big_q: u32, d: u32) -> Result<(Vec<Monomial>, Vec<Monomial>, Vec<Monomial>)> {
    if d < 1 || d > 2 * (big_q - 1) {
        return Err(out_of_range(
            "degree",
            format!("d={d} outside 1..={}", 2 * (big_q - 1)),
        ));
    }
    let cap = big_q - 1;
    let mut a1 = Vec::new();
    for x0 in (1..=d).rev() {
        let rest = d - x0;
        for x1 in (0..=rest.min(cap)).rev() {
            let x2 = rest - x1;
            if x2 <= cap {
                a1.push(mono3(x0, x1, x2));
            }
        }
    }
    let mut a2 = Vec::new();
    for x1 in (1..=d).rev() {
        let x2 = d - x1;
        if x2 <= cap {
            a2.push(mono3(0, x1, x2));
        }
    }
    Ok((a1, a2, vec![mono3(0, 0, d)]))
}

/// Generators of I(P^m) over `field`.
pub fn vanishing_ideal_generators(field: &Field, m: usize) -> Vec<SparsePolynomial> {
    let n = m + 1;
    let q = field.size();
    let var = |i: usize, e: u32| {
        let mut v = vec![0; n];
        v[i] = e;
        SparsePolynomial::monomial(field, Monomial(v))
    };
    let one = SparsePolynomial::monomial(field, Monomial::one(n));
    let minus = |a: &SparsePolynomial, b: &SparsePolynomial| a.sub(b).expect("same ring");
    let mut gens = vec![minus(&var(0, 2), &var(0, 1))];
    for i in 1..n {
        gens.push(minus(&var(i, q), &var(i, 1)));
    }
    // (x_0-1)...(x_{j-1}-1)(x_j^2-x_j) for 1 <= j < m, then (x_0-1)...(x_m-1)
    for j in 1..=m {
        let mut prod = one.clone();
        for i in 0..j {
            prod = prod.mul(&minus(&var(i, 1), &one)).expect("same ring");
        }
        let last = if j < m {
            minus(&var(j, 2), &var(j, 1))
        } else {
            minus(&var(j, 1), &one)
        };
        gens.push(prod.mul(&last).expect("same ring"));
    }
    gens
}

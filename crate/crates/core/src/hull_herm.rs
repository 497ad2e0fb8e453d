//! Hermitian hulls of PRM codes over P^2 defined over GF(q^2), and of affine
//! RM codes over A^2. Degrees refer to the big field: overline(z) is taken
//! modulo q^2 - 1 and d⊥ = 2(q^2 - 1) - d.

use serde::Serialize;

use crate::error::{out_of_range, Result};
use crate::finite_field::Field;
use crate::linear_code::LinearCode;
use crate::prm_codes::{binom, code_from_monomials, monomials_of_degree, prm_params, rm_code, rm_params};
use crate::projective_space::{projective_points, PointSet};
use crate::quotient_poly::{basis_ad, evaluate, listing_order, overline, Monomial, SparsePolynomial};

/// Digits of d = low + high*q with both digits in 0..q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QadicPair {
    pub low: u32,
    pub high: u32,
}

pub fn qadic(q: u32, d: u32) -> Result<QadicPair> {
    if d >= q * q {
        return Err(out_of_range("q-adic expansion", format!("{d} >= q^2 = {}", q * q)));
    }
    Ok(QadicPair { low: d % q, high: d / q })
}

fn big(q: u32) -> u32 {
    q * q - 1
}

fn ov(q: u32, z: u64) -> u32 {
    overline(z, (q * q) as u64) as u32
}

fn dual_degree(q: u32, d: u32) -> u32 {
    2 * big(q) - d
}

fn mono(a0: u32, a1: u32, a2: u32) -> Monomial {
    Monomial::new(vec![a0, a1, a2])
}

fn base_of(field: &Field) -> Result<u32> {
    field.square_root_size().ok_or_else(|| {
        out_of_range("field", format!("GF({}) is not a square field", field.size()))
    })
}

fn check_d(q: u32, d: u32, lo: u32, hi: u32) -> Result<()> {
    if q < 2 || d < lo || d > hi {
        return Err(out_of_range("degree", format!("need {lo} <= d <= {hi}, got {d}")));
    }
    Ok(())
}

/// U_{d1,d2}: monomials x1^a1 x2^a2 (two exponents) with a_i <= q^2-1,
/// a1 + a2 <= d1 and overline(q a1) + overline(q a2) <= 2(q^2-1) - d2 - 1.
pub fn affine_hull_monomials(q: u32, d1: u32, d2: u32) -> Result<Vec<Monomial>> {
    let top = 2 * big(q.max(2));
    if q < 2 || d1 > top || d2 > top {
        return Err(out_of_range("degrees", format!("need 0 <= d1, d2 <= {top}")));
    }
    let limit = top as i64 - d2 as i64 - 1;
    let mut out = Vec::new();
    for a1 in 0..=big(q).min(d1) {
        for a2 in 0..=big(q).min(d1 - a1) {
            let s = ov(q, (q * a1) as u64) + ov(q, (q * a2) as u64);
            if (s as i64) <= limit {
                out.push(Monomial::new(vec![a1, a2]));
            }
        }
    }
    out.sort_by(listing_order);
    Ok(out)
}

/// U: U_{d-1,d} homogenized to degree d with x0.
pub fn set_u(q: u32, d: u32) -> Result<Vec<Monomial>> {
    check_d(q, d, 1, big(q))?;
    let mut out: Vec<Monomial> = affine_hull_monomials(q, d - 1, d)?
        .iter()
        .map(|m| {
            let (a1, a2) = (m.exponents()[0], m.exponents()[1]);
            mono(d - a1 - a2, a1, a2)
        })
        .collect();
    out.sort_by(listing_order);
    Ok(out)
}

/// T = {a2 < d : d⊥ > overline(q a2) + q^2 - 1}.
pub fn set_t(q: u32, d: u32) -> Result<Vec<u32>> {
    check_d(q, d, 1, big(q))?;
    let dp = dual_degree(q, d);
    Ok((0..d)
        .filter(|&a2| dp > ov(q, (q * a2) as u64) + big(q))
        .collect())
}

/// V = {x1^{d-a2} x2^{a2} : a2 in T}.
pub fn set_v(q: u32, d: u32) -> Result<Vec<Monomial>> {
    let mut out: Vec<Monomial> = set_t(q, d)?.into_iter().map(|a2| mono(0, d - a2, a2)).collect();
    out.sort_by(listing_order);
    Ok(out)
}

// a2 values defining W, for 2(q-1) < d <= q^2-1
fn w_indices(q: u32, d: u32) -> Vec<u32> {
    if d <= 2 * (q - 1) {
        return Vec::new();
    }
    let dp = dual_degree(q, d) as i64;
    (0..=d)
        .filter(|&a2| {
            let g2 = ov(q, (q * a2) as u64) as i64;
            let g1 = ov(q, (q * (d - a2)) as u64) as i64;
            let beta = ov(q, (q * dual_degree(q, d) - a2) as u64) as i64;
            big(q) as i64 >= dp - g2 && dp - g2 > g1 && (d - a2) as i64 > beta
        })
        .collect()
}

fn w_element(field: &Field, q: u32, d: u32, a2: u32) -> Result<SparsePolynomial> {
    let beta = ov(q, (q * dual_degree(q, d) - a2) as u64);
    SparsePolynomial::from_terms(
        field,
        3,
        [(mono(0, d - a2, a2), 1), (mono(d - beta - a2, beta, a2), 1)],
    )
}

/// W, empty for d <= 2(q-1).
pub fn set_w(field: &Field, d: u32) -> Result<Vec<SparsePolynomial>> {
    let q = base_of(field)?;
    check_d(q, d, 1, big(q))?;
    w_indices(q, d).into_iter().map(|a2| w_element(field, q, d, a2)).collect()
}

/// Pairs (w, companion) where the companion is the q-th power form whose
/// evaluation at P^2 equals that of w.
pub fn w_identities(field: &Field, d: u32) -> Result<Vec<(SparsePolynomial, SparsePolynomial)>> {
    let q = base_of(field)?;
    check_d(q, d, 1, big(q))?;
    let dp = dual_degree(q, d);
    w_indices(q, d)
        .into_iter()
        .map(|a2| {
            let g2 = ov(q, (q * a2) as u64);
            let g1 = ov(q, (q * (d - a2)) as u64);
            let inner = SparsePolynomial::from_terms(
                field,
                3,
                [(mono(0, dp - g2, g2), 1), (mono(dp - g1 - g2, g1, g2), 1)],
            )?;
            Ok((w_element(field, q, d, a2)?, inner.pow_char(q)?))
        })
        .collect()
}

/// For each a2 in T, the monomial x1^{d-a2} x2^{a2} and the q-th power
/// polynomial it is congruent to modulo I(P^2).
pub fn v_identities(field: &Field, d: u32) -> Result<Vec<(SparsePolynomial, SparsePolynomial)>> {
    let q = base_of(field)?;
    check_d(q, d, 1, big(q))?;
    let dp = dual_degree(q, d);
    let dp_bar = ov(q, dp as u64);
    let minus_one = field.neg(1);
    set_t(q, d)?
        .into_iter()
        .map(|a2| {
            let g2 = ov(q, (q * a2) as u64);
            let g1 = ov(q, (q * (d - a2)) as u64);
            let inner = SparsePolynomial::from_terms(
                field,
                3,
                [
                    (mono(0, dp - g2, g2), 1),
                    (mono(big(q), dp_bar - g2, g2), minus_one),
                    (mono(dp - g1 - g2, g1, g2), 1),
                ],
            )?;
            Ok((
                SparsePolynomial::monomial(field, mono(0, d - a2, a2)),
                inner.pow_char(q)?,
            ))
        })
        .collect()
}

/// |T| by the three-term formula.
pub fn t_size(q: u32, d: u32) -> Result<u64> {
    check_d(q, d, 1, big(q))?;
    let QadicPair { low: b0, high: b1 } = qadic(q, d)?;
    Ok((b1 * (q - 1 - b1) + b0.min(q - 1 - b1) + b1.min(q - 1 - b0)) as u64)
}

/// |T| by the two-branch closed form.
pub fn t_size_branches(q: u32, d: u32) -> Result<u64> {
    check_d(q, d, 1, big(q))?;
    let QadicPair { low: b0, high: b1 } = qadic(q, d)?;
    let base = d as i64 - (b1 * b1) as i64;
    let v = if b0 + b1 <= q - 1 {
        base
    } else {
        base - 2 * (b0 + b1 - (q - 1)) as i64
    };
    Ok(v as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct USize {
    pub total: u64,
    pub b1: u64,
    pub b2: u64,
    pub b3: u64,
    pub b4: u64,
}

fn b_terms(q: u32, beta: QadicPair, lambda: QadicPair) -> [i128; 4] {
    let (q, b0, b1) = (q as i64, beta.low as i64, beta.high as i64);
    let (l0, l1) = (lambda.low as i64, lambda.high as i64);
    let c_l = binom(q - l1 - 1, q - l1 - 3);
    let c_b1 = binom(b1, b1 - 2);
    let t1 = c_l * c_b1;
    let t2 = (b1 as i128 * (c_l - binom(q - b0 - 1, q - b0 - 3))).max(0);
    let t3 = ((q - 1 - l1) as i128 * (c_b1 - binom(l0 + 1, l0 - 1))).max(0);
    let t4 = b1 as i128
        * (q - 1 - l1) as i128
        * binom(b0 - l1, b0 - l1)
        * binom(b1 - l0 - 1, b1 - l0 - 1);
    [t1, t2, t3, t4]
}

fn lambda_of(q: u32, d: u32) -> Result<QadicPair> {
    qadic(q, dual_degree(q, d) - q * q)
}

fn u_from(q: u32, rm_k: u64, beta: QadicPair, lambda: QadicPair) -> USize {
    let b = b_terms(q, beta, lambda);
    USize {
        total: (rm_k as i128 - b.iter().sum::<i128>()) as u64,
        b1: b[0] as u64,
        b2: b[1] as u64,
        b3: b[2] as u64,
        b4: b[3] as u64,
    }
}

/// |U| = dim RM_{d-1}(q^2, 2) - (B1 + B2 + B3 + B4), with d-1 = β0 + β1 q and
/// d⊥ = λ0 + λ1 q + q^2.
pub fn u_size(q: u32, d: u32) -> Result<USize> {
    check_d(q, d, 1, big(q) - 1)?;
    let beta = qadic(q, d - 1)?;
    let rm_k = rm_params(q * q, 2, d - 1)?.k;
    Ok(u_from(q, rm_k, beta, lambda_of(q, d)?))
}

/// |U_{d,d}| by the same count with d = β0 + β1 q.
pub fn affine_u_size(q: u32, d: u32) -> Result<USize> {
    check_d(q, d, 0, big(q) - 1)?;
    let beta = qadic(q, d)?;
    let rm_k = rm_params(q * q, 2, d)?.k;
    Ok(u_from(q, rm_k, beta, lambda_of(q, d)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HermMode {
    ExactBasisCongruent,
    ExactBasisSmall,
    LowerBoundSet,
}

#[derive(Debug, Clone)]
pub struct HermHullBasis {
    pub q: u32,
    pub d: u32,
    pub set_u: Vec<Monomial>,
    pub set_v: Vec<Monomial>,
    pub set_w: Vec<SparsePolynomial>,
    /// A_2^d ∪ A_3^d, used instead of V and W in the congruent case.
    pub part_rest: Vec<Monomial>,
    pub mode: HermMode,
}

impl HermHullBasis {
    pub fn len(&self) -> usize {
        self.set_u.len() + self.set_v.len() + self.set_w.len() + self.part_rest.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self, field: &Field) -> Vec<SparsePolynomial> {
        let monos = self.set_u.iter().chain(&self.part_rest).chain(&self.set_v);
        let mut out: Vec<SparsePolynomial> = monos
            .map(|m| SparsePolynomial::monomial(field, m.clone()))
            .collect();
        out.extend(self.set_w.iter().cloned());
        out
    }
}

fn mode_of(q: u32, d: u32) -> HermMode {
    if d % (q - 1) == 0 {
        HermMode::ExactBasisCongruent
    } else if d <= 2 * (q - 1) {
        HermMode::ExactBasisSmall
    } else {
        HermMode::LowerBoundSet
    }
}

/// Basis (or independent subset, in lower-bound mode) of
/// S_d/I(P^2) ∩ S^q_{d⊥}/I(P^2) over GF(q^2).
pub fn hermitian_hull_basis(field: &Field, d: u32) -> Result<HermHullBasis> {
    let q = base_of(field)?;
    check_d(q, d, 1, big(q))?;
    let mode = mode_of(q, d);
    let mut b = HermHullBasis {
        q,
        d,
        set_u: set_u(q, d)?,
        set_v: Vec::new(),
        set_w: Vec::new(),
        part_rest: Vec::new(),
        mode,
    };
    match mode {
        HermMode::ExactBasisCongruent => {
            let (_, a2, a3) = basis_ad(q * q, d)?;
            b.part_rest = a2.into_iter().chain(a3).collect();
        }
        HermMode::ExactBasisSmall => b.set_v = set_v(q, d)?,
        HermMode::LowerBoundSet => {
            b.set_v = set_v(q, d)?;
            b.set_w = set_w(field, d)?;
        }
    }
    Ok(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HullDim {
    pub value: u64,
    pub exact: bool,
}

/// dim(PRM_d(q^2,2) ∩ PRM_d^{⊥h}(q^2,2)) for 1 <= d < q^2 - 1; a lower bound
/// when d > 2(q-1) and d is not a multiple of q-1.
pub fn hermitian_hull_dim(q: u32, d: u32) -> Result<HullDim> {
    check_d(q, d, 1, big(q) - 1)?;
    let value = match mode_of(q, d) {
        HermMode::ExactBasisCongruent if d <= 2 * (q - 1) => prm_params(q * q, 2, d)?.k,
        HermMode::ExactBasisCongruent => u_size(q, d)?.total + d as u64 + 1,
        HermMode::ExactBasisSmall => {
            let b1 = qadic(q, d)?.high as u64;
            rm_params(q * q, 2, d - 1)?.k + d as u64 - b1 * b1
        }
        HermMode::LowerBoundSet => {
            let w = w_indices(q, d).len() as u64;
            u_size(q, d)?.total + t_size(q, d)? + w
        }
    };
    Ok(HullDim {
        value,
        exact: mode_of(q, d) != HermMode::LowerBoundSet,
    })
}

/// dim(RM_d(q^2,2) ∩ RM_d^{⊥h}(q^2,2)) for 0 <= d < q^2 - 1.
pub fn affine_hermitian_hull_dim(q: u32, d: u32) -> Result<u64> {
    check_d(q, d, 0, big(q) - 1)?;
    if d < 2 * (q - 1) {
        return Ok(rm_params(q * q, 2, d)?.k);
    }
    Ok(affine_u_size(q, d)?.total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HermVerifyReport {
    pub q: u32,
    pub d: u32,
    pub mode: HermMode,
    pub closed_form: u64,
    pub exact: bool,
    pub set_sizes: [usize; 3],
    pub oracle_dim: usize,
    pub independent: bool,
    pub contained: bool,
    pub spans_or_bound_tight: bool,
    pub t_formula_ok: bool,
    pub u_formula_ok: bool,
}

impl HermVerifyReport {
    /// Exact modes must match the oracle; lower-bound mode must not exceed it.
    pub fn passed(&self) -> bool {
        let dims = if self.exact {
            self.spans_or_bound_tight
        } else {
            self.closed_form <= self.oracle_dim as u64
        };
        dims && self.independent && self.contained && self.t_formula_ok && self.u_formula_ok
    }
}

/// PRM_d(q^2, 2) for every d in 1..q^2-1, with the plane's points.
#[derive(Debug, Clone)]
pub struct HermPlane {
    points: PointSet,
    codes: Vec<LinearCode>,
}

impl HermPlane {
    pub fn new(field: &Field) -> Result<HermPlane> {
        let q = base_of(field)?;
        let points = projective_points(field, 2)?;
        let codes = (1..big(q))
            .map(|d| code_from_monomials(&points, &monomials_of_degree(3, d)))
            .collect::<Result<Vec<_>>>()?;
        Ok(HermPlane { points, codes })
    }

    pub fn field(&self) -> &Field {
        self.points.field()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn code(&self, d: u32) -> Result<&LinearCode> {
        let top = self.codes.len() as u32;
        if d < 1 || d > top {
            return Err(out_of_range("degree", format!("d={d} outside 1..={top}")));
        }
        Ok(&self.codes[d as usize - 1])
    }

    /// PRM_d ∩ PRM_d^{⊥h} by elimination.
    pub fn oracle_hull(&self, d: u32) -> Result<LinearCode> {
        let q = base_of(self.field())?;
        let c = self.code(d)?;
        c.intersect(&c.hermitian_dual(q)?)
    }
}

pub fn verify_hermitian_hull_with(plane: &HermPlane, d: u32) -> Result<HermVerifyReport> {
    let field = plane.field();
    let q = base_of(field)?;
    let dim = hermitian_hull_dim(q, d)?;
    let basis = hermitian_hull_basis(field, d)?;
    let oracle = plane.oracle_hull(d)?;
    let rows = basis
        .elements(field)
        .iter()
        .map(|f| evaluate(f, plane.points()))
        .collect::<Result<Vec<_>>>()?;
    let spanned = LinearCode::from_rows(field, plane.points().len(), rows)?;
    Ok(HermVerifyReport {
        q,
        d,
        mode: basis.mode,
        closed_form: dim.value,
        exact: dim.exact,
        set_sizes: [
            basis.set_u.len(),
            basis.set_v.len() + basis.part_rest.len(),
            basis.set_w.len(),
        ],
        oracle_dim: oracle.dim(),
        independent: spanned.dim() == basis.len(),
        contained: spanned.is_subcode_of(&oracle)?,
        spans_or_bound_tight: dim.value == oracle.dim() as u64,
        t_formula_ok: t_size(q, d)? == set_t(q, d)?.len() as u64
            && t_size_branches(q, d)? == t_size(q, d)?,
        u_formula_ok: u_size(q, d)?.total == set_u(q, d)?.len() as u64,
    })
}

pub fn verify_hermitian_hull(field: &Field, d: u32) -> Result<HermVerifyReport> {
    verify_hermitian_hull_with(&HermPlane::new(field)?, d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineHermReport {
    pub q: u32,
    pub d: u32,
    pub closed_form: u64,
    pub u_formula: u64,
    pub enumerated: usize,
    pub oracle_dim: usize,
    pub self_orthogonal: bool,
    pub self_orthogonal_expected: bool,
    pub basis_spans: bool,
}

impl AffineHermReport {
    pub fn passed(&self) -> bool {
        let u_ok = self.d < 2 * (self.q - 1) || self.u_formula == self.enumerated as u64;
        self.closed_form == self.oracle_dim as u64
            && self.enumerated == self.oracle_dim
            && self.self_orthogonal == self.self_orthogonal_expected
            && self.basis_spans
            && u_ok
    }
}

/// Affine closed forms against RM_d(q^2,2) ∩ RM_d^{⊥h}(q^2,2) by elimination.
pub fn verify_affine_hermitian(field: &Field, d: u32) -> Result<AffineHermReport> {
    let q = base_of(field)?;
    check_d(q, d, 0, big(q) - 1)?;
    let c = rm_code(field, 2, d)?;
    let hd = c.hermitian_dual(q)?;
    let oracle = c.intersect(&hd)?;
    let monos = affine_hull_monomials(q, d, d)?;
    let pts = crate::projective_space::affine_points(field, 2)?;
    let spanned = code_from_monomials(&pts, &monos)?;
    Ok(AffineHermReport {
        q,
        d,
        closed_form: affine_hermitian_hull_dim(q, d)?,
        u_formula: affine_u_size(q, d)?.total,
        enumerated: monos.len(),
        oracle_dim: oracle.dim(),
        self_orthogonal: c.is_subcode_of(&hd)?,
        self_orthogonal_expected: d + 1 <= 2 * (q - 1),
        basis_spans: spanned == oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_size(q).unwrap()
    }

    fn names(ms: &[Monomial]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn affine_u_examples() {
        let u = affine_hull_monomials(3, 4, 4).unwrap();
        assert_eq!(u.len(), 14);
        assert!(!u.contains(&Monomial::new(vec![2, 2])));
        let u = affine_hull_monomials(3, 1, 1).unwrap();
        let shown: Vec<String> = u.iter().map(|m| m.display_from(1)).collect();
        assert_eq!(shown, ["x1", "x2", "1"]);
        assert_eq!(affine_hull_monomials(3, 0, 15).unwrap().len(), 1);
        assert_eq!(affine_hull_monomials(3, 0, 16).unwrap().len(), 0);
        assert!(affine_hull_monomials(3, 17, 0).is_err());
    }

    #[test]
    fn set_u_examples() {
        let u = set_u(3, 7).unwrap();
        assert_eq!(u.len(), 21);
        let (a1, _, _) = basis_ad(9, 7).unwrap();
        let excluded: Vec<Monomial> = a1.into_iter().filter(|m| !u.contains(m)).collect();
        assert_eq!(
            names(&excluded),
            [
                "x0^4*x1^2*x2", "x0^4*x1*x2^2", "x0^3*x1^2*x2^2", "x0*x1^5*x2",
                "x0*x1^4*x2^2", "x0*x1^2*x2^4", "x0*x1*x2^5"
            ]
        );
        assert_eq!(set_u(3, 4).unwrap(), basis_ad(9, 4).unwrap().0);
        assert_eq!(names(&set_u(2, 1).unwrap()), ["x0"]);
    }

    #[test]
    fn t_v_w_examples() {
        assert_eq!(set_t(3, 7).unwrap(), vec![0]);
        assert_eq!(names(&set_v(3, 7).unwrap()), ["x1^7"]);
        assert_eq!(set_t(3, 4).unwrap(), vec![0, 1, 3]);
        assert_eq!(set_t(3, 8).unwrap(), Vec::<u32>::new());
        assert_eq!(t_size(3, 7).unwrap(), 1);
        assert_eq!(t_size_branches(3, 7).unwrap(), 1);
        assert_eq!(t_size(3, 4).unwrap(), 3);
        assert_eq!(t_size(4, 5).unwrap(), 4);
        let f9 = gf(9);
        let w: Vec<String> = set_w(&f9, 7).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(w, ["x1^6*x2 + x0^4*x1^2*x2"]);
        assert!(set_w(&f9, 4).unwrap().is_empty());
        assert!(set_w(&gf(8), 4).is_err());
    }

    #[test]
    fn u_size_examples() {
        let u = u_size(3, 7).unwrap();
        assert_eq!(u, USize { total: 21, b1: 1, b2: 0, b3: 2, b4: 4 });
        assert_eq!(u_size(3, 4).unwrap().total, 10);
        assert_eq!(u_size(3, 1).unwrap().total, 1);
        assert!(u_size(3, 8).is_err());
        assert_eq!(affine_u_size(3, 4).unwrap().total, 14);
    }

    #[test]
    fn dim_examples() {
        assert_eq!(hermitian_hull_dim(3, 7).unwrap(), HullDim { value: 23, exact: false });
        assert_eq!(hermitian_hull_dim(3, 2).unwrap(), HullDim { value: 6, exact: true });
        assert_eq!(hermitian_hull_dim(3, 1).unwrap(), HullDim { value: 2, exact: true });
        // 4 is a multiple of q-1 = 2, so the whole code is its own hull side
        assert_eq!(hermitian_hull_dim(3, 4).unwrap().value, 15);
        assert!(hermitian_hull_dim(3, 8).is_err());
        assert_eq!(affine_hermitian_hull_dim(3, 1).unwrap(), 3);
        assert_eq!(affine_hermitian_hull_dim(3, 4).unwrap(), 14);
        assert_eq!(affine_hermitian_hull_dim(2, 0).unwrap(), 1);
    }

    #[test]
    fn verify_examples() {
        let plane = HermPlane::new(&gf(9)).unwrap();
        let r = verify_hermitian_hull_with(&plane, 7).unwrap();
        assert_eq!((r.closed_form, r.oracle_dim), (23, 23));
        assert_eq!(r.set_sizes, [21, 1, 1]);
        assert!(r.passed() && r.spans_or_bound_tight);
        for d in [1, 2, 3, 4] {
            let r = verify_hermitian_hull_with(&plane, d).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        let plane4 = HermPlane::new(&gf(4)).unwrap();
        for d in [1, 2] {
            assert!(verify_hermitian_hull_with(&plane4, d).unwrap().passed());
        }
    }

    #[test]
    fn identities_evaluate_equally() {
        let f9 = gf(9);
        let pts = projective_points(&f9, 2).unwrap();
        for d in 1..8 {
            for (l, r) in v_identities(&f9, d).unwrap().into_iter().chain(w_identities(&f9, d).unwrap()) {
                assert_eq!(evaluate(&l, &pts).unwrap(), evaluate(&r, &pts).unwrap(), "d={d} {l}");
            }
        }
    }

    #[test]
    fn affine_verify_small() {
        for d in 0..8 {
            let r = verify_affine_hermitian(&gf(9), d).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

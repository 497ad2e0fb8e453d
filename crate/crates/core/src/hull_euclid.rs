//! Euclidean relative hulls of PRM codes over P^2: closed-form bases of
//! S_{d1}/I(P^2) ∩ S_{d2}/I(P^2) and their dimensions.

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::finite_field::Field;
use crate::linear_code::LinearCode;
use crate::prm_codes::{prm_params, rm_params, PrmPlane};
use crate::quotient_poly::{basis_ad, evaluate, overline, Monomial, SparsePolynomial};

#[derive(Debug, Clone)]
pub struct EuclidHullBasis {
    pub q: u32,
    pub d1: u32,
    pub d2: u32,
    pub part_a1: Vec<Monomial>,
    pub part_y: Vec<Monomial>,
    pub part_q: Option<SparsePolynomial>,
    /// A_2^{d1} ∪ A_3^{d1}, present only in the congruent case.
    pub part_rest: Vec<Monomial>,
    pub congruent_case: bool,
    /// d2 = q-1: the dual of PRM_{d2} is not a PRM code.
    pub dual_not_prm: bool,
}

impl EuclidHullBasis {
    pub fn len(&self) -> usize {
        self.part_a1.len() + self.part_y.len() + self.part_rest.len() + self.part_q.iter().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All basis elements as polynomials, in display order.
    pub fn elements(&self, field: &Field) -> Vec<SparsePolynomial> {
        let monos = self.part_a1.iter().chain(&self.part_rest).chain(&self.part_y);
        let mut out: Vec<SparsePolynomial> = monos
            .map(|m| SparsePolynomial::monomial(field, m.clone()))
            .collect();
        out.extend(self.part_q.iter().cloned());
        out
    }
}

fn mono(a0: u32, a1: u32, a2: u32) -> Monomial {
    Monomial::new(vec![a0, a1, a2])
}

fn check_pair(q: u32, d1: u32, d2: u32) -> Result<()> {
    if q < 2 || d1 < 1 || d1 > d2 || d2 > 2 * (q - 1) {
        return Err(out_of_range(
            "degrees",
            format!("need 1 <= d1 <= d2 <= {}, got ({d1}, {d2})", 2 * (q.max(1) - 1)),
        ));
    }
    Ok(())
}

fn ordered(d1: u32, d2: u32) -> (u32, u32) {
    (d1.min(d2), d1.max(d2))
}

fn congruent(q: u32, a: u32, b: u32) -> bool {
    (a as i64 - b as i64).rem_euclid(q as i64 - 1) == 0
}

/// Q_{d1,d2} and its degree-d2 companion Q'_{d2,d1}; both have the same
/// evaluation at P^2.
pub fn q_polynomial(field: &Field, d1: u32, d2: u32) -> Result<(SparsePolynomial, SparsePolynomial)> {
    let q = field.size();
    if !(q <= d1 && d1 < d2 && d2 <= 2 * (q - 1)) || congruent(q, d1, d2) {
        return Err(out_of_range(
            "degrees",
            format!("need q <= d1 < d2 <= 2(q-1), d1 != d2 mod q-1; got ({d1}, {d2})"),
        ));
    }
    let ov = |z: u32| overline(z as u64, q as u64) as u32;
    let (b1, b2) = (ov(d1), ov(d2));
    let terms = |ms: [Monomial; 4]| SparsePolynomial::from_terms(field, 3, ms.into_iter().map(|m| (m, 1)));
    let qp = terms([
        mono(0, 0, d1),
        mono(0, d1 - b2, b2),
        mono(d1 - b2, 0, b2),
        mono(d1 - b2, b2 - b1, b1),
    ])?;
    let companion = terms([
        mono(0, 0, d2),
        mono(0, d2 - b1, b1),
        mono(d2 - b1, 0, b1),
        mono(d2 - d1, d1 - b2, b2),
    ])?;
    Ok((qp, companion))
}

/// The index set Y = {0, ..., min(d1-1, d2-q)} (empty when d2 < q).
pub fn y_set(q: u32, d1: u32, d2: u32) -> Vec<u32> {
    if d2 < q {
        return Vec::new();
    }
    (0..=(d1 - 1).min(d2 - q)).collect()
}

/// Both sides of x1^{d1-a2} x2^{a2} ≡ x1^{d2-a2} x2^{a2} - x0^{d2-d̄2} x1^{d̄2-a2} x2^{a2}
/// + x0^{d2-d1} x1^{d1-a2} x2^{a2} mod I(P^2), for a2 in Y.
pub fn y_identity(field: &Field, d1: u32, d2: u32, a2: u32) -> Result<(SparsePolynomial, SparsePolynomial)> {
    let q = field.size();
    check_pair(q, d1, d2)?;
    if d1 == d2 || !y_set(q, d1, d2).contains(&a2) {
        return Err(out_of_range("a2", format!("{a2} is not in Y for ({d1}, {d2})")));
    }
    let b2 = overline(d2 as u64, q as u64) as u32;
    let lhs = SparsePolynomial::monomial(field, mono(0, d1 - a2, a2));
    let rhs = SparsePolynomial::from_terms(
        field,
        3,
        [
            (mono(0, d2 - a2, a2), 1),
            (mono(d2 - b2, b2 - a2, a2), field.neg(1)),
            (mono(d2 - d1, d1 - a2, a2), 1),
        ],
    )?;
    Ok((lhs, rhs))
}

/// Basis of S_{d1}/I(P^2) ∩ S_{d2}/I(P^2). Degrees are put in order first.
pub fn relative_hull_basis(field: &Field, d1: u32, d2: u32) -> Result<EuclidHullBasis> {
    let q = field.size();
    let (d1, d2) = ordered(d1, d2);
    check_pair(q, d1, d2)?;
    let (a1, a2, a3) = basis_ad(q, d1)?;
    let mut b = EuclidHullBasis {
        q,
        d1,
        d2,
        part_a1: a1,
        part_y: Vec::new(),
        part_q: None,
        part_rest: Vec::new(),
        congruent_case: congruent(q, d1, d2),
        dual_not_prm: d2 == q - 1,
    };
    if b.congruent_case {
        b.part_rest = a2.into_iter().chain(a3).collect();
        return Ok(b);
    }
    b.part_y = y_set(q, d1, d2).into_iter().map(|a| mono(0, d1 - a, a)).collect();
    if q <= d1 {
        b.part_q = Some(q_polynomial(field, d1, d2)?.0);
    }
    Ok(b)
}

/// dim(PRM_{d1} ∩ PRM_{d2}) by the closed form.
pub fn relative_hull_dim(q: u32, d1: u32, d2: u32) -> Result<u64> {
    let (d1, d2) = ordered(d1, d2);
    check_pair(q, d1, d2)?;
    if congruent(q, d1, d2) {
        return Ok(prm_params(q, 2, d1)?.k);
    }
    let k1 = rm_params(q, 2, d1 - 1)?.k;
    Ok(if d2 <= q - 1 {
        k1
    } else if d1 <= q - 1 {
        k1 + d1.min(d2 - (q - 1)) as u64
    } else {
        k1 + (d2 - q + 2) as u64
    })
}

/// dim(PRM_{d1} ∩ PRM_{d2}^⊥) through the reduction PRM_{d2}^⊥ = PRM_{2(q-1)-d2}.
pub fn hull_with_dual(q: u32, d1: u32, d2: u32) -> Result<u64> {
    check_pair(q, 1, d1)?;
    check_pair(q, 1, d2)?;
    if d2 == q - 1 {
        return Err(Error::DualNotPrm);
    }
    let e = 2 * (q - 1) - d2;
    if e == 0 {
        // the dual is the all-ones code, which meets no PRM_{d1}
        return Ok(0);
    }
    relative_hull_dim(q, d1, e)
}

/// Basis of PRM_d ∩ PRM_d^⊥ for 1 <= d <= q-1.
pub fn self_hull_basis(field: &Field, d: u32) -> Result<EuclidHullBasis> {
    let q = field.size();
    if d < 1 || d > q - 1 {
        return Err(out_of_range("degree", format!("need 1 <= d <= q-1, got {d}")));
    }
    relative_hull_basis(field, d, 2 * (q - 1) - d)
}

pub fn self_hull_dim(q: u32, d: u32) -> Result<u64> {
    if q < 2 || d < 1 || d > q - 1 {
        return Err(out_of_range("degree", format!("need 1 <= d <= q-1, got {d}")));
    }
    relative_hull_dim(q, d, 2 * (q - 1) - d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EuclidVerifyReport {
    pub q: u32,
    pub d1: u32,
    pub d2: u32,
    pub formula_dim: u64,
    pub basis_size: usize,
    pub oracle_dim: usize,
    pub basis_independent: bool,
    pub basis_spans: bool,
}

impl EuclidVerifyReport {
    pub fn passed(&self) -> bool {
        self.basis_spans
            && self.basis_independent
            && self.formula_dim == self.oracle_dim as u64
            && self.basis_size == self.oracle_dim
    }
}

pub fn basis_code(plane: &PrmPlane, basis: &EuclidHullBasis) -> Result<LinearCode> {
    let rows = basis
        .elements(plane.field())
        .iter()
        .map(|f| evaluate(f, plane.points()))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_rows(plane.field(), plane.points().len(), rows)
}

/// Closed form and basis against the intersection computed by elimination.
pub fn verify_relative_hull_with(plane: &PrmPlane, d1: u32, d2: u32) -> Result<EuclidVerifyReport> {
    let field = plane.field();
    let basis = relative_hull_basis(field, d1, d2)?;
    let oracle = plane.code(basis.d1)?.intersect(plane.code(basis.d2)?)?;
    let spanned = basis_code(plane, &basis)?;
    Ok(EuclidVerifyReport {
        q: field.size(),
        d1: basis.d1,
        d2: basis.d2,
        formula_dim: relative_hull_dim(field.size(), basis.d1, basis.d2)?,
        basis_size: basis.len(),
        oracle_dim: oracle.dim(),
        basis_independent: spanned.dim() == basis.len(),
        basis_spans: spanned == oracle,
    })
}

pub fn verify_relative_hull(field: &Field, d1: u32, d2: u32) -> Result<EuclidVerifyReport> {
    verify_relative_hull_with(&PrmPlane::new(field)?, d1, d2)
}

/// dim(PRM_{d1} ∩ PRM_{d2}^⊥) by elimination; valid for every d2, including q-1.
pub fn oracle_hull_dim(plane: &PrmPlane, d1: u32, d2: u32) -> Result<usize> {
    Ok(plane.code(d1)?.intersect(&plane.code(d2)?.dual())?.dim())
}

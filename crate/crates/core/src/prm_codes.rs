//! Projective and affine Reed-Muller codes: generator matrices by evaluation
//! and the closed-form parameters.

use serde::Serialize;

use crate::error::{out_of_range, Result};
use crate::finite_field::{prime_power, Elem, Field};
use crate::linear_code::LinearCode;
use crate::projective_space::{affine_points, projective_points, PointSet};
use crate::quotient_poly::{evaluate_monomial, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub wt: u64,
}

/// PRM_d^⊥ = PRM_{dual_degree}, plus the all-ones vector when flagged.
/// `dual_degree == 0` stands for PRM_0 = <(1,...,1)>.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrmDual {
    pub dual_degree: u32,
    pub extra_all_ones: bool,
}

/// C(n, r) with C(n, r) = 0 for r < 0 or r > n.
pub fn binom(n: i64, r: i64) -> i128 {
    if r < 0 || n < 0 || r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: i128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// All exponent vectors in `nvars` variables with total degree `d`, in
/// descending lex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(nvars, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(nvars, d, &mut Vec::new(), &mut out);
    }
    out
}

fn check_q(q: u32) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(out_of_range("q", format!("{q} is not a prime power")));
    }
    Ok(())
}

fn check_prm_degree(q: u32, m: u32, d: u32) -> Result<()> {
    check_q(q)?;
    if m == 0 || d < 1 || d > m * (q - 1) {
        return Err(out_of_range(
            "degree",
            format!("PRM needs 1 <= d <= m(q-1) = {}, got d={d}", m * (q - 1)),
        ));
    }
    Ok(())
}

fn check_rm_degree(q: u32, m: u32, d: u32) -> Result<()> {
    check_q(q)?;
    if m == 0 || d > m * (q - 1) {
        return Err(out_of_range(
            "degree",
            format!("RM needs 0 <= d <= m(q-1) = {}, got d={d}", m * (q - 1)),
        ));
    }
    Ok(())
}

pub fn code_from_monomials(pts: &PointSet, monos: &[Monomial]) -> Result<LinearCode> {
    let rows = monos
        .iter()
        .map(|m| evaluate_monomial(m, pts))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_rows(pts.field(), pts.len(), rows)
}

pub fn all_ones_code(field: &Field, n: usize) -> LinearCode {
    LinearCode::from_rows(field, n, vec![vec![1 as Elem; n]]).expect("single row")
}

/// PRM_d(q, m): evaluations of all degree-d forms at the points of P^m.
pub fn prm_code(field: &Field, m: u32, d: u32) -> Result<LinearCode> {
    check_prm_degree(field.size(), m, d)?;
    let pts = projective_points(field, m as usize)?;
    code_from_monomials(&pts, &monomials_of_degree(m as usize + 1, d))
}

/// RM_d(q, m): evaluations of polynomials of degree <= d at the points of A^m.
pub fn rm_code(field: &Field, m: u32, d: u32) -> Result<LinearCode> {
    let q = field.size();
    check_rm_degree(q, m, d)?;
    let pts = affine_points(field, m as usize)?;
    let monos: Vec<Monomial> = (0..=d)
        .flat_map(|t| monomials_of_degree(m as usize, t))
        .filter(|mo| mo.exponents().iter().all(|&a| a < q))
        .collect();
    code_from_monomials(&pts, &monos)
}

fn pow(q: u32, e: u32) -> u64 {
    (q as u64).pow(e)
}

pub fn prm_params(q: u32, m: u32, d: u32) -> Result<CodeParams> {
    check_prm_degree(q, m, d)?;
    let (qi, mi) = (q as i64, m as i64);
    let mut k: i128 = 0;
    let mut t = d as i64;
    while t > 0 {
        for j in 0..=mi + 1 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            k += sign * binom(mi + 1, j) * binom(t - j * qi + mi, t - j * qi);
        }
        t -= qi - 1;
    }
    let r = (d - 1) / (q - 1);
    let s = (d - 1) % (q - 1);
    Ok(CodeParams {
        n: (pow(q, m + 1) - 1) / (q as u64 - 1),
        k: k as u64,
        wt: (q - s) as u64 * pow(q, m - r - 1),
    })
}

pub fn rm_params(q: u32, m: u32, d: u32) -> Result<CodeParams> {
    check_rm_degree(q, m, d)?;
    let (qi, mi) = (q as i64, m as i64);
    let mut k: i128 = 0;
    for t in 0..=d as i64 {
        for j in 0..=mi {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            k += sign * binom(mi, j) * binom(t - j * qi + mi - 1, t - j * qi);
        }
    }
    let r = d / (q - 1);
    let s = d % (q - 1);
    let wt = if r == m {
        1
    } else {
        (q - s) as u64 * pow(q, m - r - 1)
    };
    Ok(CodeParams {
        n: pow(q, m),
        k: k as u64,
        wt,
    })
}

pub fn prm_dual_description(q: u32, m: u32, d: u32) -> Result<PrmDual> {
    check_prm_degree(q, m, d)?;
    let top = m * (q - 1);
    Ok(PrmDual {
        dual_degree: top - d,
        extra_all_ones: d % (q - 1) == 0 && d < top,
    })
}

/// Degree of RM_d^⊥; `None` when the dual is the zero code (d = m(q-1)).
pub fn rm_dual_degree(q: u32, m: u32, d: u32) -> Result<Option<u32>> {
    check_rm_degree(q, m, d)?;
    Ok((m * (q - 1)).checked_sub(d + 1))
}

/// The dual of PRM_d built from its description rather than by linear algebra.
pub fn prm_dual_code(field: &Field, m: u32, d: u32) -> Result<LinearCode> {
    let desc = prm_dual_description(field.size(), m, d)?;
    let n = projective_points(field, m as usize)?.len();
    let ones = all_ones_code(field, n);
    if desc.dual_degree == 0 {
        return Ok(ones);
    }
    let base = prm_code(field, m, desc.dual_degree)?;
    if desc.extra_all_ones {
        base.sum(&ones)
    } else {
        Ok(base)
    }
}

/// PRM_d(q, 2) for every d in 1..=2(q-1), built once over a shared point set.
#[derive(Debug, Clone)]
pub struct PrmPlane {
    points: PointSet,
    codes: Vec<LinearCode>,
}

impl PrmPlane {
    pub fn new(field: &Field) -> Result<PrmPlane> {
        let q = field.size();
        let points = projective_points(field, 2)?;
        let codes = (1..=2 * (q - 1))
            .map(|d| code_from_monomials(&points, &monomials_of_degree(3, d)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PrmPlane { points, codes })
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
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear_code::DEFAULT_CAP;

    fn gf(q: u32) -> Field {
        Field::with_size(q).unwrap()
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(-1, 0), 0);
    }

    #[test]
    fn monomial_enumeration() {
        let m: Vec<String> = monomials_of_degree(3, 2).iter().map(|x| x.to_string()).collect();
        assert_eq!(m, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
    }

    #[test]
    fn code_examples() {
        let c = prm_code(&gf(4), 2, 1).unwrap();
        assert_eq!((c.len(), c.dim()), (21, 3));
        assert_eq!(prm_code(&gf(4), 2, 4).unwrap().dim(), 15);
        let fano = prm_code(&gf(2), 2, 1).unwrap();
        assert_eq!((fano.len(), fano.dim()), (7, 3));
        assert_eq!(fano.min_weight(DEFAULT_CAP).unwrap(), 4);
        assert_eq!(rm_code(&gf(5), 2, 0).unwrap().dim(), 1);
        assert_eq!(rm_code(&gf(4), 2, 3).unwrap().dim(), 10);
        assert_eq!(rm_code(&gf(3), 2, 4).unwrap().dim(), 9);
        assert!(prm_code(&gf(4), 2, 0).is_err());
        assert!(prm_code(&gf(4), 2, 7).is_err());
        assert!(rm_code(&gf(4), 2, 7).is_err());
    }

    #[test]
    fn param_examples() {
        assert_eq!(prm_params(4, 2, 1).unwrap(), CodeParams { n: 21, k: 3, wt: 16 });
        assert_eq!(prm_params(4, 2, 5).unwrap().wt, 3);
        assert_eq!(prm_params(4, 2, 5).unwrap().k, 18);
        assert_eq!(prm_params(9, 2, 13).unwrap().wt, 5);
        assert_eq!(rm_params(9, 2, 0).unwrap(), CodeParams { n: 81, k: 1, wt: 81 });
        assert_eq!(rm_params(4, 2, 3).unwrap().k, 10);
        assert_eq!(rm_params(9, 2, 2).unwrap().k, 6);
        assert_eq!(rm_params(3, 2, 4).unwrap(), CodeParams { n: 9, k: 9, wt: 1 });
    }

    #[test]
    fn dual_examples() {
        let d = |q, dd| prm_dual_description(q, 2, dd).unwrap();
        assert_eq!(d(4, 4), PrmDual { dual_degree: 2, extra_all_ones: false });
        assert_eq!(d(4, 3), PrmDual { dual_degree: 3, extra_all_ones: true });
        assert_eq!(d(4, 6), PrmDual { dual_degree: 0, extra_all_ones: false });
        assert_eq!(rm_dual_degree(9, 2, 0).unwrap(), Some(15));
        assert_eq!(rm_dual_degree(4, 2, 5).unwrap(), Some(0));
        assert_eq!(rm_dual_degree(4, 2, 3).unwrap(), Some(2));
        assert_eq!(rm_dual_degree(4, 2, 6).unwrap(), None);
    }

    #[test]
    fn dual_description_matches_linear_algebra() {
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            for d in 1..=2 * (q - 1) {
                let c = prm_code(&f, 2, d).unwrap();
                assert_eq!(c.dual(), prm_dual_code(&f, 2, d).unwrap(), "q={q} d={d}");
            }
        }
    }

    #[test]
    fn all_ones_not_in_prm() {
        for q in [2, 3, 4, 5, 7] {
            let f = gf(q);
            let n = projective_points(&f, 2).unwrap().len();
            for d in 1..=2 * (q - 1) {
                let c = prm_code(&f, 2, d).unwrap();
                assert!(!c.contains(&vec![1; n]).unwrap(), "q={q} d={d}");
            }
        }
    }
}

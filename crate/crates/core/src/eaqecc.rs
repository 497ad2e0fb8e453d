//! Parameters of entanglement-assisted quantum codes built from PRM and RM
//! codes, by closed forms and by rank/weight computations on explicit codes.

use serde::Serialize;

use crate::error::{out_of_range, Error, Result};
use crate::finite_field::Field;
use crate::hull_herm::{affine_hermitian_hull_dim, hermitian_hull_dim};
use crate::hull_euclid::hull_with_dual;
use crate::linear_code::LinearCode;
use crate::prm_codes::{prm_code, prm_params, rm_params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    LowerBound,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Asymmetric,
    Symmetric,
    Hermitian,
    HermitianAffine,
}

/// [[n, kappa, delta_z/delta_x; c]]_q, or [[n, kappa, delta; c]]_q for the
/// symmetric and Hermitian constructions. `k1`, `k2` are the dimensions of the
/// classical codes used (equal in the Hermitian case).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EaqeccParams {
    pub construction: Construction,
    pub base_q: u32,
    pub n: u64,
    pub k1: u64,
    pub k2: u64,
    pub kappa: u64,
    pub kappa_exactness: Exactness,
    pub delta_z: Option<u64>,
    pub delta_x: Option<u64>,
    pub delta: Option<u64>,
    pub delta_exactness: Exactness,
    pub c: u64,
    pub c_exactness: Exactness,
    pub pure: Option<bool>,
    pub provenance: Provenance,
}

impl EaqeccParams {
    /// kappa = n - (k1 + k2) + c.
    pub fn kappa_consistent(&self) -> bool {
        self.n + self.c == self.kappa + self.k1 + self.k2
    }
}

/// The CSS-type construction applied to two explicit codes. Distances are
/// `None` when the enumeration budget is exceeded or the set is empty.
pub fn asym_from_codes(c1: &LinearCode, c2: &LinearCode, cap: u64) -> Result<EaqeccParams> {
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch(c1.len(), c2.len()));
    }
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    let (d1, d2) = (c1.dual(), c2.dual());
    let (k1, k2) = (c1.dim() as u64, c2.dim() as u64);
    let c = k1 - c1.intersect(&d2)?.dim() as u64;
    let n = c1.len() as u64;
    let delta_z = weight_or_none(d1.min_weight_excluding(&d1.intersect(c2)?, cap))?;
    let delta_x = weight_or_none(d2.min_weight_excluding(&d2.intersect(c1)?, cap))?;
    let full_z = weight_or_none(d1.min_weight(cap).map(Some))?;
    let full_x = weight_or_none(d2.min_weight(cap).map(Some))?;
    let pure = match (delta_z, delta_x, full_z, full_x) {
        (Some(a), Some(b), Some(fa), Some(fb)) => Some(a == fa && b == fb),
        _ => None,
    };
    Ok(EaqeccParams {
        construction: Construction::Asymmetric,
        base_q: c1.field().size(),
        n,
        k1,
        k2,
        kappa: (n + c).checked_sub(k1 + k2).ok_or(Error::Excluded("negative kappa".into()))?,
        kappa_exactness: Exactness::Exact,
        delta_z,
        delta_x,
        delta: None,
        delta_exactness: Exactness::Exact,
        c,
        c_exactness: Exactness::Exact,
        pure,
        provenance: Provenance::Oracle,
    })
}

fn weight_or_none(r: Result<Option<u32>>) -> Result<Option<u64>> {
    match r {
        Ok(w) => Ok(w.map(u64::from)),
        Err(Error::Infeasible { .. }) | Err(Error::NoNonzeroCodeword) => Ok(None),
        Err(e) => Err(e),
    }
}

fn check_q(q: u32) -> Result<()> {
    Field::with_size(q).map(|_| ())
}

fn excluded(msg: String) -> Error {
    Error::Excluded(msg)
}

/// c for the PRM pair (d1, d2), by the two-branch closed form, or by the
/// congruent-sum rules when q-1 divides d1 + d2.
fn prm_asym_c(q: u32, d1: u32, d2: u32) -> Result<u64> {
    let t = q - 1;
    let sum = d1 + d2;
    let k_prm = |d: u32| prm_params(q, 2, d).map(|p| p.k);
    if sum % t == 0 {
        return match sum / t {
            1 | 2 => Ok(0),
            _ => {
                let n = prm_params(q, 2, d1)?.n;
                Ok(k_prm(d1)? - (n - k_prm(d2)?))
            }
        };
    }
    let d2p = 2 * t - d2;
    if sum < 2 * t {
        return Ok(if d2 < t {
            (d1 + 1 - d1.min(t - d2)) as u64
        } else {
            d1 as u64 + 1
        });
    }
    let k1 = rm_params(q, 2, d1 - 1)?.k as i64;
    let k2 = rm_params(q, 2, d2p - 1)?.k as i64;
    let v = if d1 < t {
        k1 - k2 + d1 as i64 + 1
    } else {
        k1 - k2 + q as i64 + 1 - d2p.min(d1 - t) as i64
    };
    Ok(v as u64)
}

/// Asymmetric code from C1 = PRM_{d1}(q,2), C2 = PRM_{d2}(q,2).
pub fn prm_asym_eaqecc(q: u32, d1: u32, d2: u32) -> Result<EaqeccParams> {
    check_q(q)?;
    let t = q - 1;
    if d1 < 1 || d1 > d2 || d2 >= 2 * t {
        return Err(excluded(format!(
            "need 1 <= d1 <= d2 < 2(q-1) = {}, got d1={d1}, d2={d2}",
            2 * t
        )));
    }
    if d1 == t || d2 == t {
        return Err(excluded(format!("d1 and d2 must differ from q-1 = {t}")));
    }
    let c = prm_asym_c(q, d1, d2)?;
    let p1 = prm_params(q, 2, d1)?;
    let p2 = prm_params(q, 2, d2)?;
    let n = p1.n;
    Ok(EaqeccParams {
        construction: Construction::Asymmetric,
        base_q: q,
        n,
        k1: p1.k,
        k2: p2.k,
        kappa: n + c - (p1.k + p2.k),
        kappa_exactness: Exactness::Exact,
        delta_z: Some(prm_params(q, 2, 2 * t - d2)?.wt),
        delta_x: Some(prm_params(q, 2, 2 * t - d1)?.wt),
        delta: None,
        delta_exactness: Exactness::Exact,
        c,
        c_exactness: Exactness::Exact,
        pure: Some(true),
        provenance: Provenance::ClosedForm,
    })
}

/// c from the relative hull dimension, dim PRM_{d1} - dim(PRM_{d1} ∩ PRM_{d2}^⊥).
pub fn prm_asym_c_from_hull(q: u32, d1: u32, d2: u32) -> Result<u64> {
    Ok(prm_params(q, 2, d1)?.k - hull_with_dual(q, d1, d2)?)
}

/// Symmetric code with d2 = d1.
pub fn prm_symmetric_best(q: u32, d1: u32) -> Result<EaqeccParams> {
    check_q(q)?;
    let t = q - 1;
    if d1 < 1 || d1 >= 2 * t || d1 == t {
        return Err(excluded(format!(
            "need 1 <= d1 < 2(q-1) = {} and d1 != q-1, got {d1}",
            2 * t
        )));
    }
    let c = if (2 * d1) % t == 0 {
        prm_asym_c(q, d1, d1)?
    } else if d1 < t {
        (d1 + 1 - d1.min(t - d1)) as u64
    } else {
        let d1p = 2 * t - d1;
        let k1 = rm_params(q, 2, d1 - 1)?.k as i64;
        let k2 = rm_params(q, 2, d1p - 1)?.k as i64;
        (k1 - k2 + q as i64 + 1 - d1p.min(d1 - t) as i64) as u64
    };
    let p = prm_params(q, 2, d1)?;
    Ok(EaqeccParams {
        construction: Construction::Symmetric,
        base_q: q,
        n: p.n,
        k1: p.k,
        k2: p.k,
        kappa: p.n + c - 2 * p.k,
        kappa_exactness: Exactness::Exact,
        delta_z: None,
        delta_x: None,
        delta: Some(prm_params(q, 2, 2 * t - d1)?.wt),
        delta_exactness: Exactness::Exact,
        c,
        c_exactness: Exactness::Exact,
        pure: Some(true),
        provenance: Provenance::ClosedForm,
    })
}

/// c for the Hermitian construction from PRM_d(q^2,2) by the small-degree
/// rules (d <= 2(q-1)).
pub fn herm_small_c(q: u32, d: u32) -> Result<u64> {
    if q < 2 || d < 1 || d > 2 * (q - 1) {
        return Err(out_of_range("degree", format!("need 1 <= d <= 2(q-1), got {d}")));
    }
    Ok(if d % (q - 1) == 0 {
        0
    } else if d < q - 1 {
        1
    } else {
        2
    })
}

/// Hermitian construction from C = PRM_d(q^2, 2); a q-ary quantum code of
/// length q^4 + q^2 + 1.
pub fn herm_eaqecc_prm(q: u32, d: u32) -> Result<EaqeccParams> {
    check_q(q)?;
    let big = q * q - 1;
    if d == 0 || d >= big {
        return Err(excluded(format!("need 1 <= d < q^2-1 = {big}, got {d}")));
    }
    let p = prm_params(q * q, 2, d)?;
    let hull = hermitian_hull_dim(q, d)?;
    let c = p.k - hull.value;
    let ex = if hull.exact { Exactness::Exact } else { Exactness::UpperBound };
    Ok(EaqeccParams {
        construction: Construction::Hermitian,
        base_q: q,
        n: p.n,
        k1: p.k,
        k2: p.k,
        kappa: p.n + c - 2 * p.k,
        kappa_exactness: ex,
        delta_z: None,
        delta_x: None,
        delta: Some(prm_params(q * q, 2, 2 * big - d)?.wt),
        delta_exactness: Exactness::LowerBound,
        c,
        c_exactness: ex,
        pure: None,
        provenance: Provenance::ClosedForm,
    })
}

/// Hermitian construction from C = RM_d(q^2, 2); length q^4.
pub fn herm_eaqecc_rm(q: u32, d: u32) -> Result<EaqeccParams> {
    check_q(q)?;
    let big = q * q - 1;
    if d >= big {
        return Err(excluded(format!("need 0 <= d < q^2-1 = {big}, got {d}")));
    }
    let p = rm_params(q * q, 2, d)?;
    let c = if d < 2 * (q - 1) {
        0
    } else {
        p.k - affine_hermitian_hull_dim(q, d)?
    };
    Ok(EaqeccParams {
        construction: Construction::HermitianAffine,
        base_q: q,
        n: p.n,
        k1: p.k,
        k2: p.k,
        kappa: p.n + c - 2 * p.k,
        kappa_exactness: Exactness::Exact,
        delta_z: None,
        delta_x: None,
        delta: Some(rm_params(q * q, 2, 2 * big - d - 1)?.wt),
        delta_exactness: Exactness::LowerBound,
        c,
        c_exactness: Exactness::Exact,
        pure: None,
        provenance: Provenance::ClosedForm,
    })
}

/// Hermitian code by rank computations on PRM_d(q^2, 2).
pub fn herm_eaqecc_oracle(q: u32, d: u32) -> Result<EaqeccParams> {
    let field = Field::with_size(q * q)?;
    let code = prm_code(&field, 2, d)?;
    let hull = code.intersect(&code.hermitian_dual(q)?)?;
    let (n, k) = (code.len() as u64, code.dim() as u64);
    let c = k - hull.dim() as u64;
    Ok(EaqeccParams {
        construction: Construction::Hermitian,
        base_q: q,
        n,
        k1: k,
        k2: k,
        kappa: n + c - 2 * k,
        kappa_exactness: Exactness::Exact,
        delta_z: None,
        delta_x: None,
        delta: None,
        delta_exactness: Exactness::LowerBound,
        c,
        c_exactness: Exactness::Exact,
        pure: None,
        provenance: Provenance::Oracle,
    })
}

/// Printed Hermitian parameters for q = 3 and d = 1, 2, 3 as
/// (d, kappa, delta, c).
pub const PRINTED_HERM_Q3: [(u32, u64, u64, u64); 3] = [(1, 85, 3, 1), (2, 79, 4, 0), (3, 71, 5, 2)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityProbe {
    pub q: u32,
    pub d1: u32,
    pub d2: u32,
    pub wt_full: u64,
    /// None when PRM_{d1} is contained in PRM_{d2}.
    pub wt_excluding: Option<u64>,
    pub pure: Option<bool>,
}

/// wt(PRM_{d1}) against wt(PRM_{d1} \ (PRM_{d1} ∩ PRM_{d2})) by enumeration.
pub fn purity_probe(q: u32, d1: u32, d2: u32, cap: u64) -> Result<PurityProbe> {
    let field = Field::with_size(q)?;
    let top = 2 * (q - 1);
    if d1 < 1 || d2 < 1 || d1 > top || d2 > top {
        return Err(out_of_range("degrees", format!("need 1 <= d1, d2 <= {top}")));
    }
    let c1 = prm_code(&field, 2, d1)?;
    let c2 = prm_code(&field, 2, d2)?;
    purity_probe_codes(q, d1, d2, &c1, &c2, cap)
}

/// As `purity_probe`, with the two PRM codes supplied.
pub fn purity_probe_codes(
    q: u32,
    d1: u32,
    d2: u32,
    c1: &LinearCode,
    c2: &LinearCode,
    cap: u64,
) -> Result<PurityProbe> {
    let wt_full = c1.min_weight(cap)? as u64;
    let wt_excluding = c1.min_weight_excluding(&c1.intersect(c2)?, cap)?.map(u64::from);
    Ok(PurityProbe {
        q,
        d1,
        d2,
        wt_full,
        wt_excluding,
        pure: wt_excluding.map(|w| w == wt_full),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear_code::DEFAULT_CAP;

    fn brief(p: &EaqeccParams) -> (u64, u64, Option<u64>, Option<u64>, u64) {
        (p.n, p.kappa, p.delta_x, p.delta_z, p.c)
    }

    #[test]
    fn asym_examples() {
        let p = prm_asym_eaqecc(9, 3, 11).unwrap();
        assert_eq!(brief(&p), (91, 15, Some(5), Some(45), 4));
        let p = prm_asym_eaqecc(4, 1, 4).unwrap();
        assert_eq!(brief(&p), (21, 5, Some(3), Some(12), 2));
        let p = prm_asym_eaqecc(9, 1, 14).unwrap();
        assert_eq!(brief(&p), (91, 5, Some(3), Some(72), 2));
        assert!(p.kappa_consistent());
        assert!(matches!(prm_asym_eaqecc(4, 3, 4), Err(Error::Excluded(_))));
        assert!(matches!(prm_asym_eaqecc(4, 2, 6), Err(Error::Excluded(_))));
        assert!(prm_asym_eaqecc(6, 1, 1).is_err());
    }

    #[test]
    fn asym_matches_codes() {
        let f = Field::with_size(4).unwrap();
        let (c4, c5) = (prm_code(&f, 2, 4).unwrap(), prm_code(&f, 2, 5).unwrap());
        let oracle = asym_from_codes(&c5, &c4, DEFAULT_CAP).unwrap();
        let closed = prm_asym_eaqecc(4, 4, 5).unwrap();
        assert_eq!((oracle.n, oracle.kappa, oracle.c), (closed.n, closed.kappa, closed.c));
        // d1 + d2 = 3(q-1): PRM_5^⊥ = PRM_1 lies inside PRM_4, nothing is left
        assert_eq!((oracle.delta_x, oracle.delta_z), (None, None));
        let c1 = prm_code(&f, 2, 1).unwrap();
        let oracle = asym_from_codes(&c4, &c1, DEFAULT_CAP).unwrap();
        assert_eq!(brief(&oracle), brief(&prm_asym_eaqecc(4, 1, 4).unwrap()));
        assert_eq!(oracle.pure, Some(true));
        let fano = prm_code(&Field::with_size(2).unwrap(), 2, 1).unwrap();
        let p = asym_from_codes(&fano, &fano, DEFAULT_CAP).unwrap();
        assert_eq!(p.c, 3 - fano.intersect(&fano.dual()).unwrap().dim() as u64);
        // C1 inside C2^⊥
        assert_eq!(asym_from_codes(&c1, &c1, DEFAULT_CAP).unwrap().c, 1);
        assert!(c1.is_subcode_of(&c5.dual()).unwrap());
        assert_eq!(asym_from_codes(&c1, &c5, DEFAULT_CAP).unwrap().c, 0);
    }

    #[test]
    fn symmetric_examples() {
        let p = prm_symmetric_best(4, 1).unwrap();
        assert_eq!((p.delta, p.c, p.kappa), (Some(3), 1, 16));
        // 2 + 2 = q - 1, so no entanglement is needed
        assert_eq!(prm_symmetric_best(5, 2).unwrap().c, 0);
        let a = prm_asym_eaqecc(9, 2, 2).unwrap();
        let s = prm_symmetric_best(9, 2).unwrap();
        assert_eq!((a.kappa, a.c, a.delta_x), (s.kappa, s.c, s.delta));
        assert!(prm_symmetric_best(5, 4).is_err());
    }

    #[test]
    fn hermitian_examples() {
        let p = herm_eaqecc_prm(3, 2).unwrap();
        assert_eq!((p.n, p.kappa, p.delta, p.c), (91, 79, Some(4), 0));
        let p = herm_eaqecc_prm(3, 1).unwrap();
        assert_eq!((p.kappa, p.delta, p.c), (86, Some(3), 1));
        let p = herm_eaqecc_prm(3, 3).unwrap();
        assert_eq!((p.kappa, p.delta, p.c), (73, Some(5), 2));
        let p = herm_eaqecc_prm(3, 7).unwrap();
        assert_eq!((p.c, p.c_exactness), (13, Exactness::UpperBound));
        assert!(herm_eaqecc_prm(3, 8).is_err());
        for d in 1..=4 {
            assert_eq!(herm_eaqecc_prm(3, d).unwrap().c, herm_small_c(3, d).unwrap());
        }
    }

    #[test]
    fn hermitian_affine_examples() {
        let p = herm_eaqecc_rm(3, 1).unwrap();
        assert_eq!((p.n, p.kappa, p.c), (81, 75, 0));
        assert_eq!(herm_eaqecc_rm(3, 4).unwrap().c, 1);
        assert_eq!(herm_eaqecc_rm(3, 3).unwrap().c, 0);
        assert!(herm_eaqecc_rm(3, 8).is_err());
    }

    #[test]
    fn purity_examples() {
        let p = purity_probe(4, 4, 5, DEFAULT_CAP).unwrap();
        assert_eq!((p.wt_full, p.wt_excluding), (4, Some(4)));
        let p = purity_probe(4, 2, 4, DEFAULT_CAP).unwrap();
        assert_eq!((p.wt_full, p.wt_excluding), (12, Some(12)));
        // 2 and 5 agree mod q-1, so PRM_2 lies inside PRM_5
        assert_eq!(purity_probe(4, 2, 5, DEFAULT_CAP).unwrap().wt_excluding, None);
        let p = purity_probe(4, 1, 4, DEFAULT_CAP).unwrap();
        assert_eq!((p.wt_excluding, p.pure), (None, None));
    }
}

//! Canonical point enumerations of P^m and A^m over a finite field.
//!
//! The order fixed here is the column order of every evaluation code.

use crate::error::{out_of_range, Result};
use crate::finite_field::{Elem, Field};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Projective(usize),
    Affine(usize),
}

#[derive(Debug, Clone)]
pub struct PointSet {
    ambient: Ambient,
    field: Field,
    points: Vec<Vec<Elem>>,
}

const MAX_POINTS: u64 = 1 << 26;

fn lex_tuples(q: u32, len: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = (q as u64).pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut t = vec![0 as Elem; len];
        for slot in t.iter_mut().rev() {
            *slot = (idx % q as u64) as Elem;
            idx /= q as u64;
        }
        t
    })
}

fn check_size(q: u32, m: usize) -> Result<()> {
    if m == 0 {
        return Err(out_of_range("dimension", "m must be at least 1"));
    }
    match (q as u64).checked_pow(m as u32 + 1) {
        Some(n) if n <= MAX_POINTS => Ok(()),
        _ => Err(out_of_range("point set", format!("q={q}, m={m} is too large"))),
    }
}

/// Representatives of P^m with leftmost nonzero coordinate 1, chart by chart:
/// {1}×F^m, then {0}×{1}×F^{m-1}, ..., ending with (0,...,0,1).
pub fn projective_points(field: &Field, m: usize) -> Result<PointSet> {
    check_size(field.size(), m)?;
    let q = field.size();
    let mut points = Vec::new();
    for lead in 0..=m {
        for tail in lex_tuples(q, m - lead) {
            let mut p = vec![0 as Elem; lead];
            p.push(1);
            p.extend(tail);
            points.push(p);
        }
    }
    Ok(PointSet {
        ambient: Ambient::Projective(m),
        field: field.clone(),
        points,
    })
}

/// All of F^m, lexicographic with the first coordinate slowest.
pub fn affine_points(field: &Field, m: usize) -> Result<PointSet> {
    check_size(field.size(), m)?;
    Ok(PointSet {
        ambient: Ambient::Affine(m),
        field: field.clone(),
        points: lex_tuples(field.size(), m).collect(),
    })
}

impl PointSet {
    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of coordinates per point.
    pub fn arity(&self) -> usize {
        match self.ambient {
            Ambient::Projective(m) => m + 1,
            Ambient::Affine(m) => m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn sizes() {
        let f2 = Field::with_size(2).unwrap();
        assert_eq!(projective_points(&f2, 2).unwrap().len(), 7);
        let f4 = Field::with_size(4).unwrap();
        let p = projective_points(&f4, 2).unwrap();
        assert_eq!(p.len(), 21);
        assert_eq!(p.points()[0], vec![1, 0, 0]);
        assert_eq!(p.points()[20], vec![0, 0, 1]);
        assert_eq!(affine_points(&Field::with_size(9).unwrap(), 2).unwrap().len(), 81);
        assert_eq!(affine_points(&Field::with_size(3).unwrap(), 2).unwrap().len(), 9);
        assert_eq!(projective_points(&f4, 3).unwrap().len(), 85);
        assert!(projective_points(&f4, 0).is_err());
    }

    #[test]
    fn affine_order() {
        let f2 = Field::with_size(2).unwrap();
        let a = affine_points(&f2, 2).unwrap();
        assert_eq!(a.points(), &[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(a.arity(), 2);
    }

    #[test]
    fn first_chart_matches_affine_order() {
        let f = Field::with_size(5).unwrap();
        let p = projective_points(&f, 2).unwrap();
        let a = affine_points(&f, 2).unwrap();
        for (pp, ap) in p.points().iter().zip(a.points()) {
            assert_eq!(pp[0], 1);
            assert_eq!(&pp[1..], ap.as_slice());
        }
    }

    // every nonzero triple is a scalar multiple of exactly one representative
    #[test]
    fn projective_classes_partition() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Field::with_size(q).unwrap();
            let p = projective_points(&f, 2).unwrap();
            let reps: HashSet<Vec<Elem>> = p.points().iter().cloned().collect();
            assert_eq!(reps.len(), p.len());
            let mut hits = vec![0u32; p.len()];
            let index: std::collections::HashMap<_, _> =
                p.points().iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
            for t in lex_tuples(q, 3).filter(|t| t.iter().any(|&c| c != 0)) {
                let mut found = 0;
                for lambda in 1..q {
                    let s: Vec<Elem> = t.iter().map(|&c| f.mul(c, lambda as Elem)).collect();
                    if let Some(&i) = index.get(&s) {
                        hits[i] += 1;
                        found += 1;
                    }
                }
                assert_eq!(found, 1, "triple {t:?} over GF({q})");
            }
            assert!(hits.iter().all(|&h| h == q - 1));
        }
    }
}

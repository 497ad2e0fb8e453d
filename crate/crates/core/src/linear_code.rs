//! Linear codes over GF(q) held as generator matrices in reduced row-echelon
//! form, with the exact linear algebra used by every oracle check.

use rayon::prelude::*;

use crate::error::{out_of_range, Error, Result};
use crate::finite_field::{Elem, Field};

/// Default enumeration budget for minimum-weight searches.
pub const DEFAULT_CAP: u64 = 20_000_000;

/// A linear code; the RREF generator matrix is its canonical form, so two
/// codes are equal iff their matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

/// In-place RREF. Returns the pivot columns and drops zero rows.
pub fn rref(field: &Field, rows: &mut Vec<Vec<Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        if inv != 1 {
            field.scale(&mut rows[r][col..], inv);
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for other in before.iter_mut().chain(after.iter_mut()) {
            let c = other[col];
            if c != 0 {
                field.axpy(&mut other[col..], field.neg(c), &pivot_row[col..]);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a list of equal-length vectors.
pub fn rank(field: &Field, vectors: &[Vec<Elem>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    rref(field, &mut rows, first.len()).len()
}

pub fn weight(v: &[Elem]) -> u32 {
    v.iter().filter(|&&x| x != 0).count() as u32
}

// Null space basis of an RREF matrix with `ncols` columns.
fn kernel_of_rref(field: &Field, rows: &[Vec<Elem>], pivots: &[usize], ncols: usize) -> Vec<Vec<Elem>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0 as Elem; ncols];
            v[free] = 1;
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = field.neg(row[free]);
            }
            v
        })
        .collect()
}

impl LinearCode {
    /// Row space of `rows`. `n` fixes the length when `rows` is empty.
    pub fn from_rows(field: &Field, n: usize, rows: Vec<Vec<Elem>>) -> Result<LinearCode> {
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedRows);
        }
        let q = field.size();
        if rows.iter().flatten().any(|&x| x as u32 >= q) {
            return Err(out_of_range("matrix entry", format!("entries must be < {q}")));
        }
        let mut rows = rows;
        let pivots = rref(field, &mut rows, n);
        Ok(LinearCode {
            field: field.clone(),
            n,
            rows,
            pivots,
        })
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            field: field.clone(),
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        LinearCode {
            field: field.clone(),
            n,
            rows,
            pivots: (0..n).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Code length.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn dual(&self) -> LinearCode {
        let kernel = kernel_of_rref(&self.field, &self.rows, &self.pivots, self.n);
        LinearCode::from_rows(&self.field, self.n, kernel).expect("kernel rows have length n")
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        LinearCode::from_rows(&self.field, self.n, rows)
    }

    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Dual under the form sum u_i v_i^q, for a code over GF(q^2).
    pub fn hermitian_dual(&self, q: u32) -> Result<LinearCode> {
        let d = self.dual();
        let rows = d
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| self.field.frobenius(x, q)).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        LinearCode::from_rows(&self.field, self.n, rows)
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch(self.n, v.len()));
        }
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                self.field.axpy(&mut w, self.field.neg(c), row);
            }
        }
        Ok(w.iter().all(|&x| x == 0))
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        self.compatible(other)?;
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact minimum Hamming weight of a nonzero codeword.
    pub fn min_weight(&self, cap: u64) -> Result<u32> {
        if self.dim() == 0 {
            return Err(Error::NoNonzeroCodeword);
        }
        let zero = LinearCode::zero(&self.field, self.n);
        Ok(min_weight_outside(self, &zero, cap)?.expect("nonzero code"))
    }

    /// Minimum weight over codewords of `self` not in the subcode `sub`;
    /// `None` when the two codes coincide.
    pub fn min_weight_excluding(&self, sub: &LinearCode, cap: u64) -> Result<Option<u32>> {
        if !sub.is_subcode_of(self)? {
            return Err(Error::NotSubcode);
        }
        min_weight_outside(self, sub, cap)
    }
}

// Number of normalized messages: q^kd * (q^ke - 1)/(q - 1), saturating.
fn message_count(q: u64, kd: usize, ke: usize) -> u64 {
    let mut total: u64 = 0;
    for j in 0..ke {
        let free = (ke - j - 1 + kd) as u32;
        total = total.saturating_add(q.checked_pow(free).unwrap_or(u64::MAX));
    }
    total
}

fn min_weight_outside(c: &LinearCode, d: &LinearCode, cap: u64) -> Result<Option<u32>> {
    let ke = c.dim() - d.dim();
    if ke == 0 {
        return Ok(None);
    }
    let q = c.field.size() as u64;
    if message_count(q, d.dim(), ke) <= cap {
        return Ok(Some(enumerate_messages(c, d)));
    }
    support_search(c, d, cap).map(Some)
}

// Rows of `c` completing a basis of `d` to a basis of `c`.
fn complement_rows(c: &LinearCode, d: &LinearCode) -> Vec<Vec<Elem>> {
    let mut basis = d.rows.clone();
    let mut extra = Vec::new();
    let mut r = d.dim();
    for row in &c.rows {
        basis.push(row.clone());
        let mut probe = basis.clone();
        let now = rref(&c.field, &mut probe, c.n).len();
        if now > r {
            r = now;
            extra.push(row.clone());
        } else {
            basis.pop();
        }
    }
    extra
}

// Codewords e_j + sum of later complement rows + any codeword of d, where e_j is the
// first complement row with nonzero coefficient (normalized to 1).
fn enumerate_messages(c: &LinearCode, d: &LinearCode) -> u32 {
    let field = &c.field;
    let comp = complement_rows(c, d);
    let q = field.size() as Elem;
    let mut jobs = Vec::new();
    for j in 0..comp.len() {
        let free: Vec<Vec<Elem>> = comp[j + 1..].iter().chain(&d.rows).cloned().collect();
        if free.is_empty() {
            jobs.push((comp[j].clone(), free));
            continue;
        }
        // split on the first free coefficient for parallelism
        for a in 0..q {
            let mut base = comp[j].clone();
            field.axpy(&mut base, a, &free[0]);
            jobs.push((base, free[1..].to_vec()));
        }
    }
    jobs.par_iter()
        .map(|(base, free)| min_weight_coset(field, base, free))
        .min()
        .expect("at least one job")
}

// min weight over base + span(rows)
fn min_weight_coset(field: &Field, base: &[Elem], rows: &[Vec<Elem>]) -> u32 {
    if rows.is_empty() {
        return weight(base);
    }
    let n = base.len();
    let last = &rows[rows.len() - 1];
    let neg_inv_last: Vec<Elem> = last
        .iter()
        .map(|&x| if x == 0 { 0 } else { field.neg(field.inv(x).unwrap()) })
        .collect();
    let mut bufs = vec![vec![0 as Elem; n]; rows.len()];
    bufs[0].copy_from_slice(base);
    let mut best = u32::MAX;
    let mut hist = vec![0u32; field.size() as usize];
    descend(field, rows, &mut bufs, &neg_inv_last, &mut hist, &mut best);
    best
}

// bufs[0] holds the partial sum before rows[0] is added
fn descend(
    field: &Field,
    rows: &[Vec<Elem>],
    bufs: &mut [Vec<Elem>],
    neg_inv_last: &[Elem],
    hist: &mut [u32],
    best: &mut u32,
) {
    if *best == 1 {
        return;
    }
    if rows.len() == 1 {
        // weights of cur + c*last for every c at once: position i vanishes
        // exactly for c = -cur_i / last_i (or for all c when both are zero)
        let cur = &bufs[0];
        let mut always_zero = 0u32;
        hist.iter_mut().for_each(|h| *h = 0);
        for (i, &x) in cur.iter().enumerate() {
            if neg_inv_last[i] == 0 {
                if x == 0 {
                    always_zero += 1;
                }
            } else {
                hist[field.mul(x, neg_inv_last[i]) as usize] += 1;
            }
        }
        let n = cur.len() as u32;
        let most = *hist.iter().max().unwrap();
        *best = (*best).min(n - always_zero - most);
        return;
    }
    let (cur, rest) = bufs.split_first_mut().unwrap();
    for c in 0..field.size() as Elem {
        rest[0].copy_from_slice(cur);
        field.axpy(&mut rest[0], c, &rows[0]);
        descend(field, &rows[1..], rest, neg_inv_last, hist, best);
    }
}

// Smallest w such that some w coordinates support a codeword of `c` outside
// `d`. Used when message enumeration exceeds the budget; the number of
// examined supports is itself capped.
fn support_search(c: &LinearCode, d: &LinearCode, cap: u64) -> Result<u32> {
    let field = &c.field;
    let h = c.dual();
    let hd = d.dual();
    let n = c.n;
    let mut examined: u64 = 0;
    for w in 1..=n {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            examined += 1;
            if examined > cap {
                return Err(Error::Infeasible { budget: cap });
            }
            let mut sub: Vec<Vec<Elem>> = h
                .rows
                .iter()
                .map(|r| idx.iter().map(|&i| r[i]).collect())
                .collect();
            let piv = rref(field, &mut sub, w);
            if piv.len() < w {
                for kv in kernel_of_rref(field, &sub, &piv, w) {
                    let mut v = vec![0 as Elem; n];
                    for (&i, &x) in idx.iter().zip(&kv) {
                        v[i] = x;
                    }
                    if hd.rows.iter().any(|r| field.dot(r, &v) != 0) {
                        return Ok(w as u32);
                    }
                }
            }
            // next combination
            let mut i = w;
            while i > 0 && idx[i - 1] == n - w + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..w {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("c is not contained in d, so some support succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Field {
        Field::with_size(q).unwrap()
    }

    fn code(f: &Field, n: usize, rows: &[&[Elem]]) -> LinearCode {
        LinearCode::from_rows(f, n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    // brute force over every message, no normalization
    fn brute_min_weight(c: &LinearCode, d: &LinearCode) -> Option<u32> {
        let f = c.field();
        let q = f.size() as u64;
        let k = c.dim() as u32;
        let mut best = None;
        for msg in 0..q.pow(k) {
            let mut v = vec![0; c.len()];
            let mut m = msg;
            for r in c.rows() {
                f.axpy(&mut v, (m % q) as Elem, r);
                m /= q;
            }
            if !d.contains(&v).unwrap() {
                let w = weight(&v);
                best = Some(best.map_or(w, |b: u32| b.min(w)));
            }
        }
        best
    }

    #[test]
    fn construction_examples() {
        let f2 = gf(2);
        assert_eq!(code(&f2, 3, &[&[1, 1, 0], &[0, 0, 1]]).dim(), 2);
        assert_eq!(code(&f2, 2, &[&[1, 0], &[1, 0]]).dim(), 1);
        let z = LinearCode::from_rows(&f2, 5, vec![]).unwrap();
        assert_eq!(z.dim(), 0);
        assert_eq!(
            LinearCode::from_rows(&f2, 2, vec![vec![1, 0], vec![1]]),
            Err(Error::RaggedRows)
        );
        assert!(LinearCode::from_rows(&f2, 1, vec![vec![2]]).is_err());
    }

    #[test]
    fn dual_examples() {
        let f2 = gf(2);
        assert_eq!(LinearCode::full(&f2, 4).dual().dim(), 0);
        let rep = code(&f2, 3, &[&[1, 1, 1]]);
        let even = rep.dual();
        assert_eq!(even, code(&f2, 3, &[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(even.dual(), rep);
    }

    #[test]
    fn intersect_examples() {
        let f3 = gf(3);
        let c = code(&f3, 3, &[&[1, 2, 0], &[0, 1, 1]]);
        assert_eq!(c.intersect(&c).unwrap(), c);
        assert_eq!(c.intersect(&LinearCode::full(&f3, 3)).unwrap(), c);
        let a = code(&f3, 2, &[&[1, 0]]);
        let b = code(&f3, 2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert_eq!(
            a.intersect(&LinearCode::zero(&f3, 3)),
            Err(Error::LengthMismatch(2, 3))
        );
        assert_eq!(a.intersect(&code(&gf(2), 2, &[&[1, 0]])), Err(Error::FieldMismatch));
    }

    #[test]
    fn hermitian_dual_examples() {
        let f4 = gf(4);
        let sub = code(&f4, 4, &[&[1, 1, 0, 1], &[0, 1, 1, 1]]);
        assert_eq!(sub.hermitian_dual(2).unwrap(), sub.dual());
        let c = code(&f4, 4, &[&[1, 2, 3, 0], &[0, 1, 2, 2]]);
        let h = c.hermitian_dual(2).unwrap();
        assert_eq!(h.dim(), 4 - c.dim());
        assert_eq!(h.hermitian_dual(2).unwrap(), c);
        for u in h.rows() {
            for v in c.rows() {
                let s = u
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f4.add(acc, f4.mul(a, f4.pow(b, 2))));
                assert_eq!(s, 0);
            }
        }
        assert!(matches!(c.hermitian_dual(3), Err(Error::NotSquareField { .. })));
    }

    #[test]
    fn min_weight_examples() {
        let f2 = gf(2);
        assert_eq!(code(&f2, 5, &[&[1; 5]]).min_weight(DEFAULT_CAP).unwrap(), 5);
        assert_eq!(
            LinearCode::zero(&f2, 3).min_weight(DEFAULT_CAP),
            Err(Error::NoNonzeroCodeword)
        );
        // [7,4] Hamming code
        let ham = code(
            &f2,
            7,
            &[
                &[1, 0, 0, 0, 1, 1, 0],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        );
        assert_eq!(ham.min_weight(DEFAULT_CAP).unwrap(), 3);
        assert_eq!(ham.dual().min_weight(DEFAULT_CAP).unwrap(), 4);
        // support search agrees with enumeration
        let zero = LinearCode::zero(&f2, 7);
        assert_eq!(support_search(&ham, &zero, DEFAULT_CAP).unwrap(), 3);
        assert_eq!(
            ham.min_weight_excluding(&zero, DEFAULT_CAP).unwrap(),
            Some(3)
        );
        assert_eq!(ham.min_weight_excluding(&ham, DEFAULT_CAP).unwrap(), None);
        let not_sub = code(&f2, 7, &[&[1, 0, 0, 0, 0, 0, 0]]);
        assert_eq!(
            ham.min_weight_excluding(&not_sub, DEFAULT_CAP),
            Err(Error::NotSubcode)
        );
        assert!(matches!(
            LinearCode::full(&f2, 12).dual().dual().min_weight(0),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn excluding_matches_brute_force() {
        for q in [2u32, 3, 4] {
            let f = gf(q);
            let c = code(
                &f,
                6,
                &[&[1, 1, 0, 0, 1, 0], &[0, 1, 1, 0, 0, 1], &[1, 0, 0, 1, 1, 1]],
            );
            let d = code(&f, 6, &[&[1, 1, 0, 0, 1, 0]]);
            let want = brute_min_weight(&c, &d);
            assert_eq!(c.min_weight_excluding(&d, DEFAULT_CAP).unwrap(), want);
            assert_eq!(support_search(&c, &d, DEFAULT_CAP).ok(), want);
        }
    }
}

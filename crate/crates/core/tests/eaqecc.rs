use prmhull_core::eaqecc::*;
use prmhull_core::finite_field::Field;
use prmhull_core::linear_code::DEFAULT_CAP;
use prmhull_core::prm_codes::PrmPlane;

fn golden_rows() -> Vec<Vec<u64>> {
    let text = include_str!("../../../goldens/table1.csv");
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect()
}

#[test]
fn table_rows_reproduced() {
    let rows = golden_rows();
    assert_eq!(rows.len(), 52);
    for r in rows {
        let p = prm_asym_eaqecc(r[0] as u32, r[1] as u32, r[2] as u32).unwrap();
        let got = vec![r[0], r[1], r[2], p.n, p.kappa, p.delta_x.unwrap(), p.delta_z.unwrap(), p.c];
        assert_eq!(got, r);
        assert!(p.kappa_consistent());
    }
}

fn admissible(q: u32) -> Vec<(u32, u32)> {
    let t = q - 1;
    let mut out = Vec::new();
    for d1 in 1..2 * t {
        for d2 in d1..2 * t {
            if d1 != t && d2 != t {
                out.push((d1, d2));
            }
        }
    }
    out
}

#[test]
fn closed_form_c_matches_ranks() {
    for q in [3u32, 4, 5, 7, 8, 9] {
        let plane = PrmPlane::new(&Field::with_size(q).unwrap()).unwrap();
        for (d1, d2) in admissible(q) {
            let p = prm_asym_eaqecc(q, d1, d2).unwrap();
            let (c1, c2) = (plane.code(d1).unwrap(), plane.code(d2).unwrap());
            let hull = c1.intersect(&c2.dual()).unwrap().dim() as u64;
            assert_eq!(p.c, c1.dim() as u64 - hull, "q={q} d1={d1} d2={d2}");
            assert_eq!(p.c, prm_asym_c_from_hull(q, d1, d2).unwrap());
            assert!(p.kappa_consistent());
        }
    }
}

#[test]
fn symmetric_matches_asym() {
    for q in [3u32, 4, 5, 7, 8, 9] {
        for d in 1..2 * (q - 1) {
            if d == q - 1 {
                continue;
            }
            let s = prm_symmetric_best(q, d).unwrap();
            let a = prm_asym_eaqecc(q, d, d).unwrap();
            assert_eq!((s.c, s.kappa, s.delta), (a.c, a.kappa, a.delta_x), "q={q} d={d}");
        }
    }
}

#[test]
fn distances_match_enumeration_q3_q4() {
    for q in [3u32, 4] {
        let plane = PrmPlane::new(&Field::with_size(q).unwrap()).unwrap();
        for (d1, d2) in admissible(q) {
            if (d1 + d2) % (q - 1) == 0 {
                continue;
            }
            let p = prm_asym_eaqecc(q, d1, d2).unwrap();
            let o = asym_from_codes(plane.code(d2).unwrap(), plane.code(d1).unwrap(), DEFAULT_CAP).unwrap();
            assert_eq!(
                (o.n, o.kappa, o.c, o.delta_x, o.delta_z, o.pure),
                (p.n, p.kappa, p.c, p.delta_x, p.delta_z, Some(true)),
                "q={q} d1={d1} d2={d2}"
            );
        }
    }
}

#[test]
fn hermitian_closed_forms_match_ranks() {
    for q in [2u32, 3, 4] {
        for d in 1..q * q - 1 {
            let p = herm_eaqecc_prm(q, d).unwrap();
            let o = herm_eaqecc_oracle(q, d).unwrap();
            assert!(p.kappa_consistent() && o.kappa_consistent());
            if p.c_exactness == Exactness::Exact {
                assert_eq!((p.c, p.kappa), (o.c, o.kappa), "q={q} d={d}");
            } else {
                assert!(p.c >= o.c, "q={q} d={d}");
            }
            if d <= 2 * (q - 1) {
                assert_eq!(p.c, herm_small_c(q, d).unwrap());
            }
        }
    }
}

#[test]
fn purity_sweep_q3_q4() {
    for q in [3u32, 4] {
        let field = Field::with_size(q).unwrap();
        let plane = PrmPlane::new(&field).unwrap();
        let top = 2 * (q - 1);
        for d1 in 1..=top {
            for d2 in 1..=top {
                let (c1, c2) = (plane.code(d1).unwrap(), plane.code(d2).unwrap());
                let p = purity_probe_codes(q, d1, d2, c1, c2, DEFAULT_CAP).unwrap();
                if d1 % (q - 1) != d2 % (q - 1) || d2 < d1 {
                    assert_eq!(p.pure, Some(true), "{p:?}");
                } else {
                    assert_eq!(p.wt_excluding, None, "{p:?}");
                }
            }
        }
    }
}

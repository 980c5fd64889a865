//! Presenting quotients and submodules as modules in their own right, plus
//! direct sum decomposition and isomorphism testing.

use crate::arith::{self, Mat};
use crate::error::{Error, Result};
use crate::hom::{end_set, hom_set, ModuleHom};
use crate::module::{lift, reduce_rows, FinModule};
use crate::ring;
use crate::submodule::Submodule;

pub fn transpose(a: &Mat) -> Mat {
    if a.is_empty() {
        return vec![];
    }
    let rows = a.len();
    let cols = a[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j]).collect())
        .collect()
}

/// Exact integer solution of `a . x = b` per column of `b`.
fn solve_matrix(a: &Mat, b: &Mat, n: usize) -> Option<Mat> {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut xs: Vec<Vec<i128>> = Vec::with_capacity(cols);
    for j in 0..cols {
        let rhs: Vec<i128> = b.iter().map(|r| r[j]).collect();
        xs.push(arith::solve(a, &rhs, b.len(), n)?);
    }
    Some(transpose(&xs))
}

/// Rows of `u` and columns of `uinv` surviving a Smith diagonal, i.e. the
/// coordinates whose factor is not 1.
fn kept_transforms(s: &arith::Smith) -> (Vec<u64>, Mat, Mat) {
    let kept: Vec<usize> = s
        .d
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 1)
        .map(|(i, _)| i)
        .collect();
    let factors: Vec<u64> = kept.iter().map(|&i| s.d[i] as u64).collect();
    let fwd: Mat = kept.iter().map(|&i| s.u[i].clone()).collect();
    let back: Mat = s
        .uinv
        .iter()
        .map(|row| kept.iter().map(|&j| row[j]).collect())
        .collect();
    (factors, fwd, back)
}

/// Quotient module `m / l` with its projection.
pub fn quotient(m: &FinModule, l: &Submodule) -> Result<(FinModule, ModuleHom)> {
    if l.factors != m.factors {
        return Err(Error::NotSubmodule("ambient factors differ".into()));
    }
    let k = m.rank();
    let lat = transpose(&l.canon);
    let s = arith::smith(&lat, k, k);
    let (factors, fwd, back) = kept_transforms(&s);
    let action: Vec<Vec<Vec<u64>>> = m
        .action
        .iter()
        .map(|a| {
            let prod = arith::mat_mul(&arith::mat_mul(&fwd, &lift(a)), &back);
            reduce_rows(&prod, &factors)
        })
        .collect();
    let q = FinModule { ring: m.ring.clone(), factors: factors.clone(), action };
    q.verify()?;
    let proj = ModuleHom::new(m.clone(), q.clone(), reduce_rows(&fwd, &factors))?;
    Ok((q, proj))
}

/// A submodule as an abstract module with its inclusion.
pub fn submodule_as_module(m: &FinModule, sub: &Submodule) -> Result<(FinModule, ModuleHom)> {
    if sub.factors != m.factors {
        return Err(Error::NotSubmodule("ambient factors differ".into()));
    }
    let k = m.rank();
    let ht = transpose(&sub.canon);
    let mut diag = vec![vec![0i128; k]; k];
    for i in 0..k {
        diag[i][i] = m.factors[i] as i128;
    }
    let x = solve_matrix(&ht, &diag, k)
        .ok_or_else(|| Error::NotSubmodule("lattice does not contain the relations".into()))?;
    let s = arith::smith(&x, k, k);
    let (factors, fwd, back) = kept_transforms(&s);
    let action: Vec<Vec<Vec<u64>>> = m
        .action
        .iter()
        .map(|a| {
            // conjugate the ambient action into lattice coordinates
            let a_ht = arith::mat_mul(&lift(a), &ht);
            let w = solve_matrix(&ht, &a_ht, k)
                .ok_or_else(|| Error::ModuleAxiom("lattice not action invariant".into()))?;
            let prod = arith::mat_mul(&arith::mat_mul(&fwd, &w), &back);
            Ok(reduce_rows(&prod, &factors))
        })
        .collect::<Result<_>>()?;
    let sm = FinModule { ring: m.ring.clone(), factors: factors.clone(), action };
    sm.verify()?;
    let incl_int = arith::mat_mul(&ht, &back);
    let incl = ModuleHom::new(sm.clone(), m.clone(), reduce_rows(&incl_int, &m.factors))?;
    Ok((sm, incl))
}

/// Find `g` with `incl . g = f`, for injective `incl`.
pub fn factor_through(f: &ModuleHom, incl: &ModuleHom) -> Option<ModuleHom> {
    debug_assert_eq!(f.cod, incl.cod);
    let n = incl.dom.rank();
    let mods = ring::to_i128(&incl.cod.factors);
    let a = lift(&incl.matrix);
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(f.dom.rank());
    for j in 0..f.dom.rank() {
        let rhs: Vec<i128> = f.matrix.iter().map(|r| r[j] as i128).collect();
        let y = arith::congruence_particular(&a, &mods, &rhs, n)?;
        cols.push(ring::box_reduce(&incl.dom.factors, &y));
    }
    let matrix: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..f.dom.rank()).map(|j| cols[j][i]).collect())
        .collect();
    ModuleHom::new(f.dom.clone(), incl.dom.clone(), matrix).ok()
}

pub struct Piece {
    pub module: FinModule,
    pub inj: ModuleHom,
    pub proj: ModuleHom,
}

/// Split off a complementary pair along the first nontrivial idempotent
/// endomorphism, recursively. Pieces come with injections and projections
/// satisfying the usual biproduct identities.
pub fn decompose(m: &FinModule) -> Result<Vec<Piece>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let ends = end_set(m)?;
    let id = ModuleHom::identity(m);
    for e in &ends {
        if e.is_zero() || *e == id || e.compose(e) != *e {
            continue;
        }
        let rest_matrix: Vec<Vec<u64>> = id
            .matrix
            .iter()
            .zip(&e.matrix)
            .zip(&m.factors)
            .map(|((ri, re), &d)| {
                ri.iter()
                    .zip(re)
                    .map(|(&a, &b)| (a + d - b) % d)
                    .collect()
            })
            .collect();
        let rest = ModuleHom::new(m.clone(), m.clone(), rest_matrix)?;
        let mut out = Vec::new();
        for part in [e, &rest] {
            let (sub_mod, incl) = submodule_as_module(m, &part.image())?;
            let proj = factor_through(part, &incl)
                .ok_or_else(|| Error::ModuleAxiom("idempotent image projection failed".into()))?;
            for p in decompose(&sub_mod)? {
                out.push(Piece {
                    module: p.module,
                    inj: incl.compose(&p.inj),
                    proj: p.proj.compose(&proj),
                });
            }
        }
        return Ok(out);
    }
    Ok(vec![Piece { module: m.clone(), inj: id.clone(), proj: id }])
}

/// Search for an isomorphism.
pub fn is_isomorphic(a: &FinModule, b: &FinModule) -> Result<Option<ModuleHom>> {
    if a.factors != b.factors {
        return Ok(None);
    }
    if a == b {
        return Ok(Some(ModuleHom::identity(a)));
    }
    for h in hom_set(a, b)? {
        if h.is_iso() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn zmod(n: u64, fs: Vec<u64>) -> FinModule {
        FinModule::abelian(Arc::new(FiniteRing::zn(n).unwrap()), fs).unwrap()
    }

    #[test]
    fn quotient_orders_multiply() {
        let m = zmod(4, vec![2, 4]);
        for sub in crate::submodule::submodules(&m) {
            let (q, proj) = quotient(&m, &sub).unwrap();
            assert_eq!(q.order() * sub.order(), m.order());
            assert!(proj.is_surjective_map());
            assert_eq!(proj.kernel(), sub);
            q.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn quotient_by_zero_is_identity_presentation() {
        let m = zmod(4, vec![2, 4]);
        let (q, proj) = quotient(&m, &Submodule::zero_sub(&m)).unwrap();
        assert_eq!(q, m);
        assert_eq!(proj, ModuleHom::identity(&m));
    }

    #[test]
    fn submodule_presentation_round_trip() {
        let m = zmod(8, vec![2, 8]);
        for sub in crate::submodule::submodules(&m) {
            let (sm, incl) = submodule_as_module(&m, &sub).unwrap();
            assert_eq!(sm.order(), sub.order());
            assert!(incl.is_injective_map());
            assert_eq!(incl.image(), sub);
            sm.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn submodule_presentation_noncommutative() {
        let r = Arc::new(FiniteRing::upper_triangular_2(2).unwrap());
        let m = FinModule::regular(r);
        for sub in crate::submodule::submodules(&m) {
            let (sm, incl) = submodule_as_module(&m, &sub).unwrap();
            assert_eq!(sm.order(), sub.order());
            assert_eq!(incl.image(), sub);
            sm.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn decompose_abelian() {
        let m = zmod(4, vec![2, 4]);
        let pieces = decompose(&m).unwrap();
        assert_eq!(pieces.len(), 2);
        let mut orders: Vec<u64> = pieces.iter().map(|p| p.module.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 4]);
        // biproduct identities
        for (i, p) in pieces.iter().enumerate() {
            for (j, q) in pieces.iter().enumerate() {
                let c = p.proj.compose(&q.inj);
                if i == j {
                    assert_eq!(c, ModuleHom::identity(&p.module));
                } else {
                    assert!(c.is_zero());
                }
            }
        }
        let total: Vec<Vec<u64>> = (0..m.rank())
            .map(|i| {
                (0..m.rank())
                    .map(|j| {
                        pieces
                            .iter()
                            .map(|p| {
                                let comp = p.inj.compose(&p.proj);
                                comp.matrix[i][j]
                            })
                            .sum::<u64>()
                            % m.factors[i]
                    })
                    .collect()
            })
            .collect();
        assert_eq!(total, ModuleHom::identity(&m).matrix);
    }

    #[test]
    fn regular_t2f2_splits_into_projectives() {
        let r = Arc::new(FiniteRing::upper_triangular_2(2).unwrap());
        let m = FinModule::regular(r);
        let pieces = decompose(&m).unwrap();
        let mut orders: Vec<u64> = pieces.iter().map(|p| p.module.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 4]);
    }

    #[test]
    fn indecomposables_stay_whole() {
        let m = zmod(8, vec![8]);
        assert_eq!(decompose(&m).unwrap().len(), 1);
        let r = Arc::new(FiniteRing::upper_triangular_2(2).unwrap());
        let reg = FinModule::regular(r.clone());
        let e22 = Submodule::cyclic(&reg, &[0, 0, 1]);
        let (p, _) = submodule_as_module(&reg, &e22).unwrap();
        assert_eq!(decompose(&p).unwrap().len(), 1);
    }

    #[test]
    fn isomorphism_detection() {
        let a = zmod(4, vec![2, 4]);
        let b = zmod(4, vec![4, 2]);
        let iso = is_isomorphic(&a, &b).unwrap().unwrap();
        assert!(iso.is_iso());
        let c = zmod(4, vec![2, 2, 2]);
        assert!(is_isomorphic(&a, &c).unwrap().is_none());
        // same additive group, different action: Z4 regular vs 2-torsion twist
        let reg = zmod(4, vec![4]);
        let twisted = FinModule::new(
            reg.ring.clone(),
            vec![4],
            vec![vec![vec![3]]],
        );
        // x -> 3x is not an identity action module over z4 since 1 must act as 1
        assert!(twisted.is_err());
        assert!(is_isomorphic(&reg, &reg).unwrap().is_some());
    }
}

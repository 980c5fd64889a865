//! Finite left modules presented by additive invariant factors and one
//! action matrix per ring generator.

use crate::arith::{self, Mat};
use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::ring::{self, FiniteRing, DEFAULT_SIZE_BUDGET};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinModule {
    pub ring: Arc<FiniteRing>,
    /// Additive group `Z_{m_1} x ... x Z_{m_k}`, `m_i >= 2`, `m_i | m_{i+1}`.
    /// Empty for the zero module.
    pub factors: Vec<u64>,
    /// `action[t]` is the matrix of the ring generator `e_t`; entries in row
    /// `i` live mod `m_i`.
    pub action: Vec<Vec<Vec<u64>>>,
}

pub fn reduce_rows(m: &Mat, factors: &[u64]) -> Vec<Vec<u64>> {
    m.iter()
        .zip(factors)
        .map(|(row, &d)| row.iter().map(|&x| x.rem_euclid(d as i128) as u64).collect())
        .collect()
}

pub fn lift(m: &[Vec<u64>]) -> Mat {
    m.iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect()
}

impl FinModule {
    pub fn new(
        ring: Arc<FiniteRing>,
        factors: Vec<u64>,
        action: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self> {
        let k = factors.len();
        if action.len() != ring.rank() {
            return Err(Error::ModuleAxiom(
                "need one action matrix per ring generator".into(),
            ));
        }
        if action.iter().any(|a| a.len() != k || a.iter().any(|r| r.len() != k)) {
            return Err(Error::ModuleAxiom("action matrices must be k x k".into()));
        }
        if factors.iter().any(|&d| d == 0) {
            return Err(Error::ModuleAxiom("additive factors must be positive".into()));
        }
        let m = match arith::normalize_box(&factors) {
            None => {
                let action = action
                    .iter()
                    .map(|a| reduce_rows(&lift(a), &factors))
                    .collect();
                FinModule { ring, factors, action }
            }
            Some(t) => {
                let action = action
                    .iter()
                    .map(|a| {
                        let prod = arith::mat_mul(&arith::mat_mul(&t.fwd, &lift(a)), &t.back);
                        reduce_rows(&prod, &t.new_factors)
                    })
                    .collect();
                FinModule { ring, factors: t.new_factors, action }
            }
        };
        m.verify()?;
        Ok(m)
    }

    pub fn zero_module(ring: Arc<FiniteRing>) -> FinModule {
        let g = ring.rank();
        FinModule { ring, factors: vec![], action: vec![vec![]; g] }
    }

    /// The ring as a left module over itself.
    pub fn regular(ring: Arc<FiniteRing>) -> FinModule {
        let k = ring.rank();
        let action = (0..k)
            .map(|t| {
                (0..k)
                    .map(|i| (0..k).map(|j| ring.mult[t][j][i]).collect())
                    .collect()
            })
            .collect();
        FinModule { ring: ring.clone(), factors: ring.factors.clone(), action }
    }

    /// `Hom_Z(R, Q/Z)` with `(r.f)(s) = f(sr)`, an injective cogenerator.
    pub fn character_module(ring: Arc<FiniteRing>) -> FinModule {
        let k = ring.rank();
        let d = &ring.factors;
        let action = (0..k)
            .map(|t| {
                (0..k)
                    .map(|j| {
                        (0..k)
                            .map(|l| {
                                let num = d[j] as u128 * ring.mult[j][t][l] as u128;
                                ((num / d[l] as u128) % d[j] as u128) as u64
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        FinModule { ring: ring.clone(), factors: ring.factors.clone(), action }
    }

    /// For commutative `z<n>` style rings: the abelian group with the scalar
    /// action of the single generator being the identity.
    pub fn abelian(ring: Arc<FiniteRing>, factors: Vec<u64>) -> Result<FinModule> {
        if ring.rank() != 1 {
            return Err(Error::InvalidParameter(
                "abelian constructor needs a cyclic ring".into(),
            ));
        }
        let k = factors.len();
        let id = arith::identity(k);
        FinModule::new(ring, factors.clone(), vec![reduce_rows(&id, &factors)])
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.rank()]
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        ring::box_elements(&self.factors)
    }

    pub fn reduce(&self, v: &[i128]) -> Vec<u64> {
        ring::box_reduce(&self.factors, v)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x % d) % d)
            .collect()
    }

    pub fn act_gen(&self, t: usize, x: &[u64]) -> Vec<u64> {
        self.action[t]
            .iter()
            .zip(&self.factors)
            .map(|(row, &d)| {
                let s: u128 = row.iter().zip(x).map(|(&a, &v)| a as u128 * v as u128).sum();
                (s % d as u128) as u64
            })
            .collect()
    }

    pub fn smul(&self, r: &[u64], x: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u128; self.rank()];
        for (t, &rt) in r.iter().enumerate() {
            if rt == 0 {
                continue;
            }
            for (i, row) in self.action[t].iter().enumerate() {
                let s: u128 = row.iter().zip(x).map(|(&a, &v)| a as u128 * v as u128).sum();
                acc[i] += rt as u128 * s;
            }
        }
        acc.iter()
            .zip(&self.factors)
            .map(|(&v, &d)| (v % d as u128) as u64)
            .collect()
    }

    /// Integer matrix of the action of the ring element `r`.
    pub fn action_matrix(&self, r: &[u64]) -> Mat {
        let k = self.rank();
        let mut out = vec![vec![0i128; k]; k];
        for (t, &rt) in r.iter().enumerate() {
            if rt == 0 {
                continue;
            }
            for i in 0..k {
                for j in 0..k {
                    out[i][j] += rt as i128 * self.action[t][i][j] as i128;
                }
            }
        }
        for (row, &d) in out.iter_mut().zip(&self.factors) {
            for x in row {
                *x = x.rem_euclid(d as i128);
            }
        }
        out
    }

    pub fn verify(&self) -> Result<()> {
        let k = self.rank();
        if !arith::box_is_canonical(&self.factors) {
            return Err(Error::ModuleAxiom(
                "additive factors must be >= 2 in ascending divisibility order".into(),
            ));
        }
        if self.order() > DEFAULT_SIZE_BUDGET {
            return Err(Error::Budget(format!(
                "module order {} exceeds {}",
                self.order(),
                DEFAULT_SIZE_BUDGET
            )));
        }
        if self.action.len() != self.ring.rank() {
            return Err(Error::ModuleAxiom(
                "need one action matrix per ring generator".into(),
            ));
        }
        for (t, a) in self.action.iter().enumerate() {
            if a.len() != k || a.iter().any(|r| r.len() != k) {
                return Err(Error::ModuleAxiom("action matrices must be k x k".into()));
            }
            let dt = self.ring.factors[t];
            for i in 0..k {
                for j in 0..k {
                    let c = a[i][j];
                    if c >= self.factors[i] {
                        return Err(Error::ModuleAxiom("action entry out of range".into()));
                    }
                    // column j only defined mod m_j; generator killed by d_t
                    if (c as u128 * self.factors[j] as u128) % self.factors[i] as u128 != 0
                        || (c as u128 * dt as u128) % self.factors[i] as u128 != 0
                    {
                        return Err(Error::ModuleAxiom(format!(
                            "action of generator {} not well defined",
                            t
                        )));
                    }
                }
            }
        }
        let id_act = self.action_matrix(&self.ring.one);
        if reduce_rows(&id_act, &self.factors) != reduce_rows(&arith::identity(k), &self.factors) {
            return Err(Error::ModuleAxiom("ring identity does not act as identity".into()));
        }
        let g = self.ring.rank();
        for s in 0..g {
            for t in 0..g {
                let lhs = self.action_matrix(&self.ring.mult[s][t]);
                let rhs = arith::mat_mul(&lift(&self.action[s]), &lift(&self.action[t]));
                if reduce_rows(&lhs, &self.factors) != reduce_rows(&rhs, &self.factors) {
                    return Err(Error::ModuleAxiom(format!(
                        "action incompatible with ring multiplication at ({}, {})",
                        s, t
                    )));
                }
            }
        }
        Ok(())
    }

    /// Axiom sweep over all scalar/element combinations. Oracle for small
    /// modules; cost is `|R|^2 |M|`.
    pub fn verify_exhaustive(&self) -> Result<()> {
        if self.ring.order() * self.ring.order() * self.order() > 1 << 22 {
            return Err(Error::Budget("exhaustive module check too large".into()));
        }
        let els = self.elements();
        let rels = self.ring.elements();
        for x in &els {
            if self.smul(&self.ring.one, x) != *x {
                return Err(Error::ModuleAxiom("1.x != x".into()));
            }
            for r in &rels {
                for s in &rels {
                    if self.smul(&self.ring.mul(r, s), x) != self.smul(r, &self.smul(s, x)) {
                        return Err(Error::ModuleAxiom("(rs).x != r.(s.x)".into()));
                    }
                    if self.smul(&self.ring.add(r, s), x)
                        != self.add(&self.smul(r, x), &self.smul(s, x))
                    {
                        return Err(Error::ModuleAxiom("(r+s).x != r.x + s.x".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

pub struct DirectSum {
    pub module: FinModule,
    pub inj: Vec<ModuleHom>,
    pub proj: Vec<ModuleHom>,
}

/// Direct sum with the canonical injections and projections.
pub fn direct_sum(parts: &[&FinModule]) -> Result<DirectSum> {
    let ring = match parts.first() {
        Some(m) => m.ring.clone(),
        None => return Err(Error::InvalidParameter("direct sum of no parts".into())),
    };
    if parts.iter().any(|m| m.ring != ring) {
        return Err(Error::RingMismatch);
    }
    let g = ring.rank();
    let mut factors: Vec<u64> = Vec::new();
    let mut offsets = Vec::new();
    for p in parts {
        offsets.push(factors.len());
        factors.extend_from_slice(&p.factors);
    }
    let k = factors.len();
    let mut action = vec![vec![vec![0u64; k]; k]; g];
    for (pi, p) in parts.iter().enumerate() {
        let o = offsets[pi];
        for t in 0..g {
            for i in 0..p.rank() {
                for j in 0..p.rank() {
                    action[t][o + i][o + j] = p.action[t][i][j];
                }
            }
        }
    }
    let (fwd, back, new_factors) = match arith::normalize_box(&factors) {
        None => (arith::identity(k), arith::identity(k), factors.clone()),
        Some(t) => (t.fwd, t.back, t.new_factors),
    };
    let new_action = action
        .iter()
        .map(|a| {
            let prod = arith::mat_mul(&arith::mat_mul(&fwd, &lift(a)), &back);
            reduce_rows(&prod, &new_factors)
        })
        .collect();
    let module = FinModule { ring, factors: new_factors.clone(), action: new_action };
    module.verify()?;
    let mut inj = Vec::new();
    let mut proj = Vec::new();
    for (pi, p) in parts.iter().enumerate() {
        let o = offsets[pi];
        let pk = p.rank();
        let inj_m: Vec<Vec<u64>> = (0..module.rank())
            .map(|i| (0..pk).map(|j| fwd[i][o + j].rem_euclid(new_factors[i] as i128) as u64).collect())
            .collect();
        let proj_m: Vec<Vec<u64>> = (0..pk)
            .map(|i| {
                (0..module.rank())
                    .map(|j| back[o + i][j].rem_euclid(p.factors[i] as i128) as u64)
                    .collect()
            })
            .collect();
        inj.push(ModuleHom::new((*p).clone(), module.clone(), inj_m)?);
        proj.push(ModuleHom::new(module.clone(), (*p).clone(), proj_m)?);
    }
    Ok(DirectSum { module, inj, proj })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::zn(n).unwrap())
    }

    #[test]
    fn regular_module_axioms() {
        for name in ["z4", "z6", "z4xz4", "t2f2"] {
            let r = Arc::new(FiniteRing::builtin(name).unwrap().unwrap());
            let m = FinModule::regular(r);
            m.verify().unwrap();
            m.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn character_module_axioms() {
        for name in ["z4", "z6", "z4xz4", "t2f2", "t2f3"] {
            let r = Arc::new(FiniteRing::builtin(name).unwrap().unwrap());
            let m = FinModule::character_module(r);
            m.verify().unwrap();
            m.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn zero_module_ok() {
        let m = FinModule::zero_module(zn(4));
        m.verify().unwrap();
        assert_eq!(m.order(), 1);
        assert_eq!(m.elements(), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn normalization_collapses_ones() {
        let r = zn(4);
        let m = FinModule::new(r, vec![1, 2, 1], vec![vec![
            vec![0, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 0],
        ]])
        .unwrap();
        assert_eq!(m.factors, vec![2]);
        m.verify_exhaustive().unwrap();
    }

    #[test]
    fn abelian_rejects_bad_scalars() {
        // Z_8 is not a Z_4 module
        assert!(FinModule::abelian(zn(4), vec![8]).is_err());
        let m = FinModule::abelian(zn(4), vec![2, 4]).unwrap();
        m.verify_exhaustive().unwrap();
    }

    #[test]
    fn direct_sum_round_trip() {
        let r = zn(4);
        let a = FinModule::abelian(r.clone(), vec![2]).unwrap();
        let b = FinModule::abelian(r.clone(), vec![4]).unwrap();
        let s = direct_sum(&[&a, &b]).unwrap();
        assert_eq!(s.module.factors, vec![2, 4]);
        s.module.verify_exhaustive().unwrap();
        for x in a.elements() {
            assert_eq!(s.proj[0].eval(&s.inj[0].eval(&x)), x);
            assert_eq!(s.proj[1].eval(&s.inj[0].eval(&x)), b.zero());
        }
    }

    #[test]
    fn direct_sum_cyclic_merge() {
        // Z2 + Z3 over Z6 renormalizes to Z6
        let r = zn(6);
        let a = FinModule::abelian(r.clone(), vec![2]).unwrap();
        let b = FinModule::abelian(r.clone(), vec![3]).unwrap();
        let s = direct_sum(&[&a, &b]).unwrap();
        assert_eq!(s.module.factors, vec![6]);
        s.module.verify_exhaustive().unwrap();
        for x in a.elements() {
            for y in b.elements() {
                let z = s.module.add(&s.inj[0].eval(&x), &s.inj[1].eval(&y));
                assert_eq!(s.proj[0].eval(&z), x);
                assert_eq!(s.proj[1].eval(&z), y);
            }
        }
    }

    #[test]
    fn noncommutative_regular_action() {
        let r = Arc::new(FiniteRing::upper_triangular_2(2).unwrap());
        let m = FinModule::regular(r.clone());
        // e11 . e12 = e12 but e12 . e11... regular module is left action: r.x = rx
        let e11 = vec![1, 0, 0];
        let e12 = vec![0, 1, 0];
        assert_eq!(m.smul(&e11, &e12), vec![0, 1, 0]);
        assert_eq!(m.smul(&e12, &e11), vec![0, 0, 0]);
    }
}

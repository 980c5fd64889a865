//! Finite unital rings presented by additive invariant factors plus
//! multiplication structure constants on the additive generators.

use crate::arith;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest module (and ring) cardinality the engine will build.
pub const DEFAULT_SIZE_BUDGET: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteRing {
    pub name: String,
    /// Additive group `Z_{d_1} x ... x Z_{d_k}`, `d_i >= 2`, `d_i | d_{i+1}`.
    #[serde(rename = "invariant_factors")]
    pub factors: Vec<u64>,
    /// `mult[i][j]` holds the coordinates of `e_i * e_j`.
    #[serde(rename = "mult_table")]
    pub mult: Vec<Vec<Vec<u64>>>,
    pub one: Vec<u64>,
}

impl FiniteRing {
    pub fn new(
        name: &str,
        factors: Vec<u64>,
        mult: Vec<Vec<Vec<u64>>>,
        one: Vec<u64>,
    ) -> Result<Self> {
        let k = factors.len();
        if factors.iter().any(|&d| d < 1) {
            return Err(Error::RingAxiom("additive factors must be positive".into()));
        }
        if mult.len() != k || mult.iter().any(|r| r.len() != k || r.iter().any(|v| v.len() != k)) {
            return Err(Error::RingAxiom("mult table must be k x k x k".into()));
        }
        if one.len() != k {
            return Err(Error::RingAxiom("identity element has wrong length".into()));
        }
        let ring = match arith::normalize_box(&factors) {
            None => {
                let reduce = |v: &[u64]| -> Vec<u64> {
                    v.iter().zip(&factors).map(|(&x, &d)| x % d).collect()
                };
                let mult = mult
                    .iter()
                    .map(|row| row.iter().map(|v| reduce(v)).collect())
                    .collect();
                let one = reduce(&one);
                FiniteRing { name: name.to_string(), factors, mult, one }
            }
            Some(t) => {
                let kn = t.new_factors.len();
                if kn == 0 {
                    return Err(Error::RingAxiom("the zero ring is rejected".into()));
                }
                let to_new = |v: &[i128]| -> Vec<u64> {
                    let y = arith::mat_vec(&t.fwd, v);
                    y.iter()
                        .zip(&t.new_factors)
                        .map(|(&x, &m)| x.rem_euclid(m as i128) as u64)
                        .collect()
                };
                let basis: Vec<Vec<i128>> = (0..kn)
                    .map(|i| (0..k).map(|r| t.back[r][i]).collect())
                    .collect();
                let raw_mul = |a: &[i128], b: &[i128]| -> Vec<i128> {
                    let mut acc = vec![0i128; k];
                    for (p, &ap) in a.iter().enumerate() {
                        if ap == 0 {
                            continue;
                        }
                        for (q, &bq) in b.iter().enumerate() {
                            if bq == 0 {
                                continue;
                            }
                            for (l, &c) in mult[p][q].iter().enumerate() {
                                acc[l] += ap * bq * c as i128;
                            }
                        }
                    }
                    acc
                };
                let new_mult: Vec<Vec<Vec<u64>>> = (0..kn)
                    .map(|i| {
                        (0..kn)
                            .map(|j| to_new(&raw_mul(&basis[i], &basis[j])))
                            .collect()
                    })
                    .collect();
                let one_i: Vec<i128> = one.iter().map(|&x| x as i128).collect();
                let new_one = to_new(&one_i);
                FiniteRing {
                    name: name.to_string(),
                    factors: t.new_factors,
                    mult: new_mult,
                    one: new_one,
                }
            }
        };
        ring.verify()?;
        Ok(ring)
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.rank()]
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        box_elements(&self.factors)
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

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.rank();
        let mut acc = vec![0u128; k];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let coeff = ai as u128 * bj as u128;
                for (l, &c) in self.mult[i][j].iter().enumerate() {
                    acc[l] += coeff * c as u128;
                }
            }
        }
        acc.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (x % d as u128) as u64)
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..k).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Structural checks: canonical additive shape, well-defined bilinear
    /// multiplication, associativity on generators, two-sided identity.
    pub fn verify(&self) -> Result<()> {
        let k = self.rank();
        if k == 0 {
            return Err(Error::RingAxiom("the zero ring is rejected".into()));
        }
        if !arith::box_is_canonical(&self.factors) {
            return Err(Error::RingAxiom(
                "additive factors must be >= 2 in ascending divisibility order".into(),
            ));
        }
        if self.order() > DEFAULT_SIZE_BUDGET {
            return Err(Error::Budget(format!(
                "ring order {} exceeds {}",
                self.order(),
                DEFAULT_SIZE_BUDGET
            )));
        }
        for i in 0..k {
            for j in 0..k {
                let m = &self.mult[i][j];
                for (l, &c) in m.iter().enumerate() {
                    if c >= self.factors[l] {
                        return Err(Error::RingAxiom("mult table entry out of range".into()));
                    }
                    // d_i * (e_i e_j) = (d_i e_i) e_j = 0, and symmetrically
                    if (self.factors[i] as u128 * c as u128) % self.factors[l] as u128 != 0
                        || (self.factors[j] as u128 * c as u128) % self.factors[l] as u128 != 0
                    {
                        return Err(Error::RingAxiom(format!(
                            "multiplication not well defined at e_{} * e_{}",
                            i, j
                        )));
                    }
                }
            }
        }
        let e = |i: usize| -> Vec<u64> {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        };
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = self.mul(&self.mult[i][j], &e(l));
                    let right = self.mul(&e(i), &self.mult[j][l]);
                    if left != right {
                        return Err(Error::RingAxiom(format!(
                            "associativity fails at generators ({}, {}, {})",
                            i, j, l
                        )));
                    }
                }
            }
        }
        for j in 0..k {
            if self.mul(&self.one, &e(j)) != e(j) || self.mul(&e(j), &self.one) != e(j) {
                return Err(Error::RingAxiom("identity element fails".into()));
            }
        }
        Ok(())
    }

    /// Full associativity and distributivity sweep over all element triples.
    /// Intended as an oracle for small rings; cost grows with `|R|^3`.
    pub fn verify_exhaustive(&self) -> Result<()> {
        let n = self.order();
        if n > 64 {
            return Err(Error::Budget(format!(
                "exhaustive ring check limited to order 64, got {}",
                n
            )));
        }
        let els = self.elements();
        for a in &els {
            for b in &els {
                for c in &els {
                    if self.mul(&self.mul(a, b), c) != self.mul(a, &self.mul(b, c)) {
                        return Err(Error::RingAxiom("associativity fails".into()));
                    }
                    if self.mul(a, &self.add(b, c)) != self.add(&self.mul(a, b), &self.mul(a, c)) {
                        return Err(Error::RingAxiom("left distributivity fails".into()));
                    }
                    if self.mul(&self.add(a, b), c) != self.add(&self.mul(a, c), &self.mul(b, c)) {
                        return Err(Error::RingAxiom("right distributivity fails".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zn(n: u64) -> Result<FiniteRing> {
        if n < 2 {
            return Err(Error::InvalidParameter("zn requires n >= 2".into()));
        }
        FiniteRing::new(&format!("z{}", n), vec![n], vec![vec![vec![1 % n]]], vec![1 % n])
    }

    pub fn product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
        let ka = a.rank();
        let kb = b.rank();
        let k = ka + kb;
        let mut factors = a.factors.clone();
        factors.extend_from_slice(&b.factors);
        let embed_a = |v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; k];
            out[..ka].copy_from_slice(v);
            out
        };
        let embed_b = |v: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; k];
            out[ka..].copy_from_slice(v);
            out
        };
        let mut mult = vec![vec![vec![0u64; k]; k]; k];
        for i in 0..ka {
            for j in 0..ka {
                mult[i][j] = embed_a(&a.mult[i][j]);
            }
        }
        for i in 0..kb {
            for j in 0..kb {
                mult[ka + i][ka + j] = embed_b(&b.mult[i][j]);
            }
        }
        let mut one = embed_a(&a.one);
        for (i, &v) in b.one.iter().enumerate() {
            one[ka + i] = v;
        }
        FiniteRing::new(&format!("{}x{}", a.name, b.name), factors, mult, one)
    }

    /// Upper triangular 2x2 matrices over the prime field `F_p`.
    /// Additive basis: `e11, e12, e22`.
    pub fn upper_triangular_2(p: u64) -> Result<FiniteRing> {
        if p < 2 || (2..p).any(|d| d * d <= p && p % d == 0) {
            return Err(Error::InvalidParameter(format!("{} is not prime", p)));
        }
        let z = || vec![0u64, 0, 0];
        let e11 = vec![1u64, 0, 0];
        let e12 = vec![0u64, 1, 0];
        let e22 = vec![0u64, 0, 1];
        let mult = vec![
            vec![e11.clone(), e12.clone(), z()],
            vec![z(), z(), e12.clone()],
            vec![z(), z(), e22.clone()],
        ];
        FiniteRing::new(&format!("t2f{}", p), vec![p, p, p], mult, vec![1, 0, 1])
    }

    /// Resolve a builtin ring name: `z<n>`, `z<n>xz<m>`, `t2f<p>`.
    pub fn builtin(name: &str) -> Option<Result<FiniteRing>> {
        if let Some(rest) = name.strip_prefix("t2f") {
            if let Ok(p) = rest.parse::<u64>() {
                return Some(FiniteRing::upper_triangular_2(p));
            }
            return None;
        }
        if let Some(rest) = name.strip_prefix('z') {
            if let Some((n, m)) = rest.split_once("xz") {
                if let (Ok(n), Ok(m)) = (n.parse::<u64>(), m.parse::<u64>()) {
                    return Some(
                        FiniteRing::zn(n).and_then(|a| {
                            FiniteRing::zn(m).and_then(|b| FiniteRing::product(&a, &b))
                        }),
                    );
                }
                return None;
            }
            if let Ok(n) = rest.parse::<u64>() {
                return Some(FiniteRing::zn(n));
            }
        }
        None
    }

    pub fn builtin_names() -> Vec<&'static str> {
        vec!["z<n>", "z<n>xz<m>", "t2f<p>"]
    }
}

/// All vectors of the box `prod Z_{factors[i]}` in lexicographic order.
pub fn box_elements(factors: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &d in factors {
        let mut next = Vec::with_capacity(out.len() * d as usize);
        for v in &out {
            for x in 0..d {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Reduce an integer vector into the box.
pub fn box_reduce(factors: &[u64], v: &[i128]) -> Vec<u64> {
    v.iter()
        .zip(factors)
        .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
        .collect()
}

pub fn to_i128(v: &[u64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_basics() {
        let r = FiniteRing::zn(4).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.mul(&[3], &[3]), vec![1]);
        r.verify_exhaustive().unwrap();
        assert!(FiniteRing::zn(1).is_err());
    }

    #[test]
    fn product_crt_normalizes() {
        let a = FiniteRing::zn(2).unwrap();
        let b = FiniteRing::zn(3).unwrap();
        let p = FiniteRing::product(&a, &b).unwrap();
        assert_eq!(p.factors, vec![6]);
        p.verify_exhaustive().unwrap();
        // (1,1) is the identity and must be a unit of additive order 6
        assert_eq!(p.mul(&p.one, &p.one), p.one);
    }

    #[test]
    fn z4xz4_is_canonical() {
        let r = FiniteRing::builtin("z4xz4").unwrap().unwrap();
        assert_eq!(r.factors, vec![4, 4]);
        assert_eq!(r.order(), 16);
        r.verify_exhaustive().unwrap();
        assert!(r.is_commutative());
    }

    #[test]
    fn upper_triangular_basics() {
        let r = FiniteRing::upper_triangular_2(2).unwrap();
        assert_eq!(r.order(), 8);
        r.verify_exhaustive().unwrap();
        assert!(!r.is_commutative());
        // e12 * e12 = 0, e11 * e22 = 0
        assert_eq!(r.mul(&[0, 1, 0], &[0, 1, 0]), vec![0, 0, 0]);
        assert_eq!(r.mul(&[1, 0, 0], &[0, 0, 1]), vec![0, 0, 0]);
        assert!(FiniteRing::upper_triangular_2(4).is_err());
    }

    #[test]
    fn builtin_parsing() {
        assert!(FiniteRing::builtin("z8").unwrap().is_ok());
        assert!(FiniteRing::builtin("z4xz2").unwrap().is_ok());
        assert!(FiniteRing::builtin("t2f3").unwrap().is_ok());
        assert!(FiniteRing::builtin("q8").is_none());
    }

    #[test]
    fn broken_mult_table_rejected() {
        // e*e = e with e of additive order 4 but claiming value of order 2 slot
        let bad = FiniteRing::new(
            "bad",
            vec![2, 4],
            vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 1], vec![1, 0]],
            ],
            vec![1, 1],
        );
        assert!(bad.is_err());
    }
}

//! Module homomorphisms as matrices, and complete hom set enumeration.

use crate::arith::{self, Mat};
use crate::error::{Error, Result};
use crate::module::{lift, reduce_rows, FinModule};
use crate::submodule::Submodule;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleHom {
    pub dom: FinModule,
    pub cod: FinModule,
    /// `cod.rank() x dom.rank()`, row `i` reduced mod `cod.factors[i]`.
    pub matrix: Vec<Vec<u64>>,
}

impl ModuleHom {
    pub fn new(dom: FinModule, cod: FinModule, matrix: Vec<Vec<u64>>) -> Result<Self> {
        if dom.ring != cod.ring {
            return Err(Error::RingMismatch);
        }
        if matrix.len() != cod.rank() || matrix.iter().any(|r| r.len() != dom.rank()) {
            return Err(Error::ModuleAxiom("hom matrix has wrong shape".into()));
        }
        let matrix = reduce_rows(&lift(&matrix), &cod.factors);
        let h = ModuleHom { dom, cod, matrix };
        h.verify()?;
        Ok(h)
    }

    pub(crate) fn unchecked(dom: FinModule, cod: FinModule, matrix: Vec<Vec<u64>>) -> Self {
        let h = ModuleHom { dom, cod, matrix };
        debug_assert!(h.verify().is_ok());
        h
    }

    pub fn verify(&self) -> Result<()> {
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c >= self.cod.factors[i] {
                    return Err(Error::ModuleAxiom("hom entry out of range".into()));
                }
                if (c as u128 * self.dom.factors[j] as u128) % self.cod.factors[i] as u128 != 0 {
                    return Err(Error::ModuleAxiom("hom not well defined".into()));
                }
            }
        }
        let f = lift(&self.matrix);
        for t in 0..self.dom.ring.rank() {
            let fa = arith::mat_mul(&f, &lift(&self.dom.action[t]));
            let bf = arith::mat_mul(&lift(&self.cod.action[t]), &f);
            if reduce_rows(&fa, &self.cod.factors) != reduce_rows(&bf, &self.cod.factors) {
                return Err(Error::ModuleAxiom(format!(
                    "hom does not commute with generator {}",
                    t
                )));
            }
        }
        Ok(())
    }

    pub fn identity(m: &FinModule) -> ModuleHom {
        let id = reduce_rows(&arith::identity(m.rank()), &m.factors);
        ModuleHom { dom: m.clone(), cod: m.clone(), matrix: id }
    }

    pub fn zero_hom(dom: &FinModule, cod: &FinModule) -> ModuleHom {
        ModuleHom {
            dom: dom.clone(),
            cod: cod.clone(),
            matrix: vec![vec![0; dom.rank()]; cod.rank()],
        }
    }

    pub fn eval(&self, x: &[u64]) -> Vec<u64> {
        self.matrix
            .iter()
            .zip(&self.cod.factors)
            .map(|(row, &d)| {
                let s: u128 = row.iter().zip(x).map(|(&a, &v)| a as u128 * v as u128).sum();
                (s % d as u128) as u64
            })
            .collect()
    }

    /// `self` after `f`, i.e. the map `x -> self(f(x))`.
    pub fn compose(&self, f: &ModuleHom) -> ModuleHom {
        debug_assert_eq!(self.dom, f.cod);
        let rows = self.cod.rank();
        let mid = self.dom.rank();
        let cols = f.dom.rank();
        let mut out = vec![vec![0u64; cols]; rows];
        for i in 0..rows {
            let d = self.cod.factors[i] as u128;
            for j in 0..cols {
                let mut s: u128 = 0;
                for l in 0..mid {
                    s += self.matrix[i][l] as u128 * f.matrix[l][j] as u128;
                }
                out[i][j] = (s % d) as u64;
            }
        }
        ModuleHom { dom: f.dom.clone(), cod: self.cod.clone(), matrix: out }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&x| x == 0)
    }

    /// Pointwise sum of two homs with identical endpoints.
    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        debug_assert_eq!(self.dom, other.dom);
        debug_assert_eq!(self.cod, other.cod);
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .zip(&self.cod.factors)
            .map(|((a, b), &d)| a.iter().zip(b).map(|(&x, &y)| (x + y) % d).collect())
            .collect();
        ModuleHom { dom: self.dom.clone(), cod: self.cod.clone(), matrix }
    }

    pub fn image(&self) -> Submodule {
        let gens: Vec<Vec<u64>> = (0..self.dom.rank())
            .map(|j| self.matrix.iter().map(|row| row[j]).collect())
            .collect();
        Submodule::from_generators(&self.cod, &gens)
    }

    pub fn kernel(&self) -> Submodule {
        let sols = arith::congruence_solutions(
            &lift(&self.matrix),
            &crate::ring::to_i128(&self.cod.factors),
            self.dom.rank(),
            &self.dom.factors,
        );
        Submodule::from_elements(&self.dom, &sols)
    }

    pub fn image_of(&self, sub: &Submodule) -> Submodule {
        let gens = sub.map_by(&lift(&self.matrix), &self.cod);
        Submodule::from_generators(&self.cod, &gens)
    }

    pub fn preimage_of(&self, sub: &Submodule) -> Submodule {
        let els: Vec<Vec<u64>> = self
            .dom
            .elements()
            .into_iter()
            .filter(|x| sub.contains(&self.eval(x)))
            .collect();
        Submodule::from_elements(&self.dom, &els)
    }

    pub fn is_injective_map(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective_map(&self) -> bool {
        self.image().is_full()
    }

    pub fn is_iso(&self) -> bool {
        self.dom.order() == self.cod.order() && self.is_injective_map()
    }

    /// Two-sided inverse, when the map is an isomorphism.
    pub fn invert(&self) -> Option<ModuleHom> {
        if !self.is_iso() {
            return None;
        }
        let k_cod = self.cod.rank();
        let k_dom = self.dom.rank();
        let f = lift(&self.matrix);
        let cod_mods = crate::ring::to_i128(&self.cod.factors);
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for j in 0..k_cod {
            let mut e = vec![0i128; k_cod];
            e[j] = 1;
            let x = arith::congruence_particular(&f, &cod_mods, &e, k_dom)?;
            cols.push(crate::ring::box_reduce(&self.dom.factors, &x));
        }
        let matrix: Vec<Vec<u64>> = (0..k_dom)
            .map(|i| (0..k_cod).map(|j| cols[j][i]).collect())
            .collect();
        let g = ModuleHom::new(self.cod.clone(), self.dom.clone(), matrix).ok()?;
        let gf = g.compose(self);
        let fg = self.compose(&g);
        if gf == ModuleHom::identity(&self.dom) && fg == ModuleHom::identity(&self.cod) {
            Some(g)
        } else {
            None
        }
    }

    /// Restrict to a submodule of the domain presented as a module in its
    /// own right via `incl`.
    pub fn restrict_along(&self, incl: &ModuleHom) -> ModuleHom {
        self.compose(incl)
    }
}

/// Congruence system cutting out the homomorphisms `dom -> cod` among all
/// integer matrices, with the unknown `F[i][j]` flattened to `i * kd + j`.
fn hom_system(dom: &FinModule, cod: &FinModule) -> (Mat, Vec<i128>, Vec<u64>) {
    let kd = dom.rank();
    let kc = cod.rank();
    let n = kc * kd;
    let idx = |i: usize, j: usize| i * kd + j;
    let mut rows: Mat = Vec::new();
    let mut moduli: Vec<i128> = Vec::new();
    // well-definedness: F[i][j] * m_dom[j] = 0 mod m_cod[i]
    for i in 0..kc {
        for j in 0..kd {
            let mut r = vec![0i128; n];
            r[idx(i, j)] = dom.factors[j] as i128;
            rows.push(r);
            moduli.push(cod.factors[i] as i128);
        }
    }
    // linearity: F A_t = B_t F mod rows
    for t in 0..dom.ring.rank() {
        for i in 0..kc {
            for j in 0..kd {
                let mut r = vec![0i128; n];
                for l in 0..kd {
                    r[idx(i, l)] += dom.action[t][l][j] as i128;
                }
                for l in 0..kc {
                    r[idx(l, j)] -= cod.action[t][i][l] as i128;
                }
                rows.push(r);
                moduli.push(cod.factors[i] as i128);
            }
        }
    }
    let mut boxm = vec![0u64; n];
    for i in 0..kc {
        for j in 0..kd {
            boxm[idx(i, j)] = cod.factors[i];
        }
    }
    (rows, moduli, boxm)
}

/// Every homomorphism `dom -> cod`, sorted by flattened matrix.
pub fn hom_set(dom: &FinModule, cod: &FinModule) -> Result<Vec<ModuleHom>> {
    if dom.ring != cod.ring {
        return Err(Error::RingMismatch);
    }
    let kd = dom.rank();
    let kc = cod.rank();
    let (rows, moduli, boxm) = hom_system(dom, cod);
    let sols = arith::congruence_solutions(&rows, &moduli, kc * kd, &boxm);
    Ok(sols
        .into_iter()
        .map(|flat| {
            let matrix: Vec<Vec<u64>> = (0..kc)
                .map(|i| (0..kd).map(|j| flat[i * kd + j]).collect())
                .collect();
            ModuleHom::unchecked(dom.clone(), cod.clone(), matrix)
        })
        .collect())
}

/// Extend `f` along an inclusion: find `g` on `incl.cod` with `g . incl = f`.
/// `f` and `incl` share a domain.
pub fn extend_along(f: &ModuleHom, incl: &ModuleHom) -> Result<Option<ModuleHom>> {
    if f.dom != incl.dom {
        return Err(Error::ModuleAxiom("extension domains differ".into()));
    }
    let big = &incl.cod;
    let cod = &f.cod;
    let kb = big.rank();
    let kc = cod.rank();
    let n = kc * kb;
    let (mut rows, mut moduli, _) = hom_system(big, cod);
    let mut rhs = vec![0i128; rows.len()];
    // G . incl = f entrywise
    for i in 0..kc {
        for j in 0..f.dom.rank() {
            let mut r = vec![0i128; n];
            for l in 0..kb {
                r[i * kb + l] = incl.matrix[l][j] as i128;
            }
            rows.push(r);
            moduli.push(cod.factors[i] as i128);
            rhs.push(f.matrix[i][j] as i128);
        }
    }
    let sol = match arith::congruence_particular(&rows, &moduli, &rhs, n) {
        None => return Ok(None),
        Some(s) => s,
    };
    let matrix: Vec<Vec<u64>> = (0..kc)
        .map(|i| {
            (0..kb)
                .map(|j| sol[i * kb + j].rem_euclid(cod.factors[i] as i128) as u64)
                .collect()
        })
        .collect();
    Ok(Some(ModuleHom::new(big.clone(), cod.clone(), matrix)?))
}

/// Does `f` send the submodule `s` of its domain into `t` in its codomain?
/// It is enough to check additive generators.
pub fn maps_into(f: &ModuleHom, s: &Submodule, t: &Submodule) -> bool {
    s.canon
        .iter()
        .all(|row| t.contains(&f.eval(&crate::ring::box_reduce(&f.dom.factors, row))))
}

/// Submodules stable under every endomorphism.
pub fn fully_invariant_submodules(m: &FinModule) -> Result<Vec<Submodule>> {
    let ends = end_set(m)?;
    Ok(crate::submodule::submodules(m)
        .into_iter()
        .filter(|s| ends.iter().all(|f| maps_into(f, s, s)))
        .collect())
}

/// Endomorphisms of `m`.
pub fn end_set(m: &FinModule) -> Result<Vec<ModuleHom>> {
    hom_set(m, m)
}

//! Integer matrix utilities: Hermite and Smith normal forms, kernels,
//! and solvers for systems of linear congruences.
//!
//! Everything works over `i128`; the moduli in this crate are tiny (a few
//! thousand at most), so overflow is not a practical concern.

pub type Mat = Vec<Vec<i128>>;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i128, b: i128) -> i128 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b)) * b
    }
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    if n == 0 {
        return vec![];
    }
    let inner = a[0].len();
    let m = if b.is_empty() { 0 } else { b[0].len() };
    debug_assert_eq!(inner, b.len());
    let mut out = vec![vec![0i128; m]; n];
    for i in 0..n {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &Mat, x: &[i128]) -> Vec<i128> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(&r, &v)| r * v).sum())
        .collect()
}

/// Canonical row Hermite normal form of the lattice spanned by `rows_in`.
///
/// Nonzero rows in echelon order, pivots positive, entries above each pivot
/// reduced into `[0, pivot)`. Two generating sets span the same lattice
/// exactly when they produce the same output.
pub fn hnf_rows(rows_in: &[Vec<i128>], ncols: usize) -> Vec<Vec<i128>> {
    let mut work: Vec<Vec<i128>> = rows_in
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut out: Vec<Vec<i128>> = Vec::new();
    for col in 0..ncols {
        loop {
            let mut idxs: Vec<usize> = (0..work.len()).filter(|&i| work[i][col] != 0).collect();
            if idxs.is_empty() {
                break;
            }
            if idxs.len() == 1 {
                let mut row = work.remove(idxs[0]);
                if row[col] < 0 {
                    for v in row.iter_mut() {
                        *v = -*v;
                    }
                }
                out.push(row);
                break;
            }
            idxs.sort_by_key(|&i| work[i][col].abs());
            let pivot = work[idxs[0]].clone();
            for &i in &idxs[1..] {
                let q = work[i][col] / pivot[col];
                for (v, p) in work[i].iter_mut().zip(&pivot) {
                    *v -= q * p;
                }
            }
            work.retain(|r| r.iter().any(|&x| x != 0));
        }
    }
    // Reduce entries above each pivot.
    for i in 0..out.len() {
        let pcol = out[i].iter().position(|&x| x != 0).unwrap();
        let p = out[i][pcol];
        for j in 0..i {
            let q = out[j][pcol].div_euclid(p);
            if q != 0 {
                let lower = out[i].clone();
                for (v, l) in out[j].iter_mut().zip(&lower) {
                    *v -= q * l;
                }
            }
        }
    }
    out
}

/// Does the lattice spanned by the HNF rows contain `x`?
pub fn hnf_contains(hnf: &[Vec<i128>], x: &[i128]) -> bool {
    let mut x = x.to_vec();
    for row in hnf {
        let pcol = match row.iter().position(|&v| v != 0) {
            Some(p) => p,
            None => continue,
        };
        if x[pcol] % row[pcol] != 0 {
            // cannot clear this coordinate with later rows (echelon order)
            if x[pcol] != 0 {
                return false;
            }
            continue;
        }
        let q = x[pcol] / row[pcol];
        if q != 0 {
            for (v, r) in x.iter_mut().zip(row) {
                *v -= q * r;
            }
        }
    }
    x.iter().all(|&v| v == 0)
}

/// Smith normal form `u * a * v = diag(d)` with tracked inverses.
pub struct Smith {
    pub d: Vec<i128>,
    pub u: Mat,
    pub uinv: Mat,
    pub v: Mat,
    pub vinv: Mat,
}

fn is_canonical_diagonal(a: &Mat, nrows: usize, ncols: usize) -> bool {
    let mut prev = None;
    for i in 0..nrows {
        for j in 0..ncols {
            if i != j && a[i][j] != 0 {
                return false;
            }
        }
    }
    for t in 0..nrows.min(ncols) {
        let d = a[t][t];
        if d < 0 {
            return false;
        }
        if let Some(p) = prev {
            if d != 0 && (p == 0 || d % p != 0) {
                return false;
            }
            if p == 0 && d != 0 {
                return false;
            }
        }
        prev = Some(d);
    }
    true
}

pub fn smith(a_in: &Mat, nrows: usize, ncols: usize) -> Smith {
    if is_canonical_diagonal(a_in, nrows, ncols) {
        let d = (0..nrows.min(ncols)).map(|t| a_in[t][t]).collect();
        return Smith {
            d,
            u: identity(nrows),
            uinv: identity(nrows),
            v: identity(ncols),
            vinv: identity(ncols),
        };
    }
    let mut a = a_in.clone();
    let mut u = identity(nrows);
    let mut uinv = identity(nrows);
    let mut v = identity(ncols);
    let mut vinv = identity(ncols);

    let row_sub = |a: &mut Mat, u: &mut Mat, uinv: &mut Mat, i: usize, j: usize, q: i128| {
        for c in 0..ncols {
            let t = a[j][c];
            a[i][c] -= q * t;
        }
        for c in 0..nrows {
            let t = u[j][c];
            u[i][c] -= q * t;
        }
        for r in 0..nrows {
            let t = uinv[r][i];
            uinv[r][j] += q * t;
        }
    };
    let col_sub = |a: &mut Mat, v: &mut Mat, vinv: &mut Mat, i: usize, j: usize, q: i128| {
        // col i -= q * col j
        for r in 0..nrows {
            let t = a[r][j];
            a[r][i] -= q * t;
        }
        for r in 0..ncols {
            let t = v[r][j];
            v[r][i] -= q * t;
        }
        for c in 0..ncols {
            let t = vinv[i][c];
            vinv[j][c] += q * t;
        }
    };
    let row_swap = |a: &mut Mat, u: &mut Mat, uinv: &mut Mat, i: usize, j: usize| {
        a.swap(i, j);
        u.swap(i, j);
        for r in 0..nrows {
            let row = &mut uinv[r];
            row.swap(i, j);
        }
    };
    let col_swap = |a: &mut Mat, v: &mut Mat, vinv: &mut Mat, i: usize, j: usize| {
        for r in 0..nrows {
            a[r].swap(i, j);
        }
        for r in 0..ncols {
            v[r].swap(i, j);
        }
        vinv.swap(i, j);
    };
    let row_neg = |a: &mut Mat, u: &mut Mat, uinv: &mut Mat, i: usize| {
        for c in 0..ncols {
            a[i][c] = -a[i][c];
        }
        for c in 0..nrows {
            u[i][c] = -u[i][c];
        }
        for r in 0..nrows {
            uinv[r][i] = -uinv[r][i];
        }
    };

    let rank_bound = nrows.min(ncols);
    let mut t = 0;
    while t < rank_bound {
        // locate pivot with minimal absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => a[i][j].abs() < a[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let (pi, pj) = match best {
            None => break,
            Some(p) => p,
        };
        if pi != t {
            row_swap(&mut a, &mut u, &mut uinv, t, pi);
        }
        if pj != t {
            col_swap(&mut a, &mut v, &mut vinv, t, pj);
        }
        // clear row and column t
        let mut dirty = false;
        for i in t + 1..nrows {
            if a[i][t] != 0 {
                let q = a[i][t] / a[t][t];
                row_sub(&mut a, &mut u, &mut uinv, i, t, q);
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
        }
        for j in t + 1..ncols {
            if a[t][j] != 0 {
                let q = a[t][j] / a[t][t];
                col_sub(&mut a, &mut v, &mut vinv, j, t, q);
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // divisibility repair: pivot must divide the whole trailing block
        let mut repaired = false;
        'outer: for i in t + 1..nrows {
            for j in t + 1..ncols {
                if a[i][j] % a[t][t] != 0 {
                    row_sub(&mut a, &mut u, &mut uinv, t, i, -1);
                    repaired = true;
                    break 'outer;
                }
            }
        }
        if repaired {
            continue;
        }
        if a[t][t] < 0 {
            row_neg(&mut a, &mut u, &mut uinv, t);
        }
        t += 1;
    }
    let d = (0..rank_bound).map(|i| a[i][i]).collect();
    Smith { d, u, uinv, v, vinv }
}

/// Basis (as column vectors) of `{ x : a * x = 0 }`.
pub fn kernel_basis(a: &Mat, nrows: usize, ncols: usize) -> Vec<Vec<i128>> {
    let s = smith(a, nrows, ncols);
    let mut out = Vec::new();
    for i in 0..ncols {
        let di = if i < s.d.len() { s.d[i] } else { 0 };
        if di == 0 {
            out.push((0..ncols).map(|r| s.v[r][i]).collect());
        }
    }
    out
}

/// One integer solution of `a * x = b`, if any.
pub fn solve(a: &Mat, b: &[i128], nrows: usize, ncols: usize) -> Option<Vec<i128>> {
    let s = smith(a, nrows, ncols);
    let c = mat_vec(&s.u, b);
    let mut y = vec![0i128; ncols];
    for i in 0..nrows {
        let di = if i < s.d.len() { s.d[i] } else { 0 };
        if di == 0 {
            if c[i] != 0 {
                return None;
            }
        } else {
            if c[i] % di != 0 {
                return None;
            }
            if i < ncols {
                y[i] = c[i] / di;
            }
        }
    }
    Some(mat_vec(&s.v, &y))
}

/// Change of coordinates turning `prod Z_{factors[i]}` into invariant-factor
/// form (each modulus at least 2, ascending divisibility). `fwd` maps old
/// coordinates to new ones (reduce mod `new_factors`), `back` maps new
/// coordinates to old representatives (reduce mod `old_factors`).
pub struct BoxTransform {
    pub new_factors: Vec<u64>,
    pub fwd: Mat,
    pub back: Mat,
}

pub fn box_is_canonical(factors: &[u64]) -> bool {
    factors.iter().all(|&d| d >= 2) && factors.windows(2).all(|w| w[1] % w[0] == 0)
}

/// `None` when `factors` is already canonical.
pub fn normalize_box(factors: &[u64]) -> Option<BoxTransform> {
    if box_is_canonical(factors) {
        return None;
    }
    let k = factors.len();
    let diag: Mat = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { factors[i] as i128 } else { 0 })
                .collect()
        })
        .collect();
    let s = smith(&diag, k, k);
    let kept: Vec<usize> = (0..k).filter(|&i| s.d[i] > 1).collect();
    let new_factors: Vec<u64> = kept.iter().map(|&i| s.d[i] as u64).collect();
    let fwd: Mat = kept.iter().map(|&i| s.u[i].clone()).collect();
    let back: Mat = (0..k)
        .map(|r| kept.iter().map(|&c| s.uinv[r][c]).collect())
        .collect();
    Some(BoxTransform { new_factors, fwd, back })
}

/// Closure of `gens` under addition inside the finite box `prod Z_{moduli[i]}`.
/// Returns the full subgroup, sorted.
pub fn box_closure(moduli: &[u64], gens: &[Vec<u64>]) -> Vec<Vec<u64>> {
    use std::collections::BTreeSet;
    let n = moduli.len();
    let zero = vec![0u64; n];
    let reduce = |v: &[u64]| -> Vec<u64> {
        v.iter()
            .zip(moduli)
            .map(|(&x, &m)| if m == 0 { x } else { x % m })
            .collect()
    };
    let mut gset: BTreeSet<Vec<u64>> = gens.iter().map(|g| reduce(g)).collect();
    gset.remove(&zero);
    let gens: Vec<Vec<u64>> = gset.into_iter().collect();
    let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
    set.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y: Vec<u64> = x
                .iter()
                .zip(g)
                .zip(moduli)
                .map(|((&a, &b), &m)| if m == 0 { a + b } else { (a + b) % m })
                .collect();
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// All solutions of `rows[r] . x = 0 (mod moduli[r])`, reduced into the box
/// `prod Z_{box_moduli[i]}` and returned sorted.
///
/// Precondition: each box vector `box_moduli[i] * e_i` must itself satisfy
/// the system (true for the hom and kernel systems built in this crate), so
/// that reduction modulo the box preserves solutions.
pub fn congruence_solutions(
    rows: &[Vec<i128>],
    moduli: &[i128],
    n: usize,
    box_moduli: &[u64],
) -> Vec<Vec<u64>> {
    debug_assert_eq!(rows.len(), moduli.len());
    debug_assert_eq!(box_moduli.len(), n);
    let r = rows.len();
    let mut b: Mat = Vec::with_capacity(r);
    for (row, &m) in rows.iter().zip(moduli) {
        let mut full = vec![0i128; n + r];
        full[..n].copy_from_slice(&row[..n]);
        full[n + b.len()] = m;
        b.push(full);
    }
    let mut gens: Vec<Vec<u64>> = Vec::new();
    if r == 0 {
        for (i, &m) in box_moduli.iter().enumerate() {
            if m > 1 {
                let mut g = vec![0u64; n];
                g[i] = 1;
                gens.push(g);
            }
        }
        return box_closure(box_moduli, &gens);
    }
    for k in kernel_basis(&b, r, n + r) {
        let g: Vec<u64> = (0..n)
            .map(|i| {
                let m = box_moduli[i] as i128;
                if m == 0 {
                    k[i] as u64
                } else {
                    (k[i].rem_euclid(m)) as u64
                }
            })
            .collect();
        gens.push(g);
    }
    box_closure(box_moduli, &gens)
}

/// One solution of `rows[r] . x = rhs[r] (mod moduli[r])`, if any.
pub fn congruence_particular(
    rows: &[Vec<i128>],
    moduli: &[i128],
    rhs: &[i128],
    n: usize,
) -> Option<Vec<i128>> {
    let r = rows.len();
    let mut b: Mat = Vec::with_capacity(r);
    for (i, (row, &m)) in rows.iter().zip(moduli).enumerate() {
        let mut full = vec![0i128; n + r];
        full[..n].copy_from_slice(&row[..n]);
        full[n + i] = m;
        b.push(full);
    }
    solve(&b, rhs, r, n + r).map(|x| x[..n].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hnf_canonical_for_equal_lattices() {
        // rows spanning the same lattice in different presentations
        let a = vec![vec![2, 0], vec![0, 4]];
        let b = vec![vec![2, 4], vec![2, 0], vec![4, 4]];
        assert_eq!(hnf_rows(&a, 2), hnf_rows(&b, 2));
    }

    #[test]
    fn hnf_membership() {
        let h = hnf_rows(&[vec![2, 1, 0], vec![0, 3, 0], vec![0, 0, 1]], 3);
        assert!(hnf_contains(&h, &[2, 1, 0]));
        assert!(hnf_contains(&h, &[2, 4, 5]));
        assert!(!hnf_contains(&h, &[1, 0, 0]));
    }

    #[test]
    fn smith_diagonal_early_exit_is_identity() {
        let a = vec![vec![2, 0], vec![0, 4]];
        let s = smith(&a, 2, 2);
        assert_eq!(s.d, vec![2, 4]);
        assert_eq!(s.u, identity(2));
        assert_eq!(s.v, identity(2));
    }

    #[test]
    fn smith_crt_merge() {
        let a = vec![vec![2, 0], vec![0, 3]];
        let s = smith(&a, 2, 2);
        assert_eq!(s.d, vec![1, 6]);
    }

    #[test]
    fn solve_small() {
        let a = vec![vec![2, 0], vec![0, 4]];
        assert_eq!(solve(&a, &[4, 8], 2, 2), Some(vec![2, 2]));
        assert_eq!(solve(&a, &[1, 0], 2, 2), None);
    }

    #[test]
    fn congruence_homogeneous() {
        // 2x = 0 mod 4 over Z4: solutions 0, 2
        let sols = congruence_solutions(&[vec![2]], &[4], 1, &[4]);
        assert_eq!(sols, vec![vec![0], vec![2]]);
    }

    fn check_smith(a: &Mat, n: usize, m: usize) {
        let s = smith(a, n, m);
        assert_eq!(mat_mul(&s.u, &s.uinv), identity(n));
        assert_eq!(mat_mul(&s.v, &s.vinv), identity(m));
        let prod = mat_mul(&mat_mul(&s.u, a), &s.v);
        for i in 0..n {
            for j in 0..m {
                let expect = if i == j && i < s.d.len() { s.d[i] } else { 0 };
                assert_eq!(prod[i][j], expect, "entry {},{}", i, j);
            }
        }
        for w in s.d.windows(2) {
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    proptest! {
        #[test]
        fn smith_props(entries in proptest::collection::vec(-9i128..9, 9)) {
            let a: Mat = entries.chunks(3).map(|c| c.to_vec()).collect();
            check_smith(&a, 3, 3);
        }

        #[test]
        fn kernel_props(entries in proptest::collection::vec(-9i128..9, 6)) {
            let a: Mat = entries.chunks(3).map(|c| c.to_vec()).collect();
            for k in kernel_basis(&a, 2, 3) {
                prop_assert_eq!(mat_vec(&a, &k), vec![0i128, 0]);
            }
        }
    }
}

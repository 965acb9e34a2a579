//! Finite abelian groups `Z_{n_1} x ... x Z_{n_k}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    moduli: Vec<u64>,
}

/// Element with canonical residues `0 <= r_i < n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    residues: Vec<u64>,
}

impl GroupElem {
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// Comma-joined residues, e.g. `"1,0"`.
    pub fn key(&self) -> String {
        self.residues.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl FinAbGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::Precondition("group moduli must be positive".into()));
        }
        if moduli.is_empty() {
            return Ok(Self::trivial());
        }
        Ok(Self { moduli })
    }

    pub fn trivial() -> Self {
        Self { moduli: vec![1] }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem {
            residues: vec![0; self.moduli.len()],
        }
    }

    /// Element with exactly the given residues, which must already be canonical.
    pub fn elem(&self, residues: &[u64]) -> Result<GroupElem> {
        if residues.len() != self.moduli.len() || residues.iter().zip(&self.moduli).any(|(r, m)| r >= m) {
            return Err(Error::NotInGroup(format!("{residues:?} in moduli {:?}", self.moduli)));
        }
        Ok(GroupElem {
            residues: residues.to_vec(),
        })
    }

    /// Element from arbitrary integers, reduced to least residues.
    pub fn reduce(&self, values: &[i64]) -> Result<GroupElem> {
        if values.len() != self.moduli.len() {
            return Err(Error::NotInGroup(format!("{values:?} in moduli {:?}", self.moduli)));
        }
        Ok(GroupElem {
            residues: values
                .iter()
                .zip(&self.moduli)
                .map(|(&v, &m)| v.rem_euclid(m as i64) as u64)
                .collect(),
        })
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        g.residues.len() == self.moduli.len() && g.residues.iter().zip(&self.moduli).all(|(r, m)| r < m)
    }

    pub fn check(&self, g: &GroupElem) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::NotInGroup(g.to_string()))
        }
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        GroupElem {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.moduli)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElem) -> GroupElem {
        GroupElem {
            residues: a.residues.iter().zip(&self.moduli).map(|(x, m)| (m - x) % m).collect(),
        }
    }

    pub fn scale(&self, k: u64, a: &GroupElem) -> GroupElem {
        GroupElem {
            residues: a
                .residues
                .iter()
                .zip(&self.moduli)
                .map(|(x, m)| ((*x as u128 * k as u128) % *m as u128) as u64)
                .collect(),
        }
    }

    /// All elements in lexicographic residue order; the zero element comes first.
    pub fn elements(&self) -> Vec<GroupElem> {
        let mut out = vec![self.zero()];
        for (pos, &m) in self.moduli.iter().enumerate() {
            let prev = std::mem::take(&mut out);
            for g in prev {
                for r in 0..m {
                    let mut h = g.clone();
                    h.residues[pos] = r;
                    out.push(h);
                }
            }
        }
        out.sort();
        out
    }

    pub fn index_of(&self, g: &GroupElem) -> usize {
        g.residues
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (r, m)| acc * *m as usize + *r as usize)
    }

    pub fn order_of(&self, g: &GroupElem) -> u64 {
        g.residues
            .iter()
            .zip(&self.moduli)
            .fold(1u64, |acc, (r, m)| acc.lcm(&(m / r.gcd(m))))
    }

    /// Elements of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[GroupElem]) -> Result<BTreeSet<GroupElem>> {
        for g in gens {
            self.check(g)?;
        }
        let mut seen = BTreeSet::from([self.zero()]);
        let mut queue = VecDeque::from([self.zero()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }

    /// Invariant factors `d_1 | d_2 | ...`, all greater than 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut f: Vec<u64> = self.moduli.iter().copied().filter(|&m| m > 1).collect();
        // Pairwise (gcd, lcm) replacement converges to the divisibility chain.
        loop {
            let mut changed = false;
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    let (g, l) = (f[i].gcd(&f[j]), f[i].lcm(&f[j]));
                    if (g, l) != (f[i], f[j]) {
                        f[i] = g;
                        f[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        f.retain(|&d| d > 1);
        f
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors().len() <= 1
    }

    /// Quotient `G/H` in invariant-factor form, with the projection.
    pub fn quotient(&self, gens: &[GroupElem]) -> Result<Quotient> {
        for g in gens {
            self.check(g)?;
        }
        let k = self.moduli.len();
        // Relation columns: n_i e_i and the generators of H.
        let mut rel: Vec<Vec<i128>> = vec![vec![0; k + gens.len()]; k];
        for i in 0..k {
            rel[i][i] = self.moduli[i] as i128;
        }
        for (j, g) in gens.iter().enumerate() {
            for i in 0..k {
                rel[i][k + j] = g.residues[i] as i128;
            }
        }
        let (diag, u) = smith_row_transform(rel);
        let mut keep = Vec::new();
        let mut moduli = Vec::new();
        for (i, &d) in diag.iter().enumerate() {
            let d = d.unsigned_abs() as u64;
            if d > 1 {
                keep.push(i);
                moduli.push(d);
            }
        }
        let group = if moduli.is_empty() {
            FinAbGroup::trivial()
        } else {
            FinAbGroup::new(moduli)?
        };
        let rows: Vec<Vec<i128>> = keep.iter().map(|&i| u[i].clone()).collect();
        let q = Quotient {
            source: self.clone(),
            group,
            rows,
        };
        let h = self.subgroup(gens)?;
        if q.group.order() * h.len() != self.order() {
            return Err(Error::IdentityFailure("quotient order mismatch".into()));
        }
        for x in &h {
            if q.project(x) != q.group.zero() {
                return Err(Error::IdentityFailure("subgroup not in quotient kernel".into()));
            }
        }
        Ok(q)
    }
}

/// Projection `G -> G/H`, `x ↦ (U x) mod d`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub source: FinAbGroup,
    pub group: FinAbGroup,
    rows: Vec<Vec<i128>>,
}

impl Quotient {
    pub fn project(&self, x: &GroupElem) -> GroupElem {
        if self.rows.is_empty() {
            return self.group.zero();
        }
        let vals: Vec<i64> = self
            .rows
            .iter()
            .zip(self.group.moduli())
            .map(|(row, &d)| {
                let s: i128 = row.iter().zip(&x.residues).map(|(a, &b)| a * b as i128).sum();
                s.rem_euclid(d as i128) as i64
            })
            .collect();
        self.group.reduce(&vals).expect("lengths agree")
    }
}

/// Smith normal form of an integer matrix, returning the diagonal and the unimodular row
/// transform `U` (with `U A V = D`).
fn smith_row_transform(mut a: Vec<Vec<i128>>) -> (Vec<i128>, Vec<Vec<i128>>) {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut u: Vec<Vec<i128>> = (0..m)
        .map(|i| (0..m).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut t = 0;
    while t < m.min(n) {
        // Move a smallest nonzero entry of the remaining block to (t, t).
        let pivot = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..m {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in 0..n {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..m {
                        u[i][j] -= q * u[t][j];
                    }
                }
                if a[i][t] != 0 {
                    done = false;
                }
            }
            for j in t + 1..n {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    done = false;
                }
            }
            if done {
                // Enforce divisibility of the remaining block by the pivot.
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % a[t][t] != 0));
                match bad {
                    Some(i) => {
                        for j in 0..n {
                            a[t][j] += a[i][j];
                        }
                        for j in 0..m {
                            u[t][j] += u[i][j];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Bring the smallest nonzero entry of row/column t to the pivot.
            let col_min = (t..m).filter(|&i| a[i][t] != 0).min_by_key(|&i| a[i][t].abs());
            if let Some(i) = col_min {
                if a[i][t].abs() < a[t][t].abs() {
                    a.swap(t, i);
                    u.swap(t, i);
                }
            }
            let row_min = (t..n).filter(|&j| a[t][j] != 0).min_by_key(|&j| a[t][j].abs());
            if let Some(j) = row_min {
                if a[t][j].abs() < a[t][t].abs() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
        }
        t += 1;
    }
    let diag = (0..m).map(|i| if i < n { a[i][i] } else { 0 }).collect();
    (diag, u)
}

/// Pairs `(α, β)` such that no cyclic subgroup contains both. The subgroup they generate
/// is cyclic exactly when its order equals `lcm(ord α, ord β)`, its exponent.
pub fn gamma_sharp(g: &FinAbGroup) -> BTreeSet<(GroupElem, GroupElem)> {
    let elems = g.elements();
    let mut out = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            if b < a {
                continue;
            }
            let size = g.subgroup(&[a.clone(), b.clone()]).expect("members").len() as u64;
            let exponent = g.order_of(a).lcm(&g.order_of(b));
            if size != exponent {
                out.insert((a.clone(), b.clone()));
                out.insert((b.clone(), a.clone()));
            }
        }
    }
    out
}

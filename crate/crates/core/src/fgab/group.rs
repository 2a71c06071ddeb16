//! Finitely generated abelian groups given by generators and relations.
//!
//! A presentation with `n` generators and a `k x n` relation matrix `R`
//! (each row is a relation `sum_i R[r][i] g_i = 0`) is brought to the
//! canonical form `Z^r + Z/d_1 + ... + Z/d_s` with `d_1 | d_2 | ... | d_s`
//! and `d_1 >= 2`.
//!
//! Coordinates: with `U R V = D` the new basis is `h = V^{-1} g`, so
//! generator `g_i` has coordinates given by row `i` of `V`, and basis vector
//! `h_j` is row `j` of `V^{-1}` read as a combination of generators. Columns with `d_j = 0` are the free coordinates,
//! columns with `d_j >= 2` are torsion coordinates (reduced into
//! `[0, d_j)`), and columns with `d_j = 1` are dropped. Each free basis vector
//! is signed so that the first generator with a nonzero coordinate on it has
//! a positive one.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct GroupData {
    free_rank: usize,
    torsion_orders: Vec<BigInt>,
    /// Canonical coordinates of each presentation generator.
    gen_coords: Vec<(Vec<BigInt>, Vec<BigInt>)>,
    /// Free basis vectors written as integer combinations of generators.
    free_basis: Vec<Vec<BigInt>>,
    torsion_basis: Vec<Vec<BigInt>>,
}

/// Cheap-to-clone handle to an immutable group.
#[derive(Clone)]
pub struct FgAbGroup(Arc<GroupData>);

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FgAbGroup {}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.0.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.0.torsion_orders.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Builds the canonical form of the group with `num_generators` generators
/// subject to the rows of `relations`.
pub fn present_group(num_generators: usize, relations: &IntMatrix) -> Result<FgAbGroup> {
    if relations.cols() != num_generators {
        return Err(Error::Shape(format!(
            "relation matrix has {} columns for {num_generators} generators",
            relations.cols()
        )));
    }
    let snf = smith_normal_form(relations);
    let diag = snf.diagonal();
    let d_of = |j: usize| diag.get(j).cloned().unwrap_or_default();

    let mut v = snf.v;
    let mut v_inv = snf.v_inv;
    let mut free_cols = Vec::new();
    let mut torsion_cols = Vec::new();
    for j in 0..num_generators {
        let d = d_of(j);
        if d.is_zero() {
            free_cols.push(j);
        } else if !d.is_one() {
            torsion_cols.push(j);
        }
    }
    for &j in &free_cols {
        let first = (0..num_generators)
            .map(|i| &v[(i, j)])
            .find(|x| !x.is_zero());
        if first.is_some_and(|x| x.is_negative()) {
            v.negate_col(j);
            v_inv.negate_row(j);
        }
    }

    let torsion_orders: Vec<BigInt> = torsion_cols.iter().map(|&j| d_of(j)).collect();
    let gen_coords = (0..num_generators)
        .map(|i| {
            let free = free_cols.iter().map(|&j| v[(i, j)].clone()).collect();
            let tors = torsion_cols
                .iter()
                .zip(&torsion_orders)
                .map(|(&j, d)| v[(i, j)].mod_floor(d))
                .collect();
            (free, tors)
        })
        .collect();
    let basis = |cols: &[usize]| -> Vec<Vec<BigInt>> {
        cols.iter().map(|&j| v_inv.row(j).to_vec()).collect()
    };

    Ok(FgAbGroup(Arc::new(GroupData {
        free_rank: free_cols.len(),
        torsion_orders,
        gen_coords,
        free_basis: basis(&free_cols),
        torsion_basis: basis(&torsion_cols),
    })))
}

impl FgAbGroup {
    pub fn free_rank(&self) -> usize {
        self.0.free_rank
    }

    pub fn torsion_orders(&self) -> &[BigInt] {
        &self.0.torsion_orders
    }

    pub fn num_generators(&self) -> usize {
        self.0.gen_coords.len()
    }

    /// The `j`-th canonical free basis vector as a combination of the
    /// presentation generators.
    pub fn free_basis_in_generators(&self) -> &[Vec<BigInt>] {
        &self.0.free_basis
    }

    pub fn torsion_basis_in_generators(&self) -> &[Vec<BigInt>] {
        &self.0.torsion_basis
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            free: vec![BigInt::zero(); self.0.free_rank],
            torsion: vec![BigInt::zero(); self.0.torsion_orders.len()],
        }
    }

    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        let (free, torsion) = self.0.gen_coords.get(i).ok_or_else(|| {
            Error::Shape(format!(
                "generator index {i} out of {}",
                self.num_generators()
            ))
        })?;
        Ok(GroupElement {
            group: self.clone(),
            free: free.clone(),
            torsion: torsion.clone(),
        })
    }

    /// The element `sum_i coeffs[i] * g_i`.
    pub fn element<T: Into<BigInt> + Clone>(&self, coeffs: &[T]) -> Result<GroupElement> {
        if coeffs.len() != self.num_generators() {
            return Err(Error::Shape(format!(
                "class vector has {} entries for {} generators",
                coeffs.len(),
                self.num_generators()
            )));
        }
        let mut acc = self.zero();
        for (i, c) in coeffs.iter().enumerate() {
            let c: BigInt = c.clone().into();
            if !c.is_zero() {
                acc = acc.add(&self.generator(i)?.scale(&c))?;
            }
        }
        Ok(acc)
    }

    /// Element from canonical coordinates; torsion residues are reduced.
    pub fn from_canonical(&self, free: Vec<BigInt>, torsion: Vec<BigInt>) -> Result<GroupElement> {
        if free.len() != self.0.free_rank || torsion.len() != self.0.torsion_orders.len() {
            return Err(Error::Shape(format!(
                "canonical coordinates of shape ({}, {}) for {self}",
                free.len(),
                torsion.len()
            )));
        }
        Ok(GroupElement {
            group: self.clone(),
            free,
            torsion,
        }
        .reduced())
    }
}

/// An element of an [`FgAbGroup`] in canonical coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    group: FgAbGroup,
    free: Vec<BigInt>,
    torsion: Vec<BigInt>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({self})")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "({}; {})", join(&self.free), join(&self.torsion))
    }
}

impl GroupElement {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn free_part(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }

    /// Infinite order iff some free coordinate is nonzero.
    pub fn has_infinite_order(&self) -> bool {
        self.free.iter().any(|x| !x.is_zero())
    }

    fn reduced(mut self) -> Self {
        for (r, d) in self.torsion.iter_mut().zip(self.group.torsion_orders()) {
            *r = r.mod_floor(d);
        }
        self
    }

    fn check_same(&self, other: &GroupElement) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same(other)?;
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(a, b)| a + b)
            .collect();
        let torsion = self
            .torsion
            .iter()
            .zip(&other.torsion)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GroupElement {
            group: self.group.clone(),
            free,
            torsion,
        }
        .reduced())
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            free: self.free.iter().map(|x| x * k).collect(),
            torsion: self.torsion.iter().map(|x| x * k).collect(),
        }
        .reduced()
    }
}

/// `a == b` in the group; errors if the elements live in different groups.
pub fn elements_equal(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    Ok(a.sub(b)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(cols: usize, rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows).unwrap()
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    /// Generators F, F1..F4 of the four triple fibres example.
    pub(crate) fn four_triple_fibres() -> FgAbGroup {
        present_group(
            5,
            &rel(
                5,
                &[
                    vec![-1, 3, 0, 0, 0],
                    vec![-1, 0, 3, 0, 0],
                    vec![-1, 0, 0, 3, 0],
                    vec![-1, 0, 0, 0, 3],
                    vec![0, 1, 1, 1, -3],
                    vec![0, 1, 0, 0, -1],
                ],
            ),
        )
        .unwrap()
    }

    #[test]
    fn free_group() {
        let g = present_group(2, &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(g.free_rank(), 2);
        assert!(g.torsion_orders().is_empty());
        assert_eq!(g.to_string(), "Z^2");
    }

    #[test]
    fn four_triple_fibres_structure() {
        let g = four_triple_fibres();
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.torsion_orders(), &bi(&[3])[..]);
        assert_eq!(g.to_string(), "Z + Z/3");

        let e = |c: &[i64]| g.element(c).unwrap();
        // [F] = 3[F1], [F4] = [F1], [F3] = 2[F1] - [F2]
        assert!(elements_equal(&e(&[1, 0, 0, 0, 0]), &e(&[0, 3, 0, 0, 0])).unwrap());
        assert!(elements_equal(&e(&[0, 0, 0, 0, 1]), &e(&[0, 1, 0, 0, 0])).unwrap());
        assert!(elements_equal(&e(&[0, 0, 0, 1, 0]), &e(&[0, 2, -1, 0, 0])).unwrap());
        // 3F1 = 3F2 but F1 != F2
        assert!(elements_equal(&e(&[0, 3, 0, 0, 0]), &e(&[0, 0, 3, 0, 0])).unwrap());
        assert!(!elements_equal(&e(&[0, 1, 0, 0, 0]), &e(&[0, 0, 1, 0, 0])).unwrap());
    }

    #[test]
    fn two_and_three_fold_fibres() {
        // 2F1 = F, 3F2 = F
        let g = present_group(3, &rel(3, &[vec![-1, 2, 0], vec![-1, 0, 3]])).unwrap();
        assert_eq!(g.free_rank(), 1);
        assert!(g.torsion_orders().is_empty());
        assert_eq!(g.generator(0).unwrap().free_part(), &bi(&[6])[..]);
        assert_eq!(g.generator(1).unwrap().free_part(), &bi(&[3])[..]);
        assert_eq!(g.generator(2).unwrap().free_part(), &bi(&[2])[..]);
    }

    #[test]
    fn bases_map_back_to_coordinates() {
        let g = four_triple_fibres();
        // free basis vector, written in generators, has coordinates e_0
        let b = &g.free_basis_in_generators()[0];
        let x = g.element(b).unwrap();
        assert_eq!(x.free_part(), &bi(&[1])[..]);
        assert_eq!(x.torsion_part(), &bi(&[0])[..]);
        let t = &g.torsion_basis_in_generators()[0];
        let y = g.element(t).unwrap();
        assert_eq!(y.free_part(), &bi(&[0])[..]);
        assert_eq!(y.torsion_part(), &bi(&[1])[..]);
    }

    #[test]
    fn mismatch_is_an_error() {
        let g = four_triple_fibres();
        let h = present_group(2, &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(
            elements_equal(&g.zero(), &h.zero()),
            Err(Error::GroupMismatch)
        );
        assert!(g.element(&[1i64, 2]).is_err());
        assert!(present_group(3, &IntMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn reflexive_and_residues_reduced() {
        let g = four_triple_fibres();
        let x = g.element(&[2i64, -7, 5, 1, 0]).unwrap();
        assert!(elements_equal(&x, &x).unwrap());
        assert!(x
            .torsion_part()
            .iter()
            .all(|r| !r.is_negative() && r < &BigInt::from(3)));
        assert!(x.sub(&x).unwrap().is_zero());
    }
}

use num_traits::{One, Zero};

use super::{LinearFunctional, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::Rat;

/// Group algebra `Q[G]` from a multiplication table, with the canonical form
/// `λ(Σ a_g g) = a_e`.
pub fn group_algebra(
    table: &[Vec<usize>],
    unit_index: usize,
) -> Result<(StructureAlgebra, LinearFunctional)> {
    check_group(table, unit_index)?;
    let n = table.len();
    let mut flat = vec![Rat::zero(); n * n * n];
    for (i, row) in table.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            flat[(i * n + j) * n + k] = Rat::one();
        }
    }
    let mut unit = vec![Rat::zero(); n];
    unit[unit_index] = Rat::one();
    let form = LinearFunctional::new(unit.clone());
    Ok((StructureAlgebra::from_flat(n, flat, unit), form))
}

#[allow(clippy::needless_range_loop)]
fn check_group(table: &[Vec<usize>], e: usize) -> Result<()> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if let Some(r) = table.iter().position(|row| row.len() != n) {
        return Err(Error::NotAGroup(format!(
            "row {r} does not have {n} entries"
        )));
    }
    if let Some((i, j)) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| table[i][j] >= n)
    {
        return Err(Error::NotAGroup(format!(
            "entry ({i},{j}) = {} is out of range",
            table[i][j]
        )));
    }
    if e >= n {
        return Err(Error::NotAGroup(format!("unit index {e} out of range")));
    }
    for g in 0..n {
        if table[e][g] != g || table[g][e] != g {
            return Err(Error::NotAGroup(format!(
                "identity axiom fails: {e} is not a two-sided unit for {g}"
            )));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == e && table[h][g] == e) {
            return Err(Error::NotAGroup(format!(
                "inverse axiom fails: {g} has no inverse"
            )));
        }
    }
    Ok(())
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Multiplication table of `S_n`; element `0` is the identity and
/// `(σ τ)(x) = σ(τ(x))`. Permutations are listed in lexicographic order.
pub fn symmetric_group_table(n: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
    perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&t.iter().map(|&x| s[x]).collect()))
                .collect()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_axioms, check_symmetric_frobenius};
    use crate::exactlin::int;

    #[test]
    fn trivial_group_is_ground_field() {
        let (a, form) = group_algebra(&[vec![0]], 0).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.constant(0, 0, 0), &int(1));
        assert_eq!(form.coefficients(), &[int(1)]);
    }

    #[test]
    fn z2_table() {
        let (a, form) = group_algebra(&cyclic_group_table(2), 0).unwrap();
        assert_eq!(a.unit(), &[int(1), int(0)]);
        assert_eq!(form.coefficients(), &[int(1), int(0)]);
        assert_eq!(a.constant(1, 1, 0), &int(1));
    }

    #[test]
    fn s3_passes_all_checks() {
        let table = symmetric_group_table(3);
        assert_eq!(table.len(), 6);
        let (a, form) = group_algebra(&table, 0).unwrap();
        assert!(check_axioms(&a).passed());
        assert!(check_symmetric_frobenius(&a, &form).unwrap().passed());
    }

    #[test]
    fn rejects_non_groups() {
        let not_assoc = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(matches!(
            group_algebra(&not_assoc, 0),
            Err(Error::NotAGroup(_))
        ));

        let no_unit = vec![vec![1, 0], vec![0, 1]];
        let err = group_algebra(&no_unit, 0).unwrap_err();
        assert!(matches!(&err, Error::NotAGroup(m) if m.contains("identity")));

        // a monoid: {1, 0} under multiplication has no inverse for 0
        let monoid = vec![vec![0, 1], vec![1, 1]];
        let err = group_algebra(&monoid, 0).unwrap_err();
        assert!(matches!(&err, Error::NotAGroup(m) if m.contains("inverse")));

        assert!(group_algebra(&[vec![0, 5], vec![1, 0]], 0).is_err());
    }
}

//! Small groups together with their covering groups, shipped as Cayley
//! tables and validated on load.

use crate::error::{Error, Result};
use crate::oracles::cayley::{find_isomorphism, CayleyGroup};

#[derive(Clone, Debug)]
pub struct Cover {
    pub name: &'static str,
    pub group: CayleyGroup,
    /// Elements of the designated central kernel `M`.
    pub kernel: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CoveringCase {
    pub name: &'static str,
    pub base_name: &'static str,
    pub base: CayleyGroup,
    /// `(p, λ)` when the base group is an abelian `p`-group.
    pub abelian: Option<(u64, &'static [usize])>,
    pub covers: Vec<Cover>,
    pub note: &'static str,
}

/// Outcome of checking `M ≤ Z(H) ∩ H′` and `H/M ≅ G` on the tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCheck {
    pub kernel_is_subgroup: bool,
    pub kernel_central: bool,
    pub kernel_in_derived: bool,
    pub quotient_isomorphic: bool,
}

impl CoverCheck {
    pub fn holds(&self) -> bool {
        self.kernel_is_subgroup && self.kernel_central && self.kernel_in_derived && self.quotient_isomorphic
    }
}

pub fn check_cover(base: &CayleyGroup, cover: &Cover) -> Result<CoverCheck> {
    let h = &cover.group;
    let kernel_is_subgroup = h.is_subgroup(&cover.kernel);
    let center = h.center();
    let derived = h.derived_subgroup();
    let kernel_central = cover.kernel.iter().all(|a| center.contains(a));
    let kernel_in_derived = cover.kernel.iter().all(|a| derived.contains(a));
    let quotient_isomorphic = kernel_is_subgroup
        && h.is_normal(&cover.kernel)
        && find_isomorphism(&h.quotient(&cover.kernel)?, base)?.is_some();
    Ok(CoverCheck {
        kernel_is_subgroup,
        kernel_central,
        kernel_in_derived,
        quotient_isomorphic,
    })
}

fn table(name: &str, text: &str) -> Result<CayleyGroup> {
    CayleyGroup::parse(text).map_err(|e| Error::InvalidTable(format!("{name}: {e}")))
}

const V4: &str = include_str!("../../data/v4.tbl");
const D8: &str = include_str!("../../data/d8.tbl");
const Q8: &str = include_str!("../../data/q8.tbl");
const C3XC3: &str = include_str!("../../data/c3xc3.tbl");
const HE3: &str = include_str!("../../data/he3.tbl");
const M27: &str = include_str!("../../data/m27.tbl");
const C4: &str = include_str!("../../data/c4.tbl");
const C9: &str = include_str!("../../data/c9.tbl");

/// The shipped cases. Every table is validated as a group when parsed;
/// cover conditions are checked separately by [`check_cover`].
pub fn covering_registry() -> Result<Vec<CoveringCase>> {
    let cover = |name, text, kernel: &[usize]| -> Result<Cover> {
        Ok(Cover {
            name,
            group: table(name, text)?,
            kernel: kernel.to_vec(),
        })
    };
    Ok(vec![
        CoveringCase {
            name: "klein_four",
            base_name: "C2xC2",
            base: table("C2xC2", V4)?,
            abelian: Some((2, &[1, 1])),
            covers: vec![cover("D8", D8, &[0, 2])?, cover("Q8", Q8, &[0, 1])?],
            note: "Schur multiplier of order 2; dihedral and quaternion covers",
        },
        CoveringCase {
            name: "c3xc3",
            base_name: "C3xC3",
            base: table("C3xC3", C3XC3)?,
            abelian: Some((3, &[1, 1])),
            covers: vec![
                cover("Heisenberg(3)", HE3, &[0, 9, 18])?,
                cover("C9:C3", M27, &[0, 3, 6])?,
            ],
            note: "the two non-abelian groups of order 27; that they exhaust the covers \
                   rests on the multiplier of C_p x C_p having order p, not on a search",
        },
        CoveringCase {
            name: "c4",
            base_name: "C4",
            base: table("C4", C4)?,
            abelian: Some((2, &[2])),
            covers: vec![cover("C4", C4, &[0])?],
            note: "trivial multiplier; the group is its own cover",
        },
        CoveringCase {
            name: "c9",
            base_name: "C9",
            base: table("C9", C9)?,
            abelian: Some((3, &[2])),
            covers: vec![cover("C9", C9, &[0])?],
            note: "trivial multiplier; the group is its own cover",
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::cayley::oracle_cayley_aut_count;

    #[test]
    fn shipped_covers_are_valid() {
        for case in covering_registry().unwrap() {
            for cover in &case.covers {
                let check = check_cover(&case.base, cover).unwrap();
                assert!(check.holds(), "{} / {}: {check:?}", case.name, cover.name);
                assert_eq!(cover.group.order(), case.base.order() * cover.kernel.len());
            }
        }
    }

    #[test]
    fn documented_aut_counts() {
        let reg = covering_registry().unwrap();
        let count = |case: usize, i: usize| oracle_cayley_aut_count(&reg[case].covers[i].group).unwrap();
        assert_eq!(count(0, 0), 8);
        assert_eq!(count(0, 1), 24);
        assert_eq!(count(1, 0), 432);
        assert_eq!(count(1, 1), 54);
        assert_eq!(count(2, 0), 2);
        assert_eq!(oracle_cayley_aut_count(&reg[0].base).unwrap(), 6);
    }

    #[test]
    fn wrong_kernel_is_rejected() {
        let reg = covering_registry().unwrap();
        let d8 = &reg[0].covers[0];
        // A non-central reflection subgroup.
        let bad = Cover {
            kernel: vec![0, 4],
            ..d8.clone()
        };
        assert!(!check_cover(&reg[0].base, &bad).unwrap().holds());
    }
}

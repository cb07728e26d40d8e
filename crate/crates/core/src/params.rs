//! Parameter triples for the multi-parametric σ/τ construction.
//!
//! The maps built in [`crate::solution`] are parametrized by a triple
//! `(z₁, z₂, ξ)` of carrier elements. A triple is admissible when
//!
//! * `z₁`, `z₂`, and `ξ` are right distributive, i.e. each `h` of them
//!   satisfies `(a − b + c)∘h = a∘h − b∘h + c∘h` for all `a, b, c`, and
//! * the two combinations `c₁ = a∘z₂∘z₁ − a∘ξ` and `c₂ = −(a∘ξ) + a∘z₁∘z₂`
//!   take the same value for every `a`.
//!
//! The braid property of the resulting maps only needs `z₁, z₂` right
//! distributive plus the constants, so triples passing that weaker test with
//! `ξ` outside the right-distributive set are also representable; they are
//! flagged (`xi_right_distributive = false`) and listed separately, since
//! the inverse-map identities additionally lean on `ξ`.

use serde::{Deserialize, Serialize};

use crate::brace::NearBrace;
use crate::error::Error;
use crate::group::Elem;

/// First `(a, b, c)` at which `(a − b + c)∘h ≠ a∘h − b∘h + c∘h`, if any.
pub fn right_distributive_witness(nb: &NearBrace, h: Elem) -> Option<(Elem, Elem, Elem)> {
    let n = nb.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if nb.mul(nb.amb(a, b, c), h)
                    != nb.amb(nb.mul(a, h), nb.mul(b, h), nb.mul(c, h))
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_right_distributive(nb: &NearBrace, h: Elem) -> bool {
    right_distributive_witness(nb, h).is_none()
}

/// All right-distributive elements, in index order.
pub fn right_distributive_set(nb: &NearBrace) -> Vec<Elem> {
    (0..nb.order())
        .filter(|&h| is_right_distributive(nb, h))
        .collect()
}

/// The two constants of a triple, or the first element pair on which one of
/// them fails to be constant.
pub fn constants_for(nb: &NearBrace, z1: Elem, z2: Elem, xi: Elem) -> Result<(Elem, Elem), Error> {
    let n = nb.order();
    for v in [z1, z2, xi] {
        if v >= n {
            return Err(Error::ElementRange { index: v, order: n });
        }
    }
    let c1_of = |a: Elem| {
        nb.add(
            nb.mul(nb.mul(a, z2), z1),
            nb.neg(nb.mul(a, xi)),
        )
    };
    let c2_of = |a: Elem| {
        nb.add(
            nb.neg(nb.mul(a, xi)),
            nb.mul(nb.mul(a, z1), z2),
        )
    };
    let c1 = c1_of(0);
    if let Some(a) = (1..n).find(|&a| c1_of(a) != c1) {
        return Err(Error::NonConstant {
            which: "c1",
            a1: 0,
            a2: a,
            v1: c1,
            v2: c1_of(a),
        });
    }
    let c2 = c2_of(0);
    if let Some(a) = (1..n).find(|&a| c2_of(a) != c2) {
        return Err(Error::NonConstant {
            which: "c2",
            a1: 0,
            a2: a,
            v1: c2,
            v2: c2_of(a),
        });
    }
    Ok((c1, c2))
}

/// A validated parameter triple together with its derived constants. The
/// constants and the `ξ` flag are computed, never accepted from a caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamTriple {
    pub z1: Elem,
    pub z2: Elem,
    pub xi: Elem,
    pub c1: Elem,
    pub c2: Elem,
    /// Whether `ξ` itself lies in the right-distributive set. Always true
    /// for triples from [`ParamTriple::new`]; recorded honestly by
    /// [`ParamTriple::new_relaxed`].
    pub xi_right_distributive: bool,
}

impl ParamTriple {
    /// Validate a triple under the full admissibility hypothesis: all three
    /// elements right distributive and both constants independent of `a`.
    pub fn new(nb: &NearBrace, z1: Elem, z2: Elem, xi: Elem) -> Result<Self, Error> {
        let t = Self::new_relaxed(nb, z1, z2, xi)?;
        if !t.xi_right_distributive {
            return Err(Error::NotRightDistributive { z: xi });
        }
        Ok(t)
    }

    /// Validate a triple under the weaker hypothesis that still yields the
    /// braid property: `z₁, z₂` right distributive and constants exist. `ξ`
    /// membership is recorded in the flag rather than enforced.
    pub fn new_relaxed(nb: &NearBrace, z1: Elem, z2: Elem, xi: Elem) -> Result<Self, Error> {
        let (c1, c2) = constants_for(nb, z1, z2, xi)?;
        for z in [z1, z2] {
            if !is_right_distributive(nb, z) {
                return Err(Error::NotRightDistributive { z });
            }
        }
        Ok(ParamTriple {
            z1,
            z2,
            xi,
            c1,
            c2,
            xi_right_distributive: is_right_distributive(nb, xi),
        })
    }
}

/// All fully admissible triples, in lexicographic `(z₁, z₂, ξ)` order.
pub fn admissible_params(nb: &NearBrace) -> Vec<ParamTriple> {
    let rd = right_distributive_set(nb);
    let mut out = Vec::new();
    for &z1 in &rd {
        for &z2 in &rd {
            for &xi in &rd {
                if let Ok((c1, c2)) = constants_for(nb, z1, z2, xi) {
                    out.push(ParamTriple {
                        z1,
                        z2,
                        xi,
                        c1,
                        c2,
                        xi_right_distributive: true,
                    });
                }
            }
        }
    }
    out
}

/// Triples that pass the weaker hypothesis but not the full one: `z₁, z₂`
/// right distributive, constants exist, `ξ` not right distributive. The maps
/// they generate still satisfy the braid relation; the inverse-pair
/// identities are not guaranteed for them.
pub fn weakly_admissible_params(nb: &NearBrace) -> Vec<ParamTriple> {
    let n = nb.order();
    let rd = right_distributive_set(nb);
    let outside: Vec<Elem> = (0..n).filter(|h| !rd.contains(h)).collect();
    let mut out = Vec::new();
    for &z1 in &rd {
        for &z2 in &rd {
            for &xi in &outside {
                if let Ok((c1, c2)) = constants_for(nb, z1, z2, xi) {
                    out.push(ParamTriple {
                        z1,
                        z2,
                        xi,
                        c1,
                        c2,
                        xi_right_distributive: false,
                    });
                }
            }
        }
    }
    out
}

/// The parameters of the companion inverse map: `ξ̂ = ξ⁻¹` and
/// `ẑᵢ = zᵢ∘ξ⁻¹`. The right-distributive set is closed under `∘` and
/// inverses, so for an admissible source triple all three stay inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InverseParams {
    pub z1: Elem,
    pub z2: Elem,
    pub xi: Elem,
}

pub fn inverse_params(nb: &NearBrace, p: &ParamTriple) -> InverseParams {
    let xi_inv = nb.inv(p.xi);
    InverseParams {
        z1: nb.mul(p.z1, xi_inv),
        z2: nb.mul(p.z2, xi_inv),
        xi: xi_inv,
    }
}

/// σ table of the master construction: `sigma[a][b] = a∘b∘z₁ − a∘ξ + z₂`.
pub(crate) fn master_sigma(nb: &NearBrace, z1: Elem, z2: Elem, xi: Elem) -> Vec<Vec<Elem>> {
    let n = nb.order();
    (0..n)
        .map(|a| {
            let shift = nb.neg(nb.mul(a, xi));
            (0..n)
                .map(|b| nb.add(nb.add(nb.mul(nb.mul(a, b), z1), shift), z2))
                .collect()
        })
        .collect()
}

/// Outcome of comparing the σ tables of two triples against the identities
/// that equal tables force on the parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoincidenceReport {
    /// Whether the two σ tables agree entrywise.
    pub tables_equal: bool,
    /// For each structural pattern the pair fits, the value of the forced
    /// parameter identity. Patterns: `"reflexive"` (the triples are equal),
    /// `"single-parameter"` (both have `z₁ = 1` and `ξ = 0∘z₂`, forcing
    /// `z⁻¹∘w − 1 = w − z` on `z = z₂` of the first and `w = z₂` of the
    /// second), `"swapped"` (the second triple swaps `z₁ ↔ z₂` and keeps
    /// `ξ`, forcing `0∘z₁⁻¹∘z₂ = z₂ − z₁`).
    pub patterns: Vec<(&'static str, bool)>,
    /// `Some(conjunction of pattern identities)` when the tables are equal
    /// and at least one pattern applies; `None` otherwise (the identities
    /// are only forced for coinciding tables).
    pub identity_holds: Option<bool>,
}

/// Compare the σ tables of two triples and evaluate the parameter identities
/// that coinciding tables force for the patterns the pair fits.
pub fn sigma_coincidence_check(
    nb: &NearBrace,
    t1: &ParamTriple,
    t2: &ParamTriple,
) -> CoincidenceReport {
    let s1 = master_sigma(nb, t1.z1, t1.z2, t1.xi);
    let s2 = master_sigma(nb, t2.z1, t2.z2, t2.xi);
    let tables_equal = s1 == s2;

    let one = nb.one();
    let zero = nb.zero();
    let mut patterns = Vec::new();

    if (t1.z1, t1.z2, t1.xi) == (t2.z1, t2.z2, t2.xi) {
        patterns.push(("reflexive", true));
    }

    let single_shape = |t: &ParamTriple| t.z1 == one && t.xi == nb.mul(zero, t.z2);
    if single_shape(t1) && single_shape(t2) {
        let (z, w) = (t1.z2, t2.z2);
        let lhs = nb.add(nb.mul(nb.inv(z), w), nb.neg(one));
        let rhs = nb.add(w, nb.neg(z));
        patterns.push(("single-parameter", lhs == rhs));
    }

    if (t2.z1, t2.z2, t2.xi) == (t1.z2, t1.z1, t1.xi) {
        let (z1, z2) = (t1.z1, t1.z2);
        let lhs = nb.mul(nb.mul(zero, nb.inv(z1)), z2);
        let rhs = nb.add(z2, nb.neg(z1));
        patterns.push(("swapped", lhs == rhs));
    }

    let identity_holds = if tables_equal && !patterns.is_empty() {
        Some(patterns.iter().all(|&(_, ok)| ok))
    } else {
        None
    };

    CoincidenceReport {
        tables_equal,
        patterns,
        identity_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_near_brace;
    use crate::enumerate::enumerate_near_braces;
    use crate::group::{build_standard, GroupSpec};

    fn group(s: &str) -> crate::group::GroupTable {
        build_standard(&GroupSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn trivial_structures_have_full_right_distributive_set() {
        // a − b + c collapses to a∘b⁻¹∘c on every trivial near brace, so
        // right distributivity holds for each element, abelian or not.
        for (spec, kappa) in [("cyclic:4", 2), ("symmetric:3", 0), ("quaternion", 2)] {
            let nb = trivial_near_brace(&group(spec), kappa).unwrap();
            assert_eq!(
                right_distributive_set(&nb),
                (0..nb.order()).collect::<Vec<_>>(),
                "{}",
                spec
            );
        }
    }

    #[test]
    fn one_is_always_right_distributive() {
        for nb in enumerate_near_braces(&group("cyclic:4"), None).unwrap() {
            assert!(is_right_distributive(&nb, nb.one()));
        }
    }

    #[test]
    fn right_distributive_set_is_closed_under_product_and_inverse() {
        let mut structures = enumerate_near_braces(&group("symmetric:3"), Some(8)).unwrap();
        structures.extend(enumerate_near_braces(&group("cyclic:4"), None).unwrap());
        for nb in &structures {
            let rd = right_distributive_set(nb);
            for &h in &rd {
                assert!(rd.contains(&nb.inv(h)));
                for &k in &rd {
                    assert!(rd.contains(&nb.mul(h, k)));
                }
            }
        }
    }

    #[test]
    fn identity_triple_is_admissible_on_skew_braces() {
        for spec in ["cyclic:4", "symmetric:3"] {
            let nb = trivial_near_brace(&group(spec), 0).unwrap();
            let one = nb.one();
            let t = ParamTriple::new(&nb, one, one, one).unwrap();
            assert_eq!((t.c1, t.c2), (nb.zero(), nb.zero()), "{}", spec);
        }
    }

    #[test]
    fn abelian_trivial_structure_admits_every_triple() {
        for kappa in 0..4 {
            let nb = trivial_near_brace(&group("cyclic:4"), kappa).unwrap();
            assert_eq!(admissible_params(&nb).len(), 64);
            assert!(weakly_admissible_params(&nb).is_empty());
        }
    }

    #[test]
    fn symmetric_three_admissibility_requires_central_combination() {
        // On the trivial skew brace over S3, the constants exist exactly
        // when z₂∘z₁∘ξ⁻¹ is central, i.e. ξ = z₂∘z₁; with z₁ = z₂ = 1 that
        // means ξ = 1.
        let nb = trivial_near_brace(&group("symmetric:3"), 0).unwrap();
        let one = nb.one();
        for xi in 0..6 {
            let ok = ParamTriple::new(&nb, one, one, xi).is_ok();
            assert_eq!(ok, xi == one, "xi = {}", xi);
        }
        let all = admissible_params(&nb);
        assert_eq!(all.len(), 36);
        for t in &all {
            assert_eq!(t.xi, nb.mul(t.z2, t.z1));
        }
    }

    #[test]
    fn constants_mismatch_reports_the_failing_element() {
        let nb = trivial_near_brace(&group("symmetric:3"), 0).unwrap();
        let err = constants_for(&nb, 0, 0, 1).unwrap_err();
        assert!(matches!(err, Error::NonConstant { which: "c1", .. }));
    }

    #[test]
    fn admissible_list_is_lexicographic_and_consistent() {
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let all = admissible_params(&nb);
        let keys: Vec<_> = all.iter().map(|t| (t.z1, t.z2, t.xi)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        for t in &all {
            let rebuilt = ParamTriple::new(&nb, t.z1, t.z2, t.xi).unwrap();
            assert_eq!(&rebuilt, t);
        }
    }

    #[test]
    fn inverse_params_of_the_worked_example() {
        // (z₁, z₂, ξ) = (e, g, g³) over the trivial structure on cyclic:4
        // with κ = g² gives ξ̂ = g, ẑ₁ = g, ẑ₂ = g².
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let p = ParamTriple::new(&nb, 0, 1, 3).unwrap();
        assert_eq!(p.c1, 0);
        assert_eq!(p.c2, 0);
        let h = inverse_params(&nb, &p);
        assert_eq!((h.z1, h.z2, h.xi), (1, 2, 1));
    }

    #[test]
    fn coincidence_single_parameter_family_on_abelian_carrier() {
        // On the trivial structure over cyclic:4 with κ = g², the
        // single-parameter σ does not depend on z at all, so every pair of
        // values must satisfy the forced identity.
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let zero = nb.zero();
        let one = nb.one();
        let triples: Vec<ParamTriple> = (0..4)
            .map(|z| ParamTriple::new(&nb, one, z, nb.mul(zero, z)).unwrap())
            .collect();
        for a in &triples {
            for b in &triples {
                let rep = sigma_coincidence_check(&nb, a, b);
                assert!(rep.tables_equal);
                assert_eq!(rep.identity_holds, Some(true));
                assert!(rep
                    .patterns
                    .iter()
                    .any(|&(name, ok)| name == "single-parameter" && ok));
            }
        }
    }

    #[test]
    fn coincidence_swapped_pattern_on_abelian_carrier() {
        let nb = trivial_near_brace(&group("cyclic:4"), 2).unwrap();
        let t1 = ParamTriple::new(&nb, 1, 3, 0).unwrap();
        let t2 = ParamTriple::new(&nb, 3, 1, 0).unwrap();
        let rep = sigma_coincidence_check(&nb, &t1, &t2);
        assert!(rep.tables_equal);
        assert!(rep.patterns.iter().any(|&(name, _)| name == "swapped"));
        assert_eq!(rep.identity_holds, Some(true));
    }

    #[test]
    fn coincidence_reflexive_pattern_always_holds() {
        let nb = trivial_near_brace(&group("symmetric:3"), 0).unwrap();
        let t = ParamTriple::new(&nb, 1, 2, nb.mul(2, 1)).unwrap();
        let rep = sigma_coincidence_check(&nb, &t, &t);
        assert!(rep.tables_equal);
        assert_eq!(rep.patterns, vec![("reflexive", true)]);
        assert_eq!(rep.identity_holds, Some(true));
    }

    #[test]
    fn unrelated_triples_give_no_verdict() {
        let nb = trivial_near_brace(&group("symmetric:3"), 0).unwrap();
        let t1 = ParamTriple::new(&nb, 0, 1, 1).unwrap();
        let t2 = ParamTriple::new(&nb, 2, 0, 2).unwrap();
        let rep = sigma_coincidence_check(&nb, &t1, &t2);
        assert_eq!(rep.identity_holds, None);
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        let nb = trivial_near_brace(&group("cyclic:4"), 0).unwrap();
        assert!(matches!(
            ParamTriple::new(&nb, 0, 9, 0),
            Err(Error::ElementRange { index: 9, .. })
        ));
    }
}

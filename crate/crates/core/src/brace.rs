//! Near braces: one carrier with two compatible group structures.
//!
//! A near brace is a set with two group operations, an addition `+` (neutral
//! element `0`) and a multiplication `∘` (neutral element `1`), tied together
//! by the left distributivity law
//!
//! ```text
//! a ∘ (b + c) = a∘b − a∘0 + a∘c
//! ```
//!
//! where `−x` is the additive inverse and chains like `x − y + z` evaluate
//! left to right. When `0 = 1` this is exactly a skew brace. This module
//! provides validated construction from raw tables, the central-element
//! ("trivial") construction, reconstruction of the addition from a σ family,
//! the shift maps that move between near braces and skew braces, structural
//! identity reporting, and morphism checking.

use serde::Serialize;

use crate::error::Error;
use crate::group::{assoc_witness, CheckFailure, Diagnostics, Elem, GroupTable};

/// Outcome of one identity evaluated over the whole carrier: whether it
/// holds, and the lexicographically first counterexample when it does not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Vec<Elem>>,
}

impl Check {
    pub(crate) fn pass() -> Self {
        Check {
            holds: true,
            witness: None,
        }
    }

    pub(crate) fn fail(witness: Vec<Elem>) -> Self {
        Check {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Check the left distributivity law `a∘(b+c) = a∘b − a∘0 + a∘c` over all
/// triples of two group tables sharing a carrier. Structural defects
/// (mismatched carrier sizes) are errors; a law violation comes back as
/// non-ok [`Diagnostics`] with the first failing triple.
pub fn validate_near_brace(add: &GroupTable, mul: &GroupTable) -> Result<Diagnostics, Error> {
    if add.order() != mul.order() {
        return Err(Error::CarrierMismatch {
            left: add.order(),
            right: mul.order(),
        });
    }
    let n = add.order();
    let zero = add.identity();
    let mut failures = Vec::new();
    'scan: for a in 0..n {
        let a0 = mul.op(a, zero);
        let neg_a0 = add.inv(a0);
        for b in 0..n {
            let head = add.op(mul.op(a, b), neg_a0);
            for c in 0..n {
                if mul.op(a, add.op(b, c)) != add.op(head, mul.op(a, c)) {
                    failures.push(CheckFailure {
                        check: "left-distributivity",
                        witness: vec![a, b, c],
                    });
                    break 'scan;
                }
            }
        }
    }
    Ok(Diagnostics {
        ok: failures.is_empty(),
        failures,
    })
}

/// A validated near brace. Both tables are full groups on the same carrier
/// and the left distributivity law holds; these facts are established at
/// construction and never rechecked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearBrace {
    add: GroupTable,
    mul: GroupTable,
}

impl NearBrace {
    /// Bind an addition and a multiplication table into a near brace,
    /// verifying the distributivity law. The multiplication table's labels
    /// are adopted for the whole structure.
    pub fn new(add: GroupTable, mul: GroupTable) -> Result<Self, Error> {
        let diag = validate_near_brace(&add, &mul)?;
        if let Some(f) = diag.failures.first() {
            let w = (f.witness[0], f.witness[1], f.witness[2]);
            return Err(Error::NotDistributive { witness: w });
        }
        let add = add.with_labels(mul.labels().to_vec());
        Ok(NearBrace { add, mul })
    }

    pub fn order(&self) -> usize {
        self.mul.order()
    }

    pub fn labels(&self) -> &[String] {
        self.mul.labels()
    }

    pub fn addition(&self) -> &GroupTable {
        &self.add
    }

    pub fn multiplication(&self) -> &GroupTable {
        &self.mul
    }

    /// Additive neutral element `0`.
    pub fn zero(&self) -> Elem {
        self.add.identity()
    }

    /// Multiplicative neutral element `1`.
    pub fn one(&self) -> Elem {
        self.mul.identity()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add.op(a, b)
    }

    /// Additive inverse `−a`.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.add.inv(a)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul.op(a, b)
    }

    /// Multiplicative inverse `a⁻¹`.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.mul.inv(a)
    }

    /// The ternary heap combination `a − b + c`, evaluated left to right.
    #[inline]
    pub fn amb(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.add.op(self.add.op(a, self.add.inv(b)), c)
    }

    /// True when the two neutral elements coincide, i.e. the structure is a
    /// skew brace.
    pub fn is_skew(&self) -> bool {
        self.zero() == self.one()
    }

    /// True for a skew brace with abelian addition, i.e. a brace.
    pub fn is_brace(&self) -> bool {
        self.is_skew() && self.add.is_abelian()
    }

    /// First element violating `a − a∘0 = 1` or `−(a∘0) + a = 1`, if any.
    pub fn singular_witness(&self) -> Option<Elem> {
        let (zero, one) = (self.zero(), self.one());
        (0..self.order()).find(|&a| {
            let a0 = self.mul(a, zero);
            self.add(a, self.neg(a0)) != one || self.add(self.neg(a0), a) != one
        })
    }

    /// True when `a − a∘0 = −(a∘0) + a = 1` for every `a`.
    pub fn is_singular(&self) -> bool {
        self.singular_witness().is_none()
    }

    /// The near brace with addition `a +₁ b := a − 1 + b` on the same
    /// multiplication. Its additive neutral is `1`, so the result is a skew
    /// brace; shifting an already-skew structure returns it unchanged.
    pub fn shift_to_skew(&self) -> NearBrace {
        let n = self.order();
        let one = self.one();
        let rows = (0..n)
            .map(|a| (0..n).map(|b| self.amb(a, one, b)).collect())
            .collect();
        let add = GroupTable::from_table(self.labels().to_vec(), rows)
            .expect("the 1-shifted addition of a near brace is a group");
        NearBrace::new(add, self.mul.clone())
            .expect("the 1-shifted structure satisfies distributivity")
    }

    /// Inverse direction of [`shift_to_skew`](Self::shift_to_skew): from a
    /// skew brace, the near brace with addition `a +' b := a ⊖ t ⊕ b` (the
    /// right-hand operations are the skew brace's), whose additive neutral
    /// is `t`. Errors when `self` is not skew.
    pub fn shift_by(&self, t: Elem) -> Result<NearBrace, Error> {
        if !self.is_skew() {
            return Err(Error::NotSkew);
        }
        if t >= self.order() {
            return Err(Error::ElementRange {
                index: t,
                order: self.order(),
            });
        }
        let n = self.order();
        let rows = (0..n)
            .map(|a| (0..n).map(|b| self.amb(a, t, b)).collect())
            .collect();
        let add = GroupTable::from_table(self.labels().to_vec(), rows)
            .expect("a shifted skew-brace addition is a group");
        NearBrace::new(add, self.mul.clone())
    }
}

/// Build the trivial near brace `a + b := a ∘ κ⁻¹ ∘ b` over a group. The
/// additive neutral is `κ` and the structure is always singular; `κ` must be
/// central (the distributivity law itself holds for any `κ`, but singularity
/// — and the constructions downstream — need centrality). `κ = 1` is
/// accepted and yields the trivial skew brace with `+ = ∘`.
pub fn trivial_near_brace(g: &GroupTable, kappa: Elem) -> Result<NearBrace, Error> {
    let n = g.order();
    if kappa >= n {
        return Err(Error::ElementRange {
            index: kappa,
            order: n,
        });
    }
    if let Some(x) = (0..n).find(|&x| g.op(kappa, x) != g.op(x, kappa)) {
        return Err(Error::KappaNotCentral { kappa, witness: x });
    }
    let kinv = g.inv(kappa);
    let rows = (0..n)
        .map(|a| (0..n).map(|b| g.op(g.op(a, kinv), b)).collect())
        .collect();
    let add = GroupTable::from_table(g.labels().to_vec(), rows)
        .expect("a ∘ κ⁻¹ ∘ b is a group operation");
    NearBrace::new(add, g.clone())
}

/// A family of bijections `σ_x` together with the fixed element `z` used in
/// the addition reconstruction `y + x := x ∘ σ_{x⁻¹}(y∘z) ∘ z⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaFamily {
    order: usize,
    z: Elem,
    sigma: Vec<Vec<Elem>>, // sigma[x][y] = σ_x(y)
}

impl SigmaFamily {
    /// Validate that every row is a permutation and all indices are in range.
    pub fn new(order: usize, z: Elem, sigma: Vec<Vec<Elem>>) -> Result<Self, Error> {
        if z >= order {
            return Err(Error::ElementRange { index: z, order });
        }
        if sigma.len() != order {
            return Err(Error::MalformedTable(format!(
                "sigma has {} rows for order {}",
                sigma.len(),
                order
            )));
        }
        for (x, row) in sigma.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "sigma row {} has {} entries for order {}",
                    x,
                    row.len(),
                    order
                )));
            }
            let mut seen = vec![false; order];
            for &v in row {
                if v >= order {
                    return Err(Error::ElementRange { index: v, order });
                }
                if seen[v] {
                    return Err(Error::SigmaRowNotPermutation { row: x });
                }
                seen[v] = true;
            }
        }
        Ok(SigmaFamily { order, z, sigma })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn z(&self) -> Elem {
        self.z
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.sigma
    }

    pub fn apply(&self, x: Elem, y: Elem) -> Elem {
        self.sigma[x][y]
    }
}

/// Tabulate the single-parameter family `σ_x(y) = x∘y − x∘0∘z + z` of a near
/// brace. Each row is a composition of a left multiplication with additive
/// translations, hence a bijection, so this never fails.
pub fn sigma_family_of(nb: &NearBrace, z: Elem) -> Result<SigmaFamily, Error> {
    let n = nb.order();
    if z >= n {
        return Err(Error::ElementRange { index: z, order: n });
    }
    let zero = nb.zero();
    let sigma = (0..n)
        .map(|x| {
            let shift = nb.neg(nb.mul(nb.mul(x, zero), z));
            (0..n)
                .map(|y| nb.add(nb.add(nb.mul(x, y), shift), z))
                .collect()
        })
        .collect();
    SigmaFamily::new(n, z, sigma)
}

/// Reconstruct an addition from a σ family over a multiplication group via
/// `y + x := x ∘ σ_{x⁻¹}(y∘z) ∘ z⁻¹`, then validate the result into a near
/// brace. Errors name the first broken axiom: associativity of the rebuilt
/// `+`, uniqueness of its neutral element (derived as `σ⁻¹_{x⁻¹}(z)∘z⁻¹`,
/// which must not depend on `x`), the remaining group laws, and finally the
/// distributivity law.
pub fn addition_from_sigma(g: &GroupTable, fam: &SigmaFamily) -> Result<NearBrace, Error> {
    let n = g.order();
    if fam.order() != n {
        return Err(Error::CarrierMismatch {
            left: n,
            right: fam.order(),
        });
    }
    let z = fam.z();
    let zinv = g.inv(z);

    let rows: Vec<Vec<Elem>> = (0..n)
        .map(|y| {
            (0..n)
                .map(|x| {
                    let xinv = g.inv(x);
                    g.op(g.op(x, fam.apply(xinv, g.op(y, z))), zinv)
                })
                .collect()
        })
        .collect();

    if let Some(w) = assoc_witness(&rows) {
        return Err(Error::AdditionNotAssociative { witness: w });
    }

    // Per-column left-neutral candidate: the w with w + x = x.
    let mut candidates: Vec<Elem> = (0..n)
        .map(|x| {
            let xinv = g.inv(x);
            let row = &fam.rows()[xinv];
            let pre = row.iter().position(|&v| v == z).expect("row is a permutation");
            g.op(pre, zinv)
        })
        .collect();
    candidates.dedup();
    if candidates.len() != 1 {
        candidates.sort_unstable();
        candidates.dedup();
        return Err(Error::NeutralNotUnique { candidates });
    }

    let add = GroupTable::from_table(g.labels().to_vec(), rows)?;
    NearBrace::new(add, g.clone())
}

/// Named identity checks evaluated exhaustively on one near brace. The
/// distributivity, negation, and ternary entries hold for every valid near
/// brace; the `zero_mul_zero`, `one_plus_one`, and `one_central` identities
/// are consequences of singularity and are reported unconditionally. The two
/// `zero_*_distributive` entries record whether the additive neutral
/// distributes from each side over `a − b + c`; neither is implied by the
/// axioms and both are informational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub distributivity: Check,
    pub is_skew: bool,
    pub is_singular: Check,
    /// `0∘0 = −1` (the additive inverse of the multiplicative neutral).
    pub zero_mul_zero_is_neg_one: Check,
    /// `1+1 = 0⁻¹` (the multiplicative inverse of the additive neutral).
    pub one_plus_one_is_zero_inverse: Check,
    /// `a + 1 = 1 + a` for all `a`.
    pub one_central_in_add: Check,
    /// `a∘(−b) = a∘0 − a∘b + a∘0` for all `a, b`.
    pub negation_identity: Check,
    /// `a∘(b − c + d) = a∘b − a∘c + a∘d` for all `a, b, c, d`.
    pub ternary_distributivity: Check,
    /// `0∘(a − b + c) = 0∘a − 0∘b + 0∘c` for all `a, b, c`.
    pub zero_left_distributive: Check,
    /// `(a − b + c)∘0 = a∘0 − b∘0 + c∘0` for all `a, b, c`.
    pub zero_right_distributive: Check,
}

/// Evaluate all structural identities on a near brace.
pub fn structural_report(nb: &NearBrace) -> StructuralReport {
    let n = nb.order();
    let (zero, one) = (nb.zero(), nb.one());

    // Holds by construction; re-derived here so the report stands alone.
    let distributivity = {
        let diag = validate_near_brace(nb.addition(), nb.multiplication())
            .expect("matching carriers by construction");
        match diag.failures.first() {
            None => Check::pass(),
            Some(f) => Check::fail(f.witness.clone()),
        }
    };

    let is_singular = match nb.singular_witness() {
        None => Check::pass(),
        Some(a) => Check::fail(vec![a]),
    };

    let zero_mul_zero_is_neg_one = if nb.mul(zero, zero) == nb.neg(one) {
        Check::pass()
    } else {
        Check::fail(vec![])
    };

    let one_plus_one_is_zero_inverse = if nb.add(one, one) == nb.inv(zero) {
        Check::pass()
    } else {
        Check::fail(vec![])
    };

    let one_central_in_add = match (0..n).find(|&a| nb.add(a, one) != nb.add(one, a)) {
        None => Check::pass(),
        Some(a) => Check::fail(vec![a]),
    };

    let mut negation_identity = Check::pass();
    'neg: for a in 0..n {
        let a0 = nb.mul(a, zero);
        for b in 0..n {
            if nb.mul(a, nb.neg(b)) != nb.amb(a0, nb.mul(a, b), a0) {
                negation_identity = Check::fail(vec![a, b]);
                break 'neg;
            }
        }
    }

    let mut ternary_distributivity = Check::pass();
    'ter: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if nb.mul(a, nb.amb(b, c, d))
                        != nb.amb(nb.mul(a, b), nb.mul(a, c), nb.mul(a, d))
                    {
                        ternary_distributivity = Check::fail(vec![a, b, c, d]);
                        break 'ter;
                    }
                }
            }
        }
    }

    let mut zero_left_distributive = Check::pass();
    'zl: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if nb.mul(zero, nb.amb(a, b, c))
                    != nb.amb(nb.mul(zero, a), nb.mul(zero, b), nb.mul(zero, c))
                {
                    zero_left_distributive = Check::fail(vec![a, b, c]);
                    break 'zl;
                }
            }
        }
    }

    let mut zero_right_distributive = Check::pass();
    'zr: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if nb.mul(nb.amb(a, b, c), zero)
                    != nb.amb(nb.mul(a, zero), nb.mul(b, zero), nb.mul(c, zero))
                {
                    zero_right_distributive = Check::fail(vec![a, b, c]);
                    break 'zr;
                }
            }
        }
    }

    StructuralReport {
        distributivity,
        is_skew: nb.is_skew(),
        is_singular,
        zero_mul_zero_is_neg_one,
        one_plus_one_is_zero_inverse,
        one_central_in_add,
        negation_identity,
        ternary_distributivity,
        zero_left_distributive,
        zero_right_distributive,
    }
}

/// Result of testing a carrier map for the two homomorphism laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub ok: bool,
    /// `f(a+b) = f(a) + f(b)`.
    pub additive: Check,
    /// `f(a∘b) = f(a) ∘ f(b)`.
    pub multiplicative: Check,
}

/// Check whether `f` (given as `f[a]` per element of `a`'s carrier) is a
/// near-brace morphism from `a` to `b`.
pub fn check_morphism(f: &[Elem], a: &NearBrace, b: &NearBrace) -> Result<MorphismReport, Error> {
    if f.len() != a.order() {
        return Err(Error::CarrierMismatch {
            left: f.len(),
            right: a.order(),
        });
    }
    if let Some(&v) = f.iter().find(|&&v| v >= b.order()) {
        return Err(Error::ElementRange {
            index: v,
            order: b.order(),
        });
    }
    let n = a.order();
    let mut additive = Check::pass();
    'add: for x in 0..n {
        for y in 0..n {
            if f[a.add(x, y)] != b.add(f[x], f[y]) {
                additive = Check::fail(vec![x, y]);
                break 'add;
            }
        }
    }
    let mut multiplicative = Check::pass();
    'mul: for x in 0..n {
        for y in 0..n {
            if f[a.mul(x, y)] != b.mul(f[x], f[y]) {
                multiplicative = Check::fail(vec![x, y]);
                break 'mul;
            }
        }
    }
    Ok(MorphismReport {
        ok: additive.holds && multiplicative.holds,
        additive,
        multiplicative,
    })
}

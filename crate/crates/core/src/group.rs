//! Finite groups as validated Cayley tables.
//!
//! Everything downstream works over a [`GroupTable`]: the full `n × n`
//! multiplication table of a finite group together with identity and inverse
//! data that are always recomputed from the table, never trusted from a
//! caller or a document. Standard families — cyclic, dihedral, symmetric,
//! quaternion, and direct products — are built in fixed canonical element
//! orderings (identity at index 0) so the same family spec always yields the
//! same table, byte for byte.

use serde::Serialize;
use std::fmt;

use crate::error::Error;

/// Index of a carrier element; valid values lie in `[0, n)` for order `n`.
pub type Elem = usize;

/// Largest order accepted by the standard-family constructors.
pub const MAX_CONSTRUCT_ORDER: usize = 64;

/// One failed check together with its lexicographically first witness tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub check: &'static str,
    pub witness: Vec<Elem>,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (witness {:?})", self.check, self.witness)
    }
}

/// Outcome of a validation pass; `ok` holds exactly when `failures` is empty.
/// At most one entry is recorded per check, carrying a minimal witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub ok: bool,
    pub failures: Vec<CheckFailure>,
}

impl Diagnostics {
    fn from_failures(failures: Vec<CheckFailure>) -> Self {
        Diagnostics {
            ok: failures.is_empty(),
            failures,
        }
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "all checks passed");
        }
        let parts: Vec<String> = self.failures.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn check_shape(order: usize, rows: &[Vec<Elem>]) -> Result<(), Error> {
    if order == 0 {
        return Err(Error::MalformedTable("order must be at least 1".into()));
    }
    if rows.len() != order {
        return Err(Error::MalformedTable(format!(
            "expected {} rows, found {}",
            order,
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != order {
            return Err(Error::MalformedTable(format!(
                "row {} has {} entries, expected {}",
                i,
                row.len(),
                order
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v >= order {
                return Err(Error::MalformedTable(format!(
                    "entry ({}, {}) = {} is out of range for order {}",
                    i, j, v, order
                )));
            }
        }
    }
    Ok(())
}

/// First triple (in lexicographic order) at which a raw table fails to be
/// associative, if any. Shared by the group validator and the addition
/// reconstructions, which need the witness before a [`GroupTable`] exists.
pub(crate) fn assoc_witness(rows: &[Vec<Elem>]) -> Option<(Elem, Elem, Elem)> {
    let n = rows.len();
    for a in 0..n {
        for b in 0..n {
            let ab = rows[a][b];
            for c in 0..n {
                if rows[ab][c] != rows[a][rows[b][c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn find_identity(rows: &[Vec<Elem>]) -> Option<Elem> {
    let n = rows.len();
    (0..n).find(|&e| (0..n).all(|j| rows[e][j] == j && rows[j][e] == j))
}

/// Run the group-law checks on a raw table: every row and every column a
/// permutation, associativity over all `n³` triples, a two-sided identity,
/// and a two-sided inverse for every element. Dimension and range defects are
/// errors; algebraic defects come back as [`Diagnostics`], one entry with the
/// lexicographically first witness per failed check.
pub fn validate_table(order: usize, rows: &[Vec<Elem>]) -> Result<Diagnostics, Error> {
    check_shape(order, rows)?;
    let n = order;
    let mut failures = Vec::new();

    'rows: for i in 0..n {
        let mut seen = vec![usize::MAX; n];
        for j in 0..n {
            let v = rows[i][j];
            if seen[v] != usize::MAX {
                failures.push(CheckFailure {
                    check: "row-permutation",
                    witness: vec![i, seen[v], j],
                });
                break 'rows;
            }
            seen[v] = j;
        }
    }

    'cols: for j in 0..n {
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            let v = rows[i][j];
            if seen[v] != usize::MAX {
                failures.push(CheckFailure {
                    check: "column-permutation",
                    witness: vec![j, seen[v], i],
                });
                break 'cols;
            }
            seen[v] = i;
        }
    }

    if let Some((a, b, c)) = assoc_witness(rows) {
        failures.push(CheckFailure {
            check: "associativity",
            witness: vec![a, b, c],
        });
    }

    let identity = find_identity(rows);
    if identity.is_none() {
        failures.push(CheckFailure {
            check: "identity",
            witness: vec![],
        });
    }

    if let Some(e) = identity {
        if let Some(i) =
            (0..n).find(|&i| !(0..n).any(|j| rows[i][j] == e && rows[j][i] == e))
        {
            failures.push(CheckFailure {
                check: "inverses",
                witness: vec![i],
            });
        }
    }

    Ok(Diagnostics::from_failures(failures))
}

/// A finite group stored as its full Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    labels: Vec<String>,
    table: Vec<Elem>, // row-major: table[a * order + b] = a ∘ b
    identity: Elem,
    inverse: Vec<Elem>,
}

impl GroupTable {
    /// Adopt a raw table after validating the group axioms. Identity and
    /// inverses are recomputed here regardless of what the caller believes.
    pub fn from_table(labels: Vec<String>, rows: Vec<Vec<Elem>>) -> Result<Self, Error> {
        let order = rows.len();
        if labels.len() != order {
            return Err(Error::MalformedTable(format!(
                "{} labels for {} elements",
                labels.len(),
                order
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::MalformedTable(format!(
                    "duplicate label {:?}",
                    a
                )));
            }
        }
        let diag = validate_table(order, &rows)?;
        if !diag.ok {
            return Err(Error::InvalidGroup(diag));
        }
        let identity = find_identity(&rows).expect("validated table has an identity");
        let inverse = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| rows[i][j] == identity && rows[j][i] == identity)
                    .expect("validated table has inverses")
            })
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for row in &rows {
            table.extend_from_slice(row);
        }
        Ok(GroupTable {
            order,
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    /// The table as nested rows, `rows[a][b] = a ∘ b`.
    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
        self
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Elements commuting with the whole carrier, in index order.
    pub fn center(&self) -> Vec<Elem> {
        let n = self.order;
        (0..n)
            .filter(|&z| (0..n).all(|x| self.op(z, x) == self.op(x, z)))
            .collect()
    }

    /// Multiplicative order of `a`.
    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }
}

/// Descriptor for a standard group family.
///
/// Canonical element orderings, with the identity always at index 0:
/// * `cyclic:n` — powers of the generator: `e, g, g², …`
/// * `dihedral:n` (order `2n`) — rotations `e, r, …, r^{n-1}` first, then the
///   reflections `f, rf, …, r^{n-1}f` (with `f r = r⁻¹ f`);
/// * `symmetric:k` (`k ≤ 4`) — permutations sorted by their one-line
///   notation, composed as `(p ∘ q)(x) = p(q(x))`;
/// * `quaternion` — `1, i, -1, -i` then `j, k, -j, -k` (powers of `i`, then
///   powers of `i` times `j`);
/// * `product(a,b)` — pairs in row-major order, `(x, y) ↦ x·n_b + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Symmetric(k) => (1..=*k).product(),
            GroupSpec::Quaternion => 8,
            GroupSpec::Product(a, b) => a.order() * b.order(),
        }
    }

    /// Parse a family spec such as `cyclic:4`, `dihedral:3`, `symmetric:3`,
    /// `quaternion`, or `product(cyclic:2,cyclic:3)` (products may nest).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "quaternion" {
            return Ok(GroupSpec::Quaternion);
        }
        if let Some(inner) = s.strip_prefix("product(").and_then(|r| r.strip_suffix(')')) {
            // split at the top-level comma
            let mut depth = 0usize;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        let a = GroupSpec::parse(&inner[..i])?;
                        let b = GroupSpec::parse(&inner[i + 1..])?;
                        return Ok(GroupSpec::Product(Box::new(a), Box::new(b)));
                    }
                    _ => {}
                }
            }
            return Err(Error::UnsupportedFamily(s.to_string()));
        }
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, a),
            None => return Err(Error::UnsupportedFamily(s.to_string())),
        };
        let n: usize = arg
            .parse()
            .map_err(|_| Error::UnsupportedFamily(s.to_string()))?;
        match name {
            "cyclic" if n >= 1 => Ok(GroupSpec::Cyclic(n)),
            "dihedral" if n >= 2 => Ok(GroupSpec::Dihedral(n)),
            "symmetric" if (1..=4).contains(&n) => Ok(GroupSpec::Symmetric(n)),
            _ => Err(Error::UnsupportedFamily(s.to_string())),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{}", n),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{}", n),
            GroupSpec::Symmetric(k) => write!(f, "symmetric:{}", k),
            GroupSpec::Quaternion => write!(f, "quaternion"),
            GroupSpec::Product(a, b) => write!(f, "product({},{})", a, b),
        }
    }
}

fn cyclic_label(i: usize) -> String {
    match i {
        0 => "e".into(),
        1 => "g".into(),
        _ => format!("g^{}", i),
    }
}

fn build_cyclic(n: usize) -> (Vec<String>, Vec<Vec<Elem>>) {
    let labels = (0..n).map(cyclic_label).collect();
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    (labels, rows)
}

/// Dihedral group of order `2n`, elements `r^s f^t` indexed as `t·n + s`.
fn build_dihedral(n: usize) -> (Vec<String>, Vec<Vec<Elem>>) {
    let rot = |s: usize| match s {
        0 => "e".to_string(),
        1 => "r".to_string(),
        _ => format!("r^{}", s),
    };
    let refl = |s: usize| match s {
        0 => "f".to_string(),
        1 => "rf".to_string(),
        _ => format!("r^{}f", s),
    };
    let labels = (0..n).map(rot).chain((0..n).map(refl)).collect();
    let idx = |s: usize, t: usize| t * n + s;
    let mut rows = vec![vec![0; 2 * n]; 2 * n];
    for s1 in 0..n {
        for t1 in 0..2 {
            for s2 in 0..n {
                for t2 in 0..2 {
                    // r^s f distinct rule: f r^s = r^{-s} f
                    let (s, t) = if t1 == 0 {
                        ((s1 + s2) % n, t2)
                    } else {
                        ((s1 + n - s2 % n) % n, 1 - t2)
                    };
                    rows[idx(s1, t1)][idx(s2, t2)] = idx(s, t);
                }
            }
        }
    }
    (labels, rows)
}

/// Quaternion group, elements `i^s j^t` indexed as `t·4 + s`
/// (`j² = i²`, `j i = i⁻¹ j`).
fn build_quaternion() -> (Vec<String>, Vec<Vec<Elem>>) {
    let labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let idx = |s: usize, t: usize| t * 4 + s;
    let mut rows = vec![vec![0; 8]; 8];
    for s1 in 0..4 {
        for t1 in 0..2 {
            for s2 in 0..4 {
                for t2 in 0..2 {
                    let (s, t) = if t1 == 0 {
                        ((s1 + s2) % 4, t2)
                    } else if t2 == 0 {
                        ((s1 + 4 - s2) % 4, 1)
                    } else {
                        ((s1 + 4 - s2 + 2) % 4, 0)
                    };
                    rows[idx(s1, t1)][idx(s2, t2)] = idx(s, t);
                }
            }
        }
    }
    (labels, rows)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    // lexicographic order of one-line notation
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn build_symmetric(k: usize) -> (Vec<String>, Vec<Vec<Elem>>) {
    let perms = permutations(k);
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
        .collect();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let n = perms.len();
    let mut rows = vec![vec![0; n]; n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let composed: Vec<usize> = (0..k).map(|x| p[q[x]]).collect();
            rows[i][j] = index_of(&composed);
        }
    }
    (labels, rows)
}

fn build_raw(spec: &GroupSpec) -> Result<(Vec<String>, Vec<Vec<Elem>>), Error> {
    match spec {
        GroupSpec::Cyclic(n) => Ok(build_cyclic(*n)),
        GroupSpec::Dihedral(n) => Ok(build_dihedral(*n)),
        GroupSpec::Symmetric(k) => Ok(build_symmetric(*k)),
        GroupSpec::Quaternion => Ok(build_quaternion()),
        GroupSpec::Product(sa, sb) => {
            let (la, ra) = build_raw(sa)?;
            let (lb, rb) = build_raw(sb)?;
            let (na, nb) = (la.len(), lb.len());
            let labels = (0..na * nb)
                .map(|i| format!("({},{})", la[i / nb], lb[i % nb]))
                .collect();
            let mut rows = vec![vec![0; na * nb]; na * nb];
            for ia in 0..na {
                for ib in 0..nb {
                    for ja in 0..na {
                        for jb in 0..nb {
                            rows[ia * nb + ib][ja * nb + jb] =
                                ra[ia][ja] * nb + rb[ib][jb];
                        }
                    }
                }
            }
            Ok((labels, rows))
        }
    }
}

/// Build a standard family member. The result is passed back through
/// [`GroupTable::from_table`], so every constructed table is also validated.
pub fn build_standard(spec: &GroupSpec) -> Result<GroupTable, Error> {
    let order = spec.order();
    if order > MAX_CONSTRUCT_ORDER {
        return Err(Error::OrderBound {
            order,
            bound: MAX_CONSTRUCT_ORDER,
        });
    }
    let (labels, rows) = build_raw(spec)?;
    GroupTable::from_table(labels, rows)
}

/// The fixed roster of standard groups of order at most `max_order`: all
/// cyclic groups, dihedral groups, symmetric groups up to `symmetric:4`,
/// the quaternion group, and products of two cyclic factors `a ≤ b`.
pub fn standard_groups(max_order: usize) -> Vec<(GroupSpec, GroupTable)> {
    let mut specs = Vec::new();
    for n in 1..=max_order {
        specs.push(GroupSpec::Cyclic(n));
    }
    for n in 2..=max_order / 2 {
        specs.push(GroupSpec::Dihedral(n));
    }
    for k in 2..=4 {
        if (1..=k).product::<usize>() <= max_order {
            specs.push(GroupSpec::Symmetric(k));
        }
    }
    if max_order >= 8 {
        specs.push(GroupSpec::Quaternion);
    }
    for a in 2..=max_order {
        for b in a..=max_order {
            if a * b <= max_order {
                specs.push(GroupSpec::Product(
                    Box::new(GroupSpec::Cyclic(a)),
                    Box::new(GroupSpec::Cyclic(b)),
                ));
            }
        }
    }
    specs
        .into_iter()
        .map(|s| {
            let g = build_standard(&s).expect("standard roster stays within bounds");
            (s, g)
        })
        .collect()
}

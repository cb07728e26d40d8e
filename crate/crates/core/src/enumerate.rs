//! Exhaustive enumeration of the near braces over a fixed multiplication.
//!
//! Given a finite group `(B, ∘)`, this module finds every addition table `+`
//! on the same carrier such that `(B, +, ∘)` is a near brace. The search
//! pins the additive neutral element, fills the remaining cells row by row
//! under Latin-square masks, and prunes with incremental associativity
//! checking (complete: every triple is tested the moment its last lookup is
//! placed) plus a forward distributivity check; each completed table is then
//! revalidated from scratch before it is emitted. Output is sorted
//! lexicographically by the flattened addition table, so enumeration order
//! is a stable, documented artifact.

use crate::brace::NearBrace;
use crate::error::Error;
use crate::group::{Elem, GroupTable};

/// Largest carrier the exhaustive search accepts without an explicit
/// override.
pub const MAX_ENUM_ORDER: usize = 8;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    n: usize,
    mul: &'a GroupTable,
    zero: Elem,
    add: Vec<Vec<usize>>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    /// Cells currently holding each value, used to locate the outer lookups
    /// of associativity triples without rescanning the table.
    val_occ: Vec<Vec<(usize, usize)>>,
    /// `winv[m] = w` once `w + m = 0` has been placed (the additive inverse
    /// of `m`, needed by the distributivity look-ahead).
    winv: Vec<Option<usize>>,
    cells: Vec<(usize, usize)>,
    results: Vec<Vec<Vec<usize>>>,
}

impl<'a> Search<'a> {
    fn new(mul: &'a GroupTable, zero: Elem) -> Self {
        let n = mul.order();
        let mut add = vec![vec![UNSET; n]; n];
        let mut row_used = vec![0u32; n];
        let mut col_used = vec![0u32; n];
        let mut val_occ = vec![Vec::new(); n];
        let mut winv = vec![None; n];

        for x in 0..n {
            add[zero][x] = x;
            row_used[zero] |= 1 << x;
            col_used[x] |= 1 << x;
            val_occ[x].push((zero, x));
        }
        for x in 0..n {
            if x != zero {
                add[x][zero] = x;
                row_used[x] |= 1 << x;
                col_used[zero] |= 1 << x;
                val_occ[x].push((x, zero));
            }
        }
        winv[zero] = Some(zero);

        let cells = (0..n)
            .filter(|&r| r != zero)
            .flat_map(|r| (0..n).filter(|&c| c != zero).map(move |c| (r, c)))
            .collect();

        Search {
            n,
            mul,
            zero,
            add,
            row_used,
            col_used,
            val_occ,
            winv,
            cells,
            results: Vec::new(),
        }
    }

    /// Associativity triples that become fully determined by `add[r][c] = v`,
    /// tested through the four roles the new cell can play: the `(a,b)`
    /// lookup, the `(b,c)` lookup, the outer `(a+b, c)` lookup (row index is
    /// a previously placed value), and the outer `(a, b+c)` lookup.
    fn assoc_ok(&self, r: usize, c: usize, v: usize) -> bool {
        let add = &self.add;
        let n = self.n;

        // (a, b) = (r, c): triples (r, c, k)
        for k in 0..n {
            let q = add[c][k];
            if q == UNSET {
                continue;
            }
            let vk = add[v][k];
            if vk == UNSET {
                continue;
            }
            let rq = add[r][q];
            if rq != UNSET && vk != rq {
                return false;
            }
        }
        // (b, c) = (r, c): triples (k, r, c)
        for k in 0..n {
            let p = add[k][r];
            if p == UNSET {
                continue;
            }
            let pc = add[p][c];
            if pc == UNSET {
                continue;
            }
            let kv = add[k][v];
            if kv != UNSET && pc != kv {
                return false;
            }
        }
        // (a+b, c) = (r, c): triples (a, b, c) with a+b = r
        for &(a, b) in &self.val_occ[r] {
            let q = add[b][c];
            if q == UNSET {
                continue;
            }
            let aq = add[a][q];
            if aq != UNSET && aq != v {
                return false;
            }
        }
        // (a, b+c) = (r, c): triples (r, b, c2) with b+c2 = c
        for &(b, c2) in &self.val_occ[c] {
            let p = add[r][b];
            if p == UNSET {
                continue;
            }
            let pc2 = add[p][c2];
            if pc2 != UNSET && pc2 != v {
                return false;
            }
        }
        true
    }

    /// Forward distributivity look-ahead for `add[r][c] = v`: for every `a`,
    /// once the right-hand chain `a∘r − a∘0 + a∘c` is fully placed it must
    /// equal `a∘(r + c) = a∘v`. (Chains completed by later placements are
    /// caught by the full revalidation at the leaf.)
    fn cond2_ok(&self, r: usize, c: usize, v: usize) -> bool {
        let add = &self.add;
        let mul = self.mul;
        for a in 0..self.n {
            let m = mul.op(a, self.zero);
            let Some(w) = self.winv[m] else { continue };
            let u = mul.op(a, r);
            let y1 = add[u][w];
            if y1 == UNSET {
                continue;
            }
            let y2 = add[y1][mul.op(a, c)];
            if y2 != UNSET && y2 != mul.op(a, v) {
                return false;
            }
        }
        true
    }

    fn place(&mut self, r: usize, c: usize, v: usize) {
        self.add[r][c] = v;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
        self.val_occ[v].push((r, c));
        if v == self.zero {
            self.winv[c] = Some(r);
        }
    }

    fn unplace(&mut self, r: usize, c: usize, v: usize) {
        self.add[r][c] = UNSET;
        self.row_used[r] &= !(1 << v);
        self.col_used[c] &= !(1 << v);
        self.val_occ[v].pop();
        if v == self.zero {
            self.winv[c] = None;
        }
    }

    fn full_cond2_holds(&self) -> bool {
        let n = self.n;
        let add = &self.add;
        let mul = self.mul;
        for a in 0..n {
            let m = mul.op(a, self.zero);
            let w = self.winv[m].expect("complete table has all inverses");
            for b in 0..n {
                let head = add[mul.op(a, b)][w];
                for c in 0..n {
                    if mul.op(a, add[b][c]) != add[head][mul.op(a, c)] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize) {
        if depth == self.cells.len() {
            if self.full_cond2_holds() {
                self.results.push(self.add.clone());
            }
            return;
        }
        let (r, c) = self.cells[depth];
        for v in 0..self.n {
            let free = self.row_used[r] & (1 << v) == 0 && self.col_used[c] & (1 << v) == 0;
            if !free {
                continue;
            }
            self.place(r, c, v);
            if self.assoc_ok(r, c, v) && self.cond2_ok(r, c, v) {
                self.dfs(depth + 1);
            }
            self.unplace(r, c, v);
        }
    }
}

fn materialize(mul: &GroupTable, tables: Vec<Vec<Vec<usize>>>) -> Vec<NearBrace> {
    tables
        .into_iter()
        .map(|rows| {
            let add = GroupTable::from_table(mul.labels().to_vec(), rows)
                .expect("search emits only validated group tables");
            NearBrace::new(add, mul.clone())
                .expect("search emits only distributive additions")
        })
        .collect()
}

/// Every near brace over `mul` whose additive neutral element is `zero`,
/// sorted lexicographically by flattened addition table. `limit` truncates
/// the sorted output; the search itself always runs to completion so the
/// prefix is canonical.
pub fn enumerate_with_zero_bounded(
    mul: &GroupTable,
    zero: Elem,
    limit: Option<usize>,
    max_order: usize,
) -> Result<Vec<NearBrace>, Error> {
    let n = mul.order();
    if n > max_order || n > 32 {
        return Err(Error::ExhaustiveBound {
            order: n,
            bound: max_order.min(32),
        });
    }
    if zero >= n {
        return Err(Error::ElementRange {
            index: zero,
            order: n,
        });
    }
    let mut search = Search::new(mul, zero);
    search.dfs(0);
    let mut tables = search.results;
    tables.sort_unstable();
    if let Some(k) = limit {
        tables.truncate(k);
    }
    Ok(materialize(mul, tables))
}

/// [`enumerate_with_zero_bounded`] at the default order bound.
pub fn enumerate_with_zero(
    mul: &GroupTable,
    zero: Elem,
    limit: Option<usize>,
) -> Result<Vec<NearBrace>, Error> {
    enumerate_with_zero_bounded(mul, zero, limit, MAX_ENUM_ORDER)
}

/// Every near brace over `mul` (all choices of additive neutral), sorted
/// lexicographically by flattened addition table and truncated to `limit`
/// when given. Orders above `max_order` are refused rather than attempted.
pub fn enumerate_near_braces_bounded(
    mul: &GroupTable,
    limit: Option<usize>,
    max_order: usize,
) -> Result<Vec<NearBrace>, Error> {
    let n = mul.order();
    if n > max_order || n > 32 {
        return Err(Error::ExhaustiveBound {
            order: n,
            bound: max_order.min(32),
        });
    }
    let mut tables = Vec::new();
    for zero in 0..n {
        let mut search = Search::new(mul, zero);
        search.dfs(0);
        tables.append(&mut search.results);
    }
    tables.sort_unstable();
    if let Some(k) = limit {
        tables.truncate(k);
    }
    Ok(materialize(mul, tables))
}

/// [`enumerate_near_braces_bounded`] at the default order bound.
pub fn enumerate_near_braces(
    mul: &GroupTable,
    limit: Option<usize>,
) -> Result<Vec<NearBrace>, Error> {
    enumerate_near_braces_bounded(mul, limit, MAX_ENUM_ORDER)
}

//! Brute-force reference computations.
//!
//! Everything here works on raw row-major tables and order matrices and
//! shares no code with the search, canonical-form or ideal machinery, so it
//! can serve as an independent check of those paths.

/// Odometer over all `n^(n*n)` tables.
fn all_tables(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; cells];
        for cell in t.iter_mut() {
            *cell = code % n;
            code /= n;
        }
        t
    })
}

pub fn is_associative(n: usize, mult: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mult[mult[a * n + b] * n + c] != mult[a * n + mult[b * n + c]] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_partial_order(n: usize, leq: &[bool]) -> bool {
    for a in 0..n {
        if !leq[a * n + a] {
            return false;
        }
        for b in 0..n {
            if a != b && leq[a * n + b] && leq[b * n + a] {
                return false;
            }
            for c in 0..n {
                if leq[a * n + b] && leq[b * n + c] && !leq[a * n + c] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_compatible(n: usize, mult: &[usize], leq: &[bool]) -> bool {
    for a in 0..n {
        for b in 0..n {
            if !leq[a * n + b] {
                continue;
            }
            for x in 0..n {
                if !leq[mult[x * n + a] * n + mult[x * n + b]] || !leq[mult[a * n + x] * n + mult[b * n + x]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Every associative table of order `n`, found by testing all of them.
pub fn semigroup_tables(n: usize) -> Vec<Vec<usize>> {
    all_tables(n).filter(|t| is_associative(n, t)).collect()
}

/// Every partial order on `n` points, found by testing all `2^(n²-n)`
/// off-diagonal patterns.
pub fn partial_orders(n: usize) -> Vec<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    (0u64..1 << off.len())
        .filter_map(|mask| {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                leq[i * n + i] = true;
            }
            for (k, &(i, j)) in off.iter().enumerate() {
                leq[i * n + j] = mask >> k & 1 == 1;
            }
            is_partial_order(n, &leq).then_some(leq)
        })
        .collect()
}

/// A row-major table with its order matrix.
pub type Pair = (Vec<usize>, Vec<bool>);

/// Every (table, order) pair passing all three axiom families, plus the
/// number of candidate pairs examined.
pub fn ordered_semigroups(n: usize) -> (Vec<Pair>, usize) {
    let tables = semigroup_tables(n);
    let orders = partial_orders(n);
    let mut out = Vec::new();
    for t in &tables {
        for o in &orders {
            if is_compatible(n, t, o) {
                out.push((t.clone(), o.clone()));
            }
        }
    }
    (out, tables.len() * orders.len())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Tries every bijection `f` and checks `f(a·b) = f(a)·f(b)` and
/// `a ≤ b ⇔ f(a) ≤ f(b)`.
pub fn isomorphic(n: usize, mult_a: &[usize], leq_a: &[bool], mult_b: &[usize], leq_b: &[bool]) -> bool {
    permutations(n).iter().any(|f| {
        (0..n).all(|a| {
            (0..n)
                .all(|b| f[mult_a[a * n + b]] == mult_b[f[a] * n + f[b]] && leq_a[a * n + b] == leq_b[f[a] * n + f[b]])
        })
    })
}

/// Number of isomorphism classes, by pairwise bijection search.
pub fn count_classes(n: usize, structures: &[Pair]) -> usize {
    let mut reps: Vec<&Pair> = Vec::new();
    for s in structures {
        if !reps.iter().any(|r| isomorphic(n, &r.0, &r.1, &s.0, &s.1)) {
            reps.push(s);
        }
    }
    reps.len()
}

/// All triples `(i, j, k)` with `(i·j)·k ≠ i·(j·k)`, in lexicographic order.
pub fn associativity_failures(n: usize, mult: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if mult[mult[i * n + j] * n + k] != mult[i * n + mult[j * n + k]] {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

pub fn transpose(n: usize, mult: &[usize]) -> Vec<usize> {
    (0..n * n).map(|c| mult[(c % n) * n + c / n]).collect()
}

/// Literal principal left ideal `{a} ∪ Sa`, without downward closure.
pub fn literal_left_ideal(n: usize, mult: &[usize], a: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).map(|x| mult[x * n + a]).chain([a]).collect();
    v.sort();
    v.dedup();
    v
}

/// Literal principal right ideal `{a} ∪ aS`.
pub fn literal_right_ideal(n: usize, mult: &[usize], a: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).map(|x| mult[a * n + x]).chain([a]).collect();
    v.sort();
    v.dedup();
    v
}

/// Green's relations through the element-wise characterisation:
/// `a L b` iff `a ∈ ({b} ∪ Sb]` and `b ∈ ({a} ∪ Sa]`, and likewise for R
/// and J (with `S¹bS¹`). Returned as boolean matrices `[L, R, J, H]`.
pub fn greens_matrices(n: usize, mult: &[usize], leq: &[bool]) -> [Vec<bool>; 4] {
    let m = |a: usize, b: usize| mult[a * n + b];
    let le = |a: usize, b: usize| leq[a * n + b];
    let in_left = |a: usize, b: usize| le(a, b) || (0..n).any(|x| le(a, m(x, b)));
    let in_right = |a: usize, b: usize| le(a, b) || (0..n).any(|x| le(a, m(b, x)));
    let in_two =
        |a: usize, b: usize| in_left(a, b) || in_right(a, b) || (0..n).any(|x| (0..n).any(|y| le(a, m(m(x, b), y))));
    let mut l = vec![false; n * n];
    let mut r = vec![false; n * n];
    let mut j = vec![false; n * n];
    let mut h = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            l[a * n + b] = in_left(a, b) && in_left(b, a);
            r[a * n + b] = in_right(a, b) && in_right(b, a);
            j[a * n + b] = in_two(a, b) && in_two(b, a);
            h[a * n + b] = l[a * n + b] && r[a * n + b];
        }
    }
    [l, r, j, h]
}

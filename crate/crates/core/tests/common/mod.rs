//! Independent reference computations used to cross-check the engines.
//! Nothing here calls into the algorithms it is checking.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Semistandard tableaux of shape `shape` with entries in `1..=n`, as
/// content vectors (number of `i`s at index `i-1`).
pub fn ssyt_contents(shape: &[u32], n: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &mut grid, n as u32, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], at: usize, grid: &mut Vec<Vec<u32>>, n: u32, out: &mut Vec<Vec<u32>>) {
    if at == cells.len() {
        let mut content = vec![0u32; n as usize];
        for row in grid.iter() {
            for &v in row {
                content[v as usize - 1] += 1;
            }
        }
        out.push(content);
        return;
    }
    let (r, c) = cells[at];
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in left.max(above)..=n {
        grid[r][c] = v;
        fill(cells, at + 1, grid, n, out);
    }
    grid[r][c] = 0;
}

pub fn ssyt_count(shape: &[u32], n: usize) -> u64 {
    if shape.iter().filter(|&&p| p > 0).count() > n {
        return 0;
    }
    ssyt_contents(shape, n).len() as u64
}

/// Formal character of the GL(n) module of highest weight `shape`.
pub fn character(shape: &[u32], n: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut ch = BTreeMap::new();
    if shape.iter().filter(|&&p| p > 0).count() > n {
        return ch;
    }
    for content in ssyt_contents(shape, n) {
        *ch.entry(content).or_insert(0) += 1;
    }
    ch
}

/// `c^λ_{μν}` for GL(n), by multiplying characters and peeling off
/// highest weights.
pub fn lr_by_characters(mu: &[u32], nu: &[u32], n: usize) -> BTreeMap<Vec<u32>, u64> {
    let (a, b) = (character(mu, n), character(nu, n));
    let mut product: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for (wa, ma) in &a {
        for (wb, mb) in &b {
            let w: Vec<u32> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *product.entry(w).or_insert(0) += ma * mb;
        }
    }
    let mut result = BTreeMap::new();
    loop {
        product.retain(|_, m| *m != 0);
        // Lexicographically greatest weight is a highest weight of what remains.
        let Some((top, &mult)) = product.iter().next_back() else {
            break;
        };
        assert!(mult > 0, "negative multiplicity while peeling");
        assert!(top.windows(2).all(|p| p[0] >= p[1]), "top weight {top:?} not dominant");
        let top = top.clone();
        for (w, m) in character(&top, n) {
            *product.entry(w).or_insert(0) -= mult * m;
        }
        let shape: Vec<u32> = top.into_iter().filter(|&p| p > 0).collect();
        result.insert(shape, mult as u64);
    }
    result
}

pub fn partitions_of(size: u32, max_rows: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max_part: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=rest.min(max_part)).rev() {
            cur.push(p);
            go(rest - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Bourbaki Cartan matrix `A[i][j] = <α_i∨, α_j>`, written out by hand.
pub fn cartan(kind: char, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        'A' | 'B' | 'C' => {
            for i in 0..rank - 1 {
                link(&mut a, i, i + 1);
            }
            // The row of the short simple root carries the -2.
            if kind == 'B' {
                a[rank - 1][rank - 2] = -2;
            }
            if kind == 'C' {
                a[rank - 2][rank - 1] = -2;
            }
        }
        'D' => {
            for i in 0..rank - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, rank - 3, rank - 1);
        }
        'E' => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..rank - 1 {
                link(&mut a, i, i + 1);
            }
        }
        'F' => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
        }
        'G' => {
            link(&mut a, 0, 1);
            a[0][1] = -3;
        }
        _ => panic!("unknown type {kind}"),
    }
    a
}

/// Positive roots in simple-root coordinates, grown by the root-string rule.
pub fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let simple = |i: usize| {
        let mut v = vec![0i64; r];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..r).map(simple).collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                if *beta == simple(i) {
                    continue;
                }
                // p = length of the α_i-string below β.
                let mut p = 0;
                let mut below = beta.clone();
                loop {
                    below[i] -= 1;
                    if below.iter().all(|&c| c >= 0) && roots.contains(&below) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| a[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

/// Positive coroots in simple-coroot coordinates: the roots of the transposed matrix.
pub fn positive_coroots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let t: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| a[j][i]).collect()).collect();
    positive_roots(&t)
}

/// `(singular?, #{α∨ > 0 : <λ, α∨> < 0})` for λ in fundamental-weight coordinates.
pub fn chamber_data(coroots: &[Vec<i64>], lambda: &[i64]) -> (bool, usize) {
    let pairings: Vec<i64> = coroots
        .iter()
        .map(|c| c.iter().zip(lambda).map(|(x, y)| x * y).sum())
        .collect();
    (pairings.contains(&0), pairings.iter().filter(|&&p| p < 0).count())
}

pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// χ(P^n, O(a)) as the Hilbert polynomial `C(a+n, n)`, valid for every integer a.
pub fn chi_projective(n: i64, a: i64) -> i128 {
    // (a+1)(a+2)...(a+n)/n!
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 1..=n {
        num *= (a + i) as i128;
        den *= i as i128;
    }
    num / den
}

/// χ(O_S(a)) for a complete intersection S ⊂ P^n of the given degrees,
/// by inclusion–exclusion over the Koszul terms.
pub fn chi_complete_intersection(n: i64, degrees: &[i64], a: i64) -> i128 {
    let mut total = 0;
    for mask in 0u32..(1 << degrees.len()) {
        let d: i64 = (0..degrees.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| degrees[i])
            .sum();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * chi_projective(n, a - d);
    }
    total
}

//! Independent counting oracles shared by the integration tests.

#![allow(dead_code)]

/// Recorded connected-graph counts, indexed by order.
pub fn recorded_counts() -> Vec<(usize, usize)> {
    include_str!("../fixtures/connected_counts.txt")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace().map(|t| t.parse::<usize>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Connected classes on `n ≤ 6` vertices by brute force: every labeled
/// graph, minimized over all relabelings.
pub fn brute_force_connected(n: usize) -> usize {
    let ps = pairs(n);
    let index = |i: usize, j: usize| ps.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let connected = |mask: u32| {
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for (k, &(i, j)) in ps.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    if frontier >> i & 1 == 1 {
                        next |= 1 << j;
                    }
                    if frontier >> j & 1 == 1 {
                        next |= 1 << i;
                    }
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == (1u32 << n) - 1
    };
    let mut classes = std::collections::HashSet::new();
    for mask in 0u32..1 << ps.len() {
        if !connected(mask) {
            continue;
        }
        let canon = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .fold(0u32, |acc, (_, &t)| acc | 1 << t)
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

/// Unlabeled graphs on `n` vertices by Burnside's lemma: the average over
/// `S_n` of `2^(orbits on vertex pairs)`.
pub fn burnside_all(n: usize) -> u128 {
    let ps = pairs(n);
    let perms = permutations(n);
    let total: u128 = perms
        .iter()
        .map(|p| {
            let mut seen = vec![false; ps.len()];
            let mut orbits = 0;
            for start in 0..ps.len() {
                if seen[start] {
                    continue;
                }
                orbits += 1;
                let mut k = start;
                while !seen[k] {
                    seen[k] = true;
                    let (i, j) = ps[k];
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    k = ps.iter().position(|&q| q == (a, b)).unwrap();
                }
            }
            1u128 << orbits
        })
        .sum();
    total / perms.len() as u128
}

/// Connected counts `c_1..c_max` from all-graph counts by inverting the
/// Euler transform `1 + Σ a_n x^n = Π (1 - x^k)^(-c_k)`.
pub fn connected_from_all(all: &[u128]) -> Vec<i128> {
    // all[0] = 1 by convention
    let max = all.len() - 1;
    let a: Vec<i128> = all.iter().map(|&x| x as i128).collect();
    let mut s = vec![0i128; max + 1];
    let mut c = vec![0i128; max + 1];
    for n in 1..=max {
        s[n] = n as i128 * a[n] - (1..n).map(|k| s[k] * a[n - k]).sum::<i128>();
        let lower: i128 = (1..n)
            .filter(|d| n % d == 0)
            .map(|d| d as i128 * c[d])
            .sum();
        c[n] = (s[n] - lower) / n as i128;
    }
    c
}

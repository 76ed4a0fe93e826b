//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use univsum::TernaryTuple;

pub fn brute_tuple_counts(t: &TernaryTuple, n_max: usize) -> Vec<i64> {
    let [a1, a2, b1, b2, c1, c2] = t.to_array();
    let vals = |a: i64, b: i64| -> Vec<i64> {
        let mut out = Vec::new();
        // x(ax+b)/2 grows past n_max once |x| > 2 sqrt(n_max) + |b|
        let r = 2 * (n_max as f64).sqrt() as i64 + b.abs() + 2;
        for x in -r..=r {
            let v = x * (a * x + b) / 2;
            if v >= 0 && v <= n_max as i64 {
                out.push(v);
            }
        }
        out
    };
    let (xs, ys, zs) = (vals(a1, a2), vals(b1, b2), vals(c1, c2));
    let mut counts = vec![0i64; n_max + 1];
    for &x in &xs {
        for &y in &ys {
            if x + y > n_max as i64 {
                continue;
            }
            for &z in &zs {
                let s = x + y + z;
                if s <= n_max as i64 {
                    counts[s as usize] += 1;
                }
            }
        }
    }
    counts
}

pub fn brute_diag_counts(a: i64, b: i64, c: i64, n_max: usize) -> Vec<i64> {
    let n = n_max as i64;
    let r = (n as f64).sqrt() as i64 + 1;
    let mut counts = vec![0i64; n_max + 1];
    for x in -r..=r {
        for y in -r..=r {
            let s = a * x * x + b * y * y;
            if s > n {
                continue;
            }
            for z in -r..=r {
                let t = s + c * z * z;
                if t <= n {
                    counts[t as usize] += 1;
                }
            }
        }
    }
    counts
}

pub fn random_tuple(rng: &mut ChaCha8Rng) -> TernaryTuple {
    let comp = |rng: &mut ChaCha8Rng| {
        let a = rng.gen_range(1..=12i64);
        let b = rng.gen_range(-a..=a);
        let b = if (a - b) % 2 == 0 { b } else { b + 1 };
        (a, b)
    };
    let (p, q, r) = (comp(rng), comp(rng), comp(rng));
    TernaryTuple::from_array([p.0, p.1, q.0, q.1, r.0, r.1]).unwrap()
}

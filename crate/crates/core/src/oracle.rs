//! Slow reference computations that share no code path with the recursive
//! engines, used to cross-check them.
//!
//! * Ordinary characters from Young permutation characters and Kostka
//!   numbers: `φ^λ = Σ_μ K_{μλ} [μ]` is unitriangular in dominance order.
//! * Spin characters on odd-part classes from Schur Q-functions written in
//!   odd power sums: `Q_λ = Σ_α 2^{⌈(l(λ)+l(α))/2⌉} ⟨λ⟩(σ_α) p_α / z_α`.
//!   `Q_λ` is the Pfaffian of the two-row functions `Q_(a,b)`, which in
//!   turn are quadratic in the one-row functions `q_m`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{gen_partitions, Filter, Partition};

/// Number of ordered distributions of the cycles of `α` into blocks of
/// sizes `λ_1, λ_2, …`: the permutation character `1↑_{S_λ}^{S_n}` at `α`.
pub fn young_permutation_character(lambda: &Partition, alpha: &Partition) -> BigInt {
    fn go(cycles: &[usize], room: &mut Vec<usize>) -> BigInt {
        let Some((&c, rest)) = cycles.split_first() else {
            return if room.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
        };
        let mut total = BigInt::zero();
        for j in 0..room.len() {
            if room[j] >= c {
                room[j] -= c;
                total += go(rest, room);
                room[j] += c;
            }
        }
        total
    }
    if lambda.n() != alpha.n() {
        return BigInt::zero();
    }
    let cycles: Vec<usize> = alpha.parts().iter().map(|&p| p as usize).collect();
    let mut room: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    go(&cycles, &mut room)
}

/// Kostka number `K_{μλ}`: semistandard tableaux of shape `μ` and content `λ`,
/// counted by adding horizontal strips of sizes `λ_1, λ_2, …` to the empty shape.
pub fn kostka_number(shape: &Partition, content: &Partition) -> BigInt {
    fn strips(inner: &[usize], outer: &[usize], row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if row == outer.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let base = inner.get(row).copied().unwrap_or(0);
        // A horizontal strip never extends a row past the previous row of the inner shape.
        let cap = if row == 0 { outer[0] } else { outer[row].min(inner.get(row - 1).copied().unwrap_or(0)) };
        if base > cap {
            return;
        }
        for add in 0..=(cap - base).min(left) {
            cur.push(base + add);
            strips(inner, outer, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    fn go(inner: Vec<usize>, outer: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), BigInt>) -> BigInt {
        let Some((&c, rest)) = content.split_first() else {
            return if inner.as_slice() == outer { BigInt::one() } else { BigInt::zero() };
        };
        let key = (inner.clone(), rest.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut next = Vec::new();
        strips(&inner, outer, 0, c, &mut Vec::new(), &mut next);
        let mut total = BigInt::zero();
        for mut shape in next {
            while shape.last() == Some(&0) {
                shape.pop();
            }
            total += go(shape, outer, rest, memo);
        }
        memo.insert(key, total.clone());
        total
    }
    if shape.n() != content.n() {
        return BigInt::zero();
    }
    let outer: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let content: Vec<usize> = content.parts().iter().map(|&p| p as usize).collect();
    go(Vec::new(), &outer, &content, &mut HashMap::new())
}

/// The full character table of `S_n` by Kostka inversion, indexed
/// `table[λ][α]`. Intended for `n ≤ 7`.
pub fn kostka_character_table(n: usize) -> Result<BTreeMap<Partition, BTreeMap<Partition, BigInt>>> {
    if n > 10 {
        return Err(Error::LimitExceeded(format!("Kostka oracle limited to n <= 10, got {n}")));
    }
    let shapes: Vec<Partition> = gen_partitions(n, Filter::All).collect();
    let mut table: BTreeMap<Partition, BTreeMap<Partition, BigInt>> = BTreeMap::new();
    // Reverse-lex order lists every μ ▷ λ before λ.
    for lambda in &shapes {
        let mut row: BTreeMap<Partition, BigInt> =
            shapes.iter().map(|a| (a.clone(), young_permutation_character(lambda, a))).collect();
        for (mu, mu_row) in &table {
            let k = kostka_number(mu, lambda);
            if k.is_zero() {
                continue;
            }
            for (a, v) in row.iter_mut() {
                *v -= &k * &mu_row[a];
            }
        }
        table.insert(lambda.clone(), row);
    }
    Ok(table)
}

/// Polynomial in the odd power sums, keyed by the odd-part partition of the monomial.
type PowerSumPoly = BTreeMap<Vec<u16>, Ratio<BigInt>>;

fn poly_mul(a: &PowerSumPoly, b: &PowerSumPoly) -> PowerSumPoly {
    let mut out = PowerSumPoly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k: Vec<u16> = ka.iter().chain(kb).copied().collect();
            k.sort_unstable_by(|x, y| y.cmp(x));
            let e = out.entry(k).or_insert_with(Ratio::zero);
            *e += va * vb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn poly_add_scaled(acc: &mut PowerSumPoly, p: &PowerSumPoly, c: &Ratio<BigInt>) {
    for (k, v) in p {
        let e = acc.entry(k.clone()).or_insert_with(Ratio::zero);
        *e += v * c;
    }
    acc.retain(|_, v| !v.is_zero());
}

/// Schur Q-functions in odd power sums, with the one-row functions cached.
#[derive(Debug, Default)]
pub struct QFunctions {
    rows: HashMap<usize, PowerSumPoly>,
}

impl QFunctions {
    pub fn new() -> Self {
        Self::default()
    }

    /// `q_m = Σ_{α ∈ O(m)} 2^{l(α)} z_α⁻¹ p_α`.
    fn q(&mut self, m: usize) -> PowerSumPoly {
        if let Some(p) = self.rows.get(&m) {
            return p.clone();
        }
        let mut p = PowerSumPoly::new();
        for a in gen_partitions(m, Filter::Odd) {
            let c = Ratio::new(BigInt::one() << a.len(), BigInt::from(a.centralizer_order()));
            p.insert(a.parts().to_vec(), c);
        }
        self.rows.insert(m, p.clone());
        p
    }

    /// `Q_(a,b) = q_a q_b + 2 Σ_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}`.
    fn two_row(&mut self, a: usize, b: usize) -> PowerSumPoly {
        let mut out = poly_mul(&self.q(a), &self.q(b));
        let two = Ratio::from_integer(BigInt::from(2));
        for i in 1..=b {
            let term = poly_mul(&self.q(a + i), &self.q(b - i));
            let c = if i % 2 == 0 { two.clone() } else { -two.clone() };
            poly_add_scaled(&mut out, &term, &c);
        }
        out
    }

    fn pfaffian(&mut self, parts: &[usize]) -> PowerSumPoly {
        match parts.len() {
            0 => {
                let mut one = PowerSumPoly::new();
                one.insert(Vec::new(), Ratio::one());
                one
            }
            2 => self.two_row(parts[0], parts[1]),
            _ => {
                let mut out = PowerSumPoly::new();
                for j in 1..parts.len() {
                    let minor: Vec<usize> =
                        parts.iter().enumerate().filter(|&(i, _)| i != 0 && i != j).map(|(_, &p)| p).collect();
                    let term = poly_mul(&self.two_row(parts[0], parts[j]), &self.pfaffian(&minor));
                    let c = Ratio::from_integer(BigInt::from(if j % 2 == 1 { 1 } else { -1 }));
                    poly_add_scaled(&mut out, &term, &c);
                }
                out
            }
        }
    }

    /// `Q_λ` for strict `λ`.
    fn q_function(&mut self, lambda: &Partition) -> PowerSumPoly {
        let mut parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        self.pfaffian(&parts)
    }

    /// `⟨λ⟩(σ_α)` for every `α ∈ O(n)`, `λ ∈ D(n)`.
    pub fn spin_column(&mut self, lambda: &Partition) -> Result<BTreeMap<Partition, BigInt>> {
        if !lambda.is_distinct() {
            return Err(Error::NotInSet { partition: lambda.to_string(), set: "D(n)" });
        }
        let q = self.q_function(lambda);
        let mut out = BTreeMap::new();
        for a in gen_partitions(lambda.n(), Filter::Odd) {
            let coeff = q.get(a.parts()).cloned().unwrap_or_else(Ratio::zero);
            let x = coeff * Ratio::from_integer(BigInt::from(a.centralizer_order()));
            let e = (lambda.len() + a.len()).div_ceil(2);
            let v = x / Ratio::from_integer(BigInt::one() << e);
            if !v.is_integer() {
                return Err(Error::Precondition(format!("non-integral Q-function coefficient for {lambda} at {a}")));
            }
            out.insert(a, v.to_integer());
        }
        Ok(out)
    }
}

//! Dense polynomials over GF(p), only as much as the irreducibility check needs.
//! Coefficients are stored low degree first with no trailing zeros.

type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    super::primes::pow_mod(a, p - 2, p)
}

fn rem(mut a: Poly, m: &[u64], p: u64) -> Poly {
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = top - dm + i;
                a[idx] = (a[idx] + p - c * mi % p) % p;
            }
        }
        a.pop();
        a = trim(a);
    }
    trim(a)
}

fn mul_rem(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(out, m, p)
}

fn pow_rem(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = rem(base.to_vec(), m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_rem(&acc, &b, m, p);
        }
        b = mul_rem(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(mut a: Poly, mut b: Poly, p: u64) -> Poly {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test for a monic polynomial `x^k + low[k-1] x^{k-1} + ... + low[0]`.
/// Degrees up to three are decided by the absence of roots in GF(p).
pub fn is_irreducible(p: u64, low: &[u32]) -> bool {
    let k = low.len();
    let mut f: Poly = low.iter().map(|&c| c as u64 % p).collect();
    f.push(1);
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    if k <= 3 {
        return (0..p).all(|x| {
            let v = f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
            v != 0
        });
    }
    let x: Poly = vec![0, 1];
    // x^(p^i) mod f for i = 0..=k
    let mut frob = vec![rem(x.clone(), &f, p)];
    for i in 1..=k {
        let next = pow_rem(&frob[i - 1], p, &f, p);
        frob.push(next);
    }
    if frob[k] != rem(x.clone(), &f, p) {
        return false;
    }
    for l in super::primes::prime_factors(k as u64) {
        let j = k / l as usize;
        let mut diff = frob[j].clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = gcd(f.clone(), trim(diff), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

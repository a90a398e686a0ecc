//! Arithmetic in GF(q) for small prime powers.
//!
//! Elements are integers in `[0, q)` whose base-`p` digits are the polynomial
//! coefficients, lowest degree first. Multiplication and inversion go through
//! precomputed log/antilog tables, so the field is cheap to share once built.

use thiserror::Error;

/// Largest field order accepted by [`FiniteField::new`].
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u32),
    #[error("field order {0} exceeds the cap of {MAX_ORDER}")]
    OrderTooLarge(u32),
    #[error("element 0 has no multiplicative inverse")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients low degree first (length k + 1).
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn smallest_prime_factor(n: u32) -> u32 {
    (2..=n).find(|d| n % d == 0).unwrap_or(n)
}

/// Splits `q` into `(p, k)` with `q = p^k`, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    // Any factorization has a monic factor of degree <= k/2.
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for low in 0..count {
            let mut cand = digits(low, p, deg);
            cand.push(1);
            if poly_rem(m, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotAPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(FieldError::OrderTooLarge(q));
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut m = digits(low, p, k as usize);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let mut field = FiniteField { p, k, q, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let generator = (1..self.q)
            .find(|&g| {
                let mut x = 1;
                for i in 1..q - 1 {
                    x = self.mul_slow(x, g);
                    if x == 1 {
                        return i == q - 1;
                    }
                }
                true
            })
            .unwrap_or(1);
        let mut exp = vec![0; 2 * (q - 1)];
        let mut log = vec![0; q];
        let mut x = 1;
        for i in 0..q - 1 {
            exp[i] = x;
            exp[i + q - 1] = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, k) = (self.p, self.k as usize);
        let da = digits(a, p, k);
        let db = digits(b, p, k);
        let mut prod = vec![0; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        if prod.len() < self.modulus.len() {
            return undigits(&prod, p);
        }
        undigits(&poly_rem(&prod, &self.modulus, p), p)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// The modulus as coefficients, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let mut out = 0;
        let mut place = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        let mut a = a;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let q1 = self.q - 1;
        Ok(self.exp[((q1 - self.log[a as usize]) % q1) as usize])
    }
}

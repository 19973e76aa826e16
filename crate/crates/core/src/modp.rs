//! Arithmetic and linear algebra over a prime field `F_p`, `p < 2^31`.

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p) && p < 1 << 31);
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let p = self.p;
        if p == 2 {
            return 1;
        }
        let factors = prime_factors(p - 1);
        (2..p)
            .find(|&g| factors.iter().all(|&r| self.pow(g, (p - 1) / r) != 1))
            .expect("every prime field has a primitive root")
    }

    /// An element of multiplicative order exactly `n`; `n` must divide
    /// `p − 1`.
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert_eq!((self.p - 1) % n, 0, "{n} does not divide p - 1");
        self.pow(self.primitive_root(), (self.p - 1) / n)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..ncols {
                        let sub = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of the right null space `{x : A x = 0}` of a square or
    /// rectangular matrix given by rows.
    pub fn null_space(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let ncols = a.first().map_or(0, Vec::len);
        let mut m = a.to_vec();
        let pivots = self.rref(&mut m);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; ncols];
                v[f] = 1;
                for (row, &pc) in m.iter().zip(&pivots) {
                    v[pc] = self.neg(row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI − A)` via Hessenberg reduction,
    /// coefficients lowest degree first (monic, length `n + 1`).
    pub fn char_poly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        // Reduce to upper Hessenberg form by similarity transforms.
        for k in 0..n.saturating_sub(2) {
            let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
                continue;
            };
            if piv != k + 1 {
                h.swap(piv, k + 1);
                for row in h.iter_mut() {
                    row.swap(piv, k + 1);
                }
            }
            let inv = self.inv(h[k + 1][k]);
            for i in k + 2..n {
                let f = self.mul(h[i][k], inv);
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    let sub = self.mul(f, h[k + 1][j]);
                    h[i][j] = self.sub(h[i][j], sub);
                }
                for row in h.iter_mut() {
                    let add = self.mul(f, row[i]);
                    row[k + 1] = self.add(row[k + 1], add);
                }
            }
        }
        // Recurrence on leading principal minors.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            // p_{m+1} = (x − h[m][m]) p_m − Σ_{i<m} h[i][m] Π_{j=i+1}^{m} h[j][j−1] p_i
            let mut next = vec![0u64; m + 2];
            for (d, &c) in polys[m].iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[m][m], c));
            }
            let mut prod = 1u64;
            for i in (0..m).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                let f = self.mul(h[i][m], prod);
                if f == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(f, c));
                }
            }
            polys.push(next);
        }
        polys.pop().expect("at least the constant polynomial")
    }

    pub fn eval_poly(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p` of `poly`, by exhaustive evaluation.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval_poly(poly, x) == 0).collect()
    }

    /// `A · v`.
    pub fn mat_vec(&self, a: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0, |acc, (&x, &y)| (acc + x * y) % self.p)
            })
            .collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `⌈√n⌉`.
pub fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// `⌊√n⌋`.
pub fn floor_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

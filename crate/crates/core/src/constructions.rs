//! Programmatic constructors for the group families used throughout the
//! crate: cyclic and abelian groups, symmetric and alternating groups,
//! direct products, the quaternion group and generalized dihedral groups.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{close_permutations, FiniteGroup, Origin, DEFAULT_ORDER_CAP};

/// An abelian group as a list of cyclic factor orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianSpec {
    cyclic_factors: Vec<usize>,
}

impl AbelianSpec {
    /// Every factor must be at least 2. The empty list is the trivial group.
    pub fn new(cyclic_factors: Vec<usize>) -> Result<Self> {
        if cyclic_factors.iter().any(|&f| f < 2) {
            return Err(Error::Spec(format!(
                "cyclic factors must be at least 2, got {cyclic_factors:?}"
            )));
        }
        Ok(AbelianSpec { cyclic_factors })
    }

    pub fn factors(&self) -> &[usize] {
        &self.cyclic_factors
    }

    pub fn order(&self) -> usize {
        self.cyclic_factors.iter().product()
    }

    /// `3x9`, `3^2`, or `1` for the trivial group. Runs of equal factors
    /// collapse to a power.
    pub fn notation(&self) -> String {
        if self.cyclic_factors.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.cyclic_factors.len() {
            let f = self.cyclic_factors[i];
            let mut j = i;
            while j < self.cyclic_factors.len() && self.cyclic_factors[j] == f {
                j += 1;
            }
            if j - i == 1 {
                parts.push(f.to_string());
            } else {
                parts.push(format!("{f}^{}", j - i));
            }
            i = j;
        }
        parts.join("x")
    }
}

fn family_spec(g: &FiniteGroup) -> String {
    match g.origin() {
        Origin::Family { spec } => spec.clone(),
        _ => g.name().to_string(),
    }
}

/// Constructors bounded by an order cap.
#[derive(Clone, Copy, Debug)]
pub struct Builder {
    pub cap: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Builder {
            cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl Builder {
    pub fn new(cap: usize) -> Self {
        Builder { cap }
    }

    fn check(&self, order: usize) -> Result<()> {
        if order > self.cap {
            return Err(Error::OrderCapExceeded {
                order,
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn cyclic(&self, n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::Spec("cyclic group order must be positive".into()));
        }
        let spec = if n == 1 {
            AbelianSpec::new(vec![])?
        } else {
            AbelianSpec::new(vec![n])?
        };
        let g = self.abelian(&spec)?;
        Ok(g.with_name(format!("C{n}")).with_origin(Origin::Family {
            spec: format!("cyclic({n})"),
        }))
    }

    /// Elements are factor tuples in lexicographic order; the generators
    /// are the unit tuples.
    pub fn abelian(&self, spec: &AbelianSpec) -> Result<FiniteGroup> {
        let factors = spec.factors();
        let n = spec.order();
        self.check(n)?;
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; factors.len()];
            for i in (0..factors.len()).rev() {
                d[i] = x % factors[i];
                x /= factors[i];
            }
            d
        };
        let index = |d: &[usize]| -> usize {
            d.iter().zip(factors).fold(0, |acc, (&x, &f)| acc * f + x)
        };
        let tuples: Vec<Vec<usize>> = (0..n).map(digits).collect();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let sum: Vec<usize> = tuples[x]
                    .iter()
                    .zip(&tuples[y])
                    .zip(factors)
                    .map(|((&a, &b), &f)| (a + b) % f)
                    .collect();
                table[x * n + y] = index(&sum) as u32;
            }
        }
        let generators = (0..factors.len())
            .map(|i| {
                let mut d = vec![0; factors.len()];
                d[i] = 1;
                index(&d)
            })
            .collect();
        let labels = tuples
            .iter()
            .map(|t| match t.len() {
                0 => "0".to_string(),
                1 => t[0].to_string(),
                _ => format!(
                    "({})",
                    t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                ),
            })
            .collect();
        let notation = spec.notation();
        FiniteGroup::from_table(
            format!("C{notation}"),
            table,
            generators,
            labels,
            Origin::Family {
                spec: format!("abelian({notation})"),
            },
        )
    }

    /// `C_p^r`.
    pub fn elementary_abelian(&self, p: usize, r: usize) -> Result<FiniteGroup> {
        let g = self.abelian(&AbelianSpec::new(vec![p; r])?)?;
        let name = if r == 1 { format!("C{p}") } else { format!("C{p}^{r}") };
        Ok(g.with_name(name).with_origin(Origin::Family {
            spec: format!("elem({p}^{r})"),
        }))
    }

    /// Pairs `(g, h)` indexed `g·|H| + h`.
    pub fn direct_product(&self, g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
        let (m, k) = (g.order(), h.order());
        let n = m * k;
        self.check(n)?;
        let mut table = vec![0u32; n * n];
        for a in 0..m {
            for b in 0..k {
                let x = a * k + b;
                for c in 0..m {
                    for d in 0..k {
                        table[x * n + c * k + d] = (g.mul(a, c) * k + h.mul(b, d)) as u32;
                    }
                }
            }
        }
        let generators = g
            .generators()
            .iter()
            .map(|&a| a * k)
            .chain(h.generators().iter().copied())
            .collect();
        let labels = (0..n)
            .map(|x| format!("({}, {})", g.label(x / k), h.label(x % k)))
            .collect();
        FiniteGroup::from_table(
            format!("{} x {}", g.name(), h.name()),
            table,
            generators,
            labels,
            Origin::Family {
                spec: format!("product({},{})", family_spec(g), family_spec(h)),
            },
        )
    }

    /// `S_n` for `n ≤ 6`, as permutations of `0..n`.
    pub fn symmetric(&self, n: usize) -> Result<FiniteGroup> {
        if n == 0 || n > 6 {
            return Err(Error::Precondition(format!(
                "symmetric(n) needs 1 <= n <= 6, got {n}"
            )));
        }
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
        }
        if n >= 3 {
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        let g = close_permutations(n, &gens, self.cap)?;
        Ok(g.with_name(format!("S{n}")).with_origin(Origin::Family {
            spec: format!("sym({n})"),
        }))
    }

    /// `A_n` for `n ≤ 6`, generated by the 3-cycles `(0 1 k)`.
    pub fn alternating(&self, n: usize) -> Result<FiniteGroup> {
        if n == 0 || n > 6 {
            return Err(Error::Precondition(format!(
                "alternating(n) needs 1 <= n <= 6, got {n}"
            )));
        }
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        let g = close_permutations(n, &gens, self.cap)?;
        Ok(g.with_name(format!("A{n}")).with_origin(Origin::Family {
            spec: format!("alt({n})"),
        }))
    }

    /// `Q_8` as a regular permutation group of degree 8.
    pub fn quaternion8(&self) -> Result<FiniteGroup> {
        let gens = vec![vec![4, 5, 7, 6, 1, 0, 2, 3], vec![2, 3, 1, 0, 6, 7, 5, 4]];
        let g = close_permutations(8, &gens, self.cap)?;
        Ok(g.with_name("Q8").with_origin(Origin::Family {
            spec: "quaternion8".into(),
        }))
    }

    /// Dihedral group of order `n` (so `dihedral(8)` is `D_8`), built as the
    /// inversion holomorph of `C_{n/2}`.
    pub fn dihedral(&self, n: usize) -> Result<FiniteGroup> {
        if n < 2 || n % 2 == 1 {
            return Err(Error::Precondition(format!(
                "dihedral(n) needs an even order n >= 2, got {n}"
            )));
        }
        let rotations = self.cyclic(n / 2)?;
        let g = self.inversion_holomorph(&rotations)?;
        Ok(g.with_name(format!("D{n}")).with_origin(Origin::Family {
            spec: format!("dihedral({n})"),
        }))
    }

    /// `Dih A` for abelian `A` that is not an elementary abelian 2-group.
    ///
    /// Elements are pairs `(a, ε)` indexed `ε·|A| + a`, with
    /// `(a,0)(b,ε) = (ab, ε)` and `(a,1)(b,ε) = (ab⁻¹, 1−ε)`. The involution
    /// `t = (1, 1)` has index `|A|`.
    pub fn generalized_dihedral(&self, a: &FiniteGroup) -> Result<FiniteGroup> {
        if !a.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if a.order() == 1 || a.is_elementary_abelian(2) {
            return Err(Error::ElementaryAbelianTwo);
        }
        let g = self.inversion_holomorph(a)?;
        Ok(g.with_name(format!("Dih({})", a.name())).with_origin(Origin::Family {
            spec: format!("gendihedral({})", abelian_inner_spec(a)),
        }))
    }

    fn inversion_holomorph(&self, a: &FiniteGroup) -> Result<FiniteGroup> {
        let m = a.order();
        let n = 2 * m;
        self.check(n)?;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let (xa, xe) = (x % m, x / m);
            for y in 0..n {
                let (ya, ye) = (y % m, y / m);
                let z = if xe == 0 {
                    ye * m + a.mul(xa, ya)
                } else {
                    (1 - ye) * m + a.mul(xa, a.inv(ya))
                };
                table[x * n + y] = z as u32;
            }
        }
        let generators = a.generators().iter().copied().chain([m]).collect();
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x % m), x / m))
            .collect();
        FiniteGroup::from_table(
            format!("Dih({})", a.name()),
            table,
            generators,
            labels,
            Origin::Family {
                spec: format!("dih({})", family_spec(a)),
            },
        )
    }
}

/// The part of an abelian family spec that goes inside `gendihedral(...)`:
/// `3^2` for `elem(3^2)`, `9` for `cyclic(9)`, `3x9` for `abelian(3x9)`.
fn abelian_inner_spec(a: &FiniteGroup) -> String {
    let spec = family_spec(a);
    for prefix in ["elem(", "cyclic(", "abelian("] {
        if let Some(rest) = spec.strip_prefix(prefix) {
            if let Some(inner) = rest.strip_suffix(')') {
                return inner.to_string();
            }
        }
    }
    spec
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    Builder::default().cyclic(n)
}

pub fn abelian(spec: &AbelianSpec) -> Result<FiniteGroup> {
    Builder::default().abelian(spec)
}

pub fn elementary_abelian(p: usize, r: usize) -> Result<FiniteGroup> {
    Builder::default().elementary_abelian(p, r)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    Builder::default().direct_product(g, h)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    Builder::default().symmetric(n)
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    Builder::default().alternating(n)
}

pub fn quaternion8() -> Result<FiniteGroup> {
    Builder::default().quaternion8()
}

pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    Builder::default().dihedral(n)
}

pub fn generalized_dihedral(a: &FiniteGroup) -> Result<FiniteGroup> {
    Builder::default().generalized_dihedral(a)
}

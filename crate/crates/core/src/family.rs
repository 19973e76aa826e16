//! Group specs: `family:<spec>` for programmatic constructions and
//! `file:<path>#<name>` for catalog records.
//!
//! ```text
//! spec    := cyclic(n) | abelian(n x n x ...) | elem(p^r) | sym(n) | alt(n)
//!          | dihedral(n) | quaternion8 | gendihedral(inner) | product(spec,spec)
//! inner   := spec | p^r | n | n x n x ...
//! ```
//!
//! `dihedral(n)` is the dihedral group of order `n`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::catalog::{load_group, parse_catalog};
use crate::constructions::{AbelianSpec, Builder};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Elem { p: usize, r: usize },
    Sym(usize),
    Alt(usize),
    Dihedral(usize),
    Quaternion8,
    GenDihedral(Box<FamilySpec>),
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

fn spec_err(msg: impl Into<String>) -> Error {
    Error::Spec(msg.into())
}

fn number(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| spec_err(format!("expected a number, got {:?}", s.trim())))
}

fn prime_power(s: &str) -> Result<(usize, usize)> {
    let (p, r) = s
        .split_once('^')
        .ok_or_else(|| spec_err(format!("expected p^r, got {s:?}")))?;
    Ok((number(p)?, number(r)?))
}

fn factor_list(s: &str) -> Result<Vec<usize>> {
    s.split('x').map(number).collect()
}

/// Splits `a,b` at the comma outside any parentheses.
fn split_pair(s: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Ok((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    Err(spec_err(format!("expected two comma separated specs in {s:?}")))
}

impl FamilySpec {
    /// The abelian part of `gendihedral(...)`, which also accepts the bare
    /// forms `3^2`, `9` and `3x9`.
    fn parse_inner(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        if s.contains('(') {
            return s.parse();
        }
        if s.contains('^') {
            let (p, r) = prime_power(s)?;
            return Ok(FamilySpec::Elem { p, r });
        }
        if s.contains('x') {
            return Ok(FamilySpec::Abelian(factor_list(s)?));
        }
        Ok(FamilySpec::Cyclic(number(s)?))
    }

    pub fn build(&self, builder: &Builder) -> Result<FiniteGroup> {
        match self {
            FamilySpec::Cyclic(n) => builder.cyclic(*n),
            FamilySpec::Abelian(factors) => {
                let spec = AbelianSpec::new(factors.clone())?;
                builder.abelian(&spec)
            }
            FamilySpec::Elem { p, r } => builder.elementary_abelian(*p, *r),
            FamilySpec::Sym(n) => builder.symmetric(*n),
            FamilySpec::Alt(n) => builder.alternating(*n),
            FamilySpec::Dihedral(n) => builder.dihedral(*n),
            FamilySpec::Quaternion8 => builder.quaternion8(),
            FamilySpec::GenDihedral(inner) => {
                let a = inner.build(builder)?;
                builder.generalized_dihedral(&a)
            }
            FamilySpec::Product(a, b) => {
                let (a, b) = (a.build(builder)?, b.build(builder)?);
                builder.direct_product(&a, &b)
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "quaternion8" {
            return Ok(FamilySpec::Quaternion8);
        }
        let (head, rest) = s
            .split_once('(')
            .ok_or_else(|| spec_err(format!("unknown family {s:?}")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| spec_err(format!("missing closing parenthesis in {s:?}")))?;
        Ok(match head.trim() {
            "cyclic" => FamilySpec::Cyclic(number(args)?),
            "abelian" => FamilySpec::Abelian(factor_list(args)?),
            "elem" => {
                let (p, r) = prime_power(args)?;
                FamilySpec::Elem { p, r }
            }
            "sym" => FamilySpec::Sym(number(args)?),
            "alt" => FamilySpec::Alt(number(args)?),
            "dihedral" => FamilySpec::Dihedral(number(args)?),
            "gendihedral" => FamilySpec::GenDihedral(Box::new(FamilySpec::parse_inner(args)?)),
            "product" => {
                let (a, b) = split_pair(args)?;
                FamilySpec::Product(Box::new(a.parse()?), Box::new(b.parse()?))
            }
            other => return Err(spec_err(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join("x");
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic({n})"),
            FamilySpec::Abelian(v) => write!(f, "abelian({})", list(v)),
            FamilySpec::Elem { p, r } => write!(f, "elem({p}^{r})"),
            FamilySpec::Sym(n) => write!(f, "sym({n})"),
            FamilySpec::Alt(n) => write!(f, "alt({n})"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral({n})"),
            FamilySpec::Quaternion8 => write!(f, "quaternion8"),
            FamilySpec::GenDihedral(inner) => match inner.as_ref() {
                FamilySpec::Elem { p, r } => write!(f, "gendihedral({p}^{r})"),
                FamilySpec::Cyclic(n) => write!(f, "gendihedral({n})"),
                FamilySpec::Abelian(v) => write!(f, "gendihedral({})", list(v)),
                other => write!(f, "gendihedral({other})"),
            },
            FamilySpec::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

/// Where a group comes from on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Family(FamilySpec),
    File { path: PathBuf, name: String },
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("file:") {
            let (path, name) = rest
                .rsplit_once('#')
                .ok_or_else(|| spec_err(format!("expected file:<path>#<name>, got {s:?}")))?;
            if path.is_empty() || name.is_empty() {
                return Err(spec_err(format!("expected file:<path>#<name>, got {s:?}")));
            }
            return Ok(GroupSpec::File {
                path: PathBuf::from(path),
                name: name.to_string(),
            });
        }
        let body = s.strip_prefix("family:").unwrap_or(s);
        Ok(GroupSpec::Family(body.parse()?))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(spec) => write!(f, "family:{spec}"),
            GroupSpec::File { path, name } => write!(f, "file:{}#{name}", path.display()),
        }
    }
}

impl GroupSpec {
    pub fn load(&self, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Family(spec) => spec.build(&Builder::new(cap)),
            GroupSpec::File { path, name } => {
                let catalog = parse_catalog(path)?;
                let record = catalog
                    .get(name)
                    .ok_or_else(|| spec_err(format!("no record {name} in {}", path.display())))?;
                load_group(record, &path.display().to_string(), cap)
            }
        }
    }
}

//! Built-in permutation realizations of standard small groups.
//!
//! Names are `cyclic:n`, `dihedral:n`, `symmetric:n`, `alternating:n`,
//! `quaternion8`, `sl23`, `frobenius21` and `product(A,B)` for any two
//! builtin names `A`, `B`.

use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::{Error, Result};

pub fn builtin(name: &str, cap: usize) -> Result<Arc<FiniteGroup>> {
    let name = name.trim();
    if let Some(inner) = name.strip_prefix("product(").and_then(|s| s.strip_suffix(')')) {
        let (a, b) = split_top_level(inner).ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
        let left = builtin(a, cap)?;
        let right = builtin(b, cap)?;
        return left.direct_product(&right, cap);
    }
    let (family, param) = match name.split_once(':') {
        Some((f, p)) => (f, Some(p)),
        None => (name, None),
    };
    let n = match param {
        Some(p) => Some(p.trim().parse::<usize>().map_err(|_| Error::BadParameter {
            name: name.to_string(),
            reason: format!("`{p}` is not a non-negative integer"),
        })?),
        None => None,
    };
    let need_n = |min: usize| -> Result<usize> {
        match n {
            Some(n) if n >= min => Ok(n),
            Some(n) => Err(Error::BadParameter { name: name.to_string(), reason: format!("{n} < {min}") }),
            None => Err(Error::BadParameter { name: name.to_string(), reason: "missing parameter".into() }),
        }
    };
    let no_n = || -> Result<()> {
        match n {
            None => Ok(()),
            Some(_) => Err(Error::BadParameter { name: name.to_string(), reason: "takes no parameter".into() }),
        }
    };
    let (degree, gens) = match family {
        "cyclic" => cyclic(need_n(1)?),
        "dihedral" => dihedral(need_n(3)?),
        "symmetric" => symmetric(need_n(1)?),
        "alternating" => alternating(need_n(1)?),
        "quaternion8" => {
            no_n()?;
            quaternion8()
        }
        "sl23" => {
            no_n()?;
            sl23()
        }
        "frobenius21" => {
            no_n()?;
            affine(7, 2)
        }
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    let gens = gens
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::generate_with_cap(degree, gens, cap)
}

/// Splits `A,B` at the single comma outside parentheses.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if split.is_some() {
                    return None;
                }
                split = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    let i = split?;
    Some((s[..i].trim(), s[i + 1..].trim()))
}

type Gens = (usize, Vec<Vec<usize>>);

fn rotation(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

fn cyclic(n: usize) -> Gens {
    if n == 1 {
        (1, Vec::new())
    } else {
        (n, vec![rotation(n)])
    }
}

fn dihedral(n: usize) -> Gens {
    let reflection = (0..n).map(|i| (n - i) % n).collect();
    (n, vec![rotation(n), reflection])
}

fn symmetric(n: usize) -> Gens {
    match n {
        1 => (1, Vec::new()),
        2 => (2, vec![vec![1, 0]]),
        _ => {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            (n, vec![swap, rotation(n)])
        }
    }
}

/// 3-cycles `(0 1 i)` for `2 ≤ i < n`.
fn alternating(n: usize) -> Gens {
    let gens = (2..n)
        .map(|i| {
            let mut img: Vec<usize> = (0..n).collect();
            img[0] = 1;
            img[1] = i;
            img[i] = 0;
            img
        })
        .collect();
    (n, gens)
}

/// `x ↦ x + 1` and `x ↦ a·x` on Z/p.
fn affine(p: usize, a: usize) -> Gens {
    (p, vec![rotation(p), (0..p).map(|x| x * a % p).collect()])
}

/// Right-regular action of Q8 on itself. Element `4s + u` is `(-1)^s · u`
/// with units `u` = 1, i, j, k.
fn quaternion8() -> Gens {
    // unit products: (sign, unit) of u·v
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let right = |v: usize| -> Vec<usize> {
        (0..8)
            .map(|x| {
                let (s, u) = (x / 4, x % 4);
                let (t, w) = TABLE[u][v];
                4 * ((s + t) % 2) + w
            })
            .collect()
    };
    (8, vec![right(1), right(2)])
}

/// SL(2,3) acting on the eight nonzero vectors of F₃².
fn sl23() -> Gens {
    let vectors: Vec<(usize, usize)> =
        (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap();
    let act = |m: [[usize; 2]; 2]| -> Vec<usize> {
        vectors
            .iter()
            .map(|&(a, b)| index(((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3)))
            .collect()
    };
    (8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

//! Standard based root data of the classical families.

use std::fmt;
use std::str::FromStr;

use super::{BasedRootDatum, RootDataError, RootDatum};

pub const MAX_BUILTIN_RANK: usize = 8;

/// `GL n`, `SL n`, `PGL n` (rank `n` or `n − 1`), `Sp n` = `Sp_{2n}` and
/// `SO n` = `SO_{2n+1}` (both rank `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinFamily {
    GL,
    SL,
    PGL,
    Sp,
    SO,
}

impl FromStr for BuiltinFamily {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "GL" => Ok(BuiltinFamily::GL),
            "SL" => Ok(BuiltinFamily::SL),
            "PGL" => Ok(BuiltinFamily::PGL),
            "Sp" => Ok(BuiltinFamily::Sp),
            "SO" => Ok(BuiltinFamily::SO),
            other => Err(RootDataError::UnsupportedFamily(other.to_string())),
        }
    }
}

impl fmt::Display for BuiltinFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BuiltinFamily::GL => "GL",
            BuiltinFamily::SL => "SL",
            BuiltinFamily::PGL => "PGL",
            BuiltinFamily::Sp => "Sp",
            BuiltinFamily::SO => "SO",
        };
        f.write_str(s)
    }
}

impl BuiltinFamily {
    /// Order of the Weyl group of the family member with parameter `n`.
    pub fn weyl_order(self, n: usize) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            BuiltinFamily::GL | BuiltinFamily::SL | BuiltinFamily::PGL => fact(n),
            BuiltinFamily::Sp | BuiltinFamily::SO => (1u64 << n) * fact(n),
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn combine(a: &[i64], sa: i64, b: &[i64], sb: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| sa * x + sb * y).collect()
}

fn finish(rank: usize, pairs: Vec<(Vec<i64>, Vec<i64>)>, simple_roots: Vec<Vec<i64>>) -> BasedRootDatum {
    let (roots, coroots): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let simple = simple_roots
        .iter()
        .map(|s| roots.iter().position(|r| r == s).expect("simple root present"))
        .collect();
    let datum = RootDatum::new(rank, roots, coroots).expect("builtin datum is valid");
    BasedRootDatum::new(datum, simple).expect("builtin datum is based")
}

/// Positive roots of `A_{m}` as Δ-coefficient vectors (intervals of ones).
fn type_a_positive_coefficients(m: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut c = vec![0; m];
            for x in c.iter_mut().take(j + 1).skip(i) {
                *x = 1;
            }
            out.push(c);
        }
    }
    out
}

/// Cartan matrix times `c` for type `A_m`: coordinates of `Σ c_k α_k` in the
/// fundamental-weight basis.
fn cartan_a(c: &[i64]) -> Vec<i64> {
    let m = c.len();
    (0..m)
        .map(|j| {
            let mut s = 2 * c[j];
            if j > 0 {
                s -= c[j - 1];
            }
            if j + 1 < m {
                s -= c[j + 1];
            }
            s
        })
        .collect()
}

pub fn builtin_datum(family: BuiltinFamily, n: usize) -> Result<BasedRootDatum, RootDataError> {
    let min = match family {
        BuiltinFamily::SL | BuiltinFamily::PGL => 2,
        _ => 1,
    };
    if n < min || n > MAX_BUILTIN_RANK {
        return Err(RootDataError::RankCapExceeded {
            n,
            cap: MAX_BUILTIN_RANK,
        });
    }
    let d = match family {
        BuiltinFamily::GL => {
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let r = combine(&unit(n, i), 1, &unit(n, j), -1);
                        pairs.push((r.clone(), r));
                    }
                }
            }
            let simple = (0..n.saturating_sub(1))
                .map(|i| combine(&unit(n, i), 1, &unit(n, i + 1), -1))
                .collect();
            finish(n, pairs, simple)
        }
        BuiltinFamily::SL | BuiltinFamily::PGL => {
            let m = n - 1;
            let mut pairs = Vec::new();
            for c in type_a_positive_coefficients(m) {
                let (root, coroot) = if family == BuiltinFamily::SL {
                    (cartan_a(&c), c.clone())
                } else {
                    (c.clone(), cartan_a(&c))
                };
                let neg_root: Vec<i64> = root.iter().map(|x| -x).collect();
                let neg_coroot: Vec<i64> = coroot.iter().map(|x| -x).collect();
                pairs.push((root, coroot));
                pairs.push((neg_root, neg_coroot));
            }
            let simple = (0..m)
                .map(|i| {
                    let c = unit(m, i);
                    if family == BuiltinFamily::SL {
                        cartan_a(&c)
                    } else {
                        c
                    }
                })
                .collect();
            finish(m, pairs, simple)
        }
        BuiltinFamily::Sp | BuiltinFamily::SO => {
            let long_is_root = family == BuiltinFamily::Sp;
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                        let r = combine(&unit(n, i), si, &unit(n, j), sj);
                        pairs.push((r.clone(), r));
                    }
                }
            }
            for i in 0..n {
                for s in [1, -1] {
                    let short: Vec<i64> = unit(n, i).iter().map(|x| s * x).collect();
                    let long: Vec<i64> = short.iter().map(|x| 2 * x).collect();
                    if long_is_root {
                        pairs.push((long, short));
                    } else {
                        pairs.push((short, long));
                    }
                }
            }
            let mut simple: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| combine(&unit(n, i), 1, &unit(n, i + 1), -1))
                .collect();
            let last = unit(n, n - 1);
            simple.push(if long_is_root {
                last.iter().map(|x| 2 * x).collect()
            } else {
                last
            });
            finish(n, pairs, simple)
        }
    };
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(builtin_datum(BuiltinFamily::GL, 2).unwrap().roots().len(), 2);
        assert_eq!(builtin_datum(BuiltinFamily::GL, 3).unwrap().roots().len(), 6);
        assert_eq!(builtin_datum(BuiltinFamily::Sp, 2).unwrap().roots().len(), 8);
        assert_eq!(builtin_datum(BuiltinFamily::SO, 3).unwrap().roots().len(), 18);
        assert_eq!(builtin_datum(BuiltinFamily::SL, 4).unwrap().roots().len(), 12);
    }

    #[test]
    fn sl2_coordinates() {
        let d = builtin_datum(BuiltinFamily::SL, 2).unwrap();
        assert_eq!(d.rank(), 1);
        assert_eq!(d.simple_roots().next().unwrap(), &[2]);
        assert_eq!(d.simple_coroots().next().unwrap(), &[1]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            builtin_datum(BuiltinFamily::GL, 9),
            Err(RootDataError::RankCapExceeded { .. })
        ));
        assert!(matches!(
            builtin_datum(BuiltinFamily::SL, 1),
            Err(RootDataError::RankCapExceeded { .. })
        ));
        assert!(matches!(
            "E8".parse::<BuiltinFamily>(),
            Err(RootDataError::UnsupportedFamily(_))
        ));
    }
}

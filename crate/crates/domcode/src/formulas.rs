//! Closed forms for the optimal code sizes on products of complete graphs
//! and on the Hamming graphs `K_q³`.
//!
//! Every function guards its stated parameter range and errors — naming the
//! violated bound — instead of clamping. The case guards are written in the
//! order the case analyses state them, special cases first, so overlapping
//! regions resolve deterministically.

use std::str::FromStr;

use crate::graph::Graph;
use crate::verify::CodeClass;
use crate::{Error, Result};

/// `γ^LD(K_n □ K_m)` for `2 ≤ n ≤ m`.
pub fn cart_ld(n: usize, m: usize) -> Result<usize> {
    require_product_range("cart_ld", n, m)?;
    if 2 * n <= m {
        Ok(m - 1)
    } else {
        // n ≤ m ≤ 2n−1
        Ok((2 * n + 2 * m).div_ceil(3) - 1)
    }
}

/// `γ^DLD(K_n □ K_m)` for `2 ≤ n ≤ m`.
///
/// The stated `4 ≤ 2n ≤ m` and `n = 2` cases both yield `m` and are merged
/// into one guard. `n = 1` is rejected: a single-vertex factor conflicts with
/// the standing at-least-two-vertices assumption.
pub fn cart_dld(n: usize, m: usize) -> Result<usize> {
    require_product_range("cart_dld", n, m)?;
    if n == 2 || 2 * n <= m {
        Ok(m)
    } else if n < m {
        // 2 < n < m < 2n
        Ok(2 * n)
    } else {
        // 2 < m = n
        Ok(2 * n - 1)
    }
}

/// `γ^SLD(K_n □ K_m)` for `2 ≤ n ≤ m`.
pub fn cart_sld(n: usize, m: usize) -> Result<usize> {
    require_product_range("cart_sld", n, m)?;
    if n == 2 && m == 2 {
        Ok(4)
    } else if 2 * n <= m {
        Ok(m)
    } else if n < m {
        // 2 ≤ n < m < 2n
        Ok(2 * n)
    } else {
        // 2 < m = n
        Ok(2 * n - 1)
    }
}

/// `γ(K_q □ K_q) = q`: the domination number of the rook's graph.
pub fn cart_dom_rook(q: usize) -> Result<usize> {
    if q == 0 {
        return Err(Error::Domain("cart_dom_rook requires q >= 1, got q=0".into()));
    }
    Ok(q)
}

/// `γ^LD(K_n × K_m)` for `2 ≤ n ≤ m`.
pub fn direct_ld(n: usize, m: usize) -> Result<usize> {
    require_product_range("direct_ld", n, m)?;
    if n == 2 && m <= 4 {
        Ok(m)
    } else if n == 4 && m == 4 {
        Ok(5)
    } else if 2 * n <= m {
        Ok(m - 1)
    } else {
        // 2 < n ≤ m < 2n, (n,m) ≠ (4,4)
        Ok((2 * n + 2 * m - 1).div_ceil(3) - 1)
    }
}

/// `γ^DLD(K_n × K_m)`: equal to the Cartesian value for all `2 ≤ n ≤ m`.
pub fn direct_dld(n: usize, m: usize) -> Result<usize> {
    require_product_range("direct_dld", n, m)?;
    cart_dld(n, m)
}

/// `γ^SLD(K_n × K_m)` for `2 ≤ n ≤ m`.
pub fn direct_sld(n: usize, m: usize) -> Result<usize> {
    require_product_range("direct_sld", n, m)?;
    if n == 2 && m == 2 {
        Ok(4)
    } else if n == 2 {
        Ok(m)
    } else {
        Ok(n + m - 1)
    }
}

/// `γ^DLD(K_q³) = q²` for `q ≥ 2`.
pub fn cube_dld(q: usize) -> Result<usize> {
    if q < 2 {
        return Err(Error::Domain(format!("cube_dld requires q >= 2, got q={q}")));
    }
    Ok(q * q)
}

/// The bracket `γ^LD(K_n□K_m) − 1 ≤ γ^LD(K_n×K_m) ≤ γ^LD(K_n□K_m)`,
/// valid for `2 ≤ n ≤ m` except `(n,m) = (2,4)`.
pub fn gamma_bounds_ld_direct_vs_cartesian(n: usize, m: usize) -> Result<(usize, usize)> {
    require_product_range("ld bracket", n, m)?;
    if (n, m) == (2, 4) {
        return Err(Error::Domain(
            "the LD bracket excludes (n,m) = (2,4)".into(),
        ));
    }
    let cart = cart_ld(n, m)?;
    Ok((cart - 1, cart))
}

fn require_product_range(what: &str, n: usize, m: usize) -> Result<()> {
    if n < 2 || m < n {
        return Err(Error::Domain(format!(
            "{what} requires 2 <= n <= m, got n={n}, m={m}"
        )));
    }
    Ok(())
}

/// A closed-form query: one value family plus its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaQuery {
    CartLd { n: usize, m: usize },
    CartDld { n: usize, m: usize },
    CartSld { n: usize, m: usize },
    CartDomRook { q: usize },
    DirectLd { n: usize, m: usize },
    DirectDld { n: usize, m: usize },
    DirectSld { n: usize, m: usize },
    CubeDld { q: usize },
}

impl GammaQuery {
    pub fn family_name(&self) -> &'static str {
        match self {
            GammaQuery::CartLd { .. } => "cart_ld",
            GammaQuery::CartDld { .. } => "cart_dld",
            GammaQuery::CartSld { .. } => "cart_sld",
            GammaQuery::CartDomRook { .. } => "cart_dom_rook",
            GammaQuery::DirectLd { .. } => "direct_ld",
            GammaQuery::DirectDld { .. } => "direct_dld",
            GammaQuery::DirectSld { .. } => "direct_sld",
            GammaQuery::CubeDld { .. } => "cube_dld",
        }
    }

    /// Assembles a query from a family name and the parameters it needs.
    pub fn from_parts(family: &str, n: Option<usize>, m: Option<usize>, q: Option<usize>) -> Result<GammaQuery> {
        let need_nm = |f: fn(usize, usize) -> GammaQuery| -> Result<GammaQuery> {
            match (n, m) {
                (Some(n), Some(m)) => Ok(f(n, m)),
                _ => Err(Error::InvalidParameter(format!(
                    "family {family} needs --n and --m"
                ))),
            }
        };
        let need_q = |f: fn(usize) -> GammaQuery| -> Result<GammaQuery> {
            q.map(f).ok_or_else(|| {
                Error::InvalidParameter(format!("family {family} needs --q"))
            })
        };
        match family {
            "cart_ld" => need_nm(|n, m| GammaQuery::CartLd { n, m }),
            "cart_dld" => need_nm(|n, m| GammaQuery::CartDld { n, m }),
            "cart_sld" => need_nm(|n, m| GammaQuery::CartSld { n, m }),
            "cart_dom_rook" => need_q(|q| GammaQuery::CartDomRook { q }),
            "direct_ld" => need_nm(|n, m| GammaQuery::DirectLd { n, m }),
            "direct_dld" => need_nm(|n, m| GammaQuery::DirectDld { n, m }),
            "direct_sld" => need_nm(|n, m| GammaQuery::DirectSld { n, m }),
            "cube_dld" => need_q(|q| GammaQuery::CubeDld { q }),
            other => Err(Error::Parse(format!("unknown gamma family `{other}`"))),
        }
    }

    /// The graph the query's value refers to.
    pub fn build_graph(&self) -> Result<Graph> {
        match *self {
            GammaQuery::CartLd { n, m }
            | GammaQuery::CartDld { n, m }
            | GammaQuery::CartSld { n, m } => {
                Graph::cartesian_product(&Graph::complete(n)?, &Graph::complete(m)?)
            }
            GammaQuery::CartDomRook { q } => {
                Graph::cartesian_product(&Graph::complete(q)?, &Graph::complete(q)?)
            }
            GammaQuery::DirectLd { n, m }
            | GammaQuery::DirectDld { n, m }
            | GammaQuery::DirectSld { n, m } => {
                Graph::direct_product(&Graph::complete(n)?, &Graph::complete(m)?)
            }
            GammaQuery::CubeDld { q } => Graph::hamming_cube(q),
        }
    }

    /// The code class the query's value refers to.
    pub fn code_class(&self) -> CodeClass {
        match self {
            GammaQuery::CartLd { .. } | GammaQuery::DirectLd { .. } => CodeClass::Ld,
            GammaQuery::CartDld { .. }
            | GammaQuery::DirectDld { .. }
            | GammaQuery::CubeDld { .. } => CodeClass::Dld,
            GammaQuery::CartSld { .. } | GammaQuery::DirectSld { .. } => CodeClass::Sld,
            GammaQuery::CartDomRook { .. } => CodeClass::Dom,
        }
    }
}

impl FromStr for GammaQuery {
    type Err = Error;

    /// Parses `family(n,m)` or `family(q)`, e.g. `direct_sld(3,4)`.
    fn from_str(s: &str) -> Result<GammaQuery> {
        let (family, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("expected `family(args)`, got `{s}`")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing `)` in `{s}`")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer `{a}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            [n, m] => GammaQuery::from_parts(family, Some(*n), Some(*m), None),
            [q] => GammaQuery::from_parts(family, None, None, Some(*q)),
            _ => Err(Error::Parse(format!("expected one or two arguments in `{s}`"))),
        }
    }
}

/// Evaluates a query against the closed forms.
pub fn gamma_closed_form(query: &GammaQuery) -> Result<usize> {
    match *query {
        GammaQuery::CartLd { n, m } => cart_ld(n, m),
        GammaQuery::CartDld { n, m } => cart_dld(n, m),
        GammaQuery::CartSld { n, m } => cart_sld(n, m),
        GammaQuery::CartDomRook { q } => cart_dom_rook(q),
        GammaQuery::DirectLd { n, m } => direct_ld(n, m),
        GammaQuery::DirectDld { n, m } => direct_dld(n, m),
        GammaQuery::DirectSld { n, m } => direct_sld(n, m),
        GammaQuery::CubeDld { q } => cube_dld(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_values() {
        assert_eq!(cart_ld(3, 6).unwrap(), 5);
        assert_eq!(cart_ld(4, 5).unwrap(), 5);
        assert_eq!(direct_ld(2, 4).unwrap(), 4);
        assert_eq!(direct_ld(3, 3).unwrap(), 3);
        assert_eq!(direct_ld(2, 5).unwrap(), 4);
        assert_eq!(direct_sld(2, 2).unwrap(), 4);
        assert_eq!(direct_sld(3, 5).unwrap(), 7);
        assert_eq!(cart_dld(3, 4).unwrap(), 6);
        assert_eq!(cart_dld(4, 4).unwrap(), 7);
        assert_eq!(cart_dld(2, 5).unwrap(), 5);
        assert_eq!(cube_dld(3).unwrap(), 9);
        assert_eq!(cube_dld(2).unwrap(), 4);
        assert_eq!(cart_dom_rook(4).unwrap(), 4);
        assert_eq!(direct_ld(10, 10).unwrap(), 12);
    }

    #[test]
    fn domain_guards() {
        assert!(cart_ld(1, 3).is_err());
        assert!(cart_ld(3, 2).is_err());
        assert!(cart_dld(1, 1).is_err());
        assert!(cube_dld(1).is_err());
        assert!(cart_dom_rook(0).is_err());
        assert!(matches!(
            gamma_bounds_ld_direct_vs_cartesian(2, 4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ld_bracket() {
        assert_eq!(gamma_bounds_ld_direct_vs_cartesian(3, 3).unwrap(), (2, 3));
        assert_eq!(gamma_bounds_ld_direct_vs_cartesian(4, 4).unwrap(), (4, 5));
        for n in 2..=12 {
            for m in n..=12 {
                if (n, m) == (2, 4) {
                    continue;
                }
                let (lo, hi) = gamma_bounds_ld_direct_vs_cartesian(n, m).unwrap();
                let v = direct_ld(n, m).unwrap();
                assert!(lo <= v && v <= hi, "(n,m)=({n},{m}): {v} not in [{lo},{hi}]");
            }
        }
    }

    #[test]
    fn chain_inequality_pointwise() {
        for n in 2..=12 {
            for m in n..=12 {
                assert!(cart_ld(n, m).unwrap() <= cart_dld(n, m).unwrap());
                assert!(cart_dld(n, m).unwrap() <= cart_sld(n, m).unwrap());
                assert!(direct_ld(n, m).unwrap() <= direct_dld(n, m).unwrap());
                assert!(direct_dld(n, m).unwrap() <= direct_sld(n, m).unwrap());
            }
        }
    }

    #[test]
    fn direct_dld_equals_cart_dld() {
        for n in 2..=12 {
            for m in n..=12 {
                assert_eq!(direct_dld(n, m).unwrap(), cart_dld(n, m).unwrap());
            }
        }
    }

    // Frozen snapshots, rows n=2..=12, columns m=n..=12, computed
    // independently from the case analyses. These pin the case-boundary
    // behavior (m = 2n−1 vs m = 2n, n = m, and the special cells).
    const CART_LD: [&[usize]; 11] = [
        &[2, 3, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        &[3, 4, 5, 5, 6, 7, 8, 9, 10, 11],
        &[5, 5, 6, 7, 7, 8, 9, 10, 11],
        &[6, 7, 7, 8, 9, 9, 10, 11],
        &[7, 8, 9, 9, 10, 11, 11],
        &[9, 9, 10, 11, 11, 12],
        &[10, 11, 11, 12, 13],
        &[11, 12, 13, 13],
        &[13, 13, 14],
        &[14, 15],
        &[15],
    ];
    const CART_DLD: [&[usize]; 11] = [
        &[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        &[5, 6, 6, 6, 7, 8, 9, 10, 11, 12],
        &[7, 8, 8, 8, 8, 9, 10, 11, 12],
        &[9, 10, 10, 10, 10, 10, 11, 12],
        &[11, 12, 12, 12, 12, 12, 12],
        &[13, 14, 14, 14, 14, 14],
        &[15, 16, 16, 16, 16],
        &[17, 18, 18, 18],
        &[19, 20, 20],
        &[21, 22],
        &[23],
    ];
    const CART_SLD: [&[usize]; 11] = [
        &[4, 4, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        &[5, 6, 6, 6, 7, 8, 9, 10, 11, 12],
        &[7, 8, 8, 8, 8, 9, 10, 11, 12],
        &[9, 10, 10, 10, 10, 10, 11, 12],
        &[11, 12, 12, 12, 12, 12, 12],
        &[13, 14, 14, 14, 14, 14],
        &[15, 16, 16, 16, 16],
        &[17, 18, 18, 18],
        &[19, 20, 20],
        &[21, 22],
        &[23],
    ];
    const DIRECT_LD: [&[usize]; 11] = [
        &[2, 3, 4, 4, 5, 6, 7, 8, 9, 10, 11],
        &[3, 4, 4, 5, 6, 7, 8, 9, 10, 11],
        &[5, 5, 6, 6, 7, 8, 9, 10, 11],
        &[6, 6, 7, 8, 8, 9, 10, 11],
        &[7, 8, 8, 9, 10, 10, 11],
        &[8, 9, 10, 10, 11, 12],
        &[10, 10, 11, 12, 12],
        &[11, 12, 12, 13],
        &[12, 13, 14],
        &[14, 14],
        &[15],
    ];
    const DIRECT_SLD: [&[usize]; 11] = [
        &[4, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        &[5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
        &[7, 8, 9, 10, 11, 12, 13, 14, 15],
        &[9, 10, 11, 12, 13, 14, 15, 16],
        &[11, 12, 13, 14, 15, 16, 17],
        &[13, 14, 15, 16, 17, 18],
        &[15, 16, 17, 18, 19],
        &[17, 18, 19, 20],
        &[19, 20, 21],
        &[21, 22],
        &[23],
    ];

    fn check_snapshot(name: &str, f: fn(usize, usize) -> Result<usize>, table: &[&[usize]; 11]) {
        for n in 2..=12 {
            for m in n..=12 {
                assert_eq!(
                    f(n, m).unwrap(),
                    table[n - 2][m - n],
                    "{name}({n},{m})"
                );
            }
        }
    }

    #[test]
    fn table_snapshots() {
        check_snapshot("cart_ld", cart_ld, &CART_LD);
        check_snapshot("cart_dld", cart_dld, &CART_DLD);
        check_snapshot("cart_sld", cart_sld, &CART_SLD);
        check_snapshot("direct_ld", direct_ld, &DIRECT_LD);
        check_snapshot("direct_dld", direct_dld, &CART_DLD);
        check_snapshot("direct_sld", direct_sld, &DIRECT_SLD);
    }

    #[test]
    fn query_round_trip() {
        let q: GammaQuery = "direct_sld(3,4)".parse().unwrap();
        assert_eq!(q, GammaQuery::DirectSld { n: 3, m: 4 });
        assert_eq!(gamma_closed_form(&q).unwrap(), 6);
        let q: GammaQuery = "cube_dld(3)".parse().unwrap();
        assert_eq!(gamma_closed_form(&q).unwrap(), 9);
        assert!("nope(1,2)".parse::<GammaQuery>().is_err());
    }
}

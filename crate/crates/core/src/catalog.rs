//! Built-in catalog: the non-weakly regular bent functions used throughout the
//! test suites, plus weakly regular quadratic controls.

use crate::error::{Error, Result};
use crate::function::{parse_function, tabulate, PFunction};

/// A named catalog function with its expected headline properties.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub p: u64,
    pub n: usize,
    pub expr: &'static str,
    /// Stated dual polynomial, when the source lists one.
    pub dual_expr: Option<&'static str>,
    /// Expected classification: true for weakly regular controls.
    pub weakly_regular: bool,
    /// Expected type sign (+1 or −1) for the non-weakly regular entries.
    pub type_sign: Option<i64>,
    /// Expected dimension of the subspace sign sets, when applicable.
    pub r: Option<usize>,
}

/// Every catalog entry, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "ex1-f5n4",
            p: 5,
            n: 4,
            expr: "x1^2 + x2^2*x4^4 + x2^2 + x3*x4",
            dual_expr: Some("x1^2 + 2*x2^2*x3^4 + x2^2 + 4*x3*x4"),
            weakly_regular: false,
            type_sign: Some(1),
            r: Some(3),
        },
        CatalogEntry {
            name: "ex2-f5n4-minus",
            p: 5,
            n: 4,
            expr: "x1^2 + 4*x2^2*x4^4 + 2*x2^2 + x3*x4",
            dual_expr: Some("x1^2 + 3*x2^2*x3^4 + 3*x2^2 + 4*x3*x4"),
            weakly_regular: false,
            type_sign: Some(-1),
            r: Some(3),
        },
        CatalogEntry {
            name: "ex3-f5n6-minus",
            p: 5,
            n: 6,
            expr: "x1^2 + 4*x2^2*x6^4 + 2*x2^2 + x3^2 + x4^2 + x5*x6",
            dual_expr: Some("x1^2 + 3*x2^2*x5^4 + 3*x2^2 + x3^2 + x4^2 + 4*x5*x6"),
            weakly_regular: false,
            type_sign: Some(-1),
            r: Some(5),
        },
        CatalogEntry {
            name: "ex4-f5n3",
            p: 5,
            n: 3,
            expr: "x1^2*x3^4 + x1^2 + x2*x3",
            dual_expr: Some("2*x1^2*x2^4 + x1^2 + 4*x2*x3"),
            weakly_regular: false,
            type_sign: Some(1),
            r: Some(2),
        },
        CatalogEntry {
            name: "ex5-f5n5",
            p: 5,
            n: 5,
            expr: "x1^2 + x2^2*x5^4 + x2^2 + x3^2 + x4*x5",
            dual_expr: Some("x1^2 + 2*x2^2*x4^4 + x2^2 + x3^2 + 4*x4*x5"),
            weakly_regular: false,
            type_sign: Some(1),
            r: Some(4),
        },
        CatalogEntry {
            name: "ex6-f5n3-minus",
            p: 5,
            n: 3,
            expr: "4*x1^2*x3^4 + 2*x1^2 + x2*x3",
            dual_expr: Some("3*x1^2*x2^4 + 3*x1^2 + 4*x2*x3"),
            weakly_regular: false,
            type_sign: Some(-1),
            r: Some(2),
        },
        CatalogEntry {
            name: "ex7-f5n5-minus",
            p: 5,
            n: 5,
            expr: "x1^2 + 4*x2^2*x5^4 + 2*x2^2 + x3^2 + x4*x5",
            dual_expr: Some("x1^2 + 3*x2^2*x4^4 + 3*x2^2 + x3^2 + 4*x4*x5"),
            weakly_regular: false,
            type_sign: Some(-1),
            r: Some(4),
        },
        CatalogEntry {
            name: "ex-f7n3-minus",
            p: 7,
            n: 3,
            expr: "5*x1^2*x3^6 + 3*x1^2 + x2*x3",
            dual_expr: Some("x1^2*x2^6 + 4*x1^2 + 6*x2*x3"),
            weakly_regular: false,
            type_sign: Some(-1),
            r: Some(2),
        },
        CatalogEntry {
            name: "ex-f7n5-minus",
            p: 7,
            n: 5,
            expr: "2*x1^2*x5^6 + x1^2 + x2^2 + x3^2 + x4*x5",
            dual_expr: Some("6*x1^2*x4^6 + 5*x1^2 + 5*x2^2 + 5*x3^2 + 6*x4*x5"),
            weakly_regular: false,
            type_sign: Some(-1),
            r: Some(4),
        },
        CatalogEntry {
            name: "ex-f7n3-plus",
            p: 7,
            n: 3,
            expr: "2*x1^2*x3^6 + x1^2 + x2*x3",
            dual_expr: Some("6*x1^2*x2^6 + 5*x1^2 + 6*x2*x3"),
            weakly_regular: false,
            type_sign: Some(1),
            r: Some(2),
        },
        CatalogEntry {
            name: "ex-f7n5-plus",
            p: 7,
            n: 5,
            expr: "5*x1^2*x5^6 + 3*x1^2 + x2^2 + x3^2 + x4*x5",
            dual_expr: Some("x1^2*x4^6 + 4*x1^2 + 5*x2^2 + 5*x3^2 + 6*x4*x5"),
            weakly_regular: false,
            type_sign: Some(1),
            r: Some(4),
        },
        CatalogEntry {
            name: "wr-quad-f5n3",
            p: 5,
            n: 3,
            expr: "x1^2 + x2^2 + x3^2",
            dual_expr: None,
            weakly_regular: true,
            type_sign: None,
            r: None,
        },
        CatalogEntry {
            name: "wr-quad-f5n4",
            p: 5,
            n: 4,
            expr: "x1^2 + x2^2 + x3^2 + x4^2",
            dual_expr: None,
            weakly_regular: true,
            type_sign: None,
            r: None,
        },
        CatalogEntry {
            name: "wr-quad-f7n3",
            p: 7,
            n: 3,
            expr: "x1^2 + x2^2 + x3^2",
            dual_expr: None,
            weakly_regular: true,
            type_sign: None,
            r: None,
        },
    ]
}

/// Names of the non-weakly regular example functions, in source order.
pub fn example_names() -> Vec<&'static str> {
    catalog()
        .iter()
        .filter(|e| !e.weakly_regular)
        .map(|e| e.name)
        .collect()
}

pub fn find(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

impl CatalogEntry {
    pub fn function(&self) -> Result<PFunction> {
        let expr = parse_function(self.expr)?;
        tabulate(&expr, self.p, self.n)
    }

    pub fn dual_function(&self) -> Result<Option<PFunction>> {
        match self.dual_expr {
            None => Ok(None),
            Some(text) => {
                let expr = parse_function(text)?;
                Ok(Some(tabulate(&expr, self.p, self.n)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_tabulates_and_vanishes_at_zero() {
        for entry in catalog() {
            let f = entry.function().unwrap();
            assert_eq!(f.p(), entry.p);
            assert_eq!(f.n(), entry.n);
            assert_eq!(f.value(0), 0, "{}: f(0) must be 0", entry.name);
            if let Some(dual) = entry.dual_function().unwrap() {
                assert_eq!(dual.value(0), 0, "{}: f*(0) must be 0", entry.name);
            }
        }
    }

    #[test]
    fn named_lookups() {
        assert_eq!(find("ex1-f5n4").unwrap().n, 4);
        assert_eq!(find("ex-f7n3-minus").unwrap().expr, "5*x1^2*x3^6 + 3*x1^2 + x2*x3");
        assert_eq!(find("wr-quad-f5n3").unwrap().p, 5);
        assert!(find("nope").is_err());
    }

    #[test]
    fn render_is_a_fixed_point_on_catalog_expressions() {
        for entry in catalog() {
            let e = parse_function(entry.expr).unwrap();
            assert_eq!(e.render(), entry.expr, "{}", entry.name);
        }
    }
}

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Irreducible,
    Reducible,
}

/// Irreducibility of the Hilbert scheme of `r` general points on
/// `P^{n_1} x ... x P^{n_d}`.
pub fn classify_products(r: u64, ns: &[usize]) -> Classification {
    assert!(r >= 1 && !ns.is_empty() && ns.iter().all(|&n| n >= 1), "positive inputs");
    if r == 1 || (ns.len() == 1 && (ns[0] == 1 || r <= 3)) {
        Classification::Irreducible
    } else {
        Classification::Reducible
    }
}

/// The single-factor case: reducible iff `n >= 2` and `r >= 4`.
pub fn classify_pn(n: usize, r: u64) -> Classification {
    classify_products(r, &[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use Classification::*;

    #[test]
    fn known_cases() {
        assert_eq!(classify_products(1, &[3, 3]), Irreducible);
        assert_eq!(classify_products(4, &[2]), Reducible);
        assert_eq!(classify_products(3, &[7]), Irreducible);
        assert_eq!(classify_products(9, &[1]), Irreducible);
        assert_eq!(classify_products(2, &[1, 1]), Reducible);
        for n in 1..6 {
            for r in 1..8 {
                assert_eq!(classify_pn(n, r) == Reducible, n >= 2 && r >= 4);
            }
        }
    }
}

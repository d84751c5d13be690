use std::cmp::Ordering;

use crate::algebra::Monomial;

/// A monomial order on a fixed set of variables.
///
/// Variable lists give priority from most to least significant, so
/// `Lex(vec![2, 0, 1])` means `x2 > x0 > x1`. A `Block` order compares the
/// blocks in sequence; the first block decides unless it ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex(Vec<usize>),
    Grevlex(Vec<usize>),
    Block(Vec<MonomialOrder>),
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex((0..nvars).collect())
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder::Grevlex((0..nvars).collect())
    }

    pub fn grevlex_on(vars: impl IntoIterator<Item = usize>) -> Self {
        MonomialOrder::Grevlex(vars.into_iter().collect())
    }

    /// Grevlex on the eliminated variables first, then `rest` on the others.
    pub fn elimination(eliminated: &[usize], rest: MonomialOrder) -> Self {
        MonomialOrder::Block(vec![MonomialOrder::Grevlex(eliminated.to_vec()), rest])
    }

    /// The order in which the first block dominates the second.
    pub fn block(first: MonomialOrder, second: MonomialOrder) -> Self {
        MonomialOrder::Block(vec![first, second])
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex(vars) => {
                for &v in vars {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Grevlex(vars) => {
                let da: u64 = vars.iter().map(|&v| a[v] as u64).sum();
                let db: u64 = vars.iter().map(|&v| b[v] as u64).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &v in vars.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(blocks) => {
                for blk in blocks {
                    match blk.cmp_exps(a, b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Variables mentioned by the order, in priority order.
    pub fn variables(&self) -> Vec<usize> {
        match self {
            MonomialOrder::Lex(v) | MonomialOrder::Grevlex(v) => v.clone(),
            MonomialOrder::Block(blocks) => blocks.iter().flat_map(|b| b.variables()).collect(),
        }
    }

    /// True when every one of `nvars` variables appears exactly once.
    pub fn is_total_on(&self, nvars: usize) -> bool {
        let mut seen = vec![false; nvars];
        for v in self.variables() {
            if v >= nvars || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// The same order after renaming variable `v` to `map[v]`.
    pub fn remap(&self, map: &[usize]) -> Self {
        match self {
            MonomialOrder::Lex(v) => MonomialOrder::Lex(v.iter().map(|&i| map[i]).collect()),
            MonomialOrder::Grevlex(v) => MonomialOrder::Grevlex(v.iter().map(|&i| map[i]).collect()),
            MonomialOrder::Block(b) => MonomialOrder::Block(b.iter().map(|o| o.remap(map)).collect()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex(_) => "lex".into(),
            MonomialOrder::Grevlex(_) => "grevlex".into(),
            MonomialOrder::Block(b) => {
                let parts: Vec<String> = b.iter().map(|o| o.name()).collect();
                format!("block({})", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_and_grevlex() {
        let lex = MonomialOrder::lex(3);
        assert_eq!(lex.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let gr = MonomialOrder::grevlex(3);
        assert_eq!(gr.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Less);
        // x0*x2 < x1^2 in grevlex
        assert_eq!(gr.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        let rev = MonomialOrder::Lex(vec![2, 1, 0]);
        assert_eq!(rev.compare(&m(&[1, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn block_first_dominates() {
        let o = MonomialOrder::block(MonomialOrder::Grevlex(vec![2]), MonomialOrder::Grevlex(vec![0, 1]));
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[9, 9, 0])), Ordering::Greater);
        assert!(o.is_total_on(3));
        assert!(!MonomialOrder::Grevlex(vec![0, 1]).is_total_on(3));
    }
}

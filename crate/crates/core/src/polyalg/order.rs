use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A monomial order. Variable 0 is the largest variable for the
/// lexicographic comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    GradedLex,
    GrevLex,
    /// Compare `weights·e` first, break ties with `tiebreak`.
    Weight { weights: Vec<i64>, tiebreak: Box<TermOrder> },
    /// Compare the exponent of `y` first, then `base`. Initial terms of this
    /// order lie in the initial y-form.
    YDominant { y: usize, base: Box<TermOrder> },
}

impl TermOrder {
    pub fn y_dominant(y: usize) -> Self {
        TermOrder::YDominant { y, base: Box::new(TermOrder::GrevLex) }
    }

    /// An elimination order for `vars` in a ring of `nvars` variables.
    pub fn eliminating(vars: &[usize], nvars: usize) -> Self {
        let mut weights = alloc::vec![0; nvars];
        for &v in vars {
            weights[v] = 1;
        }
        TermOrder::Weight { weights, tiebreak: Box::new(TermOrder::GrevLex) }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GradedLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            TermOrder::GrevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            TermOrder::Weight { weights, tiebreak } => {
                let wa: i64 = a.iter().zip(weights).map(|(&x, w)| i64::from(x) * w).sum();
                let wb: i64 = b.iter().zip(weights).map(|(&x, w)| i64::from(x) * w).sum();
                wa.cmp(&wb).then_with(|| tiebreak.cmp(a, b))
            }
            TermOrder::YDominant { y, base } => a[*y].cmp(&b[*y]).then_with(|| base.cmp(a, b)),
        }
    }
}

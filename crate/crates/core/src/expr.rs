//! Expression trees over generator letters, products, the operator, sums and
//! scalings. Both the engine and the rewriting oracle evaluate them.

use std::fmt;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Scale(Rational, Box<Expr>),
    Prod(Vec<Expr>),
    Op(Box<Expr>),
    /// A generator basis index; for the free generator a word over the alphabet.
    Gen(String),
    Unit,
}

impl Expr {
    pub fn gen(index: impl Into<String>) -> Expr {
        Expr::Gen(index.into())
    }

    pub fn op(e: Expr) -> Expr {
        Expr::Op(Box::new(e))
    }

    pub fn prod(l: Expr, r: Expr) -> Expr {
        Expr::Prod(vec![l, r])
    }

    pub fn scale(c: Rational, e: Expr) -> Expr {
        Expr::Scale(c, Box::new(e))
    }

    pub fn product_nodes(&self) -> usize {
        match self {
            Expr::Sum(xs) => xs.iter().map(Expr::product_nodes).sum(),
            Expr::Prod(xs) => xs.len().saturating_sub(1) + xs.iter().map(Expr::product_nodes).sum::<usize>(),
            Expr::Scale(_, e) => e.product_nodes(),
            Expr::Op(e) => e.product_nodes(),
            Expr::Gen(_) | Expr::Unit => 0,
        }
    }

    pub fn op_nodes(&self) -> usize {
        match self {
            Expr::Sum(xs) | Expr::Prod(xs) => xs.iter().map(Expr::op_nodes).sum(),
            Expr::Scale(_, e) => e.op_nodes(),
            Expr::Op(e) => 1 + e.op_nodes(),
            Expr::Gen(_) | Expr::Unit => 0,
        }
    }
}

/// Surface syntax accepted by the command-line parser.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Sum(xs) if xs.is_empty() => f.write_str("0*1"),
            Expr::Sum(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({x})")?;
                }
                Ok(())
            }
            Expr::Scale(c, e) => write!(f, "{c}*({e})"),
            Expr::Prod(xs) if xs.is_empty() => f.write_str("1"),
            Expr::Prod(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "({x})")?;
                }
                Ok(())
            }
            Expr::Op(e) => write!(f, "P({e})"),
            Expr::Gen(s) if s.is_empty() => f.write_str("1"),
            Expr::Gen(s) => f.write_str(s),
            Expr::Unit => f.write_str("1"),
        }
    }
}

/// Every tree built from `leaves` with at most `max_prod` binary products
/// and at most `max_op` operator applications.
pub fn enumerate_trees(leaves: &[Expr], max_prod: usize, max_op: usize) -> Vec<Expr> {
    // exact[p][q]: trees with exactly p products and q operators
    let mut exact: Vec<Vec<Vec<Expr>>> = vec![vec![Vec::new(); max_op + 1]; max_prod + 1];
    for p in 0..=max_prod {
        for q in 0..=max_op {
            let mut here = Vec::new();
            if p == 0 && q == 0 {
                here.extend(leaves.iter().cloned());
            }
            if q > 0 {
                here.extend(exact[p][q - 1].iter().map(|t| Expr::op(t.clone())));
            }
            if p > 0 {
                for lp in 0..p {
                    for lq in 0..=q {
                        let (rp, rq) = (p - 1 - lp, q - lq);
                        for l in &exact[lp][lq] {
                            for r in &exact[rp][rq] {
                                here.push(Expr::prod(l.clone(), r.clone()));
                            }
                        }
                    }
                }
            }
            exact[p][q] = here;
        }
    }
    exact.into_iter().flatten().flatten().collect()
}

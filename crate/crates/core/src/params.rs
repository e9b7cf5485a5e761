use num_traits::Zero;

use crate::error::{Error, Result};
use crate::Rational;

/// The weights of the construction: `P` has weight `kappa`, and the coproduct
/// is defined when `kappa = -lambda^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub lambda: Rational,
    pub kappa: Rational,
}

impl Params {
    /// Bialgebra setting: `kappa = -lambda^2`.
    pub fn hopf(lambda: Rational) -> Self {
        let kappa = -(&lambda * &lambda);
        Params { lambda, kappa }
    }

    /// Algebra-only setting with a free weight.
    pub fn algebra(lambda: Rational, kappa: Rational) -> Self {
        Params { lambda, kappa }
    }

    pub fn is_hopf(&self) -> bool {
        (&self.kappa + &self.lambda * &self.lambda).is_zero()
    }

    pub fn require_hopf(&self) -> Result<()> {
        if self.is_hopf() {
            Ok(())
        } else {
            Err(Error::WeightMismatch { lambda: Box::new(self.lambda.clone()), kappa: Box::new(self.kappa.clone()) })
        }
    }
}

impl Default for Params {
    fn default() -> Self {
        Params::hopf(crate::rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn hopf_weight() {
        let p = Params::hopf(ratio(1, 2));
        assert_eq!(p.kappa, ratio(-1, 4));
        assert!(p.require_hopf().is_ok());
        assert!(Params::algebra(int(1), int(3)).require_hopf().is_err());
    }
}

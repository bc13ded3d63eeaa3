//! Structure maps of an internal algebra on one object, with role flags.

use crate::exactmat::{Rat, RatMatrix};
use std::fmt;

#[derive(Debug, Clone)]
pub enum AlgebraError {
    ShapeMismatch(String),
    MissingStructure(String),
    NotAMorphism(String),
    NotUnitary(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            AlgebraError::MissingStructure(s) => write!(f, "missing structure: {s}"),
            AlgebraError::NotAMorphism(s) => write!(f, "not a structure morphism: {s}"),
            AlgebraError::NotUnitary(s) => write!(f, "not unitary: {s}"),
        }
    }
}

impl std::error::Error for AlgebraError {}

/// Which axiom suites the algebra claims to satisfy.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AlgebraFlags {
    pub monoid: bool,
    pub comonoid: bool,
    pub bialgebra: bool,
    pub frobenius: bool,
    pub special: bool,
    pub dagger: bool,
    pub hopf: bool,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl AlgebraFlags {
    /// Claims both algebras make; used when lifting a morphism between them.
    pub fn meet(self, other: AlgebraFlags) -> AlgebraFlags {
        AlgebraFlags {
            monoid: self.monoid && other.monoid,
            comonoid: self.comonoid && other.comonoid,
            bialgebra: self.bialgebra && other.bialgebra,
            frobenius: self.frobenius && other.frobenius,
            special: self.special && other.special,
            dagger: self.dagger && other.dagger,
            hopf: self.hopf && other.hopf,
            commutative: self.commutative && other.commutative,
            cocommutative: self.cocommutative && other.cocommutative,
        }
    }
}

/// `(mu, eta, Delta, epsilon, S)` on a carrier of dimension `n`, under the
/// map convention: `mu` is `n x n^2`, `eta` is `n x 1`, `Delta` is
/// `n^2 x n`, `epsilon` is `1 x n`, `S` is `n x n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    name: String,
    carrier: usize,
    mult: RatMatrix,
    unit: RatMatrix,
    comult: Option<RatMatrix>,
    counit: Option<RatMatrix>,
    antipode: Option<RatMatrix>,
    flags: AlgebraFlags,
}

impl AlgebraData {
    /// Panics on shape violations; algebra fixtures are built in-crate.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        carrier: usize,
        mult: RatMatrix,
        unit: RatMatrix,
        comult: Option<RatMatrix>,
        counit: Option<RatMatrix>,
        antipode: Option<RatMatrix>,
        flags: AlgebraFlags,
    ) -> Self {
        let n = carrier;
        assert_eq!((mult.rows(), mult.cols()), (n, n * n), "mult must be n x n^2");
        assert_eq!((unit.rows(), unit.cols()), (n, 1), "unit must be n x 1");
        if let Some(d) = &comult {
            assert_eq!((d.rows(), d.cols()), (n * n, n), "comult must be n^2 x n");
        }
        if let Some(e) = &counit {
            assert_eq!((e.rows(), e.cols()), (1, n), "counit must be 1 x n");
        }
        if let Some(s) = &antipode {
            assert_eq!((s.rows(), s.cols()), (n, n), "antipode must be n x n");
        }
        AlgebraData {
            name: name.into(),
            carrier,
            mult,
            unit,
            comult,
            counit,
            antipode,
            flags,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn mult(&self) -> &RatMatrix {
        &self.mult
    }

    pub fn unit(&self) -> &RatMatrix {
        &self.unit
    }

    pub fn comult(&self) -> Option<&RatMatrix> {
        self.comult.as_ref()
    }

    pub fn counit(&self) -> Option<&RatMatrix> {
        self.counit.as_ref()
    }

    pub fn antipode(&self) -> Option<&RatMatrix> {
        self.antipode.as_ref()
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    pub fn with_flags(mut self, flags: AlgebraFlags) -> Self {
        self.flags = flags;
        self
    }

    // Corruption hooks; flags are kept so the negative controls exercise the
    // full suites.

    pub fn with_mult(mut self, mult: RatMatrix) -> Self {
        self.mult = mult;
        self
    }

    pub fn with_unit(mut self, unit: RatMatrix) -> Self {
        self.unit = unit;
        self
    }

    pub fn with_comult(mut self, comult: RatMatrix) -> Self {
        self.comult = Some(comult);
        self
    }

    pub fn with_counit(mut self, counit: RatMatrix) -> Self {
        self.counit = Some(counit);
        self
    }

    pub fn with_antipode(mut self, antipode: RatMatrix) -> Self {
        self.antipode = Some(antipode);
        self
    }
}

/// The basis-copying algebra on dimension `n`: `mu(e_i (x) e_j) = delta_ij e_i`,
/// `eta = sum_i e_i`, `Delta(e_i) = e_i (x) e_i`, `epsilon = all-ones row`.
/// A commutative special dagger Frobenius structure, and not a bialgebra.
pub fn basis_copying(n: usize) -> AlgebraData {
    assert!(n >= 1);
    let mut mult = RatMatrix::zeros(n, n * n);
    for i in 0..n {
        mult.set(i, i * n + i, Rat::one());
    }
    let unit = RatMatrix::from_fn(n, 1, |_, _| Rat::one());
    let comult = mult.transpose();
    let counit = unit.transpose();
    AlgebraData::new(
        format!("copy{n}"),
        n,
        mult,
        unit,
        Some(comult),
        Some(counit),
        None,
        AlgebraFlags {
            monoid: true,
            comonoid: true,
            frobenius: true,
            special: true,
            dagger: true,
            commutative: true,
            cocommutative: true,
            ..AlgebraFlags::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat;

    #[test]
    fn basis_copying_tables() {
        let a = basis_copying(2);
        assert_eq!(*a.mult(), ratmat![[1, 0, 0, 0], [0, 0, 0, 1]]);
        assert_eq!(*a.unit(), ratmat![[1], [1]]);
        assert_eq!(a.comult().unwrap(), &a.mult().transpose());
        assert_eq!(*a.counit().unwrap(), ratmat![[1, 1]]);
        assert!(a.flags().dagger && a.flags().special && !a.flags().bialgebra);
    }

    #[test]
    #[should_panic(expected = "mult must be n x n^2")]
    fn shape_guard() {
        AlgebraData::new(
            "bad",
            2,
            RatMatrix::identity(2),
            RatMatrix::zeros(2, 1),
            None,
            None,
            None,
            AlgebraFlags::default(),
        );
    }
}

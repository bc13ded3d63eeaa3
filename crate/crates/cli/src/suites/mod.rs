//! The suite registry: fifteen law suites, one per verified result, each
//! deterministic in `(seed, samples, max-dim)` and tagged with its citation.

mod algebra_suites;
mod core_suites;
mod duality_suites;
mod monoidal_suites;

use crate::fixtures::FixtureSet;
use crate::report::{CheckRecord, SuiteReport};
use arrowcat_core::verdict::Verdict;
use std::fmt;

#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub seed: u64,
    pub samples: usize,
    pub max_dim: usize,
}

impl SuiteParams {
    pub fn new(seed: u64, samples: usize, max_dim: usize) -> Self {
        SuiteParams {
            seed,
            samples,
            max_dim,
        }
    }
}

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 50;
pub const DEFAULT_MAX_DIM: usize = 3;

type Runner = fn(&SuiteParams, &FixtureSet) -> Vec<CheckRecord>;

pub struct SuiteDef {
    pub id: &'static str,
    pub citation: &'static str,
    pub description: &'static str,
    /// Default dimension bound; monoidal coherence wants 4, the rest 3.
    pub default_max_dim: usize,
    runner: Runner,
}

impl SuiteDef {
    pub fn run(&self, params: &SuiteParams, fixtures: &FixtureSet) -> SuiteReport {
        SuiteReport::new(
            self.id,
            self.citation,
            params.seed,
            params.samples,
            params.max_dim,
            (self.runner)(params, fixtures),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown suite {:?}; run `arrowcat list` for the registry",
            self.0
        )
    }
}

impl std::error::Error for UnknownSuite {}

pub fn registry() -> &'static [SuiteDef] {
    &[
        SuiteDef {
            id: "arrow-core",
            citation: "Def. 1.1",
            description: "arrow objects and commuting squares: construction, identities, associativity",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: core_suites::arrow_core,
        },
        SuiteDef {
            id: "functor-lift",
            citation: "Props. 2.1-2.2, Ex. 2.3",
            description: "covariant and contravariant functors lift to arrow categories",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: core_suites::functor_lift,
        },
        SuiteDef {
            id: "nat-trans-lift",
            citation: "Props. 2.4-2.5",
            description: "natural transformations lift componentwise; isomorphisms stay isomorphisms",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: core_suites::nat_trans_lift,
        },
        SuiteDef {
            id: "equivalence",
            citation: "Thm. 2.5",
            description: "equivalences of categories lift to equivalences of arrow categories",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: core_suites::equivalence,
        },
        SuiteDef {
            id: "dagger",
            citation: "Prop. 2.6",
            description: "the arrow category of the unitary subcategory is a dagger category",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: core_suites::dagger,
        },
        SuiteDef {
            id: "monoidal-coherence",
            citation: "Prop. 2.7 + appendix",
            description: "pointwise tensor: pentagon, triangle and interchange",
            default_max_dim: 4,
            runner: monoidal_suites::monoidal_coherence,
        },
        SuiteDef {
            id: "braiding-symmetry",
            citation: "Prop. 2.11, Thm. 2.12",
            description: "lifted braiding: hexagons, naturality and symmetry",
            default_max_dim: 4,
            runner: monoidal_suites::braiding_symmetry,
        },
        SuiteDef {
            id: "monoidal-functor-lift",
            citation: "Props. 2.13-2.15",
            description: "monoidal and braided functors and monoidal natural transformations lift",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: monoidal_suites::monoidal_functor_lift,
        },
        SuiteDef {
            id: "duality",
            citation: "Thm. 2.14, Ex. 2.16",
            description: "duals exist exactly for isomorphisms; snake identities and the cup/cap inverse",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: duality_suites::duality,
        },
        SuiteDef {
            id: "pivot-ribbon",
            citation: "Thm. 2.17, Prop. 2.19",
            description: "pivot and ribbon twist on the arrow category of the core",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: duality_suites::pivot_ribbon,
        },
        SuiteDef {
            id: "monoid",
            citation: "Thms. 2.21-2.22 + appendix",
            description: "monoid and comonoid morphisms are (co)monoids in the arrow category",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: algebra_suites::monoid,
        },
        SuiteDef {
            id: "bialgebra",
            citation: "Thm. 2.23",
            description: "bialgebra morphisms are bialgebra objects in the arrow category",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: algebra_suites::bialgebra,
        },
        SuiteDef {
            id: "frobenius",
            citation: "Prop. 2.24",
            description: "Frobenius morphisms are Frobenius structures; special is preserved",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: algebra_suites::frobenius,
        },
        SuiteDef {
            id: "dagger-frobenius",
            citation: "Props. 2.25-2.26",
            description: "unitary morphisms of dagger Frobenius algebras give dagger Frobenius structures",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: algebra_suites::dagger_frobenius,
        },
        SuiteDef {
            id: "hopf",
            citation: "Thm. 2.27",
            description: "Hopf algebra morphisms are Hopf algebra objects in the arrow category",
            default_max_dim: DEFAULT_MAX_DIM,
            runner: algebra_suites::hopf,
        },
    ]
}

pub fn find_suite(id: &str) -> Result<&'static SuiteDef, UnknownSuite> {
    registry()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| UnknownSuite(id.to_string()))
}

pub fn run_suite(
    id: &str,
    params: &SuiteParams,
    fixtures: &FixtureSet,
) -> Result<SuiteReport, UnknownSuite> {
    Ok(find_suite(id)?.run(params, fixtures))
}

/// Maps a rejection (an `Err`) onto a failing verdict. Negative controls use
/// this: the corrupted input is supposed to be rejected, and the suite
/// treats the resulting `fail` as the expected outcome.
pub(crate) fn expect_rejection<T, E: fmt::Display>(law: &str, result: Result<T, E>) -> Verdict {
    match result {
        Ok(_) => Verdict::Pass,
        Err(e) => Verdict::fail(law, e.to_string()),
    }
}

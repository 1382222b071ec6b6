//! The Tutte polynomial of a semimatroid and its relatives.
//!
//! Several independent engines compute `T_C`; they sit behind the
//! [`TutteEngine`] trait and are looked up by name in an [`EngineRegistry`],
//! which is how the command line selects `--method`.

mod delcon;
mod minor;
mod sum;
mod tg;

use std::fmt;

pub use delcon::tutte_delcon;
pub use sum::{
    characteristic, characteristic_from_tutte, matroid_characteristic, matroid_tutte, tutte_sum,
    u_poly,
};
pub use tg::{tg_closed_form, tg_invariant};

use crate::error::Result;
use crate::poly::BivariatePoly;
use crate::semimatroid::Semimatroid;

/// A way of computing the Tutte polynomial.
pub trait TutteEngine: Send + Sync {
    /// Name used to select the engine.
    fn name(&self) -> &'static str;

    fn tutte(&self, s: &Semimatroid) -> Result<BivariatePoly>;
}

/// State sum over all central sets.
#[derive(Clone, Copy, Debug, Default)]
pub struct SumEngine;

impl TutteEngine for SumEngine {
    fn name(&self) -> &'static str {
        "sum"
    }

    fn tutte(&self, s: &Semimatroid) -> Result<BivariatePoly> {
        Ok(tutte_sum(s))
    }
}

/// Memoised deletion–contraction.
#[derive(Clone, Copy, Debug, Default)]
pub struct DelConEngine;

impl TutteEngine for DelConEngine {
    fn name(&self) -> &'static str {
        "delcon"
    }

    fn tutte(&self, s: &Semimatroid) -> Result<BivariatePoly> {
        Ok(tutte_delcon(s))
    }
}

/// Engines in registration order, looked up by name.
pub struct EngineRegistry {
    engines: Vec<Box<dyn TutteEngine>>,
}

impl EngineRegistry {
    pub fn empty() -> Self {
        EngineRegistry {
            engines: Vec::new(),
        }
    }

    /// Registers an engine, replacing any engine of the same name.
    pub fn register<E: TutteEngine + 'static>(&mut self, engine: E) {
        let boxed: Box<dyn TutteEngine> = Box::new(engine);
        match self.engines.iter().position(|e| e.name() == boxed.name()) {
            Some(i) => self.engines[i] = boxed,
            None => self.engines.push(boxed),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn TutteEngine> {
        self.engines
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn TutteEngine> {
        self.engines.iter().map(|e| e.as_ref())
    }

    /// Run every engine and report whether they agree.
    pub fn run_all(&self, s: &Semimatroid) -> Result<Agreement> {
        let results = self
            .iter()
            .map(|e| Ok((e.name(), e.tutte(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Agreement { results })
    }
}

impl Default for EngineRegistry {
    /// `sum`, `delcon` and `activity`.
    fn default() -> Self {
        let mut r = EngineRegistry::empty();
        r.register(SumEngine);
        r.register(DelConEngine);
        r.register(crate::activity::ActivityEngine);
        r
    }
}

impl fmt::Debug for EngineRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

/// Results of running several engines on one input.
#[derive(Clone, Debug)]
pub struct Agreement {
    pub results: Vec<(&'static str, BivariatePoly)>,
}

impl Agreement {
    pub fn agree(&self) -> bool {
        self.results.windows(2).all(|w| w[0].1 == w[1].1)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.results.iter().map(|(n, _)| *n).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::fixtures::a5;
    use crate::linalg::rational;
    use crate::poly::UnivariatePoly;
    use crate::semimatroid::fixtures::c3;
    use crate::subset::GroundSet;

    fn poly(terms: &[((u32, u32), i64)]) -> BivariatePoly {
        BivariatePoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn a5_tutte_by_every_engine() {
        let s = a5().semimatroid().unwrap();
        let expected = "x^3 + 2*x^2 + x*y + x + y";
        let registry = EngineRegistry::default();
        assert_eq!(registry.names(), vec!["sum", "delcon", "activity"]);
        for engine in registry.iter() {
            assert_eq!(
                engine.tutte(&s).unwrap().to_string(),
                expected,
                "{}",
                engine.name()
            );
        }
        assert!(registry.run_all(&s).unwrap().agree());
    }

    #[test]
    fn c3_polynomials() {
        let s = c3();
        assert_eq!(tutte_sum(&s), poly(&[((2, 0), 1), ((1, 0), 1)]));
        assert_eq!(tutte_delcon(&s), tutte_sum(&s));
        let u = u_poly(&s).unwrap();
        assert_eq!(u, poly(&[((1, 1), 1), ((1, 0), -1)]));
        let ym1 = &BivariatePoly::y() - &BivariatePoly::one();
        assert_eq!(u.exact_div(&ym1).unwrap(), BivariatePoly::x());
        assert_eq!(characteristic(&s), UnivariatePoly::from_coeffs([2, -3, 1]));
    }

    #[test]
    fn trivial_and_small_cases() {
        let trivial = Semimatroid::trivial(GroundSet::new(3));
        assert_eq!(tutte_sum(&trivial), BivariatePoly::one());
        assert_eq!(tutte_delcon(&trivial), BivariatePoly::one());
        assert_eq!(characteristic(&trivial), UnivariatePoly::constant(1));
        assert_eq!(tutte_delcon(&Semimatroid::isthmus()), BivariatePoly::x());
        assert_eq!(
            tutte_delcon(&Semimatroid::loop_element()),
            BivariatePoly::y()
        );
        let free = Semimatroid::free(GroundSet::new(3)).unwrap();
        assert!(u_poly(&free).unwrap().is_zero());
        assert_eq!(tutte_delcon(&c3().dual().unwrap()), BivariatePoly::y());
    }

    #[test]
    fn a5_characteristic() {
        let s = a5().semimatroid().unwrap();
        assert_eq!(characteristic(&s).to_string(), "q^3 - 5*q^2 + 8*q - 4");
        let two = rational(2);
        let one = rational(1);
        assert_eq!(
            tg_invariant(&s, &one, &one, &two, &two).unwrap(),
            rational(24)
        );
    }

    #[test]
    fn registry_replaces_by_name() {
        let mut r = EngineRegistry::empty();
        r.register(SumEngine);
        r.register(SumEngine);
        assert_eq!(r.names(), vec!["sum"]);
        assert!(r.get("delcon").is_none());
        assert!(r.get("sum").is_some());
    }
}

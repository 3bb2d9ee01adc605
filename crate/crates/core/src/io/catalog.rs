//! Built-in worked examples with their known answers.

use crate::spherical::{full_report, PiResult, Report, SphericalDatum};
use crate::ints;

use super::format::{parse, ParseError};

/// Characteristic exponents every entry carries expectations for.
pub const CATALOG_CHARACTERISTICS: [u64; 4] = [1, 2, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub p: u64,
    pub pi0: PiResult,
    pub pi1: PiResult,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub document: &'static str,
    pub expected: Vec<Expectation>,
}

/// Outcome of running one entry in one characteristic.
#[derive(Debug, Clone)]
pub struct CatalogRun {
    pub expected: Expectation,
    pub report: Report,
}

impl CatalogRun {
    pub fn matches(&self) -> bool {
        self.report.pi0 == self.expected.pi0 && self.report.pi1 == self.expected.pi1
    }
}

impl CatalogEntry {
    pub fn datum(&self) -> Result<SphericalDatum, ParseError> {
        parse(self.document)
    }

    pub fn expectation(&self, p: u64) -> Option<&Expectation> {
        self.expected.iter().find(|e| e.p == p)
    }

    /// Computes the report in every catalogued characteristic.
    pub fn run(&self) -> Vec<CatalogRun> {
        let base = self.datum().expect("catalog documents parse");
        self.expected
            .iter()
            .map(|e| {
                let sd = base
                    .with_char_exponent(e.p)
                    .expect("catalog characteristics are valid");
                CatalogRun {
                    expected: e.clone(),
                    report: full_report(&sd).expect("catalog data are structurally valid"),
                }
            })
            .collect()
    }
}

fn group(zhat_rank: usize, factors: &[i64], p: u64) -> PiResult {
    PiResult {
        zhat_rank,
        invariant_factors: ints(factors),
        p,
    }
}

/// `Z/n` away from the primes dividing `n`; `n` is prime in every use here.
fn cyclic_unless(n: i64, p: u64) -> PiResult {
    if p as i64 == n {
        group(0, &[], p)
    } else {
        group(0, &[n], p)
    }
}

fn expectations(f: impl Fn(u64) -> (PiResult, PiResult)) -> Vec<Expectation> {
    CATALOG_CHARACTERISTICS
        .iter()
        .map(|&p| {
            let (pi0, pi1) = f(p);
            Expectation { p, pi0, pi1 }
        })
        .collect()
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "sl2_mod_torus",
            description: "SL(2) modulo its maximal torus",
            document: include_str!("../../catalog/sl2_mod_torus.toml"),
            expected: expectations(|p| (group(0, &[], p), group(0, &[], p))),
        },
        CatalogEntry {
            name: "sl2_mod_normalizer",
            description: "SL(2) modulo the normalizer of its maximal torus; [H:H°] = 2",
            document: include_str!("../../catalog/sl2_mod_normalizer.toml"),
            expected: expectations(|p| (cyclic_unless(2, p), cyclic_unless(2, p))),
        },
        CatalogEntry {
            name: "pgl2_mod_normalizer",
            description: "PGL(2) modulo the normalizer of its maximal torus",
            document: include_str!("../../catalog/pgl2_mod_normalizer.toml"),
            expected: expectations(|p| (cyclic_unless(2, p), cyclic_unless(2, p))),
        },
        CatalogEntry {
            name: "torus_rank_1",
            description: "the torus G_m acting on itself",
            document: include_str!("../../catalog/torus_rank_1.toml"),
            expected: expectations(|p| (group(0, &[], p), group(1, &[], p))),
        },
        CatalogEntry {
            name: "torus_rank_2",
            description: "the torus G_m^2 acting on itself",
            document: include_str!("../../catalog/torus_rank_2.toml"),
            expected: expectations(|p| (group(0, &[], p), group(2, &[], p))),
        },
        CatalogEntry {
            name: "group_case_A1_adjoint",
            description: "PGL(2) as a PGL(2) x PGL(2)-variety; pi1 = Z/2",
            document: include_str!("../../catalog/group_case_A1_adjoint.toml"),
            expected: expectations(|p| (group(0, &[], p), cyclic_unless(2, p))),
        },
        CatalogEntry {
            name: "group_case_A2_adjoint",
            description: "PGL(3) as a PGL(3) x PGL(3)-variety; pi1 = Z/3",
            document: include_str!("../../catalog/group_case_A2_adjoint.toml"),
            expected: expectations(|p| (group(0, &[], p), cyclic_unless(3, p))),
        },
        CatalogEntry {
            name: "group_case_A1_center",
            description: "SL(2) x SL(2) modulo (Z(SL2) x 1)·diag; pi0 = Z(SL2) = Z/2",
            document: include_str!("../../catalog/group_case_A1_center.toml"),
            expected: expectations(|p| (cyclic_unless(2, p), cyclic_unless(2, p))),
        },
        CatalogEntry {
            name: "group_case_A2_center",
            description: "SL(3) x SL(3) modulo (Z(SL3) x 1)·diag; pi0 = Z(SL3) = Z/3",
            document: include_str!("../../catalog/group_case_A2_center.toml"),
            expected: expectations(|p| (cyclic_unless(3, p), cyclic_unless(3, p))),
        },
    ]
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::format::serialize_datum;

    #[test]
    fn every_entry_matches_its_expectations() {
        for entry in catalog() {
            for run in entry.run() {
                assert!(
                    run.matches(),
                    "{} at p = {}: got pi0 = {}, pi1 = {}",
                    entry.name,
                    run.expected.p,
                    run.report.pi0,
                    run.report.pi1
                );
                assert!(run.report.invariants_hold(), "{}", entry.name);
            }
        }
    }

    #[test]
    fn documents_round_trip() {
        for entry in catalog() {
            let sd = entry.datum().unwrap();
            assert_eq!(parse(&serialize_datum(&sd)).unwrap(), sd, "{}", entry.name);
        }
    }

    #[test]
    fn names_unique_and_findable() {
        let names: std::collections::BTreeSet<_> = catalog().iter().map(|e| e.name).collect();
        assert_eq!(names.len(), catalog().len());
        assert!(find("sl2_mod_normalizer").is_some());
        assert!(find("nope").is_none());
    }

    #[test]
    fn normalizer_p1_is_z2() {
        let entry = find("sl2_mod_normalizer").unwrap();
        let run = &entry.run()[0];
        assert_eq!(run.report.pi0.to_string(), "Z/2");
    }

    #[test]
    fn torus_p5_is_profinite() {
        let entry = find("torus_rank_1").unwrap();
        let run = entry.run().into_iter().find(|r| r.expected.p == 5).unwrap();
        assert_eq!(run.report.pi1.zhat_rank, 1);
    }

    #[test]
    fn a2_group_case_p1_is_z3() {
        let entry = find("group_case_A2_adjoint").unwrap();
        assert_eq!(entry.run()[0].report.pi1.to_string(), "Z/3");
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::{pairs, CubicScheme, ResidueCounts};
use crate::dyadic::Dyadic;
use crate::graph::Graph;
use crate::selection::{expectation_report, uncovered_probability, Group};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CertificateCheck {
    pub name: &'static str,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Every inequality the construction promises, evaluated exactly on one
/// instance.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CubicCertificate {
    pub n: usize,
    pub matching_size: usize,
    pub expected_b: Dyadic,
    pub counts: ResidueCounts,
    pub t: usize,
    pub checks: Vec<CertificateCheck>,
}

impl CubicCertificate {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.name)
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&CertificateCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("certificate failed on {failed:?}")]
pub struct CertificateViolation {
    pub failed: Vec<&'static str>,
    pub certificate: Box<CubicCertificate>,
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn le(name: &'static str, lhs: &BigRational, rhs: &BigRational) -> CertificateCheck {
    CertificateCheck {
        name,
        holds: lhs <= rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn flag(name: &'static str, holds: bool, detail: String) -> CertificateCheck {
    CertificateCheck {
        name,
        holds,
        lhs: detail,
        rhs: String::new(),
    }
}

/// Checks, with exact rationals:
///
/// * `residue`: `E|B| ≤ (r − p − t)/8`
/// * `unmatched`: `E|B| ≤ 33/272·(n − 2|M|) − 5/68·r0 − 3/136·p`
/// * `ratio`: `E|B| ≤ 11/68·|M|`
/// * `total`: `|M| + E|B| ≤ 79/68·|M|`
///
/// plus the residue counting bounds, `34t ≥ r_first`, the per-triple trace
/// limits, the coupled-pair probabilities, maximality of the pair collection
/// and that no `S(τ)` edge ends up fixed. Bounds `ratio` and `total` are relative to
/// the given matching; they speak about `γ_e` when it is minimum.
pub fn cubic_certificate(
    g: &Graph,
    built: &CubicScheme,
) -> Result<CubicCertificate, CertificateViolation> {
    let m = &built.matching;
    let scheme = &built.scheme;
    let report = expectation_report(g, scheme).expect("scheme was built on this graph");
    let e = report.total.to_ratio();
    let counts = built.classification.counts();
    let t = built.t();
    let (n, size) = (g.n(), m.len());
    let eighth = q(1, 8);
    let unmatched = int(n - 2 * size);
    let mut checks = Vec::new();

    let a = (int(counts.r) - int(counts.p) - int(t)) * &eighth;
    checks.push(le("residue", &e, &a));
    let b = q(33, 272) * &unmatched - q(5, 68) * int(counts.r0) - q(3, 136) * int(counts.p);
    checks.push(le("unmatched", &e, &b));
    checks.push(le("ratio", &e, &(q(11, 68) * int(size))));
    checks.push(le("total", &(int(size) + &e), &(q(79, 68) * int(size))));
    checks.push(le(
        "r_first",
        &int(counts.r),
        &int(counts.r_first + 13 * counts.r0 + 28 * counts.p),
    ));
    checks.push(le(
        "paired_degree",
        &int(2 * counts.r2 + counts.r1),
        &int(8 * counts.p),
    ));
    checks.push(le(
        "r3",
        &int(counts.r3),
        &int(12 * counts.r0 + 6 * counts.r2),
    ));
    checks.push(le("t", &int(counts.r_first), &int(34 * t)));

    let bad_traces: Vec<usize> = built
        .run
        .traces
        .iter()
        .enumerate()
        .filter(|(_, tr)| !tr.within_bounds())
        .map(|(i, _)| i)
        .collect();
    checks.push(flag(
        "traces",
        bad_traces.is_empty(),
        format!("{bad_traces:?}"),
    ));

    let mut pair_faults = Vec::new();
    for p in &built.pairs {
        let group = scheme.group_of_edge(p.edges[0]);
        for x in &p.x {
            if !uncovered_probability(g, scheme, x)
                .expect("X is unmatched")
                .is_zero()
            {
                pair_faults.push(x);
            }
        }
        for y in &p.y {
            let third = g
                .neighbors(y)
                .iter()
                .find(|&w| !p.vertices().contains(&w))
                .and_then(|w| m.edge_index_of(w))
                .map(|e| scheme.group_of_edge(e))
                .expect("residue vertices have a third matched neighbor");
            let fair = third != group && scheme.groups()[third].is_random();
            if fair
                && uncovered_probability(g, scheme, y).expect("Y is unmatched")
                    != Dyadic::half_pow(2)
            {
                pair_faults.push(y);
            }
        }
    }
    checks.push(flag(
        "pair_probabilities",
        pair_faults.is_empty(),
        format!("{pair_faults:?}"),
    ));
    checks.push(flag(
        "pairs_maximal",
        pairs::is_maximal_collection(g, m, &built.pairs),
        String::new(),
    ));

    let fixed_in_s_tau: Vec<usize> = built
        .run
        .traces
        .iter()
        .flat_map(|tr| tr.s_tau.iter())
        .filter(|&v| {
            let e = m.edge_index_of(v).expect("S(τ) is matched");
            matches!(
                scheme.groups()[scheme.group_of_edge(e)],
                Group::FixedTriple { .. }
            )
        })
        .collect();
    checks.push(flag(
        "s_tau_unfixed",
        fixed_in_s_tau.is_empty(),
        format!("{fixed_in_s_tau:?}"),
    ));

    let certificate = CubicCertificate {
        n,
        matching_size: size,
        expected_b: report.total,
        counts,
        t,
        checks,
    };
    if certificate.holds() {
        Ok(certificate)
    } else {
        Err(CertificateViolation {
            failed: certificate.failed(),
            certificate: Box::new(certificate),
        })
    }
}

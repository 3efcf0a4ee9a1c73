use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::formulas::{approx_9j_63, AsymError};
use super::node::{classify_triad, NodeClass};
use crate::exactnum::Spin;
use crate::recoupling::{NineJLabels, ThreeNJKind, ThreeNJLabels};
use crate::wigner::wigner_small_d;
use crate::yutsis::{cartwheel_type1, insert_bowtie, label_binding, BowtieLabels, YutsisError, YutsisGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("disentangling needs a type I symbol")]
    NotTypeI,
    #[error("n = {0} is below 3")]
    TooSmall(usize),
    #[error("the large set must be exactly the j and k labels")]
    WrongLargeSet,
    #[error("node with triad ({0}, {1}, {2}) is inadmissible")]
    Inadmissible(String, String, String),
    #[error("plan for n = {0} has no validated numeric form")]
    NotValidated(usize),
    #[error("expected {expected} cosines, got {got}")]
    CosineCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] YutsisError),
    #[error(transparent)]
    Asym(#[from] AsymError),
}

/// One factor `d^principal_{proj1.0 - proj1.1, proj2.0 - proj2.1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DFactor {
    pub principal: String,
    pub proj1: [String; 2],
    pub proj2: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeAudit {
    pub triad: [String; 3],
    pub class: NodeClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisentanglePlan {
    pub n: usize,
    pub factors: Vec<DFactor>,
    pub audit: Vec<NodeAudit>,
}

fn closing_factor(n: usize) -> DFactor {
    DFactor { principal: format!("l{n}"), proj1: [format!("j{n}"), "k1".into()], proj2: [format!("k{n}"), "j1".into()] }
}

fn audit(g: &YutsisGraph, large: &BTreeSet<String>) -> Result<Vec<NodeAudit>, PlanError> {
    g.triads()
        .into_iter()
        .map(|t| {
            let class = classify_triad(&t, large);
            if class == NodeClass::Inadmissible {
                let [a, b, c] = t;
                return Err(PlanError::Inadmissible(a, b, c));
            }
            Ok(NodeAudit { triad: t, class })
        })
        .collect()
}

/// Product form of a type-I symbol whose perimeter spins are all large.
///
/// Starts from the two-factor form at `n = 3` and grows it with the twisted
/// insertion on the closing ray. After each insertion the two new perimeter
/// labels are marked large only because the audit of their nodes demands it.
pub fn disentangle_plan(labels: &ThreeNJLabels, large: &BTreeSet<String>) -> Result<DisentanglePlan, PlanError> {
    if labels.kind != ThreeNJKind::TypeI {
        return Err(PlanError::NotTypeI);
    }
    let n = labels.n();
    if n < 3 {
        return Err(PlanError::TooSmall(n));
    }
    let perimeter: BTreeSet<String> = (1..=n).flat_map(|i| [format!("j{i}"), format!("k{i}")]).collect();
    let names: BTreeSet<String> = label_binding(labels).into_keys().collect();
    if *large != perimeter || !large.is_subset(&names) {
        return Err(PlanError::WrongLargeSet);
    }

    let mut g = cartwheel_type1(3)?;
    let mut marked: BTreeSet<String> = (1..=3).flat_map(|i| [format!("j{i}"), format!("k{i}")]).collect();
    audit(&g, &marked)?;
    let mut factors = vec![
        DFactor { principal: "l2".into(), proj1: ["j2".into(), "j3".into()], proj2: ["k2".into(), "k3".into()] },
        closing_factor(3),
    ];
    for m in 3..n {
        let e = |s: String| g.edge_by_label(&s).ok_or(YutsisError::NoSuchEdge(usize::MAX));
        let bow = BowtieLabels {
            flank1_near: format!("j{}", m + 1),
            flank2_near: format!("k{}", m + 1),
            ray: format!("l{}", m + 1),
            crossing: format!("l{m}"),
        };
        g = insert_bowtie(&g, e(format!("l{m}"))?, e(format!("j{m}"))?, e(format!("k{m}"))?, &bow)?;
        for new in [bow.flank1_near, bow.flank2_near] {
            let forced =
                g.triads().iter().any(|t| t.contains(&new) && classify_triad(t, &marked) == NodeClass::Inadmissible);
            if forced {
                marked.insert(new);
            }
        }
        audit(&g, &marked)?;
        let last = factors.len() - 1;
        factors[last] = DFactor {
            principal: format!("l{m}"),
            proj1: [format!("j{m}"), format!("j{}", m + 1)],
            proj2: [format!("k{m}"), format!("k{}", m + 1)],
        };
        factors.push(closing_factor(m + 1));
    }
    if marked != *large {
        return Err(PlanError::WrongLargeSet);
    }
    let audit = audit(&g, &marked)?;
    Ok(DisentanglePlan { n, factors, audit })
}

impl DisentanglePlan {
    /// The asymptotic value; available only for `n = 3`, where the plan is
    /// the (6,3) formula applied to `{l3 k1 j3; j1 l1 j2; k3 k2 l2}`.
    pub fn evaluate(&self, labels: &ThreeNJLabels) -> Result<f64, PlanError> {
        if self.n != 3 {
            return Err(PlanError::NotValidated(self.n));
        }
        let t = labels.twice();
        let (j, k, l) = (&t[0..3], &t[3..6], &t[6..9]);
        let nine = NineJLabels::from_twice([l[2], k[0], j[2], j[0], l[0], j[1], k[2], k[1], l[1]]);
        Ok(approx_9j_63(&nine)?)
    }

    /// Experimental: the bare product of the plan's d-functions at
    /// caller-chosen cosines, one per factor, without any normalisation.
    pub fn experimental_product(&self, labels: &ThreeNJLabels, cosines: &[BigRational]) -> Result<f64, PlanError> {
        if cosines.len() != self.factors.len() {
            return Err(PlanError::CosineCount { expected: self.factors.len(), got: cosines.len() });
        }
        let bind = label_binding(labels);
        let tw = |s: &String| bind[s].twice() as i64;
        let mut out = 1.0;
        for (f, c) in self.factors.iter().zip(cosines) {
            let j = tw(&f.principal);
            let m = tw(&f.proj1[0]) - tw(&f.proj1[1]);
            let mp = tw(&f.proj2[0]) - tw(&f.proj2[1]);
            if m.abs() > j || mp.abs() > j {
                return Ok(0.0);
            }
            let d = wigner_small_d(Spin::from_twice(j as u32), m as i32, mp as i32, c)
                .map_err(|_| AsymError::Domain(c.clone()))?;
            out *= d.to_f64();
        }
        Ok(out)
    }
}

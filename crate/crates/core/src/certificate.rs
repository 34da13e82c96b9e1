//! Self-contained JSON certificates.
//!
//! Elements are stored as raw coordinate arrays so a certificate can be read
//! back without any other context and checked again from scratch with
//! [`Certificate::verify`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, RootedTree};
use crate::group::{Element, ElementSet, Group};
use crate::labeling::{digraph_weights, verify_antimagic, verify_distance_magic, verify_irregular};
use crate::orthomorphism::{is_orthomorphism, GroupPermutation, OrthomorphismCertificate};
use crate::partition::{
    necessary_conditions, realize_partition, verify_partition, Coverage, FeasibilityVerdict, RealizationInstance,
    Status, SubsetPartition,
};
use crate::search::Budget;
use crate::skolem::{good_six, verify_skolem_partition, GoodSixSubset, SkolemPartition};

pub type Coords = Vec<u32>;

fn coords(e: &Element) -> Coords {
    e.coords().to_vec()
}

fn all_coords<'a>(items: impl IntoIterator<Item = &'a Element>) -> Vec<Coords> {
    items.into_iter().map(coords).collect()
}

fn element(group: &Group, c: &[u32]) -> Result<Element> {
    group.element(c)
}

fn elements(group: &Group, cs: &[Coords]) -> Result<Vec<Element>> {
    cs.iter().map(|c| element(group, c)).collect()
}

/// A realization instance with its verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub group: Vec<u32>,
    pub domain: Vec<Coords>,
    pub sizes: Vec<usize>,
    pub targets: Vec<Coords>,
    pub coverage: Coverage,
    pub parts: Vec<Vec<Coords>>,
    pub status: Status,
    pub reason: String,
    pub seed: u64,
}

impl PartitionCertificate {
    pub fn new(inst: &RealizationInstance, verdict: &FeasibilityVerdict, seed: u64) -> Self {
        PartitionCertificate {
            group: inst.group().moduli().to_vec(),
            domain: all_coords(inst.domain()),
            sizes: inst.sizes().to_vec(),
            targets: all_coords(inst.targets()),
            coverage: inst.coverage(),
            parts: verdict
                .witness
                .as_ref()
                .map(|w| w.parts.iter().map(all_coords).collect())
                .unwrap_or_default(),
            status: verdict.status,
            reason: verdict.reason.clone(),
            seed,
        }
    }

    pub fn instance(&self) -> Result<RealizationInstance> {
        let g = Group::new(&self.group)?;
        let domain: ElementSet = elements(&g, &self.domain)?.into_iter().collect();
        let targets = elements(&g, &self.targets)?;
        match self.coverage {
            Coverage::Exact => RealizationInstance::new(&g, domain, self.sizes.clone(), targets),
            Coverage::Disjoint => RealizationInstance::disjoint(&g, domain, self.sizes.clone(), targets),
        }
    }

    /// Feasible claims are checked against their witness; infeasibility
    /// claims are re-derived (necessary condition or a fresh search).
    pub fn verify(&self, budget: Budget) -> Result<bool> {
        let inst = self.instance()?;
        let g = inst.group().clone();
        Ok(match self.status {
            Status::Feasible => {
                let parts = self.parts.iter().map(|p| elements(&g, p)).collect::<Result<Vec<_>>>()?;
                verify_partition(&inst, &SubsetPartition::new(parts))
            }
            Status::InfeasibleNecessary => necessary_conditions(&inst).status == Status::InfeasibleNecessary,
            Status::Infeasible => realize_partition(&inst, budget).status == Status::Infeasible,
            Status::Unknown => self.parts.is_empty(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixPart {
    pub c: Coords,
    pub d: Coords,
    pub members: Vec<Coords>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkolemCertificate {
    pub group: Vec<u32>,
    pub domain: Vec<Coords>,
    pub status: Status,
    pub six_parts: Vec<SixPart>,
    pub two_parts: Vec<Vec<Coords>>,
}

impl SkolemCertificate {
    pub fn new(group: &Group, domain: &ElementSet, status: Status, p: Option<&SkolemPartition>) -> Self {
        SkolemCertificate {
            group: group.moduli().to_vec(),
            domain: all_coords(domain),
            status,
            six_parts: p
                .map(|p| {
                    p.six_parts
                        .iter()
                        .map(|s| SixPart {
                            c: coords(&s.c),
                            d: coords(&s.d),
                            members: all_coords(&s.members),
                        })
                        .collect()
                })
                .unwrap_or_default(),
            two_parts: p
                .map(|p| p.two_parts.iter().map(all_coords).collect())
                .unwrap_or_default(),
        }
    }

    pub fn verify(&self) -> Result<bool> {
        let g = Group::new(&self.group)?;
        let domain: ElementSet = elements(&g, &self.domain)?.into_iter().collect();
        if self.status != Status::Feasible {
            return Ok(self.six_parts.is_empty() && self.two_parts.is_empty());
        }
        let mut six_parts = Vec::new();
        for s in &self.six_parts {
            let (c, d) = (element(&g, &s.c)?, element(&g, &s.d)?);
            let members = elements(&g, &s.members)?;
            match good_six(&g, &c, &d) {
                Ok(fresh) if fresh.members == members => six_parts.push(GoodSixSubset { c, d, members }),
                _ => return Ok(false),
            }
        }
        let two_parts = self
            .two_parts
            .iter()
            .map(|t| elements(&g, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(verify_skolem_partition(
            &g,
            &domain,
            &SkolemPartition { six_parts, two_parts },
        ))
    }
}

/// Permutation tables in canonical element order, plus cycle types.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthomorphismTables {
    pub group: Vec<u32>,
    pub phi: Vec<Coords>,
    pub theta: Vec<Coords>,
    pub phi_cycles: Vec<usize>,
    pub theta_cycles: Vec<usize>,
}

impl OrthomorphismTables {
    pub fn new(cert: &OrthomorphismCertificate) -> Self {
        OrthomorphismTables {
            group: cert.phi.group().moduli().to_vec(),
            phi: all_coords(cert.phi.images()),
            theta: all_coords(cert.theta.images()),
            phi_cycles: cert.phi_cycles.lengths().to_vec(),
            theta_cycles: cert.theta_cycles.lengths().to_vec(),
        }
    }

    /// Recomputes `θ` and both cycle types from `φ`.
    pub fn verify(&self) -> Result<bool> {
        let g = Group::new(&self.group)?;
        let phi = GroupPermutation::new(&g, elements(&g, &self.phi)?)?;
        Ok(match is_orthomorphism(&phi) {
            Some(c) => OrthomorphismTables::new(&c) == *self,
            None => false,
        })
    }
}

/// What a labeling certificate labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LabelingTarget {
    /// Injective edge labels from `Γ*` with distinct weights.
    Antimagic { graph: Graph, root: Option<usize> },
    /// Edge labels from `Γ` with distinct weights.
    Irregular { graph: Graph },
    /// Arc labels with distinct out-minus-in weights.
    DigraphIrregular { digraph: Digraph },
    /// Bijective vertex labels of `K_{sizes}` with a constant neighborhood sum.
    DistanceMagic { sizes: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingCertificate {
    pub group: Vec<u32>,
    pub target: LabelingTarget,
    /// Labels by edge, arc, or vertex index.
    pub labels: Vec<Coords>,
    /// Vertex weights (or the magic constant alone for distance magic).
    pub weights: Vec<Coords>,
    pub seed: u64,
}

impl LabelingCertificate {
    pub fn new(group: &Group, target: LabelingTarget, labels: &[Element], seed: u64) -> Result<Self> {
        let weights = weights_of(group, &target, labels)?;
        Ok(LabelingCertificate {
            group: group.moduli().to_vec(),
            target,
            labels: all_coords(labels),
            weights: all_coords(&weights),
            seed,
        })
    }

    pub fn verify(&self) -> Result<bool> {
        let g = Group::new(&self.group)?;
        let labels = elements(&g, &self.labels)?;
        let ok = match &self.target {
            LabelingTarget::Antimagic { graph, root } => {
                if let Some(r) = root {
                    RootedTree::new(graph.clone(), *r)?;
                }
                verify_antimagic(&g, graph, &labels, &g.nonzero())
            }
            LabelingTarget::Irregular { graph } => verify_irregular(&g, graph, &labels),
            LabelingTarget::DigraphIrregular { digraph } => {
                let w = digraph_weights(&g, digraph, &labels)?;
                let distinct: ElementSet = w.iter().cloned().collect();
                distinct.len() == w.len()
            }
            LabelingTarget::DistanceMagic { sizes } => verify_distance_magic(&g, sizes, &labels).is_some(),
        };
        Ok(ok && all_coords(&weights_of(&g, &self.target, &labels)?) == self.weights)
    }
}

fn weights_of(group: &Group, target: &LabelingTarget, labels: &[Element]) -> Result<Vec<Element>> {
    use crate::labeling::vertex_weights;
    match target {
        LabelingTarget::Antimagic { graph, .. } | LabelingTarget::Irregular { graph } => {
            vertex_weights(group, graph, labels)
        }
        LabelingTarget::DigraphIrregular { digraph } => digraph_weights(group, digraph, labels),
        LabelingTarget::DistanceMagic { sizes } => {
            Ok(verify_distance_magic(group, sizes, labels).into_iter().collect())
        }
    }
}

/// Any certificate, tagged by `type`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum Certificate {
    Partition(PartitionCertificate),
    Skolem(SkolemCertificate),
    Orthomorphism(OrthomorphismTables),
    Labeling(LabelingCertificate),
}

impl Certificate {
    pub fn verify(&self, budget: Budget) -> Result<bool> {
        match self {
            Certificate::Partition(c) => c.verify(budget),
            Certificate::Skolem(c) => c.verify(),
            Certificate::Orthomorphism(c) => c.verify(),
            Certificate::Labeling(c) => c.verify(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInstance(format!("unreadable certificate: {e}")))
    }
}

//! Resolved global tables: entity definitions (with their movement regions)
//! and channel declarations, plus the `sha` shape function and per-entity
//! channel support used for free-name computations.

use std::collections::{BTreeMap, BTreeSet};

use crate::ast::{ChannelDecl, EntityDefinition, FreeVariables, ModelFile, Name, ProcessTerm};
use crate::error::RuntimeError;
use crate::geometry::{compose_shapes, Region, Shape};

/// The global definition table `D` with its region table.
#[derive(Clone, Debug)]
pub struct DefinitionTable {
    defs: BTreeMap<Name, EntityDefinition>,
    regions: BTreeMap<Name, Region>,
    /// Channel constants reachable from each entity's body, transitively
    /// through the entities it instantiates.
    support: BTreeMap<Name, BTreeSet<Name>>,
}

impl DefinitionTable {
    pub fn from_model(model: &ModelFile) -> Self {
        let defs: BTreeMap<Name, EntityDefinition> = model
            .definitions
            .iter()
            .map(|d| (d.name.clone(), d.clone()))
            .collect();
        let mut regions: BTreeMap<Name, Region> = model
            .regions
            .iter()
            .map(|(n, r)| (n.clone(), r.clone()))
            .collect();
        regions.entry(Name::new("all")).or_insert(Region::All);
        let support = compute_support(&defs);
        DefinitionTable {
            defs,
            regions,
            support,
        }
    }

    pub fn get(&self, name: &Name) -> Option<&EntityDefinition> {
        self.defs.get(name)
    }

    pub fn lookup(&self, name: &Name) -> Result<&EntityDefinition, RuntimeError> {
        self.defs
            .get(name)
            .ok_or_else(|| RuntimeError::UndefinedEntity(name.to_string()))
    }

    pub fn region(&self, name: &Name) -> Result<&Region, RuntimeError> {
        self.regions
            .get(name)
            .ok_or_else(|| RuntimeError::UndefinedRegion(name.to_string()))
    }

    pub fn entity_names(&self) -> impl Iterator<Item = &Name> {
        self.defs.keys()
    }

    /// Channel constants an instance of `entity` may ever use, through any
    /// chain of definitions.
    pub fn channel_support(&self, entity: &Name) -> BTreeSet<Name> {
        self.support.get(entity).cloned().unwrap_or_default()
    }

    /// Names that restriction freshening must never collide with: every
    /// definition, parameter and channel constant mentioned by the table.
    pub fn protected_names(&self) -> BTreeSet<Name> {
        let mut names: BTreeSet<Name> = BTreeSet::new();
        for (name, def) in &self.defs {
            names.insert(name.clone());
            names.extend(def.params.iter().cloned());
            names.extend(def.body.free_variables());
        }
        for set in self.support.values() {
            names.extend(set.iter().cloned());
        }
        names
    }
}

fn compute_support(defs: &BTreeMap<Name, EntityDefinition>) -> BTreeMap<Name, BTreeSet<Name>> {
    // Direct constants: free names of the body minus the parameters.
    let mut support: BTreeMap<Name, BTreeSet<Name>> = defs
        .iter()
        .map(|(name, def)| {
            let mut fv = def.body.free_variables();
            for p in &def.params {
                fv.remove(p);
            }
            (name.clone(), fv)
        })
        .collect();
    // Call edges: entities instantiated anywhere in a body.
    let calls: BTreeMap<Name, BTreeSet<Name>> = defs
        .iter()
        .map(|(name, def)| {
            let mut callees = BTreeSet::new();
            for branch in &def.body.branches {
                collect_instances(&branch.continuation, &mut callees);
            }
            (name.clone(), callees)
        })
        .collect();
    // Fixpoint over the call graph.
    loop {
        let mut changed = false;
        for (name, callees) in &calls {
            let mut acc = support[name].clone();
            for callee in callees {
                if let Some(extra) = support.get(callee) {
                    for n in extra.clone() {
                        acc.insert(n);
                    }
                }
            }
            if acc.len() != support[name].len() {
                support.insert(name.clone(), acc);
                changed = true;
            }
        }
        if !changed {
            return support;
        }
    }
}

fn collect_instances(term: &ProcessTerm, out: &mut BTreeSet<Name>) {
    match term {
        ProcessTerm::Nil => {}
        ProcessTerm::Instance { entity, .. } => {
            out.insert(entity.clone());
        }
        ProcessTerm::Par(l, r) => {
            collect_instances(l, out);
            collect_instances(r, out);
        }
        ProcessTerm::Restrict { body, .. } => collect_instances(body, out),
    }
}

/// The global channel environment `E`.
#[derive(Clone, Debug, Default)]
pub struct ChannelTable {
    channels: BTreeMap<Name, ChannelDecl>,
}

impl ChannelTable {
    pub fn from_model(model: &ModelFile) -> Self {
        ChannelTable {
            channels: model
                .channels
                .iter()
                .map(|c| (c.name.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn get(&self, name: &Name) -> Option<&ChannelDecl> {
        self.channels.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &Name> {
        self.channels.keys()
    }
}

/// Looks a channel up first among a configuration's restrictions (inner
/// declarations shadow outer ones), then in the global table.
pub fn resolve_channel<'a>(
    name: &Name,
    restrictions: &'a [ChannelDecl],
    globals: &'a ChannelTable,
) -> Result<&'a ChannelDecl, RuntimeError> {
    restrictions
        .iter()
        .rev()
        .find(|c| &c.name == name)
        .or_else(|| globals.get(name))
        .ok_or_else(|| RuntimeError::UndeclaredChannel(name.to_string()))
}

/// The shape of a process: `Empty` for the empty process, the defining
/// shape for an instance, transparent through restriction, and the
/// juxtaposition of both sides for a parallel composition.
pub fn sha(term: &ProcessTerm, defs: &DefinitionTable) -> Result<Shape, RuntimeError> {
    match term {
        ProcessTerm::Nil => Ok(Shape::Empty),
        ProcessTerm::Instance { entity, .. } => Ok(defs.lookup(entity)?.shape.clone()),
        ProcessTerm::Restrict { body, .. } => sha(body, defs),
        ProcessTerm::Par(l, r) => Ok(compose_shapes(&sha(l, defs)?, &sha(r, defs)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{Branch, ChoiceBody, Prefix, Rate};

    fn n(s: &str) -> Name {
        Name::new(s)
    }

    fn bac_model() -> ModelFile {
        // entity Bac() = mov.Bac() + delay@1.0.(Bac()|Bac())
        let body = ChoiceBody {
            branches: vec![
                Branch {
                    prefix: Prefix::Move,
                    continuation: ProcessTerm::instance("Bac", vec![]),
                },
                Branch {
                    prefix: Prefix::Delay(Rate::Stochastic(1.0)),
                    continuation: ProcessTerm::par(
                        ProcessTerm::instance("Bac", vec![]),
                        ProcessTerm::instance("Bac", vec![]),
                    ),
                },
            ],
        };
        ModelFile {
            definitions: vec![EntityDefinition {
                name: n("Bac"),
                params: vec![],
                body,
                space: n("all"),
                step: 0.5,
                shape: Shape::sphere(1.0),
            }],
            ..Default::default()
        }
    }

    #[test]
    fn sha_of_nil_is_empty() {
        let defs = DefinitionTable::from_model(&bac_model());
        assert_eq!(sha(&ProcessTerm::Nil, &defs).unwrap(), Shape::Empty);
    }

    #[test]
    fn sha_of_instance_is_its_shape() {
        let defs = DefinitionTable::from_model(&bac_model());
        let term = ProcessTerm::instance("Bac", vec![]);
        assert_eq!(sha(&term, &defs).unwrap(), Shape::sphere(1.0));
    }

    #[test]
    fn sha_of_par_composes() {
        let defs = DefinitionTable::from_model(&bac_model());
        let term = ProcessTerm::par(
            ProcessTerm::instance("Bac", vec![]),
            ProcessTerm::instance("Bac", vec![]),
        );
        assert_eq!(
            sha(&term, &defs).unwrap(),
            Shape::Composite(vec![Shape::sphere(1.0), Shape::sphere(1.0)])
        );
    }

    #[test]
    fn sha_undefined_entity_is_error() {
        let defs = DefinitionTable::from_model(&bac_model());
        let term = ProcessTerm::instance("Nope", vec![]);
        assert!(sha(&term, &defs).is_err());
    }

    #[test]
    fn channel_support_is_transitive() {
        // X calls Y; Y's body outputs on constant c.
        let y_body = ChoiceBody {
            branches: vec![Branch {
                prefix: Prefix::Output {
                    channel: n("c"),
                    message: n("c"),
                },
                continuation: ProcessTerm::Nil,
            }],
        };
        let x_body = ChoiceBody {
            branches: vec![Branch {
                prefix: Prefix::Delay(Rate::Stochastic(1.0)),
                continuation: ProcessTerm::instance("Y", vec![]),
            }],
        };
        let model = ModelFile {
            definitions: vec![
                EntityDefinition {
                    name: n("X"),
                    params: vec![],
                    body: x_body,
                    space: n("all"),
                    step: 0.0,
                    shape: Shape::sphere(0.0),
                },
                EntityDefinition {
                    name: n("Y"),
                    params: vec![],
                    body: y_body,
                    space: n("all"),
                    step: 0.0,
                    shape: Shape::sphere(0.0),
                },
            ],
            ..Default::default()
        };
        let defs = DefinitionTable::from_model(&model);
        assert!(defs.channel_support(&n("X")).contains(&n("c")));
    }
}

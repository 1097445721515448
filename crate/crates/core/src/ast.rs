//! Abstract syntax of the calculus: names, prefixes, choices, process terms,
//! entity definitions, channel declarations and whole model files.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::RuntimeError;
use crate::geometry::{Region, Shape};

/// An identifier. Channel names and variables share one namespace and are
/// distinguished only by how they are bound.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(Arc<str>);

impl Name {
    pub fn new(text: impl AsRef<str>) -> Self {
        Name(Arc::from(text.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// `[A-Za-z][A-Za-z0-9_]*`
    pub fn is_valid_identifier(text: &str) -> bool {
        let mut chars = text.chars();
        match chars.next() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Name({})", self.0)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Self {
        Name::new(s)
    }
}

/// Kinetic law of a reaction channel or delay.
///
/// `Stochastic(r)` draws durations from the exponential law with rate `r`.
/// `Fixed(d)` always takes exactly `d` time units; its effective rate is
/// `1/d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Rate {
    Stochastic(f64),
    Fixed(f64),
}

impl Rate {
    /// The stochastic rate parameter (1/duration for fixed-duration laws).
    pub fn value(&self) -> f64 {
        match *self {
            Rate::Stochastic(r) => r,
            Rate::Fixed(d) => 1.0 / d,
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!(self, Rate::Fixed(_))
    }

    /// A rate-0 reaction waits forever: it is never scheduled.
    pub fn never_fires(&self) -> bool {
        match *self {
            Rate::Stochastic(r) => r <= 0.0,
            Rate::Fixed(_) => false,
        }
    }
}

/// The action guarding a continuation.
#[derive(Clone, Debug, PartialEq)]
pub enum Prefix {
    Delay(Rate),
    Output { channel: Name, message: Name },
    Input { channel: Name, binder: Name },
    Move,
}

/// One alternative of a choice: a prefix and its continuation.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub prefix: Prefix,
    pub continuation: ProcessTerm,
}

/// A choice of prefixed continuations; exactly one branch fires per
/// reduction. Branch order is purely syntactic.
#[derive(Clone, Debug, PartialEq)]
pub struct ChoiceBody {
    pub branches: Vec<Branch>,
}

/// Process terms.
#[derive(Clone, Debug, PartialEq)]
pub enum ProcessTerm {
    Nil,
    Instance {
        entity: Name,
        args: Vec<Name>,
    },
    Par(Box<ProcessTerm>, Box<ProcessTerm>),
    Restrict {
        channel: Name,
        rate: Rate,
        radius: f64,
        body: Box<ProcessTerm>,
    },
}

impl ProcessTerm {
    pub fn instance(entity: impl Into<Name>, args: Vec<Name>) -> Self {
        ProcessTerm::Instance {
            entity: entity.into(),
            args,
        }
    }

    pub fn par(left: ProcessTerm, right: ProcessTerm) -> Self {
        ProcessTerm::Par(Box::new(left), Box::new(right))
    }
}

/// `X(params) = body` with movement space, step and shape.
#[derive(Clone, Debug, PartialEq)]
pub struct EntityDefinition {
    pub name: Name,
    pub params: Vec<Name>,
    pub body: ChoiceBody,
    /// Region name the entity's shape must stay inside.
    pub space: Name,
    /// Displacement length of one movement.
    pub step: f64,
    pub shape: Shape,
}

/// `a@r,rad` — a channel with stochastic rate and communication radius.
#[derive(Clone, Debug, PartialEq)]
pub struct ChannelDecl {
    pub name: Name,
    pub rate: Rate,
    pub radius: f64,
}

/// One `init` request: `count` copies of an instance placed uniformly at
/// random inside a named region.
#[derive(Clone, Debug, PartialEq)]
pub struct InitBlock {
    pub count: u64,
    pub entity: Name,
    pub args: Vec<Name>,
    pub region: Name,
}

/// A parsed model: channel environment, region table, definition table and
/// initial population.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ModelFile {
    pub channels: Vec<ChannelDecl>,
    pub regions: Vec<(Name, Region)>,
    pub definitions: Vec<EntityDefinition>,
    pub initial: Vec<InitBlock>,
}

impl ModelFile {
    pub fn definition(&self, name: &Name) -> Option<&EntityDefinition> {
        self.definitions.iter().find(|d| &d.name == name)
    }

    pub fn channel(&self, name: &Name) -> Option<&ChannelDecl> {
        self.channels.iter().find(|c| &c.name == name)
    }

    /// Resolves a region name; `all` is predefined as the whole frame.
    pub fn region(&self, name: &Name) -> Option<Region> {
        if name.as_str() == "all" {
            return Some(Region::All);
        }
        self.regions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r.clone())
    }
}

/// Standard free-name computation under the calculus' binders: entity
/// parameters bind in bodies, `?u(x)` binds `x` in its continuation and a
/// restriction binds its channel name.
pub trait FreeVariables {
    fn free_variables(&self) -> BTreeSet<Name>;
}

impl FreeVariables for ProcessTerm {
    fn free_variables(&self) -> BTreeSet<Name> {
        match self {
            ProcessTerm::Nil => BTreeSet::new(),
            ProcessTerm::Instance { args, .. } => args.iter().cloned().collect(),
            ProcessTerm::Par(l, r) => {
                let mut fv = l.free_variables();
                fv.extend(r.free_variables());
                fv
            }
            ProcessTerm::Restrict { channel, body, .. } => {
                let mut fv = body.free_variables();
                fv.remove(channel);
                fv
            }
        }
    }
}

impl FreeVariables for ChoiceBody {
    fn free_variables(&self) -> BTreeSet<Name> {
        let mut fv = BTreeSet::new();
        for branch in &self.branches {
            match &branch.prefix {
                Prefix::Delay(_) | Prefix::Move => {
                    fv.extend(branch.continuation.free_variables());
                }
                Prefix::Output { channel, message } => {
                    fv.insert(channel.clone());
                    fv.insert(message.clone());
                    fv.extend(branch.continuation.free_variables());
                }
                Prefix::Input { channel, binder } => {
                    fv.insert(channel.clone());
                    let mut inner = branch.continuation.free_variables();
                    inner.remove(binder);
                    fv.extend(inner);
                }
            }
        }
        fv
    }
}

/// Builds the simultaneous binding map for `params := args`.
pub fn bind(params: &[Name], args: &[Name]) -> Result<BTreeMap<Name, Name>, RuntimeError> {
    if params.len() != args.len() {
        return Err(RuntimeError::SubstitutionArity {
            params: params.len(),
            args: args.len(),
        });
    }
    Ok(params.iter().cloned().zip(args.iter().cloned()).collect())
}

/// Capture-avoiding simultaneous substitution of free names.
///
/// Restriction binders that collide with a substituted name are renamed
/// fresh before descending.
pub fn substitute(term: &ProcessTerm, bindings: &BTreeMap<Name, Name>) -> ProcessTerm {
    if bindings.is_empty() {
        return term.clone();
    }
    match term {
        ProcessTerm::Nil => ProcessTerm::Nil,
        ProcessTerm::Instance { entity, args } => ProcessTerm::Instance {
            entity: entity.clone(),
            args: args
                .iter()
                .map(|a| bindings.get(a).unwrap_or(a).clone())
                .collect(),
        },
        ProcessTerm::Par(l, r) => {
            ProcessTerm::par(substitute(l, bindings), substitute(r, bindings))
        }
        ProcessTerm::Restrict {
            channel,
            rate,
            radius,
            body,
        } => {
            // Drop any binding shadowed by this binder.
            let mut inner: BTreeMap<Name, Name> = bindings
                .iter()
                .filter(|(from, _)| *from != channel)
                .map(|(f, t)| (f.clone(), t.clone()))
                .collect();
            let captures = inner.values().any(|t| t == channel);
            let (channel, body) = if captures {
                let mut avoid: BTreeSet<Name> = body.free_variables();
                avoid.extend(inner.keys().cloned());
                avoid.extend(inner.values().cloned());
                let fresh = fresh_name(channel, &avoid);
                inner.insert(channel.clone(), fresh.clone());
                (fresh.clone(), substitute(body, &inner))
            } else {
                (channel.clone(), substitute(body, &inner))
            };
            ProcessTerm::Restrict {
                channel,
                rate: *rate,
                radius,
                body: Box::new(body),
            }
        }
    }
}

/// Picks `base_N` for the least `N ≥ 1` not present in `avoid`.
pub fn fresh_name(base: &Name, avoid: &BTreeSet<Name>) -> Name {
    let mut i = 1u64;
    loop {
        let candidate = Name::new(format!("{}_{}", base.as_str(), i));
        if !avoid.contains(&candidate) {
            return candidate;
        }
        i += 1;
    }
}

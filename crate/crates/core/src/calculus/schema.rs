//! Atomic rule schemas.
//!
//! A schema has `n` premisses, each a pair of active atomic-formula
//! pattern lists around an inert context pair `(Γ_k, Δ_k)`, and active
//! pattern lists for the conclusion. An instance binds every term
//! metavariable to a ground term and every formula metavariable to an
//! atomic formula with a distinguished hole variable; the contexts are
//! whatever multisets remain around the instantiated actives.
//!
//! The equality rules are the built-in instances:
//!
//! ```text
//!   t=t, Γ => Δ            s=r, P[x/s], P[x/r], Γ => Δ
//!   ----------- ref        ---------------------------- repl
//!   Γ => Δ                 s=r, P[x/s], Γ => Δ
//! ```

use std::collections::{BTreeMap, BTreeSet};

use crate::syntax::{
    formula_params, substitute_var_unchecked, term_params, Formula, Ident, Term,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("duplicate schema name `{0}`")]
    DuplicateName(Ident),
    #[error("schema `{0}`: {1}")]
    Invalid(Ident, String),
    #[error("unbound term metavariable `{0}`")]
    UnboundTermMeta(Ident),
    #[error("unbound formula metavariable `{0}`")]
    UnboundFormulaMeta(Ident),
    #[error("binding for `{0}` is not an atomic formula")]
    NonAtomicBinding(Ident),
    #[error("binding for `{0}` mentions a variable other than its hole `{1}`")]
    ForeignVariable(Ident, Ident),
}

/// Term pattern: a metavariable or a function symbol applied to patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermPat {
    Meta(Ident),
    Fun(Ident, Vec<TermPat>),
}

impl TermPat {
    pub fn meta(name: &str) -> TermPat {
        TermPat::Meta(name.into())
    }

    fn metas(&self, out: &mut BTreeSet<Ident>) {
        match self {
            TermPat::Meta(m) => {
                out.insert(m.clone());
            }
            TermPat::Fun(_, args) => args.iter().for_each(|a| a.metas(out)),
        }
    }
}

/// Atomic formula pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomPat {
    Pred(Ident, Vec<TermPat>),
    Eq(TermPat, TermPat),
    /// `P[x/s]`: the formula metavariable `P` (an atomic formula with
    /// hole variable `x`) instantiated at the term pattern `s`.
    Inst { fmeta: Ident, hole: Ident, arg: TermPat },
}

impl AtomPat {
    fn term_metas(&self, out: &mut BTreeSet<Ident>) {
        match self {
            AtomPat::Pred(_, args) => args.iter().for_each(|a| a.metas(out)),
            AtomPat::Eq(l, r) => {
                l.metas(out);
                r.metas(out);
            }
            AtomPat::Inst { arg, .. } => arg.metas(out),
        }
    }

    fn formula_metas(&self, out: &mut BTreeSet<Ident>) {
        if let AtomPat::Inst { fmeta, .. } = self {
            out.insert(fmeta.clone());
        }
    }
}

/// One schema premiss: active atoms on either side of an inert context.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchemaPremiss {
    pub left: Vec<AtomPat>,
    pub right: Vec<AtomPat>,
}

/// An atomic rule schema of the displayed form: one inert context pair
/// per premiss, concatenated in the conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomicRuleSchema {
    pub name: Ident,
    pub premisses: Vec<SchemaPremiss>,
    pub concl_left: Vec<AtomPat>,
    pub concl_right: Vec<AtomPat>,
}

impl AtomicRuleSchema {
    /// Number of inert context pairs; one per premiss.
    pub fn context_arity(&self) -> usize {
        self.premisses.len()
    }

    fn all_pats(&self) -> impl Iterator<Item = &AtomPat> {
        self.premisses
            .iter()
            .flat_map(|p| p.left.iter().chain(p.right.iter()))
            .chain(self.concl_left.iter())
            .chain(self.concl_right.iter())
    }

    pub fn validate(&self) -> Result<(), SchemaError> {
        // Every formula metavariable must be used with a single hole name,
        // and every `Inst` argument must be determined by plain patterns
        // (so instantiation never has to guess a hole assignment).
        let mut holes: BTreeMap<Ident, Ident> = BTreeMap::new();
        for pat in self.all_pats() {
            if let AtomPat::Inst { fmeta, hole, .. } = pat {
                if let Some(h) = holes.get(fmeta) {
                    if h != hole {
                        return Err(SchemaError::Invalid(
                            self.name.clone(),
                            format!("metavariable `{fmeta}` used with holes `{h}` and `{hole}`"),
                        ));
                    }
                } else {
                    holes.insert(fmeta.clone(), hole.clone());
                }
            }
        }
        // Formula metavariables must appear in the conclusion actives so
        // that backward matching can determine them.
        let mut concl_fmetas = BTreeSet::new();
        for pat in self.concl_left.iter().chain(self.concl_right.iter()) {
            pat.formula_metas(&mut concl_fmetas);
        }
        let mut all_fmetas = BTreeSet::new();
        for pat in self.all_pats() {
            pat.formula_metas(&mut all_fmetas);
        }
        for m in &all_fmetas {
            if !concl_fmetas.contains(m) {
                return Err(SchemaError::Invalid(
                    self.name.clone(),
                    format!("formula metavariable `{m}` does not occur in the conclusion"),
                ));
            }
        }
        Ok(())
    }

    /// Term metavariables occurring anywhere in the schema.
    pub fn term_metas(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        for pat in self.all_pats() {
            pat.term_metas(&mut out);
        }
        out
    }

    /// The hole variable declared for a formula metavariable.
    pub fn hole_of(&self, fmeta: &str) -> Option<Ident> {
        self.all_pats().find_map(|p| match p {
            AtomPat::Inst { fmeta: m, hole, .. } if m == fmeta => Some(hole.clone()),
            _ => None,
        })
    }
}

/// Bindings of schema metavariables for one rule instance. Formula
/// metavariables map to the hole-carrying atomic formula body; the hole
/// variable is the one declared by the schema.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchemaBindings {
    pub terms: BTreeMap<Ident, Term>,
    pub formulas: BTreeMap<Ident, Formula>,
}

impl SchemaBindings {
    pub fn params(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        for t in self.terms.values() {
            out.extend(term_params(t));
        }
        for f in self.formulas.values() {
            out.extend(formula_params(f));
        }
        out
    }

    /// Applies a parameter substitution to every binding.
    pub fn substitute_param(&self, a: &str, t: &Term) -> SchemaBindings {
        SchemaBindings {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), crate::syntax::substitute_param_term(v, a, t)))
                .collect(),
            formulas: self
                .formulas
                .iter()
                .map(|(k, v)| (k.clone(), crate::syntax::substitute_param(v, a, t)))
                .collect(),
        }
    }
}

pub(crate) fn instantiate_term(pat: &TermPat, b: &SchemaBindings) -> Result<Term, SchemaError> {
    match pat {
        TermPat::Meta(m) => b
            .terms
            .get(m)
            .cloned()
            .ok_or_else(|| SchemaError::UnboundTermMeta(m.clone())),
        TermPat::Fun(f, args) => Ok(Term::Fun(
            f.clone(),
            args.iter().map(|a| instantiate_term(a, b)).collect::<Result<_, _>>()?,
        )),
    }
}

pub(crate) fn instantiate_atom(pat: &AtomPat, b: &SchemaBindings) -> Result<Formula, SchemaError> {
    match pat {
        AtomPat::Pred(p, args) => Ok(Formula::Atom(
            p.clone(),
            args.iter().map(|a| instantiate_term(a, b)).collect::<Result<_, _>>()?,
        )),
        AtomPat::Eq(l, r) => Ok(Formula::Eq(instantiate_term(l, b)?, instantiate_term(r, b)?)),
        AtomPat::Inst { fmeta, hole, arg } => {
            let body = b
                .formulas
                .get(fmeta)
                .ok_or_else(|| SchemaError::UnboundFormulaMeta(fmeta.clone()))?;
            match body {
                Formula::Atom(..) | Formula::Eq(..) => {}
                _ => return Err(SchemaError::NonAtomicBinding(fmeta.clone())),
            }
            if let Some(v) = body.free_vars().into_iter().find(|v| v != hole) {
                return Err(SchemaError::ForeignVariable(fmeta.clone(), v));
            }
            let t = instantiate_term(arg, b)?;
            Ok(substitute_var_unchecked(body, hole, &t))
        }
    }
}

/// `Ref`:  `t=t, Γ => Δ  /  Γ => Δ`.
pub fn ref_schema() -> AtomicRuleSchema {
    AtomicRuleSchema {
        name: "ref".into(),
        premisses: vec![SchemaPremiss {
            left: vec![AtomPat::Eq(TermPat::meta("t"), TermPat::meta("t"))],
            right: vec![],
        }],
        concl_left: vec![],
        concl_right: vec![],
    }
}

/// `Repl`:  `s=r, P[x/s], P[x/r], Γ => Δ  /  s=r, P[x/s], Γ => Δ`.
pub fn repl_schema() -> AtomicRuleSchema {
    let eq = AtomPat::Eq(TermPat::meta("s"), TermPat::meta("r"));
    let at = |arg: &str| AtomPat::Inst {
        fmeta: "P".into(),
        hole: "x".into(),
        arg: TermPat::meta(arg),
    };
    AtomicRuleSchema {
        name: "repl".into(),
        premisses: vec![SchemaPremiss {
            left: vec![eq.clone(), at("s"), at("r")],
            right: vec![],
        }],
        concl_left: vec![eq, at("s")],
        concl_right: vec![],
    }
}

/// The built-in equality extension `{Ref, Repl}`.
pub fn equality_extension() -> Vec<AtomicRuleSchema> {
    vec![ref_schema(), repl_schema()]
}

//! The calculi G3m / G3i / G3c, atomic rule schemas, derivation trees
//! and the validity checker.
//!
//! The checker is the crate's oracle: every rule instance stores its
//! instantiation data explicitly (principal formula, witness term,
//! eigenvariable, cut formula, schema bindings), and checking a node
//! literally reconstructs the premiss sequents the rule demands from the
//! conclusion and that data, then compares them with the actual premiss
//! endsequents as multisets.

mod checker;
mod schema;

use std::collections::BTreeSet;

use crate::syntax::{Formula, Ident, Sequent, Term};

pub use checker::{check, Violation};
pub use schema::{
    equality_extension, ref_schema, repl_schema, AtomPat, AtomicRuleSchema, SchemaBindings,
    SchemaError, SchemaPremiss, TermPat,
};
pub(crate) use schema::instantiate_atom;

/// Which of the three G3 systems a calculus is based on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Minimal,
    Intuitionistic,
    Classical,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Minimal, Flavor::Intuitionistic, Flavor::Classical];

    pub fn letter(self) -> char {
        match self {
            Flavor::Minimal => 'm',
            Flavor::Intuitionistic => 'i',
            Flavor::Classical => 'c',
        }
    }

    pub fn from_letter(c: char) -> Option<Flavor> {
        match c {
            'm' => Some(Flavor::Minimal),
            'i' => Some(Flavor::Intuitionistic),
            'c' => Some(Flavor::Classical),
            _ => None,
        }
    }

    /// In the minimal flavor bottom behaves like an ordinary atom.
    pub fn is_atomic(self, f: &Formula) -> bool {
        match f {
            Formula::Atom(..) | Formula::Eq(..) => true,
            Formula::Bot => self == Flavor::Minimal,
            _ => false,
        }
    }
}

/// The structural rules a calculus may additionally admit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructRule {
    Cut,
    CutCs,
    WeakL,
    WeakR,
    ContrL,
    ContrR,
}

impl StructRule {
    pub const ALL: [StructRule; 6] = [
        StructRule::Cut,
        StructRule::CutCs,
        StructRule::WeakL,
        StructRule::WeakR,
        StructRule::ContrL,
        StructRule::ContrR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructRule::Cut => "cut",
            StructRule::CutCs => "cutcs",
            StructRule::WeakL => "lw",
            StructRule::WeakR => "rw",
            StructRule::ContrL => "lc",
            StructRule::ContrR => "rc",
        }
    }

    pub fn from_name(s: &str) -> Option<StructRule> {
        StructRule::ALL.iter().copied().find(|r| r.name() == s)
    }
}

/// A calculus: a flavor, a set of atomic rule schemas and the admitted
/// extra structural rules.
#[derive(Debug, Clone)]
pub struct Calculus {
    pub flavor: Flavor,
    pub extension: Vec<AtomicRuleSchema>,
    pub admitted: BTreeSet<StructRule>,
}

impl Calculus {
    pub fn new(flavor: Flavor, extension: Vec<AtomicRuleSchema>) -> Result<Calculus, SchemaError> {
        let mut names = BTreeSet::new();
        for s in &extension {
            s.validate()?;
            if !names.insert(s.name.clone()) {
                return Err(SchemaError::DuplicateName(s.name.clone()));
            }
        }
        Ok(Calculus { flavor, extension, admitted: BTreeSet::new() })
    }

    pub fn bare(flavor: Flavor) -> Calculus {
        Calculus::new(flavor, Vec::new()).expect("empty extension")
    }

    /// G3[mic]= : the calculus with the built-in equality rules.
    pub fn with_equality(flavor: Flavor) -> Calculus {
        Calculus::new(flavor, equality_extension()).expect("builtin schemas")
    }

    pub fn admitting(mut self, rules: &[StructRule]) -> Calculus {
        self.admitted.extend(rules.iter().copied());
        self
    }

    pub fn admits(&self, r: StructRule) -> bool {
        self.admitted.contains(&r)
    }

    pub fn schema(&self, name: &str) -> Option<&AtomicRuleSchema> {
        self.extension.iter().find(|s| s.name == name)
    }
}

/// A rule instance: rule identity plus its instantiation data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// Initial sequent `P, Γ => Δ, P` with `P` atomic.
    Init { principal: Formula },
    /// Minimal-flavor initial sequent `_|_, Γ => Δ, _|_`.
    InitBot,
    /// `L⊥` leaf `_|_, Γ => Δ` (classical and intuitionistic only).
    LBot,
    LAnd { principal: Formula },
    RAnd { principal: Formula },
    LOr { principal: Formula },
    ROr { principal: Formula },
    /// Classical `L→`.
    LImp { principal: Formula },
    /// Classical `R→`.
    RImp { principal: Formula },
    /// `L→` of G3i/G3m: the first premiss retains the principal.
    LImpI { principal: Formula },
    /// `R→` of G3i/G3m: single-formula succedent premiss.
    RImpI { principal: Formula },
    LAll { principal: Formula, witness: Term },
    RAll { principal: Formula, eigen: Ident },
    /// `R∀` of G3i/G3m.
    RAllI { principal: Formula, eigen: Ident },
    LEx { principal: Formula, eigen: Ident },
    REx { principal: Formula, witness: Term },
    /// Instance of an atomic rule schema from the extension.
    Schema { name: Ident, bindings: SchemaBindings },
    Cut { formula: Formula },
    CutCs { formula: Formula },
    WeakL { formula: Formula },
    WeakR { formula: Formula },
    ContrL { formula: Formula },
    ContrR { formula: Formula },
}

impl Rule {
    pub fn name(&self) -> String {
        match self {
            Rule::Init { .. } => "init".into(),
            Rule::InitBot => "init_bot".into(),
            Rule::LBot => "l_bot".into(),
            Rule::LAnd { .. } => "l_and".into(),
            Rule::RAnd { .. } => "r_and".into(),
            Rule::LOr { .. } => "l_or".into(),
            Rule::ROr { .. } => "r_or".into(),
            Rule::LImp { .. } => "l_imp".into(),
            Rule::RImp { .. } => "r_imp".into(),
            Rule::LImpI { .. } => "l_imp_i".into(),
            Rule::RImpI { .. } => "r_imp_i".into(),
            Rule::LAll { .. } => "l_all".into(),
            Rule::RAll { .. } => "r_all".into(),
            Rule::RAllI { .. } => "r_all_i".into(),
            Rule::LEx { .. } => "l_ex".into(),
            Rule::REx { .. } => "r_ex".into(),
            Rule::Schema { name, .. } => name.clone(),
            Rule::Cut { .. } => "cut".into(),
            Rule::CutCs { .. } => "cut_cs".into(),
            Rule::WeakL { .. } => "lw".into(),
            Rule::WeakR { .. } => "rw".into(),
            Rule::ContrL { .. } => "lc".into(),
            Rule::ContrR { .. } => "rc".into(),
        }
    }

    /// Logical rules, including the `L⊥` leaf (it is not part of the
    /// logic-free subcalculus).
    pub fn is_logical(&self) -> bool {
        matches!(
            self,
            Rule::LBot
                | Rule::LAnd { .. }
                | Rule::RAnd { .. }
                | Rule::LOr { .. }
                | Rule::ROr { .. }
                | Rule::LImp { .. }
                | Rule::RImp { .. }
                | Rule::LImpI { .. }
                | Rule::RImpI { .. }
                | Rule::LAll { .. }
                | Rule::RAll { .. }
                | Rule::RAllI { .. }
                | Rule::LEx { .. }
                | Rule::REx { .. }
        )
    }

    pub fn is_schema(&self) -> bool {
        matches!(self, Rule::Schema { .. })
    }

    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            Rule::Cut { .. }
                | Rule::WeakL { .. }
                | Rule::WeakR { .. }
                | Rule::ContrL { .. }
                | Rule::ContrR { .. }
        )
    }

    pub fn eigen(&self) -> Option<&Ident> {
        match self {
            Rule::RAll { eigen, .. } | Rule::RAllI { eigen, .. } | Rule::LEx { eigen, .. } => {
                Some(eigen)
            }
            _ => None,
        }
    }
}

/// A derivation tree. The conclusion sits at the root; premiss
/// derivations are the children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: Rule,
    pub premisses: Vec<Derivation>,
}

impl Derivation {
    pub fn leaf(conclusion: Sequent, rule: Rule) -> Derivation {
        Derivation { conclusion, rule, premisses: Vec::new() }
    }

    pub fn node(conclusion: Sequent, rule: Rule, premisses: Vec<Derivation>) -> Derivation {
        Derivation { conclusion, rule, premisses }
    }

    /// Height: leaves have height 0.
    pub fn height(&self) -> usize {
        self.premisses.iter().map(Derivation::height).max().map_or(0, |h| h + 1)
    }

    pub fn node_count(&self) -> usize {
        1 + self.premisses.iter().map(Derivation::node_count).sum::<usize>()
    }

    pub fn subtree(&self, path: &[usize]) -> Option<&Derivation> {
        let mut cur = self;
        for &i in path {
            cur = cur.premisses.get(i)?;
        }
        Some(cur)
    }

    /// True when no logical inference occurs anywhere in the tree, i.e.
    /// the derivation lives in the R + Cut_cs fragment.
    pub fn is_logic_free(&self) -> bool {
        !self.rule.is_logical() && self.premisses.iter().all(Derivation::is_logic_free)
    }

    /// True when the tree uses only initial sequents and schema rules.
    pub fn is_r_only(&self) -> bool {
        matches!(self.rule, Rule::Init { .. } | Rule::InitBot | Rule::Schema { .. })
            && self.premisses.iter().all(Derivation::is_r_only)
    }

    /// Separated: above every schema or context-sharing-cut inference
    /// there is no logical inference, so every subtree rooted at such a
    /// node is logic-free.
    pub fn is_separated(&self) -> bool {
        fn go(d: &Derivation) -> (bool, bool) {
            // returns (contains_logical, separated)
            let mut contains = d.rule.is_logical();
            let mut separated = true;
            for p in &d.premisses {
                let (c, s) = go(p);
                contains |= c;
                separated &= s;
            }
            if matches!(d.rule, Rule::Schema { .. } | Rule::CutCs { .. }) {
                separated &= !contains;
            }
            (contains, separated)
        }
        go(self).1
    }

    /// Parameters occurring anywhere in the tree, including rule data.
    pub fn all_params(&self) -> BTreeSet<Ident> {
        let mut out = self.conclusion.params();
        match &self.rule {
            Rule::Init { principal }
            | Rule::LAnd { principal }
            | Rule::RAnd { principal }
            | Rule::LOr { principal }
            | Rule::ROr { principal }
            | Rule::LImp { principal }
            | Rule::RImp { principal }
            | Rule::LImpI { principal }
            | Rule::RImpI { principal } => out.extend(crate::syntax::formula_params(principal)),
            Rule::LAll { principal, witness } | Rule::REx { principal, witness } => {
                out.extend(crate::syntax::formula_params(principal));
                out.extend(crate::syntax::term_params(witness));
            }
            Rule::RAll { principal, eigen }
            | Rule::RAllI { principal, eigen }
            | Rule::LEx { principal, eigen } => {
                out.extend(crate::syntax::formula_params(principal));
                out.insert(eigen.clone());
            }
            Rule::Schema { bindings, .. } => out.extend(bindings.params()),
            Rule::Cut { formula }
            | Rule::CutCs { formula }
            | Rule::WeakL { formula }
            | Rule::WeakR { formula }
            | Rule::ContrL { formula }
            | Rule::ContrR { formula } => out.extend(crate::syntax::formula_params(formula)),
            Rule::InitBot | Rule::LBot => {}
        }
        for p in &self.premisses {
            out.extend(p.all_params());
        }
        out
    }

    /// Rules used anywhere in the tree, by name.
    pub fn rule_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        fn go(d: &Derivation, out: &mut BTreeSet<String>) {
            out.insert(d.rule.name());
            for p in &d.premisses {
                go(p, out);
            }
        }
        go(self, &mut out);
        out
    }

    pub fn contains_rule(&self, pred: &dyn Fn(&Rule) -> bool) -> bool {
        pred(&self.rule) || self.premisses.iter().any(|p| p.contains_rule(pred))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    pub(crate) fn paper_intro_derivation() -> Derivation {
        // The height-1 derivation of  a=f(a), a=f(a) => a=f(f(a))
        // by Repl (s = a, r = f(a), P = a = f(x)) over an initial sequent.
        let concl = parse_sequent("a=f(a), a=f(a) => a=f(f(a))").unwrap();
        let premiss = parse_sequent("a=f(a), a=f(a), a=f(f(a)) => a=f(f(a))").unwrap();
        let init = Derivation::leaf(
            premiss,
            Rule::Init { principal: crate::syntax::parse_formula("a=f(f(a))").unwrap() },
        );
        let mut bindings = SchemaBindings::default();
        bindings.terms.insert("s".into(), Term::param("a"));
        bindings.terms.insert("r".into(), Term::fun("f", vec![Term::param("a")]));
        bindings.formulas.insert(
            "P".into(),
            crate::syntax::parse_formula_with_scope("a=f(x)", &["x".into()]).unwrap(),
        );
        Derivation::node(concl, Rule::Schema { name: "repl".into(), bindings }, vec![init])
    }

    #[test]
    fn height_of_leaf_is_zero() {
        let s = parse_sequent("P => P").unwrap();
        let d = Derivation::leaf(s, Rule::Init { principal: Formula::atom("P", vec![]) });
        assert_eq!(d.height(), 0);
    }

    #[test]
    fn paper_intro_derivation_has_height_one() {
        assert_eq!(paper_intro_derivation().height(), 1);
    }

    #[test]
    fn two_rung_chain_has_height_two() {
        // Stack one more Repl (replacing nothing new) below the intro tree:
        // a zero-occurrence instance whose premiss duplicates a=f(a).
        let top = paper_intro_derivation();
        let concl = parse_sequent("a=f(a) => a=f(f(a))").unwrap();
        let mut bindings = SchemaBindings::default();
        bindings.terms.insert("s".into(), Term::param("a"));
        bindings.terms.insert("r".into(), Term::fun("f", vec![Term::param("a")]));
        bindings
            .formulas
            .insert("P".into(), crate::syntax::parse_formula("a=f(a)").unwrap());
        let d = Derivation::node(concl, Rule::Schema { name: "repl".into(), bindings }, vec![top]);
        assert_eq!(d.height(), 2);
    }

    #[test]
    fn separated_examples() {
        let d = paper_intro_derivation();
        assert!(d.is_separated());
        assert!(d.is_logic_free());

        let init = Derivation::leaf(
            parse_sequent("P => P").unwrap(),
            Rule::Init { principal: Formula::atom("P", vec![]) },
        );
        assert!(init.is_separated());
    }

    #[test]
    fn logical_below_schema_is_not_separated() {
        // L& whose subtree feeds a Repl below it.
        let top = Derivation::leaf(
            parse_sequent("P, Q, a=b, a=b => a=b").unwrap(),
            Rule::Init { principal: parse_sequent("a=b =>").unwrap().ant.iter().next().unwrap().clone() },
        );
        let land = Derivation::node(
            parse_sequent("P & Q, a=b, a=b => a=b").unwrap(),
            Rule::LAnd { principal: crate::syntax::parse_formula("P & Q").unwrap() },
            vec![top],
        );
        let mut bindings = SchemaBindings::default();
        bindings.terms.insert("s".into(), Term::param("a"));
        bindings.terms.insert("r".into(), Term::param("b"));
        bindings
            .formulas
            .insert("P".into(), crate::syntax::parse_formula("a=b").unwrap());
        let repl = Derivation::node(
            parse_sequent("P & Q, a=b => a=b").unwrap(),
            Rule::Schema { name: "repl".into(), bindings },
            vec![land],
        );
        assert!(!repl.is_separated());
        // Separation is hereditary on the subtrees of a separated tree.
        assert!(land.is_separated());
    }
}

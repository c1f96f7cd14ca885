//! First-order syntax: terms, formulas, sequents.
//!
//! Identifiers come in two disjoint namespaces. *Bound variables*
//! (`Term::Var`) occur only underneath their quantifier; *parameters*
//! (`Term::Param`) are the free names, used in particular as the proper
//! parameters (eigenvariables) of the quantifier rules. Keeping the two
//! categories apart makes the eigenvariable side condition a plain
//! parameter-set test and rules out capture during substitution.

mod parse;
mod render;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use parse::{parse_formula, parse_formula_with_scope, parse_sequent, parse_term, ParseError};
pub use render::{render_formula, render_sequent, render_term};

/// Plain identifier: predicate, function, parameter or variable name.
pub type Ident = String;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    /// Bound variable; only legal underneath a binder for its name.
    Var(Ident),
    /// Free parameter.
    Param(Ident),
    Fun(Ident, Vec<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Ident, Vec<Term>),
    Eq(Term, Term),
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Forall(Ident, Box<Formula>),
    Exists(Ident, Box<Formula>),
}

impl Term {
    pub fn param(name: &str) -> Term {
        Term::Param(name.into())
    }

    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn fun(name: &str, args: Vec<Term>) -> Term {
        Term::Fun(name.into(), args)
    }

    /// True when the term contains no bound variables at all.
    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Param(_) => true,
            Term::Fun(_, args) => args.iter().all(Term::is_ground),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Param(_) => 0,
            Term::Fun(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    fn collect_params(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Term::Var(_) => {}
            Term::Param(p) => {
                out.insert(p.clone());
            }
            Term::Fun(_, args) => args.iter().for_each(|t| t.collect_params(out)),
        }
    }

    fn collect_vars(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Param(_) => {}
            Term::Fun(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
        }
    }

    /// All subterms, including the term itself.
    pub fn subterms(&self) -> Vec<&Term> {
        let mut out = vec![self];
        if let Term::Fun(_, args) = self {
            for a in args {
                out.extend(a.subterms());
            }
        }
        out
    }
}

impl Formula {
    pub fn atom(name: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(name.into(), args)
    }

    pub fn eq(lhs: Term, rhs: Term) -> Formula {
        Formula::Eq(lhs, rhs)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn forall(x: &str, body: Formula) -> Formula {
        Formula::Forall(x.into(), Box::new(body))
    }

    pub fn exists(x: &str, body: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(body))
    }

    /// Height of the formula tree; atoms have height 0.
    pub fn height(&self) -> usize {
        match self {
            Formula::Atom(..) | Formula::Eq(..) | Formula::Bot => 0,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.height().max(b.height())
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) => 1 + a.height(),
        }
    }

    fn collect_params(&self, out: &mut BTreeSet<Ident>) {
        match self {
            Formula::Atom(_, args) => args.iter().for_each(|t| t.collect_params(out)),
            Formula::Eq(l, r) => {
                l.collect_params(out);
                r.collect_params(out);
            }
            Formula::Bot => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
            Formula::Forall(_, a) | Formula::Exists(_, a) => a.collect_params(out),
        }
    }

    /// Variables occurring free in the formula. Empty for well-formed
    /// formulas, which are closed at the bound-variable category.
    pub fn free_vars(&self) -> BTreeSet<Ident> {
        fn go(f: &Formula, bound: &mut Vec<Ident>, out: &mut BTreeSet<Ident>) {
            match f {
                Formula::Atom(_, args) => {
                    let mut vs = BTreeSet::new();
                    args.iter().for_each(|t| t.collect_vars(&mut vs));
                    out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
                }
                Formula::Eq(l, r) => {
                    let mut vs = BTreeSet::new();
                    l.collect_vars(&mut vs);
                    r.collect_vars(&mut vs);
                    out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
                }
                Formula::Bot => {}
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Formula::Forall(x, a) | Formula::Exists(x, a) => {
                    bound.push(x.clone());
                    go(a, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Well-formed: no bound-variable name escapes its binder.
    pub fn is_well_formed(&self) -> bool {
        self.free_vars().is_empty()
    }
}

/// Substitution errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubstError {
    #[error("substituted term contains bound variable `{0}`")]
    VarInTerm(Ident),
}

fn subst_term_var(t: &Term, x: &str, r: &Term) -> Term {
    match t {
        Term::Var(v) if v == x => r.clone(),
        Term::Var(_) | Term::Param(_) => t.clone(),
        Term::Fun(f, args) => {
            Term::Fun(f.clone(), args.iter().map(|a| subst_term_var(a, x, r)).collect())
        }
    }
}

/// `f[x/t]`: replace every free occurrence of the bound variable `x` by
/// `t`. The replacement term must be ground (parameters and function
/// symbols only), so binders can never capture it.
pub fn substitute_formula(f: &Formula, x: &str, t: &Term) -> Result<Formula, SubstError> {
    if let Some(v) = {
        let mut vs = BTreeSet::new();
        t.collect_vars(&mut vs);
        vs.into_iter().next()
    } {
        return Err(SubstError::VarInTerm(v));
    }
    Ok(substitute_var_unchecked(f, x, t))
}

/// Same as [`substitute_formula`] but without the groundness check; used
/// internally where the replacement is constructed to be a variable or a
/// ground term.
pub(crate) fn substitute_var_unchecked(f: &Formula, x: &str, t: &Term) -> Formula {
    match f {
        Formula::Atom(p, args) => {
            Formula::Atom(p.clone(), args.iter().map(|a| subst_term_var(a, x, t)).collect())
        }
        Formula::Eq(l, r) => Formula::Eq(subst_term_var(l, x, t), subst_term_var(r, x, t)),
        Formula::Bot => Formula::Bot,
        Formula::And(a, b) => Formula::and(
            substitute_var_unchecked(a, x, t),
            substitute_var_unchecked(b, x, t),
        ),
        Formula::Or(a, b) => Formula::or(
            substitute_var_unchecked(a, x, t),
            substitute_var_unchecked(b, x, t),
        ),
        Formula::Imp(a, b) => Formula::imp(
            substitute_var_unchecked(a, x, t),
            substitute_var_unchecked(b, x, t),
        ),
        Formula::Forall(y, _) | Formula::Exists(y, _) if y == x => f.clone(),
        Formula::Forall(y, a) => Formula::Forall(y.clone(), Box::new(substitute_var_unchecked(a, x, t))),
        Formula::Exists(y, a) => Formula::Exists(y.clone(), Box::new(substitute_var_unchecked(a, x, t))),
    }
}

fn subst_term_param(t: &Term, a: &str, r: &Term) -> Term {
    match t {
        Term::Param(p) if p == a => r.clone(),
        Term::Var(_) | Term::Param(_) => t.clone(),
        Term::Fun(f, args) => {
            Term::Fun(f.clone(), args.iter().map(|s| subst_term_param(s, a, r)).collect())
        }
    }
}

/// `f[a/t]` on the parameter category: replace the parameter `a`
/// everywhere by `t`. Parameters are never bound, so the traversal goes
/// under binders without any side condition.
pub fn substitute_param(f: &Formula, a: &str, t: &Term) -> Formula {
    match f {
        Formula::Atom(p, args) => {
            Formula::Atom(p.clone(), args.iter().map(|s| subst_term_param(s, a, t)).collect())
        }
        Formula::Eq(l, r) => Formula::Eq(subst_term_param(l, a, t), subst_term_param(r, a, t)),
        Formula::Bot => Formula::Bot,
        Formula::And(x, y) => Formula::and(substitute_param(x, a, t), substitute_param(y, a, t)),
        Formula::Or(x, y) => Formula::or(substitute_param(x, a, t), substitute_param(y, a, t)),
        Formula::Imp(x, y) => Formula::imp(substitute_param(x, a, t), substitute_param(y, a, t)),
        Formula::Forall(x, b) => Formula::Forall(x.clone(), Box::new(substitute_param(b, a, t))),
        Formula::Exists(x, b) => Formula::Exists(x.clone(), Box::new(substitute_param(b, a, t))),
    }
}

/// `t[a/r]` on the parameter category.
pub fn substitute_param_term(t: &Term, a: &str, r: &Term) -> Term {
    subst_term_param(t, a, r)
}

/// Parameters occurring in a term.
pub fn term_params(t: &Term) -> BTreeSet<Ident> {
    let mut out = BTreeSet::new();
    t.collect_params(&mut out);
    out
}

/// Parameters occurring in a formula.
pub fn formula_params(f: &Formula) -> BTreeSet<Ident> {
    let mut out = BTreeSet::new();
    f.collect_params(&mut out);
    out
}

/// A finite multiset of formulas, stored canonically as a sorted map
/// from formula to multiplicity. Equality is multiset equality and the
/// iteration order is the fixed total order on formula trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multiset(BTreeMap<Formula, usize>);

impl Multiset {
    pub fn new() -> Multiset {
        Multiset::default()
    }

    pub fn singleton(f: Formula) -> Multiset {
        let mut m = Multiset::new();
        m.insert(f);
        m
    }

    pub fn insert(&mut self, f: Formula) {
        *self.0.entry(f).or_insert(0) += 1;
    }

    /// Removes one occurrence; returns false when the formula is absent.
    pub fn remove_one(&mut self, f: &Formula) -> bool {
        match self.0.entry(f.clone()) {
            Entry::Occupied(mut e) => {
                if *e.get() == 1 {
                    e.remove();
                } else {
                    *e.get_mut() -= 1;
                }
                true
            }
            Entry::Vacant(_) => false,
        }
    }

    pub fn count(&self, f: &Formula) -> usize {
        self.0.get(f).copied().unwrap_or(0)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.count(f) > 0
    }

    /// Total number of occurrences.
    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Iterates each occurrence, repeating formulas by multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.0.iter().flat_map(|(f, n)| std::iter::repeat(f).take(*n))
    }

    /// Iterates distinct formulas with their multiplicities.
    pub fn iter_counts(&self) -> impl Iterator<Item = (&Formula, usize)> {
        self.0.iter().map(|(f, n)| (f, *n))
    }

    /// Iterates distinct formulas once each.
    pub fn distinct(&self) -> impl Iterator<Item = &Formula> {
        self.0.keys()
    }

    pub fn sum(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (f, n) in other.iter_counts() {
            *out.0.entry(f.clone()).or_insert(0) += n;
        }
        out
    }

    /// Multiset difference, saturating at zero.
    pub fn minus(&self, other: &Multiset) -> Multiset {
        let mut out = Multiset::new();
        for (f, n) in self.iter_counts() {
            let m = n.saturating_sub(other.count(f));
            if m > 0 {
                out.0.insert(f.clone(), m);
            }
        }
        out
    }

    pub fn minus_one(&self, f: &Formula) -> Multiset {
        let mut out = self.clone();
        out.remove_one(f);
        out
    }

    pub fn plus_one(&self, f: &Formula) -> Multiset {
        let mut out = self.clone();
        out.insert(f.clone());
        out
    }

    /// Pointwise maximum of multiplicities.
    pub fn max(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (f, n) in other.iter_counts() {
            let e = out.0.entry(f.clone()).or_insert(0);
            *e = (*e).max(n);
        }
        out
    }

    /// Multiset inclusion: every multiplicity here is bounded by `other`.
    pub fn is_subset(&self, other: &Multiset) -> bool {
        self.iter_counts().all(|(f, n)| n <= other.count(f))
    }
}

impl FromIterator<Formula> for Multiset {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Multiset {
        let mut m = Multiset::new();
        for f in iter {
            m.insert(f);
        }
        m
    }
}

/// A sequent: a pair of finite multisets of formulas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Sequent {
    pub ant: Multiset,
    pub suc: Multiset,
}

impl Sequent {
    pub fn new(ant: Multiset, suc: Multiset) -> Sequent {
        Sequent { ant, suc }
    }

    pub fn from_vecs(ant: Vec<Formula>, suc: Vec<Formula>) -> Sequent {
        Sequent {
            ant: ant.into_iter().collect(),
            suc: suc.into_iter().collect(),
        }
    }

    /// Sub-sequent test: multiset inclusion on both sides.
    pub fn is_subsequent_of(&self, other: &Sequent) -> bool {
        self.ant.is_subset(&other.ant) && self.suc.is_subset(&other.suc)
    }

    pub fn params(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        for f in self.ant.iter().chain(self.suc.iter()) {
            f.collect_params(&mut out);
        }
        out
    }

    /// Every term occurring anywhere in the sequent.
    pub fn terms(&self) -> Vec<&Term> {
        fn formula_terms<'a>(f: &'a Formula, out: &mut Vec<&'a Term>) {
            match f {
                Formula::Atom(_, args) => out.extend(args.iter()),
                Formula::Eq(l, r) => {
                    out.push(l);
                    out.push(r);
                }
                Formula::Bot => {}
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    formula_terms(a, out);
                    formula_terms(b, out);
                }
                Formula::Forall(_, a) | Formula::Exists(_, a) => formula_terms(a, out),
            }
        }
        let mut out = Vec::new();
        for f in self.ant.iter().chain(self.suc.iter()) {
            formula_terms(f, &mut out);
        }
        out
    }
}

/// Free parameters of a sequent.
pub fn sequent_params(s: &Sequent) -> BTreeSet<Ident> {
    s.params()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render::render_term(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render::render_formula(self))
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render::render_sequent(self))
    }
}

/// Deterministic fresh-parameter source: a monotone counter over a
/// prefix, skipping names in the avoid set.
#[derive(Debug, Default)]
pub struct Fresh {
    next: u64,
}

impl Fresh {
    pub fn new() -> Fresh {
        Fresh::default()
    }

    pub fn param(&mut self, avoid: &BTreeSet<Ident>) -> Ident {
        loop {
            let cand = format!("a{}", self.next);
            self.next += 1;
            if !avoid.contains(&cand) {
                return cand;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> Formula {
        Formula::atom(name, vec![])
    }

    // Independent oracle for substitution: a second, naive recursive
    // traversal kept deliberately separate from the implementation.
    fn subst_oracle(f: &Formula, x: &str, t: &Term) -> Formula {
        fn term(u: &Term, x: &str, t: &Term) -> Term {
            match u {
                Term::Var(v) if v == x => t.clone(),
                Term::Fun(g, args) => {
                    Term::Fun(g.clone(), args.iter().map(|a| term(a, x, t)).collect())
                }
                other => other.clone(),
            }
        }
        match f {
            Formula::Atom(pr, args) => {
                Formula::Atom(pr.clone(), args.iter().map(|a| term(a, x, t)).collect())
            }
            Formula::Eq(l, r) => Formula::Eq(term(l, x, t), term(r, x, t)),
            Formula::Bot => Formula::Bot,
            Formula::And(a, b) => Formula::and(subst_oracle(a, x, t), subst_oracle(b, x, t)),
            Formula::Or(a, b) => Formula::or(subst_oracle(a, x, t), subst_oracle(b, x, t)),
            Formula::Imp(a, b) => Formula::imp(subst_oracle(a, x, t), subst_oracle(b, x, t)),
            Formula::Forall(y, _) | Formula::Exists(y, _) if y == x => f.clone(),
            Formula::Forall(y, a) => Formula::Forall(y.clone(), Box::new(subst_oracle(a, x, t))),
            Formula::Exists(y, a) => Formula::Exists(y.clone(), Box::new(subst_oracle(a, x, t))),
        }
    }

    #[test]
    fn substitute_single_occurrence() {
        let f = Formula::atom("P", vec![Term::var("x")]);
        let got = substitute_formula(&f, "x", &Term::param("a")).unwrap();
        assert_eq!(got, Formula::atom("P", vec![Term::param("a")]));
    }

    #[test]
    fn substitute_shadowed_binder_is_identity() {
        let f = Formula::forall("x", Formula::atom("P", vec![Term::var("x")]));
        let got = substitute_formula(&f, "x", &Term::param("a")).unwrap();
        assert_eq!(got, f);
    }

    #[test]
    fn substitute_eq_matches_oracle() {
        let f = Formula::eq(
            Term::var("x"),
            Term::fun("f", vec![Term::var("x")]),
        );
        let t = Term::param("a");
        let got = substitute_formula(&f, "x", &t).unwrap();
        assert_eq!(got, subst_oracle(&f, "x", &t));
        assert_eq!(
            got,
            Formula::eq(Term::param("a"), Term::fun("f", vec![Term::param("a")]))
        );
    }

    #[test]
    fn substitute_rejects_bound_variable_in_term() {
        let f = p("P");
        let err = substitute_formula(&f, "x", &Term::var("y")).unwrap_err();
        assert_eq!(err, SubstError::VarInTerm("y".into()));
    }

    #[test]
    fn free_parameters_examples() {
        let f = Formula::atom("P", vec![Term::param("a"), Term::param("b")]);
        assert_eq!(
            formula_params(&f),
            ["a", "b"].iter().map(|s| s.to_string()).collect()
        );
        let g = Formula::forall("x", Formula::atom("P", vec![Term::var("x")]));
        assert!(formula_params(&g).is_empty());
        let s = parse_sequent("a=f(a) => a=f(f(a))").unwrap();
        assert_eq!(s.params(), ["a".to_string()].into_iter().collect());
    }

    #[test]
    fn multiset_equality_is_order_insensitive_and_multiplicity_sensitive() {
        let a: Multiset = vec![p("P"), p("Q")].into_iter().collect();
        let b: Multiset = vec![p("Q"), p("P")].into_iter().collect();
        assert_eq!(a, b);
        let c: Multiset = vec![p("P"), p("P")].into_iter().collect();
        assert_ne!(a, c);
        assert_eq!(c.count(&p("P")), 2);
    }

    #[test]
    fn multiset_arithmetic() {
        let a: Multiset = vec![p("P"), p("P"), p("Q")].into_iter().collect();
        let b: Multiset = vec![p("P"), p("R")].into_iter().collect();
        assert_eq!(a.minus(&b).count(&p("P")), 1);
        assert_eq!(a.minus(&b).count(&p("R")), 0);
        assert_eq!(a.sum(&b).count(&p("P")), 3);
        assert_eq!(a.max(&b).count(&p("P")), 2);
        assert_eq!(a.max(&b).count(&p("R")), 1);
        assert!(b.minus(&a).is_subset(&b));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn term_strategy() -> impl Strategy<Value = Term> {
            let leaf = prop_oneof![
                "[a-c]".prop_map(|s| Term::Param(s)),
            ];
            leaf.prop_recursive(3, 12, 2, |inner| {
                prop_oneof![
                    (Just("f".to_string()), prop::collection::vec(inner.clone(), 1..=2))
                        .prop_map(|(f, args)| Term::Fun(f, args)),
                ]
            })
        }

        fn formula_strategy() -> impl Strategy<Value = Formula> {
            let leaf = prop_oneof![
                "[P-R]".prop_map(|p| Formula::Atom(p, vec![])),
                (term_strategy(), term_strategy()).prop_map(|(l, r)| Formula::Eq(l, r)),
                ("[P-R]", term_strategy()).prop_map(|(p, t)| Formula::Atom(p, vec![t])),
                Just(Formula::Bot),
            ];
            leaf.prop_recursive(4, 24, 2, |inner| {
                prop_oneof![
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
                    inner.clone().prop_map(|a| {
                        // Quantify over a fresh variable replacing parameter "a".
                        let body = substitute_param(&a, "a", &Term::var("x"));
                        Formula::forall("x", body)
                    }),
                    inner.prop_map(|a| {
                        let body = substitute_param(&a, "b", &Term::var("y"));
                        Formula::exists("y", body)
                    }),
                ]
            })
        }

        fn sequent_strategy() -> impl Strategy<Value = Sequent> {
            (
                prop::collection::vec(formula_strategy(), 0..4),
                prop::collection::vec(formula_strategy(), 0..4),
            )
                .prop_map(|(a, s)| Sequent::from_vecs(a, s))
        }

        proptest! {
            #[test]
            fn render_parse_round_trip(s in sequent_strategy()) {
                let text = render::render_sequent(&s);
                let back = parse_sequent(&text).unwrap();
                prop_assert_eq!(back, s);
            }

            #[test]
            fn substitution_composes(f in formula_strategy()) {
                // x then y equals simultaneous substitution when y is not in t.
                let t = Term::param("a");
                let r = Term::fun("f", vec![Term::param("b")]);
                let lhs = substitute_var_unchecked(
                    &substitute_var_unchecked(&f, "x", &t), "y", &r);
                let rhs = substitute_var_unchecked(
                    &substitute_var_unchecked(&f, "y", &r), "x", &t);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn substitution_param_bound(f in formula_strategy(), x in "[xy]") {
                let t = Term::fun("f", vec![Term::param("c")]);
                let out = substitute_var_unchecked(&f, &x, &t);
                let mut allowed = formula_params(&f);
                allowed.extend(term_params(&t));
                prop_assert!(formula_params(&out).is_subset(&allowed));
            }
        }
    }
}

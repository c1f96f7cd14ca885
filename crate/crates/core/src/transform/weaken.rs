//! Height-preserving weakening and substitution.
//!
//! Left weakening adds the formula to the antecedent of every sequent on
//! the spine it threads through; in shared-context rules it enters every
//! premiss, in a schema inference it enters one context slot. Right
//! weakening in the minimal and intuitionistic flavors stops at `R→`/`R∀`
//! nodes, whose conclusions carry an arbitrary succedent context.
//! Eigenvariables are renamed whenever the added formula (or substituted
//! term) would clash with them, which keeps the side condition intact and
//! the height unchanged.

use crate::calculus::{Calculus, Derivation, Flavor, Rule};
use crate::syntax::{
    formula_params, substitute_param, substitute_param_term, term_params, Formula, Ident,
    Sequent, Term,
};

use super::{Ctx, TResult, TransformError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Adds `formula` to the endsequent on the given side, preserving height
/// and validity.
pub fn weaken(d: &Derivation, side: Side, formula: &Formula, cal: &Calculus) -> TResult {
    let mut ctx = Ctx::new(cal);
    weaken_in(d, side, formula, &mut ctx)
}

pub(crate) fn weaken_in(
    d: &Derivation,
    side: Side,
    formula: &Formula,
    ctx: &mut Ctx,
) -> TResult {
    // Rename any eigenvariable clashing with the incoming formula first.
    let d = disentangle_eigen(d, &formula_params(formula).into_iter().collect::<Vec<_>>(), ctx)?;
    weaken_rec(&d, side, formula, ctx)
}

fn weaken_rec(d: &Derivation, side: Side, formula: &Formula, ctx: &mut Ctx) -> TResult {
    let conclusion = match side {
        Side::Left => Sequent::new(d.conclusion.ant.plus_one(formula), d.conclusion.suc.clone()),
        Side::Right => Sequent::new(d.conclusion.ant.clone(), d.conclusion.suc.plus_one(formula)),
    };
    let intuit = ctx.cal.flavor != Flavor::Classical;
    match &d.rule {
        Rule::Init { .. } | Rule::InitBot | Rule::LBot => {
            Ok(Derivation::leaf(conclusion, d.rule.clone()))
        }
        // The succedent context of these conclusions is free, so a right
        // weakening does not enter the premiss.
        Rule::RImpI { .. } | Rule::RAllI { .. } if side == Side::Right && intuit => Ok(
            Derivation::node(conclusion, d.rule.clone(), d.premisses.clone()),
        ),
        Rule::Schema { .. } => {
            if d.premisses.is_empty() {
                return Err(TransformError::Unsupported(
                    "cannot weaken through a zero-premiss schema instance".into(),
                ));
            }
            let mut premisses = d.premisses.clone();
            premisses[0] = weaken_rec(&d.premisses[0], side, formula, ctx)?;
            Ok(Derivation::node(conclusion, d.rule.clone(), premisses))
        }
        Rule::Cut { .. } => {
            // Independent contexts: thread through the first premiss.
            let mut premisses = d.premisses.clone();
            premisses[0] = weaken_rec(&d.premisses[0], side, formula, ctx)?;
            Ok(Derivation::node(conclusion, d.rule.clone(), premisses))
        }
        _ => {
            // Shared-context rules: the formula enters every premiss.
            let premisses = d
                .premisses
                .iter()
                .map(|p| weaken_rec(p, side, formula, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Derivation::node(conclusion, d.rule.clone(), premisses))
        }
    }
}

/// Weakens `d` until its endsequent equals `target`, which must be a
/// super-multiset of the current endsequent on both sides.
pub fn weaken_to(d: &Derivation, target: &Sequent, cal: &Calculus) -> TResult {
    let mut ctx = Ctx::new(cal);
    weaken_to_in(d, target, &mut ctx)
}

pub(crate) fn weaken_to_in(d: &Derivation, target: &Sequent, ctx: &mut Ctx) -> TResult {
    if !d.conclusion.is_subsequent_of(target) {
        return Err(TransformError::Precondition(format!(
            "`{}` is not a subsequent of the weakening target `{}`",
            d.conclusion, target
        )));
    }
    let mut out = d.clone();
    for f in target.ant.minus(&d.conclusion.ant).iter() {
        out = weaken_in(&out, Side::Left, f, ctx)?;
    }
    for f in target.suc.minus(&d.conclusion.suc).iter() {
        out = weaken_in(&out, Side::Right, f, ctx)?;
    }
    Ok(out)
}

/// Replaces the parameter `a` by the ground term `t` throughout the
/// derivation, preserving height. Proper parameters of `L∃`/`R∀`
/// inferences are renamed first where they would collide with `a` or
/// with the parameters of `t`.
pub fn substitute_derivation(d: &Derivation, a: &str, t: &Term, cal: &Calculus) -> TResult {
    if !t.is_ground() {
        return Err(TransformError::Precondition(
            "substituted term contains a bound variable".into(),
        ));
    }
    let mut ctx = Ctx::new(cal);
    substitute_in(d, a, t, &mut ctx)
}

pub(crate) fn substitute_in(d: &Derivation, a: &str, t: &Term, ctx: &mut Ctx) -> TResult {
    let mut clash: Vec<Ident> = term_params(t).into_iter().collect();
    clash.push(a.to_string());
    let d = disentangle_eigen(d, &clash, ctx)?;
    Ok(subst_rec(&d, a, t))
}

fn subst_sequent(s: &Sequent, a: &str, t: &Term) -> Sequent {
    Sequent::new(
        s.ant.iter().map(|f| substitute_param(f, a, t)).collect(),
        s.suc.iter().map(|f| substitute_param(f, a, t)).collect(),
    )
}

fn subst_rule(rule: &Rule, a: &str, t: &Term) -> Rule {
    let sf = |f: &Formula| substitute_param(f, a, t);
    match rule {
        Rule::Init { principal } => Rule::Init { principal: sf(principal) },
        Rule::InitBot => Rule::InitBot,
        Rule::LBot => Rule::LBot,
        Rule::LAnd { principal } => Rule::LAnd { principal: sf(principal) },
        Rule::RAnd { principal } => Rule::RAnd { principal: sf(principal) },
        Rule::LOr { principal } => Rule::LOr { principal: sf(principal) },
        Rule::ROr { principal } => Rule::ROr { principal: sf(principal) },
        Rule::LImp { principal } => Rule::LImp { principal: sf(principal) },
        Rule::RImp { principal } => Rule::RImp { principal: sf(principal) },
        Rule::LImpI { principal } => Rule::LImpI { principal: sf(principal) },
        Rule::RImpI { principal } => Rule::RImpI { principal: sf(principal) },
        Rule::LAll { principal, witness } => Rule::LAll {
            principal: sf(principal),
            witness: substitute_param_term(witness, a, t),
        },
        Rule::REx { principal, witness } => Rule::REx {
            principal: sf(principal),
            witness: substitute_param_term(witness, a, t),
        },
        // Eigenvariables were renamed apart beforehand, so they are
        // untouched by the substitution.
        Rule::RAll { principal, eigen } => {
            Rule::RAll { principal: sf(principal), eigen: eigen.clone() }
        }
        Rule::RAllI { principal, eigen } => {
            Rule::RAllI { principal: sf(principal), eigen: eigen.clone() }
        }
        Rule::LEx { principal, eigen } => {
            Rule::LEx { principal: sf(principal), eigen: eigen.clone() }
        }
        Rule::Schema { name, bindings } => Rule::Schema {
            name: name.clone(),
            bindings: bindings.substitute_param(a, t),
        },
        Rule::Cut { formula } => Rule::Cut { formula: sf(formula) },
        Rule::CutCs { formula } => Rule::CutCs { formula: sf(formula) },
        Rule::WeakL { formula } => Rule::WeakL { formula: sf(formula) },
        Rule::WeakR { formula } => Rule::WeakR { formula: sf(formula) },
        Rule::ContrL { formula } => Rule::ContrL { formula: sf(formula) },
        Rule::ContrR { formula } => Rule::ContrR { formula: sf(formula) },
    }
}

fn subst_rec(d: &Derivation, a: &str, t: &Term) -> Derivation {
    Derivation::node(
        subst_sequent(&d.conclusion, a, t),
        subst_rule(&d.rule, a, t),
        d.premisses.iter().map(|p| subst_rec(p, a, t)).collect(),
    )
}

/// Renames every proper parameter of the tree that occurs in `clash`,
/// height-preservingly.
fn disentangle_eigen(d: &Derivation, clash: &[Ident], ctx: &mut Ctx) -> TResult {
    if let Some(eigen) = d.rule.eigen() {
        if clash.contains(eigen) {
            let mut avoid = d.all_params();
            avoid.extend(clash.iter().cloned());
            let fresh = ctx.fresh.param(&avoid);
            let eigen = eigen.clone();
            // Renaming inside the premisses only: the eigenvariable does
            // not occur in the conclusion of this node.
            let premisses = d
                .premisses
                .iter()
                .map(|p| substitute_in(p, &eigen, &Term::Param(fresh.clone()), ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let rule = match &d.rule {
                Rule::RAll { principal, .. } => {
                    Rule::RAll { principal: principal.clone(), eigen: fresh }
                }
                Rule::RAllI { principal, .. } => {
                    Rule::RAllI { principal: principal.clone(), eigen: fresh }
                }
                Rule::LEx { principal, .. } => {
                    Rule::LEx { principal: principal.clone(), eigen: fresh }
                }
                _ => unreachable!(),
            };
            let renamed = Derivation::node(d.conclusion.clone(), rule, premisses);
            return disentangle_rec(&renamed, clash, ctx);
        }
    }
    disentangle_rec(d, clash, ctx)
}

fn disentangle_rec(d: &Derivation, clash: &[Ident], ctx: &mut Ctx) -> TResult {
    let premisses = d
        .premisses
        .iter()
        .map(|p| disentangle_eigen(p, clash, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Derivation::node(d.conclusion.clone(), d.rule.clone(), premisses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check, Calculus, Flavor, Rule};
    use crate::syntax::{parse_formula, parse_sequent};

    fn init(s: &str, p: &str) -> Derivation {
        Derivation::leaf(
            parse_sequent(s).unwrap(),
            Rule::Init { principal: parse_formula(p).unwrap() },
        )
    }

    #[test]
    fn weaken_init_left() {
        let d = init("P => P", "P");
        let cal = Calculus::bare(Flavor::Classical);
        let w = weaken(&d, Side::Left, &parse_formula("Q").unwrap(), &cal).unwrap();
        assert_eq!(w.conclusion, parse_sequent("Q, P => P").unwrap());
        assert_eq!(w.height(), 0);
        check(&w, &cal).unwrap();
    }

    #[test]
    fn weaken_intro_tree_right() {
        let d = crate::calculus::tests::paper_intro_derivation();
        for flavor in Flavor::ALL {
            let cal = Calculus::with_equality(flavor);
            let w = weaken(&d, Side::Right, &parse_formula("Q").unwrap(), &cal).unwrap();
            assert_eq!(
                w.conclusion,
                parse_sequent("a=f(a), a=f(a) => Q, a=f(f(a))").unwrap()
            );
            assert_eq!(w.height(), 1);
            check(&w, &cal).unwrap();
            // Every succedent in the tree gained Q.
            assert!(w.premisses[0].conclusion.suc.contains(&parse_formula("Q").unwrap()));
        }
    }

    #[test]
    fn weaken_renames_clashing_eigenvariable() {
        // Derivation of  => forall x. P(x)  with eigenvariable a; weaken
        // by a formula mentioning a.
        let cal = Calculus::bare(Flavor::Classical);
        let d = Derivation::node(
            parse_sequent("P(a1) => P(a1), forall x. P(x)").unwrap(),
            Rule::RAll { principal: parse_formula("forall x. P(x)").unwrap(), eigen: "a".into() },
            vec![init("P(a1) => P(a1), P(a)", "P(a1)")],
        );
        check(&d, &cal).unwrap();

        let w = weaken(&d, Side::Left, &parse_formula("Q(a)").unwrap(), &cal).unwrap();
        check(&w, &cal).unwrap();
        assert_eq!(w.height(), d.height());
        assert_eq!(
            w.conclusion,
            parse_sequent("Q(a), P(a1) => P(a1), forall x. P(x)").unwrap()
        );
        // The eigenvariable was renamed away from a.
        assert_ne!(w.rule.eigen().unwrap(), "a");
    }

    #[test]
    fn weaken_right_intuitionistic_stops_at_r_imp_i() {
        let cal = Calculus::bare(Flavor::Intuitionistic);
        let d = Derivation::node(
            parse_sequent("Q => P -> Q").unwrap(),
            Rule::RImpI { principal: parse_formula("P -> Q").unwrap() },
            vec![init("P, Q => Q", "Q")],
        );
        check(&d, &cal).unwrap();
        let w = weaken(&d, Side::Right, &parse_formula("R").unwrap(), &cal).unwrap();
        check(&w, &cal).unwrap();
        assert_eq!(w.conclusion, parse_sequent("Q => R, P -> Q").unwrap());
        // Premiss untouched: the rule's conclusion absorbs the context.
        assert_eq!(w.premisses[0], d.premisses[0]);
    }

    #[test]
    fn substitute_init_leaf() {
        let cal = Calculus::bare(Flavor::Classical);
        let d = init("P(a) => P(a)", "P(a)");
        let t = Term::fun("f", vec![Term::param("b")]);
        let s = substitute_derivation(&d, "a", &t, &cal).unwrap();
        assert_eq!(s.conclusion, parse_sequent("P(f(b)) => P(f(b))").unwrap());
        check(&s, &cal).unwrap();
    }

    #[test]
    fn substitute_vacuous_is_identity() {
        let cal = Calculus::with_equality(Flavor::Classical);
        let d = crate::calculus::tests::paper_intro_derivation();
        let s = substitute_derivation(&d, "zz", &Term::param("b"), &cal).unwrap();
        assert_eq!(s, d);
    }

    #[test]
    fn substitute_renames_eigen_on_clash() {
        let cal = Calculus::bare(Flavor::Classical);
        let d = Derivation::node(
            parse_sequent("P(c) => P(c), forall x. P(x)").unwrap(),
            Rule::RAll { principal: parse_formula("forall x. P(x)").unwrap(), eigen: "a".into() },
            vec![init("P(c) => P(c), P(a)", "P(c)")],
        );
        check(&d, &cal).unwrap();
        // Substitute c by a term mentioning the eigenvariable a.
        let t = Term::fun("f", vec![Term::param("a")]);
        let s = substitute_derivation(&d, "c", &t, &cal).unwrap();
        check(&s, &cal).unwrap();
        assert_eq!(s.height(), d.height());
        assert_eq!(
            s.conclusion,
            parse_sequent("P(f(a)) => P(f(a)), forall x. P(x)").unwrap()
        );
    }
}

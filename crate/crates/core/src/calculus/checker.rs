//! The derivation checker.
//!
//! A node is valid when its rule is available in the calculus and the
//! premiss sequents demanded by the rule and its instantiation data are
//! exactly (as multisets) the endsequents of its premiss derivations.
//! Checking is depth-first and reports the first offending node.

use crate::syntax::{substitute_var_unchecked, Formula, Multiset, Sequent, Term};

use super::schema::{instantiate_atom, SchemaBindings};
use super::{AtomicRuleSchema, Calculus, Derivation, Flavor, Rule, StructRule};

/// A failed check: the path from the root to the offending node (premiss
/// indices) and the failed side condition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at node {path:?}: {reason}")]
pub struct Violation {
    pub path: Vec<usize>,
    pub reason: String,
}

struct Ck<'a> {
    cal: &'a Calculus,
    path: Vec<usize>,
}

type CkResult = Result<(), Violation>;

impl<'a> Ck<'a> {
    fn fail(&self, reason: impl Into<String>) -> Violation {
        Violation { path: self.path.clone(), reason: reason.into() }
    }

    fn ensure(&self, cond: bool, reason: impl Into<String>) -> CkResult {
        if cond {
            Ok(())
        } else {
            Err(self.fail(reason))
        }
    }

    fn leaf(&self, d: &Derivation) -> CkResult {
        self.ensure(
            d.premisses.is_empty(),
            format!("rule {} takes no premisses", d.rule.name()),
        )
    }

    fn arity(&self, d: &Derivation, n: usize) -> CkResult {
        self.ensure(
            d.premisses.len() == n,
            format!("rule {} expects {} premiss(es), found {}", d.rule.name(), n, d.premisses.len()),
        )
    }

    /// Premisses fully determined by conclusion and rule data.
    fn expect_premisses(&self, d: &Derivation, expected: &[Sequent]) -> CkResult {
        self.arity(d, expected.len())?;
        for (i, (want, got)) in expected.iter().zip(&d.premisses).enumerate() {
            self.ensure(
                &got.conclusion == want,
                format!("premiss {i} is `{}` but the rule requires `{}`", got.conclusion, want),
            )?;
        }
        Ok(())
    }

    fn check(&mut self, d: &Derivation) -> CkResult {
        self.node(d)?;
        for (i, p) in d.premisses.iter().enumerate() {
            self.path.push(i);
            self.check(p)?;
            self.path.pop();
        }
        Ok(())
    }

    fn node(&mut self, d: &Derivation) -> CkResult {
        let ant = &d.conclusion.ant;
        let suc = &d.conclusion.suc;
        let flavor = self.cal.flavor;
        let intuit = flavor != Flavor::Classical;
        match &d.rule {
            Rule::Init { principal } => {
                self.leaf(d)?;
                self.ensure(
                    matches!(principal, Formula::Atom(..) | Formula::Eq(..)),
                    "initial sequents require an atomic principal formula",
                )?;
                self.ensure(
                    ant.contains(principal) && suc.contains(principal),
                    "principal atom must occur on both sides",
                )
            }
            Rule::InitBot => {
                self.leaf(d)?;
                self.ensure(flavor == Flavor::Minimal, "init_bot is only available in G3m")?;
                self.ensure(
                    ant.contains(&Formula::Bot) && suc.contains(&Formula::Bot),
                    "init_bot requires bottom on both sides",
                )
            }
            Rule::LBot => {
                self.leaf(d)?;
                self.ensure(flavor != Flavor::Minimal, "l_bot is not available in G3m")?;
                self.ensure(ant.contains(&Formula::Bot), "l_bot requires bottom on the left")
            }
            Rule::LAnd { principal } => {
                let (a, b) = self.binary(principal, "l_and expects a conjunction", |f| {
                    matches!(f, Formula::And(..))
                })?;
                self.ensure(ant.contains(principal), "principal formula missing from antecedent")?;
                let prem = Sequent::new(
                    ant.minus_one(principal).plus_one(&a).plus_one(&b),
                    suc.clone(),
                );
                self.expect_premisses(d, &[prem])
            }
            Rule::RAnd { principal } => {
                let (a, b) = self.binary(principal, "r_and expects a conjunction", |f| {
                    matches!(f, Formula::And(..))
                })?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                let base = suc.minus_one(principal);
                let p1 = Sequent::new(ant.clone(), base.plus_one(&a));
                let p2 = Sequent::new(ant.clone(), base.plus_one(&b));
                self.expect_premisses(d, &[p1, p2])
            }
            Rule::LOr { principal } => {
                let (a, b) = self.binary(principal, "l_or expects a disjunction", |f| {
                    matches!(f, Formula::Or(..))
                })?;
                self.ensure(ant.contains(principal), "principal formula missing from antecedent")?;
                let base = ant.minus_one(principal);
                let p1 = Sequent::new(base.plus_one(&a), suc.clone());
                let p2 = Sequent::new(base.plus_one(&b), suc.clone());
                self.expect_premisses(d, &[p1, p2])
            }
            Rule::ROr { principal } => {
                let (a, b) = self.binary(principal, "r_or expects a disjunction", |f| {
                    matches!(f, Formula::Or(..))
                })?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                let prem = Sequent::new(
                    ant.clone(),
                    suc.minus_one(principal).plus_one(&a).plus_one(&b),
                );
                self.expect_premisses(d, &[prem])
            }
            Rule::LImp { principal } => {
                self.ensure(!intuit, "l_imp is the classical rule; use l_imp_i")?;
                let (a, b) = self.binary(principal, "l_imp expects an implication", |f| {
                    matches!(f, Formula::Imp(..))
                })?;
                self.ensure(ant.contains(principal), "principal formula missing from antecedent")?;
                let base = ant.minus_one(principal);
                let p1 = Sequent::new(base.clone(), suc.plus_one(&a));
                let p2 = Sequent::new(base.plus_one(&b), suc.clone());
                self.expect_premisses(d, &[p1, p2])
            }
            Rule::RImp { principal } => {
                self.ensure(!intuit, "r_imp is the classical rule; use r_imp_i")?;
                let (a, b) = self.binary(principal, "r_imp expects an implication", |f| {
                    matches!(f, Formula::Imp(..))
                })?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                let prem = Sequent::new(
                    ant.plus_one(&a),
                    suc.minus_one(principal).plus_one(&b),
                );
                self.expect_premisses(d, &[prem])
            }
            Rule::LImpI { principal } => {
                self.ensure(intuit, "l_imp_i is not available in G3c")?;
                let (a, b) = self.binary(principal, "l_imp_i expects an implication", |f| {
                    matches!(f, Formula::Imp(..))
                })?;
                self.ensure(ant.contains(principal), "principal formula missing from antecedent")?;
                let p1 = Sequent::new(ant.clone(), suc.plus_one(&a));
                let p2 = Sequent::new(ant.minus_one(principal).plus_one(&b), suc.clone());
                self.expect_premisses(d, &[p1, p2])
            }
            Rule::RImpI { principal } => {
                self.ensure(intuit, "r_imp_i is not available in G3c")?;
                let (a, b) = self.binary(principal, "r_imp_i expects an implication", |f| {
                    matches!(f, Formula::Imp(..))
                })?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                let prem = Sequent::new(ant.plus_one(&a), Multiset::singleton(b));
                self.expect_premisses(d, &[prem])
            }
            Rule::LAll { principal, witness } => {
                let (x, body) = self.quantified(principal, "l_all expects a universal formula", true)?;
                self.ensure(ant.contains(principal), "principal formula missing from antecedent")?;
                self.ensure(witness.is_ground(), "witness term contains a bound variable")?;
                let inst = substitute_var_unchecked(&body, &x, witness);
                let prem = Sequent::new(ant.plus_one(&inst), suc.clone());
                self.expect_premisses(d, &[prem])
            }
            Rule::RAll { principal, eigen } => {
                self.ensure(!intuit, "r_all is the classical rule; use r_all_i")?;
                let (x, body) = self.quantified(principal, "r_all expects a universal formula", true)?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                self.eigencondition(d, eigen)?;
                let inst = substitute_var_unchecked(&body, &x, &Term::Param(eigen.clone()));
                let prem = Sequent::new(ant.clone(), suc.minus_one(principal).plus_one(&inst));
                self.expect_premisses(d, &[prem])
            }
            Rule::RAllI { principal, eigen } => {
                self.ensure(intuit, "r_all_i is not available in G3c")?;
                let (x, body) = self.quantified(principal, "r_all_i expects a universal formula", true)?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                self.eigencondition(d, eigen)?;
                let inst = substitute_var_unchecked(&body, &x, &Term::Param(eigen.clone()));
                let prem = Sequent::new(ant.clone(), Multiset::singleton(inst));
                self.expect_premisses(d, &[prem])
            }
            Rule::LEx { principal, eigen } => {
                let (x, body) =
                    self.quantified(principal, "l_ex expects an existential formula", false)?;
                self.ensure(ant.contains(principal), "principal formula missing from antecedent")?;
                self.eigencondition(d, eigen)?;
                let inst = substitute_var_unchecked(&body, &x, &Term::Param(eigen.clone()));
                let prem = Sequent::new(ant.minus_one(principal).plus_one(&inst), suc.clone());
                self.expect_premisses(d, &[prem])
            }
            Rule::REx { principal, witness } => {
                let (x, body) =
                    self.quantified(principal, "r_ex expects an existential formula", false)?;
                self.ensure(suc.contains(principal), "principal formula missing from succedent")?;
                self.ensure(witness.is_ground(), "witness term contains a bound variable")?;
                let inst = substitute_var_unchecked(&body, &x, witness);
                let prem = Sequent::new(ant.clone(), suc.plus_one(&inst));
                self.expect_premisses(d, &[prem])
            }
            Rule::Schema { name, bindings } => {
                let schema = self
                    .cal
                    .schema(name)
                    .ok_or_else(|| self.fail(format!("rule `{name}` is not in the extension")))?
                    .clone();
                self.schema_node(d, &schema, bindings)
            }
            Rule::Cut { formula } => {
                self.structural(StructRule::Cut)?;
                self.arity(d, 2)?;
                let p1 = &d.premisses[0].conclusion;
                let p2 = &d.premisses[1].conclusion;
                self.ensure(p1.suc.contains(formula), "cut formula missing from first premiss succedent")?;
                self.ensure(p2.ant.contains(formula), "cut formula missing from second premiss antecedent")?;
                let want = Sequent::new(
                    p1.ant.sum(&p2.ant.minus_one(formula)),
                    p1.suc.minus_one(formula).sum(&p2.suc),
                );
                self.ensure(
                    d.conclusion == want,
                    format!("cut conclusion should be `{want}`"),
                )
            }
            Rule::CutCs { formula } => {
                self.structural(StructRule::CutCs)?;
                let p1 = Sequent::new(ant.clone(), suc.plus_one(formula));
                let p2 = Sequent::new(ant.plus_one(formula), suc.clone());
                self.expect_premisses(d, &[p1, p2])
            }
            Rule::WeakL { formula } => {
                self.structural(StructRule::WeakL)?;
                self.ensure(ant.contains(formula), "weakening formula missing from antecedent")?;
                let prem = Sequent::new(ant.minus_one(formula), suc.clone());
                self.expect_premisses(d, &[prem])
            }
            Rule::WeakR { formula } => {
                self.structural(StructRule::WeakR)?;
                self.ensure(suc.contains(formula), "weakening formula missing from succedent")?;
                let prem = Sequent::new(ant.clone(), suc.minus_one(formula));
                self.expect_premisses(d, &[prem])
            }
            Rule::ContrL { formula } => {
                self.structural(StructRule::ContrL)?;
                self.ensure(ant.contains(formula), "contraction formula missing from antecedent")?;
                let prem = Sequent::new(ant.plus_one(formula), suc.clone());
                self.expect_premisses(d, &[prem])
            }
            Rule::ContrR { formula } => {
                self.structural(StructRule::ContrR)?;
                self.ensure(suc.contains(formula), "contraction formula missing from succedent")?;
                let prem = Sequent::new(ant.clone(), suc.plus_one(formula));
                self.expect_premisses(d, &[prem])
            }
        }
    }

    fn binary(
        &self,
        f: &Formula,
        msg: &str,
        pred: impl Fn(&Formula) -> bool,
    ) -> Result<(Formula, Formula), Violation> {
        if !pred(f) {
            return Err(self.fail(msg));
        }
        match f {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                Ok((a.as_ref().clone(), b.as_ref().clone()))
            }
            _ => Err(self.fail(msg)),
        }
    }

    fn quantified(
        &self,
        f: &Formula,
        msg: &str,
        universal: bool,
    ) -> Result<(String, Formula), Violation> {
        match f {
            Formula::Forall(x, a) if universal => Ok((x.clone(), a.as_ref().clone())),
            Formula::Exists(x, a) if !universal => Ok((x.clone(), a.as_ref().clone())),
            _ => Err(self.fail(msg)),
        }
    }

    fn eigencondition(&self, d: &Derivation, eigen: &str) -> CkResult {
        self.ensure(
            !d.conclusion.params().contains(eigen),
            format!("eigenvariable `{eigen}` occurs in the conclusion"),
        )
    }

    fn structural(&self, r: StructRule) -> CkResult {
        self.ensure(
            self.cal.admits(r),
            format!("rule {} is not admitted in this calculus", r.name()),
        )
    }

    fn schema_node(
        &self,
        d: &Derivation,
        schema: &AtomicRuleSchema,
        bindings: &SchemaBindings,
    ) -> CkResult {
        self.arity(d, schema.premisses.len())?;
        let inst = |pats: &[super::schema::AtomPat]| -> Result<Multiset, Violation> {
            let mut m = Multiset::new();
            for p in pats {
                m.insert(instantiate_atom(p, bindings).map_err(|e| self.fail(e.to_string()))?);
            }
            Ok(m)
        };
        // Contexts are whatever each premiss holds around its actives.
        let mut ctx_left = Multiset::new();
        let mut ctx_right = Multiset::new();
        for (k, (pat, prem)) in schema.premisses.iter().zip(&d.premisses).enumerate() {
            let left = inst(&pat.left)?;
            let right = inst(&pat.right)?;
            let end = &prem.conclusion;
            self.ensure(
                left.is_subset(&end.ant) && right.is_subset(&end.suc),
                format!("premiss {k} does not contain the instantiated active formulas"),
            )?;
            ctx_left = ctx_left.sum(&end.ant.minus(&left));
            ctx_right = ctx_right.sum(&end.suc.minus(&right));
        }
        let want = Sequent::new(
            inst(&schema.concl_left)?.sum(&ctx_left),
            ctx_right.sum(&inst(&schema.concl_right)?),
        );
        self.ensure(
            d.conclusion == want,
            format!("schema conclusion should be `{want}`"),
        )
    }
}

/// Checks a derivation against a calculus. `Ok(())` means every node is
/// a correct instance of an available rule.
pub fn check(d: &Derivation, cal: &Calculus) -> Result<(), Violation> {
    let mut ck = Ck { cal, path: Vec::new() };
    ck.check(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{Calculus, Flavor};
    use crate::syntax::{parse_formula, parse_sequent};

    fn intro_derivation() -> Derivation {
        crate::calculus::tests::paper_intro_derivation()
    }

    #[test]
    fn intro_derivation_checks_in_all_flavors() {
        let d = intro_derivation();
        for flavor in Flavor::ALL {
            let cal = Calculus::with_equality(flavor);
            check(&d, &cal).unwrap();
        }
    }

    #[test]
    fn eigenvariable_violation_detected() {
        // R∀ from P(a) => P(a) to P(a) => forall x. P(x): a occurs in the
        // conclusion.
        let prem = parse_sequent("P(a) => P(a)").unwrap();
        let init = Derivation::leaf(prem, Rule::Init { principal: parse_formula("P(a)").unwrap() });
        let concl = parse_sequent("P(a) => forall x. P(x)").unwrap();
        let d = Derivation::node(
            concl,
            Rule::RAll { principal: parse_formula("forall x. P(x)").unwrap(), eigen: "a".into() },
            vec![init],
        );
        let cal = Calculus::bare(Flavor::Classical);
        let v = check(&d, &cal).unwrap_err();
        assert!(v.reason.contains("eigenvariable"));
        assert_eq!(v.path, Vec::<usize>::new());
    }

    #[test]
    fn cut_requires_admission() {
        let p = parse_formula("P").unwrap();
        let left = Derivation::leaf(
            parse_sequent("P => P").unwrap(),
            Rule::Init { principal: p.clone() },
        );
        let right = Derivation::leaf(
            parse_sequent("P => P").unwrap(),
            Rule::Init { principal: p.clone() },
        );
        let d = Derivation::node(
            parse_sequent("P => P").unwrap(),
            Rule::CutCs { formula: p },
            vec![left, right],
        );
        let cal = Calculus::bare(Flavor::Classical);
        let v = check(&d, &cal).unwrap_err();
        assert!(v.reason.contains("not admitted"));
        let cal = cal.admitting(&[StructRule::CutCs]);
        check(&d, &cal).unwrap();
    }

    #[test]
    fn init_rejects_compound_principal() {
        let f = parse_formula("P & Q").unwrap();
        let d = Derivation::leaf(
            parse_sequent("P & Q => P & Q").unwrap(),
            Rule::Init { principal: f },
        );
        let cal = Calculus::bare(Flavor::Classical);
        assert!(check(&d, &cal).is_err());
    }

    #[test]
    fn violation_path_points_at_offender() {
        // Valid root over an invalid premiss-of-premiss.
        let bad = Derivation::leaf(
            parse_sequent("P => Q").unwrap(),
            Rule::Init { principal: parse_formula("P").unwrap() },
        );
        let mid = Derivation::node(
            parse_sequent("P & R => Q").unwrap(),
            Rule::LAnd { principal: parse_formula("P & R").unwrap() },
            vec![Derivation::node(
                parse_sequent("P, R => Q").unwrap(),
                Rule::WeakL { formula: parse_formula("R").unwrap() },
                vec![bad],
            )],
        );
        let cal = Calculus::bare(Flavor::Classical).admitting(&[StructRule::WeakL]);
        let v = check(&mid, &cal).unwrap_err();
        assert_eq!(v.path, vec![0, 0]);
    }

    #[test]
    fn checker_monotone_in_admitted_rules() {
        let d = intro_derivation();
        let cal = Calculus::with_equality(Flavor::Classical);
        check(&d, &cal).unwrap();
        let bigger = cal.admitting(&StructRule::ALL);
        check(&d, &bigger).unwrap();
    }

    #[test]
    fn minimal_flavor_bottom_leaves() {
        let s = parse_sequent("_|_ , P => Q, _|_").unwrap();
        let d = Derivation::leaf(s.clone(), Rule::InitBot);
        check(&d, &Calculus::bare(Flavor::Minimal)).unwrap();
        assert!(check(&d, &Calculus::bare(Flavor::Classical)).is_err());
        let d = Derivation::leaf(s, Rule::LBot);
        assert!(check(&d, &Calculus::bare(Flavor::Minimal)).is_err());
        check(&d, &Calculus::bare(Flavor::Intuitionistic)).unwrap();
    }
}

//! Rule application: computing the premiss sequents a rule instance
//! demands from its conclusion, with every side condition validated.
//!
//! All rules except `Cut` and multi-premiss schema instances determine
//! their premisses from the conclusion and the instantiation data alone;
//! those two distribute a context between premisses and are checked
//! against the actual premisses instead (see the checker).

use crate::syntax::{substitute_var_unchecked, Formula, Multiset, Sequent, Term};

use super::{Calculus, Flavor, Rule, StructRule};

fn binary(f: &Formula) -> Option<(Formula, Formula)> {
    match f {
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            Some((a.as_ref().clone(), b.as_ref().clone()))
        }
        _ => None,
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Premiss sequents of `rule` applied with conclusion `conclusion`.
///
/// `Err` carries the violated side condition. `Rule::Cut` and schema
/// instances with more than one premiss are rejected as not locally
/// determined; single-premiss schema instances are supported.
pub fn premiss_sequents(
    rule: &Rule,
    conclusion: &Sequent,
    cal: &Calculus,
) -> Result<Vec<Sequent>, String> {
    let ant = &conclusion.ant;
    let suc = &conclusion.suc;
    let flavor = cal.flavor;
    let intuit = flavor != Flavor::Classical;
    let admitted = |r: StructRule| {
        require(cal.admits(r), format!("rule {} is not admitted in this calculus", r.name()))
    };
    match rule {
        Rule::Init { principal } => {
            require(
                matches!(principal, Formula::Atom(..) | Formula::Eq(..)),
                "initial sequents require an atomic principal formula",
            )?;
            require(
                ant.contains(principal) && suc.contains(principal),
                "principal atom must occur on both sides",
            )?;
            Ok(vec![])
        }
        Rule::InitBot => {
            require(flavor == Flavor::Minimal, "init_bot is only available in G3m")?;
            require(
                ant.contains(&Formula::Bot) && suc.contains(&Formula::Bot),
                "init_bot requires bottom on both sides",
            )?;
            Ok(vec![])
        }
        Rule::LBot => {
            require(flavor != Flavor::Minimal, "l_bot is not available in G3m")?;
            require(ant.contains(&Formula::Bot), "l_bot requires bottom on the left")?;
            Ok(vec![])
        }
        Rule::LAnd { principal } => {
            require(matches!(principal, Formula::And(..)), "l_and expects a conjunction")?;
            let (a, b) = binary(principal).unwrap();
            require(ant.contains(principal), "principal formula missing from antecedent")?;
            Ok(vec![Sequent::new(
                ant.minus_one(principal).plus_one(&a).plus_one(&b),
                suc.clone(),
            )])
        }
        Rule::RAnd { principal } => {
            require(matches!(principal, Formula::And(..)), "r_and expects a conjunction")?;
            let (a, b) = binary(principal).unwrap();
            require(suc.contains(principal), "principal formula missing from succedent")?;
            let base = suc.minus_one(principal);
            Ok(vec![
                Sequent::new(ant.clone(), base.plus_one(&a)),
                Sequent::new(ant.clone(), base.plus_one(&b)),
            ])
        }
        Rule::LOr { principal } => {
            require(matches!(principal, Formula::Or(..)), "l_or expects a disjunction")?;
            let (a, b) = binary(principal).unwrap();
            require(ant.contains(principal), "principal formula missing from antecedent")?;
            let base = ant.minus_one(principal);
            Ok(vec![
                Sequent::new(base.plus_one(&a), suc.clone()),
                Sequent::new(base.plus_one(&b), suc.clone()),
            ])
        }
        Rule::ROr { principal } => {
            require(matches!(principal, Formula::Or(..)), "r_or expects a disjunction")?;
            let (a, b) = binary(principal).unwrap();
            require(suc.contains(principal), "principal formula missing from succedent")?;
            Ok(vec![Sequent::new(
                ant.clone(),
                suc.minus_one(principal).plus_one(&a).plus_one(&b),
            )])
        }
        Rule::LImp { principal } => {
            require(!intuit, "l_imp is the classical rule; use l_imp_i")?;
            require(matches!(principal, Formula::Imp(..)), "l_imp expects an implication")?;
            let (a, b) = binary(principal).unwrap();
            require(ant.contains(principal), "principal formula missing from antecedent")?;
            let base = ant.minus_one(principal);
            Ok(vec![
                Sequent::new(base.clone(), suc.plus_one(&a)),
                Sequent::new(base.plus_one(&b), suc.clone()),
            ])
        }
        Rule::RImp { principal } => {
            require(!intuit, "r_imp is the classical rule; use r_imp_i")?;
            require(matches!(principal, Formula::Imp(..)), "r_imp expects an implication")?;
            let (a, b) = binary(principal).unwrap();
            require(suc.contains(principal), "principal formula missing from succedent")?;
            Ok(vec![Sequent::new(
                ant.plus_one(&a),
                suc.minus_one(principal).plus_one(&b),
            )])
        }
        Rule::LImpI { principal } => {
            require(intuit, "l_imp_i is not available in G3c")?;
            require(matches!(principal, Formula::Imp(..)), "l_imp_i expects an implication")?;
            let (a, b) = binary(principal).unwrap();
            require(ant.contains(principal), "principal formula missing from antecedent")?;
            Ok(vec![
                Sequent::new(ant.clone(), suc.plus_one(&a)),
                Sequent::new(ant.minus_one(principal).plus_one(&b), suc.clone()),
            ])
        }
        Rule::RImpI { principal } => {
            require(intuit, "r_imp_i is not available in G3c")?;
            require(matches!(principal, Formula::Imp(..)), "r_imp_i expects an implication")?;
            let (a, b) = binary(principal).unwrap();
            require(suc.contains(principal), "principal formula missing from succedent")?;
            Ok(vec![Sequent::new(ant.plus_one(&a), Multiset::singleton(b))])
        }
        Rule::LAll { principal, witness } => {
            let (x, body) = match principal {
                Formula::Forall(x, a) => (x.clone(), a.as_ref().clone()),
                _ => return Err("l_all expects a universal formula".into()),
            };
            require(ant.contains(principal), "principal formula missing from antecedent")?;
            require(witness.is_ground(), "witness term contains a bound variable")?;
            let inst = substitute_var_unchecked(&body, &x, witness);
            Ok(vec![Sequent::new(ant.plus_one(&inst), suc.clone())])
        }
        Rule::RAll { principal, eigen } => {
            require(!intuit, "r_all is the classical rule; use r_all_i")?;
            let (x, body) = match principal {
                Formula::Forall(x, a) => (x.clone(), a.as_ref().clone()),
                _ => return Err("r_all expects a universal formula".into()),
            };
            require(suc.contains(principal), "principal formula missing from succedent")?;
            require(
                !conclusion.params().contains(eigen),
                format!("eigenvariable `{eigen}` occurs in the conclusion"),
            )?;
            let inst = substitute_var_unchecked(&body, &x, &Term::Param(eigen.clone()));
            Ok(vec![Sequent::new(ant.clone(), suc.minus_one(principal).plus_one(&inst))])
        }
        Rule::RAllI { principal, eigen } => {
            require(intuit, "r_all_i is not available in G3c")?;
            let (x, body) = match principal {
                Formula::Forall(x, a) => (x.clone(), a.as_ref().clone()),
                _ => return Err("r_all_i expects a universal formula".into()),
            };
            require(suc.contains(principal), "principal formula missing from succedent")?;
            require(
                !conclusion.params().contains(eigen),
                format!("eigenvariable `{eigen}` occurs in the conclusion"),
            )?;
            let inst = substitute_var_unchecked(&body, &x, &Term::Param(eigen.clone()));
            Ok(vec![Sequent::new(ant.clone(), Multiset::singleton(inst))])
        }
        Rule::LEx { principal, eigen } => {
            let (x, body) = match principal {
                Formula::Exists(x, a) => (x.clone(), a.as_ref().clone()),
                _ => return Err("l_ex expects an existential formula".into()),
            };
            require(ant.contains(principal), "principal formula missing from antecedent")?;
            require(
                !conclusion.params().contains(eigen),
                format!("eigenvariable `{eigen}` occurs in the conclusion"),
            )?;
            let inst = substitute_var_unchecked(&body, &x, &Term::Param(eigen.clone()));
            Ok(vec![Sequent::new(ant.minus_one(principal).plus_one(&inst), suc.clone())])
        }
        Rule::REx { principal, witness } => {
            let (x, body) = match principal {
                Formula::Exists(x, a) => (x.clone(), a.as_ref().clone()),
                _ => return Err("r_ex expects an existential formula".into()),
            };
            require(suc.contains(principal), "principal formula missing from succedent")?;
            require(witness.is_ground(), "witness term contains a bound variable")?;
            let inst = substitute_var_unchecked(&body, &x, witness);
            Ok(vec![Sequent::new(ant.clone(), suc.plus_one(&inst))])
        }
        Rule::Schema { name, bindings } => {
            let schema = cal
                .schema(name)
                .ok_or_else(|| format!("rule `{name}` is not in the extension"))?;
            if schema.premisses.len() != 1 {
                return Err(format!(
                    "schema `{name}` has {} premisses; contexts are not locally determined",
                    schema.premisses.len()
                ));
            }
            let inst = |pats: &[super::AtomPat]| -> Result<Multiset, String> {
                let mut m = Multiset::new();
                for p in pats {
                    m.insert(super::instantiate_atom(p, bindings).map_err(|e| e.to_string())?);
                }
                Ok(m)
            };
            let cl = inst(&schema.concl_left)?;
            let cr = inst(&schema.concl_right)?;
            require(
                cl.is_subset(ant) && cr.is_subset(suc),
                "conclusion does not contain the instantiated active formulas",
            )?;
            let pl = inst(&schema.premisses[0].left)?;
            let pr = inst(&schema.premisses[0].right)?;
            Ok(vec![Sequent::new(
                ant.minus(&cl).sum(&pl),
                pr.sum(&suc.minus(&cr)),
            )])
        }
        Rule::Cut { .. } => Err("cut premiss contexts are not locally determined".into()),
        Rule::CutCs { formula } => {
            admitted(StructRule::CutCs)?;
            Ok(vec![
                Sequent::new(ant.clone(), suc.plus_one(formula)),
                Sequent::new(ant.plus_one(formula), suc.clone()),
            ])
        }
        Rule::WeakL { formula } => {
            admitted(StructRule::WeakL)?;
            require(ant.contains(formula), "weakening formula missing from antecedent")?;
            Ok(vec![Sequent::new(ant.minus_one(formula), suc.clone())])
        }
        Rule::WeakR { formula } => {
            admitted(StructRule::WeakR)?;
            require(suc.contains(formula), "weakening formula missing from succedent")?;
            Ok(vec![Sequent::new(ant.clone(), suc.minus_one(formula))])
        }
        Rule::ContrL { formula } => {
            admitted(StructRule::ContrL)?;
            require(ant.contains(formula), "contraction formula missing from antecedent")?;
            Ok(vec![Sequent::new(ant.plus_one(formula), suc.clone())])
        }
        Rule::ContrR { formula } => {
            admitted(StructRule::ContrR)?;
            require(suc.contains(formula), "contraction formula missing from succedent")?;
            Ok(vec![Sequent::new(ant.clone(), suc.plus_one(formula))])
        }
    }
}

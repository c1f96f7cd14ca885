//! Atomic cores of logic-free derivations.
//!
//! A logic-free derivation of `Γ => Δ` always proves an atomic
//! subsequent `Γ° => Δ°` of its endsequent through atomic sequents only,
//! at no greater height. Initial sequents contribute their principal
//! pair; a schema inference is reapplied after weakening the premiss
//! cores by any active atoms they dropped; a context-sharing cut either
//! passes a core through (when the cut atom is unused) or merges the two
//! cores around the cut atom.

use crate::calculus::{Calculus, Derivation, Rule};
use crate::syntax::{Formula, Multiset, Sequent};

use super::schema_util::instantiated_actives;
use super::weaken::weaken_to_in;
use super::{Ctx, TransformError};

/// Extracts the atomic core of a logic-free derivation. Returns the core
/// sequent together with a derivation of it whose sequents are all
/// atomic, of height at most `d`'s.
pub fn atomic_core(
    d: &Derivation,
    cal: &Calculus,
) -> Result<(Sequent, Derivation), TransformError> {
    let mut ctx = Ctx::new(cal);
    let core = atomic_core_in(d, &mut ctx)?;
    Ok((core.conclusion.clone(), core))
}

pub(crate) fn atomic_core_in(d: &Derivation, ctx: &mut Ctx) -> Result<Derivation, TransformError> {
    match &d.rule {
        Rule::Init { principal } => {
            let core = Sequent::new(
                Multiset::singleton(principal.clone()),
                Multiset::singleton(principal.clone()),
            );
            Ok(Derivation::leaf(core, d.rule.clone()))
        }
        Rule::InitBot => {
            let core = Sequent::new(
                Multiset::singleton(Formula::Bot),
                Multiset::singleton(Formula::Bot),
            );
            Ok(Derivation::leaf(core, Rule::InitBot))
        }
        Rule::Schema { name, bindings } => {
            let schema = ctx
                .cal
                .schema(name)
                .ok_or_else(|| {
                    TransformError::Precondition(format!("schema `{name}` not in the extension"))
                })?
                .clone();
            let actives = instantiated_actives(&schema, bindings)?;
            let mut premisses = Vec::new();
            let mut ctx_left = Multiset::new();
            let mut ctx_right = Multiset::new();
            for (k, p) in d.premisses.iter().enumerate() {
                let core = atomic_core_in(p, ctx)?;
                // Re-admit any active atoms the core dropped.
                let want = Sequent::new(
                    core.conclusion.ant.max(&actives.premiss_left[k]),
                    core.conclusion.suc.max(&actives.premiss_right[k]),
                );
                let full = weaken_to_in(&core, &want, ctx)?;
                ctx_left = ctx_left.sum(&want.ant.minus(&actives.premiss_left[k]));
                ctx_right = ctx_right.sum(&want.suc.minus(&actives.premiss_right[k]));
                premisses.push(full);
            }
            let conclusion = Sequent::new(
                actives.concl_left.sum(&ctx_left),
                ctx_right.sum(&actives.concl_right),
            );
            Ok(Derivation::node(conclusion, d.rule.clone(), premisses))
        }
        Rule::CutCs { formula } => {
            let left = atomic_core_in(&d.premisses[0], ctx)?;
            let right = atomic_core_in(&d.premisses[1], ctx)?;
            // Endsequents: Γ => Δ, A and A, Γ => Δ.
            let delta = d.conclusion.suc.clone();
            let gamma = d.conclusion.ant.clone();
            if left.conclusion.suc.count(formula) <= delta.count(formula) {
                // The cut occurrence of A is unused on the left.
                return Ok(left);
            }
            if right.conclusion.ant.count(formula) <= gamma.count(formula) {
                return Ok(right);
            }
            // A is atomic and used on both sides: merge the cores.
            let core_ant = left
                .conclusion
                .ant
                .max(&right.conclusion.ant.minus_one(formula));
            let core_suc = left
                .conclusion
                .suc
                .minus_one(formula)
                .max(&right.conclusion.suc);
            let lt = Sequent::new(core_ant.clone(), core_suc.plus_one(formula));
            let rt = Sequent::new(core_ant.clone(), core_suc.clone());
            let rt = Sequent::new(rt.ant.plus_one(formula), rt.suc);
            let lw = weaken_to_in(&left, &lt, ctx)?;
            let rw = weaken_to_in(&right, &rt, ctx)?;
            Ok(Derivation::node(
                Sequent::new(core_ant, core_suc),
                Rule::CutCs { formula: formula.clone() },
                vec![lw, rw],
            ))
        }
        other => Err(TransformError::Precondition(format!(
            "atomic core requires a logic-free derivation, found rule {}",
            other.name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check, Calculus, Flavor, StructRule};
    use crate::syntax::{parse_formula, parse_sequent};
    use crate::transform::{weaken, Side};

    #[test]
    fn init_with_compound_context_drops_it() {
        let cal = Calculus::bare(Flavor::Classical);
        let d = Derivation::leaf(
            parse_sequent("P, A & B => P").unwrap(),
            Rule::Init { principal: parse_formula("P").unwrap() },
        );
        let (core, dcore) = atomic_core(&d, &cal).unwrap();
        assert_eq!(core, parse_sequent("P => P").unwrap());
        assert_eq!(dcore.height(), 0);
        check(&dcore, &cal).unwrap();
    }

    #[test]
    fn weakened_intro_tree_recovers_original_core() {
        for flavor in Flavor::ALL {
            let cal = Calculus::with_equality(flavor);
            let d = crate::calculus::tests::paper_intro_derivation();
            let w = weaken(&d, Side::Left, &parse_formula("A | B").unwrap(), &cal).unwrap();
            let (core, dcore) = atomic_core(&w, &cal).unwrap();
            assert_eq!(core, parse_sequent("a=f(a), a=f(a) => a=f(f(a))").unwrap());
            assert!(core.is_subsequent_of(&w.conclusion));
            assert!(dcore.height() <= w.height());
            check(&dcore, &cal).unwrap();
        }
    }

    #[test]
    fn schema_leaf_core_keeps_active_atoms() {
        // A Ref inference above an initial sequent, with junk context.
        let cal = Calculus::with_equality(Flavor::Classical);
        let init = Derivation::leaf(
            parse_sequent("b=b, Q, P => P").unwrap(),
            Rule::Init { principal: parse_formula("P").unwrap() },
        );
        let mut bindings = crate::calculus::SchemaBindings::default();
        bindings.terms.insert("t".into(), crate::syntax::Term::param("b"));
        let d = Derivation::node(
            parse_sequent("Q, P => P").unwrap(),
            Rule::Schema { name: "ref".into(), bindings },
            vec![init],
        );
        check(&d, &cal).unwrap();
        let (core, dcore) = atomic_core(&d, &cal).unwrap();
        assert_eq!(core, parse_sequent("P => P").unwrap());
        assert!(dcore.height() <= d.height());
        check(&dcore, &cal).unwrap();
    }

    #[test]
    fn cutcs_merge_produces_atomic_derivation() {
        let cal = Calculus::with_equality(Flavor::Classical).admitting(&[StructRule::CutCs]);
        // Cut on P with both sides initial, inside compound context.
        let left = Derivation::leaf(
            parse_sequent("Q, A -> B => P, Q").unwrap(),
            Rule::Init { principal: parse_formula("Q").unwrap() },
        );
        let right = Derivation::leaf(
            parse_sequent("P, Q, A -> B => Q").unwrap(),
            Rule::Init { principal: parse_formula("Q").unwrap() },
        );
        let d = Derivation::node(
            parse_sequent("Q, A -> B => Q").unwrap(),
            Rule::CutCs { formula: parse_formula("P").unwrap() },
            vec![left, right],
        );
        check(&d, &cal).unwrap();
        let (core, dcore) = atomic_core(&d, &cal).unwrap();
        assert!(core.is_subsequent_of(&d.conclusion));
        check(&dcore, &cal).unwrap();
        // All sequents in the core derivation are atomic.
        fn all_atomic(d: &Derivation) -> bool {
            d.conclusion
                .ant
                .iter()
                .chain(d.conclusion.suc.iter())
                .all(|f| matches!(f, Formula::Atom(..) | Formula::Eq(..) | Formula::Bot))
                && d.premisses.iter().all(all_atomic)
        }
        assert!(all_atomic(&dcore));
    }
}

//! Instantiation helpers shared by the schema-aware transformations.

use crate::calculus::{instantiate_atom, AtomicRuleSchema, SchemaBindings};
use crate::syntax::Multiset;

use super::TransformError;

/// The fully instantiated active multisets of a schema instance.
pub(crate) struct Actives {
    pub premiss_left: Vec<Multiset>,
    pub premiss_right: Vec<Multiset>,
    pub concl_left: Multiset,
    pub concl_right: Multiset,
}

pub(crate) fn instantiated_actives(
    schema: &AtomicRuleSchema,
    bindings: &SchemaBindings,
) -> Result<Actives, TransformError> {
    let inst = |pats: &[crate::calculus::AtomPat]| -> Result<Multiset, TransformError> {
        let mut m = Multiset::new();
        for p in pats {
            m.insert(
                instantiate_atom(p, bindings)
                    .map_err(|e| TransformError::Precondition(e.to_string()))?,
            );
        }
        Ok(m)
    };
    Ok(Actives {
        premiss_left: schema
            .premisses
            .iter()
            .map(|p| inst(&p.left))
            .collect::<Result<_, _>>()?,
        premiss_right: schema
            .premisses
            .iter()
            .map(|p| inst(&p.right))
            .collect::<Result<_, _>>()?,
        concl_left: inst(&schema.concl_left)?,
        concl_right: inst(&schema.concl_right)?,
    })
}

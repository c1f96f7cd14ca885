//! Canonical text rendering. Formulas print in the fixed total order on
//! syntax trees (the multiset iteration order), so rendering the same
//! sequent always yields the same bytes and `parse(render(s)) == s`.

use super::{Formula, Sequent, Term};

pub fn render_term(t: &Term) -> String {
    match t {
        Term::Var(v) => v.clone(),
        Term::Param(p) => p.clone(),
        Term::Fun(f, args) => {
            let args: Vec<String> = args.iter().map(render_term).collect();
            format!("{f}({})", args.join(", "))
        }
    }
}

// Precedence levels: 0 = formula (imp, quantifier body), 1 = disjunction,
// 2 = conjunction, 3 = primary. A quantifier binds the rest of the
// formula, so it needs parentheses anywhere below level 0.
fn fmla(f: &Formula, prec: u8, out: &mut String) {
    match f {
        Formula::Atom(p, args) => {
            out.push_str(p);
            if !args.is_empty() {
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&render_term(a));
                }
                out.push(')');
            }
        }
        Formula::Eq(l, r) => {
            out.push_str(&render_term(l));
            out.push_str(" = ");
            out.push_str(&render_term(r));
        }
        Formula::Bot => out.push_str("_|_"),
        Formula::Imp(a, b) => {
            let paren = prec > 0;
            if paren {
                out.push('(');
            }
            fmla(a, 1, out);
            out.push_str(" -> ");
            fmla(b, 0, out);
            if paren {
                out.push(')');
            }
        }
        Formula::Or(a, b) => {
            let paren = prec > 1;
            if paren {
                out.push('(');
            }
            fmla(a, 1, out);
            out.push_str(" | ");
            fmla(b, 2, out);
            if paren {
                out.push(')');
            }
        }
        Formula::And(a, b) => {
            let paren = prec > 2;
            if paren {
                out.push('(');
            }
            fmla(a, 2, out);
            out.push_str(" & ");
            fmla(b, 3, out);
            if paren {
                out.push(')');
            }
        }
        Formula::Forall(x, a) | Formula::Exists(x, a) => {
            let paren = prec > 0;
            if paren {
                out.push('(');
            }
            out.push_str(if matches!(f, Formula::Forall(..)) {
                "forall "
            } else {
                "exists "
            });
            out.push_str(x);
            out.push_str(". ");
            fmla(a, 0, out);
            if paren {
                out.push(')');
            }
        }
    }
}

pub fn render_formula(f: &Formula) -> String {
    let mut out = String::new();
    fmla(f, 0, &mut out);
    out
}

pub fn render_sequent(s: &Sequent) -> String {
    let mut out = String::new();
    for (i, f) in s.ant.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        fmla(f, 0, &mut out);
    }
    if s.ant.is_empty() {
        out.push_str("=>");
    } else {
        out.push_str(" =>");
    }
    for (i, f) in s.suc.iter().enumerate() {
        out.push_str(if i == 0 { " " } else { ", " });
        fmla(f, 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    #[test]
    fn identity_renders() {
        let s = parse_sequent("P => P").unwrap();
        assert_eq!(render_sequent(&s), "P => P");
    }

    #[test]
    fn paper_example_renders() {
        let s = parse_sequent("a=f(a), a=f(a) => a=f(f(a))").unwrap();
        assert_eq!(render_sequent(&s), "a = f(a), a = f(a) => a = f(f(a))");
    }

    #[test]
    fn empty_renders() {
        let s = parse_sequent("=>").unwrap();
        assert_eq!(render_sequent(&s), "=>");
        assert_eq!(parse_sequent(&render_sequent(&s)).unwrap(), s);
    }

    #[test]
    fn nested_connectives_round_trip() {
        for text in [
            "P -> Q -> R =>",
            "(P -> Q) -> R =>",
            "P & (Q & R) =>",
            "(P | Q) & R => forall x. P(x) | Q",
            "=> (forall x. P(x)) | Q",
            "exists y. P(y) & _|_ =>",
        ] {
            let s = parse_sequent(text).unwrap();
            assert_eq!(parse_sequent(&render_sequent(&s)).unwrap(), s);
        }
    }
}

//! Formula abstract syntax, printing, and the desugaring normal form.

use std::collections::BTreeSet;
use std::fmt;

/// A term is an identifier.  Evaluation resolves it through the variable
/// assignment first and falls back to the structure's declared names, so the
/// same syntax covers bound variables, assigned free variables, and direct
/// mention of a name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(pub String);

impl Term {
    pub fn var(name: &str) -> Self {
        Term(name.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// First-order formulas over a signature.  Atomic shapes are relation
/// application, equality of terms, and the function equation `y = f(s...)`;
/// function symbols occur nowhere else.  `Vcheck` is a relativization
/// marker: quantifiers in its scope range over the structure's designated
/// sub-pool instead of the full pool.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Rel(String, Vec<Term>),
    Eq(Term, Term),
    /// `y = f(s1, ..., sn)`: first field is `y`, then the symbol, then `s`.
    FnEq(Term, String, Vec<Term>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    Vcheck(Box<Formula>),
}

impl Formula {
    pub fn and(self, other: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn negate(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn implies(self, other: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn exists(var: &str, body: Formula) -> Formula {
        Formula::Exists(var.to_string(), Box::new(body))
    }

    pub fn forall(var: &str, body: Formula) -> Formula {
        Formula::Forall(var.to_string(), Box::new(body))
    }

    pub fn vcheck(self) -> Formula {
        Formula::Vcheck(Box::new(self))
    }

    pub fn eq(s: &str, t: &str) -> Formula {
        Formula::Eq(Term::var(s), Term::var(t))
    }

    pub fn rel(name: &str, args: &[&str]) -> Formula {
        Formula::Rel(name.to_string(), args.iter().map(|a| Term::var(a)).collect())
    }

    /// Rewrites into the `{and, not, exists}` basis:
    /// `forall x. p` becomes `!exists x. !p`, `p | q` becomes `!(!p & !q)`,
    /// and `p -> q` becomes `!(p & !q)`.  Atomic formulas and the `Vcheck`
    /// marker are preserved.  No new variables are introduced, so capture is
    /// not a concern.
    #[must_use]
    pub fn desugar(&self) -> Formula {
        match self {
            Formula::Rel(..) | Formula::Eq(..) | Formula::FnEq(..) => self.clone(),
            Formula::And(p, q) => p.desugar().and(q.desugar()),
            Formula::Or(p, q) => p.desugar().negate().and(q.desugar().negate()).negate(),
            Formula::Not(p) => p.desugar().negate(),
            Formula::Implies(p, q) => p.desugar().and(q.desugar().negate()).negate(),
            Formula::Exists(x, p) => Formula::Exists(x.clone(), Box::new(p.desugar())),
            Formula::Forall(x, p) => {
                Formula::Exists(x.clone(), Box::new(p.desugar().negate())).negate()
            }
            Formula::Vcheck(p) => p.desugar().vcheck(),
        }
    }

    /// True when the formula uses only the `{and, not, exists}` basis.
    pub fn is_desugared(&self) -> bool {
        match self {
            Formula::Rel(..) | Formula::Eq(..) | Formula::FnEq(..) => true,
            Formula::And(p, q) => p.is_desugared() && q.is_desugared(),
            Formula::Or(..) | Formula::Implies(..) | Formula::Forall(..) => false,
            Formula::Not(p) | Formula::Exists(_, p) | Formula::Vcheck(p) => p.is_desugared(),
        }
    }

    /// Identifiers with at least one free occurrence.
    pub fn free_vars(&self) -> BTreeSet<String> {
        fn walk(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            let term = |t: &Term, bound: &Vec<String>, out: &mut BTreeSet<String>| {
                if !bound.iter().any(|b| b == &t.0) {
                    out.insert(t.0.clone());
                }
            };
            match f {
                Formula::Rel(_, args) => args.iter().for_each(|t| term(t, bound, out)),
                Formula::Eq(s, t) => {
                    term(s, bound, out);
                    term(t, bound, out);
                }
                Formula::FnEq(y, _, args) => {
                    term(y, bound, out);
                    args.iter().for_each(|t| term(t, bound, out));
                }
                Formula::And(p, q) | Formula::Or(p, q) | Formula::Implies(p, q) => {
                    walk(p, bound, out);
                    walk(q, bound, out);
                }
                Formula::Not(p) | Formula::Vcheck(p) => walk(p, bound, out),
                Formula::Exists(x, p) | Formula::Forall(x, p) => {
                    bound.push(x.clone());
                    walk(p, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Maximum nesting depth of connectives and quantifiers; atoms have
    /// depth 0 and the `Vcheck` marker is transparent.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Rel(..) | Formula::Eq(..) | Formula::FnEq(..) => 0,
            Formula::And(p, q) | Formula::Or(p, q) | Formula::Implies(p, q) => {
                1 + p.depth().max(q.depth())
            }
            Formula::Not(p) | Formula::Exists(_, p) | Formula::Forall(_, p) => 1 + p.depth(),
            Formula::Vcheck(p) => p.depth(),
        }
    }

    /// Renames every bound variable to `prefix0`, `prefix1`, ... in binder
    /// order, leaving free occurrences alone.  Two formulas are
    /// alpha-equivalent exactly when renaming makes them equal, and a
    /// law-abiding evaluation must not distinguish a formula from its
    /// renaming as long as `prefix` avoids the free variables.
    #[must_use]
    pub fn rename_bound(&self, prefix: &str) -> Formula {
        fn subst_term(t: &Term, map: &[(String, String)]) -> Term {
            match map.iter().rev().find(|(from, _)| from == &t.0) {
                Some((_, to)) => Term(to.clone()),
                None => t.clone(),
            }
        }
        fn walk(
            f: &Formula,
            map: &mut Vec<(String, String)>,
            next: &mut usize,
            prefix: &str,
        ) -> Formula {
            match f {
                Formula::Rel(name, args) => Formula::Rel(
                    name.clone(),
                    args.iter().map(|t| subst_term(t, map)).collect(),
                ),
                Formula::Eq(s, t) => Formula::Eq(subst_term(s, map), subst_term(t, map)),
                Formula::FnEq(y, name, args) => Formula::FnEq(
                    subst_term(y, map),
                    name.clone(),
                    args.iter().map(|t| subst_term(t, map)).collect(),
                ),
                Formula::And(p, q) => {
                    walk(p, map, next, prefix).and(walk(q, map, next, prefix))
                }
                Formula::Or(p, q) => walk(p, map, next, prefix).or(walk(q, map, next, prefix)),
                Formula::Implies(p, q) => {
                    walk(p, map, next, prefix).implies(walk(q, map, next, prefix))
                }
                Formula::Not(p) => walk(p, map, next, prefix).negate(),
                Formula::Vcheck(p) => walk(p, map, next, prefix).vcheck(),
                Formula::Exists(x, p) | Formula::Forall(x, p) => {
                    let fresh = format!("{prefix}{next}");
                    *next += 1;
                    map.push((x.clone(), fresh.clone()));
                    let body = walk(p, map, next, prefix);
                    map.pop();
                    match f {
                        Formula::Exists(..) => Formula::Exists(fresh, Box::new(body)),
                        _ => Formula::Forall(fresh, Box::new(body)),
                    }
                }
            }
        }
        walk(self, &mut Vec::new(), &mut 0, prefix)
    }
}

fn join_terms(args: &[Term]) -> String {
    args.iter()
        .map(Term::as_str)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Prints in the surface grammar.  Binary connectives and `@Vcheck` operands
/// are parenthesized unconditionally, which keeps the output unambiguous and
/// makes `parse(print(f)) == f` hold syntactically.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // `in` is a keyword, so the prefix form would not reparse.
            Formula::Rel(name, args) if name == "in" && args.len() == 2 => {
                write!(f, "{} in {}", args[0], args[1])
            }
            Formula::Rel(name, args) if args.is_empty() => write!(f, "{name}()"),
            Formula::Rel(name, args) => write!(f, "{name}({})", join_terms(args)),
            Formula::Eq(s, t) => write!(f, "{s} = {t}"),
            Formula::FnEq(y, name, args) => write!(f, "{y} = {name}({})", join_terms(args)),
            Formula::And(p, q) => write!(f, "({p} & {q})"),
            Formula::Or(p, q) => write!(f, "({p} | {q})"),
            Formula::Not(p) => match p.as_ref() {
                Formula::Rel(..) | Formula::Eq(..) | Formula::FnEq(..) => write!(f, "!({p})"),
                Formula::And(..) | Formula::Or(..) | Formula::Implies(..) | Formula::Vcheck(..) => {
                    write!(f, "!{p}")
                }
                _ => write!(f, "!({p})"),
            },
            Formula::Implies(p, q) => write!(f, "({p} -> {q})"),
            // Parenthesized so a parent `&` cannot be swallowed by the
            // maximally-right-extending body.
            Formula::Exists(x, p) => write!(f, "(exists {x}. {p})"),
            Formula::Forall(x, p) => write!(f, "(forall {x}. {p})"),
            Formula::Vcheck(p) => write!(f, "({p}) @Vcheck"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desugar_forall() {
        let f = Formula::forall("x", Formula::eq("x", "y"));
        let d = f.desugar();
        assert_eq!(
            d,
            Formula::exists("x", Formula::eq("x", "y").negate()).negate()
        );
        assert!(d.is_desugared());
        assert!(!f.is_desugared());
    }

    #[test]
    fn desugar_or_implies() {
        let p = Formula::rel("R", &["a"]);
        let q = Formula::eq("a", "b");
        let d_or = p.clone().or(q.clone()).desugar();
        assert_eq!(
            d_or,
            p.clone().negate().and(q.clone().negate()).negate()
        );
        let d_imp = p.clone().implies(q.clone()).desugar();
        assert_eq!(d_imp, p.and(q.negate()).negate());
    }

    #[test]
    fn desugar_fixpoint() {
        let f = Formula::forall(
            "x",
            Formula::rel("R", &["x"]).implies(Formula::exists("y", Formula::eq("x", "y"))),
        );
        let once = f.desugar();
        assert_eq!(once.desugar(), once);
    }

    #[test]
    fn free_vars_respect_binders() {
        let f = Formula::exists("x", Formula::eq("x", "y").and(Formula::rel("R", &["z", "x"])));
        let fv = f.free_vars();
        assert_eq!(fv.into_iter().collect::<Vec<_>>(), vec!["y", "z"]);
    }

    #[test]
    fn depth_counts_connectives() {
        assert_eq!(Formula::eq("x", "y").depth(), 0);
        let f = Formula::exists("x", Formula::eq("x", "y").negate());
        assert_eq!(f.depth(), 2);
        assert_eq!(f.clone().vcheck().depth(), 2);
    }

    #[test]
    fn rename_bound_is_capture_free() {
        let f = Formula::exists("x", Formula::eq("x", "y"))
            .and(Formula::forall("y", Formula::rel("R", &["y"])));
        let r = f.rename_bound("v");
        assert_eq!(
            r,
            Formula::exists("v0", Formula::eq("v0", "y"))
                .and(Formula::forall("v1", Formula::rel("R", &["v1"])))
        );
        // Free y survives; bound y is gone.
        assert!(r.free_vars().contains("y"));
    }

    #[test]
    fn rename_shadowing_uses_innermost_binder() {
        let f = Formula::exists("x", Formula::exists("x", Formula::eq("x", "x")));
        assert_eq!(
            f.rename_bound("v"),
            Formula::exists("v0", Formula::exists("v1", Formula::eq("v1", "v1")))
        );
    }
}

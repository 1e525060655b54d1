"""Pretty-printing back to the concrete syntax.

Output reparses to an alpha-equal tree: parentheses are inserted exactly
where the grammar demands them (mixed arrows, left operands of arrows,
lambdas in application position, and so on).
"""

from __future__ import annotations

from . import logic, syntax
from .syntax import (Ann, App, Atom, Case, CoFun, Fun, Inl, Inr, Lam, Opp,
                     Pair, Pi, Prod, Proj1, Proj2, Sigma, Split, Sum, Var)

# type precedence levels
_T_ARROW, _T_SUM, _T_PROD, _T_PREFIX, _T_ATOM = 1, 2, 3, 4, 5


def type_str(A, prec: int = 0) -> str:
    if isinstance(A, Atom):
        if not A.args:
            return A.name
        return A.name + "(" + ", ".join(term_str(t) for t in A.args) + ")"
    if isinstance(A, Opp):
        return _parens("~" + type_str(A.inner, _T_PREFIX),
                       _T_PREFIX, prec)
    if isinstance(A, Fun):
        rhs = type_str(A.cod, _T_ARROW)
        if isinstance(A.cod, CoFun):
            rhs = "(" + rhs + ")"
        s = type_str(A.dom, _T_SUM) + " -> " + rhs
        return _parens(s, _T_ARROW, prec)
    if isinstance(A, CoFun):
        rhs = type_str(A.dom, _T_ARROW)
        if isinstance(A.dom, Fun):
            rhs = "(" + rhs + ")"
        s = type_str(A.cod, _T_SUM) + " <~ " + rhs
        return _parens(s, _T_ARROW, prec)
    if isinstance(A, Sum):
        s = type_str(A.left, _T_SUM) + " + " + type_str(A.right, _T_SUM + 1)
        return _parens(s, _T_SUM, prec)
    if isinstance(A, Prod):
        s = type_str(A.left, _T_PROD) + " * " + type_str(A.right, _T_PROD + 1)
        return _parens(s, _T_PROD, prec)
    if isinstance(A, (Pi, Sigma)):
        kw = "Pi" if isinstance(A, Pi) else "Sg"
        gen = type_str(A.gen, _T_ARROW)
        if isinstance(A.gen, (Pi, Sigma)):
            gen = "(" + gen + ")"
        s = f"{kw} {A.var}:{gen}. {type_str(A.body, _T_ARROW)}"
        return _parens(s, _T_ARROW, prec)
    raise TypeError(f"not a type: {A!r}")


def _parens(s: str, level: int, prec: int) -> str:
    return "(" + s + ")" if level < prec else s


# term precedence levels
_E_OPEN, _E_APP, _E_PREFIX, _E_ATOM = 0, 1, 2, 3


def term_str(t, prec: int = 0) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lam):
        s = f"\\{t.var}:{type_str(t.dom)}. {term_str(t.body, _E_OPEN)}"
        return _parens(s, _E_OPEN, prec)
    if isinstance(t, App):
        s = term_str(t.fn, _E_APP) + " " + term_str(t.arg, _E_PREFIX)
        return _parens(s, _E_APP, prec)
    if isinstance(t, Pair):
        return f"<{term_str(t.fst)}, {term_str(t.snd)}>"
    if isinstance(t, (Proj1, Proj2, Inl, Inr)):
        kw = {Proj1: "p1", Proj2: "p2", Inl: "inl", Inr: "inr"}[type(t)]
        s = kw + " " + term_str(t.arg, _E_PREFIX)
        return _parens(s, _E_PREFIX, prec)
    if isinstance(t, Case):
        return (f"case {term_str(t.scrut, _E_APP)} of "
                f"{{ inl {t.lvar} => {term_str(t.lbranch)} "
                f"| inr {t.rvar} => {term_str(t.rbranch)} }}")
    if isinstance(t, Split):
        s = (f"split {term_str(t.scrut, _E_APP)} as "
             f"({t.var1}, {t.var2}) => {term_str(t.body, _E_OPEN)}")
        return _parens(s, _E_OPEN, prec)
    if isinstance(t, Ann):
        return f"({term_str(t.term)} : {type_str(t.type)})"
    raise TypeError(f"not a term: {t!r}")


# formula precedence levels
_F_ARROW, _F_OR, _F_AND, _F_NEG, _F_ATOM = 1, 2, 3, 4, 5


def formula_str(f, prec: int = 0) -> str:
    if isinstance(f, logic.Pred):
        if not f.args:
            return f.name
        return f.name + "(" + ", ".join(f.args) + ")"
    if isinstance(f, logic.Impl):
        rhs = formula_str(f.rhs, _F_ARROW)
        if isinstance(f.rhs, logic.CoImpl):
            rhs = "(" + rhs + ")"
        s = formula_str(f.lhs, _F_OR) + " => " + rhs
        return _parens(s, _F_ARROW, prec)
    if isinstance(f, logic.CoImpl):
        rhs = formula_str(f.rhs, _F_ARROW)
        if isinstance(f.rhs, logic.Impl):
            rhs = "(" + rhs + ")"
        s = formula_str(f.lhs, _F_OR) + " <~ " + rhs
        return _parens(s, _F_ARROW, prec)
    if isinstance(f, logic.Or):
        s = (formula_str(f.lhs, _F_OR) + " | "
             + formula_str(f.rhs, _F_OR + 1))
        return _parens(s, _F_OR, prec)
    if isinstance(f, logic.And):
        s = (formula_str(f.lhs, _F_AND) + " & "
             + formula_str(f.rhs, _F_AND + 1))
        return _parens(s, _F_AND, prec)
    if isinstance(f, logic.Neg):
        return _parens("~" + formula_str(f.body, _F_NEG), _F_NEG, prec)
    if isinstance(f, (logic.Forall, logic.Exists)):
        kw = "all" if isinstance(f, logic.Forall) else "ex"
        s = f"{kw} {f.var}:{f.sort}. {formula_str(f.body, _F_ARROW)}"
        return _parens(s, _F_ARROW, prec)
    raise TypeError(f"not a formula: {f!r}")


def directive_str(d) -> str:
    from . import script as s
    basis_names = {v: k for k, v in _basis_names().items()}
    if isinstance(d, s.AtomDecl):
        return f"atom {d.name};"
    if isinstance(d, s.PredDecl):
        args = ", ".join(type_str(a) for a in d.arg_types)
        return f"pred {d.name}({args});"
    if isinstance(d, s.Assume):
        return f"assume {d.var} : {type_str(d.type)};"
    if isinstance(d, s.CheckDirective):
        return f"check {term_str(d.term)} : {type_str(d.type)};"
    if isinstance(d, s.InferDirective):
        return f"infer {term_str(d.term)};"
    if isinstance(d, s.DualDirective):
        return f"dual {type_str(d.type)};"
    if isinstance(d, s.OnfDirective):
        return f"onf {type_str(d.type)};"
    if isinstance(d, s.EqualDirective):
        return f"equal {type_str(d.left)} {type_str(d.right)};"
    if isinstance(d, s.ExpandDirective):
        return f"expand {type_str(d.type)} basis {basis_names[d.basis]};"
    if isinstance(d, s.TranslateDirective):
        return f"translate {formula_str(d.formula)};"
    if isinstance(d, s.NnfDirective):
        return f"nnf {formula_str(d.formula)};"
    if isinstance(d, s.InhabitDirective):
        return f"inhabit {type_str(d.type)} depth {d.depth};"
    raise TypeError(f"not a directive: {d!r}")


def _basis_names():
    from .duality import BASIS_NAMES
    return BASIS_NAMES


def script_str(sc) -> str:
    return "\n".join(directive_str(d) for d in sc.directives) + "\n"


def context_str(ctx) -> str:
    from .kernel import TermDecl
    parts = []
    for e in ctx.entries:
        if isinstance(e, TermDecl):
            parts.append(f"{e.name} : {type_str(e.type)}")
        else:
            if e.telescope:
                tel = ", ".join(f"{v}:{type_str(s)}" for v, s in e.telescope)
                parts.append(f"{e.name}({tel}) : {e.universe}")
            else:
                parts.append(f"{e.name} : {e.universe}")
    return ", ".join(parts)

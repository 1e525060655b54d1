"""Abstract syntax: type and term trees, binding, substitution, reduction.

Types are built from named atoms (type variables, possibly applied to term
arguments when they stand for dependent families) and eight constructors:
functions, co-functions, products, sums, Pi, Sigma and the opposite-type
marker.  Terms are the usual lambda-calculus forms with pairs, injections,
case and split.  Everything is an immutable dataclass; binders are named
and freshened on demand inside substitution, so alpha_eq is the only
equality client code should rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import NormalizationOverflow


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------

class TypeExpr:
    """Base class of type expressions."""

    def __str__(self) -> str:
        from .printer import type_str
        return type_str(self)


class TermExpr:
    """Base class of term expressions."""

    def __str__(self) -> str:
        from .printer import term_str
        return term_str(self)


Expr = Union[TypeExpr, TermExpr]


@dataclass(frozen=True)
class Atom(TypeExpr):
    """A type variable, or a dependent family applied to term arguments."""
    name: str
    args: "tuple[TermExpr, ...]" = ()


@dataclass(frozen=True)
class Fun(TypeExpr):
    """Function type: dom -> cod."""
    dom: TypeExpr
    cod: TypeExpr


@dataclass(frozen=True)
class CoFun(TypeExpr):
    """Co-function type, written cod <~ dom ("cod excludes dom")."""
    cod: TypeExpr
    dom: TypeExpr


@dataclass(frozen=True)
class Prod(TypeExpr):
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class Sum(TypeExpr):
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class Pi(TypeExpr):
    """Dependent function type Pi var:gen. body; gen is the generating type."""
    var: str
    gen: TypeExpr
    body: TypeExpr


@dataclass(frozen=True)
class Sigma(TypeExpr):
    """Dependent pair type Sg var:gen. body."""
    var: str
    gen: TypeExpr
    body: TypeExpr


@dataclass(frozen=True)
class Opp(TypeExpr):
    """Opposite type ~A: the type of refutations of A."""
    inner: TypeExpr


@dataclass(frozen=True)
class Var(TermExpr):
    name: str


@dataclass(frozen=True)
class Lam(TermExpr):
    """Annotated abstraction \\var:dom. body."""
    var: str
    dom: TypeExpr
    body: TermExpr


@dataclass(frozen=True)
class App(TermExpr):
    fn: TermExpr
    arg: TermExpr


@dataclass(frozen=True)
class Pair(TermExpr):
    fst: TermExpr
    snd: TermExpr


@dataclass(frozen=True)
class Proj1(TermExpr):
    arg: TermExpr


@dataclass(frozen=True)
class Proj2(TermExpr):
    arg: TermExpr


@dataclass(frozen=True)
class Inl(TermExpr):
    arg: TermExpr


@dataclass(frozen=True)
class Inr(TermExpr):
    arg: TermExpr


@dataclass(frozen=True)
class Case(TermExpr):
    """case scrut of { inl lvar => lbranch | inr rvar => rbranch }."""
    scrut: TermExpr
    lvar: str
    lbranch: TermExpr
    rvar: str
    rbranch: TermExpr


@dataclass(frozen=True)
class Split(TermExpr):
    """split scrut as (var1, var2) => body."""
    scrut: TermExpr
    var1: str
    var2: str
    body: TermExpr


@dataclass(frozen=True)
class Ann(TermExpr):
    """Explicit annotation (term : type)."""
    term: TermExpr
    type: TypeExpr


# ---------------------------------------------------------------------------
# Free variables and name collection
# ---------------------------------------------------------------------------

def free_vars(e: Expr) -> frozenset:
    """Free term variables of a type or term.

    Atom names are type constants resolved through the context, never term
    variables, so they do not appear here; only their arguments contribute.
    """
    if isinstance(e, Atom):
        out = frozenset()
        for a in e.args:
            out |= free_vars(a)
        return out
    if isinstance(e, Fun):
        return free_vars(e.dom) | free_vars(e.cod)
    if isinstance(e, CoFun):
        return free_vars(e.cod) | free_vars(e.dom)
    if isinstance(e, (Prod, Sum)):
        return free_vars(e.left) | free_vars(e.right)
    if isinstance(e, (Pi, Sigma)):
        return free_vars(e.gen) | (free_vars(e.body) - {e.var})
    if isinstance(e, Opp):
        return free_vars(e.inner)

    if isinstance(e, Var):
        return frozenset((e.name,))
    if isinstance(e, Lam):
        return free_vars(e.dom) | (free_vars(e.body) - {e.var})
    if isinstance(e, App):
        return free_vars(e.fn) | free_vars(e.arg)
    if isinstance(e, Pair):
        return free_vars(e.fst) | free_vars(e.snd)
    if isinstance(e, (Proj1, Proj2, Inl, Inr)):
        return free_vars(e.arg)
    if isinstance(e, Case):
        return (free_vars(e.scrut)
                | (free_vars(e.lbranch) - {e.lvar})
                | (free_vars(e.rbranch) - {e.rvar}))
    if isinstance(e, Split):
        return free_vars(e.scrut) | (free_vars(e.body) - {e.var1, e.var2})
    if isinstance(e, Ann):
        return free_vars(e.term) | free_vars(e.type)
    raise TypeError(f"not an expression: {e!r}")


def all_names(e: Expr) -> frozenset:
    """Every identifier occurring in e: variables, binders and atom names.

    Used to seed fresh-name generation so new binders never collide.
    """
    out = set()

    def walk(x):
        if isinstance(x, Atom):
            out.add(x.name)
            for a in x.args:
                walk(a)
        elif isinstance(x, Fun):
            walk(x.dom); walk(x.cod)
        elif isinstance(x, CoFun):
            walk(x.cod); walk(x.dom)
        elif isinstance(x, (Prod, Sum)):
            walk(x.left); walk(x.right)
        elif isinstance(x, (Pi, Sigma)):
            out.add(x.var)
            walk(x.gen); walk(x.body)
        elif isinstance(x, Opp):
            walk(x.inner)
        elif isinstance(x, Var):
            out.add(x.name)
        elif isinstance(x, Lam):
            out.add(x.var)
            walk(x.dom); walk(x.body)
        elif isinstance(x, App):
            walk(x.fn); walk(x.arg)
        elif isinstance(x, Pair):
            walk(x.fst); walk(x.snd)
        elif isinstance(x, (Proj1, Proj2, Inl, Inr)):
            walk(x.arg)
        elif isinstance(x, Case):
            out.add(x.lvar); out.add(x.rvar)
            walk(x.scrut); walk(x.lbranch); walk(x.rbranch)
        elif isinstance(x, Split):
            out.add(x.var1); out.add(x.var2)
            walk(x.scrut); walk(x.body)
        elif isinstance(x, Ann):
            walk(x.term); walk(x.type)
        else:
            raise TypeError(f"not an expression: {x!r}")

    walk(e)
    return frozenset(out)


def fresh_name(base: str, avoid) -> str:
    """Deterministic fresh identifier: base, then base1, base2, ..."""
    if base not in avoid:
        return base
    i = 1
    while f"{base}{i}" in avoid:
        i += 1
    return f"{base}{i}"


# ---------------------------------------------------------------------------
# Substitution (capture-avoiding)
# ---------------------------------------------------------------------------

def _avoid_capture(binder: str, body: TermExpr, x: str, u: TermExpr):
    """Rename binder if substituting u for x under it would capture."""
    if binder == x:
        # shadowed: substitution must not proceed into the body at all
        return binder, body, False
    if binder in free_vars(u) and x in free_vars(body):
        fresh = fresh_name(binder, free_vars(u) | free_vars(body) | {x})
        return fresh, subst_term(body, binder, Var(fresh)), True
    return binder, body, True


def subst_term(t: TermExpr, x: str, u: TermExpr) -> TermExpr:
    """t with every free occurrence of x replaced by u, capture-avoiding."""
    if isinstance(t, Var):
        return u if t.name == x else t
    if isinstance(t, Lam):
        dom = subst_type(t.dom, x, u)
        var, body, go = _avoid_capture(t.var, t.body, x, u)
        return Lam(var, dom, subst_term(body, x, u) if go else body)
    if isinstance(t, App):
        return App(subst_term(t.fn, x, u), subst_term(t.arg, x, u))
    if isinstance(t, Pair):
        return Pair(subst_term(t.fst, x, u), subst_term(t.snd, x, u))
    if isinstance(t, Proj1):
        return Proj1(subst_term(t.arg, x, u))
    if isinstance(t, Proj2):
        return Proj2(subst_term(t.arg, x, u))
    if isinstance(t, Inl):
        return Inl(subst_term(t.arg, x, u))
    if isinstance(t, Inr):
        return Inr(subst_term(t.arg, x, u))
    if isinstance(t, Case):
        scrut = subst_term(t.scrut, x, u)
        lvar, lbranch, lgo = _avoid_capture(t.lvar, t.lbranch, x, u)
        rvar, rbranch, rgo = _avoid_capture(t.rvar, t.rbranch, x, u)
        return Case(scrut,
                    lvar, subst_term(lbranch, x, u) if lgo else lbranch,
                    rvar, subst_term(rbranch, x, u) if rgo else rbranch)
    if isinstance(t, Split):
        scrut = subst_term(t.scrut, x, u)
        if x in (t.var1, t.var2):
            return Split(scrut, t.var1, t.var2, t.body)
        body, v1, v2 = t.body, t.var1, t.var2
        taken = free_vars(u) | free_vars(body) | {x}
        if v1 in free_vars(u) and x in free_vars(body):
            nv1 = fresh_name(v1, taken | {v2})
            body = subst_term(body, v1, Var(nv1))
            v1 = nv1
        if v2 in free_vars(u) and x in free_vars(body):
            nv2 = fresh_name(v2, taken | {v1})
            body = subst_term(body, v2, Var(nv2))
            v2 = nv2
        return Split(scrut, v1, v2, subst_term(body, x, u))
    if isinstance(t, Ann):
        return Ann(subst_term(t.term, x, u), subst_type(t.type, x, u))
    raise TypeError(f"not a term: {t!r}")


def subst_type(A: TypeExpr, x: str, u: TermExpr) -> TypeExpr:
    """A with u substituted for the term variable x inside atom arguments."""
    if isinstance(A, Atom):
        if not A.args:
            return A
        return Atom(A.name, tuple(subst_term(a, x, u) for a in A.args))
    if isinstance(A, Fun):
        return Fun(subst_type(A.dom, x, u), subst_type(A.cod, x, u))
    if isinstance(A, CoFun):
        return CoFun(subst_type(A.cod, x, u), subst_type(A.dom, x, u))
    if isinstance(A, Prod):
        return Prod(subst_type(A.left, x, u), subst_type(A.right, x, u))
    if isinstance(A, Sum):
        return Sum(subst_type(A.left, x, u), subst_type(A.right, x, u))
    if isinstance(A, (Pi, Sigma)):
        gen = subst_type(A.gen, x, u)
        cls = type(A)
        if A.var == x:
            return cls(A.var, gen, A.body)
        var, body = A.var, A.body
        if var in free_vars(u) and x in free_vars(body):
            fresh = fresh_name(var, free_vars(u) | free_vars(body) | {x})
            body = _rename_type_var(body, var, fresh)
            var = fresh
        return cls(var, gen, subst_type(body, x, u))
    if isinstance(A, Opp):
        return Opp(subst_type(A.inner, x, u))
    raise TypeError(f"not a type: {A!r}")


def _rename_type_var(A: TypeExpr, old: str, new: str) -> TypeExpr:
    return subst_type(A, old, Var(new))


# ---------------------------------------------------------------------------
# Alpha-equality
# ---------------------------------------------------------------------------

def alpha_eq(a: Expr, b: Expr) -> bool:
    """Structural equality up to consistent renaming of bound variables."""
    return _alpha(a, b, {}, {}, 0)


def _avar(name, env):
    return env.get(name, ("free", name))


def _alpha(a, b, envl, envr, depth) -> bool:
    if type(a) is not type(b):
        return False

    if isinstance(a, Atom):
        return (a.name == b.name and len(a.args) == len(b.args)
                and all(_alpha(x, y, envl, envr, depth)
                        for x, y in zip(a.args, b.args)))
    if isinstance(a, Fun):
        return (_alpha(a.dom, b.dom, envl, envr, depth)
                and _alpha(a.cod, b.cod, envl, envr, depth))
    if isinstance(a, CoFun):
        return (_alpha(a.cod, b.cod, envl, envr, depth)
                and _alpha(a.dom, b.dom, envl, envr, depth))
    if isinstance(a, (Prod, Sum)):
        return (_alpha(a.left, b.left, envl, envr, depth)
                and _alpha(a.right, b.right, envl, envr, depth))
    if isinstance(a, (Pi, Sigma)):
        if not _alpha(a.gen, b.gen, envl, envr, depth):
            return False
        el = dict(envl); el[a.var] = depth
        er = dict(envr); er[b.var] = depth
        return _alpha(a.body, b.body, el, er, depth + 1)
    if isinstance(a, Opp):
        return _alpha(a.inner, b.inner, envl, envr, depth)

    if isinstance(a, Var):
        return _avar(a.name, envl) == _avar(b.name, envr)
    if isinstance(a, Lam):
        if not _alpha(a.dom, b.dom, envl, envr, depth):
            return False
        el = dict(envl); el[a.var] = depth
        er = dict(envr); er[b.var] = depth
        return _alpha(a.body, b.body, el, er, depth + 1)
    if isinstance(a, App):
        return (_alpha(a.fn, b.fn, envl, envr, depth)
                and _alpha(a.arg, b.arg, envl, envr, depth))
    if isinstance(a, Pair):
        return (_alpha(a.fst, b.fst, envl, envr, depth)
                and _alpha(a.snd, b.snd, envl, envr, depth))
    if isinstance(a, (Proj1, Proj2, Inl, Inr)):
        return _alpha(a.arg, b.arg, envl, envr, depth)
    if isinstance(a, Case):
        if not _alpha(a.scrut, b.scrut, envl, envr, depth):
            return False
        el = dict(envl); el[a.lvar] = depth
        er = dict(envr); er[b.lvar] = depth
        if not _alpha(a.lbranch, b.lbranch, el, er, depth + 1):
            return False
        el = dict(envl); el[a.rvar] = depth
        er = dict(envr); er[b.rvar] = depth
        return _alpha(a.rbranch, b.rbranch, el, er, depth + 1)
    if isinstance(a, Split):
        if not _alpha(a.scrut, b.scrut, envl, envr, depth):
            return False
        el = dict(envl); el[a.var1] = depth; el[a.var2] = depth + 1
        er = dict(envr); er[b.var1] = depth; er[b.var2] = depth + 1
        return _alpha(a.body, b.body, el, er, depth + 2)
    if isinstance(a, Ann):
        return (_alpha(a.term, b.term, envl, envr, depth)
                and _alpha(a.type, b.type, envl, envr, depth))
    raise TypeError(f"not an expression: {a!r}")


# ---------------------------------------------------------------------------
# Untyped reduction
# ---------------------------------------------------------------------------

DEFAULT_FUEL = 100_000


def normalize_term(t: TermExpr,
                   type_norm: "Optional[Callable[[TypeExpr], TypeExpr]]" = None,
                   fuel: int = DEFAULT_FUEL) -> TermExpr:
    """Full beta normal form, plus the two identity contractions
    case c of {inl x => inl x | inr y => inr y}  ==>  c
    split c as (x, y) => <x, y>                  ==>  c
    and erasure of annotations.

    Both contractions are sound wherever the redex is well typed, so this
    reduction is usable untyped.  type_norm, when given, is applied to the
    types embedded in the term (lambda domain annotations); equality of
    normal forms is then alpha_eq.  Fuel bounds the number of contraction
    steps so that ill-typed input fails loudly instead of looping.
    """
    budget = [fuel]

    def spend():
        budget[0] -= 1
        if budget[0] < 0:
            raise NormalizationOverflow(
                f"term normalization exceeded {fuel} steps")

    def tnorm(T):
        return type_norm(T) if type_norm is not None else T

    def norm(t):
        if isinstance(t, Var):
            return t
        if isinstance(t, Lam):
            return Lam(t.var, tnorm(t.dom), norm(t.body))
        if isinstance(t, App):
            fn = norm(t.fn)
            arg = norm(t.arg)
            if isinstance(fn, Lam):
                spend()
                return norm(subst_term(fn.body, fn.var, arg))
            return App(fn, arg)
        if isinstance(t, Pair):
            return Pair(norm(t.fst), norm(t.snd))
        if isinstance(t, Proj1):
            arg = norm(t.arg)
            if isinstance(arg, Pair):
                spend()
                return arg.fst
            return Proj1(arg)
        if isinstance(t, Proj2):
            arg = norm(t.arg)
            if isinstance(arg, Pair):
                spend()
                return arg.snd
            return Proj2(arg)
        if isinstance(t, Inl):
            return Inl(norm(t.arg))
        if isinstance(t, Inr):
            return Inr(norm(t.arg))
        if isinstance(t, Case):
            scrut = norm(t.scrut)
            if isinstance(scrut, Inl):
                spend()
                return norm(subst_term(t.lbranch, t.lvar, scrut.arg))
            if isinstance(scrut, Inr):
                spend()
                return norm(subst_term(t.rbranch, t.rvar, scrut.arg))
            lbranch = norm(t.lbranch)
            rbranch = norm(t.rbranch)
            if lbranch == Inl(Var(t.lvar)) and rbranch == Inr(Var(t.rvar)):
                spend()
                return scrut
            return Case(scrut, t.lvar, lbranch, t.rvar, rbranch)
        if isinstance(t, Split):
            scrut = norm(t.scrut)
            if isinstance(scrut, Pair):
                spend()
                body = subst_term(t.body, t.var1, scrut.fst)
                body = subst_term(body, t.var2, scrut.snd)
                return norm(body)
            body = norm(t.body)
            if t.var1 != t.var2 and body == Pair(Var(t.var1), Var(t.var2)):
                spend()
                return scrut
            return Split(scrut, t.var1, t.var2, body)
        if isinstance(t, Ann):
            return norm(t.term)
        raise TypeError(f"not a term: {t!r}")

    return norm(t)

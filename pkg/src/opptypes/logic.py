"""Many-sorted formulas with constructive negation and co-implication,
translated into the type theory.

The translation sends implication to the function type, co-implication to
the co-function type, conjunction and disjunction to products and sums,
negation to the opposite constructor, and quantifiers to Pi and Sigma over
their sort.  Negation normal form pushes negations to the atoms; the
implication clause uses the contraposed co-implication reading

    ~(A => B)   ==>   ~B <~ ~A

which mirrors the type identity ~(A -> B) = ~B <~ ~A.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import SortError
from .kernel import Context, EMPTY, TermDecl, TypeConstDecl, U0, type_equal
from .syntax import (Atom, CoFun, Fun, Opp, Pi, Prod, Sigma, Sum, TypeExpr,
                     Var)


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

class Formula:
    def __str__(self) -> str:
        from .printer import formula_str
        return formula_str(self)


@dataclass(frozen=True)
class Pred(Formula):
    """Atomic formula: a predicate applied to sorted variables."""
    name: str
    args: Tuple[str, ...] = ()


@dataclass(frozen=True)
class Impl(Formula):
    """lhs => rhs."""
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class CoImpl(Formula):
    """lhs <~ rhs: lhs excludes rhs."""
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    sort: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    sort: str
    body: Formula


@dataclass
class Signature:
    """Sorts plus predicate arities.  A nullary predicate is an atomic
    proposition; its translation is a plain type variable."""
    sorts: frozenset
    predicates: Dict[str, Tuple[str, ...]]

    def __init__(self, sorts=(), predicates=None):
        self.sorts = frozenset(sorts)
        self.predicates = dict(predicates or {})
        for name, arity in self.predicates.items():
            for s in arity:
                if s not in self.sorts:
                    raise SortError(
                        f"predicate {name} uses undeclared sort {s}")


# ---------------------------------------------------------------------------
# Sort checking
# ---------------------------------------------------------------------------

def check_sorts(sig: Signature, f: Formula) -> Dict[str, str]:
    """Validate f against sig; return the sorts of its free variables."""
    free: Dict[str, str] = {}

    def walk(g: Formula, bound: Dict[str, str]):
        if isinstance(g, Pred):
            if g.name not in sig.predicates:
                raise SortError(f"undeclared predicate: {g.name}")
            arity = sig.predicates[g.name]
            if len(g.args) != len(arity):
                raise SortError(
                    f"predicate {g.name} expects {len(arity)} argument(s), "
                    f"got {len(g.args)}")
            for v, s in zip(g.args, arity):
                seen = bound.get(v, free.get(v))
                if seen is None:
                    free[v] = s
                elif seen != s:
                    raise SortError(
                        f"variable {v} used at sorts {seen} and {s}")
        elif isinstance(g, (Impl, CoImpl, And, Or)):
            walk(g.lhs, bound)
            walk(g.rhs, bound)
        elif isinstance(g, Neg):
            walk(g.body, bound)
        elif isinstance(g, (Forall, Exists)):
            if g.sort not in sig.sorts:
                raise SortError(f"undeclared sort: {g.sort}")
            inner = dict(bound)
            inner[g.var] = g.sort
            walk(g.body, inner)
        else:
            raise SortError(f"not a formula: {g!r}")

    walk(f, {})
    return free


# ---------------------------------------------------------------------------
# Translation
# ---------------------------------------------------------------------------

def translate(sig: Signature, f: Formula) -> Tuple[Context, TypeExpr]:
    """Propositions-as-types translation of f over sig.

    The returned context declares every sort as a small type constant,
    every predicate as a dependent family over its sorts, and the free
    variables of f as terms of their sorts.
    """
    free = check_sorts(sig, f)
    ctx = _signature_context(sig)
    for v in _free_occurrence_order(f, free):
        ctx = ctx.extended(TermDecl(v, Atom(free[v])))
    return ctx, _formula_type(f)


def translation_context(sig: Signature, *formulas: Formula) -> Context:
    """One context covering several formulas (shared sorts and variables)."""
    merged: Dict[str, str] = {}
    order = []
    for f in formulas:
        free = check_sorts(sig, f)
        for v in _free_occurrence_order(f, free):
            if v in merged:
                if merged[v] != free[v]:
                    raise SortError(
                        f"variable {v} used at sorts {merged[v]} "
                        f"and {free[v]}")
            else:
                merged[v] = free[v]
                order.append(v)
    ctx = _signature_context(sig)
    for v in order:
        ctx = ctx.extended(TermDecl(v, Atom(merged[v])))
    return ctx


def _signature_context(sig: Signature) -> Context:
    ctx = EMPTY
    for s in sorted(sig.sorts):
        ctx = ctx.extended(TypeConstDecl(s, (), U0))
    for p in sorted(sig.predicates):
        telescope = tuple(
            (f"x{i + 1}", Atom(s))
            for i, s in enumerate(sig.predicates[p]))
        ctx = ctx.extended(TypeConstDecl(p, telescope, U0))
    return ctx


def _free_occurrence_order(f: Formula, free: Dict[str, str]):
    order = []

    def walk(g: Formula, bound):
        if isinstance(g, Pred):
            for v in g.args:
                if v not in bound and v in free and v not in order:
                    order.append(v)
        elif isinstance(g, (Impl, CoImpl, And, Or)):
            walk(g.lhs, bound)
            walk(g.rhs, bound)
        elif isinstance(g, Neg):
            walk(g.body, bound)
        elif isinstance(g, (Forall, Exists)):
            walk(g.body, bound | {g.var})

    walk(f, frozenset())
    return order


def _formula_type(f: Formula) -> TypeExpr:
    if isinstance(f, Pred):
        return Atom(f.name, tuple(Var(v) for v in f.args))
    if isinstance(f, Impl):
        return Fun(_formula_type(f.lhs), _formula_type(f.rhs))
    if isinstance(f, CoImpl):
        return CoFun(_formula_type(f.lhs), _formula_type(f.rhs))
    if isinstance(f, And):
        return Prod(_formula_type(f.lhs), _formula_type(f.rhs))
    if isinstance(f, Or):
        return Sum(_formula_type(f.lhs), _formula_type(f.rhs))
    if isinstance(f, Neg):
        return Opp(_formula_type(f.body))
    if isinstance(f, Forall):
        return Pi(f.var, Atom(f.sort), _formula_type(f.body))
    if isinstance(f, Exists):
        return Sigma(f.var, Atom(f.sort), _formula_type(f.body))
    raise SortError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Negation normal form
# ---------------------------------------------------------------------------

def formula_nnf(f: Formula) -> Formula:
    """Push negations to the atoms.

    ~(A & B) => ~A | ~B        ~(all x:s. A) => ex x:s. ~A
    ~(A | B) => ~A & ~B        ~(ex x:s. A)  => all x:s. ~A
    ~~A => A                   ~(A => B) => ~B <~ ~A
                               ~(B <~ A) => ~A => ~B
    """
    if isinstance(f, Pred):
        return f
    if isinstance(f, Impl):
        return Impl(formula_nnf(f.lhs), formula_nnf(f.rhs))
    if isinstance(f, CoImpl):
        return CoImpl(formula_nnf(f.lhs), formula_nnf(f.rhs))
    if isinstance(f, And):
        return And(formula_nnf(f.lhs), formula_nnf(f.rhs))
    if isinstance(f, Or):
        return Or(formula_nnf(f.lhs), formula_nnf(f.rhs))
    if isinstance(f, Forall):
        return Forall(f.var, f.sort, formula_nnf(f.body))
    if isinstance(f, Exists):
        return Exists(f.var, f.sort, formula_nnf(f.body))
    if isinstance(f, Neg):
        g = f.body
        if isinstance(g, Pred):
            return f
        if isinstance(g, Neg):
            return formula_nnf(g.body)
        if isinstance(g, And):
            return Or(formula_nnf(Neg(g.lhs)), formula_nnf(Neg(g.rhs)))
        if isinstance(g, Or):
            return And(formula_nnf(Neg(g.lhs)), formula_nnf(Neg(g.rhs)))
        if isinstance(g, Impl):
            return CoImpl(formula_nnf(Neg(g.rhs)), formula_nnf(Neg(g.lhs)))
        if isinstance(g, CoImpl):
            return Impl(formula_nnf(Neg(g.rhs)), formula_nnf(Neg(g.lhs)))
        if isinstance(g, Forall):
            return Exists(g.var, g.sort, formula_nnf(Neg(g.body)))
        if isinstance(g, Exists):
            return Forall(g.var, g.sort, formula_nnf(Neg(g.body)))
    raise SortError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Strong equivalence (sound under-approximation)
# ---------------------------------------------------------------------------

def strong_equiv_check(sig: Signature, f: Formula, g: Formula) -> bool:
    """True iff the translations of f and g are type-equal and so are the
    translations of their negations.

    This is sound for strong equivalence through the correspondence but
    deliberately incomplete: it is a normal-form comparison, not a proof
    search, so e.g. A & A and A are strongly equivalent as formulas yet
    rejected here because A * A and A are not equal types.
    """
    ctx = translation_context(sig, f, g)
    if not type_equal(ctx, _formula_type(f), _formula_type(g)):
        return False
    return type_equal(ctx, _formula_type(Neg(f)), _formula_type(Neg(g)))

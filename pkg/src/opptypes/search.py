"""Bounded, exhaustive inhabitation search.

The searcher enumerates beta-normal inhabitants in spine form: it either
builds an elimination chain starting from a context variable, or applies
an introduction rule to the goal, each step consuming one unit of depth.
Atoms and opposite atoms have no introduction rule, so they can only be
reached through the context.  Up to the depth bound the enumeration is
exhaustive over the rule schemas; an empty result is therefore evidence
of non-inhabitation at that depth, which is what the paraconsistency and
non-collapse tests rely on.  Rule order (assumptions left to right, then
introductions) is fixed, so results are deterministic.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .duality import onf
from .errors import DepthCapExceeded
from .kernel import (Context, TermDecl, U0, _equiv, _pair_components,
                     check_formation)
from .syntax import (App, Case, CoFun, Fun, Inl, Inr, Lam, Pair, Pi, Prod,
                     Proj1, Proj2, Sigma, Sum, TermExpr, TypeExpr, Var,
                     fresh_name, subst_type)

DEFAULT_DEPTH_CAP = 8


def bounded_inhabit(ctx: Context, A: TypeExpr, depth: int,
                    cap: int = DEFAULT_DEPTH_CAP) -> Optional[TermExpr]:
    """First inhabitant of A in ctx found within the depth bound, or None.

    Depth counts rule applications along a branch of the term.  Any term
    returned checks against A in the kernel.
    """
    if depth > cap:
        raise DepthCapExceeded(f"depth {depth} exceeds the cap of {cap}")
    check_formation(ctx, A, U0)
    return next(iter_inhabitants(ctx, onf(A), depth), None)


def iter_inhabitants(ctx: Context, goal: TypeExpr,
                     depth: int) -> Iterator[TermExpr]:
    """Enumerate all spine-form inhabitants of a normal goal up to depth."""
    if depth <= 0:
        return

    for decl in ctx.term_decls():
        yield from _eliminate(ctx, Var(decl.name), onf(decl.type),
                              goal, depth - 1)

    if isinstance(goal, Fun):
        x = fresh_name("x", ctx.names)
        ctx2 = ctx.extended(TermDecl(x, goal.dom))
        for body in iter_inhabitants(ctx2, goal.cod, depth - 1):
            yield Lam(x, goal.dom, body)
    elif isinstance(goal, Pi):
        x = fresh_name(goal.var, ctx.names)
        body_type = onf(subst_type(goal.body, goal.var, Var(x)))
        ctx2 = ctx.extended(TermDecl(x, goal.gen))
        for body in iter_inhabitants(ctx2, body_type, depth - 1):
            yield Lam(x, goal.gen, body)
    elif isinstance(goal, (Prod, CoFun, Sigma)):
        first_type, _ = _pair_components(goal, Var("_"))
        for fst in iter_inhabitants(ctx, first_type, depth - 1):
            _, snd_type = _pair_components(goal, fst)
            for snd in iter_inhabitants(ctx, snd_type, depth - 1):
                yield Pair(fst, snd)
    elif isinstance(goal, Sum):
        for arg in iter_inhabitants(ctx, goal.left, depth - 1):
            yield Inl(arg)
        for arg in iter_inhabitants(ctx, goal.right, depth - 1):
            yield Inr(arg)
    # atoms and opposite atoms: no introduction rule


def _eliminate(ctx: Context, head: TermExpr, head_type: TypeExpr,
               goal: TypeExpr, depth: int) -> Iterator[TermExpr]:
    """Extend an elimination spine of the given type toward the goal."""
    if _equiv(head_type, goal):
        yield head
    if depth <= 0:
        return

    if isinstance(head_type, Fun):
        for arg in iter_inhabitants(ctx, head_type.dom, depth):
            yield from _eliminate(ctx, App(head, arg), head_type.cod,
                                  goal, depth - 1)
    elif isinstance(head_type, Pi):
        for arg in iter_inhabitants(ctx, head_type.gen, depth):
            res = onf(subst_type(head_type.body, head_type.var, arg))
            yield from _eliminate(ctx, App(head, arg), res, goal, depth - 1)
    elif isinstance(head_type, (Prod, CoFun, Sigma)):
        c1, c2 = _pair_components(head_type, Proj1(head))
        yield from _eliminate(ctx, Proj1(head), c1, goal, depth - 1)
        yield from _eliminate(ctx, Proj2(head), c2, goal, depth - 1)
    elif isinstance(head_type, Sum):
        lv = fresh_name("w", ctx.names)
        rv = fresh_name("w", ctx.names)
        ctxl = ctx.extended(TermDecl(lv, head_type.left))
        ctxr = ctx.extended(TermDecl(rv, head_type.right))
        for lbody in iter_inhabitants(ctxl, goal, depth - 1):
            for rbody in iter_inhabitants(ctxr, goal, depth - 1):
                yield Case(head, lv, lbody, rv, rbody)

"""Brute-force rewrite-to-fixpoint oracle for the normal form.

Independent of duality.onf: applies one rule at a time at a single
position, under a selectable strategy, until no rule applies.  Used to
cross-check onf and to assert that the rule system is confluent in
practice (innermost and outermost runs agree).
"""

from __future__ import annotations

from opptypes import CoFun, Fun, Opp, Pi, Prod, Sigma, Sum, free_vars


def rule_at_root(T):
    """Apply one rewrite rule at the root, or return None."""
    if isinstance(T, Opp):
        inner = T.inner
        if isinstance(inner, Fun):
            return CoFun(Opp(inner.cod), Opp(inner.dom))
        if isinstance(inner, CoFun):
            return Fun(Opp(inner.dom), Opp(inner.cod))
        if isinstance(inner, Prod):
            return Sum(Opp(inner.left), Opp(inner.right))
        if isinstance(inner, Sum):
            return Prod(Opp(inner.left), Opp(inner.right))
        if isinstance(inner, Pi):
            return Sigma(inner.var, inner.gen, Opp(inner.body))
        if isinstance(inner, Sigma):
            return Pi(inner.var, inner.gen, Opp(inner.body))
        if isinstance(inner, Opp):
            return inner.inner
    if isinstance(T, Pi) and T.var not in free_vars(T.body):
        return Fun(T.gen, T.body)
    if isinstance(T, Sigma) and T.var not in free_vars(T.body):
        return CoFun(T.body, Opp(T.gen))
    return None


def _children(T):
    if isinstance(T, Fun):
        return (T.dom, T.cod)
    if isinstance(T, CoFun):
        return (T.cod, T.dom)
    if isinstance(T, (Prod, Sum)):
        return (T.left, T.right)
    if isinstance(T, (Pi, Sigma)):
        return (T.gen, T.body)
    if isinstance(T, Opp):
        return (T.inner,)
    return ()


def _rebuild(T, children):
    if isinstance(T, Fun):
        return Fun(*children)
    if isinstance(T, CoFun):
        return CoFun(*children)
    if isinstance(T, Prod):
        return Prod(*children)
    if isinstance(T, Sum):
        return Sum(*children)
    if isinstance(T, (Pi, Sigma)):
        return type(T)(T.var, *children)
    if isinstance(T, Opp):
        return Opp(*children)
    return T


def step_innermost(T):
    """One rewrite step at an innermost redex, or None if normal."""
    kids = _children(T)
    for i, child in enumerate(kids):
        stepped = step_innermost(child)
        if stepped is not None:
            new = list(kids)
            new[i] = stepped
            return _rebuild(T, new)
    return rule_at_root(T)


def step_outermost(T):
    """One rewrite step at an outermost redex, or None if normal."""
    rooted = rule_at_root(T)
    if rooted is not None:
        return rooted
    kids = _children(T)
    for i, child in enumerate(kids):
        stepped = step_outermost(child)
        if stepped is not None:
            new = list(kids)
            new[i] = stepped
            return _rebuild(T, new)
    return None


def rewrite_to_fixpoint(T, step, max_steps: int = 10_000):
    for _ in range(max_steps):
        nxt = step(T)
        if nxt is None:
            return T
        T = nxt
    raise AssertionError(f"rewriting did not terminate within {max_steps} steps")

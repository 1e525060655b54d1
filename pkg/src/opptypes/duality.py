"""The type algebra: opposite normal forms, dual types, complete bases.

The opposite constructor distributes over every other constructor:

    ~(A -> B)      =  ~B <~ ~A          ~(B <~ A)      =  ~A -> ~B
    ~(A * B)       =  ~A + ~B           ~(A + B)       =  ~A * ~B
    ~(Pi x:A. B)   =  Sg x:A. ~B        ~(Sg x:A. B)   =  Pi x:A. ~B
    ~~A            =  A

Read left to right these form a terminating rewrite system whose normal
forms carry ~ only on atoms; onf() computes that normal form and is the
decision procedure behind definitional type equality.  Two further
definitional identities are folded into the normal form because the
non-dependent constructors are special cases of the binders:

    Pi x:A. B  =  A -> B        when x is not free in B
    Sg x:A. B  =  B <~ ~A       when x is not free in B

dual() exchanges each constructor with its partner and marks every atom
with ~, leaving generating types and term arguments untouched; the round
trip law  A = ~(dual A)  is checked by check_duality_principle.
"""

from __future__ import annotations

import enum

from .errors import IllFormedType
from .syntax import (Atom, CoFun, Fun, Opp, Pi, Prod, Sigma, Sum, TypeExpr,
                     all_names, free_vars, normalize_term)


def is_onf(A: TypeExpr) -> bool:
    """True iff the opposite constructor is applied only to atoms in A."""
    if isinstance(A, Atom):
        return True
    if isinstance(A, Opp):
        return isinstance(A.inner, Atom)
    if isinstance(A, Fun):
        return is_onf(A.dom) and is_onf(A.cod)
    if isinstance(A, CoFun):
        return is_onf(A.cod) and is_onf(A.dom)
    if isinstance(A, (Prod, Sum)):
        return is_onf(A.left) and is_onf(A.right)
    if isinstance(A, (Pi, Sigma)):
        return is_onf(A.gen) and is_onf(A.body)
    raise IllFormedType(f"not a type: {A!r}")


def onf(A: TypeExpr) -> TypeExpr:
    """Opposite normal form: the canonical representative of A's equality
    class.  Pushes ~ down to atoms, cancels double opposites, collapses
    degenerate binders, and beta-normalizes atom arguments.
    """
    if isinstance(A, Atom):
        if not A.args:
            return A
        return Atom(A.name,
                    tuple(normalize_term(t, type_norm=onf) for t in A.args))
    if isinstance(A, Fun):
        return Fun(onf(A.dom), onf(A.cod))
    if isinstance(A, CoFun):
        return CoFun(onf(A.cod), onf(A.dom))
    if isinstance(A, Prod):
        return Prod(onf(A.left), onf(A.right))
    if isinstance(A, Sum):
        return Sum(onf(A.left), onf(A.right))
    if isinstance(A, Pi):
        gen, body = onf(A.gen), onf(A.body)
        if A.var not in free_vars(body):
            return Fun(gen, body)
        return Pi(A.var, gen, body)
    if isinstance(A, Sigma):
        gen, body = onf(A.gen), onf(A.body)
        if A.var not in free_vars(body):
            return CoFun(body, _neg(gen))
        return Sigma(A.var, gen, body)
    if isinstance(A, Opp):
        return _neg(onf(A.inner))
    raise IllFormedType(f"not a type: {A!r}")


def _neg(N: TypeExpr) -> TypeExpr:
    """Normal form of ~N for N already in normal form."""
    if isinstance(N, Atom):
        return Opp(N)
    if isinstance(N, Opp):
        return N.inner
    if isinstance(N, Fun):
        return CoFun(_neg(N.cod), _neg(N.dom))
    if isinstance(N, CoFun):
        return Fun(_neg(N.dom), _neg(N.cod))
    if isinstance(N, Prod):
        return Sum(_neg(N.left), _neg(N.right))
    if isinstance(N, Sum):
        return Prod(_neg(N.left), _neg(N.right))
    # _neg keeps atom arguments intact, so the binder variable stays free
    # in the negated body and no degeneracy check is needed here.
    if isinstance(N, Pi):
        return Sigma(N.var, N.gen, _neg(N.body))
    if isinstance(N, Sigma):
        return Pi(N.var, N.gen, _neg(N.body))
    raise IllFormedType(f"not a type: {N!r}")


def dual(A: TypeExpr) -> TypeExpr:
    """The dual type: swap -> with <~ (exchanging sides), * with +,
    Pi with Sg, and mark every atom with ~.  Generating types and term
    arguments are left unchanged.
    """
    if isinstance(A, Atom):
        return Opp(A)
    if isinstance(A, Fun):
        return CoFun(dual(A.cod), dual(A.dom))
    if isinstance(A, CoFun):
        return Fun(dual(A.dom), dual(A.cod))
    if isinstance(A, Prod):
        return Sum(dual(A.left), dual(A.right))
    if isinstance(A, Sum):
        return Prod(dual(A.left), dual(A.right))
    if isinstance(A, Pi):
        return Sigma(A.var, A.gen, dual(A.body))
    if isinstance(A, Sigma):
        return Pi(A.var, A.gen, dual(A.body))
    if isinstance(A, Opp):
        return Opp(dual(A.inner))
    raise IllFormedType(f"not a type: {A!r}")


def check_duality_principle(A: TypeExpr, ctx=None):
    """Derivation of the judgment A = ~(dual A) : U0.

    With a context the input is first validated; without one the check is
    purely syntactic.  Failure on a well-formed input would mean the
    normalizer and the dual operation disagree, which is a bug, so it is
    reported as InternalInvariantViolation.
    """
    from .errors import InternalInvariantViolation
    from .kernel import Derivation, TypeEq, U0, check_formation
    from .syntax import alpha_eq

    premises = []
    if ctx is not None:
        premises.append(check_formation(ctx, A, U0))
    rhs = Opp(dual(A))
    left, right = onf(A), onf(rhs)
    if not alpha_eq(left, right):
        raise InternalInvariantViolation(
            f"duality principle failed: onf({A}) = {left} "
            f"but onf(~dual) = {right}")
    premises.append(Derivation("onf", TypeEq(ctx, A, left), ()))
    premises.append(Derivation("onf", TypeEq(ctx, rhs, right), ()))
    return Derivation("duality-principle", TypeEq(ctx, A, rhs),
                      tuple(premises))


class Basis(enum.Enum):
    """The four complete constructor sets (each taken together with ~)."""
    PI_PROD = ("Pi", "*")
    PI_SUM = ("Pi", "+")
    SIGMA_PROD = ("Sg", "*")
    SIGMA_SUM = ("Sg", "+")

    @property
    def has_pi(self) -> bool:
        return self.value[0] == "Pi"

    @property
    def has_prod(self) -> bool:
        return self.value[1] == "*"


BASIS_NAMES = {
    "pi_prod": Basis.PI_PROD,
    "pi_sum": Basis.PI_SUM,
    "sg_prod": Basis.SIGMA_PROD,
    "sg_sum": Basis.SIGMA_SUM,
}


def expand_in_basis(A: TypeExpr, basis: Basis) -> TypeExpr:
    """Rewrite A to use only the basis constructors plus ~, preserving
    definitional equality:

        A -> B     =>  Pi x:A. B            (x fresh)
        B <~ A     =>  Sg x:~A. B           (x fresh)
        A * B      =>  ~(~A + ~B)           when the basis lacks *
        A + B      =>  ~(~A * ~B)           when the basis lacks +
        Pi x:A. B  =>  ~(Sg x:A. ~B)        when the basis lacks Pi
        Sg x:A. B  =>  ~(Pi x:A. ~B)        when the basis lacks Sg

    Fresh binder names are drawn from a counter, so the expansion is
    reproducible byte for byte.
    """
    avoid = set(all_names(A))
    counter = [0]

    def fresh() -> str:
        while True:
            counter[0] += 1
            cand = f"x{counter[0]}"
            if cand not in avoid:
                avoid.add(cand)
                return cand

    def go(T: TypeExpr) -> TypeExpr:
        if isinstance(T, Atom):
            return T
        if isinstance(T, Opp):
            return Opp(go(T.inner))
        if isinstance(T, Fun):
            return go(Pi(fresh(), T.dom, T.cod))
        if isinstance(T, CoFun):
            return go(Sigma(fresh(), Opp(T.dom), T.cod))
        if isinstance(T, Prod):
            left, right = go(T.left), go(T.right)
            if basis.has_prod:
                return Prod(left, right)
            return Opp(Sum(Opp(left), Opp(right)))
        if isinstance(T, Sum):
            left, right = go(T.left), go(T.right)
            if not basis.has_prod:
                return Sum(left, right)
            return Opp(Prod(Opp(left), Opp(right)))
        if isinstance(T, Pi):
            gen, body = go(T.gen), go(T.body)
            if basis.has_pi:
                return Pi(T.var, gen, body)
            return Opp(Sigma(T.var, gen, Opp(body)))
        if isinstance(T, Sigma):
            gen, body = go(T.gen), go(T.body)
            if not basis.has_pi:
                return Sigma(T.var, gen, body)
            return Opp(Pi(T.var, gen, Opp(body)))
        raise IllFormedType(f"not a type: {T!r}")

    return go(A)


def uses_only_basis(A: TypeExpr, basis: Basis) -> bool:
    """True iff A mentions no constructor outside the basis (~ is free)."""
    if isinstance(A, Atom):
        return True
    if isinstance(A, Opp):
        return uses_only_basis(A.inner, basis)
    if isinstance(A, Fun) or isinstance(A, CoFun):
        return False
    if isinstance(A, Prod):
        return basis.has_prod and (uses_only_basis(A.left, basis)
                                   and uses_only_basis(A.right, basis))
    if isinstance(A, Sum):
        return (not basis.has_prod) and (uses_only_basis(A.left, basis)
                                         and uses_only_basis(A.right, basis))
    if isinstance(A, Pi):
        return basis.has_pi and (uses_only_basis(A.gen, basis)
                                 and uses_only_basis(A.body, basis))
    if isinstance(A, Sigma):
        return (not basis.has_pi) and (uses_only_basis(A.gen, basis)
                                       and uses_only_basis(A.body, basis))
    raise IllFormedType(f"not a type: {A!r}")

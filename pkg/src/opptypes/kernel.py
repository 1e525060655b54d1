"""Judgment checking for the paraconsistent type theory.

The checker is bidirectional: introduction forms are checked against a
goal type, elimination forms infer their type, and annotations mediate.
Every type that the kernel compares or returns is first reduced to
opposite normal form (see duality.onf), so the distribution rules for the
opposite constructor hold definitionally and the rules for opposite types
reduce to the rules of the seven head constructors:

    goal shape      introduction            eliminations
    A -> B          \\x:A. b                 f a
    Pi x:A. B       \\x:A. b                 f a
    A * B           <a, b>                  p1 c : A,  p2 c : B
    B <~ A          <a, b>  (a:~A, b:B)     p1 c : ~A, p2 c : B
    Sg x:A. B       <a, b>  (b : B(a))      p1, p2, split
    A + B           inl a | inr b           case
    ~x (x atomic)   none                    none

Since, for example, ~(A -> B) normalizes to ~B <~ ~A, pairing a proof of
A with a refutation of B refutes A -> B, exactly as the refutation
reading demands.  Beyond normal-form equality, checking also accepts a
term whose inferred type is *equivalent* to the goal: equivalence is the
component-wise closure induced by the eta and co-eta conversions, under
which e.g. ~(A -> B) and A * ~B have the same inhabitants even though
they are not equal (their opposites differ).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .duality import _neg, onf
from .errors import (IllFormedContext, IllFormedType, NonInferableTerm,
                     TypeMismatch, UnboundVariable)
from .syntax import (Ann, App, Atom, Case, CoFun, Fun, Inl, Inr, Lam, Opp,
                     Pair, Pi, Prod, Proj1, Proj2, Sigma, Split, Sum,
                     TermExpr, TypeExpr, Var, all_names, alpha_eq, free_vars,
                     fresh_name, normalize_term, subst_term, subst_type)


class Universe(enum.Enum):
    U0 = 0
    U1 = 1

    def __str__(self) -> str:
        return "U0" if self is Universe.U0 else "U1"


U0 = Universe.U0
U1 = Universe.U1


# ---------------------------------------------------------------------------
# Contexts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermDecl:
    name: str
    type: TypeExpr


@dataclass(frozen=True)
class TypeConstDecl:
    """Declaration of a type constant.

    An empty telescope declares a plain type variable; a non-empty one
    declares a dependent family, applied to term arguments that are checked
    against the telescope entry by entry (later entries may mention earlier
    variables).  The universe is the one the applied constant lands in.
    """
    name: str
    telescope: Tuple[Tuple[str, TypeExpr], ...] = ()
    universe: Universe = U0


ContextEntry = Union[TermDecl, TypeConstDecl]


@dataclass(frozen=True)
class Context:
    """Ordered telescope of term declarations and type-constant declarations."""
    entries: Tuple[ContextEntry, ...] = ()

    @property
    def names(self) -> frozenset:
        return frozenset(e.name for e in self.entries)

    def lookup_term(self, name: str) -> Optional[TypeExpr]:
        for e in reversed(self.entries):
            if isinstance(e, TermDecl) and e.name == name:
                return e.type
        return None

    def lookup_const(self, name: str) -> Optional[TypeConstDecl]:
        for e in reversed(self.entries):
            if isinstance(e, TypeConstDecl) and e.name == name:
                return e
        return None

    def extended(self, entry: ContextEntry) -> "Context":
        return Context(self.entries + (entry,))

    def term_decls(self):
        return tuple(e for e in self.entries if isinstance(e, TermDecl))


EMPTY = Context()


def declare_term(ctx: Context, name: str, type_: TypeExpr) -> Context:
    """Extend ctx with name : type_, validating the declaration."""
    if name in ctx.names:
        raise IllFormedContext(f"duplicate declaration of {name}")
    check_formation(ctx, type_, U0)
    return ctx.extended(TermDecl(name, type_))


def declare_type_const(ctx: Context, name: str,
                       telescope=(), universe: Universe = U0) -> Context:
    """Extend ctx with a type constant, validating its telescope."""
    if name in ctx.names:
        raise IllFormedContext(f"duplicate declaration of {name}")
    scope = ctx
    for var, sort in telescope:
        check_formation(scope, sort, U0)
        if var in scope.names:
            raise IllFormedContext(
                f"duplicate telescope variable {var} in declaration of {name}")
        scope = scope.extended(TermDecl(var, sort))
    return ctx.extended(TypeConstDecl(name, tuple(telescope), universe))


def check_context(ctx: Context) -> None:
    """Re-validate a context built by hand, left to right."""
    acc = EMPTY
    for entry in ctx.entries:
        if isinstance(entry, TermDecl):
            acc = declare_term(acc, entry.name, entry.type)
        else:
            acc = declare_type_const(acc, entry.name, entry.telescope,
                                     entry.universe)


# ---------------------------------------------------------------------------
# Judgments and derivations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Formation:
    ctx: Optional[Context]
    type: TypeExpr
    universe: Universe


@dataclass(frozen=True)
class Typing:
    ctx: Context
    term: TermExpr
    type: TypeExpr


@dataclass(frozen=True)
class TypeEq:
    ctx: Optional[Context]
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class TermEq:
    ctx: Context
    left: TermExpr
    right: TermExpr
    type: TypeExpr


Judgment = Union[Formation, Typing, TypeEq, TermEq]


@dataclass(frozen=True)
class Derivation:
    """Evidence object: a rule name, a conclusion, and sub-derivations.

    Rule names are descriptive labels; recheck() re-verifies every node's
    conclusion from scratch.
    """
    rule: str
    conclusion: Judgment
    premises: Tuple["Derivation", ...] = ()


# ---------------------------------------------------------------------------
# Type formation
# ---------------------------------------------------------------------------

def check_formation(ctx: Context, A: TypeExpr, u: Universe) -> Derivation:
    """Derivation that A is a type in universe u.

    U0 is closed under all eight constructors; U1 only under the function
    arrow, over atoms declared in U1 or lifted from U0 (the lift exists
    solely so predicate classifiers over small sorts can be formed).
    """
    conc = Formation(ctx, A, u)

    if isinstance(A, Atom):
        decl = ctx.lookup_const(A.name)
        if decl is None:
            raise IllFormedType(f"unbound type constant: {A.name}")
        if len(A.args) != len(decl.telescope):
            raise IllFormedType(
                f"{A.name} expects {len(decl.telescope)} argument(s), "
                f"got {len(A.args)}")
        if decl.universe is U1 and u is U0:
            raise IllFormedType(f"{A.name} lives in U1, not in U0")
        premises = []
        inst = {}
        for (tvar, sort), arg in zip(decl.telescope, A.args):
            expected = sort
            for v, value in inst.items():
                expected = subst_type(expected, v, value)
            premises.append(check(ctx, arg, expected))
            inst[tvar] = arg
        rule = "atom-form" if decl.universe is u else "atom-form-lift"
        return Derivation(rule, conc, tuple(premises))

    if isinstance(A, Fun):
        d1 = check_formation(ctx, A.dom, u)
        d2 = check_formation(ctx, A.cod, u)
        return Derivation("fun-form", conc, (d1, d2))

    if u is U1:
        raise IllFormedType(
            f"universe U1 is closed only under ->, cannot form {A}")

    if isinstance(A, CoFun):
        d1 = check_formation(ctx, A.cod, U0)
        d2 = check_formation(ctx, A.dom, U0)
        return Derivation("cofun-form", conc, (d1, d2))
    if isinstance(A, Prod):
        d1 = check_formation(ctx, A.left, U0)
        d2 = check_formation(ctx, A.right, U0)
        return Derivation("prod-form", conc, (d1, d2))
    if isinstance(A, Sum):
        d1 = check_formation(ctx, A.left, U0)
        d2 = check_formation(ctx, A.right, U0)
        return Derivation("sum-form", conc, (d1, d2))
    if isinstance(A, (Pi, Sigma)):
        d1 = check_formation(ctx, A.gen, U0)
        ctx2, _, body = _open(ctx, A.var, A.gen, A.body)
        d2 = check_formation(ctx2, body, U0)
        rule = "pi-form" if isinstance(A, Pi) else "sigma-form"
        return Derivation(rule, conc, (d1, d2))
    if isinstance(A, Opp):
        d1 = check_formation(ctx, A.inner, U0)
        return Derivation("opp-form", conc, (d1,))
    raise IllFormedType(f"not a type: {A!r}")


def _open(ctx: Context, var: str, ty: TypeExpr, body):
    """Extend ctx with var : ty, renaming the binder if the name is taken."""
    if var in ctx.names:
        avoid = ctx.names | all_names(body) | all_names(ty)
        fresh = fresh_name(var, avoid)
        if isinstance(body, TermExpr):
            body = subst_term(body, var, Var(fresh))
        else:
            body = subst_type(body, var, Var(fresh))
        var = fresh
    return ctx.extended(TermDecl(var, ty)), var, body


# ---------------------------------------------------------------------------
# Type equality and equivalence
# ---------------------------------------------------------------------------

def type_equal(ctx: Optional[Context], A: TypeExpr, B: TypeExpr) -> bool:
    """Definitional equality: equality of opposite normal forms.

    When a context is supplied both types are first validated in U0.
    """
    if ctx is not None:
        check_formation(ctx, A, U0)
        check_formation(ctx, B, U0)
    return _type_equal(A, B)


def _type_equal(A: TypeExpr, B: TypeExpr) -> bool:
    return alpha_eq(onf(A), onf(B))


def equivalent(ctx: Optional[Context], A: TypeExpr, B: TypeExpr) -> bool:
    """Inhabitation equivalence: the closure of type equality under the
    eta and co-eta conversions.

    Two types are related when their normal forms have the same head
    family (function-like, pair-like, or sum-like) and equivalent
    components; e.g. ~(A -> B) and A * ~B are equivalent but not equal.
    Equivalent types carry exactly the same inhabitants, but they are not
    inter-substitutable, because their opposites may differ.
    """
    if ctx is not None:
        check_formation(ctx, A, U0)
        check_formation(ctx, B, U0)
    return _equiv(onf(A), onf(B))


def _pair_components(T: TypeExpr, fst_term: TermExpr):
    """First and second component types of a pair-like normal form.

    The second component may depend on the first projection of the
    inhabitant, which callers pass in as fst_term.
    """
    if isinstance(T, Prod):
        return T.left, T.right
    if isinstance(T, CoFun):
        return _neg(T.dom), T.cod
    if isinstance(T, Sigma):
        return T.gen, onf(subst_type(T.body, T.var, fst_term))
    raise AssertionError(f"not pair-like: {T!r}")


def _equiv(X: TypeExpr, Y: TypeExpr) -> bool:
    if alpha_eq(X, Y):
        return True
    pairlike = (Prod, CoFun, Sigma)
    funlike = (Fun, Pi)
    if isinstance(X, pairlike) and isinstance(Y, pairlike):
        z = fresh_name("z", all_names(X) | all_names(Y))
        x1, x2 = _pair_components(X, Var(z))
        y1, y2 = _pair_components(Y, Var(z))
        return _equiv(x1, y1) and _equiv(x2, y2)
    if isinstance(X, funlike) and isinstance(Y, funlike):
        z = fresh_name("z", all_names(X) | all_names(Y))
        xd = X.dom if isinstance(X, Fun) else X.gen
        yd = Y.dom if isinstance(Y, Fun) else Y.gen
        xc = X.cod if isinstance(X, Fun) else subst_type(X.body, X.var, Var(z))
        yc = Y.cod if isinstance(Y, Fun) else subst_type(Y.body, Y.var, Var(z))
        return _equiv(xd, yd) and _equiv(xc, yc)
    if isinstance(X, Sum) and isinstance(Y, Sum):
        return _equiv(X.left, Y.left) and _equiv(X.right, Y.right)
    return False


# ---------------------------------------------------------------------------
# Bidirectional checking
# ---------------------------------------------------------------------------

def check(ctx: Context, t: TermExpr, A: TypeExpr) -> Derivation:
    """Derivation of ctx |- t : A.

    Expects A to be well formed (see check_formation); introductions are
    checked against the normal form of A, eliminations are inferred and
    their type compared up to equivalence.
    """
    goal = onf(A)
    conc = Typing(ctx, t, A)

    if isinstance(t, Lam):
        if isinstance(goal, Fun):
            _require_domain(ctx, t.dom, goal.dom)
            ctx2, _, body = _open(ctx, t.var, goal.dom, t.body)
            return Derivation("fun-intro", conc, (check(ctx2, body, goal.cod),))
        if isinstance(goal, Pi):
            _require_domain(ctx, t.dom, goal.gen)
            ctx2, var, body = _open(ctx, t.var, goal.gen, t.body)
            body_type = onf(subst_type(goal.body, goal.var, Var(var)))
            return Derivation("pi-intro", conc, (check(ctx2, body, body_type),))
        raise TypeMismatch(
            f"a lambda cannot have type {goal}", expected=goal, actual=None)

    if isinstance(t, Pair):
        if isinstance(goal, (Prod, CoFun, Sigma)):
            c1, c2 = _pair_components(goal, t.fst)
            rule = {Prod: "prod-intro", CoFun: "cofun-intro",
                    Sigma: "sigma-intro"}[type(goal)]
            d1 = check(ctx, t.fst, c1)
            d2 = check(ctx, t.snd, c2)
            return Derivation(rule, conc, (d1, d2))
        raise TypeMismatch(
            f"a pair cannot have type {goal}", expected=goal, actual=None)

    if isinstance(t, Inl):
        if isinstance(goal, Sum):
            return Derivation("sum-intro-left", conc,
                              (check(ctx, t.arg, goal.left),))
        raise TypeMismatch(
            f"a left injection cannot have type {goal}",
            expected=goal, actual=None)

    if isinstance(t, Inr):
        if isinstance(goal, Sum):
            return Derivation("sum-intro-right", conc,
                              (check(ctx, t.arg, goal.right),))
        raise TypeMismatch(
            f"a right injection cannot have type {goal}",
            expected=goal, actual=None)

    if isinstance(t, Case):
        styp, dscrut = _infer(ctx, t.scrut)
        if not isinstance(styp, Sum):
            raise TypeMismatch(
                f"case scrutinee must have a sum-shaped type, got {styp}",
                expected=None, actual=styp)
        ctxl, _, lbranch = _open(ctx, t.lvar, styp.left, t.lbranch)
        dl = check(ctxl, lbranch, goal)
        ctxr, _, rbranch = _open(ctx, t.rvar, styp.right, t.rbranch)
        dr = check(ctxr, rbranch, goal)
        return Derivation("sum-elim", conc, (dscrut, dl, dr))

    if isinstance(t, Split):
        styp, dscrut = _infer(ctx, t.scrut)
        if not isinstance(styp, Sigma):
            raise TypeMismatch(
                f"split scrutinee must have a dependent-pair-shaped type, "
                f"got {styp}", expected=None, actual=styp)
        ctx2, v1, v2, body = _open_split(ctx, t, styp)
        db = check(ctx2, body, goal)
        return Derivation("sigma-elim", conc, (dscrut, db))

    if isinstance(t, Ann):
        df = check_formation(ctx, t.type, U0)
        dt = check(ctx, t.term, t.type)
        if not _equiv(onf(t.type), goal):
            raise TypeMismatch(
                f"annotation {onf(t.type)} does not match expected {goal}",
                expected=goal, actual=onf(t.type))
        return Derivation("ann", conc, (df, dt))

    # elimination or variable: infer then convert
    ity, d = _infer(ctx, t)
    if not _equiv(ity, goal):
        raise TypeMismatch(
            f"term {t} has type {ity}, expected {goal}",
            expected=goal, actual=ity)
    return Derivation("conv", conc, (d,))


def _require_domain(ctx: Context, annotated: TypeExpr, expected: TypeExpr):
    if not _equiv(onf(annotated), expected):
        raise TypeMismatch(
            f"lambda domain {onf(annotated)} does not match {expected}",
            expected=expected, actual=onf(annotated))


def _open_split(ctx: Context, t: Split, styp: Sigma):
    """Open the two binders of a split against the components of styp."""
    avoid = ctx.names | all_names(t.body) | all_names(styp)
    v1, v2, body = t.var1, t.var2, t.body
    if v1 in ctx.names:
        nv1 = fresh_name(v1, avoid | {v2})
        body = subst_term(body, v1, Var(nv1))
        v1 = nv1
    if v2 in ctx.names or v2 == v1:
        nv2 = fresh_name(v2, avoid | {v1})
        body = subst_term(body, v2, Var(nv2))
        v2 = nv2
    ctx2 = ctx.extended(TermDecl(v1, styp.gen))
    snd_type = onf(subst_type(styp.body, styp.var, Var(v1)))
    ctx2 = ctx2.extended(TermDecl(v2, snd_type))
    return ctx2, v1, v2, body


def infer(ctx: Context, t: TermExpr) -> TypeExpr:
    """Infer a type for t, returned in opposite normal form.

    Bare pairs and injections are rejected: several non-equal types share
    their introduction rule, so no canonical choice exists; annotate them.
    """
    ty, _ = _infer(ctx, t)
    return ty


def _infer(ctx: Context, t: TermExpr):
    if isinstance(t, Var):
        ty = ctx.lookup_term(t.name)
        if ty is None:
            raise UnboundVariable(f"unbound variable: {t.name}")
        nf = onf(ty)
        return nf, Derivation("var", Typing(ctx, t, nf))

    if isinstance(t, Ann):
        df = check_formation(ctx, t.type, U0)
        dt = check(ctx, t.term, t.type)
        nf = onf(t.type)
        return nf, Derivation("ann", Typing(ctx, t, nf), (df, dt))

    if isinstance(t, App):
        fty, df = _infer(ctx, t.fn)
        if isinstance(fty, Fun):
            da = check(ctx, t.arg, fty.dom)
            return fty.cod, Derivation(
                "fun-elim", Typing(ctx, t, fty.cod), (df, da))
        if isinstance(fty, Pi):
            da = check(ctx, t.arg, fty.gen)
            res = onf(subst_type(fty.body, fty.var, t.arg))
            return res, Derivation("pi-elim", Typing(ctx, t, res), (df, da))
        raise TypeMismatch(
            f"cannot apply a term of type {fty}", expected=None, actual=fty)

    if isinstance(t, Proj1):
        sty, d = _infer(ctx, t.arg)
        if isinstance(sty, Prod):
            return sty.left, Derivation(
                "prod-elim-1", Typing(ctx, t, sty.left), (d,))
        if isinstance(sty, CoFun):
            res = _neg(sty.dom)
            return res, Derivation("cofun-elim-1", Typing(ctx, t, res), (d,))
        if isinstance(sty, Sigma):
            return sty.gen, Derivation(
                "sigma-elim-1", Typing(ctx, t, sty.gen), (d,))
        raise TypeMismatch(
            f"cannot project from a term of type {sty}",
            expected=None, actual=sty)

    if isinstance(t, Proj2):
        sty, d = _infer(ctx, t.arg)
        if isinstance(sty, Prod):
            return sty.right, Derivation(
                "prod-elim-2", Typing(ctx, t, sty.right), (d,))
        if isinstance(sty, CoFun):
            return sty.cod, Derivation(
                "cofun-elim-2", Typing(ctx, t, sty.cod), (d,))
        if isinstance(sty, Sigma):
            res = onf(subst_type(sty.body, sty.var, Proj1(t.arg)))
            return res, Derivation("sigma-elim-2", Typing(ctx, t, res), (d,))
        raise TypeMismatch(
            f"cannot project from a term of type {sty}",
            expected=None, actual=sty)

    if isinstance(t, Case):
        styp, dscrut = _infer(ctx, t.scrut)
        if not isinstance(styp, Sum):
            raise TypeMismatch(
                f"case scrutinee must have a sum-shaped type, got {styp}",
                expected=None, actual=styp)
        ctxl, lvar, lbranch = _open(ctx, t.lvar, styp.left, t.lbranch)
        lty, dl = _infer(ctxl, lbranch)
        ctxr, rvar, rbranch = _open(ctx, t.rvar, styp.right, t.rbranch)
        rty, dr = _infer(ctxr, rbranch)
        if lvar in free_vars(lty) or rvar in free_vars(rty):
            raise NonInferableTerm(
                "case branch type mentions its bound variable; "
                "annotate the case expression")
        if not _type_equal(lty, rty):
            raise TypeMismatch(
                f"case branches have different types: {lty} vs {rty}",
                expected=lty, actual=rty)
        return lty, Derivation(
            "sum-elim", Typing(ctx, t, lty), (dscrut, dl, dr))

    if isinstance(t, Split):
        styp, dscrut = _infer(ctx, t.scrut)
        if not isinstance(styp, Sigma):
            raise TypeMismatch(
                f"split scrutinee must have a dependent-pair-shaped type, "
                f"got {styp}", expected=None, actual=styp)
        ctx2, v1, v2, body = _open_split(ctx, t, styp)
        bty, db = _infer(ctx2, body)
        if v1 in free_vars(bty) or v2 in free_vars(bty):
            raise NonInferableTerm(
                "split body type mentions a bound variable; "
                "annotate the split expression")
        return bty, Derivation("sigma-elim", Typing(ctx, t, bty),
                               (dscrut, db))

    if isinstance(t, Lam):
        df = check_formation(ctx, t.dom, U0)
        ctx2, var, body = _open(ctx, t.var, t.dom, t.body)
        bty, db = _infer(ctx2, body)
        dom = onf(t.dom)
        if var in free_vars(bty):
            res: TypeExpr = Pi(var, dom, bty)
        else:
            res = Fun(dom, bty)
        rule = "pi-intro" if isinstance(res, Pi) else "fun-intro"
        return res, Derivation(rule, Typing(ctx, t, res), (df, db))

    if isinstance(t, Pair):
        raise NonInferableTerm(
            "a bare pair admits several non-equal types (a product, a "
            "co-function, a dependent pair, or an opposite); annotate it")
    if isinstance(t, (Inl, Inr)):
        raise NonInferableTerm(
            "a bare injection admits several non-equal types (a sum or an "
            "opposite product); annotate it")
    raise NonInferableTerm(f"cannot infer a type for {t!r}")


# ---------------------------------------------------------------------------
# Term equality
# ---------------------------------------------------------------------------

def term_equal(ctx: Context, t: TermExpr, u: TermExpr, A: TypeExpr) -> bool:
    """Definitional term equality at type A.

    Both terms are checked against A first (errors propagate), reduced to
    beta normal form, and compared type-directed: at function-like types by
    applying to a fresh variable, at pair-like types by comparing
    projections, and at sums and atoms structurally, with the identity
    case and split collapsed by the normalizer.
    """
    check(ctx, t, A)
    check(ctx, u, A)
    goal = onf(A)
    nt = normalize_term(t, type_norm=onf)
    nu = normalize_term(u, type_norm=onf)
    return _teq(ctx, nt, nu, goal)


def _norm(t: TermExpr) -> TermExpr:
    return normalize_term(t, type_norm=onf)


def _teq(ctx: Context, t: TermExpr, u: TermExpr, T: TypeExpr) -> bool:
    if alpha_eq(t, u):
        return True

    if isinstance(T, (Fun, Pi)):
        avoid = ctx.names | all_names(t) | all_names(u) | all_names(T)
        z = fresh_name("z", avoid)
        dom = T.dom if isinstance(T, Fun) else T.gen
        cod = (T.cod if isinstance(T, Fun)
               else onf(subst_type(T.body, T.var, Var(z))))
        ctx2 = ctx.extended(TermDecl(z, dom))
        return _teq(ctx2, _norm(App(t, Var(z))), _norm(App(u, Var(z))), cod)

    if isinstance(T, (Prod, CoFun, Sigma)):
        p1t, p1u = _norm(Proj1(t)), _norm(Proj1(u))
        c1, c2 = _pair_components(T, p1t)
        if not _teq(ctx, p1t, p1u, c1):
            return False
        return _teq(ctx, _norm(Proj2(t)), _norm(Proj2(u)), c2)

    if isinstance(T, Sum):
        if isinstance(t, Inl) and isinstance(u, Inl):
            return _teq(ctx, t.arg, u.arg, T.left)
        if isinstance(t, Inr) and isinstance(u, Inr):
            return _teq(ctx, t.arg, u.arg, T.right)
        if isinstance(t, (Inl, Inr)) or isinstance(u, (Inl, Inr)):
            return False
        return _atomic_eq(ctx, t, u, T)

    return _atomic_eq(ctx, t, u, T)


def _atomic_eq(ctx: Context, t: TermExpr, u: TermExpr,
               goal: TypeExpr) -> bool:
    """Comparison at a type with no applicable eta rule."""
    if type(t) is not type(u):
        return False

    if isinstance(t, Case):
        styp = _neutral_eq(ctx, t.scrut, u.scrut)
        if not isinstance(styp, Sum):
            return False
        avoid = (ctx.names | all_names(t) | all_names(u))
        zl = fresh_name("z", avoid)
        tl = subst_term(t.lbranch, t.lvar, Var(zl))
        ul = subst_term(u.lbranch, u.lvar, Var(zl))
        if not _teq(ctx.extended(TermDecl(zl, styp.left)), tl, ul, goal):
            return False
        zr = fresh_name("z", avoid | {zl})
        tr = subst_term(t.rbranch, t.rvar, Var(zr))
        ur = subst_term(u.rbranch, u.rvar, Var(zr))
        return _teq(ctx.extended(TermDecl(zr, styp.right)), tr, ur, goal)

    if isinstance(t, Split):
        styp = _neutral_eq(ctx, t.scrut, u.scrut)
        if not isinstance(styp, Sigma):
            return False
        avoid = ctx.names | all_names(t) | all_names(u)
        z1 = fresh_name("z", avoid)
        z2 = fresh_name("z", avoid | {z1})
        tb = subst_term(subst_term(t.body, t.var1, Var(z1)),
                        t.var2, Var(z2))
        ub = subst_term(subst_term(u.body, u.var1, Var(z1)),
                        u.var2, Var(z2))
        ctx2 = ctx.extended(TermDecl(z1, styp.gen))
        ctx2 = ctx2.extended(
            TermDecl(z2, onf(subst_type(styp.body, styp.var, Var(z1)))))
        return _teq(ctx2, tb, ub, goal)

    return _neutral_eq(ctx, t, u) is not None


def _neutral_eq(ctx: Context, n: TermExpr, m: TermExpr):
    """Compare two neutral spines; return their common type or None."""
    if type(n) is not type(m):
        return None
    if isinstance(n, Var):
        if n.name != m.name:
            return None
        ty = ctx.lookup_term(n.name)
        return onf(ty) if ty is not None else None
    if isinstance(n, App):
        fty = _neutral_eq(ctx, n.fn, m.fn)
        if isinstance(fty, Fun):
            if not _teq(ctx, n.arg, m.arg, fty.dom):
                return None
            return fty.cod
        if isinstance(fty, Pi):
            if not _teq(ctx, n.arg, m.arg, fty.gen):
                return None
            return onf(subst_type(fty.body, fty.var, n.arg))
        return None
    if isinstance(n, Proj1):
        sty = _neutral_eq(ctx, n.arg, m.arg)
        if isinstance(sty, (Prod, CoFun, Sigma)):
            return _pair_components(sty, Proj1(n.arg))[0]
        return None
    if isinstance(n, Proj2):
        sty = _neutral_eq(ctx, n.arg, m.arg)
        if isinstance(sty, (Prod, CoFun, Sigma)):
            return _pair_components(sty, Proj1(n.arg))[1]
        return None
    return None


# ---------------------------------------------------------------------------
# Derivation auditing
# ---------------------------------------------------------------------------

def recheck(d: Derivation) -> bool:
    """Re-verify every node of a derivation from scratch.

    Raises the underlying error if some conclusion no longer holds, so a
    True result means the whole tree is sound evidence.
    """
    c = d.conclusion
    if isinstance(c, Formation):
        check_formation(c.ctx if c.ctx is not None else EMPTY,
                        c.type, c.universe)
    elif isinstance(c, Typing):
        check(c.ctx, c.term, c.type)
    elif isinstance(c, TypeEq):
        if not _type_equal(c.left, c.right):
            raise TypeMismatch(
                f"type equality {c.left} = {c.right} does not hold",
                expected=c.left, actual=c.right)
    elif isinstance(c, TermEq):
        if not term_equal(c.ctx, c.left, c.right, c.type):
            raise TypeMismatch(
                f"term equality does not hold at {c.type}",
                expected=None, actual=None)
    else:
        raise TypeError(f"not a judgment: {c!r}")
    for p in d.premises:
        recheck(p)
    return True

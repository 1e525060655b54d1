"""Opposite normal forms, duals, the duality principle and the bases."""

import random

from hypothesis import given, settings

from opptypes import (Atom, Basis, CoFun, Fun, Opp, Pi, Prod, Sigma, Sum,
                      Var, alpha_eq, check_duality_principle, dual,
                      expand_in_basis, is_onf, onf, parse_type, recheck,
                      type_equal, uses_only_basis)

from generators import rand_type, std_ctx, types, unnormalize
from rewrite_oracle import (rewrite_to_fixpoint, step_innermost,
                            step_outermost)

a, b, c = Atom("a"), Atom("b"), Atom("c")


class TestOnfExamples:
    def test_opp_prod(self):
        assert onf(parse_type("~(a * b)")) == Sum(Opp(a), Opp(b))

    def test_double_opposite(self):
        assert onf(parse_type("~~(a -> b)")) == Fun(a, b)

    def test_nested_matches_rewrite_oracle(self):
        A = parse_type("~((a -> b) * c)")
        expected = rewrite_to_fixpoint(A, step_innermost)
        assert expected == Sum(CoFun(Opp(b), Opp(a)), Opp(c))  # frozen
        assert onf(A) == expected

    def test_already_normal(self):
        assert onf(a) == a

    def test_seven_distribution_identities(self):
        for lhs, rhs in [
            ("~(a -> b)", "~b <~ ~a"),
            ("~(b <~ a)", "~a -> ~b"),
            ("~(a * b)", "~a + ~b"),
            ("~(a + b)", "~a * ~b"),
            ("~(Pi x:a. p(x))", "Sg x:a. ~p(x)"),
            ("~(Sg x:a. p(x))", "Pi x:a. ~p(x)"),
            ("~~a", "a"),
        ]:
            assert alpha_eq(onf(parse_type(lhs)), onf(parse_type(rhs))), lhs

    def test_degenerate_binders_collapse(self):
        assert onf(parse_type("Pi x:a. b")) == Fun(a, b)
        assert onf(parse_type("Sg x:~a. b")) == CoFun(b, a)
        assert onf(parse_type("Sg x:a. b")) == CoFun(b, Opp(a))


class TestDualExamples:
    def test_fun(self):
        A = parse_type("a -> b")
        assert dual(A) == CoFun(Opp(b), Opp(a))
        # oracle: the dual satisfies A = ~(dual A)
        assert alpha_eq(onf(Opp(dual(A))), onf(A))

    def test_pi_generating_type_unchanged(self):
        A = parse_type("Pi x:a. p(x)")
        assert dual(A) == Sigma("x", a, Opp(Atom("p", (Var("x"),))))

    def test_prod(self):
        A = parse_type("a * b")
        assert dual(A) == Sum(Opp(a), Opp(b))
        assert alpha_eq(onf(Opp(dual(A))), onf(A))

    def test_atom(self):
        assert dual(a) == Opp(a)


class TestDualityPrinciple:
    def test_fun_instance(self):
        d = check_duality_principle(parse_type("a -> b"))
        assert d.rule == "duality-principle"

    def test_atom_instance(self):
        check_duality_principle(a)

    def test_dependent_instance(self):
        A = parse_type("Sg x:a. p(x) + c")
        assert alpha_eq(onf(Opp(dual(A))), onf(A))
        check_duality_principle(A)

    def test_with_context_produces_rechecking_derivation(self):
        d = check_duality_principle(parse_type("~(a -> b) * c"), std_ctx())
        assert recheck(d)


@settings(max_examples=300, deadline=None)
@given(types(max_depth=5))
def test_onf_idempotent(A):
    n = onf(A)
    assert onf(n) == n


@settings(max_examples=300, deadline=None)
@given(types(max_depth=5))
def test_onf_is_normal_and_equal(A):
    n = onf(A)
    assert is_onf(n)
    assert type_equal(std_ctx(), A, n)


@settings(max_examples=300, deadline=None)
@given(types(max_depth=5))
def test_dual_involution_at_onf(A):
    assert alpha_eq(onf(dual(dual(A))), onf(A))


@settings(max_examples=300, deadline=None)
@given(types(max_depth=5))
def test_duality_principle_generated(A):
    check_duality_principle(A)


@settings(max_examples=200, deadline=None)
@given(types(max_depth=4))
def test_strategies_agree(A):
    inner = rewrite_to_fixpoint(A, step_innermost)
    outer = rewrite_to_fixpoint(A, step_outermost)
    assert inner == outer
    assert inner == onf(A)


@settings(max_examples=200, deadline=None)
@given(types(max_depth=4), types(max_depth=4))
def test_constructor_duality(A, B):
    # each constructor pair is dual under the opposite marker
    assert alpha_eq(onf(Opp(Prod(A, B))), onf(Sum(Opp(A), Opp(B))))
    assert alpha_eq(onf(Opp(Sum(A, B))), onf(Prod(Opp(A), Opp(B))))
    # the arrows swap sides
    assert alpha_eq(onf(Opp(Fun(A, B))), onf(CoFun(Opp(B), Opp(A))))
    assert alpha_eq(onf(Opp(CoFun(B, A))), onf(Fun(Opp(A), Opp(B))))


def test_pi_sigma_duality_generated():
    rng = random.Random(7231)
    for _ in range(300):
        gen = a
        body = rand_type(rng, 3, ("v1",))
        lhs = onf(Opp(Pi("v1", gen, body)))
        rhs = onf(Sigma("v1", gen, Opp(body)))
        assert alpha_eq(lhs, rhs)
        lhs = onf(Opp(Sigma("v1", gen, body)))
        rhs = onf(Pi("v1", gen, Opp(body)))
        assert alpha_eq(lhs, rhs)


@settings(max_examples=150, deadline=None)
@given(types(max_depth=4))
def test_basis_completeness(A):
    for basis in Basis:
        out = expand_in_basis(A, basis)
        assert uses_only_basis(out, basis)
        assert type_equal(None, A, out)


def test_basis_examples():
    out = expand_in_basis(parse_type("a + b"), Basis.PI_PROD)
    assert uses_only_basis(out, Basis.PI_PROD)
    assert out == Opp(Prod(Opp(a), Opp(b)))
    out = expand_in_basis(parse_type("b <~ a"), Basis.SIGMA_PROD)
    assert out == Sigma("x1", Opp(a), b)
    assert expand_in_basis(a, Basis.SIGMA_SUM) == a


def test_expansion_deterministic():
    A = parse_type("(a -> b) -> (c <~ a)")
    assert expand_in_basis(A, Basis.SIGMA_SUM) == expand_in_basis(
        A, Basis.SIGMA_SUM)


def test_unnormalize_preserves_normal_form():
    rng = random.Random(99)
    for _ in range(200):
        A = rand_type(rng, 4)
        B = unnormalize(rng, A, rng.randint(1, 3))
        assert alpha_eq(onf(A), onf(B))


class TestNegativeControls:
    def test_opp_fun_vs_prod_not_equal(self):
        assert not type_equal(None, parse_type("~(a -> b)"),
                              parse_type("a * ~b"))

    def test_equivalence_gap_witness(self):
        # the opposites differ: ~~(a->b) = a->b but ~(a*~b) = ~a + b
        lhs = onf(parse_type("~~(a -> b)"))
        rhs = onf(parse_type("~(a * ~b)"))
        assert lhs == Fun(a, b)
        assert rhs == Sum(Opp(a), b)
        assert not alpha_eq(lhs, rhs)

    def test_prod_idempotence_fails(self):
        assert not type_equal(None, Prod(a, a), a)

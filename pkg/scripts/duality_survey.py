#!/usr/bin/env python3
"""Random survey of the type algebra.

Generates random small types, checks the duality principle A = ~(dual A)
on every one, and reports how normalization and basis expansion change
type size.  Useful as a quick end-to-end exercise of the algebra:

    python3 scripts/duality_survey.py --count 5000 --depth 6 --seed 7
"""

import argparse
import random
import time

from opptypes import (Atom, Basis, CoFun, Fun, Opp, Pi, Prod, Sigma, Sum,
                      Var, check_duality_principle, expand_in_basis, is_onf,
                      onf, type_str)

LEAVES = ("a", "b", "c")


def rand_type(rng, depth, env=()):
    if depth <= 0:
        if env and rng.random() < 0.4:
            return Atom("p", (Var(rng.choice(env)),))
        return Atom(rng.choice(LEAVES))
    kind = rng.choice(("leaf", "opp", "opp", "fun", "cofun", "prod", "sum",
                       "pi", "sigma"))
    if kind == "leaf":
        return rand_type(rng, 0, env)
    if kind == "opp":
        return Opp(rand_type(rng, depth - 1, env))
    if kind in ("fun", "cofun", "prod", "sum"):
        cls = {"fun": Fun, "cofun": CoFun, "prod": Prod, "sum": Sum}[kind]
        return cls(rand_type(rng, depth - 1, env),
                   rand_type(rng, depth - 1, env))
    gen = rand_type(rng, depth - 1, env)
    var = f"v{len(env) + 1}"
    inner = env + (var,) if gen == Atom("a") else env
    cls = Pi if kind == "pi" else Sigma
    return cls(var, gen, rand_type(rng, depth - 1, inner))


def size(T):
    if isinstance(T, Atom):
        return 1
    if isinstance(T, Opp):
        return 1 + size(T.inner)
    if isinstance(T, (Fun, CoFun)):
        return 1 + size(T.dom) + size(T.cod)
    if isinstance(T, (Prod, Sum)):
        return 1 + size(T.left) + size(T.right)
    return 1 + size(T.gen) + size(T.body)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=5000)
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    already_normal = 0
    grew = shrank = 0
    expansion_growth = {basis: 0.0 for basis in Basis}
    start = time.time()

    for _ in range(args.count):
        A = rand_type(rng, rng.randint(0, args.depth))
        check_duality_principle(A)
        n = onf(A)
        assert is_onf(n)
        if n == A:
            already_normal += 1
        elif size(n) > size(A):
            grew += 1
        else:
            shrank += 1
        for basis in Basis:
            expansion_growth[basis] += size(expand_in_basis(A, basis)) / size(A)

    elapsed = time.time() - start
    print(f"surveyed {args.count} types (depth <= {args.depth}, "
          f"seed {args.seed}) in {elapsed:.1f}s")
    print(f"duality principle held on every instance")
    print(f"already normal: {already_normal}, "
          f"normalization grew: {grew}, shrank: {shrank}")
    for basis in Basis:
        ratio = expansion_growth[basis] / args.count
        print(f"mean size ratio after expansion into {basis.name}: "
              f"{ratio:.2f}")

    sample = rand_type(rng, args.depth)
    print("\nexample:")
    print("  type:", type_str(sample))
    print("  onf: ", type_str(onf(sample)))
    print("  dual:", type_str(onf(Opp(sample))))


if __name__ == "__main__":
    main()

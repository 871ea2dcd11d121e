"""Shared test corpus: quivers, coalgebras and small modules over GF(2)."""

from cocover import (GF, QQ, Quiver, coalgebra_module, dual_coalgebra_of_algebra,
                     matrix_coalgebra, opposite_algebra, path_coalgebra, regular_module,
                     triangular_example_algebra, truncated_divided_power)
from cocover.algebra import direct_product_algebra, matrix_algebra, path_algebra, truncated_polynomial_algebra
from cocover.modules import LEFT, RIGHT
from cocover.oracles import brute_force_submodules


def q(vertices, edges):
    return Quiver.from_edges(vertices, edges)


AB = q("ab", [("x", "a", "b")])

# ten acyclic quivers, <= 6 vertices and <= 8 arrows, for the socle formula
SOCLE_QUIVERS = {
    "a->b": AB,
    "a=>b": q("ab", [("x", "a", "b"), ("y", "a", "b")]),
    "a->b->c": q("abc", [("x", "a", "b"), ("y", "b", "c")]),
    "a->c<-b": q("abc", [("x", "a", "c"), ("y", "b", "c")]),
    "a<-b->c": q("abc", [("x", "b", "a"), ("y", "b", "c")]),
    "isolated+a->b": q("abv", [("x", "a", "b")]),
    "A4": q("abcd", [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "d")]),
    "diamond": q("abcd", [("x", "a", "b"), ("y", "a", "c"), ("z", "b", "d"), ("w", "c", "d")]),
    "a=3=>b": q("ab", [("x", "a", "b"), ("y", "a", "b"), ("z", "a", "b")]),
    "bipartite6": q("abcdef", [("p", "a", "d"), ("q", "a", "e"), ("r", "b", "d"), ("s", "b", "f"),
                               ("t", "c", "e"), ("u", "c", "f"), ("v", "a", "f"), ("w", "b", "e")]),
}

# extra acyclic quivers for the hereditary/non-singular properties
MORE_QUIVERS = {
    "point": q("a", []),
    "star3": q("abcd", [("x", "a", "d"), ("y", "b", "d"), ("z", "c", "d")]),
    "long": q("abcdef", [("p", "a", "b"), ("q", "b", "c"), ("r", "c", "d"), ("s", "d", "e"),
                         ("t", "e", "f"), ("u", "a", "c"), ("v", "b", "d"), ("w", "a", "f")]),
}


def triangular_coalgebra(field=QQ):
    return dual_coalgebra_of_algebra(opposite_algebra(triangular_example_algebra(field)))


def corpus_coalgebras(field=QQ):
    """The full corpus: path coalgebras, matrix:1..3, dividedpower:2..5, triangular dual."""
    out = {}
    for name, quiver in {**SOCLE_QUIVERS, **MORE_QUIVERS}.items():
        if name in ("bipartite6", "long"):
            continue  # too slow for a whole report; the acceptance socle test covers them
        out[f"path:{name}"] = path_coalgebra(quiver, field=field)
    for n in (1, 2, 3):
        out[f"matrix:{n}"] = matrix_coalgebra(field, n)
    for n in (2, 3, 4, 5):
        out[f"dividedpower:{n}"] = truncated_divided_power(field, n)
    out["triangular"] = triangular_coalgebra(field)
    return out


def small_algebras(field=None):
    """Algebras of dimension at most 4 (GF(2) by default)."""
    f = field or GF(2)
    return {
        "path a->b": path_algebra(AB, f),
        "k[z]/z^2": truncated_polynomial_algebra(f, 2),
        "k[z]/z^3": truncated_polynomial_algebra(f, 3),
        "k[z]/z^4": truncated_polynomial_algebra(f, 4),
        "M2": matrix_algebra(f, 2),
        "k x k": direct_product_algebra([matrix_algebra(f, 1)] * 2),
        "k x k[z]/z^2": direct_product_algebra([matrix_algebra(f, 1),
                                                truncated_polynomial_algebra(f, 2)]),
    }


def small_modules(max_dim=3, field=None):
    """Regular modules, their submodules and quotients, and small coalgebras as modules."""
    f = field or GF(2)
    mods = []
    for name, a in small_algebras(f).items():
        for side in (LEFT, RIGHT):
            reg = regular_module(a, side)
            if reg.dim <= max_dim:
                mods.append((f"{name} {side} regular", reg))
            for k, n in enumerate(brute_force_submodules(reg)):
                if 0 < n.dim < reg.dim and n.dim <= max_dim:
                    mods.append((f"{name} {side} sub{k}", n.as_module()))
                quo, _ = n.quotient()
                if 0 < quo.dim < reg.dim and quo.dim <= max_dim:
                    mods.append((f"{name} {side} quo{k}", quo))
    for name, c in {"path a->b": path_coalgebra(AB, field=f),
                    "dividedpower:2": truncated_divided_power(f, 2),
                    "dividedpower:3": truncated_divided_power(f, 3)}.items():
        for side in (LEFT, RIGHT):
            mods.append((f"C={name} {side}", coalgebra_module(c, side)))
    return mods

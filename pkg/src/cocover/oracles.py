"""Exhaustive definitional checks over small prime fields.

These quantify over every submodule or every linear map, so they only run
when the search space has at most ``LIMIT`` elements.  They serve as
independent oracles for the structural predicates in :mod:`cocover.modules`.
"""

from __future__ import annotations

import itertools

from .errors import TooLarge
from .linalg import Mat, Subspace
from .modules import FDModule, ModuleMap, Submodule, generated_subspace

LIMIT = 2 ** 16


def _guard(field, exponent: int, what: str):
    p = field.characteristic
    if p == 0 or p ** exponent > LIMIT:
        raise TooLarge(f"{what}: search space over {field} with exponent {exponent} "
                       f"exceeds {LIMIT} elements")


def all_vectors(field, n: int):
    return (list(v) for v in itertools.product(range(field.characteristic), repeat=n))


def brute_force_submodules(m: FDModule) -> list[Submodule]:
    """Every submodule, in order of discovery (by dimension, then RREF)."""
    _guard(m.field, m.dim, "submodule enumeration")
    seen = {Subspace.zero(m.field, m.dim).key(): Subspace.zero(m.field, m.dim)}
    frontier = list(seen.values())
    vectors = list(all_vectors(m.field, m.dim))
    while frontier:
        nxt = []
        for s in frontier:
            for v in vectors:
                if s.contains(v):
                    continue
                t = generated_subspace(m, s.vectors() + [v])
                if t.key() not in seen:
                    seen[t.key()] = t
                    nxt.append(t)
        frontier = nxt
    subs = sorted(seen.values(), key=lambda s: (s.dim, s.key()))
    return [Submodule(m, s) for s in subs]


def brute_force_hom(x: FDModule, y: FDModule) -> list[Mat]:
    """All homomorphisms X -> Y, by enumerating every matrix."""
    _guard(x.field, x.dim * y.dim, "map enumeration")
    out = []
    for flat in all_vectors(x.field, x.dim * y.dim):
        f = Mat.from_flat(x.field, flat, y.dim, x.dim)
        if all(f @ a == b @ f for a, b in zip(x.action, y.action)):
            out.append(f)
    return out


def definitional_is_small(n: Submodule, subs=None) -> bool:
    """N + L = M forces L = M."""
    m = n.parent
    subs = subs if subs is not None else brute_force_submodules(m)
    for l in subs:
        if l.dim < m.dim and (n.space + l.space).dim == m.dim:
            return False
    return True


def definitional_is_essential(n: Submodule, subs=None) -> bool:
    """N meets every nonzero submodule."""
    subs = subs if subs is not None else brute_force_submodules(n.parent)
    return all((n.space & l.space).dim > 0 for l in subs if l.dim > 0)


def definitional_nabla(x: FDModule, y: FDModule) -> list[Mat]:
    """Homomorphisms whose image is small in Y, by the definition of smallness."""
    subs = brute_force_submodules(y)
    return [f for f in brute_force_hom(x, y)
            if definitional_is_small(Submodule(y, f.image()), subs)]


def definitional_is_copolyform(m: FDModule) -> bool:
    """Nabla(M, M/N) = 0 for every small submodule N."""
    subs = brute_force_submodules(m)
    for n in subs:
        if not definitional_is_small(n, subs):
            continue
        q, _ = n.quotient()
        if q.dim == 0:
            continue
        if any(not f.is_zero() for f in definitional_nabla(m, q)):
            return False
    return True


def definitional_is_codense(pi: ModuleMap) -> bool:
    """Hom(source, Ker pi / L) = 0 for every submodule L of Ker pi."""
    ker = pi.kernel()
    k = ker.as_module()
    for l in brute_force_submodules(k):
        q, _ = l.quotient()
        if q.dim == 0:
            continue
        if any(not f.is_zero() for f in brute_force_hom(pi.source, q)):
            return False
    return True


def definitional_is_hollow(m: FDModule) -> bool:
    """M nonzero and every proper submodule small."""
    if m.dim == 0:
        return False
    subs = brute_force_submodules(m)
    return all(definitional_is_small(n, subs) for n in subs if n.dim < m.dim)


def _agree_on_module(m: FDModule) -> dict:
    from .modules import is_copolyform, is_essential, is_small
    subs = brute_force_submodules(m)
    small = all(is_small(n) == definitional_is_small(n, subs) for n in subs)
    essential = all(is_essential(n) == definitional_is_essential(n, subs) for n in subs)
    out = {"submodules": len(subs), "small_agrees": small, "essential_agrees": essential}
    try:
        out["copolyform_agrees"] = is_copolyform(m) == definitional_is_copolyform(m)
    except TooLarge as exc:
        out["copolyform_agrees"] = None
        out["copolyform_skipped"] = str(exc)
    return out


def oracle_verdict(c):
    """Compare the fast predicates with exhaustive checks on C, both sides, and its cover."""
    from .modules import LEFT, RIGHT, coalgebra_module, is_codense_cover
    from .props import Verdict
    from .quotient import covering_coalgebra
    details = {}
    try:
        for side in (LEFT, RIGHT):
            details[f"C_{side}"] = _agree_on_module(coalgebra_module(c, side))
    except TooLarge as exc:
        return Verdict("skipped", {"reason": str(exc)})
    try:
        res = covering_coalgebra(c)
        pmap = ModuleMap(res.d_module, coalgebra_module(c, LEFT), res.pi)
        details["cover_codense_agrees"] = is_codense_cover(pmap) == definitional_is_codense(pmap)
    except TooLarge as exc:
        details["cover_codense_agrees"] = None
        details["cover_skipped"] = str(exc)
    flags = [v for d in details.values() if isinstance(d, dict)
             for k, v in d.items() if k.endswith("agrees")]
    flags.append(details["cover_codense_agrees"])
    status = "counterexample" if False in flags else "ok"
    return Verdict(status, details)

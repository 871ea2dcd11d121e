"""Command line interface: ``cocover build|report|cover|verify``.

Exit codes: 0 success, 1 usage or parse error, 2 unmet mathematical
precondition (NonSplit and friends), 3 internal consistency failure or a
verification that found a counterexample.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import io
from .algebra import dual_coalgebra_of_algebra, opposite_algebra, triangular_example_algebra
from .coalgebra import (Coalgebra, group_like_coalgebra, matrix_coalgebra, path_coalgebra,
                        truncated_divided_power, validate_coalgebra)
from .errors import CocoverError, UsageError
from .field import FieldSpec, QQ
from .quiver import parse_quiver

FAMILIES = ("matrix:n", "dividedpower:n", "grouplike:m", "triangular")


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    quiver: Optional[str] = None
    family: Optional[str] = None
    field: Optional[FieldSpec] = None
    max_len: Optional[int] = None
    json: bool = False
    oracle: bool = False
    output: Optional[str] = None
    with_cover: bool = True

    def __post_init__(self):
        if self.oracle and (self.field is None or self.field.characteristic == 0):
            raise UsageError("--oracle needs a finite field (--field fp:p)")


def family_coalgebra(spec: str, field: FieldSpec) -> Coalgebra:
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    if name == "triangular":
        return dual_coalgebra_of_algebra(opposite_algebra(triangular_example_algebra(field)))
    try:
        n = int(arg)
    except ValueError:
        raise UsageError(f"family {spec!r} needs a positive integer, e.g. {name}:2") from None
    if n < 1:
        raise UsageError(f"family size must be positive, got {n}")
    if name == "matrix":
        return matrix_coalgebra(field, n)
    if name == "dividedpower":
        return truncated_divided_power(field, n)
    if name == "grouplike":
        return group_like_coalgebra(field, n)
    raise UsageError(f"unknown family {spec!r}; choose from {', '.join(FAMILIES)}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def load_coalgebra(cfg: RunConfig) -> Coalgebra:
    sources = [x for x in (cfg.input, cfg.quiver, cfg.family) if x is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of INPUT, --quiver or --family")
    field = cfg.field or QQ
    if cfg.quiver is not None:
        q = parse_quiver(_read(cfg.quiver))
        c = path_coalgebra(q, cfg.max_len, field)
    elif cfg.family is not None:
        c = family_coalgebra(cfg.family, field)
    else:
        c = io.coalgebra_from_json(io.loads(_read(cfg.input)), cfg.field)
    bad = validate_coalgebra(c)
    if bad is not None:
        raise UsageError(f"input is not a coalgebra: {bad.axiom} fails at {bad.element}")
    return c


# ---------------------------------------------------------------------------
# commands; each returns (payload, text lines, exit code)


def cmd_build(cfg: RunConfig):
    c = load_coalgebra(cfg)
    payload = io.coalgebra_to_json(c)
    lines = [f"dim {c.dim} over {c.field}", "validation ok"]
    return payload, lines, 0


def cmd_report(cfg: RunConfig):
    from .props import coalgebra_report
    c = load_coalgebra(cfg)
    rep = coalgebra_report(c, with_cover=cfg.with_cover)
    payload = rep.to_dict()
    lines = [f"{k}: {_fmt(v)}" for k, v in rep.values.items()]
    lines += [f"error {k}: {v}" for k, v in rep.errors.items()]
    return payload, lines, 3 if rep.internal_failures else 0


def cmd_cover(cfg: RunConfig):
    from .algebra import wedderburn_blocks
    from .coalgebra import dual_algebra
    from .quotient import covering_coalgebra
    c = load_coalgebra(cfg)
    res = covering_coalgebra(c)
    blocks = wedderburn_blocks(dual_algebra(res.d))
    payload = {
        "D": io.coalgebra_to_json(res.d),
        "pi": io.matrix_json(res.pi),
        "kernel_basis": io.basis_json(res.kernel.space),
        "flags": res.flags,
        "block_dims": blocks.block_dims,
    }
    lines = [f"D: dim {res.d.dim}, blocks {blocks.block_dims}",
             f"kernel: dim {res.kernel.dim}"]
    lines += [f"{k}: {_fmt(v)}" for k, v in res.flags.items()]
    return payload, lines, 0


def cmd_verify(cfg: RunConfig):
    from .props import (coalgebra_report, verify_cocommutative_theorem,
                        verify_coprime_dichotomy, verify_cosemisimple_flat,
                        verify_nonsingular_equivalences)
    c = load_coalgebra(cfg)
    verdicts = {
        "nonsingular_equivalences": verify_nonsingular_equivalences(c),
        "cosemisimple_flat": verify_cosemisimple_flat(c),
        "coprime_dichotomy": verify_coprime_dichotomy(c),
        "cocommutative_theorem": verify_cocommutative_theorem(c),
    }
    rep = coalgebra_report(c, with_cover=False)
    v = rep.values
    verdicts["hierarchy"] = _hierarchy(v)
    if cfg.oracle:
        from .oracles import oracle_verdict
        verdicts["oracle"] = oracle_verdict(c)
    payload = {k: {"status": x.status, "details": x.details} for k, x in verdicts.items()}
    lines = [f"{k}: {x.status}" for k, x in verdicts.items()]
    code = 0 if all(x.ok for x in verdicts.values()) else 3
    return payload, lines, code


def _hierarchy(values):
    from .props import Verdict
    cs, her, ns = values.get("cosemisimple"), values.get("hereditary"), values.get("non_singular")
    if None in (cs, her, ns):
        return Verdict("skipped", {"reason": "a flag could not be computed"})
    details = {"cosemisimple": cs, "hereditary": her, "non_singular": ns}
    ok = (not cs or her) and (not her or ns)
    return Verdict("ok" if ok else "counterexample", details)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


COMMANDS = {"build": cmd_build, "report": cmd_report, "cover": cmd_cover, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocover",
        description="Finite-dimensional coalgebras, their maximal rings of quotients and covers.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "build": "build a coalgebra from a quiver file or a builtin family and print its JSON",
        "report": "structural property report of a coalgebra",
        "cover": "covering coalgebra D -> C from the maximal right ring of quotients of C*",
        "verify": "check the structural theorems on one coalgebra",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("input", nargs="?", help="coalgebra JSON file")
        p.add_argument("--quiver", metavar="FILE", help="quiver text file (path coalgebra)")
        p.add_argument("--family", metavar="NAME",
                       help="builtin family: " + ", ".join(FAMILIES))
        p.add_argument("--field", metavar="F", help="q (default) or fp:<prime>")
        p.add_argument("--maxlen", type=int, metavar="N", help="path length bound for quivers")
        p.add_argument("--json", action="store_true", help="print canonical JSON")
        p.add_argument("-o", "--output", metavar="FILE", help="write JSON to FILE")
        if name == "report":
            p.add_argument("--no-cover", action="store_true", help="skip the cover summary")
        if name == "verify":
            p.add_argument("--oracle", action="store_true",
                           help="also run exhaustive definitional checks (finite fields only)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors; we reserve 2
        return 0 if exc.code == 0 else 1
    try:
        cfg = RunConfig(
            command=args.command, input=args.input, quiver=args.quiver, family=args.family,
            field=FieldSpec.parse(args.field) if args.field else None, max_len=args.maxlen,
            json=args.json or args.command == "build", oracle=getattr(args, "oracle", False),
            output=args.output, with_cover=not getattr(args, "no_cover", False))
        payload, lines, code = COMMANDS[args.command](cfg)
    except CocoverError as exc:
        print(f"cocover: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    text = io.dumps(payload)
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
        print("\n".join(lines))
    elif cfg.json:
        sys.stdout.write(text)
        if args.command == "build":
            print("\n".join(lines), file=sys.stderr)
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())

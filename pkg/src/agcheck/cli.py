"""Command-line interface.

Two subcommands:

* ``compute`` evaluates the dimension polynomial (or its series) for one
  parameter point by a chosen method;
* ``verify`` runs a named verification suite over a parameter grid.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter
error, 3 conjecture-divisibility failure (self-consistency passed but the
cleared numerator is not a polynomial).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algebra import LaurentPoly, ParameterError, Params, Series
from .bosonic import bosonic_sum, select_case
from .fermionic import fermionic_sum
from .polyhedral import (default_cutoff, degree_bounds, hilbert_by_enumeration,
                         hilbert_by_transfer, recursion_rhs)
from .quotient import hilbert_by_quotient
from .verify import SUITES, run_suite

METHODS = ("fermionic", "enumerate", "transfer", "recursion", "bosonic", "oracle")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_DIVISIBLE = 3


class UsageError(ValueError):
    pass


Bound = Union[int, str]  # an integer or the symbol "k"


@dataclass
class GridSpec:
    """Inclusive ranges (or explicit value lists) for N, k, l, r.

    Bounds for l and r may be the symbol ``k``, resolved per grid point.
    A field may carry a parity filter, e.g. ``N=3..7:odd``. Explicit lists
    use ``+``: ``k=1+3``.
    """

    text: str
    fields: dict[str, tuple[list[tuple[Bound, Bound]], Optional[str]]]

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        fields = {}
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "=" not in chunk:
                raise UsageError(f"grid field {chunk!r} is not of the form var=range")
            var, spec = chunk.split("=", 1)
            var = var.strip()
            if var not in ("N", "k", "l", "r"):
                raise UsageError(f"unknown grid variable {var!r}")
            parity = None
            if ":" in spec:
                spec, parity = spec.rsplit(":", 1)
                if parity not in ("even", "odd"):
                    raise UsageError(f"parity filter must be even or odd, got {parity!r}")
            ranges = []
            for item in spec.split("+"):
                item = item.strip()
                if ".." in item:
                    lo, hi = item.split("..", 1)
                    ranges.append((cls._bound(lo, var), cls._bound(hi, var)))
                else:
                    b = cls._bound(item, var)
                    ranges.append((b, b))
            fields[var] = (ranges, parity)
        if "N" not in fields or "k" not in fields:
            raise UsageError("grid must specify at least N and k")
        return cls(text, fields)

    @staticmethod
    def _bound(token: str, var: str) -> Bound:
        token = token.strip()
        if token == "k":
            if var not in ("l", "r"):
                raise UsageError("only l and r bounds may reference k")
            return "k"
        try:
            return int(token)
        except ValueError:
            raise UsageError(f"grid bound {token!r} is not an integer or k") from None

    def _values(self, var: str, k: Optional[int]) -> list[int]:
        if var not in self.fields:
            if var in ("l", "r"):
                raise UsageError(f"this suite needs a grid range for {var}")
            raise UsageError(f"grid must specify {var}")
        ranges, parity = self.fields[var]
        vals = set()
        for lo, hi in ranges:
            lo = k if lo == "k" else lo
            hi = k if hi == "k" else hi
            vals.update(range(lo, hi + 1))
        if parity is not None:
            want = 0 if parity == "even" else 1
            vals = {v for v in vals if v % 2 == want}
        return sorted(vals)

    def resolve(self, need_lr: bool = True) -> list[Params]:
        points = []
        for N in self._values("N", None):
            for k in self._values("k", None):
                if need_lr or "l" in self.fields or "r" in self.fields:
                    ls = self._values("l", k) if need_lr or "l" in self.fields else [k]
                    rs = self._values("r", k) if need_lr or "r" in self.fields else [k]
                else:
                    ls, rs = [k], [k]
                for l in ls:
                    for r in rs:
                        points.append(Params(N, k, l, r))
        if not points:
            raise UsageError("grid resolves to no points")
        return points


# Suites that only depend on (N, k); their grids may omit l and r.
NK_SUITES = {"grouped", "andrews-gordon", "conjecture"}


def parse_point(tokens: Sequence[str]) -> Params:
    vals = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"parameter {tok!r} is not of the form var=value")
        var, raw = tok.split("=", 1)
        if var not in ("N", "k", "l", "r"):
            raise UsageError(f"unknown parameter {var!r}")
        try:
            vals[var] = int(raw)
        except ValueError:
            raise UsageError(f"parameter value {raw!r} is not an integer") from None
    missing = [v for v in ("N", "k", "l", "r") if v not in vals]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join(missing)}")
    return Params(vals["N"], vals["k"], vals["l"], vals["r"])


def render_machine(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def parse_machine(text: str) -> dict:
    obj = json.loads(text)
    if "terms" in obj:
        # round-trip guard: terms must reconstruct to the same canonical list
        poly = LaurentPoly.from_machine_terms(obj["terms"])
        obj["terms"] = poly.machine_terms()
    return obj


def compute_result(params: Params, method: str, cutoff: Optional[int]) -> dict:
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if cutoff is not None and method != "bosonic":
        raise UsageError("--cutoff applies only to the bosonic method")
    meta: dict = {}
    out_cutoff: Optional[int] = None
    if method == "fermionic":
        poly = fermionic_sum(params)
    elif method == "enumerate":
        poly = hilbert_by_enumeration(params)
    elif method == "transfer":
        poly = hilbert_by_transfer(params)
    elif method == "recursion":
        poly = recursion_rhs(params)
    elif method == "oracle":
        qbound = degree_bounds(params)[0]
        poly = hilbert_by_quotient(params, qbound)
        meta["qbound"] = qbound
    else:  # bosonic
        params.require_standard("the bosonic default cutoff and case selection")
        out_cutoff = cutoff if cutoff is not None else default_cutoff(params)
        parity = "even" if "even" in select_case(params) else "odd"
        series = bosonic_sum(params, parity, out_cutoff)
        poly = series.poly
        meta["parity"] = parity
    box = poly.support_box()
    meta["maxdeg_q"] = box[0][1] if box else 0
    meta["maxdeg_z"] = box[1][1] if box else 0
    meta["value_at_one"] = str(poly.at_ones())
    result = {
        "params": {"N": params.N, "k": params.k, "l": params.l, "r": params.r},
        "method": method,
        "terms": poly.machine_terms(),
        "meta": meta,
    }
    if out_cutoff is not None:
        result["cutoff"] = out_cutoff
    return result


def cmd_compute(args) -> int:
    params = parse_point(args.params)
    result = compute_result(params, args.method, args.cutoff)
    if args.format == "machine":
        print(render_machine(result))
    else:
        print(LaurentPoly.from_machine_terms(result["terms"]).text())
    return EXIT_OK


def cmd_verify(args) -> int:
    grid_text = args.grid
    if grid_text is None and args.config:
        with open(args.config) as fh:
            config = json.load(fh)
        grid_text = config.get("grids", {}).get(args.suite)
    if grid_text is None:
        raise UsageError("no --grid given and no config default for this suite")
    spec = GridSpec.parse(grid_text)
    points = spec.resolve(need_lr=args.suite not in NK_SUITES)
    results = run_suite(args.suite, points, args.cutoff)
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for res in results:
        counts[res.status] += 1
    exit_code = EXIT_OK
    if counts["fail"]:
        exit_code = EXIT_MISMATCH
    elif args.suite == "conjecture" and any(
            res.status == "pass" and res.data.get("divisible") is False for res in results):
        exit_code = EXIT_NOT_DIVISIBLE
    if args.format == "machine":
        print(render_machine({
            "suite": args.suite,
            "grid": grid_text,
            "cutoff": args.cutoff,
            "checks": [res.as_dict() for res in results],
            "counts": counts,
            "exit_code": exit_code,
        }))
    else:
        for res in results:
            line = f"{res.status.upper():4s} {res.label}"
            if res.detail:
                line += f" -- {res.detail}"
            print(line)
        print(f"{args.suite}: {counts['pass']} passed, {counts['fail']} failed, "
              f"{counts['skip']} skipped")
    return exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agcheck",
        description="Exact dimension polynomials of bounded-exponent quotient rings "
                    "and verification of their fermionic/bosonic identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="evaluate one parameter point")
    pc.add_argument("params", nargs="+", metavar="VAR=VALUE",
                    help="the four parameters, e.g. N=2 k=1 l=1 r=1")
    pc.add_argument("--method", required=True, choices=METHODS)
    pc.add_argument("--cutoff", type=int, default=None,
                    help="q-degree cutoff for the bosonic series (default: maxdeg_q + 2(N+1))")
    pc.add_argument("--format", choices=("text", "machine"), default="text")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="run a verification suite over a grid")
    pv.add_argument("suite", choices=sorted(SUITES))
    pv.add_argument("--grid", default=None,
                    help='e.g. "N=2..4,k=0..2,l=0..k,r=0..k"; lists use +, parity filters :odd/:even')
    pv.add_argument("--cutoff", type=int, default=None, help="override the series comparison depth")
    pv.add_argument("--config", default=None,
                    help="JSON file whose grids[SUITE] supplies a default grid")
    pv.add_argument("--format", choices=("text", "machine"), default="text")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

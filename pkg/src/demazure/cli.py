"""Command-line interface.

Exit codes: 0 on success, 1 when a verification the command performs
comes out false (a bound fails, an identity breaks, the audit routes
disagree), 2 on usage or validation errors.

Output discipline: coordinates, indices, and word letters are plain
JSON integers; potentially large quantities (dimensions, coefficients,
multiplicities) are decimal strings.  stdout is deterministic for a
given invocation; cache messages go to stderr.

The character cache (``--cache DIR``, default from the environment
variable DEMAZURE_CACHE_DIR) stores canonical character JSON keyed by
(type, word, weight) with a content checksum; corrupt or mismatched
entries are recomputed and overwritten with a warning.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from demazure.branching import (
    LeviDatum,
    dimension_conserved,
    levi_weyl_dim,
    restrict_to_levi,
    unirad_mult_identity,
)
from demazure.branching import _coset_bound
from demazure.characters import (
    character_from_json,
    character_to_json,
    demazure_character,
    dual_weight,
    weight_multiplicity,
    weyl_dim,
)
from demazure.growth import dimension_sequence, finite_differences, growth_degree
from demazure.roots import root_system
from demazure.sl3t import (
    AUDIT_COLUMNS,
    Biweight,
    audit_rows,
    closed_mult,
    closed_n,
    mult_via_weights,
    sigma_member,
    theorem2_mult,
)
from demazure.weyl import demazure_fold, from_word, identity, reduced_word

CACHE_ENV_VAR = "DEMAZURE_CACHE_DIR"

__all__ = ["JobSpec", "jobspec_from_argv", "run", "main", "CACHE_ENV_VAR"]


@dataclass(frozen=True)
class JobSpec:
    """A CLI invocation in structured form; round-trips through flag syntax."""

    subcommand: str
    flags: tuple[tuple[str, str], ...]

    def to_argv(self) -> list[str]:
        return [self.subcommand, *(f"--{k}={v}" for k, v in self.flags)]


def jobspec_from_argv(argv: Sequence[str]) -> JobSpec:
    if not argv or argv[0].startswith("-"):
        raise ValueError("argv must start with a subcommand")
    flags = []
    for tok in argv[1:]:
        if not tok.startswith("--") or "=" not in tok:
            raise ValueError(f"expected --name=value flags, got {tok!r}")
        name, _, value = tok[2:].partition("=")
        flags.append((name, value))
    return JobSpec(argv[0], tuple(flags))


def _csv_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _cache_dir(ns: argparse.Namespace) -> Path | None:
    raw = ns.cache or os.environ.get(CACHE_ENV_VAR)
    return Path(raw) if raw else None


def _cached_character(rs, word, lam, cache_dir: Path | None):
    if cache_dir is None:
        return demazure_character(rs, word, lam)
    key = (
        f"{rs.name};word={','.join(map(str, word))};"
        f"weight={','.join(map(str, lam))}"
    )
    path = cache_dir / (hashlib.sha256(key.encode()).hexdigest() + ".json")
    if path.exists():
        try:
            obj = json.loads(path.read_text())
            text = obj["character"]
            if (
                obj["key"] == key
                and hashlib.sha256(text.encode()).hexdigest() == obj["sha256"]
            ):
                _, char = character_from_json(text)
                print(f"cache hit: {path.name}", file=sys.stderr)
                return char
            print(f"cache entry {path.name} is corrupt; recomputing", file=sys.stderr)
        except (json.JSONDecodeError, KeyError, OSError, ValueError):
            print(f"cache entry {path.name} is corrupt; recomputing", file=sys.stderr)
    char = demazure_character(rs, word, lam)
    text = character_to_json(rs, char)
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "key": key,
        "sha256": hashlib.sha256(text.encode()).hexdigest(),
        "character": text,
    }
    path.write_text(json.dumps(payload, separators=(",", ":")))
    return char


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cmd_char(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    char = _cached_character(rs, _csv_ints(ns.word), _csv_ints(ns.weight), _cache_dir(ns))
    print(character_to_json(rs, char))
    return 0


def _cmd_dim(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    char = _cached_character(rs, _csv_ints(ns.word), _csv_ints(ns.weight), _cache_dir(ns))
    print(sum(char.values()))
    return 0


def _cmd_weight_mult(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    print(weight_multiplicity(rs, _csv_ints(ns.weight), _csv_ints(ns.mu)))
    return 0


def _cmd_dual(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    print(_dumps(list(dual_weight(rs, _csv_ints(ns.weight)))))
    return 0


def _cmd_hecke(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    x = demazure_fold(identity(rs), _csv_ints(ns.left))
    x = demazure_fold(x, _csv_ints(ns.right))
    print(_dumps({"word": list(reduced_word(x)), "length": x.length}))
    return 0


def _cmd_branch(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    lam = _csv_ints(ns.weight)
    subset = _csv_ints(ns.subset)
    levi = LeviDatum(rs, frozenset(subset))
    result = restrict_to_levi(lam, levi)
    bound = _coset_bound(result.lam, levi)
    constituents = []
    ok = True
    for mu, mult in result.constituents:
        holds = mult <= bound
        ok = ok and holds
        constituents.append(
            {
                "weight": list(mu),
                "mult": str(mult),
                "levi_dim": str(levi_weyl_dim(rs, levi.subset, mu)),
                "holds": holds,
            }
        )
    length_holds = result.length <= bound
    conserved = dimension_conserved(result)
    out = {
        "root_system": rs.name,
        "weight": list(result.lam),
        "subset": sorted(levi.subset),
        "weyl_dim": str(weyl_dim(rs, result.lam)),
        "bound": str(bound),
        "constituents": constituents,
        "length": str(result.length),
        "length_holds": length_holds,
        "dimension_conserved": conserved,
    }
    print(_dumps(out))
    return 0 if (ok and length_holds and conserved) else 1


def _cmd_unirad(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    levi = LeviDatum(rs, frozenset(_csv_ints(ns.subset)))
    demazure_side, levi_side, equal = unirad_mult_identity(_csv_ints(ns.weight), levi)
    out = {
        "root_system": rs.name,
        "weight": list(_csv_ints(ns.weight)),
        "subset": sorted(levi.subset),
        "demazure_side": str(demazure_side),
        "levi_side": str(levi_side),
        "equal": equal,
    }
    print(_dumps(out))
    return 0 if equal else 1


def _cmd_growth(ns: argparse.Namespace) -> int:
    rs = root_system(ns.type)
    w = from_word(rs, _csv_ints(ns.word))
    seq = dimension_sequence(w, _csv_ints(ns.weight), ns.n)
    degree = growth_degree(seq)
    if ns.format == "tsv":
        tables = [list(seq.values)]
        for _ in range(w.length + 1):
            tables.append(finite_differences(tables[-1]))
        header = ["n", "dim"] + [f"diff{k}" for k in range(1, w.length + 2)]
        print("\t".join(header))
        for n in range(len(seq.values)):
            row = [str(n), str(seq.values[n])]
            for k in range(1, w.length + 2):
                row.append(str(tables[k][n]) if n < len(tables[k]) else "")
            print("\t".join(row))
    else:
        out = {
            "root_system": rs.name,
            "word": list(reduced_word(w)),
            "weight": list(_csv_ints(ns.weight)),
            "values": [str(v) for v in seq.values],
            "degree": degree,
            "length_w": w.length,
            "match": degree == w.length,
            "bound_holds": degree <= w.length,
        }
        print(_dumps(out))
    return 0 if degree <= w.length else 1


def _cmd_sl3t(ns: argparse.Namespace) -> int:
    if ns.grid:
        kmax, lmax = _csv_ints(",".join(ns.grid))
        print("\t".join(AUDIT_COLUMNS))
        ok = True
        for row in audit_rows(kmax, lmax):
            ok = ok and row[-1]
            print("\t".join(str(x) for x in row))
        return 0 if ok else 1
    if ns.k1 is None or ns.k2 is None or ns.l is None:
        raise ValueError("need either --grid or all of --k1, --k2, --l")
    bw = Biweight(ns.k1, ns.k2, _csv_ints(ns.l))
    n = closed_n(bw)
    a, b, c = closed_mult(bw), mult_via_weights(bw), theorem2_mult(bw)
    agree = a == b == c
    out = {
        "k1": bw.k1,
        "k2": bw.k2,
        "l": list(bw.l),
        "member": sigma_member(bw),
        "n": str(n) if n.denominator != 1 else str(int(n)),
        "closed_mult": str(a),
        "weight_mult": str(b),
        "theorem2_mult": str(c),
        "agree": agree,
    }
    print(_dumps(out))
    return 0 if agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demazure",
        description="Exact Demazure characters and multiplicity bounds.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("char", _cmd_char, help="Demazure character as canonical JSON")
    p.add_argument("--type", required=True)
    p.add_argument("--word", required=True, help="comma-separated 1-based letters; empty for the identity")
    p.add_argument("--weight", required=True)
    p.add_argument("--cache", default=None)

    p = add("dim", _cmd_dim, help="Demazure module dimension")
    p.add_argument("--type", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--cache", default=None)

    p = add("weight-mult", _cmd_weight_mult, help="weight multiplicity in an irreducible module")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--mu", required=True)

    p = add("dual", _cmd_dual, help="highest weight of the dual module")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)

    p = add("hecke", _cmd_hecke, help="0-Hecke product of two words")
    p.add_argument("--type", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("branch", _cmd_branch, help="branch to a Levi subgroup, with bounds")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--subset", required=True)

    p = add("unirad", _cmd_unirad, help="parabolic Demazure dimension vs Levi dimension")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--subset", required=True)

    p = add("growth", _cmd_growth, help="dilation dimensions and growth degree")
    p.add_argument("--type", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = add("sl3t", _cmd_sl3t, help="triple multiplicity audit for the SL3 torus quotient")
    p.add_argument("--k1", type=int, default=None)
    p.add_argument("--k2", type=int, default=None)
    p.add_argument("--l", default=None)
    p.add_argument(
        "--grid",
        nargs="+",
        default=None,
        help="kmax lmax (or kmax,lmax): stream the TSV audit grid",
    )

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.func(ns)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Calibrate Tait build records against the family catalog.

For every family, search the small space of build conventions (checkerboard
color; for polyhedral symbols also the slot-edge assignment and slot
orientation) for one that reproduces the catalog polynomial exactly on a
parameter grid.  Survivors are verified on the full grid and emitted as the
frozen BUILD_RECORDS literal for linkpoly.tait.

Run:  python scripts/calibrate_builder.py [--grid 2 3] > records.py
"""

from __future__ import annotations

import argparse
import itertools
import sys

from linkpoly.conway import IntTangle, Plus, Polyhedron, Product, Ramification, bind, parse
from linkpoly.families import eval_family, load_catalog
from linkpoly import tait
from linkpoly.tait import (
    AlgRecord,
    NetRecord,
    PolyRecord,
    UnsupportedConstruct,
    _BASES,
    build_concrete,
    build_polyhedral,
)
from linkpoly.tutte import tutte

CACHE: dict = {}

# explicit series-parallel templates for shapes the generic rules cannot
# express (found by directed search against the catalog)
EXPLICIT = {
    "(p,q) 1 1 (r,s)": NetRecord(
        ("s", [
            ("s", [("bundle", "p"), ("bundle", "q")]),
            ("p", [("e",), ("s", [("e",), ("p", [("path", "r"), ("path", "s")])])]),
        ]),
        dual=True,
    ),
}


def grids(params, values):
    for vals in itertools.product(values, repeat=len(params)):
        yield dict(zip(params, vals))


def check_algebraic(fid, params, values):
    results = []
    for dual in (False, True):
        rec = AlgRecord(dual=dual)
        ok = True
        for env in grids(params, values):
            try:
                g = build_concrete(bind(parse(fid), env), rec)
            except UnsupportedConstruct:
                return None
            if tutte(g, CACHE) != eval_family(fid, env):
                ok = False
                break
        if ok:
            results.append(rec)
    return results[0] if results else None


def slot_modes(tangle):
    if isinstance(tangle, Product) and len(tangle.factors) > 1:
        return ["plain", "dual", "rev", "revdual"]
    return ["plain", "dual"]


def check_polyhedral(fid, params, values):
    ast0 = parse(fid)
    assert isinstance(ast0, Polyhedron)
    bases = [""]
    if ast0.base == "9*":
        bases.append("prism")
    if _BASES.get(ast0.base) is None:
        return None
    nslots = len(ast0.slots)
    mode_opts = [slot_modes(s.tangle) for s in ast0.slots]
    envs = list(grids(params, values))
    probe = envs[0]
    probe_target = eval_family(fid, probe)
    probe_ast = bind(ast0, probe)
    survivors = []
    for base_name in bases:
        edge_count = _BASES[base_name or ast0.base].edge_count
        for edges in itertools.permutations(range(edge_count), nslots):
            for modes in itertools.product(*mode_opts):
                rec = PolyRecord(tuple(zip(edges, modes)), base=base_name)
                try:
                    g = build_polyhedral(probe_ast, rec)
                except UnsupportedConstruct:
                    continue
                if tutte(g, CACHE) == probe_target:
                    survivors.append(rec)
    for rec in survivors:
        ok = True
        for env in envs[1:]:
            g = build_polyhedral(bind(ast0, env), rec)
            if tutte(g, CACHE) != eval_family(fid, env):
                ok = False
                break
        if ok:
            return rec
    return None


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--only", nargs="*", help="restrict to these family ids")
    args = ap.parse_args()

    cat = load_catalog()
    records: dict[str, object] = {}
    misses = []
    for entry in cat.families():
        fid = entry.id
        if args.only and fid not in args.only:
            continue
        if fid == "(2n)*":
            records[fid] = PolyRecord(())
            continue
        if fid in EXPLICIT:
            rec = EXPLICIT[fid]
            ok = all(
                tutte(build_concrete(bind(parse(fid), env), rec, env), CACHE)
                == eval_family(fid, env)
                for env in grids(entry.params, args.grid)
            )
            if ok:
                records[fid] = rec
                print(f"# ok   {fid!r}: explicit template", file=sys.stderr)
            else:
                misses.append(fid)
                print(f"# MISS {fid!r} (explicit template failed)", file=sys.stderr)
            continue
        ast = parse(fid)
        try:
            if isinstance(ast, Polyhedron):
                rec = check_polyhedral(fid, entry.params, args.grid)
            else:
                rec = check_algebraic(fid, entry.params, args.grid)
        except UnsupportedConstruct:
            rec = None
        if rec is None:
            misses.append(fid)
            print(f"# MISS {fid!r}", file=sys.stderr)
        else:
            records[fid] = rec
            print(f"# ok   {fid!r}: {rec}", file=sys.stderr)

    print("BUILD_RECORDS: dict[str, AlgRecord | PolyRecord] = {")
    for fid, rec in records.items():
        if isinstance(rec, AlgRecord):
            print(f"    {fid!r}: AlgRecord(dual={rec.dual}),")
        else:
            print(f"    {fid!r}: PolyRecord({rec.slots!r}),")
    print("}")
    print(f"# supported: {len(records)}; unsupported: {len(misses)}", file=sys.stderr)
    if misses:
        print("# misses:", misses, file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Exit codes are stable: 0 success/verified, 1 verification negative,
2 invalid input, 3 realization/search failure, 4 resource limit.
All randomness (completeness probes, search order) derives from --seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlas as atlas_mod
from . import errors
from .census import census, enumerate_spheres
from .codec import (
    PLANAR_CODE_HEADER,
    read_planar_code,
    read_text,
    write_planar_code,
    write_text,
)
from .fans import certificate_from_json, certificate_to_json, verify
from .moves import format_script
from .realize import RealizationResult, SearchConfig, realize
from .spheres import degree_profile

EXIT_OK = 0
EXIT_VERIFY_NEGATIVE = 1
EXIT_INVALID_INPUT = 2
EXIT_REALIZE_FAILED = 3
EXIT_RESOURCE_LIMIT = 4


def _read_input(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_triangulations(data, fmt):
    """Decode one or more triangulations from raw bytes."""
    if fmt == "auto":
        if data.startswith(PLANAR_CODE_HEADER):
            fmt = "planar_code"
        else:
            head = data.lstrip()[:1]
            fmt = "certificate" if head == b"{" else "text"
    if fmt == "planar_code":
        return read_planar_code(data), fmt
    if fmt == "certificate":
        return [certificate_from_json(data.decode("utf-8")).K], fmt
    return [read_text(data.decode("utf-8"))], fmt


def _write_output(path, payload):
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _emit(args, human_lines, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


# -- commands --------------------------------------------------------------------


def cmd_validate(args):
    try:
        Ks, _ = _load_triangulations(_read_input(args.input), args.format)
    except errors.FanweaverError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    lines = []
    payload = []
    for i, K in enumerate(Ks):
        prof = degree_profile(K)
        E = K.edge_count
        F = K.face_count
        lines.append(
            f"record {i}: m={K.m} E={E} F={F} euler={K.m - E + F} "
            f"profile {prof.label()}"
        )
        payload.append(
            {
                "record": i,
                "m": K.m,
                "edges": E,
                "faces": F,
                "euler": K.m - E + F,
                "profile": {str(d): c for d, c in prof},
            }
        )
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_census(args):
    try:
        rows = census(
            args.max_vertices,
            memory_budget=int(args.memory_budget_gb * (1 << 30)),
            jobs=args.jobs,
        )
    except errors.ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_LIMIT
    lines = [f"{'m':>4} {'spheres':>12} {'min-deg-5':>10}"]
    payload = []
    for r in rows:
        lines.append(f"{r.m:>4} {r.total:>12} {r.min_deg5:>10}")
        payload.append({"m": r.m, "total": r.total, "min_deg5": r.min_deg5})
    _emit(args, lines, payload)
    if args.out:
        Ks = []
        for m in range(4, args.max_vertices + 1):
            Ks.extend(enumerate_spheres(m, min_degree=args.min_degree, jobs=args.jobs))
        if args.out_format == "planar_code":
            _write_output(args.out, write_planar_code(Ks))
        else:
            _write_output(args.out, "".join(write_text(K) for K in Ks))
    return EXIT_OK


def _realize_one(item):
    K, bound, budget, seed = item
    try:
        return realize(K, SearchConfig(coordinate_bound=bound, node_budget=budget, seed=seed))
    except errors.FanweaverError as exc:
        return exc


def cmd_realize(args):
    try:
        Ks, _ = _load_triangulations(_read_input(args.input), args.format)
    except errors.FanweaverError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    items = [(K, args.bound, args.budget, args.seed) for K in Ks]
    if args.jobs > 1 and len(items) > 1:
        import multiprocessing

        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(_realize_one, items)
    else:
        results = [_realize_one(it) for it in items]
    lines = []
    payload = []
    certs = []
    scripts = []
    status = EXIT_OK
    for i, res in enumerate(results):
        if isinstance(res, RealizationResult):
            rep = res.report
            lines.append(
                f"record {i}: base={res.base} ops={len(res.log)} "
                f"nonsingular={rep.nonsingular} complete={rep.complete}"
            )
            payload.append(
                {
                    "record": i,
                    "base": res.base,
                    "operations": len(res.log),
                    "nonsingular": rep.nonsingular,
                    "complete": rep.complete,
                    "covering_count": rep.covering_count,
                }
            )
            certs.append(certificate_to_json(res.fan))
            scripts.append(format_script(res.log))
        else:
            status = EXIT_REALIZE_FAILED
            lines.append(f"record {i}: FAILED ({res})")
            entry = {"record": i, "error": str(res)}
            if isinstance(res, errors.RealizationFailed) and res.stuck is not None:
                dump = write_text(res.stuck)
                entry["stuck"] = dump
                lines.append("stuck sphere:")
                lines.extend("  " + ln for ln in dump.splitlines())
            payload.append(entry)
    _emit(args, lines, payload)
    if args.out and certs:
        _write_output(args.out, "\n".join(certs) + "\n")
    if args.log and scripts:
        _write_output(args.log, "".join(scripts))
    return status


def cmd_verify(args):
    try:
        data = _read_input(args.cert).decode("utf-8")
        docs = [ln for ln in data.splitlines() if ln.strip() and not ln.startswith("#")]
        fans = [certificate_from_json(ln) for ln in docs]
        if not fans:
            raise ValueError("no certificate documents found")
    except (errors.FanweaverError, ValueError, json.JSONDecodeError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    lines = []
    payload = []
    all_ok = True
    for i, fa in enumerate(fans):
        rep = verify(fa, seed=args.seed)
        ok = rep.nonsingular and rep.complete
        all_ok = all_ok and ok
        lines.append(
            f"record {i}: m={fa.K.m} nonsingular={rep.nonsingular} "
            f"complete={rep.complete} covering={rep.covering_count}"
        )
        for face, det in rep.bad_faces:
            lines.append(f"  face {face}: det = {det}")
        payload.append(
            {
                "record": i,
                "m": fa.K.m,
                "nonsingular": rep.nonsingular,
                "complete": rep.complete,
                "covering_count": rep.covering_count,
                "bad_faces": [[list(f), d] for f, d in rep.bad_faces],
            }
        )
    _emit(args, lines, payload)
    return EXIT_OK if all_ok else EXIT_VERIFY_NEGATIVE


def cmd_atlas(args):
    try:
        atlas = atlas_mod.load_atlas()
    except (errors.CorruptAtlas, FileNotFoundError) as exc:
        print(f"atlas unavailable: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if args.action == "list":
        lines = []
        payload = []
        for e in atlas:
            star = f"star={e.star_vertex} k={e.star_k}" if e.star_k else "no star"
            lines.append(f"{e.label:<20} m={e.m:<3} {star:<14} {e.provenance}")
            payload.append(
                {
                    "label": e.label,
                    "m": e.m,
                    "star_vertex": e.star_vertex,
                    "star_k": e.star_k,
                    "provenance": e.provenance,
                }
            )
        _emit(args, lines, payload)
        return EXIT_OK
    if args.action == "show":
        e = atlas.by_label(args.label)
        if e is None:
            print(f"unknown label: {args.label!r}", file=sys.stderr)
            return EXIT_INVALID_INPUT
        lines = [
            f"label: {e.label}",
            f"m: {e.m}",
            f"star_vertex: {e.star_vertex}",
            f"star_k: {e.star_k}",
            f"provenance: {e.provenance}",
            "triangulation:",
        ]
        lines.extend("  " + ln for ln in write_text(e.K).splitlines())
        lines.append("certificate:")
        lines.append("  " + certificate_to_json(e.fan()))
        payload = {
            "label": e.label,
            "m": e.m,
            "star_vertex": e.star_vertex,
            "star_k": e.star_k,
            "provenance": e.provenance,
            "faces": [list(f) for f in e.K.faces],
            "vectors": [list(v) for v in e.vectors],
        }
        _emit(args, lines, payload)
        return EXIT_OK
    # verify-all
    lines = []
    payload = []
    ok = True
    for e in atlas:
        try:
            e.fan()
            good = True
        except errors.CertificateInvalid:
            good = False
            ok = False
        lines.append(f"{e.label:<20} {'ok' if good else 'FAIL'}")
        payload.append({"label": e.label, "ok": good})
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_VERIFY_NEGATIVE


def cmd_convert(args):
    try:
        data = _read_input(args.input)
        Ks, src = _load_triangulations(data, args.src_format)
    except errors.FanweaverError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    if src == "certificate":
        print("note: vectors dropped in conversion", file=sys.stderr)
    if args.dst_format == "planar_code":
        _write_output(args.out, write_planar_code(Ks))
    elif args.dst_format == "text":
        _write_output(args.out, "".join(write_text(K) for K in Ks))
    else:  # certificate shell without vectors
        docs = [
            json.dumps(
                {"faces": [list(f) for f in K.faces], "m": K.m},
                sort_keys=True,
                separators=(", ", ": "),
            )
            for K in Ks
        ]
        _write_output(args.out, "\n".join(docs) + "\n")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for probes and search")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = argparse.ArgumentParser(
        prog="fanweaver",
        description="Simplicial 2-spheres as non-singular complete fans: "
        "validate, enumerate, realize, verify.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    q = add("validate", help="validate triangulation file(s)")
    q.add_argument("input", help="path or - for stdin")
    q.add_argument(
        "--format",
        choices=["auto", "text", "planar_code", "certificate"],
        default="auto",
    )
    q.set_defaults(func=cmd_validate)

    q = add("census", help="count sphere triangulations per m")
    q.add_argument("--max-vertices", "-M", type=int, required=True)
    q.add_argument("--min-degree", "-D", type=int, default=None)
    q.add_argument("--memory-budget-gb", type=float, default=8.0)
    q.add_argument("--out", help="dump enumerated spheres to this path")
    q.add_argument(
        "--out-format", choices=["planar_code", "text"], default="planar_code"
    )
    q.set_defaults(func=cmd_census)

    q = add("realize", help="realize sphere(s) as verified fans")
    q.add_argument("input")
    q.add_argument(
        "--format",
        choices=["auto", "text", "planar_code", "certificate"],
        default="auto",
    )
    q.add_argument("--bound", type=int, default=3, help="search coordinate bound")
    q.add_argument("--budget", type=int, default=10_000_000, help="search node budget")
    q.add_argument("--out", help="write certificate(s) here")
    q.add_argument("--log", help="write operation script(s) here")
    q.set_defaults(func=cmd_realize)

    q = add("verify", help="verify a fan certificate file")
    q.add_argument("cert", help="path or - for stdin")
    q.set_defaults(func=cmd_verify)

    q = add("atlas", help="inspect the built-in catalogue")
    q.add_argument("action", choices=["list", "show", "verify-all"])
    q.add_argument("label", nargs="?", help="entry label for 'show'")
    q.set_defaults(func=cmd_atlas)

    q = add("convert", help="convert between formats")
    q.add_argument("input")
    q.add_argument(
        "--from",
        dest="src_format",
        choices=["auto", "text", "planar_code", "certificate"],
        default="auto",
    )
    q.add_argument(
        "--to",
        dest="dst_format",
        choices=["text", "planar_code", "certificate"],
        required=True,
    )
    q.add_argument("--out", default="-")
    q.set_defaults(func=cmd_convert)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except errors.ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        code = EXIT_RESOURCE_LIMIT
    except errors.FanweaverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INVALID_INPUT
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 ok, 2 usage or invalid input, 3 verification failure,
4 sweep discrepancy.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence

from .classify import BundleUnion, HalfJumpUnion, PrismUnion, SingleJumpUnion, certificate, classify, verify_certificate
from .document import EmbeddingDocument
from .embed import embed
from .errors import CirculantError
from .graph import circ, normalize_jump, predicted_mbt
from .render import to_dot, to_svg
from .verify import brute_force_mbt, verify_embedding

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_SWEEP = 0, 2, 3, 4

log = logging.getLogger("circbook")


def thread_budget() -> int:
    """Worker count: ``CIRC_THREADS`` if set, else the CPU count."""
    raw = os.environ.get("CIRC_THREADS", "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer CIRC_THREADS=%r", raw)
    return os.cpu_count() or 1


def _family_fields(fam) -> dict:
    if isinstance(fam, SingleJumpUnion):
        return {"family": "single-jump-union", "copies": fam.copies, "n1": fam.n1, "k": fam.k}
    if isinstance(fam, BundleUnion):
        return {"family": "bundle", "copies": fam.copies, "base": fam.base_len,
                "fiber": fam.fiber_len, "shift": fam.shift, "trivial_shift": fam.trivial_shift}
    if isinstance(fam, PrismUnion):
        return {"family": "prism", "copies": fam.copies, "fiber": fam.fiber_len}
    assert isinstance(fam, HalfJumpUnion)
    return {"family": "half-jump-union", "copies": fam.copies, "n1": fam.n1}


def cmd_classify(args) -> int:
    cls = classify(args.n, args.k1, args.k2)
    doc = {"n": cls.n, "k1": cls.k1, "k2": cls.k2, "d1": cls.d1, "d2": cls.d2, "components": cls.d}
    doc.update(_family_fields(cls.family))
    doc["description"] = cls.describe()
    status = EXIT_OK
    if args.certify:
        comp, cert = certificate(cls)
        ok = verify_certificate(comp, cert)
        doc["certificate"] = "ok" if ok else "failed"
        status = EXIT_OK if ok else EXIT_VERIFY
    if args.json:
        print(json.dumps(doc, ensure_ascii=False, indent=1))
    else:
        print(cls.describe())
        if args.certify:
            print(f"certificate: {doc['certificate']}")
    return status


def cmd_embed(args) -> int:
    k = normalize_jump(args.k, args.n)
    spec = circ(args.n, k)
    emb = embed(args.n, k)
    report = verify_embedding(spec, emb)
    if not report.valid or emb.pages != predicted_mbt(spec):
        print(f"verification failed: {report.first_violation}", file=sys.stderr)
        return EXIT_VERIFY
    doc = EmbeddingDocument.from_embedding(spec, emb)
    if args.out:
        doc.write(args.out)
    if args.svg:
        Path(args.svg).write_text(to_svg(doc), encoding="utf-8")
    if args.dot:
        Path(args.dot).write_text(to_dot(doc), encoding="utf-8")
    if not args.out:
        sys.stdout.write(doc.dumps())
    else:
        print(f"C({args.n},{k}): {emb.pages} pages via {emb.route}")
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = EmbeddingDocument.read(args.file)
    report = verify_embedding(doc.spec, doc.to_embedding())
    print(json.dumps({
        "valid": report.valid,
        "proper_matching_per_page": report.proper_matching_per_page,
        "noncrossing_per_page": report.noncrossing_per_page,
        "complete_cover": report.complete_cover,
        "pages_used": report.pages_used,
        "first_violation": report.first_violation,
    }, indent=1))
    return EXIT_OK if report.valid else EXIT_VERIFY


def cmd_oracle(args) -> int:
    k = normalize_jump(args.k, args.n)
    print(brute_force_mbt(circ(args.n, k), args.cap, workers=thread_budget()))
    return EXIT_OK


def _sweep_row(nk):
    n, k = nk
    spec = circ(n, k)
    try:
        emb = embed(n, k)
    except Exception as exc:  # reported as a discrepancy row
        return {"n": n, "k": k, "route": None, "pages": None,
                "expected": predicted_mbt(spec), "valid": False, "error": repr(exc)}
    return {"n": n, "k": k, "route": emb.route, "pages": emb.pages,
            "expected": predicted_mbt(spec), "valid": verify_embedding(spec, emb).valid}


def _oracle_row(nk):
    n, k = nk
    spec = circ(n, k)
    return {"n": n, "k": k, "oracle": brute_force_mbt(spec, 6, workers=1), "expected": predicted_mbt(spec)}


def _instances(lo: int, hi: int):
    return [(n, k) for n in range(lo, hi + 1) for k in range(1, n // 2 + 1)]


def run_sweep(n_max: int, oracle_max: int, workers: int) -> dict:
    start = time.perf_counter()
    embeds = _instances(3, n_max)
    oracles = _instances(3, oracle_max)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, embeds, chunksize=16))
            orows = list(pool.map(_oracle_row, oracles))
    else:
        rows = [_sweep_row(x) for x in embeds]
        orows = [_oracle_row(x) for x in oracles]
    bad = [r for r in rows if not r["valid"] or r["pages"] != r["expected"]]
    obad = [r for r in orows if r["oracle"] != r["expected"]]
    return {
        "n_max": n_max,
        "oracle_max": oracle_max,
        "embed_rows": rows,
        "oracle_rows": orows,
        "embed_failures": len(bad),
        "oracle_failures": len(obad),
        "seconds": round(time.perf_counter() - start, 3),
    }


def cmd_sweep(args) -> int:
    if args.n_max < 3:
        print("--n-max must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    report = run_sweep(args.n_max, args.oracle_max, thread_budget())
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=1) + "\n", encoding="utf-8")
    print(f"embed: {len(report['embed_rows'])} instances, {report['embed_failures']} failures; "
          f"oracle: {len(report['oracle_rows'])} instances, {report['oracle_failures']} failures; "
          f"{report['seconds']} s")
    return EXIT_SWEEP if report["embed_failures"] or report["oracle_failures"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circbook", description="Circulant graph classification and matching book embeddings.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify C(Z_n,{k1,k2})")
    c.add_argument("n", type=int)
    c.add_argument("k1", type=int)
    c.add_argument("k2", type=int)
    c.add_argument("--json", action="store_true")
    c.add_argument("--certify", action="store_true", help="build and check an isomorphism certificate")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("embed", help="optimal matching book embedding of C(n,k)")
    e.add_argument("n", type=int)
    e.add_argument("k", type=int)
    e.add_argument("--out", help="write the JSON document here instead of stdout")
    e.add_argument("--svg")
    e.add_argument("--dot")
    e.set_defaults(func=cmd_embed)

    v = sub.add_parser("verify", help="check an embedding document")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive matching book thickness (n <= 10)")
    o.add_argument("n", type=int)
    o.add_argument("k", type=int)
    o.add_argument("--cap", type=int, default=6)
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("sweep", help="embed+verify sweep and oracle cross-check")
    s.add_argument("--n-max", type=int, default=60)
    s.add_argument("--oracle-max", type=int, default=9)
    s.add_argument("--report")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CirculantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

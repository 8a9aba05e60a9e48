"""Command line front end.

All documents and reports are JSON with a fixed field order; DOT is written
only by ``export-dot``.  Exit codes: 0 success or property holds, 1 property
fails (witness on stdout), 2 input or usage error, 3 size cap exceeded.
Errors go to stderr as JSON.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from . import config
from .algebra import ElementaryProduct, FieldAlgebra, powerset_algebra, sikorski_extend
from .errors import CriterionViolated, InternalDisagreement, LimitExceeded, NfreeError
from .hypergraph import (
    Hypergraph,
    Poset,
    anticlique_algebra,
    anticliques,
    clique_algebra,
    comparability_graph,
    disjoint_union,
    join,
    minimalize,
    perp_hypergraph,
    verify_reconstruction,
)
from .independence import (
    ContainsZero,
    Perp1Fail,
    Perp2Fail,
    Perp3Fail,
    PropAFail,
    i_n_spectrum,
    is_n_independent,
    parse_degree,
)
from .space import cmpn_upper_bound, is_n_ary, is_n_linked, subbase

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(NfreeError):
    pass


class UsageError(NfreeError):
    pass


# ---------------------------------------------------------------- documents


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None


def _labels(raw, what: str) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(v, str) for v in raw):
        raise InputError(f"{what} must be a list of strings")
    return raw


def load_hypergraph_doc(path: str) -> tuple[Hypergraph, dict]:
    """Parse a HypergraphDoc.  Posets come back as their comparability graph;
    ``info`` records the kind and any pairs added by transitive closure."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: document must be a JSON object")
    kind = doc.get("kind", "hypergraph")
    vertices = _labels(doc.get("vertices", []), "vertices")
    if kind == "poset":
        pairs = doc.get("lt", [])
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(v, str) for v in p)
            for p in pairs
        ):
            raise InputError("lt must be a list of [lower, upper] string pairs")
        poset, added = Poset.from_relation(vertices, pairs)
        if added:
            print(
                json.dumps({"warning": "transitive closure added pairs", "added": added}),
                file=sys.stderr,
            )
        return comparability_graph(poset), {"kind": "poset", "poset": poset, "added": added}
    if kind not in ("graph", "hypergraph"):
        raise InputError(f"unknown document kind {kind!r}")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("edges must be a list of lists of vertex labels")
    g = Hypergraph(tuple(vertices), tuple(tuple(_labels(e, "edge")) for e in edges))
    if kind == "graph" and not g.is_graph:
        raise InputError("document declares kind 'graph' but has an edge of size != 2")
    return g, {"kind": kind}


def hypergraph_doc(g: Hypergraph) -> dict:
    kind = "graph" if g.is_graph else "hypergraph"
    return {
        "kind": kind,
        "vertices": [str(v) for v in g.vertices],
        "edges": [[str(v) for v in e] for e in g.edge_labels()],
    }


def set_label(members) -> str:
    return "{" + ",".join(str(v) for v in members) + "}"


def load_target(path: str) -> FieldAlgebra:
    """A powerset document ``{"kind": "powerset", "ground": [...]}`` or a
    hypergraph document, whose target is the powerset of its anticliques
    labelled like ``{a,c}``."""
    doc = _load_json(path)
    if isinstance(doc, dict) and doc.get("kind") == "powerset":
        return powerset_algebra(_labels(doc.get("ground", []), "ground"))
    g, _ = load_hypergraph_doc(path)
    return powerset_algebra(set_label(a) for a in anticliques(g))


def load_map(path: str) -> dict[str, list[str]]:
    """MapDoc: ``{"map": {gen: [labels]}}`` or ``{"map": [[gen, [labels]], ...]}``."""
    doc = _load_json(path)
    raw = doc.get("map") if isinstance(doc, dict) else None
    if isinstance(raw, dict):
        pairs = list(raw.items())
    elif isinstance(raw, list):
        pairs = []
        for item in raw:
            if not (isinstance(item, list) and len(item) == 2):
                raise InputError("map pairs must be [generator, [labels]]")
            pairs.append((item[0], item[1]))
    else:
        raise InputError("map document needs a 'map' object or pair list")
    out = {}
    for key, value in pairs:
        if not isinstance(key, str):
            raise InputError("generator labels must be strings")
        if key in out:
            raise InputError(f"generator {key!r} mapped twice")
        out[key] = _labels(value, f"image of {key!r}")
    return out


def _ba_json(g: Hypergraph, b) -> dict:
    return {
        "ground": [set_label(a) for a in b.ambient.labels],
        "generators": {
            str(v): [set_label(a) for a in gen.labels] for v, gen in zip(g.vertices, b.generators)
        },
        "atoms": len(b.atom_masks),
        "size": b.size,
    }


def _atoms_json(g: Hypergraph, b) -> list:
    out = []
    for atom, p in zip(b.atoms, b.atom_products()):
        out.append(
            {
                "atom": [set_label(a) for a in atom.labels],
                "signs": {str(g.vertices[i]): s for i, s in p.signs},
            }
        )
    return out


def _names(g: Hypergraph, b, elems) -> list[str]:
    lookup = {gen.mask: str(v) for v, gen in zip(g.vertices, b.generators)}
    return [lookup.get(x.mask, set_label(x.labels)) for x in elems]


def _witness_json(w, g, b):
    if w is None:
        return None
    if isinstance(w, ContainsZero):
        return {"kind": "ContainsZero", "element": _names(g, b, [w.element])[0]}
    if isinstance(w, Perp1Fail):
        return {"kind": "Perp1Fail", "F": _names(g, b, w.F)}
    if isinstance(w, Perp2Fail):
        return {"kind": "Perp2Fail", "F": _names(g, b, w.F), "n": w.n}
    if isinstance(w, Perp3Fail):
        return {"kind": "Perp3Fail", "F": _names(g, b, w.F), "G": _names(g, b, w.G)}
    if isinstance(w, PropAFail):
        return {
            "kind": "PropAFail",
            "R": _names(g, b, w.R),
            "signs": list(w.signs),
            "n": "omega" if w.n is None else w.n,
        }
    raise TypeError(type(w))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _replay(ok: bool, what: str) -> None:
    if not ok:
        raise InternalDisagreement(f"{what} witness failed to re-verify")


# ---------------------------------------------------------------- commands


def cmd_anticliques(args) -> int:
    g, _ = load_hypergraph_doc(args.file)
    found = anticliques(g)
    if args.count:
        sys.stdout.write(f"{len(found)}\n")
    else:
        _emit([[str(v) for v in a] for a in found])
    return EXIT_OK


def _algebra_command(args, build) -> int:
    g, _ = load_hypergraph_doc(args.file)
    b = build(g)
    if args.size:
        sys.stdout.write(f"{b.size}\n")
    elif args.atoms:
        _emit(_atoms_json(g, b))
    else:
        _emit(_ba_json(g, b))
    return EXIT_OK


def cmd_ba(args) -> int:
    return _algebra_command(args, anticlique_algebra)


def cmd_bc(args) -> int:
    return _algebra_command(args, clique_algebra)


def cmd_indep(args) -> int:
    g, _ = load_hypergraph_doc(args.file)
    n = parse_degree(args.n)
    b = anticlique_algebra(g)
    report = is_n_independent(b.generators, n)
    out = {
        "holds": report.holds,
        "n": str(n) if n is not None else None,
        "witness": _witness_json(report.witness, g, b),
        "definitional_witness": _witness_json(report.definitional_witness, g, b),
    }
    if args.verify_witness and not report.holds:
        _replay(report.witness.verify(), "independence")
        _replay(report.definitional_witness.verify(), "definitional")
        out["witness_verified"] = True
    _emit(out)
    return EXIT_OK if report.holds else EXIT_FAIL


def cmd_perp(args) -> int:
    g, _ = load_hypergraph_doc(args.file)
    b = anticlique_algebra(g)
    perp = perp_hypergraph(b, checked=not args.unchecked)
    iso = verify_reconstruction(b, checked=not args.unchecked)
    _emit(
        {
            "input": hypergraph_doc(g),
            "perp": hypergraph_doc(perp),
            "matches_minimalized_input": perp == minimalize(g),
            "atoms": len(b.atom_masks),
            "reconstruction": "verified" if iso.is_injective else "failed",
        }
    )
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.powerset < 0:
        raise UsageError("--powerset must be nonnegative")
    n = parse_degree(args.n)
    algebra = powerset_algebra(range(args.powerset))
    mode = "sampled" if args.sampled else "exhaustive"
    spectrum = i_n_spectrum(algebra, n, mode=mode, samples=args.samples, seed=args.seed)
    _emit(
        {
            "algebra": {"powerset": args.powerset},
            "n": str(n),
            "exhaustive": spectrum.exhaustive,
            "spectrum": list(spectrum.sizes),
            "i_n": spectrum.minimum,
            "families": len(spectrum.families),
        }
    )
    return EXIT_OK


def cmd_extend(args) -> int:
    g, _ = load_hypergraph_doc(args.file)
    source = anticlique_algebra(g)
    target = load_target(args.target)
    raw = load_map(args.map)
    unknown = sorted(set(raw) - {str(v) for v in g.vertices})
    if unknown:
        raise InputError(f"map mentions unknown generators {unknown}")
    missing = [str(v) for v in g.vertices if str(v) not in raw]
    if missing:
        raise InputError(f"map undefined on generators {missing}")
    try:
        images = [target.element(raw[str(v)]) for v in g.vertices]
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    try:
        h = sikorski_extend(source, images, target)
    except CriterionViolated as exc:
        p: ElementaryProduct = exc.witness
        out = {
            "extends": False,
            "witness": {
                "signs": {str(g.vertices[i]): s for i, s in p.signs},
                "image": [str(x) for x in exc.image.labels],
            },
        }
        if args.verify_witness:
            _replay(
                source.evaluate(p).is_zero and not exc.image.is_zero
                and exc.image == _image_product(images, p, target),
                "extension",
            )
            out["witness_verified"] = True
        _emit(out)
        return EXIT_FAIL
    _emit(
        {
            "extends": True,
            "generators": {
                str(v): [str(x) for x in y.labels] for v, y in zip(g.vertices, h.on_generators())
            },
            "table": [
                {"atom": [set_label(a) for a in atom.labels], "image": [str(x) for x in img.labels]}
                for atom, img in h.table()
            ],
        }
    )
    return EXIT_OK


def _image_product(images, p, target):
    acc = target.one
    for i, s in p.signs:
        acc = acc * images[i].power(s)
    return acc


def cmd_nary(args) -> int:
    g, _ = load_hypergraph_doc(args.file)
    if args.n is None:
        bound = cmpn_upper_bound(g)
        _emit(
            {
                "least_n": bound.n,
                "max_edge_size": bound.max_edge_size,
                "one_ary": bound.one_ary,
            }
        )
        return EXIT_OK
    if args.n < 1:
        raise UsageError("--n must be positive")
    family = subbase(g)
    verdict = is_n_ary(family, args.n)
    out = {
        "n": args.n,
        "n_ary": verdict.holds,
        "witness": None if verdict.holds else [[str(v), s] for v, s in verdict.witness],
    }
    if args.verify_witness and not verdict.holds:
        masks = [family.get(tag) for tag in verdict.witness]
        meet = family.top
        for m in masks:
            meet &= m
        _replay(is_n_linked(masks, args.n, family.top).holds and meet == 0, "arity")
        out["witness_verified"] = True
    _emit(out)
    return EXIT_OK if verdict.holds else EXIT_FAIL


def _string_relabel(i, v):
    return f"{i}:{v}"


def cmd_op(args) -> int:
    g1, _ = load_hypergraph_doc(args.file1)
    g2, _ = load_hypergraph_doc(args.file2)
    build = disjoint_union if args.operation == "union" else join
    result = build([g1, g2], relabel=_string_relabel)
    text = json.dumps(hypergraph_doc(result), indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def to_dot(g: Hypergraph) -> str:
    """Vertices become nodes, 2-edges plain edges, larger hyperedges an
    auxiliary labelled node joined to each member."""
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f"  {json.dumps(str(v))};")
    for k, e in enumerate(g.edge_labels()):
        if len(e) == 2:
            lines.append(f"  {json.dumps(str(e[0]))} -- {json.dumps(str(e[1]))};")
        else:
            aux = json.dumps(f"edge:{k}")
            lines.append(f"  {aux} [shape=box, label={json.dumps(set_label(e))}];")
            for v in e:
                lines.append(f"  {aux} -- {json.dumps(str(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    g, _ = load_hypergraph_doc(args.file)
    text = to_dot(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-vertices", type=int)
    common.add_argument("--max-generators", type=int)
    common.add_argument("--max-ground", type=int)
    common.add_argument(
        "--verify-witness", action="store_true", help="re-check any witness before printing it"
    )

    parser = _Parser(prog="nfree", description="n-free boolean algebras at finite scale")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("anticliques", parents=[common])
    p.add_argument("file")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_anticliques)

    for name, func in (("ba", cmd_ba), ("bc", cmd_bc)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--atoms", action="store_true")
        group.add_argument("--size", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("indep", parents=[common])
    p.add_argument("file")
    p.add_argument("--n", required=True, help="1..9 or omega")
    p.set_defaults(func=cmd_indep)

    p = sub.add_parser("perp", parents=[common])
    p.add_argument("file")
    p.add_argument("--unchecked", action="store_true", help="skip the omega-independence check")
    p.set_defaults(func=cmd_perp)

    p = sub.add_parser("spectrum", parents=[common])
    p.add_argument("--powerset", type=int, required=True, metavar="K")
    p.add_argument("--n", required=True)
    p.add_argument("--sampled", action="store_true")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("extend", parents=[common])
    p.add_argument("file")
    p.add_argument("map")
    p.add_argument("target")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("nary", parents=[common])
    p.add_argument("file")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_nary)

    p = sub.add_parser("op", parents=[common])
    p.add_argument("operation", choices=["union", "join"])
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("export-dot", parents=[common])
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def _limit_overrides(args) -> dict:
    out = {}
    for flag, name in (
        ("max_vertices", "max_vertices"),
        ("max_generators", "max_generators"),
        ("max_ground", "max_ground"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            out[name] = value
    return out


def _fail(exc: Exception, code: int) -> int:
    payload = exc.payload() if isinstance(exc, NfreeError) else {
        "error": type(exc).__name__,
        "message": str(exc),
    }
    sys.stderr.write(json.dumps(payload) + "\n")
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(exc, EXIT_INPUT)
    overrides = _limit_overrides(args)
    scope = config.limits(**overrides) if overrides else nullcontext()
    try:
        with scope:
            return args.func(args)
    except LimitExceeded as exc:
        return _fail(exc, EXIT_CAP)
    except (NfreeError, ValueError) as exc:
        return _fail(exc, EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())

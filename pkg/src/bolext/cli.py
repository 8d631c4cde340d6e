"""Command-line interface.

Exit codes: 0 = the computation succeeded / the property holds, 1 = the
property fails (invalid structure, inequivalent objects, non-inducible pair,
inexact sequence), 2 = usage, parse, or enumeration-bound errors.  Reports
are deterministic byte-for-byte for identical inputs and options.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import documents as docs
from .bol import enumerate_automorphisms, enumerate_bol_algebras, validate_bol
from .cohomology import cohomology23
from .core import DEFAULT_ENUMERATION_BOUND, Status, Variant
from .errors import ParseError, UnsupportedEnumerationError, UsageError
from .exactlin import Matrix, PrimeField, RATIONALS, enumerate_vectors
from .extensions import (as_extension, canonical_section, classify_corpus,
                         extensions_equivalent, extract_cocycle, make_section,
                         validate_extension)
from .nonabelian import (cocycles_equivalent_via, solve_equivalence,
                         validate_nab_cocycle)
from .representation import semidirect_product, validate_representation
from .wells import (AutPair, inducible_via, lift_automorphism, solve_inducibility,
                    verify_wells_exactness, wells_map)


def _field_of(obj):
    return obj.field


def _print_report(kind, report, field):
    print(f"{kind}: {'valid' if report.valid else 'invalid'}")
    for v in report.violations:
        print("violation:", v.describe(lambda x: str(field.format_scalar(x))))
    return 0 if report.valid else 1


def _parse_field(token):
    if token in ("Q", "q"):
        return RATIONALS
    try:
        return PrimeField(int(token))
    except ValueError as exc:
        raise UsageError(f"field must be Q or a prime, got {token!r}") from exc


def _parse_map_spec(spec, field, rows, cols):
    """Inline map specs: 'id', 'diag(a,b,...)', a bare scalar (scales the
    identity), a JSON matrix literal, or a JSON file path."""
    spec = spec.strip()
    if spec == "id":
        if rows != cols:
            raise UsageError("'id' needs a square shape")
        return Matrix.identity(field, rows)
    if spec.startswith("diag(") and spec.endswith(")"):
        parts = [t.strip() for t in spec[5:-1].split(",")]
        if len(parts) != rows or rows != cols:
            raise UsageError(f"diag(...) needs {rows} entries")
        entries = [[field.parse_scalar(_as_token(field, parts[i])) if i == j
                    else field.zero for j in range(cols)] for i in range(rows)]
        return Matrix(field, entries)
    if spec.startswith("["):
        doc = json.loads(spec)
        return docs.matrix_from_doc(field, doc, rows, cols, "<inline>", "$")
    try:
        scalar = field.parse_scalar(_as_token(field, spec))
    except ValueError:
        with open(spec, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        return docs.matrix_from_doc(field, doc, rows, cols, spec, "$")
    if rows != cols:
        raise UsageError("a scalar spec needs a square shape")
    return Matrix.identity(field, rows).scale(scalar)


def _as_token(field, text):
    return text if not field.is_prime_field else int(text)


def _load_phi(args, field, m, n):
    if args.phi is None:
        return None
    return _parse_map_spec(args.phi, field, m, n)


def _section_for(args, ext):
    if getattr(args, "section", None):
        mat = _parse_map_spec(args.section, ext.field, ext.total.dim, ext.n)
        return make_section(ext, mat)
    return canonical_section(ext)


def _pair_for(args, ext):
    alpha = _parse_map_spec(args.alpha, ext.field, ext.n, ext.n)
    beta = _parse_map_spec(args.beta, ext.field, ext.m, ext.m)
    return AutPair(alpha, beta)


def _decision_exit(dec, found_msg, none_msg):
    if dec.status is Status.FOUND:
        print(found_msg)
        if isinstance(dec.witness, Matrix):
            print("witness:", json.dumps(docs.matrix_to_doc(dec.witness)))
        return 0
    if dec.status is Status.NONE:
        print(f"{none_msg}: {dec.reason}" if dec.reason else none_msg)
        return 1
    print(f"undecided: {dec.reason}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_validate(args):
    a = docs.parse_document(args.algebra, "algebra")
    return _print_report("algebra", validate_bol(a), a.field)


def _cmd_validate_rep(args):
    a = docs.parse_document(args.algebra, "algebra")
    r = docs.parse_document(args.rep, "representation")
    return _print_report("representation", validate_representation(a, r), a.field)


def _cmd_semidirect(args):
    a = docs.parse_document(args.algebra, "algebra")
    r = docs.parse_document(args.rep, "representation")
    print(docs.canonical_json(docs.algebra_to_doc(semidirect_product(a, r))), end="")
    return 0


def _cmd_cohomology(args):
    a = docs.parse_document(args.algebra, "algebra")
    r = docs.parse_document(args.rep, "representation")
    res = cohomology23(a, r, args.variant)
    print(f"variant: {args.variant.value}")
    print(f"z={res.z_dim} b={res.b_dim} h={res.h_dim}")
    if args.representatives:
        for k, (nu, om) in enumerate(res.representatives):
            print(f"representative {k}:",
                  json.dumps(docs.cochain_pair_to_doc(nu, om)))
    return 0


def _cmd_nab_validate(args):
    c = docs.parse_document(args.cocycle, "nab-cocycle")
    rep = validate_nab_cocycle(c, args.variant)
    print(f"variant: {args.variant.value}")
    return _print_report("cocycle", rep, c.field)


def _cmd_build_extension(args):
    c = docs.parse_document(args.cocycle, "nab-cocycle")
    ext = as_extension(c)
    print(docs.canonical_json(docs.extension_to_doc(ext)), end="")
    return 0


def _cmd_extract_cocycle(args):
    e = docs.parse_document(args.extension, "extension")
    rep = validate_extension(e)
    if not rep.valid:
        raise UsageError(f"extension invalid: {', '.join(rep.tags())}")
    s = _section_for(args, e)
    c = extract_cocycle(e, s)
    print(docs.canonical_json(docs.nab_to_doc(c)), end="")
    return 0


def _cmd_equiv_cocycles(args):
    c1 = docs.parse_document(args.c1, "nab-cocycle")
    c2 = docs.parse_document(args.c2, "nab-cocycle")
    if args.phi is not None:
        phi = _parse_map_spec(args.phi, c1.field, c1.m, c1.n)
        return _print_report("equivalence", cocycles_equivalent_via(c1, c2, phi),
                             c1.field)
    return _decision_exit(solve_equivalence(c1, c2, args.bound),
                          "equivalent", "not equivalent")


def _cmd_equiv_extensions(args):
    e1 = docs.parse_document(args.e1, "extension")
    e2 = docs.parse_document(args.e2, "extension")
    return _decision_exit(extensions_equivalent(e1, e2, args.bound),
                          "equivalent", "not equivalent")


def _cmd_classify(args):
    base = docs.parse_document(args.base, "algebra")
    fiber = docs.parse_document(args.fiber, "algebra")
    actions = None
    if args.actions:
        r = docs.parse_document(args.actions, "representation")
        if r.algebra_dim != base.dim or r.module_dim != fiber.dim:
            raise UsageError("action document does not match base and fiber")
        actions = (r.mu, r.theta, r.dd)
    count, reps, valid = classify_corpus(base, fiber, actions, args.bound,
                                         args.variant)
    print(f"valid-cocycles: {valid}")
    print(f"classes: {count}")
    if not args.count_only:
        for k, c in enumerate(reps):
            print(f"representative {k}:",
                  json.dumps(docs.cochain_pair_to_doc(c.nu, c.omega)))
    return 0


def _cmd_inducible(args):
    e = docs.parse_document(args.extension, "extension")
    pair = _pair_for(args, e)
    if args.phi is not None:
        phi = _parse_map_spec(args.phi, e.field, e.m, e.n)
        s = _section_for(args, e)
        rep = inducible_via(e, s, pair, phi)
        if rep.valid:
            print("inducible: yes")
            return 0
        print(f"not inducible: {', '.join(rep.tags())}")
        return 1
    dec = solve_inducibility(e, pair, args.bound)
    if dec.status is Status.FOUND:
        print("inducible: yes")
        print("phi:", json.dumps(docs.matrix_to_doc(dec.witness)))
        return 0
    if dec.status is Status.NONE:
        print(f"not inducible: {dec.reason}")
        return 1
    print(f"undecided: {dec.reason}", file=sys.stderr)
    return 2


def _cmd_lift(args):
    e = docs.parse_document(args.extension, "extension")
    pair = _pair_for(args, e)
    s = _section_for(args, e)
    phi = _load_phi(args, e.field, e.m, e.n)
    if phi is None:
        dec = solve_inducibility(e, pair, args.bound)
        if dec.status is Status.NONE:
            print(f"not inducible: {dec.reason}")
            return 1
        if dec.status is Status.UNDECIDED:
            print(f"undecided: {dec.reason}", file=sys.stderr)
            return 2
        phi = dec.witness
    gamma = lift_automorphism(e, s, pair, phi)
    print(docs.canonical_json(docs.matrix_to_doc(gamma)), end="")
    return 0


def _cmd_wells(args):
    e = docs.parse_document(args.extension, "extension")
    pair = _pair_for(args, e)
    report = wells_map(e, pair, args.bound)
    print(f"wells-class: {report.status}")
    if report.witness is not None:
        print("witness:", json.dumps(docs.matrix_to_doc(report.witness)))
    if report.status == "zero":
        return 0
    if report.status in ("nonzero", "incompatible"):
        return 1
    print(f"undecided: {report.reason}", file=sys.stderr)
    return 2


def _cmd_exactness(args):
    e = docs.parse_document(args.extension, "extension")
    report = verify_wells_exactness(e, args.bound)
    print(docs.canonical_json(report.as_dict()), end="")
    return 0 if report.all_verdicts else 1


def _cmd_enumerate(args):
    if args.kind == "algebras":
        field = _parse_field(args.field)
        count = 0
        for a in enumerate_bol_algebras(field, args.dim, args.tri_zero, args.bound):
            count += 1
            if not args.count_only:
                print(json.dumps(docs.algebra_to_doc(a)))
        print(f"count: {count}")
        return 0
    if args.kind == "automorphisms":
        a = docs.parse_document(args.algebra, "algebra")
        auts = enumerate_automorphisms(a, args.bound)
        if not args.count_only:
            for g in auts:
                print(json.dumps(docs.matrix_to_doc(g)))
        print(f"count: {len(auts)}")
        return 0
    if args.kind == "vectors":
        field = _parse_field(args.field)
        count = 0
        for vec in enumerate_vectors(field, args.dim):
            count += 1
            if not args.count_only:
                print(json.dumps([field.format_scalar(c) for c in vec]))
        print(f"count: {count}")
        return 0
    raise UsageError(f"unknown enumeration kind {args.kind!r}")


# ---------------------------------------------------------------------------

def _build_parser():
    top = argparse.ArgumentParser(
        prog="bolext",
        description="Exact computations with Bol algebra structure constants: "
                    "validation, cohomology, extensions, inducibility.")
    top.add_argument("--variant", choices=[v.value for v in Variant],
                     default=Variant.CORRECTED.value,
                     help="identity set for the audited identities")
    top.add_argument("--bound", type=int, default=DEFAULT_ENUMERATION_BOUND,
                     help="cap on brute-force candidate counts")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the structure axioms")
    p.add_argument("algebra")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("validate-rep", help="check the module identities")
    p.add_argument("--algebra", required=True)
    p.add_argument("--rep", required=True)
    p.set_defaults(fn=_cmd_validate_rep)

    p = sub.add_parser("semidirect", help="emit the semidirect sum")
    p.add_argument("--algebra", required=True)
    p.add_argument("--rep", required=True)
    p.set_defaults(fn=_cmd_semidirect)

    p = sub.add_parser("cohomology", help="cocycle/coboundary/quotient dimensions")
    p.add_argument("--algebra", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--representatives", action="store_true")
    p.set_defaults(fn=_cmd_cohomology)

    p = sub.add_parser("nab-validate", help="check the cocycle identity suite")
    p.add_argument("--cocycle", required=True)
    p.set_defaults(fn=_cmd_nab_validate)

    p = sub.add_parser("build-extension", help="glue a cocycle into an extension")
    p.add_argument("--cocycle", required=True)
    p.set_defaults(fn=_cmd_build_extension)

    p = sub.add_parser("extract-cocycle", help="read the cocycle off a section")
    p.add_argument("--extension", required=True)
    p.add_argument("--section")
    p.set_defaults(fn=_cmd_extract_cocycle)

    p = sub.add_parser("equiv-cocycles", help="decide cocycle equivalence")
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--phi", help="check this map instead of searching")
    p.set_defaults(fn=_cmd_equiv_cocycles)

    p = sub.add_parser("equiv-extensions", help="decide extension equivalence")
    p.add_argument("--e1", required=True)
    p.add_argument("--e2", required=True)
    p.set_defaults(fn=_cmd_equiv_extensions)

    p = sub.add_parser("classify", help="classes of cocycles with fixed actions")
    p.add_argument("--base", required=True)
    p.add_argument("--fiber", required=True)
    p.add_argument("--actions", help="representation document with mu/theta/D")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("inducible", help="decide inducibility of a pair")
    p.add_argument("--extension", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--phi")
    p.add_argument("--section")
    p.set_defaults(fn=_cmd_inducible)

    p = sub.add_parser("lift", help="assemble the covering automorphism")
    p.add_argument("--extension", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--phi")
    p.add_argument("--section")
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("wells", help="class verdict of the acted-minus-original cocycle")
    p.add_argument("--extension", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(fn=_cmd_wells)

    p = sub.add_parser("exactness", help="brute-force the full sequence")
    p.add_argument("--extension", required=True)
    p.set_defaults(fn=_cmd_exactness)

    p = sub.add_parser("enumerate", help="algebras, automorphisms, or vectors")
    p.add_argument("--kind", required=True,
                   choices=["algebras", "automorphisms", "vectors"])
    p.add_argument("--field", help="Q or a prime modulus")
    p.add_argument("--dim", type=int)
    p.add_argument("--tri-zero", action="store_true")
    p.add_argument("--algebra")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.variant = Variant(args.variant)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, UnsupportedEnumerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

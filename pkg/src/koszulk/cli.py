"""Command-line front end: one subcommand per library surface.

Output is deterministic byte for byte for a fixed invocation: all terms are
emitted in the canonical composition order, JSON is emitted with sorted
keys, and CSV uses plain "\\n" line endings.  JSON documents carry a
top-level ``"schema": 1`` field.

Exit codes: 0 success, 1 input error (unknown subcommand/flag, malformed
words or documents), 2 cap violation (including the KOSZULK_MAX_CAP
environment bound, default 32), 3 failed verification suite.  Errors print
one machine-readable line ``koszulk: error: <category>: <message>`` on the
diagnostic stream.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import bar, hopf, lie, zeta
from .core import (
    CapExceededError,
    CheckReport,
    Composition,
    DimensionSeries,
    FormalSum,
    KoszulkError,
    ParseError,
    Partition,
    TensorSum,
    ValidationError,
    format_rational,
    parse_composition,
    parse_formal_sum,
)

__all__ = ["dispatch", "main", "OPERATION_COVERAGE", "SUBCOMMANDS"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_VERIFY = 3

DEFAULT_MAX_CAP = 32
SCHEMA_VERSION = 1

VERIFY_SUITES = ("hopf", "duality", "exp-iso", "bar", "witt", "zeta-global")

SUBCOMMANDS = (
    "shuffle",
    "stuffle",
    "coproduct",
    "antipode",
    "pair",
    "exp",
    "log",
    "symm-embed",
    "bar-homology",
    "lie-dims",
    "pbw",
    "lyndon",
    "ext1",
    "zeta",
    "vsc",
    "imj",
    "h1c",
    "preset",
    "mzv-dims",
    "motivic-check",
    "verify",
)

# Designated subcommand through which each library operation is exercised
# (several operations may share a subcommand; each operation appears once).
OPERATION_COVERAGE = {
    "core.series_of_tensor_algebra": "pbw",
    "core.series_of_polynomial_algebra": "pbw",
    "core.series_of_exterior_algebra": "verify",
    "core.series_pointwise_product": "motivic-check",
    "hopf.shuffle": "shuffle",
    "hopf.quasi_shuffle": "stuffle",
    "hopf.deconcatenate": "coproduct",
    "hopf.nsymm_coproduct": "coproduct",
    "hopf.antipode": "antipode",
    "hopf.pairing": "pair",
    "hopf.hoffman_exp": "exp",
    "hopf.hoffman_log": "log",
    "hopf.symm_to_qsymm": "symm-embed",
    "hopf.verify_bialgebra": "verify",
    "bar.load_presentation": "bar-homology",
    "bar.build_bar_complex": "bar-homology",
    "bar.homology_dimensions": "bar-homology",
    "bar.induced_product": "bar-homology",
    "bar.kuenneth_preset_check": "verify",
    "lie.free_lie_dimensions": "lie-dims",
    "lie.pbw_check": "pbw",
    "lie.lyndon_words": "lyndon",
    "lie.ext1_dimension": "ext1",
    "zeta.bernoulli": "zeta",
    "zeta.zeta_odd_negative": "zeta",
    "zeta.von_staudt_clausen": "vsc",
    "zeta.h1c_order_at_p": "h1c",
    "zeta.image_of_j_order": "imj",
    "zeta.ktheory_preset": "preset",
    "zeta.mzv_dimension": "mzv-dims",
    "zeta.motivic_consistency": "motivic-check",
}


class UsageError(KoszulkError):
    """Bad command line (unknown subcommand, flag, or argument shape)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); route to exit 1 instead
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="koszulk", description="exact combinatorial Hopf/Koszul calculator")
    sub = parser.add_subparsers(dest="command", metavar="subcommand")

    def add(name: str, help_: str, *, words: int = 0, word_names: Sequence[str] = ()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        for i in range(words):
            label = word_names[i] if i < len(word_names) else f"word{i + 1}"
            p.add_argument(label, type=str)
        p.add_argument("-w", "--max-weight", type=int, default=8, dest="max_weight")
        p.add_argument("--cap", type=int, default=None)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return p

    add("shuffle", "shuffle product of two words", words=2)
    add("stuffle", "quasi-shuffle product of two words", words=2)
    p = add("coproduct", "coproduct of a word", words=1, word_names=("word",))
    p.add_argument("--product", choices=("shuffle", "stuffle", "concat"), default="shuffle")
    p = add("antipode", "antipode of a word or formal sum", words=1, word_names=("element",))
    p.add_argument("--product", choices=("shuffle", "stuffle", "concat"), default="shuffle")
    add("pair", "duality pairing of two basis words", words=2)
    add("exp", "Hoffman exponential of a word or formal sum", words=1, word_names=("element",))
    add("log", "Hoffman logarithm of a word or formal sum", words=1, word_names=("element",))
    add("symm-embed", "monomial symmetric function as a quasi-symmetric sum", words=1, word_names=("partition",))

    p = add("bar-homology", "bar homology dimensions of an algebra presentation")
    p.add_argument("--algebra", required=True, help="preset string or presentation JSON file")
    p.add_argument("--induced-product", nargs=2, metavar=("U", "V"), default=None)

    add("lie-dims", "free graded Lie algebra dimensions", words=1, word_names=("generators",))
    add("pbw", "check the enveloping-algebra series identity", words=1, word_names=("generators",))
    add("lyndon", "Lyndon words over an alphabet, bounded by weight", words=1, word_names=("alphabet",))
    add("ext1", "number of free generators in one weight", words=2, word_names=("generators", "weight"))
    add("zeta", "Bernoulli number and negative odd zeta value", words=1, word_names=("k",))
    add("vsc", "von Staudt-Clausen primes and denominator", words=1, word_names=("two_k",))
    add("imj", "order of the image-of-J cyclic group", words=1, word_names=("k",))
    add("h1c", "local continuous-cohomology order at an odd prime", words=2, word_names=("p", "k"))
    add("preset", "named K-theoretic dimension series", words=1, word_names=("name",))
    add("mzv-dims", "motivic multizeta dimension series")
    p = add("motivic-check", "three-way motivic dimension consistency")
    p.add_argument("--selftest-corrupt", action="store_true", help="inject a corrupted series; the check must fail")
    p = add("verify", "run a verification suite")
    p.add_argument("--suite", choices=VERIFY_SUITES, required=True)
    return parser


# ---------------------------------------------------------------------------
# Rendering.


def _json_document(payload: dict) -> str:
    doc = {"schema": SCHEMA_VERSION}
    doc.update(payload)
    return json.dumps(doc, sort_keys=True) + "\n"


def _csv_document(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _render_formal_sum(x: FormalSum, fmt: str) -> str:
    if fmt == "json":
        return _json_document({"kind": "formal-sum", "terms": x.to_json_terms()})
    if fmt == "csv":
        return _csv_document(
            ("word", "coeff"),
            [(str(w), format_rational(c)) for w, c in x.items()],
        )
    return str(x) + "\n"


def _render_tensor_sum(x: TensorSum, fmt: str) -> str:
    if fmt == "json":
        return _json_document({"kind": "tensor-sum", "terms": x.to_json_terms()})
    if fmt == "csv":
        return _csv_document(
            ("left", "right", "coeff"),
            [(str(l), str(r), format_rational(c)) for (l, r), c in x.items()],
        )
    return str(x) + "\n"


def _render_series(series: DimensionSeries, fmt: str) -> str:
    start = min(0, series.min_degree())
    rows = [(d, series[d]) for d in range(start, series.cap + 1)]
    if fmt == "json":
        return _json_document(
            {
                "kind": "dimension-series",
                "cap": series.cap,
                "dims": {str(d): v for d, v in rows if v},
            }
        )
    if fmt == "csv":
        return _csv_document(("degree", "dim"), rows)
    return "".join(f"{d}\t{v}\n" for d, v in rows)


def _render_scalar(value, fmt: str, *, label: str = "value") -> str:
    text = format_rational(value) if isinstance(value, Fraction) else str(value)
    if fmt == "json":
        return _json_document({"kind": "scalar", label: text})
    if fmt == "csv":
        return _csv_document((label,), [(text,)])
    return text + "\n"


def _render_reports(reports: Sequence[CheckReport], fmt: str) -> tuple[str, bool]:
    passed = all(r.passed for r in reports)
    if fmt == "json":
        doc = _json_document(
            {
                "kind": "report",
                "passed": passed,
                "checks": [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "checked": r.checked,
                        "failures": list(r.failures),
                        "notes": list(r.notes),
                    }
                    for r in reports
                ],
            }
        )
        return doc, passed
    if fmt == "csv":
        return (
            _csv_document(
                ("name", "passed", "checked"),
                [(r.name, "pass" if r.passed else "fail", r.checked) for r in reports],
            ),
            passed,
        )
    return "".join(r.summary() + "\n" for r in reports), passed


def _render_words(words: Sequence[Composition], fmt: str) -> str:
    if fmt == "json":
        return _json_document({"kind": "word-list", "words": [list(w.letters) for w in words]})
    if fmt == "csv":
        return _csv_document(("word", "weight"), [(str(w), w.weight) for w in words])
    if not words:
        return "(none)\n"
    return "".join(("()" if w.length == 0 else f"({w})") + "\n" for w in words)


# ---------------------------------------------------------------------------
# Argument coercion.


def _parse_int(text: str, label: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{label} must be an integer: {text!r}") from None


def _parse_element(text: str) -> FormalSum:
    """A bare word, or a full formal-sum expression."""
    try:
        return FormalSum.word(parse_composition(text))
    except ParseError:
        return parse_formal_sum(text)


def _max_cap() -> int:
    raw = os.environ.get("KOSZULK_MAX_CAP", str(DEFAULT_MAX_CAP))
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"KOSZULK_MAX_CAP is not an integer: {raw!r}") from None
    if value < 0:
        raise ValidationError(f"KOSZULK_MAX_CAP must be >= 0: {value}")
    return value


def _bounded_cap(requested: int | None, default: int, limit: int, label: str = "cap") -> int:
    value = default if requested is None else requested
    if value < 0:
        raise ValidationError(f"{label} must be >= 0: {value}")
    if value > limit:
        raise CapExceededError(f"requested {label} {value} exceeds KOSZULK_MAX_CAP {limit}")
    return value


# ---------------------------------------------------------------------------
# Handlers.  Each returns (document, exit_code).


def _handle_shuffle(args, limit: int) -> tuple[str, int]:
    u = parse_composition(args.word1)
    v = parse_composition(args.word2)
    return _render_formal_sum(hopf.shuffle(u, v), args.format), EXIT_OK


def _handle_stuffle(args, limit: int) -> tuple[str, int]:
    u = parse_composition(args.word1)
    v = parse_composition(args.word2)
    return _render_formal_sum(hopf.quasi_shuffle(u, v), args.format), EXIT_OK


def _handle_coproduct(args, limit: int) -> tuple[str, int]:
    w = parse_composition(args.word)
    choice = hopf.ProductChoice.parse(args.product)
    return _render_tensor_sum(hopf.coproduct_word(choice, w), args.format), EXIT_OK


def _handle_antipode(args, limit: int) -> tuple[str, int]:
    x = _parse_element(args.element)
    choice = hopf.ProductChoice.parse(args.product)
    return _render_formal_sum(hopf.antipode(x, choice), args.format), EXIT_OK


def _handle_pair(args, limit: int) -> tuple[str, int]:
    z = parse_composition(args.word1)
    m = parse_composition(args.word2)
    return _render_scalar(hopf.pairing(z, m), args.format), EXIT_OK


def _handle_exp(args, limit: int) -> tuple[str, int]:
    return _render_formal_sum(hopf.hoffman_exp(_parse_element(args.element)), args.format), EXIT_OK


def _handle_log(args, limit: int) -> tuple[str, int]:
    return _render_formal_sum(hopf.hoffman_log(_parse_element(args.element)), args.format), EXIT_OK


def _handle_symm_embed(args, limit: int) -> tuple[str, int]:
    word = parse_composition(args.partition)
    lam = Partition(word.letters)
    return _render_formal_sum(hopf.symm_to_qsymm(lam), args.format), EXIT_OK


def _handle_bar_homology(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    source = args.algebra
    if os.path.isfile(source):
        with open(source, "r", encoding="utf-8") as handle:
            presentation = bar.load_presentation(handle.read())
    else:
        presentation = bar.load_presentation(source, cap=cap)
    complex_ = bar.build_bar_complex(presentation, min(cap, presentation.cap))
    if args.induced_product is not None:
        u = parse_composition(args.induced_product[0])
        v = parse_composition(args.induced_product[1])
        product = bar.induced_product(complex_, u, v)
        return _render_formal_sum(product, args.format), EXIT_OK
    result = bar.homology_dimensions(complex_)
    return _render_series(result.dims, args.format), EXIT_OK


def _generators_from_arg(text: str, cap: int) -> lie.GradedGeneratorSet:
    return lie.GradedGeneratorSet.from_rule(text, cap)


def _handle_lie_dims(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    gens = _generators_from_arg(args.generators, cap)
    return _render_series(lie.free_lie_dimensions(gens, cap), args.format), EXIT_OK


def _handle_pbw(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    gens = _generators_from_arg(args.generators, cap)
    report = lie.pbw_check(gens, cap)
    document, passed = _render_reports([report], args.format)
    return document, EXIT_OK if passed else EXIT_VERIFY


def _handle_lyndon(args, limit: int) -> tuple[str, int]:
    weight = _bounded_cap(args.max_weight, 8, limit, label="max weight")
    alphabet = [int(a) for a in parse_composition(args.alphabet).letters]
    return _render_words(lie.lyndon_words(alphabet, weight), args.format), EXIT_OK


def _handle_ext1(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    gens = _generators_from_arg(args.generators, cap)
    n = _parse_int(args.weight, "weight")
    return _render_scalar(lie.ext1_dimension(gens, n), args.format), EXIT_OK


def _handle_zeta(args, limit: int) -> tuple[str, int]:
    k = _parse_int(args.k, "k")
    if k < 1:
        raise ValidationError(f"k must be >= 1: {k}")
    b = zeta.bernoulli(2 * k)
    value = zeta.zeta_odd_negative(k)
    if args.format == "json":
        return (
            _json_document(
                {
                    "kind": "zeta-value",
                    "k": k,
                    "bernoulli": format_rational(b),
                    "zeta": format_rational(value),
                }
            ),
            EXIT_OK,
        )
    if args.format == "csv":
        return (
            _csv_document(
                ("k", "bernoulli", "zeta"),
                [(k, format_rational(b), format_rational(value))],
            ),
            EXIT_OK,
        )
    lines = [
        f"B_{2 * k} = {format_rational(b)}",
        f"zeta({1 - 2 * k}) = {format_rational(value)}",
    ]
    return "".join(line + "\n" for line in lines), EXIT_OK


def _handle_vsc(args, limit: int) -> tuple[str, int]:
    two_k = _parse_int(args.two_k, "index")
    denominator, primes = zeta.von_staudt_clausen(two_k)
    if args.format == "json":
        return (
            _json_document(
                {
                    "kind": "von-staudt-clausen",
                    "index": two_k,
                    "denominator": denominator,
                    "primes": list(primes),
                }
            ),
            EXIT_OK,
        )
    if args.format == "csv":
        return (
            _csv_document(("index", "denominator", "primes"), [(two_k, denominator, " ".join(map(str, primes)))]),
            EXIT_OK,
        )
    factorization = "*".join(str(p) for p in primes)
    return f"{denominator} = {factorization}\n", EXIT_OK


def _handle_imj(args, limit: int) -> tuple[str, int]:
    k = _parse_int(args.k, "k")
    return _render_scalar(zeta.image_of_j_order(k), args.format), EXIT_OK


def _handle_h1c(args, limit: int) -> tuple[str, int]:
    p = _parse_int(args.p, "p")
    k = _parse_int(args.k, "k")
    return _render_scalar(zeta.h1c_order_at_p(p, k), args.format), EXIT_OK


def _handle_preset(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    preset = zeta.ktheory_preset(args.name, cap)
    return _render_series(preset.series, args.format), EXIT_OK


def _handle_mzv_dims(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    return _render_series(zeta.mzv_dimension_series(cap), args.format), EXIT_OK


def _handle_motivic_check(args, limit: int) -> tuple[str, int]:
    cap = _bounded_cap(args.cap, 12, limit)
    kqz = None
    if args.selftest_corrupt:
        series = zeta.ktheory_preset("KQZ-weights", cap).series
        dims = {n: series[n] for n in range(cap + 1)}
        dims[4] = 1  # deliberate corruption; the check must fail at weight 4
        kqz = DimensionSeries(dims, cap)
    report = zeta.motivic_consistency(cap, kqz_series=kqz)
    document, passed = _render_reports([report], args.format)
    return document, EXIT_OK if passed else EXIT_VERIFY


def _handle_verify(args, limit: int) -> tuple[str, int]:
    weight = _bounded_cap(args.max_weight, 8, limit, label="max weight")
    if args.suite == "hopf":
        reports = hopf.hopf_axiom_suite(weight)
    elif args.suite == "duality":
        reports = hopf.duality_suite(min(weight, 6))
    elif args.suite == "exp-iso":
        reports = hopf.exp_iso_suite(min(weight, 6), weight)
    elif args.suite == "bar":
        cap = _bounded_cap(args.cap, 12, limit)
        reports = bar.bar_suite(cap)
    elif args.suite == "witt":
        cap = _bounded_cap(args.cap, 20, limit)
        reports = lie.witt_suite(cap)
    else:
        reports = zeta.zeta_global_suite()
    document, passed = _render_reports(reports, args.format)
    return document, EXIT_OK if passed else EXIT_VERIFY


_HANDLERS: dict[str, Callable] = {
    "shuffle": _handle_shuffle,
    "stuffle": _handle_stuffle,
    "coproduct": _handle_coproduct,
    "antipode": _handle_antipode,
    "pair": _handle_pair,
    "exp": _handle_exp,
    "log": _handle_log,
    "symm-embed": _handle_symm_embed,
    "bar-homology": _handle_bar_homology,
    "lie-dims": _handle_lie_dims,
    "pbw": _handle_pbw,
    "lyndon": _handle_lyndon,
    "ext1": _handle_ext1,
    "zeta": _handle_zeta,
    "vsc": _handle_vsc,
    "imj": _handle_imj,
    "h1c": _handle_h1c,
    "preset": _handle_preset,
    "mzv-dims": _handle_mzv_dims,
    "motivic-check": _handle_motivic_check,
    "verify": _handle_verify,
}


def dispatch(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run one invocation; returns the exit code and writes the document."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(list(argv))
        if args.command is None:
            raise UsageError("a subcommand is required")
        limit = _max_cap()
        if args.max_weight is not None and args.max_weight < 0:
            raise ValidationError(f"max weight must be >= 0: {args.max_weight}")
        if args.max_weight is not None and args.max_weight > limit:
            raise CapExceededError(
                f"requested max weight {args.max_weight} exceeds KOSZULK_MAX_CAP {limit}"
            )
        document, code = _HANDLERS[args.command](args, limit)
        out.write(document)
        return code
    except UsageError as exc:
        err.write(f"koszulk: error: usage: {exc}\n")
        return EXIT_INPUT
    except CapExceededError as exc:
        err.write(f"koszulk: error: cap: {exc}\n")
        return EXIT_CAP
    except (ParseError, ValidationError) as exc:
        err.write(f"koszulk: error: input: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))

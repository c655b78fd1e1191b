"""Exact scalars, words, formal sums, and graded dimension series.

This module is the arithmetic bedrock of the package: every computation is
done in exact rational arithmetic (there is no floating point anywhere),
and every graded object carries an explicit degree cap beyond which queries
fail loudly instead of returning silent zeros.

Compositions (finite words of positive integers) index all monomial bases.
Their canonical total order -- by weight, then by length, then
lexicographically on letters -- fixes serialization order, matrix row
order, and therefore the byte-level determinism of all output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "Rational",
    "KoszulkError",
    "CapExceededError",
    "ValidationError",
    "ParseError",
    "CheckReport",
    "Composition",
    "Partition",
    "EMPTY_WORD",
    "FormalSum",
    "TensorSum",
    "DimensionSeries",
    "compositions_of",
    "compositions_up_to",
    "format_rational",
    "parse_rational",
    "parse_composition",
    "parse_formal_sum",
    "series_of_tensor_algebra",
    "series_of_polynomial_algebra",
    "series_of_exterior_algebra",
    "series_pointwise_product",
]

# Exact scalars.  fractions.Fraction already guarantees the two invariants
# we care about (lowest terms, positive denominator) and is arbitrary
# precision, so it is used directly as the coefficient field Q.
Rational = Fraction

Scalar = Union[int, Fraction]


class KoszulkError(Exception):
    """Base class for all errors raised by this package."""


class CapExceededError(KoszulkError):
    """A degree or weight query went past the cap it was computed to."""


class ValidationError(KoszulkError):
    """Structurally invalid input (bad letters, bad table, bad document)."""


class ParseError(ValidationError):
    """Malformed textual input."""


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification pass: pass/fail plus witnesses.

    ``failures`` holds human-readable counterexamples (the first few);
    ``notes`` holds remarks that are not failures but must not be dropped
    silently, e.g. known convention discrepancies.
    """

    name: str
    passed: bool
    checked: int = 0
    failures: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = f"{verdict} {self.name} ({self.checked} identities checked)"
        if self.failures:
            line += f"; first failure: {self.failures[0]}"
        for note in self.notes:
            line += f"; note: {note}"
        return line


# ---------------------------------------------------------------------------
# Rational serialization: "p/q" with "/q" omitted when q == 1.

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# Compositions.


class Composition:
    """A finite word of positive integers; the empty word is allowed.

    The weight is the sum of the letters, the length the number of
    letters.  Compositions are immutable, hashable, and totally ordered by
    (weight, length, letters); that order is canonical for all
    serialization in the package.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        letters = tuple(int(a) for a in letters)
        if any(a < 1 for a in letters):
            raise ValidationError(f"letters must be positive integers: {letters}")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Composition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def sort_key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.weight, len(self.letters), self.letters)

    def __hash__(self) -> int:
        return hash(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Composition) and self.letters == other.letters

    def __lt__(self, other: "Composition") -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: "Composition") -> bool:
        return self.sort_key <= other.sort_key

    def __gt__(self, other: "Composition") -> bool:
        return self.sort_key > other.sort_key

    def __ge__(self, other: "Composition") -> bool:
        return self.sort_key >= other.sort_key

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Composition") -> "Composition":
        """Concatenation."""
        return Composition(self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "()"
        return ",".join(str(a) for a in self.letters)

    def __repr__(self) -> str:
        return f"Composition({list(self.letters)!r})"

    def reversed(self) -> "Composition":
        return Composition(self.letters[::-1])

    def sorted_descending(self) -> "Partition":
        return Partition(sorted(self.letters, reverse=True))


class Partition(Composition):
    """A composition whose letters are weakly decreasing."""

    __slots__ = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(a) for a in parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError(f"parts must be weakly decreasing: {parts}")
        super().__init__(parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.letters)!r})"


EMPTY_WORD = Composition()


def parse_composition(text: str) -> Composition:
    """Parse the canonical text form: ``2,3,3`` or ``()`` for the empty word."""
    text = text.strip()
    if text == "()":
        return EMPTY_WORD
    if not re.match(r"^\d+(,\d+)*$", text):
        raise ParseError(f"not a composition: {text!r}")
    return Composition(int(a) for a in text.split(","))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All compositions of ``n`` in canonical order."""
    if n < 0:
        raise ValidationError(f"negative weight: {n}")
    if n == 0:
        return (EMPTY_WORD,)
    words: list[tuple[int, ...]] = []

    def rec(remaining: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            words.append(prefix)
            return
        for first in range(1, remaining + 1):
            rec(remaining - first, prefix + (first,))

    rec(n, ())
    return tuple(sorted((Composition(w) for w in words), key=lambda c: c.sort_key))


def compositions_up_to(cap: int) -> tuple[Composition, ...]:
    """All compositions of weight at most ``cap`` in canonical order."""
    out: list[Composition] = []
    for n in range(cap + 1):
        out.extend(compositions_of(n))
    return tuple(out)


# ---------------------------------------------------------------------------
# Formal Q-linear combinations of compositions.


def _word_text(word: Composition) -> str:
    return "()" if word.length == 0 else f"({word})"


class FormalSum:
    """A finite Q-linear combination of compositions.

    Zero coefficients are never stored, so equality is plain support and
    coefficient equality.  Instances are treated as immutable values; all
    arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Composition, Scalar], Iterable[tuple[Composition, Scalar]]] = ()):
        data: dict[Composition, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            if not isinstance(word, Composition):
                word = Composition(word)
            coeff = Fraction(coeff)
            if coeff:
                new = data.get(word, Fraction(0)) + coeff
                if new:
                    data[word] = new
                else:
                    data.pop(word, None)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("FormalSum is immutable")

    # -- constructors

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def word(cls, word: Composition, coeff: Scalar = 1) -> "FormalSum":
        return cls(((word, coeff),))

    @classmethod
    def unit(cls) -> "FormalSum":
        return cls.word(EMPTY_WORD)

    # -- views

    def items(self) -> list[tuple[Composition, Fraction]]:
        """Terms in canonical composition order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key)

    def support(self) -> tuple[Composition, ...]:
        return tuple(w for w, _ in self.items())

    def coefficient(self, word: Composition) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def weights(self) -> tuple[int, ...]:
        return tuple(sorted({w.weight for w in self._terms}))

    def weight_component(self, n: int) -> "FormalSum":
        return FormalSum((w, c) for w, c in self._terms.items() if w.weight == n)

    def map_words(self, f: Callable[[Composition], "FormalSum"]) -> "FormalSum":
        """Linear extension of a map defined on basis words."""
        acc: dict[Composition, Fraction] = {}
        for word, coeff in self._terms.items():
            for w2, c2 in f(word)._terms.items():
                acc[w2] = acc.get(w2, Fraction(0)) + coeff * c2
        return FormalSum(acc)

    # -- arithmetic

    def __add__(self, other: "FormalSum") -> "FormalSum":
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return FormalSum(acc)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-1) * other

    def __neg__(self) -> "FormalSum":
        return (-1) * self

    def __rmul__(self, scalar: Scalar) -> "FormalSum":
        scalar = Fraction(scalar)
        return FormalSum((w, scalar * c) for w, c in self._terms.items())

    def __mul__(self, scalar: Scalar) -> "FormalSum":
        return self.__rmul__(scalar)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalSum) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- serialization

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.items():
            if coeff == 1:
                parts.append(_word_text(word))
            else:
                parts.append(f"{format_rational(coeff)}*{_word_text(word)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum({str(self)!r})"

    def to_json_terms(self) -> list[dict]:
        return [
            {"word": list(word.letters), "coeff": format_rational(coeff)}
            for word, coeff in self.items()
        ]

    @classmethod
    def from_json_terms(cls, terms: Iterable[Mapping]) -> "FormalSum":
        return cls(
            (Composition(t["word"]), parse_rational(str(t["coeff"])))
            for t in terms
        )


_TERM_RE = re.compile(r"^(?:(-?\d+(?:/\d+)?)\*)?\((\d+(?:,\d+)*)?\)$")


def parse_formal_sum(text: str) -> FormalSum:
    """Parse the text form ``q1*(w1) + q2*(w2) + ...``; ``0`` is the zero sum."""
    text = text.strip()
    if text == "0":
        return FormalSum.zero()
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"bad formal-sum term: {chunk!r}")
        coeff = parse_rational(m.group(1)) if m.group(1) else Fraction(1)
        word = Composition(int(a) for a in m.group(2).split(",")) if m.group(2) else EMPTY_WORD
        terms.append((word, coeff))
    return FormalSum(terms)


class TensorSum:
    """A finite Q-linear combination of pairs of compositions (two-fold tensors)."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[
            Mapping[tuple[Composition, Composition], Scalar],
            Iterable[tuple[tuple[Composition, Composition], Scalar]],
        ] = (),
    ):
        data: dict[tuple[Composition, Composition], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for pair, coeff in items:
            left, right = pair
            if not isinstance(left, Composition):
                left = Composition(left)
            if not isinstance(right, Composition):
                right = Composition(right)
            coeff = Fraction(coeff)
            if coeff:
                key = (left, right)
                new = data.get(key, Fraction(0)) + coeff
                if new:
                    data[key] = new
                else:
                    data.pop(key, None)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("TensorSum is immutable")

    @classmethod
    def zero(cls) -> "TensorSum":
        return cls()

    @classmethod
    def pure(cls, left: Composition, right: Composition, coeff: Scalar = 1) -> "TensorSum":
        return cls((((left, right), coeff),))

    def items(self) -> list[tuple[tuple[Composition, Composition], Fraction]]:
        return sorted(
            self._terms.items(), key=lambda kv: (kv[0][0].sort_key, kv[0][1].sort_key)
        )

    def coefficient(self, left: Composition, right: Composition) -> Fraction:
        return self._terms.get((left, right), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "TensorSum") -> "TensorSum":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return TensorSum(acc)

    def __sub__(self, other: "TensorSum") -> "TensorSum":
        return self + (-1) * other

    def __rmul__(self, scalar: Scalar) -> "TensorSum":
        scalar = Fraction(scalar)
        return TensorSum((k, scalar * c) for k, c in self._terms.items())

    def __mul__(self, scalar: Scalar) -> "TensorSum":
        return self.__rmul__(scalar)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorSum) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def map_pairs(self, f: Callable[[Composition, Composition], "TensorSum"]) -> "TensorSum":
        acc: dict[tuple[Composition, Composition], Fraction] = {}
        for (left, right), coeff in self._terms.items():
            for pair, c2 in f(left, right)._terms.items():
                acc[pair] = acc.get(pair, Fraction(0)) + coeff * c2
        return TensorSum(acc)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (left, right), coeff in self.items():
            body = f"{_word_text(left)} (x) {_word_text(right)}"
            if coeff == 1:
                parts.append(body)
            else:
                parts.append(f"{format_rational(coeff)}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorSum({str(self)!r})"

    def to_json_terms(self) -> list[dict]:
        return [
            {
                "left": list(left.letters),
                "right": list(right.letters),
                "coeff": format_rational(coeff),
            }
            for (left, right), coeff in self.items()
        ]


# ---------------------------------------------------------------------------
# Graded dimension series.


class DimensionSeries:
    """A map degree -> nonnegative integer, valid up to an explicit cap.

    Queries above the cap raise :class:`CapExceededError`; queries at or
    below it return 0 for degrees outside the stored support.  Degrees may
    be negative (some K-theoretic presets have an entry in degree -1).
    """

    __slots__ = ("_dims", "_cap")

    def __init__(self, dims: Mapping[int, int], cap: int):
        cap = int(cap)
        data: dict[int, int] = {}
        for degree, value in dims.items():
            degree = int(degree)
            value = int(value)
            if value < 0:
                raise ValidationError(f"negative dimension {value} at degree {degree}")
            if degree > cap:
                raise CapExceededError(f"entry at degree {degree} above cap {cap}")
            if value:
                data[degree] = value
        object.__setattr__(self, "_dims", data)
        object.__setattr__(self, "_cap", cap)

    def __setattr__(self, name, value):
        raise AttributeError("DimensionSeries is immutable")

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], cap: int | None = None) -> "DimensionSeries":
        """Build from a dense coefficient list starting at degree 0."""
        if cap is None:
            cap = len(coeffs) - 1
        return cls({i: c for i, c in enumerate(coeffs)}, cap)

    @property
    def cap(self) -> int:
        return self._cap

    def __getitem__(self, degree: int) -> int:
        if degree > self._cap:
            raise CapExceededError(
                f"degree {degree} above cap {self._cap}; recompute with a larger cap"
            )
        return self._dims.get(degree, 0)

    def min_degree(self) -> int:
        """Smallest degree carrying a nonzero entry (0 for the zero series)."""
        return min(self._dims) if self._dims else 0

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._dims))

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._dims.items())

    def coefficients(self, start: int = 0, stop: int | None = None) -> tuple[int, ...]:
        """Dense coefficient tuple on ``start..stop`` (``stop`` defaults to cap)."""
        if stop is None:
            stop = self._cap
        return tuple(self[d] for d in range(start, stop + 1))

    def truncated(self, cap: int) -> "DimensionSeries":
        if cap > self._cap:
            raise CapExceededError(f"cannot extend cap {self._cap} to {cap}")
        return DimensionSeries({d: v for d, v in self._dims.items() if d <= cap}, cap)

    def scaled_degrees(self, factor: int) -> "DimensionSeries":
        """Relabel degree d as factor*d (e.g. motivic weight -> topological degree)."""
        if factor < 1:
            raise ValidationError(f"degree scale factor must be positive: {factor}")
        return DimensionSeries({d * factor: v for d, v in self._dims.items()}, self._cap * factor)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DimensionSeries)
            and self._cap == other._cap
            and self._dims == other._dims
        )

    def __hash__(self) -> int:
        return hash((self._cap, frozenset(self._dims.items())))

    def __repr__(self) -> str:
        return f"DimensionSeries({self._dims!r}, cap={self._cap})"


def _degree_multiset(generator_degrees: Union[Iterable[int], Mapping[int, int]]) -> dict[int, int]:
    """Normalize a generator multiset to {degree: multiplicity}."""
    counts: dict[int, int] = {}
    if isinstance(generator_degrees, Mapping):
        items = generator_degrees.items()
        for degree, mult in items:
            degree, mult = int(degree), int(mult)
            if degree < 1:
                raise ValidationError(f"generator degree must be >= 1: {degree}")
            if mult < 0:
                raise ValidationError(f"negative multiplicity at degree {degree}")
            if mult:
                counts[degree] = counts.get(degree, 0) + mult
    else:
        for degree in generator_degrees:
            degree = int(degree)
            if degree < 1:
                raise ValidationError(f"generator degree must be >= 1: {degree}")
            counts[degree] = counts.get(degree, 0) + 1
    return counts


def _require_cap(cap: int) -> int:
    cap = int(cap)
    if cap < 0:
        raise ValidationError(f"cap must be >= 0: {cap}")
    return cap


def series_of_tensor_algebra(
    generator_degrees: Union[Iterable[int], Mapping[int, int]], cap: int
) -> DimensionSeries:
    """Graded dimensions of the free associative (tensor) algebra.

    Coefficient of t^n in 1/(1 - sum_g t^{deg g}), computed by exact
    convolution.  The empty generator set gives the ground-field series.
    """
    cap = _require_cap(cap)
    counts = _degree_multiset(generator_degrees)
    coeffs = [0] * (cap + 1)
    coeffs[0] = 1
    for n in range(1, cap + 1):
        total = 0
        for degree, mult in counts.items():
            if degree <= n:
                total += mult * coeffs[n - degree]
        coeffs[n] = total
    return DimensionSeries.from_coefficients(coeffs, cap)


def series_of_polynomial_algebra(
    generator_degrees: Union[Iterable[int], Mapping[int, int]], cap: int
) -> DimensionSeries:
    """Graded dimensions of the free commutative algebra: prod_g (1 - t^{deg g})^{-1}."""
    cap = _require_cap(cap)
    counts = _degree_multiset(generator_degrees)
    coeffs = [0] * (cap + 1)
    coeffs[0] = 1
    for degree, mult in sorted(counts.items()):
        for _ in range(mult):
            for n in range(degree, cap + 1):
                coeffs[n] += coeffs[n - degree]
    return DimensionSeries.from_coefficients(coeffs, cap)


def series_of_exterior_algebra(
    generator_degrees: Union[Iterable[int], Mapping[int, int]], cap: int
) -> DimensionSeries:
    """Graded dimensions of the exterior algebra: prod_g (1 + t^{deg g})."""
    cap = _require_cap(cap)
    counts = _degree_multiset(generator_degrees)
    coeffs = [0] * (cap + 1)
    coeffs[0] = 1
    for degree, mult in sorted(counts.items()):
        for _ in range(mult):
            for n in range(cap, degree - 1, -1):
                coeffs[n] += coeffs[n - degree]
    return DimensionSeries.from_coefficients(coeffs, cap)


def series_pointwise_product(a: DimensionSeries, b: DimensionSeries) -> DimensionSeries:
    """Cauchy product of two coefficient series; result cap is the smaller cap.

    Both factors must be supported in nonnegative degrees, otherwise the
    truncated convolution would need coefficients beyond the caps.
    """
    if a.min_degree() < 0 or b.min_degree() < 0:
        raise ValidationError("series product requires nonnegative support")
    cap = min(a.cap, b.cap)
    coeffs = [0] * (cap + 1)
    for i, ai in a.items():
        for j, bj in b.items():
            if i + j <= cap:
                coeffs[i + j] += ai * bj
    return DimensionSeries.from_coefficients(coeffs, cap)

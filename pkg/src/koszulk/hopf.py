"""Shuffle, quasi-shuffle, and concatenation Hopf algebras on compositions.

Three connected graded bialgebras share the composition basis:

* the shuffle algebra (commutative product by interleaving, deconcatenation
  coproduct),
* the quasi-shuffle ("stuffle") algebra, the deformation of the shuffle in
  which adjacent letters may merge by addition (again with deconcatenation
  coproduct), and
* the free associative algebra with concatenation product, whose coproduct
  sends the degree-n letter to sum_{i+j=n} (letter i) (x) (letter j); this
  is the graded dual of the quasi-shuffle algebra.

All three are sign-free by design: the letters this package cares about sit
in even shifted degree, so no Koszul signs ever enter these products.
Weight (the sum of the letters) is the primary grading; topological degree
is twice the weight and is available as a relabeled view on series.

Antipodes are computed by the generic recursion for connected graded
bialgebras; closed forms (reversal with sign, for the shuffle algebra) are
used only as test oracles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .core import (
    CheckReport,
    Composition,
    EMPTY_WORD,
    FormalSum,
    Partition,
    TensorSum,
    ValidationError,
    compositions_up_to,
)

__all__ = [
    "ProductChoice",
    "HopfElement",
    "shuffle",
    "quasi_shuffle",
    "concatenation",
    "product_words",
    "product_sums",
    "deconcatenate",
    "nsymm_coproduct",
    "coproduct_word",
    "coproduct_sums",
    "antipode",
    "shuffle_antipode_closed_form",
    "pairing",
    "pairing_sums",
    "pairing_tensors",
    "hoffman_exp",
    "hoffman_log",
    "symm_to_qsymm",
    "verify_bialgebra",
    "hopf_axiom_suite",
    "duality_suite",
    "exp_iso_suite",
]

Word = tuple[int, ...]
Terms = tuple[tuple[Word, Fraction], ...]


class ProductChoice(Enum):
    """Which product (and matching coproduct) a Hopf computation uses."""

    SHUFFLE = "shuffle"
    STUFFLE = "stuffle"
    CONCAT = "concat"

    @classmethod
    def parse(cls, name: str) -> "ProductChoice":
        aliases = {
            "shuffle": cls.SHUFFLE,
            "stuffle": cls.STUFFLE,
            "quasi-shuffle": cls.STUFFLE,
            "quasishuffle": cls.STUFFLE,
            "concat": cls.CONCAT,
            "concatenation": cls.CONCAT,
        }
        try:
            return aliases[name.strip().lower()]
        except KeyError:
            raise ValidationError(f"unknown product: {name!r}") from None

    @property
    def is_commutative(self) -> bool:
        return self is not ProductChoice.CONCAT


# ---------------------------------------------------------------------------
# Word-level engine.  Words are plain tuples of positive ints; linear
# combinations are dicts word -> coefficient.  All functions here are pure,
# and the lru_caches only memoize immutable values, so concurrent use is safe.


def _freeze(acc: dict[Word, Fraction]) -> Terms:
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> Terms:
    """All interleavings of u and v, counted with multiplicity.

    Enumerates the binom(len(u)+len(v), len(u)) position choices directly;
    the recursive characterization is exercised against this in the tests.
    """
    lu, lv = len(u), len(v)
    acc: dict[Word, Fraction] = {}
    for positions in itertools.combinations(range(lu + lv), lu):
        merged = [0] * (lu + lv)
        pos_set = set(positions)
        iu = iter(u)
        iv = iter(v)
        for slot in range(lu + lv):
            merged[slot] = next(iu) if slot in pos_set else next(iv)
        key = tuple(merged)
        acc[key] = acc.get(key, Fraction(0)) + 1
    return _freeze(acc)


@lru_cache(maxsize=None)
def _stuffle_words(u: Word, v: Word, merge: bool) -> Terms:
    """Quasi-shuffle by the three-term recursion; ``merge=False`` drops the
    letter-merging term and must reproduce the plain shuffle."""
    if not u:
        return ((v, Fraction(1)),)
    if not v:
        return ((u, Fraction(1)),)
    a, x = u[0], u[1:]
    b, y = v[0], v[1:]
    acc: dict[Word, Fraction] = {}
    for word, coeff in _stuffle_words(x, v, merge):
        key = (a,) + word
        acc[key] = acc.get(key, Fraction(0)) + coeff
    for word, coeff in _stuffle_words(u, y, merge):
        key = (b,) + word
        acc[key] = acc.get(key, Fraction(0)) + coeff
    if merge:
        for word, coeff in _stuffle_words(x, y, merge):
            key = (a + b,) + word
            acc[key] = acc.get(key, Fraction(0)) + coeff
    return _freeze(acc)


def _product_words_raw(choice: ProductChoice, u: Word, v: Word) -> Terms:
    if choice is ProductChoice.SHUFFLE:
        return _shuffle_words(u, v)
    if choice is ProductChoice.STUFFLE:
        return _stuffle_words(u, v, True)
    return ((u + v, Fraction(1)),)


def _deconcat_pairs(w: Word):
    return (((w[:i], w[i:]), Fraction(1)) for i in range(len(w) + 1))


@lru_cache(maxsize=None)
def _nsymm_pairs(w: Word) -> tuple[tuple[tuple[Word, Word], Fraction], ...]:
    """Coproduct dual to the quasi-shuffle: each letter n splits as sum of
    (i, n-i) with the zero piece dropped, extended multiplicatively."""
    acc: dict[tuple[Word, Word], Fraction] = {((), ()): Fraction(1)}
    for letter in w:
        nxt: dict[tuple[Word, Word], Fraction] = {}
        for (left, right), coeff in acc.items():
            for i in range(letter + 1):
                j = letter - i
                key = (left + ((i,) if i else ()), right + ((j,) if j else ()))
                nxt[key] = nxt.get(key, Fraction(0)) + coeff
        acc = nxt
    return tuple(sorted(acc.items()))


def _coproduct_pairs(choice: ProductChoice, w: Word):
    if choice is ProductChoice.CONCAT:
        return _nsymm_pairs(w)
    return tuple(_deconcat_pairs(w))


def _sum_product(choice: ProductChoice, xs: dict[Word, Fraction], ys: dict[Word, Fraction]) -> dict[Word, Fraction]:
    acc: dict[Word, Fraction] = {}
    for u, cu in xs.items():
        for v, cv in ys.items():
            c = cu * cv
            for word, coeff in _product_words_raw(choice, u, v):
                key = word
                acc[key] = acc.get(key, Fraction(0)) + c * coeff
    return {w: c for w, c in acc.items() if c}


@lru_cache(maxsize=None)
def _antipode_word(choice: ProductChoice, w: Word) -> Terms:
    """Generic antipode recursion for a connected graded bialgebra:
    S(1) = 1 and S(w) = -w - sum S(w') * w'' over the reduced coproduct."""
    if not w:
        return (((), Fraction(1)),)
    acc: dict[Word, Fraction] = {w: Fraction(-1)}
    for (left, right), coeff in _coproduct_pairs(choice, w):
        if not left or not right:
            continue  # the 1 (x) w term is the -w above; w (x) 1 is S(w) itself
        s_left = dict(_antipode_word(choice, left))
        for word, c in _sum_product(choice, s_left, {right: Fraction(1)}).items():
            acc[word] = acc.get(word, Fraction(0)) - coeff * c
    return _freeze(acc)


def _words_up_to(cap: int) -> tuple[Word, ...]:
    return tuple(c.letters for c in compositions_up_to(cap))


def _from_terms(terms: Terms) -> FormalSum:
    return FormalSum((Composition(w), c) for w, c in terms)


# ---------------------------------------------------------------------------
# Public operations on compositions and formal sums.


def shuffle(u: Composition, v: Composition) -> FormalSum:
    """Shuffle product: the sum over all interleavings of u and v.

    Coefficients are positive integers with total mass binom(|u|+|v|, |u|);
    every term has weight weight(u) + weight(v).
    """
    return _from_terms(_shuffle_words(u.letters, v.letters))


def quasi_shuffle(u: Composition, v: Composition, *, merge: bool = True) -> FormalSum:
    """Quasi-shuffle (stuffle) product, where adjacent letters may merge by
    addition.  With ``merge=False`` the deformation term is dropped and the
    result is the plain shuffle."""
    return _from_terms(_stuffle_words(u.letters, v.letters, merge))


def concatenation(u: Composition, v: Composition) -> FormalSum:
    """Concatenation product (the free associative multiplication)."""
    return FormalSum.word(u + v)


def product_words(choice: ProductChoice, u: Composition, v: Composition) -> FormalSum:
    return _from_terms(_product_words_raw(choice, u.letters, v.letters))


def product_sums(choice: ProductChoice, x: FormalSum, y: FormalSum) -> FormalSum:
    """Bilinear extension of the chosen product to formal sums."""
    xs = {w.letters: c for w, c in x.items()}
    ys = {w.letters: c for w, c in y.items()}
    return FormalSum((Composition(w), c) for w, c in _sum_product(choice, xs, ys).items())


def deconcatenate(w: Composition) -> TensorSum:
    """Deconcatenation coproduct: the sum of all prefix (x) suffix splittings."""
    return TensorSum(
        (((Composition(a), Composition(b)), c) for (a, b), c in _deconcat_pairs(w.letters))
    )


def nsymm_coproduct(w: Composition) -> TensorSum:
    """Coproduct of the concatenation algebra, extended multiplicatively from
    letter n -> sum_{i+j=n} (i) (x) (j) (empty pieces for i or j = 0)."""
    return TensorSum(
        (((Composition(a), Composition(b)), c) for (a, b), c in _nsymm_pairs(w.letters))
    )


def coproduct_word(choice: ProductChoice, w: Composition) -> TensorSum:
    """The coproduct paired with the chosen product (deconcatenation for the
    commutative products, the letter-splitting coproduct for concatenation)."""
    if choice is ProductChoice.CONCAT:
        return nsymm_coproduct(w)
    return deconcatenate(w)


def coproduct_sums(choice: ProductChoice, x: FormalSum) -> TensorSum:
    acc = TensorSum.zero()
    for w, c in x.items():
        acc = acc + c * coproduct_word(choice, w)
    return acc


def counit(x: FormalSum) -> Fraction:
    """Projection onto the coefficient of the empty word."""
    return x.coefficient(EMPTY_WORD)


def antipode(x: FormalSum | Composition, algebra: ProductChoice) -> FormalSum:
    """Antipode of the chosen Hopf structure, by the connected graded
    recursion, extended linearly."""
    if isinstance(x, Composition):
        x = FormalSum.word(x)
    acc: dict[Composition, Fraction] = {}
    for w, c in x.items():
        for word, coeff in _antipode_word(algebra, w.letters):
            key = Composition(word)
            acc[key] = acc.get(key, Fraction(0)) + c * coeff
    return FormalSum(acc)


def shuffle_antipode_closed_form(w: Composition) -> FormalSum:
    """Test oracle: the shuffle antipode is signed reversal."""
    return FormalSum.word(w.reversed(), Fraction(-1) ** w.length)


# ---------------------------------------------------------------------------
# Duality pairing between the concatenation side (Z basis) and the
# quasi-shuffle side (monomial M basis).


def pairing(z_word: Composition, m_word: Composition) -> Fraction:
    """Kronecker pairing <Z_I, M_J> = delta_{I,J} on basis words."""
    return Fraction(1) if z_word == m_word else Fraction(0)


def pairing_sums(x: FormalSum, y: FormalSum) -> Fraction:
    total = Fraction(0)
    for w, c in x.items():
        cy = y.coefficient(w)
        if cy:
            total += c * cy
    return total


def pairing_tensors(xt: TensorSum, yt: TensorSum) -> Fraction:
    total = Fraction(0)
    for (l, r), c in xt.items():
        cy = yt.coefficient(l, r)
        if cy:
            total += c * cy
    return total


# ---------------------------------------------------------------------------
# The Hoffman exponential and logarithm.


def _int_compositions(n: int) -> Iterable[Word]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _int_compositions(n - first):
            yield (first,) + rest


def _blocks(w: Word, sizes: Word) -> Iterable[Word]:
    pos = 0
    for size in sizes:
        yield w[pos : pos + size]
        pos += size


@lru_cache(maxsize=None)
def _exp_word(w: Word) -> Terms:
    n = len(w)
    acc: dict[Word, Fraction] = {}
    for sizes in _int_compositions(n):
        coeff = Fraction(1)
        for size in sizes:
            coeff /= math.factorial(size)
        word = tuple(sum(block) for block in _blocks(w, sizes))
        acc[word] = acc.get(word, Fraction(0)) + coeff
    return _freeze(acc)


@lru_cache(maxsize=None)
def _log_word(w: Word) -> Terms:
    n = len(w)
    acc: dict[Word, Fraction] = {}
    for sizes in _int_compositions(n):
        coeff = Fraction((-1) ** (n - len(sizes)))
        for size in sizes:
            coeff /= size
        word = tuple(sum(block) for block in _blocks(w, sizes))
        acc[word] = acc.get(word, Fraction(0)) + coeff
    return _freeze(acc)


def _linear(cached, x: FormalSum | Composition) -> FormalSum:
    if isinstance(x, Composition):
        x = FormalSum.word(x)
    acc: dict[Composition, Fraction] = {}
    for w, c in x.items():
        for word, coeff in cached(w.letters):
            key = Composition(word)
            acc[key] = acc.get(key, Fraction(0)) + c * coeff
    return FormalSum(acc)


def hoffman_exp(x: FormalSum | Composition) -> FormalSum:
    """Weight-preserving isomorphism from the shuffle to the quasi-shuffle
    algebra: sum over ways of grouping consecutive letters into blocks, each
    block contributing its letter sum with coefficient 1/(product of block
    factorials)."""
    return _linear(_exp_word, x)


def hoffman_log(x: FormalSum | Composition) -> FormalSum:
    """Two-sided inverse of :func:`hoffman_exp` on each weight-graded piece,
    via the closed form with coefficients (-1)^(n-k) / (product of block
    sizes)."""
    return _linear(_log_word, x)


def exp_tensor(xt: TensorSum) -> TensorSum:
    """Apply the Hoffman exponential in both tensor slots."""
    acc: dict[tuple[Composition, Composition], Fraction] = {}
    for (left, right), c in xt.items():
        for lw, lc in _exp_word(left.letters):
            for rw, rc in _exp_word(right.letters):
                key = (Composition(lw), Composition(rw))
                acc[key] = acc.get(key, Fraction(0)) + c * lc * rc
    return TensorSum(acc)


# ---------------------------------------------------------------------------
# Symmetric functions inside the quasi-shuffle algebra.


def symm_to_qsymm(lam: Partition) -> FormalSum:
    """Monomial symmetric function as a sum of all distinct rearrangements."""
    if not isinstance(lam, Partition):
        raise ValidationError("symm_to_qsymm expects a Partition")
    words = set(itertools.permutations(lam.letters))
    return FormalSum((Composition(w), 1) for w in words)


# ---------------------------------------------------------------------------
# Elements tagged with their algebra.


@dataclass(frozen=True)
class HopfElement:
    """A formal sum together with the product/coproduct pair acting on it."""

    value: FormalSum
    algebra: ProductChoice

    def __mul__(self, other: "HopfElement") -> "HopfElement":
        if self.algebra is not other.algebra:
            raise ValidationError("cannot multiply elements of different algebras")
        return HopfElement(product_sums(self.algebra, self.value, other.value), self.algebra)

    def coproduct(self) -> TensorSum:
        return coproduct_sums(self.algebra, self.value)

    def antipode(self) -> "HopfElement":
        return HopfElement(antipode(self.value, self.algebra), self.algebra)

    def weight_component(self, n: int) -> "HopfElement":
        return HopfElement(self.value.weight_component(n), self.algebra)

    def weights(self) -> tuple[int, ...]:
        return self.value.weights()


# ---------------------------------------------------------------------------
# Axiom verification.


def _tensor_mul(choice: ProductChoice, xt, yt):
    """Componentwise product on two-fold tensors (word-level dicts)."""
    acc: dict[tuple[Word, Word], Fraction] = {}
    for (l1, r1), c1 in xt.items():
        for (l2, r2), c2 in yt.items():
            c = c1 * c2
            for lw, lc in _product_words_raw(choice, l1, l2):
                for rw, rc in _product_words_raw(choice, r1, r2):
                    key = (lw, rw)
                    acc[key] = acc.get(key, Fraction(0)) + c * lc * rc
    return {k: v for k, v in acc.items() if v}


def _coproduct_dict(choice: ProductChoice, w: Word) -> dict[tuple[Word, Word], Fraction]:
    return dict(_coproduct_pairs(choice, w))


def verify_bialgebra(algebra: ProductChoice, cap: int) -> CheckReport:
    """Exhaustively check the Hopf axioms on all words of weight <= cap.

    Checks associativity (all triples of total weight <= cap),
    commutativity (shuffle and quasi-shuffle only), coassociativity,
    counit laws, the compatibility Delta(x*y) = Delta(x)*Delta(y), and the
    antipode convolution identity S*id = unit o counit.  Violations are
    reported with a witness rather than raised.
    """
    if cap < 1:
        raise ValidationError(f"cap must be >= 1: {cap}")
    words = _words_up_to(cap)
    failures: list[str] = []
    checked = 0

    def fail(msg: str) -> None:
        if len(failures) < 5:
            failures.append(msg)

    # Associativity on triples of total weight <= cap.
    for u in words:
        wu = sum(u)
        for v in words:
            wv = sum(v)
            if wu + wv > cap:
                continue
            uv = dict(_product_words_raw(algebra, u, v))
            for t in words:
                if wu + wv + sum(t) > cap:
                    continue
                left = _sum_product(algebra, uv, {t: Fraction(1)})
                vt = dict(_product_words_raw(algebra, v, t))
                right = _sum_product(algebra, {u: Fraction(1)}, vt)
                checked += 1
                if left != right:
                    fail(f"associativity fails at ({u}, {v}, {t})")

    # Commutativity (not expected for concatenation).
    if algebra.is_commutative:
        for u in words:
            for v in words:
                if sum(u) + sum(v) > cap:
                    continue
                checked += 1
                if dict(_product_words_raw(algebra, u, v)) != dict(
                    _product_words_raw(algebra, v, u)
                ):
                    fail(f"commutativity fails at ({u}, {v})")

    # Coassociativity and counit laws, word by word.
    for w in words:
        cop = _coproduct_dict(algebra, w)
        left3: dict[tuple[Word, Word, Word], Fraction] = {}
        right3: dict[tuple[Word, Word, Word], Fraction] = {}
        for (a, b), c in cop.items():
            for (a1, a2), c2 in _coproduct_dict(algebra, a).items():
                key = (a1, a2, b)
                left3[key] = left3.get(key, Fraction(0)) + c * c2
            for (b1, b2), c2 in _coproduct_dict(algebra, b).items():
                key = (a, b1, b2)
                right3[key] = right3.get(key, Fraction(0)) + c * c2
        checked += 1
        if {k: v for k, v in left3.items() if v} != {k: v for k, v in right3.items() if v}:
            fail(f"coassociativity fails at {w}")

        left_counit: dict[Word, Fraction] = {}
        right_counit: dict[Word, Fraction] = {}
        for (a, b), c in cop.items():
            if not a:
                left_counit[b] = left_counit.get(b, Fraction(0)) + c
            if not b:
                right_counit[a] = right_counit.get(a, Fraction(0)) + c
        checked += 1
        if left_counit != {w: Fraction(1)} or right_counit != {w: Fraction(1)}:
            fail(f"counit laws fail at {w}")

    # Bialgebra compatibility on pairs of total weight <= cap.
    for u in words:
        for v in words:
            if sum(u) + sum(v) > cap:
                continue
            product = _product_words_raw(algebra, u, v)
            lhs: dict[tuple[Word, Word], Fraction] = {}
            for word, coeff in product:
                for pair, c in _coproduct_dict(algebra, word).items():
                    lhs[pair] = lhs.get(pair, Fraction(0)) + coeff * c
            rhs = _tensor_mul(algebra, _coproduct_dict(algebra, u), _coproduct_dict(algebra, v))
            checked += 1
            if {k: v for k, v in lhs.items() if v} != rhs:
                fail(f"compatibility fails at ({u}, {v})")

    # Antipode convolution identity, word by word.
    for w in words:
        conv: dict[Word, Fraction] = {}
        for (a, b), c in _coproduct_dict(algebra, w).items():
            s_a = dict(_antipode_word(algebra, a))
            for word, coeff in _sum_product(algebra, s_a, {b: Fraction(1)}).items():
                conv[word] = conv.get(word, Fraction(0)) + c * coeff
        conv = {k: v for k, v in conv.items() if v}
        expected = {(): Fraction(1)} if not w else {}
        checked += 1
        if conv != expected:
            fail(f"antipode convolution fails at {w}")

    return CheckReport(
        name=f"bialgebra axioms [{algebra.value}] weight<={cap}",
        passed=not failures,
        checked=checked,
        failures=tuple(failures),
    )


def hopf_axiom_suite(cap: int = 8) -> list[CheckReport]:
    """The full axiom check for all three products."""
    return [
        verify_bialgebra(ProductChoice.SHUFFLE, cap),
        verify_bialgebra(ProductChoice.STUFFLE, cap),
        verify_bialgebra(ProductChoice.CONCAT, cap),
    ]


def duality_suite(cap: int = 6) -> list[CheckReport]:
    """Both adjunction identities of the concatenation/quasi-shuffle pairing.

    For all words I, J with weight(I)+weight(J) <= cap and all K of weight
    <= cap:

    * <Z_I Z_J, M_K> = <Z_I (x) Z_J, deconcatenation of M_K>;
    * <coproduct of Z_K, M_I (x) M_J> = <Z_K, M_I stuffle M_J>.
    """
    words = _words_up_to(cap)
    failures_a: list[str] = []
    failures_b: list[str] = []
    checked_a = checked_b = 0
    for i_word in words:
        for j_word in words:
            if sum(i_word) + sum(j_word) > cap:
                continue
            stuffle_ij = dict(_stuffle_words(i_word, j_word, True))
            for k_word in words:
                lhs_a = Fraction(1) if i_word + j_word == k_word else Fraction(0)
                rhs_a = dict(_deconcat_pairs(k_word)).get((i_word, j_word), Fraction(0))
                checked_a += 1
                if lhs_a != rhs_a and len(failures_a) < 5:
                    failures_a.append(f"I={i_word} J={j_word} K={k_word}")
                lhs_b = dict(_nsymm_pairs(k_word)).get((i_word, j_word), Fraction(0))
                rhs_b = stuffle_ij.get(k_word, Fraction(0))
                checked_b += 1
                if lhs_b != rhs_b and len(failures_b) < 5:
                    failures_b.append(f"K={k_word} I={i_word} J={j_word}")
    return [
        CheckReport(
            name=f"pairing adjunction (concatenation vs deconcatenation) weight<={cap}",
            passed=not failures_a,
            checked=checked_a,
            failures=tuple(failures_a),
        ),
        CheckReport(
            name=f"pairing adjunction (coproduct vs quasi-shuffle) weight<={cap}",
            passed=not failures_b,
            checked=checked_b,
            failures=tuple(failures_b),
        ),
    ]


def exp_iso_suite(product_cap: int = 6, roundtrip_cap: int = 8) -> list[CheckReport]:
    """The Hoffman exponential as a Hopf isomorphism, checked exhaustively:
    multiplicativity exp(u shuffle v) = exp(u) stuffle exp(v), compatibility
    with deconcatenation, and invertibility log(exp(w)) = w."""
    words = _words_up_to(product_cap)
    failures_mul: list[str] = []
    checked_mul = 0
    for u in words:
        for v in words:
            if sum(u) + sum(v) > product_cap:
                continue
            lhs = hoffman_exp(_from_terms(_shuffle_words(u, v)))
            rhs = product_sums(
                ProductChoice.STUFFLE,
                _from_terms(_exp_word(u)),
                _from_terms(_exp_word(v)),
            )
            checked_mul += 1
            if lhs != rhs and len(failures_mul) < 5:
                failures_mul.append(f"u={u} v={v}")

    failures_cop: list[str] = []
    checked_cop = 0
    for w in words:
        word = Composition(w)
        lhs = exp_tensor(deconcatenate(word))
        rhs = coproduct_sums(ProductChoice.STUFFLE, hoffman_exp(word))
        checked_cop += 1
        if lhs != rhs and len(failures_cop) < 5:
            failures_cop.append(f"w={w}")

    failures_inv: list[str] = []
    checked_inv = 0
    for w in _words_up_to(roundtrip_cap):
        word = Composition(w)
        checked_inv += 2
        if hoffman_log(hoffman_exp(word)) != FormalSum.word(word) and len(failures_inv) < 5:
            failures_inv.append(f"log(exp({w}))")
        if hoffman_exp(hoffman_log(word)) != FormalSum.word(word) and len(failures_inv) < 5:
            failures_inv.append(f"exp(log({w}))")

    return [
        CheckReport(
            name=f"Hoffman exp multiplicativity weight<={product_cap}",
            passed=not failures_mul,
            checked=checked_mul,
            failures=tuple(failures_mul),
        ),
        CheckReport(
            name=f"Hoffman exp coproduct compatibility weight<={product_cap}",
            passed=not failures_cop,
            checked=checked_cop,
            failures=tuple(failures_cop),
        ),
        CheckReport(
            name=f"Hoffman exp/log two-sided inverse weight<={roundtrip_cap}",
            passed=not failures_inv,
            checked=checked_inv,
            failures=tuple(failures_inv),
        ),
    ]

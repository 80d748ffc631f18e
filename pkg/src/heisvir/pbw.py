"""PBW monomials and normal forms in the universal enveloping algebra.

A monomial is a tuple of (generator, exponent) pairs whose generators are
strictly increasing in the fixed order z1 < z2 < z3 < I(m) < d(m) (indices
ascending within each family); the empty tuple is the unit.  Arbitrary
products are represented as words (tuples of generators) and straightened
with the bracket: swapping an out-of-order adjacent pair x y produces
y x + [x, y], which strictly reduces (length, inversions), so the rewrite
terminates.
"""

from __future__ import annotations

from .algebra import (
    Q,
    Generator,
    LieElement,
    bracket_gens,
    gen_order_key,
    gen_str,
    gen_weight,
    d,
    I,
)

Monomial = tuple  # ((gen, exp), ...)
UNIT: Monomial = ()


def word_of(mono: Monomial):
    """Expand exponents into an explicit word."""
    out = []
    for g, e in mono:
        out.extend([g] * e)
    return tuple(out)


def mono_of_sorted_word(word) -> Monomial:
    """Collapse a word that is already in normal order into a monomial."""
    out = []
    for g in word:
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + 1)
        else:
            out.append((g, 1))
    return tuple(out)


def mono_weight(mono: Monomial) -> int:
    return sum(gen_weight(g) * e for g, e in mono)


def mono_degree(mono: Monomial) -> int:
    """Number of generator factors counted with exponents."""
    return sum(e for _, e in mono)


def mono_str(mono: Monomial) -> str:
    if not mono:
        return "1"
    parts = []
    for g, e in mono:
        parts.append(gen_str(g) if e == 1 else "%s^%d" % (gen_str(g), e))
    return "*".join(parts)


def mono_sort_key(mono: Monomial):
    return tuple(gen_order_key(g) for g in word_of(mono))


class UEAElement:
    """Sparse rational combination of normal-form PBW monomials."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        pruned = {}
        if coeffs:
            for m, c in coeffs.items():
                c = Q(c)
                if c:
                    pruned[m] = c
        self.coeffs = pruned

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return UEAElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Q(scalar)
        if not scalar:
            return UEAElement()
        return UEAElement({m: scalar * c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def items(self):
        return self.coeffs.items()

    def support(self):
        return sorted(self.coeffs, key=mono_sort_key)

    def __repr__(self):
        return "UEAElement(%s)" % str(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in self.support():
            c = self.coeffs[m]
            ms = mono_str(m)
            if ms == "1":
                term = str(c)
            elif c == 1:
                term = ms
            elif c == -1:
                term = "-" + ms
            else:
                term = "%s*%s" % (c, ms)
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("- " + term[1:])
            else:
                parts.append("+ " + term)
        return " ".join(parts)


UEA_ZERO = UEAElement()
UEA_ONE = UEAElement({UNIT: Q(1)})


def uea(g: Generator) -> UEAElement:
    return UEAElement({((g, 1),): Q(1)})


def uea_from_lie(x: LieElement) -> UEAElement:
    return UEAElement({((g, 1),): c for g, c in x.items()})


def _find_inversion(word, strategy):
    idx = range(len(word) - 1) if strategy == "leftmost" else range(len(word) - 2, -1, -1)
    for i in idx:
        if gen_order_key(word[i]) > gen_order_key(word[i + 1]):
            return i
    return None


def normal_form(word, strategy: str = "leftmost") -> UEAElement:
    """Straighten an arbitrary word to the normal PBW form.

    The result is the image of the product in U under the fixed order.  The
    rewrite strategy (leftmost or rightmost inversion) does not affect the
    result; both are exposed so that independence can be tested.
    """
    pending = {tuple(word): Q(1)}
    done = {}
    while pending:
        w, c = pending.popitem()
        i = _find_inversion(w, strategy)
        if i is None:
            m = mono_of_sorted_word(w)
            s = done.get(m, 0) + c
            if s:
                done[m] = s
            else:
                done.pop(m, None)
            continue
        swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        s = pending.get(swapped, 0) + c
        if s:
            pending[swapped] = s
        else:
            pending.pop(swapped, None)
        for g, cb in bracket_gens(w[i], w[i + 1]).items():
            shorter = w[:i] + (g,) + w[i + 2 :]
            s = pending.get(shorter, 0) + c * cb
            if s:
                pending[shorter] = s
            else:
                pending.pop(shorter, None)
    return UEAElement(done)


def multiply(u: UEAElement, v: UEAElement) -> UEAElement:
    """Associative product of U, with the result in normal form."""
    out = UEAElement()
    for mu, cu in u.items():
        wu = word_of(mu)
        for mv, cv in v.items():
            wv = word_of(mv)
            if wu and wv and gen_order_key(wu[-1]) <= gen_order_key(wv[0]):
                # already ordered at the seam, no straightening needed
                prod = UEAElement({mono_of_sorted_word(wu + wv): Q(1)})
            else:
                prod = normal_form(wu + wv)
            out = out + (cu * cv) * prod
    return out


def grade(u: UEAElement):
    """Decompose into ad(d0)-weight-homogeneous components (weight -> element)."""
    buckets = {}
    for m, c in u.items():
        w = mono_weight(m)
        buckets.setdefault(w, {})[m] = c
    return {w: UEAElement(part) for w, part in buckets.items()}


def default_negative_restrict(g: Generator) -> bool:
    """The standard negative part: I(-j) and d(-j) with j >= 1."""
    kind, n = g
    return kind in ("I", "d") and n <= -1


def negative_part_basis(degree: int, restrict=None):
    """All normal monomials of ad-weight -degree in the allowed generators.

    restrict is a predicate on generators (default: the negative part);
    the output is sorted by the PBW order of the expanded words.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if restrict is None:
        restrict = default_negative_restrict
    gens = [
        g
        for n in range(degree, 0, -1)
        for g in (I(-n), d(-n))
        if restrict(g)
    ]
    gens.sort(key=gen_order_key)
    out = []

    def extend(word, start, remaining):
        if remaining == 0:
            out.append(mono_of_sorted_word(tuple(word)))
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            w = -gen_weight(g)
            if w <= remaining:
                word.append(g)
                extend(word, idx, remaining - w)
                word.pop()

    extend([], 0, degree)
    out.sort(key=mono_sort_key)
    return out

"""Simplicity criteria as executable verdicts.

The centrepiece is the linear functional rho_n on the negative enveloping
algebra, computed symbolically as a polynomial in n so that "nonzero for all
integers n" becomes an exact integer-root problem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Q, basis_window, gen_weight
from .errors import NotNegativePart
from .modules import ISParams, WhittakerCharacter
from .pbw import UEAElement, word_of


class NPoly:
    """Univariate polynomial in the indeterminate n with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "NPoly":
        return NPoly((Q(c),))

    @staticmethod
    def linear(c0, c1) -> "NPoly":
        """c0 + c1*n."""
        return NPoly((Q(c0), Q(c1)))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __call__(self, n) -> Q:
        acc = Q(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __eq__(self, other):
        return isinstance(other, NPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return NPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self):
        return NPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NPoly):
            if not self.coeffs or not other.coeffs:
                return NPoly()
            out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return NPoly(out)
        return NPoly([Q(other) * c for c in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                body = str(abs(c))
            else:
                var = "n" if e == 1 else "n^%d" % e
                body = var if abs(c) == 1 else "%s*%s" % (abs(c), var)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "NPoly(%s)" % str(self)


class AllIntegers:
    """Root set marker: the polynomial vanishes at every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AllIntegers"


ALL_INTEGERS = AllIntegers()


def integer_roots(p: NPoly):
    """Exact integer root set: a sorted list, or ALL_INTEGERS for the zero polynomial.

    Works on the primitive integer form of p; candidates divide the trailing
    coefficient, each is confirmed by exact evaluation.
    """
    if p.is_zero():
        return ALL_INTEGERS
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    roots = set()
    # factor out n^k so the trailing coefficient is nonzero
    shift = 0
    while ints[shift] == 0:
        shift += 1
    if shift:
        roots.add(0)
        ints = ints[shift:]
    if len(ints) > 1:
        a0 = abs(ints[0])
        cand = set()
        t = 1
        while t * t <= a0:
            if a0 % t == 0:
                cand.update((t, -t, a0 // t, -(a0 // t)))
            t += 1
        for r in cand:
            if p(r) == 0:
                roots.add(r)
    return sorted(roots)


def _check_negative_word(word):
    for g in word:
        kind, n = g
        if kind == "z" or n >= 0:
            raise NotNegativePart("%r is not in the strictly negative part" % (g,))


def rho_word(word, params: ISParams) -> NPoly:
    """The defining recursion on a raw word of negative generators.

    Peeling d(-i) off the left with a suffix of degree k contributes the
    factor -(a + k + i + n - i b); peeling I(-i) contributes -F.
    """
    _check_negative_word(word)
    poly = NPoly.const(1)
    suffix_weight = [0] * (len(word) + 1)
    for idx in range(len(word) - 1, -1, -1):
        suffix_weight[idx] = suffix_weight[idx + 1] - gen_weight(word[idx])
    for idx, g in enumerate(word):
        kind, neg = g
        i = -neg
        if kind == "I":
            poly = poly * (-params.F)
        else:
            k = suffix_weight[idx + 1]
            poly = poly * NPoly.linear(-(params.a + k + i - i * params.b), -1)
    return poly


def rho(P: UEAElement, params: ISParams) -> NPoly:
    """Linear extension of the recursion to normal-form elements."""
    out = NPoly()
    for mono, c in P.items():
        out = out + c * rho_word(word_of(mono), params)
    return out


@dataclass(frozen=True)
class SimplicityVerdict:
    """Uniform result type: simple, not simple (with witness), or inconclusive."""

    kind: str  # "simple" | "not_simple" | "inconclusive"
    witness_n: int | None = None
    witness: str | None = None
    reason: str | None = None

    @property
    def is_simple(self):
        return self.kind == "simple"

    @property
    def is_not_simple(self):
        return self.kind == "not_simple"

    @property
    def is_inconclusive(self):
        return self.kind == "inconclusive"

    def __str__(self):
        if self.kind == "simple":
            return "SIMPLE" + (" (%s)" % self.witness if self.witness else "")
        if self.kind == "not_simple":
            if self.witness_n is not None:
                return "NOT_SIMPLE n=%d" % self.witness_n
            return "NOT_SIMPLE" + (" (%s)" % self.witness if self.witness else "")
        return "INCONCLUSIVE %s" % (self.reason or "")


def simple(witness=None) -> SimplicityVerdict:
    return SimplicityVerdict("simple", witness=witness)


def not_simple(witness=None, n=None) -> SimplicityVerdict:
    return SimplicityVerdict("not_simple", witness_n=n, witness=witness)


def inconclusive(reason) -> SimplicityVerdict:
    return SimplicityVerdict("inconclusive", reason=reason)


def whittaker_expressions(char: WhittakerCharacter):
    """The two obstruction expressions of the nonzero-z3 Whittaker criterion."""
    m = char.m
    e1 = (
        2 * char.d_val(2 * m) * char.z3
        + char.i_val(m) ** 2
        - 2 * (m + 1) * char.i_val(m) * char.z2
    )
    e2 = (
        char.d_val(2 * m - 1) * char.z3
        + char.i_val(m) * char.i_val(m - 1)
        - (m + 1) * char.i_val(m) * char.z2
    )
    return e1, e2


def whittaker_simplicity(char: WhittakerCharacter) -> SimplicityVerdict:
    """Simplicity of the universal Whittaker module for the given character.

    For nonzero z3 the module is simple iff either obstruction expression is
    nonzero; for z3 = 0 it is simple iff the top I-value is nonzero.
    """
    if char.z3 != 0:
        e1, e2 = whittaker_expressions(char)
        if e1 != 0 or e2 != 0:
            return simple("obstructions (%s, %s)" % (e1, e2))
        return not_simple("both obstruction expressions vanish")
    if char.i_val(char.m) != 0:
        return simple("z3 = 0 and I(m)-value %s != 0" % char.i_val(char.m))
    return not_simple(
        "z3 = 0 and the I(m)-value vanishes; a proper Whittaker vector exists"
        " (see the linear-search module)"
    )


def tensor_simplicity(gens, params: ISParams, exclude_n0: bool = False) -> SimplicityVerdict:
    """Common-integer-root test on rho of the maximal-submodule generators.

    Simple iff no integer n (excluding 0 when flagged) is a common root of
    every rho(gen); the quotient-by-trivial case is handled by exclude_n0.
    """
    if not gens:
        raise ValueError("need at least one generator")
    polys = [rho(g, params) for g in gens]
    common = ALL_INTEGERS
    for p in polys:
        roots = integer_roots(p)
        if roots is ALL_INTEGERS:
            continue
        common = roots if common is ALL_INTEGERS else sorted(set(common) & set(roots))
    if common is ALL_INTEGERS:
        if exclude_n0:
            return not_simple("every integer n != 0 is a common rho root", n=1)
        return not_simple("every integer n is a common rho root")
    hits = [n for n in common if not (exclude_n0 and n == 0)]
    if hits:
        n = min(hits, key=lambda v: (abs(v), v))
        return not_simple("common rho root", n=n)
    return simple("no common integer rho root")


def annihilator_cover(ann1, ann2, window: int) -> bool:
    """Bounded-window span test for the annihilator-sum condition.

    True iff the listed elements supported inside |index| <= window span
    every d(n), I(n) with |n| <= window - margin together with z1, z2, z3,
    where margin is the largest index spread of any listed element.  This is
    a sufficient desk-scale check, not the infinite statement.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    elements = []
    margin = 0
    for x in list(ann1) + list(ann2):
        if x.is_zero():
            continue
        idx = [g[1] for g in x.coeffs if g[0] != "z"]
        if any(abs(i) > window for i in idx):
            continue
        if idx:
            margin = max(margin, max(idx) - min(idx))
        elements.append(x)
    cols = basis_window(window)
    col_pos = {g: i for i, g in enumerate(cols)}
    rows = []
    for x in elements:
        row = [Q(0)] * len(cols)
        for g, c in x.items():
            row[col_pos[g]] = c
        rows.append(row)
    # incremental echelon of the span
    pivots = {}

    def reduce(vec):
        vec = list(vec)
        for j in sorted(pivots):
            if vec[j]:
                pr = pivots[j]
                f = vec[j] / pr[j]
                for t in range(j, len(vec)):
                    vec[t] -= f * pr[t]
        return vec

    for row in rows:
        red = reduce(row)
        lead = next((j for j, v in enumerate(red) if v), None)
        if lead is not None:
            pivots[lead] = red
    targets = [g for g in cols if g[0] == "z" or abs(g[1]) <= window - margin]
    for g in targets:
        unit = [Q(0)] * len(cols)
        unit[col_pos[g]] = Q(1)
        if any(reduce(unit)):
            return False
    return True


def w_mu_kappa_simple(r, mu, kappa) -> SimplicityVerdict:
    """Triple test for the induced polynomial-subalgebra module.

    mu is indexed r..2r, kappa indexed 0..r; simple iff
    (mu_{2r}, mu_{2r-1}, kappa_r) is not identically zero.
    """
    r = int(r)
    if r < 1:
        raise ValueError("r must be >= 1")
    mu = [Q(v) for v in mu]
    kappa = [Q(v) for v in kappa]
    if len(mu) != r + 1 or len(kappa) != r + 1:
        raise ValueError("mu has entries r..2r and kappa has entries 0..r")
    triple = (mu[r], mu[r - 1], kappa[r])
    if any(triple):
        return simple("(mu_2r, mu_2r-1, kappa_r) = (%s, %s, %s)" % triple)
    return not_simple("(mu_2r, mu_2r-1, kappa_r) = (0, 0, 0)")

"""Exact model of the twisted Heisenberg-Virasoro Lie algebra.

The algebra has basis d(n) = t^{n+1} d/dt, I(n) = t^n (n ranging over the
integers) together with three central elements z1, z2, z3.  All coefficients
are exact rationals (fractions.Fraction); there is no floating point anywhere.

Structure constants:

    [d(n), d(m)] = (m-n) d(n+m)  + delta(n,-m) (n^3-n)/12 z1
    [d(n), I(m)] = m I(n+m)      + delta(n,-m) (n^2+n)   z2
    [I(n), I(m)] = n delta(n,-m) z3
    [z_i, anything] = 0

Generators are plain tuples ('d', n), ('I', n), ('z', i) so they can be used
directly as dict keys; LieElement wraps a sparse generator -> Fraction map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Q = Fraction

Generator = tuple  # ('d', n) | ('I', n) | ('z', i)


def d(n: int) -> Generator:
    return ("d", int(n))


def I(n: int) -> Generator:
    return ("I", int(n))


Z1: Generator = ("z", 1)
Z2: Generator = ("z", 2)
Z3: Generator = ("z", 3)


def is_generator(g) -> bool:
    return (
        isinstance(g, tuple)
        and len(g) == 2
        and g[0] in ("d", "I", "z")
        and isinstance(g[1], int)
        and (g[0] != "z" or g[1] in (1, 2, 3))
    )


def gen_order_key(g: Generator):
    """Total order z1 < z2 < z3 < I(m) (m ascending) < d(m) (m ascending).

    This is the PBW order used everywhere: central elements first, then the
    I family, then the d family.
    """
    kind, n = g
    if kind == "z":
        return (0, n)
    if kind == "I":
        return (1, n)
    return (2, n)


def gen_weight(g: Generator) -> int:
    """ad(d0)-weight: n for d(n) and I(n), 0 for the central elements."""
    kind, n = g
    return 0 if kind == "z" else n


def gen_str(g: Generator) -> str:
    kind, n = g
    if kind == "z":
        return "z%d" % n
    return "%s(%d)" % (kind, n)


class LieElement:
    """Finite rational linear combination of basis generators.

    Immutable by convention; no zero coefficients are stored, and equality
    is structural on the pruned sparse map.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        pruned = {}
        if coeffs:
            for g, c in coeffs.items():
                c = Q(c)
                if c:
                    pruned[g] = c
        self.coeffs = pruned

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            s = out.get(g, 0) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return LieElement(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Q(scalar)
        if not scalar:
            return LieElement()
        return LieElement({g: scalar * c for g, c in self.coeffs.items()})

    def __mul__(self, scalar):
        return self.__rmul__(scalar)

    def items(self):
        return self.coeffs.items()

    def support(self):
        return sorted(self.coeffs, key=gen_order_key)

    def __repr__(self):
        return "LieElement(%s)" % str(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for g in self.support():
            c = self.coeffs[g]
            term = gen_str(g) if c == 1 else ("-" + gen_str(g) if c == -1 else "%s*%s" % (c, gen_str(g)))
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("- " + term[1:])
            else:
                parts.append("+ " + term)
        return " ".join(parts)


ZERO = LieElement()


def lie(g: Generator) -> LieElement:
    """The basis generator g as a LieElement."""
    return LieElement({g: Q(1)})


def lie_sum(*terms) -> LieElement:
    """Sum of (coefficient, generator) pairs."""
    out = {}
    for c, g in terms:
        s = out.get(g, 0) + Q(c)
        if s:
            out[g] = s
        else:
            out.pop(g, None)
    return LieElement(out)


def bracket_gens(x: Generator, y: Generator) -> LieElement:
    """Lie bracket of two basis generators."""
    kx, n = x
    ky, m = y
    if kx == "z" or ky == "z":
        return ZERO
    if kx == "d" and ky == "d":
        terms = []
        if m != n:
            terms.append((m - n, d(n + m)))
        if n == -m:
            c = Q(n**3 - n, 12)
            if c:
                terms.append((c, Z1))
        return lie_sum(*terms)
    if kx == "d" and ky == "I":
        terms = []
        if m != 0:
            terms.append((m, I(n + m)))
        if n == -m:
            c = n * n + n
            if c:
                terms.append((c, Z2))
        return lie_sum(*terms)
    if kx == "I" and ky == "d":
        return -1 * bracket_gens(y, x)
    # I-I pair
    if n == -m and n != 0:
        return lie_sum((n, Z3))
    return ZERO


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Bilinear extension of the bracket to arbitrary elements."""
    out = {}
    for gx, cx in x.items():
        for gy, cy in y.items():
            for g, c in bracket_gens(gx, gy).items():
                s = out.get(g, 0) + cx * cy * c
                if s:
                    out[g] = s
                else:
                    out.pop(g, None)
    return LieElement(out)


def ad_weight(x):
    """ad(d0)-weight of a generator or a LieElement.

    Returns None for inhomogeneous (or zero) elements.
    """
    if is_generator(x):
        return gen_weight(x)
    weights = {gen_weight(g) for g in x.coeffs}
    if len(weights) == 1:
        return weights.pop()
    return None


def basis_window(bound: int, include_central: bool = True):
    """All basis generators with |index| <= bound (plus the centrals)."""
    gens = [d(n) for n in range(-bound, bound + 1)]
    gens += [I(n) for n in range(-bound, bound + 1)]
    if include_central:
        gens += [Z1, Z2, Z3]
    return gens


def jacobi_check(index_bound: int):
    """Check the Jacobi identity on all basis triples with |indices| <= bound.

    Returns the list of violating triples (x, y, z, residual); empty means
    the structure constants define a Lie algebra on this window.
    """
    if index_bound < 1:
        raise ValueError("index_bound must be >= 1")
    gens = basis_window(index_bound)
    violations = []
    for x in gens:
        lx = lie(x)
        for y in gens:
            ly = lie(y)
            bxy = bracket(lx, ly)
            for z in gens:
                lz = lie(z)
                residual = (
                    bracket(lx, bracket(ly, lz))
                    + bracket(ly, bracket(lz, lx))
                    + bracket(lz, bxy)
                )
                if residual:
                    violations.append((x, y, z, residual))
    return violations


@dataclass(frozen=True)
class AutomorphismSpec:
    """The automorphism family sigma_{a,b}.

    a_coeffs holds the finitely many Laurent coefficients a_i of the
    polynomial datum (map i -> a_i); b is a single rational.
    """

    a_coeffs: dict = field(default_factory=dict)
    b: Q = Q(0)

    def __post_init__(self):
        object.__setattr__(
            self, "a_coeffs", {int(i): Q(c) for i, c in self.a_coeffs.items() if Q(c)}
        )
        object.__setattr__(self, "b", Q(self.b))

    def a(self, i: int) -> Q:
        return self.a_coeffs.get(i, Q(0))


def sigma_gen(spec: AutomorphismSpec, g: Generator) -> LieElement:
    """Image of a basis generator under sigma_{a,b}."""
    a, b = spec.a, spec.b
    kind, n = g
    if kind == "z":
        if n == 1:
            return lie_sum((1, Z1), (-24 * b, Z2), (-12 * b * b, Z3))
        if n == 2:
            return lie_sum((1, Z2), (b, Z3))
        return lie(Z3)
    if kind == "I":
        terms = [(Q(1), I(n)), (-a(-n), Z3)]
        if n == 0:
            terms.append((b, Z3))
        return lie_sum(*terms)
    # d(n): d_n + t^n(a + n b) - (n+1) a_{-n} z2
    #       - (sum_i a_i a_{-n-i}/2 + a_{-n} n b) z3 + delta(n,0) b (z2 + b/2 z3)
    terms = [(Q(1), d(n))]
    for i, ai in spec.a_coeffs.items():
        terms.append((ai, I(n + i)))
    if n:
        terms.append((n * b, I(n)))
    terms.append((-(n + 1) * a(-n), Z2))
    quad = sum((ai * a(-n - i) for i, ai in spec.a_coeffs.items()), Q(0))
    terms.append((-(quad / 2 + a(-n) * n * b), Z3))
    if n == 0:
        terms.append((b, Z2))
        terms.append((b * b / 2, Z3))
    return lie_sum(*terms)


def apply_sigma(spec: AutomorphismSpec, x: LieElement) -> LieElement:
    """Linear extension of sigma_{a,b} to arbitrary elements."""
    out = LieElement()
    for g, c in x.items():
        out = out + c * sigma_gen(spec, g)
    return out


def sigma_hom_check(spec: AutomorphismSpec, index_bound: int):
    """Verify sigma([x,y]) = [sigma(x), sigma(y)] on a bounded window.

    Returns the list of violating pairs; this is a bounded-window check,
    not a proof that sigma is an automorphism.
    """
    if index_bound < 1:
        raise ValueError("index_bound must be >= 1")
    gens = basis_window(index_bound)
    images = {g: sigma_gen(spec, g) for g in gens}
    violations = []
    for x in gens:
        for y in gens:
            lhs = apply_sigma(spec, bracket_gens(x, y))
            rhs = bracket(images[x], images[y])
            if lhs != rhs:
                violations.append((x, y, lhs - rhs))
    return violations

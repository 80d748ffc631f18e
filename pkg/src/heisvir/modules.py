"""The module zoo: induced modules and closed-form actions.

Two engines cover everything.  A generic induced-module evaluator (subalgebra
membership + character) powers the Verma, Whittaker and polynomial-subalgebra
modules; the remaining variants (intermediate series, Fock oscillator, shifted
tensor, the two shift-embedded families) act through explicit formulas.

Basis keys are per-variant:

    Verma / Whittaker / Fock   PBW monomial over the free generators
    IntermediateSeries         integer m for the basis vector x^m
    ShiftedTensor              (monomial, integer) for u w (x) y^i
    Omega                      integer i for the outer-power basis
    Embedded (r = 1)           pair (i, j) of outer/inner powers

All values are immutable after construction and actions are pure; the only
mutable state is per-instance memo dicts of frozen results, so concurrent
reads are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import (
    Q,
    Generator,
    basis_window,
    bracket_gens,
    d,
    gen_order_key,
    gen_str,
    is_generator,
    lie,
)
from .errors import (
    LambdaZero,
    MixedModules,
    NeedNonzeroZ3,
    UnsupportedGenerator,
)
from .pbw import (
    Monomial,
    UEAElement,
    UNIT,
    mono_degree,
    mono_of_sorted_word,
    mono_sort_key,
    mono_str,
    mono_weight,
    word_of,
)


@dataclass(frozen=True)
class HWParams:
    """Highest weight data (I0, d0, z1, z2, z3 scalars)."""

    i0: Q = Q(0)
    d0: Q = Q(0)
    z1: Q = Q(0)
    z2: Q = Q(0)
    z3: Q = Q(0)

    def __post_init__(self):
        for name in ("i0", "d0", "z1", "z2", "z3"):
            object.__setattr__(self, name, Q(getattr(self, name)))


@dataclass(frozen=True)
class ISParams:
    """Intermediate-series data (a, b, F)."""

    a: Q = Q(0)
    b: Q = Q(0)
    F: Q = Q(0)

    def __post_init__(self):
        for name in ("a", "b", "F"):
            object.__setattr__(self, name, Q(getattr(self, name)))


class WhittakerCharacter:
    """Character data for the order-m Whittaker construction.

    Free data: the values on d(m)..d(2m), I(0)..I(m) and z1, z2, z3.  The
    values on d(k) for k > 2m and I(k) for k > m are forced to zero because
    those generators are commutators inside the subalgebra.
    """

    def __init__(self, m, d_vals=None, i_vals=None, z1=0, z2=0, z3=0):
        m = int(m)
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.d_vals = {int(k): Q(v) for k, v in (d_vals or {}).items()}
        self.i_vals = {int(k): Q(v) for k, v in (i_vals or {}).items()}
        for k in self.d_vals:
            if not (m <= k <= 2 * m):
                raise ValueError("d-values live on the window m..2m")
        for k in self.i_vals:
            if not (0 <= k <= m):
                raise ValueError("I-values live on the window 0..m")
        self.z1 = Q(z1)
        self.z2 = Q(z2)
        self.z3 = Q(z3)

    def d_val(self, k: int) -> Q:
        if k < self.m:
            raise ValueError("d(%d) is outside the character domain" % k)
        return self.d_vals.get(k, Q(0)) if k <= 2 * self.m else Q(0)

    def i_val(self, k: int) -> Q:
        if k < 0:
            raise ValueError("I(%d) is outside the character domain" % k)
        return self.i_vals.get(k, Q(0)) if k <= self.m else Q(0)

    def value(self, g: Generator) -> Q:
        kind, n = g
        if kind == "z":
            return (self.z1, self.z2, self.z3)[n - 1]
        if kind == "I":
            return self.i_val(n)
        return self.d_val(n)


@dataclass(frozen=True)
class VirWhittakerCharacter:
    """The derived Witt-side character (values on d(m)..d(2m) and z1)."""

    m: int
    d_vals: dict
    z1: Q

    def d_val(self, k: int) -> Q:
        if k < self.m:
            raise ValueError("d(%d) is outside the character domain" % k)
        return self.d_vals.get(k, Q(0)) if k <= 2 * self.m else Q(0)


def phi_prime(char: WhittakerCharacter) -> VirWhittakerCharacter:
    """Derived character: the Witt-side data split off from a Whittaker character.

    Requires a nonzero z3 value.
    """
    if char.z3 == 0:
        raise NeedNonzeroZ3("phi_prime needs a nonzero z3 value")
    m = char.m
    z1p = char.z1 - 1 + 12 * char.z2**2 / char.z3
    d_vals = {}
    for k in range(m, 2 * m + 1):
        conv = sum(char.i_val(i) * char.i_val(k - i) for i in range(0, k + 1))
        d_vals[k] = char.d_val(k) + (conv - 2 * (m + 1) * char.i_val(m) * char.z2) / (
            2 * char.z3
        )
    return VirWhittakerCharacter(m, d_vals, z1p)


def gen_binom(n: int, k: int) -> Q:
    """Binomial coefficient via falling factorials; n may be any integer."""
    num = 1
    for t in range(k):
        num *= n - t
    return Q(num, math.factorial(k))


class Module:
    """Base class: a module is a table of generator actions on basis keys."""

    name = "module"

    def supports(self, g: Generator) -> bool:
        return True

    def act_gen(self, g: Generator, key):
        raise NotImplementedError

    def key_sort(self, key):
        return key

    def key_str(self, key) -> str:
        return str(key)

    def vector(self, coeffs) -> "ModuleVector":
        """Build a vector from a key or a key -> coefficient map."""
        if isinstance(coeffs, dict):
            return ModuleVector(self, coeffs)
        return ModuleVector(self, {coeffs: Q(1)})


class ModuleVector:
    """Sparse vector in a fixed module; keys are per-variant basis labels."""

    __slots__ = ("module", "coeffs")

    def __init__(self, module: Module, coeffs=None):
        self.module = module
        pruned = {}
        if coeffs:
            for k, c in coeffs.items():
                c = Q(c)
                if c:
                    pruned[k] = c
        self.coeffs = pruned

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.module is not other.module:
            raise MixedModules("vectors belong to different modules")

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.module is other.module and self.coeffs == other.coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ModuleVector(self.module, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Q(scalar)
        if not scalar:
            return ModuleVector(self.module)
        return ModuleVector(self.module, {k: scalar * c for k, c in self.coeffs.items()})

    def __mul__(self, scalar):
        return self.__rmul__(scalar)

    def items(self):
        return self.coeffs.items()

    def support(self):
        return sorted(self.coeffs, key=self.module.key_sort)

    def __repr__(self):
        return "ModuleVector(%s)" % str(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in self.support():
            c = self.coeffs[k]
            ks = self.module.key_str(k)
            term = ks if c == 1 else ("-" + ks if c == -1 else "%s*%s" % (c, ks))
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("- " + term[1:])
            else:
                parts.append("+ " + term)
        return " ".join(parts)


def act(x, v: ModuleVector) -> ModuleVector:
    """Action of a LieElement (or a single generator) on a module vector."""
    if is_generator(x):
        x = lie(x)
    module = v.module
    out = {}
    for g, cg in x.items():
        if not module.supports(g):
            raise UnsupportedGenerator("%s does not act on %s" % (gen_str(g), module.name))
        for key, cv in v.items():
            for k2, c2 in module.act_gen(g, key).items():
                s = out.get(k2, 0) + cg * cv * c2
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
    return ModuleVector(module, out)


def act_uea(u: UEAElement, v: ModuleVector) -> ModuleVector:
    """Action of an enveloping-algebra element: fold each monomial right to left."""
    out = ModuleVector(v.module)
    for mono, c in u.items():
        cur = v
        for g in reversed(word_of(mono)):
            cur = act(g, cur)
        out = out + c * cur
    return out


def module_axiom_check(module: Module, index_bound: int, window):
    """Check act([x,y], v) = act(x, act(y, v)) - act(y, act(x, v)).

    Runs over all supported generator pairs with |indices| <= index_bound and
    every basis key in the window; returns the list of violations.
    """
    if not window:
        raise ValueError("window must be nonempty")
    gens = [g for g in basis_window(index_bound) if module.supports(g)]
    vecs = [module.vector(k) for k in window]
    violations = []
    for x in gens:
        for y in gens:
            bxy = bracket_gens(x, y)
            for v in vecs:
                residual = act(bxy, v) - (act(x, act(y, v)) - act(y, act(x, v)))
                if residual:
                    violations.append((x, y, next(iter(v.coeffs)), residual))
    return violations


class InducedModule(Module):
    """Module induced from a character of a subalgebra.

    Basis keys are PBW monomials over the complement generators, read as
    acting on the cyclic vector.  The action is evaluated recursively:
    straighten one generator through the leading factor and absorb
    subalgebra generators on the cyclic vector through the character.
    """

    def in_subalgebra(self, g: Generator) -> bool:
        raise NotImplementedError

    def char(self, g: Generator) -> Q:
        raise NotImplementedError

    def __init__(self):
        self._memo = {}

    def act_gen(self, g: Generator, key: Monomial):
        cached = self._memo.get((g, key))
        if cached is not None:
            return cached
        if key == UNIT:
            if self.in_subalgebra(g):
                c = self.char(g)
                out = {UNIT: c} if c else {}
            else:
                out = {((g, 1),): Q(1)}
            self._memo[(g, key)] = out
            return out
        word = word_of(key)
        head = word[0]
        if not self.in_subalgebra(g) and gen_order_key(g) <= gen_order_key(head):
            out = {mono_of_sorted_word((g,) + word): Q(1)}
            self._memo[(g, key)] = out
            return out
        rest = mono_of_sorted_word(word[1:])
        out = {}

        def accumulate(table, c):
            for k2, c2 in table.items():
                s = out.get(k2, 0) + c * c2
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)

        for k2, c2 in self.act_gen(g, rest).items():
            accumulate(self.act_gen(head, k2), c2)
        for g2, cb in bracket_gens(g, head).items():
            accumulate(self.act_gen(g2, rest), cb)
        self._memo[(g, key)] = out
        return out

    def key_sort(self, key):
        return mono_sort_key(key)

    def key_str(self, key):
        return "w" if key == UNIT else mono_str(key) + "*w"

    def cyclic(self) -> ModuleVector:
        return self.vector(UNIT)


class VermaModule(InducedModule):
    """Highest weight module, free over the negative part on the vector w."""

    name = "verma"

    def __init__(self, hw: HWParams):
        super().__init__()
        self.hw = hw

    def in_subalgebra(self, g: Generator) -> bool:
        kind, n = g
        return kind == "z" or n >= 0

    def char(self, g: Generator) -> Q:
        kind, n = g
        if kind == "z":
            return (self.hw.z1, self.hw.z2, self.hw.z3)[n - 1]
        if n > 0:
            return Q(0)
        return self.hw.i0 if kind == "I" else self.hw.d0


class WhittakerModule(InducedModule):
    """Universal Whittaker module for a given order-m character."""

    name = "whittaker"

    def __init__(self, char: WhittakerCharacter):
        super().__init__()
        self.character = char

    def in_subalgebra(self, g: Generator) -> bool:
        kind, n = g
        if kind == "z":
            return True
        if kind == "I":
            return n >= 0
        return n >= self.character.m

    def char(self, g: Generator) -> Q:
        return self.character.value(g)


class WMuKappaModule(InducedModule):
    """Module over the polynomial subalgebra induced from the (mu, kappa) character.

    mu is indexed r..2r, kappa is indexed 0..r; only generators of the
    polynomial subalgebra (d(n) with n >= -1 and I(n) with n >= 0) act.
    """

    name = "w_mu_kappa"

    def __init__(self, r, mu, kappa):
        super().__init__()
        r = int(r)
        if r < 1:
            raise ValueError("r must be >= 1")
        mu = [Q(v) for v in mu]
        kappa = [Q(v) for v in kappa]
        if len(mu) != r + 1 or len(kappa) != r + 1:
            raise ValueError("mu has entries r..2r and kappa has entries 0..r")
        self.r = r
        self.mu = mu
        self.kappa = kappa

    def supports(self, g: Generator) -> bool:
        kind, n = g
        if kind == "z":
            return False
        return n >= -1 if kind == "d" else n >= 0

    def in_subalgebra(self, g: Generator) -> bool:
        kind, n = g
        if kind == "I":
            if n < 0:
                raise UnsupportedGenerator("I(%d) is outside the polynomial subalgebra" % n)
            return True
        if kind == "d":
            if n < -1:
                raise UnsupportedGenerator("d(%d) is outside the polynomial subalgebra" % n)
            return n >= self.r
        raise UnsupportedGenerator("central elements are outside the polynomial subalgebra")

    def char(self, g: Generator) -> Q:
        kind, n = g
        if kind == "I":
            return self.kappa[n] if n <= self.r else Q(0)
        return self.mu[n - self.r] if n <= 2 * self.r else Q(0)

    def key_str(self, key):
        return "v" if key == UNIT else mono_str(key) + "*v"


class FockModule(Module):
    """Highest weight Heisenberg module extended by the quadratic action.

    Basis keys are monomials in I(-j), j >= 1, on the vacuum.  The z-family
    acts by scalars (z1 by 1 - 12 z2^2/z3), I(n) by the Heisenberg rules and
    d(k) by the normal-ordered quadratic sum plus the linear correction.

    Truncation of the quadratic sum: on a vector of total I-degree N only the
    window i in [-N-|k|-1, N+|k|+1] can contribute, because outside it the
    first-applied (larger-index) factor has index > N and already kills every
    monomial whose parts are bounded by N.
    """

    name = "fock"

    def __init__(self, i0, z2, z3):
        self.i0 = Q(i0)
        self.z2 = Q(z2)
        self.z3 = Q(z3)
        if self.z3 == 0:
            raise NeedNonzeroZ3("the oscillator construction needs z3 != 0")
        self.z1 = 1 - 12 * self.z2**2 / self.z3
        self._memo = {}

    def _heis(self, n: int, key: Monomial):
        """Action of I(n) on a basis monomial (dict key -> coefficient)."""
        if n < 0:
            word = tuple(sorted(word_of(key) + (("I", n),), key=gen_order_key))
            return {mono_of_sorted_word(word): Q(1)}
        if n == 0:
            return {key: self.i0} if self.i0 else {}
        for idx, (g, e) in enumerate(key):
            if g == ("I", -n):
                if e == 1:
                    smaller = key[:idx] + key[idx + 1 :]
                else:
                    smaller = key[:idx] + ((g, e - 1),) + key[idx + 1 :]
                return {smaller: Q(e * n) * self.z3}
        return {}

    def _apply_heis(self, n: int, table):
        out = {}
        for k, c in table.items():
            for k2, c2 in self._heis(n, k).items():
                s = out.get(k2, 0) + c * c2
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
        return out

    def d_action(self, k: int, key: Monomial, extra: int = 0):
        """Action of d(k) through the truncated quadratic sum.

        extra widens the summation window; the result must not depend on it
        (tested by doubling the window).
        """
        n_deg = -mono_weight(key)
        bound = n_deg + abs(k) + 1 + extra
        out = {}
        for i in range(-bound, bound + 1):
            pair = (-i, i + k)
            first, second = max(pair), min(pair)
            table = self._apply_heis(second, self._heis(first, key))
            for k2, c2 in table.items():
                s = out.get(k2, 0) + c2
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
        coeff = Q(-1, 2) / self.z3
        result = {k2: coeff * c2 for k2, c2 in out.items()}
        lin = (k + 1) * self.z2 / self.z3
        if lin:
            for k2, c2 in self._heis(k, key).items():
                s = result.get(k2, 0) + lin * c2
                if s:
                    result[k2] = s
                else:
                    result.pop(k2, None)
        return result

    def act_gen(self, g: Generator, key: Monomial):
        cached = self._memo.get((g, key))
        if cached is not None:
            return cached
        kind, n = g
        if kind == "z":
            c = (self.z1, self.z2, self.z3)[n - 1]
            out = {key: c} if c else {}
        elif kind == "I":
            out = self._heis(n, key)
        else:
            out = self.d_action(n, key)
        self._memo[(g, key)] = out
        return out

    def key_sort(self, key):
        return mono_sort_key(key)

    def key_str(self, key):
        return "w" if key == UNIT else mono_str(key) + "*w"

    def vacuum(self) -> ModuleVector:
        return self.vector(UNIT)


class IntermediateSeriesModule(Module):
    """The module on Laurent basis x^m with the three-parameter action."""

    name = "iseries"

    def __init__(self, params: ISParams):
        self.params = params

    def act_gen(self, g: Generator, key: int):
        kind, n = g
        p = self.params
        if kind == "z":
            return {}
        if kind == "d":
            c = p.a + key + n * p.b
            return {key + n: c} if c else {}
        return {key + n: p.F} if p.F else {}

    def key_str(self, key):
        return "x^%d" % key


class ShiftedTensorModule(Module):
    """Tensor of a Verma module with the intermediate series, shifted basis.

    Keys are (monomial, i) for u w (x) y^i; the y-exponent absorbs the
    module weight so that weight-n generators shift i by exactly n.
    """

    name = "shifted"

    def __init__(self, hw: HWParams, isp: ISParams):
        self.hw = hw
        self.isp = isp
        self.inner = VermaModule(hw)

    def act_gen(self, g: Generator, key):
        mono, i = key
        kind, n = g
        if kind == "z":
            c = (self.hw.z1, self.hw.z2, self.hw.z3)[n - 1]
            return {key: c} if c else {}
        k = mono_weight(mono)
        inner = dict(self.inner.act_gen(g, mono))
        if kind == "d":
            extra = -k + self.isp.a + i + n * self.isp.b
        else:
            extra = self.isp.F
        if extra:
            inner[mono] = inner.get(mono, Q(0)) + extra
        return {(m2, i + n): c for m2, c in inner.items() if c}

    def key_sort(self, key):
        mono, i = key
        return (i, mono_sort_key(mono))

    def key_str(self, key):
        mono, i = key
        head = "w" if mono == UNIT else mono_str(mono) + "*w"
        return "%s@y^%d" % (head, i)


class OmegaModule(Module):
    """Shift-embedded Witt-side Verma; basis is the outer-power family.

    Key i stands for the i-th outer power applied to the cyclic vector; the
    closed-form action is polynomial in the outer shift.
    """

    name = "omega"

    def __init__(self, lam, b1, b2):
        self.lam = Q(lam)
        if self.lam == 0:
            raise LambdaZero("the embedding parameter must be nonzero")
        self.b1 = Q(b1)
        self.b2 = Q(b2)
        self._memo = {}

    def _shift_pow(self, i: int, m: int):
        """Coefficients of (X - m)^i expanded over outer powers X^k."""
        return {k: gen_binom(i, k) * Q(-m) ** (i - k) for k in range(i + 1)}

    def act_gen(self, g: Generator, key: int):
        cached = self._memo.get((g, key))
        if cached is not None:
            return cached
        out = self._act_gen(g, key)
        self._memo[(g, key)] = out
        return out

    def _act_gen(self, g: Generator, key: int):
        kind, n = g
        if kind == "z":
            return {}
        out = {}
        lam_n = self.lam**n
        for k, c in self._shift_pow(key, n).items():
            if kind == "d":
                terms = {k + 1: lam_n * c}
                extra = lam_n * c * n * self.b1
                if extra:
                    terms[k] = terms.get(k, Q(0)) + extra
            else:
                terms = {k: self.lam ** (n + 1) * self.b2 * c}
            for k2, c2 in terms.items():
                if not c2:
                    continue
                s = out.get(k2, 0) + c2
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
        return out

    def key_str(self, key):
        return "v" if key == 0 else "d0^%d(v)" % key


def embedded_action(lam, x, v: ModuleVector) -> ModuleVector:
    """Shift-embedded action of the full algebra on a polynomial-subalgebra module.

    v must live in a WMuKappaModule; t^n acts by the binomially expanded
    shift t -> t + lam, derivations likewise, and the central elements act
    as zero.  The expansions truncate because high generators kill every
    vector of the induced module.
    """
    lam = Q(lam)
    if lam == 0:
        raise LambdaZero("the embedding parameter must be nonzero")
    wm = v.module
    if not isinstance(wm, WMuKappaModule):
        raise MixedModules("embedded_action expects a vector of the induced polynomial-subalgebra module")
    if is_generator(x):
        x = lie(x)
    out = ModuleVector(wm)
    maxdeg = max((mono_degree(k) for k in v.coeffs), default=0)
    for g, cg in x.items():
        kind, n = g
        if kind == "z":
            continue
        if kind == "I":
            for q in range(0, wm.r + maxdeg + 1):
                c = gen_binom(n, q) * lam ** (n - q)
                if c:
                    out = out + (cg * c) * act(("I", q), v)
        else:
            for q in range(0, 2 * wm.r + 1 + maxdeg + 1):
                c = gen_binom(n + 1, q) * lam ** (n + 1 - q)
                if c:
                    out = out + (cg * c) * act(("d", q - 1), v)
    return out


def example33_action(mu, kappa, lam, g: Generator, key):
    """Closed-form action on the (i, j) basis of the r = 1 embedded module.

    Independent of embedded_action; kept as a cross-check path.  mu is
    (mu_1, mu_2), kappa is (kappa_0, kappa_1).
    """
    lam = Q(lam)
    if lam == 0:
        raise LambdaZero("the embedding parameter must be nonzero")
    mu1, mu2 = Q(mu[0]), Q(mu[1])
    k0, k1 = Q(kappa[0]), Q(kappa[1])
    i, j = key
    kind, m = g
    out = {}

    def add(k2, c):
        if not c:
            return
        s = out.get(k2, 0) + c
        if s:
            out[k2] = s
        else:
            out.pop(k2, None)

    outer = {k: gen_binom(i, k) * Q(-m) ** (i - k) for k in range(i + 1)}
    if kind == "z":
        return {}
    if kind == "I":
        inner1 = {l: gen_binom(j, l) * Q(-1) ** (j - l) for l in range(j + 1)}
        for k, ck in outer.items():
            add((k, j), lam**m * k0 * ck)
            for l, cl in inner1.items():
                add((k, l), m * lam ** (m - 1) * k1 * ck * cl)
        return out
    inner1 = {l: gen_binom(j, l) * Q(-1) ** (j - l) for l in range(j + 1)}
    inner2 = {l: gen_binom(j, l) * Q(-2) ** (j - l) for l in range(j + 1)}
    for k, ck in outer.items():
        add((k + 1, j), lam**m * ck)
        add((k, j + 1), m * lam**m * ck)
        c1 = Q(m * m + m, 2) * lam ** (m - 1) * mu1 * ck
        if c1:
            for l, cl in inner1.items():
                add((k, l), c1 * cl)
        c2 = Q(m**3 - m, 6) * lam ** (m - 2) * mu2 * ck
        if c2:
            for l, cl in inner2.items():
                add((k, l), c2 * cl)
    return out


class EmbeddedModule(Module):
    """Shift-embedded (mu, kappa) module for r = 1 on the (i, j) basis.

    The key (i, j) is the plain vector (d0 + lam d(-1))^i d0^j v; actions are
    computed by converting to the plain basis, applying embedded_action and
    converting back (the change of basis is triangular in the d(-1)-degree,
    invertible because lam != 0).
    """

    name = "embedded"

    def __init__(self, mu, kappa, lam):
        self.lam = Q(lam)
        if self.lam == 0:
            raise LambdaZero("the embedding parameter must be nonzero")
        self.inner = WMuKappaModule(1, mu, kappa)
        self.mu = self.inner.mu
        self.kappa = self.inner.kappa
        self._plain_cache = {}
        self._memo = {}

    def _plain(self, key) -> ModuleVector:
        """The plain-basis vector behind an (i, j) key."""
        cached = self._plain_cache.get(key)
        if cached is not None:
            return cached
        i, j = key
        if i == 0:
            vec = self.inner.vector(((d(0), j),) if j else UNIT)
        else:
            prev = self._plain((i - 1, j))
            vec = act(d(0), prev) + self.lam * act(d(-1), prev)
        self._plain_cache[key] = vec
        return vec

    @staticmethod
    def _split(mono: Monomial):
        """(d(-1)-exponent, d(0)-exponent) of a plain monomial."""
        s = t = 0
        for g, e in mono:
            if g == ("d", -1):
                s = e
            elif g == ("d", 0):
                t = e
        return s, t

    def _from_plain(self, vec: ModuleVector):
        """Rewrite a plain vector over the (i, j) keys (triangular solve)."""
        out = {}
        rest = dict(vec.coeffs)
        while rest:
            mono, c = max(rest.items(), key=lambda item: self._split(item[0]))
            s, t = self._split(mono)
            coeff = c / self.lam**s
            out[(s, t)] = out.get((s, t), Q(0)) + coeff
            for m2, c2 in self._plain((s, t)).items():
                v = rest.get(m2, Q(0)) - coeff * c2
                if v:
                    rest[m2] = v
                else:
                    rest.pop(m2, None)
        return {k: c for k, c in out.items() if c}

    def act_gen(self, g: Generator, key):
        cached = self._memo.get((g, key))
        if cached is not None:
            return cached
        kind, _ = g
        if kind == "z":
            out = {}
        else:
            image = embedded_action(self.lam, g, self._plain(key))
            out = self._from_plain(image)
        self._memo[(g, key)] = out
        return out

    def key_str(self, key):
        i, j = key
        inner = "v" if j == 0 else "d0^%d(v)" % j
        return inner if i == 0 else "d0^%d(%s)" % (i, inner)

"""Exact arithmetic in the field Q(q, v1, ..., vm) of rational functions.

Polynomials are sparse dicts mapping exponent vectors to Fraction
coefficients.  The variable at index 0 is always q and is the only one
allowed to carry negative exponents (Laurent); the v_j and any extra
indeterminates (spectral parameters) have nonnegative exponents.

A Scalar is a fraction of two such polynomials kept in a canonical form:

* numerator and denominator share no polynomial factor (multivariate GCD
  over Q, recursive content/primitive-part scheme);
* the denominator has q-offset zero (any q^k factor of the denominator is
  absorbed into the numerator, which is where Laurent exponents live);
* the denominator has integer, coprime coefficients and its
  lexicographically-leading coefficient is positive.

Equal field elements therefore have identical encodings, and equality,
zero-tests and hashing are plain dict comparisons.  All values are
immutable after construction and every operation is a pure function, so
unrestricted concurrent use is safe.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:  # gmpy2's mpq is a drop-in exact rational, much faster than Fraction
    from gmpy2 import mpq as _QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _QQ = Fraction
from typing import Iterable, Mapping

__all__ = [
    "Field",
    "MultiPoly",
    "Scalar",
    "ParamSpec",
    "VanishingDenominatorError",
    "is_semisimple_spec",
]


class VanishingDenominatorError(ZeroDivisionError):
    """Raised when a parameter substitution hits a zero denominator."""


# ---------------------------------------------------------------------------
# raw polynomial helpers (terms = dict[exps tuple, Fraction], zero poly = {})
# ---------------------------------------------------------------------------

def _padd(p1, p2):
    out = dict(p1)
    for e, c in p2.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _pneg(p):
    return {e: -c for e, c in p.items()}


def _pscale(p, c):
    if not c:
        return {}
    return {e: c * x for e, x in p.items()}


def _pmul(p1, p2):
    if not p1 or not p2:
        return {}
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e)
            if s is None:
                out[e] = c1 * c2
            else:
                s = s + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def _pis_unit(p):
    """True for a nonzero constant polynomial."""
    if len(p) != 1:
        return False
    e = next(iter(p))
    return not any(e)


def _pmin_q(p):
    return min(e[0] for e in p)


def _pshift_q(p, k):
    if k == 0:
        return p
    return {(e[0] + k,) + e[1:]: c for e, c in p.items()}


def _plead(p):
    """Lexicographically greatest exponent vector."""
    return max(p)


def _int_normalize(p):
    """Scale p so coefficients are coprime integers, lex-leading one positive.

    Returns (scaled poly, lambda) with scaled = lambda * p.
    """
    den_lcm = 1
    for c in p.values():
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in p.values():
        num_gcd = math.gcd(num_gcd, c.numerator * (den_lcm // c.denominator))
    lam = _QQ(den_lcm, num_gcd)
    if p[_plead(p)] < 0:
        lam = -lam
    return {e: c * lam for e, c in p.items()}, lam


# --- multivariate GCD over Q (nonnegative exponents only) ------------------

def _degree_in(p, var):
    return max(e[var] for e in p) if p else -1


def _as_univar(p, var):
    """View p as a univariate poly in `var` with poly coefficients."""
    out = {}
    for e, c in p.items():
        d = e[var]
        key = e[:var] + (0,) + e[var + 1:]
        coeff = out.setdefault(d, {})
        coeff[key] = coeff.get(key, 0) + c
    return {d: {e: c for e, c in coeff.items() if c} for d, coeff in out.items()}


def _from_univar(u, var):
    out = {}
    for d, coeff in u.items():
        for e, c in coeff.items():
            out[e[:var] + (d,) + e[var + 1:]] = c
    return out


def _uni_shift(p, var, k):
    return {e[:var] + (e[var] + k,) + e[var + 1:]: c for e, c in p.items()}


def _pexact_div(p, d):
    """Exact division p / d (lex leading-term algorithm).

    Raises ArithmeticError if the division is not exact; only called on
    known factors.
    """
    if not p:
        return {}
    rem = dict(p)
    dlead = _plead(d)
    dc = d[dlead]
    quot = {}
    while rem:
        rlead = _plead(rem)
        qe = tuple(a - b for a, b in zip(rlead, dlead))
        if any(x < 0 for x in qe):
            raise ArithmeticError("inexact polynomial division")
        qc = rem[rlead] / dc
        quot[qe] = qc
        for e, c in d.items():
            te = tuple(a + b for a, b in zip(qe, e))
            s = rem.get(te, 0) - qc * c
            if s:
                rem[te] = s
            else:
                rem.pop(te, None)
    return quot


def _gcd_list(polys):
    g = {}
    for p in polys:
        g = _pgcd(g, p)
        if _pis_unit(g):
            return g
    return g


def _pgcd(p1, p2):
    """GCD of two polynomials with nonnegative exponents, primitive output."""
    if not p1:
        g = p2
    elif not p2:
        g = p1
    else:
        g = _pgcd_rec(p1, p2)
    if not g:
        return {}
    g, _ = _int_normalize(g)
    return g


def _pgcd_rec(p1, p2):
    nv = len(next(iter(p1)))
    var = -1
    for i in range(nv - 1, -1, -1):
        if _degree_in(p1, i) > 0 or _degree_in(p2, i) > 0:
            var = i
            break
    if var < 0:
        return {(0,) * nv: _QQ(1)}
    u1, u2 = _as_univar(p1, var), _as_univar(p2, var)
    cont1 = _gcd_list(u1.values())
    cont2 = _gcd_list(u2.values())
    cont = _pgcd(cont1, cont2)
    a = _pexact_div(p1, cont1)
    b = _pexact_div(p2, cont2)
    if _degree_in(a, var) < _degree_in(b, var):
        a, b = b, a
    if _degree_in(b, var) == 0:
        # one primitive part is free of the main variable, so the gcd of the
        # primitive parts is trivial
        return cont
    # primitive PRS on the primitive parts
    while b:
        if _degree_in(b, var) == 0:
            return cont
        r = _prem(a, b, var)
        if r:
            ur = _as_univar(r, var)
            r = _pexact_div(r, _gcd_list(ur.values()))
        a, b = b, r
    return _pmul(cont, a)


def _prem(a, b, var):
    """Pseudo-remainder of a by b in variable `var`."""
    da, db = _degree_in(a, var), _degree_in(b, var)
    ub = _as_univar(b, var)
    lb = ub[db]
    rem = a
    while rem and _degree_in(rem, var) >= db:
        dr = _degree_in(rem, var)
        ur = _as_univar(rem, var)
        lr = ur[dr]
        # rem <- lb*rem - lr * x^(dr-db) * b
        rem = _padd(_pmul(lb, rem), _pneg(_pmul(lr, _uni_shift(b, var, dr - db))))
    return rem


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

class MultiPoly:
    """A sparse multivariate polynomial, Laurent in q.

    `terms` maps exponent vectors (index 0 = q) to nonzero Fraction
    coefficients.  Instances are immutable value objects.
    """

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: "Field", terms: Mapping):
        self.field = field
        clean = {}
        for e, c in terms.items():
            if len(e) != field.nvars:
                raise ValueError("exponent vector has wrong width")
            if any(x < 0 for x in e[1:]):
                raise ValueError("only q may carry negative exponents")
            c = _QQ(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.field.nvars: _QQ(1)}

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and (self.field is other.field or self.field.names == other.field.names)
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        return _fmt_poly(self.terms, self.field.names)

    __repr__ = __str__


class Scalar:
    """An element of the rational-function field, in canonical form."""

    __slots__ = ("field", "_n", "_d", "_hash")

    def __init__(self, field, _n, _d, _raw=False):
        # internal constructor; use Field factory methods to build scalars
        self.field = field
        if _raw:
            self._n, self._d = _n, _d
        else:
            self._n, self._d = _canonical(field, _n, _d)
        self._hash = None

    # -- structure ----------------------------------------------------------

    @property
    def numerator(self) -> MultiPoly:
        p = MultiPoly.__new__(MultiPoly)
        p.field, p.terms, p._hash = self.field, self._n, None
        return p

    @property
    def denominator(self) -> MultiPoly:
        p = MultiPoly.__new__(MultiPoly)
        p.field, p.terms, p._hash = self.field, self._d, None
        return p

    def __bool__(self):
        return bool(self._n)

    def is_zero(self) -> bool:
        return not self._n

    def is_one(self) -> bool:
        return self._d == self.field._unit and self._n == self.field._unit

    def is_laurent_unit_denominator(self) -> bool:
        """True iff the denominator is a monomial +-q^k.

        In canonical form any q-power is absorbed into the numerator, so
        this amounts to the denominator being a (positive integer) constant.
        """
        if len(self._d) != 1:
            return False
        e = next(iter(self._d))
        return not any(e[1:])

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field.names != self.field.names:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction, _QQ)):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if self._d == other._d:
            n = _padd(self._n, other._n)
            if self._d == f._unit:
                return Scalar(f, n, f._unit, _raw=True)
            return Scalar(f, n, self._d)
        n = _padd(_pmul(self._n, other._d), _pmul(other._n, self._d))
        return Scalar(f, n, _pmul(self._d, other._d))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, _pneg(self._n), self._d, _raw=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if self._d == f._unit and other._d == f._unit:
            return Scalar(f, _pmul(self._n, other._n), f._unit, _raw=True)
        return Scalar(f, _pmul(self._n, other._n), _pmul(self._d, other._d))

    __rmul__ = __mul__

    def invert(self) -> "Scalar":
        if not self._n:
            raise ZeroDivisionError("inverting the zero scalar")
        return Scalar(self.field, self._d, self._n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, k: int):
        if k == 0:
            return self.field.one
        base = self if k > 0 else self.invert()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, _QQ)):
            other = self.field.from_fraction(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.field is not other.field and self.field.names != other.field.names:
            return False
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._n.items()), frozenset(self._d.items())))
        return self._hash

    # -- specialization -----------------------------------------------------

    def substitute(self, spec: "ParamSpec", extra_values: Mapping[str, Fraction] | None = None) -> Fraction:
        """Evaluate at a numeric parameter point; exact Fraction result."""
        vals = self.field.values_for(spec, extra_values)
        den = _peval(self._d, vals)
        if den == 0:
            raise VanishingDenominatorError(
                f"denominator {_fmt_poly(self._d, self.field.names)} vanishes at {spec}")
        val = _peval(self._n, vals) / den
        return Fraction(int(val.numerator), int(val.denominator))

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        num = _fmt_poly(self._n, self.field.names)
        if self._d == self.field._unit:
            return num
        den = _fmt_poly(self._d, self.field.names)
        if len(self._n) > 1:
            num = f"({num})"
        if len(self._d) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"


def _peval(p, vals):
    total = _QQ(0)
    for e, c in p.items():
        t = c
        for x, k in zip(vals, e):
            if k:
                if x == 0 and k < 0:
                    raise VanishingDenominatorError("negative power of zero")
                t = t * x ** k
        total += t
    return total


def _canonical(field, n, d):
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n:
        return {}, field._unit
    nq, dq = _pmin_q(n), _pmin_q(d)
    n = _pshift_q(n, -nq)
    d = _pshift_q(d, -dq)
    if not _pis_unit(d) and not _pis_unit(n):
        g = _pgcd(n, d)
        if not _pis_unit(g):
            n = _pexact_div(n, g)
            d = _pexact_div(d, g)
    d, lam = _int_normalize(d)
    if lam != 1:
        n = _pscale(n, lam)
    n = _pshift_q(n, nq - dq)
    return n, d


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

class Field:
    """The coefficient field Q(q, v1..vm), optionally with extra indeterminates.

    Extra indeterminates (e.g. spectral parameters alpha, beta) extend the
    variable list; one arithmetic core serves the whole package.
    """

    def __init__(self, m: int, extra: Iterable[str] = ()):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        extra = tuple(extra)
        self.names = ("q",) + tuple(f"v{j}" for j in range(1, m + 1)) + extra
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self._index = {nm: i for i, nm in enumerate(self.names)}
        self._unit = {(0,) * self.nvars: _QQ(1)}
        self.zero = Scalar(self, {}, self._unit, _raw=True)
        self.one = Scalar(self, dict(self._unit), self._unit, _raw=True)
        self.q = self.monomial(1, q=1)
        self.q_inv = self.monomial(1, q=-1)

    def __repr__(self):
        return f"Field({', '.join(self.names)})"

    def from_fraction(self, c) -> Scalar:
        c = _QQ(c)
        if not c:
            return self.zero
        return Scalar(self, {(0,) * self.nvars: c}, self._unit, _raw=True)

    def monomial(self, coeff, **exps) -> Scalar:
        """Build coeff * q^i * v1^j * ...; e.g. field.monomial(2, q=-1, v1=1)."""
        coeff = _QQ(coeff)
        if not coeff:
            return self.zero
        e = [0] * self.nvars
        for nm, k in exps.items():
            e[self._index[nm]] = k
        e = tuple(e)
        if any(x < 0 for x in e[1:]):
            raise ValueError("only q may carry negative exponents")
        return Scalar(self, {e: coeff}, self._unit, _raw=True)

    def v(self, j: int) -> Scalar:
        if not 1 <= j <= self.m:
            raise IndexError(f"v{j} not in field with m={self.m}")
        return self.monomial(1, **{f"v{j}": 1})

    def var(self, name: str) -> Scalar:
        if name not in self._index:
            raise KeyError(f"unknown variable {name!r}")
        return self.monomial(1, **{name: 1})

    def poly(self, terms: Mapping) -> Scalar:
        return Scalar(self, dict(terms), self._unit)

    def values_for(self, spec: "ParamSpec", extra_values=None):
        if spec.m != self.m:
            raise ValueError(f"ParamSpec has m={spec.m}, field has m={self.m}")
        vals = [spec.q_val] + list(spec.v_vals)
        for nm in self.names[1 + self.m:]:
            if not extra_values or nm not in extra_values:
                raise ValueError(f"no value supplied for extra variable {nm!r}")
            vals.append(Fraction(extra_values[nm]))
        return vals

    def elementary_symmetric(self, k: int) -> Scalar:
        """e_k(v1..vm), used by the cyclotomic relation."""
        if not 0 <= k <= self.m:
            raise ValueError("k out of range")
        out = self.zero
        import itertools
        for comb in itertools.combinations(range(1, self.m + 1), k):
            term = self.one
            for j in comb:
                term = term * self.v(j)
            out = out + term
        return out

    def parse(self, text: str) -> Scalar:
        from .exprparse import parse_scalar
        return parse_scalar(text, self)


# ---------------------------------------------------------------------------
# numeric parameter points
# ---------------------------------------------------------------------------

class ParamSpec:
    """A numeric parameter point q=q_val, v_j=v_vals[j-1], all nonzero."""

    __slots__ = ("m", "q_val", "v_vals")

    def __init__(self, m: int, q_val, v_vals):
        self.m = m
        self.q_val = Fraction(q_val)
        self.v_vals = tuple(Fraction(v) for v in v_vals)
        if len(self.v_vals) != m:
            raise ValueError(f"expected {m} values for v, got {len(self.v_vals)}")
        if self.q_val == 0:
            raise ValueError("q must be nonzero")
        if any(v == 0 for v in self.v_vals):
            raise ValueError("all v_j must be nonzero")

    def __repr__(self):
        vs = ", ".join(str(v) for v in self.v_vals)
        return f"ParamSpec(m={self.m}, q={self.q_val}, v=({vs}))"

    def __eq__(self, other):
        return (
            isinstance(other, ParamSpec)
            and (self.m, self.q_val, self.v_vals) == (other.m, other.q_val, other.v_vals)
        )

    def __hash__(self):
        return hash((self.m, self.q_val, self.v_vals))


def is_semisimple_spec(spec: ParamSpec, n: int) -> bool:
    """Exact test of the semisimplicity conditions for n strands.

    Requires 1 + q^2 + ... + q^(2N) nonzero for N < n, q^(2i)v_j != v_k for
    all j != k and |i| < n, and all v_j nonzero.
    """
    q2 = spec.q_val ** 2
    s = Fraction(0)
    p = Fraction(1)
    for N in range(n):
        s = s + p
        if s == 0:
            return False
        p = p * q2
    for j in range(spec.m):
        if spec.v_vals[j] == 0:
            return False
    for i in range(-(n - 1), n):
        qi = q2 ** i
        for j in range(spec.m):
            for k in range(spec.m):
                if j != k and qi * spec.v_vals[j] - spec.v_vals[k] == 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _fmt_monomial(e, names):
    parts = []
    for nm, k in zip(names, e):
        if k == 1:
            parts.append(nm)
        elif k:
            parts.append(f"{nm}^{k}")
    return "*".join(parts)


def _fmt_poly(terms, names):
    if not terms:
        return "0"
    out = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mono = _fmt_monomial(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)

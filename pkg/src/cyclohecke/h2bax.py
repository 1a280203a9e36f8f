"""Rank-two building blocks and Baxterized elements.

The affine Hecke algebra on two strands is generated by X, Y, sigma with

    X Y = Y X,    Y = sigma X sigma,    sigma^2 = (q - q^-1) sigma + 1.

Its irreducible representations with diagonalizable X and Y are the
one-dimensional family X -> a, Y -> q^(+-2) a, sigma -> +-q^(+-1) (both
signs coupled) and, for b != a and b != q^(+-2) a, a two-dimensional
family carried here in the basis where X and Y are diagonal.

Baxterized elements sigma_i(alpha, beta) = sigma_i + (q - q^-1) beta /
(alpha - beta) live in the algebra over the field extended by the
spectral parameters; the unitarity, spectral Yang-Baxter and locality
identities are checked as exact Element identities.
"""

from __future__ import annotations

from .algebra import Algebra, Element
from .scalars import Field, Scalar

__all__ = [
    "H2Rep",
    "H2ParameterError",
    "NotDiagonalizableError",
    "ReducibleError",
    "h2_one_dim",
    "h2_two_dim",
    "verify_h2_relations",
    "baxterize",
    "baxter_f",
    "baxter_field",
    "baxter_report",
    "verify_baxter_relations",
    "SPECTRAL_NAMES",
]

SPECTRAL_NAMES = ("alpha", "beta", "gamma", "delta")


class H2ParameterError(ValueError):
    """A rank-two representation parameter violates its precondition."""


class NotDiagonalizableError(H2ParameterError):
    """b = a: X and Y are not diagonalizable."""


class ReducibleError(H2ParameterError):
    """b = q^(+-2) a: the two-dimensional representation is reducible."""


class H2Rep:
    """A rank-two representation: matrices for X, Y, sigma over the field."""

    __slots__ = ("dimension", "field", "x_matrix", "y_matrix", "sigma_matrix",
                 "a", "b", "sign")

    def __init__(self, dimension, field, x_matrix, y_matrix, sigma_matrix,
                 a, b=None, sign=None):
        self.dimension = dimension
        self.field = field
        self.x_matrix = x_matrix
        self.y_matrix = y_matrix
        self.sigma_matrix = sigma_matrix
        self.a = a
        self.b = b
        self.sign = sign

    def __repr__(self):
        tag = f"sign={self.sign}" if self.dimension == 1 else f"b={self.b}"
        return f"H2Rep(dim={self.dimension}, a={self.a}, {tag})"


def h2_one_dim(a: Scalar, sign: int, field: Field | None = None) -> H2Rep:
    """The one-dimensional representation X=a, Y=q^(2s)a, sigma=s*q^s."""
    if field is None:
        field = a.field
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a.is_zero():
        raise H2ParameterError("parameter a must be nonzero")
    q = field.q if sign == 1 else field.q_inv
    return H2Rep(
        1, field,
        x_matrix=[[a]],
        y_matrix=[[q * q * a]],
        sigma_matrix=[[q if sign == 1 else -q]],
        a=a, sign=sign,
    )


def h2_two_dim(a: Scalar, b: Scalar, field: Field | None = None) -> H2Rep:
    """The two-dimensional representation in the basis where X, Y are diagonal."""
    if field is None:
        field = a.field
    diff = b - a
    if diff.is_zero():
        raise NotDiagonalizableError("b = a: X and Y cannot be diagonalized")
    q, q_inv = field.q, field.q_inv
    if (b - q * q * a).is_zero() or (b - q_inv * q_inv * a).is_zero():
        raise ReducibleError("b = q^(+-2) a: representation is reducible")
    c = q - q_inv
    zero = field.zero
    one = field.one
    sig = [
        [c * b / diff, one - (c * c * a * b) / (diff * diff)],
        [one, -c * a / diff],
    ]
    return H2Rep(
        2, field,
        x_matrix=[[a, zero], [zero, b]],
        y_matrix=[[b, zero], [zero, a]],
        sigma_matrix=sig,
        a=a, b=b,
    )


def _matmul(x, y, field):
    d = len(x)
    return [
        [sum((x[i][k] * y[k][j] for k in range(d)), field.zero) for j in range(d)]
        for i in range(d)
    ]


def verify_h2_relations(rep: H2Rep) -> bool:
    """XY = YX, Y = sigma X sigma, sigma^2 = (q - q^-1) sigma + 1, exactly."""
    f = rep.field
    X, Y, S = rep.x_matrix, rep.y_matrix, rep.sigma_matrix
    if _matmul(X, Y, f) != _matmul(Y, X, f):
        return False
    if _matmul(S, _matmul(X, S, f), f) != Y:
        return False
    c = f.q - f.q_inv
    d = rep.dimension
    want = [
        [c * S[i][j] + (f.one if i == j else f.zero) for j in range(d)]
        for i in range(d)
    ]
    return _matmul(S, S, f) == want


# ---------------------------------------------------------------------------
# Baxterized elements
# ---------------------------------------------------------------------------

def baxterize(i: int, alpha: Scalar, beta: Scalar, algebra: Algebra) -> Element:
    """sigma_i + (q - q^-1) beta / (alpha - beta), over the algebra's field."""
    if (alpha - beta).is_zero():
        raise ZeroDivisionError("spectral parameters must differ")
    coeff = (algebra.field.q - algebra.field.q_inv) * beta / (alpha - beta)
    return algebra.sigma_element(i) + algebra.one().scale(coeff)


def baxter_f(alpha: Scalar, beta: Scalar, field: Field) -> Scalar:
    """The unitarity factor (q alpha - q^-1 beta) / (alpha - beta)."""
    return (field.q * alpha - field.q_inv * beta) / (alpha - beta)


def baxter_field(m: int) -> Field:
    """Q(q, v1..vm) extended by the four spectral indeterminates."""
    return Field(m, extra=SPECTRAL_NAMES)


def baxter_report(m: int, n: int) -> dict:
    """Exact symbolic verification of the Baxterized-element identities.

    Checks unitarity for n >= 2, the spectral Yang-Baxter relation for
    n >= 3, and locality for n >= 4; each over fresh symbolic spectral
    parameters alpha..delta.
    """
    field = baxter_field(m)
    A = Algebra(m, n, field)
    al, be, ga, de = (field.var(nm) for nm in SPECTRAL_NAMES)
    report = {"m": m, "n": n, "checks": {}}
    checks = report["checks"]
    if n >= 2:
        lhs = A.multiply(baxterize(1, al, be, A), baxterize(1, be, al, A))
        rhs = A.one().scale(baxter_f(al, be, field) * baxter_f(be, al, field))
        checks["unitarity"] = lhs == rhs
    if n >= 3:
        lhs = A.multiply(
            A.multiply(baxterize(1, al, be, A), baxterize(2, al, ga, A)),
            baxterize(1, be, ga, A))
        rhs = A.multiply(
            A.multiply(baxterize(2, be, ga, A), baxterize(1, al, ga, A)),
            baxterize(2, al, be, A))
        checks["yang_baxter"] = lhs == rhs
    if n >= 4:
        x = baxterize(1, al, be, A)
        y = baxterize(3, ga, de, A)
        checks["locality"] = A.multiply(x, y) == A.multiply(y, x)
    report["ok"] = all(checks.values()) if checks else False
    return report


def verify_baxter_relations(m: int, n: int) -> bool:
    """True iff all applicable Baxterized-element identities hold exactly."""
    return baxter_report(m, n)["ok"]

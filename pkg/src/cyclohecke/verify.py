"""Global cross-checks tying the symbolic algebra to the representations.

The evaluation map Phi sends an algebra element to the block-diagonal
family of its matrices over all seminormal blocks for (m, n).  At a
validated semisimple parameter point it is faithful, which makes it an
equality oracle for the rewrite engine: Phi(1) is the identity,
Phi(xy) = Phi(x)Phi(y), and the images of the n! m^n basis words are
linearly independent (exact rank, fraction-free).

Block matrices are stored column-major as plain nested lists; numeric
entries are exact rationals (gmpy2.mpq when available).  Blocks are
independent, so building or evaluating them in parallel is safe; reports
aggregate in the deterministic shape order of `enumerate_mpartitions`.
"""

from __future__ import annotations

import math
import random

from .algebra import Algebra, Element, NormalWord
from .scalars import Field, ParamSpec, Scalar, _QQ, is_semisimple_spec
from .seminormal import Representation, build_representation
from .tableaux import (
    content_string,
    enumerate_mpartitions,
    is_content_string,
    _scalar_to_pair,
)

try:
    from gmpy2 import mpz as _ZZ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _ZZ = int

__all__ = [
    "GlobalRep",
    "NonSemisimpleSpecError",
    "DEFAULT_SPEC_VALUES",
    "default_spec",
    "phi",
    "oracle_equal",
    "spectrum_report",
    "completeness_report",
    "basis_image_rank",
    "morphism_check",
    "flatness_certificate",
    "exact_rank",
]

#: small exact parameter values for the default oracle point
DEFAULT_SPEC_VALUES = (1, 3, 7)


class NonSemisimpleSpecError(ValueError):
    """The requested parameter point fails the semisimplicity conditions."""


def default_spec(m: int, n: int) -> ParamSpec:
    """q = 2 and v = (1, 3, 7)[:m], validated for n strands."""
    spec = ParamSpec(m, 2, DEFAULT_SPEC_VALUES[:m])
    if not is_semisimple_spec(spec, n):
        raise NonSemisimpleSpecError(f"default spec rejected for (m={m}, n={n})")
    return spec


class GlobalRep:
    """The direct sum of all seminormal blocks for (m, n).

    With `spec=None` the blocks stay symbolic; with a numeric ParamSpec the
    generator matrices are specialized once (the spec is validated against
    the semisimplicity conditions first, and rejected otherwise).
    """

    #: cached word images are dropped wholesale beyond this many entries
    PHI_CACHE_CAP = 600

    def __init__(self, m: int, n: int, spec: ParamSpec | None = None,
                 field: Field | None = None):
        self.m = m
        self.n = n
        self.field = field if field is not None else Field(m)
        self.spec = spec
        if spec is not None:
            if spec.m != m:
                raise ValueError(f"spec has m={spec.m}, expected {m}")
            if not is_semisimple_spec(spec, n):
                raise NonSemisimpleSpecError(
                    f"{spec} is not semisimple for n={n}; oracle refused")
        self.shapes = enumerate_mpartitions(m, n)
        self.reps = [build_representation(s, self.field) for s in self.shapes]
        self.dims = [r.dimension for r in self.reps]
        self.total_dimension = sum(self.dims)
        if sum(d * d for d in self.dims) != math.factorial(n) * m ** n:
            raise AssertionError("block dimensions violate the dimension count")
        if spec is not None:
            qv = _QQ(spec.q_val)
            self._c_num = qv - 1 / qv
            self._tau_num = [
                [_QQ(rep.tau_matrix[i][i].substitute(spec)) for i in range(rep.dimension)]
                for rep in self.reps
            ]
            self._sig_num = [
                [
                    [
                        tuple((row, _QQ(val.substitute(spec))) for row, val in col)
                        for col in cols
                    ]
                    for cols in rep._sigma_cols
                ]
                for rep in self.reps
            ]
        self._phi_cache = {}

    def __repr__(self):
        mode = "symbolic" if self.spec is None else str(self.spec)
        return f"GlobalRep(m={self.m}, n={self.n}, {mode}, blocks={len(self.reps)})"

    # -- word images -------------------------------------------------------

    def _napply(self, bi: int, letter, vec: dict) -> dict:
        """Numeric sparse action of one letter on {index: rational}."""
        kind = letter[0]
        if kind == "t":
            diag = self._tau_num[bi]
            return {k: x for k, x in ((k, diag[k] * v) for k, v in vec.items()) if x}
        i = letter[1]
        cols = self._sig_num[bi][i - 1]
        out = {}
        for k, v in vec.items():
            for row, val in cols[k]:
                got = out.get(row)
                x = val * v
                out[row] = x if got is None else got + x
        if kind == "si":
            c = self._c_num
            for k, v in vec.items():
                got = out.get(k)
                x = c * v
                out[k] = -x if got is None else got - x
        return {k: v for k, v in out.items() if v}

    def _word_block(self, bi: int, letters):
        """Column-major matrix of a generator word on block bi."""
        d = self.dims[bi]
        cols = []
        if self.spec is not None:
            one, zero = _QQ(1), _QQ(0)
            for t in range(d):
                vec = {t: one}
                for letter in reversed(letters):
                    vec = self._napply(bi, letter, vec)
                col = [zero] * d
                for k, v in vec.items():
                    col[k] = v
                cols.append(col)
        else:
            rep = self.reps[bi]
            one, zero = self.field.one, self.field.zero
            for t in range(d):
                vec = rep.apply_word(letters, {t: one})
                col = [zero] * d
                for k, v in vec.items():
                    col[k] = v
                cols.append(col)
        return cols

    def phi_word(self, w: NormalWord):
        """Block matrices of a basis word, cached."""
        w = tuple(w)
        got = self._phi_cache.get(w)
        if got is None:
            letters = NormalWord(w).letters()
            got = [self._word_block(bi, letters) for bi in range(len(self.reps))]
            if len(self._phi_cache) >= self.PHI_CACHE_CAP:
                self._phi_cache.clear()
            self._phi_cache[w] = got
        return got

    def phi(self, e: Element):
        """Block-diagonal image of an Element; algebra morphism by construction."""
        if e.algebra.m != self.m or e.algebra.n != self.n:
            raise ValueError("element and oracle have different (m, n)")
        numeric = self.spec is not None
        zero = _QQ(0) if numeric else self.field.zero
        out = [
            [[zero] * d for _ in range(d)]
            for d in self.dims
        ]
        for w, coeff in e.terms.items():
            c = _QQ(coeff.substitute(self.spec)) if numeric else coeff
            if not c:
                continue
            blocks = self.phi_word(w)
            for acc, blk in zip(out, blocks):
                for col_acc, col in zip(acc, blk):
                    for r, x in enumerate(col):
                        if x:
                            col_acc[r] = col_acc[r] + c * x
        return out

    def identity_blocks(self):
        one = _QQ(1) if self.spec is not None else self.field.one
        zero = _QQ(0) if self.spec is not None else self.field.zero
        return [
            [[one if r == t else zero for r in range(d)] for t in range(d)]
            for d in self.dims
        ]

    def mat_mul(self, x, y):
        """Product of two block families (column-major blocks)."""
        out = []
        for bx, by, d in zip(x, y, self.dims):
            cols = []
            for col in by:
                acc = [None] * d
                for r in range(d):
                    s = None
                    for k in range(d):
                        v = bx[k][r] * col[k]
                        s = v if s is None else s + v
                    acc[r] = s
                cols.append(acc)
            out.append(cols)
        return out


def phi(e: Element, g: GlobalRep):
    return g.phi(e)


def oracle_equal(a: Element, b: Element, g: GlobalRep) -> bool:
    """Equality through the oracle; faithful at a semisimple numeric spec."""
    return g.phi(a) == g.phi(b)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def spectrum_report(g: GlobalRep) -> dict:
    """Diagonal JM strings of every block/tableau, with the structure checks.

    Strings are read off the representation matrices symbolically: for each
    basis tableau the JM words must act diagonally; the string must pass the
    content-string conditions; strings must be pairwise distinct across all
    blocks; and the set must equal the combinatorial content strings of all
    standard m-tableaux.
    """
    field = g.field
    entries = []
    diagonal = True
    all_content = True
    for shape, rep in zip(g.shapes, g.reps):
        jm_letters = [
            [("s", t) for t in range(i - 1, 0, -1)] + [("t",)]
            + [("s", t) for t in range(1, i)]
            for i in range(1, g.n + 1)
        ]
        for idx in range(rep.dimension):
            string = []
            for letters in jm_letters:
                vec = rep.apply_word(letters, {idx: field.one})
                if set(vec) - {idx}:
                    diagonal = False
                string.append(vec.get(idx, field.zero))
            if not is_content_string(string, g.m):
                all_content = False
            entries.append({
                "shape": shape,
                "tableau_index": idx,
                "string": tuple(string),
                "pairs": tuple(_scalar_to_pair(s) for s in string),
            })
    strings = [e["pairs"] for e in entries]
    distinct = len(set(strings)) == len(strings)
    combinatorial = {
        content_string(t).pairs
        for rep in g.reps
        for t in rep.basis
    }
    matches = set(strings) == combinatorial
    return {
        "m": g.m,
        "n": g.n,
        "entries": entries,
        "jm_diagonal": diagonal,
        "all_content_strings": all_content,
        "pairwise_distinct": distinct,
        "matches_tableau_strings": matches,
        "ok": diagonal and all_content and distinct and matches,
    }


def completeness_report(m: int, n: int) -> dict:
    """Sum of squared block dimensions against the group order n! m^n."""
    from .tableaux import count_standard_tableaux
    dims = [count_standard_tableaux(s) for s in enumerate_mpartitions(m, n)]
    ss = sum(d * d for d in dims)
    order = math.factorial(n) * m ** n
    return {
        "m": m,
        "n": n,
        "dimensions": dims,
        "sum_of_squares": ss,
        "group_order": order,
        "equal": ss == order,
    }


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def exact_rank(rows) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination, exact."""
    mat = []
    for row in rows:
        den_lcm = 1
        for x in row:
            d = x.denominator
            den_lcm = den_lcm * d // math.gcd(den_lcm, d)
        ints = [_ZZ(x.numerator * (den_lcm // x.denominator)) for x in row]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if g:
            mat.append([x // g for x in ints])
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = _ZZ(1)
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            x = mat[r][col]
            row_r = mat[r]
            row_p = mat[rank]
            mat[r] = [(p * row_r[j] - x * row_p[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(mat):
            break
    return rank


def basis_image_rank(g: GlobalRep, algebra: Algebra | None = None) -> dict:
    """Rank of the flattened Phi images of all basis words.

    Equality with n! m^n certifies linear independence of the normal-word
    images, i.e. desk-scale soundness of the normal form.
    """
    if g.spec is None:
        raise ValueError("basis_image_rank needs a numeric semisimple spec")
    if algebra is None:
        algebra = Algebra(g.m, g.n, g.field)
    basis = algebra.enumerate_basis()
    rows = []
    for w in basis:
        blocks = g.phi_word(w)
        row = []
        for blk in blocks:
            for col in blk:
                row.extend(col)
        rows.append(row)
    rank = exact_rank(rows)
    return {
        "m": g.m,
        "n": g.n,
        "basis_size": len(basis),
        "rank": rank,
        "full_rank": rank == len(basis),
    }


def morphism_check(g: GlobalRep, algebra: Algebra | None = None,
                   pairs: int = 200, seed: int = 0) -> dict:
    """Phi(a*b) == Phi(a)Phi(b) on random basis-word pairs, exact equality."""
    if algebra is None:
        algebra = Algebra(g.m, g.n, g.field)
    basis = algebra.enumerate_basis()
    rng = random.Random(seed)
    failures = 0
    for _ in range(pairs):
        w1, w2 = rng.choice(basis), rng.choice(basis)
        a = algebra.element({w1: 1})
        b = algebra.element({w2: 1})
        lhs = g.phi(algebra.multiply(a, b))
        rhs = g.mat_mul(g.phi(a), g.phi(b))
        if lhs != rhs:
            failures += 1
    return {
        "m": g.m,
        "n": g.n,
        "pairs": pairs,
        "failures": failures,
        "ok": failures == 0,
    }


def flatness_certificate(algebra: Algebra, limit: int | None = None) -> dict:
    """Structure constants on basis pairs all lie in the Laurent ring."""
    basis = algebra.enumerate_basis()
    if limit is not None:
        basis = basis[:limit]
    checked = 0
    for w1 in basis:
        e1 = algebra.element({w1: 1})
        for w2 in basis:
            p = algebra.multiply(e1, algebra.element({w2: 1}))
            for c in p.terms.values():
                if not c.is_laurent_unit_denominator():
                    return {"m": algebra.m, "n": algebra.n, "checked": checked,
                            "ok": False, "witness": (tuple(w1), tuple(w2), str(c))}
            checked += 1
    return {"m": algebra.m, "n": algebra.n, "checked": checked, "ok": True}

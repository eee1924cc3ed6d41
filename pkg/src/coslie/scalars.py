"""Exact scalar arithmetic and linear algebra.

Scalars form a small tower: ``Fraction`` (arbitrary-precision rationals),
``Poly`` (multivariate polynomials over the rationals) and ``RatFn``
(quotients of polynomials, used where linear solving over a polynomial
ring forces division).  All arithmetic is exact; nothing here ever touches
floating point.

Polynomials keep a canonical form at all times: variables sorted by name,
no zero coefficients, unused variables pruned.  Printing uses graded
lexicographic order (descending), so equal polynomials print identically,
which the CLI relies on for byte-reproducible reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    InexactDivision,
    MissingVariable,
    ParametricUnsupported,
    SingularSystem,
)

Scalar = Union[Fraction, "Poly", "RatFn"]

ZERO = Fraction(0)
ONE = Fraction(1)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to a rational")


class Poly:
    """Multivariate polynomial with Fraction coefficients.

    ``variables`` is a sorted tuple of names, ``terms`` maps exponent
    tuples (one slot per variable) to nonzero Fractions.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Fraction]):
        clean = {e: _as_fraction(c) for e, c in terms.items() if c != 0}
        variables = tuple(variables)
        # prune variables that no term uses, keep names sorted
        used = [i for i in range(len(variables)) if any(e[i] for e in clean)]
        if len(used) != len(variables) or list(variables) != sorted(variables):
            names = sorted(variables[i] for i in used)
            order = [variables.index(n) for n in names]
            clean = {tuple(e[i] for i in order): c for e, c in clean.items()}
            variables = tuple(names)
        self.variables = variables
        self.terms = clean

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(value) -> "Poly":
        value = _as_fraction(value)
        return Poly((), {(): value} if value else {})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly((name,), {(1,): ONE})

    # -- structure ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.variables or all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ParametricUnsupported(f"{self} is not constant")
        return self.terms.get((0,) * len(self.variables), ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if isinstance(other, Poly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, RatFn):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------
    def _aligned(self, other: "Poly"):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        names = sorted(set(self.variables) | set(other.variables))

        def remap(p: Poly):
            idx = [p.variables.index(n) if n in p.variables else None for n in names]
            out = {}
            for e, c in p.terms.items():
                out[tuple(e[i] if i is not None else 0 for i in idx)] = c
            return out

        return tuple(names), remap(self), remap(other)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other):
        if isinstance(other, RatFn):
            return other + self
        other = self._coerce(other)
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, ZERO) + c
        return Poly(names, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, (Poly, RatFn)) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFn):
            return other * self
        other = self._coerce(other)
        names, a, b = self._aligned(other)
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, ZERO) + c1 * c2
        return Poly(names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if other == 0:
                raise ZeroDivisionError
            return Poly(self.variables, {e: c / other for e, c in self.terms.items()})
        return ratfn(self, other)

    def __rtruediv__(self, other):
        return ratfn(Poly.const(other) if not isinstance(other, Poly) else other, self)

    # -- graded-lex order ---------------------------------------------
    @staticmethod
    def _key(exp: tuple):
        return (sum(exp), exp)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        exp = max(self.terms, key=Poly._key)
        return exp, self.terms[exp]

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact quotient self / divisor; raises InexactDivision otherwise."""
        if divisor.is_zero():
            raise ZeroDivisionError
        if divisor.is_constant():
            return self / divisor.constant_value()
        names, rem, div = self._aligned(divisor)
        rem = dict(rem)
        dexp = max(div, key=Poly._key)
        dcoef = div[dexp]
        qterms: dict = {}
        while rem:
            rexp = max(rem, key=Poly._key)
            rcoef = rem[rexp]
            qexp = tuple(r - d for r, d in zip(rexp, dexp))
            if any(x < 0 for x in qexp):
                raise InexactDivision(f"({divisor}) does not divide ({self})")
            qc = rcoef / dcoef
            qterms[qexp] = qterms.get(qexp, ZERO) + qc
            for e, c in div.items():
                key = tuple(x + y for x, y in zip(qexp, e))
                val = rem.get(key, ZERO) - qc * c
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return Poly(names, qterms)

    # -- evaluation ---------------------------------------------------
    def eval(self, assignment: Mapping[str, Fraction]) -> Fraction:
        for name in self.variables:
            if name not in assignment:
                raise MissingVariable(name)
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for name, power in zip(self.variables, e):
                if power:
                    term *= _as_fraction(assignment[name]) ** power
            total += term
        return total

    def subs(self, assignment: Mapping[str, Fraction]) -> "Poly":
        """Substitute some variables, keeping the rest symbolic."""
        keep = [n for n in self.variables if n not in assignment]
        out: dict = {}
        for e, c in self.terms.items():
            coef = c
            key = []
            for name, power in zip(self.variables, e):
                if name in assignment:
                    coef *= _as_fraction(assignment[name]) ** power
                else:
                    key.append(power)
            key = tuple(key)
            out[key] = out.get(key, ZERO) + coef
        return Poly(tuple(keep), out)

    # -- printing -----------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=Poly._key, reverse=True):
            coef = self.terms[exp]
            mono = "*".join(
                f"{n}^{p}" if p > 1 else n
                for n, p in zip(self.variables, exp)
                if p
            )
            if mono:
                body = mono if abs(coef) == 1 else f"{abs(coef)}*{mono}"
            else:
                body = str(abs(coef))
            sign = "-" if coef < 0 else "+"
            pieces.append((sign, body))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


class RatFn:
    """Quotient of two polynomials, normalized with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        _, lead = den.leading()
        if lead != 1:
            num = num / lead
            den = den / lead
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFn):
            return (self.num * other.den) == (other.num * self.den)
        if isinstance(other, (int, Fraction, Poly)):
            other = other if isinstance(other, Poly) else Poly.const(other)
            return self.num == other * self.den
        return NotImplemented

    # equality is cross-multiplication, which no hash can respect for
    # unreduced representatives; quotients are values, not dict keys
    __hash__ = None

    def _coerce(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            return other
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return RatFn(other, Poly.const(1))

    def __add__(self, other):
        o = self._coerce(other)
        return ratfn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return ratfn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return ratfn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def eval(self, assignment: Mapping[str, Fraction]) -> Fraction:
        den = self.den.eval(assignment)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at assignment")
        return self.num.eval(assignment) / den

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _gcd_univariate(a: Poly, b: Poly) -> Poly:
    """Monic gcd for polynomials in a single shared variable."""
    names = tuple(sorted(set(a.variables) | set(b.variables)))
    if len(names) != 1:
        return Poly.const(1)

    def as_coeffs(p: Poly) -> list:
        deg = p.total_degree()
        out = [ZERO] * (deg + 1)
        for e, c in p._aligned(Poly.var(names[0]))[1].items():
            out[e[0]] = c
        return out

    fa, fb = as_coeffs(a), as_coeffs(b)

    def trim(f):
        while f and f[-1] == 0:
            f.pop()
        return f

    fa, fb = trim(fa), trim(fb)
    while fb:
        # remainder of fa by fb
        fa = fa[:]
        while len(fa) >= len(fb) and trim(fa):
            q = fa[-1] / fb[-1]
            shift = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[i + shift] -= q * c
            trim(fa)
        fa, fb = fb, fa
    if not fa:
        return Poly.const(1)
    lead = fa[-1]
    return Poly((names[0],), {(i,): c / lead for i, c in enumerate(fa) if c})


def ratfn(num: Poly, den: Poly) -> Scalar:
    """Build a quotient, simplifying to Fraction or Poly where possible."""
    if not isinstance(num, Poly):
        num = Poly.const(num)
    if not isinstance(den, Poly):
        den = Poly.const(den)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO
    if den.is_constant():
        out = num / den.constant_value()
        return out.constant_value() if out.is_constant() else out
    try:
        out = num.exact_div(den)
        return out.constant_value() if out.is_constant() else out
    except InexactDivision:
        pass
    if len(set(num.variables) | set(den.variables)) == 1:
        g = _gcd_univariate(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
            if den.is_constant():
                out = num / den.constant_value()
                return out.constant_value() if out.is_constant() else out
    return RatFn(num, den)


# ---------------------------------------------------------------------------
# Scalar helpers


def as_scalar(value) -> Scalar:
    if isinstance(value, (Poly, RatFn, Fraction)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not a scalar: {value!r}")


def is_zero(s: Scalar) -> bool:
    if isinstance(s, (Poly, RatFn)):
        return s.is_zero()
    return s == 0


def scalars_equal(a: Scalar, b: Scalar) -> bool:
    return is_zero(sub(a, b))


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, Fraction) and isinstance(b, (Poly, RatFn)):
        return -b + a
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def neg(a: Scalar) -> Scalar:
    return -a


def is_rational(s: Scalar) -> bool:
    if isinstance(s, Fraction):
        return True
    if isinstance(s, Poly):
        return s.is_constant()
    return False


def to_fraction(s: Scalar) -> Fraction:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, Poly):
        return s.constant_value()
    raise ParametricUnsupported(f"{s} is not rational")


def scalar_str(s: Scalar) -> str:
    return str(s)


def poly_eval(p: Scalar, assignment: Mapping[str, Fraction]) -> Fraction:
    """Exact evaluation; raises MissingVariable on incomplete assignments."""
    if isinstance(p, Fraction):
        return p
    return p.eval(assignment)


def scalar_subs(s: Scalar, assignment: Mapping[str, Fraction]) -> Scalar:
    """Partial substitution; collapses to Fraction when fully instantiated."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, RatFn):
        return ratfn(s.num.subs(assignment), s.den.subs(assignment))
    out = s.subs(assignment)
    return out.constant_value() if out.is_constant() else out


def scalar_variables(s: Scalar) -> set:
    if isinstance(s, Fraction):
        return set()
    if isinstance(s, RatFn):
        return set(s.num.variables) | set(s.den.variables)
    return set(s.variables)


# ---------------------------------------------------------------------------
# Vectors

Vector = tuple


def vec(entries: Iterable) -> Vector:
    return tuple(as_scalar(e) for e in entries)


def zero_vec(dim: int) -> Vector:
    return (ZERO,) * dim


def basis_vec(dim: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(dim))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(add(a, b) for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(sub(a, b) for a, b in zip(x, y))


def vec_scale(c: Scalar, x: Vector) -> Vector:
    return tuple(mul(c, a) for a in x)


def vec_is_zero(x: Vector) -> bool:
    return all(is_zero(a) for a in x)


def vecs_equal(x: Vector, y: Vector) -> bool:
    return len(x) == len(y) and all(scalars_equal(a, b) for a, b in zip(x, y))


# ---------------------------------------------------------------------------
# Rational linear algebra (Gaussian elimination over Fraction)

Matrix = list


def _require_rational_matrix(m) -> list:
    out = []
    for row in m:
        new = []
        for x in row:
            x = as_scalar(x)
            if not is_rational(x):
                raise ParametricUnsupported("matrix has symbolic entries")
            new.append(to_fraction(x))
        out.append(new)
    return out


def rref(m) -> tuple:
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    a = _require_rational_matrix(m)
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return [row for row in a[:r]], pivots


def rank(m) -> int:
    return len(rref(m)[1])


def nullspace(m) -> list:
    """Echelon-normalized basis of the kernel, deterministic ordering.

    Basis vectors are indexed by free columns (ascending); each has a 1 in
    its free slot.
    """
    a = _require_rational_matrix(m)
    if not a:
        return []
    ncols = len(a[0])
    rows, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve_rational(a, b) -> list:
    """Unique solution of a x = b over Fraction; raises on singular."""
    a = _require_rational_matrix(a)
    n = len(a)
    bvec = [to_fraction(as_scalar(x)) for x in b]
    aug = [row[:] + [bvec[i]] for i, row in enumerate(a)]
    rows, pivots = rref(aug)
    ncols = len(a[0])
    if len(pivots) != ncols or any(p == ncols for p in pivots):
        raise SingularSystem("singular linear system")
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return x


def mat_mul(a, b) -> list:
    return [
        [sum((mul(a[i][k], b[k][j]) for k in range(len(b))), start=ZERO) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_vec(a, x) -> Vector:
    return tuple(
        sum((mul(a[i][k], x[k]) for k in range(len(x))), start=ZERO) for i in range(len(a))
    )


def identity_matrix(n: int) -> list:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_inverse(a) -> list:
    a = _require_rational_matrix(a)
    n = len(a)
    aug = [row[:] + identity_matrix(n)[i] for i, row in enumerate(a)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularSystem("matrix not invertible")
    return [row[n:] for row in rows]


# ---------------------------------------------------------------------------
# Fraction-free (Bareiss) elimination over polynomial entries


def det_poly(m) -> Scalar:
    """Exact determinant by fraction-free Bareiss elimination.

    Works over Fraction or Poly entries (any mix).  RatFn entries are not
    expected here; nondegeneracy tests happen before division ever occurs.
    """
    n = len(m)
    if n == 0:
        return ONE
    for row in m:
        if len(row) != n:
            raise ValueError("det of a non-square matrix")
    a = [[as_scalar(x) for x in row] for row in m]
    # cheap exits: an all-zero row or column
    for i in range(n):
        if all(is_zero(x) for x in a[i]):
            return ZERO
        if all(is_zero(a[j][i]) for j in range(n)):
            return ZERO
    sign = 1
    prev: Scalar = ONE
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if not is_zero(a[i][k])), None)
        if pivot is None:
            return ZERO
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j]))
                a[i][j] = _exact_quot(num, prev)
            a[i][k] = ZERO
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return neg(result) if sign < 0 else result


def _exact_quot(num: Scalar, den: Scalar) -> Scalar:
    if isinstance(den, Fraction):
        if isinstance(num, Fraction):
            return num / den
        return num / den
    if isinstance(num, Fraction):
        num = Poly.const(num)
    return num.exact_div(den)


def solve_poly(a, b) -> list:
    """Solve a x = b over polynomial entries via Cramer determinants.

    Returns Scalars (RatFn where division is genuinely needed).  Raises
    DegenerateOmega when det(a) = 0.
    """
    n = len(a)
    d = det_poly(a)
    if is_zero(d):
        raise SingularSystem("singular linear system")
    out = []
    for j in range(n):
        col = [[a[i][k] if k != j else b[i] for k in range(n)] for i in range(n)]
        dj = det_poly(col)
        out.append(_scalar_quot(dj, d))
    return out


def _scalar_quot(num: Scalar, den: Scalar) -> Scalar:
    if isinstance(den, Fraction):
        return mul(num, Fraction(1) / den)
    numf = num if isinstance(num, Poly) else Poly.const(num) if isinstance(num, Fraction) else None
    if numf is None:
        raise TypeError("RatFn in Cramer solve")
    return ratfn(numf, den)


def solve_linear(a, b) -> list:
    """Dispatch: Gaussian over Fraction, Cramer/Bareiss over polynomials."""
    try:
        return solve_rational(a, b)
    except ParametricUnsupported:
        return solve_poly(a, b)

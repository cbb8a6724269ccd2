"""Sparse multivariate polynomials over Q(i)."""
from __future__ import annotations

from fractions import Fraction

from ..config import limits
from ..errors import ResourceLimitError, UsageError
from .numbers import ONE, ZERO, GaussRat, gauss
from .orders import degrevlex
from .variables import VarTable


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a, b):
    return all(map(int.__le__, a, b))


def mon_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class Poly:
    """Immutable polynomial: a ``{monomial: GaussRat}`` map tied to a VarTable.

    Zero coefficients are never stored.  Arithmetic between polynomials on
    different tables raises :class:`UsageError`.
    """

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table, terms=None):
        if not isinstance(table, VarTable):
            raise TypeError("Poly needs a VarTable")
        clean = {}
        n = len(table)
        for mon, c in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != n or any(e < 0 for e in mon):
                raise UsageError(f"monomial {mon} does not fit a table of {n} variables")
            c = gauss(c)
            if c:
                clean[mon] = clean.get(mon, ZERO) + c
                if not clean[mon]:
                    del clean[mon]
        self.table = table
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, table, terms):
        obj = object.__new__(cls)
        _set = object.__setattr__
        _set(obj, "table", table)
        _set(obj, "terms", terms)
        _set(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls, table):
        return cls._raw(table, {})

    @classmethod
    def constant(cls, table, value):
        value = gauss(value)
        if not value:
            return cls._raw(table, {})
        return cls._raw(table, {(0,) * len(table): value})

    @classmethod
    def var(cls, table, name):
        i = table.index(name) if isinstance(name, str) else name
        mon = [0] * len(table)
        mon[i] = 1
        return cls._raw(table, {tuple(mon): ONE})

    @classmethod
    def gens(cls, table):
        return tuple(cls.var(table, i) for i in range(len(table)))

    # -- basic protocol ---------------------------------------------------
    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "_hash"):
            raise AttributeError("Poly is immutable")
        object.__setattr__(self, name, value)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.terms == Poly.constant(self.table, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.table is not self.table and other.table != self.table:
                raise UsageError("arithmetic between polynomials on different variable tables")
            return other
        if isinstance(other, (int, Fraction, GaussRat)):
            return Poly.constant(self.table, other)
        return None

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return Poly._raw(self.table, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(self.table, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = gauss(c)
        if not c:
            return Poly.zero(self.table)
        return Poly._raw(self.table, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return Poly.zero(self.table)
        if self.degree() + other.degree() > limits.max_degree:
            raise ResourceLimitError(
                "product exceeds the degree cap",
                degree=self.degree() + other.degree(),
                max_degree=limits.max_degree,
            )
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        out = {m: c for m, c in out.items() if c}
        if len(out) > limits.max_terms:
            raise ResourceLimitError("product exceeds the term cap", terms=len(out), max_terms=limits.max_terms)
        return Poly._raw(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError("polynomial powers need a non-negative integer exponent")
        if exponent and self.degree() * exponent > limits.max_degree:
            raise ResourceLimitError(
                "power exceeds the degree cap", degree=self.degree() * exponent, max_degree=limits.max_degree
            )
        result = Poly.constant(self.table, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # -- structure --------------------------------------------------------
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var):
        i = self._index(var)
        return max((m[i] for m in self.terms), default=-1)

    def min_degree(self):
        """Order of vanishing at the origin; -1 for zero."""
        return min((sum(m) for m in self.terms), default=-1)

    def used_indices(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return frozenset(used)

    def variables(self):
        return tuple(self.table.names[i] for i in sorted(self.used_indices()))

    def constant_term(self):
        return self.terms.get((0,) * len(self.table), ZERO)

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def coefficient(self, mon):
        return self.terms.get(tuple(mon), ZERO)

    def leading(self, order=degrevlex):
        """``(monomial, coefficient)`` of the leading term under ``order``."""
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order=degrevlex):
        return [(m, self.terms[m]) for m in order.sort_desc(self.terms)]

    def monic(self, order=degrevlex):
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(c.inverse())

    def truncate(self, max_degree):
        """Terms of total degree ``<= max_degree``."""
        return Poly._raw(self.table, {m: c for m, c in self.terms.items() if sum(m) <= max_degree})

    def _index(self, var):
        return self.table.index(var) if isinstance(var, str) else var

    # -- calculus and substitution ---------------------------------------
    def diff(self, var):
        i = self._index(var)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                out[mm] = c * e
        return Poly._raw(self.table, out)

    def compose(self, images, table=None):
        """Ring homomorphism sending variable ``k`` to ``images[k]``.

        ``images`` holds one polynomial per variable of this table (``None``
        entries are only allowed for variables that do not occur).  All
        images live on ``table``.
        """
        if len(images) != len(self.table):
            raise UsageError(f"substitution needs {len(self.table)} images, got {len(images)}")
        if table is None:
            table = next((p.table for p in images if isinstance(p, Poly)), None)
            if table is None:
                raise UsageError("cannot infer the target table of a substitution")
        used = self.used_indices()
        imgs = []
        for k, p in enumerate(images):
            if p is None:
                if k in used:
                    raise UsageError(f"no image given for variable {self.table.names[k]}")
                imgs.append(None)
                continue
            if not isinstance(p, Poly):
                p = Poly.constant(table, p)
            if p.table != table:
                raise UsageError("substitution images live on different variable tables")
            imgs.append(p)
        powers = {}

        def power(k, e):
            key = (k, e)
            if key not in powers:
                powers[key] = imgs[k] if e == 1 else power(k, e - 1) * imgs[k]
            return powers[key]

        result = Poly.zero(table)
        for m, c in self.terms.items():
            term = Poly.constant(table, c)
            for k, e in enumerate(m):
                if e:
                    term = term * power(k, e)
            result = result + term
        return result

    def subs(self, mapping):
        """Substitute ``{name_or_index: image}`` on the same table; other variables stay."""
        images = list(Poly.gens(self.table))
        for var, image in mapping.items():
            images[self._index(var)] = image if isinstance(image, Poly) else Poly.constant(self.table, image)
        return self.compose(images, self.table)

    def evaluate(self, point):
        """Value at ``point`` (one number per variable)."""
        if len(point) != len(self.table):
            raise UsageError("point has the wrong number of coordinates")
        point = [gauss(x) for x in point]
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def rename(self, table, index_map):
        """Re-embed into ``table``; ``index_map[k]`` is the new slot of variable ``k``."""
        n = len(table)
        out = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for k, e in enumerate(m):
                if e:
                    j = index_map[k]
                    if j is None:
                        raise UsageError(f"variable {self.table.names[k]} has no slot in the target table")
                    mm[j] += e
            out[tuple(mm)] = c
        return Poly._raw(table, out)

    def embed(self, table):
        """Re-embed into ``table`` matching variables by name."""
        if table == self.table:
            return self
        index_map = [table.index(name) if name in table else None for name in self.table.names]
        return self.rename(table, index_map)

    def collect(self, indices):
        """Split into ``{sub-monomial in indices: coefficient Poly}``.

        Coefficients live on the same table with the ``indices`` exponents
        zeroed out.
        """
        idx = tuple(indices)
        groups = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in idx)
            rest = list(m)
            for i in idx:
                rest[i] = 0
            groups.setdefault(key, {})[tuple(rest)] = c
        return {k: Poly._raw(self.table, v) for k, v in groups.items()}

    def conj(self):
        """Conjugate every coefficient and swap each variable with its partner."""
        return conj_involution(self)

    # -- rendering --------------------------------------------------------
    def to_str(self, order=degrevlex):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(order):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.table.names, m) if e
            )
            sign, coeff = _coeff_text(c)
            if not mono:
                body = coeff or "1"
            elif coeff:
                body = f"{coeff}*{mono}"
            else:
                body = mono
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!s})"


def _coeff_text(c):
    """Sign and grammar-compatible magnitude text; magnitude '' means 1."""
    if c.is_real():
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        return sign, "" if mag == 1 else str(mag)
    if not c.re:
        sign = "-" if c.im < 0 else "+"
        mag = abs(c.im)
        return sign, "i" if mag == 1 else f"{mag}*i"
    imag_sign = "-" if c.im < 0 else "+"
    imag = "i" if abs(c.im) == 1 else f"{abs(c.im)}*i"
    return "+", f"({c.re} {imag_sign} {imag})"


def conj_involution(p):
    """Reality involution: conjugate coefficients, swap Z_k <-> zeta_k."""
    table = p.table
    if not table.has_complete_pairing():
        raise UsageError("conjugation needs a table with a complete Z/zeta pairing")
    aux = table.aux_indices
    out = {}
    for m, c in p.terms.items():
        if any(m[i] for i in aux):
            raise UsageError("conjugation is undefined on auxiliary variables")
        mm = [0] * len(m)
        for k, e in enumerate(m):
            if e:
                mm[table.pairing[k]] = e
        out[tuple(mm)] = c.conjugate()
    return Poly._raw(table, out)


def det(matrix):
    """Determinant of a square matrix of polynomials (Laplace expansion)."""
    n = len(matrix)
    if n == 0:
        raise UsageError("determinant of an empty matrix")
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Poly.zero(matrix[0][0].table)
    return total


def adjugate(matrix):
    """Classical adjoint, so that ``matrix @ adj == det(matrix) * Id``."""
    n = len(matrix)
    table = matrix[0][0].table
    if n == 1:
        return [[Poly.constant(table, 1)]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(matrix) if k != i]
            cof = det(minor)
            adj[j][i] = -cof if (i + j) % 2 else cof
    return adj


"""Exact truncated power series in a main variable ``z``.

Each z-coefficient is a sparse polynomial in auxiliary variables, stored as a
dict from monomials to rationals.  A monomial is a sorted tuple of
``(variable, exponent)`` pairs with no zero exponents; ``()`` is the unit
monomial.  Coefficients are ``int`` whenever integral and ``Fraction``
otherwise, so the common integer case stays fast.

Negative exponents are only allowed for variables listed in ``laurent``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

Monomial = tuple
Coeff = dict
Scalar = Union[int, Fraction]

ONE: Monomial = ()

_SUPERSCRIPT = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


class SeriesError(ValueError):
    pass


def _norm(q):
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


def _as_scalar(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def monomial(exponents: Mapping[str, int] | None = None, **kw: int) -> Monomial:
    d = dict(exponents or {})
    d.update(kw)
    return tuple(sorted((v, e) for v, e in d.items() if e != 0))


@lru_cache(maxsize=1 << 16)
def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e != 0))


def mono_degree(m: Monomial, var: str) -> int:
    for v, e in m:
        if v == var:
            return e
    return 0


def mono_drop(m: Monomial, var: str) -> Monomial:
    return tuple((v, e) for v, e in m if v != var)


def _cadd(a: Coeff, b: Coeff, scale: Scalar = 1) -> Coeff:
    out = dict(a)
    for m, c in b.items():
        r = out.get(m, 0) + scale * c
        if r:
            out[m] = _norm(r)
        else:
            out.pop(m, None)
    return out


def _cmul(a: Coeff, b: Coeff) -> Coeff:
    if not a or not b:
        return {}
    if len(a) == 1 and ONE in a:
        c = a[ONE]
        return {m: _norm(c * x) for m, x in b.items()}
    if len(b) == 1 and ONE in b:
        c = b[ONE]
        return {m: _norm(c * x) for m, x in a.items()}
    out: Coeff = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = mono_mul(ma, mb)
            out[m] = get(m, 0) + ca * cb
    return {m: _norm(c) for m, c in out.items() if c}


def _cmul_into(acc: Coeff, a: Coeff, b: Coeff, sign: int = 1) -> None:
    """acc += sign * a * b, leaving zeros and unnormalised values in place."""
    get = acc.get
    if len(a) == 1 and ONE in a:
        c = sign * a[ONE]
        for m, x in b.items():
            acc[m] = get(m, 0) + c * x
        return
    for ma, ca in a.items():
        ca = sign * ca
        for mb, cb in b.items():
            m = mono_mul(ma, mb)
            acc[m] = get(m, 0) + ca * cb


def _clean(c: Coeff) -> Coeff:
    return {m: _norm(x) for m, x in c.items() if x}


def _is_scalar(c: Coeff) -> bool:
    return not c or (len(c) == 1 and ONE in c)


class TruncatedSeries:
    """A power series in ``z`` known exactly for ``z^0 .. z^order``.

    Values are treated as immutable.  Binary operations truncate to the
    smaller of the two orders.
    """

    __slots__ = ("order", "coeffs", "laurent")

    def __init__(self, coeffs: Sequence[Mapping[Monomial, Scalar]], order: int,
                 laurent: Iterable[str] = ()):
        if order < 0:
            raise SeriesError("order must be >= 0")
        self.order = order
        self.laurent = frozenset(laurent)
        cs = []
        for k in range(order + 1):
            c = coeffs[k] if k < len(coeffs) else {}
            cs.append({m: _as_scalar(x) for m, x in c.items() if x})
        self.coeffs = cs

    @classmethod
    def _raw(cls, coeffs: list, order: int, laurent: frozenset) -> "TruncatedSeries":
        s = cls.__new__(cls)
        s.order = order
        s.coeffs = coeffs
        s.laurent = laurent
        return s

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([{ONE: c}], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def z(cls, order: int, power: int = 1) -> "TruncatedSeries":
        cs = [{} for _ in range(order + 1)]
        if power <= order:
            cs[power] = {ONE: 1}
        return cls(cs, order)

    @classmethod
    def var(cls, name: str, order: int, exp: int = 1, zdeg: int = 0,
            laurent: bool = False) -> "TruncatedSeries":
        cs = [{} for _ in range(order + 1)]
        if zdeg <= order:
            cs[zdeg] = {monomial({name: exp}): 1}
        return cls(cs, order, [name] if laurent or exp < 0 else [])

    @classmethod
    def from_univariate(cls, values: Sequence, order: int | None = None) -> "TruncatedSeries":
        if order is None:
            order = len(values) - 1
        return cls([{ONE: v} for v in values[: order + 1]], order)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, Monomial], Scalar], order: int,
                   laurent: Iterable[str] = ()) -> "TruncatedSeries":
        cs: list[dict] = [{} for _ in range(order + 1)]
        for (k, m), c in terms.items():
            if k <= order and c:
                cs[k][m] = cs[k].get(m, 0) + c
        return cls(cs, order, laurent)

    # -- inspection -----------------------------------------------------

    def __getitem__(self, k: int) -> dict:
        return dict(self.coeffs[k])

    def coefficient(self, k: int, mono: Monomial | Mapping[str, int] = ONE) -> Scalar:
        if not isinstance(mono, tuple):
            mono = monomial(mono)
        return self.coeffs[k].get(mono, 0)

    def terms(self) -> Iterator[tuple[int, Monomial, Scalar]]:
        for k, c in enumerate(self.coeffs):
            for m in sorted(c):
                yield k, m, c[m]

    def variables(self) -> set[str]:
        return {v for c in self.coeffs for m in c for v, _ in m}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def univariate(self) -> list[Scalar]:
        """Coefficient list; every coefficient must be a pure scalar."""
        out = []
        for k, c in enumerate(self.coeffs):
            if not _is_scalar(c):
                raise SeriesError(f"z^{k} coefficient is not scalar")
            out.append(c.get(ONE, 0))
        return out

    def polynomial_in(self, k: int, var: str) -> dict[int, Scalar]:
        """z^k coefficient as {exponent of var: scalar}; other variables must be absent."""
        out: dict[int, Scalar] = {}
        for m, c in self.coeffs[k].items():
            rest = mono_drop(m, var)
            if rest:
                raise SeriesError(f"unexpected variables {rest} at z^{k}")
            e = mono_degree(m, var)
            out[e] = out.get(e, 0) + c
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    def first_difference(self, other: "TruncatedSeries") -> tuple[int, Monomial] | None:
        n = min(self.order, other.order)
        for k in range(n + 1):
            a, b = self.coeffs[k], other.coeffs[k]
            if a != b:
                for m in sorted(set(a) | set(b)):
                    if a.get(m, 0) != b.get(m, 0):
                        return k, m
        return None

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.pretty()}, order={self.order})"

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(_as_scalar(other), self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError("cannot raise the truncation order")
        return TruncatedSeries._raw(self.coeffs[: order + 1], order, self.laurent)

    def padded(self, order: int) -> "TruncatedSeries":
        """Same known coefficients, with unknown higher ones taken as zero."""
        extra = [{} for _ in range(order - self.order)]
        return TruncatedSeries._raw(self.coeffs[: order + 1] + extra, order, self.laurent)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        cs = [_cadd(self.coeffs[k], other.coeffs[k]) for k in range(n + 1)]
        return TruncatedSeries._raw(cs, n, self.laurent | other.laurent)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        cs = [{m: -c for m, c in co.items()} for co in self.coeffs]
        return TruncatedSeries._raw(cs, self.order, self.laurent)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) + (-self)

    def scale(self, c) -> "TruncatedSeries":
        c = _as_scalar(c)
        if c == 0:
            return TruncatedSeries.zero(self.order)
        cs = [{m: _norm(c * x) for m, x in co.items()} for co in self.coeffs]
        return TruncatedSeries._raw(cs, self.order, self.laurent)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        na = [k for k in range(n + 1) if a[k]]
        nb = [k for k in range(n + 1) if b[k]]
        acc: list[dict] = [{} for _ in range(n + 1)]
        for i in na:
            for j in nb:
                if i + j > n:
                    break
                _cmul_into(acc[i + j], a[i], b[j])
        return TruncatedSeries._raw([_clean(c) for c in acc], n, self.laurent | other.laurent)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.reciprocal() ** (-e)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        c = _as_scalar(other)
        if c == 0:
            raise ZeroDivisionError("division of a series by zero")
        return self.scale(Fraction(1) / c)

    def __rtruediv__(self, other) -> "TruncatedSeries":
        return self._coerce(other) * self.reciprocal()

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        if not _is_scalar(a[0]) or not a[0]:
            raise SeriesError("reciprocal needs a nonzero scalar constant term")
        inv0 = Fraction(1) / a[0][ONE]
        n = self.order
        nz = [j for j in range(1, n + 1) if a[j]]
        q: list[dict] = [{ONE: _norm(inv0)}]
        for k in range(1, n + 1):
            acc: dict = {}
            for j in nz:
                if j > k:
                    break
                if q[k - j]:
                    _cmul_into(acc, a[j], q[k - j], -1)
            q.append({m: _norm(c * inv0) for m, c in acc.items() if c})
        return TruncatedSeries._raw(q, n, self.laurent)

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1; the input's constant term must be 1."""
        a = self.coeffs
        if a[0] != {ONE: 1}:
            raise SeriesError("sqrt needs constant term exactly 1")
        n = self.order
        r: list[dict] = [{ONE: 1}]
        half = Fraction(1, 2)
        for k in range(1, n + 1):
            acc = dict(a[k])
            for i in range(1, (k + 1) // 2):
                if r[i] and r[k - i]:
                    _cmul_into(acc, r[i], r[k - i], -2)
            if k % 2 == 0 and r[k // 2]:
                _cmul_into(acc, r[k // 2], r[k // 2], -1)
            r.append({m: _norm(c * half) for m, c in acc.items() if c})
        return TruncatedSeries._raw(r, n, self.laurent)

    # -- substitutions --------------------------------------------------

    def substitute_z(self, power: int = 1, scale=1, order: int | None = None) -> "TruncatedSeries":
        """Return the series with ``z`` replaced by ``scale * z**power``."""
        if power < 1:
            raise SeriesError("substitution power must be >= 1")
        scale = _as_scalar(scale)
        if order is None:
            order = self.order * power + power - 1
        order = min(order, self.order * power + power - 1)
        cs: list[dict] = [{} for _ in range(order + 1)]
        f = 1
        for k, c in enumerate(self.coeffs):
            if k * power > order:
                break
            if c:
                cs[k * power] = {m: _norm(f * x) for m, x in c.items()} if f != 1 else dict(c)
            f *= scale
        return TruncatedSeries._raw(cs, order, self.laurent)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``z**k`` (k may be negative if low coefficients vanish)."""
        if k >= 0:
            cs = [{} for _ in range(k)] + self.coeffs
            return TruncatedSeries._raw(cs[: self.order + 1], self.order, self.laurent)
        k = -k
        if any(self.coeffs[:k]):
            raise SeriesError(f"cannot divide by z^{k}: low coefficients are nonzero")
        if k > self.order:
            raise SeriesError("shift exceeds truncation order")
        return TruncatedSeries._raw(self.coeffs[k:], self.order - k, self.laurent)

    def specialize(self, var: str, value) -> "TruncatedSeries":
        """Set an auxiliary variable to a rational value (0 keeps only the var-free part)."""
        value = _as_scalar(value)
        cs = []
        for co in self.coeffs:
            out: dict = {}
            for m, c in co.items():
                e = mono_degree(m, var)
                if e == 0:
                    w = c
                elif value == 0:
                    if e < 0:
                        raise SeriesError(f"cannot set Laurent variable {var} to 0")
                    continue
                else:
                    w = c * Fraction(value) ** e
                rest = mono_drop(m, var)
                out[rest] = out.get(rest, 0) + w
            cs.append(_clean(out))
        return TruncatedSeries._raw(cs, self.order, self.laurent - {var})

    def map_monomials(self, fn: Callable[[Monomial], Monomial]) -> "TruncatedSeries":
        cs = []
        for co in self.coeffs:
            out: dict = {}
            for m, c in co.items():
                m2 = fn(m)
                out[m2] = out.get(m2, 0) + c
            cs.append(_clean(out))
        return TruncatedSeries._raw(cs, self.order, self.laurent)

    def rename(self, old: str, new: str) -> "TruncatedSeries":
        def fn(m):
            return monomial({(new if v == old else v): e for v, e in m})
        out = self.map_monomials(fn)
        lau = {new if v == old else v for v in self.laurent}
        return TruncatedSeries._raw(out.coeffs, out.order, frozenset(lau))

    def truncate_var(self, var: str, max_exp: int) -> "TruncatedSeries":
        cs = [{m: c for m, c in co.items() if mono_degree(m, var) <= max_exp} for co in self.coeffs]
        return TruncatedSeries._raw(cs, self.order, self.laurent)

    def z_to_var(self, var: str, order: int | None = None) -> "TruncatedSeries":
        """Turn the z-grading into powers of an auxiliary variable, placed at z^0."""
        acc: dict = {}
        for k, co in enumerate(self.coeffs):
            for m, c in co.items():
                mm = mono_mul(m, ((var, k),)) if k else m
                acc[mm] = acc.get(mm, 0) + c
        return TruncatedSeries._raw([_clean(acc)] + [{} for _ in range(order or 0)],
                                    order or 0, self.laurent)

    def hadamard(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficientwise product in z of two series with scalar coefficients."""
        a, b = self.univariate(), other.univariate()
        n = min(self.order, other.order)
        return TruncatedSeries.from_univariate([a[k] * b[k] for k in range(n + 1)], n)

    def check_laurent(self) -> None:
        for co in self.coeffs:
            for m in co:
                for v, e in m:
                    if e < 0 and v not in self.laurent:
                        raise SeriesError(f"negative exponent for non-Laurent variable {v}")

    # -- formatting and serialisation -----------------------------------

    def pretty(self, zname: str = "z") -> str:
        parts = []
        for k, co in enumerate(self.coeffs):
            if not co:
                continue
            zpart = "" if k == 0 else (zname if k == 1 else zname + str(k).translate(_SUPERSCRIPT))
            items = sorted(co.items(), key=lambda t: _mono_sort_key(t[0]))
            if len(items) == 1:
                m, c = items[0]
                body = _format_term(c, m, bare_one=bool(zpart))
                if body.startswith("-") and parts:
                    parts.append(("-", body[1:] + zpart))
                else:
                    parts.append(("+", body + zpart))
            else:
                inner = ""
                for i, (m, c) in enumerate(items):
                    t = _format_term(c, m, bare_one=False)
                    if i and not t.startswith("-"):
                        inner += "+"
                    inner += t
                parts.append(("+", f"({inner}){zpart}"))
        if not parts:
            return "0"
        s = parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json_obj(self) -> dict:
        terms = []
        for k, co in enumerate(self.coeffs):
            for m in sorted(co):
                c = Fraction(co[m])
                terms.append({"zdeg": k, "monomial": {v: e for v, e in m},
                              "num": c.numerator, "den": c.denominator})
        obj = {"order": self.order, "terms": terms}
        if self.laurent:
            obj["laurent"] = sorted(self.laurent)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "TruncatedSeries":
        terms = {}
        for t in obj["terms"]:
            m = monomial(t["monomial"])
            terms[(t["zdeg"], m)] = _norm(Fraction(t["num"], t["den"]))
        s = cls.from_terms(terms, obj["order"], obj.get("laurent", ()))
        s.check_laurent()
        return s

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls.from_json_obj(json.loads(text))


def _mono_sort_key(m: Monomial):
    return (sum(abs(e) for _, e in m), m)


def _format_term(c: Scalar, m: Monomial, bare_one: bool) -> str:
    mono = "".join(v if e == 1 else v + str(e).translate(_SUPERSCRIPT) for v, e in m)
    if not mono:
        if c == 1 and bare_one:
            return ""
        if c == -1 and bare_one:
            return "-"
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    cs = str(c)
    if isinstance(c, Fraction):
        cs = f"({cs})"
    return cs + mono


def diagonal(a: TruncatedSeries, other: str = "w") -> TruncatedSeries:
    """Diagonal of a bivariate series in ``z`` and the auxiliary variable ``other``.

    Keeps the coefficients of ``z^n other^n``; remaining auxiliary variables
    are carried along.
    """
    cs = []
    for k, co in enumerate(a.coeffs):
        out: dict = {}
        for m, c in co.items():
            if mono_degree(m, other) == k:
                rest = mono_drop(m, other)
                out[rest] = out.get(rest, 0) + c
        cs.append(_clean(out))
    return TruncatedSeries._raw(cs, a.order, a.laurent - {other})

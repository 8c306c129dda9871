"""Exact two-variable integer Laurent arithmetic for skein calculations.

Polynomials live in Z[v, v^-1, z, z^-1] and are stored as a map from
exponent pairs (e_v, e_z) to nonzero integer coefficients; the zero
polynomial is the empty map.  Coefficients are plain Python ints, so
intermediate skein sums never overflow silently.

The one-variable type holds Alexander polynomials in t^(1/2): exponents
are stored doubled (the key e stands for t^(e/2)) so arithmetic stays in
integers.
"""

from __future__ import annotations

import json
from math import comb

from .errors import NegativeZDegreeError, ParseError

__all__ = [
    "LaurentPoly2",
    "LaurentPoly1",
    "poly_add",
    "poly_mul",
    "maxdeg_z",
    "mirror_substitute",
    "alexander_specialize",
    "delta_factor",
]


class LaurentPoly2:
    """Immutable Laurent polynomial in v and z with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (ev, ez), c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    k = (ev, ez)
                    nc = t.get(k, 0) + c
                    if nc:
                        t[k] = nc
                    elif k in t:
                        del t[k]
        self._terms = t
        self._hash = None

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff, ev=0, ez=0):
        return cls({(ev, ez): coeff})

    # -- basic protocol ----------------------------------------------

    @property
    def terms(self):
        """Term map copy; keys (e_v, e_z), values nonzero ints."""
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return f"LaurentPoly2({self.pretty()!r})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            elif k in out:
                del out[k]
        p = LaurentPoly2.__new__(LaurentPoly2)
        p._terms = out
        p._hash = None
        return p

    def __neg__(self):
        p = LaurentPoly2.__new__(LaurentPoly2)
        p._terms = {k: -c for k, c in self._terms.items()}
        p._hash = None
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (ev1, ez1), c1 in self._terms.items():
            for (ev2, ez2), c2 in other._terms.items():
                k = (ev1 + ev2, ez1 + ez2)
                nc = out.get(k, 0) + c1 * c2
                if nc:
                    out[k] = nc
                elif k in out:
                    del out[k]
        p = LaurentPoly2.__new__(LaurentPoly2)
        p._terms = out
        p._hash = None
        return p

    def mono_mul(self, coeff, ev=0, ez=0):
        """Fast multiply by a single term coeff * v^ev * z^ez."""
        if coeff == 0:
            return LaurentPoly2.zero()
        p = LaurentPoly2.__new__(LaurentPoly2)
        p._terms = {(a + ev, b + ez): c * coeff for (a, b), c in self._terms.items()}
        p._hash = None
        return p

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial is not defined here")
        acc = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- degrees and substitutions -------------------------------------

    def maxdeg_z(self):
        """Largest z-exponent, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(ez for (_, ez) in self._terms)

    def mindeg_z(self):
        if not self._terms:
            return None
        return min(ez for (_, ez) in self._terms)

    def mirror(self):
        """Substitute v -> v^-1 (an involution; z-degrees untouched)."""
        p = LaurentPoly2.__new__(LaurentPoly2)
        p._terms = {(-ev, ez): c for (ev, ez), c in self._terms.items()}
        p._hash = None
        return p

    def z_exponents(self):
        return sorted({ez for (_, ez) in self._terms})

    # -- serialization -------------------------------------------------

    def to_json_obj(self):
        """Array of term records ordered by (e_z desc, e_v desc)."""
        keys = sorted(self._terms, key=lambda k: (-k[1], -k[0]))
        return [{"ev": ev, "ez": ez, "c": str(self._terms[(ev, ez)])} for ev, ez in keys]

    def to_json(self):
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj):
        try:
            return cls([((int(t["ev"]), int(t["ez"])), int(t["c"])) for t in obj])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad polynomial record: {exc}") from exc

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad polynomial JSON: {exc}") from exc
        return cls.from_json_obj(obj)

    def pretty(self):
        """Human form grouped by z-degree, e.g. "(v^2+6v^-2)z^6 + ...". """
        if not self._terms:
            return "0"
        by_z = {}
        for (ev, ez), c in self._terms.items():
            by_z.setdefault(ez, {})[ev] = c
        chunks = []
        for ez in sorted(by_z, reverse=True):
            vpoly = by_z[ez]
            parts = []
            for ev in sorted(vpoly, reverse=True):
                c = vpoly[ev]
                sign = "-" if c < 0 else ("+" if parts else "")
                mag = abs(c)
                if ev == 0:
                    body = str(mag)
                else:
                    vs = "v" if ev == 1 else f"v^{ev}"
                    body = vs if mag == 1 else f"{mag}{vs}"
                parts.append(f"{sign}{body}")
            vtxt = "".join(parts)
            if ez == 0:
                chunks.append(vtxt if len(parts) == 1 else f"({vtxt})")
            else:
                zs = "z" if ez == 1 else f"z^{ez}"
                if len(parts) == 1 and not vtxt.startswith("-"):
                    chunks.append(f"{vtxt}{zs}" if vtxt != "1" else zs)
                else:
                    chunks.append(f"({vtxt}){zs}")
        return " + ".join(chunks)


class LaurentPoly1:
    """Integer Laurent polynomial in t^(1/2); key e means t^(e/2)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    nc = t.get(e, 0) + c
                    if nc:
                        t[e] = nc
                    elif e in t:
                        del t[e]
        self._terms = t

    @property
    def terms(self):
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other._terms.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
        return LaurentPoly1(out)

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._terms.items()})

    def __repr__(self):
        return f"LaurentPoly1({self.pretty()!r})"

    def evaluate_at_one(self):
        """Value at t = 1 (every t^(e/2) becomes 1)."""
        return sum(self._terms.values())

    def invert_variable(self):
        """Substitute t -> t^-1."""
        return LaurentPoly1({-e: c for e, c in self._terms.items()})

    def half_degree_span(self):
        """(min e, max e) over stored doubled exponents; None if zero."""
        if not self._terms:
            return None
        return (min(self._terms), max(self._terms))

    def degree_t(self):
        """Degree in t of the symmetric normal form: exponent breadth / 4.

        Alexander polynomials of knots are symmetric up to a unit, so the
        breadth is the invariant quantity; for them it is divisible by 4.
        """
        span = self.half_degree_span()
        if span is None:
            return None
        breadth = span[1] - span[0]
        if breadth % 4:
            raise ValueError(f"breadth {breadth} not divisible by 4; not a knot polynomial")
        return breadth // 4

    def symmetric_up_to_unit(self):
        """True if p(t^-1) = ±t^(k/2) * p(t) for some integer k."""
        if not self._terms:
            return True
        flipped = self.invert_variable()
        span_a = self.half_degree_span()
        span_b = flipped.half_degree_span()
        shift = span_a[1] - span_b[1]
        shifted = {e + shift: c for e, c in flipped._terms.items()}
        if shifted == self._terms:
            return True
        return {e: -c for e, c in shifted.items()} == self._terms

    def pretty(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if e % 2:
                    ts = f"t^({e}/2)"
                elif e == 2:
                    ts = "t"
                else:
                    ts = f"t^{e // 2}"
                body = ts if mag == 1 else f"{mag}{ts}"
            parts.append(f"{sign}{body}")
        return "".join(parts)


# -- module-level operation surface -----------------------------------


def poly_add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def poly_mul(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p * q


def maxdeg_z(p: LaurentPoly2):
    return p.maxdeg_z()


def mirror_substitute(p: LaurentPoly2) -> LaurentPoly2:
    return p.mirror()


def delta_factor() -> LaurentPoly2:
    """The split-union / unlink factor (v^-1 - v) z^-1."""
    return LaurentPoly2({(-1, -1): 1, (1, -1): -1})


def alexander_specialize(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute v = 1 and z = t^(1/2) - t^(-1/2).

    Rejects negative z-exponents: z^-1 has no Laurent expansion in t^(1/2),
    and a HOMFLY with z^-1 terms belongs to a link, not a knot.
    """
    out = {}
    for (_, ez), c in p._terms.items():
        if ez < 0:
            raise NegativeZDegreeError(
                f"z-exponent {ez} < 0: not a knot polynomial, cannot specialize"
            )
        # (s - s^-1)^b expands to sum_k (-1)^k C(b,k) s^(b-2k), s = t^(1/2)
        for k in range(ez + 1):
            e = ez - 2 * k
            coeff = c * ((-1) ** k) * comb(ez, k)
            nc = out.get(e, 0) + coeff
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
    return LaurentPoly1(out)

"""Exact multivariate polynomial arithmetic over the rationals.

Everything downstream (Groebner bases, ring presentations, cohomology
bookkeeping) is built on the immutable :class:`Polynomial` defined here.
Coefficients are `fractions.Fraction` throughout, so arithmetic is exact;
no floating point is ever involved.  Monomials are bare exponent tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Exponents = tuple  # exponent vector, one entry per ring variable


# ---------------------------------------------------------------------------
# monomial helpers


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents):
    """Return a/b as an exponent tuple, or None if b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_divides(b: Exponents, a: Exponents) -> bool:
    """True if the monomial with exponents b divides the one with exponents a."""
    return all(y <= x for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Exponents) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# term orders


class TermOrder:
    """A monomial order, realized as a key function on exponent tuples.

    Larger key means larger monomial.  Orders compare equal by name, so two
    rings with the same variables and order names are interchangeable.
    """

    name = "abstract"

    def key(self, exps: Exponents):
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class _Grevlex(TermOrder):
    name = "grevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))


class _Grlex(TermOrder):
    name = "grlex"

    def key(self, exps):
        return (sum(exps), exps)


GREVLEX = _Grevlex()
GRLEX = _Grlex()


class BlockOrder(TermOrder):
    """Elimination order: grevlex on a leading block of variables, then
    grevlex on the rest.  Any monomial involving a block variable beats any
    monomial free of them, which is what elimination needs."""

    def __init__(self, elim_indices: Iterable[int]):
        self.elim = tuple(sorted(set(elim_indices)))
        self._elimset = frozenset(self.elim)
        self.name = "block(%s)" % ",".join(map(str, self.elim))

    def key(self, exps):
        first = tuple(exps[i] for i in self.elim)
        rest = tuple(e for i, e in enumerate(exps) if i not in self._elimset)
        return (GREVLEX.key(first), GREVLEX.key(rest))


# ---------------------------------------------------------------------------
# rings and polynomials


class RingMismatch(ValueError):
    pass


class Ring:
    """A polynomial ring over Q: a variable list plus an active term order."""

    __slots__ = ("names", "order", "_index")

    def __init__(self, names, order: TermOrder = GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names: %r" % (names,))
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *a):  # immutable
        raise AttributeError("Ring is immutable")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def var(self, which) -> "Polynomial":
        i = which if isinstance(which, int) else self.index(which)
        exps = tuple(1 if j == i else 0 for j in range(self.ngens))
        return self.monomial(exps)

    @property
    def gens(self):
        return tuple(self.var(i) for i in range(self.ngens))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self.zero
        return Polynomial(self, (((0,) * self.ngens, c),))

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return self.poly({tuple(exps): Fraction(coeff)})

    def poly(self, data) -> "Polynomial":
        """Build a polynomial from a dict or iterable of (exponents, coeff)."""
        items = data.items() if isinstance(data, Mapping) else data
        acc = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != self.ngens:
                raise ValueError("exponent tuple of wrong length: %r" % (exps,))
            c = Fraction(c)
            if c:
                acc[exps] = acc.get(exps, Fraction(0)) + c
        key = self.order.key
        terms = tuple(
            (e, acc[e]) for e in sorted(acc, key=key, reverse=True) if acc[e]
        )
        return Polynomial(self, terms)

    def with_order(self, order: TermOrder) -> "Ring":
        return Ring(self.names, order)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return "Ring(%s; %s)" % (",".join(self.names), self.order.name)


def _coerce(ring: Ring, value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return ring.const(value)
    return NotImplemented


class Polynomial:
    """Immutable multivariate polynomial with exact rational coefficients.

    Terms are stored sorted strictly descending in the ring's term order,
    with no zero coefficients and no duplicate monomials.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lead_monomial(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lead_coeff(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    @property
    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(e) for e, _ in self.terms)

    def coeff(self, exps) -> Fraction:
        exps = tuple(exps)
        for e, c in self.terms:
            if e == exps:
                return c
        return Fraction(0)

    @property
    def constant_coeff(self) -> Fraction:
        return self.coeff((0,) * self.ring.ngens)

    def as_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic ---------------------------------------------------

    def _require_same_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(
                "polynomials live in different rings: %r vs %r"
                % (self.ring, other.ring)
            )

    def __add__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return NotImplemented
        self._require_same_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return self.ring.poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = _coerce(self.ring, other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, tuple((e, k * c) for e, k in self.terms))
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = monomial_mul(e1, e2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return self.ring.poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.lead_coeff
        if lc == 1:
            return self
        return Polynomial(self.ring, tuple((e, c / lc) for e, c in self.terms))

    # -- structure ----------------------------------------------------

    def degree_part(self, d: int) -> "Polynomial":
        """The homogeneous component of total degree d."""
        return Polynomial(
            self.ring, tuple((e, c) for e, c in self.terms if monomial_degree(e) == d)
        )

    def linear_coefficients(self) -> dict:
        """Map variable name -> coefficient of its degree-one term."""
        out = {}
        for e, c in self.terms:
            if monomial_degree(e) == 1:
                out[self.ring.names[e.index(1)]] = c
        return out

    def weighted_degrees(self, weights: Mapping[str, int]):
        """Set of weighted degrees occurring among the terms."""
        w = [weights[n] for n in self.ring.names]
        return {sum(wi * ei for wi, ei in zip(w, e)) for e, _ in self.terms}

    def is_weighted_homogeneous(self, weights: Mapping[str, int]) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def derivative(self, var) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var)
        acc = {}
        for e, c in self.terms:
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
                acc[e2] = acc.get(e2, Fraction(0)) + c * e[i]
        return self.ring.poly(acc)

    def substitute(self, target: Ring, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring homomorphism: send each variable to its image in `target`.

        Variables without an explicit image map to the same-named variable
        of the target ring (which must exist).
        """
        table = []
        for name in self.ring.names:
            if name in images:
                img = images[name]
                if isinstance(img, (int, Fraction)):
                    img = target.const(img)
                if img.ring != target:
                    raise RingMismatch("image of %s not in target ring" % name)
                table.append(img)
            else:
                table.append(target.var(name))
        out = target.zero
        for e, c in self.terms:
            term = target.const(c)
            for img, exp in zip(table, e):
                if exp:
                    term = term * img**exp
            out = out + term
        return out

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        point = [Fraction(values[n]) for n in self.ring.names]
        total = Fraction(0)
        for e, c in self.terms:
            v = c
            for p, exp in zip(point, e):
                if exp:
                    v *= p**exp
            total += v
        return total

    def with_order(self, order: TermOrder) -> "Polynomial":
        ring = self.ring.with_order(order)
        return ring.poly(dict(self.terms))

    # -- display ------------------------------------------------------

    def __repr__(self):
        return self.pretty()

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.terms:
            factors = [
                n if k == 1 else "%s^%d" % (n, k)
                for n, k in zip(self.ring.names, e)
                if k
            ]
            if not factors:
                body = str(abs(c))
            else:
                mag = abs(c)
                body = "*".join(([str(mag)] if mag != 1 else []) + factors)
            chunks.append(("- " if c < 0 else "+ ") + body)
        first = chunks[0]
        first = ("-" + first[2:]) if first.startswith("- ") else first[2:]
        return " ".join([first] + chunks[1:])


# ---------------------------------------------------------------------------
# canonical text form (the interchange format for --dump and golden files)
#
# One polynomial per line; every term as  num/den*x1^e1*...*xn^en  with all
# variables present; terms joined by " + " in the ring's term order.


def dump_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for e, c in p.terms:
        factors = "*".join(
            "%s^%d" % (name, k) for name, k in zip(p.ring.names, e)
        )
        head = "%d/%d" % (c.numerator, c.denominator)
        pieces.append(head + ("*" + factors if factors else ""))
    return " + ".join(pieces)


def load_polynomial(ring: Ring, text: str) -> Polynomial:
    text = text.strip()
    if text == "0":
        return ring.zero
    acc = {}
    for chunk in text.split(" + "):
        parts = chunk.split("*")
        num, den = parts[0].split("/")
        c = Fraction(int(num), int(den))
        exps = [0] * ring.ngens
        for piece in parts[1:]:
            name, k = piece.split("^")
            exps[ring.index(name)] = int(k)
        exps = tuple(exps)
        acc[exps] = acc.get(exps, Fraction(0)) + c
    return ring.poly(acc)


def dump_generators(polys, header: str = "") -> str:
    lines = []
    if header:
        lines.append("# " + header)
    lines.extend(dump_polynomial(p) for p in polys)
    return "\n".join(lines) + "\n"


def load_generators(ring: Ring, text: str):
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(load_polynomial(ring, line))
    return out

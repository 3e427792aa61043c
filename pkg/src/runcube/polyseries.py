"""Exact multivariate polynomials and truncated power series in t.

Polynomials live over a small registry of named variables (a Ring) and keep
integer coefficients in a dict keyed by exponent vectors, so no precision is
ever lost.  Truncated series are lists of such polynomials indexed by the
power of the formal variable t; all series arithmetic is exact up to the
truncation order.  RationalFunction expands a rational generating function
whose denominator has constant term 1 via the usual division recurrence.
"""

from .errors import DomainError, RegistryError, SeriesError


class Ring:
    """Ordered registry of variable names shared by compatible polynomials."""

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise RegistryError("duplicate variable names: %r" % (names,))
        self.names = names
        self.arity = len(names)
        self._index = {name: i for i, name in enumerate(names)}

    def index_of(self, name):
        if name not in self._index:
            raise RegistryError("unknown variable %r (registry %r)" % (name, self.names))
        return self._index[name]

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = int(c)
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.arity: c})

    def var(self, name, power=1):
        exps = [0] * self.arity
        exps[self.index_of(name)] = int(power)
        return MultiPoly(self, {tuple(exps): 1})

    def monomial(self, coeff, **powers):
        exps = [0] * self.arity
        for name, p in powers.items():
            exps[self.index_of(name)] = int(p)
        coeff = int(coeff)
        if coeff == 0:
            return self.zero()
        return MultiPoly(self, {tuple(exps): coeff})

    def poly(self, terms):
        """Build a polynomial from {exponent tuple: coefficient}."""
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.arity:
                raise RegistryError("exponent vector %r has wrong arity" % (exps,))
            c = int(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        return MultiPoly(self, {e: c for e, c in clean.items() if c})

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "Ring(%s)" % ", ".join(self.names)


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise RegistryError(
            "mixed registries %r and %r" % (a.ring.names, b.ring.names)
        )


def _mul_terms(aterms, bterms):
    """Convolve two term dicts, returning a fresh dict."""
    out = {}
    for ea, ca in aterms.items():
        for eb, cb in bterms.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def _add_into(dst, terms, scale=1):
    """dst += scale * terms, in place on a raw term dict."""
    for e, c in terms.items():
        c = dst.get(e, 0) + scale * c
        if c:
            dst[e] = c
        elif e in dst:
            del dst[e]


class MultiPoly:
    """Immutable exact polynomial with integer coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if isinstance(other, MultiPoly):
            _check_same_ring(self, other)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        _add_into(out, other.terms)
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        _add_into(out, other.terms, -1)
        return MultiPoly(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return MultiPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        if isinstance(other, MultiPoly):
            _check_same_ring(self, other)
            return MultiPoly(self.ring, _mul_terms(self.terms, other.terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise DomainError("polynomial powers must be nonnegative")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(self, name, replacement):
        """Replace one variable by a polynomial in the same registry."""
        if isinstance(replacement, int):
            replacement = self.ring.const(replacement)
        _check_same_ring(self, replacement)
        i = self.ring.index_of(name)
        powers = {0: self.ring.one()}
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e not in powers:
                powers[e] = replacement ** e
            stripped = exps[:i] + (0,) + exps[i + 1:]
            _add_into(out, _mul_terms({stripped: c}, powers[e].terms))
        return MultiPoly(self.ring, out)

    def evaluate_at(self, name, value):
        """Specialize one variable to an integer."""
        return self.substitute(name, int(value))

    def map_onto(self, target, mapping):
        """Move to another registry, sending each variable to a target poly.

        Variables absent from `mapping` must exist under the same name in the
        target registry and are carried across unchanged.
        """
        images = []
        for name in self.ring.names:
            if name in mapping:
                img = mapping[name]
                if isinstance(img, int):
                    img = target.const(img)
                if img.ring != target:
                    raise RegistryError("image of %r is not in the target registry" % name)
            else:
                img = target.var(name)
            images.append(img)
        out = {}
        cache = [dict() for _ in images]
        for exps, c in self.terms.items():
            prod = {(0,) * target.arity: c}
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if e not in cache[i]:
                    cache[i][e] = images[i] ** e
                prod = _mul_terms(prod, cache[i][e].terms)
            _add_into(out, prod)
        return MultiPoly(target, out)

    def partial_derivative(self, name):
        i = self.ring.index_of(name)
        out = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            key = exps[:i] + (e - 1,) + exps[i + 1:]
            out[key] = out.get(key, 0) + c * e
        return MultiPoly(self.ring, out)

    def coefficient(self, name, power):
        """Extract the coefficient of name**power (a poly in the other vars)."""
        i = self.ring.index_of(name)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == int(power):
                out[exps[:i] + (0,) + exps[i + 1:]] = c
        return MultiPoly(self.ring, out)

    def degree(self, name=None):
        """Total degree, or the degree in a single variable; zero poly gives -1."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.index_of(name)
        return max(e[i] for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.arity, 0)

    def evaluate(self, assignments):
        """Evaluate to an integer; every variable must be assigned."""
        missing = [n for n in self.ring.names if n not in assignments]
        if missing:
            raise DomainError("unassigned variables: %s" % ", ".join(missing))
        total = 0
        for exps, c in self.terms.items():
            v = c
            for name, e in zip(self.ring.names, exps):
                if e:
                    v *= int(assignments[name]) ** e
            total += v
        return total

    def sorted_terms(self):
        """Terms in graded lexicographic order of their exponent vectors."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def render(self):
        """Deterministic text form like `3 + 2*u*d + u^4`."""
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append("%d*%s" % (c, "*".join(factors)))
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def json_terms(self):
        """JSON-safe term list: [[exponent vector, coefficient string], ...]."""
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    def __repr__(self):
        return "MultiPoly(%s)" % self.render()


class TruncatedSeries:
    """Power series in t truncated at a fixed order, coefficients MultiPoly."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, coeffs, order=None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise DomainError("series order must be nonnegative")
        coeffs = list(coeffs[: order + 1])
        while len(coeffs) < order + 1:
            coeffs.append(ring.zero())
        for c in coeffs:
            if c.ring != ring:
                raise RegistryError("coefficient registry mismatch")
        self.ring = ring
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, [], order)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, [ring.one()], order)

    @classmethod
    def from_terms(cls, ring, terms, order):
        """Build from {t power: coefficient}, coefficients ints or MultiPoly."""
        coeffs = [ring.zero()] * (order + 1)
        for k, c in terms.items():
            if isinstance(c, int):
                c = ring.const(c)
            if 0 <= k <= order:
                coeffs[k] = coeffs[k] + c
        return cls(ring, coeffs, order)

    def coefficient(self, k):
        if k < 0 or k > self.order:
            raise DomainError("coefficient index %d outside truncation order %d" % (k, self.order))
        return self.coeffs[k]

    def integer_coefficients(self):
        """Coefficient list as plain ints; requires constant coefficients."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c.degree() > 0:
                raise DomainError("coefficient of t^%d is not constant: %s" % (k, c.render()))
            out.append(c.constant_term())
        return out

    def _coerce_scalar(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise RegistryError("scalar registry mismatch")
            return other
        return None

    def _common_order(self, other):
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common_order(other)
            return TruncatedSeries(
                self.ring, [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n
            )
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + scalar
        return TruncatedSeries(self.ring, coeffs, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other if isinstance(other, TruncatedSeries) else self + (-other)

    def __rsub__(self, other):
        return ((-1) * self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common_order(other)
            out = [dict() for _ in range(n + 1)]
            for i in range(n + 1):
                ti = self.coeffs[i].terms
                if not ti:
                    continue
                for j in range(n + 1 - i):
                    tj = other.coeffs[j].terms
                    if not tj:
                        continue
                    _add_into(out[i + j], _mul_terms(ti, tj))
            return TruncatedSeries(
                self.ring, [MultiPoly(self.ring, d) for d in out], n
            )
        scalar = self._coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return TruncatedSeries(self.ring, [c * scalar for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t**k."""
        if k < 0:
            raise DomainError("shift exponent must be nonnegative")
        return TruncatedSeries(
            self.ring, [self.ring.zero()] * k + self.coeffs[: self.order + 1 - k], self.order
        )

    def shift_divide_by_t_power(self, k):
        """Divide by t**k; the first k coefficients must vanish."""
        for j in range(min(k, self.order + 1)):
            if self.coeffs[j]:
                raise SeriesError(
                    "cannot divide by t^%d: coefficient of t^%d is %s"
                    % (k, j, self.coeffs[j].render()),
                    index=j,
                )
        return TruncatedSeries(self.ring, self.coeffs[k:], self.order - k)

    def divide_by(self, den):
        """Divide by a series whose constant coefficient is 1."""
        n = self._common_order(den)
        if den.coeffs[0] != self.ring.one():
            raise SeriesError(
                "divisor constant term must be 1, got %s" % den.coeffs[0].render(),
                index=0,
            )
        out = [dict() for _ in range(n + 1)]
        for k in range(n + 1):
            acc = dict(self.coeffs[k].terms)
            for j in range(1, k + 1):
                dj = den.coeffs[j].terms
                if dj and out[k - j]:
                    _add_into(acc, _mul_terms(dj, out[k - j]), -1)
            out[k] = acc
        return TruncatedSeries(self.ring, [MultiPoly(self.ring, d) for d in out], n)

    def compose_geometric(self):
        """Return 1/(1 - self); requires zero constant coefficient."""
        if self.coeffs[0]:
            raise SeriesError(
                "geometric composition needs zero constant term, got %s"
                % self.coeffs[0].render(),
                index=0,
            )
        n = self.order
        out = [dict() for _ in range(n + 1)]
        out[0] = dict(self.ring.one().terms)
        for k in range(1, n + 1):
            acc = {}
            for j in range(1, k + 1):
                sj = self.coeffs[j].terms
                if sj and out[k - j]:
                    _add_into(acc, _mul_terms(sj, out[k - j]))
            out[k] = acc
        return TruncatedSeries(self.ring, [MultiPoly(self.ring, d) for d in out], n)

    def substitute(self, name, replacement):
        return self.apply(lambda c: c.substitute(name, replacement))

    def evaluate_at(self, name, value):
        return self.apply(lambda c: c.evaluate_at(name, value))

    def partial_derivative(self, name):
        """Differentiate each coefficient with respect to a ring variable."""
        return self.apply(lambda c: c.partial_derivative(name))

    def map_onto(self, target, mapping):
        return TruncatedSeries(
            target, [c.map_onto(target, mapping) for c in self.coeffs], self.order
        )

    def apply(self, fn):
        return TruncatedSeries(self.ring, [fn(c) for c in self.coeffs], self.order)

    def truncate(self, order):
        if order > self.order:
            raise DomainError("cannot extend a truncated series (have %d, want %d)" % (self.order, order))
        return TruncatedSeries(self.ring, self.coeffs[: order + 1], order)

    def agrees_with(self, other, upto=None):
        """Equality of coefficients through min(order) or an explicit bound."""
        n = self._common_order(other)
        if upto is not None:
            n = min(n, upto)
        if self.ring != other.ring:
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def first_difference(self, other):
        """Smallest index where coefficients differ, or None."""
        n = self._common_order(other)
        for k in range(n + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        shown = []
        for k, c in enumerate(self.coeffs):
            if c and len(shown) < 6:
                shown.append("(%s)*t^%d" % (c.render(), k))
        body = " + ".join(shown) if shown else "0"
        return "TruncatedSeries(%s + O(t^%d))" % (body, self.order + 1)


class RationalGF:
    """Rational generating function N(t)/D(t) with polynomial coefficients.

    Numerator and denominator are {t power: MultiPoly or int} dicts over a
    shared registry; the denominator must have constant term exactly 1 so
    the series expansion is integral.
    """

    def __init__(self, ring, numerator, denominator):
        self.ring = ring
        self.numerator = self._clean(numerator)
        self.denominator = self._clean(denominator)
        d0 = self.denominator.get(0, ring.zero())
        if d0 != ring.one():
            raise SeriesError("denominator constant term must be 1, got %s" % d0.render())

    def _clean(self, table):
        out = {}
        for k, c in table.items():
            if isinstance(c, int):
                c = self.ring.const(c)
            if c.ring != self.ring:
                raise RegistryError("coefficient registry mismatch at t^%d" % k)
            if c:
                out[int(k)] = c
        return out

    def expand(self, order):
        num = TruncatedSeries.from_terms(self.ring, self.numerator, order)
        den = TruncatedSeries.from_terms(self.ring, self.denominator, order)
        return num.divide_by(den)

    def __repr__(self):
        def side(table):
            return " + ".join(
                "(%s)*t^%d" % (c.render(), k) for k, c in sorted(table.items())
            ) or "0"
        return "RationalGF((%s) / (%s))" % (side(self.numerator), side(self.denominator))


def expand_rational(gf, order):
    """Series S with S*D = N exactly through the truncation order."""
    return gf.expand(order)


def t_poly_multiply(ring, a, b):
    """Convolve two {t power: coefficient} tables over a shared registry.

    Coefficients may be ints or MultiPoly; handy for building rational GFs
    whose printed numerators or denominators are products of small factors.
    """
    def clean(table):
        out = {}
        for k, c in table.items():
            if isinstance(c, int):
                c = ring.const(c)
            if c:
                out[int(k)] = c
        return out

    a = clean(a)
    b = clean(b)
    prod = {}
    for i, ca in a.items():
        for j, cb in b.items():
            prod[i + j] = prod.get(i + j, ring.zero()) + ca * cb
    return {k: c for k, c in prod.items() if c}

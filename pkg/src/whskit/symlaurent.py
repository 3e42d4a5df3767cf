"""Exact multivariate arithmetic: polynomials over Z, rational functions,
Laurent polynomials, and dual numbers (epsilon^2 = 0) on top of them.

Everything is a dict from exponent tuples to integer coefficients; no floats
anywhere.  Rational functions are kept in a canonical form (gcd-reduced,
denominator's leading coefficient positive under graded lex), so structural
equality is mathematical equality.

Variables are anonymous: a polynomial only knows its arity.  Rendering assigns
names x1..xn by default; callers with split even/odd variable blocks pass their
own names.
"""

from __future__ import annotations

import itertools
import math

from .errors import DimensionMismatch, NonInvertibleEvenPart

Monomial = tuple  # tuple[int, ...] of length == arity


def _grlex(m):
    """Sort key: graded, then lexicographic on the exponent tuple."""
    return (sum(m), m)


def default_names(arity):
    return tuple("x%d" % (i + 1) for i in range(arity))


def render_monomial(coeff, mono, names):
    """Render one term the way the rest of the toolkit prints it: ``3*x1^2*x2^-1``.

    The sign is included; callers assembling sums strip it for the joiner.
    """
    parts = []
    for name, e in zip(names, mono):
        if e == 0:
            continue
        parts.append(name if e == 1 else "%s^%d" % (name, e))
    if not parts:
        return str(coeff)
    if coeff == 1:
        return "*".join(parts)
    if coeff == -1:
        return "-" + "*".join(parts)
    return str(coeff) + "*" + "*".join(parts)


def _render_terms(terms, names):
    if not terms:
        return "0"
    out = []
    for mono in sorted(terms, key=_grlex):
        piece = render_monomial(terms[mono], mono, names)
        if not out:
            out.append(piece)
        elif piece.startswith("-"):
            out.append(" - " + piece[1:])
        else:
            out.append(" + " + piece)
    return "".join(out)


class MultiPoly:
    """Polynomial in ``arity`` variables with integer coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = int(arity)
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != self.arity:
                    raise DimensionMismatch(
                        "monomial %r has length %d, expected %d"
                        % (mono, len(mono), self.arity)
                    )
                c = int(c)
                if c:
                    clean[tuple(int(e) for e in mono)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity):
        return cls(arity, {})

    @classmethod
    def const(cls, arity, c):
        return cls(arity, {(0,) * arity: int(c)})

    @classmethod
    def one(cls, arity):
        return cls.const(arity, 1)

    @classmethod
    def gen(cls, arity, i):
        """The variable x_{i+1} (0-based index i)."""
        if not 0 <= i < arity:
            raise DimensionMismatch("variable index %d out of range" % i)
        mono = tuple(1 if j == i else 0 for j in range(arity))
        return cls(arity, {mono: 1})

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.arity, 0)

    def is_one(self):
        return self.terms == {(0,) * self.arity: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise DimensionMismatch(
                "arity mismatch: %d vs %d" % (self.arity, other.arity)
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.arity, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.arity)
            return MultiPoly(
                self.arity, {m: c * other for m, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative power of a polynomial; use MultiRational")
        result = MultiPoly.one(self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- structure ---------------------------------------------------------

    def leading(self):
        """(monomial, coeff) maximal under graded lex.  Zero poly has none."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex)
        return m, self.terms[m]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def min_degree_in(self, i):
        if not self.terms:
            return 0
        return min(m[i] for m in self.terms)

    def int_content(self):
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def monomial_content(self):
        """Componentwise min exponent, the largest monomial dividing self."""
        if not self.terms:
            return (0,) * self.arity
        monos = list(self.terms)
        return tuple(min(m[i] for m in monos) for i in range(self.arity))

    def shift_down(self, mono):
        """Divide by x^mono; every exponent must stay nonnegative."""
        out = {}
        for m, c in self.terms.items():
            nm = tuple(a - b for a, b in zip(m, mono))
            if any(e < 0 for e in nm):
                raise ValueError("monomial does not divide every term")
            out[nm] = c
        return MultiPoly(self.arity, out)

    def exact_div(self, other):
        """Exact quotient self/other over Z, or None when not divisible.

        Single-divisor multivariate division under graded lex: each step
        strictly lowers the leading monomial, and remainder zero is equivalent
        to divisibility by a single divisor.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        self._check(other)
        if self.is_zero():
            return MultiPoly.zero(self.arity)
        dm, dc = other.leading()
        rem = self
        q = {}
        while not rem.is_zero():
            rm, rc = rem.leading()
            mono = tuple(a - b for a, b in zip(rm, dm))
            if any(e < 0 for e in mono) or rc % dc != 0:
                return None
            coef = rc // dc
            q[mono] = coef
            rem = rem - MultiPoly(self.arity, {mono: coef}) * other
        return MultiPoly(self.arity, q)

    def eval(self, values):
        """Evaluate at a point; values may be ints, Fractions, complexes."""
        if len(values) != self.arity:
            raise DimensionMismatch("expected %d values" % self.arity)
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                for _ in range(e):
                    term = term * v
            total = total + term
        return total

    def render(self, names=None):
        names = names or default_names(self.arity)
        if len(names) != self.arity:
            raise DimensionMismatch("need %d names" % self.arity)
        return _render_terms(self.terms, names)

    def __repr__(self):
        return "MultiPoly(%s)" % self.render()


def _sign_normalize(p):
    """Flip sign so the graded-lex leading coefficient is positive."""
    if p.is_zero():
        return p
    _, c = p.leading()
    return -p if c < 0 else p


def _as_univar(p, v):
    """View p as a polynomial in variable v: dict degree -> coefficient poly
    (a MultiPoly of the same arity with exponent v zeroed)."""
    out = {}
    for m, c in p.terms.items():
        d = m[v]
        key = m[:v] + (0,) + m[v + 1:]
        coef = out.setdefault(d, {})
        coef[key] = coef.get(key, 0) + c
    return {d: MultiPoly(p.arity, t) for d, t in out.items()}


def _from_univar(u, v, arity):
    terms = {}
    for d, coef in u.items():
        for m, c in coef.terms.items():
            terms[m[:v] + (d,) + m[v + 1:]] = c
    return MultiPoly(arity, terms)


def _univar_scale(u, poly):
    return {d: c * poly for d, c in u.items() if not (c * poly).is_zero()}


def _univar_sub(a, b):
    out = dict(a)
    for d, c in b.items():
        s = out.get(d)
        s = c.__neg__() if s is None else s - c
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _univar_deg(u):
    return max(u) if u else -1


def _pseudo_rem(a, b):
    """Pseudo-remainder of univariate views a by b (deg a >= deg b >= 0)."""
    db = _univar_deg(b)
    lb = b[db]
    r = dict(a)
    while r and _univar_deg(r) >= db:
        dr = _univar_deg(r)
        lr = r[dr]
        # r <- lb*r - lr*x^(dr-db)*b
        shifted = {d + dr - db: c * lr for d, c in b.items()}
        r = _univar_sub(_univar_scale(r, lb), shifted)
    return r


def poly_gcd(f, g):
    """GCD over Z[x1..xn], sign-normalized (positive graded-lex leading coeff).

    Integer and monomial contents split off first, then a primitive PRS in the
    lowest shared variable with recursively computed coefficient contents.
    Cheap exact-division probes catch the common cluster-mutation cases.
    """
    if f.arity != g.arity:
        raise DimensionMismatch("arity mismatch in gcd")
    if f.is_zero():
        return _sign_normalize(g)
    if g.is_zero():
        return _sign_normalize(f)

    ic = math.gcd(f.int_content(), g.int_content())
    mf, mg = f.monomial_content(), g.monomial_content()
    mono = tuple(min(a, b) for a, b in zip(mf, mg))

    F = f.shift_down(mf)
    G = g.shift_down(mg)
    cF, cG = F.int_content(), G.int_content()
    F = MultiPoly(f.arity, {m: c // cF for m, c in F.terms.items()})
    G = MultiPoly(g.arity, {m: c // cG for m, c in G.terms.items()})

    core = _gcd_primitive(F, G)
    result = core * MultiPoly(f.arity, {mono: ic})
    return _sign_normalize(result)


def _primitive_full(p):
    """Strip integer content and sign; p nonzero."""
    c = p.int_content()
    p = MultiPoly(p.arity, {m: v // c for m, v in p.terms.items()})
    return _sign_normalize(p)


def _gcd_primitive(F, G):
    """GCD of integer-primitive, monomial-free polynomials."""
    one = MultiPoly.one(F.arity)
    if F.is_one() or G.is_one():
        return one
    if F == G or F == -G:
        return _sign_normalize(F)
    # fast paths: exact divisibility either way
    if F.total_degree() >= G.total_degree() and F.exact_div(G) is not None:
        return _sign_normalize(G)
    if G.total_degree() >= F.total_degree() and G.exact_div(F) is not None:
        return _sign_normalize(F)

    shared = [
        i
        for i in range(F.arity)
        if F.degree_in(i) > 0 and G.degree_in(i) > 0
    ]
    if not shared:
        # primitive with disjoint variable support: only constants divide both
        return one
    v = shared[0]

    A = _as_univar(F, v)
    B = _as_univar(G, v)

    def content_of(u):
        acc = MultiPoly.zero(F.arity)
        for c in u.values():
            acc = poly_gcd(acc, c)
        return acc

    contA = content_of(A)
    contB = content_of(B)
    gamma = poly_gcd(contA, contB)
    A = {d: c.exact_div(contA) for d, c in A.items()}
    B = {d: c.exact_div(contB) for d, c in B.items()}

    if _univar_deg(A) < _univar_deg(B):
        A, B = B, A

    while True:
        R = _pseudo_rem(A, B)
        if not R:
            core = _from_univar(B, v, F.arity)
            break
        if _univar_deg(R) == 0:
            core = one
            break
        # primitive part of R (in the coefficient ring and over Z)
        contR = MultiPoly.zero(F.arity)
        for c in R.values():
            contR = poly_gcd(contR, c)
        A, B = B, {d: c.exact_div(contR) for d, c in R.items()}

    result = _sign_normalize(gamma * _primitive_full(core))
    # paranoia: a gcd must divide both inputs exactly
    assert F.exact_div(result) is not None and G.exact_div(result) is not None
    return result


class MultiRational:
    """Quotient of integer polynomials in canonical form.

    Invariants: den != 0, gcd(num, den) = 1, den's graded-lex leading
    coefficient positive.  Canonical form is unique, so == is mathematical
    equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = MultiPoly.one(num.arity)
        if num.arity != den.arity:
            raise DimensionMismatch("numerator/denominator arity mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            if num.is_zero():
                den = MultiPoly.one(num.arity)
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                _, lc = den.leading()
                if lc < 0:
                    num, den = -num, -den
        self.num = num
        self.den = den

    @property
    def arity(self):
        return self.num.arity

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, arity, c):
        return cls(MultiPoly.const(arity, c), _canonical=True)

    @classmethod
    def gen(cls, arity, i):
        return cls(MultiPoly.gen(arity, i), _canonical=True)

    @classmethod
    def zero(cls, arity):
        return cls.from_int(arity, 0)

    @classmethod
    def one(cls, arity):
        return cls.from_int(arity, 1)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiRational):
            return other
        if isinstance(other, MultiPoly):
            return MultiRational(other)
        if isinstance(other, int):
            return MultiRational.from_int(self.arity, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiRational(
            self.num * o.den + o.num * self.den, self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return MultiRational(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return MultiRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        k = int(k)
        if k == 0:
            return MultiRational.one(self.arity)
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            base = MultiRational(self.den, self.num)
            k = -k
        else:
            base = self
        # coprime num/den stay coprime under powers; sign survives products
        return MultiRational(base.num ** k, base.den ** k, _canonical=True)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, MultiRational) else other
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- conversion --------------------------------------------------------

    def as_laurent(self):
        """LaurentPoly if the denominator is a bare monomial (coefficient 1),
        else None."""
        if len(self.den.terms) != 1:
            return None
        (mono, coef), = self.den.terms.items()
        if coef != 1:
            return None
        terms = {}
        for m, c in self.num.terms.items():
            terms[tuple(a - b for a, b in zip(m, mono))] = c
        return LaurentPoly(self.arity, terms)

    def eval(self, values):
        from fractions import Fraction

        top = self.num.eval(values)
        bot = self.den.eval(values)
        if isinstance(top, int) and isinstance(bot, int):
            return Fraction(top, bot)
        return top / bot

    def render(self, names=None):
        names = names or default_names(self.arity)
        num_s = self.num.render(names)
        if self.den.is_one():
            return num_s
        den_s = self.den.render(names)
        if len(self.num.terms) > 1:
            num_s = "(" + num_s + ")"
        # parenthesize the denominator unless it is a power of one variable
        bare = len(self.den.terms) == 1
        if bare:
            (mono, coef), = self.den.terms.items()
            bare = coef == 1 and sum(1 for e in mono if e) == 1
        if not bare:
            den_s = "(" + den_s + ")"
        return num_s + "/" + den_s

    def __repr__(self):
        return "MultiRational(%s)" % self.render()


class LaurentPoly:
    """Polynomial with integer coefficients and integer (possibly negative)
    exponents."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = int(arity)
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != self.arity:
                    raise DimensionMismatch("bad monomial length")
                c = int(c)
                if c:
                    clean[tuple(int(e) for e in m)] = c
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def coefficients(self):
        return list(self.terms.values())

    def min_exponents(self):
        """Componentwise minimum exponent (0 in a variable that never appears)."""
        out = []
        for i in range(self.arity):
            lows = [m[i] for m in self.terms]
            out.append(min(lows) if lows else 0)
        return tuple(out)

    def to_rational(self):
        mono = tuple(min(e, 0) for e in self.min_exponents())
        num = {}
        for m, c in self.terms.items():
            num[tuple(a - b for a, b in zip(m, mono))] = c
        den = {tuple(-e for e in mono): 1}
        return MultiRational(
            MultiPoly(self.arity, num), MultiPoly(self.arity, den)
        )

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def render(self, names=None):
        names = names or default_names(self.arity)
        return _render_terms(self.terms, names)

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()


def weight_of(obj, weights):
    """Weight of a homogeneous (Laurent) polynomial under variable weights.

    Returns the common weight sum(e_i * w_i) of all monomials, or None when
    the terms disagree.  The zero polynomial also returns None: it carries no
    weight information.
    """
    if isinstance(obj, MultiRational):
        wn = weight_of(obj.num, weights)
        wd = weight_of(obj.den, weights)
        if wn is None or wd is None:
            return None
        return wn - wd
    if len(weights) != obj.arity:
        raise DimensionMismatch("need %d weights" % obj.arity)
    seen = None
    for m in obj.terms:
        w = sum(e * wt for e, wt in zip(m, weights))
        if seen is None:
            seen = w
        elif w != seen:
            return None
    return seen


class DualRational:
    """Dual number a + b*epsilon with epsilon^2 = 0; a, b rational functions."""

    __slots__ = ("even", "odd")

    def __init__(self, even, odd=None):
        if odd is None:
            odd = MultiRational.zero(even.arity)
        if even.arity != odd.arity:
            raise DimensionMismatch("even/odd arity mismatch")
        self.even = even
        self.odd = odd

    @property
    def arity(self):
        return self.even.arity

    @classmethod
    def from_int(cls, arity, c):
        return cls(MultiRational.from_int(arity, c))

    @classmethod
    def pair_gen(cls, arity, i, j):
        """x_i + x_j * epsilon as a dual number (0-based variable indices)."""
        return cls(MultiRational.gen(arity, i), MultiRational.gen(arity, j))

    def _coerce(self, other):
        if isinstance(other, DualRational):
            return other
        if isinstance(other, (MultiRational, MultiPoly, int)):
            if isinstance(other, int):
                return DualRational.from_int(self.arity, other)
            if isinstance(other, MultiPoly):
                other = MultiRational(other)
            return DualRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRational(self.even + o.even, self.odd + o.odd)

    __radd__ = __add__

    def __neg__(self):
        return DualRational(-self.even, -self.odd)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualRational(
            self.even * o.even, self.even * o.odd + self.odd * o.even
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.even.is_zero():
            raise NonInvertibleEvenPart(
                "dual number with zero even part has no inverse"
            )
        # (a + b e)/(c + d e) = a/c + (b c - a d)/c^2 e
        a, b, c, d = self.even, self.odd, o.even, o.odd
        return DualRational(a / c, (b * c - a * d) / (c * c))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return DualRational.from_int(self.arity, 1) / (self ** (-k))
        result = DualRational.from_int(self.arity, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, DualRational) else other
        if o is None:
            return NotImplemented
        return self.even == o.even and self.odd == o.odd

    def __hash__(self):
        return hash((self.even, self.odd))

    def render(self, names=None):
        e = self.even.render(names)
        if self.odd.is_zero():
            return e
        o = self.odd.render(names)
        return "%s + (%s)*e" % (e, o)

    def __repr__(self):
        return "DualRational(%s)" % self.render()


def product(items, unit):
    acc = unit
    for x in items:
        acc = acc * x
    return acc


def all_monomials(arity, max_deg):
    """Every exponent tuple with total degree <= max_deg (test helper)."""
    ranges = [range(max_deg + 1)] * arity
    for m in itertools.product(*ranges):
        if sum(m) <= max_deg:
            yield m

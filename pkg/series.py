"""
Exact series engine

Multivariate polynomials over the rationals, truncated power series in z with
polynomial coefficients, OGF/EGF conversion, named number sequences and
real-root counting. Arithmetic runs in one sympy polynomial ring over QQ whose
generators are z, a scratch variable w and x1..x32; power series are ring
elements truncated in z.
"""
import logging
import math
import re
from fractions import Fraction
from functools import lru_cache

import sympy
from sympy import QQ
from sympy.polys.rings import PolyElement, ring
from sympy.polys.ring_series import (
    rs_exp,
    rs_hadamard_exp,
    rs_integrate,
    rs_log,
    rs_mul,
    rs_nth_root,
    rs_pow,
    rs_series_inversion,
    rs_series_reversion,
    rs_subs,
    rs_trunc,
)

from config import Config
from errors import InvalidArgumentError, UnsupportedError

logger = logging.getLogger(__name__)

MAX_VARIABLES = 32

# z first: rs_hadamard_exp scales by the factorial of the first exponent
RING, Z, W, *_XGENS = ring(['z', 'w'] + [f'x{i}' for i in range(1, MAX_VARIABLES + 1)], QQ)
_OFFSET = 2


def _trim(exps):
    exps = tuple(exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _pad(exps, width):
    return exps + (0,) * (width - len(exps))


def _qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    raise InvalidArgumentError(f"{value!r} is not an exact rational")


def _fraction(coeff):
    return Fraction(int(QQ.numer(coeff)), int(QQ.denom(coeff)))


def _monom(exps):
    exps = tuple(int(e) for e in exps)
    if len(_trim(exps)) > MAX_VARIABLES:
        raise InvalidArgumentError(f"polynomials use at most {MAX_VARIABLES} variables")
    if any(e < 0 for e in exps):
        raise InvalidArgumentError(f"negative exponent in {exps}")
    exps = _trim(exps)
    return (0,) * _OFFSET + _pad(exps, MAX_VARIABLES)


def _gen(index):
    if index < 1 or index > MAX_VARIABLES:
        raise InvalidArgumentError(f"variable index must be in 1..{MAX_VARIABLES}, got {index}")
    return _XGENS[index - 1]


class MultiPoly:
    """Polynomial in x1..xr with rational coefficients"""

    __slots__ = ('poly',)

    def __init__(self, terms=None):
        if isinstance(terms, PolyElement):
            self.poly = terms
            return
        merged = {}
        for exps, coeff in (terms or {}).items():
            key = _monom(exps)
            merged[key] = merged.get(key, QQ.zero) + _qq(Fraction(coeff))
        self.poly = RING.from_dict(merged)

    def __reduce__(self):
        return (MultiPoly, (self.terms,))

    @classmethod
    def const(cls, value):
        return cls({(): value})

    @classmethod
    def var(cls, index=1, power=1):
        """The monomial x_index^power (1-based index)."""
        return cls(_gen(index) ** power)

    @classmethod
    def monomial(cls, exponents, coeff=1):
        return cls({tuple(exponents): coeff})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise InvalidArgumentError(f"cannot use {value!r} as a polynomial")

    # --- queries -----------------------------------------------------------

    @property
    def terms(self):
        """{trimmed exponent tuple: Fraction}."""
        return {_trim(m[_OFFSET:]): _fraction(c) for m, c in self.poly.items()}

    @property
    def nvars(self):
        return max((len(_trim(m[_OFFSET:])) for m in self.poly.itermonoms()), default=0)

    def is_zero(self):
        return not self.poly

    def is_constant(self):
        return all(not any(m) for m in self.poly.itermonoms())

    def constant_term(self):
        return _fraction(self.poly.coeff(1))

    def coefficient(self, exponents):
        return _fraction(self.poly.get(_monom(exponents), QQ.zero))

    def degree(self, index=None):
        if not self.poly:
            return -1
        if index is None:
            return max(sum(m) for m in self.poly.itermonoms())
        return self.poly.degree(_gen(index))

    def univariate(self, index=1):
        """Coefficient list (low to high) of a polynomial in x_index alone."""
        deg = self.degree(index)
        if deg < 0:
            return []
        position = _OFFSET + index - 1
        out = [Fraction(0)] * (deg + 1)
        for m, coeff in self.poly.items():
            if any(p for i, p in enumerate(m) if i != position):
                raise InvalidArgumentError(f"{self} is not univariate in x{index}")
            out[m[position]] += _fraction(coeff)
        return out

    def to_fraction(self):
        if not self.is_constant():
            raise InvalidArgumentError(f"{self} is not a constant")
        return self.constant_term()

    def to_int(self):
        value = self.to_fraction()
        if value.denominator != 1:
            raise InvalidArgumentError(f"{self} is not an integer")
        return value.numerator

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return MultiPoly(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(-self.poly)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return MultiPoly(self.poly - other.poly)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return MultiPoly(other.poly - self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.poly.mul_ground(_qq(other)))
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return MultiPoly(self.poly * other.poly)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            other = other.to_fraction()
        other = Fraction(other)
        if other == 0:
            raise InvalidArgumentError("division of a polynomial by zero")
        return MultiPoly(self.poly.mul_ground(_qq(1 / other)))

    def __pow__(self, power):
        if not isinstance(power, int) or power < 0:
            raise InvalidArgumentError(f"polynomial powers must be nonnegative integers, got {power!r}")
        return MultiPoly(self.poly ** power)

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return False
        return self.poly == other.poly

    def __hash__(self):
        return hash(frozenset(self.poly.items()))

    def __bool__(self):
        return bool(self.poly)

    # --- calculus and substitution ----------------------------------------

    def derivative(self, index=1):
        return MultiPoly(self.poly.diff(_gen(index)))

    def substitute(self, values):
        """Replace x_i by values[i] (number or MultiPoly) for each given i."""
        if not values:
            return self
        pairs = [(_gen(i), MultiPoly.coerce(v).poly) for i, v in sorted(values.items())]
        return MultiPoly(self.poly.compose(pairs))

    def evaluate(self, values):
        """Substitute numbers for every variable and return a Fraction."""
        return self.substitute(values).to_fraction()

    # --- text --------------------------------------------------------------

    def sorted_terms(self):
        terms = self.terms
        width = max((len(e) for e in terms), default=0)
        return sorted(
            terms.items(),
            key=lambda item: (sum(item[0]), tuple(-p for p in _pad(item[0], width))),
        )

    def __str__(self):
        if not self.poly:
            return '0'
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for i, power in enumerate(exps, start=1):
                if power == 1:
                    factors.append(f'x{i}')
                elif power > 1:
                    factors.append(f'x{i}^{power}')
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = f'{magnitude}*' + '*'.join(factors)
            if not parts:
                parts.append(('-' if coeff < 0 else '') + body)
            else:
                parts.append(('- ' if coeff < 0 else '+ ') + body)
        return ' '.join(parts)

    def __repr__(self):
        return f'MultiPoly({str(self)!r})'

    _TERM = re.compile(r'([+-])?\s*([^+-]+)')
    _FACTOR = re.compile(r'^(?:x(\d*))(?:\^(\d+))?$')

    @classmethod
    def parse(cls, text):
        """Parse the documented grammar, e.g. '1 + 3*x1^2 - 1/2*x1*x2'; bare 'x' means x1."""
        source = str(text).replace(' ', '')
        if not source:
            raise InvalidArgumentError("empty polynomial text")
        # Exponents never carry signs, so every +/- separates terms.
        result = MultiPoly()
        position = 0
        for match in cls._TERM.finditer(source):
            if match.start() != position:
                raise InvalidArgumentError(f"cannot parse polynomial {text!r}")
            position = match.end()
            sign = -1 if match.group(1) == '-' else 1
            coeff = Fraction(sign)
            exps = []
            for factor in match.group(2).split('*'):
                if not factor:
                    raise InvalidArgumentError(f"cannot parse polynomial {text!r}")
                if re.fullmatch(r'\d+(/\d+)?', factor):
                    coeff *= Fraction(factor)
                    continue
                found = cls._FACTOR.match(factor)
                if not found:
                    raise InvalidArgumentError(f"bad factor {factor!r} in {text!r}")
                index = int(found.group(1) or 1)
                power = int(found.group(2) or 1)
                if index < 1:
                    raise InvalidArgumentError(f"bad variable in {text!r}")
                while len(exps) < index:
                    exps.append(0)
                exps[index - 1] += power
            result = result + MultiPoly({tuple(exps): coeff})
        if position != len(source):
            raise InvalidArgumentError(f"cannot parse polynomial {text!r}")
        return result


def _as_poly(value):
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.const(value)
    return NotImplemented


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
X = MultiPoly.var(1)


def x(index=1, power=1):
    return MultiPoly.var(index, power)


class TruncatedSeries:
    """Power series in z known exactly up to z^order"""

    __slots__ = ('poly', 'order', '_coeffs')

    def __init__(self, coeffs, order=None):
        coeffs = [MultiPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise InvalidArgumentError(f"series order must be >= 0, got {order}")
        poly = RING.zero
        for n, c in enumerate(coeffs[:order + 1]):
            if c:
                poly += c.poly * Z ** n
        self.poly = poly
        self.order = order
        self._coeffs = None

    @classmethod
    def _wrap(cls, poly, order):
        out = cls.__new__(cls)
        out.poly = rs_trunc(poly, Z, order + 1)
        out.order = order
        out._coeffs = None
        return out

    def __reduce__(self):
        return (TruncatedSeries, (self.coeffs, self.order))

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([ONE], order)

    @classmethod
    def z(cls, order):
        return cls([ZERO, ONE], order)

    @classmethod
    def from_function(cls, func, order):
        return cls([func(n) for n in range(order + 1)], order)

    @property
    def coeffs(self):
        """[z^0], ..., [z^order] as MultiPoly values."""
        if self._coeffs is None:
            buckets = [{} for _ in range(self.order + 1)]
            for m, c in self.poly.items():
                buckets[m[0]][(0,) + m[1:]] = c
            self._coeffs = [MultiPoly(RING.from_dict(b)) for b in buckets]
        return self._coeffs

    def __getitem__(self, n):
        if n < 0 or n > self.order:
            raise InvalidArgumentError(f"coefficient z^{n} is outside the known order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.poly == other.poly

    def __repr__(self):
        shown = ', '.join(str(c) for c in self.coeffs)
        return f'TruncatedSeries([{shown}], order={self.order})'

    def truncate(self, order):
        return TruncatedSeries._wrap(self.poly, min(order, self.order))

    def agrees_with(self, other, order=None):
        """Coefficientwise equality up to a common order."""
        top = min(self.order, other.order) if order is None else order
        if top > min(self.order, other.order):
            raise InvalidArgumentError(f"cannot compare beyond the known order {min(self.order, other.order)}")
        return not rs_trunc(self.poly - other.poly, Z, top + 1)

    # --- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([MultiPoly.coerce(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries._wrap(self.poly + other.poly, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-self.poly, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries._wrap(self.poly * MultiPoly.coerce(other).poly, self.order)
        order = min(self.order, other.order)
        return TruncatedSeries._wrap(rs_mul(self.poly, other.poly, Z, order + 1), order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            if isinstance(other, MultiPoly):
                other = other.to_fraction()
            if other == 0:
                raise InvalidArgumentError("division of a series by zero")
            return TruncatedSeries._wrap(self.poly.mul_ground(_qq(1 / Fraction(other))), self.order)
        lead = other.coeffs[0]
        if lead.is_zero() or not lead.is_constant():
            raise InvalidArgumentError(
                f"division needs a nonzero constant z^0 coefficient in the divisor, got {lead}"
            )
        order = min(self.order, other.order)
        inverse = rs_series_inversion(rs_trunc(other.poly, Z, order + 1), Z, order + 1)
        return TruncatedSeries._wrap(rs_mul(self.poly, inverse, Z, order + 1), order)

    def __pow__(self, power):
        if not isinstance(power, int) or power < 0:
            raise InvalidArgumentError(f"series powers must be nonnegative integers, got {power!r}")
        return TruncatedSeries._wrap(rs_pow(self.poly, power, Z, self.order + 1), self.order)

    def shift(self, k):
        """Multiply by z^k (k may be negative when the low coefficients vanish)."""
        if k >= 0:
            return TruncatedSeries._wrap(self.poly * Z ** k, self.order + k)
        for n in range(-k):
            if self.coeffs[n]:
                raise InvalidArgumentError(f"cannot divide by z^{-k}: coefficient z^{n} is {self.coeffs[n]}")
        return TruncatedSeries(self.coeffs[-k:], self.order + k)

    # --- calculus ----------------------------------------------------------

    def derivative(self):
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries._wrap(self.poly.diff(Z), self.order - 1)

    def integral(self):
        return TruncatedSeries._wrap(rs_integrate(self.poly, Z), self.order + 1)

    def x_derivative(self, index=1):
        return TruncatedSeries._wrap(self.poly.diff(_gen(index)), self.order)

    def substitute_x(self, values):
        if not values:
            return self
        pairs = [(_gen(i), MultiPoly.coerce(v).poly) for i, v in sorted(values.items())]
        return TruncatedSeries._wrap(self.poly.compose(pairs), self.order)

    def _require_zero_constant(self, what):
        if self.coeffs[0]:
            raise InvalidArgumentError(f"{what} needs a zero z^0 coefficient, got {self.coeffs[0]}")

    def log1p(self):
        """log(1 + self)."""
        self._require_zero_constant('log1p')
        if self.order == 0:
            return TruncatedSeries.zero(0)
        return TruncatedSeries._wrap(rs_log(1 + self.poly, Z, self.order + 1), self.order)

    def exp(self):
        self._require_zero_constant('exp')
        return TruncatedSeries._wrap(rs_exp(self.poly, Z, self.order + 1), self.order)

    def sqrt1p(self):
        """sqrt(1 + self) on the branch with constant term 1."""
        self._require_zero_constant('sqrt')
        if not self.poly:
            return TruncatedSeries.one(self.order)
        return TruncatedSeries._wrap(rs_nth_root(1 + self.poly, 2, Z, self.order + 1), self.order)

    def compose(self, inner):
        """self(inner(z)); inner must have zero constant term."""
        inner._require_zero_constant('compose')
        order = min(self.order, inner.order)
        outer = rs_trunc(self.poly, Z, order + 1)
        return TruncatedSeries._wrap(rs_subs(outer, {Z: inner.poly}, Z, order + 1), order)

    def comp_inverse(self):
        """Compositional inverse g with self(g(z)) = z + O(z^(order+1))."""
        self._require_zero_constant('comp_inverse')
        if self.order < 1:
            raise InvalidArgumentError("comp_inverse needs order >= 1")
        linear = self.coeffs[1]
        if linear.is_zero() or not linear.is_constant():
            raise InvalidArgumentError(
                f"comp_inverse needs a nonzero constant z^1 coefficient, got {linear}"
            )
        # the reversion is returned in w
        reverted = rs_series_reversion(self.poly, Z, self.order + 1, W)
        return TruncatedSeries._wrap(reverted.compose(W, Z), self.order)

    # --- OGF / EGF ---------------------------------------------------------

    def to_egf(self):
        return TruncatedSeries._wrap(rs_hadamard_exp(self.poly), self.order)

    def to_ogf(self):
        return TruncatedSeries._wrap(rs_hadamard_exp(self.poly, inverse=True), self.order)

    # --- JSON --------------------------------------------------------------

    def to_dict(self):
        return {
            'var': 'z',
            'order': self.order,
            'coeffs': [{'poly': str(c)} for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            coeffs = [MultiPoly.parse(item['poly']) for item in data['coeffs']]
            return cls(coeffs, int(data['order']))
        except (KeyError, TypeError) as e:
            raise InvalidArgumentError(f"malformed series document: {e}")


def series_arith(a, b, op):
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise InvalidArgumentError(f"unknown series operation {op!r}")


def series_func(a, func):
    if func == 'log1p':
        return a.log1p()
    if func == 'exp':
        return a.exp()
    if func == 'sqrt':
        return a.sqrt1p()
    raise InvalidArgumentError(f"unknown series function {func!r}")


def ogf_egf(a, direction):
    if direction == 'to_egf':
        return a.to_egf()
    if direction == 'to_ogf':
        return a.to_ogf()
    raise InvalidArgumentError(f"unknown direction {direction!r}")


def exp_series(order, scale=1):
    """e^(scale*z) truncated."""
    return TruncatedSeries._wrap(rs_exp(Z.mul_ground(_qq(Fraction(scale))), Z, order + 1), order)


# --- number sequences ------------------------------------------------------

@lru_cache(maxsize=None)
def catalan(n):
    if n < 0:
        return 0
    return math.comb(2 * n, n) // (n + 1)


def aerated_catalan(n):
    """C_((n-1)/2) for odd n, else 0: the full binary tree counts."""
    if n % 2 == 0:
        return 0
    return catalan((n - 1) // 2)


@lru_cache(maxsize=None)
def motzkin(n):
    if n < 0:
        return 0
    if n < 2:
        return 1
    return ((2 * n + 1) * motzkin(n - 1) + (3 * n - 3) * motzkin(n - 2)) // (n + 2)


@lru_cache(maxsize=None)
def schroeder(n):
    """Large Schroeder numbers 1, 2, 6, 22, 90, 394, ..."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    return schroeder(n - 1) + sum(schroeder(k) * schroeder(n - 1 - k) for k in range(n))


def narayana(n, i):
    if n < 1 or i < 1 or i > n:
        return 0
    return math.comb(n, i) * math.comb(n, i - 1) // n


def narayana_poly(n, scale=1):
    """N_n(scale*x) for n >= 1."""
    return MultiPoly({(i,): narayana(n, i) * Fraction(scale) ** i for i in range(1, n + 1)})


def motzkin_poly(m):
    """M_m(x): coefficient of x^i counts Motzkin trees on m+1 vertices with i-1 right edges."""
    terms = {}
    for i in range(1, m // 2 + 2):
        rest = m - 2 * i + 2
        if rest < 0:
            break
        terms[(i,)] = Fraction(math.factorial(m), math.factorial(rest) * math.factorial(i) * math.factorial(i - 1))
    return MultiPoly(terms)


@lru_cache(maxsize=None)
def _euler_triangle(n):
    # boustrophedon (Seidel) rows
    rows = [[1]]
    for k in range(1, n + 1):
        prev = rows[-1]
        row = [0]
        for j in range(k):
            row.append(row[-1] + prev[k - 1 - j])
        rows.append(row)
    return tuple(row[-1] for row in rows)


def euler(n):
    """Euler zigzag numbers E_0.. : 1, 1, 1, 2, 5, 16, 61, 272."""
    return _euler_triangle(n)[n]


@lru_cache(maxsize=None)
def eulerian_row(n):
    """A(n, k) for k = 0..n-1 (number of permutations of [n] with k descents)."""
    if n == 0:
        return (1,)
    row = [1]
    for m in range(2, n + 1):
        prev = row + [0]
        row = [(k + 1) * prev[k] + (m - k) * (prev[k - 1] if k else 0) for k in range(m)]
    return tuple(row)


def eulerian_poly(n, scale=1):
    """A_n(scale*x) = sum over S_n of (scale*x)^des."""
    return MultiPoly({(k,): c * Fraction(scale) ** k for k, c in enumerate(eulerian_row(n))})


def double_factorial_odd(k):
    """(2k-1)!! with (-1)!! = 1."""
    out = 1
    for j in range(1, 2 * k, 2):
        out *= j
    return out


SEQUENCES = {
    'catalan': catalan,
    'aerated_catalan': aerated_catalan,
    'motzkin': motzkin,
    'schroeder': schroeder,
    'euler': euler,
    'double_factorial_odd': double_factorial_odd,
    'factorial': math.factorial,
}


def sequence(name, N, param=None):
    """Named sequence values for indices 0..N (narayana: row `param`; eulerian_poly: A_0..A_N)."""
    Config.check_cap('SERIES_ORDER', N)
    if name == 'narayana':
        n = N if param is None else param
        return [narayana(n, i) for i in range(1, n + 1)]
    if name == 'eulerian_poly':
        return [eulerian_poly(n) for n in range(N + 1)]
    if name not in SEQUENCES:
        raise InvalidArgumentError(f"unknown sequence {name!r}; known: {sorted(SEQUENCES) + ['narayana', 'eulerian_poly']}")
    func = SEQUENCES[name]
    return [func(n) for n in range(N + 1)]


def verify_r_transform_relation(kappa, moments, N):
    """Check R^<-1>(z)/(1+z) = M^<-1>(z) to order N for free cumulants and moments."""
    kappa_values = list(getattr(kappa, 'values', kappa))
    moment_values = list(getattr(moments, 'values', moments))
    if len(kappa_values) < N or len(moment_values) < N:
        raise InvalidArgumentError(f"need {N} terms of both sequences")
    k1 = MultiPoly.coerce(kappa_values[0])
    m1 = MultiPoly.coerce(moment_values[0])
    for label, lead in (('kappa_1', k1), ('m_1', m1)):
        if lead.is_zero() or not lead.is_constant():
            raise UnsupportedError(
                f"{label} = {lead}: the inverse is branch-ambiguous here; "
                "use the lattice or recursion conversions instead"
            )
    r = TruncatedSeries([ZERO] + kappa_values[:N], N)
    m = TruncatedSeries([ZERO] + moment_values[:N], N)
    left = r.comp_inverse() / (TruncatedSeries.one(N) + TruncatedSeries.z(N))
    right = m.comp_inverse()
    ok = left.agrees_with(right)
    logger.debug("R-transform relation to order %d: %s", N, ok)
    return ok


# --- real roots ------------------------------------------------------------

_T = sympy.Symbol('t')


def _univariate(poly):
    coeffs = poly.univariate(1) if isinstance(poly, MultiPoly) else [Fraction(c) for c in poly]
    dense = [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)]
    return sympy.Poly.from_list(dense or [0], _T, domain=QQ)


def count_real_roots(poly):
    """Number of distinct real roots of a univariate polynomial in x1."""
    p = _univariate(poly)
    if p.is_zero or p.degree() < 1:
        return 0
    return p.sqf_part().count_roots()


def is_real_rooted(poly):
    """All roots real: the squarefree part has as many real roots as its degree."""
    p = _univariate(poly)
    if p.is_zero or p.degree() < 1:
        return True
    squarefree = p.sqf_part()
    return squarefree.count_roots() == squarefree.degree()


def is_unimodal(values):
    values = list(values)
    peak = values.index(max(values)) if values else 0
    rising = all(values[i] <= values[i + 1] for i in range(peak))
    falling = all(values[i] >= values[i + 1] for i in range(peak, len(values) - 1))
    return rising and falling

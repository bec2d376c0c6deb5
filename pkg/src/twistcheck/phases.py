"""Exact coefficient ring for torus-twisted algebras.

Scalars are finite sums  sum_m  c_m * q^m  where each c_m is a Gaussian
rational (Q(i)) and each q^m is a Laurent monomial in formal commuting
unit phases q[j,k] (j < k), one per unordered pair of torus directions.
The unit q[j,k] stands for exp(i*pi*t[j,k]) with t a formal real
skew-symmetric parameter matrix, so conjugation inverts monomials and
numeric evaluation substitutes honest complex phases.

Everything here is immutable and side-effect free.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction


class GaussianRational:
    """An element a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        return (
            isinstance(other, GaussianRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def to_complex(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        return format_gaussian(self)


GR_ZERO = GaussianRational(0, 0)
GR_ONE = GaussianRational(1, 0)
GR_I = GaussianRational(0, 1)


def format_gaussian(g):
    """Canonical text form: 'a', 'a/c' or '(a+bi)/c' over a common denominator."""
    if g.im == 0:
        return str(g.re)
    c = math.lcm(g.re.denominator, g.im.denominator)
    a = g.re.numerator * (c // g.re.denominator)
    b = g.im.numerator * (c // g.im.denominator)
    body = "(%d%+di)" % (a, b)
    return body if c == 1 else "%s/%d" % (body, c)


# A monomial is a sorted tuple of ((j, k), exponent) with j < k (0-based
# torus directions) and non-zero integer exponents.
MONO_ONE = ()


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for pair, e in m2:
        v = acc.get(pair, 0) + e
        if v:
            acc[pair] = v
        else:
            del acc[pair]
    return tuple(sorted(acc.items()))


def mono_inv(m):
    return tuple((pair, -e) for pair, e in m)


class PhaseScalar:
    """Finite Gaussian-rational combination of phase monomials.

    Terms with equal monomials are merged and zero coefficients dropped,
    so instances compare by value.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero():
        return PhaseScalar()

    @staticmethod
    def one():
        return PhaseScalar({MONO_ONE: GR_ONE})

    @staticmethod
    def from_int(n):
        return PhaseScalar.from_gauss(GaussianRational(n, 0))

    @staticmethod
    def from_gauss(g):
        if g.is_zero():
            return PhaseScalar()
        return PhaseScalar({MONO_ONE: g})

    @staticmethod
    def i():
        return PhaseScalar({MONO_ONE: GR_I})

    @staticmethod
    def unit(j, k, e=1):
        """The formal phase q[j,k]^e (0-based j < k; q[k,j] = q[j,k]^-1)."""
        if j == k:
            raise ValueError("diagonal phase q[%d,%d] is identically 1" % (j, j))
        if j > k:
            j, k, e = k, j, -e
        if e == 0:
            return PhaseScalar.one()
        return PhaseScalar({(((j, k), e),): GR_ONE})

    @staticmethod
    def monomial(mono, coeff=GR_ONE):
        if coeff.is_zero():
            return PhaseScalar()
        return PhaseScalar({mono: coeff})

    # -- ring structure ------------------------------------------------
    def __add__(self, other):
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = acc.get(m)
            v = c if v is None else v + c
            if v.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = v
        return PhaseScalar(acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PhaseScalar({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return PhaseScalar()
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                v = acc.get(m)
                v = c if v is None else v + c
                if v.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = v
        return PhaseScalar(acc)

    def conjugate(self):
        """Complex conjugation: inverts every unit phase, conjugates coefficients."""
        return PhaseScalar({mono_inv(m): c.conjugate() for m, c in self.terms.items()})

    def inverse(self):
        if not self.is_invertible():
            raise ValueError("phase scalar %s is not a monomial unit" % self)
        ((m, c),) = self.terms.items()
        return PhaseScalar({mono_inv(m): c.inverse()})

    # -- predicates ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {MONO_ONE: GR_ONE}

    def is_invertible(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        return isinstance(other, PhaseScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation ----------------------------------------------------
    def eval(self, values):
        """Substitute q[j,k] -> exp(i*pi*values[(j,k)]) and return a complex.

        ``values`` maps each unit pair appearing in the scalar to a real
        number (Fraction or float).  Missing pairs raise ValueError.
        """
        total = 0j
        for m, c in self.terms.items():
            z = c.to_complex()
            for pair, e in m:
                if pair not in values:
                    raise ValueError("no numeric value for phase unit q[%d,%d]"
                                     % (pair[0] + 1, pair[1] + 1))
                z *= cmath.exp(1j * math.pi * float(values[pair]) * e)
            total += z
        return total

    def __repr__(self):
        return "PhaseScalar(%s)" % format_phase(self)

    def __str__(self):
        return format_phase(self)


PS_ZERO = PhaseScalar.zero()
PS_ONE = PhaseScalar.one()


def format_phase(ps):
    """Canonical serialization, terms ordered by monomial then printed as
    'coeff * q[j,k]^e * ...' with 1-based pair indices."""
    if not ps.terms:
        return "0"
    out = []
    for m in sorted(ps.terms, key=_mono_key):
        c = ps.terms[m]
        bits = [format_gaussian(c)]
        for (j, k), e in m:
            bits.append("q[%d,%d]^%d" % (j + 1, k + 1, e))
        out.append(" * ".join(bits))
    return " + ".join(out)


def _mono_key(m):
    return (len(m), m)


class ThetaMatrix:
    """Skew-symmetric deformation matrix over the grading Z^n.

    Each (j, k) entry with j < k is a rational linear form in the formal
    parameters t[u,v] attached to the phase units; the (k, j) entry is its
    negative and the diagonal vanishes.  The usual cases are the standard
    matrix (entry (j,k) equals t[j,k]) and the block matrix diag(t, -t)
    used when a bigraded algebra is deformed.
    """

    __slots__ = ("n", "forms")

    def __init__(self, n, forms=None):
        self.n = n
        cleaned = {}
        for (j, k), form in (forms or {}).items():
            if not (0 <= j < k < n):
                raise ValueError("matrix position (%d,%d) out of range" % (j, k))
            form = {u: Fraction(c) for u, c in form.items() if c}
            if form:
                cleaned[(j, k)] = form
        self.forms = cleaned

    @staticmethod
    def zero(n):
        return ThetaMatrix(n)

    @staticmethod
    def standard(n):
        """Generic skew matrix: entry (j,k) is the formal parameter t[j,k]."""
        return ThetaMatrix(n, {(j, k): {(j, k): Fraction(1)}
                               for j in range(n) for k in range(j + 1, n)})

    @staticmethod
    def block_opposite(n):
        """The 2n x 2n matrix diag(t, -t) over the standard n x n parameters."""
        forms = {}
        for j in range(n):
            for k in range(j + 1, n):
                forms[(j, k)] = {(j, k): Fraction(1)}
                forms[(n + j, n + k)] = {(j, k): Fraction(-1)}
        return ThetaMatrix(2 * n, forms)

    def negated(self):
        return ThetaMatrix(self.n, {pos: {u: -c for u, c in f.items()}
                                    for pos, f in self.forms.items()})

    def units(self):
        out = set()
        for form in self.forms.values():
            out.update(form)
        return sorted(out)

    def __eq__(self, other):
        return (isinstance(other, ThetaMatrix) and self.n == other.n
                and self.forms == other.forms)

    def __repr__(self):
        return "ThetaMatrix(n=%d, %r)" % (self.n, self.forms)


def cocycle_lambda(theta, r, l):
    """The bi-character lambda(r, l) = exp(i*pi*<r, theta l>) as a formal phase.

    Expanding the skew bilinear form gives the q[u,v]-exponent
    sum over j<k of theta[j,k]*(r_j*l_k - r_k*l_j); each contribution must be
    an integer (catalog matrices are scaled so this always holds).
    Satisfies lambda(r, +-r) = 1 and the 2-cocycle identity exactly.
    """
    if len(r) != theta.n or len(l) != theta.n:
        raise ValueError("degree vectors must have length %d" % theta.n)
    acc = {}
    for (j, k), form in theta.forms.items():
        m = r[j] * l[k] - r[k] * l[j]
        if not m:
            continue
        for unit, c in form.items():
            acc[unit] = acc.get(unit, Fraction(0)) + c * m
    mono = []
    for unit in sorted(acc):
        e = acc[unit]
        if e == 0:
            continue
        if e.denominator != 1:
            raise ValueError("non-integral phase exponent %s for unit q[%d,%d]"
                             % (e, unit[0] + 1, unit[1] + 1))
        mono.append((unit, int(e)))
    return PhaseScalar.monomial(tuple(mono))


def phase_mul(a, b):
    """Commutative exact product of two phase scalars."""
    return a * b


def phase_eval(a, values):
    """Numeric evaluation of a phase scalar; see PhaseScalar.eval."""
    return a.eval(values)


def values_from_matrix(matrix):
    """Unit values {(j,k): matrix[j][k]} from a numeric skew-symmetric matrix."""
    n = len(matrix)
    vals = {}
    for j in range(n):
        if len(matrix[j]) != n:
            raise ValueError("theta matrix must be square")
        for k in range(j + 1, n):
            if matrix[j][k] != -matrix[k][j]:
                raise ValueError("theta matrix must be skew-symmetric")
            vals[(j, k)] = matrix[j][k]
    return vals

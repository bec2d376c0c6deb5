"""Finitely presented graded *-algebras with phase commutation and rewriting.

A presentation consists of ordered generators with Z^m degrees and star
partners, a table of commutation phases (g*h = phase(g,h) * h*g for
generators out of order) and oriented rewrite rules whose left-hand sides
are words in sorted position.  Normal forms are computed by a fixed
strategy: bubble-sort adjacent out-of-order generators collecting phases,
then apply the leftmost shortest rule match and recurse.  Under the
degree-lexicographic word order both steps strictly decrease, so the
procedure terminates and is deterministic.

Equality of normal forms is a sound certificate for equality in the
algebra.  A non-zero residual is reported as INDETERMINATE (completeness
would need a confluence proof; ``check_overlaps`` monitors this), with an
optional numeric refutation that treats normal words as independent.
"""

from __future__ import annotations

import random

from .phases import PS_ONE, PhaseScalar, cocycle_lambda
from .report import CheckItem, CheckReport, EQUAL, INDETERMINATE, UNEQUAL_NUMERIC


class InhomogeneousInput(ValueError):
    """Raised when a single degree is required but components differ."""

    def __init__(self, degrees):
        self.degrees = sorted(degrees)
        super().__init__("inhomogeneous element, degrees found: %s" % (self.degrees,))


class Generator:
    __slots__ = ("name", "degree", "star", "index")

    def __init__(self, name, degree, star, index):
        self.name = name
        self.degree = tuple(degree)
        self.star = star
        self.index = index

    def __repr__(self):
        return "Generator(%r, deg=%s)" % (self.name, self.degree)


def add_deg(d1, d2):
    return tuple(a + b for a, b in zip(d1, d2))


def neg_deg(d):
    return tuple(-a for a in d)


class Presentation:
    """A finitely presented Z^m-graded *-algebra; immutable once frozen.

    ``gens`` is ordered: the list position is the generator's sort rank.
    Commutation phases default to the square of the deformation
    bi-character when ``theta`` is given (quantum affine space) and to 1
    otherwise; explicit phases may be supplied for special pairs.
    """

    def __init__(self, name, arity, gens, theta=None, phases=None):
        self.name = name
        self.arity = arity
        self.theta = theta
        self.gens = []
        self._by_name = {}
        for i, (gname, degree, star) in enumerate(gens):
            if len(degree) != arity:
                raise ValueError("degree of %s has arity %d, expected %d"
                                 % (gname, len(degree), arity))
            g = Generator(gname, degree, star, i)
            self.gens.append(g)
            self._by_name[gname] = g
        for g in self.gens:
            partner = self._by_name.get(g.star)
            if partner is None:
                raise ValueError("star partner %r of %r missing" % (g.star, g.name))
            if self._by_name[partner.star] is not g:
                raise ValueError("star is not an involution on %r" % g.name)
            if partner.degree != neg_deg(g.degree):
                raise ValueError("degree of %s* must be -degree of %s" % (g.name, g.name))
        self._phase = {}
        for i, g in enumerate(self.gens):
            for j, h in enumerate(self.gens):
                if i == j:
                    continue
                if phases and (g.name, h.name) in phases:
                    ph = phases[(g.name, h.name)]
                elif theta is not None:
                    ph = cocycle_lambda(theta, g.degree, h.degree)
                    ph = ph * ph
                else:
                    ph = PS_ONE
                self._phase[(i, j)] = ph
        for i in range(len(self.gens)):
            for j in range(i):
                if not (self._phase[(i, j)] * self._phase[(j, i)]).is_one():
                    raise ValueError("commutation phases of (%s,%s) do not invert"
                                     % (self.gens[i].name, self.gens[j].name))
        self.rules = {}
        self._rule_lengths = ()
        self._frozen = False
        self._nf_cache = {}
        self._word_deg_cache = {}

    # -- construction --------------------------------------------------
    @staticmethod
    def commutative(name, arity, gens):
        return Presentation(name, arity, gens)

    def freeze(self):
        self._frozen = True
        return self

    def add_rule(self, lhs, rhs):
        """Install an oriented rule lhs -> rhs; lhs must be sorted and larger."""
        if self._frozen:
            raise RuntimeError("presentation %s is frozen" % self.name)
        lhs = tuple(lhs)
        coeff, sw = self.sort_word(lhs)
        if sw != lhs or not coeff.is_one():
            raise ValueError("rule left-hand side %s is not in sorted position"
                             % self.word_str(lhs))
        if lhs in self.rules:
            raise ValueError("duplicate rule for %s" % self.word_str(lhs))
        ldeg = self.word_degree(lhs)
        for w in rhs.terms:
            if word_key(w) >= word_key(lhs):
                raise ValueError("rule for %s does not decrease the word order"
                                 % self.word_str(lhs))
            if self.word_degree(w) != ldeg:
                raise ValueError("rule for %s is not degree-homogeneous"
                                 % self.word_str(lhs))
        self.rules[lhs] = rhs
        self._rule_lengths = tuple(sorted({len(w) for w in self.rules}))
        self._nf_cache.clear()

    # -- lookup ----------------------------------------------------------
    def gen_index(self, name):
        return self._by_name[name].index

    def generator(self, name):
        return self._by_name[name]

    def word_degree(self, w):
        d = self._word_deg_cache.get(w)
        if d is None:
            d = (0,) * self.arity
            for i in w:
                d = add_deg(d, self.gens[i].degree)
            self._word_deg_cache[w] = d
        return d

    def word_str(self, w):
        if not w:
            return "1"
        return ".".join(self.gens[i].name for i in w)

    # -- element constructors --------------------------------------------
    def zero(self):
        return NCPoly(self, {})

    def one(self):
        return NCPoly(self, {(): PS_ONE})

    def gen(self, name):
        return NCPoly(self, {(self._by_name[name].index,): PS_ONE})

    def poly(self, terms):
        """Build (and normalize) sum of (coeff, [generator names]) terms."""
        acc = self.zero()
        for coeff, names in terms:
            if isinstance(coeff, int):
                coeff = PhaseScalar.from_int(coeff)
            w = tuple(self._by_name[n].index for n in names)
            acc = acc + NCPoly.from_raw(self, {w: coeff})
        return acc

    # -- normal forms ------------------------------------------------------
    def sort_word(self, w, trace=None):
        """Order the word by generator rank, collecting commutation phases."""
        word = list(w)
        coeff = PS_ONE
        n = len(word)
        for i in range(1, n):
            j = i
            while j > 0 and word[j - 1] > word[j]:
                a, b = word[j - 1], word[j]
                coeff = coeff * self._phase[(a, b)]
                word[j - 1], word[j] = b, a
                if trace is not None:
                    trace.append("swap %s<->%s phase %s" %
                                 (self.gens[a].name, self.gens[b].name,
                                  self._phase[(a, b)]))
                j -= 1
        return coeff, tuple(word)

    def nf_word(self, w, trace=None):
        """Normal form of a raw word as an NCPoly term dictionary."""
        coeff, sw = self.sort_word(w, trace)
        res = self._nf_sorted(sw, trace)
        if coeff.is_one():
            return dict(res)
        return {word: coeff * c for word, c in res.items()}

    def _nf_sorted(self, sw, trace=None):
        if trace is None:
            cached = self._nf_cache.get(sw)
            if cached is not None:
                return cached
        hit = self._find_rule(sw)
        if hit is None:
            result = {sw: PS_ONE}
        else:
            i, lhs = hit
            if trace is not None:
                trace.append("rewrite %s at position %d in %s" %
                             (self.word_str(lhs), i, self.word_str(sw)))
            prefix, suffix = sw[:i], sw[i + len(lhs):]
            result = {}
            for rw, rc in self.rules[lhs].terms.items():
                for word, c in self.nf_word(prefix + rw + suffix, trace).items():
                    v = result.get(word)
                    v = rc * c if v is None else v + rc * c
                    if v.is_zero():
                        result.pop(word, None)
                    else:
                        result[word] = v
        if trace is None:
            self._nf_cache[sw] = result
        return result

    def _find_rule(self, sw):
        n = len(sw)
        for i in range(n):
            for L in self._rule_lengths:
                if i + L > n:
                    break
                cand = sw[i:i + L]
                if cand in self.rules:
                    return i, cand
        return None

    def __repr__(self):
        return "Presentation(%r, %d generators, %d rules)" % (
            self.name, len(self.gens), len(self.rules))


def word_key(w):
    return (len(w), w)


class NCPoly:
    """Normal-form noncommutative polynomial over a fixed presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms

    @staticmethod
    def from_raw(pres, raw_terms, trace=None):
        """Normalize a {word: coeff} dictionary of not-yet-reduced words."""
        acc = {}
        for w, coeff in raw_terms.items():
            if coeff.is_zero():
                continue
            for word, c in pres.nf_word(w, trace).items():
                v = acc.get(word)
                v = coeff * c if v is None else v + coeff * c
                if v.is_zero():
                    acc.pop(word, None)
                else:
                    acc[word] = v
        return NCPoly(pres, acc)

    # -- vector space ----------------------------------------------------
    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            v = acc.get(w)
            v = c if v is None else v + c
            if v.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = v
        return NCPoly(self.pres, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCPoly(self.pres, {w: -c for w, c in self.terms.items()})

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = PhaseScalar.from_int(coeff)
        if coeff.is_zero():
            return NCPoly(self.pres, {})
        return NCPoly(self.pres, {w: coeff * c for w, c in self.terms.items()})

    # -- algebra -----------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, (int, PhaseScalar)):
            return self.scale(other)
        self._check(other)
        raw = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = raw.get(w)
                raw[w] = c if v is None else v + c
        return NCPoly.from_raw(self.pres, raw)

    def __rmul__(self, other):
        if isinstance(other, (int, PhaseScalar)):
            return self.scale(other)
        return NotImplemented

    def star(self):
        """Antilinear anti-homomorphism from the generator star partners."""
        p = self.pres
        raw = {}
        for w, c in self.terms.items():
            sw = tuple(p.gens[i].star for i in reversed(w))
            sw = tuple(p.gen_index(nm) for nm in sw)
            cc = c.conjugate()
            v = raw.get(sw)
            raw[sw] = cc if v is None else v + cc
        return NCPoly.from_raw(p, raw)

    # -- structure -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Common degree of a non-zero homogeneous element."""
        if not self.terms:
            raise ValueError("degree of zero is undefined")
        degs = {self.pres.word_degree(w) for w in self.terms}
        if len(degs) > 1:
            raise InhomogeneousInput(degs)
        return degs.pop()

    def homogeneous_components(self):
        comps = {}
        for w, c in self.terms.items():
            d = self.pres.word_degree(w)
            comps.setdefault(d, {})[w] = c
        return {d: NCPoly(self.pres, t) for d, t in comps.items()}

    def coefficients(self):
        return list(self.terms.values())

    def __eq__(self, other):
        return (isinstance(other, NCPoly) and self.pres is other.pres
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.pres), frozenset(
            (w, frozenset(c.terms.items())) for w, c in self.terms.items())))

    def _check(self, other):
        if self.pres is not other.pres:
            raise ValueError("mixing elements of %s and %s"
                             % (self.pres.name, other.pres.name))

    def __repr__(self):
        from .textform import format_poly
        return format_poly(self)


def normal_form(pres, x, trace=None):
    """Normal form of an NCPoly or raw {word: coeff} expression."""
    if isinstance(x, NCPoly):
        return NCPoly.from_raw(pres, x.terms, trace)
    return NCPoly.from_raw(pres, x, trace)


def equals(x, y, numeric=None, tol=1e-6):
    """Verdict on x = y: EQUAL if the difference normalizes to zero.

    Otherwise INDETERMINATE, upgraded to UNEQUAL_NUMERIC when ``numeric``
    (unit-value mapping) makes some residual coefficient exceed ``tol``;
    the upgrade reads normal words as linearly independent, which is the
    PBW-style assumption monitored by ``check_overlaps``.
    """
    diff = x - y
    if diff.is_zero():
        return EQUAL
    if numeric is not None:
        worst = max(abs(c.eval(numeric)) for c in diff.terms.values())
        if worst > tol:
            return UNEQUAL_NUMERIC
    return INDETERMINATE


def degree_of(pres, x):
    if isinstance(x, NCPoly):
        return x.degree()
    return normal_form(pres, x).degree()


def star(pres, x):
    return x.star()


def install_relations(pres, equations, max_passes=8):
    """Orient raw relations (poly = 0) into rewrite rules.

    Each equation is reduced by the rules installed so far; a non-zero
    residue is oriented to eliminate its largest word, whose coefficient
    must be an invertible phase.  Passes repeat until every input reduces
    to zero, so redundant and mutually reducible inputs are welcome.
    """
    pending = list(equations)
    for _ in range(max_passes):
        again = []
        for eq in pending:
            res = normal_form(pres, eq)
            if res.is_zero():
                continue
            lead = max(res.terms, key=word_key)
            coeff = res.terms[lead]
            if not coeff.is_invertible():
                raise ValueError("cannot orient relation with leading coefficient %s"
                                 % coeff)
            rest = NCPoly(pres, {w: c for w, c in res.terms.items() if w != lead})
            pres.add_rule(lead, (-rest).scale(coeff.inverse()))
            again.append(eq)
        if not again:
            return
        pending = again
    leftover = [eq for eq in pending if not normal_form(pres, eq).is_zero()]
    if leftover:
        raise RuntimeError("relation installation did not stabilize")


def complete_overlaps(pres, max_len=12, rounds=40):
    """Resolve critical-pair mismatches by installing oriented differences.

    Runs check_overlaps up to ``max_len`` and, for every overlap whose two
    branches reduce differently, orients the difference into a new rule;
    repeats until no mismatch remains (or ``rounds`` is exhausted, which
    raises).  Because every rule is degree-homogeneous, the same completed
    system stays confluent after twisting by a bi-character.
    """
    for _ in range(rounds):
        mismatches = []
        rules = sorted(pres.rules, key=word_key)
        for l1 in rules:
            for l2 in rules:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[len(l1) - k:] != l2[:k]:
                        continue
                    u = l1 + l2[k:]
                    if len(u) > max_len:
                        continue
                    d = (_apply_rule_at(pres, u, l1, 0)
                         - _apply_rule_at(pres, u, l2, len(l1) - k))
                    if not d.is_zero():
                        mismatches.append(d)
                if l1 != l2 and len(l2) < len(l1) <= max_len:
                    for i in range(len(l1) - len(l2) + 1):
                        if l1[i:i + len(l2)] == l2:
                            d = (_apply_rule_at(pres, l1, l1, 0)
                                 - _apply_rule_at(pres, l1, l2, i))
                            if not d.is_zero():
                                mismatches.append(d)
        if not mismatches:
            return
        install_relations(pres, mismatches)
    raise RuntimeError("overlap completion did not stabilize for %s"
                       % pres.name)


def check_overlaps(pres, max_len, suite="overlaps"):
    """Reduce both branches of every critical overlap of rule pairs.

    Covers suffix-prefix compositions and containments up to ``max_len``
    letters.  A branch mismatch is a local-confluence warning reported as
    INDETERMINATE; it does not abort.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    items = []
    rules = sorted(pres.rules, key=word_key)
    seen = set()
    for l1 in rules:
        for l2 in rules:
            # suffix of l1 = prefix of l2 (proper, non-empty overlap)
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k:] != l2[:k]:
                    continue
                u = l1 + l2[k:]
                if len(u) > max_len or (u, len(l1) - k) in seen:
                    continue
                seen.add((u, len(l1) - k))
                items.append(_overlap_item(pres, suite, u, l1, 0, l2, len(l1) - k))
            # containment: l2 inside l1
            if l1 != l2 and len(l2) < len(l1) <= max_len:
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2:
                        items.append(_overlap_item(pres, suite, l1, l1, 0, l2, i))
    return CheckReport(suite, items)


def _overlap_item(pres, suite, u, l1, i1, l2, i2):
    b1 = _apply_rule_at(pres, u, l1, i1)
    b2 = _apply_rule_at(pres, u, l2, i2)
    verdict = EQUAL if b1 == b2 else INDETERMINATE
    ident = "overlap:%s@%d/%s@%d in %s" % (
        pres.word_str(l1), i1, pres.word_str(l2), i2, pres.word_str(u))
    residual = [] if verdict == EQUAL else (b1 - b2).coefficients()
    return CheckItem(ident, "local confluence diagnostic", verdict,
                     residuals=residual)


def _apply_rule_at(pres, u, lhs, i):
    raw = {}
    prefix, suffix = u[:i], u[i + len(lhs):]
    for rw, rc in pres.rules[lhs].terms.items():
        w = prefix + rw + suffix
        v = raw.get(w)
        raw[w] = rc if v is None else v + rc
    return NCPoly.from_raw(pres, raw)


def random_element(pres, rng, max_len=3, n_terms=2, homogeneous=False):
    """Random element for property tests; homogeneous words share a degree."""
    words = []
    tries = 0
    while len(words) < n_terms and tries < 50 * n_terms:
        tries += 1
        w = tuple(rng.randrange(len(pres.gens))
                  for _ in range(rng.randint(0, max_len)))
        if homogeneous and words and (
                pres.word_degree(w) != pres.word_degree(words[0])):
            continue
        words.append(w)
    raw = {}
    for w in words:
        c = PhaseScalar.from_int(rng.randint(1, 3))
        if rng.random() < 0.4:
            c = c * PhaseScalar.i()
        v = raw.get(w)
        raw[w] = c if v is None else v + c
    return NCPoly.from_raw(pres, raw)

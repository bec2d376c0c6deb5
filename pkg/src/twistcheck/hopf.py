"""Coalgebra and Hopf-algebra layer over presented algebras.

Structure maps are stored on generators only: the coproduct as a two-slot
tensor, the counit as a phase constant, the antipode as a polynomial.
Extension is lazy and memoized per word - multiplicatively for the
coproduct and counit, anti-multiplicatively for the antipode - with all
leg products taken in the presentation itself (which for a deformed Hopf
algebra is the twisted product; the same generator tables serve the
algebra and its twist, only the leg multiplication differs).

The check suites verify the Hopf axioms and, for bigraded presentations,
the four grading compatibility conditions of the structure maps.
"""

from __future__ import annotations

import random

from .algebra import NCPoly, add_deg, neg_deg, normal_form, random_element
from .phases import PS_ONE, PS_ZERO, PhaseScalar
from .report import CheckItem, CheckReport, EQUAL, INDETERMINATE
from .tensors import PLAIN, TensorExpr


class StructureTable:
    """Generator tables for coproduct, counit and antipode on one algebra."""

    def __init__(self, pres, coproduct_of, counit_of, antipode_of):
        self.pres = pres
        self.coproduct_of = {}
        self.counit_of = {}
        self.antipode_of = {}
        for name, te in coproduct_of.items():
            idx = pres.gen_index(name)
            if te.slots != (pres, pres) or te.bounds != (PLAIN,):
                raise ValueError("coproduct of %s must live in H (x) H" % name)
            self.coproduct_of[idx] = te
        for name, c in counit_of.items():
            if isinstance(c, int):
                c = PhaseScalar.from_int(c)
            self.counit_of[pres.gen_index(name)] = c
        for name, poly in antipode_of.items():
            self.antipode_of[pres.gen_index(name)] = poly
        missing = [g.name for g in pres.gens
                   if g.index not in self.coproduct_of
                   or g.index not in self.counit_of
                   or g.index not in self.antipode_of]
        if missing:
            raise ValueError("structure tables missing generators: %s" % missing)
        self._cop_cache = {}
        self._counit_cache = {}
        self._antipode_cache = {}

    # -- extensions ------------------------------------------------------
    def coproduct_word(self, w):
        cached = self._cop_cache.get(w)
        if cached is not None:
            return cached
        p = self.pres
        if not w:
            out = TensorExpr.of([p.one(), p.one()])
        else:
            out = self.coproduct_of[w[0]]
            for idx in w[1:]:
                out = out.mul(self.coproduct_of[idx])
        self._cop_cache[w] = out
        return out

    def coproduct(self, x):
        """Algebra-map extension of the generator table to H (x) H."""
        out = TensorExpr(( self.pres, self.pres), (PLAIN,))
        for w, c in x.terms.items():
            out = out + self.coproduct_word(w).scale(c)
        return out

    def counit_word(self, w):
        cached = self._counit_cache.get(w)
        if cached is None:
            cached = PS_ONE
            for idx in w:
                cached = cached * self.counit_of[idx]
            self._counit_cache[w] = cached
        return cached

    def counit(self, x):
        total = PS_ZERO
        for w, c in x.terms.items():
            total = total + c * self.counit_word(w)
        return total

    def antipode_word(self, w):
        cached = self._antipode_cache.get(w)
        if cached is None:
            p = self.pres
            cached = p.one()
            for idx in reversed(w):
                cached = cached * self.antipode_of[idx]
            self._antipode_cache[w] = cached
        return cached

    def antipode(self, x):
        """Anti-algebra-map extension; linear over the phase ring."""
        out = self.pres.zero()
        for w, c in x.terms.items():
            out = out + self.antipode_word(w).scale(c)
        return out


def coproduct(table, x):
    return table.coproduct(x)


def counit(table, x):
    return table.counit(x)


def antipode(table, x):
    return table.antipode(x)


# ---------------------------------------------------------------------------
# check suites
# ---------------------------------------------------------------------------

def _eq_item(ident, anchor, lhs, rhs):
    diff = lhs - rhs
    ok = diff.is_zero()
    res = [] if ok else (diff.coefficients() if isinstance(diff, NCPoly)
                         else list(diff.terms.values()))
    return CheckItem(ident, anchor, EQUAL if ok else INDETERMINATE,
                     residuals=res)


def check_hopf_axioms(table, depth=2, rng=None, suite="hopf-axioms"):
    """Coassociativity, counit and antipode laws, and multiplicativity of
    the coproduct for the presentation's (possibly twisted) product.

    Runs on every generator and on random words up to length ``depth``.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    p = table.pres
    rng = rng or random.Random(23)
    samples = [(g.name, NCPoly(p, {(g.index,): PS_ONE})) for g in p.gens]
    for t in range(12):
        k = rng.randint(2, max(2, depth))
        w = tuple(rng.randrange(len(p.gens)) for _ in range(k))
        samples.append(("word:%s" % p.word_str(w),
                        NCPoly.from_raw(p, {w: PS_ONE})))
    items = []
    for label, x in samples:
        if x.is_zero():
            continue
        dx = table.coproduct(x)
        if dx.is_zero():
            items.append(CheckItem("coassoc:%s" % label,
                                   "coproduct is coassociative",
                                   EQUAL if table.counit(x).is_zero()
                                   and x.is_zero() else INDETERMINATE))
            continue
        # (Delta (x) id) Delta = (id (x) Delta) Delta
        lhs = dx.apply_slot(0, lambda w: table.coproduct_word(w))
        rhs = dx.apply_slot(1, lambda w: table.coproduct_word(w))
        items.append(_eq_item("coassoc:%s" % label,
                              "coproduct is coassociative", lhs, rhs))
        # counit laws
        left = p.zero()
        right = p.zero()
        for words, c in dx.terms.items():
            left = left + NCPoly(p, {words[1]: PS_ONE}).scale(
                c * table.counit_word(words[0]))
            right = right + NCPoly(p, {words[0]: PS_ONE}).scale(
                c * table.counit_word(words[1]))
        items.append(_eq_item("counit-left:%s" % label,
                              "(eps (x) id) Delta = id", left, x))
        items.append(_eq_item("counit-right:%s" % label,
                              "(id (x) eps) Delta = id", right, x))
        # antipode laws: m(S (x) id)Delta = eps(x) 1 = m(id (x) S)Delta
        eps1 = p.one().scale(table.counit(x))
        sl = p.zero()
        sr = p.zero()
        for words, c in dx.terms.items():
            a = table.antipode_word(words[0]) * NCPoly(p, {words[1]: PS_ONE})
            b = NCPoly(p, {words[0]: PS_ONE}) * table.antipode_word(words[1])
            sl = sl + a.scale(c)
            sr = sr + b.scale(c)
        items.append(_eq_item("antipode-left:%s" % label,
                              "S(h_(1)) h_(2) = eps(h) 1", sl, eps1))
        items.append(_eq_item("antipode-right:%s" % label,
                              "h_(1) S(h_(2)) = eps(h) 1", sr, eps1))
    # multiplicativity of Delta for the presentation product
    for t in range(10):
        x = random_element(p, rng, max_len=depth, n_terms=2)
        y = random_element(p, rng, max_len=depth, n_terms=2)
        lhs = table.coproduct(x * y)
        rhs = table.coproduct(x).mul(table.coproduct(y))
        items.append(_eq_item("delta-multiplicative:%d" % t,
                              "Delta(x y) = Delta(x) Delta(y) with twisted legs",
                              lhs, rhs))
    return CheckReport(suite, items)


def split_bidegree(deg):
    n = len(deg) // 2
    return deg[:n], deg[n:]


def check_bigrading(table, suite="bigrading"):
    """Grading compatibility of product, coproduct, counit, antipode, star.

    For a bigraded presentation (even arity, degree = (r, l)):
    products add bidegrees; Delta(g) lands in sum_s H_(r,s) (x) H_(s,l);
    eps kills off-diagonal generators; S maps (r,l) to (-l,-r); star
    negates the bidegree.  Checked on generators and on quadratic words.
    """
    p = table.pres
    if p.arity % 2:
        raise ValueError("bigrading checks need an even grading arity")
    items = []
    for g in p.gens:
        r, l = split_bidegree(g.degree)
        ok = True
        for words, _ in table.coproduct_of[g.index].terms.items():
            d1 = split_bidegree(p.word_degree(words[0]))
            d2 = split_bidegree(p.word_degree(words[1]))
            if d1[0] != r or d2[1] != l or d1[1] != d2[0]:
                ok = False
        items.append(CheckItem(
            "coproduct-shape:%s" % g.name,
            "Delta(H_(r,l)) inside sum_s H_(r,s) (x) H_(s,l)",
            EQUAL if ok else INDETERMINATE))
        eps_ok = (r == l) or table.counit_of[g.index].is_zero()
        items.append(CheckItem(
            "counit-diagonal:%s" % g.name,
            "counit vanishes off the diagonal grading",
            EQUAL if eps_ok else INDETERMINATE))
        sg = table.antipode_of[g.index]
        s_ok = sg.is_zero() or sg.degree() == tuple(-v for v in (l + r))
        items.append(CheckItem(
            "antipode-degree:%s" % g.name,
            "S maps degree (r,l) to (-l,-r)",
            EQUAL if s_ok else INDETERMINATE))
        star_ok = p.gens[p.gen_index(g.star)].degree == neg_deg(g.degree)
        items.append(CheckItem(
            "star-degree:%s" % g.name,
            "star maps degree (r,l) to (-r,-l)",
            EQUAL if star_ok else INDETERMINATE))
    # product bidegree additivity on quadratic words (rules preserve degree)
    bad = []
    for i, g in enumerate(p.gens):
        for j, h in enumerate(p.gens):
            w = (i, j) if i <= j else (j, i)
            prod = NCPoly.from_raw(p, {w: PS_ONE})
            want = add_deg(g.degree, h.degree) if i <= j else add_deg(h.degree, g.degree)
            for word in prod.terms:
                if p.word_degree(word) != want:
                    bad.append(p.word_str(w))
    items.append(CheckItem(
        "product-bidegree", "multiplication adds bidegrees on quadratic words",
        EQUAL if not bad else INDETERMINATE))
    return CheckReport(suite, items)

"""Deformation of graded algebras by a skew bi-character.

The twisted product of homogeneous elements multiplies the plain product
by lambda(deg x, deg y); associativity is exactly the 2-cocycle identity
of the bi-character.  Scenario I deforms a Z^n-graded comodule algebra
while the structure Hopf algebra keeps its trivial grading; scenario II
deforms a bigraded Hopf algebra with the block matrix diag(theta,-theta),
whose bi-character factorizes over the two gradings.

A deformed algebra is realized as a new presentation on the same word
basis: commutation phases pick up lambda^2 and every rule right-hand side
is rescaled by the ratio of word twists, so normal forms in the deformed
algebra are first class.
"""

from __future__ import annotations

import random
import time

from .algebra import NCPoly, Presentation, normal_form
from .phases import PS_ONE, ThetaMatrix, cocycle_lambda
from .report import CheckItem, CheckReport, EQUAL, INDETERMINATE


class DeformationContext:
    """Scenario tag plus the effective deformation matrix.

    Scenario I uses an n x n matrix acting on a Z^n grading; scenario II
    an effective 2n x 2n matrix diag(theta, -theta) on the bigrading.
    """

    __slots__ = ("scenario", "theta")

    def __init__(self, scenario, theta):
        if scenario not in ("I", "II"):
            raise ValueError("scenario must be 'I' or 'II'")
        if scenario == "II" and theta.n % 2:
            raise ValueError("scenario II needs an even grading arity")
        self.scenario = scenario
        self.theta = theta

    @property
    def arity(self):
        return self.theta.n

    @staticmethod
    def scenario_one(n, formal=True):
        return DeformationContext(
            "I", ThetaMatrix.standard(n) if formal else ThetaMatrix.zero(n))

    @staticmethod
    def scenario_two(n, formal=True):
        return DeformationContext(
            "II", ThetaMatrix.block_opposite(n) if formal
            else ThetaMatrix.zero(2 * n))

    def cocycle(self, r, l):
        return cocycle_lambda(self.theta, r, l)

    def __repr__(self):
        return "DeformationContext(%s, n=%d)" % (self.scenario, self.theta.n)


def deform_product(ctx, pres, x, y):
    """Twisted product: sum of lambda(deg x_r, deg y_l) * nf(x_r y_l)."""
    if pres.arity != ctx.arity:
        raise ValueError("grading arity %d does not match context arity %d"
                         % (pres.arity, ctx.arity))
    raw = {}
    for w1, c1 in x.terms.items():
        d1 = pres.word_degree(w1)
        for w2, c2 in y.terms.items():
            lam = ctx.cocycle(d1, pres.word_degree(w2))
            c = c1 * c2 * lam
            w = w1 + w2
            v = raw.get(w)
            raw[w] = c if v is None else v + c
    return NCPoly.from_raw(pres, raw)


def word_twist(ctx, pres, w):
    """Phase relating a basis word to the twisted product of its letters:
    g1 *_theta ... *_theta gk = word_twist(w) * (g1...gk)."""
    lam = PS_ONE
    if len(w) < 2:
        return lam
    degs = [pres.gens[i].degree for i in w]
    acc = degs[0]
    for d in degs[1:]:
        lam = lam * ctx.cocycle(acc, d)
        acc = tuple(a + b for a, b in zip(acc, d))
    return lam


def deformed_presentation(ctx, pres, name=None):
    """The twisted algebra as a presentation on the unchanged word basis.

    Commutation phases are multiplied by lambda(deg g, deg h)^2 and a rule
    w -> sum c_v v becomes w -> sum (twist(w)/twist(v)) c_v v, which is the
    original relation re-expressed in twisted products.
    """
    if pres.arity != ctx.arity:
        raise ValueError("grading arity mismatch")
    phases = {}
    for i, g in enumerate(pres.gens):
        for j, h in enumerate(pres.gens):
            if i == j:
                continue
            lam = ctx.cocycle(g.degree, h.degree)
            phases[(g.name, h.name)] = pres._phase[(i, j)] * lam * lam
    out = Presentation(name or pres.name + "~",
                       pres.arity,
                       [(g.name, g.degree, g.star) for g in pres.gens],
                       theta=None, phases=phases)
    out.theta = ctx.theta
    for lhs, rhs in sorted(pres.rules.items(), key=lambda kv: (len(kv[0]), kv[0])):
        tw = word_twist(ctx, pres, lhs)
        new_terms = {}
        for v, c in rhs.terms.items():
            new_terms[v] = c * tw * word_twist(ctx, pres, v).inverse()
        out.add_rule(lhs, NCPoly(out, new_terms))
    return out.freeze()


def check_same_degree_product(ctx, pres, samples, rng=None, suite="deform-same-degree"):
    """Twisted and plain products agree on same- or opposite-degree pairs.

    Samples homogeneous pairs with deg a + deg b = 0 or deg a - deg b = 0
    (plus pairs whose product lands in degree zero) and asserts exact
    agreement of deform_product with the plain product.
    """
    rng = rng or random.Random(7)
    items = []
    gens = pres.gens
    found = 0
    tries = 0
    while found < samples and tries < 200 * samples:
        tries += 1
        k1 = rng.randint(1, 2)
        w1 = tuple(rng.randrange(len(gens)) for _ in range(k1))
        d1 = pres.word_degree(w1)
        opp = rng.random() < 0.5
        target = tuple(-v for v in d1) if opp else d1
        w2 = _search_word(pres, rng, target)
        if w2 is None:
            continue
        found += 1
        a = NCPoly.from_raw(pres, {w1: PS_ONE})
        b = NCPoly.from_raw(pres, {w2: PS_ONE})
        twisted = deform_product(ctx, pres, a, b)
        plain = a * b
        verdict = EQUAL if twisted == plain else INDETERMINATE
        items.append(CheckItem(
            "same-degree:%s|%s" % (pres.word_str(w1), pres.word_str(w2)),
            "twisted product equals plain product on degree-cancelling pairs",
            verdict,
            residuals=[] if verdict == EQUAL else (twisted - plain).coefficients()))
    return CheckReport(suite, items)


def _search_word(pres, rng, target, max_len=3, tries=60):
    for _ in range(tries):
        k = rng.randint(1, max_len)
        w = tuple(rng.randrange(len(pres.gens)) for _ in range(k))
        if pres.word_degree(w) == target:
            return w
    return None

"""Comodule algebras, coinvariants, the canonical Galois map and the
translation map with its property suite.

Equality across a balanced tensor boundary is decided by transport along
the canonical map: a balanced pair (u (x)_B v) is rewritten to
(u v_(0) (x) v_(1)), which is invariant under sliding a coinvariant
factor across the boundary and injective on the ambient balanced module
because the extension is Hopf-Galois.  After all balanced boundaries are
transported, slotwise normal forms decide equality outright.
"""

from __future__ import annotations

from .algebra import NCPoly, add_deg, neg_deg
from .deform import deform_product
from .phases import PS_ONE, PS_ZERO, PhaseScalar
from .report import CheckItem, CheckReport, EQUAL, INDETERMINATE, UNEQUAL_NUMERIC
from .tensors import BALANCED, PLAIN, TensorExpr


class ComoduleAlgebra:
    """A comodule algebra: total algebra A, structure Hopf algebra H with
    its tables, the generator coaction, and the coinvariant base data."""

    def __init__(self, total, hopf, hopf_table, coaction_of, base_generators):
        self.A = total
        self.H = hopf
        self.table = hopf_table
        self.coaction_of = {}
        for name, te in coaction_of.items():
            idx = total.gen_index(name)
            if te.slots != (total, hopf) or te.bounds != (PLAIN,):
                raise ValueError("coaction of %s must live in A (x) H" % name)
            self.coaction_of[idx] = te
        missing = [g.name for g in total.gens if g.index not in self.coaction_of]
        if missing:
            raise ValueError("coaction table missing generators: %s" % missing)
        self.base_generators = dict(base_generators)
        self._coact_cache = {}

    # -- coaction ---------------------------------------------------------
    def coact_word(self, w):
        cached = self._coact_cache.get(w)
        if cached is not None:
            return cached
        if not w:
            out = TensorExpr.of([self.A.one(), self.H.one()])
        else:
            out = self.coaction_of[w[0]]
            for idx in w[1:]:
                out = out.mul(self.coaction_of[idx])
        self._coact_cache[w] = out
        return out

    def coaction(self, x):
        """Multiplicative extension of the generator coaction table.

        The H-leg multiplies in H's own presentation, which for a deformed
        structure Hopf algebra is the twisted product.
        """
        out = TensorExpr((self.A, self.H), (PLAIN,))
        for w, c in x.terms.items():
            out = out + self.coact_word(w).scale(c)
        return out

    def base_polys(self):
        return dict(self.base_generators)


def is_coinvariant(ca, x, numeric=None, tol=1e-6):
    """EQUAL iff coaction(x) - x (x) 1 normalizes to zero."""
    delta = ca.coaction(x)
    ref = TensorExpr.make((ca.A, ca.H), (PLAIN,), [(PS_ONE, [x, ca.H.one()])])
    diff = delta - ref
    if diff.is_zero():
        return EQUAL
    if numeric is not None:
        worst = max(abs(c.eval(numeric)) for c in diff.terms.values())
        if worst > tol:
            return UNEQUAL_NUMERIC
    return INDETERMINATE


def resolve_balanced(ca, te, trace=None):
    """Transport every balanced boundary along the canonical map.

    Boundaries are processed right to left; each (u (x)_B v) with both
    slots in A becomes (u v_(0) (x) v_(1)) with a new H slot.  The result
    has only plain boundaries, where term dictionaries decide equality.
    """
    while True:
        pos = None
        for i in range(len(te.bounds) - 1, -1, -1):
            if te.bounds[i] == BALANCED:
                pos = i
                break
        if pos is None:
            return te
        if te.slots[pos] is not ca.A or te.slots[pos + 1] is not ca.A:
            raise ValueError("balanced boundary %d does not join two A slots" % pos)
        out = TensorExpr(te.slots[:pos + 1] + (ca.H,) + te.slots[pos + 2:],
                         te.bounds[:pos] + (PLAIN,) + te.bounds[pos + 1:])
        for words, c in te.terms.items():
            u, v = words[pos], words[pos + 1]
            for (v0, v1), cc in ca.coact_word(v).terms.items():
                prod = NCPoly.from_raw(ca.A, {u + v0: PS_ONE})
                for pw, pc in prod.terms.items():
                    new = words[:pos] + (pw, v1) + words[pos + 2:]
                    coeff = c * cc * pc
                    old = out.terms.get(new)
                    old = coeff if old is None else old + coeff
                    if old.is_zero():
                        out.terms.pop(new, None)
                    else:
                        out.terms[new] = old
        if trace is not None:
            trace.append("transport balanced boundary %d via the canonical map"
                         % pos)
        te = out


def balanced_equal(ca, lhs, rhs, numeric=None, tol=1e-6, trace=None):
    """Verdict on equality of two tensors after transporting balances."""
    l = resolve_balanced(ca, lhs, trace)
    r = resolve_balanced(ca, rhs, trace)
    diff = l - r
    if trace is not None:
        trace.append("residual: %r" % (diff,))
    if diff.is_zero():
        return EQUAL, []
    residuals = list(diff.terms.values())
    if numeric is not None:
        worst = max(abs(c.eval(numeric)) for c in residuals)
        if worst > tol:
            return UNEQUAL_NUMERIC, residuals
    return INDETERMINATE, residuals


def canonical_map(ca, te, ctx=None):
    """chi = (m (x) id)(id (x)_B coaction) on a two-slot balanced tensor.

    With ``ctx`` the slot product is the twisted one; on translation-map
    values both give the same answer since the legs have opposite degree.
    """
    if te.slots != (ca.A, ca.A) or te.bounds != (BALANCED,):
        raise ValueError("canonical map expects A (x)_B A")
    if ctx is None:
        return resolve_balanced(ca, te)
    out = TensorExpr((ca.A, ca.H), (PLAIN,))
    for (u, v), c in te.terms.items():
        for (v0, v1), cc in ca.coact_word(v).terms.items():
            up = NCPoly(ca.A, {u: PS_ONE})
            vp = NCPoly(ca.A, {v0: PS_ONE})
            prod = deform_product(ctx, ca.A, up, vp)
            hleg = NCPoly(ca.H, {v1: PS_ONE})
            out = out + TensorExpr.make(
                (ca.A, ca.H), (PLAIN,), [(c * cc, [prod, hleg])])
    return out


class TranslationTable:
    """Generator values of the translation map tau: H -> A (x)_B A,
    extended anti-multiplicatively by tau(hk) = k<1>h<1> (x)_B h<2>k<2>."""

    def __init__(self, ca, tau_of):
        self.ca = ca
        self.tau_of = {}
        for name, te in tau_of.items():
            idx = ca.H.gen_index(name)
            if te.slots != (ca.A, ca.A) or te.bounds != (BALANCED,):
                raise ValueError("tau(%s) must live in A (x)_B A" % name)
            self.tau_of[idx] = te
        missing = [g.name for g in ca.H.gens if g.index not in self.tau_of]
        if missing:
            raise ValueError("translation table missing generators: %s" % missing)
        self._cache = {}

    def tau_word(self, w):
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        ca = self.ca
        if not w:
            out = TensorExpr.of([ca.A.one(), ca.A.one()], bounds=(BALANCED,))
        else:
            out = self.tau_of[w[0]]
            for idx in w[1:]:
                out = _tau_compose(out, self.tau_of[idx])
        self._cache[w] = out
        return out

    def translation(self, h):
        """Linear extension of tau to arbitrary H elements."""
        out = TensorExpr((self.ca.A, self.ca.A), (BALANCED,))
        for w, c in h.terms.items():
            out = out + self.tau_word(w).scale(c)
        return out


def _tau_compose(tau_h, tau_k):
    """tau of a product h k from tau(h), tau(k): k<1>h<1> (x)_B h<2>k<2>."""
    return tau_k.mul(tau_h, reverse=(1,))


def translation(tt, h):
    return tt.translation(h)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _verdict_item(ca, ident, anchor, lhs, rhs, numeric=None, trace=None):
    verdict, residuals = balanced_equal(ca, lhs, rhs, numeric=numeric, trace=trace)
    return CheckItem(ident, anchor, verdict, residuals=residuals, trace=trace)


def check_translation_properties(ca, tt, depth=2, numeric=None,
                                 suite="translation-properties"):
    """The defining identity and properties of the translation map on all
    structure-algebra generators (and sample products to ``depth``)."""
    p = ca.H
    items = []
    gens = [(g.name, (g.index,)) for g in p.gens]
    words = list(gens)
    if depth >= 2:
        words += [("%s.%s" % (p.gens[i].name, p.gens[j].name), (i, j))
                  for i in range(len(p.gens)) for j in range(len(p.gens))
                  if i <= j][:6]
    one_h = TensorExpr.of([ca.A.one(), ca.H.one()])

    for label, w in words:
        h = NCPoly.from_raw(p, {w: PS_ONE})
        tau_h = tt.translation(h)
        # (p7): chi(tau(h)) = 1 (x) h
        rhs = TensorExpr(( ca.A, ca.H), (PLAIN,))
        for hw, hc in h.terms.items():
            rhs = rhs + TensorExpr.make(
                (ca.A, ca.H), (PLAIN,),
                [(hc, [ca.A.one(), NCPoly(ca.H, {hw: PS_ONE})])])
        chi = resolve_balanced(ca, tau_h)
        diff = chi - rhs
        items.append(CheckItem(
            "p7:%s" % label, "h<1> h<2>_(0) (x) h<2>_(1) = 1 (x) h",
            EQUAL if diff.is_zero() else INDETERMINATE,
            residuals=list(diff.terms.values())))
        # (p5): h<1> h<2> = eps(h) 1
        m_tau = ca.A.zero()
        for (u, v), c in tau_h.terms.items():
            m_tau = m_tau + NCPoly.from_raw(ca.A, {u + v: c})
        eps = ca.A.one().scale(ca.table.counit(h))
        dd = m_tau - eps
        items.append(CheckItem(
            "p5:%s" % label, "h<1> h<2> = eps(h) 1",
            EQUAL if dd.is_zero() else INDETERMINATE,
            residuals=dd.coefficients()))
        # (p4): tau (x) coaction vs coproduct splice
        lhs4 = tau_h.apply_slot(1, lambda vw: ca.coact_word(vw))
        rhs4 = ca.table.coproduct(h).apply_slot(0, lambda hw: tt.tau_word(hw))
        items.append(_verdict_item(
            ca, "p4:%s" % label,
            "h<1> (x)_B h<2>_(0) (x) h<2>_(1) = tau(h_(1)) (x) h_(2)",
            lhs4, rhs4, numeric))
        # (p1): coaction on first leg against the antipode
        lhs1 = _coact_slot0_to_end(ca, tau_h)
        rhs1 = TensorExpr((ca.A, ca.A, ca.H), (BALANCED, PLAIN))
        for (h1, h2), c in ca.table.coproduct(h).terms.items():
            tau2 = tt.tau_word(h2)
            s1 = ca.table.antipode_word(h1)
            for (u, v), cc in tau2.terms.items():
                rhs1 = rhs1 + TensorExpr.make(
                    (ca.A, ca.A, ca.H), (BALANCED, PLAIN),
                    [(c * cc, [NCPoly(ca.A, {u: PS_ONE}),
                               NCPoly(ca.A, {v: PS_ONE}), s1])])
        items.append(_verdict_item(
            ca, "p1:%s" % label,
            "h<1>_(0) (x)_B h<2> (x) h<1>_(1) = tau(h_(2)) (x) S(h_(1))",
            lhs1, rhs1, numeric))
        # (p6): tau splits through 1 in the middle
        lhs6 = TensorExpr((ca.A, ca.A, ca.A), (BALANCED, BALANCED))
        for (h1, h2), c in ca.table.coproduct(h).terms.items():
            t1 = tt.tau_word(h1)
            t2 = tt.tau_word(h2)
            for (u1, v1), c1 in t1.terms.items():
                for (u2, v2), c2 in t2.terms.items():
                    mid = NCPoly.from_raw(ca.A, {v1 + u2: PS_ONE})
                    lhs6 = lhs6 + TensorExpr.make(
                        (ca.A, ca.A, ca.A), (BALANCED, BALANCED),
                        [(c * c1 * c2,
                          [NCPoly(ca.A, {u1: PS_ONE}), mid,
                           NCPoly(ca.A, {v2: PS_ONE})])])
        rhs6 = TensorExpr((ca.A, ca.A, ca.A), (BALANCED, BALANCED))
        for (u, v), c in tau_h.terms.items():
            rhs6 = rhs6 + TensorExpr.make(
                (ca.A, ca.A, ca.A), (BALANCED, BALANCED),
                [(c, [NCPoly(ca.A, {u: PS_ONE}), ca.A.one(),
                      NCPoly(ca.A, {v: PS_ONE})])])
        items.append(_verdict_item(
            ca, "p6:%s" % label,
            "tau(h_(1))1 tau(h_(2)) collapses to h<1> (x)_B 1 (x)_B h<2>",
            lhs6, rhs6, numeric))

    # (p2) well-definedness on products of generators
    count = 0
    for i in range(len(p.gens)):
        for j in range(len(p.gens)):
            if count >= 12:
                break
            count += 1
            h = NCPoly(p, {(i,): PS_ONE})
            k = NCPoly(p, {(j,): PS_ONE})
            prod = h * k
            lhs = tt.translation(prod)
            rhs = _tau_compose(tt.tau_word((i,)), tt.tau_word((j,)))
            items.append(_verdict_item(
                ca, "p2:%s.%s" % (p.gens[i].name, p.gens[j].name),
                "tau(h k) = k<1>h<1> (x)_B h<2>k<2>", lhs, rhs, numeric))
    # (p3) on total-algebra generators
    for g in ca.A.gens:
        a = NCPoly(ca.A, {(g.index,): PS_ONE})
        lhs = TensorExpr((ca.A, ca.A), (BALANCED,))
        for (a0, a1), c in ca.coaction(a).terms.items():
            tau1 = tt.tau_word(a1)
            sub = tau1.mul_into_slot(0, NCPoly(ca.A, {a0: PS_ONE}), side="left")
            lhs = lhs + sub.scale(c)
        rhs = TensorExpr.make((ca.A, ca.A), (BALANCED,),
                              [(PS_ONE, [ca.A.one(), a])])
        items.append(_verdict_item(
            ca, "p3:%s" % g.name,
            "a_(0) tau(a_(1)) = 1 (x)_B a", lhs, rhs, numeric))
    # (p8) base elements slide across tau
    for name, b in ca.base_generators.items():
        for label, w in gens[:6]:
            tau_h = tt.tau_word(w)
            lhs = tau_h.mul_into_slot(0, b, side="left")
            rhs = tau_h.mul_into_slot(1, b, side="right")
            items.append(_verdict_item(
                ca, "p8:%s|%s" % (name, label),
                "b tau(h) = tau(h) b", lhs, rhs, numeric))
    return CheckReport(suite, items)


def _coact_slot0_to_end(ca, te):
    """Apply the coaction to slot 0 and append its H leg as a final slot."""
    slots = te.slots + (ca.H,)
    bounds = te.bounds + (PLAIN,)
    out = TensorExpr(slots, bounds)
    for words, c in te.terms.items():
        for (a0, a1), cc in ca.coact_word(words[0]).terms.items():
            new = (a0,) + words[1:] + (a1,)
            coeff = c * cc
            old = out.terms.get(new)
            old = coeff if old is None else old + coeff
            if old.is_zero():
                out.terms.pop(new, None)
            else:
                out.terms[new] = old
    return out


def check_coaction_laws(ca, suite="coaction-laws"):
    """Counitality and coassociativity of the coaction on all generators,
    plus scenario I degree preservation delta(A_r) in A_r (x) H."""
    items = []
    for g in ca.A.gens:
        a = NCPoly(ca.A, {(g.index,): PS_ONE})
        da = ca.coaction(a)
        # counitality
        back = ca.A.zero()
        for (a0, a1), c in da.terms.items():
            back = back + NCPoly(ca.A, {a0: PS_ONE}).scale(
                c * ca.table.counit_word(a1))
        d = back - a
        items.append(CheckItem(
            "coaction-counital:%s" % g.name, "(id (x) eps) delta = id",
            EQUAL if d.is_zero() else INDETERMINATE, residuals=d.coefficients()))
        # coassociativity (delta (x) id) delta = (id (x) Delta) delta
        lhs = da.apply_slot(0, lambda w: ca.coact_word(w))
        rhs = da.apply_slot(1, lambda w: ca.table.coproduct_word(w))
        dd = lhs - rhs
        items.append(CheckItem(
            "coaction-coassoc:%s" % g.name,
            "(delta (x) id) delta = (id (x) Delta) delta",
            EQUAL if dd.is_zero() else INDETERMINATE,
            residuals=list(dd.terms.values())))
    return CheckReport(suite, items)


def check_degree_lemmas(ca, tt, suite="degree-lemmas"):
    """Bigraded scenario II degree facts: coinvariants sit in right-degree
    zero; translation legs have bidegrees (-p,-r) and (p,l); legs cancel
    for diagonal generators; the slot product of tau vanishes on
    off-diagonal generators (their counit is zero)."""
    items = []
    n = ca.A.arity // 2
    for name, b in ca.base_generators.items():
        ok = all(ca.A.word_degree(w)[n:] == (0,) * n for w in b.terms)
        items.append(CheckItem(
            "base-right-degree:%s" % name,
            "coinvariant subalgebra sits in degrees (r, 0)",
            EQUAL if ok else INDETERMINATE))
    for g in ca.H.gens:
        r, l = g.degree[:n], g.degree[n:]
        tau = tt.tau_word((g.index,))
        shape_ok = True
        cancel_ok = True
        for (u, v), _ in tau.terms.items():
            du = ca.A.word_degree(u)
            dv = ca.A.word_degree(v)
            if du[n:] != neg_deg(r) or dv[n:] != l or du[:n] != neg_deg(dv[:n]):
                shape_ok = False
            if r == l and add_deg(du, dv) != (0,) * ca.A.arity:
                cancel_ok = False
        items.append(CheckItem(
            "tau-bidegree:%s" % g.name,
            "deg h<1> = (-p,-r), deg h<2> = (p,l)",
            EQUAL if shape_ok else INDETERMINATE))
        if r == l:
            items.append(CheckItem(
                "tau-cancel:%s" % g.name,
                "legs of tau cancel in degree for r = l",
                EQUAL if cancel_ok else INDETERMINATE))
        else:
            m_tau = ca.A.zero()
            for (u, v), c in tau.terms.items():
                m_tau = m_tau + NCPoly.from_raw(ca.A, {u + v: c})
            items.append(CheckItem(
                "tau-offdiag-product:%s" % g.name,
                "slot product of tau vanishes off the diagonal (eps = 0)",
                EQUAL if m_tau.is_zero() else INDETERMINATE,
                residuals=m_tau.coefficients()))
    return CheckReport(suite, items)

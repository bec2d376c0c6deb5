"""Multi-slot tensor expressions over presented algebras.

A TensorExpr is a finite sum of coefficient times a tuple of slot words,
one normal word per slot, each slot living in a fixed presentation.  The
boundary between consecutive slots is either a plain tensor over the
ground field or a balanced tensor over a base algebra; balanced
boundaries are recorded so they can later be eliminated by transporting
along the canonical Galois map (see galois.resolve_balanced).

All constructors expand products multilinearly and keep slot entries in
normal form, so structural equality of term dictionaries is equality of
the represented elements slot by slot.
"""

from __future__ import annotations

from .algebra import NCPoly, word_key
from .phases import PS_ONE

PLAIN = "x"
BALANCED = "B"


class TensorExpr:
    __slots__ = ("slots", "bounds", "terms")

    def __init__(self, slots, bounds, terms=None):
        slots = tuple(slots)
        bounds = tuple(bounds)
        if len(bounds) != max(len(slots) - 1, 0):
            raise ValueError("need %d boundary markers, got %d"
                             % (len(slots) - 1, len(bounds)))
        for b in bounds:
            if b not in (PLAIN, BALANCED):
                raise ValueError("boundary marker must be %r or %r" % (PLAIN, BALANCED))
        self.slots = slots
        self.bounds = bounds
        self.terms = dict(terms) if terms else {}

    # -- constructors ---------------------------------------------------
    @staticmethod
    def make(slots, bounds, items):
        """Expand (coeff, [NCPoly per slot]) items into a canonical sum."""
        te = TensorExpr(slots, bounds)
        for coeff, factors in items:
            if len(factors) != len(te.slots):
                raise ValueError("expected %d slot factors" % len(te.slots))
            te._accumulate(coeff, factors)
        return te

    @staticmethod
    def of(factors, bounds=None):
        """Tensor of NCPoly factors with plain boundaries by default."""
        slots = tuple(f.pres for f in factors)
        if bounds is None:
            bounds = (PLAIN,) * (len(slots) - 1)
        return TensorExpr.make(slots, bounds, [(PS_ONE, list(factors))])

    def _accumulate(self, coeff, factors):
        partial = [((), coeff)]
        for f in factors:
            nxt = []
            for words, c in partial:
                for w, fc in f.terms.items():
                    nxt.append((words + (w,), c * fc))
            partial = nxt
        for words, c in partial:
            if c.is_zero():
                continue
            v = self.terms.get(words)
            v = c if v is None else v + c
            if v.is_zero():
                self.terms.pop(words, None)
            else:
                self.terms[words] = v

    def _shape_check(self, other):
        if self.slots != other.slots or self.bounds != other.bounds:
            raise ValueError("tensor shapes differ: %s vs %s"
                             % (self.shape_str(), other.shape_str()))

    # -- linear structure --------------------------------------------------
    def __add__(self, other):
        self._shape_check(other)
        acc = dict(self.terms)
        for words, c in other.terms.items():
            v = acc.get(words)
            v = c if v is None else v + c
            if v.is_zero():
                acc.pop(words, None)
            else:
                acc[words] = v
        return TensorExpr(self.slots, self.bounds, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorExpr(self.slots, self.bounds,
                          {w: -c for w, c in self.terms.items()})

    def scale(self, coeff):
        if coeff.is_zero():
            return TensorExpr(self.slots, self.bounds)
        return TensorExpr(self.slots, self.bounds,
                          {w: coeff * c for w, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, TensorExpr) and self.slots == other.slots
                and self.bounds == other.bounds and self.terms == other.terms)

    # -- multiplicative structure -------------------------------------------
    def mul(self, other, reverse=()):
        """Slotwise product; slots listed in ``reverse`` multiply opposite.

        Both operands must have identical shape.  Slot i of the result is
        nf(a_i b_i), or nf(b_i a_i) for i in ``reverse`` (the opposite
        algebra, as in the second leg of the gauge bialgebroid).
        """
        self._shape_check(other)
        out = TensorExpr(self.slots, self.bounds)
        rev = set(reverse)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                factors = []
                for i, p in enumerate(self.slots):
                    word = w2[i] + w1[i] if i in rev else w1[i] + w2[i]
                    factors.append(NCPoly.from_raw(p, {word: PS_ONE}))
                out._accumulate(c1 * c2, factors)
        return out

    def tensor(self, other, bound=PLAIN):
        out = TensorExpr(self.slots + other.slots,
                         self.bounds + (bound,) + other.bounds)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                words = w1 + w2
                v = out.terms.get(words)
                v = c if v is None else v + c
                if v.is_zero():
                    out.terms.pop(words, None)
                else:
                    out.terms[words] = v
        return out

    # -- slot surgery -----------------------------------------------------
    def apply_slot(self, i, fn):
        """Replace slot i by the image of ``fn`` (word -> TensorExpr).

        The replacement tensor's slots and internal boundaries are spliced
        in place of slot i; outer boundaries are preserved.  ``fn`` must
        return tensors of one fixed shape.
        """
        out = None
        for words, c in self.terms.items():
            image = fn(words[i])
            if out is None:
                slots = self.slots[:i] + image.slots + self.slots[i + 1:]
                bounds = self.bounds[:i] + image.bounds + self.bounds[i:]
                out = TensorExpr(slots, bounds)
            for iw, ic in image.terms.items():
                cc = c * ic
                if cc.is_zero():
                    continue
                new = words[:i] + iw + words[i + 1:]
                v = out.terms.get(new)
                v = cc if v is None else v + cc
                if v.is_zero():
                    out.terms.pop(new, None)
                else:
                    out.terms[new] = v
        if out is None:
            raise ValueError("cannot infer shape from an empty tensor; "
                             "build the zero of the target shape directly")
        return out

    def mul_into_slot(self, i, poly, side="left"):
        """Multiply ``poly`` into slot i (left or right) and renormalize."""
        out = TensorExpr(self.slots, self.bounds)
        p = self.slots[i]
        for words, c in self.terms.items():
            for pw, pc in poly.terms.items():
                w = pw + words[i] if side == "left" else words[i] + pw
                factors = [NCPoly.from_raw(p, {w: PS_ONE}) if j == i
                           else NCPoly(self.slots[j], {words[j]: PS_ONE})
                           for j in range(len(self.slots))]
                out._accumulate(c * pc, factors)
        return out

    def slot_poly(self, term_words, i):
        return NCPoly(self.slots[i], {term_words[i]: PS_ONE})

    # -- rendering -----------------------------------------------------------
    def shape_str(self):
        bits = [self.slots[0].name]
        for b, p in zip(self.bounds, self.slots[1:]):
            bits.append(" (x)_B " if b == BALANCED else " (x) ")
            bits.append(p.name)
        return "".join(bits)

    def __repr__(self):
        from .phases import format_phase
        if not self.terms:
            return "(0 : %s)" % self.shape_str()
        out = []
        for words in sorted(self.terms, key=lambda ws: tuple(word_key(w) for w in ws),
                            reverse=True):
            c = self.terms[words]
            slot_bits = []
            for i, w in enumerate(words):
                slot_bits.append(self.slots[i].word_str(w))
                if i < len(self.bounds):
                    slot_bits.append("(x)_B" if self.bounds[i] == BALANCED else "(x)")
            out.append("(%s) %s" % (format_phase(c), " ".join(slot_bits)))
        return " + ".join(out)


def zero_like(te):
    return TensorExpr(te.slots, te.bounds)

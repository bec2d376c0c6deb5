"""Text syntax for polynomials and phase scalars.

A polynomial prints as terms joined by " + ", each term being
"(phase) * g1.g2.g3" (or "(phase)" for the empty word), with terms in
descending word order.  The parser accepts exactly what the printer
emits, so printing and parsing round-trip byte-exactly on normal forms.

Phase syntax inside the parentheses: terms "coeff * q[j,k]^e * ..."
joined by " + ", coefficients being "a", "a/c" or "(a+bi)/c" (1-based
pair indices, exponents always explicit).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import NCPoly, word_key
from .phases import (GaussianRational, PhaseScalar, format_phase)


class ParseError(ValueError):
    pass


def format_poly(poly):
    if not poly.terms:
        return "(0)"
    pres = poly.pres
    out = []
    for w in sorted(poly.terms, key=word_key, reverse=True):
        coeff = "(%s)" % format_phase(poly.terms[w])
        out.append(coeff if not w else "%s * %s" % (coeff, pres.word_str(w)))
    return " + ".join(out)


def parse_poly(pres, text):
    """Parse the printer's polynomial syntax over ``pres``."""
    raw = {}
    for part in _split_top(text.strip()):
        coeff, word = _parse_term(pres, part)
        v = raw.get(word)
        raw[word] = coeff if v is None else v + coeff
    return NCPoly.from_raw(pres, raw)


def _split_top(text):
    """Split on ' + ' at parenthesis depth zero."""
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')' in %r" % text)
        elif depth == 0 and text.startswith(" + ", i):
            parts.append(text[start:i])
            i += 3
            start = i
            continue
        i += 1
    if depth != 0:
        raise ParseError("unbalanced '(' in %r" % text)
    parts.append(text[start:])
    return [p for p in parts if p.strip()]


def _parse_term(pres, part):
    part = part.strip()
    if part.startswith("("):
        depth, i = 0, 0
        for i, ch in enumerate(part):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    break
        phase_text = part[1:i]
        rest = part[i + 1:].strip()
        coeff = parse_phase(phase_text)
        if not rest:
            return coeff, ()
        if not rest.startswith("*"):
            raise ParseError("expected '*' after coefficient in %r" % part)
        word_text = rest[1:].strip()
    else:
        coeff = PhaseScalar.one()
        word_text = part
    if not word_text or word_text == "1":
        return coeff, ()
    names = word_text.split(".")
    try:
        word = tuple(pres.gen_index(n.strip()) for n in names)
    except KeyError as exc:
        raise ParseError("unknown generator %s in %r" % (exc, part)) from None
    return coeff, word


_UNIT_RE = re.compile(r"^q\[(\d+),(\d+)\]\^(-?\d+)$")
_GAUSS_RE = re.compile(r"^\((-?\d+)([+-]\d+)i\)(?:/(\d+))?$")


def parse_phase(text):
    text = text.strip()
    if text == "0":
        return PhaseScalar.zero()
    total = PhaseScalar.zero()
    for part in _split_top(text):
        bits = [b.strip() for b in _split_star(part)]
        coeff = _parse_gaussian(bits[0])
        term = PhaseScalar.from_gauss(coeff)
        for b in bits[1:]:
            m = _UNIT_RE.match(b)
            if not m:
                raise ParseError("bad phase unit %r" % b)
            j, k, e = int(m.group(1)) - 1, int(m.group(2)) - 1, int(m.group(3))
            term = term * PhaseScalar.unit(j, k, e)
        total = total + term
    return total


def _split_star(text):
    parts, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" * ", i):
            parts.append(text[start:i])
            i += 3
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


def _parse_gaussian(text):
    m = _GAUSS_RE.match(text)
    if m:
        den = int(m.group(3) or 1)
        return GaussianRational(Fraction(int(m.group(1)), den),
                                Fraction(int(m.group(2)), den))
    try:
        return GaussianRational(Fraction(text), 0)
    except ValueError:
        raise ParseError("bad coefficient %r" % text) from None

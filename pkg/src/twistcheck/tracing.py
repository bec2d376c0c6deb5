"""Opt-in reduction traces for individual identities.

The CLI enables tracing for an identity id (or all ids); check helpers
ask ``sink_for`` whether the identity is being watched and, if so, append
human-readable reduction steps (phase swaps, rule applications, balanced
transport, residuals).  Traces are stored on the CheckItem and can be
replayed by the ``--explain`` flag.
"""

from __future__ import annotations

import fnmatch

_active = None  # (pattern, {ident: [steps]})


def enable(pattern):
    global _active
    _active = (pattern, {})


def disable():
    global _active
    _active = None


def sink_for(ident):
    """A list to append steps to if ``ident`` is being traced, else None."""
    if _active is None:
        return None
    pattern, store = _active
    if pattern != "*" and not fnmatch.fnmatch(ident, pattern):
        return None
    return store.setdefault(ident, [])


def collected():
    return dict(_active[1]) if _active else {}

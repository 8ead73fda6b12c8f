"""Tiny expression grammar shared by the generator-word and Smith-word parsers.

    expr   := term (("+" | "-") term)*
    term   := ["-"] factor (["*"] factor)*
    factor := atom ["^" ["-"] int]
    atom   := int ["/" int] | name | "(" expr ")" | "[" expr "," expr "]"

Juxtaposition is multiplication and ``[u, v]`` is ``u v - v u``. Names are
matched longest-first, so ``XY`` reads as ``X`` followed by ``Y`` when both
are atoms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Mapping


class ExprError(ValueError):
    pass


def _tokenizer(names):
    alts = "|".join(re.escape(n) for n in sorted(names, key=len, reverse=True))
    return re.compile(r"\s*(?:(\d+)|(" + alts + r")|([-+*/^()\[\],]))")


def evaluate(text: str, atoms: Mapping[str, object], lift: Callable[[Fraction], object],
             negative_power: Callable[[object, int], object] | None = None):
    """Evaluate ``text``; scalars are turned into algebra elements by ``lift``."""
    pattern = _tokenizer(atoms)
    toks, pos = [], 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = pattern.match(stripped, pos)
        if not m:
            bad = stripped[pos:].strip()[:1]
            raise ExprError(f"unexpected character {bad!r} in {text!r}")
        num, name, sym = m.groups()
        toks.append(("num", int(num)) if num else ("name", name) if name else ("sym", sym))
        pos = m.end()
    if not toks:
        raise ExprError("empty expression")
    state = {"i": 0}

    def peek():
        i = state["i"]
        return toks[i] if i < len(toks) else (None, None)

    def advance():
        state["i"] += 1

    def expect(sym):
        if peek() != ("sym", sym):
            raise ExprError(f"expected {sym!r} in {text!r}")
        advance()

    def expr():
        acc = term()
        while peek() in (("sym", "+"), ("sym", "-")):
            op = peek()[1]
            advance()
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def starts_factor(tok):
        return tok[0] in ("num", "name") or tok in (("sym", "("), ("sym", "["))

    def term():
        neg = False
        if peek() == ("sym", "-"):
            advance()
            neg = True
        acc = factor()
        while True:
            if peek() == ("sym", "*"):
                advance()
                acc = acc * factor()
            elif starts_factor(peek()):
                acc = acc * factor()
            else:
                break
        return -acc if neg else acc

    def factor():
        base = atom()
        if peek() != ("sym", "^"):
            return base
        advance()
        neg = False
        if peek() == ("sym", "-"):
            advance()
            neg = True
        kind, k = peek()
        if kind != "num":
            raise ExprError(f"exponent must be an integer in {text!r}")
        advance()
        if not neg:
            return base**k
        if negative_power is None:
            raise ExprError("negative exponents are not supported here")
        return negative_power(base, k)

    def atom():
        kind, val = peek()
        if kind == "num":
            advance()
            value = Fraction(val)
            i = state["i"]
            if peek() == ("sym", "/") and i + 1 < len(toks) and toks[i + 1][0] == "num":
                value /= toks[i + 1][1]
                state["i"] += 2
            return lift(value)
        if kind == "name":
            advance()
            return atoms[val]
        if (kind, val) == ("sym", "("):
            advance()
            inner = expr()
            expect(")")
            return inner
        if (kind, val) == ("sym", "["):
            advance()
            left = expr()
            expect(",")
            right = expr()
            expect("]")
            return left * right - right * left
        raise ExprError(f"unexpected token {val!r} in {text!r}")

    out = expr()
    if state["i"] != len(toks):
        raise ExprError(f"trailing input in {text!r}")
    return out

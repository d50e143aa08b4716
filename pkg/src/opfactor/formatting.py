"""Small shared pieces for rendering elements back into expression text.

Every element formatter returns an Fmt record: the rendered text plus three
structural facts about its top level (is it a sum, does it contain a top
level division, does it start with a minus sign).  Callers embedding the
text into a larger expression use the flags to decide on parentheses.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class Fmt(NamedTuple):
    text: str
    is_sum: bool = False
    is_quotient: bool = False
    is_negative: bool = False


def format_fraction(q: Fraction) -> Fmt:
    text = str(q)
    return Fmt(text, False, q.denominator != 1, q < 0)


def join_terms(terms) -> str:
    """Join (sign, body) pairs into `a + b - c` style text.

    Signs are -1 or +1, bodies are already rendered without a sign.  An
    empty list renders as "0".
    """
    out = []
    for sign, body in terms:
        if not out:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out) if out else "0"

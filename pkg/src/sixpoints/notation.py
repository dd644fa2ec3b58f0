"""Letter notation for sets of negative classes.

Points p1..p6 are written A..F and a leading number gives the degree of the
curve, so ``0: AB, CD; 2: ABCDEF`` is the set {E1 - E2, E3 - E4,
2L - E1 - ... - E6}.  Grammar (whitespace-insensitive)::

    negset := group (';' group)* | ''        empty input means the empty set
    group  := degree ':' term (',' term)*
    degree := '0' | '1' | '2'
    term   := letters from A..F, strictly increasing

Degree 0 terms have exactly two letters (E_x - E_y with x < y), degree 1
exactly three (L - E_x - E_y - E_z), degree 2 exactly six.
"""

from __future__ import annotations

import re

from .errors import ValidationError
from .lattice import DivisorClass, N_POINTS

_LETTERS = "ABCDEF"
_ARITY = {0: 2, 1: 3, 2: 6}


def _term_class(degree: int, indices: list[int]) -> DivisorClass:
    m = [0] * N_POINTS
    if degree == 0:
        m[indices[0] - 1] = 1
        m[indices[1] - 1] = -1
        return DivisorClass(0, m)
    for i in indices:
        m[i - 1] = -1
    return DivisorClass(degree, m)


def parse_negset(text: str) -> list[DivisorClass]:
    """Parse letter notation into divisor classes, in written order.

    Raises ValidationError with a character position for syntax errors,
    arity mismatches, out-of-order letters, and duplicate classes.
    """
    out: list[DivisorClass] = []
    if not text.strip():
        return out
    for group in re.finditer(r"[^;]+", text):
        gtext, gpos = group.group(), group.start()
        colon = gtext.find(":")
        if colon < 0:
            raise ValidationError(
                f"syntax error at position {gpos}: expected 'degree: terms' in {gtext.strip()!r}"
            )
        dtext = gtext[:colon].strip()
        if dtext not in ("0", "1", "2"):
            raise ValidationError(
                f"syntax error at position {gpos}: degree must be 0, 1 or 2, got {dtext!r}"
            )
        degree = int(dtext)
        body = gtext[colon + 1:]
        if not body.strip():
            raise ValidationError(
                f"syntax error at position {gpos + colon + 1}: degree {degree} group has no terms"
            )
        for term in re.finditer(r"[^,]+", body):
            raw = term.group()
            ttext = raw.strip()
            tpos = gpos + colon + 1 + term.start() + (len(raw) - len(raw.lstrip()))
            if not ttext:
                raise ValidationError(f"syntax error at position {tpos}: empty term")
            indices = []
            for ch in ttext:
                if ch not in _LETTERS:
                    raise ValidationError(
                        f"syntax error at position {tpos}: {ch!r} is not a point letter A..F"
                    )
                indices.append(_LETTERS.index(ch) + 1)
            if any(a >= b for a, b in zip(indices, indices[1:])):
                raise ValidationError(
                    f"letters in {ttext!r} at position {tpos} must be strictly increasing"
                )
            if len(indices) != _ARITY[degree]:
                raise ValidationError(
                    f"term {ttext!r} at position {tpos} has {len(indices)} letters; "
                    f"degree {degree} needs exactly {_ARITY[degree]}"
                )
            cls = _term_class(degree, indices)
            if cls in out:
                raise ValidationError(f"duplicate class {ttext!r} at position {tpos}")
            out.append(cls)
    return out


def class_letters(c: DivisorClass) -> tuple[int, str]:
    """Inverse of the term mapping: (degree, letter string) for a pool-shaped class."""
    d = c.d
    m = c.m
    if d == 0:
        pos = [i for i, v in enumerate(m, 1) if v == 1]
        neg = [i for i, v in enumerate(m, 1) if v == -1]
        if len(pos) == 1 and len(neg) == 1 and pos[0] < neg[0] and sum(map(abs, m)) == 2:
            return 0, _LETTERS[pos[0] - 1] + _LETTERS[neg[0] - 1]
    elif d in (1, 2):
        neg = [i for i, v in enumerate(m, 1) if v == -1]
        if len(neg) == _ARITY[d] and all(v in (0, -1) for v in m):
            return d, "".join(_LETTERS[i - 1] for i in neg)
    raise ValidationError(f"{c} has no letter notation")


def format_negset(classes) -> str:
    """Serialize classes to letter notation: degree groups ascending,
    terms sorted within each group.  Empty input gives the empty string."""
    groups: dict[int, list[str]] = {}
    for c in classes:
        d, letters = class_letters(c)
        groups.setdefault(d, []).append(letters)
    return "; ".join(
        f"{d}: " + ", ".join(sorted(groups[d])) for d in sorted(groups)
    )

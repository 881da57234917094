"""Reading and writing ideal files.

Format::

    # comment
    ring: x, y, z over Q        (or "over F7")
    x^2 - y*z
    y^3                          # trailing comments are fine

Variables may be separated by commas or spaces.  Blank lines are skipped.
"""

from __future__ import annotations

from .domains import parse_domain
from .ideals import Ideal
from .polynomial import ParseError, PolyRing


class IdealFileError(ValueError):
    pass


def parse_ideal_text(text: str, source: str = "<text>") -> Ideal:
    ring = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            if not line.lower().startswith("ring:"):
                raise IdealFileError(f"{source}:{lineno}: expected a 'ring: VARS over DOMAIN' header")
            body = line[5:]
            if " over " not in f" {body} ":
                raise IdealFileError(f"{source}:{lineno}: header lacks 'over Q' or 'over Fp'")
            names, dom = body.rsplit("over", 1)
            variables = tuple(v for v in names.replace(",", " ").split() if v)
            if not variables:
                raise IdealFileError(f"{source}:{lineno}: no variables in header")
            ring = PolyRing(variables, parse_domain(dom))
            continue
        try:
            polys.append(ring(line))
        except (ParseError, ValueError) as exc:
            raise IdealFileError(f"{source}:{lineno}: {exc}") from exc
    if ring is None:
        raise IdealFileError(f"{source}: missing ring header")
    return Ideal(polys, ring)


def read_ideal(path: str) -> Ideal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal_text(fh.read(), path)


def format_ideal(I: Ideal, gens=None) -> str:
    gens = I.gens if gens is None else gens
    lines = [f"ring: {', '.join(I.ring.variables)} over {I.ring.domain}"]
    lines += [str(g) for g in gens]
    return "\n".join(lines) + "\n"

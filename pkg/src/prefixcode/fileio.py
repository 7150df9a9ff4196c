"""Distribution files and source literals.

File format: UTF-8 text, one rational per line, either "a/b" or a decimal
literal (parsed exactly, so 0.4 means 2/5); lines starting with '#' and
blank lines are ignored.

Source literals: "geom:a/b", "alpha:[a/b,c/d,...]" (a finite list; the last
ratio repeats forever), or "file:PATH" for a finite distribution.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from prefixcode.distributions import FiniteDistribution, validate
from prefixcode.errors import PrefixCodeError
from prefixcode.sources import AlphaSequence, Geometric, SourceSpec


class ParseError(PrefixCodeError):
    """Malformed rational, distribution file, or source literal."""


def parse_rational(text: str) -> Fraction:
    """Parse "a/b", an integer, or a decimal literal to its exact value."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse rational {text!r}: {exc}") from None


def read_distribution_file(path: str | Path) -> FiniteDistribution:
    """Read one rational per line; '#' comments and blank lines allowed."""
    probs = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            probs.append(parse_rational(line))
        except ParseError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from None
    return validate(probs)


def parse_source(text: str) -> FiniteDistribution | SourceSpec:
    """Resolve a source literal to a finite distribution or a spec."""
    text = text.strip()
    if text.startswith("geom:"):
        return Geometric(parse_rational(text[len("geom:") :]))
    if text.startswith("alpha:"):
        body = text[len("alpha:") :].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"alpha literal must look like alpha:[a/b,...], got {text!r}")
        parts = [p for p in body[1:-1].split(",") if p.strip()]
        if not parts:
            raise ParseError("alpha literal needs at least one ratio")
        return AlphaSequence(tuple(parse_rational(p) for p in parts))
    if text.startswith("file:"):
        return read_distribution_file(text[len("file:") :])
    raise ParseError(
        f"unrecognized source {text!r}; expected geom:a/b, alpha:[...], or file:PATH"
    )

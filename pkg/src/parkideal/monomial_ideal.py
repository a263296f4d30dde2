"""Monomial ideals in K[x_1, ..., x_n] and their standard monomials.

A monomial is an exponent tuple. An ideal is stored by its minimal
generators. The K-dimension of R/I (the number of standard monomials) is
computed two ways that share no code beyond :func:`minimalize`:

* :func:`std_count_enum` walks the staircase coordinate by coordinate;
* :func:`std_count_recursive` splits I along
  ``dim R/I = dim R/(I : x_i^r) + dim R/<I, x_i^r>``.

Text syntax: one generator per line, written ``x1^2*x3`` (``1`` is the unit
monomial), ``#`` starts a comment, and an optional ``nvars = N`` line fixes
the ambient variable count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

MAX_BOX = 10**8


class NotArtinianError(ValueError):
    """R/I is infinite-dimensional."""


class GuardExceeded(RuntimeError):
    pass


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in g) for g in self.gens)
        for g in gens:
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} has length {len(g)}, expected {self.nvars}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "gens", _minimal(gens))

    @property
    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    def __str__(self) -> str:
        return "<" + ", ".join(format_monomial(g) for g in self.gens) + ">"


def minimalize(gens: Iterable[Sequence[int]], nvars: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    lengths = {len(g) for g in gens}
    if nvars is not None:
        lengths.add(nvars)
    if len(lengths) > 1:
        raise ValueError(f"inconsistent exponent lengths {sorted(lengths)}")
    if not lengths:
        raise ValueError("cannot infer the variable count of an empty generator set")
    return MonomialIdeal(lengths.pop(), tuple(gens))


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    m = tuple(m)
    if len(m) != I.nvars:
        raise ValueError(f"monomial has {len(m)} exponents, ideal has {I.nvars} variables")
    return any(divides(g, m) for g in I.gens)


def _check_var(I: MonomialIdeal, i: int) -> None:
    if not 0 <= i < I.nvars:
        raise IndexError(f"variable index {i} out of range 0..{I.nvars - 1}")


def colon_pure_power(I: MonomialIdeal, i: int, r: int) -> MonomialIdeal:
    """(I : x_i^r). ``i`` is 0-based; r = 0 returns I."""
    _check_var(I, i)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return I
    gens = [g[:i] + (max(g[i] - r, 0),) + g[i + 1:] for g in I.gens]
    return MonomialIdeal(I.nvars, tuple(gens))


def add_pure_power(I: MonomialIdeal, i: int, r: int) -> MonomialIdeal:
    """<I, x_i^r>. ``i`` is 0-based."""
    _check_var(I, i)
    if r < 0:
        raise ValueError("r must be nonnegative")
    p = tuple(r if k == i else 0 for k in range(I.nvars))
    return MonomialIdeal(I.nvars, I.gens + (p,))


def pure_power_bounds(I: MonomialIdeal) -> list[int | None]:
    """Smallest e with x_i^e in I, per variable (None if no pure power)."""
    bounds: list[int | None] = [None] * I.nvars
    if I.is_unit:
        return [0] * I.nvars
    for g in I.gens:
        support = [k for k, e in enumerate(g) if e]
        if len(support) == 1:
            k = support[0]
            if bounds[k] is None or g[k] < bounds[k]:
                bounds[k] = g[k]
    return bounds


def is_artinian(I: MonomialIdeal) -> bool:
    return all(b is not None for b in pure_power_bounds(I))


def box_volume(I: MonomialIdeal) -> int:
    bounds = pure_power_bounds(I)
    if any(b is None for b in bounds):
        raise NotArtinianError(f"{I} is not Artinian: some variable has no pure power")
    return prod(bounds)


def _require_box(I: MonomialIdeal, max_box: int) -> None:
    vol = box_volume(I)
    if vol > max_box:
        raise GuardExceeded(f"exponent box volume {vol} exceeds --max-box {max_box}")


# -- staircase walk ----------------------------------------------------------

def _walk(gens: tuple[Monomial, ...], n: int, emit) -> int:
    """Depth-first walk over standard exponent vectors, coordinate by coordinate.

    ``active`` holds the generators that still divide the partial vector
    (padded with zeros). Once one of them has no support on the remaining
    coordinates the prefix is in I, and so is every larger value at this depth.
    At the last coordinate the admissible values form an interval [0, bound).
    """
    if n == 0:
        # R = K: the quotient is K unless I contains 1
        if gens:
            return 0
        if emit is not None:
            emit(())
        return 1
    prefix = [0] * n
    # tail_zero[g][k]: generator g has no support on coordinates > k
    tail_zero = {}
    for g in gens:
        last = max((k for k, e in enumerate(g) if e), default=-1)
        tail_zero[g] = last

    def rec(k: int, active: list[Monomial]) -> int:
        if k == n - 1:
            bound = min(g[k] for g in active)
            if emit is not None:
                for v in range(bound):
                    prefix[k] = v
                    emit(tuple(prefix))
                prefix[k] = 0
            return bound
        total = 0
        v = 0
        while True:
            now = [g for g in active if g[k] <= v]
            if any(tail_zero[g] <= k for g in now):
                break
            prefix[k] = v
            total += rec(k + 1, now)
            v += 1
        prefix[k] = 0
        return total

    return rec(0, list(gens))


def std_count_enum(I: MonomialIdeal, max_box: int = MAX_BOX) -> int:
    _require_box(I, max_box)
    return _walk(I.gens, I.nvars, None)


def std_enumerate(I: MonomialIdeal, max_box: int = MAX_BOX) -> list[Monomial]:
    """Standard monomials in graded lexicographic order (x_1 > ... > x_n), ascending."""
    _require_box(I, max_box)
    out: list[Monomial] = []
    _walk(I.gens, I.nvars, out.append)
    out.sort(key=lambda m: (sum(m), m))
    return out


# -- short-exact-sequence recursion -----------------------------------------

def _project(gens: Iterable[Monomial], keep: Sequence[int]) -> tuple[Monomial, ...]:
    return _minimal(tuple(g[k] for k in keep) for g in gens)


@lru_cache(maxsize=1 << 16)
def _split_count(gens: tuple[Monomial, ...]) -> int:
    n = len(gens[0])
    if (0,) * n in gens:
        return 0
    pure = [0] * n
    mixed = []
    for g in gens:
        support = [k for k, e in enumerate(g) if e]
        if len(support) == 1:
            pure[support[0]] = g[support[0]]
        else:
            mixed.append(g)
    if not mixed:
        return prod(pure)

    # variables untouched by mixed generators factor out
    linked = sorted({k for g in mixed for k, e in enumerate(g) if e})
    factor = prod(pure[k] for k in range(n) if k not in linked)

    # independent variable blocks multiply
    parent = {k: k for k in linked}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for g in mixed:
        support = [k for k, e in enumerate(g) if e]
        for k in support[1:]:
            parent[find(k)] = find(support[0])
    blocks: dict[int, list[int]] = {}
    for k in linked:
        blocks.setdefault(find(k), []).append(k)
    if len(blocks) > 1 or len(linked) < n:
        for keep in blocks.values():
            factor *= _split_count(
                _project((g for g in gens if all(g[k] == 0 for k in range(n) if k not in keep)), keep)
            )
            if factor == 0:
                return 0
        return factor

    # pivot: the variable whose pure power sits furthest above its largest
    # mixed exponent; split at that mixed exponent
    best = None
    for k in linked:
        top = max(g[k] for g in mixed)
        gap = pure[k] - top
        if best is None or gap > best[0]:
            best = (gap, k, top)
    _, k, r = best
    colon = _minimal(g[:k] + (max(g[k] - r, 0),) + g[k + 1:] for g in gens)
    added = _minimal(gens + (tuple(r if j == k else 0 for j in range(n)),))
    return _split_count(colon) + _split_count(added)


def std_count_recursive(I: MonomialIdeal) -> int:
    if not is_artinian(I):
        raise NotArtinianError(f"{I} is not Artinian: some variable has no pure power")
    if I.nvars == 0:
        return 0 if I.gens else 1
    return _split_count(I.gens)


def std_count(I: MonomialIdeal, method: str = "recursive", max_box: int = MAX_BOX) -> int:
    if method == "recursive":
        return std_count_recursive(I)
    if method == "enum":
        return std_count_enum(I, max_box)
    raise ValueError(f"unknown counting method {method!r}")


# -- text syntax -------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int | None = None) -> Monomial:
    """Parse ``x1^2*x3``; ``1`` is the unit monomial. Indices are 1-based."""
    text = text.replace(" ", "")
    exps: dict[int, int] = {}
    if text != "1":
        if not text:
            raise ValueError("empty monomial")
        for part in text.split("*"):
            m = _FACTOR.match(part)
            if not m:
                raise ValueError(f"cannot parse factor {part!r}")
            idx = int(m.group(1))
            if idx < 1:
                raise ValueError(f"variable index must be >= 1 in {part!r}")
            exps[idx] = exps.get(idx, 0) + int(m.group(2) or 1)
    width = max(exps, default=0)
    if nvars is None:
        nvars = width
    elif width > nvars:
        raise ValueError(f"x{width} exceeds nvars = {nvars}")
    return tuple(exps.get(k, 0) for k in range(1, nvars + 1))


def format_monomial(m: Sequence[int]) -> str:
    parts = [f"x{k}" if e == 1 else f"x{k}^{e}" for k, e in enumerate(m, start=1) if e]
    return "*".join(parts) if parts else "1"


def parse_ideal(text: str, nvars: int | None = None) -> MonomialIdeal:
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = re.match(r"^nvars\s*=\s*(\d+)$", line)
        if head:
            nvars = int(head.group(1))
            continue
        try:
            terms.append(parse_monomial(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    width = max((len(t) for t in terms), default=0)
    if nvars is None:
        nvars = width
    if width > nvars:
        raise ValueError(f"generators use {width} variables but nvars = {nvars}")
    return MonomialIdeal(nvars, tuple(t + (0,) * (nvars - len(t)) for t in terms))


def format_ideal(I: MonomialIdeal) -> str:
    return f"nvars = {I.nvars}\n" + "".join(format_monomial(g) + "\n" for g in I.gens)

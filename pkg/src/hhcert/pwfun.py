"""Exact piecewise-linear functions with jumps on [0, 1].

A :class:`PwFun` is stored as a strictly increasing list of breakpoints
``0 = b_0 < b_1 < ... < b_k = 1`` together with, for every interval
``[b_i, b_{i+1})``, a slope and a start value.  The function is
right-continuous; jumps are implied whenever a piece ends at a different
value than the next one starts.  The value at ``t = 1`` is stored
separately (``final``) so that an atom sitting at the right endpoint is
representable.  To the left of 0 every function is taken to be 0.

All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: a float silently carries binary rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}; use int, Fraction or 'p/q'")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class SignInterval(NamedTuple):
    lo: Fraction
    hi: Fraction
    sign: int


@dataclass(frozen=True)
class PwFun:
    breaks: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]
    starts: tuple[Fraction, ...]
    final: Fraction

    def __post_init__(self):
        b = self.breaks
        if len(b) < 2 or b[0] != 0 or b[-1] != 1:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if any(lo >= hi for lo, hi in zip(b, b[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if not len(self.slopes) == len(self.starts) == len(b) - 1:
            raise ValueError("need one (slope, start) pair per interval")

    @property
    def npieces(self) -> int:
        return len(self.slopes)

    def end_value(self, i: int) -> Fraction:
        """Left limit of piece ``i`` at its right breakpoint."""
        return self.starts[i] + self.slopes[i] * (self.breaks[i + 1] - self.breaks[i])

    def _locate(self, t: Fraction) -> int:
        # index of the piece whose half-open interval [b_i, b_{i+1}) holds t
        lo, hi = 0, self.npieces - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.breaks[mid] <= t:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def __call__(self, t) -> Fraction:
        t = as_rational(t)
        if t < 0:
            return ZERO
        if t >= 1:
            return self.final
        i = self._locate(t)
        return self.starts[i] + self.slopes[i] * (t - self.breaks[i])

    def left_limit(self, t) -> Fraction:
        t = as_rational(t)
        if t <= 0:
            return ZERO
        if t > 1:
            return self.final
        i = self._locate(t)
        if self.breaks[i] == t:
            return self.end_value(i - 1)
        return self.starts[i] + self.slopes[i] * (t - self.breaks[i])

    def jumps(self) -> list[tuple[Fraction, Fraction]]:
        """Nonzero jumps ``(t, g(t) - g(t-))`` including those at 0 and 1."""
        out = []
        if self.starts[0] != 0:
            out.append((ZERO, self.starts[0]))
        for i in range(1, self.npieces):
            j = self.starts[i] - self.end_value(i - 1)
            if j:
                out.append((self.breaks[i], j))
        j = self.final - self.end_value(self.npieces - 1)
        if j:
            out.append((ONE, j))
        return out

    def pieces(self) -> list[tuple[Fraction, Fraction, Fraction]]:
        """Decompose into ``(breakpoint, slope, start)`` triples accepted by :func:`build`."""
        return list(zip(self.breaks[:-1], self.slopes, self.starts))

    def is_nondecreasing(self) -> bool:
        return all(s >= 0 for s in self.slopes) and all(j > 0 for _, j in self.jumps())

    def __sub__(self, other: "PwFun") -> "PwFun":
        return subtract(self, other)

    def __neg__(self) -> "PwFun":
        return PwFun(
            self.breaks,
            tuple(-s for s in self.slopes),
            tuple(-v for v in self.starts),
            -self.final,
        )


def build(pieces: Iterable[Sequence], final=None) -> PwFun:
    """Build a canonical PwFun from ``(breakpoint, slope, start)`` triples.

    Args:
        pieces: One triple per interval; the first breakpoint must be 0 and
            breakpoints must increase.  Each piece runs to the next
            breakpoint, the last one to 1.
        final: Value at ``t = 1``.  Defaults to the left limit there
            (no jump at 1).

    Raises:
        ValueError: on empty input, breakpoints outside [0, 1] or
            non-increasing breakpoints.
    """
    trip = [tuple(as_rational(v) for v in p) for p in pieces]
    if not trip:
        raise ValueError("at least one piece is required")
    for b, _, _ in trip:
        if b < 0 or b >= 1:
            raise ValueError(f"breakpoint {b} outside [0, 1)")
    if trip[0][0] != 0:
        raise ValueError("first breakpoint must be 0")
    # zero-length pieces (duplicate breakpoints) are dropped: the later one wins
    dedup: list[tuple[Fraction, Fraction, Fraction]] = []
    for p in trip:
        if dedup and p[0] < dedup[-1][0]:
            raise ValueError("breakpoints must be non-decreasing")
        if dedup and p[0] == dedup[-1][0]:
            dedup[-1] = p
        else:
            dedup.append(p)
    breaks = [p[0] for p in dedup] + [ONE]
    slopes = [p[1] for p in dedup]
    starts = [p[2] for p in dedup]
    if final is None:
        final = starts[-1] + slopes[-1] * (ONE - breaks[-2])
    return _canonical(breaks, slopes, starts, as_rational(final))


def _canonical(breaks, slopes, starts, final) -> PwFun:
    nb, ns, nv = [breaks[0]], [slopes[0]], [starts[0]]
    for i in range(1, len(slopes)):
        prev_end = nv[-1] + ns[-1] * (breaks[i] - nb[-1])
        if slopes[i] == ns[-1] and starts[i] == prev_end:
            continue
        nb.append(breaks[i])
        ns.append(slopes[i])
        nv.append(starts[i])
    nb.append(ONE)
    return PwFun(tuple(nb), tuple(ns), tuple(nv), final)


def subtract(g1: PwFun, g2: PwFun) -> PwFun:
    """Exact pointwise difference ``g1 - g2`` in canonical form."""
    breaks = sorted(set(g1.breaks) | set(g2.breaks))
    slopes, starts = [], []
    i = j = 0
    for b in breaks[:-1]:
        while g1.breaks[i + 1] <= b:
            i += 1
        while g2.breaks[j + 1] <= b:
            j += 1
        slopes.append(g1.slopes[i] - g2.slopes[j])
        starts.append(
            g1.starts[i] + g1.slopes[i] * (b - g1.breaks[i])
            - g2.starts[j] - g2.slopes[j] * (b - g2.breaks[j])
        )
    return _canonical(breaks, slopes, starts, g1.final - g2.final)


def integral(g: PwFun, lo, hi) -> Fraction:
    """Exact ``∫_lo^hi g(u) du`` for ``0 <= lo <= hi <= 1``."""
    lo, hi = as_rational(lo), as_rational(hi)
    if not 0 <= lo <= hi <= 1:
        raise ValueError(f"need 0 <= lo <= hi <= 1, got [{lo}, {hi}]")
    total = ZERO
    for i in range(g.npieces):
        a = max(lo, g.breaks[i])
        b = min(hi, g.breaks[i + 1])
        if a >= b:
            continue
        va = g.starts[i] + g.slopes[i] * (a - g.breaks[i])
        vb = g.starts[i] + g.slopes[i] * (b - g.breaks[i])
        total += (va + vb) * (b - a) / 2
    return total


def prefix_integrals(g: PwFun, ts: Sequence) -> list[Fraction]:
    """``∫_0^t g`` for every t of a nondecreasing sequence, in one sweep."""
    out = []
    acc = ZERO  # integral up to breaks[i]
    i = 0
    for t in ts:
        t = as_rational(t)
        if out and t < prev:
            raise ValueError("points must be nondecreasing")
        if not 0 <= t <= 1:
            raise ValueError(f"t={t} outside [0, 1]")
        while i < g.npieces - 1 and g.breaks[i + 1] <= t:
            w = g.breaks[i + 1] - g.breaks[i]
            acc += g.starts[i] * w + g.slopes[i] * w * w / 2
            i += 1
        w = t - g.breaks[i]
        out.append(acc + g.starts[i] * w + g.slopes[i] * w * w / 2)
        prev = t
    return out


def prefix_integral(g: PwFun, t) -> Fraction:
    """Exact ``∫_0^t g(u) du``; point values at jumps are irrelevant."""
    t = as_rational(t)
    if not 0 <= t <= 1:
        raise ValueError(f"t={t} outside [0, 1]")
    return integral(g, ZERO, t)


def _piece_root(g: PwFun, i: int):
    # interior root of piece i on the open interval, or None
    m = g.slopes[i]
    if m == 0:
        return None
    r = g.breaks[i] - g.starts[i] / m
    if g.breaks[i] < r < g.breaks[i + 1]:
        return r
    return None


def sign_profile(d: PwFun) -> list[SignInterval]:
    """Maximal open intervals on which ``d`` has constant sign.

    Signs are taken from values on open intervals, so a jump can flip the
    sign without a root.  Zero stretches are reported with sign 0.
    """
    raw: list[SignInterval] = []
    for i in range(d.npieces):
        a, b = d.breaks[i], d.breaks[i + 1]
        r = _piece_root(d, i)
        if r is None:
            # no interior root: the sign is the sign of the midpoint value
            mid = d.starts[i] + d.slopes[i] * (b - a) / 2
            raw.append(SignInterval(a, b, _sign(mid)))
        else:
            raw.append(SignInterval(a, r, _sign(d.starts[i])))
            raw.append(SignInterval(r, b, _sign(d.slopes[i])))
    merged = [raw[0]]
    for iv in raw[1:]:
        if iv.sign == merged[-1].sign:
            merged[-1] = SignInterval(merged[-1].lo, iv.hi, iv.sign)
        else:
            merged.append(iv)
    return merged


def min_prefix_integral(d: PwFun) -> tuple[Fraction, Fraction]:
    """Global minimum of ``H(t) = ∫_0^t d`` over [0, 1] as ``(argmin, min)``.

    H is piecewise quadratic, so its minimum sits at a breakpoint or at an
    interior root of ``d``.  Ties go to the smallest t.
    """
    best_t, best = ZERO, ZERO
    h = ZERO
    for i in range(d.npieces):
        a, b = d.breaks[i], d.breaks[i + 1]
        s, m = d.starts[i], d.slopes[i]
        r = _piece_root(d, i)
        if r is not None:
            hr = h + s * (r - a) + m * (r - a) ** 2 / 2
            if hr < best:
                best_t, best = r, hr
        w = b - a
        h = h + s * w + m * w * w / 2
        if h < best:
            best_t, best = b, h
    return best_t, best


def constant(value) -> PwFun:
    v = as_rational(value)
    return PwFun((ZERO, ONE), (ZERO,), (v,), v)


def step(at, height=1) -> PwFun:
    """``height`` times the indicator of ``[at, ∞)``, restricted to [0, 1]."""
    at, height = as_rational(at), as_rational(height)
    if not 0 <= at <= 1:
        raise ValueError(f"step location {at} outside [0, 1]")
    if at == 0:
        return constant(height)
    if at == 1:
        return PwFun((ZERO, ONE), (ZERO,), (ZERO,), height)
    return PwFun((ZERO, at, ONE), (ZERO, ZERO), (ZERO, height), height)


def identity() -> PwFun:
    """The uniform distribution function ``G(t) = t``."""
    return PwFun((ZERO, ONE), (ONE,), (ZERO,), ONE)

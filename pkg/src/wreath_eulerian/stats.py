"""Descent statistics and combinatorial maps on colored permutations.

Colors are ordered linearly 0 < 1 < ... < alpha-1 wherever a comparison
appears; none of the functions here ever wraps a comparison around the
cyclic structure.  Winding numbers, by contrast, are genuinely cyclic: they
trace a clock hand across the color marks and count visits to a chosen mark.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import ColoredPermutation, ValidationError


@dataclass(frozen=True, slots=True)
class ColorSequence:
    """A bare color vector in (Z_alpha)^n, the input of winding numbers."""

    alpha: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.colors, tuple):
            object.__setattr__(self, "colors", tuple(self.colors))
        if self.alpha < 1:
            raise ValidationError(f"alpha must be >= 1, got {self.alpha}")
        if not self.colors:
            raise ValidationError("color sequence must be nonempty")
        for c in self.colors:
            if not 0 <= c < self.alpha:
                raise ValidationError(
                    f"color {c} out of range for alpha={self.alpha}")


def colored_descent_set(w: ColoredPermutation) -> frozenset[int]:
    """Positions i (1-based, i < n) where the colors differ, or the colors
    agree and the window descends."""
    win, col = w.window, w.colors
    return frozenset(
        i + 1
        for i in range(len(win) - 1)
        if col[i] != col[i + 1] or win[i] > win[i + 1]
    )


def colored_descent_count(w: ColoredPermutation) -> int:
    win, col = w.window, w.colors
    count = 0
    for i in range(len(win) - 1):
        if col[i] != col[i + 1] or win[i] > win[i + 1]:
            count += 1
    return count


def flag_descent(w: ColoredPermutation) -> int:
    """alpha * (#equal-color window descents) + alpha * (#color ascents)
    + first color, the last term added as an ordinary integer."""
    a, win, col = w.alpha, w.window, w.colors
    total = col[0]
    for i in range(len(win) - 1):
        ci, cj = col[i], col[i + 1]
        if ci == cj:
            if win[i] > win[i + 1]:
                total += a
        elif ci < cj:
            total += a
    return total


def reversal_map(w: ColoredPermutation) -> ColoredPermutation:
    """Reverse the window and shift all colors by -c_1, landing back in the
    last-color-0 set.  An involution pairing each representative with a
    partner of complementary flag statistic (the two flags sum to
    alpha*(n-1)).

    Only defined on quotient representatives; other inputs are rejected
    rather than silently canonicalized.
    """
    if not w.is_quotient_rep():
        raise ValidationError(
            f"reversal map needs last color 0, got {w}")
    a = w.alpha
    shift = w.colors[0]
    window = w.window[::-1]
    colors = tuple((c - shift) % a for c in w.colors[::-1])
    return ColoredPermutation(a, window, colors)


def delete_equal_color_descent(w: ColoredPermutation, i: int) -> ColoredPermutation:
    """Remove position i (1-based) from a quotient representative at an
    equal-color window descent, relabeling the remaining window
    order-isomorphically onto {1..n-1}.  Colors at the surviving positions
    are unchanged; the result is again a quotient representative."""
    n = w.n
    if not w.is_quotient_rep():
        raise ValidationError(f"deletion needs last color 0, got {w}")
    if n < 2:
        raise ValidationError("deletion needs n >= 2")
    if not 1 <= i < n:
        raise ValidationError(f"position {i} out of range 1..{n - 1}")
    if w.colors[i - 1] != w.colors[i] or w.window[i - 1] <= w.window[i]:
        raise ValidationError(
            f"position {i} of {w} is not an equal-color descent")
    removed = w.window[i - 1]
    rest = w.window[: i - 1] + w.window[i:]
    window = tuple(v - 1 if v > removed else v for v in rest)
    colors = w.colors[: i - 1] + w.colors[i:]
    return ColoredPermutation(w.alpha, window, colors)


def winding_number(s: ColorSequence, mark: int) -> int:
    """Counterclockwise colored winding number at ``mark``.

    Place the marks 0..alpha-1 clockwise on a clock.  The hand starts at the
    first color (one visit), then for each change of color sweeps
    counterclockwise (through decreasing labels mod alpha) to the next
    color, visiting every mark strictly after the start of the sweep up to
    and including its end.  Equal adjacent colors sweep nothing.  The result
    is the visit count at ``mark`` minus one, floored at zero for marks the
    hand never touches.
    """
    a = s.alpha
    if not 0 <= mark < a:
        raise ValidationError(f"mark {mark} out of range for alpha={a}")
    c = s.colors
    visits = 1 if c[0] == mark else 0
    for x, y in zip(c, c[1:]):
        if x != y and 1 <= (x - mark) % a <= (x - y) % a:
            visits += 1
    return max(visits - 1, 0)


def reverse_winding_number(s: ColorSequence, mark: int) -> int:
    """Clockwise variant: each sweep runs through increasing labels mod
    alpha.  Same visit-counting convention as :func:`winding_number`."""
    a = s.alpha
    if not 0 <= mark < a:
        raise ValidationError(f"mark {mark} out of range for alpha={a}")
    c = s.colors
    visits = 1 if c[0] == mark else 0
    for x, y in zip(c, c[1:]):
        if x != y and 1 <= (mark - x) % a <= (y - x) % a:
            visits += 1
    return max(visits - 1, 0)

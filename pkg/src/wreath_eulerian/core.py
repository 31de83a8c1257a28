"""Colored permutations: the group Z_alpha wr S_n and its cyclic-shift cosets.

An element is written in one-line notation with a color superscript on each
entry, e.g. ``4^1 1^1 3^2 2^0`` is the permutation 4132 with colors (1,1,2,0)
taken mod alpha.  The subgroup of constant color shifts (generated by the
identity permutation with all colors 1) is never materialized; coset logic
goes through :meth:`ColoredPermutation.canonical_rep` and
:meth:`ColoredPermutation.same_coset`.
"""
from __future__ import annotations

from dataclasses import dataclass


class ValidationError(ValueError):
    """Malformed element data or mismatched group parameters."""


@dataclass(frozen=True, slots=True)
class ColoredPermutation:
    """An element of Z_alpha wr S_n.

    ``window`` is the underlying permutation of {1..n} in one-line notation;
    ``colors`` assigns each position a color in {0..alpha-1}.
    """

    alpha: int
    window: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.window, tuple):
            object.__setattr__(self, "window", tuple(self.window))
        if not isinstance(self.colors, tuple):
            object.__setattr__(self, "colors", tuple(self.colors))
        if self.alpha < 1:
            raise ValidationError(f"alpha must be >= 1, got {self.alpha}")
        n = len(self.window)
        if n < 1:
            raise ValidationError("window must be nonempty")
        if len(self.colors) != n:
            raise ValidationError(
                f"window has {n} entries but colors has {len(self.colors)}")
        if sorted(self.window) != list(range(1, n + 1)):
            raise ValidationError(
                f"window {self.window} is not a permutation of 1..{n}")
        for c in self.colors:
            if not 0 <= c < self.alpha:
                raise ValidationError(
                    f"color {c} out of range for alpha={self.alpha}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __str__(self) -> str:
        return " ".join(f"{w}^{c}" for w, c in zip(self.window, self.colors))

    def _check_compatible(self, other: "ColoredPermutation") -> None:
        if self.alpha != other.alpha:
            raise ValidationError(
                f"alpha mismatch: {self.alpha} vs {other.alpha}")
        if self.n != other.n:
            raise ValidationError(f"size mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "ColoredPermutation") -> "ColoredPermutation":
        """Group product: entry i of ``self * other`` is self applied to
        other's i-th entry, with other's color added to the color self
        carries at that entry (mod alpha)."""
        self._check_compatible(other)
        w, c, a = self.window, self.colors, self.alpha
        window = tuple(w[y - 1] for y in other.window)
        colors = tuple((d + c[y - 1]) % a
                       for y, d in zip(other.window, other.colors))
        return ColoredPermutation(a, window, colors)

    def inverse(self) -> "ColoredPermutation":
        n, a = self.n, self.alpha
        pos = [0] * n
        for idx, v in enumerate(self.window):
            pos[v - 1] = idx + 1
        window = tuple(pos)
        colors = tuple((-self.colors[p - 1]) % a for p in pos)
        return ColoredPermutation(a, window, colors)

    def to_matrix(self) -> "GenPermMatrix":
        """Generalized permutation matrix: column j carries root-of-unity
        exponent c_j at row w_j."""
        entries = tuple(zip(self.window, self.colors))
        return GenPermMatrix(self.alpha, self.n, entries)

    def canonical_rep(self) -> "ColoredPermutation":
        """The coset representative under constant color shifts with last
        color 0.  Idempotent."""
        shift = self.colors[-1]
        if shift == 0:
            return self
        a = self.alpha
        colors = tuple((c - shift) % a for c in self.colors)
        return ColoredPermutation(a, self.window, colors)

    def same_coset(self, other: "ColoredPermutation") -> bool:
        """True iff the two elements differ by a constant color shift."""
        self._check_compatible(other)
        if self.window != other.window:
            return False
        a = self.alpha
        shift = (self.colors[0] - other.colors[0]) % a
        return all((c - d) % a == shift
                   for c, d in zip(self.colors, other.colors))

    def is_quotient_rep(self) -> bool:
        """True iff the last color is 0."""
        return self.colors[-1] == 0


@dataclass(frozen=True, slots=True)
class GenPermMatrix:
    """n x n generalized permutation matrix with root-of-unity entries.

    Stored exactly: ``entries[j]`` is the pair (row, exponent) of the single
    nonzero entry zeta^exponent in column j+1.  The root of unity is never
    evaluated; products are exponent additions mod alpha.
    """

    alpha: int
    size: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if self.alpha < 1:
            raise ValidationError(f"alpha must be >= 1, got {self.alpha}")
        if len(self.entries) != self.size:
            raise ValidationError("one entry required per column")
        rows = sorted(r for r, _ in self.entries)
        if rows != list(range(1, self.size + 1)):
            raise ValidationError("entries must hit each row exactly once")
        for _, e in self.entries:
            if not 0 <= e < self.alpha:
                raise ValidationError(
                    f"exponent {e} out of range for alpha={self.alpha}")

    def __mul__(self, other: "GenPermMatrix") -> "GenPermMatrix":
        if self.alpha != other.alpha or self.size != other.size:
            raise ValidationError("matrix parameter mismatch")
        a = self.alpha
        entries = []
        for rb, eb in other.entries:
            ra, ea = self.entries[rb - 1]
            entries.append((ra, (ea + eb) % a))
        return GenPermMatrix(a, self.size, tuple(entries))


def validate(alpha: int, window, colors) -> ColoredPermutation:
    """Build a checked ColoredPermutation from raw input."""
    return ColoredPermutation(alpha, tuple(window), tuple(colors))


def identity(alpha: int, n: int) -> ColoredPermutation:
    """The identity element 1^0 2^0 ... n^0."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    return ColoredPermutation(alpha, tuple(range(1, n + 1)), (0,) * n)


def color_shift_generator(alpha: int, n: int) -> ColoredPermutation:
    """The identity permutation with all colors 1; generates the central
    subgroup of constant color shifts (order alpha)."""
    if alpha == 1:
        return identity(alpha, n)
    return ColoredPermutation(alpha, tuple(range(1, n + 1)), (1,) * n)


def parse(alpha: int, text: str) -> ColoredPermutation:
    """Parse one-line colored notation, e.g. ``4^1 1^1 3^2 2^0``."""
    window, colors = [], []
    tokens = text.split()
    if not tokens:
        raise ValidationError("empty element text")
    for tok in tokens:
        value, sep, color = tok.partition("^")
        if not sep:
            raise ValidationError(f"token {tok!r} is missing a color (w^c)")
        try:
            window.append(int(value))
            colors.append(int(color))
        except ValueError:
            raise ValidationError(f"token {tok!r} is not of the form w^c") from None
    return ColoredPermutation(alpha, tuple(window), tuple(colors))

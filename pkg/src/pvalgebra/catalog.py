"""Regular prehomogeneous spaces of commutative parabolic type.

Only three numbers per space matter downstream: ``n`` (the rank is
``n + 1``, the degree of the fundamental invariant), ``k = dim V+`` and the
structure constant ``d`` with ``d/2 = (k - (n+1)) / (n (n+1))``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D1 = "D1"
    D2 = "D2"
    E7 = "E7"
    CUSTOM = "Custom"


class CatalogError(ValueError):
    pass


def structure_constant(n: int, k: int) -> Fraction:
    """``d`` from the rank parameter and the dimension."""
    if n < 1:
        return Fraction(0)
    return 2 * Fraction(k - (n + 1), n * (n + 1))


@dataclass(frozen=True)
class PVType:
    family: Family
    n: int
    k: int
    d: Fraction
    label: str

    def __post_init__(self):
        if self.n < 0 or self.k < 1:
            raise CatalogError(f"bad parameters n={self.n}, k={self.k}")
        if self.n >= 1 and self.d != structure_constant(self.n, self.k):
            raise CatalogError(f"{self.label}: d={self.d} violates d/2 = (k-(n+1))/(n(n+1))")
        if self.n == 0 and self.d != 0:
            raise CatalogError("d is unused for n = 0 and must be stored as 0")

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def half_d(self) -> Fraction:
        return self.d / 2

    def as_dict(self) -> dict:
        return {"label": self.label, "family": self.family.value, "n": self.n,
                "k": self.k, "d": str(self.d)}

    def __str__(self):
        return self.label


def _make(family, n, k, label):
    return PVType(family, n, k, structure_constant(n, k), label)


def builtin(family: str | Family, size: int | None = None) -> PVType:
    """Catalog entry for a Table-1 family.

    ``A`` is parametrized by the matrix size ``m`` (fundamental invariant
    ``det`` on ``m x m`` matrices); ``C`` by the size of symmetric matrices;
    ``B``/``D1`` by the Dynkin index with ``dim V+`` as listed in the table.
    """
    fam = Family(family)
    if fam is Family.E7:
        if size not in (None, 7):
            raise CatalogError("E7 takes no size parameter")
        return _make(fam, 2, 27, "E7")
    if size is None:
        raise CatalogError(f"family {fam.value} needs a size parameter")
    m = int(size)
    if fam is Family.A:
        if m < 2:
            raise CatalogError("A-family needs matrix size m >= 2")
        return _make(fam, m - 1, m * m, f"A:{m}")
    if fam is Family.B:
        if m < 2:
            raise CatalogError("B_m needs m >= 2")
        return _make(fam, 1, 2 * m - 2, f"B:{m}")
    if fam is Family.D1:
        if m < 4:
            raise CatalogError("D1_m needs m >= 4")
        return _make(fam, 1, 2 * m - 1, f"D1:{m}")
    if fam is Family.C:
        if m < 2:
            raise CatalogError("C-family needs matrix size m >= 2")
        return _make(fam, m - 1, m * (m + 1) // 2, f"C:{m}")
    raise CatalogError(f"family {fam.value} is only available through custom(n, k)")


def quadratic(k: int) -> PVType:
    """Nondegenerate quadratic form on ``C^k``: ``n = 1``, ``d = k - 2``."""
    if k < 3:
        raise CatalogError("quadratic family needs k >= 3")
    fam = Family.B if k % 2 == 0 else Family.D1
    return _make(fam, 1, k, f"quadratic:{k}")


def custom(n: int, k: int) -> PVType:
    if n < 1:
        raise CatalogError("custom entries need n >= 1")
    if k <= n + 1:
        raise CatalogError(f"k={k} must exceed n+1={n + 1}")
    return _make(Family.CUSTOM, n, k, f"custom:{n}:{k}")


#: the default sweep used by verification suites (all have n <= 3)
CATALOG: tuple[PVType, ...] = (
    builtin("A", 2), builtin("A", 3), builtin("A", 4),
    builtin("B", 3), builtin("B", 4), builtin("D1", 4),
    builtin("C", 2), builtin("C", 3), builtin("C", 4),
    builtin("E7"),
    quadratic(5),
)


def parse_pv(text: str) -> PVType:
    """``A:3``, ``C:2``, ``E7``, ``quadratic:5`` or ``custom:n:k``."""
    parts = [p.strip() for p in text.split(":")]
    head = parts[0]
    try:
        if head.lower() in ("custom",):
            if len(parts) != 3:
                raise CatalogError("custom needs custom:n:k")
            return custom(int(parts[1]), int(parts[2]))
        if head.lower() in ("quadratic", "q"):
            if len(parts) != 2:
                raise CatalogError("quadratic needs quadratic:k")
            return quadratic(int(parts[1]))
        if head.upper() == "E7":
            return builtin(Family.E7)
        if len(parts) != 2:
            raise CatalogError(f"expected family:size, got {text!r}")
        return builtin(head.upper() if head.upper() != "D1" else "D1", int(parts[1]))
    except ValueError as exc:
        if isinstance(exc, CatalogError):
            raise
        raise CatalogError(f"cannot parse PV selection {text!r}: {exc}") from None


def catalog_table(entries=CATALOG) -> str:
    rows = [("name", "family", "n", "k", "d")]
    rows += [(p.label, p.family.value, str(p.n), str(p.k), str(p.d)) for p in entries]
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def catalog_json(entries=CATALOG) -> str:
    return json.dumps([p.as_dict() for p in entries], indent=2)

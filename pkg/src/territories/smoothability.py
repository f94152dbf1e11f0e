"""Existence bounds for non-smoothable singularities via spine dimensions.

For a fixed genus and branch count, the largest spine over all admissible
conductance profiles is attained at an all-even profile; comparing that
dimension against ``3g - 3 + 2m`` certifies the existence of
non-smoothable singularities.  Everything is exact integer arithmetic.

The verdict vocabulary is deliberately two-valued: ``nonsmoothable-exists``
or ``unknown``.  A negative certificate would require an external
smoothability result, which is out of scope here.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ConductanceVector
from .charts import spine_relative_dimension

CSV_HEADER = ["g", "m", "verdict", "c_star", "spine_dim", "threshold", "case", "beta"]


def spine_lower_bound(ambient: ConductanceVector, genus: int) -> int:
    """Exact value of ``(c - m - g)(g + m - c/2 - p/2)`` (an integer)."""
    c = ambient.total
    m = ambient.m
    p = sum(1 for ci in ambient.c if ci % 2 == 1)
    value = Fraction(c - m - genus) * (genus + m - Fraction(c, 2) - Fraction(p, 2))
    assert value.denominator == 1, "c + p is always even"
    return int(value)


def _even_profile_dim(g: int, m: int, k: int) -> int:
    """Spine dimension of an all-even profile with half-sum ``k``."""
    return (2 * k - m - g) * (g + m - k)


def best_conductances(g: int, m: int) -> tuple[int, int]:
    """Even conductance total maximizing the spine dimension, with that maximum.

    The closed form (an eighth of ``(g + m)^2`` minus a remainder-class
    correction when ``3g > m``, else the value at the minimal total) is
    cross-checked against brute force over all admissible even totals.
    """
    if g < 0 or m < 1:
        raise ValueError("need g >= 0 and m >= 1")
    # brute force over even totals c = 2k, k in [m, g + m]
    best_k = m
    best_val = _even_profile_dim(g, m, m)
    for k in range(m, g + m + 1):
        val = _even_profile_dim(g, m, k)
        if val > best_val:
            best_k, best_val = k, val
    if 3 * g > m:
        alpha8 = {0: 0, 1: 1, 2: 4, 3: 1}[(g + m) % 4]
        closed = ((g + m) ** 2 - alpha8) // 8
        assert ((g + m) ** 2 - alpha8) % 8 == 0
    else:
        closed = (m - g) * g
    if closed != best_val:
        raise AssertionError(
            f"closed-form spine maximum {closed} disagrees with brute force {best_val} at (g={g}, m={m})"
        )
    return 2 * best_k, best_val


@dataclass(frozen=True)
class SmoothabilityVerdict:
    g: int
    m: int
    verdict: str  # "nonsmoothable-exists" | "unknown"
    c_star: int
    spine_dim: int
    threshold: int
    case: str  # "quadratic" (3g > m) | "boundary" (3g <= m)
    beta: int

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "m": self.m,
            "verdict": self.verdict,
            "c_star": self.c_star,
            "spine_dim": self.spine_dim,
            "threshold": self.threshold,
            "case": self.case,
            "beta": self.beta,
        }

    def csv_row(self) -> list:
        return [self.g, self.m, self.verdict, self.c_star, self.spine_dim, self.threshold, self.case, self.beta]


def nonsmoothable_exists(g: int, m: int) -> SmoothabilityVerdict:
    """Case analysis for the existence of a non-smoothable ``(g, m)`` singularity.

    Genus 0 is always ``unknown``: the dimension argument degenerates
    there and genus-0 points are seminormal.
    """
    c_star, spine_dim = best_conductances(g, m)
    threshold = 3 * g - 3 + 2 * m
    beta = {0: 0, 1: 1, 2: 4, 3: 1}[(g + m) % 4]
    if 3 * g > m:
        case = "quadratic"
        holds = (g + m) ** 2 - beta >= 24 * g - 24 + 16 * m
    else:
        case = "boundary"
        holds = (m - g) * g >= threshold
    if holds != (spine_dim >= threshold):
        raise AssertionError(
            f"case analysis disagrees with the spine maximum at (g={g}, m={m})"
        )
    verdict = "nonsmoothable-exists" if holds and g >= 1 else "unknown"
    return SmoothabilityVerdict(
        g=g, m=m, verdict=verdict, c_star=c_star, spine_dim=spine_dim,
        threshold=threshold, case=case, beta=beta,
    )


def smoothability_map(g_max: int, m_max: int) -> list[SmoothabilityVerdict]:
    """Verdicts over the grid ``[0..g_max] x [1..m_max]`` in row-major order."""
    if g_max < 1 or m_max < 1:
        raise ValueError("grid bounds must be >= 1")
    return [nonsmoothable_exists(g, m) for g in range(0, g_max + 1) for m in range(1, m_max + 1)]


def map_to_csv(verdicts: list[SmoothabilityVerdict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for v in verdicts:
        writer.writerow(v.csv_row())
    return buffer.getvalue()


def map_to_svg(verdicts: list[SmoothabilityVerdict]) -> str:
    """Static scatter of the verdict grid (filled = exists, hollow = unknown)."""
    g_max = max(v.g for v in verdicts)
    m_max = max(v.m for v in verdicts)
    cell = 10
    pad = 30
    width = pad * 2 + g_max * cell
    height = pad * 2 + (m_max - 1) * cell
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<style>.exists{fill:#d95f02;}.unknown{fill:none;stroke:#7570b3;stroke-width:1;}'
        ".axis{font:9px sans-serif;fill:#333;}</style>",
        f'<text class="axis" x="{pad}" y="{height - 6}">genus</text>',
        f'<text class="axis" x="4" y="{pad - 10}">branches</text>',
    ]
    for v in sorted(verdicts, key=lambda v: (v.g, v.m)):
        x = pad + v.g * cell
        y = height - pad - (v.m - 1) * cell
        cls = "exists" if v.verdict == "nonsmoothable-exists" else "unknown"
        lines.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="3"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

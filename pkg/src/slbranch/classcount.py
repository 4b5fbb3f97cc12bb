"""Parametric conjugacy classes of GL_n(q).

A class is labelled by a semisimple part (distinct Frobenius classes
``[sigma_i]`` with multiplicities ``k_i``, ``sum k_i deg(sigma_i) = n``) and a
multipartition ``mu`` with ``|mu_i| = k_i`` giving the Jordan type of the
unipotent part inside ``GL_{k_i}(q^{d_i})``. No matrices are touched here.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Iterator

from . import partitions as P
from .gfq import FrobClass, tower
from .numth import EllPrime, PrimePowerQ, ell_part

__all__ = [
    "SemisimpleLabel",
    "ClassLabel",
    "gl_order",
    "unipotent_centralizer_order",
    "centralizer_order",
    "class_size",
    "is_ell_regular",
    "det_exponent",
    "splitting_in_R",
    "enumerate_labels",
    "count_classes",
    "class_table",
    "table_to_csv",
    "table_to_json",
]


def gl_order(r: int, Q: int) -> int:
    """|GL_r(Q)|."""
    return prod(Q**r - Q**j for j in range(r))


@dataclass(frozen=True, order=True)
class SemisimpleLabel:
    blocks: tuple[tuple[FrobClass, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))
        cls = [c for c, _ in self.blocks]
        if len(set(cls)) != len(cls):
            raise ValueError("semisimple label repeats a Frobenius class")
        if any(k < 1 for _, k in self.blocks):
            raise ValueError("multiplicities must be positive")

    @property
    def n(self) -> int:
        return sum(c.level * k for c, k in self.blocks)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.blocks)


@dataclass(frozen=True, order=True)
class ClassLabel:
    q: int
    ss: SemisimpleLabel
    mp: P.Multipartition

    def __post_init__(self):
        PrimePowerQ(self.q)
        if len(self.mp) != len(self.ss.blocks):
            raise ValueError("multipartition and semisimple label have different lengths")
        for (c, k), mu in zip(self.ss.blocks, self.mp):
            if P.size(P.make(mu)) != k:
                raise ValueError(f"|{mu}| != multiplicity {k}")

    @property
    def n(self) -> int:
        return self.ss.n

    def to_dict(self) -> dict:
        return {
            "blocks": [
                {"deg": c.level, "exp": c.canon_exp, "mult": k, "jordan": list(mu)}
                for (c, k), mu in zip(self.ss.blocks, self.mp)
            ]
        }

    def __str__(self):
        return "(" + ", ".join(
            f"[{c.level}:{c.canon_exp}]^{list(mu)}" for (c, _), mu in zip(self.ss.blocks, self.mp)
        ) + ")"


def unipotent_centralizer_order(lam: P.Partition, Q: int) -> int:
    """|C_{GL_k(Q)}(J(lam))| = Q^N prod_i |GL_{r_i}(Q)| with
    N = sum_j (lam'_j)^2 - sum_i r_i^2."""
    if Q < 2:
        raise ValueError(f"Q must be >= 2, got {Q}")
    r = P.multiplicities(lam)
    N = sum(x * x for x in P.transpose(lam)) - sum(v * v for v in r.values())
    return Q**N * prod(gl_order(v, Q) for v in r.values())


def centralizer_order(c: ClassLabel) -> int:
    return prod(
        unipotent_centralizer_order(mu, c.q**cls.level)
        for (cls, _), mu in zip(c.ss.blocks, c.mp)
    )


def class_size(c: ClassLabel) -> int:
    return gl_order(c.n, c.q) // centralizer_order(c)


def is_ell_regular(c: ClassLabel, ell: int) -> bool:
    t = tower(c.q)
    return all(t.is_ell_regular(t.rep(cls), ell) for cls, _ in c.ss.blocks)


def det_exponent(c: ClassLabel) -> int:
    """det of the class as a power of eps (product of norms of the eigenvalues)."""
    return sum(k * cls.canon_exp for cls, k in c.ss.blocks) % (c.q - 1)


def splitting_in_R(c: ClassLabel, ell: int) -> int:
    """Number of R_n-classes into which an l-regular GL_n-class splits:
    gcd((q-1)_l, Delta(mu))."""
    EllPrime(ell, PrimePowerQ(c.q))
    if not is_ell_regular(c, ell):
        raise ValueError(f"class {c} is not l-regular for ell={ell}")
    return gcd(ell_part(c.q - 1, ell), P.delta(c.mp))


def _semisimple(classes: list[FrobClass], start: int, remaining: int) -> Iterator[tuple]:
    if remaining == 0:
        yield ()
        return
    for i in range(start, len(classes)):
        c = classes[i]
        if c.level > remaining:
            break
        for k in range(1, remaining // c.level + 1):
            for rest in _semisimple(classes, i + 1, remaining - k * c.level):
                yield ((c, k),) + rest


@lru_cache(maxsize=64)
def _labels(n: int, q: int) -> tuple[ClassLabel, ...]:
    t = tower(q)
    t.check_level(n)
    classes = [c for d in range(1, n + 1) for c in t.classes_of_degree(d)]
    out = []
    for blocks in _semisimple(classes, 0, n):
        ss = SemisimpleLabel(blocks)
        for mp in P.multipartitions_of(ss.multiplicities):
            out.append(ClassLabel(q, ss, mp))
    return tuple(sorted(out))


def enumerate_labels(n: int, q: int, ell: int | None = None) -> list[ClassLabel]:
    """All class labels of GL_n(q); only l-regular ones when ``ell`` is given."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    labels = _labels(n, q)
    if ell is None:
        return list(labels)
    EllPrime(ell, PrimePowerQ(q))
    return [c for c in labels if is_ell_regular(c, ell)]


def count_classes(n: int, q: int, ell: int, filter: str = "all", group: str = "GL") -> int:
    """Parametric class counts.

    ``group="GL"`` counts labels passing ``filter`` ("all" or "ell_regular");
    ``group="R"`` sums the R_n-splitting over l-regular labels and is only
    defined with ``filter="ell_regular"``.
    """
    group = group.upper()
    if filter not in ("all", "ell_regular"):
        raise ValueError(f"unknown filter {filter!r}")
    if group == "GL":
        return len(enumerate_labels(n, q, ell if filter == "ell_regular" else None))
    if group == "R":
        if filter != "ell_regular":
            raise ValueError("R-class counts are only available for l-regular classes")
        return sum(splitting_in_R(c, ell) for c in enumerate_labels(n, q, ell))
    raise ValueError(f"unknown group {group!r}")


def class_table(n: int, q: int, ell: int | None = None) -> list[dict]:
    """One row per GL_n(q) class: label, centralizer order, class size and,
    when ``ell`` is given, l-regularity and R_n-splitting."""
    rows = []
    for c in enumerate_labels(n, q):
        row = {
            "label": str(c),
            "centralizer_order": centralizer_order(c),
            "class_size": class_size(c),
        }
        if ell is not None:
            reg = is_ell_regular(c, ell)
            row["ell_regular"] = reg
            row["splitting"] = splitting_in_R(c, ell) if reg else None
        rows.append(row)
    return rows


def table_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=1)


def table_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if v is None else v) for k, v in r.items()})
    return buf.getvalue()

"""Combinatorial semistable K3 fibers: Kulikov classification, weight-graded
dimension tables, and first-page dimensions of the weight spectral sequence.

The input is purely combinatorial: components with first Betti numbers
(second Betti numbers optional), double curves with genera, and triple
points. Kinds (rational / elliptic_ruled / k3) are optional tags; when
absent, rationality is inferred from b1 = 0 and elliptic-ruledness from
b1 = 2, the weakest testable surrogate for the birational conditions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dualcomplex import DeltaComplex, is_sphere_triangulation

KINDS = ("rational", "elliptic_ruled", "k3")


class NotKulikov(Exception):
    """Raised when a fiber matches none of the three Kulikov patterns."""


class MissingBetti(Exception):
    """Raised when an operation needs b2 data that a component lacks."""


class KulikovType(enum.Enum):
    I = "I"
    II = "II"
    III = "III"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Component:
    id: object
    b1: int
    b2: int | None = None
    kind: str | None = None

    def __post_init__(self):
        if self.b1 < 0 or (self.b2 is not None and self.b2 < 0):
            raise ValueError(f"component {self.id!r}: Betti numbers must be nonnegative")
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"component {self.id!r}: unknown kind {self.kind!r}")


@dataclass(frozen=True)
class DoubleCurve:
    id: object
    components: tuple
    genus: int

    def __post_init__(self):
        if len(self.components) != 2 or self.components[0] == self.components[1]:
            raise ValueError(f"double curve {self.id!r} must join two distinct components")
        if self.genus < 0:
            raise ValueError(f"double curve {self.id!r}: genus must be nonnegative")


@dataclass(frozen=True)
class TriplePoint:
    id: object
    curves: tuple

    def __post_init__(self):
        if len(self.curves) != 3 or len(set(self.curves)) != 3:
            raise ValueError(f"triple point {self.id!r} needs three distinct double curves")


class SNCSurface:
    """A simple normal crossing surface given by its strata incidence."""

    def __init__(self, components, double_curves, triple_points=()):
        self.components = tuple(components)
        self.double_curves = tuple(double_curves)
        self.triple_points = tuple(triple_points)

        comp_ids = [c.id for c in self.components]
        if len(set(comp_ids)) != len(comp_ids):
            raise ValueError("repeated component id")
        comp_set = set(comp_ids)
        curve_ids = [d.id for d in self.double_curves]
        if len(set(curve_ids)) != len(curve_ids):
            raise ValueError("repeated double curve id")
        point_ids = [t.id for t in self.triple_points]
        if len(set(point_ids)) != len(point_ids):
            raise ValueError("repeated triple point id")
        curves_by_id = {d.id: d for d in self.double_curves}

        for d in self.double_curves:
            if any(c not in comp_set for c in d.components):
                raise ValueError(f"double curve {d.id!r} references an unknown component")

        self._triangles = {}
        for t in self.triple_points:
            if any(did not in curves_by_id for did in t.curves):
                raise ValueError(f"triple point {t.id!r} references an unknown double curve")
            d = [curves_by_id[did] for did in t.curves]
            shared = []
            for i in range(3):
                common = set(d[i].components) & set(d[(i + 1) % 3].components)
                if len(common) != 1:
                    raise ValueError(
                        f"triple point {t.id!r}: curves {d[i].id!r} and {d[(i + 1) % 3].id!r} "
                        f"share {len(common)} components, expected exactly 1"
                    )
                shared.append(common.pop())
            if len(set(shared)) != 3:
                raise ValueError(f"triple point {t.id!r}: incident components are not distinct")
            # shared[i] is common to curves i and i+1; curve 0 joins shared[2], shared[0]
            v0, v1, v2 = shared[2], shared[0], shared[1]
            self._triangles[t.id] = ((v0, v1, v2), tuple(t.curves))

    def dual_complex(self) -> DeltaComplex:
        """Vertex per component, edge per double curve, triangle per triple point."""
        return DeltaComplex(
            [c.id for c in self.components],
            {d.id: d.components for d in self.double_curves},
            self._triangles,
        )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        out = {
            "components": [
                {
                    "id": c.id,
                    "b1": c.b1,
                    **({"b2": c.b2} if c.b2 is not None else {}),
                    **({"kind": c.kind} if c.kind is not None else {}),
                }
                for c in self.components
            ],
            "double_curves": [
                {"id": d.id, "components": list(d.components), "genus": d.genus}
                for d in self.double_curves
            ],
            "triple_points": [{"id": t.id, "curves": list(t.curves)} for t in self.triple_points],
        }
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "SNCSurface":
        try:
            components = [
                Component(c["id"], c["b1"], c.get("b2"), c.get("kind"))
                for c in data["components"]
            ]
            curves = [
                DoubleCurve(d["id"], tuple(d["components"]), d["genus"])
                for d in data["double_curves"]
            ]
            points = [
                TriplePoint(t.get("id", f"t{i}"), tuple(t["curves"]))
                for i, t in enumerate(data.get("triple_points", []))
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed surface payload: {exc}") from exc
        return cls(components, curves, points)


@dataclass(frozen=True)
class GrWDims:
    """Dimensions of the five weight-graded pieces of H^2, indices 0..4."""

    dims: tuple

    def __post_init__(self):
        if len(self.dims) != 5 or any(d < 0 for d in self.dims):
            raise ValueError("GrWDims needs five nonnegative entries")
        if sum(self.dims) != 22:
            raise ValueError(f"weight-graded dimensions must sum to 22, got {sum(self.dims)}")
        if any(self.dims[n] != self.dims[4 - n] for n in range(5)):
            raise ValueError("weight-graded dimensions must satisfy dims[n] = dims[4-n]")


_GRW_TABLE = {
    KulikovType.I: (0, 0, 22, 0, 0),
    KulikovType.II: (0, 2, 18, 2, 0),
    KulikovType.III: (1, 0, 20, 0, 1),
}


def grw_dims(t: KulikovType) -> GrWDims:
    """The weight-graded dimension 5-vector attached to a Kulikov type."""
    return GrWDims(_GRW_TABLE[t])


def _is_rational(c: Component) -> bool:
    return c.b1 == 0 and c.kind in (None, "rational")


def _is_elliptic_ruled(c: Component) -> bool:
    return c.b1 == 2 and c.kind in (None, "elliptic_ruled")


def _type1_failure(s: SNCSurface):
    if len(s.components) != 1:
        return f"{len(s.components)} components, expected 1"
    if s.double_curves:
        return "has double curves"
    c = s.components[0]
    if c.kind not in (None, "k3"):
        return f"component kind is {c.kind!r}, expected k3"
    if c.b1 != 0:
        return f"component has b1 = {c.b1}, expected 0"
    if c.b2 is not None and c.b2 != 22:
        return f"component has b2 = {c.b2}, expected 22"
    return None


def _type2_failure(s: SNCSurface):
    n = len(s.components)
    if n < 2:
        return "fewer than 2 components"
    if s.triple_points:
        return "has triple points"
    for d in s.double_curves:
        if d.genus != 1:
            return f"double curve {d.id!r} has genus {d.genus}, expected 1"
    degree = {c.id: 0 for c in s.components}
    neighbors = {c.id: [] for c in s.components}
    seen_pairs = set()
    for d in s.double_curves:
        a, b = d.components
        pair = frozenset((a, b))
        if pair in seen_pairs:
            return f"components {a!r} and {b!r} meet in more than one curve (dual graph not a path)"
        seen_pairs.add(pair)
        degree[a] += 1
        degree[b] += 1
        neighbors[a].append(b)
        neighbors[b].append(a)
    if len(s.double_curves) != n - 1:
        return f"{len(s.double_curves)} double curves, a chain of {n} needs {n - 1}"
    ends = [cid for cid, deg in degree.items() if deg == 1]
    if len(ends) != 2 or any(deg > 2 for deg in degree.values()):
        return "dual graph is not a path"
    # walk the path to check connectivity and collect the order
    order = [ends[0]]
    prev = None
    while True:
        nxt = [x for x in neighbors[order[-1]] if x != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != n:
        return "dual graph is not connected"
    by_id = {c.id: c for c in s.components}
    for cid in (order[0], order[-1]):
        if not _is_rational(by_id[cid]):
            return f"end component {cid!r} is not rational (b1 = 0)"
    for cid in order[1:-1]:
        if not _is_elliptic_ruled(by_id[cid]):
            return f"interior component {cid!r} is not elliptic ruled (b1 = 2)"
    return None


def _type3_failure(s: SNCSurface):
    for c in s.components:
        if not _is_rational(c):
            return f"component {c.id!r} is not rational (b1 = 0)"
    for d in s.double_curves:
        if d.genus != 0:
            return f"double curve {d.id!r} has genus {d.genus}, expected 0"
    check = is_sphere_triangulation(s.dual_complex())
    if not check:
        return f"dual complex is not a sphere triangulation: {check.reason}"
    return None


def classify(s: SNCSurface) -> KulikovType:
    """Match the fiber against the Type I / II / III patterns.

    Raises NotKulikov when none fits, naming the first violated clause of
    each pattern.
    """
    if not s.components:
        raise NotKulikov("empty fiber")
    failures = []
    for t, probe in (
        (KulikovType.I, _type1_failure),
        (KulikovType.II, _type2_failure),
        (KulikovType.III, _type3_failure),
    ):
        reason = probe(s)
        if reason is None:
            return t
        failures.append(f"not Type {t}: {reason}")
    raise NotKulikov("; ".join(failures))


def _strata_betti(s: SNCSurface):
    # codim-0 stratum: disjoint smooth proper surfaces, so b3 = b1, b4 = b0
    n = len(s.components)
    b1_sum = sum(c.b1 for c in s.components)
    b2_sum = sum(c.b2 for c in s.components)
    curves = len(s.double_curves)
    genus2_sum = 2 * sum(d.genus for d in s.double_curves)
    points = len(s.triple_points)
    return {
        0: (n, b1_sum, b2_sum, b1_sum, n),
        1: (curves, genus2_sum, curves, 0, 0),
        2: (points, 0, 0, 0, 0),
    }


def e1_page(s: SNCSurface) -> dict:
    """First-page dimensions of the weight spectral sequence of the fiber.

    Entry (p, q), p in -2..2, q in 0..4, is the sum over i >= max(0, -p) of
    the (q - 2i)-th Betti number of the codimension-(p + 2i) stratum; Tate
    twists do not change dimensions. Requires b2 on every component.
    """
    for c in s.components:
        if c.b2 is None:
            raise MissingBetti(f"component {c.id!r} has no b2")
    betti = _strata_betti(s)
    grid = {}
    for p in range(-2, 3):
        for q in range(0, 5):
            total = 0
            for i in range(max(0, -p), 3):
                stratum = p + 2 * i
                degree = q - 2 * i
                if stratum in betti and 0 <= degree < 5:
                    total += betti[stratum][degree]
            grid[(p, q)] = total
    return grid


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    detail: str


class CrosscheckReport:
    """Consistency report tying the type table to dual-complex cohomology."""

    def __init__(self, kulikov_type: KulikovType, entries):
        self.kulikov_type = kulikov_type
        self.entries = tuple(entries)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.kulikov_type),
            "all_passed": self.all_passed,
            "checks": [
                {"name": e.name, "passed": e.passed, "detail": e.detail} for e in self.entries
            ],
        }


def crosscheck(s: SNCSurface) -> CrosscheckReport:
    """Classify, then verify the weight table against the dual complex."""
    t = classify(s)
    dims = grw_dims(t).dims
    entries = []

    duality = all(dims[n] == dims[4 - n] for n in range(5)) and sum(dims) == 22
    entries.append(
        CheckEntry("grw_duality_and_total", duality, f"dims={list(dims)}, sum={sum(dims)}")
    )

    h0, h1, h2 = s.dual_complex().homology_dims()
    if t is KulikovType.III:
        ok = h2 == 1 and dims[4] == 1 and dims[0] == 1
        entries.append(
            CheckEntry(
                "type3_top_weight_is_dual_complex_h2",
                ok,
                f"h2(dual complex)={h2}, dims[4]={dims[4]}, dims[0]={dims[0]}",
            )
        )
    else:
        entries.append(
            CheckEntry("dual_complex_h2_vanishes", h2 == 0, f"h2(dual complex)={h2}")
        )
    return CrosscheckReport(t, entries)

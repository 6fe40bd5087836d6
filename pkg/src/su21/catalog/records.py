"""Record types for the classification data."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from ..errors import OutOfRange
from ..field import I, ONE, ZERO, FieldElement, fe, from_json, to_json
from ..linalg import Matrix3
from ..liealg import Subalgebra, from_a_coords, from_chevalley_coords

Coords = tuple[FieldElement, ...]


def _coords(c: Sequence) -> Coords:
    return tuple(fe(x) for x in c)


def _less(a: FieldElement, b: FieldElement) -> bool:
    return (b - a).real_sign() > 0


@dataclass(frozen=True)
class VectorTemplate:
    """A coordinate vector const + t * slope, affine in one parameter t."""

    const: Coords
    slope: Coords | None = None

    def __post_init__(self):
        object.__setattr__(self, "const", _coords(self.const))
        if self.slope is not None:
            object.__setattr__(self, "slope", _coords(self.slope))

    @property
    def parametrized(self) -> bool:
        return self.slope is not None and any(self.slope)

    def at(self, t: FieldElement | None) -> Coords:
        if not self.parametrized:
            return self.const
        if t is None:
            raise OutOfRange("a parameter value is required")
        return tuple(c + t * s for c, s in zip(self.const, self.slope))

    def to_json(self) -> dict:
        out = {"const": [to_json(x) for x in self.const]}
        if self.slope is not None:
            out["slope"] = [to_json(x) for x in self.slope]
        return out

    @classmethod
    def from_json(cls, data: dict) -> VectorTemplate:
        slope = data.get("slope")
        return cls(
            tuple(from_json(x) for x in data["const"]),
            tuple(from_json(x) for x in slope) if slope is not None else None,
        )


@dataclass(frozen=True)
class ParamRange:
    """A real parameter range: an optional open interval minus finitely many points."""

    excluded: tuple[FieldElement, ...] = ()
    lower: FieldElement | None = None
    upper: FieldElement | None = None
    text: str = "real"

    def __post_init__(self):
        object.__setattr__(self, "excluded", _coords(self.excluded))

    def check(self, t: FieldElement) -> None:
        t = fe(t)
        if not t.is_real():
            raise OutOfRange(f"{t} is not real ({self.text})")
        if t in self.excluded:
            raise OutOfRange(f"{t} is excluded ({self.text})")
        if self.lower is not None and not _less(self.lower, t):
            raise OutOfRange(f"{t} is below the range ({self.text})")
        if self.upper is not None and not _less(t, self.upper):
            raise OutOfRange(f"{t} is above the range ({self.text})")

    def contains(self, t: FieldElement) -> bool:
        try:
            self.check(t)
        except OutOfRange:
            return False
        return True

    def to_json(self) -> dict:
        return {
            "text": self.text,
            "excluded": [to_json(x) for x in self.excluded],
            "lower": to_json(self.lower) if self.lower is not None else None,
            "upper": to_json(self.upper) if self.upper is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> ParamRange:
        lo, hi = data.get("lower"), data.get("upper")
        return cls(
            tuple(from_json(x) for x in data["excluded"]),
            from_json(lo) if lo is not None else None,
            from_json(hi) if hi is not None else None,
            data["text"],
        )


@dataclass(frozen=True)
class ParamMap:
    """t -> (a t + b) / (c t + d), optionally followed by a Cayley map onto a circle.

    With ``cayley`` set the result is center + ((1 - s^2) + 2 s i) / (1 + s^2)
    where s is the Moebius value.  This covers every parameter change the
    catalog needs: rescalings, inversions and rational points of circles.
    """

    a: FieldElement = ONE
    b: FieldElement = ZERO
    c: FieldElement = ZERO
    d: FieldElement = ONE
    cayley: bool = False
    center: FieldElement = ZERO

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "center"):
            object.__setattr__(self, name, fe(getattr(self, name)))

    def __call__(self, t) -> FieldElement:
        t = fe(t)
        den = self.c * t + self.d
        if not den:
            raise OutOfRange(f"parameter map is undefined at {t}")
        s = (self.a * t + self.b) / den
        if not self.cayley:
            return s
        q = ONE + s * s
        if not q:
            raise OutOfRange(f"circle parametrization is undefined at {t}")
        return self.center + (ONE - s * s + fe(2) * s * I) / q

    def to_json(self) -> dict:
        return {
            "mobius": [to_json(x) for x in (self.a, self.b, self.c, self.d)],
            "cayley": self.cayley,
            "center": to_json(self.center),
        }

    @classmethod
    def from_json(cls, data: dict) -> ParamMap:
        a, b, c, d = (from_json(x) for x in data["mobius"])
        return cls(a, b, c, d, data["cayley"], from_json(data["center"]))


IDENTITY_MAP = ParamMap()


@dataclass(frozen=True)
class RealFamily:
    """A row of the real tables: a span in a-coordinates, possibly with one real parameter."""

    label: str
    table: int
    dim: int
    vectors: tuple[VectorTemplate, ...]
    param_range: ParamRange | None = None
    annotation: str = ""
    redundant: bool = False
    printed_vectors: tuple[VectorTemplate, ...] | None = None

    @property
    def parametrized(self) -> bool:
        return any(v.parametrized for v in self.vectors)

    def instantiate(self, t=None) -> Subalgebra:
        if self.parametrized:
            if t is None:
                raise OutOfRange(f"{self.label} needs a parameter value")
            t = fe(t)
            self.param_range.check(t)
        elif t is not None:
            raise OutOfRange(f"{self.label} takes no parameter")
        params = {"lambda": t} if t is not None else {}
        name = self.label if t is None else f"{self.label}^{t}"
        return Subalgebra(tuple(from_a_coords(v.at(t)) for v in self.vectors), "real", name, params)

    def printed(self, t=None) -> Subalgebra | None:
        if self.printed_vectors is None:
            return None
        t = fe(t) if t is not None else None
        return Subalgebra(tuple(from_a_coords(v.at(t)) for v in self.printed_vectors), "real", self.label)

    def to_json(self) -> dict:
        out = {
            "label": self.label,
            "table": self.table,
            "dim": self.dim,
            "vectors": [v.to_json() for v in self.vectors],
            "range": self.param_range.to_json() if self.param_range else None,
            "annotation": self.annotation,
            "redundant": self.redundant,
        }
        if self.printed_vectors is not None:
            out["printed_vectors"] = [v.to_json() for v in self.printed_vectors]
        return out

    @classmethod
    def from_json(cls, data: dict) -> RealFamily:
        pv = data.get("printed_vectors")
        return cls(
            data["label"],
            data["table"],
            data["dim"],
            tuple(VectorTemplate.from_json(v) for v in data["vectors"]),
            ParamRange.from_json(data["range"]) if data["range"] else None,
            data["annotation"],
            data["redundant"],
            tuple(VectorTemplate.from_json(v) for v in pv) if pv is not None else None,
        )


ROLES = (
    "transporter_g0",
    "cocycle_h",
    "coboundary_solution",
    "equivalence_conjugator",
    "torus_family",
    "component_rep",
)


@dataclass(frozen=True)
class WitnessRecord:
    name: str
    role: str
    matrix: Matrix3 | None = None
    family: str | None = None
    note: str = ""

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown witness role {self.role!r}")
        if (self.matrix is None) == (self.family is None):
            raise ValueError("a witness holds exactly one of a matrix or a family name")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "role": self.role,
            "matrix": self.matrix.to_json() if self.matrix is not None else None,
            "family": self.family,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data: dict) -> WitnessRecord:
        m = data["matrix"]
        return cls(data["name"], data["role"], Matrix3.from_json(m) if m is not None else None, data["family"], data["note"])


@dataclass(frozen=True)
class RealPoint:
    """A real subalgebra in the complex orbit: conjugator . u = target.

    ``conjugator`` is a product of witness names, multiplied left to right.
    ``cocycle`` names the matrix c with conjugator^-1 tau(conjugator) = c.
    """

    conjugator: tuple[str, ...]
    cocycle: str
    target: str
    target_map: ParamMap | None = None

    def to_json(self) -> dict:
        return {
            "conjugator": list(self.conjugator),
            "cocycle": self.cocycle,
            "target": self.target,
            "target_map": self.target_map.to_json() if self.target_map else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> RealPoint:
        tm = data["target_map"]
        return cls(tuple(data["conjugator"]), data["cocycle"], data["target"], ParamMap.from_json(tm) if tm else None)


@dataclass(frozen=True)
class Equivalence:
    """source^t ~ target^{map(t)}, by a recorded conjugator or by bounded search."""

    source: str
    target: str
    param_map: ParamMap = IDENTITY_MAP
    conjugator: str | None = None
    search_depth: int = 0

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "param_map": self.param_map.to_json(),
            "conjugator": self.conjugator,
            "search_depth": self.search_depth,
        }

    @classmethod
    def from_json(cls, data: dict) -> Equivalence:
        return cls(data["source"], data["target"], ParamMap.from_json(data["param_map"]), data["conjugator"], data["search_depth"])


@dataclass(frozen=True)
class Assertion:
    """A claim carried without a finite certificate; optional representatives get a cocycle check.

    ``cited`` marks claims resting on an external result (reported as skipped)
    rather than on an omitted computation (reported as unverifiable).
    """

    name: str
    detail: str
    representatives: tuple[str, ...] = ()
    cited: bool = False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "detail": self.detail,
            "representatives": list(self.representatives),
            "cited": self.cited,
        }

    @classmethod
    def from_json(cls, data: dict) -> Assertion:
        return cls(data["name"], data["detail"], tuple(data["representatives"]), data["cited"])


DISPOSITIONS = ("has_real_points", "no_real_points", "no_transporter")


@dataclass(frozen=True)
class CaseRecord:
    """One complex representative and what its orbit contributes to the real tables.

    A parametrized case is indexed by the real parameter of ``param_family``;
    ``complex_map`` turns that parameter into the complex coefficient of the
    Chevalley template.  ``binding`` is set by :func:`instantiate`.

    Cases without real points carry ``complex_samples``: at each sample a the
    transporter maps the rep at ``tau_map(conj a)`` onto tau of the rep at a,
    and none of ``orbit_maps`` sends a to that value.
    """

    id: str
    table: int
    complex_name: str
    complex_rep: tuple[VectorTemplate, ...]
    disposition: str
    transporter: str | None = None
    transporter_inverse: bool = False
    cocycle: str | None = None
    real_points: tuple[RealPoint, ...] = ()
    nontrivial_classes: tuple[str, ...] = ()
    families: tuple[tuple[str, int], ...] = ()
    stabilizer_members: tuple[str, ...] = ()
    stabilizer_nonmembers: tuple[str, ...] = ()
    equivalences: tuple[Equivalence, ...] = ()
    assertions: tuple[Assertion, ...] = ()
    param_family: str | None = None
    param_range: ParamRange | None = None
    complex_map: ParamMap | None = None
    complex_samples: tuple[FieldElement, ...] = ()
    tau_map: ParamMap | None = None
    orbit_maps: tuple[ParamMap, ...] = ()
    expected_real_orbit_count: int | str = 0
    binding: FieldElement | None = None

    def __post_init__(self):
        if self.disposition not in DISPOSITIONS:
            raise ValueError(f"unknown disposition {self.disposition!r}")

    @property
    def parametrized(self) -> bool:
        return self.param_family is not None

    def complex_parameter(self) -> FieldElement | None:
        if not self.parametrized:
            return None
        if self.binding is None:
            raise OutOfRange(f"{self.id} needs a parameter binding")
        return self.complex_map(self.binding)

    def complex_span(self, a: FieldElement | None = None) -> Subalgebra:
        if a is None and any(v.parametrized for v in self.complex_rep):
            a = self.complex_parameter()
        vecs = tuple(from_chevalley_coords(v.at(a)) for v in self.complex_rep)
        return Subalgebra(vecs, "complex", self.complex_name)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "table": self.table,
            "complex_name": self.complex_name,
            "complex_rep": [v.to_json() for v in self.complex_rep],
            "disposition": self.disposition,
            "transporter": self.transporter,
            "transporter_inverse": self.transporter_inverse,
            "cocycle": self.cocycle,
            "real_points": [p.to_json() for p in self.real_points],
            "nontrivial_classes": list(self.nontrivial_classes),
            "families": [list(f) for f in self.families],
            "stabilizer_members": list(self.stabilizer_members),
            "stabilizer_nonmembers": list(self.stabilizer_nonmembers),
            "equivalences": [e.to_json() for e in self.equivalences],
            "assertions": [a.to_json() for a in self.assertions],
            "param_family": self.param_family,
            "param_range": self.param_range.to_json() if self.param_range else None,
            "complex_map": self.complex_map.to_json() if self.complex_map else None,
            "complex_samples": [to_json(x) for x in self.complex_samples],
            "tau_map": self.tau_map.to_json() if self.tau_map else None,
            "orbit_maps": [m.to_json() for m in self.orbit_maps],
            "expected_real_orbit_count": self.expected_real_orbit_count,
            "binding": to_json(self.binding) if self.binding is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> CaseRecord:
        def opt(key, conv):
            v = data[key]
            return conv(v) if v is not None else None

        return cls(
            id=data["id"],
            table=data["table"],
            complex_name=data["complex_name"],
            complex_rep=tuple(VectorTemplate.from_json(v) for v in data["complex_rep"]),
            disposition=data["disposition"],
            transporter=data["transporter"],
            transporter_inverse=data["transporter_inverse"],
            cocycle=data["cocycle"],
            real_points=tuple(RealPoint.from_json(p) for p in data["real_points"]),
            nontrivial_classes=tuple(data["nontrivial_classes"]),
            families=tuple((f[0], f[1]) for f in data["families"]),
            stabilizer_members=tuple(data["stabilizer_members"]),
            stabilizer_nonmembers=tuple(data["stabilizer_nonmembers"]),
            equivalences=tuple(Equivalence.from_json(e) for e in data["equivalences"]),
            assertions=tuple(Assertion.from_json(a) for a in data["assertions"]),
            param_family=data["param_family"],
            param_range=opt("param_range", ParamRange.from_json),
            complex_map=opt("complex_map", ParamMap.from_json),
            complex_samples=tuple(from_json(x) for x in data["complex_samples"]),
            tau_map=opt("tau_map", ParamMap.from_json),
            orbit_maps=tuple(ParamMap.from_json(m) for m in data["orbit_maps"]),
            expected_real_orbit_count=data["expected_real_orbit_count"],
            binding=opt("binding", from_json),
        )

    def with_binding(self, t: FieldElement) -> CaseRecord:
        return replace(self, binding=fe(t))


__all__ = [
    "Assertion",
    "CaseRecord",
    "Equivalence",
    "IDENTITY_MAP",
    "ParamMap",
    "ParamRange",
    "RealFamily",
    "RealPoint",
    "VectorTemplate",
    "WitnessRecord",
]

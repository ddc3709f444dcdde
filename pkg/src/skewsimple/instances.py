"""Instance files: JSON descriptions of algebraic or dynamical instances.

An instance is either (ring, group, action) or a transformation group; the
schema is published as INSTANCE_SCHEMA and validated before the semantic
constructors run. Parsed specs serialize back to a canonical form that parses
to an equal spec.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import jsonschema

from .actions import action_from_descriptor
from .config import Caps
from .dynamics import TransformationGroup
from .errors import ActionValidationError, DomainError, InstanceParseError
from .groups import GroupTable
from .rings import ring_from_descriptor
from .skew import SkewContext

INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "seed": {"type": "integer"},
        "caps": {
            "type": "object",
            "properties": {"enumeration": {"type": "integer", "minimum": 1},
                           "witness_candidates": {"type": "integer", "minimum": 1}},
            "additionalProperties": False,
        },
        "witness_search": {"type": "boolean"},
        "ring": {"type": "object"},
        "group": {"type": "object"},
        "action": {"type": "object"},
        "dynamics": {
            "type": "object",
            "properties": {
                "points": {"type": "integer", "minimum": 1},
                "q": {"type": "integer", "minimum": 2},
                "group": {"type": "object"},
                "act": {"type": "array"},
                "natural": {"type": "boolean"},
            },
            "required": ["points", "group"],
        },
    },
    "required": ["name"],
    "additionalProperties": False,
}

_GROUP_SCHEMA = {
    "cyclic_product": {"orders"},
    "permutation": {"degree", "generators"},
    "symmetric": {"degree"},
    "table": {"mul"},
}


@dataclass
class InstanceSpec:
    """A validated instance description, buildable into live objects."""

    name: str
    seed: int = 0
    caps_override: dict = dc_field(default_factory=dict)
    witness_search: bool | None = None
    ring_desc: dict | None = None
    group_desc: dict | None = None
    action_desc: dict | None = None
    dynamics_desc: dict | None = None

    @property
    def kind(self) -> str:
        return "dynamics" if self.dynamics_desc is not None else "algebra"

    def caps(self) -> Caps:
        caps = Caps.from_env()
        if "enumeration" in self.caps_override:
            caps = caps.with_enumeration(int(self.caps_override["enumeration"]))
        if "witness_candidates" in self.caps_override:
            from dataclasses import replace
            caps = replace(caps, witness_candidates=int(self.caps_override["witness_candidates"]))
        return caps

    def build_group(self) -> GroupTable:
        desc = self.group_desc if self.kind == "algebra" else self.dynamics_desc["group"]
        return group_from_descriptor(desc, self.caps())

    def build(self):
        """Live objects: a SkewContext or a TransformationGroup.

        Above the enumeration cap the simplicity oracle refuses unless this
        instance sets witness_search; the flag is threaded onto the context.
        """
        caps = self.caps()
        group = self.build_group()
        allow_search = None if self.witness_search else False
        if self.kind == "algebra":
            ring = ring_from_descriptor(self.ring_desc, caps)
            action = action_from_descriptor(group, ring, self.action_desc)
            action.ensure_valid()
            ctx = SkewContext(ring, group, action, caps)
            ctx.witness_search = allow_search
            return ctx
        desc = self.dynamics_desc
        npoints = int(desc["points"])
        if desc.get("natural"):
            if not hasattr(group, "permutations"):
                raise InstanceParseError("natural dynamics need a permutation group",
                                         path="dynamics.natural")
            act = [[p[x] if x < len(p) else x for x in range(npoints)]
                   for p in group.permutations]
        else:
            act = desc.get("act")
            if act is None:
                raise InstanceParseError("dynamics need an action table or natural=true",
                                         path="dynamics.act")
        tg = TransformationGroup(npoints, group, act, int(desc.get("q", 2)),
                                 self.name, caps)
        tg.context.witness_search = allow_search
        return tg

    def serialize(self) -> dict:
        out: dict = {"name": self.name, "seed": self.seed}
        if self.caps_override:
            out["caps"] = dict(self.caps_override)
        if self.witness_search is not None:
            out["witness_search"] = self.witness_search
        if self.kind == "algebra":
            out["ring"] = self.ring_desc
            out["group"] = self.group_desc
            out["action"] = self.action_desc
        else:
            out["dynamics"] = self.dynamics_desc
        return out

    def to_json(self) -> str:
        return json.dumps(self.serialize(), indent=2, sort_keys=True) + "\n"


def group_from_descriptor(desc: dict, caps: Caps | None = None) -> GroupTable:
    kind = desc.get("kind")
    if kind not in _GROUP_SCHEMA:
        raise InstanceParseError(f"unknown group kind {kind!r}", path="group.kind")
    missing = _GROUP_SCHEMA[kind] - set(desc)
    if missing:
        raise InstanceParseError(f"group descriptor missing {sorted(missing)}", path="group")
    if kind == "cyclic_product":
        return GroupTable.cyclic_product(desc["orders"], caps)
    if kind == "permutation":
        return GroupTable.from_permutations(int(desc["degree"]), desc["generators"], caps)
    if kind == "symmetric":
        return GroupTable.symmetric(int(desc["degree"]), caps)
    return GroupTable(desc["mul"], desc.get("names"), "table", caps)


def parse_instance(text: str) -> InstanceSpec:
    """Parse and validate an instance document; errors carry locations."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(f"invalid JSON: {exc.msg}", line=exc.lineno,
                                 column=exc.colno) from exc
    try:
        jsonschema.validate(raw, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = ".".join(str(p) for p in exc.absolute_path)
        raise InstanceParseError(f"schema violation: {exc.message}", path=path) from exc
    has_algebra = any(k in raw for k in ("ring", "group", "action"))
    has_dynamics = "dynamics" in raw
    if has_algebra == has_dynamics:
        raise InstanceParseError(
            "exactly one of an algebraic instance (ring, group, action) or a "
            "dynamical instance (dynamics) must be present")
    if has_algebra:
        missing = [k for k in ("ring", "group", "action") if k not in raw]
        if missing:
            raise InstanceParseError(f"algebraic instance missing {missing}")
    spec = InstanceSpec(
        name=raw["name"],
        seed=int(raw.get("seed", 0)),
        caps_override=dict(raw.get("caps", {})),
        witness_search=raw.get("witness_search"),
        ring_desc=raw.get("ring"),
        group_desc=raw.get("group"),
        action_desc=raw.get("action"),
        dynamics_desc=raw.get("dynamics"),
    )
    # surface semantic problems (unknown kinds, bad tables) at parse time
    try:
        spec.build()
    except (DomainError, ActionValidationError) as exc:
        raise InstanceParseError(f"invalid instance: {exc}") from exc
    return spec


def load_instance(path: str) -> InstanceSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())

"""Stock rule packs and their data-driven assembly.

A manifest file fixes which rules apply and in what order (the order
also drives the tie-break), so packs can be extended or reordered
without touching the engine.  Point tables ship as data and are loaded
once per pack.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from ..engine import Rule, RulePack
from ..lexicon import SimLevel
from . import demonstrative, personal, zero

REGISTRY: dict[str, Rule] = {}
for _module in (demonstrative, personal, zero):
    for _rule in _module.RULES:
        if _rule.rule_id in REGISTRY:
            raise RuntimeError(f"duplicate rule id {_rule.rule_id!r}")
        REGISTRY[_rule.rule_id] = _rule

_SIM_KEYS = {str(level): level for level in SimLevel}
_SIM_KEYS["exact"] = SimLevel.EXACT


def _data_text(name: str) -> str:
    return resources.files("anaphora.data").joinpath(name).read_text(encoding="utf-8")


def load_point_tables() -> dict[str, dict[SimLevel, Fraction]]:
    """Similarity-to-points tables keyed by table name, with one entry
    per similarity level."""
    raw = json.loads(_data_text("point_tables.json"))
    tables: dict[str, dict[SimLevel, Fraction]] = {}
    for name, mapping in raw.items():
        table = {_SIM_KEYS[key]: Fraction(value) for key, value in mapping.items()}
        missing = [level for level in SimLevel if level not in table]
        if missing:
            raise ValueError(f"point table {name!r} lacks levels {missing}")
        tables[name] = table
    return tables


def load_rulepack(manifest_path=None) -> RulePack:
    """Build a rule pack from a manifest (the packaged default when no
    path is given)."""
    if manifest_path is None:
        raw = json.loads(_data_text("rulepack.json"))
    else:
        with open(manifest_path, encoding="utf-8") as handle:
            raw = json.load(handle)

    def rules_for(phase: str) -> tuple[Rule, ...]:
        out = []
        for rule_id in raw.get(phase, []):
            rule = REGISTRY.get(rule_id)
            if rule is None:
                raise ValueError(f"manifest names unknown rule {rule_id!r}")
            if rule.phase != phase:
                raise ValueError(f"rule {rule_id!r} is a {rule.phase} rule, listed under {phase}")
            out.append(rule)
        return tuple(out)

    return RulePack(
        enumerating=rules_for("enumerating"),
        judging=rules_for("judging"),
        agenda_hooks=zero.AGENDA_HOOKS,
        tables=load_point_tables(),
        config=dict(raw.get("config", {})),
    )


def default_pack() -> RulePack:
    return load_rulepack()

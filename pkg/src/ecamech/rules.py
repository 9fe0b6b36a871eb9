"""Rule tables, symmetry orbits, and the canonical set of elementary CA rules."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "RuleTable",
    "parse_rule",
    "encode_outputs",
    "mirror_rule",
    "complement_rule",
    "rule_symmetries",
    "canonical_rules",
]


def _check_rule_number(rule_number: int) -> None:
    if not isinstance(rule_number, int) or isinstance(rule_number, bool):
        raise ValueError(f"rule number must be an integer, got {rule_number!r}")
    if not 0 <= rule_number <= 255:
        raise ValueError(f"rule number must be in [0, 255], got {rule_number}")


def encode_outputs(outputs) -> int:
    """Decimal rule number from the 8 output bits, neighborhood 111 down to 000."""
    return sum(int(bit) << k for k, bit in enumerate(outputs))


@dataclass(frozen=True)
class RuleTable:
    """Local update map of an elementary CA rule.

    ``outputs[k]`` is the next state of a cell whose neighborhood
    ``(left, center, right)`` packs to ``k = 4*left + 2*center + right``.
    """

    rule_number: int
    outputs: tuple[int, ...]

    def __post_init__(self):
        _check_rule_number(self.rule_number)
        if len(self.outputs) != 8 or any(b not in (0, 1) for b in self.outputs):
            raise ValueError("a rule table needs exactly 8 binary outputs")
        if encode_outputs(self.outputs) != self.rule_number:
            raise ValueError("outputs do not re-encode to rule_number")

    @property
    def table(self) -> dict[tuple[int, int, int], int]:
        """The update map as ``{(left, center, right): output}``."""
        return {((k >> 2) & 1, (k >> 1) & 1, k & 1): self.outputs[k] for k in range(8)}

    def __call__(self, left: int, center: int, right: int) -> int:
        return self.outputs[4 * left + 2 * center + right]


def parse_rule(rule_number: int) -> RuleTable:
    """Expand a Wolfram rule number into its 8-entry update table."""
    _check_rule_number(rule_number)
    return RuleTable(rule_number, tuple((rule_number >> k) & 1 for k in range(8)))


def mirror_rule(rule_number: int) -> int:
    """Rule obtained by swapping the left and right neighbor arguments."""
    _check_rule_number(rule_number)
    out = 0
    for k in range(8):
        left, center, right = (k >> 2) & 1, (k >> 1) & 1, k & 1
        j = 4 * right + 2 * center + left
        out |= ((rule_number >> j) & 1) << k
    return out


def complement_rule(rule_number: int) -> int:
    """Rule conjugated by the 0/1 relabeling: F'(a,b,c) = 1 - F(1-a,1-b,1-c)."""
    _check_rule_number(rule_number)
    out = 0
    for k in range(8):
        out |= (1 - ((rule_number >> (7 - k)) & 1)) << k
    return out


def rule_symmetries(rule_number: int) -> set[int]:
    """Orbit of a rule under mirror, complement, and their composition."""
    _check_rule_number(rule_number)
    return {
        rule_number,
        mirror_rule(rule_number),
        complement_rule(rule_number),
        mirror_rule(complement_rule(rule_number)),
    }


@lru_cache(maxsize=1)
def _canonical_rules() -> tuple[int, ...]:
    return tuple(sorted({min(rule_symmetries(n)) for n in range(256)}))


def canonical_rules() -> list[int]:
    """The 88 orbit representatives, each the minimum of its symmetry orbit."""
    return list(_canonical_rules())

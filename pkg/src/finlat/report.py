"""Verdict and report containers shared by the lattice-law checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """Outcome of one exhaustive law scan.

    A failing verdict always carries a concrete witness (a tuple of element
    indices, or of chains for the chain condition) that can be re-checked in
    isolation; the note says which sub-condition broke.
    """

    holds: bool
    witness: tuple | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, lattice=None) -> dict:
        d: dict = {"holds": self.holds}
        d["witness"] = _jsonable(self.witness)
        d["note"] = self.note
        if lattice is not None and self.witness is not None:
            d["witness_bases"] = [
                [list(row) for row in lattice.elements[i].rows]
                for i in self.witness
                if isinstance(i, int)
            ]
        return d


def _jsonable(obj):
    if obj is None or isinstance(obj, (int, str, bool)):
        return obj
    if isinstance(obj, (tuple, list)):
        return [_jsonable(x) for x in obj]
    return str(obj)


LAW_ORDER = (
    "modular",
    "atomistic",
    "chain_condition",
    "antitone_involution",
    "complementation",
    "orthomodular",
    "paraorthomodular",
)


@dataclass
class PropertyReport:
    """Per-law verdicts for one built subspace lattice."""

    p: int
    n: int
    q: int
    modulus: tuple
    m: int
    verdicts: dict = field(default_factory=dict)

    def to_dict(self, lattice=None) -> dict:
        return {
            "version": 1,
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "modulus": list(self.modulus),
            "m": self.m,
            "laws": {
                name: self.verdicts[name].to_dict(lattice)
                for name in LAW_ORDER
                if name in self.verdicts
            },
        }

"""On-disk JSON format for repetition codes.

The layout is deliberately boring: one object with version, parameters, the
node sets as sorted lists, and a free-form meta block recording how the code
was built.  Writing is canonical (sorted keys, two-space indent, trailing
newline) so write -> read -> write is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import CodeFileError
from .frcode import FrCode

FORMAT_VERSION = 1


@dataclass(frozen=True)
class CodeFile:
    """A repetition code plus provenance, as stored on disk."""

    n: int
    theta: int
    rho: int
    nodes: tuple[tuple[int, ...], ...]
    meta: dict[str, Any] = field(default_factory=dict)
    version: int = FORMAT_VERSION

    def to_code(self) -> FrCode:
        return FrCode.from_nodes([set(node) for node in self.nodes], nominal_rho=self.rho)

    @classmethod
    def from_code(cls, code: FrCode, meta: dict[str, Any] | None = None) -> CodeFile:
        return cls(
            n=code.n,
            theta=code.theta,
            rho=code.nominal_rho,
            nodes=tuple(tuple(sorted(node)) for node in code.nodes),
            meta=dict(meta or {}),
        )


def dumps(cf: CodeFile) -> str:
    payload = {
        "version": cf.version,
        "n": cf.n,
        "theta": cf.theta,
        "rho": cf.rho,
        "nodes": [list(node) for node in cf.nodes],
        "meta": cf.meta,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_codefile(path: str | Path, cf: CodeFile) -> None:
    Path(path).write_text(dumps(cf))


def read_codefile(path: str | Path) -> CodeFile:
    """Parse and validate a code file; any defect raises CodeFileError."""
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc}") from exc
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise CodeFileError("top level must be an object")
    for key in ("version", "n", "theta", "rho", "nodes"):
        if key not in payload:
            raise CodeFileError(f"missing required key {key!r}")
    if payload["version"] != FORMAT_VERSION:
        raise CodeFileError(f"unsupported version {payload['version']!r}")
    n, theta, rho = payload["n"], payload["theta"], payload["rho"]
    for name, value in (("n", n), ("theta", theta), ("rho", rho)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise CodeFileError(f"{name} must be a positive integer")
    nodes_raw = payload["nodes"]
    if not isinstance(nodes_raw, list) or len(nodes_raw) != n:
        raise CodeFileError(f"nodes must be a list of exactly n={n} entries")
    nodes: list[tuple[int, ...]] = []
    for idx, entry in enumerate(nodes_raw, start=1):
        if not isinstance(entry, list) or not entry:
            raise CodeFileError(f"node {idx} must be a non-empty list")
        for sym in entry:
            if not isinstance(sym, int) or isinstance(sym, bool) or sym < 1:
                raise CodeFileError(f"node {idx} holds a non-positive symbol id")
        if len(set(entry)) != len(entry):
            raise CodeFileError(f"node {idx} lists a symbol twice")
        nodes.append(tuple(sorted(entry)))
    union = set().union(*(set(node) for node in nodes))
    if len(union) != theta:
        raise CodeFileError(
            f"theta={theta} but the node sets cover {len(union)} distinct symbols"
        )
    meta = payload.get("meta", {})
    if not isinstance(meta, dict):
        raise CodeFileError("meta must be an object")
    return CodeFile(n=n, theta=theta, rho=rho, nodes=tuple(nodes), meta=meta)
